//! Exact verification of the finite computations behind two icosahedral
//! Fano threefolds: the Burkhardt quartic and the double solid branched
//! over the Barth sextic.
//!
//! Everything runs over exact number fields; no floating point is used.

pub mod barth;
pub mod burkhardt;
pub mod exactfield;
pub mod groups;
pub mod lattice;
pub mod multipoly;
