//! The Barth sextic in `P^3` with its icosahedral symmetry, and the double
//! solid `w^2 = -B` branched along it.
//!
//! Coordinates are `x0..x3`; the group `A5` acts on `x0, x1, x2` through the
//! rotation matrices `N`, `R`, `M` and fixes `x3`. The branch sextic is
//! `B = 4 l1 l2 l3 l4 l5 l6 - q3^2` with the linear forms of [`lin_forms`].

mod fixtures;
mod planes;
mod rational;
mod surfaces;

pub use fixtures::{parse_scalar, BarthFixtures, Table1Row, FIXTURE_FILES};
pub use planes::{
    proportionality, restrict_to_theta, verify_plane_classification, verify_plane_restrictions,
    ClassificationReport, RestrictionReport, ThetaRestriction, XiRestriction, CUBIC_1MM,
};
pub use rational::{rationality_checks, RationalityReport};
pub use surfaces::{
    build_solid_surfaces, solid_residue, surface_pair_intersection, surface_permutations, verify_table1,
    verify_table2_and_ranks, SolidSurface, SurfaceFamily, Table1Outcome, Table1Report, Table2Report,
    CUBIC_11M_PLUS, CUBIC_1MM_PLUS,
};

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use crate::burkhardt::NodeReport;
use crate::exactfield::{golden_field, Field, NfElem, NumberField};
use crate::groups::{generate_group, orbit_of, projective_normalize, GroupElem, GroupError, MatElem, Orbit};
use crate::lattice::LatticeError;
use crate::multipoly::{hessian_at, MPoly, PolyError, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BarthError {
    #[error("generator {generator} does not preserve the sextic up to a scalar")]
    NotInvariant { generator: String },
    #[error("plane restriction mismatch: {0}")]
    RestrictionMismatch(String),
    #[error("plane family check failed: {0}")]
    FamilyCheckFailed(String),
    #[error("surface {0} does not lie on the double solid")]
    SurfaceNotOnSolid(String),
    #[error("surface orbit: {0}")]
    SurfaceOrbit(String),
    #[error("table 1 row {row} ({word}): {detail}")]
    Table1Mismatch { row: usize, word: String, detail: String },
    #[error("table 2 entry ({row}, {col}): fixture {expected}, computed {computed}")]
    Table2Mismatch { row: usize, col: usize, expected: i64, computed: i64 },
    #[error("surfaces of opposite sign are not compared")]
    MixedSigns,
    #[error("rationality identity ({0}) fails")]
    IdentityFailed(usize),
    #[error("fixture {name}: {msg}")]
    Fixture { name: String, msg: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub struct BarthModel {
    pub field: Arc<NumberField>,
    /// `x0..x3`.
    pub ring: Arc<PolyRing<NfElem>>,
    /// `x0..x2`, the coordinates on a plane `x3 = v . x`.
    pub plane_ring: Arc<PolyRing<NfElem>>,
    pub sextic: MPoly<NfElem>,
    /// `N`, `R`, `M` in that order.
    pub generators: Vec<(String, MatElem<NfElem>)>,
    /// `Sigma_15`, `Sigma_30`, `Sigma_20`, points in `P^3` normalized so the
    /// first nonzero coordinate is one.
    pub sigma_orbits: Vec<Orbit<Vec<NfElem>>>,
    /// Coefficients `v` of the planes `Xi_v: x3 = v . x`.
    pub xi_planes: Vec<Vec<NfElem>>,
    /// Coefficients `u` of the planes `Theta_u: u . x = 0`.
    pub theta_planes: Vec<Vec<NfElem>>,
}

/// `t x0 - x1, t x1 - x2, t x2 - x0, t x0 + x1, t x1 + x2, t x2 + x0` in
/// `ring`, whose first three variables are `x0, x1, x2` and whose
/// coefficient field knows the symbol `t`.
pub fn lin_forms<F: Field>(ring: &Arc<PolyRing<F>>) -> Vec<MPoly<F>> {
    ["t*x0 - x1", "t*x1 - x2", "t*x2 - x0", "t*x0 + x1", "t*x1 + x2", "t*x2 + x0"]
        .iter()
        .map(|s| MPoly::parse(ring, s).expect("fixed linear form"))
        .collect()
}

pub const SEXTIC: &str =
    "4*(t^2*x0^2 - x1^2)*(t^2*x1^2 - x2^2)*(t^2*x2^2 - x0^2) - (1 + 2*t)*x3^2*(x0^2 + x1^2 + x2^2 - x3^2)^2";

/// The cubic `c` with `B = -4(5t + 3) c^2` on the plane `x3 = x0 + x1 + x2`.
pub const CUBIC_111: &str =
    "(t - 2)*(x0*x1^2 + x1*x2^2 + x2*x0^2) + (t - 3)*x0*x1*x2 - (x0^2*x1 + x1^2*x2 + x2^2*x0)";

pub(crate) fn tau_elem(field: &Arc<NumberField>, a: i64, b: i64) -> NfElem {
    NfElem::from_ints(field, &[a, b])
}

fn matrix(field: &Arc<NumberField>, rows: [[(i64, i64); 3]; 3], half: bool) -> MatElem<NfElem> {
    let scale = if half { NfElem::from_int(field, 2).inv().expect("nonzero") } else { NfElem::one(field) };
    let rows =
        rows.iter().map(|r| r.iter().map(|&(a, b)| tau_elem(field, a, b).mul(&scale)).collect()).collect();
    MatElem::from_rows(field, rows).expect("invertible generator")
}

/// The generators `N`, `R`, `M` of the icosahedral group.
pub fn generators(field: &Arc<NumberField>) -> Vec<(String, MatElem<NfElem>)> {
    let z = (0, 0);
    let one = (1, 0);
    let neg = (-1, 0);
    let t = (0, 1);
    let n = matrix(field, [[neg, z, z], [z, neg, z], [z, z, one]], false);
    let r = matrix(field, [[z, z, one], [one, z, z], [z, one, z]], false);
    // M = 1/2 (t, t-1, 1; t-1, 1, -t; -1, t, t-1)
    let m = matrix(field, [[t, (-1, 1), one], [(-1, 1), one, (0, -1)], [neg, t, (-1, 1)]], true);
    vec![("N".into(), n), ("R".into(), r), ("M".into(), m)]
}

/// Every element of the group generated by `gens`, compared exactly (not
/// projectively), in breadth-first order from the identity.
pub fn exact_group(gens: &[MatElem<NfElem>], bound: usize) -> Result<Vec<MatElem<NfElem>>, GroupError> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let id = first.identity_like();
    let mut seen = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let h = e.compose(g);
            if seen.insert(h.clone()) {
                if out.len() == bound {
                    return Err(GroupError::OrderBoundExceeded(bound));
                }
                out.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(out)
}

pub fn build_barth() -> Result<BarthModel, BarthError> {
    build_barth_with(&BarthFixtures::embedded())
}

pub fn build_barth_with(fx: &BarthFixtures) -> Result<BarthModel, BarthError> {
    let field = golden_field();
    let ring = PolyRing::<NfElem>::indexed(&field, "x", 4);
    let plane_ring = PolyRing::<NfElem>::indexed(&field, "x", 3);
    let sextic = MPoly::parse(&ring, SEXTIC)?;
    let generators = generators(&field);
    let mats: Vec<MatElem<NfElem>> = generators.iter().map(|(_, g)| g.clone()).collect();
    let one = NfElem::one(&field);
    let zero = NfElem::zero(&field);
    let seeds = [
        vec![one.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![one.clone(), zero.clone(), zero, one.clone()],
        vec![one.clone(), one.clone(), one.clone(), one],
    ];
    let sigma_orbits = seeds
        .iter()
        .map(|s| orbit_of(s, &mats, |g, p| g.apply_point(p), |p| projective_normalize(p)))
        .collect();
    Ok(BarthModel {
        xi_planes: fx.xi_planes(&field)?,
        theta_planes: fx.theta_planes(&field)?,
        field,
        ring,
        plane_ring,
        sextic,
        generators,
        sigma_orbits,
    })
}

/// Scalar `c_g` with `g . B = c_g B` for one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceScalar {
    pub generator: String,
    pub scalar: NfElem,
}

impl BarthModel {
    pub fn generator_matrices(&self) -> Vec<MatElem<NfElem>> {
        self.generators.iter().map(|(_, g)| g.clone()).collect()
    }

    pub fn generator_map(&self) -> HashMap<String, MatElem<NfElem>> {
        self.generators.iter().cloned().collect()
    }

    /// The 60 rotations, as exact matrices.
    pub fn group(&self) -> Result<Vec<MatElem<NfElem>>, BarthError> {
        Ok(exact_group(&self.generator_matrices(), 200)?)
    }

    /// Size of the generated group modulo scalars.
    pub fn projective_order(&self) -> Result<usize, BarthError> {
        Ok(generate_group(&self.generator_matrices(), 200)?.len())
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.sigma_orbits.iter().map(Orbit::len).collect()
    }

    pub fn singular_points(&self) -> Vec<Vec<NfElem>> {
        self.sigma_orbits.iter().flat_map(|o| o.members.clone()).collect()
    }

    pub fn distinct_points(&self) -> usize {
        let pts: HashSet<Vec<NfElem>> = self.singular_points().into_iter().collect();
        pts.len()
    }

    pub fn verify_invariance(&self) -> Result<Vec<InvarianceScalar>, BarthError> {
        let (lm, lc) = self.sextic.leading_term().expect("nonzero sextic");
        let lc_inv = lc.inv().expect("nonzero");
        let mut out = Vec::new();
        for (name, g) in &self.generators {
            let moved = g.act_on_poly(&self.sextic)?;
            let c = moved.coeff(lm).mul(&lc_inv);
            if c.is_zero() || moved != self.sextic.scale(&c) {
                return Err(BarthError::NotInvariant { generator: name.clone() });
            }
            out.push(InvarianceScalar { generator: name.clone(), scalar: c });
        }
        Ok(out)
    }

    /// Whether `p` is a node of the sextic: all partials vanish and the
    /// affine Hessian is nondegenerate.
    pub fn is_node(&self, p: &[NfElem]) -> Result<bool, BarthError> {
        for g in self.sextic.gradient() {
            if !g.eval(p)?.is_zero() {
                return Ok(false);
            }
        }
        let chart = p.iter().position(|c| !c.is_zero()).ok_or(PolyError::ChartMismatch(0))?;
        let h = hessian_at(&self.sextic, p, chart)?;
        Ok(!h.determinant()?.is_zero())
    }

    pub fn verify_nodes(&self) -> Result<NodeReport, BarthError> {
        let pts = self.singular_points();
        let mut failures = Vec::new();
        for p in &pts {
            if !self.is_node(p)? {
                failures.push(fmt_point(p));
            }
        }
        Ok(NodeReport { checked: pts.len(), nodes: pts.len() - failures.len(), failures })
    }

    /// Number of distinct lines among `{x3 = 0} ∩ Xi_v` and among
    /// `{x3 = 0} ∩ Theta_u`.
    pub fn line_counts(&self) -> (usize, usize) {
        let count =
            |vs: &[Vec<NfElem>]| vs.iter().map(|v| projective_normalize(v)).collect::<HashSet<_>>().len();
        (count(&self.xi_planes), count(&self.theta_planes))
    }

    /// `B` restricted to `x3 = v . x`, as a ternary sextic in `x0, x1, x2`.
    pub fn restrict_to_xi(&self, v: &[NfElem]) -> Result<MPoly<NfElem>, BarthError> {
        let mut images = MPoly::vars(&self.plane_ring);
        images.push(MPoly::linear(&self.plane_ring, v));
        Ok(self.sextic.substitute(&images)?)
    }
}

pub fn fmt_point(p: &[NfElem]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(" : "))
}

pub fn fmt_vector(v: &[NfElem]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_products() {
        let f = golden_field();
        let g = generators(&f);
        let (n, r, m) = (&g[0].1, &g[1].1, &g[2].1);
        let m3 = m.compose(m).compose(m);
        let expected = matrix(
            &f,
            [[(1, 0), (0, 1), (1, -1)], [(0, 1), (1, -1), (1, 0)], [(-1, 1), (-1, 0), (0, -1)]],
            true,
        );
        assert_eq!(m3, expected);
        let rn = matrix(
            &f,
            [[(0, 0), (0, 0), (1, 0)], [(-1, 0), (0, 0), (0, 0)], [(0, 0), (-1, 0), (0, 0)]],
            false,
        );
        assert_eq!(r.compose(n), rn);
        let m5 = m3.compose(m).compose(m);
        assert_eq!(m5, m.identity_like());
    }

    #[test]
    fn group_has_sixty_rotations() {
        let f = golden_field();
        let gens: Vec<_> = generators(&f).into_iter().map(|(_, g)| g).collect();
        assert_eq!(exact_group(&gens, 200).unwrap().len(), 60);
        assert_eq!(generate_group(&gens, 200).unwrap().len(), 60);
        for g in &gens {
            assert!(g.matrix().determinant().unwrap().is_one());
        }
    }
}
