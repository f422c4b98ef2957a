//! Exact scalar arithmetic.
//!
//! Every computation in this crate runs over a [`Field`]: the rationals,
//! a monogenic number field `Q[x]/(m(x))` ([`NfElem`]), or a univariate
//! rational-function field over one of those ([`RatFun`]). Nothing here ever
//! touches floating point.

mod numfield;
mod ratfun;
mod upoly;

pub use numfield::{
    eisenstein_field, elem_arith, golden_field, golden_sqrt_field, make_number_field, ArithOp, NfElem,
    NumberField,
};
pub use ratfun::{ratfun_arith, RatFun, RatFunCtx};
pub use upoly::UPoly;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("minimal polynomial is reducible over Q: {0}")]
    ReduciblePolynomial(String),
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinpoly(String),
}

/// A commutative field of characteristic zero with exact arithmetic.
///
/// Elements of number fields need to know which field they live in, so the
/// constants `0` and `1` are produced from a context value rather than out of
/// thin air. For `Rational` the context is `()`.
///
/// The binary operations panic when the operands come from different
/// contexts; the checked entry points ([`elem_arith`], [`ratfun_arith`])
/// report that as [`FieldError::FieldMismatch`] instead.
pub trait Field: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_rational(ctx: &Self::Ctx, q: &Rational) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// A square root inside the field, if one exists and the field knows how
    /// to find it.
    fn sqrt(&self) -> Option<Self>;

    /// Resolves a named constant (a generator symbol such as `t`, or a
    /// registered alias) in this context.
    fn symbol(ctx: &Self::Ctx, name: &str) -> Option<Self>;

    /// Canonical machine-readable rendering used in reports and fixtures.
    fn canonical(&self) -> String;

    /// Returns `Some(q)` when the element is a rational number.
    fn as_rational(&self) -> Option<Rational>;

    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_rational(ctx, &Rational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        self.sub(&Self::one(&self.ctx())).is_zero()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn bigint_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = num_integer::Roots::sqrt(n);
    (&r * &r == *n).then_some(r)
}

/// Square root of a rational number, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    let n = bigint_sqrt_exact(q.numer())?;
    let d = bigint_sqrt_exact(q.denom())?;
    Some(Rational::new(n, d))
}

pub(crate) fn rational_canonical(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Field for Rational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero(_: &()) -> Self {
        <Rational as Zero>::zero()
    }

    fn one(_: &()) -> Self {
        <Rational as One>::one()
    }

    fn from_rational(_: &(), q: &Rational) -> Self {
        q.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }

    fn symbol(_: &(), _: &str) -> Option<Self> {
        None
    }

    fn canonical(&self) -> String {
        rational_canonical(self)
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}
