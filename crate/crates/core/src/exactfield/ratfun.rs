use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{ArithOp, Field, FieldError, Rational, UPoly};

/// Context of a rational-function field `K(var)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFunCtx<F: Field> {
    pub base: F::Ctx,
    pub var: Arc<str>,
}

impl<F: Field> RatFunCtx<F> {
    pub fn new(base: &F::Ctx, var: &str) -> Self {
        RatFunCtx { base: base.clone(), var: Arc::from(var) }
    }
}

/// An element `num / den` of `K(var)`, kept with `gcd(num, den) = 1` and
/// `den` monic.
#[derive(Clone)]
pub struct RatFun<F: Field> {
    ctx: RatFunCtx<F>,
    num: UPoly<F>,
    den: UPoly<F>,
}

impl<F: Field> RatFun<F> {
    /// Builds and normalizes `num / den`.
    pub fn new(ctx: &RatFunCtx<F>, num: UPoly<F>, den: UPoly<F>) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (den, _) = den.div_rem(&g).expect("gcd is nonzero");
        let lc_inv = den.leading_coeff().inv().expect("nonzero denominator");
        Ok(RatFun { ctx: ctx.clone(), num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    pub fn from_poly(ctx: &RatFunCtx<F>, num: UPoly<F>) -> Self {
        RatFun { ctx: ctx.clone(), num, den: UPoly::one(&ctx.base) }
    }

    /// The transcendental itself.
    pub fn var(ctx: &RatFunCtx<F>) -> Self {
        Self::from_poly(ctx, UPoly::x(&ctx.base))
    }

    pub fn constant(ctx: &RatFunCtx<F>, c: F) -> Self {
        Self::from_poly(ctx, UPoly::constant(c))
    }

    pub fn numer(&self) -> &UPoly<F> {
        &self.num
    }

    pub fn denom(&self) -> &UPoly<F> {
        &self.den
    }

    /// Specializes the transcendental to `x`; `None` if the denominator
    /// vanishes there.
    pub fn eval(&self, x: &F) -> Option<F> {
        self.num.eval(x).div(&self.den.eval(x))
    }

    fn check_same(&self, rhs: &Self) {
        assert!(self.ctx == rhs.ctx, "rational function field mismatch");
    }
}

/// Checked arithmetic on rational functions.
pub fn ratfun_arith<F: Field>(f: &RatFun<F>, g: &RatFun<F>, op: ArithOp) -> Result<RatFun<F>, FieldError> {
    if f.ctx != g.ctx {
        return Err(FieldError::FieldMismatch);
    }
    Ok(match op {
        ArithOp::Add => f.add(g),
        ArithOp::Sub => f.sub(g),
        ArithOp::Mul => f.mul(g),
        ArithOp::Div => f.div(g).ok_or(FieldError::DivisionByZero)?,
    })
}

impl<F: Field> PartialEq for RatFun<F> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<F: Field> Eq for RatFun<F> {}

impl<F: Field> Hash for RatFun<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl<F: Field> fmt::Debug for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl<F: Field> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.fmt_with_var(&self.ctx.var);
        if self.den.degree() == Some(0) {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", self.den.fmt_with_var(&self.ctx.var))
        }
    }
}

impl<F: Field> Field for RatFun<F> {
    type Ctx = RatFunCtx<F>;

    fn ctx(&self) -> RatFunCtx<F> {
        self.ctx.clone()
    }

    fn zero(ctx: &RatFunCtx<F>) -> Self {
        Self::from_poly(ctx, UPoly::zero(&ctx.base))
    }

    fn one(ctx: &RatFunCtx<F>) -> Self {
        Self::from_poly(ctx, UPoly::one(&ctx.base))
    }

    fn from_rational(ctx: &RatFunCtx<F>, q: &Rational) -> Self {
        Self::constant(ctx, F::from_rational(&ctx.base, q))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        if self.den == rhs.den {
            return Self::new(&self.ctx, self.num.add(&rhs.num), self.den.clone())
                .expect("nonzero denominator");
        }
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        Self::new(&self.ctx, num, self.den.mul(&rhs.den)).expect("nonzero denominator")
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self::new(&self.ctx, self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominator")
    }

    fn neg(&self) -> Self {
        RatFun { ctx: self.ctx.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::new(&self.ctx, self.den.clone(), self.num.clone()).ok()
    }

    fn sqrt(&self) -> Option<Self> {
        let num = self.num.sqrt()?;
        let den = self.den.sqrt()?;
        Self::new(&self.ctx, num, den).ok()
    }

    fn symbol(ctx: &RatFunCtx<F>, name: &str) -> Option<Self> {
        if name == &*ctx.var {
            return Some(Self::var(ctx));
        }
        F::symbol(&ctx.base, name).map(|c| Self::constant(ctx, c))
    }

    fn canonical(&self) -> String {
        let render = |p: &UPoly<F>| {
            let cs: Vec<String> = p.coeffs().iter().map(F::canonical).collect();
            format!("[{}]", cs.join(","))
        };
        format!("{}/{}", render(&self.num), render(&self.den))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.den.degree() != Some(0) || self.num.degree().unwrap_or(0) != 0 {
            return None;
        }
        self.num.coeff(0).as_rational()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{golden_field, rat, NfElem};

    fn ctx() -> RatFunCtx<Rational> {
        RatFunCtx::new(&(), "l")
    }

    fn poly(cs: &[i64]) -> UPoly<Rational> {
        UPoly::from_coeffs(&(), cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn examples() {
        let c = ctx();
        let l = RatFun::var(&c);
        assert!(l.div(&l).unwrap().is_one());
        // (l^2 - 1)/(l - 1) = l + 1
        let q = RatFun::new(&c, poly(&[-1, 0, 1]), poly(&[-1, 1])).unwrap();
        assert_eq!(q, RatFun::from_poly(&c, poly(&[1, 1])));
        // (1/l) * l^2 = l
        let inv = l.inv().unwrap();
        assert_eq!(inv.mul(&l.mul(&l)), l);
    }

    #[test]
    fn normalization_keeps_monic_denominator() {
        let c = ctx();
        // (2 + 2l)/(4 + 4l) = 1/2
        let q = RatFun::new(&c, poly(&[2, 2]), poly(&[4, 4, 0])).unwrap();
        assert_eq!(q.denom(), &poly(&[1]));
        assert_eq!(q.numer().coeffs(), &[crate::exactfield::ratio(1, 2)]);
        let r = RatFun::new(&c, poly(&[1]), poly(&[0, 3])).unwrap();
        assert_eq!(r.denom(), &poly(&[0, 1]));
        assert_eq!(RatFun::new(&c, poly(&[1]), poly(&[])).unwrap_err(), FieldError::DivisionByZero);
        assert_eq!(
            ratfun_arith(&r, &RatFun::zero(&c), ArithOp::Div).unwrap_err(),
            FieldError::DivisionByZero
        );
    }

    #[test]
    fn over_number_field() {
        let f = golden_field();
        let c = RatFunCtx::<NfElem>::new(&f, "m");
        let m = RatFun::var(&c);
        let t = RatFun::symbol(&c, "t").unwrap();
        let expr = m.mul(&m).sub(&t.mul(&t));
        // (m^2 - t^2) / (m - t) = m + t
        assert_eq!(expr.div(&m.sub(&t)).unwrap(), m.add(&t));
        assert_eq!(expr.eval(&NfElem::generator(&f)), Some(NfElem::zero(&f)));
        let sq = m.add(&t).mul(&m.add(&t));
        assert_eq!(sq.sqrt().map(|r| r.mul(&r)), Some(sq));
    }
}
