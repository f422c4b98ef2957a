use std::fmt;

use super::Field;

/// Dense univariate polynomial over a [`Field`], coefficients stored from the
/// constant term upwards with no trailing zeros.
#[derive(Clone, Debug)]
pub struct UPoly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> PartialEq for UPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> Eq for UPoly<F> {}

impl<F: Field> std::hash::Hash for UPoly<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<F: Field> UPoly<F> {
    pub fn from_coeffs(ctx: &F::Ctx, coeffs: Vec<F>) -> Self {
        let mut p = UPoly { ctx: ctx.clone(), coeffs };
        p.trim();
        p
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        UPoly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        Self::from_coeffs(&ctx, vec![c])
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one(ctx))
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![F::zero(&ctx); k];
        coeffs.push(c);
        Self::from_coeffs(&ctx, coeffs)
    }

    /// The polynomial `x`.
    pub fn x(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one(ctx), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Self::from_coeffs(&self.ctx, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Self::from_coeffs(&self.ctx, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(&self.ctx, self.coeffs.iter().map(F::neg).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(&self.ctx, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = vec![F::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(&self.ctx, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ctx);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lc_inv = divisor.leading_coeff().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(&self.ctx); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].mul(&lc_inv);
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    let idx = k - dd + i;
                    rem[idx] = rem[idx].sub(&c.mul(d));
                }
            }
            quot[k - dd] = c;
            rem.pop();
        }
        Some((Self::from_coeffs(&self.ctx, quot), Self::from_coeffs(&self.ctx, rem)))
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff().inv() {
            Some(inv) if !self.is_zero() => self.scale(&inv),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*rhs = g`, `g` monic.
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let ctx = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::one(ctx), Self::zero(ctx));
        let (mut t0, mut t1) = (Self::zero(ctx), Self::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading_coeff().inv() {
            Some(inv) if !r0.is_zero() => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
            _ => (r0, s0, t0),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(&self.ctx), |acc, c| acc.mul(x).add(c))
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&F::from_int(&self.ctx, k as i64)))
            .collect();
        Self::from_coeffs(&self.ctx, coeffs)
    }

    /// Exact square root, solving for coefficients from the top down.
    ///
    /// Returns `None` when the degree is odd, the leading coefficient has no
    /// square root in the field, or the top-down solution does not square
    /// back to `self`.
    pub fn sqrt(&self) -> Option<Self> {
        let Some(deg) = self.degree() else {
            return Some(self.clone());
        };
        if deg % 2 == 1 {
            return None;
        }
        let half = deg / 2;
        let lead = self.leading_coeff().sqrt()?;
        let two_lead_inv = lead.add(&lead).inv()?;
        let mut root = vec![F::zero(&self.ctx); half + 1];
        root[half] = lead;
        // coefficient of x^(half + k) in root^2 determines root[k]
        for k in (0..half).rev() {
            let target = self.coeff(half + k);
            let mut known = F::zero(&self.ctx);
            for i in (k + 1)..=half {
                let j = half + k - i;
                if j > k && j <= half {
                    known = known.add(&root[i].mul(&root[j]));
                }
            }
            root[k] = target.sub(&known).mul(&two_lead_inv);
        }
        let root = Self::from_coeffs(&self.ctx, root);
        (root.mul(&root) == *self).then_some(root)
    }

    pub fn fmt_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            parts.push(if mono.is_empty() {
                format!("({c})")
            } else if c.is_one() {
                mono
            } else {
                format!("({c})*{mono}")
            });
        }
        parts.join(" + ")
    }
}

impl<F: Field> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rational};

    fn p(cs: &[i64]) -> UPoly<Rational> {
        UPoly::from_coeffs(&(), cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn div_rem_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let (q, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 1])), p(&[1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[1, 1])), p(&[1]));
        assert!(p(&[1]).div_rem(&p(&[])).is_none());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[-1, 0, 0, 1]);
        let b = p(&[2, 3, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
        // x^3 - 1 and (x + 1)(x + 2) are coprime
        assert_eq!(g, p(&[1]));
    }

    #[test]
    fn sqrt_roundtrip() {
        let q = p(&[1, -2, 0, 3]);
        assert_eq!(q.mul(&q).sqrt().map(|r| r.monic()), Some(q.monic()));
        assert_eq!(p(&[1, 0, 1]).sqrt(), None);
        assert_eq!(p(&[0, 0, 0, 0, 0, 0, 1]).sqrt(), Some(p(&[0, 0, 0, 1])));
    }

    #[test]
    fn eval_and_derivative() {
        let q = p(&[1, 2, 3]);
        assert_eq!(q.eval(&rat(2)), rat(17));
        assert_eq!(q.derivative(), p(&[2, 6]));
    }
}
