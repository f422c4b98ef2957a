//! Sparse multivariate polynomials over any [`Field`].
//!
//! Terms are stored in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order, so iteration order, printing, and the square-root
//! recursion are all deterministic.

mod algo;
mod parse;

pub use algo::{
    exact_square_root, hessian_at, restrict_to_line, square_root_up_to_scalar, sylvester_resultant,
    ternary_conic_classify, ternary_cubic_is_smooth, ConicType,
};
pub use parse::parse_poly;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::exactfield::{Field, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("chart coordinate {0} vanishes at the point")]
    ChartMismatch(usize),
    #[error("base and direction points are proportional")]
    DegenerateLine,
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

/// Exponent vector with graded lexicographic ordering: higher total degree
/// first, ties broken by comparing exponents from the first variable on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    /// `self / rhs` when `rhs` divides `self`.
    pub fn div(&self, rhs: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&rhs.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names and coefficient field of a polynomial ring.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    vars: Vec<String>,
    ctx: F::Ctx,
}

impl<F: Field> PolyRing<F> {
    pub fn new(ctx: &F::Ctx, vars: &[&str]) -> Arc<Self> {
        Arc::new(PolyRing { vars: vars.iter().map(|s| s.to_string()).collect(), ctx: ctx.clone() })
    }

    /// Ring in `x0, ..., x{n-1}`.
    pub fn indexed(ctx: &F::Ctx, prefix: &str, n: usize) -> Arc<Self> {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::new(ctx, &refs)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

fn same_ring<F: Field>(a: &Arc<PolyRing<F>>, b: &Arc<PolyRing<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Clone)]
pub struct MPoly<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> PartialEq for MPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl<F: Field> Eq for MPoly<F> {}

impl<F: Field> Hash for MPoly<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl<F: Field> MPoly<F> {
    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        MPoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<PolyRing<F>>, c: F) -> Self {
        Self::term(ring, Monomial::one(ring.arity()), c)
    }

    pub fn from_int(ring: &Arc<PolyRing<F>>, n: i64) -> Self {
        Self::constant(ring, F::from_int(&ring.ctx, n))
    }

    pub fn one(ring: &Arc<PolyRing<F>>) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing<F>>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.arity(), i), F::one(&ring.ctx))
    }

    pub fn vars(ring: &Arc<PolyRing<F>>) -> Vec<Self> {
        (0..ring.arity()).map(|i| Self::var(ring, i)).collect()
    }

    pub fn term(ring: &Arc<PolyRing<F>>, m: Monomial, c: F) -> Self {
        assert_eq!(m.0.len(), ring.arity(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { ring: ring.clone(), terms }
    }

    pub fn from_terms(ring: &Arc<PolyRing<F>>, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(ring: &Arc<PolyRing<F>>, coeffs: &[F]) -> Self {
        Self::from_terms(
            ring,
            coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(ring.arity(), i), c.clone())),
        )
    }

    pub fn parse(ring: &Arc<PolyRing<F>>, text: &str) -> Result<Self, PolyError> {
        parse_poly(ring, text)
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ring.ctx
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(|| F::zero(&self.ring.ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        self.is_constant().then(|| self.coeff(&Monomial::one(self.ring.arity())))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading term under graded lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> F {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(|| F::zero(&self.ring.ctx))
    }

    fn add_term(&mut self, m: Monomial, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, rhs: &Self) {
        assert!(same_ring(&self.ring, &rhs.ring), "polynomial ring mismatch");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_ring(rhs);
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.mul(c))).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn product<'a>(ring: &Arc<PolyRing<F>>, factors: impl IntoIterator<Item = &'a Self>) -> Self {
        factors.into_iter().fold(Self::one(ring), |acc, f| acc.mul(f))
    }

    /// Scales so that the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Exact quotient `self / d` by multivariate division, `None` when the
    /// remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_ring(d);
        let (lm, lc) = d.leading_term()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm)?;
            let qc = c.mul(&lc_inv);
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }

    /// Whether `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &Self) -> bool {
        self.div_exact(d).is_some()
    }

    /// Evaluates at a full point.
    pub fn eval(&self, point: &[F]) -> Result<F, PolyError> {
        if point.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch { expected: self.ring.arity(), got: point.len() });
        }
        let ctx = &self.ring.ctx;
        let mut acc = F::zero(ctx);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&x.pow(e));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Composes with `x_i -> images[i]`; images share a common target ring.
    pub fn substitute(&self, images: &[MPoly<F>]) -> Result<MPoly<F>, PolyError> {
        if images.len() != self.ring.arity() {
            return Err(PolyError::ArityMismatch { expected: self.ring.arity(), got: images.len() });
        }
        let Some(target) = images.first().map(|p| p.ring.clone()) else {
            return Ok(self.clone());
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(PolyError::RingMismatch);
        }
        // powers[i][k] = images[i]^k, built lazily up to the largest exponent used
        let mut powers: Vec<Vec<MPoly<F>>> = vec![vec![MPoly::one(&target)]; images.len()];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("nonempty").mul(&images[i]);
                    powers[i].push(next);
                }
            }
        }
        let mut out = MPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[i][e as usize]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Substitutes a constant for one variable, staying in the same ring.
    pub fn specialize(&self, var: usize, value: &F) -> MPoly<F> {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[var], 0);
            out.add_term(Monomial(e), &c.mul(&value.pow(k)));
        }
        out
    }

    pub fn partial_derivative(&self, var: usize) -> Result<MPoly<F>, PolyError> {
        if var >= self.ring.arity() {
            return Err(PolyError::VariableOutOfRange(var));
        }
        let ctx = &self.ring.ctx;
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[var] -= 1;
            out.add_term(Monomial(exps), &c.mul(&F::from_int(ctx, i64::from(e))));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<MPoly<F>> {
        (0..self.ring.arity()).map(|i| self.partial_derivative(i).expect("index in range")).collect()
    }

    /// Coefficients with respect to `var`, as polynomials in the same ring
    /// not involving `var`; index `k` holds the coefficient of `var^k`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly<F>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.ring); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[var], 0) as usize;
            out[k].add_term(Monomial(e), c);
        }
        out
    }

    /// Univariate view when only `var` occurs.
    pub fn to_upoly(&self, var: usize) -> Option<UPoly<F>> {
        let cs = self.coeffs_in(var);
        let coeffs = cs.iter().map(MPoly::as_constant).collect::<Option<Vec<F>>>()?;
        Some(UPoly::from_coeffs(&self.ring.ctx, coeffs))
    }

    pub fn from_upoly(ring: &Arc<PolyRing<F>>, var: usize, u: &UPoly<F>) -> Self {
        Self::from_terms(
            ring,
            u.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; ring.arity()];
                e[var] = k as u32;
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Moves the polynomial into another ring of the same arity, converting
    /// coefficients with `f`.
    pub fn map_coeffs<G: Field>(&self, ring: &Arc<PolyRing<G>>, f: impl Fn(&F) -> G) -> MPoly<G> {
        assert_eq!(ring.arity(), self.ring.arity(), "arity");
        MPoly::from_terms(ring, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Relabels variables into a ring of possibly different arity:
    /// variable `i` becomes variable `map[i]` of `ring`.
    pub fn embed(&self, ring: &Arc<PolyRing<F>>, map: &[usize]) -> MPoly<F> {
        assert_eq!(map.len(), self.ring.arity(), "arity");
        MPoly::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; ring.arity()];
                for (i, &k) in m.0.iter().enumerate() {
                    e[map[i]] += k;
                }
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Machine-readable rendering: terms in descending graded lex order,
    /// coefficients in the field's canonical form.
    pub fn canonical(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mono = self.fmt_monomial(m);
                if mono.is_empty() {
                    c.canonical()
                } else {
                    format!("{}*{}", c.canonical(), mono)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn fmt_monomial(&self, m: &Monomial) -> String {
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(
                |(i, &e)| {
                    if e == 1 {
                        self.ring.vars[i].clone()
                    } else {
                        format!("{}^{}", self.ring.vars[i], e)
                    }
                },
            )
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Checked ring arithmetic.
pub fn poly_arith<F: Field>(p: &MPoly<F>, q: &MPoly<F>, op: PolyOp) -> Result<MPoly<F>, PolyError> {
    if !same_ring(&p.ring, &q.ring) {
        return Err(PolyError::RingMismatch);
    }
    Ok(match op {
        PolyOp::Add => p.add(q),
        PolyOp::Sub => p.sub(q),
        PolyOp::Mul => p.mul(q),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl<F: Field> fmt::Debug for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<F: Field> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = self.fmt_monomial(m);
            let cs = c.to_string();
            let compound = cs.contains(' ');
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{}", if compound { format!("({body})") } else { body })?;
            } else if body == "1" {
                write!(f, "{mono}")?;
            } else if compound {
                write!(f, "({body})*{mono}")?;
            } else {
                write!(f, "{body}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{golden_field, NfElem, Rational};

    fn qring(n: usize) -> Arc<PolyRing<Rational>> {
        PolyRing::indexed(&(), "x", n)
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![2, 0, 0]);
        let b = Monomial::new(vec![1, 1, 1]);
        let c = Monomial::new(vec![0, 3, 0]);
        assert!(b > a); // degree 3 > 2
        assert!(b > c); // same degree, x0 exponent larger
        assert!(Monomial::new(vec![1, 0, 0]) > Monomial::new(vec![0, 1, 0]));
    }

    #[test]
    fn arithmetic_examples() {
        let r = qring(6);
        let sigma1 = MPoly::vars(&r).iter().fold(MPoly::zero(&r), |a, v| a.add(v));
        assert!(sigma1.mul(&MPoly::zero(&r)).is_zero());

        let f = golden_field();
        let gr = PolyRing::<NfElem>::indexed(&f, "x", 3);
        let lhs = MPoly::parse(&gr, "(t*x0 - x1)*(t*x0 + x1)").unwrap();
        let rhs = MPoly::parse(&gr, "(t + 1)*x0^2 - x1^2").unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_and_derivatives() {
        let r = qring(6);
        let x = MPoly::vars(&r);
        let sigma1 = x.iter().fold(MPoly::zero(&r), |a, v| a.add(v));
        let mut images = x.clone();
        images[5] = x[..5].iter().fold(MPoly::zero(&r), |a, v| a.sub(v));
        assert!(sigma1.substitute(&images).unwrap().is_zero());
        assert_eq!(sigma1.substitute(&x).unwrap(), sigma1);
        for i in 0..6 {
            assert_eq!(sigma1.partial_derivative(i).unwrap(), MPoly::one(&r));
        }
        let p = MPoly::parse(&r, "x0^2*x1").unwrap();
        assert_eq!(p.partial_derivative(0).unwrap(), MPoly::parse(&r, "2*x0*x1").unwrap());
        assert_eq!(p.partial_derivative(6), Err(PolyError::VariableOutOfRange(6)));
    }

    #[test]
    fn exact_division() {
        let r = qring(2);
        let a = MPoly::parse(&r, "x0^2 - x1^2").unwrap();
        let b = MPoly::parse(&r, "x0 + x1").unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), MPoly::parse(&r, "x0 - x1").unwrap());
        assert!(a.div_exact(&MPoly::parse(&r, "x0 + 2*x1").unwrap()).is_none());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = MPoly::var(&qring(2), 0);
        let b = MPoly::var(&qring(3), 0);
        assert_eq!(poly_arith(&a, &b, PolyOp::Add), Err(PolyError::RingMismatch));
    }

    #[test]
    fn display_and_canonical() {
        let f = golden_field();
        let gr = PolyRing::<NfElem>::indexed(&f, "x", 2);
        let p = MPoly::parse(&gr, "(t - 2)*x0*x1 - x1^2 + 3").unwrap();
        assert_eq!(p.to_string(), "(-2 + t)*x0*x1 - x1^2 + 3");
        assert_eq!(p.canonical(), "[-2,1]*x0*x1 + [-1,0]*x1^2 + [3,0]");
    }
}
