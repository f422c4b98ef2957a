use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, ratio, rational_canonical, rational_sqrt, Field, FieldError, Rational, UPoly};

/// A monogenic number field `Q[x]/(m(x))` with `m` monic and irreducible.
#[derive(Debug, Clone, PartialEq)]
pub struct NumberField {
    symbol: String,
    /// `m(x)` from the constant term up; the last entry is `1`.
    minpoly: Vec<Rational>,
    /// `x^(d + k) mod m(x)` in the power basis, for `k = 0..d-1`.
    reduction: Vec<Vec<Rational>>,
    aliases: Vec<(String, Vec<Rational>)>,
}

/// Builds `Q[x]/(m(x))` for a monic `m` of degree 1 to 4 (coefficients from
/// the constant term up), rejecting reducible polynomials.
pub fn make_number_field(symbol: &str, minpoly: &[Rational]) -> Result<NumberField, FieldError> {
    let degree = minpoly
        .len()
        .checked_sub(1)
        .filter(|d| (1..=4).contains(d))
        .ok_or_else(|| FieldError::InvalidMinpoly("degree must be between 1 and 4".into()))?;
    if !One::is_one(&minpoly[degree]) {
        return Err(FieldError::InvalidMinpoly("minimal polynomial must be monic".into()));
    }
    if let Some(factor) = find_rational_factor(minpoly) {
        return Err(FieldError::ReduciblePolynomial(factor));
    }
    let mut reduction = Vec::with_capacity(degree);
    // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
    let mut current: Vec<Rational> = minpoly[..degree].iter().map(|c| -c).collect();
    for _ in 0..degree {
        reduction.push(current.clone());
        // multiply by x and reduce
        let top = current[degree - 1].clone();
        let mut next = vec![<Rational as Zero>::zero(); degree];
        for i in (1..degree).rev() {
            next[i] = current[i - 1].clone();
        }
        for (i, r) in reduction[0].iter().enumerate() {
            next[i] += &top * r;
        }
        current = next;
    }
    Ok(NumberField { symbol: symbol.to_string(), minpoly: minpoly.to_vec(), reduction, aliases: Vec::new() })
}

impl NumberField {
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    /// Registers a named element (given in the power basis) that the
    /// polynomial parser and [`Field::symbol`] will resolve.
    pub fn with_alias(mut self, name: &str, coords: Vec<Rational>) -> Self {
        assert_eq!(coords.len(), self.degree(), "alias has wrong length");
        self.aliases.push((name.to_string(), coords));
        self
    }

    fn reduce_product(&self, full: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        let mut out: Vec<Rational> = full.iter().take(d).cloned().collect();
        out.resize(d, <Rational as Zero>::zero());
        for (k, c) in full.iter().enumerate().skip(d) {
            if Zero::is_zero(c) {
                continue;
            }
            for (i, r) in self.reduction[k - d].iter().enumerate() {
                out[i] += c * r;
            }
        }
        out
    }
}

/// Searches for a rational root or (degree 4) a rational quadratic factor.
fn find_rational_factor(minpoly: &[Rational]) -> Option<String> {
    let degree = minpoly.len() - 1;
    if degree <= 1 {
        return None;
    }
    // Substituting x = y / D with D the common denominator gives the monic
    // integer polynomial D^deg * m(y / D); factors correspond one to one.
    let den = minpoly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = minpoly
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let scaled = c * Rational::from_integer(num_traits::pow(den.clone(), degree - k));
            scaled.to_integer()
        })
        .collect();
    let eval = |y: &BigInt| ints.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c);
    // Monic integer polynomial: rational roots are integer divisors of the
    // constant term.
    if ints[0].is_zero() {
        return Some("x".into());
    }
    let divisors = divisors(&ints[0]);
    for d in &divisors {
        for cand in [d.clone(), -d.clone()] {
            if eval(&cand).is_zero() {
                let root = Rational::new(cand, den.clone());
                return Some(format!("x - {}", rational_canonical(&root)));
            }
        }
    }
    if degree == 4 {
        // (y^2 + a y + b)(y^2 + c y + e) with b e = c0
        let (c0, c1, c2, c3) = (&ints[0], &ints[1], &ints[2], &ints[3]);
        for b in divisors.iter().flat_map(|d| [d.clone(), -d.clone()]) {
            let e = c0 / &b;
            let found = if b != e {
                // a + c = c3, a e + b c = c1  =>  a (e - b) = c1 - b c3
                let num = c1 - &b * c3;
                let den = &e - &b;
                if (&num % &den).is_zero() {
                    let a = &num / &den;
                    let c = c3 - &a;
                    (&a * &c + &b + &e == *c2).then_some((a, c))
                } else {
                    None
                }
            } else if *c1 == &b * c3 {
                // a, c are the roots of t^2 - c3 t + (c2 - 2b)
                let disc = c3 * c3 - BigInt::from(4) * (c2 - BigInt::from(2) * &b);
                if !disc.is_negative() {
                    let r = num_integer::Roots::sqrt(&disc);
                    if &r * &r == disc && ((c3 + &r) % BigInt::from(2)).is_zero() {
                        let a = (c3 + &r) / BigInt::from(2);
                        let c = c3 - &a;
                        Some((a, c))
                    } else {
                        None
                    }
                } else {
                    None
                }
            } else {
                None
            };
            if let Some((a, _)) = found {
                return Some(format!("quadratic factor y^2 + {a} y + {b} (y = {den} x)"));
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// An element of a [`NumberField`], stored by its coordinates in the power
/// basis `1, x, ..., x^(d-1)`.
#[derive(Clone)]
pub struct NfElem {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl NfElem {
    pub fn new(field: &Arc<NumberField>, mut coords: Vec<Rational>) -> Self {
        let d = field.degree();
        if coords.len() > 2 * d - 1 {
            let m = UPoly::from_coeffs(&(), field.minpoly.clone());
            let (_, r) = UPoly::from_coeffs(&(), coords).div_rem(&m).expect("monic modulus");
            coords = r.coeffs().to_vec();
        } else if coords.len() > d {
            coords = field.reduce_product(coords);
        }
        coords.resize(d, <Rational as Zero>::zero());
        NfElem { field: field.clone(), coords }
    }

    pub fn from_ints(field: &Arc<NumberField>, coords: &[i64]) -> Self {
        Self::new(field, coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn generator(field: &Arc<NumberField>) -> Self {
        let mut coords = vec![<Rational as Zero>::zero(); field.degree().max(2)];
        coords[1] = <Rational as One>::one();
        Self::new(field, coords)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    fn check_same(&self, rhs: &Self) {
        assert!(Arc::ptr_eq(&self.field, &rhs.field) || self.field == rhs.field, "number field mismatch");
    }

    fn as_poly(&self) -> UPoly<Rational> {
        UPoly::from_coeffs(&(), self.coords.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field arithmetic on number field elements.
pub fn elem_arith(a: &NfElem, b: &NfElem, op: ArithOp) -> Result<NfElem, FieldError> {
    if !(Arc::ptr_eq(&a.field, &b.field) || a.field == b.field) {
        return Err(FieldError::FieldMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b).ok_or(FieldError::DivisionByZero)?,
    })
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field)
    }
}

impl Eq for NfElem {}

impl Hash for NfElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NfElem({self})")
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = &self.field.symbol;
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coords.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => sym.clone(),
                _ => format!("{sym}^{k}"),
            };
            let coeff = rational_canonical(c);
            parts.push(match (mono.is_empty(), coeff.as_str()) {
                (true, _) => coeff,
                (false, "1") => mono,
                (false, "-1") => format!("-{mono}"),
                (false, _) => format!("{coeff}*{mono}"),
            });
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        f.write_str(&out)
    }
}

impl Field for NfElem {
    type Ctx = Arc<NumberField>;

    fn ctx(&self) -> Arc<NumberField> {
        self.field.clone()
    }

    fn zero(ctx: &Arc<NumberField>) -> Self {
        Self::new(ctx, Vec::new())
    }

    fn one(ctx: &Arc<NumberField>) -> Self {
        Self::new(ctx, vec![<Rational as One>::one()])
    }

    fn from_rational(ctx: &Arc<NumberField>, q: &Rational) -> Self {
        Self::new(ctx, vec![q.clone()])
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn is_one(&self) -> bool {
        One::is_one(&self.coords[0]) && self.coords[1..].iter().all(Zero::is_zero)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        NfElem { field: self.field.clone(), coords }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        NfElem { field: self.field.clone(), coords }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check_same(rhs);
        let d = self.field.degree();
        let mut full = vec![<Rational as Zero>::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !Zero::is_zero(b) {
                    full[i + j] += a * b;
                }
            }
        }
        NfElem { field: self.field.clone(), coords: self.field.reduce_product(full) }
    }

    fn neg(&self) -> Self {
        NfElem { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }

    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        if self.coords[1..].iter().all(Zero::is_zero) {
            return Some(Self::from_rational(&self.field, &self.coords[0].recip()));
        }
        // s * a + t * m = 1 in Q[x] since m is irreducible
        let m = UPoly::from_coeffs(&(), self.field.minpoly.clone());
        let (g, s, _) = self.as_poly().ext_gcd(&m);
        debug_assert!(g.degree() == Some(0));
        Some(Self::new(&self.field, s.coeffs().to_vec()))
    }

    fn sqrt(&self) -> Option<Self> {
        let d = self.field.degree();
        if self.coords[1..].iter().all(Zero::is_zero) && d != 2 {
            // rational elements; a rational non-square may still be a square
            // in a quadratic field, which is handled below
            return rational_sqrt(&self.coords[0]).map(|r| Self::from_rational(&self.field, &r));
        }
        if d != 2 {
            return None;
        }
        quadratic_sqrt(self)
    }

    fn symbol(ctx: &Arc<NumberField>, name: &str) -> Option<Self> {
        if name == ctx.symbol {
            return Some(Self::generator(ctx));
        }
        ctx.aliases.iter().find(|(n, _)| n == name).map(|(_, c)| Self::new(ctx, c.clone()))
    }

    fn canonical(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(rational_canonical).collect();
        format!("[{}]", parts.join(","))
    }

    fn as_rational(&self) -> Option<Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }
}

/// Square root in a quadratic field `Q[x]/(x^2 + b x + c)`.
///
/// With `x = (-b + r) / 2` and `r^2 = D = b^2 - 4c`, the element becomes
/// `alpha + beta r`, and `(p + q r)^2 = alpha + beta r` reduces to rational
/// square tests on the norm and on `(alpha +- sqrt(norm)) / 2`.
fn quadratic_sqrt(a: &NfElem) -> Option<NfElem> {
    let field = &a.field;
    let b = &field.minpoly[1];
    let c = &field.minpoly[0];
    let disc = b * b - rat(4) * c;
    let half = ratio(1, 2);
    // a0 + a1 x = a0 + a1 (-b + r)/2
    let alpha = &a.coords[0] - &a.coords[1] * b * &half;
    let beta = &a.coords[1] * &half;
    // r = 2x + b in the power basis
    let r_elem = NfElem::new(field, vec![b.clone(), rat(2)]);
    let build = |p: Rational, q: Rational| {
        NfElem::from_rational(field, &p).add(&NfElem::from_rational(field, &q).mul(&r_elem))
    };
    if Zero::is_zero(&beta) {
        if let Some(p) = rational_sqrt(&alpha) {
            return Some(build(p, <Rational as Zero>::zero()));
        }
        return rational_sqrt(&(&alpha / &disc)).map(|q| build(<Rational as Zero>::zero(), q));
    }
    let norm = &alpha * &alpha - &disc * &beta * &beta;
    let n = rational_sqrt(&norm)?;
    for cand in [(&alpha + &n) * &half, (&alpha - &n) * &half] {
        if let Some(p) = rational_sqrt(&cand) {
            if Zero::is_zero(&p) {
                continue;
            }
            let q = &beta / (rat(2) * &p);
            let root = build(p, q);
            if root.mul(&root) == *a {
                return Some(root);
            }
        }
    }
    None
}

fn standard(cell: &'static OnceLock<Arc<NumberField>>, build: fn() -> NumberField) -> Arc<NumberField> {
    cell.get_or_init(|| Arc::new(build())).clone()
}

/// `Q(t)` with `t^2 = t + 1` (the golden ratio).
pub fn golden_field() -> Arc<NumberField> {
    static CELL: OnceLock<Arc<NumberField>> = OnceLock::new();
    standard(&CELL, || {
        make_number_field("t", &[rat(-1), rat(-1), rat(1)]).expect("x^2 - x - 1 is irreducible")
    })
}

/// `Q(w)` with `w^2 + w + 1 = 0` (a primitive cube root of unity).
pub fn eisenstein_field() -> Arc<NumberField> {
    static CELL: OnceLock<Arc<NumberField>> = OnceLock::new();
    standard(&CELL, || make_number_field("w", &[rat(1), rat(1), rat(1)]).expect("x^2 + x + 1 is irreducible"))
}

/// `Q(s)` with `s^4 = 4 s^2 + 1`, so that `s^2 = 2t + 1` for the golden
/// ratio `t = (s^2 - 1) / 2`. The alias `t` resolves to that element.
pub fn golden_sqrt_field() -> Arc<NumberField> {
    static CELL: OnceLock<Arc<NumberField>> = OnceLock::new();
    standard(&CELL, || {
        make_number_field("s", &[rat(-1), rat(0), rat(-4), rat(0), rat(1)])
            .expect("x^4 - 4x^2 - 1 is irreducible")
            .with_alias("t", vec![ratio(-1, 2), rat(0), ratio(1, 2), rat(0)])
    })
}
