use std::sync::Arc;

use crate::exactfield::{Field, UPoly};
use crate::lattice::ExactMatrix;

use super::{MPoly, Monomial, PolyError, PolyRing};

/// Second partials of the dehomogenization `p|_{x_chart = 1}` at `point`,
/// with respect to the remaining variables (in order).
///
/// The point is first rescaled so that its chart coordinate is one.
pub fn hessian_at<F: Field>(p: &MPoly<F>, point: &[F], chart: usize) -> Result<ExactMatrix<F>, PolyError> {
    let n = p.ring().arity();
    if point.len() != n {
        return Err(PolyError::ArityMismatch { expected: n, got: point.len() });
    }
    if chart >= n {
        return Err(PolyError::VariableOutOfRange(chart));
    }
    let inv = point[chart].inv().ok_or(PolyError::ChartMismatch(chart))?;
    let pt: Vec<F> = point.iter().map(|c| c.mul(&inv)).collect();
    let affine = p.specialize(chart, &F::one(p.ctx()));
    let others: Vec<usize> = (0..n).filter(|&i| i != chart).collect();
    let firsts: Vec<MPoly<F>> =
        others.iter().map(|&i| affine.partial_derivative(i)).collect::<Result<_, _>>()?;
    let mut h = ExactMatrix::zeros(p.ctx(), n - 1, n - 1);
    for (a, fa) in firsts.iter().enumerate() {
        for (b, &j) in others.iter().enumerate().skip(a) {
            let v = fa.partial_derivative(j)?.eval(&pt)?;
            h.set(b, a, v.clone());
            h.set(a, b, v);
        }
    }
    Ok(h)
}

/// `p(u*base + t*dir)` as a binary form in the ring `(u, t)`.
pub fn restrict_to_line<F: Field>(p: &MPoly<F>, base: &[F], dir: &[F]) -> Result<MPoly<F>, PolyError> {
    let n = p.ring().arity();
    for v in [base, dir] {
        if v.len() != n {
            return Err(PolyError::ArityMismatch { expected: n, got: v.len() });
        }
    }
    let independent =
        (0..n).any(|i| (i + 1..n).any(|j| !base[i].mul(&dir[j]).sub(&base[j].mul(&dir[i])).is_zero()));
    if !independent {
        return Err(PolyError::DegenerateLine);
    }
    let ring = PolyRing::new(p.ctx(), &["u", "t"]);
    let u = MPoly::var(&ring, 0);
    let t = MPoly::var(&ring, 1);
    let images: Vec<MPoly<F>> = base.iter().zip(dir).map(|(b, d)| u.scale(b).add(&t.scale(d))).collect();
    p.substitute(&images)
}

/// Some `q` with `q^2 = p`, or `None` if there is none.
///
/// The root is built from the top: its leading term is the square root of
/// the leading term of `p`, and each further term is read off the leading
/// term of the current remainder `p - q^2`.
pub fn exact_square_root<F: Field>(p: &MPoly<F>) -> Option<MPoly<F>> {
    let ring = p.ring();
    let Some((lm, lc)) = p.leading_term() else {
        return Some(MPoly::zero(ring));
    };
    if lm.exps().iter().any(|e| e % 2 == 1) {
        return None;
    }
    let top = Monomial::new(lm.exps().iter().map(|e| e / 2).collect());
    let top_c = lc.sqrt()?;
    let two_top_inv = top_c.add(&top_c).inv()?;
    let mut q = MPoly::term(ring, top.clone(), top_c);
    let mut last = top.clone();
    loop {
        let rem = p.sub(&q.mul(&q));
        let Some((rm, rc)) = rem.leading_term() else {
            return Some(q);
        };
        // a genuine square has LT(rem) = 2 * LT(q) * (next term of the root)
        let m = rm.div(&top)?;
        if m >= last {
            return None;
        }
        let c = rc.mul(&two_top_inv);
        q = q.add(&MPoly::term(ring, m.clone(), c));
        last = m;
    }
}

/// Writes `p = c * q^2` with `q` having leading coefficient one.
pub fn square_root_up_to_scalar<F: Field>(p: &MPoly<F>) -> Option<(F, MPoly<F>)> {
    let c = p.leading_coeff();
    let inv = c.inv()?;
    exact_square_root(&p.scale(&inv)).map(|q| (c, q.monic()))
}

fn det_fraction_free<F: Field>(mut m: Vec<Vec<MPoly<F>>>, ring: &Arc<PolyRing<F>>) -> MPoly<F> {
    let n = m.len();
    if n == 0 {
        return MPoly::one(ring);
    }
    let mut prev = MPoly::one(ring);
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return MPoly::zero(ring);
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
            m[i][k] = MPoly::zero(ring);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Resultant of `p` and `q` with respect to `var`: the determinant of their
/// Sylvester matrix, computed by fraction-free elimination over the
/// polynomial ring in the other variables.
pub fn sylvester_resultant<F: Field>(p: &MPoly<F>, q: &MPoly<F>, var: usize) -> Result<MPoly<F>, PolyError> {
    if var >= p.ring().arity() {
        return Err(PolyError::VariableOutOfRange(var));
    }
    if p.ring() != q.ring() && **p.ring() != **q.ring() {
        return Err(PolyError::RingMismatch);
    }
    let ring = p.ring();
    let pc = p.coeffs_in(var);
    let qc = q.coeffs_in(var);
    let (m, n) = (pc.len() - 1, qc.len() - 1);
    let size = m + n;
    let mut rows = vec![vec![MPoly::zero(ring); size]; size];
    for i in 0..n {
        for (k, c) in pc.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in qc.iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    Ok(det_fraction_free(rows, ring))
}

fn upoly_gcd_all<F: Field>(polys: &[UPoly<F>]) -> UPoly<F> {
    let mut it = polys.iter();
    let first = it.next().expect("nonempty").clone();
    it.fold(first, |g, p| g.gcd(p))
}

/// Common zeros of three ternary forms, looked for in the chart `z = 1`
/// and on the line `z = 0`. Returns `true` when there is certainly none.
fn no_common_zero<F: Field>(g: &[MPoly<F>; 3]) -> bool {
    let ctx = g[0].ctx().clone();
    let zero = F::zero(&ctx);
    let one = F::one(&ctx);
    // the point [1:0:0]
    let e0 = [one.clone(), zero.clone(), zero.clone()];
    if g.iter().all(|p| p.eval(&e0).map(|v| v.is_zero()).unwrap_or(true)) {
        return false;
    }
    // the rest of z = 0: points [x:1:0]
    let at_inf: Vec<UPoly<F>> = g
        .iter()
        .map(|p| p.specialize(2, &zero).specialize(1, &one).to_upoly(0).expect("only x remains"))
        .collect();
    let h = upoly_gcd_all(&at_inf);
    if h.is_zero() || h.degree() != Some(0) {
        return false;
    }
    // affine chart z = 1: eliminate y pairwise
    let aff: Vec<MPoly<F>> = g.iter().map(|p| p.specialize(2, &one)).collect();
    let mut res = Vec::new();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let (pa, pb) = (&aff[a], &aff[b]);
        let r = if pa.degree_in(1).unwrap_or(0) == 0 && pb.degree_in(1).unwrap_or(0) == 0 {
            let ua = pa.to_upoly(0).expect("only x remains");
            let ub = pb.to_upoly(0).expect("only x remains");
            ua.gcd(&ub)
        } else {
            match sylvester_resultant(pa, pb, 1) {
                Ok(r) => r.to_upoly(0).expect("y eliminated"),
                Err(_) => return false,
            }
        };
        res.push(r);
    }
    let h = upoly_gcd_all(&res);
    !h.is_zero() && h.degree() == Some(0)
}

const SHEARS: [[[i64; 3]; 3]; 6] = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[1, 0, 0], [1, 1, 0], [2, 3, 1]],
    [[1, 2, 0], [0, 1, 0], [1, -1, 1]],
    [[1, 1, 1], [0, 1, 2], [0, 0, 1]],
    [[2, -1, 3], [1, 1, 0], [0, 5, 1]],
    [[1, 3, -2], [4, 1, 1], [-1, 2, 1]],
];

/// Whether the plane cubic `c = 0` is smooth.
///
/// `true` is a certificate: for some invertible change of coordinates the
/// three partials have no common zero on the line at infinity, and the
/// gcd of their pairwise resultants in the affine chart is a nonzero
/// constant. `false` means no such certificate was found.
pub fn ternary_cubic_is_smooth<F: Field>(c: &MPoly<F>) -> bool {
    let ring = c.ring();
    if ring.arity() != 3 || !c.is_homogeneous() || c.total_degree() != Some(3) {
        return false;
    }
    let ctx = ring.ctx();
    let vars = MPoly::vars(ring);
    for shear in &SHEARS {
        let images: Vec<MPoly<F>> = shear
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&vars)
                    .fold(MPoly::zero(ring), |acc, (&k, v)| acc.add(&v.scale(&F::from_int(ctx, k))))
            })
            .collect();
        let Ok(cs) = c.substitute(&images) else {
            continue;
        };
        let grads = cs.gradient();
        let g = [grads[0].clone(), grads[1].clone(), grads[2].clone()];
        if no_common_zero(&g) {
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicType {
    Irreducible,
    LinePair,
    DoubleLine,
    Zero,
}

/// Classifies a ternary quadratic form by the rank of its symmetric matrix.
pub fn ternary_conic_classify<F: Field>(q: &MPoly<F>) -> Result<ConicType, PolyError> {
    let ring = q.ring();
    if ring.arity() != 3 {
        return Err(PolyError::ArityMismatch { expected: 3, got: ring.arity() });
    }
    let ctx = ring.ctx();
    let half = F::from_int(ctx, 2).inv().expect("characteristic zero");
    let mut m = ExactMatrix::zeros(ctx, 3, 3);
    for i in 0..3 {
        for j in i..3 {
            let mut e = vec![0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(&Monomial::new(e));
            if i == j {
                m.set(i, i, c);
            } else {
                let h = c.mul(&half);
                m.set(i, j, h.clone());
                m.set(j, i, h);
            }
        }
    }
    Ok(match m.rank() {
        3 => ConicType::Irreducible,
        2 => ConicType::LinePair,
        1 => ConicType::DoubleLine,
        _ => ConicType::Zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{golden_field, NfElem, Rational};

    fn qr(vars: &[&str]) -> Arc<PolyRing<Rational>> {
        PolyRing::new(&(), vars)
    }

    fn q(n: i64) -> Rational {
        Rational::from_int(&(), n)
    }

    #[test]
    fn hessian_of_sum_of_squares() {
        let r = qr(&["x", "y", "z", "w"]);
        let p = MPoly::parse(&r, "x^2 + y^2 + z^2").unwrap();
        let h = hessian_at(&p, &[q(0), q(0), q(0), q(1)], 3).unwrap();
        assert_eq!(h, ExactMatrix::identity(&(), 3).scale(&q(2)));
        assert_eq!(hessian_at(&p, &[q(1), q(0), q(0), q(0)], 3).unwrap_err(), PolyError::ChartMismatch(3));
    }

    #[test]
    fn restriction_to_lines() {
        let r = qr(&["x0", "x1", "x2"]);
        let x2 = MPoly::var(&r, 2);
        let l = restrict_to_line(&x2, &[q(1), q(0), q(0)], &[q(0), q(1), q(0)]).unwrap();
        assert!(l.is_zero());
        assert_eq!(
            restrict_to_line(&x2, &[q(1), q(2), q(0)], &[q(2), q(4), q(0)]).unwrap_err(),
            PolyError::DegenerateLine
        );
    }

    #[test]
    fn square_roots() {
        let r = qr(&["x"]);
        let x6 = MPoly::parse(&r, "x^6").unwrap();
        assert_eq!(exact_square_root(&x6).unwrap(), MPoly::parse(&r, "x^3").unwrap());
        let f = golden_field();
        let gr = PolyRing::<NfElem>::new(&f, &["x"]);
        let c = MPoly::parse(&gr, "x^3 + t*x + 1").unwrap();
        let root = exact_square_root(&c.mul(&c)).unwrap();
        assert!(root == c || root == c.neg());
        let g = MPoly::parse(&gr, "-(1 + 2t)*(4x^6 + 4x^4 - 4x^2 + 1)").unwrap();
        assert!(exact_square_root(&g).is_none());
        assert!(square_root_up_to_scalar(&g).is_none());
        let sq = MPoly::parse(&gr, "-3*(x^2 - t)^2").unwrap();
        let (k, root) = square_root_up_to_scalar(&sq).unwrap();
        assert_eq!(k, NfElem::from_ints(&f, &[-3, 0]));
        assert_eq!(root, MPoly::parse(&gr, "x^2 - t").unwrap());
    }

    #[test]
    fn resultant_examples() {
        let r = qr(&["x", "a", "b"]);
        let p = MPoly::parse(&r, "x - a").unwrap();
        let s = MPoly::parse(&r, "x - b").unwrap();
        // standard convention Res(f, g) = prod g(roots of f) for monic f
        assert_eq!(sylvester_resultant(&p, &s, 0).unwrap(), MPoly::parse(&r, "a - b").unwrap());
        assert_eq!(sylvester_resultant(&s, &p, 0).unwrap(), MPoly::parse(&r, "b - a").unwrap());
        let u = MPoly::parse(&r, "x^2 + 1").unwrap();
        let v = MPoly::parse(&r, "x + 1").unwrap();
        assert_eq!(sylvester_resultant(&u, &v, 0).unwrap(), MPoly::from_int(&r, 2));
        // shared factor (x - a)
        let w = MPoly::parse(&r, "(x - a)*(x + 3)").unwrap();
        let z = MPoly::parse(&r, "(x - a)*(x^2 - b)").unwrap();
        assert!(sylvester_resultant(&w, &z, 0).unwrap().is_zero());
    }

    #[test]
    fn cubic_smoothness() {
        let r = qr(&["x", "y", "z"]);
        assert!(ternary_cubic_is_smooth(&MPoly::parse(&r, "x^3 + y^3 + z^3").unwrap()));
        assert!(!ternary_cubic_is_smooth(&MPoly::parse(&r, "x^2*y").unwrap()));
        // nodal cubic y^2 z = x^3 + x^2 z
        assert!(!ternary_cubic_is_smooth(&MPoly::parse(&r, "y^2*z - x^3 - x^2*z").unwrap()));
        // smooth Weierstrass cubic y^2 z = x^3 - x z^2
        assert!(ternary_cubic_is_smooth(&MPoly::parse(&r, "y^2*z - x^3 + x*z^2").unwrap()));
    }

    #[test]
    fn conic_classes() {
        let r = qr(&["x", "y", "z"]);
        let c = |s: &str| ternary_conic_classify(&MPoly::parse(&r, s).unwrap()).unwrap();
        assert_eq!(c("x^2 + y^2 - z^2"), ConicType::Irreducible);
        assert_eq!(c("x*y"), ConicType::LinePair);
        assert_eq!(c("(x + y - z)^2"), ConicType::DoubleLine);
        let f = golden_field();
        let gr = PolyRing::<NfElem>::indexed(&f, "x", 3);
        let conic = MPoly::parse(&gr, "x0^2 + (1 + t^2)*x1^2 - x2^2").unwrap();
        assert_eq!(ternary_conic_classify(&conic).unwrap(), ConicType::Irreducible);
    }
}
