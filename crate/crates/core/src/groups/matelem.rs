use std::hash::{Hash, Hasher};

use crate::exactfield::Field;
use crate::lattice::ExactMatrix;
use crate::multipoly::{MPoly, PolyError};

use super::{GroupElem, GroupError};

/// Scales a nonzero vector so that its first nonzero entry is one.
pub fn projective_normalize<F: Field>(v: &[F]) -> Vec<F> {
    match v.iter().find(|c| !c.is_zero()).and_then(F::inv) {
        Some(inv) => v.iter().map(|c| c.mul(&inv)).collect(),
        None => v.to_vec(),
    }
}

/// An invertible square matrix acting on column vectors.
///
/// Products are exact; [`GroupElem::canonical`] gives the projective class
/// representative (first nonzero entry in row-major order equal to one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatElem<F: Field> {
    m: ExactMatrix<F>,
}

impl<F: Field> Hash for MatElem<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.rows().hash(state);
        for i in 0..self.m.rows() {
            for c in self.m.row(i) {
                c.hash(state);
            }
        }
    }
}

impl<F: Field> MatElem<F> {
    pub fn new(m: ExactMatrix<F>) -> Result<Self, GroupError> {
        if m.rows() != m.cols() {
            return Err(GroupError::NotInvertible);
        }
        match m.determinant() {
            Ok(d) if !d.is_zero() => Ok(MatElem { m }),
            _ => Err(GroupError::NotInvertible),
        }
    }

    pub fn from_rows(ctx: &F::Ctx, rows: Vec<Vec<F>>) -> Result<Self, GroupError> {
        let m = ExactMatrix::from_rows(ctx, rows).map_err(|_| GroupError::NotInvertible)?;
        Self::new(m)
    }

    pub fn identity(ctx: &F::Ctx, n: usize) -> Self {
        MatElem { m: ExactMatrix::identity(ctx, n) }
    }

    pub fn matrix(&self) -> &ExactMatrix<F> {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn scale(&self, c: &F) -> Result<Self, GroupError> {
        Self::new(self.m.scale(c))
    }

    /// Whether `self` and `other` agree up to a nonzero scalar.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Whether `self` is a scalar matrix.
    pub fn is_scalar(&self) -> bool {
        self.projectively_equal(&self.identity_like())
    }

    /// `M v` on the first `k` coordinates; further coordinates are kept.
    pub fn apply_point(&self, v: &[F]) -> Vec<F> {
        let k = self.dim();
        let mut out = self.m.mul_vec(&v[..k]);
        out.extend_from_slice(&v[k..]);
        out
    }

    /// `p(M^{-1} x)` on the first `k` variables.
    pub fn act_on_poly(&self, p: &MPoly<F>) -> Result<MPoly<F>, PolyError> {
        let ring = p.ring();
        let k = self.dim();
        if ring.arity() < k {
            return Err(PolyError::ArityMismatch { expected: ring.arity(), got: k });
        }
        let inv = self.inverse();
        let vars = MPoly::vars(ring);
        let images: Vec<MPoly<F>> = (0..ring.arity())
            .map(|j| {
                if j < k {
                    (0..k).fold(MPoly::zero(ring), |acc, c| acc.add(&vars[c].scale(inv.m.get(j, c))))
                } else {
                    vars[j].clone()
                }
            })
            .collect();
        p.substitute(&images)
    }

    /// The inverse transpose, which moves the coefficient vector `v` of a
    /// linear form `v . x` along with the points: `(g.l)(x) = l(g^{-1} x)`.
    pub fn dual(&self) -> Self {
        MatElem { m: self.inverse().m.transpose() }
    }
}

impl<F: Field> GroupElem for MatElem<F> {
    fn compose(&self, rhs: &Self) -> Self {
        MatElem { m: self.m.mul(&rhs.m).expect("square matrices of equal size") }
    }

    fn inverse(&self) -> Self {
        MatElem { m: self.m.inverse().expect("invertible by construction") }
    }

    fn identity_like(&self) -> Self {
        MatElem::identity(self.m.ctx(), self.dim())
    }

    fn canonical(&self) -> Self {
        let n = self.dim();
        let flat: Vec<F> = (0..n).flat_map(|i| self.m.row(i).to_vec()).collect();
        let flat = projective_normalize(&flat);
        MatElem { m: ExactMatrix::new(self.m.ctx(), n, n, flat).expect("same shape") }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Rational;
    use crate::groups::generate_group;
    use crate::multipoly::PolyRing;

    fn q(n: i64) -> Rational {
        Rational::from_int(&(), n)
    }

    fn mat(rows: &[[i64; 3]]) -> MatElem<Rational> {
        MatElem::from_rows(&(), rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn projective_closure() {
        // the cyclic shift and a sign change generate a group of order 12 (A4);
        // adding -I changes nothing projectively
        let r = mat(&[[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        let n = mat(&[[-1, 0, 0], [0, -1, 0], [0, 0, 1]]);
        let minus = mat(&[[-1, 0, 0], [0, -1, 0], [0, 0, -1]]);
        assert_eq!(generate_group(&[r.clone(), n.clone()], 100).unwrap().len(), 12);
        assert_eq!(generate_group(&[r, n, minus.clone()], 100).unwrap().len(), 12);
        assert!(minus.is_scalar());
    }

    #[test]
    fn singular_matrix_rejected() {
        assert_eq!(
            MatElem::from_rows(&(), vec![vec![q(1), q(2)], vec![q(2), q(4)]]).unwrap_err(),
            GroupError::NotInvertible
        );
    }

    #[test]
    fn action_is_compatible_with_points() {
        let g = mat(&[[1, 2, 0], [0, 1, 0], [3, 0, 1]]);
        let r = PolyRing::<Rational>::indexed(&(), "x", 4);
        let p = MPoly::parse(&r, "x0^2*x3 - x1*x2 + 5*x3^3").unwrap();
        let gp = g.act_on_poly(&p).unwrap();
        let pt = vec![q(2), q(-1), q(3), q(7)];
        assert_eq!(gp.eval(&g.apply_point(&pt)).unwrap(), p.eval(&pt).unwrap());
        // planes: (g.v) . (g.x) = v . x
        let v = vec![q(1), q(4), q(-2)];
        let gv = g.dual().apply_point(&v);
        let gx = g.apply_point(&pt[..3]);
        let dot = |a: &[Rational], b: &[Rational]| a.iter().zip(b).map(|(x, y)| x * y).sum::<Rational>();
        assert_eq!(dot(&gv, &gx), dot(&v, &pt[..3]));
    }

    #[test]
    fn normalization() {
        assert_eq!(projective_normalize(&[q(0), q(2), q(4)]), vec![q(0), q(1), q(2)]);
        assert_eq!(projective_normalize(&[q(0), q(0)]), vec![q(0), q(0)]);
    }
}
