use serde::{Deserialize, Serialize};

use crate::exactfield::{Field, Rational};
use crate::groups::Perm;

use super::{ExactMatrix, LatticeError};

/// Pairing matrix of a list of labelled divisor classes.
///
/// Every instance is symmetric with `-2` on the diagonal; the constructor
/// refuses anything else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    labels: Vec<String>,
    matrix: ExactMatrix<Rational>,
}

/// On-disk form of a Gram matrix: `{"labels": [...], "rows": [[int]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramFixture {
    pub labels: Vec<String>,
    pub rows: Vec<Vec<i64>>,
}

impl GramMatrix {
    pub fn new(labels: Vec<String>, matrix: ExactMatrix<Rational>) -> Result<Self, LatticeError> {
        if matrix.rows() != labels.len() || matrix.cols() != labels.len() {
            return Err(LatticeError::DimensionMismatch(format!(
                "{} labels for a {}x{} matrix",
                labels.len(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !matrix.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        let minus_two = Rational::from_int(&(), -2);
        for i in 0..labels.len() {
            if *matrix.get(i, i) != minus_two {
                return Err(LatticeError::BadDiagonal { index: i, value: matrix.get(i, i).to_string() });
            }
        }
        Ok(GramMatrix { labels, matrix })
    }

    pub fn from_int_rows(labels: Vec<String>, rows: &[Vec<i64>]) -> Result<Self, LatticeError> {
        Self::new(labels, ExactMatrix::from_i64_rows(rows)?)
    }

    pub fn from_fixture(fx: &GramFixture) -> Result<Self, LatticeError> {
        Self::from_int_rows(fx.labels.clone(), &fx.rows)
    }

    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        let fx: GramFixture = serde_json::from_str(text).map_err(|e| LatticeError::Fixture(e.to_string()))?;
        Self::from_fixture(&fx)
    }

    /// Integer view of the entries; `None` if some entry is not an integer.
    pub fn to_fixture(&self) -> Option<GramFixture> {
        let rows = (0..self.len())
            .map(|i| {
                (0..self.len())
                    .map(|j| {
                        let q = self.matrix.get(i, j);
                        q.is_integer().then(|| num_traits::ToPrimitive::to_i64(q.numer()))?
                    })
                    .collect::<Option<Vec<i64>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Some(GramFixture { labels: self.labels.clone(), rows })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &ExactMatrix<Rational> {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.matrix.get(i, j)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Principal submatrix on the given class indices.
    pub fn submatrix(&self, idx: &[usize]) -> Result<GramMatrix, LatticeError> {
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let rows =
            idx.iter().map(|&i| idx.iter().map(|&j| self.matrix.get(i, j).clone()).collect()).collect();
        GramMatrix::new(labels, ExactMatrix::from_rows(&(), rows)?)
    }

    /// Whether the permutation `p` of the classes preserves the pairing.
    pub fn preserved_by(&self, p: &Perm) -> bool {
        let n = self.len();
        p.degree() == n
            && (0..n)
                .all(|i| (0..n).all(|j| self.matrix.get(p.apply(i), p.apply(j)) == self.matrix.get(i, j)))
    }
}

/// Pairing matrix of orbit sums: entry `(a, b)` is the sum of `g[i][j]` over
/// `i` in orbit `a` and `j` in orbit `b`.
pub fn orbit_sum_gram(g: &GramMatrix, orbits: &[Vec<usize>]) -> Result<ExactMatrix<Rational>, LatticeError> {
    let mut seen = vec![false; g.len()];
    for orbit in orbits {
        if orbit.is_empty() {
            return Err(LatticeError::InvalidPartition("empty block".into()));
        }
        for &i in orbit {
            if i >= g.len() {
                return Err(LatticeError::InvalidPartition(format!("index {i} out of range")));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(LatticeError::InvalidPartition(format!("index {i} appears twice")));
            }
        }
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(LatticeError::InvalidPartition(format!("index {i} is not covered")));
    }
    let k = orbits.len();
    let mut out = ExactMatrix::zeros(&(), k, k);
    for (a, oa) in orbits.iter().enumerate() {
        for (b, ob) in orbits.iter().enumerate() {
            let mut acc = Rational::from_int(&(), 0);
            for &i in oa {
                for &j in ob {
                    acc += g.entry(i, j);
                }
            }
            out.set(a, b, acc);
        }
    }
    Ok(out)
}

/// Dimension of the `G`-invariants of `V / K`, where `V` is the permutation
/// module on the classes and `K` the kernel of the pairing.
///
/// `group` must list every element of the group (not just generators). The
/// result is `(1/|G|) * sum_g (fix(g) - tr(g | K))`, with the trace taken in
/// the echelon basis of `K`.
pub fn invariant_dimension_via_trace(gram: &GramMatrix, group: &[Perm]) -> Result<usize, LatticeError> {
    if group.is_empty() {
        return Err(LatticeError::DimensionMismatch("empty group".into()));
    }
    for (index, p) in group.iter().enumerate() {
        if !gram.preserved_by(p) {
            return Err(LatticeError::ActionNotGramPreserving { index });
        }
    }
    let kernel = gram.matrix().kernel_basis();
    let free = gram.matrix().free_columns();
    let mut total = Rational::from_int(&(), 0);
    for p in group {
        let fixed = (0..gram.len()).filter(|&i| p.apply(i) == i).count();
        total += Rational::from_int(&(), fixed as i64);
        // (p.v)[p(i)] = v[i], so the free_b coordinate of p.k_b is k_b[p^-1(free_b)]
        let inv = p.inverse();
        for (b, k) in kernel.iter().enumerate() {
            total -= &k[inv.apply(free[b])];
        }
    }
    let avg = total / Rational::from_int(&(), group.len() as i64);
    if !avg.is_integer() {
        return Err(LatticeError::DimensionMismatch(format!("trace average {avg} is not an integer")));
    }
    num_traits::ToPrimitive::to_usize(avg.numer())
        .ok_or_else(|| LatticeError::DimensionMismatch(format!("negative trace average {avg}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("c{i}")).collect()
    }

    // pentagon of -2 curves: adjacent classes pair to 1
    fn cycle_gram(n: usize) -> GramMatrix {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            -2
                        } else if (i + 1) % n == j || (j + 1) % n == i {
                            1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        GramMatrix::from_int_rows(labels(n), &rows).unwrap()
    }

    #[test]
    fn constructor_checks() {
        assert_eq!(
            GramMatrix::from_int_rows(labels(2), &[vec![-2, 1], vec![0, -2]]).unwrap_err(),
            LatticeError::NotSymmetric
        );
        assert!(matches!(
            GramMatrix::from_int_rows(labels(2), &[vec![-2, 1], vec![1, 2]]),
            Err(LatticeError::BadDiagonal { index: 1, .. })
        ));
    }

    #[test]
    fn orbit_sums() {
        let g = cycle_gram(6);
        let singletons: Vec<Vec<usize>> = (0..6).map(|i| vec![i]).collect();
        assert_eq!(&orbit_sum_gram(&g, &singletons).unwrap(), g.matrix());
        let all = orbit_sum_gram(&g, &[(0..6).collect()]).unwrap();
        // each row sums to -2 + 1 + 1 = 0
        assert!(all.get(0, 0).is_zero());
        assert!(matches!(
            orbit_sum_gram(&g, &[vec![0, 1, 2], vec![2, 3, 4, 5]]),
            Err(LatticeError::InvalidPartition(_))
        ));
        assert!(matches!(orbit_sum_gram(&g, &[vec![0, 1, 2]]), Err(LatticeError::InvalidPartition(_))));
    }

    #[test]
    fn trace_average_matches_orbit_sums() {
        // affine A5 cycle: rank 5 of 6, kernel spanned by (1,...,1)
        let g = cycle_gram(6);
        assert_eq!(g.rank(), 5);
        let rot = Perm::new(vec![1, 2, 3, 4, 5, 0]).unwrap();
        let group: Vec<Perm> = (0..6).map(|k| rot.pow(k)).collect();
        // invariants of V are 1-dim (all-ones), which is the kernel, so V/K has none
        assert_eq!(invariant_dimension_via_trace(&g, &group).unwrap(), 0);
        let trivial = vec![Perm::identity(6)];
        assert_eq!(invariant_dimension_via_trace(&g, &trivial).unwrap(), 5);
        let bad = vec![Perm::new(vec![1, 0, 2, 3, 4, 5]).unwrap()];
        assert_eq!(
            invariant_dimension_via_trace(&g, &bad).unwrap_err(),
            LatticeError::ActionNotGramPreserving { index: 0 }
        );
    }

    #[test]
    fn fixture_round_trip() {
        let g = cycle_gram(4);
        let fx = g.to_fixture().unwrap();
        let text = serde_json::to_string(&fx).unwrap();
        assert_eq!(GramMatrix::from_json(&text).unwrap(), g);
        assert!(matches!(GramMatrix::from_json("{"), Err(LatticeError::Fixture(_))));
    }
}
