//! The Burkhardt quartic `s1 = s4 = 0` in `P^5`, its 45 nodes and its 40
//! j-planes, with the pairing of plane classes and its invariant ranks.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactfield::{eisenstein_field, Field, NfElem, NumberField};
use crate::groups::{
    alternating_a6, orbit_of, projective_normalize, subgroup_nonstandard_a5, subgroup_standard_a5,
    symmetric_s6, GroupError, Perm,
};
use crate::lattice::{invariant_dimension_via_trace, orbit_sum_gram, ExactMatrix, GramMatrix, LatticeError};
use crate::multipoly::{hessian_at, MPoly, PolyError, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurkhardtError {
    #[error("the two planes are identical")]
    IdenticalPlanes,
    #[error("triples share {0} indices, expected 2")]
    NotCTwo(usize),
    #[error("pairing rule mismatch for {a} and {b}: geometric {geometric}, predicted {predicted}")]
    RuleMismatch { a: String, b: String, geometric: i64, predicted: i64 },
    #[error("group action does not permute the planes")]
    NotAPlanePermutation,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One of the 40 planes `P^{+-}_{i1 i2 i3}`.
#[derive(Debug, Clone)]
pub struct JPlane {
    pub triple: [usize; 3],
    pub sign: Sign,
    /// Coefficient rows of the three defining linear forms.
    pub forms: Vec<Vec<NfElem>>,
}

impl JPlane {
    pub fn new(field: &Arc<NumberField>, triple: [usize; 3], sign: Sign) -> Self {
        let w = NfElem::generator(field);
        let w2 = w.mul(&w);
        let (a, b) = match sign {
            Sign::Plus => (w, w2),
            Sign::Minus => (w2, w),
        };
        let zero = NfElem::zero(field);
        let one = NfElem::one(field);
        let [i1, i2, i3] = triple;
        // x_{i2} - a x_{i1}, x_{i3} - b x_{i1}, s1
        let mut f1 = vec![zero.clone(); 6];
        f1[i2] = one.clone();
        f1[i1] = a.neg();
        let mut f2 = vec![zero; 6];
        f2[i3] = one.clone();
        f2[i1] = b.neg();
        let f3 = vec![one; 6];
        JPlane { triple, sign, forms: vec![f1, f2, f3] }
    }

    pub fn label(&self) -> String {
        format!("P{}{}{}{}", self.sign, self.triple[0], self.triple[1], self.triple[2])
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.triple.contains(&i)
    }

    pub fn linear_forms(&self, ring: &Arc<PolyRing<NfElem>>) -> Vec<MPoly<NfElem>> {
        self.forms.iter().map(|v| MPoly::linear(ring, v)).collect()
    }

    fn matrix(&self) -> ExactMatrix<NfElem> {
        let f = self.forms[0][0].field().clone();
        ExactMatrix::from_rows(&f, self.forms.clone()).expect("3x6 forms")
    }

    /// Reduced echelon form of the defining forms, which identifies the
    /// plane independently of the chosen equations.
    pub fn key(&self) -> Vec<NfElem> {
        let (r, _) = self.matrix().rref();
        r.to_rows().into_iter().flatten().collect()
    }

    /// Three points spanning the plane.
    pub fn spanning_points(&self) -> Vec<Vec<NfElem>> {
        self.matrix().kernel_basis()
    }

    pub fn contains_point(&self, p: &[NfElem]) -> bool {
        self.forms.iter().all(|row| {
            row.iter().zip(p).fold(NfElem::zero(p[0].field()), |acc, (a, b)| acc.add(&a.mul(b))).is_zero()
        })
    }
}

/// Projective dimension of the intersection of two distinct planes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Meet {
    Line,
    Point,
}

impl Meet {
    pub fn pairing(self) -> i64 {
        match self {
            Meet::Line => 1,
            Meet::Point => 0,
        }
    }
}

pub struct BurkhardtModel {
    pub field: Arc<NumberField>,
    pub ring_p5: Arc<PolyRing<NfElem>>,
    pub ring_p4: Arc<PolyRing<NfElem>>,
    pub sigma1: MPoly<NfElem>,
    pub sigma4: MPoly<NfElem>,
    /// `s4` after eliminating `x5 = -(x0 + ... + x4)`.
    pub quartic_p4: MPoly<NfElem>,
    /// Nodes in `P^5`, normalized so the first nonzero coordinate is one.
    pub singular_points: Vec<Vec<NfElem>>,
    pub orbit_lengths: Vec<usize>,
    /// The 20 planes avoiding index 5 first, then the 20 containing it.
    pub planes: Vec<JPlane>,
}

fn elementary_symmetric(ring: &Arc<PolyRing<NfElem>>, k: usize) -> MPoly<NfElem> {
    let n = ring.arity();
    let vars = MPoly::vars(ring);
    let mut acc = MPoly::zero(ring);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        acc = acc.add(&MPoly::product(ring, idx.iter().map(|&i| &vars[i])));
        // next k-subset in lex order
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return acc;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn triples_in(range: &[usize]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (a, &i) in range.iter().enumerate() {
        for (b, &j) in range.iter().enumerate().skip(a + 1) {
            for &k in &range[b + 1..] {
                out.push([i, j, k]);
            }
        }
    }
    out
}

fn plane_list(field: &Arc<NumberField>) -> Vec<JPlane> {
    let mut planes = Vec::new();
    let avoid: Vec<[usize; 3]> = triples_in(&[0, 1, 2, 3, 4]);
    let with5: Vec<[usize; 3]> = triples_in(&[0, 1, 2, 3, 4, 5]).into_iter().filter(|t| t[2] == 5).collect();
    for block in [avoid, with5] {
        for t in block {
            for s in [Sign::Plus, Sign::Minus] {
                planes.push(JPlane::new(field, t, s));
            }
        }
    }
    planes
}

pub fn s6_generators() -> Vec<Perm> {
    vec![
        Perm::from_cycles(6, &[&[0, 1]]).expect("valid"),
        Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).expect("valid"),
    ]
}

pub fn build_model() -> BurkhardtModel {
    let field = eisenstein_field();
    let ring_p5 = PolyRing::<NfElem>::indexed(&field, "x", 6);
    let ring_p4 = PolyRing::<NfElem>::indexed(&field, "x", 5);
    let sigma1 = elementary_symmetric(&ring_p5, 1);
    let sigma4 = elementary_symmetric(&ring_p5, 4);
    let mut images = MPoly::vars(&ring_p4);
    images.push(images.iter().fold(MPoly::zero(&ring_p4), |a, v| a.sub(v)));
    let quartic_p4 = sigma4.substitute(&images).expect("six images");

    let w = NfElem::generator(&field);
    let w2 = w.mul(&w);
    let one = NfElem::one(&field);
    let zero = NfElem::zero(&field);
    let seeds = [
        vec![one.clone(), one.clone(), w.clone(), w, w2.clone(), w2],
        vec![one.clone(), one.neg(), zero.clone(), zero.clone(), zero.clone(), zero],
    ];
    let gens = s6_generators();
    let mut singular_points = Vec::new();
    let mut orbit_lengths = Vec::new();
    for seed in &seeds {
        let orbit = orbit_of(seed, &gens, |g, p| g.apply_point(p), |p| projective_normalize(p));
        orbit_lengths.push(orbit.len());
        singular_points.extend(orbit.members);
    }
    let planes = plane_list(&field);
    BurkhardtModel {
        field,
        ring_p5,
        ring_p4,
        sigma1,
        sigma4,
        quartic_p4,
        singular_points,
        orbit_lengths,
        planes,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeReport {
    pub checked: usize,
    pub nodes: usize,
    pub failures: Vec<String>,
}

impl BurkhardtModel {
    pub fn labels(&self) -> Vec<String> {
        self.planes.iter().map(JPlane::label).collect()
    }

    /// Number of distinct singular points.
    pub fn distinct_points(&self) -> usize {
        let mut v = self.singular_points.clone();
        v.sort_by_key(|p| p.iter().map(|c| c.canonical()).collect::<Vec<_>>());
        v.dedup();
        v.len()
    }

    fn p4_point(&self, p: &[NfElem]) -> Vec<NfElem> {
        p[..5].to_vec()
    }

    /// Whether `p` (in `P^5`) is a node: on the threefold, gradient of the
    /// `P^4` quartic zero, affine Hessian nondegenerate.
    pub fn is_node(&self, p: &[NfElem]) -> Result<bool, BurkhardtError> {
        if !self.sigma1.eval(p)?.is_zero() || !self.sigma4.eval(p)?.is_zero() {
            return Ok(false);
        }
        let q = self.p4_point(p);
        for g in self.quartic_p4.gradient() {
            if !g.eval(&q)?.is_zero() {
                return Ok(false);
            }
        }
        let chart = q.iter().position(|c| !c.is_zero()).ok_or(PolyError::ChartMismatch(0))?;
        let h = hessian_at(&self.quartic_p4, &q, chart)?;
        Ok(!h.determinant()?.is_zero())
    }

    pub fn verify_nodes(&self) -> Result<NodeReport, BurkhardtError> {
        let mut failures = Vec::new();
        for p in &self.singular_points {
            if !self.is_node(p)? {
                failures.push(fmt_point(p));
            }
        }
        Ok(NodeReport {
            checked: self.singular_points.len(),
            nodes: self.singular_points.len() - failures.len(),
            failures,
        })
    }

    /// Whether `s4` vanishes identically on the plane.
    pub fn plane_on_quartic(&self, plane: &JPlane) -> Result<bool, BurkhardtError> {
        let basis = plane.spanning_points();
        let ring = PolyRing::<NfElem>::new(&self.field, &["a", "b", "c"]);
        let params = MPoly::vars(&ring);
        let images: Vec<MPoly<NfElem>> = (0..6)
            .map(|i| {
                basis.iter().zip(&params).fold(MPoly::zero(&ring), |acc, (v, p)| acc.add(&p.scale(&v[i])))
            })
            .collect();
        Ok(self.sigma4.substitute(&images)?.is_zero() && self.sigma1.substitute(&images)?.is_zero())
    }

    /// For each plane, the number of nodes on it; and for each node, the
    /// number of planes through it.
    pub fn plane_incidence(&self) -> (Vec<usize>, Vec<usize>) {
        let per_plane = self
            .planes
            .iter()
            .map(|pl| self.singular_points.iter().filter(|p| pl.contains_point(p)).count())
            .collect();
        let per_point = self
            .singular_points
            .iter()
            .map(|p| self.planes.iter().filter(|pl| pl.contains_point(p)).count())
            .collect();
        (per_plane, per_point)
    }

    /// The 40 x 40 pairing matrix, off-diagonal entries from the geometric
    /// meet type.
    pub fn build_gram(&self) -> Result<GramMatrix, BurkhardtError> {
        let n = self.planes.len();
        let mut rows = vec![vec![-2i64; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let v = plane_pair_meet(&self.planes[i], &self.planes[j])?.pairing();
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        Ok(GramMatrix::from_int_rows(self.labels(), &rows)?)
    }

    /// Compares the geometric pairing with the combinatorial rule for
    /// every unordered pair, returning the number of pairs checked.
    pub fn verify_meet_rule(&self) -> Result<usize, BurkhardtError> {
        let mut count = 0;
        for (i, a) in self.planes.iter().enumerate() {
            for b in &self.planes[i + 1..] {
                let geometric = plane_pair_meet(a, b)?.pairing();
                let predicted = predicted_pairing(a, b)?;
                if geometric != predicted {
                    return Err(BurkhardtError::RuleMismatch {
                        a: a.label(),
                        b: b.label(),
                        geometric,
                        predicted,
                    });
                }
                count += 1;
            }
        }
        Ok(count)
    }

    pub fn block_indices(&self, with_five: bool) -> Vec<usize> {
        (0..self.planes.len()).filter(|&i| self.planes[i].contains_index(5) == with_five).collect()
    }

    /// Permutation of the plane list induced by a coordinate permutation.
    pub fn plane_permutation(&self, g: &Perm) -> Result<Perm, BurkhardtError> {
        let index: HashMap<Vec<NfElem>, usize> =
            self.planes.iter().enumerate().map(|(i, p)| (p.key(), i)).collect();
        let images = self
            .planes
            .iter()
            .map(|p| {
                let moved = JPlane {
                    triple: p.triple,
                    sign: p.sign,
                    forms: p.forms.iter().map(|v| g.apply_point(v)).collect(),
                };
                index.get(&moved.key()).copied().ok_or(BurkhardtError::NotAPlanePermutation)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Perm::new(images)?)
    }

    /// The induced action on planes of every element of `S6`, computed
    /// geometrically for the generators and extended multiplicatively.
    pub fn s6_plane_action(&self) -> Result<HashMap<Perm, Perm>, BurkhardtError> {
        let gens: Vec<(Perm, Perm)> = s6_generators()
            .into_iter()
            .map(|g| self.plane_permutation(&g).map(|p| (g, p)))
            .collect::<Result<_, _>>()?;
        let id = Perm::identity(6);
        let mut table = HashMap::from([(id.clone(), Perm::identity(self.planes.len()))]);
        let mut queue = std::collections::VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            let pe = table[&e].clone();
            for (g, pg) in &gens {
                let h = e.compose(g);
                if !table.contains_key(&h) {
                    table.insert(h.clone(), pe.compose(pg));
                    queue.push_back(h);
                }
            }
        }
        Ok(table)
    }

    /// Invariant rank for a subgroup of `S6`, computed by both methods.
    pub fn invariant_rank(
        &self,
        name: &str,
        group: &[Perm],
        gram: &GramMatrix,
    ) -> Result<InvariantRank, BurkhardtError> {
        let table = self.s6_plane_action()?;
        self.invariant_rank_with(name, group, gram, &table)
    }

    fn invariant_rank_with(
        &self,
        name: &str,
        group: &[Perm],
        gram: &GramMatrix,
        table: &HashMap<Perm, Perm>,
    ) -> Result<InvariantRank, BurkhardtError> {
        let actions = group
            .iter()
            .map(|g| table.get(g).cloned().ok_or(BurkhardtError::NotAPlanePermutation))
            .collect::<Result<Vec<_>, _>>()?;
        let orbits = plane_orbits(&actions, self.planes.len());
        let orbit_sum_rank = orbit_sum_gram(gram, &orbits)?.rank();
        let trace_dimension = invariant_dimension_via_trace(gram, &actions)?;
        Ok(InvariantRank {
            subgroup: name.to_string(),
            order: group.len(),
            orbit_lengths: orbits.iter().map(Vec::len).collect(),
            orbit_sum_rank,
            trace_dimension,
        })
    }

    /// Invariant ranks for `S6`, `A6` and both embeddings of `A5`.
    pub fn invariant_ranks(&self, gram: &GramMatrix) -> Result<Vec<InvariantRank>, BurkhardtError> {
        let groups: Vec<(&str, Vec<Perm>)> = vec![
            ("S6", symmetric_s6()),
            ("A6", alternating_a6()),
            ("A5 standard", subgroup_standard_a5()?),
            ("A5 non-standard", subgroup_nonstandard_a5()?),
        ];
        let table = self.s6_plane_action()?;
        groups.iter().map(|(name, g)| self.invariant_rank_with(name, g, gram, &table)).collect()
    }
}

/// Orbits of a permutation group on `0..n`, each sorted, ordered by least
/// element.
pub fn plane_orbits(actions: &[Perm], n: usize) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let mut orbit: Vec<usize> = actions.iter().map(|g| g.apply(i)).collect();
        orbit.push(i);
        orbit.sort_unstable();
        orbit.dedup();
        for &j in &orbit {
            assigned[j] = true;
        }
        out.push(orbit);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRank {
    pub subgroup: String,
    pub order: usize,
    pub orbit_lengths: Vec<usize>,
    pub orbit_sum_rank: usize,
    pub trace_dimension: usize,
}

/// Line or point, from the rank of the six stacked linear forms.
pub fn plane_pair_meet(a: &JPlane, b: &JPlane) -> Result<Meet, BurkhardtError> {
    let f = a.forms[0][0].field().clone();
    let rows: Vec<Vec<NfElem>> = a.forms.iter().chain(&b.forms).cloned().collect();
    match ExactMatrix::from_rows(&f, rows)?.rank() {
        3 => Err(BurkhardtError::IdenticalPlanes),
        4 => Ok(Meet::Line),
        _ => Ok(Meet::Point),
    }
}

/// `1` when the two shared indices occupy positions with the same gap in
/// both triples, `0` otherwise.
pub fn delta_rule(a: [usize; 3], b: [usize; 3]) -> Result<u8, BurkhardtError> {
    let c = a.iter().filter(|i| b.contains(i)).count();
    if c != 2 {
        return Err(BurkhardtError::NotCTwo(c));
    }
    for x in 0..3 {
        for y in (x + 1)..3 {
            for x2 in 0..3 {
                for y2 in (x2 + 1)..3 {
                    if a[x] == b[x2] && a[y] == b[y2] && y - x == y2 - x2 {
                        return Ok(1);
                    }
                }
            }
        }
    }
    Ok(0)
}

/// The pairing predicted by the index combinatorics.
pub fn predicted_pairing(a: &JPlane, b: &JPlane) -> Result<i64, BurkhardtError> {
    let c = a.triple.iter().filter(|i| b.triple.contains(i)).count();
    let same = a.sign == b.sign;
    Ok(match c {
        0 => 1,
        1 => 0,
        2 => {
            let d = i64::from(delta_rule(a.triple, b.triple)?);
            if same {
                d
            } else {
                1 - d
            }
        }
        _ if same => -2,
        _ => 1,
    })
}

pub fn fmt_point(p: &[NfElem]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(" : "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_examples() {
        assert_eq!(delta_rule([0, 1, 2], [0, 1, 3]).unwrap(), 1);
        assert_eq!(delta_rule([0, 1, 2], [1, 2, 3]).unwrap(), 1);
        assert_eq!(delta_rule([0, 1, 2], [0, 2, 3]).unwrap(), 0);
        assert_eq!(delta_rule([0, 1, 2], [3, 4, 5]).unwrap_err(), BurkhardtError::NotCTwo(0));
    }

    #[test]
    fn meet_examples() {
        let f = eisenstein_field();
        let p012 = JPlane::new(&f, [0, 1, 2], Sign::Plus);
        assert_eq!(plane_pair_meet(&p012, &JPlane::new(&f, [3, 4, 5], Sign::Plus)).unwrap(), Meet::Line);
        assert_eq!(plane_pair_meet(&p012, &JPlane::new(&f, [0, 3, 4], Sign::Plus)).unwrap(), Meet::Point);
        assert_eq!(plane_pair_meet(&p012, &JPlane::new(&f, [0, 1, 2], Sign::Minus)).unwrap(), Meet::Line);
        assert_eq!(plane_pair_meet(&p012, &p012.clone()).unwrap_err(), BurkhardtError::IdenticalPlanes);
    }

    #[test]
    fn elementary_symmetric_counts() {
        let f = eisenstein_field();
        let r = PolyRing::<NfElem>::indexed(&f, "x", 6);
        assert_eq!(elementary_symmetric(&r, 4).num_terms(), 15);
        assert_eq!(elementary_symmetric(&r, 1).num_terms(), 6);
    }
}
