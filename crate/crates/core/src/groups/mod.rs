//! Finite groups acting on coordinates, points and polynomials.
//!
//! Groups here are small (at most 720 elements), so they are always
//! enumerated in full.

mod matelem;
mod perm;
mod word;

pub use matelem::{projective_normalize, MatElem};
pub use perm::{alternating_a6, subgroup_nonstandard_a5, subgroup_standard_a5, symmetric_s6, Perm};
pub use word::{eval_word, GroupWord};

use std::collections::{HashSet, VecDeque};
use std::hash::Hash;

use thiserror::Error;

use crate::exactfield::Field;
use crate::multipoly::{MPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("group has more than {0} elements")]
    OrderBoundExceeded(usize),
    #[error("word letter {0:?} has no assigned element")]
    UnboundLetter(String),
    #[error("cannot parse group word {0:?}")]
    WordParse(String),
    #[error("subgroup construction failed: {0}")]
    ConstructionFailed(String),
    #[error("orbit of length {orbit} does not divide group order {group}")]
    OrbitOrder { orbit: usize, group: usize },
}

/// Minimal interface shared by permutations and projective matrices.
pub trait GroupElem: Clone + Eq + Hash {
    /// `self * rhs`, i.e. apply `rhs` first, then `self`.
    fn compose(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;
    /// Representative used for equality inside a group (projective
    /// normalization for matrices, identity for permutations).
    fn canonical(&self) -> Self;
}

/// Closure of `generators` under multiplication, in breadth-first order
/// starting from the identity.
pub fn generate_group<G: GroupElem>(generators: &[G], order_bound: usize) -> Result<Vec<G>, GroupError> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let gens: Vec<G> = generators.iter().map(G::canonical).collect();
    let id = first.identity_like().canonical();
    let mut seen: HashSet<G> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in &gens {
            let h = e.compose(g).canonical();
            if seen.insert(h.clone()) {
                if out.len() == order_bound {
                    return Err(GroupError::OrderBoundExceeded(order_bound));
                }
                out.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(out)
}

/// An orbit, listed in breadth-first discovery order from its
/// representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit<T> {
    pub representative: T,
    pub members: Vec<T>,
}

impl<T: Eq + Hash> Orbit<T> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.members.contains(x)
    }

    /// `|G| / |orbit|`, checking divisibility.
    pub fn stabilizer_order(&self, group_order: usize) -> Result<usize, GroupError> {
        if self.members.is_empty() || !group_order.is_multiple_of(self.members.len()) {
            return Err(GroupError::OrbitOrder { orbit: self.members.len(), group: group_order });
        }
        Ok(group_order / self.members.len())
    }
}

/// Breadth-first closure of `{x}` under the generators.
pub fn orbit_of<T, G>(
    x: &T,
    generators: &[G],
    act: impl Fn(&G, &T) -> T,
    canonicalize: impl Fn(&T) -> T,
) -> Orbit<T>
where
    T: Clone + Eq + Hash,
{
    let rep = canonicalize(x);
    let mut seen: HashSet<T> = HashSet::from([rep.clone()]);
    let mut members = vec![rep.clone()];
    let mut queue = VecDeque::from([rep.clone()]);
    while let Some(y) = queue.pop_front() {
        for g in generators {
            let z = canonicalize(&act(g, &y));
            if seen.insert(z.clone()) {
                members.push(z.clone());
                queue.push_back(z);
            }
        }
    }
    Orbit { representative: rep, members }
}

/// Either kind of group element, for callers that handle both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element<F: Field> {
    Perm(Perm),
    Mat(MatElem<F>),
}

/// `p` composed with `g^{-1}` on the variables, so that
/// `(g.p)(g.x) = p(x)`.
///
/// A permutation moves coordinate `i` to position `g(i)`; a `k x k` matrix
/// acts on the first `k` coordinates and fixes the rest.
pub fn act_on_poly<F: Field>(g: &Element<F>, p: &MPoly<F>) -> Result<MPoly<F>, PolyError> {
    match g {
        Element::Perm(pi) => pi.act_on_poly(p),
        Element::Mat(m) => m.act_on_poly(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s6_and_cyclic_orders() {
        let s6 = symmetric_s6();
        assert_eq!(s6.len(), 720);
        let r = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(generate_group(&[r], 10).unwrap().len(), 3);
        let gens = [
            Perm::from_cycles(6, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
        ];
        assert_eq!(generate_group(&gens, 100).unwrap_err(), GroupError::OrderBoundExceeded(100));
    }

    #[test]
    fn orbits_and_stabilizers() {
        let gens = [Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()];
        let orbit = orbit_of(&0usize, &gens, |g, &i| g.apply(i), |&i| i);
        assert_eq!(orbit.members, vec![0, 1, 2, 3]);
        assert_eq!(orbit.stabilizer_order(4).unwrap(), 1);
        assert!(orbit.stabilizer_order(6).is_err());
    }
}
