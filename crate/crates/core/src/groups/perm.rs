use std::fmt;

use crate::exactfield::Field;
use crate::multipoly::{MPoly, PolyError};

use super::{generate_group, GroupElem, GroupError};

/// A bijection of `{0, ..., n-1}`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::NotAPermutation(images));
            }
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Product of disjoint or overlapping cycles, the rightmost applied first.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut p = Perm::identity(n);
        for cyc in cycles.iter().rev() {
            if cyc.iter().any(|&i| i >= n) {
                return Err(GroupError::NotAPermutation(cyc.to_vec()));
            }
            let mut img: Vec<usize> = (0..n).collect();
            for (k, &i) in cyc.iter().enumerate() {
                img[i] = cyc[(k + 1) % cyc.len()];
            }
            p = Perm::new(img)?.compose(&p);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn pow(&self, k: usize) -> Perm {
        (0..k).fold(Perm::identity(self.degree()), |acc, _| acc.compose(self))
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.degree()];
        let mut transpositions = 0;
        for start in 0..self.degree() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }

    pub fn fixed_points(&self) -> usize {
        (0..self.degree()).filter(|&i| self.images[i] == i).count()
    }

    /// Moves entry `i` of `v` to position `self(i)`.
    pub fn apply_point<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.images[i]] = x.clone();
        }
        out
    }

    /// `p(g^{-1} x)`: variable `x_j` is replaced by `x_{g(j)}`.
    pub fn act_on_poly<F: Field>(&self, p: &MPoly<F>) -> Result<MPoly<F>, PolyError> {
        let ring = p.ring();
        if ring.arity() != self.degree() {
            return Err(PolyError::ArityMismatch { expected: ring.arity(), got: self.degree() });
        }
        let images: Vec<MPoly<F>> = (0..self.degree()).map(|j| MPoly::var(ring, self.images[j])).collect();
        p.substitute(&images)
    }
}

impl GroupElem for Perm {
    fn compose(&self, rhs: &Self) -> Self {
        Perm { images: rhs.images.iter().map(|&i| self.images[i]).collect() }
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    fn identity_like(&self) -> Self {
        Perm::identity(self.degree())
    }

    fn canonical(&self) -> Self {
        self.clone()
    }
}

impl Perm {
    pub fn compose(&self, rhs: &Self) -> Self {
        GroupElem::compose(self, rhs)
    }

    pub fn inverse(&self) -> Self {
        GroupElem::inverse(self)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// Cycle notation, e.g. `(0 1 2)(3 4)`; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i.to_string());
                i = self.images[i];
            }
            write!(f, "({})", cyc.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn is_transitive(group: &[Perm], n: usize) -> bool {
    let mut reach = vec![false; n];
    for g in group {
        reach[g.apply(0)] = true;
    }
    reach.iter().all(|&r| r)
}

fn validated_a5(gens: &[Perm], transitive: bool) -> Result<Vec<Perm>, GroupError> {
    let group = generate_group(gens, 60).map_err(|e| GroupError::ConstructionFailed(e.to_string()))?;
    if group.len() != 60 {
        return Err(GroupError::ConstructionFailed(format!("order {}", group.len())));
    }
    if !group.iter().all(Perm::is_even) {
        return Err(GroupError::ConstructionFailed("contains an odd permutation".into()));
    }
    if is_transitive(&group, 6) != transitive {
        return Err(GroupError::ConstructionFailed(format!("expected transitive = {transitive}")));
    }
    Ok(group)
}

/// Even permutations of `{0..4}` fixing `5`.
pub fn subgroup_standard_a5() -> Result<Vec<Perm>, GroupError> {
    let gens = [Perm::from_cycles(6, &[&[0, 1, 2, 3, 4]])?, Perm::from_cycles(6, &[&[0, 1, 2]])?];
    let group = validated_a5(&gens, false)?;
    if !group.iter().all(|g| g.apply(5) == 5) {
        return Err(GroupError::ConstructionFailed("5 is not fixed".into()));
    }
    Ok(group)
}

/// A transitive copy of `A5` in `S6`: `PSL(2,5)` acting on the projective
/// line over `F_5`, with `5` playing the point at infinity.
pub fn subgroup_nonstandard_a5() -> Result<Vec<Perm>, GroupError> {
    // x -> x + 1 and x -> -1/x
    let gens = [Perm::from_cycles(6, &[&[0, 1, 2, 3, 4]])?, Perm::from_cycles(6, &[&[0, 5], &[1, 4]])?];
    validated_a5(&gens, true)
}

pub fn symmetric_s6() -> Vec<Perm> {
    let gens = [
        Perm::from_cycles(6, &[&[0, 1]]).expect("valid cycle"),
        Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).expect("valid cycle"),
    ];
    generate_group(&gens, 720).expect("S6 has 720 elements")
}

pub fn alternating_a6() -> Vec<Perm> {
    let gens = [
        Perm::from_cycles(6, &[&[0, 1, 2]]).expect("valid cycle"),
        Perm::from_cycles(6, &[&[1, 2, 3, 4, 5]]).expect("valid cycle"),
    ];
    generate_group(&gens, 360).expect("A6 has 360 elements")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Rational;
    use crate::multipoly::PolyRing;

    #[test]
    fn basics() {
        let p = Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 3]);
        assert_eq!(p.compose(&p.inverse()), Perm::identity(4));
        assert!(p.is_even());
        assert!(!Perm::from_cycles(4, &[&[0, 1]]).unwrap().is_even());
        assert_eq!(p.to_string(), "(0 1 2)");
        assert!(Perm::new(vec![0, 0]).is_err());
        assert_eq!(p.apply_point(&['a', 'b', 'c', 'd']), vec!['c', 'a', 'b', 'd']);
    }

    #[test]
    fn subgroups() {
        let std = subgroup_standard_a5().unwrap();
        assert!(std.contains(&Perm::from_cycles(6, &[&[0, 1, 2, 3, 4]]).unwrap()));
        assert!(std.iter().all(|g| g.apply(5) == 5));
        let non = subgroup_nonstandard_a5().unwrap();
        assert_eq!(non.len(), 60);
        assert!(is_transitive(&non, 6));
        assert!(non.iter().all(Perm::is_even));
        assert_eq!(alternating_a6().len(), 360);
        assert!(alternating_a6().iter().all(Perm::is_even));
    }

    #[test]
    fn bad_generators_are_rejected() {
        let gens = [
            Perm::from_cycles(6, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
        ];
        assert!(matches!(validated_a5(&gens, false), Err(GroupError::ConstructionFailed(_))));
    }

    #[test]
    fn acting_on_polynomials() {
        let r = PolyRing::<Rational>::indexed(&(), "x", 6);
        let s1 = MPoly::parse(&r, "x0 + x1 + x2 + x3 + x4 + x5").unwrap();
        let swap = Perm::from_cycles(6, &[&[0, 1]]).unwrap();
        assert_eq!(swap.act_on_poly(&s1).unwrap(), s1);
        // (g.p)(g.x) = p(x)
        let g = Perm::from_cycles(6, &[&[0, 2, 5], &[1, 3]]).unwrap();
        let p = MPoly::parse(&r, "x0^2*x1 + 3*x5").unwrap();
        let gp = g.act_on_poly(&p).unwrap();
        let pt: Vec<Rational> = (1..=6).map(|k| Rational::from_int(&(), k * k + 1)).collect();
        assert_eq!(gp.eval(&g.apply_point(&pt)).unwrap(), p.eval(&pt).unwrap());
    }
}
