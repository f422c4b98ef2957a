//! Helpers shared by the property and acceptance suites.
#![allow(dead_code)]

use std::sync::Arc;

use a5fano::exactfield::{Field, NfElem, NumberField, Rational};
use a5fano::lattice::ExactMatrix;
use a5fano::multipoly::{MPoly, Monomial, PolyRing};
use num_bigint::BigInt;
use rand::Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rank by textbook Gaussian elimination with rational division, used as
/// an oracle for the fraction-free kernel.
pub fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col] != q(0)) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][col] != q(0) {
                let f = &m[i][col] / &m[rank][col];
                for j in 0..ncols {
                    let d = &f * &m[rank][j];
                    m[i][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A random matrix whose rank is often deficient: a product of two random
/// integer matrices through an inner dimension `k`.
pub fn random_matrix<R: Rng>(rng: &mut R, max: usize) -> Vec<Vec<Rational>> {
    let r = rng.gen_range(1..=max);
    let c = rng.gen_range(1..=max);
    let k = rng.gen_range(1..=max);
    let a: Vec<Vec<i64>> = (0..r).map(|_| (0..k).map(|_| rng.gen_range(-4..=4)).collect()).collect();
    let b: Vec<Vec<i64>> = (0..k).map(|_| (0..c).map(|_| rng.gen_range(-4..=4)).collect()).collect();
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| {
                    let s: i64 = (0..k).map(|l| a[i][l] * b[l][j]).sum();
                    // a few rational entries
                    if (i + j) % 5 == 0 {
                        Rational::new(BigInt::from(s), BigInt::from(3))
                    } else {
                        q(s)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn bareiss_rank(rows: &[Vec<Rational>]) -> usize {
    ExactMatrix::from_rows(&(), rows.to_vec()).expect("rectangular").rank()
}

pub fn random_elem<R: Rng>(rng: &mut R, field: &Arc<NumberField>) -> NfElem {
    let coords = (0..field.degree())
        .map(|_| Rational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=4))))
        .collect();
    NfElem::new(field, coords)
}

/// Checks the field axioms on one triple, returning the first failure.
pub fn field_axioms<F: Field>(a: &F, b: &F, c: &F) -> Result<(), &'static str> {
    let ctx = a.ctx();
    let zero = F::zero(&ctx);
    let one = F::one(&ctx);
    if a.add(b) != b.add(a) {
        return Err("additive commutativity");
    }
    if a.mul(b) != b.mul(a) {
        return Err("multiplicative commutativity");
    }
    if a.add(b).add(c) != a.add(&b.add(c)) {
        return Err("additive associativity");
    }
    if a.mul(b).mul(c) != a.mul(&b.mul(c)) {
        return Err("multiplicative associativity");
    }
    if a.mul(&b.add(c)) != a.mul(b).add(&a.mul(c)) {
        return Err("distributivity");
    }
    if a.add(&zero) != *a || a.mul(&one) != *a {
        return Err("identities");
    }
    if !a.add(&a.neg()).is_zero() || a.sub(b) != a.add(&b.neg()) {
        return Err("negation");
    }
    match a.inv() {
        Some(i) if !a.mul(&i).is_one() => return Err("inverse"),
        None if !a.is_zero() => return Err("missing inverse"),
        _ => {}
    }
    Ok(())
}

/// Random ternary cubic over `field` with small coefficients.
pub fn random_cubic<R: Rng>(
    rng: &mut R,
    ring: &Arc<PolyRing<NfElem>>,
    field: &Arc<NumberField>,
) -> MPoly<NfElem> {
    let mut terms = Vec::new();
    for a in 0..=3u32 {
        for b in 0..=(3 - a) {
            if rng.gen_bool(0.6) {
                terms.push((Monomial::new(vec![a, b, 3 - a - b]), random_elem(rng, field)));
            }
        }
    }
    let p = MPoly::from_terms(ring, terms);
    if p.is_zero() {
        MPoly::var(ring, 0).pow(3)
    } else {
        p
    }
}
