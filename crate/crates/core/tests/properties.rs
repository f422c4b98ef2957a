mod common;

use a5fano::exactfield::{eisenstein_field, golden_field, golden_sqrt_field, Field, NfElem, Rational, UPoly};
use a5fano::groups::{GroupElem, MatElem, Perm};
use a5fano::lattice::ExactMatrix;
use a5fano::multipoly::{exact_square_root, sylvester_resultant, MPoly, PolyRing};
use common::{bareiss_rank, field_axioms, naive_rank, q};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn coords(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), n)
}

fn int_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn to_q(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

proptest! {
    #[test]
    fn golden_axioms(a in coords(2), b in coords(2), c in coords(2)) {
        let f = golden_field();
        let (a, b, c) = (NfElem::new(&f, a), NfElem::new(&f, b), NfElem::new(&f, c));
        prop_assert_eq!(field_axioms(&a, &b, &c), Ok(()));
    }

    #[test]
    fn eisenstein_axioms(a in coords(2), b in coords(2), c in coords(2)) {
        let f = eisenstein_field();
        let (a, b, c) = (NfElem::new(&f, a), NfElem::new(&f, b), NfElem::new(&f, c));
        prop_assert_eq!(field_axioms(&a, &b, &c), Ok(()));
    }

    #[test]
    fn quartic_axioms(a in coords(4), b in coords(4), c in coords(4)) {
        let f = golden_sqrt_field();
        let (a, b, c) = (NfElem::new(&f, a), NfElem::new(&f, b), NfElem::new(&f, c));
        prop_assert_eq!(field_axioms(&a, &b, &c), Ok(()));
    }

    #[test]
    fn golden_squares_have_roots(a in coords(2)) {
        let f = golden_field();
        let a = NfElem::new(&f, a);
        let r = a.mul(&a).sqrt().expect("a square");
        prop_assert!(r == a || r == a.neg());
    }

    #[test]
    fn upoly_division(n in coords(5), d in coords(3)) {
        let n = UPoly::from_coeffs(&(), n);
        let d = UPoly::from_coeffs(&(), d);
        prop_assume!(!d.is_zero());
        let (quo, rem) = n.div_rem(&d).unwrap();
        prop_assert_eq!(quo.mul(&d).add(&rem), n.clone());
        prop_assert!(rem.is_zero() || rem.degree() < d.degree());
        let g = n.gcd(&d);
        prop_assert!(n.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(d.div_rem(&g).unwrap().1.is_zero());
    }

    #[test]
    fn mpoly_ring_laws(a in coords(4), b in coords(4), c in coords(4), pt in coords(3)) {
        let ring = PolyRing::<Rational>::indexed(&(), "x", 3);
        let lin = |v: &Vec<Rational>| {
            MPoly::linear(&ring, &v[..3]).add(&MPoly::constant(&ring, v[3].clone()))
        };
        let (p, r, s) = (lin(&a), lin(&b).pow(2), lin(&c));
        prop_assert_eq!(p.mul(&r.add(&s)), p.mul(&r).add(&p.mul(&s)));
        // substituting constants agrees with evaluation
        let images: Vec<MPoly<Rational>> = pt.iter().map(|x| MPoly::constant(&ring, x.clone())).collect();
        let prs = p.mul(&r).sub(&s);
        prop_assert_eq!(prs.substitute(&images).unwrap().as_constant(), Some(prs.eval(&pt).unwrap()));
        if !p.is_zero() {
            prop_assert_eq!(p.mul(&r).div_exact(&p), Some(r.clone()));
        }
    }

    #[test]
    fn square_root_inverts_squaring(a in coords(4), b in coords(4)) {
        let f = golden_field();
        let ring = PolyRing::<NfElem>::indexed(&f, "x", 3);
        let tau = NfElem::generator(&f);
        let lin = |v: &Vec<Rational>| {
            let cs: Vec<NfElem> = v[..3].iter().map(|x| NfElem::from_rational(&f, x)).collect();
            MPoly::linear(&ring, &cs)
        };
        let p = lin(&a).mul(&lin(&b)).add(&MPoly::var(&ring, 2).pow(2).scale(&tau));
        let r = exact_square_root(&p.mul(&p)).expect("a square");
        prop_assert!(r == p || r == p.neg());
    }

    #[test]
    fn resultant_vanishes_on_common_factor(a in coords(3), b in coords(2), c in coords(2)) {
        let ring = PolyRing::<Rational>::indexed(&(), "x", 2);
        let lin = |v: &[Rational]| MPoly::linear(&ring, v);
        let common = lin(&a[..2]).add(&MPoly::var(&ring, 0).pow(2).scale(&a[2]));
        prop_assume!(common.degree_in(0).unwrap_or(0) > 0);
        let p = common.mul(&lin(&b));
        let r = common.mul(&lin(&c));
        prop_assert!(sylvester_resultant(&p, &r, 0).unwrap().is_zero());
    }

    #[test]
    fn bareiss_matches_naive_elimination(m in int_matrix(6), den in 1i64..5) {
        let mut rows = to_q(&m);
        for (i, r) in rows.iter_mut().enumerate() {
            if i % 2 == 1 {
                for x in r.iter_mut() {
                    *x /= q(den);
                }
            }
        }
        prop_assert_eq!(bareiss_rank(&rows), naive_rank(&rows));
        let mat = ExactMatrix::from_rows(&(), rows).unwrap();
        prop_assert_eq!(mat.rank(), mat.transpose().rank());
    }

    #[test]
    fn rank_ignores_row_order(m in int_matrix(6), seed in 0usize..720) {
        let rows = to_q(&m);
        let mut shuffled = rows.clone();
        let n = shuffled.len();
        shuffled.rotate_left(seed % n);
        shuffled.swap(0, seed % n);
        prop_assert_eq!(bareiss_rank(&rows), bareiss_rank(&shuffled));
    }

    #[test]
    fn determinant_is_multiplicative(n in 1usize..5, a in prop::collection::vec(-4i64..=4, 16), b in prop::collection::vec(-4i64..=4, 16)) {
        let sq = |v: &[i64]| {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| v[i * n..(i + 1) * n].to_vec()).collect();
            ExactMatrix::from_i64_rows(&rows).unwrap()
        };
        let (x, y) = (sq(&a), sq(&b));
        let d = x.mul(&y).unwrap().determinant().unwrap();
        prop_assert_eq!(d, x.determinant().unwrap() * y.determinant().unwrap());
    }

    #[test]
    fn perm_group_laws(a in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(), b in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(), v in prop::collection::vec(-9i64..9, 6)) {
        let (g, h) = (Perm::new(a).unwrap(), Perm::new(b).unwrap());
        prop_assert_eq!(g.compose(&g.inverse()), Perm::identity(6));
        // composition acts on points as successive application
        prop_assert_eq!(g.compose(&h).apply_point(&v), g.apply_point(&h.apply_point(&v)));
        prop_assert_eq!(g.compose(&h).is_even(), g.is_even() == h.is_even());
    }

    #[test]
    fn matrix_action_on_polys_and_points(m in prop::collection::vec(-2i64..=2, 9), pt in prop::collection::vec(-5i64..=5, 3)) {
        let rows: Vec<Vec<Rational>> = (0..3).map(|i| m[3 * i..3 * i + 3].iter().map(|&x| q(x)).collect()).collect();
        let g = MatElem::from_rows(&(), rows);
        prop_assume!(g.is_ok());
        let g = g.unwrap();
        let ring = PolyRing::<Rational>::indexed(&(), "x", 3);
        let p = MPoly::parse(&ring, "x0^2*x1 - 3*x2^3 + x0*x1*x2 + 2*x1").unwrap();
        let pt: Vec<Rational> = pt.iter().map(|&x| q(x)).collect();
        // (g.p)(g x) = p(x)
        let moved = g.act_on_poly(&p).unwrap();
        prop_assert_eq!(moved.eval(&g.apply_point(&pt)).unwrap(), p.eval(&pt).unwrap());
        let id = g.compose(&g.inverse());
        prop_assert_eq!(id.apply_point(&pt), pt);
    }
}
