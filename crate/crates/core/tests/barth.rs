use a5fano::barth::*;
use a5fano::exactfield::{Field, NfElem};
use a5fano::multipoly::{ConicType, MPoly};

fn model() -> BarthModel {
    build_barth().expect("model builds")
}

fn tau(a: i64, b: i64) -> NfElem {
    NfElem::from_ints(&a5fano::exactfield::golden_field(), &[a, b])
}

#[test]
fn orbits_and_invariance() {
    let m = model();
    assert_eq!(m.orbit_lengths(), vec![15, 30, 20]);
    assert_eq!(m.distinct_points(), 65);
    assert_eq!(m.projective_order().unwrap(), 60);
    assert_eq!(m.group().unwrap().len(), 60);
    let scalars = m.verify_invariance().unwrap();
    for s in &scalars {
        assert!(s.scalar.is_one(), "{} scales by {}", s.generator, s.scalar);
    }
    assert_eq!(m.line_counts(), (10, 6));
}

#[test]
fn nodes() {
    let m = model();
    let report = m.verify_nodes().unwrap();
    assert_eq!((report.checked, report.nodes), (65, 65), "{:?}", report.failures);

    // gradient at [1:0:0:0] by hand: every partial vanishes
    let p: Vec<NfElem> = [1, 0, 0, 0].iter().map(|&a| tau(a, 0)).collect();
    for g in m.sextic.gradient() {
        assert!(g.eval(&p).unwrap().is_zero());
    }
    // [1:t:0:0] lies on B but is a smooth point
    let q = vec![tau(1, 0), tau(0, 1), tau(0, 0), tau(0, 0)];
    assert!(m.sextic.eval(&q).unwrap().is_zero());
    assert!(m.sextic.gradient().iter().any(|g| !g.eval(&q).unwrap().is_zero()));
    assert!(!m.is_node(&q).unwrap());
}

#[test]
fn plane_restrictions() {
    let m = model();
    let r = verify_plane_restrictions(&m).unwrap();
    assert_eq!(r.xi.len(), 20);
    assert_eq!(r.theta.len(), 6);
    assert_eq!(r.square_identities, [true, true]);
    for x in &r.xi {
        assert!(x.smooth);
        assert_eq!(x.cubic.total_degree(), Some(3));
    }
    for t in &r.theta {
        assert_eq!(t.conic_type, ConicType::Irreducible);
    }
    assert_eq!(r.theta_scalar, Some(tau(-1, -2)));
    assert!(r.all_pass());
}

#[test]
fn plane_families() {
    let m = model();
    let r = verify_plane_classification(&m).unwrap();
    assert_eq!(r.pencil_a_line_multiplicity, 1);
    assert!(r.pencil_b_closed_form);
    assert!(r.pencil_b_odd_coefficients_vanish);
    assert!(r.pencil_b_constant_term);
    assert!(r.pencil_b_leading_coefficient);
    assert!(r.pencil_b_not_square);
    assert_eq!(r.pencil_b_controls, [true, true]);
    assert!(r.plane_c_closed_form);
    assert!(r.plane_c_not_square);
}

#[test]
fn surfaces_and_tables() {
    let m = model();
    let fam = build_solid_surfaces(&m).unwrap();
    assert_eq!(fam.plus.len() + fam.minus.len(), 40);
    assert_eq!(fam.theta_labels.len(), 12);
    for (p, q) in fam.plus.iter().zip(&fam.minus) {
        assert_eq!(p.cubic, q.cubic.neg());
        assert!(solid_residue(&m, q).unwrap().is_zero());
    }
    let fx = BarthFixtures::embedded();
    let t1 = verify_table1(&m, &fam, &fx.table1(&m.field).unwrap()).unwrap();
    assert_eq!(t1.matched(), 20, "{:?}", t1.first_failure());
    assert_eq!(t1.printed_surfaces, [true, true]);

    let t2 = verify_table2_and_ranks(&m, &fam, &fx.table2().unwrap()).unwrap();
    assert_eq!(t2.matched, 400, "{:?}", t2.first_failure());
    assert!(t2.minus_equals_plus);
    assert_eq!(t2.rank, 14);
    assert!(t2.row_pattern);
    assert!(t2.equivariant);
    assert_eq!((t2.orbit_sum_rank, t2.trace_dimension), (1, 1));
    // the M^3 example meets (1,1,1) in a line; (1,-1,-1) does not
    assert_eq!(t2.example_pairs, [1, 0]);
}

#[test]
fn pairing_examples() {
    let m = model();
    let fam = build_solid_surfaces(&m).unwrap();
    let v = |a: [i64; 3]| a.iter().map(|&x| tau(x, 0)).collect::<Vec<_>>();
    let s = |a| &fam.plus[fam.index_of(&v(a)).unwrap()];
    assert_eq!(surface_pair_intersection(s([1, 1, 1]), s([1, 1, -1])).unwrap(), 1);
    assert_eq!(surface_pair_intersection(s([1, 1, 1]), s([1, -1, -1])).unwrap(), 0);
    assert_eq!(surface_pair_intersection(s([1, 1, 1]), s([1, 1, 1])).unwrap(), -2);
    assert_eq!(surface_pair_intersection(s([1, 1, 1]), &fam.minus[0]).unwrap_err(), BarthError::MixedSigns);
    // symmetric, and invariant under each generator
    let gens = m.generator_matrices();
    for a in &fam.plus[..5] {
        for b in &fam.plus {
            let x = surface_pair_intersection(a, b).unwrap();
            assert_eq!(x, surface_pair_intersection(b, a).unwrap());
            for g in &gens {
                let ga = a.transport(&m, g).unwrap();
                let gb = b.transport(&m, g).unwrap();
                assert_eq!(surface_pair_intersection(&ga, &gb).unwrap(), x);
            }
        }
    }
}

#[test]
fn rationality() {
    let r = rationality_checks().unwrap();
    assert!(r.branch_sextic);
    // with one root s in q3 and in the factors, the printed factorizations
    // and line equations need the opposite sign in front of s
    assert_eq!(r.identities, [true, false, false, false, true]);
    assert_eq!(r.sign_flipped, [true; 4]);
    assert_eq!(r.line_rank, 4);
    assert_eq!(r.first_failure(), Some(BarthError::IdentityFailed(2)));
}

#[test]
fn theta_restriction_shape() {
    let m = model();
    let u = vec![tau(-1, 0), tau(0, 0), tau(0, 1)];
    let r = restrict_to_theta(&m, &u).unwrap();
    let names: Vec<&str> = r.ring().vars().iter().map(String::as_str).collect();
    assert_eq!(names, ["x1", "x2", "x3"]);
    let shape = MPoly::parse(r.ring(), "x3^2*(x1^2 + (1 + t^2)*x2^2 - x3^2)^2").unwrap();
    assert_eq!(proportionality(&r, &shape), Some(tau(-1, -2)));
}
