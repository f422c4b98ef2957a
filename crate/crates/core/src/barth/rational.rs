use std::sync::Arc;

use crate::exactfield::{golden_field, golden_sqrt_field, Field, NfElem, NumberField, RatFun, RatFunCtx};
use crate::lattice::ExactMatrix;
use crate::multipoly::{restrict_to_line, MPoly, Monomial, PolyRing};

use super::{lin_forms, BarthError, SEXTIC};

type Rf = RatFun<NfElem>;

/// Results of the identities behind the rational parametrization, over
/// `Q(s)` with `s^2 = 2t + 1` and over `Q(s)(lambda)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityReport {
    /// `4 l1...l6 - q3^2` is the Barth sextic.
    pub branch_sextic: bool,
    /// (1) the coordinate change `w = 2 y l1 l2 + q3`;
    /// (2), (3) the factorizations on `x3 = x0 + x1 + x2` and
    /// `x3 = x0 - x1 - x2`; (4) both lines lie on the cubic surface;
    /// (5) the lines are disjoint.
    pub identities: [bool; 5],
    /// Rank of the 4x4 matrix of the lines' defining forms.
    pub line_rank: usize,
    /// (2)-(5) again with the opposite sign in front of `s` in every factor.
    pub sign_flipped: [bool; 4],
}

impl RationalityReport {
    pub fn all_pass(&self) -> bool {
        self.branch_sextic && self.identities.iter().all(|&b| b)
    }

    pub fn first_failure(&self) -> Option<BarthError> {
        self.identities.iter().position(|&b| !b).map(|i| BarthError::IdentityFailed(i + 1))
    }
}

fn forms<F: Field>(ring: &Arc<PolyRing<F>>) -> Result<(Vec<MPoly<F>>, MPoly<F>), BarthError> {
    let l = lin_forms(ring);
    let q3 = MPoly::parse(ring, "s*x3*(x0^2 + x1^2 + x2^2 - x3^2)")?;
    Ok((l, q3))
}

fn linear_coeffs(p: &MPoly<Rf>) -> Vec<Rf> {
    let n = p.ring().arity();
    (0..n).map(|i| p.coeff(&Monomial::var(n, i))).collect()
}

pub fn rationality_checks() -> Result<RationalityReport, BarthError> {
    let field = golden_sqrt_field();
    let ring = PolyRing::<NfElem>::new(&field, &["x0", "x1", "x2", "x3", "y"]);
    let (l, q3) = forms(&ring)?;
    let four = NfElem::from_int(&field, 4);
    let prod_all = MPoly::product(&ring, l.iter());
    let l12 = l[0].mul(&l[1]);
    let l3456 = MPoly::product(&ring, l[2..].iter());

    // the branch sextic, read in Q(t) and moved into Q(s)
    let gf = golden_field();
    let r4 = PolyRing::<NfElem>::indexed(&gf, "x", 4);
    let tau = NfElem::symbol(&field, "t").expect("alias");
    let b = MPoly::parse(&r4, SEXTIC)?.map_coeffs(&PolyRing::indexed(&field, "x", 4), |c| {
        let k = c.coords();
        NfElem::from_rational(&field, &k[0]).add(&tau.mul(&NfElem::from_rational(&field, &k[1])))
    });
    let b = b.embed(&ring, &[0, 1, 2, 3]);
    let branch_sextic = prod_all.scale(&four).sub(&q3.mul(&q3)) == b;

    // (1)
    let y = MPoly::var(&ring, 4);
    let w = y.mul(&l12).scale(&NfElem::from_int(&field, 2)).add(&q3);
    let lhs = w.mul(&w).add(&prod_all.scale(&four)).sub(&q3.mul(&q3));
    let quartic = y.mul(&y).mul(&l12).add(&y.mul(&q3)).add(&l3456);
    let id1 = lhs == l12.scale(&four).mul(&quartic);

    let printed = factor_checks(&field, 1)?;
    let sign_flipped = factor_checks(&field, -1)?;

    Ok(RationalityReport {
        branch_sextic,
        identities: [id1, printed.0, printed.1, printed.2, printed.3 == 4],
        line_rank: printed.3,
        sign_flipped: [sign_flipped.0, sign_flipped.1, sign_flipped.2, sign_flipped.3 == 4],
    })
}

/// Identities (2)-(5) with the factors `lambda l4 + e s (2t - 3) l3`,
/// `lambda l1 l2 + e s l5 l6` (and likewise on the second plane), where `e`
/// is `sign`. The root in `q3` is always `s`.
fn factor_checks(field: &Arc<NumberField>, sign: i64) -> Result<(bool, bool, bool, usize), BarthError> {
    let ctx = RatFunCtx::<NfElem>::new(field, "lambda");
    let rl = PolyRing::<Rf>::new(&ctx, &["x0", "x1", "x2", "x3"]);
    let (l, q3) = forms(&rl)?;
    let lam = MPoly::constant(&rl, Rf::var(&ctx));
    let cubic = MPoly::product(&rl, [&lam, &lam, &l[0], &l[1], &l[3]])
        .add(&lam.mul(&q3))
        .add(&MPoly::product(&rl, [&l[2], &l[4], &l[5]]));
    let e = Rf::from_int(&ctx, sign);
    let k = MPoly::parse(&rl, "s*(2*t - 3)")?.scale(&e);
    let s = MPoly::parse(&rl, "s")?.scale(&e);
    let vars = MPoly::vars(&rl);
    let on_plane = |x3: &str| -> Result<MPoly<Rf>, BarthError> {
        let h = MPoly::parse(&rl, x3)?;
        Ok(cubic.substitute(&[vars[0].clone(), vars[1].clone(), vars[2].clone(), h])?)
    };
    let first = lam.mul(&l[3]).add(&k.mul(&l[2]));
    let second = lam.mul(&l[0]).add(&k.mul(&l[5]));
    let f2 = first.mul(&lam.mul(&l[0]).mul(&l[1]).add(&s.mul(&l[4]).mul(&l[5])));
    let id2 = on_plane("x0 + x1 + x2")? == f2;
    let f3 = second.mul(&lam.mul(&l[1]).mul(&l[3]).add(&s.mul(&l[2]).mul(&l[4])));
    let id3 = on_plane("x0 - x1 - x2")? == f3;

    let line_forms =
        [MPoly::parse(&rl, "x3 - x0 - x1 - x2")?, first, MPoly::parse(&rl, "x3 - x0 + x1 + x2")?, second];
    let mut id4 = true;
    for pair in line_forms.chunks(2) {
        let m = ExactMatrix::from_rows(&ctx, pair.iter().map(linear_coeffs).collect()).expect("2x4");
        let basis = m.kernel_basis();
        id4 &= basis.len() == 2 && restrict_to_line(&cubic, &basis[0], &basis[1])?.is_zero();
    }
    let m = ExactMatrix::from_rows(&ctx, line_forms.iter().map(linear_coeffs).collect()).expect("4x4");
    Ok((id2, id3, id4, m.rank()))
}
