use std::sync::Arc;

use crate::exactfield::{Field, NfElem, RatFun, RatFunCtx};
use crate::multipoly::{
    square_root_up_to_scalar, ternary_conic_classify, ternary_cubic_is_smooth, ConicType, MPoly, PolyRing,
};

use super::{fmt_vector, BarthError, BarthModel, CUBIC_111};

/// Cubic on `x3 = x0 - x1 - x2` in the second square identity.
pub const CUBIC_1MM: &str =
    "(2 - t)*(x0*x1^2 - x1*x2^2 - x2*x0^2) + (3 - t)*x0*x1*x2 - (x0^2*x1 + x1^2*x2 - x2^2*x0)";

/// `B|Xi_v = constant * cubic^2` with a monic cubic.
#[derive(Debug, Clone)]
pub struct XiRestriction {
    pub v: Vec<NfElem>,
    pub constant: NfElem,
    pub cubic: MPoly<NfElem>,
    pub smooth: bool,
}

/// `B|Theta_u = constant * line^2 * conic^2`, in the coordinates left after
/// eliminating the first variable with a nonzero coefficient in `u`.
#[derive(Debug, Clone)]
pub struct ThetaRestriction {
    pub u: Vec<NfElem>,
    pub constant: NfElem,
    pub line: MPoly<NfElem>,
    pub conic: MPoly<NfElem>,
    pub conic_type: ConicType,
}

#[derive(Debug, Clone)]
pub struct RestrictionReport {
    pub xi: Vec<XiRestriction>,
    pub theta: Vec<ThetaRestriction>,
    /// The two closed forms on `x3 = x0 + x1 + x2` and `x3 = x0 - x1 - x2`.
    pub square_identities: [bool; 2],
    /// `B` on `Theta_(-1,0,t)` divided by `x3^2 (x1^2 + (1 + t^2) x2^2 - x3^2)^2`.
    pub theta_scalar: Option<NfElem>,
}

impl RestrictionReport {
    pub fn all_pass(&self) -> bool {
        self.xi.iter().all(|r| r.smooth)
            && self.theta.iter().all(|r| r.conic_type == ConicType::Irreducible)
            && self.square_identities.iter().all(|&b| b)
            && self.theta_scalar.is_some()
    }
}

fn xi_restriction(model: &BarthModel, v: &[NfElem]) -> Result<XiRestriction, BarthError> {
    let r = model.restrict_to_xi(v)?;
    let (constant, cubic) = square_root_up_to_scalar(&r).ok_or_else(|| {
        BarthError::RestrictionMismatch(format!("B on Xi{} is not a square", fmt_vector(v)))
    })?;
    let smooth = ternary_cubic_is_smooth(&cubic);
    Ok(XiRestriction { v: v.to_vec(), constant, cubic, smooth })
}

/// `B` on the plane `u . x = 0`, written in the three remaining
/// coordinates.
pub fn restrict_to_theta(model: &BarthModel, u: &[NfElem]) -> Result<MPoly<NfElem>, BarthError> {
    let k = u
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| BarthError::RestrictionMismatch("zero plane".into()))?;
    let names: Vec<String> = (0..4).filter(|&i| i != k).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ring = PolyRing::<NfElem>::new(&model.field, &refs);
    let vars = MPoly::vars(&ring);
    let inv = u[k].inv().expect("nonzero");
    let images: Vec<MPoly<NfElem>> = (0..4)
        .map(|i| match i.cmp(&k) {
            std::cmp::Ordering::Equal => (0..3).filter(|&j| j != k).fold(MPoly::zero(&ring), |acc, j| {
                let pos = if j < k { j } else { j - 1 };
                acc.sub(&vars[pos].scale(&u[j].mul(&inv)))
            }),
            std::cmp::Ordering::Less => vars[i].clone(),
            std::cmp::Ordering::Greater => vars[i - 1].clone(),
        })
        .collect();
    Ok(model.sextic.substitute(&images)?)
}

fn theta_restriction(model: &BarthModel, u: &[NfElem]) -> Result<ThetaRestriction, BarthError> {
    let r = restrict_to_theta(model, u)?;
    let fail = |what: &str| BarthError::RestrictionMismatch(format!("B on Theta{}: {what}", fmt_vector(u)));
    let (constant, cubic) = square_root_up_to_scalar(&r).ok_or_else(|| fail("not a square"))?;
    let line = MPoly::var(r.ring(), 2);
    let conic = cubic.div_exact(&line).ok_or_else(|| fail("x3 does not divide the cubic"))?;
    let conic_type = ternary_conic_classify(&conic)?;
    Ok(ThetaRestriction { u: u.to_vec(), constant, line, conic, conic_type })
}

pub fn verify_plane_restrictions(model: &BarthModel) -> Result<RestrictionReport, BarthError> {
    let xi = model.xi_planes.iter().map(|v| xi_restriction(model, v)).collect::<Result<Vec<_>, _>>()?;
    let theta =
        model.theta_planes.iter().map(|u| theta_restriction(model, u)).collect::<Result<Vec<_>, _>>()?;

    let f = &model.field;
    let c2 = super::tau_elem(f, -12, -20);
    let mut square_identities = [false; 2];
    for (slot, (v, cubic)) in [([1, 1, 1], CUBIC_111), ([1, -1, -1], CUBIC_1MM)].iter().enumerate() {
        let v: Vec<NfElem> = v.iter().map(|&a| NfElem::from_int(f, a)).collect();
        let c = MPoly::parse(&model.plane_ring, cubic)?;
        square_identities[slot] = model.restrict_to_xi(&v)? == c.mul(&c).scale(&c2);
    }

    let u = vec![NfElem::from_int(f, -1), NfElem::zero(f), super::tau_elem(f, 0, 1)];
    let r = restrict_to_theta(model, &u)?;
    let shape = MPoly::parse(r.ring(), "x3^2*(x1^2 + (1 + t^2)*x2^2 - x3^2)^2")?;
    let theta_scalar = proportionality(&r, &shape);

    Ok(RestrictionReport { xi, theta, square_identities, theta_scalar })
}

/// `c` with `p = c q`, if there is one.
pub fn proportionality<F: Field>(p: &MPoly<F>, q: &MPoly<F>) -> Option<F> {
    let (m, c) = q.leading_term()?;
    let k = p.coeff(m).div(c)?;
    (!k.is_zero() && *p == q.scale(&k)).then_some(k)
}

/// Outcome of the three plane families through the lines of `{x3 = 0}`.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    /// `t x0 + x1 = lambda x3`: multiplicity of the line `t x0 + x1 = 0` in
    /// the restricted sextic.
    pub pencil_a_line_multiplicity: usize,
    /// `x3 = mu (x0 + x1 + x2)`: `f(1, x1, -x1)` equals the closed form.
    pub pencil_b_closed_form: bool,
    pub pencil_b_odd_coefficients_vanish: bool,
    pub pencil_b_constant_term: bool,
    pub pencil_b_leading_coefficient: bool,
    /// Neither `f` nor `f(1, x1, -x1)` is a constant times a square.
    pub pencil_b_not_square: bool,
    /// `mu = 1` and `mu = -1`: both restrictions are constants times squares.
    pub pencil_b_controls: [bool; 2],
    /// `x0 + x1 + x2 = 0`: `g(x1, -x1, 1)` equals the closed form.
    pub plane_c_closed_form: bool,
    pub plane_c_not_square: bool,
}

impl ClassificationReport {
    pub fn all_pass(&self) -> bool {
        self.pencil_a_line_multiplicity == 1
            && self.pencil_b_closed_form
            && self.pencil_b_odd_coefficients_vanish
            && self.pencil_b_constant_term
            && self.pencil_b_leading_coefficient
            && self.pencil_b_not_square
            && self.pencil_b_controls.iter().all(|&b| b)
            && self.plane_c_closed_form
            && self.plane_c_not_square
    }
}

type Rf = RatFun<NfElem>;

fn param_ring(model: &BarthModel, var: &str, names: &[&str]) -> Arc<PolyRing<Rf>> {
    let ctx = RatFunCtx::<NfElem>::new(&model.field, var);
    PolyRing::new(&ctx, names)
}

fn lift(model: &BarthModel, ring: &Arc<PolyRing<Rf>>) -> MPoly<Rf> {
    let ctx = ring.ctx().clone();
    model.sextic.map_coeffs(ring, |c| Rf::constant(&ctx, c.clone()))
}

fn multiplicity<F: Field>(p: &MPoly<F>, factor: &MPoly<F>) -> usize {
    let mut q = p.clone();
    let mut k = 0;
    while !q.is_zero() {
        match q.div_exact(factor) {
            Some(next) => {
                q = next;
                k += 1;
            }
            None => break,
        }
    }
    k
}

pub fn verify_plane_classification(model: &BarthModel) -> Result<ClassificationReport, BarthError> {
    // (a) t x0 + x1 = lambda x3
    let ra = param_ring(model, "lambda", &["x0", "x1", "x2", "x3"]);
    let b = lift(model, &ra);
    let l4 = MPoly::parse(&ra, "t*x0 + x1")?;
    let lam_inv = Rf::symbol(ra.ctx(), "lambda").and_then(|l| l.inv()).expect("lambda");
    let vars = MPoly::vars(&ra);
    let fa = b.substitute(&[vars[0].clone(), vars[1].clone(), vars[2].clone(), l4.scale(&lam_inv)])?;
    let pencil_a_line_multiplicity = multiplicity(&fa, &l4);

    // (b) x3 = mu (x0 + x1 + x2)
    let rb = param_ring(model, "mu", &["x0", "x1", "x2", "x3"]);
    let b = lift(model, &rb);
    let vars = MPoly::vars(&rb);
    let s = MPoly::parse(&rb, "mu*(x0 + x1 + x2)")?;
    let fb = b.substitute(&[vars[0].clone(), vars[1].clone(), vars[2].clone(), s])?;
    let r1 = PolyRing::<Rf>::new(rb.ctx(), &["x1"]);
    let x = MPoly::var(&r1, 0);
    let f1 = fb.substitute(&[MPoly::one(&r1), x.clone(), x.neg(), MPoly::zero(&r1)])?;
    let closed = MPoly::parse(
        &r1,
        "-(8*t + 4)*x1^6 - (4 + 8*t)*(mu^2 - 3)*x1^4 + (4 + 8*t)*(mu^2 - t)*(mu^2 + t - 1)*x1^2 \
         - (1 + 2*t)*mu^2*(mu + 1)^2*(mu - 1)^2",
    )?;
    let coeffs = f1.coeffs_in(0);
    let coeff = |k: usize| coeffs.get(k).and_then(MPoly::as_constant).unwrap_or_else(|| Rf::zero(r1.ctx()));
    let expected_const =
        MPoly::parse(&r1, "-(1 + 2*t)*mu^2*(mu + 1)^2*(mu - 1)^2")?.as_constant().expect("constant");
    let expected_lead = MPoly::parse(&r1, "-(8*t + 4)")?.as_constant().expect("constant");
    let pencil_b_not_square =
        square_root_up_to_scalar(&fb).is_none() && square_root_up_to_scalar(&f1).is_none();

    let f = &model.field;
    let mut pencil_b_controls = [false; 2];
    for (slot, mu) in [1i64, -1].iter().enumerate() {
        let mu = NfElem::from_int(f, *mu);
        let v = vec![mu.clone(), mu.clone(), mu];
        let r = model.restrict_to_xi(&v)?;
        let rr = r.ring().clone();
        let y = MPoly::var(&rr, 1);
        let r1 = r.substitute(&[MPoly::one(&rr), y.clone(), y.neg()])?;
        pencil_b_controls[slot] =
            square_root_up_to_scalar(&r).is_some() && square_root_up_to_scalar(&r1).is_some();
    }

    // (c) x0 = -x1 - x2
    let rc = PolyRing::<NfElem>::new(f, &["x1", "x2", "x3"]);
    let vars = MPoly::vars(&rc);
    let g = model.sextic.substitute(&[
        vars[0].add(&vars[1]).neg(),
        vars[0].clone(),
        vars[1].clone(),
        vars[2].clone(),
    ])?;
    let r1 = PolyRing::<NfElem>::new(f, &["x1"]);
    let x = MPoly::var(&r1, 0);
    let g1 = g.substitute(&[x.clone(), x.neg(), MPoly::one(&r1)])?;
    let closed_c = MPoly::parse(&r1, "-(1 + 2*t)*(4*x1^6 + 4*x1^4 - 4*x1^2 + 1)")?;

    Ok(ClassificationReport {
        pencil_a_line_multiplicity,
        pencil_b_closed_form: f1 == closed,
        pencil_b_odd_coefficients_vanish: coeff(1).is_zero() && coeff(3).is_zero(),
        pencil_b_constant_term: coeff(0) == expected_const,
        pencil_b_leading_coefficient: coeff(6) == expected_lead,
        pencil_b_not_square,
        pencil_b_controls,
        plane_c_closed_form: g1 == closed_c,
        plane_c_not_square: square_root_up_to_scalar(&g).is_none() && square_root_up_to_scalar(&g1).is_none(),
    })
}
