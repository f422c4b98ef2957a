use std::collections::HashMap;

use num_traits::ToPrimitive;

use crate::burkhardt::Sign;
use crate::exactfield::{Field, NfElem, Rational};
use crate::groups::{eval_word, GroupWord, MatElem, Perm};
use crate::lattice::{invariant_dimension_via_trace, orbit_sum_gram, ExactMatrix, GramMatrix};
use crate::multipoly::{restrict_to_line, MPoly};

use super::fixtures::{parse_scalar, Table1Row};
use super::{fmt_vector, lin_forms, tau_elem, BarthError, BarthModel, CUBIC_111};

/// `Xi+_(1,1,-1)` as printed next to the matrix `M^3`.
pub const CUBIC_11M_PLUS: &str =
    "(t - 2)*(x0*x1^2 + x1*x2^2 - x2*x0^2) - (t - 3)*x0*x1*x2 - (x0^2*x1 - x1^2*x2 + x2^2*x0)";
/// `Xi+_(1,-1,-1)` as printed next to the matrix `RN`.
pub const CUBIC_1MM_PLUS: &str =
    "(t - 2)*(x0*x1^2 - x1*x2^2 - x2*x0^2) + (t - 3)*x0*x1*x2 + (x0^2*x1 + x1^2*x2 - x2^2*x0)";

/// A surface `{x3 = v . x, w = sign * C * c}` on the double solid, with
/// `C^2 = 4(5t + 3)`. The stored cubic already includes the sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolidSurface {
    pub v: Vec<NfElem>,
    pub sign: Sign,
    /// `x3 - v . x` in `x0..x3`.
    pub linear: MPoly<NfElem>,
    /// Cubic in `x0, x1, x2`.
    pub cubic: MPoly<NfElem>,
}

impl SolidSurface {
    fn new(model: &BarthModel, v: Vec<NfElem>, sign: Sign, cubic: MPoly<NfElem>) -> Self {
        let mut coeffs: Vec<NfElem> = v.iter().map(NfElem::neg).collect();
        coeffs.push(NfElem::one(&model.field));
        SolidSurface { linear: MPoly::linear(&model.ring, &coeffs), v, sign, cubic }
    }

    pub fn label(&self) -> String {
        format!("Xi{}{}", self.sign, fmt_vector(&self.v))
    }

    /// Image under a rotation `g` of `x0, x1, x2`; `w` is fixed because the
    /// sextic is invariant with scalar one.
    pub fn transport(&self, model: &BarthModel, g: &MatElem<NfElem>) -> Result<Self, BarthError> {
        let v = g.dual().apply_point(&self.v);
        let cubic = g.act_on_poly(&self.cubic)?;
        Ok(SolidSurface::new(model, v, self.sign, cubic))
    }

    fn negated(&self, model: &BarthModel) -> Self {
        let sign = match self.sign {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        };
        SolidSurface::new(model, self.v.clone(), sign, self.cubic.neg())
    }
}

/// The 40 surfaces over the planes `Xi_v`, in the order of the plane list,
/// plus the labels of the 12 surfaces over the planes `Theta_u`.
#[derive(Debug, Clone)]
pub struct SurfaceFamily {
    pub plus: Vec<SolidSurface>,
    pub minus: Vec<SolidSurface>,
    pub theta_labels: Vec<String>,
}

impl SurfaceFamily {
    pub fn index_of(&self, v: &[NfElem]) -> Option<usize> {
        self.plus.iter().position(|s| s.v == v)
    }
}

/// `C^2 c^2 + 4 l1...l6 - q3^2` on the plane of `s`, which must vanish.
pub fn solid_residue(model: &BarthModel, s: &SolidSurface) -> Result<MPoly<NfElem>, BarthError> {
    let ring = &model.ring;
    let l = lin_forms(ring);
    let prod = MPoly::product(ring, l.iter()).scale(&NfElem::from_int(&model.field, 4));
    let q3_sq = MPoly::parse(ring, "(1 + 2*t)*x3^2*(x0^2 + x1^2 + x2^2 - x3^2)^2")?;
    let lhs = prod.sub(&q3_sq);
    let mut images = MPoly::vars(&model.plane_ring);
    images.push(MPoly::linear(&model.plane_ring, &s.v));
    let on_plane = lhs.substitute(&images)?;
    let c2 = tau_elem(&model.field, 12, 20);
    Ok(s.cubic.mul(&s.cubic).scale(&c2).add(&on_plane))
}

pub fn build_solid_surfaces(model: &BarthModel) -> Result<SurfaceFamily, BarthError> {
    let f = &model.field;
    let ones = vec![NfElem::one(f); 3];
    let base = SolidSurface::new(model, ones, Sign::Plus, MPoly::parse(&model.plane_ring, CUBIC_111)?);
    let gens = model.generator_matrices();
    let mut found: HashMap<Vec<NfElem>, SolidSurface> = HashMap::from([(base.v.clone(), base.clone())]);
    let mut queue = vec![base];
    while let Some(s) = queue.pop() {
        for g in &gens {
            let t = s.transport(model, g)?;
            match found.get(&t.v) {
                Some(old) if old.cubic == t.cubic => {}
                Some(old) if old.cubic == t.cubic.neg() => {
                    return Err(BarthError::SurfaceOrbit(format!(
                        "both signs occur over {}",
                        fmt_vector(&old.v)
                    )))
                }
                Some(old) => {
                    return Err(BarthError::SurfaceOrbit(format!(
                        "two different cubics over {}",
                        fmt_vector(&old.v)
                    )))
                }
                None => {
                    found.insert(t.v.clone(), t.clone());
                    queue.push(t);
                }
            }
        }
    }
    if found.len() != model.xi_planes.len() {
        return Err(BarthError::SurfaceOrbit(format!(
            "orbit has {} surfaces, plane list has {}",
            found.len(),
            model.xi_planes.len()
        )));
    }
    let mut plus = Vec::new();
    for v in &model.xi_planes {
        let s = found
            .remove(v)
            .ok_or_else(|| BarthError::SurfaceOrbit(format!("no surface over {}", fmt_vector(v))))?;
        if !solid_residue(model, &s)?.is_zero() {
            return Err(BarthError::SurfaceNotOnSolid(s.label()));
        }
        plus.push(s);
    }
    let minus = plus.iter().map(|s| s.negated(model)).collect();
    let theta_labels = model
        .theta_planes
        .iter()
        .flat_map(|u| [Sign::Plus, Sign::Minus].map(|s| format!("Theta{s}{}", fmt_vector(u))))
        .collect();
    Ok(SurfaceFamily { plus, minus, theta_labels })
}

/// `-2` for a surface with itself; otherwise `1` if the two surfaces share
/// the line over `{x3 = v.x} ∩ {x3 = v'.x}` and `0` if they meet in finitely
/// many points.
pub fn surface_pair_intersection(a: &SolidSurface, b: &SolidSurface) -> Result<i64, BarthError> {
    if a.sign != b.sign {
        return Err(BarthError::MixedSigns);
    }
    if a.v == b.v {
        if a.cubic != b.cubic {
            return Err(BarthError::SurfaceOrbit(format!(
                "{} and {} differ over the same plane",
                a.label(),
                b.label()
            )));
        }
        return Ok(-2);
    }
    let d: Vec<NfElem> = a.v.iter().zip(&b.v).map(|(x, y)| x.sub(y)).collect();
    let ctx = d[0].ctx();
    let line = ExactMatrix::from_rows(&ctx, vec![d]).expect("1x3").kernel_basis();
    let diff = a.cubic.sub(&b.cubic);
    let r = restrict_to_line(&diff, &line[0], &line[1])?;
    Ok(if r.is_zero() { 1 } else { 0 })
}

#[derive(Debug, Clone)]
pub struct Table1Outcome {
    pub word: GroupWord,
    pub v: Vec<NfElem>,
    pub matched: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Table1Report {
    pub rows: Vec<Table1Outcome>,
    /// The printed equations of `Xi+_(1,1,-1)` and `Xi+_(1,-1,-1)` agree with
    /// the orbit.
    pub printed_surfaces: [bool; 2],
}

impl Table1Report {
    pub fn matched(&self) -> usize {
        self.rows.iter().filter(|r| r.matched).count()
    }

    pub fn all_pass(&self) -> bool {
        self.matched() == self.rows.len() && self.printed_surfaces.iter().all(|&b| b)
    }

    pub fn first_failure(&self) -> Option<BarthError> {
        self.rows.iter().enumerate().find(|(_, r)| !r.matched).map(|(row, r)| BarthError::Table1Mismatch {
            row,
            word: r.word.to_string(),
            detail: r.detail.clone(),
        })
    }
}

pub fn verify_table1(
    model: &BarthModel,
    family: &SurfaceFamily,
    rows: &[Table1Row],
) -> Result<Table1Report, BarthError> {
    let env = model.generator_map();
    let id = MatElem::identity(&model.field, 3);
    let base = &family.plus[family
        .index_of(&[NfElem::one(&model.field), NfElem::one(&model.field), NfElem::one(&model.field)])
        .ok_or_else(|| BarthError::SurfaceOrbit("no surface over (1, 1, 1)".into()))?];
    let mut out = Vec::new();
    for row in rows {
        let g = eval_word(&row.word, &env, &id)?;
        let t = base.transport(model, &g)?;
        let (matched, detail) = if t.v != row.v {
            (false, format!("lands over {}, expected {}", fmt_vector(&t.v), fmt_vector(&row.v)))
        } else {
            match family.index_of(&t.v) {
                Some(i) if family.plus[i].cubic == t.cubic => (true, String::new()),
                Some(i) if family.minus[i].cubic == t.cubic => {
                    (false, format!("lands on {}", family.minus[i].label()))
                }
                _ => (false, "cubic differs from the family".into()),
            }
        };
        out.push(Table1Outcome { word: row.word.clone(), v: row.v.clone(), matched, detail });
    }
    let f = &model.field;
    let mut printed_surfaces = [false; 2];
    for (slot, (v, text)) in [([1, 1, -1], CUBIC_11M_PLUS), ([1, -1, -1], CUBIC_1MM_PLUS)].iter().enumerate()
    {
        let v: Vec<NfElem> = v.iter().map(|&a| NfElem::from_int(f, a)).collect();
        let c = MPoly::parse(&model.plane_ring, text)?;
        printed_surfaces[slot] = family.index_of(&v).is_some_and(|i| family.plus[i].cubic == c);
    }
    Ok(Table1Report { rows: out, printed_surfaces })
}

#[derive(Debug, Clone)]
pub struct Table2Report {
    pub computed: GramMatrix,
    pub entries: usize,
    pub matched: usize,
    /// `(row, col, fixture, computed)` in fixture order.
    pub mismatches: Vec<(usize, usize, i64, i64)>,
    pub minus_equals_plus: bool,
    pub rank: usize,
    /// Each row has one `-2`, twelve `1` and seven `0`.
    pub row_pattern: bool,
    /// Every rotation permutes the `+` surfaces and preserves the pairing.
    pub equivariant: bool,
    pub orbit_sum_rank: usize,
    pub trace_dimension: usize,
    /// Pairings of `Xi+_(1,1,1)` with `Xi+_(1,1,-1)` and `Xi+_(1,-1,-1)`.
    pub example_pairs: [i64; 2],
}

impl Table2Report {
    pub fn all_pass(&self) -> bool {
        self.mismatches.is_empty()
            && self.matched == self.entries
            && self.minus_equals_plus
            && self.rank == 14
            && self.row_pattern
            && self.equivariant
            && self.orbit_sum_rank == 1
            && self.trace_dimension == 1
    }

    pub fn first_failure(&self) -> Option<BarthError> {
        self.mismatches.first().map(|&(row, col, expected, computed)| BarthError::Table2Mismatch {
            row,
            col,
            expected,
            computed,
        })
    }
}

fn pairing_matrix(surfaces: &[SolidSurface]) -> Result<Vec<Vec<i64>>, BarthError> {
    let n = surfaces.len();
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = surface_pair_intersection(&surfaces[i], &surfaces[j])?;
            m[i][j] = x;
            m[j][i] = x;
        }
    }
    Ok(m)
}

/// How each rotation permutes the `+` surfaces.
pub fn surface_permutations(model: &BarthModel, family: &SurfaceFamily) -> Result<Vec<Perm>, BarthError> {
    let mut out = Vec::new();
    for g in model.group()? {
        let mut images = Vec::new();
        for s in &family.plus {
            let t = s.transport(model, &g)?;
            let i = family
                .index_of(&t.v)
                .filter(|&i| family.plus[i].cubic == t.cubic)
                .ok_or_else(|| BarthError::SurfaceOrbit(format!("{} leaves the + family", s.label())))?;
            images.push(i);
        }
        out.push(Perm::new(images)?);
    }
    Ok(out)
}

fn label_vector(model: &BarthModel, label: &str) -> Option<Vec<NfElem>> {
    let inner = label.trim().strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|s| parse_scalar(&model.field, s)).collect()
}

pub fn verify_table2_and_ranks(
    model: &BarthModel,
    family: &SurfaceFamily,
    fixture: &GramMatrix,
) -> Result<Table2Report, BarthError> {
    let plus = pairing_matrix(&family.plus)?;
    let minus = pairing_matrix(&family.minus)?;
    let labels: Vec<String> = family.plus.iter().map(|s| fmt_vector(&s.v)).collect();
    let computed = GramMatrix::from_int_rows(labels, &plus)?;

    // fixture rows are matched to surfaces through their labels
    let order: Vec<Option<usize>> =
        fixture.labels().iter().map(|l| label_vector(model, l).and_then(|v| family.index_of(&v))).collect();
    let n = fixture.len();
    let mut mismatches = Vec::new();
    let mut matched = 0;
    for i in 0..n {
        for j in 0..n {
            let expected = fixture.entry(i, j);
            let got = match (order[i], order[j]) {
                (Some(a), Some(b)) => plus[a][b],
                _ => i64::MIN,
            };
            if *expected == Rational::from_int(&(), got) {
                matched += 1;
            } else {
                let e = expected.to_integer().to_i64().unwrap_or(i64::MIN);
                mismatches.push((i, j, e, got));
            }
        }
    }

    let row_pattern = plus.iter().all(|row| {
        let count = |x: i64| row.iter().filter(|&&y| y == x).count();
        count(-2) == 1 && count(1) == 12 && count(0) == 7
    });
    let perms = surface_permutations(model, family)?;
    let equivariant = perms.iter().all(|p| computed.preserved_by(p));
    let everything: Vec<usize> = (0..computed.len()).collect();
    let orbit_sum_rank = orbit_sum_gram(&computed, &[everything])?.rank();
    let trace_dimension = invariant_dimension_via_trace(&computed, &perms)?;

    let f = &model.field;
    let vec3 = |a: [i64; 3]| a.iter().map(|&x| NfElem::from_int(f, x)).collect::<Vec<_>>();
    let idx = |a: [i64; 3]| family.index_of(&vec3(a)).expect("listed plane");
    let base = idx([1, 1, 1]);
    let example_pairs = [plus[base][idx([1, 1, -1])], plus[base][idx([1, -1, -1])]];

    Ok(Table2Report {
        rank: computed.rank(),
        computed,
        entries: n * n,
        matched,
        mismatches,
        minus_equals_plus: minus == plus,
        row_pattern,
        equivariant,
        orbit_sum_rank,
        trace_dimension,
        example_pairs,
    })
}
