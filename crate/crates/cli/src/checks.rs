//! The check catalog. Every check renders its outcome as a string and
//! passes exactly when that string equals the expected one.

use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use a5fano::barth::{self, BarthFixtures, BarthModel, SurfaceFamily, Table2Report};
use a5fano::burkhardt::{self, BurkhardtModel};
use a5fano::lattice::GramMatrix;

use crate::report::{CheckResult, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Burkhardt,
    Barth,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Burkhardt => "burkhardt",
            Suite::Barth => "barth",
            Suite::All => "all",
        })
    }
}

type Outcome = Result<String, String>;

pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    /// What the check certifies, shown by `list`.
    pub claim: &'static str,
    pub expected: &'static str,
    run: fn(&Context) -> Outcome,
}

impl Check {
    pub fn full_name(&self) -> String {
        format!("{}/{}", self.suite, self.name)
    }

    pub fn run(&self, ctx: &Context) -> CheckResult {
        let start = Instant::now();
        let (status, actual) = match (self.run)(ctx) {
            Ok(a) if a == self.expected => (Status::Pass, a),
            Ok(a) => (Status::Fail, a),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        CheckResult {
            name: self.full_name(),
            status,
            expected: self.expected.to_string(),
            actual,
            millis: start.elapsed().as_millis() as u64,
        }
    }
}

/// Models shared between checks, built on first use.
pub struct Context {
    fixtures: BarthFixtures,
    burkhardt: OnceLock<BurkhardtModel>,
    gram: OnceLock<Result<GramMatrix, String>>,
    barth: OnceLock<Result<BarthModel, String>>,
    family: OnceLock<Result<SurfaceFamily, String>>,
    table2: OnceLock<Result<Table2Report, String>>,
}

impl Context {
    pub fn new(fixtures: BarthFixtures) -> Self {
        Context {
            fixtures,
            burkhardt: OnceLock::new(),
            gram: OnceLock::new(),
            barth: OnceLock::new(),
            family: OnceLock::new(),
            table2: OnceLock::new(),
        }
    }

    fn burkhardt(&self) -> &BurkhardtModel {
        self.burkhardt.get_or_init(burkhardt::build_model)
    }

    fn gram(&self) -> Result<&GramMatrix, String> {
        self.gram
            .get_or_init(|| self.burkhardt().build_gram().map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn barth(&self) -> Result<&BarthModel, String> {
        self.barth
            .get_or_init(|| barth::build_barth_with(&self.fixtures).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn family(&self) -> Result<&SurfaceFamily, String> {
        self.family
            .get_or_init(|| {
                let m = self.barth()?;
                barth::build_solid_surfaces(m).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn table2(&self) -> Result<&Table2Report, String> {
        self.table2
            .get_or_init(|| {
                let (m, fam) = (self.barth()?, self.family()?);
                let fixture = self.fixtures.table2().map_err(|e| e.to_string())?;
                barth::verify_table2_and_ranks(m, fam, &fixture).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `"9"` when every count is 9, otherwise the sorted distinct counts.
fn uniform(counts: &[usize]) -> String {
    let mut d = counts.to_vec();
    d.sort_unstable();
    d.dedup();
    match d.as_slice() {
        [one] => one.to_string(),
        _ => format!("{d:?}"),
    }
}

fn b_orbits(ctx: &Context) -> Outcome {
    let m = ctx.burkhardt();
    Ok(format!("orbit lengths {:?}; {} distinct points", m.orbit_lengths, m.distinct_points()))
}

fn b_nodes(ctx: &Context) -> Outcome {
    let r = ctx.burkhardt().verify_nodes().map_err(err)?;
    let mut s = format!("{}/{} nodes", r.nodes, r.checked);
    if let Some(f) = r.failures.first() {
        s += &format!("; first failure {f}");
    }
    Ok(s)
}

fn b_incidence(ctx: &Context) -> Outcome {
    let m = ctx.burkhardt();
    let mut on = 0;
    for p in &m.planes {
        on += usize::from(m.plane_on_quartic(p).map_err(err)?);
    }
    let (per_plane, per_point) = m.plane_incidence();
    Ok(format!(
        "{on}/{} planes on the quartic; {} nodes per plane; {} planes per node",
        m.planes.len(),
        uniform(&per_plane),
        uniform(&per_point)
    ))
}

fn b_meet_rule(ctx: &Context) -> Outcome {
    match ctx.burkhardt().verify_meet_rule() {
        Ok(n) => Ok(format!("{n}/780 pairs agree with the rule")),
        Err(e) => Ok(format!("first mismatch: {e}")),
    }
}

fn b_gram_rank(ctx: &Context) -> Outcome {
    let m = ctx.burkhardt();
    let g = ctx.gram()?;
    let block = |five| g.submatrix(&m.block_indices(five)).map(|b| b.rank()).map_err(err);
    Ok(format!(
        "block without 5: rank {}; block with 5: rank {}; full: rank {}; kernel {}",
        block(false)?,
        block(true)?,
        g.rank(),
        g.matrix().kernel_basis().len()
    ))
}

fn b_invariant_ranks(ctx: &Context) -> Outcome {
    let ranks = ctx.burkhardt().invariant_ranks(ctx.gram()?).map_err(err)?;
    Ok(ranks
        .iter()
        .map(|r| format!("{} {}/{}", r.subgroup, r.orbit_sum_rank, r.trace_dimension))
        .collect::<Vec<_>>()
        .join(", "))
}

fn x_orbits(ctx: &Context) -> Outcome {
    let m = ctx.barth()?;
    Ok(format!(
        "orbit lengths {:?}; {} distinct points; group order {} ({} projectively)",
        m.orbit_lengths(),
        m.distinct_points(),
        m.group().map_err(err)?.len(),
        m.projective_order().map_err(err)?
    ))
}

fn x_invariance(ctx: &Context) -> Outcome {
    let s = ctx.barth()?.verify_invariance().map_err(err)?;
    Ok(s.iter().map(|s| format!("{} scales B by {}", s.generator, s.scalar)).collect::<Vec<_>>().join(", "))
}

fn x_nodes(ctx: &Context) -> Outcome {
    let r = ctx.barth()?.verify_nodes().map_err(err)?;
    let mut s = format!("{}/{} nodes", r.nodes, r.checked);
    if let Some(f) = r.failures.first() {
        s += &format!("; first failure {f}");
    }
    Ok(s)
}

fn x_restrictions(ctx: &Context) -> Outcome {
    let m = ctx.barth()?;
    let r = barth::verify_plane_restrictions(m).map_err(err)?;
    let smooth = r.xi.iter().filter(|x| x.smooth).count();
    let conics = r.theta.iter().filter(|t| t.conic_type == a5fano::multipoly::ConicType::Irreducible).count();
    let (lines_xi, lines_theta) = m.line_counts();
    Ok(format!(
        "{smooth}/{} smooth double cubics; square identities {}, {}; {conics}/{} line^2 * irreducible conic^2; \
         constant on Theta(-1,0,t) {}; lines on x3 = 0: {lines_xi} and {lines_theta}",
        r.xi.len(),
        yes(r.square_identities[0]),
        yes(r.square_identities[1]),
        r.theta.len(),
        r.theta_scalar.map_or("none".to_string(), |s| s.to_string()),
    ))
}

fn x_classification(ctx: &Context) -> Outcome {
    let r = barth::verify_plane_classification(ctx.barth()?).map_err(err)?;
    Ok(format!(
        "line multiplicity {}; f(1,x1,-x1) closed form {}, coefficients {}, non-square {}; \
         mu = 1, -1 squares {}, {}; g(x1,-x1,1) closed form {}, non-square {}",
        r.pencil_a_line_multiplicity,
        yes(r.pencil_b_closed_form),
        yes(r.pencil_b_odd_coefficients_vanish && r.pencil_b_constant_term && r.pencil_b_leading_coefficient),
        yes(r.pencil_b_not_square),
        yes(r.pencil_b_controls[0]),
        yes(r.pencil_b_controls[1]),
        yes(r.plane_c_closed_form),
        yes(r.plane_c_not_square),
    ))
}

fn x_surfaces(ctx: &Context) -> Outcome {
    let (m, fam) = (ctx.barth()?, ctx.family()?);
    let mut on = 0;
    for s in fam.plus.iter().chain(&fam.minus) {
        on += usize::from(barth::solid_residue(m, s).map_err(err)?.is_zero());
    }
    let closed = barth::surface_permutations(m, fam).is_ok();
    Ok(format!(
        "{} + {} surfaces; {on} on the double solid; closed under the group {}",
        fam.plus.len(),
        fam.minus.len(),
        yes(closed)
    ))
}

fn x_table1(ctx: &Context) -> Outcome {
    let (m, fam) = (ctx.barth()?, ctx.family()?);
    let rows = ctx.fixtures.table1(&m.field).map_err(err)?;
    let r = barth::verify_table1(m, fam, &rows).map_err(err)?;
    let mut s = format!(
        "{}/{} rows; printed surfaces {}, {}",
        r.matched(),
        r.rows.len(),
        yes(r.printed_surfaces[0]),
        yes(r.printed_surfaces[1])
    );
    if let Some(e) = r.first_failure() {
        s += &format!("; first mismatch: {e}");
    }
    Ok(s)
}

fn x_table2(ctx: &Context) -> Outcome {
    let r = ctx.table2()?;
    let mut s = format!(
        "{}/{} entries; minus family equal {}; rank {}; rows one -2, twelve 1, seven 0 {}; equivariant {}; \
         (1,1,1) with (1,1,-1) and (1,-1,-1): {}, {}",
        r.matched,
        r.entries,
        yes(r.minus_equals_plus),
        r.rank,
        yes(r.row_pattern),
        yes(r.equivariant),
        r.example_pairs[0],
        r.example_pairs[1],
    );
    if let Some(e) = r.first_failure() {
        s += &format!("; first mismatch: {e}");
    }
    Ok(s)
}

fn x_invariant_rank(ctx: &Context) -> Outcome {
    let r = ctx.table2()?;
    Ok(format!("orbit-sum rank {}; trace dimension {}", r.orbit_sum_rank, r.trace_dimension))
}

fn x_rationality(_: &Context) -> Outcome {
    let r = barth::rationality_checks().map_err(err)?;
    let list = |b: &[bool]| b.iter().map(|&x| yes(x)).collect::<Vec<_>>().join(", ");
    let mut s = format!(
        "branch sextic {}; identities {}; line rank {}",
        yes(r.branch_sextic),
        list(&r.identities),
        r.line_rank
    );
    if !r.all_pass() {
        s += &format!("; with -s in the factors (2)-(5): {}", list(&r.sign_flipped));
    }
    Ok(s)
}

pub static CATALOG: &[Check] = &[
    Check {
        suite: Suite::Burkhardt,
        name: "orbits",
        claim: "the singular points form S6-orbits of lengths 30 and 15",
        expected: "orbit lengths [30, 15]; 45 distinct points",
        run: b_orbits,
    },
    Check {
        suite: Suite::Burkhardt,
        name: "nodes",
        claim: "all 45 singular points are nodes",
        expected: "45/45 nodes",
        run: b_nodes,
    },
    Check {
        suite: Suite::Burkhardt,
        name: "incidence",
        claim: "the 40 j-planes lie on the quartic and pass through nine nodes each",
        expected: "40/40 planes on the quartic; 9 nodes per plane; 8 planes per node",
        run: b_incidence,
    },
    Check {
        suite: Suite::Burkhardt,
        name: "meet-rule",
        claim: "pairwise plane intersections follow the index rule",
        expected: "780/780 pairs agree with the rule",
        run: b_meet_rule,
    },
    Check {
        suite: Suite::Burkhardt,
        name: "gram-rank",
        claim: "both 20-plane Gram blocks and the 40-plane Gram matrix have rank 16",
        expected: "block without 5: rank 16; block with 5: rank 16; full: rank 16; kernel 24",
        run: b_gram_rank,
    },
    Check {
        suite: Suite::Burkhardt,
        name: "invariant-ranks",
        claim: "invariant class-group ranks for S6, A6 and both A5 (orbit sums / trace)",
        expected: "S6 1/1, A6 1/1, A5 standard 1/1, A5 non-standard 2/2",
        run: b_invariant_ranks,
    },
    Check {
        suite: Suite::Barth,
        name: "orbits",
        claim: "the icosahedral group has order 60 and orbits of lengths 15, 30, 20",
        expected: "orbit lengths [15, 30, 20]; 65 distinct points; group order 60 (60 projectively)",
        run: x_orbits,
    },
    Check {
        suite: Suite::Barth,
        name: "invariance",
        claim: "the sextic is invariant under N, R and M",
        expected: "N scales B by 1, R scales B by 1, M scales B by 1",
        run: x_invariance,
    },
    Check {
        suite: Suite::Barth,
        name: "nodes",
        claim: "all 65 points are nodes of the sextic",
        expected: "65/65 nodes",
        run: x_nodes,
    },
    Check {
        suite: Suite::Barth,
        name: "restrictions",
        claim: "restrictions of the sextic to the 20 planes Xi and the 6 planes Theta",
        expected:
            "20/20 smooth double cubics; square identities yes, yes; 6/6 line^2 * irreducible conic^2; \
                   constant on Theta(-1,0,t) -1 - 2*t; lines on x3 = 0: 10 and 6",
        run: x_restrictions,
    },
    Check {
        suite: Suite::Barth,
        name: "plane-classification",
        claim: "planes through the lines on x3 = 0 other than Xi and Theta do not split",
        expected: "line multiplicity 1; f(1,x1,-x1) closed form yes, coefficients yes, non-square yes; \
                   mu = 1, -1 squares yes, yes; g(x1,-x1,1) closed form yes, non-square yes",
        run: x_classification,
    },
    Check {
        suite: Suite::Barth,
        name: "surfaces",
        claim: "the 40 surfaces over the planes Xi lie on the double solid",
        expected: "20 + 20 surfaces; 40 on the double solid; closed under the group yes",
        run: x_surfaces,
    },
    Check {
        suite: Suite::Barth,
        name: "table1",
        claim: "group words carrying Xi+(1,1,1) to each Xi+",
        expected: "20/20 rows; printed surfaces yes, yes",
        run: x_table1,
    },
    Check {
        suite: Suite::Barth,
        name: "table2",
        claim: "intersection matrix of the 20 surfaces Xi+, rank 14",
        expected: "400/400 entries; minus family equal yes; rank 14; rows one -2, twelve 1, seven 0 yes; \
                   equivariant yes; (1,1,1) with (1,1,-1) and (1,-1,-1): 1, 0",
        run: x_table2,
    },
    Check {
        suite: Suite::Barth,
        name: "invariant-rank",
        claim: "the invariant class group of the double solid has rank 1",
        expected: "orbit-sum rank 1; trace dimension 1",
        run: x_invariant_rank,
    },
    Check {
        suite: Suite::Barth,
        name: "rationality",
        claim: "identities behind the rational parametrization of the double solid",
        expected: "branch sextic yes; identities yes, yes, yes, yes, yes; line rank 4",
        run: x_rationality,
    },
];

/// Checks of `suite`, optionally narrowed to `names` (bare or
/// `suite/name`). Unknown names are returned as the error.
pub fn select(suite: Suite, names: &[String]) -> Result<Vec<&'static Check>, String> {
    let in_suite: Vec<&Check> = CATALOG.iter().filter(|c| suite == Suite::All || c.suite == suite).collect();
    if names.is_empty() {
        return Ok(in_suite);
    }
    for n in names {
        if !in_suite.iter().any(|c| c.name == n || c.full_name() == *n) {
            return Err(format!("no check named '{n}' in suite {suite}"));
        }
    }
    Ok(in_suite.into_iter().filter(|c| names.iter().any(|n| c.name == n || c.full_name() == *n)).collect())
}
