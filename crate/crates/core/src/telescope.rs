//! Executable form of the constructive proof that (E^λ)^⊗N contains a
//! trivial SU(N) component: the telescope ansatz, its expansion plan, a
//! step-by-step simulator checked against the expansion conditions, and the
//! Δ/δ bookkeeping with its piecewise closed forms.
//!
//! Step k appends, for each label m = 1..N−1, one telescope of boxes: the
//! telescope T_{p,q} is the column (λ_{p+q−1}, λ_{p+q−2}−λ_{p+q−1}, …,
//! λ_p−λ_{p+1}) read top to bottom; its label is p and its length q. The
//! ansatz places label m's telescope with top row beg(m,k) and length
//! len(m,k). Step 1 builds λ itself from the empty diagram; after step N
//! the diagram is the rectangle (|λ|)^N.

use thiserror::Error;

use crate::lrcalc::{validate_filling, LabeledDiagram};
use crate::young::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TelescopeError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("diagram has {rows} rows, more than the allowed {max}")]
    TooManyRows { rows: usize, max: usize },
    #[error("condition {condition} violated at step {step}")]
    ConditionViolation { step: usize, condition: u8 },
}

/// Telescope T_{p,q}: `entries` top to bottom, summing to λ_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Telescope {
    pub label: usize,
    pub length: usize,
    pub entries: Vec<u32>,
}

/// T_{p,q} for a given λ (λ_j = 0 past the last part).
pub fn telescope(p: usize, q: usize, lambda: &Partition) -> Telescope {
    Telescope { label: p, length: q, entries: telescope_entries(p, q, lambda) }
}

/// Entries of T_{p,q} top to bottom: (λ_{p+q−1}, λ_{p+q−2}−λ_{p+q−1}, …,
/// λ_p−λ_{p+1}).
pub fn telescope_entries(p: usize, q: usize, lambda: &Partition) -> Vec<u32> {
    let mut entries = Vec::with_capacity(q);
    for r in (1..=q).rev() {
        entries.push(telescope_entry(p, q, r, lambda));
    }
    entries
}

/// T^r_{p,q}, the r-th entry counted from the bottom.
fn telescope_entry(p: usize, q: usize, r: usize, lambda: &Partition) -> u32 {
    if r == 0 || r > q {
        0
    } else if r == q {
        lambda.part(p + q - 1)
    } else {
        lambda.part(p + r - 1) - lambda.part(p + r)
    }
}

/// Row of the top virtual box of label m's telescope at step k.
pub fn beg(m: usize, k: usize, n_parties: usize) -> Result<usize, TelescopeError> {
    check_mk(m, k, n_parties)?;
    Ok(if k <= n_parties - m { m } else { m + 1 })
}

/// Telescope length for label m at step k.
pub fn len(m: usize, k: usize, n_parties: usize) -> Result<usize, TelescopeError> {
    check_mk(m, k, n_parties)?;
    Ok(if k <= n_parties - m { k } else { n_parties - m })
}

/// Row of the bottom virtual box: end = beg + len − 1.
pub fn end(m: usize, k: usize, n_parties: usize) -> Result<usize, TelescopeError> {
    Ok(beg(m, k, n_parties)? + len(m, k, n_parties)? - 1)
}

fn check_mk(m: usize, k: usize, n_parties: usize) -> Result<(), TelescopeError> {
    if n_parties < 2 || m == 0 || m > n_parties - 1 || k == 0 || k > n_parties {
        return Err(TelescopeError::IndexOutOfRange(format!(
            "label {m}, step {k} for N={n_parties}"
        )));
    }
    Ok(())
}

/// (#n)^k_i — the number of boxes with label n appended to row i at step k,
/// read off the telescope placement.
pub fn boxes_added(n: usize, k: usize, i: usize, lambda: &Partition, n_parties: usize) -> u32 {
    if n == 0 || n >= n_parties || k == 0 || k > n_parties || i == 0 || i > n_parties {
        return 0;
    }
    if k <= n_parties - n {
        telescope_entry(n, k, (n + k).wrapping_sub(i), lambda)
    } else {
        telescope_entry(n, n_parties - n, n_parties - i + 1, lambda)
    }
}

/// The same quantity from the four-domain piecewise closed form
/// (A1/A2/B1/B2); agreement with `boxes_added` is a tested property.
pub fn boxes_added_closed(
    n: usize,
    k: usize,
    i: usize,
    lambda: &Partition,
    n_parties: usize,
) -> i64 {
    match closed_domain(n, k, i, n_parties) {
        Some(PieceDomain::A1) => lambda.part_diff(2 * n + k - i - 1, 2 * n + k - i),
        Some(PieceDomain::A2) => i64::from(lambda.part(n + k - 1)),
        Some(PieceDomain::B1) => {
            lambda.part_diff(n + n_parties - i, n + n_parties - i + 1)
        }
        Some(PieceDomain::B2) => i64::from(lambda.part(n_parties - 1)),
        None => 0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceDomain {
    A1,
    A2,
    B1,
    B2,
}

/// Which of the four closed-form domains (n, k, i) falls in, if any.
pub fn closed_domain(n: usize, k: usize, i: usize, n_parties: usize) -> Option<PieceDomain> {
    let in_lattice = |x: usize| (1..=n_parties).contains(&x);
    if !in_lattice(n) || !in_lattice(k) || !in_lattice(i) {
        return None;
    }
    if k + n <= n_parties && k + n >= 1 + i {
        if n < i {
            return Some(PieceDomain::A1);
        }
        if n == i {
            return Some(PieceDomain::A2);
        }
        return None;
    }
    if k + n > n_parties {
        if n + 1 < i {
            return Some(PieceDomain::B1);
        }
        if n + 1 == i {
            return Some(PieceDomain::B2);
        }
    }
    None
}

/// Placement of one label's telescope within one step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelPlacement {
    pub label: usize,
    pub beg: usize,
    pub len: usize,
    /// Boxes per row, top to bottom: row beg+j receives counts[j].
    pub counts: Vec<u32>,
}

/// One step of the ansatz: labels applied in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepPlan {
    pub step: usize,
    pub labels: Vec<LabelPlacement>,
}

/// The full ansatz: N steps, labels 1..N−1 each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionPlan {
    pub n_parties: usize,
    pub lambda: Partition,
    pub steps: Vec<StepPlan>,
}

/// Builds the expansion plan for λ and N per the ansatz equations.
pub fn build_expansion_plan(
    lambda: &Partition,
    n_parties: usize,
) -> Result<ExpansionPlan, TelescopeError> {
    if n_parties == 0 || lambda.rows() > n_parties.saturating_sub(1) {
        return Err(TelescopeError::TooManyRows {
            rows: lambda.rows(),
            max: n_parties.saturating_sub(1),
        });
    }
    let mut steps = Vec::with_capacity(n_parties);
    for k in 1..=n_parties {
        let mut labels = Vec::new();
        for m in 1..n_parties {
            let beg = beg(m, k, n_parties)?;
            let len = len(m, k, n_parties)?;
            let counts = (0..len)
                .map(|j| boxes_added(m, k, beg + j, lambda, n_parties))
                .collect();
            labels.push(LabelPlacement { label: m, beg, len, counts });
        }
        steps.push(StepPlan { step: k, labels });
    }
    Ok(ExpansionPlan { n_parties, lambda: lambda.clone(), steps })
}

/// Applies the plan step by step, validating each step's filling and the
/// final rectangular shape (|λ|)^N. Returns the final shape and the
/// per-step labeled diagrams.
pub fn execute_plan(
    plan: &ExpansionPlan,
) -> Result<(Partition, Vec<LabeledDiagram>), TelescopeError> {
    let n = plan.n_parties;
    let mut shape = Partition::empty();
    let mut trace = Vec::with_capacity(n);
    for step in &plan.steps {
        let mut appended: Vec<Vec<u32>> = vec![Vec::new(); n];
        for placement in &step.labels {
            for (j, &count) in placement.counts.iter().enumerate() {
                let row = placement.beg + j - 1;
                appended[row].extend(std::iter::repeat(placement.label as u32).take(count as usize));
            }
        }
        let diagram = LabeledDiagram::new(shape.clone(), appended);
        let report = validate_filling(&diagram, n);
        if !report.passes() {
            return Err(TelescopeError::ConditionViolation {
                step: step.step,
                condition: report.failed_conditions()[0],
            });
        }
        shape = diagram.final_shape().expect("condition 1 passed");
        trace.push(diagram);
    }
    let width = u32::try_from(plan.lambda.weight()).expect("weight fits u32");
    if shape != Partition::rectangle(width, if width == 0 { 0 } else { n }) {
        return Err(TelescopeError::ConditionViolation { step: n, condition: 5 });
    }
    Ok((shape, trace))
}

/// Δ^k_i from its defining sum over (#n)^s_j: the difference between the
/// lengths of rows i and i+1 after steps 1..k−1.
pub fn delta(i: usize, k: usize, lambda: &Partition, n_parties: usize) -> Result<i64, TelescopeError> {
    if i == 0 || i >= n_parties || k == 0 || k > n_parties {
        return Err(TelescopeError::IndexOutOfRange(format!(
            "delta index i={i}, k={k} for N={n_parties}"
        )));
    }
    let mut total = 0i64;
    for n in 1..=i + 1 {
        for s in 1..k {
            total += i64::from(boxes_added(n, s, i, lambda, n_parties));
            total -= i64::from(boxes_added(n, s, i + 1, lambda, n_parties));
        }
    }
    Ok(total)
}

/// δ^k_i(m): the offset between the rightmost label-(m−1) box of row i and
/// the rightmost label-m box of row i+1, boxes of step k left-aligned.
pub fn small_delta(
    i: usize,
    k: usize,
    m: usize,
    lambda: &Partition,
    n_parties: usize,
) -> Result<i64, TelescopeError> {
    if i == 0 || i >= n_parties || k == 0 || k > n_parties || m == 0 || m >= n_parties {
        return Err(TelescopeError::IndexOutOfRange(format!(
            "small delta index i={i}, k={k}, m={m} for N={n_parties}"
        )));
    }
    let mut total = 0i64;
    for n in 1..=m {
        total += i64::from(boxes_added(n, k, i + 1, lambda, n_parties));
    }
    for n in 1..m {
        total -= i64::from(boxes_added(n, k, i, lambda, n_parties));
    }
    Ok(total)
}

/// Outcome of the four verification checks for one (λ, N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub delta_nonnegative: bool,
    pub delta_dominates: bool,
    pub steps_valid: bool,
    pub final_rectangle: bool,
    pub failures: Vec<String>,
}

impl ConditionReport {
    pub fn passes(&self) -> bool {
        self.delta_nonnegative && self.delta_dominates && self.steps_valid && self.final_rectangle
    }
}

/// Checks Δ ≥ 0 and Δ ≥ δ(m) over all in-range indices, plus the direct
/// row/column counting conditions on the simulated trace.
pub fn verify_conditions(
    lambda: &Partition,
    n_parties: usize,
) -> Result<ConditionReport, TelescopeError> {
    let plan = build_expansion_plan(lambda, n_parties)?;
    let mut report = ConditionReport {
        delta_nonnegative: true,
        delta_dominates: true,
        steps_valid: true,
        final_rectangle: true,
        failures: Vec::new(),
    };

    for i in 1..n_parties {
        for k in 1..=n_parties {
            let d = delta(i, k, lambda, n_parties)?;
            if d < 0 {
                report.delta_nonnegative = false;
                report.failures.push(format!("delta({i},{k}) = {d} < 0"));
            }
            for m in 1..n_parties {
                let sd = small_delta(i, k, m, lambda, n_parties)?;
                if d < sd {
                    report.delta_dominates = false;
                    report
                        .failures
                        .push(format!("delta({i},{k}) = {d} < small_delta(m={m}) = {sd}"));
                }
            }
        }
    }

    match execute_plan(&plan) {
        Ok(_) => {}
        Err(TelescopeError::ConditionViolation { step, condition }) => {
            if condition == 5 && step == n_parties {
                report.final_rectangle = false;
            } else {
                report.steps_valid = false;
            }
            report
                .failures
                .push(format!("condition {condition} violated at step {step}"));
        }
        Err(e) => return Err(e),
    }

    Ok(report)
}

/// Symbolic entries of the printed N=6 tables, evaluated at a concrete λ.
/// Entries are sums of ±λ_{p,q}; `None` marks cells the tables leave blank.
pub mod n6_tables {
    use crate::young::Partition;

    type Term = (i64, usize, usize);

    fn eval(lambda: &Partition, terms: &[Term]) -> i64 {
        terms.iter().map(|&(s, p, q)| s * lambda.part_diff(p, q)).sum()
    }

    /// Δ^k_i for N=6, i ∈ 1..=5, k ∈ 2..=6.
    pub fn delta(i: usize, k: usize, lambda: &Partition) -> Option<i64> {
        let terms: &[Term] = match (i, k) {
            (1, 2) => &[(1, 1, 2)],
            (1, 3) => &[(1, 2, 3)],
            (1, 4) => &[(1, 3, 4)],
            (1, 5) => &[(1, 4, 5)],
            (1, 6) => &[(1, 5, 6)],
            (2, 2) => &[(1, 2, 3)],
            (2, 3) => &[(1, 1, 2), (1, 3, 4)],
            (2, 4) => &[(1, 2, 3), (1, 4, 5)],
            (2, 5) => &[(1, 3, 4), (1, 5, 6)],
            (2, 6) => &[(1, 4, 5)],
            (3, 2) => &[(1, 3, 4)],
            (3, 3) => &[(1, 2, 3), (1, 4, 5)],
            (3, 4) => &[(1, 1, 2), (1, 3, 4), (1, 5, 6)],
            (3, 5) => &[(1, 2, 3), (1, 4, 5)],
            (3, 6) => &[(1, 3, 4)],
            (4, 2) => &[(1, 4, 5)],
            (4, 3) => &[(1, 3, 4), (1, 5, 6)],
            (4, 4) => &[(1, 2, 3), (1, 4, 5)],
            (4, 5) => &[(1, 1, 2), (1, 3, 4)],
            (4, 6) => &[(1, 2, 3)],
            (5, 2) => &[(1, 5, 6)],
            (5, 3) => &[(1, 4, 5)],
            (5, 4) => &[(1, 3, 4)],
            (5, 5) => &[(1, 2, 3)],
            (5, 6) => &[(1, 1, 2)],
            _ => return None,
        };
        Some(eval(lambda, terms))
    }

    /// δ^k_i(m) for N=6, m ∈ 1..=5; `None` where the printed table has a dash.
    pub fn small_delta(m: usize, i: usize, k: usize, lambda: &Partition) -> Option<i64> {
        let terms: &[Term] = match (m, i, k) {
            (1, 1, 2) => &[(1, 1, 2)],
            (1, 1, 3) => &[(1, 2, 3)],
            (1, 1, 4) => &[(1, 3, 4)],
            (1, 1, 5) => &[(1, 4, 5)],
            (1, 1, 6) => &[(1, 5, 6)],
            (1, 2, 3) => &[(1, 1, 2)],
            (1, 2, 4) => &[(1, 2, 3)],
            (1, 2, 5) => &[(1, 3, 4)],
            (1, 2, 6) => &[(1, 4, 5)],
            (1, 3, 4) => &[(1, 1, 2)],
            (1, 3, 5) => &[(1, 2, 3)],
            (1, 3, 6) => &[(1, 3, 4)],
            (1, 4, 5) => &[(1, 1, 2)],
            (1, 4, 6) => &[(1, 2, 3)],
            (1, 5, 6) => &[(1, 1, 2)],

            (2, 1, 1) => &[(-1, 1, 2)],
            (2, 1, 2) => &[(1, 1, 2), (-1, 2, 3)],
            (2, 1, 3) => &[(1, 2, 3), (-1, 3, 4)],
            (2, 1, 4) => &[(1, 3, 4), (-1, 4, 5)],
            (2, 1, 5) => &[(1, 4, 5), (-1, 5, 6)],
            (2, 1, 6) => &[(1, 5, 6)],
            (2, 2, 2) => &[(1, 2, 3), (-1, 1, 2)],
            (2, 2, 3) => &[(1, 1, 2), (1, 3, 4), (-1, 2, 3)],
            (2, 2, 4) => &[(1, 2, 3), (1, 4, 5), (-1, 3, 4)],
            (2, 2, 5) => &[(1, 3, 4), (1, 5, 6), (-1, 4, 5)],
            (2, 2, 6) => &[(1, 4, 5)],
            (2, 3, 3) => &[(1, 2, 3), (-1, 1, 2)],
            (2, 3, 4) => &[(1, 1, 2), (1, 3, 4), (-1, 2, 3)],
            (2, 3, 5) => &[(1, 2, 3), (1, 4, 5), (-1, 3, 4)],
            (2, 3, 6) => &[(1, 3, 4)],
            (2, 4, 4) => &[(1, 2, 3), (-1, 1, 2)],
            (2, 4, 5) => &[(1, 1, 2), (1, 3, 4), (-1, 2, 3)],
            (2, 4, 6) => &[(1, 2, 3)],
            (2, 5, 5) => &[(1, 2, 3), (-1, 1, 2)],
            (2, 5, 6) => &[(1, 1, 2)],

            (3, 1, 1) => &[(-1, 1, 2)],
            (3, 1, 2) => &[(1, 1, 2), (-1, 2, 3)],
            (3, 1, 3) => &[(1, 2, 3), (-1, 3, 4)],
            (3, 1, 4) => &[(1, 3, 4), (-1, 4, 5)],
            (3, 1, 5) => &[(1, 4, 5), (-1, 5, 6)],
            (3, 1, 6) => &[(1, 5, 6)],
            (3, 2, 1) => &[(-1, 2, 3)],
            (3, 2, 2) => &[(1, 2, 3), (-1, 1, 2), (-1, 3, 4)],
            (3, 2, 3) => &[(1, 1, 2), (1, 3, 4), (-1, 2, 3), (-1, 4, 5)],
            (3, 2, 4) => &[(1, 2, 3), (1, 4, 5), (-1, 3, 4), (-1, 5, 6)],
            (3, 2, 5) => &[(1, 3, 4), (1, 5, 6), (-1, 4, 5)],
            (3, 2, 6) => &[(1, 4, 5)],
            (3, 3, 2) => &[(1, 3, 4), (-1, 2, 3)],
            (3, 3, 3) => &[(1, 2, 3), (1, 4, 5), (-1, 1, 2), (-1, 3, 4)],
            (3, 3, 4) => &[(1, 1, 2), (1, 3, 4), (1, 5, 6), (-1, 2, 3), (-1, 4, 5)],
            (3, 3, 5) => &[(1, 2, 3), (1, 4, 5), (-1, 3, 4)],
            (3, 3, 6) => &[(1, 3, 4)],
            (3, 4, 3) => &[(1, 3, 4), (-1, 2, 3)],
            (3, 4, 4) => &[(1, 2, 3), (1, 4, 5), (-1, 1, 2), (-1, 3, 4)],
            (3, 4, 5) => &[(1, 1, 2), (1, 3, 4), (-1, 2, 3)],
            (3, 4, 6) => &[(1, 2, 3)],
            (3, 5, 4) => &[(1, 3, 4), (-1, 2, 3)],
            (3, 5, 5) => &[(1, 2, 3), (-1, 1, 2)],
            (3, 5, 6) => &[(1, 1, 2)],

            (4, 1, 1) => &[(-1, 1, 2)],
            (4, 1, 2) => &[(1, 1, 2), (-1, 2, 3)],
            (4, 1, 3) => &[(1, 2, 3), (-1, 3, 4)],
            (4, 1, 4) => &[(1, 3, 4), (-1, 4, 5)],
            (4, 1, 5) => &[(1, 4, 5), (-1, 5, 6)],
            (4, 1, 6) => &[(1, 5, 6)],
            (4, 2, 1) => &[(-1, 2, 3)],
            (4, 2, 2) => &[(1, 2, 3), (-1, 1, 2), (-1, 3, 4)],
            (4, 2, 3) => &[(1, 1, 2), (1, 3, 4), (-1, 2, 3), (-1, 4, 5)],
            (4, 2, 4) => &[(1, 2, 3), (1, 4, 5), (-1, 3, 4), (-1, 5, 6)],
            (4, 2, 5) => &[(1, 3, 4), (1, 5, 6), (-1, 4, 5)],
            (4, 2, 6) => &[(1, 4, 5)],
            (4, 3, 1) => &[(-1, 3, 4)],
            (4, 3, 2) => &[(1, 3, 4), (-1, 2, 3), (-1, 4, 5)],
            (4, 3, 3) => &[(1, 2, 3), (1, 4, 5), (-1, 1, 2), (-1, 3, 4), (-1, 5, 6)],
            (4, 3, 4) => &[(1, 1, 2), (1, 3, 4), (1, 5, 6), (-1, 2, 3), (-1, 4, 5)],
            (4, 3, 5) => &[(1, 2, 3), (1, 4, 5), (-1, 3, 4)],
            (4, 3, 6) => &[(1, 3, 4)],
            (4, 4, 2) => &[(1, 4, 5), (-1, 3, 4)],
            (4, 4, 3) => &[(1, 3, 4), (1, 5, 6), (-1, 2, 3), (-1, 4, 5)],
            (4, 4, 4) => &[(1, 2, 3), (1, 4, 5), (-1, 1, 2), (-1, 3, 4)],
            (4, 4, 5) => &[(1, 1, 2), (1, 3, 4), (-1, 2, 3)],
            (4, 4, 6) => &[(1, 2, 3)],
            (4, 5, 3) => &[(1, 4, 5), (-1, 3, 4)],
            (4, 5, 4) => &[(1, 3, 4), (-1, 2, 3)],
            (4, 5, 5) => &[(1, 2, 3), (-1, 1, 2)],
            (4, 5, 6) => &[(1, 1, 2)],

            (5, 1, 1) => &[(-1, 1, 2)],
            (5, 1, 2) => &[(1, 1, 2), (-1, 2, 3)],
            (5, 1, 3) => &[(1, 2, 3), (-1, 3, 4)],
            (5, 1, 4) => &[(1, 3, 4), (-1, 4, 5)],
            (5, 1, 5) => &[(1, 4, 5), (-1, 5, 6)],
            (5, 1, 6) => &[(1, 5, 6)],
            (5, 2, 1) => &[(-1, 2, 3)],
            (5, 2, 2) => &[(1, 2, 3), (-1, 1, 2), (-1, 3, 4)],
            (5, 2, 3) => &[(1, 1, 2), (1, 3, 4), (-1, 2, 3), (-1, 4, 5)],
            (5, 2, 4) => &[(1, 2, 3), (1, 4, 5), (-1, 3, 4), (-1, 5, 6)],
            (5, 2, 5) => &[(1, 3, 4), (1, 5, 6), (-1, 4, 5)],
            (5, 2, 6) => &[(1, 4, 5)],
            (5, 3, 1) => &[(-1, 3, 4)],
            (5, 3, 2) => &[(1, 3, 4), (-1, 2, 3), (-1, 4, 5)],
            (5, 3, 3) => &[(1, 2, 3), (1, 4, 5), (-1, 1, 2), (-1, 3, 4), (-1, 5, 6)],
            (5, 3, 4) => &[(1, 1, 2), (1, 3, 4), (1, 5, 6), (-1, 2, 3), (-1, 4, 5)],
            (5, 3, 5) => &[(1, 2, 3), (1, 4, 5), (-1, 3, 4)],
            (5, 3, 6) => &[(1, 3, 4)],
            (5, 4, 1) => &[(-1, 4, 5)],
            (5, 4, 2) => &[(1, 4, 5), (-1, 3, 4), (-1, 5, 6)],
            (5, 4, 3) => &[(1, 3, 4), (1, 5, 6), (-1, 2, 3), (-1, 4, 5)],
            (5, 4, 4) => &[(1, 2, 3), (1, 4, 5), (-1, 1, 2), (-1, 3, 4)],
            (5, 4, 5) => &[(1, 1, 2), (1, 3, 4), (-1, 2, 3)],
            (5, 4, 6) => &[(1, 2, 3)],
            (5, 5, 2) => &[(1, 5, 6), (-1, 4, 5)],
            (5, 5, 3) => &[(1, 4, 5), (-1, 3, 4)],
            (5, 5, 4) => &[(1, 3, 4), (-1, 2, 3)],
            (5, 5, 5) => &[(1, 2, 3), (-1, 1, 2)],
            (5, 5, 6) => &[(1, 1, 2)],
            _ => return None,
        };
        Some(eval(lambda, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn beg_len_end_values() {
        assert_eq!(
            (beg(1, 1, 6).unwrap(), len(1, 1, 6).unwrap(), end(1, 1, 6).unwrap()),
            (1, 1, 1)
        );
        assert_eq!(
            (beg(5, 6, 6).unwrap(), len(5, 6, 6).unwrap(), end(5, 6, 6).unwrap()),
            (6, 1, 6)
        );
        for n in 3..=8usize {
            assert_eq!(
                (beg(2, n, n).unwrap(), len(2, n, n).unwrap(), end(2, n, n).unwrap()),
                (3, n - 2, n)
            );
        }
        assert!(beg(6, 1, 6).is_err());
        assert!(len(1, 7, 6).is_err());
    }

    #[test]
    fn telescope_entry_vectors() {
        assert_eq!(telescope_entries(2, 3, &p(&[5, 4, 3, 2])), vec![2, 1, 1]);
        assert_eq!(telescope_entries(1, 1, &p(&[7])), vec![7]);
        assert_eq!(telescope_entries(3, 2, &p(&[2, 1])), vec![0, 0]);
    }

    #[test]
    fn telescope_partial_sums() {
        // top-down prefix sums are (λ_{p+q−1}, …, λ_p)
        let lambda = p(&[9, 7, 4, 4, 1]);
        for q in 1..=6usize {
            for pp in 1..=6usize {
                let entries = telescope_entries(pp, q, &lambda);
                let mut acc = 0u32;
                for (j, &e) in entries.iter().enumerate() {
                    acc += e;
                    assert_eq!(acc, lambda.part(pp + q - 1 - j));
                }
                assert_eq!(acc, lambda.part(pp));
            }
        }
    }

    #[test]
    fn closed_form_matches_telescopes() {
        let lambdas = [p(&[5, 4, 3, 2]), p(&[9, 9, 2]), p(&[3]), p(&[6, 5, 5, 3, 1])];
        for n_parties in 2..=8usize {
            for lambda in &lambdas {
                for n in 1..=n_parties {
                    for k in 1..=n_parties {
                        for i in 1..=n_parties {
                            let via_tel = i64::from(boxes_added(n, k, i, lambda, n_parties));
                            let via_closed = boxes_added_closed(n, k, i, lambda, n_parties);
                            assert_eq!(
                                via_tel, via_closed,
                                "n={n} k={k} i={i} N={n_parties} λ={lambda}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        // A2 at n=i: λ_{n+k−1}; B2: λ_{N−1}
        let lambda = p(&[6, 5, 3, 2, 1]);
        let n_parties = 6;
        assert_eq!(closed_domain(2, 3, 2, n_parties), Some(PieceDomain::A2));
        assert_eq!(
            boxes_added_closed(2, 3, 2, &lambda, n_parties),
            i64::from(lambda.part(4))
        );
        assert_eq!(closed_domain(2, 5, 3, n_parties), Some(PieceDomain::B2));
        assert_eq!(
            boxes_added_closed(2, 5, 3, &lambda, n_parties),
            i64::from(lambda.part(5))
        );
        assert_eq!(closed_domain(4, 4, 1, n_parties), None);
        assert_eq!(boxes_added_closed(4, 4, 1, &lambda, n_parties), 0);
    }

    #[test]
    fn piecewise_translation_identities() {
        let lambda = p(&[8, 6, 6, 3, 2, 1]);
        let n_parties = 7usize;
        let dom = |n: usize, k: usize, i: usize| closed_domain(n, k, i, n_parties);
        let val = |n: usize, k: usize, i: usize| boxes_added_closed(n, k, i, &lambda, n_parties);
        for n in 1..=n_parties {
            for k in 1..=n_parties {
                for i in 1..=n_parties {
                    let here = dom(n, k, i);
                    // (domain, shifted-index) pairs from the printed identities
                    let shifts: &[(PieceDomain, (i64, i64, i64))] = &[
                        (PieceDomain::A1, (0, 1, 1)),
                        (PieceDomain::A1, (0, -1, -1)),
                        (PieceDomain::A1, (1, -2, 0)),
                        (PieceDomain::A1, (-1, 2, 0)),
                        (PieceDomain::A1, (1, 0, 2)),
                        (PieceDomain::A1, (-1, 0, -2)),
                        (PieceDomain::A2, (1, -1, 0)),
                        (PieceDomain::A2, (-1, 1, 0)),
                        (PieceDomain::A2, (0, 0, 1)),
                        (PieceDomain::A2, (0, 0, -1)),
                        (PieceDomain::B1, (1, 0, 1)),
                        (PieceDomain::B1, (-1, 0, -1)),
                        (PieceDomain::B1, (0, 1, 0)),
                        (PieceDomain::B1, (0, -1, 0)),
                    ];
                    for &(domain, (dn, dk, di)) in shifts {
                        if here != Some(domain) {
                            continue;
                        }
                        let (nn, kk, ii) =
                            (n as i64 + dn, k as i64 + dk, i as i64 + di);
                        if nn < 1 || kk < 1 || ii < 1 {
                            continue;
                        }
                        let (nn, kk, ii) = (nn as usize, kk as usize, ii as usize);
                        if dom(nn, kk, ii) == Some(domain) {
                            assert_eq!(
                                val(n, k, i),
                                val(nn, kk, ii),
                                "{domain:?} shift ({dn},{dk},{di}) at n={n} k={k} i={i}"
                            );
                        }
                    }
                    // B2 is constant on its domain
                    if here == Some(PieceDomain::B2) {
                        assert_eq!(val(n, k, i), i64::from(lambda.part(n_parties - 1)));
                    }
                }
            }
        }
    }

    #[test]
    fn plan_reproduces_example_3() {
        // N=3, λ=(3,1): (3,1) → (4,3,1) → (4,4,4)
        let plan = build_expansion_plan(&p(&[3, 1]), 3).unwrap();
        let (finished, trace) = execute_plan(&plan).unwrap();
        assert_eq!(finished, p(&[4, 4, 4]));
        let shapes: Vec<Partition> =
            trace.iter().map(|d| d.final_shape().unwrap()).collect();
        assert_eq!(shapes, vec![p(&[3, 1]), p(&[4, 3, 1]), p(&[4, 4, 4])]);
        // step 3 appends λ₂ 1's to the penultimate row, then λ₁−λ₂ 1's and
        // λ₂ 2's to the bottom row
        let rows = trace[2].rows();
        assert_eq!(rows[1].labels, vec![1]);
        assert_eq!(rows[2].labels, vec![1, 1, 2]);
    }

    #[test]
    fn plan_matches_printed_patterns() {
        // the (beg, len) grids of the printed N=4 and N=6 virtual-box patterns
        let n4: [[(usize, usize); 3]; 4] = [
            [(1, 1), (2, 1), (3, 1)],
            [(1, 2), (2, 2), (4, 1)],
            [(1, 3), (3, 2), (4, 1)],
            [(2, 3), (3, 2), (4, 1)],
        ];
        for (k, row) in n4.iter().enumerate() {
            for (m, &(b, l)) in row.iter().enumerate() {
                assert_eq!(beg(m + 1, k + 1, 4).unwrap(), b, "beg N=4 m={} k={}", m + 1, k + 1);
                assert_eq!(len(m + 1, k + 1, 4).unwrap(), l, "len N=4 m={} k={}", m + 1, k + 1);
            }
        }
        let n6: [[(usize, usize); 5]; 6] = [
            [(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)],
            [(1, 2), (2, 2), (3, 2), (4, 2), (6, 1)],
            [(1, 3), (2, 3), (3, 3), (5, 2), (6, 1)],
            [(1, 4), (2, 4), (4, 3), (5, 2), (6, 1)],
            [(1, 5), (3, 4), (4, 3), (5, 2), (6, 1)],
            [(2, 5), (3, 4), (4, 3), (5, 2), (6, 1)],
        ];
        for (k, row) in n6.iter().enumerate() {
            for (m, &(b, l)) in row.iter().enumerate() {
                assert_eq!(beg(m + 1, k + 1, 6).unwrap(), b, "beg N=6 m={} k={}", m + 1, k + 1);
                assert_eq!(len(m + 1, k + 1, 6).unwrap(), l, "len N=6 m={} k={}", m + 1, k + 1);
            }
        }
    }

    #[test]
    fn execute_small_cases() {
        let plan = build_expansion_plan(&p(&[4]), 2).unwrap();
        assert_eq!(execute_plan(&plan).unwrap().0, p(&[4, 4]));

        let plan = build_expansion_plan(&p(&[1]), 2).unwrap();
        assert_eq!(execute_plan(&plan).unwrap().0, p(&[1, 1]));

        let plan = build_expansion_plan(&p(&[2, 1]), 4).unwrap();
        assert_eq!(execute_plan(&plan).unwrap().0, p(&[3, 3, 3, 3]));

        assert!(build_expansion_plan(&p(&[1, 1, 1]), 3).is_err());
    }

    #[test]
    fn delta_matches_simulation() {
        let lambda = p(&[7, 4, 2, 2, 1]);
        let n_parties = 6;
        let plan = build_expansion_plan(&lambda, n_parties).unwrap();
        let (_, trace) = execute_plan(&plan).unwrap();
        for k in 1..=n_parties {
            let shape = if k == 1 {
                Partition::empty()
            } else {
                trace[k - 2].final_shape().unwrap()
            };
            for i in 1..n_parties {
                assert_eq!(
                    delta(i, k, &lambda, n_parties).unwrap(),
                    i64::from(shape.part(i)) - i64::from(shape.part(i + 1)),
                    "i={i} k={k}"
                );
            }
        }
    }

    #[test]
    fn delta_subcase_iv_a() {
        // k=2, i=N−1 gives λ_{N−1} for any N
        for n_parties in 3..=8usize {
            let lambda = p(&[9, 8, 6, 5, 3, 2, 1]);
            if lambda.rows() > n_parties - 1 {
                continue;
            }
            assert_eq!(
                delta(n_parties - 1, 2, &lambda, n_parties).unwrap(),
                i64::from(lambda.part(n_parties - 1))
            );
        }
    }

    #[test]
    fn n6_table_spot_checks() {
        let lambda = p(&[9, 6, 4, 3, 1]);
        // Δ²₁ = λ_{1,2}
        assert_eq!(delta(1, 2, &lambda, 6).unwrap(), lambda.part_diff(1, 2));
        // δ³₂(2) = λ_{1,2} + λ_{3,4} − λ_{2,3}
        assert_eq!(
            small_delta(2, 3, 2, &lambda, 6).unwrap(),
            lambda.part_diff(1, 2) + lambda.part_diff(3, 4) - lambda.part_diff(2, 3)
        );
        assert_eq!(n6_tables::delta(1, 2, &lambda), Some(lambda.part_diff(1, 2)));
        assert_eq!(n6_tables::small_delta(1, 2, 2, &lambda), None);
    }

    #[test]
    fn verify_conditions_examples() {
        assert!(verify_conditions(&p(&[3, 1]), 3).unwrap().passes());
        assert!(verify_conditions(&p(&[1]), 2).unwrap().passes());
        assert!(verify_conditions(&p(&[5, 5, 2]), 6).unwrap().passes());
    }
}
