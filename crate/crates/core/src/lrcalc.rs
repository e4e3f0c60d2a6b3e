//! The Littlewood–Richardson rule by diagram expansions, plus the standard
//! lattice-word formulation used as an independent oracle.
//!
//! A product E^λ ⊗ E^η is expanded by appending the boxes of η (row k of η
//! carries label k) to λ, label by label in increasing order, boxes of one
//! label going to the end of their rows top-to-bottom. A resulting labeled
//! diagram is kept when the five conditions hold:
//!
//! 1. the resulting diagram has non-increasing row lengths;
//! 2. no column holds two boxes with the same label;
//! 3. row counting: in rows 1..r, label m never outnumbers any label n < m;
//! 4. column counting, columns numerated from right to left: in the c
//!    rightmost columns, label m never outnumbers any label n < m;
//! 5. the result has at most m rows (SU(m) truncation).
//!
//! The coefficient c^{λη}_ν is the number of kept diagrams of shape ν.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::young::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LrError {
    #[error("diagram has {rows} rows, more than the allowed {max}")]
    TooManyRows { rows: usize, max: usize },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: Partition, outer: Partition },
}

/// A diagram expansion record: base shape plus appended labeled boxes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDiagram {
    base: Partition,
    rows: Vec<LabeledRow>,
}

/// One row of an expansion: the length contributed by the base shape and the
/// labels of appended boxes, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledRow {
    pub base_len: u32,
    pub labels: Vec<u32>,
}

impl LabeledDiagram {
    /// `appended[r]` lists the labels appended to row r+1 (labels ≥ 1).
    /// Rows beyond the base shape are allowed.
    pub fn new(base: Partition, appended: Vec<Vec<u32>>) -> Self {
        let nrows = base.rows().max(appended.len());
        let rows = (0..nrows)
            .map(|r| LabeledRow {
                base_len: base.part(r + 1),
                labels: appended.get(r).cloned().unwrap_or_default(),
            })
            .collect();
        LabeledDiagram { base, rows }
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn rows(&self) -> &[LabeledRow] {
        &self.rows
    }

    /// Row lengths of the expanded diagram, top to bottom (not necessarily
    /// a partition for invalid fillings).
    pub fn total_lengths(&self) -> Vec<u32> {
        self.rows
            .iter()
            .map(|row| row.base_len + row.labels.len() as u32)
            .collect()
    }

    /// The expanded shape when it is a Young diagram.
    pub fn final_shape(&self) -> Option<Partition> {
        let lens = self.total_lengths();
        Partition::new(&lens).ok()
    }

    /// Box picture; appended boxes show their label.
    pub fn render_ascii(&self) -> String {
        if self.rows.iter().all(|r| r.base_len == 0 && r.labels.is_empty()) {
            return "(empty)".to_string();
        }
        let width = self
            .rows
            .iter()
            .flat_map(|r| r.labels.iter())
            .max()
            .map_or(1, |m| m.to_string().len());
        let mut out = String::new();
        let mut first = true;
        for row in &self.rows {
            if row.base_len == 0 && row.labels.is_empty() {
                continue;
            }
            if !first {
                out.push('\n');
            }
            first = false;
            for _ in 0..row.base_len {
                out.push_str(&format!("[{:width$}]", "", width = width));
            }
            for label in &row.labels {
                out.push_str(&format!("[{label:width$}]"));
            }
        }
        out
    }
}

/// Pass/fail of the five expansion conditions, checked independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidationReport {
    pub young_shape: bool,
    pub distinct_in_columns: bool,
    pub row_counting: bool,
    pub column_counting: bool,
    pub row_limit: bool,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.young_shape
            && self.distinct_in_columns
            && self.row_counting
            && self.column_counting
            && self.row_limit
    }

    /// 1-based numbers of the failed conditions.
    pub fn failed_conditions(&self) -> Vec<u8> {
        [
            self.young_shape,
            self.distinct_in_columns,
            self.row_counting,
            self.column_counting,
            self.row_limit,
        ]
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i as u8 + 1)
        .collect()
    }
}

/// Checks the five conditions on a filling, reporting each independently.
/// Column counting scans columns from right to left.
pub fn validate_filling(f: &LabeledDiagram, m: usize) -> ValidationReport {
    let lens = f.total_lengths();
    let young_shape = lens.windows(2).all(|w| w[0] >= w[1]);
    let row_limit = lens.iter().filter(|&&l| l > 0).count() <= m;

    let max_label = f
        .rows
        .iter()
        .flat_map(|r| r.labels.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let width = lens.iter().copied().max().unwrap_or(0) as usize;

    // per-label column occupancy, and per-row label counts
    let mut col_boxes: Vec<Vec<u32>> = vec![vec![0; width + 1]; max_label + 1];
    let mut distinct_in_columns = true;
    let mut row_counts: Vec<Vec<u32>> = vec![vec![0; max_label + 1]; f.rows.len()];
    for (r, row) in f.rows.iter().enumerate() {
        for (k, &label) in row.labels.iter().enumerate() {
            let col = row.base_len as usize + k + 1;
            let slot = &mut col_boxes[label as usize][col];
            if *slot > 0 {
                distinct_in_columns = false;
            }
            *slot += 1;
            row_counts[r][label as usize] += 1;
        }
    }

    // condition 3: prefix over rows, adjacent labels suffice
    let mut row_counting = true;
    let mut cum = vec![0u64; max_label + 1];
    for counts in &row_counts {
        for (label, &c) in counts.iter().enumerate() {
            cum[label] += u64::from(c);
        }
        for label in 2..=max_label {
            if cum[label] > cum[label - 1] {
                row_counting = false;
            }
        }
    }

    // condition 4: suffix over columns (right to left), adjacent labels
    let mut column_counting = true;
    let mut suffix = vec![0u64; max_label + 1];
    for col in (1..=width).rev() {
        for label in 1..=max_label {
            suffix[label] += u64::from(col_boxes[label][col]);
        }
        for label in 2..=max_label {
            if suffix[label] > suffix[label - 1] {
                column_counting = false;
            }
        }
    }

    ValidationReport {
        young_shape,
        distinct_in_columns,
        row_counting,
        column_counting,
        row_limit,
    }
}

/// Multiset of irreducible components with big-integer multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    entries: BTreeMap<Partition, BigUint>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(p: Partition) -> Self {
        let mut d = Self::new();
        d.add(p, BigUint::from(1u32));
        d
    }

    pub fn add(&mut self, p: Partition, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(p).or_insert_with(BigUint::zero) += mult;
    }

    pub fn multiplicity(&self, p: &Partition) -> BigUint {
        self.entries.get(p).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Ascending lexicographic order; reverse for the canonical descending
    /// presentation.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.entries.iter()
    }

    /// JSON object mapping "5.3.2"-style keys to decimal multiplicity
    /// strings, shapes in descending lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (p, mult) in self.entries.iter().rev() {
            map.insert(p.dotted(), serde_json::Value::String(mult.to_string()));
        }
        serde_json::Value::Object(map)
    }
}

impl FromIterator<(Partition, BigUint)> for Decomposition {
    fn from_iter<T: IntoIterator<Item = (Partition, BigUint)>>(iter: T) -> Self {
        let mut d = Decomposition::new();
        for (p, mult) in iter {
            d.add(p, mult);
        }
        d
    }
}

/// Row bound for expansions: either the SU(m) truncation or none (GL mode,
/// used for skew-coefficient work where no m bound applies).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowBound {
    Su(usize),
    Gl,
}

struct Expander<'a> {
    base: Vec<u32>,
    content: &'a [u32],
    max_rows: usize,
    target: Option<Vec<u32>>,
    bound: Option<Vec<u32>>,
    // per label per row
    counts: Vec<Vec<u32>>,
    starts: Vec<Vec<u32>>,
    lens: Vec<u32>,
}

impl<'a> Expander<'a> {
    fn new(
        base: &Partition,
        content: &'a [u32],
        row_bound: RowBound,
        target: Option<&Partition>,
        bound: Option<&Partition>,
    ) -> Self {
        let t = content.len();
        let mut max_rows = match row_bound {
            RowBound::Su(m) => m,
            RowBound::Gl => base.rows() + t,
        };
        if let Some(tgt) = target {
            max_rows = max_rows.min(tgt.rows().max(base.rows()));
        }
        let pad = |p: &Partition| (1..=max_rows).map(|i| p.part(i)).collect::<Vec<u32>>();
        Expander {
            base: pad(base),
            content,
            max_rows,
            target: target.map(&pad),
            bound: bound.map(&pad),
            counts: vec![vec![0; max_rows]; t],
            starts: vec![vec![0; max_rows]; t],
            lens: pad(base),
        }
    }

    fn run<F: FnMut(&Expander<'a>)>(&mut self, emit: &mut F) {
        if self.max_rows < self.base.iter().filter(|&&l| l > 0).count() {
            return;
        }
        self.place_label(0, emit);
    }

    fn place_label<F: FnMut(&Expander<'a>)>(&mut self, m: usize, emit: &mut F) {
        if m == self.content.len() {
            if self.accept() {
                emit(self);
            }
            return;
        }
        self.place_row(m, 0, self.content[m], 0, 0, emit);
    }

    fn place_row<F: FnMut(&Expander<'a>)>(
        &mut self,
        m: usize,
        r: usize,
        remaining: u32,
        prefix_cur: u32,
        prefix_prev: u32,
        emit: &mut F,
    ) {
        if remaining == 0 {
            // rows below keep zero counts for this label
            self.place_label(m + 1, emit);
            return;
        }
        if r == self.max_rows {
            return;
        }
        // a row may receive boxes only when the one above is nonempty
        if r > 0 && self.lens[r - 1] == 0 {
            return;
        }
        let prefix_prev_r = if m == 0 {
            u32::MAX
        } else {
            prefix_prev + self.counts[m - 1][r]
        };

        let mut c_max = remaining;
        if m > 0 {
            c_max = c_max.min(prefix_prev_r.saturating_sub(prefix_cur));
        }
        if let Some(tgt) = &self.target {
            c_max = c_max.min(tgt[r].saturating_sub(self.lens[r]));
        }
        if let Some(bound) = &self.bound {
            c_max = c_max.min(bound[r].saturating_sub(self.lens[r]));
        }
        // boxes append only to the right or to the bottom: the diagram stays
        // a Young diagram after every label, so row r may not pass row r−1
        if r > 0 {
            c_max = c_max.min(self.lens[r - 1].saturating_sub(self.lens[r]));
        }

        for c in 0..=c_max {
            if c > 0 && self.label_columns_clash(m, r, c) {
                continue;
            }
            self.counts[m][r] = c;
            self.starts[m][r] = self.lens[r];
            self.lens[r] += c;
            self.place_row(m, r + 1, remaining - c, prefix_cur + c, prefix_prev_r, emit);
            self.lens[r] -= c;
            self.counts[m][r] = 0;
        }
    }

    /// Would c boxes of label m at the end of row r share a column with
    /// label-m boxes already placed in rows above?
    fn label_columns_clash(&self, m: usize, r: usize, c: u32) -> bool {
        let lo = self.lens[r];
        let hi = self.lens[r] + c;
        for rr in 0..r {
            let cc = self.counts[m][rr];
            if cc == 0 {
                continue;
            }
            let lo2 = self.starts[m][rr];
            let hi2 = lo2 + cc;
            if lo < hi2 && lo2 < hi {
                return true;
            }
        }
        false
    }

    fn accept(&self) -> bool {
        // condition 1 on the final diagram
        if self.lens.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        if let Some(tgt) = &self.target {
            if self.lens != *tgt {
                return false;
            }
        }
        self.column_counting_holds()
    }

    /// Condition 4 with columns numerated from right to left.
    fn column_counting_holds(&self) -> bool {
        let t = self.content.len();
        if t <= 1 {
            return true;
        }
        let width = self.lens.first().copied().unwrap_or(0) as usize;
        let mut cols: Vec<Vec<u32>> = vec![vec![0; width + 1]; t];
        for m in 0..t {
            for r in 0..self.max_rows {
                let c = self.counts[m][r];
                if c == 0 {
                    continue;
                }
                let start = self.starts[m][r] as usize;
                for col in start + 1..=start + c as usize {
                    cols[m][col] += 1;
                }
            }
        }
        let mut suffix = vec![0u64; t];
        for col in (1..=width).rev() {
            for m in 0..t {
                suffix[m] += u64::from(cols[m][col]);
            }
            for m in 1..t {
                if suffix[m] > suffix[m - 1] {
                    return false;
                }
            }
        }
        true
    }

    fn final_shape(&self) -> Partition {
        Partition::new(&self.lens).expect("accepted shapes are partitions")
    }

    fn to_labeled_diagram(&self, base: &Partition) -> LabeledDiagram {
        let appended: Vec<Vec<u32>> = (0..self.max_rows)
            .map(|r| {
                let mut labels = Vec::new();
                for m in 0..self.content.len() {
                    for _ in 0..self.counts[m][r] {
                        labels.push(m as u32 + 1);
                    }
                }
                labels
            })
            .collect();
        LabeledDiagram::new(base.clone(), appended)
    }
}

fn check_rows(p: &Partition, m: usize) -> Result<(), LrError> {
    if p.rows() > m {
        Err(LrError::TooManyRows { rows: p.rows(), max: m })
    } else {
        Ok(())
    }
}

/// Decomposes E^λ ⊗ E^η over SU(m) by counting valid diagram expansions.
pub fn lr_expand(lambda: &Partition, eta: &Partition, m: usize) -> Result<Decomposition, LrError> {
    check_rows(lambda, m)?;
    check_rows(eta, m)?;
    Ok(expand_inner(lambda, eta, RowBound::Su(m), None))
}

/// GL-mode expansion: no row truncation.
pub fn lr_expand_gl(lambda: &Partition, eta: &Partition) -> Decomposition {
    expand_inner(lambda, eta, RowBound::Gl, None)
}

pub(crate) fn expand_inner(
    lambda: &Partition,
    eta: &Partition,
    row_bound: RowBound,
    bound: Option<&Partition>,
) -> Decomposition {
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut expander = Expander::new(lambda, eta.parts(), row_bound, None, bound);
    expander.run(&mut |e| {
        *counts.entry(e.final_shape()).or_insert(0) += 1;
    });
    counts
        .into_iter()
        .map(|(p, c)| (p, BigUint::from(c)))
        .collect()
}

/// The Littlewood–Richardson coefficient c^{λη}_ν: the number of valid
/// fillings producing ν. No row truncation is applied beyond ν itself.
pub fn lr_coefficient(lambda: &Partition, eta: &Partition, nu: &Partition) -> BigUint {
    if lambda.weight() + eta.weight() != nu.weight() || !lambda.contained_in(nu) {
        return BigUint::zero();
    }
    let mut count = 0u64;
    let mut expander = Expander::new(lambda, eta.parts(), RowBound::Gl, Some(nu), None);
    expander.run(&mut |_| count += 1);
    BigUint::from(count)
}

/// All valid fillings of the product, ordered by final shape (descending
/// lexicographic) then by row-wise label sequences.
pub fn enumerate_lr_fillings(
    lambda: &Partition,
    eta: &Partition,
    m: usize,
) -> Result<Vec<LabeledDiagram>, LrError> {
    check_rows(lambda, m)?;
    check_rows(eta, m)?;
    let mut fillings = Vec::new();
    let mut expander = Expander::new(lambda, eta.parts(), RowBound::Su(m), None, None);
    expander.run(&mut |e| {
        fillings.push((e.final_shape(), e.to_labeled_diagram(lambda)));
    });
    fillings.sort_by(|(sa, da), (sb, db)| {
        sb.cmp(sa).then_with(|| {
            let la: Vec<&[u32]> = da.rows().iter().map(|r| r.labels.as_slice()).collect();
            let lb: Vec<&[u32]> = db.rows().iter().map(|r| r.labels.as_slice()).collect();
            la.cmp(&lb)
        })
    });
    Ok(fillings.into_iter().map(|(_, d)| d).collect())
}

/// Number of Littlewood–Richardson skew tableaux of shape γ/α and content β:
/// semistandard fillings whose reverse reading word (right to left along
/// rows, top to bottom) is a lattice word. This is the standard formulation,
/// kept independent of the diagram-expansion rule above.
pub fn lr_skew_coefficient(
    gamma: &Partition,
    alpha: &Partition,
    beta: &Partition,
) -> Result<BigUint, LrError> {
    if !alpha.contained_in(gamma) {
        return Err(LrError::NotContained { inner: alpha.clone(), outer: gamma.clone() });
    }
    Ok(skew_lattice_count(gamma, alpha, beta))
}

/// Standard-formulation oracle for c^{λη}_ν: counts LR skew tableaux of
/// shape ν/λ with content η.
pub fn lr_oracle_coefficient(lambda: &Partition, eta: &Partition, nu: &Partition) -> BigUint {
    if lambda.weight() + eta.weight() != nu.weight() || !lambda.contained_in(nu) {
        return BigUint::zero();
    }
    skew_lattice_count(nu, lambda, eta)
}

fn skew_lattice_count(gamma: &Partition, alpha: &Partition, beta: &Partition) -> BigUint {
    let cells: u64 = gamma.weight() - alpha.weight();
    if cells != beta.weight() {
        return BigUint::zero();
    }
    if cells == 0 {
        return BigUint::from(1u32);
    }
    let mut counter = SkewCounter {
        gamma,
        alpha,
        beta,
        nrows: gamma.rows(),
        labels: beta.rows() as u32,
        memo: HashMap::new(),
    };
    let counts = vec![0u32; beta.rows()];
    counter.count_rows(0, &[], &counts)
}

/// Counts LR skew tableaux row by row in reverse reading order (right to
/// left within a row, rows top to bottom), memoizing on the lattice counts
/// and the labels a row exposes to the one below it.
struct SkewCounter<'a> {
    gamma: &'a Partition,
    alpha: &'a Partition,
    beta: &'a Partition,
    nrows: usize,
    labels: u32,
    memo: HashMap<(usize, Vec<u32>, Vec<u32>), BigUint>,
}

impl SkewCounter<'_> {
    /// `prev` holds the labels of row `row` (1-based: row, i.e. the one
    /// above) at columns max(α_{row}, α_{row+1})+1 ..= min(γ_{row}, γ_{row+1}).
    fn count_rows(&mut self, row: usize, prev: &[u32], counts: &[u32]) -> BigUint {
        if row == self.nrows {
            return BigUint::from(1u32);
        }
        let key = (row, prev.to_vec(), counts.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }

        let lo = self.alpha.part(row + 1);
        let hi = self.gamma.part(row + 1);
        let mut total = BigUint::zero();
        if hi == lo {
            total = self.count_rows(row + 1, &[], counts);
        } else {
            let ctx = RowCtx {
                row,
                lo,
                prev_lo: if row == 0 { 0 } else { self.alpha.part(row).max(lo) },
                prev_hi: if row == 0 { 0 } else { self.gamma.part(row).min(hi) },
                next_lo: self.alpha.part(row + 2).max(lo),
                next_hi: self.gamma.part(row + 2).min(hi),
            };
            let mut row_vals = vec![0u32; (hi - lo) as usize];
            let mut counts = counts.to_vec();
            self.fill_cell(&ctx, hi, prev, &mut row_vals, &mut counts, &mut total);
        }

        self.memo.insert(key, total.clone());
        total
    }

    fn fill_cell(
        &mut self,
        ctx: &RowCtx,
        col: u32,
        prev: &[u32],
        row_vals: &mut Vec<u32>,
        counts: &mut Vec<u32>,
        total: &mut BigUint,
    ) {
        if col == ctx.lo {
            let passed: Vec<u32> = if ctx.next_hi > ctx.next_lo {
                ((ctx.next_lo - ctx.lo) as usize..(ctx.next_hi - ctx.lo) as usize)
                    .map(|k| row_vals[k])
                    .collect()
            } else {
                Vec::new()
            };
            *total += self.count_rows(ctx.row + 1, &passed, counts);
            return;
        }
        let k = (col - ctx.lo - 1) as usize;
        // weakly increasing along the row
        let max_by_row = if k + 1 < row_vals.len() { row_vals[k + 1] } else { self.labels };
        // strictly increasing down the column (base cells impose nothing)
        let min_by_col = if ctx.row > 0 && col > ctx.prev_lo && col <= ctx.prev_hi {
            prev[(col - ctx.prev_lo - 1) as usize]
        } else {
            0
        };
        for v in min_by_col + 1..=max_by_row {
            let vi = v as usize - 1;
            if counts[vi] >= self.beta.part(v as usize) {
                continue;
            }
            // lattice: every prefix of the reverse reading word dominates
            if v > 1 && counts[vi] >= counts[vi - 1] {
                continue;
            }
            counts[vi] += 1;
            row_vals[k] = v;
            self.fill_cell(ctx, col - 1, prev, row_vals, counts, total);
            counts[vi] -= 1;
        }
    }
}

struct RowCtx {
    row: usize,
    lo: u32,
    prev_lo: u32,
    prev_hi: u32,
    next_lo: u32,
    next_hi: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn expand_map(lambda: &[u32], eta: &[u32], m: usize) -> Vec<(Partition, u64)> {
        lr_expand(&p(lambda), &p(eta), m)
            .unwrap()
            .iter()
            .map(|(q, c)| (q.clone(), u64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn two_boxes() {
        let d = expand_map(&[1], &[1], 2);
        assert_eq!(
            d,
            vec![(p(&[1, 1]), 1), (p(&[2]), 1)]
        );
    }

    #[test]
    fn square_of_su3_octet() {
        // frozen by brute-force filling enumeration, cross-checked against
        // the lattice-word oracle; the trivial component (2,2,2) has
        // multiplicity exactly 1
        let d = lr_expand(&p(&[2, 1]), &p(&[2, 1]), 3).unwrap();
        let expected = [
            (vec![4, 2], 1u32),
            (vec![4, 1, 1], 1),
            (vec![3, 3], 1),
            (vec![3, 2, 1], 2),
            (vec![2, 2, 2], 1),
        ];
        assert_eq!(d.len(), expected.len());
        for (shape, c) in expected {
            assert_eq!(d.multiplicity(&p(&shape)), BigUint::from(c), "at {shape:?}");
        }
        // dimension conservation: 8 × 8 = 64
        let total: BigUint = d
            .iter()
            .map(|(q, c)| c * q.reduce_mod(3).unwrap().irrep_dim(3).unwrap())
            .sum();
        assert_eq!(total, BigUint::from(64u32));
    }

    #[test]
    fn example3_contains_the_paper_shape() {
        let lambda = p(&[2, 1]);
        let d = lr_expand(&lambda, &lambda, 3).unwrap();
        assert!(d.multiplicity(&p(&[3, 2, 1])) >= BigUint::from(1u32));
    }

    #[test]
    fn coefficients() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), BigUint::from(1u32));
        assert_eq!(
            lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 2, 2])),
            BigUint::from(1u32)
        );
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[2]), &p(&[5])), BigUint::zero());
        // frozen by enumerating both formulations
        assert_eq!(
            lr_coefficient(&p(&[3, 2]), &p(&[2, 1]), &p(&[4, 3, 1])),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn filling_enumeration() {
        assert_eq!(enumerate_lr_fillings(&p(&[1]), &p(&[1]), 2).unwrap().len(), 2);

        let fillings = enumerate_lr_fillings(&p(&[2]), &p(&[2]), 3).unwrap();
        let shapes: Vec<Partition> =
            fillings.iter().map(|f| f.final_shape().unwrap()).collect();
        assert_eq!(shapes, vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);

        // single-row η and single-row group bound: one filling, all in row 1
        let fillings = enumerate_lr_fillings(&p(&[1]), &p(&[2]), 1).unwrap();
        assert_eq!(fillings.len(), 1);
        assert_eq!(fillings[0].final_shape().unwrap(), p(&[3]));
        // a two-row η cannot fit under a one-row bound
        assert_eq!(
            enumerate_lr_fillings(&p(&[1]), &p(&[1, 1]), 1),
            Err(LrError::TooManyRows { rows: 2, max: 1 })
        );
    }

    #[test]
    fn validation_conditions() {
        // Example 2: (λ₁) with λ₁ 1-labels appended as a second row
        let f = LabeledDiagram::new(p(&[4]), vec![vec![], vec![1, 1, 1, 1]]);
        assert!(validate_filling(&f, 2).passes());

        // two 1-labels stacked in column 2
        let f = LabeledDiagram::new(p(&[1]), vec![vec![1], vec![1, 1]]);
        let report = validate_filling(&f, 3);
        assert!(!report.distinct_in_columns);
        assert_eq!(report.failed_conditions(), vec![2]);

        // a 2-label in a row above all 1-labels; the oracle rejects the
        // same configuration (c_{(1),(1,1)}^{(2,1)} counts only the other
        // arrangement)
        let f = LabeledDiagram::new(p(&[1]), vec![vec![2], vec![1]]);
        let report = validate_filling(&f, 3);
        assert!(!report.row_counting);
        assert_eq!(
            lr_oracle_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])),
            BigUint::from(1u32)
        );
        assert_eq!(
            lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn skew_coefficients() {
        assert_eq!(
            lr_skew_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap(),
            BigUint::from(1u32)
        );
        // unique super-standard tableau
        let lambda = p(&[3, 2, 1]);
        assert_eq!(
            lr_skew_coefficient(&lambda, &Partition::empty(), &lambda).unwrap(),
            BigUint::from(1u32)
        );
        // empty skew shape
        assert_eq!(
            lr_skew_coefficient(&p(&[2]), &p(&[2]), &Partition::empty()).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            lr_skew_coefficient(&p(&[1]), &p(&[2]), &p(&[1])),
            Err(LrError::NotContained { inner: p(&[2]), outer: p(&[1]) })
        );
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(
            lr_oracle_coefficient(&p(&[1]), &p(&[1]), &p(&[2])),
            BigUint::from(1u32)
        );
        assert_eq!(
            lr_oracle_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 2, 2])),
            BigUint::from(1u32)
        );
        assert_eq!(
            lr_oracle_coefficient(&p(&[3, 2]), &p(&[2, 1]), &p(&[4, 3, 1])),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn weight_and_containment_conservation() {
        let lambda = p(&[3, 1]);
        let eta = p(&[2, 2]);
        let d = lr_expand(&lambda, &eta, 4).unwrap();
        assert!(!d.is_empty());
        for (nu, _) in d.iter() {
            assert_eq!(nu.weight(), lambda.weight() + eta.weight());
            assert!(lambda.contained_in(nu));
        }
    }

    #[test]
    fn expansion_commutes() {
        let a = p(&[3, 1]);
        let b = p(&[2, 2, 1]);
        assert_eq!(lr_expand(&a, &b, 4).unwrap(), lr_expand(&b, &a, 4).unwrap());
    }

    #[test]
    fn render_shows_labels() {
        let f = LabeledDiagram::new(p(&[2]), vec![vec![1], vec![1, 2]]);
        assert_eq!(f.render_ascii(), "[ ][ ][1]\n[1][2]");
    }
}
