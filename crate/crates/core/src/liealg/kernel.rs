//! Joint-kernel (trivial subspace) solver: stacks the diagonal actions of
//! all generators and eliminates exactly over Gaussian rationals.
//!
//! Before eliminating, a simultaneous grading of the generators is
//! discovered by solving w_i − w_j = α_g over the entry graph. Every
//! generator is homogeneous for such a grading, so the stacked operator
//! maps distinct weight blocks to distinct blocks and the joint kernel
//! splits exactly as a direct sum over blocks; each block is eliminated
//! independently. The returned basis is the canonical reduced echelon form
//! against the lexicographic multi-index order, so it does not depend on
//! elimination order.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::GaussianRational;
use super::sparse::{decode_index, LieError, SparseOperator, StateVector};

#[derive(Debug, Clone, Copy)]
pub struct KernelOptions {
    /// Maximum d^N (column count) a query may reach.
    pub dim_cap: usize,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions { dim_cap: 20_000 }
    }
}

type SparseRow = Vec<(usize, GaussianRational)>;

/// Exact basis of ∩_g ker(diagonal_action(g, N)).
pub fn trivial_subspace(
    gens: &[SparseOperator],
    n_parties: usize,
    opts: &KernelOptions,
) -> Result<Vec<StateVector>, LieError> {
    assert!(!gens.is_empty(), "no generators given");
    let d = gens[0].dim();
    for g in gens {
        if g.dim() != d {
            return Err(LieError::DimMismatch(d, g.dim()));
        }
    }
    let total = (d as u64)
        .checked_pow(n_parties as u32)
        .ok_or_else(|| LieError::ResourceBound("dimension overflow".into()))?;
    if total > opts.dim_cap as u64 {
        return Err(LieError::ResourceBound(format!(
            "dimension {d}^{n_parties} = {total} exceeds the cap {}",
            opts.dim_cap
        )));
    }

    let weights = find_grading(gens, d);
    let mut blocks: BTreeMap<Vec<BigRational>, Vec<u64>> = BTreeMap::new();
    for code in 0..total {
        let digits = decode_index(code, d, n_parties);
        let mut key = vec![BigRational::default(); weights.rank];
        for digit in digits {
            for (slot, w) in key.iter_mut().zip(&weights.by_index[digit]) {
                *slot += w;
            }
        }
        blocks.entry(key).or_default().push(code);
    }

    let mut basis: Vec<StateVector> = Vec::new();
    for block in blocks.values() {
        for vector in solve_block(gens, block, d, n_parties) {
            let mut state = StateVector::zero(d, n_parties);
            for (code, value) in vector {
                state.add_amplitude_coded(code, value);
            }
            basis.push(state);
        }
    }
    // canonical presentation: reduced echelon form against the
    // lexicographic multi-index order, leading coefficients 1
    Ok(rref_states(basis))
}

/// A grading assigning each local basis index a vector of rationals such
/// that every generator entry (r, c) satisfies w_r = w_c + α_g.
struct Grading {
    rank: usize,
    by_index: Vec<Vec<BigRational>>,
}

fn find_grading(gens: &[SparseOperator], d: usize) -> Grading {
    // unknowns: w_0..w_{d−1}, then one shift α per generator
    let ncols = d + gens.len();
    let mut rows: Vec<SparseRow> = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        for (r, c, _) in g.entries() {
            if r == c {
                // a diagonal entry forces α_g = 0
                rows.push(vec![(d + gi, GaussianRational::one())]);
            } else {
                rows.push(vec![
                    (r.min(c), if r < c { GaussianRational::one() } else { -&GaussianRational::one() }),
                    (r.max(c), if r < c { -&GaussianRational::one() } else { GaussianRational::one() }),
                    (d + gi, -&GaussianRational::one()),
                ]);
            }
        }
    }
    let kernel = kernel_basis(rows, ncols);
    let rank = kernel.len();
    let mut by_index = vec![Vec::with_capacity(rank); d];
    for vector in &kernel {
        let dense: HashMap<usize, &GaussianRational> =
            vector.iter().map(|(c, v)| (*c, v)).collect();
        for (s, slot) in by_index.iter_mut().enumerate() {
            slot.push(dense.get(&s).map(|v| v.re.clone()).unwrap_or_default());
        }
    }
    Grading { rank, by_index }
}

/// Kernel of the stacked generator actions restricted to one weight block.
fn solve_block(
    gens: &[SparseOperator],
    block: &[u64],
    d: usize,
    n_parties: usize,
) -> Vec<Vec<(u64, GaussianRational)>> {
    let col_of: HashMap<u64, usize> =
        block.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut rows: BTreeMap<(usize, u64), BTreeMap<usize, GaussianRational>> = BTreeMap::new();
    for (gi, g) in gens.iter().enumerate() {
        let cols = g.columns();
        for (&code, &ci) in col_of.iter() {
            let digits = decode_index(code, d, n_parties);
            let mut stride = (d as u64).pow(n_parties as u32 - 1);
            for &digit in &digits {
                if let Some(col) = cols.get(&digit) {
                    for (row_local, v) in col {
                        let out = code + stride * (*row_local as u64) - stride * (digit as u64);
                        let slot = rows
                            .entry((gi, out))
                            .or_default()
                            .entry(ci)
                            .or_insert_with(GaussianRational::zero);
                        *slot += v;
                    }
                }
                stride /= d as u64;
            }
        }
    }

    let sparse_rows: Vec<SparseRow> = rows
        .into_values()
        .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
        .collect();
    kernel_basis(sparse_rows, block.len())
        .into_iter()
        .map(|vector| vector.into_iter().map(|(ci, v)| (block[ci], v)).collect())
        .collect()
}

/// Gaussian integer, the elimination working scalar.
type GInt = (BigInt, BigInt);
type IntRow = Vec<(usize, GInt)>;

fn gmul(a: &GInt, b: &GInt) -> GInt {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn gis_zero(a: &GInt) -> bool {
    a.0.is_zero() && a.1.is_zero()
}

/// Divides every entry by the gcd of all integer components, keeping rows
/// fraction-free with bounded growth.
fn normalize_content(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, (re, im)) in row.iter() {
        g = g.gcd(re);
        g = g.gcd(im);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, (re, im)) in row.iter_mut() {
        *re /= &g;
        *im /= &g;
    }
}

/// Canonical (reduced-echelon) kernel basis of a sparse row system. The
/// pivot column set of a row space is order-independent, so any insertion
/// order yields the same basis; elimination runs fraction-free over
/// Gaussian integers with per-row content normalization.
pub(crate) fn kernel_basis(
    rows: Vec<SparseRow>,
    ncols: usize,
) -> Vec<Vec<(usize, GaussianRational)>> {
    let mut int_rows: Vec<IntRow> = rows.into_iter().map(to_int_row).collect();
    // sparser rows first keeps early pivots short and limits fill-in
    int_rows.sort_by_key(|r| r.len());

    let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
    for row in int_rows {
        if let Some((col, reduced)) = reduce_row(row, &pivots) {
            pivots.insert(col, reduced);
        }
    }

    let pivot_cols: Vec<usize> = pivots.keys().copied().collect();
    let is_pivot: Vec<bool> = {
        let mut flags = vec![false; ncols];
        for &c in &pivot_cols {
            flags[c] = true;
        }
        flags
    };

    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        // back-substitute x[free] = 1, other free columns 0
        let mut x: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        x.insert(free, GaussianRational::one());
        for &c in pivot_cols.iter().rev() {
            if c > free {
                continue;
            }
            let row = &pivots[&c];
            let mut acc = GaussianRational::zero();
            for (cc, coeff) in row.iter().skip(1) {
                if let Some(xv) = x.get(cc) {
                    acc += &(&to_rational(coeff) * xv);
                }
            }
            if !acc.is_zero() {
                let lead = to_rational(&row[0].1);
                x.insert(c, -&(&acc * &lead.inverse()));
            }
        }
        basis.push(x.into_iter().collect());
    }
    basis
}

fn to_int_row(row: SparseRow) -> IntRow {
    // clear denominators across the row
    let mut lcm = BigInt::one();
    for (_, v) in &row {
        lcm = lcm.lcm(v.re.denom());
        lcm = lcm.lcm(v.im.denom());
    }
    let mut out: IntRow = row
        .into_iter()
        .map(|(c, v)| {
            let re = v.re.numer() * (&lcm / v.re.denom());
            let im = v.im.numer() * (&lcm / v.im.denom());
            (c, (re, im))
        })
        .collect();
    out.sort_by_key(|(c, _)| *c);
    normalize_content(&mut out);
    out
}

fn to_rational(v: &GInt) -> GaussianRational {
    GaussianRational::new(
        BigRational::from_integer(v.0.clone()),
        BigRational::from_integer(v.1.clone()),
    )
}

/// Reduces a row against the current pivots by fraction-free updates;
/// returns the content-normalized row and its leading column when nonzero
/// survives.
fn reduce_row(mut row: IntRow, pivots: &BTreeMap<usize, IntRow>) -> Option<(usize, IntRow)> {
    loop {
        let lead_col = row.first()?.0;
        match pivots.get(&lead_col) {
            None => return Some((lead_col, row)),
            Some(pivot_row) => {
                row = row_cross_eliminate(&row, pivot_row);
            }
        }
    }
}

/// pivot_lead·row − row_lead·pivot, content-normalized: cancels the leading
/// column without introducing fractions.
fn row_cross_eliminate(row: &IntRow, pivot: &IntRow) -> IntRow {
    let row_lead = &row[0].1;
    let pivot_lead = &pivot[0].1;
    let mut out: IntRow = Vec::with_capacity(row.len() + pivot.len());
    let mut i = 1;
    let mut j = 1;
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push((row[i].0, gmul(pivot_lead, &row[i].1)));
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            let v = gmul(row_lead, &pivot[j].1);
            out.push((pivot[j].0, (-v.0, -v.1)));
            j += 1;
        } else {
            let a = gmul(pivot_lead, &row[i].1);
            let b = gmul(row_lead, &pivot[j].1);
            let v = (a.0 - b.0, a.1 - b.1);
            if !gis_zero(&v) {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    normalize_content(&mut out);
    out
}

/// Conjugates the generators by a per-party invertible transform, solves in
/// the transformed basis (where a finer grading may exist), and maps the
/// kernel back through T^{⊗N}, re-echelonizing for determinism.
pub fn trivial_subspace_conjugated(
    gens: &[SparseOperator],
    n_parties: usize,
    transform: &SparseOperator,
    transform_inv: &SparseOperator,
    opts: &KernelOptions,
) -> Result<Vec<StateVector>, LieError> {
    let conjugated: Vec<SparseOperator> = gens
        .iter()
        .map(|g| transform_inv.matmul(g)?.matmul(transform))
        .collect::<Result<_, _>>()?;
    let primed = trivial_subspace(&conjugated, n_parties, opts)?;
    let mapped: Vec<StateVector> = primed
        .iter()
        .map(|u| apply_local_transform(u, transform))
        .collect::<Result<_, _>>()?;
    Ok(rref_states(mapped))
}

/// T^{⊗N}|ψ⟩ for a one-party transform T.
pub fn apply_local_transform(
    state: &StateVector,
    transform: &SparseOperator,
) -> Result<StateVector, LieError> {
    let d = state.local_dim();
    if transform.dim() != d {
        return Err(LieError::DimMismatch(transform.dim(), d));
    }
    let cols = transform.columns();
    let n = state.parties();
    let mut out = StateVector::zero(d, n);
    for (code, amp) in state.iter() {
        let digits = decode_index(code, d, n);
        // expand ∏_p T[y_p, x_p] party by party
        let mut partial: Vec<(u64, GaussianRational)> = vec![(0, amp.clone())];
        for &digit in &digits {
            let col = match cols.get(&digit) {
                Some(col) => col,
                None => {
                    partial.clear();
                    break;
                }
            };
            let mut next = Vec::with_capacity(partial.len() * col.len());
            for (prefix, value) in &partial {
                for (row, t) in col {
                    next.push((prefix * d as u64 + *row as u64, value * t));
                }
            }
            partial = next;
        }
        for (code, value) in partial {
            out.add_amplitude_coded(code, value);
        }
    }
    Ok(out)
}

/// Reduced echelon form of a set of states against the lexicographic
/// multi-index order (used to canonicalize bases after transforms).
pub fn rref_states(states: Vec<StateVector>) -> Vec<StateVector> {
    let (d, n) = match states.first() {
        Some(s) => (s.local_dim(), s.parties()),
        None => return Vec::new(),
    };
    let mut pivots: BTreeMap<u64, Vec<(u64, GaussianRational)>> = BTreeMap::new();
    for state in &states {
        let mut row: Vec<(u64, GaussianRational)> =
            state.iter().map(|(c, v)| (c, v.clone())).collect();
        loop {
            let Some(&(lead, ref lead_val)) = row.first() else { break };
            match pivots.get(&lead) {
                None => {
                    let inv = lead_val.inverse();
                    for (_, v) in row.iter_mut() {
                        *v *= &inv;
                    }
                    pivots.insert(lead, row);
                    break;
                }
                Some(pivot) => {
                    let factor = lead_val.clone();
                    row = sub_scaled_codes(&row, pivot, &factor);
                }
            }
        }
    }
    // back-reduce for the reduced form
    let leads: Vec<u64> = pivots.keys().copied().collect();
    for (i, &lead) in leads.iter().enumerate().rev() {
        let row = pivots[&lead].clone();
        for &earlier in &leads[..i] {
            let target = pivots.get_mut(&earlier).unwrap();
            if let Some(pos) = target.iter().position(|(c, _)| *c == lead) {
                let factor = target[pos].1.clone();
                *target = sub_scaled_codes(target, &row, &factor);
            }
        }
    }
    pivots
        .into_values()
        .map(|row| {
            let mut state = StateVector::zero(d, n);
            for (code, v) in row {
                state.add_amplitude_coded(code, v);
            }
            state
        })
        .collect()
}

fn sub_scaled_codes(
    row: &[(u64, GaussianRational)],
    pivot: &[(u64, GaussianRational)],
    factor: &GaussianRational,
) -> Vec<(u64, GaussianRational)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let mut i = 0;
    let mut j = 0;
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, -&(factor * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(factor * &pivot[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
