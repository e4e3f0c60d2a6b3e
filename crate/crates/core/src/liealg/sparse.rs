//! Sparse operators and state vectors over Gaussian rationals, indexed by
//! tensor-basis multi-indices (party 1 most significant).

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::scalar::GaussianRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("unsupported dimension {0}")]
    UnsupportedDim(usize),
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("zero state")]
    ZeroState,
    #[error("party count {n_parties} is not a multiple of the block size {block}")]
    BadArity { n_parties: usize, block: usize },
    #[error("operator dimensions disagree: {0} vs {1}")]
    DimMismatch(usize, usize),
}

/// Sparse matrix with exact entries; zero entries are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOperator {
    dim: usize,
    entries: BTreeMap<(usize, usize), GaussianRational>,
}

impl SparseOperator {
    pub fn zero(dim: usize) -> Self {
        SparseOperator { dim, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        let mut op = Self::zero(dim);
        for i in 0..dim {
            op.set(i, i, GaussianRational::one());
        }
        op
    }

    /// |row⟩⟨col| scaled by `value`, accumulated.
    pub fn add_entry(&mut self, row: usize, col: usize, value: GaussianRational) {
        assert!(row < self.dim && col < self.dim);
        let slot = self.entries.entry((row, col)).or_insert_with(GaussianRational::zero);
        *slot += &value;
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn set(&mut self, row: usize, col: usize, value: GaussianRational) {
        assert!(row < self.dim && col < self.dim);
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &GaussianRational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> GaussianRational {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn transpose(&self) -> SparseOperator {
        let mut out = SparseOperator::zero(self.dim);
        for (r, c, v) in self.entries() {
            out.set(c, r, v.clone());
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.entries().all(|(r, c, v)| {
            let mirrored = self.get(c, r);
            (&mirrored + v).is_zero()
        })
    }

    pub fn add(&self, other: &SparseOperator) -> Result<SparseOperator, LieError> {
        if self.dim != other.dim {
            return Err(LieError::DimMismatch(self.dim, other.dim));
        }
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_entry(r, c, v.clone());
        }
        Ok(out)
    }

    pub fn matmul(&self, other: &SparseOperator) -> Result<SparseOperator, LieError> {
        if self.dim != other.dim {
            return Err(LieError::DimMismatch(self.dim, other.dim));
        }
        let mut out = SparseOperator::zero(self.dim);
        let rows = other.rows();
        for (r, c, v) in self.entries() {
            if let Some(row) = rows.get(&c) {
                for (j, v2) in row {
                    out.add_entry(r, *j, v * v2);
                }
            }
        }
        Ok(out)
    }

    /// Row-major view: row → [(col, value)].
    pub fn rows(&self) -> BTreeMap<usize, Vec<(usize, GaussianRational)>> {
        let mut rows: BTreeMap<usize, Vec<(usize, GaussianRational)>> = BTreeMap::new();
        for (r, c, v) in self.entries() {
            rows.entry(r).or_default().push((c, v.clone()));
        }
        rows
    }

    /// Column-major view: col → [(row, value)].
    pub fn columns(&self) -> BTreeMap<usize, Vec<(usize, GaussianRational)>> {
        let mut cols: BTreeMap<usize, Vec<(usize, GaussianRational)>> = BTreeMap::new();
        for (r, c, v) in self.entries() {
            cols.entry(c).or_default().push((r, v.clone()));
        }
        cols
    }

    pub fn trace(&self) -> GaussianRational {
        let mut t = GaussianRational::zero();
        for i in 0..self.dim {
            t += &self.get(i, i);
        }
        t
    }
}

/// Multi-index helpers: party 1 is the most significant digit.
pub fn encode_index(digits: &[usize], local_dim: usize) -> u64 {
    let mut code = 0u64;
    for &d in digits {
        debug_assert!(d < local_dim);
        code = code * local_dim as u64 + d as u64;
    }
    code
}

pub fn decode_index(code: u64, local_dim: usize, parties: usize) -> Vec<usize> {
    let mut digits = vec![0usize; parties];
    let mut rest = code;
    for slot in digits.iter_mut().rev() {
        *slot = (rest % local_dim as u64) as usize;
        rest /= local_dim as u64;
    }
    digits
}

/// A vector in (C^d)^⊗N with finitely many nonzero exact amplitudes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    local_dim: usize,
    parties: usize,
    amps: BTreeMap<u64, GaussianRational>,
}

impl StateVector {
    pub fn zero(local_dim: usize, parties: usize) -> Self {
        StateVector { local_dim, parties, amps: BTreeMap::new() }
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn parties(&self) -> usize {
        self.parties
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn support(&self) -> usize {
        self.amps.len()
    }

    pub fn add_amplitude(&mut self, digits: &[usize], value: GaussianRational) {
        assert_eq!(digits.len(), self.parties);
        self.add_amplitude_coded(encode_index(digits, self.local_dim), value);
    }

    pub fn add_amplitude_coded(&mut self, code: u64, value: GaussianRational) {
        let slot = self.amps.entry(code).or_insert_with(GaussianRational::zero);
        *slot += &value;
        if slot.is_zero() {
            self.amps.remove(&code);
        }
    }

    pub fn amplitude(&self, digits: &[usize]) -> GaussianRational {
        self.amps
            .get(&encode_index(digits, self.local_dim))
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// (code, amplitude) pairs in ascending multi-index order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, &GaussianRational)> {
        self.amps.iter().map(|(&c, v)| (c, v))
    }

    /// ⟨ψ|ψ⟩ in the orthonormal computational basis.
    pub fn norm_sq(&self) -> BigRational {
        self.amps.values().map(|a| a.norm_sq()).sum()
    }

    /// ⟨ψ|ψ⟩ when local basis vector s has squared norm `weights[s]`.
    pub fn norm_sq_weighted(&self, weights: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (code, a) in self.iter() {
            let mut w = a.norm_sq();
            for digit in decode_index(code, self.local_dim, self.parties) {
                w *= &weights[digit];
            }
            total += w;
        }
        total
    }

    pub fn scale(&mut self, factor: &GaussianRational) {
        if factor.is_zero() {
            self.amps.clear();
            return;
        }
        for v in self.amps.values_mut() {
            *v *= factor;
        }
    }

    /// Applies the one-party operator `op` on every party and sums
    /// (the diagonal Lie-algebra action), returning the image state.
    pub fn apply_diagonal(&self, op: &SparseOperator) -> Result<StateVector, LieError> {
        if op.dim() != self.local_dim {
            return Err(LieError::DimMismatch(op.dim(), self.local_dim));
        }
        let cols = op.columns();
        let mut out = StateVector::zero(self.local_dim, self.parties);
        for (code, amp) in self.iter() {
            let digits = decode_index(code, self.local_dim, self.parties);
            // party p stride: local_dim^(parties−1−p)
            let mut stride = (self.local_dim as u64).pow(self.parties as u32 - 1);
            for &digit in &digits {
                if let Some(col) = cols.get(&digit) {
                    for (row, v) in col {
                        let shifted =
                            code + stride * (*row as u64) - stride * (digit as u64);
                        out.add_amplitude_coded(shifted, amp * v);
                    }
                }
                stride /= self.local_dim as u64;
            }
        }
        Ok(out)
    }

    /// JSON per the wire format: {"d":…, "N":…, "amplitudes":[{"index":[…],
    /// "re":"p/q", "im":"p/q"}…]}.
    pub fn to_json(&self) -> serde_json::Value {
        let amps: Vec<serde_json::Value> = self
            .iter()
            .map(|(code, a)| {
                let digits = decode_index(code, self.local_dim, self.parties);
                serde_json::json!({
                    "index": digits,
                    "re": a.re.to_string(),
                    "im": a.im.to_string(),
                })
            })
            .collect();
        serde_json::json!({
            "d": self.local_dim,
            "N": self.parties,
            "amplitudes": amps,
        })
    }
}

/// The N-party Leibniz sum Ã = A⊗1⊗…⊗1 + … + 1⊗…⊗1⊗A as an explicit
/// sparse matrix on dimension dim(A)^N.
pub fn diagonal_action(
    op: &SparseOperator,
    n_parties: usize,
    dim_cap: usize,
) -> Result<SparseOperator, LieError> {
    let d = op.dim();
    let total = (d as u64).checked_pow(n_parties as u32).unwrap_or(u64::MAX);
    if total > dim_cap as u64 {
        return Err(LieError::ResourceBound(format!(
            "dimension {d}^{n_parties} exceeds the cap {dim_cap}"
        )));
    }
    let total = total as usize;
    let mut out = SparseOperator::zero(total);
    for (r, c, v) in op.entries() {
        for p in 0..n_parties {
            let stride = d.pow((n_parties - 1 - p) as u32);
            // indices agreeing everywhere except party p
            let block = d.pow(p as u32);
            let inner = stride;
            for b in 0..block {
                for i in 0..inner {
                    let row = b * stride * d + r * stride + i;
                    let col = b * stride * d + c * stride + i;
                    out.add_entry(row, col, v.clone());
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_action_small() {
        // |0⟩⟨1| on two qubits: exactly 4 nonzero entries
        let mut op = SparseOperator::zero(2);
        op.set(0, 1, GaussianRational::one());
        let big = diagonal_action(&op, 2, 100).unwrap();
        assert_eq!(big.nnz(), 4);
        // built by hand: (r,c) pairs 00←10, 01←11, 00←01, 10←11
        for (row, col) in [(0usize, 2usize), (1, 3), (0, 1), (2, 3)] {
            assert_eq!(big.get(row, col), GaussianRational::one());
        }

        let id = SparseOperator::identity(3);
        let big = diagonal_action(&id, 2, 100).unwrap();
        for i in 0..9 {
            assert_eq!(big.get(i, i), GaussianRational::from_int(2));
        }

        let single = diagonal_action(&op, 1, 100).unwrap();
        assert_eq!(single, op);
    }

    #[test]
    fn diagonal_action_respects_cap() {
        let op = SparseOperator::identity(10);
        assert!(matches!(
            diagonal_action(&op, 6, 20000),
            Err(LieError::ResourceBound(_))
        ));
    }

    #[test]
    fn apply_diagonal_agrees_with_materialized() {
        let mut op = SparseOperator::zero(2);
        op.set(0, 1, GaussianRational::one());
        op.set(1, 0, GaussianRational::imag_int(1));
        let mut psi = StateVector::zero(2, 3);
        psi.add_amplitude(&[0, 1, 1], GaussianRational::from_int(2));
        psi.add_amplitude(&[1, 0, 1], GaussianRational::imag_int(-1));

        let image = psi.apply_diagonal(&op).unwrap();
        let big = diagonal_action(&op, 3, 100).unwrap();
        let mut expected = StateVector::zero(2, 3);
        for (code, amp) in psi.iter() {
            for (r, c, v) in big.entries() {
                if c as u64 == code {
                    expected.add_amplitude_coded(r as u64, amp * v);
                }
            }
        }
        assert_eq!(image, expected);
    }

    #[test]
    fn diagonal_action_is_linear() {
        let mut a = SparseOperator::zero(3);
        a.set(0, 1, GaussianRational::one());
        a.set(2, 2, GaussianRational::imag_int(3));
        let mut b = SparseOperator::zero(3);
        b.set(1, 0, GaussianRational::from_ratio(1, 2));
        b.set(0, 1, GaussianRational::imag_int(-1));
        let sum = a.add(&b).unwrap();
        let lhs = diagonal_action(&sum, 3, 1000).unwrap();
        let rhs = diagonal_action(&a, 3, 1000)
            .unwrap()
            .add(&diagonal_action(&b, 3, 1000).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn index_codec_roundtrip() {
        let digits = vec![2usize, 0, 3, 1];
        let code = encode_index(&digits, 4);
        assert_eq!(decode_index(code, 4, 4), digits);
        assert_eq!(encode_index(&[1, 0], 2), 2); // party 1 most significant
    }
}
