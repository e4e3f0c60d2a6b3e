//! Young diagrams (integer partitions) and SU(m) irrep dimensions.
//!
//! Rows are numbered top-to-bottom from 1, columns left-to-right from 1.
//! The canonical form stores no trailing zeros; the empty diagram is the
//! empty sequence.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum YoungError {
    #[error("not a partition: parts must be non-increasing and positive")]
    NotAPartition,
    #[error("diagram has {rows} rows, more than the allowed {max}")]
    TooManyRows { rows: usize, max: usize },
}

/// A partition λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_r ≥ 1), stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonicalizes `parts`, stripping trailing zeros. Rejects sequences
    /// that increase anywhere (which also catches interior zeros followed
    /// by a positive part).
    pub fn new(parts: &[u32]) -> Result<Self, YoungError> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(YoungError::NotAPartition);
            }
        }
        let mut parts = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a known-valid non-increasing positive sequence.
    ///
    /// Panics in debug builds if the invariant is violated.
    pub(crate) fn from_valid(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().map_or(true, |&p| p > 0));
        Partition { parts }
    }

    /// The rectangle (width)^rows; empty if either side is 0.
    pub fn rectangle(width: u32, rows: usize) -> Self {
        if width == 0 || rows == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![width; rows] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_i with the paper's convention λ_j = 0 for j beyond the last part.
    /// `i` is 1-based.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// λ_{p,q} := λ_p − λ_q (may be evaluated with q past the end).
    pub fn part_diff(&self, p: usize, q: usize) -> i64 {
        i64::from(self.part(p)) - i64::from(self.part(q))
    }

    /// |λ| = Σ λ_i.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// λ^T, enlisting column lengths.
    pub fn transpose(&self) -> Partition {
        let width = self.part(1) as usize;
        let mut cols = Vec::with_capacity(width);
        for j in 1..=width {
            let len = self.parts.iter().take_while(|&&p| p as usize >= j).count();
            cols.push(len as u32);
        }
        Partition { parts: cols }
    }

    /// Containment of diagrams: self_i ≤ other_i for all i.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.rows()).all(|i| self.part(i) <= other.part(i))
    }

    /// True iff λ is the trivial SU(m) diagram: empty or a rectangle with
    /// exactly m rows.
    pub fn is_trivial_for(&self, m: usize) -> bool {
        self.is_empty() || (self.rows() == m && self.parts.iter().all(|&p| p == self.parts[0]))
    }

    /// Strips full columns of height m: subtracts λ_m from every part.
    /// The SU(m) irrep is invariant under this map.
    pub fn reduce_mod(&self, m: usize) -> Result<Partition, YoungError> {
        if self.rows() > m {
            return Err(YoungError::TooManyRows { rows: self.rows(), max: m });
        }
        let last = self.part(m);
        if last == 0 {
            return Ok(self.clone());
        }
        let parts: Vec<u32> = self.parts.iter().map(|&p| p - last).collect();
        Ok(Partition::new(&parts).expect("reduction preserves monotonicity"))
    }

    /// Dimension of the SU(m) irrep E^λ by the hook-content product
    /// ∏_{(i,j)∈λ} (m + j − i) / hook(i,j), evaluated exactly.
    pub fn irrep_dim(&self, m: usize) -> Result<BigUint, YoungError> {
        if self.rows() > m {
            return Err(YoungError::TooManyRows { rows: self.rows(), max: m });
        }
        let transpose = self.transpose();
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (i, &len) in self.parts.iter().enumerate() {
            let i = i + 1;
            for j in 1..=len as usize {
                // content factor m + j − i is positive because i ≤ m
                num *= BigUint::from((m + j - i) as u64);
                let hook = (len as usize - j) + (transpose.part(j) as usize - i) + 1;
                den *= BigUint::from(hook as u64);
            }
        }
        Ok(num / den)
    }

    /// Key form used in JSON maps, e.g. "5.3.2"; the empty diagram is "".
    pub fn dotted(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Left-justified box picture; `(empty)` for the empty diagram.
    pub fn render_ascii(&self) -> String {
        if self.is_empty() {
            return "(empty)".to_string();
        }
        let mut out = String::new();
        for (i, &len) in self.parts.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            for _ in 0..len {
                out.push_str("[ ]");
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions fitting in a `max_rows` × `max_part` box, the empty one
/// included, in lexicographically descending part order.
pub fn partitions_in_box(max_rows: usize, max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(out: &mut Vec<Partition>, current: &mut Vec<u32>, rows_left: usize, max: u32) {
        out.push(Partition::from_valid(current.clone()));
        if rows_left == 0 {
            return;
        }
        for p in (1..=max).rev() {
            current.push(p);
            rec(out, current, rows_left - 1, p);
            current.pop();
        }
    }
    rec(&mut out, &mut current, max_rows, max_part);
    out.sort();
    out.reverse();
    out.dedup();
    out
}

/// All partitions of weight n with at most `max_rows` rows.
pub fn partitions_of(n: u64, max_rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(out: &mut Vec<Partition>, current: &mut Vec<u32>, left: u64, rows_left: usize, max: u64) {
        if left == 0 {
            out.push(Partition::from_valid(current.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        let hi = max.min(left);
        for p in (1..=hi).rev() {
            // remaining rows must be able to absorb the rest
            if (left - p) > p * (rows_left as u64 - 1) {
                continue;
            }
            current.push(p as u32);
            rec(out, current, left - p, rows_left - 1, p);
            current.pop();
        }
    }
    rec(&mut out, &mut current, n, max_rows, u64::from(u32::MAX));
    out
}
