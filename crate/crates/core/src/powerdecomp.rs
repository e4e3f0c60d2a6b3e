//! Tensor powers of SU(m) irreps and trivial-representation multiplicities
//! by three routes: iterated Littlewood–Richardson products, the Fulton
//! staircase reduction to one skew coefficient, and (for the natural and
//! symmetric representations) closed-form counts — multidimensional Catalan
//! numbers, generalized Dyck sequences and iterated spin composition.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lrcalc::{self, Decomposition, RowBound};
use crate::young::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PowerError {
    #[error("diagram has {rows} rows, more than the allowed {max}")]
    TooManyRows { rows: usize, max: usize },
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
}

/// A tensor-power query: the N-fold power of the SU(m) irrep E^λ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerQuery {
    pub lambda: Partition,
    pub m: usize,
    pub n_parties: usize,
}

impl PowerQuery {
    pub fn new(lambda: Partition, m: usize, n_parties: usize) -> Result<Self, PowerError> {
        if lambda.rows() > m {
            return Err(PowerError::TooManyRows { rows: lambda.rows(), max: m });
        }
        Ok(PowerQuery { lambda, m, n_parties })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrivialMethod {
    Iterated,
    Staircase,
}

/// Caps for iterated products.
#[derive(Debug, Clone, Copy)]
pub struct PowerCaps {
    /// Maximum number of distinct intermediate diagrams.
    pub max_diagrams: usize,
}

impl Default for PowerCaps {
    fn default() -> Self {
        PowerCaps { max_diagrams: 1_000_000 }
    }
}

/// Iterated-product engine with a memo cache for pairwise expansions,
/// keyed by the left factor (λ and m are fixed per engine).
pub struct PowerEngine {
    lambda: Partition,
    m: usize,
    caps: PowerCaps,
    cache: HashMap<Partition, Decomposition>,
    bounded_cache: HashMap<(Partition, Partition), Decomposition>,
}

impl PowerEngine {
    pub fn new(lambda: Partition, m: usize, caps: PowerCaps) -> Result<Self, PowerError> {
        if lambda.rows() > m {
            return Err(PowerError::TooManyRows { rows: lambda.rows(), max: m });
        }
        Ok(PowerEngine { lambda, m, caps, cache: HashMap::new(), bounded_cache: HashMap::new() })
    }

    fn expand(&mut self, nu: &Partition) -> Decomposition {
        if let Some(hit) = self.cache.get(nu) {
            return hit.clone();
        }
        let d = lrcalc::expand_inner(nu, &self.lambda, RowBound::Su(self.m), None);
        self.cache.insert(nu.clone(), d.clone());
        d
    }

    fn expand_bounded(&mut self, nu: &Partition, bound: &Partition) -> Decomposition {
        let key = (nu.clone(), bound.clone());
        if let Some(hit) = self.bounded_cache.get(&key) {
            return hit.clone();
        }
        let d = lrcalc::expand_inner(nu, &self.lambda, RowBound::Su(self.m), Some(bound));
        self.bounded_cache.insert(key, d.clone());
        d
    }

    /// Full decomposition of (E^λ)^⊗N, diagrams carrying absolute box
    /// counts (no mod-m reduction).
    pub fn power(&mut self, n_parties: usize) -> Result<Decomposition, PowerError> {
        let mut acc = Decomposition::singleton(Partition::empty());
        for _ in 0..n_parties {
            acc = self.multiply(&acc, None)?;
        }
        Ok(acc)
    }

    /// Multiplicity of the target rectangle in (E^λ)^⊗N, pruning every
    /// intermediate diagram that is not contained in the rectangle
    /// (containment only grows along an expansion chain).
    pub fn trivial_multiplicity(&mut self, n_parties: usize) -> Result<BigUint, PowerError> {
        let total = self.lambda.weight() * n_parties as u64;
        if total % self.m as u64 != 0 {
            return Ok(BigUint::zero());
        }
        let width = u32::try_from(total / self.m as u64)
            .map_err(|_| PowerError::ResourceBound("rectangle width exceeds u32".into()))?;
        let rect = Partition::rectangle(width, self.m);
        let mut acc = Decomposition::singleton(Partition::empty());
        for _ in 0..n_parties {
            acc = self.multiply(&acc, Some(&rect))?;
            if acc.is_empty() {
                return Ok(BigUint::zero());
            }
        }
        Ok(acc.multiplicity(&rect))
    }

    fn multiply(
        &mut self,
        acc: &Decomposition,
        bound: Option<&Partition>,
    ) -> Result<Decomposition, PowerError> {
        let mut next = Decomposition::new();
        for (nu, mult) in acc.iter() {
            let nu = nu.clone();
            let mult = mult.clone();
            let expansion = match bound {
                Some(b) => self.expand_bounded(&nu, b),
                None => self.expand(&nu),
            };
            for (target, count) in expansion.iter() {
                next.add(target.clone(), count * &mult);
            }
            if next.len() > self.caps.max_diagrams {
                return Err(PowerError::ResourceBound(format!(
                    "more than {} distinct intermediate diagrams",
                    self.caps.max_diagrams
                )));
            }
        }
        Ok(next)
    }
}

/// Full decomposition of (E^λ)^⊗N over SU(m) by N iterated products.
pub fn tensor_power_decompose(q: &PowerQuery, caps: PowerCaps) -> Result<Decomposition, PowerError> {
    PowerEngine::new(q.lambda.clone(), q.m, caps)?.power(q.n_parties)
}

/// Lemma: the trivial component can only appear when m divides N·|λ|.
pub fn necessary_condition(q: &PowerQuery) -> bool {
    (q.lambda.weight() * q.n_parties as u64) % (q.m as u64) == 0
}

/// Multiplicity of the trivial SU(m) representation — the rectangle
/// (N|λ|/m)^m — in (E^λ)^⊗N.
pub fn trivial_multiplicity(
    q: &PowerQuery,
    method: TrivialMethod,
    caps: PowerCaps,
) -> Result<BigUint, PowerError> {
    if !necessary_condition(q) {
        return Ok(BigUint::zero());
    }
    if q.lambda.is_empty() {
        return Ok(BigUint::one());
    }
    match method {
        TrivialMethod::Iterated => {
            PowerEngine::new(q.lambda.clone(), q.m, caps)?.trivial_multiplicity(q.n_parties)
        }
        TrivialMethod::Staircase => {
            let (alpha, gamma) = fulton_staircase(&q.lambda, q.n_parties);
            let width = u32::try_from(q.lambda.weight() * q.n_parties as u64 / q.m as u64)
                .map_err(|_| PowerError::ResourceBound("rectangle width exceeds u32".into()))?;
            let beta = Partition::rectangle(width, q.m);
            Ok(lrcalc::lr_skew_coefficient(&gamma, &alpha, &beta)
                .expect("staircase construction contains alpha"))
        }
    }
}

/// Arranges n copies of λ corner to corner (the top right corner point of
/// each copy touching the bottom left corner point of the next) into a skew
/// shape γ/α; the copies share no row and no column, so the skew Schur
/// function of γ/α is the n-th power of s_λ.
pub fn fulton_staircase(lambda: &Partition, n: usize) -> (Partition, Partition) {
    assert!(!lambda.is_empty(), "staircase of the empty diagram");
    let r = lambda.rows();
    let width = lambda.part(1);
    let mut alpha = Vec::with_capacity(n * r);
    let mut gamma = Vec::with_capacity(n * r);
    for copy in 0..n {
        let shift = (n - 1 - copy) as u32 * width;
        for i in 1..=r {
            alpha.push(shift);
            gamma.push(shift + lambda.part(i));
        }
    }
    (
        Partition::new(&alpha).expect("staircase alpha is a partition"),
        Partition::new(&gamma).expect("staircase gamma is a partition"),
    )
}

/// The d-dimensional Catalan number c_k^{(d)} = (kd)! ∏_{i=0}^{k−1} i!/(d+i)!.
pub fn catalan_multidim(d: usize, k: usize) -> BigUint {
    let mut value = factorial(k * d);
    for i in 0..k {
        value *= factorial(i);
        value /= factorial(d + i);
    }
    value
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// Counts sequences (a_1..a_{kd}) over 1..d, each letter appearing k times,
/// whose every prefix has #{a_i = n} ≤ #{a_i = n−1}. These are in bijection
/// with generalized Dyck paths and counted by `catalan_multidim`.
pub fn dyck_sequence_count(d: usize, k: usize, cap: usize) -> Result<BigUint, PowerError> {
    if d == 0 || k == 0 {
        return Ok(BigUint::one());
    }
    if k * d > cap {
        return Err(PowerError::ResourceBound(format!(
            "sequence length {} exceeds cap {cap}",
            k * d
        )));
    }
    let mut memo: HashMap<Vec<u32>, BigUint> = HashMap::new();
    fn walk(counts: &mut Vec<u32>, k: u32, memo: &mut HashMap<Vec<u32>, BigUint>) -> BigUint {
        if counts.iter().all(|&c| c == k) {
            return BigUint::one();
        }
        if let Some(hit) = memo.get(counts) {
            return hit.clone();
        }
        let mut total = BigUint::zero();
        for n in 0..counts.len() {
            if counts[n] == k {
                continue;
            }
            if n > 0 && counts[n] + 1 > counts[n - 1] {
                continue;
            }
            counts[n] += 1;
            total += walk(counts, k, memo);
            counts[n] -= 1;
        }
        memo.insert(counts.clone(), total.clone());
        total
    }
    let mut counts = vec![0u32; d];
    Ok(walk(&mut counts, k as u32, &mut memo))
}

/// Multiplicity of spin 0 in the N-fold tensor power of the spin-(d−1)/2
/// representation, by the interval (Clebsch–Gordan) recurrence on vectors
/// indexed by twice the spin.
pub fn su2_singlet_multiplicity(d: usize, n_parties: usize) -> BigUint {
    if d == 0 {
        return BigUint::zero();
    }
    let j2 = d - 1; // twice the local spin
    let mut mult: Vec<BigUint> = vec![BigUint::one()];
    // mult[t] = multiplicity of twice-spin t; start with the trivial product
    for _ in 0..n_parties {
        let top = mult.len() - 1 + j2;
        let mut next: Vec<BigUint> = vec![BigUint::zero(); top + 1];
        for (t, c) in mult.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let lo = t.abs_diff(j2);
            let hi = t + j2;
            let mut s = lo;
            while s <= hi {
                next[s] += c;
                s += 2;
            }
        }
        mult = next;
    }
    mult[0].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young::partitions_in_box;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn query(lambda: &[u32], m: usize, n: usize) -> PowerQuery {
        PowerQuery::new(p(lambda), m, n).unwrap()
    }

    fn trivial(lambda: &[u32], m: usize, n: usize, method: TrivialMethod) -> BigUint {
        trivial_multiplicity(&query(lambda, m, n), method, PowerCaps::default()).unwrap()
    }

    #[test]
    fn small_powers() {
        let d = tensor_power_decompose(&query(&[1], 2, 2), PowerCaps::default()).unwrap();
        assert_eq!(d.multiplicity(&p(&[2])), BigUint::one());
        assert_eq!(d.multiplicity(&p(&[1, 1])), BigUint::one());
        assert_eq!(d.len(), 2);

        let d = tensor_power_decompose(&query(&[1], 2, 4), PowerCaps::default()).unwrap();
        assert_eq!(d.multiplicity(&p(&[2, 2])), BigUint::from(2u32));

        let d = tensor_power_decompose(&query(&[2], 3, 3), PowerCaps::default()).unwrap();
        assert_eq!(d.multiplicity(&p(&[2, 2, 2])), BigUint::one());
    }

    #[test]
    fn dimension_balance() {
        // d^N = Σ mult(ν)·dim(ν) over the power of the natural rep
        for d in 2..=4usize {
            for n in 1..=5usize {
                let dec =
                    tensor_power_decompose(&query(&[1], d, n), PowerCaps::default()).unwrap();
                let total: BigUint = dec
                    .iter()
                    .map(|(q, c)| c * q.reduce_mod(d).unwrap().irrep_dim(d).unwrap())
                    .sum();
                assert_eq!(total, BigUint::from(d as u64).pow(n as u32));
            }
        }
    }

    #[test]
    fn trivial_multiplicities_from_table() {
        assert_eq!(trivial(&[1], 3, 6, TrivialMethod::Iterated), BigUint::from(5u32));
        assert_eq!(trivial(&[1], 4, 6, TrivialMethod::Iterated), BigUint::zero());
        // frozen by the iterated-LR computation: the square of the su(3)
        // octet count (the f and d invariant tensors)
        assert_eq!(trivial(&[2, 1], 3, 3, TrivialMethod::Iterated), BigUint::from(2u32));
        assert_eq!(trivial(&[2, 1], 3, 3, TrivialMethod::Staircase), BigUint::from(2u32));
    }

    #[test]
    fn necessary_condition_cases() {
        assert!(necessary_condition(&query(&[1], 3, 6)));
        assert!(!necessary_condition(&query(&[3], 2, 3)));
        assert!(necessary_condition(&query(&[2, 1], 3, 3)));
    }

    #[test]
    fn staircase_geometry() {
        let (alpha, gamma) = fulton_staircase(&p(&[1]), 3);
        assert_eq!(alpha, p(&[2, 1]));
        assert_eq!(gamma, p(&[3, 2, 1]));

        let (alpha, gamma) = fulton_staircase(&p(&[2]), 2);
        assert_eq!(alpha, p(&[2]));
        assert_eq!(gamma, p(&[4, 2]));

        // two translated copies of λ sharing no row or column
        let (alpha, gamma) = fulton_staircase(&p(&[2, 1]), 2);
        assert_eq!(alpha, p(&[2, 2]));
        assert_eq!(gamma, p(&[4, 3, 2, 1]));
        assert_eq!(gamma.weight() - alpha.weight(), 2 * 3);

        assert_eq!(
            trivial(&[1], 3, 3, TrivialMethod::Staircase),
            trivial(&[1], 3, 3, TrivialMethod::Iterated)
        );
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan_multidim(7, 1), BigUint::one());
        assert_eq!(catalan_multidim(2, 2), BigUint::from(2u32));
        assert_eq!(catalan_multidim(3, 2), BigUint::from(5u32));
        assert_eq!(catalan_multidim(2, 5), BigUint::from(42u32));
        assert_eq!(catalan_multidim(3, 4), BigUint::from(462u32));
    }

    #[test]
    fn dyck_counts() {
        let dyck = |d, k| dyck_sequence_count(d, k, 64).unwrap();
        assert_eq!(dyck(2, 2), BigUint::from(2u32));
        assert_eq!(dyck(3, 1), BigUint::one());
        assert_eq!(dyck(3, 2), BigUint::from(5u32));
        assert_eq!(
            dyck_sequence_count(5, 20, 64),
            Err(PowerError::ResourceBound("sequence length 100 exceeds cap 64".into()))
        );
    }

    #[test]
    fn spin_composition() {
        assert_eq!(su2_singlet_multiplicity(2, 4), BigUint::from(2u32));
        assert_eq!(su2_singlet_multiplicity(4, 3), BigUint::zero());
        assert_eq!(su2_singlet_multiplicity(3, 4), BigUint::from(3u32));
        // one lone spin-1 particle has no singlet component
        assert_eq!(su2_singlet_multiplicity(3, 1), BigUint::zero());
        // spin-1 singlet counts (Riordan numbers) for N = 2..10
        let riordan: [u32; 9] = [1, 1, 3, 6, 15, 36, 91, 232, 603];
        for (n, want) in riordan.iter().enumerate() {
            assert_eq!(su2_singlet_multiplicity(3, n + 2), BigUint::from(*want));
        }
    }

    #[test]
    fn su2_identity_with_single_row_powers() {
        // spin composition equals the SU(2) single-row power multiplicity
        for d in 2..=5usize {
            for n in 1..=8usize {
                assert_eq!(
                    su2_singlet_multiplicity(d, n),
                    trivial(&[(d - 1) as u32], 2, n, TrivialMethod::Iterated),
                    "d={d} N={n}"
                );
            }
        }
    }

    #[test]
    fn route_agreement_small() {
        for lambda in partitions_in_box(4, 4) {
            if lambda.is_empty() || lambda.weight() > 4 {
                continue;
            }
            for m in lambda.rows().max(1)..=4 {
                for n in 1..=4usize {
                    let q = PowerQuery::new(lambda.clone(), m, n).unwrap();
                    let a = trivial_multiplicity(&q, TrivialMethod::Iterated, PowerCaps::default())
                        .unwrap();
                    let b = trivial_multiplicity(&q, TrivialMethod::Staircase, PowerCaps::default())
                        .unwrap();
                    assert_eq!(a, b, "{lambda} m={m} N={n}");
                }
            }
        }
    }

    #[test]
    fn lemma_contrapositive() {
        for lambda in partitions_in_box(3, 3) {
            if lambda.is_empty() {
                continue;
            }
            for m in lambda.rows().max(1)..=4 {
                for n in 1..=4usize {
                    let q = PowerQuery::new(lambda.clone(), m, n).unwrap();
                    if !necessary_condition(&q) {
                        assert_eq!(
                            trivial_multiplicity(&q, TrivialMethod::Iterated, PowerCaps::default())
                                .unwrap(),
                            BigUint::zero()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn resource_bound_reported() {
        let q = query(&[1], 2, 4);
        let err = tensor_power_decompose(&q, PowerCaps { max_diagrams: 1 });
        assert!(matches!(err, Err(PowerError::ResourceBound(_))));
    }
}
