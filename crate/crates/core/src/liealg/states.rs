//! Explicit states: k-fold antisymmetrizer products, the three SO(d) N=4
//! solutions, and the three-trap boson state with its printed norm.

use num_rational::BigRational;

use super::groups::{boson_basis, boson_basis_weights};
use super::scalar::GaussianRational;
use super::sparse::{LieError, StateVector};

/// The k-fold tensor product of d-party antisymmetrizers on N = kd parties:
/// block b holds the Levi-Civita state over parties bd+1..(b+1)d.
pub fn antisym_state(d: usize, n_parties: usize) -> Result<StateVector, LieError> {
    if d == 0 || n_parties == 0 || n_parties % d != 0 {
        return Err(LieError::BadArity { n_parties, block: d });
    }
    let blocks = n_parties / d;
    let mut state = StateVector::zero(d, n_parties);
    let perms = permutations(d);
    let mut assignment = vec![0usize; n_parties];
    fn fill(
        state: &mut StateVector,
        assignment: &mut Vec<usize>,
        perms: &[(Vec<usize>, i64)],
        block: usize,
        blocks: usize,
        d: usize,
        sign: i64,
    ) {
        if block == blocks {
            state.add_amplitude(assignment, GaussianRational::from_int(sign));
            return;
        }
        for (perm, s) in perms {
            for (offset, &v) in perm.iter().enumerate() {
                assignment[block * d + offset] = v;
            }
            fill(state, assignment, perms, block + 1, blocks, d, sign * s);
        }
    }
    fill(&mut state, &mut assignment, &perms, 0, blocks, d, 1);
    Ok(state)
}

fn permutations(d: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut used = vec![false; d];
    let mut current = Vec::with_capacity(d);
    fn rec(
        d: usize,
        used: &mut Vec<bool>,
        current: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, i64)>,
    ) {
        if current.len() == d {
            let mut inversions = 0usize;
            for i in 0..d {
                for j in i + 1..d {
                    if current[i] > current[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((current.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..d {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(d, used, current, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(d, &mut used, &mut current, &mut out);
    out
}

/// The three printed N=4 solutions for diagonal SO(d) symmetry:
/// Ψ1 = Σ|i,j,j,i⟩, Ψ2 = Σ_{i≠j}(|i,j,i,j⟩−|i,j,j,i⟩),
/// Ψ3 = Σ_{i≠j}(|i,i,j,j⟩−|i,j,j,i⟩).
pub fn so_n4_states(d: usize) -> (StateVector, StateVector, StateVector) {
    assert!(d >= 2);
    let one = GaussianRational::one;
    let neg = || GaussianRational::from_int(-1);
    let mut psi1 = StateVector::zero(d, 4);
    let mut psi2 = StateVector::zero(d, 4);
    let mut psi3 = StateVector::zero(d, 4);
    for i in 0..d {
        for j in 0..d {
            psi1.add_amplitude(&[i, j, j, i], one());
            if i != j {
                psi2.add_amplitude(&[i, j, i, j], one());
                psi2.add_amplitude(&[i, j, j, i], neg());
                psi3.add_amplitude(&[i, i, j, j], one());
                psi3.add_amplitude(&[i, j, j, i], neg());
            }
        }
    }
    (psi1, psi2, psi3)
}

/// The printed three-trap boson state, stored in the monomial occupation
/// basis where its amplitudes are rational; the printed normalization is a
/// further global factor whose square `printed_scale_sq` is rational, so
/// the printed squared norm is reported exactly.
pub struct PaperBosonState {
    pub state: StateVector,
    /// Square of the global factor relating the stored amplitudes to the
    /// printed state.
    pub printed_scale_sq: BigRational,
}

impl PaperBosonState {
    /// ⟨Ψ|Ψ⟩ of the state exactly as printed.
    pub fn printed_norm_sq(&self) -> BigRational {
        let weights = boson_basis_weights(3, 2);
        self.state.norm_sq_weighted(&weights) * &self.printed_scale_sq
    }
}

/// Expands Ŝ(|200⟩|020⟩|002⟩ + (1/√2)|110⟩|101⟩|011⟩ − ½(|200⟩|011⟩|011⟩ +
/// |020⟩|101⟩|101⟩ + |002⟩|110⟩|110⟩)) over the monomial occupation basis
/// of three traps of S²(C³).
pub fn paper_boson_state() -> PaperBosonState {
    let basis = boson_basis(3, 2);
    let index_of = |occ: &[u32]| basis.iter().position(|b| b == occ).unwrap();

    let doubled = [index_of(&[2, 0, 0]), index_of(&[0, 2, 0]), index_of(&[0, 0, 2])];
    let singles = [index_of(&[1, 1, 0]), index_of(&[1, 0, 1]), index_of(&[0, 1, 1])];
    let pair_for = [index_of(&[0, 1, 1]), index_of(&[1, 0, 1]), index_of(&[1, 1, 0])];

    let mut state = StateVector::zero(6, 3);
    // Ŝ sums all 3! trap assignments; identical kets double up
    let perms3: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    // |200⟩|020⟩|002⟩: printed amplitude 1, monomial amplitude 1/(2√2) = (1/2)·s
    for perm in &perms3 {
        let digits = [doubled[perm[0]], doubled[perm[1]], doubled[perm[2]]];
        state.add_amplitude(&digits, GaussianRational::from_ratio(1, 2));
    }
    // (1/√2)|110⟩|101⟩|011⟩: monomial amplitude 1/√2 = 1·s
    for perm in &perms3 {
        let digits = [singles[perm[0]], singles[perm[1]], singles[perm[2]]];
        state.add_amplitude(&digits, GaussianRational::one());
    }
    // −½ Σ_x |2e_x⟩|pair_x⟩|pair_x⟩: each arrangement occurs twice under Ŝ,
    // giving printed amplitude −1, monomial −1/√2 = −1·s
    for x in 0..3 {
        for spot in 0..3 {
            let mut digits = [pair_for[x]; 3];
            digits[spot] = doubled[x];
            state.add_amplitude(&digits, GaussianRational::from_int(-1));
        }
    }

    PaperBosonState {
        state,
        printed_scale_sq: BigRational::new(1.into(), 2.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::density::{is_lme, is_lme_weighted, reduced_density_weighted};
    use crate::liealg::groups::{bosonic_all_mode_ops, su_simple_root_ops};
    use num_traits::Zero;

    #[test]
    fn antisym_single_block_is_singlet() {
        let s = antisym_state(2, 2).unwrap();
        assert_eq!(s.amplitude(&[0, 1]), GaussianRational::one());
        assert_eq!(s.amplitude(&[1, 0]), GaussianRational::from_int(-1));
        assert!(antisym_state(2, 3).is_err());
    }

    #[test]
    fn levi_civita_annihilated_by_su3_generators() {
        let s = antisym_state(3, 3).unwrap();
        for op in su_simple_root_ops(3) {
            assert!(s.apply_diagonal(&op).unwrap().is_zero());
        }
        assert!(is_lme(&s).unwrap());
    }

    #[test]
    fn double_singlet_in_four_party_kernel() {
        let s = antisym_state(2, 4).unwrap();
        for op in su_simple_root_ops(2) {
            assert!(s.apply_diagonal(&op).unwrap().is_zero());
        }
        assert!(is_lme(&s).unwrap());
    }

    #[test]
    fn boson_state_printed_norm_is_18() {
        let paper = paper_boson_state();
        assert_eq!(paper.printed_norm_sq(), BigRational::new(18.into(), 1.into()));
    }

    #[test]
    fn boson_state_annihilated_by_all_six_mode_operators() {
        let paper = paper_boson_state();
        for op in bosonic_all_mode_ops(3, 2) {
            assert!(paper.state.apply_diagonal(&op).unwrap().is_zero());
        }
    }

    #[test]
    fn boson_state_is_lme_with_maximally_mixed_traps() {
        let paper = paper_boson_state();
        let weights = boson_basis_weights(3, 2);
        let target = BigRational::new(1.into(), 6.into());
        for party in 0..3 {
            let rho = reduced_density_weighted(&paper.state, party, Some(&weights)).unwrap();
            for x in 0..6 {
                for y in 0..6 {
                    if x == y {
                        assert_eq!(rho[x][x].re.clone() * &weights[x], target);
                        assert!(rho[x][x].im.is_zero());
                    } else {
                        assert!(rho[x][y].is_zero(), "party {party} entry ({x},{y})");
                    }
                }
            }
        }
        assert!(is_lme_weighted(&paper.state, Some(&weights)).unwrap());
    }
}
