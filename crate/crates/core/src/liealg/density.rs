//! Reduced density matrices and the locally-maximally-entangled test,
//! all exact. The weighted variants serve bases whose vectors carry
//! rational squared norms (the bosonic monomial basis): there the matrix
//! M returned satisfies ρ_phys[x,y] = √(w_x·w_y)·M[x,y], so ρ_phys = 𝟙/d
//! is decided rationally (off-diagonals of M vanish, w_x·M[x,x] = 1/d).

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::GaussianRational;
use super::sparse::{decode_index, encode_index, LieError, StateVector};

/// Partial trace over all parties except `party` (0-based) of
/// |ψ⟩⟨ψ| / ⟨ψ|ψ⟩ in the orthonormal computational basis.
pub fn reduced_density(
    state: &StateVector,
    party: usize,
) -> Result<Vec<Vec<GaussianRational>>, LieError> {
    reduced_density_weighted(state, party, None)
}

/// As `reduced_density`, with local basis vector s carrying squared norm
/// weights[s]; returns the √-stripped matrix M described at module level.
pub fn reduced_density_weighted(
    state: &StateVector,
    party: usize,
    weights: Option<&[BigRational]>,
) -> Result<Vec<Vec<GaussianRational>>, LieError> {
    if state.is_zero() {
        return Err(LieError::ZeroState);
    }
    let d = state.local_dim();
    let n = state.parties();
    assert!(party < n);

    let norm_sq = match weights {
        None => state.norm_sq(),
        Some(w) => state.norm_sq_weighted(w),
    };

    // group amplitudes by the multi-index with `party` removed
    let mut groups: std::collections::HashMap<u64, Vec<(usize, GaussianRational, BigRational)>> =
        std::collections::HashMap::new();
    for (code, amp) in state.iter() {
        let digits = decode_index(code, d, n);
        let mut rest = Vec::with_capacity(n - 1);
        let mut rest_weight = BigRational::one();
        for (p, &digit) in digits.iter().enumerate() {
            if p == party {
                continue;
            }
            rest.push(digit);
            if let Some(w) = weights {
                rest_weight *= &w[digit];
            }
        }
        let key = encode_index(&rest, d);
        groups.entry(key).or_default().push((digits[party], amp.clone(), rest_weight));
    }

    let mut rho = vec![vec![GaussianRational::zero(); d]; d];
    for group in groups.values() {
        for (x, ax, wx) in group {
            for (y, ay, _) in group {
                let term = ax * &ay.conj();
                rho[*x][*y] += &term.scale(wx);
            }
        }
    }
    let inv = BigRational::one() / norm_sq;
    for row in rho.iter_mut() {
        for v in row.iter_mut() {
            *v = v.scale(&inv);
        }
    }
    Ok(rho)
}

/// True iff every one-party reduced density matrix equals 𝟙/d exactly.
pub fn is_lme(state: &StateVector) -> Result<bool, LieError> {
    is_lme_weighted(state, None)
}

pub fn is_lme_weighted(
    state: &StateVector,
    weights: Option<&[BigRational]>,
) -> Result<bool, LieError> {
    if state.is_zero() {
        return Err(LieError::ZeroState);
    }
    let d = state.local_dim();
    let target = BigRational::new(1.into(), (d as i64).into());
    for party in 0..state.parties() {
        let rho = reduced_density_weighted(state, party, weights)?;
        for (x, row) in rho.iter().enumerate() {
            for (y, v) in row.iter().enumerate() {
                if x == y {
                    let diag = match weights {
                        None => v.clone(),
                        Some(w) => v.scale(&w[x]),
                    };
                    if !diag.im.is_zero() || diag.re != target {
                        return Ok(false);
                    }
                } else if !v.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn singlet() -> StateVector {
        let mut s = StateVector::zero(2, 2);
        s.add_amplitude(&[0, 1], GaussianRational::one());
        s.add_amplitude(&[1, 0], GaussianRational::from_int(-1));
        s
    }

    #[test]
    fn singlet_is_maximally_mixed() {
        let rho = reduced_density(&singlet(), 0).unwrap();
        let half = GaussianRational::from_ratio(1, 2);
        assert_eq!(rho[0][0], half);
        assert_eq!(rho[1][1], half);
        assert!(rho[0][1].is_zero() && rho[1][0].is_zero());
        assert!(is_lme(&singlet()).unwrap());
    }

    #[test]
    fn product_state_is_not() {
        let mut s = StateVector::zero(2, 2);
        s.add_amplitude(&[0, 0], GaussianRational::one());
        let rho = reduced_density(&s, 0).unwrap();
        assert_eq!(rho[0][0], GaussianRational::one());
        assert!(rho[1][1].is_zero());
        assert!(!is_lme(&s).unwrap());
    }

    #[test]
    fn zero_state_rejected() {
        let s = StateVector::zero(2, 2);
        assert_eq!(reduced_density(&s, 0), Err(LieError::ZeroState));
        assert_eq!(is_lme(&s), Err(LieError::ZeroState));
    }

    #[test]
    fn trace_is_one() {
        let mut s = StateVector::zero(3, 2);
        s.add_amplitude(&[0, 1], GaussianRational::from_int(2));
        s.add_amplitude(&[1, 1], GaussianRational::imag_int(1));
        s.add_amplitude(&[2, 0], GaussianRational::from_ratio(1, 3));
        for party in 0..2 {
            let rho = reduced_density(&s, party).unwrap();
            let mut trace = GaussianRational::zero();
            for x in 0..3 {
                trace += &rho[x][x];
                // hermitian
                for y in 0..3 {
                    assert_eq!(rho[x][y], rho[y][x].conj());
                }
            }
            assert_eq!(trace, GaussianRational::one());
        }
    }
}
