//! Concrete generator sets: su(d) natural, so(d) natural (simple root
//! operators for even and odd d) and the bosonic mode operators realizing
//! the symmetric representation S^n(C^m) on occupation states.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::scalar::GaussianRational;
use super::sparse::{LieError, SparseOperator};

/// E_{i,i+1} and E_{i+1,i} for i = 0..d−2, raising before lowering:
/// 2(d−1) operators whose joint diagonal kernel is the trivial subspace.
pub fn su_simple_root_ops(d: usize) -> Vec<SparseOperator> {
    assert!(d >= 2);
    let mut ops = Vec::with_capacity(2 * (d - 1));
    for i in 0..d - 1 {
        let mut raise = SparseOperator::zero(d);
        raise.set(i, i + 1, GaussianRational::one());
        let mut lower = SparseOperator::zero(d);
        lower.set(i + 1, i, GaussianRational::one());
        ops.push(raise);
        ops.push(lower);
    }
    ops
}

/// Simple root operators of so(d)^C on the natural representation, in the
/// basis |s⟩, s = 0..d−1: pairs E_j^± for j = 0..⌊d/2⌋−2 plus E_even^±
/// (d even) or E_odd^± (d odd). All are complexified antisymmetric
/// matrices (Oᵀ = −O).
pub fn so_simple_root_ops(d: usize) -> Result<Vec<SparseOperator>, LieError> {
    if d < 3 {
        return Err(LieError::UnsupportedDim(d));
    }
    let one = || GaussianRational::one();
    let neg = || GaussianRational::from_int(-1);
    let i_pos = || GaussianRational::imag_int(1);
    let i_neg = || GaussianRational::imag_int(-1);

    let mut ops = Vec::new();
    let pairs = d / 2;
    for j in 0..pairs.saturating_sub(1) {
        let b = 2 * j;
        let mut plus = SparseOperator::zero(d);
        plus.set(b, b + 2, one());
        plus.set(b, b + 3, i_pos());
        plus.set(b + 1, b + 2, i_neg());
        plus.set(b + 1, b + 3, one());
        plus.set(b + 2, b, neg());
        plus.set(b + 2, b + 1, i_pos());
        plus.set(b + 3, b, i_neg());
        plus.set(b + 3, b + 1, neg());
        let mut minus = SparseOperator::zero(d);
        minus.set(b, b + 2, one());
        minus.set(b, b + 3, i_neg());
        minus.set(b + 1, b + 2, i_pos());
        minus.set(b + 1, b + 3, one());
        minus.set(b + 2, b, neg());
        minus.set(b + 2, b + 1, i_neg());
        minus.set(b + 3, b, i_pos());
        minus.set(b + 3, b + 1, neg());
        ops.push(plus);
        ops.push(minus);
    }
    if d % 2 == 0 {
        let mut plus = SparseOperator::zero(d);
        plus.set(d - 4, d - 2, one());
        plus.set(d - 4, d - 1, i_neg());
        plus.set(d - 3, d - 2, i_neg());
        plus.set(d - 3, d - 1, neg());
        plus.set(d - 2, d - 4, neg());
        plus.set(d - 2, d - 3, i_pos());
        plus.set(d - 1, d - 4, i_pos());
        plus.set(d - 1, d - 3, one());
        let mut minus = SparseOperator::zero(d);
        minus.set(d - 4, d - 2, one());
        minus.set(d - 4, d - 1, i_pos());
        minus.set(d - 3, d - 2, i_pos());
        minus.set(d - 3, d - 1, neg());
        minus.set(d - 2, d - 4, neg());
        minus.set(d - 2, d - 3, i_neg());
        minus.set(d - 1, d - 4, i_neg());
        minus.set(d - 1, d - 3, one());
        ops.push(plus);
        ops.push(minus);
    } else {
        let mut plus = SparseOperator::zero(d);
        plus.set(d - 3, d - 1, one());
        plus.set(d - 2, d - 1, i_neg());
        plus.set(d - 1, d - 3, neg());
        plus.set(d - 1, d - 2, i_pos());
        let mut minus = SparseOperator::zero(d);
        minus.set(d - 3, d - 1, one());
        minus.set(d - 2, d - 1, i_pos());
        minus.set(d - 1, d - 3, neg());
        minus.set(d - 1, d - 2, i_neg());
        ops.push(plus);
        ops.push(minus);
    }
    Ok(ops)
}

/// Per-party change of basis pairing |2j⟩ ± i|2j+1⟩ (the so(d) weight
/// basis) and its inverse; the conjugated simple root operators become
/// graded, which the kernel solver exploits.
pub fn so_weight_transform(d: usize) -> (SparseOperator, SparseOperator) {
    let mut t = SparseOperator::zero(d);
    let mut t_inv = SparseOperator::zero(d);
    let pairs = d / 2;
    for j in 0..pairs {
        let b = 2 * j;
        t.set(b, b, GaussianRational::one());
        t.set(b + 1, b, GaussianRational::imag_int(1));
        t.set(b, b + 1, GaussianRational::one());
        t.set(b + 1, b + 1, GaussianRational::imag_int(-1));
        t_inv.set(b, b, GaussianRational::from_ratio(1, 2));
        t_inv.set(b, b + 1, GaussianRational::imag_ratio(-1, 2));
        t_inv.set(b + 1, b, GaussianRational::from_ratio(1, 2));
        t_inv.set(b + 1, b + 1, GaussianRational::imag_ratio(1, 2));
    }
    if d % 2 == 1 {
        t.set(d - 1, d - 1, GaussianRational::one());
        t_inv.set(d - 1, d - 1, GaussianRational::one());
    }
    (t, t_inv)
}

/// Occupation vectors (n_1..n_m), Σn_i = n, in descending lexicographic
/// order; the index of a vector in this list is its basis index.
pub fn boson_basis(modes: usize, bosons: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(modes);
    fn rec(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, modes_left: usize, left: u32) {
        if modes_left == 1 {
            current.push(left);
            out.push(current.clone());
            current.pop();
            return;
        }
        for v in (0..=left).rev() {
            current.push(v);
            rec(out, current, modes_left - 1, left - v);
            current.pop();
        }
    }
    rec(&mut out, &mut current, modes, bosons as u32);
    out
}

pub fn boson_dim(modes: usize, bosons: usize) -> usize {
    boson_basis(modes, bosons).len()
}

/// Squared norms ∏ n_i! of the unnormalized monomial kets
/// a₁†^{n₁}…a_m†^{n_m}|0⟩; the diagonal change of basis to normalized
/// occupation states.
pub fn boson_basis_weights(modes: usize, bosons: usize) -> Vec<BigRational> {
    boson_basis(modes, bosons)
        .iter()
        .map(|occ| {
            let mut f = BigInt::from(1);
            for &n in occ {
                for k in 2..=n as u64 {
                    f *= BigInt::from(k);
                }
            }
            BigRational::from_integer(f)
        })
        .collect()
}

/// π(E_{create,annihilate}) = a_create† a_annihilate on the occupation
/// basis of S^n(C^m), in the monomial convention (integer entries:
/// |occ⟩ ↦ occ_annihilate · |occ − e_ann + e_create⟩).
pub fn bosonic_mode_op(
    modes: usize,
    bosons: usize,
    create: usize,
    annihilate: usize,
) -> SparseOperator {
    assert!(create < modes && annihilate < modes && create != annihilate);
    let basis = boson_basis(modes, bosons);
    let index_of: std::collections::HashMap<Vec<u32>, usize> =
        basis.iter().cloned().zip(0..).collect();
    let mut op = SparseOperator::zero(basis.len());
    for (col, occ) in basis.iter().enumerate() {
        if occ[annihilate] == 0 {
            continue;
        }
        let mut image = occ.clone();
        image[annihilate] -= 1;
        image[create] += 1;
        let row = index_of[&image];
        op.set(row, col, GaussianRational::from_int(i64::from(occ[annihilate])));
    }
    op
}

/// The 2(m−1) simple-root mode operators a_i†a_{i+1}, a_{i+1}†a_i on
/// S^n(C^m); their joint diagonal kernel over N traps is the trivial
/// subspace of the symmetric representation's N-th power.
pub fn bosonic_generator_ops(modes: usize, bosons: usize) -> Vec<SparseOperator> {
    assert!(modes >= 2 && bosons >= 1);
    let mut ops = Vec::with_capacity(2 * (modes - 1));
    for i in 0..modes - 1 {
        ops.push(bosonic_mode_op(modes, bosons, i, i + 1));
        ops.push(bosonic_mode_op(modes, bosons, i + 1, i));
    }
    ops
}

/// All m(m−1) off-diagonal mode operators (the paper's full equation set,
/// kept available for cross-checking that simple roots suffice).
pub fn bosonic_all_mode_ops(modes: usize, bosons: usize) -> Vec<SparseOperator> {
    let mut ops = Vec::new();
    for a in 0..modes {
        for b in 0..modes {
            if a != b {
                ops.push(bosonic_mode_op(modes, bosons, a, b));
            }
        }
    }
    ops
}

/// The full su(d) root-operator set E_{i,j}, i ≠ j (cross-check flag for
/// the simple-root reduction).
pub fn su_all_root_ops(d: usize) -> Vec<SparseOperator> {
    let mut ops = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                let mut op = SparseOperator::zero(d);
                op.set(i, j, GaussianRational::one());
                ops.push(op);
            }
        }
    }
    ops
}
