//! Exact decomposition of tensor powers of SU(m) irreps via the
//! Littlewood–Richardson rule, the telescope construction certifying a
//! trivial component in (E^λ)^⊗N, and synthesis of locally maximally
//! entangled states as joint kernels of diagonally-acting Lie-algebra
//! generators. All arithmetic is exact (big integers and Gaussian
//! rationals).

pub mod liealg;
pub mod lrcalc;
pub mod powerdecomp;
pub mod telescope;
pub mod young;
