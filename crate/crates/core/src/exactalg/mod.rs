//! Exact dense linear algebra over prime fields.

mod field;
mod matrix;
mod tensor;

pub use field::{check_modulus, is_prime, reduce_i64, Fp, MAX_MODULUS};
pub use matrix::{FpMatrix, Rref};
pub use tensor::{leg_permutation, middle_swap, swap};
