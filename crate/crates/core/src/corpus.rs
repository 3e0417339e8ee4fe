//! Generators for the shipped instances: cyclic group algebras, monoid
//! algebras with group-like comultiplication, and Sweedler's 4-dimensional
//! Hopf algebra.

use crate::error::{Error, Result};
use crate::exactalg::{check_modulus, FpMatrix};
use crate::structures::BimonoidData;

/// Monoid algebra `F_p[M]` from a Cayley table, with every element group-like.
pub fn monoid_algebra(p: u64, table: &[Vec<usize>], identity: usize) -> Result<BimonoidData> {
    let p = check_modulus(p)?;
    let n = table.len();
    if identity >= n
        || table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&v| v >= n))
    {
        return Err(Error::Precondition(format!(
            "malformed {n}-element Cayley table"
        )));
    }
    let mut m = FpMatrix::zeros(p, n, n * n);
    let mut delta = FpMatrix::zeros(p, n * n, n);
    for (i, row) in table.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            m.set(k, i * n + j, 1);
        }
        delta.set(i * n + i, i, 1);
    }
    let e = FpMatrix::basis_vector(p, n, identity);
    let eps = FpMatrix::from_fn(p, 1, n, |_, _| 1);
    BimonoidData::from_parts(m, e, delta, eps)
}

/// `F_p[Z/n]` on the basis `g^0, ..., g^{n-1}`.
pub fn cyclic_group_algebra(p: u64, n: usize) -> Result<BimonoidData> {
    if n == 0 {
        return Err(Error::Precondition("group order must be positive".into()));
    }
    let table: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    monoid_algebra(p, &table, 0)
}

/// Sweedler's algebra on the basis `1, g, x, gx` with `g² = 1`, `x² = 0`,
/// `xg = −gx`, `δ(g) = g⊗g`, `δ(x) = x⊗1 + g⊗x`, `ε(g) = 1`, `ε(x) = 0`.
pub fn sweedler(p: u64) -> Result<BimonoidData> {
    let p = check_modulus(p)?;
    if p == 2 {
        return Err(Error::Precondition(
            "Sweedler's algebra needs odd characteristic".into(),
        ));
    }
    // g^a x^b has index a + 2b: 1=0, g=1, x=2, gx=3
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut m = FpMatrix::zeros(p, 4, 16);
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (c, d) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if b + d >= 2 {
                continue;
            }
            // (g^a x^b)(g^c x^d) = (−1)^{bc} g^{a+c} x^{b+d}
            let sign = if b * c == 1 { -1 } else { 1 };
            m.set(idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d), sign);
        }
    }
    let e = FpMatrix::basis_vector(p, 4, 0);
    let mut delta = FpMatrix::zeros(p, 16, 4);
    let pair = |i: usize, j: usize| i * 4 + j;
    delta.set(pair(0, 0), 0, 1);
    delta.set(pair(1, 1), 1, 1);
    // δ(x) = x⊗1 + g⊗x
    delta.set(pair(2, 0), 2, 1);
    delta.set(pair(1, 2), 2, 1);
    // δ(gx) = gx⊗g + 1⊗gx
    delta.set(pair(3, 1), 3, 1);
    delta.set(pair(0, 3), 3, 1);
    let eps = FpMatrix::from_rows(p, &[&[1, 1, 0, 0]]);
    BimonoidData::from_parts(m, e, delta, eps)
}

pub fn kz2_f3() -> BimonoidData {
    cyclic_group_algebra(3, 2).expect("valid")
}

pub fn kz3_f2() -> BimonoidData {
    cyclic_group_algebra(2, 3).expect("valid")
}

/// `F_2[{1, z}]` with `z² = z`: a bimonoid without antipode.
pub fn m2_f2() -> BimonoidData {
    monoid_algebra(2, &[vec![0, 1], vec![1, 1]], 0).expect("valid")
}

pub fn sweedler_f5() -> BimonoidData {
    sweedler(5).expect("valid")
}

pub fn trivial(p: u64) -> Result<BimonoidData> {
    Ok(BimonoidData::trivial(check_modulus(p)?))
}
