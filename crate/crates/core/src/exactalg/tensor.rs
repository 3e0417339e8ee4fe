//! Permutations of tensor legs under the row-major flattening
//! `(i_0, ..., i_{n-1}) -> ((i_0·d_1 + i_1)·d_2 + ...)`.

use super::matrix::FpMatrix;

fn flatten(index: &[usize], dims: &[usize]) -> usize {
    index.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut index = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        index[k] = flat % dims[k];
        flat /= dims[k];
    }
    index
}

/// Permutation matrix sending `V_0 ⊗ ... ⊗ V_{n-1}` to
/// `V_{order[0]} ⊗ ... ⊗ V_{order[n-1]}`.
pub fn leg_permutation(p: u32, dims: &[usize], order: &[usize]) -> FpMatrix {
    assert_eq!(dims.len(), order.len(), "one target slot per leg");
    let mut seen = vec![false; order.len()];
    for &o in order {
        assert!(o < order.len() && !seen[o], "order must be a permutation");
        seen[o] = true;
    }
    let total: usize = dims.iter().product();
    let target_dims: Vec<usize> = order.iter().map(|&o| dims[o]).collect();
    let mut out = FpMatrix::zeros(p, total, total);
    for src in 0..total {
        let idx = unflatten(src, dims);
        let target_idx: Vec<usize> = order.iter().map(|&o| idx[o]).collect();
        out.set(flatten(&target_idx, &target_dims), src, 1);
    }
    out
}

/// The symmetry `V ⊗ W -> W ⊗ V`.
pub fn swap(p: u32, v: usize, w: usize) -> FpMatrix {
    leg_permutation(p, &[v, w], &[1, 0])
}

/// `I_w ⊗ swap_{x,y} ⊗ I_z`, the middle interchange on four legs.
pub fn middle_swap(p: u32, w: usize, x: usize, y: usize, z: usize) -> FpMatrix {
    leg_permutation(p, &[w, x, y, z], &[0, 2, 1, 3])
}
