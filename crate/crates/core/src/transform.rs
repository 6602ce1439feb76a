//! Dimension-by-dimension sweeps over a dense `2^n` table.
//!
//! Every fast transform in the crate is a product of `n` independent 2×2
//! maps, one per player. A sweep visits each player `i` in increasing order
//! and hands the closure every pair `(lo, hi)` of entries whose masks differ
//! only in bit `i` (`lo` has the bit clear). Summation order per entry is
//! fixed, so results are bitwise reproducible.

/// Applies `op(i, lo, hi)` for every player bit `i` in `dims`.
pub(crate) fn sweep_dims<F>(table: &mut [f64], dims: u32, mut op: F)
where
    F: FnMut(usize, &mut f64, &mut f64),
{
    debug_assert!(table.len().is_power_of_two());
    let n = table.len().trailing_zeros() as usize;
    for i in 0..n {
        if dims & (1 << i) == 0 {
            continue;
        }
        let step = 1usize << i;
        for block in table.chunks_exact_mut(2 * step) {
            let (los, his) = block.split_at_mut(step);
            for (lo, hi) in los.iter_mut().zip(his) {
                op(i, lo, hi);
            }
        }
    }
}

/// [`sweep_dims`] over every player.
pub(crate) fn sweep<F>(table: &mut [f64], op: F)
where
    F: FnMut(usize, &mut f64, &mut f64),
{
    sweep_dims(table, u32::MAX, op)
}

/// Subset sums: `out[S] = Σ_{T⊆S} in[T]`.
pub(crate) fn zeta(table: &mut [f64]) {
    sweep(table, |_, lo, hi| *hi += *lo);
}

/// Inverse of [`zeta`].
pub(crate) fn mobius(table: &mut [f64]) {
    sweep(table, |_, lo, hi| *hi -= *lo);
}

/// Weighted superset sums: `out[S] = Σ_{T⊇S} in[T] · Π_{i∈T\S} factor[i]`.
pub(crate) fn superset_product(table: &mut [f64], factor: impl Fn(usize) -> f64) {
    sweep(table, |i, lo, hi| *lo += factor(i) * *hi);
}

/// Superset sums split by the size of `T \ S`.
///
/// `out[d][S] = Σ_{T⊇S, |T\S| = d} in[T] · Π_{i∈T\S} factor[i]` for
/// `d = 0..=n`.
pub(crate) fn graded_superset_product(table: &[f64], factor: impl Fn(usize) -> f64) -> Vec<Vec<f64>> {
    let size = table.len();
    let n = size.trailing_zeros() as usize;
    let mut graded = vec![vec![0.0; size]; n + 1];
    graded[0].copy_from_slice(table);
    for i in 0..n {
        let bit = 1usize << i;
        let c = factor(i);
        for d in (1..=n).rev() {
            let (below, above) = graded.split_at_mut(d);
            let src = &below[d - 1];
            let dst = &mut above[0];
            for s in 0..size {
                if s & bit == 0 {
                    dst[s] += c * src[s | bit];
                }
            }
        }
    }
    graded
}
