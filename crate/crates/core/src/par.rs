//! Thin switch between rayon and plain iterators.
//!
//! All reductions in this crate are over exact integers or are followed by a
//! canonical sort, so the two paths produce identical results.

use crate::limits::Limits;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map_range<T, F>(limits: &Limits, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if limits.parallel {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = limits;
    (0..n).map(f).collect()
}

pub(crate) fn map_slice<S, T, F>(limits: &Limits, items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if limits.parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = limits;
    items.iter().map(f).collect()
}

/// Sums per-index vectors of counts element-wise.
pub(crate) fn sum_vectors<F>(limits: &Limits, n: usize, width: usize, f: F) -> Vec<u128>
where
    F: Fn(usize, &mut Vec<u128>) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if limits.parallel {
        let add = |mut a: Vec<u128>, b: Vec<u128>| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        };
        return (0..n)
            .into_par_iter()
            .fold(
                || vec![0u128; width],
                |mut acc, i| {
                    f(i, &mut acc);
                    acc
                },
            )
            .reduce(|| vec![0u128; width], add);
    }
    let _ = limits;
    let mut acc = vec![0u128; width];
    for i in 0..n {
        f(i, &mut acc);
    }
    acc
}
