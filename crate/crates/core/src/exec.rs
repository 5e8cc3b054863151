//! Sequential / parallel execution of the data-parallel kernels.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the rayon
//! global pool; without it, it silently runs sequentially. Every kernel
//! written against [`Exec`] must produce the same output under both.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Order-preserving map over a slice.
    pub fn map_slice<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Fold over an index range with a commutative, associative reduce.
    pub fn fold_range<A, ID, F, RD>(self, range: Range<u64>, identity: ID, fold: F, reduce: RD) -> A
    where
        A: Send,
        ID: Fn() -> A + Sync + Send,
        F: Fn(A, u64) -> A + Sync + Send,
        RD: Fn(A, A) -> A + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().fold(&identity, &fold).reduce(&identity, &reduce);
        }
        let _ = &reduce;
        range.fold(identity(), fold)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let data: Vec<u64> = (0..1000).collect();
        let a = Exec::Sequential.map_slice(&data, |x| x * x);
        let b = Exec::Parallel.map_slice(&data, |x| x * x);
        assert_eq!(a, b);
        let s = Exec::Sequential.fold_range(0..1000, || 0u64, |acc, x| acc + x, |a, b| a + b);
        let p = Exec::Parallel.fold_range(0..1000, || 0u64, |acc, x| acc + x, |a, b| a + b);
        assert_eq!(s, p);
        assert_eq!(s, 499_500);
    }
}
