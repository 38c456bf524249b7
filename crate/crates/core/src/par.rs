//! Data-parallel helpers. With the `parallel` feature these run on the rayon
//! pool; without it they are plain loops with the same results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many items the helpers stay on the current thread.
#[cfg(feature = "parallel")]
const MIN_PARALLEL: usize = 4;

pub fn for_each_mut<T, F>(items: &mut [T], f: F)
where
    T: Send,
    F: Fn(&mut T) + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if items.len() >= MIN_PARALLEL {
        items.par_iter_mut().for_each(f);
        return;
    }
    items.iter_mut().for_each(f);
}

/// `(0..n).map(f).collect()`, possibly in parallel; order is preserved.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if n >= MIN_PARALLEL {
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Maps over a slice, possibly in parallel; order is preserved.
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Send + Sync,
{
    #[cfg(feature = "parallel")]
    if items.len() >= MIN_PARALLEL {
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// Runs `op` with every nested helper forced onto the calling thread.
pub fn sequential<R: Send>(op: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .expect("single-thread pool");
        pool.install(op)
    }
    #[cfg(not(feature = "parallel"))]
    {
        op()
    }
}
