//! Data-parallel helpers. With the `parallel` feature (on by default) the
//! sweeps fan out over a rayon pool; without it they run sequentially and
//! produce byte-identical results, since ordering is preserved either way.

#[cfg(feature = "parallel")]
pub fn map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn flat_map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().flat_map_iter(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn flat_map_vec<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> Vec<U>,
{
    items.iter().flat_map(f).collect()
}

/// Caps the worker count for all subsequent parallel work. Without the
/// `parallel` feature this is a no-op. Calling it more than once keeps the
/// first configuration.
pub fn set_jobs(jobs: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;
}
