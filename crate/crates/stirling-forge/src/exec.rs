//! Sweep executor for the verification suites. Independent cases run in
//! parallel when the `parallel` feature is enabled (the default); results
//! always come back in input order, so reports are byte-identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every case, in parallel when built with the `parallel`
/// feature, preserving input order.
#[cfg(feature = "parallel")]
pub fn map_cases<T, R, F>(cases: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    cases.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_cases<T, R, F>(cases: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    map_cases_seq(cases, f)
}

/// Sequential twin of [`map_cases`]; the benchmark suite uses it as the
/// baseline.
pub fn map_cases_seq<T, R, F>(cases: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    cases.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_input_order() {
        let squares = map_cases((0..100usize).collect(), |i| i * i);
        let baseline = map_cases_seq((0..100usize).collect(), |i| i * i);
        assert_eq!(squares, baseline);
        assert_eq!(squares[7], 49);
    }
}
