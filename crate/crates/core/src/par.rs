//! Thin switch between rayon and sequential iteration.
//!
//! With the `parallel` feature disabled both entry points are sequential, so
//! downstream code never needs its own cfg blocks.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over `items`, in parallel when the feature is on and `par` is true.
/// Output order always matches input order.
pub(crate) fn map<T, U, F>(items: Vec<T>, par: bool, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par {
        return items.into_par_iter().map(f).collect();
    }
    let _ = par;
    items.into_iter().map(f).collect()
}
