//! Bracketing search on monotone predicates.

/// Shrinks `[lo, hi]` around the point where `below` flips from `true` to `false`.
///
/// Requires `below(lo) == true` and `below(hi) == false`; the returned pair keeps
/// that property. Stops when the bracket is narrower than `tol` or stops
/// shrinking in floating point.
pub(crate) fn bisect<F>(mut lo: f64, mut hi: f64, tol: f64, mut below: F) -> (f64, f64)
where
    F: FnMut(f64) -> bool,
{
    debug_assert!(lo < hi);
    while hi - lo > tol {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        if below(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Integer variant: smallest `k` in `(lo, hi]` with `pred(k)`, given `!pred(lo)` and `pred(hi)`.
pub(crate) fn first_true<F, E>(mut lo: u64, mut hi: u64, mut pred: F) -> Result<u64, E>
where
    F: FnMut(u64) -> Result<bool, E>,
{
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let (lo, hi) = bisect(0.0, 2.0, 1e-12, |x| x * x < 2.0);
        assert!(lo * lo < 2.0 && hi * hi >= 2.0);
        assert!((lo - 2f64.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn terminates_on_tiny_tolerance() {
        let (lo, hi) = bisect(1.0, 3.0, 0.0, |x| x < 2.5);
        assert!(lo < 2.5 && hi >= 2.5);
    }

    #[test]
    fn first_true_index() {
        let k: Result<u64, ()> = first_true(0, 100, |k| Ok(k * k >= 50));
        assert_eq!(k.unwrap(), 8);
    }
}
