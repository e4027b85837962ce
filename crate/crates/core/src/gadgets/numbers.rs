use num_rational::Ratio;
use serde::Serialize;

/// Closed-form quantities of the reductions, as exact rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionNumbers {
    /// Size every EEDS of an `r`-regular `n`-vertex graph must have:
    /// `rn / (4r - 2)`. Non-integral means no EEDS exists.
    pub eeds_size: Ratio<i64>,
    /// Largest PEDS size of the magnified graph that certifies an EEDS: `57n/10`.
    pub magnify_threshold: Ratio<i64>,
    /// Lower bound on any PEDS of the `3k`-subdivision:
    /// `nr / (2(2r - 1)) * (2rk - k + 1)`.
    pub subdivision_bound: Ratio<i64>,
    /// Subdivision parameter for girth target `k`: `max(1, ceil((k - 3) / 9))`.
    pub k_prime: i64,
}

impl ReductionNumbers {
    pub fn eeds_possible(&self) -> bool {
        self.eeds_size.is_integer()
    }
}

/// Evaluates every formula for `r`-regular graphs on `n` vertices; `k` is
/// used both as the subdivision parameter and as the girth target.
pub fn reduction_numbers(r: i64, n: i64, k: i64) -> ReductionNumbers {
    assert!(r >= 3, "regularity must be at least 3");
    ReductionNumbers {
        eeds_size: Ratio::new(r * n, 4 * r - 2),
        magnify_threshold: Ratio::new(57 * n, 10),
        subdivision_bound: Ratio::new(n * r, 2 * (2 * r - 1)) * (2 * r * k - k + 1),
        k_prime: k_prime(k),
    }
}

/// `max(1, ceil((k - 3) / 9))`; the `3k'`-subdivision has girth at least
/// `9k' + 3 >= k` when the source graph has girth at least 3.
pub fn k_prime(k: i64) -> i64 {
    Ratio::new(k - 3, 9).ceil().to_integer().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_numbers() {
        let r = reduction_numbers(3, 10, 1);
        assert_eq!(r.eeds_size, Ratio::from_integer(3));
        assert_eq!(r.magnify_threshold, Ratio::from_integer(57));
        assert_eq!(r.subdivision_bound, Ratio::from_integer(18));
        assert!(r.eeds_possible());
    }

    #[test]
    fn k4_has_no_eeds_size() {
        let r = reduction_numbers(3, 4, 0);
        assert_eq!(r.eeds_size, Ratio::new(12, 10));
        assert!(!r.eeds_possible());
        assert_eq!(r.subdivision_bound, Ratio::new(12, 10));
    }

    #[test]
    fn girth_parameter() {
        assert_eq!(k_prime(21), 2);
        assert_eq!(k_prime(3), 1);
        assert_eq!(k_prime(12), 1);
        assert_eq!(k_prime(13), 2);
        for k in 3..100 {
            assert!(9 * k_prime(k) + 3 >= k);
        }
    }
}
