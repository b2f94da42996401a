//! Complete intersections `Z` of codimension 3 with generator degrees
//! `a_1 <= a_2 <= a_3`.
//!
//! The Hilbert function is the coefficient list of
//! `prod_j (1 + t + ... + t^(a_j - 1))`, the Koszul resolution makes the
//! first difference piecewise linear, and the growth invariant `lambda` has a
//! closed form. Both of the latter are validated against the product form in
//! the test suites.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;

/// Sorted degree triple of an Artinian complete intersection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CiTriple {
    degrees: [i64; 3],
}

impl CiTriple {
    /// Degrees must be positive and nondecreasing.
    pub fn new(a1: i64, a2: i64, a3: i64) -> Result<Self> {
        let degrees = [a1, a2, a3];
        if let Some(p) = degrees.iter().position(|&a| a <= 0) {
            return Err(Error::NonPositive(p + 1));
        }
        if a1 > a2 {
            return Err(Error::NotSorted(2));
        }
        if a2 > a3 {
            return Err(Error::NotSorted(3));
        }
        Ok(Self { degrees })
    }

    pub fn degrees(&self) -> [i64; 3] {
        self.degrees
    }

    /// Socle invariant `theta = a_1 + a_2 + a_3`; the socle sits in degree
    /// `theta - 3`.
    pub fn theta(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// `self` dominates `other` componentwise.
    pub fn dominates(&self, other: &CiTriple) -> bool {
        self.degrees
            .iter()
            .zip(other.degrees.iter())
            .all(|(a, b)| a >= b)
    }

    /// Hilbert function as the coefficients of
    /// `prod_j (1 + t + ... + t^(a_j - 1))`.
    pub fn hilbert_function(&self) -> HilbertFunction {
        let mut coeffs = vec![1i64];
        for &a in &self.degrees {
            let a = a as usize;
            let mut next = vec![0i64; coeffs.len() + a - 1];
            for (i, &c) in coeffs.iter().enumerate() {
                for slot in next[i..i + a].iter_mut() {
                    *slot += c;
                }
            }
            coeffs = next;
        }
        HilbertFunction::new(coeffs)
            .expect("a product of unit-coefficient polynomials starts at 1 and stays nonnegative")
    }

    /// First difference of the Hilbert function, evaluated from the
    /// piecewise-linear description instead of the product.
    ///
    /// The description splits into two displays depending on whether `a_3`
    /// reaches `a_1 + a_2`; adjacent pieces share their endpoint degrees, and
    /// every piece covering a degree must report the same value. That overlap
    /// agreement is asserted on each call.
    pub fn delta_piecewise(&self, i: i64) -> i64 {
        let [d1, d2, d3] = self.degrees;
        let th = d1 + d2 + d3;
        if i < 0 || i >= th - 1 {
            return 0;
        }
        // Closed ranges (lo, hi) with the value the piece takes at degree i.
        let segments: [(i64, i64, i64); 7] = if d3 <= d1 + d2 - 1 {
            [
                (0, d1 - 1, i + 1),
                (d1 - 1, d2 - 1, d1),
                (d2 - 1, d3 - 1, -i + d1 + d2 - 1),
                (d3 - 1, d1 + d2 - 1, -2 * i + d1 + d2 + d3 - 2),
                (d1 + d2 - 1, d1 + d3 - 1, -i + d3 - 1),
                (d1 + d3 - 1, d2 + d3 - 1, -d1),
                (d2 + d3 - 1, th - 1, i - th + 1),
            ]
        } else {
            [
                (0, d1 - 1, i + 1),
                (d1 - 1, d2 - 1, d1),
                (d2 - 1, d1 + d2 - 1, -i + d1 + d2 - 1),
                (d1 + d2 - 1, d3 - 1, 0),
                (d3 - 1, d1 + d3 - 1, -i + d3 - 1),
                (d1 + d3 - 1, d2 + d3 - 1, -d1),
                (d2 + d3 - 1, th - 1, i - th + 1),
            ]
        };
        let mut result: Option<i64> = None;
        for &(lo, hi, val) in &segments {
            if lo <= i && i <= hi {
                match result {
                    None => result = Some(val),
                    Some(prev) => assert_eq!(
                        prev, val,
                        "piecewise difference displays disagree at degree {i} for {:?}",
                        self.degrees
                    ),
                }
            }
        }
        result.expect("the pieces cover every degree below theta - 1")
    }

    /// Closed form for `(lambda, difference value at lambda)`.
    ///
    /// `lambda = floor((theta - 3) / 2)` while `a_3 <= a_1 + a_2`, and
    /// `a_1 + a_2 - 2` once `a_3 >= a_1 + a_2 - 1`; on the overlap the two
    /// formulas are asserted to agree. The difference at `lambda` is 1
    /// except when `a_3 <= a_1 + a_2 - 2` and `theta` is even, where it is 2.
    pub fn lambda_stats(&self) -> (i64, i64) {
        let [a1, a2, a3] = self.degrees;
        let th = a1 + a2 + a3;
        let floor_form = a3 <= a1 + a2;
        let cap_form = a3 >= a1 + a2 - 1;
        let lambda = match (floor_form, cap_form) {
            (true, false) => (th - 3) / 2,
            (false, true) => a1 + a2 - 2,
            (true, true) => {
                assert_eq!(
                    (th - 3) / 2,
                    a1 + a2 - 2,
                    "lambda formulas disagree on their overlap for {:?}",
                    self.degrees
                );
                a1 + a2 - 2
            }
            (false, false) => unreachable!("a_3 is either below a_1 + a_2 or above a_1 + a_2 - 1"),
        };
        let delta_at_lambda = if a3 <= a1 + a2 - 2 {
            if th % 2 == 0 {
                2
            } else {
                1
            }
        } else {
            1
        };
        (lambda, delta_at_lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(a1: i64, a2: i64, a3: i64) -> CiTriple {
        CiTriple::new(a1, a2, a3).unwrap()
    }

    #[test]
    fn rejects_bad_triples() {
        assert_eq!(CiTriple::new(0, 1, 1), Err(Error::NonPositive(1)));
        assert_eq!(CiTriple::new(2, 1, 3), Err(Error::NotSorted(2)));
        assert_eq!(CiTriple::new(1, 3, 2), Err(Error::NotSorted(3)));
    }

    #[test]
    fn product_hilbert_functions() {
        assert_eq!(ci(1, 1, 1).hilbert_function().values(), &[1]);
        assert_eq!(ci(2, 2, 3).hilbert_function().values(), &[1, 3, 4, 3, 1]);
        assert_eq!(
            ci(3, 3, 3).hilbert_function().values(),
            &[1, 3, 6, 7, 6, 3, 1]
        );
        assert_eq!(
            ci(3, 3, 4).hilbert_function().values(),
            &[1, 3, 6, 8, 8, 6, 3, 1]
        );
        assert_eq!(ci(1, 2, 5).hilbert_function().values(), &[1, 2, 2, 2, 2, 1]);
    }

    #[test]
    fn hilbert_function_is_symmetric() {
        for t in [ci(2, 3, 7), ci(2, 2, 2), ci(1, 4, 4), ci(3, 5, 6)] {
            let h = t.hilbert_function();
            let top = t.theta() - 3;
            for i in 0..=top {
                assert_eq!(h.get(i), h.get(top - i), "{:?} at {i}", t.degrees());
            }
        }
    }

    #[test]
    fn piecewise_difference_examples() {
        assert_eq!(ci(2, 2, 3).delta_piecewise(3), -1);
        assert_eq!(ci(3, 3, 3).delta_piecewise(2), 3);
        assert_eq!(ci(2, 2, 3).delta_piecewise(-1), 0);
        assert_eq!(ci(2, 2, 3).delta_piecewise(6), 0);
    }

    #[test]
    fn piecewise_difference_matches_product() {
        // Spread over both displays and the boundary a_3 = a_1 + a_2 - 1.
        for t in [
            ci(2, 2, 3),
            ci(2, 3, 4),
            ci(2, 3, 5),
            ci(2, 3, 7),
            ci(1, 1, 1),
            ci(1, 2, 2),
            ci(4, 4, 4),
            ci(3, 4, 9),
        ] {
            let diff = t.hilbert_function().first_difference();
            for i in -1..=t.theta() {
                assert_eq!(
                    t.delta_piecewise(i),
                    diff.get(i),
                    "{:?} at {i}",
                    t.degrees()
                );
            }
        }
    }

    #[test]
    fn lambda_closed_forms() {
        assert_eq!(ci(2, 2, 2).lambda_stats(), (1, 2));
        assert_eq!(ci(2, 2, 3).lambda_stats(), (2, 1));
        assert_eq!(ci(1, 1, 1).lambda_stats(), (0, 1));
        assert_eq!(ci(3, 3, 3).lambda_stats(), (3, 1));
        assert_eq!(ci(2, 3, 9).lambda_stats(), (3, 1));
    }

    #[test]
    fn lambda_stats_match_direct_computation() {
        for t in [
            ci(2, 2, 2),
            ci(2, 2, 3),
            ci(2, 3, 4),
            ci(2, 3, 5),
            ci(3, 4, 6),
            ci(1, 5, 5),
            ci(2, 2, 8),
        ] {
            let h = t.hilbert_function();
            let (lambda, at_lambda) = t.lambda_stats();
            assert_eq!(lambda, h.lambda(), "{:?}", t.degrees());
            assert_eq!(
                at_lambda,
                h.first_difference().get(lambda),
                "{:?}",
                t.degrees()
            );
        }
    }

    #[test]
    fn domination_is_componentwise() {
        assert!(ci(2, 3, 5).dominates(&ci(2, 2, 3)));
        assert!(!ci(2, 3, 5).dominates(&ci(3, 3, 3)));
        // Lexicographic order would accept this one.
        assert!(!ci(3, 3, 3).dominates(&ci(2, 2, 4)));
    }
}
