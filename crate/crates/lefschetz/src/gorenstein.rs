//! Artinian Gorenstein algebras of codimension 3, presented by the degrees
//! `d_1 <= ... <= d_(2m+1)` of the `2m + 1` generators of the defining ideal.
//!
//! A sorted positive list of odd length is admissible when the socle
//! invariant `theta = (d_1 + ... + d_(2m+1)) / m` is an integer and
//! `theta > d_i + d_(2m+3-i)` for `2 <= i <= m + 1`. The skew-symmetric
//! resolution then pins the Hilbert function down exactly:
//!
//! `H(t) = C(t+2,2) - sum_i C(t-d_i+2,2) + sum_i C(t-(theta-d_i)+2,2) - C(t-theta+2,2)`
//!
//! for `0 <= t <= theta - 3`, which is symmetric about its middle.
//!
//! Two index sets control how small a complete intersection inside the ideal
//! can be: `B = { 3 <= i <= m+1 : theta <= d_i + d_(2m+4-i) }` and
//! `C = { 4 <= i <= m+2 : theta <= d_i + d_(2m+5-i) }`. The minimal triple
//! `mci` is read off from whichever of the three regimes (`B` nonempty,
//! only `C` nonempty, both empty) applies.

use serde::Serialize;

use crate::ci::CiTriple;
use crate::error::{Error, Result};
use crate::hilbert::{binomial, HilbertFunction};

/// Sorted generator-degree list of an admissible Gorenstein ideal, with the
/// integer socle invariant `theta` cached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence {
    degrees: Vec<i64>,
    #[serde(skip)]
    theta: i64,
}

impl DegreeSequence {
    /// Validates a degree list: odd length at least 3, positive and
    /// nondecreasing entries, integral `theta`, and the pair bounds
    /// `theta > d_i + d_(2m+3-i)` for `2 <= i <= m + 1`.
    pub fn new(degrees: Vec<i64>) -> Result<Self> {
        let n = degrees.len();
        if n % 2 == 0 {
            return Err(Error::EvenLength(n));
        }
        if n < 3 {
            return Err(Error::TooShort(n));
        }
        if let Some(p) = degrees.iter().position(|&d| d <= 0) {
            return Err(Error::NonPositive(p + 1));
        }
        if let Some(p) = (1..n).find(|&p| degrees[p - 1] > degrees[p]) {
            return Err(Error::NotSorted(p + 1));
        }
        let m = (n - 1) / 2;
        let sum: i64 = degrees.iter().sum();
        if sum % m as i64 != 0 {
            return Err(Error::NonIntegerTheta { sum, m });
        }
        let theta = sum / m as i64;
        let seq = Self { degrees, theta };
        for i in 2..=m + 1 {
            if theta <= seq.d(i) + seq.d(2 * m + 3 - i) {
                return Err(Error::PairBound { i });
            }
        }
        Ok(seq)
    }

    /// 1-based degree accessor, matching the indexing used throughout.
    fn d(&self, i: usize) -> i64 {
        self.degrees[i - 1]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// Number of generator pairs: the list has `2m + 1` entries.
    pub fn m(&self) -> usize {
        (self.degrees.len() - 1) / 2
    }

    pub fn theta(&self) -> i64 {
        self.theta
    }

    /// Hilbert function read off the graded resolution; symmetric with
    /// socle in degree `theta - 3`.
    pub fn hilbert_function(&self) -> HilbertFunction {
        let th = self.theta;
        let values: Vec<i64> = (0..=th - 3)
            .map(|t| {
                let mut v = binomial(t + 2, 2) - binomial(t - th + 2, 2);
                for &di in &self.degrees {
                    v -= binomial(t - di + 2, 2);
                    v += binomial(t - (th - di) + 2, 2);
                }
                v
            })
            .collect();
        let h = HilbertFunction::new(values)
            .expect("an admissible degree sequence resolves to a valid Hilbert function");
        debug_assert!(
            (0..=th - 3).all(|i| h.get(i) == h.get(th - 3 - i)),
            "Gorenstein Hilbert function must be symmetric: {:?}",
            self.degrees
        );
        h
    }

    /// No two degrees sum to `theta`: every generator is forced by the
    /// Hilbert function, none can cancel against a syzygy.
    pub fn is_reduced(&self) -> bool {
        let n = self.degrees.len();
        !(0..n).any(|h| (h + 1..n).any(|k| self.degrees[h] + self.degrees[k] == self.theta))
    }

    /// Index sets `B` and `C`, the minimal complete intersection triple they
    /// select, and the reducedness flag.
    pub fn mci_data(&self) -> MciData {
        let m = self.m();
        let th = self.theta;
        let b_set: Vec<usize> = (3..=m + 1)
            .filter(|&i| th <= self.d(i) + self.d(2 * m + 4 - i))
            .collect();
        let c_set: Vec<usize> = (4..=m + 2)
            .filter(|&i| th <= self.d(i) + self.d(2 * m + 5 - i))
            .collect();
        let (a1, a2, a3) = if let (Some(&b_min), Some(&b_max)) = (b_set.first(), b_set.last()) {
            (self.d(1), self.d(b_max), self.d(2 * m + 4 - b_min))
        } else if let Some(&c_max) = c_set.last() {
            (self.d(1), self.d(2), self.d(c_max))
        } else {
            (self.d(1), self.d(2), self.d(3))
        };
        let mci = CiTriple::new(a1, a2, a3)
            .expect("the minimal-triple displays always select a sorted positive triple");
        MciData {
            b_set,
            c_set,
            mci,
            reduced: self.is_reduced(),
        }
    }

    /// Removes ghost pairs (two degrees summing to `theta`) until none
    /// remain, always taking the lexicographically smallest index pair
    /// first. Removal cancels a generator against a syzygy, so `theta` and
    /// the Hilbert function are unchanged.
    pub fn reduce(&self) -> Result<DegreeSequence> {
        let mut degrees = self.degrees.clone();
        loop {
            let n = degrees.len();
            let pair = (0..n)
                .flat_map(|h| (h + 1..n).map(move |k| (h, k)))
                .find(|&(h, k)| degrees[h] + degrees[k] == self.theta);
            match pair {
                None => break,
                Some(_) if n == 3 => return Err(Error::WouldEmptySequence),
                Some((h, k)) => {
                    degrees.remove(k);
                    degrees.remove(h);
                }
            }
        }
        DegreeSequence::new(degrees)
    }
}

/// The minimal complete intersection triple of a degree sequence, together
/// with the index sets that determined it. Indices in `b_set` and `c_set`
/// are 1-based positions into the degree list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MciData {
    pub b_set: Vec<usize>,
    pub c_set: Vec<usize>,
    pub mci: CiTriple,
    pub reduced: bool,
}

/// A complete intersection with degrees `alpha` embeds in some Gorenstein
/// ideal with degrees `delta` exactly when `alpha` dominates the minimal
/// triple componentwise.
pub fn regor_nonempty(alpha: &CiTriple, delta: &DegreeSequence) -> bool {
    alpha.dominates(&delta.mci_data().mci)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(degrees: &[i64]) -> DegreeSequence {
        DegreeSequence::new(degrees.to_vec()).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert_eq!(ds(&[2, 2, 2, 3, 3]).theta(), 6);
        assert_eq!(ds(&[1, 1, 1]).theta(), 3);
        assert_eq!(ds(&[3, 3, 4, 4, 4]).theta(), 9);
        assert_eq!(
            DegreeSequence::new(vec![3, 3, 3, 3, 3]),
            Err(Error::NonIntegerTheta { sum: 15, m: 2 })
        );
        assert_eq!(
            DegreeSequence::new(vec![2, 2, 2, 2, 6]),
            Err(Error::PairBound { i: 2 })
        );
        assert_eq!(
            DegreeSequence::new(vec![2, 2, 3, 3]),
            Err(Error::EvenLength(4))
        );
        assert_eq!(DegreeSequence::new(vec![5]), Err(Error::TooShort(1)));
        assert_eq!(
            DegreeSequence::new(vec![2, 1, 2]),
            Err(Error::NotSorted(2))
        );
        assert_eq!(
            DegreeSequence::new(vec![0, 1, 1]),
            Err(Error::NonPositive(1))
        );
    }

    #[test]
    fn every_ci_triple_is_admissible() {
        // For m = 1 the only pair bound is theta > d_2 + d_3, which holds
        // because d_1 > 0; so every sorted positive triple validates.
        for t in [[1, 1, 1], [2, 2, 3], [1, 4, 9]] {
            assert!(DegreeSequence::new(t.to_vec()).is_ok(), "{t:?}");
        }
    }

    #[test]
    fn resolution_hilbert_functions() {
        assert_eq!(ds(&[1, 1, 1]).hilbert_function().values(), &[1]);
        assert_eq!(
            ds(&[2, 2, 2, 3, 3]).hilbert_function().values(),
            &[1, 3, 3, 1]
        );
        assert_eq!(
            ds(&[3, 3, 4, 4, 4]).hilbert_function().values(),
            &[1, 3, 6, 8, 6, 3, 1]
        );
        assert_eq!(
            ds(&[2, 2, 2, 5, 5]).hilbert_function().values(),
            &[1, 3, 3, 3, 3, 1]
        );
        assert_eq!(
            ds(&[2, 3, 3, 5, 5]).hilbert_function().values(),
            &[1, 3, 5, 5, 5, 3, 1]
        );
    }

    #[test]
    fn ci_triples_match_product_form() {
        for t in [[2, 2, 3], [3, 3, 4], [1, 2, 5], [4, 4, 4]] {
            let from_resolution = ds(&t).hilbert_function();
            let from_product = CiTriple::new(t[0], t[1], t[2])
                .unwrap()
                .hilbert_function();
            assert_eq!(from_resolution, from_product, "{t:?}");
        }
    }

    #[test]
    fn index_sets_and_minimal_triple() {
        let data = ds(&[2, 2, 2, 3, 3]).mci_data();
        assert!(data.b_set.is_empty());
        assert_eq!(data.c_set, vec![4]);
        assert_eq!(data.mci.degrees(), [2, 2, 3]);
        assert!(!data.reduced);

        let data = ds(&[2, 2, 4, 4, 6]).mci_data();
        assert_eq!(data.b_set, vec![3]);
        assert_eq!(data.c_set, vec![4]);
        assert_eq!(data.mci.degrees(), [2, 4, 6]);
        assert!(data.reduced);

        let data = ds(&[2, 2, 2]).mci_data();
        assert!(data.b_set.is_empty() && data.c_set.is_empty());
        assert_eq!(data.mci.degrees(), [2, 2, 2]);
        assert!(data.reduced);

        let data = ds(&[2, 3, 3, 5, 5]).mci_data();
        assert!(data.b_set.is_empty());
        assert_eq!(data.c_set, vec![4]);
        assert_eq!(data.mci.degrees(), [2, 3, 5]);
        assert!(data.reduced);
    }

    #[test]
    fn reduction_removes_ghost_pairs() {
        // (2,2,3,4,5) has theta = 8 = d_3 + d_5; dropping that pair keeps theta.
        let reduced = ds(&[2, 2, 3, 4, 5]).reduce().unwrap();
        assert_eq!(reduced.degrees(), &[2, 2, 4]);
        assert_eq!(reduced.theta(), 8);

        // Already reduced sequences pass through untouched.
        let seq = ds(&[3, 3, 4, 4, 4]);
        assert_eq!(seq.reduce().unwrap(), seq);

        // The two 3s sum to theta = 6, so the fixpoint is the plain triple.
        let reduced = ds(&[2, 2, 2, 3, 3]).reduce().unwrap();
        assert_eq!(reduced.degrees(), &[2, 2, 2]);
    }

    #[test]
    fn reduction_preserves_hilbert_function() {
        for t in [&[2, 2, 3, 4, 5][..], &[2, 2, 2, 3, 3][..], &[3, 3, 3, 3, 4, 4, 4][..]] {
            let seq = ds(t);
            let reduced = seq.reduce().unwrap();
            assert_eq!(seq.hilbert_function(), reduced.hilbert_function(), "{t:?}");
            assert_eq!(seq.theta(), reduced.theta(), "{t:?}");
        }
    }

    #[test]
    fn embedding_test_is_componentwise() {
        let delta = ds(&[2, 2, 2, 3, 3]);
        let yes = CiTriple::new(2, 2, 3).unwrap();
        let also = CiTriple::new(2, 3, 5).unwrap();
        let no = CiTriple::new(2, 2, 2).unwrap();
        assert!(regor_nonempty(&yes, &delta));
        assert!(regor_nonempty(&also, &delta));
        assert!(!regor_nonempty(&no, &delta));
    }
}
