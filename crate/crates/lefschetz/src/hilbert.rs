//! Integer-sequence substrate: Hilbert functions, difference sequences,
//! Macaulay growth bounds, and the Weak Lefschetz sequence test.
//!
//! All sequences are finitely supported, indexed from degree 0, and handled
//! with exact integer arithmetic. A [`HilbertFunction`] stores the values of a
//! standard graded Artinian quotient, so `H(0) = 1` and every entry is
//! nonnegative; values outside the stored range are 0. Differences may go
//! negative and live in [`DifferenceSequence`].

use serde::Serialize;

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` whenever `k < 0`,
/// `n < 0`, or `n < k`. Exact for every value that fits in `i64`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        // The running product is always divisible by j + 1.
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    acc.try_into().expect("binomial coefficient exceeds i64")
}

/// Maximal growth permitted by Macaulay's theorem: write
/// `v = C(m_i, i) + C(m_(i-1), i-1) + ... + C(m_j, j)` greedily with
/// `m_i > m_(i-1) > ... > m_j >= j >= 1`, then the bound is the same sum with
/// every `C(m, k)` replaced by `C(m + 1, k + 1)`.
///
/// `macaulay_bound(v, i)` caps the value an O-sequence may take in degree
/// `i + 1` given the value `v` in degree `i >= 1`.
pub fn macaulay_bound(value: i64, position: i64) -> Result<i64> {
    if position < 1 {
        return Err(Error::InvalidIndex(position));
    }
    if value < 0 {
        return Err(Error::NegativeEntry {
            degree: position as usize,
            value,
        });
    }
    let mut rem = value;
    let mut k = position;
    let mut bound: i64 = 0;
    while rem > 0 {
        if k == 1 {
            // C(rem, 1) closes every greedy expansion.
            bound += binomial(rem + 1, 2);
            rem = 0;
            break;
        }
        let mut m = k;
        while binomial(m + 1, k) <= rem {
            m += 1;
        }
        rem -= binomial(m, k);
        bound += binomial(m + 1, k + 1);
        k -= 1;
    }
    debug_assert_eq!(rem, 0, "greedy binomial expansion must terminate exactly");
    Ok(bound)
}

/// Macaulay's O-sequence test: `s(0) = 1` and
/// `s(i + 1) <= macaulay_bound(s(i), i)` for every `i >= 1` in the stored
/// range. The degree-1 value is unconstrained. Returns `(true, None)` on
/// success and `(false, Some(first violating degree))` otherwise.
///
/// Entries must be nonnegative.
pub fn is_o_sequence(values: &[i64]) -> Result<(bool, Option<i64>)> {
    if let Some(pos) = values.iter().position(|&v| v < 0) {
        return Err(Error::NegativeEntry {
            degree: pos,
            value: values[pos],
        });
    }
    if values.first().copied().unwrap_or(0) != 1 {
        return Ok((false, Some(0)));
    }
    for i in 1..values.len().saturating_sub(1) {
        let bound = macaulay_bound(values[i], i as i64)?;
        if values[i + 1] > bound {
            return Ok((false, Some(i as i64 + 1)));
        }
    }
    Ok((true, None))
}

/// Outcome of the Weak Lefschetz sequence test on a Hilbert function:
/// the function must be unimodal and the positive part of its first
/// difference must satisfy Macaulay growth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WlsVerdict {
    pub is_unimodal: bool,
    /// Peak witness: largest `u` with strict increase on `[0, u)` and weak
    /// decrease from `u` on. Unique when it exists; `0` for constant-start
    /// functions such as `(1)`.
    pub unimodality_index: Option<i64>,
    pub o_sequence_ok: bool,
    /// First degree at which `(difference)^+` breaks Macaulay growth.
    pub first_violation_degree: Option<i64>,
    pub is_wls: bool,
}

/// Finitely supported Hilbert function of an Artinian standard graded
/// algebra. Stored densely from degree 0 with trailing zeros trimmed;
/// `H(0) = 1` and all entries are nonnegative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HilbertFunction {
    values: Vec<i64>,
}

impl HilbertFunction {
    /// Validates and normalizes a value list: trims trailing zeros, rejects
    /// negative entries, empty support, and a leading value other than 1.
    pub fn new(values: impl Into<Vec<i64>>) -> Result<Self> {
        let mut values = values.into();
        while values.last() == Some(&0) {
            values.pop();
        }
        if values.is_empty() {
            return Err(Error::EmptyFunction);
        }
        if let Some(pos) = values.iter().position(|&v| v < 0) {
            return Err(Error::NegativeEntry {
                degree: pos,
                value: values[pos],
            });
        }
        if values[0] != 1 {
            return Err(Error::NonUnitStart(values[0]));
        }
        Ok(Self { values })
    }

    /// Stored values, degree 0 upward; the last entry is positive.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Value at an arbitrary degree (0 outside the stored range).
    pub fn get(&self, degree: i64) -> i64 {
        if degree < 0 || degree as usize >= self.values.len() {
            0
        } else {
            self.values[degree as usize]
        }
    }

    /// Largest degree with a positive value.
    pub fn last_degree(&self) -> i64 {
        self.values.len() as i64 - 1
    }

    /// Total dimension `sum of all values` (the length of the module).
    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    /// Socle invariant `theta = (last degree with a positive value) + 3`,
    /// the degree carried by the socle generator three steps up.
    pub fn theta(&self) -> i64 {
        self.last_degree() + 3
    }

    /// Last degree where the first difference is still positive. Always
    /// defined: `H(0) = 1` makes the degree-0 difference positive.
    pub fn lambda(&self) -> i64 {
        let diff = self.first_difference();
        diff.values
            .iter()
            .rposition(|&v| v > 0)
            .expect("H(0) = 1 forces a positive first difference in degree 0") as i64
    }

    /// First difference `H(i) - H(i - 1)`, stored over `[0, last + 1]` so the
    /// final negative step down to zero is kept.
    pub fn first_difference(&self) -> DifferenceSequence {
        let n = self.values.len();
        let values = (0..=n)
            .map(|i| self.get(i as i64) - self.get(i as i64 - 1))
            .collect();
        DifferenceSequence { values, order: 1 }
    }

    /// Second difference, i.e. the first difference applied twice.
    pub fn second_difference(&self) -> DifferenceSequence {
        self.first_difference().difference()
    }

    /// Unimodality witness: `Some(u)` iff the values increase strictly on
    /// `[0, u)` and decrease weakly from `u` on. `(1, 1, 2)` has no witness.
    pub fn unimodality_index(&self) -> Option<i64> {
        let v = &self.values;
        let mut u = 0;
        while u + 1 < v.len() && v[u] < v[u + 1] {
            u += 1;
        }
        if v[u..].windows(2).all(|w| w[0] >= w[1]) {
            Some(u as i64)
        } else {
            None
        }
    }

    /// Weak Lefschetz sequence test: unimodal, and the positive part of the
    /// first difference is an O-sequence.
    pub fn wls(&self) -> WlsVerdict {
        let u = self.unimodality_index();
        let plus = self.first_difference().positive_part();
        let (o_sequence_ok, first_violation_degree) = is_o_sequence(plus.values())
            .expect("a positive part has no negative entries");
        WlsVerdict {
            is_unimodal: u.is_some(),
            unimodality_index: u,
            o_sequence_ok,
            first_violation_degree,
            is_wls: u.is_some() && o_sequence_ok,
        }
    }
}

/// Iterated difference of a Hilbert function. Entries may be negative; the
/// stored range always covers every nonzero value and `get` returns 0
/// elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceSequence {
    values: Vec<i64>,
    order: u8,
}

impl DifferenceSequence {
    /// Wraps externally produced values. No trimming is applied, so the
    /// stored range is exactly what the caller supplies.
    pub fn from_values(values: Vec<i64>, order: u8) -> Self {
        Self { values, order }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    /// Value at an arbitrary degree (0 outside the stored range).
    pub fn get(&self, degree: i64) -> i64 {
        if degree < 0 || degree as usize >= self.values.len() {
            0
        } else {
            self.values[degree as usize]
        }
    }

    /// One further difference; the stored range grows by one degree so the
    /// closing step is kept, then trailing zeros are trimmed.
    pub fn difference(&self) -> DifferenceSequence {
        let n = self.values.len();
        let mut values: Vec<i64> = (0..=n)
            .map(|i| self.get(i as i64) - self.get(i as i64 - 1))
            .collect();
        while values.last() == Some(&0) {
            values.pop();
        }
        DifferenceSequence {
            values,
            order: self.order + 1,
        }
    }

    /// Entrywise `max(value, 0)` over the same stored range.
    pub fn positive_part(&self) -> DifferenceSequence {
        DifferenceSequence {
            values: self.values.iter().map(|&v| v.max(0)).collect(),
            order: self.order,
        }
    }

    /// O-sequence test on the stored values; see [`is_o_sequence`].
    pub fn is_o_sequence(&self) -> Result<(bool, Option<i64>)> {
        is_o_sequence(&self.values)
    }
}
