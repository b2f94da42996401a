//! Exhaustive verification of the structural inequalities tying a complete
//! intersection `Z`, an embedded Gorenstein ideal `G`, and the linked
//! residual `Q` together.
//!
//! [`check_pair`] evaluates every named check on one `(alpha, delta)` pair;
//! [`sweep`] enumerates all admissible pairs up to configured bounds, runs
//! the checks in parallel, and reports the failures. Results are
//! deterministic: identical configurations produce identical reports (up to
//! the elapsed-time field) regardless of worker count.
//!
//! The named checks, with their meaning:
//!
//! * `wls` — `H_Q` is a Weak Lefschetz sequence (unimodal, positive
//!   difference part satisfies Macaulay growth).
//! * `claim_tau_bound` — `tau > theta_G - d_2 - 1`.
//! * `early_delta_domination` — `ΔH_Z(n) >= ΔH_G(n)` for
//!   `0 <= n <= theta_Z - 3 - lambda_Z`.
//! * `theta_gap_vs_lambda_gap` — `theta_Z - theta_G >= lambda_Z - lambda_G`.
//! * `tau_beyond_reflected_lambda` — `tau > theta_Z - 3 - lambda_Z` and
//!   `tau > theta_G - 3 - lambda_G`.
//! * `second_diff_cap_c_empty` — with `B` and `C` empty and `alpha` equal to
//!   the minimal triple: `Δ²H_G(i) <= -2` on `[d_3, theta_G - d_3 - 1]`.
//! * `second_diff_cap_c_nonempty` — with `B` empty, `C` nonempty and
//!   `alpha` minimal: `Δ²H_G(i) <= -1` on `[d_2, min(d_gamma, theta_G -
//!   d_2m) - 1]`, where `d_gamma` is the last entry of the minimal triple
//!   and `d_2m` the second-largest degree. The truncation at
//!   `theta_G - d_2m` excludes degrees where two syzygies already
//!   contribute; without it the cap genuinely fails, e.g. for degrees
//!   `(2, 3, 3, 5, 5)` at degree 4.
//! * `mci_delta_domination` — with `alpha` minimal:
//!   `ΔH_G(i) <= ΔH_Z(i)` on `[0, theta_G - d_2 - 1]`.
//! * `gorenstein_delta_profile` — the sign profile of `ΔH_G`: positive
//!   exactly up to `lambda_G`, negative exactly from
//!   `theta_G - 2 - lambda_G`, `theta_G >= 2 lambda_G + 3`, and a flat
//!   middle when `theta_G >= 2 lambda_G + 4`.
//! * `pointwise_domination` — `H_Z(t) >= H_G(t)` everywhere.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::ci::CiTriple;
use crate::error::Result;
use crate::gorenstein::DegreeSequence;
use crate::hilbert::{HilbertFunction, WlsVerdict};
use crate::liaison::link;

pub const CHECK_WLS: &str = "wls";
pub const CHECK_CLAIM: &str = "claim_tau_bound";
pub const CHECK_EARLY_DELTA_DOMINATION: &str = "early_delta_domination";
pub const CHECK_THETA_GAP: &str = "theta_gap_vs_lambda_gap";
pub const CHECK_TAU_BEYOND: &str = "tau_beyond_reflected_lambda";
pub const CHECK_SECOND_DIFF_C_EMPTY: &str = "second_diff_cap_c_empty";
pub const CHECK_SECOND_DIFF_C_NONEMPTY: &str = "second_diff_cap_c_nonempty";
pub const CHECK_MCI_DOMINATION: &str = "mci_delta_domination";
pub const CHECK_GOR_PROFILE: &str = "gorenstein_delta_profile";
pub const CHECK_POINTWISE: &str = "pointwise_domination";

/// All check names, in report order.
pub const ALL_CHECKS: [&str; 10] = [
    CHECK_WLS,
    CHECK_CLAIM,
    CHECK_EARLY_DELTA_DOMINATION,
    CHECK_THETA_GAP,
    CHECK_TAU_BEYOND,
    CHECK_SECOND_DIFF_C_EMPTY,
    CHECK_SECOND_DIFF_C_NONEMPTY,
    CHECK_MCI_DOMINATION,
    CHECK_GOR_PROFILE,
    CHECK_POINTWISE,
];

/// Checks that are theorems only under the normalization hypotheses
/// (reduced `delta`, empty `B`, bounded shift). An unnormalized sweep still
/// evaluates them but reports their failures as informational.
const NORMALIZATION_ONLY: [&str; 4] = [
    CHECK_CLAIM,
    CHECK_SECOND_DIFF_C_EMPTY,
    CHECK_SECOND_DIFF_C_NONEMPTY,
    CHECK_MCI_DOMINATION,
];

/// Names of the checks whose failure marks a pair as failed under the given
/// normalization setting.
pub fn required_checks(enforce_normalization: bool) -> Vec<&'static str> {
    ALL_CHECKS
        .iter()
        .copied()
        .filter(|name| enforce_normalization || !NORMALIZATION_ONLY.contains(name))
        .collect()
}

/// Pass/fail for one named check, with the first offending degree when the
/// check scans a degree range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub passed: bool,
    pub failed_at: Option<i64>,
}

impl CheckOutcome {
    fn pass() -> Self {
        Self {
            passed: true,
            failed_at: None,
        }
    }

    fn fail_at(degree: i64) -> Self {
        Self {
            passed: false,
            failed_at: Some(degree),
        }
    }

    fn from_bool(passed: bool) -> Self {
        Self {
            passed,
            failed_at: None,
        }
    }
}

/// Scans a closed degree range and fails at the first degree where the
/// predicate is false. Empty ranges pass vacuously.
fn scan(lo: i64, hi: i64, ok: impl Fn(i64) -> bool) -> CheckOutcome {
    match (lo..=hi).find(|&i| !ok(i)) {
        None => CheckOutcome::pass(),
        Some(i) => CheckOutcome::fail_at(i),
    }
}

/// Everything recorded about one `(alpha, delta)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub alpha: CiTriple,
    pub delta: Vec<i64>,
    pub h_q: HilbertFunction,
    pub wls: WlsVerdict,
    pub tau: i64,
    pub claim_ok: bool,
    pub checks: BTreeMap<&'static str, CheckOutcome>,
}

impl PairVerdict {
    /// Names of every check that failed, in report order.
    pub fn failed_checks(&self) -> Vec<&'static str> {
        ALL_CHECKS
            .iter()
            .copied()
            .filter(|name| !self.checks[name].passed)
            .collect()
    }

    fn fails_any(&self, required: &[&'static str]) -> bool {
        required.iter().any(|name| !self.checks[name].passed)
    }
}

/// Runs every named check on one pair. Errors propagate from [`link`]
/// (missing embedding, trivial link).
pub fn check_pair(alpha: &CiTriple, delta: &DegreeSequence) -> Result<PairVerdict> {
    let lp = link(alpha, delta)?;
    let data = delta.mci_data();
    let degs = delta.degrees();
    let (d2, d3) = (degs[1], degs[2]);
    let (theta_z, theta_g) = (lp.theta_z(), lp.theta_g());
    let (h_z, h_g) = (lp.h_z(), lp.h_g());
    let (lambda_z, lambda_g) = (h_z.lambda(), h_g.lambda());
    let dz = h_z.first_difference();
    let dg = h_g.first_difference();
    let d2g = h_g.second_difference();
    let tau = lp.tau();
    let wls = lp.h_q().wls();
    let at_mci = *alpha == data.mci;
    let claim_ok = tau > theta_g - d2 - 1;

    let mut checks = BTreeMap::new();
    checks.insert(
        CHECK_WLS,
        CheckOutcome {
            passed: wls.is_wls,
            failed_at: wls.first_violation_degree,
        },
    );
    checks.insert(CHECK_CLAIM, CheckOutcome::from_bool(claim_ok));
    checks.insert(
        CHECK_EARLY_DELTA_DOMINATION,
        scan(0, theta_z - 3 - lambda_z, |n| dz.get(n) >= dg.get(n)),
    );
    checks.insert(
        CHECK_THETA_GAP,
        CheckOutcome::from_bool(theta_z - theta_g >= lambda_z - lambda_g),
    );
    checks.insert(
        CHECK_TAU_BEYOND,
        CheckOutcome::from_bool(tau > theta_z - 3 - lambda_z && tau > theta_g - 3 - lambda_g),
    );
    checks.insert(
        CHECK_SECOND_DIFF_C_EMPTY,
        if data.b_set.is_empty() && data.c_set.is_empty() && at_mci {
            scan(d3, theta_g - d3 - 1, |i| d2g.get(i) <= -2)
        } else {
            CheckOutcome::pass()
        },
    );
    checks.insert(
        CHECK_SECOND_DIFF_C_NONEMPTY,
        if data.b_set.is_empty() && !data.c_set.is_empty() && at_mci {
            let d_gamma = data.mci.degrees()[2];
            let second_largest = degs[degs.len() - 2];
            scan(d2, d_gamma.min(theta_g - second_largest) - 1, |i| {
                d2g.get(i) <= -1
            })
        } else {
            CheckOutcome::pass()
        },
    );
    checks.insert(
        CHECK_MCI_DOMINATION,
        if at_mci {
            scan(0, theta_g - d2 - 1, |i| dg.get(i) <= dz.get(i))
        } else {
            CheckOutcome::pass()
        },
    );
    checks.insert(CHECK_GOR_PROFILE, gorenstein_profile(&dg, theta_g, lambda_g));
    checks.insert(
        CHECK_POINTWISE,
        scan(0, theta_z - 3, |t| h_z.get(t) >= h_g.get(t)),
    );

    Ok(PairVerdict {
        alpha: *alpha,
        delta: degs.to_vec(),
        h_q: lp.h_q().clone(),
        wls,
        tau,
        claim_ok,
        checks,
    })
}

/// Sign profile of the difference of a symmetric Gorenstein Hilbert
/// function: positive exactly on `[0, lambda]`, negative exactly on
/// `[theta - 2 - lambda, theta - 2]`, `theta >= 2 lambda + 3`, and zero on
/// the middle plateau when `theta >= 2 lambda + 4`.
fn gorenstein_profile(
    dg: &crate::hilbert::DifferenceSequence,
    theta: i64,
    lambda: i64,
) -> CheckOutcome {
    if theta < 2 * lambda + 3 {
        return CheckOutcome::fail_at(lambda);
    }
    let positive_ok = scan(0, theta - 2, |i| (dg.get(i) > 0) == (i <= lambda));
    if !positive_ok.passed {
        return positive_ok;
    }
    let negative_ok = scan(0, theta - 2, |i| {
        (dg.get(i) < 0) == (i >= theta - 2 - lambda)
    });
    if !negative_ok.passed {
        return negative_ok;
    }
    if theta >= 2 * lambda + 4 {
        let plateau = scan(lambda + 1, theta - 3 - lambda, |i| dg.get(i) == 0);
        if !plateau.passed {
            return plateau;
        }
    }
    CheckOutcome::pass()
}

/// Bounds for the exhaustive sweep.
///
/// Degree sequences run over all admissible `delta` with entries at most
/// `d_max` and at most `m_max` generator pairs; for each, `alpha` runs over
/// the box from the minimal triple to the minimal triple plus
/// `alpha_offset` in every coordinate. Pairs with `theta_Z <= theta_G` are
/// skipped. With `enforce_normalization` set, only reduced sequences with
/// empty `B` are enumerated, the shift `theta_Z - theta_G` must not exceed
/// `a_1`, and all ten checks are required; without it the four
/// normalization-only checks become informational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub d_max: i64,
    pub m_max: usize,
    #[serde(default = "default_alpha_offset")]
    pub alpha_offset: i64,
    #[serde(default = "default_enforce_normalization")]
    pub enforce_normalization: bool,
}

fn default_alpha_offset() -> i64 {
    3
}

fn default_enforce_normalization() -> bool {
    true
}

/// Full sweep result. `failures` holds the verdicts of every pair that
/// failed a required check, sorted by `(delta length, delta, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub deltas_enumerated: u64,
    pub pairs_checked: u64,
    pub distinct_hq: u64,
    pub failures: Vec<PairVerdict>,
    /// Wall time in integer milliseconds, the one nondeterministic field.
    pub elapsed_ms: u64,
}

/// Every admissible degree sequence within the configured bounds, in
/// enumeration order: by length, then lexicographically.
pub fn enumerate_deltas(config: &SweepConfig) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    for m in 1..=config.m_max {
        let mut current = Vec::with_capacity(2 * m + 1);
        extend_tuples(config, 2 * m + 1, 1, &mut current, &mut out);
    }
    out
}

fn extend_tuples(
    config: &SweepConfig,
    len: usize,
    lo: i64,
    current: &mut Vec<i64>,
    out: &mut Vec<DegreeSequence>,
) {
    if current.len() == len {
        if let Ok(seq) = DegreeSequence::new(current.clone()) {
            let keep = !config.enforce_normalization
                || (seq.is_reduced() && seq.mci_data().b_set.is_empty());
            if keep {
                out.push(seq);
            }
        }
        return;
    }
    for d in lo..=config.d_max {
        current.push(d);
        extend_tuples(config, len, d, current, out);
        current.pop();
    }
}

/// The complete-intersection triples paired with one degree sequence:
/// the box above the minimal triple, nondecreasing triples only, with the
/// trivial-link and (optionally) shift filters applied. Lexicographic
/// order.
pub fn alphas_for(delta: &DegreeSequence, config: &SweepConfig) -> Vec<CiTriple> {
    let [m1, m2, m3] = delta.mci_data().mci.degrees();
    let off = config.alpha_offset;
    let theta_g = delta.theta();
    let mut out = Vec::new();
    for a1 in m1..=m1 + off {
        for a2 in a1.max(m2)..=m2 + off {
            for a3 in a2.max(m3)..=m3 + off {
                let theta_z = a1 + a2 + a3;
                if theta_z <= theta_g {
                    continue;
                }
                if config.enforce_normalization && theta_z - theta_g > a1 {
                    continue;
                }
                out.push(
                    CiTriple::new(a1, a2, a3).expect("box enumeration yields sorted triples"),
                );
            }
        }
    }
    out
}

/// Runs the sweep and returns the report.
pub fn sweep(config: &SweepConfig) -> SweepReport {
    run_sweep(config).0
}

/// Like [`sweep`], additionally returning every pair verdict in
/// enumeration order (for per-pair emission).
pub fn sweep_detailed(config: &SweepConfig) -> (SweepReport, Vec<PairVerdict>) {
    let (report, verdicts) = run_sweep(config);
    (report, verdicts)
}

fn run_sweep(config: &SweepConfig) -> (SweepReport, Vec<PairVerdict>) {
    let start = Instant::now();
    let deltas = enumerate_deltas(config);
    // One task per delta; collect preserves enumeration order regardless of
    // the rayon worker count, keeping reports deterministic.
    let per_delta: Vec<Vec<PairVerdict>> = deltas
        .par_iter()
        .map(|delta| {
            alphas_for(delta, config)
                .iter()
                .map(|alpha| {
                    check_pair(alpha, delta)
                        .expect("enumeration only yields embeddable, nontrivial pairs")
                })
                .collect()
        })
        .collect();
    let required = required_checks(config.enforce_normalization);
    let verdicts: Vec<PairVerdict> = per_delta.into_iter().flatten().collect();
    let mut failures: Vec<PairVerdict> = verdicts
        .iter()
        .filter(|v| v.fails_any(&required))
        .cloned()
        .collect();
    failures.sort_by(|a, b| {
        (a.delta.len(), &a.delta, &a.alpha).cmp(&(b.delta.len(), &b.delta, &b.alpha))
    });
    let distinct_hq = verdicts
        .iter()
        .map(|v| v.h_q.values().to_vec())
        .collect::<BTreeSet<_>>()
        .len() as u64;
    let report = SweepReport {
        config: config.clone(),
        deltas_enumerated: deltas.len() as u64,
        pairs_checked: verdicts.len() as u64,
        distinct_hq,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    (report, verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(a1: i64, a2: i64, a3: i64) -> CiTriple {
        CiTriple::new(a1, a2, a3).unwrap()
    }

    fn ds(degrees: &[i64]) -> DegreeSequence {
        DegreeSequence::new(degrees.to_vec()).unwrap()
    }

    fn cfg(d_max: i64, m_max: usize, alpha_offset: i64, normalized: bool) -> SweepConfig {
        SweepConfig {
            d_max,
            m_max,
            alpha_offset,
            enforce_normalization: normalized,
        }
    }

    #[test]
    fn verdict_for_the_basic_pair() {
        let v = check_pair(&ci(2, 2, 3), &ds(&[2, 2, 2])).unwrap();
        assert_eq!(v.h_q.values(), &[1, 2, 1]);
        assert_eq!(v.tau, 4);
        assert!(v.claim_ok);
        assert!(v.wls.is_wls);
        assert!(v.failed_checks().is_empty(), "{:?}", v.failed_checks());
    }

    #[test]
    fn verdict_where_two_syzygies_enter_together() {
        // (2,3,3,5,5) and its minimal triple: the second-difference cap for
        // nonempty C needs its truncation here (the untruncated range would
        // flag degree 4, where Δ²H_G = 0).
        let v = check_pair(&ci(2, 3, 5), &ds(&[2, 3, 3, 5, 5])).unwrap();
        assert_eq!(v.h_q.values(), &[1, 2, 2, 1, 1]);
        assert_eq!(v.tau, 7);
        assert!(v.failed_checks().is_empty(), "{:?}", v.failed_checks());
    }

    #[test]
    fn check_errors_propagate() {
        assert!(check_pair(&ci(2, 2, 2), &ds(&[2, 2, 2, 3, 3])).is_err());
        assert!(check_pair(&ci(2, 2, 2), &ds(&[2, 2, 2])).is_err());
    }

    #[test]
    fn required_checks_depend_on_normalization() {
        let strict = required_checks(true);
        let loose = required_checks(false);
        assert_eq!(strict.len(), ALL_CHECKS.len());
        assert_eq!(loose.len(), ALL_CHECKS.len() - 4);
        assert!(!loose.contains(&CHECK_CLAIM));
        assert!(loose.contains(&CHECK_WLS));
    }

    #[test]
    fn degenerate_sweep_is_empty() {
        let report = sweep(&cfg(1, 1, 0, true));
        // Only (1,1,1) qualifies, and its sole box triple self-links.
        assert_eq!(report.deltas_enumerated, 1);
        assert_eq!(report.pairs_checked, 0);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn smallest_nontrivial_sweep_passes() {
        let report = sweep(&cfg(2, 1, 1, true));
        assert!(report.pairs_checked >= 1);
        assert!(report.failures.is_empty(), "{:?}", report.failures);
    }

    #[test]
    fn sweep_counts_match_detailed_verdicts() {
        let config = cfg(4, 2, 2, true);
        let (report, verdicts) = sweep_detailed(&config);
        assert_eq!(report.pairs_checked as usize, verdicts.len());
        let distinct = verdicts
            .iter()
            .map(|v| v.h_q.values().to_vec())
            .collect::<std::collections::BTreeSet<_>>()
            .len() as u64;
        assert_eq!(report.distinct_hq, distinct);
    }

    #[test]
    fn verdicts_replay_identically() {
        let config = cfg(4, 2, 1, false);
        let (_, verdicts) = sweep_detailed(&config);
        assert!(!verdicts.is_empty());
        for v in verdicts.iter().take(40) {
            let alpha = v.alpha;
            let delta = ds(&v.delta);
            assert_eq!(&check_pair(&alpha, &delta).unwrap(), v);
        }
    }

    #[test]
    fn enumeration_is_monotone_in_bounds() {
        let small = enumerate_deltas(&cfg(3, 2, 0, false)).len();
        let large = enumerate_deltas(&cfg(4, 2, 0, false)).len();
        assert!(small < large);
        let strict = enumerate_deltas(&cfg(4, 2, 0, true)).len();
        assert!(strict < large);
    }
}
