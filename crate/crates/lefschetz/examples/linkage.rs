//! Liaison: the residual of a Gorenstein ideal inside a complete
//! intersection, computed at the level of Hilbert functions.
//!
//! Run with `cargo run --example linkage`.
//!
//! When a complete intersection `Z` of degrees `alpha` contains a Gorenstein
//! ideal `G` with degree sequence `delta` (which happens exactly when
//! `alpha` dominates the minimal triple of `delta` componentwise), the
//! residual `Q = Z : G` is an almost complete intersection and its Hilbert
//! function is a reflection:
//!
//! ```text
//! H_Q(i) = H_Z(theta_Z - 3 - i) - H_G(theta_Z - 3 - i)
//! ```
//!
//! Alongside `H_Q` the crate reports `tau`, the first degree where the
//! difference of `H_G` strictly exceeds that of `H_Z`, and the four
//! generator degrees `(e1, alpha)` of the residual, with `e1` the shift
//! `theta_Z - theta_G`.

use lefschetz::{check_pair, link, CiTriple, DegreeSequence};

fn main() {
    let pairs: [([i64; 3], &[i64]); 3] = [
        ([2, 2, 3], &[2, 2, 2]),
        ([3, 3, 4], &[3, 3, 4, 4, 4]),
        ([2, 3, 3], &[2, 2, 2]),
    ];

    for (a, d) in pairs {
        let alpha = CiTriple::new(a[0], a[1], a[2]).unwrap();
        let delta = DegreeSequence::new(d.to_vec()).unwrap();
        let lp = link(&alpha, &delta).expect("the triple dominates the minimal triple");

        println!("Z of degrees {:?} containing G of degrees {:?}", a, d);
        println!("  H_Z = {:?}", lp.h_z().values());
        println!("  H_G = {:?}", lp.h_g().values());
        println!("  H_Q = {:?}  (reflected difference)", lp.h_q().values());
        println!("  tau = {}", lp.tau());

        let aci = lp.aci_degrees();
        println!(
            "  residual generator degrees {:?}, normalized: {}",
            aci.degrees, aci.normalized
        );

        // The difference-level form of the reflection identity.
        let dq = lp.h_q().first_difference();
        let dg = lp.h_g().first_difference();
        let dz = lp.h_z().first_difference();
        let theta_z = lp.theta_z();
        let identity = (0..=theta_z)
            .all(|i| dq.get(i) == dg.get(theta_z - 2 - i) - dz.get(theta_z - 2 - i));
        println!("  difference reflection identity holds: {identity}");

        // The full battery of named checks for this pair.
        let verdict = check_pair(&alpha, &delta).unwrap();
        println!(
            "  H_Q is a Weak Lefschetz sequence: {}",
            verdict.wls.is_wls
        );
        let failed = verdict.failed_checks();
        if failed.is_empty() {
            println!("  all {} named checks pass", verdict.checks.len());
        } else {
            println!("  FAILED checks: {failed:?}");
        }
        println!();
    }
}
