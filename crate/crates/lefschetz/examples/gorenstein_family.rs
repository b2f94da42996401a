//! Gorenstein degree sequences: validation, Hilbert functions, and the
//! minimal embedded complete intersection.
//!
//! Run with `cargo run --example gorenstein_family`.
//!
//! A codimension-3 Artinian Gorenstein algebra is presented numerically by
//! an odd-length nondecreasing degree sequence `(d_1, ..., d_{2m+1})`
//! subject to two admissibility conditions: the socle invariant
//! `theta = (sum of degrees) / m` must be an integer, and
//! `theta > d_i + d_{2m+3-i}` for `2 <= i <= m+1`. The Hilbert function then
//! comes straight out of the self-dual free resolution as an alternating
//! sum of binomial coefficients, symmetric about its middle.
//!
//! Two index sets `B` and `C` computed from the same inequalities determine
//! the minimal complete-intersection triple `mci`: the componentwise-least
//! degrees of a complete intersection containing the Gorenstein ideal.
//! Finally, a "ghost pair" — two entries summing to `theta` — contributes
//! cancelling resolution terms and can be removed without changing
//! anything; `reduce` strips all of them.

use lefschetz::DegreeSequence;

fn describe(degrees: &[i64]) {
    print!("degrees {degrees:?}: ");
    let delta = match DegreeSequence::new(degrees.to_vec()) {
        Ok(delta) => delta,
        Err(e) => {
            println!("rejected ({e})");
            return;
        }
    };
    println!("admissible, theta = {}", delta.theta());

    let h = delta.hilbert_function();
    println!("  H = {:?} (symmetric)", h.values());

    let data = delta.mci_data();
    println!(
        "  B = {:?}, C = {:?}  ->  minimal triple {:?}",
        data.b_set,
        data.c_set,
        data.mci.degrees()
    );

    let reduced = delta.reduce().expect("admissible sequences reduce");
    if reduced.degrees() == delta.degrees() {
        println!("  already reduced: no two entries sum to theta");
    } else {
        println!(
            "  ghost pairs removed: {:?} (same theta, same Hilbert function: {})",
            reduced.degrees(),
            reduced.hilbert_function() == h
        );
    }
    println!();
}

fn main() {
    // A complete intersection is the m = 1 case.
    describe(&[2, 2, 3]);
    // Five generators, nonempty C, a ghost pair.
    describe(&[2, 2, 2, 3, 3]);
    // Nonempty B changes which entries the minimal triple picks.
    describe(&[2, 2, 4, 4, 6]);
    // A wider reduced sequence.
    describe(&[2, 3, 3, 5, 5]);
    // Both admissibility conditions can fail.
    describe(&[3, 3, 3, 3, 3]);
    describe(&[2, 2, 2, 2, 6]);
}
