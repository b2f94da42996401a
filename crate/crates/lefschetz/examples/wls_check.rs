//! The Weak Lefschetz sequence test, piece by piece.
//!
//! Run with `cargo run --example wls_check`.
//!
//! A finitely supported Hilbert function is a Weak Lefschetz sequence when
//! it is unimodal — strictly increasing up to a peak, weakly decreasing
//! afterwards — and the positive part of its first difference obeys
//! Macaulay's growth bound in every degree. These are exactly the Hilbert
//! functions of graded algebras on which a general linear form has maximal
//! rank in every degree.
//!
//! The example walks sequences that pass, fail unimodality, and fail the
//! growth bound, and shows the Macaulay bound computation that powers the
//! second test.

use lefschetz::{macaulay_bound, HilbertFunction};

fn verdict_line(values: &[i64]) {
    let h = HilbertFunction::new(values.to_vec()).expect("valid Hilbert function values");
    let v = h.wls();
    print!("H = {values:?}: ");
    if v.is_wls {
        println!(
            "Weak Lefschetz sequence (peak at degree {})",
            v.unimodality_index.unwrap()
        );
        return;
    }
    if !v.is_unimodal {
        println!("not a Weak Lefschetz sequence: not unimodal");
    } else {
        println!(
            "not a Weak Lefschetz sequence: growth bound broken at degree {}",
            v.first_violation_degree.unwrap()
        );
    }
}

fn main() {
    verdict_line(&[1, 3, 6, 6, 3]);
    verdict_line(&[1, 3, 4, 3, 1]);
    verdict_line(&[1, 3, 2, 3]); // rises again after falling
    verdict_line(&[1, 2, 4]); // grows faster than one variable allows
    verdict_line(&[1, 1, 2]); // the strict-increase clause has no witness
    verdict_line(&[1]);

    println!();
    println!("Macaulay growth bounds (largest admissible next value):");
    for (value, position) in [(1, 1), (2, 1), (3, 1), (3, 2), (4, 2), (6, 2), (6, 3)] {
        println!(
            "  after {value} in degree {position}: at most {}",
            macaulay_bound(value, position).unwrap()
        );
    }

    println!();
    let h = HilbertFunction::new(vec![1, 3, 6, 6, 3]).unwrap();
    println!("difference profile of {:?}:", h.values());
    println!("  delta H          = {:?}", h.first_difference().values());
    println!(
        "  (delta H)+       = {:?}",
        h.first_difference().positive_part().values()
    );
    println!(
        "  positive part is an O-sequence: {:?}",
        h.first_difference().positive_part().is_o_sequence().unwrap()
    );
}
