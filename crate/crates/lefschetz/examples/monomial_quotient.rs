//! The brute-force monomial oracle.
//!
//! Run with `cargo run --example monomial_quotient`.
//!
//! For a monomial ideal in three variables, the Hilbert function of the
//! quotient counts, degree by degree, the exponent vectors divisible by no
//! generator. That computation involves nothing but componentwise
//! comparisons, which makes it the crate's independent cross-check for the
//! resolution-based formulas.
//!
//! The featured ideal `(x^3, y^3, z^3, xyz)` is a classical specimen: the
//! algebra it cuts out fails the Weak Lefschetz Property itself, yet its
//! Hilbert function still passes the sequence-level test — membership in
//! the class of Weak Lefschetz sequences constrains the function, not the
//! algebra.

use lefschetz::{CiTriple, MonomialIdeal};

fn main() {
    let ideal = MonomialIdeal::new(vec![[3, 0, 0], [0, 3, 0], [0, 0, 3], [1, 1, 1]])
        .expect("Artinian generators");
    let h = ideal.hilbert_function();
    println!("quotient by (x^3, y^3, z^3, xyz):");
    println!("  H = {:?}", h.values());
    for t in 0..=h.last_degree() {
        println!("  degree {t}: {} standard monomials", h.get(t));
    }
    println!(
        "  Weak Lefschetz sequence: {} (despite the algebra failing the Weak Lefschetz Property)",
        h.wls().is_wls
    );

    println!();
    println!("pure powers agree with the complete-intersection product:");
    for [a1, a2, a3] in [[2, 2, 2], [2, 2, 3], [3, 4, 5]] {
        let counted = MonomialIdeal::new(vec![[a1, 0, 0], [0, a2, 0], [0, 0, a3]])
            .unwrap()
            .hilbert_function();
        let product = CiTriple::new(a1, a2, a3).unwrap().hilbert_function();
        println!(
            "  (x^{a1}, y^{a2}, z^{a3}): {:?}, matches product: {}",
            counted.values(),
            counted == product
        );
    }
}
