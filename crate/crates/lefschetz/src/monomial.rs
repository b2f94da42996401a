//! Independent brute-force oracle: Hilbert functions of Artinian monomial
//! quotients `k[x, y, z] / I` by direct counting of standard monomials.
//!
//! No resolutions, no products of polynomials — just enumeration of exponent
//! vectors not divisible by any generator. Used to cross-check the algebraic
//! formulas elsewhere in the crate.

use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;

/// A monomial ideal in three variables, given by generator exponent
/// vectors. Must contain a pure power of each variable so the quotient is
/// finite-dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: Vec<[i64; 3]>,
}

impl MonomialIdeal {
    pub fn new(generators: Vec<[i64; 3]>) -> Result<Self> {
        for g in &generators {
            if g.iter().any(|&e| e < 0) {
                return Err(Error::NegativeExponent(*g));
            }
            if *g == [0, 0, 0] {
                return Err(Error::ZeroGenerator);
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[i + 1..].contains(g) {
                return Err(Error::DuplicateGenerator(*g));
            }
        }
        for var in 0..3 {
            let pure = generators
                .iter()
                .any(|g| g[var] > 0 && (0..3).all(|v| v == var || g[v] == 0));
            if !pure {
                return Err(Error::NotArtinian(var + 1));
            }
        }
        Ok(Self { generators })
    }

    pub fn generators(&self) -> &[[i64; 3]] {
        &self.generators
    }

    /// Smallest pure-power exponent present for the given variable.
    fn pure_power(&self, var: usize) -> i64 {
        self.generators
            .iter()
            .filter(|g| g[var] > 0 && (0..3).all(|v| v == var || g[v] == 0))
            .map(|g| g[var])
            .min()
            .expect("construction guarantees a pure power per variable")
    }

    /// Counts, degree by degree, the monomials `x^u1 y^u2 z^u3` that no
    /// generator divides. Any standard monomial has `u_i` below the pure
    /// power of `x_i`, so degrees beyond the sum of the three pure powers
    /// are empty and the scan stops there.
    pub fn hilbert_function(&self) -> HilbertFunction {
        let cap: i64 = (0..3).map(|v| self.pure_power(v) - 1).sum::<i64>() + 1;
        let mut values = Vec::with_capacity(cap as usize + 1);
        for t in 0..=cap {
            let mut count = 0i64;
            for u1 in 0..=t {
                for u2 in 0..=t - u1 {
                    let u = [u1, u2, t - u1 - u2];
                    let standard = !self
                        .generators
                        .iter()
                        .any(|g| (0..3).all(|v| u[v] >= g[v]));
                    if standard {
                        count += 1;
                    }
                }
            }
            values.push(count);
        }
        HilbertFunction::new(values)
            .expect("the unit monomial survives, so counting starts at 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_power_quotients() {
        let ideal = MonomialIdeal::new(vec![[2, 0, 0], [0, 2, 0], [0, 0, 2]]).unwrap();
        assert_eq!(ideal.hilbert_function().values(), &[1, 3, 3, 1]);

        let ideal = MonomialIdeal::new(vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(ideal.hilbert_function().values(), &[1]);
    }

    #[test]
    fn mixed_generator_quotient() {
        let ideal =
            MonomialIdeal::new(vec![[3, 0, 0], [0, 3, 0], [0, 0, 3], [1, 1, 1]]).unwrap();
        assert_eq!(ideal.hilbert_function().values(), &[1, 3, 6, 6, 3]);
    }

    #[test]
    fn redundant_generators_change_nothing() {
        let plain = MonomialIdeal::new(vec![[2, 0, 0], [0, 3, 0], [0, 0, 4]]).unwrap();
        // x^2 divides x^2 y, so the extra generator is redundant.
        let padded =
            MonomialIdeal::new(vec![[2, 0, 0], [0, 3, 0], [0, 0, 4], [2, 1, 0]]).unwrap();
        assert_eq!(plain.hilbert_function(), padded.hilbert_function());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            MonomialIdeal::new(vec![[1, 1, 0]]),
            Err(Error::NotArtinian(1))
        );
        assert_eq!(
            MonomialIdeal::new(vec![[2, 0, 0], [0, 2, 0]]),
            Err(Error::NotArtinian(3))
        );
        assert_eq!(
            MonomialIdeal::new(vec![[2, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2]]),
            Err(Error::DuplicateGenerator([2, 0, 0]))
        );
        assert_eq!(
            MonomialIdeal::new(vec![[0, 0, 0]]),
            Err(Error::ZeroGenerator)
        );
        assert_eq!(
            MonomialIdeal::new(vec![[-1, 0, 0]]),
            Err(Error::NegativeExponent([-1, 0, 0]))
        );
    }

    #[test]
    fn matches_complete_intersection_products() {
        use crate::ci::CiTriple;
        for [a, b, c] in [[2, 2, 3], [1, 2, 4], [3, 3, 3]] {
            let ideal =
                MonomialIdeal::new(vec![[a, 0, 0], [0, b, 0], [0, 0, c]]).unwrap();
            let triple = CiTriple::new(a, b, c).unwrap();
            assert_eq!(
                ideal.hilbert_function(),
                triple.hilbert_function(),
                "{a},{b},{c}"
            );
        }
    }
}
