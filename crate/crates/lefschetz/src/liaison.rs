//! Linkage: the residual of a Gorenstein ideal inside a complete
//! intersection that contains it.
//!
//! When a complete intersection `Z` with invariant `theta_Z` contains a
//! Gorenstein ideal `G` with `theta_G < theta_Z`, the residual `Q` is an
//! almost complete intersection (four generators) whose Hilbert function is
//! the reflected difference
//!
//! `H_Q(i) = H_Z(theta_Z - 3 - i) - H_G(theta_Z - 3 - i)`.
//!
//! The crossing degree `tau` — the first degree where the difference of `G`
//! overtakes the difference of `Z` — controls where `H_Q` can stop growing.

use serde::Serialize;

use crate::ci::CiTriple;
use crate::error::{Error, Result};
use crate::gorenstein::{regor_nonempty, DegreeSequence};
use crate::hilbert::HilbertFunction;

/// A complete intersection together with an embedded Gorenstein ideal and
/// everything the residual determines: the three Hilbert functions, the
/// crossing degree `tau`, and the shift `e_1 = theta_Z - theta_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedPair {
    alpha: CiTriple,
    delta: DegreeSequence,
    h_z: HilbertFunction,
    h_g: HilbertFunction,
    h_q: HilbertFunction,
    tau: i64,
}

impl LinkedPair {
    pub fn alpha(&self) -> &CiTriple {
        &self.alpha
    }

    pub fn delta(&self) -> &DegreeSequence {
        &self.delta
    }

    pub fn h_z(&self) -> &HilbertFunction {
        &self.h_z
    }

    pub fn h_g(&self) -> &HilbertFunction {
        &self.h_g
    }

    /// Hilbert function of the residual.
    pub fn h_q(&self) -> &HilbertFunction {
        &self.h_q
    }

    pub fn theta_z(&self) -> i64 {
        self.alpha.theta()
    }

    pub fn theta_g(&self) -> i64 {
        self.delta.theta()
    }

    /// First degree where the first difference of `G` exceeds that of `Z`.
    pub fn tau(&self) -> i64 {
        self.tau
    }

    /// Degree shift `theta_Z - theta_G`, the degree of the extra generator
    /// the residual acquires.
    pub fn e1(&self) -> i64 {
        self.theta_z() - self.theta_g()
    }

    /// The four generator degrees of the residual, sorted, with the
    /// normalization flag: the Gorenstein side must have empty `B`, be
    /// reduced, and the shift must not exceed the smallest degree of `Z`.
    pub fn aci_degrees(&self) -> AciDegrees {
        let [a1, a2, a3] = self.alpha.degrees();
        let mut degrees = [self.e1(), a1, a2, a3];
        degrees.sort_unstable();
        let data = self.delta.mci_data();
        AciDegrees {
            degrees,
            normalized: data.b_set.is_empty() && data.reduced && self.e1() <= a1,
        }
    }
}

/// Generator degrees of an almost complete intersection obtained by
/// linkage, sorted nondecreasingly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AciDegrees {
    pub degrees: [i64; 4],
    pub normalized: bool,
}

/// Links the Gorenstein ideal presented by `delta` inside a complete
/// intersection with degrees `alpha`.
///
/// Fails when no embedding exists (`alpha` must dominate the minimal
/// triple), when `theta_Z = theta_G` (self-link, empty residual), or — as an
/// internal consistency guard — when the reflected difference would go
/// negative somewhere.
pub fn link(alpha: &CiTriple, delta: &DegreeSequence) -> Result<LinkedPair> {
    if !regor_nonempty(alpha, delta) {
        return Err(Error::RegorEmpty {
            alpha: alpha.degrees(),
            mci: delta.mci_data().mci.degrees(),
        });
    }
    if alpha.theta() == delta.theta() {
        return Err(Error::TrivialLink);
    }
    let h_z = alpha.hilbert_function();
    let h_g = delta.hilbert_function();
    // Containment forces H_Z >= H_G pointwise; a violation means the input
    // never came from an actual embedding.
    let top_support = h_z.last_degree().max(h_g.last_degree());
    for t in 0..=top_support {
        if h_z.get(t) < h_g.get(t) {
            return Err(Error::NegativeValue(t));
        }
    }
    let top = alpha.theta() - 3;
    let h_q = HilbertFunction::new(
        (0..=top)
            .map(|i| h_z.get(top - i) - h_g.get(top - i))
            .collect::<Vec<_>>(),
    )
    .expect("the reflected difference of dominated socle data starts at 1");
    let dz = h_z.first_difference();
    let dg = h_g.first_difference();
    let tau = (0..=alpha.theta() - 2)
        .find(|&n| dg.get(n) > dz.get(n))
        .expect("the difference of Z ends at -1 while the difference of G is already 0");
    Ok(LinkedPair {
        alpha: *alpha,
        delta: delta.clone(),
        h_z,
        h_g,
        h_q,
        tau,
    })
}

/// Crossing degree alone; see [`link`].
pub fn tau(alpha: &CiTriple, delta: &DegreeSequence) -> Result<i64> {
    link(alpha, delta).map(|lp| lp.tau())
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

    #[test]
    fn residual_of_quadric_socle() {
        let lp = link(&ci(2, 2, 3), &ds(&[2, 2, 2])).unwrap();
        assert_eq!(lp.h_z().values(), &[1, 3, 4, 3, 1]);
        assert_eq!(lp.h_g().values(), &[1, 3, 3, 1]);
        assert_eq!(lp.h_q().values(), &[1, 2, 1]);
        assert_eq!(lp.tau(), 4);
        assert_eq!(lp.e1(), 1);
        let aci = lp.aci_degrees();
        assert_eq!(aci.degrees, [1, 2, 2, 3]);
        assert!(aci.normalized);
    }

    #[test]
    fn residual_inside_cubic_complete_intersection() {
        let lp = link(&ci(3, 3, 4), &ds(&[3, 3, 4, 4, 4])).unwrap();
        assert_eq!(lp.h_z().values(), &[1, 3, 6, 8, 8, 6, 3, 1]);
        assert_eq!(lp.h_g().values(), &[1, 3, 6, 8, 6, 3, 1]);
        assert_eq!(lp.h_q().values(), &[1, 2, 3, 2]);
        assert_eq!(lp.tau(), 6);
        assert_eq!(lp.e1(), 1);
        let aci = lp.aci_degrees();
        assert_eq!(aci.degrees, [1, 3, 3, 4]);
        assert!(aci.normalized);
    }

    #[test]
    fn residual_with_unbalanced_triple() {
        let lp = link(&ci(2, 3, 3), &ds(&[2, 2, 2])).unwrap();
        assert_eq!(lp.h_z().values(), &[1, 3, 5, 5, 3, 1]);
        assert_eq!(lp.h_q().values(), &[1, 3, 4, 2]);
        assert_eq!(lp.tau(), 4);
        assert_eq!(lp.e1(), 2);
        let aci = lp.aci_degrees();
        assert_eq!(aci.degrees, [2, 2, 3, 3]);
        assert!(aci.normalized);
    }

    #[test]
    fn self_link_is_rejected() {
        assert_eq!(
            link(&ci(2, 2, 2), &ds(&[2, 2, 2])),
            Err(Error::TrivialLink)
        );
    }

    #[test]
    fn missing_embedding_is_rejected() {
        assert_eq!(
            link(&ci(2, 2, 2), &ds(&[2, 2, 2, 3, 3])),
            Err(Error::RegorEmpty {
                alpha: [2, 2, 2],
                mci: [2, 2, 3]
            })
        );
    }

    #[test]
    fn reflection_identity_for_differences() {
        let lp = link(&ci(3, 3, 4), &ds(&[2, 2, 2, 3, 3])).unwrap();
        let dq = lp.h_q().first_difference();
        let dg = lp.h_g().first_difference();
        let dz = lp.h_z().first_difference();
        let t = lp.theta_z();
        for i in 0..=t - 2 {
            assert_eq!(dq.get(i), dg.get(t - 2 - i) - dz.get(t - 2 - i), "at {i}");
        }
    }

    #[test]
    fn standalone_tau_matches_link() {
        let alpha = ci(2, 3, 3);
        let delta = ds(&[2, 2, 2]);
        assert_eq!(tau(&alpha, &delta).unwrap(), 4);
        assert_eq!(
            tau(&alpha, &delta).unwrap(),
            link(&alpha, &delta).unwrap().tau()
        );
    }
}
