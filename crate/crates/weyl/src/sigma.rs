//! Frobenius actions, Newton points, Kottwitz classes, straightness and
//! sigma-support.

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

use crate::cartan::CartanDatum;
use crate::element::AffineWeylElem;
use crate::words::{omega_part, reduced_word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrobeniusAction {
    /// Trivial action on the extended affine Weyl group.
    Split,
    /// Conjugation by the nontrivial length-zero element: swaps the two
    /// fork nodes of the diagram.
    NonSplit,
}

impl FrobeniusAction {
    pub fn apply(&self, datum: &CartanDatum, w: &AffineWeylElem) -> AffineWeylElem {
        match self {
            FrobeniusAction::Split => w.clone(),
            FrobeniusAction::NonSplit => {
                let tau = datum.omega_nontrivial();
                tau.mul(w).mul(&tau.inverse())
            }
        }
    }

    /// Induced permutation of the simple-reflection indices.
    pub fn apply_index(&self, index: usize) -> usize {
        match self {
            FrobeniusAction::Split => index,
            FrobeniusAction::NonSplit => match index {
                0 => 1,
                1 => 0,
                other => other,
            },
        }
    }

    /// Orbits of simple-reflection indices under the diagram action.
    pub fn orbits(&self, datum: &CartanDatum) -> Vec<BTreeSet<usize>> {
        let mut out = Vec::new();
        let mut seen = vec![false; datum.num_simples()];
        for i in 0..datum.num_simples() {
            if seen[i] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            let mut cur = i;
            loop {
                if !orbit.insert(cur) {
                    break;
                }
                seen[cur] = true;
                cur = self.apply_index(cur);
            }
            out.push(orbit);
        }
        out
    }
}

/// sigma-conjugation `g w sigma(g)^{-1}`.
pub fn sigma_conjugate(
    datum: &CartanDatum,
    g: &AffineWeylElem,
    w: &AffineWeylElem,
    sigma: FrobeniusAction,
) -> AffineWeylElem {
    g.mul(w).mul(&sigma.apply(datum, g).inverse())
}

/// Dominant rational coweight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NewtonPoint(pub Vec<Rational64>);

impl NewtonPoint {
    pub fn pairing(&self, weights: &[i64]) -> Rational64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(v, &w)| *v * Rational64::from(w))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|v| v.is_zero())
    }
}

impl std::fmt::Display for NewtonPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if v.is_integer() {
                write!(f, "{}", v.numer())?;
            } else {
                write!(f, "{}/{}", v.numer(), v.denom())?;
            }
        }
        write!(f, ")")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NewtonError {
    #[error("twisted powers did not reach a translation within {0} steps")]
    IterationBound(usize),
}

/// Newton point: iterate `w sigma(w) sigma^2(w) ...` until the finite part
/// is trivial, divide the translation by the number of factors, and move
/// to the dominant chamber.
pub fn newton_point(
    datum: &CartanDatum,
    w: &AffineWeylElem,
    sigma: FrobeniusAction,
) -> Result<NewtonPoint, NewtonError> {
    let bound = 2 * 48usize.pow((datum.rank() as u32).saturating_sub(2));
    let bound = bound.max(2 * 48);
    let mut acc = w.clone();
    let mut twisted = w.clone();
    let mut n = 1usize;
    while !acc.finite().is_identity() {
        if n > bound {
            return Err(NewtonError::IterationBound(bound));
        }
        twisted = sigma.apply(datum, &twisted);
        acc = acc.mul(&twisted);
        n += 1;
    }
    // A valid exponent must also trivialize the twist: for the nontrivial
    // action at odd n the power equals `t^mu sigma`, so square once more.
    if matches!(sigma, FrobeniusAction::NonSplit) && n % 2 == 1 {
        let acc_twisted = sigma.apply(datum, &acc);
        acc = acc.mul(&acc_twisted);
        n *= 2;
    }
    let mut coords: Vec<Rational64> = acc
        .translation()
        .iter()
        .map(|&v| Rational64::new(v.abs(), n as i64))
        .collect();
    // Dominant chamber for type B: coordinates sorted descending, all
    // nonnegative (the Weyl group acts by signed permutations).
    coords.sort_by(|a, b| b.cmp(a));
    Ok(NewtonPoint(coords))
}

/// Kottwitz invariant: the component in the length-zero subgroup.
pub fn kottwitz(w: &AffineWeylElem) -> u8 {
    w.omega_class()
}

/// sigma-straight: length equals the pairing of the Newton point with
/// twice rho.
pub fn is_sigma_straight(
    datum: &CartanDatum,
    w: &AffineWeylElem,
    sigma: FrobeniusAction,
) -> Result<bool, NewtonError> {
    let nu = newton_point(datum, w, sigma)?;
    Ok(Rational64::from(datum.length(w) as i64) == nu.pairing(datum.two_rho()))
}

/// sigma-Coxeter: the reduced word uses exactly one letter from each
/// sigma-orbit of the diagram.
pub fn is_sigma_coxeter(datum: &CartanDatum, w: &AffineWeylElem, sigma: FrobeniusAction) -> bool {
    let word = reduced_word(datum, w);
    let orbits = sigma.orbits(datum);
    if word.len() != orbits.len() {
        return false;
    }
    let mut used: Vec<usize> = vec![0; orbits.len()];
    for &letter in &word {
        let pos = orbits.iter().position(|o| o.contains(&letter)).unwrap();
        used[pos] += 1;
    }
    used.iter().all(|&c| c == 1)
}

/// sigma-support: the union of diagram-orbit translates of the support of
/// the affine part, under the composition of the Frobenius with the
/// adjoint action of the element's own length-zero component.
pub fn sigma_support(
    datum: &CartanDatum,
    w: &AffineWeylElem,
    sigma: FrobeniusAction,
) -> BTreeSet<usize> {
    let tau = omega_part(datum, w);
    let affine_part = w.mul(&tau.inverse());
    let word = reduced_word(datum, &affine_part);
    let support: BTreeSet<usize> = word.into_iter().collect();
    // The element's Omega component acts on the diagram like the nontrivial
    // Frobenius when it is nontrivial.
    let tau_swaps = !tau.is_identity();
    let step = |i: usize| -> usize {
        let after_sigma = sigma.apply_index(i);
        if tau_swaps {
            match after_sigma {
                0 => 1,
                1 => 0,
                other => other,
            }
        } else {
            after_sigma
        }
    };
    let mut closed = BTreeSet::new();
    for &s in &support {
        let mut cur = s;
        loop {
            if !closed.insert(cur) {
                break;
            }
            cur = step(cur);
        }
    }
    closed
}

/// Finite sigma-support: a proper subset of the affine diagram generates a
/// finite subgroup.
pub fn is_finite_sigma_support(
    datum: &CartanDatum,
    w: &AffineWeylElem,
    sigma: FrobeniusAction,
) -> bool {
    sigma_support(datum, w, sigma).len() < datum.num_simples()
}

/// Greatest subset of `J` stable under `Ad(w) . sigma`.
pub fn stable_subset(
    datum: &CartanDatum,
    w: &AffineWeylElem,
    j: &BTreeSet<usize>,
    sigma: FrobeniusAction,
) -> BTreeSet<usize> {
    let w_inv = w.inverse();
    let image_index = |i: usize| -> Option<usize> {
        let s = datum.simple(sigma.apply_index(i));
        let conj = w.mul(s).mul(&w_inv);
        (0..datum.num_simples()).find(|&t| conj == *datum.simple(t))
    };
    let mut current: BTreeSet<usize> = j.clone();
    loop {
        let next: BTreeSet<usize> = current
            .iter()
            .copied()
            .filter(|&i| matches!(image_index(i), Some(t) if current.contains(&t)))
            .collect();
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Occurrences of the reflection `s_index` in the canonical reduced word.
pub fn count_reflection(datum: &CartanDatum, w: &AffineWeylElem, index: usize) -> usize {
    reduced_word(datum, w).iter().filter(|&&i| i == index).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::from_word;

    fn datum() -> std::sync::Arc<CartanDatum> {
        CartanDatum::affine_b(3).unwrap()
    }

    #[test]
    fn newton_point_of_identity_is_zero() {
        let d = datum();
        let nu = newton_point(&d, &d.identity(), FrobeniusAction::Split).unwrap();
        assert!(nu.is_zero());
    }

    #[test]
    fn newton_point_of_straight_translation_product() {
        let d = datum();
        // s3 s2 s1 s0 under the trivial action has Newton point (1/2, 1/2, 0).
        let w = from_word(&d, &[3, 2, 1, 0]);
        let nu = newton_point(&d, &w, FrobeniusAction::Split).unwrap();
        assert_eq!(
            nu.0,
            vec![Rational64::new(1, 2), Rational64::new(1, 2), Rational64::zero()]
        );
        assert!(is_sigma_straight(&d, &w, FrobeniusAction::Split).unwrap());
    }

    #[test]
    fn divergent_row_between_actions() {
        let d = datum();
        let w = from_word(&d, &[3, 2, 3, 1, 0, 2, 0]);
        let split = newton_point(&d, &w, FrobeniusAction::Split).unwrap();
        assert_eq!(
            split.0,
            vec![Rational64::from(1), Rational64::new(1, 2), Rational64::new(1, 2)]
        );
        let nonsplit = newton_point(&d, &w, FrobeniusAction::NonSplit).unwrap();
        assert_eq!(
            nonsplit.0,
            vec![Rational64::from(1), Rational64::zero(), Rational64::zero()]
        );
    }

    #[test]
    fn translation_newton_point_under_the_twisted_action() {
        // t^{(1,0,1)} is already a translation, but under the nontrivial
        // action the exponent must also trivialize the twist: the Newton
        // point is the average over the sigma-orbit, (1, 0, 0).
        let d = datum();
        let t = d.translation(&[1, 0, 1]);
        let nu = newton_point(&d, &t, FrobeniusAction::NonSplit).unwrap();
        assert_eq!(nu.0, vec![Rational64::from(1), Rational64::zero(), Rational64::zero()]);
        // Split action: plain dominant representative.
        let nu = newton_point(&d, &t, FrobeniusAction::Split).unwrap();
        assert_eq!(nu.0, vec![Rational64::from(1), Rational64::from(1), Rational64::zero()]);
    }

    #[test]
    fn straightness_examples() {
        let d = datum();
        assert!(is_sigma_straight(&d, &d.identity(), FrobeniusAction::Split).unwrap());
        // Length 6 with Newton point (1,0,0): not straight.
        let w = from_word(&d, &[3, 2, 3, 1, 0, 2]);
        assert_eq!(d.length(&w), 6);
        assert!(!is_sigma_straight(&d, &w, FrobeniusAction::Split).unwrap());
    }

    #[test]
    fn support_closure_under_the_nonsplit_action() {
        let d = datum();
        let w = from_word(&d, &[3, 2, 3, 1]);
        let split = sigma_support(&d, &w, FrobeniusAction::Split);
        assert_eq!(split.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        let nonsplit = sigma_support(&d, &w, FrobeniusAction::NonSplit);
        assert_eq!(nonsplit.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert!(sigma_support(&d, &d.identity(), FrobeniusAction::Split).is_empty());
        assert!(is_finite_sigma_support(&d, &w, FrobeniusAction::Split));
        assert!(!is_finite_sigma_support(&d, &w, FrobeniusAction::NonSplit));
    }

    #[test]
    fn stable_subset_examples() {
        let d = datum();
        let j: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        // Identity stabilizes all of J.
        assert_eq!(stable_subset(&d, &d.identity(), &j, FrobeniusAction::Split), j);
        // s3 keeps {0, 1}: conjugating s2 by s3 leaves the simples.
        let s3 = d.simple(3).clone();
        let i = stable_subset(&d, &s3, &j, FrobeniusAction::Split);
        assert_eq!(i.into_iter().collect::<Vec<_>>(), vec![0, 1]);
        // Any word containing s2 empties the stable subset.
        let w = from_word(&d, &[3, 2]);
        assert!(stable_subset(&d, &w, &j, FrobeniusAction::Split).is_empty());
    }

    #[test]
    fn sigma_coxeter_detection() {
        let d = datum();
        // Split: orbits {0},{1},{2},{3}; s3 s2 s1 s0 is sigma-Coxeter.
        assert!(is_sigma_coxeter(&d, &from_word(&d, &[3, 2, 1, 0]), FrobeniusAction::Split));
        assert!(!is_sigma_coxeter(&d, &from_word(&d, &[3, 2, 3, 1]), FrobeniusAction::Split));
        // NonSplit: orbits {0,1},{2},{3}; s3 s1 s2 is sigma-Coxeter.
        assert!(is_sigma_coxeter(&d, &from_word(&d, &[3, 1, 2]), FrobeniusAction::NonSplit));
        assert!(!is_sigma_coxeter(&d, &from_word(&d, &[3, 2, 1, 0]), FrobeniusAction::NonSplit));
    }

    #[test]
    fn kottwitz_is_sigma_conjugation_invariant() {
        let d = datum();
        let w = from_word(&d, &[3, 2, 1, 0, 2]);
        for sigma in [FrobeniusAction::Split, FrobeniusAction::NonSplit] {
            for i in 0..4 {
                let conj = sigma_conjugate(&d, d.simple(i), &w, sigma);
                assert_eq!(kottwitz(&conj), kottwitz(&w));
            }
            let conj = sigma_conjugate(&d, d.omega_nontrivial(), &w, sigma);
            assert_eq!(kottwitz(&conj), kottwitz(&w));
        }
    }
}
