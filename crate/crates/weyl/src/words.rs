//! Reduced words via affine-root descent stripping.

use crate::cartan::{apply_to_root, root_is_positive, CartanDatum, Root};
use crate::element::AffineWeylElem;

/// An affine root `alpha + k delta` as a pair (finite part, level).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineRoot {
    pub alpha: Root,
    pub level: i64,
}

impl AffineRoot {
    pub fn simple(datum: &CartanDatum, i: usize) -> AffineRoot {
        if i == 0 {
            // a_0 = -theta + delta.
            let mut alpha: Root = smallvec::smallvec![0; datum.rank()];
            alpha[0] = -1;
            alpha[1] = -1;
            AffineRoot { alpha, level: 1 }
        } else if i < datum.rank() {
            let mut alpha: Root = smallvec::smallvec![0; datum.rank()];
            alpha[i - 1] = 1;
            alpha[i] = -1;
            AffineRoot { alpha, level: 0 }
        } else {
            let mut alpha: Root = smallvec::smallvec![0; datum.rank()];
            alpha[datum.rank() - 1] = 1;
            AffineRoot { alpha, level: 0 }
        }
    }

    /// `alpha + k delta` is negative iff `k < 0`, or `k = 0` and `alpha < 0`.
    pub fn is_negative(&self) -> bool {
        match self.level.cmp(&0) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => !root_is_positive(&self.alpha),
        }
    }
}

/// Action of `t^lambda u` on an affine root: `(alpha, k) -> (u alpha,
/// k - <u alpha, lambda>)`.
pub fn act_on_affine_root(elem: &AffineWeylElem, root: &AffineRoot) -> AffineRoot {
    let alpha = apply_to_root(elem.finite(), &root.alpha);
    let pairing: i64 = alpha.iter().zip(elem.translation()).map(|(a, l)| a * l).sum();
    AffineRoot { alpha, level: root.level - pairing }
}

/// Left descent: `len(s_i w) < len(w)` iff `w^{-1}(a_i) < 0`.
pub fn is_left_descent(datum: &CartanDatum, w: &AffineWeylElem, i: usize) -> bool {
    let a_i = AffineRoot::simple(datum, i);
    act_on_affine_root(&w.inverse(), &a_i).is_negative()
}

/// Right descent: `len(w s_i) < len(w)` iff `w(a_i) < 0`.
pub fn is_right_descent(datum: &CartanDatum, w: &AffineWeylElem, i: usize) -> bool {
    let a_i = AffineRoot::simple(datum, i);
    act_on_affine_root(w, &a_i).is_negative()
}

/// Deterministic reduced word for the affine part of `w`: repeatedly strip
/// the least descent index. The product of the returned letters times the
/// residual length-zero element recovers `w`.
pub fn reduced_word(datum: &CartanDatum, w: &AffineWeylElem) -> Vec<usize> {
    let mut word = Vec::new();
    let mut cur = w.clone();
    'outer: loop {
        for i in 0..datum.num_simples() {
            if is_left_descent(datum, &cur, i) {
                word.push(i);
                cur = datum.simple(i).mul(&cur);
                continue 'outer;
            }
        }
        debug_assert_eq!(datum.length(&cur), 0, "residual must be length zero");
        return word;
    }
}

/// The length-zero component left after stripping the affine part.
pub fn omega_part(datum: &CartanDatum, w: &AffineWeylElem) -> AffineWeylElem {
    let mut cur = w.clone();
    'outer: loop {
        for i in 0..datum.num_simples() {
            if is_left_descent(datum, &cur, i) {
                cur = datum.simple(i).mul(&cur);
                continue 'outer;
            }
        }
        return cur;
    }
}

pub fn from_word(datum: &CartanDatum, word: &[usize]) -> AffineWeylElem {
    let mut acc = datum.identity();
    for &i in word {
        acc = acc.mul(datum.simple(i));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;

    #[test]
    fn word_round_trip() {
        let datum = CartanDatum::affine_b(3).unwrap();
        let w = from_word(&datum, &[3, 2, 1, 0]);
        assert_eq!(datum.length(&w), 4);
        let word = reduced_word(&datum, &w);
        assert_eq!(word.len(), 4);
        assert_eq!(from_word(&datum, &word), w);
        assert!(reduced_word(&datum, &datum.identity()).is_empty());
    }

    #[test]
    fn translation_word_length_matches_pairing() {
        let datum = CartanDatum::affine_b(3).unwrap();
        let t = datum.translation(&[1, 1, 0]);
        let word = reduced_word(&datum, &t);
        assert_eq!(word.len(), 8);
        assert_eq!(from_word(&datum, &word), t);
    }

    #[test]
    fn descents_match_length_changes() {
        let datum = CartanDatum::affine_b(3).unwrap();
        let probes = [
            from_word(&datum, &[3, 2, 3, 1, 0]),
            from_word(&datum, &[0, 2, 1]),
            datum.translation(&[1, 1, 0]),
            datum.omega_nontrivial().clone(),
        ];
        for w in &probes {
            let lw = datum.length(w);
            for i in 0..4 {
                let left = datum.length(&datum.simple(i).mul(w));
                assert_eq!(is_left_descent(&datum, w, i), left < lw);
                let right = datum.length(&w.mul(datum.simple(i)));
                assert_eq!(is_right_descent(&datum, w, i), right < lw);
            }
        }
    }

    #[test]
    fn omega_part_of_translation() {
        let datum = CartanDatum::affine_b(3).unwrap();
        // t^{(1,0,0)} lies in the nontrivial coset; stripping descents
        // leaves the length-zero generator.
        let t = datum.translation(&[1, 0, 0]);
        let tau = omega_part(&datum, &t);
        assert_eq!(datum.length(&tau), 0);
        assert_eq!(tau, *datum.omega_nontrivial());
    }
}
