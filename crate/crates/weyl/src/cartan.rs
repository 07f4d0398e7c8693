//! The group datum: affine type-B root data on the coweight lattice `Z^m`,
//! simple reflections, the Coxeter matrix self-check, and the length-zero
//! element generating the fundamental group.

use num_rational::Rational64;
use smallvec::SmallVec;
use std::sync::Arc;
use thiserror::Error;

use crate::element::AffineWeylElem;
use crate::finite::SignedPerm;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DatumError {
    #[error("rank must be at least 2, got {0}")]
    BadRank(usize),
    #[error("Coxeter matrix self-check failed at ({i}, {j}): expected order {expected}, found {found}")]
    CoxeterMismatch { i: usize, j: usize, expected: usize, found: usize },
    #[error("no length-zero element of the form t^omega1 * w exists")]
    MissingOmegaElement,
}

/// A root as an integer vector of coordinates in the `e_i` basis.
pub type Root = SmallVec<[i64; 4]>;

/// Affine Weyl datum of type B tilde with the four-node fork diagram for
/// rank 3 (bonds 0-2, 1-2 of order 3 and a bond of order 4 at the short
/// end). Elements are pairs `t^lambda * w` with `lambda` in `Z^m` and `w`
/// a signed permutation.
#[derive(Debug)]
pub struct CartanDatum {
    rank: usize,
    positive_roots: Vec<Root>,
    /// Simple reflections s_0 ... s_m as affine elements.
    simples: Vec<AffineWeylElem>,
    /// The nontrivial length-zero element; its adjoint action swaps
    /// s_0 and s_1 on the diagram.
    omega: AffineWeylElem,
    two_rho: Vec<i64>,
}

impl CartanDatum {
    /// Build the rank-m affine type-B datum and self-check the Coxeter
    /// matrix of the simple reflections against the diagram.
    pub fn affine_b(rank: usize) -> Result<Arc<Self>, DatumError> {
        if rank < 2 {
            return Err(DatumError::BadRank(rank));
        }
        let mut positive_roots: Vec<Root> = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                let mut r: Root = smallvec::smallvec![0; rank];
                r[i] = 1;
                r[j] = -1;
                positive_roots.push(r.clone());
                r[j] = 1;
                positive_roots.push(r);
            }
        }
        for i in 0..rank {
            let mut r: Root = smallvec::smallvec![0; rank];
            r[i] = 1;
            positive_roots.push(r);
        }
        // 2*rho: coordinate sums of all positive roots: (2m-1, 2m-3, ..., 1).
        let two_rho: Vec<i64> = (0..rank).map(|i| (2 * (rank - i) - 1) as i64).collect();

        // s_0 = t^{theta_vee} s_theta with theta = e_1 + e_2.
        let theta_vee: Vec<i64> = {
            let mut v = vec![0i64; rank];
            v[0] = 1;
            v[1] = 1;
            v
        };
        let mut simples = Vec::with_capacity(rank + 1);
        simples.push(AffineWeylElem::raw(theta_vee.clone(), SignedPerm::neg_swap(rank, 0, 1)));
        for i in 0..rank - 1 {
            simples.push(AffineWeylElem::raw(vec![0; rank], SignedPerm::swap(rank, i)));
        }
        simples.push(AffineWeylElem::raw(vec![0; rank], SignedPerm::flip(rank, rank - 1)));

        let mut datum = CartanDatum {
            rank,
            positive_roots,
            simples,
            omega: AffineWeylElem::raw(vec![0; rank], SignedPerm::identity(rank)),
            two_rho,
        };
        datum.self_check()?;
        datum.omega = datum.find_omega()?;
        Ok(Arc::new(datum))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple reflections (rank + 1 in affine type).
    pub fn num_simples(&self) -> usize {
        self.simples.len()
    }

    pub fn simple(&self, i: usize) -> &AffineWeylElem {
        &self.simples[i]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// `rho` as exact rationals.
    pub fn rho(&self) -> Vec<Rational64> {
        self.two_rho.iter().map(|&v| Rational64::new(v, 2)).collect()
    }

    pub fn identity(&self) -> AffineWeylElem {
        AffineWeylElem::raw(vec![0; self.rank], SignedPerm::identity(self.rank))
    }

    pub fn translation(&self, lambda: &[i64]) -> AffineWeylElem {
        AffineWeylElem::raw(lambda.to_vec(), SignedPerm::identity(self.rank))
    }

    /// The nontrivial element of the fundamental group.
    pub fn omega_nontrivial(&self) -> &AffineWeylElem {
        &self.omega
    }

    /// Fundamental coweight `omega_i` (1-based): (1,...,1,0,...,0) with i
    /// ones, except the last which would be half-integral in type B; only
    /// the integral ones are exposed.
    pub fn fundamental_coweight(&self, i: usize) -> Vec<i64> {
        assert!(i >= 1 && i <= self.rank);
        (0..self.rank).map(|k| if k < i { 1 } else { 0 }).collect()
    }

    /// Expected Coxeter matrix entry for the fork diagram.
    pub fn coxeter_order(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        let (a, b) = (i.min(j), i.max(j));
        let m = self.rank;
        // Nodes 0 and 1 both bond to node 2; the chain 2-3-...-m ends in a
        // double bond.
        if m == 2 {
            // Fork degenerates: 0-2 and 1-2 carry the order-4 bonds.
            return if b == 2 { 4 } else { 2 };
        }
        match (a, b) {
            (0, 2) | (1, 2) => 3,
            _ if a >= 2 && b == a + 1 && b < m => 3,
            _ if a == m - 1 && b == m => 4,
            _ => 2,
        }
    }

    fn self_check(&self) -> Result<(), DatumError> {
        for i in 0..self.num_simples() {
            for j in 0..self.num_simples() {
                let expected = self.coxeter_order(i, j);
                let prod = self.simples[i].mul(&self.simples[j]);
                let mut acc = prod.clone();
                let mut order = 1;
                while !acc.is_identity() && order <= 8 {
                    acc = acc.mul(&prod);
                    order += 1;
                }
                if order != expected {
                    return Err(DatumError::CoxeterMismatch { i, j, expected, found: order });
                }
            }
        }
        Ok(())
    }

    /// Locate the unique `w` in the finite Weyl group with
    /// `len(t^{omega_1} w) = 0`.
    fn find_omega(&self) -> Result<AffineWeylElem, DatumError> {
        let omega1 = self.fundamental_coweight(1);
        for w in self.finite_elements() {
            let candidate = AffineWeylElem::raw(omega1.clone(), w);
            if self.length(&candidate) == 0 && !candidate.is_identity() {
                return Ok(candidate);
            }
        }
        Err(DatumError::MissingOmegaElement)
    }

    /// All elements of the finite Weyl group (signed permutations).
    pub fn finite_elements(&self) -> Vec<SignedPerm> {
        let mut perms = vec![vec![]];
        for _ in 0..self.rank {
            let mut next = Vec::new();
            for p in &perms {
                for v in 1..=self.rank as i8 {
                    if p.iter().any(|&x: &i8| x.abs() == v) {
                        continue;
                    }
                    for sign in [1i8, -1] {
                        let mut q = p.clone();
                        q.push(sign * v);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        perms.into_iter().map(|img| SignedPerm::from_images(&img)).collect()
    }

    /// Iwahori-Matsumoto length of `t^lambda w`.
    pub fn length(&self, elem: &AffineWeylElem) -> u64 {
        let lambda = elem.translation();
        let w_inv = elem.finite().inverse();
        let mut total = 0i64;
        for alpha in &self.positive_roots {
            let pairing: i64 =
                alpha.iter().zip(lambda.iter()).map(|(a, l)| a * l).sum();
            let image = apply_to_root(&w_inv, alpha);
            let positive = root_is_positive(&image);
            let contribution = if positive { pairing.abs() } else { (pairing - 1).abs() };
            total += contribution;
        }
        total as u64
    }
}

/// Apply a signed permutation to a root vector.
pub fn apply_to_root(w: &SignedPerm, alpha: &Root) -> Root {
    let mut out: Root = smallvec::smallvec![0; alpha.len()];
    for (k, &a) in alpha.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let (idx, sign) = w.image_of(k);
        out[idx] += sign * a;
    }
    out
}

/// A nonzero vector in the root lattice is a positive root iff its first
/// nonzero coordinate is positive (true for types B/C/D in this basis).
pub fn root_is_positive(alpha: &Root) -> bool {
    for &a in alpha {
        if a > 0 {
            return true;
        }
        if a < 0 {
            return false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b3_datum_passes_self_check() {
        let datum = CartanDatum::affine_b(3).unwrap();
        assert_eq!(datum.num_simples(), 4);
        assert_eq!(datum.two_rho(), &[5, 3, 1]);
        // rho = (5/2, 3/2, 1/2)
        let rho = datum.rho();
        assert_eq!(rho[0], Rational64::new(5, 2));
        assert_eq!(rho[1], Rational64::new(3, 2));
        assert_eq!(rho[2], Rational64::new(1, 2));
    }

    #[test]
    fn coxeter_orders_match_diagram() {
        let datum = CartanDatum::affine_b(3).unwrap();
        assert_eq!(datum.coxeter_order(0, 1), 2);
        assert_eq!(datum.coxeter_order(0, 2), 3);
        assert_eq!(datum.coxeter_order(1, 2), 3);
        assert_eq!(datum.coxeter_order(2, 3), 4);
        assert_eq!(datum.coxeter_order(0, 3), 2);
        assert_eq!(datum.coxeter_order(1, 3), 2);
    }

    #[test]
    fn omega_is_an_involution_swapping_nodes() {
        let datum = CartanDatum::affine_b(3).unwrap();
        let tau = datum.omega_nontrivial();
        assert_eq!(datum.length(tau), 0);
        assert!(tau.mul(tau).is_identity());
        // Ad(tau) swaps s_0 and s_1 and fixes s_2, s_3.
        let conj = |s: &AffineWeylElem| tau.mul(s).mul(&tau.inverse());
        assert_eq!(conj(datum.simple(0)), *datum.simple(1));
        assert_eq!(conj(datum.simple(1)), *datum.simple(0));
        assert_eq!(conj(datum.simple(2)), *datum.simple(2));
        assert_eq!(conj(datum.simple(3)), *datum.simple(3));
    }

    #[test]
    fn dominant_translation_length() {
        let datum = CartanDatum::affine_b(3).unwrap();
        // len(t^{(1,1,0)}) = <(1,1,0), 2 rho> = 5 + 3 = 8.
        let t = datum.translation(&[1, 1, 0]);
        assert_eq!(datum.length(&t), 8);
        assert_eq!(datum.length(&datum.identity()), 0);
        for i in 0..4 {
            assert_eq!(datum.length(datum.simple(i)), 1, "simple {i}");
        }
    }

    #[test]
    fn finite_group_has_full_order() {
        let datum = CartanDatum::affine_b(3).unwrap();
        let elems = datum.finite_elements();
        assert_eq!(elems.len(), 48);
    }
}
