//! Signed permutations: the finite Weyl group of types B and C acting on
//! the coweight space by coordinate permutations and sign flips.

use smallvec::SmallVec;
use std::fmt;

/// Image description: `img[k] = ±(j+1)` means `e_{k+1} -> ±e_{j+1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    img: SmallVec<[i8; 4]>,
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.img.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl SignedPerm {
    pub fn identity(rank: usize) -> Self {
        SignedPerm { img: (1..=rank as i8).collect() }
    }

    pub fn rank(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(k, &v)| v == k as i8 + 1)
    }

    /// Swap of coordinates `i` and `i+1` (0-based).
    pub fn swap(rank: usize, i: usize) -> Self {
        let mut p = SignedPerm::identity(rank);
        p.img.swap(i, i + 1);
        p
    }

    /// Sign flip on coordinate `i` (0-based).
    pub fn flip(rank: usize, i: usize) -> Self {
        let mut p = SignedPerm::identity(rank);
        p.img[i] = -p.img[i];
        p
    }

    /// Reflection in `e_i + e_j` (i != j, 0-based): swaps the coordinates
    /// and negates both.
    pub fn neg_swap(rank: usize, i: usize, j: usize) -> Self {
        let mut p = SignedPerm::identity(rank);
        p.img[i] = -(j as i8 + 1);
        p.img[j] = -(i as i8 + 1);
        p
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        debug_assert_eq!(self.rank(), other.rank());
        let img = other
            .img
            .iter()
            .map(|&v| {
                let idx = (v.abs() - 1) as usize;
                let target = self.img[idx];
                if v < 0 {
                    -target
                } else {
                    target
                }
            })
            .collect();
        SignedPerm { img }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut img = smallvec::smallvec![0i8; self.rank()];
        for (k, &v) in self.img.iter().enumerate() {
            let idx = (v.abs() - 1) as usize;
            img[idx] = if v < 0 { -(k as i8 + 1) } else { k as i8 + 1 };
        }
        SignedPerm { img }
    }

    /// Build from raw images `img[k] = ±(j+1)`; panics on non-bijections.
    pub fn from_images(img: &[i8]) -> Self {
        let mut seen = vec![false; img.len()];
        for &v in img {
            let idx = (v.abs() - 1) as usize;
            assert!(v != 0 && idx < img.len() && !seen[idx], "not a signed permutation");
            seen[idx] = true;
        }
        SignedPerm { img: SmallVec::from_slice(img) }
    }

    /// Raw image entry `±(j+1)` for basis vector `e_{k+1}`.
    pub fn image_raw(&self, k: usize) -> i8 {
        self.img[k]
    }

    /// Image of basis vector `e_k` (0-based) as `(index, sign)`.
    pub fn image_of(&self, k: usize) -> (usize, i64) {
        let v = self.img[k];
        ((v.abs() - 1) as usize, if v < 0 { -1 } else { 1 })
    }

    /// Apply to an integer vector.
    pub fn apply(&self, v: &[i64]) -> SmallVec<[i64; 4]> {
        let mut out: SmallVec<[i64; 4]> = smallvec::smallvec![0; self.rank()];
        for (k, &x) in v.iter().enumerate() {
            let (idx, sign) = self.image_of(k);
            out[idx] = sign * x;
        }
        out
    }

    /// Number of sign flips; even iff the element lies in type D.
    pub fn flip_count(&self) -> usize {
        self.img.iter().filter(|&&v| v < 0).count()
    }
}
