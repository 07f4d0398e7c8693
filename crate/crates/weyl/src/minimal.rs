//! Minimal length in a sigma-conjugacy class: staged criteria followed by a
//! bounded search over non-length-increasing conjugations by simple
//! reflections. The search is exact because a non-minimal element can
//! always be brought below its length by such a sequence.

use num_rational::Rational64;
use std::collections::{HashSet, VecDeque};

use crate::cartan::CartanDatum;
use crate::element::AffineWeylElem;
use crate::sigma::{is_sigma_straight, newton_point, sigma_conjugate, FrobeniusAction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityVerdict {
    /// sigma-straight elements are minimal.
    MinimalByStraight,
    /// `len(w) <= 2 <nu_w, rho> + 1` forces minimality.
    MinimalByBound,
    /// Exhaustive conjugation search found nothing shorter.
    MinimalBySearch,
    /// A strictly shorter sigma-conjugate, reachable by non-increasing
    /// steps; the witness is that shorter element.
    NotMinimal { witness: AffineWeylElem },
    /// Search caps hit before resolution.
    Unknown,
}

impl MinimalityVerdict {
    pub fn is_minimal(&self) -> bool {
        matches!(
            self,
            MinimalityVerdict::MinimalByStraight
                | MinimalityVerdict::MinimalByBound
                | MinimalityVerdict::MinimalBySearch
        )
    }

    pub fn label(&self) -> &'static str {
        match self {
            MinimalityVerdict::MinimalByStraight => "minimal-straight",
            MinimalityVerdict::MinimalByBound => "minimal-bound",
            MinimalityVerdict::MinimalBySearch => "minimal-search",
            MinimalityVerdict::NotMinimal { .. } => "not-minimal",
            MinimalityVerdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    pub max_visited: usize,
    /// Bound on the conjugator word length (search depth).
    pub max_depth: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_visited: 200_000, max_depth: 24 }
    }
}

pub fn minimal_length_test(
    datum: &CartanDatum,
    w: &AffineWeylElem,
    sigma: FrobeniusAction,
    limits: SearchLimits,
) -> MinimalityVerdict {
    if let Ok(true) = is_sigma_straight(datum, w, sigma) {
        return MinimalityVerdict::MinimalByStraight;
    }
    if let Ok(nu) = newton_point(datum, w, sigma) {
        // len <= 2 <nu, rho> + 1, i.e. len <= <nu, 2 rho> + 1.
        let bound = nu.pairing(datum.two_rho()) + Rational64::from(1);
        if Rational64::from(datum.length(w) as i64) <= bound {
            return MinimalityVerdict::MinimalByBound;
        }
    }
    search_shorter(datum, w, sigma, limits)
}

/// Breadth-first search over sigma-conjugations by simple reflections that
/// never increase length (cyclic-shift moves).
fn search_shorter(
    datum: &CartanDatum,
    w: &AffineWeylElem,
    sigma: FrobeniusAction,
    limits: SearchLimits,
) -> MinimalityVerdict {
    let start_len = datum.length(w);
    let mut seen: HashSet<AffineWeylElem> = HashSet::new();
    let mut queue: VecDeque<(AffineWeylElem, usize)> = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back((w.clone(), 0));
    let mut truncated = false;
    while let Some((cur, depth)) = queue.pop_front() {
        if depth >= limits.max_depth {
            truncated = true;
            continue;
        }
        for i in 0..datum.num_simples() {
            let next = sigma_conjugate(datum, datum.simple(i), &cur, sigma);
            let next_len = datum.length(&next);
            if next_len < start_len {
                return MinimalityVerdict::NotMinimal { witness: next };
            }
            if next_len == start_len && !seen.contains(&next) {
                if seen.len() >= limits.max_visited {
                    truncated = true;
                    continue;
                }
                seen.insert(next.clone());
                queue.push_back((next, depth + 1));
            }
        }
    }
    if truncated {
        MinimalityVerdict::Unknown
    } else {
        MinimalityVerdict::MinimalBySearch
    }
}

/// Exhaustive variant used by the verification suites: no depth cap, only
/// a visited-state cap.
pub fn exhaustive_minimal_check(
    datum: &CartanDatum,
    w: &AffineWeylElem,
    sigma: FrobeniusAction,
    max_visited: usize,
) -> MinimalityVerdict {
    search_shorter(
        datum,
        w,
        sigma,
        SearchLimits { max_visited, max_depth: usize::MAX },
    )
}
