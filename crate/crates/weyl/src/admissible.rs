//! Admissible sets: elements Bruhat-below a finite-Weyl conjugate of the
//! translation by a minuscule coweight, retained as minimal-length
//! representatives of their left cosets.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::bruhat::BruhatContext;
use crate::cartan::CartanDatum;
use crate::element::AffineWeylElem;
use crate::words::{is_left_descent, reduced_word};

/// All group elements of length at most `max_len` in the full extended
/// group (both length-zero components), by breadth-first closure.
pub fn elements_up_to_length(datum: &Arc<CartanDatum>, max_len: u64) -> Vec<AffineWeylElem> {
    let mut seen: HashSet<AffineWeylElem> = HashSet::new();
    let mut frontier = vec![datum.identity(), datum.omega_nontrivial().clone()];
    for e in &frontier {
        seen.insert(e.clone());
    }
    let mut all = frontier.clone();
    let mut len = 0;
    while len < max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..datum.num_simples() {
                let cand = w.mul(datum.simple(i));
                if datum.length(&cand) == len + 1 && seen.insert(cand.clone()) {
                    next.push(cand);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
        len += 1;
    }
    all
}

/// The orbit `{x(mu)}` of a coweight under the finite Weyl group: all
/// signed permutations of the coordinates, deduplicated.
pub fn coweight_orbit(datum: &CartanDatum, mu: &[i64]) -> Vec<Vec<i64>> {
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    for w in datum.finite_elements() {
        out.insert(w.apply(mu).to_vec());
    }
    out.into_iter().collect()
}

/// `Adm(mu)`: everything Bruhat-below some `t^{x(mu)}`.
pub fn admissible_set(ctx: &mut BruhatContext, mu: &[i64]) -> Vec<AffineWeylElem> {
    let datum = ctx.datum().clone();
    let translations: Vec<AffineWeylElem> = coweight_orbit(&datum, mu)
        .into_iter()
        .map(|v| datum.translation(&v))
        .collect();
    let max_len = translations.iter().map(|t| datum.length(t)).max().unwrap_or(0);
    let mut out = Vec::new();
    for w in elements_up_to_length(&datum, max_len) {
        if translations.iter().any(|t| ctx.leq(&w, t)) {
            out.push(w);
        }
    }
    sort_canonical(&datum, &mut out);
    out
}

/// Minimal-length representative of the left coset `W_J w`.
pub fn min_coset_rep(datum: &CartanDatum, j: &BTreeSet<usize>, w: &AffineWeylElem) -> AffineWeylElem {
    let mut cur = w.clone();
    'outer: loop {
        for &i in j {
            if is_left_descent(datum, &cur, i) {
                cur = datum.simple(i).mul(&cur);
                continue 'outer;
            }
        }
        return cur;
    }
}

/// `Adm(mu)^J`: minimal-length representatives in `{}^J W` of the
/// admissible elements, as a canonical sorted list.
pub fn admissible_set_j(
    ctx: &mut BruhatContext,
    mu: &[i64],
    j: &BTreeSet<usize>,
) -> Vec<AffineWeylElem> {
    let datum = ctx.datum().clone();
    let mut reps: HashSet<AffineWeylElem> = HashSet::new();
    for w in admissible_set(ctx, mu) {
        reps.insert(min_coset_rep(&datum, j, &w));
    }
    let mut out: Vec<AffineWeylElem> = reps.into_iter().collect();
    sort_canonical(&datum, &mut out);
    out
}

/// Deterministic order: by length, then lexicographically by canonical word.
pub fn sort_canonical(datum: &CartanDatum, elems: &mut [AffineWeylElem]) {
    elems.sort_by_key(|w| (datum.length(w), reduced_word(datum, w), w.omega_class()));
}
