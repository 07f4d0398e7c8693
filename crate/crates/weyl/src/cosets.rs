//! Double cosets `W_I \ W / W_I` in the finite Weyl group: the unique
//! minimal-length representative of each coset, maximal coset lengths, and
//! the dimension bookkeeping built from them.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use crate::bruhat::BruhatContext;
use crate::cartan::CartanDatum;
use crate::element::AffineWeylElem;

/// The finite Weyl group realized inside the affine datum as the subgroup
/// generated by the reflections `s_1 ... s_m`.
pub struct FiniteWeylGroup {
    datum: Arc<CartanDatum>,
    elements: Vec<AffineWeylElem>,
}

impl FiniteWeylGroup {
    pub fn new(datum: Arc<CartanDatum>) -> Self {
        let elements = datum
            .finite_elements()
            .into_iter()
            .map(|w| AffineWeylElem::raw(vec![0; datum.rank()], w))
            .collect();
        FiniteWeylGroup { datum, elements }
    }

    pub fn datum(&self) -> &Arc<CartanDatum> {
        &self.datum
    }

    pub fn elements(&self) -> &[AffineWeylElem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Subgroup generated by a subset of the finite simple reflections
    /// (indices in `1 ..= m`).
    pub fn parabolic(&self, subset: &BTreeSet<usize>) -> Vec<AffineWeylElem> {
        let gens: Vec<&AffineWeylElem> = subset.iter().map(|&i| self.datum.simple(i)).collect();
        let mut seen: HashSet<AffineWeylElem> = HashSet::new();
        let mut frontier = vec![self.datum.identity()];
        seen.insert(self.datum.identity());
        while let Some(w) = frontier.pop() {
            for g in &gens {
                let next = w.mul(g);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Longest element of the parabolic subgroup.
    pub fn longest_in(&self, subset: &BTreeSet<usize>) -> AffineWeylElem {
        self.parabolic(subset)
            .into_iter()
            .max_by_key(|w| self.datum.length(w))
            .expect("parabolic subgroups are nonempty")
    }
}

/// One double coset with its distinguished data.
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    pub min_rep: AffineWeylElem,
    pub min_length: u64,
    /// Maximal length over the coset.
    pub max_length: u64,
    pub size: usize,
}

impl DoubleCoset {
    /// `dim = ell_I(w) - ell(w_I)`: the dimension of the associated
    /// generalized variety in terms of the maximal coset length and the
    /// longest element of the parabolic.
    pub fn dimension(&self, longest_parabolic_length: u64) -> i64 {
        self.max_length as i64 - longest_parabolic_length as i64
    }
}

/// Minimal representatives of `W_I \ W / W_I`, sorted by length. Panics if
/// minimality is not unique, which cannot happen in a finite Weyl group.
pub fn double_coset_min_reps(
    group: &FiniteWeylGroup,
    subset: &BTreeSet<usize>,
) -> Vec<DoubleCoset> {
    let datum = group.datum().clone();
    let parabolic = group.parabolic(subset);
    let mut assigned: HashMap<AffineWeylElem, usize> = HashMap::new();
    let mut cosets: Vec<Vec<AffineWeylElem>> = Vec::new();
    for w in group.elements() {
        if assigned.contains_key(w) {
            continue;
        }
        let idx = cosets.len();
        let mut members = HashSet::new();
        for a in &parabolic {
            for b in &parabolic {
                members.insert(a.mul(w).mul(b));
            }
        }
        for m in &members {
            assigned.insert(m.clone(), idx);
        }
        cosets.push(members.into_iter().collect());
    }
    let mut out = Vec::with_capacity(cosets.len());
    for members in cosets {
        let lengths: Vec<u64> = members.iter().map(|m| datum.length(m)).collect();
        let min_length = *lengths.iter().min().unwrap();
        let max_length = *lengths.iter().max().unwrap();
        let minima: Vec<&AffineWeylElem> = members
            .iter()
            .zip(&lengths)
            .filter(|(_, &l)| l == min_length)
            .map(|(m, _)| m)
            .collect();
        assert_eq!(minima.len(), 1, "minimal double-coset representative must be unique");
        out.push(DoubleCoset {
            min_rep: minima[0].clone(),
            min_length,
            max_length,
            size: members.len(),
        });
    }
    out.sort_by_key(|c| {
        (c.min_length, crate::words::reduced_word(&datum, &c.min_rep))
    });
    out
}

/// Exhaustive check of the coset-compatibility of the Bruhat order: for
/// minimal representatives `x1, x2`, `x1 <= x2` iff some members `y_i` of
/// the respective cosets satisfy `y1 <= y2`.
pub fn bruhat_coset_equivalence_holds(
    group: &FiniteWeylGroup,
    subset: &BTreeSet<usize>,
) -> bool {
    let datum = group.datum().clone();
    let mut ctx = BruhatContext::new(datum.clone());
    let parabolic = group.parabolic(subset);
    let reps = double_coset_min_reps(group, subset);
    let coset_members = |x: &AffineWeylElem| -> Vec<AffineWeylElem> {
        let mut members = HashSet::new();
        for a in &parabolic {
            for b in &parabolic {
                members.insert(a.mul(x).mul(b));
            }
        }
        members.into_iter().collect()
    };
    for c1 in &reps {
        let m1 = coset_members(&c1.min_rep);
        for c2 in &reps {
            let m2 = coset_members(&c2.min_rep);
            let direct = ctx.leq(&c1.min_rep, &c2.min_rep);
            let exists =
                m1.iter().any(|y1| m2.iter().any(|y2| ctx.leq(y1, y2)));
            if direct != exists {
                return false;
            }
            if direct {
                // The stronger form: every member of the smaller coset is
                // below some member of the larger one.
                let forall = m1.iter().all(|y1| m2.iter().any(|y2| ctx.leq(y1, y2)));
                if !forall {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn siegel_cosets_in_rank_three() {
        // I = {s1, s2} inside the rank-3 finite group: one double coset
        // per relative position of a pair of Lagrangians, the three
        // shortest representatives being 1, s3, s3 s2 s3.
        let datum = CartanDatum::affine_b(3).unwrap();
        let group = FiniteWeylGroup::new(datum.clone());
        assert_eq!(group.order(), 48);
        let subset: BTreeSet<usize> = [1, 2].into_iter().collect();
        let reps = double_coset_min_reps(&group, &subset);
        assert_eq!(reps.len(), 4);
        let words: Vec<Vec<usize>> = reps
            .iter()
            .map(|c| crate::words::reduced_word(&datum, &c.min_rep))
            .collect();
        assert_eq!(words[0], Vec::<usize>::new());
        assert_eq!(words[1], vec![3]);
        assert_eq!(words[2], vec![3, 2, 3]);
        // The three are totally ordered and are exactly the representatives
        // at or below s3 s2 s3.
        let mut ctx = BruhatContext::new(datum);
        assert!(ctx.leq(&reps[0].min_rep, &reps[1].min_rep));
        assert!(ctx.leq(&reps[1].min_rep, &reps[2].min_rep));
        let below: Vec<usize> = (0..reps.len())
            .filter(|&i| ctx.leq(&reps[i].min_rep, &reps[2].min_rep))
            .collect();
        assert_eq!(below, vec![0, 1, 2]);
    }

    #[test]
    fn empty_subset_gives_singleton_cosets() {
        let datum = CartanDatum::affine_b(3).unwrap();
        let group = FiniteWeylGroup::new(datum);
        let reps = double_coset_min_reps(&group, &BTreeSet::new());
        assert_eq!(reps.len(), group.order());
        assert!(reps.iter().all(|c| c.size == 1));
    }
}
