//! Full classification tables over an admissible set: one row per element
//! with its support data, Newton point, minimality and emptiness verdicts,
//! and the reduction summary for the reducible elements.

use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::admissible::admissible_set_j;
use crate::bruhat::BruhatContext;
use crate::cartan::CartanDatum;
use crate::element::AffineWeylElem;
use crate::minimal::{minimal_length_test, MinimalityVerdict};
use crate::reduction::{reduction_tree, ReductionStrategy, ReductionTree};
use crate::sigma::{
    is_finite_sigma_support, is_sigma_coxeter, is_sigma_straight, kottwitz, newton_point,
    sigma_support, stable_subset, FrobeniusAction, NewtonPoint,
};
use crate::words::reduced_word;

#[derive(Clone, Debug)]
pub struct ClassificationRow {
    pub word: Vec<usize>,
    pub length: u64,
    pub kottwitz_trivial: bool,
    pub newton: NewtonPoint,
    pub straight: bool,
    pub sigma_coxeter: bool,
    pub support: BTreeSet<usize>,
    pub stable: BTreeSet<usize>,
    pub support_union_stable: BTreeSet<usize>,
    pub finite_support: bool,
    /// Twice the size of the component of the short-end node inside the
    /// support; the vertex-lattice type of the stratum for finite rows.
    pub lattice_type: Option<usize>,
    pub minimality: MinimalityVerdict,
    pub empty: bool,
    pub reduction: Option<ReductionSummary>,
}

#[derive(Clone, Debug)]
pub struct ReductionSummary {
    pub conjugations: Vec<usize>,
    pub splits: Vec<usize>,
    pub leaf_word: Vec<usize>,
    pub leaf_nonempty: bool,
    pub affine_dim: usize,
    pub discarded: Vec<DiscardedBranch>,
}

#[derive(Clone, Debug)]
pub struct DiscardedBranch {
    pub word: Vec<usize>,
    pub newton: NewtonPoint,
    pub straight: bool,
    pub sigma_coxeter: bool,
    pub minimality: MinimalityVerdict,
}

#[derive(Clone, Debug)]
pub struct ClassificationTable {
    pub sigma: FrobeniusAction,
    pub mu: Vec<i64>,
    pub level: BTreeSet<usize>,
    pub rows: Vec<ClassificationRow>,
}

/// Component of the short-end node `s_m` inside a subset of the diagram,
/// following diagram adjacency; the vertex-lattice type is twice its size.
fn lattice_type(datum: &CartanDatum, support: &BTreeSet<usize>) -> usize {
    let m = datum.num_simples() - 1;
    if !support.contains(&m) {
        return 0;
    }
    let adjacent = |a: usize, b: usize| datum.coxeter_order(a, b) > 2;
    let mut component = BTreeSet::new();
    let mut frontier = vec![m];
    component.insert(m);
    while let Some(x) = frontier.pop() {
        for &y in support {
            if !component.contains(&y) && adjacent(x, y) {
                component.insert(y);
                frontier.push(y);
            }
        }
    }
    2 * component.len()
}

pub fn classification_row(
    datum: &Arc<CartanDatum>,
    w: &AffineWeylElem,
    level: &BTreeSet<usize>,
    sigma: FrobeniusAction,
    strategy: &ReductionStrategy,
) -> ClassificationRow {
    let word = reduced_word(datum, w);
    let support = sigma_support(datum, w, sigma);
    let stable = stable_subset(datum, w, level, sigma);
    let support_union_stable: BTreeSet<usize> =
        support.union(&stable).copied().collect();
    let finite_support = is_finite_sigma_support(datum, w, sigma);
    let newton = newton_point(datum, w, sigma).expect("twisted powers terminate");
    let straight = is_sigma_straight(datum, w, sigma).expect("newton point exists");
    let minimality = minimal_length_test(datum, w, sigma, strategy.limits);
    let empty = minimality.is_minimal() && !finite_support;
    let reduction = if !minimality.is_minimal() {
        reduction_tree(datum, w, sigma, strategy).ok().map(|tree| summarize(datum, &tree))
    } else {
        None
    };
    ClassificationRow {
        word,
        length: datum.length(w),
        kottwitz_trivial: kottwitz(w) == 0,
        newton,
        straight,
        sigma_coxeter: is_sigma_coxeter(datum, w, sigma),
        support: support.clone(),
        stable,
        support_union_stable,
        finite_support,
        lattice_type: finite_support.then(|| lattice_type(datum, &support)),
        minimality,
        empty,
        reduction,
    }
}

fn summarize(datum: &CartanDatum, tree: &ReductionTree) -> ReductionSummary {
    let main = tree.main_leaf();
    let discarded = tree
        .discarded()
        .into_iter()
        .map(|leaf| DiscardedBranch {
            word: reduced_word(datum, &leaf.report.elem),
            newton: leaf.report.newton.clone(),
            straight: leaf.report.straight,
            sigma_coxeter: leaf.report.sigma_coxeter,
            minimality: leaf.report.minimality.clone(),
        })
        .collect();
    ReductionSummary {
        conjugations: tree.leading_conjugations(),
        splits: tree.split_conjugators(),
        leaf_word: reduced_word(datum, &main.report.elem),
        leaf_nonempty: main.report.nonempty,
        affine_dim: main.affine_dim,
        discarded,
    }
}

/// The full table for the admissible set of a coweight at a level subset.
pub fn classification_table(
    datum: &Arc<CartanDatum>,
    mu: &[i64],
    level: &BTreeSet<usize>,
    sigma: FrobeniusAction,
    strategy: &ReductionStrategy,
) -> ClassificationTable {
    let mut ctx = BruhatContext::new(datum.clone());
    let adm = admissible_set_j(&mut ctx, mu, level);
    let rows = adm
        .iter()
        .map(|w| classification_row(datum, w, level, sigma, strategy))
        .collect();
    ClassificationTable { sigma, mu: mu.to_vec(), level: level.clone(), rows }
}

fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("")
    }
}

fn set_string(set: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = set.iter().map(|i| format!("s{i}")).collect();
    format!("{{{}}}", inner.join(","))
}

impl ClassificationTable {
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut obj = serde_json::Map::new();
                obj.insert("element".into(), json!(word_string(&r.word)));
                obj.insert(
                    "word".into(),
                    json!(r.word.iter().map(|&i| i as u64).collect::<Vec<_>>()),
                );
                obj.insert("length".into(), json!(r.length));
                obj.insert("kottwitz_trivial".into(), json!(r.kottwitz_trivial));
                obj.insert("newton".into(), json!(r.newton.to_string()));
                obj.insert("straight".into(), json!(r.straight));
                obj.insert("sigma_coxeter".into(), json!(r.sigma_coxeter));
                obj.insert("support".into(), json!(set_string(&r.support)));
                obj.insert("stable_subset".into(), json!(set_string(&r.stable)));
                obj.insert(
                    "support_union_stable".into(),
                    json!(set_string(&r.support_union_stable)),
                );
                obj.insert("finite_support".into(), json!(r.finite_support));
                if let Some(t) = r.lattice_type {
                    obj.insert("lattice_type".into(), json!(t));
                }
                obj.insert("minimal".into(), json!(r.minimality.label()));
                obj.insert("empty".into(), json!(r.empty));
                if let Some(red) = &r.reduction {
                    obj.insert(
                        "reduction".into(),
                        json!({
                            "conjugations": red.conjugations.iter().map(|&i| i as u64).collect::<Vec<_>>(),
                            "splits": red.splits.iter().map(|&i| i as u64).collect::<Vec<_>>(),
                            "leaf": word_string(&red.leaf_word),
                            "leaf_nonempty": red.leaf_nonempty,
                            "affine_dim": red.affine_dim,
                            "discarded": red.discarded.iter().map(|d| json!({
                                "element": word_string(&d.word),
                                "newton": d.newton.to_string(),
                                "straight": d.straight,
                                "sigma_coxeter": d.sigma_coxeter,
                                "minimal": d.minimality.label(),
                            })).collect::<Vec<_>>(),
                        }),
                    );
                }
                Value::Object(obj)
            })
            .collect();
        json!({
            "sigma": match self.sigma {
                FrobeniusAction::Split => "split",
                FrobeniusAction::NonSplit => "nonsplit",
            },
            "mu": self.mu,
            "level": self.level.iter().map(|&i| i as u64).collect::<Vec<_>>(),
            "rows": rows,
        })
    }

    /// Aligned text rendering.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        let header = format!(
            "{:<22} {:>3} {:<14} {:<18} {:>8} {:>7} {:<16} {:<6}",
            "element", "len", "newton", "supp+I", "straight", "minimal", "verdict", "type"
        );
        lines.push(header);
        for r in &self.rows {
            let verdict = if r.empty {
                "empty".to_string()
            } else if r.minimality.is_minimal() {
                "nonempty".to_string()
            } else if let Some(red) = &r.reduction {
                format!("A^{}-bundle/{}", red.affine_dim, word_string(&red.leaf_word))
            } else {
                "reducible".to_string()
            };
            lines.push(format!(
                "{:<22} {:>3} {:<14} {:<18} {:>8} {:>7} {:<16} {:<6}",
                word_string(&r.word),
                r.length,
                r.newton.to_string(),
                set_string(&r.support_union_stable),
                r.straight,
                r.minimality.is_minimal(),
                verdict,
                r.lattice_type.map(|t| t.to_string()).unwrap_or_else(|| "-".into()),
            ));
        }
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_row_is_nonempty_of_type_zero() {
        let datum = CartanDatum::affine_b(3).unwrap();
        let level: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        let row = classification_row(
            &datum,
            &datum.identity(),
            &level,
            FrobeniusAction::Split,
            &ReductionStrategy::default(),
        );
        assert!(row.finite_support);
        assert_eq!(row.lattice_type, Some(0));
        assert!(!row.empty);
        assert_eq!(row.support_union_stable, level);
    }
}
