//! Lexicographic Buchberger engine with quotient tracking.
//!
//! The engine produces the unique reduced Groebner basis for a fixed
//! selection strategy: S-pairs are processed by minimal lcm total degree,
//! ties broken by ascending lex on the lcm and then by pair index. Two
//! classical criteria (coprime leading monomials, chain) prune pairs.
//!
//! Quotient tracking is opt-in: it roughly doubles memory and is only
//! needed when lift matrices are requested downstream.

use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::path::PathBuf;
use std::sync::Arc;
use thiserror::Error;

use crate::coeff::{Coeff, CoefficientDomain};
use crate::ideal::IdealPresentation;
use crate::monomial::Monomial;
use crate::parse::{format_poly, parse_poly};
use crate::poly::{PolyError, Polynomial};
use crate::vars::VariableTable;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("resource limit exceeded after {processed} S-pairs{}", checkpoint.as_ref().map(|p| format!(", checkpoint at {}", p.display())).unwrap_or_default())]
    ResourceLimit { processed: usize, checkpoint: Option<PathBuf> },
    #[error("target {0} is not a member of the ideal")]
    NotAMember(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("checkpoint i/o: {0}")]
    CheckpointIo(String),
}

/// Engine knobs. `max_pairs` counts processed (not pruned) S-pairs;
/// `max_coeff_bits` bounds numerator/denominator sizes of new elements.
#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub max_pairs: Option<usize>,
    pub max_coeff_bits: Option<u64>,
    pub track_lift: bool,
    pub checkpoint_path: Option<PathBuf>,
    pub checkpoint_every: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_pairs: Some(5_000_000),
            max_coeff_bits: None,
            track_lift: false,
            checkpoint_path: None,
            checkpoint_every: 10_000,
        }
    }
}

impl EngineConfig {
    pub fn with_lift() -> Self {
        EngineConfig { track_lift: true, ..Default::default() }
    }
}

/// A reduced lexicographic Groebner basis. Over `Q` all elements are monic;
/// over a prime field likewise. Elements are sorted descending by leading
/// monomial, which makes equality of bases structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    domain: CoefficientDomain,
    table: Arc<VariableTable>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn domain(&self) -> &CoefficientDomain {
        &self.domain
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Wrap an externally known reduced basis without recomputing it.
    pub fn from_reduced_elements(
        elements: Vec<Polynomial>,
        domain: CoefficientDomain,
        table: Arc<VariableTable>,
    ) -> Self {
        let mut elements = elements;
        elements.sort_by(|a, b| b.cmp_canonical(a));
        GroebnerBasis { elements, domain, table }
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, &self.elements).is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LiftDirection {
    /// Rows express basis elements in the original generators: `G = Z.F`.
    GFromF,
    /// Rows express generators in the basis: `F = Y.G`.
    FFromG,
}

/// Matrix of coefficient polynomials witnessing a membership identity.
#[derive(Clone, Debug)]
pub struct LiftMatrix {
    pub rows: Vec<Vec<Polynomial>>,
    pub direction: LiftDirection,
}

impl LiftMatrix {
    /// Exact check of `targets[i] = rows[i] . gens` by multiplication.
    pub fn verify(&self, targets: &[Polynomial], gens: &[Polynomial]) -> bool {
        self.rows.len() == targets.len()
            && self.rows.iter().zip(targets).all(|(row, t)| {
                let mut acc = Polynomial::zero(t.domain().clone(), t.table().clone());
                for (c, g) in row.iter().zip(gens) {
                    acc = acc.add(&c.mul(g).expect("same ring")).expect("same ring");
                }
                acc == *t
            })
    }
}

/// Schreyer-style syzygy rows: every row annihilates the basis exactly.
#[derive(Clone, Debug)]
pub struct SyzygyMatrix {
    pub rows: Vec<Vec<Polynomial>>,
}

impl SyzygyMatrix {
    pub fn verify(&self, basis: &[Polynomial]) -> bool {
        let Some(first) = basis.first() else { return self.rows.is_empty() };
        self.rows.iter().all(|row| {
            let mut acc = Polynomial::zero(first.domain().clone(), first.table().clone());
            for (c, g) in row.iter().zip(basis) {
                acc = acc.add(&c.mul(g).expect("same ring")).expect("same ring");
            }
            acc.is_zero()
        })
    }
}

/// Result of a Buchberger run; the lift matrix is present iff tracking was
/// requested.
#[derive(Clone, Debug)]
pub struct GroebnerComputation {
    pub basis: GroebnerBasis,
    pub lift_g_from_f: Option<LiftMatrix>,
}

/// Remainder of `f` under full division by `divisors`, in list order.
/// No term of the result is divisible by any divisor's leading monomial.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    normal_form_with_quotients(f, divisors).1
}

/// Division with quotients: `f = sum_i q_i * divisors_i + r`, exactly.
pub fn normal_form_with_quotients(
    f: &Polynomial,
    divisors: &[Polynomial],
) -> (Vec<Polynomial>, Polynomial) {
    let domain = f.domain().clone();
    let table = f.table().clone();
    let mut quotients: Vec<Polynomial> =
        divisors.iter().map(|_| Polynomial::zero(domain.clone(), table.clone())).collect();
    let mut remainder_terms: Vec<(Coeff, Monomial)> = Vec::new();
    let mut p = f.clone();
    'outer: while !p.is_zero() {
        let (pc, pm) = {
            let (c, m) = p.leading_term().unwrap();
            (c.clone(), m.clone())
        };
        for (i, g) in divisors.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let (gc, gm) = g.leading_term().unwrap();
            if let Some(q_mono) = gm.try_quotient(&pm) {
                let q_coeff = domain.div(&pc, gc).expect("nonzero leading coefficient");
                p = p.sub(&g.mul_term(&q_coeff, &q_mono)).expect("same ring");
                quotients[i] = quotients[i]
                    .add(&Polynomial::from_terms(
                        vec![(q_coeff, q_mono)],
                        domain.clone(),
                        table.clone(),
                    ))
                    .expect("same ring");
                continue 'outer;
            }
        }
        // Leading term irreducible: move it to the remainder.
        remainder_terms.push((pc, pm));
        let rest = p.terms()[1..].to_vec();
        p = Polynomial::from_terms(rest, domain.clone(), table.clone());
    }
    let r = Polynomial::from_terms(remainder_terms, domain, table);
    (quotients, r)
}

/// S-polynomial `(lcm/lt(f)) f - (lcm/lt(g)) g`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    f.check_compatible(g)?;
    let (fc, fm) = f.leading_term()?;
    let (gc, gm) = g.leading_term()?;
    let lcm = fm.lcm(gm);
    let domain = f.domain();
    let uf = (domain.inv(fc).unwrap(), fm.try_quotient(&lcm).unwrap());
    let ug = (domain.inv(gc).unwrap(), gm.try_quotient(&lcm).unwrap());
    f.mul_term(&uf.0, &uf.1).sub(&g.mul_term(&ug.0, &ug.1))
}

#[derive(PartialEq, Eq)]
struct PairKey {
    degree: u32,
    lcm: Monomial,
    i: u32,
    j: u32,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree, &self.lcm, self.i, self.j).cmp(&(other.degree, &other.lcm, other.i, other.j))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// JSON checkpoint for long runs: basis plus the pending-pair queue fully
/// determine the remaining work.
#[derive(Serialize, Deserialize)]
pub struct Checkpoint {
    pub order: String,
    pub variables: Vec<String>,
    pub field: String,
    pub elements: Vec<String>,
    pub pending: Vec<(u32, u32)>,
    pub done: Vec<(u32, u32)>,
    pub processed: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift_rows: Option<Vec<Vec<String>>>,
}

struct BuchbergerState {
    domain: CoefficientDomain,
    table: Arc<VariableTable>,
    basis: Vec<Polynomial>,
    /// Row i expresses basis[i] over the input generators.
    reps: Option<Vec<Vec<Polynomial>>>,
    queue: BinaryHeap<Reverse<PairKey>>,
    done: HashSet<(u32, u32)>,
    processed: usize,
}

impl BuchbergerState {
    fn pair_key(&self, i: u32, j: u32) -> PairKey {
        let lm_i = self.basis[i as usize].leading_monomial().unwrap();
        let lm_j = self.basis[j as usize].leading_monomial().unwrap();
        let lcm = lm_i.lcm(lm_j);
        PairKey { degree: lcm.degree(), lcm, i, j }
    }

    fn push_pairs_with(&mut self, new_idx: u32) {
        for i in 0..new_idx {
            let key = self.pair_key(i, new_idx);
            self.queue.push(Reverse(key));
        }
    }

    fn add_element(&mut self, f: Polynomial, rep: Option<Vec<Polynomial>>) {
        debug_assert!(!f.is_zero());
        self.basis.push(f);
        if let Some(reps) = &mut self.reps {
            reps.push(rep.expect("tracking requires a representation"));
        }
        let idx = (self.basis.len() - 1) as u32;
        self.push_pairs_with(idx);
    }

    fn chain_criterion(&self, i: u32, j: u32, lcm: &Monomial) -> bool {
        for (k, g) in self.basis.iter().enumerate() {
            let k = k as u32;
            if k == i || k == j {
                continue;
            }
            if !g.leading_monomial().unwrap().divides(lcm) {
                continue;
            }
            let a = (i.min(k), i.max(k));
            let b = (j.min(k), j.max(k));
            if self.done.contains(&a) && self.done.contains(&b) {
                return true;
            }
        }
        false
    }

    fn coeff_bits(p: &Polynomial) -> u64 {
        p.terms()
            .iter()
            .map(|(c, _)| match c {
                Coeff::Rat(r) => r.numer().bits().max(r.denom().bits()),
                Coeff::Mod(_) => 8,
            })
            .max()
            .unwrap_or(0)
    }

    fn save_checkpoint(&self, path: &PathBuf) -> Result<(), EngineError> {
        let field = match &self.domain {
            CoefficientDomain::Rationals => "Q".to_string(),
            CoefficientDomain::PrimeField(p) => format!("Fp:{p}"),
        };
        let cp = Checkpoint {
            order: "lex".into(),
            variables: self.table.names().to_vec(),
            field,
            elements: self.basis.iter().map(format_poly).collect(),
            pending: self.queue.iter().map(|Reverse(k)| (k.i, k.j)).collect(),
            done: self.done.iter().copied().collect(),
            processed: self.processed,
            lift_rows: self
                .reps
                .as_ref()
                .map(|rows| rows.iter().map(|r| r.iter().map(format_poly).collect()).collect()),
        };
        let json = serde_json::to_string(&cp).map_err(|e| EngineError::CheckpointIo(e.to_string()))?;
        std::fs::write(path, json).map_err(|e| EngineError::CheckpointIo(e.to_string()))
    }
}

/// Resume a checkpointed run. The presentation must match the one that
/// produced the checkpoint; only structural fields are validated.
pub fn buchberger_resume(
    presentation: &IdealPresentation,
    config: &EngineConfig,
    checkpoint: &Checkpoint,
) -> Result<GroebnerComputation, EngineError> {
    let domain = presentation.domain().clone();
    let table = presentation.table().clone();
    let basis: Result<Vec<_>, _> = checkpoint
        .elements
        .iter()
        .map(|s| parse_poly(s, &domain, &table))
        .collect();
    let basis = basis.map_err(|e| EngineError::CheckpointIo(e.to_string()))?;
    let reps = match &checkpoint.lift_rows {
        Some(rows) if config.track_lift => {
            let mut out = Vec::with_capacity(rows.len());
            for row in rows {
                let row: Result<Vec<_>, _> =
                    row.iter().map(|s| parse_poly(s, &domain, &table)).collect();
                out.push(row.map_err(|e| EngineError::CheckpointIo(e.to_string()))?);
            }
            Some(out)
        }
        _ => None,
    };
    let mut st = BuchbergerState {
        domain,
        table,
        basis,
        reps,
        queue: BinaryHeap::new(),
        done: checkpoint.done.iter().copied().collect(),
        processed: checkpoint.processed,
    };
    for &(i, j) in &checkpoint.pending {
        let key = st.pair_key(i, j);
        st.queue.push(Reverse(key));
    }
    run_main_loop(st, presentation, config)
}

/// Reduced Groebner basis of the presentation's ideal.
pub fn buchberger(
    presentation: &IdealPresentation,
    config: &EngineConfig,
) -> Result<GroebnerComputation, EngineError> {
    let domain = presentation.domain().clone();
    let table = presentation.table().clone();
    let gens = presentation.generators();
    let mut st = BuchbergerState {
        domain: domain.clone(),
        table: table.clone(),
        basis: Vec::new(),
        reps: if config.track_lift { Some(Vec::new()) } else { None },
        queue: BinaryHeap::new(),
        done: HashSet::new(),
        processed: 0,
    };
    for (i, g) in gens.iter().enumerate() {
        let norm = g.primitive_integer();
        // Track the scaling applied by normalization.
        let factor = domain
            .div(norm.leading_coeff().unwrap(), g.leading_coeff().unwrap())
            .unwrap();
        let rep = if config.track_lift {
            let mut row: Vec<Polynomial> =
                gens.iter().map(|_| Polynomial::zero(domain.clone(), table.clone())).collect();
            row[i] = Polynomial::constant(factor, domain.clone(), table.clone());
            Some(row)
        } else {
            None
        };
        st.add_element(norm, rep);
    }
    run_main_loop(st, presentation, config)
}

fn run_main_loop(
    mut st: BuchbergerState,
    presentation: &IdealPresentation,
    config: &EngineConfig,
) -> Result<GroebnerComputation, EngineError> {
    let domain = st.domain.clone();
    let table = st.table.clone();
    let mut since_checkpoint = 0usize;
    loop {
        // Limits and periodic checkpoints are applied between pairs, when
        // the queue plus the done set describe exactly the remaining work.
        if let Some(cap) = config.max_pairs {
            if st.processed >= cap && !st.queue.is_empty() {
                let cp_path = config.checkpoint_path.clone();
                if let Some(path) = &cp_path {
                    st.save_checkpoint(path)?;
                }
                return Err(EngineError::ResourceLimit { processed: st.processed, checkpoint: cp_path });
            }
        }
        if let Some(path) = &config.checkpoint_path {
            if since_checkpoint >= config.checkpoint_every {
                st.save_checkpoint(path)?;
                since_checkpoint = 0;
            }
        }
        let Some(Reverse(key)) = st.queue.pop() else { break };
        let (i, j) = (key.i, key.j);
        if st.done.contains(&(i, j)) {
            continue;
        }
        let lm_i = st.basis[i as usize].leading_monomial().unwrap();
        let lm_j = st.basis[j as usize].leading_monomial().unwrap();
        // First Buchberger criterion: coprime leading monomials.
        if lm_i.gcd_is_one(lm_j) {
            st.done.insert((i, j));
            continue;
        }
        if st.chain_criterion(i, j, &key.lcm) {
            st.done.insert((i, j));
            continue;
        }
        st.done.insert((i, j));
        st.processed += 1;
        since_checkpoint += 1;

        let s = s_polynomial(&st.basis[i as usize], &st.basis[j as usize])?;
        let (quots, r) = normal_form_with_quotients(&s, &st.basis);
        if r.is_zero() {
            continue;
        }
        let norm = r.primitive_integer();
        if let Some(cap) = config.max_coeff_bits {
            if BuchbergerState::coeff_bits(&norm) > cap {
                // Roll this pair back so the checkpoint stays consistent.
                st.done.remove(&(i, j));
                st.queue.push(Reverse(key));
                let cp_path = config.checkpoint_path.clone();
                if let Some(path) = &cp_path {
                    st.save_checkpoint(path)?;
                }
                return Err(EngineError::ResourceLimit { processed: st.processed, checkpoint: cp_path });
            }
        }
        let rep = if let Some(reps) = &st.reps {
            // rep(S) = u_i rep_i - u_j rep_j - sum_k q_k rep_k, then rescale.
            let fi = &st.basis[i as usize];
            let fj = &st.basis[j as usize];
            let (fc, fm) = fi.leading_term().unwrap();
            let (gc, gm) = fj.leading_term().unwrap();
            let ui = (domain.inv(fc).unwrap(), fm.try_quotient(&key.lcm).unwrap());
            let uj = (domain.inv(gc).unwrap(), gm.try_quotient(&key.lcm).unwrap());
            let n = presentation.generators().len();
            let mut row = Vec::with_capacity(n);
            for col in 0..n {
                let mut acc = reps[i as usize][col].mul_term(&ui.0, &ui.1);
                acc = acc.sub(&reps[j as usize][col].mul_term(&uj.0, &uj.1)).expect("same ring");
                for (k, q) in quots.iter().enumerate() {
                    if !q.is_zero() {
                        acc = acc.sub(&q.mul(&reps[k][col]).expect("same ring")).expect("same ring");
                    }
                }
                row.push(acc);
            }
            let factor =
                domain.div(norm.leading_coeff().unwrap(), r.leading_coeff().unwrap()).unwrap();
            Some(row.into_iter().map(|p| p.scale(&factor)).collect())
        } else {
            None
        };
        st.add_element(norm, rep);
    }

    let (elements, reps) = reduce_basis(st.basis, st.reps, &domain, &table);
    let basis = GroebnerBasis { elements, domain, table };
    let lift = reps.map(|rows| LiftMatrix { rows, direction: LiftDirection::GFromF });
    Ok(GroebnerComputation { basis, lift_g_from_f: lift })
}

/// Minimize and inter-reduce a Groebner basis; normalize leading
/// coefficients to one. Representations are transformed alongside.
fn reduce_basis(
    mut basis: Vec<Polynomial>,
    mut reps: Option<Vec<Vec<Polynomial>>>,
    domain: &CoefficientDomain,
    table: &Arc<VariableTable>,
) -> (Vec<Polynomial>, Option<Vec<Vec<Polynomial>>>) {
    // Minimization: drop elements whose leading monomial is divisible by
    // another's. Process larger leading monomials first so survivors are
    // the minimal generators of the initial ideal.
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by(|&a, &b| {
        basis[a].leading_monomial().unwrap().cmp(basis[b].leading_monomial().unwrap())
    });
    let mut keep = vec![true; basis.len()];
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[..pos] {
            if !keep[j] {
                continue;
            }
            if basis[j]
                .leading_monomial()
                .unwrap()
                .divides(basis[i].leading_monomial().unwrap())
            {
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut kept_reps: Option<Vec<Vec<Polynomial>>> = reps.as_ref().map(|_| Vec::new());
    for (idx, f) in basis.drain(..).enumerate() {
        if keep[idx] {
            kept.push(f);
            if let (Some(out), Some(src)) = (&mut kept_reps, &mut reps) {
                out.push(std::mem::take(&mut src[idx]));
            }
        }
    }

    // Inter-reduction: full normal form of each element against the others.
    let n = kept.len();
    for i in 0..n {
        let current = kept[i].clone();
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (quots, r) = normal_form_with_quotients(&current, &others);
        let monic = r.monic();
        if let Some(reps) = &mut kept_reps {
            let mut row = reps[i].clone();
            let mut others_idx: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            for (slot, q) in quots.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let j = others_idx[slot];
                let qr = reps[j].clone();
                for (col, cell) in row.iter_mut().enumerate() {
                    *cell = cell.sub(&q.mul(&qr[col]).expect("same ring")).expect("same ring");
                }
            }
            let factor = domain
                .div(monic.leading_coeff().unwrap(), r.leading_coeff().unwrap())
                .unwrap();
            for cell in row.iter_mut() {
                *cell = cell.scale(&factor);
            }
            reps[i] = row;
            others_idx.clear();
        }
        kept[i] = monic;
    }

    // Deterministic output order: descending leading monomial.
    let mut idx: Vec<usize> = (0..kept.len()).collect();
    idx.sort_by(|&a, &b| kept[b].cmp_canonical(&kept[a]));
    let elements: Vec<Polynomial> = idx.iter().map(|&i| kept[i].clone()).collect();
    let reps_out = kept_reps.map(|rows| idx.iter().map(|&i| rows[i].clone()).collect());
    let _ = table;
    (elements, reps_out)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    let nonzero: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let lm_i = nonzero[i].leading_monomial().unwrap();
            let lm_j = nonzero[j].leading_monomial().unwrap();
            if lm_i.gcd_is_one(lm_j) {
                continue;
            }
            let s = match s_polynomial(nonzero[i], nonzero[j]) {
                Ok(s) => s,
                Err(_) => return false,
            };
            if !normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Express each target as a combination of the presentation's generators.
/// Fails with the index of the first non-member.
pub fn lift(targets: &[Polynomial], f: &IdealPresentation) -> Result<LiftMatrix, EngineError> {
    let comp = buchberger(f, &EngineConfig::with_lift())?;
    let z = comp.lift_g_from_f.expect("tracking was enabled");
    let basis = comp.basis.elements();
    let domain = f.domain().clone();
    let table = f.table().clone();
    let mut rows = Vec::with_capacity(targets.len());
    for (ti, t) in targets.iter().enumerate() {
        let (quots, r) = normal_form_with_quotients(t, basis);
        if !r.is_zero() {
            return Err(EngineError::NotAMember(ti));
        }
        let n = f.generators().len();
        let mut row = vec![Polynomial::zero(domain.clone(), table.clone()); n];
        for (k, q) in quots.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (col, cell) in row.iter_mut().enumerate() {
                *cell = cell.add(&q.mul(&z.rows[k][col]).expect("same ring")).expect("same ring");
            }
        }
        rows.push(row);
    }
    Ok(LiftMatrix { rows, direction: LiftDirection::GFromF })
}

/// Express targets over an existing Groebner basis by plain division.
pub fn lift_over_basis(
    targets: &[Polynomial],
    basis: &GroebnerBasis,
) -> Result<LiftMatrix, EngineError> {
    let mut rows = Vec::with_capacity(targets.len());
    for (ti, t) in targets.iter().enumerate() {
        let (quots, r) = normal_form_with_quotients(t, basis.elements());
        if !r.is_zero() {
            return Err(EngineError::NotAMember(ti));
        }
        rows.push(quots);
    }
    Ok(LiftMatrix { rows, direction: LiftDirection::FFromG })
}

/// Schreyer generators of the syzygy module of a Groebner basis.
///
/// The pair syzygy `s_ij` has leading term `(lcm_ij / lm_i) e_i` in the
/// induced module order (ties break toward the smaller index), so a pair
/// `(i, j)` is redundant once a kept pair `(i, k)` satisfies
/// `lcm_ik | lcm_ij`: the kept rows still have leading terms generating
/// the initial module and therefore remain a Groebner basis of the syzygy
/// module. For a kept pair with coprime leading monomials the row is the
/// Koszul syzygy `(g_j / lc_i lc_j) e_i - (g_i / lc_i lc_j) e_j`, which
/// has the same leading term as the division row and smaller coefficients;
/// other kept pairs get the row from the division
/// `S(g_i, g_j) = sum_k q_k g_k`.
pub fn syzygy_matrix(basis: &GroebnerBasis) -> SyzygyMatrix {
    let g = basis.elements();
    let domain = basis.domain();
    let table = basis.table();
    let mut rows = Vec::new();
    for i in 0..g.len() {
        let (fc, fm) = g[i].leading_term().unwrap();
        // Pairs led by e_i, by ascending lcm.
        let mut partners: Vec<(Monomial, usize)> = (i + 1..g.len())
            .map(|j| (fm.lcm(g[j].leading_monomial().unwrap()), j))
            .collect();
        partners.sort_by(|(ma, ja), (mb, jb)| {
            (ma.degree(), ma, ja).cmp(&(mb.degree(), mb, jb))
        });
        let mut kept_lcms: Vec<Monomial> = Vec::new();
        for (lcm, j) in partners {
            if kept_lcms.iter().any(|k| k.divides(&lcm)) {
                continue;
            }
            kept_lcms.push(lcm.clone());
            let (gc, gm) = g[j].leading_term().unwrap();
            let mut row: Vec<Polynomial> =
                g.iter().map(|_| Polynomial::zero(domain.clone(), table.clone())).collect();
            if fm.gcd_is_one(gm) {
                let scale = domain.inv(&domain.mul(fc, gc)).unwrap();
                row[i] = g[j].scale(&scale);
                row[j] = g[i].scale(&scale).neg();
                rows.push(row);
                continue;
            }
            let ui = (domain.inv(fc).unwrap(), fm.try_quotient(&lcm).unwrap());
            let uj = (domain.inv(gc).unwrap(), gm.try_quotient(&lcm).unwrap());
            let s = s_polynomial(&g[i], &g[j]).expect("nonzero basis elements");
            let (quots, r) = normal_form_with_quotients(&s, g);
            debug_assert!(r.is_zero(), "input must be a Groebner basis");
            row[i] = row[i]
                .add(&Polynomial::from_terms(vec![(ui.0, ui.1)], domain.clone(), table.clone()))
                .unwrap();
            row[j] = row[j]
                .sub(&Polynomial::from_terms(vec![(uj.0, uj.1)], domain.clone(), table.clone()))
                .unwrap();
            for (k, q) in quots.iter().enumerate() {
                if !q.is_zero() {
                    row[k] = row[k].sub(q).unwrap();
                }
            }
            rows.push(row);
        }
    }
    SyzygyMatrix { rows }
}

/// Canonical GB file payload with a checksum over the canonical text form.
#[derive(Serialize, Deserialize)]
pub struct BasisFile {
    pub order: String,
    pub variables: Vec<String>,
    pub field: String,
    pub elements: Vec<String>,
    pub checksum: String,
}

impl BasisFile {
    pub fn from_basis(basis: &GroebnerBasis) -> Self {
        let field = match basis.domain() {
            CoefficientDomain::Rationals => "Q".to_string(),
            CoefficientDomain::PrimeField(p) => format!("Fp:{p}"),
        };
        let elements: Vec<String> = basis.elements().iter().map(format_poly).collect();
        let checksum = checksum_of(&basis.table().names().join(","), &field, &elements);
        BasisFile {
            order: "lex".into(),
            variables: basis.table().names().to_vec(),
            field,
            elements,
            checksum,
        }
    }
}

pub fn checksum_of(vars: &str, field: &str, elements: &[String]) -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    h.update(b"lex\n");
    h.update(vars.as_bytes());
    h.update(b"\n");
    h.update(field.as_bytes());
    h.update(b"\n");
    for e in elements {
        h.update(e.as_bytes());
        h.update(b"\n");
    }
    hex_string(&h.finalize())
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
