use flatcert_core::ideal::elimination_subset;
use flatcert_core::*;
use std::time::Instant;

fn main() {
    let spec = DeterminantalIdealSpec::new(2, 6).unwrap();
    let domain = CoefficientDomain::Rationals;
    let pres = spec.build(&domain);
    let basis = pres.groebner_basis(&EngineConfig::default()).unwrap();
    // Tail ideal J ∩ Q[x26 .. x66]: read off the lex basis.
    let k = spec.table().index_of("x26").unwrap();
    let tail_table = spec.table().suffix(k);
    let tail: Vec<Polynomial> = elimination_subset(&basis, k)
        .into_iter()
        .map(|g| g.strip_front(k, tail_table.clone()).unwrap())
        .collect();
    println!("tail basis: {} elements in {} vars", tail.len(), tail_table.len());
    // Reorder: non-members of the scattered set first.
    let scattered = ["x35", "x45", "x55", "x26", "x36", "x46", "x56", "x66"];
    let mut names: Vec<String> = tail_table
        .names()
        .iter()
        .filter(|n| !scattered.contains(&n.as_str()))
        .cloned()
        .collect();
    let first = names.len();
    names.extend(scattered.iter().map(|s| s.to_string()));
    let perm = VariableTable::new(names).unwrap();
    let remap: Vec<Polynomial> = tail
        .iter()
        .map(|g| parse_poly(&format_poly(g), &domain, &perm).unwrap())
        .collect();
    let perm_pres = IdealPresentation::new(remap, domain, perm).unwrap();
    let t = Instant::now();
    let perm_basis = perm_pres.groebner_basis(&EngineConfig::default()).unwrap();
    println!("reordered tail GB in {:?}: {} elements", t.elapsed(), perm_basis.len());
    let sub = elimination_subset(&perm_basis, first);
    println!("scattered elimination subset: {} elements (expect 0)", sub.len());
}
