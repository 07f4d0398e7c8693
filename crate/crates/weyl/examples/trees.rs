use flatcert_weyl::*;
use flatcert_weyl::reduction::ReductionStrategy;

fn ws(datum: &CartanDatum, w: &AffineWeylElem) -> String {
    let word = reduced_word(datum, w);
    if word.is_empty() { "1".into() } else { word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("") }
}

fn show(datum: &std::sync::Arc<CartanDatum>, root: &[usize], sigma: FrobeniusAction, side: Side) {
    let w = from_word(datum, root);
    let strat = ReductionStrategy { side, ..Default::default() };
    let tree = reduction_tree(datum, &w, sigma, &strat).unwrap();
    println!("== root {} sigma {:?} side {side}", ws(datum, &w), sigma);
    println!("  conjugations: {:?}", tree.leading_conjugations());
    println!("  splits: {:?}", tree.split_conjugators());
    let main = tree.main_leaf();
    println!("  main leaf: {} nonempty={} affine_dim={}", ws(datum, &main.report.elem), main.report.nonempty, main.affine_dim);
    for leaf in tree.leaves() {
        if leaf.via_open {
            println!("  open-branch leaf: {} newton={} straight={} cox={} min={} nonempty={}",
                ws(datum, &leaf.report.elem), leaf.report.newton, leaf.report.straight,
                leaf.report.sigma_coxeter, leaf.report.minimality.label(), leaf.report.nonempty);
        }
    }
    // also print the open/open_alt pairs of each split node
    fn walk(datum: &CartanDatum, node: &reduction::ReductionNode, d: usize) {
        match node {
            reduction::ReductionNode::Leaf(_) => {}
            reduction::ReductionNode::Conjugate { conjugator, result, child } => {
                println!("  {}conj s{} -> {}", "  ".repeat(d), conjugator, super_ws(datum, result));
                walk(datum, child, d);
            }
            reduction::ReductionNode::Split { conjugator, open_elem, open_alt, closed_elem, open, closed } => {
                println!("  {}split s{}: closed={} open={} open_alt={}", "  ".repeat(d), conjugator,
                    super_ws(datum, closed_elem), super_ws(datum, open_elem), super_ws(datum, open_alt));
                walk(datum, closed, d + 1);
                walk(datum, open, d + 1);
            }
        }
    }
    fn super_ws(datum: &CartanDatum, w: &AffineWeylElem) -> String {
        let word = reduced_word(datum, w);
        if word.is_empty() { "1".into() } else { word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("") }
    }
    walk(datum, &tree.node, 0);
}

fn main() {
    let datum = CartanDatum::affine_b(3).unwrap();
    show(&datum, &[3, 2, 3, 1, 0], FrobeniusAction::Split, Side::Right);
    show(&datum, &[3, 2, 3, 1, 2, 0], FrobeniusAction::NonSplit, Side::Right);
    show(&datum, &[3, 2, 3, 1, 2, 0], FrobeniusAction::NonSplit, Side::Left);
}
