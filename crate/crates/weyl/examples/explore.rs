use flatcert_weyl::*;
use std::collections::BTreeSet;

fn ws(w: &[usize]) -> String {
    if w.is_empty() { "1".into() } else { w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join("") }
}

fn main() {
    let datum = CartanDatum::affine_b(3).unwrap();
    let mut ctx = BruhatContext::new(datum.clone());
    let j: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
    let adm = admissible_set_j(&mut ctx, &[1, 1, 0], &j);
    println!("|Adm^J| = {}", adm.len());
    for w in &adm {
        let word = reduced_word(&datum, w);
        let nu_s = newton_point(&datum, w, FrobeniusAction::Split).unwrap();
        let nu_n = newton_point(&datum, w, FrobeniusAction::NonSplit).unwrap();
        let supp_s = sigma_support(&datum, w, FrobeniusAction::Split);
        let supp_n = sigma_support(&datum, w, FrobeniusAction::NonSplit);
        let is = stable_subset(&datum, w, &j, FrobeniusAction::Split);
        let si: BTreeSet<usize> = supp_s.union(&is).copied().collect();
        println!("{:<22} len={} splitN={:<12} nonsplitN={:<12} supp_s={:?} supp+I={:?} supp_n={:?} k={}",
            ws(&word), datum.length(w), nu_s.to_string(), nu_n.to_string(),
            supp_s.iter().collect::<Vec<_>>(), si.iter().collect::<Vec<_>>(),
            supp_n.iter().collect::<Vec<_>>(), kottwitz(w));
    }
}
