use flatcert_weyl::*;

fn main() {
    let datum = CartanDatum::affine_b(3).unwrap();
    // reproduce: random conjugations change the Newton point?
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut ctx = BruhatContext::new(datum.clone());
    let j: std::collections::BTreeSet<usize> = [0,1,2].into_iter().collect();
    let pool = admissible_set_j(&mut ctx, &[1,1,0], &j);
    for round in 0..500 {
        let sigma = if round % 2 == 0 { FrobeniusAction::Split } else { FrobeniusAction::NonSplit };
        let w = pool.choose(&mut rng).unwrap().clone();
        let mut conj = w.clone();
        let mut gs = vec![];
        for _ in 0..rng.gen_range(1..=4) {
            let gi = rng.gen_range(0..4);
            gs.push(gi);
            let g = datum.simple(gi).clone();
            conj = sigma_conjugate(&datum, &g, &conj, sigma);
        }
        let n1 = newton_point(&datum, &w, sigma).unwrap();
        let n2 = newton_point(&datum, &conj, sigma).unwrap();
        if n1 != n2 {
            println!("round {round} sigma {sigma:?} word {:?} conj by {:?}", reduced_word(&datum, &w), gs);
            println!("  w = {:?} -> {}", w, n1);
            println!("  c = {:?} -> {}", conj, n2);
            return;
        }
    }
    println!("no mismatch?!");
}
