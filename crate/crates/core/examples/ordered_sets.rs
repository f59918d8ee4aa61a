//! Preorders, monotone maps and the image factorization.

use ordalg::oset::{classify_map, image_factorization, monotone_maps, product, MonotoneMap, OSet};

fn main() {
    // a diamond: bottom below two incomparable atoms below top
    let diamond = OSet::validate(&["b", "l", "r", "t"], &[("b", "l"), ("b", "r"), ("l", "t"), ("r", "t")]).unwrap();
    let chain = OSet::chain(3);
    println!("le pairs of the diamond: {}", diamond.le_pairs().len());
    println!("monotone maps diamond -> 3-chain: {}", monotone_maps(&diamond, &chain).len());
    println!("|diamond x 3-chain| = {}", product(&diamond, &chain).len());

    let f = MonotoneMap::from_names(diamond.clone(), chain.clone(), &[("b", "0"), ("l", "1"), ("r", "1"), ("t", "2")]).unwrap();
    let class = classify_map(&f);
    println!("f: full={} ff-mono={} surjective={}", class.is_full, class.is_ff_mono, class.is_so);
    let (e, m) = image_factorization(&f);
    println!("image has {} elements; e surjective: {}, m full: {}", e.cod().len(), e.is_surjective(), m.is_full());

    match MonotoneMap::from_names(chain.clone(), diamond, &[("0", "t"), ("1", "b"), ("2", "t")]) {
        Ok(_) => println!("unexpectedly monotone"),
        Err(e) => println!("rejected: {e}"),
    }
}
