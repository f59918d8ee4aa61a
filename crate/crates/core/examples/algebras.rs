//! Building algebras from tables and terms, and what validation rejects.

use ordalg::algebra::{product_algebra, AlgebraBuilder};
use ordalg::corpus::trunc_monoid_chain;
use ordalg::oset::OSet;
use ordalg::theory::{lax_proto1, trunc_monoid};

fn main() {
    let t3 = trunc_monoid_chain(3);
    let monus = t3.theory().symbol_index("⊖").unwrap();
    println!("⊖ on the 3-chain has {} entries:", t3.entries(monus).len());
    for (args, v) in t3.entries(monus) {
        println!("  {} -> {}", t3.tuple_name(&args), t3.name(v));
    }

    // ⊖ is only defined when the second argument is below the first
    let bad = AlgebraBuilder::new(trunc_monoid(), OSet::chain(2))
        .constant("0", "0")
        .op_fn("+", |t| (t[0] + t[1]).min(1))
        .op_fn("⊖", |t| t[0] - t[1])
        .entry("⊖", vec![0, 1], 0)
        .build();
    println!("\n{}", bad.unwrap_err());

    // alpha = second projection breaks theta(alpha(v,w),w) = v
    let wrong = AlgebraBuilder::new(lax_proto1(), OSet::chain(2))
        .constant("0", "0")
        .op_term("alpha", &["x", "y"], "y")
        .op_term("theta", &["x", "y"], "x")
        .build();
    println!("\n{}", wrong.unwrap_err());

    let sq = product_algebra(&t3, &t3).unwrap();
    println!("\nT3 x T3 has {} elements and still validates: {}", sq.size(), sq.revalidate().is_ok());
}
