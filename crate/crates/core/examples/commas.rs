//! Comma objects and kernels.

use std::sync::Arc;

use ordalg::algebra::{comma_algebra, kernel_comma_with, Homomorphism, Side};
use ordalg::corpus::{bottom_chain_model, trunc_monoid_chain};

fn main() {
    let chain = Arc::new(bottom_chain_model(3));
    let id = Homomorphism::identity(chain.clone());
    let c = comma_algebra(&id, &id).unwrap();
    println!("id/id on the 3-chain: {} pairs {:?}", c.pairs.len(), c.pairs);
    let k = kernel_comma_with(&id, Side::Lax).unwrap();
    println!("lax kernel of id: {:?}", k.members);
    let k = kernel_comma_with(&id, Side::Colax).unwrap();
    println!("colax kernel of id: {:?}", k.members);

    // with the partial ⊖ the same comma is not a subalgebra
    let t = Arc::new(trunc_monoid_chain(3));
    let id = Homomorphism::identity(t.clone());
    println!("\nid/id on the truncated monoid: {}", comma_algebra(&id, &id).unwrap_err());
    let zero = Homomorphism::to_terminal(t.clone()).unwrap().then(&Homomorphism::from_zero(t.clone()).unwrap()).unwrap();
    let c = comma_algebra(&zero, &id).unwrap();
    println!("0/id on the truncated monoid: {} pairs", c.pairs.len());
}
