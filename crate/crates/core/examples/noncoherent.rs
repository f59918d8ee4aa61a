//! The ideal argument replayed on truncated monoids.

use std::sync::Arc;

use ordalg::checks::check_noncoherent_ideals;
use ordalg::corpus::trunc_monoid_chain;
use ordalg::relations::DEFAULT_CAP;

fn main() {
    for (n, m) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
        let a = Arc::new(trunc_monoid_chain(n));
        let b = Arc::new(trunc_monoid_chain(m));
        let r = check_noncoherent_ideals(&a, &b, DEFAULT_CAP).unwrap();
        println!("{n}-chain -> {m}-chain: {} ({} ideals)", r.verdict, r.diagnostics["ideals"]);
    }
}
