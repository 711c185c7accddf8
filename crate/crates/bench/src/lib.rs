//! Shared inputs for the search benchmarks.

use fano_core::steiner::{cyclic_sts, triple};
use fano_core::TripleSystem;

/// The plane generated by `{0,1,3}` mod 7.
pub fn b1() -> TripleSystem {
    cyclic_sts(7, &[triple(0, 1, 3)]).expect("013 generates a Fano plane")
}

/// The plane generated by `{0,1,5}` mod 7.
pub fn b2() -> TripleSystem {
    cyclic_sts(7, &[triple(0, 1, 5)]).expect("015 generates a Fano plane")
}
