//! Relations on a concrete matrix under exact rational arithmetic: numeric
//! discovery works in dimensions where fully symbolic discovery is refused
//! by the dimension cap.

use powrel::{
    find_relation_specialized, verify_relation_specialized, DiscoveryOptions, EntrySet, RatMatrix,
};

fn main() {
    let r = RatMatrix::from_i64_entries(
        5,
        &[
            1, 2, 0, 1, -1, //
            3, 0, 1, 1, 2, //
            2, 2, -3, 0, 1, //
            0, 1, 1, 1, 4, //
            5, -2, 1, 0, 2,
        ],
    )
    .unwrap();

    // Five off-diagonal entries: guaranteed dependent for a 5x5 matrix.
    let s = EntrySet::new(5, vec![(1, 2), (2, 1), (1, 3), (3, 1), (2, 3)]).unwrap();
    let rel = find_relation_specialized(&r, &s, &DiscoveryOptions::default()).unwrap();

    println!("entry set: {}", rel.entry_set());
    println!("integer coefficients:");
    for (q, (i, j)) in rel.coeffs().iter().zip(rel.entry_set().entries()) {
        println!("  q[{i},{j}] = {q}");
    }
    println!(
        "verified through m = {}; re-check to m = 20: {}",
        rel.verified_up_to(),
        verify_relation_specialized(&r, &rel, 20).unwrap()
    );
}
