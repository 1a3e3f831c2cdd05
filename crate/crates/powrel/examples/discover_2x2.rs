//! The 2x2 anti-diagonal invariance: for any 2x2 matrix, the ratio of the
//! two anti-diagonal entries is the same for every power. Discovered here
//! as a kernel relation and verified symbolically.

use powrel::{find_relation, verify_relation, DiscoveryOptions, EntrySet, SymMatrix};

fn main() {
    let a = SymMatrix::generic(2).unwrap();
    let s = EntrySet::new(2, vec![(1, 2), (2, 1)]).unwrap();
    let rel = find_relation(&a, &s, &DiscoveryOptions::default()).unwrap();

    println!("entry set: {}", rel.entry_set());
    println!("relation:  {}", powrel::render::relation_text(&rel));
    println!("verified symbolically for m = 1..{}", rel.verified_up_to());

    let still_holds = verify_relation(&a, &rel, 12).unwrap();
    println!("re-checked through m = 12: {still_holds}");
}
