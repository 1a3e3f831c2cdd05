//! Counts inequivalent entry subsets under index relabeling, with and
//! without transposition: 4 off-diagonal classes for n = 3 and 27 for
//! n = 4 under relabeling alone.

use powrel::{classify_subsets, Group};

fn main() {
    for (n, size) in [(2usize, 2usize), (3, 3), (4, 4)] {
        for group in [Group::Perm, Group::PermTranspose] {
            let classes = classify_subsets(n, size, true, group);
            let subsets: usize = classes.iter().map(|c| c.orbit_size).sum();
            println!(
                "n = {n}, off-diagonal subsets of size {size}, group {group}: {} classes ({} subsets)",
                classes.len(),
                subsets
            );
        }
    }
    println!();
    println!("representatives for n = 3 under relabeling:");
    for class in classify_subsets(3, 3, true, Group::Perm) {
        println!(
            "  {} (orbit size {})",
            class.representative, class.orbit_size
        );
    }
}
