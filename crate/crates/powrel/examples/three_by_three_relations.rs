//! Discovers the 3x3 invariance relation on the entries (1,2), (1,3), (2,1)
//! and then the full report: one relation per inequivalent off-diagonal
//! entry set (four classes under relabeling).

use powrel::render::{relation_latex, relation_text, report_text};
use powrel::{find_relation, relation_report, DiscoveryOptions, EntrySet, Group, SymMatrix};

fn main() {
    let a = SymMatrix::generic(3).unwrap();
    let s = EntrySet::new(3, vec![(1, 2), (1, 3), (2, 1)]).unwrap();
    let rel = find_relation(&a, &s, &DiscoveryOptions::default()).unwrap();

    println!("== one entry set ==");
    println!("{}", relation_text(&rel));
    println!();
    println!("LaTeX:");
    println!("{}", relation_latex(&rel));
    println!();

    println!("== full off-diagonal report for n = 3 ==");
    let report = relation_report(3, true, Group::Perm, &DiscoveryOptions::default()).unwrap();
    print!("{}", report_text(&report));
}
