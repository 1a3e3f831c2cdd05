//! The identities driving everything: the characteristic polynomial
//! det(A - xI), the Cayley-Hamilton equation, the shared order-n entry
//! recurrence, and the off-diagonal window identity
//! sum_{k=1..n} p_k A^k = -det(A) I.

use powrel::render::charpoly_text;
use powrel::{
    cayley_hamilton_check, charpoly, entry_recurrence_check_all, offdiag_window_check, RatMatrix,
    SymMatrix,
};

fn main() {
    let a = SymMatrix::generic(3).unwrap();
    println!("characteristic polynomial of the generic 3x3 matrix:");
    print!("{}", charpoly_text(&charpoly(&a)));
    println!();
    println!(
        "P_A(A) = 0 (Cayley-Hamilton):        {}",
        cayley_hamilton_check(&a)
    );
    println!(
        "order-3 recurrence on all entries:   {}",
        entry_recurrence_check_all(&a, 4)
    );
    println!(
        "window sum is -det(A) I:             {}",
        offdiag_window_check(&a)
    );
    println!();

    // The same checks on an exact rational 5x5 specialization.
    let r = RatMatrix::from_str_rows(&[
        vec![
            "1".into(),
            "1/2".into(),
            "0".into(),
            "3".into(),
            "-2".into(),
        ],
        vec![
            "4".into(),
            "1".into(),
            "-1/3".into(),
            "0".into(),
            "1".into(),
        ],
        vec!["2".into(), "7".into(), "5".into(), "1".into(), "0".into()],
        vec![
            "0".into(),
            "-1".into(),
            "2/5".into(),
            "1".into(),
            "1".into(),
        ],
        vec!["3".into(), "0".into(), "1".into(), "-4".into(), "2".into()],
    ])
    .unwrap();
    println!("exact rational 5x5 specialization:");
    println!(
        "Cayley-Hamilton:                     {}",
        cayley_hamilton_check(&r)
    );
    println!(
        "order-5 recurrence on all entries:   {}",
        entry_recurrence_check_all(&r, 4)
    );
    println!(
        "window sum is -det(A) I:             {}",
        offdiag_window_check(&r)
    );
}
