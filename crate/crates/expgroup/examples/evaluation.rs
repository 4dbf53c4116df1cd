//! Evaluation homomorphisms onto the free group.
//!
//! Every substitution `t := k` retracts the exponential group onto the plain
//! free group; these retractions jointly separate elements and give a cheap
//! necessary condition for equality.
//!
//! Run with `cargo run --example evaluation`.

use expgroup::{evaluate_hom, multiply, Ring, Session};
use num_bigint::BigInt;

fn main() {
    let session = Session::new(&["a", "b"], Ring::IntPoly, 0).unwrap();

    let g = session.eval("a^(t^2)*b*a^(-t)").unwrap();
    println!("images of a^(t^2)*b*a^(-t):");
    for k in -2i64..=3 {
        let w = evaluate_hom(&g, Ring::IntPoly, &BigInt::from(k)).unwrap();
        println!("  t={k:2}: {}", w.format(session.alphabet()));
    }

    // evaluation commutes with multiplication
    let x = session.eval("(a^(t)*b)^(t+1)").unwrap();
    let y = session.eval("b^-1*a^(2*t)").unwrap();
    let xy = multiply(&x, &y);
    for k in -2i64..=3 {
        let k = BigInt::from(k);
        let lhs = evaluate_hom(&xy, Ring::IntPoly, &k).unwrap();
        let rhs = evaluate_hom(&x, Ring::IntPoly, &k)
            .unwrap()
            .multiply(&evaluate_hom(&y, Ring::IntPoly, &k).unwrap());
        assert_eq!(lhs, rhs);
    }
    println!("\nhomomorphism law checked for (a^(t)*b)^(t+1) * b^-1*a^(2*t) at t in -2..=3");

    // exponents of higher degree need more points to separate
    let g = session.eval("a^(t)").unwrap();
    let h = session.eval("a^(t^2)").unwrap();
    for k in 0i64..=2 {
        let k = BigInt::from(k);
        let same = evaluate_hom(&g, Ring::IntPoly, &k).unwrap()
            == evaluate_hom(&h, Ring::IntPoly, &k).unwrap();
        println!("a^(t) vs a^(t^2) at t={k}: images {}", if same { "agree" } else { "differ" });
    }
}
