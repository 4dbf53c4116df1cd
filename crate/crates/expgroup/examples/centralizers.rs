//! Root extraction, centralizers and commutation.
//!
//! Run with `cargo run --example centralizers`.

use expgroup::{centralizer, commutes, extract_root, power, Poly, Ring, Session};

fn main() {
    let session = Session::new(&["a", "b"], Ring::IntPoly, 0).unwrap();

    println!("maximal root decompositions g = c^-1 * z^e * c:");
    for src in ["a^4", "b^-1*a^(t)*b", "a^(t)*b*a^(t)*b", "(a*b)^3", "a^(t)*b"] {
        let g = session.eval(src).unwrap();
        let rd = extract_root(&g).unwrap();
        println!(
            "  {src:18} -> z = {:10} e = {:6} c = {}",
            session.show(rd.root.body()),
            rd.exponent.format(),
            session.show(&rd.conjugator)
        );
    }

    // centralizers are rank-one modules over the exponent ring: every member
    // is a ring power of the root, conjugated into place
    let g = session.eval("b^-1*a^2*b").unwrap();
    let handle = centralizer(&g).unwrap();
    println!(
        "\ncentralizer of b^-1*a^2*b: conjugates of powers of {}",
        session.show(handle.root.body())
    );
    for src in ["b^-1*a^(3*t^2)*b", "b^-1*a^-7*b", "a^(t)", "b"] {
        let h = session.eval(src).unwrap();
        println!("  contains {src:18}: {}", handle.contains(&h));
    }

    // commutation is transitive away from the identity
    let z = session.eval("a^(t)*b").unwrap();
    let x = power(&z, &Poly::indeterminate());
    let y = power(&z, &session.ring().parse("t^2-4*t").unwrap());
    assert!(commutes(&x, &y));
    println!("\npowers of a common root commute: (a^(t)*b)^(t) with (a^(t)*b)^(t^2-4*t)");
}
