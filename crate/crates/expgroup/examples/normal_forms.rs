//! Parsing expressions and bringing them to the stored normal form.
//!
//! Run with `cargo run --example normal_forms`.

use expgroup::{Ring, Session};

fn main() {
    let session = Session::new(&["a", "b"], Ring::IntPoly, 0).unwrap();

    let inputs = [
        "a*a^-1",
        "a^(t)*a^(t)",
        "b*a^(t+1)*a^-1",
        "a^(t)*b*b^-1*a^(-t)",
        "(a^(t)*b)^(t)",
        "b^-1*a^(3*t^2+1)*b",
        "a^5*b^-2*b^2*a^-5*a^(t)",
    ];
    println!("input -> normal form [level, syllable length]");
    for src in inputs {
        let g = session.eval(src).unwrap();
        println!(
            "  {src:30} -> {:24} [{}, {}]",
            session.show(&g),
            g.level(),
            g.syllable_length()
        );
    }

    // The stored form is unique per group element, so two routes to the same
    // element produce identical values.
    let lhs = session.eval("a^(t)*b*b^-1*a^(t^2)").unwrap();
    let rhs = session.eval("a^(t^2+t)").unwrap();
    assert_eq!(lhs, rhs);
    println!("\nunique forms: a^(t)*b*b^-1*a^(t^2) and a^(t^2+t) store identically");
}
