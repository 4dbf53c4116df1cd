//! The conjugacy problem with explicit witnesses.
//!
//! Run with `cargo run --example conjugacy`.

use expgroup::{conjugate, conjugate_test, cyclic_reduce, equals, Ring, Session};

fn main() {
    let session = Session::new(&["a", "b"], Ring::IntPoly, 0).unwrap();

    // cyclic reduction peels conjugating layers
    let g = session.eval("a^(-t)*b*a^(t)").unwrap();
    let (conj, core) = cyclic_reduce(&g);
    println!(
        "cyclic reduction: a^(-t)*b*a^(t) = c^-1 * {} * c with c = {}",
        session.show(&core),
        session.show(&conj)
    );
    assert!(equals(&conjugate(&core, &conj), &g));

    let pairs = [
        ("a^(t)*b", "b*a^(t)"),
        ("a^(t)*b", "a^(t-1)*b*a"),
        ("a", "b"),
        ("a^(t)", "b^(t)"),
        ("a^(t)", "a^(t^2)"),
        ("a^(t)*b*a^(t^2)*b", "a^(t^2)*b*a^(t)*b"),
    ];
    println!("\nconjugacy tests:");
    for (x, y) in pairs {
        let g = session.eval(x).unwrap();
        let h = session.eval(y).unwrap();
        match conjugate_test(&g, &h) {
            Some(c) => {
                assert!(equals(&conjugate(&g, &c), &h), "witness failed to verify");
                println!("  {x:24} ~ {y:24} via c = {}", session.show(&c));
            }
            None => println!("  {x:24} !~ {y}"),
        }
    }

    // constructed conjugates always come back with verifying witnesses
    let g = session.eval("(a^(t)*b)^(t)*a").unwrap();
    let w = session.eval("b^2*a^(t)*b^-1").unwrap();
    let h = conjugate(&g, &w);
    let c = conjugate_test(&g, &h).expect("conjugate pair");
    assert!(equals(&conjugate(&g, &c), &h));
    println!(
        "\nround trip at level {}: recovered witness {}",
        g.level(),
        session.show(&c)
    );
}
