//! Deciding equality three ways: reduced product, the shift matcher, and the
//! one-sided evaluation probe.
//!
//! Run with `cargo run --example word_problem`.

use expgroup::{equals, reduced_forms_match, separation_probe, Ring, Session, Verdict};
use num_bigint::BigInt;

fn main() {
    let session = Session::new(&["a", "b"], Ring::IntPoly, 0).unwrap();

    let pairs = [
        ("a^(t)*b", "a^(t+1)*a^-1*b"),
        ("a^(t)*a^(t)", "a^(2*t)"),
        ("a^(t)", "b^(t)"),
        ("a^(t)", "a^(t^2)"),
        ("(a^(t)*b)^(t)", "(a^(t)*b)^(t)*b*b^-1"),
    ];

    let points: Vec<BigInt> = (-2i64..=3).map(BigInt::from).collect();
    println!("pair: equals / matcher / probe at t in -2..=3");
    for (x, y) in pairs {
        let g = session.eval(x).unwrap();
        let h = session.eval(y).unwrap();
        let eq = equals(&g, &h);
        let matched = reduced_forms_match(&g, &h);
        let probe = separation_probe(&g, &h, Ring::IntPoly, &points).unwrap();
        assert_eq!(eq, matched, "equality routes disagree");
        if let Verdict::Distinct { .. } = probe {
            assert!(!eq, "probe contradicted equality");
        }
        println!(
            "  {x:24} vs {y:24}: {eq} / {matched} / {}",
            match probe {
                Verdict::Distinct { point } => format!("separated at t={point}"),
                Verdict::IndistinguishableAtSample => "indistinguishable at sample".to_string(),
            }
        );
    }
}
