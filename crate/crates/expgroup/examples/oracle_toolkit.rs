//! The self-verification toolkit: seeded generation, equality-preserving
//! obfuscation, axiom audits, and test-vector lines.
//!
//! Run with `cargo run --example oracle_toolkit`.

use expgroup::{
    axiom_audit, equals, normalize, obfuscate, random_element, run_vector_line, GenParams, Ring,
    Session, VectorCase, OBFUSCATION_CATALOG_VERSION,
};

fn main() {
    let session = Session::new(&["a", "b"], Ring::IntPoly, 0).unwrap();
    let params = GenParams {
        alphabet_size: 2,
        max_level: 2,
        max_syllables: 3,
        max_exp_degree: 2,
        max_coeff: 3,
        seed: 12,
    };

    // a deterministic random element and a scrambled equal expression
    let g = normalize(&random_element(&params));
    println!("seed 12 element: {}", session.show(&g));
    let masked = obfuscate(&g, &params, 99, 10);
    let back = normalize(&masked);
    assert!(equals(&back, &g));
    assert_eq!(back, g);
    println!(
        "obfuscation (catalog v{OBFUSCATION_CATALOG_VERSION}, 10 steps) normalizes back to it"
    );

    // axiom audit on a sample tuple
    let h = session.eval("b^-1*a^(t)").unwrap();
    let alpha = session.ring().parse("t+1").unwrap();
    let beta = session.ring().parse("t^2-2").unwrap();
    let audit = axiom_audit(&g, &h, &alpha, &beta);
    println!("\naxiom audit against h = b^-1*a^(t), alpha = t+1, beta = t^2-2:");
    for (name, outcome) in &audit.entries {
        println!("  {name:45} {outcome:?}");
    }
    assert!(audit.all_passed());

    // vector-file lines drive golden tests
    let case = VectorCase {
        expect_equal: true,
        lhs: session.show(&g),
        rhs: "1".to_string(),
    };
    let line = case.format();
    println!("\nvector line: {line}");
    let holds = run_vector_line(&session, &line).unwrap().unwrap();
    println!("expectation holds: {holds}");
}
