//! Emits a deterministic test-vector file on stdout: obfuscation pairs as
//! `EXPECT_EQ` lines and probe-separated pairs as `EXPECT_NE` lines.
//!
//! The committed golden file was produced by
//! `cargo run --example make_vectors > tests/data/vectors_v1.txt`.

use expgroup::{
    equals, normalize, obfuscate, random_element_with, separation_probe, GenParams, Ring, Session,
    VectorCase, Verdict, OBFUSCATION_CATALOG_VERSION,
};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() {
    let session = Session::new(&["a", "b"], Ring::IntPoly, 0).unwrap();
    let params = GenParams {
        alphabet_size: 2,
        max_level: 2,
        max_syllables: 3,
        max_exp_degree: 2,
        max_coeff: 3,
        seed: 2718,
    };
    let mut rng = StdRng::seed_from_u64(2718);
    let points: Vec<BigInt> = (-2i64..=3).map(BigInt::from).collect();

    println!("# expgroup test vectors, obfuscation catalog v{OBFUSCATION_CATALOG_VERSION}");
    println!("# alphabet a,b over ring zt; seed 2718");
    let mut eq_lines = 0;
    let mut ne_lines = 0;
    while eq_lines < 20 || ne_lines < 20 {
        let g = normalize(&random_element_with(&mut rng, &params));
        if eq_lines < 20 {
            let masked = obfuscate(&g, &params, 1000 + eq_lines as u64, 8);
            assert!(equals(&normalize(&masked), &g));
            println!(
                "{}",
                VectorCase {
                    expect_equal: true,
                    lhs: session.show(&g),
                    rhs: session.show_expr(&masked),
                }
                .format()
            );
            eq_lines += 1;
        }
        if ne_lines < 20 {
            let h = normalize(&random_element_with(&mut rng, &params));
            if let Verdict::Distinct { .. } =
                separation_probe(&g, &h, Ring::IntPoly, &points).unwrap()
            {
                println!(
                    "{}",
                    VectorCase {
                        expect_equal: false,
                        lhs: session.show(&g),
                        rhs: session.show(&h),
                    }
                    .format()
                );
                ne_lines += 1;
            }
        }
    }
}
