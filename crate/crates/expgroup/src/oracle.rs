//! Independent verification machinery: seeded random expressions,
//! equality-preserving obfuscation, ring-action axiom audits and the
//! evaluation-based separation probe.
//!
//! Obfuscation applies reversible identities backwards — splitting an
//! exponent into a sum, inserting `w·w⁻¹`, rewriting a power through a
//! conjugation, commuting powers of a common base — so the result is a
//! scrambled expression tree provably equal to the seed element. The step
//! catalog is versioned; golden test vectors depend on it.

use crate::elem::{Element, RawExpr};
use crate::error::Error;
use crate::normal::{invert, multiply, normalize};
use crate::ops::{commutes, equals, evaluate_hom, power};
use crate::poly::Poly;
use crate::ring::Ring;
use crate::session::Session;
use crate::word::GenId;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Version of the obfuscation step catalog.
pub const OBFUSCATION_CATALOG_VERSION: u32 = 1;

/// Bounds for seeded random element generation. Generation is deterministic
/// per seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenParams {
    pub alphabet_size: u32,
    pub max_level: u32,
    pub max_syllables: u32,
    pub max_exp_degree: u32,
    pub max_coeff: u64,
    pub seed: u64,
}

impl GenParams {
    fn validate(&self) {
        assert!(self.alphabet_size >= 1, "alphabet_size must be positive");
        assert!(self.max_syllables >= 1, "max_syllables must be positive");
        assert!(self.max_exp_degree >= 1, "max_exp_degree must be positive");
        assert!(self.max_coeff >= 1, "max_coeff must be positive");
    }
}

/// Random expression tree whose normalized level is at most
/// `params.max_level`.
pub fn random_element(params: &GenParams) -> RawExpr {
    params.validate();
    let mut rng = StdRng::seed_from_u64(params.seed);
    gen_expr(&mut rng, params, params.max_level)
}

/// As [`random_element`] but driven by a caller-owned generator, for bulk
/// sampling.
pub fn random_element_with(rng: &mut StdRng, params: &GenParams) -> RawExpr {
    params.validate();
    gen_expr(rng, params, params.max_level)
}

fn gen_expr(rng: &mut StdRng, params: &GenParams, level: u32) -> RawExpr {
    if level == 0 {
        let n = rng.gen_range(1..=params.max_syllables);
        let parts: Vec<RawExpr> = (0..n).map(|_| gen_letter(rng, params)).collect();
        return RawExpr::Product(parts);
    }
    let n = rng.gen_range(1..=params.max_syllables);
    let mut parts = Vec::with_capacity(n as usize * 2);
    for _ in 0..n {
        // alternate lower-level content and ring powers of lower content
        if rng.gen_bool(0.5) {
            parts.push(gen_expr(rng, params, level - 1));
        }
        let base = gen_expr(rng, params, level - 1);
        parts.push(RawExpr::Power(
            Box::new(base),
            gen_poly_noninteger(rng, params),
        ));
    }
    RawExpr::Product(parts)
}

fn gen_letter(rng: &mut StdRng, params: &GenParams) -> RawExpr {
    let g = GenId(rng.gen_range(0..params.alphabet_size));
    let e: i64 = loop {
        let e = rng.gen_range(-(params.max_coeff as i64)..=params.max_coeff as i64);
        if e != 0 {
            break e;
        }
    };
    if e == 1 {
        RawExpr::gen(g)
    } else {
        RawExpr::Power(Box::new(RawExpr::gen(g)), Poly::integer(e))
    }
}

fn gen_poly(rng: &mut StdRng, params: &GenParams) -> Poly {
    let mut p = Poly::zero();
    for d in 0..=params.max_exp_degree {
        if rng.gen_bool(0.6) {
            let c = rng.gen_range(-(params.max_coeff as i64)..=params.max_coeff as i64);
            p = p.add(&Poly::monomial(d, c));
        }
    }
    p
}

fn gen_poly_noninteger(rng: &mut StdRng, params: &GenParams) -> Poly {
    loop {
        let p = gen_poly(rng, params);
        if !p.is_integer() {
            return p;
        }
    }
}

// ---------------------------------------------------------------------------
// obfuscation

/// Rewrites `g` into a scrambled expression tree equal to `g`, applying
/// `steps` reversible identities chosen by `seed`.
pub fn obfuscate(g: &Element, params: &GenParams, seed: u64, steps: u32) -> RawExpr {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut tree = g.to_raw_expr();
    for _ in 0..steps {
        tree = rewrite_somewhere(tree, &mut rng, params);
    }
    tree
}

// Descends to a random node and applies one identity there.
fn rewrite_somewhere(e: RawExpr, rng: &mut StdRng, params: &GenParams) -> RawExpr {
    let descend = rng.gen_bool(0.6);
    if descend {
        match e {
            RawExpr::Product(mut parts) if !parts.is_empty() => {
                let i = rng.gen_range(0..parts.len());
                let child = std::mem::replace(&mut parts[i], RawExpr::Identity);
                parts[i] = rewrite_somewhere(child, rng, params);
                return RawExpr::Product(parts);
            }
            RawExpr::Inverse(x) => {
                return RawExpr::Inverse(Box::new(rewrite_somewhere(*x, rng, params)));
            }
            RawExpr::Power(x, a) => {
                if rng.gen_bool(0.5) {
                    return RawExpr::Power(Box::new(rewrite_somewhere(*x, rng, params)), a);
                }
                return apply_step(RawExpr::Power(x, a), rng, params);
            }
            other => return apply_step(other, rng, params),
        }
    }
    apply_step(e, rng, params)
}

// The catalog. Every arm preserves the value of the node.
fn apply_step(e: RawExpr, rng: &mut StdRng, params: &GenParams) -> RawExpr {
    match rng.gen_range(0..5u32) {
        // insert w·w⁻¹
        0 => {
            let w = gen_expr(rng, params, params.max_level.min(1));
            RawExpr::Product(vec![w.clone(), RawExpr::Inverse(Box::new(w)), e])
        }
        // double inverse
        1 => RawExpr::Inverse(Box::new(RawExpr::Inverse(Box::new(e)))),
        // exponent sum split / power commutation on a common base
        2 => match e {
            RawExpr::Power(x, a) => {
                let b = gen_poly(rng, params);
                let rest = a.sub(&b);
                if rng.gen_bool(0.5) {
                    RawExpr::Product(vec![
                        RawExpr::Power(x.clone(), b),
                        RawExpr::Power(x, rest),
                    ])
                } else {
                    // commuted order: powers of a common base commute
                    RawExpr::Product(vec![
                        RawExpr::Power(x.clone(), rest),
                        RawExpr::Power(x, b),
                    ])
                }
            }
            other => RawExpr::Product(vec![other, RawExpr::Identity]),
        },
        // conjugation rewrite: x^a = h⁻¹ · (h x h⁻¹)^a · h
        3 => {
            let h = gen_expr(rng, params, params.max_level.min(1));
            let (x, a) = match e {
                RawExpr::Power(x, a) => (*x, a),
                other => (other, Poly::one()),
            };
            let hx = RawExpr::Product(vec![
                h.clone(),
                x,
                RawExpr::Inverse(Box::new(h.clone())),
            ]);
            RawExpr::Product(vec![
                RawExpr::Inverse(Box::new(h.clone())),
                RawExpr::Power(Box::new(hx), a),
                h,
            ])
        }
        // unit power wrap
        _ => RawExpr::Power(Box::new(e), Poly::one()),
    }
}

// ---------------------------------------------------------------------------
// axiom audit

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomOutcome {
    Pass,
    Fail,
    Skipped,
}

/// Pass/fail report for the ring-action axioms on one tuple.
#[derive(Clone, Debug)]
pub struct AxiomAudit {
    pub entries: Vec<(&'static str, AxiomOutcome)>,
}

impl AxiomAudit {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|(_, o)| *o != AxiomOutcome::Fail)
    }
}

/// Checks the four axiom families on `(g, h, alpha, beta)` through the
/// equality decision.
pub fn axiom_audit(g: &Element, h: &Element, alpha: &Poly, beta: &Poly) -> AxiomAudit {
    let mut entries = Vec::new();
    let one = Poly::one();
    let zero = Poly::zero();
    let check = |ok: bool| if ok { AxiomOutcome::Pass } else { AxiomOutcome::Fail };

    entries.push(("g^1 = g", check(equals(&power(g, &one), g))));
    entries.push(("g^0 = 1", check(power(g, &zero).is_identity())));
    entries.push((
        "1^alpha = 1",
        check(power(&Element::identity(), alpha).is_identity()),
    ));
    entries.push((
        "g^(alpha+beta) = g^alpha * g^beta",
        check(equals(
            &power(g, &alpha.add(beta)),
            &multiply(&power(g, alpha), &power(g, beta)),
        )),
    ));
    entries.push((
        "g^(alpha*beta) = (g^alpha)^beta",
        check(equals(&power(g, &alpha.mul(beta)), &power(&power(g, alpha), beta))),
    ));
    entries.push((
        "(h^-1*g*h)^alpha = h^-1 * g^alpha * h",
        check(equals(
            &power(&crate::normal::conjugate(g, h), alpha),
            &crate::normal::conjugate(&power(g, alpha), h),
        )),
    ));
    entries.push((
        "[g,h]=1 => (g*h)^alpha = g^alpha * h^alpha",
        if commutes(g, h) {
            check(equals(
                &power(&multiply(g, h), alpha),
                &multiply(&power(g, alpha), &power(h, alpha)),
            ))
        } else {
            AxiomOutcome::Skipped
        },
    ));
    AxiomAudit { entries }
}

// ---------------------------------------------------------------------------
// separation probe

/// One-sided verdict from evaluating at sample points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Some retraction separates the two elements; they are unequal.
    Distinct { point: BigInt },
    /// No sampled point separates them; nothing is claimed.
    IndistinguishableAtSample,
}

/// Compares images of `g` and `h` under the evaluation retractions at the
/// given points. Never claims equality.
pub fn separation_probe(
    g: &Element,
    h: &Element,
    ring: Ring,
    points: &[BigInt],
) -> Result<Verdict, Error> {
    for k in points {
        let wg = evaluate_hom(g, ring, k)?;
        let wh = evaluate_hom(h, ring, k)?;
        if wg != wh {
            return Ok(Verdict::Distinct { point: k.clone() });
        }
    }
    Ok(Verdict::IndistinguishableAtSample)
}

/// Default sample points for exponents of degree at most `max_degree`:
/// `-1, 0, 1, ..., max_degree` (that is, `max_degree + 2` points). A
/// heuristic count, not a completeness bound.
pub fn default_probe_points(max_degree: u32) -> Vec<BigInt> {
    (-1..=max_degree as i64).map(BigInt::from).collect()
}

// ---------------------------------------------------------------------------
// test-vector files

/// One expectation line of a vector file:
/// `EXPECT_EQ <expr> ; <expr>` or `EXPECT_NE <expr> ; <expr>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCase {
    pub expect_equal: bool,
    pub lhs: String,
    pub rhs: String,
}

impl VectorCase {
    pub fn format(&self) -> String {
        let tag = if self.expect_equal {
            "EXPECT_EQ"
        } else {
            "EXPECT_NE"
        };
        format!("{tag} {} ; {}", self.lhs, self.rhs)
    }

    pub fn parse(line: &str) -> Result<Option<VectorCase>, Error> {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            return Ok(None);
        }
        let (tag, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Command(format!("bad vector line `{line}`")))?;
        let expect_equal = match tag {
            "EXPECT_EQ" => true,
            "EXPECT_NE" => false,
            _ => return Err(Error::Command(format!("bad vector tag `{tag}`"))),
        };
        let (lhs, rhs) = rest
            .split_once(';')
            .ok_or_else(|| Error::Command("vector line needs `;`".into()))?;
        Ok(Some(VectorCase {
            expect_equal,
            lhs: lhs.trim().to_string(),
            rhs: rhs.trim().to_string(),
        }))
    }
}

/// Parses and checks one vector line against a session. Returns `None` for
/// comments and blank lines, `Some(true)` when the expectation holds.
pub fn run_vector_line(session: &Session, line: &str) -> Result<Option<bool>, Error> {
    let case = match VectorCase::parse(line)? {
        Some(c) => c,
        None => return Ok(None),
    };
    let lhs = session.eval(&case.lhs)?;
    let rhs = session.eval(&case.rhs)?;
    Ok(Some(equals(&lhs, &rhs) == case.expect_equal))
}

// ---------------------------------------------------------------------------
// selftest sweep used by the CLI

pub(crate) fn selftest(params: &GenParams, cases: u32) -> Result<u32, String> {
    let mut rng = StdRng::seed_from_u64(params.seed.wrapping_add(0x5e1f));
    let mut checks = 0u32;
    for i in 0..cases {
        let g = normalize(&random_element_with(&mut rng, params));
        let h = normalize(&random_element_with(&mut rng, params));
        let alpha = gen_poly(&mut rng, params);
        let beta = gen_poly(&mut rng, params);
        let audit = axiom_audit(&g, &h, &alpha, &beta);
        if !audit.all_passed() {
            return Err(format!("axiom audit failed on case {i}"));
        }
        checks += audit.entries.len() as u32;

        let masked = obfuscate(&g, params, params.seed.wrapping_add(i as u64), 12);
        if !equals(&normalize(&masked), &g) {
            return Err(format!("obfuscation round-trip failed on case {i}"));
        }
        checks += 1;

        let inv_ok = multiply(&g, &invert(&g)).is_identity();
        if !inv_ok {
            return Err(format!("inverse law failed on case {i}"));
        }
        checks += 1;
    }
    Ok(checks)
}
