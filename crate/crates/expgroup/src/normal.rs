//! Multiplication, inversion and normalization of leveled elements.
//!
//! Products are assembled by a builder that keeps the alternating form
//! reduced while parts are appended: a power factor merges with the previous
//! one when they share a root and the pending separator is an integer power
//! of that root, and a factor whose exponent becomes an integer collapses
//! into lower-level content. A final canonicalization pass then pins the
//! stored form: every exponent is the zero-constant-term representative of
//! its class modulo the integers, with integer parts pushed rightward into
//! the following separator, and every separator is the least element of its
//! coset modulo right multiplication by the adjacent root. The result is one
//! stored form per group element.

use crate::elem::{Composite, Element, PowerFactor, RawExpr, Root};
use crate::poly::Poly;
use crate::word::Word;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Reduced product of two elements.
pub fn multiply(a: &Element, b: &Element) -> Element {
    if a.is_identity() {
        return b.clone();
    }
    if b.is_identity() {
        return a.clone();
    }
    if let (Element::Word(x), Element::Word(y)) = (a, b) {
        return Element::Word(x.multiply(y));
    }
    let level = a.level().max(b.level());
    let mut builder = Builder::new(level);
    builder.push_element(a);
    builder.push_element(b);
    builder.finish()
}

pub fn multiply3(a: &Element, b: &Element, c: &Element) -> Element {
    multiply(&multiply(a, b), c)
}

/// Conjugate `c⁻¹ · g · c`.
pub fn conjugate(g: &Element, c: &Element) -> Element {
    multiply3(&invert(c), g, c)
}

pub fn invert(e: &Element) -> Element {
    match e {
        Element::Word(w) => Element::Word(w.invert()),
        Element::Composite(c) => {
            let mut builder = Builder::new(c.level);
            builder.push_element(&invert(&c.tail));
            for (u, p) in c.pairs.iter().rev() {
                builder.push_factor(&p.root, p.exponent.neg());
                builder.push_element(&invert(u));
            }
            builder.finish()
        }
    }
}

/// `g^n` for an integer `n`, by binary powering.
pub fn pow_int(g: &Element, n: &BigInt) -> Element {
    if n.is_zero() || g.is_identity() {
        return Element::identity();
    }
    if let Element::Word(w) = g {
        return Element::Word(w.pow_int(n));
    }
    let base = if n.is_negative() { invert(g) } else { g.clone() };
    let mut remaining = n.abs();
    let mut acc = Element::identity();
    let mut sq = base;
    let one = BigInt::from(1);
    loop {
        if (&remaining & &one) == one {
            acc = multiply(&acc, &sq);
        }
        remaining >>= 1;
        if remaining.is_zero() {
            break;
        }
        sq = multiply(&sq, &sq);
    }
    acc
}

/// Integer power of a root, as lower-level content.
pub fn root_power(v: &Root, n: &BigInt) -> Element {
    pow_int(v.body(), n)
}

/// A single power factor `v^a` as an element (`a` need not be in the
/// transversal; the finishing pass pins it).
pub fn factor_element(v: &Root, exponent: Poly) -> Element {
    if let Some(n) = exponent.as_integer() {
        return root_power(v, &n);
    }
    let mut builder = Builder::new(v.level() + 1);
    builder.push_factor(v, exponent);
    builder.finish()
}

/// Evaluates an expression tree to a normalized element.
pub fn normalize(expr: &RawExpr) -> Element {
    match expr {
        RawExpr::Identity => Element::identity(),
        RawExpr::Gen(g, sign) => Element::Word(Word::generator_power(*g, *sign as i64)),
        RawExpr::Product(parts) => {
            let mut acc = Element::identity();
            for p in parts {
                acc = multiply(&acc, &normalize(p));
            }
            acc
        }
        RawExpr::Inverse(x) => invert(&normalize(x)),
        RawExpr::Power(x, a) => crate::ops::power(&normalize(x), a),
    }
}

/// Incremental assembler for alternating forms at a fixed level.
pub(crate) struct Builder {
    level: u32,
    pairs: Vec<(Element, PowerFactor)>,
    tail: Element,
}

impl Builder {
    pub(crate) fn new(level: u32) -> Builder {
        assert!(level >= 1, "builder level must be positive");
        Builder {
            level,
            pairs: Vec::new(),
            tail: Element::identity(),
        }
    }

    pub(crate) fn push_element(&mut self, e: &Element) {
        if e.level() < self.level {
            self.push_separator(e);
            return;
        }
        debug_assert_eq!(e.level(), self.level, "element above builder level");
        match e {
            Element::Composite(c) => {
                for (u, p) in &c.pairs {
                    self.push_separator(u);
                    self.push_factor(&p.root, p.exponent.clone());
                }
                self.push_separator(&c.tail);
            }
            Element::Word(_) => unreachable!("words have level 0"),
        }
    }

    pub(crate) fn push_separator(&mut self, u: &Element) {
        if u.is_identity() {
            return;
        }
        self.tail = multiply(&self.tail, u);
    }

    pub(crate) fn push_factor(&mut self, root: &Root, exponent: Poly) {
        debug_assert_eq!(root.level() + 1, self.level, "root level mismatch");
        if let Some(n) = exponent.as_integer() {
            // integer powers are lower-level content, never factors
            let content = root_power(root, &n);
            self.push_separator(&content);
            return;
        }
        if let Some((_, last)) = self.pairs.last() {
            if last.root == *root {
                if let Some(k) = crate::ops::power_membership(&self.tail, root) {
                    let (u_prev, last) = self.pairs.pop().unwrap();
                    let merged = last
                        .exponent
                        .add(&Poly::integer(k))
                        .add(&exponent);
                    self.tail = u_prev;
                    // re-dispatch: handles both the integer collapse and the
                    // surviving merged factor
                    self.push_factor(root, merged);
                    return;
                }
            }
        }
        let sep = std::mem::replace(&mut self.tail, Element::identity());
        self.pairs.push((
            sep,
            PowerFactor {
                root: root.clone(),
                exponent,
            },
        ));
    }

    /// Runs the canonicalization pass and produces the element.
    pub(crate) fn finish(self) -> Element {
        if self.pairs.is_empty() {
            return self.tail;
        }
        let level = self.level;
        let mut out: Vec<(Element, PowerFactor)> = Vec::with_capacity(self.pairs.len());
        let mut carry = Element::identity();
        for (u, p) in self.pairs {
            let incoming = multiply(&carry, &u);
            let (sep, j) = strip_right(&incoming, &p.root);
            let e = p.exponent.add_integer(&j);
            let (int_part, rep) = e.split_integer();
            debug_assert!(!rep.is_zero(), "factor exponent collapsed to an integer");
            out.push((
                sep,
                PowerFactor {
                    root: p.root.clone(),
                    exponent: rep,
                },
            ));
            carry = root_power(&p.root, &int_part);
        }
        let tail = multiply(&carry, &self.tail);
        Element::Composite(Composite {
            level,
            pairs: out,
            tail: Box::new(tail),
        })
    }
}

/// Canonical representative of the coset `u · ⟨v⟩`: returns `(rep, j)` with
/// `u = rep · v^j` and `rep` least in the fixed element order. Well defined
/// on cosets: the candidate walk is anchored at the coset itself.
pub(crate) fn strip_right(u: &Element, v: &Root) -> (Element, BigInt) {
    if u.is_identity() {
        return (Element::identity(), BigInt::zero());
    }
    if u.level() < v.level() {
        // any nonzero power raises the level, so u itself is least
        return (u.clone(), BigInt::zero());
    }
    debug_assert!(
        u.level() == v.level(),
        "separator above adjacent root level"
    );
    if let (Element::Word(uw), Element::Word(vw)) = (u, v.body()) {
        if vw.syllable_count() == 1 {
            return word_strip_single(uw, vw);
        }
    }
    strip_by_walk(u, v)
}

// v is a single-syllable primitive word g^{±1}: the coset minimum is where
// the trailing g-syllable of u vanishes; solved arithmetically so huge
// run-length exponents never enumerate.
fn word_strip_single(u: &Word, v: &Word) -> (Element, BigInt) {
    let vs = &v.syllables()[0];
    debug_assert!(vs.exp.abs() == BigInt::from(1));
    let anchor: BigInt = match u.syllables().last() {
        Some(last) if last.gen == vs.gen => -(&last.exp * &vs.exp),
        _ => BigInt::zero(),
    };
    let mut best: Option<(Word, BigInt)> = None;
    for d in -1i64..=1 {
        let k = &anchor + d;
        let cand = u.multiply(&v.pow_int(&k));
        if best.as_ref().is_none_or(|(b, _)| cand < *b) {
            best = Some((cand, k));
        }
    }
    let (rep, k) = best.unwrap();
    (Element::Word(rep), -k)
}

// Level-lexicographic weight used to locate the coset minimum: dropping a
// level always beats any syllable count at the higher level.
fn coset_weight(e: &Element) -> (u32, BigInt) {
    match e {
        Element::Word(w) => (0, w.letter_len()),
        Element::Composite(c) => (c.level, BigInt::from(c.pairs.len())),
    }
}

// Walks u·body^k along the coset: descends the weight, scans flat stretches,
// and restarts whenever a strictly smaller basin shows up past a plateau.
// The weight valley over k has a single basin, so the walk lands on the same
// elements from every starting point of the coset.
fn strip_by_walk(u: &Element, v: &Root) -> (Element, BigInt) {
    let body = v.body().clone();
    let binv = invert(&body);
    let step = |e: &Element, dir: i8| -> Element {
        if dir > 0 {
            multiply(e, &body)
        } else {
            multiply(e, &binv)
        }
    };
    let guard = 64 * (u.size() + v.body().size() + 4);
    let mut steps = 0usize;
    let spend = |steps: &mut usize| {
        *steps += 1;
        assert!(*steps <= guard, "coset walk exceeded its bound");
    };

    let mut cur = u.clone();
    let mut k = BigInt::zero();
    'restart: loop {
        // strict descent
        loop {
            spend(&mut steps);
            let down = step(&cur, -1);
            let up = step(&cur, 1);
            let wc = coset_weight(&cur);
            let wd = coset_weight(&down);
            let wu = coset_weight(&up);
            if wd < wc && wd <= wu {
                cur = down;
                k -= 1;
            } else if wu < wc {
                cur = up;
                k += 1;
            } else {
                break;
            }
        }
        // scan the flat bottom; restart if a lower basin lies just beyond
        let bottom = coset_weight(&cur);
        let mut best = (cur.clone(), k.clone());
        for walk_dir in [1i8, -1] {
            let mut probe = cur.clone();
            let mut pk = k.clone();
            loop {
                spend(&mut steps);
                probe = step(&probe, walk_dir);
                pk += walk_dir;
                let w = coset_weight(&probe);
                if w < bottom {
                    cur = probe;
                    k = pk;
                    continue 'restart;
                }
                if w > bottom {
                    break;
                }
                if probe < best.0 {
                    best = (probe.clone(), pk.clone());
                }
            }
        }
        let (rep, k) = best;
        return (rep, -k);
    }
}
