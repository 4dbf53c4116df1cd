//! The leveled element model.
//!
//! An element is either a plain free-group word (level 0) or a composite of
//! level `n >= 1`: an alternating sequence
//!
//! ```text
//!     u_1 · v_1^{a_1} · u_2 · v_2^{a_2} · ... · u_m · v_m^{a_m} · u_{m+1}
//! ```
//!
//! where every root `v_i` is a canonical primitive of level `n-1`, every
//! exponent `a_i` is a non-integer polynomial, every separator `u_i` has
//! level `< n`, and a separator strictly between two equal roots is never an
//! integer power of that root. Normalized values additionally keep exponents
//! in the zero-constant-term transversal and separators coset-reduced, which
//! makes the stored form unique per group element: structural equality is
//! group equality.

use crate::poly::Poly;
use crate::word::{Alphabet, GenId, Word};
use num_bigint::BigInt;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A canonical primitive root: the body is cyclically reduced, primitive,
/// lexicographically least among all of its rotations and its inverse's
/// rotations, and linearized to start at a power factor. One such value
/// exists per extended centralizer, so two roots are equal exactly when
/// their bodies are structurally equal.
#[derive(Clone, Debug)]
pub struct Root {
    body: Arc<Element>,
    level: u32,
}

impl Root {
    /// Wraps a body already in canonical root form. Callers outside the
    /// normalization machinery should obtain roots from `extract_root`.
    pub(crate) fn from_canonical_body(body: Element) -> Root {
        let level = body.level();
        Root {
            body: Arc::new(body),
            level,
        }
    }

    pub fn body(&self) -> &Element {
        &self.body
    }

    pub fn level(&self) -> u32 {
        self.level
    }
}

impl PartialEq for Root {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.body, &other.body) || self.body == other.body
    }
}

impl Eq for Root {}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.body.cmp(&other.body)
    }
}

/// A root raised to a non-integer ring exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerFactor {
    pub root: Root,
    pub exponent: Poly,
}

/// Alternating reduced form of level `>= 1`. `pairs[i] = (u_{i+1}, p_{i+1})`
/// and `tail = u_{m+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composite {
    pub(crate) level: u32,
    pub(crate) pairs: Vec<(Element, PowerFactor)>,
    pub(crate) tail: Box<Element>,
}

#[derive(Clone, PartialEq, Eq)]
pub enum Element {
    Word(Word),
    Composite(Composite),
}

impl Element {
    pub fn identity() -> Element {
        Element::Word(Word::identity())
    }

    pub fn from_word(w: Word) -> Element {
        Element::Word(w)
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Element::Word(w) if w.is_identity())
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Element::Word(w) => Some(w),
            Element::Composite(_) => None,
        }
    }

    /// Tower stage of the element: 0 for words, the composite level otherwise.
    pub fn level(&self) -> u32 {
        match self {
            Element::Word(_) => 0,
            Element::Composite(c) => c.level,
        }
    }

    /// Syllable length: letter count for words, the number of power factors
    /// for composite levels.
    pub fn syllable_length(&self) -> BigInt {
        match self {
            Element::Word(w) => w.letter_len(),
            Element::Composite(c) => BigInt::from(c.pairs.len()),
        }
    }

    pub(crate) fn composite(&self) -> Option<&Composite> {
        match self {
            Element::Composite(c) => Some(c),
            Element::Word(_) => None,
        }
    }

    /// Number of power factors at the top level.
    pub fn factor_count(&self) -> usize {
        match self {
            Element::Word(_) => 0,
            Element::Composite(c) => c.pairs.len(),
        }
    }

    /// Structural size: total count of syllables and power factors at every
    /// level. Subadditive under multiplication; used for search windows.
    pub fn size(&self) -> usize {
        match self {
            Element::Word(w) => w.syllable_count(),
            Element::Composite(c) => {
                let mut n = 0;
                for (u, p) in &c.pairs {
                    n += 1 + u.size() + p.root.body().size();
                }
                n + c.tail.size()
            }
        }
    }

    /// Verifies the reduced-form invariants recursively, returning a
    /// description of the first violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        match self {
            Element::Word(w) => {
                let sylls = w.syllables();
                for i in 0..sylls.len() {
                    if sylls[i].exp == BigInt::from(0) {
                        return Err("zero exponent syllable".to_string());
                    }
                    if i > 0 && sylls[i].gen == sylls[i - 1].gen {
                        return Err("unmerged adjacent syllables".to_string());
                    }
                }
                Ok(())
            }
            Element::Composite(c) => {
                if c.level == 0 {
                    return Err("composite at level 0".to_string());
                }
                if c.pairs.is_empty() {
                    return Err("composite without power factors".to_string());
                }
                for (i, (u, p)) in c.pairs.iter().enumerate() {
                    if u.level() >= c.level {
                        return Err(format!("separator {i} at level {}", u.level()));
                    }
                    u.check_invariants()?;
                    if p.root.level() != c.level - 1 {
                        return Err(format!(
                            "root level {} inside level {}",
                            p.root.level(),
                            c.level
                        ));
                    }
                    p.root.body().check_invariants()?;
                    if p.exponent.is_integer() {
                        return Err("integer exponent in power factor".to_string());
                    }
                    if p.exponent.constant_term() != BigInt::from(0) {
                        return Err("exponent outside the transversal".to_string());
                    }
                    if i > 0 && c.pairs[i - 1].1.root == p.root {
                        // the separator between equal roots must not be a
                        // power of that root
                        if crate::ops::power_membership(u, &p.root).is_some() {
                            return Err("absorbable separator between equal roots".to_string());
                        }
                    }
                }
                if c.tail.level() >= c.level {
                    return Err("tail at composite level".to_string());
                }
                c.tail.check_invariants()
            }
        }
    }

    /// Rewrites the stored form by sliding `v_i^n` out of factor `i` into the
    /// following separator. The result denotes the same group element but is
    /// no longer in canonical shape; it exists so the shift matcher can be
    /// exercised against nontrivial reduced forms.
    #[doc(hidden)]
    pub fn exponent_shifted(&self, i: usize, n: i64) -> Option<Element> {
        let mut c = match self {
            Element::Composite(c) => c.clone(),
            Element::Word(_) => return None,
        };
        if i >= c.pairs.len() {
            return None;
        }
        let root = c.pairs[i].1.root.clone();
        c.pairs[i].1.exponent = c.pairs[i].1.exponent.add_integer(&BigInt::from(n));
        let shift = crate::normal::pow_int(root.body(), &BigInt::from(-n));
        if i + 1 < c.pairs.len() {
            c.pairs[i + 1].0 = crate::normal::multiply(&shift, &c.pairs[i + 1].0);
        } else {
            c.tail = Box::new(crate::normal::multiply(&shift, &c.tail));
        }
        Some(Element::Composite(c))
    }

    /// Faithful expression tree of the stored form.
    pub fn to_raw_expr(&self) -> RawExpr {
        match self {
            Element::Word(w) => {
                if w.is_identity() {
                    return RawExpr::Identity;
                }
                let parts: Vec<RawExpr> = w
                    .syllables()
                    .iter()
                    .map(|s| {
                        if s.exp == BigInt::from(1) {
                            RawExpr::gen(s.gen)
                        } else {
                            RawExpr::Power(
                                Box::new(RawExpr::gen(s.gen)),
                                Poly::integer(s.exp.clone()),
                            )
                        }
                    })
                    .collect();
                if parts.len() == 1 {
                    parts.into_iter().next().unwrap()
                } else {
                    RawExpr::Product(parts)
                }
            }
            Element::Composite(c) => {
                let mut parts = Vec::new();
                for (u, p) in &c.pairs {
                    if !u.is_identity() {
                        parts.push(u.to_raw_expr());
                    }
                    parts.push(RawExpr::Power(
                        Box::new(p.root.body().to_raw_expr()),
                        p.exponent.clone(),
                    ));
                }
                if !c.tail.is_identity() {
                    parts.push(c.tail.to_raw_expr());
                }
                if parts.len() == 1 {
                    parts.into_iter().next().unwrap()
                } else {
                    RawExpr::Product(parts)
                }
            }
        }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        match self {
            Element::Word(w) => w.format(alphabet),
            Element::Composite(c) => {
                let mut parts: Vec<String> = Vec::new();
                for (u, p) in &c.pairs {
                    if !u.is_identity() {
                        parts.push(u.format(alphabet));
                    }
                    let body = p.root.body();
                    let atom = match body {
                        Element::Word(w)
                            if w.syllable_count() == 1
                                && w.syllables()[0].exp == BigInt::from(1) =>
                        {
                            w.format(alphabet)
                        }
                        _ => format!("({})", body.format(alphabet)),
                    };
                    parts.push(format!("{atom}^({})", p.exponent.format()));
                }
                if !c.tail.is_identity() {
                    parts.push(c.tail.format(alphabet));
                }
                parts.join("*")
            }
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Word(w) => write!(f, "{w:?}"),
            Element::Composite(c) => {
                write!(f, "[L{}:", c.level)?;
                for (u, p) in &c.pairs {
                    write!(f, " {u:?} ({:?})^({})", p.root.body(), p.exponent)?;
                }
                write!(f, " {:?}]", c.tail)
            }
        }
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Element::Word(a), Element::Word(b)) => a.cmp(b),
            (Element::Word(_), Element::Composite(_)) => Ordering::Less,
            (Element::Composite(_), Element::Word(_)) => Ordering::Greater,
            (Element::Composite(a), Element::Composite(b)) => {
                match (a.level, a.pairs.len()).cmp(&(b.level, b.pairs.len())) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for ((ua, pa), (ub, pb)) in a.pairs.iter().zip(&b.pairs) {
                    match pa.root.cmp(&pb.root) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                    match pa.exponent.cmp(&pb.exponent) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                    match ua.cmp(ub) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                a.tail.cmp(&b.tail)
            }
        }
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Unnormalized expression tree, the parser output and the input to
/// normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawExpr {
    Identity,
    Gen(GenId, i8),
    Product(Vec<RawExpr>),
    Inverse(Box<RawExpr>),
    Power(Box<RawExpr>, Poly),
}

impl RawExpr {
    pub fn gen(g: GenId) -> RawExpr {
        RawExpr::Gen(g, 1)
    }

    pub fn product(parts: impl IntoIterator<Item = RawExpr>) -> RawExpr {
        RawExpr::Product(parts.into_iter().collect())
    }

    pub fn inverse(self) -> RawExpr {
        RawExpr::Inverse(Box::new(self))
    }

    pub fn power(self, exp: Poly) -> RawExpr {
        RawExpr::Power(Box::new(self), exp)
    }
}
