//! Sparse polynomials in one indeterminate `t` with arbitrary-precision
//! integer coefficients.
//!
//! [`Poly`] is the exponent type of the whole engine: group elements carry
//! these in their power factors, and every exponent manipulation (merging
//! adjacent powers, splitting off integer parts, evaluating at an integer
//! point) goes through this module. The representation is canonical: no zero
//! coefficients are stored, so structural equality is arithmetic equality.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Integer-coefficient polynomial in `t`, sparse map from degree to coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    // Invariant: no zero values; zero polynomial is the empty map.
    terms: BTreeMap<u32, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::integer(1)
    }

    /// The indeterminate `t`.
    pub fn indeterminate() -> Self {
        Poly::monomial(1, BigInt::from(1))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Poly::monomial(0, n.into())
    }

    pub fn monomial(degree: u32, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(degree, coeff);
        }
        Poly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (u32, BigInt)>) -> Self {
        let mut p = Poly::zero();
        for (d, c) in it {
            p.add_term(d, c);
        }
        p
    }

    fn add_term(&mut self, degree: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(degree) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&0).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `Some(n)` iff the polynomial is the constant `n`.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.constant_term()),
            Some(_) => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.as_integer().is_some()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(*d, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }

    pub fn add_integer(&self, n: &BigInt) -> Poly {
        let mut out = self.clone();
        out.add_term(0, n.clone());
        out
    }

    /// Splits off the integer part: `a = n + r` where `n` is the constant term
    /// and `r` has zero constant term. Idempotent on representatives:
    /// `split_integer(r) = (0, r)`.
    pub fn split_integer(&self) -> (BigInt, Poly) {
        let n = self.constant_term();
        let mut rest = self.clone();
        rest.terms.remove(&0);
        (n, rest)
    }

    /// Ring homomorphism to the integers substituting `t := k`.
    pub fn evaluate_at(&self, k: &BigInt) -> BigInt {
        // Horner over the sparse terms, highest degree first.
        let mut acc = BigInt::zero();
        let mut prev_deg: Option<u32> = None;
        for (&d, c) in self.terms.iter().rev() {
            if let Some(p) = prev_deg {
                acc *= k.pow(p - d);
            }
            acc += c;
            prev_deg = Some(d);
        }
        if let Some(p) = prev_deg {
            acc *= k.pow(p);
        }
        acc
    }

    /// Canonical text: descending degree, explicit `*` between coefficient and
    /// `t`, `0` for the zero polynomial. Examples: `3*t^2+1`, `-t+5`, `7`.
    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&d, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            let unit_coeff = mag == BigInt::from(1);
            if d == 0 || !unit_coeff {
                out.push_str(&mag.to_string());
            }
            if d > 0 {
                if !unit_coeff {
                    out.push('*');
                }
                out.push('t');
                if d > 1 {
                    out.push_str(&format!("^{d}"));
                }
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        // Degree first, then coefficients compared from the top degree down.
        // Total and consistent with Eq; fixed once, used for canonical choices.
        let da = self.degree();
        let db = other.degree();
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        let mut ia = self.terms.iter().rev();
        let mut ib = other.terms.iter().rev();
        loop {
            match (ia.next(), ib.next()) {
                (None, None) => return Ordering::Equal,
                // More terms at lower degrees = bigger in this order.
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((dx, cx)), Some((dy, cy))) => {
                    // Higher remaining degree compares first; coefficients by
                    // sign (non-negative first) then magnitude, so positive
                    // orientation is the canonical one.
                    match dx.cmp(dy) {
                        Ordering::Equal => {
                            match (cx.is_negative(), cx.abs()).cmp(&(cy.is_negative(), cy.abs())) {
                                Ordering::Equal => continue,
                                o => return o,
                            }
                        }
                        // Larger degree present means a term the other lacks.
                        o => return o,
                    }
                }
            }
        }
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
