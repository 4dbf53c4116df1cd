//! The exponent-ring contract and its built-in instances.
//!
//! Exponents live in a commutative ring `A` containing the integers. Two
//! rings are built in: the integer polynomials `Z[t]` (the default) and the
//! degenerate ring `Z` itself. Both are residually integer: every substitution
//! `t := k` is a retraction onto `Z`, which is what makes the evaluation
//! oracle in [`crate::oracle`] work.
//!
//! All element data is carried by [`Poly`] regardless of the ring; the ring
//! value decides what parses and which capabilities are available, so the
//! group code is shared verbatim between rings.

use crate::error::Error;
use crate::poly::Poly;
use num_bigint::BigInt;

/// Exponent ring selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    /// Integer polynomials in one indeterminate `t`.
    IntPoly,
    /// Plain integers (constant polynomials only).
    Int,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::IntPoly => "zt",
            Ring::Int => "z",
        }
    }

    pub fn from_name(s: &str) -> Option<Ring> {
        match s {
            "zt" => Some(Ring::IntPoly),
            "z" => Some(Ring::Int),
            _ => None,
        }
    }

    /// Name of the indeterminate, reserved against generator names.
    pub fn indeterminate_name(self) -> Option<&'static str> {
        match self {
            Ring::IntPoly => Some("t"),
            Ring::Int => None,
        }
    }

    /// Whether a polynomial is a member of this ring.
    pub fn admits(self, a: &Poly) -> bool {
        match self {
            Ring::IntPoly => true,
            Ring::Int => a.is_integer(),
        }
    }

    pub fn zero(self) -> Poly {
        Poly::zero()
    }

    pub fn one(self) -> Poly {
        Poly::one()
    }

    pub fn add(self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }

    pub fn negate(self, a: &Poly) -> Poly {
        a.neg()
    }

    pub fn multiply(self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }

    pub fn is_equal(self, a: &Poly, b: &Poly) -> bool {
        a == b
    }

    pub fn is_integer(self, a: &Poly) -> bool {
        // Derived from split_integer: `a` is an integer iff its transversal
        // representative is zero.
        self.split_integer(a).1.is_zero()
    }

    /// Transversal split `a = n + r` with `n` integer and `r` the canonical
    /// zero-constant-term representative of `a` modulo `Z`.
    pub fn split_integer(self, a: &Poly) -> (BigInt, Poly) {
        a.split_integer()
    }

    /// Whether `evaluate_at` is available. True for every built-in ring.
    pub fn supports_evaluation(self) -> bool {
        true
    }

    /// Retraction onto `Z` at the integer point `k`.
    pub fn evaluate_at(self, a: &Poly, k: &BigInt) -> Result<BigInt, Error> {
        if !self.supports_evaluation() {
            return Err(Error::RingCapability("evaluate_at"));
        }
        Ok(a.evaluate_at(k))
    }

    pub fn format(self, a: &Poly) -> String {
        a.format()
    }

    /// Parses the polynomial grammar
    /// `poly := term (('+'|'-') term)*`, `term := coeff | coeff? '*'? 't' ('^' nat)?`
    /// with whitespace ignored. Positions in errors are 1-based columns.
    pub fn parse(self, input: &str) -> Result<Poly, Error> {
        let p = parse_poly(input, 0)?;
        if !self.admits(&p) {
            return Err(Error::parse(
                input.find('t').map(|i| i + 1).unwrap_or(1),
                format!("ring `{}` has no indeterminate", self.name()),
            ));
        }
        Ok(p)
    }
}

/// Parses a polynomial from `input`; reported columns are offset by `base`
/// so callers embedding a polynomial in a larger line keep absolute positions.
pub(crate) fn parse_poly(input: &str, base: usize) -> Result<Poly, Error> {
    let bytes = input.as_bytes();
    let mut i = 0usize;
    let mut out = Poly::zero();
    let col = |i: usize| base + i + 1;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };

    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(Error::parse(col(i), "empty polynomial".to_string()));
    }
    let mut first = true;
    loop {
        skip_ws(&mut i);
        if i == bytes.len() {
            if first {
                return Err(Error::parse(col(i), "empty polynomial".to_string()));
            }
            break;
        }
        // term separator / leading sign
        let mut sign = 1i32;
        match bytes[i] {
            b'+' => {
                i += 1;
            }
            b'-' => {
                sign = -1;
                i += 1;
            }
            _ if first => {}
            c => {
                return Err(Error::parse(
                    col(i),
                    format!("expected '+' or '-', found '{}'", c as char),
                ));
            }
        }
        first = false;
        skip_ws(&mut i);
        // coefficient digits (optional when followed by `t`)
        let digit_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: Option<BigInt> = if i > digit_start {
            Some(input[digit_start..i].parse().expect("digits"))
        } else {
            None
        };
        skip_ws(&mut i);
        // optional '*' between coefficient and 't'
        let mut saw_star = false;
        if i < bytes.len() && bytes[i] == b'*' {
            saw_star = true;
            i += 1;
            skip_ws(&mut i);
        }
        if i < bytes.len() && bytes[i] == b't' {
            i += 1;
            let mut degree: u32 = 1;
            skip_ws(&mut i);
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                skip_ws(&mut i);
                let d_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == d_start {
                    return Err(Error::parse(col(i), "expected exponent digits".to_string()));
                }
                degree = input[d_start..i]
                    .parse()
                    .map_err(|_| Error::parse(col(d_start), "degree too large".to_string()))?;
            }
            let c = coeff.unwrap_or_else(|| BigInt::from(1)) * sign;
            out = out.add(&Poly::monomial(degree, c));
        } else if saw_star {
            return Err(Error::parse(col(i), "expected 't' after '*'".to_string()));
        } else {
            match coeff {
                Some(c) => out = out.add(&Poly::integer(c * sign)),
                None => {
                    return Err(Error::parse(
                        col(i),
                        "expected coefficient or 't'".to_string(),
                    ));
                }
            }
        }
        skip_ws(&mut i);
        if i == bytes.len() {
            break;
        }
        if bytes[i] != b'+' && bytes[i] != b'-' {
            return Err(Error::parse(
                col(i),
                format!("unexpected '{}' in polynomial", bytes[i] as char),
            ));
        }
    }
    Ok(out)
}
