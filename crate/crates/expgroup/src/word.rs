//! Reduced words of the ordinary free group: the level-0 algebra.
//!
//! Words are stored run-length encoded as syllables `(generator, exponent)`
//! with arbitrary-precision exponents, so powers like `a^100000` stay O(1).
//! Adjacent syllables always carry distinct generators, and no exponent is
//! zero; the empty word is the identity.

use crate::error::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Index into an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub u32);

/// A declared generating set. Names are unique identifiers and must avoid
/// the ring indeterminate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        reserved: Option<&str>,
    ) -> Result<Alphabet, Error> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Alphabet("no generators declared".to_string()));
        }
        for (i, n) in names.iter().enumerate() {
            let ok = !n.is_empty()
                && n.chars().next().unwrap().is_ascii_alphabetic()
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::Alphabet(format!("bad generator name `{n}`")));
            }
            if Some(n.as_str()) == reserved {
                return Err(Error::Alphabet(format!(
                    "`{n}` is the ring indeterminate and cannot be a generator"
                )));
            }
            if names[..i].contains(n) {
                return Err(Error::Alphabet(format!("duplicate generator `{n}`")));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn lookup(&self, name: &str) -> Option<GenId> {
        self.names.iter().position(|n| n == name).map(|i| GenId(i as u32))
    }

    pub fn name(&self, g: GenId) -> &str {
        &self.names[g.0 as usize]
    }

    pub fn gens(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.names.len() as u32).map(GenId)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: GenId,
    pub exp: BigInt,
}

/// Freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    sylls: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn generator(g: GenId) -> Word {
        Word::generator_power(g, BigInt::from(1))
    }

    pub fn generator_power(g: GenId, exp: impl Into<BigInt>) -> Word {
        let exp = exp.into();
        if exp.is_zero() {
            return Word::identity();
        }
        Word {
            sylls: vec![Syllable { gen: g, exp }],
        }
    }

    /// Builds a word from raw syllables, merging and cancelling as needed.
    pub fn from_syllables(it: impl IntoIterator<Item = (GenId, BigInt)>) -> Word {
        let mut w = Word::identity();
        for (g, e) in it {
            w.push_syllable(g, e);
        }
        w
    }

    fn push_syllable(&mut self, gen: GenId, exp: BigInt) {
        if exp.is_zero() {
            return;
        }
        match self.sylls.last_mut() {
            Some(last) if last.gen == gen => {
                last.exp += exp;
                if last.exp.is_zero() {
                    self.sylls.pop();
                }
            }
            _ => self.sylls.push(Syllable { gen, exp }),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.sylls.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.sylls
    }

    pub fn syllable_count(&self) -> usize {
        self.sylls.len()
    }

    /// Total letter length (sum of absolute exponents).
    pub fn letter_len(&self) -> BigInt {
        self.sylls.iter().map(|s| s.exp.abs()).sum()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for s in &other.sylls {
            out.push_syllable(s.gen, s.exp.clone());
        }
        out
    }

    pub fn invert(&self) -> Word {
        Word {
            sylls: self
                .sylls
                .iter()
                .rev()
                .map(|s| Syllable {
                    gen: s.gen,
                    exp: -&s.exp,
                })
                .collect(),
        }
    }

    /// `self^n`, computed through the cyclic decomposition so single-root
    /// powers stay run-length encoded.
    pub fn pow_int(&self, n: &BigInt) -> Word {
        if n.is_zero() || self.is_identity() {
            return Word::identity();
        }
        let (conj, core) = self.cyclic_reduce();
        let mut body = Word::identity();
        if core.sylls.len() == 1 {
            let s = &core.sylls[0];
            body = Word::generator_power(s.gen, &s.exp * n);
        } else {
            let total = n.abs();
            let copy = if n.is_negative() { core.invert() } else { core };
            // Cyclically reduced: copies concatenate without cancellation.
            let mut k = BigInt::zero();
            while k < total {
                body = body.multiply(&copy);
                k += 1;
            }
        }
        conj.invert().multiply(&body).multiply(&conj)
    }

    /// Writes `self = conj⁻¹ · core · conj` with `core` cyclically reduced:
    /// its first and last generators differ (or it has at most one syllable),
    /// so the syllable cycle of `core` is wrap-clean.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let mut conj = Word::identity();
        let mut core = self.clone();
        loop {
            if core.sylls.len() <= 1 {
                break;
            }
            let first = core.sylls.first().unwrap();
            let last = core.sylls.last().unwrap();
            if first.gen != last.gen {
                break;
            }
            // core = g^p X g^q  ->  rotate: g^q · core · g^-q = g^(p+q) X
            let g = last.gen;
            let q = last.exp.clone();
            conj = Word::generator_power(g, q.clone()).multiply(&conj);
            let p = core.sylls[0].exp.clone();
            let mut middle = Word {
                sylls: core.sylls[1..core.sylls.len() - 1].to_vec(),
            };
            let merged = p + q;
            if !merged.is_zero() {
                let mut w = Word::generator_power(g, merged);
                w = w.multiply(&middle);
                middle = w;
            }
            core = middle;
        }
        (conj, core)
    }

    /// Maximal-root decomposition `self = root^exponent` with `exponent >= 1`
    /// and `root` primitive (not a proper power). Errors on the identity.
    pub fn primitive_root(&self) -> Result<(Word, BigInt), Error> {
        if self.is_identity() {
            return Err(Error::IdentityInput("primitive_root"));
        }
        let (conj, core) = self.cyclic_reduce();
        let (root_core, e) = core.primitive_root_cyclic();
        Ok((conj.invert().multiply(&root_core).multiply(&conj), e))
    }

    // `self` cyclically reduced and nonempty.
    fn primitive_root_cyclic(&self) -> (Word, BigInt) {
        if self.sylls.len() == 1 {
            let s = &self.sylls[0];
            let e = s.exp.abs();
            let sign = if s.exp.is_negative() { -1 } else { 1 };
            return (Word::generator_power(s.gen, sign), e);
        }
        let n = self.sylls.len();
        for d in 1..n {
            if !n.is_multiple_of(d) {
                continue;
            }
            if (d..n).all(|i| self.sylls[i] == self.sylls[i - d]) {
                let root = Word {
                    sylls: self.sylls[..d].to_vec(),
                };
                return (root, BigInt::from(n / d));
            }
        }
        (self.clone(), BigInt::from(1))
    }

    /// `Some(k)` iff `self = v^k`; `k` may be zero or negative.
    pub fn power_membership(&self, v: &Word) -> Option<BigInt> {
        if v.is_identity() {
            return if self.is_identity() {
                Some(BigInt::zero())
            } else {
                None
            };
        }
        if self.is_identity() {
            return Some(BigInt::zero());
        }
        let (ru, eu) = self.primitive_root().expect("nonidentity");
        let (rv, ev) = v.primitive_root().expect("nonidentity");
        if ru == rv {
            let (q, r) = eu.div_rem(&ev);
            if r.is_zero() {
                return Some(q);
            }
        } else if ru == rv.invert() {
            let (q, r) = eu.div_rem(&ev);
            if r.is_zero() {
                return Some(-q);
            }
        }
        None
    }

    /// Free-group conjugacy: `Some(c)` with `other = c⁻¹ · self · c` iff the
    /// cyclic cores are rotations of one another.
    pub fn conjugacy(&self, other: &Word) -> Option<Word> {
        let (cu, zu) = self.cyclic_reduce();
        let (cw, zw) = other.cyclic_reduce();
        if zu.sylls.len() != zw.sylls.len() || zu.letter_len() != zw.letter_len() {
            return None;
        }
        let n = zu.sylls.len();
        if n == 0 {
            // both identity after reduction
            return Some(cu.invert().multiply(&cw));
        }
        for r in 0..n {
            if (0..n).all(|i| zu.sylls[(r + i) % n] == zw.sylls[i]) {
                let prefix = Word {
                    sylls: zu.sylls[..r].to_vec(),
                };
                // other = (cu⁻¹ · prefix · cw)⁻¹ · self · (cu⁻¹ · prefix · cw)
                let conj = cu.invert().multiply(&prefix).multiply(&cw);
                return Some(conj);
            }
        }
        None
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let mut parts = Vec::with_capacity(self.sylls.len());
        for s in &self.sylls {
            let name = alphabet.name(s.gen);
            if s.exp == BigInt::from(1) {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{}", s.exp));
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .sylls
            .iter()
            .map(|s| format!("g{}^{}", s.gen.0, s.exp))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        // Fixed total order: letter length, then syllable-wise by
        // (generator index, sign with positive first, magnitude).
        match self.letter_len().cmp(&other.letter_len()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.sylls.iter().zip(&other.sylls) {
            match a.gen.cmp(&b.gen) {
                Ordering::Equal => {}
                o => return o,
            }
            match a.exp.is_negative().cmp(&b.exp.is_negative()) {
                Ordering::Equal => {}
                o => return o,
            }
            match a.exp.abs().cmp(&b.exp.abs()) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.sylls.len().cmp(&other.sylls.len())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn gen(i: u32) -> GenId {
        GenId(i)
    }

    fn w(letters: &[i64]) -> Word {
        // test helper: nonzero i means generator |i|-1 with sign(i)
        Word::from_syllables(letters.iter().map(|&l| {
            let g = gen(l.unsigned_abs() as u32 - 1);
            (g, BigInt::from(l.signum()))
        }))
    }

    /// Letter-by-letter oracle used to cross-check the run-length algorithms.
    mod oracle {
        use super::*;

        pub fn letters(word: &Word) -> Vec<i64> {
            let mut out = Vec::new();
            for s in word.syllables() {
                let step: i64 = if s.exp.is_negative() { -1 } else { 1 };
                let n: u64 = s.exp.abs().try_into().expect("small oracle words");
                for _ in 0..n {
                    out.push(step * (s.gen.0 as i64 + 1));
                }
            }
            out
        }

        pub fn reduce(mut ls: Vec<i64>) -> Vec<i64> {
            let mut out: Vec<i64> = Vec::new();
            for l in ls.drain(..) {
                if out.last() == Some(&-l) {
                    out.pop();
                } else {
                    out.push(l);
                }
            }
            out
        }

        /// Brute-force strip loop: remove matching ends until stable.
        pub fn cyclic_core(word: &Word) -> Vec<i64> {
            let mut ls = reduce(letters(word));
            while ls.len() >= 2 && *ls.first().unwrap() == -*ls.last().unwrap() {
                ls = ls[1..ls.len() - 1].to_vec();
            }
            ls
        }
    }

    #[test]
    fn multiply_reduces() {
        // (a·b)(b⁻¹·a) = a²
        let ab = w(&[1, 2]);
        let ba = w(&[-2, 1]);
        assert_eq!(ab.multiply(&ba), w(&[1, 1]));
        // identity neutral
        assert_eq!(ab.multiply(&Word::identity()), ab);
        // inverse collapses
        assert_eq!(w(&[1]).multiply(&w(&[-1])), Word::identity());
    }

    #[test]
    fn cyclic_reduce_examples() {
        // b⁻¹ a b -> (b, a)
        let (c, z) = w(&[-2, 1, 2]).cyclic_reduce();
        assert_eq!(z, w(&[1]));
        assert_eq!(c, w(&[2]));
        // ab already cyclically reduced
        let (c, z) = w(&[1, 2]).cyclic_reduce();
        assert!(c.is_identity());
        assert_eq!(z, w(&[1, 2]));
        // wrap-clean: aba rotates to a²b
        let (c, z) = w(&[1, 2, 1]).cyclic_reduce();
        assert_eq!(z, w(&[1, 1, 2]));
        let back = c.invert().multiply(&z).multiply(&c);
        assert_eq!(back, w(&[1, 2, 1]));
    }

    #[test]
    fn cyclic_reduce_matches_strip_oracle() {
        // b⁻¹a⁻¹bab and friends, verified against the brute-force strip loop
        for input in [
            w(&[-2, -1, 2, 1, 2]),
            w(&[-1, -2, 1, 2, 1]),
            w(&[2, 1, -2]),
            w(&[1, 2, -1, -2, 1]),
        ] {
            let (c, z) = input.cyclic_reduce();
            assert_eq!(
                z.letter_len(),
                BigInt::from(oracle::cyclic_core(&input).len()),
                "core length differs from oracle for {input:?}"
            );
            let back = c.invert().multiply(&z).multiply(&c);
            assert_eq!(back, input);
        }
    }

    #[test]
    fn primitive_root_examples() {
        // a⁴
        let (r, e) = w(&[1, 1, 1, 1]).primitive_root().unwrap();
        assert_eq!((r, e), (w(&[1]), BigInt::from(4)));
        // (ab)³
        let (r, e) = w(&[1, 2, 1, 2, 1, 2]).primitive_root().unwrap();
        assert_eq!((r, e), (w(&[1, 2]), BigInt::from(3)));
        // ab is primitive
        let (r, e) = w(&[1, 2]).primitive_root().unwrap();
        assert_eq!((r, e), (w(&[1, 2]), BigInt::from(1)));
        // a⁻⁴: root a⁻¹, exponent 4
        let (r, e) = w(&[-1, -1, -1, -1]).primitive_root().unwrap();
        assert_eq!((r, e), (w(&[-1]), BigInt::from(4)));
        // conjugated power: b⁻¹a²b = (b⁻¹ab)²
        let (r, e) = w(&[-2, 1, 1, 2]).primitive_root().unwrap();
        assert_eq!((r, e), (w(&[-2, 1, 2]), BigInt::from(2)));
        assert!(Word::identity().primitive_root().is_err());
    }

    #[test]
    fn power_membership_examples() {
        let a = w(&[1]);
        assert_eq!(w(&[1, 1, 1]).power_membership(&a), Some(3.into()));
        assert_eq!(w(&[1, 2]).power_membership(&a), None);
        assert_eq!(Word::identity().power_membership(&a), Some(0.into()));
        assert_eq!(w(&[-1, -1]).power_membership(&a), Some((-2).into()));
        // non-primitive v
        let aa = w(&[1, 1]);
        assert_eq!(w(&[1, 1, 1, 1]).power_membership(&aa), Some(2.into()));
        assert_eq!(w(&[1, 1, 1]).power_membership(&aa), None);
    }

    #[test]
    fn conjugacy_examples() {
        // (ab, ba): ba = a⁻¹(ab)a
        let abw = w(&[1, 2]);
        let baw = w(&[2, 1]);
        let c = abw.conjugacy(&baw).unwrap();
        assert_eq!(c.invert().multiply(&abw).multiply(&c), baw);
        assert_eq!(c, w(&[1]));
        // non-conjugate generators
        assert_eq!(w(&[1]).conjugacy(&w(&[2])), None);
        // self-conjugacy with trivial witness
        let g = w(&[1, 2, -1]);
        let c = g.conjugacy(&g).unwrap();
        assert_eq!(c.invert().multiply(&g).multiply(&c), g);
    }

    #[test]
    fn pow_int_run_length() {
        let a = w(&[1]);
        let big = BigInt::from(1) << 130;
        let p = a.pow_int(&big);
        assert_eq!(p.syllable_count(), 1);
        assert_eq!(p.letter_len(), big);
        let ab = w(&[1, 2]);
        assert_eq!(ab.pow_int(&3.into()), w(&[1, 2, 1, 2, 1, 2]));
        assert_eq!(ab.pow_int(&(-2).into()), w(&[-2, -1, -2, -1]));
        assert_eq!(ab.pow_int(&0.into()), Word::identity());
        // conjugated base stays compact
        let g = w(&[-2, 1, 2]);
        let p = g.pow_int(&(BigInt::from(1) << 90));
        assert_eq!(p.syllable_count(), 3);
    }

    proptest! {
        #[test]
        fn inverse_cancels(letters in proptest::collection::vec(-3i64..=3, 0..40)) {
            let word = w(&letters.iter().copied().filter(|&l| l != 0).collect::<Vec<_>>());
            prop_assert!(word.multiply(&word.invert()).is_identity());
        }

        #[test]
        fn multiply_matches_letter_oracle(
            xs in proptest::collection::vec(-3i64..=3, 0..30),
            ys in proptest::collection::vec(-3i64..=3, 0..30),
        ) {
            let x = w(&xs.iter().copied().filter(|&l| l != 0).collect::<Vec<_>>());
            let y = w(&ys.iter().copied().filter(|&l| l != 0).collect::<Vec<_>>());
            let product = x.multiply(&y);
            let mut ls = oracle::letters(&x);
            ls.extend(oracle::letters(&y));
            prop_assert_eq!(oracle::letters(&product), oracle::reduce(ls));
        }

        #[test]
        fn primitive_root_round_trip(
            base in proptest::collection::vec(-2i64..=2, 1..6),
            e in 1i64..5,
        ) {
            let b = w(&base.iter().copied().filter(|&l| l != 0).collect::<Vec<_>>());
            prop_assume!(!b.is_identity());
            let power = b.pow_int(&e.into());
            prop_assume!(!power.is_identity());
            let (root, k) = power.primitive_root().unwrap();
            prop_assert_eq!(root.pow_int(&k.clone()), power.clone());
            let (rr, one) = root.primitive_root().unwrap();
            prop_assert_eq!(one, BigInt::from(1));
            prop_assert_eq!(rr, root);
            // the found exponent is maximal: it is a multiple of e
            prop_assert_eq!(&k % e, BigInt::from(0));
        }

        #[test]
        fn conjugates_are_detected(
            us in proptest::collection::vec(-3i64..=3, 1..12),
            cs in proptest::collection::vec(-3i64..=3, 0..12),
        ) {
            let u = w(&us.iter().copied().filter(|&l| l != 0).collect::<Vec<_>>());
            let c = w(&cs.iter().copied().filter(|&l| l != 0).collect::<Vec<_>>());
            let conj = c.invert().multiply(&u).multiply(&c);
            let witness = u.conjugacy(&conj);
            prop_assert!(witness.is_some());
            let cw = witness.unwrap();
            prop_assert_eq!(cw.invert().multiply(&u).multiply(&cw), conj);
        }
    }
}
