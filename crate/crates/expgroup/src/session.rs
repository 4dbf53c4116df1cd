//! Line-oriented command interface: expression parsing, bindings, and the
//! command set used by the binary and by batch files.
//!
//! Expression grammar (whitespace insignificant):
//!
//! ```text
//! expr     := factor ('*' factor)*
//! factor   := atom ('^' exponent)?
//! atom     := name | '(' expr ')' | '1'
//! exponent := '(' poly ')' | signedInt
//! ```
//!
//! Batch files hold one command per line; `#` starts a comment and blank
//! lines are skipped. Every result line is prefixed `ok:`, `no:` or `err:`
//! with exit codes 0, 1 and 2 respectively.

use crate::elem::{Element, RawExpr};
use crate::error::Error;
use crate::oracle::{self, GenParams};
use crate::poly::Poly;
use crate::ring::{parse_poly, Ring};
use crate::word::Alphabet;
use num_bigint::BigInt;
use std::collections::BTreeMap;

const COMMANDS: &[&str] = &[
    "norm", "eq", "conj", "comm", "root", "cent", "level", "len", "pow", "eval", "let", "selftest",
];

/// Result of one command: the printed line(s) and the exit code
/// (0 success/true, 1 false/none, 2 error).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub text: String,
    pub code: i32,
}

impl CommandOutcome {
    fn ok(msg: impl Into<String>) -> Self {
        CommandOutcome {
            text: format!("ok: {}", msg.into()),
            code: 0,
        }
    }
    fn no(msg: impl Into<String>) -> Self {
        CommandOutcome {
            text: format!("no: {}", msg.into()),
            code: 1,
        }
    }
    fn err(msg: impl Into<String>) -> Self {
        CommandOutcome {
            text: format!("err: {}", msg.into()),
            code: 2,
        }
    }
}

/// An interactive or batch computation context: fixed alphabet and ring,
/// evaluation points and a table of named bindings.
pub struct Session {
    alphabet: Alphabet,
    ring: Ring,
    seed: u64,
    points: Vec<BigInt>,
    bindings: BTreeMap<String, Element>,
}

impl Session {
    pub fn new(gens: &[&str], ring: Ring, seed: u64) -> Result<Session, Error> {
        let alphabet = Alphabet::new(gens.iter().copied(), ring.indeterminate_name())?;
        for g in gens {
            if COMMANDS.contains(g) || *g == "1" {
                return Err(Error::Alphabet(format!("`{g}` is a reserved word")));
            }
        }
        Ok(Session {
            alphabet,
            ring,
            seed,
            points: vec![
                BigInt::from(-2),
                BigInt::from(-1),
                BigInt::from(0),
                BigInt::from(1),
                BigInt::from(2),
                BigInt::from(3),
            ],
            bindings: BTreeMap::new(),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn set_points(&mut self, points: Vec<BigInt>) {
        self.points = points;
    }

    pub fn points(&self) -> &[BigInt] {
        &self.points
    }

    /// Parses an expression against the session alphabet and bindings.
    pub fn parse(&self, input: &str) -> Result<RawExpr, Error> {
        let mut p = Parser {
            session: self,
            bytes: input.as_bytes(),
            input,
            pos: 0,
            base: 0,
        };
        p.skip_ws();
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(Error::parse(
                p.col(),
                format!("unexpected `{}`", p.rest_head()),
            ));
        }
        Ok(e)
    }

    /// Parses and normalizes in one step.
    pub fn eval(&self, input: &str) -> Result<Element, Error> {
        Ok(crate::normal::normalize(&self.parse(input)?))
    }

    /// Canonical text of an element over the session alphabet.
    pub fn show(&self, e: &Element) -> String {
        e.format(&self.alphabet)
    }

    /// Grammar-conformant text of an unnormalized expression tree.
    pub fn show_expr(&self, e: &RawExpr) -> String {
        fn atom(s: &Session, e: &RawExpr) -> String {
            match e {
                RawExpr::Identity => "1".to_string(),
                RawExpr::Gen(g, 1) => s.alphabet.name(*g).to_string(),
                other => format!("({})", s.show_expr(other)),
            }
        }
        match e {
            RawExpr::Identity => "1".to_string(),
            RawExpr::Gen(g, sign) => {
                let name = self.alphabet.name(*g);
                if *sign == 1 {
                    name.to_string()
                } else {
                    format!("{name}^-1")
                }
            }
            RawExpr::Product(parts) => {
                if parts.is_empty() {
                    return "1".to_string();
                }
                parts
                    .iter()
                    .map(|p| match p {
                        RawExpr::Product(_) => format!("({})", self.show_expr(p)),
                        other => self.show_expr(other),
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            }
            RawExpr::Inverse(x) => format!("{}^-1", atom(self, x)),
            RawExpr::Power(x, p) => match p.as_integer() {
                Some(n) => format!("{}^{n}", atom(self, x)),
                None => format!("{}^({})", atom(self, x), p.format()),
            },
        }
    }

    /// Executes one command line. Returns `None` for blank lines and
    /// comments.
    pub fn run_line(&mut self, line: &str) -> Option<CommandOutcome> {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let (cmd, rest) = match line.split_once(char::is_whitespace) {
            Some((c, r)) => (c, r.trim()),
            None => (line, ""),
        };
        Some(self.dispatch(cmd, rest))
    }

    /// Runs a whole batch, returning the concatenated output and the exit
    /// code of the last executed command (0 when none ran).
    pub fn run_batch(&mut self, text: &str) -> (String, i32) {
        let mut out = String::new();
        let mut code = 0;
        for line in text.lines() {
            if let Some(outcome) = self.run_line(line) {
                out.push_str(&outcome.text);
                out.push('\n');
                code = outcome.code;
            }
        }
        (out, code)
    }

    fn dispatch(&mut self, cmd: &str, rest: &str) -> CommandOutcome {
        let result = match cmd {
            "norm" => self.cmd_unary(rest, |s, g| Ok(CommandOutcome::ok(s.show(&g)))),
            "eq" => self.cmd_binary(rest, |_, g, h| {
                Ok(if crate::ops::equals(&g, &h) {
                    CommandOutcome::ok("true")
                } else {
                    CommandOutcome::no("false")
                })
            }),
            "conj" => self.cmd_binary(rest, |s, g, h| {
                Ok(match crate::ops::conjugate_test(&g, &h) {
                    Some(c) => CommandOutcome::ok(s.show(&c)),
                    None => CommandOutcome::no("not conjugate"),
                })
            }),
            "comm" => self.cmd_binary(rest, |_, g, h| {
                Ok(if crate::ops::commutes(&g, &h) {
                    CommandOutcome::ok("true")
                } else {
                    CommandOutcome::no("false")
                })
            }),
            "root" => self.cmd_unary(rest, |s, g| {
                let rd = crate::ops::extract_root(&g)?;
                Ok(CommandOutcome::ok(format!(
                    "root={} exp={} conj={}",
                    s.show(rd.root.body()),
                    rd.exponent.format(),
                    s.show(&rd.conjugator)
                )))
            }),
            "cent" => self.cmd_unary(rest, |s, g| {
                let h = crate::ops::centralizer(&g)?;
                Ok(CommandOutcome::ok(format!(
                    "root={} conj={}",
                    s.show(h.root.body()),
                    s.show(&h.conjugator)
                )))
            }),
            "level" => self.cmd_unary(rest, |_, g| Ok(CommandOutcome::ok(g.level().to_string()))),
            "len" => self.cmd_unary(rest, |_, g| {
                Ok(CommandOutcome::ok(g.syllable_length().to_string()))
            }),
            "pow" => split_args(rest)
                .ok_or_else(|| Error::Command("pow needs `expr ; exponent`".into()))
                .and_then(|(a, b)| {
                    let g = self.eval(a)?;
                    let alpha = self.ring.parse(b.trim())?;
                    Ok(CommandOutcome::ok(
                        self.show(&crate::ops::power(&g, &alpha)),
                    ))
                }),
            "eval" => self.cmd_unary(rest, |s, g| {
                let mut parts = Vec::with_capacity(s.points.len());
                for k in &s.points {
                    let w = crate::ops::evaluate_hom(&g, s.ring, k)?;
                    parts.push(format!("{k}={}", w.format(&s.alphabet)));
                }
                Ok(CommandOutcome::ok(parts.join(" ")))
            }),
            "let" => self.cmd_let(rest),
            "selftest" => Ok(self.cmd_selftest()),
            _ => Ok(CommandOutcome::err(format!("unknown command `{cmd}`"))),
        };
        match result {
            Ok(outcome) => outcome,
            Err(e) => CommandOutcome::err(e.to_string()),
        }
    }

    fn cmd_unary(
        &self,
        rest: &str,
        f: impl FnOnce(&Session, Element) -> Result<CommandOutcome, Error>,
    ) -> Result<CommandOutcome, Error> {
        let g = self.eval(rest)?;
        f(self, g)
    }

    fn cmd_binary(
        &self,
        rest: &str,
        f: impl FnOnce(&Session, Element, Element) -> Result<CommandOutcome, Error>,
    ) -> Result<CommandOutcome, Error> {
        let (a, b) = split_args(rest)
            .ok_or_else(|| Error::Command("expected two expressions separated by `;`".into()))?;
        let g = self.eval(a)?;
        let h = self.eval(b)?;
        f(self, g, h)
    }

    fn cmd_let(&mut self, rest: &str) -> Result<CommandOutcome, Error> {
        let (name, expr) = rest
            .split_once('=')
            .ok_or_else(|| Error::Command("let needs `name = expr`".into()))?;
        let name = name.trim();
        let ok_name = !name.is_empty()
            && name.chars().next().unwrap().is_ascii_alphabetic()
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok_name {
            return Err(Error::Command(format!("bad binding name `{name}`")));
        }
        if self.alphabet.lookup(name).is_some()
            || COMMANDS.contains(&name)
            || Some(name) == self.ring.indeterminate_name()
        {
            return Err(Error::Command(format!("`{name}` is reserved")));
        }
        let value = self.eval(expr.trim())?;
        let shown = self.show(&value);
        self.bindings.insert(name.to_string(), value);
        Ok(CommandOutcome::ok(format!("{name} = {shown}")))
    }

    fn cmd_selftest(&self) -> CommandOutcome {
        let gens: Vec<String> = self.alphabet.gens().map(|g| self.alphabet.name(g).to_string()).collect();
        let params = GenParams {
            alphabet_size: gens.len() as u32,
            max_level: 2,
            max_syllables: 3,
            max_exp_degree: 2,
            max_coeff: 3,
            seed: self.seed,
        };
        match oracle::selftest(&params, 40) {
            Ok(n) => CommandOutcome::ok(format!("selftest passed ({n} checks)")),
            Err(msg) => CommandOutcome::err(format!("selftest failed: {msg}")),
        }
    }
}

/// Splits two `;`-separated command arguments.
fn split_args(rest: &str) -> Option<(&str, &str)> {
    let (a, b) = rest.split_once(';')?;
    let (a, b) = (a.trim(), b.trim());
    if a.is_empty() || b.is_empty() {
        return None;
    }
    Some((a, b))
}

struct Parser<'a> {
    session: &'a Session,
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Parser<'a> {
    fn col(&self) -> usize {
        self.base + self.pos + 1
    }

    fn rest_head(&self) -> String {
        self.input[self.pos..].chars().take(8).collect()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RawExpr, Error> {
        let mut parts = vec![self.factor()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                parts.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            RawExpr::Product(parts)
        })
    }

    fn factor(&mut self) -> Result<RawExpr, Error> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let exp = self.exponent()?;
            return Ok(RawExpr::Power(Box::new(atom), exp));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<RawExpr, Error> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.col(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(RawExpr::Identity)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .map(|c| c.is_ascii_alphanumeric() || c == b'_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name = &self.input[start..self.pos];
                if let Some(g) = self.session.alphabet.lookup(name) {
                    return Ok(RawExpr::gen(g));
                }
                if let Some(e) = self.session.bindings.get(name) {
                    return Ok(e.to_raw_expr());
                }
                Err(Error::parse(
                    self.base + start + 1,
                    format!("unknown symbol `{name}`"),
                ))
            }
            Some(c) => Err(Error::parse(
                self.col(),
                format!("expected a name, `(` or `1`, found `{}`", c as char),
            )),
            None => Err(Error::parse(self.col(), "unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<Poly, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let start = self.pos;
                let mut depth = 1usize;
                while self.pos < self.bytes.len() {
                    match self.bytes[self.pos] {
                        b'(' => depth += 1,
                        b')' => {
                            depth -= 1;
                            if depth == 0 {
                                break;
                            }
                        }
                        _ => {}
                    }
                    self.pos += 1;
                }
                if depth != 0 {
                    return Err(Error::parse(self.col(), "unclosed `(` in exponent"));
                }
                let inner = &self.input[start..self.pos];
                self.pos += 1; // consume ')'
                let p = parse_poly(inner, self.base + start)?;
                if !self.session.ring.admits(&p) {
                    return Err(Error::parse(
                        self.base + start + 1,
                        format!("ring `{}` has no indeterminate", self.session.ring.name()),
                    ));
                }
                Ok(p)
            }
            _ => {
                let start = self.pos;
                if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
                    self.pos += 1;
                }
                while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
                    self.pos += 1;
                }
                if self.pos == start || (self.pos == start + 1 && !self.bytes[start].is_ascii_digit())
                {
                    return Err(Error::parse(self.col(), "expected an integer or `(`"));
                }
                let n: BigInt = self.input[start..self.pos].parse().expect("digits");
                Ok(Poly::integer(n))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn session() -> Session {
        Session::new(&["a", "b"], Ring::IntPoly, 7).unwrap()
    }

    #[test]
    fn parse_examples() {
        let s = session();
        // a*b^-1
        let e = s.parse("a*b^-1").unwrap();
        match e {
            RawExpr::Product(ps) => assert_eq!(ps.len(), 2),
            other => panic!("unexpected {other:?}"),
        }
        // a^(3*t^2+1)
        let e = s.parse("a^(3*t^2+1)").unwrap();
        match e {
            RawExpr::Power(_, p) => assert_eq!(p.format(), "3*t^2+1"),
            other => panic!("unexpected {other:?}"),
        }
        // unknown symbol, 1-based column
        let err = s.parse("a^(q)").unwrap_err();
        assert!(err.to_string().contains("column 4"), "{err}");
        let err = s.parse("c").unwrap_err();
        assert!(err.to_string().contains("unknown symbol"), "{err}");
    }

    #[test]
    fn eval_and_show() {
        let s = session();
        let g = s.eval("a*a^-1").unwrap();
        assert!(g.is_identity());
        assert_eq!(s.show(&g), "1");
        let g = s.eval("a^(t)*a^(t)").unwrap();
        assert_eq!(s.show(&g), "a^(2*t)");
        let g = s.eval("b*a^(t+1)*a^-1").unwrap();
        assert_eq!(s.show(&g), "b*a^(t)");
    }

    #[test]
    fn parse_format_round_trip_is_stable() {
        let s = session();
        for src in [
            "a^(t)*b",
            "b*a^(2*t)",
            "(a^(t)*b)^(t)",
            "a^3*b^-2",
            "b^-1*a^(t)*b",
            "a^(t^2-t)*b*a^(-t)",
        ] {
            let g = s.eval(src).unwrap();
            let shown = s.show(&g);
            let again = s.eval(&shown).unwrap();
            assert_eq!(again, g, "round trip changed `{src}` -> `{shown}`");
            assert_eq!(s.show(&again), shown);
        }
    }

    #[test]
    fn commands_produce_prefixed_output() {
        let mut s = session();
        let out = s.run_line("eq a^(t)*b ; a^(t+1)*a^-1*b").unwrap();
        assert_eq!(out.text, "ok: true");
        assert_eq!(out.code, 0);
        let out = s.run_line("eq a ; b").unwrap();
        assert_eq!(out.text, "no: false");
        assert_eq!(out.code, 1);
        let out = s.run_line("level a^(t)").unwrap();
        assert_eq!(out.text, "ok: 1");
        let out = s.run_line("norm a^(t)*a^(-t)*b").unwrap();
        assert_eq!(out.text, "ok: b");
        let out = s.run_line("root b^-1*a^(t)*b").unwrap();
        assert_eq!(out.text, "ok: root=a exp=t conj=b");
        let out = s.run_line("bogus x").unwrap();
        assert_eq!(out.code, 2);
        assert!(s.run_line("# comment").is_none());
        assert!(s.run_line("").is_none());
    }

    #[test]
    fn conj_command_returns_verifying_witness() {
        let mut s = session();
        let out = s.run_line("conj a^(t)*b ; b*a^(t)").unwrap();
        assert_eq!(out.code, 0);
        let shown = out.text.strip_prefix("ok: ").unwrap().to_string();
        let c = s.eval(&shown).unwrap();
        let g = s.eval("a^(t)*b").unwrap();
        let h = s.eval("b*a^(t)").unwrap();
        assert!(crate::ops::equals(&crate::normal::conjugate(&g, &c), &h));
    }

    #[test]
    fn let_binds_and_reuses() {
        let mut s = session();
        let out = s.run_line("let w = a^(t)*b").unwrap();
        assert_eq!(out.text, "ok: w = a^(t)*b");
        let out = s.run_line("eq w*w ; a^(t)*b*a^(t)*b").unwrap();
        assert_eq!(out.code, 0);
        let out = s.run_line("let a = b").unwrap();
        assert_eq!(out.code, 2);
    }

    #[test]
    fn show_expr_round_trips_through_the_grammar() {
        use crate::normal::normalize;
        use crate::oracle::{obfuscate, random_element_with, GenParams};
        use rand::rngs::StdRng;
        use rand::SeedableRng;
        let s = session();
        let p = GenParams {
            alphabet_size: 2,
            max_level: 2,
            max_syllables: 3,
            max_exp_degree: 2,
            max_coeff: 3,
            seed: 6,
        };
        let mut rng = StdRng::seed_from_u64(6);
        for i in 0..40 {
            let raw = random_element_with(&mut rng, &p);
            let g = normalize(&raw);
            let masked = obfuscate(&g, &p, i, 6);
            for expr in [&raw, &masked] {
                let text = s.show_expr(expr);
                let reparsed = s.eval(&text).expect("show_expr output must parse");
                assert_eq!(reparsed, normalize(expr), "value changed for `{text}`");
            }
        }
    }

    #[test]
    fn batch_is_deterministic() {
        let text = "norm a^(t)*a^(t)\n# comment\n\neq a ; a\nlevel (a^(t)*b)^(t)\n";
        let mut s1 = session();
        let mut s2 = session();
        let (o1, c1) = s1.run_batch(text);
        let (o2, c2) = s2.run_batch(text);
        assert_eq!(o1, o2);
        assert_eq!(c1, c2);
        assert_eq!(o1, "ok: a^(2*t)\nok: true\nok: 2\n");
        assert_eq!(c1, 0);
    }
}
