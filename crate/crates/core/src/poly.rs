//! Multivariate polynomials over `F_p`: monomials, monomial orders, the ring
//! context, arithmetic, and the text format.
//!
//! A polynomial is a list of terms sorted strictly descending in the order of
//! the [`RingContext`] it was built in. Arithmetic goes through the context,
//! which owns the field and the order.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Coeff, PrimeField};

/// Largest number of user-visible variables.
pub const MAX_VARS: usize = 8;

/// Internal capacity: room for the auxiliary variables used by elimination.
pub(crate) const CAPACITY: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u16; CAPACITY],
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self { exps: [0; CAPACITY], degree: 0 }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= CAPACITY, "too many exponents");
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.degree += e;
        }
        m
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a += *b;
        }
        m.degree += other.degree;
        m
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a -= *b;
        }
        m.degree -= other.degree;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Self::one();
        for i in 0..CAPACITY {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.degree += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = *self;
        m.exps[i] += 1;
        m.degree += 1;
        m
    }

    /// Moves exponent `i` to slot `i + k` (or `i - k` with negative `k`).
    pub(crate) fn shifted(&self, k: isize) -> Monomial {
        let mut m = Self::one();
        for i in 0..CAPACITY {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            let j = i as isize + k;
            assert!((0..CAPACITY as isize).contains(&j), "shift out of range");
            m.exps[j as usize] = e;
        }
        m.degree = self.degree;
        m
    }

    /// Re-indexes exponents: slot `i` moves to `map[i]`.
    pub(crate) fn remapped(&self, map: &[usize]) -> Monomial {
        let mut m = Self::one();
        for (i, &j) in map.iter().enumerate() {
            m.exps[j] += self.exps[i];
        }
        m.degree = self.degree;
        m
    }
}

/// All monomials of total degree `d` in the first `n` variables, in
/// descending lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut [u32], out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    let mut cur = vec![0; n];
    rec(n, 0, d, &mut cur, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Grevlex on variables `[0, split)`, then grevlex on the rest. Any
    /// monomial involving the first block beats every monomial free of it.
    Elimination { split: usize },
}

fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.exps[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exps[lo..hi].iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex_range(a, b, 0, CAPACITY),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination { split } => grevlex_range(a, b, 0, split)
                .then_with(|| grevlex_range(a, b, split, CAPACITY)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// Terms strictly descending in the owning ring's order; no zero
/// coefficients; the empty list is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Caller guarantees canonical form under the intended ring order.
    pub(crate) fn from_sorted_unchecked(terms: Vec<Term>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn constant_coeff(&self) -> Coeff {
        self.terms.iter().find(|t| t.mono.is_one()).map_or(0, |t| t.coeff)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Highest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    /// Lowest total degree of a term (the `m`-adic order); `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).min()
    }

    /// `Some(d)` when every term has total degree `d`. Zero counts as
    /// homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first().map_or(0, |t| t.mono.degree());
        self.terms.iter().all(|t| t.mono.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }
}

/// The ambient ring `k[x_1, ..., x_n]` with a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    vars: Vec<String>,
    field: PrimeField,
    order: MonomialOrder,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<S: AsRef<str>>(field: PrimeField, vars: &[S]) -> Result<Arc<Self>> {
        Self::with_order(field, vars, MonomialOrder::Grevlex)
    }

    pub fn with_order<S: AsRef<str>>(
        field: PrimeField,
        vars: &[S],
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!("at most {MAX_VARS} variables are supported")));
        }
        Self::build(field, vars, order)
    }

    pub(crate) fn build<S: AsRef<str>>(
        field: PrimeField,
        vars: &[S],
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.len() > CAPACITY {
            return Err(Error::InvalidRing("too many variables".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("variable `{v}` declared twice")));
            }
        }
        Ok(Arc::new(Self { vars, field, order }))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field under another order.
    pub fn reordered(&self, order: MonomialOrder) -> Arc<RingContext> {
        Arc::new(Self { vars: self.vars.clone(), field: self.field, order })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    // ---- constructors -------------------------------------------------

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        self.term(self.field.from_i64(c), Monomial::one())
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars(), "variable index out of range");
        self.term(1, Monomial::var(i))
    }

    pub fn term(&self, coeff: Coeff, mono: Monomial) -> Polynomial {
        if coeff == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![Term { coeff, mono }] }
        }
    }

    pub fn monomial(&self, mono: Monomial) -> Polynomial {
        self.term(1, mono)
    }

    /// Sorts and combines arbitrary terms into canonical form.
    pub fn from_terms(&self, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = self.field.add(last.coeff, t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        Polynomial { terms: out }
    }

    /// Re-sorts a polynomial that was built under a different order.
    pub fn adopt(&self, f: &Polynomial) -> Polynomial {
        self.from_terms(f.terms.clone())
    }

    // ---- arithmetic ---------------------------------------------------

    fn merge(&self, f: &Polynomial, g: &Polynomial, scale_g: Coeff, shift_g: Option<&Monomial>) -> Polynomial {
        let fld = self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let gm = |t: &Term| match shift_g {
            Some(m) => t.mono.mul(m),
            None => t.mono,
        };
        while i < f.terms.len() && j < g.terms.len() {
            let a = &f.terms[i];
            let bm = gm(&g.terms[j]);
            match self.cmp(&a.mono, &bm) {
                Ordering::Greater => {
                    out.push(*a);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: fld.mul(g.terms[j].coeff, scale_g), mono: bm });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = fld.add(a.coeff, fld.mul(g.terms[j].coeff, scale_g));
                    if c != 0 {
                        out.push(Term { coeff: c, mono: a.mono });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f.terms[i..]);
        for t in &g.terms[j..] {
            out.push(Term { coeff: fld.mul(t.coeff, scale_g), mono: gm(t) });
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, 1, None)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, self.field.neg(1), None)
    }

    /// `f + c * m * g`.
    pub fn add_scaled(&self, f: &Polynomial, c: Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        if c == 0 {
            return f.clone();
        }
        self.merge(f, g, c, Some(m))
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(1))
    }

    pub fn scale(&self, f: &Polynomial, c: Coeff) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f.terms.iter().map(|t| Term { coeff: self.field.mul(t.coeff, c), mono: t.mono }).collect(),
        }
    }

    pub fn mul_term(&self, f: &Polynomial, c: Coeff, m: &Monomial) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term { coeff: self.field.mul(t.coeff, c), mono: t.mono.mul(m) })
                .collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let mut terms = Vec::with_capacity(f.len() * g.len());
        for a in &f.terms {
            for b in &g.terms {
                terms.push(Term { coeff: self.field.mul(a.coeff, b.coeff), mono: a.mono.mul(&b.mono) });
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading() {
            Some(t) if t.coeff != 1 => self.scale(f, self.field.inv(t.coeff)),
            _ => f.clone(),
        }
    }

    /// Substitutes `x_var = value` where `value` lives in this ring.
    pub fn substitute(&self, f: &Polynomial, var: usize, value: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &f.terms {
            let e = t.mono.exp(var);
            let mut rest = t.mono;
            rest.exps[var] = 0;
            rest.degree -= e;
            let piece = self.mul_term(&self.pow(value, e), t.coeff, &rest);
            acc = self.add(&acc, &piece);
        }
        acc
    }

    // ---- text format --------------------------------------------------

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let mut p = Parser { ring: self, src: text.as_bytes(), pos: 0 };
        let f = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(f)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (i, name) in self.vars.iter().enumerate() {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(name);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Canonical text: terms in descending order, balanced coefficients.
    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, t) in f.terms.iter().enumerate() {
            let c = self.field.to_signed(t.coeff);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if t.mono.is_one() {
                let _ = write!(s, "{abs}");
            } else if abs == 1 {
                s.push_str(&self.format_monomial(&t.mono));
            } else {
                let _ = write!(s, "{abs}*{}", self.format_monomial(&t.mono));
            }
        }
        s
    }
}

struct Parser<'a> {
    ring: &'a RingContext,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let ring = self.ring;
        let mut acc = Polynomial::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            acc = if sign < 0 { ring.sub(&acc, &t) } else { ring.add(&acc, &t) };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.power()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.digits()?;
            let e = e
                .parse::<u32>()
                .ok()
                .filter(|&e| e <= 1000)
                .ok_or(Error::Parse { pos: start, msg: "exponent out of range".into() })?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let f = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(f)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits()?;
                let p = self.ring.field.modulus() as u64;
                let v = digits.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                Ok(self.ring.constant(v as i64))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(vars: &[&str]) -> Arc<RingContext> {
        RingContext::new(PrimeField::default(), vars).unwrap()
    }

    #[test]
    fn parse_examples() {
        let r = ring(&["x", "y", "z"]);
        let f = r.parse("x^4 + x^2*y^2").unwrap();
        assert_eq!(f.len(), 2);
        assert!(r.parse("0").unwrap().is_zero());
        let g = r.parse("x^2*z^2 - y^2").unwrap();
        assert_eq!(g.len(), 2);
        let y2 = g.terms().iter().find(|t| t.mono == Monomial::from_exponents(&[0, 2, 0])).unwrap();
        assert_eq!(y2.coeff, 32002);
        assert_eq!(r.format(&g), "x^2*z^2 - y^2");
    }

    #[test]
    fn parse_errors() {
        let r = ring(&["x", "y"]);
        assert!(matches!(r.parse("x + w"), Err(Error::UnknownVariable(v)) if v == "w"));
        assert!(matches!(r.parse("x + * y"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(r.parse("x y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(r.parse("(x + y"), Err(Error::Parse { .. })));
    }

    #[test]
    fn multiply_examples() {
        let r = ring(&["x", "y"]);
        let f = r.parse("3*x^2 - y + 7").unwrap();
        assert_eq!(r.mul(&f, &r.one()), f);
        assert_eq!(r.mul(&r.var(0), &r.var(1)), r.parse("x*y").unwrap());
        let p = r.mul(&r.parse("x + y").unwrap(), &r.parse("x - y").unwrap());
        assert_eq!(p, r.parse("x^2 - y^2").unwrap());
    }

    #[test]
    fn homogeneity_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(r.parse("x^2 + x*y").unwrap().homogeneous_degree(), Some(2));
        assert!(!r.parse("x^2 + x").unwrap().is_homogeneous());
        assert!(!r.parse("x^2*z^2 - y^2").unwrap().is_homogeneous());
    }

    #[test]
    fn ring_validation() {
        let f = PrimeField::default();
        assert!(RingContext::new(f, &["x", "x"]).is_err());
        assert!(RingContext::new::<&str>(f, &[]).is_err());
        assert!(RingContext::new(f, &["a", "b", "c", "d", "e", "f", "g", "h", "i"]).is_err());
        assert!(RingContext::new(f, &["1x"]).is_err());
    }

    #[test]
    fn substitution() {
        let r = ring(&["x", "y"]);
        let f = r.parse("x^2*y - y^3").unwrap();
        let g = r.substitute(&f, 0, &r.parse("2*y").unwrap());
        assert_eq!(g, r.parse("3*y^3").unwrap());
    }

    /// All monomials in `n` variables of degree at most `d`.
    fn monomials_upto(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = vec![Monomial::one()];
        let mut frontier = vec![Monomial::one()];
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &frontier {
                for i in 0..n {
                    let mm = m.times_var(i);
                    if !next.contains(&mm) {
                        next.push(mm);
                    }
                }
            }
            out.extend(next.iter().copied());
            frontier = next;
        }
        out
    }

    #[test]
    fn monomial_order_axioms_exhaustive() {
        let orders = [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Elimination { split: 1 }];
        let mons = monomials_upto(3, 6);
        let small = monomials_upto(3, 2);
        for o in orders {
            for a in &mons {
                assert_eq!(o.cmp(a, a), Ordering::Equal);
                assert_ne!(o.cmp(a, &Monomial::one()), Ordering::Less);
                for b in &mons {
                    let ab = o.cmp(a, b);
                    assert_eq!(ab, o.cmp(b, a).reverse());
                    if a != b {
                        assert_ne!(ab, Ordering::Equal, "{o:?} not total");
                    }
                    if ab == Ordering::Less {
                        for m in &small {
                            assert_eq!(o.cmp(&a.mul(m), &b.mul(m)), Ordering::Less, "{o:?} not multiplicative");
                        }
                    }
                }
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((0u32..32003, 0u32..4, 0u32..4, 0u32..3), 0..6).prop_map(|ts| {
            let r = ring(&["x", "y", "z"]);
            r.from_terms(
                ts.into_iter()
                    .map(|(c, a, b, e)| Term { coeff: c, mono: Monomial::from_exponents(&[a, b, e]) })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            let r = ring(&["x", "y", "z"]);
            prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
            prop_assert_eq!(r.mul(&r.mul(&f, &g), &h), r.mul(&f, &r.mul(&g, &h)));
            prop_assert_eq!(r.mul(&f, &r.add(&g, &h)), r.add(&r.mul(&f, &g), &r.mul(&f, &h)));
            prop_assert_eq!(r.add(&r.add(&f, &g), &h), r.add(&f, &r.add(&g, &h)));
            prop_assert!(r.sub(&f, &f).is_zero());
        }

        #[test]
        fn print_parse_round_trip(f in arb_poly()) {
            let r = ring(&["x", "y", "z"]);
            let text = r.format(&f);
            prop_assert_eq!(r.parse(&text).unwrap(), f);
        }
    }
}
