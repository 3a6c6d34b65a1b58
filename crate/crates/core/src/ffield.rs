//! Exact arithmetic in GF(p^n).
//!
//! A [`Field`] owns the characteristic `p`, the degree `n` and a monic
//! irreducible modulus of degree `n` over GF(p). Elements are dense
//! coefficient vectors `c_0 + c_1 t + ... + c_{n-1} t^{n-1}` stored inline in
//! a [`FieldElement`], which is `Copy`. All arithmetic goes through the field:
//!
//! ```
//! use jennings_socle::ffield::Field;
//!
//! let k = Field::new(3, 2).unwrap(); // GF(9) with modulus t^2 + 1
//! let t = k.parse("t").unwrap();
//! assert_eq!(k.mul(t, t), k.from_int(2));
//! assert_eq!(k.format(k.inv(t).unwrap()), "2*t");
//! ```
//!
//! Every element carries a tag derived from its field, so mixing elements of
//! different fields is caught by [`Field::ensure`].

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 8;

#[derive(Debug, PartialEq, Eq)]
struct FieldSpec {
    p: u32,
    n: usize,
    /// Monic modulus, low degree first, length `n + 1`.
    modulus: Vec<u32>,
    tag: u32,
}

/// The finite field GF(p^n) for a fixed modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    spec: Arc<FieldSpec>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElement {
    tag: u32,
    coeffs: [u16; MAX_DEGREE],
}

impl FieldElement {
    /// Coefficients `c_0, ..., c_{MAX_DEGREE-1}`; entries past the field degree are zero.
    pub fn raw_coeffs(&self) -> &[u16; MAX_DEGREE] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// Polynomials over GF(p) as plain coefficient vectors, low degree first.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        for (i, &mc) in m.iter().enumerate() {
            let sub = (lead * mc as u64) % p as u64;
            let cell = &mut r[shift + i];
            *cell = ((*cell as u64 + p as u64 - sub) % p as u64) as u32;
        }
        poly_trim(&mut r);
    }
    r
}

/// Trial factoring: no monic polynomial of degree `1..=n/2` divides `m`.
pub fn is_irreducible(m: &[u32], p: u32) -> bool {
    let n = m.len() - 1;
    if n == 0 {
        return false;
    }
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                f.push((c % p as u64) as u32);
                c /= p as u64;
            }
            f.push(1);
            if poly_rem(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Coefficients low degree first, printed highest degree first.
fn format_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (d, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match d {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{d}"),
        };
        terms.push(match (c, d) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Lexicographically smallest monic irreducible polynomial of degree `n`,
/// coefficients compared from the constant term upward.
pub fn smallest_irreducible(p: u32, n: usize) -> Vec<u32> {
    if n == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(n as u32);
    for code in 0..count {
        // Lexicographic in (c_0, c_1, ...): c_0 is the most significant digit.
        let mut m = vec![0u32; n + 1];
        let mut c = code;
        for i in (0..n).rev() {
            m[i] = (c % p as u64) as u32;
            c /= p as u64;
        }
        m[n] = 1;
        if m[0] != 0 && is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field {
    /// GF(p^n) with the lexicographically smallest monic irreducible modulus.
    pub fn new(p: u32, n: usize) -> Result<Field> {
        Self::check_params(p, n)?;
        Self::build(p, smallest_irreducible(p, n))
    }

    pub fn prime(p: u32) -> Result<Field> {
        Self::new(p, 1)
    }

    /// GF(p^n) with an explicit monic modulus (low degree first, length n + 1).
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Field> {
        if modulus.len() < 2 {
            return Err(Error::InvalidField("modulus must have degree >= 1".into()));
        }
        let n = modulus.len() - 1;
        Self::check_params(p, n)?;
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficients must lie in [0, p)".into()));
        }
        if modulus[n] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if !is_irreducible(modulus, p) {
            return Err(Error::InvalidField("modulus is reducible".into()));
        }
        Self::build(p, modulus.to_vec())
    }

    fn check_params(p: u32, n: usize) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 15 {
            return Err(Error::InvalidField(format!("characteristic {p} is too large")));
        }
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidField(format!("degree {n} outside 1..={MAX_DEGREE}")));
        }
        Ok(())
    }

    fn build(p: u32, modulus: Vec<u32>) -> Result<Field> {
        let n = modulus.len() - 1;
        let mut h = DefaultHasher::new();
        (p, &modulus).hash(&mut h);
        let tag = h.finish() as u32;
        Ok(Field {
            spec: Arc::new(FieldSpec { p, n, modulus, tag }),
        })
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn degree(&self) -> usize {
        self.spec.n
    }

    pub fn order(&self) -> u64 {
        (self.spec.p as u64).pow(self.spec.n as u32)
    }

    pub fn is_prime_field(&self) -> bool {
        self.spec.n == 1
    }

    pub fn modulus(&self) -> &[u32] {
        &self.spec.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            tag: self.spec.tag,
            coeffs: [0; MAX_DEGREE],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = v.rem_euclid(self.spec.p as i64) as u16;
        e
    }

    /// Element from coefficients `c_0, c_1, ...`; the slice may be shorter than `n`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.spec.n {
            return Err(Error::DomainError(format!(
                "{} coefficients for a field of degree {}",
                coeffs.len(),
                self.spec.n
            )));
        }
        let mut e = self.zero();
        for (i, &c) in coeffs.iter().enumerate() {
            e.coeffs[i] = (c % self.spec.p) as u16;
        }
        Ok(e)
    }

    /// The generator `t` of the extension (for a prime field, the root of the modulus).
    pub fn t(&self) -> FieldElement {
        if self.spec.n == 1 {
            let c0 = self.spec.modulus[0] as i64;
            return self.from_int(-c0);
        }
        let mut e = self.zero();
        e.coeffs[1] = 1;
        e
    }

    pub fn coeffs<'a>(&self, a: &'a FieldElement) -> &'a [u16] {
        &a.coeffs[..self.spec.n]
    }

    /// Position of `a` in the enumeration `sum c_i p^i`.
    pub fn index_of(&self, a: FieldElement) -> u64 {
        let p = self.spec.p as u64;
        self.coeffs(&a).iter().rev().fold(0, |acc, &c| acc * p + c as u64)
    }

    pub fn from_index(&self, mut idx: u64) -> FieldElement {
        let p = self.spec.p as u64;
        let mut e = self.zero();
        for i in 0..self.spec.n {
            e.coeffs[i] = (idx % p) as u16;
            idx /= p;
        }
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    /// `Err(FieldMismatch)` unless every element belongs to this field.
    pub fn ensure(&self, elems: &[FieldElement]) -> Result<()> {
        if elems.iter().all(|e| e.tag == self.spec.tag) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// True when `a` lies in GF(p).
    pub fn is_in_prime_field(&self, a: FieldElement) -> bool {
        a.coeffs[1..].iter().all(|&c| c == 0)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.tag == self.spec.tag && b.tag == self.spec.tag);
        let p = self.spec.p as u32;
        let mut r = a;
        for i in 0..self.spec.n {
            let s = a.coeffs[i] as u32 + b.coeffs[i] as u32;
            r.coeffs[i] = if s >= p { s - p } else { s } as u16;
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.spec.p as u32;
        let mut r = a;
        for i in 0..self.spec.n {
            let c = a.coeffs[i] as u32;
            r.coeffs[i] = if c == 0 { 0 } else { (p - c) as u16 };
        }
        r
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.tag == self.spec.tag && b.tag == self.spec.tag);
        let p = self.spec.p as u64;
        if self.spec.n == 1 {
            let mut r = a;
            r.coeffs[0] = ((a.coeffs[0] as u64 * b.coeffs[0] as u64) % p) as u16;
            return r;
        }
        let mut wide = [0u64; 2 * MAX_DEGREE];
        self.mul_acc(&mut wide, a, b);
        self.reduce_wide(&wide)
    }

    /// Add the unreduced polynomial product `a * b` into `acc`
    /// (length at least `2n - 1`). Pair with [`Field::reduce_wide`].
    #[inline]
    pub fn mul_acc(&self, acc: &mut [u64], a: FieldElement, b: FieldElement) {
        let n = self.spec.n;
        for i in 0..n {
            let ai = a.coeffs[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..n {
                acc[i + j] += ai * b.coeffs[j] as u64;
            }
        }
    }

    /// Reduce an accumulated polynomial (length `<= 2n - 1`) to a field element.
    pub fn reduce_wide(&self, acc: &[u64]) -> FieldElement {
        let p = self.spec.p as u64;
        let n = self.spec.n;
        let len = acc.len().min(2 * n - 1);
        let mut w = [0u64; 2 * MAX_DEGREE];
        for i in 0..len {
            w[i] = acc[i] % p;
        }
        // t^n = -(m_0 + ... + m_{n-1} t^{n-1})
        for d in (n..len).rev() {
            let lead = w[d];
            if lead == 0 {
                continue;
            }
            w[d] = 0;
            for (i, &mc) in self.spec.modulus[..n].iter().enumerate() {
                let cell = &mut w[d - n + i];
                *cell = (*cell + (p - mc as u64) * lead) % p;
            }
        }
        let mut r = self.zero();
        for i in 0..n {
            r.coeffs[i] = w[i] as u16;
        }
        r
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via `a^(q-2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Membership in the subgroup `(k^x)^(p-1)` of index `p - 1` in the cyclic
    /// group `k^x`: equivalent to `a^((q-1)/(p-1)) = 1`.
    pub fn is_pm1_power(&self, a: FieldElement) -> Result<bool> {
        self.ensure(&[a])?;
        if a.is_zero() {
            return Err(Error::DomainError("zero is not in k^x".into()));
        }
        let e = (self.order() - 1) / (self.spec.p as u64 - 1);
        Ok(self.pow(a, e) == self.one())
    }

    /// Literal form: a decimal integer over a prime field, otherwise a polynomial in `t`.
    pub fn format(&self, a: FieldElement) -> String {
        if self.spec.n == 1 {
            return a.coeffs[0].to_string();
        }
        let coeffs: Vec<u32> = a.coeffs[..self.spec.n].iter().map(|&c| c as u32).collect();
        format_poly(&coeffs)
    }

    /// The modulus in the same notation, e.g. `t^2+t+1`.
    pub fn modulus_string(&self) -> String {
        format_poly(&self.spec.modulus)
    }

    pub fn display(&self, a: FieldElement) -> impl fmt::Display + '_ {
        struct D<'a>(&'a Field, FieldElement);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        D(self, a)
    }

    /// Parse a field literal: integers, `t`, `+ - * ^` and parentheses,
    /// e.g. `2*t+1` or `(t)`. The variable `t` is rejected over a prime field.
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let toks = tokenize(s)?;
        let mut parser = LiteralParser { k: self, toks: &toks, pos: 0 };
        let v = parser.expr()?;
        if parser.pos != toks.len() {
            return Err(Error::Parse(format!("trailing input in field literal `{s}`")));
        }
        Ok(v)
    }

    /// Parse a monic polynomial in `t` over GF(p) into a coefficient vector
    /// (low degree first). Used for `--field p,n,modulus`.
    pub fn parse_prime_poly(p: u32, s: &str) -> Result<Vec<u32>> {
        // Coefficients are collected syntactically: sum of c*t^e terms.
        let mut coeffs: Vec<u32> = Vec::new();
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            terms.push(cur);
        }
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (coef, mono) = match body.split_once('*') {
                Some((c, m)) => (parse_u64(c)?, m.to_string()),
                None if body.contains('t') => (1, body.to_string()),
                None => (parse_u64(body)?, String::new()),
            };
            let exp = if mono.is_empty() {
                0
            } else if mono == "t" {
                1
            } else if let Some(e) = mono.strip_prefix("t^") {
                parse_u64(e)? as usize
            } else {
                return Err(Error::Parse(format!("bad modulus term `{term}`")));
            };
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, 0);
            }
            let c = (coef % p as u64) as u32;
            let c = if neg { (p - c) % p } else { c };
            coeffs[exp] = (coeffs[exp] + c) % p;
        }
        poly_trim(&mut coeffs);
        Ok(coeffs)
    }
}

fn parse_u64(s: &str) -> Result<u64> {
    s.parse::<u64>()
        .map_err(|_| Error::Parse(format!("expected an integer, found `{s}`")))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    T,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(x) = d.to_digit(10) {
                        v = v
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(x as u64))
                            .ok_or_else(|| Error::Parse("integer literal too large".into()))?;
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Num(v));
            }
            't' => {
                chars.next();
                out.push(Tok::T);
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            other => return Err(Error::Parse(format!("unexpected `{other}` in field literal"))),
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("empty field literal".into()));
    }
    Ok(out)
}

struct LiteralParser<'a> {
    k: &'a Field,
    toks: &'a [Tok],
    pos: usize,
}

impl LiteralParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<FieldElement> {
        let mut neg = false;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            neg = true;
        }
        let mut acc = self.term()?;
        if neg {
            acc = self.k.neg(acc);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.k.add(acc, t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.k.sub(acc, t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FieldElement> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.power()?;
            acc = self.k.mul(acc, f);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<FieldElement> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    return Ok(self.k.pow(base, *e));
                }
                _ => return Err(Error::Parse("expected exponent after `^`".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FieldElement> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(self.k.from_int((v % self.k.p() as u64) as i64))
            }
            Some(Tok::T) => {
                if self.k.is_prime_field() {
                    return Err(Error::Parse("`t` is not defined over a prime field".into()));
                }
                self.pos += 1;
                Ok(self.k.t())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?} in field literal"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32, n: usize) -> Field {
        Field::new(p, n).unwrap()
    }

    #[test]
    fn prime_field_products() {
        let k = gf(3, 1);
        assert_eq!(k.mul(k.from_int(2), k.from_int(2)), k.one());
    }

    #[test]
    fn gf4_reduction() {
        let k = gf(2, 2);
        assert_eq!(k.modulus(), &[1, 1, 1]);
        let t = k.t();
        assert_eq!(k.mul(t, t), k.parse("t+1").unwrap());
    }

    #[test]
    fn gf9_inverse_of_t_matches_search() {
        let k = gf(3, 2);
        assert_eq!(k.modulus(), &[1, 0, 1]);
        let t = k.t();
        let found: Vec<_> = k
            .elements()
            .filter(|&x| !x.is_zero() && k.mul(t, x) == k.one())
            .collect();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0], k.parse("2*t").unwrap());
        assert_eq!(k.inv(t).unwrap(), found[0]);
    }

    #[test]
    fn default_moduli() {
        // t^2 + 1 splits over GF(5); t^2 + t + 1 is the first irreducible candidate
        assert_eq!(gf(5, 2).modulus(), &[1, 1, 1]);
        assert_eq!(gf(2, 3).modulus(), &[1, 0, 1, 1]);
        assert_eq!(gf(7, 1).modulus(), &[0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::new(4, 1), Err(Error::InvalidField(_))));
        assert!(matches!(Field::new(2, 9), Err(Error::InvalidField(_))));
        assert!(matches!(Field::with_modulus(5, &[1, 0, 1]), Err(Error::InvalidField(_))));
        assert!(matches!(Field::with_modulus(3, &[1, 0, 2]), Err(Error::InvalidField(_))));
        assert!(Field::with_modulus(3, &[2, 1, 1]).is_ok());
    }

    #[test]
    fn inverse_of_zero() {
        let k = gf(5, 2);
        assert_eq!(k.inv(k.zero()), Err(Error::DivisionByZero));
        assert!(matches!(k.is_pm1_power(k.zero()), Err(Error::DomainError(_))));
    }

    #[test]
    fn mismatch_detected() {
        let a = gf(3, 1).one();
        let k9 = gf(3, 2);
        assert_eq!(k9.ensure(&[a]), Err(Error::FieldMismatch));
        assert_eq!(k9.is_pm1_power(a), Err(Error::FieldMismatch));
        assert!(k9.ensure(&[k9.t()]).is_ok());
    }

    #[test]
    fn pm1_powers_small() {
        let k = gf(3, 1);
        assert!(k.is_pm1_power(k.one()).unwrap());
        assert!(!k.is_pm1_power(k.from_int(2)).unwrap());
        let k2 = gf(2, 1);
        assert!(k2.is_pm1_power(k2.one()).unwrap());
        let k4 = gf(2, 2);
        for a in k4.elements().filter(|a| !a.is_zero()) {
            assert!(k4.is_pm1_power(a).unwrap());
        }
    }

    #[test]
    fn pm1_powers_gf9_generator() {
        let k = gf(3, 2);
        // a generator has multiplicative order 8
        let zeta = k
            .elements()
            .find(|&a| {
                !a.is_zero() && (1..8).all(|e| k.pow(a, e) != k.one())
            })
            .unwrap();
        let squares: Vec<_> = k
            .elements()
            .filter(|a| !a.is_zero())
            .map(|a| k.mul(a, a))
            .collect();
        let z2 = k.mul(zeta, zeta);
        assert!(squares.contains(&z2));
        assert!(!squares.contains(&zeta));
        assert!(k.is_pm1_power(z2).unwrap());
        assert!(!k.is_pm1_power(zeta).unwrap());
    }

    #[test]
    fn pm1_subgroup_matches_enumeration() {
        for (p, n) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (5, 3), (7, 2), (11, 2)] {
            let k = gf(p, n);
            if k.order() > 125 {
                continue;
            }
            let powers: std::collections::HashSet<_> = k
                .elements()
                .filter(|a| !a.is_zero())
                .map(|a| k.pow(a, p as u64 - 1))
                .collect();
            for a in k.elements().filter(|a| !a.is_zero()) {
                assert_eq!(k.is_pm1_power(a).unwrap(), powers.contains(&a), "GF({p}^{n})");
            }
        }
    }

    #[test]
    fn literal_round_trip() {
        let k = gf(5, 3);
        for a in k.elements() {
            assert_eq!(k.parse(&k.format(a)).unwrap(), a);
        }
        assert_eq!(k.format(k.parse("2 * t + 1").unwrap()), "2*t+1");
        assert_eq!(k.parse("-1").unwrap(), k.from_int(4));
        assert!(gf(5, 1).parse("t").is_err());
        assert!(k.parse("2*").is_err());
        assert!(k.parse("(t+1").is_err());
    }

    #[test]
    fn modulus_literal() {
        assert_eq!(Field::parse_prime_poly(3, "t^2+1").unwrap(), vec![1, 0, 1]);
        assert_eq!(Field::parse_prime_poly(3, "t^2 + 2*t + 2").unwrap(), vec![2, 2, 1]);
        assert_eq!(Field::parse_prime_poly(5, "t^2-3").unwrap(), vec![2, 0, 1]);
    }

    fn field_and_pair() -> impl Strategy<Value = (Field, FieldElement, FieldElement, FieldElement)> {
        prop_oneof![Just((2u32, 3usize)), Just((3, 2)), Just((5, 2)), Just((7, 1)), Just((3, 4))]
            .prop_flat_map(|(p, n)| {
                let q = (p as u64).pow(n as u32);
                (Just((p, n)), 0..q, 0..q, 0..q)
            })
            .prop_map(|((p, n), a, b, c)| {
                let k = gf(p, n);
                let (a, b, c) = (k.from_index(a), k.from_index(b), k.from_index(c));
                (k, a, b, c)
            })
    }

    proptest! {
        #[test]
        fn field_axioms((k, a, b, c) in field_and_pair()) {
            prop_assert_eq!(k.add(a, b), k.add(b, a));
            prop_assert_eq!(k.mul(a, b), k.mul(b, a));
            prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
            prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
            prop_assert_eq!(k.add(a, k.neg(a)), k.zero());
            if !a.is_zero() {
                prop_assert_eq!(k.mul(a, k.inv(a).unwrap()), k.one());
                prop_assert_eq!(k.pow(a, k.order() - 1), k.one());
            }
        }

        #[test]
        fn frobenius_is_additive((k, a, b, _c) in field_and_pair()) {
            let p = k.p() as u64;
            prop_assert_eq!(k.pow(k.add(a, b), p), k.add(k.pow(a, p), k.pow(b, p)));
        }
    }
}
