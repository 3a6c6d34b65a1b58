//! Textual automorphism specifications.
//!
//! ```text
//! group-auto: g1 -> g1 g3, g2 -> g2
//! inner: 1 + g1 + (t)*g2
//! subst: x1 -> (t)*x1, x2 -> x2 + x1
//! random-inner seed=42
//! random-subst seed=42
//! compose: <spec> ; <spec>
//! ```
//!
//! In `subst`, `x_i` stands for `g_i - 1`. Linear terms form the matrix
//! `A_lin`; terms of degree two or more are added as the `J^2` tail.
//! Unlisted variables map to themselves.

use std::fmt;

use super::{AlgebraAutomorphism, CheckMode};
use crate::error::{Error, Result};
use crate::galgebra::{split_terms, split_top, AlgebraElement, GroupAlgebra};
use crate::linalg::Matrix;
use crate::pgroup::parse::{parse_generator, parse_word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutoSpec {
    /// Images of some pc-generators; the rest must be forced by relations.
    GroupAuto(Vec<(usize, String)>),
    Inner(String),
    /// `(variable, polynomial)` pairs.
    Subst(Vec<(usize, String)>),
    RandomInner(u64),
    RandomSubst(u64),
    /// Applied right to left, like function composition.
    Compose(Vec<AutoSpec>),
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_seed(rest: &str) -> Result<u64> {
    rest.trim()
        .strip_prefix("seed=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| perr(format!("expected `seed=<u64>`, found `{}`", rest.trim())))
}

fn parse_variable(tok: &str) -> Result<usize> {
    let n: usize = tok
        .trim()
        .strip_prefix('x')
        .and_then(|s| s.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| perr(format!("expected a variable like `x1`, found `{tok}`")))?;
    Ok(n - 1)
}

fn parse_maps(body: &str, lhs: fn(&str) -> Result<usize>) -> Result<Vec<(usize, String)>> {
    let mut out: Vec<(usize, String)> = Vec::new();
    for part in split_top(body, ',') {
        let (l, r) = part
            .split_once("->")
            .ok_or_else(|| perr(format!("expected `lhs -> rhs`, found `{}`", part.trim())))?;
        let i = lhs(l)?;
        if out.iter().any(|(j, _)| *j == i) {
            return Err(perr(format!("`{}` is mapped twice", l.trim())));
        }
        let r = r.trim();
        if r.is_empty() {
            return Err(perr(format!("empty image for `{}`", l.trim())));
        }
        out.push((i, r.to_string()));
    }
    Ok(out)
}

impl AutoSpec {
    pub fn parse(s: &str) -> Result<AutoSpec> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("compose:") {
            let parts = rest
                .split(';')
                .map(AutoSpec::parse)
                .collect::<Result<Vec<_>>>()?;
            if parts.len() < 2 {
                return Err(perr("compose needs at least two specs separated by `;`"));
            }
            return Ok(AutoSpec::Compose(parts));
        }
        if let Some(rest) = s.strip_prefix("random-inner") {
            return Ok(AutoSpec::RandomInner(parse_seed(rest)?));
        }
        if let Some(rest) = s.strip_prefix("random-subst") {
            return Ok(AutoSpec::RandomSubst(parse_seed(rest)?));
        }
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| perr(format!("unknown automorphism spec `{s}`")))?;
        match kind.trim() {
            "group-auto" => {
                let maps = parse_maps(body, parse_generator)?;
                for (_, w) in &maps {
                    parse_word(w)?;
                }
                Ok(AutoSpec::GroupAuto(maps))
            }
            "inner" => Ok(AutoSpec::Inner(body.trim().to_string())),
            "subst" => Ok(AutoSpec::Subst(parse_maps(body, parse_variable)?)),
            other => Err(perr(format!("unknown automorphism kind `{other}`"))),
        }
    }

    pub fn build(&self, alg: &GroupAlgebra, check: CheckMode) -> Result<AlgebraAutomorphism> {
        let g = alg.group();
        match self {
            AutoSpec::GroupAuto(maps) => {
                let mut images = vec![None; g.m()];
                for (i, w) in maps {
                    if *i >= g.m() {
                        return Err(perr(format!("g{} is not a generator of {}", i + 1, g.name())));
                    }
                    let word = parse_word(w)?;
                    if word.iter().any(|&(j, _)| j >= g.m()) {
                        return Err(perr(format!("`{w}` uses a generator outside {}", g.name())));
                    }
                    images[*i] = Some(g.collect(&word));
                }
                let sigma = g.group_automorphism_partial(&images)?;
                AlgebraAutomorphism::from_group_automorphism(alg, &sigma, check)
            }
            AutoSpec::Inner(u) => AlgebraAutomorphism::inner(alg, &alg.parse_element(u)?, check),
            AutoSpec::Subst(maps) => {
                let (a, higher) = parse_substitution(alg, maps)?;
                let mut alpha = AlgebraAutomorphism::elementary_abelian_substitution(alg, &a, Some(&higher), check)?;
                alpha.provenance = self.to_string();
                Ok(alpha)
            }
            AutoSpec::RandomInner(seed) => AlgebraAutomorphism::random_inner(alg, *seed, check),
            AutoSpec::RandomSubst(seed) => AlgebraAutomorphism::random_substitution(alg, *seed, check),
            AutoSpec::Compose(parts) => {
                let mut acc = parts[0].build(alg, check)?;
                for part in &parts[1..] {
                    acc = AlgebraAutomorphism::compose(alg, &acc, &part.build(alg, check)?)?;
                }
                acc.provenance = self.to_string();
                Ok(acc)
            }
        }
    }
}

/// Split each image polynomial into its linear row and its higher part.
fn parse_substitution(alg: &GroupAlgebra, maps: &[(usize, String)]) -> Result<(Matrix, Vec<AlgebraElement>)> {
    let g = alg.group();
    let k = alg.field();
    let m = g.m();
    let xs: Vec<AlgebraElement> = g.generators().iter().map(|&x| alg.group_minus_one(x)).collect();
    let mut a = Matrix::identity(k, m);
    let mut higher = vec![alg.zero(); m];
    for (i, poly) in maps {
        if *i >= m {
            return Err(perr(format!("x{} is not a variable of {}", i + 1, g.name())));
        }
        for j in 0..m {
            a[(*i, j)] = k.zero();
        }
        for (neg, term) in split_terms(poly)? {
            let mut c = if neg { k.neg(k.one()) } else { k.one() };
            let mut exps = vec![0u32; m];
            for factor in split_top(term, '*') {
                let factor = factor.trim();
                if factor.starts_with('(') {
                    c = k.mul(c, k.parse(factor)?);
                    continue;
                }
                for piece in factor.split_whitespace() {
                    if piece.starts_with('x') {
                        let (v, e) = match piece.split_once('^') {
                            Some((v, e)) => (v, e.parse::<u32>().map_err(|_| perr(format!("bad exponent in `{piece}`")))?),
                            None => (piece, 1),
                        };
                        let j = parse_variable(v)?;
                        if j >= m {
                            return Err(perr(format!("x{} is not a variable of {}", j + 1, g.name())));
                        }
                        exps[j] += e;
                    } else {
                        c = k.mul(c, k.parse(piece)?);
                    }
                }
            }
            match exps.iter().sum::<u32>() {
                0 => return Err(perr(format!("constant term `{term}` in the image of x{}", i + 1))),
                1 => {
                    let j = exps.iter().position(|&e| e == 1).unwrap();
                    a[(*i, j)] = k.add(a[(*i, j)], c);
                }
                _ => {
                    let mono = exps
                        .iter()
                        .enumerate()
                        .fold(alg.one(), |acc, (j, &e)| alg.mul(&acc, &alg.pow(&xs[j], e as u64)));
                    higher[*i] = alg.add(&higher[*i], &alg.scale(c, &mono));
                }
            }
        }
    }
    Ok((a, higher))
}

impl fmt::Display for AutoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let maps = |pre: char, maps: &[(usize, String)]| -> String {
            maps.iter()
                .map(|(i, w)| format!("{pre}{} -> {w}", i + 1))
                .collect::<Vec<_>>()
                .join(", ")
        };
        match self {
            AutoSpec::GroupAuto(m) => write!(f, "group-auto: {}", maps('g', m)),
            AutoSpec::Inner(u) => write!(f, "inner: {u}"),
            AutoSpec::Subst(m) => write!(f, "subst: {}", maps('x', m)),
            AutoSpec::RandomInner(s) => write!(f, "random-inner seed={s}"),
            AutoSpec::RandomSubst(s) => write!(f, "random-subst seed={s}"),
            AutoSpec::Compose(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "compose: {}", parts.join(" ; "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::Field;
    use crate::pgroup::catalog;
    use std::sync::Arc;

    #[test]
    fn parse_and_display() {
        for s in [
            "group-auto: g1 -> g1 g3, g2 -> g2",
            "inner: 1 + g1 + (t)*g2",
            "subst: x1 -> (t)*x1, x2 -> x2 + x1",
            "random-inner seed=42",
            "random-subst seed=42",
            "compose: random-inner seed=1 ; group-auto: g1 -> g2, g2 -> g1",
        ] {
            assert_eq!(AutoSpec::parse(s).unwrap().to_string(), s);
        }
        assert!(AutoSpec::parse("rotate: g1").is_err());
        assert!(AutoSpec::parse("random-inner 42").is_err());
        assert!(AutoSpec::parse("group-auto: g1 -> g1, g1 -> g2").is_err());
        assert!(AutoSpec::parse("compose: random-inner seed=1").is_err());
    }

    #[test]
    fn d8_partial_images_are_completed() {
        let alg = GroupAlgebra::new(Arc::new(catalog("D8").unwrap()), Field::prime(2).unwrap());
        let alpha = AutoSpec::parse("group-auto: g1 -> g1 g3, g2 -> g2")
            .unwrap()
            .build(&alg, CheckMode::Exhaustive)
            .unwrap();
        // g3 = g2^2 is fixed
        let g3 = alg.group().generator(2);
        assert_eq!(alpha.image(g3), alg.basis(g3));
    }

    #[test]
    fn subst_with_tail() {
        let alg = GroupAlgebra::new(Arc::new(catalog("C3xC3").unwrap()), Field::new(3, 2).unwrap());
        let spec = AutoSpec::parse("subst: x1 -> (t)*x1 + x1*x2, x2 -> x2 + 2*x1 + (t+1)*x2^2").unwrap();
        let alpha = spec.build(&alg, CheckMode::Exhaustive).unwrap();
        assert_eq!(alpha.provenance(), spec.to_string());
        let bad = AutoSpec::parse("subst: x1 -> 1 + x1").unwrap();
        assert!(bad.build(&alg, CheckMode::Generators).is_err());
        let singular = AutoSpec::parse("subst: x1 -> x2").unwrap();
        assert_eq!(singular.build(&alg, CheckMode::Generators).unwrap_err(), Error::SingularLinearPart);
    }
}
