//! Text format for pc-presentations.
//!
//! ```text
//! pcgroup p=2 m=3
//! g1^2 = g3
//! g2^2 = 1
//! g3^2 = 1
//! [g2,g1] = g3
//! ```
//!
//! One relation per line; `#` starts a comment. Omitted power and commutator
//! relations are trivial. Right-hand sides are normal-form words
//! `g1^e1 g2^e2 ...` or `1`.

use super::{GroupElement, PcGroup, Word};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

/// `gN` with N >= 1, returned 0-based.
pub(crate) fn parse_generator(tok: &str) -> Result<usize> {
    let n: usize = tok
        .trim()
        .strip_prefix('g')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected a generator like `g1`, found `{tok}`")))?;
    if n == 0 {
        return Err(Error::Parse("generators are numbered from g1".into()));
    }
    Ok(n - 1)
}

/// A word such as `g2 g1^2`, `g1*g3` or `1`.
pub(crate) fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim();
    if s == "1" {
        return Ok(Vec::new());
    }
    let mut word = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        if tok == "1" {
            continue;
        }
        let (g, e) = match tok.split_once('^') {
            Some((g, e)) => (
                parse_generator(g)?,
                e.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?,
            ),
            None => (parse_generator(tok)?, 1),
        };
        word.push((g, e));
    }
    if word.is_empty() {
        return Err(Error::Parse(format!("empty word `{s}`")));
    }
    Ok(word)
}

/// A normal-form word as an exponent vector.
fn parse_normal_form(s: &str, p: u32, m: usize) -> Result<GroupElement> {
    let mut exps = vec![0; m];
    let mut last: Option<usize> = None;
    for (g, e) in parse_word(s)? {
        if g >= m {
            return Err(Error::Parse(format!("generator g{} out of range", g + 1)));
        }
        if last.is_some_and(|l| g <= l) || e >= p {
            return Err(Error::Parse(format!("`{s}` is not a normal-form word")));
        }
        last = Some(g);
        exps[g] = e;
    }
    Ok(GroupElement::new(exps))
}

pub(crate) fn parse_presentation(text: &str) -> Result<PcGroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::Parse("empty presentation".into()))?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("pcgroup") {
        return Err(perr(hl, "expected header `pcgroup p=<prime> m=<count>`"));
    }
    let (mut p, mut m, mut name) = (None, None, String::from("custom"));
    for f in fields {
        match f.split_once('=') {
            Some(("p", v)) => p = v.parse::<u32>().ok(),
            Some(("m", v)) => m = v.parse::<usize>().ok(),
            Some(("name", v)) => name = v.to_string(),
            _ => return Err(perr(hl, format!("unknown header field `{f}`"))),
        }
    }
    let p = p.ok_or_else(|| perr(hl, "missing or invalid p"))?;
    let m = m.ok_or_else(|| perr(hl, "missing or invalid m"))?;
    if m == 0 || m > 24 {
        return Err(perr(hl, "m out of range"));
    }

    let mut powers = vec![GroupElement::new(vec![0; m]); m];
    let mut power_seen = vec![false; m];
    let mut commutators: Vec<((usize, usize), GroupElement)> = Vec::new();
    for (ln, line) in lines {
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| perr(ln, "expected `lhs = rhs`"))?;
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        let value = parse_normal_form(rhs, p, m).map_err(|e| perr(ln, e))?;
        if let Some(inner) = lhs.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| perr(ln, "commutator must look like [gj,gi]"))?;
            let j = parse_generator(a).map_err(|e| perr(ln, e))?;
            let i = parse_generator(b).map_err(|e| perr(ln, e))?;
            if j >= m || i >= j {
                return Err(perr(ln, "commutator [gj,gi] needs m >= j > i"));
            }
            if commutators.iter().any(|((jj, ii), _)| (*jj, *ii) == (j, i)) {
                return Err(perr(ln, "duplicate commutator relation"));
            }
            commutators.push(((j, i), value));
        } else {
            let (g, e) = lhs
                .split_once('^')
                .ok_or_else(|| perr(ln, "power relation must look like gi^p"))?;
            let i = parse_generator(g).map_err(|e| perr(ln, e))?;
            if i >= m {
                return Err(perr(ln, "generator out of range"));
            }
            if e.trim().parse::<u32>().ok() != Some(p) {
                return Err(perr(ln, format!("power relation exponent must be p = {p}")));
            }
            if power_seen[i] {
                return Err(perr(ln, "duplicate power relation"));
            }
            power_seen[i] = true;
            powers[i] = value;
        }
    }
    PcGroup::new(name, p, powers, commutators)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_example() {
        let g = PcGroup::parse("pcgroup p=2 m=3\ng1^2 = g3\ng2^2 = 1\ng3^2 = 1\n[g2,g1] = g3\n").unwrap();
        assert_eq!(g.order(), 8);
        // g1 has order 4, g2 order 2, and they do not commute: D8 again
        assert_eq!(g.pow(g.generator(0), 2), g.generator(2));
        assert!(!g.is_abelian());
        let again = PcGroup::parse(&g.presentation()).unwrap();
        assert_eq!(again.presentation(), g.presentation());
    }

    #[test]
    fn words() {
        assert_eq!(parse_word("g2 g1^2").unwrap(), vec![(1, 1), (0, 2)]);
        assert_eq!(parse_word("g1*g3").unwrap(), vec![(0, 1), (2, 1)]);
        assert_eq!(parse_word("1").unwrap(), vec![]);
        assert!(parse_word("x1").is_err());
        assert!(parse_word("g0").is_err());
    }

    #[test]
    fn rejects_malformed() {
        assert!(PcGroup::parse("group p=2 m=1").is_err());
        assert!(PcGroup::parse("pcgroup p=2 m=2\ng1^3 = 1").is_err());
        assert!(PcGroup::parse("pcgroup p=2 m=2\n[g1,g2] = 1").is_err());
        assert!(PcGroup::parse("pcgroup p=2 m=2\ng1^2 = g2 g1").is_err());
        assert!(PcGroup::parse("pcgroup p=3 m=2\ng1^3 = g2^3").is_err());
        assert!(matches!(
            PcGroup::parse("pcgroup p=3 m=3\ng1^3 = g2\n[g2,g1] = g3"),
            Err(Error::InconsistentPresentation(_))
        ));
    }
}
