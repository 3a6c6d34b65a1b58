//! The group algebra `kG`, its radical filtration and socle.
//!
//! Elements are dense coefficient vectors indexed by the group elements in
//! normal-form order. The Jacobson radical `J` is the augmentation ideal,
//! spanned by the `g - 1`; its powers are computed as
//! `J^{r+1} = span{ x (g_i - 1) : x in J^r, g_i a pc-generator }`.
//!
//! The filtration is defined over GF(p), so it is computed once over the
//! prime field and then read in `k`.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElement};
use crate::linalg::{Echelon, Matrix};
use crate::pgroup::{parse::parse_word, PcGroup, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    coeffs: Vec<FieldElement>,
}

impl AlgebraElement {
    pub fn from_coeffs(coeffs: Vec<FieldElement>) -> AlgebraElement {
        AlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    pub fn coeff(&self, g: usize) -> FieldElement {
        self.coeffs[g]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }
}

/// Row-echelon bases of `J^0, J^1, ..., J^{s+1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalFiltration {
    powers: Vec<Echelon>,
}

impl RadicalFiltration {
    /// The socle degree `s`: the largest `r` with `J^r != 0`.
    pub fn socle_degree(&self) -> usize {
        self.powers.len() - 2
    }

    /// `dim J^r` for `r = 0 ..= s + 1`.
    pub fn dims(&self) -> Vec<usize> {
        self.powers.iter().map(Echelon::rank).collect()
    }

    /// `dim J^r / J^{r+1}` for `r = 0 ..= s`.
    pub fn gr_dims(&self) -> Vec<usize> {
        self.powers.windows(2).map(|w| w[0].rank() - w[1].rank()).collect()
    }

    /// Echelon basis of `J^r` (zero for `r > s`).
    pub fn power(&self, r: usize) -> &Echelon {
        &self.powers[r.min(self.powers.len() - 1)]
    }

    /// Pivot columns of `J^r` that are not pivots of `J^{r+1}`; they index
    /// the fixed complement basis of `gr_r`.
    pub fn gr_pivots(&self, r: usize) -> Vec<usize> {
        let next = self.power(r + 1).pivots();
        self.power(r)
            .pivots()
            .iter()
            .copied()
            .filter(|c| !next.contains(c))
            .collect()
    }
}

pub struct GroupAlgebra {
    group: Arc<PcGroup>,
    field: Field,
    prime: Field,
    filtration: OnceLock<RadicalFiltration>,
}

impl GroupAlgebra {
    /// `kG`. Panics if the characteristic of `k` differs from the prime of `G`;
    /// use [`GroupAlgebra::try_new`] for a checked constructor.
    pub fn new(group: Arc<PcGroup>, field: Field) -> GroupAlgebra {
        Self::try_new(group, field).expect("field characteristic must match the group")
    }

    pub fn try_new(group: Arc<PcGroup>, field: Field) -> Result<GroupAlgebra> {
        if group.p() != field.p() {
            return Err(Error::InvalidField(format!(
                "characteristic {} does not match the {}-group {}",
                field.p(),
                group.p(),
                group.name()
            )));
        }
        let prime = Field::prime(field.p())?;
        Ok(GroupAlgebra {
            group,
            field,
            prime,
            filtration: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &PcGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<PcGroup> {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::from_coeffs(vec![self.field.zero(); self.dim()])
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis(self.group.identity())
    }

    pub fn basis(&self, g: usize) -> AlgebraElement {
        let mut a = self.zero();
        a.coeffs[g] = self.field.one();
        a
    }

    /// `g - 1`.
    pub fn group_minus_one(&self, g: usize) -> AlgebraElement {
        let mut a = self.basis(g);
        let k = &self.field;
        a.coeffs[0] = k.sub(a.coeffs[0], k.one());
        a
    }

    /// `n = sum_{g in G} g`.
    pub fn norm_element(&self) -> AlgebraElement {
        AlgebraElement::from_coeffs(vec![self.field.one(); self.dim()])
    }

    pub fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let k = &self.field;
        AlgebraElement::from_coeffs(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| k.add(x, y)).collect())
    }

    pub fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let k = &self.field;
        AlgebraElement::from_coeffs(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| k.sub(x, y)).collect())
    }

    pub fn scale(&self, c: FieldElement, a: &AlgebraElement) -> AlgebraElement {
        let k = &self.field;
        AlgebraElement::from_coeffs(a.coeffs.iter().map(|&x| k.mul(c, x)).collect())
    }

    /// Convolution product. Coefficient products are accumulated unreduced
    /// and reduced once per output coordinate.
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let k = &self.field;
        let n = self.dim();
        let g = &*self.group;
        let a_nz: Vec<(usize, FieldElement)> = a.coeffs.iter().copied().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        let b_nz: Vec<(usize, FieldElement)> = b.coeffs.iter().copied().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        if k.is_prime_field() {
            let p = k.p() as u64;
            let mut acc = vec![0u64; n];
            for &(x, ax) in &a_nz {
                let ax = ax.raw_coeffs()[0] as u64;
                for &(y, by) in &b_nz {
                    acc[g.mul(x, y)] += ax * by.raw_coeffs()[0] as u64;
                }
            }
            AlgebraElement::from_coeffs(acc.into_iter().map(|v| k.from_int((v % p) as i64)).collect())
        } else {
            let w = 2 * k.degree() - 1;
            let mut acc = vec![0u64; n * w];
            for &(x, ax) in &a_nz {
                for &(y, by) in &b_nz {
                    let z = g.mul(x, y);
                    k.mul_acc(&mut acc[z * w..(z + 1) * w], ax, by);
                }
            }
            AlgebraElement::from_coeffs(acc.chunks(w).map(|c| k.reduce_wide(c)).collect())
        }
    }

    pub fn pow(&self, a: &AlgebraElement, mut e: u64) -> AlgebraElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a * g`, a permutation of coordinates.
    pub fn mul_group_right(&self, a: &AlgebraElement, g: usize) -> AlgebraElement {
        let mut out = self.zero();
        for (h, &c) in a.coeffs.iter().enumerate() {
            out.coeffs[self.group.mul(h, g)] = c;
        }
        out
    }

    /// `g * a`.
    pub fn mul_group_left(&self, g: usize, a: &AlgebraElement) -> AlgebraElement {
        let mut out = self.zero();
        for (h, &c) in a.coeffs.iter().enumerate() {
            out.coeffs[self.group.mul(g, h)] = c;
        }
        out
    }

    /// Sum of coefficients; a ring homomorphism onto `k` with kernel `J`.
    pub fn augmentation(&self, a: &AlgebraElement) -> FieldElement {
        let k = &self.field;
        a.coeffs.iter().fold(k.zero(), |s, &x| k.add(s, x))
    }

    pub fn is_unit(&self, a: &AlgebraElement) -> bool {
        !self.augmentation(a).is_zero()
    }

    /// Inverse of a unit `a = e (1 - z)` with `e` its augmentation and `z` in
    /// `J`: `a^-1 = e^-1 (1 + z + z^2 + ...)`, truncated once `z^{s+1} = 0`.
    /// The geometric sum is evaluated as `(1 + z)(1 + z^2)(1 + z^4)...`.
    pub fn inverse(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        let k = &self.field;
        let eps = self.augmentation(a);
        if eps.is_zero() {
            return Err(Error::NotAUnit);
        }
        let eps_inv = k.inv(eps)?;
        let z = self.sub(&self.one(), &self.scale(eps_inv, a));
        let s = self.radical_filtration().socle_degree();
        let mut sum = self.one();
        let mut zpow = z;
        let mut covered = 1usize; // sum holds z^0 .. z^{covered-1}
        while covered <= s {
            sum = self.mul(&sum, &self.add(&self.one(), &zpow));
            covered *= 2;
            if covered <= s {
                zpow = self.mul(&zpow, &zpow);
            }
        }
        Ok(self.scale(eps_inv, &sum))
    }

    // -----------------------------------------------------------------------
    // Radical filtration

    /// `J^r(kG)` for all `r`. The filtration is defined over GF(p), so it is
    /// computed there once and read in `k`.
    pub fn radical_filtration(&self) -> &RadicalFiltration {
        self.filtration.get_or_init(|| {
            let k = &self.field;
            let prime = compute_filtration(&self.group, &self.prime);
            RadicalFiltration {
                powers: prime
                    .powers
                    .iter()
                    .map(|e| e.map(|x| k.from_int(x.raw_coeffs()[0] as i64)))
                    .collect(),
            }
        })
    }

    /// The filtration recomputed with arithmetic in `k` instead of read off
    /// the prime field; equal to [`GroupAlgebra::radical_filtration`].
    pub fn radical_filtration_in_field(&self) -> RadicalFiltration {
        compute_filtration(&self.group, &self.field)
    }

    /// Whether `a` lies in `J^r`.
    pub fn in_power(&self, a: &AlgebraElement, r: usize) -> bool {
        self.radical_filtration().power(r).contains(&self.field, &a.coeffs)
    }

    /// Largest `r` with `a` in `J^r` (`None` for `a = 0`).
    pub fn filtration_degree(&self, a: &AlgebraElement) -> Option<usize> {
        if a.is_zero() {
            return None;
        }
        let s = self.radical_filtration().socle_degree();
        (0..=s).rev().find(|&r| self.in_power(a, r))
    }

    /// Coordinates of `x + J^{r+1}` in `gr_r`, read off at the pivots of
    /// `J^r` that are not pivots of `J^{r+1}`.
    pub fn gr_coordinates(&self, x: &AlgebraElement, r: usize) -> Result<Vec<FieldElement>> {
        let k = &self.field;
        let filt = self.radical_filtration();
        let mut v = x.coeffs.clone();
        let mut in_r = v.clone();
        filt.power(r).reduce(k, &mut in_r);
        if !in_r.iter().all(FieldElement::is_zero) {
            return Err(Error::FiltrationError { degree: r });
        }
        filt.power(r + 1).reduce(k, &mut v);
        Ok(filt.gr_pivots(r).into_iter().map(|c| v[c]).collect())
    }

    /// `n = sum_g g`, after checking that it spans `J^s` and that the
    /// two-sided annihilator of `J` is one-dimensional.
    pub fn socle_vector(&self) -> Result<AlgebraElement> {
        let n = self.norm_element();
        let filt = self.radical_filtration();
        let top = filt.power(filt.socle_degree());
        if top.rank() != 1 || !top.contains(&self.field, &n.coeffs) {
            return Err(Error::SocleError(format!(
                "J^s has dimension {} and does not reduce to span(n)",
                top.rank()
            )));
        }
        let ann = self.annihilator_dim();
        if ann != 1 {
            return Err(Error::SocleError(format!("annihilator of J has dimension {ann}")));
        }
        Ok(n)
    }

    /// `dim { x : xJ = Jx = 0 }`. Since `J = sum_i (g_i - 1) kG = sum_i kG (g_i - 1)`,
    /// it suffices to impose `x (g_i - 1) = (g_i - 1) x = 0` for the pc-generators.
    pub fn annihilator_dim(&self) -> usize {
        let fp = &self.prime;
        let g = &*self.group;
        let n = self.dim();
        let mut rows = Vec::with_capacity(2 * g.m() * n);
        for gen in g.generators() {
            let gi = g.inv(gen);
            for h in 0..n {
                // (x g)_h = x_{h g^-1};  (g x)_h = x_{g^-1 h}
                for src in [g.mul(h, gi), g.mul(gi, h)] {
                    let mut row = vec![fp.zero(); n];
                    row[src] = fp.add(row[src], fp.one());
                    row[h] = fp.sub(row[h], fp.one());
                    rows.push(row);
                }
            }
        }
        Matrix::from_rows(rows).nullspace(fp).len()
    }

    /// `F_r = { g : g - 1 in J^r }` for `r = 1, 2, ...` down to the first
    /// trivial term; each term is checked to be a subgroup.
    pub fn dimension_subgroups_definitional(&self) -> Result<Vec<Subgroup>> {
        let g = &*self.group;
        let mut series = vec![g.whole()];
        let mut r = 2;
        while series.last().unwrap().order() > 1 {
            let prev = series.last().unwrap();
            let members: Vec<usize> = prev
                .elements()
                .iter()
                .copied()
                .filter(|&x| self.in_power(&self.group_minus_one(x), r))
                .collect();
            let closure = g.subgroup_closure(&members);
            if closure.elements() != members.as_slice() {
                return Err(Error::DimensionMismatch(format!("F_{r} is not a subgroup")));
            }
            series.push(closure);
            r += 1;
        }
        Ok(series)
    }

    // -----------------------------------------------------------------------
    // Literals

    /// Parse `c1*w1 + c2*w2 + ...`, e.g. `1 + (t+1)*g1*g2`.
    pub fn parse_element(&self, s: &str) -> Result<AlgebraElement> {
        let k = &self.field;
        let mut acc = self.zero();
        for (neg, term) in split_terms(s)? {
            let mut coef = k.one();
            let mut word = Vec::new();
            for factor in split_top(term, '*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{term}`")));
                }
                if factor.starts_with('(') {
                    coef = k.mul(coef, k.parse(factor)?);
                    continue;
                }
                for piece in factor.split_whitespace() {
                    if piece.starts_with('g') {
                        word.extend(parse_word(piece)?);
                    } else {
                        coef = k.mul(coef, k.parse(piece)?);
                    }
                }
            }
            if word.iter().any(|&(g, _)| g >= self.group.m()) {
                return Err(Error::Parse(format!("generator out of range in `{term}`")));
            }
            let g = self.group.index_of(&self.group.collect(&word));
            let c = if neg { k.neg(coef) } else { coef };
            acc.coeffs[g] = k.add(acc.coeffs[g], c);
        }
        Ok(acc)
    }

    pub fn format_element(&self, a: &AlgebraElement) -> String {
        let k = &self.field;
        let mut terms = Vec::new();
        for (g, &c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let word = self.group.word(g).replace(' ', "*");
            let cs = k.format(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            terms.push(match (cs.as_str(), word.as_str()) {
                (_, "1") => cs.clone(),
                ("1", _) => word,
                _ => format!("{cs}*{word}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn compute_filtration(group: &PcGroup, fp: &Field) -> RadicalFiltration {
    let n = group.order();
    let mut j1 = Echelon::new(n);
    for g in 1..n {
        let mut v = vec![fp.zero(); n];
        v[g] = fp.one();
        v[0] = fp.neg(fp.one());
        j1.insert(fp, v);
    }
    let gens = group.generators();
    let mut powers = vec![Echelon::full(fp, n), j1];
    while !powers.last().unwrap().is_zero() {
        let cur = powers.last().unwrap();
        let mut next = Echelon::new(n);
        for row in cur.basis() {
            for &g in &gens {
                // row * (g - 1)
                let mut v = vec![fp.zero(); n];
                for (h, &c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        let hg = group.mul(h, g);
                        v[hg] = fp.add(v[hg], c);
                        v[h] = fp.sub(v[h], c);
                    }
                }
                next.insert(fp, v);
            }
        }
        powers.push(next);
    }
    RadicalFiltration { powers }
}

/// Split on a separator outside parentheses.
pub(crate) fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Split a sum into `(negated, term)` pairs at top-level `+` and `-`.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let t = s[start..i].trim();
                if !t.is_empty() {
                    out.push((neg, t));
                } else if i > 0 && !s[..i].trim().is_empty() {
                    return Err(Error::Parse(format!("empty term in `{s}`")));
                }
                neg = c == '-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
    }
    let t = s[start..].trim();
    if t.is_empty() {
        return Err(Error::Parse(format!("empty term in `{s}`")));
    }
    out.push((neg, t));
    Ok(out)
}
