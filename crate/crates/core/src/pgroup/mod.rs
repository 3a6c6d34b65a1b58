//! Finite p-groups from power-commutator presentations.
//!
//! A group of order `p^m` is given by pc-generators `g_1, ..., g_m`, a power
//! relation `g_i^p = w_i` for each `i` and a commutator relation
//! `[g_j, g_i] = w_ij` for each `j > i`, where the words only involve
//! generators of larger index. Commutators follow `[x, y] = x^-1 y^-1 x y`.
//!
//! Elements are exponent vectors in normal form `g_1^e_1 ... g_m^e_m` and are
//! numbered lexicographically (`e_1` most significant). Construction collects
//! `u * g_i` for every element and generator, expands this into the full
//! Cayley table and certifies the presentation by checking the relations and
//! associativity; inconsistent presentations are rejected.

mod catalog;
pub(crate) mod parse;

use std::collections::VecDeque;
use std::fmt;

pub use catalog::{catalog, catalog_entries, catalog_names, CatalogEntry};

use crate::error::{Error, Result};

/// Largest order whose associativity certificate runs over all triples.
const FULL_TRIPLE_CHECK: usize = 1 << 9;
/// Largest supported group order.
pub const MAX_ORDER: usize = 1 << 12;

/// Exponent vector of an element in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub exponents: Vec<u32>,
}

impl GroupElement {
    pub fn new(exponents: Vec<u32>) -> GroupElement {
        GroupElement { exponents }
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "g{}", i + 1)?;
            } else {
                write!(f, "g{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A word in the pc-generators: `(generator index from 0, exponent)` letters.
pub type Word = Vec<(usize, u32)>;

#[derive(Clone, Debug)]
pub struct PcGroup {
    name: String,
    p: u32,
    m: usize,
    order: usize,
    powers: Vec<Vec<u32>>,
    /// `[g_j, g_i]` for `j > i` at `j * m + i`.
    commutators: Vec<Vec<u32>>,
    table: Vec<u32>,
    inverses: Vec<u32>,
}

impl PcGroup {
    /// Build and certify a pc-presentation. `powers[i]` is the normal form of
    /// `g_{i+1}^p`; `commutators` lists `((j, i), w)` meaning `[g_{j+1}, g_{i+1}] = w`
    /// for `j > i` (0-based); missing commutators are trivial.
    pub fn new(
        name: impl Into<String>,
        p: u32,
        powers: Vec<GroupElement>,
        commutators: Vec<((usize, usize), GroupElement)>,
    ) -> Result<PcGroup> {
        let m = powers.len();
        if !crate::ffield::is_prime(p) {
            return Err(Error::InvalidPresentation(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidPresentation("at least one generator is required".into()));
        }
        let order = (p as usize)
            .checked_pow(m as u32)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or_else(|| Error::InvalidPresentation(format!("order {p}^{m} exceeds {MAX_ORDER}")))?;
        let check_word = |w: &GroupElement, above: usize, what: &str| -> Result<()> {
            if w.exponents.len() != m {
                return Err(Error::InvalidPresentation(format!("{what}: wrong word length")));
            }
            for (l, &e) in w.exponents.iter().enumerate() {
                if e >= p {
                    return Err(Error::InvalidPresentation(format!("{what}: exponent {e} not below p")));
                }
                if e != 0 && l <= above {
                    return Err(Error::InvalidPresentation(format!(
                        "{what}: right-hand side may only use generators after g{}",
                        above + 1
                    )));
                }
            }
            Ok(())
        };
        for (i, w) in powers.iter().enumerate() {
            check_word(w, i, &format!("g{}^{p}", i + 1))?;
        }
        let mut comm = vec![vec![0; m]; m * m];
        for ((j, i), w) in commutators {
            if !(j > i && j < m) {
                return Err(Error::InvalidPresentation(format!(
                    "commutator [g{}, g{}] must have the larger index first",
                    j + 1,
                    i + 1
                )));
            }
            check_word(&w, j, &format!("[g{}, g{}]", j + 1, i + 1))?;
            comm[j * m + i] = w.exponents;
        }
        let mut g = PcGroup {
            name: name.into(),
            p,
            m,
            order,
            powers: powers.into_iter().map(|w| w.exponents).collect(),
            commutators: comm,
            table: Vec::new(),
            inverses: Vec::new(),
        };
        g.build_table()?;
        Ok(g)
    }

    /// Parse the text format (see [`parse`](self::parse)).
    pub fn parse(text: &str) -> Result<PcGroup> {
        parse::parse_presentation(text)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> PcGroup {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Number of pc-generators; `|G| = p^m`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the pc-generator `g_{i+1}`.
    pub fn generator(&self, i: usize) -> usize {
        (self.p as usize).pow((self.m - 1 - i) as u32)
    }

    pub fn generators(&self) -> Vec<usize> {
        (0..self.m).map(|i| self.generator(i)).collect()
    }

    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.exponents
            .iter()
            .fold(0usize, |acc, &e| acc * self.p as usize + e as usize)
    }

    pub fn element(&self, mut idx: usize) -> GroupElement {
        let mut exps = vec![0; self.m];
        for i in (0..self.m).rev() {
            exps[i] = (idx % self.p as usize) as u32;
            idx /= self.p as usize;
        }
        GroupElement::new(exps)
    }

    /// Normal-form word of an element, e.g. `g1 g3` or `1`.
    pub fn word(&self, idx: usize) -> String {
        self.element(idx).to_string()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn comm(&self, a: usize, b: usize) -> usize {
        let x = self.mul(self.inv(a), self.inv(b));
        self.mul(self.mul(x, a), b)
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.element(self.mul(self.index_of(a), self.index_of(b)))
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        self.element(self.inv(self.index_of(a)))
    }

    pub fn commutator(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.element(self.comm(self.index_of(a), self.index_of(b)))
    }

    /// The right-hand side of `g_{i+1}^p`.
    pub fn power_relation(&self, i: usize) -> GroupElement {
        GroupElement::new(self.powers[i].clone())
    }

    /// The right-hand side of `[g_{j+1}, g_{i+1}]`, `j > i`.
    pub fn commutator_relation(&self, j: usize, i: usize) -> GroupElement {
        GroupElement::new(self.commutators[j * self.m + i].clone())
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.m).all(|j| (0..j).all(|i| self.commutators[j * self.m + i].iter().all(|&e| e == 0)))
    }

    pub fn is_elementary_abelian(&self) -> bool {
        self.is_abelian() && self.powers.iter().all(|w| w.iter().all(|&e| e == 0))
    }

    /// Render in the text presentation format.
    pub fn presentation(&self) -> String {
        let mut out = format!("pcgroup p={} m={}\n", self.p, self.m);
        for i in 0..self.m {
            out += &format!("g{}^{} = {}\n", i + 1, self.p, self.power_relation(i));
        }
        for j in 0..self.m {
            for i in 0..j {
                let w = self.commutator_relation(j, i);
                if !w.is_identity() {
                    out += &format!("[g{},g{}] = {}\n", j + 1, i + 1, w);
                }
            }
        }
        out
    }

    // -----------------------------------------------------------------------
    // Collection

    /// Normal form of an arbitrary word by collection from the left.
    pub fn collect(&self, word: &[(usize, u32)]) -> GroupElement {
        let mut e = vec![0; self.m];
        self.collect_into(&mut e, word);
        GroupElement::new(e)
    }

    fn collect_into(&self, e: &mut [u32], word: &[(usize, u32)]) {
        for &(g, k) in word {
            assert!(g < self.m, "generator index out of range");
            for _ in 0..k {
                self.mul_gen(e, g);
            }
        }
    }

    fn collect_exps(&self, e: &mut [u32], w: &[u32]) {
        for (g, &k) in w.iter().enumerate() {
            for _ in 0..k {
                self.mul_gen(e, g);
            }
        }
    }

    /// `e <- e * g_i`: with `e = prefix * g_i^a * tail`, move `g_i` across the
    /// tail using `x g_i = g_i x^{g_i}` and `g_j^{g_i} = g_j [g_j, g_i]`.
    fn mul_gen(&self, e: &mut [u32], i: usize) {
        let mut tail = Vec::new();
        for j in i + 1..self.m {
            for _ in 0..e[j] {
                tail.push(j);
            }
            e[j] = 0;
        }
        e[i] += 1;
        if e[i] == self.p {
            e[i] = 0;
            let w = &self.powers[i];
            self.collect_exps(e, w);
        }
        for j in tail {
            self.mul_gen(e, j);
            let c = &self.commutators[j * self.m + i];
            self.collect_exps(e, c);
        }
    }

    fn build_table(&mut self) -> Result<()> {
        let n = self.order;
        let m = self.m;
        let mut right_gen = vec![0u32; n * m];
        for u in 0..n {
            let base = self.element(u).exponents;
            for i in 0..m {
                let mut e = base.clone();
                self.mul_gen(&mut e, i);
                right_gen[u * m + i] = self.index_of(&GroupElement::new(e)) as u32;
            }
        }
        let mut table = vec![0u32; n * n];
        for v in 0..n {
            let ev = self.element(v).exponents;
            for u in 0..n {
                let mut x = u;
                for (i, &k) in ev.iter().enumerate() {
                    for _ in 0..k {
                        x = right_gen[x * m + i] as usize;
                    }
                }
                table[u * n + v] = x as u32;
            }
        }
        self.table = table;

        // Every row is a permutation, so inverses exist.
        let mut inverses = vec![u32::MAX; n];
        let mut seen = vec![false; n];
        for u in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for v in 0..n {
                let w = self.mul(u, v);
                if seen[w] {
                    return Err(Error::InconsistentPresentation(format!(
                        "row of {} in the multiplication table is not a permutation",
                        self.word(u)
                    )));
                }
                seen[w] = true;
                if w == 0 {
                    inverses[u] = v as u32;
                }
            }
        }
        self.inverses = inverses;

        for i in 0..m {
            let g = self.generator(i);
            let lhs = self.pow(g, self.p as u64);
            if lhs != self.index_of(&self.power_relation(i)) {
                return Err(Error::InconsistentPresentation(format!(
                    "collected g{}^{} = {} but the relation says {}",
                    i + 1,
                    self.p,
                    self.word(lhs),
                    self.power_relation(i)
                )));
            }
            for j in i + 1..m {
                let c = self.comm(self.generator(j), g);
                if c != self.index_of(&self.commutator_relation(j, i)) {
                    return Err(Error::InconsistentPresentation(format!(
                        "collected [g{}, g{}] = {} but the relation says {}",
                        j + 1,
                        i + 1,
                        self.word(c),
                        self.commutator_relation(j, i)
                    )));
                }
            }
        }

        // Associativity. Over generators only this is already a complete
        // certificate, because every element is a product of generators.
        let third: Vec<usize> = if n <= FULL_TRIPLE_CHECK {
            (0..n).collect()
        } else {
            self.generators()
        };
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for &c in &third {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InconsistentPresentation(format!(
                            "associativity fails for ({}, {}, {})",
                            self.word(a),
                            self.word(b),
                            self.word(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    // -----------------------------------------------------------------------
    // Subgroups and series

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self, (0..self.order).collect(), self.generators())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(self, vec![0], Vec::new())
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let gens: Vec<usize> = {
            let mut g: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
            g.sort_unstable();
            g.dedup();
            g
        };
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let elements = (0..self.order).filter(|&i| member[i]).collect();
        Subgroup {
            elements,
            generators: gens,
            member,
        }
    }

    /// `[A, B]`, generated by all commutators `[a, b]`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens = Vec::new();
        for &x in a.elements() {
            for &y in b.elements() {
                gens.push(self.comm(x, y));
            }
        }
        self.subgroup_closure(&gens)
    }

    /// `gamma_1 = G`, `gamma_{i+1} = [gamma_i, G]`, ending with the trivial group.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let g = self.whole();
        let mut series = vec![g.clone()];
        while series.last().unwrap().order() > 1 {
            let next = self.commutator_subgroup(series.last().unwrap(), &g);
            if next == *series.last().unwrap() {
                // p-groups are nilpotent; this cannot happen for a certified group.
                break;
            }
            series.push(next);
        }
        series
    }

    /// Subgroup generated by the `p^j`-th powers of elements of `s`.
    pub fn agemo(&self, s: &Subgroup, j: u32) -> Subgroup {
        let e = (self.p as u64).pow(j);
        let gens: Vec<usize> = s.elements().iter().map(|&x| self.pow(x, e)).collect();
        self.subgroup_closure(&gens)
    }

    /// `Phi(G) = G^p [G, G]`.
    pub fn frattini(&self) -> Subgroup {
        let g = self.whole();
        let mut gens = self.agemo(&g, 1).elements().to_vec();
        gens.extend_from_slice(self.commutator_subgroup(&g, &g).elements());
        self.subgroup_closure(&gens)
    }

    /// The Jennings series `F_1 = G`, `F_r = [F_{r-1}, G] F_{ceil(r/p)}^p`,
    /// as a vector indexed by `r - 1` whose last entry is the first trivial term.
    /// Terms may repeat (a layer `F_r / F_{r+1}` can be trivial).
    pub fn jennings_series_recursive(&self) -> Vec<Subgroup> {
        let g = self.whole();
        let mut series = vec![g.clone()];
        let p = self.p as usize;
        let mut r = 2;
        while series.last().unwrap().order() > 1 {
            let prev = &series[r - 2];
            let mut gens = self.commutator_subgroup(prev, &g).elements().to_vec();
            let src = &series[r.div_ceil(p) - 1];
            gens.extend(src.elements().iter().map(|&x| self.pow(x, p as u64)));
            series.push(self.subgroup_closure(&gens));
            r += 1;
        }
        series
    }

    // -----------------------------------------------------------------------
    // Automorphisms

    /// Extend images of all pc-generators to an automorphism of G.
    pub fn group_automorphism(&self, images: &[GroupElement]) -> Result<GroupAutomorphism> {
        let partial: Vec<Option<GroupElement>> = images.iter().cloned().map(Some).collect();
        self.group_automorphism_partial(&partial)
    }

    /// As [`PcGroup::group_automorphism`], but images of generators that are
    /// forced by a relation `lhs = g_k * rest` may be left out.
    pub fn group_automorphism_partial(&self, images: &[Option<GroupElement>]) -> Result<GroupAutomorphism> {
        if images.len() != self.m {
            return Err(Error::RelationViolation(format!(
                "expected {} generator images, got {}",
                self.m,
                images.len()
            )));
        }
        let mut img: Vec<Option<usize>> = Vec::with_capacity(self.m);
        for im in images {
            match im {
                Some(e) => {
                    if e.exponents.len() != self.m || e.exponents.iter().any(|&x| x >= self.p) {
                        return Err(Error::RelationViolation(format!("{e} is not a normal-form element")));
                    }
                    img.push(Some(self.index_of(e)));
                }
                None => img.push(None),
            }
        }
        self.deduce_images(&mut img)?;
        let img: Vec<usize> = img.into_iter().map(Option::unwrap).collect();

        let eval = |w: &[u32]| -> usize {
            let mut x = 0;
            for (i, &e) in w.iter().enumerate() {
                for _ in 0..e {
                    x = self.mul(x, img[i]);
                }
            }
            x
        };
        for i in 0..self.m {
            if self.pow(img[i], self.p as u64) != eval(&self.powers[i]) {
                return Err(Error::RelationViolation(format!("g{}^{}", i + 1, self.p)));
            }
            for j in i + 1..self.m {
                if self.comm(img[j], img[i]) != eval(&self.commutators[j * self.m + i]) {
                    return Err(Error::RelationViolation(format!("[g{}, g{}]", j + 1, i + 1)));
                }
            }
        }
        let map: Vec<usize> = (0..self.order).map(|u| eval(&self.element(u).exponents)).collect();
        let mut seen = vec![false; self.order];
        for &x in &map {
            seen[x] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::NotBijective);
        }
        Ok(GroupAutomorphism { images: img, map })
    }

    fn deduce_images(&self, img: &mut [Option<usize>]) -> Result<()> {
        let eval = |img: &[Option<usize>], w: &[u32]| -> Option<usize> {
            let mut x = 0;
            for (i, &e) in w.iter().enumerate() {
                for _ in 0..e {
                    x = self.mul(x, img[i]?);
                }
            }
            Some(x)
        };
        // rhs = g_k * rest with rest in generators after k
        let split = |w: &[u32]| -> Option<(usize, Vec<u32>)> {
            let k = w.iter().position(|&e| e != 0)?;
            if w[k] != 1 {
                return None;
            }
            let mut rest = w.to_vec();
            rest[k] = 0;
            Some((k, rest))
        };
        loop {
            let mut progress = false;
            for i in 0..self.m {
                let mut rels: Vec<(Option<usize>, &[u32])> = Vec::new();
                if let Some(gi) = img[i] {
                    rels.push((Some(self.pow(gi, self.p as u64)), &self.powers[i]));
                }
                for j in i + 1..self.m {
                    let lhs = match (img[j], img[i]) {
                        (Some(a), Some(b)) => Some(self.comm(a, b)),
                        _ => None,
                    };
                    rels.push((lhs, &self.commutators[j * self.m + i]));
                }
                for (lhs, w) in rels {
                    let (Some(lhs), Some((k, rest))) = (lhs, split(w)) else { continue };
                    if img[k].is_some() {
                        continue;
                    }
                    if let Some(r) = eval(img, &rest) {
                        img[k] = Some(self.mul(lhs, self.inv(r)));
                        progress = true;
                    }
                }
            }
            if !progress {
                break;
            }
        }
        if let Some(k) = img.iter().position(Option::is_none) {
            return Err(Error::RelationViolation(format!(
                "image of g{} is neither given nor forced by a relation",
                k + 1
            )));
        }
        Ok(())
    }
}

/// An automorphism of a pc-group, stored as the full permutation of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAutomorphism {
    images: Vec<usize>,
    map: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn generator_images(&self) -> &[usize] {
        &self.images
    }

    pub fn permutation(&self) -> &[usize] {
        &self.map
    }
}

/// A subgroup stored as its sorted element indices.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
    member: Vec<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Subgroup) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_sorted(g: &PcGroup, elements: Vec<usize>, generators: Vec<usize>) -> Subgroup {
        let mut member = vec![false; g.order()];
        for &x in &elements {
            member[x] = true;
        }
        Subgroup {
            elements,
            generators,
            member,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, g: usize) -> bool {
        self.member[g]
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(e: &[u32]) -> GroupElement {
        GroupElement::new(e.to_vec())
    }

    /// D8 as permutations of {0,1,2,3}: a = (0 1 2 3), b = (1 3); the pc
    /// generators are g1 = b, g2 = a, g3 = a^2.
    mod perm_oracle {
        pub type Perm = [usize; 4];
        pub const ID: Perm = [0, 1, 2, 3];
        pub const A: Perm = [1, 2, 3, 0];
        pub const B: Perm = [0, 3, 2, 1];
        /// apply x then y (left-to-right products, matching `x * y`)
        pub fn mul(x: Perm, y: Perm) -> Perm {
            let mut out = [0; 4];
            for i in 0..4 {
                out[i] = y[x[i]];
            }
            out
        }
        pub fn pw(x: Perm, e: u32) -> Perm {
            (0..e).fold(ID, |acc, _| mul(acc, x))
        }
        pub fn nf(e: &[u32]) -> Perm {
            mul(mul(pw(B, e[0]), pw(A, e[1])), pw(mul(A, A), e[2]))
        }
    }

    #[test]
    fn d8_matches_permutation_oracle() {
        let g = catalog("D8").unwrap();
        for u in 0..8 {
            for v in 0..8 {
                let (eu, ev) = (g.element(u), g.element(v));
                let w = g.element(g.mul(u, v));
                let lhs = perm_oracle::mul(perm_oracle::nf(&eu.exponents), perm_oracle::nf(&ev.exponents));
                assert_eq!(lhs, perm_oracle::nf(&w.exponents));
            }
        }
        assert_eq!(g.collect(&[(1, 1), (0, 1)]), el(&[1, 1, 1]));
        assert_eq!(g.collect(&[(0, 2)]), el(&[0, 0, 0]));
        assert_eq!(g.collect(&[]), el(&[0, 0, 0]));
        assert_eq!(g.commutator(&el(&[0, 1, 0]), &el(&[1, 0, 0])), el(&[0, 0, 1]));
    }

    #[test]
    fn cyclic_four() {
        let g = catalog("C4").unwrap();
        let g1 = el(&[1, 0]);
        assert_eq!(g.multiply(&g1, &g1), el(&[0, 1]));
        for u in 0..4 {
            assert_eq!(g.mul(u, g.inv(u)), 0);
        }
    }

    #[test]
    fn lower_central_series_examples() {
        let g = catalog("C3xC3").unwrap();
        let lcs = g.lower_central_series();
        assert_eq!(lcs.len(), 2);
        assert_eq!(lcs[1].order(), 1);

        let d8 = catalog("D8").unwrap();
        let lcs = d8.lower_central_series();
        assert_eq!(lcs.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![8, 2, 1]);
        assert_eq!(lcs[1].elements(), &[0, 1]); // {1, g3}

        for name in ["Heis27", "Heis125"] {
            let h = catalog(name).unwrap();
            let lcs = h.lower_central_series();
            // brute-force center
            let center: Vec<usize> = (0..h.order())
                .filter(|&z| (0..h.order()).all(|x| h.mul(z, x) == h.mul(x, z)))
                .collect();
            assert_eq!(lcs[1].elements(), center.as_slice());
            assert_eq!(lcs[1].order(), h.p() as usize);
        }
    }

    #[test]
    fn jennings_recursive_examples() {
        let c4 = catalog("C4").unwrap();
        let f = c4.jennings_series_recursive();
        assert_eq!(f.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![4, 2, 1]);
        assert_eq!(f[1].elements(), &[0, c4.generator(1)]);

        let d8 = catalog("D8").unwrap();
        let f = d8.jennings_series_recursive();
        assert_eq!(f.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![8, 2, 1]);
        assert_eq!(f[1].elements(), &[0, d8.generator(2)]);

        let e = catalog("C5xC5xC5").unwrap();
        let f = e.jennings_series_recursive();
        assert_eq!(f.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![125, 1]);

        let d16 = catalog("D16").unwrap();
        let f = d16.jennings_series_recursive();
        assert_eq!(f.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![16, 4, 2, 2, 1]);
    }

    #[test]
    fn frattini_is_second_term() {
        for name in catalog_names() {
            let g = catalog(name).unwrap();
            let f = g.jennings_series_recursive();
            let phi = g.frattini();
            if f.len() > 1 {
                assert_eq!(f[1], phi, "{name}");
            }
        }
    }

    #[test]
    fn automorphism_examples() {
        let c3 = catalog("C3").unwrap();
        let a = c3.group_automorphism(&[el(&[2])]).unwrap();
        assert_eq!(a.apply(1), 2);

        let d8 = catalog("D8").unwrap();
        let a = d8
            .group_automorphism_partial(&[Some(el(&[1, 0, 1])), Some(el(&[0, 1, 0])), None])
            .unwrap();
        // homomorphism by brute force
        for u in 0..8 {
            for v in 0..8 {
                assert_eq!(a.apply(d8.mul(u, v)), d8.mul(a.apply(u), a.apply(v)));
            }
        }

        let c4 = catalog("C4").unwrap();
        assert_eq!(
            c4.group_automorphism_partial(&[Some(el(&[0, 1])), None]),
            Err(Error::NotBijective)
        );
        assert!(matches!(
            c4.group_automorphism(&[el(&[1, 0]), el(&[1, 0])]),
            Err(Error::RelationViolation(_))
        ));
    }

    #[test]
    fn inconsistent_presentations_rejected() {
        // g2 = g1^2 commutes with g1, so [g2, g1] = g3 cannot hold.
        let r = PcGroup::new(
            "bad",
            2,
            vec![el(&[0, 1, 0]), el(&[0, 0, 0]), el(&[0, 0, 0])],
            vec![((1, 0), el(&[0, 0, 1]))],
        );
        assert!(matches!(r, Err(Error::InconsistentPresentation(_))), "{r:?}");

        // right-hand side mentions an earlier generator
        let r = PcGroup::new("bad", 2, vec![el(&[1, 0]), el(&[0, 0])], vec![]);
        assert!(matches!(r, Err(Error::InvalidPresentation(_))));
    }
}
