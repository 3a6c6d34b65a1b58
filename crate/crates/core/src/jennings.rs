//! The graded restricted Lie algebra `Jen_*(G) = sum_r k (x) F_r / F_{r+1}`.
//!
//! Lifts `g_1, ..., g_m` are chosen layer by layer; the images `x_j` of the
//! degree-`r` lifts form a basis of `Jen_r`. Lie vectors are stored over the
//! prime field as exponent vectors in that basis.
//!
//! ```
//! use jennings_socle::prelude::*;
//! use std::sync::Arc;
//!
//! let alg = GroupAlgebra::new(Arc::new(catalog("C4").unwrap()), Field::prime(2).unwrap());
//! let jb = JenningsBasis::build(&alg).unwrap();
//! assert_eq!(jb.degrees(), &[1, 2]);
//! // x1^[2] = x2
//! assert_eq!(jb.p_restriction(0).coords, vec![1]);
//! ```

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElement};
use crate::galgebra::{AlgebraElement, GroupAlgebra};
use crate::linalg::Echelon;
use crate::pgroup::{PcGroup, Subgroup};

/// A homogeneous element of `Jen_*`, in the lift basis of its degree.
/// Degrees beyond the top of the series carry an empty coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieVector {
    pub degree: usize,
    pub coords: Vec<u32>,
}

impl LieVector {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// `x_1^{i_1} ... x_m^{i_m}` with `0 <= i_j < p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwMonomial {
    pub exponents: Vec<u32>,
}

impl PbwMonomial {
    /// `sum_j i_j r_j`.
    pub fn degree(&self, degrees: &[usize]) -> usize {
        self.exponents.iter().zip(degrees).map(|(&i, &r)| i as usize * r).sum()
    }

    /// `sum_j i_j`, the index of the PBW filtration piece it first enters.
    pub fn word_length(&self) -> usize {
        self.exponents.iter().map(|&i| i as usize).sum()
    }
}

/// One term `F_r / F_{r+1}` of the series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    pub r: usize,
    /// `|F_r|`
    pub order: usize,
    pub d_r: usize,
    /// Lift indices (0-based) of degree `r`.
    pub lifts: Vec<usize>,
}

/// Both dimension sequences, which agree when the check passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JqReport {
    pub gr_dims: Vec<usize>,
    pub pbw_dims: Vec<usize>,
    pub socle_degree: usize,
}

pub struct JenningsBasis {
    group: Arc<PcGroup>,
    field: Field,
    series: Vec<Subgroup>,
    lifts: Vec<usize>,
    degrees: Vec<usize>,
    layer_dims: Vec<usize>,
    lift_gr: Vec<Vec<FieldElement>>,
    gr_dims: Vec<usize>,
}

impl JenningsBasis {
    pub fn build(alg: &GroupAlgebra) -> Result<JenningsBasis> {
        let group = alg.group_arc().clone();
        let g = &*group;
        let k = alg.field();
        let p = g.p() as usize;
        let series = g.jennings_series_recursive();
        let top = series.len() - 1;

        let mut lifts = Vec::with_capacity(g.m());
        let mut degrees = Vec::with_capacity(g.m());
        let mut layer_dims = Vec::with_capacity(top);
        let mut lift_gr = Vec::with_capacity(g.m());
        for r in 1..=top {
            let (fr, next) = (&series[r - 1], &series[r]);
            let mut d = 0;
            let mut q = fr.order() / next.order();
            while q > 1 {
                if q % p != 0 {
                    return Err(Error::DimensionMismatch(format!("|F_{r}/F_{}| is not a power of p", r + 1)));
                }
                q /= p;
                d += 1;
            }
            layer_dims.push(d);

            let pcgens = g.generators();
            let candidates = pcgens
                .iter()
                .copied()
                .chain(fr.elements().iter().copied().filter(|x| !pcgens.contains(x)))
                .filter(|&x| fr.contains(x) && !next.contains(x));
            let mut span = Echelon::new(alg.radical_filtration().gr_pivots(r).len());
            let mut kept = Vec::new();
            for x in candidates {
                if kept.len() == d {
                    break;
                }
                let coords = alg.gr_coordinates(&alg.group_minus_one(x), r)?;
                if span.insert(k, coords.clone()) {
                    kept.push(x);
                    lifts.push(x);
                    degrees.push(r);
                    lift_gr.push(coords);
                }
            }
            let mut gens = kept.clone();
            gens.extend_from_slice(next.generators());
            gens.extend_from_slice(next.elements());
            if kept.len() != d || g.subgroup_closure(&gens) != *fr {
                return Err(Error::DimensionMismatch(format!(
                    "could not lift a basis of F_{r}/F_{}",
                    r + 1
                )));
            }
        }
        if lifts.len() != g.m() {
            return Err(Error::DimensionMismatch(format!("{} lifts for m = {}", lifts.len(), g.m())));
        }
        Ok(JenningsBasis {
            group,
            field: k.clone(),
            series,
            lifts,
            degrees,
            layer_dims,
            lift_gr,
            gr_dims: alg.radical_filtration().gr_dims(),
        })
    }

    pub fn group(&self) -> &PcGroup {
        &self.group
    }

    /// `F_1, ..., F_{c+1}` with `F_{c+1}` trivial.
    pub fn series(&self) -> &[Subgroup] {
        &self.series
    }

    /// Lifts as group element indices.
    pub fn lifts(&self) -> &[usize] {
        &self.lifts
    }

    /// `r_1 <= ... <= r_m`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `d_1, ..., d_c`.
    pub fn layer_dims(&self) -> &[usize] {
        &self.layer_dims
    }

    /// Largest `r` with `F_r` nontrivial.
    pub fn top_degree(&self) -> usize {
        self.layer_dims.len()
    }

    /// `gr_{r_j}` coordinates of `g_j - 1`.
    pub fn lift_gr_coordinates(&self, j: usize) -> &[FieldElement] {
        &self.lift_gr[j]
    }

    /// Lift indices of degree `r`; contiguous because degrees are sorted.
    pub fn layer_range(&self, r: usize) -> std::ops::Range<usize> {
        let start = self.degrees.partition_point(|&d| d < r);
        let end = self.degrees.partition_point(|&d| d <= r);
        start..end
    }

    pub fn layers(&self) -> Vec<Layer> {
        (1..=self.top_degree())
            .map(|r| Layer {
                r,
                order: self.series[r - 1].order(),
                d_r: self.layer_dims[r - 1],
                lifts: self.layer_range(r).collect(),
            })
            .collect()
    }

    /// `sum_r (p - 1) r d_r`, the socle degree predicted by the PBW basis.
    pub fn predicted_socle_degree(&self) -> usize {
        (self.group.p() as usize - 1) * self.degrees.iter().sum::<usize>()
    }

    /// `g_1^{e_1} ... g_m^{e_m}`.
    pub fn normal_form(&self, exps: &[u32]) -> usize {
        let g = &*self.group;
        exps.iter()
            .zip(&self.lifts)
            .fold(g.identity(), |acc, (&e, &x)| g.mul(acc, g.pow(x, e as u64)))
    }

    /// Product of the degree-`r` lifts raised to `v`.
    fn layer_element(&self, r: usize, v: &[u32]) -> usize {
        let g = &*self.group;
        self.layer_range(r)
            .zip(v)
            .fold(g.identity(), |acc, (j, &e)| g.mul(acc, g.pow(self.lifts[j], e as u64)))
    }

    /// Image of `h` in `F_r / F_{r+1}` in the lift basis, or `None` if `h` is
    /// not in `F_r`. Beyond the top degree the only member is the identity.
    pub fn layer_coordinates(&self, h: usize, r: usize) -> Option<LieVector> {
        let g = &*self.group;
        if r > self.top_degree() {
            return (h == g.identity()).then(|| LieVector { degree: r, coords: Vec::new() });
        }
        if !self.series[r - 1].contains(h) {
            return None;
        }
        let d = self.layer_dims[r - 1];
        let p = g.p();
        let next = &self.series[r];
        let mut v = vec![0u32; d];
        loop {
            if next.contains(g.mul(h, g.inv(self.layer_element(r, &v)))) {
                return Some(LieVector { degree: r, coords: v });
            }
            // odometer over [0, p)^d
            let mut i = 0;
            loop {
                if i == d {
                    return None;
                }
                v[i] += 1;
                if v[i] < p {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
        }
    }

    /// `[x_{j1}, x_{j2}]`: the image of `[g_{j1}, g_{j2}]` in degree `r1 + r2`.
    pub fn lie_bracket(&self, j1: usize, j2: usize) -> LieVector {
        let r = self.degrees[j1] + self.degrees[j2];
        let c = self.group.comm(self.lifts[j1], self.lifts[j2]);
        self.layer_coordinates(c, r)
            .expect("commutators of F_r and F_s lie in F_{r+s}")
    }

    /// `x_j^[p]`: the image of `g_j^p` in degree `p r_j`.
    pub fn p_restriction(&self, j: usize) -> LieVector {
        let p = self.group.p();
        let r = p as usize * self.degrees[j];
        let h = self.group.pow(self.lifts[j], p as u64);
        self.layer_coordinates(h, r).expect("p-th powers of F_r lie in F_pr")
    }

    fn bracket_vectors(&self, a: &LieVector, b: &LieVector) -> LieVector {
        let r = a.degree + b.degree;
        let c = self.group.comm(self.layer_element(a.degree, &a.coords), self.layer_element(b.degree, &b.coords));
        self.layer_coordinates(c, r).expect("commutators of F_r and F_s lie in F_{r+s}")
    }

    fn restrict_vector(&self, a: &LieVector) -> LieVector {
        let p = self.group.p();
        let h = self.group.pow(self.layer_element(a.degree, &a.coords), p as u64);
        self.layer_coordinates(h, p as usize * a.degree).expect("p-th powers of F_r lie in F_pr")
    }

    /// `gr` coordinates of the image of a Lie vector under `x_j -> g_j - 1`.
    pub fn embed(&self, v: &LieVector) -> Vec<FieldElement> {
        let k = &self.field;
        let range = self.layer_range(v.degree);
        let width = self.gr_dims.get(v.degree).copied().unwrap_or(0);
        let mut out = vec![k.zero(); width];
        for (j, &c) in range.zip(&v.coords) {
            let c = k.from_int(c as i64);
            for (o, &x) in out.iter_mut().zip(&self.lift_gr[j]) {
                *o = k.add(*o, k.mul(c, x));
            }
        }
        out
    }

    // -----------------------------------------------------------------------
    // PBW bookkeeping

    /// All `p^m` PBW monomials, in lexicographic exponent order.
    pub fn pbw_monomials(&self) -> Vec<PbwMonomial> {
        let p = self.group.p();
        let m = self.lifts.len();
        let mut out = Vec::with_capacity(self.group.order());
        let mut e = vec![0u32; m];
        loop {
            out.push(PbwMonomial { exponents: e.clone() });
            let mut i = m;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                e[i] += 1;
                if e[i] < p {
                    break;
                }
                e[i] = 0;
            }
        }
    }

    /// Coefficients of `prod_j (1 + t^{r_j} + ... + t^{(p-1) r_j})`.
    pub fn pbw_dimensions(&self) -> Vec<usize> {
        let p = self.group.p() as usize;
        let mut poly = vec![1usize];
        for &r in &self.degrees {
            let mut next = vec![0usize; poly.len() + (p - 1) * r];
            for (i, &c) in poly.iter().enumerate() {
                for a in 0..p {
                    next[i + a * r] += c;
                }
            }
            poly = next;
        }
        poly
    }

    pub fn pbw_dimension(&self, r: usize) -> usize {
        self.pbw_dimensions().get(r).copied().unwrap_or(0)
    }

    /// `dim gr_r(kG) = pbw_dimension(r)` for all `r`, and `s = (p-1) sum r d_r`.
    pub fn jq_dimension_check(&self, alg: &GroupAlgebra) -> Result<JqReport> {
        let filt = alg.radical_filtration();
        let report = JqReport {
            gr_dims: filt.gr_dims(),
            pbw_dims: self.pbw_dimensions(),
            socle_degree: filt.socle_degree(),
        };
        if report.gr_dims != report.pbw_dims {
            return Err(Error::DimensionMismatch(format!(
                "gr dims {:?} vs PBW dims {:?}",
                report.gr_dims, report.pbw_dims
            )));
        }
        if report.socle_degree != self.predicted_socle_degree() {
            return Err(Error::DimensionMismatch(format!(
                "socle degree {} vs predicted {}",
                report.socle_degree,
                self.predicted_socle_degree()
            )));
        }
        if report.pbw_dims.iter().sum::<usize>() != self.group.order() {
            return Err(Error::DimensionMismatch("PBW basis does not have p^m elements".into()));
        }
        Ok(report)
    }

    // -----------------------------------------------------------------------
    // Structural checks

    /// `(i_1, ..., i_m) -> g_1^{i_1} ... g_m^{i_m}` is a bijection onto G.
    pub fn check_normal_forms(&self) -> Result<()> {
        let mut seen = vec![false; self.group.order()];
        for mono in self.pbw_monomials() {
            let x = self.normal_form(&mono.exponents);
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::StructureMismatch(format!(
                    "normal form {:?} repeats {}",
                    mono.exponents,
                    self.group.word(x)
                )));
            }
        }
        Ok(())
    }

    /// `(g_{j1} - 1)(g_{j2} - 1) - (g_{j2} - 1)(g_{j1} - 1)` has `gr` image
    /// equal to the embedded `[x_{j1}, x_{j2}]`, for every ordered pair.
    pub fn check_bracket_compatibility(&self, alg: &GroupAlgebra) -> Result<()> {
        let m = self.lifts.len();
        let xs: Vec<AlgebraElement> = self.lifts.iter().map(|&g| alg.group_minus_one(g)).collect();
        for j1 in 0..m {
            for j2 in 0..m {
                let br = self.lie_bracket(j1, j2);
                let lhs = alg.sub(&alg.mul(&xs[j1], &xs[j2]), &alg.mul(&xs[j2], &xs[j1]));
                let got = alg.gr_coordinates(&lhs, br.degree)?;
                let want = self.embed(&br);
                if got != want {
                    return Err(Error::StructureMismatch(format!("bracket of x{} and x{}", j1 + 1, j2 + 1)));
                }
            }
        }
        Ok(())
    }

    /// `(g_j - 1)^p` has `gr` image equal to the embedded `x_j^[p]`.
    pub fn check_p_power_compatibility(&self, alg: &GroupAlgebra) -> Result<()> {
        let p = self.group.p() as u64;
        for j in 0..self.lifts.len() {
            let res = self.p_restriction(j);
            let lhs = alg.pow(&alg.group_minus_one(self.lifts[j]), p);
            let got = alg.gr_coordinates(&lhs, res.degree)?;
            let want = self.embed(&res);
            if got != want {
                return Err(Error::StructureMismatch(format!("p-restriction of x{}", j + 1)));
            }
        }
        Ok(())
    }

    /// Dimensions, per degree, of the smallest graded subspace containing
    /// `Jen_1` and closed under bracket and p-restriction.
    pub fn degree_one_closure_dims(&self) -> Vec<usize> {
        let fp = Field::prime(self.group.p()).expect("group prime is prime");
        let top = self.top_degree();
        let mut spans: Vec<Echelon> = self.layer_dims.iter().map(|&d| Echelon::new(d)).collect();
        if top == 0 {
            return Vec::new();
        }
        for i in 0..self.layer_dims[0] {
            let mut v = vec![fp.zero(); self.layer_dims[0]];
            v[i] = fp.one();
            spans[0].insert(&fp, v);
        }
        let to_lie = |r: usize, v: &[FieldElement]| LieVector {
            degree: r,
            coords: v.iter().map(|c| c.raw_coeffs()[0] as u32).collect(),
        };
        let from_lie = |v: &LieVector| -> Vec<FieldElement> {
            v.coords.iter().map(|&c| fp.from_int(c as i64)).collect()
        };
        loop {
            let mut changed = false;
            for r in 1..=top {
                // the p-map is only semilinear, so apply it to every vector of the span
                let basis = spans[r - 1].basis().to_vec();
                let p = self.group.p() as usize;
                if p * r <= top && !basis.is_empty() {
                    let mut coeffs = vec![0u32; basis.len()];
                    loop {
                        let mut v = vec![fp.zero(); self.layer_dims[r - 1]];
                        for (b, &c) in basis.iter().zip(&coeffs) {
                            crate::linalg::axpy(&fp, &mut v, fp.from_int(c as i64), b);
                        }
                        let img = self.restrict_vector(&to_lie(r, &v));
                        changed |= spans[p * r - 1].insert(&fp, from_lie(&img));
                        let mut i = 0;
                        while i < coeffs.len() {
                            coeffs[i] += 1;
                            if (coeffs[i] as usize) < p {
                                break;
                            }
                            coeffs[i] = 0;
                            i += 1;
                        }
                        if i == coeffs.len() {
                            break;
                        }
                    }
                }
                for s in r..=top {
                    if r + s > top {
                        break;
                    }
                    let other = spans[s - 1].basis().to_vec();
                    for a in &basis {
                        for b in &other {
                            let img = self.bracket_vectors(&to_lie(r, a), &to_lie(s, b));
                            changed |= spans[r + s - 1].insert(&fp, from_lie(&img));
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        spans.iter().map(Echelon::rank).collect()
    }

    /// Jen_* is generated by its degree-one part as a restricted Lie algebra.
    pub fn check_degree_one_generation(&self) -> Result<()> {
        let dims = self.degree_one_closure_dims();
        if dims != self.layer_dims {
            return Err(Error::StructureMismatch(format!(
                "degree-one closure has dims {dims:?}, expected {:?}",
                self.layer_dims
            )));
        }
        Ok(())
    }

    /// `prod_j (g_j - 1)^{p-1}` in lift order.
    pub fn socle_product(&self, alg: &GroupAlgebra) -> AlgebraElement {
        let p = self.group.p() as u64;
        self.lifts.iter().fold(alg.one(), |acc, &g| {
            alg.mul(&acc, &alg.pow(&alg.group_minus_one(g), p - 1))
        })
    }
}
