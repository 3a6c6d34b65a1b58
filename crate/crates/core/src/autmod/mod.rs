//! Algebra automorphisms of `kG` and their action on the socle.
//!
//! An automorphism is stored as its `|G| x |G|` matrix: column `g` holds the
//! coordinates of `alpha(g)`. Every constructor validates the matrix.
//!
//! ```
//! use jennings_socle::prelude::*;
//! use jennings_socle::autmod::verify_theorem;
//! use std::sync::Arc;
//!
//! let g = Arc::new(catalog("C3xC3").unwrap());
//! let k = Field::new(3, 2).unwrap();
//! let alg = GroupAlgebra::new(g, k.clone());
//! let jb = JenningsBasis::build(&alg).unwrap();
//! let spec = AutoSpec::parse("subst: x1 -> (t)*x1, x2 -> x2").unwrap();
//! let alpha = spec.build(&alg, CheckMode::Generators).unwrap();
//! let report = verify_theorem(&alg, &alpha, &jb).unwrap();
//! assert_eq!(report.lambda, k.pow(k.t(), 2));
//! assert!(report.theorem_equation_holds);
//! ```

mod spec;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use spec::AutoSpec;

use crate::error::{Error, Result};
use crate::ffield::FieldElement;
use crate::galgebra::{AlgebraElement, GroupAlgebra};
use crate::jennings::JenningsBasis;
use crate::linalg::Matrix;
use crate::pgroup::GroupAutomorphism;

/// Largest order at which the exhaustive pair check is used.
pub const EXHAUSTIVE_LIMIT: usize = 1 << 8;

/// How multiplicativity `alpha(gh) = alpha(g) alpha(h)` is validated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// `h` ranges over G and `g` over the pc-generators. Together with
    /// `alpha(1) = 1` this is equivalent to the check over all pairs.
    Generators,
    /// All `|G|^2` pairs.
    Exhaustive,
    /// `pairs` seeded random pairs.
    Sampled { pairs: usize, seed: u64 },
}

impl CheckMode {
    /// All pairs up to order 2^8, otherwise `10 |G|` sampled pairs.
    pub fn full(order: usize, seed: u64) -> CheckMode {
        if order <= EXHAUSTIVE_LIMIT {
            CheckMode::Exhaustive
        } else {
            CheckMode::Sampled { pairs: 10 * order, seed }
        }
    }
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckMode::Generators => write!(f, "generators"),
            CheckMode::Exhaustive => write!(f, "exhaustive"),
            CheckMode::Sampled { pairs, .. } => write!(f, "sampled {pairs} pairs"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AlgebraAutomorphism {
    matrix: Matrix,
    provenance: String,
    check: CheckMode,
}

/// Blocks `A_r` of the induced action on `Jen_r`, one per layer `r = 1..=c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAction {
    pub blocks: Vec<Matrix>,
    pub det_blocks: Vec<FieldElement>,
    pub det_total: FieldElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub lambda: FieldElement,
    pub det_blocks: Vec<FieldElement>,
    pub det_total: FieldElement,
    /// `det_total^(p-1)`
    pub det_pow: FieldElement,
    /// `lambda == det_pow`
    pub theorem_equation_holds: bool,
    /// `lambda` is a (p-1)-th power in `k^x`.
    pub lambda_in_subgroup: bool,
    pub lambda_is_one: bool,
}

impl AlgebraAutomorphism {
    /// Validate `matrix` as an algebra automorphism.
    pub fn new(alg: &GroupAlgebra, matrix: Matrix, provenance: impl Into<String>, check: CheckMode) -> Result<Self> {
        let alpha = AlgebraAutomorphism {
            matrix,
            provenance: provenance.into(),
            check,
        };
        alpha.validate(alg)?;
        Ok(alpha)
    }

    /// Build from the images `alpha(g)` of all group elements.
    pub fn from_images(
        alg: &GroupAlgebra,
        images: Vec<AlgebraElement>,
        provenance: impl Into<String>,
        check: CheckMode,
    ) -> Result<Self> {
        let n = alg.dim();
        if images.len() != n {
            return Err(Error::NotAnAutomorphism(format!("{} images for |G| = {n}", images.len())));
        }
        let cols = images.into_iter().map(AlgebraElement::into_coeffs).collect();
        Self::new(alg, Matrix::from_columns(alg.field(), n, cols), provenance, check)
    }

    pub fn identity(alg: &GroupAlgebra) -> Self {
        AlgebraAutomorphism {
            matrix: Matrix::identity(alg.field(), alg.dim()),
            provenance: "identity".into(),
            check: CheckMode::Generators,
        }
    }

    /// Linear extension of a group automorphism; a permutation matrix.
    pub fn from_group_automorphism(alg: &GroupAlgebra, sigma: &GroupAutomorphism, check: CheckMode) -> Result<Self> {
        let g = alg.group();
        let images = (0..alg.dim()).map(|x| alg.basis(sigma.apply(x))).collect();
        let words: Vec<String> = sigma
            .generator_images()
            .iter()
            .enumerate()
            .map(|(i, &x)| format!("g{} -> {}", i + 1, g.word(x)))
            .collect();
        Self::from_images(alg, images, format!("group-auto: {}", words.join(", ")), check)
    }

    /// `x -> u x u^-1`.
    pub fn inner(alg: &GroupAlgebra, u: &AlgebraElement, check: CheckMode) -> Result<Self> {
        let u_inv = alg.inverse(u)?;
        let images = (0..alg.dim())
            .map(|x| alg.mul(&alg.mul_group_right(u, x), &u_inv))
            .collect();
        Self::from_images(alg, images, format!("inner: {}", alg.format_element(u)), check)
    }

    /// On an elementary abelian group, `g_i -> 1 + sum_j a_{ij} (g_j - 1) + higher_i`
    /// with each `higher_i` in `J^2`.
    pub fn elementary_abelian_substitution(
        alg: &GroupAlgebra,
        a_lin: &Matrix,
        higher: Option<&[AlgebraElement]>,
        check: CheckMode,
    ) -> Result<Self> {
        let g = alg.group();
        let k = alg.field();
        let m = g.m();
        if !g.is_elementary_abelian() {
            return Err(Error::NotAnAutomorphism(format!(
                "substitutions need an elementary abelian group, {} is not",
                g.name()
            )));
        }
        if (a_lin.rows(), a_lin.cols()) != (m, m) {
            return Err(Error::DimensionMismatch(format!("linear part must be {m} x {m}")));
        }
        if a_lin.det(k).is_zero() {
            return Err(Error::SingularLinearPart);
        }
        let xs: Vec<AlgebraElement> = g.generators().iter().map(|&x| alg.group_minus_one(x)).collect();
        let mut gen_images = Vec::with_capacity(m);
        for i in 0..m {
            let mut f = alg.one();
            for (j, x) in xs.iter().enumerate() {
                f = alg.add(&f, &alg.scale(a_lin[(i, j)], x));
            }
            if let Some(h) = higher.and_then(|h| h.get(i)) {
                if !alg.in_power(h, 2) {
                    return Err(Error::NotAnAutomorphism(format!("higher term for g{} is not in J^2", i + 1)));
                }
                f = alg.add(&f, h);
            }
            gen_images.push(f);
        }
        // alpha(h) = alpha(h g_i^-1) alpha(g_i) for the last generator g_i in h
        let mut images: Vec<AlgebraElement> = Vec::with_capacity(alg.dim());
        images.push(alg.one());
        for x in 1..alg.dim() {
            let e = &g.element(x).exponents;
            let i = e.iter().rposition(|&v| v != 0).expect("non-identity");
            let prev = g.mul(x, g.inv(g.generator(i)));
            let img = alg.mul(&images[prev], &gen_images[i]);
            images.push(img);
        }
        let rows: Vec<String> = (0..m)
            .map(|i| {
                let terms: Vec<String> = (0..m)
                    .filter(|&j| !a_lin[(i, j)].is_zero())
                    .map(|j| format!("({})*x{}", k.format(a_lin[(i, j)]), j + 1))
                    .collect();
                let tail = if higher.and_then(|h| h.get(i)).is_some_and(|h| !h.is_zero()) {
                    " + higher"
                } else {
                    ""
                };
                format!("x{} -> {}{tail}", i + 1, terms.join(" + "))
            })
            .collect();
        Self::from_images(alg, images, format!("subst: {}", rows.join(", ")), check)
    }

    /// `alpha . beta`, i.e. `x -> alpha(beta(x))`.
    pub fn compose(alg: &GroupAlgebra, alpha: &Self, beta: &Self) -> Result<Self> {
        let m = alpha.matrix.mul(alg.field(), &beta.matrix);
        let prov = format!("compose: {} ; {}", alpha.provenance, beta.provenance);
        Self::new(alg, m, prov, alpha.check)
    }

    /// `u = 1 + z` with `z` uniform in `J`.
    pub fn random_inner(alg: &GroupAlgebra, seed: u64, check: CheckMode) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = alg.field();
        let q = k.order();
        let mut coeffs: Vec<FieldElement> = (0..alg.dim()).map(|_| k.from_index(rng.gen_range(0..q))).collect();
        let rest = coeffs[1..].iter().fold(k.zero(), |s, &c| k.add(s, c));
        coeffs[0] = k.sub(k.one(), rest);
        let u = AlgebraElement::from_coeffs(coeffs);
        let mut alpha = Self::inner(alg, &u, check)?;
        alpha.provenance = format!("random-inner seed={seed}");
        Ok(alpha)
    }

    /// Uniform invertible linear part and uniform tails in `J^2`.
    pub fn random_substitution(alg: &GroupAlgebra, seed: u64, check: CheckMode) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = alg.field();
        let q = k.order();
        let m = alg.group().m();
        let a = Matrix::random_invertible(k, m, &mut rng);
        let j2 = alg.radical_filtration().power(2);
        let tails: Vec<AlgebraElement> = (0..m)
            .map(|_| {
                let mut v = vec![k.zero(); alg.dim()];
                for row in j2.basis() {
                    let c = k.from_index(rng.gen_range(0..q));
                    crate::linalg::axpy(k, &mut v, c, row);
                }
                AlgebraElement::from_coeffs(v)
            })
            .collect();
        let mut alpha = Self::elementary_abelian_substitution(alg, &a, Some(&tails), check)?;
        alpha.provenance = format!("random-subst seed={seed}");
        Ok(alpha)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn check_mode(&self) -> CheckMode {
        self.check
    }

    /// `alpha(g)`.
    pub fn image(&self, g: usize) -> AlgebraElement {
        AlgebraElement::from_coeffs(self.matrix.column(g))
    }

    pub fn apply(&self, alg: &GroupAlgebra, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_coeffs(self.matrix.mul_vec(alg.field(), x.coeffs()))
    }

    fn validate(&self, alg: &GroupAlgebra) -> Result<()> {
        let k = alg.field();
        let n = alg.dim();
        if (self.matrix.rows(), self.matrix.cols()) != (n, n) {
            return Err(Error::NotAnAutomorphism(format!("matrix must be {n} x {n}")));
        }
        let images: Vec<AlgebraElement> = (0..n).map(|g| self.image(g)).collect();
        k.ensure(images[0].coeffs())?;
        if images[0] != alg.one() {
            return Err(Error::NotAnAutomorphism("alpha(1) != 1".into()));
        }
        // the augmentation is the only algebra map kG -> k, so alpha(J) lies in J
        if let Some(g) = images.iter().position(|x| alg.augmentation(x) != k.one()) {
            return Err(Error::FiltrationNotPreserved(format!(
                "alpha({}) has augmentation != 1",
                alg.group().word(g)
            )));
        }
        let grp = alg.group();
        let bad = |g: usize, h: usize| -> Error {
            Error::NotAnAutomorphism(format!(
                "alpha({}) alpha({}) != alpha({} * {})",
                grp.word(g),
                grp.word(h),
                grp.word(g),
                grp.word(h)
            ))
        };
        match self.check {
            CheckMode::Generators => {
                for g in grp.generators() {
                    for h in 0..n {
                        if alg.mul(&images[g], &images[h]) != images[grp.mul(g, h)] {
                            return Err(bad(g, h));
                        }
                    }
                }
            }
            CheckMode::Exhaustive => {
                for g in 0..n {
                    for h in 0..n {
                        if alg.mul(&images[g], &images[h]) != images[grp.mul(g, h)] {
                            return Err(bad(g, h));
                        }
                    }
                }
            }
            CheckMode::Sampled { pairs, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..pairs {
                    let (g, h) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    if alg.mul(&images[g], &images[h]) != images[grp.mul(g, h)] {
                        return Err(bad(g, h));
                    }
                }
            }
        }
        if self.matrix.rank(k) != n {
            return Err(Error::NotAnAutomorphism("matrix is singular".into()));
        }
        Ok(())
    }

    /// `alpha(J^r) = J^r` for every `r`, by mapping each echelon basis.
    /// Quadratic in `|G|` per basis vector; meant for small groups.
    pub fn preserves_filtration_exhaustive(&self, alg: &GroupAlgebra) -> bool {
        let filt = alg.radical_filtration();
        (1..=filt.socle_degree()).all(|r| {
            filt.power(r).basis().iter().all(|row| {
                let img = self.apply(alg, &AlgebraElement::from_coeffs(row.clone()));
                alg.in_power(&img, r)
            })
        })
    }
}

/// The scalar `lambda` with `alpha(n) = lambda n`, `n = sum_g g`.
/// `alpha(n)` is the vector of row sums of the matrix.
pub fn lambda_of(alg: &GroupAlgebra, alpha: &AlgebraAutomorphism) -> Result<FieldElement> {
    let n = alg.norm_element();
    let img = alpha.apply(alg, &n);
    let lambda = img.coeff(0);
    if lambda.is_zero() || img.coeffs().iter().any(|&c| c != lambda) {
        return Err(Error::SocleNotPreserved);
    }
    Ok(lambda)
}

/// The blocks `A_r`: column `j` of `A_r` holds the coordinates of the `gr_r`
/// image of `alpha(g_j - 1)` in the degree-`r` lift basis.
pub fn induced_blocks(alg: &GroupAlgebra, alpha: &AlgebraAutomorphism, jb: &JenningsBasis) -> Result<GradedAction> {
    let k = alg.field();
    let mut blocks = Vec::with_capacity(jb.top_degree());
    let mut det_blocks = Vec::with_capacity(jb.top_degree());
    let mut det_total = k.one();
    for r in 1..=jb.top_degree() {
        let range = jb.layer_range(r);
        let d = range.len();
        let basis: Vec<Vec<FieldElement>> = range.clone().map(|j| jb.lift_gr_coordinates(j).to_vec()).collect();
        let width = alg.radical_filtration().gr_pivots(r).len();
        let lift_matrix = Matrix::from_columns(k, width, basis);
        let mut cols = Vec::with_capacity(d);
        for j in range {
            let x = alg.group_minus_one(jb.lifts()[j]);
            let y = alpha.apply(alg, &x);
            let coords = alg.gr_coordinates(&y, r).map_err(|_| {
                Error::FiltrationNotPreserved(format!("alpha(g{} - 1) is not in J^{r}", j + 1))
            })?;
            let c = lift_matrix
                .solve(k, &coords)
                .ok_or(Error::LieSubspaceViolated { degree: r })?;
            cols.push(c);
        }
        let block = Matrix::from_columns(k, d, cols);
        let det = block.det(k);
        if det.is_zero() {
            return Err(Error::NotAnAutomorphism(format!("induced block A_{r} is singular")));
        }
        det_total = k.mul(det_total, det);
        det_blocks.push(det);
        blocks.push(block);
    }
    Ok(GradedAction {
        blocks,
        det_blocks,
        det_total,
    })
}

/// Compare `lambda` with `det(A)^(p-1)` and test `lambda` for membership in `(k^x)^(p-1)`.
pub fn verify_theorem(alg: &GroupAlgebra, alpha: &AlgebraAutomorphism, jb: &JenningsBasis) -> Result<VerificationReport> {
    let k = alg.field();
    let lambda = lambda_of(alg, alpha)?;
    let action = induced_blocks(alg, alpha, jb)?;
    let det_pow = k.pow(action.det_total, k.p() as u64 - 1);
    Ok(VerificationReport {
        lambda,
        det_blocks: action.det_blocks,
        det_total: action.det_total,
        det_pow,
        theorem_equation_holds: lambda == det_pow,
        lambda_in_subgroup: k.is_pm1_power(lambda)?,
        lambda_is_one: lambda == k.one(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::Field;
    use crate::pgroup::{catalog, GroupElement};
    use std::sync::Arc;

    fn setup(name: &str, n: usize) -> (GroupAlgebra, JenningsBasis) {
        let g = Arc::new(catalog(name).unwrap());
        let alg = GroupAlgebra::new(g.clone(), Field::new(g.p(), n).unwrap());
        let jb = JenningsBasis::build(&alg).unwrap();
        (alg, jb)
    }

    #[test]
    fn c3_inversion() {
        let (alg, jb) = setup("C3", 1);
        let sigma = alg.group().group_automorphism(&[GroupElement::new(vec![2])]).unwrap();
        let alpha = AlgebraAutomorphism::from_group_automorphism(&alg, &sigma, CheckMode::Exhaustive).unwrap();
        let k = alg.field();
        assert_eq!(lambda_of(&alg, &alpha).unwrap(), k.one());
        let action = induced_blocks(&alg, &alpha, &jb).unwrap();
        assert_eq!(action.blocks[0], Matrix::diagonal(k, &[k.from_int(2)]));
        assert_eq!(k.pow(action.det_total, 2), k.one());
    }

    #[test]
    fn c4_blocks() {
        let (alg, jb) = setup("C4", 1);
        let alpha = AutoSpec::parse("group-auto: g1 -> g1 g2").unwrap().build(&alg, CheckMode::Exhaustive).unwrap();
        let action = induced_blocks(&alg, &alpha, &jb).unwrap();
        let k = alg.field();
        assert_eq!(action.blocks, vec![Matrix::identity(k, 1), Matrix::identity(k, 1)]);
    }

    #[test]
    fn gf9_diagonal_substitution() {
        let (alg, jb) = setup("C3xC3", 2);
        let k = alg.field().clone();
        let a = Matrix::diagonal(&k, &[k.t(), k.one()]);
        let alpha = AlgebraAutomorphism::elementary_abelian_substitution(&alg, &a, None, CheckMode::Exhaustive).unwrap();
        let want = k.pow(k.t(), 2);
        // direct expansion: alpha(n) = (t x1)^2 x2^2
        let x1 = alg.group_minus_one(alg.group().generator(0));
        let x2 = alg.group_minus_one(alg.group().generator(1));
        let n = alg.mul(&alg.mul(&x1, &x1), &alg.mul(&x2, &x2));
        assert_eq!(n, alg.norm_element());
        assert_eq!(alpha.apply(&alg, &n), alg.scale(want, &n));
        let rep = verify_theorem(&alg, &alpha, &jb).unwrap();
        assert_eq!(rep.lambda, want);
        assert_eq!(rep.det_pow, want);
        assert!(rep.theorem_equation_holds && rep.lambda_in_subgroup && !rep.lambda_is_one);
    }

    #[test]
    fn higher_terms_do_not_change_lambda() {
        let (alg, jb) = setup("C3xC3", 2);
        let k = alg.field().clone();
        let a = Matrix::from_rows(vec![vec![k.t(), k.one()], vec![k.one(), k.t()]]);
        let plain = AlgebraAutomorphism::elementary_abelian_substitution(&alg, &a, None, CheckMode::Generators).unwrap();
        let x1 = alg.group_minus_one(alg.group().generator(0));
        let x2 = alg.group_minus_one(alg.group().generator(1));
        let tails = vec![alg.mul(&x1, &x2), alg.scale(k.t(), &alg.mul(&x2, &x2))];
        let tailed = AlgebraAutomorphism::elementary_abelian_substitution(&alg, &a, Some(&tails), CheckMode::Generators).unwrap();
        let r1 = verify_theorem(&alg, &plain, &jb).unwrap();
        let r2 = verify_theorem(&alg, &tailed, &jb).unwrap();
        assert_eq!(r1.lambda, r2.lambda);
        assert_eq!(r1.det_total, r2.det_total);
        assert!(r1.theorem_equation_holds);
    }

    #[test]
    fn singular_linear_part() {
        let (alg, _) = setup("C3xC3", 1);
        let k = alg.field();
        let a = Matrix::from_rows(vec![vec![k.one(), k.one()], vec![k.one(), k.one()]]);
        assert_eq!(
            AlgebraAutomorphism::elementary_abelian_substitution(&alg, &a, None, CheckMode::Generators).unwrap_err(),
            Error::SingularLinearPart
        );
        let (d8, _) = setup("D8", 1);
        let a = Matrix::identity(d8.field(), 3);
        assert!(AlgebraAutomorphism::elementary_abelian_substitution(&d8, &a, None, CheckMode::Generators).is_err());
    }

    #[test]
    fn non_multiplicative_map_is_rejected() {
        let (alg, _) = setup("C3", 1);
        // 1 -> 1, g -> g, g^2 -> g: linear but not multiplicative, and singular
        let images = vec![alg.basis(0), alg.basis(1), alg.basis(1)];
        for mode in [CheckMode::Generators, CheckMode::Exhaustive] {
            let err = AlgebraAutomorphism::from_images(&alg, images.clone(), "bad", mode).unwrap_err();
            assert!(matches!(err, Error::NotAnAutomorphism(_)), "{err:?}");
        }
        // an invertible linear map that is not multiplicative: swap two basis vectors of D8
        let (d8, _) = setup("D8", 1);
        let mut images: Vec<AlgebraElement> = (0..8).map(|x| d8.basis(x)).collect();
        images.swap(1, 2);
        let err = AlgebraAutomorphism::from_images(&d8, images, "bad", CheckMode::Generators).unwrap_err();
        assert!(matches!(err, Error::NotAnAutomorphism(_)));
    }

    #[test]
    fn generator_check_agrees_with_exhaustive() {
        let (alg, _) = setup("Q8", 1);
        for seed in 0..6 {
            let a = AlgebraAutomorphism::random_inner(&alg, seed, CheckMode::Exhaustive).unwrap();
            AlgebraAutomorphism::new(&alg, a.matrix().clone(), "again", CheckMode::Generators).unwrap();
        }
        // a map that is multiplicative on generators only from the left still fails
        let (d8, _) = setup("D8", 1);
        let mut images: Vec<AlgebraElement> = (0..8).map(|x| d8.basis(x)).collect();
        images.swap(6, 7);
        for mode in [CheckMode::Generators, CheckMode::Exhaustive] {
            assert!(AlgebraAutomorphism::from_images(&d8, images.clone(), "bad", mode).is_err());
        }
    }

    #[test]
    fn inner_and_composition() {
        let (alg, jb) = setup("D8", 2);
        let k = alg.field();
        let u = alg.parse_element("1 + g1").unwrap();
        assert_eq!(AlgebraAutomorphism::inner(&alg, &u, CheckMode::Generators).unwrap_err(), Error::NotAUnit);
        let u = alg.parse_element("1 + (t)*g1 + g2 g3").unwrap();
        // augmentation 1 + t + 1 = t
        let alpha = AlgebraAutomorphism::inner(&alg, &u, CheckMode::Exhaustive).unwrap();
        let rep = verify_theorem(&alg, &alpha, &jb).unwrap();
        assert!(rep.lambda_is_one && rep.theorem_equation_holds);
        assert!(rep.det_blocks.iter().all(|&d| d == k.one()));
        assert!(alpha.preserves_filtration_exhaustive(&alg));

        let beta = AutoSpec::parse("group-auto: g1 -> g1 g2, g2 -> g2").unwrap().build(&alg, CheckMode::Exhaustive).unwrap();
        let ab = AlgebraAutomorphism::compose(&alg, &alpha, &beta).unwrap();
        let ra = induced_blocks(&alg, &alpha, &jb).unwrap();
        let rb = induced_blocks(&alg, &beta, &jb).unwrap();
        let rab = induced_blocks(&alg, &ab, &jb).unwrap();
        assert_eq!(rab.det_total, k.mul(ra.det_total, rb.det_total));
        for r in 0..rab.blocks.len() {
            assert_eq!(rab.blocks[r], ra.blocks[r].mul(k, &rb.blocks[r]));
        }
    }

    #[test]
    fn unital_and_augmentation_checks() {
        let (alg, _) = setup("C2", 1);
        let images = vec![alg.basis(1), alg.basis(0)];
        assert!(matches!(
            AlgebraAutomorphism::from_images(&alg, images, "swap", CheckMode::Exhaustive),
            Err(Error::NotAnAutomorphism(_))
        ));
        let images = vec![alg.basis(0), alg.zero()];
        assert!(matches!(
            AlgebraAutomorphism::from_images(&alg, images, "kill", CheckMode::Exhaustive),
            Err(Error::FiltrationNotPreserved(_))
        ));
    }

    #[test]
    fn identity_is_trivial() {
        let (alg, jb) = setup("Heis27", 2);
        let id = AlgebraAutomorphism::identity(&alg);
        let rep = verify_theorem(&alg, &id, &jb).unwrap();
        assert!(rep.lambda_is_one);
        assert!(rep.det_blocks.iter().all(|&d| d == alg.field().one()));
    }
}
