//! The truncated symmetric algebra `k[x_1, ..., x_m] / (x_j^p)`.
//!
//! Coefficients are stored densely, indexed by exponent tuples
//! `(i_1, ..., i_m)` with `0 <= i_j < p` read as base-`p` digits, `i_1` most
//! significant.
//!
//! ```
//! use jennings_socle::prelude::*;
//! use jennings_socle::truncsym::top_monomial_scalar;
//!
//! let k = Field::new(3, 2).unwrap();
//! let a = Matrix::diagonal(&k, &[k.t(), k.one()]);
//! // (det A)^(p-1) = t^2
//! assert_eq!(top_monomial_scalar(&k, 3, &a).unwrap(), k.pow(k.t(), 2));
//! ```

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElement};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    p: u32,
    m: usize,
    coeffs: Vec<FieldElement>,
}

impl TruncatedPolynomial {
    pub fn zero(k: &Field, p: u32, m: usize) -> TruncatedPolynomial {
        TruncatedPolynomial {
            p,
            m,
            coeffs: vec![k.zero(); (p as usize).pow(m as u32)],
        }
    }

    pub fn one(k: &Field, p: u32, m: usize) -> TruncatedPolynomial {
        Self::monomial(k, p, m, &vec![0; m], k.one())
    }

    /// `c x^e`, or zero if some exponent reaches `p`.
    pub fn monomial(k: &Field, p: u32, m: usize, exps: &[u32], c: FieldElement) -> TruncatedPolynomial {
        let mut f = Self::zero(k, p, m);
        if let Some(i) = f.index(exps) {
            f.coeffs[i] = c;
        }
        f
    }

    pub fn variable(k: &Field, p: u32, m: usize, j: usize) -> TruncatedPolynomial {
        let mut e = vec![0; m];
        e[j] = 1;
        Self::monomial(k, p, m, &e, k.one())
    }

    /// `prod_j x_j^{p-1}`, which spans the top degree.
    pub fn top_monomial(k: &Field, p: u32, m: usize) -> TruncatedPolynomial {
        Self::monomial(k, p, m, &vec![p - 1; m], k.one())
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    fn index(&self, exps: &[u32]) -> Option<usize> {
        assert_eq!(exps.len(), self.m);
        exps.iter().try_fold(0usize, |acc, &e| (e < self.p).then(|| acc * self.p as usize + e as usize))
    }

    fn exponents(&self, mut idx: usize) -> Vec<u32> {
        let p = self.p as usize;
        let mut e = vec![0; self.m];
        for slot in e.iter_mut().rev() {
            *slot = (idx % p) as u32;
            idx /= p;
        }
        e
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<FieldElement> {
        self.index(exps).map(|i| self.coeffs[i])
    }

    /// Nonzero terms as `(exponents, coefficient)`.
    pub fn terms(&self) -> Vec<(Vec<u32>, FieldElement)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (self.exponents(i), c))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    pub fn add(&self, k: &Field, other: &TruncatedPolynomial) -> TruncatedPolynomial {
        assert_eq!((self.p, self.m), (other.p, other.m));
        TruncatedPolynomial {
            p: self.p,
            m: self.m,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| k.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, k: &Field, c: FieldElement) -> TruncatedPolynomial {
        TruncatedPolynomial {
            p: self.p,
            m: self.m,
            coeffs: self.coeffs.iter().map(|&a| k.mul(c, a)).collect(),
        }
    }

    /// `self * other` with `x_j^p = 0`.
    pub fn multiply(&self, k: &Field, other: &TruncatedPolynomial) -> TruncatedPolynomial {
        assert_eq!((self.p, self.m), (other.p, other.m));
        let mut out = Self::zero(k, self.p, self.m);
        let lhs = self.terms();
        let rhs = other.terms();
        let mut e = vec![0u32; self.m];
        for (a, ca) in &lhs {
            for (b, cb) in &rhs {
                for ((slot, x), y) in e.iter_mut().zip(a).zip(b) {
                    *slot = x + y;
                }
                if let Some(i) = out.index(&e) {
                    out.coeffs[i] = k.add(out.coeffs[i], k.mul(*ca, *cb));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: &Field, e: u32) -> TruncatedPolynomial {
        (0..e).fold(Self::one(k, self.p, self.m), |acc, _| acc.multiply(k, self))
    }
}

pub fn tp_multiply(k: &Field, a: &TruncatedPolynomial, b: &TruncatedPolynomial) -> TruncatedPolynomial {
    a.multiply(k, b)
}

/// `x_j -> sum_i a_{ji} x_i`, extended multiplicatively.
pub fn substitute(k: &Field, f: &TruncatedPolynomial, a: &Matrix) -> Result<TruncatedPolynomial> {
    let (p, m) = (f.p, f.m);
    assert_eq!((a.rows(), a.cols()), (m, m), "substitution matrix must be m x m");
    if a.det(k).is_zero() {
        return Err(Error::SingularMatrix);
    }
    let images: Vec<TruncatedPolynomial> = (0..m)
        .map(|j| {
            (0..m).fold(TruncatedPolynomial::zero(k, p, m), |acc, i| {
                acc.add(k, &TruncatedPolynomial::variable(k, p, m, i).scale(k, a[(j, i)]))
            })
        })
        .collect();
    // powers[j][e] = images[j]^e
    let powers: Vec<Vec<TruncatedPolynomial>> = images
        .iter()
        .map(|y| {
            let mut v = vec![TruncatedPolynomial::one(k, p, m)];
            for e in 1..p as usize {
                v.push(v[e - 1].multiply(k, y));
            }
            v
        })
        .collect();
    let mut out = TruncatedPolynomial::zero(k, p, m);
    for (exps, c) in f.terms() {
        let term = exps
            .iter()
            .enumerate()
            .fold(TruncatedPolynomial::one(k, p, m), |acc, (j, &e)| acc.multiply(k, &powers[j][e as usize]));
        out = out.add(k, &term.scale(k, c));
    }
    Ok(out)
}

/// The scalar `c` with `A . prod_j x_j^{p-1} = c prod_j x_j^{p-1}`; it equals
/// `det(A)^{p-1}`.
pub fn top_monomial_scalar(k: &Field, p: u32, a: &Matrix) -> Result<FieldElement> {
    let m = a.rows();
    let top = TruncatedPolynomial::top_monomial(k, p, m);
    let image = substitute(k, &top, a)?;
    let c = image.coeff(&vec![p - 1; m]).expect("exponents below p");
    if image != top.scale(k, c) {
        return Err(Error::NotScalarMultiple);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Coefficient of `prod x_j^{p-1}` in `prod_j (sum_i a_{ji} x_i)^{p-1}`,
    /// summed over every choice of one variable per linear factor.
    fn expansion_oracle(k: &Field, p: u32, a: &Matrix) -> FieldElement {
        let m = a.rows();
        let factors: Vec<usize> = (0..m).flat_map(|j| std::iter::repeat(j).take(p as usize - 1)).collect();
        let n = factors.len();
        let mut choice = vec![0usize; n];
        let mut total = k.zero();
        loop {
            let mut counts = vec![0u32; m];
            for &c in &choice {
                counts[c] += 1;
            }
            if counts.iter().all(|&c| c == p - 1) {
                let term = factors.iter().zip(&choice).fold(k.one(), |acc, (&j, &i)| k.mul(acc, a[(j, i)]));
                total = k.add(total, term);
            }
            let mut t = 0;
            loop {
                if t == n {
                    return total;
                }
                choice[t] += 1;
                if choice[t] < m {
                    break;
                }
                choice[t] = 0;
                t += 1;
            }
        }
    }

    #[test]
    fn multiplication_truncates() {
        let k = Field::prime(2).unwrap();
        let x = TruncatedPolynomial::variable(&k, 2, 1, 0);
        assert!(tp_multiply(&k, &x, &x).is_zero());

        let k = Field::prime(3).unwrap();
        let top = TruncatedPolynomial::top_monomial(&k, 3, 2);
        let x1 = TruncatedPolynomial::variable(&k, 3, 2, 0);
        assert!(top.multiply(&k, &x1).is_zero());

        let k = Field::prime(2).unwrap();
        let x1 = TruncatedPolynomial::variable(&k, 2, 2, 0);
        let x2 = TruncatedPolynomial::variable(&k, 2, 2, 1);
        assert_eq!(x1.multiply(&k, &x2).terms(), vec![(vec![1, 1], k.one())]);
    }

    #[test]
    fn generator_shapes() {
        for p in [2, 3, 5] {
            let k = Field::new(p, 2).unwrap();
            for c in k.elements() {
                let e = Matrix::elementary(&k, 2, 0, 1, c);
                assert_eq!(top_monomial_scalar(&k, p, &e).unwrap(), k.one());
            }
            let d = [k.t(), k.from_int(p as i64 - 1)];
            let a = Matrix::diagonal(&k, &d);
            let want = k.pow(k.mul(d[0], d[1]), p as u64 - 1);
            assert_eq!(top_monomial_scalar(&k, p, &a).unwrap(), want);
        }
    }

    #[test]
    fn singular_is_rejected() {
        let k = Field::prime(3).unwrap();
        let a = Matrix::zeros(&k, 2, 2);
        assert_eq!(top_monomial_scalar(&k, 3, &a), Err(Error::SingularMatrix));
    }

    #[test]
    fn random_3x3_over_gf5_matches_expansion() {
        let k = Field::prime(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..4 {
            let a = Matrix::random_invertible(&k, 3, &mut rng);
            let want = k.pow(a.det(&k), 4);
            assert_eq!(expansion_oracle(&k, 5, &a), want);
            assert_eq!(top_monomial_scalar(&k, 5, &a).unwrap(), want);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn scalar_is_multiplicative(seed in any::<u64>(), pi in 0usize..3, m in 1usize..4, n in 1usize..3) {
            let p = [2, 3, 5][pi];
            let k = Field::new(p, n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = Matrix::random_invertible(&k, m, &mut rng);
            let b = Matrix::random_invertible(&k, m, &mut rng);
            let sa = top_monomial_scalar(&k, p, &a).unwrap();
            let sb = top_monomial_scalar(&k, p, &b).unwrap();
            let sab = top_monomial_scalar(&k, p, &a.mul(&k, &b)).unwrap();
            prop_assert_eq!(sab, k.mul(sa, sb));
            prop_assert_eq!(sa, k.pow(a.det(&k), p as u64 - 1));
        }

        #[test]
        fn scalar_matches_expansion_small(seed in any::<u64>(), pi in 0usize..2, m in 1usize..4) {
            let p = [2, 3][pi];
            let k = Field::new(p, 2).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = Matrix::random_invertible(&k, m, &mut rng);
            prop_assert_eq!(top_monomial_scalar(&k, p, &a).unwrap(), expansion_oracle(&k, p, &a));
        }
    }
}
