//! Cross-module properties on random inputs.

use std::sync::Arc;

use jennings_socle::autmod::{lambda_of, verify_theorem, AlgebraAutomorphism, CheckMode};
use jennings_socle::ffield::Field;
use jennings_socle::galgebra::{AlgebraElement, GroupAlgebra};
use jennings_socle::jennings::JenningsBasis;
use jennings_socle::linalg::Matrix;
use jennings_socle::pgroup::catalog;
use jennings_socle::truncsym::top_monomial_scalar;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn algebra(name: &str, n: usize) -> GroupAlgebra {
    let g = Arc::new(catalog(name).unwrap());
    let k = Field::new(g.p(), n).unwrap();
    GroupAlgebra::new(g, k)
}

fn element(alg: &GroupAlgebra, idx: &[u64]) -> AlgebraElement {
    let k = alg.field();
    AlgebraElement::from_coeffs(idx.iter().map(|&i| k.from_index(i % k.order())).collect())
}

fn coeffs(alg: &GroupAlgebra) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(any::<u64>(), alg.dim())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms_q8_gf4(a in coeffs(&algebra("Q8", 2)), b in coeffs(&algebra("Q8", 2)), c in coeffs(&algebra("Q8", 2))) {
        let alg = algebra("Q8", 2);
        let (a, b, c) = (element(&alg, &a), element(&alg, &b), element(&alg, &c));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
        prop_assert_eq!(alg.mul(&a, &alg.add(&b, &c)), alg.add(&alg.mul(&a, &b), &alg.mul(&a, &c)));
        prop_assert_eq!(alg.mul(&alg.one(), &a), a.clone());
        prop_assert_eq!(alg.augmentation(&alg.mul(&a, &b)), alg.field().mul(alg.augmentation(&a), alg.augmentation(&b)));
    }

    #[test]
    fn units_invert_heis27(a in coeffs(&algebra("Heis27", 1))) {
        let alg = algebra("Heis27", 1);
        let a = element(&alg, &a);
        match alg.inverse(&a) {
            Ok(inv) => {
                prop_assert_eq!(alg.mul(&a, &inv), alg.one());
                prop_assert_eq!(alg.mul(&inv, &a), alg.one());
            }
            Err(_) => prop_assert!(alg.augmentation(&a).is_zero()),
        }
    }

    #[test]
    fn filtration_degree_is_additive_lower_bound(a in coeffs(&algebra("D8", 2)), b in coeffs(&algebra("D8", 2))) {
        let alg = algebra("D8", 2);
        let (a, b) = (element(&alg, &a), element(&alg, &b));
        let prod = alg.mul(&a, &b);
        if let (Some(da), Some(db)) = (alg.filtration_degree(&a), alg.filtration_degree(&b)) {
            let s = alg.radical_filtration().socle_degree();
            prop_assert!(alg.in_power(&prod, (da + db).min(s + 1)));
        }
    }

    #[test]
    fn lambda_is_multiplicative_under_composition(s1 in any::<u64>(), s2 in any::<u64>()) {
        let alg = algebra("C3xC3", 2);
        let k = alg.field();
        let a = AlgebraAutomorphism::random_substitution(&alg, s1, CheckMode::Generators).unwrap();
        let b = AlgebraAutomorphism::random_substitution(&alg, s2, CheckMode::Generators).unwrap();
        let ab = AlgebraAutomorphism::compose(&alg, &a, &b).unwrap();
        let la = lambda_of(&alg, &a).unwrap();
        let lb = lambda_of(&alg, &b).unwrap();
        prop_assert_eq!(lambda_of(&alg, &ab).unwrap(), k.mul(la, lb));
    }

    #[test]
    fn substitution_lambda_matches_truncated_symmetric_scalar(seed in any::<u64>()) {
        let alg = algebra("C5xC5", 2);
        let k = alg.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Matrix::random_invertible(&k, 2, &mut rng);
        let alpha = AlgebraAutomorphism::elementary_abelian_substitution(&alg, &a, None, CheckMode::Generators).unwrap();
        let top = top_monomial_scalar(&k, k.p(), &a).unwrap();
        prop_assert_eq!(lambda_of(&alg, &alpha).unwrap(), top);
    }

    #[test]
    fn inner_automorphisms_have_trivial_lambda_and_blocks(seed in any::<u64>()) {
        let alg = algebra("M16", 2);
        let jb = JenningsBasis::build(&alg).unwrap();
        let alpha = AlgebraAutomorphism::random_inner(&alg, seed, CheckMode::Generators).unwrap();
        let rep = verify_theorem(&alg, &alpha, &jb).unwrap();
        prop_assert!(rep.lambda_is_one);
        prop_assert!(rep.theorem_equation_holds);
    }
}

#[test]
fn socle_is_norm_element_in_top_degree() {
    for entry in jennings_socle::pgroup::catalog_entries() {
        let g = Arc::new(entry.build());
        let alg = GroupAlgebra::new(g.clone(), Field::prime(g.p()).unwrap());
        let n = alg.socle_vector().unwrap();
        assert_eq!(n, alg.norm_element(), "{}", g.name());
        let s = alg.radical_filtration().socle_degree();
        assert!(alg.in_power(&n, s) && !alg.in_power(&n, s + 1), "{}", g.name());
    }
}
