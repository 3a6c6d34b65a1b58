//! End-to-end verification runs, the catalog sweep and the GL check.
//!
//! A run builds the field, the group, the radical filtration and the Jennings
//! basis, checks the dimension identities, and then verifies each
//! automorphism. Errors carry the name of the failing stage.

mod report;

use std::path::PathBuf;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use report::{
    to_json, AutoReport, FieldInfo, FragmentLayer, GlCheckReport, GroupInfo, JenningsFragment, LayerReport,
    RunReport, SweepReport,
};

use crate::autmod::{verify_theorem, AutoSpec, CheckMode};
use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::galgebra::GroupAlgebra;
use crate::jennings::JenningsBasis;
use crate::linalg::Matrix;
use crate::pgroup::{catalog, catalog_entries, PcGroup};
use crate::truncsym::top_monomial_scalar;

/// Master seed used when neither `--seed` nor the environment sets one.
pub const DEFAULT_SEED: u64 = 0xB50C1E;
pub const SEED_ENV: &str = "SOCLE_VERIFY_SEED";

/// Random automorphisms of each kind per sweep case.
pub const SWEEP_RANDOM_PER_KIND: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Catalog(String),
    File(PathBuf),
}

impl GroupSource {
    /// A catalog name, or a path if no catalog group has that name.
    pub fn from_arg(s: &str) -> GroupSource {
        if catalog(s).is_ok() {
            GroupSource::Catalog(s.to_string())
        } else {
            GroupSource::File(PathBuf::from(s))
        }
    }

    pub fn load(&self) -> Result<PcGroup> {
        match self {
            GroupSource::Catalog(name) => catalog(name),
            GroupSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                PcGroup::parse(&text)
            }
        }
    }
}

/// `p[,n[,modulus]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub n: usize,
    pub modulus: Option<String>,
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let mut parts = s.splitn(3, ',').map(str::trim);
        let bad = || Error::Parse(format!("expected `p[,n[,modulus]]`, found `{s}`"));
        let p = parts.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        let n = match parts.next() {
            Some(x) => x.parse().map_err(|_| bad())?,
            None => 1,
        };
        let modulus = parts.next().map(str::to_string);
        Ok(FieldSpec { p, n, modulus })
    }

    pub fn build(&self) -> Result<Field> {
        match &self.modulus {
            None => Field::new(self.p, self.n),
            Some(m) => {
                let coeffs = Field::parse_prime_poly(self.p, m)?;
                if coeffs.len() != self.n + 1 {
                    return Err(Error::InvalidField(format!("modulus `{m}` does not have degree {}", self.n)));
                }
                Field::with_modulus(self.p, &coeffs)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: GroupSource,
    pub field: FieldSpec,
    pub autos: Vec<AutoSpec>,
    /// Use the exhaustive (or, above 2^8, sampled) multiplicativity check.
    pub full_check: bool,
    pub seed: u64,
}

/// Parse one `--auto` argument; `@path` reads one spec per non-empty,
/// non-comment line.
pub fn parse_auto_arg(arg: &str) -> Result<Vec<AutoSpec>> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(AutoSpec::parse)
                .collect()
        }
        None => Ok(vec![AutoSpec::parse(arg)?]),
    }
}

/// The seed given on the command line, else the environment, else the default.
pub fn resolve_seed(cli: Option<u64>) -> Result<u64> {
    if let Some(s) = cli {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => parse_seed(&v).ok_or_else(|| Error::Parse(format!("{SEED_ENV}=`{v}` is not a u64"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// Decimal or `0x` hexadecimal.
pub fn parse_seed(s: &str) -> Option<u64> {
    let s = s.trim();
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16).ok(),
        None => s.parse().ok(),
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed for item `b` of case `a`, independent of evaluation order.
pub fn derive_seed(master: u64, a: u64, b: u64) -> u64 {
    splitmix64(splitmix64(master ^ splitmix64(a)) ^ b)
}

struct Prepared {
    alg: GroupAlgebra,
    jb: JenningsBasis,
    group: GroupInfo,
    field: FieldInfo,
    jennings: Vec<LayerReport>,
    gr_dims: Vec<usize>,
    socle_degree: usize,
}

fn prepare(group: &GroupSource, field: &FieldSpec) -> Result<Prepared> {
    let k = field.build().map_err(|e| e.at("field"))?;
    let g = group.load().map_err(|e| e.at("group"))?;
    let alg = GroupAlgebra::try_new(Arc::new(g), k.clone()).map_err(|e| e.at("field"))?;
    let filt = alg.radical_filtration();
    let (gr_dims, socle_degree) = (filt.gr_dims(), filt.socle_degree());
    alg.socle_vector().map_err(|e| e.at("filtration"))?;
    let jb = JenningsBasis::build(&alg).map_err(|e| e.at("jennings"))?;
    jb.jq_dimension_check(&alg).map_err(|e| e.at("jennings"))?;
    let grp = alg.group();
    let jennings = jb
        .layers()
        .into_iter()
        .map(|l| LayerReport {
            r: l.r,
            order: l.order,
            d_r: l.d_r,
            lifts: l.lifts.iter().map(|&j| grp.word(jb.lifts()[j])).collect(),
        })
        .collect();
    let group = GroupInfo {
        name: grp.name().to_string(),
        order: grp.order(),
        p: grp.p(),
        presentation: grp.presentation(),
    };
    let field = FieldInfo {
        p: k.p(),
        n: k.degree(),
        modulus: k.modulus_string(),
    };
    Ok(Prepared {
        alg,
        jb,
        group,
        field,
        jennings,
        gr_dims,
        socle_degree,
    })
}

pub fn run(config: &RunConfig) -> Result<RunReport> {
    let prep = prepare(&config.group, &config.field)?;
    let alg = &prep.alg;
    let k = alg.field();
    let check = if config.full_check {
        CheckMode::full(alg.dim(), config.seed)
    } else {
        CheckMode::Generators
    };
    let mut autos = Vec::with_capacity(config.autos.len());
    for spec in &config.autos {
        let stage = || format!("automorphism `{spec}`");
        let alpha = spec.build(alg, check).map_err(|e| e.at(stage()))?;
        let rep = verify_theorem(alg, &alpha, &prep.jb).map_err(|e| e.at(stage()))?;
        autos.push(AutoReport {
            provenance: format!("{} [check: {}]", alpha.provenance(), alpha.check_mode()),
            lambda: k.format(rep.lambda),
            det_blocks: rep.det_blocks.iter().map(|&d| k.format(d)).collect(),
            det_total: k.format(rep.det_total),
            det_pow: k.format(rep.det_pow),
            equation_holds: rep.theorem_equation_holds,
            in_subgroup: rep.lambda_in_subgroup,
            lambda_is_one: rep.lambda_is_one,
        });
    }
    let verdict = autos.iter().all(|a| a.equation_holds && a.in_subgroup);
    Ok(RunReport {
        group: prep.group,
        field: prep.field,
        jennings: prep.jennings,
        gr_dims: prep.gr_dims,
        socle_degree: prep.socle_degree,
        autos,
        verdict,
    })
}

/// Automorphisms for sweep case `case`: the stored group automorphisms,
/// random inner automorphisms, random substitutions on elementary abelian
/// groups, and compositions of the random kinds with the stored ones.
pub fn sweep_autos(name: &str, master: u64, case: u64) -> Result<Vec<AutoSpec>> {
    let entry = catalog_entries()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
    let elementary = entry.build().is_elementary_abelian();
    let stored: Vec<AutoSpec> = entry
        .automorphisms
        .iter()
        .map(|a| AutoSpec::parse(&format!("group-auto: {a}")))
        .collect::<Result<_>>()?;
    let mut autos = stored.clone();
    let seed = |kind: u64, i: usize| derive_seed(master, case, kind << 32 | i as u64);
    for i in 0..SWEEP_RANDOM_PER_KIND {
        autos.push(AutoSpec::RandomInner(seed(1, i)));
    }
    if elementary {
        for i in 0..SWEEP_RANDOM_PER_KIND {
            autos.push(AutoSpec::RandomSubst(seed(2, i)));
        }
    }
    for i in 0..SWEEP_RANDOM_PER_KIND {
        let random = if elementary && i % 2 == 1 {
            AutoSpec::RandomSubst(seed(3, i))
        } else {
            AutoSpec::RandomInner(seed(3, i))
        };
        autos.push(AutoSpec::Compose(vec![random, stored[i % stored.len()].clone()]));
    }
    Ok(autos)
}

/// Every catalog group over GF(p) and GF(p^2).
pub fn sweep_cases() -> Vec<(&'static str, FieldSpec)> {
    catalog_entries()
        .iter()
        .flat_map(|e| {
            [1, 2].map(|n| {
                (
                    e.name,
                    FieldSpec {
                        p: e.p,
                        n,
                        modulus: None,
                    },
                )
            })
        })
        .collect()
}

pub fn sweep(master: u64) -> Result<SweepReport> {
    let mut cases = Vec::new();
    for (i, (name, field)) in sweep_cases().into_iter().enumerate() {
        let config = RunConfig {
            group: GroupSource::Catalog(name.to_string()),
            autos: sweep_autos(name, master, i as u64)?,
            field,
            full_check: false,
            seed: derive_seed(master, i as u64, 0),
        };
        let report = run(&config).map_err(|e| e.at(format!("sweep case {name} over GF({}^{})", config.field.p, config.field.n)))?;
        cases.push(report);
    }
    let verdict = cases.iter().all(|c| c.verdict);
    Ok(SweepReport {
        seed: master,
        cases,
        verdict,
    })
}

pub fn jennings_fragment(group: &GroupSource, field: &FieldSpec) -> Result<JenningsFragment> {
    let prep = prepare(group, field)?;
    Ok(JenningsFragment {
        layers: prep
            .jennings
            .into_iter()
            .map(|l| FragmentLayer {
                r: l.r,
                d_r: l.d_r,
                lifts: l.lifts,
            })
            .collect(),
        gr_dims: prep.gr_dims,
        socle_degree: prep.socle_degree,
    })
}

/// The GL generators: `I + c E_ij` for `i != j`, `c != 0`, and
/// `diag(1, .., a, .., 1)` for `a != 0`.
pub fn gl_generators(k: &Field, m: usize) -> Vec<Matrix> {
    let nonzero: Vec<_> = k.elements().filter(|x| !x.is_zero()).collect();
    let mut out = Vec::new();
    for i in 0..m {
        for &a in &nonzero {
            let mut d = vec![k.one(); m];
            d[i] = a;
            out.push(Matrix::diagonal(k, &d));
        }
        for j in 0..m {
            if i != j {
                for &c in &nonzero {
                    out.push(Matrix::elementary(k, m, i, j, c));
                }
            }
        }
    }
    out
}

/// `top_monomial_scalar(A) = det(A)^(p-1)` on the GL generators and on
/// `count` seeded random invertible matrices.
pub fn gl_check(p: u32, n: usize, m: usize, count: usize, seed: u64) -> Result<GlCheckReport> {
    if m == 0 {
        return Err(Error::DomainError("m must be at least 1".into()));
    }
    let k = Field::new(p, n)?;
    let holds = |a: &Matrix| -> bool {
        top_monomial_scalar(&k, p, a).is_ok_and(|s| s == k.pow(a.det(&k), p as u64 - 1))
    };
    let gens = gl_generators(&k, m);
    let generator_passed = gens.iter().filter(|a| holds(a)).count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_passed = 0;
    for _ in 0..count {
        let a = Matrix::random_invertible(&k, m, &mut rng);
        random_passed += holds(&a) as usize;
    }
    Ok(GlCheckReport {
        p,
        n,
        m,
        seed,
        generator_cases: gens.len(),
        generator_passed,
        random_cases: count,
        random_passed,
        verdict: generator_passed == gens.len() && random_passed == count,
    })
}

/// `name  p  order  description` per catalog group.
pub fn catalog_listing() -> String {
    let mut s = format!("{:<10} {:>2} {:>6}  description\n", "name", "p", "order");
    for e in catalog_entries() {
        s.push_str(&format!(
            "{:<10} {:>2} {:>6}  {}\n",
            e.name,
            e.p,
            (e.p as usize).pow(e.m as u32),
            e.description
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_specs() {
        assert_eq!(FieldSpec::parse("3").unwrap(), FieldSpec { p: 3, n: 1, modulus: None });
        let f = FieldSpec::parse("2,2,t^2+t+1").unwrap();
        assert_eq!(f.build().unwrap().modulus(), &[1, 1, 1]);
        assert!(FieldSpec::parse("2,3,t^2+t+1").unwrap().build().is_err());
        assert!(FieldSpec::parse("x").is_err());
    }

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("0xB50C1E"), Some(DEFAULT_SEED));
        assert_eq!(parse_seed("7"), Some(7));
        assert_ne!(derive_seed(1, 0, 1), derive_seed(1, 1, 0));
    }

    #[test]
    fn d8_example_run() {
        let config = RunConfig {
            group: GroupSource::Catalog("D8".into()),
            field: FieldSpec::parse("2").unwrap(),
            autos: vec![AutoSpec::parse("group-auto: g1 -> g1 g3, g2 -> g2").unwrap()],
            full_check: true,
            seed: 1,
        };
        let r = run(&config).unwrap();
        assert!(r.verdict);
        assert_eq!(r.autos[0].lambda, "1");
        assert_eq!(r.gr_dims, vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn empty_automorphism_list() {
        let config = RunConfig {
            group: GroupSource::Catalog("Q8".into()),
            field: FieldSpec::parse("2,2").unwrap(),
            autos: vec![],
            full_check: false,
            seed: 1,
        };
        let r = run(&config).unwrap();
        assert!(r.verdict && r.autos.is_empty());
        assert_eq!(r.jennings.len(), 2);
    }

    #[test]
    fn stage_is_named() {
        let config = RunConfig {
            group: GroupSource::Catalog("D8".into()),
            field: FieldSpec::parse("3").unwrap(),
            autos: vec![],
            full_check: false,
            seed: 1,
        };
        let err = run(&config).unwrap_err();
        assert!(matches!(err, Error::Stage { ref stage, .. } if stage == "field"), "{err}");
    }

    #[test]
    fn json_key_order() {
        let config = RunConfig {
            group: GroupSource::Catalog("C3xC3".into()),
            field: FieldSpec::parse("3,2").unwrap(),
            autos: vec![AutoSpec::parse("subst: x1 -> (t)*x1, x2 -> x2").unwrap()],
            full_check: false,
            seed: 1,
        };
        let r = run(&config).unwrap();
        // t^2 = -1 modulo t^2 + 1
        assert_eq!(r.autos[0].lambda, "2");
        let json = to_json(&r);
        let keys = ["\"group\"", "\"field\"", "\"jennings\"", "\"gr_dims\"", "\"socle_degree\"", "\"autos\"", "\"verdict\""];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }
}
