//! Serializable reports and their text rendering.
//!
//! Struct field order is the JSON key order.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
    pub p: u32,
    #[serde(skip)]
    pub presentation: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FieldInfo {
    pub p: u32,
    pub n: usize,
    pub modulus: String,
}

/// One row of the Jennings table: `r`, `|F_r|`, `d_r` and the lift words.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct LayerReport {
    pub r: usize,
    pub order: usize,
    pub d_r: usize,
    pub lifts: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AutoReport {
    pub provenance: String,
    pub lambda: String,
    pub det_blocks: Vec<String>,
    pub det_total: String,
    pub det_pow: String,
    pub equation_holds: bool,
    pub in_subgroup: bool,
    pub lambda_is_one: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RunReport {
    pub group: GroupInfo,
    pub field: FieldInfo,
    pub jennings: Vec<LayerReport>,
    pub gr_dims: Vec<usize>,
    pub socle_degree: usize,
    pub autos: Vec<AutoReport>,
    pub verdict: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SweepReport {
    pub seed: u64,
    pub cases: Vec<RunReport>,
    pub verdict: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FragmentLayer {
    pub r: usize,
    pub d_r: usize,
    pub lifts: Vec<String>,
}

/// The Jennings table on its own.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct JenningsFragment {
    pub layers: Vec<FragmentLayer>,
    pub gr_dims: Vec<usize>,
    pub socle_degree: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GlCheckReport {
    pub p: u32,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub generator_cases: usize,
    pub generator_passed: usize,
    pub random_cases: usize,
    pub random_passed: usize,
    pub verdict: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl RunReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g = &self.group;
        let f = &self.field;
        let _ = writeln!(s, "group  {} (order {}, p = {})", g.name, g.order, g.p);
        if !g.presentation.is_empty() {
            for line in g.presentation.lines() {
                let _ = writeln!(s, "         {line}");
            }
        }
        let _ = writeln!(s, "field  GF({}^{}) mod {}", f.p, f.n, f.modulus);
        let _ = writeln!(s, "\n  r  |F_r|  d_r  lifts");
        for l in &self.jennings {
            let _ = writeln!(s, "{:>3}  {:>5}  {:>3}  {}", l.r, l.order, l.d_r, l.lifts.join(", "));
        }
        let _ = writeln!(s, "\ngr dims       {:?}", self.gr_dims);
        let _ = writeln!(s, "socle degree  {}", self.socle_degree);
        if !self.autos.is_empty() {
            let _ = writeln!(s, "\nautomorphisms");
            for a in &self.autos {
                let _ = writeln!(s, "  {}", a.provenance);
                let _ = writeln!(
                    s,
                    "    lambda = {}  det blocks = [{}]  det = {}  det^(p-1) = {}",
                    a.lambda,
                    a.det_blocks.join(", "),
                    a.det_total,
                    a.det_pow
                );
                let _ = writeln!(
                    s,
                    "    equation holds: {}  in (k^x)^(p-1): {}  lambda = 1: {}",
                    yes(a.equation_holds),
                    yes(a.in_subgroup),
                    yes(a.lambda_is_one)
                );
            }
        }
        let _ = writeln!(s, "\nverdict: {}", if self.verdict { "PASS" } else { "FAIL" });
        s
    }
}

impl SweepReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "sweep seed {:#x}", self.seed);
        let _ = writeln!(s, "{:<10} {:>6} {:>7} {:>6} {:>6}  verdict", "group", "order", "field", "autos", "s");
        for c in &self.cases {
            let _ = writeln!(
                s,
                "{:<10} {:>6} {:>7} {:>6} {:>6}  {}",
                c.group.name,
                c.group.order,
                format!("GF({})", (c.field.p as u64).pow(c.field.n as u32)),
                c.autos.len(),
                c.socle_degree,
                if c.verdict { "PASS" } else { "FAIL" }
            );
        }
        let total: usize = self.cases.iter().map(|c| c.autos.len()).sum();
        let _ = writeln!(
            s,
            "\n{} cases, {} automorphisms, verdict: {}",
            self.cases.len(),
            total,
            if self.verdict { "PASS" } else { "FAIL" }
        );
        s
    }
}

impl JenningsFragment {
    pub fn to_text(&self) -> String {
        let mut s = String::from("  r  d_r  lifts\n");
        for l in &self.layers {
            let _ = writeln!(s, "{:>3}  {:>3}  {}", l.r, l.d_r, l.lifts.join(", "));
        }
        let _ = writeln!(s, "gr dims       {:?}", self.gr_dims);
        let _ = writeln!(s, "socle degree  {}", self.socle_degree);
        s
    }
}

impl GlCheckReport {
    pub fn to_text(&self) -> String {
        format!(
            "GL check over GF({}^{}), m = {}, seed {}\n  generators  {}/{}\n  random      {}/{}\nverdict: {}\n",
            self.p,
            self.n,
            self.m,
            self.seed,
            self.generator_passed,
            self.generator_cases,
            self.random_passed,
            self.random_cases,
            if self.verdict { "PASS" } else { "FAIL" }
        )
    }
}
