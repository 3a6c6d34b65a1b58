//! Built-in pc-presentations.

use super::PcGroup;
use crate::error::{Error, Result};

/// A catalog group together with a few automorphisms in `group-auto` syntax.
pub struct CatalogEntry {
    pub name: &'static str,
    pub p: u32,
    pub m: usize,
    pub description: &'static str,
    pub automorphisms: &'static [&'static str],
    text: &'static str,
}

impl CatalogEntry {
    pub fn build(&self) -> PcGroup {
        PcGroup::parse(self.text)
            .expect("catalog presentations are consistent")
            .with_name(self.name)
    }
}

macro_rules! entry {
    ($name:expr, $p:expr, $m:expr, $desc:expr, [$($auto:expr),* $(,)?], $text:expr) => {
        CatalogEntry { name: $name, p: $p, m: $m, description: $desc, automorphisms: &[$($auto),*], text: $text }
    };
}

static CATALOG: &[CatalogEntry] = &[
    entry!("C2", 2, 1, "cyclic of order 2", ["g1 -> g1"], "pcgroup p=2 m=1\ng1^2 = 1\n"),
    entry!("C3", 3, 1, "cyclic of order 3", ["g1 -> g1^2"], "pcgroup p=3 m=1\ng1^3 = 1\n"),
    entry!("C5", 5, 1, "cyclic of order 5", ["g1 -> g1^2", "g1 -> g1^4"], "pcgroup p=5 m=1\ng1^5 = 1\n"),
    entry!("C4", 2, 2, "cyclic of order 4", ["g1 -> g1 g2"], "pcgroup p=2 m=2\ng1^2 = g2\ng2^2 = 1\n"),
    entry!("C9", 3, 2, "cyclic of order 9", ["g1 -> g1^2", "g1 -> g1 g2"], "pcgroup p=3 m=2\ng1^3 = g2\ng2^3 = 1\n"),
    entry!("C25", 5, 2, "cyclic of order 25", ["g1 -> g1^2", "g1 -> g1 g2"], "pcgroup p=5 m=2\ng1^5 = g2\ng2^5 = 1\n"),
    entry!("C8", 2, 3, "cyclic of order 8", ["g1 -> g1 g2", "g1 -> g1 g3"],
        "pcgroup p=2 m=3\ng1^2 = g2\ng2^2 = g3\ng3^2 = 1\n"),
    entry!("C27", 3, 3, "cyclic of order 27", ["g1 -> g1^2", "g1 -> g1 g2", "g1 -> g1 g3"],
        "pcgroup p=3 m=3\ng1^3 = g2\ng2^3 = g3\ng3^3 = 1\n"),
    entry!("C125", 5, 3, "cyclic of order 125", ["g1 -> g1^2", "g1 -> g1 g2"],
        "pcgroup p=5 m=3\ng1^5 = g2\ng2^5 = g3\ng3^5 = 1\n"),
    entry!("C2xC2", 2, 2, "elementary abelian of order 4",
        ["g1 -> g2, g2 -> g1", "g1 -> g1 g2, g2 -> g2"],
        "pcgroup p=2 m=2\ng1^2 = 1\ng2^2 = 1\n"),
    entry!("C3xC3", 3, 2, "elementary abelian of order 9",
        ["g1 -> g2, g2 -> g1", "g1 -> g1 g2, g2 -> g2", "g1 -> g1^2, g2 -> g2"],
        "pcgroup p=3 m=2\ng1^3 = 1\ng2^3 = 1\n"),
    entry!("C5xC5", 5, 2, "elementary abelian of order 25",
        ["g1 -> g2, g2 -> g1", "g1 -> g1 g2, g2 -> g2", "g1 -> g1^2, g2 -> g2^3"],
        "pcgroup p=5 m=2\ng1^5 = 1\ng2^5 = 1\n"),
    entry!("C2xC2xC2", 2, 3, "elementary abelian of order 8",
        ["g1 -> g2, g2 -> g3, g3 -> g1", "g1 -> g1 g3, g2 -> g2, g3 -> g3"],
        "pcgroup p=2 m=3\ng1^2 = 1\ng2^2 = 1\ng3^2 = 1\n"),
    entry!("C3xC3xC3", 3, 3, "elementary abelian of order 27",
        ["g1 -> g2, g2 -> g3, g3 -> g1", "g1 -> g1 g3, g2 -> g2, g3 -> g3", "g1 -> g1^2, g2 -> g2, g3 -> g3"],
        "pcgroup p=3 m=3\ng1^3 = 1\ng2^3 = 1\ng3^3 = 1\n"),
    entry!("C5xC5xC5", 5, 3, "elementary abelian of order 125",
        ["g1 -> g2, g2 -> g3, g3 -> g1", "g1 -> g1 g3, g2 -> g2, g3 -> g3", "g1 -> g1^3, g2 -> g2, g3 -> g3^2"],
        "pcgroup p=5 m=3\ng1^5 = 1\ng2^5 = 1\ng3^5 = 1\n"),
    entry!("C4xC2", 2, 3, "C4 x C2 with g1 of order 4, g2 = g1^2, g3 the C2 factor",
        ["g1 -> g1 g3, g3 -> g3", "g1 -> g1, g3 -> g2 g3", "g1 -> g1 g2, g3 -> g3"],
        "pcgroup p=2 m=3\ng1^2 = g2\ng2^2 = 1\ng3^2 = 1\n"),
    entry!("D8", 2, 3, "dihedral of order 8: g1 a reflection, g2 a rotation of order 4",
        ["g1 -> g1 g3, g2 -> g2", "g1 -> g1 g2, g2 -> g2", "g1 -> g1, g2 -> g2 g3"],
        "pcgroup p=2 m=3\ng1^2 = 1\ng2^2 = g3\ng3^2 = 1\n[g2,g1] = g3\n"),
    entry!("Q8", 2, 3, "quaternion of order 8",
        ["g1 -> g2, g2 -> g1", "g1 -> g1 g2, g2 -> g2"],
        "pcgroup p=2 m=3\ng1^2 = g3\ng2^2 = g3\ng3^2 = 1\n[g2,g1] = g3\n"),
    entry!("D16", 2, 4, "dihedral of order 16: g1 a reflection, g2 a rotation of order 8",
        ["g1 -> g1 g2, g2 -> g2", "g1 -> g1, g2 -> g2 g3", "g1 -> g1, g2 -> g2 g4"],
        "pcgroup p=2 m=4\ng1^2 = 1\ng2^2 = g3\ng3^2 = g4\ng4^2 = 1\n[g2,g1] = g3 g4\n[g3,g1] = g4\n"),
    entry!("M16", 2, 4, "modular group of order 16: b a b = a^5",
        ["g1 -> g1, g2 -> g2 g3", "g1 -> g1 g4, g2 -> g2"],
        "pcgroup p=2 m=4\ng1^2 = 1\ng2^2 = g3\ng3^2 = g4\ng4^2 = 1\n[g2,g1] = g4\n"),
    entry!("Heis27", 3, 3, "Heisenberg group of order 27, exponent 3",
        ["g1 -> g2, g2 -> g1", "g1 -> g1 g2, g2 -> g2", "g1 -> g1^2, g2 -> g2"],
        "pcgroup p=3 m=3\ng1^3 = 1\ng2^3 = 1\ng3^3 = 1\n[g2,g1] = g3\n"),
    entry!("Heis125", 5, 3, "Heisenberg group of order 125, exponent 5",
        ["g1 -> g2, g2 -> g1", "g1 -> g1 g2, g2 -> g2", "g1 -> g1^2, g2 -> g2"],
        "pcgroup p=5 m=3\ng1^5 = 1\ng2^5 = 1\ng3^5 = 1\n[g2,g1] = g3\n"),
    entry!("Ex27", 3, 3, "extraspecial of order 27, exponent 9",
        ["g1 -> g1, g2 -> g2 g3", "g1 -> g1 g3, g2 -> g2", "g1 -> g1, g2 -> g2^2"],
        "pcgroup p=3 m=3\ng1^3 = 1\ng2^3 = g3\ng3^3 = 1\n[g2,g1] = g3\n"),
    entry!("Ex125", 5, 3, "extraspecial of order 125, exponent 25",
        ["g1 -> g1, g2 -> g2 g3", "g1 -> g1 g3, g2 -> g2", "g1 -> g1, g2 -> g2^2"],
        "pcgroup p=5 m=3\ng1^5 = 1\ng2^5 = g3\ng3^5 = 1\n[g2,g1] = g3\n"),
];

pub fn catalog_entries() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

/// A catalog group by name (case-insensitive).
pub fn catalog(name: &str) -> Result<PcGroup> {
    CATALOG
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .map(CatalogEntry::build)
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_is_consistent_with_its_metadata() {
        for e in catalog_entries() {
            let g = e.build();
            assert_eq!(g.p(), e.p, "{}", e.name);
            assert_eq!(g.m(), e.m, "{}", e.name);
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(catalog("S3").unwrap_err(), Error::UnknownGroup("S3".into()));
        assert!(catalog("d8").is_ok());
    }

    #[test]
    fn structural_sanity() {
        assert!(catalog("C5xC5xC5").unwrap().is_elementary_abelian());
        assert!(!catalog("C25").unwrap().is_elementary_abelian());
        assert!(!catalog("Q8").unwrap().is_abelian());
        let q8 = catalog("Q8").unwrap();
        // one involution
        let invols = (1..8).filter(|&x| q8.mul(x, x) == 0).count();
        assert_eq!(invols, 1);
        let d8 = catalog("D8").unwrap();
        assert_eq!((1..8).filter(|&x| d8.mul(x, x) == 0).count(), 5);
        // exponents
        let heis = catalog("Heis27").unwrap();
        assert!((0..27).all(|x| heis.pow(x, 3) == 0));
        let ex = catalog("Ex27").unwrap();
        assert!((0..27).any(|x| ex.pow(x, 3) != 0));
        let m16 = catalog("M16").unwrap();
        let a = m16.generator(1);
        let b = m16.generator(0);
        assert_eq!(m16.mul(m16.mul(b, a), b), m16.pow(a, 5));
    }
}
