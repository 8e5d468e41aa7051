//! The named two-site generator families and the chain-topology extension
//! rules that turn a two-site family into a generator set on `n` sites.
//!
//! Families come in three kinds: `a`-type (every generator has two
//! non-identity letters), `b`-type (single-Pauli generators appear in
//! matched pairs such as `XI, IX`), and `c`-type (some single Pauli appears
//! on one site only, a boundary artifact that the chain classification
//! excludes).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::pauli::{PauliError, PauliString};

/// Family kind: which of the three generator classes a label belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    A,
    B,
    C,
}

impl FamilyKind {
    pub fn max_index(self) -> u8 {
        match self {
            FamilyKind::A => 22,
            FamilyKind::B => 4,
            FamilyKind::C => 7,
        }
    }

    fn letter(self) -> char {
        match self {
            FamilyKind::A => 'a',
            FamilyKind::B => 'b',
            FamilyKind::C => 'c',
        }
    }
}

/// A family label such as `a9` or `b2`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub index: u8,
}

/// Errors from family lookup and generator extension.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family index {index} out of range for kind {kind:?}")]
    IndexOutOfRange { kind: FamilyKind, index: u8 },
    #[error("chain extension requires n >= {min}, got {got}")]
    ChainTooShort { min: usize, got: usize },
    #[error("extension takes two-site generators, got length {0}")]
    NotTwoSite(usize),
    #[error(transparent)]
    Pauli(#[from] PauliError),
}

impl FamilyId {
    pub fn new(kind: FamilyKind, index: u8) -> Result<Self, CatalogError> {
        if index > kind.max_index() {
            return Err(CatalogError::IndexOutOfRange { kind, index });
        }
        Ok(FamilyId { kind, index })
    }

    /// All `a`- and `b`-type families, the ones entering the chain
    /// classification.
    pub fn chain_families() -> Vec<FamilyId> {
        let mut out = Vec::with_capacity(28);
        for i in 0..=22 {
            out.push(FamilyId::new(FamilyKind::A, i).unwrap());
        }
        for i in 0..=4 {
            out.push(FamilyId::new(FamilyKind::B, i).unwrap());
        }
        out
    }

    /// Every family, including the `c`-type boundary cases.
    pub fn all_families() -> Vec<FamilyId> {
        let mut out = Self::chain_families();
        for i in 0..=7 {
            out.push(FamilyId::new(FamilyKind::C, i).unwrap());
        }
        out
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.index)
    }
}

impl serde::Serialize for FamilyId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FamilyId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for FamilyId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('a') | Some('A') => FamilyKind::A,
            Some('b') | Some('B') => FamilyKind::B,
            Some('c') | Some('C') => FamilyKind::C,
            _ => return Err(CatalogError::UnknownFamily(s.to_string())),
        };
        let index: u8 = chars
            .as_str()
            .parse()
            .map_err(|_| CatalogError::UnknownFamily(s.to_string()))?;
        FamilyId::new(kind, index)
    }
}

/// Chain topology for extending two-site generators to `n` sites.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    /// Nearest-neighbour line: offsets `1..n-1`.
    Open,
    /// Ring: the open set plus the wrap term `B_1 A_n` for each generator
    /// `A B`.
    Periodic,
    /// All-to-all: `A_i B_j` for every ordered pair `i != j`.
    Permutation,
}

impl Topology {
    pub fn all() -> [Topology; 3] {
        [Topology::Open, Topology::Periodic, Topology::Permutation]
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Topology::Open => write!(f, "open"),
            Topology::Periodic => write!(f, "periodic"),
            Topology::Permutation => write!(f, "permutation"),
        }
    }
}

impl FromStr for Topology {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "open" => Ok(Topology::Open),
            "periodic" => Ok(Topology::Periodic),
            "permutation" => Ok(Topology::Permutation),
            other => Err(format!("unknown topology {other:?}")),
        }
    }
}

/// Minimal two-site generating sets, one entry per family.
const A_GENERATORS: [&[&str]; 23] = [
    &["XX"],
    &["XY"],
    &["XY", "YX"],
    &["XX", "YZ"],
    &["XX", "YY"],
    &["XY", "YZ"],
    &["XX", "YZ", "ZY"],
    &["XX", "YY", "ZZ"],
    &["XX", "XZ"],
    &["XY", "XZ"],
    &["XY", "YZ", "ZX"],
    &["XY", "YX", "YZ"],
    &["XX", "XY", "YZ"],
    &["YY", "YZ", "XX"],
    &["XX", "YY", "XY"],
    &["XX", "XY", "XZ"],
    &["XY", "YX", "YZ", "ZY"],
    &["XX", "XY", "ZX"],
    &["XX", "XZ", "YY", "ZY"],
    &["XX", "XY", "ZX", "YZ"],
    &["XX", "YY", "ZZ", "ZY"],
    &["XX", "YY", "XY", "ZX"],
    // su(4) is generated by no 4-element set of weight-2 strings; this is
    // one of the minimal 5-element sets.
    &["XX", "XY", "XZ", "YX", "ZX"],
];

const B_GENERATORS: [&[&str]; 5] = [
    &["XI", "IX"],
    &["XX", "XI", "IX"],
    &["XY", "XI", "IX"],
    &["XI", "YI", "IX", "IY"],
    &["XX", "XY", "XI", "IX"],
];

const C_GENERATORS: [&[&str]; 8] = [
    &["XI"],
    &["XY", "XI"],
    &["XX", "XI"],
    &["XI", "IY"],
    &["XY", "XI", "IY"],
    &["XI", "YI", "ZI"],
    &["XX", "XY", "XI"],
    &["XI", "YI", "IX"],
];

/// Generating sets used for frustration-graph recognition. These generate
/// the same two-site algebras as `catalog_generators` but tile into plain
/// paths and cycles: the field terms of `a8` and `a14` are pulled out as
/// single-site generators.
pub fn recognition_generators(family: FamilyId) -> Vec<PauliString> {
    let texts: &[&str] = match (family.kind, family.index) {
        (FamilyKind::A, 8) => &["XX", "IY"],
        (FamilyKind::A, 14) => &["XX", "ZI", "IZ"],
        _ => return catalog_generators(family),
    };
    let mut out: Vec<PauliString> = texts.iter().map(|t| t.parse().unwrap()).collect();
    out.sort();
    out
}

/// The minimal two-site generating set of a family, canonically sorted.
pub fn catalog_generators(family: FamilyId) -> Vec<PauliString> {
    let texts = match family.kind {
        FamilyKind::A => A_GENERATORS[family.index as usize],
        FamilyKind::B => B_GENERATORS[family.index as usize],
        FamilyKind::C => C_GENERATORS[family.index as usize],
    };
    let mut out: Vec<PauliString> = texts.iter().map(|t| t.parse().unwrap()).collect();
    out.sort();
    out
}

fn check_two_site(gens2: &[PauliString]) -> Result<(), CatalogError> {
    for g in gens2 {
        if g.n() != 2 {
            return Err(CatalogError::NotTwoSite(g.n()));
        }
    }
    Ok(())
}

fn finish(mut out: Vec<PauliString>) -> Vec<PauliString> {
    out.sort();
    out.dedup();
    out
}

/// Embed each two-site generator at offsets `0..n-1`: the open chain.
pub fn extend_open(gens2: &[PauliString], n: usize) -> Result<Vec<PauliString>, CatalogError> {
    check_two_site(gens2)?;
    if n < 2 {
        return Err(CatalogError::ChainTooShort { min: 2, got: n });
    }
    let mut out = Vec::with_capacity(gens2.len() * (n - 1));
    for g in gens2 {
        for k in 0..n - 1 {
            out.push(g.embed(k, n)?);
        }
    }
    Ok(finish(out))
}

/// The open set plus, for each generator `A B`, the wrap term with `B` on
/// site 1 and `A` on site `n`.
pub fn extend_periodic(gens2: &[PauliString], n: usize) -> Result<Vec<PauliString>, CatalogError> {
    check_two_site(gens2)?;
    if n < 3 {
        return Err(CatalogError::ChainTooShort { min: 3, got: n });
    }
    let mut out = extend_open(gens2, n)?;
    for g in gens2 {
        // g = A (x) B wraps to B_1 A_n.
        let b_first = PauliString::single(n, 0, g.letter(1))?;
        let a_last = PauliString::single(n, n - 1, g.letter(0))?;
        out.push(b_first.product(&a_last).string);
    }
    Ok(finish(out))
}

/// Each generator `A B` placed at every ordered site pair `(i, j)`, `i != j`.
pub fn extend_permutation(
    gens2: &[PauliString],
    n: usize,
) -> Result<Vec<PauliString>, CatalogError> {
    check_two_site(gens2)?;
    if n < 2 {
        return Err(CatalogError::ChainTooShort { min: 2, got: n });
    }
    let mut out = Vec::new();
    for g in gens2 {
        let a = g.letter(0);
        let b = g.letter(1);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut ps = PauliString::single(n, i, a)?;
                let q = PauliString::single(n, j, b)?;
                ps = ps.product(&q).string;
                out.push(ps);
            }
        }
    }
    Ok(finish(out))
}

/// A named model: family, chain length, topology.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModelSpec {
    pub family: FamilyId,
    pub n: usize,
    pub topology: Topology,
}

impl ModelSpec {
    pub fn new(family: FamilyId, n: usize, topology: Topology) -> Self {
        ModelSpec {
            family,
            n,
            topology,
        }
    }

    pub fn two_site_generators(&self) -> Vec<PauliString> {
        catalog_generators(self.family)
    }

    /// The extended generator set on `n` sites.
    pub fn generators(&self) -> Result<Vec<PauliString>, CatalogError> {
        let gens2 = self.two_site_generators();
        extend(&gens2, self.n, self.topology)
    }
}

/// Extend any two-site set by topology.
pub fn extend(
    gens2: &[PauliString],
    n: usize,
    topology: Topology,
) -> Result<Vec<PauliString>, CatalogError> {
    match topology {
        Topology::Open => extend_open(gens2, n),
        Topology::Periodic => extend_periodic(gens2, n),
        Topology::Permutation => extend_permutation(gens2, n),
    }
}

/// The generator catalog as shipped: a versioned JSON resource embedded in
/// the crate. The in-code tables are the implementation; a test keeps the
/// two in sync so the file can be regenerated from the tables at any time.
pub const CATALOG_JSON: &str = include_str!("../data/catalog.json");

/// Render the in-code tables in the shipped JSON format.
pub fn catalog_as_json() -> String {
    use std::fmt::Write;
    let mut families = String::new();
    let all = FamilyId::all_families();
    for (i, f) in all.iter().enumerate() {
        let gens: Vec<String> = match f.kind {
            FamilyKind::A => A_GENERATORS[f.index as usize],
            FamilyKind::B => B_GENERATORS[f.index as usize],
            FamilyKind::C => C_GENERATORS[f.index as usize],
        }
        .iter()
        .map(|t| format!("\"{t}\""))
        .collect();
        let _ = write!(
            families,
            "    \"{f}\": [\n      {}\n    ]{}\n",
            gens.join(",\n      "),
            if i + 1 < all.len() { "," } else { "" }
        );
    }
    format!("{{\n  \"version\": 1,\n  \"families\": {{\n{families}  }}\n}}\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_set;

    fn texts(set: &[PauliString]) -> Vec<String> {
        set.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn shipped_catalog_matches_tables() {
        assert_eq!(CATALOG_JSON, catalog_as_json());
        let doc: serde_json::Value = serde_json::from_str(CATALOG_JSON).unwrap();
        assert_eq!(doc["version"], 1);
        assert_eq!(doc["families"].as_object().unwrap().len(), 36);
    }

    #[test]
    fn recognition_sets_generate_the_same_algebras() {
        use crate::dla::close;
        for family in FamilyId::all_families() {
            let standard = close(&catalog_generators(family)).unwrap();
            let recog = close(&recognition_generators(family)).unwrap();
            assert_eq!(standard, recog, "{family}");
        }
    }

    #[test]
    fn family_parsing() {
        let f: FamilyId = "a9".parse().unwrap();
        assert_eq!(f, FamilyId::new(FamilyKind::A, 9).unwrap());
        assert_eq!(f.to_string(), "a9");
        assert!("a23".parse::<FamilyId>().is_err());
        assert!("d1".parse::<FamilyId>().is_err());
        assert!("b5".parse::<FamilyId>().is_err());
    }

    #[test]
    fn catalog_entries() {
        assert_eq!(texts(&catalog_generators("a1".parse().unwrap())), ["XY"]);
        let b4 = catalog_generators("b4".parse().unwrap());
        assert_eq!(b4.len(), 4);
        // canonical order is lexicographic on (x_bits, z_bits)
        assert_eq!(texts(&b4), ["XI", "IX", "XX", "XY"]);
        assert_eq!(texts(&catalog_generators("c0".parse().unwrap())), ["XI"]);
    }

    #[test]
    fn open_extension() {
        let got = extend_open(&parse_set("XY").unwrap(), 3).unwrap();
        let mut t = texts(&got);
        t.sort();
        assert_eq!(t, ["IXY", "XYI"]);

        let got = extend_open(&parse_set("XX,YY").unwrap(), 3).unwrap();
        assert_eq!(got.len(), 4);

        // duplicates collapse: XI and IX both tile to single-site X terms
        let got = extend_open(&parse_set("XI,IX").unwrap(), 3).unwrap();
        let mut t = texts(&got);
        t.sort();
        assert_eq!(t, ["IIX", "IXI", "XII"]);
    }

    #[test]
    fn periodic_wrap_reverses_letters() {
        let got = extend_periodic(&parse_set("XX").unwrap(), 3).unwrap();
        let mut t = texts(&got);
        t.sort();
        assert_eq!(t, ["IXX", "XIX", "XXI"]);

        let got = extend_periodic(&parse_set("XY").unwrap(), 3).unwrap();
        let mut t = texts(&got);
        t.sort();
        assert_eq!(t, ["IXY", "XYI", "YIX"]);

        let got = extend_periodic(&parse_set("XY,YX").unwrap(), 3).unwrap();
        assert!(got.contains(&"YIX".parse().unwrap()));
        assert!(got.contains(&"XIY".parse().unwrap()));

        assert!(extend_periodic(&parse_set("XY").unwrap(), 2).is_err());
    }

    #[test]
    fn permutation_extension() {
        let got = extend_permutation(&parse_set("XX").unwrap(), 3).unwrap();
        let mut t = texts(&got);
        t.sort();
        assert_eq!(t, ["IXX", "XIX", "XXI"]);

        let got = extend_permutation(&parse_set("XY").unwrap(), 2).unwrap();
        let mut t = texts(&got);
        t.sort();
        assert_eq!(t, ["XY", "YX"]);
    }

    #[test]
    fn topology_inclusions() {
        // open subset of periodic subset of permutation, for every family
        for family in FamilyId::all_families() {
            let gens2 = catalog_generators(family);
            for n in 3..=5 {
                let open = extend_open(&gens2, n).unwrap();
                let per = extend_periodic(&gens2, n).unwrap();
                let perm = extend_permutation(&gens2, n).unwrap();
                assert!(open.iter().all(|g| per.contains(g)), "{family} open<per");
                assert!(per.iter().all(|g| perm.contains(g)), "{family} per<perm");
            }
        }
    }
}
