//! The two-site power-set scan: every subalgebra of su(4) generated by
//! Pauli strings, its orbit under the symmetry group S3 x Z2 (simultaneous
//! letter relabelings times the site swap), the (s, p, e, d) invariants,
//! and the matching of orbits to the named catalog families.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::{catalog_generators, FamilyId};
use crate::dla::{close, DlaError};
use crate::pauli::{Letter, LetterPerm, PauliString};

/// Order of the symmetry group S3 x Z2.
pub const GROUP_ORDER: usize = 12;

/// One element of S3 x Z2 acting on two-site Pauli strings: a simultaneous
/// relabeling of {X, Y, Z} optionally composed with the swap of the two
/// sites.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PairSymmetry {
    pub relabel: LetterPerm,
    pub swap_sites: bool,
}

impl PairSymmetry {
    pub fn apply(&self, p: &PauliString) -> PauliString {
        assert_eq!(p.n(), 2, "pair symmetries act on two-site strings");
        let q = self.relabel.apply(p);
        if self.swap_sites {
            q.cyclic_shift(1)
        } else {
            q
        }
    }

    /// Image of a set, canonically sorted.
    pub fn apply_set(&self, set: &[PauliString]) -> Vec<PauliString> {
        let mut out: Vec<PauliString> = set.iter().map(|p| self.apply(p)).collect();
        out.sort();
        out.dedup();
        out
    }
}

/// All twelve elements of S3 x Z2, identity first.
pub fn group_elements() -> Vec<PairSymmetry> {
    let mut out = Vec::with_capacity(GROUP_ORDER);
    for swap_sites in [false, true] {
        for relabel in LetterPerm::all() {
            out.push(PairSymmetry {
                relabel,
                swap_sites,
            });
        }
    }
    out
}

/// The counts (s, p, e, d): single Paulis, single-Pauli pairs, equal-letter
/// doubles, different-letter doubles in a two-site basis. Constant on every
/// S3 x Z2 orbit.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairInvariants {
    pub singles: usize,
    pub single_pairs: usize,
    pub equal_doubles: usize,
    pub different_doubles: usize,
}

impl PairInvariants {
    pub fn of(basis: &[PauliString]) -> Self {
        let mut singles = 0;
        let mut equal_doubles = 0;
        let mut different_doubles = 0;
        let mut single_pairs = 0;
        for p in basis {
            assert_eq!(p.n(), 2);
            let (a, b) = (p.letter(0), p.letter(1));
            match (a == Letter::I, b == Letter::I) {
                (true, true) => unreachable!("identity never appears in a basis"),
                (true, false) | (false, true) => singles += 1,
                (false, false) => {
                    if a == b {
                        equal_doubles += 1;
                    } else {
                        different_doubles += 1;
                    }
                }
            }
        }
        for letter in [Letter::X, Letter::Y, Letter::Z] {
            let first = PauliString::single(2, 0, letter).unwrap();
            let second = PauliString::single(2, 1, letter).unwrap();
            if basis.contains(&first) && basis.contains(&second) {
                single_pairs += 1;
            }
        }
        PairInvariants {
            singles,
            single_pairs,
            equal_doubles,
            different_doubles,
        }
    }

    pub fn tuple(&self) -> (usize, usize, usize, usize) {
        (
            self.singles,
            self.single_pairs,
            self.equal_doubles,
            self.different_doubles,
        )
    }
}

/// Which generator class a two-site subalgebra belongs to.
///
/// - `A`: some set of weight-2 strings closes to it;
/// - `B`: not A, but a set in which every single-Pauli generator appears
///   with its site-swapped partner closes to it;
/// - `C`: every generating set contains an unpaired single Pauli (a
///   boundary artifact under chain translation).
///
/// Since generators always lie inside the closure, it suffices to test the
/// closure of the weight-2 strings of the basis (for A), and of those plus
/// the paired singles of the basis (for B).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubalgebraClass {
    A,
    B,
    C,
}

/// A canonicalized subalgebra orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    /// Lexicographically minimal basis among the twelve images.
    pub canonical_basis: Vec<PauliString>,
    pub invariants: PairInvariants,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
    pub class: SubalgebraClass,
    pub matched_family: Option<FamilyId>,
}

impl OrbitRecord {
    pub fn dimension(&self) -> usize {
        self.canonical_basis.len()
    }
}

/// Errors from orbit canonicalization.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OrbitError {
    #[error("input is not commutator-closed")]
    NotClosed,
    #[error("orbit machinery handles two-site strings only, got {0} sites")]
    NotTwoSite(usize),
    #[error(transparent)]
    Dla(#[from] DlaError),
}

fn check_closed(basis: &[PauliString]) -> Result<(), OrbitError> {
    for p in basis {
        if p.n() != 2 {
            return Err(OrbitError::NotTwoSite(p.n()));
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if let Some(c) = a.commutator_string(b) {
                if !basis.contains(&c) {
                    return Err(OrbitError::NotClosed);
                }
            }
        }
    }
    Ok(())
}

fn classify_basis(basis: &[PauliString]) -> SubalgebraClass {
    let weight2: Vec<PauliString> = basis.iter().filter(|p| p.weight() == 2).copied().collect();
    if !weight2.is_empty() {
        if let Ok(b) = close(&weight2) {
            if b.basis() == basis {
                return SubalgebraClass::A;
            }
        }
    }
    let mut paired = weight2;
    for letter in [Letter::X, Letter::Y, Letter::Z] {
        let first = PauliString::single(2, 0, letter).unwrap();
        let second = PauliString::single(2, 1, letter).unwrap();
        if basis.contains(&first) && basis.contains(&second) {
            paired.push(first);
            paired.push(second);
        }
    }
    paired.sort();
    if !paired.is_empty() {
        if let Ok(b) = close(&paired) {
            if b.basis() == basis {
                return SubalgebraClass::B;
            }
        }
    }
    SubalgebraClass::C
}

/// Canonicalize a commutator-closed set of two-site strings: the canonical
/// representative is the lexicographic minimum of its twelve images, and
/// the orbit size is the number of distinct images.
pub fn canonicalize(basis: &[PauliString]) -> Result<OrbitRecord, OrbitError> {
    let mut sorted = basis.to_vec();
    sorted.sort();
    sorted.dedup();
    check_closed(&sorted)?;

    let mut images: Vec<Vec<PauliString>> = group_elements()
        .iter()
        .map(|g| g.apply_set(&sorted))
        .collect();
    images.sort();
    images.dedup();
    let orbit_size = images.len();
    let canonical_basis = images.into_iter().next().expect("nonempty orbit");

    let invariants = PairInvariants::of(&canonical_basis);
    let class = classify_basis(&canonical_basis);
    let matched_family = family_of_canonical(&canonical_basis);

    Ok(OrbitRecord {
        canonical_basis,
        invariants,
        orbit_size,
        stabilizer_order: GROUP_ORDER / orbit_size,
        class,
        matched_family,
    })
}

/// Canonical representative of the orbit of each named family's closure.
fn family_canonical_table() -> &'static BTreeMap<Vec<PauliString>, FamilyId> {
    use std::sync::OnceLock;
    static TABLE: OnceLock<BTreeMap<Vec<PauliString>, FamilyId>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut map = BTreeMap::new();
        for family in FamilyId::all_families() {
            let closure = close(&catalog_generators(family)).expect("catalog closes");
            let mut images: Vec<Vec<PauliString>> = group_elements()
                .iter()
                .map(|g| g.apply_set(closure.basis()))
                .collect();
            images.sort();
            let canonical = images.into_iter().next().unwrap();
            map.insert(canonical, family);
        }
        map
    })
}

fn family_of_canonical(canonical: &[PauliString]) -> Option<FamilyId> {
    family_canonical_table().get(canonical).copied()
}

/// The full power-set inventory over the fifteen non-identity two-site
/// strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanInventory {
    /// Number of distinct subalgebras per class.
    pub a_count: usize,
    pub b_count: usize,
    pub c_count: usize,
    /// One record per orbit, sorted by matched family.
    pub orbits: Vec<OrbitRecord>,
}

impl ScanInventory {
    pub fn total(&self) -> usize {
        self.a_count + self.b_count + self.c_count
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

/// All fifteen non-identity two-site strings in canonical order.
pub fn two_site_strings() -> Vec<PauliString> {
    let mut out = Vec::with_capacity(15);
    for z in 0..4u64 {
        for x in 0..4u64 {
            if x == 0 && z == 0 {
                continue;
            }
            out.push(PauliString::from_bits(2, x, z).unwrap());
        }
    }
    out.sort();
    out
}

/// Close every nonempty subset of the fifteen strings, deduplicate the
/// resulting subalgebras, type and canonicalize them, and group them into
/// orbits.
///
/// Internally subalgebras are 15-bit masks over `two_site_strings()` and
/// closure is a fixpoint over a precomputed 15x15 bracket table, so the
/// whole 32767-subset sweep is cheap.
pub fn scan_power_sets() -> ScanInventory {
    let strings = two_site_strings();
    let index_of = |p: &PauliString| strings.iter().position(|s| s == p).unwrap();

    // bracket table over indices; None when the pair commutes
    let mut table = [[None::<usize>; 15]; 15];
    for i in 0..15 {
        for j in 0..15 {
            if let Some(c) = strings[i].commutator_string(&strings[j]) {
                table[i][j] = Some(index_of(&c));
            }
        }
    }

    let close_mask = |mask: u16| -> u16 {
        let mut cur = mask;
        loop {
            let mut next = cur;
            let members: Vec<usize> = (0..15).filter(|i| cur >> i & 1 == 1).collect();
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    if let Some(k) = table[i][j] {
                        next |= 1 << k;
                    }
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    };

    let mut closures: Vec<u16> = (1u16..1 << 15).map(close_mask).collect();
    closures.sort_unstable();
    closures.dedup();

    let mut a_count = 0;
    let mut b_count = 0;
    let mut c_count = 0;
    let mut orbit_map: BTreeMap<Vec<PauliString>, OrbitRecord> = BTreeMap::new();

    for mask in closures {
        let basis: Vec<PauliString> = (0..15)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| strings[i])
            .collect();
        let record = canonicalize(&basis).expect("scan closures are closed");
        match record.class {
            SubalgebraClass::A => a_count += 1,
            SubalgebraClass::B => b_count += 1,
            SubalgebraClass::C => c_count += 1,
        }
        orbit_map
            .entry(record.canonical_basis.clone())
            .or_insert(record);
    }

    let mut orbits: Vec<OrbitRecord> = orbit_map.into_values().collect();
    orbits.sort_by_key(|r| r.matched_family);
    ScanInventory {
        a_count,
        b_count,
        c_count,
        orbits,
    }
}
