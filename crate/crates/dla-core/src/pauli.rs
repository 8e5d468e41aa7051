//! Pauli strings in bit-packed symplectic form.
//!
//! A length-`n` Pauli string is stored as two bit vectors:
//!
//! - `x`: bit `j` set iff the letter at site `j` is `X` or `Y`
//! - `z`: bit `j` set iff the letter at site `j` is `Y` or `Z`
//!
//! Site 0 is the least significant bit and the *leftmost* character in text
//! form, matching the convention `X1 Y2 = "XY"`. Commutation reduces to the
//! parity of a symplectic inner product, so all hot operations are
//! word-parallel XOR/AND/popcount.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Maximum number of sites supported by the packed representation.
pub const MAX_SITES: usize = 64;

/// Errors from parsing or constructing Pauli strings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PauliError {
    #[error("empty Pauli string")]
    Empty,
    #[error("invalid character {0:?}, expected one of I, X, Y, Z")]
    BadCharacter(char),
    #[error("{0} sites exceeds the supported maximum of {MAX_SITES}")]
    TooLong(usize),
    #[error("embedding at offset {offset} of a {len}-site string exceeds {total} sites")]
    EmbedOutOfRange {
        offset: usize,
        len: usize,
        total: usize,
    },
}

/// A single-site Pauli letter.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    /// Decode from the symplectic bit pair.
    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Result<Self, PauliError> {
        match c {
            'I' => Ok(Letter::I),
            'X' => Ok(Letter::X),
            'Y' => Ok(Letter::Y),
            'Z' => Ok(Letter::Z),
            other => Err(PauliError::BadCharacter(other)),
        }
    }
}

/// Phase factor as a power of `i`, exponent mod 4.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[repr(u8)]
pub enum Phase {
    PlusOne = 0,
    PlusI = 1,
    MinusOne = 2,
    MinusI = 3,
}

impl Phase {
    pub fn from_exponent(e: u32) -> Self {
        match e & 3 {
            0 => Phase::PlusOne,
            1 => Phase::PlusI,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    pub fn exponent(self) -> u32 {
        self as u32
    }

    pub fn times(self, other: Phase) -> Phase {
        Phase::from_exponent(self.exponent() + other.exponent())
    }

    pub fn negate(self) -> Phase {
        Phase::from_exponent(self.exponent() + 2)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phase::PlusOne => write!(f, "+1"),
            Phase::PlusI => write!(f, "+i"),
            Phase::MinusOne => write!(f, "-1"),
            Phase::MinusI => write!(f, "-i"),
        }
    }
}

/// A phase-free Pauli string on `n` sites.
///
/// Ordering is lexicographic on `(n, x, z)` taken as integers; this is the
/// canonical order used for deduplication and deterministic output.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    n: u8,
    x: u64,
    z: u64,
}

/// A Pauli string together with a phase, the result of a matrix product.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPauli {
    pub string: PauliString,
    pub phase: Phase,
}

impl SignedPauli {
    /// Matrix product of two signed Paulis, phases included.
    pub fn times(&self, other: &SignedPauli) -> SignedPauli {
        let p = self.string.product(&other.string);
        SignedPauli {
            string: p.string,
            phase: p.phase.times(self.phase).times(other.phase),
        }
    }
}

impl PauliString {
    fn mask(n: usize) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    /// Construct from raw bit vectors. Bits above site `n-1` must be clear.
    pub fn from_bits(n: usize, x: u64, z: u64) -> Result<Self, PauliError> {
        if n == 0 {
            return Err(PauliError::Empty);
        }
        if n > MAX_SITES {
            return Err(PauliError::TooLong(n));
        }
        let m = Self::mask(n);
        debug_assert_eq!(x & !m, 0);
        debug_assert_eq!(z & !m, 0);
        Ok(PauliString {
            n: n as u8,
            x: x & m,
            z: z & m,
        })
    }

    /// The identity string on `n` sites.
    pub fn identity(n: usize) -> Result<Self, PauliError> {
        Self::from_bits(n, 0, 0)
    }

    /// Single letter `a` at site `site` (0-based) of an `n`-site string.
    pub fn single(n: usize, site: usize, a: Letter) -> Result<Self, PauliError> {
        assert!(site < n, "site {site} out of range for {n} sites");
        let (xb, zb) = a.bits();
        Self::from_bits(n, (xb as u64) << site, (zb as u64) << site)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    /// Packed 128-bit key, x in the low word, z in the high word.
    pub fn key(&self) -> u128 {
        (self.x as u128) | ((self.z as u128) << 64)
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Number of non-identity sites.
    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    /// Number of sites carrying `Y`.
    pub fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    pub fn letter(&self, site: usize) -> Letter {
        assert!(site < self.n(), "site {site} out of range");
        Letter::from_bits((self.x >> site) & 1 == 1, (self.z >> site) & 1 == 1)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.n()).map(move |j| self.letter(j))
    }

    /// Build from per-site letters.
    pub fn from_letters(letters: &[Letter]) -> Result<Self, PauliError> {
        if letters.is_empty() {
            return Err(PauliError::Empty);
        }
        if letters.len() > MAX_SITES {
            return Err(PauliError::TooLong(letters.len()));
        }
        let mut x = 0u64;
        let mut z = 0u64;
        for (j, l) in letters.iter().enumerate() {
            let (xb, zb) = l.bits();
            x |= (xb as u64) << j;
            z |= (zb as u64) << j;
        }
        Self::from_bits(letters.len(), x, z)
    }

    /// True iff `self` and `other` commute.
    ///
    /// Two Pauli strings either commute or anticommute; they commute exactly
    /// when the number of sites where the letters differ and neither is `I`
    /// is even, i.e. when the symplectic form `<a.x,b.z> + <a.z,b.x>` is 0.
    pub fn commutes(&self, other: &PauliString) -> bool {
        assert_eq!(self.n, other.n, "site-count mismatch");
        ((self.x & other.z) ^ (self.z & other.x)).count_ones() & 1 == 0
    }

    /// Sign picked up when conjugating `other` by `self`: +1 if they
    /// commute, -1 otherwise.
    pub fn commute_sign(&self, other: &PauliString) -> i8 {
        if self.commutes(other) {
            1
        } else {
            -1
        }
    }

    /// Matrix product `self . other` with exact phase bookkeeping.
    pub fn product(&self, other: &PauliString) -> SignedPauli {
        assert_eq!(self.n, other.n, "site-count mismatch");
        let x = self.x ^ other.x;
        let z = self.z ^ other.z;
        // Writing each letter as i^{xz} X^x Z^z, the per-site phases sum to
        // x1*z1 + x2*z2 + 2*z1*x2 - x3*z3 (mod 4).
        let e = (self.x & self.z).count_ones()
            + (other.x & other.z).count_ones()
            + 2 * (self.z & other.x).count_ones()
            + 3 * (x & z).count_ones();
        SignedPauli {
            string: PauliString { n: self.n, x, z },
            phase: Phase::from_exponent(e),
        }
    }

    /// The Pauli string spanned by `[self, other]`, or `None` if they
    /// commute. For anticommuting strings the commutator is `2 self.other`,
    /// so only the product string matters for span computations.
    pub fn commutator_string(&self, other: &PauliString) -> Option<PauliString> {
        if self.commutes(other) {
            None
        } else {
            Some(self.product(other).string)
        }
    }

    /// Sign of the transpose: `a^T = transpose_sign(a) * a`, which is
    /// `(-1)^{#Y}`.
    pub fn transpose_sign(&self) -> i8 {
        if self.y_count() & 1 == 0 {
            1
        } else {
            -1
        }
    }

    /// Pad with identities: `self` occupies sites `offset..offset+n` of an
    /// `n_total`-site string.
    pub fn embed(&self, offset: usize, n_total: usize) -> Result<PauliString, PauliError> {
        if n_total > MAX_SITES {
            return Err(PauliError::TooLong(n_total));
        }
        if offset + self.n() > n_total {
            return Err(PauliError::EmbedOutOfRange {
                offset,
                len: self.n(),
                total: n_total,
            });
        }
        PauliString::from_bits(n_total, self.x << offset, self.z << offset)
    }

    /// Rotate letters left by `k` positions (site `k` moves to site 0).
    /// Negative `k` rotates right.
    pub fn cyclic_shift(&self, k: i64) -> PauliString {
        let n = self.n() as i64;
        let k = k.rem_euclid(n) as u32;
        if k == 0 {
            return *self;
        }
        let n = self.n();
        let m = Self::mask(n);
        let rot = |v: u64| ((v >> k) | (v << (n as u32 - k))) & m;
        PauliString {
            n: self.n,
            x: rot(self.x),
            z: rot(self.z),
        }
    }

    /// Drop the letter at `site`, shortening the string by one.
    pub fn delete_site(&self, site: usize) -> Result<PauliString, PauliError> {
        assert!(site < self.n(), "site {site} out of range");
        let low = Self::mask(site);
        let squeeze = |v: u64| (v & low) | ((v >> 1) & !low);
        PauliString::from_bits(self.n() - 1, squeeze(self.x), squeeze(self.z))
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for PauliString {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, PauliError> {
        if s.is_empty() {
            return Err(PauliError::Empty);
        }
        if s.len() > MAX_SITES {
            return Err(PauliError::TooLong(s.len()));
        }
        let mut x = 0u64;
        let mut z = 0u64;
        for (j, c) in s.chars().enumerate() {
            let (xb, zb) = Letter::from_char(c)?.bits();
            x |= (xb as u64) << j;
            z |= (zb as u64) << j;
        }
        PauliString::from_bits(s.len(), x, z)
    }
}

impl Serialize for PauliString {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Parse a comma-separated list such as `"XY,YZ"` into a deduplicated,
/// canonically sorted set.
pub fn parse_set(text: &str) -> Result<Vec<PauliString>, PauliError> {
    let mut out: Vec<PauliString> = Vec::new();
    for part in text.split(',') {
        let p: PauliString = part.trim().parse()?;
        out.push(p);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A permutation of the letters `{X, Y, Z}` (identity on `I`), one of the
/// six relabelings that preserve the commutation structure.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct LetterPerm {
    /// Images of X, Y, Z in that order.
    images: [Letter; 3],
}

impl LetterPerm {
    pub fn new(x_to: Letter, y_to: Letter, z_to: Letter) -> Self {
        assert!(
            x_to != y_to && y_to != z_to && x_to != z_to,
            "images must be distinct"
        );
        assert!(
            x_to != Letter::I && y_to != Letter::I && z_to != Letter::I,
            "I is fixed"
        );
        LetterPerm {
            images: [x_to, y_to, z_to],
        }
    }

    pub fn identity() -> Self {
        Self::new(Letter::X, Letter::Y, Letter::Z)
    }

    pub fn apply_letter(&self, l: Letter) -> Letter {
        match l {
            Letter::I => Letter::I,
            Letter::X => self.images[0],
            Letter::Y => self.images[1],
            Letter::Z => self.images[2],
        }
    }

    /// Composition: `(self.then(next))(l) = next(self(l))`.
    pub fn then(&self, next: &LetterPerm) -> LetterPerm {
        LetterPerm {
            images: [
                next.apply_letter(self.images[0]),
                next.apply_letter(self.images[1]),
                next.apply_letter(self.images[2]),
            ],
        }
    }

    /// All six letter permutations, identity first.
    pub fn all() -> [LetterPerm; 6] {
        use Letter::{X, Y, Z};
        [
            LetterPerm::new(X, Y, Z),
            LetterPerm::new(X, Z, Y),
            LetterPerm::new(Y, X, Z),
            LetterPerm::new(Y, Z, X),
            LetterPerm::new(Z, X, Y),
            LetterPerm::new(Z, Y, X),
        ]
    }

    /// Apply the same relabeling at every site, sign discarded.
    pub fn apply(&self, p: &PauliString) -> PauliString {
        let mut letters: Vec<Letter> = Vec::with_capacity(p.n());
        for l in p.letters() {
            letters.push(self.apply_letter(l));
        }
        PauliString::from_letters(&letters).expect("same length")
    }
}

/// A sitewise letter relabeling: each site gets its own permutation of
/// `{X, Y, Z}`. Signs are discarded, which is all span computations need.
#[derive(Clone, Debug)]
pub struct SiteLetterMap {
    perms: Vec<LetterPerm>,
}

impl SiteLetterMap {
    pub fn new(perms: Vec<LetterPerm>) -> Self {
        assert!(!perms.is_empty());
        SiteLetterMap { perms }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(vec![LetterPerm::identity(); n])
    }

    pub fn uniform(perm: LetterPerm, n: usize) -> Self {
        Self::new(vec![perm; n])
    }

    /// Swap `X <-> Y` on every even site (sites 2, 4, ... in 1-based
    /// counting). Maps the `XY, YX` chain onto the `XX, YY` chain.
    pub fn even_site_swap_xy(n: usize) -> Self {
        use Letter::{X, Y, Z};
        let swap = LetterPerm::new(Y, X, Z);
        Self::by_site_index(n, |j| {
            if j % 2 == 1 {
                swap
            } else {
                LetterPerm::identity()
            }
        })
    }

    /// Swap `Y <-> Z` on every even site. Maps the `XX, YZ, ZY` chain onto
    /// the Heisenberg chain `XX, YY, ZZ`.
    pub fn even_site_swap_yz(n: usize) -> Self {
        use Letter::{X, Y, Z};
        let swap = LetterPerm::new(X, Z, Y);
        Self::by_site_index(n, |j| {
            if j % 2 == 1 {
                swap
            } else {
                LetterPerm::identity()
            }
        })
    }

    /// Apply the cycle `X -> Z -> Y -> X` at site `j` (1-based) `j` times.
    /// Maps the `XY, YZ, ZX` chain onto the Heisenberg chain.
    pub fn staircase_cycle_xzy(n: usize) -> Self {
        use Letter::{X, Y, Z};
        let cycle = LetterPerm::new(Z, X, Y);
        let mut powers = [LetterPerm::identity(); 3];
        powers[1] = cycle;
        powers[2] = cycle.then(&cycle);
        Self::by_site_index(n, |j| powers[(j + 1) % 3])
    }

    fn by_site_index(n: usize, f: impl Fn(usize) -> LetterPerm) -> Self {
        Self::new((0..n).map(f).collect())
    }

    pub fn n(&self) -> usize {
        self.perms.len()
    }

    pub fn apply(&self, p: &PauliString) -> PauliString {
        assert_eq!(p.n(), self.perms.len(), "site-count mismatch");
        let letters: Vec<Letter> = p
            .letters()
            .enumerate()
            .map(|(j, l)| self.perms[j].apply_letter(l))
            .collect();
        PauliString::from_letters(&letters).expect("same length")
    }

    /// Image of a whole set, re-sorted canonically.
    pub fn apply_set(&self, set: &[PauliString]) -> Vec<PauliString> {
        let mut out: Vec<PauliString> = set.iter().map(|p| self.apply(p)).collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Repeat the letter pattern `pattern` across `n` sites, truncating the
/// last period: `pattern_string("ZIYX", 6) = "ZIYXZI"`.
pub fn pattern_string(pattern: &str, n: usize) -> Result<PauliString, PauliError> {
    if pattern.is_empty() {
        return Err(PauliError::Empty);
    }
    let letters: Result<Vec<Letter>, _> = pattern.chars().map(Letter::from_char).collect();
    let letters = letters?;
    let full: Vec<Letter> = (0..n).map(|j| letters[j % letters.len()]).collect();
    PauliString::from_letters(&full)
}
