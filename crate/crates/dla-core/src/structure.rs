//! Structural probes of a closed DLA: stabilizer, center, centralizer
//! dimension, involution fixed points, frustration-graph recognition,
//! commuting-ideal decomposition, and isomorphism-expression checks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dla::DlaBasis;
use crate::gf2;
use crate::pauli::PauliString;

/// Cap on materializing group elements; beyond this only the GF(2) basis is
/// kept.
pub const ENUMERATION_CAP_LOG2: u32 = 16;

// GF(2) work uses compact 2n-column vectors: columns 0..n-1 hold x bits,
// columns n..2n-1 hold z bits.

fn symplectic_vector(p: &PauliString) -> u128 {
    (p.x_bits() as u128) | ((p.z_bits() as u128) << p.n())
}

fn symplectic_row(p: &PauliString) -> u128 {
    // A string commutes with p iff its (x, z) vector is orthogonal to
    // (p.z, p.x).
    (p.z_bits() as u128) | ((p.x_bits() as u128) << p.n())
}

fn vector_to_string(n: usize, v: u128) -> PauliString {
    let mask = if n == 64 {
        u64::MAX as u128
    } else {
        (1u128 << n) - 1
    };
    let x = (v & mask) as u64;
    let z = ((v >> n) & mask) as u64;
    PauliString::from_bits(n, x, z).expect("kernel vector within range")
}

/// The group of Pauli strings commuting with every element of a set,
/// represented by a GF(2) basis plus (when small) the full element list.
#[derive(Debug, Clone)]
pub struct StabilizerSet {
    n: usize,
    generator_basis: Vec<PauliString>,
    elements: Option<Vec<PauliString>>,
}

impl StabilizerSet {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Independent generators of the group (GF(2) basis of the kernel).
    pub fn generator_basis(&self) -> &[PauliString] {
        &self.generator_basis
    }

    /// log2 of the group order (identity included).
    pub fn order_log2(&self) -> u32 {
        self.generator_basis.len() as u32
    }

    /// Group order, identity included.
    pub fn order(&self) -> u128 {
        1u128 << self.order_log2()
    }

    /// All elements including the identity, if the group is small enough to
    /// have been materialized.
    pub fn elements(&self) -> Option<&[PauliString]> {
        self.elements.as_deref()
    }

    /// Elements of the center of the group: the GF(2) basis of the subspace
    /// of kernel vectors symplectically orthogonal to the whole kernel.
    pub fn center_basis(&self) -> Vec<PauliString> {
        let m = self.generator_basis.len();
        if m == 0 {
            return Vec::new();
        }
        // Solve within the span: coefficient vectors c with
        // sum_j c_j <k_j, k_i> = 0 for all i.
        let mut rows: Vec<u128> = Vec::with_capacity(m);
        for ki in &self.generator_basis {
            let mut row = 0u128;
            for (j, kj) in self.generator_basis.iter().enumerate() {
                if !ki.commutes(kj) {
                    row |= 1u128 << j;
                }
            }
            rows.push(row);
        }
        let coeffs = gf2::kernel_basis(&rows, m as u32);
        coeffs
            .iter()
            .map(|c| {
                let mut v = PauliString::identity(self.n).unwrap();
                for (j, kj) in self.generator_basis.iter().enumerate() {
                    if c >> j & 1 == 1 {
                        v = v.product(kj).string;
                    }
                }
                v
            })
            .collect()
    }

    /// All center elements including the identity.
    pub fn center_elements(&self) -> Vec<PauliString> {
        enumerate_group(self.n, &self.center_basis())
    }

    pub fn contains(&self, p: &PauliString) -> bool {
        // p is in the group iff adding it to the kernel basis does not
        // raise the rank.
        let mut rows: Vec<u128> = self.generator_basis.iter().map(symplectic_vector).collect();
        let before = gf2::rank(&rows);
        rows.push(symplectic_vector(p));
        gf2::rank(&rows) == before
    }
}

fn enumerate_group(n: usize, basis: &[PauliString]) -> Vec<PauliString> {
    let vectors: Vec<u128> = basis.iter().map(symplectic_vector).collect();
    let mut out: Vec<PauliString> = gf2::enumerate_span(&vectors)
        .iter()
        .map(|v| vector_to_string(n, *v))
        .collect();
    out.sort();
    out
}

/// The stabilizer of a set: every Pauli string commuting with every element.
/// Since commutation is bilinear over GF(2), it is the kernel of the
/// symplectic constraint matrix built from the generators.
pub fn stabilizer(generators: &[PauliString]) -> StabilizerSet {
    let n = generators
        .first()
        .map(|g| g.n())
        .expect("nonempty generator set");
    assert!(generators.iter().all(|g| g.n() == n), "mixed lengths");
    let rows: Vec<u128> = generators.iter().map(symplectic_row).collect();
    let kernel = gf2::kernel_basis(&rows, 2 * n as u32);
    let generator_basis: Vec<PauliString> =
        kernel.iter().map(|v| vector_to_string(n, *v)).collect();
    let elements = if generator_basis.len() as u32 <= ENUMERATION_CAP_LOG2 {
        Some(enumerate_group(n, &generator_basis))
    } else {
        None
    };
    StabilizerSet {
        n,
        generator_basis,
        elements,
    }
}

/// Basis strings of a closed DLA that commute with the whole basis. For a
/// Pauli-spanned algebra the center is spanned by exactly these strings.
pub fn center_strings(basis: &DlaBasis) -> Vec<PauliString> {
    // A maximal independent subset of the basis suffices as the constraint
    // set; its size is at most 2n.
    let mut rows: Vec<u128> = Vec::new();
    let mut witnesses: Vec<PauliString> = Vec::new();
    for b in basis.basis() {
        rows.push(symplectic_row(b));
        if gf2::rank(&rows) == witnesses.len() + 1 {
            witnesses.push(*b);
        } else {
            rows.pop();
        }
    }
    basis
        .basis()
        .iter()
        .filter(|p| witnesses.iter().all(|w| w.commutes(p)))
        .copied()
        .collect()
}

/// Dimension of the centralizer of the stabilizer inside su(2^n), after
/// factoring out the central elements of the stabilizer group:
/// `2^(2n - rank) - |Z(St)|`.
pub fn centralizer_dimension(stab: &StabilizerSet, center_basis_of_stab: &[PauliString]) -> u64 {
    let n = stab.n();
    assert!(n <= 31, "centralizer count overflows u64 beyond 31 sites");
    let rows: Vec<u128> = stab.generator_basis().iter().map(symplectic_row).collect();
    let rank = gf2::rank(&rows);
    let count = 1u64 << (2 * n - rank);
    let z_basis_len = center_basis_of_stab
        .iter()
        .filter(|p| !p.is_identity())
        .count();
    count - (1u64 << z_basis_len)
}

/// Every Pauli string commuting with the whole stabilizer group, identity
/// excluded: the Pauli support of the centralizer of `St` in su(2^n).
pub fn centralizer_strings(stab: &StabilizerSet) -> Vec<PauliString> {
    let n = stab.n();
    let rows: Vec<u128> = stab.generator_basis().iter().map(symplectic_row).collect();
    let kernel = gf2::kernel_basis(&rows, 2 * n as u32);
    assert!(
        kernel.len() as u32 <= ENUMERATION_CAP_LOG2 + 10,
        "centralizer too large to enumerate"
    );
    let mut out: Vec<PauliString> = gf2::enumerate_span(&kernel)
        .iter()
        .map(|v| vector_to_string(n, *v))
        .filter(|p| !p.is_identity())
        .collect();
    out.sort();
    out
}

/// The involution `g -> -Q g^T Q` of su(2^n) defined by a Pauli string `Q`.
/// Every Pauli string is mapped to plus or minus itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Involution {
    q: PauliString,
}

impl Involution {
    pub fn new(q: PauliString) -> Self {
        Involution { q }
    }

    pub fn q(&self) -> &PauliString {
        &self.q
    }

    /// Sign of the image: `theta(P) = sign * P`.
    ///
    /// `P^T = (-1)^{#Y} P` and `Q P Q = +/- P` by (anti)commutation, so the
    /// sign is `-transpose_sign(P) * commute_sign(Q, P)`.
    pub fn sign(&self, p: &PauliString) -> i8 {
        -p.transpose_sign() * self.q.commute_sign(p)
    }

    pub fn fixes(&self, p: &PauliString) -> bool {
        self.sign(p) == 1
    }
}

/// Number of strings in `space` fixed by the involution.
pub fn involution_fixed_dimension(space: &[PauliString], inv: &Involution) -> usize {
    space.iter().filter(|p| inv.fixes(p)).count()
}

/// Anticommutation graph on a set of Pauli strings.
#[derive(Debug, Clone)]
pub struct FrustrationGraph {
    pub vertices: Vec<PauliString>,
    /// Adjacency lists, indices into `vertices`.
    pub adjacency: Vec<Vec<usize>>,
}

impl FrustrationGraph {
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }
}

/// Build the frustration graph: vertices are the generators, edges connect
/// anticommuting pairs.
pub fn frustration_graph(generators: &[PauliString]) -> FrustrationGraph {
    let m = generators.len();
    let mut adjacency = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            if !generators[i].commutes(&generators[j]) {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    FrustrationGraph {
        vertices: generators.to_vec(),
        adjacency,
    }
}

/// One term of a formal direct sum of classical compact Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IsoTerm {
    U1,
    Su(u64),
    So(u64),
    Sp(u64),
}

impl IsoTerm {
    pub fn dimension(&self) -> u64 {
        match *self {
            IsoTerm::U1 => 1,
            IsoTerm::Su(n) => n * n - 1,
            IsoTerm::So(n) => n * (n - 1) / 2,
            IsoTerm::Sp(n) => n * (2 * n + 1),
        }
    }
}

impl fmt::Display for IsoTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoTerm::U1 => write!(f, "u(1)"),
            IsoTerm::Su(n) => write!(f, "su({n})"),
            IsoTerm::So(n) => write!(f, "so({n})"),
            IsoTerm::Sp(n) => write!(f, "sp({n})"),
        }
    }
}

/// A formal direct sum of u(1), su(N), so(N), sp(N) terms. Serialized as
/// its text form, e.g. `"u(1) + su(2)^2"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoExpression {
    terms: Vec<IsoTerm>,
}

impl Serialize for IsoExpression {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IsoExpression {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for IsoExpression {
    type Err = String;

    /// Parse expressions in the display form: terms joined by `+`, each
    /// `u(1)`, `su(N)`, `so(N)` or `sp(N)`, optionally with `^count`.
    fn from_str(s: &str) -> Result<Self, String> {
        let mut terms = Vec::new();
        for raw in s.split('+') {
            let part = raw.trim();
            if part.is_empty() || part == "0" {
                continue;
            }
            let (head, count) = match part.split_once('^') {
                Some((h, c)) => (
                    h.trim(),
                    c.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("bad multiplicity in {part:?}"))?,
                ),
                None => (part, 1),
            };
            let (kind, arg) = head
                .strip_suffix(')')
                .and_then(|h| h.split_once('('))
                .ok_or_else(|| format!("bad term {head:?}"))?;
            let term = match kind.trim() {
                "u" if arg.trim() == "1" => IsoTerm::U1,
                "su" => IsoTerm::Su(
                    arg.trim()
                        .parse()
                        .map_err(|_| format!("bad size {arg:?}"))?,
                ),
                "so" => IsoTerm::So(
                    arg.trim()
                        .parse()
                        .map_err(|_| format!("bad size {arg:?}"))?,
                ),
                "sp" => IsoTerm::Sp(
                    arg.trim()
                        .parse()
                        .map_err(|_| format!("bad size {arg:?}"))?,
                ),
                other => return Err(format!("unknown term kind {other:?}")),
            };
            for _ in 0..count {
                terms.push(term);
            }
        }
        Ok(IsoExpression::new(terms))
    }
}

impl IsoExpression {
    pub fn new(mut terms: Vec<IsoTerm>) -> Self {
        terms.sort();
        IsoExpression { terms }
    }

    pub fn single(term: IsoTerm) -> Self {
        Self::new(vec![term])
    }

    /// `term^(+count)` direct sum.
    pub fn power(term: IsoTerm, count: usize) -> Self {
        Self::new(vec![term; count])
    }

    pub fn terms(&self) -> &[IsoTerm] {
        &self.terms
    }

    pub fn dimension(&self) -> u64 {
        self.terms.iter().map(|t| t.dimension()).sum()
    }

    pub fn u1_count(&self) -> usize {
        self.terms.iter().filter(|t| **t == IsoTerm::U1).count()
    }

    /// Concatenate two sums.
    pub fn plus(&self, other: &IsoExpression) -> IsoExpression {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        IsoExpression::new(terms)
    }
}

impl fmt::Display for IsoExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // group equal terms as t^k
        let mut i = 0;
        let mut first = true;
        while i < self.terms.len() {
            let t = self.terms[i];
            let mut k = 1;
            while i + k < self.terms.len() && self.terms[i + k] == t {
                k += 1;
            }
            if !first {
                write!(f, " + ")?;
            }
            if k == 1 {
                write!(f, "{t}")?;
            } else {
                write!(f, "{t}^{k}")?;
            }
            first = false;
            i += k;
        }
        Ok(())
    }
}

/// Recognize a frustration graph whose components are all simple paths or
/// simple cycles, and return the direct sum it generates.
///
/// A path with `m` vertices gives so(m+1). A cycle with `m` vertices gives
/// so(m) + so(m), except when the ordered product of the generators around
/// the cycle is the identity string: then the two copies coincide and the
/// component gives a single so(m).
pub fn recognize_path_or_cycle(graph: &FrustrationGraph) -> Option<IsoExpression> {
    let mut terms: Vec<IsoTerm> = Vec::new();
    for comp in graph.components() {
        let m = comp.len();
        let degrees: Vec<usize> = comp.iter().map(|&v| graph.degree(v)).collect();
        if degrees.iter().any(|&d| d > 2) {
            return None;
        }
        let ends = degrees.iter().filter(|&&d| d < 2).count();
        let edge_count: usize = degrees.iter().sum::<usize>() / 2;
        if ends == 0 {
            // candidate cycle: connected, all degree 2, m edges
            if m < 3 || edge_count != m {
                return None;
            }
            let cycle = walk_path_or_cycle(graph, comp[0], m);
            let around = ordered_product(&graph.vertices, &cycle);
            if around.is_identity() {
                terms.push(IsoTerm::So(m as u64));
            } else {
                terms.push(IsoTerm::So(m as u64));
                terms.push(IsoTerm::So(m as u64));
            }
        } else {
            // candidate path: exactly two endpoints (or a single vertex)
            if m > 1 && ends != 2 {
                return None;
            }
            if edge_count != m - 1 {
                return None;
            }
            terms.push(IsoTerm::So(m as u64 + 1));
        }
    }
    Some(IsoExpression::new(terms))
}

fn walk_path_or_cycle(graph: &FrustrationGraph, start: usize, len: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < len {
        let next = graph.adjacency[cur]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("degree-2 walk");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn ordered_product(vertices: &[PauliString], order: &[usize]) -> PauliString {
    let mut acc = PauliString::identity(vertices[order[0]].n()).unwrap();
    for &v in order {
        acc = acc.product(&vertices[v]).string;
    }
    acc
}

/// Partition the basis of a closed DLA into the connected components of its
/// anticommutation graph. Each part spans an ideal and distinct parts
/// commute elementwise.
pub fn ideal_components(basis: &DlaBasis) -> Vec<Vec<PauliString>> {
    let strings = basis.basis();
    let mut unassigned: Vec<PauliString> = strings.to_vec();
    let mut components: Vec<Vec<PauliString>> = Vec::new();
    while let Some(seed) = unassigned.pop() {
        let mut comp = vec![seed];
        let mut frontier = vec![seed];
        while let Some(f) = frontier.pop() {
            let mut still = Vec::with_capacity(unassigned.len());
            for p in unassigned.drain(..) {
                if !f.commutes(&p) {
                    comp.push(p);
                    frontier.push(p);
                } else {
                    still.push(p);
                }
            }
            unassigned = still;
        }
        comp.sort();
        components.push(comp);
    }
    components.sort();
    components
}

/// Outcome of the necessary-condition checks of an isomorphism claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoReport {
    pub dim_ok: bool,
    pub center_ok: bool,
    pub component_consistent: bool,
}

impl IsoReport {
    pub fn all_ok(&self) -> bool {
        self.dim_ok && self.center_ok && self.component_consistent
    }
}

/// Check an isomorphism claim against computed invariants. These are
/// necessary conditions only: dimension equality, u(1) count equal to the
/// center dimension, and consistency of the ideal-component sizes with the
/// summand dimensions (a component may merge several summands, but a
/// summand never splits across components).
pub fn verify_iso_parts(
    dimension: u64,
    center_count: usize,
    component_sizes: &[usize],
    claim: &IsoExpression,
) -> IsoReport {
    let dim_ok = claim.dimension() == dimension;
    let center_ok = claim.u1_count() == center_count;
    let component_consistent = partition_consistent(component_sizes, claim);
    IsoReport {
        dim_ok,
        center_ok,
        component_consistent,
    }
}

/// Full check against a closed basis.
pub fn verify_iso(basis: &DlaBasis, claim: &IsoExpression) -> IsoReport {
    let center = center_strings(basis);
    let sizes: Vec<usize> = ideal_components(basis).iter().map(|c| c.len()).collect();
    verify_iso_parts(basis.dimension() as u64, center.len(), &sizes, claim)
}

/// Can the multiset of summand dimensions be split so that each component
/// size is an exact sum of the summands assigned to it?
fn partition_consistent(component_sizes: &[usize], claim: &IsoExpression) -> bool {
    let dims: Vec<u64> = claim.terms().iter().map(|t| t.dimension()).collect();
    let total: u64 = dims.iter().sum();
    let size_total: u64 = component_sizes.iter().map(|&s| s as u64).sum();
    if total != size_total {
        return false;
    }
    let mut sizes: Vec<u64> = component_sizes.iter().map(|&s| s as u64).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let mut dims = dims;
    dims.sort_unstable_by(|a, b| b.cmp(a));
    fill(&mut sizes, &mut dims)
}

/// Exhaustive search: fill each component with an exact-sum subset of the
/// remaining summand dimensions, backtracking across components.
fn fill(sizes: &mut Vec<u64>, dims: &mut Vec<u64>) -> bool {
    let Some(target) = sizes.pop() else {
        return dims.is_empty();
    };
    // dims stays sorted descending throughout
    fn choose(target: u64, from: usize, dims: &mut Vec<u64>, sizes: &mut Vec<u64>) -> bool {
        if target == 0 {
            return fill(sizes, dims);
        }
        let mut i = from;
        while i < dims.len() {
            // identical dims at the same depth explore identical branches
            if i > from && dims[i] == dims[i - 1] {
                i += 1;
                continue;
            }
            if dims[i] <= target {
                let d = dims.remove(i);
                if choose(target - d, i, dims, sizes) {
                    dims.insert(i, d);
                    return true;
                }
                dims.insert(i, d);
            }
            i += 1;
        }
        false
    }
    let ok = choose(target, 0, dims, sizes);
    sizes.push(target);
    ok
}
