//! Property suite: randomized invariants of the Pauli algebra and the
//! closure engine, plus the stated set equalities and letter-map
//! bijections between chain algebras.

mod common;

use common::{closed_basis, fam};
use proptest::prelude::*;

use dla_core::catalog::{catalog_generators, extend, FamilyId, Topology};
use dla_core::dla::close;
use dla_core::orbits::{canonicalize, two_site_strings, PairInvariants};
use dla_core::pauli::{PauliString, SiteLetterMap};
use dla_core::structure::{center_strings, ideal_components, stabilizer};

fn arb_pauli(n: usize) -> impl Strategy<Value = PauliString> {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..=mask, 0..=mask).prop_map(move |(x, z)| PauliString::from_bits(n, x, z).unwrap())
}

fn arb_nonidentity(n: usize) -> impl Strategy<Value = PauliString> {
    arb_pauli(n).prop_filter("nonidentity", |p| !p.is_identity())
}

fn arb_generator_set(n: usize, max_len: usize) -> impl Strategy<Value = Vec<PauliString>> {
    proptest::collection::vec(arb_nonidentity(n), 1..=max_len).prop_map(|mut v| {
        v.sort();
        v.dedup();
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Two strings either commute or their bracket spans a string, never both.
    #[test]
    fn bracket_exists_iff_anticommuting(a in arb_pauli(4), b in arb_pauli(4)) {
        prop_assert_eq!(a.commutes(&b), a.commutator_string(&b).is_none());
    }

    /// Double bracket returns the argument: [a, [a, b]] spans b.
    #[test]
    fn double_bracket_restores(a in arb_pauli(5), b in arb_pauli(5)) {
        if let Some(c) = a.commutator_string(&b) {
            prop_assert_eq!(a.commutator_string(&c), Some(b));
        }
    }

    /// The product string is symmetric even though the phase is not, and
    /// products are associative with exact phases.
    #[test]
    fn product_string_symmetric_and_associative(
        a in arb_pauli(4),
        b in arb_pauli(4),
        c in arb_pauli(4),
    ) {
        prop_assert_eq!(a.product(&b).string, b.product(&a).string);
        let left = a.product(&b).times(&dla_core::SignedPauli {
            string: c,
            phase: dla_core::Phase::PlusOne,
        });
        let right = dla_core::SignedPauli {
            string: a,
            phase: dla_core::Phase::PlusOne,
        }
        .times(&b.product(&c));
        prop_assert_eq!(left, right);
    }

    /// Transpose of a product: (ab)^T = b^T a^T in the sign model.
    #[test]
    fn transpose_of_product(a in arb_pauli(4), b in arb_pauli(4)) {
        let lhs = a.product(&b).string.transpose_sign();
        let sigma = if a.commutes(&b) { 1 } else { -1 };
        prop_assert_eq!(lhs, a.transpose_sign() * b.transpose_sign() * sigma);
    }

    /// Round-trip through text.
    #[test]
    fn parse_print_round_trip(p in arb_pauli(7)) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<PauliString>().unwrap(), p);
    }

    /// Every string squares to the identity with trivial phase.
    #[test]
    fn strings_square_to_identity(p in arb_pauli(6)) {
        let sq = p.product(&p);
        prop_assert!(sq.string.is_identity());
        prop_assert_eq!(sq.phase, dla_core::Phase::PlusOne);
    }

    /// Cyclic shifts compose and a full turn is the identity.
    #[test]
    fn cyclic_shift_full_turn(p in arb_pauli(6), k in 0i64..6) {
        prop_assert_eq!(p.cyclic_shift(6), p);
        prop_assert_eq!(p.cyclic_shift(k).cyclic_shift(6 - k), p);
    }

    /// Closure is idempotent and independent of generator order.
    #[test]
    fn closure_idempotent_and_order_free(gens in arb_generator_set(3, 6), seed in 0u64..1000) {
        let once = close(&gens).unwrap();
        let twice = close(once.basis()).unwrap();
        prop_assert_eq!(once.basis(), twice.basis());

        let mut shuffled = gens.clone();
        // cheap deterministic shuffle
        let len = shuffled.len();
        for i in 0..len {
            let j = (seed as usize + 7 * i) % len;
            shuffled.swap(i, j);
        }
        shuffled.reverse();
        let reordered = close(&shuffled).unwrap();
        prop_assert_eq!(reordered.basis(), once.basis());
        prop_assert!(once.verify_closed());
    }

    /// Monotonicity: a subset of generators closes into a subset.
    #[test]
    fn closure_monotone(gens in arb_generator_set(3, 6), keep in proptest::collection::vec(any::<bool>(), 6)) {
        let sub: Vec<PauliString> = gens
            .iter()
            .zip(keep.iter().chain(std::iter::repeat(&true)))
            .filter(|(_, k)| **k)
            .map(|(g, _)| *g)
            .collect();
        prop_assume!(!sub.is_empty());
        let small = close(&sub).unwrap();
        let large = close(&gens).unwrap();
        prop_assert!(small.basis().iter().all(|p| large.is_member(p)));
    }

    /// Sitewise letter maps are bijections of the string set and preserve
    /// commutation.
    #[test]
    fn letter_maps_preserve_commutation(a in arb_pauli(5), b in arb_pauli(5), which in 0..3usize) {
        let map = match which {
            0 => SiteLetterMap::even_site_swap_xy(5),
            1 => SiteLetterMap::even_site_swap_yz(5),
            _ => SiteLetterMap::staircase_cycle_xzy(5),
        };
        prop_assert_eq!(map.apply(&a).commutes(&map.apply(&b)), a.commutes(&b));
        // injectivity on a pair is enough to exercise bijection here
        if a != b {
            prop_assert_ne!(map.apply(&a), map.apply(&b));
        }
    }

    /// Every element of the stabilizer group commutes with the whole
    /// closure, and the stabilizer of the generators is the stabilizer of
    /// the closed basis.
    #[test]
    fn stabilizer_of_generators_is_stabilizer_of_closure(gens in arb_generator_set(3, 5)) {
        let closed = close(&gens).unwrap();
        let st_gens = stabilizer(&gens);
        let st_closed = stabilizer(closed.basis());
        prop_assert_eq!(st_gens.elements(), st_closed.elements());
        for s in st_gens.elements().unwrap() {
            prop_assert!(closed.basis().iter().all(|b| s.commutes(b)));
        }
    }

    /// Ideal components pairwise commute elementwise and each part is
    /// commutator-closed.
    #[test]
    fn ideal_components_commute_and_close(gens in arb_generator_set(3, 5)) {
        let closed = close(&gens).unwrap();
        let parts = ideal_components(&closed);
        let total: usize = parts.iter().map(|p| p.len()).sum();
        prop_assert_eq!(total, closed.dimension());
        for (i, part) in parts.iter().enumerate() {
            let sub = close(part).unwrap();
            prop_assert_eq!(sub.basis(), part.as_slice());
            for other in parts.iter().skip(i + 1) {
                for a in part {
                    for b in other {
                        prop_assert!(a.commutes(b));
                    }
                }
            }
        }
    }

    /// Center strings commute with the whole basis.
    #[test]
    fn center_commutes_with_everything(gens in arb_generator_set(3, 5)) {
        let closed = close(&gens).unwrap();
        for c in center_strings(&closed) {
            prop_assert!(closed.basis().iter().all(|b| c.commutes(b)));
        }
    }
}

/// The (s, p, e, d) counts are constant on every orbit of every two-site
/// subalgebra, and the orbit bookkeeping multiplies out to the group order.
#[test]
fn invariants_constant_on_orbits() {
    let strings = two_site_strings();
    // sample subsets; full coverage lives in the acceptance scan
    for mask in (1u16..1 << 15).step_by(37) {
        let gens: Vec<PauliString> = (0..15)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| strings[i])
            .collect();
        let closed = close(&gens).unwrap();
        let record = canonicalize(closed.basis()).unwrap();
        assert_eq!(record.orbit_size * record.stabilizer_order, 12);
        assert!(record.invariants.singles >= 2 * record.invariants.single_pairs);
        for g in dla_core::orbits::group_elements() {
            let image = g.apply_set(closed.basis());
            assert_eq!(
                PairInvariants::of(&image),
                record.invariants,
                "invariants differ across the orbit of {mask:#x}"
            );
        }
    }
}

/// Stated set equalities between chain algebras.
#[test]
fn chain_set_equalities() {
    for n in 3..=6 {
        // the two XY-in-field chains close to identical string sets
        let a13 = closed_basis(fam("a13"), Topology::Open, n);
        let a20 = closed_basis(fam("a20"), Topology::Open, n);
        assert_eq!(a13.basis(), a20.basis(), "a13({n}) = a20({n})");

        // periodic massless-free-fermion-with-Coulomb chain collapses onto
        // open algebras depending on parity
        let a6_per = closed_basis(fam("a6"), Topology::Periodic, n);
        if n % 2 == 1 {
            assert_eq!(
                a6_per.basis(),
                a13.basis(),
                "a6 periodic = a13 at odd n={n}"
            );
        } else {
            let a6_open = closed_basis(fam("a6"), Topology::Open, n);
            assert_eq!(
                a6_per.basis(),
                a6_open.basis(),
                "a6 periodic = open at even n={n}"
            );
        }

        // central extensions: the b chains add the single X1 to a chains
        for (b, a) in [("b2", "a9"), ("b4", "a15")] {
            let b_basis = closed_basis(fam(b), Topology::Open, n);
            let a_basis = closed_basis(fam(a), Topology::Open, n);
            let x1: PauliString = format!("X{}", "I".repeat(n - 1)).parse().unwrap();
            let mut expected: Vec<PauliString> = a_basis.basis().to_vec();
            expected.push(x1);
            expected.sort();
            assert_eq!(b_basis.basis(), expected, "{b}({n}) = {a}({n}) + X1");
        }
    }
}

/// The sitewise letter maps carry whole chain bases onto each other.
#[test]
fn letter_map_basis_bijections() {
    for n in 3..=6 {
        let psi = SiteLetterMap::even_site_swap_xy(n);
        let a2 = closed_basis(fam("a2"), Topology::Open, n);
        let a4 = closed_basis(fam("a4"), Topology::Open, n);
        assert_eq!(psi.apply_set(a2.basis()), a4.basis(), "a2({n}) -> a4({n})");

        let phi = SiteLetterMap::even_site_swap_yz(n);
        let a6 = closed_basis(fam("a6"), Topology::Open, n);
        let a7 = closed_basis(fam("a7"), Topology::Open, n);
        assert_eq!(phi.apply_set(a6.basis()), a7.basis(), "a6({n}) -> a7({n})");

        let gamma = SiteLetterMap::staircase_cycle_xzy(n);
        let a10 = closed_basis(fam("a10"), Topology::Open, n);
        assert_eq!(
            gamma.apply_set(a10.basis()),
            a7.basis(),
            "a10({n}) -> a7({n})"
        );
    }
}

/// Chain extension is generator-set independent: extending any generating
/// set of the same two-site algebra closes to the same chain algebra.
#[test]
fn extension_depends_only_on_the_algebra() {
    for family in FamilyId::chain_families() {
        let two_site = closed_basis(family, Topology::Open, 2);
        for topology in [Topology::Open, Topology::Periodic] {
            let from_minimal = closed_basis(family, topology, 4);
            let gens = extend(two_site.basis(), 4, topology).unwrap();
            let from_basis = close(&gens).unwrap();
            assert_eq!(
                from_minimal.basis(),
                from_basis.basis(),
                "{family} {topology}"
            );
        }
    }
}

/// Dimensions grow monotonically along open -> periodic -> permutation.
#[test]
fn topology_dimension_monotone() {
    for family in FamilyId::chain_families() {
        for n in 3..=5 {
            let open = closed_basis(family, Topology::Open, n).dimension();
            let per = closed_basis(family, Topology::Periodic, n).dimension();
            let perm = closed_basis(family, Topology::Permutation, n).dimension();
            assert!(
                open <= per && per <= perm,
                "{family} n={n}: {open} {per} {perm}"
            );
        }
    }
}

/// Full saturation happens exactly for the chains classified as su(2^n).
#[test]
fn saturation_dimension_cap() {
    let full = (1usize << (2 * 4)) - 1;
    for family in ["a12", "a17", "a18", "a19", "a21", "a22"] {
        let b = closed_basis(fam(family), Topology::Open, 4);
        assert_eq!(b.dimension(), full, "{family}(4) saturates");
    }
    for family in ["a9", "a16", "a13"] {
        let b = closed_basis(fam(family), Topology::Open, 4);
        assert!(b.dimension() < full, "{family}(4) stays proper");
    }
    // two-site check: closing the full catalog set gives dim 15 = 4^2 - 1
    let su4 = close(&catalog_generators(fam("a22"))).unwrap();
    assert_eq!(su4.dimension(), 15);
}
