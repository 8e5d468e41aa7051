//! Lie-closure of Pauli-string generator sets.
//!
//! Every DLA generated by Pauli strings is spanned by the Pauli strings it
//! contains, so closure over the commutator reduces to a worklist fixpoint
//! over strings: pop a string, bracket it against everything seen so far,
//! push unseen results. Phases never matter for membership.

use std::time::Instant;

use rustc_hash::FxHashSet;

use crate::pauli::PauliString;

/// Errors from closure computation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DlaError {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("generators have mixed lengths ({0} and {1})")]
    MixedLengths(usize, usize),
    #[error("identity string is not a valid generator")]
    IdentityGenerator,
    #[error("element cap of {cap} exceeded during closure")]
    ElementCapExceeded { cap: usize },
    #[error("time cap of {seconds} s exceeded during closure")]
    TimeCapExceeded { seconds: f64 },
}

/// Resource limits for a closure run. `Default` means unlimited.
#[derive(Debug, Clone, Copy, Default)]
pub struct Caps {
    pub max_elements: Option<usize>,
    pub max_seconds: Option<f64>,
}

/// The commutator-closed Pauli basis of a DLA, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlaBasis {
    n: usize,
    basis: Vec<PauliString>,
    generator_count: usize,
}

impl DlaBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn basis(&self) -> &[PauliString] {
        &self.basis
    }

    /// Membership in the closed basis.
    pub fn is_member(&self, p: &PauliString) -> bool {
        assert_eq!(p.n(), self.n, "site-count mismatch");
        self.basis.binary_search(p).is_ok()
    }

    /// Re-check closure literally: every pairwise bracket lands in the basis.
    pub fn verify_closed(&self) -> bool {
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                if let Some(c) = a.commutator_string(b) {
                    if !self.is_member(&c) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn validate(generators: &[PauliString]) -> Result<usize, DlaError> {
    let first = generators.first().ok_or(DlaError::EmptyGenerators)?;
    let n = first.n();
    for g in generators {
        if g.n() != n {
            return Err(DlaError::MixedLengths(n, g.n()));
        }
        if g.is_identity() {
            return Err(DlaError::IdentityGenerator);
        }
    }
    Ok(n)
}

/// Compute the minimal commutator-closed superset of `generators`.
pub fn close(generators: &[PauliString]) -> Result<DlaBasis, DlaError> {
    close_with_caps(generators, Caps::default())
}

/// Closure with resource caps.
///
/// The worklist invariant: when element `i` of `list` is processed, it is
/// bracketed against elements `0..i` only; every unordered pair is therefore
/// visited exactly once. When the count hits `4^n - 1` the basis is all of
/// su(2^n) and the sweep stops early.
pub fn close_with_caps(generators: &[PauliString], caps: Caps) -> Result<DlaBasis, DlaError> {
    let n = validate(generators)?;
    let full = if 2 * n < usize::BITS as usize {
        Some((1usize << (2 * n)) - 1)
    } else {
        None
    };

    let start = Instant::now();
    let mut seen: FxHashSet<u128> = FxHashSet::default();
    let mut list: Vec<PauliString> = Vec::new();
    for g in generators {
        if seen.insert(g.key()) {
            list.push(*g);
        }
    }
    let generator_count = list.len();

    let mut i = 1;
    'outer: while i < list.len() {
        if Some(list.len()) == full {
            break;
        }
        if let Some(cap) = caps.max_elements {
            if list.len() > cap {
                return Err(DlaError::ElementCapExceeded { cap });
            }
        }
        if let Some(limit) = caps.max_seconds {
            if start.elapsed().as_secs_f64() > limit {
                return Err(DlaError::TimeCapExceeded { seconds: limit });
            }
        }
        let q = list[i];
        for j in 0..i {
            if let Some(c) = q.commutator_string(&list[j]) {
                if seen.insert(c.key()) {
                    list.push(c);
                    if Some(list.len()) == full {
                        break 'outer;
                    }
                }
            }
        }
        i += 1;
    }

    if let Some(cap) = caps.max_elements {
        if list.len() > cap {
            return Err(DlaError::ElementCapExceeded { cap });
        }
    }

    list.sort();
    Ok(DlaBasis {
        n,
        basis: list,
        generator_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::parse_set;

    fn basis_strings(b: &DlaBasis) -> Vec<String> {
        b.basis().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn kitaev_pair_closes_to_three_elements() {
        let b = close(&parse_set("XY,XZ").unwrap()).unwrap();
        assert_eq!(b.dimension(), 3);
        let mut got = basis_strings(&b);
        got.sort();
        assert_eq!(got, vec!["IX", "XY", "XZ"]);
    }

    #[test]
    fn three_site_example() {
        let b = close(&parse_set("XYI,IXY").unwrap()).unwrap();
        assert_eq!(b.dimension(), 3);
        let mut got = basis_strings(&b);
        got.sort();
        assert_eq!(got, vec!["IXY", "XYI", "XZY"]);
    }

    #[test]
    fn single_commuting_generator() {
        let b = close(&parse_set("XX").unwrap()).unwrap();
        assert_eq!(b.dimension(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(close(&[]), Err(DlaError::EmptyGenerators));
        let id = PauliString::identity(2).unwrap();
        assert_eq!(close(&[id]), Err(DlaError::IdentityGenerator));
        let mixed = vec!["XY".parse().unwrap(), "XYZ".parse().unwrap()];
        assert_eq!(close(&mixed), Err(DlaError::MixedLengths(2, 3)));
    }

    #[test]
    fn full_su4_saturates_early() {
        let b = close(&parse_set("XX,XY,XZ,YX,ZX").unwrap()).unwrap();
        assert_eq!(b.dimension(), 15);
        assert!(b.verify_closed());
    }

    #[test]
    fn membership() {
        let b = close(&parse_set("XY,XZ").unwrap()).unwrap();
        assert!(b.is_member(&"IX".parse().unwrap()));
        assert!(!b.is_member(&"ZZ".parse().unwrap()));
        assert!(!b.is_member(&PauliString::identity(2).unwrap()));

        // the three-site Kitaev-with-field chain holds XZZ but not ZZZ
        let gens = crate::catalog::extend_open(
            &crate::catalog::catalog_generators("a9".parse().unwrap()),
            3,
        )
        .unwrap();
        let b = close(&gens).unwrap();
        assert!(b.is_member(&"XZZ".parse().unwrap()));
        assert!(!b.is_member(&"ZZZ".parse().unwrap()));
    }

    #[test]
    fn element_cap_fires() {
        let caps = Caps {
            max_elements: Some(5),
            max_seconds: None,
        };
        let err = close_with_caps(&parse_set("XX,XY,XZ,YX,ZX").unwrap(), caps).unwrap_err();
        assert_eq!(err, DlaError::ElementCapExceeded { cap: 5 });
    }
}
