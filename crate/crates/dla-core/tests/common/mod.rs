//! Shared helpers for the integration suites: a process-wide cache of
//! closed bases so the heavy chains are computed once across criteria.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use dla_core::catalog::{catalog_generators, extend, FamilyId, Topology};
use dla_core::dla::{close, DlaBasis};
use dla_core::pauli::PauliString;

type Key = (FamilyId, Topology, usize);

fn cache() -> &'static Mutex<HashMap<Key, Arc<DlaBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<DlaBasis>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Closed basis of a catalog family extended to `n` sites, memoized.
pub fn closed_basis(family: FamilyId, topology: Topology, n: usize) -> Arc<DlaBasis> {
    let key = (family, topology, n);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let gens = extend(&catalog_generators(family), n, topology).expect("valid extension");
    let basis = Arc::new(close(&gens).expect("catalog generators close"));
    cache().lock().unwrap().entry(key).or_insert(basis).clone()
}

#[allow(dead_code)]
pub fn fam(s: &str) -> FamilyId {
    s.parse().unwrap()
}

#[allow(dead_code)]
pub fn pauli(s: &str) -> PauliString {
    s.parse().unwrap()
}

#[allow(dead_code)]
pub fn set(texts: &[&str]) -> Vec<PauliString> {
    let mut out: Vec<PauliString> = texts.iter().map(|t| t.parse().unwrap()).collect();
    out.sort();
    out.dedup();
    out
}
