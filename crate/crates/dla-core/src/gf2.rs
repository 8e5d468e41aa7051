//! GF(2) linear algebra on bit-packed vectors of up to 128 columns.
//!
//! Vectors are `u128` words, column `j` at bit `j`. This is all that is
//! needed for symplectic kernel computations on up to 64 sites.

/// Parity of the standard inner product of two GF(2) vectors.
pub fn dot(a: u128, b: u128) -> bool {
    (a & b).count_ones() & 1 == 1
}

/// Row echelon form, in place. Returns the pivot column of each surviving
/// row, in increasing order; eliminated (zero) rows are dropped.
pub fn echelonize(rows: &mut Vec<u128>) -> Vec<u32> {
    let mut pivots: Vec<u32> = Vec::new();
    let mut rank = 0usize;
    for col in 0..128u32 {
        let bit = 1u128 << col;
        let Some(pos) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pos);
        let pivot_row = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Rank of the span of `rows`.
pub fn rank(rows: &[u128]) -> usize {
    let mut copy = rows.to_vec();
    echelonize(&mut copy);
    copy.len()
}

/// Basis of the kernel `{ v : dot(v, row) = 0 for every row }`, restricted
/// to the first `cols` columns.
pub fn kernel_basis(rows: &[u128], cols: u32) -> Vec<u128> {
    let mut reduced = rows.to_vec();
    let pivots = echelonize(&mut reduced);
    let is_pivot = |c: u32| pivots.binary_search(&c).is_ok();

    // For each free column f, the kernel vector has a 1 at f plus, for each
    // pivot row with a 1 in column f, a 1 at that row's pivot column.
    let mut basis = Vec::with_capacity(cols as usize - pivots.len());
    for f in 0..cols {
        if is_pivot(f) {
            continue;
        }
        let mut v = 1u128 << f;
        for (row, &pc) in reduced.iter().zip(pivots.iter()) {
            if row & (1u128 << f) != 0 {
                v |= 1u128 << pc;
            }
        }
        basis.push(v);
    }
    basis
}

/// Enumerate every element of the span of `basis` (including zero).
/// Panics if the span has more than `2^26` elements.
pub fn enumerate_span(basis: &[u128]) -> Vec<u128> {
    assert!(basis.len() <= 26, "span too large to enumerate");
    let mut out = Vec::with_capacity(1usize << basis.len());
    out.push(0u128);
    for &b in basis {
        let cur = out.len();
        for i in 0..cur {
            let v = out[i] ^ b;
            out.push(v);
        }
    }
    out
}
