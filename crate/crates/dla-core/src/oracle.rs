//! Brute-force dense-matrix reference for small site counts.
//!
//! Builds literal `2^n x 2^n` matrices by Kronecker products of the 2x2
//! Pauli matrices and multiplies them directly. Entries of Pauli strings and
//! their products are Gaussian integers, so everything here is exact integer
//! arithmetic. This module deliberately shares no code with the symplectic
//! representation; the test suites use it as an independent oracle.

use std::ops::{Add, Mul, Neg, Sub};

use crate::pauli::{Letter, PauliString, Phase};

/// A Gaussian integer `re + i*im`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn phase(p: Phase) -> GaussInt {
        match p {
            Phase::PlusOne => GaussInt::ONE,
            Phase::PlusI => GaussInt::I,
            Phase::MinusOne => -GaussInt::ONE,
            Phase::MinusI => -GaussInt::I,
        }
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;

    fn mul(self, o: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Add for GaussInt {
    type Output = GaussInt;

    fn add(self, o: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;

    fn sub(self, o: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;

    fn neg(self) -> GaussInt {
        GaussInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// A dense square matrix with Gaussian-integer entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub dim: usize,
    pub data: Vec<GaussInt>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![GaussInt::ZERO; dim * dim],
        }
    }

    pub fn at(&self, r: usize, c: usize) -> GaussInt {
        self.data[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, v: GaussInt) {
        self.data[r * self.dim + c] = v;
    }

    /// Literal 2x2 Pauli matrices.
    pub fn pauli_2x2(l: Letter) -> Matrix {
        let o = GaussInt::ZERO;
        let one = GaussInt::ONE;
        let i = GaussInt::I;
        let rows = match l {
            Letter::I => [[one, o], [o, one]],
            Letter::X => [[o, one], [one, o]],
            Letter::Y => [[o, -i], [i, o]],
            Letter::Z => [[one, o], [o, -one]],
        };
        Matrix {
            dim: 2,
            data: rows.concat(),
        }
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let d = self.dim * other.dim;
        let mut out = Matrix::zero(d);
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self.at(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        let b = other.at(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.dim + r2, c1 * other.dim + c2, a * b);
                    }
                }
            }
        }
        out
    }

    /// Dense matrix product, skipping zero entries.
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = Matrix::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let cur = out.at(r, c);
                        out.set(r, c, cur + a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.dim;
        let mut out = Matrix::zero(d);
        for r in 0..d {
            for c in 0..d {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    pub fn scaled(&self, s: GaussInt) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|v| *v * s).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(a, b)| *a - *b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }
}

/// The dense matrix of a Pauli string (site 0 is the leftmost tensor factor).
pub fn dense(p: &PauliString) -> Matrix {
    let mut m = Matrix::pauli_2x2(p.letter(0));
    for site in 1..p.n() {
        m = m.kron(&Matrix::pauli_2x2(p.letter(site)));
    }
    m
}

/// Oracle commutation test: compare `a.b` and `b.a` as matrices.
pub fn commutes(a: &PauliString, b: &PauliString) -> bool {
    let ma = dense(a);
    let mb = dense(b);
    ma.matmul(&mb) == mb.matmul(&ma)
}

/// Oracle product: returns the product matrix `a.b`.
pub fn product_matrix(a: &PauliString, b: &PauliString) -> Matrix {
    dense(a).matmul(&dense(b))
}

/// Check that `m` equals `phase * string` as a dense matrix.
pub fn matrix_equals_signed(m: &Matrix, string: &PauliString, phase: Phase) -> bool {
    *m == dense(string).scaled(GaussInt::phase(phase))
}

/// Oracle transpose sign: `a^T = s * a` with `s` in `{+1, -1}`.
pub fn transpose_sign(a: &PauliString) -> i8 {
    let m = dense(a);
    let t = m.transpose();
    if t == m {
        1
    } else {
        assert_eq!(t, m.scaled(-GaussInt::ONE));
        -1
    }
}

/// Oracle for the involution `g -> -Q g^T Q`: returns +1 if the string is
/// fixed, -1 if negated.
pub fn involution_sign(q: &PauliString, p: &PauliString) -> i8 {
    let mq = dense(q);
    let image = mq
        .matmul(&dense(p).transpose())
        .matmul(&mq)
        .scaled(-GaussInt::ONE);
    if image == dense(p) {
        1
    } else {
        assert_eq!(image, dense(p).scaled(-GaussInt::ONE));
        -1
    }
}

/// All `4^n` Pauli strings on `n` sites in canonical order.
pub fn all_strings(n: usize) -> Vec<PauliString> {
    let mut out = Vec::with_capacity(1 << (2 * n));
    for z in 0..(1u64 << n) {
        for x in 0..(1u64 << n) {
            out.push(PauliString::from_bits(n, x, z).unwrap());
        }
    }
    out.sort();
    out
}
