//! Square matrices over an explicit finite field, with the exact linear
//! algebra the oracle needs: products, inverses, determinants, ranks and
//! characteristic polynomials. Entries are element indices; the field
//! context travels alongside rather than inside the matrix.

use std::sync::Arc;

use crate::gf::{FieldCtx, TowerCtx};
use crate::polyarith;
use crate::polyspace::MonicPoly;

/// An n x n matrix stored row-major. Matrices compare lexicographically on
/// the flattened entries, which is the canonical element order used for
/// class representatives.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<u32>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            writeln!(f, "{:?}", &self.entries[i * self.n..(i + 1) * self.n])?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(n: usize, entries: Vec<u32>) -> Matrix {
        assert_eq!(entries.len(), n * n);
        Matrix { n, entries }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, entries }
    }

    /// c * I.
    pub fn scalar(n: usize, c: u32) -> Matrix {
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            entries[i * n + i] = c;
        }
        Matrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Matrix, f: &FieldCtx) -> Matrix {
        let n = self.n;
        let mut out = vec![0u32; n * n];
        mul_into(f, n, &self.entries, &other.entries, &mut out);
        Matrix { n, entries: out }
    }

    pub fn scalar_mul(&self, c: u32, f: &FieldCtx) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|&x| f.mul(x, c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u64, f: &FieldCtx) -> Matrix {
        let mut acc = Matrix::identity(self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            k >>= 1;
        }
        acc
    }

    pub fn det(&self, f: &FieldCtx) -> u32 {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut det = 1u32;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0);
            let Some(pivot) = pivot else { return 0 };
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                }
                det = f.neg(det);
            }
            let p = m[col * n + col];
            det = f.mul(det, p);
            let pinv = f.inv(p).expect("pivot nonzero");
            for r in col + 1..n {
                let factor = f.mul(m[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], sub);
                }
            }
        }
        det
    }

    pub fn rank(&self, f: &FieldCtx) -> usize {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut rank = 0;
        for col in 0..n {
            let pivot = (rank..n).find(|&r| m[r * n + col] != 0);
            let Some(pivot) = pivot else { continue };
            if pivot != rank {
                for j in 0..n {
                    m.swap(pivot * n + j, rank * n + j);
                }
            }
            let pinv = f.inv(m[rank * n + col]).expect("pivot nonzero");
            for r in 0..n {
                if r == rank || m[r * n + col] == 0 {
                    continue;
                }
                let factor = f.mul(m[r * n + col], pinv);
                for j in 0..n {
                    let sub = f.mul(factor, m[rank * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], sub);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self, f: &FieldCtx) -> Option<Matrix> {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut inv = Matrix::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] != 0)?;
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let pinv = f.inv(m[col * n + col]).expect("pivot nonzero");
            for j in 0..n {
                m[col * n + j] = f.mul(m[col * n + j], pinv);
                inv[col * n + j] = f.mul(inv[col * n + j], pinv);
            }
            for r in 0..n {
                if r == col || m[r * n + col] == 0 {
                    continue;
                }
                let factor = m[r * n + col];
                for j in 0..n {
                    let s1 = f.mul(factor, m[col * n + j]);
                    m[r * n + j] = f.sub(m[r * n + j], s1);
                    let s2 = f.mul(factor, inv[col * n + j]);
                    inv[r * n + j] = f.sub(inv[r * n + j], s2);
                }
            }
        }
        Some(Matrix { n, entries: inv })
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Matrix { n, entries }
    }

    /// Conjugate transpose: entrywise x ↦ x^q, then transpose.
    pub fn conj_transpose(&self, tower: &TowerCtx) -> Matrix {
        let n = self.n;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = tower.frobenius_q(self.entries[i * n + j]);
            }
        }
        Matrix { n, entries }
    }

    /// Characteristic polynomial det(X·I - g), monic of degree n, computed
    /// by cofactor expansion on the polynomial-entry matrix; exact and fine
    /// for the small n the oracle handles.
    pub fn charpoly(&self, f: &Arc<FieldCtx>) -> MonicPoly {
        let n = self.n;
        let entries: Vec<Vec<u32>> = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                let neg = f.neg(self.entries[idx]);
                if i == j {
                    polyarith::normalize(vec![neg, 1])
                } else {
                    polyarith::normalize(vec![neg])
                }
            })
            .collect();
        let det = polymat_det(f, &entries, &(0..n).collect::<Vec<_>>());
        MonicPoly::new(f, det)
    }

    /// P(g) for a polynomial with the given coefficients (constant first).
    pub fn eval_poly(&self, coeffs: &[u32], f: &FieldCtx) -> Matrix {
        let n = self.n;
        let mut acc = Matrix::new(n, vec![0u32; n * n]);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self, f);
            for i in 0..n {
                acc.entries[i * n + i] = f.add(acc.entries[i * n + i], c);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn commutes_with(&self, other: &Matrix, f: &FieldCtx) -> bool {
        self.mul(other, f) == other.mul(self, f)
    }
}

/// out = a * b on flattened row-major n x n slices.
pub(crate) fn mul_into(f: &FieldCtx, n: usize, a: &[u32], b: &[u32], out: &mut [u32]) {
    for i in 0..n {
        for j in 0..n {
            let mut s = 0u32;
            for k in 0..n {
                s = f.add(s, f.mul(a[i * n + k], b[k * n + j]));
            }
            out[i * n + j] = s;
        }
    }
}

/// Determinant of a polynomial-entry matrix restricted to the given rows
/// and the first |rows| columns' complement pattern; recursion expands
/// along the first remaining column.
fn polymat_det(f: &FieldCtx, entries: &[Vec<u32>], rows: &[usize]) -> Vec<u32> {
    let n = (entries.len() as f64).sqrt() as usize;
    let k = rows.len();
    let col = n - k;
    if k == 0 {
        return vec![1];
    }
    let mut acc: Vec<u32> = Vec::new();
    for (pos, &r) in rows.iter().enumerate() {
        let e = &entries[r * n + col];
        if e.is_empty() {
            continue;
        }
        let rest: Vec<usize> = rows
            .iter()
            .copied()
            .filter(|&x| x != r)
            .collect();
        let minor = polymat_det(f, entries, &rest);
        let mut term = polyarith::mul(f, e, &minor);
        if pos % 2 == 1 {
            term = polyarith::scale(f, &term, f.neg(1));
        }
        acc = polyarith::add(f, &acc, &term);
    }
    acc
}
