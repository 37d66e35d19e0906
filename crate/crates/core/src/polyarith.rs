//! Dense polynomial arithmetic over a [`FieldCtx`], on raw coefficient
//! slices (constant term first, trailing zeros trimmed, zero = empty).
//!
//! These are the low-level kernels shared by the polynomial family module
//! and the matrix oracle; the public polynomial types wrap them.

use crate::gf::FieldCtx;

pub(crate) fn normalize(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub(crate) fn add(f: &FieldCtx, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out = vec![0u32; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = f.add(x, y);
    }
    normalize(out)
}

pub(crate) fn mul(f: &FieldCtx, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    normalize(out)
}

pub(crate) fn scale(f: &FieldCtx, a: &[u32], c: u32) -> Vec<u32> {
    normalize(a.iter().map(|&x| f.mul(x, c)).collect())
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn divrem(f: &FieldCtx, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let db = b.len() - 1;
    let lead_inv = f.inv(b[db]).expect("leading coefficient is nonzero");
    let mut rem: Vec<u32> = a.to_vec();
    let mut quot = vec![0u32; a.len().saturating_sub(db)];
    while rem.len() > db || (db == 0 && !rem.is_empty()) {
        let dr = rem.len() - 1;
        if dr < db {
            break;
        }
        let c = f.mul(rem[dr], lead_inv);
        quot[dr - db] = c;
        for (i, &bc) in b.iter().enumerate() {
            let pos = dr - db + i;
            rem[pos] = f.sub(rem[pos], f.mul(c, bc));
        }
        rem = normalize(rem);
        if rem.is_empty() {
            break;
        }
    }
    (normalize(quot), rem)
}

pub(crate) fn rem(f: &FieldCtx, a: &[u32], b: &[u32]) -> Vec<u32> {
    divrem(f, a, b).1
}

pub(crate) fn eval(f: &FieldCtx, a: &[u32], x: u32) -> u32 {
    let mut acc = 0u32;
    for &c in a.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

pub(crate) fn pow(f: &FieldCtx, a: &[u32], mut k: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut base = a.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            acc = mul(f, &acc, &base);
        }
        base = mul(f, &base, &base);
        k >>= 1;
    }
    acc
}

/// Irreducibility of a monic polynomial by trial division with every monic
/// polynomial of degree at most deg/2. Exact and plenty fast at desk scale.
pub(crate) fn is_irreducible(f: &FieldCtx, poly: &[u32]) -> bool {
    let d = poly.len() - 1;
    assert!(d >= 1 && poly[d] == 1, "expected a monic polynomial");
    if d == 1 {
        return true;
    }
    let bs = f.size();
    for k in 1..=d / 2 {
        let total = bs.pow(k as u32);
        let mut div = vec![0u32; k + 1];
        div[k] = 1;
        for counter in 0..total {
            let mut c = counter;
            for coeff in div.iter_mut().take(k) {
                *coeff = (c % bs) as u32;
                c /= bs;
            }
            if rem(f, poly, &div).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    #[test]
    fn divrem_roundtrip() {
        let f = FieldCtx::prime(5).unwrap();
        let a = vec![1, 2, 3, 4]; // 1 + 2X + 3X^2 + 4X^3
        let b = vec![2, 1]; // 2 + X
        let (q, r) = divrem(&f, &a, &b);
        let back = add(&f, &mul(&f, &q, &b), &r);
        assert_eq!(back, a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn quadratic_irreducibility_over_gf2() {
        let f = FieldCtx::prime(2).unwrap();
        assert!(is_irreducible(&f, &[1, 1, 1])); // X^2+X+1
        assert!(!is_irreducible(&f, &[1, 0, 1])); // X^2+1 = (X+1)^2
        assert!(!is_irreducible(&f, &[0, 1, 1])); // X^2+X
        assert!(!is_irreducible(&f, &[0, 0, 1])); // X^2
    }
}
