//! Explicit finite fields with exact table-backed arithmetic.
//!
//! A [`FieldCtx`] is either the prime field GF(p) or an extension of an
//! already-built field by a canonically chosen irreducible polynomial.
//! Elements are indices `0..size`; the index of an element with coefficient
//! vector `(c_0, ..., c_{d-1})` over the base field (constant coefficient
//! first) is `sum c_i * |base|^i`. The induced order on elements is the
//! canonical one used everywhere downstream: for the prime field it is
//! `0, 1, ..., p-1`; in general it is lexicographic on the coefficient
//! vector read from the highest-degree coefficient down.
//!
//! Multiplication, inversion and powers go through discrete-log tables
//! built once at construction, so every operation is exact and allocation
//! free. GF(q) together with its designated quadratic extension GF(q²) and
//! the power map x ↦ x^q live in a [`TowerCtx`].

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyarith;

/// Hard ceiling on constructible field sizes; keeps the log/exp tables at
/// desk scale.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// An explicit finite field with enumerated elements.
pub struct FieldCtx {
    p: u64,
    base: Option<Arc<FieldCtx>>,
    /// Degree over the base field (1 for the prime field itself).
    ext_degree: usize,
    /// Degree over GF(p).
    abs_degree: usize,
    size: u64,
    /// Monic defining polynomial over the base, constant term first.
    /// Empty for the prime field.
    def_poly: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    fingerprint: Vec<u64>,
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}^{})", self.p, self.abs_degree)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}
impl Eq for FieldCtx {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Splits a prime power q = p^f into (p, f).
pub fn split_prime_power(q: u64) -> Result<(u64, u32)> {
    let fac = factorize(q);
    match fac.as_slice() {
        [(p, f)] => Ok((*p, *f)),
        _ => Err(Error::NotPrimePower(q)),
    }
}

impl FieldCtx {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Arc<FieldCtx>> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if p > MAX_FIELD_SIZE {
            return Err(Error::CapExceeded {
                what: "field size",
                needed: p,
                cap: MAX_FIELD_SIZE,
            });
        }
        let mut ctx = FieldCtx {
            p,
            base: None,
            ext_degree: 1,
            abs_degree: 1,
            size: p,
            def_poly: Vec::new(),
            exp: Vec::new(),
            log: Vec::new(),
            fingerprint: vec![p, 1],
        };
        ctx.build_log_tables();
        Ok(Arc::new(ctx))
    }

    /// Extension of `base` of the given degree by the canonical defining
    /// polynomial: the lexicographically least monic irreducible, comparing
    /// coefficient vectors from the constant term upward.
    pub fn extension(base: &Arc<FieldCtx>, degree: usize) -> Result<Arc<FieldCtx>> {
        if degree == 0 {
            return Err(Error::DegreeZero);
        }
        if degree == 1 {
            return Ok(base.clone());
        }
        let size = base
            .size
            .checked_pow(degree as u32)
            .filter(|&s| s <= MAX_FIELD_SIZE)
            .ok_or(Error::CapExceeded {
                what: "field size",
                needed: u64::MAX,
                cap: MAX_FIELD_SIZE,
            })?;
        let def_poly = least_irreducible(base, degree);
        let mut fingerprint = base.fingerprint.clone();
        fingerprint.push(degree as u64);
        fingerprint.extend(def_poly.iter().map(|&c| c as u64));
        let mut ctx = FieldCtx {
            p: base.p,
            base: Some(base.clone()),
            ext_degree: degree,
            abs_degree: base.abs_degree * degree,
            size,
            def_poly,
            exp: Vec::new(),
            log: Vec::new(),
            fingerprint,
        };
        ctx.build_log_tables();
        Ok(Arc::new(ctx))
    }

    /// GF(p^e) built directly over the prime field.
    pub fn make_field(p: u64, e: usize) -> Result<Arc<FieldCtx>> {
        let prime = Self::prime(p)?;
        Self::extension(&prime, e)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn size(&self) -> u64 {
        self.size
    }
    /// Degree over the prime field.
    pub fn abs_degree(&self) -> usize {
        self.abs_degree
    }
    /// Degree over the base field this context was constructed from.
    pub fn ext_degree(&self) -> usize {
        self.ext_degree
    }
    pub fn base(&self) -> Option<&Arc<FieldCtx>> {
        self.base.as_ref()
    }
    /// Monic defining polynomial over the base, constant term first.
    pub fn def_poly(&self) -> &[u32] {
        &self.def_poly
    }
    pub fn same_field(&self, other: &FieldCtx) -> bool {
        self.fingerprint == other.fingerprint
    }

    pub fn zero(&self) -> u32 {
        0
    }
    pub fn one(&self) -> u32 {
        1
    }

    /// Coefficient vector over the base field, constant coefficient first.
    pub fn coeffs_over_base(&self, a: u32) -> Vec<u32> {
        let b = self.base_size();
        let mut v = Vec::with_capacity(self.ext_degree);
        let mut x = a as u64;
        for _ in 0..self.ext_degree {
            v.push((x % b) as u32);
            x /= b;
        }
        v
    }

    /// Coefficient vector over GF(p), constant coefficient first, length
    /// `abs_degree`.
    pub fn coeffs_over_prime(&self, a: u32) -> Vec<u32> {
        match &self.base {
            None => vec![a],
            Some(base) => {
                let mut out = Vec::with_capacity(self.abs_degree);
                for digit in self.coeffs_over_base(a) {
                    out.extend(base.coeffs_over_prime(digit));
                }
                out
            }
        }
    }

    fn base_size(&self) -> u64 {
        self.base.as_ref().map_or(self.p, |b| b.size)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.base {
            None => (((a as u64) + (b as u64)) % self.p) as u32,
            Some(base) => {
                let bs = base.size;
                let (mut x, mut y) = (a as u64, b as u64);
                let mut out = 0u64;
                let mut mult = 1u64;
                for _ in 0..self.ext_degree {
                    let s = base.add((x % bs) as u32, (y % bs) as u32) as u64;
                    out += s * mult;
                    mult *= bs;
                    x /= bs;
                    y /= bs;
                }
                out as u32
            }
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        match &self.base {
            None => {
                if a == 0 {
                    0
                } else {
                    (self.p - a as u64) as u32
                }
            }
            Some(base) => {
                let bs = base.size;
                let mut x = a as u64;
                let mut out = 0u64;
                let mut mult = 1u64;
                for _ in 0..self.ext_degree {
                    out += base.neg((x % bs) as u32) as u64 * mult;
                    mult *= bs;
                    x /= bs;
                }
                out as u32
            }
        }
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let m = self.size - 1;
        let i = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % m;
        self.exp[i as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInversion);
        }
        let m = self.size - 1;
        let i = (m - self.log[a as usize] as u64) % m;
        Ok(self.exp[i as usize])
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        if a == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let m = (self.size - 1) as u128;
        let i = (self.log[a as usize] as u128 * k as u128) % m;
        self.exp[i as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInversion);
        }
        let m = self.size - 1;
        // order = m / gcd(m, log a)
        let l = self.log[a as usize] as u64;
        Ok(m / num_integer::gcd(m, l))
    }

    /// The least generator of the multiplicative group under the canonical
    /// element order.
    pub fn primitive_element(&self) -> u32 {
        // exp[1] is the generator the tables were built from, which is the
        // least one by construction; GF(2) has exp = [1].
        if self.size == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size as u32
    }

    /// Multiplication without the log tables; used while building them.
    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        match &self.base {
            None => ((a as u64 * b as u64) % self.p) as u32,
            Some(base) => {
                let va = self.coeffs_over_base(a);
                let vb = self.coeffs_over_base(b);
                let prod = polyarith::mul(base, &va, &vb);
                let rem = polyarith::rem(base, &prod, &self.def_poly);
                self.from_coeffs_over_base(&rem)
            }
        }
    }

    fn from_coeffs_over_base(&self, coeffs: &[u32]) -> u32 {
        let b = self.base_size();
        let mut out = 0u64;
        for &c in coeffs.iter().rev() {
            out = out * b + c as u64;
        }
        out as u32
    }

    fn raw_pow(&self, a: u32, mut k: u64) -> u32 {
        let mut acc = 1u32;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn build_log_tables(&mut self) {
        let m = self.size - 1;
        let gen = if m == 1 {
            1
        } else {
            let factors = factorize(m);
            (1..self.size as u32)
                .find(|&g| {
                    factors
                        .iter()
                        .all(|&(ell, _)| self.raw_pow(g, m / ell) != 1)
                })
                .expect("every finite field has a primitive element")
        };
        let mut exp = Vec::with_capacity(m as usize);
        let mut log = vec![0u32; self.size as usize];
        let mut x = 1u32;
        for i in 0..m {
            exp.push(x);
            log[x as usize] = i as u32;
            x = self.raw_mul(x, gen);
        }
        debug_assert_eq!(x, 1);
        self.exp = exp;
        self.log = log;
    }
}

/// Lexicographically least monic irreducible of the given degree over
/// `base`, comparing coefficient vectors from the constant term upward.
fn least_irreducible(base: &Arc<FieldCtx>, degree: usize) -> Vec<u32> {
    let bs = base.size();
    let total = bs.pow(degree as u32);
    for counter in 0..total {
        // constant term is the most significant digit of the counter, so the
        // scan respects the constant-term-upward comparison
        let mut coeffs = vec![0u32; degree + 1];
        coeffs[degree] = 1;
        let mut c = counter;
        for i in (0..degree).rev() {
            coeffs[i] = (c % bs) as u32;
            c /= bs;
        }
        if polyarith::is_irreducible(base, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over finite fields")
}

/// One element of an explicit field, carrying its context.
#[derive(Clone)]
pub struct FieldElem {
    ctx: Arc<FieldCtx>,
    idx: u32,
}

impl std::fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}@{:?}", self.idx, self.ctx)
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.idx == other.idx && self.ctx.same_field(&other.ctx)
    }
}
impl Eq for FieldElem {}

impl FieldElem {
    pub fn new(ctx: &Arc<FieldCtx>, idx: u32) -> Self {
        assert!((idx as u64) < ctx.size(), "element index out of range");
        FieldElem {
            ctx: ctx.clone(),
            idx,
        }
    }
    pub fn idx(&self) -> u32 {
        self.idx
    }
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }
    pub fn coeffs(&self) -> Vec<u32> {
        self.ctx.coeffs_over_prime(self.idx)
    }
}

/// Sum, product and inverse-of-`a` in one call, with context checking.
pub fn field_arith(a: &FieldElem, b: &FieldElem) -> Result<(FieldElem, FieldElem, FieldElem)> {
    if !a.ctx.same_field(&b.ctx) {
        return Err(Error::ContextMismatch);
    }
    let sum = FieldElem::new(&a.ctx, a.ctx.add(a.idx, b.idx));
    let prod = FieldElem::new(&a.ctx, a.ctx.mul(a.idx, b.idx));
    let inv = FieldElem::new(&a.ctx, a.ctx.inv(a.idx)?);
    Ok((sum, prod, inv))
}

/// GF(q) together with its designated quadratic extension GF(q²).
///
/// The extension is always built as a degree-2 extension of the base, so the
/// embedding is the identity on element indices below q and x ↦ x^q is an
/// explicit involution.
pub struct TowerCtx {
    q: u64,
    base: Arc<FieldCtx>,
    ext: Arc<FieldCtx>,
    frob: Vec<u32>,
}

impl std::fmt::Debug for TowerCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}) in GF({})", self.q, self.q * self.q)
    }
}

impl TowerCtx {
    /// Builds GF(q) ⊂ GF(q²) for a prime power q.
    pub fn new(q: u64) -> Result<Arc<TowerCtx>> {
        let (p, f) = split_prime_power(q)?;
        let base = FieldCtx::make_field(p, f as usize)?;
        let ext = FieldCtx::extension(&base, 2)?;
        let frob = (0..ext.size() as u32).map(|a| ext.pow(a, q)).collect();
        Ok(Arc::new(TowerCtx {
            q,
            base,
            ext,
            frob,
        }))
    }

    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn base(&self) -> &Arc<FieldCtx> {
        &self.base
    }
    pub fn ext(&self) -> &Arc<FieldCtx> {
        &self.ext
    }

    /// The field homomorphism GF(q) → GF(q²). On indices it is the identity.
    pub fn embed(&self, a: u32) -> u32 {
        debug_assert!((a as u64) < self.q);
        a
    }

    /// x ↦ x^q on GF(q²); an involution whose fixed set is the embedded GF(q).
    pub fn frobenius_q(&self, a: u32) -> u32 {
        self.frob[a as usize]
    }

    /// Checked variant of [`Self::frobenius_q`] on wrapped elements.
    pub fn frobenius_q_elem(&self, a: &FieldElem) -> Result<FieldElem> {
        if !a.ctx().same_field(&self.ext) {
            return Err(Error::WrongField);
        }
        Ok(FieldElem::new(&self.ext, self.frobenius_q(a.idx())))
    }

    /// Whether an element of GF(q²) lies in the embedded GF(q).
    pub fn in_base(&self, a: u32) -> bool {
        self.frobenius_q(a) == a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_elements() {
        let f = FieldCtx::make_field(2, 1).unwrap();
        assert_eq!(f.size(), 2);
        assert_eq!(f.primitive_element(), 1);
    }

    #[test]
    fn non_prime_rejected() {
        assert!(matches!(FieldCtx::make_field(4, 1), Err(Error::NonPrime(4))));
        assert!(matches!(
            FieldCtx::extension(&FieldCtx::prime(2).unwrap(), 0),
            Err(Error::DegreeZero)
        ));
    }

    #[test]
    fn gf9_generator_structure() {
        let f = FieldCtx::make_field(3, 2).unwrap();
        assert_eq!(f.size(), 9);
        // multiplicative group is cyclic of order 8: exactly phi(8)=4 generators
        let gens = (1..9u32).filter(|&x| f.mult_order(x).unwrap() == 8).count();
        assert_eq!(gens, 4);
        assert_eq!(f.mult_order(f.primitive_element()).unwrap(), 8);
        // defining polynomial is X^2+1, the least irreducible quadratic over GF(3)
        assert_eq!(f.def_poly(), &[1, 0, 1]);
    }

    #[test]
    fn gf3_arith_example() {
        let f = FieldCtx::prime(3).unwrap();
        let a = FieldElem::new(&f, 2);
        let b = FieldElem::new(&f, 2);
        let (s, p, i) = field_arith(&a, &b).unwrap();
        assert_eq!(s.idx(), 1);
        assert_eq!(p.idx(), 1);
        assert_eq!(i.idx(), 2);
    }

    #[test]
    fn gf4_omega_example() {
        // GF(4) via X^2+X+1; omega is the defining root, index 2
        let f = FieldCtx::make_field(2, 2).unwrap();
        assert_eq!(f.def_poly(), &[1, 1, 1]);
        let omega = 2u32;
        assert_eq!(f.add(omega, omega), 0);
        let omega_sq = f.mul(omega, omega);
        assert_eq!(omega_sq, 3); // omega^2 = omega + 1
        assert_eq!(f.inv(omega).unwrap(), omega_sq);
    }

    #[test]
    fn every_nonzero_has_inverse() {
        let f = FieldCtx::make_field(3, 2).unwrap();
        for g in 1..f.size() as u32 {
            assert_eq!(f.mul(g, f.inv(g).unwrap()), 1);
        }
        assert!(matches!(f.inv(0), Err(Error::ZeroInversion)));
    }

    #[test]
    fn context_mismatch_detected() {
        let f3 = FieldCtx::prime(3).unwrap();
        let f5 = FieldCtx::prime(5).unwrap();
        let a = FieldElem::new(&f3, 1);
        let b = FieldElem::new(&f5, 1);
        assert!(matches!(field_arith(&a, &b), Err(Error::ContextMismatch)));
    }

    #[test]
    fn gf5_primitive_is_two() {
        let f = FieldCtx::prime(5).unwrap();
        assert_eq!(f.primitive_element(), 2);
    }

    #[test]
    fn solution_counts_match_cyclic_structure() {
        // #{x : x^d = 1} = d for every d | p^e - 1
        for (p, e) in [(2u64, 1usize), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)] {
            let f = FieldCtx::make_field(p, e).unwrap();
            let m = f.size() - 1;
            for d in 1..=m {
                if m % d != 0 {
                    continue;
                }
                let count = (1..f.size() as u32).filter(|&x| f.pow(x, d) == 1).count();
                assert_eq!(count as u64, d, "GF({}^{}), d={}", p, e, d);
            }
        }
    }

    #[test]
    fn tower_frobenius_properties() {
        for q in [2u64, 3, 4, 5] {
            let t = TowerCtx::new(q).unwrap();
            let ext = t.ext();
            assert_eq!(ext.size(), q * q);
            for a in ext.elements() {
                // involution
                assert_eq!(t.frobenius_q(t.frobenius_q(a)), a);
                // field automorphism
                for b in ext.elements() {
                    assert_eq!(
                        t.frobenius_q(ext.add(a, b)),
                        ext.add(t.frobenius_q(a), t.frobenius_q(b))
                    );
                    assert_eq!(
                        t.frobenius_q(ext.mul(a, b)),
                        ext.mul(t.frobenius_q(a), t.frobenius_q(b))
                    );
                }
            }
            // fixed set is exactly the embedded base field
            let fixed: Vec<u32> = ext.elements().filter(|&a| t.in_base(a)).collect();
            let embedded: Vec<u32> = t.base().elements().map(|a| t.embed(a)).collect();
            assert_eq!(fixed, embedded);
        }
    }

    #[test]
    fn embedding_respects_arithmetic() {
        for q in [3u64, 4, 5] {
            let t = TowerCtx::new(q).unwrap();
            let (b, e) = (t.base(), t.ext());
            for x in b.elements() {
                for y in b.elements() {
                    assert_eq!(t.embed(b.add(x, y)), e.add(t.embed(x), t.embed(y)));
                    assert_eq!(t.embed(b.mul(x, y)), e.mul(t.embed(x), t.embed(y)));
                }
            }
        }
    }

    #[test]
    fn gf9_frobenius_is_cube() {
        let t = TowerCtx::new(3).unwrap();
        let ext = t.ext();
        let g = ext.primitive_element();
        assert_eq!(t.frobenius_q(g), ext.pow(g, 3));
        assert_eq!(ext.mult_order(g).unwrap(), 8);
    }

    #[test]
    fn gf25_frobenius_involution() {
        let t = TowerCtx::new(5).unwrap();
        let ext = t.ext();
        // exercise a spread of elements, not just a couple
        for a in (0..25u32).map(|i| ext.pow(ext.primitive_element(), i as u64)) {
            assert_eq!(t.frobenius_q(t.frobenius_q(a)), a);
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(split_prime_power(8).unwrap(), (2, 3));
        assert_eq!(split_prime_power(9).unwrap(), (3, 2));
        assert!(split_prime_power(6).is_err());
        assert!(split_prime_power(1).is_err());
    }
}
