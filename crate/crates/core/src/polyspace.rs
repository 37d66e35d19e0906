//! Monic polynomials over explicit fields, the tilde involution, and the
//! orbit families F0 (linear case) and F1 ∪ F2 (unitary case).
//!
//! An orbit is stored by its canonical polynomial: the irreducible itself
//! for F0 and F1, the tilde-stable product Δ·Δ̃ for F2. Polynomials of equal
//! degree are ordered by comparing coefficient vectors from the constant
//! term upward, which is also the enumeration order of [`irreducibles`].

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{split_prime_power, FieldCtx, TowerCtx};
use crate::polyarith;

/// Default ceiling on how many candidate polynomials a single enumeration
/// may scan.
pub const DEFAULT_POLY_ENUM_CAP: u64 = 4_000_000;

/// A prime power together with the sign selecting the linear (+1) or
/// unitary (-1) world, and the field tower both live in.
#[derive(Clone)]
pub struct SignedQ {
    q: u64,
    epsilon: i8,
    tower: Arc<TowerCtx>,
}

impl std::fmt::Debug for SignedQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GL({}q)-world, q={}", if self.epsilon > 0 { "+" } else { "-" }, self.q)
    }
}

impl PartialEq for SignedQ {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.epsilon == other.epsilon
    }
}
impl Eq for SignedQ {}

impl SignedQ {
    pub fn new(q: u64, epsilon: i8) -> Result<SignedQ> {
        if epsilon != 1 && epsilon != -1 {
            return Err(Error::InvalidSpec(format!("epsilon must be +1 or -1, got {epsilon}")));
        }
        split_prime_power(q)?;
        let tower = TowerCtx::new(q)?;
        Ok(SignedQ { q, epsilon, tower })
    }

    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn epsilon(&self) -> i8 {
        self.epsilon
    }
    pub fn tower(&self) -> &Arc<TowerCtx> {
        &self.tower
    }

    /// q - eps, the order of the relevant center / twist group.
    pub fn q_minus_eps(&self) -> u64 {
        if self.epsilon > 0 {
            self.q - 1
        } else {
            self.q + 1
        }
    }

    /// The field the orbit polynomials are written over: GF(q) when
    /// eps = +1, GF(q²) when eps = -1.
    pub fn coeff_field(&self) -> &Arc<FieldCtx> {
        if self.epsilon > 0 {
            self.tower.base()
        } else {
            self.tower.ext()
        }
    }

    /// All z in the coefficient field with z^(q-eps) = 1, in canonical order.
    pub fn central_elements(&self) -> Vec<u32> {
        let f = self.coeff_field();
        let m = self.q_minus_eps();
        f.elements()
            .filter(|&z| z != 0 && f.pow(z, m) == 1)
            .collect()
    }

    /// The canonical generator of the order-(q-eps) cyclic group: the least
    /// primitive element of GF(q) for eps = +1, and the (q-1)-th power of
    /// the least primitive element of GF(q²) for eps = -1.
    pub fn central_generator(&self) -> u32 {
        if self.epsilon > 0 {
            self.tower.base().primitive_element()
        } else {
            let ext = self.tower.ext();
            ext.pow(ext.primitive_element(), self.q - 1)
        }
    }

    /// The canonical element z_k of order k in the center; errors unless
    /// k | q - eps.
    pub fn z_k(&self, k: u64) -> Result<u32> {
        let m = self.q_minus_eps();
        if k == 0 || m % k != 0 {
            return Err(Error::Inadmissible { k, q_minus_eps: m });
        }
        Ok(self.coeff_field().pow(self.central_generator(), m / k))
    }

    pub fn is_central(&self, z: u32) -> bool {
        z != 0 && self.coeff_field().pow(z, self.q_minus_eps()) == 1
    }
}

/// A monic polynomial over an explicit field, constant coefficient first.
#[derive(Clone)]
pub struct MonicPoly {
    field: Arc<FieldCtx>,
    coeffs: Vec<u32>,
}

impl std::fmt::Debug for MonicPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl PartialEq for MonicPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field.same_field(&other.field)
    }
}
impl Eq for MonicPoly {}

impl PartialOrd for MonicPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for MonicPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl MonicPoly {
    pub fn new(field: &Arc<FieldCtx>, coeffs: Vec<u32>) -> MonicPoly {
        assert!(
            coeffs.last() == Some(&1),
            "monic polynomial must have leading coefficient 1"
        );
        MonicPoly {
            field: field.clone(),
            coeffs,
        }
    }

    /// The polynomial X.
    pub fn x(field: &Arc<FieldCtx>) -> MonicPoly {
        MonicPoly::new(field, vec![0, 1])
    }

    /// X - a.
    pub fn x_minus(field: &Arc<FieldCtx>, a: u32) -> MonicPoly {
        MonicPoly::new(field, vec![field.neg(a), 1])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }
    pub fn constant_term(&self) -> u32 {
        self.coeffs[0]
    }
    pub fn is_x(&self) -> bool {
        self.coeffs == [0, 1]
    }
    pub fn eval(&self, x: u32) -> u32 {
        polyarith::eval(&self.field, &self.coeffs, x)
    }

    pub fn mul(&self, other: &MonicPoly) -> MonicPoly {
        assert!(self.field.same_field(&other.field));
        MonicPoly {
            field: self.field.clone(),
            coeffs: polyarith::mul(&self.field, &self.coeffs, &other.coeffs),
        }
    }

    pub fn divides(&self, other: &MonicPoly) -> bool {
        polyarith::rem(&self.field, &other.coeffs, &self.coeffs).is_empty()
    }

    /// Human-readable form, e.g. `X^2 + 2X + 1`; coefficients are printed as
    /// element indices of the canonical enumeration.
    pub fn display(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else {
                format!("{c}")
            };
            let var = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            terms.push(format!("{coeff}{var}"));
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// A general polynomial over an explicit field, constant coefficient first,
/// trailing zeros trimmed (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Arc<FieldCtx>,
    coeffs: Vec<u32>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Poly {
    pub fn new(field: &Arc<FieldCtx>, coeffs: Vec<u32>) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: polyarith::normalize(coeffs),
        }
    }
    pub fn zero(field: &Arc<FieldCtx>) -> Poly {
        Poly::new(field, Vec::new())
    }
    pub fn one(field: &Arc<FieldCtx>) -> Poly {
        Poly::new(field, vec![1])
    }
    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
    pub fn degree(&self) -> Option<usize> {
        polyarith::degree(&self.coeffs)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }
    pub fn eval(&self, x: u32) -> u32 {
        polyarith::eval(&self.field, &self.coeffs, x)
    }
    pub fn mul(&self, other: &Poly) -> Poly {
        assert!(self.field.same_field(&other.field));
        Poly {
            field: self.field.clone(),
            coeffs: polyarith::mul(&self.field, &self.coeffs, &other.coeffs),
        }
    }
    pub fn pow(&self, k: u32) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: polyarith::pow(&self.field, &self.coeffs, k),
        }
    }

    /// The reversal of a monic polynomial with nonzero constant term: the
    /// polynomial with constant term 1 whose roots are the inverses of the
    /// roots of `m`; equivalently prod (1 - alpha X) over the roots alpha.
    pub fn reversal_of(m: &MonicPoly) -> Poly {
        assert_ne!(m.constant_term(), 0, "reversal needs a nonzero constant term");
        let mut coeffs = m.coeffs().to_vec();
        coeffs.reverse();
        Poly::new(m.field(), coeffs)
    }

    /// Divides by the leading coefficient; `None` for the zero polynomial.
    pub fn to_monic(&self) -> Option<MonicPoly> {
        let lead = *self.coeffs.last()?;
        let inv = self.field.inv(lead).expect("leading coefficient nonzero");
        let coeffs = polyarith::scale(&self.field, &self.coeffs, inv);
        Some(MonicPoly::new(&self.field, coeffs))
    }

    pub fn display(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else {
                format!("{c}")
            };
            let var = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            terms.push(format!("{coeff}{var}"));
        }
        terms.join(" + ")
    }
}

/// All monic irreducible polynomials of degree exactly `d`, in canonical
/// order. Lower degrees are sieved first and used as trial divisors.
pub fn irreducibles(ctx: &Arc<FieldCtx>, d: usize, cap: u64) -> Result<Vec<MonicPoly>> {
    Ok(irreducibles_up_to(ctx, d, cap)?.pop().unwrap_or_default())
}

/// Irreducibles of each degree 1..=d; index 0 of the result holds degree 1.
pub fn irreducibles_up_to(
    ctx: &Arc<FieldCtx>,
    d: usize,
    cap: u64,
) -> Result<Vec<Vec<MonicPoly>>> {
    let bs = ctx.size();
    let mut by_degree: Vec<Vec<MonicPoly>> = Vec::with_capacity(d);
    for m in 1..=d {
        let candidates = bs
            .checked_pow(m as u32)
            .ok_or(Error::CapExceeded {
                what: "polynomial enumeration",
                needed: u64::MAX,
                cap,
            })?;
        if candidates > cap {
            return Err(Error::CapExceeded {
                what: "polynomial enumeration",
                needed: candidates,
                cap,
            });
        }
        let mut found = Vec::new();
        let mut coeffs = vec![0u32; m + 1];
        coeffs[m] = 1;
        for counter in 0..candidates {
            let mut c = counter;
            for i in (0..m).rev() {
                coeffs[i] = (c % bs) as u32;
                c /= bs;
            }
            let reducible = by_degree
                .iter()
                .take(m / 2)
                .flatten()
                .any(|p| polyarith::rem(ctx, &coeffs, p.coeffs()).is_empty());
            if !reducible {
                found.push(MonicPoly::new(ctx, coeffs.clone()));
            }
        }
        by_degree.push(found);
    }
    Ok(by_degree)
}

/// The tilde map Δ ↦ Δ̃ on monic polynomials over GF(q²) with nonzero
/// constant term: coefficientwise b_j = a_0^{-q} a_{m-j}^q, which sends the
/// root set {α} to {α^{-q}}.
pub fn tilde(tower: &TowerCtx, delta: &MonicPoly) -> Result<MonicPoly> {
    if !delta.field().same_field(tower.ext()) {
        return Err(Error::WrongField);
    }
    let a0 = delta.constant_term();
    if a0 == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    let f = tower.ext();
    let m = delta.degree();
    let a0q_inv = f.inv(tower.frobenius_q(a0))?;
    let coeffs: Vec<u32> = (0..=m)
        .map(|j| f.mul(a0q_inv, tower.frobenius_q(delta.coeffs()[m - j])))
        .collect();
    debug_assert_eq!(coeffs[m], 1);
    Ok(MonicPoly::new(f, coeffs))
}

/// Which family an orbit belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrbitKind {
    /// Irreducible over GF(q); the eps = +1 family.
    F0,
    /// Self-tilde irreducible over GF(q²).
    F1,
    /// Product Δ·Δ̃ with Δ ≠ Δ̃ over GF(q²).
    F2,
}

/// One orbit of the map α ↦ α^(eps·q) on nonzero field elements, stored as
/// its canonical polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct GammaOrbit {
    kind: OrbitKind,
    poly: MonicPoly,
    /// For F2 only: the lexicographically smaller of {Δ, Δ̃}.
    factor: Option<MonicPoly>,
}

impl std::fmt::Debug for GammaOrbit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}<{}>", self.kind, self.poly.display())
    }
}

impl PartialOrd for GammaOrbit {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for GammaOrbit {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.poly.cmp(&other.poly)
    }
}

impl GammaOrbit {
    pub fn kind(&self) -> OrbitKind {
        self.kind
    }
    /// The canonical polynomial: the orbit's full root multiset.
    pub fn poly(&self) -> &MonicPoly {
        &self.poly
    }
    /// Number of roots, i.e. the orbit size.
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }
    pub fn factor(&self) -> Option<&MonicPoly> {
        self.factor.as_ref()
    }
}

/// All orbits of total degree at most `max_total_degree`, canonically
/// ordered by (degree, polynomial).
pub fn gamma_set(sq: &SignedQ, max_total_degree: usize, cap: u64) -> Result<Vec<GammaOrbit>> {
    let mut out = Vec::new();
    if sq.epsilon() > 0 {
        let base = sq.tower().base();
        for polys in irreducibles_up_to(base, max_total_degree, cap)? {
            for p in polys {
                if p.is_x() {
                    continue;
                }
                out.push(GammaOrbit {
                    kind: OrbitKind::F0,
                    poly: p,
                    factor: None,
                });
            }
        }
    } else {
        let tower = sq.tower();
        for polys in irreducibles_up_to(tower.ext(), max_total_degree, cap)? {
            for delta in polys {
                if delta.is_x() {
                    continue;
                }
                let dt = tilde(tower, &delta)?;
                if delta == dt {
                    out.push(GammaOrbit {
                        kind: OrbitKind::F1,
                        poly: delta,
                        factor: None,
                    });
                } else if delta < dt && 2 * delta.degree() <= max_total_degree {
                    let prod = delta.mul(&dt);
                    out.push(GammaOrbit {
                        kind: OrbitKind::F2,
                        poly: prod,
                        factor: Some(delta),
                    });
                }
            }
        }
        out.sort();
    }
    Ok(out)
}

/// Scales the root set of a monic polynomial by z: returns the monic
/// polynomial with roots {z·α}.
fn scale_roots(poly: &MonicPoly, z: u32) -> MonicPoly {
    let f = poly.field();
    let d = poly.degree();
    let coeffs: Vec<u32> = poly
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, &a)| f.mul(a, f.pow(z, (d - i) as u64)))
        .collect();
    MonicPoly::new(f, coeffs)
}

/// The central twist z·Γ: the orbit whose roots are z·α for α running over
/// the roots of Γ. Requires z^(q-eps) = 1.
pub fn twist(sq: &SignedQ, z: u32, orbit: &GammaOrbit) -> Result<GammaOrbit> {
    if !sq.is_central(z) {
        return Err(Error::NotCentral);
    }
    match orbit.kind {
        OrbitKind::F0 | OrbitKind::F1 => Ok(GammaOrbit {
            kind: orbit.kind,
            poly: scale_roots(&orbit.poly, z),
            factor: None,
        }),
        OrbitKind::F2 => {
            let delta = scale_roots(orbit.factor.as_ref().expect("F2 stores its factor"), z);
            let dt = tilde(sq.tower(), &delta)?;
            debug_assert_ne!(delta, dt);
            let small = if delta < dt { delta.clone() } else { dt.clone() };
            Ok(GammaOrbit {
                kind: OrbitKind::F2,
                poly: delta.mul(&dt),
                factor: Some(small),
            })
        }
    }
}
