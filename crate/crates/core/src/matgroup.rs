//! Brute-force oracle: explicit GL/SL/GU/SU over small fields, their full
//! conjugacy class tables, classification flags, the central action on
//! classes, and the structured counts the symbolic modules are tested
//! against.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use serde::Serialize;

use crate::census::ClassLabel;
use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::matrix::{mul_into, Matrix};
use crate::partitions::Partition;
use crate::polyarith;
use crate::polyspace::{gamma_set, irreducibles_up_to, tilde, GammaOrbit, MonicPoly, SignedQ};
use crate::Caps;

/// Groups that fall back to conjugation by all elements rather than a
/// generating-set closure.
const FULL_SCAN_LIMIT: u64 = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Family {
    Gl,
    Sl,
    Gu,
    Su,
}

impl Family {
    pub fn epsilon(&self) -> i8 {
        match self {
            Family::Gl | Family::Sl => 1,
            Family::Gu | Family::Su => -1,
        }
    }

    pub fn is_special(&self) -> bool {
        matches!(self, Family::Sl | Family::Su)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Gl => "GL",
            Family::Sl => "SL",
            Family::Gu => "GU",
            Family::Su => "SU",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Family::Gl),
            "sl" => Ok(Family::Sl),
            "gu" => Ok(Family::Gu),
            "su" => Ok(Family::Su),
            other => Err(Error::InvalidSpec(format!("unknown family `{other}`"))),
        }
    }
}

/// Which group to build: family, dimension and field size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
    pub q: u64,
}

impl GroupSpec {
    pub fn new(family: Family, n: usize, q: u64) -> GroupSpec {
        GroupSpec { family, n, q }
    }

    pub fn signed_q(&self) -> Result<SignedQ> {
        SignedQ::new(self.q, self.family.epsilon())
    }

    /// Closed-form group order: |GL_n(eps q)| = q^(n(n-1)/2) prod (q^i - eps^i),
    /// divided by q - eps for SL/SU.
    pub fn order(&self) -> Result<u64> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        let q = self.q as u128;
        let eps = self.family.epsilon() as i128;
        let mut order: i128 = 1;
        let mut qi: i128 = 1;
        let mut epsi: i128 = 1;
        for _ in 1..=self.n {
            qi = qi.checked_mul(q as i128).ok_or(Error::CapExceeded {
                what: "group order",
                needed: u64::MAX,
                cap: u64::MAX,
            })?;
            epsi *= eps;
            order = order
                .checked_mul(qi - epsi)
                .ok_or(Error::CapExceeded {
                    what: "group order",
                    needed: u64::MAX,
                    cap: u64::MAX,
                })?;
        }
        for _ in 0..self.n * (self.n - 1) / 2 {
            order = order.checked_mul(q as i128).ok_or(Error::CapExceeded {
                what: "group order",
                needed: u64::MAX,
                cap: u64::MAX,
            })?;
        }
        if self.family.is_special() {
            let center = q as i128 - eps;
            debug_assert_eq!(order % center, 0);
            order /= center;
        }
        u64::try_from(order).map_err(|_| Error::CapExceeded {
            what: "group order",
            needed: u64::MAX,
            cap: u64::MAX,
        })
    }

    pub fn display(&self) -> String {
        format!("{}_{}({})", self.family.name(), self.n, self.q)
    }
}

/// A fully enumerated matrix group, elements in ascending canonical order.
pub struct Group {
    spec: GroupSpec,
    sq: SignedQ,
    field: Arc<FieldCtx>,
    n: usize,
    flat: Vec<u32>,
}

impl Group {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }
    pub fn signed_q(&self) -> &SignedQ {
        &self.sq
    }
    /// The entry field: GF(q) for GL/SL, GF(q²) for GU/SU.
    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn order(&self) -> u64 {
        (self.flat.len() / (self.n * self.n)) as u64
    }
    pub fn element(&self, i: usize) -> &[u32] {
        let s = self.n * self.n;
        &self.flat[i * s..(i + 1) * s]
    }
    pub fn matrix(&self, i: usize) -> Matrix {
        Matrix::new(self.n, self.element(i).to_vec())
    }

    /// Binary search over the sorted element table.
    pub fn index_of(&self, entries: &[u32]) -> Option<usize> {
        let s = self.n * self.n;
        let count = self.flat.len() / s;
        let (mut lo, mut hi) = (0usize, count);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.flat[mid * s..(mid + 1) * s].cmp(entries) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.index_of(m.entries()).is_some()
    }

    /// Central elements of this group, as entry-field indices z with
    /// z·I in the group: z^(q-eps) = 1, and additionally z^n = 1 for SL/SU.
    pub fn center_scalars(&self) -> Vec<u32> {
        let f = &self.field;
        self.sq
            .central_elements()
            .into_iter()
            .filter(|&z| !self.spec.family.is_special() || f.pow(z, self.n as u64) == 1)
            .collect()
    }
}

/// Enumerates the full group by filtering every candidate matrix, in
/// ascending canonical order.
pub fn build_group(spec: &GroupSpec, caps: &Caps) -> Result<Group> {
    let sq = spec.signed_q()?;
    let field = sq.coeff_field().clone();
    let n = spec.n;
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    let expected = spec.order()?;
    if expected > caps.max_group_order {
        return Err(Error::CapExceeded {
            what: "group order",
            needed: expected,
            cap: caps.max_group_order,
        });
    }
    let cells = n * n;
    let candidates = (field.size() as u128).pow(cells as u32);
    if candidates > caps.max_candidates as u128 {
        return Err(Error::CapExceeded {
            what: "candidate matrices",
            needed: candidates.min(u64::MAX as u128) as u64,
            cap: caps.max_candidates,
        });
    }

    let tower = sq.tower().clone();
    let unitary = spec.family.epsilon() < 0;
    let special = spec.family.is_special();
    let mut flat = Vec::with_capacity(expected as usize * cells);
    let mut digits = vec![0u32; cells];
    let size = field.size() as u32;
    let mut scratch = vec![0u32; cells];
    loop {
        let keep = if unitary {
            // g * conj_transpose(g) == I, which already forces invertibility
            let m = Matrix::new(n, digits.clone());
            let ct = m.conj_transpose(&tower);
            mul_into(&field, n, m.entries(), ct.entries(), &mut scratch);
            let is_unitary = scratch
                .iter()
                .enumerate()
                .all(|(idx, &v)| v == u32::from(idx / n == idx % n));
            is_unitary && (!special || m.det(&field) == 1)
        } else {
            let d = Matrix::new(n, digits.clone()).det(&field);
            if special {
                d == 1
            } else {
                d != 0
            }
        };
        if keep {
            flat.extend_from_slice(&digits);
        }
        // odometer increment, last digit fastest: ascending lex order
        let mut pos = cells;
        let mut done = false;
        loop {
            if pos == 0 {
                done = true;
                break;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < size {
                break;
            }
            digits[pos] = 0;
        }
        if done {
            break;
        }
    }
    let group = Group {
        spec: *spec,
        sq,
        field,
        n,
        flat,
    };
    assert_eq!(
        group.order(),
        expected,
        "enumerated order must match the closed-form order formula for {}",
        spec.display()
    );
    Ok(group)
}

/// Classification flags of a single class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub semisimple: bool,
    pub regular_semisimple: bool,
    pub strongly_regular: bool,
    pub srs0: bool,
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub rep: Matrix,
    pub size: u64,
    pub centralizer_order: u64,
    pub flags: ClassFlags,
    /// Present for GL/GU; SL/SU classes are finer than labels.
    pub label: Option<ClassLabel>,
}

/// The full conjugacy table of one group.
pub struct ClassTable {
    spec: GroupSpec,
    sq: SignedQ,
    group_order: u64,
    classes: Vec<ClassInfo>,
    /// For every central scalar z != 1: the permutation it induces on
    /// classes.
    central_action: BTreeMap<u32, Vec<usize>>,
}

impl ClassTable {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }
    pub fn group_order(&self) -> u64 {
        self.group_order
    }
    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }
    pub fn class_count(&self) -> u64 {
        self.classes.len() as u64
    }

    pub fn count_with(&self, pred: impl Fn(&ClassFlags) -> bool) -> u64 {
        self.classes.iter().filter(|c| pred(&c.flags)).count() as u64
    }

    /// The permutation induced by central z, identity for z = 1.
    pub fn central_permutation(&self, z: u32) -> Option<Vec<usize>> {
        if z == 1 {
            return Some((0..self.classes.len()).collect());
        }
        self.central_action.get(&z).cloned()
    }

    /// Number of classes fixed by the canonical central element of order k.
    pub fn central_fixed_classes(&self, k: u64) -> Result<u64> {
        let z = self.sq.z_k(k)?;
        if k == 1 {
            return Ok(self.class_count());
        }
        let perm = self.central_action.get(&z).ok_or_else(|| {
            Error::InvalidSpec(format!(
                "z_{k} is not a central scalar of {}",
                self.spec.display()
            ))
        })?;
        Ok(perm.iter().enumerate().filter(|(i, &j)| *i == j).count() as u64)
    }

    /// All admissible k (with z_k central in this group), mapped to their
    /// fixed-class counts.
    pub fn fixed_classes_by_k(&self) -> BTreeMap<u64, u64> {
        let m = self.sq.q_minus_eps();
        let mut out = BTreeMap::new();
        for k in 1..=m {
            if m % k != 0 {
                continue;
            }
            if let Ok(c) = self.central_fixed_classes(k) {
                out.insert(k, c);
            }
        }
        out
    }
}

/// g x g^{-1} on flat slices, using two scratch buffers.
fn conj_into(
    f: &FieldCtx,
    n: usize,
    g: &[u32],
    x: &[u32],
    ginv: &[u32],
    tmp: &mut [u32],
    out: &mut [u32],
) {
    mul_into(f, n, g, x, tmp);
    mul_into(f, n, tmp, ginv, out);
}

/// Raw class partition: (class index per element, seed element per class).
/// Seeds are the least elements of their classes and ascend.
type RawPartition = (Vec<u32>, Vec<usize>);

/// Conjugation by every group element, one scan per class.
pub(crate) fn partition_by_full_scan(group: &Group) -> RawPartition {
    let f = group.field();
    let n = group.n();
    let m = group.order() as usize;
    let cells = n * n;
    // inverse of every element, as indices
    let inv: Vec<usize> = (0..m)
        .map(|i| {
            let mi = group
                .matrix(i)
                .inverse(f)
                .expect("group elements are invertible");
            group.index_of(mi.entries()).expect("closed under inverse")
        })
        .collect();
    let mut class_of = vec![u32::MAX; m];
    let mut seeds = Vec::new();
    let mut tmp = vec![0u32; cells];
    let mut out = vec![0u32; cells];
    for seed in 0..m {
        if class_of[seed] != u32::MAX {
            continue;
        }
        let cls = seeds.len() as u32;
        seeds.push(seed);
        let x = group.element(seed).to_vec();
        for g in 0..m {
            conj_into(f, n, group.element(g), &x, group.element(inv[g]), &mut tmp, &mut out);
            let idx = group.index_of(&out).expect("closed under conjugation");
            debug_assert!(class_of[idx] == u32::MAX || class_of[idx] == cls);
            class_of[idx] = cls;
        }
    }
    (class_of, seeds)
}

/// Breadth-first closure under conjugation by a generating set.
pub(crate) fn partition_by_generators(group: &Group, gens: &[Matrix]) -> RawPartition {
    let f = group.field();
    let n = group.n();
    let m = group.order() as usize;
    let cells = n * n;
    let gen_pairs: Vec<(Vec<u32>, Vec<u32>)> = gens
        .iter()
        .map(|g| {
            let gi = g.inverse(f).expect("generators are invertible");
            (g.entries().to_vec(), gi.entries().to_vec())
        })
        .collect();
    let mut class_of = vec![u32::MAX; m];
    let mut seeds = Vec::new();
    let mut tmp = vec![0u32; cells];
    let mut out = vec![0u32; cells];
    let mut queue = VecDeque::new();
    for seed in 0..m {
        if class_of[seed] != u32::MAX {
            continue;
        }
        let cls = seeds.len() as u32;
        seeds.push(seed);
        class_of[seed] = cls;
        queue.push_back(seed);
        while let Some(x) = queue.pop_front() {
            for (g, ginv) in &gen_pairs {
                conj_into(f, n, g, group.element(x), ginv, &mut tmp, &mut out);
                let idx = group.index_of(&out).expect("closed under conjugation");
                if class_of[idx] == u32::MAX {
                    class_of[idx] = cls;
                    queue.push_back(idx);
                }
                debug_assert_eq!(class_of[idx], cls);
            }
        }
    }
    (class_of, seeds)
}

/// Transvections I + c E_ij for all i != j and c != 0, plus a primitive
/// diagonal generator for GL. These generate SL_n(q) resp. GL_n(q).
fn gl_generators(field: &Arc<FieldCtx>, n: usize, full_gl: bool) -> Vec<Matrix> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for c in 1..field.size() as u32 {
                let mut m = Matrix::identity(n);
                m.set(i, j, c);
                gens.push(m);
            }
        }
    }
    if full_gl {
        let g = field.primitive_element();
        if g != 1 {
            let mut m = Matrix::identity(n);
            m.set(0, 0, g);
            gens.push(m);
        }
    }
    gens
}

/// Factorization of a monic polynomial into (irreducible, multiplicity)
/// pairs, using the precomputed irreducible lists.
fn factor_monic(
    field: &Arc<FieldCtx>,
    poly: &MonicPoly,
    irr_by_degree: &[Vec<MonicPoly>],
) -> Vec<(MonicPoly, u32)> {
    let mut rem = poly.coeffs().to_vec();
    let mut out = Vec::new();
    for irr_list in irr_by_degree {
        for irr in irr_list {
            let mut mult = 0u32;
            loop {
                if rem.len() <= irr.coeffs().len() - 1 {
                    break;
                }
                let (quot, r) = polyarith::divrem(field, &rem, irr.coeffs());
                if r.is_empty() {
                    mult += 1;
                    rem = quot;
                } else {
                    break;
                }
            }
            if mult > 0 {
                out.push((irr.clone(), mult));
            }
            if rem == [1] {
                return out;
            }
        }
    }
    assert_eq!(rem, vec![1], "polynomial fully factored");
    out
}

/// Jordan partition of one irreducible factor from kernel dimensions of its
/// powers: the number of parts >= i is (dim ker D(g)^i - dim ker D(g)^(i-1))
/// divided by deg D.
fn jordan_partition(
    field: &Arc<FieldCtx>,
    g: &Matrix,
    delta: &MonicPoly,
    mult: u32,
) -> Partition {
    let n = g.n();
    let d = delta.degree();
    let dg = g.eval_poly(delta.coeffs(), field);
    let mut parts_ge = Vec::new();
    let mut power = dg.clone();
    let mut prev = 0usize;
    loop {
        let ker = n - power.rank(field);
        let diff = (ker - prev) / d;
        if diff == 0 {
            break;
        }
        parts_ge.push(diff as u32);
        prev = ker;
        power = power.mul(&dg, field);
    }
    let mut parts = Vec::new();
    if let Some(&num_parts) = parts_ge.first() {
        for j in 0..num_parts {
            let part = parts_ge.iter().filter(|&&x| x > j).count() as u32;
            parts.push(part);
        }
    }
    let lambda = Partition::new(parts);
    debug_assert_eq!(lambda.size(), mult);
    lambda
}

/// Multiplicative order of a group element by direct iteration.
fn element_order(group: &Group, g: &Matrix) -> u64 {
    let f = group.field();
    let id = Matrix::identity(g.n());
    let mut x = g.clone();
    let mut k = 1u64;
    while x != id {
        x = x.mul(g, f);
        k += 1;
        assert!(k <= group.order(), "element order divides the group order");
    }
    k
}

/// The class label of an element of GL/GU: elementary-divisor orbits with
/// their Jordan partitions.
pub fn label_of_element(group: &Group, g: &Matrix, caps: &Caps) -> Result<ClassLabel> {
    if group.spec().family.is_special() {
        return Err(Error::LabelUnsupported(
            group.spec().family.name().to_string(),
        ));
    }
    let field = group.field();
    let irr = irreducibles_up_to(field, g.n(), caps.max_poly_enum)?;
    let orbits = gamma_set(group.signed_q(), g.n(), caps.max_poly_enum)?;
    let orbit_map: BTreeMap<Vec<u32>, GammaOrbit> = orbits
        .into_iter()
        .map(|o| (o.poly().coeffs().to_vec(), o))
        .collect();
    label_from_factors(group, g, &irr, &orbit_map)
}

fn label_from_factors(
    group: &Group,
    g: &Matrix,
    irr_by_degree: &[Vec<MonicPoly>],
    orbit_map: &BTreeMap<Vec<u32>, GammaOrbit>,
) -> Result<ClassLabel> {
    let field = group.field();
    let sq = group.signed_q();
    let charpoly = g.charpoly(field);
    let factors = factor_monic(field, &charpoly, irr_by_degree);
    let mut pairs: Vec<(GammaOrbit, Partition)> = Vec::new();
    if sq.epsilon() > 0 {
        for (delta, mult) in &factors {
            let lambda = jordan_partition(field, g, delta, *mult);
            let orbit = orbit_map
                .get(delta.coeffs())
                .ok_or_else(|| Error::MalformedLabel(format!(
                    "no orbit for factor {}",
                    delta.display()
                )))?
                .clone();
            pairs.push((orbit, lambda));
        }
    } else {
        let tower = sq.tower();
        for (delta, mult) in &factors {
            let dt = tilde(tower, delta)?;
            if *delta == dt {
                let lambda = jordan_partition(field, g, delta, *mult);
                let orbit = orbit_map
                    .get(delta.coeffs())
                    .ok_or_else(|| Error::MalformedLabel(format!(
                        "no self-tilde orbit for {}",
                        delta.display()
                    )))?
                    .clone();
                pairs.push((orbit, lambda));
            } else if *delta < dt {
                let partner = factors
                    .iter()
                    .find(|(other, _)| *other == dt)
                    .ok_or_else(|| Error::MalformedLabel(
                        "tilde partner missing from the characteristic polynomial".into(),
                    ))?;
                if partner.1 != *mult {
                    return Err(Error::MalformedLabel(
                        "tilde partners with different multiplicities".into(),
                    ));
                }
                let lambda = jordan_partition(field, g, delta, *mult);
                debug_assert_eq!(lambda, jordan_partition(field, g, &dt, *mult));
                let prod = delta.mul(&dt);
                let orbit = orbit_map
                    .get(prod.coeffs())
                    .ok_or_else(|| Error::MalformedLabel(format!(
                        "no paired orbit for {}",
                        prod.display()
                    )))?
                    .clone();
                pairs.push((orbit, lambda));
            }
        }
    }
    ClassLabel::new(sq, pairs)
}

/// Classification of a single representative against its group, without
/// building the full class table.
pub fn classify_class(group: &Group, rep: &Matrix, caps: &Caps) -> Result<ClassFlags> {
    let field = group.field();
    let irr = irreducibles_up_to(field, group.n(), caps.max_poly_enum)?;
    let (flags, _centralizer) = classify_against(group, rep, &irr);
    let mut flags = flags;
    flags.srs0 = flags.strongly_regular && {
        let f = field;
        let n = group.n();
        let cells = n * n;
        let mut tmp = vec![0u32; cells];
        let mut out = vec![0u32; cells];
        group.center_scalars().iter().all(|&z| {
            if z == 1 {
                return true;
            }
            let target = rep.scalar_mul(z, f);
            // conjugate of rep equal to z*rep for some g?
            !(0..group.order() as usize).any(|g| {
                let gi = group
                    .matrix(g)
                    .inverse(f)
                    .expect("invertible");
                conj_into(f, n, group.element(g), rep.entries(), gi.entries(), &mut tmp, &mut out);
                out == *target.entries()
            })
        })
    };
    Ok(flags)
}

/// Everything classify needs except srs0: flags plus the centralizer order.
fn classify_against(
    group: &Group,
    rep: &Matrix,
    irr_by_degree: &[Vec<MonicPoly>],
) -> (ClassFlags, u64) {
    let field = group.field();
    let charpoly = rep.charpoly(field);
    let factors = factor_monic(field, &charpoly, irr_by_degree);
    let regular_semisimple = factors.iter().all(|&(_, m)| m == 1);
    // squarefree minimal polynomial: the radical annihilates the element
    let radical = factors
        .iter()
        .fold(vec![1u32], |acc, (d, _)| polyarith::mul(field, &acc, d.coeffs()));
    let ss_minpoly = rep.eval_poly(&radical, field).is_zero();
    // order route: semisimple iff the element order is coprime to p
    let order = element_order(group, rep);
    let ss_order = order % field.p() != 0;
    assert_eq!(
        ss_minpoly, ss_order,
        "squarefree-minimal-polynomial and order-coprime-to-p must agree"
    );
    // brute-force centralizer
    let mut centralizer: Vec<usize> = Vec::new();
    for h in 0..group.order() as usize {
        let hm = group.matrix(h);
        if hm.commutes_with(rep, field) {
            centralizer.push(h);
        }
    }
    let mut abelian = true;
    'outer: for (i, &a) in centralizer.iter().enumerate() {
        let am = group.matrix(a);
        for &b in centralizer.iter().skip(i + 1) {
            if !am.commutes_with(&group.matrix(b), field) {
                abelian = false;
                break 'outer;
            }
        }
    }
    let flags = ClassFlags {
        semisimple: ss_minpoly,
        regular_semisimple,
        strongly_regular: ss_minpoly && abelian,
        srs0: false,
    };
    (flags, centralizer.len() as u64)
}

/// Computes the full conjugacy class table with flags, labels and the
/// central action.
pub fn conjugacy_classes(group: &Group, caps: &Caps) -> Result<ClassTable> {
    let field = group.field();
    let n = group.n();
    let spec = *group.spec();
    let use_scan = group.order() <= FULL_SCAN_LIMIT
        || matches!(spec.family, Family::Gu | Family::Su);
    let (class_of, seeds) = if use_scan {
        partition_by_full_scan(group)
    } else {
        let gens = gl_generators(field, n, !spec.family.is_special());
        partition_by_generators(group, &gens)
    };
    let class_count = seeds.len();
    let mut sizes = vec![0u64; class_count];
    for &c in &class_of {
        assert_ne!(c, u32::MAX, "every element belongs to a class");
        sizes[c as usize] += 1;
    }
    assert_eq!(sizes.iter().sum::<u64>(), group.order());
    for &s in &sizes {
        assert_eq!(group.order() % s, 0, "class sizes divide the group order");
    }

    let irr = irreducibles_up_to(field, n, caps.max_poly_enum)?;
    let with_labels = !spec.family.is_special();
    let orbit_map: BTreeMap<Vec<u32>, GammaOrbit> = if with_labels {
        gamma_set(group.signed_q(), n, caps.max_poly_enum)?
            .into_iter()
            .map(|o| (o.poly().coeffs().to_vec(), o))
            .collect()
    } else {
        BTreeMap::new()
    };

    // central action on classes
    let mut central_action = BTreeMap::new();
    for z in group.center_scalars() {
        if z == 1 {
            continue;
        }
        let perm: Vec<usize> = seeds
            .iter()
            .map(|&seed| {
                let scaled = group.matrix(seed).scalar_mul(z, field);
                let idx = group
                    .index_of(scaled.entries())
                    .expect("central multiple stays in the group");
                class_of[idx] as usize
            })
            .collect();
        central_action.insert(z, perm);
    }

    let mut classes = Vec::with_capacity(class_count);
    for (c, &seed) in seeds.iter().enumerate() {
        let rep = group.matrix(seed);
        let (mut flags, centralizer_order) = classify_against(group, &rep, &irr);
        assert_eq!(
            sizes[c] * centralizer_order,
            group.order(),
            "orbit-stabilizer check for {}",
            spec.display()
        );
        flags.srs0 = flags.strongly_regular
            && central_action.values().all(|perm| perm[c] != c);
        let label = if with_labels {
            Some(label_from_factors(group, &rep, &irr, &orbit_map)?)
        } else {
            None
        };
        classes.push(ClassInfo {
            rep,
            size: sizes[c],
            centralizer_order,
            flags,
            label,
        });
    }

    // flag chain: srs0 => strongly_regular => regular_semisimple => semisimple
    for info in &classes {
        let f = &info.flags;
        assert!(!f.srs0 || f.strongly_regular);
        assert!(!f.strongly_regular || f.semisimple);
        if !spec.family.is_special() {
            assert_eq!(
                f.strongly_regular, f.regular_semisimple,
                "connected centralizers make strongly regular = regular in GL/GU"
            );
        }
        assert!(!f.regular_semisimple || f.semisimple);
    }

    Ok(ClassTable {
        spec,
        sq: group.signed_q().clone(),
        group_order: group.order(),
        classes,
        central_action,
    })
}

/// Aggregated counts for one group: everything the acceptance suite
/// compares against the symbolic census.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub group: String,
    pub family: String,
    pub n: usize,
    pub q: u64,
    pub order: u64,
    pub class_count: u64,
    pub semisimple: u64,
    pub regular_semisimple: u64,
    pub strongly_regular: u64,
    pub srs0: u64,
    pub class_sizes: Vec<u64>,
    pub fixed_classes_by_k: BTreeMap<u64, u64>,
}

pub fn oracle_report(spec: &GroupSpec, caps: &Caps) -> Result<OracleReport> {
    let group = build_group(spec, caps)?;
    let table = conjugacy_classes(&group, caps)?;
    Ok(report_from_table(&table))
}

pub fn report_from_table(table: &ClassTable) -> OracleReport {
    let mut class_sizes: Vec<u64> = table.classes().iter().map(|c| c.size).collect();
    class_sizes.sort_unstable();
    OracleReport {
        group: table.spec().display(),
        family: table.spec().family.name().to_string(),
        n: table.spec().n,
        q: table.spec().q,
        order: table.group_order(),
        class_count: table.class_count(),
        semisimple: table.count_with(|f| f.semisimple),
        regular_semisimple: table.count_with(|f| f.regular_semisimple),
        strongly_regular: table.count_with(|f| f.strongly_regular),
        srs0: table.count_with(|f| f.srs0),
        class_sizes,
        fixed_classes_by_k: table.fixed_classes_by_k(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }
    fn spec(family: Family, n: usize, q: u64) -> GroupSpec {
        GroupSpec::new(family, n, q)
    }

    #[test]
    fn group_orders() {
        assert_eq!(spec(Family::Gl, 2, 2).order().unwrap(), 6);
        assert_eq!(spec(Family::Gl, 2, 3).order().unwrap(), 48);
        assert_eq!(spec(Family::Gl, 3, 2).order().unwrap(), 168);
        assert_eq!(spec(Family::Sl, 2, 3).order().unwrap(), 24);
        assert_eq!(spec(Family::Gu, 2, 2).order().unwrap(), 18);
        assert_eq!(spec(Family::Gu, 2, 3).order().unwrap(), 96);
        assert_eq!(spec(Family::Gu, 3, 2).order().unwrap(), 648);
        assert_eq!(spec(Family::Su, 2, 3).order().unwrap(), 24);
    }

    #[test]
    fn build_small_groups() {
        for s in [
            spec(Family::Gl, 2, 2),
            spec(Family::Gl, 2, 3),
            spec(Family::Sl, 2, 3),
            spec(Family::Gu, 2, 2),
        ] {
            let g = build_group(&s, &caps()).unwrap();
            assert_eq!(g.order(), s.order().unwrap(), "{}", s.display());
            // identity present and found
            let id = Matrix::identity(s.n);
            assert!(g.contains(&id));
        }
    }

    #[test]
    fn class_counts_match_known_values() {
        let cases = [
            (spec(Family::Gl, 2, 2), 3u64),
            (spec(Family::Gl, 2, 3), 8),
            (spec(Family::Sl, 2, 3), 7),
            (spec(Family::Sl, 2, 5), 9),
            (spec(Family::Gu, 2, 2), 9),
            (spec(Family::Su, 2, 3), 7),
        ];
        for (s, expected) in cases {
            let g = build_group(&s, &caps()).unwrap();
            let t = conjugacy_classes(&g, &caps()).unwrap();
            assert_eq!(t.class_count(), expected, "{}", s.display());
        }
    }

    #[test]
    fn gl2_3_class_sizes() {
        let g = build_group(&spec(Family::Gl, 2, 3), &caps()).unwrap();
        let t = conjugacy_classes(&g, &caps()).unwrap();
        let mut sizes: Vec<u64> = t.classes().iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 6, 6, 6, 8, 8, 12]);
    }

    #[test]
    fn scan_and_bfs_agree() {
        let g = build_group(&spec(Family::Gl, 2, 3), &caps()).unwrap();
        let (scan_cls, scan_seeds) = partition_by_full_scan(&g);
        let gens = gl_generators(g.field(), 2, true);
        let (bfs_cls, bfs_seeds) = partition_by_generators(&g, &gens);
        assert_eq!(scan_seeds, bfs_seeds);
        assert_eq!(scan_cls, bfs_cls);
        // SL path exercises the no-diagonal generating set
        let s = build_group(&spec(Family::Sl, 2, 3), &caps()).unwrap();
        let (a, sa) = partition_by_full_scan(&s);
        let sl_gens = gl_generators(s.field(), 2, false);
        let (b, sb) = partition_by_generators(&s, &sl_gens);
        assert_eq!(sa, sb);
        assert_eq!(a, b);
    }

    #[test]
    fn classify_identity_and_unipotent() {
        let g = build_group(&spec(Family::Gl, 2, 3), &caps()).unwrap();
        let id = Matrix::identity(2);
        let f = classify_class(&g, &id, &caps()).unwrap();
        assert!(f.semisimple && !f.regular_semisimple && !f.strongly_regular);
        let unipotent = Matrix::new(2, vec![1, 1, 0, 1]);
        let f = classify_class(&g, &unipotent, &caps()).unwrap();
        assert!(!f.semisimple && !f.regular_semisimple);
        // diag(1, 2): regular and strongly regular but not srs0
        let d = Matrix::new(2, vec![1, 0, 0, 2]);
        let f = classify_class(&g, &d, &caps()).unwrap();
        assert!(f.semisimple && f.regular_semisimple && f.strongly_regular && !f.srs0);
    }

    #[test]
    fn gl2_3_oracle_report_values() {
        let r = oracle_report(&spec(Family::Gl, 2, 3), &caps()).unwrap();
        assert_eq!(r.order, 48);
        assert_eq!(r.class_count, 8);
        assert_eq!(r.semisimple, 6);
        assert_eq!(r.regular_semisimple, 4);
        assert_eq!(r.strongly_regular, 4);
        assert_eq!(r.srs0, 2);
        assert_eq!(r.fixed_classes_by_k.get(&2), Some(&2));
        assert_eq!(r.fixed_classes_by_k.get(&1), Some(&8));
    }

    #[test]
    fn gl2_2_oracle_report_values() {
        let r = oracle_report(&spec(Family::Gl, 2, 2), &caps()).unwrap();
        assert_eq!(r.order, 6);
        assert_eq!(r.class_count, 3);
        assert_eq!(r.semisimple, 2);
        // q - eps = 1: only k = 1
        assert_eq!(r.fixed_classes_by_k.len(), 1);
        // the single regular-semisimple class is the 3-cycle class
        assert_eq!(r.regular_semisimple, 1);
    }

    #[test]
    fn gu2_2_oracle_report_values() {
        let r = oracle_report(&spec(Family::Gu, 2, 2), &caps()).unwrap();
        assert_eq!(r.order, 18);
        assert_eq!(r.class_count, 9);
        assert_eq!(r.semisimple, 6);
        // k = 3 count equals c_{2,3}(q) at eps=-1, q=2: zero since 3 does not divide 2
        assert_eq!(r.fixed_classes_by_k.get(&3), Some(&0));
    }

    #[test]
    fn label_examples() {
        let g = build_group(&spec(Family::Gl, 2, 3), &caps()).unwrap();
        let id = Matrix::identity(2);
        let l = label_of_element(&g, &id, &caps()).unwrap();
        assert_eq!(l.display(), "{X + 2 -> (1,1)}");
        let unipotent = Matrix::new(2, vec![1, 1, 0, 1]);
        let l = label_of_element(&g, &unipotent, &caps()).unwrap();
        assert_eq!(l.display(), "{X + 2 -> (2)}");
        let companion = Matrix::new(2, vec![0, 2, 1, 0]);
        let l = label_of_element(&g, &companion, &caps()).unwrap();
        assert_eq!(l.display(), "{X^2 + 1 -> (1)}");
    }

    #[test]
    fn labels_reject_special_families() {
        let g = build_group(&spec(Family::Sl, 2, 3), &caps()).unwrap();
        let id = Matrix::identity(2);
        assert!(matches!(
            label_of_element(&g, &id, &caps()),
            Err(Error::LabelUnsupported(_))
        ));
    }

    #[test]
    fn cap_errors() {
        let mut tight = caps();
        tight.max_group_order = 10;
        assert!(matches!(
            build_group(&spec(Family::Gl, 2, 3), &tight),
            Err(Error::CapExceeded { .. })
        ));
        let mut tiny = caps();
        tiny.max_candidates = 10;
        assert!(matches!(
            build_group(&spec(Family::Gl, 2, 3), &tiny),
            Err(Error::CapExceeded { .. })
        ));
    }
}
