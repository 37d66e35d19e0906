//! The symbolic counting core: class labels, the counting polynomials
//! c_{nu,k}(q) and c_{n,k}(q), the semisimple / regular / srs0 censuses,
//! the restricted-character count, and the exact ratio reports.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::factorize;
use crate::intpoly::{ExactRatio, IntPoly};
use crate::partitions::{self, enum_partitions, Partition, TypeVector};
use crate::polyspace::{gamma_set, twist, GammaOrbit, Poly, SignedQ};
use crate::Caps;

/// A class label: a finitely supported map from orbits to partitions with
/// total weighted size n. Labels parametrize both the conjugacy classes and
/// the irreducible characters of GL_n(eps q).
#[derive(Clone, PartialEq, Eq)]
pub struct ClassLabel {
    sq: SignedQ,
    /// Sorted by orbit; partitions are nonempty.
    pairs: Vec<(GammaOrbit, Partition)>,
}

impl std::fmt::Debug for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl PartialOrd for ClassLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for ClassLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl ClassLabel {
    pub fn new(sq: &SignedQ, mut pairs: Vec<(GammaOrbit, Partition)>) -> Result<ClassLabel> {
        pairs.retain(|(_, lambda)| !lambda.is_empty());
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::MalformedLabel(
                    "orbit appears twice in the support".into(),
                ));
            }
        }
        Ok(ClassLabel {
            sq: sq.clone(),
            pairs,
        })
    }

    pub fn signed_q(&self) -> &SignedQ {
        &self.sq
    }

    pub fn pairs(&self) -> &[(GammaOrbit, Partition)] {
        &self.pairs
    }

    /// The weighted size sum |lambda_Gamma| * deg Gamma.
    pub fn n(&self) -> usize {
        self.pairs
            .iter()
            .map(|(g, l)| g.degree() * l.size() as usize)
            .sum()
    }

    /// All parts equal to 1 with multiplicity deg: the semisimple labels.
    pub fn is_semisimple(&self) -> bool {
        self.pairs
            .iter()
            .all(|(_, l)| l.parts().iter().all(|&p| p == 1))
    }

    /// Every orbit multiplicity at most 1.
    pub fn is_regular_semisimple(&self) -> bool {
        self.pairs.iter().all(|(_, l)| l.parts() == [1])
    }

    /// The u_i sequence: u_i = prod reversal(P_Gamma)^(m_i(lambda_Gamma)).
    pub fn u_polys(&self) -> Vec<Poly> {
        partitions::u_polys(self.pairs.iter().map(|(g, l)| (g.poly(), l)))
    }

    /// The type nu with n_i = deg u_i.
    pub fn type_of(&self) -> TypeVector {
        if self.pairs.is_empty() {
            return TypeVector::new(Vec::new());
        }
        partitions::type_of_u_polys(&self.u_polys())
    }

    /// The label z . self with every orbit twisted; partitions ride along.
    pub fn twist(&self, z: u32) -> Result<ClassLabel> {
        let pairs = self
            .pairs
            .iter()
            .map(|(g, l)| Ok((twist(&self.sq, z, g)?, l.clone())))
            .collect::<Result<Vec<_>>>()?;
        ClassLabel::new(&self.sq, pairs)
    }

    fn sort_key(&self) -> Vec<(usize, Vec<u32>, Vec<u32>)> {
        self.pairs
            .iter()
            .map(|(g, l)| {
                (
                    g.degree(),
                    g.poly().coeffs().to_vec(),
                    l.parts().to_vec(),
                )
            })
            .collect()
    }

    pub fn display(&self) -> String {
        if self.pairs.is_empty() {
            return "{}".to_string();
        }
        let body: Vec<String> = self
            .pairs
            .iter()
            .map(|(g, l)| format!("{} -> {}", g.poly().display(), l.display()))
            .collect();
        format!("{{{}}}", body.join(", "))
    }
}

/// All class labels of weighted size n, in deterministic order. The count
/// equals c_n(q) evaluated at (q, eps).
pub fn enumerate_class_labels(n: usize, sq: &SignedQ, caps: &Caps) -> Result<Vec<ClassLabel>> {
    let orbits = gamma_set(sq, n.max(1), caps.max_poly_enum)?;
    let mut out = Vec::new();
    let mut acc: Vec<(GammaOrbit, Partition)> = Vec::new();
    fn rec(
        orbits: &[GammaOrbit],
        idx: usize,
        remaining: usize,
        acc: &mut Vec<(GammaOrbit, Partition)>,
        out: &mut Vec<ClassLabel>,
        sq: &SignedQ,
        cap: u64,
    ) -> Result<()> {
        if remaining == 0 {
            if out.len() as u64 >= cap {
                return Err(Error::CapExceeded {
                    what: "label enumeration",
                    needed: out.len() as u64 + 1,
                    cap,
                });
            }
            out.push(ClassLabel::new(sq, acc.clone())?);
            return Ok(());
        }
        if idx == orbits.len() {
            return Ok(());
        }
        let d = orbits[idx].degree();
        // weight 0 first, then increasing weights with partitions in order
        rec(orbits, idx + 1, remaining, acc, out, sq, cap)?;
        for w in 1..=(remaining / d) as u32 {
            for lambda in enum_partitions(w) {
                acc.push((orbits[idx].clone(), lambda));
                rec(orbits, idx + 1, remaining - w as usize * d, acc, out, sq, cap)?;
                acc.pop();
            }
        }
        Ok(())
    }
    rec(&orbits, 0, n, &mut acc, &mut out, sq, caps.max_labels)?;
    out.sort();
    Ok(out)
}

/// The number of degree-n_i polynomials admissible at level k: zero unless
/// k | n_i, else q^(n_i/k) - eps q^(n_i/k - 1).
fn u_count_poly(n_i: u64, k: u64, eps: i8) -> IntPoly {
    if n_i == 0 {
        return IntPoly::one();
    }
    if n_i % k != 0 {
        return IntPoly::zero();
    }
    let d = (n_i / k) as usize;
    let lead = IntPoly::monomial(1, d);
    if d == 0 {
        unreachable!("n_i > 0 and k | n_i imply d >= 1");
    }
    lead.sub(&IntPoly::monomial(eps as i128, d - 1))
}

/// c_{nu,k}(q): the product over nonzero n_i of (q^(n_i/k) - eps q^(n_i/k-1)),
/// or zero when some n_i is not divisible by k.
pub fn c_nu_k(nu: &TypeVector, k: u64, eps: i8) -> IntPoly {
    assert!(k >= 1);
    let mut acc = IntPoly::one();
    for &n_i in nu.multiplicities() {
        if n_i == 0 {
            continue;
        }
        let f = u_count_poly(n_i, k, eps);
        if f.is_zero() {
            return IntPoly::zero();
        }
        acc = acc.mul(&f);
    }
    acc
}

/// c_{n,k}(q) = sum over types of size n of c_{nu,k}(q). Zero when k does
/// not divide n; leading term q^(n/k) when it does.
pub fn c_n_k(n: u64, k: u64, eps: i8) -> IntPoly {
    assert!(k >= 1);
    let mut acc = IntPoly::zero();
    for p in enum_partitions(n as u32) {
        let nu = TypeVector::from_partition(&p);
        acc = acc.add(&c_nu_k(&nu, k, eps));
    }
    acc
}

/// c_n(q) = c_{n,1}(q), the class / character count of GL_n(eps q).
pub fn c_n(n: u64, eps: i8) -> IntPoly {
    c_n_k(n, 1, eps)
}

/// Multiset of orbit degrees, as (degree, count) pairs.
fn degree_census(sq: &SignedQ, n: usize, caps: &Caps) -> Result<BTreeMap<usize, u64>> {
    let mut counts = BTreeMap::new();
    for orbit in gamma_set(sq, n.max(1), caps.max_poly_enum)? {
        *counts.entry(orbit.degree()).or_insert(0u64) += 1;
    }
    Ok(counts)
}

/// Number of semisimple classes, both enumerated from the orbit census and
/// as the symbolic value (q - eps) q^(n-1).
pub fn count_semisimple(n: usize, sq: &SignedQ, caps: &Caps) -> Result<(i128, IntPoly)> {
    assert!(n >= 1);
    // coefficient of t^n in prod over degrees (1 - t^d)^(-N_d)
    let mut dp = vec![0i128; n + 1];
    dp[0] = 1;
    for (&d, &count) in degree_census(sq, n, caps)?.iter() {
        for _ in 0..count {
            // multiply by 1/(1 - t^d): prefix-sum recurrence
            for j in d..=n {
                dp[j] += dp[j - d];
            }
        }
    }
    let symbolic =
        IntPoly::monomial(1, n).sub(&IntPoly::monomial(sq.epsilon() as i128, n - 1));
    Ok((dp[n], symbolic))
}

/// Number of regular-semisimple classes: the coefficient of t^n in
/// prod over degrees (1 + t^d)^(N_d).
pub fn count_regular_semisimple(n: usize, sq: &SignedQ, caps: &Caps) -> Result<i128> {
    let mut dp = vec![0i128; n + 1];
    dp[0] = 1;
    for (&d, &count) in degree_census(sq, n, caps)?.iter() {
        for _ in 0..count {
            for j in (d..=n).rev() {
                dp[j] += dp[j - d];
            }
        }
    }
    Ok(dp[n])
}

/// Number of regular-semisimple labels not fixed by any nontrivial central
/// twist: the srs0 census. Enumeration-based; no closed formula is used.
pub fn count_srs0(n: usize, sq: &SignedQ, caps: &Caps) -> Result<u64> {
    let orbits = gamma_set(sq, n.max(1), caps.max_poly_enum)?;
    let index: BTreeMap<&GammaOrbit, usize> =
        orbits.iter().enumerate().map(|(i, o)| (o, i)).collect();
    // twist permutations for every nontrivial central element
    let mut perms = Vec::new();
    for &z in &sq.central_elements() {
        if z == 1 {
            continue;
        }
        let perm: Vec<usize> = orbits
            .iter()
            .map(|o| {
                let t = twist(sq, z, o)?;
                Ok(*index.get(&t).expect("twist permutes the orbit set"))
            })
            .collect::<Result<Vec<usize>>>()?;
        perms.push(perm);
    }

    let mut count = 0u64;
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        orbits: &[GammaOrbit],
        perms: &[Vec<usize>],
        idx: usize,
        remaining: usize,
        chosen: &mut Vec<usize>,
        count: &mut u64,
    ) {
        if remaining == 0 {
            let fixed_by_some = perms.iter().any(|perm| {
                chosen.iter().all(|&i| chosen.binary_search(&perm[i]).is_ok())
            });
            if !fixed_by_some {
                *count += 1;
            }
            return;
        }
        if idx == orbits.len() {
            return;
        }
        rec(orbits, perms, idx + 1, remaining, chosen, count);
        let d = orbits[idx].degree();
        if d <= remaining {
            chosen.push(idx);
            rec(orbits, perms, idx + 1, remaining - d, chosen, count);
            chosen.pop();
        }
    }
    rec(&orbits, &perms, 0, n, &mut chosen, &mut count);
    Ok(count)
}

/// |Irr_r|: characters whose restriction to the derived subgroup is
/// reducible, by inclusion-exclusion over squarefree divisors d > 1 of
/// gcd(n, q - eps), using Irr_{k1} ∩ Irr_{k2} = Irr_{lcm}.
pub fn irr_r_count(n: u64, sq: &SignedQ) -> i128 {
    let g = num_integer::gcd(n, sq.q_minus_eps());
    let primes: Vec<u64> = factorize(g).into_iter().map(|(p, _)| p).collect();
    let mut total = 0i128;
    for mask in 1u32..(1 << primes.len()) {
        let d: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .product();
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        total += sign * c_n_k(n, d, sq.epsilon()).eval(sq.q() as i128);
    }
    total
}

/// Exact ratio report for one group: the Theorem A/B/C quantities at a
/// concrete (n, q, eps). Every ratio is an exact rational in (0, 1].
#[derive(Clone, Debug, Serialize)]
pub struct RatioReport {
    pub family: String,
    pub n: usize,
    pub q: u64,
    pub epsilon: i8,
    /// c_n(q): the number of classes = number of irreducible characters.
    pub class_count: i128,
    pub irr_r: i128,
    pub semisimple: i128,
    pub regular_semisimple: i128,
    /// Equal to `regular_semisimple` for GL/GU; kept separate because the
    /// oracle asserts the flag equality rather than assuming it.
    pub strongly_regular: i128,
    pub srs0: i128,
    /// (q - eps) q^(n-1): the center order times q to the semisimple rank.
    pub center_times_ql: i128,
    /// Fraction of characters that stay irreducible on restriction.
    pub ratio_a: ExactRatio,
    /// Semisimple class count over (q - eps) q^(n-1); identically 1.
    pub ratio_b_semisimple: ExactRatio,
    /// Regular-semisimple class count over (q - eps) q^(n-1).
    pub ratio_b_regular: ExactRatio,
    /// Strongly-regular class count over (q - eps) q^(n-1).
    pub ratio_b_strongly_regular: ExactRatio,
    /// (q - eps) q^(n-1) over c_n(q).
    pub ratio_c: ExactRatio,
}

/// Assembles the exact Theorem A/B/C numerics for GL_n(eps q).
pub fn theorem_ratios(n: usize, sq: &SignedQ, caps: &Caps) -> Result<RatioReport> {
    assert!(n >= 1);
    let q = sq.q() as i128;
    let class_count = c_n(n as u64, sq.epsilon()).eval(q);
    let irr_r = irr_r_count(n as u64, sq);
    let (ss_enum, ss_sym) = count_semisimple(n, sq, caps)?;
    debug_assert_eq!(ss_enum, ss_sym.eval(q));
    let rs = count_regular_semisimple(n, sq, caps)?;
    let srs = rs; // strongly regular = regular semisimple in GL/GU
    let srs0 = count_srs0(n, sq, caps)? as i128;
    let zql = ss_sym.eval(q);
    Ok(RatioReport {
        family: if sq.epsilon() > 0 { "GL" } else { "GU" }.to_string(),
        n,
        q: sq.q(),
        epsilon: sq.epsilon(),
        class_count,
        irr_r,
        semisimple: ss_enum,
        regular_semisimple: rs,
        strongly_regular: srs,
        srs0: srs0 as i128,
        center_times_ql: zql,
        ratio_a: ExactRatio::new(class_count - irr_r, class_count),
        ratio_b_semisimple: ExactRatio::new(ss_enum, zql),
        ratio_b_regular: ExactRatio::new(rs, zql),
        ratio_b_strongly_regular: ExactRatio::new(srs, zql),
        ratio_c: ExactRatio::new(zql, class_count),
    })
}

/// Predicted number of irreducible characters of SL_ell(eps q) for a prime
/// ell dividing q - eps, assembled from the restriction statistics: each of
/// the (c_ell(q) - (q-eps))/(q-eps) free twist orbits contributes one
/// character, and the ell fixed orbits contribute ell constituents each.
pub fn sl_irr_prediction(ell: u64, sq: &SignedQ) -> Result<i128> {
    let is_prime = ell >= 2 && factorize(ell).len() == 1 && factorize(ell)[0].1 == 1;
    if !is_prime || sq.q_minus_eps() % ell != 0 {
        return Err(Error::BadEllPrime(ell));
    }
    let c = c_n(ell, sq.epsilon()).eval(sq.q() as i128);
    let m = sq.q_minus_eps() as i128;
    let free = c - m;
    assert!(free >= 0 && free % m == 0, "free orbits have full size");
    Ok(free / m + (ell * ell) as i128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl(q: u64) -> SignedQ {
        SignedQ::new(q, 1).unwrap()
    }
    fn gu(q: u64) -> SignedQ {
        SignedQ::new(q, -1).unwrap()
    }
    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn label_counts_match_c_n() {
        // GL_1(2) is trivial: one label
        assert_eq!(enumerate_class_labels(1, &gl(2), &caps()).unwrap().len(), 1);
        // GL_2(3) has 8 classes
        assert_eq!(enumerate_class_labels(2, &gl(3), &caps()).unwrap().len(), 8);
        // GU_2(2) has 9 classes
        assert_eq!(enumerate_class_labels(2, &gu(2), &caps()).unwrap().len(), 9);
    }

    #[test]
    fn label_counts_match_symbolic_for_small_cases() {
        for (n, sq) in [
            (1usize, gl(2)),
            (2, gl(2)),
            (3, gl(2)),
            (1, gl(3)),
            (2, gl(3)),
            (3, gl(3)),
            (2, gl(5)),
            (1, gu(2)),
            (2, gu(2)),
            (3, gu(2)),
            (2, gu(3)),
        ] {
            let labels = enumerate_class_labels(n, &sq, &caps()).unwrap();
            let expected = c_n(n as u64, sq.epsilon()).eval(sq.q() as i128);
            assert_eq!(labels.len() as i128, expected, "n={n} {sq:?}");
            // labels are pairwise distinct and sorted
            for w in labels.windows(2) {
                assert!(w[0] < w[1]);
            }
            for l in &labels {
                assert_eq!(l.n(), n);
            }
        }
    }

    #[test]
    fn c_nu_k_paper_values() {
        // nu = (1^2), k = 2, eps = +1: single factor q - 1
        let nu = TypeVector::new(vec![2]);
        assert_eq!(c_nu_k(&nu, 2, 1), IntPoly::new(vec![-1, 1]));
        // nu = (2), k = 2: zero since k does not divide n_2 = 1
        let nu2 = TypeVector::new(vec![0, 1]);
        assert!(c_nu_k(&nu2, 2, 1).is_zero());
        // nu = (1), k = 1: q - 1
        let nu3 = TypeVector::new(vec![1]);
        assert_eq!(c_nu_k(&nu3, 1, 1), IntPoly::new(vec![-1, 1]));
    }

    #[test]
    fn c_n_k_examples() {
        assert_eq!(c_n_k(2, 1, 1), IntPoly::new(vec![-1, 0, 1])); // q^2 - 1
        assert_eq!(c_n_k(2, 1, 1).eval(2), 3);
        assert_eq!(c_n_k(2, 1, 1).eval(3), 8);
        assert_eq!(c_n_k(2, 2, 1), IntPoly::new(vec![-1, 1])); // q - 1
        assert!(c_n_k(3, 2, 1).is_zero());
        assert_eq!(c_n_k(2, 1, -1), IntPoly::new(vec![1, 2, 1])); // (q+1)^2
        assert_eq!(c_n_k(2, 2, -1), IntPoly::new(vec![1, 1])); // q + 1
        assert_eq!(c_n_k(3, 3, -1), IntPoly::new(vec![1, 1])); // q + 1
    }

    #[test]
    fn semisimple_counts() {
        let (count, sym) = count_semisimple(2, &gl(3), &caps()).unwrap();
        assert_eq!(count, 6);
        assert_eq!(sym.eval(3), 6);
        let (count, sym) = count_semisimple(1, &gl(5), &caps()).unwrap();
        assert_eq!(count, 4);
        assert_eq!(sym.eval(5), 4);
        let (count, sym) = count_semisimple(2, &gu(2), &caps()).unwrap();
        assert_eq!(count, 6);
        assert_eq!(sym.eval(2), 6);
    }

    #[test]
    fn semisimple_enumerated_equals_symbolic_widely() {
        for sq in [gl(2), gl(3), gl(4), gl(5), gu(2), gu(3), gu(4)] {
            for n in 1..=4usize {
                let (count, sym) = count_semisimple(n, &sq, &caps()).unwrap();
                assert_eq!(count, sym.eval(sq.q() as i128), "n={n} {sq:?}");
            }
        }
    }

    #[test]
    fn regular_semisimple_counts() {
        assert_eq!(count_regular_semisimple(2, &gl(3), &caps()).unwrap(), 4);
        assert_eq!(count_regular_semisimple(1, &gl(7), &caps()).unwrap(), 6);
        // the q = 2 case the oracle reconciles: exactly one
        assert_eq!(count_regular_semisimple(2, &gl(2), &caps()).unwrap(), 1);
    }

    #[test]
    fn srs0_counts() {
        assert_eq!(count_srs0(2, &gl(3), &caps()).unwrap(), 2);
        assert_eq!(count_srs0(1, &gl(2), &caps()).unwrap(), 1);
        // q - eps = 1: no nontrivial central element, so srs0 = regular count
        assert_eq!(
            count_srs0(2, &gl(2), &caps()).unwrap() as i128,
            count_regular_semisimple(2, &gl(2), &caps()).unwrap()
        );
    }

    #[test]
    fn census_chain_is_monotone() {
        for sq in [gl(2), gl(3), gl(5), gu(2), gu(3)] {
            for n in 1..=3usize {
                let srs0 = count_srs0(n, &sq, &caps()).unwrap() as i128;
                let rs = count_regular_semisimple(n, &sq, &caps()).unwrap();
                let (ss, _) = count_semisimple(n, &sq, &caps()).unwrap();
                let all = c_n(n as u64, sq.epsilon()).eval(sq.q() as i128);
                assert!(srs0 <= rs && rs <= ss && ss <= all, "n={n} {sq:?}");
            }
        }
    }

    #[test]
    fn irr_r_values() {
        assert_eq!(irr_r_count(2, &gl(3)), 2);
        assert_eq!(irr_r_count(3, &gl(3)), 0);
        assert_eq!(irr_r_count(2, &gu(3)), 4);
        // gcd(2, q-1) = 1 for q = 2
        assert_eq!(irr_r_count(2, &gl(2)), 0);
    }

    #[test]
    fn irr_r_inclusion_exclusion_multi_prime() {
        // n = 6, q = 7: gcd(6, 6) = 6 has primes {2, 3}
        let sq = gl(7);
        let expected = c_n_k(6, 2, 1).eval(7) + c_n_k(6, 3, 1).eval(7)
            - c_n_k(6, 6, 1).eval(7);
        assert_eq!(irr_r_count(6, &sq), expected);
    }

    #[test]
    fn leading_term_law() {
        for n in 1..=8u64 {
            for k in 1..=n {
                if n % k != 0 {
                    continue;
                }
                for eps in [1i8, -1] {
                    let f = c_n_k(n, k, eps).sub(&IntPoly::monomial(1, (n / k) as usize));
                    let bound = (n / k) as usize;
                    assert!(
                        f.degree().map_or(true, |d| d < bound),
                        "n={n} k={k} eps={eps}"
                    );
                }
            }
        }
    }

    #[test]
    fn c_ell_ell_is_q_minus_eps() {
        for ell in [2u64, 3, 5] {
            assert_eq!(c_n_k(ell, ell, 1), IntPoly::new(vec![-1, 1]));
            assert_eq!(c_n_k(ell, ell, -1), IntPoly::new(vec![1, 1]));
        }
    }

    #[test]
    fn sum_over_types_matches_label_count() {
        for (n, sq) in [(2usize, gl(3)), (3, gl(2)), (2, gu(3)), (3, gu(2))] {
            let labels = enumerate_class_labels(n, &sq, &caps()).unwrap();
            let mut per_type: BTreeMap<Vec<u64>, i128> = BTreeMap::new();
            for l in &labels {
                *per_type
                    .entry(l.type_of().multiplicities().to_vec())
                    .or_insert(0) += 1;
            }
            for p in enum_partitions(n as u32) {
                let nu = TypeVector::from_partition(&p);
                let expected = c_nu_k(&nu, 1, sq.epsilon()).eval(sq.q() as i128);
                let got = per_type
                    .get(nu.multiplicities())
                    .copied()
                    .unwrap_or(0);
                assert_eq!(got, expected, "nu={} {sq:?}", nu.display());
            }
        }
    }

    #[test]
    fn type_is_twist_invariant() {
        for sq in [gl(3), gl(5), gu(3)] {
            let labels = enumerate_class_labels(2, &sq, &caps()).unwrap();
            for l in &labels {
                for &z in &sq.central_elements() {
                    assert_eq!(l.twist(z).unwrap().type_of(), l.type_of());
                }
            }
        }
    }

    #[test]
    fn ratio_examples() {
        let r = theorem_ratios(2, &gl(3), &caps()).unwrap();
        assert_eq!(r.ratio_c, ExactRatio::new(3, 4));
        assert_eq!(r.ratio_a, ExactRatio::new(6, 8));
        assert!(r.ratio_b_semisimple.is_one());
        let r1 = theorem_ratios(1, &gl(5), &caps()).unwrap();
        assert!(r1.ratio_a.is_one());
        assert!(r1.ratio_b_regular.is_one());
        assert!(r1.ratio_c.is_one());
    }

    #[test]
    fn ratio_monotone_in_q() {
        // GL_2 across admissible odd q plus rB/rC at q = 2
        let qs = [2u64, 3, 4, 5, 7, 8, 9];
        let mut prev_b: Option<ExactRatio> = None;
        let mut prev_c: Option<ExactRatio> = None;
        for &q in &qs {
            let r = theorem_ratios(2, &gl(q), &caps()).unwrap();
            if let Some(p) = prev_b {
                assert!(r.ratio_b_regular >= p, "rB at q={q}");
            }
            if let Some(p) = prev_c {
                assert!(r.ratio_c >= p, "rC at q={q}");
            }
            prev_b = Some(r.ratio_b_regular);
            prev_c = Some(r.ratio_c);
            // rC = q/(q+1) exactly for GL_2
            assert_eq!(r.ratio_c, ExactRatio::new(q as i128, q as i128 + 1));
            // each ratio >= 1 - C/q with C = 1 here
            assert!(r.ratio_c >= ExactRatio::new(q as i128 - 1, q as i128));
            assert!(r.ratio_b_regular >= ExactRatio::new(q as i128 - 1, q as i128));
        }
        // rA over admissible q only (gcd(2, q-1) > 1)
        let mut prev_a: Option<ExactRatio> = None;
        for &q in &[3u64, 5, 7, 9] {
            let r = theorem_ratios(2, &gl(q), &caps()).unwrap();
            if let Some(p) = prev_a {
                assert!(r.ratio_a >= p, "rA at q={q}");
            }
            prev_a = Some(r.ratio_a);
        }
    }

    #[test]
    fn sl_predictions() {
        assert_eq!(sl_irr_prediction(2, &gl(3)).unwrap(), 7);
        assert_eq!(sl_irr_prediction(2, &gl(5)).unwrap(), 9);
        assert_eq!(sl_irr_prediction(2, &gu(3)).unwrap(), 7);
        assert!(sl_irr_prediction(4, &gl(5)).is_err()); // not prime
        assert!(sl_irr_prediction(3, &gl(5)).is_err()); // 3 does not divide 4
    }
}
