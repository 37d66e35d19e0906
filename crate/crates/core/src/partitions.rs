//! Integer partitions, multiplicity accessors, the u_i polynomials attached
//! to a class label, and the type vector read off from their degrees.

use crate::polyspace::{MonicPoly, Poly};

/// A partition: weakly decreasing positive parts. The empty partition of 0
/// is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Partition {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// One row of size m, i.e. the partition (m); the empty partition for 0.
    pub fn row(m: u32) -> Partition {
        if m == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![m] }
        }
    }

    /// m ones, i.e. (1^m).
    pub fn ones(m: u32) -> Partition {
        Partition {
            parts: vec![1; m as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn max_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// m_i: the multiplicity of i among the parts.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    pub fn display(&self) -> String {
        format!("{self:?}")
    }
}

/// All partitions of n, in the deterministic first-part-descending order:
/// (n), (n-1,1), ..., (1^n).
pub fn enum_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for first in (1..=top).rev() {
            current.push(first);
            rec(remaining - first, first, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// The type vector nu = (1^{n_1} 2^{n_2} ...): entry i-1 holds n_i, the
/// number of parts equal to i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TypeVector {
    mult: Vec<u64>,
}

impl TypeVector {
    pub fn new(mult: Vec<u64>) -> TypeVector {
        let mut mult = mult;
        while mult.last() == Some(&0) {
            mult.pop();
        }
        TypeVector { mult }
    }

    pub fn from_partition(p: &Partition) -> TypeVector {
        let mut mult = vec![0u64; p.max_part() as usize];
        for &part in p.parts() {
            mult[(part - 1) as usize] += 1;
        }
        TypeVector { mult }
    }

    /// n_i, the multiplicity of part i.
    pub fn count_of(&self, i: usize) -> u64 {
        assert!(i >= 1);
        self.mult.get(i - 1).copied().unwrap_or(0)
    }

    /// Multiplicities (n_1, n_2, ...); trailing zeros trimmed.
    pub fn multiplicities(&self) -> &[u64] {
        &self.mult
    }

    /// The size sum i * n_i of the underlying partition.
    pub fn total(&self) -> u64 {
        self.mult
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as u64 + 1) * m)
            .sum()
    }

    /// e.g. `(1^2 3)` for n_1 = 2, n_3 = 1.
    pub fn display(&self) -> String {
        let mut out = Vec::new();
        for (i, &m) in self.mult.iter().enumerate() {
            match m {
                0 => {}
                1 => out.push(format!("{}", i + 1)),
                _ => out.push(format!("{}^{}", i + 1, m)),
            }
        }
        format!("({})", out.join(" "))
    }
}

/// The sequence u_1, ..., u_max for a label given as (orbit polynomial,
/// partition) pairs: u_i = prod over pairs of reversal(P)^{m_i(lambda)}.
/// Every u_i has constant term 1.
pub fn u_polys<'a, I>(pairs: I) -> Vec<Poly>
where
    I: IntoIterator<Item = (&'a MonicPoly, &'a Partition)> + Clone,
{
    let max_part = pairs
        .clone()
        .into_iter()
        .map(|(_, lambda)| lambda.max_part())
        .max()
        .unwrap_or(0);
    let mut out = Vec::with_capacity(max_part as usize);
    for i in 1..=max_part {
        let mut acc: Option<Poly> = None;
        for (poly, lambda) in pairs.clone() {
            let m = lambda.multiplicity(i);
            if m == 0 {
                continue;
            }
            let factor = Poly::reversal_of(poly).pow(m);
            acc = Some(match acc {
                None => factor,
                Some(a) => a.mul(&factor),
            });
        }
        out.push(acc.unwrap_or_else(|| {
            let field = pairs
                .clone()
                .into_iter()
                .next()
                .map(|(p, _)| p.field().clone())
                .expect("nonempty label");
            Poly::one(&field)
        }));
    }
    out
}

/// The type of a label: n_i = deg u_i.
pub fn type_of_u_polys(us: &[Poly]) -> TypeVector {
    TypeVector::new(
        us.iter()
            .map(|u| u.degree().unwrap_or(0) as u64)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;

    #[test]
    fn partition_counts() {
        assert_eq!(enum_partitions(0).len(), 1);
        assert_eq!(enum_partitions(0)[0], Partition::empty());
        assert_eq!(enum_partitions(4).len(), 5);
        assert_eq!(enum_partitions(10).len(), 42);
    }

    #[test]
    fn partition_order_is_first_part_descending() {
        let parts: Vec<Vec<u32>> = enum_partitions(4)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            parts,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn multiplicities() {
        let p = Partition::new(vec![3, 2, 2, 1]);
        assert_eq!(p.multiplicity(1), 1);
        assert_eq!(p.multiplicity(2), 2);
        assert_eq!(p.multiplicity(3), 1);
        assert_eq!(p.multiplicity(4), 0);
        assert_eq!(p.size(), 8);
    }

    #[test]
    fn u_polys_identity_label() {
        // {X-1 -> (1^n)}: u_1 = (1-X)^n, everything else 1
        let f = FieldCtx::prime(3).unwrap();
        let x_minus_1 = MonicPoly::x_minus(&f, 1);
        for n in 1..=4u32 {
            let lambda = Partition::ones(n);
            let us = u_polys(vec![(&x_minus_1, &lambda)]);
            assert_eq!(us.len(), 1);
            let one_minus_x = Poly::new(&f, vec![1, f.neg(1)]);
            assert_eq!(us[0], one_minus_x.pow(n));
        }
    }

    #[test]
    fn u_polys_jordan_block() {
        // {X-1 -> (2)}: u_2 = 1 - X, u_1 = 1
        let f = FieldCtx::prime(3).unwrap();
        let x_minus_1 = MonicPoly::x_minus(&f, 1);
        let lambda = Partition::row(2);
        let us = u_polys(vec![(&x_minus_1, &lambda)]);
        assert_eq!(us.len(), 2);
        assert!(us[0].is_one());
        assert_eq!(us[1], Poly::new(&f, vec![1, f.neg(1)]));
        let nu = type_of_u_polys(&us);
        assert_eq!(nu.multiplicities(), &[0, 1]);
        assert_eq!(nu.total(), 2);
    }

    #[test]
    fn u_polys_irreducible_quadratic() {
        // {X^2+1 -> (1)}: u_1 = 1 + X^2
        let f = FieldCtx::prime(3).unwrap();
        let p = MonicPoly::new(&f, vec![1, 0, 1]);
        let lambda = Partition::ones(1);
        let us = u_polys(vec![(&p, &lambda)]);
        assert_eq!(us.len(), 1);
        assert_eq!(us[0], Poly::new(&f, vec![1, 0, 1]));
        let nu = type_of_u_polys(&us);
        assert_eq!(nu.multiplicities(), &[2]);
    }

    #[test]
    fn type_examples() {
        let f = FieldCtx::prime(3).unwrap();
        let x1 = MonicPoly::x_minus(&f, 1);
        let l1 = Partition::ones(1);
        let nu = type_of_u_polys(&u_polys(vec![(&x1, &l1)]));
        assert_eq!(nu.multiplicities(), &[1]);
        assert_eq!(nu.total(), 1);
    }
}
