//! Truncated formal power series in t with IntPoly coefficients, and the
//! infinite-product generating functions c_k(t) = prod (1 - eps t^(kr)) /
//! (1 - q t^(kr)) checked coefficientwise against the census sums.

use serde::Serialize;

use crate::census::c_n_k;
use crate::intpoly::IntPoly;

/// A series truncated at t^order; coefficient n is an exact polynomial in q.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    order: usize,
    epsilon: i8,
    coeffs: Vec<IntPoly>,
}

impl TruncSeries {
    pub fn order(&self) -> usize {
        self.order
    }
    pub fn epsilon(&self) -> i8 {
        self.epsilon
    }
    pub fn coefficient(&self, n: usize) -> &IntPoly {
        &self.coeffs[n]
    }
    pub fn coefficients(&self) -> &[IntPoly] {
        &self.coeffs
    }
}

/// Expands prod over r >= 1 of (1 - eps t^(kr)) / (1 - q t^(kr)) up to t^N.
/// Only factors with kr <= N contribute after truncation.
pub fn product_series(k: u64, epsilon: i8, order: usize) -> TruncSeries {
    assert!(k >= 1);
    assert!(epsilon == 1 || epsilon == -1);
    let mut coeffs = vec![IntPoly::zero(); order + 1];
    coeffs[0] = IntPoly::one();
    let q = IntPoly::monomial(1, 1);
    let eps = IntPoly::constant(epsilon as i128);
    let mut r = 1u64;
    loop {
        let m = (k * r) as usize;
        if m > order {
            break;
        }
        // multiply by (1 - eps t^m)
        for j in (m..=order).rev() {
            let shift = coeffs[j - m].mul(&eps);
            coeffs[j] = coeffs[j].sub(&shift);
        }
        // divide by (1 - q t^m): c'_j = c_j + q c'_{j-m}
        for j in m..=order {
            let shift = coeffs[j - m].mul(&q);
            coeffs[j] = coeffs[j].add(&shift);
        }
        r += 1;
    }
    TruncSeries {
        order,
        epsilon,
        coeffs,
    }
}

/// Outcome of comparing the generating function against the census sums as
/// polynomial identities.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesCheck {
    pub k: u64,
    pub epsilon: i8,
    pub order: usize,
    pub matches: bool,
    pub first_mismatch: Option<usize>,
}

/// Asserts coefficient-of-t^n(product series) = c_{n,k}(q) for all n up to
/// the truncation order; a mismatch is reported, not an error.
pub fn verify_series_vs_census(k: u64, epsilon: i8, order: usize) -> SeriesCheck {
    let series = product_series(k, epsilon, order);
    let mut first_mismatch = None;
    for n in 0..=order {
        let census = if n == 0 {
            IntPoly::one()
        } else {
            c_n_k(n as u64, k, epsilon)
        };
        if *series.coefficient(n) != census {
            first_mismatch = Some(n);
            break;
        }
    }
    SeriesCheck {
        k,
        epsilon,
        order,
        matches: first_mismatch.is_none(),
        first_mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_world_low_coefficients() {
        let s = product_series(1, 1, 3);
        assert_eq!(s.coefficient(0), &IntPoly::one());
        assert_eq!(s.coefficient(1), &IntPoly::new(vec![-1, 1])); // q - 1
        assert_eq!(s.coefficient(2), &IntPoly::new(vec![-1, 0, 1])); // q^2 - 1
        assert_eq!(s.coefficient(3), &IntPoly::new(vec![0, -1, 0, 1])); // q^3 - q
        assert_eq!(s.coefficient(2).eval(3), 8); // |Cl(GL_2(3))|
    }

    #[test]
    fn unitary_world_low_coefficients() {
        let s = product_series(1, -1, 2);
        assert_eq!(s.coefficient(1), &IntPoly::new(vec![1, 1])); // q + 1
        assert_eq!(s.coefficient(2), &IntPoly::new(vec![1, 2, 1])); // (q+1)^2
        assert_eq!(s.coefficient(2).eval(2), 9); // |Cl(GU_2(2))|
    }

    #[test]
    fn k_two_kills_odd_degrees() {
        let s = product_series(2, 1, 7);
        for n in [1usize, 3, 5, 7] {
            assert!(s.coefficient(n).is_zero(), "t^{n}");
        }
        assert!(!s.coefficient(2).is_zero());
    }

    #[test]
    fn series_matches_census() {
        for k in [1u64, 2, 3] {
            for eps in [1i8, -1] {
                let check = verify_series_vs_census(k, eps, 8);
                assert!(check.matches, "k={k} eps={eps}: {check:?}");
            }
        }
    }

    #[test]
    fn substitution_consistency() {
        // coefficients of c_k(t) are those of c_1 with t -> t^k
        for k in [2u64, 3] {
            for eps in [1i8, -1] {
                let whole = product_series(k, eps, 12);
                let base = product_series(1, eps, 12 / k as usize);
                for n in 0..=12usize {
                    if n % k as usize == 0 {
                        assert_eq!(
                            whole.coefficient(n),
                            base.coefficient(n / k as usize),
                            "k={k} eps={eps} n={n}"
                        );
                    } else {
                        assert!(whole.coefficient(n).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn degree_law() {
        // coefficient of t^n has q-degree exactly n/k when k | n
        for k in [1u64, 2, 4] {
            for eps in [1i8, -1] {
                let s = product_series(k, eps, 8);
                for n in 1..=8usize {
                    if n % k as usize == 0 {
                        assert_eq!(
                            s.coefficient(n).degree(),
                            Some(n / k as usize),
                            "k={k} eps={eps} n={n}"
                        );
                        assert_eq!(s.coefficient(n).leading(), 1);
                    }
                }
            }
        }
    }
}
