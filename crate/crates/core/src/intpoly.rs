//! Exact integer-coefficient polynomials in the indeterminate q, and exact
//! rationals for the ratio reports. All census formulas live here; nothing
//! in the verification paths ever touches floating point.

use serde::Serialize;

/// Polynomial in q with exact integer coefficients, stored ascending by
/// degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntPoly {
    coeffs: Vec<i128>,
}

impl std::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i128>) -> IntPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly { coeffs: vec![1] }
    }

    pub fn constant(c: i128) -> IntPoly {
        IntPoly::new(vec![c])
    }

    /// c * q^k.
    pub fn monomial(c: i128, k: usize) -> IntPoly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficients ascending in q-degree.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: i128) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn eval(&self, q: i128) -> i128 {
        let mut acc = 0i128;
        for &c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Human-readable form with descending powers, e.g. `q^2 - 1`.
    pub fn display(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            let abs = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let show_coeff = abs != 1 || i == 0;
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            match i {
                0 => {}
                1 => out.push('q'),
                _ => out.push_str(&format!("q^{i}")),
            }
        }
        out
    }
}

/// An exact rational in lowest terms with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactRatio {
    pub num: i128,
    pub den: i128,
}

impl std::fmt::Debug for ExactRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl ExactRatio {
    pub fn new(num: i128, den: i128) -> ExactRatio {
        assert!(den != 0, "zero denominator");
        let g = num_integer::gcd(num, den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        ExactRatio { num, den }
    }

    pub fn one() -> ExactRatio {
        ExactRatio { num: 1, den: 1 }
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn display(&self) -> String {
        if self.den == 1 {
            format!("{}", self.num)
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // denominators are positive, and desk-scale magnitudes cannot
        // overflow the cross multiplication
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let p = IntPoly::new(vec![-1, 0, 1]); // q^2 - 1
        assert_eq!(p.eval(3), 8);
        assert_eq!(p.eval(2), 3);
        let q = IntPoly::new(vec![1, 1]); // q + 1
        let prod = p.mul(&q);
        assert_eq!(prod.eval(5), 24 * 6);
        assert_eq!(p.sub(&p), IntPoly::zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(IntPoly::new(vec![-1, 0, 1]).display(), "q^2 - 1");
        assert_eq!(IntPoly::new(vec![-1, 1]).display(), "q - 1");
        assert_eq!(IntPoly::new(vec![1, 1]).display(), "q + 1");
        assert_eq!(IntPoly::new(vec![0, -1, 0, 1]).display(), "q^3 - q");
        assert_eq!(IntPoly::zero().display(), "0");
        assert_eq!(IntPoly::constant(-3).display(), "-3");
        assert_eq!(IntPoly::new(vec![1, 2, 1]).display(), "q^2 + 2q + 1");
    }

    #[test]
    fn ratio_reduction_and_order() {
        let r = ExactRatio::new(6, 8);
        assert_eq!((r.num, r.den), (3, 4));
        assert_eq!(r.display(), "3/4");
        assert!(ExactRatio::new(2, 3) < ExactRatio::new(3, 4));
        assert!(ExactRatio::new(9, 10) >= ExactRatio::new(9, 10));
        assert_eq!(ExactRatio::new(-3, -4), ExactRatio::new(3, 4));
    }
}
