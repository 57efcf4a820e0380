//! Truncated power series with integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `coeffs[0] + coeffs[1] z + ... + coeffs[D] z^D`, truncated at `D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn new(coeffs: Vec<BigInt>) -> IntSeries {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        IntSeries { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> IntSeries {
        IntSeries::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_usizes(cs: &[usize]) -> IntSeries {
        IntSeries::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The constant 1 truncated at `degree`.
    pub fn one(degree: usize) -> IntSeries {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[0] = BigInt::one();
        IntSeries { coeffs }
    }

    /// `(1 + z)^n` truncated at `degree`.
    pub fn binomial_power(n: usize, degree: usize) -> IntSeries {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[0] = BigInt::one();
        for k in 1..=degree.min(n) {
            coeffs[k] = &coeffs[k - 1] * BigInt::from(n + 1 - k) / BigInt::from(k);
        }
        IntSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Same series cut or zero-padded to a new truncation degree.
    pub fn truncate(&self, degree: usize) -> IntSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(degree + 1, BigInt::zero());
        IntSeries { coeffs }
    }

    /// `a(-z)`.
    pub fn alternate(&self) -> IntSeries {
        IntSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn shift(&self, by: usize) -> IntSeries {
        let d = self.truncation();
        let mut coeffs = vec![BigInt::zero(); d + 1];
        if by <= d {
            coeffs[by..].clone_from_slice(&self.coeffs[..=d - by]);
        }
        IntSeries { coeffs }
    }

    pub fn add(&self, other: &IntSeries) -> Result<IntSeries> {
        self.check_same(other)?;
        Ok(IntSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    fn check_same(&self, other: &IntSeries) -> Result<()> {
        if self.truncation() == other.truncation() {
            Ok(())
        } else {
            Err(Error::TruncationMismatch(self.truncation(), other.truncation()))
        }
    }

    /// Largest `d` with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Coefficients as decimal strings, for JSON without precision loss.
    pub fn json_coeffs(&self) -> Vec<serde_json::Value> {
        self.coeffs
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(x) => serde_json::Value::from(x),
                Err(_) => serde_json::Value::from(c.to_string()),
            })
            .collect()
    }
}

impl Serialize for IntSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.json_coeffs().serialize(s)
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let power = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "{power}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Cauchy product truncated at the common degree.
pub fn mul_trunc(a: &IntSeries, b: &IntSeries) -> Result<IntSeries> {
    a.check_same(b)?;
    let d = a.truncation();
    let mut coeffs = vec![BigInt::zero(); d + 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs[..=d - i].iter().enumerate() {
            coeffs[i + j] += x * y;
        }
    }
    Ok(IntSeries { coeffs })
}

/// The series `b` with `a · b = 1` to the truncation degree.
pub fn invert_trunc(a: &IntSeries) -> Result<IntSeries> {
    if !a.coeffs[0].is_one() {
        return Err(Error::NonUnitConstant(a.coeffs[0].to_string()));
    }
    let d = a.truncation();
    let mut b = vec![BigInt::zero(); d + 1];
    b[0] = BigInt::one();
    for k in 1..=d {
        let mut s = BigInt::zero();
        for j in 1..=k {
            s += &a.coeffs[j] * &b[k - j];
        }
        b[k] = -s;
    }
    Ok(IntSeries { coeffs: b })
}

/// `h_a(z) · h_dual(-z) = 1` to the truncation degree.
pub fn koszul_numeric_check(h_a: &IntSeries, h_dual: &IntSeries) -> bool {
    match mul_trunc(h_a, &h_dual.alternate()) {
        Ok(prod) => prod == IntSeries::one(h_a.truncation()),
        Err(_) => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PalindromeReport {
    pub is_palindrome: bool,
    pub inequalities_hold: bool,
}

/// Compare `p_t` with `p_{n-t}`.
pub fn palindrome_report(p: &IntSeries, n: usize) -> PalindromeReport {
    let c = |t: usize| p.coeff(t);
    PalindromeReport {
        is_palindrome: (0..=n).all(|t| c(t) == c(n - t)),
        inequalities_hold: (0..=n / 2).all(|t| c(t) >= c(n - t)),
    }
}

/// Top nonvanishing degree of a dual Hilbert series.
pub fn global_dimension(p: &IntSeries) -> Result<usize> {
    p.degree().ok_or(Error::DegenerateSeries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(cs: &[i64]) -> IntSeries {
        IntSeries::from_i64s(cs)
    }

    #[test]
    fn products() {
        assert_eq!(mul_trunc(&s(&[1, 1, 0]), &s(&[1, -1, 0])).unwrap(), s(&[1, 0, -1]));
        assert_eq!(mul_trunc(&s(&[3, 1, 4]), &IntSeries::one(2)).unwrap(), s(&[3, 1, 4]));
        assert_eq!(mul_trunc(&s(&[1, 1, 1]), &s(&[1, 1, 1])).unwrap(), s(&[1, 2, 3]));
        assert_eq!(mul_trunc(&s(&[1]), &s(&[1, 1])), Err(Error::TruncationMismatch(0, 1)));
    }

    #[test]
    fn inversions() {
        assert_eq!(invert_trunc(&s(&[1, -1, 0, 0])).unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(invert_trunc(&s(&[1, -5, 5, -1])).unwrap(), s(&[1, 5, 20, 76]));
        assert_eq!(invert_trunc(&s(&[1, -6, 5, -1])).unwrap(), s(&[1, 6, 31, 157]));
        for n in 1..=5 {
            let inv = invert_trunc(&IntSeries::binomial_power(n, 6).alternate()).unwrap();
            // (1 - z)^{-n} has coefficients binomial(n + d - 1, d)
            let want: Vec<usize> = (0..=6).map(|d| binom(n + d - 1, d)).collect();
            assert_eq!(inv, IntSeries::from_usizes(&want));
        }
        assert!(matches!(invert_trunc(&s(&[2, 1])), Err(Error::NonUnitConstant(_))));
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn koszul_checks() {
        assert!(koszul_numeric_check(&s(&[1, 5, 20, 76]), &s(&[1, 5, 5, 1])));
        assert!(!koszul_numeric_check(&s(&[1, 5, 20, 77]), &s(&[1, 5, 5, 1])));
        for n in 0..5 {
            let poly = invert_trunc(&IntSeries::binomial_power(n, 7).alternate()).unwrap();
            assert!(koszul_numeric_check(&poly, &IntSeries::binomial_power(n, 7)));
        }
    }

    #[test]
    fn palindromes() {
        let r = palindrome_report(&s(&[1, 5, 5, 1]), 3);
        assert!(r.is_palindrome && r.inequalities_hold);
        let r = palindrome_report(&s(&[1, 6, 5, 1]), 3);
        assert!(!r.is_palindrome && r.inequalities_hold);
        assert!(palindrome_report(&s(&[1, 8, 16, 8, 1]), 4).is_palindrome);
        assert!(!palindrome_report(&s(&[1, 4, 5, 1]), 3).inequalities_hold);
    }

    #[test]
    fn global_dimensions() {
        assert_eq!(global_dimension(&s(&[1, 5, 5, 1, 0, 0])), Ok(3));
        assert_eq!(global_dimension(&IntSeries::binomial_power(4, 6)), Ok(4));
        assert_eq!(global_dimension(&s(&[0, 0])), Err(Error::DegenerateSeries));
    }

    #[test]
    fn rendering() {
        assert_eq!(s(&[1, 5, 5, 1]).to_string(), "1 + 5z + 5z^2 + z^3");
        assert_eq!(s(&[1, -6, 5, -1]).to_string(), "1 - 6z + 5z^2 - z^3");
        assert_eq!(s(&[0, -1, 0]).to_string(), "-z");
        assert_eq!(s(&[0, 0]).to_string(), "0");
        assert_eq!(serde_json::to_string(&s(&[1, 5, 20, 76])).unwrap(), "[1,5,20,76]");
        let huge = IntSeries::new(vec![BigInt::one(), BigInt::from(10).pow(30)]);
        assert_eq!(
            serde_json::to_string(&huge).unwrap(),
            "[1,\"1000000000000000000000000000000\"]"
        );
        assert_eq!(IntSeries::binomial_power(3, 4), s(&[1, 3, 3, 1, 0]));
        assert_eq!(s(&[1, 2, 3]).shift(1), s(&[0, 1, 2]));
    }

    fn arb_unit_series() -> impl Strategy<Value = IntSeries> {
        prop::collection::vec(-50i64..=50, 0..8).prop_map(|mut cs| {
            cs.insert(0, 1);
            IntSeries::from_i64s(&cs)
        })
    }

    proptest! {
        #[test]
        fn inverse_recovers_one(a in arb_unit_series()) {
            let b = invert_trunc(&a).unwrap();
            prop_assert_eq!(mul_trunc(&a, &b).unwrap(), IntSeries::one(a.truncation()));
            prop_assert_eq!(mul_trunc(&b, &a).unwrap(), IntSeries::one(a.truncation()));
            prop_assert_eq!(invert_trunc(&b).unwrap(), a);
        }
    }
}
