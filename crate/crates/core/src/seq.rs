//! Exact rational sequences and big-integer polynomials, with the
//! log-concavity and unimodality checks everything else reduces to.
//!
//! All comparisons are cross-multiplied big-integer comparisons; no floating
//! point enters this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Outcome of a sequence check: either the property holds everywhere, or it
/// fails and we report the smallest witnessing index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    FailsAt(usize),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn failing_index(&self) -> Option<usize> {
        match self {
            Verdict::Holds => None,
            Verdict::FailsAt(i) => Some(*i),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct V {
            holds: bool,
            index: Option<usize>,
        }
        V {
            holds: self.holds(),
            index: self.failing_index(),
        }
        .serialize(s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::FailsAt(i) => write!(f, "fails at index {i}"),
        }
    }
}

/// A nonempty sequence of exact rationals, indexed 0..=d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatSequence {
    terms: Vec<BigRational>,
}

impl RatSequence {
    /// Panics on an empty term list; sequences are nonempty by construction.
    pub fn new(terms: Vec<BigRational>) -> Self {
        assert!(!terms.is_empty(), "RatSequence must be nonempty");
        RatSequence { terms }
    }

    pub fn from_ints<I: Into<BigInt>>(terms: impl IntoIterator<Item = I>) -> Self {
        Self::new(
            terms
                .into_iter()
                .map(|t| BigRational::from_integer(t.into()))
                .collect(),
        )
    }

    pub fn terms(&self) -> &[BigRational] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// s_i^2 >= s_{i-1} s_{i+1} at every internal index 1 <= i <= d-1.
    /// Length <= 2 holds vacuously.
    pub fn is_log_concave(&self) -> Verdict {
        for i in 1..self.terms.len().saturating_sub(1) {
            let sq = &self.terms[i] * &self.terms[i];
            let cross = &self.terms[i - 1] * &self.terms[i + 1];
            if sq < cross {
                return Verdict::FailsAt(i);
            }
        }
        Verdict::Holds
    }

    /// Nondecreasing up to some peak, nonincreasing after; plateaus allowed.
    pub fn is_unimodal(&self) -> Verdict {
        let mut i = 0;
        while i + 1 < self.terms.len() && self.terms[i] <= self.terms[i + 1] {
            i += 1;
        }
        while i + 1 < self.terms.len() {
            if self.terms[i] < self.terms[i + 1] {
                return Verdict::FailsAt(i + 1);
            }
            i += 1;
        }
        Verdict::Holds
    }

    /// The terms as big integers, or None if any term has a denominator.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.terms
            .iter()
            .map(|t| t.is_integer().then(|| t.to_integer()))
            .collect()
    }

    /// Termwise product; sequences must have equal length.
    pub fn termwise_product(&self, other: &RatSequence) -> RatSequence {
        assert_eq!(self.len(), other.len());
        RatSequence::new(
            self.terms
                .iter()
                .zip(&other.terms)
                .map(|(a, b)| a * b)
                .collect(),
        )
    }
}

impl fmt::Display for RatSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

// Sequences serialize as arrays of "num/den" strings, exact.
impl Serialize for RatSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.terms.iter().map(rational_to_string).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        if strs.is_empty() {
            return Err(D::Error::custom("sequence must be nonempty"));
        }
        let terms = strs
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RatSequence::new(terms))
    }
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(n, d))
}

/// A polynomial in t with big-integer coefficients, index = exponent.
/// Normalized: no trailing zero coefficient unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_ints<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        Self::new(vec![])
    }

    pub fn one() -> Self {
        Self::from_ints([1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// n-th power by repeated squaring, n >= 1.
    pub fn pow(&self, n: u32) -> IntPolynomial {
        assert!(n >= 1, "pow requires n >= 1");
        let mut result = IntPolynomial::one();
        let mut base = self.clone();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        result
    }

    /// Coefficient list in exponent order, as a rational sequence.
    pub fn coefficients_as_sequence(&self) -> RatSequence {
        RatSequence::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn is_log_concave(&self) -> Verdict {
        self.coefficients_as_sequence().is_log_concave()
    }

    /// All coefficients strictly positive (no internal zeros possible then).
    pub fn all_positive(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && !(self.is_zero() && i == 0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

// Polynomials serialize as arrays of decimal strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| BigInt::from_str(s.trim()).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> RatSequence {
        RatSequence::from_ints(v.iter().copied())
    }

    #[test]
    fn log_concave_examples() {
        // (1,2,5): 4 < 5
        assert_eq!(seq(&[1, 2, 5]).is_log_concave(), Verdict::FailsAt(1));
        // (1,3,4,6): 16 < 18
        assert_eq!(seq(&[1, 3, 4, 6]).is_log_concave(), Verdict::FailsAt(2));
        // (1,k): no internal index
        assert_eq!(seq(&[1, 7]).is_log_concave(), Verdict::Holds);
        // Johnson J(21,3) multiplicities
        assert_eq!(
            seq(&[1, 20, 189, 1120]).is_log_concave(),
            Verdict::Holds
        );
        assert_eq!(seq(&[3]).is_log_concave(), Verdict::Holds);
    }

    #[test]
    fn log_concave_with_zero_terms() {
        // 0^2 >= 1*1 fails as stated
        assert_eq!(seq(&[1, 0, 1]).is_log_concave(), Verdict::FailsAt(1));
        assert_eq!(seq(&[1, 0, 0]).is_log_concave(), Verdict::Holds);
    }

    #[test]
    fn unimodal_examples() {
        assert_eq!(seq(&[1, 3, 6]).is_unimodal(), Verdict::Holds);
        assert_eq!(seq(&[1, 2, 1]).is_unimodal(), Verdict::Holds);
        assert_eq!(seq(&[2, 1, 2]).is_unimodal(), Verdict::FailsAt(2));
        // plateaus on both sides of the peak
        assert_eq!(seq(&[1, 2, 2, 1, 1]).is_unimodal(), Verdict::Holds);
    }

    #[test]
    fn poly_products() {
        let p = IntPolynomial::from_ints([1, 1]);
        assert_eq!(p.pow(2), IntPolynomial::from_ints([1, 2, 1]));

        let c5 = IntPolynomial::from_ints([1, 2, 2]);
        assert_eq!(c5.pow(2), IntPolynomial::from_ints([1, 4, 8, 8, 4]));

        let t1 = IntPolynomial::from_ints([1, 2, 5]);
        assert_eq!(t1.pow(2), IntPolynomial::from_ints([1, 4, 14, 20, 25]));
    }

    #[test]
    fn poly_normalization_and_sequence() {
        let p = IntPolynomial::from_ints([1, 2, 1, 0, 0]);
        assert_eq!(p.degree(), 2);
        assert_eq!(
            p.coefficients_as_sequence(),
            RatSequence::from_ints([1, 2, 1])
        );
        assert_eq!(
            IntPolynomial::zero().coefficients_as_sequence(),
            RatSequence::from_ints([0])
        );
    }

    #[test]
    fn serde_round_trip() {
        let s = RatSequence::new(vec![
            BigRational::new(BigInt::from(833), BigInt::from(57)),
            BigRational::from_integer(BigInt::from(20)),
        ]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"["833/57","20"]"#);
        let back: RatSequence = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);

        let p = IntPolynomial::from_ints([1, -4, 14]);
        let jp = serde_json::to_string(&p).unwrap();
        assert_eq!(jp, r#"["1","-4","14"]"#);
        let backp: IntPolynomial = serde_json::from_str(&jp).unwrap();
        assert_eq!(backp, p);
    }
}
