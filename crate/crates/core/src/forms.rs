//! Exact closed-form valency and multiplicity families, with grid scanners
//! for the log-concavity theorems they satisfy.

use crate::seq::{RatSequence, Verdict};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormsError {
    #[error("parameter out of range for {family}: {message}")]
    Range { family: &'static str, message: String },
    #[error("sum identity failed for {family}: expected {expected}, got {actual}")]
    SumIdentity {
        family: &'static str,
        expected: String,
        actual: String,
    },
    #[error("non-integral value in {family} at index {index}")]
    NonIntegral { family: &'static str, index: usize },
}

fn range(family: &'static str, message: impl Into<String>) -> FormsError {
    FormsError::Range {
        family,
        message: message.into(),
    }
}

/// Binomial with C(n, -1) = 0 so multiplicity differences need no special
/// case at i = 0.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = k as u64;
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Gaussian binomial [a, b]_q by the product formula with exact division;
/// [a, -1]_q = 0.
pub fn gaussian_binomial(a: u64, b: i64, q: u64) -> Result<BigInt, FormsError> {
    if q < 2 {
        return Err(range("gaussian_binomial", format!("need q >= 2, got {q}")));
    }
    if b < 0 {
        return Ok(BigInt::zero());
    }
    let b = b as u64;
    if b > a {
        return Err(range(
            "gaussian_binomial",
            format!("need 0 <= b <= a, got a = {a}, b = {b}"),
        ));
    }
    let qb = BigInt::from(q);
    let mut acc = BigInt::one();
    for i in 1..=b {
        let num = pow(&qb, a - b + i) - 1;
        let den = pow(&qb, i) - 1;
        let prod: BigInt = acc * num;
        let (quot, rem) = prod.div_rem(&den);
        debug_assert!(rem.is_zero(), "Gaussian binomial division is exact");
        acc = quot;
    }
    Ok(acc)
}

fn pow(base: &BigInt, e: u64) -> BigInt {
    base.pow(e as u32)
}

fn to_seq(terms: Vec<BigInt>) -> RatSequence {
    RatSequence::new(terms.into_iter().map(BigRational::from_integer).collect())
}

/// Hamming valencies C(n,i)(q-1)^i, i = 0..=n.
pub fn hamming_valencies(n: u64, q: u64) -> Result<RatSequence, FormsError> {
    if n < 1 || q < 2 {
        return Err(range("hamming", format!("need n >= 1, q >= 2, got n = {n}, q = {q}")));
    }
    Ok(to_seq(
        (0..=n)
            .map(|i| binomial(n, i as i64) * pow(&BigInt::from(q - 1), i))
            .collect(),
    ))
}

/// Johnson valencies C(d,i) C(n-d,i), i = 0..=d.
pub fn johnson_valencies(n: u64, d: u64) -> Result<RatSequence, FormsError> {
    if d < 1 || d > n - 1 {
        return Err(range("johnson", format!("need 1 <= d <= n-1, got n = {n}, d = {d}")));
    }
    Ok(to_seq(
        (0..=d)
            .map(|i| binomial(d, i as i64) * binomial(n - d, i as i64))
            .collect(),
    ))
}

/// Johnson multiplicities C(n,i) - C(n,i-1), i = 0..=d; the factored form
/// (n-2i+1)/(n-i+1) C(n,i) is evaluated too and compared exactly.
pub fn johnson_multiplicities(n: u64, d: u64) -> Result<RatSequence, FormsError> {
    if d < 1 || d > n - 1 {
        return Err(range("johnson_multiplicities", format!("need 1 <= d <= n-1, got n = {n}, d = {d}")));
    }
    let mut out = Vec::with_capacity(d as usize + 1);
    for i in 0..=d {
        let diff = binomial(n, i as i64) - binomial(n, i as i64 - 1);
        let factored = BigRational::new(
            BigInt::from(n as i64 - 2 * i as i64 + 1) * binomial(n, i as i64),
            BigInt::from(n as i64 - i as i64 + 1),
        );
        if factored != BigRational::from_integer(diff.clone()) {
            return Err(FormsError::NonIntegral {
                family: "johnson_multiplicities",
                index: i as usize,
            });
        }
        out.push(diff);
    }
    Ok(to_seq(out))
}

/// Folded Johnson J(2m,m) multiplicities C(2m,2i) - C(2m,2i-1), i = 0..=m/2.
pub fn folded_johnson_multiplicities(m: u64) -> Result<RatSequence, FormsError> {
    if m < 4 {
        return Err(range("folded_johnson", format!("need m >= 4, got {m}")));
    }
    Ok(to_seq(
        (0..=m / 2)
            .map(|i| binomial(2 * m, 2 * i as i64) - binomial(2 * m, 2 * i as i64 - 1))
            .collect(),
    ))
}

/// Odd graph O_{m+1} multiplicities C(2m,i) - C(2m,i-1), i = 0..=m.
pub fn odd_graph_multiplicities(m: u64) -> Result<RatSequence, FormsError> {
    if m < 2 {
        return Err(range("odd_graph", format!("need m >= 2, got {m}")));
    }
    Ok(to_seq(
        (0..=m)
            .map(|i| binomial(2 * m, i as i64) - binomial(2 * m, i as i64 - 1))
            .collect(),
    ))
}

/// Grassmann multiplicities [n,i]_q - [n,i-1]_q, i = 0..=d; the factored
/// form (1 - (q^i - 1)/(q^{n-i+1} - 1)) [n,i]_q is compared exactly.
pub fn grassmann_multiplicities(n: u64, d: u64, q: u64) -> Result<RatSequence, FormsError> {
    if d < 1 || d > n - 1 || q < 2 {
        return Err(range(
            "grassmann",
            format!("need 1 <= d <= n-1 and q >= 2, got n = {n}, d = {d}, q = {q}"),
        ));
    }
    let qb = BigInt::from(q);
    let mut out = Vec::with_capacity(d as usize + 1);
    for i in 0..=d {
        let gi = gaussian_binomial(n, i as i64, q)?;
        let diff = &gi - gaussian_binomial(n, i as i64 - 1, q)?;
        let factor = BigRational::one()
            - BigRational::new(pow(&qb, i) - 1, pow(&qb, n - i + 1) - 1);
        if factor * BigRational::from_integer(gi) != BigRational::from_integer(diff.clone()) {
            return Err(FormsError::NonIntegral {
                family: "grassmann",
                index: i as usize,
            });
        }
        out.push(diff);
    }
    Ok(to_seq(out))
}

/// Symplectic form scheme S(m,q) valencies
/// v_j = q^{j(j-1)} prod_{i=0}^{2j-1}(q^{m-i}-1) / prod_{i=1}^{j}(q^{2i}-1),
/// j = 0..=m/2; the vertex-count identity sum v_j = q^{m(m-1)/2} is
/// enforced.
pub fn symplectic_valencies(m: u64, q: u64) -> Result<RatSequence, FormsError> {
    if m < 2 || q < 2 {
        return Err(range("symplectic", format!("need m >= 2, q >= 2, got m = {m}, q = {q}")));
    }
    let qb = BigInt::from(q);
    let mut out = Vec::new();
    for j in 0..=m / 2 {
        let mut num = pow(&qb, j * (j.saturating_sub(1)));
        for i in 0..2 * j {
            num *= pow(&qb, m - i) - 1;
        }
        let mut den = BigInt::one();
        for i in 1..=j {
            den *= pow(&qb, 2 * i) - 1;
        }
        let (quot, rem) = num.div_rem(&den);
        if !rem.is_zero() {
            return Err(FormsError::NonIntegral {
                family: "symplectic",
                index: j as usize,
            });
        }
        out.push(quot);
    }
    let total: BigInt = out.iter().sum();
    let expected = pow(&qb, m * (m - 1) / 2);
    if total != expected {
        return Err(FormsError::SumIdentity {
            family: "symplectic",
            expected: expected.to_string(),
            actual: total.to_string(),
        });
    }
    Ok(to_seq(out))
}

/// Bilinear form scheme B(d,e,q) valencies
/// v_j = [d,d-j]_q [e,e-j]_q prod_{i=0}^{j-1}(q^j - q^i), j = 0..=min(d,e);
/// sum v_j = q^{de} enforced.
pub fn bilinear_valencies(d: u64, e: u64, q: u64) -> Result<RatSequence, FormsError> {
    if d < 1 || e < 1 || q < 2 {
        return Err(range("bilinear", format!("need d, e >= 1, q >= 2, got d = {d}, e = {e}, q = {q}")));
    }
    let qb = BigInt::from(q);
    let mut out = Vec::new();
    for j in 0..=d.min(e) {
        let mut v = gaussian_binomial(d, (d - j) as i64, q)?
            * gaussian_binomial(e, (e - j) as i64, q)?;
        for i in 0..j {
            v *= pow(&qb, j) - pow(&qb, i);
        }
        out.push(v);
    }
    let total: BigInt = out.iter().sum();
    let expected = pow(&qb, d * e);
    if total != expected {
        return Err(FormsError::SumIdentity {
            family: "bilinear",
            expected: expected.to_string(),
            actual: total.to_string(),
        });
    }
    Ok(to_seq(out))
}

/// One row of a parameter-grid scan.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub params: Vec<u64>,
    pub sequence: RatSequence,
    pub lc_verdict: Verdict,
}

/// Families addressable by name in grid scans and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    HammingValencies,
    JohnsonValencies,
    JohnsonMultiplicities,
    FoldedJohnsonMultiplicities,
    OddGraphMultiplicities,
    GrassmannMultiplicities,
    SymplecticValencies,
    BilinearValencies,
}

impl Family {
    pub fn parse(name: &str) -> Option<Family> {
        Some(match name {
            "hamming" => Family::HammingValencies,
            "johnson" => Family::JohnsonValencies,
            "johnson-multiplicities" => Family::JohnsonMultiplicities,
            "folded-johnson" => Family::FoldedJohnsonMultiplicities,
            "odd-graph" => Family::OddGraphMultiplicities,
            "grassmann" => Family::GrassmannMultiplicities,
            "symplectic" => Family::SymplecticValencies,
            "bilinear" => Family::BilinearValencies,
            _ => return None,
        })
    }

    pub fn arity(self) -> usize {
        match self {
            Family::FoldedJohnsonMultiplicities | Family::OddGraphMultiplicities => 1,
            Family::GrassmannMultiplicities => 3,
            Family::BilinearValencies => 3,
            _ => 2,
        }
    }

    pub fn evaluate(self, params: &[u64]) -> Result<RatSequence, FormsError> {
        let need = self.arity();
        if params.len() != need {
            return Err(range(
                "family",
                format!("{self:?} takes {need} parameters, got {}", params.len()),
            ));
        }
        match self {
            Family::HammingValencies => hamming_valencies(params[0], params[1]),
            Family::JohnsonValencies => johnson_valencies(params[0], params[1]),
            Family::JohnsonMultiplicities => johnson_multiplicities(params[0], params[1]),
            Family::FoldedJohnsonMultiplicities => folded_johnson_multiplicities(params[0]),
            Family::OddGraphMultiplicities => odd_graph_multiplicities(params[0]),
            Family::GrassmannMultiplicities => {
                grassmann_multiplicities(params[0], params[1], params[2])
            }
            Family::SymplecticValencies => symplectic_valencies(params[0], params[1]),
            Family::BilinearValencies => bilinear_valencies(params[0], params[1], params[2]),
        }
    }
}

/// Evaluate a family on every grid point, one verdict row each.
pub fn lc_scan(
    family: Family,
    grid: impl IntoIterator<Item = Vec<u64>>,
) -> Result<Vec<ScanRow>, FormsError> {
    grid.into_iter()
        .map(|params| {
            let sequence = family.evaluate(&params)?;
            Ok(ScanRow {
                lc_verdict: sequence.is_log_concave(),
                params,
                sequence,
            })
        })
        .collect()
}
