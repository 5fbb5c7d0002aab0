//! Distance-regularity: intersection arrays, the valency recurrence, the
//! Bannai-Ito log-concavity certificate, and the strongly regular bounds.

use super::{Graph, GraphError};
use crate::seq::{RatSequence, Verdict};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// {b_0..b_{d-1}; c_1..c_d} of a distance-regular graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionArray {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArrayError {
    #[error("intersection array is malformed: {0}")]
    Malformed(String),
    #[error("infeasible array: valency v_{index} = {value} is not an integer")]
    NonIntegralValency { index: usize, value: String },
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self, ArrayError> {
        if b.is_empty() || b.len() != c.len() {
            return Err(ArrayError::Malformed(format!(
                "need |b| = |c| >= 1, got |b| = {}, |c| = {}",
                b.len(),
                c.len()
            )));
        }
        if c[0] != 1 {
            return Err(ArrayError::Malformed(format!("c_1 must be 1, got {}", c[0])));
        }
        if b.iter().chain(c.iter()).any(|&x| x == 0) {
            return Err(ArrayError::Malformed("all b_i, c_i must be positive".into()));
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn degree(&self) -> u64 {
        self.b[0]
    }

    /// a_j = b_0 - b_j - c_j with the boundary terms absent.
    pub fn a(&self, j: usize) -> i64 {
        let d = self.diameter();
        let b0 = self.b[0] as i64;
        let bj = if j < d { self.b[j] as i64 } else { 0 };
        let cj = if j == 0 { 0 } else { self.c[j - 1] as i64 };
        b0 - bj - cj
    }

    /// v_0 = 1, v_i = v_{i-1} b_{i-1} / c_i; errors if any v_i fails to be a
    /// positive integer.
    pub fn valencies(&self) -> Result<RatSequence, ArrayError> {
        let mut v = vec![BigRational::one()];
        for i in 1..=self.diameter() {
            let next = v[i - 1].clone() * BigInt::from(self.b[i - 1])
                / BigInt::from(self.c[i - 1]);
            if !next.is_integer() || !next.is_positive() {
                return Err(ArrayError::NonIntegralValency {
                    index: i,
                    value: next.to_string(),
                });
            }
            v.push(next);
        }
        Ok(RatSequence::new(v))
    }

    /// Intersection array of the Johnson graph J(n,d).
    pub fn johnson(n: u64, d: u64) -> Result<Self, ArrayError> {
        if d < 1 || 2 * d > n {
            return Err(ArrayError::Malformed(format!(
                "johnson array needs 1 <= d <= n/2, got n = {n}, d = {d}"
            )));
        }
        let b = (0..d).map(|i| (d - i) * (n - d - i)).collect();
        let c = (1..=d).map(|i| i * i).collect();
        IntersectionArray::new(b, c)
    }

    /// Intersection array of the Hamming graph H(n,q).
    pub fn hamming(n: u64, q: u64) -> Result<Self, ArrayError> {
        if n < 1 || q < 2 {
            return Err(ArrayError::Malformed(format!(
                "hamming array needs n >= 1, q >= 2, got n = {n}, q = {q}"
            )));
        }
        let b = (0..n).map(|i| (n - i) * (q - 1)).collect();
        let c = (1..=n).collect();
        IntersectionArray::new(b, c)
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u64]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Full report of the Bannai-Ito check on one array.
#[derive(Debug, Clone, Serialize)]
pub struct LcCertificate {
    pub b_nonincreasing: bool,
    pub c_nondecreasing: bool,
    pub valencies: RatSequence,
    pub lc_verdict: Verdict,
}

impl LcCertificate {
    pub fn all_hold(&self) -> bool {
        self.b_nonincreasing && self.c_nondecreasing && self.lc_verdict.holds()
    }
}

impl IntersectionArray {
    /// Monotonicity of b and c plus log-concavity of the valencies; all three
    /// hold for the array of any distance-regular graph.
    pub fn lc_certificate(&self) -> Result<LcCertificate, ArrayError> {
        let valencies = self.valencies()?;
        Ok(LcCertificate {
            b_nonincreasing: self.b.windows(2).all(|w| w[0] >= w[1]),
            c_nondecreasing: self.c.windows(2).all(|w| w[0] <= w[1]),
            lc_verdict: valencies.is_log_concave(),
            valencies,
        })
    }
}

/// SRG parameter quadruple (nu, kappa, lambda, mu).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParameters {
    pub nu: u64,
    pub kappa: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParameters {
    /// The counting identity kappa(kappa - lambda - 1) = (nu - kappa - 1) mu.
    pub fn identity_holds(&self) -> bool {
        self.kappa * (self.kappa - self.lambda - 1) == (self.nu - self.kappa - 1) * self.mu
    }
}

/// Size bounds for a strongly regular graph of degree kappa.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgBounds {
    pub lower: u64,
    pub moore_upper: u64,
}

/// lower = kappa + 1 + ceil(sqrt(kappa)); moore_upper = kappa^2 + 1.
pub fn srg_bounds(kappa: u64) -> SrgBounds {
    assert!(kappa >= 1);
    let mut r = (kappa as f64).sqrt() as u64;
    while r * r < kappa {
        r += 1;
    }
    while r >= 1 && (r - 1) * (r - 1) >= kappa {
        r -= 1;
    }
    SrgBounds {
        lower: kappa + 1 + r,
        moore_upper: kappa * kappa + 1,
    }
}

/// Does nu fall within [lower, moore_upper]?
pub fn srg_bounds_check(p: &SrgParameters) -> Verdict {
    let bounds = srg_bounds(p.kappa);
    if bounds.lower <= p.nu && p.nu <= bounds.moore_upper {
        Verdict::Holds
    } else {
        Verdict::FailsAt(0)
    }
}

impl Graph {
    /// Brute-force distance-regularity check: for every ordered pair (u, v)
    /// at distance i, |Gamma_{i+1}(u) n Gamma(v)| and |Gamma_{i-1}(u) n
    /// Gamma(v)| must be constants b_i, c_i. Returns the array, or None on
    /// the first inconsistency.
    pub fn intersection_array(&self) -> Result<Option<IntersectionArray>, GraphError> {
        let n = self.vertex_count();
        if n < 2 {
            return Ok(None);
        }
        let dist: Vec<Vec<usize>> = (0..n)
            .map(|u| self.distances_from(u))
            .collect::<Result<_, _>>()?;
        let diameter = dist
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap();
        // b[i], c[i] indexed by distance i = 0..=diameter; None = unseen
        let mut b: Vec<Option<usize>> = vec![None; diameter + 1];
        let mut c: Vec<Option<usize>> = vec![None; diameter + 1];
        for u in 0..n {
            for v in 0..n {
                let i = dist[u][v];
                let up = self
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| dist[u][w] == i + 1)
                    .count();
                let down = if i == 0 {
                    0
                } else {
                    self.neighbors(v)
                        .iter()
                        .filter(|&&w| dist[u][w] == i - 1)
                        .count()
                };
                match b[i] {
                    None => b[i] = Some(up),
                    Some(x) if x != up => return Ok(None),
                    _ => {}
                }
                match c[i] {
                    None => c[i] = Some(down),
                    Some(x) if x != down => return Ok(None),
                    _ => {}
                }
            }
        }
        let b: Vec<u64> = (0..diameter).map(|i| b[i].unwrap() as u64).collect();
        let c: Vec<u64> = (1..=diameter).map(|i| c[i].unwrap() as u64).collect();
        match IntersectionArray::new(b, c) {
            Ok(ia) => Ok(Some(ia)),
            Err(_) => Ok(None),
        }
    }

    /// SRG parameters when the graph is distance-regular of diameter 2.
    pub fn srg_parameters(&self) -> Result<Option<SrgParameters>, GraphError> {
        let Some(ia) = self.intersection_array()? else {
            return Ok(None);
        };
        if ia.diameter() != 2 {
            return Ok(None);
        }
        Ok(Some(SrgParameters {
            nu: self.vertex_count() as u64,
            kappa: ia.b[0],
            lambda: (ia.b[0] as i64 - ia.b[1] as i64 - 1) as u64,
            mu: ia.c[1],
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedFamily;

    #[test]
    fn arrays_of_named_graphs() {
        let p = NamedFamily::Petersen.build().unwrap();
        let ia = p.intersection_array().unwrap().unwrap();
        assert_eq!(ia, IntersectionArray::new(vec![3, 2], vec![1, 1]).unwrap());

        let c5 = NamedFamily::Cycle { q: 5 }.build().unwrap();
        let ia = c5.intersection_array().unwrap().unwrap();
        assert_eq!(ia, IntersectionArray::new(vec![2, 1], vec![1, 1]).unwrap());

        let q3 = NamedFamily::Hypercube { n: 3 }.build().unwrap();
        let ia = q3.intersection_array().unwrap().unwrap();
        assert_eq!(
            ia,
            IntersectionArray::new(vec![3, 2, 1], vec![1, 2, 3]).unwrap()
        );
    }

    #[test]
    fn non_dr_graphs_return_none() {
        let g = NamedFamily::Theorem1Family { n: 5 }.build().unwrap();
        assert_eq!(g.intersection_array().unwrap(), None);
        // truncated Petersen is DDR but not DR
        let t = NamedFamily::TriangleReplacedPetersen.build().unwrap();
        assert_eq!(t.intersection_array().unwrap(), None);
    }

    #[test]
    fn valency_recurrence() {
        let ia = IntersectionArray::new(vec![3, 2], vec![1, 1]).unwrap();
        assert_eq!(ia.valencies().unwrap(), RatSequence::from_ints([1, 3, 6]));

        let j213 = IntersectionArray::johnson(21, 3).unwrap();
        assert_eq!(j213, IntersectionArray::new(vec![54, 34, 16], vec![1, 4, 9]).unwrap());
        let v = j213.valencies().unwrap();
        assert_eq!(v, RatSequence::from_ints([1, 54, 459, 816]));

        let pent = IntersectionArray::new(vec![2, 1], vec![1, 1]).unwrap();
        assert_eq!(pent.valencies().unwrap(), RatSequence::from_ints([1, 2, 2]));
    }

    #[test]
    fn infeasible_array_reported() {
        let ia = IntersectionArray::new(vec![3, 2], vec![1, 4]).unwrap();
        assert!(matches!(
            ia.valencies(),
            Err(ArrayError::NonIntegralValency { index: 2, .. })
        ));
    }

    #[test]
    fn certificates() {
        for ia in [
            IntersectionArray::new(vec![3, 2], vec![1, 1]).unwrap(),
            IntersectionArray::johnson(21, 3).unwrap(),
            IntersectionArray::new(vec![5, 4], vec![1, 2]).unwrap(),
        ] {
            let cert = ia.lc_certificate().unwrap();
            assert!(cert.all_hold(), "{ia:?} -> {cert:?}");
        }
        let cert = IntersectionArray::new(vec![5, 4], vec![1, 2])
            .unwrap()
            .lc_certificate()
            .unwrap();
        assert_eq!(cert.valencies, RatSequence::from_ints([1, 5, 10]));
    }

    #[test]
    fn srg_extraction_and_bounds() {
        let p = NamedFamily::Petersen.build().unwrap();
        let srg = p.srg_parameters().unwrap().unwrap();
        assert_eq!(
            srg,
            SrgParameters { nu: 10, kappa: 3, lambda: 0, mu: 1 }
        );
        assert!(srg.identity_holds());
        assert_eq!(srg_bounds(3), SrgBounds { lower: 6, moore_upper: 10 });
        assert!(srg_bounds_check(&srg).holds());

        let c5 = NamedFamily::Cycle { q: 5 }.build().unwrap();
        let srg = c5.srg_parameters().unwrap().unwrap();
        assert_eq!(srg, SrgParameters { nu: 5, kappa: 2, lambda: 0, mu: 1 });
        assert_eq!(srg_bounds(2), SrgBounds { lower: 5, moore_upper: 5 });
        assert!(srg_bounds_check(&srg).holds());

        let c6 = NamedFamily::Cycle { q: 6 }.build().unwrap();
        assert_eq!(c6.srg_parameters().unwrap(), None);

        // degree 1: infeasible range
        let b = srg_bounds(1);
        assert_eq!((b.lower, b.moore_upper), (3, 2));
    }
}
