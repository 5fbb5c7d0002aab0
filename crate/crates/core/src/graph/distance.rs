//! Distance profiles, DDR detection, LC verdicts, and the minimal-LC-power
//! scan via profile polynomials.

use super::{Graph, GraphError};
use crate::seq::{IntPolynomial, RatSequence, Verdict};
use serde::Serialize;
use std::collections::VecDeque;

/// Layer sizes of the breadth-first partition around a base vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceProfile {
    pub base: usize,
    /// v_i = |Gamma_i(base)|; v_0 = 1, indices 0..=eccentricity.
    pub counts: Vec<usize>,
}

impl DistanceProfile {
    pub fn eccentricity(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn as_sequence(&self) -> RatSequence {
        RatSequence::from_ints(self.counts.iter().map(|&c| c as i64))
    }

    pub fn as_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_ints(self.counts.iter().map(|&c| c as i64))
    }
}

/// LC status of a whole graph, with the witness vertex when it holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LcReport {
    pub verdict: Verdict,
    /// Smallest vertex id with a log-concave profile, if any.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PowerScanRow {
    pub n: u32,
    pub coefficients: IntPolynomial,
    pub verdict: Verdict,
}

impl Graph {
    /// Distances from x, or an error naming an unreachable vertex.
    pub fn distances_from(&self, x: usize) -> Result<Vec<usize>, GraphError> {
        if x >= self.vertex_count() {
            return Err(GraphError::VertexOutOfRange(x, self.vertex_count()));
        }
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[x] = 0;
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if let Some(unreachable) = dist.iter().position(|&d| d == usize::MAX) {
            return Err(GraphError::Disconnected {
                from: x,
                unreachable,
            });
        }
        Ok(dist)
    }

    pub fn distance_profile(&self, x: usize) -> Result<DistanceProfile, GraphError> {
        let dist = self.distances_from(x)?;
        let ecc = dist.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; ecc + 1];
        for d in dist {
            counts[d] += 1;
        }
        Ok(DistanceProfile { base: x, counts })
    }

    /// The profile packaged as a generating polynomial sum v_i t^i.
    pub fn profile_polynomial(&self, x: usize) -> Result<IntPolynomial, GraphError> {
        Ok(self.distance_profile(x)?.as_polynomial())
    }

    /// Distance degree regular: every vertex has the same profile.
    pub fn is_ddr(&self) -> Result<bool, GraphError> {
        let first = self.distance_profile(0)?.counts;
        for x in 1..self.vertex_count() {
            if self.distance_profile(x)?.counts != first {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_lc_at(&self, x: usize) -> Result<Verdict, GraphError> {
        Ok(self.distance_profile(x)?.as_sequence().is_log_concave())
    }

    /// LC graph: some vertex has a log-concave profile. The witness is the
    /// smallest such vertex id.
    pub fn is_lc_graph(&self) -> Result<LcReport, GraphError> {
        let mut first_failure = Verdict::Holds;
        for x in 0..self.vertex_count() {
            match self.is_lc_at(x)? {
                Verdict::Holds => {
                    return Ok(LcReport {
                        verdict: Verdict::Holds,
                        witness: Some(x),
                    })
                }
                v => {
                    if x == 0 {
                        first_failure = v;
                    }
                }
            }
        }
        Ok(LcReport {
            verdict: first_failure,
            witness: None,
        })
    }

    /// Smallest n <= n_max with G^(box n) log-concave at the diagonal image
    /// of x, via powers of the profile polynomial. Returns the scan table and
    /// the minimal n, if any.
    pub fn minimal_lc_power(
        &self,
        x: usize,
        n_max: u32,
    ) -> Result<(Vec<PowerScanRow>, Option<u32>), GraphError> {
        let base = self.profile_polynomial(x)?;
        let mut rows = Vec::new();
        let mut found = None;
        let mut current = base.clone();
        for n in 1..=n_max {
            let verdict = current.is_log_concave();
            rows.push(PowerScanRow {
                n,
                coefficients: current.clone(),
                verdict,
            });
            if verdict.holds() && found.is_none() {
                found = Some(n);
                break;
            }
            current = current.mul(&base);
        }
        Ok((rows, found))
    }
}
