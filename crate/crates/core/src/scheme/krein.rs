//! Krein parameters, Krein arrays, Property M, Q-polynomial orderings, and
//! the multiplicity log-concavity check.

use super::scalar::{lc_verdict, Scalar};
use super::spectrum::{SchemeSpectrum, SpectrumData};
use crate::seq::Verdict;
use num_rational::BigRational;
use serde::Serialize;

/// Krein tensor q^k_{ij}, stored as tensor[i][j][k].
#[derive(Debug, Clone)]
pub enum KreinTensor {
    Exact(Vec<Vec<Vec<BigRational>>>),
    Float {
        entries: Vec<Vec<Vec<f64>>>,
        tolerance: f64,
    },
}

fn tensor_json<T: Scalar>(t: &[Vec<Vec<T>>]) -> serde_json::Value {
    serde_json::Value::Array(
        t.iter()
            .map(|plane| {
                serde_json::Value::Array(
                    plane
                        .iter()
                        .map(|row| {
                            serde_json::Value::Array(row.iter().map(Scalar::to_json).collect())
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

impl Serialize for KreinTensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde_json::json;
        let v = match self {
            KreinTensor::Exact(t) => json!({"mode": "exact", "entries": tensor_json(t)}),
            KreinTensor::Float { entries, tolerance } => {
                json!({"mode": "float", "entries": tensor_json(entries), "tolerance": tolerance})
            }
        };
        v.serialize(s)
    }
}

impl KreinTensor {
    pub fn class_count(&self) -> usize {
        match self {
            KreinTensor::Exact(t) => t.len() - 1,
            KreinTensor::Float { entries, .. } => entries.len() - 1,
        }
    }

    /// Minimum entry (as f64 for reporting); the Krein condition requires it
    /// to be nonnegative (within tolerance in float mode).
    pub fn min_entry_f64(&self) -> f64 {
        match self {
            KreinTensor::Exact(t) => t
                .iter()
                .flatten()
                .flatten()
                .map(Scalar::to_f64)
                .fold(f64::INFINITY, f64::min),
            KreinTensor::Float { entries, .. } => entries
                .iter()
                .flatten()
                .flatten()
                .copied()
                .fold(f64::INFINITY, f64::min),
        }
    }

    pub fn krein_condition_holds(&self) -> bool {
        match self {
            KreinTensor::Exact(t) => t
                .iter()
                .flatten()
                .flatten()
                .all(|x| x.is_nonnegative_within(0.0)),
            KreinTensor::Float { entries, tolerance } => entries
                .iter()
                .flatten()
                .flatten()
                .all(|x| x.is_nonnegative_within(*tolerance)),
        }
    }
}

/// q^k_{ij} = (m_i m_j / n) sum_l P_il P_jl P_kl / v_l^2.
pub fn krein_tensor(spec: &SchemeSpectrum) -> KreinTensor {
    match spec {
        SchemeSpectrum::Exact(s) => KreinTensor::Exact(krein_entries(s)),
        SchemeSpectrum::Float { data, tolerance } => KreinTensor::Float {
            entries: krein_entries(data),
            tolerance: *tolerance,
        },
    }
}

fn krein_entries<T: Scalar>(s: &SpectrumData<T>) -> Vec<Vec<Vec<T>>> {
    let d = s.d;
    let n = T::from_u64(s.n);
    (0..=d)
        .map(|i| {
            (0..=d)
                .map(|j| {
                    (0..=d)
                        .map(|k| {
                            let mut acc = T::zero();
                            for l in 0..=d {
                                let vl2 = s.valencies[l].mul(&s.valencies[l]);
                                let term = s.p[i][l]
                                    .mul(&s.p[j][l])
                                    .mul(&s.p[k][l])
                                    .div(&vl2);
                                acc = acc.add(&term);
                            }
                            s.multiplicities[i]
                                .mul(&s.multiplicities[j])
                                .div(&n)
                                .mul(&acc)
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// Krein array {b*_0..b*_{d-1}; c*_1..c*_d} under an ordering of the
/// idempotents E_1..E_d (E_0 stays fixed).
#[derive(Debug, Clone, PartialEq)]
pub struct KreinArray {
    pub bstar: Vec<BigRational>,
    pub cstar: Vec<BigRational>,
}

impl Serialize for KreinArray {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let j = serde_json::json!({
            "bstar": self.bstar.iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "cstar": self.cstar.iter().map(Scalar::to_json).collect::<Vec<_>>(),
        });
        j.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KreinArrayF64 {
    pub bstar: Vec<f64>,
    pub cstar: Vec<f64>,
}

/// Generic extraction: b*_i = q^i_{1,i+1}, c*_i = q^i_{1,i-1} with all
/// indices routed through the ordering (ordering[j-1] = original index
/// playing the role of E_j).
fn krein_array_generic<T: Scalar>(tensor: &[Vec<Vec<T>>], ordering: &[usize]) -> (Vec<T>, Vec<T>) {
    let d = tensor.len() - 1;
    assert_eq!(ordering.len(), d, "ordering must permute 1..=d");
    let map = |j: usize| if j == 0 { 0 } else { ordering[j - 1] };
    let q = |i: usize, j: usize, k: usize| tensor[map(i)][map(j)][map(k)].clone();
    let bstar = (0..d).map(|i| q(1, i + 1, i)).collect();
    let cstar = (1..=d).map(|i| q(1, i - 1, i)).collect();
    (bstar, cstar)
}

/// Krein array in whichever mode the tensor carries.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum KreinArrayMode {
    Exact(KreinArray),
    Float(KreinArrayF64),
}

pub fn krein_array(kt: &KreinTensor, ordering: &[usize]) -> KreinArrayMode {
    match kt {
        KreinTensor::Exact(t) => {
            let (bstar, cstar) = krein_array_generic(t, ordering);
            KreinArrayMode::Exact(KreinArray { bstar, cstar })
        }
        KreinTensor::Float { entries, .. } => {
            let (bstar, cstar) = krein_array_generic(entries, ordering);
            KreinArrayMode::Float(KreinArrayF64 { bstar, cstar })
        }
    }
}

impl KreinArrayMode {
    pub fn property_m(&self) -> PropertyM {
        match self {
            KreinArrayMode::Exact(ka) => property_m(ka),
            KreinArrayMode::Float(ka) => property_m_f64(ka),
        }
    }

    pub fn exact(&self) -> Option<&KreinArray> {
        match self {
            KreinArrayMode::Exact(ka) => Some(ka),
            KreinArrayMode::Float(_) => None,
        }
    }
}

/// The identity ordering 1..=d.
pub fn natural_ordering(d: usize) -> Vec<usize> {
    (1..=d).collect()
}

/// Property M: b* nonincreasing and c* nondecreasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PropertyM {
    Holds,
    /// side is 'b' or 'c'; index is the first i with the comparison failing
    /// (b*_i < b*_{i+1} or c*_i > c*_{i+1}).
    Fails { side: char, index: usize },
}

impl PropertyM {
    pub fn holds(&self) -> bool {
        matches!(self, PropertyM::Holds)
    }
}

pub fn property_m(ka: &KreinArray) -> PropertyM {
    property_m_generic(&ka.bstar, &ka.cstar)
}

pub fn property_m_f64(ka: &KreinArrayF64) -> PropertyM {
    property_m_generic(&ka.bstar, &ka.cstar)
}

fn property_m_generic<T: PartialOrd>(bstar: &[T], cstar: &[T]) -> PropertyM {
    for i in 0..bstar.len().saturating_sub(1) {
        if bstar[i] < bstar[i + 1] {
            return PropertyM::Fails { side: 'b', index: i };
        }
    }
    for i in 0..cstar.len().saturating_sub(1) {
        if cstar[i] > cstar[i + 1] {
            return PropertyM::Fails {
                side: 'c',
                index: i + 1,
            };
        }
    }
    PropertyM::Holds
}

/// Smallest (lexicographically) ordering of E_1..E_d making the Krein
/// tensor vanish outside the triangle-inequality pattern, or None.
pub fn find_q_polynomial_ordering(kt: &KreinTensor) -> Option<Vec<usize>> {
    let d = kt.class_count();
    assert!(d <= 8, "ordering search is brute force over d! orderings");
    let check = |ordering: &[usize]| -> bool {
        let map = |j: usize| if j == 0 { 0 } else { ordering[j - 1] };
        for i in 0..=d {
            for j in 0..=d {
                for k in 0..=d {
                    let outside = (i as i64 - j as i64).unsigned_abs() as usize > k || k > i + j;
                    if !outside {
                        continue;
                    }
                    let zero = match kt {
                        KreinTensor::Exact(t) => t[map(i)][map(j)][map(k)].is_zero_within(0.0),
                        KreinTensor::Float { entries, tolerance } => {
                            // scale-aware zero test against the multiplicities
                            entries[map(i)][map(j)][map(k)].is_zero_within(*tolerance * 1e3)
                        }
                    };
                    if !zero {
                        return false;
                    }
                }
            }
        }
        true
    };
    permutations(d).into_iter().find(|ord| check(ord))
}

/// All permutations of 1..=d in lexicographic order.
fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let items: Vec<usize> = (1..=d).collect();
    let mut stack = vec![(Vec::new(), items)];
    while let Some((prefix, rest)) = stack.pop() {
        if rest.is_empty() {
            out.push(prefix);
            continue;
        }
        // push in reverse so the pop order is lexicographic
        for idx in (0..rest.len()).rev() {
            let mut p = prefix.clone();
            p.push(rest[idx]);
            let mut r = rest.clone();
            r.remove(idx);
            stack.push((p, r));
        }
    }
    out
}

/// Multiplicity log-concavity plus the term-by-term ratio identity
/// m_i / m_{i-1} = b*_{i-1} / c*_i.
#[derive(Debug, Clone, Serialize)]
pub struct MultiplicityLcReport {
    pub lc_verdict: Verdict,
    pub ratio_identity_holds: bool,
    /// m_i / m_{i-1} for i = 1..=d, as f64 for display.
    pub ratios: Vec<f64>,
}

pub fn multiplicity_lc(spec: &SchemeSpectrum, ordering: &[usize]) -> MultiplicityLcReport {
    let kt = krein_tensor(spec);
    match (spec, &kt) {
        (SchemeSpectrum::Exact(s), KreinTensor::Exact(t)) => {
            let m = reorder(&s.multiplicities, ordering);
            let (bstar, cstar) = krein_array_generic(t, ordering);
            let ratio_identity_holds = (1..m.len()).all(|i| {
                let lhs = &m[i] / &m[i - 1];
                let rhs = &bstar[i - 1] / &cstar[i - 1];
                lhs == rhs
            });
            MultiplicityLcReport {
                lc_verdict: lc_verdict(&m),
                ratio_identity_holds,
                ratios: (1..m.len()).map(|i| Scalar::to_f64(&(&m[i] / &m[i - 1]))).collect(),
            }
        }
        (SchemeSpectrum::Float { data, tolerance }, KreinTensor::Float { entries, .. }) => {
            let m = reorder(&data.multiplicities, ordering);
            let (bstar, cstar) = krein_array_generic(entries, ordering);
            let ratio_identity_holds = (1..m.len()).all(|i| {
                (m[i] / m[i - 1]).approx_eq(&(bstar[i - 1] / cstar[i - 1]), *tolerance)
            });
            MultiplicityLcReport {
                lc_verdict: lc_verdict(&m),
                ratio_identity_holds,
                ratios: (1..m.len()).map(|i| m[i] / m[i - 1]).collect(),
            }
        }
        _ => unreachable!("tensor mode always matches spectrum mode"),
    }
}

fn reorder<T: Clone>(m: &[T], ordering: &[usize]) -> Vec<T> {
    let mut out = vec![m[0].clone()];
    out.extend(ordering.iter().map(|&i| m[i].clone()));
    out
}

/// Self-duality: P = Q entrywise; exact mode only.
pub fn self_duality_check(spec: &SchemeSpectrum) -> Option<bool> {
    match spec {
        SchemeSpectrum::Exact(s) => Some(s.p == s.q),
        SchemeSpectrum::Float { .. } => None,
    }
}
