//! Spectra of P-polynomial schemes from intersection arrays: eigenvalues of
//! the tridiagonal intersection matrix, eigenmatrix P, dual eigenmatrix Q,
//! and multiplicities.

use super::scalar::Scalar;
use super::SchemeError;
use crate::graph::IntersectionArray;
use crate::seq::RatSequence;
use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Spectrum data over one arithmetic mode.
#[derive(Debug, Clone)]
pub struct SpectrumData<T> {
    pub n: u64,
    pub d: usize,
    /// Eigenvalues of the first relation, descending; theta_0 = b_0.
    pub eigenvalues: Vec<T>,
    /// P[i][j]: eigenvalue of A_j on eigenspace i; row 0 = valencies.
    pub p: Vec<Vec<T>>,
    /// Q[l][i] = m_i P[i][l] / v_l.
    pub q: Vec<Vec<T>>,
    pub multiplicities: Vec<T>,
    pub valencies: Vec<T>,
}

/// A scheme spectrum in whichever arithmetic mode the eigenvalues allow.
#[derive(Debug, Clone)]
pub enum SchemeSpectrum {
    Exact(SpectrumData<BigRational>),
    Float {
        data: SpectrumData<f64>,
        tolerance: f64,
    },
}

impl<T: Scalar> SpectrumData<T> {
    fn json_fields(&self) -> serde_json::Map<String, serde_json::Value> {
        use serde_json::{json, Value};
        let vec1 = |xs: &[T]| Value::Array(xs.iter().map(Scalar::to_json).collect());
        let vec2 = |xs: &[Vec<T>]| {
            Value::Array(
                xs.iter()
                    .map(|row| Value::Array(row.iter().map(Scalar::to_json).collect()))
                    .collect(),
            )
        };
        let mut map = serde_json::Map::new();
        map.insert("n".into(), json!(self.n));
        map.insert("d".into(), json!(self.d));
        map.insert("eigenvalues".into(), vec1(&self.eigenvalues));
        map.insert("P".into(), vec2(&self.p));
        map.insert("Q".into(), vec2(&self.q));
        map.insert("multiplicities".into(), vec1(&self.multiplicities));
        map.insert("valencies".into(), vec1(&self.valencies));
        map
    }
}

impl Serialize for SchemeSpectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map = match self {
            SchemeSpectrum::Exact(data) => {
                let mut m = data.json_fields();
                m.insert("mode".into(), "exact".into());
                m
            }
            SchemeSpectrum::Float { data, tolerance } => {
                let mut m = data.json_fields();
                m.insert("mode".into(), "float".into());
                m.insert("tolerance".into(), serde_json::json!(tolerance));
                m
            }
        };
        serde_json::Value::Object(map).serialize(s)
    }
}

impl SchemeSpectrum {
    pub fn is_exact(&self) -> bool {
        matches!(self, SchemeSpectrum::Exact(_))
    }

    pub fn class_count(&self) -> usize {
        match self {
            SchemeSpectrum::Exact(s) => s.d,
            SchemeSpectrum::Float { data, .. } => data.d,
        }
    }

    pub fn vertex_count(&self) -> u64 {
        match self {
            SchemeSpectrum::Exact(s) => s.n,
            SchemeSpectrum::Float { data, .. } => data.n,
        }
    }

    pub fn multiplicities_f64(&self) -> Vec<f64> {
        match self {
            SchemeSpectrum::Exact(s) => s.multiplicities.iter().map(Scalar::to_f64).collect(),
            SchemeSpectrum::Float { data, .. } => data.multiplicities.clone(),
        }
    }

    /// Exact multiplicities as a rational sequence; None in float mode.
    pub fn multiplicities_exact(&self) -> Option<RatSequence> {
        match self {
            SchemeSpectrum::Exact(s) => Some(RatSequence::new(s.multiplicities.clone())),
            SchemeSpectrum::Float { .. } => None,
        }
    }
}

/// Builds the spectrum of the P-polynomial scheme attached to a feasible
/// intersection array. If every eigenvalue of the tridiagonal intersection
/// matrix is rational (= integral, since the characteristic polynomial is
/// monic with integer coefficients), everything stays exact; otherwise the
/// computation drops to floats with the given tolerance.
pub fn spectrum_from_intersection_array(
    ia: &IntersectionArray,
    tolerance: f64,
) -> Result<SchemeSpectrum, SchemeError> {
    let valencies = ia.valencies()?;
    let d = ia.diameter();
    let n: u64 = valencies
        .terms()
        .iter()
        .map(|v| {
            let i = v.to_integer();
            u64::try_from(i).expect("valencies are positive integers")
        })
        .sum();

    match integer_eigenvalues(ia) {
        Some(mut roots) => {
            roots.sort_by(|a, b| b.cmp(a));
            let eigenvalues: Vec<BigRational> = roots
                .into_iter()
                .map(BigRational::from_integer)
                .collect();
            let data = assemble(ia, &valencies, n, d, eigenvalues);
            Ok(SchemeSpectrum::Exact(data))
        }
        None => {
            let eigenvalues = float_eigenvalues(ia);
            let data = assemble(ia, &valencies, n, d, eigenvalues);
            Ok(SchemeSpectrum::Float {
                data,
                tolerance,
            })
        }
    }
}

fn assemble<T: Scalar>(
    ia: &IntersectionArray,
    valencies: &RatSequence,
    n: u64,
    d: usize,
    eigenvalues: Vec<T>,
) -> SpectrumData<T> {
    let v: Vec<T> = valencies
        .terms()
        .iter()
        .map(|x| T::from_rational(x))
        .collect();
    let p: Vec<Vec<T>> = eigenvalues
        .iter()
        .map(|theta| p_row(ia, theta, d))
        .collect();
    let n_t = T::from_u64(n);
    let multiplicities: Vec<T> = p
        .iter()
        .map(|row| {
            let denom = row
                .iter()
                .zip(&v)
                .fold(T::zero(), |acc, (pij, vj)| {
                    acc.add(&pij.mul(pij).div(vj))
                });
            n_t.div(&denom)
        })
        .collect();
    let q: Vec<Vec<T>> = (0..=d)
        .map(|l| {
            (0..=d)
                .map(|i| multiplicities[i].mul(&p[i][l]).div(&v[l]))
                .collect()
        })
        .collect();
    SpectrumData {
        n,
        d,
        eigenvalues,
        p,
        q,
        multiplicities,
        valencies: v,
    }
}

/// Three-term recurrence c_{j+1} P_{j+1} = (theta - a_j) P_j - b_{j-1} P_{j-1}
/// from P_0 = 1.
fn p_row<T: Scalar>(ia: &IntersectionArray, theta: &T, d: usize) -> Vec<T> {
    let mut row = Vec::with_capacity(d + 1);
    row.push(T::one());
    for j in 0..d {
        let a_j = ia.a(j);
        let a_t = if a_j >= 0 {
            T::from_u64(a_j as u64)
        } else {
            T::zero().sub(&T::from_u64((-a_j) as u64))
        };
        let mut next = theta.sub(&a_t).mul(&row[j]);
        if j > 0 {
            next = next.sub(&T::from_u64(ia.b[j - 1]).mul(&row[j - 1]));
        }
        row.push(next.div(&T::from_u64(ia.c[j])));
    }
    row
}

/// Characteristic polynomial of the tridiagonal intersection matrix, by the
/// determinant recurrence; coefficients are exact integers.
fn char_poly(ia: &IntersectionArray) -> Vec<BigInt> {
    let d = ia.diameter();
    // polynomials as coefficient vectors in lambda
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)]; // p_{-1} treated below
    let mut cur: Vec<BigInt> = vec![BigInt::from(1)];
    // p_0 = 1, p_1 = lambda - a_0, p_{j+1} = (lambda - a_j) p_j - b_{j-1} c_j p_{j-1}
    for j in 0..=d {
        if j == 0 {
            let a0 = BigInt::from(ia.a(0));
            prev = cur.clone();
            cur = vec![-a0, BigInt::from(1)];
            continue;
        }
        let a = BigInt::from(ia.a(j));
        // (lambda - a) * cur
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, coef) in cur.iter().enumerate() {
            next[i + 1] += coef;
            next[i] -= &a * coef;
        }
        let bc = BigInt::from(ia.b[j - 1]) * BigInt::from(ia.c[j - 1]);
        for (i, coef) in prev.iter().enumerate() {
            next[i] -= &bc * coef;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// All integer roots of the characteristic polynomial, if it splits over the
/// integers; eigenvalues lie in [-b_0, b_0].
fn integer_eigenvalues(ia: &IntersectionArray) -> Option<Vec<BigInt>> {
    let poly = char_poly(ia);
    let d = ia.diameter();
    let k = ia.degree() as i64;
    let mut roots = Vec::new();
    for x in -k..=k {
        let xv = BigInt::from(x);
        let mut acc = BigInt::zero();
        for coef in poly.iter().rev() {
            acc = acc * &xv + coef;
        }
        if acc.is_zero() {
            roots.push(xv);
        }
    }
    (roots.len() == d + 1).then_some(roots)
}

/// Eigenvalues via the symmetrized tridiagonal matrix, descending.
fn float_eigenvalues(ia: &IntersectionArray) -> Vec<f64> {
    let d = ia.diameter();
    let mut m = DMatrix::<f64>::zeros(d + 1, d + 1);
    for j in 0..=d {
        m[(j, j)] = ia.a(j) as f64;
        if j < d {
            let off = ((ia.b[j] * ia.c[j]) as f64).sqrt();
            m[(j, j + 1)] = off;
            m[(j + 1, j)] = off;
        }
    }
    let eig = SymmetricEigen::new(m);
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    vals
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn petersen_spectrum_exact() {
        let ia = IntersectionArray::new(vec![3, 2], vec![1, 1]).unwrap();
        let SchemeSpectrum::Exact(s) = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap()
        else {
            panic!("petersen should be exact");
        };
        assert_eq!(s.n, 10);
        assert_eq!(s.eigenvalues, vec![rat(3), rat(1), rat(-2)]);
        assert_eq!(s.multiplicities, vec![rat(1), rat(5), rat(4)]);
        assert_eq!(s.p[0], vec![rat(1), rat(3), rat(6)]);
    }

    #[test]
    fn johnson_21_3_exact() {
        let ia = IntersectionArray::johnson(21, 3).unwrap();
        let SchemeSpectrum::Exact(s) = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap()
        else {
            panic!("J(21,3) should be exact");
        };
        assert_eq!(s.n, 1330);
        assert_eq!(
            s.multiplicities,
            vec![rat(1), rat(20), rat(189), rat(1120)]
        );
        assert_eq!(s.eigenvalues, vec![rat(54), rat(33), rat(14), rat(-3)]);
    }

    #[test]
    fn pentagon_drops_to_float() {
        let ia = IntersectionArray::new(vec![2, 1], vec![1, 1]).unwrap();
        let spec = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap();
        let SchemeSpectrum::Float { data, .. } = spec else {
            panic!("pentagon eigenvalues are irrational");
        };
        let golden = 5f64.sqrt();
        assert!((data.eigenvalues[0] - 2.0).abs() < 1e-9);
        assert!((data.eigenvalues[1] - (-1.0 + golden) / 2.0).abs() < 1e-9);
        assert!((data.eigenvalues[2] - (-1.0 - golden) / 2.0).abs() < 1e-9);
        for (m, expect) in data.multiplicities.iter().zip([1.0, 2.0, 2.0]) {
            assert!((m - expect).abs() < 1e-9);
        }
    }

    #[test]
    fn column_orthogonality_and_sum() {
        for ia in [
            IntersectionArray::new(vec![3, 2], vec![1, 1]).unwrap(),
            IntersectionArray::hamming(3, 2).unwrap(),
            IntersectionArray::johnson(8, 3).unwrap(),
        ] {
            let SchemeSpectrum::Exact(s) =
                spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap()
            else {
                panic!("expected exact");
            };
            let n = rat(s.n as i64);
            let total: BigRational = s.multiplicities.iter().sum();
            assert_eq!(total, n);
            assert!(s.multiplicities[0].is_one());
            for j in 0..=s.d {
                for jp in 0..=s.d {
                    let mut acc = <BigRational as num_traits::Zero>::zero();
                    for i in 0..=s.d {
                        acc += &s.multiplicities[i] * &s.p[i][j] * &s.p[i][jp];
                    }
                    let expect = if j == jp {
                        &n * &s.valencies[j]
                    } else {
                        <BigRational as num_traits::Zero>::zero()
                    };
                    assert_eq!(acc, expect);
                }
            }
        }
    }
}
