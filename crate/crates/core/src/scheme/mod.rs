//! Association-scheme spectra: eigenmatrices, multiplicities, Krein
//! parameters, Q-polynomial orderings, Krein arrays, Property M, and the
//! multiplicity log-concavity theorem.

mod krein;
mod relations;
mod scalar;
mod spectrum;

pub use krein::{
    find_q_polynomial_ordering, krein_array, krein_tensor, multiplicity_lc, natural_ordering,
    property_m, property_m_f64, self_duality_check, KreinArray, KreinArrayF64, KreinArrayMode,
    KreinTensor, MultiplicityLcReport, PropertyM,
};
pub use relations::{IntersectionTensor, RelationSet};
pub use scalar::{lc_verdict, Scalar};
pub use spectrum::{
    spectrum_from_intersection_array, SchemeSpectrum, SpectrumData, DEFAULT_TOLERANCE,
};

use crate::graph::{ArrayError, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemeError {
    #[error(transparent)]
    Array(#[from] ArrayError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("scheme axiom ({axiom}) violated: {message}")]
    Axiom { axiom: u8, message: String },
    #[error("explicit scheme too large: {0} vertices exceeds the 500-vertex cap")]
    TooLarge(usize),
    #[error("eigenspace separation failed: expected {expected} eigenspaces, found {found}")]
    EigenspaceSeparation { expected: usize, found: usize },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{IntersectionArray, NamedFamily};
    use crate::seq::{parse_rational, Verdict};
    use num_rational::BigRational;

    fn j213_spectrum() -> SchemeSpectrum {
        let ia = IntersectionArray::johnson(21, 3).unwrap();
        spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap()
    }

    fn rat(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn j213_krein_array_exact_values() {
        let spec = j213_spectrum();
        let kt = krein_tensor(&spec);
        assert!(kt.krein_condition_holds());
        let ordering = find_q_polynomial_ordering(&kt).expect("Johnson schemes are Q-polynomial");
        assert_eq!(ordering, natural_ordering(3));
        let ka = krein_array(&kt, &ordering);
        let exact = ka.exact().unwrap();
        assert_eq!(
            exact.bstar,
            vec![rat("20"), rat("833/57"), rat("11200/1377")]
        );
        assert_eq!(exact.cstar, vec![rat("1"), rat("2380/1539"), rat("70/51")]);

        // Property M fails on the c side at the last step
        assert_eq!(ka.property_m(), PropertyM::Fails { side: 'c', index: 2 });

        // yet the multiplicities are log-concave and the ratio identity holds
        let report = multiplicity_lc(&spec, &ordering);
        assert_eq!(report.lc_verdict, Verdict::Holds);
        assert!(report.ratio_identity_holds);
    }

    #[test]
    fn krein_zeroth_slice_is_diagonal() {
        for ia in [
            IntersectionArray::new(vec![3, 2], vec![1, 1]).unwrap(),
            IntersectionArray::hamming(3, 2).unwrap(),
            IntersectionArray::johnson(21, 3).unwrap(),
        ] {
            let spec = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap();
            let SchemeSpectrum::Exact(data) = &spec else {
                panic!()
            };
            let KreinTensor::Exact(t) = krein_tensor(&spec) else {
                panic!()
            };
            let d = data.d;
            for i in 0..=d {
                for j in 0..=d {
                    let expect = if i == j {
                        data.multiplicities[i].clone()
                    } else {
                        num_traits::Zero::zero()
                    };
                    assert_eq!(t[i][j][0], expect, "q^0_{{{i}{j}}}");
                }
            }
        }
    }

    #[test]
    fn hamming_self_duality() {
        for (n, q) in [(2, 2), (3, 2), (4, 2), (2, 3)] {
            let ia = IntersectionArray::hamming(n, q).unwrap();
            let spec = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap();
            assert_eq!(self_duality_check(&spec), Some(true), "H({n},{q})");
        }
        // J(21,3) is not self-dual
        assert_eq!(self_duality_check(&j213_spectrum()), Some(false));
    }

    #[test]
    fn hamming_krein_array_equals_intersection_array() {
        let ia = IntersectionArray::hamming(3, 2).unwrap();
        let spec = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap();
        let kt = krein_tensor(&spec);
        let ordering = find_q_polynomial_ordering(&kt).unwrap();
        let ka = krein_array(&kt, &ordering);
        let exact = ka.exact().unwrap();
        let as_ints = |xs: &[BigRational]| -> Vec<u64> {
            xs.iter()
                .map(|x| u64::try_from(x.to_integer()).unwrap())
                .collect()
        };
        assert_eq!(as_ints(&exact.bstar), ia.b);
        assert_eq!(as_ints(&exact.cstar), ia.c);
        assert_eq!(ka.property_m(), PropertyM::Holds);
    }

    #[test]
    fn petersen_route_agreement() {
        let g = NamedFamily::Petersen.build().unwrap();
        let rels = RelationSet::from_graph_distances(&g).unwrap();
        let explicit = rels.spectrum(DEFAULT_TOLERANCE).unwrap();
        let ia = g.intersection_array().unwrap().unwrap();
        let from_array = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap();
        let SchemeSpectrum::Float { data, .. } = &explicit else {
            panic!()
        };
        let SchemeSpectrum::Exact(exact) = &from_array else {
            panic!()
        };
        for i in 0..=data.d {
            assert!(
                (data.multiplicities[i] - Scalar::to_f64(&exact.multiplicities[i])).abs() < 1e-6
            );
            for j in 0..=data.d {
                assert!((data.p[i][j] - Scalar::to_f64(&exact.p[i][j])).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn pentagon_relation_route() {
        let g = NamedFamily::Cycle { q: 5 }.build().unwrap();
        let rels = RelationSet::from_graph_distances(&g).unwrap();
        let spec = rels.spectrum(DEFAULT_TOLERANCE).unwrap();
        let SchemeSpectrum::Float { data, .. } = &spec else {
            panic!()
        };
        for (m, expect) in data.multiplicities.iter().zip([1.0, 2.0, 2.0]) {
            assert!((m - expect).abs() < 1e-9);
        }
        // petersen: p^1_{11} = 0 (lambda = 0)
        let p = NamedFamily::Petersen.build().unwrap();
        let tensor = RelationSet::from_graph_distances(&p)
            .unwrap()
            .intersection_tensor()
            .unwrap();
        assert_eq!(tensor.0[1][1][1], 0);
    }

    #[test]
    fn bad_relations_rejected() {
        // A_0 != I
        let a0 = vec![vec![0u8, 1], vec![1, 0]];
        let a1 = vec![vec![1u8, 0], vec![0, 1]];
        let err = RelationSet::new(vec![a0, a1]).unwrap_err();
        assert!(matches!(err, SchemeError::Axiom { axiom: 1, .. }));

        // theorem1_family distance relations do not close into a scheme
        let g = NamedFamily::Theorem1Family { n: 5 }.build().unwrap();
        assert!(RelationSet::from_graph_distances(&g).is_err());
    }

    #[test]
    fn h22_krein_tensor_equals_intersection_tensor() {
        let g = NamedFamily::Hamming { n: 2, q: 2 }.build().unwrap();
        let rels = RelationSet::from_graph_distances(&g).unwrap();
        let ptensor = rels.intersection_tensor().unwrap();
        let ia = g.intersection_array().unwrap().unwrap();
        let spec = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap();
        let KreinTensor::Exact(qt) = krein_tensor(&spec) else {
            panic!()
        };
        let d = spec.class_count();
        for i in 0..=d {
            for j in 0..=d {
                for k in 0..=d {
                    assert_eq!(
                        qt[i][j][k],
                        BigRational::from_integer(ptensor.0[i][j][k].into()),
                        "({i},{j},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn definitional_krein_check_small() {
        let g = NamedFamily::Petersen.build().unwrap();
        let rels = RelationSet::from_graph_distances(&g).unwrap();
        let spec = rels.spectrum(DEFAULT_TOLERANCE).unwrap();
        let KreinTensor::Float { entries, .. } = krein_tensor(&spec) else {
            panic!()
        };
        let dev = rels.krein_definitional_check(&spec, &entries).unwrap();
        assert!(dev < 1e-9, "max deviation {dev}");
    }

    #[test]
    fn two_class_always_q_polynomial() {
        let ia = IntersectionArray::new(vec![3, 2], vec![1, 1]).unwrap();
        let spec = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap();
        let kt = krein_tensor(&spec);
        assert!(find_q_polynomial_ordering(&kt).is_some());
    }
}
