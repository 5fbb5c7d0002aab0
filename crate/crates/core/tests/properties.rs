//! Property-based tests for the module-level invariants.

use lcgraph::forms;
use lcgraph::graph::NamedFamily;
use lcgraph::{Graph, IntPolynomial, RatSequence, Verdict};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Positive coefficients, no internal zeros, arbitrary length 1..=8.
fn positive_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(1i64..200, 1..=8).prop_map(IntPolynomial::from_ints)
}

fn positive_sequence() -> impl Strategy<Value = RatSequence> {
    prop::collection::vec((1i64..500, 1i64..20), 1..=10).prop_map(|pairs| {
        RatSequence::new(
            pairs
                .into_iter()
                .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    })
}

/// Log-concave by construction: successive ratios sorted nonincreasing.
fn lc_terms_from_ratios(mut ratios: Vec<(i64, i64)>) -> Vec<BigRational> {
    ratios.sort_by(|&(a, b), &(c, d)| (c * b).cmp(&(a * d)));
    let mut terms = vec![BigRational::from_integer(BigInt::from(1))];
    for (num, den) in ratios {
        let last = terms.last().unwrap().clone();
        terms.push(last * BigRational::new(BigInt::from(num), BigInt::from(den)));
    }
    terms
}

fn lc_sequence(len: impl Strategy<Value = usize>) -> impl Strategy<Value = RatSequence> {
    len.prop_flat_map(|n| prop::collection::vec((1i64..=12, 1i64..=12), n - 1))
        .prop_map(|ratios| RatSequence::new(lc_terms_from_ratios(ratios)))
}

fn lc_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec((1i64..=12, 1i64..=12), 0..=7).prop_map(|ratios| {
        let scale: BigRational = ratios
            .iter()
            .map(|&(_, d)| BigRational::from_integer(BigInt::from(d)))
            .product();
        let coeffs: Vec<BigInt> = lc_terms_from_ratios(ratios)
            .into_iter()
            .map(|t| (t * &scale).to_integer())
            .collect();
        IntPolynomial::new(coeffs)
    })
}

/// Random connected graph on 2..=10 vertices: a random attachment tree plus
/// extra random edges.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=10)
        .prop_flat_map(|n| {
            let tree = prop::collection::vec(0usize..n, n - 1);
            let extra = prop::collection::vec((0usize..n, 0usize..n), 0..2 * n);
            (Just(n), tree, extra)
        })
        .prop_map(|(n, tree, extra)| {
            let mut edges: Vec<(usize, usize)> = tree
                .into_iter()
                .enumerate()
                .map(|(i, r)| (r % (i + 1), i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|&(u, v)| u != v));
            Graph::new(n, edges).unwrap()
        })
}

proptest! {
    /// Product of log-concave positive polynomials is log-concave.
    #[test]
    fn lc_product_closure(p in lc_poly(), q in lc_poly()) {
        prop_assert_eq!(p.is_log_concave(), Verdict::Holds);
        prop_assert_eq!(q.is_log_concave(), Verdict::Holds);
        prop_assert_eq!(p.mul(&q).is_log_concave(), Verdict::Holds);
    }

    /// Random positive polynomials that happen to be log-concave also
    /// multiply log-concavely (unconstructed generator as a cross-check).
    #[test]
    fn lc_product_closure_filtered(p in positive_poly(), q in positive_poly()) {
        if p.is_log_concave().holds() && q.is_log_concave().holds() {
            prop_assert_eq!(p.mul(&q).is_log_concave(), Verdict::Holds);
        }
    }

    /// Log-concavity implies unimodality for positive sequences.
    #[test]
    fn lc_implies_unimodal(s in positive_sequence()) {
        prop_assume!(s.is_log_concave().holds());
        prop_assert_eq!(s.is_unimodal(), Verdict::Holds);
    }

    /// Termwise product of log-concave positive sequences is log-concave.
    #[test]
    fn termwise_lc_closure(
        (a, b) in (2usize..=10).prop_flat_map(|n| (lc_sequence(Just(n)), lc_sequence(Just(n))))
    ) {
        prop_assert_eq!(a.is_log_concave(), Verdict::Holds);
        prop_assert_eq!(b.is_log_concave(), Verdict::Holds);
        prop_assert_eq!(a.termwise_product(&b).is_log_concave(), Verdict::Holds);
    }

    /// Profile polynomial of a Cartesian product factors through the parts.
    #[test]
    fn product_identity(a in connected_graph(), b in connected_graph()) {
        let prod = a.cartesian_product(&b);
        let u = a.vertex_count() / 2;
        let v = b.vertex_count() / 2;
        let fu = a.profile_polynomial(u).unwrap();
        let fv = b.profile_polynomial(v).unwrap();
        let direct = prod.profile_polynomial(u * b.vertex_count() + v).unwrap();
        prop_assert_eq!(direct, fu.mul(&fv));
    }

    /// Power identity on the diagonal vertex.
    #[test]
    fn power_identity(g in connected_graph(), n in 1u32..=3) {
        let f = g.profile_polynomial(0).unwrap();
        let power = g.cartesian_power(n);
        let direct = power.profile_polynomial(power.diagonal_vertex(0, n)).unwrap();
        prop_assert_eq!(direct, f.pow(n));
    }
}

/// DR implies DDR, and the extracted array's valencies reproduce the common
/// distance profile (round-trip).
#[test]
fn dr_implies_ddr_and_array_round_trip() {
    let corpus: Vec<Graph> = vec![
        NamedFamily::Petersen.build().unwrap(),
        NamedFamily::Cycle { q: 5 }.build().unwrap(),
        NamedFamily::Cycle { q: 6 }.build().unwrap(),
        NamedFamily::Complete { n: 5 }.build().unwrap(),
        NamedFamily::CompleteBipartite { m: 3, n: 3 }.build().unwrap(),
        NamedFamily::Hypercube { n: 3 }.build().unwrap(),
        NamedFamily::Hypercube { n: 4 }.build().unwrap(),
        NamedFamily::Hamming { n: 2, q: 3 }.build().unwrap(),
        NamedFamily::Johnson { n: 5, d: 2 }.build().unwrap(),
        NamedFamily::Johnson { n: 6, d: 3 }.build().unwrap(),
    ];
    for g in &corpus {
        let ia = g
            .intersection_array()
            .unwrap()
            .expect("corpus graphs are distance-regular");
        assert!(g.is_ddr().unwrap());
        let profile = g.distance_profile(0).unwrap().as_sequence();
        assert_eq!(ia.valencies().unwrap(), profile);
    }
}

/// Cartesian products of DDR log-concave graphs stay DDR and log-concave.
#[test]
fn ddr_lc_closure() {
    let ddr_lc: Vec<Graph> = vec![
        NamedFamily::Petersen.build().unwrap(),
        NamedFamily::Cycle { q: 6 }.build().unwrap(),
        NamedFamily::Hypercube { n: 3 }.build().unwrap(),
        NamedFamily::Complete { n: 4 }.build().unwrap(),
    ];
    for a in &ddr_lc {
        assert!(a.is_ddr().unwrap());
        assert!(a.is_lc_graph().unwrap().verdict.holds());
        for b in &ddr_lc {
            let prod = a.cartesian_product(b);
            assert!(prod.is_ddr().unwrap());
            assert!(prod.is_lc_graph().unwrap().verdict.holds());
        }
    }
}

/// Johnson multiplicities agree with the scheme-route multiplicities from
/// the Johnson intersection array.
#[test]
fn johnson_multiplicity_route_agreement() {
    use lcgraph::graph::IntersectionArray;
    use lcgraph::scheme::{spectrum_from_intersection_array, DEFAULT_TOLERANCE};
    for n in 2..=15u64 {
        for d in 1..=5u64.min(n / 2) {
            let closed = forms::johnson_multiplicities(n, d).unwrap();
            let ia = IntersectionArray::johnson(n, d).unwrap();
            let spec = spectrum_from_intersection_array(&ia, DEFAULT_TOLERANCE).unwrap();
            let from_scheme = spec
                .multiplicities_exact()
                .expect("Johnson eigenvalues are integral");
            assert_eq!(closed, from_scheme, "J({n},{d})");
        }
    }
}
