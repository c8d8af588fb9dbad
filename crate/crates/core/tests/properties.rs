use proptest::prelude::*;

use num_rational::Ratio;
use tev_core::graph::{
    build_complete_bipartite, certify_three_ev, closed_walk3_check, distinct_spectrum, Graph, SpectrumOutcome,
};
use tev_core::multiplicity::{check_multiplicity_equations, enumerate_multiplicity_arrays};
use tev_core::spectral::{check_spectral_conditions, enumerate_spectral};
use tev_core::valency::{check_valency_conditions, enumerate_valency_arrays};
use tev_core::{Eigenvalue, Int, Surd, Toggles};

fn approx(s: &Surd) -> f64 {
    s.terms()
        .map(|(d, c)| (*c.numer() as f64 / *c.denom() as f64) * (d as f64).sqrt())
        .sum()
}

fn surd() -> impl Strategy<Value = Surd> {
    prop::collection::vec((-6i64..=6, 1i64..=4, 1i64..=12), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Surd::zero(), |acc, (p, q, d)| &acc + &Surd::term(Ratio::new(p, q), d))
    })
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..9).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn surd_ring_laws(a in surd(), b in surd(), c in surd()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn surd_sign_agrees_with_floats(a in surd()) {
        // at most two radicals besides the rational part is what signum supports
        prop_assume!(a.terms().filter(|(d, _)| *d != 1).count() <= 2);
        let x = approx(&a);
        prop_assume!(x.abs() > 1e-9 || a.is_zero());
        let sign = a.signum().unwrap();
        prop_assert_eq!(sign, if a.is_zero() { std::cmp::Ordering::Equal } else { x.partial_cmp(&0.0).unwrap() });
    }

    #[test]
    fn graph_text_round_trip(g in random_graph()) {
        let back = Graph::parse(&g.to_text()).unwrap();
        prop_assert_eq!(back.edges_hash(), g.edges_hash());
        prop_assert_eq!(back, g);
    }

    #[test]
    fn spectrum_accounts_for_traces(g in random_graph()) {
        if let SpectrumOutcome::Distinct(spec) = distinct_spectrum::<Int>(&g).unwrap() {
            prop_assert_eq!(spec.iter().map(|(_, m)| m).sum::<usize>(), g.vertex_count());
            prop_assert!(closed_walk3_check(&g, &spec));
            prop_assert!(spec.windows(2).all(|w| w[0].0 > w[1].0));
        }
    }

    #[test]
    fn complete_bipartite_certifies(a in 1usize..=6, b in 1usize..=6) {
        let g = build_complete_bipartite(a, b).unwrap();
        let root = |q: Int| Eigenvalue::new(Ratio::from_integer(0), Ratio::from_integer(q), (a * b) as Int);
        prop_assume!(a + b > 2);
        let c = certify_three_ev::<Int>(&g, None);
        prop_assert!(c.ok, "{:?}", c.failures);
        prop_assert_eq!(&c.eigenvalues[0], &root(1).to_string());
        prop_assert_eq!(&c.eigenvalues[1], "0");
        prop_assert_eq!(&c.eigenvalues[2], &root(-1).to_string());
    }

    #[test]
    fn stage_outputs_satisfy_their_definitions(t in 3i64..=12, pick in any::<prop::sample::Index>()) {
        let toggles = Toggles::default();
        let params = enumerate_spectral(t, &toggles).unwrap();
        let p = params[pick.index(params.len())];
        prop_assert!(check_spectral_conditions(&p).unwrap().passes(&toggles));
        prop_assert_eq!(p.m * (t + 1), p.n + p.s - 1);
        for v in enumerate_valency_arrays(&p, &toggles).unwrap() {
            prop_assert!(check_valency_conditions(&v).passes(&toggles));
            for counts in enumerate_multiplicity_arrays(&v) {
                prop_assert!(check_multiplicity_equations(&v, &counts.counts).unwrap().all_hold());
            }
        }
    }
}
