//! Graphs that really have spectrum `{s, 1, -t}` must get through every
//! stage and every elimination check.

use std::path::PathBuf;

use tev_core::graph::{self, distinct_spectrum, Graph, SpectrumOutcome};
use tev_core::multiplicity::{check_multiplicity_equations, is_feasible_multiplicity, LeafRule};
use tev_core::refinement::{enumerate_profiles, quotient_matrix_search, refute_one, QuotientOutcome};
use tev_core::{Candidate, Eigenvalue, Int, MultiplicityArray, SpectralParams, Status, Toggles, ValencyArray};

fn corpus(name: &str) -> Graph {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name);
    Graph::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Reads `(t, n, s, m)` off the computed spectrum.
fn params_of(g: &Graph) -> SpectralParams {
    let SpectrumOutcome::Distinct(spec) = distinct_spectrum::<Int>(g).unwrap() else {
        panic!("more than three eigenvalues");
    };
    assert_eq!(spec.len(), 3);
    assert_eq!(spec[1], (Eigenvalue::integer(1), spec[1].1));
    let int = |e: &Eigenvalue| {
        assert!(e.is_rational() && e.p().is_integer());
        e.p().to_integer()
    };
    let (s, t, m) = (int(&spec[0].0), -int(&spec[2].0), spec[2].1 as Int);
    SpectralParams::new(t, g.vertex_count() as Int, s, m).unwrap()
}

fn candidate_of(g: &Graph) -> (Candidate, Vec<Vec<usize>>) {
    let p = params_of(g);
    let part = g.valency_partition();
    let ks: Vec<Int> = part.iter().map(|cell| g.degree(cell[0]) as Int).collect();
    let counts: Vec<Int> = part.iter().map(|cell| cell.len() as Int).collect();
    let v = ValencyArray::for_graph(p, &ks).unwrap();
    (Candidate::new(v, MultiplicityArray { counts }).unwrap(), part)
}

fn examples() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", corpus("petersen.txt")),
        ("petersen cone", corpus("petersen_cone.txt")),
        ("fano", corpus("fano.txt")),
        ("clebsch", corpus("clebsch.txt")),
    ]
}

#[test]
fn corpus_files_match_constructors() {
    assert_eq!(corpus("petersen.txt"), graph::build_petersen());
    assert_eq!(corpus("petersen_cone.txt"), graph::build_cone(&graph::build_petersen()));
    assert_eq!(corpus("fano.txt"), graph::build_fano());
    assert_eq!(corpus("clebsch.txt"), graph::build_clebsch());
    assert_eq!(corpus("k23.txt"), graph::build_complete_bipartite(2, 3).unwrap());
}

#[test]
fn spectral_data_of_real_graphs() {
    let got: Vec<(Int, Int, Int, Int)> = examples()
        .iter()
        .map(|(_, g)| {
            let p = params_of(g);
            (p.t, p.n, p.s, p.m)
        })
        .collect();
    assert_eq!(got, vec![(2, 10, 3, 4), (2, 11, 5, 5), (2, 14, 8, 7), (3, 16, 5, 5)]);
}

#[test]
fn counting_equations_hold() {
    for (name, g) in examples() {
        let (c, _) = candidate_of(&g);
        let eqs = check_multiplicity_equations(&c.valencies, &c.counts.counts).unwrap();
        assert!(eqs.all_hold(), "{name}: {eqs:?}");
        assert!(
            is_feasible_multiplicity(&c.valencies, &c.counts.counts, LeafRule::Full),
            "{name}"
        );
    }
}

#[test]
fn closed_walks_match_tau() {
    for (name, g) in examples() {
        let (c, part) = candidate_of(&g);
        for (i, cell) in part.iter().enumerate() {
            for &v in cell {
                assert_eq!(g.closed_walks3(v) as Int, c.valencies.tau(i), "{name} vertex {v}");
            }
        }
    }
}

#[test]
fn actual_profiles_are_admissible() {
    for (name, g) in examples() {
        let (c, part) = candidate_of(&g);
        for (i, cell) in part.iter().enumerate() {
            let profiles = enumerate_profiles(&c, i);
            for &v in cell {
                let actual: Vec<Int> = part
                    .iter()
                    .map(|other| other.iter().filter(|&&u| g.adjacent(v, u)).count() as Int)
                    .collect();
                assert!(
                    profiles.iter().any(|p| p.neighbor_counts == actual),
                    "{name} vertex {v}: {actual:?}"
                );
            }
        }
    }
}

#[test]
fn actual_quotient_matrix_is_found() {
    for (name, g) in examples() {
        let (c, part) = candidate_of(&g);
        let (equitable, q) = g.is_equitable(&part);
        assert!(equitable, "{name}");
        let QuotientOutcome::Solutions(sols) = quotient_matrix_search(&c) else {
            panic!("{name}")
        };
        assert!(sols.contains(&q.unwrap()), "{name}");
    }
}

#[test]
fn real_graphs_are_never_refuted() {
    for (name, g) in examples() {
        let (c, _) = candidate_of(&g);
        for br in [true, false] {
            let toggles = Toggles {
                apply_br_uniqueness: br,
                ..Toggles::default()
            };
            let entry = refute_one(&c, &toggles);
            assert_eq!(entry.candidate.status, Status::Open, "{name}: {:?}", entry.checks);
        }
    }
}
