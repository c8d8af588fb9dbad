//! Brute-force oracles shared by the oracle and acceptance tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use tev_core::multiplicity::{is_feasible_multiplicity, LeafRule};
use tev_core::refinement::profile_admissible;
use tev_core::spectral::enumerate_spectral;
use tev_core::valency::enumerate_valency_arrays;
use tev_core::{Candidate, Int, MultiplicityArray, Toggles, ValencyArray};

pub const SAMPLES: usize = 100;
pub const MAX_N: Int = 50;

/// Every valency array of the real search with `n <= 50` and at most five classes.
pub fn pool() -> Vec<ValencyArray> {
    let toggles = Toggles::default();
    let mut out = Vec::new();
    for t in 3..=29 {
        for p in enumerate_spectral(t, &toggles)
            .unwrap()
            .into_iter()
            .filter(|p| p.n <= MAX_N)
        {
            out.extend(
                enumerate_valency_arrays(&p, &toggles)
                    .unwrap()
                    .into_iter()
                    .filter(|v| v.r() <= 5),
            );
        }
    }
    out
}

pub fn sample(rng: &mut ChaCha8Rng) -> Vec<ValencyArray> {
    let pool = pool();
    assert!(pool.len() >= SAMPLES, "only {} arrays available", pool.len());
    pool.choose_multiple(rng, SAMPLES).cloned().collect()
}

/// All compositions of `n` into `r` positive parts.
pub fn compositions(n: Int, r: usize, emit: &mut dyn FnMut(&[Int])) {
    fn go(left: Int, slots: usize, acc: &mut Vec<Int>, emit: &mut dyn FnMut(&[Int])) {
        if slots == 1 {
            acc.push(left);
            emit(acc);
            acc.pop();
            return;
        }
        for x in 1..=left - (slots as Int - 1) {
            acc.push(x);
            go(left - x, slots - 1, acc, emit);
            acc.pop();
        }
    }
    go(n, r, &mut Vec::new(), emit);
}

pub fn brute_multiplicities(v: &ValencyArray, rule: LeafRule) -> Vec<MultiplicityArray> {
    let mut out = Vec::new();
    compositions(v.params.n, v.r(), &mut |c| {
        if is_feasible_multiplicity(v, c, rule) {
            out.push(MultiplicityArray { counts: c.to_vec() });
        }
    });
    out.sort();
    out
}

pub fn random_composition(rng: &mut ChaCha8Rng, n: Int, r: usize) -> Vec<Int> {
    let mut cuts: Vec<Int> = (1..n)
        .collect::<Vec<_>>()
        .choose_multiple(rng, r - 1)
        .copied()
        .collect();
    cuts.sort();
    cuts.insert(0, 0);
    cuts.push(n);
    cuts.windows(2).map(|w| w[1] - w[0]).collect()
}

pub fn brute_profiles(c: &Candidate, i: usize) -> Vec<Vec<Int>> {
    let r = c.valencies.r();
    let mut out = Vec::new();
    let mut m = vec![0; r];
    loop {
        if profile_admissible(c, i, &m) {
            out.push(m.clone());
        }
        // odometer over 0..=n_j
        let mut j = 0;
        while j < r && m[j] == c.n(j) {
            m[j] = 0;
            j += 1;
        }
        if j == r {
            break;
        }
        m[j] += 1;
    }
    out.sort();
    out
}
