#![allow(dead_code)]

use kpsi_core::{Composition, LabeledPoset, Rational};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random labeled poset: a random DAG compatible with a shuffled order,
/// each forward pair kept with probability `density`.
pub fn random_poset(n: usize, density: f64, rng: &mut StdRng) -> LabeledPoset {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut relations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                relations.push((order[i], order[j]));
            }
        }
    }
    LabeledPoset::new(n, &relations).unwrap()
}

pub fn c(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
