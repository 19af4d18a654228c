//! Random valid comodules for property tests and acceptance runs.
//!
//! A sample is grown by successive extensions: basis elements are placed in
//! weight order, and each new element gets a random cocycle as its reduced
//! coaction, so every result is a genuine comodule.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::comodule::{extension_cocycles, extension_from_cocycle, Comodule};
use crate::grading::Bidegree;
use crate::hopf::MonomialKey;

#[derive(Clone, Debug)]
pub struct SampleConfig {
    pub max_dim: usize,
    /// Cap on the dimension of any single bidegree; keeps brute-force
    /// isomorphism searches small.
    pub max_per_degree: usize,
    /// Chow-Novikov degrees to draw from.
    pub cn_values: Vec<i32>,
    pub max_weight: i32,
}

impl SampleConfig {
    /// Concentrated in Chow-Novikov degree 0.
    pub fn cn0(max_dim: usize) -> Self {
        Self { max_dim, max_per_degree: 3, cn_values: vec![0], max_weight: 6 }
    }

    pub fn mixed(max_dim: usize, cn_values: Vec<i32>) -> Self {
        Self { max_dim, max_per_degree: 3, cn_values, max_weight: 6 }
    }
}

/// A random valid comodule of dimension between 1 and `cfg.max_dim`.
///
/// # Panics
///
/// If `cfg.cn_values` is empty.
pub fn random_comodule<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig) -> Comodule {
    let dim = rng.gen_range(1..=cfg.max_dim);
    random_comodule_of_dim(rng, cfg, dim)
}

pub fn random_comodule_of_dim<R: Rng + ?Sized>(rng: &mut R, cfg: &SampleConfig, dim: usize) -> Comodule {
    let mut degrees = Vec::with_capacity(dim);
    while degrees.len() < dim {
        let q = rng.gen_range(0..=cfg.max_weight);
        let cn = *cfg.cn_values.choose(rng).expect("at least one Chow-Novikov degree");
        let d = Bidegree::new(2 * q + cn, q);
        if degrees.iter().filter(|&&e| e == d).count() < cfg.max_per_degree {
            degrees.push(d);
        }
    }
    degrees.sort_by_key(|d| (d.q, d.p));

    let mut c = Comodule::zero();
    for (k, d) in degrees.into_iter().enumerate() {
        let basis = extension_cocycles(&c, d).expect("sample stays valid");
        let mut z: BTreeSet<(MonomialKey, usize)> = BTreeSet::new();
        for cocycle in basis {
            if rng.gen_bool(0.5) {
                for term in cocycle {
                    if !z.remove(&term) {
                        z.insert(term);
                    }
                }
            }
        }
        let z: Vec<_> = z.into_iter().collect();
        c = extension_from_cocycle(&c, d, &z, &format!("x{k}")).expect("random cocycle is a cocycle");
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_valid_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = SampleConfig::mixed(8, vec![-2, 0, 1]);
        let mut nontrivial = 0;
        for _ in 0..50 {
            let c = random_comodule(&mut rng, &cfg);
            assert!(c.is_valid());
            assert!((1..=8).contains(&c.dim()));
            assert!(c.dims().iter().all(|(_, n)| n <= 3));
            nontrivial += (0..c.dim()).filter(|&i| c.reduced_coaction(i).next().is_some()).count();
        }
        assert!(nontrivial > 0);
    }

    #[test]
    fn cn0_samples_live_on_the_line() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let c = random_comodule(&mut rng, &SampleConfig::cn0(8));
            assert_eq!(c.cn_support().unwrap(), (0, 0));
        }
    }
}
