use std::sync::Arc;

use isoext::comodule::{cofree, Comodule, GradedDims, Window};
use isoext::extengine::{
    chart_from_resolution, cobar_complex, cobar_ext, minimal_resolution, ChartBounds, DualComodule, ModuleSource,
};
use isoext::sampling::{random_comodule, SampleConfig};
use isoext::{Bidegree, Tridegree};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f2() -> Comodule {
    Comodule::trivial("1", Bidegree::ZERO)
}

fn resolve(c: &Comodule, bounds: ChartBounds) -> isoext::extengine::ExtChart {
    let m: Arc<dyn ModuleSource> = Arc::new(DualComodule::new(c.clone()).unwrap());
    chart_from_resolution(&minimal_resolution(m, bounds).unwrap()).restrict(bounds)
}

#[test]
fn sphere_engines_agree() {
    let bounds = ChartBounds::new(6, 10);
    let cobar = cobar_ext(&f2(), &f2(), bounds).unwrap();
    let res = resolve(&f2(), bounds);
    assert!(res.same_dims(&cobar), "{:?}", res.diff(&cobar));
    // h0, h1, h2 and nothing else in filtration 1
    let s1: Vec<Tridegree> = cobar.iter().filter(|(d, _)| d.s == 1).map(|(d, _)| d).collect();
    assert_eq!(s1, vec![Tridegree::new(1, 2, 1), Tridegree::new(1, 4, 2), Tridegree::new(1, 8, 4)]);
}

#[test]
fn random_duals_agree_with_cobar() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    // s <= 6, t <= 16
    let bounds = ChartBounds::new(6, 10);
    for _ in 0..24 {
        let c = random_comodule(&mut rng, &SampleConfig::mixed(8, vec![-1, 0, 2]));
        let cobar = cobar_ext(&f2(), &c, bounds).unwrap();
        let res = resolve(&c, bounds);
        assert!(res.same_dims(&cobar), "{c:?}\n{:?}", res.diff(&cobar));
    }
}

#[test]
fn cofree_acyclicity_in_both_engines() {
    let dims: GradedDims = [(Bidegree::ZERO, 1), (Bidegree::new(3, 1), 1)].into_iter().collect();
    let m = cofree(&dims, Window::below(18)).unwrap();
    let bounds = ChartBounds::new(4, 12);
    let expected = vec![(Tridegree::new(0, 0, 0), 1), (Tridegree::new(0, 3, 1), 1)];
    assert_eq!(cobar_ext(&f2(), &m, bounds).unwrap().iter().collect::<Vec<_>>(), expected);
    assert_eq!(resolve(&m, bounds).iter().collect::<Vec<_>>(), expected);
}

#[test]
fn thread_count_does_not_change_charts() {
    let bounds = ChartBounds::new(5, 9);
    let charts: Vec<_> = [1, 3, 8]
        .iter()
        .map(|&n| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
            pool.install(|| (cobar_ext(&f2(), &f2(), bounds).unwrap(), resolve(&f2(), bounds)))
        })
        .collect();
    assert!(charts.windows(2).all(|w| w[0] == w[1]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cobar_d_squared_vanishes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = SampleConfig::mixed(5, vec![-1, 0, 1]);
        let n = random_comodule(&mut rng, &cfg);
        let m = random_comodule(&mut rng, &cfg);
        prop_assert!(cobar_complex(&n, &m, ChartBounds::new(3, 6)).unwrap().is_complex());
    }

    #[test]
    fn cn0_charts_live_on_the_line(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = random_comodule(&mut rng, &SampleConfig::cn0(4));
        let m = random_comodule(&mut rng, &SampleConfig::cn0(4));
        let chart = cobar_ext(&n, &m, ChartBounds::new(3, 6)).unwrap();
        for (d, _) in chart.iter() {
            prop_assert_eq!(d.t, 2 * d.u);
        }
    }

    #[test]
    fn cn_is_preserved_by_cobar(seed in any::<u64>()) {
        // Ext(n, m) lives in t - 2u = (CN of m) - (CN of n) for pure inputs
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = random_comodule(&mut rng, &SampleConfig::mixed(3, vec![1]));
        let m = random_comodule(&mut rng, &SampleConfig::mixed(3, vec![-2]));
        let chart = cobar_ext(&n, &m, ChartBounds::new(3, 6)).unwrap();
        for (d, _) in chart.iter() {
            prop_assert_eq!(d.t - 2 * d.u, -3);
        }
    }

    #[test]
    fn resolutions_are_minimal_complexes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_comodule(&mut rng, &SampleConfig::mixed(6, vec![0, 1]));
        let m: Arc<dyn ModuleSource> = Arc::new(DualComodule::new(c).unwrap());
        let r = minimal_resolution(m, ChartBounds::new(4, 8)).unwrap();
        prop_assert!(r.verify().is_empty());
    }
}
