use std::collections::BTreeMap;

use isoext::comodule::{
    composition_series, count_morphisms, find_isomorphism, reassemble, Comodule, Window,
};
use isoext::extengine::ChartBounds;
use isoext::sampling::{random_comodule, SampleConfig};
use isoext::specseq::{heart_hom, ift_check, iso_anss, CofreeFamily, GeneratorSet};
use isoext::tate::{h_iso_dims, tate_hom_dims};
use isoext::Bidegree;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Bidegrees of all subsets of `{ρ_0, …, ρ_k}` with `p <= max_p`, counted.
fn rho_subsets(max_p: i32) -> BTreeMap<Bidegree, usize> {
    let gens: Vec<Bidegree> =
        (0..).map(|i| Bidegree::new((1 << (i + 1)) - 1, (1 << i) - 1)).take_while(|d| d.p <= max_p).collect();
    let mut out = BTreeMap::new();
    for mask in 0u32..1 << gens.len() {
        let d = (0..gens.len()).filter(|i| mask >> i & 1 == 1).fold(Bidegree::ZERO, |acc, i| acc + gens[i]);
        if d.p <= max_p {
            *out.entry(d).or_insert(0) += 1;
        }
    }
    out
}

/// Counts pairs `(x, h ⊗ y)` with the given shift, element by element.
fn brute_tate(mx: &Comodule, my: &Comodule, shifts: Window) -> BTreeMap<Bidegree, usize> {
    let rho = rho_subsets(64);
    let mut out = BTreeMap::new();
    for p in shifts.p_min..=shifts.p_max {
        for q in shifts.q_min..=shifts.q_max {
            let shift = Bidegree::new(p, q);
            let mut n = 0;
            for x in mx.basis() {
                for y in my.basis() {
                    n += rho.get(&(shift + x.degree - y.degree)).copied().unwrap_or(0);
                }
            }
            out.insert(shift, n);
        }
    }
    out
}

fn shift_window() -> Window {
    Window { p_min: -8, p_max: 8, q_min: -4, q_max: 4 }
}

#[test]
fn g_monomial_bidegrees_have_finite_type() {
    let set = GeneratorSet::Family(std::sync::Arc::new(CofreeFamily::g_monomials()));
    assert!(ift_check(&set, Window { p_min: -10, p_max: 30, q_min: -5, q_max: 15 }).finite);
}

#[test]
fn h_iso_generators_forget_the_coaction() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let c = random_comodule(&mut rng, &SampleConfig::mixed(8, vec![-1, 0, 3]));
        let w = Window { p_min: -4, p_max: 20, q_min: -2, q_max: 8 };
        let h = h_iso_dims(&c, w).unwrap();
        assert_eq!(h.generators, c.dims());
        let rho = rho_subsets(64);
        for (d, n) in h.expanded.iter() {
            let direct: usize = c.basis().iter().map(|b| rho.get(&(d - b.degree)).copied().unwrap_or(0)).sum();
            assert_eq!(n, direct);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tate_matches_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = SampleConfig::mixed(6, vec![-1, 0, 1, 2]);
        let (mx, my) = (random_comodule(&mut rng, &cfg), random_comodule(&mut rng, &cfg));
        prop_assert_eq!(tate_hom_dims(&mx, &my, shift_window()).unwrap(), brute_tate(&mx, &my, shift_window()));
    }

    #[test]
    fn tate_is_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = SampleConfig::mixed(4, vec![0, 1]);
        let (a, b, y) = (random_comodule(&mut rng, &cfg), random_comodule(&mut rng, &cfg), random_comodule(&mut rng, &cfg));
        let b = b.relabeled(|l| format!("{l}'")).unwrap();
        let sum = Comodule::direct_sum(&[a.clone(), b.clone()]).unwrap();
        let (ta, tb) = (tate_hom_dims(&a, &y, shift_window()).unwrap(), tate_hom_dims(&b, &y, shift_window()).unwrap());
        let ts = tate_hom_dims(&sum, &y, shift_window()).unwrap();
        let tr = tate_hom_dims(&y, &sum, shift_window()).unwrap();
        let (ra, rb) = (tate_hom_dims(&y, &a, shift_window()).unwrap(), tate_hom_dims(&y, &b, shift_window()).unwrap());
        for k in ts.keys() {
            prop_assert_eq!(ts[k], ta[k] + tb[k]);
            prop_assert_eq!(tr[k], ra[k] + rb[k]);
        }
    }

    #[test]
    fn heart_hom_counts_morphisms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = random_comodule(&mut rng, &SampleConfig::mixed(8, vec![0, 1]));
        let m = random_comodule(&mut rng, &SampleConfig::mixed(8, vec![-1, 0]));
        let hom = heart_hom(&n, &m).unwrap();
        prop_assert_eq!(1u64 << hom, count_morphisms(&n, &m).unwrap());
        prop_assert!(tate_hom_dims(&n, &m, shift_window()).unwrap()[&Bidegree::ZERO] >= hom);
    }

    #[test]
    fn anss_respects_vanishing_range(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = random_comodule(&mut rng, &SampleConfig::mixed(5, vec![0, 1, 2]));
        let m = random_comodule(&mut rng, &SampleConfig::mixed(5, vec![-1, 0, 2]));
        let (chart, report) = iso_anss(&n, &m, ChartBounds::new(3, 8)).unwrap();
        let ((a, b), (c, d)) = (n.cn_support().unwrap(), m.cn_support().unwrap());
        prop_assert_eq!(report.page, d - a - c + b + 2);
        for (x, _) in chart.iter() {
            prop_assert!(c - b + 2 * x.u <= x.t && x.t <= d - a + 2 * x.u);
        }
    }

    #[test]
    fn series_reassembles(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_comodule(&mut rng, &SampleConfig::mixed(8, vec![0, 1]));
        let series = composition_series(&c).unwrap();
        prop_assert_eq!(series.layers.len(), c.dim());
        let back = reassemble(&series).unwrap();
        prop_assert!(find_isomorphism(&back, &c).unwrap().is_some());
    }
}
