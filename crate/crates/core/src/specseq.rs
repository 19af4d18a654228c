//! Spectral-sequence E2 pages and hom-set formulas assembled from the Ext
//! engines.
//!
//! Everything is computed on the G side: the isotropic Adams E2 page of
//! `H ⊗ L` is `Ext_G(F₂, L)`, and the Adams-Novikov E2 page of a pair is
//! `Ext_G(N, M)`. The exterior factor only enters through the finiteness
//! gate and the reindexing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::comodule::{Comodule, GradedDims, Window};
use crate::error::{Error, Result};
use crate::extengine::{chart_from_resolution, cobar_ext, minimal_resolution, ChartBounds, DualComodule, ExtChart};
use crate::grading::{Bidegree, Tridegree};
use crate::hopf::g_table;

/// How many generators share one bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(u64),
    Infinite,
}

/// A rule-described set of generator bidegrees.
pub trait GeneratorFamily: Send + Sync + fmt::Debug {
    /// The number of members `α` in the cone of `probe`, i.e. with
    /// `p - p_α >= 2(q - q_α) >= 0`; `None` if there are infinitely many.
    fn cone_count(&self, probe: Bidegree) -> Option<u64>;
}

/// `{ base + n·step : n >= 0 }`, each with the same multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearFamily {
    pub base: Bidegree,
    pub step: Bidegree,
    pub multiplicity: Multiplicity,
}

impl GeneratorFamily for LinearFamily {
    fn cone_count(&self, probe: Bidegree) -> Option<u64> {
        // members qualify for n in [lo, hi]
        let (mut lo, mut hi) = (0i64, None::<i64>);
        // the cone of `probe`: q_α <= q and p_α - 2q_α <= p - 2q
        let constraints = [
            (self.base.q, self.step.q, probe.q),
            (self.base.chow_novikov(), self.step.chow_novikov(), probe.chow_novikov()),
        ];
        for (a, k, bound) in constraints {
            let (a, k, bound) = (a as i64, k as i64, bound as i64);
            match k.signum() {
                1 => hi = Some(hi.map_or(i64::MAX, |h| h).min((bound - a).div_euclid(k))),
                -1 => lo = lo.max((a - bound + (-k) - 1).div_euclid(-k)),
                _ if a > bound => return Some(0),
                _ => {}
            }
        }
        let count = match hi {
            None => return if self.multiplicity == Multiplicity::Finite(0) { Some(0) } else { None },
            Some(hi) if hi < lo => 0,
            Some(hi) => (hi - lo + 1) as u64,
        };
        match self.multiplicity {
            Multiplicity::Finite(m) => Some(count * m),
            Multiplicity::Infinite if count == 0 => Some(0),
            Multiplicity::Infinite => None,
        }
    }
}

/// Generators of `G ⊗ V`: for each cogenerator of `V` in degree `d`, one
/// generator per G monomial, at `d + (2w, w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofreeFamily {
    pub cogenerators: GradedDims,
}

impl CofreeFamily {
    /// All G-monomial bidegrees, with multiplicity.
    pub fn g_monomials() -> Self {
        Self { cogenerators: [(Bidegree::ZERO, 1)].into_iter().collect() }
    }
}

impl GeneratorFamily for CofreeFamily {
    fn cone_count(&self, probe: Bidegree) -> Option<u64> {
        let table = g_table();
        let mut total = 0u64;
        for (d, n) in self.cogenerators.iter() {
            if d.chow_novikov() > probe.chow_novikov() || d.q > probe.q {
                continue;
            }
            let monomials: usize = (0..=(probe.q - d.q) as u32).map(|w| table.dim(w)).sum();
            total += (n * monomials) as u64;
        }
        Some(total)
    }
}

#[derive(Clone, Debug)]
pub enum GeneratorSet {
    Explicit(BTreeMap<Bidegree, Multiplicity>),
    Family(Arc<dyn GeneratorFamily>),
}

impl GeneratorSet {
    /// The generator bidegrees of a finite comodule.
    pub fn of_comodule(c: &Comodule) -> Self {
        GeneratorSet::Explicit(c.dims().iter().map(|(d, n)| (d, Multiplicity::Finite(n as u64))).collect())
    }

    pub fn cone_count(&self, probe: Bidegree) -> Option<u64> {
        match self {
            GeneratorSet::Explicit(members) => {
                let mut total = 0;
                for (&d, &m) in members {
                    if d.q <= probe.q && d.chow_novikov() <= probe.chow_novikov() {
                        match m {
                            Multiplicity::Finite(n) => total += n,
                            Multiplicity::Infinite => return None,
                        }
                    }
                }
                Some(total)
            }
            GeneratorSet::Family(f) => f.cone_count(probe),
        }
    }
}

/// Parses `explicit:p,q,n;p,q,inf;…`, `linear:p0,q0,dp,dq[,n|inf]` and
/// `gmonomials`.
impl FromStr for GeneratorSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        fn int(x: &str) -> Result<i32, String> {
            x.trim().parse().map_err(|_| format!("bad integer {x:?}"))
        }
        fn mult(x: &str) -> Result<Multiplicity, String> {
            match x.trim() {
                "inf" => Ok(Multiplicity::Infinite),
                n => n.parse().map(Multiplicity::Finite).map_err(|_| format!("bad multiplicity {x:?}")),
            }
        }
        if s == "gmonomials" {
            return Ok(GeneratorSet::Family(Arc::new(CofreeFamily::g_monomials())));
        }
        if let Some(rest) = s.strip_prefix("explicit:") {
            let mut members = BTreeMap::new();
            for item in rest.split(';').filter(|x| !x.trim().is_empty()) {
                let f: Vec<&str> = item.split(',').collect();
                let [p, q, n] = f.as_slice() else { return Err(format!("expected p,q,n in {item:?}")) };
                members.insert(Bidegree::new(int(p)?, int(q)?), mult(n)?);
            }
            return Ok(GeneratorSet::Explicit(members));
        }
        if let Some(rest) = s.strip_prefix("linear:") {
            let f: Vec<&str> = rest.split(',').collect();
            let (nums, multiplicity) = match f.len() {
                4 => (&f[..], Multiplicity::Finite(1)),
                5 => (&f[..4], mult(f[4])?),
                _ => return Err("expected linear:p0,q0,dp,dq[,n]".into()),
            };
            return Ok(GeneratorSet::Family(Arc::new(LinearFamily {
                base: Bidegree::new(int(nums[0])?, int(nums[1])?),
                step: Bidegree::new(int(nums[2])?, int(nums[3])?),
                multiplicity,
            })));
        }
        Err(format!("unknown generator set {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IftReport {
    pub finite: bool,
    /// The first probe (in `(p, q)` order) whose cone is infinite.
    pub witness: Option<Bidegree>,
}

/// Checks isotropic finite type on every probe bidegree of a finite window.
pub fn ift_check(g: &GeneratorSet, probes: Window) -> IftReport {
    for p in probes.p_min..=probes.p_max {
        for q in probes.q_min..=probes.q_max {
            let probe = Bidegree::new(p, q);
            if g.cone_count(probe).is_none() {
                return IftReport { finite: false, witness: Some(probe) };
            }
        }
    }
    IftReport { finite: true, witness: None }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Engine {
    #[default]
    Resolution,
    Cobar,
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "resolution" => Ok(Engine::Resolution),
            "cobar" => Ok(Engine::Cobar),
            _ => Err(format!("unknown engine {s:?}")),
        }
    }
}

/// The probe window used by the gate for a computation within `bounds`.
pub fn gate_window(l: &Comodule, bounds: ChartBounds) -> Window {
    let reach = bounds.max_t().max(0) + l.max_p().unwrap_or(0).abs() + l.min_p().unwrap_or(0).abs();
    Window { p_min: -reach, p_max: reach, q_min: -reach, q_max: reach }
}

/// The finiteness gate of [`iso_ass_e2`].
pub fn check_gate(l: &Comodule, bounds: ChartBounds, generators: Option<&GeneratorSet>) -> Result<()> {
    let own = GeneratorSet::of_comodule(l);
    match ift_check(generators.unwrap_or(&own), gate_window(l, bounds)).witness {
        Some(witness) => Err(Error::NotIsotropicallyFiniteType { witness }),
        None => Ok(()),
    }
}

/// `Ext_G(F₂, l)` within `bounds`: the isotropic Adams E2 page of `H ⊗ l`.
///
/// When `generators` is given it describes the full generator set of the
/// input and must pass [`ift_check`] on the [`gate_window`].
///
/// # Errors
///
/// `NotIsotropicallyFiniteType` from the gate, `InvalidComodule`, and
/// `WindowTooSmall` for windowed inputs.
pub fn iso_ass_e2(l: &Comodule, bounds: ChartBounds, generators: Option<&GeneratorSet>, engine: Engine) -> Result<ExtChart> {
    check_gate(l, bounds, generators)?;
    match engine {
        Engine::Cobar => cobar_ext(&Comodule::trivial("1", Bidegree::ZERO), l, bounds),
        Engine::Resolution => {
            let r = minimal_resolution(Arc::new(DualComodule::new(l.clone())?), bounds)?;
            Ok(chart_from_resolution(&r).restrict(bounds))
        }
    }
}

/// `π_{p,q}` of the completed sphere as `Ext^{2q-p, 2q, q}_G(F₂, F₂)`,
/// keyed by `(p, q)`.
pub fn sphere_homotopy(bounds: ChartBounds) -> Result<BTreeMap<Bidegree, usize>> {
    let chart = iso_ass_e2(&Comodule::trivial("1", Bidegree::ZERO), bounds, None, Engine::Resolution)?;
    Ok(reindex_sphere(&chart))
}

/// `(s, t, u) ↦ (t - s, u)` on entries with `t = 2u`.
pub fn reindex_sphere(chart: &ExtChart) -> BTreeMap<Bidegree, usize> {
    chart.iter().filter(|(d, _)| d.t == 2 * d.u).map(|(d, n)| (Bidegree::new(d.t - d.s as i32, d.u), n)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CollapseReport {
    /// Chow-Novikov support `[a, b]` of the source.
    pub source: (i32, i32),
    /// Chow-Novikov support `[c, d]` of the target.
    pub target: (i32, i32),
    /// `d - a - c + b + 2`.
    pub page: i32,
}

impl CollapseReport {
    pub fn new(source: (i32, i32), target: (i32, i32)) -> Self {
        let ((a, b), (c, d)) = (source, target);
        Self { source, target, page: d - a - c + b + 2 }
    }

    /// Whether `(t, u)` lies in `c - b + 2u <= t <= d - a + 2u`.
    pub fn in_range(&self, d: Tridegree) -> bool {
        let ((a, b), (c, dd)) = (self.source, self.target);
        c - b + 2 * d.u <= d.t && d.t <= dd - a + 2 * d.u
    }
}

/// The isotropic Adams-Novikov E2 page `Ext_G(n, m)` with its collapse page.
///
/// An empty input gives an empty chart and collapse page 2.
///
/// # Errors
///
/// `InvalidComodule`, `WindowTooSmall`, and `VanishingRangeViolated` if an
/// entry falls outside the range forced by the Chow-Novikov supports.
pub fn iso_anss(n: &Comodule, m: &Comodule, bounds: ChartBounds) -> Result<(ExtChart, CollapseReport)> {
    let chart = cobar_ext(n, m, bounds)?;
    let (Some(src), Some(tgt)) = (n.cn_support(), m.cn_support()) else {
        return Ok((chart, CollapseReport::new((0, 0), (0, 0))));
    };
    let report = CollapseReport::new(src, tgt);
    if let Some((d, _)) = chart.iter().find(|(d, _)| !report.in_range(*d)) {
        return Err(Error::VanishingRangeViolated(d));
    }
    Ok((chart, report))
}

fn require_cn0(c: &Comodule) -> Result<()> {
    match c.basis().iter().find(|b| b.degree.chow_novikov() != 0) {
        Some(b) => Err(Error::NonZeroChowNovikov(b.degree)),
        None => Ok(()),
    }
}

/// `[Σ^{t,u} X, Y]` for CN-0 inputs as `Ext^{2u-t, 2u, u}_G(n, m)`, over a
/// finite window of `(t, u)` (`p` bounds `t`, `q` bounds `u`).
///
/// # Errors
///
/// `NonZeroChowNovikov` if an input leaves CN degree 0, and
/// `VanishingRangeViolated` if the chart has an entry off `t = 2u`.
pub fn heart_homotopy(n: &Comodule, m: &Comodule, window: Window) -> Result<BTreeMap<Bidegree, usize>> {
    require_cn0(n)?;
    require_cn0(m)?;
    let mut out = BTreeMap::new();
    if window.is_empty() {
        return Ok(out);
    }
    let max_s = (window.q_min..=window.q_max).map(|u| 2 * u - window.p_min).max().unwrap_or(0).max(0) as u32;
    let bounds = ChartBounds::new(max_s, window.p_max);
    let chart = cobar_ext(n, m, bounds)?;
    if let Some((d, _)) = chart.iter().find(|(d, _)| d.t != 2 * d.u) {
        return Err(Error::VanishingRangeViolated(d));
    }
    for t in window.p_min..=window.p_max {
        for u in window.q_min..=window.q_max {
            let s = 2 * u - t;
            let dim = if s < 0 { 0 } else { chart.get(Tridegree::new(s as u32, 2 * u, u)) };
            out.insert(Bidegree::new(t, u), dim);
        }
    }
    Ok(out)
}

/// Bidegree-preserving comodule maps `n -> m`, for `n` in CN `>= 0` and `m`
/// in CN `<= 0`.
///
/// # Errors
///
/// `ChowNovikovHypothesisViolated` if either support condition fails.
pub fn heart_hom(n: &Comodule, m: &Comodule) -> Result<usize> {
    if let Some(b) = n.basis().iter().find(|b| b.degree.chow_novikov() < 0) {
        return Err(Error::ChowNovikovHypothesisViolated(format!("source element {} has negative CN degree", b.label)));
    }
    if let Some(b) = m.basis().iter().find(|b| b.degree.chow_novikov() > 0) {
        return Err(Error::ChowNovikovHypothesisViolated(format!("target element {} has positive CN degree", b.label)));
    }
    let chart = cobar_ext(n, m, ChartBounds::new(0, 0).with_weight(0, 0))?;
    Ok(chart.get(Tridegree::new(0, 0, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::tests::vw;

    fn f2() -> Comodule {
        Comodule::trivial("1", Bidegree::ZERO)
    }

    fn probes() -> Window {
        Window { p_min: -4, p_max: 12, q_min: -2, q_max: 6 }
    }

    #[test]
    fn ift_examples() {
        let infinite: GeneratorSet = "explicit:0,0,inf".parse().unwrap();
        assert_eq!(ift_check(&infinite, probes()), IftReport { finite: false, witness: Some(Bidegree::ZERO) });
        let line: GeneratorSet = "linear:0,0,2,1".parse().unwrap();
        assert!(ift_check(&line, probes()).finite);
        assert!(ift_check(&"gmonomials".parse().unwrap(), probes()).finite);
        // (-2n, 0): the CN degree falls without bound, so every cone is infinite
        let down: GeneratorSet = "linear:0,0,-2,0".parse().unwrap();
        assert_eq!(ift_check(&down, probes()).witness, Some(Bidegree::new(-4, 0)));
    }

    #[test]
    fn linear_family_counts() {
        let line = LinearFamily { base: Bidegree::ZERO, step: Bidegree::new(2, 1), multiplicity: Multiplicity::Finite(1) };
        // members (2n, n) with n <= 3, all of CN 0
        assert_eq!(line.cone_count(Bidegree::new(6, 3)), Some(4));
        assert_eq!(line.cone_count(Bidegree::new(5, 3)), Some(0));
        let cn_up = LinearFamily { base: Bidegree::ZERO, step: Bidegree::new(1, 0), multiplicity: Multiplicity::Finite(2) };
        assert_eq!(cn_up.cone_count(Bidegree::new(3, 0)), Some(8));
    }

    #[test]
    fn sphere_spot_values() {
        let table = sphere_homotopy(ChartBounds::new(8, 8)).unwrap();
        assert_eq!(table.get(&Bidegree::new(0, 0)), Some(&1));
        for s in 1..=8 {
            assert_eq!(table.get(&Bidegree::new(s, s)), Some(&1));
        }
        assert_eq!(table.get(&Bidegree::new(3, 2)), Some(&1));
    }

    #[test]
    fn collapse_pages() {
        let (chart, report) = iso_anss(&f2(), &f2(), ChartBounds::new(3, 6)).unwrap();
        assert_eq!(report.page, 2);
        let ass = iso_ass_e2(&f2(), ChartBounds::new(3, 6), None, Engine::Resolution).unwrap();
        assert!(chart.same_dims(&ass));
        assert_eq!(CollapseReport::new((0, 1), (0, 0)).page, 3);
        let (_, empty) = iso_anss(&Comodule::zero(), &f2(), ChartBounds::new(2, 2)).unwrap();
        assert_eq!(empty.page, 2);
    }

    #[test]
    fn heart_examples() {
        let w = Window { p_min: -1, p_max: 0, q_min: 0, q_max: 0 };
        let h = heart_homotopy(&f2(), &f2(), w).unwrap();
        assert_eq!(h[&Bidegree::ZERO], 1);
        assert_eq!(h[&Bidegree::new(-1, 0)], 0);
        assert_eq!(heart_homotopy(&f2(), &vw(), w).unwrap()[&Bidegree::ZERO], 1);
        let off = Comodule::trivial("x", Bidegree::new(1, 0));
        assert!(matches!(heart_homotopy(&off, &f2(), w), Err(Error::NonZeroChowNovikov(_))));
    }

    #[test]
    fn heart_hom_examples() {
        assert_eq!(heart_hom(&f2(), &f2()).unwrap(), 1);
        let n = Comodule::trivial("x", Bidegree::new(1, 0));
        let m = Comodule::trivial("y", Bidegree::new(-1, 0));
        assert_eq!(heart_hom(&n, &m).unwrap(), 0);
        assert_eq!(heart_hom(&vw(), &f2()).unwrap(), 0);
        assert!(matches!(heart_hom(&m, &n), Err(Error::ChowNovikovHypothesisViolated(_))));
    }

    #[test]
    fn gate_rejects_infinite_sets() {
        let bad: GeneratorSet = "linear:0,0,0,0,inf".parse().unwrap();
        let err = iso_ass_e2(&f2(), ChartBounds::new(2, 4), Some(&bad), Engine::Cobar).unwrap_err();
        assert!(matches!(err, Error::NotIsotropicallyFiniteType { witness } if witness == Bidegree::ZERO));
    }
}
