//! Ext over G: the cobar complex (reference engine) and minimal resolutions
//! (the fast engine), with resumable checkpoints.
//!
//! Both engines compute `Ext^{s,t,u}_G(N, M)`. A cobar cochain
//! `x ↦ [g_1|…|g_s] y` has internal degree `(t, u) = Σ deg g_i + deg y - deg x`.
//!
//! # Window padding
//!
//! A windowed cofree comodule `M` truncated to `p <= P` differs from the
//! untruncated one only in topological degrees above `P`. A cobar cochain
//! into that difference has `t >= P + 1 - max_p(N)`, so charts are exact for
//! `t <= P - max_p(N)`, i.e. for stems `t - s <= P - max_p(N) - s`. Requesting
//! `max_stem + max_s > P - max_p(N)` fails with
//! [`Error::WindowTooSmall`](crate::Error::WindowTooSmall). The same rule
//! applies to weights when the window bounds `q`. Windows with a lower edge
//! that dropped coaction terms are never certified.

mod checkpoint;
mod cobar;
mod module;
mod resolution;

use std::collections::BTreeMap;

pub use checkpoint::{parse_checkpoint, resume, write_checkpoint, CHECKPOINT_MAGIC, CHECKPOINT_VERSION};
pub use cobar::{cobar_complex, cobar_ext, CobarCell, CobarChain, CobarComplex};
pub use module::{DualComodule, FinitePresentation, FreeModule, ModuleSource};
pub use resolution::{chart_from_resolution, minimal_resolution, ResGenerator, Resolution, ResolutionViolation};

use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::grading::Tridegree;

/// The region of a chart: `s <= max_s`, `t - s <= max_stem`, and optionally
/// `u` within an inclusive weight range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChartBounds {
    pub max_s: u32,
    pub max_stem: i32,
    pub weight: Option<(i32, i32)>,
}

impl ChartBounds {
    pub fn new(max_s: u32, max_stem: i32) -> Self {
        Self { max_s, max_stem, weight: None }
    }

    pub fn with_weight(self, min: i32, max: i32) -> Self {
        Self { weight: Some((min, max)), ..self }
    }

    /// Largest internal degree `t` inside the region.
    pub fn max_t(&self) -> i32 {
        self.max_stem + self.max_s as i32
    }

    pub fn contains(&self, d: Tridegree) -> bool {
        d.s <= self.max_s
            && d.stem() <= self.max_stem
            && self.weight.is_none_or(|(lo, hi)| (lo..=hi).contains(&d.u))
    }
}

/// A table `(s, t, u) -> dim` of non-zero Ext dimensions inside `bounds`,
/// optionally with generator labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtChart {
    pub bounds: ChartBounds,
    entries: BTreeMap<Tridegree, usize>,
    labels: BTreeMap<Tridegree, Vec<String>>,
}

impl ExtChart {
    pub fn new(bounds: ChartBounds) -> Self {
        Self { bounds, entries: BTreeMap::new(), labels: BTreeMap::new() }
    }

    /// Records a dimension; zero dimensions are not stored.
    ///
    /// # Panics
    ///
    /// If `d` lies outside the chart bounds.
    pub fn set(&mut self, d: Tridegree, dim: usize) {
        assert!(self.bounds.contains(d), "{d} outside chart bounds");
        if dim == 0 {
            self.entries.remove(&d);
        } else {
            self.entries.insert(d, dim);
        }
    }

    pub fn set_labels(&mut self, d: Tridegree, labels: Vec<String>) {
        self.labels.insert(d, labels);
    }

    pub fn get(&self, d: Tridegree) -> usize {
        self.entries.get(&d).copied().unwrap_or(0)
    }

    pub fn labels(&self, d: Tridegree) -> &[String] {
        self.labels.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Tridegree, usize)> + '_ {
        self.entries.iter().map(|(&d, &n)| (d, n))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// The same chart cut down to smaller bounds.
    pub fn restrict(&self, bounds: ChartBounds) -> ExtChart {
        let mut out = ExtChart::new(bounds);
        for (d, n) in self.iter().filter(|(d, _)| bounds.contains(*d)) {
            out.entries.insert(d, n);
            if let Some(l) = self.labels.get(&d) {
                out.labels.insert(d, l.clone());
            }
        }
        out
    }

    /// Dimension-for-dimension comparison, ignoring labels.
    pub fn same_dims(&self, other: &ExtChart) -> bool {
        self.entries == other.entries
    }

    /// Entries where the two charts differ, as `(degree, self, other)`.
    pub fn diff(&self, other: &ExtChart) -> Vec<(Tridegree, usize, usize)> {
        let keys: std::collections::BTreeSet<Tridegree> =
            self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.into_iter().map(|d| (d, self.get(d), other.get(d))).filter(|(_, a, b)| a != b).collect()
    }
}

/// Checks the window padding rule for `Ext(n, m)` at internal degrees up to
/// `max_t` and weights up to `max_u`.
pub(crate) fn check_padding(n: &Comodule, m: &Comodule, max_t: i32, max_u: Option<i32>) -> Result<()> {
    if n.truncation().is_some() {
        return Err(Error::WindowTooSmall("truncated comodules are only certified as the second argument".into()));
    }
    let Some(tr) = m.truncation() else { return Ok(()) };
    if tr.dropped > 0 {
        return Err(Error::WindowTooSmall(format!("{} coaction terms were dropped at the lower window edge", tr.dropped)));
    }
    let reach_p = max_t + n.max_p().unwrap_or(0);
    if reach_p > tr.window.p_max {
        return Err(Error::WindowTooSmall(format!(
            "internal degree {max_t} needs the window to reach p = {reach_p}, but it stops at {}",
            tr.window.p_max
        )));
    }
    if let Some(max_u) = max_u {
        let reach_q = max_u + n.max_q().unwrap_or(0);
        if reach_q > tr.window.q_max {
            return Err(Error::WindowTooSmall(format!(
                "weight {max_u} needs the window to reach q = {reach_q}, but it stops at {}",
                tr.window.q_max
            )));
        }
    }
    Ok(())
}
