//! Minimal free resolutions over the dual of G.
//!
//! Level `s` of the resolution is a free module `F_s` with one generator per
//! Ext class in filtration `s`. The sweep runs over internal degrees `t`
//! ascending, then filtrations `s` ascending, then weights; the step at
//! `(s, t, u)` needs only levels `s - 1` and `s` below `(t, u)`. Weights of
//! one `(s, t)` are independent and run in parallel; their results are
//! appended in weight order, so output does not depend on scheduling.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use super::{ChartBounds, ExtChart, ModuleSource};
use crate::error::Result;
use crate::f2linalg::{kernel_basis, Echelon, F2Matrix, F2Vector};
use crate::grading::{Bidegree, Tridegree};
use crate::hopf::{g_table, GRef};

/// A generator of `F_s`, with `∂ g` written over the basis of `F_{s-1}` (or
/// of the module, for `s = 0`) in the degree of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResGenerator {
    pub label: String,
    pub degree: Bidegree,
    pub differential: F2Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResolutionViolation {
    /// `∂∂ g ≠ 0`.
    NotAComplex { s: u32, label: String },
    /// `∂ g` has a unit coefficient on a generator of the level below.
    NotMinimal { s: u32, label: String },
}

/// Basis of `F_s` in one degree: the generators whose degree lies below it
/// on the G line, each contributing a block of monomials of one weight.
struct Layout {
    /// `(generator, offset, weight)` in generator order.
    blocks: Vec<(usize, usize, u32)>,
    total: usize,
}

impl Layout {
    fn decode(&self, i: usize) -> (usize, GRef) {
        let k = self.blocks.partition_point(|&(_, offset, _)| offset <= i) - 1;
        let (g, offset, weight) = self.blocks[k];
        (g, GRef { weight, index: (i - offset) as u32 })
    }

    fn offset_of(&self, g: usize) -> Option<usize> {
        self.blocks.iter().find(|b| b.0 == g).map(|b| b.1)
    }
}

#[derive(Clone, Copy)]
enum Space {
    Module,
    Free(u32),
}

pub struct Resolution {
    module: Arc<dyn ModuleSource>,
    levels: Vec<Vec<ResGenerator>>,
    /// The resolution is complete for `s <= .0` and `t <= .1`.
    watermark: Option<(u32, i32)>,
}

impl Resolution {
    pub fn new(module: Arc<dyn ModuleSource>) -> Self {
        Self { module, levels: Vec::new(), watermark: None }
    }

    pub(crate) fn from_parts(
        module: Arc<dyn ModuleSource>,
        levels: Vec<Vec<ResGenerator>>,
        watermark: Option<(u32, i32)>,
    ) -> Self {
        Self { module, levels, watermark }
    }

    pub(crate) fn set_differential(&mut self, s: u32, index: usize, v: F2Vector) {
        self.levels[s as usize][index].differential = v;
    }

    pub fn module(&self) -> &Arc<dyn ModuleSource> {
        &self.module
    }

    pub fn watermark(&self) -> Option<(u32, i32)> {
        self.watermark
    }

    pub fn generators(&self, s: u32) -> &[ResGenerator] {
        self.levels.get(s as usize).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    fn layout(&self, s: u32, d: Bidegree) -> Layout {
        let table = g_table();
        let mut blocks = Vec::new();
        let mut total = 0;
        for (g, gen) in self.generators(s).iter().enumerate() {
            let diff = d - gen.degree;
            if diff.p == 2 * diff.q && diff.q >= 0 {
                let weight = diff.q as u32;
                blocks.push((g, total, weight));
                total += table.dim(weight);
            }
        }
        Layout { blocks, total }
    }

    fn space_dim(&self, space: Space, d: Bidegree) -> usize {
        match space {
            Space::Module => self.module.dim(d),
            Space::Free(s) => self.layout(s, d).total,
        }
    }

    /// `a∨ · v` for `v` in `space` at degree `d`.
    fn act(&self, space: Space, a: GRef, d: Bidegree, v: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zero();
        match space {
            Space::Module => {
                for i in v.iter() {
                    out.add_assign(&self.module.act(a, d, i));
                }
            }
            Space::Free(s) => {
                let table = g_table();
                let (from, to) = (self.layout(s, d), self.layout(s, d + a.bidegree()));
                for i in v.iter() {
                    let (g, c) = from.decode(i);
                    let offset = to.offset_of(g).expect("target block exists");
                    out.add_assign(&table.product(a, c).map_indices(|k| offset + k));
                }
            }
        }
        out
    }

    fn below(s: u32) -> Space {
        if s == 0 {
            Space::Module
        } else {
            Space::Free(s - 1)
        }
    }

    /// Images of the basis of `F_s` at `d` under `∂`.
    fn images(&self, s: u32, d: Bidegree) -> Vec<F2Vector> {
        let table = g_table();
        let below = Self::below(s);
        let gens = self.generators(s);
        let mut out = Vec::new();
        for (g, _, weight) in self.layout(s, d).blocks {
            for index in 0..table.dim(weight) as u32 {
                out.push(self.act(below, GRef { weight, index }, gens[g].degree, &gens[g].differential));
            }
        }
        out
    }

    /// Differentials of the new level-`s` generators in degree `d`.
    fn step(&self, s: u32, d: Bidegree) -> Vec<F2Vector> {
        let below = Self::below(s);
        let n = self.space_dim(below, d);
        if n == 0 {
            return Vec::new();
        }
        let mut image = Echelon::new(n);
        for v in self.images(s, d) {
            image.insert(v);
        }
        if image.rank() == n {
            return Vec::new();
        }
        let kernel = if s == 0 {
            (0..n).map(F2Vector::unit).collect()
        } else {
            let rows = self.space_dim(Self::below(s - 1), d);
            kernel_basis(&F2Matrix::from_columns(rows, &self.images(s - 1, d)))
        };
        kernel.into_iter().filter_map(|k| image.insert(k)).collect()
    }

    fn candidate_weights(&self, s: u32, t: i32) -> Vec<i32> {
        if s == 0 {
            return self.module.weights_at(t);
        }
        let set: BTreeSet<i32> = self
            .generators(s - 1)
            .iter()
            .filter(|g| t >= g.degree.p && (t - g.degree.p) % 2 == 0)
            .map(|g| g.degree.q + (t - g.degree.p) / 2)
            .collect();
        set.into_iter().collect()
    }

    fn done(&self, s: u32, t: i32) -> bool {
        self.watermark.is_some_and(|(ds, dt)| s <= ds && t <= dt)
    }

    /// Extends the resolution to cover `s <= max_s` and `t <= max_t` (and
    /// everything already covered).
    ///
    /// # Errors
    ///
    /// `WindowTooSmall` if the module is a truncated comodule too small for
    /// the requested range.
    pub fn extend_to(&mut self, max_s: u32, max_t: i32) -> Result<()> {
        let (max_s, max_t) = match self.watermark {
            Some((s, t)) => (max_s.max(s), max_t.max(t)),
            None => (max_s, max_t),
        };
        self.module.check_range(max_t, None)?;
        while self.levels.len() <= max_s as usize {
            self.levels.push(Vec::new());
        }
        if let Some(t0) = self.module.min_t() {
            for t in t0..=max_t {
                for s in 0..=max_s {
                    if self.done(s, t) {
                        continue;
                    }
                    let weights = self.candidate_weights(s, t);
                    if let Some(&u) = weights.last() {
                        self.module.check_range(t, Some(u))?;
                    }
                    let found: Vec<Vec<F2Vector>> =
                        weights.par_iter().map(|&u| self.step(s, Bidegree::new(t, u))).collect();
                    for (&u, diffs) in weights.iter().zip(found) {
                        for differential in diffs {
                            let level = &mut self.levels[s as usize];
                            let label = format!("{s}_{}", level.len());
                            level.push(ResGenerator { label, degree: Bidegree::new(t, u), differential });
                        }
                    }
                }
            }
        }
        self.watermark = Some((max_s, max_t));
        Ok(())
    }

    /// Checks `∂² = 0` and minimality for every stored generator.
    pub fn verify(&self) -> Vec<ResolutionViolation> {
        let mut out = Vec::new();
        for s in 0..self.levels.len() as u32 {
            for g in self.generators(s) {
                if s > 0 {
                    let layout = self.layout(s - 1, g.degree);
                    let mut dd = F2Vector::zero();
                    let mut minimal = true;
                    for i in g.differential.iter() {
                        let (h, c) = layout.decode(i);
                        if c.weight == 0 {
                            minimal = false;
                        }
                        let below = &self.generators(s - 1)[h];
                        dd.add_assign(&self.act(Self::below(s - 1), c, below.degree, &below.differential));
                    }
                    if !dd.is_zero() {
                        out.push(ResolutionViolation::NotAComplex { s, label: g.label.clone() });
                    }
                    if !minimal {
                        out.push(ResolutionViolation::NotMinimal { s, label: g.label.clone() });
                    }
                }
            }
        }
        out
    }

    /// The terms of `∂ g` as `(monomial, target label)` pairs.
    pub fn differential_terms(&self, s: u32, g: &ResGenerator) -> Vec<(GRef, String)> {
        if s == 0 {
            return g.differential.iter().map(|i| (GRef::ONE, self.module.label(g.degree, i))).collect();
        }
        let layout = self.layout(s - 1, g.degree);
        g.differential
            .iter()
            .map(|i| {
                let (h, c) = layout.decode(i);
                (c, self.generators(s - 1)[h].label.clone())
            })
            .collect()
    }

    /// Inverse of [`differential_terms`](Self::differential_terms): the index
    /// of `a∨ · target` in the basis below level `s` at degree `d`, or `None`
    /// if there is no such basis element.
    pub(crate) fn encode_term(&self, s: u32, d: Bidegree, a: GRef, target: &str) -> Option<usize> {
        if s == 0 {
            let (td, i) = self.module.find(target)?;
            return (a == GRef::ONE && td == d).then_some(i);
        }
        let h = self.generators(s - 1).iter().position(|g| g.label == target)?;
        let layout = self.layout(s - 1, d);
        let (_, offset, weight) = *layout.blocks.iter().find(|b| b.0 == h)?;
        (weight == a.weight).then_some(offset + a.index as usize)
    }
}

/// A minimal resolution of `module` through the range needed by `bounds`
/// (the weight window is ignored).
pub fn minimal_resolution(module: Arc<dyn ModuleSource>, bounds: ChartBounds) -> Result<Resolution> {
    let mut r = Resolution::new(module);
    r.extend_to(bounds.max_s, bounds.max_t())?;
    Ok(r)
}

/// Generator counts of a resolution as an Ext chart, over the largest
/// region the watermark certifies: `s <= S` and `t - s <= T - S`.
pub fn chart_from_resolution(r: &Resolution) -> ExtChart {
    let Some((max_s, max_t)) = r.watermark else {
        return ExtChart::new(ChartBounds::new(0, -1));
    };
    let bounds = ChartBounds::new(max_s, max_t - max_s as i32);
    let mut chart = ExtChart::new(bounds);
    for s in 0..=max_s {
        let mut labels: std::collections::BTreeMap<Tridegree, Vec<String>> = Default::default();
        for g in r.generators(s) {
            let d = Tridegree::new(s, g.degree.p, g.degree.q);
            if bounds.contains(d) {
                labels.entry(d).or_default().push(g.label.clone());
            }
        }
        for (d, l) in labels {
            chart.set(d, l.len());
            chart.set_labels(d, l);
        }
    }
    chart
}
