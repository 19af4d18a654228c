//! The cobar complex `C^s = Hom_F(N, Ḡ^{⊗s} ⊗ M)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use super::{check_padding, ChartBounds, ExtChart};
use crate::comodule::Comodule;
use crate::error::Result;
use crate::f2linalg::{F2Matrix, F2Vector, Reducer};
use crate::grading::{Bidegree, Tridegree};
use crate::hopf::{g_table, GRef};

/// A basis element `x∨ ⊗ [g_1|…|g_s] ⊗ y` of the cobar complex: it sends the
/// source basis element `x` to `[g_1|…|g_s] y` and the rest of `N` to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CobarCell {
    pub source: usize,
    pub slots: Vec<GRef>,
    pub target: usize,
}

impl CobarCell {
    pub fn s(&self) -> u32 {
        self.slots.len() as u32
    }
}

/// The cobar complex of a pair of comodules, with bases and differentials
/// computed on demand per filtration and internal degree.
pub struct CobarComplex<'a> {
    n: &'a Comodule,
    m: &'a Comodule,
    /// For each basis element `x0` of `N`: pairs `(x, γ)` with `γ ⊗ x0` a term
    /// of the reduced coaction of `x`.
    source_terms: Vec<Vec<(usize, GRef)>>,
    /// Reduced coaction of each basis element of `M`.
    target_terms: Vec<Vec<(GRef, usize)>>,
}

fn g_ref(m: &crate::hopf::MonomialKey) -> GRef {
    g_table().lookup(m).expect("coaction of a valid comodule lies in G")
}

/// Compositions of `total` into `parts` positive summands, in lexicographic
/// order.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts as u32 - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl<'a> CobarComplex<'a> {
    /// # Errors
    ///
    /// `InvalidComodule` if either argument fails validation.
    pub fn new(n: &'a Comodule, m: &'a Comodule) -> Result<Self> {
        n.require_valid()?;
        m.require_valid()?;
        let mut source_terms = vec![Vec::new(); n.dim()];
        for x in 0..n.dim() {
            for (mono, x0) in n.reduced_coaction(x) {
                source_terms[*x0].push((x, g_ref(mono)));
            }
        }
        let target_terms =
            (0..m.dim()).map(|y| m.reduced_coaction(y).map(|(mono, w)| (g_ref(mono), *w)).collect()).collect();
        Ok(Self { n, m, source_terms, target_terms })
    }

    /// Basis of `C^s` in internal degree `deg`, in canonical order.
    pub fn basis(&self, s: u32, deg: Bidegree) -> Vec<CobarCell> {
        let table = g_table();
        let mut out = Vec::new();
        for x in 0..self.n.dim() {
            for y in 0..self.m.dim() {
                let slots_deg = deg + self.n.degree(x) - self.m.degree(y);
                if slots_deg.p != 2 * slots_deg.q || slots_deg.q < s as i32 {
                    continue;
                }
                if s == 0 {
                    if slots_deg.q == 0 {
                        out.push(CobarCell { source: x, slots: vec![], target: y });
                    }
                    continue;
                }
                for comp in compositions(slots_deg.q as u32, s as usize) {
                    let dims: Vec<u32> = comp.iter().map(|&w| table.dim(w) as u32).collect();
                    let mut idx = vec![0u32; comp.len()];
                    loop {
                        let slots = comp.iter().zip(&idx).map(|(&weight, &index)| GRef { weight, index }).collect();
                        out.push(CobarCell { source: x, slots, target: y });
                        // odometer, last slot fastest
                        let mut k = comp.len();
                        loop {
                            if k == 0 {
                                break;
                            }
                            k -= 1;
                            idx[k] += 1;
                            if idx[k] < dims[k] {
                                break;
                            }
                            idx[k] = 0;
                            if k == 0 {
                                k = usize::MAX;
                                break;
                            }
                        }
                        if k == usize::MAX {
                            break;
                        }
                    }
                }
            }
        }
        out
    }

    /// The differential of a single cell, as a list of cells (with
    /// repetitions, to be reduced mod 2).
    pub fn differential_terms(&self, cell: &CobarCell) -> Vec<CobarCell> {
        let table = g_table();
        let mut out = Vec::new();
        for &(x, gamma) in &self.source_terms[cell.source] {
            let mut slots = Vec::with_capacity(cell.slots.len() + 1);
            slots.push(gamma);
            slots.extend_from_slice(&cell.slots);
            out.push(CobarCell { source: x, slots, target: cell.target });
        }
        for (i, &g) in cell.slots.iter().enumerate() {
            for (a, b) in table.reduced_coproduct(g) {
                let mut slots = Vec::with_capacity(cell.slots.len() + 1);
                slots.extend_from_slice(&cell.slots[..i]);
                slots.push(a);
                slots.push(b);
                slots.extend_from_slice(&cell.slots[i + 1..]);
                out.push(CobarCell { source: cell.source, slots, target: cell.target });
            }
        }
        for &(gamma, y) in &self.target_terms[cell.target] {
            let mut slots = cell.slots.clone();
            slots.push(gamma);
            out.push(CobarCell { source: cell.source, slots, target: y });
        }
        out
    }

    /// The images of the basis of `C^s(deg)` under `d`, as vectors over the
    /// basis of `C^{s+1}(deg)`.
    pub fn differential_images(&self, s: u32, deg: Bidegree) -> (usize, Vec<F2Vector>) {
        let next = self.basis(s + 1, deg);
        let index: HashMap<&CobarCell, usize> = next.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let images = self
            .basis(s, deg)
            .iter()
            .map(|cell| F2Vector::from_indices(self.differential_terms(cell).iter().map(|c| index[c])))
            .collect();
        (next.len(), images)
    }

    /// The matrix of `d: C^s(deg) -> C^{s+1}(deg)`.
    pub fn differential(&self, s: u32, deg: Bidegree) -> F2Matrix {
        let (rows, images) = self.differential_images(s, deg);
        F2Matrix::from_columns(rows, &images)
    }

    pub fn rank(&self, s: u32, deg: Bidegree) -> usize {
        let (rows, images) = self.differential_images(s, deg);
        if images.is_empty() || rows == 0 {
            return 0;
        }
        // the row space of the transpose has the same rank
        Reducer::default().rref(&F2Matrix::new(rows, images)).1.len()
    }

    pub fn ext_dim(&self, d: Tridegree) -> usize {
        let deg = Bidegree::new(d.t, d.u);
        let dim = self.basis(d.s, deg).len();
        if dim == 0 {
            return 0;
        }
        let below = if d.s == 0 { 0 } else { self.rank(d.s - 1, deg) };
        dim - self.rank(d.s, deg) - below
    }

    /// Internal degrees `(t, u)` with `C^s(t,u) ≠ 0` and `t <= max_t`.
    pub fn support(&self, s: u32, max_t: i32) -> BTreeSet<Bidegree> {
        let mut out = BTreeSet::new();
        for x in 0..self.n.dim() {
            for y in 0..self.m.dim() {
                let shift = self.m.degree(y) - self.n.degree(x);
                let k0 = if s == 0 { 0 } else { s as i32 };
                let mut k = k0;
                loop {
                    let deg = Bidegree::new(2 * k, k) + shift;
                    if deg.p > max_t {
                        break;
                    }
                    out.insert(deg);
                    if s == 0 {
                        break;
                    }
                    k += 1;
                }
            }
        }
        out
    }
}

/// Materialized cobar data: for each filtration `s <= max_s` and internal
/// degree in range, the basis of `C^s` and the matrix of `d: C^s -> C^{s+1}`.
pub struct CobarChain {
    pub bounds: ChartBounds,
    pub levels: Vec<BTreeMap<Bidegree, (Vec<CobarCell>, F2Matrix)>>,
}

impl CobarChain {
    /// `d^{s+1} ∘ d^s` vanishes in every stored degree.
    pub fn is_complex(&self) -> bool {
        self.levels.windows(2).all(|w| {
            w[0].iter().all(|(deg, (_, d0))| match w[1].get(deg) {
                Some((_, d1)) => d1.compose(d0).is_zero(),
                None => true,
            })
        })
    }
}

/// Bases and differentials of the cobar complex for `Ext(n, m)` within
/// `bounds` (weight window ignored).
pub fn cobar_complex(n: &Comodule, m: &Comodule, bounds: ChartBounds) -> Result<CobarChain> {
    let complex = CobarComplex::new(n, m)?;
    let levels = (0..=bounds.max_s)
        .map(|s| {
            let max_t = bounds.max_stem + s as i32;
            complex
                .support(s, max_t)
                .into_iter()
                .filter(|deg| bounds.weight.is_none_or(|(lo, hi)| (lo..=hi).contains(&deg.q)))
                .map(|deg| (deg, (complex.basis(s, deg), complex.differential(s, deg))))
                .collect()
        })
        .collect();
    Ok(CobarChain { bounds, levels })
}

/// Ext dimensions from the cobar complex, computed in parallel over
/// tridegrees.
///
/// # Errors
///
/// `InvalidComodule` for invalid input; `WindowTooSmall` when `m` is a
/// windowed comodule too small to certify `bounds`.
pub fn cobar_ext(n: &Comodule, m: &Comodule, bounds: ChartBounds) -> Result<ExtChart> {
    let complex = CobarComplex::new(n, m)?;
    let in_weight = |deg: &Bidegree| bounds.weight.is_none_or(|(lo, hi)| (lo..=hi).contains(&deg.q));
    let cells: Vec<Tridegree> = (0..=bounds.max_s)
        .flat_map(|s| {
            complex
                .support(s, bounds.max_stem + s as i32)
                .into_iter()
                .filter(in_weight)
                .map(move |deg| Tridegree::new(s, deg.p, deg.q))
        })
        .collect();
    let max_u = cells.iter().map(|d| d.u).max();
    check_padding(n, m, bounds.max_t(), max_u)?;

    let mut rank_keys: BTreeSet<(u32, Bidegree)> = BTreeSet::new();
    for d in &cells {
        let deg = Bidegree::new(d.t, d.u);
        rank_keys.insert((d.s, deg));
        if d.s > 0 {
            rank_keys.insert((d.s - 1, deg));
        }
    }
    let keys: Vec<(u32, Bidegree)> = rank_keys.into_iter().collect();
    let ranks: HashMap<(u32, Bidegree), usize> =
        keys.par_iter().map(|&(s, deg)| ((s, deg), complex.rank(s, deg))).collect();
    let dims: Vec<(Tridegree, usize)> = cells
        .par_iter()
        .map(|&d| {
            let deg = Bidegree::new(d.t, d.u);
            let dim = complex.basis(d.s, deg).len();
            let below = if d.s == 0 { 0 } else { ranks[&(d.s - 1, deg)] };
            (d, dim - ranks[&(d.s, deg)] - below)
        })
        .collect();

    let mut chart = ExtChart::new(bounds);
    for (d, n) in dims {
        chart.set(d, n);
    }
    Ok(chart)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::{cofree, GradedDims, Window};

    fn f2() -> Comodule {
        Comodule::trivial("1", Bidegree::ZERO)
    }

    #[test]
    fn compositions_are_lexicographic() {
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(2, 3), Vec::<Vec<u32>>::new());
        assert_eq!(compositions(0, 0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn low_degree_bases() {
        let (n, m) = (f2(), f2());
        let c = CobarComplex::new(&n, &m).unwrap();
        assert_eq!(c.basis(0, Bidegree::ZERO).len(), 1);
        for q in 1..8 {
            let dim = g_table().dim(q as u32);
            assert_eq!(c.basis(1, Bidegree::new(2 * q, q)).len(), dim);
        }
        assert!(c.basis(1, Bidegree::new(3, 1)).is_empty());
        assert!(c.differential(0, Bidegree::ZERO).is_zero());
    }

    #[test]
    fn sphere_low_classes() {
        let chart = cobar_ext(&f2(), &f2(), ChartBounds::new(3, 6)).unwrap();
        assert_eq!(chart.get(Tridegree::new(0, 0, 0)), 1);
        assert_eq!(chart.get(Tridegree::new(1, 2, 1)), 1);
        assert_eq!(chart.get(Tridegree::new(1, 4, 2)), 1);
        assert_eq!(chart.get(Tridegree::new(1, 3, 1)), 0);
        assert_eq!(chart.get(Tridegree::new(1, 6, 3)), 0);
        assert_eq!(chart.get(Tridegree::new(2, 4, 2)), 1);
        for (d, _) in chart.iter() {
            assert_eq!(d.t, 2 * d.u, "{d}");
        }
    }

    #[test]
    fn cofree_is_acyclic() {
        let dims: GradedDims = [(Bidegree::ZERO, 1)].into_iter().collect();
        let m = cofree(&dims, Window::below(20)).unwrap();
        let chart = cobar_ext(&f2(), &m, ChartBounds::new(3, 10)).unwrap();
        assert_eq!(chart.iter().collect::<Vec<_>>(), vec![(Tridegree::new(0, 0, 0), 1)]);
    }

    #[test]
    fn padding_is_enforced() {
        let dims: GradedDims = [(Bidegree::ZERO, 1)].into_iter().collect();
        let m = cofree(&dims, Window::below(10)).unwrap();
        assert!(cobar_ext(&f2(), &m, ChartBounds::new(3, 7)).is_ok());
        assert!(matches!(cobar_ext(&f2(), &m, ChartBounds::new(3, 8)), Err(crate::Error::WindowTooSmall(_))));
    }

    #[test]
    fn d_squared_vanishes() {
        let chain = cobar_complex(&f2(), &crate::comodule::tests::vw(), ChartBounds::new(4, 8)).unwrap();
        assert!(chain.is_complex());
    }
}
