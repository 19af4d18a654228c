//! Finite bigraded left comodules over G.
//!
//! A comodule is a finite basis of labelled, bigraded elements together with
//! a coaction `ψ(v) = Σ m ⊗ w` listing pairs of a G monomial `m` and a basis
//! element `w`. Coefficients are mod 2, so a term listed twice cancels.
//!
//! The basis is always kept sorted by `(p, q, label)`; every constructor
//! re-sorts and re-indexes.

mod format;
mod iso;
mod series;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

pub use format::{parse_comodule, write_comodule};
pub use iso::{count_morphisms, find_isomorphism, morphism_space_dim, Morphism};
pub use series::{
    composition_series, extension_cocycles, extension_from_cocycle, reassemble, Cocycle, CompositionSeries, Layer,
};

use crate::error::{Error, Result};
use crate::f2linalg::F2Vector;
use crate::grading::Bidegree;
use crate::hopf::{g_table, GRef, MonomialKey};

/// A graded dimension table; zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDims(BTreeMap<Bidegree, usize>);

impl GradedDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, d: Bidegree) -> usize {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn add(&mut self, d: Bidegree, n: usize) {
        if n > 0 {
            *self.0.entry(d).or_default() += n;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Bidegree, usize)> + '_ {
        self.0.iter().map(|(&d, &n)| (d, n))
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(Bidegree, usize)> for GradedDims {
    fn from_iter<I: IntoIterator<Item = (Bidegree, usize)>>(iter: I) -> Self {
        let mut out = GradedDims::new();
        for (d, n) in iter {
            out.add(d, n);
        }
        out
    }
}

/// A bidegree box `p_min..=p_max` by `q_min..=q_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub p_min: i32,
    pub p_max: i32,
    pub q_min: i32,
    pub q_max: i32,
}

impl Window {
    /// Everything with `p <= p_max` (and any weight).
    pub fn below(p_max: i32) -> Self {
        Self { p_min: i32::MIN / 4, p_max, q_min: i32::MIN / 4, q_max: i32::MAX / 4 }
    }

    pub fn contains(&self, d: Bidegree) -> bool {
        (self.p_min..=self.p_max).contains(&d.p) && (self.q_min..=self.q_max).contains(&d.q)
    }

    pub fn is_empty(&self) -> bool {
        self.p_min > self.p_max || self.q_min > self.q_max
    }
}

/// Provenance of a windowed cofree comodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub window: Window,
    /// Coaction terms whose target fell outside the window.
    pub dropped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub label: String,
    pub degree: Bidegree,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Comodule {
    basis: Vec<BasisElement>,
    coaction: Vec<Vec<(MonomialKey, usize)>>,
    truncation: Option<Truncation>,
}

impl fmt::Debug for Comodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_comodule(self))
    }
}

fn normalize_terms(terms: impl IntoIterator<Item = (MonomialKey, usize)>) -> Vec<(MonomialKey, usize)> {
    let mut set = BTreeSet::new();
    for t in terms {
        if !set.remove(&t) {
            set.insert(t);
        }
    }
    set.into_iter().collect()
}

impl Comodule {
    pub fn zero() -> Self {
        Self { basis: Vec::new(), coaction: Vec::new(), truncation: None }
    }

    /// `F₂` in bidegree `d`.
    pub fn trivial(label: &str, d: Bidegree) -> Self {
        Self {
            basis: vec![BasisElement { label: label.into(), degree: d }],
            coaction: vec![vec![(MonomialKey::one(), 0)]],
            truncation: None,
        }
    }

    /// Builds a comodule from raw parts. Coaction terms are indices into
    /// `basis`; the counit term is *not* inserted. Axioms are not checked
    /// (see [`Comodule::validate`]), only that labels are distinct and
    /// targets exist.
    pub fn from_parts(basis: Vec<BasisElement>, coaction: Vec<Vec<(MonomialKey, usize)>>) -> Result<Self> {
        if basis.len() != coaction.len() {
            return Err(Error::InvalidComodule("coaction table length differs from basis".into()));
        }
        let mut seen = BTreeSet::new();
        for b in &basis {
            if !seen.insert(&b.label) {
                return Err(Error::InvalidComodule(format!("duplicate label {}", b.label)));
            }
        }
        for terms in &coaction {
            if let Some((_, w)) = terms.iter().find(|(_, w)| *w >= basis.len()) {
                return Err(Error::InvalidComodule(format!("coaction target {w} out of range")));
            }
        }
        let mut order: Vec<usize> = (0..basis.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&basis[a], &basis[b]);
            (x.degree.p, x.degree.q, &x.label).cmp(&(y.degree.p, y.degree.q, &y.label))
        });
        let mut new_index = vec![0; basis.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let coaction = order
            .iter()
            .map(|&old| normalize_terms(coaction[old].iter().map(|(m, w)| (m.clone(), new_index[*w]))))
            .collect();
        let basis = order.iter().map(|&old| basis[old].clone()).collect();
        Ok(Self { basis, coaction, truncation: None })
    }

    /// Like [`from_parts`](Self::from_parts) but inserts the counit term
    /// `1 ⊗ v` wherever it is missing.
    pub fn with_counits(basis: Vec<BasisElement>, mut coaction: Vec<Vec<(MonomialKey, usize)>>) -> Result<Self> {
        for (i, terms) in coaction.iter_mut().enumerate() {
            if !terms.iter().any(|(m, w)| m.is_one() && *w == i) {
                terms.push((MonomialKey::one(), i));
            }
        }
        Self::from_parts(basis, coaction)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn degree(&self, i: usize) -> Bidegree {
        self.basis[i].degree
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn coaction(&self, i: usize) -> &[(MonomialKey, usize)] {
        &self.coaction[i]
    }

    /// The terms of `ψ(v) - 1 ⊗ v`.
    pub fn reduced_coaction(&self, i: usize) -> impl Iterator<Item = &(MonomialKey, usize)> {
        self.coaction[i].iter().filter(|(m, _)| !m.is_one())
    }

    pub fn truncation(&self) -> Option<&Truncation> {
        self.truncation.as_ref()
    }

    /// Indices of the basis elements in bidegree `d`, ascending.
    pub fn indices_in(&self, d: Bidegree) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].degree == d).collect()
    }

    pub fn degrees(&self) -> BTreeSet<Bidegree> {
        self.basis.iter().map(|b| b.degree).collect()
    }

    pub fn dims(&self) -> GradedDims {
        self.basis.iter().map(|b| (b.degree, 1)).collect()
    }

    pub fn max_p(&self) -> Option<i32> {
        self.basis.iter().map(|b| b.degree.p).max()
    }

    pub fn min_p(&self) -> Option<i32> {
        self.basis.iter().map(|b| b.degree.p).min()
    }

    pub fn max_q(&self) -> Option<i32> {
        self.basis.iter().map(|b| b.degree.q).max()
    }

    /// `[min, max]` of the Chow-Novikov degrees present; `None` when empty.
    pub fn cn_support(&self) -> Option<(i32, i32)> {
        let cn = self.basis.iter().map(|b| b.degree.chow_novikov());
        Some((cn.clone().min()?, cn.max()?))
    }

    /// Applies the coaction to a homogeneous vector, grouping the result by
    /// G monomial. Terms with monomials outside G are skipped.
    pub fn coact_vector(&self, v: &F2Vector, reduced: bool) -> BTreeMap<GRef, F2Vector> {
        let table = g_table();
        let mut out: BTreeMap<GRef, F2Vector> = BTreeMap::new();
        for i in v.iter() {
            for (m, w) in &self.coaction[i] {
                if reduced && m.is_one() {
                    continue;
                }
                if let Some(r) = table.lookup(m) {
                    out.entry(r).or_default().toggle(*w);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// The suspension `Σ^{d} self`.
    pub fn shifted(&self, d: Bidegree) -> Comodule {
        let mut out = self.clone();
        for b in &mut out.basis {
            b.degree = b.degree + d;
        }
        out
    }

    pub fn relabeled(&self, f: impl Fn(&str) -> String) -> Result<Comodule> {
        let basis = self.basis.iter().map(|b| BasisElement { label: f(&b.label), degree: b.degree }).collect();
        let mut out = Comodule::from_parts(basis, self.coaction.clone())?;
        out.truncation = self.truncation.clone();
        Ok(out)
    }

    /// Checks the comodule axioms. An empty report means `self` is a genuine
    /// comodule over G.
    pub fn validate(&self) -> ValidationReport {
        let table = g_table();
        let mut report = ValidationReport::default();
        for i in 0..self.dim() {
            let mut push = |kind| report.violations.push(Violation { element: self.label(i).to_string(), kind });
            let terms = &self.coaction[i];
            let counits = terms.iter().filter(|(m, w)| m.is_one() && *w == i).count();
            // A broken counit also breaks coassociativity; report only the former.
            let mut well_formed = counits == 1;
            if !well_formed {
                push(ViolationKind::Counit);
            }
            for (m, w) in terms {
                if table.lookup(m).is_none() {
                    push(ViolationKind::NotAMonomialOfG(m.clone()));
                    well_formed = false;
                } else if m.bidegree() + self.degree(*w) != self.degree(i) {
                    push(ViolationKind::Bidegree(m.clone(), self.label(*w).to_string()));
                }
                if m.is_one() && *w != i {
                    push(ViolationKind::Counit);
                    well_formed = false;
                }
            }
            if well_formed && !self.coassociative_at(i) {
                push(ViolationKind::Coassociativity);
            }
        }
        report.violations.dedup();
        report
    }

    fn coassociative_at(&self, i: usize) -> bool {
        let table = g_table();
        let mut lhs: BTreeSet<(GRef, GRef, usize)> = BTreeSet::new();
        let mut rhs: BTreeSet<(GRef, GRef, usize)> = BTreeSet::new();
        let toggle = |s: &mut BTreeSet<_>, t| {
            if !s.remove(&t) {
                s.insert(t);
            }
        };
        for (m, w) in &self.coaction[i] {
            let m = table.lookup(m).unwrap();
            for &(a, b) in table.coproduct(m).iter() {
                toggle(&mut lhs, (a, b, *w));
            }
            for (m2, w2) in &self.coaction[*w] {
                let Some(m2) = table.lookup(m2) else { return false };
                toggle(&mut rhs, (m, m2, *w2));
            }
        }
        lhs == rhs
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidComodule(report.to_string()))
        }
    }

    /// The direct sum of comodules with pairwise distinct labels.
    pub fn direct_sum(parts: &[Comodule]) -> Result<Comodule> {
        let mut basis = Vec::new();
        let mut coaction = Vec::new();
        for part in parts {
            let offset = basis.len();
            basis.extend(part.basis.iter().cloned());
            coaction.extend(part.coaction.iter().map(|t| t.iter().map(|(m, w)| (m.clone(), w + offset)).collect()));
        }
        Comodule::from_parts(basis, coaction)
    }

    /// Restriction to a set of basis indices closed under the coaction.
    fn restrict(&self, keep: &[usize]) -> Comodule {
        let mut new_index = HashMap::new();
        for (k, &i) in keep.iter().enumerate() {
            new_index.insert(i, k);
        }
        let basis = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let coaction = keep
            .iter()
            .map(|&i| self.coaction[i].iter().filter_map(|(m, w)| Some((m.clone(), *new_index.get(w)?))).collect())
            .collect();
        Comodule::from_parts(basis, coaction).expect("restriction of a well-formed comodule")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// The term `1 ⊗ v` is missing, repeated, or `1 ⊗ w` appears for `w != v`.
    Counit,
    Bidegree(MonomialKey, String),
    Coassociativity,
    NotAMonomialOfG(MonomialKey),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub element: String,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ViolationKind::Counit => write!(f, "counit violation at {}", self.element),
            ViolationKind::Bidegree(m, w) => {
                write!(f, "bidegree mismatch at {}: term {m} ⊗ {w}", self.element)
            }
            ViolationKind::Coassociativity => write!(f, "coassociativity violation at {}", self.element),
            ViolationKind::NotAMonomialOfG(m) => write!(f, "{m} at {} is not a monomial of G", self.element),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Label of the `i`-th cogenerator of a cofree comodule.
pub fn cogenerator_label(i: usize) -> String {
    format!("e{i}")
}

/// The cofree comodule `G ⊗ V` on a graded vector space `V`, truncated to
/// `window`.
///
/// Cogenerators are labelled `e0, e1, …` in `(p, q)` order and basis
/// elements `m*e_i`. Coaction terms whose target leaves the window are
/// dropped and counted in the resulting [`Truncation`]. Windows bounded only
/// from above never drop anything, since `ψ` lowers degrees.
pub fn cofree(dims: &GradedDims, window: Window) -> Result<Comodule> {
    if window.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let table = g_table();
    let mut cogens = Vec::new();
    for (d, n) in dims.iter() {
        for _ in 0..n {
            cogens.push(d);
        }
    }
    let label = |m: GRef, e: usize| format!("{}*{}", table.monomial(m).ascii(), cogenerator_label(e));

    let mut basis = Vec::new();
    let mut slots = Vec::new();
    for (e, &d) in cogens.iter().enumerate() {
        for weight in 0.. {
            let deg = d + GRef { weight, index: 0 }.bidegree();
            if deg.p > window.p_max || deg.q > window.q_max {
                break;
            }
            if !window.contains(deg) {
                continue;
            }
            for index in 0..table.dim(weight) as u32 {
                let m = GRef { weight, index };
                basis.push(BasisElement { label: label(m, e), degree: deg });
                slots.push((m, e));
            }
        }
    }
    let position: HashMap<(GRef, usize), usize> = slots.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut dropped = 0;
    let coaction = slots
        .iter()
        .map(|&(m, e)| {
            let mut terms = Vec::new();
            for &(left, right) in table.coproduct(m).iter() {
                match position.get(&(right, e)) {
                    Some(&w) => terms.push((table.monomial(left), w)),
                    None => dropped += 1,
                }
            }
            terms
        })
        .collect();
    let mut c = Comodule::from_parts(basis, coaction)?;
    c.truncation = Some(Truncation { window, dropped });
    Ok(c)
}

/// `G` itself as a comodule (one cogenerator in degree 0), truncated to
/// `p <= p_max`: the homology of `MBP`.
pub fn cofree_g(p_max: i32) -> Result<Comodule> {
    cofree(&[(Bidegree::ZERO, 1)].into_iter().collect(), Window::below(p_max))
}

/// `G ⊗ G` (cogenerators in the degrees of the monomials of G), truncated
/// to `p <= p_max`: the homology of `MBP ∧ MBP`.
pub fn cofree_g_g(p_max: i32) -> Result<Comodule> {
    let table = g_table();
    let dims: GradedDims =
        (0..=(p_max.max(0) / 2) as u32).map(|w| (GRef { weight: w, index: 0 }.bidegree(), table.dim(w))).collect();
    cofree(&dims, Window::below(p_max))
}

/// Splits a valid comodule into its Chow-Novikov components.
pub fn cn_split(c: &Comodule) -> Result<BTreeMap<i32, Comodule>> {
    c.require_valid()?;
    let mut parts: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for i in 0..c.dim() {
        parts.entry(c.degree(i).chow_novikov()).or_default().push(i);
    }
    Ok(parts.into_iter().map(|(cn, keep)| (cn, c.restrict(&keep))).collect())
}

/// A comodule over the singly graded dual Steenrod algebra, obtained from a
/// Chow-Novikov degree 0 comodule by sending `(2q, q)` to `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeartComodule {
    pub basis: Vec<(String, i32)>,
    pub coaction: Vec<Vec<(MonomialKey, usize)>>,
}

impl HeartComodule {
    /// Degree of a monomial of the singly graded algebra (`ξ_i` has degree `2^i - 1`).
    pub fn monomial_degree(m: &MonomialKey) -> i32 {
        m.bidegree().q
    }

    pub fn to_bigraded(&self) -> Comodule {
        let basis =
            self.basis.iter().map(|(l, q)| BasisElement { label: l.clone(), degree: Bidegree::new(2 * q, *q) }).collect();
        Comodule::from_parts(basis, self.coaction.clone()).expect("heart comodules have distinct labels")
    }
}

pub fn regrade_heart(c: &Comodule) -> Result<HeartComodule> {
    if let Some(b) = c.basis.iter().find(|b| b.degree.chow_novikov() != 0) {
        return Err(Error::NonZeroChowNovikov(b.degree));
    }
    Ok(HeartComodule {
        basis: c.basis.iter().map(|b| (b.label.clone(), b.degree.q)).collect(),
        coaction: c.coaction.clone(),
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn xi(e: &[u32]) -> MonomialKey {
        MonomialKey::from_xi(e)
    }

    fn elem(label: &str, p: i32, q: i32) -> BasisElement {
        BasisElement { label: label.into(), degree: Bidegree::new(p, q) }
    }

    /// `v` at (0,0), `w` at (2,1) with `ψ(w) = 1⊗w + ξ₁⊗v`.
    pub fn vw() -> Comodule {
        Comodule::with_counits(vec![elem("v", 0, 0), elem("w", 2, 1)], vec![vec![], vec![(xi(&[1]), 0)]]).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(Comodule::trivial("x", Bidegree::ZERO).validate().is_empty());
        assert!(vw().validate().is_empty());

        let broken = Comodule::from_parts(vec![elem("v", 0, 0), elem("w", 2, 1)], vec![
            vec![(MonomialKey::one(), 0)],
            vec![(xi(&[1]), 0)],
        ])
        .unwrap();
        let report = broken.validate();
        assert_eq!(report.violations, vec![Violation { element: "w".into(), kind: ViolationKind::Counit }]);
    }

    #[test]
    fn validate_flags_bidegree_and_coassociativity() {
        let bad_degree =
            Comodule::with_counits(vec![elem("v", 0, 0), elem("w", 4, 2)], vec![vec![], vec![(xi(&[1]), 0)]]).unwrap();
        assert!(matches!(bad_degree.validate().violations[0].kind, ViolationKind::Bidegree(..)));

        // ψ(x) = 1⊗x + ξ₁²⊗... needs the intermediate term to be coassociative:
        // v(0,0), w(2,1), x(4,2) with ψ(x) = 1⊗x + ξ₁²⊗v but ψ(w) = 1⊗w + ξ₁⊗v and
        // a spurious ξ₁⊗w term in ψ(x) breaks coassociativity.
        let bad = Comodule::with_counits(vec![elem("v", 0, 0), elem("w", 2, 1), elem("x", 4, 2)], vec![
            vec![],
            vec![(xi(&[1]), 0)],
            vec![(xi(&[1]), 1)],
        ])
        .unwrap();
        assert!(bad.validate().violations.iter().any(|v| v.kind == ViolationKind::Coassociativity));
    }

    #[test]
    fn cofree_examples() {
        let one_cogen: GradedDims = [(Bidegree::ZERO, 1)].into_iter().collect();
        let c = cofree(&one_cogen, Window::below(2)).unwrap();
        let labels: Vec<&str> = c.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, vec!["1*e0", "xi1*e0"]);
        assert!(c.is_valid());

        assert!(cofree(&GradedDims::new(), Window::below(4)).unwrap().is_empty());

        let c = cofree(&one_cogen, Window::below(6)).unwrap();
        assert_eq!(c.dim(), 5);
        assert!(c.is_valid());
        assert_eq!(c.truncation().unwrap().dropped, 0);

        let empty = Window { p_min: 1, p_max: 0, q_min: 0, q_max: 0 };
        assert!(matches!(cofree(&one_cogen, empty), Err(Error::EmptyWindow)));
    }

    #[test]
    fn cofree_lower_truncation_drops_and_stays_valid() {
        let dims: GradedDims = [(Bidegree::ZERO, 1)].into_iter().collect();
        let window = Window { p_min: 2, p_max: 8, q_min: 0, q_max: 10 };
        let c = cofree(&dims, window).unwrap();
        assert!(c.truncation().unwrap().dropped > 0);
        assert!(c.is_valid());
    }

    #[test]
    fn cn_split_examples() {
        let parts = cn_split(&vw()).unwrap();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![0]);

        let c = Comodule::trivial("a", Bidegree::new(5, 2));
        assert_eq!(cn_split(&c).unwrap().keys().copied().collect::<Vec<_>>(), vec![1]);

        let mixed = Comodule::direct_sum(&[
            Comodule::trivial("a", Bidegree::ZERO),
            Comodule::trivial("b", Bidegree::new(1, 0)),
        ])
        .unwrap();
        let parts = cn_split(&mixed).unwrap();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![0, 1]);
        let parts: Vec<Comodule> = parts.into_values().collect();
        assert_eq!(Comodule::direct_sum(&parts).unwrap(), mixed);
    }

    #[test]
    fn heart_regrading() {
        let h = regrade_heart(&Comodule::trivial("a", Bidegree::new(2, 1))).unwrap();
        assert_eq!(h.basis, vec![("a".to_string(), 1)]);

        let h = regrade_heart(&vw()).unwrap();
        assert_eq!(h.basis, vec![("v".to_string(), 0), ("w".to_string(), 1)]);
        assert_eq!(h.coaction[1], vec![(MonomialKey::one(), 1), (xi(&[1]), 0)]);
        assert_eq!(h.to_bigraded(), vw());

        assert!(matches!(
            regrade_heart(&Comodule::trivial("a", Bidegree::new(1, 0))),
            Err(Error::NonZeroChowNovikov(_))
        ));
    }
}
