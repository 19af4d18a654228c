//! Composition series and extensions by one-dimensional comodules.
//!
//! Over the connected coalgebra G every non-zero finite comodule has a
//! non-zero primitive. Taking the primitives of `c`, then the primitives of
//! the quotient, and so on, gives a flag whose layers are one-dimensional
//! trivial comodules. Each layer is attached to the previous ones by a
//! 1-cocycle in `Ḡ ⊗ M_{i-1}`, which is exactly the data consumed by
//! [`extension_from_cocycle`].

use std::collections::{BTreeSet, HashMap};

use super::{BasisElement, Comodule};
use crate::error::{Error, Result};
use crate::f2linalg::{kernel_basis, preimage, Echelon, F2Matrix, F2Vector};
use crate::grading::Bidegree;
use crate::hopf::{g_table, GRef, MonomialKey};

/// A 1-cocycle: terms `m ⊗ w` with `m` of positive degree and `w` a basis
/// index of the comodule being extended. Sorted, without repeats.
pub type Cocycle = Vec<(MonomialKey, usize)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    pub degree: Bidegree,
    /// The lift of the layer generator, in the basis of the input comodule.
    pub vector: F2Vector,
    pub label: String,
    /// `ψ(x) - 1 ⊗ x` in terms of earlier layers (indices into `layers`).
    pub cocycle: Vec<(MonomialKey, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompositionSeries {
    pub layers: Vec<Layer>,
}

impl CompositionSeries {
    pub fn degrees(&self) -> Vec<Bidegree> {
        self.layers.iter().map(|l| l.degree).collect()
    }
}

fn vector_label(c: &Comodule, v: &F2Vector) -> String {
    v.iter().map(|i| c.label(i)).collect::<Vec<_>>().join("+")
}

/// The socle series of a valid comodule, one layer per basis vector of each
/// successive socle, in canonical bidegree order.
pub fn composition_series(c: &Comodule) -> Result<CompositionSeries> {
    c.require_valid()?;
    let mut span = Echelon::new(c.dim());
    let mut layers: Vec<Layer> = Vec::new();
    let degrees: Vec<Bidegree> = c.degrees().into_iter().collect();

    while layers.len() < c.dim() {
        let mut found = Vec::new();
        for &d in &degrees {
            let local = c.indices_in(d);
            // Image of each basis vector under the reduced coaction, taken
            // modulo the span of the layers found in earlier rounds.
            let mut keys: HashMap<(GRef, usize), usize> = HashMap::new();
            let mut columns = Vec::with_capacity(local.len());
            for &i in &local {
                let mut col = Vec::new();
                for (m, target) in c.coact_vector(&F2Vector::unit(i), true) {
                    for w in span.reduce(&target).iter() {
                        let n = keys.len();
                        col.push(*keys.entry((m, w)).or_insert(n));
                    }
                }
                columns.push(F2Vector::from_indices(col));
            }
            let map = F2Matrix::from_columns(keys.len(), &columns);
            let mut round = span.clone();
            for k in kernel_basis(&map) {
                let v = k.map_indices(|j| local[j]);
                if let Some(reduced) = round.insert(v) {
                    found.push((d, reduced));
                }
            }
        }
        if found.is_empty() {
            return Err(Error::InvalidComodule("no primitives in a non-zero quotient".into()));
        }
        for (d, v) in found {
            span.insert(v.clone());
            let cocycle = express_cocycle(c, &layers, &v)?;
            layers.push(Layer { degree: d, label: vector_label(c, &v), vector: v, cocycle });
        }
    }
    Ok(CompositionSeries { layers })
}

fn express_cocycle(c: &Comodule, layers: &[Layer], v: &F2Vector) -> Result<Vec<(MonomialKey, usize)>> {
    let table = g_table();
    let mut out = Vec::new();
    for (m, target) in c.coact_vector(v, true) {
        let d = c.degree(target.leading().unwrap());
        let candidates: Vec<usize> = (0..layers.len()).filter(|&k| layers[k].degree == d).collect();
        let columns: Vec<F2Vector> = candidates.iter().map(|&k| layers[k].vector.clone()).collect();
        let solution = preimage(&F2Matrix::from_columns(c.dim(), &columns), &target)
            .ok_or_else(|| Error::InvalidComodule("reduced coaction leaves the flag".into()))?;
        out.extend(solution.iter().map(|j| (table.monomial(m), candidates[j])));
    }
    out.sort();
    Ok(out)
}

/// Rebuilds a comodule from its composition series by successive extensions.
pub fn reassemble(series: &CompositionSeries) -> Result<Comodule> {
    let mut c = Comodule::zero();
    for layer in &series.layers {
        let z: Cocycle = layer
            .cocycle
            .iter()
            .map(|(m, k)| (m.clone(), c.index_of(&series.layers[*k].label).expect("earlier layer")))
            .collect();
        c = extension_from_cocycle(&c, layer.degree, &z, &layer.label)?;
    }
    Ok(c)
}

type Triple = (GRef, GRef, usize);

/// The cobar coboundary of `z ∈ Ḡ ⊗ c`, as a set of terms `a ⊗ b ⊗ w`.
fn coboundary(c: &Comodule, z: &[(GRef, usize)]) -> BTreeSet<Triple> {
    let table = g_table();
    let mut out = BTreeSet::new();
    let mut toggle = |t: Triple| {
        if !out.remove(&t) {
            out.insert(t);
        }
    };
    for &(m, w) in z {
        for (a, b) in table.reduced_coproduct(m) {
            toggle((a, b, w));
        }
        for (m2, w2) in c.reduced_coaction(w) {
            toggle((m, table.lookup(m2).expect("valid comodule"), *w2));
        }
    }
    out
}

/// Extends `c` by `Σ^{shift} F₂`: the new element `e` has
/// `ψ(e) = 1 ⊗ e + z`.
pub fn extension_from_cocycle(c: &Comodule, shift: Bidegree, z: &[(MonomialKey, usize)], label: &str) -> Result<Comodule> {
    c.require_valid()?;
    let table = g_table();
    let mut terms = Vec::with_capacity(z.len());
    for (m, w) in z {
        let r = table.lookup(m).ok_or_else(|| Error::NotACocycle(format!("{m} is not a monomial of G")))?;
        if r.weight == 0 {
            return Err(Error::NotACocycle("cocycle has a unit term".into()));
        }
        if *w >= c.dim() {
            return Err(Error::NotACocycle(format!("target {w} out of range")));
        }
        if m.bidegree() + c.degree(*w) != shift {
            return Err(Error::NotACocycle(format!("term {m} ⊗ {} has the wrong bidegree", c.label(*w))));
        }
        terms.push((r, *w));
    }
    if !coboundary(c, &terms).is_empty() {
        return Err(Error::NotACocycle("coboundary is non-zero".into()));
    }
    if c.index_of(label).is_some() {
        return Err(Error::InvalidComodule(format!("label {label} already in use")));
    }
    let mut basis: Vec<BasisElement> = c.basis().to_vec();
    let mut coaction: Vec<Vec<(MonomialKey, usize)>> = (0..c.dim()).map(|i| c.coaction(i).to_vec()).collect();
    let e = basis.len();
    basis.push(BasisElement { label: label.into(), degree: shift });
    let mut psi: Vec<(MonomialKey, usize)> = z.to_vec();
    psi.push((MonomialKey::one(), e));
    coaction.push(psi);
    Comodule::from_parts(basis, coaction)
}

/// A basis of the 1-cocycles `z ∈ Ḡ ⊗ c` of total bidegree `shift`, i.e. of
/// the possible extensions of `c` by `Σ^{shift} F₂`.
pub fn extension_cocycles(c: &Comodule, shift: Bidegree) -> Result<Vec<Cocycle>> {
    c.require_valid()?;
    let table = g_table();
    let mut cells = Vec::new();
    for w in 0..c.dim() {
        let rest = shift - c.degree(w);
        if rest.q <= 0 || rest.p != 2 * rest.q {
            continue;
        }
        let weight = rest.q as u32;
        for index in 0..table.dim(weight) as u32 {
            cells.push((GRef { weight, index }, w));
        }
    }
    let mut keys: HashMap<Triple, usize> = HashMap::new();
    let columns: Vec<F2Vector> = cells
        .iter()
        .map(|&cell| {
            coboundary(c, &[cell])
                .into_iter()
                .map(|t| {
                    let n = keys.len();
                    *keys.entry(t).or_insert(n)
                })
                .collect()
        })
        .collect();
    let d = F2Matrix::from_columns(keys.len(), &columns);
    Ok(kernel_basis(&d)
        .into_iter()
        .map(|k| {
            let mut z: Cocycle = k.iter().map(|j| (table.monomial(cells[j].0), cells[j].1)).collect();
            z.sort();
            z
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::tests::{vw, xi};
    use crate::comodule::{cofree, find_isomorphism, GradedDims, Window};

    #[test]
    fn series_of_trivial_sum() {
        let c = Comodule::direct_sum(&[
            Comodule::trivial("a", Bidegree::ZERO),
            Comodule::trivial("b", Bidegree::new(2, 1)),
        ])
        .unwrap();
        let s = composition_series(&c).unwrap();
        assert_eq!(s.degrees(), vec![Bidegree::ZERO, Bidegree::new(2, 1)]);
        assert!(s.layers.iter().all(|l| l.cocycle.is_empty()));
    }

    #[test]
    fn series_of_vw() {
        let s = composition_series(&vw()).unwrap();
        assert_eq!(s.degrees(), vec![Bidegree::ZERO, Bidegree::new(2, 1)]);
        assert_eq!(s.layers[0].label, "v");
        assert_eq!(s.layers[1].label, "w");
        assert_eq!(s.layers[1].cocycle, vec![(xi(&[1]), 0)]);
        assert_eq!(reassemble(&s).unwrap(), vw());
    }

    #[test]
    fn series_of_cofree_truncation() {
        let dims: GradedDims = [(Bidegree::ZERO, 1)].into_iter().collect();
        let c = cofree(&dims, Window::below(2)).unwrap();
        let s = composition_series(&c).unwrap();
        assert_eq!(s.degrees(), vec![Bidegree::ZERO, Bidegree::new(2, 1)]);
    }

    #[test]
    fn series_of_larger_cofree_reassembles() {
        let dims: GradedDims = [(Bidegree::ZERO, 1)].into_iter().collect();
        let c = cofree(&dims, Window::below(8)).unwrap();
        let s = composition_series(&c).unwrap();
        assert_eq!(s.layers.len(), c.dim());
        let rebuilt = reassemble(&s).unwrap();
        assert!(find_isomorphism(&c, &rebuilt).unwrap().is_some());
    }

    #[test]
    fn extension_examples() {
        let f = Comodule::trivial("v", Bidegree::ZERO);
        let c = extension_from_cocycle(&f, Bidegree::new(2, 1), &[(xi(&[1]), 0)], "w").unwrap();
        assert_eq!(c, vw());

        let split = extension_from_cocycle(&f, Bidegree::new(2, 1), &[], "w").unwrap();
        let expected = Comodule::direct_sum(&[f.clone(), Comodule::trivial("w", Bidegree::new(2, 1))]).unwrap();
        assert_eq!(split, expected);

        let h1 = extension_from_cocycle(&f, Bidegree::new(4, 2), &[(xi(&[2]), 0)], "x").unwrap();
        assert!(h1.is_valid());
    }

    #[test]
    fn extension_rejects_non_cocycles() {
        // ξ₁³ is not primitive: its coboundary is ξ₁²⊗ξ₁ + ξ₁⊗ξ₁².
        let f = Comodule::trivial("v", Bidegree::ZERO);
        assert!(matches!(
            extension_from_cocycle(&f, Bidegree::new(6, 3), &[(xi(&[3]), 0)], "x"),
            Err(Error::NotACocycle(_))
        ));
        assert!(matches!(
            extension_from_cocycle(&f, Bidegree::new(4, 2), &[(xi(&[1]), 0)], "x"),
            Err(Error::NotACocycle(_))
        ));
    }

    #[test]
    fn cocycles_of_the_unit_are_primitives() {
        let f = Comodule::trivial("v", Bidegree::ZERO);
        for q in 1..12 {
            let z = extension_cocycles(&f, Bidegree::new(2 * q, q)).unwrap();
            // primitives of G are exactly ξ₁^{2^k}
            let expected = usize::from((q as u32).is_power_of_two());
            assert_eq!(z.len(), expected, "weight {q}");
        }
    }

    #[test]
    fn cohomologous_cocycles_give_isomorphic_extensions() {
        // The coboundary of the 0-cochain picking out w is ξ₁ ⊗ v, so 0 and
        // ξ₁ ⊗ v are cohomologous cocycles of bidegree (2,1).
        let c = vw();
        let shift = Bidegree::new(2, 1);
        let v = c.index_of("v").unwrap();
        let a = extension_from_cocycle(&c, shift, &[], "x").unwrap();
        let b = extension_from_cocycle(&c, shift, &[(xi(&[1]), v)], "x").unwrap();
        assert!(find_isomorphism(&a, &b).unwrap().is_some());
    }
}
