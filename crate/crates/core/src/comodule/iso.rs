//! Brute-force comodule morphisms.
//!
//! A degree-preserving linear map `f: a -> b` is a comodule map iff for every
//! basis element `v` of `a`
//!
//! ```text
//! ψ_b(f v) - 1 ⊗ f v = Σ_{m ⊗ w ∈ ψ_a(v), m ≠ 1} m ⊗ f w
//! ```
//!
//! Every `w` on the right sits in strictly lower degree than `v`, so the
//! columns of `f` can be chosen one at a time in canonical basis order and
//! each choice checked immediately. The search enumerates candidate columns
//! exhaustively; it is exponential and meant for small inputs only.

use std::collections::BTreeMap;

use super::Comodule;
use crate::error::{Error, Result};
use crate::f2linalg::{Echelon, F2Vector};
use crate::hopf::{g_table, GRef};

/// Column `i` is the image of basis element `i` of the source, in the basis
/// of the target.
pub type Morphism = Vec<F2Vector>;

/// Upper bound on search nodes before giving up.
const NODE_LIMIT: u64 = 1 << 24;

struct Search<'a> {
    a: &'a Comodule,
    b: &'a Comodule,
    /// Indices of `b` in the bidegree of each basis element of `a`.
    targets: Vec<Vec<usize>>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(a: &'a Comodule, b: &'a Comodule) -> Self {
        let targets = (0..a.dim()).map(|i| b.indices_in(a.degree(i))).collect();
        Self { a, b, targets, nodes: 0 }
    }

    fn candidates(&self, i: usize) -> impl Iterator<Item = F2Vector> + '_ {
        let local = &self.targets[i];
        (0u64..1 << local.len()).map(move |bits| {
            F2Vector::from_sorted((0..local.len()).filter(|k| bits >> k & 1 == 1).map(|k| local[k]).collect())
        })
    }

    fn column_ok(&self, f: &[F2Vector], i: usize, col: &F2Vector) -> bool {
        let table = g_table();
        let lhs = self.b.coact_vector(col, true);
        let mut rhs: BTreeMap<GRef, F2Vector> = BTreeMap::new();
        for (m, w) in self.a.reduced_coaction(i) {
            let m = table.lookup(m).expect("valid comodule");
            rhs.entry(m).or_default().add_assign(&f[*w]);
        }
        rhs.retain(|_, v| !v.is_zero());
        lhs == rhs
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return Err(Error::InvalidComodule("brute-force search exceeded its node limit".into()));
        }
        Ok(())
    }

    fn count(&mut self, f: &mut Vec<F2Vector>) -> Result<u64> {
        self.tick()?;
        let i = f.len();
        if i == self.a.dim() {
            return Ok(1);
        }
        let mut total = 0;
        let candidates: Vec<F2Vector> = self.candidates(i).collect();
        for col in candidates {
            if self.column_ok(f, i, &col) {
                f.push(col);
                total += self.count(f)?;
                f.pop();
            }
        }
        Ok(total)
    }

    fn find_iso(&mut self, f: &mut Vec<F2Vector>) -> Result<bool> {
        self.tick()?;
        let i = f.len();
        if i == self.a.dim() {
            return Ok(true);
        }
        let candidates: Vec<F2Vector> = self.candidates(i).collect();
        for col in candidates {
            if col.is_zero() || !self.column_ok(f, i, &col) {
                continue;
            }
            // columns in the same bidegree must stay independent
            let d = self.a.degree(i);
            let mut ech = Echelon::new(self.b.dim());
            for (k, prev) in f.iter().enumerate() {
                if self.a.degree(k) == d {
                    ech.insert(prev.clone());
                }
            }
            if ech.contains(&col) {
                continue;
            }
            f.push(col);
            if self.find_iso(f)? {
                return Ok(true);
            }
            f.pop();
        }
        Ok(false)
    }
}

/// The number of degree-preserving comodule maps `a -> b`, by exhaustive
/// enumeration of linear maps.
pub fn count_morphisms(a: &Comodule, b: &Comodule) -> Result<u64> {
    a.require_valid()?;
    b.require_valid()?;
    Search::new(a, b).count(&mut Vec::new())
}

/// Searches for a degree-preserving comodule isomorphism `a -> b`.
pub fn find_isomorphism(a: &Comodule, b: &Comodule) -> Result<Option<Morphism>> {
    a.require_valid()?;
    b.require_valid()?;
    if a.dims() != b.dims() {
        return Ok(None);
    }
    let mut f = Vec::new();
    Ok(Search::new(a, b).find_iso(&mut f)?.then_some(f))
}

/// `log₂` of [`count_morphisms`], i.e. the dimension of the space of maps.
pub fn morphism_space_dim(a: &Comodule, b: &Comodule) -> Result<u32> {
    let n = count_morphisms(a, b)?;
    debug_assert!(n.is_power_of_two());
    Ok(n.trailing_zeros())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::tests::vw;
    use crate::grading::Bidegree;

    #[test]
    fn morphisms_between_small_comodules() {
        let f = Comodule::trivial("x", Bidegree::ZERO);
        assert_eq!(count_morphisms(&f, &f).unwrap(), 2);
        // F₂ -> vw: v is the only primitive in degree (0,0)
        assert_eq!(count_morphisms(&f, &vw()).unwrap(), 2);
        // vw -> F₂: v must map to zero
        assert_eq!(count_morphisms(&vw(), &f).unwrap(), 1);
        assert_eq!(count_morphisms(&vw(), &vw()).unwrap(), 2);
    }

    #[test]
    fn isomorphism_detection() {
        let split = Comodule::direct_sum(&[
            Comodule::trivial("v", Bidegree::ZERO),
            Comodule::trivial("w", Bidegree::new(2, 1)),
        ])
        .unwrap();
        assert!(find_isomorphism(&vw(), &vw()).unwrap().is_some());
        assert!(find_isomorphism(&vw(), &split).unwrap().is_none());
        let relabeled = vw().relabeled(|l| format!("{l}'")).unwrap();
        assert!(find_isomorphism(&vw(), &relabeled).unwrap().is_some());
    }
}
