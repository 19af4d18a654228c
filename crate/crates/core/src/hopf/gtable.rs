//! Index-based views of G used by the engines: monomials addressed by
//! `(weight, position)`, with memoized reduced coproducts and dual products.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use super::{coproduct, enumerate_basis, AlgebraId, MonomialKey};
use crate::f2linalg::F2Vector;
use crate::grading::Bidegree;

/// A G monomial, addressed by its weight `q` (it lives in bidegree `(2q, q)`)
/// and its position in the canonical basis of that weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GRef {
    pub weight: u32,
    pub index: u32,
}

impl GRef {
    pub const ONE: GRef = GRef { weight: 0, index: 0 };

    pub fn bidegree(self) -> Bidegree {
        Bidegree::new(2 * self.weight as i32, self.weight as i32)
    }
}

type PairTable = HashMap<(GRef, GRef), F2Vector>;
type CoproductTable = HashMap<GRef, Arc<Vec<(GRef, GRef)>>>;

#[derive(Default)]
pub struct GTable {
    bases: RwLock<Vec<Arc<Vec<MonomialKey>>>>,
    coproducts: RwLock<CoproductTable>,
    products: RwLock<HashMap<u32, Arc<PairTable>>>,
}

static TABLE: LazyLock<GTable> = LazyLock::new(GTable::default);

pub fn g_table() -> &'static GTable {
    &TABLE
}

impl GTable {
    pub fn basis(&self, weight: u32) -> Arc<Vec<MonomialKey>> {
        if let Some(b) = self.bases.read().unwrap().get(weight as usize) {
            return Arc::clone(b);
        }
        let mut bases = self.bases.write().unwrap();
        while bases.len() <= weight as usize {
            let q = bases.len() as i32;
            bases.push(enumerate_basis(AlgebraId::G, Bidegree::new(2 * q, q)));
        }
        Arc::clone(&bases[weight as usize])
    }

    pub fn dim(&self, weight: u32) -> usize {
        self.basis(weight).len()
    }

    pub fn monomial(&self, r: GRef) -> MonomialKey {
        self.basis(r.weight)[r.index as usize].clone()
    }

    /// Locates a monomial of G; `None` if it involves τ or ρ.
    pub fn lookup(&self, m: &MonomialKey) -> Option<GRef> {
        if !AlgebraId::G.contains(m) {
            return None;
        }
        let weight = m.bidegree().q as u32;
        let index = self.basis(weight).binary_search(m).ok()? as u32;
        Some(GRef { weight, index })
    }

    /// All terms of `ψ(m)`.
    pub fn coproduct(&self, m: GRef) -> Arc<Vec<(GRef, GRef)>> {
        if let Some(c) = self.coproducts.read().unwrap().get(&m) {
            return Arc::clone(c);
        }
        let full = coproduct(AlgebraId::G, &self.monomial(m)).expect("G monomials have a coproduct");
        let mut terms: Vec<(GRef, GRef)> =
            full.terms().map(|(a, b)| (self.lookup(a).unwrap(), self.lookup(b).unwrap())).collect();
        terms.sort();
        let terms = Arc::new(terms);
        self.coproducts.write().unwrap().entry(m).or_insert(terms).clone()
    }

    /// Terms of the reduced coproduct: both factors of positive weight.
    pub fn reduced_coproduct(&self, m: GRef) -> Vec<(GRef, GRef)> {
        self.coproduct(m).iter().copied().filter(|(a, b)| a.weight > 0 && b.weight > 0).collect()
    }

    fn product_table(&self, weight: u32) -> Arc<PairTable> {
        if let Some(t) = self.products.read().unwrap().get(&weight) {
            return Arc::clone(t);
        }
        let mut table: PairTable = HashMap::new();
        for index in 0..self.dim(weight) as u32 {
            for &pair in self.coproduct(GRef { weight, index }).iter() {
                table.entry(pair).or_default().toggle(index as usize);
            }
        }
        let table = Arc::new(table);
        self.products.write().unwrap().entry(weight).or_insert(table).clone()
    }

    /// `a∨ · b∨` as a vector over the basis of weight `a.weight + b.weight`.
    pub fn product(&self, a: GRef, b: GRef) -> F2Vector {
        self.product_table(a.weight + b.weight).get(&(a, b)).cloned().unwrap_or_default()
    }
}
