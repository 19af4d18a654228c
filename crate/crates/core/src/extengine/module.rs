//! Left modules over the dual of G, the input to minimal resolutions.
//!
//! The dual monomial `a∨` of weight `k` acts with bidegree `(2k, k)`. Each
//! source exposes its basis degree by degree and the action of single dual
//! monomials on single basis elements.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use sha2::{Digest, Sha256};

use super::check_padding;
use crate::comodule::{write_comodule, Comodule};
use crate::error::{Error, Result};
use crate::f2linalg::{Echelon, F2Vector};
use crate::grading::Bidegree;
use crate::hopf::{g_table, GRef, MonomialKey};

pub trait ModuleSource: Send + Sync {
    fn dim(&self, d: Bidegree) -> usize;

    /// Weights `u` with a non-zero part in degree `(t, u)`, ascending.
    fn weights_at(&self, t: i32) -> Vec<i32>;

    /// The lowest topological degree with a non-zero part.
    fn min_t(&self) -> Option<i32>;

    /// `a∨ · e_i` for the `i`-th basis element in degree `d`, over the basis
    /// in degree `d + deg a`.
    fn act(&self, a: GRef, d: Bidegree, i: usize) -> F2Vector;

    fn label(&self, d: Bidegree, i: usize) -> String;

    /// Locates a basis element by label.
    fn find(&self, label: &str) -> Option<(Bidegree, usize)>;

    /// Canonical text identifying the module, hashed into checkpoints.
    fn description(&self) -> String;

    /// Checks that a resolution through internal degree `max_t` (and weights
    /// up to `max_u`) is exact.
    fn check_range(&self, _max_t: i32, _max_u: Option<i32>) -> Result<()> {
        Ok(())
    }

    fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.description().as_bytes()))
    }
}

/// The dual `M∨` of a finite comodule, with `(a∨ · v∨)(w) = ⟨a, m⟩` summed
/// over the terms `m ⊗ v` of `ψ(w)`.
pub struct DualComodule {
    comodule: Comodule,
    /// `(a, v) -> [w]` over all coaction terms `a ⊗ v ∈ ψ(w)`.
    inverse: HashMap<(GRef, usize), Vec<usize>>,
    degrees: BTreeMap<Bidegree, Vec<usize>>,
}

impl DualComodule {
    /// # Errors
    ///
    /// `InvalidComodule` if `c` fails validation.
    pub fn new(c: Comodule) -> Result<Self> {
        c.require_valid()?;
        let table = g_table();
        let mut inverse: HashMap<(GRef, usize), Vec<usize>> = HashMap::new();
        for w in 0..c.dim() {
            for (m, v) in c.coaction(w) {
                let a = table.lookup(m).expect("valid comodule");
                inverse.entry((a, *v)).or_default().push(w);
            }
        }
        let mut degrees: BTreeMap<Bidegree, Vec<usize>> = BTreeMap::new();
        for i in 0..c.dim() {
            degrees.entry(c.degree(i)).or_default().push(i);
        }
        Ok(Self { comodule: c, inverse, degrees })
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }
}

impl ModuleSource for DualComodule {
    fn dim(&self, d: Bidegree) -> usize {
        self.degrees.get(&d).map_or(0, Vec::len)
    }

    fn weights_at(&self, t: i32) -> Vec<i32> {
        self.degrees.keys().filter(|d| d.p == t).map(|d| d.q).collect()
    }

    fn min_t(&self) -> Option<i32> {
        self.degrees.keys().map(|d| d.p).min()
    }

    fn act(&self, a: GRef, d: Bidegree, i: usize) -> F2Vector {
        let v = self.degrees[&d][i];
        let target = d + a.bidegree();
        let Some(ws) = self.inverse.get(&(a, v)) else { return F2Vector::zero() };
        let local = &self.degrees[&target];
        F2Vector::from_indices(ws.iter().map(|w| local.binary_search(w).expect("coaction is homogeneous")))
    }

    fn label(&self, d: Bidegree, i: usize) -> String {
        self.comodule.label(self.degrees[&d][i]).to_string()
    }

    fn find(&self, label: &str) -> Option<(Bidegree, usize)> {
        let g = self.comodule.index_of(label)?;
        let d = self.comodule.degree(g);
        Some((d, self.degrees[&d].binary_search(&g).ok()?))
    }

    fn description(&self) -> String {
        let mut s = String::from("dual-comodule\n");
        if let Some(tr) = self.comodule.truncation() {
            let w = tr.window;
            let _ = writeln!(s, "window {} {} {} {} {}", w.p_min, w.p_max, w.q_min, w.q_max, tr.dropped);
        }
        s + &write_comodule(&self.comodule)
    }

    fn check_range(&self, max_t: i32, max_u: Option<i32>) -> Result<()> {
        check_padding(&Comodule::trivial("1", Bidegree::ZERO), &self.comodule, max_t, max_u)
    }
}

/// A free module on generators in given bidegrees. The basis in degree `d`
/// is `a∨ · g` over generators `g` (in order) and monomials `a` of weight `k`
/// with `d = deg g + (2k, k)`.
#[derive(Clone, Debug)]
pub struct FreeModule {
    generators: Vec<(String, Bidegree)>,
}

impl FreeModule {
    /// # Errors
    ///
    /// `PresentationInconsistent` on duplicate generator labels.
    pub fn new(generators: Vec<(String, Bidegree)>) -> Result<Self> {
        let labels: BTreeSet<&str> = generators.iter().map(|(l, _)| l.as_str()).collect();
        if labels.len() != generators.len() {
            return Err(Error::PresentationInconsistent("duplicate generator label".into()));
        }
        if let Some((l, _)) = generators.iter().find(|(l, _)| l.is_empty() || l.contains(char::is_whitespace)) {
            return Err(Error::PresentationInconsistent(format!("bad generator label {l:?}")));
        }
        Ok(Self { generators })
    }

    pub fn generators(&self) -> &[(String, Bidegree)] {
        &self.generators
    }

    fn weight_over(&self, g: usize, d: Bidegree) -> Option<u32> {
        let diff = d - self.generators[g].1;
        (diff.p == 2 * diff.q && diff.q >= 0).then_some(diff.q as u32)
    }

    /// Offsets of each generator's block in degree `d`, plus the total.
    fn layout(&self, d: Bidegree) -> (Vec<Option<(usize, u32)>>, usize) {
        let table = g_table();
        let mut offset = 0;
        let blocks = (0..self.generators.len())
            .map(|g| {
                let w = self.weight_over(g, d)?;
                let start = offset;
                offset += table.dim(w);
                Some((start, w))
            })
            .collect();
        (blocks, offset)
    }

    /// Splits a basis index in degree `d` into `(generator, monomial)`.
    pub fn decode(&self, d: Bidegree, i: usize) -> (usize, GRef) {
        let (blocks, _) = self.layout(d);
        let (g, (start, weight)) = blocks
            .iter()
            .enumerate()
            .filter_map(|(g, b)| b.map(|b| (g, b)))
            .take_while(|(_, (start, _))| *start <= i)
            .last()
            .expect("index in range");
        (g, GRef { weight, index: (i - start) as u32 })
    }

    pub fn encode(&self, d: Bidegree, g: usize, m: GRef) -> usize {
        let (blocks, _) = self.layout(d);
        blocks[g].expect("monomial fits degree").0 + m.index as usize
    }
}

impl ModuleSource for FreeModule {
    fn dim(&self, d: Bidegree) -> usize {
        self.layout(d).1
    }

    fn weights_at(&self, t: i32) -> Vec<i32> {
        let set: BTreeSet<i32> = self
            .generators
            .iter()
            .filter(|(_, d)| t >= d.p && (t - d.p) % 2 == 0)
            .map(|(_, d)| d.q + (t - d.p) / 2)
            .collect();
        set.into_iter().collect()
    }

    fn min_t(&self) -> Option<i32> {
        self.generators.iter().map(|(_, d)| d.p).min()
    }

    fn act(&self, a: GRef, d: Bidegree, i: usize) -> F2Vector {
        let (g, m) = self.decode(d, i);
        let target = d + a.bidegree();
        let weight = a.weight + m.weight;
        let offset = self.encode(target, g, GRef { weight, index: 0 });
        g_table().product(a, m).map_indices(|k| offset + k)
    }

    fn label(&self, d: Bidegree, i: usize) -> String {
        let (g, m) = self.decode(d, i);
        let name = &self.generators[g].0;
        if m == GRef::ONE {
            name.clone()
        } else {
            format!("{}*{name}", g_table().monomial(m).ascii())
        }
    }

    fn find(&self, label: &str) -> Option<(Bidegree, usize)> {
        let (mono, name) = match label.split_once('*') {
            Some((m, n)) => (MonomialKey::parse_ascii(m)?, n),
            None => (MonomialKey::one(), label),
        };
        let g = self.generators.iter().position(|(l, _)| l == name)?;
        let m = g_table().lookup(&mono)?;
        let d = self.generators[g].1 + m.bidegree();
        Some((d, self.encode(d, g, m)))
    }

    fn description(&self) -> String {
        let mut s = String::from("free\n");
        for (l, d) in &self.generators {
            let _ = writeln!(s, "gen {l} {} {}", d.p, d.q);
        }
        s
    }
}

/// A relation: a sum of terms `a∨ · g` over monomials `a` and generator
/// labels `g`, homogeneous of one bidegree.
pub type Relation = Vec<(MonomialKey, String)>;

struct Quotient {
    relations: Echelon,
    /// Free-basis indices that are not pivots, in order: the quotient basis.
    survivors: Vec<usize>,
}

/// The quotient of a free module by the submodule generated by relations.
pub struct FinitePresentation {
    free: FreeModule,
    relations: Vec<(Bidegree, F2Vector)>,
    text: Vec<String>,
    cache: RwLock<HashMap<Bidegree, Arc<Quotient>>>,
}

impl FinitePresentation {
    /// # Errors
    ///
    /// `PresentationInconsistent` if a relation names an unknown generator,
    /// uses a monomial outside G, or is not homogeneous.
    pub fn new(generators: Vec<(String, Bidegree)>, relations: Vec<Relation>) -> Result<Self> {
        let free = FreeModule::new(generators)?;
        let table = g_table();
        let mut rels = Vec::new();
        let mut text = Vec::new();
        for (k, rel) in relations.iter().enumerate() {
            let mut degree = None;
            let mut v = F2Vector::zero();
            for (m, g) in rel {
                let gi = free
                    .generators
                    .iter()
                    .position(|(l, _)| l == g)
                    .ok_or_else(|| Error::PresentationInconsistent(format!("relation {k}: unknown generator {g}")))?;
                let r = table
                    .lookup(m)
                    .ok_or_else(|| Error::PresentationInconsistent(format!("relation {k}: {m} is not in G")))?;
                let d = free.generators[gi].1 + r.bidegree();
                if *degree.get_or_insert(d) != d {
                    return Err(Error::PresentationInconsistent(format!("relation {k} is not homogeneous")));
                }
                v.toggle(free.encode(d, gi, r));
            }
            if let Some(d) = degree {
                if !v.is_zero() {
                    let mut terms: Vec<String> = rel.iter().map(|(m, g)| format!("{}:{g}", m.xi_exponent_string())).collect();
                    terms.sort();
                    text.push(format!("rel {} {} {}", d.p, d.q, terms.join("+")));
                    rels.push((d, v));
                }
            }
        }
        text.sort();
        Ok(Self { free, relations: rels, text, cache: RwLock::new(HashMap::new()) })
    }

    fn quotient(&self, d: Bidegree) -> Arc<Quotient> {
        if let Some(q) = self.cache.read().unwrap().get(&d) {
            return Arc::clone(q);
        }
        let table = g_table();
        let n = self.free.dim(d);
        let mut ech = Echelon::new(n);
        for (rd, rel) in &self.relations {
            let diff = d - *rd;
            if diff.p != 2 * diff.q || diff.q < 0 {
                continue;
            }
            let w = diff.q as u32;
            for index in 0..table.dim(w) as u32 {
                let a = GRef { weight: w, index };
                let mut image = F2Vector::zero();
                for i in rel.iter() {
                    image.add_assign(&self.free.act(a, *rd, i));
                }
                ech.insert(image);
            }
        }
        let pivots: BTreeSet<usize> = ech.pivots().into_iter().collect();
        let survivors = (0..n).filter(|i| !pivots.contains(i)).collect();
        let q = Arc::new(Quotient { relations: ech, survivors });
        self.cache.write().unwrap().entry(d).or_insert(q).clone()
    }
}

impl ModuleSource for FinitePresentation {
    fn dim(&self, d: Bidegree) -> usize {
        self.quotient(d).survivors.len()
    }

    fn weights_at(&self, t: i32) -> Vec<i32> {
        self.free.weights_at(t).into_iter().filter(|&u| self.dim(Bidegree::new(t, u)) > 0).collect()
    }

    fn min_t(&self) -> Option<i32> {
        self.free.min_t()
    }

    fn act(&self, a: GRef, d: Bidegree, i: usize) -> F2Vector {
        let free_index = self.quotient(d).survivors[i];
        let target = d + a.bidegree();
        let q = self.quotient(target);
        let reduced = q.relations.reduce(&self.free.act(a, d, free_index));
        F2Vector::from_sorted(reduced.iter().map(|k| q.survivors.binary_search(&k).expect("reduced")).collect())
    }

    fn label(&self, d: Bidegree, i: usize) -> String {
        self.free.label(d, self.quotient(d).survivors[i])
    }

    fn find(&self, label: &str) -> Option<(Bidegree, usize)> {
        let (d, i) = self.free.find(label)?;
        Some((d, self.quotient(d).survivors.binary_search(&i).ok()?))
    }

    fn description(&self) -> String {
        let mut s = self.free.description().replacen("free", "presented", 1);
        for line in &self.text {
            s.push_str(line);
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::tests::{vw, xi};

    #[test]
    fn dual_of_vw() {
        let m = DualComodule::new(vw()).unwrap();
        let xi1 = g_table().lookup(&xi(&[1])).unwrap();
        // ξ₁∨ · v∨ = w∨
        assert_eq!(m.act(xi1, Bidegree::ZERO, 0), F2Vector::unit(0));
        assert!(m.act(xi1, Bidegree::new(2, 1), 0).is_zero());
        assert_eq!(m.act(GRef::ONE, Bidegree::ZERO, 0), F2Vector::unit(0));
        assert_eq!(m.label(Bidegree::new(2, 1), 0), "w");
    }

    #[test]
    fn free_module_layout() {
        let f = FreeModule::new(vec![("a".into(), Bidegree::ZERO), ("b".into(), Bidegree::new(2, 1))]).unwrap();
        assert_eq!(f.dim(Bidegree::ZERO), 1);
        assert_eq!(f.dim(Bidegree::new(2, 1)), 2);
        assert_eq!(f.dim(Bidegree::new(6, 3)), g_table().dim(3) + g_table().dim(2));
        assert_eq!(f.label(Bidegree::new(2, 1), 1), "b");
        assert_eq!(f.find("xi1*a"), Some((Bidegree::new(2, 1), 0)));
        assert_eq!(f.weights_at(4), vec![2]);
    }

    #[test]
    fn presentation_of_f2() {
        // F₂ = A / A·(positive-weight part), generated in weights 1, 2, 4, …
        let rels = [&[1u32][..], &[2], &[4], &[8]].iter().map(|e| vec![(xi(e), "x".to_string())]).collect();
        let p = FinitePresentation::new(vec![("x".into(), Bidegree::ZERO)], rels).unwrap();
        for q in 1..12 {
            assert_eq!(p.dim(Bidegree::new(2 * q, q)), 0, "weight {q}");
        }
        assert_eq!(p.dim(Bidegree::ZERO), 1);
    }

    #[test]
    fn inconsistent_presentations() {
        let gens = vec![("x".to_string(), Bidegree::ZERO), ("y".to_string(), Bidegree::new(4, 2))];
        let bad = vec![vec![(xi(&[1]), "z".to_string())]];
        assert!(matches!(FinitePresentation::new(gens.clone(), bad), Err(Error::PresentationInconsistent(_))));
        let inhomogeneous = vec![vec![(xi(&[1]), "x".to_string()), (xi(&[1]), "y".to_string())]];
        assert!(matches!(FinitePresentation::new(gens, inhomogeneous), Err(Error::PresentationInconsistent(_))));
    }
}
