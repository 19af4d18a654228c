//! Presentations of the dual Steenrod algebras used by the engines.
//!
//! | id   | algebra                                 | generators                                  |
//! |------|-----------------------------------------|---------------------------------------------|
//! | G    | `F₂[ξ₁, ξ₂, …]`                         | `ξ_i` in `(2^{i+1}-2, 2^i-1)`               |
//! | RISO | `Λ(τ₀, τ₁, …) ⊗ F₂[ξ₁, ξ₂, …]`           | `τ_i` in `(2^{i+1}-1, 2^i-1)`               |
//! | HPT  | `Λ(ρ₀, ρ₁, …)`, homology of the point   | `ρ_i` in `(2^{i+1}-1, 2^i-1)`               |
//! | AISO | `HPT ⊗ RISO`                            |                                             |
//!
//! Coproducts are only defined for G and RISO:
//!
//! ```text
//! ψ(ξ_k) = Σ_{i=0}^{k} ξ_{k-i}^{2^i} ⊗ ξ_i
//! ψ(τ_k) = Σ_{i=0}^{k} ξ_{k-i}^{2^i} ⊗ τ_i + τ_k ⊗ 1
//! ```
//!
//! extended multiplicatively. Products on the dual algebras are obtained by
//! transposing `ψ`.

mod gtable;
mod monomial;
mod verify;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

pub use gtable::{g_table, GRef, GTable};
pub use monomial::{tau_bidegree, xi_bidegree, MonomialKey};
pub use verify::{verify_hopf, HopfReport, HopfViolation};

use crate::error::{Error, Result};
use crate::f2linalg::F2Vector;
use crate::grading::Bidegree;
use monomial::Generator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    /// Bigraded dual topological Steenrod algebra.
    G,
    /// Reduced isotropic dual Steenrod algebra.
    Riso,
    /// Homology of the point.
    Hpt,
    /// Full isotropic dual Steenrod algebra, as an algebra.
    Aiso,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 4] = [AlgebraId::G, AlgebraId::Riso, AlgebraId::Hpt, AlgebraId::Aiso];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::G => "G",
            AlgebraId::Riso => "RISO",
            AlgebraId::Hpt => "HPT",
            AlgebraId::Aiso => "AISO",
        }
    }

    fn has_rho(self) -> bool {
        matches!(self, AlgebraId::Hpt | AlgebraId::Aiso)
    }

    fn has_tau(self) -> bool {
        matches!(self, AlgebraId::Riso | AlgebraId::Aiso)
    }

    fn has_xi(self) -> bool {
        !matches!(self, AlgebraId::Hpt)
    }

    /// Whether `m` is a monomial of this algebra.
    pub fn contains(self, m: &MonomialKey) -> bool {
        (self.has_rho() || !m.has_rho()) && (self.has_tau() || !m.has_tau()) && (self.has_xi() || m.xi().is_empty())
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for AlgebraId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        AlgebraId::ALL.into_iter().find(|a| a.name().eq_ignore_ascii_case(s)).ok_or_else(|| format!("unknown algebra {s:?}"))
    }
}

/// An element of a tensor square, as a set of monomial pairs (mod 2).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorSum {
    terms: BTreeSet<(MonomialKey, MonomialKey)>,
}

impl TensorSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(a: MonomialKey, b: MonomialKey) -> Self {
        let mut t = Self::zero();
        t.toggle(a, b);
        t
    }

    pub fn toggle(&mut self, a: MonomialKey, b: MonomialKey) {
        let key = (a, b);
        if !self.terms.remove(&key) {
            self.terms.insert(key);
        }
    }

    pub fn contains(&self, a: &MonomialKey, b: &MonomialKey) -> bool {
        self.terms.contains(&(a.clone(), b.clone()))
    }

    pub fn terms(&self) -> impl Iterator<Item = &(MonomialKey, MonomialKey)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Product in the tensor square of a commutative algebra.
    pub fn mul(&self, other: &TensorSum) -> TensorSum {
        let mut out = TensorSum::zero();
        for (a, b) in &self.terms {
            for (c, d) in &other.terms {
                if let (Some(x), Some(y)) = (a.mul(c), b.mul(d)) {
                    out.toggle(x, y);
                }
            }
        }
        out
    }
}

impl fmt::Debug for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(a, b)| format!("{a}⊗{b}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

type BasisCache = RwLock<HashMap<(AlgebraId, Bidegree), Arc<Vec<MonomialKey>>>>;
type CoproductCache = RwLock<HashMap<(AlgebraId, MonomialKey), Arc<TensorSum>>>;

static BASES: LazyLock<BasisCache> = LazyLock::new(Default::default);
static COPRODUCTS: LazyLock<CoproductCache> = LazyLock::new(Default::default);

/// The monomials of `alg` in bidegree `deg`, in canonical order.
pub fn enumerate_basis(alg: AlgebraId, deg: Bidegree) -> Arc<Vec<MonomialKey>> {
    if let Some(b) = BASES.read().unwrap().get(&(alg, deg)) {
        return Arc::clone(b);
    }
    let basis = Arc::new(enumerate_uncached(alg, deg));
    BASES.write().unwrap().entry((alg, deg)).or_insert(basis).clone()
}

fn enumerate_uncached(alg: AlgebraId, deg: Bidegree) -> Vec<MonomialKey> {
    if deg.p < 0 || deg.q < 0 {
        return Vec::new();
    }
    // Every generator has p >= 1, so only finitely many can occur.
    let mut gens: Vec<(Generator, Bidegree)> = Vec::new();
    for i in 0.. {
        let d = tau_bidegree(i);
        if d.p > deg.p {
            break;
        }
        if alg.has_rho() {
            gens.push((Generator::Rho(i), d));
        }
        if alg.has_tau() {
            gens.push((Generator::Tau(i), d));
        }
    }
    if alg.has_xi() {
        for i in 1.. {
            let d = xi_bidegree(i);
            if d.p > deg.p {
                break;
            }
            gens.push((Generator::Xi(i), d));
        }
    }

    struct State {
        rho: Vec<u8>,
        tau: Vec<u8>,
        xi: Vec<u32>,
    }

    fn go(gens: &[(Generator, Bidegree)], k: usize, rest: Bidegree, st: &mut State, out: &mut Vec<MonomialKey>) {
        if rest.p < 0 || rest.q < 0 {
            return;
        }
        if k == gens.len() {
            if rest == Bidegree::ZERO {
                out.push(MonomialKey::new(st.rho.clone(), st.tau.clone(), st.xi.clone()));
            }
            return;
        }
        let (g, d) = gens[k];
        let max_e = match g {
            Generator::Rho(_) | Generator::Tau(_) => 1,
            Generator::Xi(_) => (rest.p / d.p) as u32,
        };
        for e in 0..=max_e {
            let r = rest - d * e as i32;
            if r.p < 0 || r.q < 0 {
                break;
            }
            match g {
                Generator::Rho(i) => st.rho[i] = e as u8,
                Generator::Tau(i) => st.tau[i] = e as u8,
                Generator::Xi(i) => st.xi[i - 1] = e,
            }
            go(gens, k + 1, r, st, out);
        }
        match g {
            Generator::Rho(i) => st.rho[i] = 0,
            Generator::Tau(i) => st.tau[i] = 0,
            Generator::Xi(i) => st.xi[i - 1] = 0,
        }
    }

    let n = gens.len() + 1;
    let mut st = State { rho: vec![0; n], tau: vec![0; n], xi: vec![0; n] };
    let mut out = Vec::new();
    go(&gens, 0, deg, &mut st, &mut out);
    out.sort();
    out
}

fn generator_coproduct(g: Generator) -> TensorSum {
    let mut out = TensorSum::zero();
    match g {
        Generator::Xi(k) => {
            for i in 0..=k {
                let left = MonomialKey::xi_power(k - i, 1 << i);
                let right = MonomialKey::xi_power(i, 1);
                out.toggle(left, right);
            }
        }
        Generator::Tau(k) => {
            for i in 0..=k {
                out.toggle(MonomialKey::xi_power(k - i, 1 << i), MonomialKey::tau_gen(i));
            }
            out.toggle(MonomialKey::tau_gen(k), MonomialKey::one());
        }
        Generator::Rho(_) => unreachable!("ρ generators have no coaction"),
    }
    out
}

/// `ψ(m)` for a monomial of G or RISO.
pub fn coproduct(alg: AlgebraId, m: &MonomialKey) -> Result<Arc<TensorSum>> {
    match alg {
        AlgebraId::Hpt | AlgebraId::Aiso => {
            return Err(Error::UnsupportedCoaction(format!("algebra {alg}")));
        }
        AlgebraId::G if m.has_tau() => {
            return Err(Error::UnsupportedCoaction(format!("{m} is not a monomial of G")));
        }
        _ => {}
    }
    if m.has_rho() {
        return Err(Error::UnsupportedCoaction(format!("{m} involves ρ generators")));
    }
    Ok(coproduct_cached(alg, m))
}

fn coproduct_cached(alg: AlgebraId, m: &MonomialKey) -> Arc<TensorSum> {
    if let Some(c) = COPRODUCTS.read().unwrap().get(&(alg, m.clone())) {
        return Arc::clone(c);
    }
    let value = match m.split_first() {
        None => TensorSum::single(MonomialKey::one(), MonomialKey::one()),
        Some((g, rest)) => generator_coproduct(g).mul(&coproduct_cached(alg, &rest)),
    };
    let value = Arc::new(value);
    COPRODUCTS.write().unwrap().entry((alg, m.clone())).or_insert(value).clone()
}

/// The product `a∨ · b∨` of dual basis elements, as a vector over
/// `enumerate_basis(alg, deg(a) + deg(b))`.
pub fn dual_product(alg: AlgebraId, a: &MonomialKey, b: &MonomialKey) -> Result<F2Vector> {
    let deg = a.bidegree() + b.bidegree();
    let basis = enumerate_basis(alg, deg);
    let mut out = Vec::new();
    for (i, m) in basis.iter().enumerate() {
        if coproduct(alg, m)?.contains(a, b) {
            out.push(i);
        }
    }
    Ok(F2Vector::from_sorted(out))
}

/// The Milnor operation `Q_j` on the homology of the point, as a vector over
/// `enumerate_basis(Hpt, deg(m) - deg(ρ_j))`.
///
/// `Q_j` is the derivation with `Q_j ρ_i = δ_ij`, so it deletes a `ρ_j`
/// factor when present and kills the monomial otherwise.
pub fn milnor_action(j: usize, m: &MonomialKey) -> F2Vector {
    assert!(AlgebraId::Hpt.contains(m), "{m} is not a monomial of HPT");
    if m.rho().get(j).copied() != Some(1) {
        return F2Vector::zero();
    }
    let mut rho = m.rho().to_vec();
    rho[j] = 0;
    let out = MonomialKey::new(rho, Vec::new(), Vec::new());
    let basis = enumerate_basis(AlgebraId::Hpt, out.bidegree());
    let idx = basis.binary_search(&out).expect("monomial is in its own basis");
    F2Vector::unit(idx)
}
