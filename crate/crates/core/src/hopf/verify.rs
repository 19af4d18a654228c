use std::collections::BTreeSet;
use std::fmt;

use super::{coproduct, enumerate_basis, AlgebraId, MonomialKey, TensorSum};
use crate::error::{Error, Result};
use crate::grading::Bidegree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfViolation {
    Coassociativity(MonomialKey),
    LeftCounit(MonomialKey),
    RightCounit(MonomialKey),
    BidegreeAdditivity(MonomialKey),
    /// `ψ(a b) != ψ(a) ψ(b)`.
    Multiplicativity(MonomialKey, MonomialKey),
    /// `ψ(g)^2 != 0` for an exterior generator `g`.
    ExteriorRelation(MonomialKey),
}

impl fmt::Display for HopfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfViolation::Coassociativity(m) => write!(f, "coassociativity fails at {m}"),
            HopfViolation::LeftCounit(m) => write!(f, "left counit fails at {m}"),
            HopfViolation::RightCounit(m) => write!(f, "right counit fails at {m}"),
            HopfViolation::BidegreeAdditivity(m) => write!(f, "coproduct of {m} is not homogeneous"),
            HopfViolation::Multiplicativity(a, b) => write!(f, "ψ({a}·{b}) != ψ({a})ψ({b})"),
            HopfViolation::ExteriorRelation(g) => write!(f, "ψ({g})² != 0"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct HopfReport {
    pub monomials_checked: usize,
    pub products_checked: usize,
    pub violations: Vec<HopfViolation>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Triple = (MonomialKey, MonomialKey, MonomialKey);

fn toggle(set: &mut BTreeSet<Triple>, t: Triple) {
    if !set.remove(&t) {
        set.insert(t);
    }
}

fn generators_up_to(alg: AlgebraId, bound: i32) -> Vec<MonomialKey> {
    let mut gens = Vec::new();
    for i in 0.. {
        if super::tau_bidegree(i).p > bound {
            break;
        }
        if alg == AlgebraId::Riso {
            gens.push(MonomialKey::tau_gen(i));
        }
        if i >= 1 && super::xi_bidegree(i).p <= bound {
            gens.push(MonomialKey::xi_gen(i));
        }
    }
    gens
}

/// Checks the coalgebra axioms of G or RISO on every monomial of
/// topological degree at most `bound`, and multiplicativity of `ψ` on
/// (generator, monomial) pairs in the same range.
pub fn verify_hopf(alg: AlgebraId, bound: i32) -> Result<HopfReport> {
    if !matches!(alg, AlgebraId::G | AlgebraId::Riso) {
        return Err(Error::UnsupportedCoaction(format!("algebra {alg}")));
    }
    let mut report = HopfReport::default();
    let mut monomials = Vec::new();
    for p in 0..=bound {
        for q in 0..=p / 2 {
            monomials.extend(enumerate_basis(alg, Bidegree::new(p, q)).iter().cloned());
        }
    }

    for m in &monomials {
        report.monomials_checked += 1;
        let psi = coproduct(alg, m)?;

        if psi.terms().any(|(a, b)| a.bidegree() + b.bidegree() != m.bidegree()) {
            report.violations.push(HopfViolation::BidegreeAdditivity(m.clone()));
        }

        let mut lhs = BTreeSet::new();
        let mut rhs = BTreeSet::new();
        for (a, b) in psi.terms() {
            for (a1, a2) in coproduct(alg, a)?.terms() {
                toggle(&mut lhs, (a1.clone(), a2.clone(), b.clone()));
            }
            for (b1, b2) in coproduct(alg, b)?.terms() {
                toggle(&mut rhs, (a.clone(), b1.clone(), b2.clone()));
            }
        }
        if lhs != rhs {
            report.violations.push(HopfViolation::Coassociativity(m.clone()));
        }

        // (ε ⊗ 1)ψ(m) and (1 ⊗ ε)ψ(m), as multisets mod 2.
        let left: Vec<&MonomialKey> = psi.terms().filter(|(a, _)| a.is_one()).map(|(_, b)| b).collect();
        let right: Vec<&MonomialKey> = psi.terms().filter(|(_, b)| b.is_one()).map(|(a, _)| a).collect();
        if left != [m] {
            report.violations.push(HopfViolation::LeftCounit(m.clone()));
        }
        if right != [m] {
            report.violations.push(HopfViolation::RightCounit(m.clone()));
        }
    }

    let gens = generators_up_to(alg, bound);
    for g in &gens {
        let psi_g = coproduct(alg, g)?;
        if g.has_tau() && !psi_g.mul(&psi_g).is_empty() {
            report.violations.push(HopfViolation::ExteriorRelation(g.clone()));
        }
        for m in &monomials {
            if g.bidegree().p + m.bidegree().p > bound {
                continue;
            }
            let Some(gm) = g.mul(m) else { continue };
            report.products_checked += 1;
            let expected: TensorSum = psi_g.mul(&*coproduct(alg, m)?);
            if *coproduct(alg, &gm)? != expected {
                report.violations.push(HopfViolation::Multiplicativity(g.clone(), m.clone()));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_and_riso_pass() {
        for alg in [AlgebraId::G, AlgebraId::Riso] {
            let r = verify_hopf(alg, 12).unwrap();
            assert!(r.passed(), "{alg}: {:?}", r.violations);
            assert!(r.products_checked > 0);
        }
    }

    #[test]
    fn degree_zero_only_checks_the_unit() {
        let r = verify_hopf(AlgebraId::G, 0).unwrap();
        assert!(r.passed());
        assert_eq!(r.monomials_checked, 1);
    }

    #[test]
    fn rejects_algebras_without_coproduct() {
        assert!(verify_hopf(AlgebraId::Hpt, 4).is_err());
    }
}
