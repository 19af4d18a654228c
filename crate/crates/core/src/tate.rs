//! Isotropic homology as free modules over the homology of the point, and
//! hom-sets between isotropic Tate motives of cellular spectra.
//!
//! `H^iso(X) = H ⊗ MBP(X)` with `H` the exterior algebra on the `ρ_i`, and
//! the hom-set from `M(X)` to `M(Y)` is `Hom_F(MBP(X), H ⊗ MBP(Y))`; no
//! coaction enters.

use std::collections::BTreeMap;

use crate::comodule::{Comodule, GradedDims, Window};
use crate::error::Result;
use crate::grading::Bidegree;
use crate::hopf::{enumerate_basis, AlgebraId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModuleDims {
    /// Free generators over `H`, by bidegree.
    pub generators: GradedDims,
    /// `F₂`-dimensions of `H ⊗ generators` inside `window`.
    pub expanded: GradedDims,
    pub window: Window,
}

/// Dimensions of the exterior algebra `H` in bidegrees with `p <= max_p`.
fn hpt_dims(max_p: i32) -> GradedDims {
    let mut out = GradedDims::new();
    for p in 0..=max_p {
        for q in 0..=p / 2 {
            out.add(Bidegree::new(p, q), enumerate_basis(AlgebraId::Hpt, Bidegree::new(p, q)).len());
        }
    }
    out
}

/// # Errors
///
/// `InvalidComodule` if `m` fails validation.
pub fn h_iso_dims(m: &Comodule, window: Window) -> Result<HModuleDims> {
    m.require_valid()?;
    let generators = m.dims();
    let mut expanded = GradedDims::new();
    if let (Some(lo), false) = (m.min_p(), window.is_empty()) {
        let hpt = hpt_dims(window.p_max - lo);
        for (d, n) in generators.iter() {
            for (e, k) in hpt.iter() {
                if window.contains(d + e) {
                    expanded.add(d + e, n * k);
                }
            }
        }
    }
    Ok(HModuleDims { generators, expanded, window })
}

/// Graded dimension of `Hom_F(mx, H ⊗ my)` at every shift in `shifts`: the
/// number of pairs `(x, h ⊗ y)` of basis elements with
/// `deg h + deg y - deg x = shift`.
///
/// # Errors
///
/// `InvalidComodule` if either input fails validation.
pub fn tate_hom_dims(mx: &Comodule, my: &Comodule, shifts: Window) -> Result<BTreeMap<Bidegree, usize>> {
    mx.require_valid()?;
    my.require_valid()?;
    let mut out = BTreeMap::new();
    if shifts.is_empty() {
        return Ok(out);
    }
    let (x, y) = (mx.dims(), my.dims());
    let reach = shifts.p_max + mx.max_p().unwrap_or(0) - my.min_p().unwrap_or(0);
    let hpt = hpt_dims(reach);
    for p in shifts.p_min..=shifts.p_max {
        for q in shifts.q_min..=shifts.q_max {
            let shift = Bidegree::new(p, q);
            let mut total = 0;
            for (dx, nx) in x.iter() {
                for (dy, ny) in y.iter() {
                    total += nx * ny * hpt.get(shift + dx - dy);
                }
            }
            out.insert(shift, total);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::{cofree, GradedDims};

    fn f2() -> Comodule {
        Comodule::trivial("1", Bidegree::ZERO)
    }

    #[test]
    fn point_expansion() {
        let w = Window { p_min: 0, p_max: 6, q_min: 0, q_max: 3 };
        let h = h_iso_dims(&f2(), w).unwrap();
        let expected: GradedDims =
            [(Bidegree::new(0, 0), 1), (Bidegree::new(1, 0), 1), (Bidegree::new(3, 1), 1), (Bidegree::new(4, 1), 1)]
                .into_iter()
                .collect();
        assert_eq!(h.expanded, expected);
        assert!(h_iso_dims(&Comodule::zero(), w).unwrap().expanded.is_empty());
    }

    #[test]
    fn mbp_expansion() {
        let dims: GradedDims = [(Bidegree::ZERO, 1)].into_iter().collect();
        let g = cofree(&dims, Window::below(8)).unwrap();
        let h = h_iso_dims(&g, Window { p_min: 0, p_max: 8, q_min: 0, q_max: 4 }).unwrap();
        assert_eq!(h.expanded.get(Bidegree::new(2, 1)), 1);
        assert_eq!(h.expanded.get(Bidegree::new(3, 1)), 2);
    }

    #[test]
    fn hom_examples() {
        let w = Window { p_min: -8, p_max: 8, q_min: -4, q_max: 4 };
        let t = tate_hom_dims(&f2(), &f2(), w).unwrap();
        assert_eq!(t[&Bidegree::ZERO], 1);
        assert_eq!(t[&Bidegree::new(1, 0)], 1);
        let shifted = Comodule::trivial("x", Bidegree::new(2, 1));
        assert_eq!(tate_hom_dims(&shifted, &f2(), w).unwrap()[&Bidegree::new(-2, -1)], 1);
        assert!(tate_hom_dims(&f2(), &Comodule::zero(), w).unwrap().values().all(|&n| n == 0));
    }
}
