//! The comodule text format.
//!
//! ```text
//! # comments and blank lines are ignored
//! elem v 0 0
//! elem w 2 1
//!   act 1 -> v
//! ```
//!
//! `act` lines attach to the preceding `elem` and give the `ξ` exponents of
//! the monomial (`0` for the unit) and the target label. The counit term
//! `act 0 -> <self>` may be omitted and is inserted on load.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{BasisElement, Comodule};
use crate::error::{Error, Result};
use crate::grading::Bidegree;
use crate::hopf::MonomialKey;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_comodule(text: &str) -> Result<Comodule> {
    let mut basis: Vec<BasisElement> = Vec::new();
    let mut acts: Vec<Vec<(MonomialKey, String, usize)>> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();

    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "elem" => {
                let [_, label, p, q] = tokens[..] else {
                    return Err(err(line_no, "expected `elem <label> <p> <q>`"));
                };
                let p: i32 = p.parse().map_err(|_| err(line_no, format!("non-integer degree {p:?}")))?;
                let q: i32 = q.parse().map_err(|_| err(line_no, format!("non-integer degree {q:?}")))?;
                if index.insert(label.to_string(), basis.len()).is_some() {
                    return Err(err(line_no, format!("duplicate label {label:?}")));
                }
                basis.push(BasisElement { label: label.into(), degree: Bidegree::new(p, q) });
                acts.push(Vec::new());
            }
            "act" => {
                let [_, exps, "->", target] = tokens[..] else {
                    return Err(err(line_no, "expected `act <xi-exponents> -> <target>`"));
                };
                let m = MonomialKey::parse_xi_exponents(exps)
                    .ok_or_else(|| err(line_no, format!("bad monomial {exps:?} (only ξ exponents are allowed)")))?;
                let Some(current) = acts.last_mut() else {
                    return Err(err(line_no, "`act` before any `elem`"));
                };
                current.push((m, target.to_string(), line_no));
            }
            other => return Err(err(line_no, format!("unknown directive {other:?}"))),
        }
    }

    let mut coaction = Vec::with_capacity(acts.len());
    for terms in acts {
        let mut resolved = Vec::with_capacity(terms.len());
        for (m, target, line_no) in terms {
            let &w = index.get(&target).ok_or_else(|| err(line_no, format!("unknown target {target:?}")))?;
            resolved.push((m, w));
        }
        coaction.push(resolved);
    }
    Comodule::with_counits(basis, coaction)
}

/// Canonical text form; counit terms are omitted.
pub fn write_comodule(c: &Comodule) -> String {
    let mut out = String::new();
    for i in 0..c.dim() {
        let d = c.degree(i);
        writeln!(out, "elem {} {} {}", c.label(i), d.p, d.q).unwrap();
        for (m, w) in c.coaction(i) {
            if m.is_one() && *w == i {
                continue;
            }
            writeln!(out, "  act {} -> {}", m.xi_exponent_string(), c.label(*w)).unwrap();
        }
    }
    out
}
