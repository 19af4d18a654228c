//! Text checkpoints for resolutions.
//!
//! ```text
//! ISOEXT-RES 1
//! algebra G
//! module <sha256 of the module description>
//! bounds <max_s> <max_t>
//! gen <s> <label> <t> <u>
//! dif <s> <label> = <xi-exponents>:<target>+…
//! end <generator count>
//! ```
//!
//! Levels are written in order, each as its `gen` lines followed by its `dif`
//! lines. Terms are sorted by monomial, then target label; a zero
//! differential is written `= 0`. The trailer makes truncation detectable.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use super::{ChartBounds, ModuleSource, ResGenerator, Resolution};
use crate::error::{Error, Result};
use crate::f2linalg::F2Vector;
use crate::grading::Bidegree;
use crate::hopf::{g_table, MonomialKey};

pub const CHECKPOINT_MAGIC: &str = "ISOEXT-RES";
pub const CHECKPOINT_VERSION: &str = "1";

pub fn write_checkpoint(r: &Resolution) -> String {
    let table = g_table();
    let mut out = format!("{CHECKPOINT_MAGIC} {CHECKPOINT_VERSION}\nalgebra G\nmodule {}\n", r.module().fingerprint());
    match r.watermark() {
        Some((s, t)) => writeln!(out, "bounds {s} {t}").unwrap(),
        None => out.push_str("bounds none\n"),
    }
    let mut count = 0;
    for s in 0..r.num_levels() as u32 {
        for g in r.generators(s) {
            writeln!(out, "gen {s} {} {} {}", g.label, g.degree.p, g.degree.q).unwrap();
            count += 1;
        }
        for g in r.generators(s) {
            let mut terms: Vec<(MonomialKey, String)> =
                r.differential_terms(s, g).into_iter().map(|(a, l)| (table.monomial(a), l)).collect();
            terms.sort();
            let body = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.iter().map(|(m, l)| format!("{}:{l}", m.xi_exponent_string())).collect::<Vec<_>>().join("+")
            };
            writeln!(out, "dif {s} {} = {body}", g.label).unwrap();
        }
    }
    writeln!(out, "end {count}").unwrap();
    out
}

fn corrupt(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::CorruptCheckpoint(format!("line {line}: {msg}"))
}

/// Loads a checkpoint written for `module`.
///
/// # Errors
///
/// `VersionMismatch` for another format version, `ModuleMismatch` if the
/// checkpoint belongs to a different module, and `CorruptCheckpoint` for any
/// malformed, truncated or inconsistent content.
pub fn parse_checkpoint(text: &str, module: Arc<dyn ModuleSource>) -> Result<Resolution> {
    let table = g_table();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut next = |what: &str| lines.next().ok_or_else(|| Error::CorruptCheckpoint(format!("missing {what}")));

    let (n, header) = next("header")?;
    let version = header
        .strip_prefix(CHECKPOINT_MAGIC)
        .and_then(|v| v.strip_prefix(' '))
        .ok_or_else(|| corrupt(n, "not a resolution checkpoint"))?;
    if version != CHECKPOINT_VERSION {
        return Err(Error::VersionMismatch { expected: CHECKPOINT_VERSION.into(), found: version.into() });
    }
    let (n, algebra) = next("algebra line")?;
    if algebra != "algebra G" {
        return Err(corrupt(n, format!("unsupported algebra line {algebra:?}")));
    }
    let (n, fp) = next("module line")?;
    match fp.strip_prefix("module ") {
        Some(fp) if fp == module.fingerprint() => {}
        Some(_) => return Err(Error::ModuleMismatch),
        None => return Err(corrupt(n, "expected module line")),
    }
    let (n, bounds) = next("bounds line")?;
    let watermark = match bounds.strip_prefix("bounds ").map(|b| b.split(' ').collect::<Vec<_>>()).as_deref() {
        Some(["none"]) => None,
        Some([s, t]) => Some((s.parse::<u32>().map_err(|e| corrupt(n, e))?, t.parse::<i32>().map_err(|e| corrupt(n, e))?)),
        _ => return Err(corrupt(n, "expected bounds line")),
    };

    let mut levels: Vec<Vec<ResGenerator>> = Vec::new();
    let mut difs: Vec<(usize, u32, String, String)> = Vec::new();
    let mut trailer = None;
    for (n, line) in lines {
        if trailer.is_some() {
            return Err(corrupt(n, "content after end"));
        }
        let fields: Vec<&str> = line.split(' ').collect();
        match fields.as_slice() {
            ["gen", s, label, t, u] => {
                let s: u32 = s.parse().map_err(|e| corrupt(n, e))?;
                let d = Bidegree::new(t.parse().map_err(|e| corrupt(n, e))?, u.parse().map_err(|e| corrupt(n, e))?);
                if watermark.is_none_or(|(ms, mt)| s > ms || d.p > mt) {
                    return Err(corrupt(n, "generator outside the bounds"));
                }
                while levels.len() <= s as usize {
                    levels.push(Vec::new());
                }
                let level = &mut levels[s as usize];
                if *label != format!("{s}_{}", level.len()) {
                    return Err(corrupt(n, format!("unexpected label {label}")));
                }
                if level.last().is_some_and(|g| (g.degree.p, g.degree.q) > (d.p, d.q)) {
                    return Err(corrupt(n, "generators out of order"));
                }
                level.push(ResGenerator { label: label.to_string(), degree: d, differential: F2Vector::zero() });
            }
            ["dif", s, label, "=", body] => {
                difs.push((n, s.parse().map_err(|e| corrupt(n, e))?, label.to_string(), body.to_string()));
            }
            ["end", count] => trailer = Some((n, count.parse::<usize>().map_err(|e| corrupt(n, e))?)),
            _ => return Err(corrupt(n, format!("unrecognized line {line:?}"))),
        }
    }
    let total: usize = levels.iter().map(Vec::len).sum();
    match trailer {
        None => return Err(Error::CorruptCheckpoint("missing end line (truncated file?)".into())),
        Some((n, count)) if count != total || difs.len() != total => {
            return Err(corrupt(n, format!("expected {count} generators, found {total} with {} differentials", difs.len())))
        }
        _ => {}
    }
    if let Some((ms, _)) = watermark {
        while levels.len() <= ms as usize {
            levels.push(Vec::new());
        }
    }

    let mut r = Resolution::from_parts(module, levels, watermark);
    let mut seen: HashMap<(u32, String), ()> = HashMap::new();
    let mut parsed = Vec::new();
    for (n, s, label, body) in difs {
        let index = r
            .generators(s)
            .iter()
            .position(|g| g.label == label)
            .ok_or_else(|| corrupt(n, format!("differential of unknown generator {label}")))?;
        if seen.insert((s, label.clone()), ()).is_some() {
            return Err(corrupt(n, format!("second differential for {label}")));
        }
        let d = r.generators(s)[index].degree;
        let mut v = F2Vector::zero();
        if body != "0" {
            for term in body.split('+') {
                let (exps, target) = term.split_once(':').ok_or_else(|| corrupt(n, format!("bad term {term:?}")))?;
                let a = MonomialKey::parse_xi_exponents(exps)
                    .and_then(|m| table.lookup(&m))
                    .ok_or_else(|| corrupt(n, format!("bad monomial {exps:?}")))?;
                let i = r.encode_term(s, d, a, target).ok_or_else(|| corrupt(n, format!("bad term {term:?}")))?;
                if v.contains(i) {
                    return Err(corrupt(n, format!("repeated term {term:?}")));
                }
                v.toggle(i);
            }
        }
        parsed.push((s, index, v));
    }
    for (s, index, v) in parsed {
        r.set_differential(s, index, v);
    }
    if let Some(v) = r.verify().first() {
        return Err(Error::CorruptCheckpoint(format!("inconsistent differentials: {v:?}")));
    }
    Ok(r)
}

/// Loads the checkpoint at `path` and extends it to `bounds`.
pub fn resume(path: &Path, module: Arc<dyn ModuleSource>, bounds: ChartBounds) -> Result<Resolution> {
    let text = std::fs::read_to_string(path)?;
    let mut r = parse_checkpoint(&text, module)?;
    r.extend_to(bounds.max_s, bounds.max_t())?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::Comodule;
    use crate::extengine::{chart_from_resolution, minimal_resolution, DualComodule, FreeModule};

    fn sphere() -> Arc<dyn ModuleSource> {
        Arc::new(DualComodule::new(Comodule::trivial("1", Bidegree::ZERO)).unwrap())
    }

    #[test]
    fn round_trip() {
        let r = minimal_resolution(sphere(), ChartBounds::new(3, 5)).unwrap();
        let text = write_checkpoint(&r);
        assert!(text.starts_with("ISOEXT-RES 1\nalgebra G\nmodule "));
        assert!(text.contains("gen 1 1_0 2 1\n"));
        assert!(text.contains("dif 1 1_0 = 1:0_0\n"));
        let back = parse_checkpoint(&text, sphere()).unwrap();
        assert_eq!(write_checkpoint(&back), text);
    }

    #[test]
    fn resume_matches_direct_run() {
        let direct = minimal_resolution(sphere(), ChartBounds::new(3, 5)).unwrap();
        let partial = minimal_resolution(sphere(), ChartBounds::new(2, 3)).unwrap();
        let mut resumed = parse_checkpoint(&write_checkpoint(&partial), sphere()).unwrap();
        resumed.extend_to(3, 8).unwrap();
        assert_eq!(write_checkpoint(&resumed), write_checkpoint(&direct));
        assert_eq!(chart_from_resolution(&resumed), chart_from_resolution(&direct));
    }

    #[test]
    fn damaged_files() {
        let text = write_checkpoint(&minimal_resolution(sphere(), ChartBounds::new(3, 5)).unwrap());
        let cut = &text[..text.len() / 2];
        assert!(matches!(parse_checkpoint(cut, sphere()), Err(Error::CorruptCheckpoint(_))));
        let no_end = text.replace("end ", "fin ");
        assert!(matches!(parse_checkpoint(&no_end, sphere()), Err(Error::CorruptCheckpoint(_))));
        let v2 = text.replacen("ISOEXT-RES 1", "ISOEXT-RES 2", 1);
        assert!(matches!(parse_checkpoint(&v2, sphere()), Err(Error::VersionMismatch { .. })));
        let other = FreeModule::new(vec![("x".into(), Bidegree::ZERO)]).unwrap();
        assert!(matches!(parse_checkpoint(&text, Arc::new(other)), Err(Error::ModuleMismatch)));
        let wrong = text.replacen("dif 1 1_0 = 1:0_0", "dif 1 1_0 = 0:0_0", 1);
        assert!(matches!(parse_checkpoint(&wrong, sphere()), Err(Error::CorruptCheckpoint(_))));
    }
}
