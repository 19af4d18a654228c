use std::fmt;

use crate::grading::Bidegree;

/// Bidegree of `ξ_i` (for `i >= 1`).
pub const fn xi_bidegree(i: usize) -> Bidegree {
    Bidegree::new((1 << (i + 1)) - 2, (1 << i) - 1)
}

/// Bidegree of `τ_i` and of `ρ_i` (for `i >= 0`).
pub const fn tau_bidegree(i: usize) -> Bidegree {
    Bidegree::new((1 << (i + 1)) - 1, (1 << i) - 1)
}

/// A basis monomial `ρ^ε τ^δ ξ^E`.
///
/// `rho[i]` and `tau[i]` are the exponents of `ρ_i`, `τ_i` (0 or 1), and
/// `xi[i]` is the exponent of `ξ_{i+1}`. Trailing zeros are always trimmed,
/// so the derived ordering is the lexicographic order on `(rho, tau, xi)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialKey {
    rho: Vec<u8>,
    tau: Vec<u8>,
    xi: Vec<u32>,
}

fn trim<T: Default + PartialEq>(v: &mut Vec<T>) {
    while v.last().is_some_and(|x| *x == T::default()) {
        v.pop();
    }
}

impl MonomialKey {
    pub fn one() -> Self {
        Self::default()
    }

    /// # Panics
    ///
    /// If an exterior exponent exceeds 1.
    pub fn new(rho: Vec<u8>, tau: Vec<u8>, xi: Vec<u32>) -> Self {
        assert!(rho.iter().chain(&tau).all(|&e| e <= 1), "exterior exponents must be 0 or 1");
        let mut m = Self { rho, tau, xi };
        trim(&mut m.rho);
        trim(&mut m.tau);
        trim(&mut m.xi);
        m
    }

    /// `ξ_1^{e_1} ξ_2^{e_2} ...`
    pub fn from_xi(exponents: &[u32]) -> Self {
        Self::new(Vec::new(), Vec::new(), exponents.to_vec())
    }

    /// The generator `ξ_i`, `i >= 1`.
    pub fn xi_gen(i: usize) -> Self {
        assert!(i >= 1);
        let mut xi = vec![0; i];
        xi[i - 1] = 1;
        Self::from_xi(&xi)
    }

    /// `ξ_i^e`; `ξ_0` is the unit.
    pub fn xi_power(i: usize, e: u32) -> Self {
        if i == 0 || e == 0 {
            return Self::one();
        }
        let mut xi = vec![0; i];
        xi[i - 1] = e;
        Self::from_xi(&xi)
    }

    pub fn tau_gen(i: usize) -> Self {
        let mut tau = vec![0; i + 1];
        tau[i] = 1;
        Self::new(Vec::new(), tau, Vec::new())
    }

    pub fn rho_gen(i: usize) -> Self {
        let mut rho = vec![0; i + 1];
        rho[i] = 1;
        Self::new(rho, Vec::new(), Vec::new())
    }

    pub fn rho(&self) -> &[u8] {
        &self.rho
    }

    pub fn tau(&self) -> &[u8] {
        &self.tau
    }

    pub fn xi(&self) -> &[u32] {
        &self.xi
    }

    pub fn is_one(&self) -> bool {
        self.rho.is_empty() && self.tau.is_empty() && self.xi.is_empty()
    }

    pub fn has_rho(&self) -> bool {
        !self.rho.is_empty()
    }

    pub fn has_tau(&self) -> bool {
        !self.tau.is_empty()
    }

    pub fn bidegree(&self) -> Bidegree {
        let mut d = Bidegree::ZERO;
        for (i, &e) in self.rho.iter().enumerate() {
            d = d + tau_bidegree(i) * e as i32;
        }
        for (i, &e) in self.tau.iter().enumerate() {
            d = d + tau_bidegree(i) * e as i32;
        }
        for (i, &e) in self.xi.iter().enumerate() {
            d = d + xi_bidegree(i + 1) * e as i32;
        }
        d
    }

    /// Product in the (graded-commutative, characteristic 2) algebra; `None`
    /// when an exterior generator would be squared.
    pub fn mul(&self, other: &MonomialKey) -> Option<MonomialKey> {
        fn ext(a: &[u8], b: &[u8]) -> Option<Vec<u8>> {
            let n = a.len().max(b.len());
            let mut out = vec![0; n];
            for (i, o) in out.iter_mut().enumerate() {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                if x + y > 1 {
                    return None;
                }
                *o = x + y;
            }
            Some(out)
        }
        let rho = ext(&self.rho, &other.rho)?;
        let tau = ext(&self.tau, &other.tau)?;
        let n = self.xi.len().max(other.xi.len());
        let xi = (0..n).map(|i| self.xi.get(i).copied().unwrap_or(0) + other.xi.get(i).copied().unwrap_or(0)).collect();
        Some(MonomialKey { rho, tau, xi })
    }

    /// Splits off the first generator factor: `self = g * rest`.
    pub(crate) fn split_first(&self) -> Option<(Generator, MonomialKey)> {
        if let Some(i) = self.rho.iter().position(|&e| e == 1) {
            let mut rest = self.clone();
            rest.rho[i] = 0;
            trim(&mut rest.rho);
            return Some((Generator::Rho(i), rest));
        }
        if let Some(i) = self.tau.iter().position(|&e| e == 1) {
            let mut rest = self.clone();
            rest.tau[i] = 0;
            trim(&mut rest.tau);
            return Some((Generator::Tau(i), rest));
        }
        let i = self.xi.iter().position(|&e| e > 0)?;
        let mut rest = self.clone();
        rest.xi[i] -= 1;
        trim(&mut rest.xi);
        Some((Generator::Xi(i + 1), rest))
    }

    /// The comma-separated `ξ` exponent list used by the text formats;
    /// the unit is written `0`.
    pub fn xi_exponent_string(&self) -> String {
        if self.xi.is_empty() {
            return "0".into();
        }
        self.xi.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }

    /// Parses [`xi_exponent_string`](Self::xi_exponent_string) output.
    pub fn parse_xi_exponents(s: &str) -> Option<MonomialKey> {
        let exps: Option<Vec<u32>> = s.split(',').map(|x| x.trim().parse().ok()).collect();
        Some(MonomialKey::from_xi(&exps?))
    }

    /// Parses the [`ascii`](Self::ascii) form of a G monomial.
    pub fn parse_ascii(s: &str) -> Option<MonomialKey> {
        if s == "1" {
            return Some(MonomialKey::one());
        }
        let mut exps: Vec<u32> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.strip_prefix("xi")?;
            let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let i: usize = rest[..end].parse().ok()?;
            rest = &rest[end..];
            let mut e = 1;
            if let Some(r) = rest.strip_prefix('^') {
                let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
                e = r[..end].parse().ok()?;
                rest = &r[end..];
            }
            if i == 0 || e == 0 || exps.get(i - 1).is_some_and(|&x| x > 0) {
                return None;
            }
            if exps.len() < i {
                exps.resize(i, 0);
            }
            exps[i - 1] = e;
        }
        let m = MonomialKey::from_xi(&exps);
        (m.ascii() == s).then_some(m)
    }

    /// ASCII rendering such as `xi1^2xi2`, safe inside labels.
    pub fn ascii(&self) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut out = String::new();
        let mut push = |name: &str, i: usize, e: u32| {
            out.push_str(name);
            out.push_str(&i.to_string());
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        };
        for (i, &e) in self.rho.iter().enumerate() {
            if e > 0 {
                push("rho", i, 1);
            }
        }
        for (i, &e) in self.tau.iter().enumerate() {
            if e > 0 {
                push("tau", i, 1);
            }
        }
        for (i, &e) in self.xi.iter().enumerate() {
            if e > 0 {
                push("xi", i + 1, e);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Generator {
    Rho(usize),
    Tau(usize),
    Xi(usize),
}

fn subscript(n: usize) -> String {
    n.to_string().chars().map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap()).collect()
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl fmt::Display for MonomialKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, &e) in self.rho.iter().enumerate() {
            if e > 0 {
                write!(f, "ρ{}", subscript(i))?;
            }
        }
        for (i, &e) in self.tau.iter().enumerate() {
            if e > 0 {
                write!(f, "τ{}", subscript(i))?;
            }
        }
        for (i, &e) in self.xi.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "ξ{}", subscript(i + 1))?,
                _ => write!(f, "ξ{}{}", subscript(i + 1), superscript(e))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
