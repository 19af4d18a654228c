use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A bidegree `(p, q)`: topological degree `p` and motivic weight `q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bidegree {
    pub p: i32,
    pub q: i32,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { p: 0, q: 0 };

    pub const fn new(p: i32, q: i32) -> Self {
        Self { p, q }
    }

    /// The Chow-Novikov degree `p - 2q`.
    pub const fn chow_novikov(self) -> i32 {
        self.p - 2 * self.q
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.p - rhs.p, self.q - rhs.q)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree::new(-self.p, -self.q)
    }
}

impl Mul<i32> for Bidegree {
    type Output = Bidegree;
    fn mul(self, rhs: i32) -> Bidegree {
        Bidegree::new(self.p * rhs, self.q * rhs)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Spectral-sequence coordinates: filtration `s`, internal degree `t`, weight `u`.
///
/// Ordered lexicographically by `(s, t, u)`, which is the order charts are
/// written in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tridegree {
    pub s: u32,
    pub t: i32,
    pub u: i32,
}

impl Tridegree {
    pub const fn new(s: u32, t: i32, u: i32) -> Self {
        Self { s, t, u }
    }

    pub const fn stem(self) -> i32 {
        self.t - self.s as i32
    }

    /// The internal bidegree `(t, u)`.
    pub const fn internal(self) -> Bidegree {
        Bidegree::new(self.t, self.u)
    }
}

impl fmt::Display for Tridegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.s, self.t, self.u)
    }
}
