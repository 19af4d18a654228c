//! Linear algebra over the field with two elements.
//!
//! Vectors are stored sparsely as their support. A matrix is a list of row
//! vectors and acts on column vectors, so an `r x c` matrix is a map
//! `F2^c -> F2^r`. Row reduction switches to a bit-packed dense
//! representation once the matrix is dense enough that word-parallel XOR
//! beats merging supports.

use std::fmt;

/// A vector over GF(2), stored as its strictly increasing support.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    support: Vec<usize>,
}

impl F2Vector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { support: vec![i] }
    }

    /// Builds a vector from arbitrary indices; repeated indices cancel in pairs.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        let mut support = Vec::with_capacity(v.len());
        let mut i = 0;
        while i < v.len() {
            let mut j = i;
            while j < v.len() && v[j] == v[i] {
                j += 1;
            }
            if (j - i) % 2 == 1 {
                support.push(v[i]);
            }
            i = j;
        }
        Self { support }
    }

    /// Wraps an already strictly increasing support.
    pub fn from_sorted(support: Vec<usize>) -> Self {
        debug_assert!(support.windows(2).all(|w| w[0] < w[1]));
        Self { support }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn into_support(self) -> Vec<usize> {
        self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Number of non-zero coordinates.
    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.support.binary_search(&i).is_ok()
    }

    pub fn leading(&self) -> Option<usize> {
        self.support.first().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.support.iter().copied()
    }

    /// Flips coordinate `i`.
    pub fn toggle(&mut self, i: usize) {
        match self.support.binary_search(&i) {
            Ok(pos) => {
                self.support.remove(pos);
            }
            Err(pos) => self.support.insert(pos, i),
        }
    }

    /// `self += other` (symmetric difference of supports).
    pub fn add_assign(&mut self, other: &F2Vector) {
        if other.is_zero() {
            return;
        }
        let a = std::mem::take(&mut self.support);
        let b = &other.support;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        self.support = out;
    }

    pub fn sum(&self, other: &F2Vector) -> F2Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn dot(&self, other: &F2Vector) -> bool {
        let (mut i, mut j) = (0, 0);
        let mut acc = false;
        while i < self.support.len() && j < other.support.len() {
            match self.support[i].cmp(&other.support[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc = !acc;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Re-indexes the vector through `map`; colliding images cancel.
    pub fn map_indices(&self, map: impl Fn(usize) -> usize) -> F2Vector {
        F2Vector::from_indices(self.support.iter().map(|&i| map(i)))
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector{:?}", self.support)
    }
}

impl FromIterator<usize> for F2Vector {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        F2Vector::from_indices(iter)
    }
}

/// A matrix over GF(2) stored as sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<F2Vector>,
}

impl F2Matrix {
    /// # Panics
    ///
    /// If some row has an index `>= cols`.
    pub fn new(cols: usize, rows: Vec<F2Vector>) -> Self {
        for r in &rows {
            if let Some(&last) = r.support.last() {
                assert!(last < cols, "row index {last} out of range for {cols} columns");
            }
        }
        Self { cols, rows }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![F2Vector::zero(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { cols: n, rows: (0..n).map(F2Vector::unit).collect() }
    }

    /// Builds a `0/1` matrix from nested arrays; handy in tests.
    pub fn from_dense(cols: usize, rows: &[&[u8]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols);
                F2Vector::from_sorted(r.iter().enumerate().filter(|(_, &x)| x & 1 == 1).map(|(i, _)| i).collect())
            })
            .collect();
        Self { cols, rows }
    }

    /// The matrix whose `j`-th column is `columns[j]`, with `rows` rows.
    pub fn from_columns(rows: usize, columns: &[F2Vector]) -> Self {
        let mut out = vec![Vec::new(); rows];
        for (j, c) in columns.iter().enumerate() {
            for i in c.iter() {
                assert!(i < rows, "column entry {i} out of range for {rows} rows");
                out[i].push(j);
            }
        }
        Self { cols: columns.len(), rows: out.into_iter().map(F2Vector::from_sorted).collect() }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[F2Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.rows[i]
    }

    pub fn transpose(&self) -> F2Matrix {
        F2Matrix::from_columns(self.cols, &self.rows)
    }

    /// `self * v` for a column vector `v` of length `cols`.
    pub fn apply(&self, v: &F2Vector) -> F2Vector {
        F2Vector::from_sorted(self.rows.iter().enumerate().filter(|(_, r)| r.dot(v)).map(|(i, _)| i).collect())
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.num_rows());
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = F2Vector::zero();
                for k in r.iter() {
                    acc.add_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        F2Matrix { cols: other.cols, rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(F2Vector::is_zero)
    }

    fn density(&self) -> f64 {
        if self.rows.is_empty() || self.cols == 0 {
            return 0.0;
        }
        let nnz: usize = self.rows.iter().map(F2Vector::weight).sum();
        nnz as f64 / (self.rows.len() as f64 * self.cols as f64)
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

/// Row-reduction options. The dense fallback threshold is the fraction of
/// non-zero entries above which rows are bit-packed.
#[derive(Clone, Copy, Debug)]
pub struct Reducer {
    pub dense_threshold: f64,
}

impl Default for Reducer {
    fn default() -> Self {
        Self { dense_threshold: 0.125 }
    }
}

impl Reducer {
    /// Reduced row-echelon form. Zero rows are dropped, so the result has
    /// exactly `rank` rows, ordered by pivot.
    pub fn rref(&self, m: &F2Matrix) -> (F2Matrix, Vec<usize>) {
        if m.density() >= self.dense_threshold {
            rref_dense(m)
        } else {
            rref_sparse(m)
        }
    }
}

pub fn rref(m: &F2Matrix) -> (F2Matrix, Vec<usize>) {
    Reducer::default().rref(m)
}

fn rref_sparse(m: &F2Matrix) -> (F2Matrix, Vec<usize>) {
    let mut echelon = Echelon::new(m.cols);
    for r in &m.rows {
        echelon.insert(r.clone());
    }
    echelon.into_rref()
}

const WORD: usize = 64;

fn rref_dense(m: &F2Matrix) -> (F2Matrix, Vec<usize>) {
    let words = m.cols.div_ceil(WORD);
    let mut rows: Vec<Vec<u64>> = m
        .rows
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for i in r.iter() {
                w[i / WORD] ^= 1 << (i % WORD);
            }
            w
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..m.cols {
        let (wi, bit) = (col / WORD, 1u64 << (col % WORD));
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][wi] & bit != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[wi] & bit != 0 {
                for k in wi..words {
                    row[k] ^= pivot_row[k];
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    let rows = rows
        .into_iter()
        .map(|w| {
            let mut support = Vec::new();
            for (k, &word) in w.iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    support.push(k * WORD + b);
                    word &= word - 1;
                }
            }
            F2Vector::from_sorted(support)
        })
        .collect();
    (F2Matrix { cols: m.cols, rows }, pivots)
}

/// Basis of the kernel of `m : F2^cols -> F2^rows`, one vector per free
/// column, ordered by that column (which is the largest index of the vector).
pub fn kernel_basis(m: &F2Matrix) -> Vec<F2Vector> {
    let (reduced, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut support: Vec<usize> =
                reduced.rows.iter().zip(&pivots).filter(|(row, _)| row.contains(f)).map(|(_, &p)| p).collect();
            support.push(f);
            support.sort_unstable();
            F2Vector::from_sorted(support)
        })
        .collect()
}

/// Some `x` with `m * x = v`, or `None` if `v` is not in the column space.
///
/// Free variables are set to zero, so the answer is canonical.
pub fn preimage(m: &F2Matrix, v: &F2Vector) -> Option<F2Vector> {
    let aug = m.cols;
    let rows = m
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            if v.contains(i) {
                r.toggle(aug);
            }
            r
        })
        .collect();
    if v.iter().any(|i| i >= m.num_rows()) {
        return None;
    }
    let (reduced, pivots) = rref(&F2Matrix { cols: aug + 1, rows });
    if pivots.last() == Some(&aug) {
        return None;
    }
    Some(F2Vector::from_sorted(
        reduced.rows.iter().zip(&pivots).filter(|(row, _)| row.contains(aug)).map(|(_, &p)| p).collect(),
    ))
}

/// An incrementally built, fully reduced row echelon basis.
///
/// Every stored row has a distinct pivot (its smallest index), and no stored
/// row contains another row's pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    rows: Vec<F2Vector>,
    // pivot column -> position in `rows`
    pivot_of: std::collections::BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new(), pivot_of: Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &F2Vector) -> F2Vector {
        let mut v = v.clone();
        // Stored rows only contain their own pivot among pivot columns, so a
        // single sweep over the pivots of `v` in increasing order suffices.
        let hits: Vec<usize> = v.iter().filter(|i| self.pivot_of.contains_key(i)).collect();
        for p in hits {
            v.add_assign(&self.rows[self.pivot_of[&p]]);
        }
        v
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns the reduced vector that was stored, or
    /// `None` if `v` was already in the span.
    pub fn insert(&mut self, v: F2Vector) -> Option<F2Vector> {
        let r = self.reduce(&v);
        let pivot = r.leading()?;
        for row in self.rows.iter_mut() {
            if row.contains(pivot) {
                row.add_assign(&r);
            }
        }
        self.pivot_of.insert(pivot, self.rows.len());
        self.rows.push(r.clone());
        Some(r)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.pivot_of.keys().copied().collect()
    }

    pub fn into_rref(self) -> (F2Matrix, Vec<usize>) {
        let pivots: Vec<usize> = self.pivot_of.keys().copied().collect();
        let rows = self.pivot_of.values().map(|&k| self.rows[k].clone()).collect();
        (F2Matrix { cols: self.cols, rows }, pivots)
    }
}
