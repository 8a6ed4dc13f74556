//! Exact linear algebra: fraction-free sparse elimination and small dense
//! matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::scalar::Scalar;

type IntRow = Vec<(usize, BigInt)>;

/// Incremental row echelon form over the integers.
///
/// Rows are scaled to primitive integer vectors on entry; elimination uses
/// `row <- p * row - c * pivot` followed by content removal, so no rational
/// arithmetic is needed and entries stay small on the sparse integer matrices
/// produced by PBW expansions.
#[derive(Debug)]
pub struct EchelonBasis<K: Ord + Clone> {
    columns: BTreeMap<K, usize>,
    pivots: BTreeMap<usize, IntRow>,
}

impl<K: Ord + Clone> Default for EchelonBasis<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> EchelonBasis<K> {
    pub fn new() -> Self {
        EchelonBasis {
            columns: BTreeMap::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Add a vector; returns `true` when it was independent of the previous
    /// ones.
    pub fn insert<'a, I>(&mut self, entries: I) -> bool
    where
        K: 'a,
        I: IntoIterator<Item = (&'a K, &'a Scalar)>,
    {
        let mut row: IntRow = Vec::new();
        let mut denoms = BigInt::one();
        let mut raw = Vec::new();
        for (k, c) in entries {
            if c.is_zero() {
                continue;
            }
            let next = self.columns.len();
            let col = *self.columns.entry(k.clone()).or_insert(next);
            denoms = denoms.lcm(c.denom());
            raw.push((col, c.clone()));
        }
        for (col, c) in raw {
            let v = c.numer() * (&denoms / c.denom());
            row.push((col, v));
        }
        row.sort_by_key(|(c, _)| *c);
        merge_duplicates(&mut row);
        make_primitive(&mut row);
        self.reduce_and_insert(row)
    }

    fn reduce_and_insert(&mut self, mut row: IntRow) -> bool {
        loop {
            let Some((lead, lead_val)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(pivot) => {
                    let p = &pivot[0].1;
                    let g = p.gcd(&lead_val);
                    let a = p / &g;
                    let b = &lead_val / &g;
                    row = combine(&row, &a, pivot, &b);
                    make_primitive(&mut row);
                }
            }
        }
    }
}

fn merge_duplicates(row: &mut IntRow) {
    let mut out: IntRow = Vec::with_capacity(row.len());
    for (c, v) in row.drain(..) {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    *row = out;
}

/// `a * x - b * y` on sorted sparse rows.
fn combine(x: &IntRow, a: &BigInt, y: &IntRow, b: &BigInt) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v = &*v / &g;
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

/// Rank of a family of sparse vectors.
pub fn span_rank<'a, K, V, I>(vectors: V) -> usize
where
    K: Ord + Clone + 'a,
    V: IntoIterator<Item = I>,
    I: IntoIterator<Item = (&'a K, &'a Scalar)>,
{
    let mut basis = EchelonBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Small dense matrix of scalars, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: alloc::vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Result<DenseMatrix, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = DenseMatrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Sub-block on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn row_entries(&self, r: usize) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        (0..self.cols).map(move |c| (c, self.get(r, c)))
    }
}

pub fn dense_rank(m: &DenseMatrix) -> usize {
    let cols: Vec<usize> = (0..m.cols()).collect();
    let mut basis = EchelonBasis::new();
    for r in 0..m.rows() {
        basis.insert(cols.iter().map(|c| (c, m.get(r, *c))));
    }
    basis.rank()
}
