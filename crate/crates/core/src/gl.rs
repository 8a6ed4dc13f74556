//! The general linear Lie superalgebra `gl(M|N)` on a graded index set.
//!
//! Indices are `0..dim`; each carries a fixed [`Parity`]. The even indices
//! need not come first, so the same type serves `gl(m|n)` for any
//! epsilon-delta sequence as well as the big `gl(M|N)` of a rectangle.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Add;

use crate::error::AlgebraError;
use crate::linalg::{self, DenseMatrix};
use crate::scalar::Scalar;

/// `Z/2` grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// `|x| |y|` as a boolean, i.e. whether swapping costs a sign.
    pub fn koszul(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() != rhs.is_odd())
    }
}

/// A labelled index with its parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIndex {
    pub label: String,
    pub parity: Parity,
}

/// The matrix unit `e_{row,col}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElement {
    pub row: usize,
    pub col: usize,
}

impl BasisElement {
    pub const fn new(row: usize, col: usize) -> Self {
        BasisElement { row, col }
    }
}

/// A strict total order on the `dim^2` matrix units, stored as a rank table.
///
/// PBW monomials are written with generators in increasing rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorOrder {
    dim: usize,
    rank: Vec<u16>,
    by_rank: Vec<BasisElement>,
}

impl GeneratorOrder {
    /// Row-major order `e_{0,0} < e_{0,1} < ...`.
    pub fn lexicographic(dim: usize) -> Self {
        let seq = (0..dim)
            .flat_map(|r| (0..dim).map(move |c| BasisElement::new(r, c)))
            .collect();
        Self::from_sequence(dim, seq).expect("row-major order is a permutation")
    }

    /// Sort the matrix units by `key`, breaking ties row-major.
    pub fn by_key<K: Ord>(dim: usize, mut key: impl FnMut(BasisElement) -> K) -> Self {
        let mut seq: Vec<BasisElement> = (0..dim)
            .flat_map(|r| (0..dim).map(move |c| BasisElement::new(r, c)))
            .collect();
        seq.sort_by_cached_key(|&b| (key(b), b));
        Self::from_sequence(dim, seq).expect("sorting preserves the permutation")
    }

    /// Explicit order, listed from smallest to largest.
    pub fn from_sequence(dim: usize, seq: Vec<BasisElement>) -> Result<Self, AlgebraError> {
        let n = dim * dim;
        if seq.len() != n || n > u16::MAX as usize {
            return Err(AlgebraError::BadOrder);
        }
        let mut rank = alloc::vec![u16::MAX; n];
        for (pos, b) in seq.iter().enumerate() {
            if b.row >= dim || b.col >= dim || rank[b.row * dim + b.col] != u16::MAX {
                return Err(AlgebraError::BadOrder);
            }
            rank[b.row * dim + b.col] = pos as u16;
        }
        Ok(GeneratorOrder {
            dim,
            rank,
            by_rank: seq,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self, b: BasisElement) -> u16 {
        self.rank[b.row * self.dim + b.col]
    }

    pub fn element(&self, rank: u16) -> BasisElement {
        self.by_rank[rank as usize]
    }

    pub fn sequence(&self) -> &[BasisElement] {
        &self.by_rank
    }

    pub fn compare(&self, a: BasisElement, b: BasisElement) -> Ordering {
        self.rank(a).cmp(&self.rank(b))
    }
}

/// A Lie (degree one) element: finite linear combination of matrix units.
pub type GlVector = BTreeMap<BasisElement, Scalar>;

/// Add `coeff * b` to `v`, dropping zero entries.
pub fn vec_add_term(v: &mut GlVector, b: BasisElement, coeff: &Scalar) {
    if coeff.is_zero() {
        return;
    }
    let slot = v.entry(b).or_insert_with(Scalar::zero);
    *slot += coeff;
    if slot.is_zero() {
        v.remove(&b);
    }
}

/// `gl` of a graded index set together with a PBW generator order.
#[derive(Clone, Debug)]
pub struct GlSuper {
    parities: Vec<Parity>,
    labels: Vec<String>,
    order: GeneratorOrder,
    // parity of e_{rank}, indexed by rank
    rank_parity: Vec<Parity>,
}

/// Structure constants of two generators: at most two terms, each `+-1`.
pub(crate) type RankBracket = smallvec::SmallVec<[(u16, bool); 2]>;

impl GlSuper {
    pub fn new(parities: Vec<Parity>, labels: Vec<String>, order: GeneratorOrder) -> Result<Self, AlgebraError> {
        let dim = parities.len();
        if labels.len() != dim || order.dim() != dim {
            return Err(AlgebraError::UniverseMismatch);
        }
        let rank_parity = order
            .sequence()
            .iter()
            .map(|b| parities[b.row] + parities[b.col])
            .collect();
        Ok(GlSuper {
            parities,
            labels,
            order,
            rank_parity,
        })
    }

    /// `gl` with numeric labels `1..=dim` and the row-major order.
    pub fn with_parities(parities: Vec<Parity>) -> Self {
        let dim = parities.len();
        let labels = (1..=dim).map(|i| alloc::format!("{}", i)).collect();
        Self::new(parities, labels, GeneratorOrder::lexicographic(dim)).expect("consistent dims")
    }

    /// Same indices, different generator order.
    pub fn reordered(&self, order: GeneratorOrder) -> Result<Self, AlgebraError> {
        Self::new(self.parities.clone(), self.labels.clone(), order)
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    /// Number of matrix units, `dim^2`.
    pub fn basis_len(&self) -> usize {
        self.dim() * self.dim()
    }

    pub fn order(&self) -> &GeneratorOrder {
        &self.order
    }

    pub fn index_parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index(&self, i: usize) -> GradedIndex {
        GradedIndex {
            label: self.labels[i].clone(),
            parity: self.parities[i],
        }
    }

    pub fn label_position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis(&self) -> impl Iterator<Item = BasisElement> + '_ {
        let d = self.dim();
        (0..d).flat_map(move |r| (0..d).map(move |c| BasisElement::new(r, c)))
    }

    pub fn parity(&self, b: BasisElement) -> Parity {
        self.parities[b.row] + self.parities[b.col]
    }

    pub(crate) fn rank_parity(&self, rank: u16) -> Parity {
        self.rank_parity[rank as usize]
    }

    pub fn check(&self, b: BasisElement) -> Result<(), AlgebraError> {
        if b.row < self.dim() && b.col < self.dim() {
            Ok(())
        } else {
            Err(AlgebraError::UniverseMismatch)
        }
    }

    /// `[e_ab, e_cd] = d_bc e_ad - (-1)^{(|a|+|b|)(|c|+|d|)} d_ad e_cb`.
    pub fn bracket_basis(&self, x: BasisElement, y: BasisElement) -> Result<GlVector, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        let mut out = GlVector::new();
        if x.col == y.row {
            vec_add_term(&mut out, BasisElement::new(x.row, y.col), &Scalar::one());
        }
        if x.row == y.col {
            let sign = Scalar::sign(!self.parity(x).koszul(self.parity(y)));
            vec_add_term(&mut out, BasisElement::new(y.row, x.col), &sign);
        }
        Ok(out)
    }

    /// Bracket of two generators given by rank; the flag marks a `-1`.
    pub(crate) fn bracket_ranks(&self, x: u16, y: u16) -> RankBracket {
        let bx = self.order.element(x);
        let by = self.order.element(y);
        let mut out = RankBracket::new();
        let ad = BasisElement::new(bx.row, by.col);
        let cb = BasisElement::new(by.row, bx.col);
        let first = bx.col == by.row;
        let second = bx.row == by.col;
        if first && second && ad == cb {
            // e_aa-type collision: coefficients 1 - (-1)^{..} cancel or double
            if self.rank_parity(x).koszul(self.rank_parity(y)) {
                // 1 + 1; only odd x = e_ab, y = e_ba with a = b, impossible
                unreachable!("odd units are off-diagonal");
            }
            return out;
        }
        if first {
            out.push((self.order.rank(ad), false));
        }
        if second {
            let negative = !self.rank_parity(x).koszul(self.rank_parity(y));
            out.push((self.order.rank(cb), negative));
        }
        out
    }

    /// Bilinear extension of [`bracket_basis`](Self::bracket_basis) to
    /// parity-homogeneous vectors.
    pub fn bracket(&self, x: &GlVector, y: &GlVector) -> Result<GlVector, AlgebraError> {
        let mut out = GlVector::new();
        for (bx, cx) in x {
            for (by, cy) in y {
                let c = cx * cy;
                for (b, cb) in self.bracket_basis(*bx, *by)? {
                    vec_add_term(&mut out, b, &(&c * &cb));
                }
            }
        }
        Ok(out)
    }

    /// Parity of a homogeneous vector; `None` for mixed vectors. The zero
    /// vector is reported as even.
    pub fn vector_parity(&self, v: &GlVector) -> Option<Parity> {
        let mut it = v.keys().map(|&b| self.parity(b));
        let first = it.next().unwrap_or(Parity::Even);
        if it.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    /// The supertrace form `(x, y) = str(x y)` on matrix units:
    /// `(e_ab, e_cd) = (-1)^{|a|} d_bc d_ad`.
    pub fn str_form_basis(&self, x: BasisElement, y: BasisElement) -> Scalar {
        if x.col == y.row && x.row == y.col {
            Scalar::sign(self.parities[x.row].is_odd())
        } else {
            Scalar::zero()
        }
    }

    pub fn str_form(&self, x: &GlVector, y: &GlVector) -> Scalar {
        let mut acc = Scalar::zero();
        for (bx, cx) in x {
            let partner = BasisElement::new(bx.col, bx.row);
            if let Some(cy) = y.get(&partner) {
                acc += &(&(cx * cy) * &self.str_form_basis(*bx, partner));
            }
        }
        acc
    }

    /// Matrix of `ad x` in the row-major basis of matrix units; column `k` is
    /// the image of the `k`-th basis element.
    pub fn ad_matrix(&self, x: &GlVector) -> Result<DenseMatrix, AlgebraError> {
        let n = self.basis_len();
        let d = self.dim();
        let mut m = DenseMatrix::zeros(n, n);
        for (k, b) in self.basis().enumerate() {
            let img = self.bracket(x, &GlVector::from([(b, Scalar::one())]))?;
            for (t, c) in img {
                m.set(t.row * d + t.col, k, c);
            }
        }
        Ok(m)
    }

    /// Supertrace of an operator on `gl` given in the row-major basis.
    fn operator_supertrace(&self, op: &DenseMatrix) -> Scalar {
        let mut acc = Scalar::zero();
        for (k, b) in self.basis().enumerate() {
            let entry = op.get(k, k);
            if self.parity(b).is_odd() {
                acc -= entry;
            } else {
                acc += entry;
            }
        }
        acc
    }

    /// Killing form `str(ad x . ad y)`.
    pub fn killing_form(&self, x: &GlVector, y: &GlVector) -> Result<Scalar, AlgebraError> {
        let ax = self.ad_matrix(x)?;
        let ay = self.ad_matrix(y)?;
        Ok(self.operator_supertrace(&ax.mul(&ay)))
    }

    /// Gram matrix of a form over the matrix units, row-major.
    pub fn gram_matrix(&self, mut form: impl FnMut(BasisElement, BasisElement) -> Scalar) -> DenseMatrix {
        let basis: Vec<_> = self.basis().collect();
        let n = basis.len();
        let mut m = DenseMatrix::zeros(n, n);
        for (i, &x) in basis.iter().enumerate() {
            for (j, &y) in basis.iter().enumerate() {
                m.set(i, j, form(x, y));
            }
        }
        m
    }

    pub fn str_form_gram_rank(&self) -> usize {
        linalg::dense_rank(&self.gram_matrix(|x, y| self.str_form_basis(x, y)))
    }

    pub fn killing_form_gram_rank(&self) -> usize {
        let ads: Vec<DenseMatrix> = self
            .basis()
            .map(|b| self.ad_matrix(&GlVector::from([(b, Scalar::one())])).expect("in range"))
            .collect();
        let n = ads.len();
        let mut gram = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                gram.set(i, j, self.operator_supertrace(&ads[i].mul(&ads[j])));
            }
        }
        linalg::dense_rank(&gram)
    }

    /// The identity matrix `sum_i e_ii`, spanning the centre.
    pub fn identity_vector(&self) -> GlVector {
        (0..self.dim())
            .map(|i| (BasisElement::new(i, i), Scalar::one()))
            .collect()
    }

    /// Dense `dim x dim` matrix of a vector (ignoring grading).
    pub fn to_matrix(&self, v: &GlVector) -> DenseMatrix {
        let d = self.dim();
        let mut m = DenseMatrix::zeros(d, d);
        for (b, c) in v {
            m.set(b.row, b.col, c.clone());
        }
        m
    }
}
