//! Words in the tensor algebra `T(Mat_l)` with coefficients in `C[u]`, the
//! matrix `A(u)` and its row-ordered determinant.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{AddAssign, Mul, SubAssign};

use smallvec::SmallVec;

use crate::error::AlgebraError;
use crate::scalar::Scalar;

/// `rho_r = -(l - r)(m - n)` for 1-based `r`.
pub fn rho(r: usize, m: usize, n: usize, ell: usize) -> Scalar {
    Scalar::from_int(-((ell as i64) - (r as i64)) * ((m as i64) - (n as i64)))
}

/// A word `E_{a1,b1} (x) E_{a2,b2} (x) ..` of matrix units (0-based).
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatSymbolWord(pub SmallVec<[(u8, u8); 6]>);

impl MatSymbolWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letter(a: usize, b: usize) -> Self {
        let mut w = Self::default();
        w.0.push((a as u8, b as u8));
        w
    }

    pub fn from_letters(letters: &[(usize, usize)]) -> Self {
        MatSymbolWord(letters.iter().map(|&(a, b)| (a as u8, b as u8)).collect())
    }

    pub fn letters(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|&(a, b)| (a as usize, b as usize))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        w.0.extend(other.0.iter().copied());
        w
    }
}

impl fmt::Debug for MatSymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (t, (a, b)) in self.letters().enumerate() {
            if t > 0 {
                write!(f, "(x)")?;
            }
            write!(f, "E{},{}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// Element of `T(Mat_l)[u]`: a finite sum of `c u^p w`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct MatWordPoly {
    terms: BTreeMap<(MatSymbolWord, u32), Scalar>,
}

impl MatWordPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(MatSymbolWord::empty(), 0, c);
        p
    }

    /// The indeterminate `u`.
    pub fn u() -> Self {
        let mut p = Self::zero();
        p.add_term(MatSymbolWord::empty(), 1, Scalar::one());
        p
    }

    /// `E_{a,b}` (0-based).
    pub fn letter(a: usize, b: usize) -> Self {
        Self::word(MatSymbolWord::letter(a, b))
    }

    pub fn word(w: MatSymbolWord) -> Self {
        let mut p = Self::zero();
        p.add_term(w, 0, Scalar::one());
        p
    }

    pub fn add_term(&mut self, w: MatSymbolWord, power: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (w, power);
        let slot = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(word, power of u, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&MatSymbolWord, u32, &Scalar)> {
        self.terms.iter().map(|((w, p), c)| (w, *p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn u_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(_, p)| *p).max()
    }

    /// Coefficient of `u^power`, as an element of `T(Mat_l)`.
    pub fn u_coefficient(&self, power: u32) -> MatWordPoly {
        let mut out = Self::zero();
        for ((w, p), c) in &self.terms {
            if *p == power {
                out.add_term(w.clone(), 0, c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for ((w, p), v) in &self.terms {
            out.add_term(w.clone(), *p, v * c);
        }
        out
    }
}

impl fmt::Debug for MatWordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (t, ((w, p), c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*u^{}*{:?}", c, p, w)?;
        }
        Ok(())
    }
}

impl AddAssign<&MatWordPoly> for MatWordPoly {
    fn add_assign(&mut self, rhs: &MatWordPoly) {
        for ((w, p), c) in &rhs.terms {
            self.add_term(w.clone(), *p, c.clone());
        }
    }
}

impl SubAssign<&MatWordPoly> for MatWordPoly {
    fn sub_assign(&mut self, rhs: &MatWordPoly) {
        for ((w, p), c) in &rhs.terms {
            self.add_term(w.clone(), *p, -c);
        }
    }
}

/// Concatenation product; `u` is central.
impl Mul<&MatWordPoly> for &MatWordPoly {
    type Output = MatWordPoly;
    fn mul(self, rhs: &MatWordPoly) -> MatWordPoly {
        let mut out = MatWordPoly::zero();
        for ((w1, p1), c1) in &self.terms {
            for ((w2, p2), c2) in &rhs.terms {
                out.add_term(w1.concat(w2), p1 + p2, c1 * c2);
            }
        }
        out
    }
}

/// A matrix with entries in `T(Mat_l)[u]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MatWordPoly>,
}

impl WordMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        WordMatrix {
            rows,
            cols,
            entries: alloc::vec![MatWordPoly::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MatWordPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: MatWordPoly) {
        self.entries[r * self.cols + c] = v;
    }

    /// Rows and columns `p..=q` (0-based); empty when `p > q`.
    pub fn submatrix(&self, p: usize, q: usize) -> WordMatrix {
        if p > q {
            return WordMatrix::zeros(0, 0);
        }
        let k = q - p + 1;
        let mut out = WordMatrix::zeros(k, k);
        for r in 0..k {
            for c in 0..k {
                out.set(r, c, self.get(p + r, p + c).clone());
            }
        }
        out
    }

    /// `rdet A = sum_tau sgn(tau) a_{1,tau(1)} .. a_{l,tau(l)}`, products
    /// taken in row order. The empty matrix has `rdet = 1`.
    pub fn rdet(&self) -> Result<MatWordPoly, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = MatWordPoly::zero();
        let mut used = alloc::vec![false; self.cols];
        self.expand(0, &mut used, false, &MatWordPoly::one(), &mut out);
        Ok(out)
    }

    fn expand(&self, row: usize, used: &mut [bool], odd: bool, prefix: &MatWordPoly, out: &mut MatWordPoly) {
        if row == self.rows {
            if odd {
                *out -= prefix;
            } else {
                *out += prefix;
            }
            return;
        }
        for c in 0..self.cols {
            if used[c] || self.get(row, c).is_zero() {
                continue;
            }
            // parity of tau changes by the number of used columns right of c
            let crossings = used[c + 1..].iter().filter(|&&x| x).count();
            used[c] = true;
            let next = prefix * self.get(row, c);
            self.expand(row + 1, used, odd ^ (crossings % 2 == 1), &next, out);
            used[c] = false;
        }
    }
}

/// `A(u)`: diagonal `u + E_{c,c} + rho_c`, entries `E_{c,d}` above, `1` on
/// the subdiagonal, zero below it.
pub fn a_matrix(m: usize, n: usize, ell: usize) -> WordMatrix {
    let mut a = WordMatrix::zeros(ell, ell);
    for c in 0..ell {
        let mut diag = MatWordPoly::u();
        diag += &MatWordPoly::letter(c, c);
        diag += &MatWordPoly::scalar(rho(c + 1, m, n, ell));
        a.set(c, c, diag);
        for d in c + 1..ell {
            a.set(c, d, MatWordPoly::letter(c, d));
        }
        if c + 1 < ell {
            a.set(c + 1, c, MatWordPoly::one());
        }
    }
    a
}

/// Product of matrix units in `Mat_l`: `E_{ab} E_{cd} = delta_{bc} E_{ad}`.
pub fn unit_product(x: (usize, usize), y: (usize, usize)) -> Option<(usize, usize)> {
    (x.1 == y.0).then_some((x.0, y.1))
}
