//! `(m, n)`-colored rectangles and the Lie-theoretic data they encode.
//!
//! A rectangle has `m + n` rows and `l` columns; row `i` is colored `+`
//! (even) when the `i`-th symbol of the epsilon-delta sequence is `d` and
//! `-` (odd) otherwise. The `+` boxes are numbered `1bar..Mbar` and the `-`
//! boxes `1..N`, each going down the columns from left to right. The index
//! set `J = {1bar < .. < Mbar < 1 < .. < N}` is stored as positions
//! `0..M+N` (barred first), and rows/columns are 0-based in the API.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::error::{AlgebraError, RectangleError};
use crate::gl::{BasisElement, GeneratorOrder, GlSuper, GlVector, Parity};
use crate::linalg::{self, DenseMatrix, EchelonBasis};
use crate::scalar::Scalar;
use crate::uea::{Monomial, Uea};

/// One letter of an epsilon-delta sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Delta,
    Epsilon,
}

/// A word with `m` deltas and `n` epsilons; delta rows are even.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsilonDeltaSequence(Vec<Symbol>);

impl EpsilonDeltaSequence {
    /// Parse `d`/`e` (or `δ`/`ε`) symbols.
    pub fn parse(s: &str) -> Result<Self, RectangleError> {
        s.chars()
            .map(|c| match c {
                'd' | 'D' | 'δ' => Ok(Symbol::Delta),
                'e' | 'E' | 'ε' => Ok(Symbol::Epsilon),
                other => Err(RectangleError::BadSymbol(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(EpsilonDeltaSequence)
    }

    /// `d^m e^n`.
    pub fn standard(m: usize, n: usize) -> Self {
        let mut v = alloc::vec![Symbol::Delta; m];
        v.extend(core::iter::repeat_n(Symbol::Epsilon, n));
        EpsilonDeltaSequence(v)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_delta(&self) -> usize {
        self.0.iter().filter(|&&s| s == Symbol::Delta).count()
    }

    pub fn parity(&self, i: usize) -> Parity {
        Parity::from_bit(self.0[i] == Symbol::Epsilon)
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.len()).map(|i| self.parity(i)).collect()
    }

    pub fn validate(&self, m: usize, n: usize) -> Result<(), RectangleError> {
        if self.len() == m + n && self.count_delta() == m {
            Ok(())
        } else {
            Err(RectangleError::MalformedSequence {
                seq: alloc::format!("{}", self),
                m,
                n,
            })
        }
    }
}

impl fmt::Display for EpsilonDeltaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Symbol::Delta => "d",
                Symbol::Epsilon => "e",
            })?;
        }
        Ok(())
    }
}

/// A box label: `kbar` (even) or `k` (odd), `k >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxIndex {
    pub barred: bool,
    pub ordinal: usize,
}

impl BoxIndex {
    pub fn parity(&self) -> Parity {
        Parity::from_bit(!self.barred)
    }

    /// ASCII label used in JSON: `b3` for `3bar`, `3` otherwise.
    pub fn label(&self) -> String {
        if self.barred {
            alloc::format!("b{}", self.ordinal)
        } else {
            alloc::format!("{}", self.ordinal)
        }
    }
}

impl fmt::Display for BoxIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}\u{304}", self.ordinal)
        } else {
            write!(f, "{}", self.ordinal)
        }
    }
}

/// A weakly decreasing list of positive parts.
pub type Partition = Vec<usize>;

/// Outcome of the good-grading checks for `(e(pi), h(pi))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodGradingReport {
    /// `[h, e] = 2e`.
    pub h_e_eigen: bool,
    /// `ad h` is diagonalisable on the matrix units with integer eigenvalues.
    pub integral: bool,
    /// The centre lies in `g(0)`.
    pub center_in_zero: bool,
    /// `ad e : g(j) -> g(j+2)` injective for `j <= -1`.
    pub injective: bool,
    /// `ad e : g(j) -> g(j+2)` surjective for `j >= -1`.
    pub surjective: bool,
    /// `g(j) = 0` for odd `j`.
    pub even: bool,
    /// Sorted distinct eigenvalues of `ad h`.
    pub eigenvalues: Vec<i64>,
}

impl GoodGradingReport {
    pub fn all_pass(&self) -> bool {
        self.h_e_eigen && self.integral && self.center_in_zero && self.injective && self.surjective && self.even
    }
}

/// `c^{(r)}_{ij}`, an element of the centralizer basis; `r` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerElement {
    pub i: usize,
    pub j: usize,
    pub r: usize,
    pub vector: GlVector,
}

/// Jordan data of an even nilpotent element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanType {
    pub mu: Partition,
    pub nu: Partition,
    /// All blocks share one size.
    pub rectangular: bool,
}

/// An `(m, n)`-colored rectangle of width `l` with its derived tables.
#[derive(Clone, Debug)]
pub struct ColoredRectangle {
    m: usize,
    n: usize,
    ell: usize,
    seq: EpsilonDeltaSequence,
    // J position of box (row, col), row-major
    boxes: Vec<usize>,
    row_of: Vec<usize>,
    col_of: Vec<usize>,
    labels: Vec<BoxIndex>,
    big: GlSuper,
    small: GlSuper,
}

impl ColoredRectangle {
    pub fn build(m: usize, n: usize, ell: usize, seq: EpsilonDeltaSequence) -> Result<Self, RectangleError> {
        seq.validate(m, n)?;
        let height = m + n;
        let big_dim = height * ell;
        if big_dim * big_dim > u16::MAX as usize {
            return Err(RectangleError::TooLarge);
        }
        let big_m = m * ell;
        let mut boxes = alloc::vec![0; big_dim];
        let mut row_of = alloc::vec![0; big_dim];
        let mut col_of = alloc::vec![0; big_dim];
        let mut labels = alloc::vec![BoxIndex { barred: true, ordinal: 0 }; big_dim];
        let (mut next_bar, mut next_plain) = (0usize, 0usize);
        for col in 0..ell {
            for row in 0..height {
                let pos = if seq.parity(row).is_odd() {
                    next_plain += 1;
                    labels[big_m + next_plain - 1] = BoxIndex {
                        barred: false,
                        ordinal: next_plain,
                    };
                    big_m + next_plain - 1
                } else {
                    next_bar += 1;
                    labels[next_bar - 1] = BoxIndex {
                        barred: true,
                        ordinal: next_bar,
                    };
                    next_bar - 1
                };
                boxes[row * ell + col] = pos;
                row_of[pos] = row;
                col_of[pos] = col;
            }
        }
        let parities: Vec<Parity> = labels.iter().map(BoxIndex::parity).collect();
        let label_strings = labels.iter().map(BoxIndex::label).collect();
        let col_ref = &col_of;
        // Kazhdan degree descending: p = {deg >= 1} first, m = {deg <= 0} last
        let order = GeneratorOrder::by_key(big_dim, |b| {
            let deg = col_ref[b.col] as i64 - col_ref[b.row] as i64 + 1;
            (Reverse(deg), b.row, b.col)
        });
        let big = GlSuper::new(parities, label_strings, order)?;
        let small = GlSuper::with_parities(seq.parities());
        Ok(ColoredRectangle {
            m,
            n,
            ell,
            seq,
            boxes,
            row_of,
            col_of,
            labels,
            big,
            small,
        })
    }

    /// Parse the sequence from `d`/`e` text and build.
    pub fn from_spec(m: usize, n: usize, ell: usize, seq: &str) -> Result<Self, RectangleError> {
        Self::build(m, n, ell, EpsilonDeltaSequence::parse(seq)?)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `m + n`.
    pub fn height(&self) -> usize {
        self.m + self.n
    }

    pub fn sequence(&self) -> &EpsilonDeltaSequence {
        &self.seq
    }

    /// `gl(M|N)` on `J` with the Kazhdan-descending PBW order.
    pub fn gl(&self) -> &GlSuper {
        &self.big
    }

    /// `gl(m|n)` with parities from the sequence.
    pub fn small_gl(&self) -> &GlSuper {
        &self.small
    }

    /// `M + N`.
    pub fn dim(&self) -> usize {
        self.boxes.len()
    }

    /// `i * a`: the J position in row `i`, column `a` (0-based).
    pub fn box_at(&self, row: usize, col: usize) -> usize {
        self.boxes[row * self.ell + col]
    }

    pub fn try_box_at(&self, row: usize, col: usize) -> Result<usize, RectangleError> {
        if row < self.height() && col < self.ell {
            Ok(self.box_at(row, col))
        } else {
            Err(RectangleError::OutOfRange { row, col })
        }
    }

    pub fn row(&self, j: usize) -> usize {
        self.row_of[j]
    }

    pub fn col(&self, j: usize) -> usize {
        self.col_of[j]
    }

    /// x-coordinate of the box centre with `2 x 2` boxes centred at 0:
    /// `2 col - l - 1` for 1-based `col`.
    pub fn tilde_col(&self, j: usize) -> i64 {
        2 * (self.col_of[j] as i64 + 1) - self.ell as i64 - 1
    }

    pub fn box_label(&self, j: usize) -> BoxIndex {
        self.labels[j]
    }

    /// J position of a box label.
    pub fn position_of(&self, b: BoxIndex) -> Option<usize> {
        self.labels.iter().position(|&l| l == b)
    }

    pub fn box_parity(&self, j: usize) -> Parity {
        self.big.index_parity(j)
    }

    /// Row parity `|i|` from the sequence.
    pub fn row_parity(&self, i: usize) -> Parity {
        self.seq.parity(i)
    }

    /// `deg e_{ij} = col(j) - col(i) + 1`.
    pub fn kazhdan_degree(&self, b: BasisElement) -> i64 {
        self.col_of[b.col] as i64 - self.col_of[b.row] as i64 + 1
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        self.big.monomial_letters(m).map(|b| self.kazhdan_degree(b)).sum()
    }

    /// Filtration degree: the largest monomial degree; `None` for zero.
    pub fn filtration_degree(&self, x: &Uea) -> Option<i64> {
        x.terms().map(|(m, _)| self.monomial_degree(m)).max()
    }

    pub fn in_p(&self, b: BasisElement) -> bool {
        self.col_of[b.row] <= self.col_of[b.col]
    }

    pub fn in_m(&self, b: BasisElement) -> bool {
        !self.in_p(b)
    }

    /// `e(pi) = sum e_{ij}` over boxes `i` immediately left of `j`.
    pub fn e_of(&self) -> GlVector {
        let mut v = GlVector::new();
        for row in 0..self.height() {
            for col in 1..self.ell {
                let b = BasisElement::new(self.box_at(row, col - 1), self.box_at(row, col));
                v.insert(b, Scalar::one());
            }
        }
        v
    }

    /// `h(pi) = -diag(tilde_col)` in J order.
    pub fn h_of(&self) -> GlVector {
        let mut v = GlVector::new();
        for j in 0..self.dim() {
            let c = -self.tilde_col(j);
            if c != 0 {
                v.insert(BasisElement::new(j, j), Scalar::from_int(c));
            }
        }
        v
    }

    /// `(p-basis, m-basis)`: `col(i) <= col(j)` versus `col(i) > col(j)`.
    pub fn split_p_m(&self) -> (Vec<BasisElement>, Vec<BasisElement>) {
        self.big.basis().partition(|&b| self.in_p(b))
    }

    /// `chi(e_{ij}) = (e_{ij}, e(pi))`.
    pub fn chi_basis(&self, b: BasisElement) -> Scalar {
        let (i, j) = (b.row, b.col);
        if self.row_of[i] == self.row_of[j] && self.col_of[i] == self.col_of[j] + 1 {
            Scalar::sign(self.box_parity(i).is_odd())
        } else {
            Scalar::zero()
        }
    }

    pub fn chi(&self, y: &GlVector) -> Scalar {
        let mut acc = Scalar::zero();
        for (b, c) in y {
            acc += &(c * &self.chi_basis(*b));
        }
        acc
    }

    /// Whether `alg`'s order puts every m-generator after every p-generator.
    pub fn order_is_m_last(&self, alg: &GlSuper) -> bool {
        let seq = alg.order().sequence();
        match seq.iter().position(|&b| self.in_m(b)) {
            None => true,
            Some(first_m) => seq[first_m..].iter().all(|&b| self.in_m(b)),
        }
    }

    /// Projection `U(g) -> U(p)` along `I_chi = U(g){a - chi(a) : a in m}`.
    ///
    /// With the m-last PBW order a monomial is `y a_1 .. a_k` with `y` a
    /// p-monomial and `a_t` in m, and it projects to `chi(a_1)..chi(a_k) y`.
    pub fn pr_chi(&self, x: &Uea) -> Uea {
        self.pr_chi_in(&self.big, x).expect("own order is m-last")
    }

    /// [`pr_chi`](Self::pr_chi) for an element normalised in `alg`.
    pub fn pr_chi_in(&self, alg: &GlSuper, x: &Uea) -> Result<Uea, RectangleError> {
        if alg.dim() != self.dim() || alg.parities() != self.big.parities() {
            return Err(AlgebraError::UniverseMismatch.into());
        }
        if !self.order_is_m_last(alg) {
            return Err(RectangleError::OrderNotMLast);
        }
        let mut out = Uea::zero();
        for (mono, c) in x.terms() {
            let ranks = mono.ranks();
            let split = ranks
                .iter()
                .position(|&r| self.in_m(alg.order().element(r)))
                .unwrap_or(ranks.len());
            let mut coeff = c.clone();
            for &r in &ranks[split..] {
                coeff *= &self.chi_basis(alg.order().element(r));
                if coeff.is_zero() {
                    break;
                }
            }
            if !coeff.is_zero() {
                out.add_term(Monomial(ranks[..split].into()), coeff);
            }
        }
        Ok(out)
    }

    /// Whether every letter of `x` lies in `p`.
    pub fn is_in_up(&self, x: &Uea) -> bool {
        x.terms()
            .all(|(m, _)| self.big.monomial_letters(m).all(|b| self.in_p(b)))
    }

    /// The chi-twisted action `a . y = pr_chi([a, y])`.
    pub fn twisted_action(&self, a: BasisElement, y: &Uea) -> Result<Uea, RectangleError> {
        self.big.check(a)?;
        if !self.in_m(a) {
            return Err(RectangleError::NotInM);
        }
        if !self.is_in_up(y) {
            return Err(RectangleError::NotInP);
        }
        let comm = self.big.supercommutator(&self.big.generator(a), y)?;
        Ok(self.pr_chi(&comm))
    }

    /// `c^{(r)}_{ij} = sum (-1)^{|i|} e_{hk}` over boxes `h` in row `i`, `k`
    /// in row `j` with `col(k) - col(h) = r - 1`, for `1 <= r <= l`.
    pub fn centralizer_basis(&self) -> Vec<CentralizerElement> {
        let mut out = Vec::new();
        for r in 1..=self.ell {
            for i in 0..self.height() {
                for j in 0..self.height() {
                    let sign = Scalar::sign(self.row_parity(i).is_odd());
                    let mut v = GlVector::new();
                    for a in 0..=(self.ell - r) {
                        let h = self.box_at(i, a);
                        let k = self.box_at(j, a + r - 1);
                        v.insert(BasisElement::new(h, k), sign.clone());
                    }
                    out.push(CentralizerElement { i, j, r, vector: v });
                }
            }
        }
        out
    }

    /// `dim g^e` as the nullity of `ad e`, independent of the explicit basis.
    pub fn centralizer_dimension(&self) -> usize {
        let ad = self.big.ad_matrix(&self.e_of()).expect("in range");
        self.big.basis_len() - linalg::dense_rank(&ad)
    }

    /// Number of supermonomials of Kazhdan degree `<= d` in a basis of
    /// `g^e`, reading each variable's degree and parity off the explicit
    /// centralizer basis.
    pub fn sym_dim(&self, d: usize) -> u64 {
        let vars: Vec<(usize, Parity)> = self
            .centralizer_basis()
            .iter()
            .map(|c| {
                let (&b, _) = c.vector.iter().next().expect("nonempty");
                (self.kazhdan_degree(b) as usize, self.big.parity(b))
            })
            .collect();
        count_supermonomials(&vars, d)
    }

    /// Run the good-grading checks for `(e(pi), h(pi))`.
    pub fn verify_good_grading(&self) -> GoodGradingReport {
        let g = &self.big;
        let e = self.e_of();
        let h = self.h_of();
        let h_e = g.bracket(&h, &e).expect("in range");
        let two_e: GlVector = e.iter().map(|(b, c)| (*b, c * &Scalar::from_int(2))).collect();
        let h_e_eigen = h_e == two_e;

        // ad h on matrix units
        let basis: Vec<BasisElement> = g.basis().collect();
        let mut integral = true;
        let mut eig: Vec<i64> = Vec::with_capacity(basis.len());
        for &b in &basis {
            let img = g.bracket(&h, &GlVector::from([(b, Scalar::one())])).expect("in range");
            let lambda = match img.len() {
                0 => Scalar::zero(),
                1 if img.contains_key(&b) => img[&b].clone(),
                _ => {
                    integral = false;
                    Scalar::zero()
                }
            };
            match lambda.to_i64() {
                Some(v) => eig.push(v),
                None => {
                    integral = false;
                    eig.push(0);
                }
            }
        }
        let mut eigenvalues = eig.clone();
        eigenvalues.sort_unstable();
        eigenvalues.dedup();

        let center = g.identity_vector();
        let center_in_zero = g.bracket(&h, &center).expect("in range").is_empty();
        let even = eigenvalues.iter().all(|v| v % 2 == 0);

        let graded = |j: i64| -> Vec<usize> { (0..basis.len()).filter(|&k| eig[k] == j).collect() };
        let ad_e = g.ad_matrix(&e).expect("in range");
        let lo = eigenvalues.first().copied().unwrap_or(0);
        let hi = eigenvalues.last().copied().unwrap_or(0);
        let mut injective = true;
        let mut surjective = true;
        for j in (lo - 2)..=(hi + 2) {
            let src = graded(j);
            let dst = graded(j + 2);
            // ad e must map g(j) into g(j+2)
            let all_rows: Vec<usize> = (0..basis.len()).collect();
            let full = ad_e.select(&all_rows, &src);
            for (row, _) in basis.iter().enumerate() {
                if dst.contains(&row) {
                    continue;
                }
                if full.row_entries(row).any(|(_, v)| !v.is_zero()) {
                    injective = false;
                    surjective = false;
                }
            }
            let rank = linalg::dense_rank(&ad_e.select(&dst, &src));
            if j <= -1 && rank != src.len() {
                injective = false;
            }
            if j >= -1 && rank != dst.len() {
                surjective = false;
            }
        }
        GoodGradingReport {
            h_e_eigen,
            integral,
            center_in_zero,
            injective,
            surjective,
            even,
            eigenvalues,
        }
    }
}

/// Count supermonomials of total degree `<= d`; each variable is
/// `(degree, parity)`, odd variables appear at most once.
pub fn count_supermonomials(vars: &[(usize, Parity)], d: usize) -> u64 {
    // ways[k] = number of monomials of degree exactly k
    let mut ways = alloc::vec![0u64; d + 1];
    ways[0] = 1;
    for &(deg, parity) in vars {
        if deg == 0 || deg > d {
            continue;
        }
        if parity.is_odd() {
            for k in (deg..=d).rev() {
                ways[k] += ways[k - deg];
            }
        } else {
            for k in deg..=d {
                ways[k] += ways[k - deg];
            }
        }
    }
    ways.iter().sum()
}

/// Jordan type of an even nilpotent `x` on `C^{M|N}` (the parities of `alg`
/// say which coordinates are even).
pub fn jordan_type(alg: &GlSuper, x: &GlVector) -> Result<JordanType, AlgebraError> {
    for b in x.keys() {
        alg.check(*b)?;
        if alg.parity(*b).is_odd() {
            return Err(AlgebraError::NotEven);
        }
    }
    let mat = alg.to_matrix(x);
    let evens: Vec<usize> = (0..alg.dim()).filter(|&i| !alg.index_parity(i).is_odd()).collect();
    let odds: Vec<usize> = (0..alg.dim()).filter(|&i| alg.index_parity(i).is_odd()).collect();
    let mu = block_partition(&mat.select(&evens, &evens))?;
    let nu = block_partition(&mat.select(&odds, &odds))?;
    let sizes: Vec<usize> = mu.iter().chain(nu.iter()).copied().collect();
    let rectangular = sizes.windows(2).all(|w| w[0] == w[1]);
    Ok(JordanType { mu, nu, rectangular })
}

/// Jordan block sizes of a nilpotent square matrix, from the ranks of its
/// powers.
fn block_partition(a: &DenseMatrix) -> Result<Partition, AlgebraError> {
    let n = a.rows();
    if n == 0 {
        return Ok(Partition::new());
    }
    let mut ranks = alloc::vec![n];
    let mut power = DenseMatrix::identity(n);
    for _ in 0..n {
        power = power.mul(a);
        ranks.push(linalg::dense_rank(&power));
    }
    if ranks[n] != 0 {
        return Err(AlgebraError::NotNilpotent);
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    let at_least: Vec<usize> = (1..=n).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut parts = Partition::new();
    for k in (1..=n).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        parts.extend(core::iter::repeat_n(k, exactly));
    }
    Ok(parts)
}

/// Rank of a family of Lie elements.
pub fn vector_rank<'a>(vs: impl IntoIterator<Item = &'a GlVector>) -> usize {
    let mut basis = EchelonBasis::new();
    for v in vs {
        basis.insert(v.iter());
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn worked_example() -> ColoredRectangle {
        ColoredRectangle::from_spec(2, 3, 4, "dedee").unwrap()
    }

    fn pos(r: &ColoredRectangle, barred: bool, ordinal: usize) -> usize {
        r.position_of(BoxIndex { barred, ordinal }).unwrap()
    }

    #[test]
    fn worked_example_tables() {
        let r = worked_example();
        assert_eq!(r.tilde_col(pos(&r, true, 1)), -3);
        assert_eq!(r.tilde_col(pos(&r, false, 8)), 1);
        // box(2,2) = 4 and box(3,4) = 8bar (1-based)
        assert_eq!(r.box_label(r.box_at(1, 1)), BoxIndex { barred: false, ordinal: 4 });
        assert_eq!(r.box_label(r.box_at(2, 3)), BoxIndex { barred: true, ordinal: 8 });
        // first column reads 1bar, 1, 2bar, 2, 3 top to bottom
        let col0: Vec<String> = (0..5).map(|i| r.box_label(r.box_at(i, 0)).label()).collect();
        assert_eq!(col0, ["b1", "1", "b2", "2", "3"]);
        for j in 0..r.dim() {
            assert_eq!(r.tilde_col(j), 2 * (r.col(j) as i64 + 1) - 4 - 1);
        }
    }

    #[test]
    fn single_box() {
        let r = ColoredRectangle::from_spec(1, 0, 1, "d").unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.box_label(0), BoxIndex { barred: true, ordinal: 1 });
        assert_eq!(r.tilde_col(0), 0);
    }

    #[test]
    fn malformed_sequences() {
        assert!(matches!(
            ColoredRectangle::from_spec(1, 1, 2, "dd"),
            Err(RectangleError::MalformedSequence { .. })
        ));
        assert_eq!(
            ColoredRectangle::from_spec(1, 1, 2, "dx").unwrap_err(),
            RectangleError::BadSymbol('x')
        );
    }

    #[test]
    fn e_and_h_small_cases() {
        let r = ColoredRectangle::from_spec(1, 1, 1, "de").unwrap();
        assert!(r.e_of().is_empty());
        assert!(r.h_of().is_empty());
        let r = ColoredRectangle::from_spec(1, 1, 2, "de").unwrap();
        // J = (1bar, 2bar, 1, 2); e = e_{1bar,2bar} + e_{1,2}
        let e = r.e_of();
        assert_eq!(e.len(), 2);
        assert!(e.contains_key(&BasisElement::new(0, 1)));
        assert!(e.contains_key(&BasisElement::new(2, 3)));
        let h = r.h_of();
        let diag: Vec<i64> = (0..4)
            .map(|j| h.get(&BasisElement::new(j, j)).and_then(Scalar::to_i64).unwrap_or(0))
            .collect();
        assert_eq!(diag, [1, -1, 1, -1]);
    }

    #[test]
    fn e_has_nilpotency_order_ell() {
        let r = ColoredRectangle::from_spec(2, 1, 3, "dde").unwrap();
        let e = r.gl().to_matrix(&r.e_of());
        assert!(e.pow(3).unwrap().is_zero());
        assert!(!e.pow(2).unwrap().is_zero());
    }

    #[test]
    fn h_e_is_two_e_on_worked_example() {
        let r = worked_example();
        let he = r.gl().bracket(&r.h_of(), &r.e_of()).unwrap();
        let two_e: GlVector = r.e_of().into_keys().map(|b| (b, Scalar::from_int(2))).collect();
        assert_eq!(he, two_e);
    }

    #[test]
    fn good_grading_small_rectangles() {
        for (m, n, l, s) in [(1, 1, 1, "de"), (1, 1, 2, "de"), (2, 1, 2, "dde"), (1, 2, 3, "ede")] {
            let r = ColoredRectangle::from_spec(m, n, l, s).unwrap();
            let rep = r.verify_good_grading();
            assert!(rep.all_pass(), "{:?}", rep);
        }
        let r = ColoredRectangle::from_spec(2, 1, 2, "dde").unwrap();
        assert_eq!(r.verify_good_grading().eigenvalues, [-2, 0, 2]);
    }

    #[test]
    fn ad_h_eigenvalue_formula() {
        let r = ColoredRectangle::from_spec(1, 2, 3, "ede").unwrap();
        let h = r.h_of();
        for b in r.gl().basis() {
            let img = r.gl().bracket(&h, &GlVector::from([(b, Scalar::one())])).unwrap();
            let want = 2 * (r.col(b.col) as i64 - r.col(b.row) as i64);
            let got = img.get(&b).and_then(Scalar::to_i64).unwrap_or(0);
            assert_eq!(got, want);
        }
    }

    #[test]
    fn p_m_sizes() {
        let r = ColoredRectangle::from_spec(1, 1, 2, "de").unwrap();
        let (p, m) = r.split_p_m();
        assert_eq!((p.len(), m.len()), (12, 4));
        let r1 = ColoredRectangle::from_spec(2, 1, 1, "dde").unwrap();
        let (p, m) = r1.split_p_m();
        assert_eq!((p.len(), m.len()), (9, 0));
        let r3 = ColoredRectangle::from_spec(2, 1, 3, "ded").unwrap();
        let (p, m) = r3.split_p_m();
        assert_eq!((p.len(), m.len()), (9 * 6, 9 * 3));
    }

    #[test]
    fn m_is_a_subalgebra() {
        let r = ColoredRectangle::from_spec(1, 1, 3, "ed").unwrap();
        let (_, m) = r.split_p_m();
        for &a in &m {
            for &b in &m {
                for (c, _) in r.gl().bracket_basis(a, b).unwrap() {
                    assert!(r.in_m(c));
                }
            }
        }
    }

    #[test]
    fn chi_values() {
        let r = worked_example();
        let e41 = BasisElement::new(pos(&r, false, 4), pos(&r, false, 1));
        assert_eq!(r.chi_basis(e41), Scalar::from_int(-1));
        assert!(r.chi(&r.h_of()).is_zero());
        for b in r.gl().basis() {
            let via_form = r.gl().str_form(&GlVector::from([(b, Scalar::one())]), &r.e_of());
            assert_eq!(r.chi_basis(b), via_form);
            if !r.chi_basis(b).is_zero() {
                assert!(!r.gl().parity(b).is_odd());
                assert_eq!(r.kazhdan_degree(b), 0);
            }
        }
    }

    #[test]
    fn pr_chi_examples() {
        let r = worked_example();
        let g = r.gl();
        let e41 = BasisElement::new(pos(&r, false, 4), pos(&r, false, 1));
        let e11 = BasisElement::new(pos(&r, true, 1), pos(&r, true, 1));
        let x = g.normal_form(&[e41, e11]).unwrap();
        assert_eq!(r.pr_chi(&x), -&g.generator(e11));
        // U(p) is fixed
        let y = g.normal_form(&[e11, BasisElement::new(pos(&r, true, 1), pos(&r, true, 3))]).unwrap();
        assert_eq!(r.pr_chi(&y), y);
    }

    #[test]
    fn pr_chi_kills_the_left_ideal() {
        let r = ColoredRectangle::from_spec(1, 1, 2, "de").unwrap();
        let g = r.gl();
        let (p, m) = r.split_p_m();
        for &a in &m {
            let shifted = &g.generator(a) - &Uea::scalar(r.chi_basis(a));
            for &y in p.iter().take(6) {
                let yv = g.generator(y);
                let x = g.multiply(&yv, &shifted);
                assert!(r.pr_chi(&x).is_zero());
                // projection is idempotent
                let w = g.multiply(&shifted, &yv);
                assert_eq!(r.pr_chi(&r.pr_chi(&w)), r.pr_chi(&w));
            }
        }
    }

    #[test]
    fn pr_chi_rejects_m_first_order() {
        let r = ColoredRectangle::from_spec(1, 1, 2, "de").unwrap();
        let alg = r.gl().reordered(GeneratorOrder::lexicographic(4)).unwrap();
        assert_eq!(r.pr_chi_in(&alg, &Uea::one()), Err(RectangleError::OrderNotMLast));
    }

    #[test]
    fn twisted_action_basics() {
        let r = ColoredRectangle::from_spec(1, 1, 2, "de").unwrap();
        let (p, m) = r.split_p_m();
        for &a in &m {
            assert!(r.twisted_action(a, &Uea::one()).unwrap().is_zero());
        }
        assert_eq!(r.twisted_action(p[0], &Uea::one()), Err(RectangleError::NotInM));
        let outside = r.gl().generator(m[0]);
        assert_eq!(r.twisted_action(m[0], &outside), Err(RectangleError::NotInP));
    }

    #[test]
    fn centralizer_small() {
        let r = ColoredRectangle::from_spec(1, 1, 2, "de").unwrap();
        let c = r.centralizer_basis();
        assert_eq!(c.len(), 8);
        assert_eq!(r.centralizer_dimension(), 8);
        assert_eq!(vector_rank(c.iter().map(|x| &x.vector)), 8);
        let r1 = ColoredRectangle::from_spec(2, 1, 1, "ded").unwrap();
        for c in r1.centralizer_basis() {
            let want = BasisElement::new(r1.box_at(c.i, 0), r1.box_at(c.j, 0));
            let sign = Scalar::sign(r1.row_parity(c.i).is_odd());
            assert_eq!(c.vector, GlVector::from([(want, sign)]));
        }
    }

    #[test]
    fn centralizer_commutes_with_e() {
        let r = ColoredRectangle::from_spec(2, 1, 2, "dde").unwrap();
        let e = r.e_of();
        for c in r.centralizer_basis() {
            assert!(r.gl().bracket(&c.vector, &e).unwrap().is_empty());
            for b in c.vector.keys() {
                assert_eq!(r.kazhdan_degree(*b), c.r as i64);
            }
        }
    }

    #[test]
    fn kazhdan_degrees() {
        let r = worked_example();
        let d = BasisElement::new(pos(&r, true, 1), pos(&r, true, 1));
        assert_eq!(r.kazhdan_degree(d), 1);
        let far = BasisElement::new(pos(&r, true, 1), pos(&r, true, 8));
        assert_eq!(r.kazhdan_degree(far), 4);
        for b in r.gl().basis() {
            assert!(r.kazhdan_degree(b) >= 2 - 4);
            if r.in_m(b) {
                assert!(r.kazhdan_degree(b) <= 0);
            }
        }
    }

    #[test]
    fn sym_dim_small() {
        let r = ColoredRectangle::from_spec(1, 1, 2, "de").unwrap();
        assert_eq!(r.sym_dim(0), 1);
        assert_eq!(r.sym_dim(1), 5);
    }

    #[test]
    fn jordan_types() {
        let g23 = GlSuper::with_parities(vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd, Parity::Odd]);
        let jt = jordan_type(&g23, &GlVector::new()).unwrap();
        assert_eq!(jt.mu, [1, 1]);
        assert_eq!(jt.nu, [1, 1, 1]);
        assert!(jt.rectangular);

        let r = worked_example();
        let jt = jordan_type(r.gl(), &r.e_of()).unwrap();
        assert_eq!(jt.mu, [4, 4]);
        assert_eq!(jt.nu, [4, 4, 4]);
        assert!(jt.rectangular);

        let g3 = GlSuper::with_parities(vec![Parity::Even; 3]);
        let j21 = GlVector::from([(BasisElement::new(0, 1), Scalar::one())]);
        let jt = jordan_type(&g3, &j21).unwrap();
        assert_eq!(jt.mu, [2, 1]);
        assert!(!jt.rectangular);

        let not_nil = GlVector::from([(BasisElement::new(0, 0), Scalar::one())]);
        assert_eq!(jordan_type(&g3, &not_nil), Err(AlgebraError::NotNilpotent));
        let odd = GlVector::from([(BasisElement::new(0, 2), Scalar::one())]);
        assert_eq!(jordan_type(&g23, &odd), Err(AlgebraError::NotEven));
    }

    #[test]
    fn supermonomial_counting() {
        // two even degree-1 variables and one odd: degree <= 2
        let vars = [(1, Parity::Even), (1, Parity::Even), (1, Parity::Odd)];
        // 1 + 3 + (x^2, y^2, xy, xz, yz) = 9
        assert_eq!(count_supermonomials(&vars, 2), 9);
    }
}
