//! PBW normal forms in the universal enveloping superalgebra `U(gl(M|N))`.
//!
//! A [`Monomial`] is a weakly increasing sequence of generator ranks (see
//! [`GeneratorOrder`](crate::gl::GeneratorOrder)) in which every odd
//! generator occurs at most once. A [`Uea`] maps monomials to nonzero
//! scalars; every constructor and operation returns it in normal form, so
//! structural equality is equality in `U(gl)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use smallvec::SmallVec;

use crate::error::AlgebraError;
use crate::gl::{BasisElement, GlSuper, GlVector, Parity};
use crate::report::{RenderedLetter, RenderedTerm};
use crate::scalar::Scalar;

pub(crate) type Letters = SmallVec<[u16; 8]>;

/// A PBW monomial; letters are generator ranks in weakly increasing order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub(crate) Letters);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Letters::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ranks(&self) -> &[u16] {
        &self.0
    }

    /// `(rank, exponent)` runs.
    pub fn runs(&self) -> Vec<(u16, u32)> {
        let mut out: Vec<(u16, u32)> = Vec::new();
        for &g in &self.0 {
            match out.last_mut() {
                Some((h, e)) if *h == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Element of `U(gl)` in PBW normal form.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Uea {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Uea {
    pub fn zero() -> Self {
        Uea::default()
    }

    pub fn one() -> Self {
        Uea::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut u = Uea::zero();
        u.add_term(Monomial::one(), c);
        u
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    /// Longest monomial length, `None` for zero.
    pub fn max_length(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::len).max()
    }

    /// Add `c * m`; `m` must already be a PBW monomial.
    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        add_into(&mut self.terms, m, &c);
    }

    pub fn scale(&self, c: &Scalar) -> Uea {
        if c.is_zero() {
            return Uea::zero();
        }
        Uea {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Keep only the terms accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Uea {
        Uea {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn from_terms(mut terms: BTreeMap<Monomial, Scalar>) -> Uea {
        terms.retain(|_, c| !c.is_zero());
        Uea { terms }
    }
}

fn add_into(terms: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        alloc::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        alloc::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl fmt::Debug for Uea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", c, m)?;
        }
        Ok(())
    }
}

impl AddAssign<&Uea> for Uea {
    fn add_assign(&mut self, rhs: &Uea) {
        for (m, c) in &rhs.terms {
            add_into(&mut self.terms, m.clone(), c);
        }
    }
}

impl SubAssign<&Uea> for Uea {
    fn sub_assign(&mut self, rhs: &Uea) {
        for (m, c) in &rhs.terms {
            add_into(&mut self.terms, m.clone(), &-c);
        }
    }
}

impl Add<&Uea> for &Uea {
    type Output = Uea;
    fn add(self, rhs: &Uea) -> Uea {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Uea> for &Uea {
    type Output = Uea;
    fn sub(self, rhs: &Uea) -> Uea {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Uea {
    type Output = Uea;
    fn neg(self) -> Uea {
        self.scale(&Scalar::from_int(-1))
    }
}

/// Rewriting strategy used by [`GlSuper::normal_form_with`].
///
/// All strategies compute the same normal form; they exist so that the
/// confluence of the rewriting system can be tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    /// Insert letters one at a time into an already sorted prefix.
    Insertion,
    /// Repeatedly rewrite the leftmost out-of-order adjacent pair.
    LeftmostDescent,
    /// Repeatedly rewrite the rightmost out-of-order adjacent pair.
    RightmostDescent,
}

impl GlSuper {
    /// The single-letter monomial `e_b`.
    pub fn letter(&self, b: BasisElement) -> Monomial {
        let mut l = Letters::new();
        l.push(self.order().rank(b));
        Monomial(l)
    }

    /// Letters of a monomial with exponents, using this algebra's labels.
    pub fn render_monomial(&self, m: &Monomial) -> Vec<RenderedLetter> {
        m.runs()
            .into_iter()
            .map(|(r, exp)| {
                let b = self.order().element(r);
                RenderedLetter {
                    row: self.label(b.row).into(),
                    col: self.label(b.col).into(),
                    exp,
                }
            })
            .collect()
    }

    pub fn render(&self, x: &Uea) -> Vec<RenderedTerm> {
        x.terms()
            .map(|(m, c)| RenderedTerm {
                factors: alloc::vec![self.render_monomial(m)],
                coeff: c.clone(),
            })
            .collect()
    }

    /// The generator `e_b` as a [`Uea`].
    pub fn generator(&self, b: BasisElement) -> Uea {
        let mut u = Uea::zero();
        let mut l = Letters::new();
        l.push(self.order().rank(b));
        u.add_term(Monomial(l), Scalar::one());
        u
    }

    /// Embed a Lie element.
    pub fn from_vector(&self, v: &GlVector) -> Uea {
        let mut u = Uea::zero();
        for (b, c) in v {
            let mut l = Letters::new();
            l.push(self.order().rank(*b));
            u.add_term(Monomial(l), c.clone());
        }
        u
    }

    /// Degree-one part of `x` as a Lie element.
    pub fn linear_part(&self, x: &Uea) -> GlVector {
        x.terms()
            .filter(|(m, _)| m.len() == 1)
            .map(|(m, c)| (self.order().element(m.0[0]), c.clone()))
            .collect()
    }

    pub fn monomial_letters<'a>(&'a self, m: &'a Monomial) -> impl Iterator<Item = BasisElement> + 'a {
        m.0.iter().map(move |&r| self.order().element(r))
    }

    pub fn monomial_parity(&self, m: &Monomial) -> Parity {
        m.0.iter()
            .fold(Parity::Even, |p, &r| p + self.rank_parity(r))
    }

    /// Parity of a homogeneous element; `None` if mixed. Zero is even.
    pub fn uea_parity(&self, x: &Uea) -> Option<Parity> {
        let mut it = x.terms().map(|(m, _)| self.monomial_parity(m));
        let first = it.next().unwrap_or(Parity::Even);
        if it.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Normal form of a word of matrix units.
    pub fn normal_form(&self, word: &[BasisElement]) -> Result<Uea, AlgebraError> {
        self.normal_form_with(word, RewriteStrategy::Insertion)
    }

    pub fn normal_form_with(&self, word: &[BasisElement], strategy: RewriteStrategy) -> Result<Uea, AlgebraError> {
        for &b in word {
            self.check(b)?;
        }
        let ranks: Letters = word.iter().map(|&b| self.order().rank(b)).collect();
        let mut out = BTreeMap::new();
        match strategy {
            RewriteStrategy::Insertion => self.mul_into(Letters::new(), &ranks, Scalar::one(), &mut out),
            RewriteStrategy::LeftmostDescent => self.rewrite(ranks, false, &mut out),
            RewriteStrategy::RightmostDescent => self.rewrite(ranks, true, &mut out),
        }
        Ok(Uea::from_terms(out))
    }

    /// Accumulate `coeff * prefix * word` into `out`, where `prefix` is a PBW
    /// monomial and `word` arbitrary.
    fn mul_into(&self, mut prefix: Letters, word: &[u16], coeff: Scalar, out: &mut BTreeMap<Monomial, Scalar>) {
        let Some((&g, rest)) = word.split_first() else {
            add_into(out, Monomial(prefix), &coeff);
            return;
        };
        let Some(&last) = prefix.last() else {
            prefix.push(g);
            return self.mul_into(prefix, rest, coeff, out);
        };
        let g_odd = self.rank_parity(g).is_odd();
        if last < g || (last == g && !g_odd) {
            prefix.push(g);
            return self.mul_into(prefix, rest, coeff, out);
        }
        if last == g {
            // odd square: x x = [x, x] / 2 = 0 for odd matrix units
            return;
        }
        // prefix' last g = (-1)^{|last||g|} prefix' g last + prefix' [last, g]
        prefix.pop();
        let swapped = if self.rank_parity(last).koszul(self.rank_parity(g)) {
            -&coeff
        } else {
            coeff.clone()
        };
        let mut moved: Letters = Letters::with_capacity(rest.len() + 2);
        moved.push(g);
        moved.push(last);
        moved.extend_from_slice(rest);
        self.mul_into(prefix.clone(), &moved, swapped, out);
        for (h, negative) in self.bracket_ranks(last, g) {
            let mut w: Letters = Letters::with_capacity(rest.len() + 1);
            w.push(h);
            w.extend_from_slice(rest);
            let c = if negative { -&coeff } else { coeff.clone() };
            self.mul_into(prefix.clone(), &w, c, out);
        }
    }

    fn rewrite(&self, word: Letters, rightmost: bool, out: &mut BTreeMap<Monomial, Scalar>) {
        let mut work: Vec<(Letters, Scalar)> = alloc::vec![(word, Scalar::one())];
        while let Some((w, c)) = work.pop() {
            let bad = |i: usize| w[i] > w[i + 1] || (w[i] == w[i + 1] && self.rank_parity(w[i]).is_odd());
            let n = w.len();
            let pos = if rightmost {
                (0..n.saturating_sub(1)).rev().find(|&i| bad(i))
            } else {
                (0..n.saturating_sub(1)).find(|&i| bad(i))
            };
            let Some(i) = pos else {
                add_into(out, Monomial(w), &c);
                continue;
            };
            let (x, y) = (w[i], w[i + 1]);
            if x == y {
                continue;
            }
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            let sc = if self.rank_parity(x).koszul(self.rank_parity(y)) {
                -&c
            } else {
                c.clone()
            };
            work.push((swapped, sc));
            for (h, negative) in self.bracket_ranks(x, y) {
                let mut shorter: Letters = Letters::with_capacity(n - 1);
                shorter.extend_from_slice(&w[..i]);
                shorter.push(h);
                shorter.extend_from_slice(&w[i + 2..]);
                work.push((shorter, if negative { -&c } else { c.clone() }));
            }
        }
    }

    /// Product in `U(gl)`.
    pub fn multiply(&self, x: &Uea, y: &Uea) -> Uea {
        let mut out = BTreeMap::new();
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                self.mul_into(mx.0.clone(), &my.0, cx * cy, &mut out);
            }
        }
        Uea::from_terms(out)
    }

    /// Product of several factors, left to right.
    pub fn multiply_all<'a>(&self, factors: impl IntoIterator<Item = &'a Uea>) -> Uea {
        let mut acc = Uea::one();
        for f in factors {
            acc = self.multiply(&acc, f);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// `[x, y] = xy - (-1)^{|x||y|} yx` for homogeneous `x`, `y`.
    pub fn supercommutator(&self, x: &Uea, y: &Uea) -> Result<Uea, AlgebraError> {
        let px = self.uea_parity(x).ok_or(AlgebraError::NotHomogeneous)?;
        let py = self.uea_parity(y).ok_or(AlgebraError::NotHomogeneous)?;
        let xy = self.multiply(x, y);
        let yx = self.multiply(y, x);
        Ok(if px.koszul(py) { &xy + &yx } else { &xy - &yx })
    }
}
