//! Tensor powers `U(gl(m|n))^{(x) l}` with the Koszul sign rule.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{AddAssign, Sub, SubAssign};

use crate::error::AlgebraError;
use crate::gl::{BasisElement, GlSuper, Parity};
use crate::report::RenderedTerm;
use crate::scalar::Scalar;
use crate::uea::{Monomial, Uea};

/// Element of the `l`-fold tensor power; each key holds one PBW monomial per
/// factor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    factors: usize,
    terms: BTreeMap<Vec<Monomial>, Scalar>,
}

impl TensorElement {
    pub fn zero(factors: usize) -> Self {
        TensorElement {
            factors,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(factors: usize) -> Self {
        Self::scalar(factors, Scalar::one())
    }

    pub fn scalar(factors: usize, c: Scalar) -> Self {
        let mut t = Self::zero(factors);
        t.add_term(alloc::vec![Monomial::one(); factors], c);
        t
    }

    pub fn factors(&self) -> usize {
        self.factors
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Scalar)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, key: Vec<Monomial>, c: Scalar) {
        debug_assert_eq!(key.len(), self.factors);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.factors);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        out
    }

    /// `x (x) self`: prepend a factor (no sign, this is the tensor symbol,
    /// not a product).
    pub fn prepend(&self, x: &Uea) -> TensorElement {
        let mut out = TensorElement::zero(self.factors + 1);
        for (mx, cx) in x.terms() {
            for (k, c) in &self.terms {
                let mut key = Vec::with_capacity(self.factors + 1);
                key.push(mx.clone());
                key.extend(k.iter().cloned());
                out.add_term(key, cx * c);
            }
        }
        out
    }

    /// Total number of generator letters in the longest term.
    pub fn max_total_length(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.iter().map(Monomial::len).sum()).max()
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*", c)?;
            for (i, m) in k.iter().enumerate() {
                if i > 0 {
                    write!(f, "(x)")?;
                }
                write!(f, "{:?}", m)?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&TensorElement> for TensorElement {
    fn add_assign(&mut self, rhs: &TensorElement) {
        assert_eq!(self.factors, rhs.factors, "tensor factor counts differ");
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl SubAssign<&TensorElement> for TensorElement {
    fn sub_assign(&mut self, rhs: &TensorElement) {
        assert_eq!(self.factors, rhs.factors, "tensor factor counts differ");
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

/// The superalgebra `U(g)^{(x) l}` for a fixed `g`.
#[derive(Clone, Debug)]
pub struct TensorPower {
    factor: GlSuper,
    ell: usize,
}

impl TensorPower {
    pub fn new(factor: GlSuper, ell: usize) -> Self {
        TensorPower { factor, ell }
    }

    pub fn factor(&self) -> &GlSuper {
        &self.factor
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn zero(&self) -> TensorElement {
        TensorElement::zero(self.ell)
    }

    pub fn unit(&self) -> TensorElement {
        TensorElement::unit(self.ell)
    }

    /// `1 (x) .. (x) x (x) .. (x) 1` with `x` in factor `slot` (0-based).
    pub fn embed(&self, slot: usize, x: &Uea) -> TensorElement {
        let mut out = self.zero();
        for (m, c) in x.terms() {
            let mut key = alloc::vec![Monomial::one(); self.ell];
            key[slot] = m.clone();
            out.add_term(key, c.clone());
        }
        out
    }

    /// `e^{[slot]}_{b}`.
    pub fn embed_generator(&self, slot: usize, b: BasisElement) -> TensorElement {
        self.embed(slot, &self.factor.generator(b))
    }

    fn key_parities(&self, key: &[Monomial]) -> Vec<Parity> {
        key.iter().map(|m| self.factor.monomial_parity(m)).collect()
    }

    pub fn parity(&self, x: &TensorElement) -> Option<Parity> {
        let mut it = x.terms().map(|(k, _)| {
            self.key_parities(k)
                .into_iter()
                .fold(Parity::Even, |a, p| a + p)
        });
        let first = it.next().unwrap_or(Parity::Even);
        if it.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    /// `(x_1 (x) .. (x) x_l)(y_1 (x) .. (x) y_l)
    ///  = (-1)^{sum_{t<s} |y_t||x_s|} x_1 y_1 (x) .. (x) x_l y_l`.
    pub fn multiply(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement, AlgebraError> {
        if a.factors != self.ell {
            return Err(AlgebraError::FactorMismatch(a.factors, self.ell));
        }
        if b.factors != self.ell {
            return Err(AlgebraError::FactorMismatch(b.factors, self.ell));
        }
        let mut out = self.zero();
        for (ka, ca) in a.terms() {
            let pa = self.key_parities(ka);
            for (kb, cb) in b.terms() {
                let pb = self.key_parities(kb);
                // y_t crosses x_s for every s > t
                let mut odd = false;
                let mut x_tail_odd = false;
                for t in (0..self.ell).rev() {
                    if pb[t].is_odd() && x_tail_odd {
                        odd = !odd;
                    }
                    if pa[t].is_odd() {
                        x_tail_odd = !x_tail_odd;
                    }
                }
                let mut coeff = ca * cb;
                if odd {
                    coeff = -coeff;
                }
                // factorwise products, then expand the Cartesian product
                let mut partial: Vec<(Vec<Monomial>, Scalar)> = alloc::vec![(Vec::with_capacity(self.ell), coeff)];
                for t in 0..self.ell {
                    let prod = self.factor.multiply(&monomial_uea(&ka[t]), &monomial_uea(&kb[t]));
                    if prod.is_zero() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (key, c) in &partial {
                        for (m, cm) in prod.terms() {
                            let mut k2 = key.clone();
                            k2.push(m.clone());
                            next.push((k2, c * cm));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, c);
                }
            }
        }
        Ok(out)
    }

    pub fn render(&self, x: &TensorElement) -> Vec<RenderedTerm> {
        x.terms()
            .map(|(k, c)| RenderedTerm {
                factors: k.iter().map(|m| self.factor.render_monomial(m)).collect(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn supercommutator(&self, a: &TensorElement, b: &TensorElement) -> Result<TensorElement, AlgebraError> {
        let pa = self.parity(a).ok_or(AlgebraError::NotHomogeneous)?;
        let pb = self.parity(b).ok_or(AlgebraError::NotHomogeneous)?;
        let ab = self.multiply(a, b)?;
        let ba = self.multiply(b, a)?;
        let mut out = ab;
        if pa.koszul(pb) {
            out += &ba;
        } else {
            out -= &ba;
        }
        Ok(out)
    }
}

fn monomial_uea(m: &Monomial) -> Uea {
    let mut u = Uea::zero();
    u.add_term(m.clone(), Scalar::one());
    u
}
