//! The finite W-superalgebra side: shifted matrix units, the map
//! `t_{ij} : T(Mat_l) -> U(g)`, the explicit generators `t^{(r)}_{ij}` in
//! `U(p)` and the map `mu : U(p) -> U(gl(m|n))^{(x) l}`.
//!
//! Row indices `i, j` are 0-based rows of the rectangle; box indices are J
//! positions as in [`ColoredRectangle`].

mod checks;
mod words;

pub use words::{a_matrix, rho, unit_product, MatSymbolWord, MatWordPoly, WordMatrix};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::RectangleError;
use crate::gl::{BasisElement, GlSuper, GlVector};
use crate::rectangle::ColoredRectangle;
use crate::scalar::Scalar;
use crate::tensor::TensorElement;
use crate::uea::Uea;
use crate::yangian::{GeneratorFamily, Yangian};

/// `t^{(r)}_{ij}` as an element of `U(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WGenerator {
    pub i: usize,
    pub j: usize,
    pub r: usize,
    pub value: Uea,
}

/// A rectangle together with its Yangian and the expanded `rdet A(u)`.
#[derive(Clone, Debug)]
pub struct WAlgebra {
    rect: ColoredRectangle,
    yangian: Yangian,
    rdet_a: MatWordPoly,
}

impl WAlgebra {
    pub fn new(rect: ColoredRectangle) -> Self {
        let yangian = Yangian::from_rectangle(&rect);
        let rdet_a = a_matrix(rect.m(), rect.n(), rect.ell())
            .rdet()
            .expect("A(u) is square");
        WAlgebra { rect, yangian, rdet_a }
    }

    pub fn rectangle(&self) -> &ColoredRectangle {
        &self.rect
    }

    pub fn yangian(&self) -> &Yangian {
        &self.yangian
    }

    /// `U(gl(M|N))` with the Kazhdan-descending order.
    pub fn gl(&self) -> &GlSuper {
        self.rect.gl()
    }

    pub fn height(&self) -> usize {
        self.rect.height()
    }

    pub fn ell(&self) -> usize {
        self.rect.ell()
    }

    /// `rho` of the column of box `j`.
    pub fn rho_of_box(&self, j: usize) -> Scalar {
        rho(self.rect.col(j) + 1, self.rect.m(), self.rect.n(), self.rect.ell())
    }

    /// `(-1)^{col j - col i} (e_{ij} + delta_{ij} (-1)^{|i|} rho_{col i})`
    /// for boxes `i, j`.
    pub fn tilde_e(&self, i: usize, j: usize) -> Uea {
        let g = self.gl();
        let mut x = g.generator(BasisElement::new(i, j));
        if i == j {
            let shift = self.rho_of_box(i) * Scalar::sign(g.index_parity(i).is_odd());
            x += &Uea::scalar(shift);
        }
        let flip = (self.rect.col(j) as i64 - self.rect.col(i) as i64).rem_euclid(2) == 1;
        if flip {
            -&x
        } else {
            x
        }
    }

    /// Right side of the bracket identity for `[tilde e_{ij}, tilde e_{hk}]`.
    pub fn etilrel_rhs(&self, i: usize, j: usize, h: usize, k: usize) -> Uea {
        let g = self.gl();
        let par = |x: usize| g.index_parity(x);
        let mut out = Uea::zero();
        if h == j {
            let mut a = self.tilde_e(i, k);
            if i == k {
                a -= &Uea::scalar(self.rho_of_box(i) * Scalar::sign(par(i).is_odd()));
            }
            out += &a;
        }
        if i == k {
            let mut b = self.tilde_e(h, j);
            if h == j {
                b -= &Uea::scalar(self.rho_of_box(j) * Scalar::sign(par(j).is_odd()));
            }
            let negate = !(par(i) + par(j)).koszul(par(h) + par(k));
            if negate {
                out -= &b;
            } else {
                out += &b;
            }
        }
        out
    }

    /// `t_{ij}(E_{a,b}) = (-1)^{|i|} e_{i*a, j*b}` (rows and columns 0-based).
    pub fn t_letter(&self, i: usize, j: usize, a: usize, b: usize) -> Uea {
        let g = self.gl();
        let x = g.generator(BasisElement::new(self.rect.box_at(i, a), self.rect.box_at(j, b)));
        if self.rect.row_parity(i).is_odd() {
            -&x
        } else {
            x
        }
    }

    /// `t_{i,k}(w)` for every `k`, summing over intermediate rows.
    pub fn t_word_row(&self, i: usize, w: &MatSymbolWord) -> Vec<Uea> {
        let h = self.height();
        let g = self.gl();
        let mut state: Vec<Uea> = (0..h).map(|k| if k == i { Uea::one() } else { Uea::zero() }).collect();
        for (a, b) in w.letters() {
            let mut next = alloc::vec![Uea::zero(); h];
            for (k, s) in state.iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                for (k2, slot) in next.iter_mut().enumerate() {
                    *slot += &g.multiply(s, &self.t_letter(k, k2, a, b));
                }
            }
            state = next;
        }
        state
    }

    /// `t_{ij}(x)` as a polynomial in `u`: entry `p` is the coefficient of
    /// `u^p`.
    pub fn t_map(&self, i: usize, j: usize, x: &MatWordPoly) -> Vec<Uea> {
        self.t_map_row(i, x).swap_remove(j)
    }

    /// `t_{ik}(x)` for all `k`.
    pub fn t_map_row(&self, i: usize, x: &MatWordPoly) -> Vec<Vec<Uea>> {
        let h = self.height();
        let len = x.u_degree().map_or(0, |d| d as usize + 1);
        let mut out = alloc::vec![alloc::vec![Uea::zero(); len]; h];
        let mut cache: BTreeMap<&MatSymbolWord, Vec<Uea>> = BTreeMap::new();
        for (w, p, c) in x.terms() {
            let vals = cache.entry(w).or_insert_with(|| self.t_word_row(i, w));
            for (k, v) in vals.iter().enumerate() {
                out[k][p as usize] += &v.scale(c);
            }
        }
        out
    }

    pub fn a_matrix(&self) -> WordMatrix {
        a_matrix(self.rect.m(), self.rect.n(), self.rect.ell())
    }

    /// `rdet A(u)`, fully expanded in `T(Mat_l)[u]`.
    pub fn rdet_a(&self) -> &MatWordPoly {
        &self.rdet_a
    }

    /// `t^{(r)}_{ij}` by the path sum over box chains
    /// `col(i_1) <= col(j_1) < col(i_2) <= .. <= col(j_s)` with consecutive
    /// rows matching, `row(i_1) = i`, `row(j_s) = j` and total Kazhdan
    /// degree `r`.
    pub fn w_gen_pathsum(&self, i: usize, j: usize, r: usize) -> Uea {
        if r == 0 {
            return if i == j { Uea::one() } else { Uea::zero() };
        }
        if r > self.ell() {
            return Uea::zero();
        }
        let mut memo = BTreeMap::new();
        self.chains(i, 0, r, j, &mut memo)
    }

    /// Sum over chains starting in row `k` at a column `>= c` with degree
    /// `rem`, ending in row `j`.
    fn chains(&self, k: usize, c: usize, rem: usize, j: usize, memo: &mut BTreeMap<(usize, usize, usize), Uea>) -> Uea {
        if rem == 0 {
            return if k == j { Uea::one() } else { Uea::zero() };
        }
        if let Some(v) = memo.get(&(k, c, rem)) {
            return v.clone();
        }
        let g = self.gl();
        let ell = self.ell();
        let sign = Scalar::sign(self.rect.row_parity(k).is_odd());
        let mut out = Uea::zero();
        for a in c..ell {
            for b in a..ell.min(a + rem) {
                let used = b - a + 1;
                for k2 in 0..self.height() {
                    let tail = self.chains(k2, b + 1, rem - used, j, memo);
                    if tail.is_zero() {
                        continue;
                    }
                    let head = self.tilde_e(self.rect.box_at(k, a), self.rect.box_at(k2, b));
                    out += &g.multiply(&head, &tail).scale(&sign);
                }
            }
        }
        memo.insert((k, c, rem), out.clone());
        out
    }

    /// `t^{(r)}_{ij}` as the `u^{l-r}` coefficient of `t_{ij}(rdet A(u))`.
    pub fn w_gen_rdet(&self, i: usize, j: usize, r: usize) -> Uea {
        if r > self.ell() {
            return Uea::zero();
        }
        let mut coeffs = self.t_map(i, j, &self.rdet_a);
        let p = self.ell() - r;
        if p < coeffs.len() {
            coeffs.swap_remove(p)
        } else {
            Uea::zero()
        }
    }

    /// All `t^{(r)}_{ij}` by the rdet route, one `t_map` per row.
    pub fn w_family_rdet(&self) -> GeneratorFamily<Uea> {
        let rows: Vec<Vec<Vec<Uea>>> = (0..self.height()).map(|i| self.t_map_row(i, &self.rdet_a)).collect();
        let ell = self.ell();
        GeneratorFamily::build(self.yangian.parities().to_vec(), ell, Uea::zero(), Uea::one(), |k| {
            rows[k.i][k.j].get(ell - k.r).cloned().unwrap_or_default()
        })
    }

    /// All `t^{(r)}_{ij}` by the path sum.
    pub fn w_family(&self) -> GeneratorFamily<Uea> {
        GeneratorFamily::build(self.yangian.parities().to_vec(), self.ell(), Uea::zero(), Uea::one(), |k| {
            self.w_gen_pathsum(k.i, k.j, k.r)
        })
    }

    /// The generators with `1 <= r <= l`.
    pub fn w_generators(&self) -> Vec<WGenerator> {
        let fam = self.w_family();
        fam.keys()
            .map(|k| WGenerator {
                i: k.i,
                j: k.j,
                r: k.r,
                value: fam.get(k).expect("in range").clone(),
            })
            .collect()
    }

    /// Image of a letter of `U(p)` under `mu`: zero off the block
    /// diagonal, otherwise `e^{[c]}_{ab} - delta_{ab} (-1)^{|a|} rho_c`.
    pub fn mu_letter(&self, b: BasisElement) -> TensorElement {
        let t = self.yangian.tensor();
        let (ci, cj) = (self.rect.col(b.row), self.rect.col(b.col));
        if ci != cj {
            return t.zero();
        }
        let (ri, rj) = (self.rect.row(b.row), self.rect.row(b.col));
        let mut x = t.embed_generator(ci, BasisElement::new(ri, rj));
        if ri == rj {
            let shift = self.rho_of_box(b.row) * Scalar::sign(self.rect.row_parity(ri).is_odd());
            x -= &TensorElement::scalar(self.ell(), shift);
        }
        x
    }

    /// `mu = eta o xi` on `U(p)`.
    pub fn mu(&self, x: &Uea) -> Result<TensorElement, RectangleError> {
        if !self.rect.is_in_up(x) {
            return Err(RectangleError::NotInP);
        }
        let g = self.gl();
        let t = self.yangian.tensor();
        let mut letters: BTreeMap<BasisElement, TensorElement> = BTreeMap::new();
        let mut out = t.zero();
        'terms: for (m, c) in x.terms() {
            let mut acc = TensorElement::scalar(self.ell(), c.clone());
            for b in g.monomial_letters(m) {
                if self.rect.col(b.row) != self.rect.col(b.col) {
                    continue 'terms;
                }
                let img = letters.entry(b).or_insert_with(|| self.mu_letter(b));
                acc = t.multiply(&acc, img)?;
                if acc.is_zero() {
                    continue 'terms;
                }
            }
            out += &acc;
        }
        Ok(out)
    }

    /// Kazhdan-degree-`r` part of the linear terms of `x`.
    pub fn linear_part_of_degree(&self, x: &Uea, r: usize) -> GlVector {
        self.gl()
            .linear_part(x)
            .into_iter()
            .filter(|(b, _)| self.rect.kazhdan_degree(*b) == r as i64)
            .collect()
    }

    /// `[t_{ij}(x), t_{hk}(y_1 (x) .. (x) y_r)]` and the expansion in terms
    /// of matrix products; `x` and the `y_s` are matrix units.
    pub fn detcomp1_sides(
        &self,
        (i, j, h, k): (usize, usize, usize, usize),
        x: (usize, usize),
        ys: &[(usize, usize)],
    ) -> (Uea, Uea) {
        let g = self.gl();
        let tx = self.t_word_row(i, &MatSymbolWord::letter(x.0, x.1)).swap_remove(j);
        let ty = self.t_word_row(h, &MatSymbolWord::from_letters(ys)).swap_remove(k);
        let lhs = g.supercommutator(&tx, &ty).expect("homogeneous");

        let p = |q: usize| self.rect.row_parity(q).is_odd();
        let negative = (p(i) && p(j)) ^ (p(i) && p(h)) ^ (p(j) && p(h));
        let t = |a: usize, b: usize, w: Option<Vec<(usize, usize)>>| -> Uea {
            match w {
                None => Uea::zero(),
                Some(w) => self.t_word_row(a, &MatSymbolWord::from_letters(&w)).swap_remove(b),
            }
        };
        let mut rhs = Uea::zero();
        for s in 0..ys.len() {
            // t_hj(y_1..y_{s-1}) t_ik(x y_s (x) .. (x) y_r)
            let left = t(h, j, Some(ys[..s].to_vec()));
            let right = t(
                i,
                k,
                unit_product(x, ys[s]).map(|xy| {
                    let mut w = alloc::vec![xy];
                    w.extend_from_slice(&ys[s + 1..]);
                    w
                }),
            );
            rhs += &g.multiply(&left, &right);
            // t_hj(y_1 (x) .. (x) y_s x) t_ik(y_{s+1}..y_r)
            let left = t(
                h,
                j,
                unit_product(ys[s], x).map(|yx| {
                    let mut w = ys[..s].to_vec();
                    w.push(yx);
                    w
                }),
            );
            let right = t(i, k, Some(ys[s + 1..].to_vec()));
            rhs -= &g.multiply(&left, &right);
        }
        if negative {
            rhs = -&rhs;
        }
        (lhs, rhs)
    }

    /// `E_{c+1,c} (u + E_{c+1,c+1} + rho_{c+1}) - (u + E_{c+1,c+1} + rho_c)`
    /// in `T(Mat_l)[u]`, for 0-based `c`.
    pub fn crue_element(&self, c: usize) -> MatWordPoly {
        let (m, n, ell) = (self.rect.m(), self.rect.n(), self.ell());
        let mut shifted = MatWordPoly::u();
        shifted += &MatWordPoly::letter(c + 1, c + 1);
        let mut first = shifted.clone();
        first += &MatWordPoly::scalar(rho(c + 2, m, n, ell));
        let mut out = &MatWordPoly::letter(c + 1, c) * &first;
        let mut second = shifted;
        second += &MatWordPoly::scalar(rho(c + 1, m, n, ell));
        out -= &second;
        out
    }
}

#[cfg(test)]
mod tests;
