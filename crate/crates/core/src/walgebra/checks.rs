//! Verification routines on the W side. Each returns the outcome and the
//! number of instances compared; they stop at the first failure.

use alloc::format;
use alloc::string::String;

use super::WAlgebra;
use crate::error::RectangleError;
use crate::gl::GlVector;
use crate::report::{CheckOutcome, Payload, VerificationReport};
use crate::scalar::Scalar;
use crate::uea::Uea;
use crate::yangian::{
    evaluate_supermonomials, verify_rtt_family, GeneratorFamily, GeneratorKey, ProductTable, SuperOps,
};

impl WAlgebra {
    fn element(&self, x: &Uea) -> Payload {
        Payload::Element(self.gl().render(x))
    }

    fn box_pair(&self, i: usize, j: usize) -> String {
        format!("({},{})", self.rectangle().box_label(i), self.rectangle().box_label(j))
    }

    /// The bracket identity for shifted matrix units on all box 4-tuples.
    pub fn verify_etilrel(&self) -> (CheckOutcome, u64) {
        let g = self.gl();
        let dim = self.rectangle().dim();
        let te: alloc::vec::Vec<Uea> = (0..dim * dim).map(|x| self.tilde_e(x / dim, x % dim)).collect();
        let mut count = 0;
        for a in 0..dim * dim {
            for b in 0..dim * dim {
                count += 1;
                let (i, j, h, k) = (a / dim, a % dim, b / dim, b % dim);
                let lhs = g.supercommutator(&te[a], &te[b]).expect("homogeneous");
                let rhs = self.etilrel_rhs(i, j, h, k);
                if lhs != rhs {
                    let inst = format!("[e~{}, e~{}]", self.box_pair(i, j), self.box_pair(h, k));
                    return (CheckOutcome::fail(inst, self.element(&lhs), self.element(&rhs)), count);
                }
            }
        }
        (CheckOutcome::Pass, count)
    }

    /// `chi(tilde e_{ij}) = (-1)^{|i|+1}` for `j` immediately left of `i` in
    /// the same row, 0 otherwise. `chi` is applied to the Lie part.
    pub fn verify_chidef(&self) -> (CheckOutcome, u64) {
        let rect = self.rectangle();
        let dim = rect.dim();
        let mut count = 0;
        for i in 0..dim {
            for j in 0..dim {
                count += 1;
                let lie = self.gl().linear_part(&self.tilde_e(i, j));
                let got = rect.chi(&lie);
                let want = if rect.row(i) == rect.row(j) && rect.col(i) == rect.col(j) + 1 {
                    -Scalar::sign(rect.box_parity(i).is_odd())
                } else {
                    Scalar::zero()
                };
                if got != want {
                    let inst = format!("chi(e~{})", self.box_pair(i, j));
                    return (CheckOutcome::fail(inst, Payload::Scalar(got), Payload::Scalar(want)), count);
                }
            }
        }
        (CheckOutcome::Pass, count)
    }

    /// Path-sum generators against the `rdet A(u)` generators, including
    /// `r = 0`.
    pub fn verify_pathsum_rdet(&self, pathsum: &GeneratorFamily<Uea>) -> (CheckOutcome, u64) {
        let rdet = self.w_family_rdet();
        let mut count = 0;
        for (idx, (a, b)) in pathsum.values().iter().zip(rdet.values()).enumerate() {
            count += 1;
            if a != b {
                let inst = format!("{}", pathsum.key(idx));
                return (CheckOutcome::fail(inst, self.element(a), self.element(b)), count);
            }
        }
        (CheckOutcome::Pass, count)
    }

    /// `pr_chi([a, t^{(r)}_{ij}]) = 0` for every m-basis element `a`.
    pub fn verify_m_invariance(&self, fam: &GeneratorFamily<Uea>) -> (CheckOutcome, u64) {
        let rect = self.rectangle();
        let (_, m) = rect.split_p_m();
        let mut count = 0;
        for key in fam.keys() {
            let value = fam.get(key).expect("in range");
            for &a in &m {
                count += 1;
                let residue = rect.twisted_action(a, value).expect("a in m, value in U(p)");
                if !residue.is_zero() {
                    let inst = format!("e_{} . {}", self.box_pair(a.row, a.col), key);
                    return (CheckOutcome::fail(inst, self.element(&residue), self.element(&Uea::zero())), count);
                }
            }
        }
        (CheckOutcome::Pass, count)
    }

    /// The congruence for `E_{c+1,c}` modulo `I_chi`, for all `(i, j)` and
    /// every coefficient of `u` (`c` 0-based, any level).
    pub fn crue_check(&self, c: usize) -> (CheckOutcome, u64) {
        let x = self.crue_element(c);
        let rect = self.rectangle();
        let mut count = 0;
        for i in 0..self.height() {
            let row = self.t_map_row(i, &x);
            for (j, coeffs) in row.iter().enumerate() {
                count += 1;
                for (p, v) in coeffs.iter().enumerate() {
                    let residue = rect.pr_chi(v);
                    if !residue.is_zero() {
                        let inst = format!("rows ({},{}), c={}, u^{}", i + 1, j + 1, c + 1, p);
                        return (CheckOutcome::fail(inst, self.element(&residue), self.element(&Uea::zero())), count);
                    }
                }
            }
        }
        (CheckOutcome::Pass, count)
    }

    /// [`crue_check`](Self::crue_check) at `c = 1`, level 2 only.
    pub fn verify_crue(&self) -> Result<(CheckOutcome, u64), RectangleError> {
        if self.ell() != 2 {
            return Err(RectangleError::NeedsLevelTwo(self.ell()));
        }
        Ok(self.crue_check(0))
    }

    /// RTT relations among the generators inside `U(p)`.
    pub fn verify_w_rtt(&self, fam: &GeneratorFamily<Uea>, table: &ProductTable<Uea>) -> (CheckOutcome, u64) {
        verify_rtt_family(self.gl(), fam, table)
    }

    /// `mu(t^{(r)}_{ij}) = kappa_l(t^{(r)}_{ij})` for `0 <= r <= l`.
    pub fn verify_mu_kappa(&self, fam: &GeneratorFamily<Uea>) -> (CheckOutcome, u64) {
        let y = self.yangian();
        let mut count = 0;
        for idx in 0..fam.len() {
            let key = fam.key(idx);
            count += 1;
            let lhs = self.mu(&fam.values()[idx]).expect("generators lie in U(p)");
            let rhs = y.kappa_image(key.i, key.j, key.r);
            if lhs != rhs {
                let t = y.tensor();
                let inst = format!("mu({})", key);
                return (
                    CheckOutcome::fail(inst, Payload::Element(t.render(&lhs)), Payload::Element(t.render(&rhs))),
                    count,
                );
            }
        }
        (CheckOutcome::Pass, count)
    }

    /// Rank of the ordered generator supermonomials of degree `<= d` in
    /// `U(p)` against `pbw_count` and `sym_dim`.
    pub fn verify_w_span(&self, fam: &GeneratorFamily<Uea>, d: usize) -> (CheckOutcome, u64) {
        let values = evaluate_supermonomials(self.gl(), fam, d);
        let rank = SuperOps::rank(self.gl(), &values) as u64;
        let pbw = self.yangian().pbw_count(d);
        let sym = self.rectangle().sym_dim(d);
        let out = if rank == pbw && pbw == sym {
            CheckOutcome::Pass
        } else {
            CheckOutcome::fail(
                format!("degree <= {}", d),
                Payload::Count(rank),
                Payload::Text(format!("pbw_count={} sym_dim={}", pbw, sym)),
            )
        };
        (out, values.len() as u64)
    }

    /// Filtration degree `<= r`, parity `|i| + |j|`, and the linear part of
    /// Kazhdan degree `r` equal to `(-1)^{r-1} c^{(r)}_{ij}`.
    pub fn verify_leading_terms(&self, fam: &GeneratorFamily<Uea>) -> (CheckOutcome, u64) {
        let rect = self.rectangle();
        let g = self.gl();
        let basis = rect.centralizer_basis();
        let mut count = 0;
        for key in fam.keys() {
            count += 1;
            let x = fam.get(key).expect("in range");
            let inst = format!("{}", key);
            if let Some(deg) = rect.filtration_degree(x) {
                if deg > key.r as i64 {
                    return (
                        CheckOutcome::fail(inst, Payload::Count(deg as u64), Payload::Count(key.r as u64)),
                        count,
                    );
                }
            }
            match g.uea_parity(x) {
                Some(p) if p == fam.parity(key) => {}
                _ => return (CheckOutcome::fail(inst, self.element(x), Payload::Text("mixed or wrong parity".into())), count),
            }
            let c = &basis[self.centralizer_index(key)];
            debug_assert_eq!((c.r, c.i, c.j), (key.r, key.i, key.j));
            let sign = Scalar::sign(key.r % 2 == 0);
            let want: GlVector = c.vector.iter().map(|(b, v)| (*b, v * &sign)).collect();
            let got = self.linear_part_of_degree(x, key.r);
            if got != want {
                return (
                    CheckOutcome::fail(inst, self.element(&g.from_vector(&got)), self.element(&g.from_vector(&want))),
                    count,
                );
            }
        }
        (CheckOutcome::Pass, count)
    }

    /// The isomorphism certificate up to degree `d`: `mu` matches `kappa`
    /// on generators, the supermonomial span has the expected dimension,
    /// and the generators are m-invariant.
    pub fn verify_iso(&self, fam: &GeneratorFamily<Uea>, d: usize) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let (o, n) = self.verify_mu_kappa(fam);
        rep.push("iso.mu_kappa", o, n);
        let (o, n) = self.verify_w_span(fam, d);
        rep.push("iso.span", o, n);
        let (o, n) = self.verify_m_invariance(fam);
        rep.push("iso.m_invariance", o, n);
        rep
    }

    /// `mu(xy) = mu(x) mu(y)` for the generator pair.
    pub fn mu_multiplicative_on(&self, x: &Uea, y: &Uea) -> bool {
        let t = self.yangian().tensor();
        let lhs = self.mu(&self.gl().multiply(x, y));
        match (lhs, self.mu(x), self.mu(y)) {
            (Ok(l), Ok(a), Ok(b)) => t.multiply(&a, &b).is_ok_and(|r| r == l),
            _ => false,
        }
    }

    /// Key of the `c^{(r)}_{ij}` direction for a generator.
    pub fn centralizer_index(&self, key: GeneratorKey) -> usize {
        let h = self.height();
        ((key.r - 1) * h + key.i) * h + key.j
    }
}
