use super::*;
use crate::gl::Parity;
use crate::rectangle::BoxIndex;
use crate::yangian::{GeneratorKey, ProductTable};

fn w(m: usize, n: usize, ell: usize, seq: &str) -> WAlgebra {
    WAlgebra::new(ColoredRectangle::from_spec(m, n, ell, seq).unwrap())
}

fn pos(w: &WAlgebra, barred: bool, ordinal: usize) -> usize {
    w.rectangle().position_of(BoxIndex { barred, ordinal }).unwrap()
}

#[test]
fn tilde_e_without_shift() {
    let w = w(1, 1, 2, "de");
    for j in 0..4 {
        assert_eq!(w.tilde_e(j, j), w.gl().generator(BasisElement::new(j, j)));
    }
    // e_{1bar,2bar}: columns differ by one
    assert_eq!(w.tilde_e(0, 1), -&w.gl().generator(BasisElement::new(0, 1)));
}

#[test]
fn tilde_e_shift_sign_follows_parity() {
    // rho_1 = -1 at (2,1,2); an odd diagonal box gets +1, an even one -1
    let w = w(2, 1, 2, "dde");
    let odd = w.rectangle().box_at(2, 0);
    let even = w.rectangle().box_at(0, 0);
    let e = |j: usize| w.gl().generator(BasisElement::new(j, j));
    assert_eq!(w.tilde_e(odd, odd), &e(odd) + &Uea::scalar(Scalar::one()));
    assert_eq!(w.tilde_e(even, even), &e(even) - &Uea::scalar(Scalar::one()));
}

#[test]
fn worked_example_t_map() {
    let w = w(2, 3, 4, "dedee");
    let x = MatWordPoly::letter(1, 3);
    let got = w.t_map(1, 2, &x);
    let want = w.gl().generator(BasisElement::new(pos(&w, false, 4), pos(&w, true, 8)));
    assert_eq!(got, alloc::vec![-&want]);
    assert_eq!(w.t_map(1, 1, &MatWordPoly::one()), alloc::vec![Uea::one()]);
    assert_eq!(w.t_map(1, 2, &MatWordPoly::one()), alloc::vec![Uea::zero()]);
}

#[test]
fn etilrel_and_chidef() {
    for (m, n, l, s) in [(1, 1, 2, "de"), (2, 1, 2, "ded")] {
        let w = w(m, n, l, s);
        assert!(w.verify_etilrel().0.is_pass());
        assert!(w.verify_chidef().0.is_pass());
    }
}

#[test]
fn level_one_generators_are_evaluation() {
    let w = w(2, 1, 1, "ded");
    for i in 0..3 {
        for j in 0..3 {
            let b = BasisElement::new(w.rectangle().box_at(i, 0), w.rectangle().box_at(j, 0));
            let want = w.gl().generator(b).scale(&Scalar::sign(w.rectangle().row_parity(i).is_odd()));
            assert_eq!(w.w_gen_pathsum(i, j, 1), want);
            assert_eq!(w.w_gen_rdet(i, j, 1), want);
        }
    }
}

#[test]
fn pathsum_matches_rdet() {
    for (m, n, l, s) in [(1, 1, 2, "de"), (2, 1, 2, "dde"), (1, 1, 3, "ed")] {
        let w = w(m, n, l, s);
        let fam = w.w_family();
        let (out, count) = w.verify_pathsum_rdet(&fam);
        assert!(out.is_pass(), "{:?}", out);
        assert_eq!(count as usize, (l + 1) * (m + n) * (m + n));
    }
    let w = w(1, 1, 2, "de");
    assert_eq!(w.w_gen_pathsum(0, 0, 0), Uea::one());
    assert!(w.w_gen_pathsum(0, 1, 0).is_zero());
    assert!(w.w_gen_pathsum(0, 1, 3).is_zero());
    assert_eq!(w.w_gen_rdet(0, 0, 2), w.w_gen_pathsum(0, 0, 2));
}

#[test]
fn mu_basics() {
    let w = w(1, 1, 2, "de");
    let t = w.yangian().tensor();
    assert_eq!(w.mu(&Uea::one()).unwrap(), t.unit());
    // e_{1*2, 2*2} -> e^{[2]}_{12}
    let b = BasisElement::new(w.rectangle().box_at(0, 1), w.rectangle().box_at(1, 1));
    assert_eq!(w.mu(&w.gl().generator(b)).unwrap(), t.embed_generator(1, BasisElement::new(0, 1)));
    // strictly upper blocks die
    let up = BasisElement::new(w.rectangle().box_at(0, 0), w.rectangle().box_at(1, 1));
    assert!(w.mu(&w.gl().generator(up)).unwrap().is_zero());
    let down = BasisElement::new(w.rectangle().box_at(0, 1), w.rectangle().box_at(1, 0));
    assert_eq!(w.mu(&w.gl().generator(down)), Err(RectangleError::NotInP));
}

#[test]
fn mu_of_generators_is_kappa() {
    for (m, n, l, s) in [(1, 1, 2, "de"), (1, 2, 2, "ede")] {
        let w = w(m, n, l, s);
        let (out, _) = w.verify_mu_kappa(&w.w_family());
        assert!(out.is_pass(), "{:?}", out);
    }
}

#[test]
fn unsigned_shift_is_not_multiplicative() {
    // with rho_1 = -1, shifting e_{ii} by rho regardless of parity breaks
    // [e_{ij}, e_{ji}] = e_{ii} + e_{jj} for an odd pair in one block
    let w = w(2, 1, 2, "dde");
    let g = w.gl();
    let t = w.yangian().tensor();
    let rect = w.rectangle();
    let (a, b) = (rect.box_at(0, 0), rect.box_at(2, 0));
    let x = g.generator(BasisElement::new(a, b));
    let y = g.generator(BasisElement::new(b, a));
    assert!(w.mu_multiplicative_on(&x, &y));
    let unsigned = |u: &Uea| -> TensorElement {
        // same as mu but with a parity-blind shift
        let mut out = t.zero();
        for (mono, c) in u.terms() {
            let mut acc = TensorElement::scalar(2, c.clone());
            for l in g.monomial_letters(mono) {
                let mut img = t.embed_generator(rect.col(l.row), BasisElement::new(rect.row(l.row), rect.row(l.col)));
                if l.row == l.col {
                    img -= &TensorElement::scalar(2, w.rho_of_box(l.row));
                }
                acc = t.multiply(&acc, &img).unwrap();
            }
            out += &acc;
        }
        out
    };
    let comm = g.supercommutator(&x, &y).unwrap();
    let via_images = t.supercommutator(&unsigned(&x), &unsigned(&y)).unwrap();
    assert_ne!(unsigned(&comm), via_images);
}

#[test]
fn m_invariance_small() {
    let w = w(1, 1, 2, "de");
    let (out, count) = w.verify_m_invariance(&w.w_family());
    assert!(out.is_pass(), "{:?}", out);
    assert_eq!(count, 4 * 8);
    // level one: m is empty
    let w1 = w_level_one();
    assert_eq!(w1.verify_m_invariance(&w1.w_family()), (crate::report::CheckOutcome::Pass, 0));
}

fn w_level_one() -> WAlgebra {
    w(1, 1, 1, "de")
}

#[test]
fn crue_congruence() {
    for (m, n, s) in [(1, 1, "de"), (2, 1, "dde"), (1, 2, "ede")] {
        let w = w(m, n, 2, s);
        let (out, count) = w.verify_crue().unwrap();
        assert!(out.is_pass(), "{:?}", out);
        assert_eq!(count as usize, (m + n) * (m + n));
    }
    let w3 = w(2, 1, 3, "ded");
    assert_eq!(w3.verify_crue(), Err(RectangleError::NeedsLevelTwo(3)));
    // the congruence does not depend on the level
    assert!(w3.crue_check(0).0.is_pass());
    assert!(w3.crue_check(1).0.is_pass());
}

#[test]
fn crue_needs_the_rho_shift() {
    // dropping rho_1 leaves a nonzero residue when m != n
    let w = w(2, 1, 2, "dde");
    let mut x = w.crue_element(0);
    x += &MatWordPoly::scalar(rho(1, 2, 1, 2));
    let residue: Vec<Uea> = w.t_map(0, 0, &x).iter().map(|v| w.rectangle().pr_chi(v)).collect();
    assert!(residue.iter().any(|r| !r.is_zero()));
}

#[test]
fn w_rtt_small() {
    let w = w(1, 1, 2, "de");
    let fam = w.w_family();
    let table = ProductTable::build(w.gl(), &fam);
    let (out, count) = w.verify_w_rtt(&fam, &table);
    assert!(out.is_pass(), "{:?}", out);
    assert_eq!(count, 64);
}

#[test]
fn span_and_leading_terms() {
    let w = w(1, 1, 2, "de");
    let fam = w.w_family();
    assert!(w.verify_w_span(&fam, 2).0.is_pass());
    assert!(w.verify_leading_terms(&fam).0.is_pass());
    let rep = w.verify_iso(&fam, 1);
    assert!(rep.all_pass());
    assert_eq!(rep.records.len(), 3);
}

#[test]
fn generator_parities() {
    let w = w(1, 2, 2, "ede");
    for g in w.w_generators() {
        let want = w.rectangle().row_parity(g.i) + w.rectangle().row_parity(g.j);
        assert_eq!(w.gl().uea_parity(&g.value), Some(want));
        assert!(w.rectangle().filtration_degree(&g.value).unwrap() <= g.r as i64);
    }
    assert_eq!(w.rectangle().row_parity(0), Parity::Odd);
}

#[test]
fn detcomp1_all_short_words() {
    let w = w(1, 1, 2, "de");
    let units: Vec<(usize, usize)> = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).collect();
    let mut words: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new()];
    for &u in &units {
        words.push(alloc::vec![u]);
        for &v in &units {
            words.push(alloc::vec![u, v]);
        }
    }
    for i in 0..2 {
        for j in 0..2 {
            for h in 0..2 {
                for k in 0..2 {
                    for &x in &units {
                        for ys in &words {
                            let (l, r) = w.detcomp1_sides((i, j, h, k), x, ys);
                            assert_eq!(l, r, "i={} j={} h={} k={} x={:?} ys={:?}", i, j, h, k, x, ys);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn generator_keys_display() {
    assert_eq!(alloc::format!("{}", GeneratorKey::new(2, 0, 1)), "t^(2)_{1,2}");
}
