mod support;

use proptest::prelude::*;
use yangw_core::walgebra::WAlgebra;
use yangw_core::yangian::{pbw_count, supermonomials};
use yangw_core::{BasisElement, ColoredRectangle, Parity, Uea};

proptest! {
    #[test]
    fn super_jacobi(case in support::jacobi_case()) {
        support::super_jacobi(case)?;
    }

    #[test]
    fn normal_form_confluence(case in support::confluence_case()) {
        support::confluence(case)?;
    }

    #[test]
    fn multiplication_is_associative(case in support::associativity_case()) {
        support::associativity(case)?;
    }

    #[test]
    fn tensor_product_is_associative(case in support::tensor_case()) {
        support::tensor_associativity(case)?;
    }
}

fn rectangles() -> impl Strategy<Value = WAlgebra> {
    prop_oneof![Just((1, 1, 2, "de")), Just((2, 1, 2, "ded")), Just((1, 1, 3, "ed"))]
        .prop_map(|(m, n, l, s)| WAlgebra::new(ColoredRectangle::from_spec(m, n, l, s).unwrap()))
}

fn p_element(w: &WAlgebra) -> impl Strategy<Value = Uea> {
    let (p, _) = w.rectangle().split_p_m();
    let g = w.gl().clone();
    let letter = prop::sample::select(p);
    prop::collection::vec((support::scalar(), prop::collection::vec(letter, 0..=3)), 1..=2).prop_map(move |ts| {
        let mut x = Uea::zero();
        for (c, word) in ts {
            x += &g.normal_form(&word).unwrap().scale(&c);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mu_is_multiplicative((w, x, y) in rectangles().prop_flat_map(|w| (p_element(&w), p_element(&w), Just(w)).prop_map(|(x, y, w)| (w, x, y)))) {
        let t = w.yangian().tensor();
        let lhs = w.mu(&w.gl().multiply(&x, &y)).unwrap();
        let rhs = t.multiply(&w.mu(&x).unwrap(), &w.mu(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

/// Exponent vectors over the generators `t^{(r)}_{ij}`, `1 <= r <= l`,
/// with odd exponents at most 1 and weighted degree `<= d`.
fn brute_force_count(parities: &[Parity], ell: usize, d: usize) -> u64 {
    let mut gens = Vec::new();
    for r in 1..=ell {
        for &a in parities {
            for &b in parities {
                gens.push((r, (a + b).is_odd()));
            }
        }
    }
    fn go(gens: &[(usize, bool)], budget: usize) -> u64 {
        let Some((&(r, odd), rest)) = gens.split_first() else {
            return 1;
        };
        let max = if odd { 1 } else { budget / r };
        (0..=max.min(budget / r)).map(|e| go(rest, budget - e * r)).sum()
    }
    go(&gens, d)
}

proptest! {
    #[test]
    fn pbw_count_matches_enumeration(bits in prop::collection::vec(any::<bool>(), 1..=3), ell in 1usize..=3, d in 0usize..=4) {
        let parities: Vec<Parity> = bits.into_iter().map(Parity::from_bit).collect();
        let want = brute_force_count(&parities, ell, d);
        prop_assert_eq!(pbw_count(&parities, ell, d), want);
        prop_assert_eq!(supermonomials(&parities, ell, d).len() as u64, want);
    }
}

#[test]
fn mu_on_a_bracket_of_odd_letters() {
    let w = WAlgebra::new(ColoredRectangle::from_spec(1, 1, 2, "de").unwrap());
    let rect = w.rectangle();
    let g = w.gl();
    let x = g.generator(BasisElement::new(rect.box_at(0, 1), rect.box_at(1, 1)));
    let y = g.generator(BasisElement::new(rect.box_at(1, 1), rect.box_at(0, 1)));
    assert!(w.mu_multiplicative_on(&x, &y));
}
