//! Random inputs and property bodies shared by the property tests and the
//! acceptance harness.
#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use yangw_core::{
    BasisElement, GeneratorOrder, GlSuper, GlVector, Parity, RewriteStrategy, Scalar, TensorElement, TensorPower, Uea,
};

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Scalar::new(p, q))
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

/// `gl_{M|N}` with `1 <= M + N <= max_dim`, random parities and a random
/// generator order.
pub fn algebra(max_dim: usize) -> impl Strategy<Value = GlSuper> {
    (1..=max_dim)
        .prop_flat_map(|d| (prop::collection::vec(any::<bool>(), d), prop::collection::vec(any::<u32>(), d * d)))
        .prop_map(|(bits, keys)| {
            let d = bits.len();
            let parities = bits.into_iter().map(Parity::from_bit).collect();
            let order = GeneratorOrder::by_key(d, |b| (keys[b.row * d + b.col], b));
            GlSuper::with_parities(parities).reordered(order).expect("same dimension")
        })
}

pub fn basis(g: &GlSuper) -> impl Strategy<Value = BasisElement> {
    let d = g.dim();
    (0..d, 0..d).prop_map(|(r, c)| BasisElement::new(r, c))
}

pub fn word(g: &GlSuper, max_len: usize) -> impl Strategy<Value = Vec<BasisElement>> {
    prop::collection::vec(basis(g), 0..=max_len)
}

/// A homogeneous vector of the given parity; zero if no basis element has it.
pub fn homogeneous_vector(g: &GlSuper, parity: Parity) -> impl Strategy<Value = GlVector> {
    let candidates: Vec<BasisElement> = g.basis().filter(|b| g.parity(*b) == parity).collect();
    let n = candidates.len();
    prop::collection::vec(scalar(), n).prop_map(move |cs| {
        candidates
            .iter()
            .zip(cs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, c)| (*b, c))
            .collect()
    })
}

/// A sum of up to `terms` normal-ordered words.
pub fn element(g: &GlSuper, terms: usize, max_len: usize) -> impl Strategy<Value = Uea> {
    let g = g.clone();
    prop::collection::vec((scalar(), word(&g, max_len)), 1..=terms).prop_map(move |ts| {
        let mut x = Uea::zero();
        for (c, w) in ts {
            x += &g.normal_form(&w).expect("valid word").scale(&c);
        }
        x
    })
}

pub fn parity() -> impl Strategy<Value = Parity> {
    any::<bool>().prop_map(Parity::from_bit)
}

pub fn jacobi_case() -> impl Strategy<Value = (GlSuper, GlVector, GlVector, GlVector, [Parity; 3])> {
    (algebra(3), parity(), parity(), parity()).prop_flat_map(|(g, p, q, r)| {
        (
            homogeneous_vector(&g, p),
            homogeneous_vector(&g, q),
            homogeneous_vector(&g, r),
            Just(g),
            Just([p, q, r]),
        )
            .prop_map(|(x, y, z, g, ps)| (g, x, y, z, ps))
    })
}

/// `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]`.
pub fn super_jacobi((g, x, y, z, ps): (GlSuper, GlVector, GlVector, GlVector, [Parity; 3])) -> Result<(), TestCaseError> {
    let br = |a: &GlVector, b: &GlVector| g.bracket(a, b).expect("homogeneous");
    let lhs = br(&x, &br(&y, &z));
    let mut rhs = br(&br(&x, &y), &z);
    let sign = Scalar::sign(ps[0].koszul(ps[1]));
    for (b, c) in br(&y, &br(&x, &z)) {
        yangw_core::gl::vec_add_term(&mut rhs, b, &(&c * &sign));
    }
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn confluence_case() -> impl Strategy<Value = (GlSuper, Vec<BasisElement>)> {
    algebra(3).prop_flat_map(|g| (word(&g, 6), Just(g))).prop_map(|(w, g)| (g, w))
}

/// Every rewriting strategy reaches the same normal form.
pub fn confluence((g, w): (GlSuper, Vec<BasisElement>)) -> Result<(), TestCaseError> {
    let a = g.normal_form_with(&w, RewriteStrategy::Insertion).expect("valid word");
    let b = g.normal_form_with(&w, RewriteStrategy::LeftmostDescent).expect("valid word");
    let c = g.normal_form_with(&w, RewriteStrategy::RightmostDescent).expect("valid word");
    prop_assert_eq!(&a, &b);
    prop_assert_eq!(&a, &c);
    Ok(())
}

pub fn associativity_case() -> impl Strategy<Value = (GlSuper, Uea, Uea, Uea)> {
    algebra(3)
        .prop_flat_map(|g| (element(&g, 3, 3), element(&g, 3, 3), element(&g, 3, 3), Just(g)))
        .prop_map(|(x, y, z, g)| (g, x, y, z))
}

pub fn associativity((g, x, y, z): (GlSuper, Uea, Uea, Uea)) -> Result<(), TestCaseError> {
    let lhs = g.multiply(&g.multiply(&x, &y), &z);
    let rhs = g.multiply(&x, &g.multiply(&y, &z));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub type TensorCase = (TensorPower, [Vec<(usize, BasisElement)>; 3], [Scalar; 3]);

/// A homogeneous tensor: a product of embedded generators, scaled.
fn tensor_monomial(t: &TensorPower, letters: &[(usize, BasisElement)], c: &Scalar) -> TensorElement {
    let mut x = TensorElement::scalar(t.ell(), c.clone());
    for &(slot, b) in letters {
        x = t.multiply(&x, &t.embed_generator(slot, b)).expect("same power");
    }
    x
}

pub fn tensor_case() -> impl Strategy<Value = TensorCase> {
    (algebra(2), 2usize..=3).prop_flat_map(|(g, ell)| {
        let word = || prop::collection::vec((0..ell, basis(&g)), 0..=3);
        (
            [word(), word(), word()],
            [nonzero_scalar(), nonzero_scalar(), nonzero_scalar()],
            Just(TensorPower::new(g, ell)),
        )
            .prop_map(|(ws, cs, t)| (t, ws, cs))
    })
}

/// `(ab)c = a(bc)` in the Koszul-signed tensor power, and the product of
/// two pure tensors picks up the sign of moving letters past each other.
pub fn tensor_associativity((t, ws, cs): TensorCase) -> Result<(), TestCaseError> {
    let [a, b, c] = [0, 1, 2].map(|k| tensor_monomial(&t, &ws[k], &cs[k]));
    let ab = t.multiply(&a, &b).expect("same power");
    let bc = t.multiply(&b, &c).expect("same power");
    prop_assert_eq!(t.multiply(&ab, &c).expect("same power"), t.multiply(&a, &bc).expect("same power"));
    if let (Some(&(s, x)), Some(&(s2, y))) = (ws[0].first(), ws[1].first()) {
        if s != s2 {
            let g = t.factor();
            let (ex, ey) = (t.embed_generator(s, x), t.embed_generator(s2, y));
            let sign = Scalar::sign(g.parity(x).koszul(g.parity(y)));
            prop_assert_eq!(
                t.multiply(&ex, &ey).expect("same power"),
                t.multiply(&ey, &ex).expect("same power").scale(&sign)
            );
        }
    }
    Ok(())
}
