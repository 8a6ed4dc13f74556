//! The truncated super Yangian through its faithful image under
//! `kappa_l : Y(m|n) -> U(gl(m|n))^{(x) l}`.
//!
//! The RTT machinery here is generic over [`SuperOps`], so the same code
//! verifies the relations for the `kappa` images and for the W-generators
//! inside `U(p)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::gl::{BasisElement, GlSuper, Parity};
use crate::linalg::EchelonBasis;
use crate::rectangle::{count_supermonomials, ColoredRectangle, EpsilonDeltaSequence};
use crate::report::{CheckOutcome, Payload, RenderedTerm};
use crate::scalar::Scalar;
use crate::tensor::{TensorElement, TensorPower};
use crate::uea::{Monomial, Uea};

/// Arithmetic needed to evaluate RTT relations and supermonomials.
pub trait SuperOps {
    type Elem: Clone + PartialEq + fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `acc += x` or `acc -= x`.
    fn accumulate(&self, acc: &mut Self::Elem, x: &Self::Elem, negate: bool);
    fn is_zero(&self, x: &Self::Elem) -> bool;
    /// Dimension of the span.
    fn rank(&self, xs: &[Self::Elem]) -> usize;
    fn render(&self, x: &Self::Elem) -> Vec<RenderedTerm>;
}

impl SuperOps for GlSuper {
    type Elem = Uea;
    fn zero(&self) -> Uea {
        Uea::zero()
    }
    fn one(&self) -> Uea {
        Uea::one()
    }
    fn mul(&self, a: &Uea, b: &Uea) -> Uea {
        self.multiply(a, b)
    }
    fn accumulate(&self, acc: &mut Uea, x: &Uea, negate: bool) {
        if negate {
            *acc -= x;
        } else {
            *acc += x;
        }
    }
    fn is_zero(&self, x: &Uea) -> bool {
        x.is_zero()
    }
    fn rank(&self, xs: &[Uea]) -> usize {
        let mut basis = EchelonBasis::<Monomial>::new();
        for x in xs {
            basis.insert(x.terms());
        }
        basis.rank()
    }
    fn render(&self, x: &Uea) -> Vec<RenderedTerm> {
        GlSuper::render(self, x)
    }
}

impl SuperOps for TensorPower {
    type Elem = TensorElement;
    fn zero(&self) -> TensorElement {
        TensorPower::zero(self)
    }
    fn one(&self) -> TensorElement {
        self.unit()
    }
    fn mul(&self, a: &TensorElement, b: &TensorElement) -> TensorElement {
        self.multiply(a, b).expect("factor counts agree")
    }
    fn accumulate(&self, acc: &mut TensorElement, x: &TensorElement, negate: bool) {
        if negate {
            *acc -= x;
        } else {
            *acc += x;
        }
    }
    fn is_zero(&self, x: &TensorElement) -> bool {
        x.is_zero()
    }
    fn rank(&self, xs: &[TensorElement]) -> usize {
        let mut basis = EchelonBasis::<Vec<Monomial>>::new();
        for x in xs {
            basis.insert(x.terms());
        }
        basis.rank()
    }
    fn render(&self, x: &TensorElement) -> Vec<RenderedTerm> {
        TensorPower::render(self, x)
    }
}

/// `t^{(r)}_{ij}` with 0-based `i, j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorKey {
    pub r: usize,
    pub i: usize,
    pub j: usize,
}

impl GeneratorKey {
    pub fn new(r: usize, i: usize, j: usize) -> Self {
        GeneratorKey { r, i, j }
    }
}

impl fmt::Display for GeneratorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^({})_{{{},{}}}", self.r, self.i + 1, self.j + 1)
    }
}

/// Values of all `t^{(r)}_{ij}`, `0 <= r <= l`, in some superalgebra.
#[derive(Clone, Debug)]
pub struct GeneratorFamily<E> {
    height: usize,
    ell: usize,
    parities: Vec<Parity>,
    values: Vec<E>,
}

impl<E: Clone> GeneratorFamily<E> {
    /// `f` is called for `r >= 1`; `r = 0` gets `delta_{ij}`.
    pub fn build(parities: Vec<Parity>, ell: usize, zero: E, one: E, mut f: impl FnMut(GeneratorKey) -> E) -> Self {
        let height = parities.len();
        let mut values = Vec::with_capacity((ell + 1) * height * height);
        for r in 0..=ell {
            for i in 0..height {
                for j in 0..height {
                    values.push(match r {
                        0 if i == j => one.clone(),
                        0 => zero.clone(),
                        _ => f(GeneratorKey::new(r, i, j)),
                    });
                }
            }
        }
        GeneratorFamily {
            height,
            ell,
            parities,
            values,
        }
    }

    /// Assemble from values listed by [`keys_with_zero`](Self::keys_with_zero).
    pub fn from_values(parities: Vec<Parity>, ell: usize, values: Vec<E>) -> Self {
        let height = parities.len();
        assert_eq!(values.len(), (ell + 1) * height * height, "wrong number of generator values");
        GeneratorFamily {
            height,
            ell,
            parities,
            values,
        }
    }
}

impl<E> GeneratorFamily<E> {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index(&self, k: GeneratorKey) -> usize {
        (k.r * self.height + k.i) * self.height + k.j
    }

    pub fn key(&self, idx: usize) -> GeneratorKey {
        let j = idx % self.height;
        let i = (idx / self.height) % self.height;
        GeneratorKey::new(idx / (self.height * self.height), i, j)
    }

    /// `None` when `r > l` (the truncation).
    pub fn get(&self, k: GeneratorKey) -> Option<&E> {
        if k.r > self.ell {
            None
        } else {
            Some(&self.values[self.index(k)])
        }
    }

    pub fn values(&self) -> &[E] {
        &self.values
    }

    /// Keys with `1 <= r <= l`, lexicographic in `(r, i, j)`.
    pub fn keys(&self) -> impl Iterator<Item = GeneratorKey> + '_ {
        (self.height * self.height..self.values.len()).map(|x| self.key(x))
    }

    /// All keys including `r = 0`, in storage order.
    pub fn keys_with_zero(parities_len: usize, ell: usize) -> impl Iterator<Item = GeneratorKey> {
        (0..=ell).flat_map(move |r| {
            (0..parities_len).flat_map(move |i| (0..parities_len).map(move |j| GeneratorKey::new(r, i, j)))
        })
    }

    pub fn row_parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    /// `|i| + |j|`.
    pub fn parity(&self, k: GeneratorKey) -> Parity {
        self.parities[k.i] + self.parities[k.j]
    }
}

/// All pairwise products `x_a x_b` of a generator family.
#[derive(Clone, Debug)]
pub struct ProductTable<E> {
    n: usize,
    values: Vec<E>,
}

impl<E> ProductTable<E> {
    pub fn build<O: SuperOps<Elem = E>>(ops: &O, fam: &GeneratorFamily<E>) -> Self {
        let n = fam.len();
        let mut values = Vec::with_capacity(n * n);
        for a in fam.values() {
            for b in fam.values() {
                values.push(ops.mul(a, b));
            }
        }
        ProductTable { n, values }
    }

    /// Products listed row-major over pairs of family indices.
    pub fn from_values(fam: &GeneratorFamily<E>, values: Vec<E>) -> Self {
        let n = fam.len();
        assert_eq!(values.len(), n * n, "wrong number of products");
        ProductTable { n, values }
    }

    pub fn get(&self, a: usize, b: usize) -> &E {
        &self.values[a * self.n + b]
    }
}

/// Both sides of the RTT relation for `[t^{(r)}_{ij}, t^{(s)}_{hk}]`.
pub fn rtt_sides<O: SuperOps>(
    ops: &O,
    fam: &GeneratorFamily<O::Elem>,
    table: &ProductTable<O::Elem>,
    a: GeneratorKey,
    b: GeneratorKey,
) -> (O::Elem, O::Elem) {
    let (ia, ib) = (fam.index(a), fam.index(b));
    let mut lhs = table.get(ia, ib).clone();
    let swap = fam.parity(a).koszul(fam.parity(b));
    ops.accumulate(&mut lhs, table.get(ib, ia), !swap);

    let (i, j, h, k) = (a.i, a.j, b.i, b.j);
    let pi = fam.row_parity(i).is_odd();
    let pj = fam.row_parity(j).is_odd();
    let ph = fam.row_parity(h).is_odd();
    let negative = (pi && pj) ^ (pi && ph) ^ (pj && ph);
    let mut rhs = ops.zero();
    let total = a.r + b.r - 1;
    let product = |x: GeneratorKey, y: GeneratorKey| -> Option<&O::Elem> {
        if x.r > fam.ell() || y.r > fam.ell() {
            None
        } else {
            Some(table.get(fam.index(x), fam.index(y)))
        }
    };
    for t in 0..a.r.min(b.r) {
        if let Some(p) = product(GeneratorKey::new(t, h, j), GeneratorKey::new(total - t, i, k)) {
            ops.accumulate(&mut rhs, p, negative);
        }
        if let Some(p) = product(GeneratorKey::new(total - t, h, j), GeneratorKey::new(t, i, k)) {
            ops.accumulate(&mut rhs, p, !negative);
        }
    }
    (lhs, rhs)
}

pub fn rtt_instance<O: SuperOps>(
    ops: &O,
    fam: &GeneratorFamily<O::Elem>,
    table: &ProductTable<O::Elem>,
    a: GeneratorKey,
    b: GeneratorKey,
) -> CheckOutcome {
    let (lhs, rhs) = rtt_sides(ops, fam, table, a, b);
    if lhs == rhs {
        CheckOutcome::Pass
    } else {
        CheckOutcome::fail(
            format!("[{}, {}]", a, b),
            Payload::Element(ops.render(&lhs)),
            Payload::Element(ops.render(&rhs)),
        )
    }
}

/// RTT relations for all pairs of generators with `1 <= r, s <= l`;
/// stops at the first failure. Returns the outcome and the number of
/// instances compared.
pub fn verify_rtt_family<O: SuperOps>(
    ops: &O,
    fam: &GeneratorFamily<O::Elem>,
    table: &ProductTable<O::Elem>,
) -> (CheckOutcome, u64) {
    let mut count = 0;
    for a in fam.keys() {
        for b in fam.keys() {
            count += 1;
            let out = rtt_instance(ops, fam, table, a, b);
            if !out.is_pass() {
                return (out, count);
            }
        }
    }
    (CheckOutcome::Pass, count)
}

/// Ordered supermonomials in `t^{(r)}_{ij}` (`1 <= r <= l`) of degree
/// `<= d`, with `deg t^{(r)} = r`, odd symbols squarefree. Variables are
/// ordered lexicographically on `(r, i, j)`.
pub fn supermonomials(parities: &[Parity], ell: usize, d: usize) -> Vec<Vec<GeneratorKey>> {
    let vars: Vec<GeneratorKey> = GeneratorFamily::<()>::keys_with_zero(parities.len(), ell)
        .filter(|k| k.r >= 1)
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        vars: &[GeneratorKey],
        parities: &[Parity],
        start: usize,
        budget: usize,
        current: &mut Vec<GeneratorKey>,
        out: &mut Vec<Vec<GeneratorKey>>,
    ) {
        out.push(current.clone());
        for v in start..vars.len() {
            let k = vars[v];
            if k.r > budget {
                continue;
            }
            let odd = (parities[k.i] + parities[k.j]).is_odd();
            current.push(k);
            rec(vars, parities, if odd { v + 1 } else { v }, budget - k.r, current, out);
            current.pop();
        }
    }
    rec(&vars, parities, 0, d, &mut current, &mut out);
    out
}

/// Number of supermonomials of degree `<= d` (see [`supermonomials`]).
pub fn pbw_count(parities: &[Parity], ell: usize, d: usize) -> u64 {
    let vars: Vec<(usize, Parity)> = GeneratorFamily::<()>::keys_with_zero(parities.len(), ell)
        .filter(|k| k.r >= 1)
        .map(|k| (k.r, parities[k.i] + parities[k.j]))
        .collect();
    count_supermonomials(&vars, d)
}

/// Evaluate every supermonomial of degree `<= d` in a generator family,
/// sharing prefix products.
pub fn evaluate_supermonomials<O: SuperOps>(ops: &O, fam: &GeneratorFamily<O::Elem>, d: usize) -> Vec<O::Elem> {
    let vars: Vec<GeneratorKey> = fam.keys().collect();
    let mut out = Vec::new();
    fn rec<O: SuperOps>(
        ops: &O,
        fam: &GeneratorFamily<O::Elem>,
        vars: &[GeneratorKey],
        start: usize,
        budget: usize,
        prefix: &O::Elem,
        out: &mut Vec<O::Elem>,
    ) {
        out.push(prefix.clone());
        for v in start..vars.len() {
            let k = vars[v];
            if k.r > budget {
                continue;
            }
            let next = ops.mul(prefix, fam.get(k).expect("r <= l"));
            let odd = fam.parity(k).is_odd();
            rec(ops, fam, vars, if odd { v + 1 } else { v }, budget - k.r, &next, out);
        }
    }
    rec(ops, fam, &vars, 0, d, &ops.one(), &mut out);
    out
}

/// `span_rank` of the evaluated supermonomials of degree `<= d` against
/// `pbw_count`.
pub fn monomial_rank_check<O: SuperOps>(ops: &O, fam: &GeneratorFamily<O::Elem>, d: usize) -> CheckOutcome {
    let values = evaluate_supermonomials(ops, fam, d);
    let rank = ops.rank(&values) as u64;
    let expected = pbw_count(&fam.parities, fam.ell(), d);
    if rank == expected {
        CheckOutcome::Pass
    } else {
        CheckOutcome::fail(format!("degree <= {}", d), Payload::Count(rank), Payload::Count(expected))
    }
}

/// `Y^l(m|n)` realised in `U(gl(m|n))^{(x) l}`.
#[derive(Clone, Debug)]
pub struct Yangian {
    parities: Vec<Parity>,
    ell: usize,
    tensor: TensorPower,
}

impl Yangian {
    pub fn new(seq: &EpsilonDeltaSequence, ell: usize) -> Self {
        let parities = seq.parities();
        let small = GlSuper::with_parities(parities.clone());
        Yangian {
            parities,
            ell,
            tensor: TensorPower::new(small, ell),
        }
    }

    pub fn from_rectangle(rect: &ColoredRectangle) -> Self {
        Self::new(rect.sequence(), rect.ell())
    }

    /// `m + n`.
    pub fn height(&self) -> usize {
        self.parities.len()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    /// `gl(m|n)`.
    pub fn small_gl(&self) -> &GlSuper {
        self.tensor.factor()
    }

    pub fn tensor(&self) -> &TensorPower {
        &self.tensor
    }

    /// Parity `|i| + |j|` of `t^{(r)}_{ij}`.
    pub fn generator_parity(&self, i: usize, j: usize) -> Parity {
        self.parities[i] + self.parities[j]
    }

    /// `ev(t^{(r)}_{ij})`: `delta_{ij}`, `(-1)^{|i|} e_{ij}` or 0.
    pub fn ev_image(&self, i: usize, j: usize, r: usize) -> Uea {
        let g = self.small_gl();
        match r {
            0 if i == j => Uea::one(),
            0 => Uea::zero(),
            1 => g
                .generator(BasisElement::new(i, j))
                .scale(&Scalar::sign(self.parities[i].is_odd())),
            _ => Uea::zero(),
        }
    }

    pub fn kappa_image(&self, i: usize, j: usize, r: usize) -> TensorElement {
        self.kappa_image_level(i, j, r, self.ell)
    }

    /// `kappa_level(t^{(r)}_{ij})` by the closed sum over positions
    /// `s_1 < .. < s_r` and intermediate indices.
    pub fn kappa_image_level(&self, i: usize, j: usize, r: usize, level: usize) -> TensorElement {
        let g = self.small_gl();
        let h = self.height();
        let mut out = TensorElement::zero(level);
        if r == 0 {
            if i == j {
                out = TensorElement::unit(level);
            }
            return out;
        }
        if r > level {
            return out;
        }
        let mut slots: Vec<usize> = (0..r).collect();
        let mut path = alloc::vec![0usize; r - 1];
        loop {
            // iterate intermediate indices
            loop {
                let mut key = alloc::vec![Monomial::one(); level];
                let mut odd = self.parities[i].is_odd();
                let mut prev = i;
                for t in 0..r {
                    let next = if t + 1 == r { j } else { path[t] };
                    if t + 1 < r {
                        odd ^= self.parities[next].is_odd();
                    }
                    key[slots[t]] = g.letter(BasisElement::new(prev, next));
                    prev = next;
                }
                out.add_term(key, Scalar::sign(odd));
                if !advance_path(&mut path, h) {
                    break;
                }
            }
            if !advance_combination(&mut slots, level) {
                break;
            }
        }
        out
    }

    /// Right side of `kappa_l = (ev (x) kappa_{l-1}) o Delta`:
    /// `sum_{s, k} ev(t^{(r-s)}_{ik}) (x) kappa_{l-1}(t^{(s)}_{kj})`.
    pub fn kappa_recursion(&self, i: usize, j: usize, r: usize) -> Option<TensorElement> {
        if self.ell < 2 {
            return None;
        }
        let mut out = TensorElement::zero(self.ell);
        for s in 0..=r {
            for k in 0..self.height() {
                let left = self.ev_image(i, k, r - s);
                if left.is_zero() {
                    continue;
                }
                let right = self.kappa_image_level(k, j, s, self.ell - 1);
                out += &right.prepend(&left);
            }
        }
        Some(out)
    }

    pub fn kappa_recursion_check(&self, i: usize, j: usize, r: usize) -> CheckOutcome {
        let Some(rhs) = self.kappa_recursion(i, j, r) else {
            return CheckOutcome::Skipped("needs l >= 2".into());
        };
        let lhs = self.kappa_image(i, j, r);
        if lhs == rhs {
            CheckOutcome::Pass
        } else {
            CheckOutcome::fail(
                format!("{}", GeneratorKey::new(r, i, j)),
                Payload::Element(self.tensor.render(&lhs)),
                Payload::Element(self.tensor.render(&rhs)),
            )
        }
    }

    /// The recursion for every generator with `0 <= r <= l + 1`.
    pub fn verify_kappa_recursion(&self) -> (CheckOutcome, u64) {
        let mut count = 0;
        for r in 0..=self.ell + 1 {
            for i in 0..self.height() {
                for j in 0..self.height() {
                    count += 1;
                    let out = self.kappa_recursion_check(i, j, r);
                    if !out.is_pass() {
                        return (out, count);
                    }
                }
            }
        }
        (CheckOutcome::Pass, count)
    }

    pub fn kappa_family(&self) -> GeneratorFamily<TensorElement> {
        GeneratorFamily::build(
            self.parities.clone(),
            self.ell,
            self.tensor.zero(),
            self.tensor.unit(),
            |k| self.kappa_image(k.i, k.j, k.r),
        )
    }

    /// One RTT relation on the `kappa` images, computed from scratch.
    pub fn rtt_check(&self, i: usize, j: usize, h: usize, k: usize, r: usize, s: usize) -> CheckOutcome {
        let fam = self.kappa_family();
        let a = GeneratorKey::new(r, i, j);
        let b = GeneratorKey::new(s, h, k);
        let t = &self.tensor;
        // only the products this relation needs
        let mut needed = alloc::vec![(a, b), (b, a)];
        let total = r + s - 1;
        for q in 0..r.min(s) {
            needed.push((GeneratorKey::new(q, h, j), GeneratorKey::new(total - q, i, k)));
            needed.push((GeneratorKey::new(total - q, h, j), GeneratorKey::new(q, i, k)));
        }
        let n = fam.len();
        let mut values = alloc::vec![t.zero(); n * n];
        for (x, y) in needed {
            if let (Some(vx), Some(vy)) = (fam.get(x), fam.get(y)) {
                values[fam.index(x) * n + fam.index(y)] = t.mul(vx, vy);
            }
        }
        let table = ProductTable::from_values(&fam, values);
        rtt_instance(t, &fam, &table, a, b)
    }

    /// All `(m+n)^4 l^2` RTT relations.
    pub fn verify_rtt(&self) -> (CheckOutcome, u64) {
        let fam = self.kappa_family();
        let table = ProductTable::build(&self.tensor, &fam);
        verify_rtt_family(&self.tensor, &fam, &table)
    }

    /// Every term of `kappa(t^{(r)}_{ij})` has at most `r` letters.
    pub fn verify_filtration(&self) -> (CheckOutcome, u64) {
        let mut count = 0;
        for r in 0..=self.ell + 1 {
            for i in 0..self.height() {
                for j in 0..self.height() {
                    count += 1;
                    let x = self.kappa_image(i, j, r);
                    let len = x.max_total_length().unwrap_or(0);
                    if len > r {
                        return (
                            CheckOutcome::fail(
                                format!("{}", GeneratorKey::new(r, i, j)),
                                Payload::Count(len as u64),
                                Payload::Count(r as u64),
                            ),
                            count,
                        );
                    }
                }
            }
        }
        (CheckOutcome::Pass, count)
    }

    pub fn pbw_count(&self, d: usize) -> u64 {
        pbw_count(&self.parities, self.ell, d)
    }

    /// Rank of the `kappa` images of the ordered supermonomials of degree
    /// `<= d` equals [`pbw_count`](Self::pbw_count).
    pub fn independence_check(&self, d: usize) -> CheckOutcome {
        monomial_rank_check(&self.tensor, &self.kappa_family(), d)
    }
}

/// Next element of `{0..h}^len` in lexicographic order.
fn advance_path(path: &mut [usize], h: usize) -> bool {
    for x in path.iter_mut().rev() {
        *x += 1;
        if *x < h {
            return true;
        }
        *x = 0;
    }
    false
}

/// Next increasing tuple in `0..n`.
fn advance_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for pos in (0..k).rev() {
        if c[pos] < n - (k - pos) {
            c[pos] += 1;
            for q in pos + 1..k {
                c[q] = c[q - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A short human-readable name for a parameter set.
pub fn describe(m: usize, n: usize, ell: usize, seq: &EpsilonDeltaSequence) -> String {
    format!("(m,n,l,b)=({},{},{},{})", m, n, ell, seq)
}
