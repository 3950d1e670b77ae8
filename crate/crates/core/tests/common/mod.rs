#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};
use scf_hopf::base_theory::BaseTheory;
use scf_hopf::hopf::HopfContext;
use scf_hopf::scalar::{frac, int};
use scf_hopf::tensor::{Letter, TensorElement, TensorSquare};
use scf_hopf::Scalar;

pub fn two_dim(q: u64) -> Arc<BaseTheory> {
    Arc::new(BaseTheory::two_dim(q).unwrap())
}

/// The three supercharacters of the cyclic group of order 4 with classes
/// `{e}`, `{g²}`, `{g, g³}`.
pub fn cyclic4() -> Arc<BaseTheory> {
    Arc::new(
        BaseTheory::from_table(
            vec![
                vec![int(1), int(1), int(1)],
                vec![int(1), int(1), int(-1)],
                vec![int(2), int(-2), int(0)],
            ],
            vec![1, 1, 2],
            0,
            vec!["one".into(), "sign".into(), "faithful".into()],
        )
        .unwrap(),
    )
}

/// `(𝟙, 𝟙, 𝟙)`.
pub fn trivial_ctx(t: &Arc<BaseTheory>) -> HopfContext {
    let one = t.one();
    HopfContext::new(t.clone(), one.clone(), one.clone(), one).unwrap()
}

/// `(reg, 𝟙, (reg - 𝟙)/(q - 1))` over `two_dim(q)`.
pub fn h_ctx(q: u64) -> HopfContext {
    let t = two_dim(q);
    let beta = (&t.reg() - &t.one()).scale(&frac(1, q as i64 - 1));
    HopfContext::new(t.clone(), t.reg(), t.one(), beta).unwrap()
}

/// `(reg, 𝟙, (reg - 𝟙)/(|G| - 1))` over any theory.
pub fn reg_ctx(t: &Arc<BaseTheory>) -> HopfContext {
    let beta = (&t.reg() - &t.one()).scale(&frac(1, t.order() as i64 - 1));
    HopfContext::new(t.clone(), t.reg(), t.one(), beta).unwrap()
}

/// All words of the given length over `d` letters.
pub fn words(d: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..d as Letter).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// Basis elements of degree `n`.
pub fn basis(d: usize, n: usize) -> Vec<TensorElement> {
    if n == 0 {
        return vec![TensorElement::unit()];
    }
    words(d, n - 1)
        .iter()
        .map(|w| TensorElement::word(w))
        .collect()
}

/// A function on tuples of superclasses, keyed by the tuple.
pub type ValueTable = BTreeMap<Vec<usize>, Scalar>;

/// Values of a linear combination of words on every class tuple of length `len`.
pub fn value_table(
    theory: &BaseTheory,
    len: usize,
    terms: &BTreeMap<Vec<Letter>, Scalar>,
) -> ValueTable {
    let k = theory.sizes().len();
    let mut table = ValueTable::new();
    for classes in words(k, len) {
        let classes: Vec<usize> = classes.into_iter().map(|c| c as usize).collect();
        let mut v = Scalar::zero();
        for (w, c) in terms {
            let mut p = c.clone();
            for (j, &l) in w.iter().enumerate() {
                p *= &theory.values()[l as usize][classes[j]];
            }
            v += p;
        }
        table.insert(classes, v);
    }
    table
}

/// Positions (0-based) of the ones of a bit vector.
pub fn ones(bits: &[bool]) -> Vec<usize> {
    bits.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i)
        .collect()
}

/// Extends a function on the coordinates `sub` of `G^len` to all of `G^len`,
/// filling each missing coordinate `c` by `fill(class)`.
fn extend(
    theory: &BaseTheory,
    len: usize,
    sub: &[usize],
    table: &ValueTable,
    fill: impl Fn(usize) -> Scalar,
) -> ValueTable {
    let k = theory.sizes().len();
    let mut out = ValueTable::new();
    for classes in words(k, len) {
        let classes: Vec<usize> = classes.into_iter().map(|c| c as usize).collect();
        let key: Vec<usize> = sub.iter().map(|&j| classes[j]).collect();
        let mut v = table[&key].clone();
        for j in (0..len).filter(|j| !sub.contains(j)) {
            v *= fill(classes[j]);
        }
        out.insert(classes, v);
    }
    out
}

/// Inflation: constant along the coordinates outside `sub`.
pub fn oracle_inf(
    theory: &BaseTheory,
    len: usize,
    sub: &[usize],
    table: &ValueTable,
) -> ValueTable {
    extend(theory, len, sub, table, |_| Scalar::one())
}

/// Induction from a direct factor: `|G|` at the identity, 0 elsewhere, outside `sub`.
pub fn oracle_ind(
    theory: &BaseTheory,
    len: usize,
    sub: &[usize],
    table: &ValueTable,
) -> ValueTable {
    let order = Scalar::from_integer(theory.order().into());
    let e = theory.identity_class();
    extend(theory, len, sub, table, |c| {
        if c == e {
            order.clone()
        } else {
            Scalar::zero()
        }
    })
}

/// Deflation: average over the coordinates outside `sub`.
pub fn oracle_def(
    theory: &BaseTheory,
    len: usize,
    sub: &[usize],
    table: &ValueTable,
) -> ValueTable {
    let order = Scalar::from_integer(theory.order().into());
    let mut out = ValueTable::new();
    for (classes, v) in table {
        let key: Vec<usize> = sub.iter().map(|&j| classes[j]).collect();
        let mut weight = Scalar::one();
        for j in (0..len).filter(|j| !sub.contains(j)) {
            weight *= Scalar::from_integer(theory.sizes()[classes[j]].into()) / &order;
        }
        *out.entry(key).or_insert_with(Scalar::zero) += v * weight;
    }
    out
}

/// Restriction to a direct factor: evaluate at the identity outside `sub`.
pub fn oracle_res(
    theory: &BaseTheory,
    len: usize,
    sub: &[usize],
    table: &ValueTable,
) -> ValueTable {
    let e = theory.identity_class();
    table
        .iter()
        .filter(|(classes, _)| {
            (0..len)
                .filter(|j| !sub.contains(j))
                .all(|j| classes[j] == e)
        })
        .map(|(classes, v)| (sub.iter().map(|&j| classes[j]).collect(), v.clone()))
        .collect()
}

/// `S` by Takeuchi-style recursion on basis words, independent of the library's
/// memoized oracle: `S(x) = -x - Σ S(x') x''` over the reduced coproduct.
pub fn recursive_antipode(ctx: &HopfContext, x: &TensorElement) -> TensorElement {
    let n = x.degree();
    if n == 0 {
        return x.clone();
    }
    let mut out = x.neg();
    for ((l, r), c) in ctx.coproduct(x).unwrap().terms() {
        if l.degree == 0 || r.degree == 0 {
            continue;
        }
        let s = recursive_antipode(ctx, &l.to_element());
        let term = ctx.product(&s, &r.to_element()).unwrap();
        out.add_scaled(&term, &-c);
    }
    out
}

pub fn square(x: &TensorElement, y: &TensorElement) -> TensorSquare {
    TensorSquare::from_tensor(x, y)
}
