//! Inflation, deflation, induction and restriction along the subgroups
//! `G^{n-1}_a`, and the refinement functors `Inf_A^B[ι]` and `Dn_A^B[τ,α,β]`.
//!
//! All functors act on factored functions coordinate by coordinate, so they
//! are implemented letter by letter on basis words and extended linearly.

use std::collections::BTreeMap;

use num::Zero;

use crate::base_theory::{BaseElement, BaseTheory};
use crate::combinatorics::{BinarySeq, Permutation, SetComposition};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{word_len, Letter, TensorElement, Word};

/// An element of `scf(G^{n-1}_a)`: words carry one letter per `1` of `support`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Supported {
    support: BinarySeq,
    terms: BTreeMap<Word, Scalar>,
}

impl Supported {
    pub fn new(support: BinarySeq, terms: BTreeMap<Word, Scalar>) -> Result<Self> {
        let weight = support.weight();
        if terms.keys().any(|w| w.len() != weight) {
            return Err(Error::IncompatibleSupport);
        }
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self { support, terms })
    }

    /// A degree-`n` element viewed on the full group `G^{n-1}`.
    pub fn full(x: &TensorElement) -> Result<Self> {
        if x.degree() == 0 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Self {
            support: BinarySeq::ones(word_len(x.degree())),
            terms: x.terms().clone(),
        })
    }

    /// `n`, where the ambient group is `G^{n-1}`.
    pub fn n(&self) -> usize {
        self.support.len() + 1
    }

    pub fn support(&self) -> &BinarySeq {
        &self.support
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The same function on `G^{|a|} ≅ G^{n-1}_a`, as an element of degree `|a| + 1`.
    pub fn compressed(&self) -> TensorElement {
        let mut x = TensorElement::zero(self.support.weight() + 1);
        for (w, c) in &self.terms {
            x.add_term(w.clone(), c.clone());
        }
        x
    }

    /// Back to `TensorElement` when the support is everything.
    pub fn into_full(self) -> Result<TensorElement> {
        if self.support.weight() != self.support.len() {
            return Err(Error::IncompatibleSupport);
        }
        Ok(self.compressed())
    }

    fn add(&mut self, word: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(word.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&word);
        }
    }
}

/// One output coordinate of a letterwise map.
enum Slot<'a> {
    /// Copy the next input letter.
    Keep,
    /// Consume the next input letter, multiply by a scalar depending on it,
    /// then optionally insert the expansion of an element.
    Pair(&'a BaseElement, Option<&'a BaseElement>),
    /// Consume the next input letter and multiply by a scalar; no output letter.
    Drop(&'a BaseElement),
    /// Insert the expansion of an element without consuming input.
    Insert(&'a BaseElement),
}

/// Applies a per-coordinate program to every word of `terms`.
fn run_slots(
    theory: &BaseTheory,
    slots: &[Slot<'_>],
    terms: &BTreeMap<Word, Scalar>,
) -> BTreeMap<Word, Scalar> {
    let mut out: BTreeMap<Word, Scalar> = BTreeMap::new();
    for (word, coeff) in terms {
        let mut partial: Vec<(Word, Scalar)> = vec![(Vec::new(), coeff.clone())];
        let mut letters = word.iter();
        for slot in slots {
            let insert = |partial: Vec<(Word, Scalar)>, e: &BaseElement| {
                let mut next = Vec::with_capacity(partial.len() * e.dim());
                for (w, c) in &partial {
                    for (l, x) in e.coords().iter().enumerate() {
                        if !x.is_zero() {
                            let mut w = w.clone();
                            w.push(l as Letter);
                            next.push((w, c * x));
                        }
                    }
                }
                next
            };
            match slot {
                Slot::Keep => {
                    let l = *letters.next().expect("word shorter than its support");
                    for (w, _) in partial.iter_mut() {
                        w.push(l);
                    }
                }
                Slot::Pair(with, then) => {
                    let l = *letters.next().expect("word shorter than its support") as usize;
                    let s = theory.pair_basis(l, with);
                    if s.is_zero() {
                        partial.clear();
                        break;
                    }
                    for (_, c) in partial.iter_mut() {
                        *c *= &s;
                    }
                    if let Some(e) = then {
                        partial = insert(partial, e);
                    }
                }
                Slot::Drop(with) => {
                    let l = *letters.next().expect("word shorter than its support") as usize;
                    let s = theory.pair_basis(l, with);
                    if s.is_zero() {
                        partial.clear();
                        break;
                    }
                    for (_, c) in partial.iter_mut() {
                        *c *= &s;
                    }
                }
                Slot::Insert(e) => partial = insert(partial, e),
            }
        }
        for (w, c) in partial {
            let slot = out.entry(w.clone()).or_insert_with(Scalar::zero);
            *slot += c;
            if slot.is_zero() {
                out.remove(&w);
            }
        }
    }
    out
}

fn expect_degree(x: &TensorElement, degree: usize) -> Result<()> {
    if x.degree() == degree {
        Ok(())
    } else {
        Err(Error::DegreeMismatch {
            expected: degree,
            found: x.degree(),
        })
    }
}

fn along(
    theory: &BaseTheory,
    a: &BinarySeq,
    psi: &TensorElement,
    filler: &BaseElement,
    expand: bool,
) -> Result<TensorElement> {
    psi.check_letters(theory)?;
    let (source, target) = if expand {
        (a.weight() + 1, a.len() + 1)
    } else {
        (a.len() + 1, a.weight() + 1)
    };
    expect_degree(psi, source)?;
    let slots: Vec<Slot> =
        a.0.iter()
            .map(|&bit| match (bit, expand) {
                (true, _) => Slot::Keep,
                (false, true) => Slot::Insert(filler),
                (false, false) => Slot::Drop(filler),
            })
            .collect();
    let mut out = TensorElement::zero(target);
    for (w, c) in run_slots(theory, &slots, psi.terms()) {
        out.add_term(w, c);
    }
    Ok(out)
}

/// Inflation from `G^{n-1}_a` to `G^{n-1}`: `𝟙` at the zeros of `a`.
pub fn inf_along(theory: &BaseTheory, a: &BinarySeq, psi: &TensorElement) -> Result<TensorElement> {
    along(theory, a, psi, &theory.one(), true)
}

/// Deflation from `G^{n-1}` to `G^{n-1}_a`: the zeros of `a` are paired with `𝟙`.
pub fn def_along(theory: &BaseTheory, a: &BinarySeq, psi: &TensorElement) -> Result<TensorElement> {
    along(theory, a, psi, &theory.one(), false)
}

/// Induction from `G^{n-1}_a` to `G^{n-1}`: `reg` at the zeros of `a`.
pub fn ind_along(theory: &BaseTheory, a: &BinarySeq, psi: &TensorElement) -> Result<TensorElement> {
    along(theory, a, psi, &theory.reg(), true)
}

/// Restriction from `G^{n-1}` to `G^{n-1}_a`: the zeros of `a` are paired with `reg`.
pub fn res_along(theory: &BaseTheory, a: &BinarySeq, psi: &TensorElement) -> Result<TensorElement> {
    along(theory, a, psi, &theory.reg(), false)
}

fn check_refinement(a: &SetComposition, b: &SetComposition) -> Result<()> {
    if a.refines(b)? {
        Ok(())
    } else {
        Err(Error::NotARefinement)
    }
}

/// `Inf_A^B[ι]: scf(G^{n-1}_{lc(A)}) → scf(G^{n-1}_{lc(B)})`.
pub fn inf_bracket(
    theory: &BaseTheory,
    iota: &BaseElement,
    a: &SetComposition,
    b: &SetComposition,
    psi: &Supported,
) -> Result<Supported> {
    check_refinement(a, b)?;
    theory.check(iota)?;
    let (lc_a, lc_b) = (a.lc(), b.lc());
    if psi.support != lc_a {
        return Err(Error::IncompatibleSupport);
    }
    let slots: Vec<Slot> = (1..a.n())
        .filter(|&j| lc_b.at(j))
        .map(|j| {
            if lc_a.at(j) {
                Slot::Keep
            } else {
                Slot::Insert(iota)
            }
        })
        .collect();
    Supported::new(lc_b, run_slots(theory, &slots, &psi.terms))
}

/// `Dn_A^B[τ,α,β]: scf(G^{n-1}_{lc(B)}) → scf(G^{n-1}_{lc(A)})`.
///
/// Coordinate `j` (present in `lc(B)`) is kept when `j, j+1` share a block of
/// `A`; otherwise it is paired with `α` (if `j+1` lies in the same or a later
/// block) or `β`, and replaced by `τ` when `j` is not maximal in its block.
pub fn dn_bracket(
    theory: &BaseTheory,
    tau: &BaseElement,
    alpha: &BaseElement,
    beta: &BaseElement,
    a: &SetComposition,
    b: &SetComposition,
    psi: &Supported,
) -> Result<Supported> {
    check_refinement(a, b)?;
    for e in [tau, alpha, beta] {
        theory.check(e)?;
    }
    let stats = a.stats();
    let lc_b = b.lc();
    if psi.support != lc_b {
        return Err(Error::IncompatibleSupport);
    }
    let slots: Vec<Slot> = (1..a.n())
        .filter(|&j| lc_b.at(j))
        .map(|j| {
            if stats.bc.at(j) {
                return Slot::Keep;
            }
            let with = if stats.llc.at(j) { alpha } else { beta };
            if stats.lc.at(j) {
                Slot::Pair(with, Some(tau))
            } else {
                Slot::Drop(with)
            }
        })
        .collect();
    Supported::new(stats.lc, run_slots(theory, &slots, &psi.terms))
}

/// Moves the letter at coordinate `j` to coordinate `w(j)`.
///
/// Every occupied coordinate must land in `{1..n-1}`.
pub fn permute(w: &Permutation, psi: &Supported) -> Result<Supported> {
    let n = psi.n();
    if w.n() != n {
        return Err(Error::GroundSetMismatch(w.n(), n));
    }
    let sources: Vec<usize> = (1..n).filter(|&j| psi.support.at(j)).collect();
    let mut targets: Vec<(usize, usize)> = sources
        .iter()
        .enumerate()
        .map(|(k, &j)| (w.apply(j), k))
        .collect();
    if targets.iter().any(|&(t, _)| t == n) {
        return Err(Error::IncompatibleSupport);
    }
    targets.sort_unstable();
    let mut support = BinarySeq::zeros(n - 1);
    for &(t, _) in &targets {
        support.0[t - 1] = true;
    }
    let mut out = Supported {
        support,
        terms: BTreeMap::new(),
    };
    for (word, c) in &psi.terms {
        let moved: Word = targets.iter().map(|&(_, k)| word[k]).collect();
        out.add(moved, c.clone());
    }
    Ok(out)
}

/// Splits a function on `G^{n-1}_{lc(A)}` into one word per block of `A`:
/// block `A_k` receives the letters at its non-maximal elements, in order.
pub fn unshuffle(a: &SetComposition, word: &[Letter]) -> Vec<Word> {
    let lc = a.lc();
    let mut blocks = vec![Vec::new(); a.len()];
    let mut letters = word.iter();
    for j in 1..a.n() {
        if lc.at(j) {
            blocks[a.block_of(j)].push(*letters.next().expect("word shorter than its support"));
        }
    }
    blocks
}
