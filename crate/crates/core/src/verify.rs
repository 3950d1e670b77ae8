//! Exhaustive checks of the Hopf axioms and of the closed formulas, over all
//! basis words up to a degree bound.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::characters::LinearCharacter;
use crate::combinatorics::enumerate_toggle_free;
use crate::error::Result;
use crate::hopf::HopfContext;
use crate::nsym::{antipode_corollaries, verify_free_generators, verify_nsym_rules, NSymBridge};
use crate::report::{CheckReport, Failure, Report};
use crate::scalar::{format_scalar, Scalar};
use crate::tensor::{BasisWord, TensorElement, TensorSquare};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Axioms,
    AntipodeEquiv,
    Nsym,
    Characters,
    All,
}

pub fn run_suite(ctx: &HopfContext, suite: Suite, max_degree: usize) -> Result<Report> {
    match suite {
        Suite::Axioms => axioms(ctx, max_degree),
        Suite::AntipodeEquiv => antipode_equivalence(ctx, max_degree, max_degree),
        Suite::Nsym => nsym_suite(ctx, max_degree),
        Suite::Characters => character_group(ctx, max_degree),
        Suite::All => {
            let mut report = axioms(ctx, max_degree)?;
            report.extend(antipode_equivalence(ctx, max_degree, max_degree)?);
            if ctx.theory().dim() == 2 {
                report.extend(nsym_suite(ctx, max_degree)?);
            }
            report.extend(character_group(ctx, max_degree)?);
            Ok(report)
        }
    }
}

/// An element of `H ⊗ H ⊗ H`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorCube {
    terms: BTreeMap<(BasisWord, BasisWord, BasisWord), Scalar>,
}

impl TensorCube {
    pub fn add_term(&mut self, key: (BasisWord, BasisWord, BasisWord), c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(BasisWord, BasisWord, BasisWord), Scalar> {
        &self.terms
    }

    fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((a, b, c), x)| {
                format!(
                    "{}·({:?} | {:?} | {:?})",
                    format_scalar(x),
                    a.letters,
                    b.letters,
                    c.letters
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Memoized coproducts and antipodes of basis words.
struct Cache<'a> {
    ctx: &'a HopfContext,
    coproduct: RefCell<HashMap<BasisWord, TensorSquare>>,
    antipode: RefCell<HashMap<BasisWord, TensorElement>>,
}

impl<'a> Cache<'a> {
    fn new(ctx: &'a HopfContext) -> Self {
        Self {
            ctx,
            coproduct: RefCell::default(),
            antipode: RefCell::default(),
        }
    }

    fn coproduct(&self, w: &BasisWord) -> Result<TensorSquare> {
        if let Some(d) = self.coproduct.borrow().get(w) {
            return Ok(d.clone());
        }
        let d = self.ctx.coproduct(&w.to_element())?;
        self.coproduct.borrow_mut().insert(w.clone(), d.clone());
        Ok(d)
    }

    fn antipode(&self, x: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero(x.degree());
        for (letters, c) in x.terms() {
            let w = BasisWord {
                degree: x.degree(),
                letters: letters.clone(),
            };
            let cached = self.antipode.borrow().get(&w).cloned();
            let s = match cached {
                Some(s) => s,
                None => {
                    let s = self.ctx.antipode_closed(&w.to_element())?;
                    self.antipode.borrow_mut().insert(w, s.clone());
                    s
                }
            };
            out.add_scaled(&s, c);
        }
        Ok(out)
    }
}

fn words_up_to(d: usize, max: usize) -> Vec<BasisWord> {
    (0..=max).flat_map(|n| BasisWord::all(d, n)).collect()
}

fn show_word(w: &BasisWord) -> String {
    format!("deg {} {:?}", w.degree, w.letters)
}

/// Unit, associativity, counit, coassociativity, compatibility and the
/// antipode axiom on every basis word (tuple) of total degree `≤ max_total`.
pub fn axioms(ctx: &HopfContext, max_total: usize) -> Result<Report> {
    let theory = ctx.theory().clone();
    let d = theory.dim();
    let cache = Cache::new(ctx);
    let show = |x: &TensorElement| x.display(&theory);
    let show_sq = |x: &TensorSquare| x.display(&theory);
    let words = words_up_to(d, max_total);
    let unit = TensorElement::unit();

    let mut unit_law = CheckReport::new("unit");
    let mut counit_law = CheckReport::new("counit");
    let mut coassoc = CheckReport::new("coassociativity");
    let mut antipode = CheckReport::new("antipode_axiom");
    for w in &words {
        let x = w.to_element();
        let inputs = || show_word(w);
        unit_law.record_eq(inputs, &ctx.product(&x, &unit)?, &x, show);
        unit_law.record_eq(inputs, &ctx.product(&unit, &x)?, &x, show);

        let delta = cache.coproduct(w)?;
        let mut left = TensorElement::zero(w.degree);
        let mut right = TensorElement::zero(w.degree);
        for ((l, r), c) in delta.terms() {
            let el = ctx.counit(&l.to_element());
            let er = ctx.counit(&r.to_element());
            if !el.is_zero() && r.degree == w.degree {
                left.add_term(r.letters.clone(), c * el);
            }
            if !er.is_zero() && l.degree == w.degree {
                right.add_term(l.letters.clone(), c * er);
            }
        }
        counit_law.record_eq(inputs, &left, &x, show);
        counit_law.record_eq(inputs, &right, &x, show);

        let mut lhs = TensorCube::default();
        let mut rhs = TensorCube::default();
        for ((l, r), c) in delta.terms() {
            for ((a, b), e) in cache.coproduct(l)?.terms() {
                lhs.add_term((a.clone(), b.clone(), r.clone()), c * e);
            }
            for ((a, b), e) in cache.coproduct(r)?.terms() {
                rhs.add_term((l.clone(), a.clone(), b.clone()), c * e);
            }
        }
        coassoc.record_eq(inputs, &lhs, &rhs, TensorCube::display);

        let expected = if w.degree == 0 {
            TensorElement::unit()
        } else {
            TensorElement::zero(w.degree)
        };
        let s_id = ctx.multiply_square(&delta, |a| cache.antipode(a), |b| Ok(b.clone()))?;
        let id_s = ctx.multiply_square(&delta, |a| Ok(a.clone()), |b| cache.antipode(b))?;
        antipode.record_eq(inputs, &s_id, &expected, show);
        antipode.record_eq(inputs, &id_s, &expected, show);
    }

    let mut assoc = CheckReport::new("associativity");
    let mut compat = CheckReport::new("compatibility");
    for x in &words {
        for y in words.iter().filter(|y| x.degree + y.degree <= max_total) {
            let (xe, ye) = (x.to_element(), y.to_element());
            let xy = ctx.product(&xe, &ye)?;
            let inputs = || format!("{} · {}", show_word(x), show_word(y));
            let lhs = ctx.coproduct(&xy)?;
            let rhs = ctx.square_product(&cache.coproduct(x)?, &cache.coproduct(y)?)?;
            compat.record_eq(inputs, &lhs, &rhs, show_sq);
            for z in words
                .iter()
                .filter(|z| x.degree + y.degree + z.degree <= max_total)
            {
                let ze = z.to_element();
                let lhs = ctx.product(&xy, &ze)?;
                let rhs = ctx.product(&xe, &ctx.product(&ye, &ze)?)?;
                let inputs = || format!("{} · {} · {}", show_word(x), show_word(y), show_word(z));
                assoc.record_eq(inputs, &lhs, &rhs, show);
            }
        }
    }

    let mut report = Report::new();
    for c in [unit_law, assoc, counit_law, coassoc, compat, antipode] {
        report.push(c);
    }
    Ok(report)
}

/// The four antipode computations agree on every basis word of degree
/// `≤ max_degree`; the toggle-free sets have `3^{n-1}` elements for `n ≤ max_count`.
pub fn antipode_equivalence(
    ctx: &HopfContext,
    max_degree: usize,
    max_count: usize,
) -> Result<Report> {
    let theory = ctx.theory().clone();
    let show = |x: &TensorElement| x.display(&theory);
    let mut agree = CheckReport::new("antipode_formulas_agree");
    let mut tf_summands = serde_json::Map::new();
    let mut all_summands = serde_json::Map::new();
    for n in 1..=max_degree {
        for w in BasisWord::all(theory.dim(), n) {
            let x = w.to_element();
            let closed = ctx.antipode_closed(&x)?;
            let tf = ctx.antipode_toggle_free(&x)?;
            let all = ctx.antipode_all_setcomps(&x)?;
            let oracle = ctx.antipode_oracle(&x)?;
            let inputs = || show_word(&w);
            agree.record_eq(inputs, &tf.value, &closed, show);
            agree.record_eq(inputs, &all.value, &closed, show);
            agree.record_eq(inputs, &oracle, &closed, show);
            tf_summands.insert(n.to_string(), tf.summands.into());
            all_summands.insert(n.to_string(), all.summands.into());
        }
    }
    agree.detail("toggle_free_summands", tf_summands);
    agree.detail("set_composition_summands", all_summands);

    let mut count = CheckReport::new("toggle_free_count");
    let mut counts = serde_json::Map::new();
    for n in 1..=max_count {
        let found = enumerate_toggle_free(n).len();
        let expected = 3usize.pow(n as u32 - 1);
        counts.insert(n.to_string(), found.into());
        count.record(found == expected, || Failure {
            inputs: format!("n = {n}"),
            lhs: found.to_string(),
            rhs: expected.to_string(),
        });
    }
    count.detail("counts", counts);

    let mut report = Report::new();
    report.push(agree);
    report.push(count);
    Ok(report)
}

/// The NSym rules (for `α ≠ β`), the antipode corollaries and free generation.
pub fn nsym_suite(ctx: &HopfContext, max_degree: usize) -> Result<Report> {
    let bridge = NSymBridge::new(ctx)?;
    let mut report = Report::new();
    if bridge.alpha_star().is_some() {
        report.extend(verify_nsym_rules(ctx, max_degree)?);
    }
    report.extend(antipode_corollaries(ctx, max_degree)?);
    report.extend(verify_free_generators(ctx, max_degree)?);
    Ok(report)
}

/// Morphism checks for the constant characters, the two convolution formulas,
/// inverses, and oddness when `α = β`.
pub fn character_group(ctx: &HopfContext, max_degree: usize) -> Result<Report> {
    let theory = ctx.theory().clone();
    let show = |x: &TensorElement| x.display(&theory);
    let alpha = LinearCharacter::constant(ctx, ctx.alpha(), max_degree)?;
    let beta = LinearCharacter::constant(ctx, ctx.beta(), max_degree)?;
    let counit = LinearCharacter::counit(ctx, max_degree);
    let mut report = Report::new();

    let mut morphism = CheckReport::new("constant_characters_are_morphisms");
    for (name, c) in [("α", &alpha), ("β", &beta)] {
        let check = c.check_morphism();
        morphism.record(check.passed(), || match check {
            crate::characters::MorphismCheck::Fails { n, j, lhs, rhs } => Failure {
                inputs: format!("constant({name}), n = {n}, j = {j}"),
                lhs: lhs.display(&theory),
                rhs: rhs.display(&theory),
            },
            crate::characters::MorphismCheck::Morphism => unreachable!(),
        });
    }
    let all_morphisms = morphism.passed;
    report.push(morphism);
    if !all_morphisms {
        return Ok(report);
    }

    let mut formulas = CheckReport::new("convolution_closed_equals_definitional");
    let mut inverse = CheckReport::new("convolution_inverse");
    for (name, x, y) in [
        ("α∘β", &alpha, &beta),
        ("β∘α", &beta, &alpha),
        ("α∘α", &alpha, &alpha),
    ] {
        let closed = x.convolve_closed(y)?;
        let definitional = x.convolve_definitional(y)?;
        for n in 0..=max_degree {
            formulas.record_eq(
                || format!("{name}, degree {n}"),
                closed.component(n),
                definitional.component(n),
                show,
            );
        }
    }
    for (name, c) in [("α", &alpha), ("β", &beta)] {
        let inv = c.inverse()?;
        for (order, product) in [("Ψ∘Ψ⁻¹", c.convolve(&inv)?), ("Ψ⁻¹∘Ψ", inv.convolve(c)?)]
        {
            for n in 0..=max_degree {
                inverse.record_eq(
                    || format!("constant({name}), {order}, degree {n}"),
                    product.component(n),
                    counit.component(n),
                    show,
                );
            }
        }
    }
    report.push(formulas);
    report.push(inverse);

    if ctx.alpha() == ctx.beta() {
        let mut odd = CheckReport::new("constant_alpha_is_odd");
        let inv = alpha.inverse()?;
        for n in 1..=max_degree {
            let expected = alpha.component(n).scale(&crate::scalar::sign(n));
            odd.record_eq(|| format!("degree {n}"), inv.component(n), &expected, show);
        }
        report.push(odd);
    }
    Ok(report)
}
