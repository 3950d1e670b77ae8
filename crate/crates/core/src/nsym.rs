//! NSym inside `H_(ι,α,β)` for two-dimensional base theories.
//!
//! Every basis used here is of the form `(τ)^ι_μ`: a pure tensor with one
//! element inside the parts of `μ` and another at its part boundaries.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::base_theory::{BaseElement, BaseTheory};
use crate::combinatorics::{
    binary_decode, enumerate_compositions, BinarySeq, Encoding, IntegerComposition, Permutation,
};
use crate::error::{Error, Result};
use crate::hopf::HopfContext;
use crate::report::{CheckReport, Report};
use crate::scalar::{sign, Scalar};
use crate::tensor::{TensorElement, TensorSquare};

/// Default largest `n` for which `S_n` is enumerated.
pub const DEFAULT_PERMUTATION_BOUND: usize = 7;

/// `τ^{⊗(μ_1-1)} ⊗ ι ⊗ τ^{⊗(μ_2-1)} ⊗ ι ⊗ ⋯ ⊗ τ^{⊗(μ_ℓ-1)} ⊗ χ^()`.
pub fn tau_iota_element(
    theory: &BaseTheory,
    tau: &BaseElement,
    iota: &BaseElement,
    mu: &IntegerComposition,
) -> Result<TensorElement> {
    if mu.is_empty() {
        return Err(Error::EmptyComposition);
    }
    theory.check(tau)?;
    theory.check(iota)?;
    Ok(TensorElement::pure(&pattern(tau, iota, mu)))
}

fn pattern(
    inside: &BaseElement,
    boundary: &BaseElement,
    mu: &IntegerComposition,
) -> Vec<BaseElement> {
    let mut factors = Vec::with_capacity(mu.size().saturating_sub(1));
    for (i, &part) in mu.parts().iter().enumerate() {
        if i > 0 {
            factors.push(boundary.clone());
        }
        factors.extend(std::iter::repeat_n(inside.clone(), part - 1));
    }
    factors
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NSymKind {
    /// `(α^*)^ι_μ ↦ H_μ`.
    HBasis,
    /// `(α^*)^{β^*}_μ ↦ R_μ`.
    Ribbon,
    /// `(τ)^ι_μ` for the complement `τ ⊥ β`, products of primitives.
    ShuffleDualPrimitive,
}

/// A basis `{(inside)^{boundary}_μ}`, together with the kind it realizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSymBasisTag {
    pub kind: NSymKind,
    pub inside: BaseElement,
    pub boundary: BaseElement,
}

pub fn nsym_element(tag: &NSymBasisTag, mu: &IntegerComposition) -> Result<TensorElement> {
    if mu.is_empty() {
        return Ok(TensorElement::unit());
    }
    Ok(TensorElement::pure(&pattern(
        &tag.inside,
        &tag.boundary,
        mu,
    )))
}

/// The distinguished elements of a two-dimensional context.
#[derive(Clone, Debug)]
pub struct NSymBridge {
    ctx: HopfContext,
    /// `(α^*, β^*)`, when `α ≠ β`.
    duals: Option<(BaseElement, BaseElement)>,
    /// The complement `τ`, when `α = β`.
    complement: Option<BaseElement>,
}

impl NSymBridge {
    pub fn new(ctx: &HopfContext) -> Result<Self> {
        let theory = ctx.theory();
        if theory.dim() != 2 {
            return Err(Error::NotTwoDimensional(theory.dim()));
        }
        let (duals, complement) = if ctx.alpha() == ctx.beta() {
            (None, Some(orthogonal_complement(theory, ctx.beta())?))
        } else {
            let mut dual = theory.dual_basis(&[ctx.alpha().clone(), ctx.beta().clone()])?;
            let beta_star = dual.pop().unwrap();
            let alpha_star = dual.pop().unwrap();
            (Some((alpha_star, beta_star)), None)
        };
        Ok(Self {
            ctx: ctx.clone(),
            duals,
            complement,
        })
    }

    pub fn ctx(&self) -> &HopfContext {
        &self.ctx
    }

    pub fn alpha_star(&self) -> Option<&BaseElement> {
        self.duals.as_ref().map(|d| &d.0)
    }

    pub fn beta_star(&self) -> Option<&BaseElement> {
        self.duals.as_ref().map(|d| &d.1)
    }

    pub fn complement(&self) -> Option<&BaseElement> {
        self.complement.as_ref()
    }

    /// The kinds this context supports.
    pub fn kinds(&self) -> Vec<NSymKind> {
        if self.duals.is_some() {
            vec![NSymKind::HBasis, NSymKind::Ribbon]
        } else {
            vec![NSymKind::ShuffleDualPrimitive]
        }
    }

    pub fn tag(&self, kind: NSymKind) -> Result<NSymBasisTag> {
        let iota = self.ctx.iota().clone();
        let inconsistent = |why: &str| Error::InconsistentTag(format!("{kind:?} {why}"));
        let (inside, boundary) = match kind {
            NSymKind::HBasis | NSymKind::Ribbon => {
                let (a, b) = self
                    .duals
                    .as_ref()
                    .ok_or_else(|| inconsistent("requires α ≠ β"))?;
                if kind == NSymKind::HBasis {
                    (a.clone(), iota)
                } else {
                    (a.clone(), b.clone())
                }
            }
            NSymKind::ShuffleDualPrimitive => {
                let tau = self
                    .complement
                    .as_ref()
                    .ok_or_else(|| inconsistent("requires α = β"))?;
                (tau.clone(), iota)
            }
        };
        Ok(NSymBasisTag {
            kind,
            inside,
            boundary,
        })
    }

    pub fn element(&self, kind: NSymKind, mu: &IntegerComposition) -> Result<TensorElement> {
        nsym_element(&self.tag(kind)?, mu)
    }

    /// Coordinates of a homogeneous element in the basis named by `kind`.
    pub fn coordinates(
        &self,
        kind: NSymKind,
        x: &TensorElement,
    ) -> Result<BTreeMap<IntegerComposition, Scalar>> {
        coordinates_in(self.ctx.theory(), &self.tag(kind)?, x)
    }

    /// Coordinates of both tensor factors.
    pub fn square_coordinates(
        &self,
        kind: NSymKind,
        x: &TensorSquare,
    ) -> Result<BTreeMap<(IntegerComposition, IntegerComposition), Scalar>> {
        let tag = self.tag(kind)?;
        let theory = self.ctx.theory();
        let mut out = BTreeMap::new();
        for ((left, right), c) in x.terms() {
            let l = coordinates_in(theory, &tag, &left.to_element())?;
            let r = coordinates_in(theory, &tag, &right.to_element())?;
            for (mu, a) in &l {
                for (nu, b) in &r {
                    add_into(&mut out, (mu.clone(), nu.clone()), c * a * b);
                }
            }
        }
        Ok(out)
    }
}

/// `τ` with `⟨τ,β⟩ = 0` whose first nonzero supercharacter coordinate is 1.
pub fn orthogonal_complement(theory: &BaseTheory, beta: &BaseElement) -> Result<BaseElement> {
    theory.check(beta)?;
    if theory.dim() != 2 {
        return Err(Error::NotTwoDimensional(theory.dim()));
    }
    if beta.is_zero() {
        return Err(Error::SingularSystem);
    }
    // ⟨τ,β⟩ = τ_0 p_0 + τ_1 p_1 with p_i = β_i g_i
    let p0 = &beta.0[0] * theory.gram(0);
    let p1 = &beta.0[1] * theory.gram(1);
    Ok(if p1.is_zero() {
        BaseElement(vec![Scalar::zero(), Scalar::one()])
    } else {
        BaseElement(vec![Scalar::one(), -(p0 / p1)])
    })
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn coordinates_in(
    theory: &BaseTheory,
    tag: &NSymBasisTag,
    x: &TensorElement,
) -> Result<BTreeMap<IntegerComposition, Scalar>> {
    let mut out = BTreeMap::new();
    if x.degree() == 0 {
        let c = x.coeff(&[]);
        add_into(&mut out, IntegerComposition::empty(), c);
        return Ok(out);
    }
    let basis = [tag.inside.clone(), tag.boundary.clone()];
    let per_letter: Vec<Vec<Scalar>> = (0..theory.dim())
        .map(|l| theory.coords_in(&theory.basis(l), &basis))
        .collect::<Result<_>>()?;
    // expand letter by letter into words over {inside = 0, boundary = 1}
    let mut expanded: BTreeMap<Vec<bool>, Scalar> = BTreeMap::new();
    for (word, c) in x.terms() {
        let mut partial: Vec<(Vec<bool>, Scalar)> = vec![(Vec::new(), c.clone())];
        for &l in word {
            let coords = &per_letter[l as usize];
            let mut next = Vec::with_capacity(partial.len() * 2);
            for (bits, c) in &partial {
                for (b, a) in [(false, &coords[0]), (true, &coords[1])] {
                    if !a.is_zero() {
                        let mut bits = bits.clone();
                        bits.push(b);
                        next.push((bits, c * a));
                    }
                }
            }
            partial = next;
        }
        for (bits, c) in partial {
            *expanded.entry(bits).or_insert_with(Scalar::zero) += c;
        }
    }
    for (bits, c) in expanded {
        if !c.is_zero() {
            out.insert(binary_decode(&BinarySeq(bits), Encoding::ZerosInside)?, c);
        }
    }
    Ok(out)
}

/// All pairs `(μ, ν)` of nonempty compositions with `|μ| + |ν| ≤ max_total`,
/// by total degree.
fn composition_pairs(max_total: usize) -> Vec<(IntegerComposition, IntegerComposition)> {
    let mut out = Vec::new();
    for total in 2..=max_total {
        for m in 1..total {
            for mu in enumerate_compositions(m) {
                for nu in enumerate_compositions(total - m) {
                    out.push((mu.clone(), nu));
                }
            }
        }
    }
    out
}

fn compositions_up_to(max: usize) -> impl Iterator<Item = IntegerComposition> {
    (1..=max).flat_map(enumerate_compositions)
}

/// The NSym structure rules through total degree `max_total` in an `α ≠ β` context.
///
/// The first check, multiplicativity of `Δ` on the `H` basis, is the one that
/// detects a context which is not a Hopf triple.
pub fn verify_nsym_rules(ctx: &HopfContext, max_total: usize) -> Result<Report> {
    let bridge = NSymBridge::new(ctx)?;
    let theory = ctx.theory().clone();
    let h = |mu: &IntegerComposition| bridge.element(NSymKind::HBasis, mu);
    let r = |mu: &IntegerComposition| bridge.element(NSymKind::Ribbon, mu);
    let show = |x: &TensorElement| x.display(&theory);
    let show_sq = |x: &TensorSquare| x.display(&theory);
    let pairs = composition_pairs(max_total);

    let mut delta_mult = CheckReport::new("h_delta_multiplicative");
    let mut h_prod = CheckReport::new("h_product");
    let mut r_prod = CheckReport::new("ribbon_product");
    for (mu, nu) in &pairs {
        let inputs = || format!("μ = {mu}, ν = {nu}");
        let (hm, hn) = (h(mu)?, h(nu)?);
        let prod = ctx.product(&hm, &hn)?;
        let lhs = ctx.coproduct(&prod)?;
        let rhs = ctx.square_product(&ctx.coproduct(&hm)?, &ctx.coproduct(&hn)?)?;
        delta_mult.record_eq(inputs, &lhs, &rhs, show_sq);

        h_prod.record_eq(inputs, &prod, &h(&mu.concat(nu)?)?, show);

        let lhs = ctx.product(&r(mu)?, &r(nu)?)?;
        let rhs = r(&mu.concat(nu)?)?.try_add(&r(&mu.smash(nu)?)?)?;
        r_prod.record_eq(inputs, &lhs, &rhs, show);
    }

    let mut h_cop = CheckReport::new("h_coproduct");
    for n in 1..=max_total {
        let lhs = ctx.coproduct(&h(&IntegerComposition::single(n))?)?;
        let mut rhs = TensorSquare::new();
        for j in 0..=n {
            let part = |k: usize| {
                if k == 0 {
                    Ok(TensorElement::unit())
                } else {
                    h(&IntegerComposition::single(k))
                }
            };
            rhs.add_tensor(&part(j)?, &part(n - j)?, &Scalar::one());
        }
        h_cop.record_eq(|| format!("n = {n}"), &lhs, &rhs, show_sq);
    }

    let mut expansion = CheckReport::new("h_ribbon_expansion");
    for mu in compositions_up_to(max_total) {
        let mut rhs = TensorElement::zero(mu.size());
        for nu in enumerate_compositions(mu.size()) {
            if mu.refines(&nu) {
                rhs.add_scaled(&r(&nu)?, &Scalar::one());
            }
        }
        expansion.record_eq(|| format!("μ = {mu}"), &h(&mu)?, &rhs, show);
    }

    let mut report = Report::new();
    for c in [delta_mult, h_prod, r_prod, h_cop, expansion] {
        report.push(c);
    }
    Ok(report)
}

/// Structure constants of one `(τ)^ι`-type basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub product:
        BTreeMap<(IntegerComposition, IntegerComposition), BTreeMap<IntegerComposition, Scalar>>,
    pub coproduct:
        BTreeMap<IntegerComposition, BTreeMap<(IntegerComposition, IntegerComposition), Scalar>>,
}

/// Products of pairs with `|μ| + |ν| ≤ max_total` and coproducts of every
/// basis element of degree `≤ max_total`, in the basis named by `kind`.
pub fn structure_constants(
    bridge: &NSymBridge,
    kind: NSymKind,
    max_total: usize,
) -> Result<StructureConstants> {
    let ctx = bridge.ctx();
    let mut product = BTreeMap::new();
    for (mu, nu) in composition_pairs(max_total) {
        let x = ctx.product(&bridge.element(kind, &mu)?, &bridge.element(kind, &nu)?)?;
        product.insert((mu, nu), bridge.coordinates(kind, &x)?);
    }
    let mut coproduct = BTreeMap::new();
    for mu in compositions_up_to(max_total) {
        let d = ctx.coproduct(&bridge.element(kind, &mu)?)?;
        coproduct.insert(mu, bridge.square_coordinates(kind, &d)?);
    }
    Ok(StructureConstants { product, coproduct })
}

/// `Δ`-primitivity, the single-part factorization, and the basis property of
/// `{(τ)^ι_μ}` through degree `max_degree`.
pub fn verify_free_generators(ctx: &HopfContext, max_degree: usize) -> Result<Report> {
    let bridge = NSymBridge::new(ctx)?;
    let theory = ctx.theory().clone();
    let kind = if bridge.complement().is_some() {
        NSymKind::ShuffleDualPrimitive
    } else {
        NSymKind::HBasis
    };
    let show = |x: &TensorElement| x.display(&theory);

    let mut factoring = CheckReport::new("simple_factoring");
    let mut basis = CheckReport::new("generator_basis");
    for n in 1..=max_degree {
        let comps = enumerate_compositions(n);
        let mut independent = 0usize;
        for mu in &comps {
            let x = bridge.element(kind, mu)?;
            let singles = mu
                .parts()
                .iter()
                .map(|&p| bridge.element(kind, &IntegerComposition::single(p)))
                .collect::<Result<Vec<_>>>()?;
            factoring.record_eq(
                || format!("μ = {mu}"),
                &x,
                &ctx.product_all(&singles)?,
                show,
            );
            let coords = bridge.coordinates(kind, &x)?;
            if coords.len() == 1 && coords.get(mu).is_some_and(One::is_one) {
                independent += 1;
            }
        }
        let expected = 1usize << (n - 1);
        basis.record(
            independent == comps.len() && comps.len() == expected,
            || crate::report::Failure {
                inputs: format!("n = {n}"),
                lhs: independent.to_string(),
                rhs: expected.to_string(),
            },
        );
    }

    let mut report = Report::new();
    report.push(factoring);
    report.push(basis);
    if kind == NSymKind::ShuffleDualPrimitive {
        let mut primitive = CheckReport::new("primitive_generators");
        for n in 1..=max_degree {
            let x = bridge.element(kind, &IntegerComposition::single(n))?;
            let ok = ctx.is_primitive(&x)?;
            primitive.record(ok, || crate::report::Failure {
                inputs: format!("n = {n}"),
                lhs: ctx
                    .coproduct(&x)
                    .map(|d| d.display(&theory))
                    .unwrap_or_default(),
                rhs: "x ⊗ χ^∅ + χ^∅ ⊗ x".into(),
            });
        }
        report.push(primitive);
    }
    Ok(report)
}

/// The closed antipode formulas available in a two-dimensional context.
///
/// For `α = β`: `S((τ)^ι_{(n)}) = -(τ)^ι_{(n)}` and
/// `S((τ)^ι_μ) = (-1)^{ℓ(μ)} (τ)^ι_{(μ_ℓ)} ⋯ (τ)^ι_{(μ_1)}`.
/// For `α ≠ β`: `S((α^*)^ι_{(n)}) = -(α^* - ι)^ι_{(n)}` and
/// `S(H_μ) = Σ_{ν refines rev μ} (-1)^{ℓ(ν)} H_ν`.
pub fn antipode_corollaries(ctx: &HopfContext, max_degree: usize) -> Result<Report> {
    let bridge = NSymBridge::new(ctx)?;
    let theory = ctx.theory().clone();
    let show = |x: &TensorElement| x.display(&theory);
    let iota = ctx.iota();
    let mut report = Report::new();

    if let Some(tau) = bridge.complement() {
        let kind = NSymKind::ShuffleDualPrimitive;
        let mut primitive = CheckReport::new("primitive_antipode");
        for n in 1..=max_degree {
            let x = bridge.element(kind, &IntegerComposition::single(n))?;
            primitive.record_eq(
                || format!("n = {n}"),
                &ctx.antipode_closed(&x)?,
                &x.neg(),
                show,
            );
        }
        let mut reversed = CheckReport::new("reversed_product");
        for mu in compositions_up_to(max_degree) {
            let x = tau_iota_element(&theory, tau, iota, &mu)?;
            let factors = mu
                .parts()
                .iter()
                .rev()
                .map(|&p| tau_iota_element(&theory, tau, iota, &IntegerComposition::single(p)))
                .collect::<Result<Vec<_>>>()?;
            let rhs = ctx.product_all(&factors)?.scale(&sign(mu.len()));
            reversed.record_eq(
                || format!("μ = {mu}"),
                &ctx.antipode_closed(&x)?,
                &rhs,
                show,
            );
        }
        report.push(primitive);
        report.push(reversed);
    } else {
        let alpha_star = bridge.alpha_star().unwrap();
        let shifted = alpha_star - iota;
        let mut generic = CheckReport::new("generic_antipode");
        for n in 1..=max_degree {
            let single = IntegerComposition::single(n);
            let x = tau_iota_element(&theory, alpha_star, iota, &single)?;
            let rhs = tau_iota_element(&theory, &shifted, iota, &single)?.neg();
            generic.record_eq(|| format!("n = {n}"), &ctx.antipode_closed(&x)?, &rhs, show);
        }
        let mut refinement = CheckReport::new("h_refinement");
        for mu in compositions_up_to(max_degree) {
            let rev = mu.reversed();
            let mut rhs = TensorElement::zero(mu.size());
            for nu in enumerate_compositions(mu.size()) {
                if nu.refines(&rev) {
                    rhs.add_scaled(&bridge.element(NSymKind::HBasis, &nu)?, &sign(nu.len()));
                }
            }
            let lhs = ctx.antipode_closed(&bridge.element(NSymKind::HBasis, &mu)?)?;
            refinement.record_eq(|| format!("μ = {mu}"), &lhs, &rhs, show);
        }
        report.push(generic);
        report.push(refinement);
    }
    Ok(report)
}

/// A formal sum of permutations, standing for fundamental basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalImage {
    pub n: usize,
    pub terms: BTreeMap<Permutation, Scalar>,
}

/// `{w ∈ S_n : desc(w^{-1}) = {μ_1, μ_1+μ_2, …, n-μ_ℓ}}`, in lexicographic order.
pub fn descent_class(mu: &IntegerComposition, bound: usize) -> Result<Vec<Permutation>> {
    let n = mu.size();
    if n == 0 {
        return Err(Error::EmptyComposition);
    }
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "permutation size",
            n,
            bound,
        });
    }
    let target = mu.boundaries();
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|w| w.inverse().descents() == target)
        .collect())
}

/// The image of `R_μ` in the fundamental basis: coefficient 1 on its descent class.
pub fn descent_embedding(mu: &IntegerComposition, bound: usize) -> Result<FundamentalImage> {
    let terms = descent_class(mu, bound)?
        .into_iter()
        .map(|w| (w, Scalar::one()))
        .collect();
    Ok(FundamentalImage {
        n: mu.size(),
        terms,
    })
}
