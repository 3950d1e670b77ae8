//! The Hopf algebra `H_(ι,α,β)` on `scf(G^•)`.

use std::collections::HashMap;
use std::sync::Arc;

use num::{One, Zero};

use crate::base_theory::{BaseElement, BaseTheory};
use crate::combinatorics::{
    enumerate_compositions, enumerate_set_compositions, enumerate_toggle_free, SetComposition,
};
use crate::error::{Error, Pairing, Result};
use crate::functors::{dn_bracket, inf_bracket, permute, unshuffle, Supported};
use crate::scalar::{sign, Scalar};
use crate::tensor::{BasisWord, Letter, TensorElement, TensorSquare, Word};

/// A triple `(ι, α, β)` over a base theory, together with the coproduct's `τ`.
///
/// Contexts built with [`HopfContext::new`] satisfy `⟨ι,α⟩ = ⟨ι,β⟩ = 1` and
/// `τ = ι`; [`HopfContext::unchecked`] skips validation so that non-Hopf
/// configurations can be exhibited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfContext {
    theory: Arc<BaseTheory>,
    iota: BaseElement,
    tau: BaseElement,
    alpha: BaseElement,
    beta: BaseElement,
    validated: bool,
}

/// Checks the Hopf-triple pairings.
pub fn validate_triple(
    theory: &BaseTheory,
    iota: &BaseElement,
    alpha: &BaseElement,
    beta: &BaseElement,
) -> Result<()> {
    for (which, e) in [(Pairing::Alpha, alpha), (Pairing::Beta, beta)] {
        let value = theory.inner(iota, e)?;
        if !value.is_one() {
            return Err(Error::PairingNotOne { which, value });
        }
    }
    Ok(())
}

/// The result of a set-composition antipode expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeSum {
    pub value: TensorElement,
    /// Number of set compositions summed over, per input basis word.
    pub summands: usize,
}

/// A basis of `scf(G)` containing `ι`, in which `H` is free on the `ι`-free words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkingBasis {
    pub elements: Vec<BaseElement>,
    pub iota_index: usize,
}

impl HopfContext {
    pub fn new(
        theory: Arc<BaseTheory>,
        iota: BaseElement,
        alpha: BaseElement,
        beta: BaseElement,
    ) -> Result<Self> {
        validate_triple(&theory, &iota, &alpha, &beta)?;
        Ok(Self {
            theory,
            tau: iota.clone(),
            iota,
            alpha,
            beta,
            validated: true,
        })
    }

    /// A context with `τ = ι` whose pairings are not required to be 1.
    pub fn unchecked(
        theory: Arc<BaseTheory>,
        iota: BaseElement,
        alpha: BaseElement,
        beta: BaseElement,
    ) -> Result<Self> {
        let tau = iota.clone();
        Self::with_tau(theory, iota, tau, alpha, beta)
    }

    /// A context with an independent coproduct parameter `τ`.
    pub fn with_tau(
        theory: Arc<BaseTheory>,
        iota: BaseElement,
        tau: BaseElement,
        alpha: BaseElement,
        beta: BaseElement,
    ) -> Result<Self> {
        for e in [&iota, &tau, &alpha, &beta] {
            theory.check(e)?;
        }
        let validated = tau == iota && validate_triple(&theory, &iota, &alpha, &beta).is_ok();
        Ok(Self {
            theory,
            iota,
            tau,
            alpha,
            beta,
            validated,
        })
    }

    pub fn theory(&self) -> &Arc<BaseTheory> {
        &self.theory
    }

    pub fn iota(&self) -> &BaseElement {
        &self.iota
    }

    pub fn tau(&self) -> &BaseElement {
        &self.tau
    }

    pub fn alpha(&self) -> &BaseElement {
        &self.alpha
    }

    pub fn beta(&self) -> &BaseElement {
        &self.beta
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    fn check(&self, x: &TensorElement) -> Result<()> {
        x.check_letters(&self.theory)
    }

    pub fn unit(&self, s: Scalar) -> TensorElement {
        TensorElement::unit().scale(&s)
    }

    pub fn counit(&self, x: &TensorElement) -> Scalar {
        if x.degree() == 0 {
            x.coeff(&[])
        } else {
            Scalar::zero()
        }
    }

    /// `x · y`: words are joined by the expansion of `ι`.
    pub fn product(&self, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
        self.check(x)?;
        self.check(y)?;
        if x.degree() == 0 {
            return Ok(y.scale(&self.counit(x)));
        }
        if y.degree() == 0 {
            return Ok(x.scale(&self.counit(y)));
        }
        let mut out = TensorElement::zero(x.degree() + y.degree());
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                let ab = a * b;
                for (k, c) in self.iota.coords().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut w = Vec::with_capacity(u.len() + v.len() + 1);
                    w.extend_from_slice(u);
                    w.push(k as Letter);
                    w.extend_from_slice(v);
                    out.add_term(w, &ab * c);
                }
            }
        }
        Ok(out)
    }

    /// Left-to-right product of a list of factors; the empty product is `χ^∅`.
    pub fn product_all(&self, factors: &[TensorElement]) -> Result<TensorElement> {
        factors
            .iter()
            .try_fold(TensorElement::unit(), |acc, f| self.product(&acc, f))
    }

    /// `Δ(x)`, summing `Dn_{(A,Ā)}[τ,α,β]` over all subsets `A` (by bitmask)
    /// and unshuffling each term into its two factors.
    pub fn coproduct(&self, x: &TensorElement) -> Result<TensorSquare> {
        self.check(x)?;
        let mut out = TensorSquare::new();
        let n = x.degree();
        if n == 0 {
            out.add_tensor(&TensorElement::unit(), x, &Scalar::one());
            return Ok(out);
        }
        let whole = SetComposition::whole(n);
        let full = Supported::full(x)?;
        let top = (1u64 << n) - 1;
        for mask in 0..=top {
            if mask == 0 {
                out.add_tensor(&TensorElement::unit(), x, &Scalar::one());
                continue;
            }
            if mask == top {
                out.add_tensor(x, &TensorElement::unit(), &Scalar::one());
                continue;
            }
            let split = SetComposition::from_subset_mask(mask, n)?;
            let down = dn_bracket(
                &self.theory,
                &self.tau,
                &self.alpha,
                &self.beta,
                &split,
                &whole,
                &full,
            )?;
            let (m, rest) = (split.blocks()[0].len(), split.blocks()[1].len());
            for (w, c) in down.terms() {
                let mut parts = unshuffle(&split, w).into_iter();
                let left = BasisWord::new(m, parts.next().unwrap())?;
                let right = BasisWord::new(rest, parts.next().unwrap())?;
                out.add_term(left, right, c.clone());
            }
        }
        Ok(out)
    }

    /// The product on `H ⊗ H`: `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn square_product(&self, x: &TensorSquare, y: &TensorSquare) -> Result<TensorSquare> {
        let mut out = TensorSquare::new();
        for ((l1, r1), a) in x.terms() {
            for ((l2, r2), b) in y.terms() {
                let left = self.product(&l1.to_element(), &l2.to_element())?;
                let right = self.product(&r1.to_element(), &r2.to_element())?;
                out.add_tensor(&left, &right, &(a * b));
            }
        }
        Ok(out)
    }

    /// `m ∘ (f ⊗ g)` applied to a tensor square.
    pub fn multiply_square<F, G>(&self, x: &TensorSquare, f: F, g: G) -> Result<TensorElement>
    where
        F: Fn(&TensorElement) -> Result<TensorElement>,
        G: Fn(&TensorElement) -> Result<TensorElement>,
    {
        let mut out: Option<TensorElement> = None;
        for ((l, r), c) in x.terms() {
            let term = self.product(&f(&l.to_element())?, &g(&r.to_element())?)?;
            match out.as_mut() {
                Some(acc) => acc.add_scaled(&term, c),
                None => out = Some(term.scale(c)),
            }
        }
        Ok(out.unwrap_or_else(|| TensorElement::zero(0)))
    }

    /// The closed antipode: a sum over integer compositions with blocks
    /// reversed, letters `γ_i − ⟨γ_i,α⟩ι` inside blocks, `ι` between blocks,
    /// and a factor `⟨γ,β⟩` for each block end except the last.
    pub fn antipode_closed(&self, x: &TensorElement) -> Result<TensorElement> {
        self.check(x)?;
        let n = x.degree();
        if n == 0 {
            return Ok(x.clone());
        }
        let theory = &self.theory;
        let d = theory.dim();
        // shifted[l] = b_l − ⟨b_l,α⟩ι
        let shifted: Vec<BaseElement> = (0..d)
            .map(|l| &theory.basis(l) - &self.iota.scale(&theory.pair_basis(l, &self.alpha)))
            .collect();
        let beta_pair: Vec<Scalar> = (0..d).map(|l| theory.pair_basis(l, &self.beta)).collect();
        let compositions = enumerate_compositions(n);
        let mut out = TensorElement::zero(n);
        for (word, coeff) in x.terms() {
            for mu in &compositions {
                let ends = mu.boundaries();
                let mut c = coeff * sign(mu.len());
                for &e in &ends {
                    c *= &beta_pair[word[e - 1] as usize];
                }
                if c.is_zero() {
                    continue;
                }
                let mut starts = vec![1];
                starts.extend(ends.iter().map(|e| e + 1));
                let sums = mu.partial_sums();
                let mut factors = Vec::with_capacity(n - 1);
                for block in (0..mu.len()).rev() {
                    for i in starts[block]..sums[block] {
                        factors.push(shifted[word[i - 1] as usize].clone());
                    }
                    if block > 0 {
                        factors.push(self.iota.clone());
                    }
                }
                out.add_scaled(&TensorElement::pure(&factors), &c);
            }
        }
        Ok(out)
    }

    /// `Σ_A (−1)^{ℓ(A)} Inf_{w_A(A)}[ι] ∘ w_A ∘ Dn_A[ι,α,β]` over the given
    /// set compositions of `{1..n}`.
    fn antipode_over(
        &self,
        x: &TensorElement,
        compositions: impl Fn(usize) -> Vec<SetComposition>,
    ) -> Result<AntipodeSum> {
        self.check(x)?;
        let n = x.degree();
        if n == 0 {
            return Ok(AntipodeSum {
                value: x.clone(),
                summands: 1,
            });
        }
        let whole = SetComposition::whole(n);
        let full = Supported::full(x)?;
        let list = compositions(n);
        let mut out = TensorElement::zero(n);
        for a in &list {
            let down = dn_bracket(
                &self.theory,
                &self.iota,
                &self.alpha,
                &self.beta,
                a,
                &whole,
                &full,
            )?;
            let moved = permute(&a.straighten(), &down)?;
            let up = inf_bracket(&self.theory, &self.iota, &a.straightened(), &whole, &moved)?;
            out.add_scaled(&up.into_full()?, &sign(a.len()));
        }
        Ok(AntipodeSum {
            value: out,
            summands: list.len(),
        })
    }

    /// The antipode summed over the `3^{n-1}` toggle-free set compositions.
    pub fn antipode_toggle_free(&self, x: &TensorElement) -> Result<AntipodeSum> {
        self.antipode_over(x, enumerate_toggle_free)
    }

    /// The antipode summed over every set composition of `{1..n}`.
    pub fn antipode_all_setcomps(&self, x: &TensorElement) -> Result<AntipodeSum> {
        self.antipode_over(x, enumerate_set_compositions)
    }

    /// The antipode from the recursion `S(x) = −x − Σ S(x′) x″` over the
    /// reduced coproduct, memoized per basis word.
    pub fn antipode_oracle(&self, x: &TensorElement) -> Result<TensorElement> {
        self.check(x)?;
        let mut memo = HashMap::new();
        let mut out = TensorElement::zero(x.degree());
        for (w, c) in x.terms() {
            let word = BasisWord {
                degree: x.degree(),
                letters: w.clone(),
            };
            out.add_scaled(&self.oracle_word(&word, &mut memo)?, c);
        }
        Ok(out)
    }

    fn oracle_word(
        &self,
        word: &BasisWord,
        memo: &mut HashMap<BasisWord, TensorElement>,
    ) -> Result<TensorElement> {
        if let Some(s) = memo.get(word) {
            return Ok(s.clone());
        }
        let x = word.to_element();
        let n = word.degree;
        let result = if n == 0 {
            x
        } else {
            let mut s = x.neg();
            for ((l, r), c) in self.coproduct(&x)?.terms() {
                if l.degree == 0 || r.degree == 0 {
                    continue;
                }
                let sl = self.oracle_word(l, memo)?;
                let term = self.product(&sl, &r.to_element())?;
                s.add_scaled(&term, &-c);
            }
            s
        };
        memo.insert(word.clone(), result.clone());
        Ok(result)
    }

    /// True iff `Δ(x) = x ⊗ χ^∅ + χ^∅ ⊗ x`.
    pub fn is_primitive(&self, x: &TensorElement) -> Result<bool> {
        let mut expected = TensorSquare::from_tensor(x, &TensorElement::unit());
        expected.add_tensor(&TensorElement::unit(), x, &Scalar::one());
        Ok(self.coproduct(x)? == expected)
    }

    /// The supercharacter basis if it contains `ι`; otherwise the
    /// supercharacter basis with its last element of nonzero `ι`-coordinate
    /// replaced by `ι`.
    pub fn working_basis(&self) -> WorkingBasis {
        let theory = &self.theory;
        let elements: Vec<BaseElement> = (0..theory.dim()).map(|i| theory.basis(i)).collect();
        if let Some(i) = self.iota.as_basis_index() {
            return WorkingBasis {
                elements,
                iota_index: i,
            };
        }
        let k = (0..theory.dim())
            .rev()
            .find(|&k| !self.iota.coords()[k].is_zero())
            .expect("ι is nonzero in a Hopf triple");
        let mut elements = elements;
        elements[k] = self.iota.clone();
        WorkingBasis {
            elements,
            iota_index: k,
        }
    }

    /// Splits a word, given in the letters of `basis`, at every `ι` letter.
    pub fn factor_with_basis(&self, basis: &WorkingBasis, word: &[Letter]) -> Result<Vec<Word>> {
        if basis.elements.get(basis.iota_index) != Some(&self.iota) {
            return Err(Error::IotaNotBasisElement);
        }
        Ok(word
            .split(|&l| l as usize == basis.iota_index)
            .map(<[Letter]>::to_vec)
            .collect())
    }

    /// Unique factorization into free generators, for a word written in the
    /// letters of [`HopfContext::working_basis`].
    pub fn factor_into_generators(&self, word: &[Letter]) -> Result<Vec<Word>> {
        self.factor_with_basis(&self.working_basis(), word)
    }

    /// The element denoted by a word in the letters of `basis`.
    pub fn from_basis_word(&self, basis: &WorkingBasis, word: &[Letter]) -> Result<TensorElement> {
        let factors = word
            .iter()
            .map(|&l| {
                basis
                    .elements
                    .get(l as usize)
                    .cloned()
                    .ok_or(Error::LetterOutOfRange {
                        letter: l as usize,
                        dim: basis.elements.len(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TensorElement::pure(&factors))
    }

    /// Searches basis pairs of total degree `≤ max_total` for `Δ(xy) ≠ Δ(x)Δ(y)`.
    pub fn compatibility_counterexample(
        &self,
        max_total: usize,
    ) -> Result<Option<CompatibilityFailure>> {
        let d = self.theory.dim();
        for total in 0..=max_total {
            for m in 0..=total {
                for x in BasisWord::all(d, m) {
                    for y in BasisWord::all(d, total - m) {
                        let (xe, ye) = (x.to_element(), y.to_element());
                        let lhs = self.coproduct(&self.product(&xe, &ye)?)?;
                        let rhs =
                            self.square_product(&self.coproduct(&xe)?, &self.coproduct(&ye)?)?;
                        if lhs != rhs {
                            return Ok(Some(CompatibilityFailure { x, y, lhs, rhs }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// A witness that `Δ` is not multiplicative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityFailure {
    pub x: BasisWord,
    pub y: BasisWord,
    pub lhs: TensorSquare,
    pub rhs: TensorSquare,
}
