//! Linear characters `Ψ_•⟩: γ ↦ ⟨γ, Ψ_n⟩` and their convolution group.

use num::{One, Zero};

use crate::base_theory::BaseElement;
use crate::combinatorics::enumerate_compositions;
use crate::error::{Error, Result};
use crate::hopf::HopfContext;
use crate::scalar::{is_nonneg_integer, sign, Scalar};
use crate::tensor::{word_norm, BasisWord, Letter, TensorElement, TensorSquare};

/// A truncated sequence `Ψ_0, …, Ψ_N` with `Ψ_n ∈ scf(G^{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCharacter {
    ctx: HopfContext,
    components: Vec<TensorElement>,
}

/// Outcome of the algebra-morphism test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismCheck {
    Morphism,
    /// `Def(ι-twisted Ψ_n)` at coordinate `j` differs from `Ψ_j ⊗ Ψ_{n-j}`.
    Fails {
        n: usize,
        j: usize,
        lhs: TensorSquare,
        rhs: TensorSquare,
    },
}

impl MorphismCheck {
    pub fn passed(&self) -> bool {
        matches!(self, MorphismCheck::Morphism)
    }
}

/// `x ⊗ marker ⊗ y`: the trailing `χ^()` of `x` is replaced by `marker`.
/// A degree-1 `x` contributes its `χ^()` coefficient, so `Ψ_1 ⊗ τ = ⟨Ψ_1,χ^()⟩τ`.
pub fn join_with_marker(
    x: &TensorElement,
    marker: &BaseElement,
    y: &TensorElement,
) -> TensorElement {
    assert!(
        x.degree() >= 1 && y.degree() >= 1,
        "markers join positive degrees"
    );
    let mut out = TensorElement::zero(x.degree() + y.degree());
    for (u, a) in x.terms() {
        for (v, b) in y.terms() {
            let ab = a * b;
            for (k, c) in marker.coords().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut w = u.clone();
                w.push(k as Letter);
                w.extend_from_slice(v);
                out.add_term(w, &ab * c);
            }
        }
    }
    out
}

fn join_all(blocks: &[&TensorElement], markers: &[&BaseElement]) -> TensorElement {
    let mut acc = blocks[0].clone();
    for (block, marker) in blocks[1..].iter().zip(markers) {
        acc = join_with_marker(&acc, marker, block);
    }
    acc
}

impl LinearCharacter {
    /// Builds a character from `Ψ_0, …, Ψ_N`; `Ψ_0` must be `χ^∅`.
    pub fn new(ctx: HopfContext, components: Vec<TensorElement>) -> Result<Self> {
        if components.first() != Some(&TensorElement::unit()) {
            return Err(Error::DegreeMismatch {
                expected: 0,
                found: components.first().map_or(0, TensorElement::degree),
            });
        }
        for (n, c) in components.iter().enumerate() {
            if c.degree() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: c.degree(),
                });
            }
            c.check_letters(ctx.theory())?;
        }
        Ok(Self { ctx, components })
    }

    /// `ψ_n = ψ^{⊗(n-1)} ⊗ χ^()`.
    pub fn constant(ctx: &HopfContext, psi: &BaseElement, max_degree: usize) -> Result<Self> {
        ctx.theory().check(psi)?;
        let mut components = vec![TensorElement::unit()];
        for n in 1..=max_degree {
            components.push(TensorElement::pure(&vec![psi.clone(); n - 1]));
        }
        Self::new(ctx.clone(), components)
    }

    /// The identity of the convolution group.
    pub fn counit(ctx: &HopfContext, max_degree: usize) -> Self {
        let mut components = vec![TensorElement::unit()];
        components.extend((1..=max_degree).map(TensorElement::zero));
        Self {
            ctx: ctx.clone(),
            components,
        }
    }

    pub fn ctx(&self) -> &HopfContext {
        &self.ctx
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[TensorElement] {
        &self.components
    }

    pub fn component(&self, n: usize) -> &TensorElement {
        &self.components[n]
    }

    /// `⟨γ, Ψ_n⟩` for homogeneous `γ` of degree `n ≤ N`.
    pub fn evaluate(&self, gamma: &TensorElement) -> Result<Scalar> {
        let n = gamma.degree();
        let psi = self.components.get(n).ok_or(Error::BoundExceeded {
            what: "character degree",
            n,
            bound: self.max_degree(),
        })?;
        TensorElement::inner(self.ctx.theory(), gamma, psi)
    }

    /// Checks `Def(ι_j ⊙ Ψ_n) = Ψ_j ⊗ Ψ_{n-j}` for `1 ≤ j < n ≤ N`; the
    /// cases `j ∈ {0, n}` hold because `Ψ_0 = χ^∅`.
    pub fn check_morphism(&self) -> MorphismCheck {
        let theory = self.ctx.theory();
        let iota = self.ctx.iota();
        for n in 2..=self.max_degree() {
            for j in 1..n {
                let mut lhs = TensorSquare::new();
                for (w, c) in self.components[n].terms() {
                    let s = theory.pair_basis(w[j - 1] as usize, iota);
                    if s.is_zero() {
                        continue;
                    }
                    lhs.add_term(
                        BasisWord {
                            degree: j,
                            letters: w[..j - 1].to_vec(),
                        },
                        BasisWord {
                            degree: n - j,
                            letters: w[j..].to_vec(),
                        },
                        c * s,
                    );
                }
                let rhs = TensorSquare::from_tensor(&self.components[j], &self.components[n - j]);
                if lhs != rhs {
                    return MorphismCheck::Fails { n, j, lhs, rhs };
                }
            }
        }
        MorphismCheck::Morphism
    }

    fn require_morphism(&self) -> Result<()> {
        match self.check_morphism() {
            MorphismCheck::Morphism => Ok(()),
            MorphismCheck::Fails { n, j, .. } => Err(Error::NotAMorphism { n, j }),
        }
    }

    fn compatible(&self, other: &LinearCharacter) -> Result<usize> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.max_degree().min(other.max_degree()))
    }

    /// `Ψ ∘ Γ` by the closed formula, cross-checked against `(Ψ ⊗ Γ) ∘ Δ`.
    pub fn convolve(&self, other: &LinearCharacter) -> Result<LinearCharacter> {
        let max = self.compatible(other)?;
        self.require_morphism()?;
        other.require_morphism()?;
        let closed = self.convolve_closed(other)?;
        let definitional = self.convolve_definitional(other)?;
        if closed != definitional {
            let n = (0..=max)
                .find(|&n| closed.components[n] != definitional.components[n])
                .unwrap_or(0);
            return Err(Error::CrossCheck(format!(
                "closed and definitional convolution differ in degree {n}"
            )));
        }
        Ok(closed)
    }

    /// Blocks of `Ψ` and `Γ` alternate along each composition; the marker after
    /// a `Ψ` block is `α` and after a `Γ` block is `β`.
    pub fn convolve_closed(&self, other: &LinearCharacter) -> Result<LinearCharacter> {
        let max = self.compatible(other)?;
        let (alpha, beta) = (self.ctx.alpha(), self.ctx.beta());
        let mut components = vec![TensorElement::unit()];
        for n in 1..=max {
            let mut total = TensorElement::zero(n);
            for mu in enumerate_compositions(n) {
                for (first, second, m1, m2) in
                    [(self, other, alpha, beta), (other, self, beta, alpha)]
                {
                    let blocks: Vec<&TensorElement> = mu
                        .parts()
                        .iter()
                        .enumerate()
                        .map(|(i, &p)| {
                            if i % 2 == 0 {
                                &first.components[p]
                            } else {
                                &second.components[p]
                            }
                        })
                        .collect();
                    let markers: Vec<&BaseElement> = (0..mu.len() - 1)
                        .map(|i| if i % 2 == 0 { m1 } else { m2 })
                        .collect();
                    total.add_scaled(&join_all(&blocks, &markers), &Scalar::one());
                }
            }
            components.push(total);
        }
        Ok(LinearCharacter {
            ctx: self.ctx.clone(),
            components,
        })
    }

    /// `(Ψ ⊗ Γ) ∘ Δ`, represented through the Gram form basis word by basis word.
    pub fn convolve_definitional(&self, other: &LinearCharacter) -> Result<LinearCharacter> {
        let max = self.compatible(other)?;
        let theory = self.ctx.theory();
        let mut components = vec![TensorElement::unit()];
        for n in 1..=max {
            let mut psi = TensorElement::zero(n);
            for word in BasisWord::all(theory.dim(), n) {
                let mut value = Scalar::zero();
                for ((l, r), c) in self.ctx.coproduct(&word.to_element())?.terms() {
                    let a =
                        self.components[l.degree].coeff(&l.letters) * word_norm(theory, &l.letters);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.components[r.degree].coeff(&r.letters)
                        * word_norm(theory, &r.letters);
                    value += c * a * b;
                }
                psi.add_term(
                    word.letters.clone(),
                    value / word_norm(theory, &word.letters),
                );
            }
            components.push(psi);
        }
        Ok(LinearCharacter {
            ctx: self.ctx.clone(),
            components,
        })
    }

    /// `(Ψ^{-1})_n = Σ_μ (−1)^{ℓ(μ)} Ψ_{μ_1} ⊗ (α+β) ⊗ ⋯ ⊗ (α+β) ⊗ Ψ_{μ_ℓ}`.
    pub fn inverse(&self) -> Result<LinearCharacter> {
        self.require_morphism()?;
        let marker = self.ctx.alpha() + self.ctx.beta();
        let mut components = vec![TensorElement::unit()];
        for n in 1..=self.max_degree() {
            let mut total = TensorElement::zero(n);
            for mu in enumerate_compositions(n) {
                let blocks: Vec<&TensorElement> =
                    mu.parts().iter().map(|&p| &self.components[p]).collect();
                let markers = vec![&marker; mu.len() - 1];
                total.add_scaled(&join_all(&blocks, &markers), &sign(mu.len()));
            }
            components.push(total);
        }
        Ok(LinearCharacter {
            ctx: self.ctx.clone(),
            components,
        })
    }

    /// True iff `(Ψ^{-1})_n = (−1)^n Ψ_n` for `1 ≤ n ≤ N`.
    pub fn is_odd(&self) -> Result<bool> {
        let inv = self.inverse()?;
        Ok(
            (1..=self.max_degree())
                .all(|n| inv.components[n] == self.components[n].scale(&sign(n))),
        )
    }

    /// Sufficient condition for being supported by modules: every `Ψ_n` is a
    /// nonnegative integer combination of supercharacters. Not a faithful test.
    pub fn appears_supported_by_modules(&self) -> bool {
        self.components[1..]
            .iter()
            .all(|c| c.terms().values().all(is_nonneg_integer))
    }
}
