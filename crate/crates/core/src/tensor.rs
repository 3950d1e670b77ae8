//! Sparse elements of `scf(G^{n-1})`, graded sums, and tensor squares.
//!
//! A degree-`n` element is stored as a map from basis words of length `n - 1`
//! to coefficients. Degrees 0 and 1 both use the empty word: degree 0 is the
//! unit `χ^∅`, degree 1 is `χ^()`.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::base_theory::{BaseElement, BaseTheory};
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, Scalar};

pub type Letter = u16;
pub type Word = Vec<Letter>;

/// Word length for degree `n`.
pub fn word_len(degree: usize) -> usize {
    degree.saturating_sub(1)
}

/// All `d^len` words of the given length in lexicographic order.
pub fn all_words(dim: usize, len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..dim as Letter).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// A degree together with a basis word of matching length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisWord {
    pub degree: usize,
    pub letters: Word,
}

impl BasisWord {
    pub fn new(degree: usize, letters: Word) -> Result<Self> {
        if letters.len() != word_len(degree) {
            return Err(Error::DegreeMismatch {
                expected: word_len(degree),
                found: letters.len(),
            });
        }
        Ok(Self { degree, letters })
    }

    pub fn unit() -> Self {
        Self {
            degree: 0,
            letters: Vec::new(),
        }
    }

    /// The basis word of degree `letters.len() + 1`.
    pub fn from_letters(letters: Word) -> Self {
        Self {
            degree: letters.len() + 1,
            letters,
        }
    }

    pub fn to_element(&self) -> TensorElement {
        TensorElement::monomial(self.degree, self.letters.clone(), Scalar::one())
    }

    /// Every basis word of the given degree over a `dim`-dimensional theory.
    pub fn all(dim: usize, degree: usize) -> Vec<BasisWord> {
        all_words(dim, word_len(degree))
            .into_iter()
            .map(|letters| BasisWord { degree, letters })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    degree: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl TensorElement {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `χ^∅`.
    pub fn unit() -> Self {
        Self::monomial(0, Vec::new(), Scalar::one())
    }

    /// `χ^()`.
    pub fn chi_empty_word() -> Self {
        Self::monomial(1, Vec::new(), Scalar::one())
    }

    pub fn monomial(degree: usize, word: Word, coeff: Scalar) -> Self {
        debug_assert_eq!(word.len(), word_len(degree));
        let mut e = Self::zero(degree);
        e.add_term(word, coeff);
        e
    }

    /// The basis word `b_{w_1} ⊗ … ⊗ b_{w_k} ⊗ χ^()`, of degree `k + 1`.
    pub fn word(letters: &[Letter]) -> Self {
        Self::monomial(letters.len() + 1, letters.to_vec(), Scalar::one())
    }

    /// The factored function `ψ_1 ⊗ … ⊗ ψ_k ⊗ χ^()`, expanded into basis words.
    pub fn pure(factors: &[BaseElement]) -> Self {
        let mut level: Vec<(Word, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (w, c) in &level {
                for (l, x) in f.coords().iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let mut w = w.clone();
                    w.push(l as Letter);
                    next.push((w, c * x));
                }
            }
            level = next;
        }
        let mut e = Self::zero(factors.len() + 1);
        for (w, c) in level {
            e.add_term(w, c);
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Word, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn coeff(&self, word: &[Letter]) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        debug_assert_eq!(word.len(), word_len(self.degree));
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`. Panics on a degree mismatch.
    pub fn add_scaled(&mut self, other: &TensorElement, c: &Scalar) {
        assert_eq!(
            self.degree, other.degree,
            "adding elements of different degrees"
        );
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn try_add(&self, other: &TensorElement) -> Result<TensorElement> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(self.degree);
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&-Scalar::one())
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    /// Rejects letters that are not basis indices of `theory`.
    pub fn check_letters(&self, theory: &BaseTheory) -> Result<()> {
        let dim = theory.dim();
        for w in self.terms.keys() {
            if let Some(&l) = w.iter().find(|&&l| l as usize >= dim) {
                return Err(Error::LetterOutOfRange {
                    letter: l as usize,
                    dim,
                });
            }
        }
        Ok(())
    }

    /// `⟨x, y⟩` in `scf(G^{n-1})`: the product of the base inner products.
    pub fn inner(theory: &BaseTheory, x: &TensorElement, y: &TensorElement) -> Result<Scalar> {
        if x.degree != y.degree {
            return Err(Error::DegreeMismatch {
                expected: x.degree,
                found: y.degree,
            });
        }
        let mut total = Scalar::zero();
        for (w, a) in &x.terms {
            if let Some(b) = y.terms.get(w) {
                total += a * b * word_norm(theory, w);
            }
        }
        Ok(total)
    }

    pub fn display(&self, theory: &BaseTheory) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let base = if self.degree == 0 { "χ^∅" } else { "χ^()" };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut factors: Vec<&str> = w.iter().map(|&l| theory.label(l as usize)).collect();
                factors.push(base);
                format!("{}·{}", format_scalar(c), factors.join("⊗"))
            })
            .collect();
        parts.join(" + ")
    }
}

/// `⟨b_w, b_w⟩ = Π_j ⟨b_{w_j}, b_{w_j}⟩`.
pub fn word_norm(theory: &BaseTheory, word: &[Letter]) -> Scalar {
    word.iter()
        .map(|&l| theory.gram(l as usize).clone())
        .product()
}

/// A finite sum of homogeneous components.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedElement {
    components: BTreeMap<usize, TensorElement>,
}

impl GradedElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: &TensorElement) {
        let slot = self
            .components
            .entry(x.degree())
            .or_insert_with(|| TensorElement::zero(x.degree()));
        slot.add_scaled(x, &Scalar::one());
        if slot.is_zero() {
            self.components.remove(&x.degree());
        }
    }

    pub fn component(&self, degree: usize) -> TensorElement {
        self.components
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| TensorElement::zero(degree))
    }

    pub fn components(&self) -> impl Iterator<Item = &TensorElement> {
        self.components.values()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

impl From<TensorElement> for GradedElement {
    fn from(x: TensorElement) -> Self {
        let mut g = GradedElement::new();
        g.add(&x);
        g
    }
}

/// An element of `H ⊗ H`, as a map from pairs of basis words to coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorSquare {
    terms: BTreeMap<(BasisWord, BasisWord), Scalar>,
}

impl TensorSquare {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<(BasisWord, BasisWord), Scalar> {
        &self.terms
    }

    pub fn coeff(&self, left: &BasisWord, right: &BasisWord) -> Scalar {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: BasisWord, right: BasisWord, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let slot = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `self += c · (x ⊗ y)`.
    pub fn add_tensor(&mut self, x: &TensorElement, y: &TensorElement, c: &Scalar) {
        for (wx, a) in x.terms() {
            for (wy, b) in y.terms() {
                self.add_term(
                    BasisWord {
                        degree: x.degree(),
                        letters: wx.clone(),
                    },
                    BasisWord {
                        degree: y.degree(),
                        letters: wy.clone(),
                    },
                    a * b * c,
                );
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorSquare, c: &Scalar) {
        for ((l, r), x) in &other.terms {
            self.add_term(l.clone(), r.clone(), x * c);
        }
    }

    pub fn from_tensor(x: &TensorElement, y: &TensorElement) -> Self {
        let mut t = Self::new();
        t.add_tensor(x, y, &Scalar::one());
        t
    }

    /// The flip `x ⊗ y ↦ y ⊗ x`.
    pub fn swapped(&self) -> Self {
        let mut t = Self::new();
        for ((l, r), c) in &self.terms {
            t.add_term(r.clone(), l.clone(), c.clone());
        }
        t
    }

    pub fn display(&self, theory: &BaseTheory) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((l, r), c)| {
                format!(
                    "{}·({} | {})",
                    format_scalar(c),
                    l.to_element().display(theory).trim_start_matches("1·"),
                    r.to_element().display(theory).trim_start_matches("1·")
                )
            })
            .collect();
        parts.join(" + ")
    }
}
