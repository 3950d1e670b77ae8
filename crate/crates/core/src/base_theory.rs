//! The base space `scf(G)`: a supercharacter theory given as a finite table.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result, TheoryError};
use crate::linalg;
use crate::scalar::{format_scalar, int, Scalar};

/// An element of `scf(G)` in supercharacter-basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseElement(pub Vec<Scalar>);

impl BaseElement {
    pub fn zero(dim: usize) -> Self {
        Self(vec![Scalar::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut coords = vec![Scalar::zero(); dim];
        coords[i] = Scalar::one();
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    /// `Some(i)` when this is exactly the `i`-th basis vector.
    pub fn as_basis_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !x.is_one() || found.is_some() {
                return None;
            }
            found = Some(i);
        }
        found
    }
}

impl Add for &BaseElement {
    type Output = BaseElement;
    fn add(self, rhs: &BaseElement) -> BaseElement {
        debug_assert_eq!(self.dim(), rhs.dim());
        BaseElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &BaseElement {
    type Output = BaseElement;
    fn sub(self, rhs: &BaseElement) -> BaseElement {
        debug_assert_eq!(self.dim(), rhs.dim());
        BaseElement(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &BaseElement {
    type Output = BaseElement;
    fn neg(self) -> BaseElement {
        BaseElement(self.0.iter().map(|a| -a).collect())
    }
}

/// A validated supercharacter theory with `d` supercharacters and `d` superclasses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseTheory {
    labels: Vec<String>,
    values: Vec<Vec<Scalar>>,
    sizes: Vec<u64>,
    identity_class: usize,
    order: u64,
    gram: Vec<Scalar>,
    // structure[i][j][l]: coefficient of b_l in b_i ⊙ b_j
    structure: Vec<Vec<Vec<Scalar>>>,
    one_index: usize,
    reg: BaseElement,
}

impl BaseTheory {
    /// The two-class theory `{𝟙, reg − 𝟙}` of a group of order `q`, labelled
    /// `one` and `regm1`.
    pub fn two_dim(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(
                TheoryError::Shape(format!("group order q = {q} must be at least 2")).into(),
            );
        }
        let qm1 = int(q as i64 - 1);
        Self::from_table(
            vec![vec![int(1), int(1)], vec![qm1, int(-1)]],
            vec![1, q - 1],
            0,
            vec!["one".into(), "regm1".into()],
        )
        .map_err(Error::from)
    }

    pub fn from_table(
        values: Vec<Vec<Scalar>>,
        sizes: Vec<u64>,
        identity_class: usize,
        labels: Vec<String>,
    ) -> Result<Self, TheoryError> {
        let k = sizes.len();
        let d = values.len();
        if k == 0 {
            return Err(TheoryError::Shape("no superclasses".into()));
        }
        if d != k {
            return Err(TheoryError::Shape(format!(
                "{d} supercharacters but {k} superclasses"
            )));
        }
        if let Some(i) = values.iter().position(|row| row.len() != k) {
            return Err(TheoryError::Shape(format!(
                "row {i} has {} entries, expected {k}",
                values[i].len()
            )));
        }
        if labels.len() != d {
            return Err(TheoryError::Shape(format!(
                "{} labels for {d} characters",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if label.is_empty() || !seen.insert(label) {
                return Err(TheoryError::Shape(format!(
                    "label `{label}` empty or repeated"
                )));
            }
        }
        if sizes.contains(&0) {
            return Err(TheoryError::Shape(
                "superclass sizes must be positive".into(),
            ));
        }
        if identity_class >= k {
            return Err(TheoryError::IdentityClassInvalid(format!(
                "index {identity_class} out of range"
            )));
        }
        if sizes[identity_class] != 1 {
            return Err(TheoryError::IdentityClassInvalid(format!(
                "superclass {identity_class} has size {}, the identity class has size 1",
                sizes[identity_class]
            )));
        }
        let order: u64 = sizes.iter().sum();
        let weights: Vec<Scalar> = sizes
            .iter()
            .map(|&s| Scalar::new(s.into(), order.into()))
            .collect();
        let pair = |x: &[Scalar], y: &[Scalar]| -> Scalar {
            x.iter()
                .zip(y)
                .zip(&weights)
                .map(|((a, b), w)| a * b * w)
                .sum()
        };

        let mut gram = Vec::with_capacity(d);
        for i in 0..d {
            for j in 0..i {
                let g = pair(&values[i], &values[j]);
                if !g.is_zero() {
                    return Err(TheoryError::NonOrthogonalBasis(j, i, format_scalar(&g)));
                }
            }
            let g = pair(&values[i], &values[i]);
            if !g.is_positive() {
                return Err(TheoryError::ZeroCharacter(i));
            }
            gram.push(g);
        }

        let one_index = values
            .iter()
            .position(|row| row.iter().all(One::is_one))
            .ok_or(TheoryError::TrivialCharacterMissing)?;

        // coordinates of a value vector, validated by reconstruction
        let coords_of = |f: &[Scalar]| -> Option<Vec<Scalar>> {
            let coords: Vec<Scalar> = (0..d).map(|i| pair(f, &values[i]) / &gram[i]).collect();
            let rebuilt: Vec<Scalar> = (0..k)
                .map(|c| (0..d).map(|i| &coords[i] * &values[i][c]).sum())
                .collect();
            (rebuilt.as_slice() == f).then_some(coords)
        };

        let reg_values: Vec<Scalar> = (0..k)
            .map(|c| {
                if c == identity_class {
                    int(order as i64)
                } else {
                    Scalar::zero()
                }
            })
            .collect();
        let reg =
            BaseElement(coords_of(&reg_values).ok_or(TheoryError::RegularCharacterNotInSpan)?);

        let mut structure = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod: Vec<Scalar> = (0..k).map(|c| &values[i][c] * &values[j][c]).collect();
                structure[i][j] =
                    coords_of(&prod).ok_or(TheoryError::NotClosedUnderProduct(i, j))?;
            }
        }

        Ok(Self {
            labels,
            values,
            sizes,
            identity_class,
            order,
            gram,
            structure,
            one_index,
            reg,
        })
    }

    /// `d`, the number of supercharacters.
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn values(&self) -> &[Vec<Scalar>] {
        &self.values
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    /// `|G|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `⟨b_i, b_i⟩`; the Gram matrix is diagonal.
    pub fn gram(&self, i: usize) -> &Scalar {
        &self.gram[i]
    }

    pub fn one_index(&self) -> usize {
        self.one_index
    }

    pub fn basis(&self, i: usize) -> BaseElement {
        BaseElement::unit(self.dim(), i)
    }

    /// The trivial character `𝟙`.
    pub fn one(&self) -> BaseElement {
        self.basis(self.one_index)
    }

    /// The regular character.
    pub fn reg(&self) -> BaseElement {
        self.reg.clone()
    }

    pub fn zero(&self) -> BaseElement {
        BaseElement::zero(self.dim())
    }

    pub fn check(&self, x: &BaseElement) -> Result<()> {
        if x.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            })
        }
    }

    /// `⟨x, y⟩ = (1/|G|) Σ_g x(g) y(g)`.
    pub fn inner(&self, x: &BaseElement, y: &BaseElement) -> Result<Scalar> {
        self.check(x)?;
        self.check(y)?;
        Ok((0..self.dim())
            .map(|i| &x.0[i] * &y.0[i] * &self.gram[i])
            .sum())
    }

    /// `⟨b_i, y⟩`, without dimension checks.
    pub fn pair_basis(&self, i: usize, y: &BaseElement) -> Scalar {
        &y.0[i] * &self.gram[i]
    }

    /// The valuewise product `x ⊙ y`.
    pub fn pointwise(&self, x: &BaseElement, y: &BaseElement) -> Result<BaseElement> {
        self.check(x)?;
        self.check(y)?;
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for i in (0..d).filter(|&i| !x.0[i].is_zero()) {
            for j in (0..d).filter(|&j| !y.0[j].is_zero()) {
                let c = &x.0[i] * &y.0[j];
                for (l, s) in self.structure[i][j].iter().enumerate() {
                    out[l] += &c * s;
                }
            }
        }
        Ok(BaseElement(out))
    }

    /// Values of `x` on each superclass.
    pub fn values_of(&self, x: &BaseElement) -> Result<Vec<Scalar>> {
        self.check(x)?;
        Ok((0..self.sizes.len())
            .map(|c| (0..self.dim()).map(|i| &x.0[i] * &self.values[i][c]).sum())
            .collect())
    }

    /// The superclass function with the given values.
    pub fn from_values(&self, f: &[Scalar]) -> Result<BaseElement> {
        if f.len() != self.sizes.len() {
            return Err(Error::DimensionMismatch {
                expected: self.sizes.len(),
                found: f.len(),
            });
        }
        let order = Scalar::from_integer(self.order.into());
        Ok(BaseElement(
            (0..self.dim())
                .map(|i| {
                    let pairing: Scalar = f
                        .iter()
                        .zip(&self.values[i])
                        .zip(&self.sizes)
                        .map(|((a, b), &s)| a * b * Scalar::from_integer(s.into()))
                        .sum();
                    pairing / &order / &self.gram[i]
                })
                .collect(),
        ))
    }

    /// `δ_K`, the identifier function of superclass `class`.
    pub fn delta(&self, class: usize) -> Result<BaseElement> {
        let mut f = vec![Scalar::zero(); self.sizes.len()];
        *f.get_mut(class).ok_or(Error::DimensionMismatch {
            expected: self.sizes.len(),
            found: class + 1,
        })? = Scalar::one();
        self.from_values(&f)
    }

    /// The element of the dual basis to `against` that pairs to 1 with `x`.
    pub fn dual(&self, x: &BaseElement, against: &[BaseElement]) -> Result<BaseElement> {
        let position = against
            .iter()
            .position(|a| a == x)
            .ok_or(Error::NotInBasis)?;
        Ok(self.dual_basis(against)?.swap_remove(position))
    }

    /// `{y_i}` with `⟨y_i, against_j⟩ = δ_ij`.
    pub fn dual_basis(&self, against: &[BaseElement]) -> Result<Vec<BaseElement>> {
        let d = self.dim();
        if against.len() != d {
            return Err(Error::SingularSystem);
        }
        for a in against {
            self.check(a)?;
        }
        // ⟨y, a_j⟩ = Σ_l y_l a_j[l] g_l
        let matrix: Vec<Vec<Scalar>> = against
            .iter()
            .map(|a| (0..d).map(|l| &a.0[l] * &self.gram[l]).collect())
            .collect();
        (0..d)
            .map(|i| {
                let rhs: Vec<Scalar> = (0..d)
                    .map(|j| {
                        if i == j {
                            Scalar::one()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect();
                linalg::solve(&matrix, &rhs).map(BaseElement)
            })
            .collect()
    }

    /// Coordinates of `x` with respect to an arbitrary basis `basis`.
    pub fn coords_in(&self, x: &BaseElement, basis: &[BaseElement]) -> Result<Vec<Scalar>> {
        self.check(x)?;
        let d = self.dim();
        if basis.len() != d {
            return Err(Error::SingularSystem);
        }
        let matrix: Vec<Vec<Scalar>> = (0..d)
            .map(|row| basis.iter().map(|b| b.0[row].clone()).collect())
            .collect();
        linalg::solve(&matrix, &x.0)
    }

    pub fn display(&self, x: &BaseElement) -> String {
        let mut parts = Vec::new();
        for (i, c) in x.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("{}*{}", format_scalar(c), self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for BaseTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "scf(G), |G| = {}, basis {{{}}}",
            self.order,
            self.labels.join(", ")
        )
    }
}
