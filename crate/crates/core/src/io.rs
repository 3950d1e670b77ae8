//! JSON forms of theories, elements, tensors and characters, plus the small
//! expression language used to name elements of `scf(G)`.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::base_theory::{BaseElement, BaseTheory};
use crate::characters::LinearCharacter;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};
use crate::hopf::HopfContext;
use crate::nsym::FundamentalImage;
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::tensor::{word_len, BasisWord, Letter, TensorElement, TensorSquare, Word};

/// How the base theory was chosen; echoed into element JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSpec {
    TwoDim(u64),
    File,
}

/// A base theory together with its provenance.
#[derive(Clone, Debug)]
pub struct Base {
    pub spec: BaseSpec,
    pub theory: BaseTheory,
}

impl Base {
    pub fn two_dim(q: u64) -> Result<Self> {
        Ok(Self {
            spec: BaseSpec::TwoDim(q),
            theory: BaseTheory::two_dim(q)?,
        })
    }

    pub fn from_file_json(text: &str) -> Result<Self> {
        Ok(Self {
            spec: BaseSpec::File,
            theory: parse_theory(text)?,
        })
    }

    /// The value of the literal `q`, when it has one.
    fn q(&self) -> Option<u64> {
        match self.spec {
            BaseSpec::TwoDim(q) => Some(q),
            BaseSpec::File => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TheoryFile {
    labels: Vec<String>,
    values: Vec<Vec<String>>,
    sizes: Vec<u64>,
    identity_class: usize,
}

pub fn parse_theory(text: &str) -> Result<BaseTheory> {
    let file: TheoryFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let values = file
        .values
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| parse_scalar(v))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BaseTheory::from_table(
        values,
        file.sizes,
        file.identity_class,
        file.labels,
    )?)
}

pub fn theory_to_json(theory: &BaseTheory) -> serde_json::Value {
    let file = TheoryFile {
        labels: theory.labels().to_vec(),
        values: theory
            .values()
            .iter()
            .map(|row| row.iter().map(format_scalar).collect())
            .collect(),
        sizes: theory.sizes().to_vec(),
        identity_class: theory.identity_class(),
    };
    serde_json::to_value(file).expect("theory serializes")
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: Vec<String>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<u64>,
    degree: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    degree: usize,
    word: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SquareTermJson {
    left: WordJson,
    right: WordJson,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SquareJson {
    terms: Vec<SquareTermJson>,
}

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    max_degree: usize,
    components: Vec<ElementJson>,
}

#[derive(Serialize, Deserialize)]
struct ImageTermJson {
    perm: Vec<usize>,
    coeff: String,
}

fn labels_of(theory: &BaseTheory, word: &[Letter]) -> Vec<String> {
    word.iter()
        .map(|&l| theory.label(l as usize).to_string())
        .collect()
}

fn letters_of(theory: &BaseTheory, labels: &[String]) -> Result<Word> {
    labels
        .iter()
        .map(|s| theory.label_index(s).map(|i| i as Letter))
        .collect()
}

fn element_json(base: &Base, x: &TensorElement) -> ElementJson {
    let (name, q) = match base.spec {
        BaseSpec::TwoDim(q) => (Some("twodim".to_string()), Some(q)),
        BaseSpec::File => (None, None),
    };
    ElementJson {
        base: name,
        q,
        degree: x.degree(),
        terms: x
            .terms()
            .iter()
            .map(|(w, c)| TermJson {
                word: labels_of(&base.theory, w),
                coeff: format_scalar(c),
            })
            .collect(),
    }
}

fn element_from_json(base: &Base, e: &ElementJson) -> Result<TensorElement> {
    if let (Some(q), BaseSpec::TwoDim(expected)) = (e.q, &base.spec) {
        if q != *expected {
            return Err(Error::Parse(format!(
                "element was written for q = {q}, but the base has q = {expected}"
            )));
        }
    }
    let mut x = TensorElement::zero(e.degree);
    for t in &e.terms {
        let word = letters_of(&base.theory, &t.word)?;
        if word.len() != word_len(e.degree) {
            return Err(Error::DegreeMismatch {
                expected: word_len(e.degree),
                found: word.len(),
            });
        }
        x.add_term(word, parse_scalar(&t.coeff)?);
    }
    Ok(x)
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn element_to_json(base: &Base, x: &TensorElement) -> serde_json::Value {
    serde_json::to_value(element_json(base, x)).expect("element serializes")
}

pub fn element_from_value(base: &Base, value: &serde_json::Value) -> Result<TensorElement> {
    let e: ElementJson =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    element_from_json(base, &e)
}

pub fn parse_element(base: &Base, text: &str) -> Result<TensorElement> {
    element_from_json(base, &parse_json(text)?)
}

pub fn square_to_json(base: &Base, x: &TensorSquare) -> serde_json::Value {
    let word = |b: &BasisWord| WordJson {
        degree: b.degree,
        word: labels_of(&base.theory, &b.letters),
    };
    let s = SquareJson {
        terms: x
            .terms()
            .iter()
            .map(|((l, r), c)| SquareTermJson {
                left: word(l),
                right: word(r),
                coeff: format_scalar(c),
            })
            .collect(),
    };
    serde_json::to_value(s).expect("tensor serializes")
}

pub fn parse_square(base: &Base, text: &str) -> Result<TensorSquare> {
    let s: SquareJson = parse_json(text)?;
    let word = |w: &WordJson| BasisWord::new(w.degree, letters_of(&base.theory, &w.word)?);
    let mut out = TensorSquare::new();
    for t in &s.terms {
        out.add_term(word(&t.left)?, word(&t.right)?, parse_scalar(&t.coeff)?);
    }
    Ok(out)
}

pub fn character_to_json(base: &Base, c: &LinearCharacter) -> serde_json::Value {
    let j = CharacterJson {
        max_degree: c.max_degree(),
        components: c
            .components()
            .iter()
            .map(|x| element_json(base, x))
            .collect(),
    };
    serde_json::to_value(j).expect("character serializes")
}

pub fn parse_character(base: &Base, ctx: &HopfContext, text: &str) -> Result<LinearCharacter> {
    let j: CharacterJson = parse_json(text)?;
    if j.components.len() != j.max_degree + 1 {
        return Err(Error::Parse(format!(
            "expected {} components, found {}",
            j.max_degree + 1,
            j.components.len()
        )));
    }
    let components = j
        .components
        .iter()
        .enumerate()
        .map(|(n, e)| {
            let x = element_from_json(base, e)?;
            if x.degree() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: x.degree(),
                });
            }
            Ok(x)
        })
        .collect::<Result<Vec<_>>>()?;
    LinearCharacter::new(ctx.clone(), components)
}

pub fn image_to_json(image: &FundamentalImage) -> serde_json::Value {
    let terms: Vec<ImageTermJson> = image
        .terms
        .iter()
        .map(|(w, c)| ImageTermJson {
            perm: w.one_line().to_vec(),
            coeff: format_scalar(c),
        })
        .collect();
    serde_json::to_value(terms).expect("image serializes")
}

pub fn parse_image(text: &str) -> Result<FundamentalImage> {
    let terms: Vec<ImageTermJson> = parse_json(text)?;
    let mut image = FundamentalImage {
        n: terms.first().map_or(0, |t| t.perm.len()),
        terms: Default::default(),
    };
    for t in terms {
        let w = Permutation::new(t.perm)?;
        if w.n() != image.n {
            return Err(Error::Parse("permutations of different sizes".into()));
        }
        image.terms.insert(w, parse_scalar(&t.coeff)?);
    }
    Ok(image)
}

// ---------------------------------------------------------------------------
// Expressions: `2*one - regm1/3`, `(reg - one)/(q - 1)`, `beta_star`, ...

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push(Token::Num(s));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
            }
            out.push(Token::Ident(s));
        } else if "+-*/()".contains(c) {
            out.push(Token::Op(c));
            chars.next();
        } else {
            return Err(Error::Parse(format!("unexpected `{c}` in `{text}`")));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Value {
    Scalar(Scalar),
    Element(BaseElement),
}

struct Parser<'a> {
    base: &'a Base,
    tokens: Vec<Token>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in expression `{}`", self.text))
    }

    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = match (acc, rhs) {
                (Value::Scalar(a), Value::Scalar(b)) => {
                    Value::Scalar(if op == '+' { a + b } else { a - b })
                }
                (Value::Element(a), Value::Element(b)) => {
                    Value::Element(if op == '+' { &a + &b } else { &a - &b })
                }
                _ => return Err(self.err("cannot add a number to a class function")),
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = match (op, acc, rhs) {
                ('*', Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a * b),
                ('*', Value::Scalar(a), Value::Element(x))
                | ('*', Value::Element(x), Value::Scalar(a)) => Value::Element(x.scale(&a)),
                ('/', v, Value::Scalar(b)) => {
                    if b.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    let inv = b.recip();
                    match v {
                        Value::Scalar(a) => Value::Scalar(a * inv),
                        Value::Element(x) => Value::Element(x.scale(&inv)),
                    }
                }
                _ => return Err(self.err("class functions can only be scaled")),
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(match self.unary()? {
                    Value::Scalar(a) => Value::Scalar(-a),
                    Value::Element(x) => Value::Element(-&x),
                })
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Value> {
        let theory = &self.base.theory;
        let token = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match token {
            Token::Num(s) => Ok(Value::Scalar(parse_scalar(&s)?)),
            Token::Op('(') => {
                let v = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Token::Op(c) => Err(self.err(&format!("unexpected `{c}`"))),
            Token::Ident(name) => {
                if let Ok(i) = theory.label_index(&name) {
                    return Ok(Value::Element(theory.basis(i)));
                }
                match (name.as_str(), self.base.q()) {
                    ("reg", _) => Ok(Value::Element(theory.reg())),
                    ("q", Some(q)) => Ok(Value::Scalar(Scalar::from_integer(q.into()))),
                    ("beta_star", Some(q)) => {
                        let x = &theory.reg() - &theory.one();
                        Ok(Value::Element(
                            x.scale(&Scalar::new(1.into(), (q - 1).into())),
                        ))
                    }
                    _ => Err(Error::UnknownLabel(name)),
                }
            }
        }
    }
}

/// Parses a rational linear combination of basis labels into `scf(G)`.
pub fn parse_expression(base: &Base, text: &str) -> Result<BaseElement> {
    let mut p = Parser {
        base,
        tokens: tokenize(text)?,
        pos: 0,
        text,
    };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    match v {
        Value::Element(x) => Ok(x),
        Value::Scalar(_) => Err(p.err("expected a class function, found a number")),
    }
}
