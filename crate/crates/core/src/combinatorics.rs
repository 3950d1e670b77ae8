//! Integer compositions, set compositions, their binary encodings and statistics.
//!
//! Positions are 1-based in the mathematical sense: a [`BinarySeq`] of length
//! `n - 1` stores coordinate `j` (for `1 <= j <= n - 1`) at index `j - 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntegerComposition(Vec<usize>);

impl IntegerComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "{parts:?} has a zero part"
            )));
        }
        Ok(Self(parts))
    }

    /// The unique composition of 0.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-part composition `(n)`.
    pub fn single(n: usize) -> Self {
        assert!(n > 0, "a part must be positive");
        Self(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|μ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(μ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `μ_1, μ_1 + μ_2, ..., μ_1 + ... + μ_ℓ`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Internal boundaries `{μ̄_1, ..., μ̄_{ℓ-1}}`.
    pub fn boundaries(&self) -> Vec<usize> {
        let mut sums = self.partial_sums();
        sums.pop();
        sums
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// True when `self` is obtained from `other` by splitting parts
    /// (i.e. `other` coarsens `self`). Both must have the same size.
    pub fn refines(&self, other: &IntegerComposition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mine = self.boundaries();
        other.boundaries().iter().all(|b| mine.contains(b))
    }

    pub fn conjugate(&self) -> Result<Self> {
        let bits = binary_encode(self, Encoding::OnesInside)?;
        binary_decode(&bits, Encoding::ZerosInside)
    }

    /// `μ ·|· ν`: the part lists appended.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Ok(Self(parts))
    }

    /// `μ |·· ν`: the last part of `μ` fused with the first part of `ν`.
    pub fn smash(&self, other: &Self) -> Result<Self> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Ok(Self(parts))
    }
}

impl TryFrom<Vec<usize>> for IntegerComposition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<IntegerComposition> for Vec<usize> {
    fn from(c: IntegerComposition) -> Self {
        c.0
    }
}

impl fmt::Display for IntegerComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All compositions of `n`, ordered lexicographically by their
/// [`Encoding::ZerosInside`] binary sequence.
pub fn enumerate_compositions(n: usize) -> Vec<IntegerComposition> {
    if n == 0 {
        return vec![IntegerComposition::empty()];
    }
    let width = n - 1;
    (0u64..1 << width)
        .map(|counter| {
            let bits = (0..width)
                .map(|j| counter >> (width - 1 - j) & 1 == 1)
                .collect();
            binary_decode(&BinarySeq(bits), Encoding::ZerosInside).unwrap()
        })
        .collect()
}

/// A 0/1 sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BinarySeq(pub Vec<bool>);

impl BinarySeq {
    pub fn zeros(len: usize) -> Self {
        Self(vec![false; len])
    }

    pub fn ones(len: usize) -> Self {
        Self(vec![true; len])
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        Self(bits.iter().map(|&b| b != 0).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate `j`, 1-based.
    pub fn at(&self, j: usize) -> bool {
        self.0[j - 1]
    }

    /// `ā`.
    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|b| !b).collect())
    }

    /// `|a|`, the number of ones.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    /// `self · bit · other`.
    pub fn join(&self, bit: bool, other: &Self) -> Self {
        let mut bits = self.0.clone();
        bits.push(bit);
        bits.extend_from_slice(&other.0);
        Self(bits)
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| !a || *b)
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.0.iter().map(|&b| b as u8).collect()
    }
}

impl fmt::Display for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|&b| (b as u8).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The two bijections between compositions of `n` and `{0,1}^{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Encoding {
    /// `bn₁`: 1 inside parts, 0 at partial sums.
    OnesInside,
    /// `bn₀`: 0 inside parts, 1 at partial sums.
    ZerosInside,
}

pub fn binary_encode(mu: &IntegerComposition, encoding: Encoding) -> Result<BinarySeq> {
    let n = mu.size();
    if n == 0 {
        return Err(Error::EmptyComposition);
    }
    let boundary = encoding == Encoding::ZerosInside;
    let mut bits = vec![!boundary; n - 1];
    for b in mu.boundaries() {
        bits[b - 1] = boundary;
    }
    Ok(BinarySeq(bits))
}

pub fn binary_decode(bits: &BinarySeq, encoding: Encoding) -> Result<IntegerComposition> {
    let boundary = encoding == Encoding::ZerosInside;
    let mut parts = Vec::new();
    let mut current = 1;
    for &b in &bits.0 {
        if b == boundary {
            parts.push(current);
            current = 1;
        } else {
            current += 1;
        }
    }
    parts.push(current);
    IntegerComposition::new(parts)
}

/// An ordered sequence of nonempty disjoint blocks covering `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetComposition {
    blocks: Vec<Vec<usize>>,
    // block_of[j - 1] is the index of the block containing j.
    #[serde(skip)]
    block_of: Vec<usize>,
}

/// The statistics `lc`, `llc` and `bc` of a set composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    pub lc: BinarySeq,
    pub llc: BinarySeq,
    pub bc: BinarySeq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToggleKind {
    Split,
    Fused,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Toggle {
    pub point: usize,
    pub kind: ToggleKind,
}

impl SetComposition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if n == 0 {
            return Err(Error::InvalidSetComposition(
                "set compositions need a nonempty ground set".into(),
            ));
        }
        let mut block_of = vec![usize::MAX; n];
        for (k, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidSetComposition(format!("block {k} is empty")));
            }
            block.sort_unstable();
            for &j in block.iter() {
                if j == 0 || j > n {
                    return Err(Error::InvalidSetComposition(format!(
                        "{j} is outside {{1..{n}}}"
                    )));
                }
                if block_of[j - 1] != usize::MAX {
                    return Err(Error::InvalidSetComposition(format!("{j} appears twice")));
                }
                block_of[j - 1] = k;
            }
        }
        Ok(Self { blocks, block_of })
    }

    /// The one-block composition `({1..n})`.
    pub fn whole(n: usize) -> Self {
        Self::new(vec![(1..=n).collect()]).unwrap()
    }

    /// `({1..m}, {m+1..n})`, or the whole set when `m` is `0` or `n`.
    pub fn prefix_split(m: usize, n: usize) -> Self {
        if m == 0 || m == n {
            return Self::whole(n);
        }
        Self::new(vec![(1..=m).collect(), (m + 1..=n).collect()]).unwrap()
    }

    /// `(A, Ā)` for a nonempty proper subset `A ⊆ {1..n}` given as a bitmask
    /// (bit `j - 1` set iff `j ∈ A`).
    pub fn from_subset_mask(mask: u64, n: usize) -> Result<Self> {
        let inside: Vec<usize> = (1..=n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let outside: Vec<usize> = (1..=n).filter(|j| mask >> (j - 1) & 1 == 0).collect();
        Self::new(vec![inside, outside])
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    /// `ℓ(A)`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing `j` (1-based element, 0-based block).
    pub fn block_of(&self, j: usize) -> usize {
        self.block_of[j - 1]
    }

    fn is_block_max(&self, j: usize) -> bool {
        *self.blocks[self.block_of(j)].last().unwrap() == j
    }

    /// True iff every block of `other` is the union of a contiguous run of
    /// blocks of `self`, the runs appearing in order.
    pub fn refines(&self, other: &SetComposition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::GroundSetMismatch(self.n(), other.n()));
        }
        let mut mine = self.blocks.iter();
        for target in &other.blocks {
            let mut covered = 0;
            while covered < target.len() {
                let Some(block) = mine.next() else {
                    return Ok(false);
                };
                if !block.iter().all(|j| target.binary_search(j).is_ok()) {
                    return Ok(false);
                }
                covered += block.len();
            }
        }
        Ok(mine.next().is_none())
    }

    pub fn stats(&self) -> Stats {
        let n = self.n();
        let mut lc = Vec::with_capacity(n - 1);
        let mut llc = Vec::with_capacity(n - 1);
        let mut bc = Vec::with_capacity(n - 1);
        for j in 1..n {
            let (k, l) = (self.block_of(j), self.block_of(j + 1));
            lc.push(!self.is_block_max(j));
            llc.push(k <= l);
            bc.push(k == l);
        }
        Stats {
            lc: BinarySeq(lc),
            llc: BinarySeq(llc),
            bc: BinarySeq(bc),
        }
    }

    pub fn lc(&self) -> BinarySeq {
        let n = self.n();
        BinarySeq((1..n).map(|j| !self.is_block_max(j)).collect())
    }

    pub fn toggle_points(&self) -> Vec<Toggle> {
        let mut toggles = Vec::new();
        for j in 1..=self.n() {
            let i = self.block_of(j);
            if self.is_block_max(j) {
                if let Some(next) = self.blocks.get(i + 1) {
                    if next[0] > j + 1 {
                        toggles.push(Toggle {
                            point: j,
                            kind: ToggleKind::Split,
                        });
                    }
                }
            } else if j + 1 > self.n() || self.block_of(j + 1) != i {
                toggles.push(Toggle {
                    point: j,
                    kind: ToggleKind::Fused,
                });
            }
        }
        toggles
    }

    pub fn is_toggle_free(&self) -> bool {
        self.toggle_points().is_empty()
    }

    /// Flips the minimal toggle point: a split toggle fuses its block with the
    /// next one, a fused toggle splits its block after the point. `None` for
    /// toggle-free compositions.
    pub fn toggle_partner(&self) -> Option<SetComposition> {
        let toggle = *self.toggle_points().first()?;
        let i = self.block_of(toggle.point);
        let mut blocks = self.blocks.clone();
        match toggle.kind {
            ToggleKind::Split => {
                let next = blocks.remove(i + 1);
                blocks[i].extend(next);
            }
            ToggleKind::Fused => {
                let (low, high): (Vec<usize>, Vec<usize>) =
                    blocks[i].iter().partition(|&&x| x <= toggle.point);
                blocks[i] = low;
                blocks.insert(i + 1, high);
            }
        }
        Some(SetComposition::new(blocks).unwrap())
    }

    /// The minimal-crossing permutation sending the blocks, in order, onto
    /// consecutive intervals.
    pub fn straighten(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        let mut next = 1;
        for block in &self.blocks {
            for &j in block {
                image[j - 1] = next;
                next += 1;
            }
        }
        Permutation(image)
    }

    /// `w_A(A)`: the interval composition with the same block sizes.
    pub fn straightened(&self) -> SetComposition {
        let mut start = 1;
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let block: Vec<usize> = (start..start + b.len()).collect();
                start += b.len();
                block
            })
            .collect();
        SetComposition::new(blocks).unwrap()
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetComposition {
    type Error = Error;
    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(blocks)
    }
}

impl From<SetComposition> for Vec<Vec<usize>> {
    fn from(c: SetComposition) -> Self {
        c.blocks
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "({})", blocks.join(","))
    }
}

/// Every set composition of `{1..n}`, generated from surjective words
/// `s: {1..n} → {1..ℓ}` for `ℓ = 1..n`, each in lexicographic order.
pub fn enumerate_set_compositions(n: usize) -> Vec<SetComposition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for len in 1..=n {
        let mut word = vec![0usize; n];
        loop {
            let mut blocks = vec![Vec::new(); len];
            for (i, &k) in word.iter().enumerate() {
                blocks[k].push(i + 1);
            }
            if blocks.iter().all(|b| !b.is_empty()) {
                out.push(SetComposition::new(blocks).unwrap());
            }
            // odometer increment, last position fastest
            let mut pos = n;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                word[pos] += 1;
                if word[pos] < len {
                    break;
                }
                word[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
    }
    out
}

/// The `3^{n-1}` toggle-free set compositions of `{1..n}`, built by deciding
/// for each `m + 1` whether it joins the block of `m`, opens a new block right
/// after that block, or opens a new block at the front. Children are visited
/// in that order.
pub fn enumerate_toggle_free(n: usize) -> Vec<SetComposition> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: Vec<Vec<Vec<usize>>> = vec![vec![vec![1]]];
    for m in 1..n {
        let mut next = Vec::with_capacity(level.len() * 3);
        for blocks in &level {
            let home = blocks.iter().position(|b| b.contains(&m)).unwrap();
            let mut same = blocks.clone();
            same[home].push(m + 1);
            next.push(same);
            let mut after = blocks.clone();
            after.insert(home + 1, vec![m + 1]);
            next.push(after);
            let mut front = blocks.clone();
            front.insert(0, vec![m + 1]);
            next.push(front);
        }
        level = next;
    }
    level
        .into_iter()
        .map(|b| SetComposition::new(b).unwrap())
        .collect()
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Self(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(j)`, 1-based.
    pub fn apply(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self(inv)
    }

    /// `{i : w(i) > w(i+1)}`.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (1..=n).collect();
        let mut out = vec![Self(current.clone())];
        // next_permutation
        while let Some(i) = (1..current.len())
            .rev()
            .find(|&i| current[i - 1] < current[i])
        {
            let j = (i..current.len())
                .rev()
                .find(|&j| current[j] > current[i - 1])
                .unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
            out.push(Self(current.clone()));
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}
