//! Binary words, level words, label words and barred Fubini words.
//!
//! Positions are 1-based in every public function that takes a position.

mod fubini;
mod stats;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use fubini::{enumerate_barred_fubini, enumerate_fubini, is_fubini};
pub(crate) use stats::dinv_ints;
pub use stats::{area, build_u_word, dinv, dinv_barred, dinv_i, gamma_to_uw};

/// A word `v ∈ {0,1}^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidWord(bits.iter().map(|b| b.to_string()).collect()));
        }
        Ok(BinaryWord(bits))
    }

    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    pub fn zeros(n: usize) -> Self {
        BinaryWord(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        BinaryWord(vec![1; n])
    }

    /// `1 0^{n-1}`.
    pub fn one_then_zeros(n: usize) -> Self {
        let mut bits = vec![0; n];
        if n > 0 {
            bits[0] = 1;
        }
        BinaryWord(bits)
    }

    /// All words of length `n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = BinaryWord> {
        (0u64..(1u64 << n)).map(move |mask| BinaryWord((0..n).map(|i| ((mask >> (n - 1 - i)) & 1) as u8).collect()))
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of ones, written `|v|`.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    /// Number of zeros, `n - |v|`.
    pub fn zeros_count(&self) -> usize {
        self.len() - self.weight()
    }

    /// True for `0^n` with `n >= 1`.
    pub fn is_all_zero(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&b| b == 0)
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BinaryWord(bits)
    }

    pub fn push(&self, bit: u8) -> BinaryWord {
        assert!(bit <= 1);
        let mut bits = self.0.clone();
        bits.push(bit);
        BinaryWord(bits)
    }

    pub fn prepend(&self, bit: u8) -> BinaryWord {
        assert!(bit <= 1);
        let mut bits = vec![bit];
        bits.extend_from_slice(&self.0);
        BinaryWord(bits)
    }
}

impl std::str::FromStr for BinaryWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∅" || s == "-" {
            return Ok(BinaryWord::empty());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinaryWord)
    }
}

impl TryFrom<String> for BinaryWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BinaryWord> for String {
    fn from(w: BinaryWord) -> String {
        w.to_string()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// A level word `γ ∈ ℕ^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LevelWord(pub Vec<u32>);

impl LevelWord {
    pub fn levels(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::str::FromStr for LevelWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad level word {s:?}"))))
            .collect::<Result<Vec<u32>>>()
            .map(LevelWord)
    }
}

/// A level word with bars on selected entries.
///
/// A barred entry is positive, unique in the word, and a strict
/// left-to-right maximum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BarredWord {
    levels: Vec<u32>,
    bars: Vec<bool>,
}

impl BarredWord {
    pub fn new(levels: Vec<u32>, bars: Vec<bool>) -> Result<Self> {
        if levels.len() != bars.len() {
            return Err(Error::LengthMismatch { expected: levels.len(), got: bars.len() });
        }
        for (j, &barred) in bars.iter().enumerate() {
            if barred && !bar_eligible(&levels, j) {
                return Err(Error::Parse(format!("entry {} of {:?} may not carry a bar", j + 1, levels)));
            }
        }
        Ok(BarredWord { levels, bars })
    }

    pub fn unbarred(levels: Vec<u32>) -> Self {
        let n = levels.len();
        BarredWord { levels, bars: vec![false; n] }
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn bars(&self) -> &[bool] {
        &self.bars
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Number of barred entries.
    pub fn bar_count(&self) -> usize {
        self.bars.iter().filter(|&&b| b).count()
    }

    pub fn area(&self) -> u32 {
        area(&LevelWord(self.levels.clone()))
    }

    /// `dinv_i` for every position, in order.
    pub fn dinv_vector(&self) -> Vec<u32> {
        (1..=self.len()).map(|i| dinv_i(self, i).expect("position in range")).collect()
    }
}

/// Positive, unique, strict left-to-right maximum (0-based position).
pub(crate) fn bar_eligible(levels: &[u32], j: usize) -> bool {
    let x = levels[j];
    x > 0 && levels.iter().filter(|&&y| y == x).count() == 1 && levels[..j].iter().all(|&y| y < x)
}

impl fmt::Display for BarredWord {
    /// Digits, with an apostrophe after each barred entry: `01'2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, b) in self.levels.iter().zip(&self.bars) {
            if *x < 10 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{{{x}}}")?;
            }
            if *b {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for BarredWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut levels = Vec::new();
        let mut bars = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                '\'' => match bars.last_mut() {
                    Some(b) => *b = true,
                    None => return Err(Error::Parse(format!("bar before any entry in {s:?}"))),
                },
                '{' => {
                    let digits: String = chars.by_ref().take_while(|&c| c != '}').collect();
                    levels.push(digits.parse().map_err(|_| Error::Parse(format!("bad entry in {s:?}")))?);
                    bars.push(false);
                }
                _ => {
                    levels.push(c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad entry in {s:?}")))?);
                    bars.push(false);
                }
            }
        }
        BarredWord::new(levels, bars)
    }
}

/// A label: a positive integer, or the super letter `0̲` which is smaller
/// than every positive label and is treated as both smaller and larger
/// than itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    SuperZero,
    Int(u32),
}

impl Label {
    /// `self > other` under the super-alphabet convention.
    pub fn gt(self, other: Label) -> bool {
        match (self, other) {
            (Label::SuperZero, Label::SuperZero) => true,
            (Label::SuperZero, Label::Int(_)) => false,
            (Label::Int(_), Label::SuperZero) => true,
            (Label::Int(x), Label::Int(y)) => x > y,
        }
    }

    /// `self < other` under the super-alphabet convention.
    pub fn lt(self, other: Label) -> bool {
        match (self, other) {
            (Label::SuperZero, Label::SuperZero) => true,
            (Label::SuperZero, Label::Int(_)) => true,
            (Label::Int(_), Label::SuperZero) => false,
            (Label::Int(x), Label::Int(y)) => x < y,
        }
    }
}

/// A word of labels `π`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelWord(pub Vec<Label>);

impl LabelWord {
    pub fn from_ints(xs: &[u32]) -> Self {
        LabelWord(xs.iter().map(|&x| Label::Int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::str::FromStr for LabelWord {
    type Err = Error;
    /// Digits; `0` stands for the super letter `0̲`.
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(0) => Ok(Label::SuperZero),
                Some(d) => Ok(Label::Int(d)),
                None => Err(Error::Parse(format!("bad label word {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(LabelWord)
    }
}
