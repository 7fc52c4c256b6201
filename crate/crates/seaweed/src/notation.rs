//! Compositions, block partitions, and the seaweed spec notation.
//!
//! A spec is written `p 2|4/1|2|3` (or `pA ...` for the traceless variant):
//! two compositions of the same `N` separated by `/`, parts separated by `|`.
//! The `p` prefix is optional and whitespace is ignored everywhere.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotationError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("top and bottom sums differ: {top} vs {bottom}")]
    SumMismatch { top: usize, bottom: usize },
}

/// An ordered list of positive parts with a fixed sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
    sum: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, NotationError> {
        if parts.is_empty() {
            return Err(NotationError::Parse(
                "a composition needs at least one part".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(NotationError::Parse("parts must be positive".into()));
        }
        let sum = parts.iter().sum();
        Ok(Self { parts, sum })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a composition always has at least one part
    }

    pub fn sum(&self) -> usize {
        self.sum
    }

    /// The set of partial sums, strictly increasing; always ends in `sum`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0usize, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// The intervals `[lo, hi]` (1-indexed, inclusive) tiling `1..=sum`, one
    /// per part.
    pub fn blocks(&self) -> BlockPartition {
        let mut intervals = Vec::with_capacity(self.parts.len());
        let mut lo = 1;
        for &p in &self.parts {
            intervals.push((lo, lo + p - 1));
            lo += p;
        }
        BlockPartition { intervals }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// An ordered list of contiguous index intervals covering `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    intervals: Vec<(usize, usize)>,
}

impl BlockPartition {
    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    /// Index of the interval containing `v` (1-indexed element label).
    pub fn block_of(&self, v: usize) -> usize {
        self.intervals
            .iter()
            .position(|&(lo, hi)| lo <= v && v <= hi)
            .expect("element out of range")
    }
}

/// Whether the algebra sits inside `gl(N)` or its traceless part `sl(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Gl,
    Sl,
}

/// A pair of compositions of the same `N` plus the gl/sl flavor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeaweedSpec {
    top: Composition,
    bottom: Composition,
    flavor: Flavor,
}

impl SeaweedSpec {
    pub fn new(
        top: Composition,
        bottom: Composition,
        flavor: Flavor,
    ) -> Result<Self, NotationError> {
        if top.sum() != bottom.sum() {
            return Err(NotationError::SumMismatch {
                top: top.sum(),
                bottom: bottom.sum(),
            });
        }
        Ok(Self {
            top,
            bottom,
            flavor,
        })
    }

    pub fn parse(text: &str) -> Result<Self, NotationError> {
        let tokens = tokenize(text)?;
        let mut pos = 0;
        let flavor = match tokens.first() {
            Some(Token::Word(w)) if w == "p" => {
                pos += 1;
                Flavor::Gl
            }
            Some(Token::Word(w)) if w == "pA" => {
                pos += 1;
                Flavor::Sl
            }
            Some(Token::Word(w)) => {
                return Err(NotationError::Parse(format!(
                    "unknown prefix `{w}` (expected `p` or `pA`)"
                )))
            }
            _ => Flavor::Gl,
        };
        let top = parse_parts(&tokens, &mut pos)?;
        match tokens.get(pos) {
            Some(Token::Slash) => pos += 1,
            _ => return Err(NotationError::Parse("expected `/`".into())),
        }
        let bottom = parse_parts(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(NotationError::Parse("trailing input after spec".into()));
        }
        SeaweedSpec::new(top, bottom, flavor)
    }

    pub fn top(&self) -> &Composition {
        &self.top
    }

    pub fn bottom(&self) -> &Composition {
        &self.bottom
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> usize {
        self.top.sum()
    }

    /// Same compositions, other flavor.
    pub fn with_flavor(&self, flavor: Flavor) -> SeaweedSpec {
        SeaweedSpec {
            top: self.top.clone(),
            bottom: self.bottom.clone(),
            flavor,
        }
    }

    /// Dimension of the spanned algebra: `N` diagonal directions (one less
    /// for sl) plus a strictly triangular part per block of each composition.
    pub fn dim(&self) -> usize {
        let tri = |c: &Composition| c.parts().iter().map(|&a| a * (a - 1) / 2).sum::<usize>();
        let gl = self.n() + tri(&self.top) + tri(&self.bottom);
        match self.flavor {
            Flavor::Gl => gl,
            Flavor::Sl => gl - 1,
        }
    }
}

impl fmt::Display for SeaweedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.flavor {
            Flavor::Gl => "p",
            Flavor::Sl => "pA",
        };
        write!(f, "{tag} {}/{}", self.top, self.bottom)
    }
}

impl FromStr for SeaweedSpec {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SeaweedSpec::parse(s)
    }
}

#[derive(Debug, PartialEq, Eq)]
enum Token {
    Word(String),
    Int(usize),
    Bar,
    Slash,
}

fn tokenize(text: &str) -> Result<Vec<Token>, NotationError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let value: usize = digits
                .parse()
                .map_err(|_| NotationError::Parse(format!("integer `{digits}` out of range")))?;
            tokens.push(Token::Int(value));
        } else if c.is_alphabetic() {
            let mut word = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_alphabetic() {
                    word.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            tokens.push(Token::Word(word));
        } else if c == '|' {
            chars.next();
            tokens.push(Token::Bar);
        } else if c == '/' {
            chars.next();
            tokens.push(Token::Slash);
        } else {
            return Err(NotationError::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(tokens)
}

fn parse_parts(tokens: &[Token], pos: &mut usize) -> Result<Composition, NotationError> {
    let mut parts = Vec::new();
    loop {
        match tokens.get(*pos) {
            Some(&Token::Int(v)) => {
                *pos += 1;
                if v == 0 {
                    return Err(NotationError::Parse("parts must be positive".into()));
                }
                parts.push(v);
            }
            _ => return Err(NotationError::Parse("expected an integer part".into())),
        }
        match tokens.get(*pos) {
            Some(Token::Bar) => *pos += 1,
            _ => break,
        }
    }
    Composition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parses_flavors_and_parts() {
        let s = SeaweedSpec::parse("p 2|4 / 1|2|3").unwrap();
        assert_eq!(s.top().parts(), &[2, 4]);
        assert_eq!(s.bottom().parts(), &[1, 2, 3]);
        assert_eq!(s.flavor(), Flavor::Gl);

        let s = SeaweedSpec::parse("pA 7/7").unwrap();
        assert_eq!(s.top().parts(), &[7]);
        assert_eq!(s.bottom().parts(), &[7]);
        assert_eq!(s.flavor(), Flavor::Sl);

        // bare form defaults to gl
        let s = SeaweedSpec::parse("2|4/1|2|3").unwrap();
        assert_eq!(s.flavor(), Flavor::Gl);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            SeaweedSpec::parse("p 2|3 / 7"),
            Err(NotationError::SumMismatch { top: 5, bottom: 7 })
        );
        assert!(matches!(
            SeaweedSpec::parse("p 2|0/2"),
            Err(NotationError::Parse(_))
        ));
        assert!(matches!(
            SeaweedSpec::parse("q 2/2"),
            Err(NotationError::Parse(_))
        ));
        assert!(matches!(
            SeaweedSpec::parse("p /2"),
            Err(NotationError::Parse(_))
        ));
        assert!(matches!(
            SeaweedSpec::parse("p 2/2 extra"),
            Err(NotationError::Parse(_))
        ));
        assert!(matches!(
            SeaweedSpec::parse(""),
            Err(NotationError::Parse(_))
        ));
    }

    #[test]
    fn partial_sums_examples() {
        assert_eq!(
            comp(&[2, 2, 3, 1, 1, 3]).partial_sums(),
            vec![2, 4, 7, 8, 9, 12]
        );
        assert_eq!(comp(&[4, 3, 5]).partial_sums(), vec![4, 7, 12]);
        assert_eq!(comp(&[7]).partial_sums(), vec![7]);
    }

    #[test]
    fn blocks_examples() {
        assert_eq!(comp(&[2, 4]).blocks().intervals(), &[(1, 2), (3, 6)]);
        assert_eq!(
            comp(&[1, 2, 3]).blocks().intervals(),
            &[(1, 1), (2, 3), (4, 6)]
        );
        assert_eq!(comp(&[5]).blocks().intervals(), &[(1, 5)]);
    }

    #[test]
    fn dim_examples() {
        assert_eq!(SeaweedSpec::parse("p 3/3").unwrap().dim(), 9);
        assert_eq!(SeaweedSpec::parse("pA 3/3").unwrap().dim(), 8);
        assert_eq!(SeaweedSpec::parse("p 2|4/1|2|3").unwrap().dim(), 17);
    }

    #[test]
    fn display_round_trips() {
        for text in ["p 2|4/1|2|3", "pA 7/7", "p 1|1|1/3"] {
            let s = SeaweedSpec::parse(text).unwrap();
            assert_eq!(s.to_string(), text);
            assert_eq!(SeaweedSpec::parse(&s.to_string()).unwrap(), s);
        }
    }
}
