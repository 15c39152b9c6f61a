//! MacMahon's cut/join encoding of compositions, conjugation and reversal.
//!
//! A composition of `n >= 1` is a tiling of a `1 x n` board. Each of the
//! `n - 1` interior cell boundaries is either a cut (`C`, a part ends there)
//! or a join (`J`, the boundary lies inside a part). The leftmost letter is
//! the boundary after cell 1.

use std::fmt;

use crate::composition::Composition;
use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Cut,
    Join,
}

impl Letter {
    pub fn swap(self) -> Self {
        match self {
            Letter::Cut => Letter::Join,
            Letter::Join => Letter::Cut,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Cut => 'C',
            Letter::Join => 'J',
        }
    }

    pub fn from_char(c: char) -> std::result::Result<Self, ParseError> {
        match c {
            'C' => Ok(Letter::Cut),
            'J' => Ok(Letter::Join),
            other => Err(ParseError::BadLetter(other)),
        }
    }
}

/// A cut/join word together with its board length (`letters.len() + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutJoinSeq {
    letters: Vec<Letter>,
}

impl CutJoinSeq {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    /// Parses a `J`/`C` string. When `board` is given it must equal the
    /// word length plus one; it is the only way to spell the empty word
    /// unambiguously on a command line.
    pub fn parse(text: &str, board: Option<u32>) -> std::result::Result<Self, ParseError> {
        let letters = text
            .chars()
            .map(Letter::from_char)
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if let Some(board) = board {
            if board as usize != letters.len() + 1 {
                return Err(ParseError::BoardMismatch {
                    len: letters.len(),
                    board,
                });
            }
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn board_len(&self) -> u32 {
        self.letters.len() as u32 + 1
    }

    pub fn swapped(&self) -> Self {
        Self {
            letters: self.letters.iter().map(|l| l.swap()).collect(),
        }
    }

    pub fn cuts(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::Cut).count()
    }

    /// Board of length `n` whose letters are `C` exactly at the positions
    /// (bit `i` = boundary after cell `i + 1`) set in `mask`.
    pub fn from_cut_mask(n: u32, mask: u64) -> Self {
        assert!((1..=64).contains(&n), "board length must be in 1..=64");
        let letters = (0..n - 1)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Letter::Cut
                } else {
                    Letter::Join
                }
            })
            .collect();
        Self { letters }
    }
}

impl fmt::Display for CutJoinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters
            .iter()
            .try_for_each(|l| fmt::Write::write_char(f, l.as_char()))
    }
}

/// Cut/join word of a nonempty composition.
pub fn encode(c: &Composition) -> Result<CutJoinSeq> {
    if c.is_empty() {
        return Err(Error::EmptyBoard);
    }
    let n = c.total() as usize;
    let mut letters = Vec::with_capacity(n - 1);
    for (i, &part) in c.parts().iter().enumerate() {
        letters.extend(std::iter::repeat_n(Letter::Join, part as usize - 1));
        if i + 1 < c.len() {
            letters.push(Letter::Cut);
        }
    }
    Ok(CutJoinSeq { letters })
}

/// Inverse of [`encode`]; total for every word, the empty word decodes to `(1)`.
pub fn decode(w: &CutJoinSeq) -> Composition {
    let mut parts = Vec::with_capacity(w.cuts() + 1);
    let mut current = 1u32;
    for letter in &w.letters {
        match letter {
            Letter::Join => current += 1,
            Letter::Cut => {
                parts.push(current);
                current = 1;
            }
        }
    }
    parts.push(current);
    Composition::from_parts_unchecked(parts)
}

/// MacMahon conjugate: swap every letter of the cut/join word.
pub fn conjugate(c: &Composition) -> Result<Composition> {
    Ok(decode(&encode(c)?.swapped()))
}

pub fn reverse(c: &Composition) -> Composition {
    let mut parts = c.parts().to_vec();
    parts.reverse();
    Composition::from_parts_unchecked(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;

    fn word(s: &str) -> CutJoinSeq {
        CutJoinSeq::parse(s, None).unwrap()
    }

    #[test]
    fn encode_reference_examples() {
        assert_eq!(encode(&comp(&[3, 1, 1])).unwrap().to_string(), "JJCC");
        assert_eq!(encode(&comp(&[2, 2, 1])).unwrap().to_string(), "JCJC");
        assert_eq!(encode(&comp(&[5])).unwrap().to_string(), "JJJJ");
        assert_eq!(encode(&comp(&[1])).unwrap().to_string(), "");
        assert_eq!(encode(&Composition::empty()), Err(Error::EmptyBoard));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&word("JCJJ")), comp(&[2, 3]));
        assert_eq!(decode(&word("")), comp(&[1]));
        assert_eq!(decode(&word("CCCC")), comp(&[1, 1, 1, 1, 1]));
        assert_eq!(word("JCJJ").board_len(), 5);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&comp(&[3, 1, 1])).unwrap(), comp(&[1, 1, 3]));
        assert_eq!(conjugate(&comp(&[2, 3])).unwrap(), comp(&[1, 2, 1, 1]));
        assert_eq!(conjugate(&comp(&[1])).unwrap(), comp(&[1]));
        assert_eq!(conjugate(&Composition::empty()), Err(Error::EmptyBoard));
        assert_eq!(encode(&comp(&[1, 1, 3])).unwrap().to_string(), "CCJJ");
        assert_eq!(encode(&comp(&[1, 2, 1, 1])).unwrap().to_string(), "CJCC");
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse(&comp(&[3, 1, 1])), comp(&[1, 1, 3]));
        assert_eq!(reverse(&comp(&[1, 2, 2])), comp(&[2, 2, 1]));
        assert_eq!(reverse(&Composition::empty()), Composition::empty());
        // (3,1,1) and (1,1,3) are inverse conjugates.
        let c = comp(&[3, 1, 1]);
        assert_eq!(conjugate(&c).unwrap(), reverse(&c));
    }

    #[test]
    fn parse_board_checks() {
        assert!(CutJoinSeq::parse("", Some(1)).is_ok());
        assert_eq!(
            CutJoinSeq::parse("JJ", Some(5)),
            Err(ParseError::BoardMismatch { len: 2, board: 5 })
        );
        assert_eq!(
            CutJoinSeq::parse("JxC", None),
            Err(ParseError::BadLetter('x'))
        );
        assert_eq!(
            CutJoinSeq::parse("jc", None),
            Err(ParseError::BadLetter('j'))
        );
    }

    #[test]
    fn cut_mask_words() {
        assert_eq!(CutJoinSeq::from_cut_mask(5, 0b1100).to_string(), "JJCC");
        assert_eq!(CutJoinSeq::from_cut_mask(1, 0).board_len(), 1);
    }
}
