//! Pattern expressions.
//!
//! ```text
//! pattern := block ('*' block)*
//! block   := index ('.' index)*
//! index   := [0-9]+
//! ```
//!
//! `.` is `⊙` and binds tighter than `*` (`⊗`). Spaces between tokens are ignored.

use alloc::vec::Vec;

use super::{bit, ConcatPattern, MAX_K};
use crate::error::{ParseError, ParseErrorKind};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            position: self.pos,
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self) -> ParseError {
        match core::str::from_utf8(&self.src[self.pos..])
            .ok()
            .and_then(|s| s.chars().next())
        {
            Some(c) => self.err(ParseErrorKind::UnexpectedChar(c)),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn index(&mut self) -> Result<(usize, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: usize = 0;
        while let Some(d) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            value = value.saturating_mul(10).saturating_add((d - b'0') as usize);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected());
        }
        Ok((value, start))
    }

    fn block(&mut self) -> Result<Vec<(usize, usize)>, ParseError> {
        let mut out = alloc::vec![self.index()?];
        while self.peek() == Some(b'.') {
            self.pos += 1;
            out.push(self.index()?);
        }
        Ok(out)
    }

    fn pattern(&mut self) -> Result<Vec<Vec<(usize, usize)>>, ParseError> {
        if self.peek().is_none() {
            return Err(self.err(ParseErrorKind::EmptyInput));
        }
        let mut out = alloc::vec![self.block()?];
        loop {
            match self.peek() {
                None => return Ok(out),
                Some(b'*') => {
                    self.pos += 1;
                    out.push(self.block()?);
                }
                Some(_) => return Err(self.unexpected()),
            }
        }
    }
}

/// Parses a pattern expression over `k` layers. With `k = None` the layer count
/// is the largest index mentioned.
pub fn parse_pattern(text: &str, k: Option<usize>) -> Result<ConcatPattern, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let blocks = parser.pattern()?;
    let k = k.unwrap_or_else(|| blocks.iter().flatten().map(|&(i, _)| i).max().unwrap_or(0));
    let k_eff = k.min(MAX_K);
    let mut seen = 0u32;
    let mut masks = Vec::with_capacity(blocks.len());
    for block in &blocks {
        let mut m = 0u32;
        for &(index, position) in block {
            if index == 0 || index > k_eff {
                return Err(ParseError {
                    kind: ParseErrorKind::IndexOutOfRange { index, k: k_eff },
                    position,
                });
            }
            let b = bit(index as u8);
            if seen & b != 0 {
                return Err(ParseError {
                    kind: ParseErrorKind::RepeatedIndex(index),
                    position,
                });
            }
            seen |= b;
            m |= b;
        }
        masks.push(m);
    }
    if let Some(missing) = (1..=k_eff).find(|&i| seen & bit(i as u8) == 0) {
        return Err(ParseError {
            kind: ParseErrorKind::MissingIndex(missing),
            position: text.len(),
        });
    }
    Ok(ConcatPattern::from_masks_unchecked(k_eff, masks))
}
