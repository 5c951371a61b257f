//! The partial minimum `+` on patterns and sector subtraction.
//!
//! `x + y` is defined only when `x` and `y` are comparable and is then the
//! smaller of the two. The top pattern is the identity.

pub mod laws;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::{ConcatPattern, Sector};

/// Result of `x + y`; `None` when the operands are incomparable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialSum {
    pub result: Option<ConcatPattern>,
}

impl PartialSum {
    pub fn is_defined(&self) -> bool {
        self.result.is_some()
    }
}

pub fn padd(x: &ConcatPattern, y: &ConcatPattern) -> Result<PartialSum> {
    let result = if x.leq(y)? {
        Some(x.clone())
    } else if y.leq(x)? {
        Some(y.clone())
    } else {
        None
    };
    Ok(PartialSum { result })
}

/// `y - x` in `sector`: `⊙` where `x` has `⊗` and `y` has `⊙`, `⊗` elsewhere.
pub fn subtract(y: &ConcatPattern, x: &ConcatPattern, sector: &Sector) -> Result<ConcatPattern> {
    if x.k() != y.k() {
        return Err(Error::SizeMismatch(y.k(), x.k()));
    }
    let ym = sector.merge_mask(y).ok_or_else(|| not_in(y, sector))?;
    let xm = sector.merge_mask(x).ok_or_else(|| not_in(x, sector))?;
    Ok(sector.pattern(ym & !xm))
}

fn not_in(p: &ConcatPattern, s: &Sector) -> Error {
    use alloc::string::ToString;
    Error::NotInSector {
        pattern: p.to_string(),
        sector: s.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{top_pattern, PatternSpace};

    fn p(text: &str) -> ConcatPattern {
        crate::parse_pattern(text, None).unwrap()
    }

    #[test]
    fn padd_examples() {
        assert_eq!(padd(&p("1*2*3"), &p("1.2*3")).unwrap().result, Some(p("1*2*3")));
        assert_eq!(padd(&p("1.2*3"), &p("1.2*3")).unwrap().result, Some(p("1.2*3")));
        assert!(!padd(&p("1.2*3"), &p("1*2.3")).unwrap().is_defined());
        assert!(padd(&p("1*2"), &p("1*2*3")).is_err());
    }

    #[test]
    fn top_is_identity() {
        let top = top_pattern(3).unwrap();
        for x in PatternSpace::new(3).unwrap().patterns() {
            assert_eq!(padd(x, &top).unwrap().result.as_ref(), Some(x));
            assert_eq!(padd(&top, x).unwrap().result.as_ref(), Some(x));
        }
    }

    #[test]
    fn subtract_examples() {
        let id = Sector::identity(3);
        assert_eq!(subtract(&p("1.2*3"), &p("1*2.3"), &id).unwrap(), p("1.2*3"));
        assert_eq!(subtract(&p("1.2*3"), &p("1.2*3"), &id).unwrap(), p("1*2*3"));
        assert_eq!(subtract(&p("1.2.3"), &p("1*2*3"), &id).unwrap(), p("1.2.3"));
        assert!(subtract(&p("2*1*3"), &p("1*2*3"), &id).is_err());
    }
}
