use std::fmt;

use super::DimsError;

/// Closed interval `[lower, upper]` of naturals; `upper = None` is `+∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DimBound {
    lower: u64,
    upper: Option<u64>,
}

impl DimBound {
    pub fn new(lower: u64, upper: Option<u64>) -> Result<Self, DimsError> {
        match upper {
            Some(u) if u < lower => Err(DimsError::Inverted { lower, upper: u }),
            _ => Ok(DimBound { lower, upper }),
        }
    }

    // Callers guarantee lower <= upper.
    pub(crate) fn from_parts(lower: u64, upper: Option<u64>) -> Self {
        debug_assert!(upper.is_none_or(|u| lower <= u));
        DimBound { lower, upper }
    }

    pub fn exact(v: u64) -> Self {
        DimBound {
            lower: v,
            upper: Some(v),
        }
    }

    pub fn at_most(v: u64) -> Self {
        DimBound {
            lower: 0,
            upper: Some(v),
        }
    }

    pub fn at_least(v: u64) -> Self {
        DimBound {
            lower: v,
            upper: None,
        }
    }

    pub fn unknown() -> Self {
        DimBound {
            lower: 0,
            upper: None,
        }
    }

    pub fn lower(&self) -> u64 {
        self.lower
    }

    pub fn upper(&self) -> Option<u64> {
        self.upper
    }

    pub fn exact_value(&self) -> Option<u64> {
        self.upper.filter(|&u| u == self.lower)
    }

    pub fn contains(&self, v: u64) -> bool {
        self.lower <= v && self.upper.is_none_or(|u| v <= u)
    }

    /// Both bounds hold at once. Disjoint intervals mean one of the two
    /// inputs is wrong, so that is an error rather than an empty result.
    pub fn intersect(&self, other: &DimBound) -> Result<DimBound, DimsError> {
        let lower = self.lower.max(other.lower);
        let upper = match (self.upper, other.upper) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        DimBound::new(lower, upper).map_err(|_| DimsError::Incompatible {
            left: *self,
            right: *other,
        })
    }

    /// `"= 5"`, `"<= 4"`, `">= 3"`, `"in [2, 3]"`, or `"unbounded"`.
    pub fn relation(&self) -> String {
        match (self.lower, self.upper) {
            (l, Some(u)) if l == u => format!("= {l}"),
            (0, Some(u)) => format!("<= {u}"),
            (l, Some(u)) => format!("in [{l}, {u}]"),
            (0, None) => "unbounded".to_string(),
            (l, None) => format!(">= {l}"),
        }
    }
}

/// `[lower, upper]` with `inf` for a missing upper bound.
impl fmt::Display for DimBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(u) => write!(f, "[{}, {u}]", self.lower),
            None => write!(f, "[{}, inf]", self.lower),
        }
    }
}
