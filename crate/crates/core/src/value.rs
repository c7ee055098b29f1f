use std::cmp::Ordering;
use std::fmt;

/// Result of a domination-type invariant or a distance: a finite
/// non-negative integer, or infinity.
///
/// Infinity appears for distances in disconnected graphs and for the
/// value of an edge-removal whose edge is incident with a degree-1 vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomValue {
    Finite(u32),
    Infinite,
}

impl DomValue {
    pub fn finite(self) -> Option<u32> {
        match self {
            DomValue::Finite(v) => Some(v),
            DomValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, DomValue::Infinite)
    }

    /// `self - other` as a signed difference; `None` if either side is infinite.
    pub fn diff(self, other: DomValue) -> Option<i64> {
        Some(self.finite()? as i64 - other.finite()? as i64)
    }
}

impl From<u32> for DomValue {
    fn from(v: u32) -> Self {
        DomValue::Finite(v)
    }
}

impl PartialOrd for DomValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DomValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DomValue::Finite(a), DomValue::Finite(b)) => a.cmp(b),
            (DomValue::Finite(_), DomValue::Infinite) => Ordering::Less,
            (DomValue::Infinite, DomValue::Finite(_)) => Ordering::Greater,
            (DomValue::Infinite, DomValue::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for DomValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomValue::Finite(v) => write!(f, "{v}"),
            DomValue::Infinite => f.write_str("inf"),
        }
    }
}
