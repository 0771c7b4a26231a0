use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

/// A non-negative count that may be infinite: unreachable distances, acyclic
/// girth, escaping robbers and stalled forcing processes.
///
/// `Finite(_) < Infinite`, so `min`/`max` behave as on the extended naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(u32),
    Infinite,
}

pub use Extended::{Finite, Infinite};

impl Extended {
    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Finite(v) => Some(v),
            Infinite => None,
        }
    }

    /// Unwraps a finite value; panics on `Infinite`.
    #[track_caller]
    pub fn unwrap(self) -> u32 {
        self.finite().expect("value is infinite")
    }
}

impl From<u32> for Extended {
    fn from(v: u32) -> Self {
        Finite(v)
    }
}

impl Add for Extended {
    type Output = Extended;

    fn add(self, rhs: Extended) -> Extended {
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinite,
        }
    }
}

impl Add<u32> for Extended {
    type Output = Extended;

    fn add(self, rhs: u32) -> Extended {
        self + Finite(rhs)
    }
}

impl PartialEq<u32> for Extended {
    fn eq(&self, other: &u32) -> bool {
        *self == Finite(*other)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(v) => write!(f, "{v}"),
            Infinite => f.write_str("inf"),
        }
    }
}

// Infinity goes over the wire as the string "inf".
impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(v) => serializer.serialize_u32(*v),
            Infinite => serializer.serialize_str("inf"),
        }
    }
}
