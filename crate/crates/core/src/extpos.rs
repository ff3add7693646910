use std::fmt;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A positive integer or `∞`, ordered by divisibility: every `n` divides
/// `∞`, and `∞` divides only itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtPos {
    Finite(u64),
    Infinity,
}

impl ExtPos {
    pub const ONE: ExtPos = ExtPos::Finite(1);

    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            Err(Error::ZeroValue)
        } else {
            Ok(ExtPos::Finite(n))
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtPos::Infinity
    }

    /// `self | other`.
    pub fn divides(self, other: ExtPos) -> bool {
        match (self, other) {
            (_, ExtPos::Infinity) => true,
            (ExtPos::Infinity, ExtPos::Finite(_)) => false,
            (ExtPos::Finite(a), ExtPos::Finite(b)) => b % a == 0,
        }
    }

    pub fn gcd(self, other: ExtPos) -> ExtPos {
        match (self, other) {
            (ExtPos::Infinity, x) | (x, ExtPos::Infinity) => x,
            (ExtPos::Finite(a), ExtPos::Finite(b)) => ExtPos::Finite(gcd(a, b)),
        }
    }

    /// Panics if the least common multiple of two finite values overflows
    /// `u64`.
    pub fn lcm(self, other: ExtPos) -> ExtPos {
        match (self, other) {
            (ExtPos::Infinity, _) | (_, ExtPos::Infinity) => ExtPos::Infinity,
            (ExtPos::Finite(a), ExtPos::Finite(b)) => {
                let l = (a / gcd(a, b))
                    .checked_mul(b)
                    .expect("lcm of cycle function values overflows u64");
                ExtPos::Finite(l)
            }
        }
    }

    /// `self / other` is a prime integer. Requires `other | self`;
    /// `∞ / n` is never prime and `∞ / ∞` counts as 1.
    pub fn quotient_is_prime(self, other: ExtPos) -> bool {
        match (self, other) {
            (ExtPos::Finite(a), ExtPos::Finite(b)) => a % b == 0 && is_prime(a / b),
            _ => false,
        }
    }
}

impl fmt::Display for ExtPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPos::Finite(n) => write!(f, "{n}"),
            ExtPos::Infinity => f.write_str("∞"),
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// JSON form: a positive integer, or the string "inf".
impl Serialize for ExtPos {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtPos::Finite(n) => s.serialize_u64(*n),
            ExtPos::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtPos {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => ExtPos::new(n).map_err(de::Error::custom),
            Raw::Str(s) if s == "inf" => Ok(ExtPos::Infinity),
            Raw::Str(s) => Err(de::Error::custom(format!("expected positive integer or \"inf\", got {s:?}"))),
        }
    }
}
