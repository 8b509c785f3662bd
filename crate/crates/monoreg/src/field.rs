use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field for homology computations: the rationals, or a prime
/// field GF(p) with odd `p < 2^31` so products fit comfortably in 64 bits.
///
/// Serializes as the compact label also used on the command line:
/// `"q"` for the rationals, `"p:32003"` for GF(32003).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

/// Default characteristic, a prime traditional in computer algebra systems.
pub const DEFAULT_PRIME: u64 = 32003;

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// GF(p) after validating that `p` is an odd prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 3 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn default_prime() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }

    /// The field used to cross-check this one: the default prime field for
    /// the rationals, and the rationals for any prime field.
    pub fn cross_check_partner(&self) -> FieldSpec {
        match self {
            FieldSpec::Rationals => FieldSpec::default_prime(),
            FieldSpec::Prime(_) => FieldSpec::Rationals,
        }
    }

    /// Parses the compact label: `q` | `Q` | `p:<prime>`.
    pub fn parse_label(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(num) = t.strip_prefix("p:") {
            let p: u64 = num
                .parse()
                .map_err(|_| Error::Precondition(format!("unreadable characteristic {num:?}")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::Precondition(format!(
            "field must be `q` or `p:<prime>`, got {t:?}"
        )))
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "q".to_string(),
            FieldSpec::Prime(p) => format!("p:{p}"),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::default_prime()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.label())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = FieldSpec;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a field label like `q` or `p:32003`")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<FieldSpec, E> {
                FieldSpec::parse_label(v).map_err(E::custom)
            }
        }
        deserializer.deserialize_str(V)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(32003).is_ok());
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(32004).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(1 << 31).is_err());
        assert!(FieldSpec::prime((1 << 31) - 1).is_ok(), "2^31 - 1 is a Mersenne prime");
    }

    #[test]
    fn labels_round_trip() {
        for f in [FieldSpec::Rationals, FieldSpec::default_prime(), FieldSpec::prime(5).unwrap()] {
            assert_eq!(FieldSpec::parse_label(&f.label()).unwrap(), f);
        }
        assert_eq!(FieldSpec::parse_label("Q").unwrap(), FieldSpec::Rationals);
        assert!(FieldSpec::parse_label("gf64").is_err());
        assert!(FieldSpec::parse_label("p:15").is_err());
    }

    #[test]
    fn serde_uses_labels() {
        let f = FieldSpec::default_prime();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "\"p:32003\"");
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        let q: FieldSpec = serde_json::from_str("\"q\"").unwrap();
        assert_eq!(q, FieldSpec::Rationals);
    }

    #[test]
    fn cross_check_partner_swaps() {
        assert_eq!(FieldSpec::Rationals.cross_check_partner(), FieldSpec::default_prime());
        assert_eq!(
            FieldSpec::prime(101).unwrap().cross_check_partner(),
            FieldSpec::Rationals
        );
    }
}
