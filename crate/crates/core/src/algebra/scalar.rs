//! Field-tagged scalars as they appear on the wire.
//!
//! A rational is the string `"num/den"` (denominator omitted when 1); an
//! element of Q(ζ) is the object `{"a": "num/den", "b": "num/den"}`.

use std::fmt;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::field::{format_rational, parse_rational, Q};
use super::zeta6::Zeta6;
use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Rational,
    Zeta6,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => f.write_str("rational"),
            FieldKind::Zeta6 => f.write_str("zeta6"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Q),
    Zeta6(Zeta6),
}

impl Scalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Rational(_) => FieldKind::Rational,
            Scalar::Zeta6(_) => FieldKind::Zeta6,
        }
    }

    /// Explicit embedding of a rational into Q(ζ); identity on Q(ζ) elements.
    pub fn promote(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Zeta6(Zeta6::from(q.clone())),
            z => z.clone(),
        }
    }
}

/// The common field of a collection of scalars. Empty input defaults to Q.
pub fn common_kind<'a>(
    scalars: impl IntoIterator<Item = &'a Scalar>,
) -> Result<FieldKind, AlgebraError> {
    let mut kind = None;
    for s in scalars {
        match kind {
            None => kind = Some(s.kind()),
            Some(k) if k != s.kind() => return Err(AlgebraError::MixedFields),
            _ => {}
        }
    }
    Ok(kind.unwrap_or(FieldKind::Rational))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => f.write_str(&format_rational(q)),
            Scalar::Zeta6(z) => write!(f, "{z}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rational(q) => serializer.serialize_str(&format_rational(q)),
            Scalar::Zeta6(z) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("a", &format_rational(&z.a))?;
                map.serialize_entry("b", &format_rational(&z.b))?;
                map.end()
            }
        }
    }
}

struct ScalarVisitor;

impl<'de> Visitor<'de> for ScalarVisitor {
    type Value = Scalar;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational string \"num/den\" or an object {\"a\":..,\"b\":..}")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
        parse_rational(v).map(Scalar::Rational).map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
        Ok(Scalar::Rational(Q::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
        Ok(Scalar::Rational(Q::from_integer(v.into())))
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Scalar, A::Error> {
        let mut a = None;
        let mut b = None;
        while let Some(key) = map.next_key::<String>()? {
            let value: String = map.next_value()?;
            let q = parse_rational(&value).map_err(de::Error::custom)?;
            match key.as_str() {
                "a" => a = Some(q),
                "b" => b = Some(q),
                other => return Err(de::Error::unknown_field(other, &["a", "b"])),
            }
        }
        let a = a.ok_or_else(|| de::Error::missing_field("a"))?;
        let b = b.ok_or_else(|| de::Error::missing_field("b"))?;
        Ok(Scalar::Zeta6(Zeta6::new(a, b)))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Scalar, D::Error> {
        deserializer.deserialize_any(ScalarVisitor)
    }
}
