//! Ring descriptors and the canonical element encoding.
//!
//! Descriptors form a finite tree and serialize to JSON with a `kind` tag:
//!
//! ```json
//! {"kind":"quotient_int","modulus":12}
//! {"kind":"poly_quotient","p":2,"modulus_poly":[1,1,1]}
//! {"kind":"product","factors":[...]}
//! {"kind":"quotient","base":...,"ideal_gens":[6]}
//! {"kind":"localization","base":...,"prime":1}
//! {"kind":"semilocal_int","primes":[2,3]}
//! ```
//!
//! Elements of finite rings serialize as plain integers (their canonical
//! index), elements of localized integer rings as `{"num":n,"den":d}`, and
//! elements of products with an infinite factor as arrays of components.

use std::fmt;

use serde::de::{self, Deserializer, MapAccess, SeqAccess, Visitor};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDescriptor {
    /// The ring of integers modulo `modulus`, `modulus >= 2`.
    QuotientInt { modulus: u64 },
    /// `F_p[x]` modulo a monic polynomial, coefficients little-endian in `[0,p)`.
    PolyQuotient { p: u64, modulus_poly: Vec<u64> },
    /// Direct product; the first factor is the most significant in the
    /// mixed-radix index encoding.
    Product { factors: Vec<RingDescriptor> },
    /// Quotient of `base` by the ideal generated by `ideal_gens`.
    Quotient {
        base: Box<RingDescriptor>,
        ideal_gens: Vec<RingElement>,
    },
    /// Localization of `base` at the prime with the given canonical id.
    Localization {
        base: Box<RingDescriptor>,
        prime: usize,
    },
    /// Integers localized away from a nonempty set of distinct primes:
    /// denominators are coprime to every listed prime.
    SemilocalInt { primes: Vec<u64> },
}

impl RingDescriptor {
    /// Validates the descriptor tree, naming the offending field on failure.
    pub fn validate(&self) -> Result<()> {
        self.validate_at("")
    }

    fn validate_at(&self, path: &str) -> Result<()> {
        let field = |name: &str| {
            if path.is_empty() {
                name.to_string()
            } else {
                format!("{path}.{name}")
            }
        };
        match self {
            RingDescriptor::QuotientInt { modulus } => {
                if *modulus < 2 {
                    return Err(Error::Descriptor(format!(
                        "{}: modulus must be >= 2, got {modulus}",
                        field("modulus")
                    )));
                }
            }
            RingDescriptor::PolyQuotient { p, modulus_poly } => {
                if !is_prime(*p) {
                    return Err(Error::Descriptor(format!(
                        "{}: p must be prime, got {p}",
                        field("p")
                    )));
                }
                if modulus_poly.len() < 2 {
                    return Err(Error::Descriptor(format!(
                        "{}: modulus must have degree >= 1",
                        field("modulus_poly")
                    )));
                }
                if *modulus_poly.last().unwrap() != 1 {
                    return Err(Error::Descriptor(format!(
                        "{}: modulus must be monic",
                        field("modulus_poly")
                    )));
                }
                if modulus_poly.iter().any(|c| c >= p) {
                    return Err(Error::Descriptor(format!(
                        "{}: coefficients must lie in [0,{p})",
                        field("modulus_poly")
                    )));
                }
            }
            RingDescriptor::Product { factors } => {
                if factors.is_empty() {
                    return Err(Error::Descriptor(format!(
                        "{}: product needs at least one factor",
                        field("factors")
                    )));
                }
                for (i, f) in factors.iter().enumerate() {
                    f.validate_at(&field(&format!("factors[{i}]")))?;
                }
            }
            RingDescriptor::Quotient { base, .. } => {
                base.validate_at(&field("base"))?;
                // generator membership is checked against the built base ring
            }
            RingDescriptor::Localization { base, .. } => {
                base.validate_at(&field("base"))?;
            }
            RingDescriptor::SemilocalInt { primes } => {
                if primes.is_empty() {
                    return Err(Error::Descriptor(format!(
                        "{}: prime set must be nonempty",
                        field("primes")
                    )));
                }
                for q in primes {
                    if !is_prime(*q) {
                        return Err(Error::Descriptor(format!(
                            "{}: {q} is not prime",
                            field("primes")
                        )));
                    }
                }
                let mut sorted = primes.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != primes.len() {
                    return Err(Error::Descriptor(format!(
                        "{}: primes must be distinct",
                        field("primes")
                    )));
                }
            }
        }
        Ok(())
    }

    /// Short human label, e.g. `Z/6`, `F2[x]/(1+x+x^2)`, `Z/2 x Z/3`.
    pub fn label(&self) -> String {
        match self {
            RingDescriptor::QuotientInt { modulus } => format!("Z/{modulus}"),
            RingDescriptor::PolyQuotient { p, modulus_poly } => {
                format!("F{p}[x]/({})", poly_label(modulus_poly))
            }
            RingDescriptor::Product { factors } => factors
                .iter()
                .map(|f| f.label())
                .collect::<Vec<_>>()
                .join(" x "),
            RingDescriptor::Quotient { base, ideal_gens } => {
                let gens = ideal_gens
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("({})/({gens})", base.label())
            }
            RingDescriptor::Localization { base, prime } => {
                format!("({}) at prime #{prime}", base.label())
            }
            RingDescriptor::SemilocalInt { primes } => {
                let ps = primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("Z_({ps})")
            }
        }
    }
}

fn poly_label(coeffs: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let part = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        };
        parts.push(part);
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A ring element in its canonical encoding.
///
/// Finite rings use `Int` (the index in `[0, |A|)`), localized integer rings
/// use reduced fractions with positive denominator, and products with an
/// infinite factor use per-factor tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    Int(u64),
    Frac { num: i64, den: i64 },
    Tuple(Vec<RingElement>),
}

impl RingElement {
    pub fn as_index(&self) -> Result<u64> {
        match self {
            RingElement::Int(i) => Ok(*i),
            other => Err(Error::Encoding(format!(
                "expected a finite-ring index, got {other}"
            ))),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(i) => write!(f, "{i}"),
            RingElement::Frac { num, den } => {
                if *den == 1 {
                    write!(f, "{num}")
                } else {
                    write!(f, "{num}/{den}")
                }
            }
            RingElement::Tuple(parts) => {
                write!(f, "(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl From<u64> for RingElement {
    fn from(i: u64) -> Self {
        RingElement::Int(i)
    }
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            RingElement::Int(i) => serializer.serialize_u64(*i),
            RingElement::Frac { num, den } => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("num", num)?;
                map.serialize_entry("den", den)?;
                map.end()
            }
            RingElement::Tuple(parts) => {
                let mut seq = serializer.serialize_seq(Some(parts.len()))?;
                for p in parts {
                    seq.serialize_element(p)?;
                }
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ElementVisitor;

        impl<'de> Visitor<'de> for ElementVisitor {
            type Value = RingElement;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer, a {num,den} object, or an array of elements")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RingElement, E> {
                Ok(RingElement::Int(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RingElement, E> {
                if v >= 0 {
                    Ok(RingElement::Int(v as u64))
                } else {
                    Err(E::custom("finite-ring indices must be nonnegative"))
                }
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<RingElement, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element()? {
                    parts.push(p);
                }
                Ok(RingElement::Tuple(parts))
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<RingElement, A::Error> {
                let mut num: Option<i64> = None;
                let mut den: Option<i64> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "num" => num = Some(map.next_value()?),
                        "den" => den = Some(map.next_value()?),
                        other => return Err(de::Error::unknown_field(other, &["num", "den"])),
                    }
                }
                let num = num.ok_or_else(|| de::Error::missing_field("num"))?;
                let den = den.ok_or_else(|| de::Error::missing_field("den"))?;
                Ok(RingElement::Frac { num, den })
            }
        }

        deserializer.deserialize_any(ElementVisitor)
    }
}
