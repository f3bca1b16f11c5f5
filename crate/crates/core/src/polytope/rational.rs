use std::fmt;
use std::ops::{Deref, DerefMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::PolytopeError;

pub type Rational = BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `p` or `p/q` with optional leading `-`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational, PolytopeError> {
    let bad = || PolytopeError::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let valid = |t: &str, signed: bool| {
        let digits = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn is_integral(x: &Rational) -> bool {
    x.is_integer()
}

/// A point of `Q^V`, one coordinate per vertex. Serialises as a JSON array of
/// `"p/q"` strings (integers without the `/q`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalVec(pub Vec<Rational>);

impl RationalVec {
    pub fn zeros(n: usize) -> Self {
        RationalVec(vec![Rational::zero(); n])
    }

    pub fn constant(n: usize, value: Rational) -> Self {
        RationalVec(vec![value; n])
    }

    /// Characteristic vector of a vertex set given as a bitmask.
    pub fn characteristic(n: usize, set: u64) -> Self {
        RationalVec((0..n).map(|v| if set >> v & 1 == 1 { Rational::one() } else { Rational::zero() }).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_integral)
    }

    /// The 0/1 support mask, when every coordinate is 0 or 1.
    pub fn as_zero_one(&self) -> Option<u64> {
        let mut m = 0;
        for (v, x) in self.0.iter().enumerate() {
            if x.is_one() {
                m |= 1 << v;
            } else if !x.is_zero() {
                return None;
            }
        }
        Some(m)
    }

    pub fn dot(&self, other: &[Rational]) -> Rational {
        self.0.iter().zip(other).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, a| acc + a)
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|x| x.is_negative())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|x| x.to_string()).collect()
    }

    pub fn from_json(s: &str) -> Result<Self, PolytopeError> {
        serde_json::from_str(s).map_err(|e| PolytopeError::BadRational(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("rational vectors serialise")
    }
}

impl Deref for RationalVec {
    type Target = Vec<Rational>;

    fn deref(&self) -> &Self::Target {
        &self.0
    }
}

impl DerefMut for RationalVec {
    fn deref_mut(&mut self) -> &mut Self::Target {
        &mut self.0
    }
}

impl fmt::Display for RationalVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for RationalVec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for RationalVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RationalVec;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of \"p/q\" strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<RationalVec, A::Error> {
                let mut out = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    out.push(parse_rational(&s).map_err(de::Error::custom)?);
                }
                Ok(RationalVec(out))
            }
        }
        d.deserialize_seq(V)
    }
}

/// A single rational serialised as a `"p/q"` string, for use inside certificates.
pub mod as_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("2/6").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(rat(-2, 4).to_string(), "-1/2");
        for bad in ["", "1/0", "1/-2", "a", "1/", "/2", "+1", "1 /2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_round_trip() {
        let v = RationalVec(vec![rat(1, 3), int(0), rat(-5, 2), int(7)]);
        let s = v.to_json();
        assert_eq!(s, r#"["1/3","0","-5/2","7"]"#);
        assert_eq!(RationalVec::from_json(&s).unwrap(), v);
        assert!(RationalVec::from_json(r#"["1/0"]"#).is_err());
        assert!(RationalVec::from_json(r#"[1]"#).is_err());
    }

    #[test]
    fn zero_one_support() {
        let v = RationalVec::characteristic(4, 0b1010);
        assert_eq!(v.as_zero_one(), Some(0b1010));
        assert_eq!(RationalVec::constant(3, rat(1, 3)).as_zero_one(), None);
    }
}
