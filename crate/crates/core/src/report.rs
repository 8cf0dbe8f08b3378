//! Serde shapes for exact numbers: rationals as `{"num", "den"}` strings,
//! big integers as decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Count, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactRational {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for ExactRational {
    fn from(r: &Rational) -> Self {
        ExactRational {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl ExactRational {
    pub fn to_rational(&self) -> Result<Rational, String> {
        let num: BigInt = self.num.parse().map_err(|_| format!("bad numerator `{}`", self.num))?;
        let den: BigInt = self.den.parse().map_err(|_| format!("bad denominator `{}`", self.den))?;
        if den == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(Rational::new(num, den))
    }
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        ExactRational::from(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        ExactRational::deserialize(d)?
            .to_rational()
            .map_err(serde::de::Error::custom)
    }
}

pub mod count {
    use super::*;

    pub fn serialize<S: Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&c.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Count, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| serde::de::Error::custom(format!("bad count `{s}`")))
    }
}

pub mod counts {
    use super::*;

    pub fn serialize<S: Serializer>(c: &[Count], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(c.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Count>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(|_| serde::de::Error::custom(format!("bad count `{s}`"))))
            .collect()
    }
}

/// Tournaments as TRN/1 text.
pub mod trn {
    use super::*;
    use crate::digraph::Tournament;
    use crate::format::{parse_trn, write_trn};

    pub fn serialize<S: Serializer>(t: &Tournament, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&write_trn(t))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Tournament, D::Error> {
        parse_trn(&String::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Wrap {
        #[serde(with = "rational")]
        r: Rational,
        #[serde(with = "count")]
        c: Count,
    }

    #[test]
    fn exact_round_trip() {
        let w = Wrap {
            r: Rational::new(6.into(), (-8).into()),
            c: Count::from(u128::MAX) * 3u32,
        };
        let s = serde_json::to_string(&w).unwrap();
        assert!(s.contains(r#""num":"-3","den":"4""#), "{s}");
        assert_eq!(serde_json::from_str::<Wrap>(&s).unwrap(), w);
    }
}
