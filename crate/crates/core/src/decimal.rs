//! `BigUint` as a JSON decimal string, so consumers limited to 64-bit
//! numbers never lose digits.

use num_bigint::BigUint;
use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    let raw = String::deserialize(d)?;
    raw.parse()
        .map_err(|e| D::Error::custom(format!("bad decimal {raw:?}: {e}")))
}
