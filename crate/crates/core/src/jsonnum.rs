//! Serialize `BigInt` values as JSON numbers in full decimal. serde_json is
//! built with `arbitrary_precision`, so no magnitude is lost.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serializer;

pub(crate) fn to_number(x: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&x.to_string()).expect("decimal integer literal")
}

pub(crate) fn ser<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&to_number(x), s)
}

pub(crate) fn ser_opt<S: Serializer>(x: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => ser(v, s),
        None => s.serialize_none(),
    }
}
