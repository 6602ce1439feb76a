//! Numbers are written with 17 significant digits so every printed value
//! parses back to the same binary64.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

pub fn format(x: f64) -> String {
    format!("{x:.16e}")
}

/// A float that serializes in [`format`] notation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return serializer.serialize_none();
        }
        let raw = RawValue::from_string(format(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

pub fn nums(xs: &[f64]) -> Vec<Num> {
    xs.iter().copied().map(Num).collect()
}
