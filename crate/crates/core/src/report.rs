//! Serialization helpers shared by the verification reports.

use serde::Serializer;
use std::fmt::Display;

/// Serializes an optional value through its `Display` form.
pub fn display_option<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_some(&x.to_string()),
        None => s.serialize_none(),
    }
}
