//! JSON class format shared by the CLI and the C ABI:
//!
//! ```json
//! {"space": "Mg1", "genus": 10, "coeffs": {"lambda": "-1", "psi": "55", "delta1": "unknown"}}
//! ```
//!
//! Omitted keys are zero. The literal `"unknown"` marks an unknown
//! coefficient and makes the class partial.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::picard::{
    make_class, AnyClass, Basis, ClassView, Coeff, DivisorClass, PartialDivisorClass,
    PointedDivisorClass, Slope, Space,
};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDoc {
    space: String,
    genus: u32,
    #[serde(default)]
    coeffs: BTreeMap<String, serde_json::Value>,
}

pub fn parse_class(text: &str) -> Result<AnyClass> {
    let doc: ClassDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let space = match doc.space.as_str() {
        "Mg" => Space::Unpointed,
        "Mg1" => Space::Pointed,
        other => {
            return Err(Error::Parse(format!(
                "space must be \"Mg\" or \"Mg1\", got {other:?}"
            )))
        }
    };
    let mut entries = Vec::with_capacity(doc.coeffs.len());
    for (key, value) in doc.coeffs {
        let b = Basis::from_key(&key)
            .ok_or_else(|| Error::Parse(format!("unknown coefficient key {key:?}")))?;
        let coeff = match value {
            serde_json::Value::String(s) if s == "unknown" => Coeff::Unknown,
            serde_json::Value::String(s) => Coeff::Known(s.parse()?),
            serde_json::Value::Number(n) if n.is_i64() => {
                Coeff::Known(n.as_i64().expect("checked").into())
            }
            other => {
                return Err(Error::Parse(format!(
                    "coefficient {key} must be a \"p/q\" string, got {other}"
                )))
            }
        };
        entries.push((b, coeff));
    }
    make_class(space, doc.genus, &entries)
}

pub fn class_to_json(c: &dyn ClassView) -> String {
    serde_json::to_string(&ClassJson(c)).expect("in-memory serialization")
}

pub fn class_to_json_pretty(c: &dyn ClassView) -> String {
    serde_json::to_string_pretty(&ClassJson(c)).expect("in-memory serialization")
}

struct ClassJson<'a>(&'a dyn ClassView);

struct Coeffs<'a>(&'a dyn ClassView);

impl Serialize for Coeffs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for b in crate::picard::basis(self.0.space(), self.0.genus()) {
            match self.0.coefficient(b).expect("basis element is valid") {
                Coeff::Known(r) if r.is_zero() => {}
                Coeff::Known(r) => map.serialize_entry(&b.key(), &r)?,
                Coeff::Unknown => map.serialize_entry(&b.key(), "unknown")?,
            }
        }
        map.end()
    }
}

impl Serialize for ClassJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("space", self.0.space().tag())?;
        map.serialize_entry("genus", &self.0.genus())?;
        map.serialize_entry("coeffs", &Coeffs(self.0))?;
        map.end()
    }
}

macro_rules! serialize_as_class {
    ($($t:ty),*) => {$(
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                ClassJson(self).serialize(s)
            }
        }
    )*};
}
serialize_as_class!(
    DivisorClass,
    PointedDivisorClass,
    PartialDivisorClass,
    AnyClass
);

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
