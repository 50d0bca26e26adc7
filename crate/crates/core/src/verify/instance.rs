use std::collections::BTreeMap;

use serde_json::{json, Map, Value as Json};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Subspace, Vector};

/// One named input of a check instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Element(Element),
    Subspace(Subspace),
    Subspaces(Vec<Subspace>),
}

/// Named inputs of one instance of a quantified statement. Serializes to a
/// JSON object keyed by name, e.g. `{"L": {"subspace": [[1,0,0,1]]}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Instance(BTreeMap<String, Value>);

fn rows(s: &Subspace) -> Json {
    json!(s.rows())
}

impl Instance {
    pub fn new() -> Self {
        Instance::default()
    }

    pub fn with(mut self, name: &str, value: Value) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    fn get(&self, name: &str) -> Result<&Value> {
        self.0
            .get(name)
            .ok_or_else(|| Error::InvalidParameter(format!("instance has no {name:?}")))
    }

    fn wrong(name: &str, what: &str) -> Error {
        Error::InvalidParameter(format!("instance field {name:?} is not {what}"))
    }

    pub fn int(&self, name: &str) -> Result<i64> {
        match self.get(name)? {
            Value::Int(v) => Ok(*v),
            _ => Err(Self::wrong(name, "an integer")),
        }
    }

    pub fn usize(&self, name: &str) -> Result<usize> {
        usize::try_from(self.int(name)?).map_err(|_| Self::wrong(name, "a nonnegative integer"))
    }

    pub fn element(&self, name: &str) -> Result<&Element> {
        match self.get(name)? {
            Value::Element(v) => Ok(v),
            _ => Err(Self::wrong(name, "an element")),
        }
    }

    pub fn subspace(&self, name: &str) -> Result<&Subspace> {
        match self.get(name)? {
            Value::Subspace(v) => Ok(v),
            _ => Err(Self::wrong(name, "a subspace")),
        }
    }

    pub fn subspaces(&self, name: &str) -> Result<&[Subspace]> {
        match self.get(name)? {
            Value::Subspaces(v) if !v.is_empty() => Ok(v),
            _ => Err(Self::wrong(name, "a nonempty subspace list")),
        }
    }

    pub fn to_json(&self) -> Json {
        let mut out = Map::new();
        for (name, value) in &self.0 {
            let v = match value {
                Value::Int(i) => json!({ "int": i }),
                Value::Element(e) => json!({ "element": e.coords() }),
                Value::Subspace(s) => json!({ "subspace": rows(s) }),
                Value::Subspaces(list) => {
                    json!({ "subspaces": list.iter().map(rows).collect::<Vec<_>>() })
                }
            };
            out.insert(name.clone(), v);
        }
        Json::Object(out)
    }

    /// Parses the form written by [`Instance::to_json`], validating every
    /// coordinate against the algebra.
    pub fn from_json(alg: &Algebra, json: &Json) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("instance: {msg}"));
        let obj = json.as_object().ok_or_else(|| bad("expected an object"))?;
        let mut out = Instance::new();
        for (name, tagged) in obj {
            let tagged = tagged
                .as_object()
                .ok_or_else(|| bad("expected a tagged value"))?;
            let (tag, body) = tagged.iter().next().ok_or_else(|| bad("empty value"))?;
            let value = match tag.as_str() {
                "int" => Value::Int(body.as_i64().ok_or_else(|| bad("expected an integer"))?),
                "element" => Value::Element(parse_vector(alg, body)?),
                "subspace" => Value::Subspace(parse_subspace(alg, body)?),
                "subspaces" => Value::Subspaces(
                    body.as_array()
                        .ok_or_else(|| bad("expected a list"))?
                        .iter()
                        .map(|s| parse_subspace(alg, s))
                        .collect::<Result<_>>()?,
                ),
                other => return Err(bad(&format!("unknown tag {other:?}"))),
            };
            out.0.insert(name.clone(), value);
        }
        Ok(out)
    }
}

fn parse_vector(alg: &Algebra, json: &Json) -> Result<Vector> {
    let coords: Vec<u32> = serde_json::from_value(json.clone())
        .map_err(|e| Error::Parse(format!("instance coordinates: {e}")))?;
    let v = Vector::new(alg.field(), coords)?;
    alg.check_element(&v)?;
    Ok(v)
}

fn parse_subspace(alg: &Algebra, json: &Json) -> Result<Subspace> {
    let rows = json
        .as_array()
        .ok_or_else(|| Error::Parse("instance: expected a row list".into()))?;
    let vs: Vec<Vector> = rows
        .iter()
        .map(|r| parse_vector(alg, r))
        .collect::<Result<_>>()?;
    Ok(Subspace::spanned_by(alg.field(), alg.dim(), &vs))
}
