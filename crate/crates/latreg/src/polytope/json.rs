use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use super::Polytope;
use crate::error::{Error, Result};
use crate::exactalg::AffineMap;

/// Exact JSON representation of an integer; the `arbitrary_precision`
/// feature keeps coordinates of any size intact.
pub(crate) fn int_value(x: &BigInt) -> Value {
    let n: Number =
        serde_json::from_str(&x.to_string()).expect("integer strings parse as JSON numbers");
    Value::Number(n)
}

fn coord(v: &Value) -> Result<BigInt> {
    let Value::Number(n) = v else {
        return Err(Error::Argument(format!("vertex coordinate {v} is not an integer")));
    };
    BigInt::from_str(&n.to_string())
        .map_err(|_| Error::Argument(format!("vertex coordinate {n} is not an integer")))
}

/// Parse `{"ambient_dim": n, "vertices": [[..], ..]}` into a polytope.
/// Coordinates must be integers (arbitrary size); every vertex must have
/// exactly `ambient_dim` entries and `ambient_dim` must be at least 1.
pub fn polytope_from_json(text: &str) -> Result<Polytope> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Argument("expected a JSON object".into()))?;
    let ambient = obj
        .get("ambient_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Argument("\"ambient_dim\" must be a positive integer".into()))?;
    if ambient == 0 {
        return Err(Error::Argument("\"ambient_dim\" must be at least 1".into()));
    }
    let ambient = usize::try_from(ambient)
        .map_err(|_| Error::Argument("\"ambient_dim\" is out of range".into()))?;
    let rows = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Argument("\"vertices\" must be an array".into()))?;
    let mut vertices = Vec::with_capacity(rows.len());
    for row in rows {
        let entries = row
            .as_array()
            .ok_or_else(|| Error::Argument("each vertex must be an array".into()))?;
        vertices.push(entries.iter().map(coord).collect::<Result<Vec<BigInt>>>()?);
    }
    Polytope::from_vertices(ambient, vertices)
}

pub fn polytope_to_json(p: &Polytope) -> Value {
    let mut obj = Map::new();
    obj.insert("ambient_dim".into(), Value::Number(Number::from(p.ambient_dim() as u64)));
    obj.insert(
        "vertices".into(),
        Value::Array(
            p.vertices()
                .iter()
                .map(|v| Value::Array(v.iter().map(int_value).collect()))
                .collect(),
        ),
    );
    Value::Object(obj)
}

/// `{"linear": [[..], ..], "translation": [..]}` for a lattice-affine map;
/// `linear` is row-major.
pub fn lattice_map_json(map: &AffineMap) -> Value {
    let (linear, translation) =
        map.to_lattice_parts().expect("emitted maps are lattice-affine");
    let rows = linear.to_rows();
    let mut obj = Map::new();
    obj.insert(
        "linear".into(),
        Value::Array(
            rows.iter()
                .map(|r| Value::Array(r.iter().map(int_value).collect()))
                .collect(),
        ),
    );
    obj.insert(
        "translation".into(),
        Value::Array(translation.iter().map(int_value).collect()),
    );
    Value::Object(obj)
}
