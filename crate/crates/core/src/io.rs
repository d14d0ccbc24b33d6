//! On-disk formats. Algebra files:
//! `{"field": "Q" | "Fp:<p>", "dim": n, "basis": [labels], "unit": [coords],
//!   "mul": [[[coords]...]...]}` with mul[i][j] the coordinates of e_i*e_j.
//! Hom files: `{"source": path, "target": path, "matrix": [[coords]]}` with
//! a (target_dim x source_dim) matrix; paths resolve relative to the hom
//! file. Coordinates are scalar strings: "n" or "n/d" over Q, "r" or
//! "r mod p" over F_p.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, AlgebraHom};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar};

fn parse_err(context: &str, message: impl Into<String>) -> Error {
    Error::Parse { context: context.into(), message: message.into() }
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(what, "expected an array"))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| parse_err(what, "expected a string"))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(what, format!("missing field {key:?}")))
}

fn coords_from_json(field: FieldSpec, v: &Value, what: &str, dim: usize) -> Result<Vec<Scalar>> {
    let arr = as_array(v, what)?;
    if arr.len() != dim {
        return Err(parse_err(what, format!("expected {dim} coordinates, got {}", arr.len())));
    }
    arr.iter().map(|s| Scalar::parse(field, as_str(s, what)?)).collect()
}

fn coords_to_json(coords: &[Scalar]) -> Value {
    Value::Array(coords.iter().map(|s| Value::String(s.to_string())).collect())
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    let obj = v.as_object().ok_or_else(|| parse_err("algebra", "expected an object"))?;
    let field = FieldSpec::parse_name(as_str(get(obj, "field", "algebra")?, "field")?)?;
    let dim = get(obj, "dim", "algebra")?
        .as_u64()
        .ok_or_else(|| parse_err("dim", "expected a nonnegative integer"))? as usize;
    let basis = as_array(get(obj, "basis", "algebra")?, "basis")?;
    if basis.len() != dim {
        return Err(parse_err("basis", format!("expected {dim} labels, got {}", basis.len())));
    }
    let labels: Vec<String> = basis
        .iter()
        .map(|l| as_str(l, "basis").map(str::to_string))
        .collect::<Result<_>>()?;
    let unit = coords_from_json(field, get(obj, "unit", "algebra")?, "unit", dim)?;
    let mul_rows = as_array(get(obj, "mul", "algebra")?, "mul")?;
    if mul_rows.len() != dim {
        return Err(parse_err("mul", format!("expected {dim} rows, got {}", mul_rows.len())));
    }
    let mut mul = Vec::with_capacity(dim);
    for (i, row) in mul_rows.iter().enumerate() {
        let row = as_array(row, "mul")?;
        if row.len() != dim {
            return Err(parse_err("mul", format!("row {i} has {} entries, expected {dim}", row.len())));
        }
        let mut out_row = Vec::with_capacity(dim);
        for (j, cell) in row.iter().enumerate() {
            out_row.push(coords_from_json(field, cell, &format!("mul[{i}][{j}]"), dim)?);
        }
        mul.push(out_row);
    }
    Algebra::new(field, labels, mul, unit)
}

pub fn algebra_to_json(a: &Algebra) -> Value {
    let mul: Vec<Value> = a
        .mul_table()
        .iter()
        .map(|row| Value::Array(row.iter().map(|c| coords_to_json(c)).collect()))
        .collect();
    json!({
        "field": a.field().to_string(),
        "dim": a.dim(),
        "basis": a.labels(),
        "unit": coords_to_json(a.unit_coords()),
        "mul": mul,
    })
}

pub fn load_algebra(path: &Path) -> Result<Algebra> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        context: path.display().to_string(),
        message: e.to_string(),
    })?;
    algebra_from_json(&value)
}

pub fn save_algebra(a: &Algebra, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&algebra_to_json(a)).expect("serializable");
    std::fs::write(path, text + "\n").map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Loads a homomorphism file; algebra paths resolve relative to `base_dir`.
pub fn hom_from_json(v: &Value, base_dir: &Path) -> Result<AlgebraHom> {
    let obj = v.as_object().ok_or_else(|| parse_err("hom", "expected an object"))?;
    let source_path = base_dir.join(as_str(get(obj, "source", "hom")?, "source")?);
    let target_path = base_dir.join(as_str(get(obj, "target", "hom")?, "target")?);
    let source = load_algebra(&source_path)?;
    let target = load_algebra(&target_path)?;
    let rows = as_array(get(obj, "matrix", "hom")?, "matrix")?;
    if rows.len() != target.dim() {
        return Err(parse_err(
            "matrix",
            format!("expected {} rows, got {}", target.dim(), rows.len()),
        ));
    }
    let field = source.field();
    let mut entries = Vec::with_capacity(target.dim() * source.dim());
    for row in rows {
        let coords = coords_from_json(field, row, "matrix", source.dim())?;
        entries.extend(coords);
    }
    let matrix = Matrix::new(field, target.dim(), source.dim(), entries);
    AlgebraHom::new(source, target, matrix)
}

pub fn load_hom(path: &Path) -> Result<AlgebraHom> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        context: path.display().to_string(),
        message: e.to_string(),
    })?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    hom_from_json(&value, base)
}

/// Is this JSON value shaped like a hom file (rather than an algebra file)?
pub fn looks_like_hom(v: &Value) -> bool {
    v.as_object().is_some_and(|o| o.contains_key("matrix") && o.contains_key("source"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, upper_triangular_algebra};

    #[test]
    fn algebra_round_trip() {
        for a in [
            matrix_algebra(FieldSpec::Rationals, 2),
            upper_triangular_algebra(FieldSpec::Prime(5), 2),
        ] {
            let v = algebra_to_json(&a);
            let b = algebra_from_json(&v).unwrap();
            assert!(a.same_as(&b));
            assert_eq!(a.labels(), b.labels());
            // canonical text is stable under re-serialization
            let text1 = serde_json::to_string_pretty(&v).unwrap();
            let text2 =
                serde_json::to_string_pretty(&algebra_to_json(&b)).unwrap();
            assert_eq!(text1, text2);
        }
    }

    #[test]
    fn malformed_table_is_named() {
        let mut v = algebra_to_json(&matrix_algebra(FieldSpec::Rationals, 2));
        // corrupt e12 * e21 so associativity fails
        v["mul"][1][2] = serde_json::json!(["0", "1", "0", "0"]);
        match algebra_from_json(&v) {
            Err(Error::AssociativityFailure { .. }) | Err(Error::NotUnital { .. }) => {}
            other => panic!("expected a named validation failure, got {other:?}"),
        }
    }

    #[test]
    fn hom_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let s = matrix_algebra(FieldSpec::Rationals, 2);
        save_algebra(&s, &dir.path().join("m2.json")).unwrap();
        let id = serde_json::json!({
            "source": "m2.json",
            "target": "m2.json",
            "matrix": [
                ["1", "0", "0", "0"],
                ["0", "1", "0", "0"],
                ["0", "0", "1", "0"],
                ["0", "0", "0", "1"],
            ],
        });
        std::fs::write(
            dir.path().join("id.json"),
            serde_json::to_string(&id).unwrap(),
        )
        .unwrap();
        let f = load_hom(&dir.path().join("id.json")).unwrap();
        assert_eq!(f.matrix(), &Matrix::identity(FieldSpec::Rationals, 4));
    }
}
