//! JSON file formats.
//!
//! The matrix encoding used everywhere is
//! `{"nrows": n, "ncols": m, "entries": [[r, c, v], …]}` with 1-based rows
//! and columns and only nonzero entries listed, sorted by (row, column).
//! The value `v` is an integer for ℤ and GF(p), a `"num/den"` string for ℚ,
//! and an ascending coefficient list for ℤ\[T\]. Cartan matrices travel as
//! `{"cartan": [[…]]}`; modules as
//! `{"cartan": [[…]], "weights": [[…], …], "e": [matrix, …], "f": [matrix, …]}`.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use chevalier_core::cartan::CartanMatrix;
use chevalier_core::exact::{int, Gfp, Int, IntPoly, Rat, SparseMat};
use chevalier_core::roots::RootSystem;
use chevalier_core::weights::RepModule;

fn int_value(v: &Int) -> Value {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(n) => json!(n),
        None => json!(v.to_string()),
    }
}

fn entries_json(nrows: usize, ncols: usize, entries: Vec<Value>) -> Value {
    let mut map = Map::new();
    map.insert("nrows".into(), json!(nrows));
    map.insert("ncols".into(), json!(ncols));
    map.insert("entries".into(), Value::Array(entries));
    Value::Object(map)
}

pub fn matrix_int_to_json(m: &SparseMat<Int>) -> Value {
    let entries = m.iter().map(|(r, c, v)| json!([r + 1, c + 1, int_value(v)])).collect();
    entries_json(m.nrows(), m.ncols(), entries)
}

pub fn matrix_rat_to_json(m: &SparseMat<Rat>) -> Value {
    let entries = m
        .iter()
        .map(|(r, c, v)| json!([r + 1, c + 1, format!("{}/{}", v.numer(), v.denom())]))
        .collect();
    entries_json(m.nrows(), m.ncols(), entries)
}

pub fn matrix_poly_to_json(m: &SparseMat<IntPoly>) -> Value {
    let entries = m
        .iter()
        .map(|(r, c, v)| {
            let coeffs: Vec<Value> = v.coeffs().iter().map(int_value).collect();
            json!([r + 1, c + 1, Value::Array(coeffs)])
        })
        .collect();
    entries_json(m.nrows(), m.ncols(), entries)
}

pub fn matrix_gfp_to_json(m: &SparseMat<Gfp>) -> Value {
    let entries = m.iter().map(|(r, c, v)| json!([r + 1, c + 1, v.value()])).collect();
    entries_json(m.nrows(), m.ncols(), entries)
}

pub fn matrix_int_from_json(v: &Value) -> Result<SparseMat<Int>> {
    let nrows = v["nrows"].as_u64().context("matrix needs a numeric \"nrows\"")? as usize;
    let ncols = v["ncols"].as_u64().context("matrix needs a numeric \"ncols\"")? as usize;
    let entries = v["entries"].as_array().context("matrix needs an \"entries\" array")?;
    let mut m = SparseMat::zero(nrows, ncols);
    for e in entries {
        let t = e.as_array().filter(|t| t.len() == 3).context("entry must be [row, col, value]")?;
        let r = t[0].as_u64().context("entry row")? as usize;
        let c = t[1].as_u64().context("entry col")? as usize;
        if r == 0 || c == 0 || r > nrows || c > ncols {
            bail!("entry ({r}, {c}) out of range (1-based)");
        }
        let val = match &t[2] {
            Value::Number(n) => {
                int(n.as_i64().ok_or_else(|| anyhow!("integer entry expected"))?)
            }
            Value::String(s) => s.parse::<Int>().map_err(|_| anyhow!("bad integer {s:?}"))?,
            other => bail!("unsupported matrix entry value {other}"),
        };
        m.set(r - 1, c - 1, val);
    }
    Ok(m)
}

pub fn cartan_to_json(m: &CartanMatrix) -> Value {
    json!({ "cartan": m.rows() })
}

pub fn cartan_from_json(v: &Value) -> Result<CartanMatrix> {
    let rows = v["cartan"].as_array().context("file needs a \"cartan\" array of rows")?;
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.as_array().context("cartan rows must be arrays")?;
        out.push(
            row.iter()
                .map(|x| x.as_i64().context("cartan entries must be integers"))
                .collect::<Result<Vec<i64>>>()?,
        );
    }
    CartanMatrix::validate(&out).map_err(|e| anyhow!("invalid Cartan matrix: {e}"))
}

pub fn roots_to_json(rs: &RootSystem) -> Value {
    let blocks = rs.blocks();
    let highest: Value = if blocks.len() == 1 {
        json!(blocks[0].highest + 1)
    } else {
        json!(blocks.iter().map(|b| b.highest + 1).collect::<Vec<_>>())
    };
    json!({
        "N": rs.num_positive(),
        "roots": rs.roots(),
        "short": rs.short_roots().iter().map(|&r| r + 1).collect::<Vec<_>>(),
        "highest": highest,
    })
}

pub fn module_to_json(m: &RepModule) -> Value {
    let l = m.roots().rank();
    json!({
        "cartan": m.roots().cartan().rows(),
        "weights": m.weights(),
        "e": (0..l).map(|i| matrix_int_to_json(m.rho_e_simple(i))).collect::<Vec<_>>(),
        "f": (0..l).map(|i| matrix_int_to_json(m.rho_f_simple(i))).collect::<Vec<_>>(),
    })
}

pub fn module_from_json(v: &Value) -> Result<RepModule> {
    let cartan = cartan_from_json(v)?;
    let rs = RootSystem::generate(cartan).map_err(|e| anyhow!("{e}"))?;
    let weights: Vec<Vec<i64>> = v["weights"]
        .as_array()
        .context("module needs a \"weights\" array")?
        .iter()
        .map(|w| {
            w.as_array()
                .context("weights must be arrays")?
                .iter()
                .map(|x| x.as_i64().context("weight coordinates must be integers"))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let read_mats = |key: &str| -> Result<Vec<SparseMat<Int>>> {
        v[key]
            .as_array()
            .with_context(|| format!("module needs an {key:?} array of matrices"))?
            .iter()
            .map(matrix_int_from_json)
            .collect()
    };
    let e = read_mats("e")?;
    let f = read_mats("f")?;
    RepModule::from_generators(&rs, weights, e, f).map_err(|e| anyhow!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_roundtrip() {
        let mut m = SparseMat::zero(2, 3);
        m.set(0, 2, int(5));
        m.set(1, 0, int(-7));
        let v = matrix_int_to_json(&m);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"entries":[[1,3,5],[2,1,-7]],"ncols":3,"nrows":2}"#
        );
        assert_eq!(matrix_int_from_json(&v).unwrap(), m);
    }

    #[test]
    fn cartan_file_roundtrip() {
        let m = CartanMatrix::validate(&[vec![2, -1], vec![-3, 2]]).unwrap();
        let v = cartan_to_json(&m);
        assert_eq!(cartan_from_json(&v).unwrap(), m);
        let bad = json!({"cartan": [[2, 1], [1, 2]]});
        assert!(cartan_from_json(&bad).is_err());
    }
}
