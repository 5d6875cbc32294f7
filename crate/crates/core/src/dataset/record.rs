use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::aut::{classify_xi, AutLabel};
use crate::invariants::{absolute_invariants, j6_from_xi, xi_explicit_int, AbsoluteInvariants, XiTuple};
use crate::rational::Q;
use crate::tables;
use crate::weighted::{normalize_weighted, weighted_height_of, WeightedPoint};
use crate::{Error, Result};

use super::naive_height;

/// One database row.
///
/// `weighted_height` is taken over the raw invariant tuple `xi_raw`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatasetRecord {
    pub coeffs: [i64; 8],
    #[serde(rename = "h")]
    pub naive_height: u32,
    #[serde(rename = "xi")]
    pub xi_raw: XiTuple,
    #[serde(rename = "xi_norm")]
    pub xi_normalized: WeightedPoint,
    #[serde(rename = "wheight")]
    pub weighted_height: f64,
    #[serde(with = "crate::rational::serde_q")]
    pub i6: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub j6: Q,
    #[serde(rename = "aut")]
    pub aut_label: AutLabel,
    #[serde(rename = "abs")]
    pub abs_invariants: AbsoluteInvariants,
}

pub fn build_record(coeffs: [i64; 8]) -> Result<DatasetRecord> {
    let g = coeffs.iter().fold(0i64, |g, v| g.gcd(v));
    if g != 1 {
        return Err(Error::NotPrimitive(g));
    }
    let i6 = tables::eval_i64(&tables::I6, &coeffs);
    if i6.is_zero() {
        return Err(Error::NotARationalMap);
    }
    let xi = xi_explicit_int(&coeffs);
    let j6 = j6_from_xi(&xi);
    let aut_label = classify_xi(&xi, &i6);
    let xi_normalized = normalize_weighted(&xi)?;
    let abs_invariants = absolute_invariants(&xi, &i6)?;
    Ok(DatasetRecord {
        coeffs,
        naive_height: naive_height(&coeffs),
        weighted_height: weighted_height_of(&xi),
        xi_raw: xi,
        xi_normalized,
        i6,
        j6,
        aut_label,
        abs_invariants,
    })
}

const FIELDS: [&str; 9] = ["coeffs", "h", "xi", "xi_norm", "wheight", "i6", "j6", "aut", "abs"];

fn field<T: serde::de::DeserializeOwned>(obj: &mut Map<String, Value>, name: &str) -> std::result::Result<T, String> {
    let v = obj.remove(name).ok_or_else(|| format!("missing field `{name}`"))?;
    serde_json::from_value(v).map_err(|e| format!("field `{name}`: {e}"))
}

#[derive(Deserialize)]
#[serde(transparent)]
struct QField(#[serde(with = "crate::rational::serde_q")] Q);

/// Parses one JSON object, naming the offending field on failure.
pub fn record_from_json(line: &str) -> std::result::Result<DatasetRecord, String> {
    let v: Value = serde_json::from_str(line).map_err(|e| format!("invalid JSON: {e}"))?;
    let Value::Object(mut obj) = v else {
        return Err("expected a JSON object".to_string());
    };
    let rec = DatasetRecord {
        coeffs: field(&mut obj, "coeffs")?,
        naive_height: field(&mut obj, "h")?,
        xi_raw: field(&mut obj, "xi")?,
        xi_normalized: field(&mut obj, "xi_norm")?,
        weighted_height: field(&mut obj, "wheight")?,
        i6: field::<QField>(&mut obj, "i6")?.0,
        j6: field::<QField>(&mut obj, "j6")?.0,
        aut_label: field(&mut obj, "aut")?,
        abs_invariants: field(&mut obj, "abs")?,
    };
    if let Some(k) = obj.keys().next() {
        return Err(format!("unknown field `{k}` (expected one of {FIELDS:?})"));
    }
    Ok(rec)
}

impl DatasetRecord {
    pub fn xi(&self) -> &XiTuple {
        &self.xi_raw
    }
}
