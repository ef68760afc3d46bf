use serde_json::{Number, Value};

const SIGNIFICANT_DIGITS: usize = 12;
const ZERO_SNAP: f64 = 1e-9;
const MAX_EXACT_INTEGER: f64 = 9_007_199_254_740_992.0;

/// Rounds to 12 significant digits, snaps `|x| < 1e-9` (and `-0`) to zero.
pub fn round_float(x: f64) -> f64 {
    if !x.is_finite() || x.abs() < ZERO_SNAP {
        return if x.is_finite() { 0.0 } else { x };
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x);
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

/// Rewrites every float in `v` through [`round_float`]; integral results are
/// written without a fractional part and non-finite values become `null`.
pub fn canonicalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_float(n.as_f64().unwrap_or(f64::NAN));
            if x.fract() == 0.0 && x.abs() < MAX_EXACT_INTEGER {
                Value::from(x as i64)
            } else {
                Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
            }
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, canonicalize(v))).collect()),
        other => other,
    }
}

/// Pretty-printed JSON with sorted keys (serde_json's default map is ordered).
pub fn render(v: Value) -> String {
    serde_json::to_string_pretty(&canonicalize(v)).expect("JSON values always serialize")
}
