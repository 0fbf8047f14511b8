//! Validator for the JSON Schema subset used by the files in docs/:
//! type, enum, const, required, properties, additionalProperties, items,
//! minItems, maxItems, minimum, maximum, oneOf.

use serde_json::Value;

pub fn validate(schema: &Value, v: &Value) -> Result<(), String> {
    check(schema, v, "$")
}

fn type_ok(t: &str, v: &Value) -> bool {
    match t {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "integer" => v.is_i64() || v.is_u64(),
        "number" => v.is_number(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        _ => false,
    }
}

fn check(s: &Value, v: &Value, at: &str) -> Result<(), String> {
    let s = match s {
        Value::Bool(true) => return Ok(()),
        Value::Bool(false) => return Err(format!("{at}: not allowed")),
        Value::Object(m) => m,
        _ => return Err(format!("{at}: bad schema")),
    };
    if let Some(t) = s.get("type") {
        let ok = match t {
            Value::String(t) => type_ok(t, v),
            Value::Array(ts) => ts.iter().any(|t| t.as_str().is_some_and(|t| type_ok(t, v))),
            _ => false,
        };
        if !ok {
            return Err(format!("{at}: expected {t}"));
        }
    }
    if let Some(c) = s.get("const") {
        if c != v {
            return Err(format!("{at}: expected {c}"));
        }
    }
    if let Some(Value::Array(e)) = s.get("enum") {
        if !e.contains(v) {
            return Err(format!("{at}: {v} not in enum"));
        }
    }
    if let Some(n) = v.as_f64() {
        if let Some(min) = s.get("minimum").and_then(Value::as_f64) {
            if n < min {
                return Err(format!("{at}: below {min}"));
            }
        }
        if let Some(max) = s.get("maximum").and_then(Value::as_f64) {
            if n > max {
                return Err(format!("{at}: above {max}"));
            }
        }
    }
    if let Value::Array(xs) = v {
        if let Some(n) = s.get("minItems").and_then(Value::as_u64) {
            if (xs.len() as u64) < n {
                return Err(format!("{at}: fewer than {n} items"));
            }
        }
        if let Some(n) = s.get("maxItems").and_then(Value::as_u64) {
            if xs.len() as u64 > n {
                return Err(format!("{at}: more than {n} items"));
            }
        }
        if let Some(item) = s.get("items") {
            for (k, x) in xs.iter().enumerate() {
                check(item, x, &format!("{at}[{k}]"))?;
            }
        }
    }
    if let Value::Object(o) = v {
        if let Some(Value::Array(req)) = s.get("required") {
            for r in req.iter().filter_map(Value::as_str) {
                if !o.contains_key(r) {
                    return Err(format!("{at}: missing {r}"));
                }
            }
        }
        let props = s.get("properties").and_then(Value::as_object);
        for (k, x) in o {
            let here = format!("{at}.{k}");
            match props.and_then(|p| p.get(k)) {
                Some(ps) => check(ps, x, &here)?,
                None => {
                    if let Some(extra) = s.get("additionalProperties") {
                        check(extra, x, &here)?;
                    }
                }
            }
        }
    }
    if let Some(Value::Array(alts)) = s.get("oneOf") {
        let hits = alts.iter().filter(|a| check(a, v, at).is_ok()).count();
        if hits != 1 {
            let why = alts.iter().filter_map(|a| check(a, v, at).err()).next().unwrap_or_default();
            return Err(format!("{at}: matches {hits} of oneOf ({why})"));
        }
    }
    Ok(())
}
