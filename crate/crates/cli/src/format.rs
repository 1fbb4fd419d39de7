use serde_json::Value;

/// `%.12g`-style rendering; values below `tol` in magnitude print as `0`.
pub fn num(x: f64, tol: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x.abs() < tol || x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim(&format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}{:02}", trim(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_owned()
    } else {
        s.to_owned()
    }
}

/// JSON number carrying the same 12 significant digits as [`num`].
pub fn json_num(x: f64, tol: f64) -> Value {
    let rounded: f64 = num(x, tol).parse().unwrap_or(x);
    serde_json::Number::from_f64(rounded).map(Value::Number).unwrap_or(Value::Null)
}

pub fn json_nums<'a>(xs: impl IntoIterator<Item = &'a f64>, tol: f64) -> Value {
    Value::Array(xs.into_iter().map(|&x| json_num(x, tol)).collect())
}
