//! Cell records and their CSV/JSON rendering.
//!
//! All numeric output goes through two formatters: `fmt_sig12` (12 significant
//! digits, scientific once |decimal exponent| >= 6) for computed quantities,
//! and `fmt_input` (shortest form) for the state parameters. Both are
//! idempotent under parse-and-reformat, which is what makes the emitted JSON
//! round-trip byte-identical.

use hydromoments::Space;

/// One output row: a single expectation value with optional reference.
#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub n: u32,
    pub l: u32,
    pub d: u32,
    pub z: f64,
    /// `None` is the logarithmic moment (serialized as `"log"`).
    pub alpha: Option<f64>,
    pub space: Space,
    /// One of `exact`, `closedForm`, `largeD`, `rydberg`, `oracle`.
    pub method: &'static str,
    pub value: CellValue,
    pub reference: Option<f64>,
    pub rel_deviation: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CellValue {
    Float(f64),
    /// Pre-rendered exact rational, e.g. `1375/2`.
    Exact(String),
}

pub const CSV_HEADER: &str = "n,l,D,Z,alpha,space,method,value,reference,rel_deviation";

/// `sig` significant digits; scientific notation once |decimal exponent| >= 6.
/// The fixed-point form is rebuilt from the rounded scientific digits, so the
/// exponent decision and the digits always agree (9.99999...e5 rounds into
/// "1.0e6" territory, never into a 13-digit fixed string), which keeps the
/// formatter idempotent under parse-and-reformat.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", sig - 1, v);
    let epos = sci.find('e').expect("{:e} always contains an exponent");
    let exp: i32 = sci[epos + 1..].parse().expect("{:e} exponent is an integer");
    if exp.abs() >= 6 {
        return sci;
    }
    let mantissa = &sci[..epos];
    let (sign, digits_part) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let digits: String = digits_part.chars().filter(|c| *c != '.').collect();
    let mut out = String::from(sign);
    if exp >= 0 {
        let int_len = (exp + 1) as usize;
        if int_len >= digits.len() {
            out.push_str(&digits);
            out.push_str(&"0".repeat(int_len - digits.len()));
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    } else {
        out.push_str("0.");
        out.push_str(&"0".repeat((-exp - 1) as usize));
        out.push_str(&digits);
    }
    out
}

pub fn fmt_sig12(v: f64) -> String {
    fmt_sig(v, 12)
}

/// Shortest stable form for state parameters (Z, alpha): integers without a
/// fraction part, everything else in the default shortest representation.
pub fn fmt_input(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{}", v as i64)
    } else {
        format!("{v}")
    }
}

fn json_str(s: &str) -> String {
    serde_json::Value::String(s.to_string()).to_string()
}

pub fn space_str(space: Space) -> &'static str {
    match space {
        Space::Position => "position",
        Space::Momentum => "momentum",
    }
}

impl Cell {
    fn alpha_text(&self) -> String {
        match self.alpha {
            Some(a) => fmt_input(a),
            None => "log".to_string(),
        }
    }

    pub fn to_csv_row(&self) -> String {
        let value = match &self.value {
            CellValue::Float(v) => fmt_sig12(*v),
            CellValue::Exact(s) => s.clone(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.l,
            self.d,
            fmt_input(self.z),
            self.alpha_text(),
            space_str(self.space),
            self.method,
            value,
            self.reference.map(fmt_sig12).unwrap_or_default(),
            self.rel_deviation.map(fmt_sig12).unwrap_or_default(),
        )
    }

    pub fn to_json(&self) -> String {
        let alpha = match self.alpha {
            Some(a) => fmt_input(a),
            None => json_str("log"),
        };
        let value = match &self.value {
            CellValue::Float(v) => fmt_sig12(*v),
            CellValue::Exact(s) => json_str(s),
        };
        let opt = |o: Option<f64>| o.map(fmt_sig12).unwrap_or_else(|| "null".to_string());
        format!(
            "{{\"n\":{},\"l\":{},\"d\":{},\"z\":{},\"alpha\":{},\"space\":{},\"method\":{},\"value\":{},\"reference\":{},\"rel_deviation\":{}}}",
            self.n,
            self.l,
            self.d,
            fmt_input(self.z),
            alpha,
            json_str(space_str(self.space)),
            json_str(self.method),
            value,
            opt(self.reference),
            opt(self.rel_deviation),
        )
    }

    /// Inverse of `to_json`, for the round-trip guarantee.
    pub fn from_json(v: &serde_json::Value) -> Result<Cell, String> {
        let obj = v.as_object().ok_or("record is not an object")?;
        let uint = |k: &str| -> Result<u32, String> {
            obj.get(k)
                .and_then(|x| x.as_u64())
                .map(|x| x as u32)
                .ok_or_else(|| format!("field {k} missing or not an unsigned integer"))
        };
        let float = |k: &str| -> Result<f64, String> {
            obj.get(k).and_then(|x| x.as_f64()).ok_or_else(|| format!("field {k} missing"))
        };
        let alpha = match obj.get("alpha") {
            Some(serde_json::Value::String(s)) if s == "log" => None,
            Some(x) => Some(x.as_f64().ok_or("alpha is neither a number nor \"log\"")?),
            None => return Err("field alpha missing".to_string()),
        };
        let space = match obj.get("space").and_then(|x| x.as_str()) {
            Some("position") => Space::Position,
            Some("momentum") => Space::Momentum,
            _ => return Err("field space invalid".to_string()),
        };
        let method = match obj.get("method").and_then(|x| x.as_str()) {
            Some("exact") => "exact",
            Some("closedForm") => "closedForm",
            Some("largeD") => "largeD",
            Some("rydberg") => "rydberg",
            Some("oracle") => "oracle",
            _ => return Err("field method invalid".to_string()),
        };
        let value = match obj.get("value") {
            Some(serde_json::Value::String(s)) => CellValue::Exact(s.clone()),
            Some(x) => CellValue::Float(x.as_f64().ok_or("value is not a number")?),
            None => return Err("field value missing".to_string()),
        };
        let opt = |k: &str| -> Result<Option<f64>, String> {
            match obj.get(k) {
                None | Some(serde_json::Value::Null) => Ok(None),
                Some(x) => Ok(Some(x.as_f64().ok_or_else(|| format!("field {k} invalid"))?)),
            }
        };
        Ok(Cell {
            n: uint("n")?,
            l: uint("l")?,
            d: uint("d")?,
            z: float("z")?,
            alpha,
            space,
            method,
            value,
            reference: opt("reference")?,
            rel_deviation: opt("rel_deviation")?,
        })
    }
}

/// Deterministic output order: (n, l, D, alpha, space, method), with the
/// logarithmic moment sorted before any power.
pub fn sort_cells(cells: &mut [Cell]) {
    cells.sort_by(|a, b| {
        (a.n, a.l, a.d)
            .cmp(&(b.n, b.l, b.d))
            .then(
                a.alpha
                    .unwrap_or(f64::NEG_INFINITY)
                    .total_cmp(&b.alpha.unwrap_or(f64::NEG_INFINITY)),
            )
            .then(space_str(a.space).cmp(space_str(b.space)))
            .then(a.method.cmp(b.method))
    });
}

pub fn cells_to_csv(cells: &[Cell]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for c in cells {
        out.push_str(&c.to_csv_row());
        out.push('\n');
    }
    out
}

pub fn cells_to_json(cells: &[Cell]) -> String {
    let mut out = String::from("[\n");
    for (i, c) in cells.iter().enumerate() {
        out.push_str("  ");
        out.push_str(&c.to_json());
        out.push_str(if i + 1 < cells.len() { ",\n" } else { "\n" });
    }
    out.push_str("]\n");
    out
}
