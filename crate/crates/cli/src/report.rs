use std::fmt::Write;
use std::str::FromStr;

use loopseries::{IntPolynomial, RationalGF};
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Ascending coefficients; the zero polynomial prints as `[0]`.
pub fn coeff_list(p: &IntPolynomial) -> String {
    list(&poly_coeffs(p))
}

fn poly_coeffs(p: &IntPolynomial) -> Vec<BigInt> {
    if p.is_zero() {
        vec![BigInt::from(0)]
    } else {
        p.coeffs().to_vec()
    }
}

fn list(items: &[BigInt]) -> String {
    let body: Vec<String> = items.iter().map(BigInt::to_string).collect();
    format!("[{}]", body.join(","))
}

fn json_ints(items: &[BigInt]) -> Value {
    Value::Array(
        items
            .iter()
            .map(|c| Value::Number(Number::from_str(&c.to_string()).expect("decimal integer")))
            .collect(),
    )
}

pub fn render_compute(series: &RationalGF, degree: usize, format: Format) -> String {
    let num = poly_coeffs(series.numerator());
    let den = poly_coeffs(series.denominator());
    let coeffs = series.expand(degree).into_coeffs();
    let mut out = String::new();
    match format {
        Format::Plain => {
            writeln!(out, "num: {}", list(&num)).unwrap();
            writeln!(out, "den: {}", list(&den)).unwrap();
            writeln!(out, "coeffs: {}", list(&coeffs)).unwrap();
        }
        Format::Json => {
            let doc = json!({
                "numerator": json_ints(&num),
                "denominator": json_ints(&den),
                "coefficients": json_ints(&coeffs),
                "degree": degree,
            });
            writeln!(out, "{doc}").unwrap();
        }
        Format::Csv => {
            let row = |name: &str, v: &[BigInt]| {
                let cells: Vec<String> = v.iter().map(BigInt::to_string).collect();
                format!("{name},{}", cells.join(","))
            };
            writeln!(out, "{}", row("numerator", &num)).unwrap();
            writeln!(out, "{}", row("denominator", &den)).unwrap();
            writeln!(out, "{}", row("coefficients", &coeffs)).unwrap();
            writeln!(out, "degree,{degree}").unwrap();
        }
    }
    out
}
