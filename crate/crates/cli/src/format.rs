//! Fixed float formatting for reports and documents.

use num_complex::Complex;
use serde::ser::{Serialize, SerializeTuple, Serializer};
use serde_json::value::RawValue;

/// Significant digits in every emitted number.
pub const DIGITS: usize = 12;

/// Magnitudes below this print as zero, which hides rounding noise such as
/// `1e-17` imaginary parts.
pub const ZERO_SNAP: f64 = 1e-11;

/// C `printf("%.*g", sig, x)`.
pub fn format_g(x: f64, sig: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= sig as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `x` rounded for output: noise snapped to zero, `-0` folded into `0`.
pub fn clean(x: f64) -> f64 {
    if x.abs() < ZERO_SNAP {
        0.0
    } else {
        x
    }
}

/// A number serialized as `%.12g` text.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Num(pub f64);

impl Num {
    pub fn text(self) -> String {
        format_g(clean(self.0), DIGITS)
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(self.text()).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

/// A complex number serialized as `[re, im]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CNum(pub Complex<f64>);

impl Serialize for CNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&Num(self.0.re))?;
        t.serialize_element(&Num(self.0.im))?;
        t.end()
    }
}

/// Human-readable complex number: `0.5`, `-2i`, `1+0.25i`.
pub fn complex_text(z: Complex<f64>) -> String {
    let (re, im) = (clean(z.re), clean(z.im));
    let r = format_g(re, DIGITS);
    if im == 0.0 {
        return r;
    }
    let i = format_g(im.abs(), DIGITS);
    let i = if i == "1" { String::new() } else { i };
    match (re == 0.0, im < 0.0) {
        (true, false) => format!("{i}i"),
        (true, true) => format!("-{i}i"),
        (false, false) => format!("{r}+{i}i"),
        (false, true) => format!("{r}-{i}i"),
    }
}

/// `(a, b, ..)` for a character.
pub fn tuple_text(values: &[Complex<f64>]) -> String {
    let parts: Vec<String> = values.iter().map(|z| complex_text(*z)).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        let cases = [
            (0.5, "0.5"),
            (-1.4999999999999998, "-1.5"),
            (1.0, "1"),
            (100.0, "100"),
            (123456789012.0, "123456789012"),
            (1234567890123.0, "1.23456789012e+12"),
            (1e-5, "1e-05"),
            (0.0001, "0.0001"),
            (1.0 / 3.0, "0.333333333333"),
            (-2.5e-7, "-2.5e-07"),
            (9.9999999999999e5, "1000000"),
            (123456.7890123456, "123456.789012"),
            (0.0, "0"),
        ];
        for (x, want) in cases {
            assert_eq!(format_g(x, 12), want, "{x}");
        }
    }

    #[test]
    fn rounding_carries_into_the_exponent() {
        assert_eq!(format_g(9.99999999999e-5, 12), "9.99999999999e-05");
        assert_eq!(format_g(9.99999999999999e-5, 12), "0.0001");
        assert_eq!(format_g(999999999999.9, 12), "1e+12");
    }

    #[test]
    fn complex_forms() {
        assert_eq!(complex_text(Complex::new(0.5, 0.0)), "0.5");
        assert_eq!(complex_text(Complex::new(0.0, -1.0)), "-i");
        assert_eq!(complex_text(Complex::new(1.0, 0.25)), "1+0.25i");
        assert_eq!(complex_text(Complex::new(-0.0, 1e-17)), "0");
        assert_eq!(tuple_text(&[Complex::new(0.0, 0.0), Complex::new(-1.5, 0.0)]), "(0, -1.5)");
    }

    #[test]
    fn serializes_as_raw_text() {
        let v = vec![Num(2.0), Num(1e-5), Num(-0.0)];
        assert_eq!(serde_json::to_string(&v).unwrap(), "[2,1e-05,0]");
        assert_eq!(serde_json::to_string(&CNum(Complex::new(0.5, -1.0))).unwrap(), "[0.5,-1]");
    }
}
