//! Parameter symbols, assignments, and the text formats they are read from.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ComplexScalar;

/// A free parameter of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sym {
    A,
    B,
    C,
    M,
    K,
    Alpha,
    Beta,
    Gamma,
    Delta,
    Theta,
    Tau,
    Lambda,
    Mu,
    Nu,
    S,
    N,
    P,
    Z,
    V,
}

impl Sym {
    pub const ALL: [Sym; 19] = [
        Sym::A,
        Sym::B,
        Sym::C,
        Sym::M,
        Sym::K,
        Sym::Alpha,
        Sym::Beta,
        Sym::Gamma,
        Sym::Delta,
        Sym::Theta,
        Sym::Tau,
        Sym::Lambda,
        Sym::Mu,
        Sym::Nu,
        Sym::S,
        Sym::N,
        Sym::P,
        Sym::Z,
        Sym::V,
    ];

    /// ASCII name, used as the key in reports and parameter files.
    pub fn name(self) -> &'static str {
        match self {
            Sym::A => "a",
            Sym::B => "b",
            Sym::C => "c",
            Sym::M => "m",
            Sym::K => "k",
            Sym::Alpha => "alpha",
            Sym::Beta => "beta",
            Sym::Gamma => "gamma",
            Sym::Delta => "delta",
            Sym::Theta => "theta",
            Sym::Tau => "tau",
            Sym::Lambda => "lambda",
            Sym::Mu => "mu",
            Sym::Nu => "nu",
            Sym::S => "s",
            Sym::N => "n",
            Sym::P => "p",
            Sym::Z => "z",
            Sym::V => "v",
        }
    }

    pub fn greek(self) -> Option<char> {
        Some(match self {
            Sym::Alpha => 'α',
            Sym::Beta => 'β',
            Sym::Gamma => 'γ',
            Sym::Delta => 'δ',
            Sym::Theta => 'θ',
            Sym::Tau => 'τ',
            Sym::Lambda => 'λ',
            Sym::Mu => 'μ',
            Sym::Nu => 'ν',
            _ => return None,
        })
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sym {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Sym::ALL
            .into_iter()
            .find(|sym| {
                sym.name() == s || sym.greek().is_some_and(|g| s.chars().eq(std::iter::once(g)))
            })
            .ok_or_else(|| Error::Parse(format!("unknown parameter name {s:?}")))
    }
}

impl Serialize for Sym {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Sym {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Values for some subset of the symbols.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParamAssignment {
    #[serde(with = "text_map")]
    values: BTreeMap<Sym, ComplexScalar>,
}

impl ParamAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, sym: Sym, value: impl Into<ComplexScalar>) -> &mut Self {
        self.values.insert(sym, value.into());
        self
    }

    /// Builder form of [`set`](Self::set).
    pub fn with(mut self, sym: Sym, value: impl Into<ComplexScalar>) -> Self {
        self.set(sym, value);
        self
    }

    pub fn get(&self, sym: Sym) -> Option<ComplexScalar> {
        self.values.get(&sym).copied()
    }

    /// The value of `sym`, or a domain error naming it.
    pub fn req(&self, sym: Sym) -> Result<ComplexScalar> {
        self.get(sym)
            .ok_or_else(|| Error::domain(format!("parameter {sym} is not set")))
    }

    /// Real part of a parameter that must be real.
    pub fn real(&self, sym: Sym) -> Result<f64> {
        let v = self.req(sym)?;
        if v.im != 0.0 {
            return Err(Error::domain(format!("parameter {sym} must be real, got {v}")));
        }
        Ok(v.re)
    }

    pub fn contains(&self, sym: Sym) -> bool {
        self.values.contains_key(&sym)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Sym, ComplexScalar)> + '_ {
        self.values.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `self` overridden by every value in `other`.
    pub fn merged(&self, other: &ParamAssignment) -> ParamAssignment {
        let mut out = self.clone();
        out.values
            .extend(other.values.iter().map(|(&k, &v)| (k, v)));
        out
    }

    /// Reads the `name = value` format: one assignment per line, `#` starts a
    /// comment, blank lines are ignored.
    pub fn parse_file_text(text: &str) -> Result<Self> {
        let mut out = ParamAssignment::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("line {}: expected `name = value`, got {raw:?}", lineno + 1))
            })?;
            let sym: Sym = name
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            let v = parse_complex(value)
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            if out.values.insert(sym, v).is_some() {
                return Err(Error::Parse(format!(
                    "line {}: parameter {sym} assigned twice",
                    lineno + 1
                )));
            }
        }
        Ok(out)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::parse_file_text(&text)
    }
}

impl fmt::Display for ParamAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.iter() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{k}={}", format_complex(v, 6))?;
        }
        Ok(())
    }
}

/// Parses `re`, `im i`, or `re±im i`; whitespace is ignored, so the spaced
/// form `re + im i` is accepted too. A bare `i` means one.
pub fn parse_complex(text: &str) -> Result<ComplexScalar> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("not a complex literal: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // Split before the last sign that is not leading and not an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re_txt, im_txt) = match split {
        Some(j) => (&body[..j], &body[j..]),
        None => ("", body),
    };
    let re = if re_txt.is_empty() {
        0.0
    } else {
        re_txt.parse::<f64>().map_err(|_| bad())?
    };
    let im = match im_txt {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => t.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}

/// `re±im i` with `digits` significant digits in each component.
pub fn format_complex(z: ComplexScalar, digits: usize) -> String {
    let p = digits.saturating_sub(1);
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:.*e}{sign}{:.*e}i", p, z.re, p, z.im.abs())
}

/// Text form of a float used in reports: 17 significant digits, which
/// round-trips every finite `f64`.
pub fn float_text(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn parse_float_text(s: &str) -> Result<f64> {
    match s {
        "inf" => Ok(f64::INFINITY),
        "-inf" => Ok(f64::NEG_INFINITY),
        "NaN" => Ok(f64::NAN),
        _ => s
            .parse()
            .map_err(|_| Error::Parse(format!("not a number: {s:?}"))),
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexText {
    re: String,
    im: String,
}

/// Serde adapter writing a complex number as `{"re": "...", "im": "..."}`.
pub mod complex_text {
    use super::*;

    pub fn serialize<S: Serializer>(z: &ComplexScalar, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexText {
            re: float_text(z.re),
            im: float_text(z.im),
        }
        .serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<ComplexScalar, D::Error> {
        let t = ComplexText::deserialize(de)?;
        let re = parse_float_text(&t.re).map_err(serde::de::Error::custom)?;
        let im = parse_float_text(&t.im).map_err(serde::de::Error::custom)?;
        Ok(Complex64::new(re, im))
    }
}

/// Serde adapter writing an `f64` as a decimal string.
pub mod float_str {
    use super::*;

    pub fn serialize<S: Serializer>(x: &f64, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&float_text(*x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<f64, D::Error> {
        let s = String::deserialize(de)?;
        parse_float_text(&s).map_err(serde::de::Error::custom)
    }
}

mod text_map {
    use super::*;
    use serde::ser::SerializeMap;

    #[derive(Serialize, Deserialize)]
    struct Wrapped(#[serde(with = "complex_text")] ComplexScalar);

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<Sym, ComplexScalar>,
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut map = ser.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            map.serialize_entry(k, &Wrapped(*v))?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<BTreeMap<Sym, ComplexScalar>, D::Error> {
        let raw = BTreeMap::<Sym, Wrapped>::deserialize(de)?;
        Ok(raw.into_iter().map(|(k, v)| (k, v.0)).collect())
    }
}
