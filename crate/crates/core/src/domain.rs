//! Domain-spec files.
//!
//! A spec is a JSON object in one of two forms:
//!
//! ```json
//! {"shape": "ellipsoid", "a": "11", "b": "7"}
//! {"flavor": "concave", "vertices": [["2", "0"], ["1/2", "1/2"], ["0", "2"]]}
//! ```
//!
//! Numbers are strings (`"p/q"` or `"n"`); a bare JSON number is rejected
//! so that nothing passes through floating point. `vertices` lists ∂₊Ω from
//! the x-axis to the y-axis.
//!
//! The same shapes have an inline form for the command line: `ball(1)`,
//! `ellipsoid(11,7)`, `polydisk(8,2)`, `convex(8,0; 8,2; 0,2)`,
//! `concave(2,0; 1/2,1/2; 0,2)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Flavor, Point, ToricRegion};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DomainSpec {
    Ball { r: Rational },
    Ellipsoid { a: Rational, b: Rational },
    Polydisk { a: Rational, b: Rational },
    Explicit { flavor: Flavor, vertices: Vec<Point> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shape: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    flavor: Option<Flavor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Point>>,
}

impl Raw {
    fn empty() -> Self {
        Raw { shape: None, r: None, a: None, b: None, flavor: None, vertices: None }
    }
}

impl TryFrom<Raw> for DomainSpec {
    type Error = String;

    fn try_from(raw: Raw) -> std::result::Result<Self, String> {
        let spec = match (raw.shape.as_deref(), raw.flavor, raw.vertices) {
            (Some(shape), None, None) => {
                let need = |v: Option<Rational>, name: &str| {
                    v.ok_or_else(|| format!("shape {shape:?} needs parameter {name:?}"))
                };
                let unused = |v: &Option<Rational>, name: &str| match v {
                    Some(_) => Err(format!("shape {shape:?} takes no parameter {name:?}")),
                    None => Ok(()),
                };
                match shape {
                    "ball" => {
                        unused(&raw.a, "a")?;
                        unused(&raw.b, "b")?;
                        DomainSpec::Ball { r: need(raw.r, "r")? }
                    }
                    "ellipsoid" | "polydisk" => {
                        unused(&raw.r, "r")?;
                        let (a, b) = (need(raw.a, "a")?, need(raw.b, "b")?);
                        if shape == "ellipsoid" {
                            DomainSpec::Ellipsoid { a, b }
                        } else {
                            DomainSpec::Polydisk { a, b }
                        }
                    }
                    other => {
                        return Err(format!(
                            "unknown shape {other:?}; expected ball, ellipsoid or polydisk"
                        ))
                    }
                }
            }
            (None, Some(flavor), Some(vertices)) => {
                if raw.r.is_some() || raw.a.is_some() || raw.b.is_some() {
                    return Err("explicit specs take only \"flavor\" and \"vertices\"".into());
                }
                DomainSpec::Explicit { flavor, vertices }
            }
            _ => {
                return Err(
                    "expected either \"shape\" with parameters, or \"flavor\" with \"vertices\""
                        .into(),
                )
            }
        };
        spec.to_region().map_err(|e| e.to_string())?;
        Ok(spec)
    }
}

impl From<&DomainSpec> for Raw {
    fn from(spec: &DomainSpec) -> Self {
        let mut raw = Raw::empty();
        match spec {
            DomainSpec::Ball { r } => {
                raw.shape = Some("ball".into());
                raw.r = Some(r.clone());
            }
            DomainSpec::Ellipsoid { a, b } | DomainSpec::Polydisk { a, b } => {
                let name = if matches!(spec, DomainSpec::Ellipsoid { .. }) {
                    "ellipsoid"
                } else {
                    "polydisk"
                };
                raw.shape = Some(name.into());
                raw.a = Some(a.clone());
                raw.b = Some(b.clone());
            }
            DomainSpec::Explicit { flavor, vertices } => {
                raw.flavor = Some(*flavor);
                raw.vertices = Some(vertices.clone());
            }
        }
        raw
    }
}

impl Serialize for DomainSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Raw::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for DomainSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        DomainSpec::try_from(Raw::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl DomainSpec {
    pub fn to_region(&self) -> Result<ToricRegion> {
        match self {
            DomainSpec::Ball { r } => ToricRegion::ball(r.clone()),
            DomainSpec::Ellipsoid { a, b } => ToricRegion::ellipsoid(a.clone(), b.clone()),
            DomainSpec::Polydisk { a, b } => ToricRegion::polydisk(a.clone(), b.clone()),
            DomainSpec::Explicit { flavor, vertices } => {
                ToricRegion::new(*flavor, vertices.clone())
            }
        }
    }

    pub fn from_region(region: &ToricRegion) -> Self {
        DomainSpec::Explicit { flavor: region.flavor(), vertices: region.boundary().to_vec() }
    }

    /// Parses a JSON spec. Errors carry the line and column.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("specs always serialize")
    }

    /// Parses the inline form, e.g. `polydisk(8,2)`.
    pub fn parse_inline(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("bad inline domain {s:?}: {why}"));
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| bad("missing '('"))?;
        let body = s[open + 1..].strip_suffix(')').ok_or_else(|| bad("missing ')'"))?;
        let name = s[..open].trim();
        let nums = |t: &str| -> Result<Vec<Rational>> {
            t.split(',')
                .map(|x| x.parse::<Rational>().map_err(|e| bad(&e.to_string())))
                .collect()
        };
        let spec = match name {
            "ball" => match nums(body)?.as_slice() {
                [r] => DomainSpec::Ball { r: r.clone() },
                _ => return Err(bad("ball takes one parameter")),
            },
            "ellipsoid" | "polydisk" => match nums(body)?.as_slice() {
                [a, b] if name == "ellipsoid" => DomainSpec::Ellipsoid { a: a.clone(), b: b.clone() },
                [a, b] => DomainSpec::Polydisk { a: a.clone(), b: b.clone() },
                _ => return Err(bad("takes two parameters")),
            },
            "convex" | "concave" => {
                let flavor = if name == "convex" { Flavor::Convex } else { Flavor::Concave };
                let vertices = body
                    .split(';')
                    .map(|v| match nums(v)?.as_slice() {
                        [x, y] => Ok(Point::new(x.clone(), y.clone())),
                        _ => Err(bad("vertices are x,y pairs separated by ';'")),
                    })
                    .collect::<Result<Vec<_>>>()?;
                DomainSpec::Explicit { flavor, vertices }
            }
            _ => return Err(bad("unknown shape")),
        };
        spec.to_region()?;
        Ok(spec)
    }

    /// Inline rendering accepted by [`DomainSpec::parse_inline`].
    pub fn to_inline(&self) -> String {
        match self {
            DomainSpec::Ball { r } => format!("ball({r})"),
            DomainSpec::Ellipsoid { a, b } => format!("ellipsoid({a},{b})"),
            DomainSpec::Polydisk { a, b } => format!("polydisk({a},{b})"),
            DomainSpec::Explicit { flavor, vertices } => {
                let vs: Vec<String> = vertices.iter().map(|p| format!("{},{}", p.x, p.y)).collect();
                format!("{flavor}({})", vs.join("; "))
            }
        }
    }
}
