//! JSON input schemas. Rationals are strings `"p/q"` (JSON integers are
//! accepted too); polynomials are text or term lists `[{"c","x","y"}]`.

use std::fmt;

use serde::de::DeserializeOwned;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::Deserialize;
use serde_json::{Map, Value};

use semigrowth::rational::{int, parse_rat};
use semigrowth::text::parse_laurent2;
use semigrowth::{LaurentPoly2, Rat};

#[derive(Debug, Clone)]
pub struct RatJson(pub Rat);

impl<'de> Deserialize<'de> for RatJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RatJson;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as a string \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<RatJson, E> {
                parse_rat(s).map(RatJson).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RatJson, E> {
                Ok(RatJson(int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RatJson, E> {
                i64::try_from(v)
                    .map(|v| RatJson(int(v)))
                    .map_err(|_| E::custom("integer out of range"))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    c: RatJson,
    #[serde(default)]
    x: i64,
    #[serde(default)]
    y: u32,
}

/// A polynomial in `x, x⁻¹, y`.
#[derive(Debug, Clone)]
pub struct PolyJson(pub LaurentPoly2);

impl<'de> Deserialize<'de> for PolyJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = PolyJson;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a polynomial as text or as a list of {\"c\", \"x\", \"y\"} terms")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<PolyJson, E> {
                parse_laurent2(s).map(PolyJson).map_err(E::custom)
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<PolyJson, A::Error> {
                let mut terms = Vec::new();
                while let Some(t) = seq.next_element::<TermJson>()? {
                    terms.push(((t.x, t.y), t.c.0));
                }
                Ok(PolyJson(LaurentPoly2::from_terms(terms)))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesTermJson {
    pub c: RatJson,
    pub e: RatJson,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepJson {
    pub omega: RatJson,
    pub c: RatJson,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TailJson {
    pub omega: RatJson,
    pub c1: RatJson,
    pub c2: RatJson,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PuiseuxJson {
    pub phi: Vec<SeriesTermJson>,
    pub omega: RatJson,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StandardJson {
    pub z: Vec<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundariesJson {
    pub f1: PolyJson,
    pub f2: PolyJson,
    /// Index into the real branches of `f1`, top first.
    #[serde(default)]
    pub branch1: Option<usize>,
    #[serde(default)]
    pub branch2: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TotalDegreeJson {}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanJson {
    pub steps: Vec<StepJson>,
    pub tail: TailJson,
}

/// A tentacle, discriminated by its `"type"` field.
#[derive(Debug)]
pub enum TentacleJson {
    Puiseux(PuiseuxJson),
    Standard(StandardJson),
    Boundaries(BoundariesJson),
    TotalDegree(TotalDegreeJson),
    Plan(PlanJson),
}

fn variant<T: DeserializeOwned, E: de::Error>(body: Value) -> Result<T, E> {
    serde_path_to_error::deserialize(body).map_err(|e| {
        let path = e.path().to_string();
        if path == "." {
            E::custom(e.into_inner())
        } else {
            E::custom(format!("at `{path}`: {}", e.into_inner()))
        }
    })
}

impl<'de> Deserialize<'de> for TentacleJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut body = Map::<String, Value>::deserialize(d)?;
        let tag = match body.remove("type") {
            Some(Value::String(t)) => t,
            Some(_) => return Err(de::Error::custom("`type` must be a string")),
            None => return Err(de::Error::missing_field("type")),
        };
        let body = Value::Object(body);
        Ok(match tag.as_str() {
            "puiseux" => TentacleJson::Puiseux(variant(body)?),
            "standard" => TentacleJson::Standard(variant(body)?),
            "boundaries" => TentacleJson::Boundaries(variant(body)?),
            "total_degree" => TentacleJson::TotalDegree(variant(body)?),
            "plan" => TentacleJson::Plan(variant(body)?),
            other => {
                return Err(de::Error::unknown_variant(
                    other,
                    &["puiseux", "standard", "boundaries", "total_degree", "plan"],
                ))
            }
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TentacleSetJson {
    pub tentacles: Vec<TentacleJson>,
    /// Polynomial for `eval`, overridden by `--poly`.
    #[serde(default)]
    pub poly: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpandJson {
    pub poly: PolyJson,
}

/// Either explicit direction vectors or a set of standard tentacles.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeJson {
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub directions: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub tentacles: Option<Vec<TentacleJson>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundJson {
    pub d: u32,
    #[serde(rename = "C")]
    pub c: RatJson,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftJson {
    pub names: Vec<String>,
    pub poly: String,
    pub level: u32,
    #[serde(default)]
    pub constraints: Vec<String>,
    #[serde(default)]
    pub coefficient_bound: Option<BoundJson>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleJson {
    pub tentacle: TentacleJson,
    pub poly: PolyJson,
}
