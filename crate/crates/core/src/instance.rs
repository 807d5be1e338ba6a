//! JSON instance files: a complex, optionally with polytope coordinates and
//! expected face numbers.
//!
//! ```json
//! {"name": "octahedron", "facets": [[1,2,3],[1,2,-3]], "cs": true,
//!  "coordinates": {"1": ["1","0","0"]}, "expect": {"h": [1,3,3,1]}}
//! ```
//!
//! Rationals are written as strings (`"3/2"`); plain integers are accepted on
//! input. Output is canonical: facets in the vertex order of [`Face`], and
//! coordinates keyed by label in the same order.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Rational;
use crate::complex::{Face, FhgVectors, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::polytope::Polytope;

/// Face numbers an instance is expected to have. Any subset may be given.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<i64>>,
}

impl Expectations {
    pub fn from_fhg(fhg: &FhgVectors) -> Self {
        Expectations { f: Some(fhg.f.clone()), h: Some(fhg.h.clone()), g: Some(fhg.g.clone()) }
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_none() && self.h.is_none() && self.g.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub complex: SimplicialComplex,
    pub polytope: Option<Polytope>,
    pub expect: Option<Expectations>,
}

impl Instance {
    pub fn from_complex(name: impl Into<String>, complex: SimplicialComplex) -> Self {
        Instance { name: name.into(), complex, polytope: None, expect: None }
    }

    pub fn from_polytope(name: impl Into<String>, polytope: Polytope) -> Self {
        Instance { name: name.into(), complex: polytope.boundary().clone(), polytope: Some(polytope), expect: None }
    }

    /// Records the instance's own f, h and g as expectations.
    pub fn with_computed_expectations(mut self) -> Result<Self> {
        self.expect = Some(Expectations::from_fhg(&self.complex.fhg_vectors()?));
        Ok(self)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawInstance = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_instance()
    }

    pub fn to_json(&self) -> String {
        let mut facets: Vec<&Face> = self.complex.facets().iter().collect();
        facets.sort();
        let ground: Vec<Vertex> = self.complex.ground_set().to_vec();
        let ground_set: Option<Vec<i32>> =
            (ground != self.complex.vertices()).then(|| ground.iter().map(|v| v.label()).collect());
        // written by hand so coordinates follow vertex order rather than string order
        let mut out = String::from("{");
        out.push_str(&format!("\"name\":{}", Value::from(self.name.clone())));
        out.push_str(&format!(",\"cs\":{}", self.complex.is_cs()));
        let facets: Vec<Vec<i32>> = facets.iter().map(|f| f.labels()).collect();
        out.push_str(&format!(",\"facets\":{}", serde_json::to_string(&facets).expect("serializable")));
        if let Some(g) = ground_set {
            out.push_str(&format!(",\"ground_set\":{}", serde_json::to_string(&g).expect("serializable")));
        }
        if let Some(p) = &self.polytope {
            let entries: Vec<String> = p
                .coordinates()
                .iter()
                .map(|(v, c)| {
                    let c: Vec<String> = c.iter().map(ToString::to_string).collect();
                    format!("\"{}\":{}", v.label(), serde_json::to_string(&c).expect("serializable"))
                })
                .collect();
            out.push_str(&format!(",\"coordinates\":{{{}}}", entries.join(",")));
        }
        if let Some(e) = self.expect.as_ref().filter(|e| !e.is_empty()) {
            out.push_str(&format!(",\"expect\":{}", serde_json::to_string(e).expect("serializable")));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    #[serde(default)]
    name: Option<String>,
    facets: Vec<Vec<i32>>,
    #[serde(default)]
    cs: Option<bool>,
    #[serde(default)]
    ground_set: Option<Vec<i32>>,
    #[serde(default)]
    coordinates: Option<BTreeMap<String, Vec<Value>>>,
    #[serde(default)]
    expect: Option<Expectations>,
}

fn field<T>(path: impl FnOnce() -> String, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path())),
        other => Error::Parse(format!("{}: {other}", path())),
    })
}

fn parse_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("{s:?} is not a rational"))),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| Error::Parse(format!("{n} is not an integer; write non-integers as \"p/q\""))),
        other => Err(Error::Parse(format!("expected a rational, found {other}"))),
    }
}

impl RawInstance {
    fn into_instance(self) -> Result<Instance> {
        let name = self.name.unwrap_or_default();
        let mut facets = Vec::with_capacity(self.facets.len());
        for (i, labels) in self.facets.iter().enumerate() {
            facets.push(field(|| format!("facets[{i}]"), Face::from_labels(labels))?);
        }
        let ground = match &self.ground_set {
            Some(labels) => Some(
                labels
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| field(|| format!("ground_set[{i}]"), Vertex::new(l)))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        let Some(raw_coords) = self.coordinates else {
            let cs = self.cs.unwrap_or(false);
            let complex = field(|| "facets".into(), SimplicialComplex::with_ground_set(facets, ground, cs))?;
            return Ok(Instance { name, complex, polytope: None, expect: self.expect });
        };
        if self.cs == Some(false) {
            return Err(Error::Parse("cs: polytope instances are centrally symmetric".into()));
        }
        if ground.is_some() {
            return Err(Error::Parse("ground_set: not allowed together with coordinates".into()));
        }
        let mut coords = BTreeMap::new();
        for (key, values) in &raw_coords {
            let label: i32 =
                key.trim().parse().map_err(|_| Error::Parse(format!("coordinates: key {key:?} is not a label")))?;
            let v = field(|| format!("coordinates[{key}]"), Vertex::new(label))?;
            let c = values
                .iter()
                .enumerate()
                .map(|(i, x)| field(|| format!("coordinates[{key}][{i}]"), parse_rational(x)))
                .collect::<Result<Vec<_>>>()?;
            coords.insert(v, c);
        }
        let polytope = field(|| "coordinates".into(), Polytope::new(coords, facets))?;
        Ok(Instance { name, complex: polytope.boundary().clone(), polytope: Some(polytope), expect: self.expect })
    }
}
