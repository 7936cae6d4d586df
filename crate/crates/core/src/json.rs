// starzx - contraction of ZX diagrams with star edges
// Copyright (C) 2026 The starzx authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! JSON form of a [`Diagram`].
//!
//! ```json
//! { "vertices": [{"id": 0, "kind": "z", "phase": "1/4"}],
//!   "edges": [{"src": 0, "dst": 1, "kind": "star"}],
//!   "boundaries": [],
//!   "scalar": {"a": 1, "b": 0, "c": 0, "d": 0, "pow2": 0} }
//! ```
//!
//! Triangle vertices carry `input` and `output` neighbour ids. When both
//! ends are the same vertex, the first of the two edges is the input.
//! Scalar coefficients too large for i64 are written as decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, EdgeKind, VertexData, V};
use crate::phase::Phase;
use crate::scalar::ScalarExact;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error(transparent)]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("bad field: {0}")]
    Field(String),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum KindDto {
    Z,
    X,
    Triangle,
    Boundary,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
struct VertexDto {
    id: V,
    kind: KindDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phase: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    input: Option<V>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<V>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
struct EdgeDto {
    src: V,
    dst: V,
    kind: EdgeKind,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize, Debug, Clone)]
struct ScalarDto {
    a: Coeff,
    b: Coeff,
    c: Coeff,
    d: Coeff,
    pow2: i32,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
struct DiagramDto {
    vertices: Vec<VertexDto>,
    edges: Vec<EdgeDto>,
    boundaries: Vec<V>,
    scalar: ScalarDto,
}

impl From<&ScalarExact> for ScalarDto {
    fn from(s: &ScalarExact) -> Self {
        let c: [Coeff; 4] = match s.coeffs_i64() {
            Some(c) => c.map(Coeff::Small),
            None => s.coeffs_big().map(|x| Coeff::Big(x.to_string())),
        };
        let [a, b, c, d] = c;
        ScalarDto { a, b, c, d, pow2: s.pow2() }
    }
}

impl TryFrom<&ScalarDto> for ScalarExact {
    type Error = JsonError;
    fn try_from(s: &ScalarDto) -> Result<Self, JsonError> {
        let conv = |c: &Coeff| -> Result<BigInt, JsonError> {
            match c {
                Coeff::Small(x) => Ok(BigInt::from(*x)),
                Coeff::Big(t) => t.parse().map_err(|_| JsonError::Field(format!("scalar coefficient {t:?}"))),
            }
        };
        Ok(ScalarExact::from_big([conv(&s.a)?, conv(&s.b)?, conv(&s.c)?, conv(&s.d)?], s.pow2))
    }
}

/// Same shape as the diagram's `scalar` field.
impl Serialize for ScalarExact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarDto::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ScalarExact {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let dto = ScalarDto::deserialize(d)?;
        (&dto).try_into().map_err(serde::de::Error::custom)
    }
}

fn to_dto(d: &Diagram) -> DiagramDto {
    let vertices = d
        .vertices()
        .map(|v| {
            let (kind, phase, input, output) = match d.data(v) {
                VertexData::Z(p) => (KindDto::Z, Some(p.to_string()), None, None),
                VertexData::X(p) => (KindDto::X, Some(p.to_string()), None, None),
                VertexData::Triangle { input, output } => (KindDto::Triangle, None, Some(input), Some(output)),
                VertexData::Boundary => (KindDto::Boundary, None, None, None),
            };
            VertexDto { id: v, kind, phase, input, output }
        })
        .collect();
    let mut edges: Vec<EdgeDto> = d.edges().into_iter().map(|(src, dst, kind)| EdgeDto { src, dst, kind }).collect();
    for t in d.vertices() {
        let VertexData::Triangle { input, output } = d.data(t) else { continue };
        if input != output {
            continue;
        }
        let pos: Vec<usize> = edges.iter().enumerate().filter(|(_, e)| e.src == t || e.dst == t).map(|(i, _)| i).collect();
        for (&i, &(_, kind)) in pos.iter().zip(d.neighbors(t)) {
            edges[i].kind = kind;
        }
    }
    DiagramDto { vertices, edges, boundaries: d.boundaries().to_vec(), scalar: d.scalar().into() }
}

fn from_dto(dto: &DiagramDto) -> Result<Diagram, JsonError> {
    let mut d = Diagram::new();
    for v in &dto.vertices {
        let phase = || -> Result<Phase, JsonError> {
            match &v.phase {
                None => Ok(Phase::zero()),
                Some(s) => s.parse().map_err(|_| JsonError::Field(format!("phase {s:?} of vertex {}", v.id))),
            }
        };
        let data = match v.kind {
            KindDto::Z => VertexData::Z(phase()?),
            KindDto::X => VertexData::X(phase()?),
            KindDto::Boundary => VertexData::Boundary,
            KindDto::Triangle => match (v.input, v.output) {
                (Some(input), Some(output)) => VertexData::Triangle { input, output },
                _ => return Err(JsonError::Field(format!("triangle {} needs input and output", v.id))),
            },
        };
        d.add_vertex_with_id(v.id, data)?;
    }
    for e in &dto.edges {
        d.add_edge_smart(e.src, e.dst, e.kind)?;
    }
    d.set_boundaries(dto.boundaries.clone());
    d.set_scalar((&dto.scalar).try_into()?);
    d.validate()?;
    Ok(d)
}

pub fn to_json(d: &Diagram) -> String {
    serde_json::to_string(&to_dto(d)).expect("diagram serialization cannot fail")
}

pub fn to_json_pretty(d: &Diagram) -> String {
    serde_json::to_string_pretty(&to_dto(d)).expect("diagram serialization cannot fail")
}

pub fn from_json(s: &str) -> Result<Diagram, JsonError> {
    let dto: DiagramDto = serde_json::from_str(s)?;
    from_dto(&dto)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_small() {
        let mut d = Diagram::new();
        let b = d.add_boundary();
        let z = d.add_z(Phase::new(3, 4));
        let x = d.add_x(Phase::pi());
        let t = d.add_vertex(VertexData::Triangle { input: z, output: x });
        d.add_edge(b, z, EdgeKind::Plain);
        d.add_edge(z, t, EdgeKind::Plain);
        d.add_edge(t, x, EdgeKind::Plain);
        d.add_edge(z, z, EdgeKind::Star);
        d.add_edge(z, x, EdgeKind::Hadamard);
        d.add_edge(z, x, EdgeKind::Hadamard);
        d.set_scalar(ScalarExact::new([1, -2, 0, 5], -3));
        let s = to_json(&d);
        let e = from_json(&s).unwrap();
        assert_eq!(e.edges(), d.edges());
        assert_eq!(e.scalar(), d.scalar());
        assert_eq!(e.boundaries(), d.boundaries());
        assert_eq!(to_json(&e), s);
    }

    #[test]
    fn triangle_on_one_spider_keeps_its_input() {
        let mut d = Diagram::new();
        let z = d.add_z(Phase::new(1, 4));
        let t = d.add_vertex(VertexData::Triangle { input: z, output: z });
        d.add_edge(t, z, EdgeKind::Hadamard);
        d.add_edge(t, z, EdgeKind::Plain);
        let e = from_json(&to_json(&d)).unwrap();
        assert_eq!(e.neighbors(t), d.neighbors(t));
    }

    #[test]
    fn big_scalar_survives() {
        let mut d = Diagram::new();
        let big = BigInt::from(i64::MAX) * BigInt::from(7);
        d.set_scalar(ScalarExact::from_big([big.clone(), 1.into(), 0.into(), 0.into()], 0));
        let e = from_json(&to_json(&d)).unwrap();
        assert_eq!(e.scalar(), d.scalar());
    }

    #[test]
    fn rejects_dangling_edge() {
        let s = r#"{"vertices":[{"id":0,"kind":"z","phase":"0/1"}],"edges":[{"src":0,"dst":3,"kind":"plain"}],
                   "boundaries":[],"scalar":{"a":1,"b":0,"c":0,"d":0,"pow2":0}}"#;
        assert!(from_json(s).is_err());
    }
}
