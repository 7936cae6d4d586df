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

//! Exact contraction of scalar ZX diagrams with triangles and star edges.

pub mod circuits;
pub mod decompose;
pub mod dense;
pub mod diagram;
pub mod engine;
pub mod experiments;
pub mod graphlike;
pub mod json;
pub mod phase;
pub mod random;
pub mod scalar;
pub mod simplify;
pub mod variance;

pub use diagram::{Diagram, DiagramError, EdgeKind, VertexData, V};
pub use phase::{Phase, PhaseParseError};
pub use scalar::{ScalarError, ScalarExact};
