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

//! Gradient variance of parametrised circuits as one scalar diagram.

pub mod ansatz;
pub mod diagram;
pub mod mc;

use thiserror::Error;

use crate::circuits::{IrError, ParseError};
use crate::engine::EngineError;

pub use ansatz::{AGate, AnsatzIR, Pauli, PauliObservable, BUILTIN};
pub use diagram::{build_expectation_diagram, build_variance_diagram, exact_variance, ExpectationDiagram};
pub use mc::{expectation, grid_variance, mc_variance_oracle, McEstimate};

#[derive(Debug, Error)]
pub enum VarianceError {
    #[error("parameter {0} appears more than once")]
    RepeatedParam(usize),
    #[error("parameter {missing} of 0..{p} never appears")]
    MissingParam { missing: usize, p: usize },
    #[error("no parameter {j}; the ansatz has {p}")]
    InvalidParam { j: usize, p: usize },
    #[error("gate {index} ({name}) is not Clifford; fixed phases must be multiples of π/2")]
    NonClifford { index: usize, name: &'static str },
    #[error(transparent)]
    Ir(#[from] IrError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("observable has length {got} but the circuit has {n} qubits")]
    ObservableLength { got: usize, n: usize },
    #[error("cannot parse observable {0:?}")]
    Observable(String),
    #[error("unknown ansatz `{0}`")]
    UnknownAnsatz(String),
    #[error("tree ansatz needs a power-of-two qubit count, got {0}")]
    TreeSize(usize),
    #[error("{0} qubits is beyond the statevector oracle")]
    TooLarge(usize),
    #[error("{0} parameters is beyond the grid oracle")]
    GridTooLarge(usize),
    #[error(transparent)]
    Engine(#[from] EngineError),
}
