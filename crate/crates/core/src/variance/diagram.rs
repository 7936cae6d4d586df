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

//! Expectation and variance diagrams.
//!
//! In `⟨0|U†HU|0⟩` parameter `θ_k` sits on two Z spiders, `+θ` in `U` and
//! `-θ` in `U†`. Two copies give four spiders with bits `a, b` (first copy)
//! and `c, d` (second), contributing `e^{iθ(a - b + c - d)}`. Averaging over
//! `θ` leaves `[a - b + c - d = 0]`. For the differentiated parameter the
//! factor `i(a - b) · i(c - d)` survives the average only on `(1,0,0,1)` and
//! `(0,1,1,0)`, where it is 1.

use super::ansatz::{AnsatzIR, Pauli, PauliObservable};
use super::VarianceError;
use crate::circuits::synth::Builder;
use crate::circuits::{plug_basis, CczMode, Gate};
use crate::diagram::{Diagram, EdgeKind, V};
use crate::engine::{contract, ContractionStats, EngineConfig};
use crate::phase::Phase;
use crate::scalar::ScalarExact;

/// `⟨0|U†HU|0⟩` with every parameter spider at phase 0. `params[k]` holds
/// the spiders for `+θ_k` and `-θ_k`.
#[derive(Clone, Debug)]
pub struct ExpectationDiagram {
    pub diagram: Diagram,
    pub params: Vec<(V, V)>,
}

impl ExpectationDiagram {
    /// The scalar diagram at the given parameter values.
    pub fn at(&self, theta: &[Phase]) -> Diagram {
        assert_eq!(theta.len(), self.params.len());
        let mut d = self.diagram.clone();
        for (&(u, w), &t) in self.params.iter().zip(theta) {
            d.set_phase(u, t);
            d.set_phase(w, -t);
        }
        d
    }
}

fn check(a: &AnsatzIR, h: &PauliObservable) -> Result<(), VarianceError> {
    a.validate()?;
    if h.len() != a.n {
        return Err(VarianceError::ObservableLength { got: h.len(), n: a.n });
    }
    Ok(())
}

fn adjoint(g: &Gate) -> Gate {
    match *g {
        Gate::S(q) => Gate::Sdg(q),
        Gate::Sdg(q) => Gate::S(q),
        Gate::Rz(p, q) => Gate::Rz(-p, q),
        ref g => g.clone(),
    }
}

pub fn build_expectation_diagram(a: &AnsatzIR, h: &PauliObservable) -> Result<ExpectationDiagram, VarianceError> {
    check(a, h)?;
    let (gates, at) = a.expand();
    let mut slot = vec![usize::MAX; gates.len()];
    for (k, &i) in at.iter().enumerate() {
        slot[i] = k;
    }
    let mut b = Builder::new(a.n, CczMode::Triangles);
    let mut plus = vec![0; a.p];
    let mut minus = vec![0; a.p];
    for (i, g) in gates.iter().enumerate() {
        match (slot[i], g) {
            (k, Gate::Rz(_, q)) if k != usize::MAX => plus[k] = b.z(*q, Phase::zero()),
            _ => b.gate(g),
        }
    }
    for (q, p) in h.0.iter().enumerate() {
        match p {
            Pauli::I => {}
            Pauli::Z => {
                b.z(q, Phase::pi());
            }
            Pauli::X => {
                b.x(q, Phase::pi());
            }
            Pauli::Y => {
                b.z(q, Phase::pi());
                b.x(q, Phase::pi());
                b.d.mul_scalar(&ScalarExact::omega_pow(2));
            }
        }
    }
    for (i, g) in gates.iter().enumerate().rev() {
        match (slot[i], g) {
            (k, Gate::Rz(_, q)) if k != usize::MAX => minus[k] = b.z(*q, Phase::zero()),
            _ => b.gate(&adjoint(g)),
        }
    }
    let zeros = vec![false; a.n];
    let diagram = plug_basis(&b.finish(), &zeros, &zeros);
    Ok(ExpectationDiagram { diagram, params: plus.into_iter().zip(minus).collect() })
}

/// `[a - b + c - d = 0]` as `[a⊕b⊕c⊕d = 0] · S(¬(a⊕c), a⊕b)`: on even
/// parity the only excluded points have `a = c ≠ b`.
fn average_gadget(d: &mut Diagram, [a, b, c, e]: [V; 4]) {
    let par = d.add_x(Phase::zero());
    for v in [a, b, c, e] {
        d.add_edge(v, par, EdgeKind::Plain);
    }
    let nac = d.add_x(Phase::pi());
    d.add_edge(a, nac, EdgeKind::Plain);
    d.add_edge(c, nac, EdgeKind::Plain);
    let ab = d.add_x(Phase::zero());
    d.add_edge(a, ab, EdgeKind::Plain);
    d.add_edge(b, ab, EdgeKind::Plain);
    let u = d.add_z(Phase::zero());
    let w = d.add_z(Phase::zero());
    d.add_edge(nac, u, EdgeKind::Plain);
    d.add_edge(ab, w, EdgeKind::Plain);
    d.add_edge(u, w, EdgeKind::Star);
    d.mul_sqrt2_pow(4);
}

/// `[a = d][b = c][a ≠ b]`.
fn derivative_gadget(d: &mut Diagram, [a, b, c, e]: [V; 4]) {
    d.add_edge(a, e, EdgeKind::Plain);
    d.add_edge(b, c, EdgeKind::Plain);
    let not = d.add_x(Phase::pi());
    d.add_edge(a, not, EdgeKind::Plain);
    d.add_edge(not, b, EdgeKind::Plain);
}

/// Parameter-free scalar diagram whose value is `Var(∂⟨H⟩/∂θ_j)` for
/// `θ` uniform on `[-π, π]^p`. It has no T spiders and one star edge per
/// parameter other than `j`.
pub fn build_variance_diagram(a: &AnsatzIR, h: &PauliObservable, j: usize) -> Result<Diagram, VarianceError> {
    let e = build_expectation_diagram(a, h)?;
    if j >= a.p {
        return Err(VarianceError::InvalidParam { j, p: a.p });
    }
    let mut d = e.diagram.clone();
    let map = d.append(&e.diagram);
    for (k, &(u, w)) in e.params.iter().enumerate() {
        let ports = [u, w, map[u].expect("copied"), map[w].expect("copied")];
        if k == j {
            derivative_gadget(&mut d, ports);
        } else {
            average_gadget(&mut d, ports);
        }
    }
    Ok(d)
}

/// Contracts the variance diagram. The value is real and non-negative.
pub fn exact_variance(
    a: &AnsatzIR,
    h: &PauliObservable,
    j: usize,
    cfg: &EngineConfig,
) -> Result<(ScalarExact, ContractionStats), VarianceError> {
    let d = build_variance_diagram(a, h, j)?;
    Ok(contract(&d, cfg)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{interpret_exact, DenseConfig};

    fn gadget_table(f: fn(&mut Diagram, [V; 4])) -> Vec<ScalarExact> {
        (0..16)
            .map(|m| {
                let mut d = Diagram::new();
                let ports: Vec<V> = (0..4).map(|_| d.add_z(Phase::zero())).collect();
                for (i, &v) in ports.iter().enumerate() {
                    // X(bπ) cap on a Z spider is √2 |b⟩
                    let cap = d.add_x(if m >> (3 - i) & 1 == 1 { Phase::pi() } else { Phase::zero() });
                    d.add_edge(v, cap, EdgeKind::Plain);
                    d.mul_sqrt2_pow(-1);
                }
                f(&mut d, [ports[0], ports[1], ports[2], ports[3]]);
                interpret_exact(&d, &DenseConfig::unlimited()).unwrap()
            })
            .collect()
    }

    #[test]
    fn gadget_tensors() {
        let avg = gadget_table(average_gadget);
        let der = gadget_table(derivative_gadget);
        for m in 0..16i64 {
            let bit = |i: i64| (m >> (3 - i)) & 1;
            let (a, b, c, d) = (bit(0), bit(1), bit(2), bit(3));
            let want_avg = i64::from(a - b + c - d == 0);
            let want_der = i64::from(a == d && b == c && a != b);
            assert_eq!(avg[m as usize], ScalarExact::from_int(want_avg), "average {m:04b}");
            assert_eq!(der[m as usize], ScalarExact::from_int(want_der), "derivative {m:04b}");
        }
    }

    #[test]
    fn expectation_at_zero() {
        let mut a = AnsatzIR::new(1);
        a.rz(0);
        let e = build_expectation_diagram(&a, &PauliObservable::all_z(1)).unwrap();
        let v = interpret_exact(&e.at(&[Phase::new(1, 4)]), &DenseConfig::unlimited()).unwrap();
        assert_eq!(v, ScalarExact::one());
        let mut a = AnsatzIR::new(1);
        a.rx(0);
        let e = build_expectation_diagram(&a, &PauliObservable::all_z(1)).unwrap();
        let v = interpret_exact(&e.at(&[Phase::new(1, 2)]), &DenseConfig::unlimited()).unwrap();
        assert!(v.is_zero(), "{v:?}");
        let v = interpret_exact(&e.at(&[Phase::zero()]), &DenseConfig::unlimited()).unwrap();
        assert_eq!(v, ScalarExact::one());
    }

    #[test]
    fn matches_grid_oracle() {
        use super::super::mc::grid_variance;
        let mut toy = AnsatzIR::new(2);
        toy.rx(0).rx(1).rz(0).rz(1).fixed(Gate::Cz(0, 1)).rx(0).ry(1);
        let cases = [
            (toy.clone(), "ZZ", 1),
            (toy.clone(), "XI", 0),
            (toy, "YZ", 4),
            (AnsatzIR::builtin("sim-circuit-1", 3, 1).unwrap(), "ZZZ", 0),
            (AnsatzIR::builtin("sim-circuit-1", 3, 1).unwrap(), "IZI", 3),
            (AnsatzIR::builtin("tree", 4, 1).unwrap(), "IIIZ", 0),
            (AnsatzIR::builtin("sim-circuit-4", 3, 1).unwrap(), "ZIZ", 2),
            (AnsatzIR::builtin("sim-circuit-3", 3, 1).unwrap(), "XYZ", 5),
        ];
        for (a, h, j) in cases {
            let h: PauliObservable = h.parse().unwrap();
            let want = grid_variance(&a, &h, j).unwrap();
            let d = build_variance_diagram(&a, &h, j).unwrap();
            let dense = interpret_exact(&d, &DenseConfig::unlimited()).unwrap();
            let (v, stats) = exact_variance(&a, &h, j, &EngineConfig::default()).unwrap();
            assert_eq!(v, dense, "{h} {j}");
            assert!(v.is_real(), "{v:?}");
            assert!((v.to_complex().re - want).abs() < 1e-10, "{h} j={j}: {} vs {want}", v.to_complex());
            assert!(stats.terminal_terms as f64 <= 2f64.powf(crate::engine::BETA * (a.p - 1) as f64) + 1e-9);
        }
    }

    #[test]
    fn variance_diagram_shape() {
        let a = AnsatzIR::builtin("sim-circuit-1", 3, 1).unwrap();
        let d = build_variance_diagram(&a, &PauliObservable::all_z(3), 0).unwrap();
        assert!(d.is_scalar_diagram());
        assert_eq!(d.t_count(), 0);
        assert_eq!(d.star_count(), a.p - 1);
        assert!(matches!(
            build_variance_diagram(&a, &PauliObservable::all_z(3), 99),
            Err(VarianceError::InvalidParam { j: 99, .. })
        ));
        assert!(matches!(
            build_variance_diagram(&a, &PauliObservable::all_z(2), 0),
            Err(VarianceError::ObservableLength { .. })
        ));
    }
}
