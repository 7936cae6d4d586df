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

//! Dense statevector simulation. Qubit 0 is the most significant bit.

use num_complex::Complex64;

use super::{Gate, GateIR};

type C = Complex64;

#[derive(Clone, Debug, PartialEq)]
pub struct State {
    pub n: usize,
    pub amps: Vec<C>,
}

impl State {
    pub fn basis(n: usize, bits: &[bool]) -> Self {
        let mut amps = vec![C::new(0.0, 0.0); 1 << n];
        amps[index(n, bits)] = C::new(1.0, 0.0);
        State { n, amps }
    }

    pub fn plus(n: usize) -> Self {
        let a = (1u64 << n) as f64;
        State { n, amps: vec![C::new(1.0 / a.sqrt(), 0.0); 1 << n] }
    }

    fn mask(&self, q: usize) -> usize {
        1 << (self.n - 1 - q)
    }

    fn single(&mut self, q: usize, m: [[C; 2]; 2]) {
        let b = self.mask(q);
        for i in 0..self.amps.len() {
            if i & b == 0 {
                let (x, y) = (self.amps[i], self.amps[i | b]);
                self.amps[i] = m[0][0] * x + m[0][1] * y;
                self.amps[i | b] = m[1][0] * x + m[1][1] * y;
            }
        }
    }

    fn phase_where(&mut self, pred: impl Fn(usize) -> bool, p: C) {
        for (i, a) in self.amps.iter_mut().enumerate() {
            if pred(i) {
                *a *= p;
            }
        }
    }

    fn permute(&mut self, f: impl Fn(usize) -> usize) {
        let mut out = vec![C::new(0.0, 0.0); self.amps.len()];
        for (i, a) in self.amps.iter().enumerate() {
            out[f(i)] = *a;
        }
        self.amps = out;
    }

    pub fn apply(&mut self, g: &Gate) {
        let one = C::new(1.0, 0.0);
        let zero = C::new(0.0, 0.0);
        let diag = |p: C| [[one, zero], [zero, p]];
        let w = |k: f64| C::from_polar(1.0, k * std::f64::consts::FRAC_PI_4);
        match g {
            Gate::H(q) => {
                let h = C::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
                self.single(*q, [[h, h], [h, -h]]);
            }
            Gate::S(q) => self.single(*q, diag(w(2.0))),
            Gate::Sdg(q) => self.single(*q, diag(w(-2.0))),
            Gate::T(q) => self.single(*q, diag(w(1.0))),
            Gate::Tdg(q) => self.single(*q, diag(w(-1.0))),
            Gate::Z(q) => self.single(*q, diag(-one)),
            Gate::X(q) => self.single(*q, [[zero, one], [one, zero]]),
            Gate::Rz(p, q) => self.single(*q, diag(C::from_polar(1.0, p.to_radians()))),
            Gate::Cx(c, t) => {
                let (mc, mt) = (self.mask(*c), self.mask(*t));
                self.permute(|i| if i & mc != 0 { i ^ mt } else { i });
            }
            Gate::Cz(a, b) => {
                let m = self.mask(*a) | self.mask(*b);
                self.phase_where(|i| i & m == m, -one);
            }
            Gate::Ccz(a, b, c) => {
                let m = self.mask(*a) | self.mask(*b) | self.mask(*c);
                self.phase_where(|i| i & m == m, -one);
            }
            Gate::Cswap(c, a, b) => {
                let (mc, ma, mb) = (self.mask(*c), self.mask(*a), self.mask(*b));
                self.permute(|i| {
                    if i & mc != 0 && ((i & ma != 0) != (i & mb != 0)) {
                        i ^ ma ^ mb
                    } else {
                        i
                    }
                });
            }
            Gate::Mcx(cs, t) => {
                let m: usize = cs.iter().map(|&c| self.mask(c)).sum();
                let mt = self.mask(*t);
                self.permute(|i| if i & m == m { i ^ mt } else { i });
            }
        }
    }

    /// `diag(1, e^{iθ})` on qubit `q`.
    pub fn rz(&mut self, q: usize, theta: f64) {
        let one = C::new(1.0, 0.0);
        let zero = C::new(0.0, 0.0);
        self.single(q, [[one, zero], [zero, C::from_polar(1.0, theta)]]);
    }

    pub fn run(mut self, c: &GateIR) -> Self {
        for g in &c.gates {
            self.apply(g);
        }
        self
    }

    pub fn inner(&self, o: &State) -> C {
        self.amps.iter().zip(&o.amps).map(|(a, b)| a.conj() * b).sum()
    }
}

pub fn index(n: usize, bits: &[bool]) -> usize {
    (0..n).filter(|&q| bits[q]).map(|q| 1 << (n - 1 - q)).sum()
}

/// Unitary as rows of outputs, `u[out][in]`.
pub fn unitary(c: &GateIR) -> Vec<Vec<C>> {
    let dim = 1 << c.n;
    let mut u = vec![vec![C::new(0.0, 0.0); dim]; dim];
    for i in 0..dim {
        let bits: Vec<bool> = (0..c.n).map(|q| i & (1 << (c.n - 1 - q)) != 0).collect();
        let s = State::basis(c.n, &bits).run(c);
        for (o, a) in s.amps.iter().enumerate() {
            u[o][i] = *a;
        }
    }
    u
}

/// ⟨+…+| C |+…+⟩.
pub fn plus_amplitude(c: &GateIR) -> C {
    let p = State::plus(c.n);
    p.inner(&p.clone().run(c))
}

/// ⟨out| C |in⟩.
pub fn basis_amplitude(c: &GateIR, input: &[bool], output: &[bool]) -> C {
    State::basis(c.n, input).run(c).amps[index(c.n, output)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ccz_plus_amplitude() {
        let c = GateIR { n: 3, gates: vec![Gate::Ccz(0, 1, 2)] };
        assert!((plus_amplitude(&c) - C::new(0.75, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn fredkin_swaps() {
        let c = GateIR { n: 3, gates: vec![Gate::Cswap(0, 1, 2)] };
        assert!((basis_amplitude(&c, &[true, true, false], &[true, false, true]) - 1.0).norm() < 1e-12);
        assert!((basis_amplitude(&c, &[false, true, false], &[false, true, false]) - 1.0).norm() < 1e-12);
    }

    #[test]
    fn toffoli_via_mcx() {
        let c = GateIR { n: 3, gates: vec![Gate::Mcx(vec![0, 1], 2)] };
        assert!((basis_amplitude(&c, &[true, true, false], &[true, true, true]) - 1.0).norm() < 1e-12);
        assert!(basis_amplitude(&c, &[true, false, false], &[true, false, true]).norm() < 1e-12);
    }
}
