//! XOR-AND graphs.
//!
//! A network is a sequence of steps. Node 0 is the constant-0 signal, nodes
//! `1..=n` are primary inputs and nodes `n+1..=n+r` are two-input gates whose
//! fanins always refer to earlier nodes. Inversions live on edges: a
//! [`Signal`] is a node reference plus a complement bit, as in AIGER.
//!
//! Gates are structurally hashed on construction. XOR gates never store
//! complemented fanins: `~a ^ b` is built as `~(a ^ b)`. AND gates keep their
//! fanin complements until [`Xag::propagate_inverters`] rewrites them.

mod analysis;
mod simulate;
mod transform;

pub use analysis::LevelInfo;

use std::collections::HashMap;
use std::fmt;
use std::ops::Not;

use crate::error::XagError;

/// A reference to a node together with an optional inversion.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signal(u32);

impl Signal {
    pub const ZERO: Signal = Signal(0);
    pub const ONE: Signal = Signal(1);

    pub fn new(node: usize, complemented: bool) -> Self {
        Signal(((node as u32) << 1) | complemented as u32)
    }

    pub fn node(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_complemented(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn is_constant(self) -> bool {
        self.node() == 0
    }

    /// The same node without inversion.
    pub fn regular(self) -> Signal {
        Signal(self.0 & !1)
    }

    pub fn complement_if(self, c: bool) -> Signal {
        Signal(self.0 ^ c as u32)
    }

    /// The AIGER-style literal, `2 * node + complement`.
    pub fn literal(self) -> u32 {
        self.0
    }
}

impl Not for Signal {
    type Output = Signal;
    fn not(self) -> Signal {
        Signal(self.0 ^ 1)
    }
}

impl fmt::Debug for Signal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_complemented() {
            write!(f, "~n{}", self.node())
        } else {
            write!(f, "n{}", self.node())
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateOp {
    Xor,
    And,
}

impl GateOp {
    pub fn name(self) -> &'static str {
        match self {
            GateOp::Xor => "XOR",
            GateOp::And => "AND",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gate {
    pub op: GateOp,
    /// Ordered so that `fanins[0] < fanins[1]`.
    pub fanins: [Signal; 2],
}

impl Gate {
    pub fn is_and(&self) -> bool {
        self.op == GateOp::And
    }
}

/// An XOR-AND graph with structural hashing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Xag {
    num_inputs: usize,
    gates: Vec<Gate>,
    outputs: Vec<Signal>,
    input_names: Vec<Option<String>>,
    output_names: Vec<Option<String>>,
    strash: HashMap<Gate, usize>,
}

impl Xag {
    pub fn new(num_inputs: usize) -> Self {
        Self {
            num_inputs,
            gates: Vec::new(),
            outputs: Vec::new(),
            input_names: vec![None; num_inputs],
            output_names: Vec::new(),
            strash: HashMap::new(),
        }
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    pub fn num_gates(&self) -> usize {
        self.gates.len()
    }

    /// Constant node, inputs and gates.
    pub fn num_nodes(&self) -> usize {
        1 + self.num_inputs + self.gates.len()
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs.len()
    }

    /// Signal of primary input `i` (0-based).
    pub fn input(&self, i: usize) -> Signal {
        assert!(i < self.num_inputs, "input {i} out of range");
        Signal::new(i + 1, false)
    }

    pub fn inputs(&self) -> impl Iterator<Item = Signal> + '_ {
        (0..self.num_inputs).map(|i| self.input(i))
    }

    pub fn is_input(&self, node: usize) -> bool {
        node >= 1 && node <= self.num_inputs
    }

    pub fn is_gate(&self, node: usize) -> bool {
        node > self.num_inputs && node < self.num_nodes()
    }

    /// Node id of the first gate.
    pub fn first_gate(&self) -> usize {
        self.num_inputs + 1
    }

    pub fn gate(&self, node: usize) -> Option<&Gate> {
        if self.is_gate(node) {
            Some(&self.gates[node - self.num_inputs - 1])
        } else {
            None
        }
    }

    /// Gates in topological order, paired with their node ids.
    pub fn gates(&self) -> impl DoubleEndedIterator<Item = (usize, &Gate)> + '_ {
        let base = self.num_inputs + 1;
        self.gates.iter().enumerate().map(move |(i, g)| (base + i, g))
    }

    pub fn outputs(&self) -> &[Signal] {
        &self.outputs
    }

    pub fn input_name(&self, i: usize) -> Option<&str> {
        self.input_names.get(i).and_then(|n| n.as_deref())
    }

    pub fn output_name(&self, i: usize) -> Option<&str> {
        self.output_names.get(i).and_then(|n| n.as_deref())
    }

    pub fn set_input_name(&mut self, i: usize, name: impl Into<String>) {
        self.input_names[i] = Some(name.into());
    }

    pub fn set_output_name(&mut self, i: usize, name: impl Into<String>) {
        self.output_names[i] = Some(name.into());
    }

    fn check(&self, s: Signal) -> Result<(), XagError> {
        if s.node() < self.num_nodes() {
            Ok(())
        } else {
            Err(XagError::DanglingSignal {
                node: s.node(),
                nodes: self.num_nodes(),
            })
        }
    }

    /// Adds a gate, folding trivial cases and reusing an existing identical
    /// gate when there is one.
    pub fn add_gate(&mut self, op: GateOp, a: Signal, b: Signal) -> Result<Signal, XagError> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            GateOp::Xor => self.raw_xor(a, b),
            GateOp::And => self.raw_and(a, b),
        })
    }

    /// Panics if either signal does not exist.
    pub fn and(&mut self, a: Signal, b: Signal) -> Signal {
        self.add_gate(GateOp::And, a, b).expect("dangling signal")
    }

    /// Panics if either signal does not exist.
    pub fn xor(&mut self, a: Signal, b: Signal) -> Signal {
        self.add_gate(GateOp::Xor, a, b).expect("dangling signal")
    }

    /// Panics if either signal does not exist.
    pub fn or(&mut self, a: Signal, b: Signal) -> Signal {
        !self.and(!a, !b)
    }

    /// Multi-input XOR as a balanced tree of two-input XORs.
    pub fn xor_many(&mut self, signals: &[Signal]) -> Signal {
        match signals {
            [] => Signal::ZERO,
            [s] => *s,
            _ => {
                let mut layer = signals.to_vec();
                while layer.len() > 1 {
                    layer = layer
                        .chunks(2)
                        .map(|pair| match pair {
                            [a, b] => self.xor(*a, *b),
                            [a] => *a,
                            _ => unreachable!(),
                        })
                        .collect();
                }
                layer[0]
            }
        }
    }

    /// Multi-input AND as a balanced tree.
    pub fn and_many(&mut self, signals: &[Signal]) -> Signal {
        match signals {
            [] => Signal::ONE,
            [s] => *s,
            _ => {
                let mut layer = signals.to_vec();
                while layer.len() > 1 {
                    layer = layer
                        .chunks(2)
                        .map(|pair| match pair {
                            [a, b] => self.and(*a, *b),
                            [a] => *a,
                            _ => unreachable!(),
                        })
                        .collect();
                }
                layer[0]
            }
        }
    }

    fn raw_xor(&mut self, a: Signal, b: Signal) -> Signal {
        let compl = a.is_complemented() ^ b.is_complemented();
        let (a, b) = (a.regular(), b.regular());
        if a == b {
            return Signal::ZERO.complement_if(compl);
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        if a == Signal::ZERO {
            return b.complement_if(compl);
        }
        self.intern(GateOp::Xor, a, b).complement_if(compl)
    }

    fn raw_and(&mut self, a: Signal, b: Signal) -> Signal {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        if a == b {
            return a;
        }
        if a == !b || a == Signal::ZERO {
            return Signal::ZERO;
        }
        if a == Signal::ONE {
            return b;
        }
        self.intern(GateOp::And, a, b)
    }

    fn intern(&mut self, op: GateOp, a: Signal, b: Signal) -> Signal {
        let gate = Gate { op, fanins: [a, b] };
        if let Some(&node) = self.strash.get(&gate) {
            return Signal::new(node, false);
        }
        let node = self.num_nodes();
        self.gates.push(gate);
        self.strash.insert(gate, node);
        Signal::new(node, false)
    }

    pub fn add_output(&mut self, s: Signal) -> Result<usize, XagError> {
        self.check(s)?;
        self.outputs.push(s);
        self.output_names.push(None);
        Ok(self.outputs.len() - 1)
    }

    /// Replaces the output list, dropping output names.
    pub fn set_outputs(&mut self, outputs: Vec<Signal>) -> Result<(), XagError> {
        for &s in &outputs {
            self.check(s)?;
        }
        self.output_names = vec![None; outputs.len()];
        self.outputs = outputs;
        Ok(())
    }

    fn copy_names_from(&mut self, other: &Xag) {
        self.input_names = other.input_names.clone();
        if self.outputs.len() == other.outputs.len() {
            self.output_names = other.output_names.clone();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn structural_hashing_reuses_gates() {
        let mut net = Xag::new(2);
        let (x1, x2) = (net.input(0), net.input(1));
        let a = net.and(x1, x2);
        let b = net.and(x2, x1);
        assert_eq!(a, b);
        assert_eq!(net.num_gates(), 1);
    }

    #[test]
    fn xor_of_equal_signals_folds_to_zero() {
        let mut net = Xag::new(1);
        let x1 = net.input(0);
        assert_eq!(net.xor(x1, x1), Signal::ZERO);
        assert_eq!(net.xor(x1, !x1), Signal::ONE);
        assert_eq!(net.num_gates(), 0);
    }

    #[test]
    fn xor_complements_move_to_the_result() {
        let mut net = Xag::new(2);
        let (x1, x2) = (net.input(0), net.input(1));
        let plain = net.xor(x1, x2);
        let inv = net.xor(!x1, x2);
        assert_eq!(inv, !plain);
        assert_eq!(net.num_gates(), 1);
        let g = net.gate(plain.node()).unwrap();
        assert!(!g.fanins[0].is_complemented() && !g.fanins[1].is_complemented());
    }

    #[test]
    fn and_folding() {
        let mut net = Xag::new(1);
        let x = net.input(0);
        assert_eq!(net.and(x, x), x);
        assert_eq!(net.and(x, !x), Signal::ZERO);
        assert_eq!(net.and(x, Signal::ONE), x);
        assert_eq!(net.and(Signal::ZERO, x), Signal::ZERO);
        assert_eq!(net.num_gates(), 0);
    }

    #[test]
    fn dangling_reference_is_rejected() {
        let mut net = Xag::new(2);
        let err = net.add_gate(GateOp::And, Signal::new(7, false), Signal::new(1, false));
        assert_eq!(err, Err(XagError::DanglingSignal { node: 7, nodes: 3 }));
        assert!(net.add_output(Signal::new(3, true)).is_err());
    }

    #[test]
    fn fanins_precede_gates() {
        let net = samples::maj5_depth2();
        for (node, g) in net.gates() {
            assert!(g.fanins[0] < g.fanins[1]);
            assert!(g.fanins[0].node() < g.fanins[1].node());
            assert!(g.fanins[1].node() < node);
        }
    }

    #[test]
    fn majority_gate_census() {
        // Seven multi-input XOR nodes and three ANDs; with two-input XORs and
        // structural sharing the network has 10 XORs.
        let net = samples::maj5_depth2();
        let ands = net.gates().filter(|(_, g)| g.is_and()).count();
        let xors = net.gates().filter(|(_, g)| !g.is_and()).count();
        assert_eq!(ands, 3);
        assert_eq!(xors, 11);
    }

    #[test]
    fn rebuilding_is_deterministic() {
        assert_eq!(samples::maj5_depth2(), samples::maj5_depth2());
        let a = samples::maj5_depth2();
        let b = samples::maj5_depth2();
        let ga: Vec<_> = a.gates().map(|(n, g)| (n, *g)).collect();
        let gb: Vec<_> = b.gates().map(|(n, g)| (n, *g)).collect();
        assert_eq!(ga, gb);
    }
}
