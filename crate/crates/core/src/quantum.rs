//! Lowering of normalized XAGs to reversible circuits.
//!
//! Qubits are laid out as inputs, outputs, AND ancillae, copy qubits and
//! helper qubits, in that order. Every AND of the swept network is computed
//! once into a zeroed qubit, in the layer given by the schedule. Before a
//! layer runs, each operand is made available on its own qubit: linearly
//! independent operand parities are formed in place with CNOTs (and undone
//! after the layer), the remaining ones are accumulated onto copy qubits.
//! After the last layer the outputs are copied out, then the interior ANDs
//! are uncomputed layer by layer in reverse.
//!
//! An output that is an AND node keeps that AND's target as its qubit and is
//! never uncomputed. Helper qubits are reserved for the T-depth-1 AND gadget
//! but do not appear in the gate list.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{MapError, SimError};
use crate::xag::Xag;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Schedule {
    /// Each AND runs at its level.
    #[default]
    Asap,
    /// Each AND runs at its reverse level.
    Alap,
}

impl Schedule {
    pub fn name(self) -> &'static str {
        match self {
            Schedule::Asap => "asap",
            Schedule::Alap => "alap",
        }
    }
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QGate {
    X(usize),
    Cnot {
        control: usize,
        target: usize,
    },
    And {
        a: usize,
        b: usize,
        target: usize,
    },
    Unand {
        a: usize,
        b: usize,
        target: usize,
    },
    /// Start of the gates belonging to AND layer `k`.
    Layer(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumCircuit {
    pub qubit_count: usize,
    /// Inputs occupy qubits `0..num_inputs`.
    pub num_inputs: usize,
    /// Qubit holding each output.
    pub outputs: Vec<usize>,
    pub gates: Vec<QGate>,
}

impl QuantumCircuit {
    pub fn and_count(&self) -> usize {
        self.gates.iter().filter(|g| matches!(g, QGate::And { .. })).count()
    }

    pub fn t_count(&self) -> usize {
        4 * self.and_count()
    }

    /// Number of distinct layers that contain a compute AND.
    pub fn t_depth(&self) -> usize {
        let mut layer = None;
        let mut seen = std::collections::BTreeSet::new();
        for g in &self.gates {
            match g {
                QGate::Layer(k) => layer = Some(*k),
                QGate::And { .. } => {
                    seen.insert(layer);
                }
                _ => {}
            }
        }
        seen.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResourceEstimate {
    pub t_count: usize,
    pub t_depth: usize,
    pub qubits: usize,
    pub schedule: Schedule,
    /// Peak number of copy qubits in any layer.
    pub copies: usize,
    /// Peak number of helper qubits (ANDs in one layer).
    pub helpers: usize,
    /// AND targets that are uncomputed at the end.
    pub ancillae: usize,
}

/// Result of simulating a circuit on one basis state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitRun {
    pub outputs: Vec<bool>,
    /// Every qubit other than inputs and outputs is back at zero and the
    /// inputs hold their initial values.
    pub clean: bool,
}

/// Result of a bit-parallel simulation, one assignment per bit lane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordRun {
    pub outputs: Vec<u64>,
    /// Lanes in which some non-output qubit did not return to its start value.
    pub dirty: u64,
}

/// The layer of every AND gate of `net`, in node order.
pub fn and_layers(net: &Xag, schedule: Schedule) -> Vec<(usize, u32)> {
    let info = net.compute_levels();
    net.gates()
        .filter(|(_, g)| g.is_and())
        .map(|(n, _)| {
            let layer = match schedule {
                Schedule::Asap => info.level[n],
                Schedule::Alap => info.rlevel[n],
            };
            (n, layer)
        })
        .collect()
}

fn check_normalized(net: &Xag) -> Result<Xag, MapError> {
    if let Some(n) = net.first_unnormalized() {
        return Err(MapError::NotNormalized(n));
    }
    Ok(net.sweep_dead())
}

/// For each output, the AND node whose target it reuses, if any.
fn claimed_ands(net: &Xag) -> BTreeMap<usize, usize> {
    let mut claimed = BTreeMap::new();
    for (i, s) in net.outputs().iter().enumerate() {
        if net.gate(s.node()).is_some_and(|g| g.is_and()) {
            claimed.entry(s.node()).or_insert(i);
        }
    }
    claimed
}

fn sym_diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Parity of each node as a sorted list of basis indices, where `basis`
/// gives the index of every input and AND node.
fn node_forms(net: &Xag, basis: impl Fn(usize) -> u32) -> Vec<Vec<u32>> {
    let mut forms = vec![Vec::new(); net.num_nodes()];
    for (i, f) in forms.iter_mut().enumerate().take(net.num_inputs() + 1).skip(1) {
        *f = vec![basis(i)];
    }
    for (n, g) in net.gates() {
        forms[n] = if g.is_and() {
            vec![basis(n)]
        } else {
            sym_diff(&forms[g.fanins[0].node()], &forms[g.fanins[1].node()])
        };
    }
    forms
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }
    fn get(&self, i: usize) -> bool {
        (self.0[i >> 6] >> (i & 63)) & 1 == 1
    }
    fn flip(&mut self, i: usize) {
        self.0[i >> 6] ^= 1 << (i & 63);
    }
    fn xor(&mut self, other: &Bits) {
        self.0.iter_mut().zip(&other.0).for_each(|(a, b)| *a ^= b);
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| i * 64 + b))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Operand {
    Qubit(usize),
    Copy(usize),
}

/// Gates for one layer of ANDs (compute or uncompute).
struct LayerPlan {
    layer: u32,
    /// `(a, b, target)` with operand locations.
    ands: Vec<(Operand, Operand, usize)>,
    /// CNOTs that put the independent operands on their carriers.
    prep: Vec<(usize, usize)>,
    /// For each copy slot, the carriers XORed into it.
    copies: Vec<Vec<usize>>,
}

/// Makes every operand form available on a distinct qubit. `forms` are
/// sorted qubit lists; qubits hold their basis values on entry.
fn plan_layer(layer: u32, ands: &[(usize, usize, usize)], forms: &[Vec<u32>]) -> LayerPlan {
    let occurrences: Vec<&[u32]> = ands
        .iter()
        .flat_map(|&(a, b, _)| [forms[a].as_slice(), forms[b].as_slice()])
        .collect();
    let mut columns: Vec<u32> = occurrences.iter().flat_map(|f| f.iter().copied()).collect();
    columns.sort_unstable();
    columns.dedup();
    let col = |q: u32| columns.binary_search(&q).expect("column");
    let width = columns.len();

    // Forward elimination. `basis[j]` is (pivot, reduced row, combination
    // of independent occurrences); `pivot_of` maps a column to its basis row.
    let mut basis: Vec<(usize, Bits, Bits)> = Vec::new();
    let mut pivot_of: Vec<Option<usize>> = vec![None; width];
    let mut located = Vec::with_capacity(occurrences.len());
    let mut independent: Vec<Bits> = Vec::new();
    let max_rank = occurrences.len();
    for f in &occurrences {
        let mut row = Bits::new(width);
        for &q in f.iter() {
            row.flip(col(q));
        }
        let original = row.clone();
        let mut combo = Bits::new(max_rank);
        for (p, r, c) in &basis {
            if row.get(*p) {
                row.xor(r);
                combo.xor(c);
            }
        }
        match row.first() {
            Some(p) => {
                let k = independent.len();
                combo.flip(k);
                pivot_of[p] = Some(k);
                basis.push((p, row, combo));
                independent.push(original);
                located.push(Err(k));
            }
            None => located.push(Ok(combo)),
        }
    }
    // `located[i]` is `Err(k)` for the k-th independent form (carried on
    // its pivot column) and `Ok(combo)` for a dependent one.

    // Reduce the target matrix (pivot rows replaced by their forms) to the
    // identity; the circuit applies these row operations in reverse.
    let pivots: Vec<usize> = basis.iter().map(|(p, _, _)| *p).collect();
    let mut rows: BTreeMap<usize, Bits> = pivots.iter().zip(&independent).map(|(&p, f)| (p, f.clone())).collect();
    let mut ops: Vec<(usize, usize)> = Vec::new();
    for (&r, row) in rows.iter_mut() {
        let stray: Vec<usize> = row.ones().filter(|&c| pivot_of[c].is_none()).collect();
        for c in stray {
            row.flip(c);
            ops.push((c, r));
        }
    }
    for (j, &c) in pivots.iter().enumerate() {
        if !rows[&c].get(c) {
            let src = pivots[j + 1..]
                .iter()
                .copied()
                .find(|r| rows[r].get(c))
                .expect("independent forms give an invertible pivot block");
            let add = rows[&src].clone();
            rows.get_mut(&c).expect("row").xor(&add);
            ops.push((src, c));
        }
        let unit = rows[&c].clone();
        for &r in &pivots {
            if r != c && rows[&r].get(c) {
                rows.get_mut(&r).expect("row").xor(&unit);
                ops.push((c, r));
            }
        }
    }
    let q = |c: usize| columns[c] as usize;
    let prep: Vec<(usize, usize)> = ops.iter().rev().map(|&(c, t)| (q(c), q(t))).collect();

    let mut copies = Vec::new();
    let mut operands = Vec::with_capacity(located.len());
    for loc in &located {
        operands.push(match loc {
            Err(k) => Operand::Qubit(q(pivots[*k])),
            Ok(combo) => {
                copies.push(combo.ones().map(|k| q(pivots[k])).collect());
                Operand::Copy(copies.len() - 1)
            }
        });
    }
    let ands = ands
        .iter()
        .enumerate()
        .map(|(i, &(_, _, t))| (operands[2 * i], operands[2 * i + 1], t))
        .collect();
    LayerPlan {
        layer,
        ands,
        prep,
        copies,
    }
}

fn emit_layer(gates: &mut Vec<QGate>, plan: &LayerPlan, copy_base: usize, compute: bool) {
    gates.push(QGate::Layer(plan.layer));
    for &(control, target) in &plan.prep {
        gates.push(QGate::Cnot { control, target });
    }
    let copy_cnots = |gates: &mut Vec<QGate>| {
        for (slot, sources) in plan.copies.iter().enumerate() {
            for &control in sources {
                gates.push(QGate::Cnot {
                    control,
                    target: copy_base + slot,
                });
            }
        }
    };
    copy_cnots(gates);
    let at = |o: Operand| match o {
        Operand::Qubit(q) => q,
        Operand::Copy(slot) => copy_base + slot,
    };
    for &(a, b, target) in &plan.ands {
        let (a, b) = (at(a), at(b));
        gates.push(if compute {
            QGate::And { a, b, target }
        } else {
            QGate::Unand { a, b, target }
        });
    }
    copy_cnots(gates);
    for &(control, target) in plan.prep.iter().rev() {
        gates.push(QGate::Cnot { control, target });
    }
}

/// Builds the reversible circuit for `net` and its resource estimate.
pub fn map_to_circuit(net: &Xag, schedule: Schedule) -> Result<(QuantumCircuit, ResourceEstimate), MapError> {
    let net = check_normalized(net)?;
    let n = net.num_inputs();
    let o = net.num_outputs();
    let claimed = claimed_ands(&net);
    let layers = and_layers(&net, schedule);

    let mut qubit = vec![0usize; net.num_nodes()];
    for (i, q) in qubit.iter_mut().enumerate().take(n + 1).skip(1) {
        *q = i - 1;
    }
    let mut next = n + o;
    for &(node, _) in &layers {
        qubit[node] = match claimed.get(&node) {
            Some(&out) => n + out,
            None => {
                next += 1;
                next - 1
            }
        };
    }
    let ancillae = next - n - o;
    let forms = node_forms(&net, |node| qubit[node] as u32);

    let mut by_layer: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for &(node, layer) in &layers {
        by_layer.entry(layer).or_default().push(node);
    }
    let triple = |node: usize| {
        let g = net.gate(node).expect("AND node");
        (g.fanins[0].node(), g.fanins[1].node(), qubit[node])
    };
    let compute: Vec<LayerPlan> = by_layer
        .iter()
        .map(|(&k, nodes)| plan_layer(k, &nodes.iter().map(|&v| triple(v)).collect::<Vec<_>>(), &forms))
        .collect();
    let uncompute: Vec<LayerPlan> = by_layer
        .iter()
        .rev()
        .filter_map(|(&k, nodes)| {
            let ands: Vec<_> = nodes
                .iter()
                .filter(|v| !claimed.contains_key(v))
                .map(|&v| triple(v))
                .collect();
            (!ands.is_empty()).then(|| plan_layer(k, &ands, &forms))
        })
        .collect();

    let copies = compute
        .iter()
        .chain(&uncompute)
        .map(|p| p.copies.len())
        .max()
        .unwrap_or(0);
    let helpers = by_layer.values().map(Vec::len).max().unwrap_or(0);
    let copy_base = n + o + ancillae;
    let qubit_count = copy_base + copies + helpers;

    let mut gates = Vec::new();
    for plan in &compute {
        emit_layer(&mut gates, plan, copy_base, true);
    }
    let outputs: Vec<usize> = (n..n + o).collect();
    for (i, s) in net.outputs().iter().enumerate() {
        if claimed.get(&s.node()) == Some(&i) {
            continue;
        }
        for &control in &forms[s.node()] {
            gates.push(QGate::Cnot {
                control: control as usize,
                target: n + i,
            });
        }
    }
    for plan in &uncompute {
        emit_layer(&mut gates, plan, copy_base, false);
    }
    for (i, s) in net.outputs().iter().enumerate() {
        if s.is_complemented() {
            gates.push(QGate::X(n + i));
        }
    }

    let circuit = QuantumCircuit {
        qubit_count,
        num_inputs: n,
        outputs,
        gates,
    };
    let estimate = ResourceEstimate {
        t_count: circuit.t_count(),
        t_depth: circuit.t_depth(),
        qubits: qubit_count,
        schedule,
        copies,
        helpers,
        ancillae,
    };
    Ok((circuit, estimate))
}

/// GF(2) rank of a set of sparse parity vectors.
fn rank(vectors: &[&[u32]]) -> usize {
    let mut pivots: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for v in vectors {
        let mut v = v.to_vec();
        while let Some(&lead) = v.first() {
            match pivots.get(&lead) {
                Some(p) => v = sym_diff(&v, p),
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// The resource estimate of [`map_to_circuit`], computed from the layer
/// census without building the gate list.
pub fn estimate_only(net: &Xag, schedule: Schedule) -> Result<ResourceEstimate, MapError> {
    let net = check_normalized(net)?;
    let claimed = claimed_ands(&net);
    let forms = node_forms(&net, |node| node as u32);
    let mut by_layer: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (node, layer) in and_layers(&net, schedule) {
        by_layer.entry(layer).or_default().push(node);
    }
    let dependent = |nodes: &mut dyn Iterator<Item = usize>| {
        let operands: Vec<&[u32]> = nodes
            .flat_map(|v| net.gate(v).expect("AND node").fanins)
            .map(|f| forms[f.node()].as_slice())
            .collect();
        operands.len() - rank(&operands)
    };
    let mut copies = 0;
    for nodes in by_layer.values() {
        copies = copies.max(dependent(&mut nodes.iter().copied()));
        let interior = &mut nodes.iter().copied().filter(|v| !claimed.contains_key(v));
        copies = copies.max(dependent(interior));
    }
    let ands: usize = by_layer.values().map(Vec::len).sum();
    let helpers = by_layer.values().map(Vec::len).max().unwrap_or(0);
    let ancillae = ands - claimed.len();
    Ok(ResourceEstimate {
        t_count: 4 * ands,
        t_depth: by_layer.len(),
        qubits: net.num_inputs() + net.num_outputs() + ancillae + helpers + copies,
        schedule,
        copies,
        helpers,
        ancillae,
    })
}

/// Simulates the circuit on 64 assignments at once; bit `l` of `inputs[i]`
/// is input `i` in lane `l`. Any AND onto a target that is nonzero in some
/// lane, or UNAND whose target differs from the AND of its controls, is a
/// fault.
pub fn simulate_circuit_words(circuit: &QuantumCircuit, inputs: &[u64]) -> Result<WordRun, SimError> {
    if inputs.len() != circuit.num_inputs {
        return Err(SimError::InputLength {
            expected: circuit.num_inputs,
            got: inputs.len(),
        });
    }
    let mut state = vec![0u64; circuit.qubit_count];
    state[..inputs.len()].copy_from_slice(inputs);
    let len = state.len();
    for (index, g) in circuit.gates.iter().enumerate() {
        let check = |q: usize| {
            if q < len {
                Ok(q)
            } else {
                Err(SimError::QubitRange { index, qubit: q })
            }
        };
        match *g {
            QGate::X(t) => state[check(t)?] ^= u64::MAX,
            QGate::Cnot { control, target } => {
                let c = state[check(control)?];
                state[check(target)?] ^= c;
            }
            QGate::And { a, b, target } => {
                let v = state[check(a)?] & state[check(b)?];
                if state[check(target)?] != 0 {
                    return Err(SimError::DirtyTarget { index, target });
                }
                state[target] = v;
            }
            QGate::Unand { a, b, target } => {
                let v = state[check(a)?] & state[check(b)?];
                if state[check(target)?] != v {
                    return Err(SimError::UncomputeMismatch { index, target });
                }
                state[target] = 0;
            }
            QGate::Layer(_) => {}
        }
    }
    let mut dirty = 0;
    for (q, &v) in state.iter().enumerate() {
        if circuit.outputs.contains(&q) {
            continue;
        }
        dirty |= if q < inputs.len() { v ^ inputs[q] } else { v };
    }
    Ok(WordRun {
        outputs: circuit.outputs.iter().map(|&q| state[q]).collect(),
        dirty,
    })
}

/// Simulates the circuit on one basis state.
pub fn simulate_circuit(circuit: &QuantumCircuit, inputs: &[bool]) -> Result<CircuitRun, SimError> {
    let words: Vec<u64> = inputs.iter().map(|&b| b as u64).collect();
    let run = simulate_circuit_words(circuit, &words)?;
    Ok(CircuitRun {
        outputs: run.outputs.iter().map(|w| w & 1 == 1).collect(),
        clean: run.dirty & 1 == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::xag::Signal;

    fn check_all_assignments(net: &Xag, circuit: &QuantumCircuit) {
        let n = net.num_inputs();
        assert!(n <= 12);
        for m in 0..1usize << n {
            let bits: Vec<bool> = (0..n).map(|i| (m >> i) & 1 == 1).collect();
            let run = simulate_circuit(circuit, &bits).unwrap();
            assert_eq!(run.outputs, net.simulate(&bits).unwrap(), "assignment {m:b}");
            assert!(run.clean, "assignment {m:b}");
        }
    }

    #[test]
    fn maj5_resources() {
        let net = samples::maj5_depth2();
        let (c, e) = map_to_circuit(&net, Schedule::Asap).unwrap();
        assert_eq!((e.t_count, e.t_depth, e.qubits), (12, 2, 11));
        assert_eq!((e.ancillae, e.helpers, e.copies), (3, 2, 0));
        assert_eq!(estimate_only(&net, Schedule::Asap).unwrap(), e);
        assert_eq!(c.qubit_count, 11);
        check_all_assignments(&net, &c);
    }

    #[test]
    fn maj5_examples() {
        let (c, _) = map_to_circuit(&samples::maj5_depth2(), Schedule::Asap).unwrap();
        let run = simulate_circuit(&c, &[true, true, false, true, false]).unwrap();
        assert_eq!(
            run,
            CircuitRun {
                outputs: vec![true],
                clean: true
            }
        );
        let run = simulate_circuit(&c, &[false; 5]).unwrap();
        assert_eq!(
            run,
            CircuitRun {
                outputs: vec![false],
                clean: true
            }
        );
    }

    #[test]
    fn single_and_output() {
        let mut net = Xag::new(2);
        let a = net.and(net.input(0), net.input(1));
        net.add_output(a).unwrap();
        let (c, e) = map_to_circuit(&net, Schedule::Asap).unwrap();
        assert_eq!((e.t_count, e.t_depth, e.qubits), (4, 1, 4));
        assert!(!c.gates.iter().any(|g| matches!(g, QGate::Unand { .. })));
        check_all_assignments(&net, &c);
    }

    #[test]
    fn xor_only_network() {
        let net = samples::parity(4);
        for s in [Schedule::Asap, Schedule::Alap] {
            let (c, e) = map_to_circuit(&net, s).unwrap();
            assert_eq!((e.t_count, e.t_depth), (0, 0));
            assert_eq!(e.qubits, 5);
            check_all_assignments(&net, &c);
        }
    }

    #[test]
    fn missing_unand_leaves_garbage() {
        let (mut c, _) = map_to_circuit(&samples::maj5_depth2(), Schedule::Asap).unwrap();
        let i = c.gates.iter().position(|g| matches!(g, QGate::Unand { .. })).unwrap();
        c.gates.remove(i);
        let clean = (0..32).all(|m| {
            let bits: Vec<bool> = (0..5).map(|i| (m >> i) & 1 == 1).collect();
            simulate_circuit(&c, &bits).unwrap().clean
        });
        assert!(!clean);
    }

    #[test]
    fn faults_report_gate_index() {
        let c = QuantumCircuit {
            qubit_count: 3,
            num_inputs: 2,
            outputs: vec![2],
            gates: vec![QGate::X(2), QGate::And { a: 0, b: 1, target: 2 }],
        };
        assert_eq!(
            simulate_circuit(&c, &[true, true]),
            Err(SimError::DirtyTarget { index: 1, target: 2 })
        );
        let c = QuantumCircuit {
            gates: vec![QGate::Unand { a: 0, b: 1, target: 2 }],
            ..c
        };
        assert_eq!(
            simulate_circuit(&c, &[true, true]),
            Err(SimError::UncomputeMismatch { index: 0, target: 2 })
        );
        let c = QuantumCircuit {
            gates: vec![QGate::X(7)],
            ..c
        };
        assert_eq!(
            simulate_circuit(&c, &[true, true]),
            Err(SimError::QubitRange { index: 0, qubit: 7 })
        );
        assert!(matches!(
            simulate_circuit(&c, &[true]),
            Err(SimError::InputLength { .. })
        ));
    }

    #[test]
    fn complemented_and_fanin_is_rejected() {
        let mut net = Xag::new(2);
        let a = net.and(!net.input(0), net.input(1));
        net.add_output(a).unwrap();
        assert_eq!(
            map_to_circuit(&net, Schedule::Asap).unwrap_err(),
            MapError::NotNormalized(3)
        );
        let fixed = net.propagate_inverters();
        let (c, e) = map_to_circuit(&fixed, Schedule::Asap).unwrap();
        assert_eq!(e.t_count, 4);
        check_all_assignments(&fixed, &c);
    }

    #[test]
    fn shared_control_needs_a_copy() {
        // x1 drives both ANDs of the single layer.
        let mut net = Xag::new(3);
        let x: Vec<Signal> = net.inputs().collect();
        let a = net.and(x[0], x[1]);
        let b = net.and(x[0], x[2]);
        net.add_output(a).unwrap();
        net.add_output(b).unwrap();
        let (c, e) = map_to_circuit(&net, Schedule::Asap).unwrap();
        assert_eq!(e.copies, 1);
        assert_eq!(e.qubits, 3 + 2 + 2 + 1);
        assert_eq!(estimate_only(&net, Schedule::Asap).unwrap(), e);
        check_all_assignments(&net, &c);
    }

    #[test]
    fn repeated_output_and_constants() {
        let mut net = Xag::new(2);
        let a = net.and(net.input(0), net.input(1));
        net.add_output(a).unwrap();
        net.add_output(!a).unwrap();
        net.add_output(Signal::ONE).unwrap();
        net.add_output(net.input(1)).unwrap();
        let (c, e) = map_to_circuit(&net, Schedule::Alap).unwrap();
        assert_eq!(e.ancillae, 0);
        assert_eq!(estimate_only(&net, Schedule::Alap).unwrap(), e);
        check_all_assignments(&net, &c);
    }

    #[test]
    fn alap_never_earlier_than_asap() {
        let net = samples::maj5_and_or().propagate_inverters();
        let asap = and_layers(&net, Schedule::Asap);
        let alap = and_layers(&net, Schedule::Alap);
        for (a, b) in asap.iter().zip(&alap) {
            assert_eq!(a.0, b.0);
            assert!(b.1 >= a.1);
        }
        for s in [Schedule::Asap, Schedule::Alap] {
            let (c, e) = map_to_circuit(&net, s).unwrap();
            assert_eq!(e.t_depth as u32, net.mult_depth());
            assert_eq!(estimate_only(&net, s).unwrap(), e);
            check_all_assignments(&net, &c);
        }
    }
}
