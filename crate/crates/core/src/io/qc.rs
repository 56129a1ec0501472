use std::fmt::Write;

use crate::quantum::{QGate, QuantumCircuit};

/// Renders a circuit as text: a `qc <qubits>` header, `in`/`out` lines
/// naming the input and output qubits, then one gate per line with a
/// `-- layer <k>` line at the start of each AND layer.
pub fn write_qc(circuit: &QuantumCircuit) -> String {
    let mut out = String::new();
    writeln!(out, "qc {}", circuit.qubit_count).unwrap();
    for q in 0..circuit.num_inputs {
        writeln!(out, "in q{q}").unwrap();
    }
    for q in &circuit.outputs {
        writeln!(out, "out q{q}").unwrap();
    }
    for g in &circuit.gates {
        match *g {
            QGate::X(t) => writeln!(out, "x q{t}"),
            QGate::Cnot { control, target } => writeln!(out, "cnot q{control} q{target}"),
            QGate::And { a, b, target } => writeln!(out, "and q{a} q{b} q{target}"),
            QGate::Unand { a, b, target } => writeln!(out, "unand q{a} q{b} q{target}"),
            QGate::Layer(k) => writeln!(out, "-- layer {k}"),
        }
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::{map_to_circuit, Schedule};
    use crate::samples;
    use crate::xag::Xag;

    /// Layer blocks that contain at least one compute AND.
    fn and_blocks(text: &str) -> usize {
        text.split("-- layer ")
            .skip(1)
            .filter(|block| block.lines().any(|l| l.starts_with("and ")))
            .count()
    }

    #[test]
    fn maj5_listing() {
        let (c, _) = map_to_circuit(&samples::maj5_depth2(), Schedule::Asap).unwrap();
        let text = write_qc(&c);
        assert!(text.starts_with("qc 11\n"));
        assert_eq!(and_blocks(&text), 2);
        assert_eq!(text.lines().filter(|l| l.starts_with("and ")).count(), 3);
        assert_eq!(text.lines().filter(|l| l.starts_with("unand ")).count(), 3);
        assert_eq!(write_qc(&c), text);
    }

    #[test]
    fn xor_only_has_no_and() {
        let (c, _) = map_to_circuit(&samples::parity(3), Schedule::Asap).unwrap();
        let text = write_qc(&c);
        assert!(!text.lines().any(|l| l.starts_with("and ")));
        assert_eq!(and_blocks(&text), 0);
    }

    #[test]
    fn single_and_listing() {
        let mut net = Xag::new(2);
        let a = net.and(net.input(0), net.input(1));
        net.add_output(a).unwrap();
        let (c, _) = map_to_circuit(&net, Schedule::Asap).unwrap();
        assert_eq!(write_qc(&c), "qc 4\nin q0\nin q1\nout q2\n-- layer 1\nand q0 q1 q2\n");
    }
}
