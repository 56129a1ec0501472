use super::{GateOp, Signal, Xag};
use crate::error::XagError;
use crate::truth_table::{TruthTable, MAX_VARS};

impl Xag {
    /// Evaluates every output on one input assignment.
    pub fn simulate(&self, assignment: &[bool]) -> Result<Vec<bool>, XagError> {
        let words: Vec<u64> = assignment.iter().map(|&b| if b { 1 } else { 0 }).collect();
        Ok(self.simulate_words(&words)?.into_iter().map(|w| w & 1 == 1).collect())
    }

    /// Evaluates 64 assignments at once; bit `k` of `inputs[i]` is the value of
    /// input `i` in assignment `k`.
    pub fn simulate_words(&self, inputs: &[u64]) -> Result<Vec<u64>, XagError> {
        let values = self.node_words(inputs)?;
        Ok(self.outputs.iter().map(|&s| signal_word(&values, s)).collect())
    }

    /// Word value of every node for the 64 given assignments.
    pub fn node_words(&self, inputs: &[u64]) -> Result<Vec<u64>, XagError> {
        if inputs.len() != self.num_inputs {
            return Err(XagError::AssignmentLength {
                expected: self.num_inputs,
                got: inputs.len(),
            });
        }
        let mut values = Vec::with_capacity(self.num_nodes());
        values.push(0);
        values.extend_from_slice(inputs);
        for g in &self.gates {
            let a = signal_word(&values, g.fanins[0]);
            let b = signal_word(&values, g.fanins[1]);
            values.push(match g.op {
                GateOp::Xor => a ^ b,
                GateOp::And => a & b,
            });
        }
        Ok(values)
    }

    /// Exhaustive truth table of every output over the primary inputs.
    pub fn truth_tables(&self) -> Result<Vec<TruthTable>, XagError> {
        let n = self.num_inputs as u32;
        if n > MAX_VARS {
            return Err(XagError::TooManyInputs(self.num_inputs));
        }
        let vars: Vec<TruthTable> = (0..n).map(|v| TruthTable::var(n, v)).collect();
        let chunks = TruthTable::zero(n).words().len();
        let mut out: Vec<Vec<u64>> = vec![Vec::with_capacity(chunks); self.outputs.len()];
        for c in 0..chunks {
            let inputs: Vec<u64> = vars.iter().map(|t| t.words()[c]).collect();
            for (o, w) in self.simulate_words(&inputs)?.into_iter().enumerate() {
                out[o].push(w);
            }
        }
        Ok(out.into_iter().map(|w| TruthTable::from_words(n, w)).collect())
    }
}

pub(crate) fn signal_word(values: &[u64], s: Signal) -> u64 {
    let v = values[s.node()];
    if s.is_complemented() {
        !v
    } else {
        v
    }
}
