use super::{GateOp, Signal, Xag};

impl Xag {
    /// True when no AND gate has a complemented fanin, so inversions only
    /// remain on outputs (XOR fanins are never complemented).
    pub fn is_normalized(&self) -> bool {
        self.first_unnormalized().is_none()
    }

    pub(crate) fn first_unnormalized(&self) -> Option<usize> {
        self.gates()
            .find(|(_, g)| g.is_and() && g.fanins.iter().any(|f| f.is_complemented()))
            .map(|(n, _)| n)
    }

    /// Rewrites complemented AND fanins with XOR gates so that inversions only
    /// appear on outputs:
    ///
    /// * `!a & b  = b ^ (a & b)`
    /// * `!a & !b = !(a ^ b ^ (a & b))`
    ///
    /// Each AND maps to exactly one AND and XORs are free, so neither the
    /// multiplicative complexity nor the depth changes.
    pub fn propagate_inverters(&self) -> Xag {
        let mut out = Xag::new(self.num_inputs);
        let mut map: Vec<Signal> = (0..=self.num_inputs).map(|n| Signal::new(n, false)).collect();
        let tr = |map: &[Signal], s: Signal| map[s.node()].complement_if(s.is_complemented());
        for (_, g) in self.gates() {
            let a = tr(&map, g.fanins[0]);
            let b = tr(&map, g.fanins[1]);
            let s = match g.op {
                GateOp::Xor => out.xor(a, b),
                GateOp::And => match (a.is_complemented(), b.is_complemented()) {
                    (false, false) => out.and(a, b),
                    (true, false) => {
                        let p = out.and(a.regular(), b);
                        out.xor(b, p)
                    }
                    (false, true) => {
                        let p = out.and(a, b.regular());
                        out.xor(a, p)
                    }
                    (true, true) => {
                        let (a, b) = (a.regular(), b.regular());
                        let p = out.and(a, b);
                        let ab = out.xor(a, b);
                        !out.xor(ab, p)
                    }
                },
            };
            map.push(s);
        }
        for &o in &self.outputs {
            out.outputs.push(tr(&map, o));
        }
        out.output_names = vec![None; out.outputs.len()];
        out.copy_names_from(self);
        out
    }

    /// Drops every node outside the transitive fanin of the outputs and
    /// renumbers the survivors in their original order.
    pub fn sweep_dead(&self) -> Xag {
        let live = self.live_nodes();
        let mut out = Xag::new(self.num_inputs);
        let mut map: Vec<Signal> = (0..=self.num_inputs).map(|n| Signal::new(n, false)).collect();
        let tr = |map: &[Signal], s: Signal| map[s.node()].complement_if(s.is_complemented());
        for (node, g) in self.gates() {
            if live[node] {
                let a = tr(&map, g.fanins[0]);
                let b = tr(&map, g.fanins[1]);
                map.push(out.add_gate(g.op, a, b).expect("fanins precede gates"));
            } else {
                map.push(Signal::ZERO);
            }
        }
        for &o in &self.outputs {
            out.outputs.push(tr(&map, o));
        }
        out.output_names = vec![None; out.outputs.len()];
        out.copy_names_from(self);
        out
    }
}
