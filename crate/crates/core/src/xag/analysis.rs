use super::{GateOp, Xag};

/// Per-node AND-levels and reverse levels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelInfo {
    /// Earliest AND-layer of each node, indexed by node id.
    pub level: Vec<u32>,
    /// Latest AND-layer of each node that keeps the network depth.
    pub rlevel: Vec<u32>,
    /// Largest level over all nodes.
    pub depth: u32,
}

impl LevelInfo {
    /// `rlevel - level`; the room an AND gate has to move without raising depth.
    pub fn slack(&self, node: usize) -> u32 {
        self.rlevel[node] - self.level[node]
    }
}

impl Xag {
    /// Forward AND-levels: inputs are at 0, XOR takes the fanin maximum and
    /// AND adds one to it.
    pub fn levels(&self) -> Vec<u32> {
        let mut level = vec![0u32; self.num_nodes()];
        for (node, g) in self.gates() {
            let l = level[g.fanins[0].node()].max(level[g.fanins[1].node()]);
            level[node] = l + g.is_and() as u32;
        }
        level
    }

    pub fn compute_levels(&self) -> LevelInfo {
        let level = self.levels();
        let depth = level.iter().copied().max().unwrap_or(0);
        let mut rlevel = vec![depth; self.num_nodes()];
        for (node, g) in self.gates().rev() {
            let r = rlevel[node] - g.is_and() as u32;
            for f in g.fanins {
                let slot = &mut rlevel[f.node()];
                *slot = (*slot).min(r);
            }
        }
        LevelInfo { level, rlevel, depth }
    }

    /// Nodes in the transitive fanin of some output.
    pub fn live_nodes(&self) -> Vec<bool> {
        let mut live = vec![false; self.num_nodes()];
        for s in &self.outputs {
            live[s.node()] = true;
        }
        for (node, g) in self.gates().rev() {
            if live[node] {
                live[g.fanins[0].node()] = true;
                live[g.fanins[1].node()] = true;
            }
        }
        live
    }

    /// Multiplicative depth: the largest number of AND gates on any
    /// input-to-output path.
    pub fn mult_depth(&self) -> u32 {
        let level = self.levels();
        self.outputs.iter().map(|s| level[s.node()]).max().unwrap_or(0)
    }

    /// Multiplicative complexity: the number of live AND gates.
    pub fn mult_complexity(&self) -> usize {
        let live = self.live_nodes();
        self.gates().filter(|(n, g)| live[*n] && g.op == GateOp::And).count()
    }

    /// Conventional depth counting every gate, as reported by `stats`.
    pub fn general_depth(&self) -> u32 {
        let mut level = vec![0u32; self.num_nodes()];
        for (node, g) in self.gates() {
            level[node] = 1 + level[g.fanins[0].node()].max(level[g.fanins[1].node()]);
        }
        self.outputs.iter().map(|s| level[s.node()]).max().unwrap_or(0)
    }
}
