//! Cut-based multiplicative-depth balancing.
//!
//! Nodes are visited in topological order. For every non-trivial cut the cut
//! function is resynthesized over the best known implementations of its
//! leaves: each product term becomes an AND tree that pairs the two
//! lowest-level operands first, and the products are joined by XORs, which
//! add no AND-depth. The candidate with the lowest level wins; the original
//! gate rebuilt over its fanins' best implementations is always a candidate,
//! so no node ever gets deeper.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::rc::Rc;

use crate::cuts::{enumerate_cuts, DEFAULT_CUT_LIMIT, DEFAULT_CUT_SIZE};
use crate::error::BalanceError;
use crate::esop::{anf_from_tt, Esop, EsopCost, Polarity};
use crate::espp::{espp_from_esop, Espp};
use crate::truth_table::TruthTable;
use crate::xag::{GateOp, Signal, Xag};

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Resynthesize cut functions from ESOPs.
    #[default]
    Esop,
    /// Additionally try pseudoproduct forms obtained by greedy merging.
    Espp,
}

/// Resynthesis parameters for one balancing run.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ResynthChoice {
    pub strategy: Strategy,
    /// Reshaping passes granted to the ESOP minimizer.
    pub effort: usize,
    pub cost: EsopCost,
    pub cut_size: usize,
    pub cut_limit: usize,
    pub max_rounds: usize,
}

impl Default for ResynthChoice {
    fn default() -> Self {
        Self {
            strategy: Strategy::Esop,
            effort: 4,
            cost: EsopCost::Cubes,
            cut_size: DEFAULT_CUT_SIZE,
            cut_limit: DEFAULT_CUT_LIMIT,
            max_rounds: 100,
        }
    }
}

/// A network under construction that tracks the AND-level of every node.
#[derive(Clone, Debug)]
pub struct LeveledXag {
    net: Xag,
    level: Vec<u32>,
}

impl LeveledXag {
    pub fn new(num_inputs: usize) -> Self {
        Self {
            net: Xag::new(num_inputs),
            level: vec![0; num_inputs + 1],
        }
    }

    pub fn input(&self, i: usize) -> Signal {
        self.net.input(i)
    }

    pub fn level(&self, s: Signal) -> u32 {
        self.level[s.node()]
    }

    fn record(&mut self, s: Signal) -> Signal {
        while self.level.len() < self.net.num_nodes() {
            let node = self.level.len();
            let g = *self.net.gate(node).expect("new node is a gate");
            let l = self.level[g.fanins[0].node()].max(self.level[g.fanins[1].node()]);
            self.level.push(l + g.is_and() as u32);
        }
        s
    }

    pub fn and(&mut self, a: Signal, b: Signal) -> Signal {
        let s = self.net.and(a, b);
        self.record(s)
    }

    pub fn xor(&mut self, a: Signal, b: Signal) -> Signal {
        let s = self.net.xor(a, b);
        self.record(s)
    }

    pub fn gate(&mut self, op: GateOp, a: Signal, b: Signal) -> Signal {
        match op {
            GateOp::And => self.and(a, b),
            GateOp::Xor => self.xor(a, b),
        }
    }

    pub fn xor_many(&mut self, signals: &[Signal]) -> Signal {
        let s = self.net.xor_many(signals);
        self.record(s)
    }

    pub fn network(&self) -> &Xag {
        &self.net
    }

    pub fn into_network(self) -> Xag {
        self.net
    }
}

/// Builds the AND of `literals` as a tree that always combines the two
/// lowest-level operands (ties in insertion order). The resulting level is
/// the minimum over all binary AND trees on those operand levels.
pub fn balance_cube(dst: &mut LeveledXag, literals: &[Signal]) -> Result<Signal, BalanceError> {
    if literals.is_empty() {
        return Err(BalanceError::ConstantTerm);
    }
    let mut queue: BinaryHeap<Reverse<(u32, usize, Signal)>> = BinaryHeap::new();
    let mut seq = 0;
    for &s in literals {
        queue.push(Reverse((dst.level(s), seq, s)));
        seq += 1;
    }
    while queue.len() > 1 {
        let Reverse((_, _, u)) = queue.pop().unwrap();
        let Reverse((_, _, v)) = queue.pop().unwrap();
        let w = dst.and(u, v);
        queue.push(Reverse((dst.level(w), seq, w)));
        seq += 1;
    }
    Ok(queue.pop().unwrap().0 .2)
}

/// Level reached by [`balance_cube`] on operands at `levels`.
pub fn balanced_level(levels: impl IntoIterator<Item = u32>) -> Option<u32> {
    let mut queue: BinaryHeap<Reverse<u32>> = levels.into_iter().map(Reverse).collect();
    while queue.len() > 1 {
        let Reverse(a) = queue.pop().unwrap();
        let Reverse(b) = queue.pop().unwrap();
        queue.push(Reverse(a.max(b) + 1));
    }
    queue.pop().map(|Reverse(l)| l)
}

fn leaf(leaves: &[Signal], index: usize) -> Result<Signal, BalanceError> {
    leaves.get(index).copied().ok_or(BalanceError::MissingLeaf {
        index,
        leaves: leaves.len(),
    })
}

/// Realizes an ESOP over `leaves`: one balanced AND tree per cube, joined by
/// a XOR tree. Negative literals become complemented edges.
pub fn balance_esop(dst: &mut LeveledXag, esop: &Esop, leaves: &[Signal]) -> Result<Signal, BalanceError> {
    let mut products = Vec::with_capacity(esop.len());
    let mut constant = false;
    for cube in esop.cubes() {
        let mut lits = Vec::new();
        for v in 0..esop.var_count() {
            match cube.polarity(v) {
                Polarity::Absent => {}
                Polarity::Positive => lits.push(leaf(leaves, v as usize)?),
                Polarity::Negative => lits.push(!leaf(leaves, v as usize)?),
            }
        }
        if lits.is_empty() {
            constant = !constant;
        } else {
            products.push(balance_cube(dst, &lits)?);
        }
    }
    Ok(dst.xor_many(&products).complement_if(constant))
}

/// Realizes an ESPP over `leaves`: each parity literal is a XOR tree over its
/// leaves, then each term is balanced like a cube.
pub fn balance_espp(dst: &mut LeveledXag, espp: &Espp, leaves: &[Signal]) -> Result<Signal, BalanceError> {
    let mut products = Vec::with_capacity(espp.len());
    let mut constant = false;
    for term in espp.terms() {
        let mut lits = Vec::with_capacity(term.len());
        for (index, positive) in term.literals() {
            let mut parts = Vec::new();
            for v in 0..32 {
                if index >> v & 1 == 1 {
                    parts.push(leaf(leaves, v)?);
                }
            }
            lits.push(dst.xor_many(&parts).complement_if(!positive));
        }
        if lits.is_empty() {
            constant = !constant;
        } else {
            products.push(balance_cube(dst, &lits)?);
        }
    }
    Ok(dst.xor_many(&products).complement_if(constant))
}

/// Predicted (level, AND count, gate count) of a candidate. Structural
/// sharing is ignored, so the built result can only be cheaper.
type Cost = (u32, usize, usize);

fn esop_cost(esop: &Esop, levels: &[u32]) -> Cost {
    let mut level = 0;
    let mut ands = 0;
    let mut products = 0;
    for cube in esop.cubes() {
        let support = cube.support();
        if support == 0 {
            continue;
        }
        let lits = (0..32).filter(|v| support >> v & 1 == 1).map(|v| levels[v as usize]);
        level = level.max(balanced_level(lits).unwrap());
        ands += cube.degree() as usize - 1;
        products += 1;
    }
    (level, ands, ands + products.max(1) - 1)
}

fn espp_cost(espp: &Espp, levels: &[u32]) -> Cost {
    let mut level = 0;
    let mut ands = 0;
    let mut xors = 0;
    let mut products = 0;
    for term in espp.terms() {
        if term.is_empty() {
            continue;
        }
        let mut lits = Vec::with_capacity(term.len());
        for (index, _) in term.literals() {
            let l = (0..32)
                .filter(|v| index >> v & 1 == 1)
                .map(|v| levels[v as usize])
                .max()
                .unwrap();
            lits.push(l);
            xors += index.count_ones() as usize - 1;
        }
        level = level.max(balanced_level(lits).unwrap());
        ands += term.and_cost();
        products += 1;
    }
    (level, ands, ands + xors + products.max(1) - 1)
}

/// Resynthesis forms of one cut function, shared between cuts with equal
/// truth tables.
struct Forms {
    esops: Vec<Esop>,
    espp: Option<Espp>,
}

impl Forms {
    fn new(tt: &TruthTable, choice: &ResynthChoice) -> Self {
        let anf = anf_from_tt(tt);
        let min = anf.minimize(choice.effort, choice.cost);
        let espp = match choice.strategy {
            Strategy::Espp => Some(espp_from_esop(&min).greedy_merge()),
            Strategy::Esop => None,
        };
        let esops = if min == anf { vec![min] } else { vec![min, anf] };
        Forms { esops, espp }
    }
}

enum Candidate {
    Fallback,
    Constant(bool),
    Wire(Signal),
    Esop(Rc<Forms>, usize, Vec<Signal>),
    Espp(Rc<Forms>, Vec<Signal>),
}

/// If `tt` equals a single variable or its complement, returns it.
fn projection(tt: &TruthTable) -> Option<(usize, bool)> {
    let n = tt.num_vars();
    (0..n).find_map(|v| {
        let x = TruthTable::var(n, v);
        if *tt == x {
            Some((v as usize, false))
        } else if *tt == x.not() {
            Some((v as usize, true))
        } else {
            None
        }
    })
}

/// One pass of cut-based balancing. The result is swept; its
/// multiplicative depth never exceeds that of `net`.
pub fn balance_network(net: &Xag, choice: &ResynthChoice) -> Result<Xag, BalanceError> {
    let cuts = enumerate_cuts(net, choice.cut_size, choice.cut_limit)?;
    let live = net.live_nodes();
    let mut dst = LeveledXag::new(net.num_inputs());
    let mut best: Vec<Signal> = (0..=net.num_inputs()).map(|n| Signal::new(n, false)).collect();
    best.resize(net.num_nodes(), Signal::ZERO);
    let mut forms: HashMap<TruthTable, Rc<Forms>> = HashMap::new();
    let tr = |best: &[Signal], s: Signal| best[s.node()].complement_if(s.is_complemented());

    for (node, gate) in net.gates() {
        if !live[node] {
            continue;
        }
        let a = tr(&best, gate.fanins[0]);
        let b = tr(&best, gate.fanins[1]);
        let fallback_level = dst.level(a).max(dst.level(b)) + gate.is_and() as u32;
        let mut winner_cost: Cost = (fallback_level, gate.is_and() as usize, 1);
        let mut winner = Candidate::Fallback;

        for cut in cuts.cuts(node).iter().filter(|c| !c.is_trivial(node)) {
            let leaves: Vec<Signal> = cut.leaves().iter().map(|&l| best[l]).collect();
            let levels: Vec<u32> = leaves.iter().map(|&s| dst.level(s)).collect();
            let tt = cut.tt();
            if tt.is_zero() || tt.is_one() {
                let cost = (0, 0, 0);
                if cost < winner_cost {
                    winner_cost = cost;
                    winner = Candidate::Constant(tt.is_one());
                }
                continue;
            }
            if let Some((v, c)) = projection(tt) {
                let cost = (levels[v], 0, 0);
                if cost < winner_cost {
                    winner_cost = cost;
                    winner = Candidate::Wire(leaves[v].complement_if(c));
                }
                continue;
            }
            let f = forms
                .entry(tt.clone())
                .or_insert_with(|| Rc::new(Forms::new(tt, choice)))
                .clone();
            for (i, e) in f.esops.iter().enumerate() {
                let cost = esop_cost(e, &levels);
                if cost < winner_cost {
                    winner_cost = cost;
                    winner = Candidate::Esop(f.clone(), i, leaves.clone());
                }
            }
            if let Some(p) = &f.espp {
                let cost = espp_cost(p, &levels);
                if cost < winner_cost {
                    winner_cost = cost;
                    winner = Candidate::Espp(f.clone(), leaves.clone());
                }
            }
        }

        best[node] = match winner {
            Candidate::Fallback => dst.gate(gate.op, a, b),
            Candidate::Constant(one) => Signal::ZERO.complement_if(one),
            Candidate::Wire(s) => s,
            Candidate::Esop(f, i, leaves) => balance_esop(&mut dst, &f.esops[i], &leaves)?,
            Candidate::Espp(f, leaves) => balance_espp(&mut dst, f.espp.as_ref().expect("espp form"), &leaves)?,
        };
    }

    let mut out = dst.into_network();
    let outputs: Vec<Signal> = net.outputs().iter().map(|&o| tr(&best, o)).collect();
    out.set_outputs(outputs).expect("outputs refer to built nodes");
    let mut out = out.sweep_dead();
    for i in 0..net.num_inputs() {
        if let Some(name) = net.input_name(i) {
            out.set_input_name(i, name);
        }
    }
    for i in 0..net.num_outputs() {
        if let Some(name) = net.output_name(i) {
            out.set_output_name(i, name);
        }
    }
    Ok(out)
}

/// Repeats [`balance_network`] while the multiplicative depth strictly
/// decreases, up to `choice.max_rounds` passes. Returns the best network and
/// the number of passes run.
pub fn optimize_to_fixpoint(net: &Xag, choice: &ResynthChoice) -> Result<(Xag, usize), BalanceError> {
    if choice.max_rounds == 0 {
        return Err(BalanceError::MaxRounds);
    }
    let mut current = net.clone();
    let mut depth = current.mult_depth();
    let mut rounds = 0;
    while rounds < choice.max_rounds {
        rounds += 1;
        let next = balance_network(&current, choice)?;
        let next_depth = next.mult_depth();
        if next_depth >= depth {
            break;
        }
        current = next;
        depth = next_depth;
    }
    Ok((current, rounds))
}
