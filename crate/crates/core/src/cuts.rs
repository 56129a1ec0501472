//! k-feasible cut enumeration with truth tables computed during merging.

use crate::error::CutError;
use crate::truth_table::TruthTable;
use crate::xag::{GateOp, Xag};

pub const DEFAULT_CUT_SIZE: usize = 6;
pub const DEFAULT_CUT_LIMIT: usize = 25;

/// A set of leaves (sorted node ids) and the root's function over them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    leaves: Vec<usize>,
    tt: TruthTable,
    signature: u64,
}

fn signature(leaves: &[usize]) -> u64 {
    leaves.iter().fold(0, |acc, &l| acc | 1 << (l % 64))
}

impl Cut {
    fn new(leaves: Vec<usize>, tt: TruthTable) -> Self {
        let signature = signature(&leaves);
        Self { leaves, tt, signature }
    }

    pub fn trivial(node: usize) -> Self {
        Self::new(vec![node], TruthTable::var(1, 0))
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    /// The root function over the leaves, variable `j` being `leaves[j]`.
    pub fn tt(&self) -> &TruthTable {
        &self.tt
    }

    pub fn size(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_trivial(&self, root: usize) -> bool {
        self.leaves.len() == 1 && self.leaves[0] == root
    }
}

/// Cuts of every node, indexed by node id. Gates and inputs always carry
/// their trivial cut first.
#[derive(Clone, Debug)]
pub struct CutSet {
    cuts: Vec<Vec<Cut>>,
    k: usize,
}

impl CutSet {
    pub fn cuts(&self, node: usize) -> &[Cut] {
        &self.cuts[node]
    }

    pub fn cut_size(&self) -> usize {
        self.k
    }

    pub fn total(&self) -> usize {
        self.cuts.iter().map(Vec::len).sum()
    }
}

fn merge_leaves(a: &[usize], b: &[usize], k: usize) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(k);
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x == y => {
                i += 1;
                j += 1;
                x
            }
            (Some(&x), Some(&y)) if x < y => {
                i += 1;
                x
            }
            (Some(_), Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        if out.len() == k {
            return None;
        }
        out.push(next);
    }
    Some(out)
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|s| it.any(|b| b == s))
}

fn positions(sub: &[usize], sup: &[usize]) -> Vec<u32> {
    sub.iter()
        .map(|l| sup.binary_search(l).expect("subset") as u32)
        .collect()
}

/// Enumerates up to `cut_limit` non-trivial `k`-feasible cuts per node.
///
/// Candidate cuts are the pairwise unions of the fanin cuts. Duplicates and
/// cuts that contain another candidate are dropped, and the rest are ranked
/// by size, then by the highest AND-level among the leaves, then
/// lexicographically.
pub fn enumerate_cuts(net: &Xag, k: usize, cut_limit: usize) -> Result<CutSet, CutError> {
    if !(2..=16).contains(&k) {
        return Err(CutError::CutSize(k));
    }
    if cut_limit == 0 {
        return Err(CutError::CutLimit);
    }
    let level = net.levels();
    let mut cuts: Vec<Vec<Cut>> = Vec::with_capacity(net.num_nodes());
    cuts.push(vec![Cut::new(Vec::new(), TruthTable::zero(0))]);
    for node in 1..=net.num_inputs() {
        cuts.push(vec![Cut::trivial(node)]);
    }
    for (node, gate) in net.gates() {
        let [fa, fb] = gate.fanins;
        let (ca, cb) = (&cuts[fa.node()], &cuts[fb.node()]);
        let mut cand: Vec<(Vec<usize>, usize, usize)> = Vec::new();
        for (i, c1) in ca.iter().enumerate() {
            for (j, c2) in cb.iter().enumerate() {
                if (c1.signature | c2.signature).count_ones() as usize > k {
                    continue;
                }
                if let Some(u) = merge_leaves(&c1.leaves, &c2.leaves, k) {
                    cand.push((u, i, j));
                }
            }
        }
        cand.sort_by(|x, y| x.0.len().cmp(&y.0.len()).then_with(|| x.0.cmp(&y.0)));
        cand.dedup_by(|x, y| x.0 == y.0);
        let mut kept: Vec<(Vec<usize>, u64, usize, usize)> = Vec::with_capacity(cand.len());
        for (leaves, i, j) in cand {
            let sig = signature(&leaves);
            let dominated = kept
                .iter()
                .any(|(l, s, _, _)| s & !sig == 0 && l.len() < leaves.len() && is_subset(l, &leaves));
            if !dominated {
                kept.push((leaves, sig, i, j));
            }
        }
        let max_level = |l: &[usize]| l.iter().map(|&n| level[n]).max().unwrap_or(0);
        kept.sort_by(|x, y| {
            x.0.len()
                .cmp(&y.0.len())
                .then_with(|| max_level(&x.0).cmp(&max_level(&y.0)))
                .then_with(|| x.0.cmp(&y.0))
        });
        kept.truncate(cut_limit);

        let mut node_cuts = Vec::with_capacity(kept.len() + 1);
        node_cuts.push(Cut::trivial(node));
        for (leaves, _, i, j) in kept {
            let (c1, c2) = (&ca[i], &cb[j]);
            let n = leaves.len() as u32;
            let t1 = c1
                .tt
                .expand(n, &positions(&c1.leaves, &leaves))
                .complement_if(fa.is_complemented());
            let t2 = c2
                .tt
                .expand(n, &positions(&c2.leaves, &leaves))
                .complement_if(fb.is_complemented());
            let tt = match gate.op {
                GateOp::And => t1.and(&t2),
                GateOp::Xor => t1.xor(&t2),
            };
            node_cuts.push(Cut::new(leaves, tt));
        }
        cuts.push(node_cuts);
    }
    Ok(CutSet { cuts, k })
}

/// Simulates the cone of `root` over `leaves` (sorted, distinct).
pub fn cut_function(net: &Xag, root: usize, leaves: &[usize]) -> Result<TruthTable, CutError> {
    if root >= net.num_nodes() {
        return Err(CutError::UnknownRoot(root));
    }
    if leaves.len() > 16 {
        return Err(CutError::TooManyLeaves(leaves.len()));
    }
    let n = leaves.len() as u32;
    let mut in_cone = vec![false; root + 1];
    let mut reached = vec![false; leaves.len()];
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        if in_cone[node] {
            continue;
        }
        in_cone[node] = true;
        if let Ok(pos) = leaves.binary_search(&node) {
            reached[pos] = true;
            continue;
        }
        match net.gate(node) {
            Some(g) => stack.extend(g.fanins.iter().map(|f| f.node())),
            None if node == 0 => {}
            None => return Err(CutError::InvalidCut { root, escaped: node }),
        }
    }
    if let Some(pos) = reached.iter().position(|r| !r) {
        return Err(CutError::UnusedLeaf {
            root,
            leaf: leaves[pos],
        });
    }
    let mut value: Vec<Option<TruthTable>> = vec![None; root + 1];
    for node in 0..=root {
        if !in_cone[node] {
            continue;
        }
        let tt = if let Ok(pos) = leaves.binary_search(&node) {
            TruthTable::var(n, pos as u32)
        } else if node == 0 {
            TruthTable::zero(n)
        } else {
            let g = net.gate(node).expect("checked above");
            let get = |s: crate::xag::Signal| {
                value[s.node()]
                    .as_ref()
                    .expect("fanin evaluated")
                    .clone()
                    .complement_if(s.is_complemented())
            };
            let (a, b) = (get(g.fanins[0]), get(g.fanins[1]));
            match g.op {
                GateOp::And => a.and(&b),
                GateOp::Xor => a.xor(&b),
            }
        };
        value[node] = Some(tt);
    }
    Ok(value[root].take().expect("root evaluated"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn inputs_have_only_the_trivial_cut() {
        let net = samples::maj5_depth2();
        let cuts = enumerate_cuts(&net, 6, 25).unwrap();
        for i in 1..=5 {
            assert_eq!(cuts.cuts(i).len(), 1);
            assert!(cuts.cuts(i)[0].is_trivial(i));
        }
    }

    #[test]
    fn two_input_and() {
        let mut net = Xag::new(2);
        let g = net.and(net.input(0), net.input(1));
        net.add_output(g).unwrap();
        let cuts = enumerate_cuts(&net, 2, 25).unwrap();
        let leaves: Vec<_> = cuts.cuts(g.node()).iter().map(|c| c.leaves().to_vec()).collect();
        assert_eq!(leaves, vec![vec![g.node()], vec![1, 2]]);
        assert_eq!(cuts.cuts(g.node())[1].tt().as_u64(), 0b1000);
    }

    #[test]
    fn majority_root_has_the_full_input_cut() {
        let net = samples::maj5_depth2();
        let cuts = enumerate_cuts(&net, 6, 25).unwrap();
        let a3 = net.gates().rev().find(|(_, g)| g.is_and()).unwrap().0;
        let full = cuts
            .cuts(a3)
            .iter()
            .find(|c| c.leaves() == [1, 2, 3, 4, 5])
            .expect("cut {x1..x5}");
        // the root a3 computes maj5 ^ x1
        for m in 0..32usize {
            let maj = m.count_ones() >= 3;
            assert_eq!(full.tt().get(m), maj ^ (m & 1 == 1));
        }
    }

    #[test]
    fn trivial_cut_function_is_a_projection() {
        let net = samples::maj5_depth2();
        let tt = cut_function(&net, 9, &[9]).unwrap();
        assert_eq!(tt.to_string(), "10");
    }

    #[test]
    fn support_normalization() {
        let mut net = Xag::new(9);
        let a = net.and(net.input(0), net.input(2));
        let b = net.and(net.input(3), net.input(8));
        let ta = cut_function(&net, a.node(), &[1, 3]).unwrap();
        let tb = cut_function(&net, b.node(), &[4, 9]).unwrap();
        assert_eq!(ta.to_string(), "1000");
        assert_eq!(ta, tb);
    }

    #[test]
    fn maj3_cone() {
        let mut net = Xag::new(3);
        let x: Vec<_> = net.inputs().collect();
        let f = samples::threshold_and_or(&mut net, &x, 2);
        let tt = cut_function(&net, f.node(), &[1, 2, 3])
            .unwrap()
            .complement_if(f.is_complemented());
        assert_eq!(tt.as_u64(), 0b1110_1000);
    }

    #[test]
    fn invalid_cuts_are_reported() {
        let net = samples::maj5_depth2();
        let a3 = net.gates().rev().find(|(_, g)| g.is_and()).unwrap().0;
        assert!(matches!(
            cut_function(&net, a3, &[1, 2]),
            Err(CutError::InvalidCut { .. })
        ));
        assert!(matches!(
            cut_function(&net, 7, &[1, 2, 3, 4, 5]),
            Err(CutError::UnusedLeaf { .. })
        ));
        assert_eq!(cut_function(&net, 999, &[1]), Err(CutError::UnknownRoot(999)));
    }

    #[test]
    fn parameter_ranges() {
        let net = samples::maj5_depth2();
        assert_eq!(enumerate_cuts(&net, 1, 25).unwrap_err(), CutError::CutSize(1));
        assert_eq!(enumerate_cuts(&net, 17, 25).unwrap_err(), CutError::CutSize(17));
        assert_eq!(enumerate_cuts(&net, 4, 0).unwrap_err(), CutError::CutLimit);
    }

    #[test]
    fn cut_limit_bounds_non_trivial_cuts() {
        let net = samples::maj5_and_or();
        let cuts = enumerate_cuts(&net, 6, 3).unwrap();
        for (node, _) in net.gates() {
            assert!(cuts.cuts(node).len() <= 4);
            assert!(cuts.cuts(node)[0].is_trivial(node));
        }
    }
}
