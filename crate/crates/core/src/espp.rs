//! Exclusive sums of pseudoproducts.
//!
//! A pseudoproduct is an AND of parity literals. Literal index `i` stands for
//! the parity of the variables at the set bits of `i` (variable `j` at bit
//! `j`), so `1 << j` is plain `x_{j+1}`. Absent indices are omitted literals.

use std::collections::BTreeMap;
use std::fmt;

use crate::esop::{Esop, Polarity};
use crate::truth_table::TruthTable;

/// Sparse polarity map: `true` for the parity itself, `false` for its
/// complement.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pseudoproduct {
    lits: BTreeMap<u32, bool>,
}

impl Pseudoproduct {
    pub fn new(lits: impl IntoIterator<Item = (u32, bool)>) -> Self {
        let lits: BTreeMap<u32, bool> = lits.into_iter().collect();
        assert!(!lits.contains_key(&0), "index 0 is the empty parity");
        Pseudoproduct { lits }
    }

    pub fn literals(&self) -> impl Iterator<Item = (u32, bool)> + '_ {
        self.lits.iter().map(|(&i, &p)| (i, p))
    }

    pub fn polarity(&self, index: u32) -> Option<bool> {
        self.lits.get(&index).copied()
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    /// True when every literal is a single variable.
    pub fn is_cube(&self) -> bool {
        self.lits.keys().all(|i| i.count_ones() == 1)
    }

    pub fn eval(&self, assignment: u32) -> bool {
        self.lits
            .iter()
            .all(|(&i, &p)| ((i & assignment).count_ones() & 1 == 1) == p)
    }

    /// AND gates needed to realize the term; parities cost only XORs.
    pub fn and_cost(&self) -> usize {
        self.lits.len().saturating_sub(1)
    }
}

impl fmt::Debug for Pseudoproduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.lits.iter().map(|(i, p)| (i, *p as u8)))
            .finish()
    }
}

/// Free-standing form of [`Pseudoproduct::and_cost`].
pub fn espp_and_cost(term: &Pseudoproduct) -> usize {
    term.and_cost()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Espp {
    var_count: u32,
    terms: Vec<Pseudoproduct>,
}

fn toggle(terms: &mut Vec<Pseudoproduct>, t: Pseudoproduct) {
    match terms.binary_search(&t) {
        Ok(i) => {
            terms.remove(i);
        }
        Err(i) => terms.insert(i, t),
    }
}

/// What combining two terms yields.
#[derive(Debug, PartialEq, Eq)]
enum Combined {
    Term(Pseudoproduct),
    Cancel,
}

/// Applies the pseudoproduct merge rule to `t1 = R L_{i2}^a` and
/// `t2 = R L_{i1}^b`: since `L_{i2}^a ^ L_{i1}^b = L_{i1^i2}^{[a=b]}`, the sum
/// is `R L_{i1^i2}^{[a=b]}`, which collapses into `R` or vanishes when `R`
/// already holds `L_{i1^i2}`.
fn combine(t1: &Pseudoproduct, t2: &Pseudoproduct) -> Option<Combined> {
    let mut only1 = None;
    let mut only2 = None;
    let mut a = t1.lits.iter().peekable();
    let mut b = t2.lits.iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some(&(&ia, &pa)), Some(&(&ib, &pb))) if ia == ib => {
                if pa != pb {
                    return None;
                }
                a.next();
                b.next();
            }
            (Some(&(&ia, &pa)), Some(&(&ib, _))) if ia < ib => {
                if only1.replace((ia, pa)).is_some() {
                    return None;
                }
                a.next();
            }
            (Some(&(&ia, &pa)), None) => {
                if only1.replace((ia, pa)).is_some() {
                    return None;
                }
                a.next();
            }
            (_, Some(&(&ib, &pb))) => {
                if only2.replace((ib, pb)).is_some() {
                    return None;
                }
                b.next();
            }
            (None, None) => break,
        }
    }
    let ((i2, pa), (i1, pb)) = (only1?, only2?);
    let s = i1 ^ i2;
    let e = pa == pb;
    let mut rest = t1.lits.clone();
    rest.remove(&i2);
    match rest.get(&s) {
        Some(&p) if p != e => Some(Combined::Cancel),
        Some(_) => Some(Combined::Term(Pseudoproduct { lits: rest })),
        None => {
            rest.insert(s, e);
            Some(Combined::Term(Pseudoproduct { lits: rest }))
        }
    }
}

impl Espp {
    /// Builds an ESPP; equal terms cancel in pairs.
    pub fn new(var_count: u32, terms: impl IntoIterator<Item = Pseudoproduct>) -> Self {
        let mut out = Vec::new();
        for t in terms {
            toggle(&mut out, t);
        }
        Espp { var_count, terms: out }
    }

    pub fn var_count(&self) -> u32 {
        self.var_count
    }

    pub fn terms(&self) -> &[Pseudoproduct] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, assignment: u32) -> bool {
        self.terms.iter().fold(false, |acc, t| acc ^ t.eval(assignment))
    }

    pub fn and_cost(&self) -> usize {
        self.terms.iter().map(Pseudoproduct::and_cost).sum()
    }

    pub fn to_tt(&self) -> TruthTable {
        TruthTable::from_fn(self.var_count, |m| self.eval(m as u32))
    }

    /// Greedy pairwise merging to a fixpoint. Term pairs are scanned in
    /// canonical order and the first applicable merge or cancellation is
    /// applied; every rewrite removes at least one term.
    ///
    /// For a given pair the indices `i1`, `i2` are forced (the pair must
    /// differ in exactly one literal index each way), so no choice between
    /// alternative index pairs arises.
    pub fn greedy_merge(&self) -> Espp {
        let mut terms = self.terms.clone();
        'scan: loop {
            for j1 in 0..terms.len() {
                for j2 in j1 + 1..terms.len() {
                    if let Some(c) = combine(&terms[j1], &terms[j2]) {
                        terms.remove(j2);
                        terms.remove(j1);
                        if let Combined::Term(t) = c {
                            toggle(&mut terms, t);
                        }
                        continue 'scan;
                    }
                }
            }
            break;
        }
        Espp {
            var_count: self.var_count,
            terms,
        }
    }
}

impl fmt::Debug for Espp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.terms).finish()
    }
}

/// Embeds an ESOP: the literal of variable `t` becomes index `1 << t`.
pub fn espp_from_esop(esop: &Esop) -> Espp {
    let terms = esop.cubes().iter().map(|c| {
        Pseudoproduct::new((0..esop.var_count()).filter_map(|v| match c.polarity(v) {
            Polarity::Absent => None,
            Polarity::Positive => Some((1 << v, true)),
            Polarity::Negative => Some((1 << v, false)),
        }))
    });
    Espp::new(esop.var_count(), terms)
}

/// Free-standing form of [`Espp::eval`].
pub fn eval_espp(espp: &Espp, assignment: u32) -> bool {
    espp.eval(assignment)
}

/// Free-standing form of [`Espp::greedy_merge`].
pub fn greedy_merge(espp: &Espp) -> Espp {
    espp.greedy_merge()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::esop::{anf_from_tt, Cube};

    fn pp(lits: &[(u32, u8)]) -> Pseudoproduct {
        Pseudoproduct::new(lits.iter().map(|&(i, p)| (i, p == 1)))
    }

    #[test]
    fn embedding_cubes() {
        let e = Esop::new(2, [Cube::new(0b11, 0)]);
        assert_eq!(espp_from_esop(&e).terms(), &[pp(&[(1, 1), (2, 1)])]);
        let e = Esop::new(1, [Cube::new(0, 0b1)]);
        assert_eq!(espp_from_esop(&e).terms(), &[pp(&[(1, 0)])]);
        assert!(espp_from_esop(&Esop::zero(3)).is_empty());
        assert!(espp_from_esop(&e).terms()[0].is_cube());
    }

    #[test]
    fn parity_merge() {
        let e = Espp::new(2, [pp(&[(1, 1)]), pp(&[(2, 1)])]);
        let m = e.greedy_merge();
        assert_eq!(m.terms(), &[pp(&[(3, 1)])]);
        assert_eq!(m.to_tt(), e.to_tt());
    }

    #[test]
    fn merge_into_existing_parity() {
        let e = Espp::new(2, [pp(&[(2, 1), (3, 1)]), pp(&[(1, 1), (3, 1)])]);
        let m = e.greedy_merge();
        assert_eq!(m.terms(), &[pp(&[(3, 1)])]);
        assert_eq!(m.to_tt(), e.to_tt());
    }

    #[test]
    fn complementary_parity_cancels() {
        let e = Espp::new(2, [pp(&[(2, 1), (3, 0)]), pp(&[(1, 1), (3, 0)])]);
        assert!(e.to_tt().is_zero());
        assert!(e.greedy_merge().is_empty());
    }

    #[test]
    fn mixed_polarities_give_negated_parity() {
        // x1 ^ ~x2 = ~(x1 ^ x2)
        let e = Espp::new(2, [pp(&[(1, 1)]), pp(&[(2, 0)])]);
        let m = e.greedy_merge();
        assert_eq!(m.terms(), &[pp(&[(3, 0)])]);
        assert_eq!(m.to_tt(), e.to_tt());
    }

    #[test]
    fn eval_examples() {
        assert!(pp(&[(3, 1)]).eval(0b01));
        assert!(pp(&[(3, 0)]).eval(0b11));
        let empty = Espp::new(2, []);
        assert!((0..4).all(|a| !empty.eval(a)));
    }

    #[test]
    fn and_costs() {
        assert_eq!(espp_and_cost(&pp(&[(3, 1)])), 0);
        assert_eq!(espp_and_cost(&pp(&[(1, 1), (2, 1)])), 1);
        assert_eq!(espp_and_cost(&pp(&[(1, 1), (2, 1), (3, 1)])), 2);
    }

    #[test]
    fn all_three_variable_functions() {
        for f in 0..256u64 {
            let tt = TruthTable::from_u64(3, f);
            let e = espp_from_esop(&anf_from_tt(&tt));
            let m = e.greedy_merge();
            assert_eq!(m.to_tt(), tt);
            assert!(m.len() <= e.len());
            assert!(m.and_cost() <= e.and_cost());
        }
    }
}
