//! Exclusive sums of products.
//!
//! A [`Cube`] assigns each variable a polarity: negative (`x'`), positive
//! (`x`) or absent. An [`Esop`] is the XOR of its cubes; the empty ESOP is
//! constant 0 and the single all-absent cube is constant 1.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::truth_table::{TruthTable, VAR_MASKS};

pub const MAX_ESOP_VARS: u32 = 32;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Negative = 0,
    Positive = 1,
    Absent = 2,
}

impl Polarity {
    fn from_code(code: u8) -> Self {
        match code {
            0 => Polarity::Negative,
            1 => Polarity::Positive,
            _ => Polarity::Absent,
        }
    }

    /// The polarity `r` with `x^a ^ x^b = x^r` for `a != b`.
    fn link(a: Polarity, b: Polarity) -> Polarity {
        debug_assert_ne!(a, b);
        Polarity::from_code(3 - a as u8 - b as u8)
    }
}

/// A product term stored as disjoint positive and negative literal masks.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Cube {
    pos: u32,
    neg: u32,
}

impl Cube {
    /// The constant-1 cube.
    pub const ONE: Cube = Cube { pos: 0, neg: 0 };

    pub fn new(pos: u32, neg: u32) -> Self {
        assert_eq!(pos & neg, 0, "a variable cannot be both positive and negative");
        Cube { pos, neg }
    }

    /// Builds a cube from one polarity per variable.
    pub fn from_polarities(p: &[Polarity]) -> Self {
        let mut c = Cube::ONE;
        for (v, &pol) in p.iter().enumerate() {
            c = c.with(v as u32, pol);
        }
        c
    }

    pub fn positive(&self) -> u32 {
        self.pos
    }

    pub fn negative(&self) -> u32 {
        self.neg
    }

    /// Variables with a literal in the cube.
    pub fn support(&self) -> u32 {
        self.pos | self.neg
    }

    pub fn polarity(&self, var: u32) -> Polarity {
        if self.pos >> var & 1 == 1 {
            Polarity::Positive
        } else if self.neg >> var & 1 == 1 {
            Polarity::Negative
        } else {
            Polarity::Absent
        }
    }

    pub fn with(self, var: u32, pol: Polarity) -> Self {
        let bit = 1u32 << var;
        let (pos, neg) = (self.pos & !bit, self.neg & !bit);
        match pol {
            Polarity::Positive => Cube { pos: pos | bit, neg },
            Polarity::Negative => Cube { pos, neg: neg | bit },
            Polarity::Absent => Cube { pos, neg },
        }
    }

    pub fn degree(&self) -> u32 {
        self.support().count_ones()
    }

    /// Evaluates on an assignment whose bit `j` is variable `j`.
    pub fn eval(&self, assignment: u32) -> bool {
        assignment & self.pos == self.pos && assignment & self.neg == 0
    }

    /// Variables on which the two cubes' polarities differ.
    pub fn difference(&self, other: &Cube) -> u32 {
        (self.pos ^ other.pos) | (self.neg ^ other.neg)
    }

    pub fn distance(&self, other: &Cube) -> u32 {
        self.difference(other).count_ones()
    }

    /// Lexicographic order on the polarity vectors (`Negative < Positive <
    /// Absent`, variable 0 first).
    pub fn canonical_cmp(&self, other: &Cube) -> Ordering {
        let diff = self.difference(other);
        if diff == 0 {
            return Ordering::Equal;
        }
        let v = diff.trailing_zeros();
        self.polarity(v).cmp(&other.polarity(v))
    }
}

impl Ord for Cube {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl PartialOrd for Cube {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for v in 0..32 {
            let lit = match self.polarity(v) {
                Polarity::Absent => continue,
                Polarity::Positive => format!("x{}", v + 1),
                Polarity::Negative => format!("~x{}", v + 1),
            };
            if !first {
                f.write_str(" ")?;
            }
            f.write_str(&lit)?;
            first = false;
        }
        Ok(())
    }
}

/// Primary cost for ESOP minimization; the other metric breaks ties.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum EsopCost {
    #[default]
    Cubes,
    Literals,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Esop {
    var_count: u32,
    cubes: Vec<Cube>,
}

impl Esop {
    /// Builds an ESOP; equal cubes cancel in pairs and the result is sorted.
    pub fn new(var_count: u32, cubes: impl IntoIterator<Item = Cube>) -> Self {
        assert!(var_count <= MAX_ESOP_VARS);
        let mut set = BTreeSet::new();
        for c in cubes {
            assert!(
                var_count == 32 || c.support() >> var_count == 0,
                "cube uses a variable beyond {var_count}"
            );
            if !set.insert(c) {
                set.remove(&c);
            }
        }
        Esop {
            var_count,
            cubes: set.into_iter().collect(),
        }
    }

    pub fn zero(var_count: u32) -> Self {
        Esop::new(var_count, [])
    }

    pub fn var_count(&self) -> u32 {
        self.var_count
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    /// Largest cube degree, 0 for the empty ESOP.
    pub fn degree(&self) -> u32 {
        self.cubes.iter().map(Cube::degree).max().unwrap_or(0)
    }

    pub fn literal_count(&self) -> u32 {
        self.cubes.iter().map(Cube::degree).sum()
    }

    /// True if no cube has a negative literal.
    pub fn is_anf(&self) -> bool {
        self.cubes.iter().all(|c| c.neg == 0)
    }

    pub fn eval(&self, assignment: u32) -> bool {
        self.cubes.iter().fold(false, |acc, c| acc ^ c.eval(assignment))
    }

    pub fn eval_bits(&self, assignment: &[bool]) -> bool {
        let a = assignment
            .iter()
            .enumerate()
            .fold(0u32, |acc, (i, &b)| acc | (b as u32) << i);
        self.eval(a)
    }

    /// Truth table over `var_count <= 16` variables.
    pub fn to_tt(&self) -> TruthTable {
        let n = self.var_count;
        let mut tt = TruthTable::zero(n);
        for c in &self.cubes {
            let mut cube_tt = TruthTable::one(n);
            for v in 0..n {
                match c.polarity(v) {
                    Polarity::Positive => cube_tt = cube_tt.and(&TruthTable::var(n, v)),
                    Polarity::Negative => cube_tt = cube_tt.and(&TruthTable::var(n, v).not()),
                    Polarity::Absent => {}
                }
            }
            tt = tt.xor(&cube_tt);
        }
        tt
    }

    /// Replaces every negative literal by `1 ^ x`, cancelling duplicates.
    pub fn expand_to_anf(&self) -> Esop {
        let mut set: BTreeSet<Cube> = BTreeSet::new();
        for c in &self.cubes {
            let neg = c.neg;
            // every subset of the negative literals becomes positive
            let mut sub = neg;
            loop {
                let t = Cube {
                    pos: c.pos | sub,
                    neg: 0,
                };
                if !set.insert(t) {
                    set.remove(&t);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & neg;
            }
        }
        Esop {
            var_count: self.var_count,
            cubes: set.into_iter().collect(),
        }
    }

    /// Local-search minimization: cancellation of equal cubes, merging of
    /// distance-1 pairs and, for up to `effort` passes, reshaping of
    /// distance-2 pairs when that exposes a merge or saves literals. The cube
    /// count never grows.
    pub fn minimize(&self, effort: usize, cost: EsopCost) -> Esop {
        let mut cubes = self.cubes.clone();
        merge_to_fixpoint(&mut cubes);
        for _ in 0..effort {
            if !reshape_pass(&mut cubes, cost) {
                break;
            }
        }
        Esop::new(self.var_count, cubes)
    }
}

impl fmt::Debug for Esop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cubes.is_empty() {
            return f.write_str("{}");
        }
        f.write_str("{")?;
        for (i, c) in self.cubes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ^ ")?;
            }
            write!(f, "{c:?}")?;
        }
        f.write_str("}")
    }
}

/// The algebraic normal form of `tt` via an in-place Möbius transform.
pub fn anf_from_tt(tt: &TruthTable) -> Esop {
    let n = tt.num_vars();
    let mut words = tt.words().to_vec();
    for v in 0..n.min(6) {
        let shift = 1u32 << v;
        let low = !VAR_MASKS[v as usize];
        for w in words.iter_mut() {
            *w ^= (*w & low) << shift;
        }
    }
    for v in 6..n {
        let stride = 1usize << (v - 6);
        for i in 0..words.len() {
            if i & stride != 0 {
                words[i] ^= words[i ^ stride];
            }
        }
    }
    let coeffs = TruthTable::from_words(n, words);
    let cubes = (0..coeffs.num_bits())
        .filter(|&m| coeffs.get(m))
        .map(|m| Cube { pos: m as u32, neg: 0 });
    Esop::new(n, cubes)
}

/// Free-standing form of [`Esop::eval`]; bit `j` of `assignment` is variable `j`.
pub fn eval_esop(esop: &Esop, assignment: u32) -> bool {
    esop.eval(assignment)
}

/// Free-standing form of [`Esop::minimize`].
pub fn minimize_esop(esop: &Esop, effort: usize, cost: EsopCost) -> Esop {
    esop.minimize(effort, cost)
}

fn toggle(cubes: &mut Vec<Cube>, c: Cube) {
    if let Some(i) = cubes.iter().position(|&x| x == c) {
        cubes.swap_remove(i);
    } else {
        cubes.push(c);
    }
}

/// XOR of two cubes at distance one, as a single cube.
fn link1(a: &Cube, b: &Cube) -> Cube {
    let v = a.difference(b).trailing_zeros();
    a.with(v, Polarity::link(a.polarity(v), b.polarity(v)))
}

fn merge_to_fixpoint(cubes: &mut Vec<Cube>) {
    'restart: loop {
        for i in 0..cubes.len() {
            for j in i + 1..cubes.len() {
                let d = cubes[i].distance(&cubes[j]);
                if d <= 1 {
                    let (a, b) = (cubes[i], cubes[j]);
                    cubes.swap_remove(j);
                    cubes.swap_remove(i);
                    if d == 1 {
                        toggle(cubes, link1(&a, &b));
                    }
                    continue 'restart;
                }
            }
        }
        return;
    }
}

fn cost_key(cubes: &[Cube], cost: EsopCost) -> (u32, u32) {
    let n = cubes.len() as u32;
    let lits: u32 = cubes.iter().map(Cube::degree).sum();
    match cost {
        EsopCost::Cubes => (n, lits),
        EsopCost::Literals => (lits, n),
    }
}

/// The two equivalent rewrites of `a ^ b` for cubes at distance two:
/// `u^a v^b ^ u^c v^d = u^a v^(b.d) ^ u^(a.c) v^d = u^(a.c) v^b ^ u^c v^(b.d)`
/// where `p.q` is the linked polarity.
fn link2(a: &Cube, b: &Cube) -> [(Cube, Cube); 2] {
    let diff = a.difference(b);
    let u = diff.trailing_zeros();
    let v = (diff & (diff - 1)).trailing_zeros();
    let (au, av, bu, bv) = (a.polarity(u), a.polarity(v), b.polarity(u), b.polarity(v));
    let uu = Polarity::link(au, bu);
    let vv = Polarity::link(av, bv);
    [(a.with(v, vv), b.with(u, uu)), (a.with(u, uu), b.with(v, vv))]
}

fn reshape_pass(cubes: &mut Vec<Cube>, cost: EsopCost) -> bool {
    let mut improved = false;
    let mut i = 0;
    while i < cubes.len() {
        let mut j = i + 1;
        let mut accepted = false;
        while j < cubes.len() {
            if cubes[i].distance(&cubes[j]) == 2 {
                let before = cost_key(cubes, cost);
                let (a, b) = (cubes[i], cubes[j]);
                for (na, nb) in link2(&a, &b) {
                    let others = || cubes.iter().enumerate().filter(|&(k, _)| k != i && k != j);
                    let exposes_merge = others().any(|(_, c)| c.distance(&na) <= 1 || c.distance(&nb) <= 1);
                    let saves_literals = na.degree() + nb.degree() < a.degree() + b.degree();
                    if !exposes_merge && !saves_literals {
                        continue;
                    }
                    let mut trial: Vec<Cube> = others().map(|(_, &c)| c).collect();
                    toggle(&mut trial, na);
                    toggle(&mut trial, nb);
                    merge_to_fixpoint(&mut trial);
                    if trial.len() <= cubes.len() && cost_key(&trial, cost) < before {
                        *cubes = trial;
                        accepted = true;
                        break;
                    }
                }
                if accepted {
                    break;
                }
            }
            j += 1;
        }
        if accepted {
            improved = true;
            i = 0;
        } else {
            i += 1;
        }
    }
    improved
}
