//! Small reference networks and a seeded random network generator, shared by
//! tests, benchmarks and the command-line tool.

use rand::Rng;

use crate::xag::{GateOp, Signal, Xag};

/// The majority-of-5 XAG with three AND gates and AND-depth 2.
///
/// ```text
/// a1 = (x1 ^ x3 ^ x4 ^ x2) & (x2 ^ x5)
/// a2 = (x5 ^ x4) & (x4 ^ x3)
/// a3 = (a1 ^ x5 ^ x1) & (x1 ^ x4 ^ a2)
/// f  = a3 ^ x1
/// ```
pub fn maj5_depth2() -> Xag {
    let mut net = Xag::new(5);
    let x: Vec<Signal> = net.inputs().collect();
    let (x1, x2, x3, x4, x5) = (x[0], x[1], x[2], x[3], x[4]);
    let p1 = net.xor_many(&[x1, x3, x4, x2]);
    let p2 = net.xor(x2, x5);
    let p3 = net.xor(x5, x4);
    let p4 = net.xor(x4, x3);
    let a1 = net.and(p1, p2);
    let a2 = net.and(p3, p4);
    let p5 = net.xor_many(&[a1, x5, x1]);
    let p6 = net.xor_many(&[x1, x4, a2]);
    let a3 = net.and(p5, p6);
    let f = net.xor(a3, x1);
    net.add_output(f).unwrap();
    net
}

/// Threshold function "at least `k` of `vars`" as an AND/OR network, by the
/// expansion `T_k(v, rest) = (v & T_{k-1}(rest)) | T_k(rest)`.
pub fn threshold_and_or(net: &mut Xag, vars: &[Signal], k: usize) -> Signal {
    if k == 0 {
        return Signal::ONE;
    }
    if vars.len() < k {
        return Signal::ZERO;
    }
    let with = threshold_and_or(net, &vars[1..], k - 1);
    let with = net.and(vars[0], with);
    let without = threshold_and_or(net, &vars[1..], k);
    net.or(with, without)
}

/// Majority-of-5 built from AND and OR gates only; deeper than
/// [`maj5_depth2`].
pub fn maj5_and_or() -> Xag {
    let mut net = Xag::new(5);
    let x: Vec<Signal> = net.inputs().collect();
    let f = threshold_and_or(&mut net, &x, 3);
    net.add_output(f).unwrap();
    net
}

/// `x1 & x2 & ... & xn` as a left-leaning chain (AND-depth `n - 1`).
pub fn and_chain(n: usize) -> Xag {
    assert!(n >= 1);
    let mut net = Xag::new(n);
    let mut acc = net.input(0);
    for i in 1..n {
        let x = net.input(i);
        acc = net.and(acc, x);
    }
    net.add_output(acc).unwrap();
    net
}

pub fn parity(n: usize) -> Xag {
    let mut net = Xag::new(n);
    let x: Vec<Signal> = net.inputs().collect();
    let p = net.xor_many(&x);
    net.add_output(p).unwrap();
    net
}

/// A `bits`-to-`2^bits` decoder; every output is a balanced minterm.
pub fn decoder(bits: usize) -> Xag {
    let mut net = Xag::new(bits);
    let x: Vec<Signal> = net.inputs().collect();
    for m in 0..1usize << bits {
        let lits: Vec<Signal> = x
            .iter()
            .enumerate()
            .map(|(i, &s)| s.complement_if((m >> i) & 1 == 0))
            .collect();
        let out = net.and_many(&lits);
        net.add_output(out).unwrap();
    }
    net
}

/// A random XAG with `num_inputs` inputs, at most `num_gates` gates and
/// `num_outputs` outputs. Fanins and complements are uniform; the last gate
/// built is always the first output.
pub fn random_xag<R: Rng + ?Sized>(rng: &mut R, num_inputs: usize, num_gates: usize, num_outputs: usize) -> Xag {
    assert!(num_inputs >= 1);
    let mut net = Xag::new(num_inputs);
    let mut pool: Vec<Signal> = net.inputs().collect();
    for _ in 0..num_gates {
        let op = if rng.gen_bool(0.5) { GateOp::And } else { GateOp::Xor };
        let a = pool[rng.gen_range(0..pool.len())].complement_if(rng.gen_bool(0.3));
        let b = pool[rng.gen_range(0..pool.len())].complement_if(rng.gen_bool(0.3));
        let s = net.add_gate(op, a, b).unwrap();
        if !s.is_constant() && !pool.contains(&s.regular()) {
            pool.push(s.regular());
        }
    }
    let last = *pool.last().unwrap();
    net.add_output(last.complement_if(rng.gen_bool(0.5))).unwrap();
    for _ in 1..num_outputs {
        let s = pool[rng.gen_range(0..pool.len())];
        net.add_output(s.complement_if(rng.gen_bool(0.5))).unwrap();
    }
    net
}
