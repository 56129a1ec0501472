use std::fmt::Write;

use crate::error::ParseError;
use crate::xag::{GateOp, Signal, Xag};

fn lit_text(net: &Xag, s: Signal) -> String {
    let neg = if s.is_complemented() { "~" } else { "" };
    let node = s.node();
    if node == 0 {
        format!("{neg}0")
    } else if net.is_input(node) {
        format!("{neg}x{node}")
    } else {
        format!("{neg}g{node}")
    }
}

/// Renders the live part of `net`. Inputs are `x1..xn`; gate `g<i>` is step
/// `i`, numbered after the inputs.
pub fn write_native(net: &Xag) -> String {
    let net = net.sweep_dead();
    let mut out = String::new();
    writeln!(
        out,
        "xag {} {} {}",
        net.num_inputs(),
        net.num_gates(),
        net.num_outputs()
    )
    .unwrap();
    for i in 0..net.num_inputs() {
        if let Some(name) = net.input_name(i) {
            writeln!(out, "name x{} {name}", i + 1).unwrap();
        }
    }
    for (node, g) in net.gates() {
        let op = match g.op {
            GateOp::And => "AND",
            GateOp::Xor => "XOR",
        };
        let [a, b] = g.fanins.map(|f| lit_text(&net, f));
        writeln!(out, "g{node} = {op} {a} {b}").unwrap();
    }
    for (i, &s) in net.outputs().iter().enumerate() {
        writeln!(out, "out {}", lit_text(&net, s)).unwrap();
        if let Some(name) = net.output_name(i) {
            writeln!(out, "name o{} {name}", i + 1).unwrap();
        }
    }
    out
}

struct Parser {
    net: Xag,
    /// Signal of each declared gate, by gate position.
    gates: Vec<Signal>,
}

impl Parser {
    fn lit(&self, text: &str, line: usize) -> Result<Signal, ParseError> {
        let (neg, body) = match text.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let bad = || ParseError::new(line, format!("malformed literal `{text}`"));
        let base = if body == "0" {
            Signal::ZERO
        } else if let Some(i) = body.strip_prefix('x') {
            let i: usize = i.parse().map_err(|_| bad())?;
            if i == 0 || i > self.net.num_inputs() {
                return Err(ParseError::new(line, format!("input `{body}` does not exist")));
            }
            self.net.input(i - 1)
        } else if let Some(i) = body.strip_prefix('g') {
            let i: usize = i.parse().map_err(|_| bad())?;
            let first = self.net.num_inputs() + 1;
            *i.checked_sub(first)
                .and_then(|k| self.gates.get(k))
                .ok_or_else(|| ParseError::new(line, format!("gate `{body}` is used before it is defined")))?
        } else {
            return Err(bad());
        };
        Ok(base.complement_if(neg))
    }
}

/// Parses the native format written by [`write_native`]. Blank lines and
/// `#` comments are ignored.
pub fn parse_native(text: &str) -> Result<Xag, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| ParseError::new(1, "empty file"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let counts: Option<Vec<usize>> = h.get(1..).map(|f| f.iter().filter_map(|x| x.parse().ok()).collect());
    let (n, r, o) = match (h.first(), counts.as_deref()) {
        (Some(&"xag"), Some(&[n, r, o])) if h.len() == 4 => (n, r, o),
        _ => {
            return Err(ParseError::new(
                hline,
                "expected header `xag <inputs> <gates> <outputs>`",
            ))
        }
    };
    let mut p = Parser {
        net: Xag::new(n),
        gates: Vec::with_capacity(r),
    };
    let mut last = hline;
    for (line, l) in lines {
        last = line;
        let f: Vec<&str> = l.split_whitespace().collect();
        match f.as_slice() {
            ["out", lit] => {
                let s = p.lit(lit, line)?;
                p.net.add_output(s).expect("known signal");
            }
            ["name", target, ..] => {
                let name = l["name".len()..].trim_start()[target.len()..].trim();
                let index = |prefix: char, count: usize| {
                    target
                        .strip_prefix(prefix)
                        .and_then(|i| i.parse::<usize>().ok())
                        .filter(|&i| i >= 1 && i <= count)
                        .map(|i| i - 1)
                };
                if let Some(i) = index('x', n) {
                    p.net.set_input_name(i, name);
                } else if let Some(i) = index('o', p.net.num_outputs()) {
                    p.net.set_output_name(i, name);
                } else {
                    return Err(ParseError::new(line, format!("unknown name target `{target}`")));
                }
            }
            [gate, "=", op, a, b] => {
                let want = format!("g{}", n + 1 + p.gates.len());
                if *gate != want {
                    return Err(ParseError::new(line, format!("expected gate `{want}`, found `{gate}`")));
                }
                let op = match *op {
                    "AND" => GateOp::And,
                    "XOR" => GateOp::Xor,
                    _ => return Err(ParseError::new(line, format!("unknown gate type `{op}`"))),
                };
                let (a, b) = (p.lit(a, line)?, p.lit(b, line)?);
                let s = p.net.add_gate(op, a, b).expect("known signals");
                p.gates.push(s);
            }
            _ => return Err(ParseError::new(line, format!("unrecognized line `{l}`"))),
        }
    }
    if p.gates.len() != r || p.net.num_outputs() != o {
        return Err(ParseError::new(
            last,
            format!(
                "header declares {r} gates and {o} outputs, found {} and {}",
                p.gates.len(),
                p.net.num_outputs()
            ),
        ));
    }
    Ok(p.net)
}
