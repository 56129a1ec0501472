use std::collections::HashMap;

use crate::error::ParseError;
use crate::xag::{Signal, Xag};

fn numbers(line: &str, lineno: usize, count: usize) -> Result<Vec<u64>, ParseError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != count {
        return Err(ParseError::new(
            lineno,
            format!("expected {count} numbers, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse()
                .map_err(|_| ParseError::new(lineno, format!("`{f}` is not a number")))
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq)]
enum Mark {
    Open,
    Done,
}

/// Parses combinational ASCII AIGER (`aag M I L O A` with `L = 0`). AND
/// definitions may appear in any order; inverted literals become complement
/// flags and input/output symbols become names.
pub fn parse_aiger_ascii(text: &str) -> Result<Xag, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (hline, header) = lines.next().ok_or_else(|| ParseError::new(1, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() != Some(&"aag") {
        return Err(ParseError::new(hline, "expected `aag` header"));
    }
    let h = numbers(&header[3..], hline, 5)?;
    let (max_var, ni, nl, no, na) = (h[0], h[1] as usize, h[2], h[3] as usize, h[4] as usize);
    if nl != 0 {
        return Err(ParseError::new(
            hline,
            format!("{nl} latches; only combinational AIGs are supported"),
        ));
    }
    if (ni + na) as u64 > max_var {
        return Err(ParseError::new(
            hline,
            format!("M = {max_var} is smaller than I + A = {}", ni + na),
        ));
    }
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| ParseError::new(text.lines().count() + 1, format!("missing {what} line")))
    };
    let check_lit = |lit: u64, lineno: usize| {
        if lit / 2 > max_var {
            Err(ParseError::new(
                lineno,
                format!("literal {lit} exceeds maximum variable {max_var}"),
            ))
        } else {
            Ok(lit)
        }
    };

    let mut input_vars = Vec::with_capacity(ni);
    let mut defined: HashMap<u64, usize> = HashMap::new();
    for _ in 0..ni {
        let (lineno, l) = next("input")?;
        let lit = check_lit(numbers(l, lineno, 1)?[0], lineno)?;
        if lit < 2 || lit % 2 == 1 {
            return Err(ParseError::new(
                lineno,
                format!("input literal {lit} must be even and nonzero"),
            ));
        }
        if defined.insert(lit / 2, lineno).is_some() {
            return Err(ParseError::new(lineno, format!("variable {} defined twice", lit / 2)));
        }
        input_vars.push(lit / 2);
    }
    let mut outputs = Vec::with_capacity(no);
    for _ in 0..no {
        let (lineno, l) = next("output")?;
        outputs.push((check_lit(numbers(l, lineno, 1)?[0], lineno)?, lineno));
    }
    let mut ands: HashMap<u64, (u64, u64, usize)> = HashMap::new();
    let mut and_order = Vec::with_capacity(na);
    for _ in 0..na {
        let (lineno, l) = next("AND")?;
        let v = numbers(l, lineno, 3)?;
        let (lhs, r0, r1) = (
            check_lit(v[0], lineno)?,
            check_lit(v[1], lineno)?,
            check_lit(v[2], lineno)?,
        );
        if lhs < 2 || lhs % 2 == 1 {
            return Err(ParseError::new(
                lineno,
                format!("AND output literal {lhs} must be even and nonzero"),
            ));
        }
        if defined.insert(lhs / 2, lineno).is_some() {
            return Err(ParseError::new(lineno, format!("variable {} defined twice", lhs / 2)));
        }
        ands.insert(lhs / 2, (r0, r1, lineno));
        and_order.push(lhs / 2);
    }

    let mut net = Xag::new(ni);
    let mut signal: HashMap<u64, Signal> = HashMap::new();
    for (i, &v) in input_vars.iter().enumerate() {
        signal.insert(v, net.input(i));
    }
    // Resolve ANDs depth-first so that definitions may come in any order.
    let mut marks: HashMap<u64, Mark> = HashMap::new();
    for &root in &and_order {
        let mut stack = vec![root];
        while let Some(&v) = stack.last() {
            if signal.contains_key(&v) {
                stack.pop();
                continue;
            }
            let (r0, r1, lineno) = ands[&v];
            let pending: Vec<u64> = [r0 / 2, r1 / 2]
                .into_iter()
                .filter(|&u| u != 0 && !signal.contains_key(&u))
                .collect();
            if pending.is_empty() {
                let lit = |l: u64, signal: &HashMap<u64, Signal>| {
                    let base = if l / 2 == 0 { Signal::ZERO } else { signal[&(l / 2)] };
                    base.complement_if(l % 2 == 1)
                };
                let s = net.and(lit(r0, &signal), lit(r1, &signal));
                signal.insert(v, s);
                marks.insert(v, Mark::Done);
                stack.pop();
                continue;
            }
            if marks.insert(v, Mark::Open) == Some(Mark::Open) {
                return Err(ParseError::new(
                    lineno,
                    format!("combinational cycle through variable {v}"),
                ));
            }
            for u in pending {
                if !ands.contains_key(&u) {
                    return Err(ParseError::new(lineno, format!("variable {u} is never defined")));
                }
                if marks.get(&u) == Some(&Mark::Open) {
                    return Err(ParseError::new(
                        lineno,
                        format!("combinational cycle through variable {u}"),
                    ));
                }
                stack.push(u);
            }
        }
    }
    for &(lit, lineno) in &outputs {
        let base = match lit / 2 {
            0 => Signal::ZERO,
            v => *signal
                .get(&v)
                .ok_or_else(|| ParseError::new(lineno, format!("variable {v} is never defined")))?,
        };
        net.add_output(base.complement_if(lit % 2 == 1)).expect("known signal");
    }

    for (lineno, l) in lines {
        if l == "c" || l.starts_with("c ") {
            break;
        }
        if l.is_empty() {
            continue;
        }
        let (kind, rest) = l.split_at(1);
        let (index, name) = rest
            .split_once(' ')
            .ok_or_else(|| ParseError::new(lineno, format!("malformed symbol line `{l}`")))?;
        let index: usize = index
            .parse()
            .map_err(|_| ParseError::new(lineno, format!("malformed symbol line `{l}`")))?;
        match kind {
            "i" if index < ni => net.set_input_name(index, name),
            "o" if index < no => net.set_output_name(index, name),
            "i" | "o" => return Err(ParseError::new(lineno, format!("symbol index {index} out of range"))),
            _ => return Err(ParseError::new(lineno, format!("unexpected line `{l}`"))),
        }
    }
    Ok(net)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_input_and() {
        let net = parse_aiger_ascii("aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n").unwrap();
        assert_eq!(net.mult_complexity(), 1);
        for m in 0..4 {
            let bits = [m & 1 == 1, m & 2 == 2];
            assert_eq!(net.simulate(&bits).unwrap(), vec![bits[0] && bits[1]]);
        }
    }

    #[test]
    fn inverted_input_output() {
        let net = parse_aiger_ascii("aag 1 1 0 1 0\n2\n3\n").unwrap();
        assert_eq!(net.outputs(), &[!net.input(0)]);
    }

    #[test]
    fn constant_output() {
        let net = parse_aiger_ascii("aag 0 0 0 1 0\n0\n").unwrap();
        assert_eq!(net.outputs(), &[Signal::ZERO]);
    }

    #[test]
    fn out_of_order_ands_and_symbols() {
        let text = "aag 5 3 0 1 2\n2\n4\n6\n10\n10 8 7\n8 2 5\ni0 a\ni2 c\no0 f\nc\nfree text\n";
        let net = parse_aiger_ascii(text).unwrap();
        assert_eq!(net.input_name(0), Some("a"));
        assert_eq!(net.input_name(1), None);
        assert_eq!(net.output_name(0), Some("f"));
        for m in 0..8usize {
            let b: Vec<bool> = (0..3).map(|i| (m >> i) & 1 == 1).collect();
            assert_eq!(net.simulate(&b).unwrap(), vec![b[0] && !b[1] && !b[2]]);
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("aag 1 0 1 0 0\n2 3\n", 1),
            ("aag 1 1 0 1 0\n2\n9\n", 3),
            ("aag 2 1 0 1 1\n2\n4\n4 2 7\n", 4),
            ("aag 3 1 0 1 2\n2\n4\n4 6 2\n6 4 2\n", 5),
            ("aag 2 1 0 1 1\n2\n4\n4 2\n", 4),
            ("aag 2 1 0 1 1\n2\n4\n", 4),
            ("aag 1 1 0 0 0\n3\n", 2),
            ("aag 1 1 0 0 0\n2\nx0 foo\n", 3),
            ("aag x 1 0 0 0\n", 1),
        ];
        for (text, line) in cases {
            let err = parse_aiger_ascii(text).unwrap_err();
            assert_eq!(err.line, line, "{text:?}: {err}");
        }
    }
}
