//! Text formats: ASCII AIGER input, the native XAG format and circuit
//! listings.

mod aiger;
mod native;
mod qc;

pub use aiger::parse_aiger_ascii;
pub use native::{parse_native, write_native};
pub use qc::write_qc;

use crate::error::ParseError;
use crate::xag::Xag;

/// Parses either format, chosen by the first word of the first
/// non-comment line (`aag` or `xag`).
pub fn parse_netlist(text: &str) -> Result<Xag, ParseError> {
    let header = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match header {
        Some((_, l)) if l.split_whitespace().next() == Some("aag") => parse_aiger_ascii(text),
        Some((_, l)) if l.split_whitespace().next() == Some("xag") => parse_native(text),
        Some((line, l)) => Err(ParseError::new(line, format!("unknown format header `{l}`"))),
        None => Err(ParseError::new(1, "empty file")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_detection() {
        assert_eq!(parse_netlist("aag 1 1 0 1 0\n2\n3\n").unwrap().num_inputs(), 1);
        assert_eq!(parse_netlist("# c\nxag 1 0 1\nout ~x1\n").unwrap().num_outputs(), 1);
        assert_eq!(parse_netlist("aig 0 0 0 0 0\n").unwrap_err().line, 1);
        assert!(parse_netlist("\n\n").is_err());
    }
}
