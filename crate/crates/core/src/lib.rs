//! Multiplicative-depth optimization of XOR-AND graphs.
//!
//! The pipeline enumerates k-feasible cuts, rewrites each cut function as an
//! exclusive sum of products (optionally refined into pseudoproducts over
//! parity literals), rebuilds every product as a level-balanced AND tree and
//! keeps the lowest-level candidate per node. Optimized networks can be
//! lowered to reversible circuits with compute/uncompute AND gadgets to
//! estimate T-count, T-depth and qubit count.

pub mod balance;
pub mod cuts;
pub mod error;
pub mod esop;
pub mod espp;
pub mod io;
pub mod quantum;
pub mod samples;
pub mod truth_table;
pub mod xag;

pub use balance::{
    balance_cube, balance_esop, balance_espp, balance_network, balanced_level, optimize_to_fixpoint, LeveledXag,
    ResynthChoice, Strategy,
};
pub use cuts::{cut_function, enumerate_cuts, Cut, CutSet};
pub use error::{BalanceError, CutError, MapError, ParseError, SimError, XagError};
pub use esop::{anf_from_tt, eval_esop, minimize_esop, Cube, Esop, EsopCost, Polarity};
pub use espp::{espp_and_cost, espp_from_esop, eval_espp, greedy_merge, Espp, Pseudoproduct};
pub use io::{parse_aiger_ascii, parse_native, parse_netlist, write_native, write_qc};
pub use quantum::{
    and_layers, estimate_only, map_to_circuit, simulate_circuit, simulate_circuit_words, CircuitRun, QGate,
    QuantumCircuit, ResourceEstimate, Schedule, WordRun,
};
pub use truth_table::TruthTable;
pub use xag::{Gate, GateOp, LevelInfo, Signal, Xag};
