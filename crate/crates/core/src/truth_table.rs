//! Bit-parallel truth tables over up to 16 variables.
//!
//! Bit `m` of a table holds the function value for the assignment in which
//! variable `j` takes bit `j` of `m`, so variable 0 is the least significant
//! position. For cut functions the variable order is the (sorted) leaf order.

use std::fmt;

pub const MAX_VARS: u32 = 16;

pub(crate) const VAR_MASKS: [u64; 6] = [
    0xaaaa_aaaa_aaaa_aaaa,
    0xcccc_cccc_cccc_cccc,
    0xf0f0_f0f0_f0f0_f0f0,
    0xff00_ff00_ff00_ff00,
    0xffff_0000_ffff_0000,
    0xffff_ffff_0000_0000,
];

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthTable {
    num_vars: u32,
    words: Vec<u64>,
}

fn word_count(num_vars: u32) -> usize {
    if num_vars <= 6 {
        1
    } else {
        1 << (num_vars - 6)
    }
}

fn tail_mask(num_vars: u32) -> u64 {
    if num_vars >= 6 {
        u64::MAX
    } else {
        (1u64 << (1u32 << num_vars)) - 1
    }
}

impl TruthTable {
    pub fn zero(num_vars: u32) -> Self {
        assert!(num_vars <= MAX_VARS, "truth tables are limited to {MAX_VARS} variables");
        Self {
            num_vars,
            words: vec![0; word_count(num_vars)],
        }
    }

    pub fn one(num_vars: u32) -> Self {
        let mut tt = Self::zero(num_vars);
        tt.words.iter_mut().for_each(|w| *w = u64::MAX);
        tt.mask_tail();
        tt
    }

    /// The projection onto variable `var`.
    pub fn var(num_vars: u32, var: u32) -> Self {
        assert!(var < num_vars, "variable {var} out of range for {num_vars} variables");
        let mut tt = Self::zero(num_vars);
        if var < 6 {
            tt.words.iter_mut().for_each(|w| *w = VAR_MASKS[var as usize]);
        } else {
            let stride = 1usize << (var - 6);
            for (i, w) in tt.words.iter_mut().enumerate() {
                if i & stride != 0 {
                    *w = u64::MAX;
                }
            }
        }
        tt.mask_tail();
        tt
    }

    /// Builds a table from its low `2^num_vars` bits, for `num_vars <= 6`.
    pub fn from_u64(num_vars: u32, bits: u64) -> Self {
        assert!(num_vars <= 6);
        let mut tt = Self {
            num_vars,
            words: vec![bits],
        };
        tt.mask_tail();
        tt
    }

    pub fn from_words(num_vars: u32, words: Vec<u64>) -> Self {
        assert!(num_vars <= MAX_VARS);
        assert_eq!(words.len(), word_count(num_vars));
        let mut tt = Self { num_vars, words };
        tt.mask_tail();
        tt
    }

    /// Builds a table by evaluating `f` on every assignment index.
    pub fn from_fn(num_vars: u32, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut tt = Self::zero(num_vars);
        for m in 0..tt.num_bits() {
            if f(m) {
                tt.set(m, true);
            }
        }
        tt
    }

    fn mask_tail(&mut self) {
        let mask = tail_mask(self.num_vars);
        if let Some(w) = self.words.last_mut() {
            *w &= mask;
        }
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_bits(&self) -> usize {
        1 << self.num_vars
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The table as a single word; only meaningful for `num_vars <= 6`.
    pub fn as_u64(&self) -> u64 {
        self.words[0]
    }

    pub fn get(&self, m: usize) -> bool {
        (self.words[m >> 6] >> (m & 63)) & 1 == 1
    }

    pub fn set(&mut self, m: usize, value: bool) {
        let bit = 1u64 << (m & 63);
        if value {
            self.words[m >> 6] |= bit;
        } else {
            self.words[m >> 6] &= !bit;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.num_vars)
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn not(&self) -> Self {
        let mut tt = Self {
            num_vars: self.num_vars,
            words: self.words.iter().map(|w| !w).collect(),
        };
        tt.mask_tail();
        tt
    }

    pub fn complement_if(self, c: bool) -> Self {
        if c {
            self.not()
        } else {
            self
        }
    }

    pub fn and(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        Self {
            num_vars: self.num_vars,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        Self {
            num_vars: self.num_vars,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// Whether the function depends on variable `var`.
    pub fn depends_on(&self, var: u32) -> bool {
        (0..self.num_bits()).any(|m| (m >> var) & 1 == 0 && self.get(m) != self.get(m | (1 << var)))
    }

    /// Re-expresses the table over a larger variable set. `positions[j]` is
    /// the index, in the new support, of this table's variable `j`.
    pub fn expand(&self, new_vars: u32, positions: &[u32]) -> Self {
        assert_eq!(positions.len(), self.num_vars as usize);
        if new_vars == self.num_vars && positions.iter().enumerate().all(|(j, &p)| p == j as u32) {
            return self.clone();
        }
        let mut out = Self::zero(new_vars);
        for m in 0..out.num_bits() {
            let mut src = 0usize;
            for (j, &p) in positions.iter().enumerate() {
                src |= ((m >> p) & 1) << j;
            }
            if self.get(src) {
                out.set(m, true);
            }
        }
        out
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable({}, {self})", self.num_vars)
    }
}

/// Binary rendering, most significant assignment first, as in `(1000)_2`.
impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in (0..self.num_bits()).rev() {
            f.write_str(if self.get(m) { "1" } else { "0" })?;
        }
        Ok(())
    }
}
