//! Simulation-based equivalence checking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use xagdepth_core::Xag;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    Random { vectors: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: Vec<bool>,
    pub left: Vec<bool>,
    pub right: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent { method: Method, vectors: u64 },
    Different(Counterexample),
}

fn bits(words: &[u64], lane: usize) -> Vec<bool> {
    words.iter().map(|w| (w >> lane) & 1 == 1).collect()
}

/// Compares two networks with equal arity, exhaustively when they have at
/// most `exhaustive_max` inputs and on `vectors` seeded random assignments
/// otherwise.
pub fn check(a: &Xag, b: &Xag, exhaustive_max: usize, vectors: usize, seed: u64) -> Verdict {
    let n = a.num_inputs();
    let batches: Box<dyn Iterator<Item = (Vec<u64>, u64)>> = if n <= exhaustive_max {
        let total = 1u64 << n;
        Box::new((0..total.div_ceil(64)).map(move |w| {
            let lanes = (total - 64 * w).min(64);
            let words = (0..n)
                .map(|i| {
                    (0..lanes)
                        .filter(|m| ((64 * w + m) >> i) & 1 == 1)
                        .fold(0, |acc, m| acc | 1 << m)
                })
                .collect();
            (words, lanes)
        }))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let total = vectors as u64;
        Box::new((0..total.div_ceil(64)).map(move |w| {
            let lanes = (total - 64 * w).min(64);
            let words = (0..n).map(|_| rng.gen::<u64>()).collect();
            (words, lanes)
        }))
    };
    let mut count = 0;
    for (inputs, lanes) in batches {
        let mask = if lanes == 64 { u64::MAX } else { (1 << lanes) - 1 };
        let x = a.simulate_words(&inputs).expect("arity checked");
        let y = b.simulate_words(&inputs).expect("arity checked");
        let diff = x.iter().zip(&y).fold(0, |acc, (p, q)| acc | ((p ^ q) & mask));
        if diff != 0 {
            let lane = diff.trailing_zeros() as usize;
            return Verdict::Different(Counterexample {
                inputs: bits(&inputs, lane),
                left: bits(&x, lane),
                right: bits(&y, lane),
            });
        }
        count += lanes;
    }
    let method = if n <= exhaustive_max {
        Method::Exhaustive
    } else {
        Method::Random { vectors, seed }
    };
    Verdict::Equivalent { method, vectors: count }
}

#[cfg(test)]
mod tests {
    use super::*;
    use xagdepth_core::samples;

    #[test]
    fn balanced_majority_is_equivalent() {
        let a = samples::maj5_and_or();
        let b = samples::maj5_depth2();
        assert_eq!(
            check(&a, &b, 12, 0, 0),
            Verdict::Equivalent {
                method: Method::Exhaustive,
                vectors: 32
            }
        );
        assert!(matches!(
            check(&a, &b, 2, 100, 7),
            Verdict::Equivalent { vectors: 100, .. }
        ));
    }

    #[test]
    fn flipped_output_is_caught() {
        let a = samples::maj5_depth2();
        let mut b = a.clone();
        b.set_outputs(vec![!a.outputs()[0]]).unwrap();
        match check(&a, &b, 12, 0, 0) {
            Verdict::Different(c) => {
                assert_eq!(c.inputs, vec![false; 5]);
                assert_eq!((c.left, c.right), (vec![false], vec![true]));
            }
            v => panic!("{v:?}"),
        }
    }
}
