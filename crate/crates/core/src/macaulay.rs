//! Binomial representations, the Macaulay growth operators, and O-sequence
//! validation.
//!
//! Every positive integer `f` has a unique `i`-binomial representation
//! `f = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_{i-j}, i-j)` with
//! `n_i > n_{i-1} > ... > n_{i-j} >= i-j >= 1`. The operators `f^<i>` and
//! `f^(i)` shift that representation up and down; a sequence
//! `(h_0, ..., h_s)` of level counts of a lattice down-set is characterized
//! by `h_0 = 1` and `h_{i+1} <= h_i^<i>`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::binomial;
use crate::error::Error;
use crate::rational::rat_int;

/// The `i`-binomial representation of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialRepresentation {
    index: u32,
    /// Pairs `(n_j, j)` with `j` descending from `index`.
    terms: Vec<(u64, u32)>,
}

impl BinomialRepresentation {
    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn terms(&self) -> &[(u64, u32)] {
        &self.terms
    }

    /// Reconstructs the represented integer.
    pub fn value(&self) -> BigInt {
        self.terms
            .iter()
            .map(|&(n, j)| binomial(n as i64, j as i64))
            .sum()
    }

    /// `f^<i> = sum C(n_j + 1, j + 1)`.
    pub fn upper_shift(&self) -> BigInt {
        self.terms
            .iter()
            .map(|&(n, j)| binomial(n as i64 + 1, j as i64 + 1))
            .sum()
    }

    /// `f^(i) = sum C(n_j, j + 1)`. Terms may vanish under the binomial
    /// convention.
    pub fn lower_shift(&self) -> BigInt {
        self.terms
            .iter()
            .map(|&(n, j)| binomial(n as i64, j as i64 + 1))
            .sum()
    }
}

/// The unique `i`-binomial representation of `f`, found greedily: each step
/// takes the largest `C(n, j)` not exceeding what remains. Panics unless
/// `f >= 1` and `i >= 1`.
pub fn represent(f: u64, i: u32) -> BinomialRepresentation {
    assert!(f >= 1, "represent: f must be positive");
    assert!(i >= 1, "represent: i must be positive");
    let mut remaining = BigInt::from(f);
    let mut terms = Vec::new();
    let mut j = i;
    while !remaining.is_zero() {
        debug_assert!(j >= 1, "greedy descent exhausted indices");
        let mut n = j as u64;
        while binomial(n as i64 + 1, j as i64) <= remaining {
            n += 1;
        }
        remaining -= binomial(n as i64, j as i64);
        terms.push((n, j));
        j -= 1;
    }
    debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
    debug_assert!(terms.last().is_none_or(|&(n, j)| n >= j as u64 && j >= 1));
    BinomialRepresentation { index: i, terms }
}

/// `f^<i>`, the Macaulay upper shift.
pub fn upper_shift(f: u64, i: u32) -> BigInt {
    represent(f, i).upper_shift()
}

/// `f^(i)`, the Macaulay lower shift.
pub fn lower_shift(f: u64, i: u32) -> BigInt {
    represent(f, i).lower_shift()
}

/// A candidate sequence of normalized level counts `(h_0, ..., h_s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OSequence {
    values: Vec<u64>,
}

impl OSequence {
    pub fn new(values: Vec<u64>) -> Self {
        assert!(!values.is_empty(), "an O-sequence has at least h_0");
        OSequence { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Index of the first entry violating the O-sequence conditions, or
    /// `None` when the sequence is valid: `h_0 = 1` (index 0 otherwise) and
    /// `h_{i+1} <= h_i^<i>` (index `i+1` otherwise).
    pub fn first_violation(&self) -> Option<usize> {
        if self.values[0] != 1 {
            return Some(0);
        }
        for i in 1..self.values.len() - 1 {
            let h = self.values[i];
            let next = self.values[i + 1];
            let bound_ok = if h == 0 {
                next == 0
            } else {
                BigInt::from(next) <= upper_shift(h, i as u32)
            };
            if !bound_ok {
                return Some(i + 1);
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none()
    }
}

/// Validity verdict plus the first violating index, if any.
pub fn is_o_sequence(h: &OSequence) -> (bool, Option<usize>) {
    let violation = h.first_violation();
    (violation.is_none(), violation)
}

/// Checks the ratio inequality `h_i / h_s >= C(n+i, i) / C(n+s, s)` for all
/// `i`, for a valid O-sequence with positive entries and `h_1 <= n + 1`.
/// The inequality always holds; this operation exists to property-test it.
pub fn key_lemma_check(h: &OSequence, n: u32) -> Result<bool, Error> {
    if let Some(index) = h.first_violation() {
        return Err(Error::InvalidOSequence { index });
    }
    if h.values().contains(&0) {
        return Err(Error::NonPositiveLevel);
    }
    if h.values().len() > 1 && h.values()[1] > n as u64 + 1 {
        return Err(Error::FirstLevelTooLarge {
            h1: h.values()[1],
            bound: n as u64 + 1,
        });
    }
    let s = h.values().len() - 1;
    let h_s = rat_int(h.values()[s] as i64);
    let c_ns = rat_int(binomial(n as i64 + s as i64, s as i64));
    for (i, &h_i) in h.values().iter().enumerate() {
        let lhs = rat_int(h_i as i64) / &h_s;
        let rhs = rat_int(binomial(n as i64 + i as i64, i as i64)) / &c_ns;
        if lhs < rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same ratio comparison, reporting the indices where equality holds.
/// Used by the CLI to distinguish extremal sequences.
pub fn key_lemma_equalities(h: &OSequence, n: u32) -> Result<Vec<usize>, Error> {
    if !key_lemma_check(h, n)? {
        return Ok(Vec::new());
    }
    let s = h.values().len() - 1;
    let h_s = rat_int(h.values()[s] as i64);
    let c_ns = rat_int(binomial(n as i64 + s as i64, s as i64));
    let mut equalities = Vec::new();
    for (i, &h_i) in h.values().iter().enumerate() {
        let lhs = rat_int(h_i as i64) / &h_s;
        let rhs = rat_int(binomial(n as i64 + i as i64, i as i64)) / &c_ns;
        if lhs == rhs {
            equalities.push(i);
        }
    }
    Ok(equalities)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::{max_level_growth, GrowthSearch};

    /// Exhaustive search for chains n_i > n_{i-1} > ... >= j >= 1 whose
    /// binomials sum to `f`, independent of the greedy construction.
    fn all_chain_representations(f: u64, i: u32) -> Vec<Vec<(u64, u32)>> {
        fn extend(
            remaining: i64,
            j: u32,
            max_n: u64,
            chain: &mut Vec<(u64, u32)>,
            out: &mut Vec<Vec<(u64, u32)>>,
        ) {
            if remaining == 0 {
                out.push(chain.clone());
                return;
            }
            if j == 0 {
                return;
            }
            // Either stop using index j (only allowed if chain ends), or pick n.
            for n in (j as u64)..max_n {
                let c = binomial(n as i64, j as i64);
                let c: i64 = i64::try_from(&c).unwrap();
                if c > remaining {
                    break;
                }
                chain.push((n, j));
                extend(remaining - c, j - 1, n, chain, out);
                chain.pop();
            }
        }
        let mut out = Vec::new();
        let mut chain = Vec::new();
        extend(f as i64, i, f + i as u64 + 2, &mut chain, &mut out);
        out
    }

    #[test]
    fn representation_examples() {
        let r = represent(5, 2);
        assert_eq!(r.terms(), &[(3, 2), (2, 1)]);
        assert_eq!(r.value(), BigInt::from(5));

        for i in 1..=6 {
            assert_eq!(represent(1, i).terms(), &[(i as u64, i)]);
        }
        assert_eq!(represent(10, 3).terms(), &[(5, 3)]);
    }

    #[test]
    fn representation_is_unique() {
        for i in 1..=4u32 {
            for f in 1..=40u64 {
                let all = all_chain_representations(f, i);
                assert_eq!(all.len(), 1, "non-unique representation for ({f},{i})");
                assert_eq!(all[0], represent(f, i).terms().to_vec());
            }
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(upper_shift(5, 2), BigInt::from(7));
        assert_eq!(upper_shift(2, 1), BigInt::from(3));
        assert_eq!(upper_shift(1, 1), BigInt::from(1));
        assert_eq!(lower_shift(5, 2), BigInt::from(2));
        assert_eq!(lower_shift(1, 1), BigInt::from(0));
        assert_eq!(lower_shift(6, 2), BigInt::from(4));
    }

    #[test]
    fn upper_shift_is_monotone() {
        for i in 1..=6u32 {
            for a in 1..=200u64 {
                for b in a..=200 {
                    assert!(upper_shift(a, i) <= upper_shift(b, i));
                }
            }
        }
    }

    #[test]
    fn upper_shift_matches_order_ideal_maximum() {
        // Brute-force cross-check over down-sets in up to 4 variables.
        let budget = 2_000_000u64;
        for i in 1..=4u32 {
            for f in 1..=15u64 {
                let mut certified = false;
                for vars in 1..=4usize {
                    match max_level_growth(vars, i, f, budget) {
                        GrowthSearch::Max(best) => {
                            assert_eq!(
                                BigInt::from(best),
                                upper_shift(f, i),
                                "mismatch at f={f}, i={i}, vars={vars}"
                            );
                            certified = true;
                        }
                        GrowthSearch::Unrealizable | GrowthSearch::Exceeded => {}
                    }
                }
                let realizable = binomial(i as i64 + 3, 3) >= BigInt::from(f);
                assert!(
                    certified || !realizable,
                    "no feasible brute-force instance for f={f}, i={i}"
                );
            }
        }
    }

    #[test]
    fn o_sequence_examples() {
        assert_eq!(
            is_o_sequence(&OSequence::new(vec![1, 2, 3, 4])),
            (true, None)
        );
        assert_eq!(
            is_o_sequence(&OSequence::new(vec![1, 2, 5])),
            (false, Some(2))
        );
        assert_eq!(is_o_sequence(&OSequence::new(vec![2, 1])), (false, Some(0)));
        assert_eq!(is_o_sequence(&OSequence::new(vec![1])), (true, None));
        // Zero levels: once a level empties it stays empty.
        assert_eq!(
            is_o_sequence(&OSequence::new(vec![1, 1, 0, 0])),
            (true, None)
        );
        assert_eq!(
            is_o_sequence(&OSequence::new(vec![1, 1, 0, 1])),
            (false, Some(3))
        );
    }

    #[test]
    fn level_bound_for_valid_sequences() {
        // h_i <= C(h_1 + i - 1, i) for every valid O-sequence.
        let sequences = [
            vec![1, 3, 6, 10, 15],
            vec![1, 2, 3, 4],
            vec![1, 4, 10, 20],
            vec![1, 2, 2, 2, 2],
            vec![1, 5, 12, 12, 6],
        ];
        for values in sequences {
            let h = OSequence::new(values);
            assert!(h.is_valid(), "test sequence {:?} invalid", h.values());
            let h1 = h.values()[1] as i64;
            for (i, &hi) in h.values().iter().enumerate() {
                assert!(BigInt::from(hi) <= binomial(h1 + i as i64 - 1, i as i64));
            }
        }
    }

    #[test]
    fn key_lemma_examples() {
        // Extremal case h_i = C(2+i, i): equality at every index.
        let h = OSequence::new(vec![1, 3, 6, 10]);
        assert_eq!(key_lemma_check(&h, 2), Ok(true));
        assert_eq!(key_lemma_equalities(&h, 2), Ok(vec![0, 1, 2, 3]));

        let ones = OSequence::new(vec![1, 1, 1, 1, 1]);
        for n in 0..=5 {
            assert_eq!(key_lemma_check(&ones, n), Ok(true));
        }

        // 3/4 >= C(3,1)/C(4,2) = 1/2.
        let h = OSequence::new(vec![1, 3, 4]);
        assert_eq!(key_lemma_check(&h, 2), Ok(true));
        assert_eq!(key_lemma_equalities(&h, 2), Ok(vec![2]));
    }

    #[test]
    fn key_lemma_rejects_bad_input() {
        assert_eq!(
            key_lemma_check(&OSequence::new(vec![1, 2, 5]), 4),
            Err(Error::InvalidOSequence { index: 2 })
        );
        assert_eq!(
            key_lemma_check(&OSequence::new(vec![1, 1, 0]), 2),
            Err(Error::NonPositiveLevel)
        );
        assert_eq!(
            key_lemma_check(&OSequence::new(vec![1, 4, 4]), 2),
            Err(Error::FirstLevelTooLarge { h1: 4, bound: 3 })
        );
    }

    #[test]
    fn proof_step_inequality_small() {
        // n * h >= s * h^(s-1) for every h up to C(n+s-1, s-1).
        for n in 1..=4i64 {
            for s in 2..=4u32 {
                let cap = binomial(n + s as i64 - 1, s as i64 - 1);
                let cap: u64 = u64::try_from(&cap).unwrap();
                for h in 1..=cap {
                    let lhs = BigInt::from(n) * BigInt::from(h);
                    let rhs = BigInt::from(s) * lower_shift(h, s - 1);
                    assert!(lhs >= rhs, "fails at n={n}, s={s}, h={h}");
                    if h == cap {
                        assert_eq!(lhs, rhs, "extremal case should be equality");
                    }
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "f must be positive")]
    fn represent_rejects_zero_f() {
        let _ = represent(0, 1);
    }

    #[test]
    #[should_panic(expected = "i must be positive")]
    fn represent_rejects_zero_i() {
        let _ = represent(5, 0);
    }
}
