//! Independent brute-force reference computations.
//!
//! Everything here exists to cross-check the closed forms and fast paths in
//! the rest of the crate. The implementations deliberately share no code with
//! the functions they validate: descents are counted by enumerating
//! permutations, volumes are bracketed by grid counting, and the Macaulay
//! growth bound is recomputed by exhaustive search over level sets.

use itertools::Itertools;

use crate::rational::{rat_int, Rational};

/// Histogram of descent counts over all permutations of `1..=n`.
/// `descent_census(n)[k]` is the number of permutations with `k` descents.
pub fn descent_census(n: usize) -> Vec<u64> {
    assert!((1..=10).contains(&n), "descent_census: n out of range");
    let mut census = vec![0u64; n];
    for perm in (1..=n).permutations(n) {
        let descents = perm.windows(2).filter(|w| w[1] < w[0]).count();
        census[descents] += 1;
    }
    census
}

/// Lower and upper bounds for the volume of the cube slab
/// `{x in [0,1]^dim : lo <= x_1 + ... + x_dim <= hi}` from an `n`-fold grid:
/// cells entirely inside the slab versus cells meeting it.
pub fn cube_slice_grid_bounds(dim: usize, lo: i64, hi: i64, n: i64) -> (Rational, Rational) {
    assert!(dim >= 1 && n >= 1);
    // counts[s] = number of cells whose corner-coordinate sum is s.
    let max_sum = dim as i64 * (n - 1);
    let mut counts = vec![0u128; (max_sum + 1) as usize];
    counts[0] = 1;
    for _ in 0..dim {
        let mut next = vec![0u128; (max_sum + 1) as usize];
        for (s, c) in counts.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            for v in 0..n {
                let t = s + v as usize;
                if t < next.len() {
                    next[t] += c;
                }
            }
        }
        counts = next;
    }
    let cell_volume = rat_int(1) / rat_int(n).pow(dim as i32);
    let mut inside = 0u128;
    let mut touching = 0u128;
    for (s, c) in counts.iter().enumerate() {
        let s = s as i64;
        // Cell [s/n, (s+dim)/n] in sum coordinates.
        if s >= lo * n && s + dim as i64 <= hi * n {
            inside += c;
        }
        if s + dim as i64 > lo * n && s < hi * n {
            touching += c;
        }
    }
    (
        rat_int(inside as i64) * cell_volume.clone(),
        rat_int(touching as i64) * cell_volume,
    )
}

/// Outcome of the exhaustive Macaulay growth search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthSearch {
    /// No down-set in this many variables has a level of the requested size.
    Unrealizable,
    /// The subset enumeration would exceed the work budget.
    Exceeded,
    /// The exact maximum of the next level size.
    Max(u64),
}

/// Exhaustive maximum of `h_{level+1}` over all down-sets in
/// `(Z_{>0})^vars` whose `level`-th normalized level has exactly
/// `level_size` points.
///
/// A down-set with `h_level = f` and next level `A` exists iff the lower
/// shadow of `A` has at most `f` points and the level slice holds at least
/// `f` points, so the search ranges over all `f`-subsets `S` of the level
/// slice and counts the points of the next slice whose shadow lies in `S`.
/// `max_subsets` bounds the number of subsets visited.
pub fn max_level_growth(
    vars: usize,
    level: u32,
    level_size: u64,
    max_subsets: u64,
) -> GrowthSearch {
    assert!(vars >= 1 && level >= 1 && level_size >= 1);
    let lower = positive_tuples(vars, level as u64 + vars as u64);
    if (lower.len() as u64) < level_size {
        return GrowthSearch::Unrealizable;
    }
    if lower.len() > 63 {
        return GrowthSearch::Exceeded;
    }
    let subset_count = {
        let c = crate::combinatorics::binomial(lower.len() as i64, level_size as i64);
        match u64::try_from(&c) {
            Ok(v) => v,
            Err(_) => return GrowthSearch::Exceeded,
        }
    };
    if subset_count > max_subsets {
        return GrowthSearch::Exceeded;
    }

    let index_of = |point: &[u32]| lower.iter().position(|p| p == point).unwrap();
    let upper = positive_tuples(vars, level as u64 + 1 + vars as u64);
    let shadow_masks: Vec<u64> = upper
        .iter()
        .map(|p| {
            let mut mask = 0u64;
            for j in 0..vars {
                if p[j] >= 2 {
                    let mut q = p.clone();
                    q[j] -= 1;
                    mask |= 1 << index_of(&q);
                }
            }
            mask
        })
        .collect();

    let mut best = 0u64;
    for subset in (0..lower.len()).combinations(level_size as usize) {
        let mut chosen = 0u64;
        for idx in subset {
            chosen |= 1 << idx;
        }
        let grown = shadow_masks
            .iter()
            .filter(|mask| *mask & !chosen == 0)
            .count() as u64;
        best = best.max(grown);
    }
    GrowthSearch::Max(best)
}

/// All tuples in `(Z_{>0})^vars` with the given coordinate sum, in
/// lexicographic order.
pub fn positive_tuples(vars: usize, sum: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(vars);
    fill_tuples(vars, sum, &mut current, &mut out);
    out
}

fn fill_tuples(vars: usize, sum: u64, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if vars == 1 {
        if sum >= 1 {
            current.push(sum as u32);
            out.push(current.clone());
            current.pop();
        }
        return;
    }
    for v in 1..=sum.saturating_sub(vars as u64 - 1) {
        current.push(v as u32);
        fill_tuples(vars - 1, sum - v, current, out);
        current.pop();
    }
}
