//! Exact Euclidean volumes: a block-factorized integrator for band
//! polytopes, and a generic half-space oracle for small dimensions.
//!
//! A band polytope lives in the unit cube `[0,1]^d` with the coordinates
//! split into one shared block of size `m` and disjoint private blocks of
//! sizes `r_1, ..., r_k`. Writing `v` for the shared-block sum and `s_i` for
//! the `i`-th private-block sum, the constraints are the unit-width bands
//! `v + z_i - 1 <= s_i <= v + z_i`. Because the blocks are disjoint, the
//! volume factorizes through the Irwin–Hall distribution:
//!
//! ```text
//! Vol = integral over v of  f_m(v) * prod_i [F_{r_i}(v + z_i) - F_{r_i}(v + z_i - 1)]
//! ```
//!
//! with `F` the Irwin–Hall CDF and `f_m` its density. The integrand is a
//! piecewise polynomial with integer breakpoints and is integrated exactly.
//! The half-space oracle recomputes the same volumes independently by the
//! recursive facet formula `Vol = (1/d) * sum_i (b_i / |a_{i,j}|) * Vol(facet_i
//! projected along coordinate j)`, so the two routes cross-check each other.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::poly::{irwin_hall_cdf, irwin_hall_density};
use crate::rational::{rat_int, Rational};

/// Largest dimension the half-space oracle accepts.
pub const ORACLE_DIMENSION_CAP: usize = 6;

/// A cube slice with unit-width band constraints tying each private block to
/// the shared block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandPolytope {
    shared_block: u32,
    private_blocks: Vec<u32>,
    band_offsets: Vec<i64>,
}

impl BandPolytope {
    /// `shared_block` is the number of shared coordinates, `private_blocks`
    /// the sizes of the private blocks, and `band_offsets[i] = z_i` puts the
    /// `i`-th band at `[z_i - 1, z_i]`.
    pub fn new(
        shared_block: u32,
        private_blocks: Vec<u32>,
        band_offsets: Vec<i64>,
    ) -> Result<Self, Error> {
        if shared_block < 1 || private_blocks.iter().any(|&b| b < 1) {
            return Err(Error::BadParameters);
        }
        if private_blocks.len() != band_offsets.len() {
            return Err(Error::BandMismatch {
                bands: band_offsets.len(),
                blocks: private_blocks.len(),
            });
        }
        Ok(BandPolytope {
            shared_block,
            private_blocks,
            band_offsets,
        })
    }

    pub fn shared_block(&self) -> u32 {
        self.shared_block
    }

    pub fn private_blocks(&self) -> &[u32] {
        &self.private_blocks
    }

    pub fn band_offsets(&self) -> &[i64] {
        &self.band_offsets
    }

    pub fn dimension(&self) -> usize {
        self.shared_block as usize
            + self
                .private_blocks
                .iter()
                .map(|&b| b as usize)
                .sum::<usize>()
    }
}

/// Exact volume of a band polytope by block-factorized integration.
pub fn band_volume(p: &BandPolytope) -> Rational {
    let m = p.shared_block;
    let density = irwin_hall_density(m);
    let mut cdfs: HashMap<u32, _> = HashMap::new();
    for &r in &p.private_blocks {
        cdfs.entry(r).or_insert_with(|| irwin_hall_cdf(r));
    }

    let mut total = Rational::zero();
    for k in 0..m as i64 {
        let mut integrand = density
            .unit_piece(k)
            .expect("integer breakpoints cover every unit interval");
        for (&r, &z) in p.private_blocks.iter().zip(&p.band_offsets) {
            if integrand.is_zero() {
                break;
            }
            let cdf = &cdfs[&r];
            let upper = cdf.unit_piece(k + z).unwrap().shift(z);
            let lower = cdf.unit_piece(k + z - 1).unwrap().shift(z - 1);
            integrand = &integrand * &(&upper - &lower);
        }
        total += integrand.integrate(&rat_int(k), &rat_int(k + 1));
    }
    total
}

/// Bounded polytope in half-space form: rows `a . x <= b` with integer
/// coefficients and rational bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    dimension: usize,
    halfspaces: Vec<(Vec<BigInt>, Rational)>,
}

impl HPolytope {
    pub fn new(dimension: usize, halfspaces: Vec<(Vec<i64>, Rational)>) -> Result<Self, Error> {
        let mut rows = Vec::with_capacity(halfspaces.len());
        for (coeffs, bound) in halfspaces {
            if coeffs.len() != dimension {
                return Err(Error::RowLength {
                    expected: dimension,
                    found: coeffs.len(),
                });
            }
            rows.push((coeffs.into_iter().map(BigInt::from).collect(), bound));
        }
        Ok(HPolytope {
            dimension,
            halfspaces: rows,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn halfspaces(&self) -> &[(Vec<BigInt>, Rational)] {
        &self.halfspaces
    }

    /// The unit cube `[0,1]^dim`.
    pub fn cube(dimension: usize) -> HPolytope {
        let mut halfspaces = Vec::with_capacity(2 * dimension);
        for j in 0..dimension {
            let mut upper = vec![0i64; dimension];
            upper[j] = 1;
            halfspaces.push((upper.clone(), rat_int(1)));
            upper[j] = -1;
            halfspaces.push((upper, rat_int(0)));
        }
        HPolytope::new(dimension, halfspaces).expect("consistent rows")
    }

    /// The same region as a band polytope, written in half-space form with
    /// coordinates ordered private blocks first, shared block last.
    pub fn from_band(p: &BandPolytope) -> HPolytope {
        let dim = p.dimension();
        let mut halfspaces = Vec::new();
        for j in 0..dim {
            let mut row = vec![0i64; dim];
            row[j] = 1;
            halfspaces.push((row.clone(), rat_int(1)));
            row[j] = -1;
            halfspaces.push((row, rat_int(0)));
        }
        let private_total: usize = p.private_blocks.iter().map(|&b| b as usize).sum();
        let mut offset = 0;
        for (&r, &z) in p.private_blocks.iter().zip(&p.band_offsets) {
            // s_i - v <= z_i and v - s_i <= 1 - z_i.
            let mut row = vec![0i64; dim];
            row[offset..offset + r as usize].fill(1);
            row[private_total..dim].fill(-1);
            halfspaces.push((row.iter().map(|&c| -c).collect(), rat_int(1 - z)));
            halfspaces.push((row, rat_int(z)));
            offset += r as usize;
        }
        HPolytope::new(dim, halfspaces).expect("consistent rows")
    }
}

/// Memo table shared between oracle runs; sub-polytopes recur often.
#[derive(Debug, Default)]
pub struct VolumeCache {
    table: HashMap<Vec<(Vec<BigInt>, Rational)>, Rational>,
}

impl VolumeCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// Exact volume by recursive facet decomposition. Only intended as an
/// independent cross-check of [`band_volume`]; refuses dimensions above
/// [`ORACLE_DIMENSION_CAP`] and inputs it cannot verify bounded.
pub fn oracle_volume(p: &HPolytope) -> Result<Rational, Error> {
    oracle_volume_cached(p, &mut VolumeCache::new())
}

/// [`oracle_volume`] with a caller-owned memo table.
pub fn oracle_volume_cached(p: &HPolytope, cache: &mut VolumeCache) -> Result<Rational, Error> {
    if p.dimension > ORACLE_DIMENSION_CAP {
        return Err(Error::DimensionCap {
            max: ORACLE_DIMENSION_CAP,
            got: p.dimension,
        });
    }
    if p.dimension == 0 {
        return Ok(rat_int(1));
    }
    let rows = match canonical_rows(p.dimension, &p.halfspaces) {
        Some(rows) => rows,
        None => return Ok(Rational::zero()),
    };
    verify_bounded(p.dimension, &rows)?;
    Ok(volume_rec(p.dimension, rows, cache))
}

/// Normalizes rows (gcd-reduced coefficients, tightest bound per direction).
/// Returns `None` when a trivially infeasible row is found.
fn canonical_rows(
    dimension: usize,
    rows: &[(Vec<BigInt>, Rational)],
) -> Option<Vec<(Vec<BigInt>, Rational)>> {
    let mut tightest: HashMap<Vec<BigInt>, Rational> = HashMap::new();
    for (coeffs, bound) in rows {
        debug_assert_eq!(coeffs.len(), dimension);
        if coeffs.iter().all(Zero::is_zero) {
            if bound < &Rational::zero() {
                return None;
            }
            continue;
        }
        let gcd = coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&c.abs()));
        let coeffs: Vec<BigInt> = coeffs.iter().map(|c| c / &gcd).collect();
        let bound = bound / rat_int(gcd);
        tightest
            .entry(coeffs)
            .and_modify(|b| {
                if bound < *b {
                    *b = bound.clone();
                }
            })
            .or_insert(bound);
    }
    // Opposite directions with incompatible bounds mean an empty polytope.
    for (coeffs, bound) in &tightest {
        let negated: Vec<BigInt> = coeffs.iter().map(|c| -c).collect();
        if let Some(other) = tightest.get(&negated) {
            if bound + other < Rational::zero() {
                return None;
            }
        }
    }
    let mut out: Vec<_> = tightest.into_iter().collect();
    out.sort();
    Some(out)
}

fn volume_rec(
    dimension: usize,
    rows: Vec<(Vec<BigInt>, Rational)>,
    cache: &mut VolumeCache,
) -> Rational {
    if dimension == 1 {
        let mut lower: Option<Rational> = None;
        let mut upper: Option<Rational> = None;
        for (coeffs, bound) in &rows {
            let a = &coeffs[0];
            let candidate = bound / rat_int(a.clone());
            if a.is_positive() {
                upper = Some(upper.map_or(candidate.clone(), |u: Rational| u.min(candidate)));
            } else {
                lower = Some(lower.map_or(candidate.clone(), |l: Rational| l.max(candidate)));
            }
        }
        let (lower, upper) = (
            lower.expect("bounded interval has a lower bound"),
            upper.expect("bounded interval has an upper bound"),
        );
        return (upper - lower).max(Rational::zero());
    }

    if let Some(hit) = cache.table.get(&rows) {
        return hit.clone();
    }

    let mut total = Rational::zero();
    for (facet_idx, (coeffs, bound)) in rows.iter().enumerate() {
        let pivot = coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("zero rows were removed");
        let projected = project_onto_facet(&rows, facet_idx, pivot);
        let facet_volume = match projected {
            Some(sub) => volume_rec(dimension - 1, sub, cache),
            None => Rational::zero(),
        };
        if !facet_volume.is_zero() {
            total += bound / rat_int(coeffs[pivot].abs()) * facet_volume;
        }
    }
    total /= rat_int(dimension as i64);
    cache.table.insert(rows, total.clone());
    total
}

/// Substitutes the facet equality `a . x = b` into every other row,
/// eliminating the pivot coordinate. Returns `None` when the facet is
/// trivially empty.
fn project_onto_facet(
    rows: &[(Vec<BigInt>, Rational)],
    facet_idx: usize,
    pivot: usize,
) -> Option<Vec<(Vec<BigInt>, Rational)>> {
    let (a, b) = &rows[facet_idx];
    let a_pivot = &a[pivot];
    let scale = a_pivot.abs();
    let sign = if a_pivot.is_positive() { 1 } else { -1 };
    let mut projected = Vec::with_capacity(rows.len() - 1);
    for (idx, (c, d)) in rows.iter().enumerate() {
        if idx == facet_idx {
            continue;
        }
        let c_pivot = &c[pivot] * BigInt::from(sign);
        let mut coeffs = Vec::with_capacity(c.len() - 1);
        for k in 0..c.len() {
            if k == pivot {
                continue;
            }
            coeffs.push(&c[k] * &scale - &c_pivot * &a[k]);
        }
        let bound = d * rat_int(scale.clone()) - rat_int(c_pivot) * b;
        projected.push((coeffs, bound));
    }
    canonical_rows(a.len() - 1, &projected)
}

/// Interval propagation proof of boundedness. Each pass derives coordinate
/// bounds from rows whose other coordinates are already bounded on the
/// needed side; all coordinates must end up with finite bounds both ways.
fn verify_bounded(dimension: usize, rows: &[(Vec<BigInt>, Rational)]) -> Result<(), Error> {
    let mut lower: Vec<Option<Rational>> = vec![None; dimension];
    let mut upper: Vec<Option<Rational>> = vec![None; dimension];
    for _ in 0..=dimension {
        if lower.iter().all(Option::is_some) && upper.iter().all(Option::is_some) {
            return Ok(());
        }
        for (coeffs, bound) in rows {
            'target: for j in 0..dimension {
                if coeffs[j].is_zero() {
                    continue;
                }
                // a_j x_j <= bound - sum_{k != j} a_k x_k
                //        <= bound - sum_{k != j} min(a_k x_k).
                let mut rest = Rational::zero();
                for k in 0..dimension {
                    if k == j || coeffs[k].is_zero() {
                        continue;
                    }
                    let source = if coeffs[k].is_positive() {
                        &lower[k]
                    } else {
                        &upper[k]
                    };
                    match source {
                        Some(value) => rest += rat_int(coeffs[k].clone()) * value,
                        None => continue 'target,
                    }
                }
                let candidate = (bound - rest) / rat_int(coeffs[j].clone());
                if coeffs[j].is_positive() {
                    if upper[j].as_ref().is_none_or(|u| candidate < *u) {
                        upper[j] = Some(candidate);
                    }
                } else if lower[j].as_ref().is_none_or(|l| candidate > *l) {
                    lower[j] = Some(candidate);
                }
            }
        }
    }
    if lower.iter().all(Option::is_some) && upper.iter().all(Option::is_some) {
        Ok(())
    } else {
        Err(Error::Unbounded)
    }
}
