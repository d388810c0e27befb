//! Lattice points, componentwise order, down-sets, and the generator sets of
//! Veronese subrings and Segre products.
//!
//! The partial order lives on `(Z_{>0})^n`: `a <= b` when every coordinate of
//! `b - a` is nonnegative. The down-set of a finite point set `T` is
//! `I(T) = union over a in T of {b positive : b <= a}`; its level set `H_l`
//! collects members with coordinate sum `l`, and the normalized view
//! `h_l = |H_{l + n}|` starts at the minimum point `(1, ..., 1)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;

/// Default cap on explicit down-set enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A point of `(Z_{>0})^n`; all coordinates are at least 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<u32>,
}

impl LatticePoint {
    pub fn new(coords: Vec<u32>) -> Self {
        assert!(
            !coords.is_empty(),
            "lattice point needs at least one coordinate"
        );
        assert!(
            coords.iter().all(|&c| c >= 1),
            "lattice point coordinates must be positive"
        );
        LatticePoint { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn coord_sum(&self) -> u64 {
        self.coords.iter().map(|&c| c as u64).sum()
    }

    /// Componentwise order on positive points.
    pub fn dominated_by(&self, other: &LatticePoint) -> bool {
        self.arity() == other.arity() && self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite set of lattice points of equal arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    arity: usize,
    points: BTreeSet<LatticePoint>,
}

impl PointSet {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        let mut arity = None;
        for p in points {
            match arity {
                None => arity = Some(p.arity()),
                Some(expected) if expected != p.arity() => {
                    return Err(Error::MixedArity {
                        expected,
                        found: p.arity(),
                    })
                }
                _ => {}
            }
            set.insert(p);
        }
        Ok(PointSet {
            arity: arity.unwrap_or(0),
            points: set,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LatticePoint> {
        self.points.iter()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }
}

/// The down-set generated by a point set, with members materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownSet {
    generated_from: PointSet,
    members: BTreeSet<LatticePoint>,
}

impl DownSet {
    pub fn generators(&self) -> &PointSet {
        &self.generated_from
    }

    pub fn members(&self) -> impl Iterator<Item = &LatticePoint> {
        self.members.iter()
    }

    pub fn len(&self) -> u64 {
        self.members.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.members.contains(p)
    }

    pub fn arity(&self) -> usize {
        self.generated_from.arity()
    }

    /// Count of members per raw coordinate sum `l`.
    pub fn level_census(&self) -> BTreeMap<u64, u64> {
        let mut census = BTreeMap::new();
        for p in &self.members {
            *census.entry(p.coord_sum()).or_insert(0u64) += 1;
        }
        census
    }

    /// Normalized level counts: `h[l] = |H_{l + arity}|`, dense from `l = 0`
    /// to the top level.
    pub fn h_vector(&self) -> Vec<u64> {
        let census = self.level_census();
        let arity = self.arity() as u64;
        match census.keys().next_back() {
            None => Vec::new(),
            Some(&top) => {
                let mut h = vec![0u64; (top - arity + 1) as usize];
                for (l, count) in census {
                    h[(l - arity) as usize] = count;
                }
                h
            }
        }
    }
}

/// Materializes the down-set of a non-empty point set with the default
/// enumeration cap.
pub fn down_set(generators: &PointSet) -> Result<DownSet, Error> {
    down_set_with_cap(generators, DEFAULT_ENUMERATION_CAP)
}

/// Materializes the down-set, refusing to enumerate more than `cap` points.
pub fn down_set_with_cap(generators: &PointSet, cap: u64) -> Result<DownSet, Error> {
    if generators.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut members = BTreeSet::new();
    for top in generators.iter() {
        let mut cursor: Vec<u32> = vec![1; top.arity()];
        'boxes: loop {
            members.insert(LatticePoint::new(cursor.clone()));
            if members.len() as u64 > cap {
                return Err(Error::EnumerationCap { cap });
            }
            // Odometer over the box [1, top].
            for (slot, &limit) in cursor.iter_mut().zip(top.coords()) {
                if *slot < limit {
                    *slot += 1;
                    continue 'boxes;
                }
                *slot = 1;
            }
            break;
        }
    }
    Ok(DownSet {
        generated_from: generators.clone(),
        members,
    })
}

/// Generators of the Veronese family: all positive `d`-tuples with
/// coordinate sum `n * ceil(d / n)`.
pub fn veronese_generators(n: u32, d: u32) -> PointSet {
    assert!(n >= 1 && d >= 1, "veronese parameters must be positive");
    let sum = n as u64 * (d as u64).div_ceil(n as u64);
    let points = crate::reference::positive_tuples(d as usize, sum)
        .into_iter()
        .map(LatticePoint::new);
    PointSet::new(points).expect("equal arities by construction")
}

/// One factor of the Segre generator product: all positive
/// `(r_small + 1)`-tuples with coordinate sum `r_large + 1`. Requires
/// `r_small <= r_large`.
pub fn segre_factor(r_small: u32, r_large: u32) -> Result<PointSet, Error> {
    if r_small > r_large {
        return Err(Error::FactorTooLarge {
            small: r_small,
            large: r_large,
        });
    }
    let points = crate::reference::positive_tuples(r_small as usize + 1, r_large as u64 + 1)
        .into_iter()
        .map(LatticePoint::new);
    Ok(PointSet::new(points).expect("equal arities by construction"))
}

/// An element of the Segre generator set: one tuple from each factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegreGenerator {
    blocks: Vec<LatticePoint>,
}

impl SegreGenerator {
    pub fn new(blocks: Vec<LatticePoint>) -> Self {
        assert!(!blocks.is_empty(), "generator needs at least one block");
        SegreGenerator { blocks }
    }

    pub fn blocks(&self) -> &[LatticePoint] {
        &self.blocks
    }

    /// Concatenation of the blocks into a single lattice point, for product
    /// order computations.
    pub fn flatten(&self) -> LatticePoint {
        let coords = self
            .blocks
            .iter()
            .flat_map(|b| b.coords().iter().copied())
            .collect();
        LatticePoint::new(coords)
    }

    /// The embedding into the ambient lattice: the first `r_i` coordinates
    /// of each block, then `r_t` ones, then `r_t + 1`.
    pub fn embed(&self, r: &[u32]) -> Vec<u32> {
        let t = r.len();
        assert_eq!(self.blocks.len(), t - 1, "block count must be t - 1");
        let r_top = r[t - 1];
        let mut out = Vec::new();
        for (block, &r_i) in self.blocks.iter().zip(r) {
            out.extend_from_slice(&block.coords()[..r_i as usize]);
        }
        out.extend(std::iter::repeat_n(1, r_top as usize));
        out.push(r_top + 1);
        out
    }
}

impl fmt::Display for SegreGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The full Segre generator set `F_1 x ... x F_{t-1}` for ascending factor
/// sizes `r`, in lexicographic order.
pub fn segre_generators(r: &[u32]) -> Result<Vec<SegreGenerator>, Error> {
    validate_segre_parameters(r)?;
    let t = r.len();
    let r_top = r[t - 1];
    let mut generators = vec![Vec::new()];
    for &r_i in &r[..t - 1] {
        let factor = segre_factor(r_i, r_top)?;
        let mut grown = Vec::with_capacity(generators.len() * factor.len());
        for prefix in &generators {
            for point in factor.iter() {
                let mut blocks: Vec<LatticePoint> = prefix.clone();
                blocks.push(point.clone());
                grown.push(blocks);
            }
        }
        generators = grown;
    }
    Ok(generators.into_iter().map(SegreGenerator::new).collect())
}

pub(crate) fn validate_segre_parameters(r: &[u32]) -> Result<(), Error> {
    if r.len() < 2 || r[0] < 1 || r.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadParameters);
    }
    Ok(())
}

/// Census of the down-set of a subset `T` of the Segre generator set, keyed
/// by the vector of block sums `(|c_1|, ..., |c_{t-1}|)`.
pub fn product_downset_census(
    subset: &[SegreGenerator],
    r: &[u32],
) -> Result<BTreeMap<Vec<u64>, u64>, Error> {
    validate_segre_parameters(r)?;
    if subset.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let flattened = PointSet::new(subset.iter().map(SegreGenerator::flatten))?;
    let down = down_set(&flattened)?;
    let block_sizes: Vec<usize> = r[..r.len() - 1].iter().map(|&x| x as usize + 1).collect();
    let mut census = BTreeMap::new();
    for member in down.members() {
        let mut sums = Vec::with_capacity(block_sizes.len());
        let mut offset = 0;
        for &size in &block_sizes {
            let sum: u64 = member.coords()[offset..offset + size]
                .iter()
                .map(|&c| c as u64)
                .sum();
            sums.push(sum);
            offset += size;
        }
        *census.entry(sums).or_insert(0u64) += 1;
    }
    Ok(census)
}
