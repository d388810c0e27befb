//! F-signatures, generalized F-signatures, and dual F-signatures.
//!
//! For a Segre product with ascending factor parameters `r_1 <= ... <= r_t`,
//! the conic divisorial classes form the finite set `C` of integer vectors
//! `z` with `-r_t <= z_i <= r_i` and `-r_j <= z_i - z_j <= r_i`; the
//! generalized F-signature of the class `z` is the volume of a band
//! polytope, and the volumes over `C` partition the unit cube. The dual
//! F-signature is a minimum over non-empty subsets of the canonical
//! generator set, computed here by exhaustive search and bounded above by a
//! weighted sum of class volumes over the subset `D` of `C`.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, eulerian, factorial};
use crate::error::Error;
use crate::rational::{rat, rat_int, Rational};
use crate::staircase::{
    down_set, product_downset_census, segre_generators, validate_segre_parameters,
    veronese_generators, LatticePoint, PointSet, SegreGenerator,
};
use crate::volume::{band_volume, BandPolytope};

/// Default cap on the generator count for exhaustive subset search.
pub const DEFAULT_SUBSET_CAP: u32 = 20;

/// Ascending factor parameters `r_1 <= ... <= r_t` of a Segre product of
/// polynomial rings with `r_i + 1` variables each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreParams {
    r: Vec<u32>,
}

impl SegreParams {
    pub fn new(r: Vec<u32>) -> Result<Self, Error> {
        validate_segre_parameters(&r)?;
        Ok(SegreParams { r })
    }

    pub fn factors(&self) -> &[u32] {
        &self.r
    }

    /// Number of factors `t`.
    pub fn factor_count(&self) -> usize {
        self.r.len()
    }

    /// Ambient lattice dimension `d = r_1 + ... + r_t + 1`.
    pub fn dimension(&self) -> u32 {
        self.r.iter().sum::<u32>() + 1
    }

    pub fn r_top(&self) -> u32 {
        *self.r.last().unwrap()
    }

    /// Membership in the conic class set `C`.
    pub fn contains_conic(&self, z: &ClassVector) -> bool {
        self.check_bands(z, |r_i| (-(self.r_top() as i64), r_i as i64))
    }

    /// Membership in the subset `D` of `C` entering the dual upper bound.
    pub fn in_dual_support(&self, z: &ClassVector) -> bool {
        self.check_bands(z, |r_i| (r_i as i64 - self.r_top() as i64, 0))
    }

    fn check_bands(&self, z: &ClassVector, box_range: impl Fn(u32) -> (i64, i64)) -> bool {
        let t1 = self.factor_count() - 1;
        assert_eq!(z.len(), t1, "class vector arity must be t - 1");
        let z = z.entries();
        for (i, &r_i) in self.r[..t1].iter().enumerate() {
            let (lo, hi) = box_range(r_i);
            if z[i] < lo || z[i] > hi {
                return false;
            }
            for (j, &r_j) in self.r[..t1].iter().enumerate() {
                if z[i] - z[j] < -(r_j as i64) || z[i] - z[j] > r_i as i64 {
                    return false;
                }
            }
        }
        true
    }

    /// All conic classes, in lexicographic order.
    pub fn conic_classes(&self) -> Vec<ClassVector> {
        self.enumerate_classes(|r_i| (-(self.r_top() as i64), r_i as i64))
    }

    /// The classes of `D`, in lexicographic order.
    pub fn dual_support_classes(&self) -> Vec<ClassVector> {
        self.enumerate_classes(|r_i| (r_i as i64 - self.r_top() as i64, 0))
    }

    fn enumerate_classes(&self, box_range: impl Fn(u32) -> (i64, i64)) -> Vec<ClassVector> {
        let t1 = self.factor_count() - 1;
        self.r[..t1]
            .iter()
            .map(|&r_i| {
                let (lo, hi) = box_range(r_i);
                lo..=hi
            })
            .multi_cartesian_product()
            .map(ClassVector::new)
            .filter(|z| {
                let z = z.entries();
                self.r[..t1].iter().enumerate().all(|(i, &r_i)| {
                    self.r[..t1]
                        .iter()
                        .enumerate()
                        .all(|(j, &r_j)| z[i] - z[j] >= -(r_j as i64) && z[i] - z[j] <= r_i as i64)
                })
            })
            .collect()
    }

    /// The band polytope whose volume is the generalized F-signature of the
    /// class `z`.
    pub fn band_polytope(&self, z: &ClassVector) -> BandPolytope {
        let t1 = self.factor_count() - 1;
        assert_eq!(z.len(), t1, "class vector arity must be t - 1");
        BandPolytope::new(
            self.r_top() + 1,
            self.r[..t1].to_vec(),
            z.entries().to_vec(),
        )
        .expect("well-formed by construction")
    }

    /// Generalized F-signature of the class `z`: the exact volume of its
    /// band polytope, and zero outside `C`.
    pub fn gen_f_signature(&self, z: &ClassVector) -> Rational {
        if !self.contains_conic(z) {
            return Rational::zero();
        }
        band_volume(&self.band_polytope(z))
    }

    /// F-signature: the generalized F-signature of the trivial class.
    pub fn f_signature(&self) -> Rational {
        let zero = ClassVector::new(vec![0; self.factor_count() - 1]);
        self.gen_f_signature(&zero)
    }
}

impl fmt::Display for SegreParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_({})", self.r.iter().join(","))
    }
}

/// An element of the divisor class lattice, of length `t - 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassVector {
    z: Vec<i64>,
}

impl ClassVector {
    pub fn new(z: Vec<i64>) -> Self {
        ClassVector { z }
    }

    pub fn entries(&self) -> &[i64] {
        &self.z
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.z.iter().join(","))
    }
}

/// How a reported value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    UpperBound,
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed_form",
            Method::UpperBound => "upper_bound",
            Method::BruteForce => "brute_force",
        })
    }
}

/// A minimizing subset of the canonical generator set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Veronese(Vec<LatticePoint>),
    Segre(Vec<SegreGenerator>),
}

impl Witness {
    pub fn labels(&self) -> Vec<String> {
        match self {
            Witness::Veronese(points) => points.iter().map(|p| p.to_string()).collect(),
            Witness::Segre(gens) => gens.iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Witness::Veronese(points) => points.len(),
            Witness::Segre(gens) => gens.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A computed signature value with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureReport {
    pub value: Rational,
    pub method: Method,
    pub witness: Option<Witness>,
    pub certificates: Vec<String>,
}

/// The two families this crate computes dual F-signatures for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// The `n`-th Veronese subring of a polynomial ring in `d` variables.
    Veronese {
        n: u32,
        d: u32,
    },
    Segre(SegreParams),
}

/// Closed form for the dual F-signature of a Veronese subring:
/// `ceil(d/n) / d`.
pub fn veronese_dual(n: u32, d: u32) -> SignatureReport {
    assert!(n >= 1 && d >= 1, "veronese parameters must be positive");
    SignatureReport {
        value: rat((d as u64).div_ceil(n as u64) as i64, d as i64),
        method: Method::ClosedForm,
        witness: None,
        certificates: Vec::new(),
    }
}

/// Number of canonical generators of a family, without materializing them.
pub fn generator_count(family: &Family) -> BigInt {
    match family {
        Family::Veronese { n, d } => {
            let sum = (*n as u64 * (*d as u64).div_ceil(*n as u64)) as i64;
            binomial(sum - 1, *d as i64 - 1)
        }
        Family::Segre(p) => {
            let r_top = p.r_top() as i64;
            p.factors()[..p.factor_count() - 1]
                .iter()
                .map(|&r_i| binomial(r_top, r_i as i64))
                .product()
        }
    }
}

/// Exhaustive minimization of the normalized union volume over all
/// non-empty subsets of the canonical generator set.
///
/// Subsets are visited by increasing size, then lexicographically, and the
/// first minimizer found is reported as the witness. The per-class volume
/// cache makes each objective evaluation a down-set census plus lookups.
pub fn smirnov_tucker_min(family: &Family, subset_cap: u32) -> Result<SignatureReport, Error> {
    let count = generator_count(family);
    if count > BigInt::from(subset_cap) {
        return Err(Error::SubsetCap {
            size: u64::try_from(&count).unwrap_or(u64::MAX),
            cap: subset_cap,
        });
    }

    let mut best: Option<(Rational, Witness)> = None;
    let mut consider = |value: Rational, witness: Witness| {
        if best.as_ref().is_none_or(|(v, _)| value < *v) {
            best = Some((value, witness));
        }
    };
    let mut subsets_searched = 0u64;

    match family {
        Family::Veronese { n, d } => {
            let generator_set = veronese_generators(*n, *d);
            let generators: Vec<LatticePoint> = generator_set.iter().cloned().collect();
            for size in 1..=generators.len() {
                for subset in (0..generators.len()).combinations(size) {
                    let points: Vec<LatticePoint> =
                        subset.iter().map(|&i| generators[i].clone()).collect();
                    let value = veronese_objective(*n, &points)?;
                    subsets_searched += 1;
                    consider(value, Witness::Veronese(points));
                }
            }
        }
        Family::Segre(p) => {
            let generators = segre_generators(p.factors())?;
            let mut volumes = HashMap::new();
            for size in 1..=generators.len() {
                for subset in (0..generators.len()).combinations(size) {
                    let gens: Vec<SegreGenerator> =
                        subset.iter().map(|&i| generators[i].clone()).collect();
                    let value = segre_objective(p, &gens, &mut volumes)?;
                    subsets_searched += 1;
                    consider(value, Witness::Segre(gens));
                }
            }
        }
    }

    let (value, witness) = best.expect("at least one generator exists");
    Ok(SignatureReport {
        value,
        method: Method::BruteForce,
        witness: Some(witness),
        certificates: vec![format!(
            "exhaustive search over {subsets_searched} non-empty subsets"
        )],
    })
}

/// Re-evaluates the minimization objective at a given subset. This is the
/// quantity [`smirnov_tucker_min`] minimizes, exposed so that reported
/// witnesses can be checked independently.
pub fn dual_objective(family: &Family, subset: &Witness) -> Result<Rational, Error> {
    match (family, subset) {
        (Family::Veronese { n, .. }, Witness::Veronese(points)) => veronese_objective(*n, points),
        (Family::Segre(p), Witness::Segre(gens)) => segre_objective(p, gens, &mut HashMap::new()),
        _ => panic!("witness does not belong to this family"),
    }
}

/// `|I(T)| / (n |T|)`: the union volume of the Veronese staircase over the
/// lattice determinant `n` and the subset size.
fn veronese_objective(n: u32, subset: &[LatticePoint]) -> Result<Rational, Error> {
    let points = PointSet::new(subset.iter().cloned())?;
    let down = down_set(&points)?;
    Ok(rat_int(down.len() as i64) / (rat_int(n as i64) * rat_int(subset.len() as i64)))
}

/// Union volume of the sliced Segre staircase over the subset size: each
/// down-set cell contributes the volume of its class polytope, the class
/// being the block-sum vector shifted by `-(r_t + 1)`.
fn segre_objective(
    p: &SegreParams,
    subset: &[SegreGenerator],
    volumes: &mut HashMap<Vec<i64>, Rational>,
) -> Result<Rational, Error> {
    let census = product_downset_census(subset, p.factors())?;
    let shift = p.r_top() as i64 + 1;
    let mut total = Rational::zero();
    for (sums, count) in census {
        let z: Vec<i64> = sums.iter().map(|&s| s as i64 - shift).collect();
        let volume = match volumes.get(&z) {
            Some(v) => v.clone(),
            None => {
                let v = p.gen_f_signature(&ClassVector::new(z.clone()));
                volumes.insert(z, v.clone());
                v
            }
        };
        total += rat_int(count as i64) * volume;
    }
    Ok(total / rat_int(subset.len() as i64))
}

/// Why the dual upper bound is known to be an equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityReason {
    /// All factors after the first are equal: `r_2 = ... = r_t`.
    EqualTail,
    /// Every factor lies in `{r_1, r_1 + 1}`.
    WithinOneOfLeast,
}

impl fmt::Display for EqualityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EqualityReason::EqualTail => "tail factors all equal",
            EqualityReason::WithinOneOfLeast => "factors within one of the least",
        })
    }
}

/// Detects the known equality cases of the dual upper bound.
pub fn equality_case(p: &SegreParams) -> Option<EqualityReason> {
    let r = p.factors();
    if r[1..].iter().all(|&x| x == r[1]) {
        return Some(EqualityReason::EqualTail);
    }
    if r.iter().all(|&x| x == r[0] || x == r[0] + 1) {
        return Some(EqualityReason::WithinOneOfLeast);
    }
    None
}

/// The weighted-volume upper bound for the dual F-signature of a Segre
/// product: `sum over z in D of prod_i [C(r_t + z_i, r_i) / C(r_t, r_i)]
/// times the class volume`. Reported as a closed form when an equality case
/// applies.
pub fn segre_upper_bound(p: &SegreParams) -> SignatureReport {
    let t1 = p.factor_count() - 1;
    let r_top = p.r_top() as i64;
    let support = p.dual_support_classes();
    let mut value = Rational::zero();
    for z in &support {
        let mut weight = Rational::one();
        for (i, &r_i) in p.factors()[..t1].iter().enumerate() {
            weight *= rat_int(binomial(r_top + z.entries()[i], r_i as i64))
                / rat_int(binomial(r_top, r_i as i64));
        }
        value += weight * p.gen_f_signature(z);
    }
    let mut certificates = vec![format!("summed {} weighted class volumes", support.len())];
    let method = match equality_case(p) {
        Some(reason) => {
            certificates.push(format!("equality case: {reason}"));
            Method::ClosedForm
        }
        None => Method::UpperBound,
    };
    SignatureReport {
        value,
        method,
        witness: None,
        certificates,
    }
}

/// Closed form for the dual F-signature of a two-factor Segre product:
/// `sum_{l=r1..r2} C(l, r1) A(l, d) / (C(r2, r1) d!)` with `d = r1 + r2 + 1`.
pub fn eulerian_dual_closed_form(r1: u32, r2: u32) -> Rational {
    assert!(
        r1 >= 1 && r1 <= r2,
        "factors must be positive and ascending"
    );
    let d = (r1 + r2 + 1) as u64;
    let mut numerator = BigInt::zero();
    for l in r1 as i64..=r2 as i64 {
        numerator += binomial(l, r1 as i64) * eulerian(l, d);
    }
    rat_int(numerator) / rat_int(binomial(r2 as i64, r1 as i64) * factorial(d))
}

/// Both sides of the open equality question: the weighted upper bound and
/// the exhaustive minimum, with an exact comparison. Reports what it finds;
/// asserts nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureProbe {
    pub upper_bound: Rational,
    pub minimum: SignatureReport,
    pub equal: bool,
}

pub fn conjecture_probe(p: &SegreParams, subset_cap: u32) -> Result<ConjectureProbe, Error> {
    let upper_bound = segre_upper_bound(p).value;
    let minimum = smirnov_tucker_min(&Family::Segre(p.clone()), subset_cap)?;
    let equal = upper_bound == minimum.value;
    Ok(ConjectureProbe {
        upper_bound,
        minimum,
        equal,
    })
}
