//! Univariate polynomials and piecewise polynomials with exact rational
//! coefficients.
//!
//! This is the integration backend for the volume engine: Irwin–Hall
//! distribution functions (the CDF of a sum of independent uniform `[0,1]`
//! coordinates) are piecewise polynomials with integer breakpoints, and every
//! volume in this crate reduces to exact integrals of products of their
//! pieces.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::combinatorics::{binomial, factorial};
use crate::rational::{rat_int, Rational};

/// Dense univariate polynomial, coefficients in ascending degree order with
/// no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(x + offset)` as a polynomial in `x`.
    pub fn shift(&self, offset: i64) -> Polynomial {
        if offset == 0 || self.is_zero() {
            return self.clone();
        }
        let shift = rat_int(offset);
        // Accumulate coeffs[k] * (x + offset)^k.
        let mut acc = Polynomial::zero();
        let mut power = Polynomial::constant(Rational::one());
        let base = Polynomial::from_coeffs(vec![shift, Rational::one()]);
        for c in &self.coeffs {
            acc = &acc + &(&power * &Polynomial::constant(c.clone()));
            power = &power * &base;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat_int(k as i64))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Polynomial {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat_int(k as i64 + 1));
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Exact integral over `[lo, hi]`.
    pub fn integrate(&self, lo: &Rational, hi: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(hi) - anti.eval(lo)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            coeffs.push(a + b);
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            coeffs.push(a - b);
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

/// Piecewise polynomial on consecutive intervals, extended by constants on
/// both sides.
///
/// `pieces[i]` is the polynomial on `[breakpoints[i], breakpoints[i+1])`;
/// the function takes the constant value `left` below the first breakpoint
/// and `right` from the last breakpoint on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewisePolynomial {
    breakpoints: Vec<Rational>,
    pieces: Vec<Polynomial>,
    left: Rational,
    right: Rational,
}

impl PiecewisePolynomial {
    pub fn new(
        breakpoints: Vec<Rational>,
        pieces: Vec<Polynomial>,
        left: Rational,
        right: Rational,
    ) -> Self {
        assert_eq!(
            breakpoints.len(),
            pieces.len() + 1,
            "need one more breakpoint than pieces"
        );
        assert!(
            breakpoints.windows(2).all(|w| w[0] < w[1]),
            "breakpoints must be strictly increasing"
        );
        PiecewisePolynomial {
            breakpoints,
            pieces,
            left,
            right,
        }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Polynomial] {
        &self.pieces
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        if *x < self.breakpoints[0] {
            return self.left.clone();
        }
        if *x >= *self.breakpoints.last().unwrap() {
            return self.right.clone();
        }
        let idx = self
            .breakpoints
            .windows(2)
            .position(|w| w[0] <= *x && *x < w[1])
            .unwrap();
        self.pieces[idx].eval(x)
    }

    /// True when adjacent pieces agree at every interior breakpoint and the
    /// boundary pieces match the constant extensions.
    pub fn is_continuous(&self) -> bool {
        let first = &self.breakpoints[0];
        let last = self.breakpoints.last().unwrap();
        if self.pieces[0].eval(first) != self.left {
            return false;
        }
        if self.pieces.last().unwrap().eval(last) != self.right {
            return false;
        }
        self.breakpoints[1..self.breakpoints.len() - 1]
            .iter()
            .enumerate()
            .all(|(i, b)| self.pieces[i].eval(b) == self.pieces[i + 1].eval(b))
    }

    /// Piecewise derivative; the constant extensions differentiate to zero.
    pub fn derivative(&self) -> PiecewisePolynomial {
        PiecewisePolynomial::new(
            self.breakpoints.clone(),
            self.pieces.iter().map(Polynomial::derivative).collect(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    /// The polynomial agreeing with this function on the unit interval
    /// `[k, k+1]`. Requires all breakpoints to be integers (so that no
    /// breakpoint falls strictly inside the interval); returns `None`
    /// otherwise.
    pub fn unit_piece(&self, k: i64) -> Option<Polynomial> {
        let lo = rat_int(k);
        let hi = rat_int(k + 1);
        if hi <= self.breakpoints[0] {
            return Some(Polynomial::constant(self.left.clone()));
        }
        if lo >= *self.breakpoints.last().unwrap() {
            return Some(Polynomial::constant(self.right.clone()));
        }
        for (i, w) in self.breakpoints.windows(2).enumerate() {
            if w[0] <= lo && hi <= w[1] {
                return Some(self.pieces[i].clone());
            }
        }
        None
    }

    /// Exact integral over `[lo, hi]`, including the constant extensions.
    pub fn integrate(&self, lo: &Rational, hi: &Rational) -> Rational {
        assert!(lo <= hi, "integration bounds out of order");
        let mut total = Rational::zero();
        let first = self.breakpoints[0].clone();
        let last = self.breakpoints.last().unwrap().clone();
        if *lo < first {
            total += &self.left * (first.clone().min(hi.clone()) - lo.clone());
        }
        if *hi > last {
            total += &self.right * (hi.clone() - last.clone().max(lo.clone()));
        }
        for (i, w) in self.breakpoints.windows(2).enumerate() {
            let a = w[0].clone().max(lo.clone());
            let b = w[1].clone().min(hi.clone());
            if a < b {
                total += self.pieces[i].integrate(&a, &b);
            }
        }
        total
    }
}

/// Irwin–Hall CDF `F_m`: the distribution function of a sum of `m`
/// independent uniform `[0,1]` variables.
///
/// On `[j, j+1]` it equals `(1/m!) * sum_{i=0..=j} (-1)^i C(m,i) (v-i)^m`;
/// it is `0` below `0` and `1` above `m`. Panics if `m == 0`.
pub fn irwin_hall_cdf(m: u32) -> PiecewisePolynomial {
    assert!(m >= 1, "irwin_hall_cdf: m must be positive");
    let m_fact_inv = Rational::one() / rat_int(factorial(m as u64));
    let mut pieces = Vec::with_capacity(m as usize);
    let mut acc = Polynomial::zero();
    for j in 0..m as i64 {
        // Add the (-1)^j C(m,j) (v-j)^m term and keep the running sum.
        let mut term = Polynomial::constant(rat_int(binomial(m as i64, j)) * &m_fact_inv);
        if j % 2 == 1 {
            term = &Polynomial::zero() - &term;
        }
        let monomial = Polynomial::from_coeffs(vec![rat_int(-j), Rational::one()]);
        let mut power = Polynomial::constant(Rational::one());
        for _ in 0..m {
            power = &power * &monomial;
        }
        acc = &acc + &(&term * &power);
        pieces.push(acc.clone());
    }
    let breakpoints = (0..=m as i64).map(rat_int).collect();
    PiecewisePolynomial::new(breakpoints, pieces, Rational::zero(), Rational::one())
}

/// Irwin–Hall density `f_m`, the derivative of [`irwin_hall_cdf`].
pub fn irwin_hall_density(m: u32) -> PiecewisePolynomial {
    irwin_hall_cdf(m).derivative()
}
