//! Exact algebra of generalized polynomials `sum c * t^(m + n*theta)`.
//!
//! The decomposition iterates of the model never leave this function
//! class: constants map into it, products stay in it, and the ABC inverse
//! operator maps it into itself. Exponents are stored as the integer pair
//! `(m, n)` rather than as the floating value `m + n*theta`, so exponent
//! identity is exact and never subject to rounding collisions.
//!
//! The ABC inverse realizes, term by term, the closed-form solution of
//! `D^theta x = g` with zero initial value:
//!
//! `g -> (1-theta)/B * g + theta/B * I^theta g`,
//!
//! where `I^theta` maps `c * t^a` to `c * Gamma(a+1)/Gamma(a+theta+1) *
//! t^(a+theta)` and `B` is the kernel normalization (1 in all shipped
//! scenarios).

use crate::fmt::format_significant;
use crate::special::{gamma, SpecialError};
use thiserror::Error;

/// Coefficients smaller than this are dropped during normalization; pure
/// denormal guard, not an accuracy truncation.
const PRUNE_EPS: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("mismatched fractional orders: {0} vs {1}")]
    MismatchedOrder(f64, f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// One term `coeff * t^(m + n*theta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaMonomial {
    pub coeff: f64,
    /// Integer part of the exponent.
    pub m: u32,
    /// Theta multiplicity of the exponent.
    pub n: u32,
}

impl ThetaMonomial {
    pub fn new(coeff: f64, m: u32, n: u32) -> Self {
        Self { coeff, m, n }
    }
}

/// Finite sum of [`ThetaMonomial`]s sharing one fractional order.
///
/// Terms are kept unique in `(m, n)`, sorted by ascending exponent value
/// `m + n*theta` (ties broken by `(m, n)`), and pruned of denormal
/// coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaPolynomial {
    terms: Vec<ThetaMonomial>,
    theta: f64,
}

impl ThetaPolynomial {
    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn new(theta: f64, terms: Vec<ThetaMonomial>) -> Result<Self, PolyError> {
        check_theta(theta)?;
        let mut poly = Self { terms, theta };
        poly.normalize();
        Ok(poly)
    }

    /// The zero polynomial of order `theta`.
    pub fn zero(theta: f64) -> Result<Self, PolyError> {
        Self::new(theta, Vec::new())
    }

    /// The constant polynomial `c`.
    pub fn constant(theta: f64, c: f64) -> Result<Self, PolyError> {
        Self::new(theta, vec![ThetaMonomial::new(c, 0, 0)])
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn terms(&self) -> &[ThetaMonomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponent value of a term under this polynomial's order.
    pub fn exponent_value(&self, term: &ThetaMonomial) -> f64 {
        term.m as f64 + term.n as f64 * self.theta
    }

    /// Evaluates at `t >= 0`. At `t = 0` only the `(0, 0)` term
    /// contributes.
    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for term in &self.terms {
            acc += term.coeff * t.powf(self.exponent_value(term));
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.theta != other.theta {
            return Err(PolyError::MismatchedOrder(self.theta, other.theta));
        }
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Self::new(self.theta, terms)
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut out = self.clone();
        for term in &mut out.terms {
            term.coeff *= c;
        }
        out.normalize();
        out
    }

    /// Cauchy product; exponents merge as `(m1 + m2, n1 + n2)`.
    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        if self.theta != other.theta {
            return Err(PolyError::MismatchedOrder(self.theta, other.theta));
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(ThetaMonomial::new(a.coeff * b.coeff, a.m + b.m, a.n + b.n));
            }
        }
        Self::new(self.theta, terms)
    }

    /// Applies the closed-form ABC inverse operator with normalization
    /// `b_norm`:
    ///
    /// `c t^a -> (1-theta)/b * c t^a + theta/b * Gamma(a+1)/Gamma(a+theta+1) * c t^(a+theta)`.
    pub fn abc_inverse(&self, b_norm: f64) -> Result<Self, PolyError> {
        if !(b_norm > 0.0) || !b_norm.is_finite() {
            return Err(PolyError::Domain(format!(
                "normalization must be positive and finite, got {b_norm}"
            )));
        }
        let theta = self.theta;
        let mut terms = Vec::with_capacity(self.terms.len() * 2);
        for term in &self.terms {
            let a = self.exponent_value(term);
            terms.push(ThetaMonomial::new(
                (1.0 - theta) / b_norm * term.coeff,
                term.m,
                term.n,
            ));
            let ratio = gamma(a + 1.0)? / gamma(a + theta + 1.0)?;
            terms.push(ThetaMonomial::new(
                theta / b_norm * ratio * term.coeff,
                term.m,
                term.n + 1,
            ));
        }
        Self::new(theta, terms)
    }

    fn normalize(&mut self) {
        let theta = self.theta;
        self.terms
            .sort_by(|a, b| (a.m, a.n).cmp(&(b.m, b.n)));
        let mut merged: Vec<ThetaMonomial> = Vec::with_capacity(self.terms.len());
        for term in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if (last.m, last.n) == (term.m, term.n) => last.coeff += term.coeff,
                _ => merged.push(term),
            }
        }
        merged.retain(|t| t.coeff.abs() >= PRUNE_EPS);
        merged.sort_by(|a, b| {
            let ea = a.m as f64 + a.n as f64 * theta;
            let eb = b.m as f64 + b.n as f64 * theta;
            ea.total_cmp(&eb).then((a.m, a.n).cmp(&(b.m, b.n)))
        });
        self.terms = merged;
    }
}

fn check_theta(theta: f64) -> Result<(), PolyError> {
    if !(theta > 0.0 && theta <= 1.0) {
        return Err(PolyError::Domain(format!(
            "fractional order must lie in (0, 1], got {theta}"
        )));
    }
    Ok(())
}

impl std::fmt::Display for ThetaPolynomial {
    /// Human-readable rendering, e.g. `0.5 + 0.56419*t^(0.5)`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            let coeff = if i == 0 {
                term.coeff
            } else {
                f.write_str(if term.coeff < 0.0 { " - " } else { " + " })?;
                term.coeff.abs()
            };
            write!(f, "{}", format_significant(coeff, 6))?;
            if (term.m, term.n) != (0, 0) {
                let e = self.exponent_value(term);
                write!(f, "*t^({})", format_significant(e, 6))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(theta: f64, terms: &[(f64, u32, u32)]) -> ThetaPolynomial {
        ThetaPolynomial::new(
            theta,
            terms
                .iter()
                .map(|&(c, m, n)| ThetaMonomial::new(c, m, n))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn eval_constant() {
        assert_eq!(poly(0.5, &[(1.0, 0, 0)]).eval(7.0), 1.0);
    }

    #[test]
    fn eval_direct_power() {
        // 2 * t^(1 + theta), theta = 0.5, t = 4 -> 2 * 4^1.5 = 16
        assert_eq!(poly(0.5, &[(2.0, 1, 1)]).eval(4.0), 16.0);
    }

    #[test]
    fn eval_cancellation_at_theta_one() {
        let p = poly(1.0, &[(1.0, 0, 0), (-1.0, 0, 1)]);
        assert_eq!(p.eval(1.0), 0.0);
    }

    #[test]
    fn eval_at_zero_keeps_only_constant() {
        let p = poly(0.7, &[(3.5, 0, 0), (100.0, 0, 1), (-2.0, 1, 0)]);
        assert_eq!(p.eval(0.0), 3.5);
    }

    #[test]
    fn add_cancels_and_prunes() {
        let a = poly(0.5, &[(1.0, 0, 0)]);
        let b = poly(0.5, &[(-1.0, 0, 0)]);
        let sum = a.add(&b).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn mul_adds_exponents() {
        let a = poly(0.5, &[(1.0, 0, 1)]);
        let product = a.mul(&a).unwrap();
        assert_eq!(product.terms(), &[ThetaMonomial::new(1.0, 0, 2)]);
    }

    #[test]
    fn scale_is_plain() {
        let p = poly(0.5, &[(3.0, 1, 0)]).scale(2.0);
        assert_eq!(p.terms(), &[ThetaMonomial::new(6.0, 1, 0)]);
    }

    #[test]
    fn mismatched_theta_rejected() {
        let a = poly(0.5, &[(1.0, 0, 0)]);
        let b = poly(0.7, &[(1.0, 0, 0)]);
        assert!(matches!(a.add(&b), Err(PolyError::MismatchedOrder(_, _))));
        assert!(matches!(a.mul(&b), Err(PolyError::MismatchedOrder(_, _))));
    }

    #[test]
    fn theta_range_enforced() {
        assert!(ThetaPolynomial::zero(0.0).is_err());
        assert!(ThetaPolynomial::zero(1.5).is_err());
        assert!(ThetaPolynomial::zero(-0.5).is_err());
        assert!(ThetaPolynomial::zero(1.0).is_ok());
    }

    #[test]
    fn abc_inverse_classical_antiderivative() {
        // theta = 1, b = 1: constant c integrates to c*t.
        let g = poly(1.0, &[(3.0, 0, 0)]);
        let out = g.abc_inverse(1.0).unwrap();
        assert_eq!(out.terms().len(), 1);
        let t = out.terms()[0];
        assert_eq!((t.m, t.n), (0, 1));
        assert!((t.coeff - 3.0).abs() < 1e-14);
    }

    #[test]
    fn abc_inverse_constant_half_order() {
        // g = 1, theta = 0.5, b = 1 -> 0.5 + (0.5 / Gamma(1.5)) t^0.5;
        // 0.5 / Gamma(1.5) = 1/sqrt(pi).
        let g = poly(0.5, &[(1.0, 0, 0)]);
        let out = g.abc_inverse(1.0).unwrap();
        assert_eq!(out.terms().len(), 2);
        assert!((out.terms()[0].coeff - 0.5).abs() < 1e-15);
        assert_eq!((out.terms()[1].m, out.terms()[1].n), (0, 1));
        assert!((out.terms()[1].coeff - 0.56418958354775628695).abs() < 1e-13);
    }

    #[test]
    fn abc_inverse_monomial_half_order() {
        // g = t^theta, theta = 0.5: second coefficient 0.5*Gamma(1.5)/Gamma(2).
        let g = poly(0.5, &[(1.0, 0, 1)]);
        let out = g.abc_inverse(1.0).unwrap();
        assert_eq!(out.terms().len(), 2);
        assert!((out.terms()[0].coeff - 0.5).abs() < 1e-15);
        assert_eq!((out.terms()[1].m, out.terms()[1].n), (0, 2));
        assert!((out.terms()[1].coeff - 0.44311346272637900682).abs() < 1e-13);
    }

    #[test]
    fn abc_inverse_eval_at_zero_identity() {
        // eval(abc_inverse(g), 0) = (1-theta)/b * eval(g, 0).
        for theta in [0.3, 0.5, 0.85, 1.0] {
            let g = poly(theta, &[(2.5, 0, 0), (1.0, 0, 1), (-0.5, 1, 0)]);
            let b = 1.25;
            let out = g.abc_inverse(b).unwrap();
            let want = (1.0 - theta) / b * g.eval(0.0);
            assert_eq!(out.eval(0.0), want, "theta={theta}");
        }
    }

    #[test]
    fn abc_inverse_rejects_bad_norm() {
        let g = poly(0.5, &[(1.0, 0, 0)]);
        assert!(matches!(g.abc_inverse(0.0), Err(PolyError::Domain(_))));
        assert!(matches!(g.abc_inverse(-1.0), Err(PolyError::Domain(_))));
    }

    #[test]
    fn display_matches_expected_shape() {
        let g = poly(0.5, &[(1.0, 0, 0)]);
        let out = g.abc_inverse(1.0).unwrap();
        assert_eq!(out.to_string(), "0.5 + 0.56419*t^(0.5)");
        assert_eq!(ThetaPolynomial::zero(0.5).unwrap().to_string(), "0");
        let q = poly(1.0, &[(-2.0, 0, 0), (0.25, 1, 1)]);
        assert_eq!(q.to_string(), "-2 + 0.25*t^(2)");
    }

    prop_compose! {
        fn arb_poly(theta: f64)(
            terms in prop::collection::vec(
                (-10.0f64..10.0, 0u32..4, 0u32..4).prop_map(|(c, m, n)| ThetaMonomial::new(c, m, n)),
                0..6,
            )
        ) -> ThetaPolynomial {
            ThetaPolynomial::new(theta, terms).unwrap()
        }
    }

    proptest! {
        #[test]
        fn abc_inverse_is_linear(a in arb_poly(0.6), b in arb_poly(0.6)) {
            let lhs = a.add(&b).unwrap().abc_inverse(1.0).unwrap();
            let rhs = a
                .abc_inverse(1.0)
                .unwrap()
                .add(&b.abc_inverse(1.0).unwrap())
                .unwrap();
            // Coefficient-wise exactness: same Gamma ratios applied before
            // the additions commute with them in IEEE arithmetic only up
            // to the final add, which is identical on both sides here.
            prop_assert_eq!(lhs.terms().len(), rhs.terms().len());
            for (x, y) in lhs.terms().iter().zip(rhs.terms()) {
                prop_assert_eq!((x.m, x.n), (y.m, y.n));
                prop_assert!((x.coeff - y.coeff).abs() <= 1e-15 * x.coeff.abs().max(1e-30));
            }
        }

        #[test]
        fn theta_one_reduces_to_ordinary_integration(a in arb_poly(1.0)) {
            let out = a.abc_inverse(1.0).unwrap();
            // t^a -> t^(a+1)/(a+1) via Gamma(a+1)/Gamma(a+2) = 1/(a+1).
            for term in a.terms() {
                let e = a.exponent_value(term);
                let target = out
                    .terms()
                    .iter()
                    .find(|t| (t.m, t.n) == (term.m, term.n + 1))
                    .expect("integrated term present");
                let want = term.coeff / (e + 1.0);
                prop_assert!(
                    (target.coeff - want).abs() <= 1e-12 * want.abs().max(1e-30),
                    "t^{} integration: {} vs {}", e, target.coeff, want
                );
            }
        }

        #[test]
        fn mul_commutes(a in arb_poly(0.8), b in arb_poly(0.8)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        }

        #[test]
        fn mul_exponents_are_minkowski_sum(a in arb_poly(0.8), b in arb_poly(0.8)) {
            let product = a.mul(&b).unwrap();
            let expected: std::collections::BTreeSet<(u32, u32)> = a
                .terms()
                .iter()
                .flat_map(|x| b.terms().iter().map(move |y| (x.m + y.m, x.n + y.n)))
                .collect();
            for term in product.terms() {
                prop_assert!(expected.contains(&(term.m, term.n)));
            }
            // The reverse inclusion can fail only through coefficient
            // cancellation, which the pruning invariant allows.
        }

        #[test]
        fn mul_associates(a in arb_poly(0.4), b in arb_poly(0.4), c in arb_poly(0.4)) {
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs.terms().len(), rhs.terms().len());
            for (x, y) in lhs.terms().iter().zip(rhs.terms()) {
                prop_assert_eq!((x.m, x.n), (y.m, y.n));
                prop_assert!((x.coeff - y.coeff).abs() <= 1e-12 * x.coeff.abs().max(1e-30));
            }
        }
    }
}
