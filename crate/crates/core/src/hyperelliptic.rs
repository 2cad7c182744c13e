//! Polynomial identities behind the symmetric cube of a hyperelliptic
//! genus-3 curve `y² = Π (x - λ_i)` and the lift of the rational curves
//! `γ_x`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};
use crate::rational::{self, Rational};

/// `-λ³ + (x1+x2+x3)λ² - (x1x2+x2x3+x3x1)λ + x1x2x3 + (λ-x1)(λ-x2)(λ-x3)`,
/// which should be zero.
pub fn cubic_factor_difference() -> Polynomial {
    let r = Ring::new(&["l", "x1", "x2", "x3"]);
    let l = r.var("l");
    let (x1, x2, x3) = (r.var("x1"), r.var("x2"), r.var("x3"));
    let e1 = &x1 + &x2 + &x3;
    let e2 = &x1 * &x2 + &x2 * &x3 + &x3 * &x1;
    let e3 = &x1 * &x2 * &x3;
    let lhs = -l.pow(3) + l.pow(2) * e1 - &l * &e2 + e3;
    let rhs = -((&l - &x1) * (&l - &x2) * (&l - &x3));
    lhs - rhs
}

pub fn cubic_factor_identity() -> bool {
    cubic_factor_difference().is_zero()
}

/// `-λ³ + (2w+x)λ² - (w²+2xw)λ + w²x + (λ-w)²(λ-x)`, which should be zero.
pub fn gamma_restriction_difference() -> Polynomial {
    let r = Ring::new(&["l", "w", "x"]);
    let (l, w, x) = (r.var("l"), r.var("w"), r.var("x"));
    let two = rational::int(2);
    let lhs = -l.pow(3) + l.pow(2) * (w.scale(&two) + x.clone())
        - &l * &(&w * &w + (&x * &w).scale(&two))
        + &w * &w * &x;
    let rhs = -((&l - &w).pow(2) * (&l - &x));
    lhs - rhs
}

pub fn gamma_restriction_identity() -> bool {
    gamma_restriction_difference().is_zero()
}

/// Eight pairwise distinct branch points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct BranchData {
    lambdas: Vec<Rational>,
}

impl BranchData {
    pub fn new(lambdas: Vec<Rational>) -> Result<Self> {
        let mut sorted = lambdas.clone();
        sorted.sort();
        sorted.dedup();
        if lambdas.len() != 8 || sorted.len() != 8 {
            return Err(Error::InvalidBranchPoints);
        }
        Ok(BranchData { lambdas })
    }

    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }
}

impl TryFrom<Vec<String>> for BranchData {
    type Error = Error;

    fn try_from(v: Vec<String>) -> Result<Self> {
        let lambdas = v
            .iter()
            .map(|s| rational::parse_rational(s))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        BranchData::new(lambdas)
    }
}

impl From<BranchData> for Vec<String> {
    fn from(b: BranchData) -> Self {
        b.lambdas.iter().map(rational::format_rational).collect()
    }
}

/// Both sides of the pulled-back branch equation in `x1, x2, x3`:
/// `Π_i (-λ_i³ + e1 λ_i² - e2 λ_i + e3)` and `Π_j Π_i (x_j - λ_i)`.
pub fn branch_pullback_sides(data: &BranchData) -> (Polynomial, Polynomial) {
    let r = Ring::new(&["x1", "x2", "x3"]);
    let xs: Vec<Polynomial> = (0..3).map(|i| r.var_at(i)).collect();
    let e1 = &xs[0] + &xs[1] + &xs[2];
    let e2 = &xs[0] * &xs[1] + &xs[1] * &xs[2] + &xs[2] * &xs[0];
    let e3 = &xs[0] * &xs[1] * &xs[2];
    let mut lhs = r.one();
    let mut rhs = r.one();
    for l in data.lambdas() {
        let l2 = l * l;
        let l3 = &l2 * l;
        let branch = r.constant(-l3) + e1.scale(&l2) - e2.scale(l) + e3.clone();
        lhs = &lhs * &branch;
        for x in &xs {
            rhs = &rhs * &(x - &r.constant(l.clone()));
        }
    }
    (lhs, rhs)
}

/// The branch octic pulls back to `(y1 y2 y3)²` modulo `y_j² = Π(x_j - λ_i)`.
pub fn branch_pullback_check(data: &BranchData) -> bool {
    let (lhs, rhs) = branch_pullback_sides(data);
    lhs == rhs
}
