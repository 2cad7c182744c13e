//! Exponent vectors and the graded reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector over a fixed variable list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Total degree restricted to the given variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.0[i]).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Appends `extra` zero exponents.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.resize(e.len() + extra, 0);
        Monomial(e)
    }

    /// Renders the monomial with the given variable names, `1` for the unit.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, names }
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.names[i])?;
            } else {
                write!(f, "{}^{}", self.names[i], e)?;
            }
        }
        Ok(())
    }
}

/// Graded reverse lexicographic order.
///
/// `precedence` lists variable indices from highest to lowest. Two monomials
/// of equal total degree are compared on the lowest variable first; the one
/// with the smaller exponent there is the larger monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder {
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Grevlex with the given precedence (highest variable first).
    pub fn grevlex(precedence: Vec<usize>) -> Self {
        let mut seen = precedence.clone();
        seen.sort_unstable();
        assert!(
            seen.iter().enumerate().all(|(i, &v)| i == v),
            "precedence must be a permutation of 0..n"
        );
        MonomialOrder { precedence }
    }

    /// Grevlex where variable 0 is highest, then 1, and so on.
    pub fn grevlex_natural(nvars: usize) -> Self {
        MonomialOrder {
            precedence: (0..nvars).collect(),
        }
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    /// Same order with one new variable appended as the lowest.
    pub fn extended_lowest(&self) -> Self {
        let mut p = self.precedence.clone();
        p.push(p.len());
        MonomialOrder { precedence: p }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let da = a.degree();
        let db = b.degree();
        if da != db {
            return da.cmp(&db);
        }
        for &v in self.precedence.iter().rev() {
            let (ea, eb) = (a.exponent(v), b.exponent(v));
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_textbook_examples() {
        // x > y > z
        let o = MonomialOrder::grevlex_natural(3);
        assert_eq!(o.cmp(&m(&[1, 2, 3]), &m(&[3, 2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 5]), &m(&[1, 2, 4])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 0, 3])), Ordering::Less);
    }

    #[test]
    fn precedence_is_respected() {
        // z > y > x
        let o = MonomialOrder::grevlex(vec![2, 1, 0]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn divisibility_and_lcm() {
        assert!(m(&[1, 0, 2]).divides(&m(&[1, 1, 2])));
        assert!(!m(&[1, 0, 2]).divides(&m(&[0, 1, 2])));
        assert_eq!(m(&[1, 0, 2]).lcm(&m(&[0, 3, 1])), m(&[1, 3, 2]));
        assert_eq!(m(&[1, 0, 2]).quotient_of(&m(&[1, 1, 2])), m(&[0, 1, 0]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 1])));
    }
}
