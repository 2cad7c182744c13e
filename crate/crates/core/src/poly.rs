//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every [`Polynomial`] carries the [`Ring`] (ordered variable list) it
//! lives in. Terms are kept in a `BTreeMap` keyed by exponent vector, and
//! zero coefficients are never stored, so structural equality is value
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::rational::{self, Rational};

/// An ordered list of variable names. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Ring(Arc<[String]>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

/// A variable of a ring: its name and position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub index: usize,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        let v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in v.iter().enumerate() {
            assert!(
                !v[..i].contains(n),
                "duplicate variable name {n:?} in ring declaration"
            );
        }
        Ring(v.into())
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn variable(&self, index: usize) -> Variable {
        Variable {
            name: self.0[index].clone(),
            index,
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn lookup(&self, name: &str) -> Result<Variable> {
        self.index_of(name)
            .map(|index| self.variable(index))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The variable `name` as a polynomial. Panics on an undeclared name.
    pub fn var(&self, name: &str) -> Polynomial {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("variable {name:?} not in ring {:?}", self.0));
        self.var_at(i)
    }

    pub fn var_at(&self, index: usize) -> Polynomial {
        Polynomial::monomial(self, Monomial::var(self.nvars(), index), rational::one())
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(rational::one())
    }

    pub fn constant(&self, c: Rational) -> Polynomial {
        Polynomial::monomial(self, Monomial::one(self.nvars()), c)
    }

    /// A new ring with `name` appended as the last variable.
    pub fn extended(&self, name: &str) -> Ring {
        let mut v: Vec<String> = self.0.to_vec();
        v.push(name.to_string());
        Ring::new(&v)
    }

    /// A variable name not already used by the ring, starting from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.index_of(&name).is_some() {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }

    /// Parses `x^2*y`, or `1` for the unit monomial.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        let mut e = vec![0u32; self.nvars()];
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::from_exponents(e));
        }
        for factor in s.split('*') {
            let (name, power) = match factor.trim().split_once('^') {
                Some((n, p)) => (n, p.parse().map_err(|_| Error::UnknownVariable(factor.into()))?),
                None => (factor.trim(), 1),
            };
            let i = self.lookup(name)?.index;
            e[i] += power;
        }
        Ok(Monomial::from_exponents(e))
    }

    fn describe(&self) -> String {
        self.0.join(",")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Collects `(monomial, coefficient)` pairs, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = ring.zero();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent-vector (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// True for zero and for polynomials whose terms all share one degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.describe(),
                right: other.ring.describe(),
            })
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[var] -= 1;
            out.add_term(
                Monomial::from_exponents(ex),
                c * Rational::from_integer(e.into()),
            );
        }
        out
    }

    /// Substitutes polynomials for some variables.
    ///
    /// The result lives in the ring of the substituted values (or in the
    /// source ring when `assignment` is empty). Variables without an
    /// assignment are carried through by name, so they must also exist in
    /// the target ring.
    pub fn substitute(&self, assignment: &[(usize, Polynomial)]) -> Result<Polynomial> {
        let target = match assignment.first() {
            Some((_, p)) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        let n = self.ring.nvars();
        let mut images: Vec<Option<Polynomial>> = vec![None; n];
        for (v, p) in assignment {
            if p.ring != target {
                return Err(Error::RingMismatch {
                    left: target.describe(),
                    right: p.ring.describe(),
                });
            }
            images[*v] = Some(p.clone());
        }
        for (i, slot) in images.iter_mut().enumerate() {
            if slot.is_none() {
                let name = &self.ring.names()[i];
                let j = target
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                *slot = Some(target.var_at(j));
            }
        }
        let images: Vec<Polynomial> = images.into_iter().map(Option::unwrap).collect();
        // powers[i][k] = images[i]^k, filled lazily
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitutes rational values for some variables, staying in the same ring.
    pub fn substitute_values(&self, values: &[(usize, Rational)]) -> Polynomial {
        let mut vals: Vec<Option<&Rational>> = vec![None; self.ring.nvars()];
        for (v, r) in values {
            vals[*v] = Some(r);
        }
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut ex = m.exponents().to_vec();
            for (i, e) in ex.iter_mut().enumerate() {
                if let Some(r) = vals[i] {
                    coeff *= num_traits::pow(r.clone(), *e as usize);
                    *e = 0;
                }
            }
            out.add_term(Monomial::from_exponents(ex), coeff);
        }
        out
    }

    /// Evaluates at a full point in any commutative ring containing the
    /// rationals (rationals themselves, dual numbers, ...).
    pub fn eval<T: Scalar + From<Rational>>(&self, point: &[T]) -> T {
        assert_eq!(point.len(), self.ring.nvars(), "point arity mismatch");
        let mut acc = T::from(Rational::zero());
        for (m, c) in &self.terms {
            let mut t = T::from(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul_ref(&point[i]);
                }
            }
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// Rewrites the polynomial into `target`, matching variables by name.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        let map: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| Error::UnknownVariable(n.clone()))
            })
            .collect::<Result<_>>()?;
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut ex = vec![0; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                ex[map[i]] = e;
            }
            out.add_term(Monomial::from_exponents(ex), c.clone());
        }
        Ok(out)
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d` when `d` divides `self`, by multivariate
    /// division under grevlex.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if self.ring != d.ring || d.is_zero() {
            return None;
        }
        let order = MonomialOrder::grevlex_natural(self.ring.nvars());
        let (lm, lc) = d.leading_term(&order)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = self.ring.zero();
        while let Some((m, c)) = rem.leading_term(&order) {
            if !lm.divides(m) {
                return None;
            }
            let q = lm.quotient_of(m);
            let qc = c / &lc;
            rem = &rem - &d.mul_monomial(&q, &qc);
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    /// Serializable form: one record per term, largest grevlex term first.
    pub fn to_records(&self) -> Vec<TermRecord> {
        let order = MonomialOrder::grevlex_natural(self.ring.nvars());
        self.sorted_terms(&order)
            .into_iter()
            .map(|(m, c)| TermRecord {
                exponents: m.exponents().to_vec(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_records(ring: &Ring, records: &[TermRecord]) -> Result<Polynomial> {
        let mut out = ring.zero();
        for r in records {
            if r.exponents.len() != ring.nvars() {
                return Err(Error::Shape {
                    rows: 1,
                    cols: r.exponents.len(),
                    expected: format!("{} exponents", ring.nvars()),
                });
            }
            out.add_term(Monomial::from_exponents(r.exponents.clone()), r.coeff.clone());
        }
        Ok(out)
    }
}

/// One term of a serialized polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    #[serde(with = "rational::as_string")]
    pub coeff: Rational,
}

impl fmt::Display for Polynomial {
    /// Largest term first under grevlex with the ring's declared variable order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let order = MonomialOrder::grevlex_natural(self.ring.nvars());
        for (k, (m, c)) in self.sorted_terms(&order).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{}", rational::format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", m.display_with(self.ring.names()))?;
            } else {
                write!(
                    f,
                    "{}*{}",
                    rational::format_rational(&a),
                    m.display_with(self.ring.names())
                )?;
            }
        }
        Ok(())
    }
}

macro_rules! impl_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different rings; use the
            /// `try_` method for a recoverable error.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, try_add);
impl_binop!(Sub, sub, try_sub);
impl_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// The operations shared by every coefficient domain the crate computes
/// determinants and evaluations over.
pub trait Scalar: Clone + PartialEq {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn is_zero_value(&self) -> bool;
}

impl Scalar for Rational {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for Polynomial {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn parse_monomial_round_trip() {
        let r = super::Ring::new(&["a", "b", "c"]);
        let m = r.parse_monomial("a*c^3").unwrap();
        assert_eq!(m.exponents(), &[1, 0, 3]);
        assert_eq!(m.display_with(r.names()).to_string(), "a*c^3");
        assert!(r.parse_monomial("1").unwrap().is_one());
        assert!(r.parse_monomial("d").is_err());
    }

    use super::*;
    use crate::rational::{int, rat};

    fn ring_xy() -> Ring {
        Ring::new(&["x", "y"])
    }

    #[test]
    fn difference_of_squares() {
        let r = ring_xy();
        let x = r.var("x");
        let one = r.one();
        let p = (&x + &one) * (&x - &one);
        assert_eq!(p, &x * &x - &one);
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let r = ring_xy();
        let p = r.var("x") * r.var("y").scale(&rat(3, 7)) + r.constant(int(2));
        assert_eq!(&r.zero() + &p, p);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).num_terms(), 0);
    }

    #[test]
    fn conic_square_expansion() {
        let r = Ring::new(&["t1", "t2", "t3"]);
        let (t1, t2, t3) = (r.var("t1"), r.var("t2"), r.var("t3"));
        let c = &t1 * &t3 - &t2 * &t2;
        let expected = t1.pow(2) * t3.pow(2) - (&t1 * &t2.pow(2) * &t3).scale(&int(2)) + t2.pow(4);
        assert_eq!(&c * &c, expected);
        assert_eq!(c.pow(2), expected);
    }

    #[test]
    fn mismatched_rings_error() {
        let a = Ring::new(&["x"]).var("x");
        let b = Ring::new(&["y"]).var("y");
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch { .. })));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn substitute_number() {
        let r = Ring::new(&["x"]);
        let x = r.var("x");
        let p = &x * &x + r.one();
        assert_eq!(p.substitute_values(&[(0, int(2))]), r.constant(int(5)));
        let q = p.substitute(&[(0, r.constant(int(2)))]).unwrap();
        assert_eq!(q, r.constant(int(5)));
    }

    #[test]
    fn substitute_gamma_into_branch_form() {
        let src = Ring::new(&["lambda", "xi1", "xi2", "xi3", "xi4"]);
        let tgt = Ring::new(&["lambda", "w", "x"]);
        let l = src.var("lambda");
        let form = l.pow(3) * src.var("xi1") + l.pow(2) * src.var("xi2") + &l * src.var("xi3") + src.var("xi4");
        let (w, x) = (tgt.var("w"), tgt.var("x"));
        let two = int(2);
        let gamma = [
            -tgt.one(),
            w.scale(&two) + &x,
            -(w.pow(2) + (&x * &w).scale(&two)),
            w.pow(2) * &x,
        ];
        let assignment: Vec<(usize, Polynomial)> =
            gamma.iter().enumerate().map(|(i, p)| (i + 1, p.clone())).collect();
        let got = form.substitute(&assignment).unwrap();
        let tl = tgt.var("lambda");
        let expected = -((&tl - &w).pow(2) * (&tl - &x));
        assert_eq!(got, expected);
    }

    #[test]
    fn substitute_zero_into_homogeneous() {
        let r = Ring::new(&["a", "b", "c"]);
        let p = r.var("a").pow(3) - r.var("b") * r.var("c").scale(&rat(5, 3)) * r.var("a");
        let zeros: Vec<_> = (0..3).map(|i| (i, int(0))).collect();
        assert!(p.substitute_values(&zeros).is_zero());
    }

    #[test]
    fn derivatives() {
        let r = ring_xy();
        let (x, y) = (r.var("x"), r.var("y"));
        assert_eq!((&x * &x * &y).partial_derivative(0), (&x * &y).scale(&int(2)));
        assert!(r.constant(rat(7, 2)).partial_derivative(0).is_zero());
        let t = Ring::new(&["t1", "t2", "t3"]);
        let f = t.var("t1").pow(4) + t.var("t2").pow(4) + t.var("t3").pow(4);
        assert_eq!(f.partial_derivative(0), t.var("t1").pow(3).scale(&int(4)));
    }

    #[test]
    fn exact_division() {
        let r = ring_xy();
        let (x, y) = (r.var("x"), r.var("y"));
        let a = &x + &y.scale(&int(2)) - r.one();
        let b = &x * &y - y.pow(3);
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!((&a * &b).div_exact(&a), Some(b));
        assert_eq!((&a + r.one()).div_exact(&a), None);
    }

    #[test]
    fn display_is_readable() {
        let r = Ring::new(&["u", "q"]);
        let p = r.var("u") * r.var("q") - r.var("u").pow(2).scale(&rat(73, 2)) + r.constant(int(-1));
        assert_eq!(p.to_string(), "-73/2*u^2 + u*q - 1");
        assert_eq!(r.zero().to_string(), "0");
    }

    #[test]
    fn records_roundtrip() {
        let r = ring_xy();
        let p = r.var("x").pow(2).scale(&rat(-3, 4)) + r.var("y");
        let rec = p.to_records();
        assert_eq!(rec[0].exponents, vec![2, 0]);
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(json, r#"[{"exponents":[2,0],"coeff":"-3/4"},{"exponents":[0,1],"coeff":"1"}]"#);
        let back: Vec<TermRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(Polynomial::from_records(&r, &back).unwrap(), p);
    }
}
