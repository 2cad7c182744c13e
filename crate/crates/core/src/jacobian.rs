//! The bi-graded ring `Q[u1..u4, q1..q4] / J` attached to an octad
//! configuration.
//!
//! `J` is generated by eight bilinear forms: for each of the last four
//! columns `j` of the configuration, `(Σ_i b_{i,4+j} u_i) · q_j`, and for
//! each row `i`, `u_i · (Σ_j b_{i,4+j} q_j)`. Slices are indexed by
//! `(degree in u, degree in q)`; the Hodge piece `H^{3-i,i}` is the
//! `(i, i)` slice (weight `(2i, i)` when `u` is counted twice).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, GroebnerBasisRecord};
use crate::linalg::RationalMatrix;
use crate::monomial::{Monomial, MonomialOrder};
use crate::octad::OctadConfig;
use crate::poly::{Polynomial, Ring, TermRecord};
use crate::rational::{self, Rational};

pub const U_NAMES: [&str; 4] = ["u1", "u2", "u3", "u4"];
pub const Q_NAMES: [&str; 4] = ["q1", "q2", "q3", "q4"];

/// `u1..u4, q1..q4` in this index order.
pub fn uq_ring() -> Ring {
    let names: Vec<&str> = U_NAMES.iter().chain(Q_NAMES.iter()).copied().collect();
    Ring::new(&names)
}

/// Grevlex with `u4 > u3 > u2 > u1 > q4 > q3 > q2 > q1`.
pub fn uq_order() -> MonomialOrder {
    MonomialOrder::grevlex(vec![3, 2, 1, 0, 7, 6, 5, 4])
}

pub fn u_block() -> Vec<usize> {
    vec![0, 1, 2, 3]
}

pub fn q_block() -> Vec<usize> {
    vec![4, 5, 6, 7]
}

/// Monomial `u^a q^b` from 1-based index lists, e.g. `uq(&[2, 2], &[2, 2])`.
pub fn uq(us: &[usize], qs: &[usize]) -> Monomial {
    let mut e = vec![0u32; 8];
    for &i in us {
        e[i - 1] += 1;
    }
    for &j in qs {
        e[3 + j] += 1;
    }
    Monomial::from_exponents(e)
}

/// The nine (2,2) monomials `M1..M9` of the worked example, in order.
pub fn m_basis() -> Vec<Monomial> {
    vec![
        uq(&[2, 2], &[2, 2]),
        uq(&[2, 1], &[2, 2]),
        uq(&[1, 1], &[2, 2]),
        uq(&[3, 3], &[1, 1]),
        uq(&[3, 2], &[1, 1]),
        uq(&[2, 2], &[1, 1]),
        uq(&[3, 1], &[1, 1]),
        uq(&[2, 1], &[1, 1]),
        uq(&[1, 1], &[1, 1]),
    ]
}

/// The eight generators of `J`: four `(linear in u)·q_j`, then four
/// `u_i·(linear in q)`.
pub fn ideal_generators(config: &OctadConfig) -> Vec<Polynomial> {
    let ring = uq_ring();
    let u = |i: usize| ring.var_at(i);
    let q = |j: usize| ring.var_at(4 + j);
    let b = |i: usize, j: usize| config.entry(i, 4 + j).clone();
    let mut gens = Vec::with_capacity(8);
    for j in 0..4 {
        let lin = (0..4).fold(ring.zero(), |acc, i| acc + u(i).scale(&b(i, j)));
        gens.push(lin * q(j));
    }
    for i in 0..4 {
        let lin = (0..4).fold(ring.zero(), |acc, j| acc + q(j).scale(&b(i, j)));
        gens.push(u(i) * lin);
    }
    gens
}

/// A homogeneous element of one bidegree, stored in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    pub bidegree: (u32, u32),
    pub value: Polynomial,
}

#[derive(Clone, Debug)]
pub struct DoubleCoverRing {
    config: OctadConfig,
    generators: Vec<Polynomial>,
    gb: GroebnerBasis,
}

impl DoubleCoverRing {
    pub fn new(config: &OctadConfig) -> Result<Self> {
        let generators = ideal_generators(config);
        let gb = buchberger(&uq_ring(), &generators, &uq_order())?;
        Ok(DoubleCoverRing {
            config: config.clone(),
            generators,
            gb,
        })
    }

    pub fn config(&self) -> &OctadConfig {
        &self.config
    }

    pub fn ring(&self) -> &Ring {
        self.gb.ring()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb.normal_form(f)
    }

    /// Standard monomials of the `(a, b)` slice, largest first.
    pub fn graded_basis(&self, a: u32, b: u32) -> Vec<Monomial> {
        self.gb.standard_monomials(&[u_block(), q_block()], &[a, b])
    }

    /// Dimensions of the `(0,0)`, `(1,1)`, `(2,2)`, `(3,3)` slices, i.e.
    /// `h^{3,0}, h^{2,1}, h^{1,2}, h^{0,3}`.
    pub fn hodge_numbers(&self) -> [usize; 4] {
        std::array::from_fn(|i| self.graded_basis(i as u32, i as u32).len())
    }

    /// Reduces a polynomial all of whose terms have bidegree `(a, b)`.
    pub fn element(&self, f: &Polynomial, bidegree: (u32, u32)) -> Result<GradedElement> {
        let (u, q) = (u_block(), q_block());
        for (m, _) in f.terms() {
            let found = (m.degree_in(&u), m.degree_in(&q));
            if found != bidegree {
                return Err(Error::Bidegree {
                    expected: bidegree,
                    found,
                });
            }
        }
        Ok(GradedElement {
            bidegree,
            value: self.normal_form(f),
        })
    }

    pub fn multiply(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        GradedElement {
            bidegree: (a.bidegree.0 + b.bidegree.0, a.bidegree.1 + b.bidegree.1),
            value: self.normal_form(&(&a.value * &b.value)),
        }
    }

    /// Coordinates of a normal form in the slice basis.
    pub fn coordinates(&self, e: &GradedElement) -> Vec<Rational> {
        self.graded_basis(e.bidegree.0, e.bidegree.1)
            .iter()
            .map(|m| e.value.coeff(m))
            .collect()
    }

    /// The unique standard monomial of the top slice, if the slice is one
    /// dimensional.
    pub fn top_monomial(&self) -> Option<Monomial> {
        let top = self.graded_basis(3, 3);
        (top.len() == 1).then(|| top[0].clone())
    }

    /// Pairing of complementary slices: the coefficient of the top
    /// standard monomial in `f·g`. The trace map is normalized so that the
    /// top monomial has value 1.
    pub fn cup_pairing(&self, f: &GradedElement, g: &GradedElement) -> Result<Rational> {
        let total = (f.bidegree.0 + g.bidegree.0, f.bidegree.1 + g.bidegree.1);
        if total != (3, 3) {
            return Err(Error::Bidegree {
                expected: (3, 3),
                found: total,
            });
        }
        let top = self.top_monomial().ok_or(Error::Shape {
            rows: self.graded_basis(3, 3).len(),
            cols: 1,
            expected: "a one dimensional top slice".into(),
        })?;
        Ok(self.multiply(f, g).value.coeff(&top))
    }

    /// Pairing matrix between the `(1,1)` and `(2,2)` slice bases.
    pub fn pairing_matrix(&self) -> Result<RationalMatrix> {
        let ring = self.ring();
        let left = self.graded_basis(1, 1);
        let right = self.graded_basis(2, 2);
        let mut rows = Vec::with_capacity(left.len());
        for a in &left {
            let fa = GradedElement {
                bidegree: (1, 1),
                value: Polynomial::monomial(ring, a.clone(), rational::one()),
            };
            let mut row = Vec::with_capacity(right.len());
            for b in &right {
                let gb = GradedElement {
                    bidegree: (2, 2),
                    value: Polynomial::monomial(ring, b.clone(), rational::one()),
                };
                row.push(self.cup_pairing(&fa, &gb)?);
            }
            rows.push(row);
        }
        RationalMatrix::from_rows(rows)
    }

    pub fn report(&self) -> Result<RingReport> {
        let names = self.ring().names().to_vec();
        let show = |ms: Vec<Monomial>| -> Vec<String> {
            ms.iter().map(|m| m.display_with(&names).to_string()).collect()
        };
        Ok(RingReport {
            variables: names.clone(),
            grading: "slice (i,i) in (u-degree, q-degree) = H^{3-i,i}, weight (2i,i)",
            generators: self.generators.iter().map(Polynomial::to_records).collect(),
            generators_text: self.generators.iter().map(|g| g.to_string()).collect(),
            groebner_basis: self.gb.to_record(),
            hodge_numbers: self.hodge_numbers(),
            slice_bases: (0..4).map(|i| show(self.graded_basis(i, i))).collect(),
            pairing_matrix: self.pairing_matrix()?.to_rows(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RingReport {
    pub variables: Vec<String>,
    pub grading: &'static str,
    pub generators: Vec<Vec<TermRecord>>,
    pub generators_text: Vec<String>,
    pub groebner_basis: GroebnerBasisRecord,
    pub hodge_numbers: [usize; 4],
    pub slice_bases: Vec<Vec<String>>,
    #[serde(with = "rational::matrix_as_string")]
    pub pairing_matrix: Vec<Vec<Rational>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octad::{build_configuration, reference_free_parameters, OctadParameters};
    use crate::rational::{int, rat};

    fn reference_ring() -> DoubleCoverRing {
        let p = OctadParameters::close(reference_free_parameters()).unwrap();
        DoubleCoverRing::new(&build_configuration(&p).unwrap()).unwrap()
    }

    #[test]
    fn generators_have_expected_shape() {
        let r = reference_ring();
        let ring = r.ring();
        let g = r.generators();
        let u: Vec<_> = (1..=4).map(|i| ring.var(&format!("u{i}"))).collect();
        let q: Vec<_> = (1..=4).map(|i| ring.var(&format!("q{i}"))).collect();
        assert_eq!(g[0], (&u[0] + &u[1] + &u[2] + &u[3]) * &q[0]);
        let expected = &u[1]
            * (&q[0] + q[1].scale(&int(-1)) + q[2].scale(&int(-3)) + q[3].scale(&rat(33, 5)));
        assert_eq!(g[5], expected);
    }

    #[test]
    fn one_relation_between_generators() {
        let r = reference_ring();
        let g = r.generators();
        let cols = g[..4].iter().fold(r.ring().zero(), |a, b| a + b);
        let rows = g[4..].iter().fold(r.ring().zero(), |a, b| a + b);
        assert_eq!(cols, rows);
    }

    #[test]
    fn slices_of_reference_ring() {
        let r = reference_ring();
        assert_eq!(r.hodge_numbers(), [1, 9, 9, 1]);
        assert_eq!(r.graded_basis(0, 0), vec![Monomial::one(8)]);
        assert_eq!(r.graded_basis(2, 2), m_basis());
        assert_eq!(r.top_monomial(), Some(uq(&[1, 1, 1], &[1, 1, 1])));
    }

    #[test]
    fn pairing_is_perfect() {
        let r = reference_ring();
        let p = r.pairing_matrix().unwrap();
        assert_eq!((p.rows(), p.cols()), (9, 9));
        assert_eq!(p.rank(), 9);
    }

    #[test]
    fn zero_pairs_to_zero() {
        let r = reference_ring();
        let zero = r.element(&r.ring().zero(), (1, 1)).unwrap();
        let m = r
            .element(&Polynomial::monomial(r.ring(), m_basis()[0].clone(), int(1)), (2, 2))
            .unwrap();
        assert_eq!(r.cup_pairing(&zero, &m).unwrap(), int(0));
        assert!(r.cup_pairing(&m, &m).is_err());
    }

    #[test]
    fn element_rejects_wrong_bidegree() {
        let r = reference_ring();
        let u1 = r.ring().var("u1");
        assert!(r.element(&u1, (1, 1)).is_err());
    }
}
