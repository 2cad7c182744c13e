//! Exterior cube of a principally polarized weight-one Hodge structure of
//! dimension 3.
//!
//! `H = H^{1,0} ⊕ H^{0,1}` has basis `e1, e2, e3, f1, f2, f3` with the
//! symplectic pairing `(e_i, f_j) = δ_ij = -(f_j, e_i)`. Basis vectors are
//! indexed `0..6` in that order and wedge monomials are bit masks over
//! those indices, listed in lexicographic order of their sorted index
//! tuples.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::rational::{self, Rational};

pub const BASIS_NAMES: [&str; 6] = ["e1", "e2", "e3", "f1", "f2", "f3"];

/// Sorted index tuples of size `k` from `0..6`, lexicographic.
pub fn wedge_basis(k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..6 {
            cur.push(i);
            go(i + 1, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, &mut Vec::new(), &mut out);
    out
}

/// Triples with exactly `nf` of the `f` vectors: the `(3 - nf, nf)` piece.
pub fn piece_basis(nf: usize) -> Vec<Vec<usize>> {
    wedge_basis(3)
        .into_iter()
        .filter(|t| t.iter().filter(|&&i| i >= 3).count() == nf)
        .collect()
}

fn mask(indices: &[usize]) -> u8 {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

fn indices(m: u8) -> Vec<usize> {
    (0..6).filter(|i| m & (1 << i) != 0).collect()
}

pub fn label(indices: &[usize]) -> String {
    indices.iter().map(|&i| BASIS_NAMES[i]).collect::<Vec<_>>().join("^")
}

/// An element of the exterior algebra of `H`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Wedge {
    terms: BTreeMap<u8, Rational>,
}

impl Wedge {
    pub fn zero() -> Self {
        Wedge::default()
    }

    pub fn basis(i: usize) -> Self {
        Wedge::monomial(&[i], rational::one())
    }

    /// `c · x_{i1} ∧ ... ∧ x_{ik}` for indices in any order.
    pub fn monomial(idx: &[usize], c: Rational) -> Self {
        idx.iter()
            .fold(Wedge::scalar(c), |acc, &i| acc.wedge(&Wedge::monomial_sorted(1 << i)))
    }

    fn monomial_sorted(m: u8) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, rational::one());
        Wedge { terms }
    }

    pub fn scalar(c: Rational) -> Self {
        let mut w = Wedge::zero();
        w.add_term(0, c);
        w
    }

    /// Element of `H` from six coordinates.
    pub fn vector(v: &[Rational]) -> Self {
        let mut w = Wedge::zero();
        for (i, c) in v.iter().enumerate() {
            w.add_term(1 << i, c.clone());
        }
        w
    }

    fn add_term(&mut self, m: u8, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> Rational {
        self.terms.get(&mask(idx)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &Wedge) -> Wedge {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Wedge {
        let mut out = Wedge::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, x * c);
        }
        out
    }

    pub fn wedge(&self, o: &Wedge) -> Wedge {
        let mut out = Wedge::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                if a & b != 0 {
                    continue;
                }
                // sign of merging: pairs i in a, j in b with i > j
                let inversions: u32 = indices(*b)
                    .iter()
                    .map(|&j| (a >> (j + 1)).count_ones())
                    .sum();
                let c = x * y;
                out.add_term(a | b, if inversions.is_multiple_of(2) { c } else { -c });
            }
        }
        out
    }

    /// Coordinates on the given list of sorted index tuples.
    pub fn coordinates(&self, basis: &[Vec<usize>]) -> Vec<Rational> {
        basis.iter().map(|t| self.coeff(t)).collect()
    }

    pub fn from_coordinates(basis: &[Vec<usize>], v: &[Rational]) -> Wedge {
        let mut out = Wedge::zero();
        for (t, c) in basis.iter().zip(v) {
            out.add_term(mask(t), c.clone());
        }
        out
    }

    /// Terms as `(label, coefficient)`, in basis order.
    pub fn labeled_terms(&self) -> Vec<(String, Rational)> {
        let mut v: Vec<(Vec<usize>, Rational)> =
            self.terms.iter().map(|(m, c)| (indices(*m), c.clone())).collect();
        v.sort();
        v.into_iter().map(|(i, c)| (label(&i), c)).collect()
    }
}

/// The symplectic pairing on `H`.
pub fn pairing_h(i: usize, j: usize) -> Rational {
    match (i < 3, j < 3) {
        (true, false) if j == i + 3 => rational::one(),
        (false, true) if i == j + 3 => -rational::one(),
        _ => rational::zero(),
    }
}

/// Induced pairing on `∧³H`: `(a1∧a2∧a3, b1∧b2∧b3) = det (a_i, b_j)`.
pub fn pairing3(a: &Wedge, b: &Wedge) -> Rational {
    let mut acc = Rational::zero();
    for (ma, x) in &a.terms {
        let ia = indices(*ma);
        if ia.len() != 3 {
            continue;
        }
        for (mb, y) in &b.terms {
            let ib = indices(*mb);
            if ib.len() != 3 {
                continue;
            }
            let m = RationalMatrix::from_rows(
                ia.iter().map(|&i| ib.iter().map(|&j| pairing_h(i, j)).collect()).collect(),
            )
            .expect("3x3");
            acc += x * y * m.det();
        }
    }
    acc
}

/// `θ: H^{1,0} → H^{0,1}`, stored as the matrix with `θ(e_i) = Σ_j θ_ji f_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightOneIvhs {
    pub theta: RationalMatrix,
}

impl WeightOneIvhs {
    pub fn new(theta: RationalMatrix) -> Result<Self> {
        if theta.rows() != 3 || theta.cols() != 3 {
            return Err(Error::Shape {
                rows: theta.rows(),
                cols: theta.cols(),
                expected: "3x3".into(),
            });
        }
        if !theta.is_symmetric() {
            return Err(Error::ThetaNotSymmetric);
        }
        Ok(WeightOneIvhs { theta })
    }

    /// `E_11`: `θ(e1) = f1`, `θ(e2) = θ(e3) = 0`.
    pub fn e11() -> Self {
        let mut m = RationalMatrix::zeros(3, 3);
        m[(0, 0)] = rational::one();
        WeightOneIvhs { theta: m }
    }

    /// `θ` on a basis vector of `H`.
    pub fn apply_basis(&self, i: usize) -> Wedge {
        if i >= 3 {
            return Wedge::zero();
        }
        Wedge::vector(
            &(0..6)
                .map(|k| if k < 3 { Rational::zero() } else { self.theta[(k - 3, i)].clone() })
                .collect::<Vec<_>>(),
        )
    }

    /// Extension of `θ` to the exterior algebra as a derivation.
    pub fn derivation(&self, w: &Wedge) -> Wedge {
        let mut out = Wedge::zero();
        for (m, c) in &w.terms {
            let idx = indices(*m);
            for pos in 0..idx.len() {
                let mut term = Wedge::scalar(c.clone());
                for (k, &i) in idx.iter().enumerate() {
                    let factor = if k == pos { self.apply_basis(i) } else { Wedge::basis(i) };
                    term = term.wedge(&factor);
                }
                out = out.add(&term);
            }
        }
        out
    }
}

/// `φ = Σ e_i ∧ f_i`.
pub fn phi() -> Wedge {
    (0..3).fold(Wedge::zero(), |acc, i| {
        acc.add(&Wedge::monomial(&[i, i + 3], rational::one()))
    })
}

/// The matrices of `θ^(3)` between consecutive pieces of `∧³H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedgeCube {
    pub dimensions: [usize; 4],
    /// `maps[k]` sends piece `k` (k f's) to piece `k + 1`; columns are
    /// images of basis vectors.
    pub maps: Vec<RationalMatrix>,
}

pub fn wedge_cube_map(ivhs: &WeightOneIvhs) -> Result<WedgeCube> {
    if !ivhs.theta.is_symmetric() {
        return Err(Error::ThetaNotSymmetric);
    }
    let pieces: Vec<Vec<Vec<usize>>> = (0..4).map(piece_basis).collect();
    let maps = (0..3)
        .map(|k| {
            let cols: Vec<Vec<Rational>> = pieces[k]
                .iter()
                .map(|t| {
                    ivhs.derivation(&Wedge::monomial(t, rational::one()))
                        .coordinates(&pieces[k + 1])
                })
                .collect();
            RationalMatrix::from_rows(cols).map(|m| m.transpose())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WedgeCube {
        dimensions: std::array::from_fn(|k| pieces[k].len()),
        maps,
    })
}

/// `a ↦ a ∧ φ` on `H`.
pub fn lefschetz_wedge(a: &[Rational]) -> Wedge {
    Wedge::vector(a).wedge(&phi())
}

/// The 20×6 matrix of [`lefschetz_wedge`] on the basis of `∧³H`.
pub fn lefschetz_matrix() -> RationalMatrix {
    let basis = wedge_basis(3);
    let cols: Vec<Vec<Rational>> = (0..6)
        .map(|i| {
            let mut v = vec![Rational::zero(); 6];
            v[i] = Rational::one();
            lefschetz_wedge(&v).coordinates(&basis)
        })
        .collect();
    RationalMatrix::from_rows(cols).expect("6x20").transpose()
}

/// `φ ∧ H^{1,0}` (`nf = 1`) or `φ ∧ H^{0,1}` (`nf = 2`) in piece coordinates.
fn lefschetz_image(nf: usize) -> Vec<Vec<Rational>> {
    let basis = piece_basis(nf);
    let offset = if nf == 1 { 0 } else { 3 };
    (0..3)
        .map(|i| Wedge::basis(i + offset).wedge(&phi()).coordinates(&basis))
        .collect()
}

/// Primitive part of piece `nf`: the vectors of piece `nf` pairing to
/// zero with the Lefschetz image in the complementary piece. Pieces 0
/// and 3 contain no Lefschetz image and are entirely primitive.
pub fn primitive_basis(nf: usize) -> Vec<Vec<Rational>> {
    let basis = piece_basis(nf);
    if nf == 0 || nf == 3 {
        return (0..basis.len())
            .map(|i| (0..basis.len()).map(|j| int01(i == j)).collect())
            .collect();
    }
    let other = piece_basis(3 - nf);
    let image = lefschetz_image(3 - nf);
    let rows: Vec<Vec<Rational>> = image
        .iter()
        .map(|v| {
            let w = Wedge::from_coordinates(&other, v);
            basis
                .iter()
                .map(|t| pairing3(&Wedge::monomial(t, rational::one()), &w))
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(rows).expect("3x9").kernel()
}

fn int01(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Dimensions of the primitive parts of the four pieces.
pub fn primitive_dimensions() -> [usize; 4] {
    std::array::from_fn(|nf| primitive_basis(nf).len())
}

/// `θ^(3) ∘ θ^(3)` applied to `e1 ∧ e2 ∧ e3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QWedge {
    /// Coordinates in the 9-dimensional `(1,2)` piece.
    #[serde(with = "rational::vec_as_string")]
    pub full: Vec<Rational>,
    /// Coordinates of the primitive component in [`primitive_basis`]`(2)`.
    #[serde(with = "rational::vec_as_string")]
    pub primitive: Vec<Rational>,
}

impl QWedge {
    pub fn is_zero(&self) -> bool {
        self.full.iter().all(Zero::is_zero)
    }
}

/// Splits a `(1,2)` vector as primitive part plus Lefschetz image and
/// returns the coordinates of the primitive part.
pub fn primitive_projection(v: &[Rational]) -> Vec<Rational> {
    let prim = primitive_basis(2);
    let image = lefschetz_image(2);
    let cols: Vec<Vec<Rational>> = prim.iter().chain(image.iter()).cloned().collect();
    let m = RationalMatrix::from_rows(cols).expect("9x9").transpose();
    let x = m.solve(v).expect("primitive part and image are complementary");
    x[..prim.len()].to_vec()
}

pub fn q_wedge(ivhs: &WeightOneIvhs) -> Result<QWedge> {
    if !ivhs.theta.is_symmetric() {
        return Err(Error::ThetaNotSymmetric);
    }
    let top = Wedge::monomial(&[0, 1, 2], rational::one());
    let v = ivhs.derivation(&ivhs.derivation(&top));
    let full = v.coordinates(&piece_basis(2));
    let primitive = primitive_projection(&full);
    Ok(QWedge { full, primitive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn basis_sizes() {
        assert_eq!(wedge_basis(3).len(), 20);
        assert_eq!((0..4).map(|k| piece_basis(k).len()).collect::<Vec<_>>(), [1, 9, 9, 1]);
    }

    #[test]
    fn wedge_signs() {
        let f1_e1 = Wedge::monomial(&[3, 0], int(1));
        assert_eq!(f1_e1.coeff(&[0, 3]), int(-1));
        let sq = Wedge::basis(2).wedge(&Wedge::basis(2));
        assert!(sq.is_zero());
        let a = Wedge::monomial(&[4, 0, 2], int(1));
        // f2 e1 e3 -> e1 e3 f2 takes two transpositions
        assert_eq!(a.coeff(&[0, 2, 4]), int(1));
    }

    #[test]
    fn e11_example() {
        let t = WeightOneIvhs::e11();
        let top = Wedge::monomial(&[0, 1, 2], int(1));
        assert_eq!(t.derivation(&top), Wedge::monomial(&[3, 1, 2], int(1)));
        let q = q_wedge(&t).unwrap();
        assert!(q.is_zero());
        assert!(q.primitive.iter().all(Zero::is_zero));
    }

    #[test]
    fn identity_example() {
        let t = WeightOneIvhs::new(RationalMatrix::identity(3)).unwrap();
        let top = Wedge::monomial(&[0, 1, 2], int(1));
        let v = t.derivation(&t.derivation(&top));
        let expected = Wedge::monomial(&[3, 4, 2], int(2))
            .add(&Wedge::monomial(&[3, 1, 5], int(2)))
            .add(&Wedge::monomial(&[0, 4, 5], int(2)));
        assert_eq!(v, expected);
        assert_eq!(v.coeff(&[2, 3, 4]), int(2));
        assert_eq!(v.coeff(&[1, 3, 5]), int(-2));
        assert_eq!(v.coeff(&[0, 4, 5]), int(2));
        assert!(!q_wedge(&t).unwrap().is_zero());
    }

    #[test]
    fn lefschetz() {
        let a = lefschetz_wedge(&[int(1), int(0), int(0), int(0), int(0), int(0)]);
        let expected = Wedge::monomial(&[0, 1, 4], int(1)).add(&Wedge::monomial(&[0, 2, 5], int(1)));
        assert_eq!(a, expected);
        assert_eq!(lefschetz_matrix().rank(), 6);
        assert!(lefschetz_wedge(&vec![int(0); 6]).is_zero());
    }

    #[test]
    fn primitive_dims() {
        assert_eq!(primitive_dimensions(), [1, 6, 6, 1]);
    }

    #[test]
    fn rejects_asymmetric_theta() {
        let m = RationalMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(WeightOneIvhs::new(m).unwrap_err(), Error::ThetaNotSymmetric);
    }

    #[test]
    fn cube_maps_shapes() {
        let c = wedge_cube_map(&WeightOneIvhs::new(RationalMatrix::identity(3)).unwrap()).unwrap();
        assert_eq!(c.dimensions, [1, 9, 9, 1]);
        let shapes: Vec<_> = c.maps.iter().map(|m| (m.rows(), m.cols())).collect();
        assert_eq!(shapes, [(9, 1), (9, 9), (1, 9)]);
        let zero = wedge_cube_map(&WeightOneIvhs::new(RationalMatrix::zeros(3, 3)).unwrap()).unwrap();
        assert!(zero.maps.iter().all(|m| m.rank() == 0));
    }
}
