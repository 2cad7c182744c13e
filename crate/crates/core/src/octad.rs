//! Normalized Cayley octad configurations.
//!
//! The eight points are the columns of a 4×8 matrix whose first five
//! columns are fixed (standard basis, then all ones):
//!
//! ```text
//! 1 0 0 0 1  1   1   1
//! 0 1 0 0 1 s11 s12 s13
//! 0 0 1 0 1 s21 s22 s23
//! 0 0 0 1 1 s31 s32 s33
//! ```
//!
//! Six entries are free; the last column is determined by two 3×3 linear
//! systems, `s_i3 = alpha_i / beta_i`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::dual::Dual;
use crate::error::{Error, Result};
use crate::linalg::{det_cofactor, det_poly_matrix, RationalMatrix};
use crate::poly::{Polynomial, Ring, Scalar};
use crate::rational::{self, Rational};

/// Names of the free parameters, in their canonical order.
pub const FREE_NAMES: [&str; 6] = ["s11", "s21", "s31", "s12", "s22", "s32"];
pub const DERIVED_NAMES: [&str; 3] = ["s13", "s23", "s33"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctadParameters {
    /// `s11, s21, s31, s12, s22, s32`
    #[serde(with = "rational::vec_as_string")]
    pub free: Vec<Rational>,
    /// `s13, s23, s33`
    #[serde(with = "rational::vec_as_string")]
    pub derived: Vec<Rational>,
}

impl OctadParameters {
    /// Closes the six free parameters.
    pub fn close(free: [Rational; 6]) -> Result<Self> {
        let derived = octad_close(&free)?;
        Ok(OctadParameters {
            free: free.to_vec(),
            derived: derived.to_vec(),
        })
    }

    /// Assembles parameters without checking the closure conditions.
    pub fn from_parts(free: [Rational; 6], derived: [Rational; 3]) -> Self {
        OctadParameters {
            free: free.to_vec(),
            derived: derived.to_vec(),
        }
    }

    /// Entry `s_{row,col}` with `row` in 1..=3 and `col` in 1..=3.
    pub fn s(&self, row: usize, col: usize) -> &Rational {
        match col {
            1 => &self.free[row - 1],
            2 => &self.free[row + 2],
            3 => &self.derived[row - 1],
            _ => panic!("column index {col} out of range"),
        }
    }

    pub fn free_array(&self) -> [Rational; 6] {
        std::array::from_fn(|i| self.free[i].clone())
    }
}

fn alpha_rows<T: Scalar>(one: &T, s: &[T; 6]) -> Vec<Vec<T>> {
    vec![
        vec![one.clone(), one.clone(), one.clone()],
        vec![s[0].clone(), s[1].clone(), s[2].clone()],
        vec![s[3].clone(), s[4].clone(), s[5].clone()],
    ]
}

fn beta_rows<T: Scalar>(s: &[T; 6]) -> Vec<Vec<T>> {
    vec![
        vec![s[0].clone(), s[1].clone(), s[2].clone()],
        vec![s[3].clone(), s[4].clone(), s[5].clone()],
        vec![
            s[0].mul_ref(&s[3]),
            s[1].mul_ref(&s[4]),
            s[2].mul_ref(&s[5]),
        ],
    ]
}

fn to_matrix(rows: Vec<Vec<Rational>>) -> RationalMatrix {
    RationalMatrix::from_rows(rows).expect("3x3")
}

/// Derived entries `(s13, s23, s33)` from the free ones.
pub fn octad_close(free: &[Rational; 6]) -> Result<[Rational; 3]> {
    let one = rational::one();
    let ones = vec![one.clone(), one.clone(), one.clone()];
    // beta first: a repeated free column makes both systems singular and
    // the beta system is the one that names the cause
    let beta = to_matrix(beta_rows(free))
        .solve(&ones)
        .map_err(|_| Error::SingularBetaSystem)?;
    let alpha = to_matrix(alpha_rows(&one, free))
        .solve(&ones)
        .map_err(|_| Error::SingularAlphaSystem)?;
    let mut out: [Rational; 3] = Default::default();
    for i in 0..3 {
        if beta[i].is_zero() {
            return Err(Error::BetaComponentZero { index: i + 1 });
        }
        out[i] = &alpha[i] / &beta[i];
    }
    Ok(out)
}

fn cramer_dual(rows: &[Vec<Dual<Rational>>]) -> Option<[Dual<Rational>; 3]> {
    let d = det_cofactor(rows);
    let one = Dual::constant(rational::one());
    let mut out: [Dual<Rational>; 3] = std::array::from_fn(|_| one.clone());
    for (j, slot) in out.iter_mut().enumerate() {
        let replaced: Vec<Vec<_>> = rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r[j] = one.clone();
                r
            })
            .collect();
        *slot = det_cofactor(&replaced).checked_div(&d)?;
    }
    Some(out)
}

/// The closure evaluated over dual numbers by Cramer's rule. Seeding one
/// free parameter with `x + ε` returns the derived entries together with
/// their derivatives in that parameter.
pub fn octad_close_dual(free: &[Dual<Rational>; 6]) -> Result<[Dual<Rational>; 3]> {
    let one = Dual::constant(rational::one());
    let beta = cramer_dual(&beta_rows(free)).ok_or(Error::SingularBetaSystem)?;
    let alpha = cramer_dual(&alpha_rows(&one, free)).ok_or(Error::SingularAlphaSystem)?;
    let mut out: [Dual<Rational>; 3] = std::array::from_fn(|_| one.clone());
    for i in 0..3 {
        out[i] = alpha[i]
            .checked_div(&beta[i])
            .ok_or(Error::BetaComponentZero { index: i + 1 })?;
    }
    Ok(out)
}

/// The derived entries as rational functions of the six free parameters,
/// `s_i3 = numerator_i / denominator_i`, obtained from Cramer's rule.
#[derive(Clone, Debug)]
pub struct SymbolicClosure {
    pub ring: Ring,
    pub numerators: [Polynomial; 3],
    pub denominators: [Polynomial; 3],
}

impl SymbolicClosure {
    pub fn new() -> Self {
        let ring = Ring::new(&FREE_NAMES);
        let s: [Polynomial; 6] = std::array::from_fn(|i| ring.var_at(i));
        let one = ring.one();
        let cramer = |rows: Vec<Vec<Polynomial>>| -> (Polynomial, [Polynomial; 3]) {
            let d = det_poly_matrix(&rows);
            let nums = std::array::from_fn(|j| {
                let replaced: Vec<Vec<Polynomial>> = rows
                    .iter()
                    .map(|r| {
                        let mut r = r.clone();
                        r[j] = one.clone();
                        r
                    })
                    .collect();
                det_poly_matrix(&replaced)
            });
            (d, nums)
        };
        let (da, na) = cramer(alpha_rows(&one, &s));
        let (db, nb) = cramer(beta_rows(&s));
        // s_i3 = (na_i / da) / (nb_i / db)
        let numerators = std::array::from_fn(|i| &na[i] * &db);
        let denominators = std::array::from_fn(|i| &da * &nb[i]);
        SymbolicClosure {
            ring,
            numerators,
            denominators,
        }
    }

    /// `s_i3` at a point, or `None` where the denominator vanishes.
    pub fn value(&self, i: usize, free: &[Rational; 6]) -> Option<Rational> {
        let d: Rational = self.denominators[i].eval(free);
        if d.is_zero() {
            return None;
        }
        Some(self.numerators[i].eval::<Rational>(free) / d)
    }

    /// `∂ s_i3 / ∂ free[k]` at a point by the quotient rule.
    pub fn derivative(&self, i: usize, k: usize, free: &[Rational; 6]) -> Option<Rational> {
        let n = &self.numerators[i];
        let d = &self.denominators[i];
        let dv: Rational = d.eval(free);
        if dv.is_zero() {
            return None;
        }
        let nv: Rational = n.eval(free);
        let dn: Rational = n.partial_derivative(k).eval(free);
        let dd: Rational = d.partial_derivative(k).eval(free);
        Some((dn * &dv - nv * dd) / (&dv * &dv))
    }
}

impl Default for SymbolicClosure {
    fn default() -> Self {
        Self::new()
    }
}

/// A normalized configuration that passed the general-position check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OctadConfig {
    pub params: OctadParameters,
    pub matrix: RationalMatrix,
}

impl OctadConfig {
    /// Entry `b_{ij}` with 0-based indices.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.matrix[(i, j)]
    }

    /// The 8 points as 4-vectors.
    pub fn points(&self) -> Vec<Vec<Rational>> {
        (0..8).map(|j| self.matrix.column(j)).collect()
    }
}

/// The 4×8 matrix of the normalized shape, without validation.
pub fn configuration_matrix(params: &OctadParameters) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(4, 8);
    for i in 0..4 {
        m[(i, i)] = rational::one();
        m[(i, 4)] = rational::one();
    }
    for col in 1..=3 {
        m[(0, 4 + col)] = rational::one();
        for row in 1..=3 {
            m[(row, 4 + col)] = params.s(row, col).clone();
        }
    }
    m
}

/// Every 4-element subset of `0..8`, lexicographic.
pub fn quadruples() -> impl Iterator<Item = [usize; 4]> {
    (0..8).flat_map(|a| {
        (a + 1..8).flat_map(move |b| {
            (b + 1..8).flat_map(move |c| (c + 1..8).map(move |d| [a, b, c, d]))
        })
    })
}

/// Builds the configuration and checks that no four points are coplanar.
/// The error reports the first offending column set, 1-based.
pub fn build_configuration(params: &OctadParameters) -> Result<OctadConfig> {
    let matrix = configuration_matrix(params);
    for q in quadruples() {
        if matrix.submatrix(&[0, 1, 2, 3], &q).det().is_zero() {
            return Err(Error::GeneralPositionViolation {
                columns: q.map(|c| c + 1),
            });
        }
    }
    Ok(OctadConfig {
        params: params.clone(),
        matrix,
    })
}

/// The free parameters `(-1, 3, 4, -3, 2, 3)` of the worked example.
pub fn reference_free_parameters() -> [Rational; 6] {
    [-1, 3, 4, -3, 2, 3].map(rational::int)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn reference_point_closes() {
        let d = octad_close(&reference_free_parameters()).unwrap();
        assert_eq!(d, [rat(33, 5), int(22), int(99)]);
    }

    #[test]
    fn repeated_column_is_singular_beta() {
        let free = [1, 1, 1, -3, 2, 3].map(int);
        assert_eq!(octad_close(&free), Err(Error::SingularBetaSystem));
    }

    #[test]
    fn singular_alpha_is_reported() {
        // s_i2 = s_i1 + 1: alpha row 3 = row 1 + row 2, while the beta
        // rows reduce to (a),(1),(a^2), a Vandermonde matrix
        let free = [2, 3, 5, 3, 4, 6].map(int);
        assert_eq!(octad_close(&free), Err(Error::SingularAlphaSystem));
    }

    #[test]
    fn vanishing_beta_component() {
        // s_i1 = s_i2 for i = 2,3 puts (1,1,1) in the span of the last two
        // beta columns (2,2,4) and (3,3,9), so beta_1 = 0
        let free = [5, 2, 3, 7, 2, 3].map(int);
        assert_eq!(octad_close(&free), Err(Error::BetaComponentZero { index: 1 }));
    }

    #[test]
    fn symbolic_closure_matches_numeric() {
        let sc = SymbolicClosure::new();
        let free = reference_free_parameters();
        let d = octad_close(&free).unwrap();
        for (i, di) in d.iter().enumerate() {
            assert_eq!(&sc.value(i, &free).unwrap(), di);
        }
    }

    #[test]
    fn reference_configuration_is_in_general_position() {
        let p = OctadParameters::close(reference_free_parameters()).unwrap();
        let c = build_configuration(&p).unwrap();
        assert_eq!(c.matrix.column(7), vec![int(1), rat(33, 5), int(22), int(99)]);
        assert_eq!(quadruples().count(), 70);
    }

    #[test]
    fn colliding_columns_are_rejected() {
        let p = OctadParameters::from_parts(
            [int(2), int(3), int(5), int(1), int(1), int(1)],
            [int(7), int(11), int(13)],
        );
        assert_eq!(
            build_configuration(&p),
            Err(Error::GeneralPositionViolation { columns: [1, 2, 5, 7] })
        );
    }
}
