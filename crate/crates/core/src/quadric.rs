//! Nets of quadrics in P³: discriminant quartics, vertices of rank-3
//! members, tangent hyperplanes, smoothness of plane quartics and the
//! degree of the base locus.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, variety_is_origin_only};
use crate::linalg::{det_poly_matrix, RationalMatrix};
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, Ring, TermRecord};
use crate::rational::{self, Rational};

pub const T_NAMES: [&str; 3] = ["t1", "t2", "t3"];
pub const X_NAMES: [&str; 4] = ["x0", "x1", "x2", "x3"];

pub fn t_ring() -> Ring {
    Ring::new(&T_NAMES)
}

/// A 4×4 symmetric rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RationalMatrix", into = "RationalMatrix")]
pub struct SymmetricQuadric(RationalMatrix);

impl TryFrom<RationalMatrix> for SymmetricQuadric {
    type Error = Error;

    fn try_from(m: RationalMatrix) -> Result<Self> {
        SymmetricQuadric::new(m)
    }
}

impl From<SymmetricQuadric> for RationalMatrix {
    fn from(q: SymmetricQuadric) -> Self {
        q.0
    }
}

impl SymmetricQuadric {
    pub fn new(m: RationalMatrix) -> Result<Self> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Error::Shape {
                rows: m.rows(),
                cols: m.cols(),
                expected: "4x4".into(),
            });
        }
        if !m.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(SymmetricQuadric(m))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(RationalMatrix::from_i64(rows))
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    /// Entries as constants of `ring`.
    pub fn to_symbolic(&self, ring: &Ring) -> SymbolicQuadric {
        SymbolicQuadric {
            entries: (0..4)
                .map(|i| (0..4).map(|j| ring.constant(self.0[(i, j)].clone())).collect())
                .collect(),
        }
    }

    /// The quadratic form `x Q xᵗ` in `x0..x3` of `ring`.
    pub fn form(&self, ring: &Ring) -> Polynomial {
        self.to_symbolic(ring).form(&(0..4).map(|i| ring.var_at(i)).collect::<Vec<_>>())
    }
}

/// A 4×4 symmetric matrix with polynomial entries in a common ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicQuadric {
    pub entries: Vec<Vec<Polynomial>>,
}

impl SymbolicQuadric {
    pub fn new(entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        if entries.len() != 4 || entries.iter().any(|r| r.len() != 4) {
            return Err(Error::Shape {
                rows: entries.len(),
                cols: entries.first().map_or(0, Vec::len),
                expected: "4x4".into(),
            });
        }
        let ring = entries[0][0].ring();
        if let Some(p) = entries.iter().flatten().find(|p| p.ring() != ring) {
            return Err(Error::RingMismatch {
                left: ring.names().join(","),
                right: p.ring().names().join(","),
            });
        }
        if (0..4).any(|i| (0..i).any(|j| entries[i][j] != entries[j][i])) {
            return Err(Error::NotSymmetric);
        }
        Ok(SymbolicQuadric { entries })
    }

    pub fn ring(&self) -> &Ring {
        self.entries[0][0].ring()
    }

    pub fn mul_vec(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).fold(self.ring().zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    /// `v Q vᵗ`.
    pub fn form(&self, v: &[Polynomial]) -> Polynomial {
        self.mul_vec(v)
            .iter()
            .zip(v)
            .fold(self.ring().zero(), |acc, (a, b)| acc + a * b)
    }

    fn embed(&self, target: &Ring) -> Result<SymbolicQuadric> {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|p| p.embed(target)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(SymbolicQuadric { entries })
    }
}

/// Three linearly independent symmetric matrices spanning a net.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[SymmetricQuadric; 3]", into = "[SymmetricQuadric; 3]")]
pub struct QuadricNet {
    quadrics: [SymmetricQuadric; 3],
}

impl TryFrom<[SymmetricQuadric; 3]> for QuadricNet {
    type Error = Error;

    fn try_from(q: [SymmetricQuadric; 3]) -> Result<Self> {
        QuadricNet::new(q)
    }
}

impl From<QuadricNet> for [SymmetricQuadric; 3] {
    fn from(n: QuadricNet) -> Self {
        n.quadrics
    }
}

impl QuadricNet {
    pub fn new(quadrics: [SymmetricQuadric; 3]) -> Result<Self> {
        let rows = quadrics
            .iter()
            .map(|q| q.matrix().to_rows().concat())
            .collect();
        if RationalMatrix::from_rows(rows)?.rank() != 3 {
            return Err(Error::DependentNet);
        }
        Ok(QuadricNet { quadrics })
    }

    pub fn quadrics(&self) -> &[SymmetricQuadric; 3] {
        &self.quadrics
    }

    /// `Q_t = t1 Q1 + t2 Q2 + t3 Q3` at a rational point.
    pub fn member(&self, t: &[Rational; 3]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(4, 4);
        for (q, c) in self.quadrics.iter().zip(t) {
            for i in 0..4 {
                for j in 0..4 {
                    m[(i, j)] += c * &q.matrix()[(i, j)];
                }
            }
        }
        m
    }
}

/// The special net with discriminant `(t1 t3 - t2²)²`, whose base locus is
/// the twisted cubic `(x³ : x² : x : 1)`.
pub fn special_net() -> QuadricNet {
    let q1 = SymmetricQuadric::from_i64(&[&[0, 0, 1, 0], &[0, -2, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0]]);
    let q2 = SymmetricQuadric::from_i64(&[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]);
    let q3 = SymmetricQuadric::from_i64(&[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -2, 0], &[0, 1, 0, 0]]);
    QuadricNet::new([q1.unwrap(), q2.unwrap(), q3.unwrap()]).expect("independent")
}

/// First-order deformation of the special net, entries in `Q[u]`.
pub fn special_deformation() -> [SymbolicQuadric; 3] {
    let r = Ring::new(&["u"]);
    let u = r.var("u");
    let c = |n: i64| r.constant(rational::int(n));
    let net = special_net();
    let mut out = net.quadrics().clone().map(|q| q.to_symbolic(&r));
    out[0].entries[3][3] = u.scale(&rational::int(4));
    let a = &u.scale(&rational::int(-1)) - &c(1);
    let b = &u.scale(&rational::int(3)) + &c(1);
    out[1].entries[0][3] = a.clone();
    out[1].entries[3][0] = a;
    out[1].entries[1][2] = b.clone();
    out[1].entries[2][1] = b;
    out[2].entries[0][0] = u.scale(&rational::int(4));
    out
}

fn pencil(quadrics: &[SymbolicQuadric; 3], ring: &Ring) -> Vec<Vec<Polynomial>> {
    let t: Vec<Polynomial> = T_NAMES.iter().map(|n| ring.var(n)).collect();
    (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    quadrics
                        .iter()
                        .zip(&t)
                        .fold(ring.zero(), |acc, (q, tk)| acc + tk * &q.entries[i][j])
                })
                .collect()
        })
        .collect()
}

/// `det(t1 Q1 + t2 Q2 + t3 Q3)` in `t1, t2, t3`.
pub fn discriminant_quartic(net: &QuadricNet) -> Polynomial {
    let ring = t_ring();
    let qs = net.quadrics().clone().map(|q| q.to_symbolic(&ring));
    det_poly_matrix(&pencil(&qs, &ring))
}

/// `det(Σ t_k Q_k(u))` modulo `u²`, in the ring `t1, t2, t3` plus the
/// variables of the family.
pub fn deformation_discriminant_mod_u2(family: &[SymbolicQuadric; 3], u: &str) -> Result<Polynomial> {
    let base = family[0].ring();
    let mut names: Vec<String> = T_NAMES.iter().map(|s| s.to_string()).collect();
    names.extend(base.names().iter().cloned());
    let ring = Ring::new(&names);
    let ui = ring.index_of(u).ok_or_else(|| Error::UnknownVariable(u.into()))?;
    let fam = [family[0].embed(&ring)?, family[1].embed(&ring)?, family[2].embed(&ring)?];
    let det = det_poly_matrix(&pencil(&fam, &ring));
    Ok(det.filter_terms(|m| m.exponent(ui) < 2))
}

/// Kernel of a rank-3 quadric, scaled so its last nonzero coordinate is 1.
pub fn vertex(q: &RationalMatrix) -> Result<Vec<Rational>> {
    let rank = q.rank();
    if rank != 3 {
        return Err(Error::RankNotThree { rank });
    }
    let mut v = q.kernel().remove(0);
    normalize_point(&mut v);
    Ok(v)
}

/// Scales so the last nonzero coordinate is 1.
pub fn normalize_point(v: &mut [Rational]) {
    if let Some(last) = v.iter().rev().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x /= &last;
        }
    }
}

/// Basis `c_k e_j - c_j e_k` (`j ≠ k`) of the hyperplane `Σ c_i x_i = 0`,
/// with `k` the first index where `c` is nonzero. Over the fraction field
/// of the coefficient ring these three vectors are a basis.
fn hyperplane_basis(c: &[Polynomial]) -> Option<Vec<Vec<Polynomial>>> {
    let ring = c[0].ring();
    let k = c.iter().position(|x| !x.is_zero())?;
    Some(
        (0..c.len())
            .filter(|&j| j != k)
            .map(|j| {
                let mut v = vec![ring.zero(); c.len()];
                v[j] = c[k].clone();
                v[k] = -c[j].clone();
                v
            })
            .collect(),
    )
}

/// Restriction of `q` to the hyperplane `c`, as a 3×3 symmetric matrix.
fn restriction(q: &SymbolicQuadric, c: &[Polynomial]) -> Option<Vec<Vec<Polynomial>>> {
    let basis = hyperplane_basis(c)?;
    let images: Vec<Vec<Polynomial>> = basis.iter().map(|b| q.mul_vec(b)).collect();
    Some(
        basis
            .iter()
            .map(|a| {
                images
                    .iter()
                    .map(|qb| a.iter().zip(qb).fold(q.ring().zero(), |acc, (x, y)| acc + x * y))
                    .collect()
            })
            .collect(),
    )
}

/// Rank exactly one over the fraction field: some entry nonzero and every
/// 2×2 minor zero.
fn has_rank_one(m: &[Vec<Polynomial>]) -> bool {
    let n = m.len();
    if m.iter().flatten().all(Polynomial::is_zero) {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                for l in k + 1..n {
                    if !(&m[i][k] * &m[j][l] - &m[i][l] * &m[j][k]).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether the hyperplane `Σ c_i x_i = 0` is tangent to the rank-3 cone
/// `q`: it passes through the vertex and meets the cone in a double plane
/// (restriction of rank 1).
pub fn is_tangent_hyperplane(q: &RationalMatrix, c: &[Rational; 4]) -> Result<bool> {
    let v = vertex(q)?;
    let on = v.iter().zip(c).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
    if !on.is_zero() {
        return Ok(false);
    }
    let ring = Ring::new(&[] as &[&str]);
    let sq = SymmetricQuadric::new(q.clone())?.to_symbolic(&ring);
    let cs: Vec<Polynomial> = c.iter().map(|x| ring.constant(x.clone())).collect();
    Ok(restriction(&sq, &cs).is_some_and(|r| has_rank_one(&r)))
}

/// `v` spans the kernel of `q` over the fraction field of the entry ring:
/// `q v = 0`, `v ≠ 0`, and some 3×3 minor of `q` is a nonzero polynomial.
pub fn is_symbolic_vertex(q: &SymbolicQuadric, v: &[Polynomial]) -> bool {
    if v.iter().all(Polynomial::is_zero) || !q.mul_vec(v).iter().all(Polynomial::is_zero) {
        return false;
    }
    let idx = |skip: usize| (0..4).filter(move |&i| i != skip);
    (0..4).any(|r| {
        (0..4).any(|c| {
            let minor: Vec<Vec<Polynomial>> = idx(r)
                .map(|i| idx(c).map(|j| q.entries[i][j].clone()).collect())
                .collect();
            !det_poly_matrix(&minor).is_zero()
        })
    })
}

/// Tangency with symbolic entries: `v` is the vertex of `q`, the
/// hyperplane `c` contains it, and the restriction has rank 1, all as
/// identities in the entry ring.
pub fn is_tangent_hyperplane_symbolic(q: &SymbolicQuadric, v: &[Polynomial], c: &[Polynomial]) -> bool {
    if !is_symbolic_vertex(q, v) {
        return false;
    }
    let on = v.iter().zip(c).fold(q.ring().zero(), |acc, (a, b)| acc + a * b);
    on.is_zero() && restriction(q, c).is_some_and(|r| has_rank_one(&r))
}

/// `Q(x) = Q1 + x Q2 + x² Q3` for the special net, entries in `Q[x]`.
pub fn special_family_in_x() -> SymbolicQuadric {
    let r = Ring::new(&["x"]);
    let x = r.var("x");
    let net = special_net();
    let qs = net.quadrics().clone().map(|q| q.to_symbolic(&r));
    let entries = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| &qs[0].entries[i][j] + &(&x * &qs[1].entries[i][j]) + &x * &x * &qs[2].entries[i][j])
                .collect()
        })
        .collect();
    SymbolicQuadric { entries }
}

/// `(x³, x², x, 1)` in the given ring.
pub fn twisted_cubic_point(ring: &Ring, x: &Polynomial) -> Vec<Polynomial> {
    vec![x.pow(3), x.pow(2), x.clone(), ring.one()]
}

/// Hyperplane `W_w` with coefficients `(-1, 2w+x, -(w²+2xw), w²x)`.
pub fn w_hyperplane(w: &Polynomial, x: &Polynomial) -> Vec<Polynomial> {
    let ring = w.ring();
    let two = rational::int(2);
    vec![
        ring.constant(rational::int(-1)),
        w.scale(&two) + x.clone(),
        -(w * w + (x * w).scale(&two)),
        w * w * x,
    ]
}

/// Smoothness of `f = 0` in P²: the partial derivatives have no common
/// zero besides the origin.
pub fn is_smooth_plane_quartic(f: &Polynomial) -> Result<bool> {
    if f.ring().nvars() != 3 || !f.is_homogeneous() || f.total_degree() != Some(4) {
        return Err(Error::InputNotHomogeneousQuartic);
    }
    let partials: Vec<Polynomial> = (0..3).map(|i| f.partial_derivative(i)).collect();
    variety_is_origin_only(&partials)
}

/// Affine chart `Σ c_i x_i = 1` of a projective ideal in `x0..x3`,
/// eliminating the last coordinate with nonzero `c`.
fn affine_chart(gens: &[Polynomial], c: &[Rational; 4]) -> Result<Vec<Polynomial>> {
    let k = (0..4).rev().find(|&i| !c[i].is_zero()).expect("nonzero hyperplane");
    let names: Vec<&str> = (0..4).filter(|&i| i != k).map(|i| X_NAMES[i]).collect();
    let aff = Ring::new(&names);
    let mut xk = aff.one();
    for i in (0..4).filter(|&i| i != k) {
        xk = xk - aff.var(X_NAMES[i]).scale(&c[i]);
    }
    let xk = xk.scale(&(Rational::from_integer(1.into()) / &c[k]));
    gens.iter().map(|g| g.substitute(&[(k, xk.clone())])).collect()
}

/// Hyperplanes tried in turn: the coordinate hyperplanes, then
/// `x0 + a x1 + a² x2 + a³ x3` for `a = 1, 2, ...`. A point lies on at
/// most three of the latter, so finitely many base points rule out only
/// finitely many candidates.
fn chart_candidates(count: usize) -> impl Iterator<Item = [Rational; 4]> {
    let coord = (0..4).map(|i| {
        let mut c: [Rational; 4] = Default::default();
        c[i] = rational::one();
        c
    });
    let moment = (1..=count as i64).map(|a| [1, a, a * a, a * a * a].map(rational::int));
    coord.chain(moment)
}

/// Length of the base scheme `Z(Q1) ∩ Z(Q2) ∩ Z(Q3)`.
///
/// Picks a hyperplane containing no base point, checked by
/// [`variety_is_origin_only`], and counts standard monomials in the
/// complementary affine chart.
pub fn base_locus_degree(net: &QuadricNet) -> Result<usize> {
    let xr = Ring::new(&X_NAMES);
    let gens: Vec<Polynomial> = net.quadrics().iter().map(|q| q.form(&xr)).collect();
    for c in chart_candidates(64) {
        let aff = affine_chart(&gens, &c)?;
        let ar = aff[0].ring().clone();
        let gb = buchberger(&ar, &aff, &MonomialOrder::grevlex_natural(3))?;
        let Some(len) = gb.quotient_dimension() else {
            return Err(Error::PositiveDimensionalBaseLocus);
        };
        let hyper = (0..4).fold(xr.zero(), |acc, i| acc + xr.var_at(i).scale(&c[i]));
        let mut at_infinity = gens.clone();
        at_infinity.push(hyper);
        if variety_is_origin_only(&at_infinity)? {
            return Ok(len);
        }
    }
    Err(Error::PositiveDimensionalBaseLocus)
}

/// Net of quadrics through seven points in general position: the kernel
/// of the evaluation map on the 10 quadratic monomials.
pub fn net_through_points(points: &[Vec<Rational>]) -> Result<QuadricNet> {
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect();
    let rows = points
        .iter()
        .map(|p| pairs.iter().map(|&(i, j)| &p[i] * &p[j]).collect())
        .collect();
    let kernel = RationalMatrix::from_rows(rows)?.kernel();
    if kernel.len() != 3 {
        return Err(Error::DependentNet);
    }
    let half = rational::rat(1, 2);
    let quadric = |v: &Vec<Rational>| {
        let mut m = RationalMatrix::zeros(4, 4);
        for (&(i, j), c) in pairs.iter().zip(v) {
            if i == j {
                m[(i, i)] = c.clone();
            } else {
                m[(i, j)] = c * &half;
                m[(j, i)] = c * &half;
            }
        }
        SymmetricQuadric::new(m)
    };
    QuadricNet::new([quadric(&kernel[0])?, quadric(&kernel[1])?, quadric(&kernel[2])?])
}

#[derive(Clone, Debug, Serialize)]
pub struct RankSample {
    #[serde(with = "rational::vec_as_string")]
    pub t: Vec<Rational>,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaneQuarticReport {
    pub discriminant: String,
    pub discriminant_terms: Vec<TermRecord>,
    pub smooth: bool,
    pub rank_profile: Vec<RankSample>,
    /// `None` when the base locus is positive dimensional.
    pub base_locus_degree: Option<usize>,
}

/// Integer points `t` with entries in `-bound..=bound`, first nonzero
/// entry positive, at which the discriminant vanishes.
pub fn rational_points_on_discriminant(disc: &Polynomial, bound: i64) -> Vec<[Rational; 3]> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                let first = [a, b, c].into_iter().find(|&v| v != 0);
                if first.is_none_or(|v| v < 0) {
                    continue;
                }
                let t = [a, b, c].map(rational::int);
                if disc.eval::<Rational>(&t).is_zero() {
                    out.push(t);
                }
            }
        }
    }
    out
}

pub fn analyze_net(net: &QuadricNet) -> Result<PlaneQuarticReport> {
    let disc = discriminant_quartic(net);
    let smooth = if disc.is_zero() {
        false
    } else {
        is_smooth_plane_quartic(&disc)?
    };
    let rank_profile = rational_points_on_discriminant(&disc, 3)
        .into_iter()
        .map(|t| RankSample {
            rank: net.member(&t).rank(),
            t: t.to_vec(),
        })
        .collect();
    let base_locus_degree = match base_locus_degree(net) {
        Ok(d) => Some(d),
        Err(Error::PositiveDimensionalBaseLocus) => None,
        Err(e) => return Err(e),
    };
    Ok(PlaneQuarticReport {
        discriminant: disc.to_string(),
        discriminant_terms: disc.to_records(),
        smooth,
        rank_profile,
        base_locus_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn double_conic(r: &Ring) -> Polynomial {
        let (t1, t2, t3) = (r.var("t1"), r.var("t2"), r.var("t3"));
        (&t1 * &t3 - &t2 * &t2).pow(2)
    }

    #[test]
    fn special_discriminant() {
        assert_eq!(discriminant_quartic(&special_net()), double_conic(&t_ring()));
    }

    #[test]
    fn deformed_discriminant() {
        let d = deformation_discriminant_mod_u2(&special_deformation(), "u").unwrap();
        let r = d.ring().clone();
        let (t1, t2, t3, u) = (r.var("t1"), r.var("t2"), r.var("t3"), r.var("u"));
        let quartics = t1.pow(4) + t2.pow(4) + t3.pow(4);
        assert_eq!(d, double_conic(&r) + (quartics * u).scale(&int(8)));
    }

    #[test]
    fn dependent_net_rejected() {
        let id = SymmetricQuadric::new(RationalMatrix::identity(4)).unwrap();
        let zero = SymmetricQuadric::new(RationalMatrix::zeros(4, 4)).unwrap();
        assert_eq!(
            QuadricNet::new([id, zero.clone(), zero]).unwrap_err(),
            Error::DependentNet
        );
    }

    #[test]
    fn non_symmetric_rejected() {
        let m = RationalMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        assert_eq!(SymmetricQuadric::new(m).unwrap_err(), Error::NotSymmetric);
    }

    #[test]
    fn vertices_on_twisted_cubic() {
        let net = special_net();
        for x in -3..=3 {
            let t = [int(1), int(x), int(x * x)];
            let q = net.member(&t);
            assert_eq!(q.rank(), 3);
            assert_eq!(vertex(&q).unwrap(), [x * x * x, x * x, x, 1].map(int).to_vec());
        }
        assert!(matches!(
            vertex(&RationalMatrix::identity(4)),
            Err(Error::RankNotThree { rank: 4 })
        ));
    }

    #[test]
    fn symbolic_vertex_and_tangency() {
        let q = special_family_in_x();
        let r = Ring::new(&["w", "x"]);
        let (w, x) = (r.var("w"), r.var("x"));
        let qwx = q.embed(&r).unwrap();
        let v = twisted_cubic_point(&r, &x);
        assert!(is_symbolic_vertex(&qwx, &v));
        assert!(is_tangent_hyperplane_symbolic(&qwx, &v, &w_hyperplane(&w, &x)));
        // x0 - x3 passes through (x³:x²:x:1) only at x = 1
        let c = vec![r.one(), r.zero(), r.zero(), -r.one()];
        assert!(!is_tangent_hyperplane_symbolic(&qwx, &v, &c));
    }

    #[test]
    fn tangency_rational_cases() {
        // cone x0² + x1² - x2² with vertex (0:0:0:1)
        let q = RationalMatrix::diagonal(&[int(1), int(1), int(-1), int(0)]);
        // x0 = x2 is tangent along the ruling (1:0:1:*)
        assert!(is_tangent_hyperplane(&q, &[int(1), int(0), int(-1), int(0)]).unwrap());
        // x1 = 0 cuts two lines x0 = ±x2
        assert!(!is_tangent_hyperplane(&q, &[int(0), int(1), int(0), int(0)]).unwrap());
        // x3 = 0 misses the vertex
        assert!(!is_tangent_hyperplane(&q, &[int(0), int(0), int(0), int(1)]).unwrap());
    }

    #[test]
    fn smoothness() {
        let r = t_ring();
        let fermat = (0..3).fold(r.zero(), |a, i| a + r.var_at(i).pow(4));
        assert!(is_smooth_plane_quartic(&fermat).unwrap());
        assert!(!is_smooth_plane_quartic(&double_conic(&r)).unwrap());
        assert_eq!(
            is_smooth_plane_quartic(&r.var("t1").pow(3)).unwrap_err(),
            Error::InputNotHomogeneousQuartic
        );
    }

    #[test]
    fn base_locus_of_special_net_is_a_curve() {
        assert_eq!(
            base_locus_degree(&special_net()).unwrap_err(),
            Error::PositiveDimensionalBaseLocus
        );
    }

    #[test]
    fn diagonal_net_has_eight_base_points() {
        let d = |v: [i64; 4]| SymmetricQuadric::new(RationalMatrix::diagonal(&v.map(int))).unwrap();
        let net = QuadricNet::new([d([1, 1, 1, -1]), d([1, 2, -1, 3]), d([2, -1, 1, 1])]).unwrap();
        assert_eq!(base_locus_degree(&net).unwrap(), 8);
    }
}
