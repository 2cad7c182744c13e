//! Tangent vectors of the octad family inside the `(1,1)` slice, the
//! family `θ(w) = Σ w_i τ_i`, the quadratic forms given by `θ(w)²` in the
//! `(2,2)` slice, and the check that those forms vanish only at `w = 0`.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{origin_certificate, variety_is_origin_only, OriginCertificate};
use crate::jacobian::{m_basis, DoubleCoverRing, GradedElement};
use crate::linalg::RationalMatrix;
use crate::monomial::Monomial;
use crate::octad::{build_configuration, OctadParameters, SymbolicClosure};
use crate::poly::{Polynomial, Ring, TermRecord};
use crate::rational::{self, Rational};

pub const W_NAMES: [&str; 6] = ["w1", "w2", "w3", "w4", "w5", "w6"];

pub fn w_ring() -> Ring {
    Ring::new(&W_NAMES)
}

/// `τ_k` for each free parameter, both as the derivative `∂F/∂s` with
/// `F = Σ_j q_j·(column 4+j of B as a form in u)` and as its normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentFrame {
    pub derivatives: Vec<Polynomial>,
    pub taus: Vec<GradedElement>,
}

/// `∂ s_i3 / ∂ free[k]` as `partials[k][i]`.
pub fn closure_partials(params: &OctadParameters) -> Result<[[Rational; 3]; 6]> {
    let closure = SymbolicClosure::new();
    let free = params.free_array();
    let mut out: [[Rational; 3]; 6] = Default::default();
    for (k, row) in out.iter_mut().enumerate() {
        for (i, d) in row.iter_mut().enumerate() {
            *d = closure
                .derivative(i, k, &free)
                .ok_or(Error::SingularSystem)?;
        }
    }
    Ok(out)
}

/// The six tangent vectors at the ring's parameter point.
///
/// Free parameter `s_r1` (resp. `s_r2`) sits in column 6 (resp. 7), so
/// `∂F/∂s_r1 = u_{r+1} q2 + q4 Σ_m (∂s_m3/∂s_r1) u_{m+1}`, and likewise
/// with `q3` for `s_r2`.
pub fn tangent_vectors(ring: &DoubleCoverRing) -> Result<TangentFrame> {
    let partials = closure_partials(&ring.config().params)?;
    let r = ring.ring();
    let u = |i: usize| r.var_at(i);
    let q = |j: usize| r.var_at(4 + j);
    let mut derivatives = Vec::with_capacity(6);
    for (k, dk) in partials.iter().enumerate() {
        let (row, col) = (k % 3 + 1, k / 3 + 1);
        let column_part = dk
            .iter()
            .enumerate()
            .fold(r.zero(), |acc, (m, d)| acc + u(m + 1).scale(d));
        derivatives.push(u(row) * q(col) + q(3) * column_part);
    }
    let taus = derivatives
        .iter()
        .map(|d| ring.element(d, (1, 1)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TangentFrame { derivatives, taus })
}

/// `θ(w) = Σ w_i τ_i` at a rational point.
pub fn theta(frame: &TangentFrame, w: &[Rational]) -> GradedElement {
    let zero = frame.taus[0].value.ring().zero();
    let value = frame
        .taus
        .iter()
        .zip(w)
        .fold(zero, |acc, (t, c)| acc + t.value.scale(c));
    GradedElement {
        bidegree: (1, 1),
        value,
    }
}

/// Coordinates of `θ(w)` in the `(1,1)` basis as linear forms in `w1..w6`.
pub fn theta_symbolic(ring: &DoubleCoverRing, frame: &TangentFrame) -> Vec<Polynomial> {
    let wr = w_ring();
    let mut coords = vec![wr.zero(); ring.graded_basis(1, 1).len()];
    for (i, t) in frame.taus.iter().enumerate() {
        for (c, x) in coords.iter_mut().zip(ring.coordinates(t)) {
            *c = &*c + &wr.var_at(i).scale(&x);
        }
    }
    coords
}

/// The nine forms `f_1..f_9`: coordinates of `θ(w)²` in the `(2,2)` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFormSystem {
    pub basis: Vec<Monomial>,
    pub forms: Vec<Polynomial>,
}

/// Checks that the `(2,2)` slice is spanned by `M1..M9` in that order.
pub fn expect_m_basis(ring: &DoubleCoverRing) -> Result<()> {
    let found = ring.graded_basis(2, 2);
    if found == m_basis() {
        return Ok(());
    }
    let names = ring.ring().names();
    Err(Error::BasisMismatch {
        found: found
            .iter()
            .map(|m| m.display_with(names).to_string())
            .collect::<Vec<_>>()
            .join(", "),
    })
}

/// `θ(w)²` in whatever `(2,2)` basis the ring has, using
/// `θ² = Σ_a w_a² τ_a² + Σ_{a<b} 2 w_a w_b τ_a τ_b`.
pub fn quadratic_forms(ring: &DoubleCoverRing, frame: &TangentFrame) -> QuadraticFormSystem {
    let basis = ring.graded_basis(2, 2);
    let wr = w_ring();
    let mut forms = vec![wr.zero(); basis.len()];
    let n = frame.taus.len();
    for a in 0..n {
        for b in a..n {
            let prod = ring.multiply(&frame.taus[a], &frame.taus[b]);
            let mut ww = &wr.var_at(a) * &wr.var_at(b);
            if a != b {
                ww = ww.scale(&rational::int(2));
            }
            for (f, m) in forms.iter_mut().zip(&basis) {
                let c = prod.value.coeff(m);
                if c != rational::zero() {
                    *f = &*f + &ww.scale(&c);
                }
            }
        }
    }
    QuadraticFormSystem { basis, forms }
}

/// [`quadratic_forms`] after checking the basis is `M1..M9`.
pub fn quadratic_form_coords(
    ring: &DoubleCoverRing,
    frame: &TangentFrame,
) -> Result<QuadraticFormSystem> {
    expect_m_basis(ring)?;
    Ok(quadratic_forms(ring, frame))
}

/// True iff the forms have no common zero besides `w = 0`.
pub fn certify_origin_only(system: &QuadraticFormSystem) -> Result<bool> {
    variety_is_origin_only(&system.forms)
}

/// Per-variable powers `w_i^k` lying in the ideal of the forms.
pub fn origin_witnesses(system: &QuadraticFormSystem) -> Result<OriginCertificate> {
    origin_certificate(&system.forms)
}

/// Rank of the τ's inside the `(1,1)` slice.
pub fn tau_span_rank(ring: &DoubleCoverRing, frame: &TangentFrame) -> usize {
    let rows = frame.taus.iter().map(|t| ring.coordinates(t)).collect();
    RationalMatrix::from_rows(rows).map_or(0, |m| m.rank())
}

#[derive(Clone, Debug, Serialize)]
pub struct FormRecord {
    pub label: String,
    pub text: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub ring_ms: u128,
    pub tangents_ms: u128,
    pub forms_ms: u128,
    pub certification_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct IvhsReport {
    pub params: OctadParameters,
    pub grading: &'static str,
    pub hodge_numbers: [usize; 4],
    pub basis_22: Vec<String>,
    pub m_basis_matches: bool,
    pub tangent_derivatives: Vec<String>,
    pub taus: Vec<String>,
    pub forms: Vec<FormRecord>,
    pub tau_span_rank: usize,
    pub certificate: OriginCertificate,
    pub origin_only: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

/// Runs the whole pipeline at one parameter point.
pub fn ivhs_report(params: &OctadParameters, with_timings: bool) -> Result<IvhsReport> {
    let mut timings = Timings::default();
    let clock = Instant::now();
    let ring = DoubleCoverRing::new(&build_configuration(params)?)?;
    timings.ring_ms = clock.elapsed().as_millis();

    let clock = Instant::now();
    let frame = tangent_vectors(&ring)?;
    timings.tangents_ms = clock.elapsed().as_millis();

    let clock = Instant::now();
    let system = quadratic_forms(&ring, &frame);
    timings.forms_ms = clock.elapsed().as_millis();

    let clock = Instant::now();
    let certificate = origin_witnesses(&system)?;
    timings.certification_ms = clock.elapsed().as_millis();

    let names = ring.ring().names();
    Ok(IvhsReport {
        params: params.clone(),
        grading: "(u-degree, q-degree) = (i, i) for H^{3-i,i}",
        hodge_numbers: ring.hodge_numbers(),
        basis_22: system
            .basis
            .iter()
            .map(|m| m.display_with(names).to_string())
            .collect(),
        m_basis_matches: expect_m_basis(&ring).is_ok(),
        tangent_derivatives: frame.derivatives.iter().map(|d| d.to_string()).collect(),
        taus: frame.taus.iter().map(|t| t.value.to_string()).collect(),
        forms: system
            .forms
            .iter()
            .enumerate()
            .map(|(i, f)| FormRecord {
                label: format!("f{}", i + 1),
                text: f.to_string(),
                terms: f.to_records(),
            })
            .collect(),
        tau_span_rank: tau_span_rank(&ring, &frame),
        origin_only: certificate.origin_only(),
        certificate,
        timings: with_timings.then_some(timings),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::Dual;
    use crate::octad::{octad_close_dual, reference_free_parameters};
    use crate::rational::{int, rat};

    fn reference() -> (DoubleCoverRing, TangentFrame) {
        let p = OctadParameters::close(reference_free_parameters()).unwrap();
        let ring = DoubleCoverRing::new(&build_configuration(&p).unwrap()).unwrap();
        let frame = tangent_vectors(&ring).unwrap();
        (ring, frame)
    }

    #[test]
    fn partials_agree_with_dual_numbers() {
        let free = reference_free_parameters();
        let p = OctadParameters::close(free.clone()).unwrap();
        let partials = closure_partials(&p).unwrap();
        for (k, row) in partials.iter().enumerate() {
            let point: [Dual<Rational>; 6] = std::array::from_fn(|i| {
                if i == k {
                    Dual::variable(free[i].clone())
                } else {
                    Dual::constant(free[i].clone())
                }
            });
            let d = octad_close_dual(&point).unwrap();
            for (i, (di, pi)) in d.iter().zip(row).enumerate() {
                assert_eq!(&di.eps, pi, "k={k} i={i}");
            }
        }
        assert_eq!(partials[0], [int(-6), rat(-73, 2), int(-420)]);
    }

    #[test]
    fn first_tangent_vector() {
        let (ring, frame) = reference();
        let r = ring.ring();
        let (u2, u3, u4) = (r.var("u2"), r.var("u3"), r.var("u4"));
        let (q2, q4) = (r.var("q2"), r.var("q4"));
        let expected = &q2 * &u2
            + &q4 * &(u2.scale(&int(-6)) + u3.scale(&rat(-73, 2)) + u4.scale(&int(-420)));
        assert_eq!(frame.derivatives[0], expected);
        assert_eq!(frame.taus[0].value, ring.normal_form(&expected));
    }

    #[test]
    fn q_support_of_derivatives() {
        let (ring, frame) = reference();
        let r = ring.ring();
        for (k, d) in frame.derivatives.iter().enumerate() {
            let allowed = if k < 3 { [5, 7] } else { [6, 7] };
            for (m, _) in d.terms() {
                let qs: Vec<usize> = (4..8).filter(|&v| m.exponent(v) > 0).collect();
                assert_eq!(qs.len(), 1);
                assert!(allowed.contains(&qs[0]), "{}", r.names()[qs[0]]);
            }
        }
    }

    #[test]
    fn theta_at_unit_vectors() {
        let (_, frame) = reference();
        let mut w = vec![int(0); 6];
        assert!(theta(&frame, &w).value.is_zero());
        w[0] = int(1);
        assert_eq!(theta(&frame, &w), frame.taus[0]);
    }

    #[test]
    fn forms_at_first_unit_vector_are_tau1_squared() {
        let (ring, frame) = reference();
        let system = quadratic_form_coords(&ring, &frame).unwrap();
        let sq = ring.multiply(&frame.taus[0], &frame.taus[0]);
        let e1: Vec<Rational> = (0..6).map(|i| int((i == 0) as i64)).collect();
        let got: Vec<Rational> = system.forms.iter().map(|f| f.eval(&e1)).collect();
        assert_eq!(got, ring.coordinates(&sq));
    }

    #[test]
    fn span_rank_is_six() {
        let (ring, frame) = reference();
        assert_eq!(tau_span_rank(&ring, &frame), 6);
        let mut forced = frame.clone();
        forced.taus[1] = forced.taus[0].clone();
        assert!(tau_span_rank(&ring, &forced) <= 5);
    }

    #[test]
    fn small_systems() {
        let wr = w_ring();
        let w: Vec<_> = (0..6).map(|i| wr.var_at(i)).collect();
        let squares = QuadraticFormSystem {
            basis: vec![],
            forms: w.iter().map(|x| x * x).collect(),
        };
        assert!(certify_origin_only(&squares).unwrap());
        let degenerate = QuadraticFormSystem {
            basis: vec![],
            forms: vec![&w[0] * &w[0], &w[1] * &w[2]],
        };
        assert!(!certify_origin_only(&degenerate).unwrap());
    }
}
