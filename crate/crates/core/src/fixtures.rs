//! Built-in reference fixtures and the checks run by `verify-paper`.
//!
//! The reference point data (parameters, the `(2,2)` monomial list, `τ1`
//! and every coefficient of `f1`) is compiled in from
//! `fixtures/reference.json`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{origin_certificate, OriginCertificate};
use crate::hyperelliptic::{cubic_factor_identity, gamma_restriction_identity};
use crate::ivhs::{quadratic_form_coords, tangent_vectors, w_ring, QuadraticFormSystem, TangentFrame};
use crate::jacobian::{uq_ring, DoubleCoverRing};
use crate::octad::{build_configuration, octad_close, OctadParameters};
use crate::poly::Polynomial;
use crate::quadric::{
    base_locus_degree, deformation_discriminant_mod_u2, discriminant_quartic, is_smooth_plane_quartic,
    is_tangent_hyperplane_symbolic, special_deformation, special_family_in_x, special_net, t_ring,
    twisted_cubic_point, vertex, w_hyperplane,
};
use crate::rational::{self, Rational};
use crate::wedge::{primitive_dimensions, q_wedge, WeightOneIvhs, Wedge};
use crate::poly::Ring;

const REFERENCE_JSON: &str = include_str!("../fixtures/reference.json");

/// The reference data as shipped.
#[derive(Clone, Debug, Deserialize)]
pub struct ReferenceData {
    pub free: Vec<String>,
    pub derived: Vec<String>,
    pub m_basis: Vec<String>,
    pub tau1: Vec<(String, String)>,
    pub f1: Vec<(String, String)>,
}

pub fn reference_data() -> &'static ReferenceData {
    static DATA: OnceLock<ReferenceData> = OnceLock::new();
    DATA.get_or_init(|| serde_json::from_str(REFERENCE_JSON).expect("embedded fixture parses"))
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>> {
    v.iter()
        .map(|s| rational::parse_rational(s).map_err(Error::from))
        .collect()
}

fn parse_terms(ring: &Ring, terms: &[(String, String)]) -> Result<Polynomial> {
    let mut out = ring.zero();
    for (m, c) in terms {
        let m = ring.parse_monomial(m)?;
        out = out + Polynomial::monomial(ring, m, rational::parse_rational(c)?);
    }
    Ok(out)
}

impl ReferenceData {
    pub fn free_parameters(&self) -> Result<[Rational; 6]> {
        let v = parse_all(&self.free)?;
        v.try_into().map_err(|v: Vec<Rational>| Error::Shape {
            rows: v.len(),
            cols: 1,
            expected: "6 free parameters".into(),
        })
    }

    pub fn derived_parameters(&self) -> Result<Vec<Rational>> {
        parse_all(&self.derived)
    }

    pub fn tau1(&self) -> Result<Polynomial> {
        parse_terms(&uq_ring(), &self.tau1)
    }

    pub fn f1(&self) -> Result<Polynomial> {
        parse_terms(&w_ring(), &self.f1)
    }
}

/// Lazily computed objects at the reference point, shared between checks.
#[derive(Default)]
pub struct ReferenceContext {
    ring: OnceLock<Result<DoubleCoverRing>>,
    frame: OnceLock<Result<TangentFrame>>,
    system: OnceLock<Result<QuadraticFormSystem>>,
    certificate: OnceLock<Result<OriginCertificate>>,
}

fn borrow<T>(r: &Result<T>) -> Result<&T> {
    r.as_ref().map_err(Clone::clone)
}

impl ReferenceContext {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ring(&self) -> Result<&DoubleCoverRing> {
        borrow(self.ring.get_or_init(|| {
            let free = reference_data().free_parameters()?;
            let params = OctadParameters::close(free)?;
            DoubleCoverRing::new(&build_configuration(&params)?)
        }))
    }

    pub fn frame(&self) -> Result<&TangentFrame> {
        borrow(self.frame.get_or_init(|| tangent_vectors(self.ring()?)))
    }

    pub fn system(&self) -> Result<&QuadraticFormSystem> {
        borrow(
            self.system
                .get_or_init(|| quadratic_form_coords(self.ring()?, self.frame()?)),
        )
    }

    pub fn certificate(&self) -> Result<&OriginCertificate> {
        borrow(
            self.certificate
                .get_or_init(|| origin_certificate(&self.system()?.forms)),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureResult {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

type Check = fn(&ReferenceContext) -> Result<(bool, String)>;

/// One named check with the statement it verifies.
#[derive(Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub statement: &'static str,
    check: Check,
}

impl Fixture {
    pub fn run(&self, ctx: &ReferenceContext) -> FixtureResult {
        let (ok, detail) = match (self.check)(ctx) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        FixtureResult {
            name: self.name,
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }
}

fn eq_detail<T: PartialEq + std::fmt::Display>(found: T, expected: T) -> (bool, String) {
    let ok = found == expected;
    let detail = if ok {
        format!("{found}")
    } else {
        format!("expected {expected}, found {found}")
    };
    (ok, detail)
}

fn show(v: &[Rational]) -> String {
    let s: Vec<String> = v.iter().map(rational::format_rational).collect();
    format!("({})", s.join(", "))
}

fn double_conic(r: &Ring) -> Polynomial {
    let (t1, t2, t3) = (r.var("t1"), r.var("t2"), r.var("t3"));
    (&t1 * &t3 - &t2 * &t2).pow(2)
}

fn check_special_discriminant(_: &ReferenceContext) -> Result<(bool, String)> {
    Ok(eq_detail(discriminant_quartic(&special_net()), double_conic(&t_ring())))
}

fn check_deformation(_: &ReferenceContext) -> Result<(bool, String)> {
    let d = deformation_discriminant_mod_u2(&special_deformation(), "u")?;
    let r = d.ring().clone();
    let quartics = (0..3).fold(r.zero(), |a, i| a + r.var_at(i).pow(4));
    let expected = double_conic(&r) + (quartics * r.var("u")).scale(&rational::int(8));
    Ok(eq_detail(d, expected))
}

fn check_vertex_at(x: i64) -> Result<(bool, String)> {
    let q = special_net().member(&[rational::int(1), rational::int(x), rational::int(x * x)]);
    let v = vertex(&q)?;
    let expected = [x * x * x, x * x, x, 1].map(rational::int).to_vec();
    Ok(eq_detail(show(&v), show(&expected)))
}

fn check_vertex_0(_: &ReferenceContext) -> Result<(bool, String)> {
    check_vertex_at(0)
}

fn check_vertex_1(_: &ReferenceContext) -> Result<(bool, String)> {
    check_vertex_at(1)
}

fn check_tangent_hyperplane(_: &ReferenceContext) -> Result<(bool, String)> {
    let r = Ring::new(&["w", "x"]);
    let (w, x) = (r.var("w"), r.var("x"));
    let q = special_family_in_x();
    let entries = q
        .entries
        .iter()
        .map(|row| row.iter().map(|p| p.embed(&r)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let q = crate::quadric::SymbolicQuadric::new(entries)?;
    let ok = is_tangent_hyperplane_symbolic(&q, &twisted_cubic_point(&r, &x), &w_hyperplane(&w, &x));
    Ok((ok, "vertex (x^3:x^2:x:1) on W_w, restriction of rank 1".into()))
}

fn check_fermat_smooth(_: &ReferenceContext) -> Result<(bool, String)> {
    let r = t_ring();
    let f = (0..3).fold(r.zero(), |a, i| a + r.var_at(i).pow(4));
    let ok = is_smooth_plane_quartic(&f)?;
    Ok((ok, format!("smooth = {ok}")))
}

fn check_special_base_locus(_: &ReferenceContext) -> Result<(bool, String)> {
    match base_locus_degree(&special_net()) {
        Err(Error::PositiveDimensionalBaseLocus) => Ok((true, "positive dimensional".into())),
        Ok(d) => Ok((false, format!("finite base locus of degree {d}"))),
        Err(e) => Err(e),
    }
}

fn check_closure(_: &ReferenceContext) -> Result<(bool, String)> {
    let data = reference_data();
    let got = octad_close(&data.free_parameters()?)?;
    Ok(eq_detail(show(&got), show(&data.derived_parameters()?)))
}

fn check_generators(ctx: &ReferenceContext) -> Result<(bool, String)> {
    let ring = ctx.ring()?;
    let r = ring.ring();
    let g = ring.generators();
    let u = |i: &str| r.var(i);
    let c = |s: &str| rational::parse_rational(s).expect("literal");
    let first = (u("u1") + u("u2") + u("u3") + u("u4")) * u("q1");
    let row2 = u("u2")
        * (u("q1") + u("q2").scale(&c("-1")) + u("q3").scale(&c("-3")) + u("q4").scale(&c("33/5")));
    let ok = g.contains(&first) && g.contains(&row2);
    Ok((ok, format!("{} generators", g.len())))
}

fn check_m_basis(ctx: &ReferenceContext) -> Result<(bool, String)> {
    let ring = ctx.ring()?;
    let names = ring.ring().names();
    let found: Vec<String> = ring
        .graded_basis(2, 2)
        .iter()
        .map(|m| m.display_with(names).to_string())
        .collect();
    Ok(eq_detail(found.join(", "), reference_data().m_basis.join(", ")))
}

fn check_slice_dimension(ctx: &ReferenceContext) -> Result<(bool, String)> {
    Ok(eq_detail(ctx.ring()?.graded_basis(2, 2).len(), 9))
}

fn check_tau1(ctx: &ReferenceContext) -> Result<(bool, String)> {
    Ok(eq_detail(ctx.frame()?.derivatives[0].clone(), reference_data().tau1()?))
}

fn check_f1(ctx: &ReferenceContext) -> Result<(bool, String)> {
    let expected = reference_data().f1()?;
    let found = &ctx.system()?.forms[0];
    let ok = *found == expected && found.num_terms() == 21;
    let detail = if ok {
        "all 21 coefficients match".to_string()
    } else {
        format!("expected {expected}, found {found}")
    };
    Ok((ok, detail))
}

fn check_origin_only(ctx: &ReferenceContext) -> Result<(bool, String)> {
    let c = ctx.certificate()?;
    Ok((
        c.origin_only(),
        format!("quotient dimension {:?}", c.quotient_dimension),
    ))
}

fn check_w1_radical(ctx: &ReferenceContext) -> Result<(bool, String)> {
    let c = ctx.certificate()?;
    let k = c.variable_powers.first().copied().flatten();
    Ok((k.is_some(), format!("w1^{} in the ideal", k.unwrap_or(0))))
}

fn check_e11_theta3(_: &ReferenceContext) -> Result<(bool, String)> {
    let t = WeightOneIvhs::e11();
    let got = t.derivation(&Wedge::monomial(&[0, 1, 2], rational::one()));
    let ok = got == Wedge::monomial(&[3, 1, 2], rational::one());
    Ok((ok, "theta3(e1^e2^e3) = f1^e2^e3".into()))
}

fn check_e11_q(_: &ReferenceContext) -> Result<(bool, String)> {
    let q = q_wedge(&WeightOneIvhs::e11())?;
    let ok = q.is_zero() && q.primitive.iter().all(|c| *c == rational::zero());
    Ok((ok, "Q(E11) = 0".into()))
}

fn check_primitive_dims(_: &ReferenceContext) -> Result<(bool, String)> {
    Ok(eq_detail(format!("{:?}", primitive_dimensions()), "[1, 6, 6, 1]".into()))
}

fn check_cubic_factor(_: &ReferenceContext) -> Result<(bool, String)> {
    Ok((cubic_factor_identity(), "difference is the zero polynomial".into()))
}

fn check_gamma(_: &ReferenceContext) -> Result<(bool, String)> {
    Ok((gamma_restriction_identity(), "difference is the zero polynomial".into()))
}

/// Every reference check, in report order.
pub fn fixtures() -> Vec<Fixture> {
    let f = |name, statement, check| Fixture { name, statement, check };
    vec![
        f("special_net_discriminant", "det(t1Q1+t2Q2+t3Q3) = (t1t3-t2^2)^2", check_special_discriminant as Check),
        f("deformation_mod_u2", "det mod u^2 = (t1t3-t2^2)^2 + 8(t1^4+t2^4+t3^4)u", check_deformation),
        f("vertex_at_x0", "vertex of Q(0) is (0:0:0:1)", check_vertex_0),
        f("vertex_at_x1", "vertex of Q(1) is (1:1:1:1)", check_vertex_1),
        f("tangent_hyperplane", "W_w is tangent to Z(Q(x)) identically in w, x", check_tangent_hyperplane),
        f("fermat_quartic_smooth", "t1^4+t2^4+t3^4 = 0 is smooth", check_fermat_smooth),
        f("special_base_locus", "base locus of the special net is a curve", check_special_base_locus),
        f("octad_closure", "(-1,3,4,-3,2,3) closes to (33/5,22,99)", check_closure),
        f("ideal_generators", "(u1+u2+u3+u4)q1 and u2(q1-q2-3q3+33/5q4) generate J", check_generators),
        f("slice_22_dimension", "the (2,2) slice has dimension 9", check_slice_dimension),
        f("slice_22_basis", "the (2,2) standard monomials are M1..M9 in order", check_m_basis),
        f("tau1", "tau1 = q2u2 + q4(-6u2 - 73/2u3 - 420u4)", check_tau1),
        f("f1_coefficients", "all 21 coefficients of f1", check_f1),
        f("origin_only", "f1 = ... = f9 = 0 only at w = 0", check_origin_only),
        f("w1_radical", "w1 lies in the radical of (f1..f9)", check_w1_radical),
        f("e11_theta3", "theta3(e1^e2^e3) = f1^e2^e3 for theta = E11", check_e11_theta3),
        f("e11_q_wedge", "Q(E11) = 0", check_e11_q),
        f("primitive_dimensions", "primitive pieces have dimensions (1,6,6,1)", check_primitive_dims),
        f("cubic_factor_identity", "branch form factors as -(l-x1)(l-x2)(l-x3)", check_cubic_factor),
        f("gamma_restriction_identity", "branch form on gamma is -(l-w)^2(l-x)", check_gamma),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub fixtures: Vec<FixtureResult>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn from_results(fixtures: Vec<FixtureResult>) -> Self {
        let passed = fixtures.iter().filter(|r| r.status == Status::Pass).count();
        VerifyReport {
            failed: fixtures.len() - passed,
            passed,
            fixtures,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// Runs every fixture in order on one thread.
pub fn verify_paper() -> VerifyReport {
    let ctx = ReferenceContext::new();
    VerifyReport::from_results(fixtures().iter().map(|f| f.run(&ctx)).collect())
}
