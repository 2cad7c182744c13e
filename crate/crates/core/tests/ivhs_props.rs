mod common;

use common::{random_config, random_invertible, rng, small_rational};
use octad::dual::Dual;
use octad::groebner::origin_certificate;
use octad::ivhs::{
    closure_partials, quadratic_forms, tangent_vectors, tau_span_rank, theta, theta_symbolic, w_ring,
    QuadraticFormSystem, TangentFrame,
};
use octad::jacobian::{uq_ring, DoubleCoverRing};
use octad::octad::{
    build_configuration, octad_close_dual, reference_free_parameters, OctadConfig, OctadParameters,
};
use octad::rational::{int, Rational};
use octad::Polynomial;
use rand::Rng;

struct Setup {
    ring: DoubleCoverRing,
    frame: TangentFrame,
    system: QuadraticFormSystem,
}

fn setup(config: &OctadConfig) -> Setup {
    let ring = DoubleCoverRing::new(config).unwrap();
    let frame = tangent_vectors(&ring).unwrap();
    let system = quadratic_forms(&ring, &frame);
    Setup { ring, frame, system }
}

fn reference() -> Setup {
    let params = OctadParameters::close(reference_free_parameters()).unwrap();
    setup(&build_configuration(&params).unwrap())
}

fn random_w(r: &mut impl Rng) -> Vec<Rational> {
    (0..6).map(|_| small_rational(r, 9)).collect()
}

fn eval_forms(system: &QuadraticFormSystem, w: &[Rational]) -> Vec<Rational> {
    system.forms.iter().map(|f| f.eval::<Rational>(w)).collect()
}

/// `F = Σ_j q_j (Σ_i b_{i,4+j} u_i)` with the configuration entries seeded
/// as dual numbers along free parameter `k`; the ε part is `∂F/∂s_k`.
fn dual_derivative(params: &OctadParameters, k: usize) -> Polynomial {
    let free: [Dual<Rational>; 6] = std::array::from_fn(|i| {
        if i == k {
            Dual::variable(params.free[i].clone())
        } else {
            Dual::constant(params.free[i].clone())
        }
    });
    let derived = octad_close_dual(&free).unwrap();
    let one = Dual::constant(int(1));
    // columns 5..8 of the normalized configuration
    let column = |col: usize, row: usize| -> Dual<Rational> {
        match (col, row) {
            (0, _) | (_, 0) => one.clone(),
            (c, r) if c < 3 => free[(c - 1) * 3 + (r - 1)].clone(),
            (_, r) => derived[r - 1].clone(),
        }
    };
    let ring = uq_ring();
    let mut f = ring.zero();
    for j in 0..4 {
        for i in 0..4 {
            let c = column(j, i).eps;
            f = f + (ring.var_at(i) * ring.var_at(4 + j)).scale(&c);
        }
    }
    f
}

#[test]
fn closure_derivatives_match_dual_numbers() {
    let mut r = rng(21);
    for _ in 0..20 {
        let config = random_config(&mut r);
        let partials = closure_partials(&config.params).unwrap();
        for (k, row) in partials.iter().enumerate() {
            let free: [Dual<Rational>; 6] = std::array::from_fn(|i| {
                let v = config.params.free[i].clone();
                if i == k {
                    Dual::variable(v)
                } else {
                    Dual::constant(v)
                }
            });
            let d = octad_close_dual(&free).unwrap();
            for i in 0..3 {
                assert_eq!(d[i].re, config.params.derived[i]);
                assert_eq!(d[i].eps, row[i]);
            }
        }
    }
}

#[test]
fn tangent_derivatives_match_dual_numbers() {
    let mut r = rng(22);
    let mut configs = vec![reference().ring.config().clone()];
    configs.extend((0..3).map(|_| random_config(&mut r)));
    for config in configs {
        let s = setup(&config);
        for k in 0..6 {
            assert_eq!(s.frame.derivatives[k], dual_derivative(&config.params, k), "k = {k}");
        }
    }
}

#[test]
fn forms_are_homogeneous_quadrics() {
    let s = reference();
    assert_eq!(s.system.forms.len(), 9);
    for f in &s.system.forms {
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), Some(2));
    }
}

#[test]
fn forms_evaluate_to_the_square_of_theta() {
    let s = reference();
    let mut r = rng(23);
    for _ in 0..20 {
        let w = random_w(&mut r);
        let t = theta(&s.frame, &w);
        let sq = s.ring.multiply(&t, &t);
        assert_eq!(eval_forms(&s.system, &w), s.ring.coordinates(&sq));
        // symbolic coordinates of θ agree with evaluation
        let sym: Vec<Rational> = theta_symbolic(&s.ring, &s.frame).iter().map(|c| c.eval::<Rational>(&w)).collect();
        assert_eq!(sym, s.ring.coordinates(&t));
    }
}

#[test]
fn forms_scale_quadratically() {
    let s = reference();
    let mut r = rng(24);
    for _ in 0..20 {
        let w = random_w(&mut r);
        let c = small_rational(&mut r, 9);
        let cw: Vec<Rational> = w.iter().map(|x| x * &c).collect();
        let expected: Vec<Rational> = eval_forms(&s.system, &w).iter().map(|x| x * &c * &c).collect();
        assert_eq!(eval_forms(&s.system, &cw), expected);
    }
}

#[test]
fn polarization_is_bilinear() {
    let s = reference();
    let mut r = rng(25);
    for _ in 0..20 {
        let (w, v) = (random_w(&mut r), random_w(&mut r));
        let sum: Vec<Rational> = w.iter().zip(&v).map(|(a, b)| a + b).collect();
        let (fs, fw, fv) = (eval_forms(&s.system, &sum), eval_forms(&s.system, &w), eval_forms(&s.system, &v));
        let cross = s.ring.multiply(&theta(&s.frame, &w), &theta(&s.frame, &v));
        let two = int(2);
        let expected: Vec<Rational> = s.ring.coordinates(&cross).iter().map(|x| x * &two).collect();
        let polar: Vec<Rational> = (0..9).map(|i| &fs[i] - &fw[i] - &fv[i]).collect();
        assert_eq!(polar, expected);
    }
}

#[test]
fn tau_span_has_rank_six() {
    let mut r = rng(26);
    assert_eq!(tau_span_rank(&reference().ring, &reference().frame), 6);
    for _ in 0..3 {
        let s = setup(&random_config(&mut r));
        assert_eq!(tau_span_rank(&s.ring, &s.frame), 6);
    }
}

#[test]
fn origin_only_survives_linear_changes_of_w() {
    let s = reference();
    let wr = w_ring();
    let mut r = rng(27);
    for _ in 0..2 {
        let a = random_invertible(&mut r, 6);
        let images: Vec<(usize, Polynomial)> = (0..6)
            .map(|i| {
                let lin = (0..6).fold(wr.zero(), |acc, j| acc + wr.var_at(j).scale(&a[(i, j)]));
                (i, lin)
            })
            .collect();
        let changed: Vec<Polynomial> = s.system.forms.iter().map(|f| f.substitute(&images).unwrap()).collect();
        let cert = origin_certificate(&changed).unwrap();
        assert!(cert.origin_only());
        assert_eq!(cert.quotient_dimension, Some(64));
    }
}

#[test]
fn origin_only_at_random_configs() {
    let mut r = rng(28);
    for _ in 0..2 {
        let s = setup(&random_config(&mut r));
        assert!(origin_certificate(&s.system.forms).unwrap().origin_only());
    }
}
