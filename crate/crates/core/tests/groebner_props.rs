mod common;

use common::{random_poly, rng, small_int};
use octad::groebner::{
    buchberger, buchberger_with, origin_certificate, power_in_ideal, radical_membership,
    radical_membership_rabinowitsch, s_polynomial, GroebnerBasis, GroebnerConfig,
};
use octad::rational::int;
use octad::{Error, MonomialOrder, Polynomial, Ring};
use rand::seq::SliceRandom;
use rand::Rng;

fn ring3() -> Ring {
    Ring::new(&["x", "y", "z"])
}

fn random_ideal(rng: &mut impl Rng) -> Vec<Polynomial> {
    let r = ring3();
    let n = rng.gen_range(2..=3);
    (0..n)
        .map(|_| {
            let terms = rng.gen_range(2..=4);
            random_poly(&r, rng, terms, 3)
        })
        .filter(|p| !p.is_zero())
        .collect()
}

/// Bases for random small ideals; instances hitting the step cap are
/// skipped, but at least `want` must complete.
fn random_bases(seed: u64, want: usize) -> Vec<(Vec<Polynomial>, GroebnerBasis)> {
    let mut rng = rng(seed);
    let order = MonomialOrder::grevlex_natural(3);
    let config = GroebnerConfig {
        max_steps: Some(2000),
    };
    let mut out = Vec::new();
    for _ in 0..want * 2 {
        let gens = random_ideal(&mut rng);
        if gens.is_empty() {
            continue;
        }
        match buchberger_with(&ring3(), &gens, &order, &config) {
            Ok(gb) => out.push((gens, gb)),
            Err(Error::StepLimitExceeded { .. }) => continue,
            Err(e) => panic!("{e}"),
        }
        if out.len() == want {
            break;
        }
    }
    assert_eq!(out.len(), want, "too many random ideals hit the step cap");
    out
}

#[test]
fn s_polynomials_reduce_to_zero() {
    for (gens, gb) in random_bases(1, 24) {
        let g = gb.generators();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let s = s_polynomial(&g[i], &g[j], gb.order());
                assert!(gb.normal_form(&s).is_zero(), "S({i},{j}) for {gens:?}");
            }
        }
        for f in &gens {
            assert!(gb.contains(f));
        }
        assert!(gb.is_reduced());
    }
}

#[test]
fn basis_generates_the_same_ideal() {
    // every basis element is a combination of the inputs: checked by
    // reducing against a basis of the inputs computed in another order
    for (gens, gb) in random_bases(2, 20) {
        let lex_like = MonomialOrder::grevlex(vec![2, 1, 0]);
        let other = buchberger(&ring3(), &gens, &lex_like).unwrap();
        for g in gb.generators() {
            assert!(other.contains(g));
        }
        for g in other.generators() {
            assert!(gb.contains(g));
        }
    }
}

#[test]
fn reduced_basis_ignores_generator_order() {
    let mut r = rng(3);
    let order = MonomialOrder::grevlex_natural(3);
    for (gens, gb) in random_bases(3, 20) {
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut r);
        let scaled: Vec<Polynomial> = shuffled
            .iter()
            .map(|g| g.scale(&common::nonzero_int(&mut r, 5)))
            .collect();
        let again = buchberger(&ring3(), &scaled, &order).unwrap();
        let key = |b: &GroebnerBasis| {
            let mut v: Vec<String> = b.generators().iter().map(|p| p.to_string()).collect();
            v.sort();
            v
        };
        assert_eq!(key(&gb), key(&again), "{gens:?}");
    }
}

#[test]
fn normal_form_is_a_linear_projection() {
    let mut r = rng(4);
    for (_, gb) in random_bases(4, 20) {
        let f = random_poly(&ring3(), &mut r, 5, 4);
        let g = random_poly(&ring3(), &mut r, 5, 4);
        let c = small_int(&mut r, 7);
        let nf = |p: &Polynomial| gb.normal_form(p);
        assert_eq!(nf(&nf(&f)), nf(&f));
        assert_eq!(nf(&(&f + &g.scale(&c))), nf(&f) + nf(&g).scale(&c));
        assert_eq!(nf(&(&f * &g)), nf(&(&nf(&f) * &nf(&g))));
        // f - NF(f) lies in the ideal
        assert!(gb.contains(&(&f - &nf(&f))));
        for (m, _) in nf(&f).terms() {
            assert!(gb.is_standard(m));
        }
    }
}

/// Grid ideals `(Π (x - a_i), Π (y - b_j), Π (z - c_k))`: the quotient has
/// one dimension per grid point, and a polynomial vanishes on the grid
/// exactly when it lies in the radical.
#[test]
fn grid_ideals() {
    let r = ring3();
    let mut g = rng(5);
    for _ in 0..20 {
        let degs: Vec<usize> = (0..3).map(|_| g.gen_range(1..=3)).collect();
        let mut roots = Vec::new();
        let mut gens = Vec::new();
        for (v, &d) in degs.iter().enumerate() {
            let mut vals: Vec<i64> = Vec::new();
            while vals.len() < d {
                let a = g.gen_range(-4..=4);
                if !vals.contains(&a) {
                    vals.push(a);
                }
            }
            let p = vals
                .iter()
                .fold(r.one(), |acc, &a| acc * (r.var_at(v) - r.constant(int(a))));
            gens.push(p);
            roots.push(vals);
        }
        let gb = buchberger(&r, &gens, &MonomialOrder::grevlex_natural(3)).unwrap();
        assert_eq!(gb.quotient_dimension(), Some(degs.iter().product()));

        let vanishing = (0..3).fold(r.one(), |acc, v| acc * (r.var_at(v) - r.constant(int(roots[v][0]))));
        let squared: Vec<Polynomial> = gens.iter().map(|p| p.pow(2)).collect();
        assert_eq!(radical_membership(&vanishing, &squared).unwrap(), degs.contains(&1));
        let lin = r.var_at(0) - r.constant(int(roots[0][0]));
        let expect = degs[0] == 1;
        assert_eq!(radical_membership(&lin, &squared).unwrap(), expect);
        assert_eq!(radical_membership_rabinowitsch(&lin, &squared).unwrap(), expect);
        if expect {
            let sq_gb = buchberger(&r, &squared, &MonomialOrder::grevlex_natural(3)).unwrap();
            assert_eq!(power_in_ideal(&lin, &sq_gb, 8), Some(2));
        }
    }
}

#[test]
fn radical_routes_agree_on_random_ideals() {
    let mut r = rng(6);
    let ring = ring3();
    for (gens, gb) in random_bases(6, 20) {
        if gb.quotient_dimension().is_none() {
            continue;
        }
        let f = random_poly(&ring, &mut r, 2, 1);
        assert_eq!(
            radical_membership(&f, &gens).unwrap(),
            radical_membership_rabinowitsch(&f, &gens).unwrap(),
            "{f} over {gens:?}"
        );
    }
}

#[test]
fn homogeneous_certificates() {
    let r = ring3();
    let (x, y, z) = (r.var_at(0), r.var_at(1), r.var_at(2));
    // complete intersection of three general quadrics: origin only
    let gens = vec![&x * &x + &y * &z, &y * &y - &x * &z, &z * &z + &x * &y.scale(&int(2))];
    let cert = origin_certificate(&gens).unwrap();
    assert!(cert.origin_only());
    assert_eq!(cert.quotient_dimension, Some(8));
    // two quadrics share a line through the origin
    let cert = origin_certificate(&gens[..2]).unwrap();
    assert!(!cert.origin_only());
    assert_eq!(cert.quotient_dimension, None);
}
