//! Helpers shared by the integration suites: seeded random inputs and a
//! Gröbner-free slice oracle.
#![allow(dead_code)]

use octad::groebner::monomials_of_multidegree;
use octad::jacobian::{ideal_generators, q_block, u_block, uq_ring};
use octad::linalg::RationalMatrix;
use octad::octad::{build_configuration, OctadConfig, OctadParameters};
use octad::rational::{int, rat, Rational};
use octad::{Monomial, Polynomial, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `p/q` with `|p| <= bound`, `1 <= q <= 4`.
pub fn small_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=4))
}

pub fn small_int(rng: &mut impl Rng, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

pub fn nonzero_int(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return int(v);
        }
    }
}

/// A random polynomial with up to `terms` terms of total degree `<= max_deg`.
pub fn random_poly(ring: &Ring, rng: &mut impl Rng, terms: usize, max_deg: u32) -> Polynomial {
    let n = ring.nvars();
    let mut p = ring.zero();
    for _ in 0..terms {
        let mut e = vec![0u32; n];
        let mut budget = rng.gen_range(0..=max_deg);
        while budget > 0 {
            e[rng.gen_range(0..n)] += 1;
            budget -= 1;
        }
        p = p + Polynomial::monomial(ring, Monomial::from_exponents(e), small_int(rng, 5));
    }
    p
}

/// A random element of one `(u, q)` bidegree with integer coefficients.
pub fn random_bihomogeneous(rng: &mut impl Rng, a: u32, b: u32) -> Polynomial {
    let ring = uq_ring();
    let mons = monomials_of_multidegree(8, &[u_block(), q_block()], &[a, b]);
    let mut p = ring.zero();
    for m in mons {
        if rng.gen_bool(0.4) {
            p = p + Polynomial::monomial(&ring, m, small_int(rng, 4));
        }
    }
    p
}

/// Free parameters drawn from small integers until they close to a
/// configuration in general position.
pub fn random_config(rng: &mut impl Rng) -> OctadConfig {
    loop {
        let free: [Rational; 6] = std::array::from_fn(|_| small_int(rng, 6));
        let Ok(params) = OctadParameters::close(free) else {
            continue;
        };
        if let Ok(config) = build_configuration(&params) {
            return config;
        }
    }
}

pub fn random_invertible(rng: &mut impl Rng, n: usize) -> RationalMatrix {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| small_int(rng, 3)).collect())
            .collect();
        let m = RationalMatrix::from_rows(rows).unwrap();
        if !num_traits::Zero::is_zero(&m.det()) {
            return m;
        }
    }
}

/// Dimension of the `(a, b)` slice of the quotient by the generators of
/// the configuration, computed as monomial count minus the rank of all
/// monomial multiples of the generators landing in that slice. No
/// Gröbner basis is involved.
pub fn macaulay_slice_dimension(config: &OctadConfig, a: u32, b: u32) -> usize {
    let blocks = [u_block(), q_block()];
    let target = monomials_of_multidegree(8, &blocks, &[a, b]);
    if a == 0 || b == 0 {
        return target.len();
    }
    let multipliers = monomials_of_multidegree(8, &blocks, &[a - 1, b - 1]);
    let mut rows = Vec::new();
    for g in ideal_generators(config) {
        for m in &multipliers {
            let p = g.mul_monomial(m, &int(1));
            rows.push(target.iter().map(|t| p.coeff(t)).collect());
        }
    }
    let rank = RationalMatrix::from_rows(rows).unwrap().rank();
    target.len() - rank
}
