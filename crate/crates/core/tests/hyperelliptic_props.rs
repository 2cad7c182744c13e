mod common;

use common::{rng, small_rational};
use octad::hyperelliptic::{
    branch_pullback_check, branch_pullback_sides, cubic_factor_difference, gamma_restriction_difference,
    BranchData,
};
use octad::rational::{int, Rational};
use rand::Rng;

fn random_branch_data(r: &mut impl Rng) -> BranchData {
    loop {
        let lambdas: Vec<Rational> = (0..8).map(|_| small_rational(r, 12)).collect();
        if let Ok(d) = BranchData::new(lambdas) {
            return d;
        }
    }
}

#[test]
fn pullback_for_random_branch_points() {
    let mut r = rng(51);
    for _ in 0..10 {
        let data = random_branch_data(&mut r);
        assert!(branch_pullback_check(&data));
        // both sides agree numerically with a direct product over the roots
        let (lhs, rhs) = branch_pullback_sides(&data);
        let x: Vec<Rational> = (0..3).map(|_| small_rational(&mut r, 7)).collect();
        let direct: Rational = data
            .lambdas()
            .iter()
            .flat_map(|l| x.iter().map(move |xj| xj - l))
            .product();
        assert_eq!(lhs.eval::<Rational>(&x), direct);
        assert_eq!(rhs.eval::<Rational>(&x), direct);
        assert_eq!(lhs.total_degree(), Some(24));
    }
}

#[test]
fn identities_are_empty_polynomials() {
    assert_eq!(cubic_factor_difference().num_terms(), 0);
    assert_eq!(gamma_restriction_difference().num_terms(), 0);
}

#[test]
fn repeated_branch_points_rejected() {
    let mut v: Vec<Rational> = (1..=8).map(int).collect();
    v[3] = int(2);
    assert!(BranchData::new(v).is_err());
    assert!(BranchData::new((1..=9).map(int).collect()).is_err());
}
