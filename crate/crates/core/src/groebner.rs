//! Buchberger's algorithm under grevlex, normal forms, standard
//! monomials of graded slices, and radical membership.
//!
//! The engine works on terms sorted from largest to smallest. Pairs are
//! selected by the normal strategy (smallest lcm first, ties broken by
//! pair index) and pruned with the coprime and chain criteria, so the
//! output is deterministic for a fixed input and order.

use std::collections::HashSet;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring, TermRecord};
use crate::rational::Rational;

/// Environment variable capping the number of S-pair reductions.
pub const STEP_LIMIT_ENV: &str = "OCTAD_GB_MAX_STEPS";

#[derive(Clone, Debug, Default)]
pub struct GroebnerConfig {
    pub max_steps: Option<usize>,
}

impl GroebnerConfig {
    /// Reads the step cap from [`STEP_LIMIT_ENV`]; unset or unparsable means no cap.
    pub fn from_env() -> Self {
        GroebnerConfig {
            max_steps: std::env::var(STEP_LIMIT_ENV)
                .ok()
                .and_then(|s| s.trim().parse().ok()),
        }
    }
}

/// Terms sorted in strictly decreasing order.
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        SortedPoly {
            terms: p
                .sorted_terms(order)
                .into_iter()
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = c.recip();
                for (_, a) in &mut self.terms {
                    *a *= &inv;
                }
            }
        }
    }
}

/// `a - c·m·b` where `a` and `b` are sorted decreasingly.
fn sub_scaled(
    a: &[(Monomial, Rational)],
    b: &[(Monomial, Rational)],
    m: &Monomial,
    c: &Rational,
    order: &MonomialOrder,
) -> Vec<(Monomial, Rational)> {
    use std::cmp::Ordering::*;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut bj: Option<(Monomial, Rational)> = b.first().map(|(n, d)| (n.mul(m), d * c));
    while i < a.len() || bj.is_some() {
        let take_b = match (&bj, a.get(i)) {
            (None, _) => false,
            (Some(_), None) => true,
            (Some((bm, _)), Some((am, _))) => match order.cmp(am, bm) {
                Greater => false,
                Less => true,
                Equal => {
                    let (_, bc) = bj.take().unwrap();
                    let s = &a[i].1 - bc;
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                    bj = b.get(j).map(|(n, d)| (n.mul(m), d * c));
                    continue;
                }
            },
        };
        if take_b {
            let (bm, bc) = bj.take().unwrap();
            out.push((bm, -bc));
            j += 1;
            bj = b.get(j).map(|(n, d)| (n.mul(m), d * c));
        } else {
            out.push(a[i].clone());
            i += 1;
        }
    }
    out
}

/// Full reduction of `f` by monic `basis` elements.
fn reduce(f: &SortedPoly, basis: &[&SortedPoly], order: &MonomialOrder) -> SortedPoly {
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    let mut p = f.terms.clone();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let q = g.lm().quotient_of(m);
                let c = c.clone();
                // the leading terms cancel exactly; skip both heads
                p = sub_scaled(&p[start + 1..], &g.terms[1..], &q, &c, order);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    SortedPoly { terms: rem }
}

fn s_poly_sorted(f: &SortedPoly, g: &SortedPoly, order: &MonomialOrder) -> SortedPoly {
    let l = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&l);
    let mg = g.lm().quotient_of(&l);
    let cf = f.terms[0].1.recip();
    let cg = g.terms[0].1.recip();
    let a: Vec<_> = f.terms[1..]
        .iter()
        .map(|(m, c)| (m.mul(&mf), c * &cf))
        .collect();
    SortedPoly {
        terms: sub_scaled(&a, &g.terms[1..], &mg, &cg, order),
    }
}

/// The S-polynomial of `f` and `g` under `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let a = SortedPoly::from_poly(f, order);
    let b = SortedPoly::from_poly(g, order);
    if a.is_zero() || b.is_zero() {
        return f.ring().zero();
    }
    s_poly_sorted(&a, &b, order).to_poly(f.ring())
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    reduced: bool,
    sorted: Vec<SortedPoly>,
}

/// Serializable view: generators (largest term first) plus the order.
#[derive(Clone, Debug, Serialize)]
pub struct GroebnerBasisRecord {
    pub variables: Vec<String>,
    /// Variable names from highest to lowest.
    pub precedence: Vec<String>,
    pub order: &'static str,
    pub generators: Vec<Vec<TermRecord>>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.sorted.iter().any(|g| g.lm().is_one())
    }

    /// Remainder of `f` on division by the basis; no term of the result
    /// is divisible by a leading monomial.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.ring(), &self.ring, "polynomial not in the basis ring");
        let refs: Vec<&SortedPoly> = self.sorted.iter().collect();
        reduce(&SortedPoly::from_poly(f, &self.order), &refs, &self.order).to_poly(&self.ring)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.sorted.iter().any(|g| g.lm().divides(m))
    }

    /// Standard monomials whose degree in each block of variables equals
    /// the matching entry of `degrees`; variables outside every block have
    /// exponent zero. Sorted from largest to smallest.
    pub fn standard_monomials(&self, blocks: &[Vec<usize>], degrees: &[u32]) -> Vec<Monomial> {
        assert_eq!(blocks.len(), degrees.len(), "one degree per block");
        let mut out: Vec<Monomial> = monomials_of_multidegree(self.ring.nvars(), blocks, degrees)
            .into_iter()
            .filter(|m| self.is_standard(m))
            .collect();
        out.sort_by(|a, b| self.order.cmp(b, a));
        out
    }

    /// Number of standard monomials when the quotient is finite dimensional
    /// (every variable has a pure power among the leading monomials).
    pub fn quotient_dimension(&self) -> Option<usize> {
        if self.is_unit_ideal() {
            return Some(0);
        }
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        let mut bounds = Vec::with_capacity(n);
        for v in 0..n {
            let b = lms
                .iter()
                .filter(|m| (0..n).all(|k| k == v || m.exponent(k) == 0) && m.exponent(v) > 0)
                .map(|m| m.exponent(v))
                .min()?;
            bounds.push(b);
        }
        let mut count = 0usize;
        let mut e = vec![0u32; n];
        loop {
            let m = Monomial::from_exponents(e.clone());
            if self.is_standard(&m) {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Some(count);
                }
                e[k] += 1;
                if e[k] < bounds[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }

    pub fn to_record(&self) -> GroebnerBasisRecord {
        let names = self.ring.names();
        GroebnerBasisRecord {
            variables: names.to_vec(),
            precedence: self
                .order
                .precedence()
                .iter()
                .map(|&i| names[i].clone())
                .collect(),
            order: "grevlex",
            generators: self
                .sorted
                .iter()
                .map(|g| {
                    g.terms
                        .iter()
                        .map(|(m, c)| TermRecord {
                            exponents: m.exponents().to_vec(),
                            coeff: c.clone(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// All monomials with the prescribed degree in each block of variables.
pub fn monomials_of_multidegree(nvars: usize, blocks: &[Vec<usize>], degrees: &[u32]) -> Vec<Monomial> {
    let mut acc = vec![vec![0u32; nvars]];
    for (block, &d) in blocks.iter().zip(degrees) {
        let mut next = Vec::new();
        for base in &acc {
            fill_block(block, d, 0, &mut base.clone(), &mut next);
        }
        acc = next;
    }
    acc.into_iter().map(Monomial::from_exponents).collect()
}

fn fill_block(block: &[usize], remaining: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == block.len() {
        cur[block[pos]] = remaining;
        out.push(cur.clone());
        cur[block[pos]] = 0;
        return;
    }
    if block.is_empty() {
        if remaining == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for e in 0..=remaining {
        cur[block[pos]] = e;
        fill_block(block, remaining - e, pos + 1, cur, out);
    }
    cur[block[pos]] = 0;
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens`, with the step
/// cap read from the environment.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ring, gens, order, &GroebnerConfig::from_env())
}

pub fn buchberger_with(
    ring: &Ring,
    gens: &[Polynomial],
    order: &MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis> {
    assert_eq!(order.nvars(), ring.nvars(), "order arity must match ring");
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.names().join(","),
                right: g.ring().names().join(","),
            });
        }
    }

    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    // pairs popped from the queue, whether reduced or skipped by a criterion
    let mut treated: HashSet<(usize, usize)> = HashSet::new();
    let mut unit = false;

    let add = |h: SortedPoly,
                   basis: &mut Vec<SortedPoly>,
                   active: &mut Vec<bool>,
                   pairs: &mut Vec<Pair>| {
        let k = basis.len();
        for i in 0..k {
            if !active[i] {
                continue;
            }
            pairs.push(Pair {
                i,
                j: k,
                lcm: basis[i].lm().lcm(h.lm()),
            });
        }
        // elements whose leading monomial is now redundant stay in the
        // basis for reduction but spawn no further pairs
        for i in 0..k {
            if active[i] && h.lm().divides(basis[i].lm()) && h.lm() != basis[i].lm() {
                active[i] = false;
            }
        }
        basis.push(h);
        active.push(true);
    };

    // inter-reduce the input first: cheap and keeps the pair set small
    let mut inputs: Vec<SortedPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut s = SortedPoly::from_poly(g, order);
            s.make_monic();
            s
        })
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for g in inputs {
        let refs: Vec<&SortedPoly> = basis.iter().collect();
        let mut h = reduce(&g, &refs, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            unit = true;
            break;
        }
        add(h, &mut basis, &mut active, &mut pairs);
    }

    let mut steps = 0usize;
    while !unit && !pairs.is_empty() {
        let idx = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then((pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
            })
            .unwrap();
        let Pair { i, j, lcm } = pairs.swap_remove(idx);
        treated.insert((i, j));

        if basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && treated.contains(&(i.min(k), i.max(k)))
                && treated.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        steps += 1;
        if let Some(limit) = config.max_steps {
            if steps > limit {
                return Err(Error::StepLimitExceeded { limit });
            }
        }
        let s = s_poly_sorted(&basis[i], &basis[j], order);
        let refs: Vec<&SortedPoly> = basis.iter().collect();
        let mut h = reduce(&s, &refs, order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            unit = true;
            break;
        }
        add(h, &mut basis, &mut active, &mut pairs);
    }

    let sorted = if unit {
        vec![SortedPoly {
            terms: vec![(Monomial::one(ring.nvars()), Rational::one())],
        }]
    } else {
        interreduce(basis, order)
    };
    Ok(GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        generators: sorted.iter().map(|g| g.to_poly(ring)).collect(),
        reduced: true,
        sorted,
    })
}

/// Minimalizes and fully reduces a Gröbner basis; output sorted by
/// leading monomial, largest first.
fn interreduce(basis: Vec<SortedPoly>, order: &MonomialOrder) -> Vec<SortedPoly> {
    let mut keep: Vec<SortedPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && h.lm().divides(g.lm()) && (h.lm() != g.lm() || k < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<&SortedPoly> = keep
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, g)| g)
            .collect();
        let head = keep[idx].terms[0].clone();
        let tail = SortedPoly {
            terms: keep[idx].terms[1..].to_vec(),
        };
        let mut r = reduce(&tail, &others, order);
        r.terms.insert(0, head);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    out
}

/// Smallest `k <= max_power` with `f^k` in the ideal of `gb`.
pub fn power_in_ideal(f: &Polynomial, gb: &GroebnerBasis, max_power: usize) -> Option<usize> {
    let mut p = gb.normal_form(f);
    for k in 1..=max_power {
        if p.is_zero() {
            return Some(k);
        }
        p = gb.normal_form(&(&p * f));
    }
    None
}

/// Decides radical membership from a basis of the ideal.
///
/// With a finite dimensional quotient `A`, `f` vanishes on the variety iff
/// it is nilpotent in `A`, and then `f^k ∈ I` for some `k <= dim A`. With
/// an infinite quotient only a found power is conclusive; `None` means
/// undecided.
fn radical_by_powers(f: &Polynomial, gb: &GroebnerBasis) -> Option<bool> {
    if gb.is_unit_ideal() {
        return Some(true);
    }
    match gb.quotient_dimension() {
        Some(dim) => Some(power_in_ideal(f, gb, dim.max(1)).is_some()),
        None => power_in_ideal(f, gb, 8).map(|_| true),
    }
}

/// Whether `f` vanishes on the common zero set of `gens` over an
/// algebraically closed field.
///
/// Decided by nilpotency in the quotient when it is finite dimensional,
/// and otherwise by [`radical_membership_rabinowitsch`].
pub fn radical_membership(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    radical_membership_with(f, gens, &GroebnerConfig::from_env())
}

pub fn radical_membership_with(f: &Polynomial, gens: &[Polynomial], config: &GroebnerConfig) -> Result<bool> {
    check_rings(f.ring(), gens)?;
    let order = MonomialOrder::grevlex_natural(f.ring().nvars());
    let gb = buchberger_with(f.ring(), gens, &order, config)?;
    match radical_by_powers(f, &gb) {
        Some(b) => Ok(b),
        None => radical_membership_rabinowitsch_with(f, gens, config),
    }
}

fn check_rings(ring: &Ring, gens: &[Polynomial]) -> Result<()> {
    match gens.iter().find(|g| g.ring() != ring) {
        Some(g) => Err(Error::RingMismatch {
            left: ring.names().join(","),
            right: g.ring().names().join(","),
        }),
        None => Ok(()),
    }
}

/// Radical membership via `1 ∈ (gens, 1 - z·f)` in one extra variable `z`.
pub fn radical_membership_rabinowitsch(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    radical_membership_rabinowitsch_with(f, gens, &GroebnerConfig::from_env())
}

pub fn radical_membership_rabinowitsch_with(
    f: &Polynomial,
    gens: &[Polynomial],
    config: &GroebnerConfig,
) -> Result<bool> {
    let ring = f.ring();
    check_rings(ring, gens)?;
    let zname = ring.fresh_name("z");
    let ext = ring.extended(&zname);
    let z = ext.var(&zname);
    let mut ext_gens = Vec::with_capacity(gens.len() + 1);
    for g in gens {
        ext_gens.push(g.embed(&ext)?);
    }
    ext_gens.push(ext.one() - &z * &f.embed(&ext)?);
    let order = MonomialOrder::grevlex_natural(ring.nvars()).extended_lowest();
    let gb = buchberger_with(&ext, &ext_gens, &order, config)?;
    Ok(gb.is_unit_ideal())
}

/// Per-variable radical membership: entry `i` is `Some(k)` when
/// `x_i^k ∈ I`, `None` when `x_i` is not in the radical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OriginCertificate {
    pub quotient_dimension: Option<usize>,
    pub variable_powers: Vec<Option<usize>>,
}

impl OriginCertificate {
    pub fn origin_only(&self) -> bool {
        !self.variable_powers.is_empty() && self.variable_powers.iter().all(Option::is_some)
    }
}

/// Certifies that the only common zero of `gens` is the origin by
/// exhibiting a power of every variable inside the ideal. One basis is
/// computed and shared by all variables. If the quotient is infinite
/// dimensional the variety is positive dimensional and no powers are
/// searched for.
pub fn origin_certificate(gens: &[Polynomial]) -> Result<OriginCertificate> {
    origin_certificate_with(gens, &GroebnerConfig::from_env())
}

pub fn origin_certificate_with(gens: &[Polynomial], config: &GroebnerConfig) -> Result<OriginCertificate> {
    let Some(first) = gens.first() else {
        return Ok(OriginCertificate {
            quotient_dimension: None,
            variable_powers: Vec::new(),
        });
    };
    let ring = first.ring().clone();
    check_rings(&ring, gens)?;
    let gb = buchberger_with(&ring, gens, &MonomialOrder::grevlex_natural(ring.nvars()), config)?;
    let dim = gb.quotient_dimension();
    let variable_powers = (0..ring.nvars())
        .map(|v| dim.and_then(|d| power_in_ideal(&ring.var_at(v), &gb, d.max(1))))
        .collect();
    Ok(OriginCertificate {
        quotient_dimension: dim,
        variable_powers,
    })
}

/// True iff the only common zero of `gens` is the origin: every variable
/// lies in the radical of the ideal.
pub fn variety_is_origin_only(gens: &[Polynomial]) -> Result<bool> {
    variety_is_origin_only_with(gens, &GroebnerConfig::from_env())
}

pub fn variety_is_origin_only_with(gens: &[Polynomial], config: &GroebnerConfig) -> Result<bool> {
    Ok(origin_certificate_with(gens, config)?.origin_only())
}
