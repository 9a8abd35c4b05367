#![allow(dead_code)]

use folia_core::germ::{self, CurveGerm, FoliationGerm};
use folia_core::localalg::{self, MonomialOrder};
use folia_core::poly::{parse_poly, Poly};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn p(s: &str) -> Poly {
    parse_poly(s, 2).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polynomial with terms of degree `lo..=hi`, each present with
/// probability `density`, coefficients in `-3..=3`.
pub fn random_poly(rng: &mut impl Rng, lo: u32, hi: u32, density: f64) -> Poly {
    let mut terms = Vec::new();
    for d in lo..=hi {
        for i in 0..=d {
            if rng.gen_bool(density) {
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    terms.push((c, [i, d - i, 0]));
                }
            }
        }
    }
    Poly::from_int_terms(2, &terms)
}

/// Random homogeneous form of degree `d` with nonzero coefficients.
pub fn random_form(rng: &mut impl Rng, d: u32) -> Poly {
    let terms: Vec<(i64, [u32; 3])> = (0..=d)
        .map(|i| {
            let c = loop {
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    break c;
                }
            };
            (c, [i, d - i, 0])
        })
        .collect();
    Poly::from_int_terms(2, &terms)
}

fn local_mu(gens: &[Poly]) -> Option<usize> {
    localalg::standard_basis(gens, MonomialOrder::Local)
        .ok()?
        .quotient_dim()
        .finite()
}

/// Singular germs with `P, Q` of degree at most 5, finite colength and
/// no common factor.
pub fn random_germs(seed: u64, count: usize) -> Vec<FoliationGerm> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let lp = rng.gen_range(1..=3);
        let lq = rng.gen_range(1..=3);
        let a = random_poly(&mut rng, lp, 5, 0.35);
        let b = random_poly(&mut rng, lq, 5, 0.35);
        if a.is_zero() || b.is_zero() || local_mu(&[a.clone(), b.clone()]).is_none() {
            continue;
        }
        if let Ok(g) = FoliationGerm::new(a, b) {
            out.push(g);
        }
    }
    out
}

/// Squarefree `f` of degree at most 5 with a singular point at the origin.
pub fn random_singular_curves(seed: u64, count: usize) -> Vec<CurveGerm> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let order = rng.gen_range(2..=3);
        let f = random_poly(&mut rng, order, 5, 0.4);
        if f.is_zero()
            || !f.vanishes_at_origin()
            || f.order().unwrap_or(0) < 2
            || !f.is_squarefree()
        {
            continue;
        }
        let Ok(c) = CurveGerm::new_reduced(f) else {
            continue;
        };
        if germ::milnor_curve(&c).is_ok() {
            out.push(c);
        }
    }
    out
}

/// Reduced curves whose tangent cone has a repeated line.
pub fn random_non_semihomogeneous(seed: u64, count: usize) -> Vec<CurveGerm> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let line = Poly::from_int_terms(
            2,
            &[
                (rng.gen_range(1..=2), [1, 0, 0]),
                (rng.gen_range(-2..=2), [0, 1, 0]),
            ],
        );
        let rest_degree = rng.gen_range(0..=2);
        let rest = random_form(&mut rng, rest_degree);
        let cone = &line.pow(2) * &rest;
        let nu = cone.degree().unwrap();
        let f = &cone + &random_poly(&mut rng, nu + 1, nu + 3, 0.5);
        if !f.is_squarefree() {
            continue;
        }
        let Ok(c) = CurveGerm::new_reduced(f) else {
            continue;
        };
        if germ::milnor_curve(&c).is_ok() {
            out.push(c);
        }
    }
    out
}
