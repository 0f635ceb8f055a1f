//! Shared helpers for the integration tests: seeded random presentations and
//! brute-force linear algebra that does not go through the library.
#![allow(dead_code)]

use std::collections::HashMap;

use cohsheaf::groebner::{FreeElement, FreeModule};
use cohsheaf::grmod::GradedModule;
use cohsheaf::ring::{GradedPolynomial, Monomial, PolyRing};
use rand::Rng;

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Exponent vectors of degree `deg` in `nvars` variables, enumerated by hand.
pub fn exponents(nvars: usize, deg: i64) -> Vec<Vec<u16>> {
    if deg < 0 {
        return Vec::new();
    }
    if nvars == 1 {
        return vec![vec![deg as u16]];
    }
    let mut out = Vec::new();
    for first in 0..=deg {
        for mut rest in exponents(nvars - 1, deg - first) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

/// Rank of a dense matrix over `F_p` by plain Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let inv = |a: u64| {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let s = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * s % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + (p - f) * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim Hom_S(S_{≥d}, S(k))_0` over `F_p[x_0..x_{nvars-1}]`, as the solution
/// space of the linear system `x_i f_a = x_j f_b` for `x_i a = x_j b`, where
/// `f_m ∈ S_{d+k}` is the image of the monomial generator `m` of `S_{≥d}`.
pub fn brute_hom_truncated_ring(nvars: usize, p: u64, d: i64, k: i64) -> usize {
    assert!(d >= 0);
    let gens = exponents(nvars, d);
    let targets = exponents(nvars, d + k);
    let unknowns = gens.len() * targets.len();
    if unknowns == 0 {
        return 0;
    }
    let gen_index: HashMap<Vec<u16>, usize> = gens.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
    let tops = exponents(nvars, d + k + 1);
    let top_index: HashMap<Vec<u16>, usize> = tops.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut rows = Vec::new();
    for c in exponents(nvars, d + 1) {
        for i in 0..nvars {
            for j in i + 1..nvars {
                if c[i] == 0 || c[j] == 0 {
                    continue;
                }
                let (mut a, mut b) = (c.clone(), c.clone());
                a[i] -= 1;
                b[j] -= 1;
                let (ga, gb) = (gen_index[&a], gen_index[&b]);
                // one equation per monomial of degree d+k+1
                let mut block = vec![vec![0u64; unknowns]; tops.len()];
                for (ti, t) in targets.iter().enumerate() {
                    let mut up = t.clone();
                    up[i] += 1;
                    block[top_index[&up]][ga * targets.len() + ti] += 1;
                    let mut up = t.clone();
                    up[j] += 1;
                    let e = &mut block[top_index[&up]][gb * targets.len() + ti];
                    *e = (*e + p - 1) % p;
                }
                rows.extend(block.into_iter().filter(|r| r.iter().any(|&x| x != 0)));
            }
        }
    }
    unknowns - if rows.is_empty() { 0 } else { rank_mod_p(rows, p) }
}

/// A random homogeneous polynomial of degree `deg` with at most `terms` terms.
pub fn random_poly<R: Rng>(rng: &mut R, ring: &PolyRing, deg: i64, terms: usize) -> GradedPolynomial {
    if deg < 0 {
        return ring.zero();
    }
    let basis = ring.monomial_basis(deg);
    let p = ring.characteristic() as i64;
    let picks: Vec<(i64, Monomial)> = (0..terms)
        .map(|_| (rng.gen_range(1..p), basis[rng.gen_range(0..basis.len())].clone()))
        .collect();
    ring.from_terms(picks).expect("terms share a degree")
}

/// A random presentation with generators in degrees `gen_degrees` and up to
/// `max_rels` relations, each of degree one or two above the top generator.
pub fn random_module<R: Rng>(rng: &mut R, ring: &PolyRing, gen_degrees: &[i64], max_rels: usize) -> GradedModule {
    let free = FreeModule::new(gen_degrees.to_vec());
    let top = gen_degrees.iter().copied().max().unwrap_or(0);
    let count = rng.gen_range(0..=max_rels);
    let mut rels = Vec::with_capacity(count);
    for _ in 0..count {
        let e = top + rng.gen_range(1..=2);
        let comps: Vec<GradedPolynomial> = gen_degrees
            .iter()
            .map(|&g| {
                if rng.gen_bool(0.75) {
                    let terms = rng.gen_range(1..=2);
                    random_poly(rng, ring, e - g, terms)
                } else {
                    ring.zero()
                }
            })
            .collect();
        rels.push(FreeElement::with_degree(&free, comps, e).expect("homogeneous relation"));
    }
    GradedModule::new(*ring, free, rels).expect("valid presentation")
}

/// Random element of `F` of degree `deg`.
pub fn random_element<R: Rng>(rng: &mut R, ring: &PolyRing, free: &FreeModule, deg: i64) -> FreeElement {
    let comps = free
        .degrees()
        .iter()
        .map(|&g| {
            let terms = rng.gen_range(0..=3);
            random_poly(rng, ring, deg - g, terms)
        })
        .collect();
    FreeElement::with_degree(free, comps, deg).expect("homogeneous element")
}
