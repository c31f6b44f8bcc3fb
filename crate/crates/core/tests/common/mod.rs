//! Oracles shared by the integration tests. None of them call into the
//! algorithms they are used to check.
#![allow(dead_code)]

use std::collections::HashSet;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::Rng;
use singmap::exactmath::{BivariatePoly, ExactScalar, MultiPoly};

/// Minimal generators of `{(a, b) ∈ ℕ² \ 0 : a + q·b ≡ 0 (mod p)}`, by
/// exhaustive search in the box `[0, p]²`, sorted by descending `a`.
pub fn brute_force_cyclic_basis(p: i64, q: i64) -> Vec<(u32, u32)> {
    let n = p as usize;
    let member = |a: usize, b: usize| (a as i64 + q * b as i64) % p == 0;
    let mut elems = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            if (a, b) != (0, 0) && member(a, b) {
                elems.push((a, b));
            }
        }
    }
    let set: HashSet<(usize, usize)> = elems.iter().copied().collect();
    let mut basis: Vec<(u32, u32)> = elems
        .iter()
        .filter(|&&(a, b)| {
            !set
                .iter()
                .any(|&(c, d)| (c, d) != (a, b) && c <= a && d <= b && set.contains(&(a - c, b - d)))
        })
        .map(|&(a, b)| (a as u32, b as u32))
        .collect();
    basis.sort_by(|x, y| y.0.cmp(&x.0));
    basis
}

/// Reads `(u^5, u^3v, uv^2, v^5)`-style monomial lists.
pub fn parse_monomial_list(s: &str) -> Vec<(u32, u32)> {
    s.trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|m| {
            let m = m.trim().replace('*', "");
            let mut a = 0;
            let mut b = 0;
            let chars: Vec<char> = m.chars().collect();
            let mut k = 0;
            while k < chars.len() {
                let var = chars[k];
                k += 1;
                let mut e = 1;
                if k < chars.len() && chars[k] == '^' {
                    k += 1;
                    let start = k;
                    while k < chars.len() && chars[k].is_ascii_digit() {
                        k += 1;
                    }
                    e = chars[start..k].iter().collect::<String>().parse().unwrap();
                }
                match var {
                    'u' => a += e,
                    'v' => b += e,
                    other => panic!("unexpected variable {other}"),
                }
            }
            (a, b)
        })
        .collect()
}

pub fn scalar_to_c64(s: &ExactScalar) -> Complex64 {
    let c: Vec<f64> = s.coords().iter().map(|r| r.to_f64().unwrap()).collect();
    let (r2, r5, r10) = (2f64.sqrt(), 5f64.sqrt(), 10f64.sqrt());
    Complex64::new(c[0] + c[2] * r2 + c[3] * r5 + c[6] * r10, c[1] + c[4] * r2 + c[5] * r5 + c[7] * r10)
}

pub fn eval_bivariate(p: &BivariatePoly, u: Complex64, v: Complex64) -> Complex64 {
    p.terms()
        .into_iter()
        .map(|((a, b), c)| scalar_to_c64(c) * u.powu(a) * v.powu(b))
        .sum()
}

/// Sum of the absolute values of the terms of `p` at `(u, v)`.
pub fn term_magnitude(p: &BivariatePoly, u: Complex64, v: Complex64) -> f64 {
    p.terms()
        .into_iter()
        .map(|((a, b), c)| scalar_to_c64(c).norm() * u.norm().powi(a as i32) * v.norm().powi(b as i32))
        .sum()
}

/// Evaluates `r(p_1(u, v), …)` in floating point and returns the value
/// together with the sum of absolute term sizes, which sets the scale for
/// rounding error.
pub fn eval_relation(r: &MultiPoly, gens: &[BivariatePoly], u: Complex64, v: Complex64) -> (Complex64, f64) {
    let vals: Vec<Complex64> = gens.iter().map(|g| eval_bivariate(g, u, v)).collect();
    let mut total = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for (e, c) in r.terms() {
        let mut t = scalar_to_c64(c);
        for (x, &k) in vals.iter().zip(e) {
            t *= x.powu(k);
        }
        scale += t.norm();
        total += t;
    }
    (total, scale)
}

pub fn random_point(rng: &mut StdRng) -> (Complex64, Complex64) {
    let mut z = || Complex64::from_polar(rng.gen_range(0.6..1.2), rng.gen_range(0.0..std::f64::consts::TAU));
    (z(), z())
}

/// `r(p) = 0` numerically at `samples` random points.
pub fn vanishes_numerically(r: &MultiPoly, gens: &[BivariatePoly], rng: &mut StdRng, samples: usize) -> bool {
    (0..samples).all(|_| {
        let (u, v) = random_point(rng);
        let (val, scale) = eval_relation(r, gens, u, v);
        val.norm() <= 1e-9 * scale.max(1.0)
    })
}

pub type M2 = [[Complex64; 2]; 2];

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn mat_mul(a: &M2, b: &M2) -> M2 {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn scaled(k: Complex64, m: [[Complex64; 2]; 2]) -> M2 {
    [[k * m[0][0], k * m[0][1]], [k * m[1][0], k * m[1][1]]]
}

/// Generator pairs written out by hand from their closed forms.
pub fn generators_t() -> [M2; 2] {
    [
        scaled(c(0.5, 0.0), [[c(1.0, 1.0), c(1.0, 1.0)], [c(-1.0, 1.0), c(1.0, -1.0)]]),
        scaled(c(0.5, 0.0), [[c(1.0, 1.0), c(1.0, -1.0)], [c(-1.0, -1.0), c(1.0, -1.0)]]),
    ]
}

pub fn generators_o() -> [M2; 2] {
    let h = std::f64::consts::SQRT_2 / 2.0;
    [
        generators_t()[0],
        scaled(c(h, 0.0), [[c(0.0, 0.0), c(1.0, 1.0)], [c(-1.0, 1.0), c(0.0, 0.0)]]),
    ]
}

pub fn generators_i() -> [M2; 2] {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    [
        generators_t()[0],
        scaled(c(0.5, 0.0), [[c(1.0 / phi, phi), c(0.0, 1.0)], [c(0.0, 1.0), c(1.0 / phi, -phi)]]),
    ]
}

pub fn generators_d(n: u32) -> [M2; 2] {
    let z = Complex64::from_polar(1.0, std::f64::consts::PI / f64::from(n));
    [
        [[z, c(0.0, 0.0)], [c(0.0, 0.0), z.conj()]],
        [[c(0.0, 0.0), c(1.0, 0.0)], [c(-1.0, 0.0), c(0.0, 0.0)]],
    ]
}

/// Size of the group generated by `gens`, by breadth-first closure with
/// entries compared on a `1e-7` grid.
pub fn numeric_closure_order(gens: &[M2], cap: usize) -> usize {
    let key = |m: &M2| -> [i64; 8] {
        let mut k = [0i64; 8];
        for i in 0..2 {
            for j in 0..2 {
                k[4 * i + 2 * j] = (m[i][j].re * 1e7).round() as i64;
                k[4 * i + 2 * j + 1] = (m[i][j].im * 1e7).round() as i64;
            }
        }
        k
    };
    let id = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
    let mut seen = HashSet::from([key(&id)]);
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for g in gens {
            let next = mat_mul(&m, g);
            if seen.insert(key(&next)) {
                frontier.push(next);
            }
            if seen.len() > cap {
                return seen.len();
            }
        }
    }
    seen.len()
}

/// `p(M·(u, v)) = p(u, v)` numerically at random points.
pub fn fixed_numerically(p: &BivariatePoly, m: &M2, rng: &mut StdRng) -> bool {
    (0..8).all(|_| {
        let (u, v) = random_point(rng);
        let (mu, mv) = (m[0][0] * u + m[0][1] * v, m[1][0] * u + m[1][1] * v);
        let a = eval_bivariate(p, u, v);
        let b = eval_bivariate(p, mu, mv);
        let scale = term_magnitude(p, u, v).max(term_magnitude(p, mu, mv));
        (a - b).norm() <= 1e-10 * scale.max(1.0)
    })
}

/// Laufer's algorithm written directly on an integer matrix: start from
/// all ones and raise any coordinate with `Z·E_v > 0`.
pub fn laufer_oracle(m: &[Vec<i64>]) -> Vec<i64> {
    let n = m.len();
    let mut z = vec![1i64; n];
    loop {
        let bad = (0..n).find(|&v| (0..n).map(|w| m[v][w] * z[w]).sum::<i64>() > 0);
        match bad {
            Some(v) => z[v] += 1,
            None => return z,
        }
        assert!(z.iter().sum::<i64>() < 10_000, "Laufer oracle diverged");
    }
}

pub fn quadratic_form(m: &[Vec<i64>], z: &[i64]) -> i64 {
    (0..m.len()).map(|i| (0..m.len()).map(|j| z[i] * m[i][j] * z[j]).sum::<i64>()).sum()
}

/// Leading principal minors of `-M` by fraction-free elimination; all
/// positive iff `M` is negative definite.
pub fn negative_definite_by_minors(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| -i128::from(x)).collect()).collect();
    let mut prev: i128 = 1;
    for k in 0..n {
        if a[k][k] <= 0 {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    true
}
