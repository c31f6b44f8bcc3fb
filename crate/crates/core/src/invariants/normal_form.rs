//! The Klein invariant ring as `ℂ[f1, f2, f3]/(f3² − P(f1, f2))`.
//!
//! Every element has a unique expansion in the monomials `f1^a f2^b f3^ε`
//! with `ε ∈ {0, 1}`, so membership questions about products of Klein
//! invariants reduce to linear algebra in a space of dimension roughly
//! `d / (d1·d2)` instead of `d + 1` coefficients in `u, v`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{exponents_of_weighted_degree, monomial_in, Minimalized};
use crate::exactmath::{BivariatePoly, ExactMatrix, ExactScalar, RowSpace};
use crate::{Error, Result};

type Poly2 = BTreeMap<(u32, u32), ExactScalar>;

fn mul2(a: &Poly2, b: &Poly2) -> Poly2 {
    let mut out = Poly2::new();
    for (&(i, j), x) in a {
        for (&(k, l), y) in b {
            let e = out.entry((i + k, j + l)).or_insert_with(ExactScalar::zero);
            *e += &(x * y);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub(crate) struct KleinQuotient {
    weights: [u32; 3],
    /// `P^k` for `k = 0, 1, …`, grown on demand
    p_powers: Vec<Poly2>,
}

impl KleinQuotient {
    /// Solves `f3² = Σ c_ab f1^a f2^b` over the monomials of weighted
    /// degree `2·d3` and checks that the solution is unique.
    pub(crate) fn new(klein: &[BivariatePoly; 3]) -> Result<Self> {
        let w: Vec<u32> = klein
            .iter()
            .map(|p| p.homogeneous_degree().ok_or_else(|| Error::InvalidInput(format!("{p} is not homogeneous"))))
            .collect::<Result<_>>()?;
        let target = 2 * w[2];
        let monos: Vec<Vec<u32>> = exponents_of_weighted_degree(&w[..2], target);
        let mut cols = vec![klein[2].pow(2)];
        cols.extend(monos.iter().map(|a| monomial_in(&klein[..2], a)));
        let mut m = ExactMatrix::zeros(target as usize + 1, cols.len());
        for (j, p) in cols.iter().enumerate() {
            for ((a, _), c) in p.terms() {
                m.set(a as usize, j, c.clone());
            }
        }
        let kernel = m.nullspace();
        let [v] = kernel.as_slice() else {
            return Err(Error::InvalidInput(format!(
                "expected one relation in degree {target}, found {}",
                kernel.len()
            )));
        };
        let lead = v[0].inv().ok_or_else(|| Error::InvalidInput("the relation does not involve f3^2".into()))?;
        let p: Poly2 = monos
            .iter()
            .zip(&v[1..])
            .filter(|(_, c)| !c.is_zero())
            .map(|(a, c)| ((a[0], a[1]), -&(c * &lead)))
            .collect();
        Ok(Self {
            weights: [w[0], w[1], w[2]],
            p_powers: vec![Poly2::from([((0, 0), ExactScalar::one())]), p],
        })
    }

    fn p_power(&mut self, k: usize) -> &Poly2 {
        while self.p_powers.len() <= k {
            let next = mul2(self.p_powers.last().expect("seeded"), &self.p_powers[1]);
            self.p_powers.push(next);
        }
        &self.p_powers[k]
    }

    /// Coordinates of `f1^a1 f2^a2 f3^a3` in the basis `f1^i f2^j f3^ε`.
    pub(crate) fn normal_form(&mut self, a: &[u32]) -> BTreeMap<(u32, u32, u32), ExactScalar> {
        let eps = a[2] % 2;
        let pk = self.p_power((a[2] / 2) as usize);
        pk.iter().map(|(&(i, j), c)| ((i + a[0], j + a[1], eps), c.clone())).collect()
    }

    pub(crate) fn weights(&self) -> [u32; 3] {
        self.weights
    }
}

/// Same procedure as [`super::minimalize_generators`] for candidates
/// `f^{a_k}`, with span tests done in the normal-form basis. Products of
/// candidates are again monomials in the `f_i`, so the products of a
/// given degree are the distinct exponent sums of that degree.
pub(crate) fn minimalize_klein_monomials(
    algebra: &mut KleinQuotient,
    exps: &[Vec<u32>],
    target_count: usize,
    degree_bound: u32,
) -> Minimalized {
    let w = algebra.weights();
    let degree = |a: &[u32]| a.iter().zip(w).map(|(&x, y)| x * y).sum::<u32>();
    let degrees: Vec<u32> = exps.iter().map(|a| degree(a)).collect();
    let mut alive = vec![true; exps.len()];
    let mut count = exps.len();
    for idx in (0..exps.len()).rev() {
        if count <= target_count {
            break;
        }
        let d = degrees[idx];
        if d > degree_bound {
            continue;
        }
        let others: Vec<usize> = (0..exps.len()).filter(|&j| j != idx && alive[j]).collect();
        let products = products_of_degree(exps, &degrees, &others, d);
        if products.is_empty() {
            continue;
        }
        let mut basis_index: HashMap<(u32, u32, u32), usize> = HashMap::new();
        let mut rows: Vec<BTreeMap<(u32, u32, u32), ExactScalar>> = Vec::new();
        for b in products.iter().chain(std::iter::once(&exps[idx])) {
            let nf = algebra.normal_form(b);
            for k in nf.keys() {
                let n = basis_index.len();
                basis_index.entry(*k).or_insert(n);
            }
            rows.push(nf);
        }
        let dim = basis_index.len();
        let dense = |nf: &BTreeMap<(u32, u32, u32), ExactScalar>| {
            let mut v = vec![ExactScalar::zero(); dim];
            for (k, c) in nf {
                v[basis_index[k]] = c.clone();
            }
            v
        };
        let target = rows.pop().expect("target row pushed last");
        let mut space = RowSpace::new(dim);
        for r in &rows {
            space.insert(&dense(r));
        }
        if space.contains(&dense(&target)) {
            alive[idx] = false;
            count -= 1;
        }
    }
    Minimalized {
        kept: (0..exps.len()).filter(|&j| alive[j]).collect(),
        reached_target: count == target_count,
    }
}

/// Exponent vectors `Σ e_k a_k` with `e ≠ 0`, `k ∈ others`, of weighted
/// degree `d`. Single candidates count, since a candidate that is a linear
/// combination of others of the same degree is redundant too.
fn products_of_degree(exps: &[Vec<u32>], degrees: &[u32], others: &[usize], d: u32) -> BTreeSet<Vec<u32>> {
    let step = others.iter().fold(0u32, |g, &k| num_integer::gcd(g, degrees[k])).max(1) as usize;
    let d = d as usize;
    if !d.is_multiple_of(step) {
        return BTreeSet::new();
    }
    // sums[t / step]: the vectors of degree t
    let mut sums: Vec<BTreeSet<Vec<u32>>> = vec![BTreeSet::new(); d / step + 1];
    for t in (step..=d).step_by(step) {
        let mut here = BTreeSet::new();
        for &k in others {
            let dk = degrees[k] as usize;
            if dk == t {
                here.insert(exps[k].clone());
            } else if dk < t {
                for s in &sums[(t - dk) / step] {
                    here.insert(s.iter().zip(&exps[k]).map(|(x, y)| x + y).collect());
                }
            }
        }
        sums[t / step] = here;
    }
    sums.pop().unwrap_or_default()
}
