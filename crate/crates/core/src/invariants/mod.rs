//! Generating invariants of finite subgroups of U(2) acting on ℂ[u, v].

pub mod klein;
mod normal_form;

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::exactmath::{BivariatePoly, Exponent2, ExactScalar, RowSpace};
use crate::groups::{GroupDescriptor, GroupTag};
use crate::{Error, Result};

/// Hilbert basis of `{(a, b) ∈ ℕ² : a + q·b ≡ 0 (mod p)}`, sorted by `b`.
///
/// Every element with `0 < b < p` reduces modulo `(p, 0)` to
/// `((-q·b) mod p, b)`, and every element with `b ≥ p` reduces modulo
/// `(0, p)`, so those candidates suffice.
pub fn cyclic_invariant_generators(p: i64, q: i64) -> Result<Vec<Exponent2>> {
    if p < 1 || q < 0 || (q >= p && p > 1) {
        return Err(Error::InvalidInput(format!("cyclic action needs 0 <= q < p, got ({p}, {q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidInput(format!("cyclic action ({p}, {q}) is not coprime")));
    }
    if p == 1 {
        return Ok(vec![(1, 0), (0, 1)]);
    }
    let pu = p as u32;
    let mut kept: Vec<Exponent2> = vec![(pu, 0)];
    for b in 1..p {
        let a = (-q * b).rem_euclid(p) as u32;
        let cand = (a, b as u32);
        if !semigroup_member(cand, &kept) {
            kept.push(cand);
        }
    }
    kept.push((0, pu));
    Ok(kept)
}

/// Whether `target` is a sum of elements of `gens` (with repetition).
pub fn semigroup_member(target: Exponent2, gens: &[Exponent2]) -> bool {
    let (ta, tb) = (target.0 as usize, target.1 as usize);
    let w = tb + 1;
    let mut reach = vec![false; (ta + 1) * w];
    reach[0] = true;
    for a in 0..=ta {
        for b in 0..=tb {
            if reach[a * w + b] {
                continue;
            }
            reach[a * w + b] = gens.iter().any(|&(ga, gb)| {
                let (ga, gb) = (ga as usize, gb as usize);
                (ga, gb) != (0, 0) && ga <= a && gb <= b && reach[(a - ga) * w + (b - gb)]
            });
        }
    }
    reach[ta * w + tb]
}

/// Hilbert basis of `{a ∈ ℕ^k : Σ a_i d_i ≡ 0 (mod m)}`, lexicographically
/// descending.
///
/// `m·e_i` lies in the monoid, so basis elements have `a_i ≤ m`. A vector
/// is reducible iff some nonzero monoid element lies below it, and
/// scanning by coordinate sum finds the minimal ones first.
pub fn product_invariant_monomials(degrees: &[u32], m: u32) -> Vec<Vec<u32>> {
    assert!(m >= 1, "modulus must be positive");
    let k = degrees.len();
    let mut all: Vec<Vec<u32>> = Vec::new();
    let mut cur = vec![0u32; k];
    loop {
        // odometer over [0, m]^k
        let mut i = 0;
        while i < k && cur[i] == m {
            cur[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
        cur[i] += 1;
        let s: u64 = cur.iter().zip(degrees).map(|(&a, &d)| u64::from(a) * u64::from(d)).sum();
        if s.is_multiple_of(u64::from(m)) {
            all.push(cur.clone());
        }
    }
    all.sort_by_key(|a| (a.iter().sum::<u32>(), std::cmp::Reverse(a.clone())));
    let mut basis: Vec<Vec<u32>> = Vec::new();
    for a in all {
        if !basis.iter().any(|b| b.iter().zip(&a).all(|(x, y)| x <= y)) {
            basis.push(a);
        }
    }
    basis.sort_by(|x, y| y.cmp(x));
    basis
}

/// Product `Π gens[i]^{a_i}`.
pub fn monomial_in(gens: &[BivariatePoly], a: &[u32]) -> BivariatePoly {
    gens.iter()
        .zip(a)
        .fold(BivariatePoly::one(), |acc, (g, &e)| if e == 0 { acc } else { &acc * &g.pow(e) })
}

/// Outcome of [`minimalize_generators`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimalized {
    /// indices into the candidate list that were kept, ascending
    pub kept: Vec<usize>,
    pub reached_target: bool,
}

/// Drops candidates that are polynomials in the others.
///
/// Candidates are examined from last to first. One of degree `d ≤
/// degree_bound` is removed when it lies in the span of products of the
/// remaining candidates of total degree `d`. Stops as soon as
/// `target_count` candidates remain.
pub fn minimalize_generators(cands: &[BivariatePoly], target_count: usize, degree_bound: u32) -> Result<Minimalized> {
    let degrees: Vec<u32> = cands
        .iter()
        .map(|p| {
            p.homogeneous_degree()
                .ok_or_else(|| Error::InvalidInput(format!("candidate {p} is not homogeneous")))
        })
        .collect::<Result<_>>()?;
    let mut alive = vec![true; cands.len()];
    let mut count = cands.len();
    for idx in (0..cands.len()).rev() {
        if count <= target_count {
            break;
        }
        let d = degrees[idx];
        if d > degree_bound {
            continue;
        }
        let others: Vec<usize> = (0..cands.len()).filter(|&j| j != idx && alive[j]).collect();
        if in_span_of_products(&cands[idx], d, &others, cands, &degrees) {
            alive[idx] = false;
            count -= 1;
        }
    }
    Ok(Minimalized {
        kept: (0..cands.len()).filter(|&j| alive[j]).collect(),
        reached_target: count == target_count,
    })
}

fn in_span_of_products(target: &BivariatePoly, d: u32, others: &[usize], cands: &[BivariatePoly], degrees: &[u32]) -> bool {
    let sub_degrees: Vec<u32> = others.iter().map(|&j| degrees[j]).collect();
    let exps = exponents_of_weighted_degree(&sub_degrees, d);
    if exps.is_empty() {
        return false;
    }
    // coordinates: coefficient of u^a v^{d-a}, indexed by a
    let dim = d as usize + 1;
    let to_vec = |p: &BivariatePoly| -> Vec<ExactScalar> {
        let mut v = vec![ExactScalar::zero(); dim];
        for ((a, _), c) in p.terms() {
            v[a as usize] = c.clone();
        }
        v
    };
    let gens: Vec<BivariatePoly> = others.iter().map(|&j| cands[j].clone()).collect();
    let mut space = RowSpace::new(dim);
    for e in &exps {
        space.insert(&to_vec(&monomial_in(&gens, e)));
    }
    space.contains(&to_vec(target))
}

/// All `a ∈ ℕ^k` with `Σ a_i w_i = d`, lexicographically descending.
pub fn exponents_of_weighted_degree(weights: &[u32], d: u32) -> Vec<Vec<u32>> {
    fn rec(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in (0..=left / weights[i]).rev() {
            cur.push(a);
            rec(weights, i + 1, left - a * weights[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, d, &mut Vec::with_capacity(weights.len()), &mut out);
    out
}

/// Generators of the invariant ring as a map `F = (p_1, …, p_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantBasis {
    pub generators: Vec<BivariatePoly>,
    pub degrees: Vec<u32>,
    pub group: GroupDescriptor,
    /// For product groups, the exponent of each Klein invariant in each
    /// generator.
    pub exponents: Option<Vec<Vec<u32>>>,
    pub warning: Option<String>,
}

impl fmt::Display for InvariantBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F(u,v) = (")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for InvariantBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            map: String,
            generators: Vec<String>,
            degrees: &'a [u32],
            #[serde(skip_serializing_if = "Option::is_none")]
            klein_exponents: &'a Option<Vec<Vec<u32>>>,
            #[serde(skip_serializing_if = "Option::is_none")]
            warning: &'a Option<String>,
        }
        Out {
            map: self.to_string(),
            generators: self.generators.iter().map(ToString::to_string).collect(),
            degrees: &self.degrees,
            klein_exponents: &self.exponents,
            warning: &self.warning,
        }
        .serialize(s)
    }
}

/// Klein invariants of a binary polyhedral group.
pub fn klein_invariants(tag: GroupTag) -> Result<[BivariatePoly; 3]> {
    match tag {
        GroupTag::BinaryDihedral { n } => Ok(klein::binary_dihedral(n as u32)),
        GroupTag::BinaryTetrahedral => Ok(klein::binary_tetrahedral()),
        GroupTag::BinaryOctahedral => Ok(klein::binary_octahedral()),
        GroupTag::BinaryIcosahedral => Ok(klein::binary_icosahedral()),
        other => Err(Error::UnsupportedFamily(format!(
            "no Klein invariants for {}",
            other.short_name()
        ))),
    }
}

/// Invariant generators for a classified group, reduced towards
/// `embedding_dimension` generators.
pub fn invariant_basis(group: &GroupDescriptor, embedding_dimension: usize) -> Result<InvariantBasis> {
    let (generators, exponents) = match group.tag {
        GroupTag::Cyclic { p, q } => {
            let gens = cyclic_invariant_generators(p as i64, q as i64)?
                .into_iter()
                .map(|(a, b)| BivariatePoly::uv_power(a, b))
                .collect();
            (gens, None)
        }
        GroupTag::DPrime { .. } | GroupTag::TPrime { .. } => {
            return Err(Error::UnsupportedFamily(format!(
                "{group}: no representation in U(2) is provided, so no map is constructed"
            )))
        }
        tag => {
            let klein = klein_invariants(tag)?;
            if group.m == 1 {
                (klein.to_vec(), None)
            } else {
                let kd: Vec<u32> = klein.iter().map(|p| p.homogeneous_degree().expect("homogeneous")).collect();
                let exps = product_invariant_monomials(&kd, group.m as u32);
                let bound = exps
                    .iter()
                    .map(|a| a.iter().zip(&kd).map(|(x, d)| x * d).sum::<u32>())
                    .max()
                    .unwrap_or(0);
                let mut algebra = normal_form::KleinQuotient::new(&klein)?;
                let min = normal_form::minimalize_klein_monomials(&mut algebra, &exps, embedding_dimension, bound);
                let exps: Vec<Vec<u32>> = min.kept.iter().map(|&j| exps[j].clone()).collect();
                let gens = exps.iter().map(|a| monomial_in(&klein, a)).collect();
                (gens, Some(exps))
            }
        }
    };
    let degrees: Vec<u32> = generators
        .iter()
        .map(|g: &BivariatePoly| g.homogeneous_degree().expect("invariants are homogeneous"))
        .collect();
    let warning = (generators.len() != embedding_dimension).then(|| {
        format!(
            "{} generators found but the embedding dimension is {embedding_dimension}",
            generators.len()
        )
    });
    Ok(InvariantBasis {
        generators,
        degrees,
        group: group.clone(),
        exponents,
        warning,
    })
}

/// Memoized products of powers of fixed generators.
pub(crate) struct ProductCache<'a> {
    gens: &'a [BivariatePoly],
    memo: HashMap<Vec<u32>, BivariatePoly>,
}

impl<'a> ProductCache<'a> {
    pub(crate) fn new(gens: &'a [BivariatePoly]) -> Self {
        let mut memo = HashMap::new();
        memo.insert(vec![0; gens.len()], BivariatePoly::one());
        Self { gens, memo }
    }

    pub(crate) fn get(&mut self, a: &[u32]) -> BivariatePoly {
        if let Some(p) = self.memo.get(a) {
            return p.clone();
        }
        let j = a.iter().rposition(|&x| x > 0).expect("zero vector is seeded");
        let mut prev = a.to_vec();
        prev[j] -= 1;
        let p = &self.get(&prev) * &self.gens[j];
        self.memo.insert(a.to_vec(), p.clone());
        p
    }
}
