//! Relations among generators `p_1, …, p_k`: polynomials `r(x_1, …, x_k)`
//! with `r(p_1, …, p_k) = 0`, searched degree by degree up to a bound.

mod binomial;

pub use binomial::monomial_relations;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactmath::{BivariatePoly, ExactMatrix, ExactScalar, MultiPoly, RowSpace};
use crate::groups::GeneratorSet;
use crate::invariants::{exponents_of_weighted_degree, ProductCache};
use crate::{Error, Result};

/// Default cap on the relation search degree.
pub const DEFAULT_DEGREE_CAP: u32 = 240;

/// Relations found up to `degree_bound`, ordered by weighted degree and
/// then by leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    pub relations: Vec<MultiPoly>,
    pub weights: Vec<u32>,
    pub degree_bound: u32,
    pub complete_up_to_bound: bool,
}

impl Serialize for RelationSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            relations: Vec<String>,
            weights: &'a [u32],
            degree_bound: u32,
            complete_up_to_bound: bool,
        }
        Out {
            relations: self.relations.iter().map(ToString::to_string).collect(),
            weights: &self.weights,
            degree_bound: self.degree_bound,
            complete_up_to_bound: self.complete_up_to_bound,
        }
        .serialize(s)
    }
}

/// `r(p_1, …, p_k) = 0`, exactly.
pub fn verify_relation(r: &MultiPoly, gens: &[BivariatePoly]) -> bool {
    r.nvars() == gens.len() && r.substitute(gens).is_zero()
}

/// `p(M·(u, v)) = p` for every generator `M`.
pub fn check_invariance(p: &BivariatePoly, gens: &GeneratorSet) -> bool {
    gens.fixes(p)
}

/// `2 · (sum of the two largest degrees)`.
pub fn default_degree_bound(degrees: &[u32]) -> u32 {
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    2 * d.iter().take(2).sum::<u32>()
}

/// Reads `SINGMAP_DEGREE_CAP`, falling back to [`DEFAULT_DEGREE_CAP`].
pub fn degree_cap_from_env() -> u32 {
    std::env::var("SINGMAP_DEGREE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_DEGREE_CAP)
}

/// Relations of homogeneous generators, by exact linear algebra in each
/// weighted degree.
///
/// In degree `d` the monomials `x^α` of weighted degree `d` are expanded
/// into `(u, v)`-coefficient vectors; the kernel of that system is the
/// space of degree-`d` relations. Multiples of relations already found
/// span a subspace of it, and a basis of a complement is emitted, each
/// vector reduced against that subspace.
pub fn bounded_degree_relations(gens: &[BivariatePoly], degree_bound: u32) -> Result<RelationSet> {
    let weights: Vec<u32> = gens
        .iter()
        .map(|g| {
            g.homogeneous_degree()
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::InvalidInput(format!("generator {g} is not homogeneous of positive degree")))
        })
        .collect::<Result<_>>()?;
    let mut cache = ProductCache::new(gens);
    let mut found: Vec<MultiPoly> = Vec::new();
    for d in 1..=degree_bound {
        let monos = exponents_of_weighted_degree(&weights, d);
        if monos.len() < 2 {
            continue;
        }
        let index: BTreeMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(k, a)| (a, k)).collect();

        // kernel of the expansion map; rows are coefficients of u^a v^{d-a}
        let mut system = ExactMatrix::zeros(d as usize + 1, monos.len());
        for (col, a) in monos.iter().enumerate() {
            for ((ua, _), c) in cache.get(a).terms() {
                system.set(ua as usize, col, c.clone());
            }
        }
        let kernel = system.nullspace();
        if kernel.is_empty() {
            continue;
        }

        let mut known = RowSpace::new(monos.len());
        for r in &found {
            let rd = r.weighted_degree().expect("relations are homogeneous");
            if rd >= d {
                continue;
            }
            for mu in exponents_of_weighted_degree(&weights, d - rd) {
                let shifted = r.shift(&mu);
                let mut v = vec![ExactScalar::zero(); monos.len()];
                for (e, c) in shifted.terms() {
                    v[index[&e.to_vec()]] = c.clone();
                }
                known.insert(&v);
            }
        }
        for v in kernel {
            if known.contains(&v) {
                continue;
            }
            let reduced = known.reduce(&v);
            known.insert(&v);
            let rel = MultiPoly::from_terms(weights.clone(), monos.iter().cloned().zip(reduced)).normalized();
            found.push(rel);
        }
    }
    for r in &found {
        if !verify_relation(r, gens) {
            return Err(Error::RelationFailure(format!("{r} does not vanish on the generators")));
        }
    }
    Ok(RelationSet {
        relations: found,
        weights,
        degree_bound,
        complete_up_to_bound: true,
    })
}
