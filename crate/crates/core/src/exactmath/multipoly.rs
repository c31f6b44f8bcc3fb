use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::parse::{self, Variable};
use super::{BivariatePoly, ExactScalar};
use crate::Error;

/// Sparse polynomial in `x1..xk` with a positive weight per variable.
///
/// Relation candidates between generators `p_1..p_k` live here, with the
/// weight of `x_i` equal to the degree of `p_i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    weights: Vec<u32>,
    terms: BTreeMap<Vec<u32>, ExactScalar>,
}

impl MultiPoly {
    pub fn zero(weights: Vec<u32>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Self {
            weights,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(weights: Vec<u32>, exps: Vec<u32>, c: ExactScalar) -> Self {
        assert_eq!(weights.len(), exps.len(), "exponent vector length");
        let mut p = Self::zero(weights);
        p.add_term(exps, &c);
        p
    }

    /// `x^alpha - x^beta`
    pub fn binomial(weights: Vec<u32>, alpha: Vec<u32>, beta: Vec<u32>) -> Self {
        let mut p = Self::monomial(weights, alpha, ExactScalar::one());
        p.add_term(beta, &ExactScalar::from_int(-1));
        p
    }

    pub fn from_terms<I>(weights: Vec<u32>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, ExactScalar)>,
    {
        let mut p = Self::zero(weights);
        for (e, c) in terms {
            assert_eq!(e.len(), p.weights.len(), "exponent vector length");
            p.add_term(e, &c);
        }
        p
    }

    /// Parses the text format; variables are `x1..xk` with `k` the number of
    /// weights.
    pub fn parse(s: &str, weights: Vec<u32>) -> Result<Self, Error> {
        let k = weights.len();
        let mut p = Self::zero(weights);
        for (c, vars) in parse::parse_terms(s)? {
            let mut e = vec![0u32; k];
            for (var, pow) in vars {
                match var {
                    Variable::X(idx) if idx < k => e[idx] += pow,
                    Variable::X(idx) => {
                        return Err(Error::Parse(format!(
                            "variable x{} out of range (only {k} variables) in {s:?}",
                            idx + 1
                        )))
                    }
                    _ => {
                        return Err(Error::Parse(format!(
                            "unexpected variable u/v in a polynomial over x1..x{k}: {s:?}"
                        )))
                    }
                }
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Option<&ExactScalar> {
        self.terms.get(e)
    }

    pub fn weighted_degree_of(&self, e: &[u32]) -> u32 {
        e.iter().zip(&self.weights).map(|(a, w)| a * w).sum()
    }

    /// Common weighted degree of all terms, if weighted-homogeneous.
    pub fn weighted_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| self.weighted_degree_of(e));
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn is_weighted_homogeneous(&self) -> bool {
        self.weighted_degree().is_some()
    }

    fn cmp_desc(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.weighted_degree_of(b)
            .cmp(&self.weighted_degree_of(a))
            .then_with(|| b.cmp(a))
    }

    /// Terms in weighted graded-lex order, highest first.
    pub fn terms(&self) -> Vec<(&[u32], &ExactScalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (e.as_slice(), c)).collect();
        v.sort_by(|x, y| self.cmp_desc(x.0, y.0));
        v
    }

    pub fn leading_term(&self) -> Option<(&[u32], &ExactScalar)> {
        self.terms().into_iter().next()
    }

    fn add_term(&mut self, e: Vec<u32>, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.weights, other.weights, "weight mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ExactScalar::from_int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.weights, other.weights, "weight mismatch");
        let mut out = Self::zero(self.weights.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        let mut out = Self::zero(self.weights.clone());
        if !s.is_zero() {
            out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect();
        }
        out
    }

    /// Multiplies by the monomial `x^mu`.
    pub fn shift(&self, mu: &[u32]) -> Self {
        let mut out = Self::zero(self.weights.clone());
        out.terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(mu).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        out
    }

    /// Substitutes `x_i ← gens[i]`.
    pub fn substitute(&self, gens: &[BivariatePoly]) -> BivariatePoly {
        assert_eq!(gens.len(), self.nvars(), "generator count must match variable count");
        let mut cache: Vec<Vec<BivariatePoly>> = gens.iter().map(|_| vec![BivariatePoly::one()]).collect();
        let mut out = BivariatePoly::zero();
        for (e, c) in &self.terms {
            let mut prod = BivariatePoly::constant(c.clone());
            for (i, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                while cache[i].len() <= a as usize {
                    let next = cache[i].last().expect("seeded") * &gens[i];
                    cache[i].push(next);
                }
                prod = &prod * &cache[i][a as usize];
            }
            out = &out + &prod;
        }
        out
    }

    /// Canonical scalar multiple: leading coefficient (weighted graded-lex)
    /// becomes a positive integer, all rational coordinates of all
    /// coefficients are integers with gcd 1.
    pub fn normalized(&self) -> Self {
        let Some((_, lead)) = self.leading_term() else {
            return self.clone();
        };
        let inv = lead.inv().expect("nonzero leading coefficient");
        let monic = self.scale(&inv);
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in monic.terms.values() {
            for r in c.coords() {
                if r.is_zero() {
                    continue;
                }
                lcm = lcm.lcm(r.denom());
            }
        }
        for c in monic.terms.values() {
            for r in c.coords() {
                if r.is_zero() {
                    continue;
                }
                let n = (&r * BigRational::from_integer(lcm.clone())).to_integer();
                gcd = gcd.gcd(&n.abs());
            }
        }
        monic.scale(&ExactScalar::from_rational(BigRational::new(lcm, gcd)))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.terms().into_iter().map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{a}", i + 1)
                    }
                })
                .collect();
            (mono.join("*"), c)
        });
        parse::write_terms(f, items)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (weights {:?})", self.weights)
    }
}
