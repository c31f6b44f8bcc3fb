use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::parse::{self, Variable};
use super::{ExactMatrix, ExactScalar};
use crate::Error;

/// Exponent pair `(a, b)` for `u^a v^b`.
pub type Exponent2 = (u32, u32);

/// Graded lexicographic comparison, larger first.
pub(crate) fn grlex_desc(x: &Exponent2, y: &Exponent2) -> Ordering {
    (y.0 + y.1).cmp(&(x.0 + x.1)).then(y.0.cmp(&x.0))
}

/// Sparse polynomial in `u`, `v` over ℚ[i, √2, √5]. No zero coefficients
/// are ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<Exponent2, ExactScalar>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: ExactScalar, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    /// `u^a v^b` with coefficient 1.
    pub fn uv_power(a: u32, b: u32) -> Self {
        Self::monomial(ExactScalar::one(), a, b)
    }

    pub fn u() -> Self {
        Self::uv_power(1, 0)
    }

    pub fn v() -> Self {
        Self::uv_power(0, 1)
    }

    /// Builds from `(coefficient, a, b)` triples, summing repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ExactScalar, u32, u32)>,
    {
        let mut p = Self::zero();
        for (c, a, b) in terms {
            p.add_term((a, b), &c);
        }
        p
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

    pub fn coeff(&self, a: u32, b: u32) -> Option<&ExactScalar> {
        self.terms.get(&(a, b))
    }

    /// Terms in graded-lex order, highest first.
    pub fn terms(&self) -> Vec<(Exponent2, &ExactScalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by(|x, y| grlex_desc(&x.0, &y.0));
        v
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Exponent2> {
        self.terms.keys()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    /// The common degree of all terms, if the polynomial is homogeneous and
    /// nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|(a, b)| a + b);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    fn add_term(&mut self, e: Exponent2, c: &ExactScalar) {
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

    pub fn scale(&self, s: &ExactScalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(a·u + b·v, c·u + d·v)` for `M = [[a, b], [c, d]]`.
    pub fn substitute_linear(&self, m: &ExactMatrix) -> Self {
        assert!(m.rows() == 2 && m.cols() == 2, "substitution needs a 2x2 matrix");
        let lu = Self::from_terms([(m.get(0, 0).clone(), 1, 0), (m.get(0, 1).clone(), 0, 1)]);
        let lv = Self::from_terms([(m.get(1, 0).clone(), 1, 0), (m.get(1, 1).clone(), 0, 1)]);
        let max_a = self.terms.keys().map(|e| e.0).max().unwrap_or(0);
        let max_b = self.terms.keys().map(|e| e.1).max().unwrap_or(0);
        let pows_u = powers(&lu, max_a);
        let pows_v = powers(&lv, max_b);
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            let prod = &pows_u[*a as usize] * &pows_v[*b as usize];
            for (e, x) in &prod.terms {
                out.add_term(*e, &(x * c));
            }
        }
        out
    }

    /// Evaluates at exact points.
    pub fn eval(&self, u: &ExactScalar, v: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for ((a, b), c) in &self.terms {
            acc += &(&(c * &u.pow(*a)) * &v.pow(*b));
        }
        acc
    }

    /// Formats in the polynomial text format with the given variable names.
    pub(crate) fn fmt_with(&self, f: &mut impl fmt::Write, names: [&str; 2]) -> fmt::Result {
        let terms = self.terms();
        let items = terms.iter().map(|((a, b), c)| {
            let mut mono = Vec::new();
            for (name, e) in names.iter().zip([*a, *b]) {
                match e {
                    0 => {}
                    1 => mono.push((*name).to_string()),
                    _ => mono.push(format!("{name}^{e}")),
                }
            }
            (mono.join("*"), *c)
        });
        parse::write_terms(f, items)
    }
}

/// `base^0 .. base^n`
fn powers(base: &BivariatePoly, n: u32) -> Vec<BivariatePoly> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(BivariatePoly::one());
    for k in 1..=n as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

impl<'a> Add<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Add for BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: BivariatePoly) -> BivariatePoly {
        &self + &rhs
    }
}

impl<'a> Sub<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Sub for BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: BivariatePoly) -> BivariatePoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a BivariatePoly> for &'a BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: BivariatePoly) -> BivariatePoly {
        &self * &rhs
    }
}

impl Neg for BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        self.scale(&ExactScalar::from_int(-1))
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, ["u", "v"])
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for BivariatePoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut out = Self::zero();
        for (c, vars) in parse::parse_terms(s)? {
            let (mut a, mut b) = (0, 0);
            for (var, e) in vars {
                match var {
                    Variable::U => a += e,
                    Variable::V => b += e,
                    Variable::X(_) => {
                        return Err(Error::Parse(format!(
                            "unexpected variable x in a polynomial over u, v: {s:?}"
                        )))
                    }
                }
            }
            out.add_term((a, b), &c);
        }
        Ok(out)
    }
}
