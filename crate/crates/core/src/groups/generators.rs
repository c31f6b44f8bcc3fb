use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::exactmath::{BigRational, BivariatePoly, ExactMatrix, ExactScalar};
use crate::{Error, Result};

/// Default bound on closure enumeration.
pub const CLOSURE_CAP: usize = 500;

/// A generator of a finite subgroup of U(2).
///
/// Roots of unity of order not dividing 8 are outside ℚ[i, √2, √5], so
/// diagonal generators built from them are kept as exponents of `ζ_n`.
#[derive(Clone, PartialEq, Eq)]
pub enum Generator {
    Exact(ExactMatrix),
    /// `diag(ζ_n^a, ζ_n^b)` with `ζ_n = e^{2πi/n}`
    DiagRoot { n: u64, a: u64, b: u64 },
}

impl Generator {
    /// Exact diagonal root matrix when `ζ_n` lies in the coefficient ring,
    /// the symbolic form otherwise.
    pub fn diag_root(n: u64, a: u64, b: u64) -> Self {
        match (root_of_unity(n, a), root_of_unity(n, b)) {
            (Some(x), Some(y)) => Generator::Exact(ExactMatrix::diag2(x, y)),
            _ => Generator::DiagRoot { n, a: a % n, b: b % n },
        }
    }

    pub fn as_exact(&self) -> Option<&ExactMatrix> {
        match self {
            Generator::Exact(m) => Some(m),
            Generator::DiagRoot { .. } => None,
        }
    }

    /// Whether `p(M·(u, v)) = p`.
    pub fn fixes(&self, p: &BivariatePoly) -> bool {
        match self {
            Generator::Exact(m) => &p.substitute_linear(m) == p,
            Generator::DiagRoot { n, a, b } => p
                .exponents()
                .all(|&(i, j)| (a * u64::from(i) + b * u64::from(j)) % n == 0),
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Exact(m) => write!(f, "{m:?}"),
            Generator::DiagRoot { n, a, b } => write!(f, "diag(z{n}^{a}, z{n}^{b})"),
        }
    }
}

/// `ζ_n^k` when it lies in ℚ[i, √2, √5], i.e. when its order divides 8.
pub fn root_of_unity(n: u64, k: u64) -> Option<ExactScalar> {
    assert!(n > 0, "root of unity of order 0");
    let k = k % n;
    if !(8 * k).is_multiple_of(n) {
        return None;
    }
    // ζ_n^k = ζ_8^j
    let j = (8 * k / n) as u32;
    let half_sqrt2 = ExactScalar::sqrt2().scale(&BigRational::new(1.into(), 2.into()));
    let zeta8 = &half_sqrt2 * &(&ExactScalar::one() + &ExactScalar::i());
    Some(zeta8.pow(j))
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorSet {
    pub generators: Vec<Generator>,
}

impl GeneratorSet {
    pub fn new(generators: Vec<Generator>) -> Self {
        Self { generators }
    }

    /// All matrices, if every generator is exact. Otherwise the set carries
    /// order annotations only and cannot be enumerated.
    pub fn exact_matrices(&self) -> Option<Vec<ExactMatrix>> {
        self.generators.iter().map(|g| g.as_exact().cloned()).collect()
    }

    pub fn is_annotation_only(&self) -> bool {
        self.exact_matrices().is_none()
    }

    pub fn fixes(&self, p: &BivariatePoly) -> bool {
        self.generators.iter().all(|g| g.fixes(p))
    }
}

/// Size of the group generated by `gens`, by breadth-first multiplication.
pub fn group_closure_order(gens: &[ExactMatrix]) -> Result<usize> {
    group_closure(gens, CLOSURE_CAP).map(|s| s.len())
}

pub fn group_closure(gens: &[ExactMatrix], cap: usize) -> Result<HashSet<ExactMatrix>> {
    let n = gens.first().map_or(2, ExactMatrix::rows);
    let id = ExactMatrix::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

fn c(re: i64, im: i64) -> ExactScalar {
    &ExactScalar::from_int(re) + &ExactScalar::i().scale(&BigRational::from_integer(im.into()))
}

/// `½(1 + i + j + k)` as a matrix; shared first generator of T*, O*, I*.
pub(crate) fn polyhedral_first() -> ExactMatrix {
    ExactMatrix::mat2(c(1, 1), c(1, 1), c(-1, 1), c(1, -1)).scale(&ExactScalar::from_rational(half()))
}

pub(crate) fn tetrahedral_second() -> ExactMatrix {
    ExactMatrix::mat2(c(1, 1), c(1, -1), c(-1, -1), c(1, -1)).scale(&ExactScalar::from_rational(half()))
}

pub(crate) fn octahedral_second() -> ExactMatrix {
    let r = ExactScalar::sqrt2().scale(&half());
    ExactMatrix::mat2(ExactScalar::zero(), c(1, 1), c(-1, 1), ExactScalar::zero()).scale(&r)
}

pub(crate) fn icosahedral_second() -> ExactMatrix {
    let s5 = ExactScalar::sqrt5();
    let phi = (&ExactScalar::one() + &s5).scale(&half());
    let phi_inv = (&s5 - &ExactScalar::one()).scale(&half());
    let i = ExactScalar::i();
    let d1 = &phi_inv + &(&i * &phi);
    let d2 = &phi_inv - &(&i * &phi);
    ExactMatrix::mat2(d1, i.clone(), i, d2).scale(&ExactScalar::from_rational(half()))
}

/// Generators of D*_{4n}: `diag(ζ_{2n}, ζ_{2n}^{-1})` and `[[0, 1], [-1, 0]]`.
pub(crate) fn binary_dihedral(n: u64) -> Vec<Generator> {
    vec![
        Generator::diag_root(2 * n, 1, 2 * n - 1),
        Generator::Exact(ExactMatrix::from_int_rows(&[&[0, 1], &[-1, 0]])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity_in_the_ring() {
        assert_eq!(root_of_unity(2, 1), Some(ExactScalar::from_int(-1)));
        assert_eq!(root_of_unity(4, 1), Some(ExactScalar::i()));
        let z8 = root_of_unity(8, 1).unwrap();
        assert_eq!(z8.pow(2), ExactScalar::i());
        assert_eq!(z8.pow(8), ExactScalar::one());
        assert_eq!(root_of_unity(3, 1), None);
        assert_eq!(root_of_unity(6, 3), Some(ExactScalar::from_int(-1)));
    }

    #[test]
    fn generators_are_special_unitary() {
        for g in [polyhedral_first(), tetrahedral_second(), octahedral_second(), icosahedral_second()] {
            assert!(g.determinant().is_one(), "{g:?}");
            // unitary: g times its conjugate transpose is the identity
            let mut h = ExactMatrix::zeros(2, 2);
            for r in 0..2 {
                for col in 0..2 {
                    h.set(r, col, g.get(col, r).complex_conjugate());
                }
            }
            assert_eq!(&g * &h, ExactMatrix::identity(2));
        }
    }

    #[test]
    fn small_closures() {
        let minus = ExactMatrix::diag2(ExactScalar::from_int(-1), ExactScalar::from_int(-1));
        assert_eq!(group_closure_order(&[minus]).unwrap(), 2);
        let too_big = ExactMatrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            group_closure_order(&[too_big]).unwrap_err(),
            Error::ClosureCapExceeded { cap: CLOSURE_CAP }
        );
    }

    #[test]
    fn symbolic_diagonal_action() {
        let g = Generator::diag_root(5, 1, 2);
        assert!(g.as_exact().is_none());
        assert!(g.fixes(&"u^3*v + u*v^2".parse().unwrap()));
        assert!(!g.fixes(&"u*v".parse().unwrap()));
        assert!(Generator::diag_root(4, 1, 3).as_exact().is_some());
    }
}
