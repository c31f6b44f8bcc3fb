//! Elements of the ring ℚ[i, √2, √5].
//!
//! An element is stored as eight rational coordinates. Internally the
//! coordinate index is a bitmask over the adjoined symbols (bit 0 = `i`,
//! bit 1 = `√2`, bit 2 = `√5`), which makes the structure constants a single
//! xor plus a scalar factor. The public coordinate order is
//! `{1, i, √2, √5, i√2, i√5, √10, i√10}`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

const I_BIT: usize = 1;
const S2_BIT: usize = 2;
const S5_BIT: usize = 4;

/// Public coordinate order, as masks.
const PUBLIC_ORDER: [usize; 8] = [
    0,
    I_BIT,
    S2_BIT,
    S5_BIT,
    I_BIT | S2_BIT,
    I_BIT | S5_BIT,
    S2_BIT | S5_BIT,
    I_BIT | S2_BIT | S5_BIT,
];

/// Text symbols for each mask, used by the polynomial printer.
pub(crate) fn basis_symbol(mask: usize) -> &'static str {
    match mask {
        0 => "",
        1 => "i",
        2 => "s2",
        3 => "i*s2",
        4 => "s5",
        5 => "i*s5",
        6 => "s10",
        7 => "i*s10",
        _ => unreachable!("basis mask out of range"),
    }
}

/// Product e_a · e_b = factor · e_(a xor b).
fn structure_factor(a: usize, b: usize) -> i64 {
    let common = a & b;
    let mut f = 1;
    if common & I_BIT != 0 {
        f = -f;
    }
    if common & S2_BIT != 0 {
        f *= 2;
    }
    if common & S5_BIT != 0 {
        f *= 5;
    }
    f
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    c: [BigRational; 8],
}

impl ExactScalar {
    pub fn zero() -> Self {
        Self {
            c: std::array::from_fn(|_| BigRational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut s = Self::zero();
        s.c[0] = r;
        s
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn basis(mask: usize) -> Self {
        let mut s = Self::zero();
        s.c[mask] = BigRational::one();
        s
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::basis(I_BIT)
    }

    pub fn sqrt2() -> Self {
        Self::basis(S2_BIT)
    }

    pub fn sqrt5() -> Self {
        Self::basis(S5_BIT)
    }

    pub fn sqrt10() -> Self {
        Self::basis(S2_BIT | S5_BIT)
    }

    /// Builds a scalar from coordinates in the public order
    /// `{1, i, √2, √5, i√2, i√5, √10, i√10}`.
    pub fn from_coords(coords: [BigRational; 8]) -> Self {
        let mut s = Self::zero();
        for (k, v) in coords.into_iter().enumerate() {
            s.c[PUBLIC_ORDER[k]] = v;
        }
        s
    }

    /// Coordinates in the public order.
    pub fn coords(&self) -> [BigRational; 8] {
        std::array::from_fn(|k| self.c[PUBLIC_ORDER[k]].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then(|| &self.c[0])
    }

    /// Image under the field automorphism that negates the symbols in
    /// `flip` (same bit layout as the coordinate masks).
    pub fn conjugate_by(&self, flip: usize) -> Self {
        let mut out = self.clone();
        for (mask, v) in out.c.iter_mut().enumerate() {
            if (mask & flip).count_ones() % 2 == 1 {
                *v = -v.clone();
            }
        }
        out
    }

    /// Complex conjugation (i ↦ −i).
    pub fn complex_conjugate(&self) -> Self {
        self.conjugate_by(I_BIT)
    }

    /// Field norm down to ℚ: the product of all eight Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let mut acc = self.clone();
        for flip in 1..8 {
            acc = &acc * &self.conjugate_by(flip);
        }
        debug_assert!(acc.is_rational());
        acc.c[0].clone()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(r.recip()));
        }
        let mut cofactor = Self::one();
        for flip in 1..8 {
            cofactor = &cofactor * &self.conjugate_by(flip);
        }
        let norm = (self * &cofactor).c[0].clone();
        Some(cofactor.scale(&norm.recip()))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut out = self.clone();
        for v in out.c.iter_mut() {
            if !v.is_zero() {
                *v *= r;
            }
        }
        out
    }

    /// Division by a rational scalar.
    pub fn div_rational(&self, r: &BigRational) -> Self {
        assert!(!r.is_zero(), "division by zero");
        self.scale(&r.recip())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Nonzero coordinates as (mask, value), in public order.
    pub(crate) fn nonzero_parts(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        PUBLIC_ORDER
            .iter()
            .map(move |&m| (m, &self.c[m]))
            .filter(|(_, v)| !v.is_zero())
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(mut self, rhs: ExactScalar) -> ExactScalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(mut self, rhs: ExactScalar) -> ExactScalar {
        self -= &rhs;
        self
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        let mut out = ExactScalar::zero();
        for (a, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in rhs.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let f = structure_factor(a, b);
                let prod = x * y;
                let target = &mut out.c[a ^ b];
                if f == 1 {
                    *target += prod;
                } else {
                    *target += prod * BigInt::from(f);
                }
            }
        }
        out
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

impl Div<&BigRational> for &ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &BigRational) -> ExactScalar {
        self.div_rational(rhs)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(mut self) -> ExactScalar {
        for v in self.c.iter_mut() {
            if !v.is_zero() {
                *v = -v.clone();
            }
        }
        self
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -self.clone()
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as a sum of `coefficient*symbol` parts, e.g. `1/2 + 1/2*i`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, v) in self.nonzero_parts() {
            let (neg, mag) = (v.is_negative(), v.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let sym = basis_symbol(mask);
            match (mag.is_one(), sym.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{sym}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{sym}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
