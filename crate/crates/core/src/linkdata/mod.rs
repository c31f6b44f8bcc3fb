//! Links of normal surface singularities: Seifert invariants, lens spaces and
//! plumbing graphs, with the topological invariants that decide finiteness
//! of the fundamental group.

mod descriptor;
mod hj;
mod plumbing;

pub use descriptor::{parse_lens_shorthand, parse_seifert_shorthand, LinkDescriptor};
pub use hj::{hj_expand, hj_value};
pub use plumbing::{negdef_check, seifert_to_plumbing, GraphShape, IntersectionMatrix, PlumbingGraph};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// Unnormalized Seifert invariants `{g, (1, -b), (p_1, q_1), …, (p_k, q_k)}`.
///
/// Construct through [`SeifertData::new`], which brings the data into
/// normal form: `gcd(p_i, q_i) = 1`, `1 ≤ q_i < p_i`, fibers with `p_i = 1`
/// folded into `b`, fibers sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeifertData {
    pub genus: u32,
    pub b: i64,
    pub fibers: Vec<(i64, i64)>,
}

impl SeifertData {
    pub fn new(b: i64, fibers: &[(i64, i64)]) -> Result<Self> {
        Self::with_genus(0, b, fibers)
    }

    pub fn with_genus(genus: u32, b: i64, fibers: &[(i64, i64)]) -> Result<Self> {
        let mut b = b;
        let mut out = Vec::with_capacity(fibers.len());
        for &(p, q) in fibers {
            if p < 1 {
                return Err(Error::InvalidInput(format!(
                    "Seifert fiber ({p}, {q}) needs p >= 1"
                )));
            }
            if p.gcd(&q) != 1 {
                return Err(Error::InvalidInput(format!(
                    "Seifert fiber ({p}, {q}) is not coprime"
                )));
            }
            // q/p = k + q'/p with 0 <= q' < p; e(L) is unchanged by moving k into b
            let k = q.div_euclid(p);
            let q_red = q.rem_euclid(p);
            b -= k;
            if p > 1 {
                out.push((p, q_red));
            }
        }
        out.sort_unstable();
        Ok(Self {
            genus,
            b,
            fibers: out,
        })
    }

    /// `(χ, e)`: orbifold Euler characteristic `2 - 2g - k + Σ 1/p_i` and
    /// rational Euler number `-b + Σ q_i/p_i`.
    pub fn euler_invariants(&self) -> (BigRational, BigRational) {
        let k = self.fibers.len() as i64;
        let mut chi = int(2 - 2 * i64::from(self.genus) - k);
        let mut e = int(-self.b);
        for &(p, q) in &self.fibers {
            chi += ratio(1, p);
            e += ratio(q, p);
        }
        (chi, e)
    }

    /// The chain `[leg_1 reversed, b, leg_2]` of positive self-intersection
    /// magnitudes, for data with at most two singular fibers.
    fn as_chain(&self) -> Option<Vec<i64>> {
        if self.genus != 0 || self.fibers.len() > 2 {
            return None;
        }
        let mut legs = self
            .fibers
            .iter()
            .map(|&(p, q)| hj_expand(p, q).expect("normal-form fiber"));
        let mut chain: Vec<i64> = legs.next().unwrap_or_default();
        chain.reverse();
        chain.push(self.b);
        chain.extend(legs.next().unwrap_or_default());
        Some(chain)
    }
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A link in normal form: either a lens space `L(p, q)` or Seifert data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Link {
    Lens { p: i64, q: i64 },
    Seifert(SeifertData),
}

impl Link {
    /// `L(p, q)` with `gcd(p, q) = 1`; `q` is reduced mod `p`, and `p = 1`
    /// is the 3-sphere `(1, 0)`.
    pub fn lens(p: i64, q: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidInput(format!("lens space needs p >= 1, got {p}")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidInput(format!("lens space ({p}, {q}) is not coprime")));
        }
        Ok(Link::Lens {
            p,
            q: q.rem_euclid(p),
        })
    }

    /// Seifert data with at most two singular fibers describes a lens space;
    /// it is rewritten as one when its chain is negative definite. Anything
    /// else is kept as given.
    pub fn from_seifert(s: SeifertData) -> Result<Self> {
        if let Some(chain) = s.as_chain() {
            let graph = PlumbingGraph::bamboo(&chain.iter().map(|a| -a).collect::<Vec<_>>());
            if negdef_check(&graph) {
                let (p, q) = hj_value(&chain);
                return Link::lens(p.abs(), q * p.signum());
            }
        }
        Ok(Link::Seifert(s))
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Link::Lens { p, q } => write!(f, "L({p},{q})"),
            Link::Seifert(s) => {
                write!(f, "{{{},(1,{})", s.genus, -s.b)?;
                for (p, q) in &s.fibers {
                    write!(f, "({p},{q})")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// Result of matching a link against the spherical families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Family {
    Lens { p: i64, q: i64 },
    /// `(2,1)(2,1)(p,q)`
    Dihedral { p: i64, q: i64 },
    /// `(2,1)(3,q1)(3,q2)`
    Tetrahedral { q1: i64, q2: i64 },
    /// `(2,1)(3,q1)(4,q2)`
    Octahedral { q1: i64, q2: i64 },
    /// `(2,1)(3,q1)(5,q2)`
    Icosahedral { q1: i64, q2: i64 },
    NotFinite,
}

impl Family {
    pub fn is_finite(&self) -> bool {
        !matches!(self, Family::NotFinite)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Lens { .. } => "lens",
            Family::Dihedral { .. } => "dihedral",
            Family::Tetrahedral { .. } => "tetrahedral",
            Family::Octahedral { .. } => "octahedral",
            Family::Icosahedral { .. } => "icosahedral",
            Family::NotFinite => "not_finite",
        }
    }
}

/// Decides whether the link has finite fundamental group (χ > 0 and
/// e ≠ 0, genus 0, at most three singular fibers) and names the family.
pub fn finite_pi1_family(link: &Link) -> Family {
    let s = match link {
        Link::Lens { p, q } => return Family::Lens { p: *p, q: *q },
        Link::Seifert(s) => s,
    };
    let (chi, e) = s.euler_invariants();
    if s.genus > 0 || !chi.is_positive() || e.is_zero() || s.fibers.len() > 3 {
        return Family::NotFinite;
    }
    if s.fibers.len() < 3 {
        let chain = s.as_chain().expect("genus 0, at most two fibers");
        let (p, q) = hj_value(&chain);
        return match Link::lens(p.abs(), q * p.signum()) {
            Ok(Link::Lens { p, q }) => Family::Lens { p, q },
            _ => Family::NotFinite,
        };
    }
    match s.fibers.as_slice() {
        [(2, 1), (2, 1), (p, q)] => Family::Dihedral { p: *p, q: *q },
        [(2, 1), (3, q1), (3, q2)] => Family::Tetrahedral { q1: *q1, q2: *q2 },
        [(2, 1), (3, q1), (4, q2)] => Family::Octahedral { q1: *q1, q2: *q2 },
        [(2, 1), (3, q1), (5, q2)] => Family::Icosahedral { q1: *q1, q2: *q2 },
        // χ > 0 with three fibers forces one of the platonic triples
        _ => unreachable!("χ > 0 but fibers {:?} match no family", s.fibers),
    }
}

/// `(χ, e)` for a link; a lens space has no fibration-independent pair, so
/// only Seifert data is accepted.
pub fn euler_invariants(s: &SeifertData) -> (BigRational, BigRational) {
    s.euler_invariants()
}

/// Order of π₁ for a spherical Seifert link, `4|e| / χ²`.
pub fn spherical_order(s: &SeifertData) -> Option<BigInt> {
    let (chi, e) = s.euler_invariants();
    if !chi.is_positive() || e.is_zero() {
        return None;
    }
    let order = int(4) * e.abs() / (&chi * &chi);
    order.is_integer().then(|| order.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_invariants_of_the_235_family() {
        let s = SeifertData::new(2, &[(2, 1), (3, 1), (5, 1)]).unwrap();
        let (chi, e) = s.euler_invariants();
        assert_eq!(chi, ratio(1, 30));
        assert_eq!(e, ratio(-29, 30));

        let bare = SeifertData::new(2, &[]).unwrap();
        assert_eq!(bare.euler_invariants(), (int(2), int(-2)));

        let flat = SeifertData::new(1, &[(2, 1), (2, 1)]).unwrap();
        assert_eq!(flat.euler_invariants().1, int(0));
    }

    #[test]
    fn normalization() {
        let s = SeifertData::new(2, &[(5, 7), (1, 3), (2, 1)]).unwrap();
        // (5,7) -> (5,2) with b -> 1; (1,3) folds into b -> -2
        assert_eq!(s.b, -2);
        assert_eq!(s.fibers, vec![(2, 1), (5, 2)]);
        assert!(SeifertData::new(2, &[(4, 2)]).is_err());
        assert!(SeifertData::new(2, &[(0, 1)]).is_err());
    }

    #[test]
    fn family_matching() {
        let ico = Link::Seifert(SeifertData::new(2, &[(5, 1), (3, 1), (2, 1)]).unwrap());
        assert_eq!(finite_pi1_family(&ico), Family::Icosahedral { q1: 1, q2: 1 });
        assert_eq!(
            finite_pi1_family(&Link::lens(7, 3).unwrap()),
            Family::Lens { p: 7, q: 3 }
        );
        let hyperbolic = Link::Seifert(SeifertData::new(2, &[(2, 1), (3, 1), (7, 1)]).unwrap());
        assert_eq!(finite_pi1_family(&hyperbolic), Family::NotFinite);
        let four = Link::Seifert(SeifertData::new(3, &[(2, 1), (2, 1), (2, 1), (2, 1)]).unwrap());
        assert_eq!(finite_pi1_family(&four), Family::NotFinite);
        let flat = Link::Seifert(SeifertData::new(1, &[(2, 1), (2, 1)]).unwrap());
        assert_eq!(finite_pi1_family(&flat), Family::NotFinite);
        let higher_genus = Link::Seifert(SeifertData::with_genus(1, 2, &[(2, 1)]).unwrap());
        assert_eq!(finite_pi1_family(&higher_genus), Family::NotFinite);
    }

    #[test]
    fn short_seifert_data_is_a_lens_space() {
        // chain [2, 2, 3]: (2,1) leg, b = 2, (3,1) leg
        let s = SeifertData::new(2, &[(2, 1), (3, 1)]).unwrap();
        let (p, q) = hj_value(&[2, 2, 3]);
        assert_eq!(Link::from_seifert(s).unwrap(), Link::lens(p, q).unwrap());
        let bare = SeifertData::new(3, &[]).unwrap();
        assert_eq!(Link::from_seifert(bare).unwrap(), Link::lens(3, 1).unwrap());
    }

    #[test]
    fn spherical_orders() {
        let e8 = SeifertData::new(2, &[(2, 1), (3, 2), (5, 4)]).unwrap();
        assert_eq!(spherical_order(&e8), Some(BigInt::from(120)));
        let d5 = SeifertData::new(2, &[(2, 1), (2, 1), (3, 2)]).unwrap();
        assert_eq!(spherical_order(&d5), Some(BigInt::from(12)));
    }
}
