//! Fundamental groups of spherical links as finite subgroups of U(2).
//!
//! The family decides the binary polyhedral part; an integer `m` computed
//! from `b` and the fiber data decides the cyclic factor, or for some
//! dihedral and tetrahedral data one of the groups D′ and T′.

mod generators;

pub use generators::{group_closure, group_closure_order, root_of_unity, Generator, GeneratorSet, CLOSURE_CAP};

use std::fmt;

use serde::Serialize;

use crate::linkdata::Family;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Cyclic { p: u64, q: u64 },
    /// D*_{4n}
    BinaryDihedral { n: u64 },
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    /// D′_{2^{k+2} p} with `p` odd and `k ≥ 1`
    DPrime { k: u32, p: u64 },
    /// T′_{8·3^k} with `k ≥ 2`
    TPrime { k: u32 },
}

impl GroupTag {
    pub fn order(&self) -> u64 {
        match *self {
            GroupTag::Cyclic { p, .. } => p,
            GroupTag::BinaryDihedral { n } => 4 * n,
            GroupTag::BinaryTetrahedral => 24,
            GroupTag::BinaryOctahedral => 48,
            GroupTag::BinaryIcosahedral => 120,
            GroupTag::DPrime { k, p } => (1 << (k + 2)) * p,
            GroupTag::TPrime { k } => 8 * 3u64.pow(k),
        }
    }

    pub fn short_name(&self) -> &'static str {
        match self {
            GroupTag::Cyclic { .. } => "cyclic",
            GroupTag::BinaryDihedral { .. } => "D*",
            GroupTag::BinaryTetrahedral => "T*",
            GroupTag::BinaryOctahedral => "O*",
            GroupTag::BinaryIcosahedral => "I*",
            GroupTag::DPrime { .. } => "D'",
            GroupTag::TPrime { .. } => "T'",
        }
    }

    pub fn has_representation(&self) -> bool {
        !matches!(self, GroupTag::DPrime { .. } | GroupTag::TPrime { .. })
    }
}

/// How a D′ or T′ group was split off from the family integer `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSplit {
    /// the integer from the family formula
    pub m_formula: u64,
    /// 2 for dihedral data, 3 for tetrahedral data
    pub prime: u64,
    /// exponent of `prime` in `m_formula`
    pub valuation: u32,
    /// `m_formula` with that prime removed; the cyclic factor
    pub cofactor: u64,
}

/// The classified fundamental group `Z/m × G`, or `G` alone when `m = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub tag: GroupTag,
    pub m: u64,
    pub split: Option<PrimeSplit>,
}

impl GroupDescriptor {
    pub fn order(&self) -> u64 {
        self.m * self.tag.order()
    }

    /// Generator matrices: those of G, then the scalar `ζ_m · I` when
    /// `m > 1`.
    pub fn generator_matrices(&self) -> Result<GeneratorSet> {
        let mut gens = match self.tag {
            GroupTag::Cyclic { p: 1, .. } => Vec::new(),
            GroupTag::Cyclic { p, q } => vec![Generator::diag_root(p, 1, q)],
            GroupTag::BinaryDihedral { n } => generators::binary_dihedral(n),
            GroupTag::BinaryTetrahedral => vec![
                Generator::Exact(generators::polyhedral_first()),
                Generator::Exact(generators::tetrahedral_second()),
            ],
            GroupTag::BinaryOctahedral => vec![
                Generator::Exact(generators::polyhedral_first()),
                Generator::Exact(generators::octahedral_second()),
            ],
            GroupTag::BinaryIcosahedral => vec![
                Generator::Exact(generators::polyhedral_first()),
                Generator::Exact(generators::icosahedral_second()),
            ],
            GroupTag::DPrime { .. } | GroupTag::TPrime { .. } => {
                return Err(Error::UnsupportedFamily(format!(
                    "no matrix representation is provided for {self}"
                )))
            }
        };
        if self.m > 1 {
            gens.push(Generator::diag_root(self.m, 1, 1));
        }
        Ok(GeneratorSet::new(gens))
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m > 1 {
            write!(f, "Z/{} x ", self.m)?;
        }
        match self.tag {
            GroupTag::Cyclic { p, q } => write!(f, "Z/{p} (acting with weights 1, {q})"),
            GroupTag::BinaryDihedral { n } => write!(f, "D*_{}", 4 * n),
            GroupTag::DPrime { .. } => write!(f, "D'_{}", self.tag.order()),
            GroupTag::TPrime { .. } => write!(f, "T'_{}", self.tag.order()),
            other => write!(f, "{}", other.short_name()),
        }
    }
}

impl Serialize for GroupDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            family: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            p: Option<u64>,
            #[serde(skip_serializing_if = "Option::is_none")]
            q: Option<u64>,
            #[serde(skip_serializing_if = "Option::is_none")]
            n: Option<u64>,
            m: u64,
            order: u64,
            #[serde(skip_serializing_if = "Option::is_none")]
            split: Option<PrimeSplit>,
        }
        let (p, q, n) = match self.tag {
            GroupTag::Cyclic { p, q } => (Some(p), Some(q), None),
            GroupTag::BinaryDihedral { n } => (None, None, Some(n)),
            GroupTag::DPrime { p, .. } => (Some(p), None, None),
            _ => (None, None, None),
        };
        Out {
            family: self.tag.short_name(),
            p,
            q,
            n,
            m: self.m,
            order: self.order(),
            split: self.split,
        }
        .serialize(s)
    }
}

fn valuation(mut x: u64, prime: u64) -> (u32, u64) {
    let mut k = 0;
    while x.is_multiple_of(prime) {
        x /= prime;
        k += 1;
    }
    (k, x)
}

/// Identifies π₁ from the family and the node weight `-b`.
pub fn group_from_seifert(family: &Family, b: i64) -> Result<GroupDescriptor> {
    let formula_m = match *family {
        Family::NotFinite => {
            return Err(Error::InfiniteFundamentalGroup(
                "the link has infinite fundamental group".into(),
            ))
        }
        Family::Lens { p, q } => {
            return Ok(GroupDescriptor {
                tag: GroupTag::Cyclic {
                    p: p as u64,
                    q: q as u64,
                },
                m: 1,
                split: None,
            })
        }
        Family::Dihedral { p, q } => (b - 1) * p - q,
        Family::Tetrahedral { q1, q2 } => 6 * b - 3 - 2 * q1 - 2 * q2,
        Family::Octahedral { q1, q2 } => 12 * b - 6 - 4 * q1 - 3 * q2,
        Family::Icosahedral { q1, q2 } => 30 * b - 15 - 10 * q1 - 6 * q2,
    };
    if formula_m <= 0 {
        return Err(Error::NotSingularityLink(format!(
            "Euler number is not negative (m = {formula_m})"
        )));
    }
    let m = formula_m as u64;
    let out = match *family {
        Family::Dihedral { p, .. } if m.is_multiple_of(2) => {
            let (k, odd) = valuation(m, 2);
            GroupDescriptor {
                tag: GroupTag::DPrime { k, p: p as u64 },
                m: odd,
                split: Some(PrimeSplit {
                    m_formula: m,
                    prime: 2,
                    valuation: k,
                    cofactor: odd,
                }),
            }
        }
        Family::Dihedral { p, .. } => GroupDescriptor {
            tag: GroupTag::BinaryDihedral { n: p as u64 },
            m,
            split: None,
        },
        Family::Tetrahedral { .. } if m.is_multiple_of(3) => {
            let (k, rest) = valuation(m, 3);
            GroupDescriptor {
                tag: GroupTag::TPrime { k: k + 1 },
                m: rest,
                split: Some(PrimeSplit {
                    m_formula: m,
                    prime: 3,
                    valuation: k,
                    cofactor: rest,
                }),
            }
        }
        Family::Tetrahedral { .. } => GroupDescriptor {
            tag: GroupTag::BinaryTetrahedral,
            m,
            split: None,
        },
        Family::Octahedral { .. } => GroupDescriptor {
            tag: GroupTag::BinaryOctahedral,
            m,
            split: None,
        },
        Family::Icosahedral { .. } => GroupDescriptor {
            tag: GroupTag::BinaryIcosahedral,
            m,
            split: None,
        },
        Family::Lens { .. } | Family::NotFinite => unreachable!("handled above"),
    };
    Ok(out)
}
