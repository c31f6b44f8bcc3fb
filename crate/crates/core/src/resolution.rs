//! Laufer's computation sequence for the fundamental cycle, and the
//! invariants read off from it for rational singularities.

use serde::Serialize;

use crate::linkdata::{hj_expand, negdef_check, Family, PlumbingGraph};
use crate::{Error, Result};

/// Multiplicities of a cycle `Z = Σ m_i E_i`, indexed by graph vertex.
pub type Cycle = Vec<i64>;

/// Which vertex to add when several have `Z·E_i > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    Lowest,
    Highest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub rational: bool,
    pub multiplicity: i64,
    pub embedding_dimension: i64,
    pub fundamental_cycle: Cycle,
    pub arithmetic_genus: i64,
}

pub fn fundamental_cycle(g: &PlumbingGraph) -> Result<Cycle> {
    fundamental_cycle_with(g, TieBreak::Lowest)
}

/// Starts from the reduced cycle on all vertices and adds `E_i` while some
/// `Z·E_i > 0`. Terminates because the form is negative definite.
pub fn fundamental_cycle_with(g: &PlumbingGraph, tie: TieBreak) -> Result<Cycle> {
    if g.is_empty() {
        return Err(Error::InvalidInput("empty plumbing graph".into()));
    }
    if !negdef_check(g) {
        return Err(Error::NotSingularityLink(
            "intersection form is not negative definite".into(),
        ));
    }
    let m = g.intersection_matrix();
    let mut z = vec![1i64; g.len()];
    loop {
        let dots = m.apply(&z);
        let pick = match tie {
            TieBreak::Lowest => dots.iter().position(|&d| d > 0),
            TieBreak::Highest => dots.iter().rposition(|&d| d > 0),
        };
        match pick {
            Some(i) => z[i] += 1,
            None => return Ok(z),
        }
    }
}

/// `p_a(Z) = 1 + (Z² + Z·K)/2` with `K·E_i = -e_i - 2`; rational iff 0.
pub fn rationality_and_genus(g: &PlumbingGraph, z: &[i64]) -> (i64, bool) {
    let m = g.intersection_matrix();
    let z2 = m.self_intersection(z);
    let zk: i64 = g.weights.iter().zip(z).map(|(e, m)| (-e - 2) * m).sum();
    let pa = 1 + (z2 + zk) / 2;
    (pa, pa == 0)
}

pub fn multiplicity_and_embdim(g: &PlumbingGraph) -> Result<SingularityReport> {
    let z = fundamental_cycle(g)?;
    let (pa, rational) = rationality_and_genus(g, &z);
    let multiplicity = -g.intersection_matrix().self_intersection(&z);
    let embedding_dimension = if multiplicity <= 1 { 2 } else { multiplicity + 1 };
    Ok(SingularityReport {
        rational,
        multiplicity,
        embedding_dimension,
        fundamental_cycle: z,
        arithmetic_genus: pa,
    })
}

/// Multiplicity from the per-family formulas, without running Laufer.
pub fn closed_form_multiplicity(family: &Family, b: i64) -> Result<i64> {
    let out_of_table = || Error::InvalidInput(format!("no multiplicity formula for {family:?} with b = {b}"));
    let m = match *family {
        Family::Lens { p: 1, .. } => 1,
        Family::Lens { p, q } => {
            let a = hj_expand(p, q)?;
            -2 * (a.len() as i64 - 1) + a.iter().sum::<i64>()
        }
        Family::Dihedral { p, q } => {
            let a = hj_expand(p, q)?;
            let k = a.len() as i64;
            let sum: i64 = a.iter().sum();
            match b {
                b if b > 2 => -2 * k + b + sum,
                2 => {
                    let l = a.iter().take_while(|&&x| x == 2).count();
                    if l > 0 {
                        -2 * (k - 1) + 2 * l as i64 + a[l..].iter().sum::<i64>()
                    } else {
                        -2 * (k - 1) + sum
                    }
                }
                _ => return Err(out_of_table()),
            }
        }
        Family::Tetrahedral { q1, q2 } if b >= 2 => match (q1, q2) {
            (1, 1) => 2 + b,
            (1, 2) | (2, 1) => 1 + b,
            (2, 2) => b,
            _ => return Err(out_of_table()),
        },
        Family::Octahedral { q1, q2 } if b >= 2 => match (q1, q2) {
            (1, 1) => 3 + b,
            (1, 3) => 1 + b,
            (2, 1) => 2 + b,
            (2, 3) => b,
            _ => return Err(out_of_table()),
        },
        Family::Icosahedral { q1, q2 } if b >= 2 => match (q1, q2) {
            (1, 1) => 4 + b,
            (2, 1) => 3 + b,
            (1, 2) => 2 + b,
            (2, 2) => 1 + b,
            (1, 3) => 2 + b,
            (2, 3) => 1 + b,
            (1, 4) => 1 + b,
            (2, 4) => b,
            _ => return Err(out_of_table()),
        },
        _ => return Err(out_of_table()),
    };
    Ok(m)
}
