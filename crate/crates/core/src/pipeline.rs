//! End-to-end classification and map synthesis for one link.

use std::fmt::Write as _;

use serde::Serialize;

use crate::exactmath::BivariatePoly;
use crate::groups::{group_from_seifert, Generator, GeneratorSet, GroupDescriptor, GroupTag};
use crate::invariants::{cyclic_invariant_generators, invariant_basis, klein_invariants, monomial_in, InvariantBasis};
use crate::linkdata::{finite_pi1_family, negdef_check, seifert_to_plumbing, Family, Link, LinkDescriptor, PlumbingGraph};
use crate::relations::{
    bounded_degree_relations, check_invariance, default_degree_bound, degree_cap_from_env, monomial_relations,
    verify_relation, RelationSet,
};
use crate::resolution::{multiplicity_and_embdim, SingularityReport};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapOptions {
    /// Requested relation search bound; the family default when absent.
    pub max_degree: Option<u32>,
    /// Hard cap on the relation search bound.
    pub degree_cap: u32,
}

impl Default for MapOptions {
    fn default() -> Self {
        Self {
            max_degree: None,
            degree_cap: degree_cap_from_env(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerData {
    pub chi: String,
    pub e: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationOutput {
    pub input: LinkDescriptor,
    pub link: String,
    pub family: Family,
    pub is_image_of_finite_map: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<EulerData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDescriptor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plumbing_graph: Option<PlumbingGraph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singularity: Option<SingularityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<InvariantBasis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<RelationSet>,
}

impl ClassificationOutput {
    /// 0 for a quotient singularity, 4 when π₁ is infinite.
    pub fn exit_code(&self) -> i32 {
        if self.is_image_of_finite_map {
            0
        } else {
            4
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "link: {}", self.link);
        let _ = writeln!(s, "family: {}", self.family.name());
        if let Some(e) = &self.euler {
            let _ = writeln!(s, "orbifold Euler characteristic: {}", e.chi);
            let _ = writeln!(s, "rational Euler number: {}", e.e);
        }
        if !self.is_image_of_finite_map {
            let _ = writeln!(s, "verdict: infinite fundamental group; not the image of a finite map germ");
            return s;
        }
        if let Some(g) = &self.group {
            let _ = writeln!(s, "fundamental group: {g} (order {})", g.order());
        }
        if let Some(r) = &self.singularity {
            let _ = writeln!(
                s,
                "rational: {}, multiplicity: {}, embedding dimension: {}",
                r.rational, r.multiplicity, r.embedding_dimension
            );
            let _ = writeln!(s, "fundamental cycle: {:?}", r.fundamental_cycle);
        }
        if let Some(g) = &self.plumbing_graph {
            let _ = writeln!(s, "plumbing graph:");
            for line in g.render_tree().lines() {
                let _ = writeln!(s, "  {line}");
            }
        }
        if let Some(m) = &self.map {
            let _ = writeln!(s, "map: {m}");
            if let Some(w) = &m.warning {
                let _ = writeln!(s, "warning: {w}");
            }
        }
        if let Some(rel) = &self.relations {
            let _ = writeln!(
                s,
                "relations (weights {:?}, complete up to degree {}):",
                rel.weights, rel.degree_bound
            );
            for r in &rel.relations {
                let _ = writeln!(s, "  {r} = 0");
            }
        }
        s
    }
}

/// Family, group, plumbing graph and Laufer data. Infinite π₁ is not an
/// error here; it is reported through `is_image_of_finite_map`.
pub fn classify(input: &LinkDescriptor) -> Result<ClassificationOutput> {
    let link = input.to_link()?;
    let family = finite_pi1_family(&link);
    let euler = match &link {
        Link::Seifert(s) => {
            let (chi, e) = s.euler_invariants();
            Some(EulerData {
                chi: chi.to_string(),
                e: e.to_string(),
            })
        }
        Link::Lens { .. } => None,
    };
    let mut out = ClassificationOutput {
        input: input.clone(),
        link: link.to_string(),
        family,
        is_image_of_finite_map: family.is_finite(),
        euler,
        group: None,
        plumbing_graph: None,
        singularity: None,
        map: None,
        relations: None,
    };
    if !family.is_finite() {
        return Ok(out);
    }
    let graph = seifert_to_plumbing(&link);
    if !negdef_check(&graph) {
        return Err(Error::NotSingularityLink(format!(
            "{link}: the intersection form of the plumbing graph is not negative definite"
        )));
    }
    let b = match &link {
        Link::Seifert(s) => s.b,
        Link::Lens { .. } => 0,
    };
    out.group = Some(group_from_seifert(&family, b)?);
    out.singularity = Some(multiplicity_and_embdim(&graph)?);
    out.plumbing_graph = Some(graph);
    Ok(out)
}

/// Every generator of a cyclic or binary polyhedral action is checked
/// by substitution. A generator `Π f_i^{a_i}` of a product `ℤ/m × G` is
/// invariant when each Klein invariant `f_i` is fixed by `G` and the
/// total degree is divisible by `m`, and those two facts are what get
/// checked, which avoids substituting into polynomials of degree in the
/// hundreds.
fn check_map_invariance(basis: &InvariantBasis, group: &GroupDescriptor) -> Result<()> {
    let fail = |p: &BivariatePoly, by: String| Error::InvarianceFailure(format!("{p} is not fixed by {by}"));
    let Some(exps) = &basis.exponents else {
        let gens = group.generator_matrices()?;
        return match basis.generators.iter().find(|p| !check_invariance(p, &gens)) {
            Some(p) => Err(fail(p, group.to_string())),
            None => Ok(()),
        };
    };
    let bare = GroupDescriptor {
        tag: group.tag,
        m: 1,
        split: None,
    };
    let g_gens = bare.generator_matrices()?;
    let klein = klein_invariants(group.tag)?;
    if let Some(p) = klein.iter().find(|p| !check_invariance(p, &g_gens)) {
        return Err(fail(p, bare.to_string()));
    }
    let scalar = GeneratorSet::new(vec![Generator::diag_root(group.m, 1, 1)]);
    debug_assert!(basis.generators.iter().zip(exps).all(|(p, a)| *p == monomial_in(&klein, a)));
    for p in &basis.generators {
        if !check_invariance(p, &scalar) {
            return Err(fail(p, format!("the scalar action of Z/{}", group.m)));
        }
    }
    Ok(())
}

/// [`classify`] plus generating invariants and their verified relations.
pub fn map(input: &LinkDescriptor, opts: &MapOptions) -> Result<ClassificationOutput> {
    let mut out = classify(input)?;
    let (Some(group), Some(report)) = (&out.group, &out.singularity) else {
        return Ok(out);
    };
    let basis = invariant_basis(group, report.embedding_dimension as usize)?;
    check_map_invariance(&basis, group)?;
    let relations = match group.tag {
        GroupTag::Cyclic { p, q } => {
            let exps = cyclic_invariant_generators(p as i64, q as i64)?;
            let default = 2 * exps.iter().map(|(a, b)| a + b).max().unwrap_or(0);
            let bound = opts.max_degree.unwrap_or(default).min(opts.degree_cap);
            let rel = monomial_relations(&exps, Some(bound));
            if let Some(bad) = rel.relations.iter().find(|r| !verify_relation(r, &basis.generators)) {
                return Err(Error::RelationFailure(format!("{bad} does not vanish on the map")));
            }
            rel
        }
        _ => {
            let bound = opts
                .max_degree
                .unwrap_or_else(|| default_degree_bound(&basis.degrees))
                .min(opts.degree_cap);
            bounded_degree_relations(&basis.generators, bound)?
        }
    };
    out.map = Some(basis);
    out.relations = Some(relations);
    Ok(out)
}
