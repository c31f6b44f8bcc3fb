//! Self-check suites run by `singmap verify --suite NAME`.

use std::time::Instant;

use num_traits::Signed;
use serde::Serialize;

use crate::exactmath::{BivariatePoly, MultiPoly};
use crate::groups::{group_closure_order, GroupDescriptor, GroupTag};
use crate::invariants::klein;
use crate::linkdata::{
    finite_pi1_family, negdef_check, seifert_to_plumbing, Family, Link, LinkDescriptor, SeifertData,
};
use crate::pipeline::{map, MapOptions};
use crate::relations::{check_invariance, verify_relation};
use crate::resolution::{closed_form_multiplicity, fundamental_cycle_with, rationality_and_genus, TieBreak};
use crate::{Error, Result};

pub const SUITES: [&str; 5] = [
    "cyclic-table",
    "ade-equations",
    "multiplicity-crosscheck",
    "group-orders",
    "invariance",
];

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub total: usize,
    pub seconds: f64,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            s.push_str(&format!("[{mark}] {}", c.name));
            if !c.detail.is_empty() {
                s.push_str(&format!(" ({})", c.detail));
            }
            s.push('\n');
        }
        s.push_str(&format!(
            "{}: {}/{} passed in {:.2}s\n",
            self.suite, self.passed, self.total, self.seconds
        ));
        s
    }
}

fn case(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CaseResult {
    CaseResult {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

/// Cyclic quotients of order at most 7, one action per isomorphism class,
/// with embedding dimension and monomial map.
pub const CYCLIC_TABLE: [(i64, i64, i64, &str); 14] = [
    (2, 1, 3, "(u^2, u*v, v^2)"),
    (3, 1, 4, "(u^3, u^2*v, u*v^2, v^3)"),
    (3, 2, 3, "(u^3, u*v, v^3)"),
    (4, 1, 5, "(u^4, u^3*v, u^2*v^2, u*v^3, v^4)"),
    (4, 3, 3, "(u^4, u*v, v^4)"),
    (5, 1, 6, "(u^5, u^4*v, u^3*v^2, u^2*v^3, u*v^4, v^5)"),
    (5, 2, 4, "(u^5, u^3*v, u*v^2, v^5)"),
    (5, 4, 3, "(u^5, u*v, v^5)"),
    (6, 1, 7, "(u^6, u^5*v, u^4*v^2, u^3*v^3, u^2*v^4, u*v^5, v^6)"),
    (6, 5, 3, "(u^6, u*v, v^6)"),
    (7, 1, 8, "(u^7, u^6*v, u^5*v^2, u^4*v^3, u^3*v^4, u^2*v^5, u*v^6, v^7)"),
    (7, 2, 5, "(u^7, u^5*v, u^3*v^2, u*v^3, v^7)"),
    (7, 3, 4, "(u^7, u^4*v, u*v^2, v^7)"),
    (7, 6, 3, "(u^7, u*v, v^7)"),
];

pub fn run(name: &str) -> Result<SuiteReport> {
    let start = Instant::now();
    let cases = match name {
        "cyclic-table" => cyclic_table(),
        "ade-equations" => ade_equations(),
        "multiplicity-crosscheck" => multiplicity_crosscheck(),
        "group-orders" => group_orders(),
        "invariance" => invariance(),
        other => {
            return Err(Error::Parse(format!(
                "unknown suite {other:?}; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    let passed = cases.iter().filter(|c| c.passed).count();
    Ok(SuiteReport {
        suite: name.to_string(),
        passed,
        total: cases.len(),
        seconds: start.elapsed().as_secs_f64(),
        cases,
    })
}

fn cyclic_table() -> Vec<CaseResult> {
    let opts = MapOptions {
        max_degree: None,
        degree_cap: u32::MAX,
    };
    CYCLIC_TABLE
        .iter()
        .map(|&(p, q, embdim, expected)| {
            let name = format!("({p},{q})");
            match map(&LinkDescriptor::Lens((p, q)), &opts) {
                Ok(out) => {
                    let got = out.map.as_ref().map(|m| m.to_string()).unwrap_or_default();
                    let got_dim = out.singularity.as_ref().map_or(0, |r| r.embedding_dimension);
                    let ok = got == format!("F(u,v) = {expected}") && got_dim == embdim;
                    case(name, ok, format!("{got}, embedding dimension {got_dim}"))
                }
                Err(e) => case(name, false, e.to_string()),
            }
        })
        .collect()
}

fn ade_equations() -> Vec<CaseResult> {
    let mut out = Vec::new();
    let d_ok = (2..=5u32).all(|n| {
        let w = vec![4, 2 * n, 2 * n + 2];
        let r = MultiPoly::parse(&format!("x1*x2^2 - 4*x1^{} - x3^2", n + 1), w).expect("valid");
        verify_relation(&r, &klein::binary_dihedral(n))
    });
    out.push(case("D_n: x(y^2 - 4x^n) - z^2, n = 2..5", d_ok, ""));
    let table: [(&str, &str, [BivariatePoly; 3]); 3] = [
        ("E6", "108*x1^4 - x2^3 + x3^2", klein::binary_tetrahedral()),
        ("E7", "108*x1^3 - x1*x2^3 + x3^2", klein::binary_octahedral()),
        ("E8", "27*x1^5 + 25*s5*x2^3 + 4*x3^2", klein::binary_icosahedral()),
    ];
    for (name, rel, gens) in table {
        let w = gens.iter().map(|g| g.homogeneous_degree().expect("homogeneous")).collect();
        let r = MultiPoly::parse(rel, w).expect("valid");
        out.push(case(format!("{name}: {rel}"), verify_relation(&r, &gens), ""));
    }
    out
}

/// Every fiber triple with `p_i ≤ 7`, sorted, in normal form.
pub fn three_fiber_sweep(max_p: i64) -> Vec<[(i64, i64); 3]> {
    let fibers: Vec<(i64, i64)> = (2..=max_p)
        .flat_map(|p| (1..p).filter(move |&q| num_integer::gcd(p, q) == 1).map(move |q| (p, q)))
        .collect();
    let mut out = Vec::new();
    for i in 0..fibers.len() {
        for j in i..fibers.len() {
            for k in j..fibers.len() {
                out.push([fibers[i], fibers[j], fibers[k]]);
            }
        }
    }
    out
}

fn multiplicity_crosscheck() -> Vec<CaseResult> {
    let mut sign_ok = 0usize;
    let mut sign_total = 0usize;
    let mut sign_bad = Vec::new();
    let mut laufer_ok = 0usize;
    let mut laufer_total = 0usize;
    let mut laufer_bad = Vec::new();
    for b in 1..=5 {
        for triple in three_fiber_sweep(7) {
            let s = SeifertData::new(b, &triple).expect("normal form");
            let (_, e) = s.euler_invariants();
            let link = Link::Seifert(s);
            let g = seifert_to_plumbing(&link);
            sign_total += 1;
            if negdef_check(&g) == e.is_negative() {
                sign_ok += 1;
            } else {
                sign_bad.push(link.to_string());
            }
            let family = finite_pi1_family(&link);
            if !family.is_finite() || !e.is_negative() {
                continue;
            }
            laufer_total += 1;
            let z = fundamental_cycle_with(&g, TieBreak::Lowest).expect("negative definite");
            let mult = -g.intersection_matrix().self_intersection(&z);
            let (pa, _) = rationality_and_genus(&g, &z);
            let closed = closed_form_multiplicity(&family, b).ok();
            if closed == Some(mult) && pa == 0 {
                laufer_ok += 1;
            } else {
                laufer_bad.push(format!("{link}: Laufer {mult}, table {closed:?}, p_a {pa}"));
            }
        }
    }
    // lens spaces
    for p in 2..=7i64 {
        for q in 1..p {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let link = Link::lens(p, q).expect("coprime");
            let g = seifert_to_plumbing(&link);
            laufer_total += 1;
            let z = fundamental_cycle_with(&g, TieBreak::Lowest).expect("negative definite");
            let mult = -g.intersection_matrix().self_intersection(&z);
            let (pa, _) = rationality_and_genus(&g, &z);
            let closed = closed_form_multiplicity(&Family::Lens { p, q }, 0).ok();
            if closed == Some(mult) && pa == 0 {
                laufer_ok += 1;
            } else {
                laufer_bad.push(format!("{link}: Laufer {mult}, table {closed:?}, p_a {pa}"));
            }
        }
    }
    vec![
        case(
            format!("negative definite iff e < 0 on {sign_total} star graphs (b <= 5, p_i <= 7)"),
            sign_ok == sign_total,
            sign_bad.join("; "),
        ),
        case(
            format!("-Z^2 equals the closed form and p_a = 0 on {laufer_total} spherical links"),
            laufer_ok == laufer_total,
            laufer_bad.join("; "),
        ),
    ]
}

fn group_orders() -> Vec<CaseResult> {
    [
        ("T*", GroupTag::BinaryTetrahedral, 24),
        ("O*", GroupTag::BinaryOctahedral, 48),
        ("I*", GroupTag::BinaryIcosahedral, 120),
        ("D*_8", GroupTag::BinaryDihedral { n: 2 }, 8),
    ]
    .into_iter()
    .map(|(name, tag, expected)| {
        let d = GroupDescriptor { tag, m: 1, split: None };
        let got = d
            .generator_matrices()
            .ok()
            .and_then(|g| g.exact_matrices())
            .ok_or_else(|| "no exact generators".to_string())
            .and_then(|m| group_closure_order(&m).map_err(|e| e.to_string()));
        match got {
            Ok(n) => case(format!("|{name}| = {expected}"), n == expected, format!("closure has {n} elements")),
            Err(e) => case(format!("|{name}| = {expected}"), false, e),
        }
    })
    .collect()
}

/// A copy of `p` with the first term's `u`-exponent raised by one.
pub fn corrupt_one_exponent(p: &BivariatePoly) -> BivariatePoly {
    let terms = p.terms();
    let ((a, b), c) = terms[0];
    let shifted = BivariatePoly::monomial(c.clone(), a + 1, b);
    let original = BivariatePoly::monomial(c.clone(), a, b);
    &(p - &original) + &shifted
}

fn invariance() -> Vec<CaseResult> {
    let mut out = Vec::new();
    let groups: Vec<(String, GroupTag, [BivariatePoly; 3])> = vec![
        ("D*_8".into(), GroupTag::BinaryDihedral { n: 2 }, klein::binary_dihedral(2)),
        ("D*_12".into(), GroupTag::BinaryDihedral { n: 3 }, klein::binary_dihedral(3)),
        ("D*_16".into(), GroupTag::BinaryDihedral { n: 4 }, klein::binary_dihedral(4)),
        ("T*".into(), GroupTag::BinaryTetrahedral, klein::binary_tetrahedral()),
        ("O*".into(), GroupTag::BinaryOctahedral, klein::binary_octahedral()),
        ("I*".into(), GroupTag::BinaryIcosahedral, klein::binary_icosahedral()),
    ];
    for (name, tag, polys) in &groups {
        let gens = GroupDescriptor { tag: *tag, m: 1, split: None }
            .generator_matrices()
            .expect("binary polyhedral groups have generators");
        for (k, p) in polys.iter().enumerate() {
            out.push(case(format!("{name} invariant {} is fixed", k + 1), check_invariance(p, &gens), ""));
        }
    }
    let gens = GroupDescriptor {
        tag: GroupTag::BinaryIcosahedral,
        m: 1,
        split: None,
    }
    .generator_matrices()
    .expect("I* generators");
    let bad = corrupt_one_exponent(&klein::binary_icosahedral()[2]);
    out.push(case(
        "negative control: I* invariant 3 with one exponent changed is not fixed",
        !check_invariance(&bad, &gens),
        "",
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suites_pass() {
        for name in ["cyclic-table", "ade-equations", "group-orders", "invariance"] {
            let r = run(name).unwrap();
            assert!(r.all_passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(run("nope").unwrap_err().exit_code(), 2);
    }
}
