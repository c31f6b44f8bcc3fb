//! Property tests across module boundaries.

mod common;

use proptest::prelude::*;

use singmap::exactmath::{BivariatePoly, ExactMatrix, ExactScalar, MultiPoly};
use singmap::groups::{group_closure, root_of_unity, GroupDescriptor, GroupTag, CLOSURE_CAP};
use singmap::invariants::{cyclic_invariant_generators, semigroup_member};
use singmap::linkdata::{finite_pi1_family, negdef_check, seifert_to_plumbing, Family, Link, SeifertData};
use singmap::pipeline::{map, MapOptions};
use singmap::relations::{bounded_degree_relations, monomial_relations, verify_relation};
use singmap::resolution::{closed_form_multiplicity, fundamental_cycle};

fn gaussian() -> impl Strategy<Value = ExactScalar> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(re, im, d)| {
        &ExactScalar::from_ratio(re, d) + &(&ExactScalar::i() * &ExactScalar::from_int(im))
    })
}

fn homogeneous(degree: u32) -> impl Strategy<Value = BivariatePoly> {
    proptest::collection::vec(gaussian(), degree as usize + 1).prop_map(move |cs| {
        BivariatePoly::from_terms(cs.into_iter().enumerate().map(|(k, c)| (c, k as u32, degree - k as u32)))
    })
}

fn matrix2() -> impl Strategy<Value = ExactMatrix> {
    (gaussian(), gaussian(), gaussian(), gaussian()).prop_map(|(a, b, c, d)| ExactMatrix::mat2(a, b, c, d))
}

fn coprime_pair(max_p: i64) -> impl Strategy<Value = (i64, i64)> {
    (2..=max_p)
        .prop_flat_map(|p| (Just(p), 1..p))
        .prop_filter("coprime", |&(p, q)| num_integer::gcd(p, q) == 1)
}

fn seifert() -> impl Strategy<Value = SeifertData> {
    (2i64..=5, proptest::collection::vec(coprime_pair(9), 3))
        .prop_map(|(b, fibers)| SeifertData::new(b, &fibers).expect("normal form"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn substitution_is_multiplicative(p in (1u32..=4).prop_flat_map(homogeneous), q in (1u32..=4).prop_flat_map(homogeneous), m in matrix2()) {
        let lhs = (&p * &q).substitute_linear(&m);
        let rhs = &p.substitute_linear(&m) * &q.substitute_linear(&m);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nullspace_is_kernel(rows in 1usize..5, cols in 1usize..6, seed in proptest::collection::vec(-3i64..=3, 30)) {
        let mut a = ExactMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                a.set(r, c, ExactScalar::from_int(seed[r * cols + c]));
            }
        }
        let kernel = a.nullspace();
        prop_assert_eq!(kernel.len(), cols - a.rank());
        for v in &kernel {
            prop_assert!(a.mul_vec(v).iter().all(ExactScalar::is_zero));
        }
    }

    #[test]
    fn star_graphs_are_minimal_and_definite_iff_e_negative(s in seifert()) {
        let (_, e) = s.euler_invariants();
        let g = seifert_to_plumbing(&Link::Seifert(s));
        prop_assert!(g.weights.iter().all(|&w| w <= -2));
        prop_assert_eq!(negdef_check(&g), e < num_rational::BigRational::from_integer(0.into()));
    }

    #[test]
    fn fundamental_cycle_dominates_reduced_cycle(s in seifert()) {
        let link = Link::Seifert(s);
        let g = seifert_to_plumbing(&link);
        prop_assume!(negdef_check(&g));
        let z = fundamental_cycle(&g).unwrap();
        prop_assert!(z.iter().all(|&x| x >= 1));
        let m = g.intersection_matrix();
        prop_assert!(m.apply(&z).iter().all(|&x| x <= 0));
    }

    #[test]
    fn cyclic_generators_are_invariant_and_irreducible((p, q) in coprime_pair(60)) {
        let gens = cyclic_invariant_generators(p, q).unwrap();
        for (k, &(a, b)) in gens.iter().enumerate() {
            prop_assert_eq!((i64::from(a) + q * i64::from(b)) % p, 0);
            let others: Vec<_> = gens.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &g)| g).collect();
            prop_assert!(!semigroup_member((a, b), &others));
        }
    }

    #[test]
    fn cyclic_relations_are_sound_and_homogeneous((p, q) in coprime_pair(16)) {
        let gens = cyclic_invariant_generators(p, q).unwrap();
        let polys: Vec<BivariatePoly> = gens.iter().map(|&(a, b)| BivariatePoly::uv_power(a, b)).collect();
        for r in monomial_relations(&gens, None).relations {
            prop_assert!(r.is_weighted_homogeneous());
            prop_assert!(verify_relation(&r, &polys));
        }
    }

    #[test]
    fn larger_bound_only_adds_relations((p, q) in coprime_pair(7), extra in 1u32..6) {
        let polys: Vec<BivariatePoly> = cyclic_invariant_generators(p, q)
            .unwrap()
            .into_iter()
            .map(|(a, b)| BivariatePoly::uv_power(a, b))
            .collect();
        let bound = 2 * p as u32;
        let small = bounded_degree_relations(&polys, bound).unwrap();
        let large = bounded_degree_relations(&polys, bound + extra).unwrap();
        prop_assert_eq!(&large.relations[..small.relations.len()], &small.relations[..]);
        for r in &large.relations {
            prop_assert!(r.is_weighted_homogeneous());
            prop_assert!(verify_relation(r, &polys));
        }
    }
}

#[test]
fn embedding_dimension_equals_generator_count_for_lens_spaces() {
    for p in 2..=12i64 {
        for q in (1..p).filter(|&q| num_integer::gcd(p, q) == 1) {
            let e = cyclic_invariant_generators(p, q).unwrap().len() as i64;
            let mult = closed_form_multiplicity(&Family::Lens { p, q }, 0).unwrap();
            assert_eq!(e, mult + 1, "({p},{q})");
        }
    }
}

#[test]
fn polyhedral_closures_lie_in_su2() {
    for tag in [GroupTag::BinaryTetrahedral, GroupTag::BinaryOctahedral, GroupTag::BinaryIcosahedral] {
        let gens = GroupDescriptor { tag, m: 1, split: None }
            .generator_matrices()
            .unwrap()
            .exact_matrices()
            .unwrap();
        let all = group_closure(&gens, CLOSURE_CAP).unwrap();
        assert_eq!(all.len() as u64, tag.order());
        assert!(all.iter().all(|m| m.determinant().is_one()), "{tag:?}");
    }
}

#[test]
fn binary_dihedral_eight_relations() {
    let gens = GroupDescriptor { tag: GroupTag::BinaryDihedral { n: 2 }, m: 1, split: None }
        .generator_matrices()
        .unwrap()
        .exact_matrices()
        .unwrap();
    let (x, y) = (&gens[0], &gens[1]);
    let minus_one = ExactMatrix::identity(2).scale(&ExactScalar::from_int(-1));
    let xy = x * y;
    assert_eq!(x * x, minus_one);
    assert_eq!(y * y, minus_one);
    assert_eq!(&xy * &xy, minus_one);
}

#[test]
fn scalar_factor_commutes_with_polyhedral_generators() {
    for m in [1u64, 2, 3, 4, 6, 8, 12, 24] {
        let Some(z) = root_of_unity(m, 1) else { continue };
        let d = ExactMatrix::diag2(z.clone(), z);
        for tag in [GroupTag::BinaryTetrahedral, GroupTag::BinaryOctahedral, GroupTag::BinaryIcosahedral] {
            let gens = GroupDescriptor { tag, m: 1, split: None }
                .generator_matrices()
                .unwrap()
                .exact_matrices()
                .unwrap();
            for g in gens {
                assert_eq!(&d * &g, &g * &d, "m = {m}, {tag:?}");
            }
        }
    }
}

#[test]
fn printed_cyclic_relations_vanish() {
    // the relations listed for (5,2), written in generator order
    let polys: Vec<BivariatePoly> = ["u^5", "u^3*v", "u*v^2", "v^5"].iter().map(|s| s.parse().unwrap()).collect();
    for r in ["x2^5 - x1^3*x4", "x3^5 - x1*x4^2", "x2^4*x3^3 - x1^3*x4^2", "x2^2*x3^4 - x1^2*x4^2"] {
        let r = MultiPoly::parse(r, vec![5, 4, 3, 5]).unwrap();
        assert!(verify_relation(&r, &polys));
    }
}

#[test]
fn maps_match_embedding_dimension_on_small_sweep() {
    let opts = MapOptions {
        max_degree: Some(0),
        degree_cap: 0,
    };
    let mut checked = 0;
    let fibers: Vec<(i64, i64)> = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4)].to_vec();
    for b in 2..=3 {
        for (k, &f3) in fibers.iter().enumerate() {
            for &f2 in &fibers[..=k] {
                let s = SeifertData::new(b, &[(2, 1), f2, f3]).unwrap();
                let link = Link::Seifert(s);
                let family = finite_pi1_family(&link);
                if !family.is_finite() {
                    continue;
                }
                let descriptor = singmap::linkdata::LinkDescriptor::Seifert {
                    b,
                    fibers: vec![(2, 1), f2, f3],
                };
                match map(&descriptor, &opts) {
                    Ok(out) => {
                        let basis = out.map.unwrap();
                        let embdim = out.singularity.unwrap().embedding_dimension as usize;
                        assert_eq!(basis.generators.len(), embdim, "{link}");
                        assert!(basis.warning.is_none(), "{link}");
                        checked += 1;
                    }
                    Err(e) => assert_eq!(e.exit_code(), 5, "{link}: {e}"),
                }
            }
        }
    }
    assert!(checked > 10);
}
