use std::collections::BTreeMap;

use super::RelationSet;
use crate::exactmath::{Exponent2, MultiPoly};
use crate::invariants::exponents_of_weighted_degree;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    /// Keeps the smaller index as root, so roots are the lexicographically
    /// largest members when indices follow descending lex order.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Binomial relations `x^α - x^β` among monomials `x_i = u^{a_i} v^{b_i}`.
///
/// Works one weighted degree at a time (the weight of `x_i` is `a_i +
/// b_i`). Monomials with the same image in ℕ² form a fiber; two of them
/// are already equal modulo the relations found so far iff they are
/// connected by moves `α → α - γ + δ` with `x^γ - x^δ` a known relation.
/// Each extra connected component of a fiber contributes one new binomial.
///
/// The default bound is twice the largest generator degree. For the
/// Hilbert basis of a cyclic quotient every generator has degree at most
/// `p`, and the ideal is generated by binomials of degree two in the
/// generators, so this bound is enough to find a generating set.
pub fn monomial_relations(gens: &[Exponent2], degree_bound: Option<u32>) -> RelationSet {
    let weights: Vec<u32> = gens.iter().map(|(a, b)| a + b).collect();
    let bound = degree_bound.unwrap_or_else(|| 2 * weights.iter().copied().max().unwrap_or(0));
    let mut moves: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    let mut relations = Vec::new();
    if weights.contains(&0) {
        return RelationSet {
            relations,
            weights,
            degree_bound: bound,
            complete_up_to_bound: false,
        };
    }
    for d in 1..=bound {
        let monos = exponents_of_weighted_degree(&weights, d);
        let mut fibers: BTreeMap<(u64, u64), Vec<usize>> = BTreeMap::new();
        for (k, alpha) in monos.iter().enumerate() {
            let img = alpha.iter().zip(gens).fold((0u64, 0u64), |(x, y), (&e, &(a, b))| {
                (x + u64::from(e) * u64::from(a), y + u64::from(e) * u64::from(b))
            });
            fibers.entry(img).or_default().push(k);
        }
        let position: BTreeMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(k, a)| (a, k)).collect();
        let mut uf = UnionFind::new(monos.len());
        let mut new_moves = Vec::new();
        for members in fibers.values().filter(|m| m.len() > 1) {
            for &k in members {
                let alpha = &monos[k];
                for (g, h) in moves.iter().flat_map(|(g, h)| [(g, h), (h, g)]) {
                    if g.iter().zip(alpha).all(|(x, y)| x <= y) {
                        let beta: Vec<u32> = alpha.iter().zip(g).zip(h).map(|((a, x), y)| a - x + y).collect();
                        uf.union(k, position[&beta]);
                    }
                }
            }
            let mut roots: Vec<usize> = members.iter().map(|&k| uf.find(k)).collect();
            roots.sort_unstable();
            roots.dedup();
            for &r in &roots[1..] {
                new_moves.push((monos[roots[0]].clone(), monos[r].clone()));
                uf.union(roots[0], r);
            }
        }
        for (a, b) in new_moves {
            relations.push(MultiPoly::binomial(weights.clone(), a.clone(), b.clone()).normalized());
            moves.push((a, b));
        }
    }
    RelationSet {
        relations,
        weights,
        degree_bound: bound,
        complete_up_to_bound: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::BivariatePoly;
    use crate::invariants::cyclic_invariant_generators;
    use crate::relations::verify_relation;

    fn setup(p: i64, q: i64) -> (Vec<Exponent2>, Vec<BivariatePoly>, RelationSet) {
        let g = cyclic_invariant_generators(p, q).unwrap();
        let polys = g.iter().map(|&(a, b)| BivariatePoly::uv_power(a, b)).collect();
        let rels = monomial_relations(&g, None);
        (g, polys, rels)
    }

    #[test]
    fn a1_has_one_relation() {
        let (_, polys, rels) = setup(2, 1);
        assert_eq!(rels.relations.len(), 1);
        assert_eq!(rels.relations[0].to_string(), "x1*x3 - x2^2");
        assert!(verify_relation(&rels.relations[0], &polys));
    }

    #[test]
    fn five_two() {
        let (_, polys, rels) = setup(5, 2);
        let w = rels.weights.clone();
        let zw2_xy = MultiPoly::parse("x2*x3^2 - x1*x4", w.clone()).unwrap().normalized();
        assert!(rels.relations.contains(&zw2_xy));
        let z5 = MultiPoly::parse("x2^5 - x1^3*x4", w).unwrap();
        assert!(verify_relation(&z5, &polys));
        for r in &rels.relations {
            assert!(verify_relation(r, &polys));
            assert!(r.is_weighted_homogeneous());
        }
    }

    #[test]
    fn relation_count_matches_determinantal_formula() {
        // the ideal of a cyclic quotient of embedding dimension e is minimally
        // generated by (e-1)(e-2)/2 binomials
        for (p, q) in [(5, 2), (7, 3), (7, 2), (6, 1), (11, 4), (13, 5), (4, 3)] {
            let (g, _, rels) = setup(p, q);
            let e = g.len();
            assert_eq!(rels.relations.len(), (e - 1) * (e - 2) / 2, "({p},{q})");
        }
    }
}
