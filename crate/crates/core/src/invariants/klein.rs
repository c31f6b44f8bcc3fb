use crate::exactmath::BivariatePoly;

fn poly(s: &str) -> BivariatePoly {
    s.parse().expect("built-in invariant parses")
}

/// `(uv)^2`, `u^{2n} + v^{2n}`, `uv(u^{2n} - v^{2n})`: invariants of D*_{4n}.
pub fn binary_dihedral(n: u32) -> [BivariatePoly; 3] {
    let uv = BivariatePoly::uv_power(1, 1);
    let a = BivariatePoly::uv_power(2 * n, 0);
    let b = BivariatePoly::uv_power(0, 2 * n);
    [uv.pow(2), &a + &b, &uv * &(&a - &b)]
}

pub fn binary_tetrahedral() -> [BivariatePoly; 3] {
    [
        poly("u*v^5 - u^5*v"),
        poly("u^8 + v^8 + 14*u^4*v^4"),
        poly("u^12 + v^12 - 33*u^8*v^4 - 33*u^4*v^8"),
    ]
}

pub fn binary_octahedral() -> [BivariatePoly; 3] {
    [
        poly("u^10*v^2 + u^2*v^10 - 2*u^6*v^6"),
        poly("u^8 + v^8 + 14*u^4*v^4"),
        poly("34*u^5*v^13 - 34*u^13*v^5 + u^17*v - u*v^17"),
    ]
}

/// Degrees 12, 20, 30. Three terms carry exponents chosen so that each
/// polynomial is homogeneous; invariance under both generators is checked
/// in the tests below and by the invariance suite.
pub fn binary_icosahedral() -> [BivariatePoly; 3] {
    [
        poly(
            "s5*u^12 + s5*v^12 - 22*u^10*v^2 - 22*u^2*v^10 \
             - 33*s5*u^8*v^4 - 33*s5*u^4*v^8 + 44*u^6*v^6",
        ),
        poly(
            "-3*u^20 - 3*v^20 - 38*s5*u^18*v^2 - 38*s5*u^2*v^18 \
             + 57*u^16*v^4 + 57*u^4*v^16 - 456*s5*u^14*v^6 - 456*s5*u^6*v^14 \
             + 1482*u^12*v^8 + 1482*u^8*v^12 + 988*s5*u^10*v^10",
        ),
        poly(
            "225*u^29*v - 225*u*v^29 + 580*s5*u^27*v^3 - 580*s5*u^3*v^27 \
             + 15921*u^25*v^5 - 15921*u^5*v^25 - 20880*s5*u^23*v^7 + 20880*s5*u^7*v^23 \
             + 90045*u^21*v^9 - 90045*u^9*v^21 + 40020*s5*u^19*v^11 - 40020*s5*u^11*v^19 \
             + 570285*u^17*v^13 - 570285*u^13*v^17",
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{GroupDescriptor, GroupTag};

    fn fixed_by(tag: GroupTag, polys: &[BivariatePoly]) -> bool {
        let gens = GroupDescriptor { tag, m: 1, split: None }.generator_matrices().unwrap();
        polys.iter().all(|p| gens.fixes(p))
    }

    #[test]
    fn degrees() {
        let deg = |ps: [BivariatePoly; 3]| ps.map(|p| p.homogeneous_degree().unwrap());
        assert_eq!(deg(binary_tetrahedral()), [6, 8, 12]);
        assert_eq!(deg(binary_octahedral()), [12, 8, 18]);
        assert_eq!(deg(binary_icosahedral()), [12, 20, 30]);
        assert_eq!(deg(binary_dihedral(3)), [4, 6, 8]);
        assert_eq!(binary_icosahedral()[2].len(), 14);
    }

    #[test]
    fn invariance_under_generators() {
        assert!(fixed_by(GroupTag::BinaryTetrahedral, &binary_tetrahedral()));
        assert!(fixed_by(GroupTag::BinaryOctahedral, &binary_octahedral()));
        assert!(fixed_by(GroupTag::BinaryIcosahedral, &binary_icosahedral()));
        for n in 1..7 {
            assert!(fixed_by(GroupTag::BinaryDihedral { n: n as u64 }, &binary_dihedral(n)));
        }
    }

    #[test]
    fn p_d3_for_n_two() {
        assert_eq!(binary_dihedral(2)[2], poly("u^5*v - u*v^5"));
    }
}
