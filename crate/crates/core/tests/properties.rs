use moment_angle::hochster::{betti_table, parity_identity, support_bound};
use moment_angle::macx::{poincare_generalized, poincare_rzk, poincare_zk, DegreeVector};
use moment_angle::oracle::{build_complex, CellModel};
use moment_angle::{random_complex, FieldTag, SimplicialComplex, Subset};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn complex(m: usize, seed: u64) -> SimplicialComplex {
    random_complex(m, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

fn field() -> impl Strategy<Value = FieldTag> {
    prop_oneof![Just(FieldTag::Gf2), Just(FieldTag::Rational)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn betti_numbers_follow_relabeling(m in 1usize..=6, seed: u64, field in field()) {
        let k = complex(m, seed);
        let mut perm: Vec<usize> = (1..=m).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
        let moved = k.relabel(&perm).unwrap();
        let before = betti_table(&k, field);
        let after = betti_table(&moved, field);
        prop_assert_eq!(before.entries().count(), after.entries().count());
        for (i, a, beta) in before.entries() {
            let image = Subset::from_elements(m, &a.iter().map(|e| perm[e - 1]).collect::<Vec<_>>()).unwrap();
            prop_assert_eq!(after.get(i, image), beta);
        }
    }

    #[test]
    fn parity_and_support_bound_hold(m in 1usize..=6, seed: u64, field in field()) {
        let k = complex(m, seed);
        prop_assert!(parity_identity(&k, field).holds);
        let bound = support_bound(&k, field);
        prop_assert!(bound.holds);
        prop_assert!(bound.lhs <= bound.rhs);
    }

    #[test]
    fn euler_characteristics_match_cell_counts(m in 1usize..=6, seed: u64, field in field()) {
        let k = complex(m, seed);
        // Interval cells: each face σ contributes 2^(m-|σ|) cells of dimension |σ|.
        let real: i64 = k.faces().map(|s| if s.len() % 2 == 0 { 1 } else { -1 } << (m - s.len())).sum();
        // Disk cells: every coordinate outside the top set contributes 1 - 1 = 0.
        let full = i64::from(k.contains(Subset::full(m)));
        prop_assert_eq!(poincare_rzk(&k, field).euler_characteristic(), real);
        prop_assert_eq!(poincare_zk(&k, field).euler_characteristic(), full);
        prop_assert_eq!(build_complex(&k, CellModel::Interval, field).unwrap().euler_characteristic(), real);
        prop_assert_eq!(build_complex(&k, CellModel::Disk2, field).unwrap().euler_characteristic(), full);
    }

    #[test]
    fn euler_characteristic_ignores_the_field(m in 1usize..=6, seed: u64) {
        let k = complex(m, seed);
        prop_assert_eq!(
            poincare_zk(&k, FieldTag::Gf2).euler_characteristic(),
            poincare_zk(&k, FieldTag::Rational).euler_characteristic()
        );
        prop_assert!(poincare_zk(&k, FieldTag::Gf2).total_dim() >= poincare_zk(&k, FieldTag::Rational).total_dim());
    }

    #[test]
    fn unit_kappa_recovers_the_torus_case(m in 1usize..=6, seed: u64, field in field()) {
        let k = complex(m, seed);
        let t = betti_table(&k, field);
        prop_assert_eq!(poincare_generalized(&t, &DegreeVector::constant(m, 1)).unwrap(), poincare_zk(&k, field));
        prop_assert_eq!(poincare_generalized(&t, &DegreeVector::constant(m, 0)).unwrap(), poincare_rzk(&k, field));
    }
}

#[test]
fn full_simplex_has_trivial_betti_table() {
    for m in 1..=6 {
        let k = SimplicialComplex::simplex(m).unwrap();
        for field in FieldTag::ALL {
            let t = betti_table(&k, field);
            assert_eq!(t.total(), 1);
            assert_eq!(t.get(0, Subset::from_mask(0)), 1);
        }
    }
}
