//! Exhaustive sweeps of the hypothesis verification and the dimension
//! identities over whole Weyl groups of small models.

use zorbit_core::models::{lie_basis, GroupTag};
use zorbit_core::orbits::orbit_stats;
use zorbit_core::resolve::{dim_h_mod_bh, fix_representative, length_identity};
use zorbit_core::scalar::Field;
use zorbit_core::verify::{exhaustive_hypotheses, parallel_map, weyl_elements};
use zorbit_core::weyl::{type_length, u0, Family, ModelSpec};

fn spec(f: Family, n: usize, r: usize) -> ModelSpec {
    ModelSpec::new(f, n, r).unwrap()
}

#[test]
fn all_hypotheses_hold_a41() {
    let s = spec(Family::A, 4, 1);
    for rep in exhaustive_hypotheses(&s, 1, 8, 2).unwrap() {
        assert!(rep.all_hypotheses_hold(), "v = {}", rep.v);
        assert!(rep.condition_a && rep.condition_b);
    }
}

#[test]
fn all_hypotheses_hold_d62() {
    let s = spec(Family::D, 6, 2);
    for rep in exhaustive_hypotheses(&s, 1, 8, 2).unwrap() {
        assert!(rep.all_hypotheses_hold(), "v = {}", rep.v);
    }
}

#[test]
fn all_hypotheses_hold_b52() {
    let s = spec(Family::B, 5, 2);
    for rep in exhaustive_hypotheses(&s, 1, 8, 2).unwrap() {
        assert!(rep.all_hypotheses_hold(), "v = {}", rep.v);
    }
}

#[test]
fn type_c_reports_carry_the_caveat() {
    let s = spec(Family::C, 6, 1);
    for rep in exhaustive_hypotheses(&s, 1, 4, 2).unwrap() {
        assert!(rep.hypotheses.is_none());
        assert!(rep.caveat.is_some());
        assert!(rep.condition_a && rep.condition_b, "v = {}", rep.v);
    }
}

#[test]
fn length_identities_exhaustive() {
    // the corrected representative satisfies the symmetric-subgroup length
    // identity, with both sides equal to the middle longest length
    for s in [
        spec(Family::A, 4, 1),
        spec(Family::A, 5, 2),
        spec(Family::B, 5, 2),
        spec(Family::D, 6, 2),
    ] {
        let len_u0 = type_length(&u0(&s), s.middle_kind()).unwrap();
        for v in weyl_elements(&s) {
            let (_, w) = fix_representative(&v, &s).unwrap();
            let li = length_identity(&w, &s).unwrap();
            assert_eq!(li.len_u0, len_u0);
            assert_eq!(
                li.len_tau as i64 - (li.len_tau_theta / 2) as i64,
                len_u0 as i64,
                "v = {v} in {s}"
            );
        }
    }
}

#[test]
fn h_mod_bh_oracle_matches_closed_forms() {
    // type A gives r choose 2, types B and D give (r/2)^2
    for (s, expected) in [
        (spec(Family::A, 4, 1), 0),
        (spec(Family::A, 5, 2), 1),
        (spec(Family::A, 6, 3), 3),
        (spec(Family::B, 5, 2), 1),
        (spec(Family::B, 9, 4), 4),
        (spec(Family::D, 6, 2), 1),
        (spec(Family::D, 8, 4), 4),
    ] {
        assert_eq!(dim_h_mod_bh(&s).unwrap(), expected, "{s}");
    }
}

#[test]
fn z_mod_b_equals_middle_longest_length() {
    // dim Z/(Z cap B) - dim H/B_H = l(u0) on every small model
    for s in [
        spec(Family::A, 4, 1),
        spec(Family::A, 5, 2),
        spec(Family::B, 5, 2),
        spec(Family::C, 6, 1),
        spec(Family::D, 6, 2),
    ] {
        let lie_z = lie_basis(&GroupTag::Z, &s, Field::Q).unwrap();
        let lie_b = lie_basis(&GroupTag::Borel, &s, Field::Q).unwrap();
        let z_mod_b = lie_z.dim() - lie_z.intersect(&lie_b).unwrap().dim();
        let dh = dim_h_mod_bh(&s).unwrap();
        let lu = type_length(&u0(&s), s.middle_kind()).unwrap();
        assert_eq!(z_mod_b - dh, lu, "{s}");
    }
}

#[test]
fn middle_statistic_is_preserved_by_correction() {
    let s = spec(Family::D, 8, 2);
    let vs = weyl_elements(&s);
    let results = parallel_map(vs, 2, |v| {
        let (_, w) = fix_representative(v, &s).unwrap();
        orbit_stats(v, &s).unwrap().s_v == orbit_stats(&w, &s).unwrap().s_v
    });
    assert!(results.into_iter().all(|ok| ok));
}
