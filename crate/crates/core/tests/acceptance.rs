//! Acceptance battery: one test per criterion, each an exact identity or an
//! exhaustive sweep. Every test prints its pass/fail line so the suite reads
//! as a checklist under `--nocapture`.

use zorbit_core::rng::DEFAULT_SEED;
use zorbit_core::verify::*;

fn check(result: CriterionResult) {
    println!(
        "criterion {:>2} [{}]: {} -- {}",
        result.id,
        result.name,
        if result.pass { "PASS" } else { "FAIL" },
        result.detail
    );
    assert!(
        result.pass,
        "criterion {} failed: {}",
        result.id, result.detail
    );
}

#[test]
fn criterion_01_orbit_hook_identity() {
    check(criterion_orbit_hook_identity());
}

#[test]
fn criterion_02_tableau_goldens() {
    check(criterion_tableau_goldens());
}

#[test]
fn criterion_03_dimension_formula() {
    check(criterion_dimension_formula(2));
}

#[test]
fn criterion_04_corrected_representatives() {
    check(criterion_corrected_representatives(2));
}

#[test]
fn criterion_05_length_cross_validation() {
    check(criterion_length_cross_validation());
}

#[test]
fn criterion_06_permutation_identities() {
    check(criterion_permutation_identities());
}

#[test]
fn criterion_07_dominance_characters() {
    check(criterion_dominance_characters());
}

#[test]
fn criterion_08_counterexample() {
    check(criterion_counterexample());
}

#[test]
fn criterion_09_characteristic_two() {
    check(criterion_characteristic_two(DEFAULT_SEED));
}

#[test]
fn criterion_10_lie_dimension_constancy() {
    check(criterion_lie_dimension_constancy(DEFAULT_SEED));
}
