//! End-to-end acceptance checks, one test per criterion.

use tabula::acceptance::{self, Outcome};

fn report(outcome: Outcome) {
    println!("{outcome}");
    assert!(
        outcome.pass,
        "criterion {} failed: {}",
        outcome.id, outcome.name
    );
}

#[test]
fn c01_verlinde_validity() {
    report(acceptance::verlinde_validity());
}

#[test]
fn c02_top_element_identities() {
    report(acceptance::top_element_identities());
}

#[test]
fn c03_v3_to_v2_map() {
    report(acceptance::v3_to_v2_map());
}

#[test]
fn c04_planar_associativity() {
    report(acceptance::planar_associativity());
}

#[test]
fn c05_tabular_axioms() {
    report(acceptance::tabular_axioms());
}

#[test]
fn c06_identity_traces() {
    report(acceptance::identity_traces());
}

#[test]
fn c07_exposed_ranks() {
    report(acceptance::exposed_ranks());
}

#[test]
fn c08_dihedral_admissible_count() {
    report(acceptance::dihedral_admissible_count());
}

#[test]
fn c09_canonical_bases() {
    report(acceptance::canonical_bases());
}

#[test]
fn c10_embeddings() {
    report(acceptance::embeddings());
}

#[test]
fn c11_omega_invariance() {
    report(acceptance::omega_invariance());
}

#[test]
fn c12_bilinear_form() {
    report(acceptance::bilinear_form());
}

#[test]
fn c13_kl_conjecture() {
    report(acceptance::kl_conjecture());
}

#[test]
fn c14_tensor_and_exposed() {
    report(acceptance::tensor_and_exposed());
}
