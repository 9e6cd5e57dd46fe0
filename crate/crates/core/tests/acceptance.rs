//! Acceptance gate: every numbered criterion as one test with one pass/fail
//! line. All values are exact; tolerance is exact equality.

use homcx::error::Error;
use homcx::verify;

fn gate(number: usize, name: &str) {
    let r = verify::run_check(name).expect("known check");
    println!(
        "criterion {number:2} ({name}): {} — {}",
        if r.pass { "PASS" } else { "FAIL" },
        r.detail
    );
    assert!(r.pass, "criterion {number} ({name}) failed: {}", r.detail);
}

#[test]
fn criterion_01_spheres() {
    gate(1, "spheres");
}

#[test]
fn criterion_02_even_case_cycles() {
    gate(2, "even-case-cycles");
}

#[test]
fn criterion_03_odd_case_c5_k5() {
    gate(3, "odd-case-c5-k5");
}

#[test]
fn criterion_04_sw_vanishing_c5_k5() {
    gate(4, "sw-vanishing-c5-k5");
}

#[test]
fn criterion_05_rp_heights() {
    gate(5, "rp-heights");
}

#[test]
fn criterion_06_contrapositive_heights() {
    gate(6, "contrapositive-heights");
}

#[test]
fn criterion_07_fold_invariance() {
    gate(7, "fold-invariance");
}

#[test]
fn criterion_08_neighborhood_agreement() {
    gate(8, "neighborhood-agreement");
}

#[test]
fn criterion_09_hom_plus_isomorphism() {
    gate(9, "hom-plus-isomorphism");
}

#[test]
fn criterion_10_e1_splitting() {
    gate(10, "e1-splitting");
}

#[test]
fn criterion_11_property_suites() {
    gate(11, "property-suites");
}

// Criterion 12 is a stretch goal: a genuine mathematical failure is a bug and
// fails the test, but hitting a resource cap is reported and tolerated.
fn stretch(name: &str) {
    match verify::checks()
        .into_iter()
        .find(|(n, _, _)| *n == name)
        .expect("known check")
        .2()
    {
        Ok(detail) => println!("criterion 12 ({name}): PASS — {detail}"),
        Err(Error::ResourceCap(msg)) => {
            println!("criterion 12 ({name}): SKIP — resource cap: {msg}");
        }
        Err(e) => {
            println!("criterion 12 ({name}): FAIL — {e}");
            panic!("stretch criterion {name} failed: {e}");
        }
    }
}

#[test]
fn criterion_12a_stretch_zero_map() {
    stretch("stretch-zero-map");
}

#[test]
fn criterion_12b_stretch_gamma_minus_one() {
    stretch("stretch-gamma-minus-one");
}
