//! Acceptance suite: every identity the library exists to verify, run at
//! full desk-scale bounds with exact polynomial equality (tolerance zero).
//! One pass/fail line prints per criterion (visible with --nocapture).

use mahonian::permstats::{full_stats, LaguerreWord, ZeroOneMatrix};
use mahonian::verify::run_task;
use std::collections::BTreeSet;

fn run(criterion: &str, id: &str, bound: usize) {
    let report = run_task(id, Some(bound)).unwrap_or_else(|e| panic!("{id} errored: {e}"));
    match &report.counterexample {
        None => println!("acceptance {criterion}: {id} [{}] PASS", report.bounds),
        Some(ce) => {
            println!("acceptance {criterion}: {id} [{}] FAIL", report.bounds);
            panic!("{id} failed at {}: {} != {}", ce.location, ce.lhs, ce.rhs);
        }
    }
}

#[test]
fn criterion_01_distribution_product_formula() {
    run("1", "thm2.1", 6);
}

#[test]
fn criterion_02_worked_example_lock_in() {
    let w = LaguerreWord::parse("3 2 5 * 1 8 6 *").unwrap();
    let s = full_stats(&w);
    assert_eq!(s.des_set, BTreeSet::from([1, 4, 6]));
    assert_eq!(s.inv, 12);
    assert_eq!(s.maj, 15);
    assert_eq!(s.image, BTreeSet::from([1, 2, 3, 5, 6, 8]));
    let m = ZeroOneMatrix::from_word(&w);
    assert_eq!(m.survivor_inv(), 12);
    assert_eq!(m.survivor_maj(), 15);
    println!("acceptance 2: worked-example [3 2 5 * 1 8 6 *] PASS");
}

#[test]
fn criterion_03_hrw_identity() {
    run("3", "thm2.2", 5);
}

#[test]
fn criterion_04_matrix_statistics_and_split() {
    run("4a", "prop3.1", 6);
    run("4b", "eq3.4", 6);
}

#[test]
fn criterion_05_insertion_bijection_macmahon_wilson() {
    run("5a", "thm3.2", 7);
    run("5b", "macmahon", 7);
    run("5c", "wilson", 6);
}

#[test]
fn criterion_06_table_one_reproduction() {
    run("6", "table1", 3);
}

#[test]
fn criterion_07_digraph_enumerator() {
    run("7a", "thm2.3", 5);
    run("7b", "alternating", 6);
}

#[test]
fn criterion_08_preset_moments() {
    run("8a", "moments-euler", 8);
    run("8b", "moments-bq", 7);
}

#[test]
fn criterion_09_oracle_triangle() {
    run("9a", "motzkin-oracle", 8);
    run("9b", "cf-vs-recurrence", 8);
}

#[test]
fn criterion_10_inversion_pair() {
    run("10a", "duality", 7);
    run("10b", "little-q-laguerre", 7);
}

#[test]
fn criterion_11_egf_system() {
    run("11a", "riccati", 7);
    run("11b", "aigner", 6);
    run("11c", "lemma4.2", 7);
}

#[test]
fn criterion_12_zhu_remark() {
    run("12", "zhu", 5);
}
