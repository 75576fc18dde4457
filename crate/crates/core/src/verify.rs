//! The identity-verification harness: every named task sweeps one identity
//! exhaustively at desk scale and reports exact pass/fail with a standalone
//! re-checkable counterexample on failure.

use crate::carlitz::{
    carlitz_psi, carlitz_psi_inverse, enumerate_multiset, multiset_count, rlmin_multiset,
    wilson_sides,
};
use crate::digraphs::{ld_enumerator, perm_cycle_poly, zhu_sides};
use crate::error::{Error, Result};
use crate::jacobi_rogers::{
    self, aigner_check, cf_check, duality_check, generic, little_q_laguerre_check,
    motzkin_oracle_check, mu_table, preset, riccati_check,
};
use crate::permstats::{
    distribution, enumerate_words, full_stats, hrw_sides, major_index, QWeight, WordFilter,
    ZeroOneMatrix,
};
use crate::polyring::{bq_int, bq_rising, q_binomial, q_factorial, var, Poly};
use crate::report::Counterexample;
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::Instant;

/// One row of the task registry.
#[derive(Debug, Clone, Copy)]
pub struct VerifyTask {
    pub id: &'static str,
    pub default_bound: usize,
    pub description: &'static str,
}

/// Every task id, with the desk-scale default bound the full sweep uses.
pub const TASKS: &[VerifyTask] = &[
    VerifyTask {
        id: "thm2.1",
        default_bound: 6,
        description: "maj/inv/rlmin distribution equals the q-binomial times (β,q)-rising product",
    },
    VerifyTask {
        id: "thm2.2",
        default_bound: 5,
        description: "Haglund-Remmel-Wilson identity on partial permutations",
    },
    VerifyTask {
        id: "prop3.1",
        default_bound: 6,
        description: "matrix survival zeros reproduce inv and maj",
    },
    VerifyTask {
        id: "eq3.4",
        default_bound: 6,
        description: "inv splits as tilde-inv-filled plus hole inversions",
    },
    VerifyTask {
        id: "thm3.2",
        default_bound: 7,
        description: "insertion bijection preserves Rlmin and carries inv to maj",
    },
    VerifyTask {
        id: "wilson",
        default_bound: 6,
        description: "multiset Haglund-Remmel-Wilson identity",
    },
    VerifyTask {
        id: "macmahon",
        default_bound: 7,
        description: "inv and maj equidistributed on multisets with product formula",
    },
    VerifyTask {
        id: "lemma3.2",
        default_bound: 6,
        description: "inv-side distribution equals the product formula",
    },
    VerifyTask {
        id: "table1",
        default_bound: 3,
        description: "the six weights over holes-at-{2} words of length 3",
    },
    VerifyTask {
        id: "thm2.3",
        default_bound: 5,
        description: "Laguerre digraph enumerator equals the digraph-preset mu table",
    },
    VerifyTask {
        id: "alternating",
        default_bound: 6,
        description: "alternating digraph specialization of the enumerator",
    },
    VerifyTask {
        id: "lemma4.2",
        default_bound: 7,
        description: "cycle-statistics polynomial equals the cyc-preset moments",
    },
    VerifyTask {
        id: "riccati",
        default_bound: 7,
        description: "linear-statistics EGF satisfies its Riccati equation",
    },
    VerifyTask {
        id: "aigner",
        default_bound: 6,
        description: "moment EGF system, column factorization, digraph product formula",
    },
    VerifyTask {
        id: "zhu",
        default_bound: 5,
        description: "Zhu-array continued fraction equals the cycle-statistics sum",
    },
    VerifyTask {
        id: "moments-euler",
        default_bound: 8,
        description: "Euler preset has factorial moments and binomial mu entries",
    },
    VerifyTask {
        id: "moments-bq",
        default_bound: 7,
        description: "(β,q) preset has (β,q)-factorial moments",
    },
    VerifyTask {
        id: "cf-vs-recurrence",
        default_bound: 8,
        description: "continued-fraction expansion equals mu column 0",
    },
    VerifyTask {
        id: "motzkin-oracle",
        default_bound: 8,
        description: "mu recurrence equals weighted Motzkin path sums",
    },
    VerifyTask {
        id: "duality",
        default_bound: 7,
        description: "mu table and orthogonal coefficients are inverse matrices",
    },
    VerifyTask {
        id: "little-q-laguerre",
        default_bound: 7,
        description: "little q-Laguerre coefficients and inversion formula",
    },
];

pub fn task(id: &str) -> Result<&'static VerifyTask> {
    TASKS
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::Unknown(format!("verify task {id:?}")))
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub bounds: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub millis: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Runs one task at the given bound (its default if `None`).
pub fn run_task(id: &str, n_max: Option<usize>) -> Result<VerifyReport> {
    let spec = task(id)?;
    let bound = n_max.unwrap_or(spec.default_bound);
    let start = Instant::now();
    let outcome = dispatch(id, bound)?;
    let (status, counterexample) = match outcome {
        Ok(()) => ("pass".to_string(), None),
        Err(ce) => ("fail".to_string(), Some(ce)),
    };
    Ok(VerifyReport {
        id: id.to_string(),
        bounds: format!("n<={bound}"),
        status,
        counterexample,
        millis: start.elapsed().as_millis(),
    })
}

/// Runs every task, capping each default bound by `cap` when given.
pub fn run_all(cap: Option<usize>) -> Result<Vec<VerifyReport>> {
    TASKS
        .iter()
        .map(|t| {
            let bound = match cap {
                Some(c) => t.default_bound.min(c),
                None => t.default_bound,
            };
            run_task(t.id, Some(bound))
        })
        .collect()
}

type Outcome = std::result::Result<(), Counterexample>;

fn dispatch(id: &str, bound: usize) -> Result<Outcome> {
    match id {
        "thm2.1" => thm2_1(bound),
        "thm2.2" => thm2_2(bound),
        "prop3.1" => prop3_1(bound),
        "eq3.4" => eq3_4(bound),
        "thm3.2" => thm3_2(bound),
        "wilson" => wilson(bound),
        "macmahon" => macmahon(bound),
        "lemma3.2" => lemma3_2(bound),
        "table1" => table1(),
        "thm2.3" => thm2_3(bound),
        "alternating" => alternating(bound),
        "lemma4.2" => lemma4_2(bound),
        "riccati" => riccati_check(bound),
        "aigner" => aigner_check(bound),
        "zhu" => zhu(bound),
        "moments-euler" => moments_euler(bound),
        "moments-bq" => moments_bq(bound),
        "cf-vs-recurrence" => cf_vs_recurrence(bound),
        "motzkin-oracle" => motzkin_oracle(bound),
        "duality" => duality(bound),
        "little-q-laguerre" => little_q_laguerre_check(bound),
        _ => Err(Error::Unknown(format!("verify task {id:?}"))),
    }
}

fn ce(location: String, lhs: &Poly, rhs: &Poly) -> Outcome {
    Err(Counterexample::new(
        location,
        lhs.render_text(),
        rhs.render_text(),
    ))
}

fn thm2_1(bound: usize) -> Result<Outcome> {
    let b = var("b");
    for n in 0..=bound {
        for k in 0..=n {
            let maj = distribution(n, k, QWeight::Maj, &WordFilter::All)?;
            let inv = distribution(n, k, QWeight::Inv, &WordFilter::All)?;
            let product = q_binomial(n, k)?.mul(&bq_rising(k, n));
            if maj != product {
                return Ok(ce(format!("maj distribution at ({n},{k})"), &maj, &product));
            }
            if inv != product {
                return Ok(ce(format!("inv distribution at ({n},{k})"), &inv, &product));
            }
            // β = 1 specialization, cross-multiplied by [k]_q!
            let specialized = maj.substitute(b, &Poly::one()).mul(&q_factorial(k));
            let rhs = q_binomial(n, k)?.mul(&q_factorial(n));
            if specialized != rhs {
                return Ok(ce(
                    format!("β=1 specialization at ({n},{k})"),
                    &specialized,
                    &rhs,
                ));
            }
        }
    }
    Ok(Ok(()))
}

fn thm2_2(bound: usize) -> Result<Outcome> {
    let (b, z) = (var("b"), var("z"));
    for n in 0..=bound {
        for k in 0..=n {
            let (lhs, rhs) = hrw_sides(n, k)?;
            if lhs != rhs {
                return Ok(ce(format!("hrw sides at ({n},{k})"), &lhs, &rhs));
            }
            let at_zero = lhs.substitute(z, &Poly::zero());
            let inv_gf =
                distribution(n, k, QWeight::Inv, &WordFilter::All)?.substitute(b, &Poly::one());
            if at_zero != inv_gf {
                return Ok(ce(
                    format!("z=0 degeneration at ({n},{k})"),
                    &at_zero,
                    &inv_gf,
                ));
            }
        }
    }
    Ok(Ok(()))
}

fn prop3_1(bound: usize) -> Result<Outcome> {
    for n in 0..=bound {
        for k in 0..=n {
            for w in enumerate_words(n, k)? {
                let s = full_stats(&w);
                let m = ZeroOneMatrix::from_word(&w);
                if m.to_word() != w {
                    return Err(Error::InvalidArgument(format!(
                        "matrix round trip failed at {w}"
                    )));
                }
                if m.survivor_inv() != s.inv {
                    return Ok(Err(Counterexample::new(
                        format!("survivor inv at {w}"),
                        m.survivor_inv().to_string(),
                        s.inv.to_string(),
                    )));
                }
                if m.survivor_maj() != s.maj {
                    return Ok(Err(Counterexample::new(
                        format!("survivor maj at {w}"),
                        m.survivor_maj().to_string(),
                        s.maj.to_string(),
                    )));
                }
            }
        }
    }
    Ok(Ok(()))
}

fn eq3_4(bound: usize) -> Result<Outcome> {
    for n in 0..=bound {
        for k in 0..=n {
            for w in enumerate_words(n, k)? {
                let s = full_stats(&w);
                if s.inv != s.tilde_inv_filled() + s.inv_holes {
                    return Ok(Err(Counterexample::new(
                        format!("inversion split at {w}"),
                        s.inv.to_string(),
                        format!("{} + {}", s.tilde_inv_filled(), s.inv_holes),
                    )));
                }
            }
        }
    }
    Ok(Ok(()))
}

/// Compositions of `total` into at most `max_parts` positive parts.
pub fn compositions(total: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts_left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, parts_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_parts, &mut Vec::new(), &mut out);
    out
}

fn alphabets_up_to(bound: usize) -> Vec<Vec<usize>> {
    (1..=bound).flat_map(|t| compositions(t, 4)).collect()
}

fn thm3_2(bound: usize) -> Result<Outcome> {
    for alpha in alphabets_up_to(bound) {
        let mut image: BTreeSet<Vec<u32>> = BTreeSet::new();
        for w in enumerate_multiset(&alpha) {
            let psi = carlitz_psi(&w);
            if rlmin_multiset(&w) != rlmin_multiset(&psi) {
                return Ok(Err(Counterexample::new(
                    format!("rlmin preservation at {w}"),
                    format!("{:?}", rlmin_multiset(&w)),
                    format!("{:?}", rlmin_multiset(&psi)),
                )));
            }
            let inv = crate::permstats::inversions(w.letters());
            let maj = major_index(psi.letters());
            if inv != maj {
                return Ok(Err(Counterexample::new(
                    format!("inv/maj transport at {w}"),
                    inv.to_string(),
                    maj.to_string(),
                )));
            }
            if carlitz_psi_inverse(&psi) != w {
                return Ok(Err(Counterexample::new(
                    format!("round trip at {w}"),
                    carlitz_psi_inverse(&psi).to_string(),
                    w.to_string(),
                )));
            }
            image.insert(psi.letters().to_vec());
        }
        if image.len() as u128 != multiset_count(&alpha) {
            return Ok(Err(Counterexample::new(
                format!("bijectivity over alphabet {alpha:?}"),
                image.len().to_string(),
                multiset_count(&alpha).to_string(),
            )));
        }
    }
    Ok(Ok(()))
}

fn wilson(bound: usize) -> Result<Outcome> {
    for alpha in alphabets_up_to(bound) {
        let (lhs, rhs) = wilson_sides(&alpha)?;
        if lhs != rhs {
            return Ok(ce(format!("wilson sides over {alpha:?}"), &lhs, &rhs));
        }
    }
    Ok(Ok(()))
}

fn macmahon(bound: usize) -> Result<Outcome> {
    let q = var("q");
    for alpha in alphabets_up_to(bound) {
        let mut inv_gf = Poly::zero();
        let mut maj_gf = Poly::zero();
        for w in enumerate_multiset(&alpha) {
            let inv = crate::permstats::inversions(w.letters());
            let maj = major_index(w.letters());
            inv_gf.add_term(crate::polyring::Monomial::var(q, inv as u32), 1.into());
            maj_gf.add_term(crate::polyring::Monomial::var(q, maj as u32), 1.into());
        }
        if inv_gf != maj_gf {
            return Ok(ce(
                format!("equidistribution over {alpha:?}"),
                &inv_gf,
                &maj_gf,
            ));
        }
        // product formula, cross-multiplied to stay in the ring
        let n: usize = alpha.iter().sum();
        let denominator = alpha
            .iter()
            .fold(Poly::one(), |acc, &m| acc.mul(&q_factorial(m)));
        let lhs = inv_gf.mul(&denominator);
        let rhs = q_factorial(n);
        if lhs != rhs {
            return Ok(ce(format!("product formula over {alpha:?}"), &lhs, &rhs));
        }
    }
    Ok(Ok(()))
}

fn lemma3_2(bound: usize) -> Result<Outcome> {
    for n in 0..=bound {
        for k in 0..=n {
            let inv = distribution(n, k, QWeight::Inv, &WordFilter::All)?;
            let product = q_binomial(n, k)?.mul(&bq_rising(k, n));
            if inv != product {
                return Ok(ce(format!("inv distribution at ({n},{k})"), &inv, &product));
            }
        }
    }
    Ok(Ok(()))
}

type FrozenPoly = &'static [(i64, &'static [(&'static str, u32)])];

fn table1() -> Result<Outcome> {
    // The six words with a hole exactly at position 2 and their weights
    // b^rlmin q^{tilde_inv_filled}.
    let expected: &[(&str, FrozenPoly)] = &[
        ("1 * 2", &[(1, &[("b", 2)])]),
        ("1 * 3", &[(1, &[("b", 1), ("q", 1)])]),
        ("2 * 3", &[(1, &[("q", 2)])]),
        ("2 * 1", &[(1, &[("b", 1), ("q", 1)])]),
        ("3 * 1", &[(1, &[("b", 1), ("q", 2)])]),
        ("3 * 2", &[(1, &[("q", 3)])]),
    ];
    let mut sum = Poly::zero();
    for (text, terms) in expected {
        let w = crate::permstats::LaguerreWord::parse(text)?;
        let s = full_stats(&w);
        let weight = Poly::from_terms(&[(
            1,
            &[("b", s.rlmin() as u32), ("q", s.tilde_inv_filled() as u32)][..],
        )]);
        let frozen = Poly::from_terms(terms);
        if weight != frozen {
            return Ok(ce(format!("weight of {text}"), &weight, &frozen));
        }
        sum = sum.add(&weight);
    }
    let factored = bq_int(2).mul(&bq_int(3));
    if sum != factored {
        return Ok(ce("factored sum".to_string(), &sum, &factored));
    }
    Ok(Ok(()))
}

fn thm2_3(bound: usize) -> Result<Outcome> {
    let table = mu_table(&preset("digraph")?, bound);
    for n in 0..=bound {
        for k in 0..=n {
            let enumerated = ld_enumerator(n, k)?;
            if &enumerated != table.entry(n, k) {
                return Ok(ce(
                    format!("digraph enumerator at ({n},{k})"),
                    &enumerated,
                    table.entry(n, k),
                ));
            }
        }
    }
    Ok(Ok(()))
}

fn alternating(bound: usize) -> Result<Outcome> {
    let table = mu_table(&preset("alternating")?, bound);
    let (u1, u2, u3, u4, a) = (var("u1"), var("u2"), var("u3"), var("u4"), var("a"));
    for n in 0..=bound {
        for k in 0..=n {
            let specialized = ld_enumerator(n, k)?
                .substitute(u3, &Poly::zero())
                .substitute(u4, &Poly::zero())
                .substitute(a, &Poly::zero())
                .substitute(u1, &Poly::one())
                .substitute(u2, &Poly::one());
            if &specialized != table.entry(n, k) {
                return Ok(ce(
                    format!("alternating specialization at ({n},{k})"),
                    &specialized,
                    table.entry(n, k),
                ));
            }
        }
    }
    Ok(Ok(()))
}

fn lemma4_2(bound: usize) -> Result<Outcome> {
    let table = mu_table(&preset("cyc")?, bound);
    for n in 0..=bound {
        let cycle = perm_cycle_poly(n)?;
        if &cycle != table.entry(n, 0) {
            return Ok(ce(
                format!("cycle polynomial at {n}"),
                &cycle,
                table.entry(n, 0),
            ));
        }
    }
    Ok(Ok(()))
}

fn zhu(bound: usize) -> Result<Outcome> {
    for n in 0..=bound {
        let (lhs, rhs) = zhu_sides(n)?;
        if lhs != rhs {
            return Ok(ce(format!("zhu sides at {n}"), &lhs, &rhs));
        }
    }
    Ok(Ok(()))
}

fn moments_euler(bound: usize) -> Result<Outcome> {
    let table = mu_table(&preset("euler")?, bound);
    let binom = |n: u128, k: u128| -> u128 { (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1)) };
    let falling = |n: u128, k: u128| -> u128 { (k + 1..=n).product() };
    for n in 0..=bound {
        for k in 0..=n {
            let expected = Poly::constant(num_bigint::BigInt::from(
                binom(n as u128, k as u128) * falling(n as u128, k as u128),
            ));
            if table.entry(n, k) != &expected {
                return Ok(ce(
                    format!("euler mu at ({n},{k})"),
                    table.entry(n, k),
                    &expected,
                ));
            }
        }
    }
    Ok(Ok(()))
}

fn moments_bq(bound: usize) -> Result<Outcome> {
    let table = mu_table(&preset("beta_q")?, bound);
    let b = var("b");
    for n in 0..=bound {
        let moment = table.entry(n, 0);
        let factorial = crate::polyring::bq_factorial(n);
        if moment != &factorial {
            return Ok(ce(format!("bq moment at {n}"), moment, &factorial));
        }
        let specialized = moment.substitute(b, &Poly::one());
        let qfact = q_factorial(n);
        if specialized != qfact {
            return Ok(ce(format!("β=1 moment at {n}"), &specialized, &qfact));
        }
    }
    Ok(Ok(()))
}

fn cf_vs_recurrence(bound: usize) -> Result<Outcome> {
    for name in jacobi_rogers::PRESET_NAMES {
        if let Err(ce) = cf_check(&preset(name)?, bound) {
            return Ok(Err(ce));
        }
    }
    Ok(cf_check(&generic(bound.min(6)), bound.min(6)))
}

fn motzkin_oracle(bound: usize) -> Result<Outcome> {
    for name in jacobi_rogers::PRESET_NAMES {
        if let Err(ce) = motzkin_oracle_check(&preset(name)?, bound) {
            return Ok(Err(ce));
        }
    }
    Ok(motzkin_oracle_check(&generic(bound.min(6)), bound.min(6)))
}

fn duality(bound: usize) -> Result<Outcome> {
    for name in jacobi_rogers::PRESET_NAMES {
        if let Err(ce) = duality_check(&preset(name)?, bound)? {
            return Ok(Err(ce));
        }
    }
    duality_check(&generic(bound.min(5)), bound.min(5))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_task_rejected() {
        assert!(run_task("nope", None).is_err());
    }

    #[test]
    fn table1_passes() {
        let report = run_task("table1", None).unwrap();
        assert!(report.passed(), "{:?}", report.counterexample);
    }

    #[test]
    fn small_bounds_pass_quickly() {
        for id in ["thm2.1", "prop3.1", "eq3.4", "lemma3.2", "thm2.3"] {
            let report = run_task(id, Some(3)).unwrap();
            assert!(report.passed(), "{id}: {:?}", report.counterexample);
        }
        for id in ["thm3.2", "wilson", "macmahon"] {
            let report = run_task(id, Some(4)).unwrap();
            assert!(report.passed(), "{id}: {:?}", report.counterexample);
        }
    }

    #[test]
    fn compositions_of_four() {
        let c = compositions(4, 4);
        assert_eq!(c.len(), 8); // 2^{4-1}
        assert!(c.contains(&vec![1, 1, 1, 1]));
        assert!(c.contains(&vec![4]));
        // at most 4 parts enforced
        assert!(compositions(5, 4).iter().all(|a| a.len() <= 4));
    }

    #[test]
    fn zhu_small_bound() {
        let report = run_task("zhu", Some(3)).unwrap();
        assert!(report.passed(), "{:?}", report.counterexample);
    }
}
