//! The bundled identity checks: matrix duality, the little q-Laguerre
//! coefficient/inversion formulas, and the exponential-generating-function
//! system tying the cycle/linear statistics to the `cyc` preset.

use super::{mu_table, ortho_seq, preset, unitriangular_inverse, JRParams};
use crate::digraphs::{ld_enumerator_unshifted, perm_cycle_poly, perm_linear_poly};
use crate::error::Result;
use crate::polyring::{bq_factorial, bq_rising, q_binomial, var, Monomial, Poly};
use crate::report::{CheckResult, Counterexample};

/// Verifies both directions of the inversion pairing: Σ_k μ_{n,k} p_k(x)
/// recreates x^n, and the unitriangular inverse of the μ table reassembles
/// the p_n themselves.
pub fn duality_check(params: &JRParams, n_max: usize) -> Result<CheckResult> {
    let table = mu_table(params, n_max);
    let seq = ortho_seq(params, n_max);
    let x = Poly::var(var("x"));
    for n in 0..=n_max {
        let mut sum = Poly::zero();
        for k in 0..=n {
            sum = sum.add(&table.entry(n, k).mul(seq.poly(k)));
        }
        let expected = x.pow(n as u32);
        if sum != expected {
            return Ok(Err(Counterexample::new(
                format!("{} sum_k mu[{n}][k] p_k", params.name()),
                sum.render_text(),
                expected.render_text(),
            )));
        }
    }
    let inv = unitriangular_inverse(table.rows())?;
    #[allow(clippy::needless_range_loop)]
    for n in 0..=n_max {
        let mut assembled = Poly::zero();
        for (k, entry) in inv[n].iter().enumerate() {
            assembled = assembled.add(&entry.mul(&x.pow(k as u32)));
        }
        if &assembled != seq.poly(n) {
            return Ok(Err(Counterexample::new(
                format!("{} inverse row {n} vs p_{n}", params.name()),
                assembled.render_text(),
                seq.poly(n).render_text(),
            )));
        }
    }
    Ok(Ok(()))
}

/// With the beta_q preset: the ortho coefficients match
/// (-1)^{n-k} q^{C(n-k,2)} [n k]_q Π_{j>k} [j]_{β,q}, the μ entries match
/// [n k]_q Π_{j>k} [j]_{β,q}, and the moments are [n]_{β,q}!.
pub fn little_q_laguerre_check(n_max: usize) -> Result<CheckResult> {
    let params = preset("beta_q")?;
    let table = mu_table(&params, n_max);
    let seq = ortho_seq(&params, n_max);
    let q = var("q");
    for n in 0..=n_max {
        for k in 0..=n {
            let body = q_binomial(n, k)?.mul(&bq_rising(k, n));

            let mu = table.entry(n, k);
            if mu != &body {
                return Ok(Err(Counterexample::new(
                    format!("mu[{n}][{k}] vs product formula"),
                    mu.render_text(),
                    body.render_text(),
                )));
            }

            let d = (n - k) as u32;
            let sign = if d.is_multiple_of(2) { 1 } else { -1 };
            let q_shift = Poly::term(sign, Monomial::var(q, d * d.saturating_sub(1) / 2));
            let expected_coeff = q_shift.mul(&body);
            let got = seq.coefficient(n, k);
            if got != expected_coeff {
                return Ok(Err(Counterexample::new(
                    format!("a[{n}][{k}] vs closed form"),
                    got.render_text(),
                    expected_coeff.render_text(),
                )));
            }
        }
        let moment = table.entry(n, 0);
        let factorial = bq_factorial(n);
        if moment != &factorial {
            return Ok(Err(Counterexample::new(
                format!("moment {n} vs bq factorial"),
                moment.render_text(),
                factorial.render_text(),
            )));
        }
    }
    Ok(Ok(()))
}

fn binomial_big(n: usize, k: usize) -> num_bigint::BigInt {
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Coefficientwise product of exponential generating functions:
/// c_n = Σ_j C(n,j) a_j b_{n-j}.
fn egf_product(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let n_max = a.len().min(b.len());
    (0..n_max)
        .map(|n| {
            let mut c = Poly::zero();
            for j in 0..=n {
                if a[j].is_zero() || b[n - j].is_zero() {
                    continue;
                }
                c = c.add(&a[j].mul(&b[n - j]).scale(binomial_big(n, j)));
            }
            c
        })
        .collect()
}

fn factorial_big(n: usize) -> num_bigint::BigInt {
    (1..=n).fold(num_bigint::BigInt::from(1), |acc, i| acc * i)
}

/// F_n = P_n^lin / u1 for n ≥ 1 (exact; u1 always divides), F_0 = 0.
fn linear_egf_coeffs(n_max: usize) -> Result<Vec<Poly>> {
    let u1 = var("u1");
    let mut f: Vec<Poly> = vec![Poly::zero()];
    for n in 1..=n_max {
        f.push(perm_linear_poly(n)?.div_exact_var(u1)?);
    }
    Ok(f)
}

/// Riccati equation for the linear statistics, coefficientwise:
/// F_{n+1} = δ_{n,0} + (u3+u4) F_n + u1u2 (F·F)_n.
pub fn riccati_check(n_max: usize) -> Result<CheckResult> {
    let s = Poly::var(var("u3")).add(&Poly::var(var("u4")));
    let u = Poly::var(var("u1")).mul(&Poly::var(var("u2")));
    let f = linear_egf_coeffs(n_max)?;
    let ff = egf_product(&f, &f);
    for n in 0..n_max {
        let mut rhs = f[n].mul(&s).add(&ff[n].mul(&u));
        if n == 0 {
            rhs = rhs.add(&Poly::one());
        }
        if f[n + 1] != rhs {
            return Ok(Err(Counterexample::new(
                format!("riccati at n = {n}"),
                f[n + 1].render_text(),
                rhs.render_text(),
            )));
        }
    }
    Ok(Ok(()))
}

/// The rest of the §4 system, coefficientwise to n_max:
///  (i)   J0' = αβ J0 + β u1u2 J0 F (the moment half of the Aigner system);
///  (ii)  n! [z^n] (J0 F^k / k!) = μ_{n,k} of the cyc preset;
///  (iii) the unshifted digraph enumerator equals u1^k μ_{n,k}.
pub fn aigner_check(n_max: usize) -> Result<CheckResult> {
    let u1 = var("u1");
    let u = Poly::var(u1).mul(&Poly::var(var("u2")));
    let ab = Poly::var(var("a")).mul(&Poly::var(var("b")));
    let b_u = Poly::var(var("b")).mul(&u);

    let f = linear_egf_coeffs(n_max)?;
    let mut j0: Vec<Poly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        j0.push(perm_cycle_poly(n)?);
    }

    let j0f = egf_product(&j0, &f);
    for n in 0..n_max {
        let rhs = j0[n].mul(&ab).add(&j0f[n].mul(&b_u));
        if j0[n + 1] != rhs {
            return Ok(Err(Counterexample::new(
                format!("moment derivative at n = {n}"),
                j0[n + 1].render_text(),
                rhs.render_text(),
            )));
        }
    }

    let table = mu_table(&preset("cyc")?, n_max);
    let mut f_pow: Vec<Poly> = {
        let mut one = vec![Poly::zero(); n_max + 1];
        one[0] = Poly::one();
        one
    };
    for k in 0..=n_max {
        let column = egf_product(&j0, &f_pow);
        #[allow(clippy::needless_range_loop)]
        for n in k..=n_max {
            // k! μ_{n,k} instead of dividing the EGF column by k!
            let scaled = table.entry(n, k).scale(factorial_big(k));
            if column[n] != scaled {
                return Ok(Err(Counterexample::new(
                    format!("column factorization at (n,k) = ({n},{k})"),
                    column[n].render_text(),
                    scaled.render_text(),
                )));
            }
        }
        if k < n_max {
            f_pow = egf_product(&f_pow, &f);
        }
    }

    for n in 0..=n_max {
        for k in 0..=n {
            let unshifted = ld_enumerator_unshifted(n, k)?;
            let scaled = table
                .entry(n, k)
                .mul(&Poly::term(1, Monomial::var(u1, k as u32)));
            if unshifted != scaled {
                return Ok(Err(Counterexample::new(
                    format!("digraph product formula at (n,k) = ({n},{k})"),
                    unshifted.render_text(),
                    scaled.render_text(),
                )));
            }
        }
    }

    Ok(Ok(()))
}

/// Runs the whole §4 battery.
pub fn egf_consistency(n_max: usize) -> Result<CheckResult> {
    match riccati_check(n_max)? {
        Ok(()) => aigner_check(n_max),
        failed => Ok(failed),
    }
}
