//! The continued-fraction engine: generalized Jacobi-Rogers tables, the
//! weighted-Motzkin-path oracle, truncated J-fraction expansion, the monic
//! orthogonal-polynomial recurrence with its unitriangular duality, and the
//! named coefficient presets.
//!
//! Three independent routes compute the same numbers — the μ recurrence,
//! explicit path enumeration, and series expansion of the continued
//! fraction — and the verification harness insists they agree.

mod checks;

pub use checks::{
    aigner_check, duality_check, egf_consistency, little_q_laguerre_check, riccati_check,
};

use crate::error::{Error, Result};
use crate::polyring::{bq_int, q_int, var, Monomial, Poly, Series};
use crate::report::Counterexample;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::sync::Arc;

type CoeffFn = Arc<dyn Fn(usize) -> Poly + Send + Sync>;

/// A J-fraction parameter pack: γ_k for k ≥ 0 and β_k for k ≥ 1, both
/// polynomial-valued sequences (never registry variables).
#[derive(Clone)]
pub struct JRParams {
    name: String,
    gamma: CoeffFn,
    beta: CoeffFn,
}

impl JRParams {
    pub fn new(
        name: impl Into<String>,
        gamma: impl Fn(usize) -> Poly + Send + Sync + 'static,
        beta: impl Fn(usize) -> Poly + Send + Sync + 'static,
    ) -> Self {
        JRParams {
            name: name.into(),
            gamma: Arc::new(gamma),
            beta: Arc::new(beta),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gamma(&self, k: usize) -> Poly {
        (self.gamma)(k)
    }

    pub fn beta(&self, k: usize) -> Poly {
        assert!(k >= 1, "beta is indexed from 1");
        (self.beta)(k)
    }
}

impl std::fmt::Debug for JRParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("JRParams")
            .field("name", &self.name)
            .finish()
    }
}

/// The named parameter packs from the source identities.
pub fn preset(name: &str) -> Result<JRParams> {
    match name {
        // n! moments: γ_k = 2k+1, β_k = k²
        "euler" => Ok(JRParams::new(
            "euler",
            |k| Poly::constant(2 * k as i64 + 1),
            |k| Poly::constant((k * k) as i64),
        )),
        // [n]_{β,q}! moments: γ_k = q^k([k]_q + [k+1]_{β,q}),
        // β_k = q^{2k-1} [k]_q [k]_{β,q}
        "beta_q" => Ok(JRParams::new(
            "beta_q",
            |k| {
                let shift = Poly::term(1, Monomial::var(var("q"), k as u32));
                shift.mul(&q_int(k).add(&bq_int(k + 1)))
            },
            |k| {
                let shift = Poly::term(1, Monomial::var(var("q"), (2 * k - 1) as u32));
                shift.mul(&q_int(k)).mul(&bq_int(k))
            },
        )),
        // Laguerre-digraph weights: γ_k = k(u3+u4) + αβ, β_k = k(β-1+k)u1u2.
        // The cycle-statistics preset has the same coefficients
        // (β_{k+1} = (k+β)(k+1)u1u2 re-indexes to the same β_k).
        "digraph" | "cyc" => Ok(JRParams::new(
            name,
            |k| {
                let s = Poly::var(var("u3")).add(&Poly::var(var("u4")));
                s.scale(k as i64)
                    .add(&Poly::var(var("a")).mul(&Poly::var(var("b"))))
            },
            |k| {
                let bk = Poly::var(var("b")).add(&Poly::constant(k as i64 - 1));
                bk.scale(k as i64)
                    .mul(&Poly::var(var("u1")))
                    .mul(&Poly::var(var("u2")))
            },
        )),
        // Alternating specialization: γ ≡ 0, β_k = k(β-1+k)
        "alternating" => Ok(JRParams::new(
            "alternating",
            |_| Poly::zero(),
            |k| {
                Poly::var(var("b"))
                    .add(&Poly::constant(k as i64 - 1))
                    .scale(k as i64)
            },
        )),
        // Zhu's array: γ_k = (ka1+a2)(λ+dx) + (kb1+b2)x,
        // β_{k+1} = (k+1)((ka1+a2)b1 + a1b2) x (λ+dx)
        "zhu" => Ok(JRParams::new(
            "zhu",
            |k| {
                let lam_dx =
                    Poly::var(var("la")).add(&Poly::var(var("d")).mul(&Poly::var(var("x"))));
                let ka1_a2 = Poly::var(var("a1"))
                    .scale(k as i64)
                    .add(&Poly::var(var("a2")));
                let kb1_b2 = Poly::var(var("b1"))
                    .scale(k as i64)
                    .add(&Poly::var(var("b2")));
                ka1_a2.mul(&lam_dx).add(&kb1_b2.mul(&Poly::var(var("x"))))
            },
            |k| {
                let lam_dx =
                    Poly::var(var("la")).add(&Poly::var(var("d")).mul(&Poly::var(var("x"))));
                let inner = Poly::var(var("a1"))
                    .scale(k as i64 - 1)
                    .add(&Poly::var(var("a2")))
                    .mul(&Poly::var(var("b1")))
                    .add(&Poly::var(var("a1")).mul(&Poly::var(var("b2"))));
                inner.scale(k as i64).mul(&Poly::var(var("x"))).mul(&lam_dx)
            },
        )),
        _ => Err(Error::Unknown(format!("preset {name:?}"))),
    }
}

/// Fully symbolic coefficients g0..gN and be1..beN, materialized as registry
/// variables up front so later parallel use cannot perturb registry order.
pub fn generic(max_k: usize) -> JRParams {
    for k in 0..=max_k {
        var(&format!("g{k}"));
    }
    for k in 1..=max_k.max(1) {
        var(&format!("be{k}"));
    }
    JRParams::new(
        format!("generic{max_k}"),
        |k| Poly::var(var(&format!("g{k}"))),
        |k| Poly::var(var(&format!("be{k}"))),
    )
}

/// Every preset name accepted by [`preset`].
pub const PRESET_NAMES: &[&str] = &["euler", "beta_q", "digraph", "cyc", "alternating", "zhu"];

/// Lower-triangular table of generalized Jacobi-Rogers polynomials μ_{n,k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuTable {
    rows: Vec<Vec<Poly>>,
}

impl MuTable {
    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// μ_{n,k}; zero outside 0 ≤ k ≤ n.
    pub fn entry(&self, n: usize, k: usize) -> &Poly {
        static ZERO: std::sync::OnceLock<Poly> = std::sync::OnceLock::new();
        if n <= self.order() && k <= n {
            &self.rows[n][k]
        } else {
            ZERO.get_or_init(Poly::zero)
        }
    }

    /// The moment sequence μ_{n,0}.
    pub fn moments(&self) -> Vec<Poly> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }
}

/// JSON form: {"N":2,"entries":[["1"],["g0","1"],...]} with canonical text.
impl Serialize for MuTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|p| p.render_text()).collect())
            .collect();
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("N", &self.order())?;
        map.serialize_entry("entries", &entries)?;
        map.end()
    }
}

/// Builds the μ table by the three-term recurrence
/// μ_{n,k} = μ_{n-1,k-1} + γ_k μ_{n-1,k} + β_{k+1} μ_{n-1,k+1}.
pub fn mu_table(params: &JRParams, n_max: usize) -> MuTable {
    let mut rows: Vec<Vec<Poly>> = vec![vec![Poly::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut entry = if k >= 1 && k - 1 < prev.len() {
                prev[k - 1].clone()
            } else {
                Poly::zero()
            };
            if k < prev.len() {
                entry = entry.add(&params.gamma(k).mul(&prev[k]));
            }
            if k + 1 < prev.len() {
                entry = entry.add(&params.beta(k + 1).mul(&prev[k + 1]));
            }
            row.push(entry);
        }
        rows.push(row);
    }
    MuTable { rows }
}

/// Independent oracle for μ_{n,k}: enumerates every Motzkin path from (0,0)
/// to (n,k) staying at nonnegative height and sums the weight products
/// (rise 1, fall from height i gets β_i, level at height i gets γ_i).
///
/// A path's weight depends only on the multiset of fall/level heights, so
/// paths are bucketed by that multiset and each product is computed once.
pub fn motzkin_mu(params: &JRParams, n: usize, k: usize) -> Poly {
    // (kind, height): kind 0 = level at height, kind 1 = fall from height
    type Factors = Vec<(u8, u8)>;
    fn walk(
        remaining: usize,
        height: usize,
        target: usize,
        factors: &mut Factors,
        buckets: &mut std::collections::BTreeMap<Factors, u64>,
    ) {
        if remaining == 0 {
            if height == target {
                let mut key = factors.clone();
                key.sort_unstable();
                *buckets.entry(key).or_insert(0) += 1;
            }
            return;
        }
        if height.abs_diff(target) > remaining {
            return;
        }
        walk(remaining - 1, height + 1, target, factors, buckets); // rise, weight 1
        factors.push((0, height as u8));
        walk(remaining - 1, height, target, factors, buckets);
        factors.pop();
        if height > 0 {
            factors.push((1, height as u8));
            walk(remaining - 1, height - 1, target, factors, buckets);
            factors.pop();
        }
    }
    if k > n {
        return Poly::zero();
    }
    let mut buckets = std::collections::BTreeMap::new();
    walk(n, 0, k, &mut Vec::new(), &mut buckets);
    let mut total = Poly::zero();
    for (factors, count) in buckets {
        let mut weight = Poly::constant(count as i64);
        for (kind, h) in factors {
            let f = if kind == 0 {
                params.gamma(h as usize)
            } else {
                params.beta(h as usize)
            };
            weight = weight.mul(&f);
        }
        total = total.add(&weight);
    }
    total
}

/// Taylor expansion of the J-fraction to order `n_max`, truncating at the
/// given depth; levels at depth ≥ ⌈N/2⌉+1 cannot reach coefficients ≤ N.
pub fn cf_taylor_with_depth(params: &JRParams, n_max: usize, depth: usize) -> Series {
    let mut f = Series::one(n_max);
    for level in (0..depth).rev() {
        let mut denom = Series::one(n_max);
        if n_max >= 1 {
            let mut gamma_t = Series::zero(n_max);
            gamma_t.set_coeff(1, params.gamma(level));
            denom = denom.sub(&gamma_t).unwrap();
        }
        if n_max >= 2 {
            let tail = f.scale_poly(&params.beta(level + 1)).shift(2);
            denom = denom.sub(&tail).unwrap();
        }
        f = denom
            .reciprocal()
            .expect("J-fraction denominators have constant term 1");
    }
    f
}

/// Taylor coefficients of the J-fraction; coefficient n equals μ_{n,0}.
pub fn cf_taylor(params: &JRParams, n_max: usize) -> Series {
    cf_taylor_with_depth(params, n_max, n_max.div_ceil(2) + 1)
}

/// The monic orthogonal polynomial sequence of a parameter pack:
/// p_{n+1}(x) = (x - γ_n) p_n(x) - β_n p_{n-1}(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoSeq {
    polys: Vec<Poly>,
}

impl OrthoSeq {
    pub fn poly(&self, n: usize) -> &Poly {
        &self.polys[n]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Coefficient a_{n,k} of x^k in p_n. Only meaningful when the
    /// parameters do not themselves involve x.
    pub fn coefficient(&self, n: usize, k: usize) -> Poly {
        self.polys[n]
            .coefficients_in(var("x"))
            .remove(&(k as u32))
            .unwrap_or_default()
    }
}

pub fn ortho_seq(params: &JRParams, n_max: usize) -> OrthoSeq {
    let x = Poly::var(var("x"));
    let mut polys = vec![Poly::one()];
    if n_max >= 1 {
        polys.push(x.sub(&params.gamma(0)));
    }
    for n in 1..n_max {
        let head = x.sub(&params.gamma(n)).mul(&polys[n]);
        let tail = params.beta(n).mul(&polys[n - 1]);
        polys.push(head.sub(&tail));
    }
    OrthoSeq { polys }
}

/// Inverse of a lower-triangular matrix with unit diagonal, by forward
/// substitution; exact, and T·T⁻¹ = I by construction.
pub fn unitriangular_inverse(t: &[Vec<Poly>]) -> Result<Vec<Vec<Poly>>> {
    for (n, row) in t.iter().enumerate() {
        if row.len() != n + 1 {
            return Err(Error::InvalidArgument(format!(
                "row {n} has {} entries, want {}",
                row.len(),
                n + 1
            )));
        }
        if !row[n].is_one() {
            return Err(Error::InvalidArgument(format!(
                "diagonal entry at {n} is {} rather than 1",
                row[n].render_text()
            )));
        }
    }
    let mut inv: Vec<Vec<Poly>> = Vec::with_capacity(t.len());
    for n in 0..t.len() {
        let mut row = vec![Poly::zero(); n + 1];
        row[n] = Poly::one();
        for m in (0..n).rev() {
            let mut acc = Poly::zero();
            for j in m..n {
                acc = acc.add(&t[n][j].mul(&inv[j][m]));
            }
            row[m] = acc.neg();
        }
        inv.push(row);
    }
    Ok(inv)
}

/// μ recurrence against the path-enumeration oracle, entrywise.
pub fn motzkin_oracle_check(
    params: &JRParams,
    n_max: usize,
) -> std::result::Result<(), Counterexample> {
    let table = mu_table(params, n_max);
    for n in 0..=n_max {
        for k in 0..=n {
            let path_sum = motzkin_mu(params, n, k);
            if &path_sum != table.entry(n, k) {
                return Err(Counterexample::new(
                    format!("{} mu[{n}][{k}] vs motzkin", params.name()),
                    table.entry(n, k).render_text(),
                    path_sum.render_text(),
                ));
            }
        }
    }
    Ok(())
}

/// CF expansion against column 0 of the μ table, plus the truncation-depth
/// guard (one extra level must not change any coefficient).
pub fn cf_check(params: &JRParams, n_max: usize) -> std::result::Result<(), Counterexample> {
    let table = mu_table(params, n_max);
    let series = cf_taylor(params, n_max);
    let deeper = cf_taylor_with_depth(params, n_max, n_max.div_ceil(2) + 2);
    for n in 0..=n_max {
        if series.coeff(n) != table.entry(n, 0) {
            return Err(Counterexample::new(
                format!("{} cf[{n}] vs mu[{n}][0]", params.name()),
                table.entry(n, 0).render_text(),
                series.coeff(n).render_text(),
            ));
        }
        if series.coeff(n) != deeper.coeff(n) {
            return Err(Counterexample::new(
                format!("{} cf depth guard at {n}", params.name()),
                series.coeff(n).render_text(),
                deeper.coeff(n).render_text(),
            ));
        }
    }
    Ok(())
}

/// Both oracle routes at once.
pub fn oracle_triangle(params: &JRParams, n_max: usize) -> std::result::Result<(), Counterexample> {
    motzkin_oracle_check(params, n_max)?;
    cf_check(params, n_max)
}
