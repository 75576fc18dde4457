//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients, the truncated power series built on them, and the
//! q/(β,q)-analogue constructors.
//!
//! Every statistic and identity in this crate is a value of [`Poly`]:
//! arithmetic is exact, there is no floating point anywhere, and equality
//! is equality of canonical term maps. Variables live in a process-wide
//! registry ([`var`]) so that a monomial is just a sorted exponent vector
//! and printing order is stable across runs.

mod qanalog;
mod series;

pub use qanalog::{bq_factorial, bq_int, bq_rising, q_binomial, q_factorial, q_int};
pub use series::Series;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

/// Variables always present, in registry order. The statistic variable β is
/// "b" and α is "a"; the continued-fraction coefficient sequences are never
/// variables (they are sequences of `Poly` values).
const BASE_VARS: &[&str] = &[
    "q", "z", "x", "b", "a", "u1", "u2", "u3", "u4", "la", "d", "a1", "a2", "b1", "b2",
];

fn registry() -> &'static RwLock<Vec<String>> {
    static REGISTRY: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    REGISTRY.get_or_init(|| RwLock::new(BASE_VARS.iter().map(|s| s.to_string()).collect()))
}

/// An interned variable. Comparison is by identity; the registry order is
/// fixed once a name is interned and determines the canonical monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(u32);

impl VarId {
    pub fn name(self) -> String {
        registry().read().unwrap()[self.0 as usize].clone()
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Interns `name`, registering it after all existing variables if new.
pub fn var(name: &str) -> VarId {
    assert!(!name.is_empty(), "variable name must be nonempty");
    {
        let reg = registry().read().unwrap();
        if let Some(i) = reg.iter().position(|v| v == name) {
            return VarId(i as u32);
        }
    }
    let mut reg = registry().write().unwrap();
    // Re-check under the write lock.
    if let Some(i) = reg.iter().position(|v| v == name) {
        return VarId(i as u32);
    }
    reg.push(name.to_string());
    VarId((reg.len() - 1) as u32)
}

/// A monomial: sorted (variable, positive exponent) pairs. The empty vector
/// is the constant monomial. Ordered graded-lexicographically: lower total
/// degree first, ties broken variable-by-variable in registry order with the
/// smaller exponent first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarId, exp: u32) -> Self {
        if exp == 0 {
            return Monomial::unit();
        }
        Monomial {
            exps: vec![(v, exp)],
        }
    }

    pub fn from_pairs(pairs: &[(VarId, u32)]) -> Self {
        let mut exps: Vec<(VarId, u32)> = pairs.iter().copied().filter(|&(_, e)| e > 0).collect();
        exps.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { exps: merged }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn vars(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().copied()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    exps.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    exps.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    exps.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&self.exps[i..]);
        exps.extend_from_slice(&other.exps[j..]);
        Monomial { exps }
    }

    /// Drops `v` from the monomial, returning its exponent and the rest.
    fn split_var(&self, v: VarId) -> (u32, Monomial) {
        let mut exps = Vec::with_capacity(self.exps.len());
        let mut e_v = 0;
        for &(w, e) in &self.exps {
            if w == v {
                e_v = e;
            } else {
                exps.push((w, e));
            }
        }
        (e_v, Monomial { exps })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Walk the union of variables in registry order; first differing
        // exponent decides, smaller exponent first.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, _)), None) => {
                    // self has a variable other lacks: other's exponent is 0
                    // there, so self has the larger exponent at that slot.
                    return Ordering::Greater;
                }
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return Ordering::Greater, // other's exp at va is 0
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

/// A sparse multivariate polynomial in canonical form: no zero coefficients
/// stored, terms kept in the canonical monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Poly { terms }
    }

    pub fn var(v: VarId) -> Self {
        Poly::term(1, Monomial::var(v, 1))
    }

    pub fn term<T: Into<BigInt>>(coef: T, mono: Monomial) -> Self {
        let c = coef.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Poly { terms }
    }

    /// Builds a polynomial from explicit (coefficient, monomial) data; the
    /// test suites use this to freeze expected values independently of the
    /// arithmetic under test.
    pub fn from_terms(terms: &[(i64, &[(&str, u32)])]) -> Self {
        let mut p = Poly::zero();
        for &(c, pairs) in terms {
            let mono =
                Monomial::from_pairs(&pairs.iter().map(|&(n, e)| (var(n), e)).collect::<Vec<_>>());
            p.add_term(mono, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, mono: Monomial, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coef);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale<T: Into<BigInt>>(&self, c: T) -> Poly {
        let c = c.into();
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, co)| (m.clone(), co * &c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes `value` for every occurrence of variable `v`.
    pub fn substitute(&self, v: VarId, value: &Poly) -> Poly {
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            let contrib = powers[e as usize].mul(&Poly::term(c.clone(), rest));
            out = out.add(&contrib);
        }
        out
    }

    /// Groups terms by the exponent of `v`: returns exponent -> coefficient
    /// polynomial (in the remaining variables). Missing exponents are zero.
    pub fn coefficients_in(&self, v: VarId) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Exact division by a single variable; errors if some term lacks `v`.
    pub fn div_exact_var(&self, v: VarId) -> Result<Poly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            if e == 0 {
                return Err(Error::InvalidArgument(format!(
                    "polynomial not divisible by {}",
                    v.name()
                )));
            }
            let mut pairs: Vec<(VarId, u32)> = rest.vars().collect();
            if e > 1 {
                pairs.push((v, e - 1));
            }
            terms.insert(Monomial::from_pairs(&pairs), c.clone());
        }
        Ok(Poly { terms })
    }

    /// Canonical text form: terms in canonical order, `^` for powers, no `*`.
    pub fn render_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mag = c.abs();
            if m.is_unit() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                // Variables inside a monomial print in name order.
                let mut named: Vec<(String, u32)> = m.vars().map(|(v, e)| (v.name(), e)).collect();
                named.sort();
                for (name, e) in named {
                    out.push_str(&name);
                    if e > 1 {
                        out.push('^');
                        out.push_str(&e.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

/// JSON form: `{"terms":[{"coef":"-3","mono":{"b":2,"q":1}},...]}` with
/// coefficients as decimal strings and terms in canonical order.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            coef: String,
            mono: BTreeMap<String, u32>,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, c)| Term {
                coef: c.to_string(),
                mono: m.vars().map(|(v, e)| (v.name(), e)).collect(),
            })
            .collect();
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("terms", &terms)?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p_q() -> Poly {
        Poly::var(var("q"))
    }

    #[test]
    fn difference_of_squares() {
        let q = p_q();
        let lhs = q.add(&Poly::one()).mul(&q.sub(&Poly::one()));
        let expected = Poly::from_terms(&[(1, &[("q", 2)]), (-1, &[])]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn add_zero_is_identity() {
        let p = Poly::from_terms(&[(3, &[("q", 2), ("b", 1)]), (-7, &[("z", 1)])]);
        assert_eq!(p.add(&Poly::zero()), p);
    }

    #[test]
    fn bq_product_expansion() {
        // (b+q)(b+q+q^2), expanded by hand term by term.
        let lhs =
            Poly::from_terms(&[(1, &[("b", 1)]), (1, &[("q", 1)])]).mul(&Poly::from_terms(&[
                (1, &[("b", 1)]),
                (1, &[("q", 1)]),
                (1, &[("q", 2)]),
            ]));
        let expected = Poly::from_terms(&[
            (1, &[("b", 2)]),
            (2, &[("b", 1), ("q", 1)]),
            (1, &[("b", 1), ("q", 2)]),
            (1, &[("q", 2)]),
            (1, &[("q", 3)]),
        ]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn self_subtraction_is_zero() {
        let p = Poly::from_terms(&[(5, &[("q", 3)]), (1, &[("b", 2), ("x", 1)])]);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn canonical_text_rendering() {
        let p = Poly::from_terms(&[(1, &[("b", 2)]), (2, &[("b", 1), ("q", 1)])]);
        assert_eq!(p.render_text(), "b^2+2bq");
        assert_eq!(Poly::zero().render_text(), "0");
        let m = Poly::from_terms(&[(-1, &[]), (1, &[("q", 2)])]);
        assert_eq!(m.render_text(), "-1+q^2");
    }

    #[test]
    fn json_rendering() {
        let p = Poly::from_terms(&[(1, &[("b", 2)]), (2, &[("b", 1), ("q", 1)])]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"coef":"1","mono":{"b":2}},{"coef":"2","mono":{"b":1,"q":1}}]}"#
        );
    }

    #[test]
    fn substitution_specializes() {
        // (b+q) at b=1 -> 1+q
        let p = Poly::from_terms(&[(1, &[("b", 1)]), (1, &[("q", 1)])]);
        let s = p.substitute(var("b"), &Poly::one());
        assert_eq!(s, Poly::from_terms(&[(1, &[]), (1, &[("q", 1)])]));
    }

    #[test]
    fn coefficients_in_variable() {
        // x^2 + (q+1)x + 3, grouped by x
        let x = var("x");
        let p = Poly::from_terms(&[
            (1, &[("x", 2)]),
            (1, &[("q", 1), ("x", 1)]),
            (1, &[("x", 1)]),
            (3, &[]),
        ]);
        let by_x = p.coefficients_in(x);
        assert_eq!(by_x[&2], Poly::one());
        assert_eq!(by_x[&1], Poly::from_terms(&[(1, &[("q", 1)]), (1, &[])]));
        assert_eq!(by_x[&0], Poly::constant(3));
    }

    #[test]
    fn div_exact_by_variable() {
        let u1 = var("u1");
        let p = Poly::from_terms(&[(1, &[("u1", 2), ("u3", 1)]), (4, &[("u1", 1)])]);
        let q = p.div_exact_var(u1).unwrap();
        assert_eq!(
            q,
            Poly::from_terms(&[(1, &[("u1", 1), ("u3", 1)]), (4, &[])])
        );
        assert!(Poly::one().div_exact_var(u1).is_err());
    }

    #[test]
    fn monomial_order_graded_then_registry_lex() {
        let b2 = Monomial::from_pairs(&[(var("b"), 2)]);
        let bq = Monomial::from_pairs(&[(var("b"), 1), (var("q"), 1)]);
        let q2 = Monomial::from_pairs(&[(var("q"), 2)]);
        let bq2 = Monomial::from_pairs(&[(var("b"), 1), (var("q"), 2)]);
        assert!(b2 < bq);
        assert!(bq < q2);
        assert!(q2 < bq2); // degree 2 before degree 3
    }
}
