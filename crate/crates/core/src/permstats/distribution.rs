//! Distribution polynomials over 𝔖_n^k and the Haglund-Remmel-Wilson
//! identity sides, expanded exactly in the ring (denominators cleared).

use super::{enumerate_words, full_stats, LaguerreWord};
use crate::error::{Error, Result};
use crate::polyring::{var, Monomial, Poly};
use rayon::iter::{ParallelBridge, ParallelIterator};
use std::collections::BTreeSet;

/// Which statistic supplies the q-exponent in `distribution`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QWeight {
    Inv,
    Maj,
    TildeInvFilled,
    /// b^rlmin alone, no q part.
    RlminOnly,
}

impl QWeight {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "inv" => Ok(QWeight::Inv),
            "maj" => Ok(QWeight::Maj),
            "tilde-inv-filled" => Ok(QWeight::TildeInvFilled),
            "rlmin" => Ok(QWeight::RlminOnly),
            _ => Err(Error::Unknown(format!("weight {s:?}"))),
        }
    }
}

/// Restriction of the enumeration range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordFilter {
    All,
    /// 𝔖̃_n^k(I): holes exactly at the 1-based positions I.
    HolesExactlyAt(BTreeSet<usize>),
    /// 𝔖_n^k(J): image set equal to J.
    ImageSet(BTreeSet<u32>),
}

impl WordFilter {
    fn admits(&self, w: &LaguerreWord) -> bool {
        match self {
            WordFilter::All => true,
            WordFilter::HolesExactlyAt(holes) => w
                .letters()
                .iter()
                .enumerate()
                .all(|(i, l)| holes.contains(&(i + 1)) == matches!(l, super::Letter::Hole)),
            WordFilter::ImageSet(j) => &w.image() == j,
        }
    }

    fn validate(&self, n: usize, k: usize) -> Result<()> {
        match self {
            WordFilter::All => Ok(()),
            WordFilter::HolesExactlyAt(holes) => {
                if holes.len() != k || holes.iter().any(|&p| p == 0 || p > n) {
                    Err(Error::InvalidArgument(format!(
                        "hole positions {holes:?} are not a k-subset of [{n}]"
                    )))
                } else {
                    Ok(())
                }
            }
            WordFilter::ImageSet(j) => {
                if j.len() != n - k || j.iter().any(|&v| v == 0 || v as usize > n) {
                    Err(Error::InvalidArgument(format!(
                        "image set {j:?} is not an (n-k)-subset of [{n}]"
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// Σ over the (filtered) words of b^rlmin q^stat.
pub fn distribution(n: usize, k: usize, weight: QWeight, filter: &WordFilter) -> Result<Poly> {
    filter.validate(n, k)?;
    let (q, b) = (var("q"), var("b"));
    let sum = enumerate_words(n, k)?
        .par_bridge()
        .filter(|w| filter.admits(w))
        .map(|w| {
            let s = full_stats(&w);
            let q_exp = match weight {
                QWeight::Inv => s.inv,
                QWeight::Maj => s.maj,
                QWeight::TildeInvFilled => s.tilde_inv_filled(),
                QWeight::RlminOnly => 0,
            };
            Poly::term(
                1,
                Monomial::from_pairs(&[(b, s.rlmin() as u32), (q, q_exp as u32)]),
            )
        })
        .reduce(Poly::zero, |a, p| a.add(&p));
    Ok(sum)
}

/// Expands q^base · Π_i (1 + z q^{-drops[i]}) exactly: every subset of the
/// factors contributes q^{base - Σ drops} z^{|subset|}. Panics if clearing
/// would need a negative q-exponent, which no valid word can produce.
pub(crate) fn cleared_product(base: usize, drops: &[usize]) -> Poly {
    let (q, z) = (var("q"), var("z"));
    // terms[j] = multiset of q-exponents with z-exponent j
    let mut exps: Vec<Vec<usize>> = vec![vec![base]];
    for &d in drops {
        let mut next = exps.clone();
        for (j, bucket) in exps.iter().enumerate() {
            if next.len() <= j + 1 {
                next.push(Vec::new());
            }
            for &e in bucket {
                let reduced = e.checked_sub(d).expect(
                    "cleared q-exponent went negative; inv/maj bound violated (internal bug)",
                );
                next[j + 1].push(reduced);
            }
        }
        exps = next;
    }
    let mut out = Poly::zero();
    for (j, bucket) in exps.iter().enumerate() {
        for &e in bucket {
            out.add_term(
                Monomial::from_pairs(&[(q, e as u32), (z, j as u32)]),
                1.into(),
            );
        }
    }
    out
}

/// Both sides of the Haglund-Remmel-Wilson identity over 𝔖_n^k, returned as
/// the exact polynomials in q and z obtained after clearing denominators.
pub fn hrw_sides(n: usize, k: usize) -> Result<(Poly, Poly)> {
    let (lhs, rhs) = enumerate_words(n, k)?
        .par_bridge()
        .map(|w| {
            let s = full_stats(&w);
            let lhs_drops: Vec<usize> = s.des_set.iter().map(|&i| 1 + s.inv_box[i - 1]).collect();
            let lhs = cleared_product(s.inv, &lhs_drops);
            let rhs_drops: Vec<usize> = (1..=s.des_set.len()).collect();
            let rhs = cleared_product(s.maj, &rhs_drops);
            (lhs, rhs)
        })
        .reduce(
            || (Poly::zero(), Poly::zero()),
            |(a, b), (c, d)| (a.add(&c), b.add(&d)),
        );
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{bq_int, q_binomial};

    #[test]
    fn distribution_3_1_matches_product_formula() {
        let brute = distribution(3, 1, QWeight::Maj, &WordFilter::All).unwrap();
        let product = q_binomial(3, 1).unwrap().mul(&bq_int(2)).mul(&bq_int(3));
        assert_eq!(brute, product);
        let brute_inv = distribution(3, 1, QWeight::Inv, &WordFilter::All).unwrap();
        assert_eq!(brute_inv, product);
    }

    #[test]
    fn distribution_all_holes_is_one() {
        for weight in [QWeight::Inv, QWeight::Maj, QWeight::TildeInvFilled] {
            let p = distribution(4, 4, weight, &WordFilter::All).unwrap();
            assert_eq!(p, Poly::one());
        }
    }

    #[test]
    fn distribution_restricted_to_table_one_cell() {
        // 𝔖̃_3^1({2}) with weight b^rlmin q^{tilde_inv_filled} sums to
        // (β+q)(β+q+q²).
        let filter = WordFilter::HolesExactlyAt(BTreeSet::from([2]));
        let p = distribution(3, 1, QWeight::TildeInvFilled, &filter).unwrap();
        assert_eq!(p, bq_int(2).mul(&bq_int(3)));
    }

    #[test]
    fn filters_validated() {
        let bad = WordFilter::HolesExactlyAt(BTreeSet::from([1, 2]));
        assert!(distribution(3, 1, QWeight::Inv, &bad).is_err());
        let bad_image = WordFilter::ImageSet(BTreeSet::from([1]));
        assert!(distribution(3, 1, QWeight::Inv, &bad_image).is_err());
    }

    #[test]
    fn cleared_product_expansion() {
        // q^3 (1 + z/q)(1 + z/q^2) = q^3 + q^2 z + q z + z^2
        let p = cleared_product(3, &[1, 2]);
        let expected = Poly::from_terms(&[
            (1, &[("q", 3)]),
            (1, &[("q", 2), ("z", 1)]),
            (1, &[("q", 1), ("z", 1)]),
            (1, &[("z", 2)]),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn hrw_two_zero() {
        let (lhs, rhs) = hrw_sides(2, 0).unwrap();
        let expected = Poly::from_terms(&[(1, &[]), (1, &[("q", 1)]), (1, &[("z", 1)])]);
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
    }

    #[test]
    fn hrw_one_one() {
        let (lhs, rhs) = hrw_sides(1, 1).unwrap();
        assert_eq!(lhs, Poly::one());
        assert_eq!(rhs, Poly::one());
    }

    #[test]
    fn hrw_three_zero_frozen() {
        // Expanded by hand over 𝔖_3.
        let expected = Poly::from_terms(&[
            (1, &[]),
            (2, &[("q", 1)]),
            (2, &[("q", 2)]),
            (1, &[("q", 3)]),
            (2, &[("z", 1)]),
            (3, &[("q", 1), ("z", 1)]),
            (1, &[("q", 2), ("z", 1)]),
            (1, &[("z", 2)]),
        ]);
        let (lhs, rhs) = hrw_sides(3, 0).unwrap();
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
    }
}
