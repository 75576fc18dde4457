//! q- and (β,q)-integers, factorials, and the Gaussian binomial.

use super::{var, Monomial, Poly};
use crate::error::{Error, Result};

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
pub fn q_int(n: usize) -> Poly {
    let q = var("q");
    let mut p = Poly::zero();
    for e in 0..n {
        p.add_term(Monomial::var(q, e as u32), 1.into());
    }
    p
}

/// [n]_q! = [1]_q [2]_q ... [n]_q.
pub fn q_factorial(n: usize) -> Poly {
    (1..=n).fold(Poly::one(), |acc, j| acc.mul(&q_int(j)))
}

/// [n]_{β,q} = β - 1 + 1 + q + ... + q^{n-1} = β + q + ... + q^{n-1} for
/// n ≥ 1, and [0]_{β,q} = 0. The variable "b" plays β.
pub fn bq_int(n: usize) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    let mut p = Poly::var(var("b"));
    let q = var("q");
    for e in 1..n {
        p.add_term(Monomial::var(q, e as u32), 1.into());
    }
    p
}

/// [n]_{β,q}! = [1]_{β,q} [2]_{β,q} ... [n]_{β,q}; the empty product is 1.
pub fn bq_factorial(n: usize) -> Poly {
    (1..=n).fold(Poly::one(), |acc, j| acc.mul(&bq_int(j)))
}

/// The partial product [k+1]_{β,q} [k+2]_{β,q} ... [n]_{β,q}.
pub fn bq_rising(k: usize, n: usize) -> Poly {
    (k + 1..=n).fold(Poly::one(), |acc, j| acc.mul(&bq_int(j)))
}

/// Gaussian binomial coefficient, computed by the Pascal recurrence
/// [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q; stays in the ring, no division.
pub fn q_binomial(n: usize, k: usize) -> Result<Poly> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "q_binomial requires k <= n, got ({n},{k})"
        )));
    }
    let q = var("q");
    // row[j] = [m j]_q for the current m
    let mut row: Vec<Poly> = vec![Poly::one()];
    for m in 1..=n {
        let mut next: Vec<Poly> = Vec::with_capacity(m + 1);
        next.push(Poly::one());
        for j in 1..m {
            let shifted = row[j].mul(&Poly::term(1, Monomial::var(q, j as u32)));
            next.push(row[j - 1].add(&shifted));
        }
        next.push(Poly::one());
        row = next;
    }
    Ok(row[k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_int_values() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), Poly::one());
        assert_eq!(
            q_int(3),
            Poly::from_terms(&[(1, &[]), (1, &[("q", 1)]), (1, &[("q", 2)])])
        );
    }

    #[test]
    fn bq_int_values() {
        assert_eq!(bq_int(1), Poly::from_terms(&[(1, &[("b", 1)])]));
        assert_eq!(
            bq_int(3),
            Poly::from_terms(&[(1, &[("b", 1)]), (1, &[("q", 1)]), (1, &[("q", 2)])])
        );
        assert!(bq_int(0).is_zero());
    }

    #[test]
    fn bq_factorial_values() {
        assert_eq!(bq_factorial(0), Poly::one());
        assert_eq!(bq_factorial(1), Poly::from_terms(&[(1, &[("b", 1)])]));
        // [2]_{β,q}! = β(β+q) = β² + βq
        assert_eq!(
            bq_factorial(2),
            Poly::from_terms(&[(1, &[("b", 2)]), (1, &[("b", 1), ("q", 1)])])
        );
    }

    #[test]
    fn bq_specializes_to_q_at_beta_one() {
        let b = var("b");
        for n in 0..=20 {
            assert_eq!(bq_int(n).substitute(b, &Poly::one()), q_int(n));
        }
    }

    #[test]
    fn q_binomial_values() {
        assert_eq!(q_binomial(5, 0).unwrap(), Poly::one());
        assert_eq!(
            q_binomial(2, 1).unwrap(),
            Poly::from_terms(&[(1, &[]), (1, &[("q", 1)])])
        );
        // Pascal recurrence oracle value, frozen.
        assert_eq!(
            q_binomial(4, 2).unwrap(),
            Poly::from_terms(&[
                (1, &[]),
                (1, &[("q", 1)]),
                (2, &[("q", 2)]),
                (1, &[("q", 3)]),
                (1, &[("q", 4)]),
            ])
        );
        assert!(q_binomial(2, 3).is_err());
    }

    #[test]
    fn q_binomial_pascal_recurrence() {
        let q = var("q");
        for n in 1..=12usize {
            for k in 1..=n {
                let lhs = q_binomial(n, k).unwrap();
                let mut rhs = q_binomial(n - 1, k - 1).unwrap();
                if k <= n - 1 {
                    let shift = Poly::term(1, Monomial::var(q, k as u32));
                    rhs = rhs.add(&q_binomial(n - 1, k).unwrap().mul(&shift));
                }
                assert_eq!(lhs, rhs, "Pascal recurrence failed at ({n},{k})");
            }
        }
    }

    #[test]
    fn q_binomial_times_factorials_is_full_factorial() {
        // [n k]_q [k]_q! [n-k]_q! = [n]_q!  (cross-multiplied, no division)
        for n in 0..=8usize {
            for k in 0..=n {
                let lhs = q_binomial(n, k)
                    .unwrap()
                    .mul(&q_factorial(k))
                    .mul(&q_factorial(n - k));
                assert_eq!(lhs, q_factorial(n));
            }
        }
    }
}
