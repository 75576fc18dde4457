//! Exhaustive structural invariants tying the models together: the
//! between-set identity behind the q-binomial, order-preserving relabeling,
//! the multiset/Laguerre embedding, and digraph cardinalities.

use mahonian::carlitz::{enumerate_multiset, MultisetWord};
use mahonian::permstats::{
    between_inversions, descent_set, enumerate_words, full_stats, inv_box_vector, relabel_image,
    word_count, LaguerreWord, Letter, WordFilter,
};
use mahonian::polyring::{q_binomial, var, Monomial, Poly};
use std::collections::BTreeSet;

/// Σ over ordered partitions A ⊎ B = [n] with |A| = n-k of q^{inv(A,B)}
/// equals the q-binomial coefficient.
#[test]
fn between_set_inversions_generate_q_binomial() {
    let q = var("q");
    for n in 0..=10usize {
        for k in 0..=n {
            let mut sum = Poly::zero();
            // iterate subsets A of size n-k via bitmasks
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != n - k {
                    continue;
                }
                let a: BTreeSet<u32> = (1..=n as u32)
                    .filter(|i| mask >> (i - 1) & 1 == 1)
                    .collect();
                let b: BTreeSet<u32> = (1..=n as u32).filter(|i| !a.contains(i)).collect();
                let e = between_inversions(&a, &b) as u32;
                sum.add_term(Monomial::var(q, e), 1.into());
            }
            assert_eq!(sum, q_binomial(n, k).unwrap(), "at ({n},{k})");
        }
    }
}

/// The order-preserving relabeling between image classes preserves the
/// descent set, inv0, maj0, and the whole inv-box vector.
#[test]
fn relabeling_preserves_shape_statistics() {
    for n in 0..=5usize {
        for k in 0..=n {
            let m = n - k;
            let j0: BTreeSet<u32> = (1..=m as u32).collect();
            let base: Vec<LaguerreWord> = enumerate_words(n, k)
                .unwrap()
                .filter(|w| w.image() == j0)
                .collect();
            // every other image class of the same size
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != m {
                    continue;
                }
                let target: BTreeSet<u32> = (1..=n as u32)
                    .filter(|i| mask >> (i - 1) & 1 == 1)
                    .collect();
                for w in &base {
                    let relabeled = relabel_image(w, &target).unwrap();
                    let (a, b) = (full_stats(w), full_stats(&relabeled));
                    assert_eq!(a.des_set, b.des_set, "{w} -> {relabeled}");
                    assert_eq!(a.inv0, b.inv0);
                    assert_eq!(a.maj0, b.maj0);
                    assert_eq!(a.inv_box, b.inv_box);
                }
            }
        }
    }
}

/// A multiset word over {1..m, r^k} with r maximal embeds as a Laguerre word
/// on image set [m]; the shape statistics must agree letter for letter.
#[test]
fn multiset_embedding_matches_word_statistics() {
    for n in 1..=6usize {
        for k in 0..=n {
            let m = n - k;
            let mut alphabet = vec![1usize; m];
            alphabet.push(k);
            if k == 0 {
                alphabet.pop();
            }
            for w in enumerate_multiset(&alphabet) {
                let letters: Vec<Letter> = w
                    .letters()
                    .iter()
                    .map(|&v| {
                        if k > 0 && v as usize == m + 1 {
                            Letter::Hole
                        } else {
                            Letter::Num(v)
                        }
                    })
                    .collect();
                let lw = LaguerreWord::new(n, letters).unwrap();
                assert_eq!(
                    descent_set(w.letters()),
                    descent_set(lw.letters()),
                    "descents at {w}"
                );
                assert_eq!(
                    inv_box_vector(w.letters()),
                    inv_box_vector(lw.letters()),
                    "inv boxes at {w}"
                );
            }
        }
    }
}

/// |LD_{n,k}| = |S_n^k| = C(n,k) n!/k! via the word bijection.
#[test]
fn digraph_counts_match_formula() {
    for n in 0..=7usize {
        for k in 0..=n {
            let mut digraphs = BTreeSet::new();
            for w in enumerate_words(n, k).unwrap() {
                let g = mahonian::digraphs::LaguerreDigraph::from_word(&w);
                let (_, stats) = g.classify();
                assert_eq!(stats.paths, k);
                digraphs.insert(format!("{:?}", g.arrows()));
            }
            assert_eq!(digraphs.len() as u128, word_count(n, k), "at ({n},{k})");
        }
    }
}

/// Words of a fixed hole set share the tilde-filled distribution regardless
/// of which positions the holes occupy.
#[test]
fn hole_class_distribution_depends_only_on_size() {
    use mahonian::permstats::{distribution, QWeight};
    let n = 4;
    let k = 2;
    let mut polys = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let holes: BTreeSet<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let p = distribution(
            n,
            k,
            QWeight::TildeInvFilled,
            &WordFilter::HolesExactlyAt(holes),
        )
        .unwrap();
        polys.insert(p.render_text());
    }
    assert_eq!(polys.len(), 1, "distribution varies with hole positions");
}

/// The carrier types reject malformed input.
#[test]
fn carriers_validate() {
    assert!(LaguerreWord::parse("0 1").is_err());
    assert!(MultisetWord::new(vec![2], vec![1]).is_err());
    assert!(enumerate_words(3, 4).is_err());
}
