//! Multiset permutations, b-codes, the slot-labeled insertion bijection ψ
//! (which transports inv to maj while preserving right-to-left minima), and
//! the multiset Haglund-Remmel-Wilson identity sides.

use crate::error::{Error, Result};
use crate::permstats::{self, descent_set, inv_box_vector, inversions, major_index};
use crate::polyring::Poly;
use rayon::iter::{ParallelBridge, ParallelIterator};
use std::collections::BTreeSet;
use std::fmt;

/// A word over the multiset {1^{m_1}, ..., r^{m_r}}: each value i in [r]
/// occurs exactly m_i times.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultisetWord {
    mult: Vec<usize>,
    letters: Vec<u32>,
}

impl MultisetWord {
    pub fn new(mult: Vec<usize>, letters: Vec<u32>) -> Result<Self> {
        let mut counts = vec![0usize; mult.len() + 1];
        for &l in &letters {
            if l == 0 || l as usize > mult.len() {
                return Err(Error::InvalidArgument(format!(
                    "letter {l} outside 1..={}",
                    mult.len()
                )));
            }
            counts[l as usize] += 1;
        }
        if counts[1..] != mult[..] {
            return Err(Error::InvalidArgument(
                "letter multiplicities do not match the alphabet".to_string(),
            ));
        }
        Ok(MultisetWord { mult, letters })
    }

    /// The word with the given letters over the alphabet they determine
    /// (r = max letter, m_i = occurrence count).
    pub fn from_letters(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidArgument("letters must be positive".into()));
        }
        let r = letters.iter().copied().max().unwrap_or(0) as usize;
        let mut mult = vec![0usize; r];
        for &l in &letters {
            mult[l as usize - 1] += 1;
        }
        Ok(MultisetWord { mult, letters })
    }

    /// The nondecreasing rearrangement.
    pub fn sorted(mult: &[usize]) -> Self {
        let letters = mult
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| std::iter::repeat_n((i + 1) as u32, m))
            .collect();
        MultisetWord {
            mult: mult.to_vec(),
            letters,
        }
    }

    pub fn alphabet(&self) -> &[usize] {
        &self.mult
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for MultisetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Classic multiset next-permutation; emits every rearrangement once,
/// starting from the sorted word, in lex order.
fn next_permutation(letters: &mut [u32]) -> bool {
    let n = letters.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && letters[i - 1] >= letters[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while letters[j] <= letters[i - 1] {
        j -= 1;
    }
    letters.swap(i - 1, j);
    letters[i..].reverse();
    true
}

/// Streams 𝔖_M in lex order.
pub fn enumerate_multiset(mult: &[usize]) -> impl Iterator<Item = MultisetWord> {
    let start = MultisetWord::sorted(mult);
    let mut current = Some(start);
    std::iter::from_fn(move || {
        let word = current.take()?;
        let mut next = word.clone();
        if next_permutation(&mut next.letters) {
            current = Some(next);
        }
        Some(word)
    })
}

/// |𝔖_M| = n! / (m_1! ... m_r!).
pub fn multiset_count(mult: &[usize]) -> u128 {
    let n: usize = mult.iter().sum();
    let fact = |m: usize| -> u128 { (1..=m as u128).product() };
    mult.iter().fold(fact(n), |acc, &m| acc / fact(m))
}

/// Positions (0-based) of the labeled letters in π* order: the i-th entry is
/// where the i-th smallest letter (copies ordered by occurrence) sits in `w`.
fn star_positions(w: &MultisetWord) -> Vec<usize> {
    let mut by_value: Vec<Vec<usize>> = vec![Vec::new(); w.mult.len() + 1];
    for (pos, &l) in w.letters.iter().enumerate() {
        by_value[l as usize].push(pos);
    }
    by_value.into_iter().flatten().collect()
}

/// The b-code: b_i = number of letters strictly smaller than π*_i lying to
/// the right of its occurrence. Satisfies b_i ≤ i-1 and Σ b_i = inv.
pub fn b_code(w: &MultisetWord) -> Vec<usize> {
    let star = star_positions(w);
    star.iter()
        .map(|&pos| {
            let v = w.letters[pos];
            w.letters[pos + 1..].iter().filter(|&&x| x < v).count()
        })
        .collect()
}

/// Labels the len+1 insertion slots of a word: rightmost slot 0, descent
/// slots right-to-left 1..des, leftmost slot des+1, the remaining internal
/// non-descent slots left-to-right from des+2. Returns label per gap index
/// (gap g sits before letter g; gap len is the right end).
fn slot_labels(letters: &[u32]) -> Vec<usize> {
    let len = letters.len();
    let mut labels = vec![usize::MAX; len + 1];
    labels[len] = 0;
    let descents: Vec<usize> = (1..len).filter(|&g| letters[g - 1] > letters[g]).collect();
    for (rank, &g) in descents.iter().rev().enumerate() {
        labels[g] = rank + 1;
    }
    let des = descents.len();
    labels[0] = des + 1;
    let mut next = des + 2;
    #[allow(clippy::needless_range_loop)]
    for g in 1..len {
        if labels[g] == usize::MAX {
            labels[g] = next;
            next += 1;
        }
    }
    labels
}

/// Carlitz's insertion bijection: rebuilds the word by inserting the sorted
/// letters one at a time, each at the slot labeled by its b-code entry.
/// Sends (inv, Rlmin) to (maj, Rlmin).
pub fn carlitz_psi(w: &MultisetWord) -> MultisetWord {
    let code = b_code(w);
    let star = star_positions(w);
    let mut letters: Vec<u32> = Vec::with_capacity(w.len());
    for (i, &pos) in star.iter().enumerate() {
        let v = w.letters[pos];
        if i == 0 {
            letters.push(v);
            continue;
        }
        let labels = slot_labels(&letters);
        let gap = labels
            .iter()
            .position(|&l| l == code[i])
            .expect("b_i <= i-1 always names a labeled slot");
        letters.insert(gap, v);
    }
    MultisetWord {
        mult: w.mult.clone(),
        letters,
    }
}

/// Inverse of ψ: peel insertions off in reverse, reading each deleted
/// letter's slot label back as a b-code entry, then rebuild the unique word
/// with that code.
///
/// A b-code is valid only when it is nonincreasing across equal-valued
/// letters (copies are labeled left to right in the source word), and the
/// last-inserted copy of the maximal value need not be the rightmost one, so
/// the peeling backtracks over the copies of the current maximum until the
/// monotone code is found; ψ being a bijection makes that code unique.
pub fn carlitz_psi_inverse(w: &MultisetWord) -> MultisetWord {
    let n = w.len();
    let star = MultisetWord::sorted(&w.mult).letters;
    let mut code = vec![0usize; n];
    let mut letters = w.letters.clone();
    let peeled = peel(&mut letters, &star, &mut code);
    debug_assert!(peeled, "every multiset word has a monotone b-code");
    word_from_code(&w.mult, &code)
}

/// Peels the letter inserted last off a word holding the i smallest star
/// letters, filling `code[i-1]`; tries every copy of the running maximum and
/// backtracks until the whole code comes out monotone.
fn peel(letters: &mut Vec<u32>, star: &[u32], code: &mut [usize]) -> bool {
    let i = letters.len();
    if i <= 1 {
        return true; // code[0] is always 0
    }
    let v = star[i - 1];
    let candidates: Vec<usize> = (0..i).filter(|&p| letters[p] == v).collect();
    for pos in candidates {
        letters.remove(pos);
        let label = slot_labels(letters)[pos];
        // Code entries are nonincreasing across an equal-value group, i.e.
        // each peeled label must dominate the one peeled just before it.
        let group_ok = i == star.len() || star[i] != v || label >= code[i];
        if group_ok {
            code[i - 1] = label;
            if peel(letters, star, code) {
                return true;
            }
        }
        letters.insert(pos, v);
    }
    false
}

/// Rebuilds the word whose b-code is `code`: place the sorted letters from
/// largest to smallest, each into the free slot with exactly b_i free slots
/// strictly to its right (the choice is forced).
fn word_from_code(mult: &[usize], code: &[usize]) -> MultisetWord {
    let sorted = MultisetWord::sorted(mult);
    let n = sorted.len();
    let mut letters = vec![0u32; n];
    let mut free: Vec<usize> = (0..n).collect();
    for i in (0..n).rev() {
        let idx = free.len() - 1 - code[i];
        let slot = free.remove(idx);
        letters[slot] = sorted.letters[i];
    }
    MultisetWord {
        mult: mult.to_vec(),
        letters,
    }
}

/// Right-to-left minima of a multiset word: values whose first occurrence
/// is ≤ every letter to its right.
pub fn rlmin_multiset(w: &MultisetWord) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    let mut seen = BTreeSet::new();
    for (pos, &v) in w.letters.iter().enumerate() {
        if seen.insert(v) && w.letters[pos + 1..].iter().all(|&x| v <= x) {
            out.insert(v);
        }
    }
    out
}

/// Both sides of the multiset Haglund-Remmel-Wilson identity, expanded
/// exactly (same clearing strategy as `permstats::hrw_sides`).
pub fn wilson_sides(mult: &[usize]) -> Result<(Poly, Poly)> {
    let n: usize = mult.iter().sum();
    crate::check_ground_set(n)?;
    let (lhs, rhs) = enumerate_multiset(mult)
        .par_bridge()
        .map(|w| {
            let letters = w.letters();
            let inv = inversions(letters);
            let maj = major_index(letters);
            let boxes = inv_box_vector(letters);
            let des = descent_set(letters);
            let lhs_drops: Vec<usize> = des.iter().map(|&i| 1 + boxes[i - 1]).collect();
            let lhs = permstats::cleared_product(inv, &lhs_drops);
            let rhs_drops: Vec<usize> = (1..=des.len()).collect();
            let rhs = permstats::cleared_product(maj, &rhs_drops);
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

    fn running_example() -> MultisetWord {
        MultisetWord::from_letters(vec![2, 1, 2, 6, 5, 4, 4, 3]).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_multiset(&[1, 1, 1]).count(), 6);
        let words: Vec<String> = enumerate_multiset(&[2, 1]).map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["1 1 2", "1 2 1", "2 1 1"]);
        assert_eq!(enumerate_multiset(&[0, 0]).count(), 1);
        assert_eq!(multiset_count(&[2, 2, 1]), 30);
    }

    #[test]
    fn b_code_of_running_example() {
        let w = running_example();
        assert_eq!(b_code(&w), vec![0, 1, 0, 0, 1, 1, 3, 4]);
        assert_eq!(inversions(w.letters()), 10);
        assert_eq!(b_code(&w).iter().sum::<usize>(), 10);
        let sorted = MultisetWord::sorted(&[2, 2, 1]);
        assert!(b_code(&sorted).iter().all(|&b| b == 0));
    }

    #[test]
    fn psi_running_example() {
        let w = running_example();
        let image = carlitz_psi(&w);
        assert_eq!(image.to_string(), "2 6 5 4 4 1 2 3");
        // maj of the image equals inv of the source
        assert_eq!(major_index(image.letters()), 10);
    }

    #[test]
    fn psi_intermediate_alpha5() {
        // Inserting the first five sorted letters of the running example
        // gives 2 4 1 2 3.
        let w = running_example();
        let code = b_code(&w);
        let star = star_positions(&w);
        let mut letters: Vec<u32> = Vec::new();
        for (i, &pos) in star.iter().take(5).enumerate() {
            let v = w.letters[pos];
            if i == 0 {
                letters.push(v);
            } else {
                let labels = slot_labels(&letters);
                let gap = labels.iter().position(|&l| l == code[i]).unwrap();
                letters.insert(gap, v);
            }
        }
        assert_eq!(letters, vec![2, 4, 1, 2, 3]);
    }

    #[test]
    fn psi_fixes_sorted_words() {
        let sorted = MultisetWord::sorted(&[1, 2, 3]);
        assert_eq!(carlitz_psi(&sorted), sorted);
        assert_eq!(carlitz_psi_inverse(&sorted), sorted);
    }

    #[test]
    fn psi_inverse_of_running_example() {
        let image = MultisetWord::from_letters(vec![2, 6, 5, 4, 4, 1, 2, 3]).unwrap();
        assert_eq!(carlitz_psi_inverse(&image), running_example());
    }

    #[test]
    fn psi_round_trip_exhaustive() {
        for w in enumerate_multiset(&[2, 2, 1]) {
            assert_eq!(carlitz_psi_inverse(&carlitz_psi(&w)), w, "at {w}");
            assert_eq!(carlitz_psi(&carlitz_psi_inverse(&w)), w, "at {w}");
        }
    }

    #[test]
    fn rlmin_examples() {
        assert_eq!(rlmin_multiset(&running_example()), BTreeSet::from([1, 3]));
        let image = MultisetWord::from_letters(vec![2, 6, 5, 4, 4, 1, 2, 3]).unwrap();
        assert_eq!(rlmin_multiset(&image), BTreeSet::from([1, 3]));
        let sorted = MultisetWord::sorted(&[2, 1, 2]);
        assert_eq!(rlmin_multiset(&sorted), BTreeSet::from([1, 2, 3]));
    }

    #[test]
    fn wilson_small_alphabets() {
        let (l, r) = wilson_sides(&[1, 1]).unwrap();
        let expected = Poly::from_terms(&[(1, &[]), (1, &[("q", 1)]), (1, &[("z", 1)])]);
        assert_eq!(l, expected);
        assert_eq!(r, expected);

        let (l, r) = wilson_sides(&[2]).unwrap();
        assert_eq!(l, Poly::one());
        assert_eq!(r, Poly::one());

        let (l, r) = wilson_sides(&[1, 1, 1]).unwrap();
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
        assert_eq!(l, expected);
        assert_eq!(r, expected);
    }

    #[test]
    fn psi_transports_inv_to_maj_small_alphabets() {
        // All compositions of 5 into at most 3 parts.
        let mut alphabets = Vec::new();
        for a in 1..=5usize {
            for b in 0..=5 - a {
                let c = 5 - a - b;
                if b == 0 && c > 0 {
                    continue;
                }
                let mut alpha = vec![a];
                if b > 0 {
                    alpha.push(b);
                }
                if c > 0 {
                    alpha.push(c);
                }
                alphabets.push(alpha);
            }
        }
        for alpha in alphabets {
            for w in enumerate_multiset(&alpha) {
                let image = carlitz_psi(&w);
                assert_eq!(carlitz_psi_inverse(&image), w, "round trip at {w}");
                assert_eq!(
                    major_index(image.letters()),
                    inversions(w.letters()),
                    "maj/inv transport at {w}"
                );
                assert_eq!(
                    rlmin_multiset(&image),
                    rlmin_multiset(&w),
                    "rlmin preserved at {w}"
                );
            }
        }
    }

    #[test]
    fn psi_inverse_handles_out_of_order_copies() {
        // ψ(2211) = 2121: the last-inserted copy of 2 is the leftmost one,
        // so the inverse cannot simply delete the rightmost maximum.
        let w = MultisetWord::from_letters(vec![2, 2, 1, 1]).unwrap();
        let image = carlitz_psi(&w);
        assert_eq!(image.to_string(), "2 1 2 1");
        assert_eq!(carlitz_psi_inverse(&image), w);
    }

    #[test]
    fn invalid_words_rejected() {
        assert!(MultisetWord::new(vec![1, 1], vec![1, 1]).is_err());
        assert!(MultisetWord::new(vec![1, 1], vec![1, 3]).is_err());
        assert!(MultisetWord::from_letters(vec![0]).is_err());
    }
}
