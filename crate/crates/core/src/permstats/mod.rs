//! Words over ordered alphabets, Laguerre words (partial permutations in
//! word form), their inversion/major-index/right-to-left-minimum statistics,
//! and the distribution polynomials built from them.
//!
//! The hole symbol ◇ is the maximal letter; two holes are equal, so a pair
//! of holes is never an inversion and never a descent.

mod distribution;
mod enumerate;
mod matrix;

pub(crate) use distribution::cleared_product;
pub use distribution::{distribution, hrw_sides, QWeight, WordFilter};
pub use enumerate::{enumerate_words, k_subsets_colex, word_count};
pub use matrix::ZeroOneMatrix;

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A letter of a Laguerre word: a numeral in [n] or the hole symbol,
/// ordered 1 < 2 < ... < n < ◇.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Num(u32),
    Hole,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Num(v) => write!(f, "{v}"),
            Letter::Hole => f.write_str("*"),
        }
    }
}

/// A partial permutation of [n] in word form: a word of length n over
/// [n] ∪ {◇} whose numerals are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaguerreWord {
    n: usize,
    letters: Vec<Letter>,
}

impl LaguerreWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if letters.len() != n {
            return Err(Error::InvalidArgument(format!(
                "word length {} does not match n = {n}",
                letters.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for l in &letters {
            if let Letter::Num(v) = l {
                let v = *v as usize;
                if v == 0 || v > n {
                    return Err(Error::InvalidArgument(format!(
                        "letter {v} outside 1..={n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidArgument(format!("repeated numeral {v}")));
                }
                seen[v] = true;
            }
        }
        Ok(LaguerreWord { n, letters })
    }

    /// Parses the space-separated text form, `*` for ◇, e.g. `3 2 5 * 1 8 6 *`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "*" {
                letters.push(Letter::Hole);
            } else {
                let v: u32 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad token {tok:?}")))?;
                letters.push(Letter::Num(v));
            }
        }
        if letters.is_empty() {
            return Err(Error::Parse("empty word".to_string()));
        }
        let n = letters.len();
        LaguerreWord::new(n, letters).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Builds a word from the JSON value form: 0 encodes ◇.
    pub fn from_values(vals: &[i64]) -> Result<Self> {
        let letters = vals
            .iter()
            .map(|&v| {
                if v == 0 {
                    Ok(Letter::Hole)
                } else if v > 0 {
                    Ok(Letter::Num(v as u32))
                } else {
                    Err(Error::Parse(format!("negative letter {v}")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let n = letters.len();
        LaguerreWord::new(n, letters).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn hole_count(&self) -> usize {
        self.letters
            .iter()
            .filter(|l| matches!(l, Letter::Hole))
            .count()
    }

    /// The image set S: numerals occurring in the word.
    pub fn image(&self) -> BTreeSet<u32> {
        self.letters
            .iter()
            .filter_map(|l| match l {
                Letter::Num(v) => Some(*v),
                Letter::Hole => None,
            })
            .collect()
    }

    /// Value form: 0 encodes ◇.
    pub fn values(&self) -> Vec<i64> {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::Num(v) => *v as i64,
                Letter::Hole => 0,
            })
            .collect()
    }
}

impl fmt::Display for LaguerreWord {
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

/// Descent set of a word over any ordered alphabet: 1-based positions i with
/// w_i > w_{i+1}.
pub fn descent_set<T: Ord>(w: &[T]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

/// Number of inversion indexes ending at 1-based position `i`:
/// #{j < i : w_j > w_i}.
pub fn inv_box_at<T: Ord>(w: &[T], i: usize) -> Result<usize> {
    if i == 0 || i > w.len() {
        return Err(Error::InvalidArgument(format!(
            "position {i} out of range 1..={}",
            w.len()
        )));
    }
    Ok(w[..i - 1].iter().filter(|x| **x > w[i - 1]).count())
}

pub fn inv_box_vector<T: Ord>(w: &[T]) -> Vec<usize> {
    (1..=w.len()).map(|i| inv_box_at(w, i).unwrap()).collect()
}

/// Plain inversion count of a word (no between-set part).
pub fn inversions<T: Ord>(w: &[T]) -> usize {
    inv_box_vector(w).iter().sum()
}

/// Plain major index of a word (no between-set part).
pub fn major_index<T: Ord>(w: &[T]) -> usize {
    descent_set(w).iter().sum()
}

/// Between-set inversions inv(A,B) = #{(a,b) ∈ A×B : a > b}.
pub fn between_inversions(a: &BTreeSet<u32>, b: &BTreeSet<u32>) -> usize {
    a.iter().map(|x| b.iter().filter(|y| x > y).count()).sum()
}

/// Every word-level statistic of a partial permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatRecord {
    pub n: usize,
    pub holes: usize,
    pub des_set: BTreeSet<usize>,
    pub inv_box: Vec<usize>,
    pub inv0: usize,
    pub maj0: usize,
    pub between: usize,
    pub inv: usize,
    pub maj: usize,
    pub inv_filled: usize,
    pub inv_holes: usize,
    pub image: BTreeSet<u32>,
    pub rlmin_set: BTreeSet<u32>,
}

impl StatRecord {
    /// inv_◆ plus the between-set part.
    pub fn tilde_inv_filled(&self) -> usize {
        self.inv_filled + self.between
    }

    pub fn rlmin(&self) -> usize {
        self.rlmin_set.len()
    }
}

/// Computes every statistic of a Laguerre word in one pass.
pub fn full_stats(w: &LaguerreWord) -> StatRecord {
    let letters = &w.letters;
    let n = w.n;
    let des_set: BTreeSet<usize> = descent_set(letters).into_iter().collect();
    let inv_box = inv_box_vector(letters);
    let inv0: usize = inv_box.iter().sum();
    let maj0: usize = des_set.iter().sum();

    let image = w.image();
    let complement: BTreeSet<u32> = (1..=n as u32).filter(|v| !image.contains(v)).collect();
    let between = between_inversions(&image, &complement);

    // Inversion pairs split by their left member.
    let mut inv_filled = 0;
    let mut inv_holes = 0;
    for i in 0..n {
        for j in i + 1..n {
            if letters[i] > letters[j] {
                match letters[i] {
                    Letter::Num(_) => inv_filled += 1,
                    Letter::Hole => inv_holes += 1,
                }
            }
        }
    }

    // A numeral v is a right-to-left minimum when every letter of [v-1]
    // occurs in front of it.
    let mut rlmin_set = BTreeSet::new();
    let mut seen = vec![false; n + 1];
    let mut prefix_complete = 0usize; // largest m with {1..m} all seen
    for l in letters {
        if let Letter::Num(v) = l {
            if (*v as usize) <= prefix_complete + 1 {
                rlmin_set.insert(*v);
            }
            seen[*v as usize] = true;
            while prefix_complete < n && seen[prefix_complete + 1] {
                prefix_complete += 1;
            }
        }
    }

    StatRecord {
        n,
        holes: w.hole_count(),
        des_set,
        inv_box,
        inv0,
        maj0,
        between,
        inv: inv0 + between,
        maj: maj0 + between,
        inv_filled,
        inv_holes,
        image,
        rlmin_set,
    }
}

/// Order-preserving relabeling of the image set onto `target`; preserves
/// Des, inv0, maj0 and the inv-box vector.
pub fn relabel_image(w: &LaguerreWord, target: &BTreeSet<u32>) -> Result<LaguerreWord> {
    let image = w.image();
    if image.len() != target.len() {
        return Err(Error::InvalidArgument(format!(
            "image sizes differ: {} vs {}",
            image.len(),
            target.len()
        )));
    }
    if target.iter().any(|&v| v == 0 || v as usize > w.n) {
        return Err(Error::InvalidArgument("target not a subset of [n]".into()));
    }
    let map: std::collections::BTreeMap<u32, u32> =
        image.iter().copied().zip(target.iter().copied()).collect();
    let letters = w
        .letters
        .iter()
        .map(|l| match l {
            Letter::Num(v) => Letter::Num(map[v]),
            Letter::Hole => Letter::Hole,
        })
        .collect();
    LaguerreWord::new(w.n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_word() -> LaguerreWord {
        LaguerreWord::parse("3 2 5 * 1 8 6 *").unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let w = paper_word();
        assert_eq!(w.to_string(), "3 2 5 * 1 8 6 *");
        assert_eq!(w.n(), 8);
        assert_eq!(w.hole_count(), 2);
        assert!(LaguerreWord::parse("1 1 *").is_err()); // repeated numeral
        assert!(LaguerreWord::parse("4 1 2").is_err()); // letter outside [n]
    }

    #[test]
    fn descents_of_paper_word() {
        let w = paper_word();
        assert_eq!(descent_set(w.letters()), vec![1, 4, 6]);
        let incr: Vec<Letter> = (1..=5).map(Letter::Num).collect();
        assert!(descent_set(&incr).is_empty());
        // Two adjacent holes are not a descent.
        assert!(descent_set(&[Letter::Hole, Letter::Hole]).is_empty());
    }

    #[test]
    fn inv_box_examples() {
        let w = paper_word();
        assert_eq!(inv_box_at(w.letters(), 5).unwrap(), 4);
        assert_eq!(inv_box_at(w.letters(), 1).unwrap(), 0);
        assert!(inv_box_at(w.letters(), 0).is_err());
        assert!(inv_box_at(w.letters(), 9).is_err());
        // Multiset word 2 1 2 6 5 4 4 3, position 8: letters 6,5,4,4 exceed 3.
        let m = [2u32, 1, 2, 6, 5, 4, 4, 3];
        assert_eq!(inv_box_at(&m, 8).unwrap(), 4);
    }

    #[test]
    fn full_stats_paper_example() {
        let s = full_stats(&paper_word());
        assert_eq!(s.des_set, BTreeSet::from([1, 4, 6]));
        assert_eq!(s.inv0, 8);
        assert_eq!(s.maj0, 11);
        assert_eq!(s.between, 4);
        assert_eq!(s.inv, 12);
        assert_eq!(s.maj, 15);
        assert_eq!(s.image, BTreeSet::from([1, 2, 3, 5, 6, 8]));
        assert_eq!(s.rlmin_set, BTreeSet::from([1]));
        assert_eq!(s.inv, s.tilde_inv_filled() + s.inv_holes);
    }

    #[test]
    fn full_stats_all_holes() {
        let w = LaguerreWord::parse("* * *").unwrap();
        let s = full_stats(&w);
        assert_eq!(s.inv, 0);
        assert_eq!(s.maj, 0);
        assert_eq!(s.between, 0);
        assert!(s.image.is_empty());
        assert!(s.rlmin_set.is_empty());
    }

    #[test]
    fn rlmin_uses_presence_condition() {
        // Table-1 rows: 1◇2 has rlmin {1,2} and weight statistic 0; the
        // full inv still counts the hole inversion (◇,2).
        let s = full_stats(&LaguerreWord::parse("1 * 2").unwrap());
        assert_eq!(s.rlmin_set, BTreeSet::from([1, 2]));
        assert_eq!(s.tilde_inv_filled(), 0);
        assert_eq!(s.inv_holes, 1);
        assert_eq!(s.inv, 1);
        let t = full_stats(&LaguerreWord::parse("2 * 3").unwrap());
        assert!(t.rlmin_set.is_empty());
    }

    #[test]
    fn relabel_preserves_word_shape_stats() {
        let w = LaguerreWord::parse("2 1 * 3").unwrap(); // image {1,2,3} in n=4
        let target = BTreeSet::from([1, 3, 4]);
        let r = relabel_image(&w, &target).unwrap();
        assert_eq!(r.to_string(), "3 1 * 4");
        let (sw, sr) = (full_stats(&w), full_stats(&r));
        assert_eq!(sw.des_set, sr.des_set);
        assert_eq!(sw.inv0, sr.inv0);
        assert_eq!(sw.maj0, sr.maj0);
        assert_eq!(sw.inv_box, sr.inv_box);
    }
}
