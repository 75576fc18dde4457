//! Deterministic streaming enumeration of Laguerre words: hole-position
//! sets in colex order, fillings in lex order over injective sequences.

use super::{LaguerreWord, Letter};
use crate::check_ground_set;
use crate::error::{Error, Result};

/// |𝔖_n^k| = C(n,k) · n!/k!.
pub fn word_count(n: usize, k: usize) -> u128 {
    let binom = |n: u128, k: u128| -> u128 {
        let mut acc = 1u128;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    };
    let mut falling = 1u128; // n!/k! = n (n-1) ... (k+1)
    for v in (k + 1)..=n {
        falling *= v as u128;
    }
    binom(n as u128, k as u128) * falling
}

/// All k-subsets of [n] in colex order, as ascending 1-based vectors.
pub fn k_subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        if k == 0 {
            break;
        }
        // Smallest index whose entry can move right, earlier entries reset.
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            let cap = if i + 1 < k { cur[i + 1] } else { n + 1 };
            if cur[i] + 1 < cap {
                cur[i] += 1;
                for (j, slot) in cur.iter_mut().enumerate().take(i) {
                    *slot = j + 1;
                }
                break;
            }
            i += 1;
        }
    }
    out
}

/// Advances an injective sequence over 1..=n to its lex successor.
fn next_injection(seq: &mut [u32], used: &mut [bool], n: usize) -> bool {
    let m = seq.len();
    let mut i = m;
    while i > 0 {
        let cur = seq[i - 1] as usize;
        used[cur] = false;
        let mut next = cur + 1;
        while next <= n && used[next] {
            next += 1;
        }
        if next <= n {
            seq[i - 1] = next as u32;
            used[next] = true;
            let mut v = 1;
            for slot in seq.iter_mut().skip(i) {
                while used[v] {
                    v += 1;
                }
                *slot = v as u32;
                used[v] = true;
            }
            return true;
        }
        i -= 1;
    }
    false
}

struct WordIter {
    n: usize,
    holes: Vec<Vec<usize>>,
    hole_idx: usize,
    filling: Vec<u32>,
    used: Vec<bool>,
    exhausted: bool,
}

impl WordIter {
    fn reset_filling(&mut self) {
        let m = self.filling.len();
        self.used.iter_mut().for_each(|u| *u = false);
        for (j, slot) in self.filling.iter_mut().enumerate() {
            *slot = (j + 1) as u32;
        }
        for v in 1..=m {
            self.used[v] = true;
        }
    }

    fn current_word(&self) -> LaguerreWord {
        let holes = &self.holes[self.hole_idx];
        let mut letters = Vec::with_capacity(self.n);
        let mut next_fill = 0;
        let mut hole_ptr = 0;
        for pos in 1..=self.n {
            if hole_ptr < holes.len() && holes[hole_ptr] == pos {
                letters.push(Letter::Hole);
                hole_ptr += 1;
            } else {
                letters.push(Letter::Num(self.filling[next_fill]));
                next_fill += 1;
            }
        }
        LaguerreWord { n: self.n, letters }
    }
}

impl Iterator for WordIter {
    type Item = LaguerreWord;

    fn next(&mut self) -> Option<LaguerreWord> {
        if self.exhausted || self.hole_idx >= self.holes.len() {
            return None;
        }
        let word = self.current_word();
        if !next_injection(&mut self.filling, &mut self.used, self.n) {
            self.hole_idx += 1;
            if self.hole_idx < self.holes.len() {
                self.reset_filling();
            } else {
                self.exhausted = true;
            }
        }
        Some(word)
    }
}

/// Streams every element of 𝔖_n^k exactly once in a deterministic order.
pub fn enumerate_words(n: usize, k: usize) -> Result<impl Iterator<Item = LaguerreWord>> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "hole count {k} exceeds n = {n}"
        )));
    }
    check_ground_set(n)?;
    let holes = k_subsets_colex(n, k);
    let m = n - k;
    let mut it = WordIter {
        n,
        holes,
        hole_idx: 0,
        filling: vec![0; m],
        used: vec![false; n + 1],
        exhausted: false,
    };
    it.reset_filling();
    Ok(it)
}
