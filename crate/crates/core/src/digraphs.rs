//! Laguerre digraphs (successor partial maps with in/out degree ≤ 1), the
//! five-class vertex classification with the 0-boundary convention, cyclic
//! and linear permutation statistics, and the digraph-side enumerators.

use crate::error::{Error, Result};
use crate::permstats::{enumerate_words, LaguerreWord, Letter};
use crate::polyring::{var, Monomial, Poly};
use rayon::iter::{ParallelBridge, ParallelIterator};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A digraph on [n] in which every vertex has in-degree ≤ 1 and out-degree
/// ≤ 1; the components are disjoint paths and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaguerreDigraph {
    n: usize,
    succ: Vec<Option<u32>>, // succ[i-1] = successor of vertex i
}

impl LaguerreDigraph {
    pub fn new(n: usize, arrows: &BTreeMap<u32, u32>) -> Result<Self> {
        let mut succ = vec![None; n];
        let mut indegree = vec![0usize; n + 1];
        for (&i, &j) in arrows {
            if i == 0 || i as usize > n || j == 0 || j as usize > n {
                return Err(Error::InvalidArgument(format!(
                    "arrow {i} -> {j} outside [{n}]"
                )));
            }
            succ[i as usize - 1] = Some(j);
            indegree[j as usize] += 1;
            if indegree[j as usize] > 1 {
                return Err(Error::InvalidArgument(format!(
                    "vertex {j} has in-degree > 1"
                )));
            }
        }
        Ok(LaguerreDigraph { n, succ })
    }

    pub fn from_word(w: &LaguerreWord) -> Self {
        let succ = w
            .letters()
            .iter()
            .map(|l| match l {
                Letter::Num(v) => Some(*v),
                Letter::Hole => None,
            })
            .collect();
        LaguerreDigraph { n: w.n(), succ }
    }

    pub fn to_word(&self) -> LaguerreWord {
        let letters = self
            .succ
            .iter()
            .map(|s| match s {
                Some(v) => Letter::Num(*v),
                None => Letter::Hole,
            })
            .collect();
        LaguerreWord::new(self.n, letters).expect("digraph invariants give a valid word")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn successor(&self, i: u32) -> Option<u32> {
        self.succ[i as usize - 1]
    }

    pub fn arrows(&self) -> BTreeMap<u32, u32> {
        self.succ
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.map(|j| ((i + 1) as u32, j)))
            .collect()
    }

    /// Per-vertex classes plus the aggregate statistics.
    pub fn classify(&self) -> (Vec<VertexClass>, DigraphStats) {
        let n = self.n;
        let mut pred = vec![0u32; n + 1]; // 0 = boundary vertex
        for (i, s) in self.succ.iter().enumerate() {
            if let Some(j) = s {
                pred[*j as usize] = (i + 1) as u32;
            }
        }
        let mut classes = Vec::with_capacity(n);
        let mut stats = DigraphStats::default();
        #[allow(clippy::needless_range_loop)]
        for i in 1..=n as u32 {
            let p = pred[i as usize];
            let s = self.succ[i as usize - 1].unwrap_or(0);
            let class = if p == i && s == i {
                VertexClass::FixedPoint
            } else if p < i && s < i {
                VertexClass::Peak
            } else if p > i && s > i {
                VertexClass::Valley
            } else if p < i && s > i {
                VertexClass::DoubleAscent
            } else {
                VertexClass::DoubleDescent
            };
            match class {
                VertexClass::Peak => stats.pk += 1,
                VertexClass::Valley => stats.val += 1,
                VertexClass::DoubleAscent => stats.da += 1,
                VertexClass::DoubleDescent => stats.dd += 1,
                VertexClass::FixedPoint => stats.fp += 1,
            }
            classes.push(class);
        }

        // Paths start at in-degree-0 vertices; whatever is left lies on cycles.
        let mut on_path = vec![false; n + 1];
        for i in 1..=n {
            if pred[i] == 0 {
                stats.paths += 1;
                let mut v = i;
                loop {
                    on_path[v] = true;
                    match self.succ[v - 1] {
                        Some(next) => v = next as usize,
                        None => break,
                    }
                }
            }
        }
        let mut seen = vec![false; n + 1];
        for i in 1..=n {
            if on_path[i] || seen[i] {
                continue;
            }
            stats.cyc += 1;
            let mut v = i;
            while !seen[v] {
                seen[v] = true;
                v = self.succ[v - 1].expect("cycle vertices have successors") as usize;
            }
        }
        (classes, stats)
    }

    /// DOT rendering with each node labeled by its vertex class.
    pub fn to_dot(&self) -> String {
        let (classes, _) = self.classify();
        let mut out = String::from("digraph laguerre {\n");
        for i in 1..=self.n {
            out.push_str(&format!(
                "  {} [label=\"{} ({})\"];\n",
                i,
                i,
                classes[i - 1].abbrev()
            ));
        }
        for (i, j) in self.arrows() {
            out.push_str(&format!("  {i} -> {j};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for LaguerreDigraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            succ: BTreeMap<String, u32>,
        }
        Repr {
            n: self.n,
            succ: self
                .arrows()
                .into_iter()
                .map(|(i, j)| (i.to_string(), j))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaguerreDigraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            succ: BTreeMap<String, u32>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut arrows = BTreeMap::new();
        for (k, v) in repr.succ {
            let i: u32 = k.parse().map_err(|_| D::Error::custom("bad vertex key"))?;
            arrows.insert(i, v);
        }
        LaguerreDigraph::new(repr.n, &arrows).map_err(D::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
    FixedPoint,
}

impl VertexClass {
    pub fn abbrev(self) -> &'static str {
        match self {
            VertexClass::Peak => "pk",
            VertexClass::Valley => "val",
            VertexClass::DoubleAscent => "da",
            VertexClass::DoubleDescent => "dd",
            VertexClass::FixedPoint => "fp",
        }
    }
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.abbrev())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphStats {
    pub pk: usize,
    pub val: usize,
    pub da: usize,
    pub dd: usize,
    pub fp: usize,
    pub cyc: usize,
    pub paths: usize,
}

fn class_monomial(stats: &DigraphStats, k_shift: usize) -> Poly {
    Poly::term(
        1,
        Monomial::from_pairs(&[
            (var("u1"), (stats.pk - k_shift) as u32),
            (var("u2"), stats.val as u32),
            (var("u3"), stats.da as u32),
            (var("u4"), stats.dd as u32),
            (var("a"), stats.fp as u32),
            (var("b"), stats.cyc as u32),
        ]),
    )
}

fn ld_sum(n: usize, k: usize, shift: bool) -> Result<Poly> {
    let sum = enumerate_words(n, k)?
        .par_bridge()
        .map(|w| {
            let (_, stats) = LaguerreDigraph::from_word(&w).classify();
            class_monomial(&stats, if shift { k } else { 0 })
        })
        .reduce(Poly::zero, |a, p| a.add(&p));
    Ok(sum)
}

/// Enumerative polynomial of Laguerre digraphs on [n] with k paths,
/// weighted u1^{pk-k} u2^val u3^da u4^dd a^fp b^cyc (pk ≥ k always).
pub fn ld_enumerator(n: usize, k: usize) -> Result<Poly> {
    ld_sum(n, k, true)
}

/// Same enumerator with the raw u1^pk weight, no shift by k.
pub fn ld_enumerator_unshifted(n: usize, k: usize) -> Result<Poly> {
    ld_sum(n, k, false)
}

/// Cyclic statistics of a permutation given in one-line form.
#[derive(Debug, Clone, Copy, Default)]
pub struct CycleStats {
    pub cpk: usize,
    pub cval: usize,
    pub cdrise: usize,
    pub cdfall: usize,
    pub fix: usize,
    pub cyc: usize,
    pub crise: usize,
    pub cfall: usize,
}

impl CycleStats {
    pub fn cyc2(&self) -> usize {
        self.cyc - self.fix
    }
}

/// Classifies every value of a permutation by comparing it with its image
/// and preimage: this is the digraph classification of its functional graph.
pub fn cycle_stats(w: &LaguerreWord) -> Result<CycleStats> {
    if w.hole_count() != 0 {
        return Err(Error::InvalidArgument(
            "cycle statistics need a total permutation".to_string(),
        ));
    }
    let g = LaguerreDigraph::from_word(w);
    let (_, d) = g.classify();
    let mut s = CycleStats {
        cpk: d.pk,
        cval: d.val,
        cdrise: d.da,
        cdfall: d.dd,
        fix: d.fp,
        cyc: d.cyc,
        ..Default::default()
    };
    for (i, l) in w.letters().iter().enumerate() {
        if let Letter::Num(v) = l {
            let i = (i + 1) as u32;
            if i < *v {
                s.crise += 1;
            } else if i > *v {
                s.cfall += 1;
            }
        }
    }
    Ok(s)
}

/// Σ over 𝔖_n of u1^cpk u2^cval u3^cdrise u4^cdfall a^fix b^cyc.
pub fn perm_cycle_poly(n: usize) -> Result<Poly> {
    let sum = enumerate_words(n, 0)?
        .par_bridge()
        .map(|w| {
            let (_, stats) = LaguerreDigraph::from_word(&w).classify();
            class_monomial(&stats, 0)
        })
        .reduce(Poly::zero, |a, p| a.add(&p));
    Ok(sum)
}

/// Σ over 𝔖_n (as words with π_0 = π_{n+1} = 0) of
/// u1^ppk u2^pval u3^pda u4^pdd.
pub fn perm_linear_poly(n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "linear statistics need n >= 1".to_string(),
        ));
    }
    let (u1, u2, u3, u4) = (var("u1"), var("u2"), var("u3"), var("u4"));
    let sum = enumerate_words(n, 0)?
        .par_bridge()
        .map(|w| {
            let vals: Vec<u32> = w.values().iter().map(|&v| v as u32).collect();
            let (mut ppk, mut pval, mut pda, mut pdd) = (0u32, 0u32, 0u32, 0u32);
            for i in 0..n {
                let prev = if i == 0 { 0 } else { vals[i - 1] };
                let next = if i + 1 == n { 0 } else { vals[i + 1] };
                let v = vals[i];
                if prev < v && v > next {
                    ppk += 1;
                } else if prev > v && v < next {
                    pval += 1;
                } else if prev < v && v < next {
                    pda += 1;
                } else {
                    pdd += 1;
                }
            }
            Poly::term(
                1,
                Monomial::from_pairs(&[(u1, ppk), (u2, pval), (u3, pda), (u4, pdd)]),
            )
        })
        .reduce(Poly::zero, |a, p| a.add(&p));
    Ok(sum)
}

/// The statistics side of the Zhu-array interpretation: Σ over 𝔖_n of
/// a1^{crise-cyc2} b1^{cfall-cyc2} x^cfall (λ+dx)^crise
/// (a2(λ+dx)+b2x)^fix (a2b1+a1b2)^cyc2.
pub fn zhu_rhs(n: usize) -> Result<Poly> {
    let lam_dx = Poly::var(var("la")).add(&Poly::var(var("d")).mul(&Poly::var(var("x"))));
    let fix_base = Poly::var(var("a2"))
        .mul(&lam_dx)
        .add(&Poly::var(var("b2")).mul(&Poly::var(var("x"))));
    let cyc2_base = Poly::var(var("a2"))
        .mul(&Poly::var(var("b1")))
        .add(&Poly::var(var("a1")).mul(&Poly::var(var("b2"))));
    let (a1, b1, x) = (var("a1"), var("b1"), var("x"));
    let sum = enumerate_words(n, 0)?
        .par_bridge()
        .map(|w| {
            let s = cycle_stats(&w).expect("k = 0 words are permutations");
            let cyc2 = s.cyc2();
            // Every non-fixed cycle has at least one rise and one fall.
            let mono = Poly::term(
                1,
                Monomial::from_pairs(&[
                    (a1, (s.crise - cyc2) as u32),
                    (b1, (s.cfall - cyc2) as u32),
                    (x, s.cfall as u32),
                ]),
            );
            mono.mul(&lam_dx.pow(s.crise as u32))
                .mul(&fix_base.pow(s.fix as u32))
                .mul(&cyc2_base.pow(cyc2 as u32))
        })
        .reduce(Poly::zero, |a, p| a.add(&p));
    Ok(sum)
}

/// Both sides of the Zhu remark: μ_n of the `zhu` continued-fraction preset
/// against the cycle-statistics sum.
pub fn zhu_sides(n: usize) -> Result<(Poly, Poly)> {
    let params = crate::jacobi_rogers::preset("zhu")?;
    let table = crate::jacobi_rogers::mu_table(&params, n);
    Ok((table.entry(n, 0).clone(), zhu_rhs(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_digraph() -> LaguerreDigraph {
        LaguerreDigraph::from_word(&LaguerreWord::parse("3 2 5 * 1 8 6 *").unwrap())
    }

    #[test]
    fn word_digraph_round_trip() {
        let g = paper_digraph();
        assert_eq!(
            g.arrows(),
            BTreeMap::from([(1, 3), (2, 2), (3, 5), (5, 1), (6, 8), (7, 6)])
        );
        assert_eq!(g.to_word().to_string(), "3 2 5 * 1 8 6 *");
        for w in enumerate_words(4, 2).unwrap() {
            assert_eq!(LaguerreDigraph::from_word(&w).to_word(), w);
        }
    }

    #[test]
    fn classify_paper_digraph() {
        let (classes, stats) = paper_digraph().classify();
        assert_eq!(stats.pk, 4); // vertices 4, 5, 7, 8
        assert_eq!(stats.val, 2); // 1, 6
        assert_eq!(stats.da, 1); // 3
        assert_eq!(stats.dd, 0);
        assert_eq!(stats.fp, 1); // 2
        assert_eq!(stats.cyc, 2);
        assert_eq!(stats.paths, 2);
        assert_eq!(classes[3], VertexClass::Peak); // isolated vertex 4
        assert_eq!(classes[1], VertexClass::FixedPoint);
        assert_eq!(stats.pk, stats.val + stats.paths);
    }

    #[test]
    fn classify_trivial_digraphs() {
        let loops = LaguerreDigraph::from_word(&LaguerreWord::parse("1 2 3").unwrap());
        let (_, s) = loops.classify();
        assert_eq!((s.fp, s.cyc, s.paths), (3, 3, 0));
        assert_eq!((s.pk, s.val, s.da, s.dd), (0, 0, 0, 0));

        let single = LaguerreDigraph::from_word(&LaguerreWord::parse("*").unwrap());
        let (classes, s) = single.classify();
        assert_eq!(classes[0], VertexClass::Peak); // 0 < 1 > 0
        assert_eq!(s.paths, 1);

        let empty = LaguerreDigraph::from_word(&LaguerreWord::parse("* * *").unwrap());
        let (_, s) = empty.classify();
        assert_eq!((s.paths, s.cyc, s.pk), (3, 0, 3));
    }

    #[test]
    fn digraph_json_round_trip() {
        let g = paper_digraph();
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.starts_with(r#"{"n":8,"succ":{"1":3,"#));
        let back: LaguerreDigraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        // in-degree violation rejected
        assert!(
            serde_json::from_str::<LaguerreDigraph>(r#"{"n":2,"succ":{"1":1,"2":1}}"#).is_err()
        );
    }

    #[test]
    fn ld_enumerator_base_cases() {
        assert_eq!(
            ld_enumerator(1, 0).unwrap(),
            Poly::from_terms(&[(1, &[("a", 1), ("b", 1)])])
        );
        assert_eq!(ld_enumerator(1, 1).unwrap(), Poly::one());
        let expected = Poly::from_terms(&[
            (1, &[("u3", 1)]),
            (1, &[("u4", 1)]),
            (2, &[("a", 1), ("b", 1)]),
        ]);
        assert_eq!(ld_enumerator(2, 1).unwrap(), expected);
    }

    #[test]
    fn peak_valley_path_balance() {
        for n in 0..=5 {
            for k in 0..=n {
                for w in enumerate_words(n, k).unwrap() {
                    let (_, s) = LaguerreDigraph::from_word(&w).classify();
                    assert_eq!(s.pk, s.val + s.paths, "at {w}");
                    assert_eq!(s.pk + s.val + s.da + s.dd + s.fp, n, "at {w}");
                    assert_eq!(s.paths, k, "at {w}");
                }
            }
        }
    }

    #[test]
    fn cycle_poly_small() {
        assert_eq!(perm_cycle_poly(0).unwrap(), Poly::one());
        assert_eq!(
            perm_cycle_poly(1).unwrap(),
            Poly::from_terms(&[(1, &[("a", 1), ("b", 1)])])
        );
        let expected = Poly::from_terms(&[
            (1, &[("a", 2), ("b", 2)]),
            (1, &[("u1", 1), ("u2", 1), ("b", 1)]),
        ]);
        assert_eq!(perm_cycle_poly(2).unwrap(), expected);
    }

    #[test]
    fn linear_poly_small() {
        assert_eq!(
            perm_linear_poly(1).unwrap(),
            Poly::from_terms(&[(1, &[("u1", 1)])])
        );
        let expected =
            Poly::from_terms(&[(1, &[("u1", 1), ("u3", 1)]), (1, &[("u1", 1), ("u4", 1)])]);
        assert_eq!(perm_linear_poly(2).unwrap(), expected);
        // every nonempty word has a maximum, so u1 divides
        for n in 1..=5 {
            assert!(perm_linear_poly(n)
                .unwrap()
                .div_exact_var(var("u1"))
                .is_ok());
        }
    }

    #[test]
    fn zhu_rhs_base_case() {
        // single permutation of [1] is a fixed point
        let expected = Poly::var(var("a2"))
            .mul(&Poly::var(var("la")).add(&Poly::var(var("d")).mul(&Poly::var(var("x")))))
            .add(&Poly::var(var("b2")).mul(&Poly::var(var("x"))));
        assert_eq!(zhu_rhs(1).unwrap(), expected);
        assert_eq!(zhu_rhs(0).unwrap(), Poly::one());
    }
}
