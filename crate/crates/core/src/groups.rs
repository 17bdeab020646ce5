//! Finite groups by multiplication table, with symmetric groups as the main
//! instance.
//!
//! Permutations compose right to left: `(p·q)(k) = p(q(k))`. Elements of
//! `S_n` are enumerated in lexicographic one-line order and labelled by a
//! reduced word in the Coxeter generators, found by breadth-first search.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Largest `n` for which [`sn_group`] will build `S_n`.
pub const MAX_SN: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("S_{0} is not supported (need 2 <= n <= {MAX_SN})")]
    UnsupportedDegree(usize),
    #[error("generating set does not reach element {0}")]
    NotGenerating(String),
    #[error("cannot parse group element {0:?}")]
    Parse(String),
    #[error("not a group automorphism: {0}")]
    NotAutomorphism(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(GroupError::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition `s_i = (i, i+1)`, 1-indexed.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} does not exist in S_{n}");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&k| self.images[k - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// Number of pairs `i < j` with `p(i) > p(j)`.
    pub fn inversions(&self) -> usize {
        let p = &self.images;
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Parses `"(2,1,3)"`; the parentheses are optional.
    pub fn parse_one_line(text: &str) -> Result<Self, GroupError> {
        let t = text.trim();
        let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
        let images = inner
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| GroupError::Parse(text.to_string()))?;
        Self::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Coxeter length of `p`: its inversion count.
pub fn coxeter_length(p: &Permutation) -> usize {
    p.inversions()
}

/// The element of `S_n` reversing `1..n`.
pub fn longest_element(n: usize) -> Permutation {
    Permutation { images: (1..=n).rev().collect() }
}

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    perms: Option<Vec<Permutation>>,
    perm_index: HashMap<Permutation, usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order()).field("labels", &self.labels).finish()
    }
}

impl FiniteGroup {
    /// Builds a group from labels and a product rule, checking the axioms.
    pub fn from_fn<F>(labels: Vec<String>, mul: F) -> Result<Self, GroupError>
    where
        F: Fn(usize, usize) -> usize,
    {
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let c = mul(a, b);
                if c >= n {
                    return Err(GroupError::InvalidTable(format!("product {a}*{b} = {c} out of range")));
                }
                table.push(c as u32);
            }
        }
        Self::from_table(labels, table)
    }

    pub fn from_table(labels: Vec<String>, table: Vec<u32>) -> Result<Self, GroupError> {
        let n = labels.len();
        if n == 0 || table.len() != n * n {
            return Err(GroupError::InvalidTable("table size does not match label count".into()));
        }
        let t = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| t(e, x) == x && t(x, e) == x))
            .ok_or_else(|| GroupError::InvalidTable("no identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            inverse[x] = (0..n)
                .find(|&y| t(x, y) == identity && t(y, x) == identity)
                .ok_or_else(|| GroupError::InvalidTable(format!("{} has no inverse", labels[x])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t(t(a, b), c) != t(a, t(b, c)) {
                        return Err(GroupError::InvalidTable(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table, identity, inverse, perms: None, perm_index: HashMap::new() })
    }

    /// Cyclic group of order `n` with generator `g`; labels `e, g, g^2, …`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Self::from_fn(labels, |a, b| (a + b) % n).expect("cyclic group table is valid")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn permutation(&self, a: usize) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p[a])
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.perm_index.get(p).copied()
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Product of a sequence of elements, left to right.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Parses `e`, a word such as `s1.s2.s1` (symmetric groups only), a
    /// one-line permutation `(2,1,3)`, or an exact element label.
    pub fn parse_element(&self, text: &str) -> Result<usize, GroupError> {
        let t = text.trim();
        if t == "e" {
            return Ok(self.identity);
        }
        if let Some(perms) = &self.perms {
            let n = perms[0].degree();
            if t.starts_with('(') || t.contains(',') {
                let p = Permutation::parse_one_line(t)?;
                return self.index_of(&p).ok_or_else(|| GroupError::Parse(text.to_string()));
            }
            let mut acc = Permutation::identity(n);
            for part in t.split('.') {
                let k = part
                    .strip_prefix('s')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&k| k >= 1 && k < n)
                    .ok_or_else(|| GroupError::Parse(text.to_string()))?;
                acc = acc.compose(&Permutation::transposition(n, k));
            }
            return Ok(self.index_of(&acc).expect("S_n contains every permutation"));
        }
        self.index_of_label(t).ok_or_else(|| GroupError::Parse(text.to_string()))
    }
}

/// A list of group elements used to measure word length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingSet {
    pub elements: Vec<usize>,
}

impl GeneratingSet {
    pub fn new(elements: Vec<usize>) -> Self {
        GeneratingSet { elements }
    }

    /// Parses a comma-separated list of elements, e.g. `s1,s1.s2,s2.s1`.
    pub fn parse(g: &FiniteGroup, text: &str) -> Result<Self, GroupError> {
        let elements = text
            .split(',')
            .map(|w| g.parse_element(w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GeneratingSet { elements })
    }
}

/// `S_n` with its Coxeter generators `[s_1, …, s_{n-1}]`.
pub fn sn_group(n: usize) -> Result<(FiniteGroup, GeneratingSet), GroupError> {
    if !(2..=MAX_SN).contains(&n) {
        return Err(GroupError::UnsupportedDegree(n));
    }
    let perms = all_permutations(n);
    let index: HashMap<Permutation, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let order = perms.len();
    let mut table = Vec::with_capacity(order * order);
    for a in &perms {
        for b in &perms {
            table.push(index[&a.compose(b)] as u32);
        }
    }
    let inverse = perms.iter().map(|p| index[&p.inverse()]).collect();
    let identity = 0; // lexicographically first
    let gens: Vec<usize> = (1..n).map(|i| index[&Permutation::transposition(n, i)]).collect();

    // reduced words by BFS, generators tried in order
    let mut labels: Vec<Option<String>> = vec![None; order];
    labels[identity] = Some("e".to_string());
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = table[x * order + s] as usize;
            if labels[y].is_none() {
                let word = if x == identity {
                    format!("s{}", k + 1)
                } else {
                    format!("{}.s{}", labels[x].as_ref().unwrap(), k + 1)
                };
                labels[y] = Some(word);
                queue.push_back(y);
            }
        }
    }
    let labels = labels.into_iter().map(|l| l.expect("Coxeter generators generate S_n")).collect();
    let g = FiniteGroup { labels, table, identity, inverse, perms: Some(perms), perm_index: index };
    Ok((g, GeneratingSet::new(gens)))
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    // lexicographic order via repeated next-permutation
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation { images: cur.clone() }];
    loop {
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(Permutation { images: cur.clone() });
    }
    out
}

/// Word lengths of every element: BFS from the identity multiplying on the
/// right by the generators exactly as given.
pub fn cayley_lengths(g: &FiniteGroup, gens: &GeneratingSet) -> Result<Vec<usize>, GroupError> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[g.identity()] = 0;
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for &s in &gens.elements {
            let y = g.mul(x, s);
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    if let Some(bad) = dist.iter().position(|&d| d == usize::MAX) {
        return Err(GroupError::NotGenerating(g.label(bad).to_string()));
    }
    Ok(dist)
}

pub fn cayley_length(g: &FiniteGroup, gens: &GeneratingSet, x: usize) -> Result<usize, GroupError> {
    Ok(cayley_lengths(g, gens)?[x])
}

/// A bijection of group elements, meant to be multiplicative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAutomorphism {
    pub map: Vec<usize>,
}

impl GroupAutomorphism {
    pub fn identity(g: &FiniteGroup) -> Self {
        GroupAutomorphism { map: g.elements().collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism { map: other.map.iter().map(|&x| self.map[x]).collect() }
    }

    pub fn is_involution(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &y)| self.map[y] == x)
    }

    /// Checks bijectivity and multiplicativity on all pairs.
    pub fn verify(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        if self.map.len() != g.order() {
            return Err(GroupError::NotAutomorphism("wrong length".into()));
        }
        let mut seen = vec![false; g.order()];
        for &y in &self.map {
            if y >= g.order() || seen[y] {
                return Err(GroupError::NotAutomorphism("not a bijection".into()));
            }
            seen[y] = true;
        }
        for a in g.elements() {
            for b in g.elements() {
                if self.map[g.mul(a, b)] != g.mul(self.map[a], self.map[b]) {
                    return Err(GroupError::NotAutomorphism(format!(
                        "fails on ({}, {})",
                        g.label(a),
                        g.label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks [`verify`](Self::verify) plus `θ∘θ = id`.
    pub fn verify_involutive(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        self.verify(g)?;
        if !self.is_involution() {
            return Err(GroupError::NotAutomorphism("theta∘theta is not the identity".into()));
        }
        Ok(())
    }
}

/// `x ↦ w x w⁻¹`.
pub fn conjugation_automorphism(g: &FiniteGroup, w: usize) -> GroupAutomorphism {
    let wi = g.inv(w);
    GroupAutomorphism { map: g.elements().map(|x| g.mul(g.mul(w, x), wi)).collect() }
}

/// Conjugation by the longest element of `S_n`.
pub fn w0_automorphism(g: &FiniteGroup) -> GroupAutomorphism {
    let n = g.permutation(0).expect("w0 needs a symmetric group").degree();
    let w0 = g.index_of(&longest_element(n)).unwrap();
    conjugation_automorphism(g, w0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(sn_group(2).unwrap().0.order(), 2);
        assert_eq!(sn_group(3).unwrap().0.order(), 6);
        let (g, gens) = sn_group(5).unwrap();
        assert_eq!((g.order(), gens.elements.len()), (120, 4));
        assert!(sn_group(1).is_err());
        assert!(sn_group(8).is_err());
    }

    #[test]
    fn s3_labels_and_parsing() {
        let (g, _) = sn_group(3).unwrap();
        let w = g.parse_element("s1.s2.s1").unwrap();
        assert_eq!(g.label(w), "s1.s2.s1");
        assert_eq!(g.permutation(w).unwrap(), &longest_element(3));
        assert_eq!(g.parse_element("(3,2,1)").unwrap(), w);
        assert_eq!(g.parse_element("e").unwrap(), g.identity());
        assert!(g.parse_element("s3").is_err());
        assert!(g.parse_element("(1,1,2)").is_err());
        let mut labels: Vec<&str> = g.labels().iter().map(|s| s.as_str()).collect();
        labels.sort();
        assert_eq!(labels, ["e", "s1", "s1.s2", "s1.s2.s1", "s2", "s2.s1"]);
    }

    #[test]
    fn lengths() {
        let (g, gens) = sn_group(4).unwrap();
        let w0 = longest_element(4);
        assert_eq!(coxeter_length(&w0), 6);
        assert_eq!(w0.images(), &[4, 3, 2, 1]);
        let d = cayley_lengths(&g, &gens).unwrap();
        assert_eq!(*d.iter().max().unwrap(), 6);
        let (g3, _) = sn_group(3).unwrap();
        let alt = GeneratingSet::parse(&g3, "s1,s1.s2,s2.s1").unwrap();
        let s2 = g3.parse_element("s2").unwrap();
        let w = g3.parse_element("s1.s2.s1").unwrap();
        assert_eq!(cayley_length(&g3, &alt, s2).unwrap(), 2);
        assert_eq!(cayley_length(&g3, &alt, w).unwrap(), 2);
        assert_eq!(cayley_length(&g3, &alt, g3.identity()).unwrap(), 0);
        let only_s1 = GeneratingSet::parse(&g3, "s1").unwrap();
        assert!(matches!(cayley_lengths(&g3, &only_s1), Err(GroupError::NotGenerating(_))));
    }

    #[test]
    fn conjugation() {
        let (g, _) = sn_group(3).unwrap();
        let e = conjugation_automorphism(&g, g.identity());
        assert_eq!(e, GroupAutomorphism::identity(&g));
        let theta = w0_automorphism(&g);
        theta.verify_involutive(&g).unwrap();
        let s1 = g.parse_element("s1").unwrap();
        let s2 = g.parse_element("s2").unwrap();
        assert_eq!(theta.apply(s1), s2);
        let c1 = conjugation_automorphism(&g, s1);
        assert_eq!(c1.apply(s2), g.parse_element("s1.s2.s1").unwrap());
    }

    #[test]
    fn theta_maps_si_to_s_n_minus_i() {
        for n in 2..=5 {
            let (g, gens) = sn_group(n).unwrap();
            let theta = w0_automorphism(&g);
            for i in 1..n {
                assert_eq!(theta.apply(gens.elements[i - 1]), gens.elements[n - i - 1]);
            }
        }
    }

    #[test]
    fn cyclic_groups() {
        let z2 = FiniteGroup::cyclic(2);
        assert_eq!(z2.mul(1, 1), 0);
        assert_eq!(z2.parse_element("g").unwrap(), 1);
        assert!(FiniteGroup::cyclic(4).is_abelian());
    }
}
