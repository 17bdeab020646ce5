use std::collections::BTreeMap;

use super::{dual_hopf, HopfAlgebra, HopfError};
use crate::algebra::characters;
use crate::exactlin::{span_rank, SparseVec};

/// Group-like elements with their multiplication table.
#[derive(Clone, Debug)]
pub struct GroupLikeSet {
    pub elements: Vec<SparseVec>,
    /// `table[a][b]` is the index of `elements[a] · elements[b]`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    /// Invariant factors such as `"Z2xZ2"`, for abelian groups only.
    pub type_tag: Option<String>,
}

impl GroupLikeSet {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

/// Group-likes of `h` as characters of the dual algebra: a character χ of
/// the dual gives `g = Σ_k χ(f_k) e_k`. Each one is re-checked against
/// `Δ(g) = g⊗g` and `ε(g) = 1`.
pub fn group_likes(h: &HopfAlgebra) -> Result<GroupLikeSet, HopfError> {
    let dual = dual_hopf(h)?;
    let chars = characters(&dual.alg)?;
    let elements: Vec<SparseVec> = chars.into_iter().map(|c| c.values).collect();
    for g in &elements {
        if h.delta(g) != g.tensor(g) {
            return Err(HopfError::Axioms(format!("Δ(g) != g⊗g for g = {}", h.fmt(g))));
        }
        if !h.eps(g).is_one() {
            return Err(HopfError::Axioms(format!("ε(g) != 1 for g = {}", h.fmt(g))));
        }
    }
    if span_rank(&elements) != elements.len() {
        return Err(HopfError::Axioms("group-likes are not linearly independent".into()));
    }
    let n = elements.len();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let p = h.alg.mul(&elements[a], &elements[b]);
            table[a][b] = elements
                .iter()
                .position(|x| *x == p)
                .ok_or_else(|| HopfError::Axioms("group-likes not closed under products".into()))?;
        }
    }
    let identity = elements
        .iter()
        .position(|x| x == h.alg.unit())
        .ok_or_else(|| HopfError::Axioms("unit is not among the group-likes".into()))?;
    let mut set = GroupLikeSet { elements, table, identity, type_tag: None };
    if set.is_abelian() {
        set.type_tag = Some(abelian_invariant_factors(&set.table, identity));
    }
    Ok(set)
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Isomorphism type of a finite abelian group from its table, written by
/// invariant factors (`"Z2xZ6"`, `"Z1"` for the trivial group).
///
/// For each prime `p`, the number of `g` with `g^(p^k) = e` is
/// `p^(Σ_i min(λ_i, k))`, which recovers the partition `λ` of the
/// `p`-primary part.
pub fn abelian_invariant_factors(table: &[Vec<usize>], identity: usize) -> String {
    let n = table.len();
    let pow = |g: usize, k: usize| (0..k).fold(identity, |acc, _| table[acc][g]);
    // cyclic factor sizes per prime, largest first
    let mut primary: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for p in prime_factors(n) {
        let mut counts = vec![1usize];
        let mut pk = 1;
        loop {
            pk *= p;
            let c = (0..n).filter(|&g| pow(g, pk) == identity).count();
            counts.push(c);
            if c == *counts.iter().rev().nth(1).unwrap() {
                break;
            }
        }
        // number of parts ≥ k is log_p(counts[k] / counts[k-1])
        let mut parts_at_least = Vec::new();
        for k in 1..counts.len() {
            let mut ratio = counts[k] / counts[k - 1];
            let mut e = 0;
            while ratio > 1 {
                ratio /= p;
                e += 1;
            }
            parts_at_least.push(e);
        }
        let nparts = parts_at_least.first().copied().unwrap_or(0);
        let mut sizes = Vec::new();
        for i in 0..nparts {
            let len = parts_at_least.iter().filter(|&&m| m > i).count();
            sizes.push(p.pow(len as u32));
        }
        primary.insert(p, sizes);
    }
    // invariant factors d_1 | d_2 | …: combine the i-th largest of each prime
    let width = primary.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = Vec::new();
    for i in 0..width {
        let f: usize = primary.values().map(|v| v.get(i).copied().unwrap_or(1)).product();
        factors.push(f);
    }
    factors.reverse();
    if factors.is_empty() {
        return "Z1".into();
    }
    factors.iter().map(|f| format!("Z{f}")).collect::<Vec<_>>().join("x")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_of(orders: &[usize]) -> (Vec<Vec<usize>>, usize) {
        // direct product of cyclic groups, mixed radix
        let n: usize = orders.iter().product();
        let digits = |mut x: usize| {
            orders
                .iter()
                .map(|&m| {
                    let d = x % m;
                    x /= m;
                    d
                })
                .collect::<Vec<_>>()
        };
        let index = |ds: &[usize]| ds.iter().zip(orders).rev().fold(0, |acc, (d, m)| acc * m + d);
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let s: Vec<usize> =
                            digits(a).iter().zip(digits(b)).zip(orders).map(|((x, y), m)| (x + y) % m).collect();
                        index(&s)
                    })
                    .collect()
            })
            .collect();
        (table, 0)
    }

    #[test]
    fn invariant_factor_names() {
        for (orders, name) in [
            (vec![1], "Z1"),
            (vec![4], "Z4"),
            (vec![2, 2], "Z2xZ2"),
            (vec![2, 3], "Z6"),
            (vec![2, 6], "Z2xZ6"),
            (vec![3, 4], "Z12"),
            (vec![2, 2, 3], "Z2xZ6"),
            (vec![8], "Z8"),
            (vec![2, 4], "Z2xZ4"),
        ] {
            let (t, e) = table_of(&orders);
            assert_eq!(abelian_invariant_factors(&t, e), name, "{orders:?}");
        }
    }
}
