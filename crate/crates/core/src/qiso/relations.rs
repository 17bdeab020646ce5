//! The relations derived for the entries of `u` from the group relations
//! of S_n, checked inside the concrete doubling.

use super::QisoBundle;
use crate::exactlin::SparseVec;
use crate::report::Report;

fn range(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

/// Ordered pairs `(i, j)` in `1..=m` with `|i − j| > 1`.
fn far_pairs(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if i.abs_diff(j) > 1 {
                out.push((i, j));
            }
        }
    }
    out
}

/// One family of identities over a list of index tuples. An empty list is
/// reported as vacuous; otherwise the first failing tuple is the witness.
fn family<T, F>(r: &mut Report, name: &str, ranges: &str, tuples: Vec<T>, check: F)
where
    F: Fn(&T) -> Result<(), String>,
{
    if tuples.is_empty() {
        r.pass(format!("{name}[{ranges}] vacuous"));
        return;
    }
    let outcome = tuples.iter().try_for_each(|t| check(t));
    r.record(format!("{name}[{ranges}]"), outcome);
}

struct Ctx<'a> {
    b: &'a QisoBundle,
}

impl Ctx<'_> {
    fn u(&self, i: usize, j: usize) -> &SparseVec {
        self.b.u(i, j)
    }

    fn m(&self, xs: &[&SparseVec]) -> SparseVec {
        self.b.mul(xs)
    }

    fn one(&self) -> &SparseVec {
        self.b.k.alg.unit()
    }

    fn zero(&self) -> SparseVec {
        SparseVec::zero(self.b.k.dim())
    }

    fn fmt(&self, x: &SparseVec) -> String {
        self.b.k.fmt(x)
    }

    fn is_zero(&self, x: SparseVec, what: String) -> Result<(), String> {
        if x.is_zero() {
            Ok(())
        } else {
            Err(format!("{what} = {}", self.fmt(&x)))
        }
    }

    fn equal(&self, x: SparseVec, y: SparseVec, what: String) -> Result<(), String> {
        if x == y {
            Ok(())
        } else {
            Err(format!("{what}: {} != {}", self.fmt(&x), self.fmt(&y)))
        }
    }
}

/// Self-adjointness, unitarity, `Δ(u_{i,j}) = Σ_k u_{i,k}⊗u_{k,j}`,
/// `S(u_{i,j}) = u_{j,i}` and `ε(u_{k,j}) = δ_{kj}`.
pub fn verify_u_corepresentation(b: &QisoBundle) -> Report {
    let c = Ctx { b };
    let m = b.n - 1;
    let k = &b.k;
    let d = k.dim();
    let idx = || {
        let mut v = Vec::new();
        for i in 1..=m {
            for j in 1..=m {
                v.push((i, j));
            }
        }
        v
    };
    let mut r = Report::new();
    let bad = idx().into_iter().find(|&(i, j)| &k.alg.star(c.u(i, j)) != c.u(i, j));
    r.check("self_adjoint", bad.is_none(), || format!("u_{:?}* != u_{:?}", bad.unwrap(), bad.unwrap()));
    let target = |i: usize, j: usize| if i == j { c.one().clone() } else { c.zero() };
    // u*u: Σ_k u_{k,i}* u_{k,j};  uu*: Σ_k u_{i,k} u_{j,k}*
    let bad = idx().into_iter().find(|&(i, j)| {
        let s = (1..=m).fold(c.zero(), |acc, t| acc.add(&c.m(&[&k.alg.star(c.u(t, i)), c.u(t, j)])));
        s != target(i, j)
    });
    r.check("unitary_u_star_u", bad.is_none(), || format!("(u*u)_{:?} is wrong", bad.unwrap()));
    let bad = idx().into_iter().find(|&(i, j)| {
        let s = (1..=m).fold(c.zero(), |acc, t| acc.add(&c.m(&[c.u(i, t), &k.alg.star(c.u(j, t))])));
        s != target(i, j)
    });
    r.check("unitary_u_u_star", bad.is_none(), || format!("(uu*)_{:?} is wrong", bad.unwrap()));
    let bad = idx().into_iter().find(|&(i, j)| {
        let rhs = (1..=m).fold(SparseVec::zero(d * d), |acc, t| acc.add(&c.u(i, t).tensor(c.u(t, j))));
        k.delta(c.u(i, j)) != rhs
    });
    r.check("comultiplication", bad.is_none(), || format!("Δ(u_{:?}) != Σ u⊗u", bad.unwrap()));
    let bad = idx().into_iter().find(|&(i, j)| &k.s(c.u(i, j)) != c.u(j, i));
    r.check("antipode_transpose", bad.is_none(), || {
        let (i, j) = bad.unwrap();
        format!("S(u_{i},{j}) != u_{j},{i}")
    });
    let bad = idx().into_iter().find(|&(i, j)| {
        let e = k.eps(c.u(i, j));
        if i == j {
            !e.is_one()
        } else {
            !e.is_zero()
        }
    });
    r.check("counit_delta", bad.is_none(), || format!("ε(u_{:?}) is wrong", bad.unwrap()));
    r
}

/// The relation catalogue among entries of `u`, one check per family with
/// its index range in the name.
pub fn verify_section2_relations(b: &QisoBundle) -> Report {
    let c = Ctx { b };
    let n = b.n;
    let m = n - 1;
    let all = range(1, m);
    let mut r = Report::new();
    let u = |i, j| c.u(i, j);

    family(&mut r, "sumkw", &format!("i=1..{m}"), all.clone(), |&i| {
        let s = (1..=m).fold(c.zero(), |acc, j| acc.add(&c.m(&[u(j, i), u(j, i)])));
        c.equal(s, c.one().clone(), format!("Σ_j u_j,{i}²"))
    });

    let ij: Vec<(usize, usize)> =
        all.iter().flat_map(|&i| range(1, n.saturating_sub(2)).into_iter().map(move |j| (i, j))).collect();
    let ij_desc = format!("i=1..{m},j=1..{}", n - 2);
    family(&mut r, "blpion", &ij_desc, ij.clone(), |&(i, j)| {
        c.is_zero(c.m(&[u(j, i), u(j + 1, i)]), format!("u_{j},{i} u_{},{i}", j + 1))?;
        c.is_zero(c.m(&[u(j + 1, i), u(j, i)]), format!("u_{},{i} u_{j},{i}", j + 1))
    });
    family(&mut r, "blpoz", &ij_desc, ij, |&(i, j)| {
        c.is_zero(c.m(&[u(i, j + 1), u(i, j)]), format!("u_{i},{} u_{i},{j}", j + 1))?;
        c.is_zero(c.m(&[u(i, j), u(i, j + 1)]), format!("u_{i},{j} u_{i},{}", j + 1))
    });

    let far = far_pairs(m);
    let ijk: Vec<(usize, usize, usize)> =
        all.iter().flat_map(|&i| far.iter().map(move |&(j, k)| (i, j, k))).collect();
    let ijk_desc = format!("i=1..{m},|j-k|>1");
    family(&mut r, "dalpion", &ijk_desc, ijk.clone(), |&(i, j, k)| {
        let s = c.m(&[u(j, i), u(k, i)]).add(&c.m(&[u(k, i), u(j, i)]));
        c.is_zero(s, format!("u_{j},{i}u_{k},{i}+u_{k},{i}u_{j},{i}"))
    });
    family(&mut r, "dalpoz", &ijk_desc, ijk, |&(i, j, k)| {
        let s = c.m(&[u(i, k), u(i, j)]).add(&c.m(&[u(i, j), u(i, k)]));
        c.is_zero(s, format!("u_{i},{k}u_{i},{j}+u_{i},{j}u_{i},{k}"))
    });

    family(&mut r, "suma_unit_dwa", "|i-j|>1", far.clone(), |&(i, j)| {
        let l = (1..=m).fold(c.zero(), |acc, k| acc.add(&c.m(&[u(k, i), u(k, j)])));
        let rr = (1..=m).fold(c.zero(), |acc, k| acc.add(&c.m(&[u(k, j), u(k, i)])));
        c.equal(l.clone(), rr, format!("Σ_k u_k,{i}u_k,{j} vs Σ_k u_k,{j}u_k,{i}"))?;
        c.is_zero(l, format!("Σ_k u_k,{i}u_k,{j}"))
    });

    let ijk2: Vec<(usize, usize, usize)> =
        far.iter().flat_map(|&(i, j)| range(1, n.saturating_sub(2)).into_iter().map(move |k| (i, j, k))).collect();
    let ijk2_desc = format!("|i-j|>1,k=1..{}", n - 2);
    family(&mut r, "konik1", &ijk2_desc, ijk2.clone(), |&(i, j, k)| {
        c.is_zero(c.m(&[u(k, i), u(k + 1, j)]), format!("u_{k},{i}u_{},{j}", k + 1))?;
        c.is_zero(c.m(&[u(k, j), u(k + 1, i)]), format!("u_{k},{j}u_{},{i}", k + 1))
    });
    family(&mut r, "konik2", &ijk2_desc, ijk2.clone(), |&(i, j, k)| {
        c.is_zero(c.m(&[u(k + 1, i), u(k, j)]), format!("u_{},{i}u_{k},{j}", k + 1))?;
        c.is_zero(c.m(&[u(k + 1, j), u(k, i)]), format!("u_{},{j}u_{k},{i}", k + 1))
    });
    family(&mut r, "konik1'", &ijk2_desc, ijk2.clone(), |&(i, j, k)| {
        c.is_zero(c.m(&[u(j, k + 1), u(i, k)]), format!("u_{j},{}u_{i},{k}", k + 1))?;
        c.is_zero(c.m(&[u(i, k + 1), u(j, k)]), format!("u_{i},{}u_{j},{k}", k + 1))
    });
    family(&mut r, "konik2'", &ijk2_desc, ijk2, |&(i, j, k)| {
        c.is_zero(c.m(&[u(j, k), u(i, k + 1)]), format!("u_{j},{k}u_{i},{}", k + 1))?;
        c.is_zero(c.m(&[u(i, k), u(j, k + 1)]), format!("u_{i},{k}u_{j},{}", k + 1))
    });

    let quad: Vec<(usize, usize, usize, usize)> =
        far.iter().flat_map(|&(i, j)| far.iter().map(move |&(k, l)| (i, j, k, l))).collect();
    family(&mut r, "krzyzyk", "|i-j|>1,|k-l|>1", quad.clone(), |&(i, j, k, l)| {
        let lhs = c.m(&[u(k, i), u(l, j)]).add(&c.m(&[u(l, i), u(k, j)]));
        let rhs = c.m(&[u(k, j), u(l, i)]).add(&c.m(&[u(l, j), u(k, i)]));
        c.equal(lhs, rhs, format!("(i,j,k,l)=({i},{j},{k},{l})"))
    });
    family(&mut r, "krzyzyk'", "|i-j|>1,|k-l|>1", quad, |&(i, j, k, l)| {
        let lhs = c.m(&[u(j, l), u(i, k)]).add(&c.m(&[u(j, k), u(i, l)]));
        let rhs = c.m(&[u(i, l), u(j, k)]).add(&c.m(&[u(i, k), u(j, l)]));
        c.equal(lhs, rhs, format!("(i,j,k,l)=({i},{j},{k},{l})"))
    });
    family(&mut r, "commut", "|i-j|>1", far.clone(), |&(i, j)| {
        c.equal(c.m(&[u(i, i), u(j, j)]), c.m(&[u(j, j), u(i, i)]), format!("u_{i},{i}u_{j},{j}"))?;
        c.equal(c.m(&[u(i, j), u(j, i)]), c.m(&[u(j, i), u(i, j)]), format!("u_{i},{j}u_{j},{i}"))
    });

    let iq: Vec<(usize, usize)> = range(1, n.saturating_sub(2))
        .into_iter()
        .flat_map(|i| range(1, n.saturating_sub(3)).into_iter().map(move |q| (i, q)))
        .collect();
    let iq_desc = format!("i=1..{},q=1..{}", n - 2, n.saturating_sub(3));
    family(&mut r, "haczyk_podw", &iq_desc, iq.clone(), |&(i, q)| {
        let lhs = c.m(&[u(q, i), u(q + 1, i + 1), u(q + 2, i)]);
        let rhs = c.m(&[u(q, i + 1), u(q + 1, i), u(q + 2, i + 1)]);
        c.equal(lhs, rhs, format!("(i,q)=({i},{q})"))
    });
    family(&mut r, "haczyk_podw'", &iq_desc, iq.clone(), |&(i, q)| {
        let lhs = c.m(&[u(q + 2, i), u(q + 1, i + 1), u(q, i)]);
        let rhs = c.m(&[u(q + 2, i + 1), u(q + 1, i), u(q, i + 1)]);
        c.equal(lhs, rhs, format!("(i,q)=({i},{q})"))
    });
    family(&mut r, "haczyk", &iq_desc, iq.clone(), |&(i, q)| {
        c.is_zero(c.m(&[u(q, i), u(q + 1, i + 1), u(q + 2, i)]), format!("(i,q)=({i},{q}) first"))?;
        c.is_zero(c.m(&[u(q, i + 1), u(q + 1, i), u(q + 2, i + 1)]), format!("(i,q)=({i},{q}) second"))
    });
    family(&mut r, "haczyk'", &iq_desc, iq.clone(), |&(i, q)| {
        c.is_zero(c.m(&[u(q + 2, i), u(q + 1, i + 1), u(q, i)]), format!("(i,q)=({i},{q}) first"))?;
        c.is_zero(c.m(&[u(q + 2, i + 1), u(q + 1, i), u(q, i + 1)]), format!("(i,q)=({i},{q}) second"))
    });
    family(&mut r, "haczyk_poz", &iq_desc, iq.clone(), |&(i, q)| {
        c.is_zero(c.m(&[u(i, q + 2), u(i + 1, q + 1), u(i, q)]), format!("(i,q)=({i},{q}) first"))?;
        c.is_zero(c.m(&[u(i + 1, q + 2), u(i, q + 1), u(i + 1, q)]), format!("(i,q)=({i},{q}) second"))
    });
    family(&mut r, "haczyk_poz'", &iq_desc, iq, |&(i, q)| {
        c.is_zero(c.m(&[u(i, q), u(i + 1, q + 1), u(i, q + 2)]), format!("(i,q)=({i},{q}) first"))?;
        c.is_zero(c.m(&[u(i + 1, q), u(i, q + 1), u(i + 1, q + 2)]), format!("(i,q)=({i},{q}) second"))
    });

    family(&mut r, "skos", &format!("k=2..{}", n.saturating_sub(2)), range(2, n.saturating_sub(2)), |&k| {
        c.is_zero(c.m(&[u(1, k), u(2, k + 1)]), format!("u_1,{k}u_2,{}", k + 1))
    });

    let off: Vec<(usize, usize)> = all
        .iter()
        .flat_map(|&i| all.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| j != i && j != n - i)
        .collect();
    family(&mut r, "diagonal_form", "j!=i,j!=n-i", off, |&(i, j)| c.is_zero(u(i, j).clone(), format!("u_{i},{j}")));

    // n = 2p: the middle entry c and its neighbours
    let even = n % 2 == 0 && n >= 4;
    let p = n / 2;
    let mid = if even { vec![p] } else { vec![] };
    let ab = |i: usize| (u(i, i), u(i, n - i));
    let even_desc = format!("n=2p,p={}", if n % 2 == 0 { p.to_string() } else { "-".into() });
    family(&mut r, "c_squared", &even_desc, if n % 2 == 0 { vec![p] } else { vec![] }, |&p| {
        c.equal(c.m(&[u(p, p), u(p, p)]), c.one().clone(), "c²".into())
    });
    family(&mut r, "cbraid", &even_desc, mid.clone(), |&p| {
        let cc = u(p, p);
        for q in [p + 1, p - 1] {
            let (a, b) = ab(q);
            c.equal(c.m(&[cc, a, cc]), c.m(&[a, cc, a]), format!("c a_{q} c"))?;
            c.equal(c.m(&[cc, b, cc]), c.m(&[b, cc, b]), format!("c b_{q} c"))?;
        }
        Ok(())
    });
    family(&mut r, "apm", &even_desc, mid.clone(), |&p| {
        let cc = u(p, p);
        let (a, b) = ab(p - 1);
        c.equal(c.m(&[a, a, cc]), c.m(&[cc, a, a]), format!("a_{}²c", p - 1))?;
        c.equal(c.m(&[b, b, cc]), c.m(&[cc, b, b]), format!("b_{}²c", p - 1))
    });
    family(&mut r, "apm'", &even_desc, mid.clone(), |&p| {
        let cc = u(p, p);
        let (a, b) = ab(p + 1);
        c.equal(c.m(&[a, a, cc]), c.m(&[cc, a, a]), format!("a_{}²c", p + 1))?;
        c.equal(c.m(&[b, b, cc]), c.m(&[cc, b, b]), format!("b_{}²c", p + 1))
    });
    family(&mut r, "aa3", &even_desc, mid.clone(), |&p| {
        for q in [p - 1, p + 1] {
            let (a, _) = ab(q);
            c.equal(c.m(&[a, a, a]), a.clone(), format!("a_{q}³"))?;
        }
        Ok(())
    });
    family(&mut r, "bazer", &even_desc, mid.clone(), |&p| {
        for q in [p - 1, p + 1] {
            let (a, b) = ab(q);
            c.is_zero(c.m(&[b, a]), format!("b_{q}a_{q}"))?;
        }
        let (a_lo, b_lo) = ab(p - 1);
        let (a_hi, b_hi) = ab(p + 1);
        c.is_zero(c.m(&[b_hi, a_lo]), format!("b_{}a_{}", p + 1, p - 1))?;
        c.is_zero(c.m(&[b_lo, a_hi]), format!("b_{}a_{}", p - 1, p + 1))
    });
    family(&mut r, "abzer", &even_desc, mid, |&p| {
        for q in [p - 1, p + 1] {
            let (a, b) = ab(q);
            c.is_zero(c.m(&[a, b]), format!("a_{q}b_{q}"))?;
        }
        let (a_lo, b_lo) = ab(p - 1);
        let (a_hi, b_hi) = ab(p + 1);
        c.is_zero(c.m(&[a_lo, b_hi]), format!("a_{}b_{}", p - 1, p + 1))?;
        c.is_zero(c.m(&[a_hi, b_lo]), format!("a_{}b_{}", p + 1, p - 1))
    });

    // n = 2p+1: the middle braid relation mixes a's and b's
    let odd = if n % 2 == 1 { vec![(n - 1) / 2] } else { vec![] };
    let odd_desc = format!("n=2p+1,p={}", if n % 2 == 1 { ((n - 1) / 2).to_string() } else { "-".into() });
    let (a, bv) = b.ab();
    let a_ = |i: usize| &a[i - 1];
    let b_ = |i: usize| &bv[i - 1];
    family(&mut r, "weaker", &odd_desc, odd.clone(), |&p| {
        let lhs = c.m(&[a_(p), a_(p + 1), a_(p)]).add(&c.m(&[b_(p + 1), b_(p), b_(p + 1)]));
        let rhs = c.m(&[a_(p + 1), a_(p), a_(p + 1)]).add(&c.m(&[b_(p), b_(p + 1), b_(p)]));
        c.equal(lhs, rhs, "weaker".into())
    });
    family(&mut r, "weaker'", &odd_desc, odd, |&p| {
        let lhs = c.m(&[a_(p), a_(p + 1), a_(p)]).add(&c.m(&[b_(p), b_(p + 1), b_(p)]));
        let rhs = c.m(&[a_(p + 1), a_(p), a_(p + 1)]).add(&c.m(&[b_(p + 1), b_(p), b_(p + 1)]));
        c.equal(lhs, rhs, "weaker'".into())
    });

    let pairs: Vec<(usize, usize)> = all.iter().flat_map(|&i| all.iter().map(move |&j| (i, j))).collect();
    family(&mut r, "iaj", &format!("i,j=1..{m}"), pairs, |&(i, j)| {
        c.equal(c.m(&[a_(j), a_(i), a_(i)]), a_(j).clone(), format!("a_{j}a_{i}²"))?;
        c.equal(c.m(&[a_(i), a_(i), a_(j)]), a_(j).clone(), format!("a_{i}²a_{j}"))
    });
    r
}

/// The four statements about `a_i`, `b_i`, with these taken from
/// [`QisoBundle::ab`].
pub fn verify_theorem_glow(b: &QisoBundle) -> Report {
    let c = Ctx { b };
    let n = b.n;
    let m = n - 1;
    let (a, bv) = b.ab();
    let a_ = |i: usize| &a[i - 1];
    let b_ = |i: usize| &bv[i - 1];
    let all = range(1, m);
    let pairs: Vec<(usize, usize)> = all.iter().flat_map(|&i| all.iter().map(move |&j| (i, j))).collect();
    let mut r = Report::new();
    family(&mut r, "1_products_vanish", &format!("i,j=1..{m}"), pairs, |&(i, j)| {
        c.is_zero(c.m(&[a_(i), b_(j)]), format!("a_{i}b_{j}"))?;
        c.is_zero(c.m(&[b_(j), a_(i)]), format!("b_{j}a_{i}"))
    });
    let k = &b.k;
    family(&mut r, "2_central_projections", &format!("i=1..{m}"), all.clone(), |&i| {
        for (name, x) in [("a", a_(i)), ("b", b_(i))] {
            let sq = c.m(&[x, x]);
            c.equal(c.m(&[&sq, &sq]), sq.clone(), format!("({name}_{i}²)²"))?;
            c.equal(k.alg.star(&sq), sq.clone(), format!("({name}_{i}²)*"))?;
            if let Err(t) = k.alg.is_central(&sq) {
                return Err(format!("{name}_{i}² does not commute with {}", k.label(t)));
            }
        }
        Ok(())
    });
    family(&mut r, "3_equal_squares", &format!("i=1..{m}"), all.clone(), |&i| {
        let a1 = c.m(&[a_(1), a_(1)]);
        c.equal(c.m(&[a_(i), a_(i)]), a1.clone(), format!("a_{i}² vs a_1²"))?;
        c.equal(c.m(&[b_(i), b_(i)]), c.one().sub(&a1), format!("b_{i}² vs 1-a_1²"))
    });
    family(&mut r, "4a_braid", &format!("i=1..{}", n.saturating_sub(2)), range(1, n.saturating_sub(2)), |&i| {
        c.equal(c.m(&[a_(i), a_(i + 1), a_(i)]), c.m(&[a_(i + 1), a_(i), a_(i + 1)]), format!("a braid at {i}"))?;
        c.equal(c.m(&[b_(i), b_(i + 1), b_(i)]), c.m(&[b_(i + 1), b_(i), b_(i + 1)]), format!("b braid at {i}"))
    });
    family(&mut r, "4b_far_commute", "|i-j|>1", far_pairs(m), |&(i, j)| {
        c.equal(c.m(&[a_(i), a_(j)]), c.m(&[a_(j), a_(i)]), format!("a_{i}a_{j}"))?;
        c.equal(c.m(&[b_(i), b_(j)]), c.m(&[b_(j), b_(i)]), format!("b_{i}b_{j}"))
    });
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qiso::qiso_group;

    #[test]
    fn catalogue_n3_n4() {
        for n in [3, 4] {
            let b = qiso_group(n).unwrap();
            for rep in [verify_u_corepresentation(&b), verify_section2_relations(&b), verify_theorem_glow(&b)] {
                assert!(rep.all_pass(), "n={n}\n{}", rep.to_text());
            }
        }
    }

    #[test]
    fn vacuous_families_are_named() {
        let b = qiso_group(3).unwrap();
        let rep = verify_section2_relations(&b);
        assert!(rep.get("skos[k=2..1] vacuous").is_some());
        assert!(rep.get("cbraid[n=2p,p=-] vacuous").is_some());
        assert!(rep.get("weaker[n=2p+1,p=1]").is_some());
        let b2 = qiso_group(2).unwrap();
        let g = verify_theorem_glow(&b2);
        assert!(g.all_pass());
        assert!(g.get("4a_braid[i=1..0] vacuous").is_some());
    }

    #[test]
    fn worked_values() {
        let b = qiso_group(3).unwrap();
        // σ1² + τ2² = 1
        let s = b.mul(&[&b.sigma(1), &b.sigma(1)]).add(&b.mul(&[&b.tau(2), &b.tau(2)]));
        assert_eq!(&s, b.k.alg.unit());
        assert_eq!(b.k.s(b.u(2, 1)), *b.u(1, 2));
        let b4 = qiso_group(4).unwrap();
        assert!(b4.k.eps(b4.u(2, 2)).is_one());
        let x = b4.mul(&[b4.u(1, 1), b4.u(2, 2), b4.u(3, 1)]);
        assert!(x.is_zero());
    }

    #[test]
    fn literal_apm_is_false() {
        // read literally, a_{p-1}² = c a_{p-1}² fails; the commutation holds
        let b = qiso_group(4).unwrap();
        let a = b.u(1, 1);
        let cc = b.u(2, 2);
        assert_ne!(b.mul(&[a, a]), b.mul(&[cc, a, a]));
        assert_eq!(b.mul(&[a, a, cc]), b.mul(&[cc, a, a]));
    }
}
