//! Length functions, the Dirac operator D̂ on ℂ[G], coactions of finite
//! quantum groups on ℂ[G] and the checks an isometric coaction must pass.

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{group_algebra, tensor_multiply, tensor_star, StarAlgebra};
use crate::exactlin::{apply_tensor, Echelon, Scalar, SparseMatrix, SparseVec};
use crate::groups::{cayley_lengths, FiniteGroup, GeneratingSet, GroupError};
use crate::hopf::HopfAlgebra;
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("generator images do not define a homomorphism: {0}")]
    InconsistentImages(String),
    #[error("bad generator image: {0}")]
    BadImage(String),
}

#[derive(Clone, Debug)]
pub struct SpectralTripleData {
    pub group: FiniteGroup,
    pub gens: GeneratingSet,
    pub lengths: Vec<usize>,
    /// Diagonal, `D̂ e_x = ℓ(x) e_x`.
    pub dirac: SparseMatrix,
    /// Evaluation at the identity.
    pub trace: SparseVec,
}

pub fn build_spectral_triple(g: &FiniteGroup, gens: &GeneratingSet) -> Result<SpectralTripleData, SpectralError> {
    let lengths = cayley_lengths(g, gens)?;
    let n = g.order();
    let dirac = SparseMatrix::from_triples(
        n,
        n,
        lengths.iter().enumerate().map(|(x, &l)| (x, x, Scalar::from_int(l as i64))).collect::<Vec<_>>(),
    );
    Ok(SpectralTripleData {
        group: g.clone(),
        gens: gens.clone(),
        lengths,
        dirac,
        trace: SparseVec::basis(n, g.identity()),
    })
}

impl SpectralTripleData {
    /// For every element, a shortest word in the generators (as positions
    /// in `gens`), found by BFS with generators tried in order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        let g = &self.group;
        let mut words: Vec<Option<Vec<usize>>> = vec![None; g.order()];
        words[g.identity()] = Some(Vec::new());
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(x) = queue.pop_front() {
            for (t, &s) in self.gens.elements.iter().enumerate() {
                let y = g.mul(x, s);
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w.push(t);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        words.into_iter().map(|w| w.expect("generating set reaches everything")).collect()
    }

    pub fn max_length(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }
}

/// A linear map `α: M → M⊗H` with `M = ℂ[G]`.
#[derive(Clone, Debug)]
pub struct Coaction {
    pub map: SparseMatrix,
    pub module: Arc<StarAlgebra>,
    pub hopf: Arc<HopfAlgebra>,
}

impl Coaction {
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        self.map.apply(x)
    }

    pub fn fmt_image(&self, x: usize) -> String {
        self.module.fmt_tensor(&self.hopf.alg, self.map.column(x))
    }
}

/// Extends images given on the generators along BFS-reduced words, without
/// checking that the result is multiplicative.
pub fn coaction_from_images_unchecked(
    triple: &SpectralTripleData,
    h: Arc<HopfAlgebra>,
    images: &[SparseVec],
) -> Result<Coaction, SpectralError> {
    let module = Arc::new(group_algebra(&triple.group));
    let (dm, dh) = (module.dim(), h.dim());
    if images.len() != triple.gens.elements.len() {
        return Err(SpectralError::BadImage(format!(
            "{} images for {} generators",
            images.len(),
            triple.gens.elements.len()
        )));
    }
    if let Some(bad) = images.iter().find(|v| v.dim() != dm * dh) {
        return Err(SpectralError::BadImage(format!("image has dimension {}, expected {}", bad.dim(), dm * dh)));
    }
    let unit = module.unit().tensor(h.alg.unit());
    let cols = triple
        .reduced_words()
        .iter()
        .map(|w| w.iter().fold(unit.clone(), |acc, &t| tensor_multiply(&module, &h.alg, &acc, &images[t])))
        .collect();
    Ok(Coaction { map: SparseMatrix::from_columns(dm * dh, cols), module, hopf: h })
}

/// Like [`coaction_from_images_unchecked`], then checks `α(x)α(y) = α(xy)`
/// on every pair of group elements.
pub fn coaction_from_generator_images(
    triple: &SpectralTripleData,
    h: Arc<HopfAlgebra>,
    images: &[SparseVec],
) -> Result<Coaction, SpectralError> {
    let c = coaction_from_images_unchecked(triple, h, images)?;
    if let Err(w) = check_multiplicative(&c) {
        return Err(SpectralError::InconsistentImages(w));
    }
    Ok(c)
}

fn check_multiplicative(c: &Coaction) -> Result<(), String> {
    let m = &c.module;
    let n = m.dim();
    for x in 0..n {
        for y in 0..n {
            let lhs = c.apply(m.mult_basis(x, y));
            let rhs = tensor_multiply(m, &c.hopf.alg, c.map.column(x), c.map.column(y));
            if lhs != rhs {
                return Err(format!("α({}·{}) != α({})α({})", m.label(x), m.label(y), m.label(x), m.label(y)));
            }
        }
    }
    Ok(())
}

fn list_failures(m: &StarAlgebra, bad: &[usize]) -> String {
    let shown: Vec<&str> = bad.iter().take(6).map(|&x| m.label(x)).collect();
    let more = if bad.len() > shown.len() { format!(" (+{} more)", bad.len() - shown.len()) } else { String::new() };
    format!("fails at {}{more}", shown.join(", "))
}

/// Unital *-homomorphism, coassociativity, counit law and the Podleś rank
/// condition.
pub fn verify_coaction(c: &Coaction) -> Report {
    let m = &c.module;
    let h = &c.hopf;
    let (dm, dh) = (m.dim(), h.dim());
    let mut r = Report::new();
    let unit = m.unit().tensor(h.alg.unit());
    let a1 = c.apply(m.unit());
    r.check("unital", a1 == unit, || format!("α(e) = {}", m.fmt_tensor(&h.alg, &a1)));
    r.record("multiplicative", check_multiplicative(c));
    let bad: Vec<usize> = (0..dm)
        .filter(|&x| c.apply(&m.star(&m.basis(x))) != tensor_star(m, &h.alg, c.map.column(x)))
        .collect();
    r.check("star", bad.is_empty(), || list_failures(m, &bad));
    let bad: Vec<usize> = (0..dm)
        .filter(|&x| {
            let v = c.map.column(x);
            apply_tensor(Some(&c.map), None, v, dm, dh) != apply_tensor(None, Some(&h.comult), v, dm, dh)
        })
        .collect();
    r.check("coassociativity", bad.is_empty(), || list_failures(m, &bad));
    let eps = SparseMatrix::from_triples(1, dh, h.counit.iter().map(|(k, x)| (0, k, x.clone())));
    let bad: Vec<usize> =
        (0..dm).filter(|&x| apply_tensor(None, Some(&eps), c.map.column(x), dm, dh) != m.basis(x)).collect();
    r.check("counit", bad.is_empty(), || list_failures(m, &bad));
    let rk = podles_rank(c);
    r.check("podles", rk == dm * dh, || format!("span of α(M)(1⊗H) has rank {rk} < {}", dm * dh));
    r
}

/// Rank of `span{α(e_x)(1⊗e_h)}`.
pub fn podles_rank(c: &Coaction) -> usize {
    let m = &c.module;
    let h = &c.hopf;
    let mut ech = Echelon::new(m.dim() * h.dim());
    for x in 0..m.dim() {
        for k in 0..h.dim() {
            let right = m.unit().tensor(&h.alg.basis(k));
            ech.insert(&tensor_multiply(m, &h.alg, c.map.column(x), &right));
        }
    }
    ech.rank()
}

/// Whether every `M_k ⊗ H` contains `α(M_k)` for the length-k subspaces.
fn length_bad(c: &Coaction, triple: &SpectralTripleData, only: Option<usize>) -> Vec<usize> {
    let dh = c.hopf.dim();
    (0..c.module.dim())
        .filter(|&x| only.map_or(true, |l| triple.lengths[x] == l))
        .filter(|&x| c.map.column(x).iter().any(|(k, _)| triple.lengths[k / dh] != triple.lengths[x]))
        .collect()
}

/// The trace condition, commutation with D̂, and the weaker length-one and
/// length-two conditions.
pub fn verify_isometric(c: &Coaction, triple: &SpectralTripleData) -> Report {
    let m = &c.module;
    let h = &c.hopf;
    let (dm, dh) = (m.dim(), h.dim());
    let mut r = Report::new();
    let tr = SparseMatrix::from_triples(1, dm, triple.trace.iter().map(|(k, x)| (0, k, x.clone())));
    let bad: Vec<usize> = (0..dm)
        .filter(|&x| {
            let lhs = apply_tensor(Some(&tr), None, c.map.column(x), dm, dh);
            lhs != h.alg.unit().scale(&triple.trace.get(x))
        })
        .collect();
    let trace_ok = bad.is_empty();
    r.check("trace", trace_ok, || list_failures(m, &bad));
    let bad: Vec<usize> = (0..dm)
        .filter(|&x| {
            let lhs = c.apply(&triple.dirac.apply(&m.basis(x)));
            let rhs = apply_tensor(Some(&triple.dirac), None, c.map.column(x), dm, dh);
            lhs != rhs
        })
        .collect();
    let dirac_ok = bad.is_empty();
    r.check("dirac", dirac_ok, || list_failures(m, &bad));
    r.check("dirac_implies_trace", !dirac_ok || trace_ok, || "D̂ condition holds but the trace condition fails".into());
    let bad = length_bad(c, triple, Some(1));
    r.check("length_one_preserved", bad.is_empty(), || list_failures(m, &bad));
    let bad = length_bad(c, triple, None);
    r.check("length_subspaces_preserved", bad.is_empty(), || list_failures(m, &bad));
    // (τ⊗id)α(g_k g_l) = [g_k g_l = e]·1 over generator pairs
    let g = &triple.group;
    let mut bad = Vec::new();
    for (k, &a) in triple.gens.elements.iter().enumerate() {
        for (l, &b) in triple.gens.elements.iter().enumerate() {
            let x = g.mul(a, b);
            let lhs = apply_tensor(Some(&tr), None, c.map.column(x), dm, dh);
            let expect = if x == g.identity() { h.alg.unit().clone() } else { SparseVec::zero(dh) };
            if lhs != expect {
                bad.push(format!("(g{}, g{})", k + 1, l + 1));
            }
        }
    }
    r.check("trace_on_length_two", bad.is_empty(), || format!("fails at {}", bad.join(" ")));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{sn_group, w0_automorphism};
    use crate::hopf::group_hopf;

    #[test]
    fn triple_basics() {
        let (g, gens) = sn_group(4).unwrap();
        let t = build_spectral_triple(&g, &gens).unwrap();
        assert!(t.dirac.get(g.identity(), g.identity()).is_zero());
        assert_eq!(t.dirac.get(gens.elements[0], gens.elements[0]), Scalar::ONE);
        assert_eq!(t.max_length(), 6);
        assert!(t.dirac.is_diagonal());
        // D̂∘θ = θ∘D̂
        let th = w0_automorphism(&g);
        let n = g.order();
        let theta = SparseMatrix::from_columns(n, (0..n).map(|x| SparseVec::basis(n, th.apply(x))).collect());
        assert_eq!(t.dirac.compose(&theta), theta.compose(&t.dirac));
    }

    #[test]
    fn trivial_coaction() {
        let (g, gens) = sn_group(3).unwrap();
        let t = build_spectral_triple(&g, &gens).unwrap();
        let h = Arc::new(group_hopf(&g));
        let m = group_algebra(&g);
        let images: Vec<SparseVec> = gens.elements.iter().map(|&s| m.basis(s).tensor(h.alg.unit())).collect();
        let c = coaction_from_generator_images(&t, h.clone(), &images).unwrap();
        let rep = verify_coaction(&c);
        for name in ["unital", "multiplicative", "star", "coassociativity", "counit"] {
            assert!(rep.passed(name), "{name}");
        }
        assert!(verify_isometric(&c, &t).all_pass());
    }

    #[test]
    fn inconsistent_images_rejected() {
        let (g, gens) = sn_group(3).unwrap();
        let t = build_spectral_triple(&g, &gens).unwrap();
        let h = Arc::new(group_hopf(&g));
        let m = group_algebra(&g);
        // s1 ↦ s1⊗s1, s2 ↦ s2⊗e breaks the braid relation
        let s1 = gens.elements[0];
        let s2 = gens.elements[1];
        let images = vec![m.basis(s1).tensor(&h.alg.basis(s1)), m.basis(s2).tensor(h.alg.unit())];
        let err = coaction_from_generator_images(&t, h, &images).unwrap_err();
        assert!(matches!(err, SpectralError::InconsistentImages(_)));
    }
}
