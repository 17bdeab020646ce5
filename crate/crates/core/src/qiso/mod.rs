//! QISO(ℂ[S_n]) assembled as the doubling of ℂ[S_n] along conjugation by
//! w₀, with its isometric coaction, the matrix `u`, the relations among
//! the entries of `u`, and the S₃ case study in [`s3`].

mod relations;
pub mod s3;

use std::sync::Arc;

use thiserror::Error;

pub use relations::{verify_section2_relations, verify_theorem_glow, verify_u_corepresentation};
pub use s3::{
    fukuda_algebras, s3_variants, verify_s3_classification, FukudaSign, S3CaseData,
};

pub use crate::hopf::t_map;

use crate::doubling::{double_direct, DoublingError, DoublingInput};
use crate::exactlin::{apply_tensor, SparseMatrix, SparseVec};
use crate::groups::{sn_group, w0_automorphism, FiniteGroup, GroupAutomorphism, GroupError};
use crate::hopf::{verify_hopf_axioms, HopfAlgebra, HopfError};
use crate::report::Report;
use crate::spectral::{
    build_spectral_triple, coaction_from_generator_images, verify_coaction, verify_isometric, Coaction,
    SpectralError, SpectralTripleData,
};

/// Largest `n` accepted by [`qiso_group`].
pub const MAX_QISO_N: usize = 6;

#[derive(Debug, Error)]
pub enum QisoError {
    #[error("n = {0} is out of range (2..={MAX_QISO_N})")]
    OutOfRange(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Doubling(#[from] DoublingError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("construction fails its own checks: {0}")]
    Suite(String),
}

fn first_failure(r: &Report) -> Option<String> {
    r.failures().next().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
}

/// The doubling `k`, the coaction `α(s_i) = s_i⊗σ_i + s_{n−i}⊗τ_{n−i}` and
/// `u`, read off from `α(s_j) = Σ_i s_i⊗u_{i,j}`.
#[derive(Clone, Debug)]
pub struct QisoBundle {
    pub n: usize,
    pub group: FiniteGroup,
    pub theta: GroupAutomorphism,
    pub triple: SpectralTripleData,
    pub k: Arc<HopfAlgebra>,
    pub alpha: Coaction,
    /// `u[i-1][j-1] = u_{i,j}`.
    pub u: Vec<Vec<SparseVec>>,
    pub hopf_report: Report,
    pub coaction_report: Report,
    pub isometric_report: Report,
}

impl QisoBundle {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// `u_{i,j}`, 1-based.
    pub fn u(&self, i: usize, j: usize) -> &SparseVec {
        &self.u[i - 1][j - 1]
    }

    /// σ_i, the generator s_i in the first copy.
    pub fn sigma(&self, i: usize) -> SparseVec {
        self.k.alg.basis(self.triple.gens.elements[i - 1])
    }

    /// τ_i, the generator s_i in the second copy.
    pub fn tau(&self, i: usize) -> SparseVec {
        self.k.alg.basis(self.order() + self.triple.gens.elements[i - 1])
    }

    pub fn mul(&self, xs: &[&SparseVec]) -> SparseVec {
        self.k.alg.mul_all(xs)
    }

    /// The `a_i` and `b_i` of the diagonal/anti-diagonal form (1-based
    /// access through index `i-1`). For even `n = 2p` the middle pair is
    /// `a_p = c a_1²`, `b_p = c b_1²` with `c = u_{p,p}`; at `n = 2` that
    /// substitution is circular and the two summand projections of `c` are
    /// used instead.
    pub fn ab(&self) -> (Vec<SparseVec>, Vec<SparseVec>) {
        let n = self.n;
        let mut a = Vec::new();
        let mut b = Vec::new();
        for i in 1..n {
            if 2 * i == n {
                let c = self.u(i, i);
                if n == 2 {
                    a.push(self.sigma(1));
                    b.push(self.tau(1));
                } else {
                    let a1 = self.u(1, 1);
                    let b1 = self.u(1, n - 1);
                    a.push(self.mul(&[c, a1, a1]));
                    b.push(self.mul(&[c, b1, b1]));
                }
            } else {
                a.push(self.u(i, i).clone());
                b.push(self.u(i, n - i).clone());
            }
        }
        (a, b)
    }

    /// Every check run during construction, prefixed `hopf.`, `coaction.`
    /// and `isometric.`.
    pub fn construction_report(&self) -> Report {
        let mut r = Report::new();
        r.merge("hopf", self.hopf_report.clone());
        r.merge("coaction", self.coaction_report.clone());
        r.merge("isometric", self.isometric_report.clone());
        r
    }
}

/// `α(s_i) = s_i⊗σ_i + s_{n−i}⊗τ_{n−i}` for each Coxeter generator.
pub fn defbal_images(triple: &SpectralTripleData, k: &HopfAlgebra) -> Vec<SparseVec> {
    let n = triple.gens.elements.len() + 1;
    let order = triple.group.order();
    let dm = order;
    let s = |i: usize| triple.gens.elements[i - 1];
    (1..n)
        .map(|i| {
            let first = SparseVec::basis(dm, s(i)).tensor(&k.alg.basis(s(i)));
            let second = SparseVec::basis(dm, s(n - i)).tensor(&k.alg.basis(order + s(n - i)));
            first.add(&second)
        })
        .collect()
}

/// `(⟨s_i| ⊗ id) α(s_j)` for every `i, j`.
fn read_u(alpha: &Coaction, gens: &[usize]) -> Vec<Vec<SparseVec>> {
    let dh = alpha.hopf.dim();
    gens.iter()
        .map(|&si| {
            gens.iter()
                .map(|&sj| {
                    SparseVec::from_pairs(
                        dh,
                        alpha.map.column(sj).iter().filter(|(t, _)| t / dh == si).map(|(t, c)| (t % dh, c.clone())),
                    )
                })
                .collect()
        })
        .collect()
}

/// Builds and checks the bundle for `2 ≤ n ≤ 6`.
pub fn qiso_group(n: usize) -> Result<QisoBundle, QisoError> {
    if !(2..=MAX_QISO_N).contains(&n) {
        return Err(QisoError::OutOfRange(n));
    }
    let (g, gens) = sn_group(n)?;
    let theta = w0_automorphism(&g);
    let input = DoublingInput::new(g.clone(), theta.clone())?;
    let k = Arc::new(double_direct(&input));
    let hopf_report = verify_hopf_axioms(&k);
    if let Some(f) = first_failure(&hopf_report) {
        return Err(QisoError::Suite(f));
    }
    let triple = build_spectral_triple(&g, &gens)?;
    let images = defbal_images(&triple, &k);
    let alpha = coaction_from_generator_images(&triple, k.clone(), &images)?;
    let coaction_report = verify_coaction(&alpha);
    if let Some(f) = first_failure(&coaction_report) {
        return Err(QisoError::Suite(f));
    }
    let isometric_report = verify_isometric(&alpha, &triple);
    if let Some(f) = first_failure(&isometric_report) {
        return Err(QisoError::Suite(f));
    }
    let u = read_u(&alpha, &gens.elements);
    Ok(QisoBundle { n, group: g, theta, triple, k, alpha, u, hopf_report, coaction_report, isometric_report })
}

/// Everything `verify-qiso` reports: construction checks, `u`, the
/// relation catalogue and the theorem on `a_i`, `b_i`.
pub fn verify_qiso(b: &QisoBundle) -> Report {
    let mut r = Report::new();
    r.merge("coaction", b.coaction_report.clone());
    r.merge("isometric", b.isometric_report.clone());
    r.merge("u", verify_u_corepresentation(b));
    r.merge("relations", verify_section2_relations(b));
    r.merge("ab", verify_theorem_glow(b));
    r
}

/// `ψ(x) = x⊗σ(x)` as a matrix `ℂ[G] → ℂ[G]⊗K`.
pub fn psi_map(b: &QisoBundle) -> SparseMatrix {
    let n = b.order();
    let d = b.k.dim();
    SparseMatrix::from_columns(n * d, (0..n).map(|x| SparseVec::basis(n * d, x * d + x)).collect())
}

/// Which β to use in `α = ψ + (θ⊗β)ψ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaForm {
    /// θ in both copies, as printed.
    Printed,
    /// θ followed by exchanging the two copies.
    Swapped,
}

pub fn beta_map(b: &QisoBundle, form: BetaForm) -> SparseMatrix {
    let n = b.order();
    let d = 2 * n;
    let cols = (0..d)
        .map(|i| {
            let (copy, x) = (i / n, i % n);
            let copy = match form {
                BetaForm::Printed => copy,
                BetaForm::Swapped => 1 - copy,
            };
            SparseVec::basis(d, copy * n + b.theta.apply(x))
        })
        .collect();
    SparseMatrix::from_columns(d, cols)
}

/// Compares α with `ψ + (θ⊗β)ψ` on every basis element.
pub fn verify_blpsi(b: &QisoBundle, form: BetaForm) -> Result<(), String> {
    let n = b.order();
    let d = b.k.dim();
    let psi = psi_map(b);
    let theta = SparseMatrix::from_columns(n, (0..n).map(|x| SparseVec::basis(n, b.theta.apply(x))).collect());
    let beta = beta_map(b, form);
    let bad: Vec<&str> = (0..n)
        .filter(|&x| {
            let p = psi.column(x);
            let rhs = p.add(&apply_tensor(Some(&theta), Some(&beta), p, n, d));
            &rhs != b.alpha.map.column(x)
        })
        .map(|x| b.group.label(x))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(format!("α != ψ+(θ⊗β)ψ at {}", bad.join(", ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::is_cocommutative;
    use crate::spectral::Coaction;

    #[test]
    fn bundle_n3() {
        let b = qiso_group(3).unwrap();
        assert_eq!(b.k.dim(), 12);
        assert_eq!(b.k.fmt2(&b.k.delta(&b.sigma(1))), "σ(s1)⊗σ(s1)+τ(s1)⊗τ(s2)");
        assert_eq!(b.u(1, 1), &b.sigma(1));
        assert_eq!(b.u(2, 1), &b.tau(2));
        assert_eq!(b.u(1, 2), &b.tau(1));
        // α(s1s2) = s1s2⊗σ1σ2 + s2s1⊗τ2τ1
        let s12 = b.group.parse_element("s1.s2").unwrap();
        assert_eq!(b.alpha.fmt_image(s12), "s1.s2⊗σ(s1.s2)+s2.s1⊗τ(s2.s1)");
        assert_eq!(b.alpha.fmt_image(b.group.identity()), "e⊗σ(e)+e⊗τ(e)");
        assert!(is_cocommutative(&b.k).is_err());
    }

    #[test]
    fn bundle_n2_and_range() {
        let b = qiso_group(2).unwrap();
        assert_eq!(b.k.dim(), 4);
        assert_eq!(b.u(1, 1), &b.sigma(1).add(&b.tau(1)));
        assert!(is_cocommutative(&b.k).is_ok());
        assert!(matches!(qiso_group(1), Err(QisoError::OutOfRange(1))));
        assert!(matches!(qiso_group(9), Err(QisoError::OutOfRange(9))));
    }

    #[test]
    fn middle_entry_n4() {
        let b = qiso_group(4).unwrap();
        assert_eq!(b.u(2, 2), &b.sigma(2).add(&b.tau(2)));
        let (a, bb) = b.ab();
        assert_eq!(a[1], b.sigma(2));
        assert_eq!(bb[1], b.tau(2));
    }

    #[test]
    fn blpsi_needs_copy_swap() {
        let b = qiso_group(4).unwrap();
        assert!(verify_blpsi(&b, BetaForm::Swapped).is_ok());
        let err = verify_blpsi(&b, BetaForm::Printed).unwrap_err();
        assert!(err.contains("s1"), "{err}");
    }

    #[test]
    fn psi_alone_is_not_coassociative() {
        let b = qiso_group(3).unwrap();
        let c = Coaction { map: psi_map(&b), module: b.alpha.module.clone(), hopf: b.k.clone() };
        let rep = verify_coaction(&c);
        let w = rep.get("coassociativity").unwrap().witness.clone().unwrap();
        assert!(w.contains("s1"), "{w}");
        assert!(!rep.passed("unital"));
    }

    #[test]
    fn corrupted_coaction_keeps_dirac() {
        // replace the column of s1 only: lengths are still preserved
        let b = qiso_group(3).unwrap();
        let s1 = b.triple.gens.elements[0];
        let s2 = b.triple.gens.elements[1];
        let bad = SparseVec::basis(6, s1).tensor(&b.sigma(2)).add(&SparseVec::basis(6, s2).tensor(&b.tau(2)));
        let mut cols = b.alpha.map.columns().to_vec();
        cols[s1] = bad;
        let c = Coaction { map: SparseMatrix::from_columns(72, cols), ..b.alpha.clone() };
        assert!(verify_isometric(&c, &b.triple).passed("dirac"));
        assert!(!verify_coaction(&c).passed("multiplicative"));
    }
}
