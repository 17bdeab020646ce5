//! The doubling of C[S_3] along conjugation by w₀, built directly and
//! through the crossed product, plus the printed counit and antipode of
//! the crossed product next to the corrected ones.

use hopf_forge::doubling::{crossed_errata_report, double_direct, verify_doubling_agreement, DoublingInput, PairingConvention};
use hopf_forge::groups::{sn_group, w0_automorphism};
use hopf_forge::hopf::verify_hopf_axioms;

fn main() {
    let (g, _) = sn_group(3).unwrap();
    let th = w0_automorphism(&g);
    let input = DoublingInput::new(g, th).unwrap();
    let k = double_direct(&input);
    println!("dim K = {}, axioms pass: {}", k.dim(), verify_hopf_axioms(&k).all_pass());
    for l in ["σ(s1)", "τ(s1)"] {
        println!("Δ({l}) = {}", k.fmt2(&k.delta(&k.elem(l))));
    }
    print!("{}", verify_doubling_agreement(&input, PairingConvention::UDelta).to_text());
    print!("{}", crossed_errata_report(&input).to_text());
}
