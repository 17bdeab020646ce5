//! Group algebras, their duals and group-like elements.

use hopf_forge::groups::{sn_group, FiniteGroup};
use hopf_forge::hopf::{dual_hopf, group_hopf, group_likes, verify_hopf_axioms};

fn main() {
    let (s3, _) = sn_group(3).unwrap();
    for (name, g) in [("Z4", FiniteGroup::cyclic(4)), ("S3", s3)] {
        let h = group_hopf(&g);
        let rep = verify_hopf_axioms(&h);
        let dual = dual_hopf(&h).unwrap();
        let gl = group_likes(&dual).unwrap();
        println!(
            "C[{name}]: {} axiom checks pass = {}, group-likes of the dual: {} ({})",
            rep.len(),
            rep.all_pass(),
            gl.order(),
            gl.type_tag.as_deref().unwrap_or("nonabelian")
        );
    }
}
