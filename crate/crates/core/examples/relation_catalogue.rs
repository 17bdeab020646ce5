//! Every relation family for the entries of u, for n = 3, 4, 5.

use hopf_forge::qiso::{qiso_group, verify_qiso};

fn main() {
    for n in 3..=5 {
        let b = qiso_group(n).unwrap();
        let r = verify_qiso(&b);
        let vacuous = r.checks.iter().filter(|c| c.name.ends_with("vacuous")).count();
        println!("n = {n}: {} checks, {} vacuous, {} failing", r.len(), vacuous, r.failures().count());
        for c in r.failures() {
            println!("  {}: {}", c.name, c.witness.as_deref().unwrap_or(""));
        }
    }
}
