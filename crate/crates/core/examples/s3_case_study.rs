//! The S₃ comparison: T tables, kernel, identification with A₊, group-like
//! elements, the direct argument and the printed-versus-corrected formulas.

use hopf_forge::qiso::{s3_variants, verify_s3_classification};

fn main() {
    let data = s3_variants().expect("S₃ data builds");
    let report = verify_s3_classification(&data);
    print!("{}", report.to_text());
    let failed = report.failures().count();
    println!("{} checks, {} failing", report.len(), failed);
}
