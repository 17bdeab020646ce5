//! The coaction of the doubling on C[S_n] and the matrix u, for n given
//! on the command line (default 4).

use hopf_forge::qiso::qiso_group;

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let b = match qiso_group(n) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    for (i, &s) in b.triple.gens.elements.iter().enumerate() {
        println!("α(s{}) = {}", i + 1, b.alpha.fmt_image(s));
    }
    println!("u =");
    for i in 1..n {
        let row: Vec<String> = (1..n).map(|j| b.k.fmt(b.u(i, j))).collect();
        println!("  [{}]", row.join(", "));
    }
    print!("{}", b.construction_report().to_text());
}
