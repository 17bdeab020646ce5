//! A₊ and A₋ on a, b, c, and the identification of A₊ with the second S₃
//! quantum group.

use hopf_forge::qiso::{fukuda_algebras, s3_variants};
use hopf_forge::qiso::s3::identification_map;

fn main() {
    let (plus, minus) = fukuda_algebras().unwrap();
    let b = plus.elem("bc").add(&plus.elem("b(1-c)"));
    println!("Δ₊(b) = {}", plus.fmt2(&plus.delta(&b)));
    println!("Δ₋(b) = {}", minus.fmt2(&minus.delta(&b)));
    let data = s3_variants().unwrap();
    let f = identification_map(&plus, &data.k2).unwrap();
    let a = plus.elem("ac").add(&plus.elem("a(1-c)"));
    println!("a ↦ {}", data.k2.fmt(&f.apply(&a)));
    println!("b ↦ {}", data.k2.fmt(&f.apply(&b)));
}
