//! Word lengths in S_n for Coxeter generators and for another generating set.

use hopf_forge::groups::{cayley_lengths, sn_group, GeneratingSet};

fn main() {
    let (g, coxeter) = sn_group(3).unwrap();
    let other = GeneratingSet::parse(&g, "s1,s1.s2,s2.s1").unwrap();
    let l1 = cayley_lengths(&g, &coxeter).unwrap();
    let l2 = cayley_lengths(&g, &other).unwrap();
    println!("{:<10} {:>8} {:>14} {:>10}", "element", "coxeter", "s1,s1s2,s2s1", "inversions");
    for x in g.elements() {
        let inv = g.permutation(x).unwrap().inversions();
        println!("{:<10} {:>8} {:>14} {:>10}", g.label(x), l1[x], l2[x], inv);
    }
}
