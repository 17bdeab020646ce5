//! Gaussian-rational scalars, kernels and ranks.

use hopf_forge::exactlin::{kernel_basis, rank, Scalar, SparseMatrix};

fn main() {
    let z: Scalar = "1/2-3/4i".parse().unwrap();
    let w = z.inv().unwrap();
    println!("z = {z}, 1/z = {w}, z·(1/z) = {}", &z * &w);

    let m = SparseMatrix::from_dense_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, -1]]);
    println!("rank = {}", rank(&m));
    for v in kernel_basis(&m) {
        println!("kernel vector {:?} -> {:?}", v.to_dense(), m.apply(&v).to_dense());
    }
}
