//! Arithmetic in F_9 and exact linear algebra over it.
use reptype::linalg::{Field, Matrix};

fn main() {
    let f = Field::extension(3, 2).unwrap();
    let g = f.primitive();
    println!("F_9 modulus {:?}, primitive element {}", f.modulus(), f.display(g));
    let powers: Vec<String> = (0..8).map(|k| f.display(f.pow(g, k))).collect();
    println!("powers of g: {}", powers.join(", "));

    let m = Matrix::from_rows(
        &f,
        3,
        &[vec![f.one(), g, f.pow(g, 2)], vec![g, f.pow(g, 2), f.pow(g, 3)], vec![f.zero(), f.one(), g]],
    );
    println!("rank {}, nullity {}", m.rank(), m.null_space().len());
    if let Some(inv) = m.inverse() {
        println!("m·m⁻¹ = I: {}", m.mul(&inv).is_identity());
    }
}
