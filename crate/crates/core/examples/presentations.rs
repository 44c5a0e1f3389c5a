//! Closing presentations and building group algebras.
use reptype::algebra::{group_algebra, GroupTable};
use reptype::linalg::Field;
use reptype::repcert::{corpus_algebra, corpus_entries};

fn main() {
    for e in corpus_entries() {
        let a = corpus_algebra(e.name).unwrap();
        println!("{:<13} over {:<4} dim {:>3}  class {:?}", a.name(), a.field().spec().to_string(), a.dim(), a.class());
    }
    let f2 = Field::prime(2).unwrap();
    let kd8 = group_algebra(&GroupTable::dihedral(4), &f2).unwrap();
    let d8 = corpus_algebra("dihedral8").unwrap();
    println!("F_2[D_8] from its group table: dim {}, radical dim {}", kd8.dim(), kd8.radical().unwrap().dim());
    println!("presentation basis: {}", d8.labels().join(" "));
}
