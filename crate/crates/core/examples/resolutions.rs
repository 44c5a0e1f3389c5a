//! Minimal resolutions, Betti numbers, periodicity and complexity.
use reptype::repcert::{corpus_algebra, family_m, trivial};
use reptype::resolution::{complexity_estimate, ext_dims, hilbert_growth, periodicity_in, resolve, IsoOptions};

fn main() {
    for name in ["kleinfour", "dihedral8", "elab_2_3"] {
        let a = corpus_algebra(name).unwrap();
        let res = resolve(&trivial(&a).unwrap(), 10).unwrap();
        let b = res.table.betti();
        let g = hilbert_growth(&b).ok();
        println!("{name}: betti {b:?}, growth degree {:?}", g.map(|g| g.degree));
    }
    let a = corpus_algebra("dihedral8").unwrap();
    let m = family_m(&a, a.field().one()).unwrap();
    let res = resolve(&m, 12).unwrap();
    print!("{}", res.table.to_csv());
    let p = periodicity_in(&res, 10, IsoOptions::default()).unwrap();
    let c = complexity_estimate(&res.table, Some(&p)).unwrap();
    println!("period {:?}, c_hat {:?}, certified ≥ {}", p.period, c.c_hat, c.certified_lower);
    println!("dim Ext^n(M, k): {:?}", ext_dims(&m, 6).unwrap());
}
