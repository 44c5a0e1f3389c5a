//! Carlson modules L_ζ for the degree-one classes over the Klein four group.
use reptype::repcert::{corpus_algebra, trivial};
use reptype::resolution::{all_cocycles, carlson_module, is_periodic, resolve, IsoOptions};

fn main() {
    let a = corpus_algebra("kleinfour").unwrap();
    let res = resolve(&trivial(&a).unwrap(), 4).unwrap();
    for z in all_cocycles(&res, 1).into_iter().filter(|z| z.coeffs.iter().any(|c| !c.is_zero())) {
        let l = carlson_module(&z, &res).unwrap();
        let p = is_periodic(&l, 4, IsoOptions::default()).unwrap();
        println!(
            "ζ = {:?}: dim L_ζ = {}, period {:?}",
            z.coeffs.iter().map(|c| c.index()).collect::<Vec<_>>(),
            l.dim(),
            p.period
        );
    }
}
