//! Family scans and growth certificates.
use reptype::linalg::Field;
use reptype::repcert::{certify_family, certify_wild_theorem, corpus_algebra, FamilyKind, ScanOptions};

fn main() {
    let opts = ScanOptions::default();
    for (name, kind, p) in
        [("elab_3_2", FamilyKind::M, 3), ("dihedral8", FamilyKind::M, 2), ("nfam_host", FamilyKind::N, 2)]
    {
        let a = corpus_algebra(name).unwrap();
        let fields = [Field::prime(p).unwrap(), Field::extension(p, 2).unwrap()];
        let (report, cert) = certify_family(&a, kind, &fields, &opts).unwrap();
        let classes: Vec<usize> = report.fields.iter().map(|s| s.classes).collect();
        println!("{name} {kind}-family: classes {classes:?} → {:?}", cert.verdict);
        for h in &cert.unverified_hypotheses {
            println!("   hypothesis: {h}");
        }
    }
    for name in ["elab_2_3", "kleinfour"] {
        let cert = certify_wild_theorem(&corpus_algebra(name).unwrap(), &opts).unwrap();
        println!("{name} growth: {:?} {:?}", cert.verdict, cert.notes);
    }
}
