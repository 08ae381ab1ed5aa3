//! Development probe: raw affine-node composite ratios per family.
use qaffine::cartan::{AffineData, Family};
use qaffine::evalmod::{psi_oracle_outcomes, psi_raw_ratio, EvalRep};

fn main() {
    for (fam, n) in [
        (Family::A, 1),
        (Family::A, 2),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 2),
        (Family::C, 3),
        (Family::C, 4),
        (Family::D, 4),
        (Family::D, 5),
    ] {
        let rep = EvalRep::new(AffineData::new(fam, n).unwrap(), false);
        let (re, rf) = psi_raw_ratio(&rep);
        println!(
            "{}_{}: raw e0 ratio = {}   raw f0 ratio = {}",
            fam,
            n,
            re.map(|s| s.to_string()).unwrap_or("?".into()),
            rf.map(|s| s.to_string()).unwrap_or("?".into())
        );
        for o in psi_oracle_outcomes(&rep) {
            println!("   {} -> {:?} {}", o.id, o.status, o.witness.unwrap_or_default());
        }
    }
}
