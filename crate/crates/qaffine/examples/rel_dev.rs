use qaffine::cartan::{AffineData, Family};
use qaffine::drinfeld::{check_relations, relation_instances};
use qaffine::evalmod::EvalRep;
use qaffine::report::Status;
use std::time::Instant;

fn main() {
    for (fam, n) in [
        (Family::A, 1), (Family::A, 2), (Family::B, 2),
        (Family::B, 3), (Family::C, 2), (Family::D, 4),
    ] {
        for dual in [false, true] {
            let t0 = Instant::now();
            let rep = EvalRep::new(AffineData::new(fam, n).unwrap(), dual);
            let basis = rep.basis_at(0);
            let inst = relation_instances(&rep.data, 2, &[-1, 0, 1], true);
            let total = inst.len();
            let out = check_relations(&rep, inst, &basis);
            let fails: Vec<_> = out.iter().filter(|c| c.status == Status::Fail).collect();
            println!(
                "{}_{} dual={} : {} instances, {} fail ({:.2?})",
                fam, n, dual, total, fails.len(), t0.elapsed()
            );
            for f in fails.iter().take(5) {
                println!("   FAIL {} {}", f.id, f.witness.as_deref().unwrap_or(""));
            }
        }
    }
}
