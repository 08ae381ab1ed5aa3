use qaffine::cartan::{AffineData, Family};
use qaffine::chevalley::{CGen, ChevRep};
use qaffine::drinfeld::{q_bracket, DGen, DrinfeldRep, OpExpr};
use qaffine::evalmod::EvalRep;
use qaffine::frac::{frac, fint, Frac};
use qaffine::linmap::LinMap;
use qaffine::scalar::Scalar;

fn bracket(idx: &[usize], exps: &[Frac], plus: bool, mode: i64) -> OpExpr {
    let g = |i: usize, k: i64| OpExpr::Gen(if plus { DGen::XP(i, k) } else { DGen::XM(i, k) });
    let mut expr = g(idx[0], mode);
    for t in 1..idx.len() {
        expr = q_bracket(g(idx[t], 0), expr, Scalar::q_pow(exps[t - 1]));
    }
    expr
}

fn ratios(rep: &EvalRep, idx: &[usize], exps: &[Frac]) -> (Option<Scalar>, Option<Scalar>) {
    let data = &rep.data;
    let km: Vec<OpExpr> = data.eps_indices.iter().map(|&i| OpExpr::Gen(DGen::K(i, -1))).collect();
    let kp: Vec<OpExpr> = data.eps_indices.iter().map(|&i| OpExpr::Gen(DGen::K(i, 1))).collect();
    let mut ops = vec![bracket(idx, exps, false, 1)];
    ops.extend(km);
    let e0 = OpExpr::Compose(ops);
    let mut opsf = kp;
    opsf.push(bracket(idx, exps, true, -1));
    let f0 = OpExpr::Compose(opsf);
    let check = |expr: &OpExpr, target: CGen| -> Option<Scalar> {
        let mut ratio: Option<Scalar> = None;
        for key in rep.basis_at(0) {
            let v = LinMap::basis(key);
            let g = rep.apply_c(&target, &v);
            let d = expr.apply(rep, &v);
            if g.is_zero() {
                if !d.is_zero() { return None; }
                continue;
            }
            let (k0, c0) = g.iter().next().unwrap();
            let r = &d.coeff(k0) / c0;
            let mut scaled = g.clone();
            scaled.scale(&r);
            scaled.sub(&d);
            if !scaled.is_zero() { return None; }
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if prev != &r => return None,
                _ => {}
            }
        }
        ratio
    };
    (check(&e0, CGen::E(0)), check(&f0, CGen::F(0)))
}

fn main() {
    // C_4 all-halves with trailing zero
    let c4 = AffineData::new(Family::C, 4).unwrap();
    let repc4 = EvalRep::new(c4.clone(), false);
    let exps: Vec<Frac> = vec![frac(-1,2); 5].into_iter().chain([fint(0)]).collect();
    let (re, rf) = ratios(&repc4, &c4.eps_indices, &exps);
    println!("C_4 all-halves+0: e0 {:?} f0 {:?}", re.map(|x| x.to_string()), rf.map(|x| x.to_string()));
    // pinned candidates, f0 raw ratios (bracket without extra constants)
    for (fam, n, exps) in [
        (Family::A, 2, vec![fint(-1)]),
        (Family::B, 2, vec![fint(0), fint(0)]),
        (Family::B, 3, vec![fint(-1), fint(0), fint(0), fint(-1)]),
        (Family::C, 2, vec![frac(-1,2), fint(0)]),
        (Family::C, 3, vec![frac(-1,2), frac(-1,2), frac(-1,2), fint(0)]),
        (Family::D, 4, vec![fint(-1), fint(-1), fint(-1), fint(0)]),
        (Family::D, 5, vec![fint(-1); 5].into_iter().chain([fint(0)]).collect()),
    ] {
        let d = AffineData::new(fam, n).unwrap();
        let rep = EvalRep::new(d.clone(), false);
        let (re, rf) = ratios(&rep, &d.eps_indices, &exps);
        println!(
            "{}_{} pinned: raw-e0 {:?}  raw-f0(bracket-with-Ktheta-gamma-only) {:?}",
            fam, n,
            re.map(|x| x.to_string()),
            rf.map(|x| x.to_string())
        );
    }
}
