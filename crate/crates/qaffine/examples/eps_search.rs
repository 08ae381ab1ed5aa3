//! Search bracket exponent assignments that make the affine-node composite
//! match the graph action exactly (up to a constant), per family.
use qaffine::cartan::{AffineData, Family};
use qaffine::chevalley::{CGen, ChevRep};
use qaffine::drinfeld::{q_bracket, DGen, DrinfeldRep, OpExpr};
use qaffine::evalmod::EvalRep;
use qaffine::frac::{frac, Frac};
use qaffine::linmap::LinMap;
use qaffine::scalar::Scalar;

fn bracket(idx: &[usize], exps: &[Frac], reversed_exps: bool) -> OpExpr {
    let mut expr = OpExpr::Gen(DGen::XM(idx[0], 1));
    for t in 1..idx.len() {
        let e = if reversed_exps {
            exps[exps.len() - t]
        } else {
            exps[t - 1]
        };
        expr = q_bracket(OpExpr::Gen(DGen::XM(idx[t], 0)), expr, Scalar::q_pow(e));
    }
    expr
}

fn ratio_if_constant(rep: &EvalRep, idx: &[usize], exps: &[Frac], rev: bool) -> Option<Scalar> {
    let data = &rep.data;
    let ktheta: Vec<OpExpr> = data
        .eps_indices
        .iter()
        .map(|&i| OpExpr::Gen(DGen::K(i, -1)))
        .collect();
    let mut ops = vec![bracket(idx, exps, rev)];
    ops.extend(ktheta);
    let e0 = OpExpr::Compose(ops);
    let mut ratio: Option<Scalar> = None;
    for key in rep.basis_at(0) {
        let v = LinMap::basis(key);
        let g = rep.apply_c(&CGen::E(0), &v);
        let d = e0.apply(rep, &v);
        if g.is_zero() {
            if !d.is_zero() {
                return None;
            }
            continue;
        }
        // d must be proportional to g
        let (k0, c0) = g.iter().next().unwrap();
        let r = &d.coeff(k0) / c0;
        let mut scaled = g.clone();
        scaled.scale(&r);
        scaled.sub(&d);
        if !scaled.is_zero() {
            return None;
        }
        match &ratio {
            None => ratio = Some(r),
            Some(prev) => {
                if prev != &r {
                    return None;
                }
            }
        }
    }
    ratio
}

fn main() {
    let grid: Vec<Frac> = vec![frac(0, 1), frac(-1, 2), frac(-1, 1), frac(-3, 2), frac(-2, 1)];
    for (fam, n) in [(Family::D, 4), (Family::C, 3)] {
        let data = AffineData::new(fam, n).unwrap();
        let rep = EvalRep::new(data.clone(), false);
        let idx = data.eps_indices.clone();
        let m = idx.len() - 1;
        println!("== {}_{} sequence {:?}, {} exponents ==", fam, n, idx, m);
        let mut count = 0;
        let total = grid.len().pow(m as u32);
        for code in 0..total {
            let mut c = code;
            let exps: Vec<Frac> = (0..m)
                .map(|_| {
                    let e = grid[c % grid.len()];
                    c /= grid.len();
                    e
                })
                .collect();
            if let Some(r) = ratio_if_constant(&rep, &idx, &exps, false) {
                println!("  exps {:?} -> ratio {}", exps.iter().map(|f| f.to_string()).collect::<Vec<_>>(), r);
                count += 1;
                if count > 12 { break; }
            }
        }
        if count == 0 {
            println!("  (no constant-ratio assignment in grid)");
        }
    }
}
