//! Second-stage search: structured exponent patterns for higher-rank C and D.
use qaffine::cartan::{AffineData, Family};
use qaffine::chevalley::{CGen, ChevRep};
use qaffine::drinfeld::{q_bracket, DGen, DrinfeldRep, OpExpr};
use qaffine::evalmod::EvalRep;
use qaffine::frac::{frac, fint, Frac};
use qaffine::linmap::LinMap;
use qaffine::scalar::Scalar;

fn bracket(idx: &[usize], exps: &[Frac]) -> OpExpr {
    let mut expr = OpExpr::Gen(DGen::XM(idx[0], 1));
    for t in 1..idx.len() {
        expr = q_bracket(OpExpr::Gen(DGen::XM(idx[t], 0)), expr, Scalar::q_pow(exps[t - 1]));
    }
    expr
}

fn ratio_if_constant(rep: &EvalRep, idx: &[usize], exps: &[Frac]) -> Option<Scalar> {
    let data = &rep.data;
    let mut ops = vec![bracket(idx, exps)];
    ops.extend(
        data.eps_indices
            .iter()
            .map(|&i| OpExpr::Gen(DGen::K(i, -1))),
    );
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
            Some(prev) if prev != &r => return None,
            _ => {}
        }
    }
    ratio
}

fn main() {
    // D_5: sequence 1,2,3,4,5,3,2 (7 entries, 6 exponents).
    let d5 = AffineData::new(Family::D, 5).unwrap();
    let rep5 = EvalRep::new(d5.clone(), false);
    let idx5 = d5.eps_indices.clone();
    println!("D_5 idx {:?}", idx5);
    let cands: Vec<Vec<i64>> = vec![
        vec![-1, -1, -1, -1, -1, 0],
        vec![-1, -1, -1, -1, 0, -1],
        vec![-1, -1, -1, 0, -1, -1],
        vec![-1, -1, -1, -1, 0, 0],
        vec![-1, -1, -1, 0, 0, -1],
        vec![-1, -1, 0, -1, -1, 0],
        vec![-1, -1, -1, 0, -1, 0],
        vec![-1, -1, 0, -1, 0, -1],
        vec![-2, -1, -1, -1, 0, 0],
    ];
    for c in cands {
        let exps: Vec<Frac> = c.iter().map(|&e| fint(e)).collect();
        if let Some(r) = ratio_if_constant(&rep5, &idx5, &exps) {
            println!("  D_5 exps {:?} -> ratio {}", c, r);
        }
    }
    // Also swapped-diamond order for D_4 and D_5 with plain -1s
    let d4 = AffineData::new(Family::D, 4).unwrap();
    let rep4 = EvalRep::new(d4.clone(), false);
    let idx4_swapped = vec![1usize, 2, 4, 3, 2];
    for c in [vec![-1i64, -1, -1, -1], vec![-1, -1, -1, 0], vec![-1, -1, 0, -1]] {
        let exps: Vec<Frac> = c.iter().map(|&e| fint(e)).collect();
        if let Some(r) = ratio_if_constant(&rep4, &idx4_swapped, &exps) {
            println!("  D_4 swapped idx exps {:?} -> ratio {}", c, r);
        }
    }
    // C_4: sequence 1,2,3,4,3,2,1 (7 entries, 6 exponents). Patterns with
    // halves; ratio should be [2]_{q_1} = s + 1/s.
    let c4 = AffineData::new(Family::C, 4).unwrap();
    let repc4 = EvalRep::new(c4.clone(), false);
    let idxc4 = c4.eps_indices.clone();
    println!("C_4 idx {:?}", idxc4);
    let candsc: Vec<Vec<Frac>> = vec![
        vec![frac(-1,2), frac(-1,2), fint(-1), frac(-1,2), frac(-1,2), fint(0)],
        vec![frac(-1,2), frac(-1,2), fint(-1), fint(0), fint(0), fint(0)],
        vec![frac(-1,2), fint(-1), frac(-1,2), fint(0), fint(0), fint(0)],
        vec![frac(-1,2), frac(-1,2), frac(-1,2), fint(0), fint(0), fint(0)],
        vec![fint(-1), frac(-1,2), frac(-1,2), fint(0), fint(0), fint(0)],
        vec![frac(-1,2), frac(-1,2), fint(-1), frac(-1,2), fint(0), fint(0)],
        vec![frac(-1,2), frac(-1,2), frac(-3,2), fint(0), fint(0), fint(0)],
        vec![frac(-5,2), fint(0), fint(0), fint(0), fint(0), fint(0)],
    ];
    for c in candsc {
        if let Some(r) = ratio_if_constant(&repc4, &idxc4, &c) {
            println!("  C_4 exps {:?} -> ratio {}", c.iter().map(|f| f.to_string()).collect::<Vec<_>>(), r);
        }
    }
    // C_3 check two specific candidates explicitly
    let c3 = AffineData::new(Family::C, 3).unwrap();
    let repc3 = EvalRep::new(c3.clone(), false);
    let idxc3 = c3.eps_indices.clone();
    for c in [
        vec![frac(-1,2), fint(-1), frac(-1,2), fint(0)],
        vec![frac(-1,2), fint(-1), fint(0), fint(0)],
        vec![frac(-1,2), frac(-1,2), frac(-1,2), fint(0)],
    ] {
        if let Some(r) = ratio_if_constant(&repc3, &idxc3, &c) {
            println!("  C_3 exps {:?} -> ratio {}", c.iter().map(|f| f.to_string()).collect::<Vec<_>>(), r);
        }
    }
}
