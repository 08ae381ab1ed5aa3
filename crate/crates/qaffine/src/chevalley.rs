//! Chevalley-presentation generators and the generic relation checker for
//! them (commutation with the torus, [e_i, f_j], and the q-Serre relations),
//! with the affine node included through the current composites.

use crate::cartan::AffineData;
use crate::frac::fint;
use crate::linmap::LinMap;
use crate::par::par_map;
use crate::report::{CheckOutcome, Status};
use crate::scalar::{q_factorial, q_int_base, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CGen {
    E(usize),
    F(usize),
    /// t_i^e
    T(usize, i64),
}

impl std::fmt::Display for CGen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CGen::E(i) => write!(f, "e{}", i),
            CGen::F(i) => write!(f, "f{}", i),
            CGen::T(i, e) => write!(f, "t{}^{}", i, e),
        }
    }
}

pub trait ChevRep: Sync {
    type Key: Ord + Clone + Send + Sync + std::fmt::Debug;
    fn data(&self) -> &AffineData;
    fn apply_c(&self, g: &CGen, x: &LinMap<Self::Key>) -> LinMap<Self::Key>;
}

/// Composite Chevalley expression (mirror of drinfeld::OpExpr).
#[derive(Clone, Debug)]
pub enum CExpr {
    Id,
    Gen(CGen),
    Compose(Vec<CExpr>),
    Lin(Vec<(Scalar, CExpr)>),
}

impl CExpr {
    pub fn apply<R: ChevRep>(&self, rep: &R, x: &LinMap<R::Key>) -> LinMap<R::Key> {
        match self {
            CExpr::Id => x.clone(),
            CExpr::Gen(g) => rep.apply_c(g, x),
            CExpr::Compose(ops) => {
                let mut cur = x.clone();
                for op in ops.iter().rev() {
                    cur = op.apply(rep, &cur);
                    if cur.is_zero() {
                        break;
                    }
                }
                cur
            }
            CExpr::Lin(terms) => {
                let mut acc = LinMap::new();
                for (c, op) in terms {
                    acc.add_scaled(&op.apply(rep, x), c);
                }
                acc
            }
        }
    }
}

fn pairing_exp(data: &AffineData, i: usize, j: usize) -> crate::frac::Frac {
    data.d[i] * fint(data.cartan[i][j])
}

/// All Chevalley relations over the full affine index set.
pub fn chevalley_instances(data: &AffineData) -> Vec<(String, CExpr)> {
    let n = data.n;
    let mut out = vec![];
    let gen = |g: CGen| CExpr::Gen(g);

    // t_i e_j t_i^{-1} = q^{(alpha_i|alpha_j)} e_j, and the f-version
    for i in 0..=n {
        for j in 0..=n {
            let phase = Scalar::q_pow(pairing_exp(data, i, j));
            out.push((
                format!("te/i{}/j{}", i, j),
                CExpr::Lin(vec![
                    (
                        Scalar::one(),
                        CExpr::Compose(vec![gen(CGen::T(i, 1)), gen(CGen::E(j)), gen(CGen::T(i, -1))]),
                    ),
                    (-&phase, gen(CGen::E(j))),
                ]),
            ));
            out.push((
                format!("tf/i{}/j{}", i, j),
                CExpr::Lin(vec![
                    (
                        Scalar::one(),
                        CExpr::Compose(vec![gen(CGen::T(i, 1)), gen(CGen::F(j)), gen(CGen::T(i, -1))]),
                    ),
                    (-&phase.inv(), gen(CGen::F(j))),
                ]),
            ));
        }
    }

    // [e_i, f_j] = delta_ij (t_i - t_i^{-1})/(q_i - q_i^{-1})
    for i in 0..=n {
        for j in 0..=n {
            let mut terms = vec![
                (
                    Scalar::one(),
                    CExpr::Compose(vec![gen(CGen::E(i)), gen(CGen::F(j))]),
                ),
                (
                    -&Scalar::one(),
                    CExpr::Compose(vec![gen(CGen::F(j)), gen(CGen::E(i))]),
                ),
            ];
            if i == j {
                let qi = data.d[i];
                let denom = &Scalar::q_pow(qi) - &Scalar::q_pow(-qi);
                terms.push((-&denom.inv(), gen(CGen::T(i, 1))));
                terms.push((denom.inv(), gen(CGen::T(i, -1))));
            }
            out.push((format!("ef/i{}/j{}", i, j), CExpr::Lin(terms)));
        }
    }

    // q-Serre: sum_{m+m'=1-a_ij} (-1)^m e_i^(m) e_j e_i^(m') = 0 for i != j
    for i in 0..=n {
        for j in 0..=n {
            if i == j {
                continue;
            }
            let mtot = (1 - data.cartan[i][j]) as usize;
            let kinds: [(fn(usize) -> CGen, &str); 2] =
                [(CGen::E, "serre-e"), (CGen::F, "serre-f")];
            for (mk, name) in kinds {
                let mut terms: Vec<(Scalar, CExpr)> = vec![];
                for m in 0..=mtot {
                    let mp = mtot - m;
                    let mut ops: Vec<CExpr> = vec![];
                    for _ in 0..m {
                        ops.push(gen(mk(i)));
                    }
                    ops.push(gen(mk(j)));
                    for _ in 0..mp {
                        ops.push(gen(mk(i)));
                    }
                    let mut c = &q_factorial(m as u32, data.d[i]).inv()
                        * &q_factorial(mp as u32, data.d[i]).inv();
                    if m % 2 == 1 {
                        c = -&c;
                    }
                    terms.push((c, CExpr::Compose(ops)));
                }
                out.push((format!("{}/i{}/j{}", name, i, j), CExpr::Lin(terms)));
            }
        }
    }

    out
}

pub fn check_chevalley<R: ChevRep>(
    rep: &R,
    instances: Vec<(String, CExpr)>,
    basis: &[R::Key],
) -> Vec<CheckOutcome> {
    par_map(instances, |(id, expr)| {
        for key in basis {
            let v = LinMap::basis(key.clone());
            let out = expr.apply(rep, &v);
            if !out.is_zero() {
                let mut parts: Vec<String> = vec![];
                for (k, c) in out.iter().take(4) {
                    parts.push(format!("({}) {:?}", c, k));
                }
                return CheckOutcome {
                    id: id.clone(),
                    status: Status::Fail,
                    witness: Some(format!("on {:?}: lhs-rhs = {}", key, parts.join(" + "))),
                };
            }
        }
        CheckOutcome {
            id: id.clone(),
            status: Status::Pass,
            witness: None,
        }
    })
}

/// Convenience: eigenvalue test t_i v = q_i^{<w,h_i>} v.
pub fn t_eigen_scalar(data: &AffineData, i: usize, h_pairing: crate::frac::Frac) -> Scalar {
    Scalar::q_pow(data.d[i] * h_pairing)
}

/// [k]_{q_i}-normalized divided power application: g^k / [k]_i!.
pub fn divided_power<R: ChevRep>(
    rep: &R,
    g: &CGen,
    k: u32,
    x: &LinMap<R::Key>,
) -> LinMap<R::Key> {
    let i = match g {
        CGen::E(i) | CGen::F(i) | CGen::T(i, _) => *i,
    };
    let mut cur = x.clone();
    for _ in 0..k {
        cur = rep.apply_c(g, &cur);
    }
    let fact = q_factorial(k, rep.data().d[i]);
    cur.scale(&fact.inv());
    cur
}

/// Helper for q-integer coefficients exposed to callers building actions.
pub fn string_coeff(data: &AffineData, i: usize, len: i64) -> Scalar {
    q_int_base(len, data.d[i])
}
