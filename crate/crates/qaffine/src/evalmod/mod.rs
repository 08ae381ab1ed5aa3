//! Level-zero evaluation modules on the vector representations, their
//! restricted duals, and the verification oracles tying the two
//! presentations together.
//!
//! Basis keys are (node, z-exponent). Operators act exactly, one finitely
//! supported map per mode; z never appears as a truncated series at level
//! zero. All actions are graph-driven except the family-specific branch of
//! the n-th current, which is tabulated.
//!
//! The dual module carries the antipode-induced action: x acts on V* as the
//! transpose of S(x) on V. For the currents the dual action is tabulated
//! (with the scalar prefactors in terms of q_j, which for the doubled-index
//! families is what the antipode produces), and the oracle
//! [`duality_outcomes`] verifies that both descriptions generate the same
//! module structure.

pub mod graph;

use crate::cartan::{AffineData, Family, Node};
use crate::chevalley::{CGen, ChevRep};
use crate::drinfeld::{psi_e0, psi_f0, psi_t0, DGen, DrinfeldRep};
use crate::frac::{fint, Frac};
use crate::linmap::LinMap;
use crate::report::{CheckOutcome, Status};
use crate::scalar::{q_int_base, Scalar};
use graph::RepGraph;
use num_traits::Zero;

pub type EvalKey = (Node, i64);
pub type EvalElement = LinMap<EvalKey>;

pub struct EvalRep {
    pub data: AffineData,
    pub graph: RepGraph,
    pub dual: bool,
}

impl EvalRep {
    pub fn new(data: AffineData, dual: bool) -> EvalRep {
        let graph = RepGraph::new(&data);
        EvalRep { data, graph, dual }
    }

    pub fn basis_at(&self, zexp: i64) -> Vec<EvalKey> {
        self.graph.nodes.iter().map(|&v| (v, zexp)).collect()
    }

    fn qj(&self, j: usize) -> Frac {
        self.data.d[j]
    }

    /// q_j^{e} as a scalar.
    fn qj_pow(&self, j: usize, e: i64) -> Scalar {
        Scalar::q_pow(self.qj(j) * fint(e))
    }

    fn wt(&self, v: Node, i: usize) -> i64 {
        self.graph.weight_pairing(v, i)
    }

    fn generic_label(&self, j: usize) -> bool {
        self.data.family == Family::A || j < self.data.n
    }

    /// x_j^+(k) on a basis vector.
    fn xp(&self, j: usize, k: i64, key: &EvalKey, out: &mut EvalElement) {
        let (v, m) = *key;
        let n = self.data.n;
        if self.generic_label(j) {
            for a in self.graph.arrows_with_label(j) {
                let c = self.data.content(a.src).expect("source content");
                if !self.dual && a.tgt == v {
                    out.add_term((a.src, m + k), Scalar::q_pow(self.qj(j) * fint(c * k)));
                } else if self.dual && a.src == v {
                    let coeff = &(-&self.qj_pow(j, -1))
                        * &Scalar::q_pow(-self.qj(j) * fint(c * k));
                    out.add_term((a.tgt, m + k), coeff);
                }
            }
            return;
        }
        let nn = n as u8;
        let two_n = q_int_base(2, self.data.d[n]);
        match (self.data.family, self.dual) {
            (Family::B, false) => {
                if v == Node::Zero {
                    out.add_term(
                        (Node::V(nn), m + k),
                        &two_n * &Scalar::q_int_pow(n as i64 * k),
                    );
                } else if v == Node::Bar(nn) {
                    out.add_term((Node::Zero, m + k), Scalar::q_int_pow((n as i64 - 1) * k));
                }
            }
            (Family::B, true) => {
                if v == Node::V(nn) {
                    out.add_term(
                        (Node::Zero, m + k),
                        &(-&Scalar::q_int_pow(-1)) * &(&two_n * &Scalar::q_int_pow(-(n as i64) * k)),
                    );
                } else if v == Node::Zero {
                    out.add_term(
                        (Node::Bar(nn), m + k),
                        -&Scalar::q_int_pow((1 - n as i64) * k),
                    );
                }
            }
            (Family::C, false) => {
                if v == Node::Bar(nn) {
                    out.add_term((Node::V(nn), m + k), Scalar::q_int_pow((n as i64 - 1) * k));
                }
            }
            (Family::C, true) => {
                if v == Node::V(nn) {
                    out.add_term(
                        (Node::Bar(nn), m + k),
                        &(-&Scalar::q_int_pow(-1)) * &Scalar::q_int_pow((1 - n as i64) * k),
                    );
                }
            }
            (Family::D, false) => {
                let c = Scalar::q_int_pow((n as i64 - 1) * k);
                if v == Node::Bar(nn) {
                    out.add_term((Node::V(nn - 1), m + k), c);
                } else if v == Node::Bar(nn - 1) {
                    out.add_term((Node::V(nn), m + k), c);
                }
            }
            (Family::D, true) => {
                let c = &(-&Scalar::q_int_pow(-1)) * &Scalar::q_int_pow((1 - n as i64) * k);
                if v == Node::V(nn - 1) {
                    out.add_term((Node::Bar(nn), m + k), c);
                } else if v == Node::V(nn) {
                    out.add_term((Node::Bar(nn - 1), m + k), c);
                }
            }
            (Family::A, _) => unreachable!(),
        }
    }

    fn xm(&self, j: usize, k: i64, key: &EvalKey, out: &mut EvalElement) {
        let (v, m) = *key;
        let n = self.data.n;
        if self.generic_label(j) {
            for a in self.graph.arrows_with_label(j) {
                let c = self.data.content(a.src).expect("source content");
                if !self.dual && a.src == v {
                    out.add_term((a.tgt, m + k), Scalar::q_pow(self.qj(j) * fint(c * k)));
                } else if self.dual && a.tgt == v {
                    let coeff =
                        &(-&self.qj_pow(j, 1)) * &Scalar::q_pow(-self.qj(j) * fint(c * k));
                    out.add_term((a.src, m + k), coeff);
                }
            }
            return;
        }
        let nn = n as u8;
        let two_n = q_int_base(2, self.data.d[n]);
        match (self.data.family, self.dual) {
            (Family::B, false) => {
                if v == Node::Zero {
                    out.add_term(
                        (Node::Bar(nn), m + k),
                        &two_n * &Scalar::q_int_pow((n as i64 - 1) * k),
                    );
                } else if v == Node::V(nn) {
                    out.add_term((Node::Zero, m + k), Scalar::q_int_pow(n as i64 * k));
                }
            }
            (Family::B, true) => {
                if v == Node::Bar(nn) {
                    out.add_term(
                        (Node::Zero, m + k),
                        -&(&two_n * &Scalar::q_int_pow((1 - n as i64) * k)),
                    );
                } else if v == Node::Zero {
                    out.add_term(
                        (Node::V(nn), m + k),
                        &(-&Scalar::q_int_pow(1)) * &Scalar::q_int_pow(-(n as i64) * k),
                    );
                }
            }
            (Family::C, false) => {
                if v == Node::V(nn) {
                    out.add_term((Node::Bar(nn), m + k), Scalar::q_int_pow((n as i64 - 1) * k));
                }
            }
            (Family::C, true) => {
                if v == Node::Bar(nn) {
                    out.add_term(
                        (Node::V(nn), m + k),
                        &(-&Scalar::q_int_pow(1)) * &Scalar::q_int_pow((1 - n as i64) * k),
                    );
                }
            }
            (Family::D, false) => {
                let c = Scalar::q_int_pow((n as i64 - 1) * k);
                if v == Node::V(nn - 1) {
                    out.add_term((Node::Bar(nn), m + k), c);
                } else if v == Node::V(nn) {
                    out.add_term((Node::Bar(nn - 1), m + k), c);
                }
            }
            (Family::D, true) => {
                let c = &(-&Scalar::q_int_pow(1)) * &Scalar::q_int_pow((1 - n as i64) * k);
                if v == Node::Bar(nn) {
                    out.add_term((Node::V(nn - 1), m + k), c);
                } else if v == Node::Bar(nn - 1) {
                    out.add_term((Node::V(nn), m + k), c);
                }
            }
            (Family::A, _) => unreachable!(),
        }
    }

    fn a_gen(&self, j: usize, l: i64, key: &EvalKey, out: &mut EvalElement) {
        let (v, m) = *key;
        let n = self.data.n;
        if self.generic_label(j) {
            let rate = &q_int_base(l, self.data.d[j]) / &Scalar::from_int(l);
            for a in self.graph.arrows_with_label(j) {
                let c = self.data.content(a.src).expect("source content");
                let sgn = if self.dual { -1 } else { 1 };
                let zfac = Scalar::q_pow(self.qj(j) * fint(sgn * c * l));
                // primal: q_j^{-l} on the source, -q_j^{l} on the target;
                // dual: q_j^{-l} on the target, -q_j^{l} on the source.
                let (lo, hi) = if self.dual { (a.tgt, a.src) } else { (a.src, a.tgt) };
                if v == lo {
                    out.add_term((v, m + l), &(&rate * &zfac) * &self.qj_pow(j, -l));
                }
                if v == hi {
                    out.add_term((v, m + l), -&(&(&rate * &zfac) * &self.qj_pow(j, l)));
                }
            }
            return;
        }
        let nn = n as u8;
        let nl = (n as i64 - 1) * l;
        match (self.data.family, self.dual) {
            (Family::B, false) => {
                let c = &(&q_int_base(2 * l, self.data.d[n]) / &Scalar::from_int(l))
                    * &Scalar::q_int_pow(nl);
                if v == Node::V(nn) {
                    out.add_term((v, m + l), c);
                } else if v == Node::Zero {
                    out.add_term((v, m + l), &c * &(&Scalar::one() - &Scalar::q_int_pow(l)));
                } else if v == Node::Bar(nn) {
                    out.add_term((v, m + l), -&(&c * &Scalar::q_int_pow(l)));
                }
            }
            (Family::B, true) => {
                let c = &(&q_int_base(2 * l, self.data.d[n]) / &Scalar::from_int(l))
                    * &Scalar::q_int_pow(-nl);
                if v == Node::Zero {
                    out.add_term((v, m + l), &c * &(&Scalar::q_int_pow(-l) - &Scalar::one()));
                } else if v == Node::V(nn) {
                    out.add_term((v, m + l), -&c);
                } else if v == Node::Bar(nn) {
                    out.add_term((v, m + l), &c * &Scalar::q_int_pow(-l));
                }
            }
            (Family::C, false) => {
                let c = &(&q_int_base(l, fint(1)) / &Scalar::from_int(l)) * &Scalar::q_int_pow(nl);
                if v == Node::V(nn) {
                    out.add_term((v, m + l), &c * &Scalar::q_int_pow(-l));
                } else if v == Node::Bar(nn) {
                    out.add_term((v, m + l), -&(&c * &Scalar::q_int_pow(l)));
                }
            }
            (Family::C, true) => {
                let c = &(&q_int_base(l, fint(1)) / &Scalar::from_int(l)) * &Scalar::q_int_pow(-nl);
                if v == Node::Bar(nn) {
                    out.add_term((v, m + l), &c * &Scalar::q_int_pow(-l));
                } else if v == Node::V(nn) {
                    out.add_term((v, m + l), -&(&c * &Scalar::q_int_pow(l)));
                }
            }
            (Family::D, false) => {
                let c = &(&q_int_base(l, fint(1)) / &Scalar::from_int(l)) * &Scalar::q_int_pow(nl);
                if v == Node::V(nn - 1) || v == Node::V(nn) {
                    out.add_term((v, m + l), &c * &Scalar::q_int_pow(-l));
                } else if v == Node::Bar(nn) || v == Node::Bar(nn - 1) {
                    out.add_term((v, m + l), -&(&c * &Scalar::q_int_pow(l)));
                }
            }
            (Family::D, true) => {
                let c = &(&q_int_base(l, fint(1)) / &Scalar::from_int(l)) * &Scalar::q_int_pow(-nl);
                if v == Node::Bar(nn) || v == Node::Bar(nn - 1) {
                    out.add_term((v, m + l), &c * &Scalar::q_int_pow(-l));
                } else if v == Node::V(nn - 1) || v == Node::V(nn) {
                    out.add_term((v, m + l), -&(&c * &Scalar::q_int_pow(l)));
                }
            }
            (Family::A, _) => unreachable!(),
        }
    }
}

impl DrinfeldRep for EvalRep {
    type Key = EvalKey;

    fn data(&self) -> &AffineData {
        &self.data
    }

    fn gamma_q_exp(&self) -> Frac {
        Frac::zero()
    }

    fn apply_gen(&self, g: &DGen, x: &LinMap<EvalKey>) -> LinMap<EvalKey> {
        let mut out = LinMap::new();
        for (key, coeff) in x.iter() {
            let mut part = LinMap::new();
            match *g {
                DGen::XP(j, k) => self.xp(j, k, key, &mut part),
                DGen::XM(j, k) => self.xm(j, k, key, &mut part),
                DGen::A(j, l) => self.a_gen(j, l, key, &mut part),
                DGen::K(i, e) => {
                    let w = self.wt(key.0, i) * if self.dual { -1 } else { 1 };
                    part.add_term(*key, Scalar::q_pow(self.data.d[i] * fint(e * w)));
                }
                DGen::GammaHalf(_) => {
                    part.add_term(*key, Scalar::one());
                }
                DGen::Qd(e) => {
                    part.add_term(*key, Scalar::q_int_pow(e * key.1));
                }
            }
            out.add_scaled(&part, coeff);
        }
        out
    }

    fn supports_qd(&self) -> bool {
        true
    }
}

impl ChevRep for EvalRep {
    type Key = EvalKey;

    fn data(&self) -> &AffineData {
        &self.data
    }

    fn apply_c(&self, g: &CGen, x: &LinMap<EvalKey>) -> LinMap<EvalKey> {
        let mut out = LinMap::new();
        for ((v, m), coeff) in x.iter() {
            let mut part: LinMap<EvalKey> = LinMap::new();
            match *g {
                CGen::E(i) => {
                    let shift = if i == 0 { 1 } else { 0 };
                    for a in self.graph.arrows_with_label(i) {
                        if !self.dual && a.tgt == *v {
                            part.add_term((a.src, m + shift), self.graph.e_coeff(&self.data, a));
                        } else if self.dual && a.src == *v {
                            let w = self.wt(a.src, i);
                            let c = &(-&Scalar::q_pow(self.data.d[i] * fint(-w)))
                                * &self.graph.e_coeff(&self.data, a);
                            part.add_term((a.tgt, m + shift), c);
                        }
                    }
                }
                CGen::F(i) => {
                    let shift = if i == 0 { -1 } else { 0 };
                    for a in self.graph.arrows_with_label(i) {
                        if !self.dual && a.src == *v {
                            part.add_term((a.tgt, m + shift), self.graph.f_coeff(&self.data, a));
                        } else if self.dual && a.tgt == *v {
                            let w = self.wt(a.src, i);
                            let c = &(-&Scalar::q_pow(self.data.d[i] * fint(w)))
                                * &self.graph.f_coeff(&self.data, a);
                            part.add_term((a.src, m + shift), c);
                        }
                    }
                }
                CGen::T(i, e) => {
                    let w = self.wt(*v, i) * if self.dual { -1 } else { 1 };
                    part.add_term((*v, *m), Scalar::q_pow(self.data.d[i] * fint(e * w)));
                }
            }
            out.add_scaled(&part, coeff);
        }
        out
    }
}

fn compare_ops(
    rep: &EvalRep,
    id: &str,
    lhs: impl Fn(&EvalElement) -> EvalElement,
    rhs: impl Fn(&EvalElement) -> EvalElement,
) -> CheckOutcome {
    for zexp in [0i64, 1] {
        for key in rep.basis_at(zexp) {
            let v = LinMap::basis(key);
            let mut l = lhs(&v);
            let r = rhs(&v);
            l.sub(&r);
            if !l.is_zero() {
                return CheckOutcome {
                    id: id.to_string(),
                    status: Status::Fail,
                    witness: Some(format!("on {:?}: lhs-rhs = {}", key, render(&l))),
                };
            }
        }
    }
    CheckOutcome {
        id: id.to_string(),
        status: Status::Pass,
        witness: None,
    }
}

pub fn render(x: &EvalElement) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.iter()
        .map(|((v, m), c)| format!("({}) {}⊗z^{}", c, v, m))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The isomorphism oracle: the current composites for the affine node act on
/// the evaluation module exactly as the graph action does.
pub fn psi_oracle_outcomes(rep: &EvalRep) -> Vec<CheckOutcome> {
    let data = &rep.data;
    let e0 = psi_e0(data);
    let f0 = psi_f0(data);
    let t0 = psi_t0(data, 1);
    let t0inv = psi_t0(data, -1);
    vec![
        compare_ops(
            rep,
            "psi/e0",
            |v| e0.apply(rep, v),
            |v| rep.apply_c(&CGen::E(0), v),
        ),
        compare_ops(
            rep,
            "psi/f0",
            |v| f0.apply(rep, v),
            |v| rep.apply_c(&CGen::F(0), v),
        ),
        compare_ops(
            rep,
            "psi/t0",
            |v| t0.apply(rep, v),
            |v| rep.apply_c(&CGen::T(0, 1), v),
        ),
        compare_ops(
            rep,
            "psi/t0inv",
            |v| t0inv.apply(rep, v),
            |v| rep.apply_c(&CGen::T(0, -1), v),
        ),
    ]
}

/// The duality oracle: on the dual module, the tabulated current action and
/// the antipode-induced Chevalley action agree on every generator of the
/// algebra (mode-zero currents, the torus, and the affine-node composites).
/// Together with the defining-relation suite on the dual module this pins
/// the dual current action as the antipode dual.
pub fn duality_outcomes(dual: &EvalRep) -> Vec<CheckOutcome> {
    assert!(dual.dual);
    let data = &dual.data;
    let mut out = vec![];
    for i in 1..=data.n {
        out.push(compare_ops(
            dual,
            &format!("dual/e{}", i),
            |v| dual.apply_gen(&DGen::XP(i, 0), v),
            |v| dual.apply_c(&CGen::E(i), v),
        ));
        out.push(compare_ops(
            dual,
            &format!("dual/f{}", i),
            |v| dual.apply_gen(&DGen::XM(i, 0), v),
            |v| dual.apply_c(&CGen::F(i), v),
        ));
        out.push(compare_ops(
            dual,
            &format!("dual/t{}", i),
            |v| dual.apply_gen(&DGen::K(i, 1), v),
            |v| dual.apply_c(&CGen::T(i, 1), v),
        ));
    }
    out.extend(psi_oracle_outcomes(dual));
    out
}

/// Raw ratio of the un-normalized affine-node composite to the graph action,
/// reported for every family so the normalization constants stay auditable.
pub fn psi_raw_ratio(rep: &EvalRep) -> (Option<Scalar>, Option<Scalar>) {
    let data = &rep.data;
    let (ne, nf) = crate::drinfeld::psi_norms(data);
    let e0 = psi_e0(data);
    let f0 = psi_f0(data);
    let mut re = None;
    let mut rf = None;
    for key in rep.basis_at(0) {
        let v = LinMap::basis(key);
        let ge = rep.apply_c(&CGen::E(0), &v);
        let de = e0.apply(rep, &v);
        if let Some((k, c)) = ge.iter().next() {
            let dc = de.coeff(k);
            re = Some(&(&dc / c) * &ne);
        }
        let gf = rep.apply_c(&CGen::F(0), &v);
        let df = f0.apply(rep, &v);
        if let Some((k, c)) = gf.iter().next() {
            let dc = df.coeff(k);
            rf = Some(&(&dc / c) * &nf);
        }
        if re.is_some() && rf.is_some() {
            break;
        }
    }
    (re, rf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    fn rep(fam: Family, n: usize) -> EvalRep {
        EvalRep::new(AffineData::new(fam, n).unwrap(), false)
    }

    #[test]
    fn a1_graph_actions() {
        let r = rep(Family::A, 1);
        // f_1 (v_1 ⊗ z^0) = v_2 ⊗ z^0
        let v1 = LinMap::basis((Node::V(1), 0));
        let fv = r.apply_c(&CGen::F(1), &v1);
        assert_eq!(fv, LinMap::basis((Node::V(2), 0)));
        // e_0 (v_1 ⊗ z^0) = v_2 ⊗ z^1
        let ev = r.apply_c(&CGen::E(0), &v1);
        assert_eq!(ev, LinMap::basis((Node::V(2), 1)));
        // t_i eigenvalue 1 on nodes without incident i-arrows: none in A_1.
        // t_1 on v_1 is q.
        let tv = r.apply_c(&CGen::T(1, 1), &v1);
        assert_eq!(tv.coeff(&(Node::V(1), 0)), Scalar::q_int_pow(1));
    }

    #[test]
    fn c2_xp_mode_action() {
        // x_2^+(k) on (2bar, m) -> q^{(n-1)k} (2, m+k)
        let r = rep(Family::C, 2);
        let v = LinMap::basis((Node::Bar(2), 0));
        let out = r.apply_gen(&DGen::XP(2, 3), &v);
        assert_eq!(out.coeff(&(Node::V(2), 3)), Scalar::q_int_pow(3));
    }

    #[test]
    fn a1_a_mode_action() {
        // a_1(1) on (1, m) = (1, m+1): [1]/1 * q^{c k} * q^{-1} with c=1
        let r = rep(Family::A, 1);
        let v = LinMap::basis((Node::V(1), 0));
        let out = r.apply_gen(&DGen::A(1, 1), &v);
        assert_eq!(out.coeff(&(Node::V(1), 1)), Scalar::one());
    }

    #[test]
    fn a1_dual_xp_zero_mode() {
        let r = EvalRep::new(AffineData::new(Family::A, 1).unwrap(), true);
        let v = LinMap::basis((Node::V(1), 0));
        let out = r.apply_gen(&DGen::XP(1, 0), &v);
        assert_eq!(out.coeff(&(Node::V(2), 0)), -&Scalar::q_int_pow(-1));
    }

    #[test]
    fn t_eigenvalue_matches_weight_everywhere() {
        for (fam, n) in [(Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::D, 4)] {
            let r = rep(fam, n);
            for key in r.basis_at(0) {
                for i in 0..=n {
                    let v = LinMap::basis(key);
                    let tv = r.apply_c(&CGen::T(i, 1), &v);
                    let w = r.wt(key.0, i);
                    assert_eq!(
                        tv.coeff(&key),
                        Scalar::q_pow(r.data.d[i] * fint(w)),
                        "{}_{} t_{} on {:?}",
                        fam,
                        n,
                        i,
                        key
                    );
                }
            }
        }
    }

    #[test]
    fn psi_oracle_a1() {
        let r = rep(Family::A, 1);
        for o in psi_oracle_outcomes(&r) {
            assert_eq!(o.status, Status::Pass, "{}: {:?}", o.id, o.witness);
        }
    }

    #[test]
    fn psi_oracle_a2_matches_hand_bracket() {
        // [x_2^-(0), x_1^-(1)]_{q^{-1}} gamma K_theta^{-1} acts like e_0.
        let r = rep(Family::A, 2);
        for o in psi_oracle_outcomes(&r) {
            assert_eq!(o.status, Status::Pass, "{}: {:?}", o.id, o.witness);
        }
    }
}
