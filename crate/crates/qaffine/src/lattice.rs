//! The sign two-cocycle on the root lattice and lattice-point bookkeeping for
//! the Fock-space modules.
//!
//! The cocycle is the bimultiplicative section with eps(alpha_i, alpha_j) = 1
//! for i <= j and eps(alpha_i, alpha_j) = (-1)^{(a_i|a_j)+(a_i|a_i)(a_j|a_j)}
//! for i > j. Its antisymmetrization then satisfies
//! eps(a,b) eps(b,a) = (-1)^{(a|b)+(a|a)(b|b)} on the whole lattice.
//! Offsets adjoined to the group algebra (fundamental weights) pair with
//! sign +1 by convention.

use crate::cartan::AffineData;
use crate::error::{Error, Result};
use crate::frac::{fint, Frac};
use num_traits::Zero;

/// Lattice point of a level-one or level -1/2 module: a fixed fundamental
/// offset (index 0 means no offset, r means lambda_r scaled by `off_scale`)
/// plus an integer vector in the root lattice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct LatticePoint {
    pub q_coords: Vec<i64>,
}

impl LatticePoint {
    pub fn zero(n: usize) -> Self {
        LatticePoint {
            q_coords: vec![0; n],
        }
    }

    pub fn shift(&self, by: &[i64]) -> Self {
        LatticePoint {
            q_coords: self
                .q_coords
                .iter()
                .zip(by)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn height(&self) -> i64 {
        self.q_coords.iter().map(|c| c.abs()).sum()
    }
}

fn pair_int(data: &AffineData, i: usize, j: usize) -> i64 {
    let p = data.d[i] * fint(data.cartan[i][j]);
    assert!(
        p.is_integer(),
        "cocycle requested on a lattice with non-integer pairings"
    );
    p.to_integer()
}

/// Sign table for the simple roots: eps(alpha_i, alpha_j).
fn simple_sign(data: &AffineData, i: usize, j: usize) -> i64 {
    if i <= j {
        1
    } else {
        let aij = pair_int(data, i, j);
        let aii = pair_int(data, i, i);
        let ajj = pair_int(data, j, j);
        if (aij + aii * ajj) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Bimultiplicative cocycle eps(a, b) for root-lattice points given by
/// integer coordinates on the simple roots.
pub fn cocycle_sign(data: &AffineData, a: &[i64], b: &[i64]) -> i64 {
    let mut sign = 1i64;
    for (i, &ma) in a.iter().enumerate() {
        if ma == 0 {
            continue;
        }
        for (j, &mb) in b.iter().enumerate() {
            if mb == 0 {
                continue;
            }
            if simple_sign(data, i + 1, j + 1) < 0 && (ma * mb) % 2 != 0 {
                sign = -sign;
            }
        }
    }
    sign
}

/// Checked variant used by the public operation: verifies that the pairing
/// exponent appearing in the antisymmetry law is an integer.
pub fn cocycle_sign_checked(data: &AffineData, a: &[i64], b: &[i64]) -> Result<i64> {
    let wa = root_weight(data, a);
    let wb = root_weight(data, b);
    let p = data.pairing(&wa, &wb);
    let paa = data.pairing(&wa, &wa);
    let pbb = data.pairing(&wb, &wb);
    if !(p + paa * pbb).is_integer() {
        return Err(Error::NonIntegerSign(format!("(a|b) = {}", p)));
    }
    Ok(cocycle_sign(data, a, b))
}

pub fn root_weight(data: &AffineData, coords: &[i64]) -> crate::cartan::WeightVec {
    let mut w = crate::cartan::WeightVec::zero(data.n);
    for (j, &c) in coords.iter().enumerate() {
        if c != 0 {
            w = w.add(&data.alpha(j + 1).scaled(fint(c)));
        }
    }
    w
}

/// Eigenvalue (a|b) of the derivation attached to `a` on e^b.
pub fn partial_eig(data: &AffineData, a: &crate::cartan::WeightVec, b: &crate::cartan::WeightVec) -> Frac {
    data.pairing(a, b)
}

/// Enumerate integer root-lattice vectors with L1 height at most `cap`.
pub fn lattice_window(n: usize, cap: i64) -> Vec<Vec<i64>> {
    let mut out = vec![];
    let mut cur = vec![0i64; n];
    fn rec(n: usize, cap: i64, idx: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if idx == n {
            out.push(cur.clone());
            return;
        }
        let used: i64 = cur[..idx].iter().map(|c| c.abs()).sum();
        let room = cap - used;
        for v in -room..=room {
            cur[idx] = v;
            rec(n, cap, idx + 1, cur, out);
        }
        cur[idx] = 0;
    }
    rec(n, cap, 0, &mut cur, &mut out);
    out.sort();
    out
}

/// Zero vector test helper for windows.
pub fn is_zero_vec(v: &[i64]) -> bool {
    v.iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    #[test]
    fn antisymmetry_on_simple_roots_a2() {
        let d = AffineData::new(Family::A, 2).unwrap();
        let a1 = vec![1, 0];
        let a2 = vec![0, 1];
        let prod = cocycle_sign(&d, &a1, &a2) * cocycle_sign(&d, &a2, &a1);
        // (-1)^{(a1|a2) + (a1|a1)(a2|a2)} = (-1)^{-1 + 4} = -1
        assert_eq!(prod, -1);
    }

    #[test]
    fn diagonal_convention() {
        let d = AffineData::new(Family::A, 2).unwrap();
        assert_eq!(cocycle_sign(&d, &[1, 0], &[1, 0]), 1);
    }

    #[test]
    fn b3_short_root_square() {
        let d = AffineData::new(Family::B, 3).unwrap();
        let an = vec![0, 0, 1];
        let s = cocycle_sign(&d, &an, &an);
        // eps(a_n, a_n)^2 = (+1) and consistency with the antisymmetry law:
        // (-1)^{(a|a)+(a|a)(a|a)} = (-1)^{1+1} = +1
        assert_eq!(s * s, 1);
    }

    #[test]
    fn antisymmetry_law_on_window() {
        for (fam, n) in [(Family::A, 2), (Family::B, 2), (Family::D, 4)] {
            let d = AffineData::new(fam, n).unwrap();
            let pts = lattice_window(n, 4);
            for a in &pts {
                for b in &pts {
                    let lhs = cocycle_sign(&d, a, b) * cocycle_sign(&d, b, a);
                    let wa = root_weight(&d, a);
                    let wb = root_weight(&d, b);
                    let e = d.pairing(&wa, &wb) + d.pairing(&wa, &wa) * d.pairing(&wb, &wb);
                    assert!(e.is_integer());
                    let rhs = if e.to_integer() % 2 == 0 { 1 } else { -1 };
                    assert_eq!(lhs, rhs, "{:?} {:?} in {}_{}", a, b, fam, n);
                }
            }
        }
    }

    #[test]
    fn bimultiplicative_cocycle_condition() {
        let d = AffineData::new(Family::B, 2).unwrap();
        let pts = lattice_window(2, 2);
        for a in &pts {
            for b in &pts {
                for c in &pts {
                    let ab: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    let bc: Vec<i64> = b.iter().zip(c).map(|(x, y)| x + y).collect();
                    let lhs = cocycle_sign(&d, a, b) * cocycle_sign(&d, &ab, c);
                    let rhs = cocycle_sign(&d, b, c) * cocycle_sign(&d, a, &bc);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
