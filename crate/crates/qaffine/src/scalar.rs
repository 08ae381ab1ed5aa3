//! Exact arithmetic in the coefficient field of the algebra.
//!
//! Every coefficient in this crate is a rational function over the rationals
//! in a single formal variable. The natural variable of the theory is
//! `s = q^{1/2}`, but the level -1/2 symplectic vertex operators produce
//! exponents in (1/8)Z, so internally we work with `t = q^{1/8}` (i.e.
//! `s = t^4`). Constructors take q-exponents as exact rationals and reject
//! anything outside (1/8)Z.
//!
//! Invariants of [`Scalar`]:
//! - denominator is nonzero with positive leading coefficient
//! - gcd(numerator, denominator) = 1 in Z[t], including integer contents
//!
//! Equality is therefore structural and agrees with equality of rational
//! functions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::frac::Frac;

/// q-exponent granularity: q^{1/8} is the internal variable.
pub const Q_DENOM: i64 = 8;

/// Sparse integer polynomial in `t`, exponents ascending, no zero terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SPoly {
    terms: Vec<(i64, BigInt)>,
}

impl SPoly {
    pub fn zero() -> Self {
        SPoly { terms: vec![] }
    }

    pub fn one() -> Self {
        SPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        if coeff.is_zero() {
            SPoly::zero()
        } else {
            SPoly {
                terms: vec![(exp, coeff)],
            }
        }
    }

    pub fn from_terms(mut terms: Vec<(i64, BigInt)>) -> Self {
        terms.sort_by_key(|&(e, _)| e);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == e {
                    last.1 += c;
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((e, c));
            }
        }
        SPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.terms.last().map(|&(e, _)| e).unwrap_or(i64::MIN)
    }

    pub fn low_exp(&self) -> i64 {
        self.terms.first().map(|&(e, _)| e).unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms.last().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    fn add_poly(&self, other: &SPoly) -> SPoly {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        SPoly::from_terms(terms)
    }

    fn neg_poly(&self) -> SPoly {
        SPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    fn mul_poly(&self, other: &SPoly) -> SPoly {
        if self.is_zero() || other.is_zero() {
            return SPoly::zero();
        }
        let mut acc: std::collections::BTreeMap<i64, BigInt> = std::collections::BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let v = acc.entry(e).or_insert_with(BigInt::zero);
                *v += c1 * c2;
            }
        }
        SPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn shift_exp(&self, by: i64) -> SPoly {
        SPoly {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// gcd of all integer coefficients (non-negative).
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_scalar_exact(&self, s: &BigInt) -> SPoly {
        SPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c / s)).collect(),
        }
    }

    /// Primitive part after stripping the monomial factor t^{low}.
    fn primitive_core(&self) -> (SPoly, i64, BigInt) {
        if self.is_zero() {
            return (SPoly::zero(), 0, BigInt::zero());
        }
        let low = self.low_exp();
        let content = self.content();
        let core = SPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e - low, c / &content))
                .collect(),
        };
        (core, low, content)
    }

    /// Pseudo-remainder of self by other (other nonzero, deg self >= deg other).
    fn prem(&self, other: &SPoly) -> SPoly {
        let mut r = self.clone();
        let d = other.degree();
        let lc = other.leading_coeff();
        while !r.is_zero() && r.degree() >= d {
            let shift = r.degree() - d;
            let rl = r.leading_coeff();
            // r = lc*r - rl * t^shift * other
            let scaled_r = SPoly {
                terms: r.terms.iter().map(|(e, c)| (*e, c * &lc)).collect(),
            };
            let sub = SPoly {
                terms: other
                    .terms
                    .iter()
                    .map(|(e, c)| (e + shift, c * &rl))
                    .collect(),
            };
            r = scaled_r.add_poly(&sub.neg_poly());
        }
        r
    }

    /// Polynomial gcd over Z[t], primitive PRS. Result is primitive-in-content
    /// up to the shared content/monomial factors of the inputs.
    fn gcd_poly(&self, other: &SPoly) -> SPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a_core, a_low, a_cont) = self.primitive_core();
        let (b_core, b_low, b_cont) = other.primitive_core();
        let low = a_low.min(b_low);
        let cont = a_cont.gcd(&b_cont);
        let (mut a, mut b) = if a_core.degree() >= b_core.degree() {
            (a_core, b_core)
        } else {
            (b_core, a_core)
        };
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive_core().0.shift_exp(0);
            if !b.is_zero() {
                // strip any monomial factor picked up by pseudo-division
                let (core, _, _) = b.primitive_core();
                b = core;
            }
        }
        let (mut g, _, _) = a.primitive_core();
        if g.leading_coeff().is_negative() {
            g = g.neg_poly();
        }
        let g = SPoly {
            terms: g.terms.iter().map(|(e, c)| (e + low, c * &cont)).collect(),
        };
        g
    }

    /// Exact division (panics if not exact). Used only on multiples of divisor.
    fn div_exact(&self, other: &SPoly) -> SPoly {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return SPoly::zero();
        }
        let mut r = self.clone();
        let mut q: Vec<(i64, BigInt)> = Vec::new();
        let d = other.degree();
        let lc = other.leading_coeff();
        while !r.is_zero() && r.degree() >= d {
            let shift = r.degree() - d;
            let (c, rem) = r.leading_coeff().div_rem(&lc);
            assert!(rem.is_zero(), "non-exact polynomial division");
            q.push((shift, c.clone()));
            let sub = SPoly {
                terms: other
                    .terms
                    .iter()
                    .map(|(e, cc)| (e + shift, cc * &c))
                    .collect(),
            };
            r = r.add_poly(&sub.neg_poly());
        }
        assert!(r.is_zero(), "non-exact polynomial division");
        SPoly::from_terms(q)
    }
}

/// Element of Q(t) in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: SPoly,
    den: SPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: SPoly::zero(),
            den: SPoly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: SPoly::one(),
            den: SPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            num: SPoly::monomial(0, BigInt::from(n)),
            den: SPoly::one(),
        }
    }

    pub fn from_frac(f: Frac) -> Self {
        Scalar {
            num: SPoly::monomial(0, BigInt::from(*f.numer())),
            den: SPoly::monomial(0, BigInt::from(*f.denom())),
        }
        .reduced()
    }

    fn raw(num: SPoly, den: SPoly) -> Self {
        Scalar { num, den }.reduced()
    }

    fn reduced(mut self) -> Self {
        assert!(!self.den.is_zero(), "zero denominator");
        if self.num.is_zero() {
            self.den = SPoly::one();
            return self;
        }
        let g = self.num.gcd_poly(&self.den);
        if !(g.terms.len() == 1 && g.terms[0] == (0, BigInt::one())) {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        // shared integer content
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            self.num = self.num.div_scalar_exact(&c);
            self.den = self.den.div_scalar_exact(&c);
        }
        if self.den.leading_coeff().is_negative() {
            self.num = self.num.neg_poly();
            self.den = self.den.neg_poly();
        }
        self
    }

    /// t^k (k may be negative).
    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            Scalar {
                num: SPoly::monomial(k, BigInt::one()),
                den: SPoly::one(),
            }
        } else {
            Scalar {
                num: SPoly::one(),
                den: SPoly::monomial(-k, BigInt::one()),
            }
        }
    }

    /// q^e for an exact rational exponent e in (1/8)Z.
    pub fn q_pow(e: Frac) -> Self {
        let scaled = e * Frac::new(Q_DENOM, 1);
        assert!(
            scaled.is_integer(),
            "q-exponent {} is not a multiple of 1/{}",
            e,
            Q_DENOM
        );
        Scalar::t_pow(scaled.to_integer())
    }

    /// s^k = q^{k/2}.
    pub fn s_pow(k: i64) -> Self {
        Scalar::t_pow(4 * k)
    }

    /// q^k for integer k.
    pub fn q_int_pow(k: i64) -> Self {
        Scalar::t_pow(8 * k)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Scalar::one()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        Scalar {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .reduced()
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Scalar::one();
        }
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn num(&self) -> &SPoly {
        &self.num
    }

    pub fn den(&self) -> &SPoly {
        &self.den
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = self
            .num
            .mul_poly(&rhs.den)
            .add_poly(&rhs.num.mul_poly(&self.den));
        let den = self.den.mul_poly(&rhs.den);
        Scalar::raw(num, den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        // cross-reduce first to keep intermediate degrees small
        let g1 = self.num.gcd_poly(&rhs.den);
        let g2 = rhs.num.gcd_poly(&self.den);
        let n1 = self.num.div_exact(&g1);
        let d2 = rhs.den.div_exact(&g1);
        let n2 = rhs.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        Scalar::raw(n1.mul_poly(&n2), d1.mul_poly(&d2))
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg_poly(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// [k]_{q^d} = (q^{dk} - q^{-dk}) / (q^d - q^{-d}) for rational d.
pub fn q_int_base(k: i64, d: Frac) -> Scalar {
    if k == 0 {
        return Scalar::zero();
    }
    let kq = Frac::new(k, 1);
    let num = &Scalar::q_pow(d * kq) - &Scalar::q_pow(-d * kq);
    let den = &Scalar::q_pow(d) - &Scalar::q_pow(-d);
    &num / &den
}

/// Classical q-integer [k] = (q^k - q^{-k})/(q - q^{-1}).
pub fn q_int(k: i64) -> Scalar {
    q_int_base(k, Frac::one())
}

/// q-factorial [m]_{q^d}!.
pub fn q_factorial(m: u32, d: Frac) -> Scalar {
    let mut acc = Scalar::one();
    for k in 1..=m as i64 {
        acc = &acc * &q_int_base(k, d);
    }
    acc
}

/// Gaussian binomial [m over r]_{q^d}.
pub fn q_binomial(m: u32, r: u32, d: Frac) -> Scalar {
    assert!(r <= m);
    &q_factorial(m, d) / &(&q_factorial(r, d) * &q_factorial(m - r, d))
}

fn fmt_spoly(p: &SPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, c) in p.terms() {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, "-")?;
        } else {
            write!(f, "+")?;
        }
        let show_coeff = !abs.is_one() || *e == 0;
        if show_coeff {
            write!(f, "{}", abs)?;
        }
        if *e != 0 {
            if show_coeff {
                write!(f, "*")?;
            }
            if e % 4 == 0 {
                let se = e / 4;
                if se == 1 {
                    write!(f, "s")?;
                } else {
                    write!(f, "s^{}", se)?;
                }
            } else {
                write!(f, "s^({}/4)", e)?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Scalar {
    /// Renders as a reduced fraction in s with ascending powers, e.g. `(s^2+1)/s`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den_is_one = self.den.terms() == [(0, BigInt::one())];
        if den_is_one {
            fmt_spoly(&self.num, f)
        } else {
            let num_simple = self.num.terms().len() <= 1;
            let den_simple = self.den.terms().len() <= 1;
            if num_simple {
                fmt_spoly(&self.num, f)?;
            } else {
                write!(f, "(")?;
                fmt_spoly(&self.num, f)?;
                write!(f, ")")?;
            }
            write!(f, "/")?;
            if den_simple {
                fmt_spoly(&self.den, f)?;
            } else {
                write!(f, "(")?;
                fmt_spoly(&self.den, f)?;
                write!(f, ")")?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Scalar {
        Scalar::s_pow(1)
    }

    fn q() -> Scalar {
        Scalar::s_pow(2)
    }

    #[test]
    fn x_over_x_is_one() {
        // (s^2 + 1)/s divided by itself
        let a = &(&q() + &Scalar::one()) / &s();
        assert_eq!(&a / &a, Scalar::one());
    }

    #[test]
    fn s_times_s_is_q() {
        assert_eq!(&s() * &s(), q());
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = &q() - &q().inv();
        let b = &q().inv() - &q();
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn q_int_basics() {
        assert!(q_int(0).is_zero());
        // [2] = q + q^{-1}, expanded by hand from the definition
        let expected = &q() + &q().inv();
        assert_eq!(q_int(2), expected);
        // [2]_s = s + s^{-1}
        let expected_s = &s() + &s().inv();
        assert_eq!(q_int_base(2, Frac::new(1, 2)), expected_s);
    }

    #[test]
    fn q_int_odd_symmetry() {
        for k in -10..=10i64 {
            let lhs = q_int(-k);
            let rhs = -&q_int(k);
            assert_eq!(lhs, rhs, "[-k] = -[k] failed at k={}", k);
        }
    }

    #[test]
    fn q_binomial_factorial_identity() {
        let d = Frac::one();
        for m in 0..=6u32 {
            for r in 0..=m {
                let lhs = &(&q_binomial(m, r, d) * &q_factorial(r, d)) * &q_factorial(m - r, d);
                assert_eq!(lhs, q_factorial(m, d), "m={} r={}", m, r);
            }
        }
    }

    #[test]
    fn display_reduced_fraction() {
        let a = &(&q() + &Scalar::one()) / &s();
        assert_eq!(a.to_string(), "(1+s^2)/s");
        assert_eq!(Scalar::from_int(-3).to_string(), "-3");
    }

    #[test]
    fn division_by_zero_panics() {
        let r = std::panic::catch_unwind(|| Scalar::zero().inv());
        assert!(r.is_err());
    }

    #[test]
    fn fractional_powers_multiply() {
        let a = Scalar::q_pow(Frac::new(1, 8));
        assert_eq!(a.pow(8), q());
        assert_eq!(a.pow(4), s());
    }
}
