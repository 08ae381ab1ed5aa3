//! Small exact rationals used for exponents, weights and lattice data.
//!
//! These never grow beyond a few digits (lattice windows are small), so a
//! machine-word ratio is plenty.

pub type Frac = num_rational::Ratio<i64>;

pub fn frac(n: i64, d: i64) -> Frac {
    Frac::new(n, d)
}

pub fn fint(n: i64) -> Frac {
    Frac::from_integer(n)
}
