//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers; there is no
//! floating point anywhere in the crate.

mod group;
mod hnf;
mod matrix;
mod rational;
mod snf;

pub use group::AbelianGroup;
pub use hnf::{hermite_rows, lattice_basis};
pub use matrix::IntMatrix;
pub use rational::{clear_denominators, parse_rat, rat_floor, rat_to_string, solve_rational};
pub use snf::{cokernel, kernel_basis, smith_normal_form, solve_integral, SmithDecomposition};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(x: i64) -> Int {
    Int::from(x)
}

pub fn ivec(xs: &[i64]) -> Vec<Int> {
    xs.iter().map(|&x| Int::from(x)).collect()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Int::zero(), |acc, (x, y)| acc + x * y)
}

pub fn add(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(k: &Int, a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| k * x).collect()
}

pub fn neg(a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Int]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn gcd_vec(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// `v` divided by the gcd of its entries; sign preserved.
pub fn primitive(v: &[Int]) -> Result<Vec<Int>> {
    let g = gcd_vec(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

pub fn is_primitive(v: &[Int]) -> bool {
    gcd_vec(v) == Int::from(1)
}

/// Reduces `x` into `[0, n)`.
pub fn modulo(x: &Int, n: &Int) -> Int {
    let r = x.mod_floor(n);
    debug_assert!(!r.is_negative());
    r
}
