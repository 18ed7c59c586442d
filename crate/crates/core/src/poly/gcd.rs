//! Greatest common divisors and square-free decomposition.

use super::{intpoly, Poly};
use crate::error::{Error, Result};

/// Monic gcd of `f` and `g` (primitive pseudo-remainder sequence over ℤ).
pub fn gcd(f: &Poly, g: &Poly) -> Result<Poly> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(Error::GcdOfZeros),
        (true, false) => Ok(g.monic()),
        (false, true) => Ok(f.monic()),
        (false, false) => {
            let h = intpoly::gcd(&f.primitive_int(), &g.primitive_int());
            Ok(Poly::from_int(&h).monic())
        }
    }
}

/// Yun's algorithm: `f = lc(f)·∏ fᵢ^i` with monic, square-free, pairwise coprime `fᵢ`.
///
/// Returns the nonconstant factors with their multiplicities in increasing order.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let f = f.monic();
    let df = f.derivative();
    let a0 = gcd(&f, &df)?;
    let mut b = f.exact_div(&a0)?;
    let mut c = df.exact_div(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d)?;
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// The monic square-free part `∏ fᵢ`.
pub fn squarefree_part(f: &Poly) -> Result<Poly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(Poly::one());
    }
    let g = gcd(f, &f.derivative())?;
    Ok(f.exact_div(&g)?.monic())
}
