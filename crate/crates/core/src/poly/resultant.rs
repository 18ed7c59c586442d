//! Resultants: univariate over ℚ, and eliminating `z` from a pair whose second
//! member has coefficients in `ℚ[σ]`.

use num_traits::{One, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// `Res(f, g)` of two univariate polynomials with respect to their actual degrees.
pub fn resultant(f: &Poly, g: &Poly) -> Rational {
    let (Some(mut n), Some(mut m)) = (f.degree(), g.degree()) else {
        return Rational::zero();
    };
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = Rational::one();
    loop {
        if m == 0 {
            return acc * num_traits::pow(b.coeff(0), n);
        }
        if n == 0 {
            return acc * num_traits::pow(a.coeff(0), m);
        }
        let r = a.rem(&b).expect("b is nonzero");
        let Some(dr) = r.degree() else {
            return Rational::zero();
        };
        // Res(a, b) = (−1)^{nm} lc(b)^{n − deg r} Res(b, r)
        if (n * m) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(b.leading().expect("nonzero").clone(), n - dr);
        a = b;
        b = r;
        n = m;
        m = dr;
    }
}

/// Eliminates `z` from `f(z)` and `g(σ, z) = Σ_k g_k(σ) z^k`.
///
/// `g[k]` is the coefficient of `z^k`, a polynomial in `σ`. The result is the
/// Sylvester resultant with respect to the formal `z`-degree of `g`, i.e.
/// `lc(f)^{deg_z g} ∏_{f(ζ)=0} g(σ, ζ)`, computed by evaluation at integer
/// values of `σ` followed by interpolation.
pub fn resultant_sigma(f: &Poly, g: &[Poly]) -> Result<Poly> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let mut g: Vec<Poly> = g.to_vec();
    while g.last().is_some_and(|c| c.is_zero()) {
        g.pop();
    }
    if g.is_empty() {
        return Err(Error::DegenerateElimination);
    }
    let m = g.len() - 1;
    let ds = g.iter().map(Poly::degree_or_zero).max().unwrap_or(0);
    let bound = n * ds;
    let lc = f.leading().expect("nonzero").clone();
    let xs: Vec<Rational> = (0..=bound as i64).map(rational::int).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|s| {
            let gs = Poly::new(g.iter().map(|c| c.eval(s)).collect());
            match gs.degree() {
                None => Rational::zero(),
                Some(d) => num_traits::pow(lc.clone(), m - d) * resultant(f, &gs),
            }
        })
        .collect();
    let r = interpolate(&xs, &ys);
    if r.is_zero() {
        return Err(Error::DegenerateElimination);
    }
    Ok(r)
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Poly {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut p = Poly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = &(&p * &Poly::linear_root(&xs[i])) + &Poly::constant(dd[i].clone());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn univariate_resultants() {
        // Res(z^2 - 1, z - 2) = (1-2)(-1-2) = 3
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])), int(3));
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-1, 1])), int(0));
        // Res(2z, 3) = 3^1
        assert_eq!(resultant(&p(&[0, 2]), &p(&[3])), int(3));
        // Res(z^2+1, z^2+2): roots ±i, g(±i) = 1 each → 1
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[2, 0, 1])), int(1));
    }

    #[test]
    fn elimination_examples() {
        // f = z^2 − 1, g = σ − z  →  σ^2 − 1
        let r = resultant_sigma(&p(&[-1, 0, 1]), &[p(&[0, 1]), p(&[-1])]).unwrap();
        assert_eq!(r, p(&[-1, 0, 1]));
        // f = z, g = σ(z^2 + 1) − 2z  →  σ
        let r = resultant_sigma(&p(&[0, 1]), &[p(&[0, 1]), p(&[-2]), p(&[0, 1])]).unwrap();
        assert_eq!(r, p(&[0, 1]));
        // f = 2 − 2z^2, g = σ(z^2 + 1) − 2z: roots of the result are ±1
        let r = resultant_sigma(&p(&[2, 0, -2]), &[p(&[0, 1]), p(&[-2]), p(&[0, 1])]).unwrap();
        assert_eq!(r.eval(&int(1)), int(0));
        assert_eq!(r.eval(&int(-1)), int(0));
        assert_eq!(r.degree(), Some(2));
    }

    #[test]
    fn degenerate_elimination_is_reported() {
        assert_eq!(
            resultant_sigma(&p(&[-1, 1]), &[p(&[0, 1]), p(&[0, -1])]),
            Err(Error::DegenerateElimination)
        );
    }
}
