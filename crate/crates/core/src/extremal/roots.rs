use num_bigint::BigUint;
use num_prime::nt_funcs::factorize;
use num_traits::{One, Signed, Zero};

use crate::series::{IntPoly, QInt};

fn positive_divisors(n: &BigUint) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n.clone()) {
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs
}

/// Distinct integer roots of `p`, largest first.
///
/// Any integer root divides the lowest nonzero coefficient, so the search
/// runs over its signed divisors. The zero polynomial yields no roots.
pub fn integer_roots(p: &IntPoly) -> Vec<QInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut p = p.clone();
    if p.coeff(0).is_zero() {
        roots.push(QInt::zero());
        while p.coeff(0).is_zero() {
            p = p.deflate(&QInt::zero());
        }
    }
    if !p.is_constant() {
        let c0 = p.coeff(0).abs().to_biguint().expect("non-negative");
        for d in positive_divisors(&c0) {
            let d = QInt::from(d);
            for cand in [d.clone(), -d] {
                if p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort_by(|a, b| b.cmp(a));
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<QInt> {
        v.iter().map(|&c| QInt::from(c)).collect()
    }

    #[test]
    fn quadratic_with_zero_root() {
        assert_eq!(integer_roots(&IntPoly::from_i64s(&[0, -48, -1])), ints(&[0, -48]));
    }

    #[test]
    fn repeated_and_missing_roots() {
        // (x - 3)^2 (x + 5)
        let p = &(&IntPoly::x_plus(-3) * &IntPoly::x_plus(-3)) * &IntPoly::x_plus(5);
        assert_eq!(integer_roots(&p), ints(&[3, -5]));
        assert!(integer_roots(&IntPoly::from_i64s(&[1, 0, 1])).is_empty());
        assert!(integer_roots(&IntPoly::constant(7)).is_empty());
    }

    #[test]
    fn multiple_zero_roots() {
        // x^3 (x - 2)
        let p = IntPoly::from_i64s(&[0, 0, 0, -2, 1]);
        assert_eq!(integer_roots(&p), ints(&[2, 0]));
    }

    #[test]
    fn large_constant() {
        // (x - 196860)(x + 1000003)(x - 7)
        let p = &(&IntPoly::x_plus(-196860) * &IntPoly::x_plus(1000003)) * &IntPoly::x_plus(-7);
        assert_eq!(integer_roots(&p), ints(&[196860, 7, -1000003]));
    }
}
