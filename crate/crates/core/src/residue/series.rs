//! Truncated univariate power series.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::Coeff;
use crate::exact::Rat;

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `1/k!` for `k = 0..=order`.
pub fn exp_coefficients(order: usize) -> Vec<Rat> {
    (0..=order).map(|k| Rat::new(BigInt::one(), factorial(k))).collect()
}

/// `e^{-x}` truncated at `order`.
fn exp_neg(order: usize) -> Vec<Rat> {
    exp_coefficients(order)
        .into_iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c } else { -c })
        .collect()
}

/// Multiplicative inverse of a power series with invertible constant term.
pub fn invert<C: Coeff>(s: &[C]) -> Option<Vec<C>> {
    let inv0 = s.first()?.inverse()?;
    let mut out: Vec<C> = Vec::with_capacity(s.len());
    out.push(inv0.clone());
    for k in 1..s.len() {
        let mut acc = C::zero();
        for i in 1..=k {
            acc = acc.add(&s[i].mul(&out[k - i]));
        }
        out.push(acc.mul(&inv0).neg());
    }
    Some(out)
}

/// `x / (1 - e^{-x})` truncated at `order`.
pub fn todd_coefficients(order: usize) -> Vec<Rat> {
    // (1 - e^{-x}) / x = Σ (-1)^k x^k / (k+1)!
    let e = exp_neg(order + 1);
    let s: Vec<Rat> = e[1..].iter().map(|c| -c).collect();
    invert(&s).expect("constant term is 1")
}

/// `1 / (1 - ζ e^{-x})` truncated at `order`, for `ζ ≠ 1`.
pub fn twisted_coefficients<C: Coeff>(zeta: &C, order: usize) -> Option<Vec<C>> {
    let s: Vec<C> = exp_neg(order)
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let t = zeta.scale(&c).neg();
            if k == 0 {
                t.add(&C::one())
            } else {
                t
            }
        })
        .collect();
    invert(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;
    use crate::exact::Cyclotomic;

    #[test]
    fn todd_starts_with_bernoulli_numbers() {
        assert_eq!(todd_coefficients(4), vec![rat(1, 1), rat(1, 2), rat(1, 12), rat(0, 1), rat(-1, 720)]);
    }

    #[test]
    fn minus_one_twist() {
        // 1/(1 + e^{-x}) = 1/2 + x/4 - x^3/48 + ...
        let s = twisted_coefficients(&rat(-1, 1), 3).unwrap();
        assert_eq!(s, vec![rat(1, 2), rat(1, 4), rat(0, 1), rat(-1, 48)]);
        let c = twisted_coefficients(&Cyclotomic::root_of_unity(2, 1), 3).unwrap();
        let c: Vec<Rat> = c.iter().map(|x| x.to_rational().unwrap()).collect();
        assert_eq!(c, s);
    }

    #[test]
    fn twist_by_one_is_singular() {
        assert!(twisted_coefficients(&rat(1, 1), 2).is_none());
    }
}
