//! Rational functions with a global monomial shift, `q^shift * num / den`.
//!
//! The continued-fraction tower for q-rationals mixes `[a]_{q^-1}` and
//! `q^{-a}` factors into otherwise ordinary polynomial fractions. Rather than
//! storing negative-degree coefficients, a single signed exponent carries the
//! whole Laurent part.

use num_traits::One;

use crate::poly::IntPolynomial;

#[derive(Clone, Debug)]
pub struct LaurentFraction {
    num: IntPolynomial,
    den: IntPolynomial,
    shift: i64,
}

impl LaurentFraction {
    pub fn new(num: IntPolynomial, den: IntPolynomial, shift: i64) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        LaurentFraction { num, den, shift }
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one(), 0)
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    /// `[a]_{q^-1} = 1 + q^-1 + ... + q^-(a-1) = q^-(a-1) [a]_q`.
    pub fn q_inverse_integer(a: u64) -> Self {
        assert!(a >= 1, "q_inverse_integer requires a >= 1");
        Self::new(
            crate::poly::q_integer(a),
            IntPolynomial::one(),
            -(i64::try_from(a).expect("term fits i64") - 1),
        )
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.num.is_zero(), "reciprocal of zero");
        LaurentFraction {
            num: self.den.clone(),
            den: self.num.clone(),
            shift: -self.shift,
        }
    }

    /// Multiplies by `q^k` (k may be negative).
    pub fn mul_q_power(&self, k: i64) -> Self {
        LaurentFraction {
            num: self.num.clone(),
            den: self.den.clone(),
            shift: self.shift + k,
        }
    }

    pub fn add(&self, other: &LaurentFraction) -> Self {
        let shift = self.shift.min(other.shift);
        let a = self
            .num
            .mul_q_power(usize::try_from(self.shift - shift).expect("shift gap"));
        let b = other
            .num
            .mul_q_power(usize::try_from(other.shift - shift).expect("shift gap"));
        LaurentFraction {
            num: &(&a * &other.den) + &(&b * &self.den),
            den: &self.den * &other.den,
            shift,
        }
    }

    /// Collapses the shift and reduces to a coprime pair of ordinary
    /// polynomials with positive leading coefficients and no common `q` power.
    pub fn into_reduced_pair(self) -> (IntPolynomial, IntPolynomial) {
        let (mut num, mut den) = if self.shift >= 0 {
            (
                self.num.mul_q_power(usize::try_from(self.shift).unwrap()),
                self.den,
            )
        } else {
            (
                self.num,
                self.den.mul_q_power(usize::try_from(-self.shift).unwrap()),
            )
        };
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return (IntPolynomial::zero(), IntPolynomial::one());
        }
        let v = num
            .valuation()
            .unwrap()
            .min(den.valuation().unwrap());
        num = num.div_q_power(v);
        den = den.div_q_power(v);

        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num
                .div_exact(&IntPolynomial::monomial(c.clone(), 0))
                .expect("content divides");
            den = den
                .div_exact(&IntPolynomial::monomial(c, 0))
                .expect("content divides");
        }

        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        if num_traits::Signed::is_negative(&den.leading_coeff()) {
            num = -&num;
            den = -&den;
        }
        (num, den)
    }
}

impl PartialEq for LaurentFraction {
    /// Equality of values: cross-multiplied products must agree after shift
    /// alignment, so the (num, den, shift) representation itself is free to
    /// absorb monomial factors.
    fn eq(&self, other: &Self) -> bool {
        let a = &self.num * &other.den;
        let b = &other.num * &self.den;
        if a.is_zero() || b.is_zero() {
            return a.is_zero() && b.is_zero();
        }
        let va = self.shift + i64::try_from(a.valuation().unwrap()).unwrap();
        let vb = other.shift + i64::try_from(b.valuation().unwrap()).unwrap();
        va == vb && a.div_q_power(a.valuation().unwrap()) == b.div_q_power(b.valuation().unwrap())
    }
}

impl Eq for LaurentFraction {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q_integer;

    #[test]
    fn q_inverse_integer_is_shifted_q_integer() {
        // [3]_{q^-1} = q^-2 [3]_q
        let f = LaurentFraction::q_inverse_integer(3);
        assert_eq!(f.num(), &q_integer(3));
        assert_eq!(f.shift(), -2);
        assert_eq!(LaurentFraction::q_inverse_integer(1), LaurentFraction::one());
    }

    #[test]
    fn representation_is_equal_modulo_monomial_absorption() {
        let a = LaurentFraction::new(q_integer(2).mul_q_power(1), IntPolynomial::one(), -1);
        let b = LaurentFraction::new(q_integer(2), IntPolynomial::one(), 0);
        assert_eq!(a, b);
        let c = b.mul_q_power(2);
        assert_ne!(a, c);
    }

    #[test]
    fn reduced_pair_strips_shift_and_gcd() {
        // q^2 * [2]_q [3]_q / (q [3]_q)  ==>  q [2]_q / 1
        let f = LaurentFraction::new(
            &q_integer(2) * &q_integer(3),
            q_integer(3).mul_q_power(1),
            2,
        );
        let (num, den) = f.into_reduced_pair();
        assert_eq!(num, q_integer(2).mul_q_power(1));
        assert_eq!(den, IntPolynomial::one());
    }

    #[test]
    fn tower_step_matches_hand_computation() {
        // [2]_q + q^2 / [3]_{q^-1} = (1 + 2q + 2q^2 + q^3 + q^4) / (1 + q + q^2)
        let tail = LaurentFraction::q_inverse_integer(3);
        let total = LaurentFraction::from_poly(q_integer(2)).add(&tail.recip().mul_q_power(2));
        let (num, den) = total.into_reduced_pair();
        assert_eq!(num, IntPolynomial::from_ints(&[1, 2, 2, 1, 1]));
        assert_eq!(den, IntPolynomial::from_ints(&[1, 1, 1]));
    }
}
