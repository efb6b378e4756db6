//! Dense integer-coefficient polynomials in the formal variable `q`, and the
//! classical q-analogues built from them.
//!
//! Everything downstream (q-rationals, rank generating functions, point
//! counts) lives in this ring, so coefficients are arbitrary-precision
//! integers and all operations are exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial in `Z[q]`, stored densely by ascending degree.
///
/// Canonical form: the coefficient vector never ends in a zero, and the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.strip();
        p
    }

    /// Convenience constructor from machine integers (used heavily in tests).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * q^deg`.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPolynomial { coeffs }
    }

    fn strip(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (canonical form).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Index of the lowest nonzero coefficient, or `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `q^k`.
    pub fn mul_q_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// Divides by `q^k`; panics if the valuation is smaller than `k`.
    pub fn div_q_power(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        assert!(
            self.valuation().is_none_or(|v| v >= k),
            "division by q^{k} is not exact"
        );
        if self.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Greatest common divisor of the coefficients (nonnegative; 0 for the
    /// zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        if c.is_one() {
            return self.clone();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Exact polynomial quotient. Returns `None` if the division leaves a
    /// remainder (or a non-integral quotient step).
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.degree().unwrap();
        let dn = self.degree().unwrap();
        if dn < dd {
            return None;
        }
        let lead = d.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for i in (dd..=dn).rev() {
            let top = std::mem::take(&mut rem[i]);
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate().take(dd) {
                let idx = i - dd + j;
                let delta = dc * &c;
                rem[idx] -= delta;
            }
            quot[i - dd] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Primitive gcd with positive leading coefficient, generating the same
    /// ideal over the rationals. Inputs must not both be zero.
    pub fn gcd(&self, other: &IntPolynomial) -> Self {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        if self.is_zero() {
            return other.primitive_part().positive_leading();
        }
        if other.is_zero() {
            return self.primitive_part().positive_leading();
        }
        let a = self.primitive_part();
        let b = other.primitive_part();

        // Fast coprimality certificate: if gcd(a, b) mod p is constant for a
        // prime p not dividing the relevant leading coefficient, the gcd over
        // Q is constant too.
        for p in [3u64, 5, 7, 11, 13, 17] {
            let pb = BigInt::from(p);
            let (x, y) = if !(&a.leading_coeff() % &pb).is_zero() {
                (&a, &b)
            } else if !(&b.leading_coeff() % &pb).is_zero() {
                (&b, &a)
            } else {
                continue;
            };
            if gcd_degree_mod_p(x, y, p) == 0 {
                return Self::one();
            }
        }

        // Primitive polynomial remainder sequence.
        let (mut f, mut g) = if a.degree() >= b.degree() {
            (a, b)
        } else {
            (b, a)
        };
        while !g.is_zero() {
            let r = pseudo_rem(&f, &g).primitive_part();
            f = g;
            g = r;
        }
        f.primitive_part().positive_leading()
    }

    fn positive_leading(&self) -> Self {
        if self.leading_coeff().is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

/// Pseudo-remainder of `a` by `b` (standard multiply-through-by-`lc(b)` form).
fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("pseudo_rem by zero");
    let lc_b = b.leading_coeff();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lc_r = r.leading_coeff();
        r = &r.mul_scalar(&lc_b) - &b.mul_scalar(&lc_r).mul_q_power(dr - db);
    }
    r
}

/// Degree of gcd(a mod p, b mod p) over F_p.
fn gcd_degree_mod_p(a: &IntPolynomial, b: &IntPolynomial, p: u64) -> usize {
    let reduce = |poly: &IntPolynomial| -> Vec<u64> {
        let pb = BigInt::from(p);
        let mut v: Vec<u64> = poly
            .coeffs
            .iter()
            .map(|c| {
                let m = c.mod_floor(&pb);
                u64::try_from(m).expect("residue fits u64")
            })
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    let mut f = reduce(a);
    let mut g = reduce(b);
    while !g.is_empty() {
        let r = rem_mod_p(&f, &g, p);
        f = g;
        g = r;
    }
    f.len().saturating_sub(1)
}

fn rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv_lc = pow_mod(b[db], p - 2, p);
    let mut r = a.to_vec();
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let factor = r[dr] * inv_lc % p;
        if factor != 0 {
            for (j, &bc) in b.iter().enumerate() {
                let idx = dr - db + j;
                r[idx] = (r[idx] + p - factor * bc % p) % p;
            }
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(i) {
                c += d;
            }
            coeffs.push(c);
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs =
            vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial { coeffs }
    }
}

impl fmt::Display for IntPolynomial {
    /// Terms in ascending degree, e.g. `1 + 2*q + q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`. Panics for `n = 0`.
pub fn q_integer(n: u64) -> IntPolynomial {
    assert!(n >= 1, "q_integer requires n >= 1");
    IntPolynomial {
        coeffs: vec![BigInt::one(); usize::try_from(n).expect("n fits usize")],
    }
}

/// `[n]_q! = [n]_q [n-1]_q ... [1]_q` (empty product for `n = 0`).
pub fn q_factorial(n: u64) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for i in 1..=n {
        acc = &acc * &q_integer(i);
    }
    acc
}

/// Gaussian binomial `[n choose k]_q = [n]_q! / ([k]_q! [n-k]_q!)`.
///
/// Panics if `k > n`; the quotient is computed by exact division and any
/// remainder aborts loudly (it would mean broken arithmetic, not bad input).
pub fn q_binomial(n: u64, k: u64) -> IntPolynomial {
    assert!(k <= n, "q_binomial requires k <= n (got k={k}, n={n})");
    let num = q_factorial(n);
    let den = &q_factorial(k) * &q_factorial(n - k);
    num.div_exact(&den)
        .expect("internal consistency failure: q-factorial quotient not exact")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(coeffs)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[0, 1]), p(&[1, 2]));
        let t = p(&[3, 0, 2]);
        assert_eq!(&t + &IntPolynomial::zero(), t);
        assert_eq!(&p(&[1, 1, 1]) + &p(&[1, 1]), p(&[2, 2, 1]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 0, 1]), p(&[1, 1, 1, 1]));
        let t = p(&[5, -1, 2]);
        assert_eq!(&t * &IntPolynomial::one(), t);
        // [2]_q * [3]_q
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1, 1]), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[1, 1]).gcd(&p(&[1, 1])), p(&[1, 1]));
        // gcd(q^2 - 1, q - 1) = q - 1 (positive leading coefficient)
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[4, 7, 3]).gcd(&IntPolynomial::one()), IntPolynomial::one());
        assert_eq!(IntPolynomial::zero().gcd(&p(&[0, -2])), p(&[0, 1]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 1, 1]).eval(&BigInt::from(1)), BigInt::from(3));
        // numerator of [7/3]_q at q = 2
        assert_eq!(p(&[1, 2, 2, 1, 1]).eval(&BigInt::from(2)), BigInt::from(37));
        assert_eq!(IntPolynomial::zero().eval(&BigInt::from(99)), BigInt::zero());
    }

    #[test]
    fn div_exact_detects_remainders() {
        assert_eq!(p(&[1, 2, 1]).div_exact(&p(&[1, 1])), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 1, 1]).div_exact(&p(&[1, 1])), None);
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(3), p(&[1, 1, 1]));
        assert_eq!(q_integer(1), IntPolynomial::one());
        assert_eq!(q_integer(5), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    #[should_panic(expected = "n >= 1")]
    fn q_integer_rejects_zero() {
        q_integer(0);
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), IntPolynomial::one());
        assert_eq!(q_factorial(2), p(&[1, 1]));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(7, 0), IntPolynomial::one());
        for n in 1..=9 {
            assert_eq!(q_binomial(n, 1), q_integer(n));
        }
    }

    #[test]
    #[should_panic(expected = "k <= n")]
    fn q_binomial_rejects_k_above_n() {
        q_binomial(3, 4);
    }

    #[test]
    fn q_binomial_symmetry_and_classical_limit() {
        // Pascal-recursion oracle for the classical binomial coefficients.
        let mut pascal = vec![vec![BigInt::one()]];
        for n in 1..=12usize {
            let prev = &pascal[n - 1];
            let mut row = vec![BigInt::one()];
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            pascal.push(row);
        }
        let one = BigInt::from(1);
        for n in 0..=12u64 {
            for k in 0..=n {
                let b = q_binomial(n, k);
                assert_eq!(b, q_binomial(n, n - k), "symmetry at ({n},{k})");
                assert_eq!(
                    b.eval(&one),
                    pascal[n as usize][k as usize],
                    "classical limit at ({n},{k})"
                );
            }
        }
    }

    /// Independent box-partition oracle: sum of q^|lambda| over partitions
    /// inside a k x (n-k) rectangle, by direct recursive enumeration.
    fn box_partition_gen_fn(height: usize, width: usize) -> IntPolynomial {
        fn go(rows_left: usize, max_part: usize, size: usize, acc: &mut Vec<BigInt>) {
            acc[size] += 1;
            if rows_left == 0 {
                return;
            }
            for part in 1..=max_part {
                go(rows_left - 1, part, size + part, acc);
            }
        }
        let mut acc = vec![BigInt::zero(); height * width + 1];
        go(height, width, 0, &mut acc);
        IntPolynomial::from_coeffs(acc)
    }

    #[test]
    fn q_binomial_counts_partitions_in_a_box() {
        for n in 0..=10u64 {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n, k),
                    box_partition_gen_fn(k as usize, (n - k) as usize),
                    "box identity at ({n},{k})"
                );
            }
        }
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        proptest::collection::vec(-6i64..=6, 0..6).prop_map(|v| IntPolynomial::from_ints(&v))
    }

    proptest! {
        #[test]
        fn mul_commutes(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn mul_associates(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn gcd_divides_common_factor(a in small_poly(), b in small_poly(), g in small_poly()) {
            prop_assume!(!g.is_zero());
            prop_assume!(!a.is_zero() || !b.is_zero());
            let d = (&a * &g).gcd(&(&b * &g));
            prop_assert!(d.div_exact(&g.primitive_part().positive_leading()).is_some());
        }

        #[test]
        fn eval_is_ring_homomorphism(a in small_poly(), b in small_poly(), x in -9i64..=9) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
