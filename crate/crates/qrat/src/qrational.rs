//! q-deformed rational numbers `[r/s]_q = R(q)/S(q)`.
//!
//! Two independent computations are provided. The first evaluates the
//! alternating continued-fraction tower
//!
//! ```text
//! [a1]_q + q^a1 / ( [a2]_{q^-1} + q^-a2 / ( [a3]_q + ... / [a2m]_{q^-1} ) )
//! ```
//!
//! bottom-up in exact Laurent-fraction arithmetic. The second applies the
//! q-deformed modular group generators, acting by `A_q . x = 1 + q x` and
//! `B_q . x = q x / (1 + q x)`, along the word `A^a1 B^a2 ... A^a(2m-1)
//! B^(a2m - 1)` with the rightmost factor first. Agreement of the two routes
//! on every input is one of the crate's standing invariants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::LaurentFraction;
use crate::poly::{q_integer, IntPolynomial};
use crate::rational::{EvenContinuedFraction, ReducedRational};

/// A normalized pair `R(q)/S(q)` attached to its source rational.
///
/// Invariants: `R` and `S` are coprime with positive leading coefficients,
/// and `R(0) = S(0) = 1`. Construction checks the constant terms and aborts
/// loudly on violation, since that would mean a convention error rather than
/// bad input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QRationalValue {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
    source: ReducedRational,
}

impl QRationalValue {
    /// Evaluates the continued-fraction tower.
    pub fn from_cf(cf: &EvenContinuedFraction) -> Self {
        let terms = cf.terms();
        let last = terms.len() - 1;
        // Innermost level is [a_2m]_{q^-1}; walk back up to a_1.
        let mut acc = LaurentFraction::q_inverse_integer(terms[last]);
        for (i, &a) in terms.iter().enumerate().take(last).rev() {
            let a_i64 = i64::try_from(a).expect("term fits i64");
            acc = if i % 2 == 0 {
                // odd level in 1-indexed terms: [a]_q + q^a / acc
                LaurentFraction::from_poly(q_integer(a)).add(&acc.recip().mul_q_power(a_i64))
            } else {
                // even level: [a]_{q^-1} + q^-a / acc
                LaurentFraction::q_inverse_integer(a).add(&acc.recip().mul_q_power(-a_i64))
            };
        }
        Self::from_pair(acc.into_reduced_pair(), cf.value())
    }

    /// Applies the generator maps of `generator_word` to the start value 1.
    pub fn via_matrices(cf: &EvenContinuedFraction) -> Self {
        let mut num = IntPolynomial::one();
        let mut den = IntPolynomial::one();
        for &(gen, count) in generator_word(cf).iter().rev() {
            for _ in 0..count {
                match gen {
                    Generator::A => {
                        // x -> 1 + q x
                        num = &den + &num.mul_q_power(1);
                    }
                    Generator::B => {
                        // x -> q x / (1 + q x)
                        let qnum = num.mul_q_power(1);
                        den = &den + &qnum;
                        num = qnum;
                    }
                }
            }
        }
        Self::from_pair(
            LaurentFraction::new(num, den, 0).into_reduced_pair(),
            cf.value(),
        )
    }

    fn from_pair((numerator, denominator): (IntPolynomial, IntPolynomial), source: ReducedRational) -> Self {
        assert!(
            numerator.coeff(0).is_one() && denominator.coeff(0).is_one(),
            "internal consistency failure: q-rational for {source} has constant terms \
             R(0) = {}, S(0) = {} (expected 1, 1)",
            numerator.coeff(0),
            denominator.coeff(0),
        );
        QRationalValue {
            numerator,
            denominator,
            source,
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn source(&self) -> &ReducedRational {
        &self.source
    }

    /// Checks that `R(1)/S(1)` recovers the source rational and returns it.
    pub fn classical_check(&self) -> Result<ReducedRational> {
        let one = BigInt::one();
        let r1 = self.numerator.eval(&one);
        let s1 = self.denominator.eval(&one);
        let recovered = r1
            .to_biguint()
            .zip(s1.to_biguint())
            .ok_or_else(|| {
                Error::Internal(format!(
                    "q-rational for {} evaluates to nonpositive values at q=1",
                    self.source
                ))
            })
            .and_then(|(r, s)| {
                ReducedRational::new(r, s).map_err(|e| {
                    Error::Internal(format!("q=1 specialization is out of domain: {e}"))
                })
            })?;
        if recovered != self.source {
            return Err(Error::Internal(format!(
                "q=1 specialization gives {recovered}, expected {}",
                self.source
            )));
        }
        Ok(recovered)
    }
}

impl fmt::Display for QRationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// The two generators of the modular group used in the matrix route.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    A,
    B,
}

/// The word `A^a1 B^a2 A^a3 ... A^a(2m-1) B^(a2m - 1)` as (generator, power)
/// pairs; a trailing zero power is dropped. The rightmost factor acts first.
pub fn generator_word(cf: &EvenContinuedFraction) -> Vec<(Generator, u64)> {
    let terms = cf.terms();
    let mut word = Vec::with_capacity(terms.len());
    for (i, &a) in terms.iter().enumerate() {
        let gen = if i % 2 == 0 { Generator::A } else { Generator::B };
        let power = if i == terms.len() - 1 { a - 1 } else { a };
        if power > 0 {
            word.push((gen, power));
        }
    }
    word
}

/// Renders a generator word like `A^2B^2` (unit powers printed bare).
pub fn format_generator_word(word: &[(Generator, u64)]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    for &(gen, power) in word {
        out.push(match gen {
            Generator::A => 'A',
            Generator::B => 'B',
        });
        if power > 1 {
            out.push('^');
            out.push_str(&power.to_string());
        }
    }
    out
}

/// A 2x2 matrix over `Z[q]`, compared modulo scaling by a monomial `q^±n`.
///
/// This is the element-of-`PSL2^q(Z)` view of the generator words; the value
/// computation itself goes through the Moebius maps above, but the matrix
/// form is kept for testing the commutation of the q-deformation with the
/// group action.
#[derive(Clone, Debug)]
pub struct QMatrix {
    entries: [[IntPolynomial; 2]; 2],
}

impl QMatrix {
    pub fn identity() -> Self {
        QMatrix {
            entries: [
                [IntPolynomial::one(), IntPolynomial::zero()],
                [IntPolynomial::zero(), IntPolynomial::one()],
            ],
        }
    }

    /// `A_q = [[q, 1], [0, 1]]`.
    pub fn a_q() -> Self {
        QMatrix {
            entries: [
                [IntPolynomial::monomial(BigInt::one(), 1), IntPolynomial::one()],
                [IntPolynomial::zero(), IntPolynomial::one()],
            ],
        }
    }

    /// `B_q = [[q, 0], [q, 1]]`.
    pub fn b_q() -> Self {
        QMatrix {
            entries: [
                [IntPolynomial::monomial(BigInt::one(), 1), IntPolynomial::zero()],
                [IntPolynomial::monomial(BigInt::one(), 1), IntPolynomial::one()],
            ],
        }
    }

    /// Matrix product of a generator word (leftmost factor first).
    pub fn from_word(word: &[(Generator, u64)]) -> Self {
        let mut acc = QMatrix::identity();
        for &(gen, power) in word {
            let m = match gen {
                Generator::A => QMatrix::a_q(),
                Generator::B => QMatrix::b_q(),
            };
            for _ in 0..power {
                acc = acc.mul(&m);
            }
        }
        acc
    }

    pub fn entry(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i][j]
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        let mut entries: [[IntPolynomial; 2]; 2] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = &(&self.entries[i][0] * &rhs.entries[0][j])
                    + &(&self.entries[i][1] * &rhs.entries[1][j]);
            }
        }
        QMatrix { entries }
    }

    pub fn det(&self) -> IntPolynomial {
        &(&self.entries[0][0] * &self.entries[1][1]) - &(&self.entries[0][1] * &self.entries[1][0])
    }

    /// Moebius action `[[a,b],[c,d]] . (num/den) = (a num + b den)/(c num + d den)`.
    pub fn apply(&self, num: &IntPolynomial, den: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        (
            &(&self.entries[0][0] * num) + &(&self.entries[0][1] * den),
            &(&self.entries[1][0] * num) + &(&self.entries[1][1] * den),
        )
    }

    fn min_valuation(&self) -> Option<usize> {
        self.entries
            .iter()
            .flatten()
            .filter_map(|p| p.valuation())
            .min()
    }
}

impl PartialEq for QMatrix {
    /// Equality modulo scaling by `q^±n`: strip each matrix's common `q`
    /// valuation and compare entrywise.
    fn eq(&self, other: &Self) -> bool {
        match (self.min_valuation(), other.min_valuation()) {
            (None, None) => true,
            (Some(va), Some(vb)) => (0..2).all(|i| {
                (0..2).all(|j| {
                    self.entries[i][j].div_q_power(va) == other.entries[i][j].div_q_power(vb)
                })
            }),
            _ => false,
        }
    }
}

impl Eq for QMatrix {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::coprime_pairs;

    fn cf(r: u64, s: u64) -> EvenContinuedFraction {
        ReducedRational::from_u64(r, s)
            .unwrap()
            .continued_fraction()
            .unwrap()
    }

    fn poly(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(coeffs)
    }

    #[test]
    fn tower_reproduces_published_examples() {
        let v = QRationalValue::from_cf(&cf(7, 3));
        assert_eq!(v.numerator(), &poly(&[1, 2, 2, 1, 1]));
        assert_eq!(v.denominator(), &poly(&[1, 1, 1]));

        let v = QRationalValue::from_cf(&cf(5, 2));
        assert_eq!(v.numerator(), &poly(&[1, 2, 1, 1]));
        assert_eq!(v.denominator(), &poly(&[1, 1]));

        let v = QRationalValue::from_cf(&cf(10, 7));
        assert_eq!(v.numerator(), &poly(&[1, 1, 2, 3, 2, 1]));
        assert_eq!(v.denominator(), &poly(&[1, 1, 2, 2, 1]));
    }

    #[test]
    fn integers_collapse_to_q_integers() {
        for n in 2..=10u64 {
            let v = QRationalValue::from_cf(&cf(n, 1));
            assert_eq!(v.numerator(), &q_integer(n), "numerator of [{n}]_q");
            assert_eq!(v.denominator(), &IntPolynomial::one());
            let w = QRationalValue::via_matrices(&cf(n, 1));
            assert_eq!(w.numerator(), &q_integer(n));
        }
    }

    #[test]
    fn generator_word_examples() {
        assert_eq!(format_generator_word(&generator_word(&cf(7, 3))), "A^2B^2");
        assert_eq!(format_generator_word(&generator_word(&cf(13, 8))), "ABABA");
        assert_eq!(format_generator_word(&generator_word(&cf(4, 1))), "A^3");
    }

    #[test]
    fn generator_word_recovers_the_classical_value() {
        // Sanity for the adopted word rule: the classical action of the word
        // on 1 must reproduce r/s.
        for (r, s) in coprime_pairs(60) {
            let word = generator_word(&cf(r, s));
            let (mut num, mut den) = (1i128, 1i128);
            for &(gen, count) in word.iter().rev() {
                for _ in 0..count {
                    match gen {
                        Generator::A => num += den,     // x -> x + 1
                        Generator::B => den += num,     // x -> x/(x+1)
                    }
                }
            }
            assert_eq!((num as u64, den as u64), (r, s), "word for {r}/{s}");
        }
    }

    #[test]
    fn matrix_route_matches_paper_chain() {
        let v = QRationalValue::via_matrices(&cf(7, 3));
        assert_eq!(v.numerator(), &poly(&[1, 2, 2, 1, 1]));
        assert_eq!(v.denominator(), &poly(&[1, 1, 1]));
    }

    #[test]
    fn cross_method_agreement_sweep() {
        for (r, s) in coprime_pairs(60) {
            let cf = cf(r, s);
            assert_eq!(
                QRationalValue::from_cf(&cf),
                QRationalValue::via_matrices(&cf),
                "method mismatch at {r}/{s}"
            );
        }
    }

    #[test]
    fn classical_check_examples() {
        for (r, s) in [(7, 3), (10, 7), (9, 1)] {
            let v = QRationalValue::from_cf(&cf(r, s));
            assert_eq!(
                v.classical_check().unwrap(),
                ReducedRational::from_u64(r, s).unwrap()
            );
        }
    }

    #[test]
    fn qmatrix_action_commutes_with_deformation() {
        // [M . x]_q = [M]_q . [x]_q with x = 1: the matrix product applied to
        // the q-deformation of 1 must equal the q-rational of the word value.
        for (r, s) in coprime_pairs(25) {
            let cf = cf(r, s);
            let m = QMatrix::from_word(&generator_word(&cf));
            let (num, den) = m.apply(&IntPolynomial::one(), &IntPolynomial::one());
            let via_matrix = LaurentFraction::new(num, den, 0).into_reduced_pair();
            let expected = QRationalValue::from_cf(&cf);
            assert_eq!(&via_matrix.0, expected.numerator(), "at {r}/{s}");
            assert_eq!(&via_matrix.1, expected.denominator(), "at {r}/{s}");
        }
    }

    #[test]
    fn qmatrix_equality_is_modulo_monomial_scaling() {
        let m = QMatrix::from_word(&generator_word(&cf(7, 3)));
        let q = IntPolynomial::monomial(BigInt::one(), 1);
        let scaled = QMatrix {
            entries: [
                [&m.entries[0][0] * &q, &m.entries[0][1] * &q],
                [&m.entries[1][0] * &q, &m.entries[1][1] * &q],
            ],
        };
        assert_eq!(m, scaled);
        assert_ne!(m, QMatrix::a_q());
    }

    #[test]
    fn qmatrix_determinant_is_a_monomial() {
        for (r, s) in coprime_pairs(20) {
            let word = generator_word(&cf(r, s));
            let letters: u64 = word.iter().map(|&(_, p)| p).sum();
            let det = QMatrix::from_word(&word).det();
            assert_eq!(
                det,
                IntPolynomial::monomial(BigInt::one(), letters as usize),
                "det at {r}/{s}"
            );
        }
    }
}
