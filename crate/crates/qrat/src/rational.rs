//! Reduced rationals `r/s > 1` and their canonical even-length continued
//! fraction expansions.
//!
//! Every construction in the crate (q-rational, snake graph, fence poset,
//! Schubert interval) is driven by the expansion `r/s = [a_1, ..., a_2m]`
//! with all terms positive, so both the domain restriction and the parity
//! normalization live here.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rational number `r/s` with `gcd(r, s) = 1` and `r > s >= 1`.
///
/// Construction normalizes by the gcd eagerly and rejects values outside the
/// supported domain `r/s > 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedRational {
    r: BigUint,
    s: BigUint,
}

impl ReducedRational {
    pub fn new(r: BigUint, s: BigUint) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::Domain("denominator must be positive".into()));
        }
        let g = r.gcd(&s);
        let (r, s) = (&r / &g, &s / &g);
        if r <= s {
            return Err(Error::Domain(format!(
                "{r}/{s} is not in the supported domain r/s > 1"
            )));
        }
        Ok(ReducedRational { r, s })
    }

    pub fn from_u64(r: u64, s: u64) -> Result<Self> {
        Self::new(BigUint::from(r), BigUint::from(s))
    }

    pub fn r(&self) -> &BigUint {
        &self.r
    }

    pub fn s(&self) -> &BigUint {
        &self.s
    }

    /// The unique even-length all-positive continued fraction expansion.
    ///
    /// Runs the Euclidean algorithm, then rewrites a trailing `c >= 2` as
    /// `(c - 1, 1)` when the plain expansion has odd length. Integers `n/1`
    /// come out as `[n-1, 1]`.
    pub fn continued_fraction(&self) -> Result<EvenContinuedFraction> {
        let mut terms: Vec<u64> = Vec::new();
        let (mut a, mut b) = (self.r.clone(), self.s.clone());
        while !b.is_zero() {
            let (q, rem) = a.div_rem(&b);
            let q = q.to_u64().ok_or_else(|| {
                Error::Budget(format!("continued fraction term {q} does not fit in 64 bits"))
            })?;
            terms.push(q);
            a = b;
            b = rem;
        }
        if terms.len() % 2 == 1 {
            let last = terms.pop().expect("nonempty expansion");
            debug_assert!(last >= 2, "odd-length expansion must end in a term >= 2");
            terms.push(last - 1);
            terms.push(1);
        }
        EvenContinuedFraction::new(terms)
    }
}

impl fmt::Display for ReducedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.r, self.s)
    }
}

impl FromStr for ReducedRational {
    type Err = Error;

    /// Parses the CLI syntax "R/S": two base-10 integers separated by a
    /// single slash, no whitespace, no signs, no leading zeros.
    fn from_str(text: &str) -> Result<Self> {
        let (rs, ss) = text
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected R/S, got {text:?}")))?;
        let parse_side = |side: &str| -> Result<BigUint> {
            if side.is_empty() || !side.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!(
                    "expected an unsigned decimal integer, got {side:?}"
                )));
            }
            if side.len() > 1 && side.starts_with('0') {
                return Err(Error::Parse(format!("leading zeros are not allowed: {side:?}")));
            }
            Ok(BigUint::parse_bytes(side.as_bytes(), 10).expect("digits parse"))
        };
        ReducedRational::new(parse_side(rs)?, parse_side(ss)?)
    }
}

/// An even-length sequence of positive integers `[a_1, ..., a_2m]` whose
/// continued fraction value is a rational `> 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvenContinuedFraction {
    terms: Vec<u64>,
}

impl EvenContinuedFraction {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.len() < 2 || terms.len() % 2 != 0 {
            return Err(Error::Domain(format!(
                "continued fraction must have even length >= 2, got {}",
                terms.len()
            )));
        }
        if terms.iter().any(|&t| t == 0) {
            return Err(Error::Domain("continued fraction terms must be >= 1".into()));
        }
        Ok(EvenContinuedFraction { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Evaluates `a_1 + 1/(a_2 + 1/(...))` bottom-up in exact arithmetic.
    pub fn value(&self) -> ReducedRational {
        let mut num = BigUint::one();
        let mut den = BigUint::zero();
        for &t in self.terms.iter().rev() {
            // x -> t + 1/x
            let next = BigUint::from(t) * &num + &den;
            den = num;
            num = next;
        }
        ReducedRational::new(num, den).expect("valid expansion evaluates to r/s > 1")
    }

    /// Grassmannian parameters `(k, n)`: `n` is the sum of all terms and `k`
    /// the sum of the even-indexed ones (`a_2 + a_4 + ...`).
    pub fn grassmannian_params(&self) -> (u64, u64) {
        let n = self.terms.iter().sum();
        let k = self.terms.iter().skip(1).step_by(2).sum();
        (k, n)
    }
}

impl fmt::Display for EvenContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// Iterates all coprime pairs `(r, s)` with `1 <= s < r <= max_r`, ordered by
/// `(r, s)`. This is the standard sweep domain for the whole crate.
pub fn coprime_pairs(max_r: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        for s in 1..r {
            if r.gcd(&s) == 1 {
                out.push((r, s));
            }
        }
    }
    out
}
