//! Exact arithmetic in the integers localized away from a finite set of
//! primes: elements are reduced fractions whose denominators are coprime to
//! every prime in the set.

use crate::error::{Error, Result};
use crate::ring::RingElement;

#[derive(Clone, Debug)]
pub(crate) struct SemilocalCore {
    /// Sorted, distinct primes.
    pub primes: Vec<u64>,
}

pub(crate) fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

/// Reduced fraction with positive denominator.
pub(crate) fn reduce(num: i128, den: i128) -> Result<(i64, i64)> {
    if den == 0 {
        return Err(Error::Encoding("zero denominator".into()));
    }
    let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
    let g = {
        let (mut a, mut b) = (num.unsigned_abs(), den.unsigned_abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a as i128
    };
    if g > 1 {
        num /= g;
        den /= g;
    }
    let num = i64::try_from(num).map_err(|_| Error::Encoding("fraction overflow".into()))?;
    let den = i64::try_from(den).map_err(|_| Error::Encoding("fraction overflow".into()))?;
    Ok((num, den))
}

impl SemilocalCore {
    pub fn new(mut primes: Vec<u64>) -> SemilocalCore {
        primes.sort_unstable();
        primes.dedup();
        SemilocalCore { primes }
    }

    pub fn check(&self, e: &RingElement) -> Result<(i64, i64)> {
        match e {
            RingElement::Frac { num, den } => {
                if *den <= 0 {
                    return Err(Error::Encoding(format!(
                        "denominator must be positive in {e}"
                    )));
                }
                if gcd_i64(*num, *den) != 1 && *num != 0 {
                    return Err(Error::Encoding(format!("fraction {e} is not reduced")));
                }
                if *num == 0 && *den != 1 {
                    return Err(Error::Encoding("zero must be encoded as 0/1".into()));
                }
                for p in &self.primes {
                    if den.unsigned_abs() % p == 0 {
                        return Err(Error::Encoding(format!(
                            "denominator of {e} is divisible by the localized prime {p}"
                        )));
                    }
                }
                Ok((*num, *den))
            }
            RingElement::Int(i) => {
                let num = i64::try_from(*i)
                    .map_err(|_| Error::Encoding(format!("integer {i} too large")))?;
                Ok((num, 1))
            }
            other => Err(Error::Encoding(format!(
                "expected a fraction, got {other}"
            ))),
        }
    }

    pub fn elem(num: i64, den: i64) -> RingElement {
        RingElement::Frac { num, den }
    }

    pub fn add(&self, a: (i64, i64), b: (i64, i64)) -> Result<RingElement> {
        let (n, d) = reduce(
            a.0 as i128 * b.1 as i128 + b.0 as i128 * a.1 as i128,
            a.1 as i128 * b.1 as i128,
        )?;
        Ok(Self::elem(n, d))
    }

    pub fn mul(&self, a: (i64, i64), b: (i64, i64)) -> Result<RingElement> {
        let (n, d) = reduce(a.0 as i128 * b.0 as i128, a.1 as i128 * b.1 as i128)?;
        Ok(Self::elem(n, d))
    }

    pub fn neg(&self, a: (i64, i64)) -> RingElement {
        Self::elem(-a.0, a.1)
    }

    /// Units are the fractions whose numerator is coprime to every localized
    /// prime.
    pub fn is_unit(&self, a: (i64, i64)) -> Option<RingElement> {
        if a.0 == 0 {
            return None;
        }
        for p in &self.primes {
            if a.0.unsigned_abs() % p == 0 {
                return None;
            }
        }
        let (num, den) = if a.0 < 0 { (-a.1, -a.0) } else { (a.1, a.0) };
        Some(Self::elem(num, den))
    }

    /// Product of `p^{v_p(num)}` over the localized primes; the principal
    /// ideal generated by the fraction is generated by this integer.
    pub fn p_part(&self, num: i64) -> u64 {
        if num == 0 {
            return 0;
        }
        let mut n = num.unsigned_abs();
        let mut out = 1u64;
        for p in &self.primes {
            while n % p == 0 {
                out *= p;
                n /= p;
            }
        }
        out
    }
}
