//! Closed-form counts for the equality class, the equality/strict split,
//! and the number `a_n` of permutations avoiding 2413, 2431, 3142, 4132.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{violation, Error, Result};
use crate::par::map_ordered;
use crate::perm::Permutation;
use crate::tableau::hook_length_count;

/// `|SRT(w)| = C(ℓ(w); |λ_1|, …, |λ_k|) · ∏ f^{λ_i}` where `λ_i` is the
/// Lehmer code of the `i`-th indecomposable block of `w`.
pub fn srt_count_formula(w: &Permutation) -> Result<BigUint> {
    if let Some((pattern, positions)) = w.first_forbidden_pattern() {
        return Err(Error::NotApplicable(format!(
            "contains {} at positions {}",
            pattern.iter().map(|d| d.to_string()).collect::<String>(),
            positions
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )));
    }
    let mut sizes = Vec::new();
    let mut product = BigUint::one();
    for block in w.direct_sum_decompose() {
        let lambda = block.lehmer_code().as_partition().ok_or_else(|| {
            violation(format!("block {block} of {w} has a code that is not a partition"))
        })?;
        sizes.push(lambda.size());
        product *= hook_length_count(&lambda);
    }
    Ok(multinomial(&sizes) * product)
}

/// `(Σ k_i)! / ∏ k_i!`; zero blocks contribute nothing.
pub fn multinomial(blocks: &[usize]) -> BigUint {
    let mut result = BigUint::one();
    let mut total = 0usize;
    for &k in blocks {
        // multiply by C(total + k, k)
        for j in 1..=k {
            result *= BigUint::from(total + j);
            result /= BigUint::from(j);
        }
        total += k;
    }
    result
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    /// `|SRT(w)| = |BRT(w)|`.
    Equality,
    /// `|SRT(w)| < |BRT(w)|`.
    Strict,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Equality => "equality",
            Classification::Strict => "strict",
        })
    }
}

pub fn classify(w: &Permutation) -> Classification {
    if w.is_equality_class() {
        Classification::Equality
    } else {
        Classification::Strict
    }
}

/// Default largest `n` for the exhaustive avoider count.
pub const DEFAULT_AVOIDER_CAP: usize = 10;

/// `a_n` by scanning all of `S_n`.
pub fn count_avoiders(n: usize, cap: usize) -> Result<u64> {
    count_avoiders_with(n, cap, 1)
}

/// [`count_avoiders`] split over `workers` threads by first letter.
pub fn count_avoiders_with(n: usize, cap: usize, workers: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidInput("a_n is defined for n ≥ 1".into()));
    }
    if n > cap {
        return Err(Error::ResourceCap(format!(
            "n = {n} exceeds the exhaustive avoider cap of {cap}"
        )));
    }
    let firsts: Vec<usize> = (1..=n).collect();
    let counts = map_ordered(&firsts, workers, |&first| {
        Permutation::all(n - 1)
            .filter(|rest| {
                let word = std::iter::once(first)
                    .chain(rest.word().iter().map(|&x| if x < first { x } else { x + 1 }))
                    .collect();
                Permutation::new(word)
                    .expect("a permutation")
                    .is_equality_class()
            })
            .count() as u64
    });
    Ok(counts.into_iter().sum())
}

/// Truncated power series with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    /// `precision` coefficients, all zero.
    pub fn zero(precision: usize) -> Series {
        Series {
            coeffs: vec![BigRational::zero(); precision],
        }
    }

    pub fn from_ints(values: &[i64], precision: usize) -> Series {
        let mut s = Series::zero(precision);
        for (k, &v) in values.iter().enumerate().take(precision) {
            s.coeffs[k] = BigRational::from_integer(BigInt::from(v));
        }
        s
    }

    /// `(1 + a·x)^e` for rational `e` via the binomial series.
    pub fn binomial(a: i64, e: &BigRational, precision: usize) -> Series {
        let mut s = Series::zero(precision);
        let a = BigRational::from_integer(BigInt::from(a));
        let mut term = BigRational::one();
        for k in 0..precision {
            s.coeffs[k] = term.clone();
            // C(e, k+1) a^{k+1} = C(e, k) a^k · (e - k)/(k + 1) · a
            let k_r = BigRational::from_integer(BigInt::from(k as i64));
            term = term * (e - &k_r) / (k_r + BigRational::one()) * &a;
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn sub(&self, other: &Series) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let p = self.precision().min(other.precision());
        let mut out = Series::zero(p);
        for i in 0..p {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..p - i {
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        out
    }

    fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `self / other`, cancelling a common power of `x` first. The result
    /// loses as many trailing coefficients as `x` powers were cancelled.
    pub fn div(&self, other: &Series) -> Result<Series> {
        let v = other
            .valuation()
            .ok_or_else(|| violation("division by the zero series"))?;
        if self.valuation().is_some_and(|u| u < v) {
            return Err(violation("quotient is not a power series"));
        }
        let num = &self.coeffs[v.min(self.precision())..];
        let den = &other.coeffs[v..];
        let p = num.len().min(den.len());
        let mut q = vec![BigRational::zero(); p];
        for k in 0..p {
            let mut acc = num[k].clone();
            for j in 1..=k {
                acc -= &den[j] * &q[k - j];
            }
            q[k] = acc / &den[0];
        }
        Ok(Series { coeffs: q })
    }
}

/// `a_1, …, a_N` read off `-2x / (1 - 5x + 2x² - (1 - x)√(1 - 4x))`.
pub fn gf_coefficients(count: usize) -> Result<Vec<BigUint>> {
    // one extra term is consumed by cancelling the factor x
    let precision = count + 2;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let sqrt = Series::binomial(-4, &half, precision);
    let one_minus_x = Series::from_ints(&[1, -1], precision);
    let denominator = Series::from_ints(&[1, -5, 2], precision).sub(&one_minus_x.mul(&sqrt));
    let numerator = Series::from_ints(&[0, -2], precision);
    let quotient = numerator.div(&denominator)?;
    (1..=count)
        .map(|k| {
            let c = quotient.coeff(k);
            if !c.is_integer() || c.is_negative() {
                return Err(violation(format!("coefficient of x^{k} is {c}")));
            }
            c.to_integer()
                .to_biguint()
                .ok_or_else(|| violation(format!("coefficient of x^{k} is {c}")))
        })
        .collect()
}

/// [`gf_coefficients`] as machine integers, for tables.
pub fn gf_coefficients_u64(count: usize) -> Result<Vec<u64>> {
    gf_coefficients(count)?
        .into_iter()
        .map(|c| c.to_u64().ok_or_else(|| violation("coefficient overflows u64")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(srt_count_formula(&Permutation::identity(4)).unwrap(), BigUint::one());
        assert_eq!(srt_count_formula(&p("2143")).unwrap(), BigUint::from(2u32));
        assert_eq!(srt_count_formula(&p("312486759")).unwrap(), BigUint::from(126u32));
        match srt_count_formula(&p("426315")) {
            Err(Error::NotApplicable(msg)) => assert_eq!(msg, "contains 2413 at positions 1,3,4,6"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[]), BigUint::one());
        assert_eq!(multinomial(&[0, 0]), BigUint::one());
        assert_eq!(multinomial(&[2, 0, 5, 0]), BigUint::from(21u32));
        assert_eq!(multinomial(&[1, 1]), BigUint::from(2u32));
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&Permutation::identity(3)), Classification::Equality);
        assert_eq!(classify(&p("2413")), Classification::Strict);
        assert_eq!(classify(&p("426315")), Classification::Strict);
    }

    #[test]
    fn avoider_counts() {
        assert_eq!(count_avoiders(1, 10).unwrap(), 1);
        assert_eq!(count_avoiders(3, 10).unwrap(), 6);
        assert_eq!(count_avoiders(4, 10).unwrap(), 20);
        assert_eq!(count_avoiders(6, 10).unwrap(), 243);
        assert!(matches!(count_avoiders(11, 10), Err(Error::ResourceCap(_))));
        assert!(count_avoiders(0, 10).is_err());
        assert_eq!(count_avoiders_with(7, 10, 4).unwrap(), count_avoiders(7, 10).unwrap());
    }

    #[test]
    fn series_coefficients() {
        let got = gf_coefficients_u64(6).unwrap();
        assert_eq!(got, vec![1, 2, 6, 20, 69, 243]);
    }

    #[test]
    fn square_root_series() {
        // √(1-4x) = 1 - 2x - 2x² - 4x³ - 10x⁴ - 28x⁵
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let s = Series::binomial(-4, &half, 6);
        assert_eq!(s, Series::from_ints(&[1, -2, -2, -4, -10, -28], 6));
        assert_eq!(s.mul(&s), Series::from_ints(&[1, -4], 6));
    }
}
