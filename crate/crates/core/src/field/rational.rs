use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Field;
use crate::error::{Error, Result};

/// The field of rational numbers, elements in lowest terms with positive
/// denominator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Rationals {
    pub fn ratio(&self, num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

/// Exact integer `n`-th root of a nonnegative integer.
fn exact_root(x: &BigInt, n: u32) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.nth_root(n);
    (num_traits::pow(r.clone(), n as usize) == *x).then_some(r)
}

/// Positive divisors of `|n|`, found by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let mut e = 0;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if !n.is_one() {
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for base in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(base * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

fn eval(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn size(&self) -> Option<u64> {
        None
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn generator(&self) -> Option<BigRational> {
        None
    }

    /// The nonnegative rational square root.
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        let n = exact_root(a.numer(), 2)?;
        let d = exact_root(a.denom(), 2)?;
        Some(BigRational::new(n, d))
    }

    fn nth_roots(&self, a: &BigRational, n: u64) -> Vec<BigRational> {
        if n == 0 {
            return vec![];
        }
        if a.is_zero() {
            return vec![BigRational::zero()];
        }
        let Ok(n32) = u32::try_from(n) else {
            return vec![];
        };
        let odd = n % 2 == 1;
        if a.is_negative() && !odd {
            return vec![];
        }
        let (Some(num), Some(den)) = (exact_root(&a.numer().abs(), n32), exact_root(a.denom(), n32))
        else {
            return vec![];
        };
        let r = BigRational::new(num, den);
        if odd {
            vec![if a.is_negative() { -r } else { r }]
        } else {
            let mut v = vec![-r.clone(), r];
            v.sort();
            v
        }
    }

    /// Rational-root search on the primitive integer model.
    fn distinct_roots(&self, coeffs: &[BigRational]) -> Vec<BigRational> {
        let mut coeffs = coeffs.to_vec();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.len() <= 1 {
            return vec![];
        }
        let mut out = Vec::new();
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            out.push(BigRational::zero());
            coeffs.drain(..lead_zeros);
        }
        if coeffs.len() > 1 {
            let den_lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> = coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(den_lcm.clone())).to_integer())
                .collect();
            let nums = divisors(&ints[0]);
            let dens = divisors(ints.last().unwrap());
            for n in &nums {
                for d in &dens {
                    for cand in [BigRational::new(n.clone(), d.clone()), BigRational::new(-n, d.clone())] {
                        if eval(&coeffs, &cand).is_zero() && !out.contains(&cand) {
                            out.push(cand);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn root_of_unity(&self, m: u64) -> Result<BigRational> {
        match m {
            1 => Ok(self.one()),
            2 => Ok(-self.one()),
            _ => Err(Error::MissingRootOfUnity { order: m, field: "Q".into(), degree: 0 }),
        }
    }

    /// `2 cos(2 pi j / n)` is rational exactly when `j/n` has reduced
    /// denominator 1, 2, 3, 4 or 6.
    fn unity_traces(&self, n: u64) -> Result<Vec<Option<BigRational>>> {
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        Ok((0..n)
            .map(|j| {
                let den = n / super::gcd(j, n);
                let v = match den {
                    1 => 2,
                    2 => -2,
                    3 => -1,
                    4 => 0,
                    6 => 1,
                    _ => return None,
                };
                Some(self.from_i64(v))
            })
            .collect())
    }

    fn frobenius_root(&self, a: &BigRational) -> BigRational {
        a.clone()
    }

    fn format_elem(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn is_compound(&self, _a: &BigRational) -> bool {
        false
    }

    fn is_negative(&self, a: &BigRational) -> bool {
        a.numer().sign() == Sign::Minus
    }

    fn spec(&self) -> String {
        "Q".into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rational_to_f64(a: &BigRational) -> f64 {
        a.to_f64().unwrap_or(f64::NAN)
    }

    #[test]
    fn sum_of_fractions() {
        let q = Rationals;
        assert_eq!(q.add(&q.ratio(1, 2), &q.ratio(1, 3)), q.ratio(5, 6));
    }

    #[test]
    fn sqrt_is_nonnegative() {
        let q = Rationals;
        assert_eq!(q.sqrt(&q.ratio(4, 9)), Some(q.ratio(2, 3)));
        assert_eq!(q.sqrt(&q.zero()), Some(q.zero()));
        assert_eq!(q.sqrt(&q.ratio(2, 1)), None);
        assert_eq!(q.sqrt(&q.ratio(-4, 1)), None);
    }

    #[test]
    fn rational_roots() {
        let q = Rationals;
        // 6x^2 - 5x + 1 = (2x - 1)(3x - 1)
        let roots = q.distinct_roots(&[q.from_i64(1), q.from_i64(-5), q.from_i64(6)]);
        assert_eq!(roots, vec![q.ratio(1, 3), q.ratio(1, 2)]);
        // x^3 - x
        let roots = q.distinct_roots(&[q.zero(), q.from_i64(-1), q.zero(), q.one()]);
        assert_eq!(roots, vec![q.from_i64(-1), q.zero(), q.one()]);
    }

    #[test]
    fn traces_match_cosines() {
        let q = Rationals;
        for n in 1..=12u64 {
            let t = q.unity_traces(n).unwrap();
            for (j, v) in t.iter().enumerate() {
                let c = 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos();
                if let Some(v) = v {
                    assert!((rational_to_f64(v) - c).abs() < 1e-9);
                } else {
                    assert!((c - c.round()).abs() > 1e-6, "n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn nth_roots_signs() {
        let q = Rationals;
        assert_eq!(q.nth_roots(&q.ratio(-8, 27), 3), vec![q.ratio(-2, 3)]);
        assert_eq!(q.nth_roots(&q.ratio(16, 1), 4), vec![q.from_i64(-2), q.from_i64(2)]);
        assert!(q.nth_roots(&q.ratio(-16, 1), 4).is_empty());
    }
}
