use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{mod_add, mod_inv, mod_mul, mod_pow, PrimeModulus, Residue};
use crate::error::{Error, Result};

/// Bernoulli numbers `B_0, B_1, ...` with `B_1 = -1/2`, grown on demand.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    entries: Vec<BigRational>,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self {
            entries: vec![BigRational::one()],
        }
    }

    /// A table already holding `B_0..=B_k`.
    pub fn up_to(k: usize) -> Self {
        let mut table = Self::new();
        table.extend_to(k);
        table
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<&BigRational> {
        self.entries.get(k)
    }

    /// Extends with `sum_{i=0}^{n} C(n+1, i) B_i = 0`.
    pub fn extend_to(&mut self, k: usize) {
        while self.entries.len() <= k {
            let n = self.entries.len();
            let mut binom = BigInt::one(); // C(n+1, 0)
            let mut acc = BigRational::zero();
            for (i, b) in self.entries.iter().enumerate() {
                acc += b * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(n + 1 - i) / BigInt::from(i + 1);
            }
            let next = -acc / BigRational::from_integer(BigInt::from(n + 1));
            self.entries.push(next);
        }
    }

    pub fn entry(&mut self, k: usize) -> &BigRational {
        self.extend_to(k);
        &self.entries[k]
    }
}

/// `sum_{k=1}^{j} k^a mod p^m`, summed term by term (one period of length
/// `p^m` at most).
pub fn power_sum_direct(j: u64, a: u32, p: PrimeModulus, m: u32) -> Result<Residue> {
    let q = p.pow(m)?;
    let partial = |upto: u64| (1..=upto).fold(0, |acc, k| mod_add(acc, mod_pow(k, a as u64, q), q));
    let full = partial(q.min(j));
    let value = if j <= q {
        full
    } else {
        mod_add(mod_mul((j / q) % q, full, q), partial(j % q), q)
    };
    Ok(Residue::from_reduced(value, p, m, q))
}

/// `sum_{k=1}^{j} k^a mod p^m` through Faulhaber's formula
/// `(1/(a+1)) sum_k (-1)^k C(a+1,k) B_k j^{a+1-k}`.
///
/// The rational coefficients are cleared by `L`, the lcm of the Bernoulli
/// denominators involved, and the result is multiplied by the inverse of
/// `L·(a+1)` modulo `p^m`. That inverse exists only for `a <= p - 2`.
pub fn power_sum_faulhaber(j: u64, a: u32, p: PrimeModulus, m: u32) -> Result<Residue> {
    let pv = p.get();
    if (a as u64) + 2 > pv {
        return Err(Error::CaseNotApplicable { a: a as u64, p: pv });
    }
    let q = p.pow(m)?;
    let a = a as usize;
    let bernoulli = BernoulliTable::up_to(a);

    // (-1)^k C(a+1, k) B_k for k = 0..=a
    let mut terms = Vec::with_capacity(a + 1);
    let mut binom = BigInt::one();
    for k in 0..=a {
        let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        terms.push(bernoulli.get(k).unwrap() * BigRational::from_integer(sign * &binom));
        binom = binom * BigInt::from(a + 1 - k) / BigInt::from(k + 1);
    }
    let lcm = terms.iter().fold(BigInt::one(), |acc, t| acc.lcm(t.denom()));
    debug_assert!(lcm.gcd(&BigInt::from(pv)).is_one());

    let big_q = BigInt::from(q);
    let normaliser = (&lcm * BigInt::from(a + 1)).mod_floor(&big_q).to_u64().unwrap();
    let inverse = mod_inv(normaliser, q).ok_or(Error::NotAUnit {
        value: normaliser,
        modulus: q,
    })?;

    let jq = j % q;
    let mut acc = 0u64;
    for (k, term) in terms.iter().enumerate() {
        let scaled = term * BigRational::from_integer(lcm.clone());
        debug_assert!(scaled.is_integer());
        let coeff = scaled.to_integer().mod_floor(&big_q);
        debug_assert!(!coeff.is_negative());
        let coeff = coeff.to_u64().unwrap();
        let power = mod_pow(jq, (a + 1 - k) as u64, q);
        acc = mod_add(acc, mod_mul(coeff, power, q), q);
    }
    Ok(Residue::from_reduced(mod_mul(acc, inverse, q), p, m, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn prime(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn first_bernoulli_numbers() {
        let t = BernoulliTable::up_to(12);
        assert_eq!(t.get(0), Some(&rat(1, 1)));
        assert_eq!(t.get(1), Some(&rat(-1, 2)));
        assert_eq!(t.get(2), Some(&rat(1, 6)));
        assert_eq!(t.get(4), Some(&rat(-1, 30)));
        assert_eq!(t.get(6), Some(&rat(1, 42)));
        assert_eq!(t.get(12), Some(&rat(-691, 2730)));
        for k in (3..12).step_by(2) {
            assert!(t.get(k).unwrap().is_zero());
        }
    }

    /// Denominator of B_{2n} is the product of primes q with (q - 1) | 2n.
    #[test]
    fn von_staudt_clausen() {
        let t = BernoulliTable::up_to(40);
        let is_prime = |q: u64| (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0) && q > 1;
        for two_n in (2..=40u64).step_by(2) {
            let expected: u64 = (2..=two_n + 1)
                .filter(|&q| is_prime(q) && two_n % (q - 1) == 0)
                .product();
            assert_eq!(
                t.get(two_n as usize).unwrap().denom(),
                &BigInt::from(expected),
                "B_{two_n}"
            );
        }
    }

    #[test]
    fn direct_examples() {
        assert_eq!(power_sum_direct(2, 2, prime(3), 2).unwrap().value(), 5);
        assert_eq!(power_sum_direct(4, 2, prime(5), 1).unwrap().value(), 0);
        assert_eq!(power_sum_direct(4, 4, prime(5), 1).unwrap().value(), 4);
        assert_eq!(power_sum_direct(0, 3, prime(5), 1).unwrap().value(), 0);
        // spans several periods of 9: sum_{k=1}^{100} k = 5050
        assert_eq!(power_sum_direct(100, 1, prime(3), 2).unwrap().value(), 5050 % 9);
    }

    #[test]
    fn faulhaber_examples() {
        assert_eq!(power_sum_faulhaber(2, 2, prime(5), 1).unwrap().value(), 0);
        assert_eq!(power_sum_faulhaber(3, 1, prime(5), 2).unwrap().value(), 6);
        assert_eq!(power_sum_faulhaber(4, 3, prime(7), 2).unwrap().value(), 2);
    }

    #[test]
    fn faulhaber_case_two_rejected() {
        assert_eq!(
            power_sum_faulhaber(3, 4, prime(5), 1),
            Err(Error::CaseNotApplicable { a: 4, p: 5 })
        );
        assert!(power_sum_faulhaber(3, 1, prime(2), 1).is_err());
        assert!(power_sum_faulhaber(3, 0, prime(2), 1).is_ok());
    }

    #[test]
    fn faulhaber_matches_direct() {
        for p in [3u64, 5, 7] {
            for m in 1..=3 {
                for a in 1..=(p as u32 - 2) {
                    for j in 0..=3 * p {
                        assert_eq!(
                            power_sum_faulhaber(j, a, prime(p), m).unwrap(),
                            power_sum_direct(j, a, prime(p), m).unwrap(),
                            "p={p} m={m} a={a} j={j}"
                        );
                    }
                }
            }
        }
    }
}
