//! Factorization-based helpers: p-adic valuation, divisors, and the
//! bracket number `((ell, m))` that governs root existence.
//!
//! Every routine works on `u64` with checked arithmetic; inputs are expected
//! to be small (up to roughly 10^9), so plain trial division is used.

use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factored integer (0 when absent).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> Result<u64> {
        self.0.iter().try_fold(1u64, |acc, &(p, e)| {
            p.checked_pow(e)
                .and_then(|pe| acc.checked_mul(pe))
                .ok_or(Error::Overflow("factorization value"))
        })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    let mut rest = n;
    let mut pairs = Vec::new();
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= rest) {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            pairs.push((d, e));
        }
        d += 1;
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization(pairs))
}

/// The exponent of the prime `p` in `n`.
pub fn nu_p(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroArgument("n"));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut rest = n;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    Ok(e)
}

/// `((ell, m))`: the product of `p^nu_p(m)` over the primes `p` dividing `ell`.
///
/// Only primes dividing both `ell` and `m` contribute, so the result always
/// divides `m` and equals 1 exactly when `gcd(ell, m) = 1`.
pub fn bracket(ell: u64, m: u64) -> Result<u64> {
    if ell == 0 {
        return Err(Error::ZeroArgument("ell"));
    }
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    let ell_primes = factorize(ell)?;
    let m_factors = factorize(m)?;
    let result = ell_primes.primes().try_fold(1u64, |acc, p| {
        p.checked_pow(m_factors.exponent_of(p))
            .and_then(|pe| acc.checked_mul(pe))
            .ok_or(Error::Overflow("bracket"))
    });
    result
}

/// Positive divisors of `m` in increasing order.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    let fact = factorize(m)?;
    let mut divs = vec![1u64];
    for &(p, e) in fact.pairs() {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for &d in &divs {
            let mut pk = d;
            next.push(pk);
            for _ in 0..e {
                pk = pk.checked_mul(p).ok_or(Error::Overflow("divisors"))?;
                next.push(pk);
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Ok(divs)
}
