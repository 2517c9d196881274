//! Exact root counts from the closed-form sum over groupings.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gsets::{g_set, g_set_bounded};
use crate::perm::{factorial, has_mth_root, CycleType};

/// An exact, non-negative number of roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootCount(BigUint);

impl RootCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<BigUint> for RootCount {
    fn from(v: BigUint) -> Self {
        RootCount(v)
    }
}

impl From<u64> for RootCount {
    fn from(v: u64) -> Self {
        RootCount(BigUint::from(v))
    }
}

impl fmt::Display for RootCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn rational(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn into_count(q: BigRational, what: &str) -> RootCount {
    assert!(q.is_integer(), "{what} is not integral: {q}");
    let v = q.to_integer();
    RootCount(v.to_biguint().expect("root counts are non-negative"))
}

/// Roots of the part of a permutation made of `count` cycles of length `ell`.
pub fn length_class_count(ell: u64, count: u64, m: u64) -> Result<RootCount> {
    if count == 0 {
        return Ok(RootCount::from(1));
    }
    let set = g_set_bounded(m, ell, count)?;
    let mut sum = BigRational::zero();
    for eps in set.solutions(count) {
        let mut term = BigRational::one();
        for (&g, &e) in set.elements().iter().zip(eps.coords()) {
            let num = BigUint::from(ell).pow(((g - 1) * e) as u32);
            let den = BigUint::from(g).pow(e as u32) * factorial(e);
            term *= BigRational::new(num.into(), den.into());
        }
        sum += term;
    }
    Ok(into_count(
        rational(factorial(count)) * sum,
        &format!("root count for {count} cycles of length {ell}"),
    ))
}

/// Number of m-th roots of any permutation of cycle type `t`.
pub fn root_count(t: &CycleType, m: u64) -> Result<RootCount> {
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    let mut total = BigUint::one();
    for (ell, count) in t.parts() {
        total *= length_class_count(ell as u64, count, m)?.0;
    }
    debug_assert_eq!(total.is_zero(), !has_mth_root(t, m)?);
    Ok(RootCount(total))
}

/// Roots of type `(g*ell)^p` of a permutation of type `ell^(g*p)`:
/// `(g p)! ell^(p (g-1)) / (g^p p!)`.
pub fn homogeneous_count(ell: u64, g: u64, p: u64, m: u64) -> Result<RootCount> {
    if !g_set(m, ell)?.contains(g) {
        return Err(Error::NotInGSet { g, ell, m });
    }
    let num = factorial(g * p) * BigUint::from(ell).pow((p * (g - 1)) as u32);
    let den = BigUint::from(g).pow(p as u32) * factorial(p);
    Ok(into_count(
        BigRational::new(num.into(), den.into()),
        "homogeneous root count",
    ))
}

/// `r(n, m)` by summing class sizes over the cycle types that admit roots.
pub fn r_total_by_classification(n: usize, m: u64) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for t in CycleType::all_of_weight(n) {
        if has_mth_root(&t, m)? {
            total += t.class_size();
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{brute_force_roots, OracleConfig, Permutation};

    fn ct(a: &[u64]) -> CycleType {
        CycleType::new(a.to_vec()).unwrap()
    }

    fn count(t: &CycleType, m: u64) -> u64 {
        root_count(t, m).unwrap().value().try_into().unwrap()
    }

    #[test]
    fn root_count_examples() {
        assert_eq!(count(&ct(&[2, 0]), 2), 2);
        assert_eq!(count(&ct(&[4, 0, 0, 0]), 2), 10);
        assert_eq!(count(&ct(&[0, 0, 0, 1]), 2), 0);
        for n in 0..8 {
            for t in CycleType::all_of_weight(n) {
                assert_eq!(count(&t, 1), 1, "type {t}");
            }
        }
        assert!(root_count(&ct(&[1]), 0).is_err());
    }

    #[test]
    fn homogeneous_examples() {
        let h = |ell, g, p, m| -> u64 {
            homogeneous_count(ell, g, p, m)
                .unwrap()
                .value()
                .try_into()
                .unwrap()
        };
        assert_eq!(h(1, 2, 1, 2), 1);
        assert_eq!(h(1, 2, 2, 2), 3);
        assert_eq!(h(2, 2, 1, 2), 2);
        assert_eq!(h(3, 1, 0, 2), 1);
        assert_eq!(
            homogeneous_count(2, 1, 1, 2),
            Err(Error::NotInGSet { g: 1, ell: 2, m: 2 })
        );
    }

    #[test]
    fn homogeneous_matches_oracle_on_fused_types() {
        // Roots of 1^4 under m=2 whose type is 2^2.
        let sigma = Permutation::identity(4);
        let fused = brute_force_roots(&sigma, 2, &OracleConfig::default())
            .unwrap()
            .into_iter()
            .filter(|tau| tau.cycle_type() == ct(&[0, 2, 0, 0]))
            .count() as u64;
        let h: u64 = homogeneous_count(1, 2, 2, 2)
            .unwrap()
            .value()
            .try_into()
            .unwrap();
        assert_eq!(h, fused);
    }

    #[test]
    fn count_factorizes_over_lengths() {
        for m in [2u64, 3, 4, 6] {
            for t in CycleType::all_of_weight(9) {
                let product: BigUint = t
                    .parts()
                    .map(|(ell, c)| {
                        root_count(&CycleType::from_pairs(&[(ell, c)]).unwrap(), m)
                            .unwrap()
                            .into_inner()
                    })
                    .product();
                assert_eq!(root_count(&t, m).unwrap().into_inner(), product);
            }
        }
    }

    #[test]
    fn trailing_zeros_do_not_matter() {
        let short = CycleType::from_pairs(&[(2, 2)]).unwrap();
        let t: CycleType = "2^2".parse().unwrap();
        assert_eq!(root_count(&short, 2), root_count(&t, 2));
        assert_eq!(count(&short, 2), 2);
    }

    #[test]
    fn classification_examples() {
        let r: Vec<u64> = (0..=5)
            .map(|n| r_total_by_classification(n, 2).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(r, vec![1, 1, 1, 3, 12, 60]);
    }
}
