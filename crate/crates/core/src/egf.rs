//! Generating functions for root counts and for the number of permutations
//! that are m-th powers.
//!
//! * [`root_count_egf`]: `exp(sum_ell sum_{g in G_m(ell)} ell^(g-1)/g * t_ell^g)`,
//!   whose `t^a / prod(a_ell!)` coefficient is the root count of type `a`.
//! * [`prime_corollary_egf`]: the same series written out for prime `m`.
//! * [`power_product_egf`]: `prod_ell exp_{((ell,m))}(x^ell / ell)`, the EGF
//!   of `r(n, m)`, and hence the ordinary generating function of `p_m(n)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::counting::RootCount;
use crate::error::{Error, Result};
use crate::gsets::g_set;
use crate::numtheory::{bracket, is_prime};
use crate::perm::{factorial, CycleType};
use crate::series::{inverse_factorial, MultiSeries, UniSeries};

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn integer(q: BigRational, what: &str) -> BigUint {
    assert!(q.is_integer(), "{what} is not integral: {q}");
    q.to_integer()
        .to_biguint()
        .unwrap_or_else(|| panic!("{what} is negative"))
}

/// `exp_q(x) = sum_i x^(i q) / (i q)!` up to `x^order`.
pub fn exp_q(q: usize, order: usize) -> UniSeries {
    assert!(q >= 1, "exp_q needs q >= 1");
    let coeffs = (0..=order)
        .map(|j| {
            if j % q == 0 {
                inverse_factorial(j)
            } else {
                BigRational::zero()
            }
        })
        .collect();
    UniSeries::from_coeffs(coeffs, order)
}

/// Root-count EGF in `t_1..t_n`, truncated at weight `n`.
pub fn root_count_egf(m: u64, n: usize) -> Result<MultiSeries> {
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    let mut arg = MultiSeries::zero(n, n);
    for ell in 1..=n {
        for &g in g_set(m, ell as u64)?.elements() {
            // ell * g > n cannot reach a coefficient of weight <= n.
            if ell as u64 * g > n as u64 {
                break;
            }
            let c = ratio((ell as u64).pow(g as u32 - 1), g);
            arg = &arg + &MultiSeries::monomial(n, n, ell, g as u32, c);
        }
    }
    arg.exp()
}

/// Reads the root count of type `t` off a root-count EGF whose weight bound
/// covers `t`.
pub fn root_count_from_egf(series: &MultiSeries, t: &CycleType) -> RootCount {
    assert!(
        t.n() <= series.bound(),
        "type weight exceeds the series bound"
    );
    let exps: Vec<u32> = t.multiplicities().iter().map(|&a| a as u32).collect();
    let scale: BigUint = t.multiplicities().iter().map(|&a| factorial(a)).product();
    let value = series.coeff(&exps) * BigRational::from_integer(scale.into());
    RootCount::from(integer(value, &format!("EGF root count of {t}")))
}

/// Root count of type `t` via the generating function.
pub fn egf_root_count(m: u64, t: &CycleType) -> Result<RootCount> {
    Ok(root_count_from_egf(&root_count_egf(m, t.n())?, t))
}

/// `exp(sum_i i^(p-1)/p t_i^p + sum_{gcd(j,p)=1} t_j)` truncated at weight `n`.
pub fn prime_corollary_egf(p: u64, n: usize) -> Result<MultiSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut arg = MultiSeries::zero(n, n);
    for i in 1..=n {
        if (i as u64) * p <= n as u64 {
            let c = ratio((i as u64).pow(p as u32 - 1), p);
            arg = &arg + &MultiSeries::monomial(n, n, i, p as u32, c);
        }
        if !(i as u64).is_multiple_of(p) {
            arg = &arg + &MultiSeries::monomial(n, n, i, 1, BigRational::one());
        }
    }
    let series = arg.exp()?;
    assert_eq!(
        series,
        root_count_egf(p, n)?,
        "prime specialization disagrees with the general series for p={p}"
    );
    Ok(series)
}

/// `prod_{ell=1..order} exp_{((ell,m))}(x^ell / ell)` truncated at `x^order`.
///
/// Factors with `ell > order` are `1 + O(x^(ell*((ell,m))))` and drop out.
pub fn power_product_egf(m: u64, order: usize) -> Result<UniSeries> {
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    let factor = |ell: usize| -> Result<UniSeries> {
        let b = bracket(ell as u64, m)? as usize;
        Ok(exp_q(b, order).substitute_monomial(&ratio(1, ell as u64), ell))
    };
    debug_assert_eq!(factor(order + 1)?, UniSeries::one(order));
    let mut product = UniSeries::one(order);
    for ell in 1..=order {
        product = &product * &factor(ell)?;
    }
    Ok(product)
}

/// `r(n, m)`: how many `n`-permutations have an m-th root.
pub fn r_total(n: usize, m: u64) -> Result<BigUint> {
    let series = power_product_egf(m, n)?;
    let value = series.coeff(n) * BigRational::from_integer(factorial(n as u64).into());
    Ok(integer(value, &format!("r({n}, {m})")))
}

/// `p_m(n) = r(n, m) / n!`, the chance that a uniform `n`-permutation has
/// an m-th root.
pub fn p_m(n: usize, m: u64) -> Result<BigRational> {
    Ok(power_product_egf(m, n)?.coeff(n).clone())
}

/// One block `p_m(jq), ..., p_m(jq + q - 1)` of the prime-power check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub j: usize,
    pub values: Vec<(usize, BigRational)>,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowerReport {
    pub q: u64,
    pub r: u32,
    pub m: u64,
    pub blocks: Vec<Block>,
}

impl PrimePowerReport {
    pub fn passed(&self) -> bool {
        self.blocks.iter().all(|b| b.equal)
    }
}

fn prime_power(q: u64, r: u32) -> Result<u64> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if r == 0 {
        return Err(Error::ZeroArgument("r"));
    }
    q.checked_pow(r).ok_or(Error::Overflow("q^r"))
}

/// Checks `p_m(jq) = p_m(jq+1) = ... = p_m(jq+q-1)` for `m = q^r`, `j <= max_j`.
pub fn check_prime_power_equalities(q: u64, r: u32, max_j: usize) -> Result<PrimePowerReport> {
    let m = prime_power(q, r)?;
    let q_us = q as usize;
    let order = (max_j + 1) * q_us - 1;
    let probs = power_product_egf(m, order)?;
    let blocks = (0..=max_j)
        .map(|j| {
            let values: Vec<(usize, BigRational)> = (j * q_us..(j + 1) * q_us)
                .map(|n| (n, probs.coeff(n).clone()))
                .collect();
            let equal = values.windows(2).all(|w| w[0].1 == w[1].1);
            Block { j, values, equal }
        })
        .collect();
    Ok(PrimePowerReport { q, r, m, blocks })
}

/// The factorization behind the prime-power equalities, for `m = q^r`:
/// `G(x) = (1 - x^q)^(1/q) * prod_j exp_m(x^(jq) / (jq))` and `H = G / (1 - x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowerStructure {
    pub m: u64,
    pub g: UniSeries,
    pub h: UniSeries,
    /// Every nonzero coefficient of `G` sits at an exponent divisible by `q`.
    pub exponents_divisible: bool,
    /// `[x^(kq+i)] H = b_0 + ... + b_k` for `0 <= i < q`.
    pub partial_sums_hold: bool,
    /// `H` equals the power-product EGF.
    pub matches_product: bool,
}

impl PrimePowerStructure {
    pub fn holds(&self) -> bool {
        self.exponents_divisible && self.partial_sums_hold && self.matches_product
    }
}

pub fn prime_power_structure(q: u64, r: u32, order: usize) -> Result<PrimePowerStructure> {
    let m = prime_power(q, r)?;
    let q_us = q as usize;
    let root = UniSeries::binomial(&ratio(1, q), &-BigRational::one(), q_us, order);
    let mut g = root;
    let mut j = 1;
    while j * q_us <= order {
        let jq = j * q_us;
        let factor = exp_q(m as usize, order).substitute_monomial(&ratio(1, jq as u64), jq);
        g = &g * &factor;
        j += 1;
    }
    let h = g.prefix_sums();
    let exponents_divisible = g
        .coeffs()
        .iter()
        .enumerate()
        .all(|(e, c)| e % q_us == 0 || c.is_zero());
    let mut partial_sums_hold = true;
    let mut running = BigRational::zero();
    for k in 0..=order / q_us {
        running += g.coeff(k * q_us);
        for i in 0..q_us {
            let e = k * q_us + i;
            if e <= order && h.coeff(e) != &running {
                partial_sums_hold = false;
            }
        }
    }
    let matches_product = h == power_product_egf(m, order)?;
    Ok(PrimePowerStructure {
        m,
        g,
        h,
        exponents_divisible,
        partial_sums_hold,
        matches_product,
    })
}
