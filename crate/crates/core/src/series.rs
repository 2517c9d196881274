//! Truncated power series with exact rational coefficients.
//!
//! [`UniSeries`] is a dense series in one variable cut off at `x^order`.
//! [`MultiSeries`] is a sparse series in `t_1, ..., t_k` graded by the weight
//! `sum(i * e_i)` and cut off above a weight bound.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Formats a rational as `"num/den"` (the denominator is always written).
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Series(format!("bad rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn inverse_factorial(k: usize) -> BigRational {
    let f = (1..=k as u64).fold(BigUint::one(), |acc, i| acc * i);
    BigRational::new(BigInt::one(), f.into())
}

/// Dense series `c_0 + c_1 x + ... + c_N x^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniSeries {
    coeffs: Vec<BigRational>,
}

impl UniSeries {
    pub fn zero(order: usize) -> Self {
        UniSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `c x^k`, which is zero when `k > order`.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or truncates to the given order.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        UniSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        UniSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `exp(self)`; the constant term must be zero.
    ///
    /// Uses `n E_n = sum_{k=1..n} k A_k E_{n-k}`, which follows from `E' = A' E`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a zero constant term".into()));
        }
        let n = self.order();
        let mut e = vec![BigRational::zero(); n + 1];
        e[0] = BigRational::one();
        for i in 1..=n {
            let mut acc = BigRational::zero();
            for k in 1..=i {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &e[i - k] * BigRational::from_integer(k.into());
                }
            }
            e[i] = acc / BigRational::from_integer(i.into());
        }
        Ok(UniSeries { coeffs: e })
    }

    /// `f(c x^k)` truncated at the same order.
    pub fn substitute_monomial(&self, c: &BigRational, k: usize) -> Self {
        assert!(k >= 1, "substitution needs a positive power");
        let order = self.order();
        let mut out = Self::zero(order);
        let mut power = BigRational::one();
        for (i, a) in self.coeffs.iter().enumerate() {
            let target = i * k;
            if target > order {
                break;
            }
            out.coeffs[target] = a * &power;
            power *= c;
        }
        out
    }

    /// `(1 + c x^k)^alpha` by the generalized binomial series
    /// `sum_j binom(alpha, j) c^j x^(j k)`, for any rational `alpha`.
    pub fn binomial(alpha: &BigRational, c: &BigRational, k: usize, order: usize) -> Self {
        assert!(k >= 1, "binomial series needs a positive power");
        let mut out = Self::zero(order);
        let mut binom = BigRational::one();
        let mut cj = BigRational::one();
        let mut j = 0usize;
        while j * k <= order {
            out.coeffs[j * k] = &binom * &cj;
            let jj = BigRational::from_integer(j.into());
            binom = binom * (alpha - &jj) / (jj + BigRational::one());
            cj *= c;
            j += 1;
        }
        out
    }

    /// Multiplication by `1 / (1 - x)`: running prefix sums.
    pub fn prefix_sums(&self) -> Self {
        let mut acc = BigRational::zero();
        UniSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    acc += c;
                    acc.clone()
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| Value::String(format_rational(c)))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Series("expected an array".into()))?;
        if items.is_empty() {
            return Err(Error::Series(
                "a series needs at least a constant term".into(),
            ));
        }
        let coeffs = items
            .iter()
            .map(|x| {
                x.as_str()
                    .ok_or_else(|| Error::Series("coefficients must be strings".into()))
                    .and_then(parse_rational)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UniSeries { coeffs })
    }
}

impl Add for &UniSeries {
    type Output = UniSeries;

    fn add(self, rhs: &UniSeries) -> UniSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        UniSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &UniSeries {
    type Output = UniSeries;

    fn sub(self, rhs: &UniSeries) -> UniSeries {
        self + &(-rhs)
    }
}

impl Neg for &UniSeries {
    type Output = UniSeries;

    fn neg(self) -> UniSeries {
        UniSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniSeries {
    type Output = UniSeries;

    /// Truncated Cauchy product.
    fn mul(self, rhs: &UniSeries) -> UniSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        let n = self.order();
        let mut out = UniSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

/// Sparse series in `t_1..t_k`; only monomials of weight `<= bound` are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSeries {
    nvars: usize,
    bound: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MultiSeries {
    pub fn zero(nvars: usize, bound: usize) -> Self {
        MultiSeries {
            nvars,
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize, bound: usize) -> Self {
        let mut s = Self::zero(nvars, bound);
        s.terms.insert(vec![0; nvars], BigRational::one());
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `sum(i * e_i)` with variables numbered from 1.
    pub fn weight(exps: &[u32]) -> usize {
        exps.iter()
            .enumerate()
            .map(|(i, &e)| (i + 1) * e as usize)
            .sum()
    }

    fn normalize(&self, exps: &[u32]) -> Option<Vec<u32>> {
        if exps[self.nvars.min(exps.len())..].iter().any(|&e| e > 0) {
            return None;
        }
        let mut v = exps[..self.nvars.min(exps.len())].to_vec();
        v.resize(self.nvars, 0);
        Some(v)
    }

    /// Adds `c * t^exps`, dropping it if its weight exceeds the bound.
    pub fn add_term(&mut self, exps: &[u32], c: BigRational) {
        let key = self
            .normalize(exps)
            .expect("monomial uses a variable outside this series");
        if c.is_zero() || Self::weight(&key) > self.bound {
            return;
        }
        let entry = self
            .terms
            .entry(key.clone())
            .or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `c * t_var^e` (variables numbered from 1).
    pub fn monomial(nvars: usize, bound: usize, var: usize, e: u32, c: BigRational) -> Self {
        assert!((1..=nvars).contains(&var), "variable t_{var} out of range");
        let mut s = Self::zero(nvars, bound);
        let mut exps = vec![0; nvars];
        exps[var - 1] = e;
        s.add_term(&exps, c);
        s
    }

    /// Coefficient of `t^exps`; trailing exponents beyond `nvars` must be zero.
    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.normalize(exps)
            .and_then(|k| self.terms.get(&k).cloned())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.nvars, self.bound);
        for (k, v) in &self.terms {
            out.add_term(k, v * c);
        }
        out
    }

    /// `exp(self)` as `sum_k self^k / k!`. The constant term must be zero,
    /// so `self^k` has weight at least `k` and the sum stops by `k = bound`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(&vec![0; self.nvars]).is_zero() {
            return Err(Error::Series("exp needs a zero constant term".into()));
        }
        let mut result = Self::one(self.nvars, self.bound);
        let mut power = Self::one(self.nvars, self.bound);
        for k in 1.. {
            power = &power * self;
            if power.is_empty() {
                break;
            }
            result = &result + &power.scale(&inverse_factorial(k));
        }
        Ok(result)
    }

    fn check_compatible(&self, rhs: &MultiSeries) {
        assert_eq!(
            (self.nvars, self.bound),
            (rhs.nvars, rhs.bound),
            "series shapes differ"
        );
    }

    /// JSON object mapping `"e1,e2,..."` to `"num/den"`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, v) in &self.terms {
            let key = k
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",");
            map.insert(key, Value::String(format_rational(v)));
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value, nvars: usize, bound: usize) -> Result<Self> {
        let map = v
            .as_object()
            .ok_or_else(|| Error::Series("expected an object".into()))?;
        let mut out = Self::zero(nvars, bound);
        for (key, val) in map {
            let exps = if key.is_empty() {
                Vec::new()
            } else {
                key.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Series(format!("bad exponent key `{key}`")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            if out.normalize(&exps).is_none() {
                return Err(Error::Series(format!("key `{key}` has too many variables")));
            }
            let c = val
                .as_str()
                .ok_or_else(|| Error::Series("coefficients must be strings".into()))
                .and_then(parse_rational)?;
            out.add_term(&exps, c);
        }
        Ok(out)
    }
}

impl Add for &MultiSeries {
    type Output = MultiSeries;

    fn add(self, rhs: &MultiSeries) -> MultiSeries {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k, v.clone());
        }
        out
    }
}

impl Mul for &MultiSeries {
    type Output = MultiSeries;

    fn mul(self, rhs: &MultiSeries) -> MultiSeries {
        self.check_compatible(rhs);
        let weighted: Vec<(usize, &Vec<u32>, &BigRational)> = rhs
            .terms
            .iter()
            .map(|(k, v)| (MultiSeries::weight(k), k, v))
            .collect();
        let mut out = MultiSeries::zero(self.nvars, self.bound);
        let mut key = vec![0u32; self.nvars];
        for (ka, va) in &self.terms {
            let wa = MultiSeries::weight(ka);
            for &(wb, kb, vb) in &weighted {
                if wa + wb > self.bound {
                    continue;
                }
                for i in 0..self.nvars {
                    key[i] = ka[i] + kb[i];
                }
                out.add_term(&key, va * vb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn uni(vals: &[(i64, i64)]) -> UniSeries {
        UniSeries::from_coeffs(vals.iter().map(|&(n, d)| q(n, d)).collect(), vals.len() - 1)
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&q(3, 1)), "3/1");
        assert_eq!(format_rational(&q(-2, 4)), "-1/2");
        assert_eq!(format_rational(&q(1, -3)), "-1/3");
        assert_eq!(parse_rational("6/4").unwrap(), q(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), q(-7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn exp_of_x_is_exponential() {
        let x = UniSeries::monomial(q(1, 1), 1, 6);
        let e = x.exp().unwrap();
        for k in 0..=6 {
            assert_eq!(e.coeff(k), &inverse_factorial(k));
        }
        assert!(UniSeries::one(3).exp().is_err());
    }

    #[test]
    fn binomial_square_root() {
        // (1 - x)^(1/2) squared is 1 - x.
        let s = UniSeries::binomial(&q(1, 2), &q(-1, 1), 1, 10);
        let sq = &s * &s;
        assert_eq!(
            sq,
            uni(&[
                (1, 1),
                (-1, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1),
                (0, 1)
            ])
        );
        assert_eq!(s.coeff(2), &q(-1, 8));
        // Integer exponent reduces to a polynomial.
        let cube = UniSeries::binomial(&q(3, 1), &q(2, 1), 2, 8);
        assert_eq!(
            cube.coeffs(),
            uni(&[
                (1, 1),
                (0, 1),
                (6, 1),
                (0, 1),
                (12, 1),
                (0, 1),
                (8, 1),
                (0, 1),
                (0, 1)
            ])
            .coeffs()
        );
    }

    #[test]
    fn binomial_root_power_identity() {
        // ((1 - x^3)^(1/3))^3 = 1 - x^3
        let s = UniSeries::binomial(&q(1, 3), &q(-1, 1), 3, 24);
        let cube = &(&s * &s) * &s;
        let mut expected = UniSeries::one(24);
        expected = &expected - &UniSeries::monomial(q(1, 1), 3, 24);
        assert_eq!(cube, expected);
    }

    #[test]
    fn prefix_sums_divide_by_one_minus_x() {
        let s = uni(&[(1, 1), (2, 1), (3, 1)]);
        let one_minus_x = uni(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(&s.prefix_sums() * &one_minus_x, s);
    }

    #[test]
    fn substitution() {
        let e = UniSeries::monomial(q(1, 1), 1, 8).exp().unwrap();
        let sub = e.substitute_monomial(&q(1, 2), 2);
        assert_eq!(sub.coeff(2), &q(1, 2));
        assert_eq!(sub.coeff(4), &q(1, 8));
        assert_eq!(sub.coeff(3), &q(0, 1));
    }

    #[test]
    fn multi_truncation_and_json() {
        let t1 = MultiSeries::monomial(2, 4, 1, 1, q(1, 1));
        let t2 = MultiSeries::monomial(2, 4, 2, 1, q(1, 2));
        let e = (&t1 + &t2).exp().unwrap();
        assert!(e.terms().all(|(k, _)| MultiSeries::weight(k) <= 4));
        assert_eq!(e.coeff(&[2, 1]), q(1, 4));
        assert_eq!(e.coeff(&[0, 2]), q(1, 8));
        assert_eq!(e.coeff(&[4]), q(1, 24));
        assert_eq!(e.coeff(&[1, 2]), q(0, 1));
        let json = e.to_json();
        assert_eq!(json["2,1"], "1/4");
        assert_eq!(MultiSeries::from_json(&json, 2, 4).unwrap(), e);
        assert!(MultiSeries::from_json(&serde_json::json!({"1,1,1": "1/1"}), 2, 4).is_err());
        let u = uni(&[(1, 1), (0, 1), (1, 2)]);
        assert_eq!(u.to_json(), serde_json::json!(["1/1", "0/1", "1/2"]));
        assert_eq!(UniSeries::from_json(&u.to_json()).unwrap(), u);
    }

    fn arb_uni(order: usize) -> impl Strategy<Value = UniSeries> {
        prop::collection::vec((-5i64..=5, 1i64..=4), order).prop_map(move |v| {
            let mut coeffs = vec![BigRational::zero()];
            coeffs.extend(v.into_iter().map(|(n, d)| {
                if n % 2 == 0 {
                    BigRational::zero()
                } else {
                    q(n, d)
                }
            }));
            UniSeries::from_coeffs(coeffs, order)
        })
    }

    fn arb_multi() -> impl Strategy<Value = MultiSeries> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -4i64..=4, 1i64..=3), 0..5).prop_map(
            |terms| {
                let mut s = MultiSeries::zero(3, 6);
                for ((a, b, c), n, d) in terms {
                    if a + b + c > 0 {
                        s.add_term(&[a, b, c], q(n, d));
                    }
                }
                s
            },
        )
    }

    proptest! {
        #[test]
        fn uni_exp_is_a_homomorphism(a in arb_uni(10), b in arb_uni(10)) {
            let lhs = &a.exp().unwrap() * &b.exp().unwrap();
            prop_assert_eq!(lhs, (&a + &b).exp().unwrap());
        }

        #[test]
        fn multi_exp_is_a_homomorphism(a in arb_multi(), b in arb_multi()) {
            let lhs = &a.exp().unwrap() * &b.exp().unwrap();
            prop_assert_eq!(lhs, (&a + &b).exp().unwrap());
        }

        #[test]
        fn json_round_trip(a in arb_multi(), u in arb_uni(6)) {
            prop_assert_eq!(MultiSeries::from_json(&a.to_json(), 3, 6).unwrap(), a);
            prop_assert_eq!(UniSeries::from_json(&u.to_json()).unwrap(), u);
        }
    }
}
