//! Permutations, cycle types, powers, and m-th roots.
//!
//! Roots are produced by grouping the `ell`-cycles of `sigma` into bundles
//! whose sizes come from `G_m(ell, a_ell)` and interleaving each bundle of
//! `g` cycles into one `g*ell`-cycle. Within a bundle the cycle holding the
//! smallest point is the anchor: it sits at residue 0 and starts at its
//! smallest point, while every other cycle picks a residue and a rotation.
//! That yields `(g-1)! * ell^(g-1)` distinct root cycles per bundle.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gsets::{g_set_bounded, SolutionVector};
use crate::numtheory::bracket;

/// A bijection of `{1, ..., n}`, stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from zero-based images.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection of 0..{n}",
                    image
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation from one-line notation with one-based images.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        if one_line.contains(&0) {
            return Err(Error::InvalidPermutation(
                "one-line images are 1-based; found 0".into(),
            ));
        }
        Self::from_images(one_line.iter().map(|&x| x - 1).collect())
    }

    /// Builds a permutation of `{0..n}` from disjoint zero-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n || touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {:?} are not disjoint within 0..{n}",
                        cycles
                    )));
                }
                touched[x] = true;
                image[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Zero-based image of the zero-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// One-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|&x| x + 1).collect()
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different degree"
        );
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        Permutation { image }
    }

    /// `other * self * other^-1`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.compose(self).compose(&other.inverse())
    }

    /// Disjoint cycles (fixed points included), each listed from its smallest
    /// point, ordered by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut a = vec![0u64; self.len()];
        for c in self.cycles() {
            a[c.len() - 1] += 1;
        }
        CycleType { a }
    }

    /// `self^m`, computed cycle by cycle.
    pub fn power(&self, m: u64) -> Permutation {
        let mut image = vec![0; self.len()];
        for cycle in self.cycles() {
            let len = cycle.len();
            let shift = (m % len as u64) as usize;
            for (i, &x) in cycle.iter().enumerate() {
                image[x] = cycle[(i + shift) % len];
            }
        }
        Permutation { image }
    }

    /// Cycle notation with one-based points, fixed points omitted.
    pub fn cycle_notation(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.iter().map(|x| x + 1).join(" ")))
            .collect();
        if parts.is_empty() {
            "()".into()
        } else {
            parts.concat()
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.image.iter().map(|x| x + 1).join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses space-separated one-line images, e.g. `"2 3 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad image `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(&images)
    }
}

/// Cycle multiplicities `(a_1, ..., a_n)` with `sum(i * a_i) = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    a: Vec<u64>,
}

impl CycleType {
    /// Takes `a[i]` as the number of `(i+1)`-cycles; the length of `a` is `n`.
    pub fn new(a: Vec<u64>) -> Result<Self> {
        let weight: u64 = a
            .iter()
            .enumerate()
            .map(|(i, &ai)| (i as u64 + 1) * ai)
            .sum();
        if weight != a.len() as u64 {
            return Err(Error::InvalidCycleType(format!(
                "sum of i*a_i is {weight} but the vector has length {}",
                a.len()
            )));
        }
        Ok(CycleType { a })
    }

    /// From `(ell, a_ell)` pairs; `n` is the total weight.
    pub fn from_pairs(pairs: &[(usize, u64)]) -> Result<Self> {
        let mut n = 0usize;
        for &(ell, count) in pairs {
            if ell == 0 {
                return Err(Error::InvalidCycleType("cycle length 0".into()));
            }
            n = (count as usize)
                .checked_mul(ell)
                .and_then(|w| n.checked_add(w))
                .ok_or(Error::Overflow("cycle type weight"))?;
        }
        let mut a = vec![0u64; n];
        for &(ell, count) in pairs {
            if count > 0 {
                a[ell - 1] += count;
            }
        }
        Ok(CycleType { a })
    }

    /// `1^n`, the type of the identity.
    pub fn identity(n: usize) -> Self {
        let mut a = vec![0u64; n];
        if n > 0 {
            a[0] = n as u64;
        }
        CycleType { a }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.a
    }

    /// Number of `ell`-cycles.
    pub fn count(&self, ell: usize) -> u64 {
        if ell == 0 {
            0
        } else {
            self.a.get(ell - 1).copied().unwrap_or(0)
        }
    }

    /// `(ell, a_ell)` for every `a_ell > 0`, increasing in `ell`.
    pub fn parts(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.a
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i + 1, c))
    }

    /// Size of the conjugacy class: `n! / prod(ell^a_ell * a_ell!)`.
    pub fn class_size(&self) -> BigUint {
        let mut denom = BigUint::one();
        for (ell, count) in self.parts() {
            denom *= BigUint::from(ell).pow(count as u32) * factorial(count);
        }
        factorial(self.n() as u64) / denom
    }

    /// Every cycle type of weight `n` (the integer partitions of `n`).
    pub fn all_of_weight(n: usize) -> Vec<CycleType> {
        fn rec(remaining: usize, max_part: usize, a: &mut Vec<u64>, out: &mut Vec<CycleType>) {
            if remaining == 0 {
                out.push(CycleType { a: a.clone() });
                return;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                a[part - 1] += 1;
                rec(remaining - part, part, a, out);
                a[part - 1] -= 1;
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut vec![0; n], &mut out);
        out
    }

    /// A representative permutation whose cycles consume points in order.
    pub fn representative(&self) -> Permutation {
        let mut cycles = Vec::new();
        let mut next = 0;
        for (ell, count) in self.parts() {
            for _ in 0..count {
                cycles.push((next..next + ell).collect::<Vec<_>>());
                next += ell;
            }
        }
        Permutation::from_cycles(self.n(), &cycles).expect("consecutive disjoint cycles")
    }
}

impl fmt::Display for CycleType {
    /// `"1^a1 2^a2 ..."` with zero multiplicities omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.parts().map(|(ell, c)| format!("{ell}^{c}")).join(" ")
        )
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Whitespace-separated `ell^a` tokens, `ell` strictly increasing and
    /// `a >= 1`; a bare `ell` means `ell^1`.
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs: Vec<(usize, u64)> = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::InvalidCycleType(format!("bad token `{tok}`"));
            let (ell, count) = match tok.split_once('^') {
                Some((l, c)) => (
                    l.parse::<usize>().map_err(|_| bad())?,
                    c.parse::<u64>().map_err(|_| bad())?,
                ),
                None => (tok.parse::<usize>().map_err(|_| bad())?, 1),
            };
            if ell == 0 || count == 0 {
                return Err(bad());
            }
            if let Some(&(prev, _)) = pairs.last() {
                if ell == prev {
                    return Err(Error::InvalidCycleType(format!("duplicate length {ell}")));
                }
                if ell < prev {
                    return Err(Error::InvalidCycleType(format!(
                        "lengths must increase; {ell} follows {prev}"
                    )));
                }
            }
            pairs.push((ell, count));
        }
        CycleType::from_pairs(&pairs)
    }
}

pub(crate) fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// Root-existence criterion: `((ell, m))` divides `a_ell` for every `ell`.
pub fn has_mth_root(t: &CycleType, m: u64) -> Result<bool> {
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    for (ell, count) in t.parts() {
        if count % bracket(ell as u64, m)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `ell`-cycles of `sigma` together with their admissible groupings.
#[derive(Debug, Clone)]
struct LengthClass {
    ell: usize,
    cycles: Vec<Vec<usize>>,
    sizes: Vec<u64>,
    splits: Vec<SolutionVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Choice {
    /// Index into `splits` of the current length class.
    Split(usize),
    /// Bundle of size `sizes[size]` made of the lowest unassigned cycle and `members`.
    Bundle { size: usize, members: Vec<usize> },
    /// Next residue of the bundle being placed gets `cycle`, rotated by `offset`.
    Place { cycle: usize, offset: usize },
}

#[derive(Debug, Clone)]
struct Bundle {
    g: usize,
    anchor: usize,
    members: Vec<usize>,
    placed: Vec<(usize, usize)>,
}

#[derive(Debug, Default)]
struct ClassProgress {
    quota: Option<Vec<u64>>,
    assigned: Vec<bool>,
    bundles: Vec<Bundle>,
    placing: usize,
}

impl ClassProgress {
    fn all_assigned(&self) -> bool {
        self.quota.is_some() && self.assigned.iter().all(|&x| x)
    }
}

struct Replay {
    class: usize,
    progress: ClassProgress,
    image: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
struct RootPlan {
    n: usize,
    m: u64,
    classes: Vec<LengthClass>,
}

impl RootPlan {
    fn new(sigma: &Permutation, m: u64) -> Result<Self> {
        let ty = sigma.cycle_type();
        let all_cycles = sigma.cycles();
        let mut classes = Vec::new();
        for (ell, count) in ty.parts() {
            let set = g_set_bounded(m, ell as u64, count)?;
            classes.push(LengthClass {
                ell,
                cycles: all_cycles
                    .iter()
                    .filter(|c| c.len() == ell)
                    .cloned()
                    .collect(),
                splits: set.solutions(count),
                sizes: set.elements().to_vec(),
            });
        }
        Ok(RootPlan {
            n: sigma.len(),
            m,
            classes,
        })
    }

    fn replay(&self, path: &[Choice], build: bool) -> Replay {
        let mut state = Replay {
            class: 0,
            progress: ClassProgress::default(),
            image: build.then(|| (0..self.n).collect()),
        };
        for choice in path {
            let class = &self.classes[state.class];
            let progress = &mut state.progress;
            match choice {
                Choice::Split(i) => {
                    progress.quota = Some(class.splits[*i].coords().to_vec());
                    progress.assigned = vec![false; class.cycles.len()];
                }
                Choice::Bundle { size, members } => {
                    let anchor = progress
                        .assigned
                        .iter()
                        .position(|&x| !x)
                        .expect("bundle chosen with every cycle assigned");
                    progress.quota.as_mut().expect("split chosen")[*size] -= 1;
                    progress.assigned[anchor] = true;
                    for &c in members {
                        progress.assigned[c] = true;
                    }
                    progress.bundles.push(Bundle {
                        g: class.sizes[*size] as usize,
                        anchor,
                        members: members.clone(),
                        placed: Vec::new(),
                    });
                }
                Choice::Place { cycle, offset } => {
                    progress.bundles[progress.placing]
                        .placed
                        .push((*cycle, *offset));
                }
            }
            self.settle(&mut state);
        }
        state
    }

    // Skips bundles that need no more placements and closes out finished classes.
    fn settle(&self, state: &mut Replay) {
        let progress = &mut state.progress;
        if !progress.all_assigned() {
            return;
        }
        while progress.placing < progress.bundles.len() {
            let b = &progress.bundles[progress.placing];
            if b.placed.len() + 1 < b.g {
                return;
            }
            progress.placing += 1;
        }
        if let Some(image) = state.image.as_mut() {
            let class = &self.classes[state.class];
            for bundle in &progress.bundles {
                self.write_bundle(class, bundle, image);
            }
        }
        state.class += 1;
        state.progress = ClassProgress::default();
    }

    /// Lays out the `g*ell`-cycle `d` so that `d^m` restricted to residue
    /// `r` mod `g` walks the `r`-th cycle of the bundle.
    fn write_bundle(&self, class: &LengthClass, bundle: &Bundle, image: &mut [usize]) {
        let ell = class.ell;
        let g = bundle.g;
        let len = g * ell;
        let step = ((self.m / g as u64) % ell as u64) as usize;
        let mut d = vec![usize::MAX; len];
        let residues = std::iter::once((bundle.anchor, 0)).chain(bundle.placed.iter().copied());
        for (r, (cycle, offset)) in residues.enumerate() {
            let points = &class.cycles[cycle];
            for k in 0..ell {
                d[r + g * ((k * step) % ell)] = points[(offset + k) % ell];
            }
        }
        for i in 0..len {
            image[d[i]] = d[(i + 1) % len];
        }
    }

    fn is_complete(&self, path: &[Choice]) -> bool {
        self.replay(path, false).class == self.classes.len()
    }

    fn choices(&self, path: &[Choice]) -> Vec<Choice> {
        let state = self.replay(path, false);
        if state.class == self.classes.len() {
            return Vec::new();
        }
        let class = &self.classes[state.class];
        let progress = &state.progress;
        let Some(quota) = progress.quota.as_ref() else {
            return (0..class.splits.len()).map(Choice::Split).collect();
        };
        if !progress.all_assigned() {
            let free: Vec<usize> = (0..class.cycles.len())
                .filter(|&c| !progress.assigned[c])
                .collect();
            let mut out = Vec::new();
            for (size, &left) in quota.iter().enumerate() {
                if left == 0 {
                    continue;
                }
                let g = class.sizes[size] as usize;
                for members in free[1..].iter().copied().combinations(g - 1) {
                    out.push(Choice::Bundle { size, members });
                }
            }
            return out;
        }
        let bundle = &progress.bundles[progress.placing];
        let mut out = Vec::new();
        for &cycle in &bundle.members {
            if bundle.placed.iter().any(|&(c, _)| c == cycle) {
                continue;
            }
            for offset in 0..class.ell {
                out.push(Choice::Place { cycle, offset });
            }
        }
        out
    }
}

/// Lazy stream of every m-th root of a permutation, each verified by
/// re-powering before it is yielded.
pub struct Roots {
    sigma: Permutation,
    plan: RootPlan,
    path: Vec<Choice>,
    stack: Vec<(Vec<Choice>, usize)>,
    started: bool,
}

impl Roots {
    fn emit(&self) -> Permutation {
        let image = self
            .plan
            .replay(&self.path, true)
            .image
            .expect("image requested");
        let tau = Permutation { image };
        assert_eq!(
            tau.power(self.plan.m),
            self.sigma,
            "constructed root {tau} does not power back to {}",
            self.sigma
        );
        tau
    }
}

impl Iterator for Roots {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if !self.started {
            self.started = true;
            if self.plan.is_complete(&self.path) {
                return Some(self.emit());
            }
            let options = self.plan.choices(&self.path);
            self.stack.push((options, 0));
        }
        loop {
            let (options, idx) = self.stack.last_mut()?;
            if *idx > 0 {
                self.path.pop();
            }
            if *idx == options.len() {
                self.stack.pop();
                continue;
            }
            let choice = options[*idx].clone();
            *idx += 1;
            self.path.push(choice);
            if self.plan.is_complete(&self.path) {
                return Some(self.emit());
            }
            let options = self.plan.choices(&self.path);
            self.stack.push((options, 0));
        }
    }
}

/// Streams every `tau` with `tau^m = sigma`. The stream is empty exactly
/// when `sigma` has no m-th root.
pub fn enumerate_roots(sigma: &Permutation, m: u64) -> Result<Roots> {
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    Ok(Roots {
        sigma: sigma.clone(),
        plan: RootPlan::new(sigma, m)?,
        path: Vec::new(),
        stack: Vec::new(),
        started: false,
    })
}

/// Size limit for the exhaustive scan of `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_n: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n: 8 }
    }
}

fn power_by_repeated_composition(tau: &Permutation, m: u64) -> Permutation {
    let mut acc = Permutation::identity(tau.len());
    for _ in 0..m {
        acc = tau.compose(&acc);
    }
    acc
}

/// Exhaustive scan of `S_n` for all `tau` with `tau^m = sigma`, in
/// lexicographic one-line order. Independent of the root construction.
pub fn brute_force_roots(
    sigma: &Permutation,
    m: u64,
    config: &OracleConfig,
) -> Result<Vec<Permutation>> {
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    let n = sigma.len();
    if n > config.max_n {
        return Err(Error::OracleBound {
            n,
            bound: config.max_n,
        });
    }
    // tau^m = tau^(m mod order(tau))
    Ok((0..n)
        .permutations(n)
        .map(|image| Permutation { image })
        .filter(|tau| {
            let order = tau
                .cycles()
                .iter()
                .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64));
            power_by_repeated_composition(tau, m % order) == *sigma
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ct(a: &[u64]) -> CycleType {
        CycleType::new(a.to_vec()).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let p = perm("2 3 1");
        assert_eq!(p.images(), &[1, 2, 0]);
        assert_eq!(p.to_string(), "2 3 1");
        assert_eq!(p.cycle_notation(), "(1 2 3)");
        assert_eq!(perm("").len(), 0);
        assert!("2 2 1".parse::<Permutation>().is_err());
        assert!("0 1".parse::<Permutation>().is_err());
        assert!("1 x".parse::<Permutation>().is_err());
        assert!("3 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(3).cycle_type(), ct(&[3, 0, 0]));
        assert_eq!(perm("2 3 1").cycle_type(), ct(&[0, 0, 1]));
        assert_eq!(perm("2 1 4 3 5").cycle_type(), ct(&[1, 2, 0, 0, 0]));
        assert_eq!(Permutation::identity(0).cycle_type(), ct(&[]));
    }

    #[test]
    fn cycle_type_text() {
        let t: CycleType = "1^4".parse().unwrap();
        assert_eq!(t, ct(&[4, 0, 0, 0]));
        let t: CycleType = "1 2^2 4".parse().unwrap();
        assert_eq!(t.n(), 9);
        assert_eq!(t.to_string(), "1^1 2^2 4^1");
        assert_eq!("".parse::<CycleType>().unwrap().n(), 0);
        assert!("2^1 2^3".parse::<CycleType>().is_err());
        assert!("3 2".parse::<CycleType>().is_err());
        assert!("2^0".parse::<CycleType>().is_err());
        assert!("0^2".parse::<CycleType>().is_err());
        assert!("a^b".parse::<CycleType>().is_err());
        assert!(CycleType::new(vec![1, 1]).is_err());
    }

    #[test]
    fn partitions_are_complete() {
        let counts: Vec<usize> = (0..=10)
            .map(|n| CycleType::all_of_weight(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let total: BigUint = CycleType::all_of_weight(6)
            .iter()
            .map(|t| t.class_size())
            .sum();
        assert_eq!(total, BigUint::from(720u32));
    }

    #[test]
    fn power_examples() {
        let s = perm("3 1 4 2");
        assert_eq!(s.power(1), s);
        assert_eq!(perm("2 3 1").power(3), Permutation::identity(3));
        let eight = perm("2 3 4 5 6 7 8 1");
        assert_eq!(eight.power(2).cycle_type(), ct(&[0, 0, 0, 2, 0, 0, 0, 0]));
        assert_eq!(eight.power(2), power_by_repeated_composition(&eight, 2));
    }

    #[test]
    fn existence_examples() {
        for m in 1..10 {
            assert!(has_mth_root(&CycleType::identity(5), m).unwrap());
        }
        assert!(!has_mth_root(&ct(&[0, 0, 0, 1]), 2).unwrap());
        assert!(has_mth_root(&ct(&[0, 2, 0, 0]), 2).unwrap());
        assert!(has_mth_root(&ct(&[]), 3).unwrap());
        assert!(has_mth_root(&ct(&[1]), 0).is_err());
    }

    #[test]
    fn enumerate_roots_examples() {
        let roots: Vec<_> = enumerate_roots(&Permutation::identity(2), 2)
            .unwrap()
            .collect();
        // eps = (0,1) precedes (2,0), so the fused transposition comes first.
        assert_eq!(roots, vec![perm("2 1"), Permutation::identity(2)]);
        assert_eq!(
            enumerate_roots(&Permutation::identity(4), 2)
                .unwrap()
                .count(),
            10
        );
        let roots: Vec<_> = enumerate_roots(&perm("2 3 1"), 2).unwrap().collect();
        assert_eq!(roots, vec![perm("3 1 2")]);
        assert_eq!(enumerate_roots(&perm("2 3 4 1"), 2).unwrap().count(), 0);
    }

    #[test]
    fn square_roots_of_two_transpositions() {
        let roots: BTreeSet<_> = enumerate_roots(&perm("2 1 4 3"), 2).unwrap().collect();
        let expected: BTreeSet<_> = [
            Permutation::from_cycles(4, &[vec![0, 2, 1, 3]]).unwrap(),
            Permutation::from_cycles(4, &[vec![0, 3, 1, 2]]).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(roots, expected);
    }

    #[test]
    fn empty_permutation_is_its_own_root() {
        let empty = Permutation::identity(0);
        for m in 1..6 {
            let roots: Vec<_> = enumerate_roots(&empty, m).unwrap().collect();
            assert_eq!(roots, vec![empty.clone()]);
            assert_eq!(
                brute_force_roots(&empty, m, &OracleConfig::default()).unwrap(),
                roots
            );
        }
    }

    #[test]
    fn brute_force_examples() {
        let cfg = OracleConfig::default();
        for m in 1..5 {
            assert_eq!(
                brute_force_roots(&Permutation::identity(1), m, &cfg).unwrap(),
                vec![Permutation::identity(1)]
            );
        }
        assert!(brute_force_roots(&perm("2 1"), 2, &cfg).unwrap().is_empty());
        assert_eq!(
            brute_force_roots(&Permutation::identity(4), 2, &cfg)
                .unwrap()
                .len(),
            10
        );
        assert_eq!(
            brute_force_roots(&Permutation::identity(9), 2, &cfg),
            Err(Error::OracleBound { n: 9, bound: 8 })
        );
        let small = OracleConfig { max_n: 3 };
        assert!(brute_force_roots(&Permutation::identity(4), 2, &small).is_err());
    }

    #[test]
    fn roots_match_oracle_through_s5() {
        let cfg = OracleConfig::default();
        for n in 0..=5 {
            for image in (0..n).permutations(n) {
                let sigma = Permutation::from_images(image).unwrap();
                for m in [2u64, 3, 4, 6] {
                    let built: Vec<_> = enumerate_roots(&sigma, m).unwrap().collect();
                    let built_set: BTreeSet<_> = built.iter().cloned().collect();
                    assert_eq!(
                        built.len(),
                        built_set.len(),
                        "duplicate roots for {sigma}, m={m}"
                    );
                    let scanned: BTreeSet<_> = brute_force_roots(&sigma, m, &cfg)
                        .unwrap()
                        .into_iter()
                        .collect();
                    assert_eq!(built_set, scanned, "sigma={sigma} m={m}");
                    assert_eq!(
                        built.is_empty(),
                        !has_mth_root(&sigma.cycle_type(), m).unwrap()
                    );
                }
            }
        }
    }

    fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
        (0..=max_n)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|image| Permutation::from_images(image).unwrap())
    }

    proptest! {
        #[test]
        fn splitting_law(tau in arb_perm(12), m in 1u64..=12) {
            let sigma = tau.power(m);
            for c in tau.cycles() {
                let len = c.len() as u64;
                let pieces = num_integer::gcd(len, m) as usize;
                let support: BTreeSet<usize> = c.iter().copied().collect();
                let inner: Vec<Vec<usize>> = sigma
                    .cycles()
                    .into_iter()
                    .filter(|d| support.contains(&d[0]))
                    .collect();
                prop_assert_eq!(inner.len(), pieces);
                prop_assert!(inner.iter().all(|d| d.len() == c.len() / pieces));
            }
        }

        #[test]
        fn power_matches_repeated_composition(tau in arb_perm(9), m in 0u64..=15) {
            prop_assert_eq!(tau.power(m), power_by_repeated_composition(&tau, m));
        }

        #[test]
        fn conjugates_have_equally_many_roots(
            sigma in arb_perm(7),
            shuffle in Just((0..7).collect::<Vec<usize>>()).prop_shuffle(),
            m in 2u64..=6,
        ) {
            let n = sigma.len();
            let conj_image: Vec<usize> = shuffle.into_iter().filter(|&x| x < n).collect();
            let h = Permutation::from_images(conj_image).unwrap();
            let other = sigma.conjugate_by(&h);
            prop_assert_eq!(other.cycle_type(), sigma.cycle_type());
            let a = enumerate_roots(&sigma, m).unwrap().count();
            let b = enumerate_roots(&other, m).unwrap().count();
            prop_assert_eq!(a, b);
            // Conjugating each root of sigma gives a root of the conjugate.
            for tau in enumerate_roots(&sigma, m).unwrap().take(20) {
                prop_assert_eq!(tau.conjugate_by(&h).power(m), other.clone());
            }
        }
    }
}
