//! The fusion-size sets `G_m(ell)` / `G_m(ell, a)` and the solution sets
//! `E_m(ell, a)` of `g . eps = a` over the non-negative integers.
//!
//! A member `g` of `G_m(ell)` is a number of `ell`-cycles of a permutation
//! that can fuse into a single `g*ell`-cycle of an m-th root. A solution
//! vector records how many root cycles of each fused size are used.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numtheory::{bracket, divisors};

/// `G_m(ell)` (when `bound` is `None`) or `G_m(ell, a)` with `a = bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    m: u64,
    ell: u64,
    bound: Option<u64>,
    elements: Vec<u64>,
}

impl GSet {
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn bound(&self) -> Option<u64> {
        self.bound
    }

    /// The associate vector: the elements in increasing order.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: u64) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// All solutions of `g . eps = a` for this set's associate vector.
    pub fn solutions(&self, a: u64) -> Vec<SolutionVector> {
        enumerate_solutions(&self.elements, a)
    }
}

/// One element of `E_m(ell, a)`, aligned with an associate vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SolutionVector(Vec<u64>);

impl SolutionVector {
    pub fn new(coords: Vec<u64>) -> Self {
        SolutionVector(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn dot(&self, g: &[u64]) -> u64 {
        self.0.iter().zip(g).map(|(e, g)| e * g).sum()
    }
}

fn in_g_set_by_definition(g: u64, ell: u64, m: u64) -> bool {
    (g * ell).gcd(&m) == g
}

/// `G_m(ell)`, built as `{ m/d : d | m, gcd(d, ell) = 1 }`.
pub fn g_set(m: u64, ell: u64) -> Result<GSet> {
    if m == 0 {
        return Err(Error::ZeroArgument("m"));
    }
    if ell == 0 {
        return Err(Error::ZeroArgument("ell"));
    }
    let mut elements: Vec<u64> = divisors(m)?
        .into_iter()
        .filter(|d| d.gcd(&ell) == 1)
        .map(|d| m / d)
        .collect();
    elements.sort_unstable();
    for &g in &elements {
        assert!(
            in_g_set_by_definition(g, ell, m),
            "divisor construction produced {g} outside G_{m}({ell})"
        );
    }
    Ok(GSet {
        m,
        ell,
        bound: None,
        elements,
    })
}

/// `G_m(ell, a)`: the members of `G_m(ell)` not exceeding `a`.
pub fn g_set_bounded(m: u64, ell: u64, a: u64) -> Result<GSet> {
    let mut set = g_set(m, ell)?;
    set.elements.retain(|&g| g <= a);
    set.bound = Some(a);
    Ok(set)
}

fn validate_associate_vector(g: &[u64]) -> Result<()> {
    if g.first().is_some_and(|&g0| g0 == 0) || g.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidAssociateVector);
    }
    Ok(())
}

/// `reachable[i][r]`: whether `r` is a non-negative combination of `g[i..]`.
fn reachability(g: &[u64], a: u64) -> Vec<Vec<bool>> {
    let a = a as usize;
    let mut table = vec![vec![false; a + 1]; g.len() + 1];
    table[g.len()][0] = true;
    for i in (0..g.len()).rev() {
        let gi = g[i] as usize;
        for r in 0..=a {
            table[i][r] = table[i + 1][r] || (r >= gi && table[i][r - gi]);
        }
    }
    table
}

fn enumerate_solutions(g: &[u64], a: u64) -> Vec<SolutionVector> {
    let reach = reachability(g, a);
    let mut out = Vec::new();
    if !reach[0][a as usize] {
        return out;
    }
    let mut current = vec![0u64; g.len()];
    fill(g, &reach, 0, a, &mut current, &mut out);
    out
}

// Depth-first over coordinates with ascending values; the reachability
// table prunes every branch that cannot be completed.
fn fill(
    g: &[u64],
    reach: &[Vec<bool>],
    i: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<SolutionVector>,
) {
    if i == g.len() {
        debug_assert_eq!(remaining, 0);
        out.push(SolutionVector(current.clone()));
        return;
    }
    let mut e = 0u64;
    while e * g[i] <= remaining {
        let rest = remaining - e * g[i];
        if reach[i + 1][rest as usize] {
            current[i] = e;
            fill(g, reach, i + 1, rest, current, out);
        }
        e += 1;
    }
    current[i] = 0;
}

/// All `eps` with `g . eps = a`, in lexicographic order.
pub fn epsilon_set(g: &[u64], a: u64) -> Result<Vec<SolutionVector>> {
    validate_associate_vector(g)?;
    Ok(enumerate_solutions(g, a))
}

/// Whether `a` ell-cycles can be grouped into root cycles: `((ell, m)) | a`.
pub fn is_solvable(m: u64, ell: u64, a: u64) -> Result<bool> {
    let divisible = a.is_multiple_of(bracket(ell, m)?);
    if a >= 1 {
        let set = g_set_bounded(m, ell, a)?;
        let has_solution = reachability(set.elements(), a)[0][a as usize];
        assert_eq!(
            divisible, has_solution,
            "solvability routes disagree for m={m} ell={ell} a={a}"
        );
    }
    Ok(divisible)
}
