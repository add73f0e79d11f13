//! Integer partitions, Stirling and Bell numbers, and partition-indexed
//! polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coefficients::{factorial, Polynomial, Rational};
use crate::error::{domain, Result, UmbralError};

/// A partition of `n`, stored as `(part, multiplicity)` pairs with strictly
/// decreasing parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<(usize, usize)>,
    n: usize,
    nu: usize,
}

impl Partition {
    /// Builds a partition from a list of positive parts in any order.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        if parts.contains(&0) {
            return Err(domain("partition parts must be positive"));
        }
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        for p in sorted {
            match blocks.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => blocks.push((p, 1)),
            }
        }
        Ok(Partition {
            n: parts.iter().sum(),
            nu: parts.len(),
            blocks,
        })
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts, counted with multiplicity.
    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Parts in descending order, repeated by multiplicity.
    pub fn parts(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|&(p, m)| std::iter::repeat_n(p, m))
            .collect()
    }

    /// Product `∏ a_j^{m_j}` with `a[j-1]` standing for `a_j`.
    pub fn monomial_in(&self, a: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::one();
        for &(j, m) in &self.blocks {
            acc = &acc * &a[j - 1].pow(m as u32);
        }
        acc
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All partitions of `n` in reverse-lexicographic order; `partitions(0)` is
/// the single empty partition.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(current).expect("positive parts"));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `c_π = n! / (∏ (j!)^{m_j} ∏ m_j!)`, the number of set partitions of shape π.
pub fn c_pi(p: &Partition) -> Rational {
    let mut denom = BigInt::one();
    for &(j, m) in &p.blocks {
        denom *= num_traits::pow(factorial(j), m) * factorial(m);
    }
    Rational::new(factorial(p.n), denom)
}

/// `d_π = c_π (-1)^{ν-1} (ν-1)!`.
pub fn d_pi(p: &Partition) -> Rational {
    if p.nu == 0 {
        return Rational::zero();
    }
    let sign = if (p.nu - 1).is_multiple_of(2) { 1 } else { -1 };
    c_pi(p) * Rational::from_integer(factorial(p.nu - 1) * BigInt::from(sign))
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(domain(format!("Stirling index out of range: k = {k} > n = {n}")));
    }
    Ok(())
}

/// Row `n` of the Stirling triangle of the second kind, `S(n, 0..=n)`.
fn stirling2_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let carry = if k < m { &row[k] * BigInt::from(k) } else { BigInt::zero() };
            next[k] = &row[k - 1] + carry;
        }
        row = next;
    }
    row
}

/// Row `n` of the signed Stirling triangle of the first kind.
fn stirling1_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let carry = if k < m {
                &row[k] * BigInt::from(m - 1)
            } else {
                BigInt::zero()
            };
            next[k] = &row[k - 1] - carry;
        }
        row = next;
    }
    row
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> Result<Rational> {
    check_range(n, k)?;
    Ok(Rational::from_integer(stirling2_row(n).swap_remove(k)))
}

/// Signed Stirling number of the first kind `s(n, k)`: the coefficient of
/// `x^k` in `(x)_n`.
pub fn stirling1(n: usize, k: usize) -> Result<Rational> {
    check_range(n, k)?;
    Ok(Rational::from_integer(stirling1_row(n).swap_remove(k)))
}

/// Lower-triangular table `S(n, k)` for `0 <= k <= n <= max_n`.
pub fn stirling2_table(max_n: usize) -> Vec<Vec<Rational>> {
    (0..=max_n)
        .map(|n| stirling2_row(n).into_iter().map(Rational::from_integer).collect())
        .collect()
}

/// Lower-triangular table `s(n, k)` for `0 <= k <= n <= max_n`.
pub fn stirling1_table(max_n: usize) -> Vec<Vec<Rational>> {
    (0..=max_n)
        .map(|n| stirling1_row(n).into_iter().map(Rational::from_integer).collect())
        .collect()
}

/// Bell number `B_n` via the Bell triangle.
pub fn bell_number(n: usize) -> Rational {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("nonempty").clone());
        for v in &row {
            let s = next.last().expect("nonempty") + v;
            next.push(s);
        }
        row = next;
    }
    Rational::from_integer(row.swap_remove(0))
}

/// Lower factorial `x(x-1)...(x-n+1)`.
pub fn falling_factorial(x: &Polynomial, n: usize) -> Polynomial {
    (0..n).fold(Polynomial::one(), |acc, i| {
        &acc * &(x - &Polynomial::from(i as i64))
    })
}

fn needed_for(n: usize, k: usize) -> usize {
    if k == 0 || k > n {
        0
    } else {
        n - k + 1
    }
}

/// Partial Bell polynomial `B_{n,k}(a_1, ..., a_{n-k+1})` where `a[i]` holds
/// `a_{i+1}`. Computed by summing over the partitions of `n` with `k` parts.
/// `B_{0,0} = 1`, and `B_{n,0}` (n ≥ 1) and `B_{n,k}` (k > n) vanish.
pub fn bell_partial(n: usize, k: usize, a: &[Polynomial]) -> Result<Polynomial> {
    let needed = needed_for(n, k);
    if a.len() < needed {
        return Err(UmbralError::InsufficientCoefficients {
            needed,
            got: a.len(),
        });
    }
    if k > n || (k == 0 && n > 0) {
        return Ok(Polynomial::zero());
    }
    Ok(partitions(n)
        .iter()
        .filter(|p| p.nu() == k)
        .map(|p| p.monomial_in(a).scale(&c_pi(p)))
        .sum())
}

/// Complete Bell polynomial `Y_n = Σ_k B_{n,k}`.
pub fn bell_complete(n: usize, a: &[Polynomial]) -> Result<Polynomial> {
    if a.len() < n {
        return Err(UmbralError::InsufficientCoefficients {
            needed: n,
            got: a.len(),
        });
    }
    (0..=n).map(|k| bell_partial(n, k, a)).sum()
}

/// Every `B_{n,k}(a_1, ...)` for `0 <= k <= n <= max_n`, enumerating the
/// partitions of each `n` once. `a[i]` holds `a_{i+1}`.
#[derive(Clone, Debug)]
pub struct BellTable {
    rows: Vec<Vec<Polynomial>>,
}

impl BellTable {
    pub fn new(a: &[Polynomial], max_n: usize) -> Result<Self> {
        if a.len() < max_n {
            return Err(UmbralError::InsufficientCoefficients {
                needed: max_n,
                got: a.len(),
            });
        }
        // powers[j][m] = a_{j+1}^m, filled on demand
        let mut powers: Vec<Vec<Polynomial>> = a[..max_n]
            .iter()
            .map(|_| vec![Polynomial::one()])
            .collect();
        let mut rows = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![Polynomial::zero(); n + 1];
            for p in partitions(n) {
                let mut term = Polynomial::constant(c_pi(&p));
                for &(j, m) in p.blocks() {
                    let cache = &mut powers[j - 1];
                    while cache.len() <= m {
                        let next = cache.last().expect("nonempty") * &a[j - 1];
                        cache.push(next);
                    }
                    term = &term * &cache[m];
                }
                row[p.nu()] += &term;
            }
            rows.push(row);
        }
        Ok(BellTable { rows })
    }

    pub fn get(&self, n: usize, k: usize) -> Polynomial {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(Polynomial::zero)
    }

    pub fn row(&self, n: usize) -> &[Polynomial] {
        &self.rows[n]
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }
}
