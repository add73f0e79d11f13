//! Umbrae as truncated moment sequences and the operations of the umbral
//! algebra.
//!
//! An [`Umbra`] of order `N` stores `a_0 = 1, a_1, ..., a_N`. Similarity is
//! decided by comparing moments up to the smaller order; there is no notion of
//! identity beyond the moment data, so every value behaves as a fresh umbra
//! uncorrelated with all others.
//!
//! Dot-products map onto generating functions as follows, with `f` the g.f. of
//! `α` and `g` that of `γ`:
//!
//! | umbra     | g.f.                |
//! |-----------|---------------------|
//! | `α + γ`   | `f g`               |
//! | `α ∔ γ`   | `f + g - 1`         |
//! | `x.α`     | `f^x`               |
//! | `γ.α`     | `g(log f)`          |
//! | `γ.β.α`   | `g(f - 1)`          |
//! | `α^{<-1>}`| reversion of `f - 1`|

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coefficients::{binomial, Polynomial, Rational};
use crate::combinatorics::{bell_number, stirling1_table, stirling2_table, BellTable};
use crate::error::{domain, Result, UmbralError};
use crate::series::{log_one_plus_t, Egf};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "UmbraRepr", into = "UmbraRepr")]
pub struct Umbra {
    moments: Vec<Polynomial>,
}

#[derive(Serialize, Deserialize)]
struct UmbraRepr {
    order: usize,
    moments: Vec<Polynomial>,
}

impl TryFrom<UmbraRepr> for Umbra {
    type Error = UmbralError;
    fn try_from(r: UmbraRepr) -> Result<Self> {
        check_len(r.order, r.moments.len())?;
        Umbra::from_moments(r.moments)
    }
}

impl From<Umbra> for UmbraRepr {
    fn from(u: Umbra) -> Self {
        UmbraRepr {
            order: u.order(),
            moments: u.moments,
        }
    }
}

fn check_len(order: usize, len: usize) -> Result<()> {
    if len != order + 1 {
        return Err(domain(format!(
            "order {order} needs {} values, got {len}",
            order + 1
        )));
    }
    Ok(())
}

fn unit_leading(values: &[Polynomial], what: &str) -> Result<()> {
    match values.first() {
        Some(v) if v.is_one() => Ok(()),
        Some(v) => Err(domain(format!("{what} must start with 1, got {v}"))),
        None => Err(domain(format!("{what} must not be empty"))),
    }
}

/// Sign of a disjoint sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The named umbrae available from [`Umbra::canonical`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Canonical {
    /// ε: moments `δ_{0,n}`, g.f. 1.
    Epsilon,
    /// u: all moments 1, g.f. `e^t`.
    Unity,
    /// χ: moments `δ_{1,n}` for `n >= 1`, g.f. `1 + t`.
    Singleton,
    /// β: Bell numbers, g.f. `exp(e^t - 1)`.
    Bell,
    /// `u^{<-1>}`: moments `(-1)^{n-1} (n-1)!`, g.f. `1 + log(1 + t)`.
    UnityInverse,
    /// Bernoulli numbers with `B_1 = -1/2`.
    BernoulliNumbers,
    /// Inverse of the Bernoulli-number umbra: moments `1/(n+1)`.
    Uniform01,
}

impl Canonical {
    pub const ALL: [Canonical; 7] = [
        Canonical::Epsilon,
        Canonical::Unity,
        Canonical::Singleton,
        Canonical::Bell,
        Canonical::UnityInverse,
        Canonical::BernoulliNumbers,
        Canonical::Uniform01,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Canonical::Epsilon => "epsilon",
            Canonical::Unity => "unity",
            Canonical::Singleton => "singleton",
            Canonical::Bell => "bell",
            Canonical::UnityInverse => "unity_inverse",
            Canonical::BernoulliNumbers => "bernoulli_numbers",
            Canonical::Uniform01 => "uniform01",
        }
    }
}

impl fmt::Display for Canonical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Canonical {
    type Err = UmbralError;
    fn from_str(s: &str) -> Result<Self> {
        Canonical::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UmbralError::UnknownName(s.to_string()))
    }
}

/// Factorial moments `a_(0) = 1, a_(1), ..., a_(N)` with `a_(n) = E[(α)_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeqRepr", into = "SeqRepr")]
pub struct FactorialMoments {
    values: Vec<Polynomial>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct SeqRepr {
    pub(crate) order: usize,
    pub(crate) values: Vec<Polynomial>,
}

impl TryFrom<SeqRepr> for FactorialMoments {
    type Error = UmbralError;
    fn try_from(r: SeqRepr) -> Result<Self> {
        check_len(r.order, r.values.len())?;
        FactorialMoments::new(r.values)
    }
}

impl From<FactorialMoments> for SeqRepr {
    fn from(f: FactorialMoments) -> Self {
        SeqRepr {
            order: f.order(),
            values: f.values,
        }
    }
}

impl FactorialMoments {
    pub fn new(values: Vec<Polynomial>) -> Result<Self> {
        unit_leading(&values, "factorial moments")?;
        Ok(FactorialMoments { values })
    }

    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    /// The factorial umbra `φ_α`, whose moments are these values.
    pub fn as_umbra(&self) -> Umbra {
        Umbra {
            moments: self.values.clone(),
        }
    }
}

impl Umbra {
    /// Builds an umbra from `a_0, a_1, ..., a_N`; `a_0` must be 1.
    pub fn from_moments(moments: Vec<Polynomial>) -> Result<Self> {
        unit_leading(&moments, "moments")?;
        Ok(Umbra { moments })
    }

    /// Integer moments, mostly for tests and fixtures.
    pub fn from_integers(moments: &[i64]) -> Result<Self> {
        Umbra::from_moments(moments.iter().map(|&m| Polynomial::from(m)).collect())
    }

    /// Reads the g.f. coefficients as moments.
    pub fn from_egf(f: Egf) -> Result<Self> {
        Umbra::from_moments(f.into_coeffs())
    }

    pub fn to_egf(&self) -> Egf {
        Egf::new(self.moments.clone())
    }

    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moments(&self) -> &[Polynomial] {
        &self.moments
    }

    pub fn moment(&self, n: usize) -> &Polynomial {
        &self.moments[n]
    }

    pub fn truncate(&self, order: usize) -> Umbra {
        Umbra {
            moments: self.moments[..=order.min(self.order())].to_vec(),
        }
    }

    fn from_series(f: Egf) -> Umbra {
        debug_assert!(f.coeff(0).is_one());
        Umbra {
            moments: f.into_coeffs(),
        }
    }

    pub fn canonical(which: Canonical, order: usize) -> Umbra {
        let seq = |f: &dyn Fn(usize) -> Polynomial| Umbra {
            moments: (0..=order).map(f).collect(),
        };
        let delta = |i: usize| {
            move |n: usize| {
                if n == i || n == 0 {
                    Polynomial::one()
                } else {
                    Polynomial::zero()
                }
            }
        };
        match which {
            Canonical::Epsilon => seq(&delta(0)),
            Canonical::Unity => seq(&|_| Polynomial::one()),
            Canonical::Singleton => seq(&delta(1)),
            Canonical::Bell => seq(&|n| Polynomial::constant(bell_number(n))),
            Canonical::UnityInverse => Umbra::from_series(log_one_plus_t(order)),
            Canonical::BernoulliNumbers => Umbra {
                moments: bernoulli_numbers(order),
            },
            Canonical::Uniform01 => Umbra::canonical(Canonical::BernoulliNumbers, order).inverse(),
        }
    }

    pub fn epsilon(order: usize) -> Umbra {
        Umbra::canonical(Canonical::Epsilon, order)
    }

    pub fn unity(order: usize) -> Umbra {
        Umbra::canonical(Canonical::Unity, order)
    }

    pub fn singleton(order: usize) -> Umbra {
        Umbra::canonical(Canonical::Singleton, order)
    }

    pub fn bell(order: usize) -> Umbra {
        Umbra::canonical(Canonical::Bell, order)
    }

    pub fn unity_inverse(order: usize) -> Umbra {
        Umbra::canonical(Canonical::UnityInverse, order)
    }

    /// `α + γ`: moments `Σ C(n,i) a_i g_{n-i}`.
    pub fn sum(&self, other: &Umbra) -> Umbra {
        Umbra::from_series(self.to_egf().mul(&other.to_egf()))
    }

    /// The inverse umbra `-1.α'`, with `α + (-1.α') ≡ ε`.
    pub fn inverse(&self) -> Umbra {
        Umbra::from_series(self.to_egf().reciprocal().expect("unit constant term"))
    }

    /// `α ∔ γ` or `α ∸ γ`: moments `a_n ± g_n` for `n >= 1`.
    pub fn disjoint_sum(&self, other: &Umbra, sign: Sign) -> Umbra {
        let order = self.order().min(other.order());
        let moments = (0..=order)
            .map(|n| match (n, sign) {
                (0, _) => Polynomial::one(),
                (_, Sign::Plus) => &self.moments[n] + &other.moments[n],
                (_, Sign::Minus) => &self.moments[n] - &other.moments[n],
            })
            .collect();
        Umbra { moments }
    }

    /// `∔_n α`: moments `n a_r` for `r >= 1`; g.f. `1 + n (f - 1)`.
    pub fn disjoint_nfold(&self, n: u64) -> Result<Umbra> {
        if n == 0 {
            return Err(domain("disjoint n-fold sum needs n >= 1"));
        }
        Ok(self.disjoint_scaled(&Polynomial::from(n as i64)))
    }

    /// Moments `c a_r` for `r >= 1`, i.e. g.f. `1 + c (f - 1)`.
    pub(crate) fn disjoint_scaled(&self, c: &Polynomial) -> Umbra {
        let moments = self
            .moments
            .iter()
            .enumerate()
            .map(|(r, m)| if r == 0 { Polynomial::one() } else { m * c })
            .collect();
        Umbra { moments }
    }

    /// `n.α`, similar to a sum of `n` uncorrelated copies; `0.α ≡ ε`.
    pub fn dot_int(n: u64, a: &Umbra) -> Umbra {
        Umbra::from_series(a.to_egf().pow_int(n))
    }

    /// `x.α` with g.f. `f^x`.
    pub fn dot_poly(x: &Polynomial, a: &Umbra) -> Umbra {
        Umbra::from_series(a.to_egf().pow(x).expect("unit constant term"))
    }

    /// `γ.α` by `E[(γ.α)^n] = Σ_i g_(i) B_{n,i}(a_1, a_2, ...)`.
    pub fn dot(&self, a: &Umbra) -> Umbra {
        let order = self.order().min(a.order());
        let fm = self.truncate(order).factorial_moments();
        let table = BellTable::new(&a.moments[1..=order], order).expect("enough moments");
        let moments = (0..=order)
            .map(|n| (0..=n).map(|i| &fm.values[i] * &table.get(n, i)).sum())
            .collect();
        Umbra { moments }
    }

    /// `γ.α` through its g.f. `g(log f(t))`.
    pub fn dot_via_gf(&self, a: &Umbra) -> Umbra {
        let log_f = a.to_egf().log().expect("unit constant term");
        Umbra::from_series(self.to_egf().compose_delta(&log_f).expect("unit constant term"))
    }

    /// The composition umbra `γ.β.α` with g.f. `g(f(t) - 1)`.
    pub fn compose(&self, a: &Umbra) -> Umbra {
        Umbra::from_series(self.to_egf().compose_delta(&a.to_egf()).expect("unit constant term"))
    }

    /// `α^{<-1>}` with g.f. `f^{-1}` such that `f^{-1}(f(t) - 1) = 1 + t`.
    pub fn compositional_inverse(&self) -> Result<Umbra> {
        Ok(Umbra::from_series(self.to_egf().revert()?))
    }

    /// `α^{.n}`: moments `a_k^n`; `α^{.0} ≡ u`.
    pub fn product_power(&self, n: u32) -> Umbra {
        Umbra {
            moments: self.moments.iter().map(|m| m.pow(n)).collect(),
        }
    }

    /// `cα`: moments `c^n a_n`.
    pub fn scale(&self, c: &Polynomial) -> Umbra {
        let mut power = Polynomial::one();
        let mut moments = Vec::with_capacity(self.moments.len());
        for m in &self.moments {
            moments.push(m * &power);
            power = &power * c;
        }
        Umbra { moments }
    }

    /// `α - c.u`: moments about the point `c`.
    pub fn shift(&self, c: &Polynomial) -> Umbra {
        self.sum(&Umbra::dot_poly(&-c, &Umbra::unity(self.order())))
    }

    /// The central umbra `α - a_1.u`.
    pub fn central(&self) -> Umbra {
        match self.order() {
            0 => self.clone(),
            _ => self.shift(&self.moments[1]),
        }
    }

    /// `a_(n) = Σ_k s(n,k) a_k`.
    pub fn factorial_moments(&self) -> FactorialMoments {
        let s1 = stirling1_table(self.order());
        let values = (0..=self.order())
            .map(|n| {
                (0..=n)
                    .map(|k| self.moments[k].scale(&s1[n][k]))
                    .sum()
            })
            .collect();
        FactorialMoments { values }
    }

    /// Inverse Stirling transform `a_n = Σ_i S(n,i) a_(i)`.
    pub fn from_factorial_moments(fm: &FactorialMoments) -> Umbra {
        let s2 = stirling2_table(fm.order());
        let moments = (0..=fm.order())
            .map(|n| (0..=n).map(|i| fm.values[i].scale(&s2[n][i])).sum())
            .collect();
        Umbra { moments }
    }

    /// `ᾱ` with moments `a_{n+1} / (a_1 (n+1))`, of order `N - 1`. Needs `a_1`
    /// to be a nonzero constant.
    pub fn overline(&self) -> Result<Umbra> {
        let a1 = self.invertible_first_moment()?;
        let inv = a1.recip();
        let moments = (0..self.order())
            .map(|n| self.moments[n + 1].scale(&(&inv / Rational::from_integer((n as i64 + 1).into()))))
            .collect();
        Ok(Umbra { moments })
    }

    fn invertible_first_moment(&self) -> Result<Rational> {
        if self.order() == 0 {
            return Err(domain("first moment is not stored at order 0"));
        }
        match self.moments[1].as_constant() {
            Some(c) if !c.is_zero() => Ok(c),
            _ => Err(domain(format!(
                "first moment must be a nonzero constant, got {}",
                self.moments[1]
            ))),
        }
    }

    /// Similarity up to the smaller truncation order.
    pub fn is_similar(&self, other: &Umbra) -> bool {
        let order = self.order().min(other.order());
        self.moments[..=order] == other.moments[..=order]
    }
}

/// `B_{n,k}(a_1, ...)` evaluated as `C(n,k) E[α^{.k}] E[(k.ᾱ)^{n-k}]`, with
/// `E[α^{.k}] = a_1^k`.
pub fn bell_partial_via_overline(n: usize, k: usize, a: &Umbra) -> Result<Polynomial> {
    if k == 0 || k > n {
        return Err(domain(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
    }
    if a.order() < n - k + 1 {
        return Err(UmbralError::InsufficientCoefficients {
            needed: n - k + 1,
            got: a.order(),
        });
    }
    let bar = a.truncate(n - k + 1).overline()?;
    let power = Umbra::dot_int(k as u64, &bar);
    let a1k = a.moments[1].pow(k as u32);
    Ok((&a1k * power.moment(n - k)).scale(&Rational::from_integer(binomial(n, k))))
}

/// Mixture `Σ p_i f_i(t)` of umbrae with weights summing to 1.
pub fn mixture(components: &[(Polynomial, Umbra)]) -> Result<Umbra> {
    if components.is_empty() {
        return Err(domain("mixture needs at least one component"));
    }
    let total: Polynomial = components.iter().map(|(w, _)| w.clone()).sum();
    if !total.is_one() {
        return Err(domain(format!("mixture weights sum to {total}, not 1")));
    }
    let order = components.iter().map(|(_, u)| u.order()).min().expect("nonempty");
    let moments = (0..=order)
        .map(|n| match n {
            0 => Polynomial::one(),
            _ => components.iter().map(|(w, u)| w * &u.moments[n]).sum(),
        })
        .collect();
    Ok(Umbra { moments })
}

/// Bernoulli numbers from `Σ_{k<=n} C(n,k) B_k = B_n` for `n >= 2`, `B_0 = 1`,
/// which forces `B_1 = -1/2`.
fn bernoulli_numbers(order: usize) -> Vec<Polynomial> {
    let mut b: Vec<Rational> = vec![Rational::from_integer(1.into())];
    for m in 1..=order {
        // row n = m + 1 of the recurrence determines B_m
        let s: Rational = (0..m)
            .map(|k| Rational::from_integer(binomial(m + 1, k)) * &b[k])
            .sum();
        b.push(-s / Rational::from_integer((m as i64 + 1).into()));
    }
    b.into_iter().map(Polynomial::constant).collect()
}

impl fmt::Display for Umbra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.moments.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", shown.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat;
    use crate::combinatorics::{bell_partial, stirling1, stirling2};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Umbra {
        Umbra::from_integers(v).unwrap()
    }

    fn rats(v: &[(i64, i64)]) -> Umbra {
        Umbra::from_moments(v.iter().map(|&(a, b)| Polynomial::constant(rat(a, b))).collect()).unwrap()
    }

    fn sample() -> Umbra {
        rats(&[(1, 1), (2, 3), (-1, 2), (5, 1), (7, 4), (-3, 1), (1, 9)])
    }

    #[test]
    fn construction() {
        assert_eq!(ints(&[1]).order(), 0);
        assert!(Umbra::from_integers(&[2, 1]).is_err());
        assert!(Umbra::from_moments(vec![]).is_err());
        assert_eq!(Umbra::unity(3), ints(&[1, 1, 1, 1]));
        assert_eq!(Umbra::epsilon(3), ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn canonical_umbrae() {
        assert_eq!(Umbra::singleton(4), ints(&[1, 1, 0, 0, 0]));
        assert_eq!(Umbra::bell(5), ints(&[1, 1, 2, 5, 15, 52]));
        assert_eq!(Umbra::unity_inverse(4), ints(&[1, 1, -1, 2, -6]));
        assert_eq!(
            Umbra::canonical(Canonical::BernoulliNumbers, 3),
            rats(&[(1, 1), (-1, 2), (1, 6), (0, 1)])
        );
        let uniform = Umbra::canonical(Canonical::Uniform01, 8);
        for n in 0..=8 {
            assert_eq!(uniform.moment(n), &Polynomial::constant(rat(1, n as i64 + 1)));
        }
        assert_eq!("bell".parse::<Canonical>().unwrap(), Canonical::Bell);
        assert!(matches!("zeta".parse::<Canonical>(), Err(UmbralError::UnknownName(_))));
    }

    #[test]
    fn sums() {
        let a = sample();
        assert_eq!(a.sum(&Umbra::epsilon(6)), a);
        assert_eq!(Umbra::unity(5).sum(&Umbra::unity(5)), ints(&[1, 2, 4, 8, 16, 32]));
        let sym = Umbra::from_moments(vec![p("1"), p("a1"), p("a2")]).unwrap();
        assert_eq!(sym.sum(&sym).moment(2), &p("2*a2 + 2*a1^2"));
    }

    #[test]
    fn inverses() {
        assert_eq!(Umbra::epsilon(4).inverse(), Umbra::epsilon(4));
        assert_eq!(Umbra::unity(4).inverse(), ints(&[1, -1, 1, -1, 1]));
        let a = sample();
        assert_eq!(a.sum(&a.inverse()), Umbra::epsilon(6));
    }

    #[test]
    fn disjoint_sums() {
        let a = sample();
        assert_eq!(a.disjoint_sum(&Umbra::epsilon(6), Sign::Plus), a);
        assert_eq!(
            Umbra::unity(4).disjoint_sum(&Umbra::unity(4), Sign::Plus),
            ints(&[1, 2, 2, 2, 2])
        );
        assert_eq!(a.disjoint_sum(&a, Sign::Minus), Umbra::epsilon(6));
        assert_eq!(a.disjoint_nfold(1).unwrap(), a);
        assert_eq!(Umbra::unity(3).disjoint_nfold(3).unwrap(), ints(&[1, 3, 3, 3]));
        assert_eq!(Umbra::bell(3).disjoint_nfold(2).unwrap(), ints(&[1, 2, 4, 10]));
        assert!(a.disjoint_nfold(0).is_err());
    }

    #[test]
    fn integer_and_polynomial_dots() {
        let a = sample();
        assert_eq!(Umbra::dot_int(0, &a), Umbra::epsilon(6));
        assert_eq!(Umbra::dot_int(1, &a), a);
        assert_eq!(Umbra::dot_int(2, &Umbra::unity(4)), ints(&[1, 2, 4, 8, 16]));
        assert_eq!(Umbra::dot_poly(&Polynomial::from(3), &a), Umbra::dot_int(3, &a));
        let x = Polynomial::var("x");
        let xu = Umbra::dot_poly(&x, &Umbra::unity(5));
        for n in 0..=5 {
            assert_eq!(xu.moment(n), &x.pow(n as u32));
        }
        let xb = Umbra::dot_poly(&x, &Umbra::bell(6));
        let xc = Umbra::dot_poly(&x, &Umbra::singleton(6));
        for n in 0..=6 {
            let touchard: Polynomial = (0..=n)
                .map(|k| x.pow(k as u32).scale(&stirling2(n, k).unwrap()))
                .sum();
            let falling: Polynomial = (0..=n)
                .map(|k| x.pow(k as u32).scale(&stirling1(n, k).unwrap()))
                .sum();
            assert_eq!(xb.moment(n), &touchard);
            assert_eq!(xc.moment(n), &falling);
        }
    }

    #[test]
    fn umbral_dots() {
        let a = sample();
        assert_eq!(Umbra::unity(6).dot(&a), a);
        assert_eq!(Umbra::singleton(8).dot(&Umbra::bell(8)), Umbra::unity(8));
        assert_eq!(Umbra::bell(8).dot(&Umbra::unity_inverse(8)), Umbra::singleton(8));
        let g = rats(&[(1, 1), (-2, 5), (3, 1), (0, 1), (1, 7), (2, 1), (-1, 1)]);
        assert_eq!(g.dot(&a), g.dot_via_gf(&a));
        assert_eq!(g.dot(&a).moment(1), &(g.moment(1) * a.moment(1)));
    }

    #[test]
    fn product_powers_and_shifts() {
        let a = sample();
        assert_eq!(a.product_power(0), Umbra::unity(6));
        assert_eq!(a.product_power(1), a);
        assert_eq!(Umbra::bell(3).product_power(2), ints(&[1, 1, 4, 25]));
        assert_eq!(a.shift(&Polynomial::zero()), a);
        assert_eq!(Umbra::unity(4).shift(&Polynomial::one()), Umbra::epsilon(4));
        assert!(a.central().moment(1).is_zero());
    }

    #[test]
    fn central_umbrae() {
        assert_eq!(Umbra::epsilon(4).central(), Umbra::epsilon(4));
        let sym = Umbra::from_moments(vec![p("1"), p("a1"), p("a2")]).unwrap();
        assert_eq!(sym.central().moment(2), &p("a2 - a1^2"));
        let poisson = Umbra::dot_poly(&Polynomial::var("x"), &Umbra::bell(4));
        assert_eq!(poisson.central().moment(2), &p("x"));
        // (α - a_1)^n ≃ Σ C(n,k) (-1)^{n-k} a_k a_1^{n-k}
        let a = sample();
        let central = a.central();
        for n in 1..=6 {
            let expanded: Polynomial = (0..=n)
                .map(|k| {
                    let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
                    (a.moment(k) * &a.moment(1).pow((n - k) as u32))
                        .scale(&Rational::from_integer(binomial(n, k) * sign))
                })
                .sum();
            assert_eq!(central.moment(n), &expanded);
        }
    }

    #[test]
    fn factorial_moment_transforms() {
        let ones = vec![Polynomial::one(); 7];
        assert_eq!(Umbra::bell(6).factorial_moments().values(), &ones[..]);
        assert_eq!(Umbra::unity(4).factorial_moments().values(), Umbra::singleton(4).moments());
        let x = Polynomial::var("x");
        let fm = Umbra::dot_poly(&x, &Umbra::bell(6)).factorial_moments();
        for n in 0..=6 {
            assert_eq!(fm.values()[n], x.pow(n as u32));
        }
        let a = sample();
        assert_eq!(a.factorial_moments().as_umbra(), a.dot(&Umbra::singleton(6)));
        assert_eq!(
            Umbra::from_factorial_moments(&Umbra::singleton(5).factorial_moments()),
            Umbra::singleton(5)
        );
        let fm_u = FactorialMoments::new(ints(&[1, 1, 0, 0, 0]).moments().to_vec()).unwrap();
        assert_eq!(Umbra::from_factorial_moments(&fm_u), Umbra::unity(4));
        let fm_beta = FactorialMoments::new(ones).unwrap();
        assert_eq!(Umbra::from_factorial_moments(&fm_beta), Umbra::bell(6));
        assert_eq!(Umbra::from_factorial_moments(&a.factorial_moments()), a);
        assert!(FactorialMoments::new(vec![p("2")]).is_err());
    }

    #[test]
    fn overlines() {
        let bar = Umbra::unity(5).overline().unwrap();
        for n in 0..5 {
            assert_eq!(bar.moment(n), &Polynomial::constant(rat(1, n as i64 + 1)));
        }
        assert_eq!(Umbra::singleton(5).overline().unwrap(), Umbra::epsilon(4));
        assert_eq!(Umbra::bell(4).overline().unwrap().moment(1), &Polynomial::one());
        assert!(Umbra::epsilon(3).overline().is_err());
        let sym = Umbra::from_moments(vec![p("1"), p("x"), p("1")]).unwrap();
        assert!(sym.overline().is_err());
    }

    #[test]
    fn bell_partial_two_ways() {
        let u = Umbra::unity(4);
        assert_eq!(bell_partial_via_overline(3, 2, &u).unwrap(), Polynomial::from(3));
        let b = Umbra::bell(4);
        assert_eq!(bell_partial_via_overline(4, 2, &b).unwrap(), Polynomial::from(32));
        assert_eq!(
            bell_partial(4, 2, &b.moments()[1..]).unwrap(),
            Polynomial::from(32)
        );
        let a = sample();
        for n in 1..=5 {
            assert_eq!(
                bell_partial_via_overline(n, n, &a).unwrap(),
                a.moment(1).pow(n as u32)
            );
        }
        assert!(bell_partial_via_overline(3, 1, &Umbra::epsilon(4)).is_err());
    }

    #[test]
    fn mixtures() {
        let a = sample();
        assert_eq!(mixture(&[(Polynomial::one(), a.clone())]).unwrap(), a);
        let pr = p("p");
        let bern = mixture(&[(p("1 - p"), Umbra::epsilon(4)), (pr.clone(), Umbra::unity(4))]).unwrap();
        assert_eq!(bern.moments(), &[p("1"), pr.clone(), pr.clone(), pr.clone(), pr]);
        let half = Polynomial::constant(rat(1, 2));
        let cosh = mixture(&[(half.clone(), Umbra::unity(6)), (half, Umbra::unity(6).inverse())]).unwrap();
        assert_eq!(cosh, ints(&[1, 0, 1, 0, 1, 0, 1]));
        assert!(mixture(&[(Polynomial::from(2), a)]).is_err());
    }

    #[test]
    fn similarity() {
        let a = sample();
        assert!(a.is_similar(&a));
        assert!(Umbra::singleton(6).dot(&Umbra::bell(6)).is_similar(&Umbra::unity(9)));
        assert!(!Umbra::unity(3).is_similar(&Umbra::epsilon(3)));
    }

    #[test]
    fn compositional_inverse_of_unity() {
        assert_eq!(
            Umbra::unity(4).compositional_inverse().unwrap(),
            ints(&[1, 1, -1, 2, -6])
        );
        assert!(Umbra::epsilon(3).compositional_inverse().is_err());
    }

    #[test]
    fn json_shape() {
        let u = ints(&[1, 2]);
        let text = serde_json::to_string(&u).unwrap();
        assert_eq!(text, r#"{"order":1,"moments":["1","2"]}"#);
        assert!(serde_json::from_str::<Umbra>(r#"{"order":1,"moments":["2","2"]}"#).is_err());
        assert!(serde_json::from_str::<Umbra>(r#"{"order":3,"moments":["1"]}"#).is_err());
    }
}
