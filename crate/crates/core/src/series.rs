//! Truncated exponential generating functions `Σ c_n t^n / n!` with
//! polynomial coefficients.
//!
//! Every binary operation truncates to the smaller input order. The umbral
//! conventions for constant terms are kept: the logarithm returns
//! `1 + log f(t)` and the exponential takes `f` to `exp(f(t) - 1)`, so that
//! series standing for umbrae always start with 1.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coefficients::{binomial, Polynomial, Rational};
use crate::combinatorics::BellTable;
use crate::error::{domain, Result, UmbralError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EgfRepr", into = "EgfRepr")]
pub struct Egf {
    coeffs: Vec<Polynomial>,
}

#[derive(Serialize, Deserialize)]
struct EgfRepr {
    order: usize,
    coeffs: Vec<Polynomial>,
}

impl TryFrom<EgfRepr> for Egf {
    type Error = UmbralError;
    fn try_from(r: EgfRepr) -> Result<Self> {
        if r.coeffs.len() != r.order + 1 {
            return Err(domain(format!(
                "order {} needs {} coefficients, got {}",
                r.order,
                r.order + 1,
                r.coeffs.len()
            )));
        }
        Ok(Egf { coeffs: r.coeffs })
    }
}

impl From<Egf> for EgfRepr {
    fn from(e: Egf) -> Self {
        EgfRepr {
            order: e.order(),
            coeffs: e.coeffs,
        }
    }
}

fn binom_poly(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

impl Egf {
    /// Panics on an empty coefficient list; order `N` needs `N + 1` entries.
    pub fn new(coeffs: Vec<Polynomial>) -> Self {
        assert!(!coeffs.is_empty(), "an Egf needs at least the constant term");
        Egf { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Polynomial) -> Self {
        Egf::new((0..=order).map(f).collect())
    }

    /// The series 1.
    pub fn one(order: usize) -> Self {
        Egf::from_fn(order, |n| if n == 0 { Polynomial::one() } else { Polynomial::zero() })
    }

    /// `e^t`.
    pub fn exp_t(order: usize) -> Self {
        Egf::from_fn(order, |_| Polynomial::one())
    }

    /// `1 + t`.
    pub fn one_plus_t(order: usize) -> Self {
        Egf::from_fn(order, |n| if n <= 1 { Polynomial::one() } else { Polynomial::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Polynomial {
        &self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<Polynomial> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Egf {
        Egf::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    fn require_unit_constant(&self, what: &str) -> Result<()> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(domain(format!(
                "{what} needs constant term 1, got {}",
                self.coeffs[0]
            )))
        }
    }

    /// Termwise sum.
    pub fn add(&self, g: &Egf) -> Egf {
        let order = self.order().min(g.order());
        Egf::from_fn(order, |n| &self.coeffs[n] + &g.coeffs[n])
    }

    /// Multiplies every coefficient by the polynomial `c`.
    pub fn scale(&self, c: &Polynomial) -> Egf {
        Egf::from_fn(self.order(), |n| &self.coeffs[n] * c)
    }

    /// Binomial convolution `c_n = Σ C(n,i) f_i g_{n-i}`.
    pub fn mul(&self, g: &Egf) -> Egf {
        let order = self.order().min(g.order());
        Egf::from_fn(order, |n| {
            (0..=n)
                .map(|i| (&self.coeffs[i] * &g.coeffs[n - i]).scale(&binom_poly(n, i)))
                .sum()
        })
    }

    /// `1 + log f(t)`.
    pub fn log(&self) -> Result<Egf> {
        self.require_unit_constant("log")?;
        let f = &self.coeffs;
        let mut l: Vec<Polynomial> = Vec::with_capacity(f.len());
        l.push(Polynomial::one());
        // f' = f l'  =>  f_n = Σ_{k=1}^{n} C(n-1,k-1) l_k f_{n-k}
        for n in 1..f.len() {
            let mut v = f[n].clone();
            for k in 1..n {
                v -= &(&l[k] * &f[n - k]).scale(&binom_poly(n - 1, k - 1));
            }
            l.push(v);
        }
        Ok(Egf::new(l))
    }

    /// `exp(f(t) - 1)`.
    pub fn exp(&self) -> Result<Egf> {
        self.require_unit_constant("exp")?;
        Ok(exp_of_delta(&self.coeffs))
    }

    /// `g(f(t) - 1)` with coefficients `Σ_i g_i B_{n,i}(f_1, f_2, ...)`.
    pub fn compose_delta(&self, f: &Egf) -> Result<Egf> {
        f.require_unit_constant("composition")?;
        let order = self.order().min(f.order());
        let table = BellTable::new(&f.coeffs[1..=order], order)?;
        Ok(Egf::from_fn(order, |n| {
            (0..=n).map(|i| &self.coeffs[i] * &table.get(n, i)).sum()
        }))
    }

    /// `f(t)^e = exp(e log f(t))` for a polynomial exponent `e`.
    pub fn pow(&self, e: &Polynomial) -> Result<Egf> {
        self.require_unit_constant("pow")?;
        let mut log = self.log()?.into_coeffs();
        log[0] = Polynomial::zero();
        let scaled: Vec<Polynomial> = log.iter().map(|c| c * e).collect();
        Ok(exp_of_delta(&scaled))
    }

    /// Integer power by repeated multiplication.
    pub fn pow_int(&self, n: u64) -> Egf {
        (0..n).fold(Egf::one(self.order()), |acc, _| acc.mul(self))
    }

    /// `1 / f(t)`.
    pub fn reciprocal(&self) -> Result<Egf> {
        self.require_unit_constant("reciprocal")?;
        let f = &self.coeffs;
        let mut g: Vec<Polynomial> = vec![Polynomial::one()];
        for n in 1..f.len() {
            let v: Polynomial = (1..=n)
                .map(|i| (&f[i] * &g[n - i]).scale(&binom_poly(n, i)))
                .sum();
            g.push(-v);
        }
        Ok(Egf::new(g))
    }

    /// Compositional inverse in the umbral sense: the series `h` with
    /// `h(f(t) - 1) = 1 + t`. Requires `f_1` to be a nonzero constant.
    ///
    /// Solved degree by degree: the coefficient of `t^n/n!` in `h(f - 1)` is
    /// `Σ_{i<=n} h_i B_{n,i}(f)` and `B_{n,n}(f) = f_1^n`.
    pub fn revert(&self) -> Result<Egf> {
        self.require_unit_constant("reversion")?;
        let order = self.order();
        if order == 0 {
            return Ok(self.clone());
        }
        let f1 = self.coeffs[1].as_constant().ok_or_else(|| {
            UmbralError::NotInvertible(format!("first coefficient {} is not constant", self.coeffs[1]))
        })?;
        if f1.is_zero() {
            return Err(UmbralError::NotInvertible("first coefficient is zero".into()));
        }
        let inv_f1 = f1.recip();
        let table = BellTable::new(&self.coeffs[1..], order)?;
        let mut h = vec![Polynomial::one(), Polynomial::constant(inv_f1.clone())];
        let mut inv_pow = inv_f1.clone();
        for n in 2..=order {
            inv_pow = &inv_pow * &inv_f1;
            let rest: Polynomial = (1..n).map(|i| &h[i] * &table.get(n, i)).sum();
            h.push(-rest.scale(&inv_pow));
        }
        Ok(Egf::new(h))
    }
}

/// `exp(h(t))` for `h_0` ignored (treated as 0):
/// `g_n = Σ_{k=1}^{n} C(n-1,k-1) h_k g_{n-k}`.
fn exp_of_delta(h: &[Polynomial]) -> Egf {
    let mut g: Vec<Polynomial> = Vec::with_capacity(h.len());
    g.push(Polynomial::one());
    for n in 1..h.len() {
        let v: Polynomial = (1..=n)
            .map(|k| (&h[k] * &g[n - k]).scale(&binom_poly(n - 1, k - 1)))
            .sum();
        g.push(v);
    }
    Egf::new(g)
}

/// Coefficients `(-1)^{n-1} (n-1)!` of `1 + log(1 + t)`.
pub fn log_one_plus_t(order: usize) -> Egf {
    Egf::from_fn(order, |n| {
        if n == 0 {
            return Polynomial::one();
        }
        let f: BigInt = crate::coefficients::factorial(n - 1);
        Polynomial::from(if n % 2 == 1 { f } else { -f })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::int;
    use crate::combinatorics::{bell_number, stirling1};

    fn consts(v: &[i64]) -> Egf {
        Egf::new(v.iter().map(|&c| Polynomial::from(c)).collect())
    }

    #[test]
    fn multiplication() {
        let f = consts(&[1, 3, -2, 5]);
        assert_eq!(f.mul(&Egf::one(3)), f);
        assert_eq!(Egf::exp_t(6).mul(&Egf::exp_t(6)), Egf::from_fn(6, |n| Polynomial::from(1 << n)));
        assert_eq!(Egf::one_plus_t(4).mul(&Egf::one_plus_t(4)), consts(&[1, 2, 2, 0, 0]));
        assert_eq!(Egf::exp_t(3).mul(&Egf::exp_t(5)).order(), 3);
    }

    #[test]
    fn logarithm() {
        assert_eq!(Egf::exp_t(5).log().unwrap(), consts(&[1, 1, 0, 0, 0, 0]));
        assert_eq!(Egf::one_plus_t(6).log().unwrap(), consts(&[1, 1, -1, 2, -6, 24, -120]));
        assert_eq!(log_one_plus_t(6), consts(&[1, 1, -1, 2, -6, 24, -120]));
        let bell = Egf::exp_t(6).exp().unwrap();
        assert_eq!(bell.log().unwrap(), Egf::exp_t(6));
        assert!(consts(&[2, 1]).log().is_err());
    }

    #[test]
    fn exponential() {
        let exp_t = Egf::one_plus_t(5).exp().unwrap();
        assert_eq!(exp_t, Egf::exp_t(5));
        let bell = Egf::exp_t(8).exp().unwrap();
        for n in 0..=8 {
            assert_eq!(bell.coeff(n), &Polynomial::constant(bell_number(n)));
        }
        assert!(consts(&[0, 1]).exp().is_err());
    }

    #[test]
    fn composition() {
        let bell = Egf::exp_t(7).compose_delta(&Egf::exp_t(7)).unwrap();
        assert_eq!(bell, Egf::exp_t(7).exp().unwrap());
        let g = consts(&[1, 4, -3, 7, 2]);
        assert_eq!(g.compose_delta(&Egf::one_plus_t(4)).unwrap(), g);
        assert_eq!(Egf::one_plus_t(4).compose_delta(&g).unwrap(), g);
        assert!(g.compose_delta(&consts(&[3, 1])).is_err());
    }

    #[test]
    fn powers() {
        let f = consts(&[1, 2, -1, 3, 5]);
        assert_eq!(f.pow(&Polynomial::one()).unwrap(), f);
        assert_eq!(f.pow(&Polynomial::from(3)).unwrap(), f.pow_int(3));
        assert_eq!(f.pow(&Polynomial::zero()).unwrap(), Egf::one(4));
        let x = Polynomial::var("x");
        assert_eq!(Egf::exp_t(5).pow(&x).unwrap(), Egf::from_fn(5, |n| x.pow(n as u32)));
        let rising = Egf::one_plus_t(6).pow(&x).unwrap();
        for n in 0..=6 {
            let expected: Polynomial = (0..=n)
                .map(|k| x.pow(k as u32).scale(&stirling1(n, k).unwrap()))
                .sum();
            assert_eq!(rising.coeff(n), &expected);
        }
    }

    #[test]
    fn reciprocals() {
        assert_eq!(Egf::one(3).reciprocal().unwrap(), Egf::one(3));
        assert_eq!(
            Egf::exp_t(5).reciprocal().unwrap(),
            Egf::from_fn(5, |n| Polynomial::from(if n % 2 == 0 { 1 } else { -1 }))
        );
        let f = consts(&[1, -3, 2, 9, 4, -1]);
        assert_eq!(f.mul(&f.reciprocal().unwrap()), Egf::one(5));
    }

    #[test]
    fn reversion() {
        assert_eq!(Egf::exp_t(6).revert().unwrap(), log_one_plus_t(6));
        assert_eq!(Egf::one_plus_t(5).revert().unwrap(), Egf::one_plus_t(5));
        let f = Egf::new(vec![
            Polynomial::one(),
            Polynomial::from(int(-2)),
            Polynomial::var("y"),
            Polynomial::from(3),
        ]);
        let h = f.revert().unwrap();
        assert_eq!(h.compose_delta(&f).unwrap(), Egf::one_plus_t(3));
        assert!(matches!(consts(&[1, 0, 1]).revert(), Err(UmbralError::NotInvertible(_))));
        let symbolic = Egf::new(vec![Polynomial::one(), Polynomial::var("x")]);
        assert!(matches!(symbolic.revert(), Err(UmbralError::NotInvertible(_))));
    }

    #[test]
    fn json_shape() {
        let f = Egf::new(vec![Polynomial::one(), Polynomial::var("x")]);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(text, r#"{"order":1,"coeffs":["1","x"]}"#);
        let back: Egf = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Egf>(r#"{"order":2,"coeffs":["1"]}"#).is_err());
    }
}
