//! Cumulants and factorial moments, with every conversion route between
//! moments, cumulants and factorial moments.
//!
//! The routes are implemented independently of one another: the logarithm of
//! the g.f., the partial Bell polynomial expansion, the partition sum with
//! coefficients `d_π` (and `c_π` for the inverse direction) and the
//! moment recursion. Their agreement is what the test suites check.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::coefficients::{binomial, factorial, Polynomial, Rational};
use crate::combinatorics::{bell_complete, c_pi, d_pi, partitions, BellTable};
use crate::error::{domain, Result, UmbralError};
use crate::series::{log_one_plus_t, Egf};
use crate::umbra::{FactorialMoments, SeqRepr, Umbra};

/// Cumulants `k_0 = 1, k_1, ..., k_N`: the moments of the cumulant umbra
/// `κ_α ≡ χ.α`, whose g.f. is `1 + log f(t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeqRepr", into = "SeqRepr")]
pub struct CumulantSeq {
    values: Vec<Polynomial>,
}

impl TryFrom<SeqRepr> for CumulantSeq {
    type Error = UmbralError;
    fn try_from(r: SeqRepr) -> Result<Self> {
        if r.values.len() != r.order + 1 {
            return Err(domain(format!(
                "order {} needs {} values, got {}",
                r.order,
                r.order + 1,
                r.values.len()
            )));
        }
        CumulantSeq::new(r.values)
    }
}

impl From<CumulantSeq> for SeqRepr {
    fn from(c: CumulantSeq) -> Self {
        SeqRepr {
            order: c.order(),
            values: c.values,
        }
    }
}

impl CumulantSeq {
    pub fn new(values: Vec<Polynomial>) -> Result<Self> {
        match values.first() {
            Some(v) if v.is_one() => Ok(CumulantSeq { values }),
            Some(v) => Err(domain(format!("cumulants must start with k_0 = 1, got {v}"))),
            None => Err(domain("cumulants must not be empty")),
        }
    }

    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    /// The cumulant umbra `κ_α`.
    pub fn as_umbra(&self) -> Umbra {
        Umbra::from_moments(self.values.clone()).expect("k_0 = 1")
    }
}

/// Cumulants as the coefficients of `1 + log f(t)`.
pub fn cumulants_via_log(a: &Umbra) -> CumulantSeq {
    let log = a.to_egf().log().expect("moments start with 1");
    CumulantSeq {
        values: log.into_coeffs(),
    }
}

/// `k_n = Σ_{i=1}^n (-1)^{i-1} (i-1)! B_{n,i}(a_1, a_2, ...)`.
pub fn cumulants_via_bell(a: &Umbra) -> CumulantSeq {
    let order = a.order();
    let table = BellTable::new(&a.moments()[1..], order).expect("enough moments");
    let mut values = vec![Polynomial::one()];
    for n in 1..=order {
        let k: Polynomial = (1..=n)
            .map(|i| {
                let sign = if i % 2 == 1 { 1 } else { -1 };
                table.get(n, i).scale(&Rational::from_integer(factorial(i - 1) * BigInt::from(sign)))
            })
            .sum();
        values.push(k);
    }
    CumulantSeq { values }
}

/// `k_n = Σ_π d_π a_π` over the partitions π of `n`.
pub fn cumulants_via_partitions(a: &Umbra) -> CumulantSeq {
    let tail = &a.moments()[1..];
    let mut values = vec![Polynomial::one()];
    for n in 1..=a.order() {
        values.push(
            partitions(n)
                .iter()
                .map(|p| p.monomial_in(tail).scale(&d_pi(p)))
                .sum(),
        );
    }
    CumulantSeq { values }
}

/// `a_n = Y_n(k_1, ..., k_n)`: the partition umbra `β.κ_α` reproduces `α`.
pub fn moments_from_cumulants(k: &CumulantSeq) -> Umbra {
    let tail = &k.values[1..];
    let moments = (0..=k.order())
        .map(|n| bell_complete(n, tail).expect("enough cumulants"))
        .collect();
    Umbra::from_moments(moments).expect("Y_0 = 1")
}

/// `a_n = Σ_π c_π κ_π` over the partitions π of `n`.
pub fn moments_from_partitions(k: &CumulantSeq) -> Umbra {
    let tail = &k.values[1..];
    let mut moments = vec![Polynomial::one()];
    for n in 1..=k.order() {
        moments.push(
            partitions(n)
                .iter()
                .map(|p| p.monomial_in(tail).scale(&c_pi(p)))
                .sum(),
        );
    }
    Umbra::from_moments(moments).expect("a_0 = 1")
}

/// `a_n = Σ_{j=0}^{n-1} C(n-1, j) a_j k_{n-j}`.
pub fn moments_via_recursion(k: &CumulantSeq) -> Umbra {
    let mut moments = vec![Polynomial::one()];
    for n in 1..=k.order() {
        let next: Polynomial = (0..n)
            .map(|j| {
                (&moments[j] * &k.values[n - j]).scale(&Rational::from_integer(binomial(n - 1, j)))
            })
            .sum();
        moments.push(next);
    }
    Umbra::from_moments(moments).expect("a_0 = 1")
}

/// The factorial umbra `φ_α ≡ α.χ`, with moments `E[(α)_n]`.
pub fn factorial_umbra(a: &Umbra) -> FactorialMoments {
    a.factorial_moments()
}

/// Recovers `α ≡ φ_α.β` from its factorial moments.
pub fn umbra_from_factorial(fm: &FactorialMoments) -> Umbra {
    Umbra::from_factorial_moments(fm)
}

/// Factorial moments of the cumulant umbra, `κ_α.χ`.
pub fn factorial_cumulants(a: &Umbra) -> FactorialMoments {
    cumulants_via_log(a).as_umbra().factorial_moments()
}

/// The g.f. of `κ_α.χ` obtained by composition: `1 + log f(log(1 + t))`.
pub fn factorial_cumulant_gf(a: &Umbra) -> Egf {
    a.to_egf()
        .compose_delta(&log_one_plus_t(a.order()))
        .and_then(|g| g.log())
        .expect("unit constant terms")
}

/// The g.f. of the factorial umbra of the central umbra obtained by
/// composition: `f(log(1 + t)) (1 + t)^{-a_1}`.
pub fn central_factorial_gf(a: &Umbra) -> Egf {
    let order = a.order();
    let base = a
        .to_egf()
        .compose_delta(&log_one_plus_t(order))
        .expect("unit constant term");
    if order == 0 {
        return base;
    }
    let correction = Egf::one_plus_t(order)
        .pow(&-a.moment(1))
        .expect("unit constant term");
    base.mul(&correction)
}

/// `χ.(α + γ) ≡ χ.α ∔ χ.γ`: cumulants of a sum add termwise.
pub fn cumulant_additivity_check(a: &Umbra, b: &Umbra) -> bool {
    let lhs = cumulants_via_log(&a.sum(b));
    let (ka, kb) = (cumulants_via_log(a), cumulants_via_log(b));
    (1..=lhs.order()).all(|n| lhs.values[n] == &ka.values[n] + &kb.values[n])
}

/// `χ.(cα) ≡ c(χ.α)`: `k_n(cα) = c^n k_n(α)`.
pub fn cumulant_homogeneity_check(a: &Umbra, c: &Polynomial) -> bool {
    let lhs = cumulants_via_log(&a.scale(c));
    let rhs = cumulants_via_log(a).as_umbra().scale(c);
    lhs.values() == rhs.moments()
}

/// `χ.(α + c.u) ≡ χ.α ∔ χ.c`: only the first cumulant moves, by `c`.
pub fn cumulant_shift_check(a: &Umbra, c: &Polynomial) -> bool {
    let shifted = a.sum(&Umbra::dot_poly(c, &Umbra::unity(a.order())));
    let lhs = cumulants_via_log(&shifted);
    let k = cumulants_via_log(a);
    (1..=k.order()).all(|n| {
        if n == 1 {
            lhs.values[1] == &k.values[1] + c
        } else {
            lhs.values[n] == k.values[n]
        }
    })
}

/// Both sides of `t.α ≡ t.β.κ_α`: the left side as `t.α`, the right side as
/// the dot-product of the Poisson umbra `t.β` with the cumulant umbra.
pub fn levy_identity(t: &Polynomial, a: &Umbra) -> (Umbra, Umbra) {
    let order = a.order();
    let lhs = Umbra::dot_poly(t, a);
    let kappa = cumulants_via_log(a).as_umbra();
    let rhs = Umbra::dot_poly(t, &Umbra::bell(order)).dot(&kappa);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::rat;
    use crate::combinatorics::{bell_number, stirling1};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Umbra {
        Umbra::from_integers(v).unwrap()
    }

    fn sample() -> Umbra {
        Umbra::from_moments(
            [(1, 1), (3, 2), (-2, 1), (1, 5), (4, 1), (-7, 3), (2, 1), (0, 1), (9, 8)]
                .iter()
                .map(|&(a, b)| Polynomial::constant(rat(a, b)))
                .collect(),
        )
        .unwrap()
    }

    fn symbolic(order: usize) -> Umbra {
        let mut m = vec![Polynomial::one()];
        m.extend((1..=order).map(|i| Polynomial::var(&format!("a{i}"))));
        Umbra::from_moments(m).unwrap()
    }

    #[test]
    fn worked_cumulant_examples() {
        assert_eq!(cumulants_via_log(&Umbra::epsilon(6)).as_umbra(), Umbra::epsilon(6));
        assert_eq!(cumulants_via_log(&Umbra::unity(6)).as_umbra(), Umbra::singleton(6));
        assert_eq!(cumulants_via_log(&Umbra::bell(6)).as_umbra(), Umbra::unity(6));
        assert_eq!(
            cumulants_via_log(&Umbra::singleton(5)).values(),
            ints(&[1, 1, -1, 2, -6, 24]).moments()
        );
    }

    #[test]
    fn low_order_cumulants_symbolically() {
        let a = symbolic(3);
        for k in [cumulants_via_bell(&a), cumulants_via_partitions(&a), cumulants_via_log(&a)] {
            assert_eq!(k.values()[1], p("a1"));
            assert_eq!(k.values()[2], p("a2 - a1^2"));
            assert_eq!(k.values()[3], p("a3 - 3*a1*a2 + 2*a1^3"));
        }
    }

    #[test]
    fn low_order_moments_symbolically() {
        let k = CumulantSeq::new(vec![p("1"), p("k1"), p("k2"), p("k3")]).unwrap();
        for a in [moments_from_cumulants(&k), moments_from_partitions(&k), moments_via_recursion(&k)] {
            assert_eq!(a.moment(1), &p("k1"));
            assert_eq!(a.moment(2), &p("k2 + k1^2"));
            assert_eq!(a.moment(3), &p("k3 + 3*k1*k2 + k1^3"));
        }
    }

    #[test]
    fn routes_agree_on_a_sample() {
        let a = sample();
        let k = cumulants_via_log(&a);
        assert_eq!(cumulants_via_bell(&a), k);
        assert_eq!(cumulants_via_partitions(&a), k);
        assert_eq!(moments_from_cumulants(&k), a);
        assert_eq!(moments_from_partitions(&k), a);
        assert_eq!(moments_via_recursion(&k), a);
        assert_eq!(k.values()[1], a.moment(1).clone());
    }

    #[test]
    fn moments_from_special_cumulants() {
        let ones = CumulantSeq::new(vec![Polynomial::one(); 7]).unwrap();
        assert_eq!(moments_from_cumulants(&ones), Umbra::bell(6));
        assert_eq!(moments_via_recursion(&ones), Umbra::bell(6));
        let x = Polynomial::var("x");
        let mut values = vec![Polynomial::one(), x.clone()];
        values.extend(std::iter::repeat_n(Polynomial::zero(), 4));
        let a = moments_from_cumulants(&CumulantSeq::new(values).unwrap());
        for n in 0..=5 {
            assert_eq!(a.moment(n), &x.pow(n as u32));
        }
        for n in 0..=6 {
            assert_eq!(moments_via_recursion(&ones).moment(n), &Polynomial::constant(bell_number(n)));
        }
    }

    #[test]
    fn factorial_umbra_examples() {
        assert_eq!(factorial_umbra(&Umbra::epsilon(5)).as_umbra(), Umbra::epsilon(5));
        assert_eq!(factorial_umbra(&Umbra::unity(5)).as_umbra(), Umbra::singleton(5));
        assert_eq!(factorial_umbra(&Umbra::singleton(5)).as_umbra(), Umbra::unity_inverse(5));
        assert_eq!(factorial_umbra(&Umbra::bell(5)).as_umbra(), Umbra::unity(5));
        let fm = FactorialMoments::new(vec![Polynomial::one(); 6]).unwrap();
        assert_eq!(umbra_from_factorial(&fm), Umbra::bell(5));
        let a = sample();
        assert_eq!(umbra_from_factorial(&factorial_umbra(&a)), a);
    }

    #[test]
    fn factorial_cumulant_examples() {
        assert_eq!(factorial_cumulants(&Umbra::bell(5)).as_umbra(), Umbra::singleton(5));
        assert_eq!(factorial_cumulants(&Umbra::unity(5)).as_umbra(), Umbra::unity_inverse(5));
        let x = Polynomial::var("x");
        // cumulants of x.β are (1, x, x, ...); their Stirling-1 transform
        // collapses to x Σ_k s(n,k) = x (1)_n
        let fc = factorial_cumulants(&Umbra::dot_poly(&x, &Umbra::bell(6)));
        for n in 1..=6 {
            let row_sum: Rational = (1..=n).map(|k| stirling1(n, k).unwrap()).sum();
            assert_eq!(fc.values()[n], x.scale(&row_sum), "n = {n}");
        }
        assert_eq!(fc.values()[2..], vec![Polynomial::zero(); 5][..]);
        let a = sample();
        assert_eq!(factorial_cumulant_gf(&a).coeffs(), factorial_cumulants(&a).values());
    }

    #[test]
    fn central_factorial_generating_function() {
        let a = sample();
        assert_eq!(
            central_factorial_gf(&a).coeffs(),
            a.central().factorial_moments().values()
        );
    }

    #[test]
    fn cumulant_theorem_checks() {
        let a = sample();
        let b = symbolic(8);
        assert!(cumulant_additivity_check(&a, &Umbra::epsilon(8)));
        assert!(cumulant_additivity_check(&a, &b));
        let two_u = Umbra::unity(5).sum(&Umbra::unity(5));
        assert_eq!(cumulants_via_log(&two_u).values(), ints(&[1, 2, 0, 0, 0, 0]).moments());
        assert!(cumulant_homogeneity_check(&a, &Polynomial::one()));
        assert!(cumulant_homogeneity_check(&Umbra::unity(5), &Polynomial::from(2)));
        assert!(cumulant_homogeneity_check(&a, &Polynomial::var("x")));
        assert!(cumulant_shift_check(&a, &Polynomial::zero()));
        assert!(cumulant_shift_check(&a, &Polynomial::var("c")));
        let shifted = Umbra::bell(5).sum(&Umbra::dot_int(5, &Umbra::unity(5)));
        assert_eq!(cumulants_via_log(&shifted).values(), ints(&[1, 6, 1, 1, 1, 1]).moments());
        let central = cumulants_via_log(&a.central());
        let k = cumulants_via_log(&a);
        assert!(central.values()[1].is_zero());
        assert_eq!(central.values()[2..], k.values()[2..]);
    }

    #[test]
    fn levy_identity_sides_agree() {
        let (l, r) = levy_identity(&Polynomial::one(), &sample());
        assert_eq!(l, sample());
        assert_eq!(r, sample());
        let (l, r) = levy_identity(&Polynomial::from(2), &Umbra::unity(5));
        assert_eq!(l, ints(&[1, 2, 4, 8, 16, 32]));
        assert_eq!(r, l);
        let x = Polynomial::var("x");
        let (l, r) = levy_identity(&x, &Umbra::bell(6));
        assert_eq!(l, r);
        assert_eq!(l, Umbra::dot_poly(&x, &Umbra::bell(6)));
    }

    #[test]
    fn json_mirrors_umbra() {
        let k = cumulants_via_log(&Umbra::bell(2));
        let text = serde_json::to_string(&k).unwrap();
        assert_eq!(text, r#"{"order":2,"values":["1","1","1"]}"#);
        assert_eq!(serde_json::from_str::<CumulantSeq>(&text).unwrap(), k);
        assert!(serde_json::from_str::<CumulantSeq>(r#"{"order":0,"values":["0"]}"#).is_err());
    }
}
