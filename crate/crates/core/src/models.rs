//! Distribution umbrae: the Poisson family, Bernoulli, binomial and Gamma,
//! together with closed-form cumulants and factorial moments for the Poisson
//! family.

use serde::{Deserialize, Serialize};

use crate::coefficients::Polynomial;
use crate::combinatorics::{stirling2_table, BellTable};
use crate::error::{domain, Result, UmbralError};
use crate::transforms::{cumulants_via_log, CumulantSeq};
use crate::umbra::{FactorialMoments, Umbra};

/// A distribution umbra and its parameters. Umbra-valued parameters are
/// truncated to the requested order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum Model {
    /// `x.β`.
    Poisson { x: Polynomial },
    /// `x.β.α`.
    CompoundPoisson { x: Polynomial, alpha: Umbra },
    /// `γ.β`.
    RandomizedPoisson { gamma: Umbra },
    /// `γ.β.α`.
    CompoundRandomized { gamma: Umbra, alpha: Umbra },
    /// `χ.p.β`, g.f. `q + p e^t`.
    Bernoulli { p: Polynomial },
    /// `n.χ.p.β`, g.f. `(q + p e^t)^n`.
    Binomial { n: u32, p: Polynomial },
    /// Inverse of `-c(a.χ)`, g.f. `(1 - ct)^{-a}`.
    Gamma { a: Polynomial, c: Polynomial },
}

/// JSON form `{"kind": "...", "params": {...}, "order": N}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    #[serde(flatten)]
    pub model: Model,
    pub order: usize,
}

impl ModelSpec {
    pub fn new(model: Model, order: usize) -> Self {
        ModelSpec { model, order }
    }

    pub fn poisson(x: Polynomial, order: usize) -> Self {
        ModelSpec::new(Model::Poisson { x }, order)
    }

    pub fn compound_poisson(x: Polynomial, alpha: Umbra, order: usize) -> Self {
        ModelSpec::new(Model::CompoundPoisson { x, alpha }, order)
    }

    pub fn randomized_poisson(gamma: Umbra, order: usize) -> Self {
        ModelSpec::new(Model::RandomizedPoisson { gamma }, order)
    }

    pub fn compound_randomized(gamma: Umbra, alpha: Umbra, order: usize) -> Self {
        ModelSpec::new(Model::CompoundRandomized { gamma, alpha }, order)
    }

    pub fn bernoulli(p: Polynomial, order: usize) -> Self {
        ModelSpec::new(Model::Bernoulli { p }, order)
    }

    pub fn binomial(n: u32, p: Polynomial, order: usize) -> Self {
        ModelSpec::new(Model::Binomial { n, p }, order)
    }

    pub fn gamma(a: Polynomial, c: Polynomial, order: usize) -> Self {
        ModelSpec::new(Model::Gamma { a, c }, order)
    }

    pub fn kind(&self) -> &'static str {
        match self.model {
            Model::Poisson { .. } => "poisson",
            Model::CompoundPoisson { .. } => "compound_poisson",
            Model::RandomizedPoisson { .. } => "randomized_poisson",
            Model::CompoundRandomized { .. } => "compound_randomized",
            Model::Bernoulli { .. } => "bernoulli",
            Model::Binomial { .. } => "binomial",
            Model::Gamma { .. } => "gamma",
        }
    }

    fn param(&self, u: &Umbra) -> Result<Umbra> {
        if u.order() < self.order {
            return Err(domain(format!(
                "{} parameter has order {}, model needs {}",
                self.kind(),
                u.order(),
                self.order
            )));
        }
        Ok(u.truncate(self.order))
    }

    fn wrong_kind(&self, what: &str) -> UmbralError {
        domain(format!("{what} is only defined for the Poisson family, not {}", self.kind()))
    }
}

/// Builds the umbra of a model through its umbral construction.
pub fn build(spec: &ModelSpec) -> Result<Umbra> {
    let n = spec.order;
    let bell = Umbra::bell(n);
    Ok(match &spec.model {
        Model::Poisson { x } => Umbra::dot_poly(x, &bell),
        Model::CompoundPoisson { x, alpha } => {
            Umbra::dot_poly(x, &bell.dot(&spec.param(alpha)?))
        }
        Model::RandomizedPoisson { gamma } => spec.param(gamma)?.dot(&bell),
        Model::CompoundRandomized { gamma, alpha } => {
            spec.param(gamma)?.dot(&bell.dot(&spec.param(alpha)?))
        }
        Model::Bernoulli { p } => bernoulli(p, n),
        Model::Binomial { n: trials, p } => Umbra::dot_int(*trials as u64, &bernoulli(p, n)),
        Model::Gamma { a, c } => Umbra::dot_poly(a, &Umbra::singleton(n))
            .scale(&-c)
            .inverse(),
    })
}

fn bernoulli(p: &Polynomial, order: usize) -> Umbra {
    Umbra::singleton(order).dot(&Umbra::dot_poly(p, &Umbra::bell(order)))
}

/// Closed-form cumulants of the Poisson family:
/// * `x.β`: every cumulant is `x`;
/// * `x.β.α`: `k_n = x a_n`;
/// * `γ.β`: `Σ_i S(n,i) k_i(γ)`;
/// * `γ.β.α`: `Σ_i k_i(γ) B_{n,i}(a_1, ...)`.
pub fn poisson_cumulants(spec: &ModelSpec) -> Result<CumulantSeq> {
    let order = spec.order;
    let tail = |values: Vec<Polynomial>| {
        let mut v = vec![Polynomial::one()];
        v.extend(values);
        CumulantSeq::new(v)
    };
    match &spec.model {
        Model::Poisson { x } => tail(vec![x.clone(); order]),
        Model::CompoundPoisson { x, alpha } => {
            let alpha = spec.param(alpha)?;
            tail(alpha.moments()[1..].iter().map(|a| x * a).collect())
        }
        Model::RandomizedPoisson { gamma } => {
            let k = cumulants_via_log(&spec.param(gamma)?);
            let s2 = stirling2_table(order);
            tail(
                (1..=order)
                    .map(|n| (1..=n).map(|i| k.values()[i].scale(&s2[n][i])).sum())
                    .collect(),
            )
        }
        Model::CompoundRandomized { gamma, alpha } => {
            let k = cumulants_via_log(&spec.param(gamma)?);
            let alpha = spec.param(alpha)?;
            let table = BellTable::new(&alpha.moments()[1..], order)?;
            tail(
                (1..=order)
                    .map(|n| (1..=n).map(|i| &k.values()[i] * &table.get(n, i)).sum())
                    .collect(),
            )
        }
        _ => Err(spec.wrong_kind("poisson_cumulants")),
    }
}

/// Closed-form factorial moments of the Poisson family:
/// * `x.β`: `x^n`;
/// * `x.β.α`: `Σ_k x^k B_{n,k}((μ)_1, ...)` with `(μ)_i` the factorial moments of α;
/// * `γ.β`: the moments of γ;
/// * `γ.β.α`: `Σ_k g_k B_{n,k}((μ)_1, ...)`.
pub fn poisson_factorial_moments(spec: &ModelSpec) -> Result<FactorialMoments> {
    let order = spec.order;
    let compound = |g: &dyn Fn(usize) -> Polynomial, alpha: &Umbra| -> Result<FactorialMoments> {
        let mu = alpha.factorial_moments();
        let table = BellTable::new(&mu.values()[1..], order)?;
        FactorialMoments::new(
            (0..=order)
                .map(|n| (0..=n).map(|k| &g(k) * &table.get(n, k)).sum())
                .collect(),
        )
    };
    match &spec.model {
        Model::Poisson { x } => FactorialMoments::new((0..=order).map(|n| x.pow(n as u32)).collect()),
        Model::CompoundPoisson { x, alpha } => {
            compound(&|k| x.pow(k as u32), &spec.param(alpha)?)
        }
        Model::RandomizedPoisson { gamma } => FactorialMoments::new(spec.param(gamma)?.moments().to_vec()),
        Model::CompoundRandomized { gamma, alpha } => {
            let gamma = spec.param(gamma)?;
            compound(&|k| gamma.moment(k).clone(), &spec.param(alpha)?)
        }
        _ => Err(spec.wrong_kind("poisson_factorial_moments")),
    }
}

/// The cumulant umbra of `binomial(n, p)`, computed as `χ.(n.ξ)` and as
/// `∔_n u^{<-1>}.p.β`; fails if the two disagree.
pub fn binomial_cumulant_decomposition(n: u32, p: &Polynomial, order: usize) -> Result<Umbra> {
    if n == 0 {
        return Err(domain("binomial decomposition needs n >= 1"));
    }
    let direct = cumulants_via_log(&build(&ModelSpec::binomial(n, p.clone(), order))?).as_umbra();
    let bernoulli_cumulant = Umbra::unity_inverse(order).dot(&Umbra::dot_poly(p, &Umbra::bell(order)));
    let decomposed = bernoulli_cumulant.disjoint_nfold(n as u64)?;
    if direct != decomposed {
        return Err(UmbralError::Inconsistent(format!(
            "binomial({n}, {p}) cumulants: {direct} vs {decomposed}"
        )));
    }
    Ok(direct)
}
