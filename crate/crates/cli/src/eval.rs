use umbral::models::{build, ModelSpec};
use umbral::umbra::mixture;
use umbral::{Polynomial, Result, Sign, Umbra};

use crate::expr::{Expr, ModelAtom};

/// The umbra of `e` truncated at `order`. Literal moment lists shorter than
/// `order` lower the order of everything built from them.
pub fn evaluate(e: &Expr, order: usize) -> Result<Umbra> {
    let ev = |x: &Expr| evaluate(x, order);
    Ok(match e {
        Expr::Canonical(c) => Umbra::canonical(*c, order),
        Expr::Model(m) => build(&model_spec(m, order))?,
        Expr::Moments(values) => {
            let u = Umbra::from_moments(values.clone())?;
            u.truncate(order.min(u.order()))
        }
        Expr::Sum(l, r) => ev(l)?.sum(&ev(r)?),
        Expr::DisjointSum(l, r) => ev(l)?.disjoint_sum(&ev(r)?, Sign::Plus),
        Expr::DisjointDiff(l, r) => ev(l)?.disjoint_sum(&ev(r)?, Sign::Minus),
        Expr::IntDot(n, r) => Umbra::dot_int(*n, &ev(r)?),
        Expr::PolyDot(x, r) => Umbra::dot_poly(x, &ev(r)?),
        Expr::Dot(l, r) => ev(l)?.dot(&ev(r)?),
        Expr::Inv(x) => ev(x)?.inverse(),
        Expr::Cinv(x) => ev(x)?.compositional_inverse()?,
        Expr::ProductPower(x, n) => ev(x)?.product_power(*n),
        Expr::Central(x) => ev(x)?.central(),
        Expr::Shift(x, c) => ev(x)?.shift(c),
        Expr::Mixture(parts) => {
            let parts = parts
                .iter()
                .map(|(w, x)| Ok((w.clone(), ev(x)?)))
                .collect::<Result<Vec<(Polynomial, Umbra)>>>()?;
            mixture(&parts)?
        }
    })
}

fn model_spec(m: &ModelAtom, order: usize) -> ModelSpec {
    match m {
        ModelAtom::Poisson(x) => ModelSpec::poisson(x.clone(), order),
        ModelAtom::Bernoulli(p) => ModelSpec::bernoulli(p.clone(), order),
        ModelAtom::Binomial(n, p) => ModelSpec::binomial(*n, p.clone(), order),
        ModelAtom::Gamma(a, c) => ModelSpec::gamma(a.clone(), c.clone(), order),
    }
}
