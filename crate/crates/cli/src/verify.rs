//! Executable identity checks behind `umbra verify`.
//!
//! Each check owns a deterministic RNG seeded from the run seed and its id, so
//! results do not depend on scheduling. Checks run in parallel and are
//! reported in declaration order.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use umbral::coefficients::{binomial, factorial, rat};
use umbral::combinatorics::{bell_partial, falling_factorial, stirling1_table, stirling2_table};
use umbral::models::{
    binomial_cumulant_decomposition, build, poisson_cumulants, poisson_factorial_moments, ModelSpec,
};
use umbral::series::log_one_plus_t;
use umbral::transforms::{
    central_factorial_gf, cumulant_additivity_check, cumulant_homogeneity_check,
    cumulant_shift_check, cumulants_via_bell, cumulants_via_log, cumulants_via_partitions,
    factorial_cumulant_gf, factorial_cumulants, factorial_umbra, levy_identity,
    moments_from_cumulants, moments_from_partitions, moments_via_recursion, umbra_from_factorial,
};
use umbral::umbra::{bell_partial_via_overline, mixture};
use umbral::{Canonical, Egf, Polynomial, Rational, Umbra, UmbralError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Prop1,
    Prop2,
    Cumulant,
    Factorial,
    Models,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Prop1 => "prop1",
            Suite::Prop2 => "prop2",
            Suite::Cumulant => "cumulant",
            Suite::Factorial => "factorial",
            Suite::Models => "models",
        }
    }
}

pub type DotFn = fn(&Umbra, &Umbra) -> Umbra;

/// Run parameters. `dot` is the umbral dot-product used wherever a check
/// states an identity in terms of `γ.α`.
#[derive(Clone, Copy)]
pub struct Context {
    pub order: usize,
    pub seed: u64,
    /// Random umbrae per randomized check; heavier checks use a tenth.
    pub trials: usize,
    pub dot: DotFn,
}

impl Context {
    pub fn new(order: usize, seed: u64) -> Self {
        Context {
            order,
            seed,
            trials: 100,
            dot: |g, a| g.dot(a),
        }
    }

    fn few(&self) -> usize {
        self.trials.div_ceil(10)
    }

    fn dot(&self, g: &Umbra, a: &Umbra) -> Umbra {
        (self.dot)(g, a)
    }
}

#[derive(Debug)]
struct Failure(String);

impl From<UmbralError> for Failure {
    fn from(e: UmbralError) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

pub struct Check {
    pub id: &'static str,
    pub suite: Suite,
    pub anchor: &'static str,
    pub description: &'static str,
    run: fn(&Context, &mut ChaCha8Rng) -> Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub suite: Suite,
    pub anchor: &'static str,
    pub description: &'static str,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status}  {:<30} {}  [{}]", self.id, self.description, self.anchor)?;
        if let Some(why) = &self.failure {
            write!(f, "\n      {why}")?;
        }
        Ok(())
    }
}

fn seed_for(seed: u64, id: &str) -> u64 {
    // FNV-1a over the id, mixed with the run seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

pub fn run(suite: Suite, ctx: &Context) -> Vec<CheckResult> {
    checks()
        .into_par_iter()
        .filter(|c| suite == Suite::All || c.suite == suite)
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed_for(ctx.seed, c.id));
            let failure = (c.run)(ctx, &mut rng).err().map(|f| f.0);
            CheckResult {
                id: c.id,
                suite: c.suite,
                anchor: c.anchor,
                description: c.description,
                failure,
            }
        })
        .collect()
}

pub fn render(suite: Suite, ctx: &Context, results: &[CheckResult]) -> String {
    let mut out = format!(
        "identity verification: suite {}, order {}, seed {}\n",
        suite.name(),
        ctx.order,
        ctx.seed
    );
    for r in results {
        out.push_str(&format!("{r}\n"));
    }
    let passed = results.iter().filter(|r| r.passed()).count();
    out.push_str(&format!("{passed} of {} identities hold\n", results.len()));
    out
}

fn rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn random_umbra(rng: &mut ChaCha8Rng, order: usize) -> Umbra {
    let mut m = vec![Polynomial::one()];
    m.extend((0..order).map(|_| Polynomial::constant(rational(rng))));
    Umbra::from_moments(m).expect("leading moment is 1")
}

fn random_umbra_unit_first(rng: &mut ChaCha8Rng, order: usize) -> Umbra {
    loop {
        let u = random_umbra(rng, order);
        if order == 0 || !u.moment(1).is_zero() {
            return u;
        }
    }
}

fn var(name: &str) -> Polynomial {
    Polynomial::var(name)
}

fn int(n: i64) -> Polynomial {
    Polynomial::from(n)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Failure(msg()))
    }
}

fn same(lhs: &Umbra, rhs: &Umbra, what: &str) -> Outcome {
    ensure(lhs == rhs, || format!("{what}: {lhs} vs {rhs}"))
}

fn same_gf(lhs: &Egf, rhs: &Egf, what: &str) -> Outcome {
    ensure(lhs == rhs, || {
        let n = (0..=lhs.order().min(rhs.order()))
            .find(|&n| lhs.coeff(n) != rhs.coeff(n))
            .unwrap_or(0);
        format!("{what}: coefficient {n} is {} vs {}", lhs.coeff(n), rhs.coeff(n))
    })
}

/// Order for symbolic checks whose cost grows with the number of variables.
fn symbolic_order(ctx: &Context) -> usize {
    ctx.order.min(8)
}

macro_rules! check {
    ($id:expr, $suite:ident, $anchor:expr, $desc:expr, $run:expr) => {
        Check {
            id: $id,
            suite: Suite::$suite,
            anchor: $anchor,
            description: $desc,
            run: $run,
        }
    };
}

pub fn checks() -> Vec<Check> {
    vec![
        // integer dot-products and sums
        check!("prop1.i", Prop1, "n.α ≡ n.γ ⇒ α ≡ γ", "integer dot is cancellable: (1/n).(n.α) recovers α", |ctx, rng| {
            for t in 0..ctx.trials {
                let a = random_umbra(rng, ctx.order);
                let n = 1 + (t % 5) as u64;
                let back = Umbra::dot_poly(&Polynomial::constant(rat(1, n as i64)), &Umbra::dot_int(n, &a));
                same(&back, &a, &format!("n = {n}"))?;
            }
            Ok(())
        }),
        check!("prop1.ii", Prop1, "n.(cα) ≡ c(n.α)", "integer dot commutes with scaling", |ctx, rng| {
            for t in 0..ctx.trials {
                let a = random_umbra(rng, ctx.order);
                let c = Polynomial::constant(rational(rng));
                let n = (t % 5) as u64;
                same(&Umbra::dot_int(n, &a.scale(&c)), &Umbra::dot_int(n, &a).scale(&c), "n.(cα)")?;
            }
            Ok(())
        }),
        check!("prop1.iii", Prop1, "n.(m.α) ≡ (nm).α ≡ m.(n.α)", "nested integer dots multiply", |ctx, rng| {
            for t in 0..ctx.trials {
                let a = random_umbra(rng, ctx.order);
                let (n, m) = ((t % 4) as u64, (t / 4 % 4) as u64);
                let nm = Umbra::dot_int(n * m, &a);
                same(&Umbra::dot_int(n, &Umbra::dot_int(m, &a)), &nm, "n.(m.α)")?;
                same(&Umbra::dot_int(m, &Umbra::dot_int(n, &a)), &nm, "m.(n.α)")?;
            }
            Ok(())
        }),
        check!("prop1.iv", Prop1, "(n+m).α ≡ n.α + m.α'", "integer dot distributes over integer sums", |ctx, rng| {
            for t in 0..ctx.trials {
                let a = random_umbra(rng, ctx.order);
                let (n, m) = ((t % 4) as u64, (t / 4 % 4) as u64);
                same(
                    &Umbra::dot_int(n + m, &a),
                    &Umbra::dot_int(n, &a).sum(&Umbra::dot_int(m, &a)),
                    "(n+m).α",
                )?;
            }
            Ok(())
        }),
        check!("prop1.v", Prop1, "n.α + n.γ ≡ n.(α + γ)", "integer dot distributes over umbral sums", |ctx, rng| {
            for t in 0..ctx.trials {
                let (a, g) = (random_umbra(rng, ctx.order), random_umbra(rng, ctx.order));
                let n = (t % 5) as u64;
                same(
                    &Umbra::dot_int(n, &a).sum(&Umbra::dot_int(n, &g)),
                    &Umbra::dot_int(n, &a.sum(&g)),
                    "n.(α+γ)",
                )?;
            }
            Ok(())
        }),
        check!("prop1.polynomial", Prop1, "(x+y).α ≡ x.α + y.α'; x.(y.α) ≡ (xy).α", "integer-dot laws with symbolic x, y", |ctx, rng| {
            let order = symbolic_order(ctx);
            let (x, y) = (var("x"), var("y"));
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, order);
                same(
                    &Umbra::dot_poly(&(&x + &y), &a),
                    &Umbra::dot_poly(&x, &a).sum(&Umbra::dot_poly(&y, &a)),
                    "(x+y).α",
                )?;
                same(
                    &Umbra::dot_poly(&x, &Umbra::dot_poly(&y, &a)),
                    &Umbra::dot_poly(&(&x * &y), &a),
                    "x.(y.α)",
                )?;
            }
            Ok(())
        }),
        check!("sum.inverse", Prop1, "α + (-1.α') ≡ ε", "the inverse umbra cancels", |ctx, rng| {
            for _ in 0..ctx.trials {
                let a = random_umbra(rng, ctx.order);
                same(&a.sum(&a.inverse()), &Umbra::epsilon(ctx.order), "α + inverse")?;
                same(&a.inverse(), &Umbra::dot_poly(&int(-1), &a), "-1.α")?;
            }
            Ok(())
        }),
        check!("canonical.bernoulli_uniform", Prop1, "ι + (uniform on [0,1]) ≡ ε; E[U^n] = 1/(n+1)", "Bernoulli numbers are inverse to the uniform umbra", |ctx, _| {
            let b = Umbra::canonical(Canonical::BernoulliNumbers, ctx.order);
            let unif = Umbra::canonical(Canonical::Uniform01, ctx.order);
            same(&b.sum(&unif), &Umbra::epsilon(ctx.order), "ι + uniform")?;
            for n in 0..=ctx.order {
                let expected = Polynomial::constant(rat(1, n as i64 + 1));
                ensure(unif.moment(n) == &expected, || format!("E[U^{n}] = {}", unif.moment(n)))?;
            }
            // g.f. t / (e^t - 1) of the Bernoulli numbers times (e^t - 1) / t
            let gf = Egf::from_fn(ctx.order, |n| Polynomial::constant(rat(1, n as i64 + 1)));
            same_gf(&b.to_egf().mul(&gf), &Egf::one(ctx.order), "product of generating functions")
        }),
        check!("bell.overline_route", Prop1, "B_{n,k} = C(n,k) a_1^k E[(k.ᾱ)^{n-k}]", "partial Bell polynomials through the overline umbra", |ctx, rng| {
            let order = ctx.order.min(8);
            for _ in 0..ctx.few() {
                let a = random_umbra_unit_first(rng, order);
                for n in 1..=order {
                    for k in 1..=n {
                        let direct = bell_partial(n, k, &a.moments()[1..])?;
                        let via = bell_partial_via_overline(n, k, &a)?;
                        ensure(direct == via, || format!("B_{{{n},{k}}}: {direct} vs {via}"))?;
                    }
                }
            }
            Ok(())
        }),
        // umbral dot-products
        check!("prop2.a", Prop2, "η.α ≡ η.γ ⇒ α ≡ γ", "umbral dot is cancellable: β.(η^{<-1>}.β.(η.α)) recovers α", |ctx, rng| {
            let beta = Umbra::bell(ctx.order);
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                let eta = random_umbra_unit_first(rng, ctx.order);
                let eta_inv = eta.compositional_inverse()?;
                let inner = ctx.dot(&beta, &ctx.dot(&eta, &a));
                let recovered = ctx.dot(&beta, &ctx.dot(&eta_inv, &inner));
                same(&recovered, &a, "recovered α")?;
            }
            Ok(())
        }),
        check!("prop2.b", Prop2, "η.(cα) ≡ c(η.α)", "umbral dot commutes with scaling", |ctx, rng| {
            for _ in 0..ctx.few() {
                let (a, eta) = (random_umbra(rng, ctx.order), random_umbra(rng, ctx.order));
                let c = Polynomial::constant(rational(rng));
                same(&ctx.dot(&eta, &a.scale(&c)), &ctx.dot(&eta, &a).scale(&c), "η.(cα)")?;
            }
            Ok(())
        }),
        check!("prop2.c", Prop2, "(α + η).γ ≡ α.γ + η.γ'", "umbral dot is right-distributive", |ctx, rng| {
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                let eta = random_umbra(rng, ctx.order);
                let g = random_umbra(rng, ctx.order);
                same(&ctx.dot(&a.sum(&eta), &g), &ctx.dot(&a, &g).sum(&ctx.dot(&eta, &g)), "(α+η).γ")?;
            }
            Ok(())
        }),
        check!("prop2.d", Prop2, "η.(γ.α) ≡ (η.γ).α", "umbral dot is associative", |ctx, rng| {
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                let g = random_umbra(rng, ctx.order);
                let eta = random_umbra(rng, ctx.order);
                same(&ctx.dot(&eta, &ctx.dot(&g, &a)), &ctx.dot(&ctx.dot(&eta, &g), &a), "η.(γ.α)")?;
            }
            Ok(())
        }),
        check!("prop2.left_distributivity_fails", Prop2, "γ.(α + η) ≢ γ.α + γ.η", "counterexample: β.(u + u) differs from β.u + β.u at order 2", |ctx, _| {
            let order = ctx.order.max(2);
            let (beta, u) = (Umbra::bell(order), Umbra::unity(order));
            let lhs = ctx.dot(&beta, &u.sum(&u));
            let rhs = ctx.dot(&beta, &u).sum(&ctx.dot(&beta, &u));
            ensure(lhs.moment(2) != rhs.moment(2), || {
                format!("second moments agree: {} and {}", lhs.moment(2), rhs.moment(2))
            })
        }),
        check!("prop2.dot_routes", Prop2, "E[(γ.α)^n] = Σ g_(i) B_{n,i}(a_1, ...) = n![t^n] g(log f(t))", "Bell-polynomial and generating-function dots agree", |ctx, rng| {
            for _ in 0..ctx.few() {
                let (a, g) = (random_umbra(rng, ctx.order), random_umbra(rng, ctx.order));
                same(&ctx.dot(&g, &a), &g.dot_via_gf(&a), "γ.α")?;
            }
            Ok(())
        }),
        check!("prop2.first_moment", Prop2, "E[γ.α] = g_1 a_1", "first moment of a dot-product is the product of first moments", |ctx, rng| {
            let order = ctx.order.max(1);
            for _ in 0..ctx.trials {
                let (a, g) = (random_umbra(rng, order), random_umbra(rng, order));
                let d = ctx.dot(&g, &a);
                ensure(d.moment(1) == &(g.moment(1) * a.moment(1)), || format!("E[γ.α] = {}", d.moment(1)))?;
            }
            Ok(())
        }),
        check!("prop2.scaled_unity", Prop2, "α.(x u) ≡ x α", "dotting with a scaled unity umbra scales", |ctx, rng| {
            let x = var("x");
            let xu = Umbra::unity(ctx.order).scale(&x);
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                same(&ctx.dot(&a, &xu), &a.scale(&x), "α.(xu)")?;
            }
            Ok(())
        }),
        check!("prop2.partition_recursion", Prop2, "E[(β.α)^n] = Σ_j C(n-1,j) a_{n-j} E[(β.α)^j]", "moment recursion of the partition umbra", |ctx, rng| {
            let order = ctx.order.min(10);
            let beta = Umbra::bell(order);
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, order);
                let p = ctx.dot(&beta, &a);
                for n in 1..=order {
                    let rhs: Polynomial = (0..n)
                        .map(|j| (a.moment(n - j) * p.moment(j)).scale(&Rational::from_integer(binomial(n - 1, j))))
                        .sum();
                    ensure(p.moment(n) == &rhs, || format!("n = {n}: {} vs {rhs}", p.moment(n)))?;
                }
            }
            Ok(())
        }),
        check!("prop2.binomial_type", Prop2, "(x + y).β.α ≡ x.β.α + y.β.α", "the polynomial partition umbra is of binomial type in symbolic x, y", |ctx, rng| {
            let order = symbolic_order(ctx);
            let beta = Umbra::bell(order);
            let (x, y) = (var("x"), var("y"));
            for _ in 0..ctx.few() {
                let ba = ctx.dot(&beta, &random_umbra(rng, order));
                same(
                    &Umbra::dot_poly(&(&x + &y), &ba),
                    &Umbra::dot_poly(&x, &ba).sum(&Umbra::dot_poly(&y, &ba)),
                    "(x+y).β.α",
                )?;
            }
            Ok(())
        }),
        // cumulants
        check!("cumulant.routes", Cumulant, "k_n = Σ_π d_π a_π = Σ_i (-1)^{i-1}(i-1)! B_{n,i} = n![t^n] log f", "three cumulant routes agree, and three moment routes invert them", |ctx, rng| {
            for _ in 0..ctx.trials {
                let a = random_umbra(rng, ctx.order);
                let k = cumulants_via_log(&a);
                ensure(cumulants_via_bell(&a) == k, || "Bell-polynomial route differs".into())?;
                ensure(cumulants_via_partitions(&a) == k, || "partition route differs".into())?;
                same(&moments_from_cumulants(&k), &a, "complete Bell polynomials")?;
                same(&moments_from_partitions(&k), &a, "Σ c_π κ_π")?;
                same(&moments_via_recursion(&k), &a, "a_n = Σ C(n-1,j) a_j k_{n-j}")?;
            }
            Ok(())
        }),
        check!("cumulant.inversion", Cumulant, "κ_α ≡ χ.α; α ≡ β.κ_α", "cumulants are χ.α and β recovers the moments", |ctx, rng| {
            let (chi, beta) = (Umbra::singleton(ctx.order), Umbra::bell(ctx.order));
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                let kappa = ctx.dot(&chi, &a);
                same(&kappa, &cumulants_via_log(&a).as_umbra(), "χ.α")?;
                same(&ctx.dot(&beta, &kappa), &a, "β.κ_α")?;
            }
            Ok(())
        }),
        check!("cumulant.additivity", Cumulant, "χ.(α + γ) ≡ χ.α ∔ χ.γ", "cumulants of a sum add", |ctx, rng| {
            for _ in 0..ctx.trials {
                let (a, g) = (random_umbra(rng, ctx.order), random_umbra(rng, ctx.order));
                ensure(cumulant_additivity_check(&a, &g), || format!("α = {a}, γ = {g}"))?;
            }
            let order = symbolic_order(ctx);
            let (p, x) = (build(&ModelSpec::poisson(var("x"), order))?, Umbra::dot_poly(&var("y"), &Umbra::bell(order)));
            ensure(cumulant_additivity_check(&p, &x), || "symbolic Poisson pair".into())
        }),
        check!("cumulant.homogeneity", Cumulant, "χ.(cα) ≡ c(χ.α)", "k_n(cα) = c^n k_n(α) for symbolic c", |ctx, rng| {
            let c = var("c");
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, symbolic_order(ctx));
                ensure(cumulant_homogeneity_check(&a, &c), || format!("α = {a}"))?;
            }
            Ok(())
        }),
        check!("cumulant.shift", Cumulant, "χ.(α + c.u) ≡ χ.α ∔ χ.c", "a shift moves only the first cumulant, for symbolic c", |ctx, rng| {
            let c = var("c");
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, symbolic_order(ctx));
                ensure(cumulant_shift_check(&a, &c), || format!("α = {a}"))?;
            }
            Ok(())
        }),
        check!("cumulant.central", Cumulant, "χ.(α - a_1.u): k_1 = 0, k_n unchanged", "the central umbra keeps all but the first cumulant", |ctx, rng| {
            for _ in 0..ctx.trials {
                let a = random_umbra(rng, ctx.order);
                let (k, kc) = (cumulants_via_log(&a), cumulants_via_log(&a.central()));
                for n in 1..=ctx.order {
                    let expected = if n == 1 { Polynomial::zero() } else { k.values()[n].clone() };
                    ensure(kc.values()[n] == expected, || format!("k_{n} = {}", kc.values()[n]))?;
                }
            }
            Ok(())
        }),
        check!("cumulant.unity_inverse", Cumulant, "u^{<-1>} g.f. 1 + Σ (-1)^{i-1}(i-1)! t^i/i!", "moments of the compositional inverse of u", |ctx, _| {
            let v = Umbra::unity_inverse(ctx.order);
            same(&Umbra::unity(ctx.order).compositional_inverse()?, &v, "u^{<-1>}")?;
            for n in 1..=ctx.order {
                let f = Polynomial::from(factorial(n - 1));
                let expected = if n % 2 == 1 { f } else { -f };
                ensure(v.moment(n) == &expected, || format!("moment {n} is {}", v.moment(n)))?;
            }
            Ok(())
        }),
        check!("cumulant.special", Cumulant, "κ_ε ≡ ε, κ_u ≡ χ, κ_χ ≡ u^{<-1>}, κ_β ≡ u", "cumulant umbrae of the canonical umbrae", |ctx, _| {
            let o = ctx.order;
            let chi = Umbra::singleton(o);
            let pairs = [
                (Umbra::epsilon(o), Umbra::epsilon(o), "κ_ε"),
                (Umbra::unity(o), Umbra::singleton(o), "κ_u"),
                (Umbra::singleton(o), Umbra::unity_inverse(o), "κ_χ"),
                (Umbra::bell(o), Umbra::unity(o), "κ_β"),
            ];
            for (a, expected, what) in pairs {
                same(&ctx.dot(&chi, &a), &expected, what)?;
            }
            Ok(())
        }),
        check!("cumulant.levy", Cumulant, "t.α ≡ t.β.κ_α", "every t.α is compound Poisson in its cumulants, for symbolic t", |ctx, rng| {
            let t = var("t");
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, symbolic_order(ctx));
                let (lhs, rhs) = levy_identity(&t, &a);
                same(&lhs, &rhs, "t.α")?;
            }
            Ok(())
        }),
        // factorial moments and the χ/β duality
        check!("factorial.inversion", Factorial, "φ_α ≡ α.χ; α ≡ φ_α.β", "factorial moments are α.χ and β recovers the moments", |ctx, rng| {
            let (chi, beta) = (Umbra::singleton(ctx.order), Umbra::bell(ctx.order));
            for _ in 0..ctx.trials {
                let a = random_umbra(rng, ctx.order);
                let phi = ctx.dot(&a, &chi);
                same(&phi, &factorial_umbra(&a).as_umbra(), "α.χ")?;
                same(&ctx.dot(&phi, &beta), &a, "φ_α.β")?;
                same(&umbra_from_factorial(&factorial_umbra(&a)), &a, "Stirling round trip")?;
            }
            Ok(())
        }),
        check!("factorial.stirling_inversion", Factorial, "Σ_k S(n,k) s(k,m) = δ_{nm}", "the two Stirling triangles are inverse", |ctx, _| {
            let (s1, s2) = (stirling1_table(ctx.order), stirling2_table(ctx.order));
            for n in 0..=ctx.order {
                for m in 0..=ctx.order {
                    let total: Rational = (m..=n).map(|k| &s2[n][k] * &s1[k][m]).sum();
                    let expected = Rational::from_integer((n == m).into());
                    ensure(total == expected, || format!("n = {n}, m = {m}: {total}"))?;
                }
            }
            Ok(())
        }),
        check!("factorial.cumulant_gf", Factorial, "κ_α.χ g.f. 1 + log f(log(1 + t))", "factorial cumulants match the composed generating function", |ctx, rng| {
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                same_gf(&factorial_cumulants(&a).as_umbra().to_egf(), &factorial_cumulant_gf(&a), "factorial cumulants")?;
            }
            Ok(())
        }),
        check!("factorial.central_gf", Factorial, "(α - a_1.u).χ g.f. f(log(1 + t)) (1 + t)^{-a_1}", "factorial moments of the central umbra match the composed generating function", |ctx, rng| {
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                same_gf(&factorial_umbra(&a.central()).as_umbra().to_egf(), &central_factorial_gf(&a), "central factorial moments")?;
            }
            Ok(())
        }),
        check!("gf.chi", Factorial, "χ: 1 + t = 1 + Σ_n [Σ_k s(n,k)] t^n/n!", "singleton umbra generating function", |ctx, _| {
            let s1 = stirling1_table(ctx.order);
            let expected = Egf::from_fn(ctx.order, |n| match n {
                0 => Polynomial::one(),
                _ => Polynomial::constant((1..=n).map(|k| s1[n][k].clone()).sum()),
            });
            same_gf(&Umbra::singleton(ctx.order).to_egf(), &expected, "χ")?;
            same_gf(&expected, &Egf::one_plus_t(ctx.order), "1 + t")
        }),
        check!("gf.x_chi", Factorial, "x.χ: (1 + t)^x = 1 + Σ_n [Σ_k s(n,k) x^k] t^n/n!", "polynomial dot of the singleton umbra", |ctx, _| {
            let s1 = stirling1_table(ctx.order);
            let x = var("x");
            let expected = Egf::from_fn(ctx.order, |n| match n {
                0 => Polynomial::one(),
                _ => (1..=n).map(|k| x.pow(k as u32).scale(&s1[n][k])).sum(),
            });
            same_gf(&Umbra::dot_poly(&x, &Umbra::singleton(ctx.order)).to_egf(), &expected, "x.χ")
        }),
        check!("gf.alpha_chi", Factorial, "α.χ: f(log(1 + t))", "umbra dotted with the singleton umbra", |ctx, rng| {
            let chi = Umbra::singleton(ctx.order);
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                let expected = a.to_egf().compose_delta(&log_one_plus_t(ctx.order))?;
                same_gf(&ctx.dot(&a, &chi).to_egf(), &expected, "α.χ")?;
            }
            Ok(())
        }),
        check!("gf.chi_alpha", Factorial, "χ.α: 1 + log f(t)", "singleton umbra dotted with an umbra", |ctx, rng| {
            let chi = Umbra::singleton(ctx.order);
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                same_gf(&ctx.dot(&chi, &a).to_egf(), &a.to_egf().log()?, "χ.α")?;
            }
            Ok(())
        }),
        check!("gf.beta", Factorial, "β: exp(e^t - 1) = 1 + Σ_n [Σ_k S(n,k)] t^n/n!", "Bell umbra generating function", |ctx, _| {
            let s2 = stirling2_table(ctx.order);
            let expected = Egf::from_fn(ctx.order, |n| Polynomial::constant((0..=n).map(|k| s2[n][k].clone()).sum()));
            same_gf(&Umbra::bell(ctx.order).to_egf(), &expected, "β")?;
            same_gf(&expected, &Egf::exp_t(ctx.order).exp()?, "exp(e^t - 1)")
        }),
        check!("gf.x_beta", Factorial, "x.β: exp(x(e^t - 1)) = 1 + Σ_n [Σ_k S(n,k) x^k] t^n/n!", "polynomial dot of the Bell umbra", |ctx, _| {
            let s2 = stirling2_table(ctx.order);
            let x = var("x");
            let expected = Egf::from_fn(ctx.order, |n| (0..=n).map(|k| x.pow(k as u32).scale(&s2[n][k])).sum());
            same_gf(&Umbra::dot_poly(&x, &Umbra::bell(ctx.order)).to_egf(), &expected, "x.β")
        }),
        check!("gf.alpha_beta", Factorial, "α.β: f(e^t - 1)", "umbra dotted with the Bell umbra", |ctx, rng| {
            let beta = Umbra::bell(ctx.order);
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                let expected = a.to_egf().compose_delta(&Egf::exp_t(ctx.order))?;
                same_gf(&ctx.dot(&a, &beta).to_egf(), &expected, "α.β")?;
            }
            Ok(())
        }),
        check!("gf.beta_alpha", Factorial, "β.α: exp(f(t) - 1)", "Bell umbra dotted with an umbra", |ctx, rng| {
            let beta = Umbra::bell(ctx.order);
            for _ in 0..ctx.few() {
                let a = random_umbra(rng, ctx.order);
                same_gf(&ctx.dot(&beta, &a).to_egf(), &a.to_egf().exp()?, "β.α")?;
            }
            Ok(())
        }),
        check!("duality.chi_beta", Factorial, "χ.β ≡ u ≡ β.χ", "singleton and Bell umbrae cancel under the dot", |ctx, _| {
            let (chi, beta, u) = (Umbra::singleton(ctx.order), Umbra::bell(ctx.order), Umbra::unity(ctx.order));
            same(&ctx.dot(&chi, &beta), &u, "χ.β")?;
            same(&ctx.dot(&beta, &chi), &u, "β.χ")
        }),
        check!("duality.uinv_beta", Factorial, "χ ≡ u^{<-1>}.β ≡ β.u^{<-1>}", "the singleton umbra through the inverse of u", |ctx, _| {
            let (chi, beta, v) = (Umbra::singleton(ctx.order), Umbra::bell(ctx.order), Umbra::unity_inverse(ctx.order));
            same(&ctx.dot(&v, &beta), &chi, "u^{<-1>}.β")?;
            same(&ctx.dot(&beta, &v), &chi, "β.u^{<-1>}")
        }),
        check!("bell.numbers", Factorial, "E[β^n] = number of set partitions of [n]", "Bell umbra moments match set-partition enumeration", |ctx, _| {
            let beta = Umbra::bell(ctx.order.min(10));
            for n in 0..=beta.order() {
                let count = set_partition_count(n);
                ensure(beta.moment(n) == &int(count), || format!("n = {n}: {} vs {count}", beta.moment(n)))?;
            }
            Ok(())
        }),
        // distribution models
        check!("models.poisson_cumulants", Models, "κ_{x.β} ≡ x: k_n = x", "every cumulant of poisson(x) is x", |ctx, _| {
            for order in 1..=ctx.order {
                let spec = ModelSpec::poisson(var("x"), order);
                let k = cumulants_via_log(&build(&spec)?);
                ensure(k.values()[1..].iter().all(|v| v == &var("x")), || format!("order {order}: {}", k.as_umbra()))?;
                ensure(poisson_cumulants(&spec)? == k, || format!("closed form at order {order}"))?;
            }
            Ok(())
        }),
        check!("models.poisson_factorial", Models, "(x.β).χ: a_(n) = x^n", "factorial moments of poisson(x) are powers of x", |ctx, _| {
            let spec = ModelSpec::poisson(var("x"), ctx.order);
            let fm = factorial_umbra(&build(&spec)?);
            for n in 0..=ctx.order {
                ensure(fm.values()[n] == var("x").pow(n as u32), || format!("n = {n}: {}", fm.values()[n]))?;
            }
            ensure(poisson_factorial_moments(&spec)? == fm, || "closed form differs".into())
        }),
        check!("models.binomial_factorial", Models, "(n.χ.p.β).χ: a_(j) = (n)_j p^j", "factorial moments of binomial(n, p)", |ctx, _| {
            let p = var("p");
            for n in 0..=8u32 {
                let fm = factorial_umbra(&build(&ModelSpec::binomial(n, p.clone(), ctx.order))?);
                for j in 0..=ctx.order {
                    let expected = &falling_factorial(&int(n as i64), j) * &p.pow(j as u32);
                    ensure(fm.values()[j] == expected, || format!("n = {n}, j = {j}: {}", fm.values()[j]))?;
                }
            }
            Ok(())
        }),
        check!("models.closed_forms", Models, "x.β.α: k_n = x a_n; γ.β.α: k_n = Σ k_i(γ) B_{n,i}(a); γ.β: a_(n) = g_n", "Poisson-family closed forms equal the generic transforms", |ctx, rng| {
            let order = ctx.order.min(10);
            for _ in 0..ctx.few() {
                let alpha = random_umbra(rng, order);
                let gamma = random_umbra(rng, order);
                let specs = [
                    ModelSpec::poisson(var("x"), order),
                    ModelSpec::compound_poisson(var("x"), alpha.clone(), order),
                    ModelSpec::randomized_poisson(gamma.clone(), order),
                    ModelSpec::compound_randomized(gamma, alpha, order),
                ];
                for spec in &specs {
                    let u = build(spec)?;
                    ensure(poisson_cumulants(spec)? == cumulants_via_log(&u), || format!("{} cumulants", spec.kind()))?;
                    ensure(poisson_factorial_moments(spec)? == factorial_umbra(&u), || format!("{} factorial moments", spec.kind()))?;
                }
            }
            Ok(())
        }),
        check!("models.randomized_bell", Models, "(β.β).χ ≡ β", "factorial moments of the Bell-randomized Poisson are Bell numbers", |ctx, _| {
            let fm = factorial_umbra(&build(&ModelSpec::randomized_poisson(Umbra::bell(ctx.order), ctx.order))?);
            same(&fm.as_umbra(), &Umbra::bell(ctx.order), "factorial moments")
        }),
        check!("models.bernoulli", Models, "χ.p.β: g.f. q + p e^t; a_(1) = p, a_(n) = 0 for n > 1", "Bernoulli moments and factorial moments", |ctx, _| {
            let p = var("p");
            let b = build(&ModelSpec::bernoulli(p.clone(), ctx.order))?;
            let fm = factorial_umbra(&b);
            for n in 1..=ctx.order {
                ensure(b.moment(n) == &p, || format!("moment {n} is {}", b.moment(n)))?;
                let expected = if n == 1 { p.clone() } else { Polynomial::zero() };
                ensure(fm.values()[n] == expected, || format!("factorial moment {n} is {}", fm.values()[n]))?;
            }
            let binom1 = build(&ModelSpec::binomial(1, p.clone(), ctx.order))?;
            same(&binom1, &b, "binomial(1, p)")
        }),
        check!("models.binomial_additivity", Models, "(n + m).ξ ≡ n.ξ + m.ξ'", "binomial(n + m, p) is the sum of binomial(n, p) and binomial(m, p)", |ctx, _| {
            let p = var("p");
            let order = symbolic_order(ctx);
            for (n, m) in [(1, 1), (2, 3), (4, 1)] {
                let lhs = build(&ModelSpec::binomial(n + m, p.clone(), order))?;
                let rhs = build(&ModelSpec::binomial(n, p.clone(), order))?.sum(&build(&ModelSpec::binomial(m, p.clone(), order))?);
                same(&lhs, &rhs, &format!("n = {n}, m = {m}"))?;
            }
            Ok(())
        }),
        check!("models.binomial_cumulants", Models, "χ.(n.ξ) ≡ ∔_n u^{<-1>}.p.β", "binomial cumulants are n copies of the Bernoulli cumulants", |ctx, _| {
            let order = symbolic_order(ctx);
            for n in 1..=4 {
                binomial_cumulant_decomposition(n, &var("p"), order)?;
            }
            binomial_cumulant_decomposition(3, &Polynomial::constant(rat(1, 2)), ctx.order)?;
            Ok(())
        }),
        check!("models.gamma", Models, "-c(a.χ) inverse: g.f. (1 - ct)^{-a}, k_n = a c^n (n-1)!", "Gamma moments and cumulants for symbolic a, c", |ctx, _| {
            let order = symbolic_order(ctx);
            let (a, c) = (var("a"), var("c"));
            let g = build(&ModelSpec::gamma(a.clone(), c.clone(), order))?;
            let k = cumulants_via_log(&g);
            let mut rising = Polynomial::one();
            for n in 1..=order {
                rising = &rising * &(&a + &int(n as i64 - 1));
                let moment = &rising * &c.pow(n as u32);
                ensure(g.moment(n) == &moment, || format!("moment {n} is {}", g.moment(n)))?;
                let cumulant = (&a * &c.pow(n as u32)).scale(&Rational::from_integer(factorial(n - 1)));
                ensure(k.values()[n] == cumulant, || format!("cumulant {n} is {}", k.values()[n]))?;
            }
            Ok(())
        }),
        check!("models.mixture", Models, "g.f. of the mixture = Σ p_i f_i(t)", "mixture generating function is the weighted sum", |ctx, rng| {
            for _ in 0..ctx.few() {
                let (a, b) = (random_umbra(rng, ctx.order), random_umbra(rng, ctx.order));
                let w = var("w");
                let one_minus = &Polynomial::one() - &w;
                let mix = mixture(&[(w.clone(), a.clone()), (one_minus.clone(), b.clone())])?;
                let expected = a.to_egf().scale(&w).add(&b.to_egf().scale(&one_minus));
                same_gf(&mix.to_egf(), &expected, "mixture")?;
            }
            Ok(())
        }),
    ]
}

/// Set partitions of an `n`-set, counted by walking restricted growth strings.
fn set_partition_count(n: usize) -> i64 {
    fn walk(remaining: usize, blocks: usize) -> i64 {
        match remaining {
            0 => 1,
            _ => (0..=blocks).map(|b| walk(remaining - 1, blocks.max(b + 1))).sum(),
        }
    }
    match n {
        0 => 1,
        _ => walk(n - 1, 1),
    }
}
