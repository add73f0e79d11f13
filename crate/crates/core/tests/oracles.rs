//! Library results checked against independent brute-force computations.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use proptest::prelude::*;
use umbral::coefficients::{factorial, rat};
use umbral::combinatorics::{
    bell_number, bell_partial, c_pi, d_pi, partitions, stirling1, stirling2, Partition,
};
use umbral::transforms::cumulants_via_partitions;
use umbral::{Canonical, Egf, Polynomial, Rational, Umbra};

/// Every set partition of {0..n}, as block sizes, via restricted growth strings.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn walk(i: usize, n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            let blocks = rgs.iter().max().map_or(0, |m| m + 1);
            let mut sizes = vec![0; blocks];
            for &b in rgs.iter() {
                sizes[b] += 1;
            }
            out.push(sizes);
            return;
        }
        for b in 0..=max {
            rgs.push(b);
            walk(i + 1, n, rgs, max.max(b + 1), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        walk(1, n, &mut vec![0], 1, &mut out);
    }
    out
}

fn sorted_desc(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn c(n: i64) -> Polynomial {
    Polynomial::from(n)
}

fn q(r: &Rational) -> Polynomial {
    Polynomial::constant(r.clone())
}

const BELL: [i64; 11] = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];

#[test]
fn bell_numbers_match_set_partition_count() {
    for n in 0..=10 {
        let count = set_partitions(n).len() as i64;
        assert_eq!(count, BELL[n]);
        assert_eq!(bell_number(n), Rational::from_integer(count.into()));
    }
    let beta = Umbra::bell(10);
    let counted: Vec<Polynomial> = (0..=10).map(|n| c(set_partitions(n).len() as i64)).collect();
    assert_eq!(beta.moments(), &counted[..]);
}

#[test]
fn stirling2_and_partition_coefficients_match_enumeration() {
    for n in 0..=9 {
        let mut by_blocks = vec![0i64; n + 1];
        let mut by_type: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for sizes in set_partitions(n) {
            by_blocks[sizes.len()] += 1;
            *by_type.entry(sorted_desc(sizes)).or_default() += 1;
        }
        for k in 0..=n {
            assert_eq!(stirling2(n, k).unwrap(), rat(by_blocks[k], 1), "S({n},{k})");
        }
        for p in partitions(n) {
            assert_eq!(c_pi(&p), rat(by_type[&p.parts()], 1), "c_pi {p}");
        }
    }
}

#[test]
fn stirling1_matches_falling_factorial_expansion() {
    // (x)_n as integer coefficient vectors, index = power of x
    let mut poly: Vec<i128> = vec![1];
    for n in 0..=12usize {
        for k in 0..=n {
            assert_eq!(stirling1(n, k).unwrap(), Rational::from_integer(poly[k].into()), "s({n},{k})");
        }
        let mut next = vec![0i128; poly.len() + 1];
        for (k, &coef) in poly.iter().enumerate() {
            next[k + 1] += coef;
            next[k] -= coef * n as i128;
        }
        poly = next;
    }
}

#[test]
fn integer_partitions_match_sorted_compositions() {
    for n in 1..=12usize {
        let mut expected = BTreeSet::new();
        for mask in 0u32..(1 << (n - 1)) {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..n - 1 {
                if mask & (1 << i) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            expected.insert(sorted_desc(parts));
        }
        let got: Vec<Vec<usize>> = partitions(n).iter().map(Partition::parts).collect();
        let got_set: BTreeSet<Vec<usize>> = got.iter().cloned().collect();
        assert_eq!(got.len(), got_set.len(), "duplicates for n = {n}");
        assert_eq!(got_set, expected);
        let mut reverse_lex = got.clone();
        reverse_lex.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(got, reverse_lex);
    }
}

#[test]
fn partial_bell_matches_set_partition_sum() {
    let a: Vec<Polynomial> = (1..=8).map(|i| Polynomial::var(&format!("a{i}"))).collect();
    for n in 1..=8 {
        let mut expected = vec![Polynomial::zero(); n + 1];
        for sizes in set_partitions(n) {
            let term: Polynomial = sizes.iter().map(|&s| &a[s - 1]).product();
            expected[sizes.len()] += term;
        }
        for k in 1..=n {
            assert_eq!(bell_partial(n, k, &a).unwrap(), expected[k], "B_{{{n},{k}}}");
        }
    }
}

#[test]
fn cumulants_match_set_partition_moebius_sum() {
    let moments = [1i64, 2, -1, 3, 5, -4, 0, 7, 2];
    let alpha = Umbra::from_integers(&moments).unwrap();
    let k = cumulants_via_partitions(&alpha);
    for n in 1..=8 {
        let mut total = Rational::zero();
        for sizes in set_partitions(n) {
            let blocks = sizes.len();
            let mut w = Rational::from_integer(factorial(blocks - 1));
            if blocks % 2 == 0 {
                w = -w;
            }
            for s in sizes {
                w *= rat(moments[s], 1);
            }
            total += w;
        }
        assert_eq!(k.values()[n], q(&total), "k_{n}");
    }
    // d_pi totals over a type equal the Moebius weight times the type count
    for n in 1..=7 {
        for p in partitions(n) {
            let nu = p.nu();
            let mut w = Rational::from_integer(factorial(nu - 1)) * c_pi(&p);
            if nu % 2 == 0 {
                w = -w;
            }
            assert_eq!(d_pi(&p), w);
        }
    }
}

#[test]
fn bernoulli_numbers_match_akiyama_tanigawa() {
    let order = 12;
    let mut expected = Vec::new();
    let mut row: Vec<Rational> = Vec::new();
    for m in 0..=order {
        row.push(rat(1, m as i64 + 1));
        for j in (1..=m).rev() {
            row[j - 1] = Rational::from_integer((j as i64).into()) * (&row[j - 1] - &row[j]);
        }
        expected.push(row[0].clone());
    }
    // the algorithm yields B_1 = +1/2
    expected[1] = -expected[1].clone();
    let b = Umbra::canonical(Canonical::BernoulliNumbers, order);
    let got: Vec<Polynomial> = expected.iter().map(q).collect();
    assert_eq!(b.moments(), &got[..]);
    let unif = Umbra::canonical(Canonical::Uniform01, order);
    for n in 0..=order {
        assert_eq!(unif.moment(n), &q(&rat(1, n as i64 + 1)));
    }
}

#[test]
fn unity_inverse_moments() {
    let v = Umbra::unity_inverse(10);
    for n in 1..=10usize {
        let mut expected = Rational::from_integer(factorial(n - 1));
        if n % 2 == 0 {
            expected = -expected;
        }
        assert_eq!(v.moment(n), &q(&expected));
    }
}

/// Ordinary power series helpers over rationals.
mod ogf {
    use super::*;

    pub fn from_egf(f: &[Rational]) -> Vec<Rational> {
        f.iter()
            .enumerate()
            .map(|(n, c)| c / Rational::from_integer(factorial(n)))
            .collect()
    }

    pub fn to_egf(f: &[Rational]) -> Vec<Rational> {
        f.iter()
            .enumerate()
            .map(|(n, c)| c * Rational::from_integer(factorial(n)))
            .collect()
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().min(b.len());
        (0..n)
            .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum())
            .collect()
    }

    /// `g(h)` by summing powers of `h`, which must have zero constant term.
    pub fn substitute(g: &[Rational], h: &[Rational]) -> Vec<Rational> {
        let n = h.len();
        let mut out = vec![Rational::zero(); n];
        let mut power = vec![Rational::zero(); n];
        power[0] = Rational::one();
        for gk in g.iter().take(n) {
            for (o, p) in out.iter_mut().zip(&power) {
                *o += gk * p;
            }
            power = mul(&power, h);
        }
        out
    }

    pub fn inverse(a: &[Rational]) -> Vec<Rational> {
        let mut b = vec![Rational::zero(); a.len()];
        b[0] = a[0].recip();
        for n in 1..a.len() {
            let s: Rational = (1..=n).map(|i| &a[i] * &b[n - i]).sum();
            b[n] = -s * &b[0];
        }
        b
    }

    /// Lagrange inversion: `[t^n] h = (1/n) [t^{n-1}] (t / f)^n`.
    pub fn revert(f: &[Rational]) -> Vec<Rational> {
        let n = f.len();
        let shifted: Vec<Rational> = f[1..].to_vec();
        let phi = inverse(&shifted);
        let mut h = vec![Rational::zero(); n];
        let mut power = phi.clone();
        for k in 1..n {
            h[k] = &power[k - 1] / Rational::from_integer((k as i64).into());
            power = mul(&power, &phi);
        }
        h
    }
}

fn rational_seq(len: usize, lead: Option<Rational>) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-9i64..=9, 1i64..=9), len).prop_map(move |v| {
        let mut out: Vec<Rational> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
        if let Some(l) = &lead {
            out[0] = l.clone();
        }
        out
    })
}

fn egf(values: &[Rational]) -> Egf {
    Egf::new(values.iter().map(q).collect())
}

fn as_rationals(f: &Egf) -> Vec<Rational> {
    f.coeffs().iter().map(|c| c.as_constant().unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn compose_delta_matches_naive_substitution(
        g in rational_seq(9, None),
        f in rational_seq(9, Some(Rational::one())),
    ) {
        let got = egf(&g).compose_delta(&egf(&f)).unwrap();
        let mut h = ogf::from_egf(&f);
        h[0] = Rational::zero();
        let expected = ogf::to_egf(&ogf::substitute(&ogf::from_egf(&g), &h));
        prop_assert_eq!(as_rationals(&got), expected);
    }

    #[test]
    fn revert_matches_lagrange_inversion(f in rational_seq(9, Some(Rational::one()))) {
        let f1 = f[1].clone();
        prop_assume!(!f1.is_zero());
        let got = egf(&f).revert().unwrap();
        let mut delta = ogf::from_egf(&f);
        delta[0] = Rational::zero();
        let mut expected = ogf::to_egf(&ogf::revert(&delta));
        expected[0] = Rational::one();
        prop_assert_eq!(as_rationals(&got), expected);
    }

    #[test]
    fn log_matches_series_of_log_one_plus(f in rational_seq(9, Some(Rational::one()))) {
        // log(1 + h) = Σ (-1)^{k-1} h^k / k
        let mut h = ogf::from_egf(&f);
        h[0] = Rational::zero();
        let log_coeffs: Vec<Rational> = (0..9)
            .map(|k: i64| match k {
                0 => Rational::zero(),
                _ if k % 2 == 1 => rat(1, k),
                _ => rat(-1, k),
            })
            .collect();
        let mut expected = ogf::to_egf(&ogf::substitute(&log_coeffs, &h));
        expected[0] = Rational::one();
        prop_assert_eq!(as_rationals(&egf(&f).log().unwrap()), expected);
    }
}
