//! Factorization of monic squarefree integer polynomials: a modular
//! factorization, quadratic Hensel lifting along a factor tree, and
//! subset recombination restricted to degrees allowed by every good prime.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{primes_below, Field, Poly};
use crate::exactmath::IntPolynomial;

/// Largest prime tried when looking for good reductions.
const PRIME_SEARCH_LIMIT: u64 = 2000;
/// Number of good primes whose degree patterns are intersected.
const PATTERN_PRIMES: usize = 12;

type ZPoly = Vec<BigInt>;

fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn zreduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zadd(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    zreduce(&v, m)
}

fn zsub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    zreduce(&v, m)
}

fn zmul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zreduce(&out, m)
}

/// Division by `b`, whose leading coefficient must be 1 modulo `m`.
fn zdivrem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db].mod_floor(m).is_one());
    if a.len() <= db {
        return (Vec::new(), zreduce(a, m));
    }
    let mut rem: ZPoly = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (db..rem.len()).rev() {
        let c = rem[i].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            let k = i - db + j;
            rem[k] = (&rem[k] - &c * bc).mod_floor(m);
        }
        quot[i - db] = c;
    }
    rem.truncate(db);
    (ztrim(quot), zreduce(&rem, m))
}

fn from_modp(a: &Poly) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f = g h`, `s g + t h = 1` modulo `m`
/// to the same identities modulo `m^2`. `h` is monic.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zsub(f, &zmul(g, h, &m2), &m2);
    let (q, r) = zdivrem(&zmul(s, &e, &m2), h, &m2);
    let g_new = zadd(&zadd(g, &zmul(t, &e, &m2), &m2), &zmul(&q, g, &m2), &m2);
    let h_new = zadd(h, &r, &m2);
    let b = zsub(
        &zadd(&zmul(s, &g_new, &m2), &zmul(t, &h_new, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = zdivrem(&zmul(s, &b, &m2), &h_new, &m2);
    let s_new = zsub(s, &d, &m2);
    let t_new = zsub(
        &zsub(t, &zmul(t, &b, &m2), &m2),
        &zmul(&c, &g_new, &m2),
        &m2,
    );
    (g_new, h_new, s_new, t_new)
}

/// Lifts `f = prod factors (mod p)` to a factorization modulo `modulus`, a
/// power of `p`. `f` is monic; the factors are monic, pairwise coprime mod p.
pub(crate) fn hensel_lift(
    f: &[BigInt],
    factors: &[Poly],
    field: Field,
    modulus: &BigInt,
) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![zreduce(f, modulus)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g0 = left.iter().fold(vec![1u64], |acc, x| field.mul(&acc, x));
    let h0 = right.iter().fold(vec![1u64], |acc, x| field.mul(&acc, x));
    let (one, s0, t0) = field.ext_gcd(&g0, &h0);
    assert_eq!(one, vec![1], "modular factors are not coprime");
    let (mut g, mut h, mut s, mut t) = (
        from_modp(&g0),
        from_modp(&h0),
        from_modp(&s0),
        from_modp(&t0),
    );
    let mut m = BigInt::from(field.p);
    while &m < modulus {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let g = zreduce(&g, modulus);
    let h = zreduce(&h, modulus);
    let mut out = hensel_lift(&g, left, field, modulus);
    out.extend(hensel_lift(&h, right, field, modulus));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> IntPolynomial {
    let half = m / 2;
    IntPolynomial::new(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// All subset sums of `degrees`.
fn subset_sums(degrees: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &d in degrees {
        let next: Vec<usize> = sums.iter().map(|s| s + d).collect();
        sums.extend(next);
    }
    sums
}

/// Factor degrees compatible with every tested reduction, plus the chosen
/// prime and its factorization.
pub(crate) struct ModularData {
    pub allowed_degrees: BTreeSet<usize>,
    pub field: Field,
    pub factors: Vec<Poly>,
}

pub(crate) fn modular_data(f: &IntPolynomial) -> Option<ModularData> {
    let n = f.degree();
    let mut allowed: BTreeSet<usize> = (0..=n).collect();
    let mut best: Option<(Field, Vec<Poly>)> = None;
    let mut seen = 0;
    for p in primes_below(PRIME_SEARCH_LIMIT)
        .into_iter()
        .filter(|&p| p > 2)
    {
        let field = Field::new(p);
        let fp = field.reduce(f);
        if !field.is_squarefree(&fp) {
            continue;
        }
        let factors = field.factor_squarefree(&fp);
        let degrees: Vec<usize> = factors.iter().map(|g| g.len() - 1).collect();
        allowed = allowed
            .intersection(&subset_sums(&degrees))
            .copied()
            .collect();
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((field, factors));
        }
        seen += 1;
        if seen >= PATTERN_PRIMES || allowed.len() == 2 {
            break;
        }
    }
    let (field, factors) = best?;
    Some(ModularData {
        allowed_degrees: allowed,
        field,
        factors,
    })
}

/// Coefficient bound for any factor of `f` (Landau-Mignotte, `2^n ||f||_2`).
fn factor_bound(f: &IntPolynomial) -> BigInt {
    let norm = f.norm_sq().sqrt() + BigInt::one();
    norm << f.degree()
}

/// Complete factorization of a monic squarefree polynomial over Z into
/// monic irreducibles, sorted by degree then coefficients.
pub fn factor_monic_squarefree(f: &IntPolynomial) -> Vec<IntPolynomial> {
    assert!(f.is_monic(), "factorization expects a monic polynomial");
    let n = f.degree();
    if n <= 1 {
        return vec![f.clone()];
    }
    let data = modular_data(f).expect("a squarefree polynomial has good primes");
    let proper: Vec<usize> = data
        .allowed_degrees
        .iter()
        .copied()
        .filter(|&d| d > 0 && d < n)
        .collect();
    if proper.is_empty() || data.factors.len() == 1 {
        return vec![f.clone()];
    }
    let bound = factor_bound(f);
    let p = BigInt::from(data.field.p);
    let mut modulus = p.clone();
    while modulus <= &bound * 2 {
        modulus *= &p;
    }
    let lifted: Vec<IntPolynomial> = hensel_lift(f.coeffs(), &data.factors, data.field, &modulus)
        .iter()
        .map(|g| symmetric(g, &modulus))
        .collect();
    let mut found = recombine(f, lifted, &modulus, &data.allowed_degrees);
    found.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    found
}

fn recombine(
    f: &IntPolynomial,
    mut lifted: Vec<IntPolynomial>,
    modulus: &BigInt,
    allowed: &BTreeSet<usize>,
) -> Vec<IntPolynomial> {
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let degree: usize = combo.iter().map(|&i| lifted[i].degree()).sum();
            if allowed.contains(&degree) && constant_term_divides(&rest, &lifted, &combo, modulus) {
                let candidate = combo.iter().fold(vec![BigInt::one()], |acc, &i| {
                    zmul(&acc, lifted[i].coeffs(), modulus)
                });
                let candidate = symmetric(&candidate, modulus);
                if let Some(quotient) = rest.div_exact_monic(&candidate) {
                    found.push(candidate);
                    rest = quotient;
                    for &i in combo.iter().rev() {
                        lifted.remove(i);
                    }
                    continue 'outer;
                }
            }
            if !next_combination(&mut combo, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if rest.degree() > 0 {
        found.push(rest);
    }
    found
}

// Cheap filter: the candidate's constant term must divide rest's constant term.
fn constant_term_divides(
    rest: &IntPolynomial,
    lifted: &[IntPolynomial],
    combo: &[usize],
    modulus: &BigInt,
) -> bool {
    let c = combo.iter().fold(BigInt::one(), |acc, &i| {
        (acc * lifted[i].coeff(0)).mod_floor(modulus)
    });
    let half = modulus / 2;
    let c = if c > half { c - modulus } else { c };
    let target = rest.coeff(0);
    if c.is_zero() {
        return target.is_zero();
    }
    (target.abs() % c.abs()).is_zero()
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
