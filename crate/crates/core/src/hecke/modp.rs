//! Dense polynomials over a prime field `F_p` with word-size `p`.
//!
//! Polynomials are `Vec<u64>`, constant term first, with no trailing zeros.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::exactmath::IntPolynomial;

pub(crate) type Poly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        debug_assert!((2..(1 << 31)).contains(&p));
        Field { p }
    }

    fn mulm(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod {}", self.p);
        let mut result = 1;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mulm(result, base);
            }
            base = self.mulm(base, base);
            e >>= 1;
        }
        result
    }

    pub fn reduce(self, f: &IntPolynomial) -> Poly {
        let p = BigInt::from(self.p);
        let mut out: Poly = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&p).to_u64().expect("residue fits"))
            .collect();
        trim(&mut out);
        out
    }

    pub fn monic(self, mut a: Poly) -> Poly {
        if let Some(&lc) = a.last() {
            if lc != 1 {
                let inv = self.inv(lc);
                for c in a.iter_mut() {
                    *c = self.mulm(*c, inv);
                }
            }
        }
        a
    }

    #[cfg(test)]
    pub fn add(self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        let mut out: Poly = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        trim(&mut out);
        out
    }

    pub fn sub(self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        let mut out: Poly = (0..n)
            .map(|i| {
                (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn mul(self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn divrem(self, a: &[u64], b: &[u64]) -> (Poly, Poly) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let db = b.len() - 1;
        if a.len() <= db {
            return (Vec::new(), a.to_vec());
        }
        let inv = self.inv(b[db]);
        let mut rem = a.to_vec();
        let mut quot = vec![0u64; a.len() - db];
        for i in (db..rem.len()).rev() {
            let c = self.mulm(rem[i], inv);
            if c == 0 {
                continue;
            }
            quot[i - db] = c;
            for (j, &bc) in b.iter().enumerate() {
                let k = i - db + j;
                rem[k] = (rem[k] + self.p - self.mulm(c, bc)) % self.p;
            }
        }
        rem.truncate(db);
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    pub fn rem(self, a: &[u64], b: &[u64]) -> Poly {
        self.divrem(a, b).1
    }

    pub fn mulmod(self, a: &[u64], b: &[u64], m: &[u64]) -> Poly {
        self.rem(&self.mul(a, b), m)
    }

    pub fn powmod(self, base: &[u64], e: &BigUint, m: &[u64]) -> Poly {
        let mut result: Poly = self.rem(&[1], m);
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            result = self.mulmod(&result, &result, m);
            if e.bit(i) {
                result = self.mulmod(&result, &b, m);
            }
        }
        result
    }

    /// Monic gcd.
    pub fn gcd(self, a: &[u64], b: &[u64]) -> Poly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(a)
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn ext_gcd(self, a: &[u64], b: &[u64]) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1): (Poly, Poly) = (vec![1], Vec::new());
        let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc = *r0.last().expect("gcd of zero polynomials");
        let inv = [self.inv(lc)];
        (
            self.mul(&r0, &inv),
            self.mul(&s0, &inv),
            self.mul(&t0, &inv),
        )
    }

    pub fn derivative(self, a: &[u64]) -> Poly {
        let mut out: Poly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulm(c, i as u64 % self.p))
            .collect();
        trim(&mut out);
        out
    }

    pub fn is_squarefree(self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// `x^(p^times) mod f`, by repeated p-th powers.
    fn frobenius_power(self, start: &[u64], times: usize, f: &[u64]) -> Poly {
        let mut h = start.to_vec();
        for _ in 0..times {
            h = self.powmod(&h, &BigUint::from(self.p), f);
        }
        h
    }

    /// Rabin's irreducibility test for monic `f` of degree >= 1.
    pub fn is_irreducible(self, f: &[u64]) -> bool {
        let n = f.len() - 1;
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let x: Poly = vec![0, 1];
        for q in prime_divisors(n) {
            let h = self.frobenius_power(&x, n / q, f);
            if self.gcd(&self.sub(&h, &x), f).len() != 1 {
                return false;
            }
        }
        self.frobenius_power(&x, n, f) == self.rem(&x, f)
    }

    /// Distinct-degree factorization of monic squarefree `f`:
    /// pairs `(d, product of all irreducible factors of degree d)`.
    pub fn distinct_degree(self, f: &[u64]) -> Vec<(usize, Poly)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x: Poly = vec![0, 1];
        let mut h = x.clone();
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                out.push((rest.len() - 1, rest.clone()));
                break;
            }
            h = self.powmod(&h, &BigUint::from(self.p), &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((d, g));
            }
        }
        out
    }

    /// Splits a product of distinct irreducibles of degree `d` (odd `p` only).
    pub fn equal_degree(self, f: &[u64], d: usize) -> Vec<Poly> {
        assert!(self.p % 2 == 1, "equal-degree splitting needs an odd prime");
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let exp: BigUint = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        let mut counter: u64 = 1;
        loop {
            let a = self.candidate(counter, 2 * d);
            counter += 1;
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &exp, f), &[1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let other = self.divrem(f, &g).0;
                let mut out = self.equal_degree(&g, d);
                out.extend(self.equal_degree(&other, d));
                return out;
            }
        }
    }

    // Deterministic enumeration of polynomials of degree < max_len.
    fn candidate(self, mut counter: u64, max_len: usize) -> Poly {
        let mut out = Vec::with_capacity(max_len);
        while counter > 0 && out.len() < max_len {
            out.push(counter % self.p);
            counter /= self.p;
        }
        trim(&mut out);
        out
    }

    /// Complete factorization of monic squarefree `f` into monic irreducibles.
    pub fn factor_squarefree(self, f: &[u64]) -> Vec<Poly> {
        let mut factors = Vec::new();
        for (d, g) in self.distinct_degree(f) {
            factors.extend(self.equal_degree(&g, d));
        }
        factors.sort();
        factors
    }
}

pub(crate) fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound)
        .filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // Brute force: does f have a monic factor of degree <= deg/2 over F_p?
    fn brute_irreducible(field: Field, f: &[u64]) -> bool {
        let n = f.len() - 1;
        let p = field.p;
        for d in 1..=n / 2 {
            let total = p.pow(d as u32);
            for code in 0..total {
                let mut g: Poly = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    g.push(c % p);
                    c /= p;
                }
                g.push(1);
                if field.rem(f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_matches_brute_force() {
        for p in [2u64, 3, 5] {
            let field = Field::new(p);
            for n in 1..=4usize {
                let total = p.pow(n as u32);
                for code in 0..total {
                    let mut f: Poly = Vec::new();
                    let mut c = code;
                    for _ in 0..n {
                        f.push(c % p);
                        c /= p;
                    }
                    f.push(1);
                    assert_eq!(
                        field.is_irreducible(&f),
                        brute_irreducible(field, &f),
                        "p={p} f={f:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn x2_minus_2() {
        let f = IntPolynomial::from_i64(&[-2, 0, 1]);
        assert!(!Field::new(2).is_irreducible(&Field::new(2).reduce(&f)));
        assert!(Field::new(3).is_irreducible(&Field::new(3).reduce(&f)));
        assert!(!Field::new(7).is_irreducible(&Field::new(7).reduce(&f)));
    }

    #[test]
    fn factorization_multiplies_back() {
        let field = Field::new(7);
        // (x+1)(x+2)(x^2+1)(x^3+x+1) mod 7, distinct factors
        let parts: Vec<Poly> = vec![vec![1, 1], vec![2, 1], vec![1, 0, 1], vec![1, 1, 0, 1]];
        let f = parts.iter().fold(vec![1u64], |acc, g| field.mul(&acc, g));
        assert!(field.is_squarefree(&f));
        let factors = field.factor_squarefree(&f);
        assert_eq!(factors.len(), 4);
        let back = factors.iter().fold(vec![1u64], |acc, g| field.mul(&acc, g));
        assert_eq!(back, f);
        assert!(factors.iter().all(|g| field.is_irreducible(g)));
    }

    #[test]
    fn ext_gcd_identity() {
        let field = Field::new(11);
        let a: Poly = vec![3, 0, 1];
        let b: Poly = vec![5, 1];
        let (g, s, t) = field.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(field.add(&field.mul(&s, &a), &field.mul(&t, &b)), vec![1]);
    }

    #[test]
    fn primes() {
        assert_eq!(primes_below(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(primes_below(100).len(), 25);
    }
}
