//! Exact coefficient fields.
//!
//! Everything in the engine is generic over a [`Field`]; the two concrete
//! choices are a prime field [`Fp`] (elements are canonical residues in
//! `[0, p)`) and the rationals [`Rationals`] (elements are reduced
//! `BigRational`s). There is no floating point anywhere.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Default prime for `fp` computations.
pub const DEFAULT_PRIME: u64 = 1_000_003;

pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// A uniformly random element (prime fields) or a small random integer (rationals).
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Some `x` with `x^n = a`, if one exists in the field.
    fn nth_root(&self, a: &Self::Elem, n: u64) -> Option<Self::Elem>;
    /// Parses an integer or a fraction `a/b`.
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    /// Short description, `fp:<p>` or `q`.
    fn describe(&self) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `acc += c * x`
    fn add_mul_assign(&self, acc: &mut Self::Elem, c: &Self::Elem, x: &Self::Elem) {
        *acc = self.add(acc, &self.mul(c, x));
    }
}

/// The prime field `F_p`, `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1u64 << 32)).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u64().unwrap()
    }

    /// Discrete logarithm of `a` to base `g` (a generator), via Pohlig-Hellman.
    fn discrete_log(&self, g: u64, a: u64, factors: &[(u64, u32)]) -> u64 {
        let order = self.p - 1;
        let mut residues = Vec::new();
        for &(q, e) in factors {
            let qe = q.pow(e);
            let gamma = self.pow(&g, order / q);
            let mut x = 0u64;
            let mut qk = 1u64;
            for _ in 0..e {
                let shifted = self.mul(&self.pow(&self.inv(&g).unwrap(), x), &a);
                let h = self.pow(&shifted, order / (qk * q));
                let d = self.bsgs(gamma, h, q);
                x += d * qk;
                qk *= q;
            }
            residues.push((x % qe, qe));
        }
        crt(&residues)
    }

    /// Solves `gamma^d = h` for `d` in `[0, q)`.
    fn bsgs(&self, gamma: u64, h: u64, q: u64) -> u64 {
        let step = (q as f64).sqrt().ceil() as u64 + 1;
        let mut table = HashMap::with_capacity(step as usize);
        let mut cur = 1u64;
        for j in 0..step {
            table.entry(cur).or_insert(j);
            cur = self.mul(&cur, &gamma);
        }
        let giant = self.inv(&self.pow(&gamma, step)).unwrap();
        let mut y = h;
        for i in 0..=step {
            if let Some(&j) = table.get(&y) {
                return (i * step + j) % q;
            }
            y = self.mul(&y, &giant);
        }
        unreachable!("element is not in the subgroup generated by gamma")
    }

    fn generator(&self, factors: &[(u64, u32)]) -> u64 {
        let order = self.p - 1;
        (2..self.p)
            .find(|&g| factors.iter().all(|&(q, _)| self.pow(&g, order / q) != 1))
            .unwrap_or(1)
    }
}

impl Field for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        if *a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.p - 2))
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn nth_root(&self, a: &u64, n: u64) -> Option<u64> {
        if n == 0 {
            return if *a == 1 { Some(1) } else { None };
        }
        if *a == 0 || self.p == 2 {
            return Some(*a);
        }
        let order = self.p - 1;
        let d = n.gcd(&order);
        if d == 1 {
            let e = mod_inverse(n % order, order)?;
            return Some(self.pow(a, e));
        }
        if self.pow(a, order / d) != 1 {
            return None;
        }
        let factors = factorize(order);
        let g = self.generator(&factors);
        let log = self.discrete_log(g, *a, &factors);
        // n*y = log (mod order)
        let reduced = order / d;
        let y = ((log / d) as u128 * mod_inverse((n / d) % reduced, reduced).unwrap_or(0) as u128
            % reduced as u128) as u64;
        let x = self.pow(&g, y);
        debug_assert_eq!(self.pow(&x, n), *a);
        Some(x)
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let q = parse_rational(s)?;
        let num = self.reduce_big(q.numer());
        let den = self.reduce_big(q.denom());
        self.div(&num, &den)
            .map_err(|_| Error::BadScalar(format!("{s} (denominator vanishes mod {})", self.p)))
    }
    fn format(&self, a: &u64) -> String {
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn describe(&self) -> String {
        format!("fp:{}", self.p)
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-1000..=1000))
    }
    fn nth_root(&self, a: &BigRational, n: u64) -> Option<BigRational> {
        if n == 0 {
            return if a.is_one() { Some(a.clone()) } else { None };
        }
        if a.is_zero() {
            return Some(a.clone());
        }
        let n32 = u32::try_from(n).ok()?;
        let negative = a.is_negative();
        if negative && n % 2 == 0 {
            return None;
        }
        let num = a.numer().abs();
        let den = a.denom().clone();
        let rn = num.nth_root(n32);
        let rd = den.nth_root(n32);
        if num_traits::pow(rn.clone(), n as usize) != num
            || num_traits::pow(rd.clone(), n as usize) != den
        {
            return None;
        }
        let r = BigRational::new(rn, rd);
        Some(if negative { -r } else { r })
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        "q".to_string()
    }
}

/// Field choice as given on the command line: `fp:<p>` or `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p.parse().map_err(|_| Error::BadScalar(s.to_string()))?;
            Fp::new(p)?;
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::BadScalar(format!("unknown field `{s}` (expected fp:<p> or q)")))
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
            FieldSpec::Rational => write!(f, "q"),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::BadScalar(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let valid = |x: &str| {
        let digits = x.strip_prefix('-').or_else(|| x.strip_prefix('+')).unwrap_or(x);
        !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.trim_start_matches('+').parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

fn crt(residues: &[(u64, u64)]) -> u64 {
    let mut x: u128 = 0;
    let mut modulus: u128 = 1;
    for &(r, m) in residues {
        // x + modulus * k = r (mod m)
        let m128 = m as u128;
        let diff = ((r as i128 - (x % m128) as i128).rem_euclid(m as i128)) as u128;
        let inv = mod_inverse((modulus % m128) as u64, m).unwrap() as u128;
        let k = diff * inv % m128;
        x += modulus * k;
        modulus *= m128;
    }
    x as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_of_two_mod_five() {
        let f = Fp::new(5).unwrap();
        assert_eq!(f.inv(&2).unwrap(), 3);
        assert_eq!(f.inv(&0), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_sum() {
        let q = Rationals;
        let a = q.parse("1/2").unwrap();
        let b = q.parse("1/3").unwrap();
        assert_eq!(q.add(&a, &b), q.parse("5/6").unwrap());
        assert!(q.inv(&q.zero()).is_err());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(Fp::new(1_000_001), Err(Error::NotPrime(1_000_001)));
        assert!(Fp::new(DEFAULT_PRIME).is_ok());
    }

    #[test]
    fn roots_exhaustive_mod_five() {
        let f = Fp::new(5).unwrap();
        let squares: Vec<u64> = (0..5).map(|x| f.mul(&x, &x)).collect();
        assert!(!squares.contains(&2));
        assert_eq!(f.nth_root(&2, 2), None);
        assert_eq!(f.nth_root(&1, 3), Some(1));
        for a in 0..5u64 {
            for n in 1..8u64 {
                let brute = (0..5u64).find(|x| f.pow(x, n) == a);
                let got = f.nth_root(&a, n);
                assert_eq!(brute.is_some(), got.is_some(), "a={a} n={n}");
                if let Some(x) = got {
                    assert_eq!(f.pow(&x, n), a);
                }
            }
        }
    }

    #[test]
    fn root_round_trip_default_prime() {
        let f = Fp::new(DEFAULT_PRIME).unwrap();
        for m in 2..6u64 {
            let n = 3 * (m - 1);
            for a in [2u64, 3, 12345, 999_999] {
                let t = f.pow(&a, n);
                let x = f.nth_root(&t, n).expect("root exists by construction");
                assert_eq!(f.pow(&x, n), t);
            }
        }
        // b^8 = t
        let t = f.pow(&7, 8);
        let b = f.nth_root(&t, 8).unwrap();
        assert_eq!(f.pow(&b, 8), t);
    }

    #[test]
    fn rational_roots() {
        let q = Rationals;
        assert_eq!(q.nth_root(&q.parse("8/27").unwrap(), 3), Some(q.parse("2/3").unwrap()));
        assert_eq!(q.nth_root(&q.parse("-8").unwrap(), 3), Some(q.parse("-2").unwrap()));
        assert_eq!(q.nth_root(&q.parse("2").unwrap(), 2), None);
        assert_eq!(q.nth_root(&q.parse("-4").unwrap(), 2), None);
    }

    #[test]
    fn parse_and_format() {
        let f = Fp::new(7).unwrap();
        assert_eq!(f.parse("-1").unwrap(), 6);
        assert_eq!(f.format(&6), "-1");
        assert_eq!(f.parse("1/2").unwrap(), 4);
        assert!(f.parse("1/7").is_err());
        assert!(f.parse("abc").is_err());
        assert_eq!("fp:13".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(13));
        assert!("fp:12".parse::<FieldSpec>().is_err());
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
    }

    fn fp_elem() -> impl Strategy<Value = u64> {
        0..DEFAULT_PRIME
    }

    proptest! {
        #[test]
        fn fp_axioms(a in fp_elem(), b in fp_elem(), c in fp_elem()) {
            let f = Fp::new(DEFAULT_PRIME).unwrap();
            prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
            prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert!(f.add(&a, &f.neg(&a)) == 0);
            if a != 0 {
                prop_assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            }
        }

        #[test]
        fn rational_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let q = Rationals;
            let x = q.parse(&format!("{a}/{b}")).unwrap();
            let y = q.parse(&format!("{c}/{d}")).unwrap();
            let z = q.add(&x, &y);
            prop_assert_eq!(q.mul(&z, &x), q.add(&q.mul(&x, &x), &q.mul(&y, &x)));
            // canonical form is stable under re-parsing
            prop_assert_eq!(q.parse(&q.format(&z)).unwrap(), z.clone());
            if !q.is_zero(&x) {
                prop_assert!(q.is_one(&q.mul(&x, &q.inv(&x).unwrap())));
            }
        }
    }
}
