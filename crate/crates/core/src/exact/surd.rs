//! Quadratic surds `a + b*sqrt(d)` with exact comparison.
//!
//! Canonical form: `d` is square-free and >= 2 whenever the irrational part
//! is present; a number that reduces to a rational is stored with `b = 0`,
//! `d = 0`. Under that invariant structural equality coincides with numeric
//! equality, and the sign of a surd is decided by squaring — never by
//! floating point.
//!
//! There is deliberately no arithmetic across distinct radicands: values from
//! different quadratic fields cannot be combined or compared here, and any
//! attempt reports a domain error instead of silently approximating.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Surd {
    a: Rational,
    b: Rational,
    d: u64,
}

impl Surd {
    /// Builds `a + b*sqrt(d)` and normalizes: square factors of `d` migrate
    /// into `b`, and a perfect-square radicand collapses the value to a
    /// rational.
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return Surd {
                a,
                b: Rational::zero(),
                d: 0,
            };
        }
        let (free, root) = square_free_split(d);
        let b = b * Rational::from_u64(root);
        if free == 1 {
            Surd {
                a: a + b,
                b: Rational::zero(),
                d: 0,
            }
        } else {
            Surd { a, b, d: free }
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        Surd {
            a,
            b: Rational::zero(),
            d: 0,
        }
    }

    /// `sqrt(n)` for an unsigned integer, in canonical form.
    pub fn sqrt_u64(n: u64) -> Self {
        Surd::new(Rational::zero(), Rational::one(), n)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_coefficient(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn add_rational(&self, r: &Rational) -> Self {
        Surd {
            a: &self.a + r,
            b: self.b.clone(),
            d: self.d,
        }
    }

    pub fn sub_rational(&self, r: &Rational) -> Self {
        Surd {
            a: &self.a - r,
            b: self.b.clone(),
            d: self.d,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Surd::from_rational(Rational::zero());
        }
        Surd {
            a: &self.a * r,
            b: &self.b * r,
            d: self.d,
        }
    }

    pub fn neg(&self) -> Self {
        Surd {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    /// Radicand both operands live in, or a domain error when they belong to
    /// distinct quadratic fields.
    fn join_radicand(&self, other: &Surd) -> Result<u64, Error> {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Ok(0),
            (true, false) => Ok(other.d),
            (false, true) => Ok(self.d),
            (false, false) if self.d == other.d => Ok(self.d),
            _ => Err(Error::domain(format!(
                "unsupported comparison/arithmetic between distinct radicands {} and {}",
                self.d, other.d
            ))),
        }
    }

    pub fn add(&self, other: &Surd) -> Result<Self, Error> {
        let d = self.join_radicand(other)?;
        Ok(Surd::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn sub(&self, other: &Surd) -> Result<Self, Error> {
        let d = self.join_radicand(other)?;
        Ok(Surd::new(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn mul(&self, other: &Surd) -> Result<Self, Error> {
        let d = self.join_radicand(other)?;
        let rad = Rational::from_u64(d);
        let a = &(&self.a * &other.a) + &(&(&self.b * &other.b) * &rad);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        Ok(Surd::new(a, b, d))
    }

    /// Reciprocal via rationalizing: `1/(a+b*sqrt(d)) = (a-b*sqrt(d))/(a^2-b^2 d)`.
    pub fn recip(&self) -> Result<Self, Error> {
        if let Some(r) = self.as_rational() {
            return Ok(Surd::from_rational(r.recip()?));
        }
        let denom = &self.a.square() - &(&self.b.square() * &Rational::from_u64(self.d));
        if denom.is_zero() {
            // Impossible for canonical surds (sqrt of a square-free d >= 2 is
            // irrational); kept as a checked invariant rather than UB.
            return Err(Error::internal("zero norm on canonical surd"));
        }
        Ok(Surd {
            a: &self.a / &denom,
            b: &(-self.b.clone()) / &denom,
            d: self.d,
        })
    }

    /// Exact sign, by squaring when the rational and irrational parts pull in
    /// opposite directions.
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.signum();
        }
        if self.a.is_zero() {
            return self.b.signum();
        }
        let bsq_d = &self.b.square() * &Rational::from_u64(self.d);
        let asq = self.a.square();
        match (self.a.is_positive(), self.b.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            // a > 0 > b: sign of a - |b|sqrt(d), i.e. compare a^2 with b^2 d.
            (true, false) => asq.cmp(&bsq_d),
            // b > 0 > a: sign of b*sqrt(d) - |a|.
            (false, true) => bsq_d.cmp(&asq),
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.sub_rational(r).sign()
    }

    /// Exact comparison; both values must be rational or share a radicand.
    pub fn cmp_surd(&self, other: &Surd) -> Result<Ordering, Error> {
        Ok(self.sub(other)?.sign())
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let (sign, mag) = if self.b.is_negative() {
            ('-', self.b.abs())
        } else {
            ('+', self.b.clone())
        };
        write!(f, "{}{}{}*sqrt({})", self.a, sign, mag, self.d)
    }
}

impl FromStr for Surd {
    type Err = Error;

    /// Parses `a` or `a+b*sqrt(d)` / `a-b*sqrt(d)` where `a` is a rational
    /// literal, `b` an unsigned rational literal and `d` an unsigned integer.
    /// The result is normalized, so a non-square-free `d` is accepted and
    /// canonicalized.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::domain(format!("malformed surd {s:?}; expected a or a+b*sqrt(d)"));
        // Locate the sign separating `a` from the sqrt term: the first +/-
        // past position 0 (the rational part may itself begin with '-').
        let sep = s
            .char_indices()
            .skip(1)
            .find(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i);
        let Some(i) = sep else {
            return Ok(Surd::from_rational(s.parse()?));
        };
        let a: Rational = s[..i].parse().map_err(|_| bad())?;
        let negative = s.as_bytes()[i] == b'-';
        let tail = &s[i + 1..];
        let (mag_s, rad_s) = tail.split_once("*sqrt(").ok_or_else(bad)?;
        let rad_s = rad_s.strip_suffix(')').ok_or_else(bad)?;
        if mag_s.starts_with('-') {
            return Err(bad());
        }
        let mag: Rational = mag_s.parse().map_err(|_| bad())?;
        if !rad_s.bytes().all(|b| b.is_ascii_digit()) || rad_s.is_empty() {
            return Err(bad());
        }
        let d: u64 = rad_s
            .parse()
            .map_err(|_| Error::domain(format!("radicand out of range in {s:?}")))?;
        let b = if negative { -mag } else { mag };
        Ok(Surd::new(a, b, d))
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Surd {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Splits `d = free * root^2` with `free` square-free.
fn square_free_split(d: u64) -> (u64, u64) {
    debug_assert!(d > 0);
    let mut free = 1u64;
    let mut root = 1u64;
    for (p, e) in factor_u64(d) {
        root *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
    }
    (free, root)
}

/// Full factorization of a u64: trial division for small primes, then
/// Miller-Rabin + Brent's rho for the remainder. Returns (prime, exponent)
/// pairs sorted by prime.
fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        push(p, e);
    }
    let mut d = 49u64;
    while d <= 10_000 && d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        push(d, e);
        d += 2;
    }
    if n > 1 {
        let mut stack = vec![n];
        let mut big: Vec<u64> = Vec::new();
        while let Some(m) = stack.pop() {
            if m == 1 {
                continue;
            }
            if is_prime_u64(m) {
                big.push(m);
            } else {
                let f = pollard_rho(m);
                stack.push(f);
                stack.push(m / f);
            }
        }
        big.sort_unstable();
        let mut i = 0;
        while i < big.len() {
            let p = big[i];
            let mut e = 0;
            while i < big.len() && big[i] == p {
                e += 1;
                i += 1;
            }
            push(p, e);
        }
    }
    out.sort_unstable_by_key(|&(p, _)| p);
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the 12-base witness set covers the
/// full range).
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's cycle variant of Pollard's rho; `n` must be odd, composite and
/// not divisible by small primes (guaranteed by the caller).
fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
