use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::error::{Error, Result};

/// The base field: the rationals, or a prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Constructs a prime field after checking primality of `p`.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Residue { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Residue { value: 1 % p, modulus: p },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Residue { value: r, modulus: p }
            }
        }
    }

    /// Parses the file-format name: "Q" or "Fp:<p>".
    pub fn parse_name(s: &str) -> Result<Self> {
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p.parse().map_err(|_| Error::Parse {
                context: "field".into(),
                message: format!("bad prime in {s:?}"),
            })?;
            return FieldSpec::prime(p);
        }
        Err(Error::Parse {
            context: "field".into(),
            message: format!("unknown field {s:?}; expected \"Q\" or \"Fp:<p>\""),
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// An exact field element: an arbitrary-precision rational in lowest terms,
/// or a residue in [0, p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn from_rational(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn same_field(&self, other: &Scalar) -> FieldSpec {
        let f = self.field();
        assert_eq!(f, other.field(), "scalar field mismatch");
        f
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue { value: addmod(*a, *b, *p), modulus: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.same_field(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue { value: mulmod(*a, *b, *p), modulus: *p }
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; None for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: invmod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inverse().expect("division by zero"))
    }

    /// Residue value for finite-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Parses a scalar string in field context: "n", "n/d" over Q,
    /// "r" or "r mod p" over F_p.
    pub fn parse(field: FieldSpec, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let err = |m: String| Error::Parse { context: "scalar".into(), message: m };
        match field {
            FieldSpec::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num = BigInt::from_str(num)
                    .map_err(|_| err(format!("bad rational {s:?}")))?;
                let den = BigInt::from_str(den)
                    .map_err(|_| err(format!("bad rational {s:?}")))?;
                if den.is_zero() {
                    return Err(err(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::Prime(p) => {
                let body = match s.split_once(" mod ") {
                    Some((r, m)) => {
                        let m: u64 = m
                            .trim()
                            .parse()
                            .map_err(|_| err(format!("bad modulus in {s:?}")))?;
                        if m != p {
                            return Err(err(format!("modulus {m} does not match field {field}")));
                        }
                        r.trim()
                    }
                    None => s,
                };
                let val = BigInt::from_str(body)
                    .map_err(|_| err(format!("bad residue {s:?}")))?;
                let r = val
                    .mod_floor_u64(p)
                    .ok_or_else(|| err(format!("bad residue {s:?}")))?;
                Ok(Scalar::Residue { value: r, modulus: p })
            }
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> Option<u64>;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> Option<u64> {
        use num::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        m.try_into().ok()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) => {
                (p, a).cmp(&(q, b))
            }
            (Scalar::Rational(_), _) => Ordering::Less,
            (_, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p), p prime, a != 0 mod p
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert_eq!(r0, 1, "not invertible mod {p}");
    s0.rem_euclid(p as i128) as u64
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let a = Scalar::from_rational(2, 4);
        let b = Scalar::from_rational(1, 2);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1/2");
        assert_eq!(Scalar::from_rational(-3, -6), b);
        assert_eq!(Scalar::from_rational(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn residue_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = f.from_i64(5);
        let b = f.from_i64(4);
        assert_eq!(a.mul(&b), f.from_i64(6));
        assert_eq!(a.add(&b), f.from_i64(2));
        assert_eq!(a.inverse().unwrap(), f.from_i64(3));
        assert_eq!(f.from_i64(-1), f.from_i64(6));
    }

    #[test]
    fn parse_round_trip() {
        let q = FieldSpec::Rationals;
        for s in ["0", "7", "-3", "22/7", "-1/2"] {
            let v = Scalar::parse(q, s).unwrap();
            assert_eq!(Scalar::parse(q, &v.to_string()).unwrap(), v);
        }
        let f5 = FieldSpec::prime(5).unwrap();
        for s in ["0", "3", "4 mod 5", "-1"] {
            let v = Scalar::parse(f5, s).unwrap();
            assert_eq!(Scalar::parse(f5, &v.to_string()).unwrap(), v);
        }
        assert!(Scalar::parse(f5, "1 mod 7").is_err());
        assert!(Scalar::parse(q, "1/0").is_err());
    }

    #[test]
    fn field_name_round_trip() {
        assert_eq!(FieldSpec::parse_name("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse_name("Fp:13").unwrap(), FieldSpec::Prime(13));
        assert!(FieldSpec::parse_name("Fp:6").is_err());
        assert!(FieldSpec::parse_name("R").is_err());
    }

    #[test]
    fn distributivity_spot_check() {
        for field in [FieldSpec::Rationals, FieldSpec::Prime(11)] {
            for a in -3i64..3 {
                for b in -3i64..3 {
                    for c in -3i64..3 {
                        let (a, b, c) = (field.from_i64(a), field.from_i64(b), field.from_i64(c));
                        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                    }
                }
            }
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(13));
        assert!(is_prime_u64(65537));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91));
    }
}
