//! Dense univariate polynomials over the supported exact fields, with the
//! factorization routines the center-splitting code needs: squarefree parts,
//! complete Berlekamp factorization over F_p, and rational-root extraction
//! over Q (with an irreducibility certificate via reduction mod p).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::exactlin::{FieldSpec, Matrix, Scalar};

/// Coefficients little-endian; no trailing zeros (zero polynomial = empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::new(field, vec![field.one()])
    }

    pub fn x(field: FieldSpec) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        Poly::new(field, vec![c])
    }

    /// x - c
    pub fn linear_root(c: &Scalar) -> Self {
        Poly::new(c.field(), vec![c.neg(), c.field().one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Scalar {
        self.coeffs.last().expect("zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading().is_one()
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inverse().expect("field");
        Poly::new(
            self.field,
            self.coeffs.iter().map(|c| c.mul(&inv)).collect(),
        )
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Poly::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Poly::new(self.field, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::new(self.field, coeffs)
    }

    pub fn divmod(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        if rem.is_zero() || rem.degree() < divisor.degree() {
            return (Poly::zero(self.field), rem);
        }
        let mut quot = vec![self.field.zero(); rem.degree() - divisor.degree() + 1];
        let lead_inv = divisor.leading().inverse().expect("field");
        while !rem.is_zero() && rem.degree() >= divisor.degree() {
            let shift = rem.degree() - divisor.degree();
            let factor = rem.leading().mul(&lead_inv);
            quot[shift] = factor.clone();
            let mut sub = vec![self.field.zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c.mul(&factor)));
            rem = rem.sub(&Poly::new(self.field, sub));
        }
        (Poly::new(self.field, quot), rem)
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divmod(divisor).1
    }

    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divmod(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: (g, u, v) with u*self + v*other = g, g monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let field = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
        let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
            (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead_inv = Poly::constant(r0.leading().inverse().expect("field"));
        (r0.monic(), s0.mul(&lead_inv), t0.mul(&lead_inv))
    }

    pub fn derivative(&self) -> Poly {
        if self.is_zero() || self.degree() == 0 {
            return Poly::zero(self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.field.from_i64(i as i64)))
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// self^k mod m, by binary exponentiation.
    pub fn pow_mod(&self, mut k: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field).rem(m);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            k >>= 1;
        }
        acc
    }

    /// Largest squarefree divisor with the same roots. Handles the
    /// char-p case f' = 0 by taking p-th roots (prime field: a^p = a).
    pub fn squarefree_part(&self) -> Poly {
        assert!(!self.is_zero());
        let f = self.monic();
        if f.degree() == 0 {
            return f;
        }
        let d = f.derivative();
        if d.is_zero() {
            let p = self.field.characteristic() as usize;
            assert!(p > 0, "zero derivative in characteristic zero");
            let coeffs: Vec<Scalar> = f
                .coeffs
                .iter()
                .step_by(p)
                .cloned()
                .collect();
            return Poly::new(self.field, coeffs).squarefree_part();
        }
        let g = f.gcd(&d);
        let sqf = f.div_exact(&g);
        if g.degree() == 0 {
            sqf
        } else {
            // roots of g may include roots not in sqf only in char p; merge
            let rest = g.squarefree_part();
            let extra = rest.div_exact(&rest.gcd(&sqf));
            sqf.mul(&extra)
        }
    }
}

/// Complete factorization into monic irreducibles over F_p (with
/// multiplicities), by squarefree reduction plus Berlekamp splitting.
pub(crate) fn factor_fp(f: &Poly) -> Vec<(Poly, usize)> {
    let FieldSpec::Prime(_) = f.field else {
        panic!("factor_fp needs a prime field")
    };
    assert!(!f.is_zero());
    let mut out: Vec<(Poly, usize)> = Vec::new();
    let mut rest = f.monic();
    while rest.degree() > 0 {
        let sqf = rest.squarefree_part();
        for irr in berlekamp_squarefree(&sqf) {
            let mut mult = 0;
            loop {
                let (q, r) = rest.divmod(&irr);
                if r.is_zero() {
                    rest = q;
                    mult += 1;
                } else {
                    break;
                }
            }
            merge_factor(&mut out, irr, mult);
        }
    }
    out.sort_by(|(a, _), (b, _)| a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| {
        for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
            let c = x.cmp(y);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }));
    out
}

fn merge_factor(out: &mut Vec<(Poly, usize)>, f: Poly, mult: usize) {
    if mult == 0 {
        return;
    }
    for (g, m) in out.iter_mut() {
        if *g == f {
            *m += mult;
            return;
        }
    }
    out.push((f, mult));
}

/// Berlekamp's algorithm on a monic squarefree polynomial over F_p.
fn berlekamp_squarefree(f: &Poly) -> Vec<Poly> {
    let FieldSpec::Prime(p) = f.field else { unreachable!() };
    let n = f.degree();
    if n <= 1 {
        return if n == 1 { vec![f.clone()] } else { vec![] };
    }
    // Q matrix: column i = x^(i*p) mod f in the basis 1, x, ..., x^(n-1)
    let x = Poly::x(f.field);
    let xp = x.pow_mod(p, f);
    let mut qm = Matrix::zero(f.field, n, n);
    let mut cur = Poly::one(f.field);
    for col in 0..n {
        for row in 0..n {
            qm.set(row, col, cur.coeff(row));
        }
        cur = cur.mul(&xp).rem(f);
    }
    let frob = qm.sub(&Matrix::identity(f.field, n));
    let ker = frob.kernel();
    if ker.dim() <= 1 {
        return vec![f.clone()]; // irreducible
    }
    // split with a non-constant kernel element
    let v = ker
        .basis_rows()
        .into_iter()
        .map(|row| Poly::new(f.field, row))
        .find(|g| !g.is_zero() && g.degree() > 0)
        .expect("kernel dim > 1 has a non-constant element");
    let mut parts = Vec::new();
    for c in 0..p {
        let shifted = v.sub(&Poly::constant(f.field.from_i64(c as i64)));
        let g = f.gcd(&shifted);
        if !g.is_zero() && g.degree() > 0 {
            parts.push(g);
        }
    }
    debug_assert!(parts.len() > 1);
    parts.into_iter().flat_map(|g| berlekamp_squarefree(&g)).collect()
}

/// Roots in F_p of a polynomial over F_p.
pub(crate) fn roots_fp(f: &Poly) -> Vec<u64> {
    let mut roots: Vec<u64> = factor_fp(f)
        .into_iter()
        .filter(|(g, _)| g.degree() == 1)
        .map(|(g, _)| g.coeff(0).neg().residue().expect("prime field"))
        .collect();
    roots.sort_unstable();
    roots
}

pub(crate) fn is_irreducible_fp(f: &Poly) -> bool {
    let factors = factor_fp(f);
    factors.len() == 1 && factors[0].1 == 1
}

/// Rational roots of a monic polynomial over Q, each with the factor x - r
/// removed as often as it divides. The boolean is true when the divisor
/// search was exhaustive, i.e. the returned list is provably complete.
pub(crate) fn rational_roots(f: &Poly) -> (Vec<BigRational>, bool) {
    assert_eq!(f.field, FieldSpec::Rationals);
    assert!(f.is_monic());
    let mut roots = Vec::new();
    let mut g = f.clone();
    // strip roots at zero
    while g.degree() > 0 && g.coeff(0).is_zero() {
        g = g.div_exact(&Poly::x(f.field));
        roots.push(BigRational::zero());
    }
    if g.degree() == 0 {
        return (roots, true);
    }
    // integer model: y = D x turns monic f into monic integer h(y)
    let mut den_lcm = BigInt::one();
    for c in g.coeffs() {
        let r = c.as_rational().unwrap();
        den_lcm = den_lcm.lcm(r.denom());
    }
    let deg = g.degree();
    let mut int_coeffs: Vec<BigInt> = Vec::with_capacity(deg + 1);
    for (i, c) in g.coeffs().iter().enumerate() {
        let r = c.as_rational().unwrap();
        // coefficient of y^i is a_i * D^(deg - i)
        let scaled = r * BigRational::from(den_lcm.pow((deg - i) as u32));
        debug_assert!(scaled.is_integer());
        int_coeffs.push(scaled.to_integer());
    }
    let constant = int_coeffs[0].magnitude().clone();
    debug_assert!(!constant.is_zero());
    let (divisors, complete) = bounded_divisors(&BigInt::from(constant.clone()));
    let eval_int = |y: &BigInt| -> BigInt {
        let mut acc = BigInt::zero();
        for c in int_coeffs.iter().rev() {
            acc = acc * y + c;
        }
        acc
    };
    let mut int_roots = Vec::new();
    for d in divisors {
        for cand in [d.clone(), -d] {
            if eval_int(&cand).is_zero() {
                int_roots.push(cand);
            }
        }
    }
    for y in int_roots {
        let r = BigRational::new(y, den_lcm.clone());
        let lin = Poly::linear_root(&Scalar::Rational(r.clone()));
        loop {
            let (q, rem) = g.divmod(&lin);
            if rem.is_zero() && !q.is_zero() {
                g = q;
                roots.push(r.clone());
                if g.degree() == 0 {
                    break;
                }
            } else {
                break;
            }
        }
        if g.degree() == 0 {
            break;
        }
    }
    roots.sort();
    (roots, complete)
}

/// All positive divisors of |n|, via trial division plus Pollard rho.
/// Gives up (complete = false) if a large cofactor resists factoring.
fn bounded_divisors(n: &BigInt) -> (Vec<BigInt>, bool) {
    let mut m = n.magnitude().clone();
    let mut primes: Vec<(num::BigUint, u32)> = Vec::new();
    let mut complete = true;
    let one = num::BigUint::from(1u32);
    for q in 2u64..=65536 {
        if m == one {
            break;
        }
        let qb = num::BigUint::from(q);
        if &qb * &qb > m {
            break;
        }
        let mut e = 0;
        while (&m % &qb).is_zero() {
            m /= &qb;
            e += 1;
        }
        if e > 0 {
            primes.push((qb, e));
        }
    }
    // remaining m is 1, prime, or a product of primes > 65536
    let mut stack = vec![m];
    let mut fuel = 24u32;
    while let Some(m) = stack.pop() {
        if m == one {
            continue;
        }
        if biguint_is_probable_prime(&m) {
            let mut placed = false;
            for (q, e) in primes.iter_mut() {
                if *q == m {
                    *e += 1;
                    placed = true;
                    break;
                }
            }
            if !placed {
                primes.push((m, 1));
            }
            continue;
        }
        if fuel == 0 {
            complete = false;
            continue;
        }
        fuel -= 1;
        match pollard_rho(&m) {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => complete = false,
        }
    }
    let mut divisors = vec![BigInt::one()];
    for (q, e) in primes {
        let q = BigInt::from(q);
        let prev = divisors.clone();
        let mut power = BigInt::one();
        for _ in 0..e {
            power = &power * &q;
            for d in &prev {
                divisors.push(d * &power);
            }
        }
    }
    divisors.sort();
    divisors.dedup();
    (divisors, complete)
}

fn biguint_is_probable_prime(n: &num::BigUint) -> bool {
    use num::BigUint;
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for q in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let qb = BigUint::from(q);
        if n == &qb {
            return true;
        }
        if (n % &qb).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == BigUint::one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &num::BigUint) -> Option<num::BigUint> {
    use num::BigUint;
    if (n % 2u32).is_zero() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    for c in 1u32..20 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        let mut steps = 0u32;
        while d == one {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
            steps += 1;
            if steps > 200_000 {
                return None;
            }
        }
        if d != one && &d != n {
            return Some(d);
        }
    }
    None
}

/// Certifies irreducibility over Q: degree <= 3 with a complete and empty
/// rational-root search, or an irreducible squarefree image mod some small
/// prime of the same degree.
pub(crate) fn certified_irreducible_q(f: &Poly) -> bool {
    assert_eq!(f.field, FieldSpec::Rationals);
    let f = f.monic();
    if f.degree() == 1 {
        return true;
    }
    if f.degree() <= 3 {
        let (roots, complete) = rational_roots(&f);
        if complete && roots.is_empty() {
            return true;
        }
    }
    // reduction mod p: irreducible image of full degree certifies f
    'prime: for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101] {
        let fp = FieldSpec::Prime(p);
        let mut coeffs = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            let r = c.as_rational().unwrap();
            if (r.denom() % BigInt::from(p)).is_zero() {
                continue 'prime;
            }
            let num = r.numer().mod_floor(&BigInt::from(p));
            let den = r.denom().mod_floor(&BigInt::from(p));
            let num_u: u64 = num.try_into().unwrap();
            let den_u: u64 = den.try_into().unwrap();
            let v = Scalar::Residue { value: num_u, modulus: p }
                .mul(&Scalar::Residue { value: den_u, modulus: p }.inverse().unwrap());
            coeffs.push(v);
        }
        let g = Poly::new(fp, coeffs);
        if g.is_zero() || g.degree() != f.degree() {
            continue;
        }
        if g.squarefree_part().degree() != g.degree() {
            continue;
        }
        if is_irreducible_fp(&g) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(coeffs: &[i64]) -> Poly {
        let f = FieldSpec::Rationals;
        Poly::new(f, coeffs.iter().map(|&c| f.from_i64(c)).collect())
    }

    fn fpoly(p: u64, coeffs: &[i64]) -> Poly {
        let f = FieldSpec::prime(p).unwrap();
        Poly::new(f, coeffs.iter().map(|&c| f.from_i64(c)).collect())
    }

    #[test]
    fn divmod_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let f = qpoly(&[-1, 0, 1]);
        let g = qpoly(&[-1, 1]);
        let (q, r) = f.divmod(&g);
        assert!(r.is_zero());
        assert_eq!(q, qpoly(&[1, 1]));
        assert_eq!(f.gcd(&qpoly(&[1, 1])), qpoly(&[1, 1]));
    }

    #[test]
    fn berlekamp_small() {
        // x^2 + 1 over F_2 = (x+1)^2; over F_3 irreducible; over F_5 splits
        let f2 = factor_fp(&fpoly(2, &[1, 0, 1]));
        assert_eq!(f2, vec![(fpoly(2, &[1, 1]), 2)]);
        assert!(is_irreducible_fp(&fpoly(3, &[1, 0, 1])));
        let f5 = factor_fp(&fpoly(5, &[1, 0, 1]));
        assert_eq!(f5.len(), 2);
        assert_eq!(roots_fp(&fpoly(5, &[1, 0, 1])), vec![2, 3]);
    }

    #[test]
    fn berlekamp_cyclotomic_like() {
        // x^4 + x^3 + x^2 + x + 1 irreducible over F_2 (order of 2 mod 5 is 4)
        assert!(is_irreducible_fp(&fpoly(2, &[1, 1, 1, 1, 1])));
        // splits into two quadratics mod 19? 19 = -1 mod 5, order 2: two factors
        let f19 = factor_fp(&fpoly(19, &[1, 1, 1, 1, 1]));
        assert_eq!(f19.len(), 2);
        assert!(f19.iter().all(|(g, m)| g.degree() == 2 && *m == 1));
    }

    #[test]
    fn squarefree_char_p_pth_power() {
        // (x+1)^2 = x^2 + 1 over F_2 has zero derivative
        let f = fpoly(2, &[1, 0, 1]);
        assert_eq!(f.squarefree_part(), fpoly(2, &[1, 1]));
    }

    #[test]
    fn rational_roots_small() {
        // (x - 2)(x + 3/1)(x^2 + 1) -> roots 2, -3
        let f = qpoly(&[-2, 1]).mul(&qpoly(&[3, 1])).mul(&qpoly(&[1, 0, 1]));
        let (roots, complete) = rational_roots(&f);
        assert!(complete);
        let expect: Vec<BigRational> = vec![
            BigRational::from(BigInt::from(-3)),
            BigRational::from(BigInt::from(2)),
        ];
        assert_eq!(roots, expect);
    }

    #[test]
    fn rational_roots_fractional() {
        // x - 1/2
        let half = Scalar::from_rational(1, 2);
        let f = Poly::linear_root(&half);
        let (roots, complete) = rational_roots(&f);
        assert!(complete);
        assert_eq!(roots, vec![BigRational::new(BigInt::from(1), BigInt::from(2))]);
    }

    #[test]
    fn irreducibility_certificates() {
        assert!(certified_irreducible_q(&qpoly(&[1, 1, 1]))); // x^2+x+1
        assert!(certified_irreducible_q(&qpoly(&[-2, 0, 1]))); // x^2-2
        assert!(certified_irreducible_q(&qpoly(&[1, 1, 1, 1, 1]))); // 5th cyclotomic
        assert!(!certified_irreducible_q(&qpoly(&[-1, 0, 1]))); // x^2-1
        assert!(!certified_irreducible_q(&qpoly(&[-2, 1, 0, 1]).mul(&qpoly(&[-2, 1, 0, 1]))));
    }
}
