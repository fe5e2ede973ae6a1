//! Exact arithmetic in GF(p^m).
//!
//! Elements are polynomial-basis coefficient vectors over GF(p), packed into a
//! base-p integer index. Construction is fully deterministic: the modulus is
//! the first irreducible monic polynomial in ascending coefficient order, the
//! generator is the first group element of full multiplicative order, and a
//! discrete-log table built from the generator backs multiplication and
//! inversion. Fields stay small (the bound defaults to 2^20 elements), so the
//! tables are cheap.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};

/// Default cap on the number of field elements.
pub const DEFAULT_FIELD_BOUND: u64 = 1 << 20;

struct FieldInner {
    p: u64,
    m: usize,
    order: u64,
    /// Monic irreducible modulus, ascending coefficients, length m+1.
    modulus: Vec<u64>,
    /// Index encoding of the multiplicative generator.
    generator: u64,
    /// exp[k] = index of generator^k for k in 0..order-1.
    exp: Vec<u64>,
    /// log[idx] for idx in 1..order; log[0] is a sentinel.
    log: Vec<u64>,
}

/// A finite field GF(p^m). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<FieldInner>,
}

/// An element of a [`FiniteField`], carrying its field.
#[derive(Clone)]
pub struct FieldElement {
    field: FiniteField,
    idx: u64,
}

// ---------------------------------------------------------------------------
// Raw polynomial arithmetic over GF(p), used to bootstrap the tables.
// ---------------------------------------------------------------------------

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `f`.
fn poly_rem(p: u64, a: &[u64], f: &[u64]) -> Vec<u64> {
    let deg_f = f.len() - 1;
    let mut rem: Vec<u64> = a.to_vec();
    poly_trim(&mut rem);
    while rem.len() > deg_f {
        let d = rem.len() - 1;
        let c = rem[d];
        rem[d] = 0;
        if c != 0 {
            for (k, &fk) in f[..deg_f].iter().enumerate() {
                let pos = d - deg_f + k;
                rem[pos] = (rem[pos] + (p - fk % p) % p * c) % p;
            }
        }
        poly_trim(&mut rem);
    }
    rem
}

fn poly_mulmod(p: u64, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    poly_rem(p, &poly_mul(p, a, b), f)
}

fn poly_powmod(p: u64, a: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
    let mut base = poly_rem(p, a, f);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(p, &acc, &base, f);
        }
        base = poly_mulmod(p, &base, &base, f);
        e >>= 1;
    }
    acc
}

fn poly_gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // Make b monic, then reduce a by it.
        let lead = *b.last().unwrap();
        let inv = crate::arith::pow_mod(lead, p - 2, p);
        let monic: Vec<u64> = b.iter().map(|&c| c * inv % p).collect();
        let r = poly_rem(p, &a, &monic);
        a = b;
        b = r;
    }
    a
}

/// Rabin irreducibility test for a monic polynomial of degree m over GF(p):
/// x^(p^m) = x mod f, and gcd(x^(p^(m/l)) - x, f) = 1 for every prime l | m.
fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let m = (f.len() - 1) as u32;
    if m == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let order = p.pow(m);
    let frob = poly_powmod(p, &x, order, f);
    if frob != x {
        return false;
    }
    for (l, _) in factorize(m as u64) {
        let e = p.pow(m / l as u32);
        let mut diff = poly_powmod(p, &x, e, f);
        // diff -= x
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        let g = poly_gcd(p, &diff, f);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Field construction
// ---------------------------------------------------------------------------

impl FiniteField {
    /// Builds GF(p^m) with the default size bound.
    pub fn new(p: u64, m: usize) -> Result<Self> {
        Self::with_bound(p, m, DEFAULT_FIELD_BOUND)
    }

    /// Builds GF(p^m), refusing fields with more than `bound` elements.
    pub fn with_bound(p: u64, m: usize, bound: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut order: u128 = 1;
        for _ in 0..m {
            order *= p as u128;
            if order > bound as u128 {
                return Err(Error::FieldTooLarge { order, bound });
            }
        }
        let order = order as u64;

        let modulus = find_modulus(p, m)?;
        let generator = find_generator(p, m, order, &modulus)?;

        // Fill the discrete-log tables by walking powers of the generator.
        let mut exp = vec![0u64; (order - 1) as usize];
        let mut log = vec![u64::MAX; order as usize];
        let g_digits = decode(p, m, generator);
        let mut cur = vec![1u64];
        for (k, slot) in exp.iter_mut().enumerate() {
            let idx = encode(p, &cur);
            *slot = idx;
            log[idx as usize] = k as u64;
            cur = poly_mulmod(p, &cur, &g_digits, &modulus);
        }
        if encode(p, &cur) != 1 {
            return Err(Error::InternalInvariant(
                "generator power walk did not return to 1".into(),
            ));
        }

        Ok(FiniteField {
            inner: Arc::new(FieldInner {
                p,
                m,
                order,
                modulus,
                generator,
                exp,
                log,
            }),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    pub fn extension_degree(&self) -> usize {
        self.inner.m
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// Modulus polynomial, ascending coefficients, monic of degree m.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// `q` such that the field is GF(q^2), when the degree is even.
    pub fn sqrt_order(&self) -> Option<u64> {
        if self.inner.m % 2 == 0 {
            Some(self.inner.p.pow((self.inner.m / 2) as u32))
        } else {
            None
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.make(0)
    }

    pub fn one(&self) -> FieldElement {
        self.make(1)
    }

    /// The verified multiplicative generator found at construction.
    pub fn generator(&self) -> FieldElement {
        self.make(self.inner.generator)
    }

    /// Element from its canonical base-p index.
    pub fn element(&self, idx: u64) -> Result<FieldElement> {
        if idx >= self.inner.order {
            return Err(Error::MalformedQuery(format!(
                "element index {idx} out of range for a field of order {}",
                self.inner.order
            )));
        }
        Ok(self.make(idx))
    }

    /// Element from polynomial-basis coefficients (ascending, at most m).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.inner.m {
            return Err(Error::MalformedQuery(format!(
                "{} coefficients for an extension of degree {}",
                coeffs.len(),
                self.inner.m
            )));
        }
        let reduced: Vec<u64> = coeffs.iter().map(|&c| c % self.inner.p).collect();
        Ok(self.make(encode(self.inner.p, &reduced)))
    }

    /// All field elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.order).map(move |i| self.make(i))
    }

    /// The canonical element of multiplicative order exactly `r`:
    /// generator^((order-1)/r). Requires `r | order - 1`.
    pub fn element_of_order(&self, r: u64) -> Result<FieldElement> {
        let group = self.inner.order - 1;
        if r == 0 || group % r != 0 {
            return Err(Error::NoSuchRoot {
                r,
                order: self.inner.order,
            });
        }
        Ok(self.make(self.pow_idx(self.inner.generator, group / r)))
    }

    fn make(&self, idx: u64) -> FieldElement {
        FieldElement {
            field: self.clone(),
            idx,
        }
    }

    fn same_field(&self, other: &FiniteField) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.m == other.inner.m)
    }

    // -- index-level arithmetic (the workhorses; element ops delegate here) --

    pub(crate) fn add_idx(&self, a: u64, b: u64) -> u64 {
        let p = self.inner.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        while a != 0 || b != 0 {
            let mut s = a % p + b % p;
            if s >= p {
                s -= p;
            }
            out += s * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    pub(crate) fn neg_idx(&self, a: u64) -> u64 {
        let p = self.inner.p;
        let mut a = a;
        let mut out = 0u64;
        let mut place = 1u64;
        while a != 0 {
            let d = a % p;
            if d != 0 {
                out += (p - d) * place;
            }
            place *= p;
            a /= p;
        }
        out
    }

    pub(crate) fn sub_idx(&self, a: u64, b: u64) -> u64 {
        self.add_idx(a, self.neg_idx(b))
    }

    pub(crate) fn mul_idx(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let group = self.inner.order - 1;
        let k = self.inner.log[a as usize] + self.inner.log[b as usize];
        self.inner.exp[(k % group) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub(crate) fn inv_idx(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let group = self.inner.order - 1;
        let k = (group - self.inner.log[a as usize]) % group;
        Some(self.inner.exp[k as usize])
    }

    pub(crate) fn pow_idx(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let group = self.inner.order - 1;
        let k = self.inner.log[a as usize] % group * (e % group) % group;
        self.inner.exp[k as usize]
    }

    /// Conjugation x -> x^q on a field of square order q^2.
    pub(crate) fn conj_idx(&self, a: u64) -> Result<u64> {
        match self.sqrt_order() {
            Some(q) => Ok(self.pow_idx(a, q)),
            None => Err(Error::NoConjugation {
                p: self.inner.p,
                m: self.inner.m,
            }),
        }
    }
}

fn encode(p: u64, digits: &[u64]) -> u64 {
    let mut out = 0u64;
    for &d in digits.iter().rev() {
        out = out * p + d;
    }
    out
}

fn decode(p: u64, m: usize, mut idx: u64) -> Vec<u64> {
    let mut digits = vec![0u64; m];
    for slot in digits.iter_mut() {
        *slot = idx % p;
        idx /= p;
    }
    digits
}

/// First irreducible monic polynomial of degree m, scanning the non-leading
/// coefficient vector as an ascending base-p counter.
fn find_modulus(p: u64, m: usize) -> Result<Vec<u64>> {
    if m == 1 {
        return Ok(vec![0, 1]); // x itself: GF(p) with the degree-1 convention
    }
    let count = p.checked_pow(m as u32).unwrap();
    for k in 0..count {
        let mut f = decode(p, m, k);
        f.push(1);
        if is_irreducible(p, &f) {
            return Ok(f);
        }
    }
    Err(Error::InternalInvariant(format!(
        "no irreducible polynomial of degree {m} over GF({p})"
    )))
}

/// First element (in index order) whose multiplicative order is order-1,
/// checked against the prime factorization of order-1.
fn find_generator(p: u64, m: usize, order: u64, modulus: &[u64]) -> Result<u64> {
    let group = order - 1;
    let primes: Vec<u64> = factorize(group).into_iter().map(|(q, _)| q).collect();
    'cand: for idx in 1..order {
        let digits = decode(p, m, idx);
        for &l in &primes {
            let pw = poly_powmod(p, &digits, group / l, modulus);
            if pw == vec![1] {
                continue 'cand;
            }
        }
        let full = poly_powmod(p, &digits, group, modulus);
        if full != vec![1] {
            return Err(Error::InternalInvariant(
                "candidate generator violates Lagrange".into(),
            ));
        }
        return Ok(idx);
    }
    Err(Error::InternalInvariant(format!(
        "no generator found in GF({p}^{m})"
    )))
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// Canonical base-p integer encoding of the coefficient vector.
    pub fn index(&self) -> u64 {
        self.idx
    }

    /// Polynomial-basis coefficients, ascending, length m.
    pub fn coeffs(&self) -> Vec<u64> {
        decode(self.field.inner.p, self.field.inner.m, self.idx)
    }

    pub fn is_zero(&self) -> bool {
        self.idx == 0
    }

    pub fn is_one(&self) -> bool {
        self.idx == 1
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.make(self.field.pow_idx(self.idx, e))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<FieldElement> {
        self.field.inv_idx(self.idx).map(|i| self.field.make(i))
    }

    /// Conjugation x -> x^q; requires the field to be GF(q^2).
    pub fn conjugate(&self) -> Result<FieldElement> {
        Ok(self.field.make(self.field.conj_idx(self.idx)?))
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.idx == 0 {
            return None;
        }
        let group = self.field.inner.order - 1;
        let k = self.field.inner.log[self.idx as usize];
        Some(group / crate::arith::gcd(group, k))
    }

    fn expect_same_field(&self, other: &FieldElement) {
        assert!(
            self.field.same_field(&other.field),
            "elements of different fields"
        );
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.idx == other.idx
            && self.field.inner.p == other.field.inner.p
            && self.field.inner.m == other.field.inner.m
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.inner.p.hash(state);
        self.field.inner.m.hash(state);
        self.idx.hash(state);
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $delegate:ident) => {
        impl $trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.expect_same_field(rhs);
                self.field.make(self.field.$delegate(self.idx, rhs.idx))
            }
        }
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, add_idx);
binop!(Sub, sub, sub_idx);
binop!(Mul, mul, mul_idx);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.make(self.field.neg_idx(self.idx))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Div for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self.expect_same_field(rhs);
        let inv = rhs.field.inv_idx(rhs.idx).expect("division by zero");
        self.field.make(self.field.mul_idx(self.idx, inv))
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: FieldElement) -> FieldElement {
        &self / &rhs
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.inner.p, self.inner.m)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl Eq for FiniteField {}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.inner.m == 1 {
            return write!(f, "{}", self.idx);
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().into_iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "w")?,
                1 => write!(f, "{c}w")?,
                _ if c == 1 => write!(f, "w^{i}")?,
                _ => write!(f, "{c}w^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{:?}", self, self.field)
    }
}

/// Hermitian inner product sum(conjugate(x_i) * y_i) over GF(q^2).
pub fn hermitian_inner(x: &[FieldElement], y: &[FieldElement]) -> Result<FieldElement> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.is_empty() {
        return Err(Error::MalformedQuery("empty vectors".into()));
    }
    let field = x[0].field().clone();
    for e in x.iter().chain(y.iter()) {
        if !field.same_field(e.field()) {
            return Err(Error::FieldMismatch);
        }
    }
    let mut acc = 0u64;
    for (a, b) in x.iter().zip(y.iter()) {
        let term = field.mul_idx(field.conj_idx(a.idx)?, b.idx);
        acc = field.add_idx(acc, term);
    }
    Ok(field.element(acc).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Schoolbook multiply in coefficient vectors, reduced by the modulus.
    /// Independent of the discrete-log tables under test.
    fn naive_mul(field: &FiniteField, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = field.characteristic();
        let m = field.extension_degree();
        let (ca, cb) = (a.coeffs(), b.coeffs());
        let mut prod = vec![0u64; 2 * m];
        for i in 0..m {
            for j in 0..m {
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            }
        }
        // reduce by the monic modulus
        let f = field.modulus().to_vec();
        for d in (m..2 * m).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for k in 0..m {
                let pos = d - m + k;
                prod[pos] = (prod[pos] + (p - f[k]) % p * c) % p;
            }
        }
        field.from_coeffs(&prod[..m]).unwrap()
    }

    #[test]
    fn construction_basics() {
        let f = FiniteField::new(11, 2).unwrap();
        assert_eq!(f.order(), 121);
        let f1 = FiniteField::new(11, 1).unwrap();
        assert_eq!(f1.order(), 11);
        assert_eq!(f1.modulus(), &[0, 1]); // degree-1 convention: modulus x
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(FiniteField::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FiniteField::new(2, 0), Err(Error::ZeroDegree)));
        assert!(matches!(
            FiniteField::new(2, 25),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn generator_order_exhaustive_gf169() {
        // The stored generator of GF(169) must have exact order 168: walking
        // all powers hits 1 only at exponent 168.
        let f = FiniteField::new(13, 2).unwrap();
        let g = f.generator();
        let mut cur = f.one();
        for k in 1..168 {
            cur = cur * g.clone();
            assert!(!cur.is_one(), "generator order divides {k}");
        }
        cur = cur * g.clone();
        assert!(cur.is_one());
        // Spot checks named at the proper divisors of 168.
        for e in [84, 56, 24] {
            assert!(!g.pow(e).is_one());
        }
        assert!(g.pow(168).is_one());
    }

    #[test]
    fn table_mul_matches_naive_mul() {
        for (p, m) in [(3, 2), (2, 3), (5, 2), (7, 1), (2, 4)] {
            let f = FiniteField::new(p, m).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        a.clone() * b.clone(),
                        naive_mul(&f, &a, &b),
                        "GF({p}^{m}): {a:?} * {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugation_gf121() {
        let f = FiniteField::new(11, 2).unwrap();
        let g = f.generator();
        assert_eq!(g.conjugate().unwrap(), g.pow(11));
        assert_eq!(f.zero().conjugate().unwrap(), f.zero());
        assert_eq!(f.one().conjugate().unwrap(), f.one());
        // Involution, exhaustively.
        for x in f.elements() {
            assert_eq!(x.conjugate().unwrap().conjugate().unwrap(), x);
        }
        // Exactly q elements are fixed: the base subfield.
        let fixed = f
            .elements()
            .filter(|x| &x.conjugate().unwrap() == x)
            .count();
        assert_eq!(fixed, 11);
    }

    #[test]
    fn conjugation_requires_even_degree() {
        let f = FiniteField::new(3, 3).unwrap();
        assert!(matches!(
            f.one().conjugate(),
            Err(Error::NoConjugation { p: 3, m: 3 })
        ));
    }

    #[test]
    fn hermitian_inner_gf9() {
        // GF(9) = GF(3)[x]/(x^2+1); g = 1+w has order 8 and g^4 = 2 = -1.
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        let g = f.generator();
        assert_eq!(g.coeffs(), vec![1, 1]);
        let got = hermitian_inner(std::slice::from_ref(&g), std::slice::from_ref(&g)).unwrap();
        assert_eq!(got, g.pow(4));
        assert_eq!(got, f.from_coeffs(&[2]).unwrap());

        // Zero vector against anything is zero; unit against itself is one.
        let zero = vec![f.zero(), f.zero()];
        let any = vec![g.clone(), g.pow(3)];
        assert!(hermitian_inner(&zero, &any).unwrap().is_zero());
        let unit = vec![f.one(), f.zero()];
        assert!(hermitian_inner(&unit, &unit).unwrap().is_one());
    }

    #[test]
    fn hermitian_inner_errors() {
        let f = FiniteField::new(3, 2).unwrap();
        let other = FiniteField::new(5, 2).unwrap();
        assert!(matches!(
            hermitian_inner(&[f.one()], &[f.one(), f.zero()]),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        ));
        assert!(matches!(
            hermitian_inner(&[f.one()], &[other.one()]),
            Err(Error::FieldMismatch)
        ));
    }

    #[test]
    fn elements_of_given_order() {
        let f = FiniteField::new(11, 2).unwrap();
        assert!(f.element_of_order(1).unwrap().is_one());
        // The unique element of order 2 is -1.
        let minus_one = f.element_of_order(2).unwrap();
        assert_eq!(minus_one, -f.one());
        // Order 3: cross-check against an exhaustive scan of GF(121)*.
        let eta = f.element_of_order(3).unwrap();
        let cube_roots: Vec<FieldElement> = f
            .elements()
            .filter(|x| !x.is_zero() && x.pow(3).is_one() && !x.is_one())
            .collect();
        assert_eq!(cube_roots.len(), 2);
        assert!(cube_roots.contains(&eta));
        assert_eq!(eta.multiplicative_order(), Some(3));
        // 7 does not divide 120.
        assert!(matches!(
            f.element_of_order(7),
            Err(Error::NoSuchRoot { r: 7, order: 121 })
        ));
    }

    #[test]
    fn field_axioms_spot() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
                assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
                if !b.is_zero() {
                    assert!((b.clone() * b.inverse().unwrap()).is_one());
                }
                // Frobenius is additive and multiplicative.
                let conj = |x: &FieldElement| x.conjugate().unwrap();
                assert_eq!(conj(&(a.clone() + b.clone())), conj(&a) + conj(&b));
                assert_eq!(conj(&(a.clone() * b.clone())), conj(&a) * conj(&b));
            }
        }
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn cross_field_ops_panic() {
        let f = FiniteField::new(3, 2).unwrap();
        let g = FiniteField::new(5, 2).unwrap();
        let _ = f.one() + g.one();
    }
}
