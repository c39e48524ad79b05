//! Exact arithmetic in the cyclotomic field Q(ζ_n).
//!
//! Elements are stored in the power basis `1, ζ, ζ², …, ζ^{φ(n)-1}` with
//! arbitrary-precision rational coefficients, always fully reduced modulo the
//! n-th cyclotomic polynomial Φ_n. Because the representation is canonical,
//! structural equality coincides with equality in the field.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over Q, coefficients from the constant term up.
pub type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let len = a.len().max(b.len());
    let mut out: Poly = (0..len)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let lead = b.last().unwrap().clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn euler_totient(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The n-th cyclotomic polynomial, computed by exact division of `x^n - 1`
/// by `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: usize) -> Poly {
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let mut num: Poly = vec![BigRational::zero(); n + 1];
    num[0] = -BigRational::one();
    num[n] = BigRational::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = poly_divrem(&num, &cyclotomic_polynomial(d));
        debug_assert!(r.is_empty());
        num = q;
    }
    num
}

/// The field Q(ζ_n) together with its reduction tables.
#[derive(Debug)]
pub struct CyclotomicField {
    n: usize,
    phi: Poly,
    degree: usize,
    // x^k mod Φ_n for k in 0..powers.len(); covers both products and ζ^k.
    powers: Vec<Vec<BigRational>>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl Eq for CyclotomicField {}

static FIELDS: OnceLock<Mutex<HashMap<usize, Arc<CyclotomicField>>>> = OnceLock::new();

impl CyclotomicField {
    /// Shared handle to Q(ζ_n). Fields are interned per `n`.
    pub fn new(n: usize) -> Arc<Self> {
        assert!(n >= 1, "cyclotomic field needs n >= 1");
        let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(Self::build(n)))
            .clone()
    }

    fn build(n: usize) -> Self {
        let phi = cyclotomic_polynomial(n);
        let degree = phi.len() - 1;
        debug_assert_eq!(degree, euler_totient(n));
        let top = (2 * degree).max(n + 1);
        let mut powers = Vec::with_capacity(top);
        let mut cur = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        for _ in 0..top {
            powers.push(cur.clone());
            // multiply by x, then fold the overflow coefficient back via Φ_n (monic)
            let overflow = cur.pop().unwrap();
            cur.insert(0, BigRational::zero());
            if !overflow.is_zero() {
                for (c, p) in cur.iter_mut().zip(phi.iter()) {
                    *c -= &overflow * p;
                }
            }
        }
        CyclotomicField {
            n,
            phi,
            degree,
            powers,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// φ(n), the dimension of the field over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cyclotomic_polynomial(&self) -> &[BigRational] {
        &self.phi
    }

    fn reduce(&self, mut p: Poly) -> Vec<BigRational> {
        let d = self.degree;
        if p.len() <= d {
            p.resize(d, BigRational::zero());
            return p;
        }
        if p.len() > self.powers.len() {
            let (_, r) = poly_divrem(&p, &self.phi);
            return self.reduce(r);
        }
        let mut out: Vec<BigRational> = p[..d].to_vec();
        for (k, c) in p.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(self.powers[k].iter()) {
                if !r.is_zero() {
                    *o += c * r;
                }
            }
        }
        out
    }
}

/// An element of Q(ζ_n) in canonical reduced form.
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclo {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: BigRational) -> Self {
        let mut c = Self::zero(field);
        c.coeffs[0] = q;
        c
    }

    pub fn from_int(field: &Arc<CyclotomicField>, k: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_ratio(field: &Arc<CyclotomicField>, p: i64, q: i64) -> Self {
        Self::from_rational(
            field,
            BigRational::new(BigInt::from(p), BigInt::from(q)),
        )
    }

    /// Builds an element from an arbitrary polynomial in ζ, reducing mod Φ_n.
    pub fn from_poly(field: &Arc<CyclotomicField>, poly: Poly) -> Self {
        Cyclo {
            field: field.clone(),
            coeffs: field.reduce(poly),
        }
    }

    /// ζ_n^k, with `k` taken modulo n.
    pub fn zeta_power(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let n = field.n as i64;
        let k = k.rem_euclid(n) as usize;
        Cyclo {
            field: field.clone(),
            coeffs: field.powers[k].clone(),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| &self.coeffs[0])
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field.n != other.field.n {
            return Err(Error::FieldMismatch {
                left: self.field.n,
                right: other.field.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        Cyclo {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        Cyclo {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if let Some(q) = other.as_rational() {
            return self.scale(q);
        }
        if let Some(q) = self.as_rational() {
            return other.scale(q);
        }
        Cyclo {
            field: self.field.clone(),
            coeffs: self.field.reduce(poly_mul(&self.coeffs, &other.coeffs)),
        }
    }

    /// Multiplication by a rational number.
    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_one() {
            return self.clone();
        }
        Cyclo {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_n.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, q.recip()));
        }
        // invariant: r_i ≡ t_i · a (mod Φ_n)
        let mut a_poly = self.coeffs.clone();
        trim(&mut a_poly);
        let (mut r0, mut r1) = (self.field.phi.clone(), a_poly);
        let (mut t0, mut t1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let t = poly_sub(&t0, &poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t);
        }
        // r1 is a nonzero constant since Φ_n is irreducible
        let c = r1[0].recip();
        let t: Poly = t1.into_iter().map(|x| x * &c).collect();
        Ok(Self::from_poly(&self.field, t))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_poly(&self, poly: &[BigRational]) -> Self {
        let mut acc = Self::zero(&self.field);
        for c in poly.iter().rev() {
            acc = acc.mul_unchecked(self);
            acc.coeffs[0] += c;
        }
        acc
    }

    /// Power-basis coefficients rendered as `"p/q"` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    /// Parses the representation produced by [`Cyclo::to_strings`]; also
    /// accepts bare integers. The input must be in reduced form (length φ(n)).
    pub fn from_strings<S: AsRef<str>>(field: &Arc<CyclotomicField>, parts: &[S]) -> Result<Self> {
        if parts.len() != field.degree {
            return Err(Error::Parse(format!(
                "scalar for n={} needs {} coefficients, got {}",
                field.n,
                field.degree,
                parts.len()
            )));
        }
        let coeffs = parts
            .iter()
            .map(|s| {
                let s = s.as_ref().trim();
                s.parse::<BigRational>()
                    .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Cyclo {
            field: field.clone(),
            coeffs,
        })
    }
}

/// `(1/n) Σ_{a=0}^{n-1} ζ^{-ab}`, which is 1 for `b ≡ 0` and 0 otherwise.
pub fn root_sum_check(field: &Arc<CyclotomicField>, b: i64) -> Cyclo {
    let n = field.n as i64;
    let mut acc = Cyclo::zero(field);
    for a in 0..n {
        acc += &Cyclo::zeta_power(field, -a * b);
    }
    acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n)))
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "ζ")?,
                (1, false) => write!(f, "{a}ζ")?,
                (_, true) => write!(f, "ζ^{k}")?,
                (_, false) => write!(f, "{a}ζ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl<'a> $trait<&'a Cyclo> for &'a Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &'a Cyclo) -> Cyclo {
                self.check_field(rhs).expect("cyclotomic field mismatch");
                self.$inner(rhs)
            }
        }
        impl $trait<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_unchecked);
binop!(Sub, sub, sub_unchecked);
binop!(Mul, mul, mul_unchecked);

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        self.check_field(rhs).expect("cyclotomic field mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        self.check_field(rhs).expect("cyclotomic field mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(mut self) -> Cyclo {
        for c in self.coeffs.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -self.clone()
    }
}
