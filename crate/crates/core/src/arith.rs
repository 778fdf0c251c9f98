//! Exact scalar arithmetic over the rationals and prime fields.
//!
//! Everything above this layer is generic over [`Field`], a context object
//! that owns the arithmetic for its element type. Prime moduli are runtime
//! values, so elements cannot be built without their field; the field value
//! is passed alongside the elements instead.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::RngCore;

use crate::error::{Error, Result};

/// Largest admissible prime characteristic.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// Identifies a coefficient field: `Q` or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    kind: FieldKind,
    characteristic: u32,
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec { kind: FieldKind::Rationals, characteristic: 0 }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { kind: FieldKind::PrimeField, characteristic: p as u32 })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField => write!(f, "F{}", self.characteristic),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic context for a coefficient field.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Maps a rational number into the field; `None` when the denominator
    /// vanishes in the field.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
            .expect("integers always map into a field")
    }

    /// `Some(true)` if the element prints with a leading minus sign.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    fn render(&self, a: &Self::Elem) -> String {
        self.to_scalar(a).to_string()
    }

    /// All elements, for finite fields of manageable size.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
}

/// The field of rational numbers with arbitrary-precision numerators and
/// denominators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::rationals()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar { field: FieldSpec::rationals(), value: ScalarValue::Rational(a.clone()) }
    }
    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        let n = (rng.next_u32() % 7) as i64 - 3;
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
}

/// `Z/pZ` for a prime `p < 2^31`, elements stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        let spec = FieldSpec::prime(p)?;
        Ok(PrimeField { p: spec.characteristic })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_bigint(&self, n: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u32().expect("residue fits in u32")
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec { kind: FieldKind::PrimeField, characteristic: self.p }
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(self.p as i64) as u32)
    }
    fn from_rational(&self, q: &BigRational) -> Option<u32> {
        let num = self.reduce_bigint(q.numer());
        let den = self.reduce_bigint(q.denom());
        self.inv(&den).map(|d| self.mul(&num, &d))
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn to_scalar(&self, a: &u32) -> Scalar {
        Scalar { field: self.spec(), value: ScalarValue::Residue(*a) }
    }
    fn random(&self, rng: &mut dyn RngCore) -> u32 {
        rng.next_u32() % self.p
    }
    fn render(&self, a: &u32) -> String {
        a.to_string()
    }
    fn elements(&self) -> Option<Vec<u32>> {
        (self.p <= 1 << 12).then(|| (0..self.p).collect())
    }
}

/// Raw value of a [`Scalar`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ScalarValue {
    Rational(BigRational),
    Residue(u32),
}

/// Field chosen at runtime, e.g. from a session file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DynField(FieldSpec);

impl DynField {
    pub fn new(spec: FieldSpec) -> Self {
        DynField(spec)
    }

    fn prime(&self) -> PrimeField {
        PrimeField { p: self.0.characteristic }
    }

    fn residue(v: &ScalarValue) -> u32 {
        match v {
            ScalarValue::Residue(r) => *r,
            ScalarValue::Rational(_) => panic!("rational value in a prime field"),
        }
    }

    fn rational(v: &ScalarValue) -> &BigRational {
        match v {
            ScalarValue::Rational(q) => q,
            ScalarValue::Residue(_) => panic!("residue value in the rational field"),
        }
    }
}

macro_rules! dyn_binop {
    ($name:ident) => {
        fn $name(&self, a: &ScalarValue, b: &ScalarValue) -> ScalarValue {
            match self.0.kind {
                FieldKind::Rationals => ScalarValue::Rational(
                    Rationals.$name(Self::rational(a), Self::rational(b)),
                ),
                FieldKind::PrimeField => ScalarValue::Residue(
                    self.prime().$name(&Self::residue(a), &Self::residue(b)),
                ),
            }
        }
    };
}

impl Field for DynField {
    type Elem = ScalarValue;

    fn spec(&self) -> FieldSpec {
        self.0
    }
    fn zero(&self) -> ScalarValue {
        match self.0.kind {
            FieldKind::Rationals => ScalarValue::Rational(BigRational::zero()),
            FieldKind::PrimeField => ScalarValue::Residue(0),
        }
    }
    fn one(&self) -> ScalarValue {
        match self.0.kind {
            FieldKind::Rationals => ScalarValue::Rational(BigRational::one()),
            FieldKind::PrimeField => ScalarValue::Residue(1),
        }
    }
    fn is_zero(&self, a: &ScalarValue) -> bool {
        match a {
            ScalarValue::Rational(q) => q.is_zero(),
            ScalarValue::Residue(r) => *r == 0,
        }
    }
    dyn_binop!(add);
    dyn_binop!(sub);
    dyn_binop!(mul);
    fn neg(&self, a: &ScalarValue) -> ScalarValue {
        match a {
            ScalarValue::Rational(q) => ScalarValue::Rational(-q),
            ScalarValue::Residue(r) => ScalarValue::Residue(self.prime().neg(r)),
        }
    }
    fn inv(&self, a: &ScalarValue) -> Option<ScalarValue> {
        match a {
            ScalarValue::Rational(q) => Rationals.inv(q).map(ScalarValue::Rational),
            ScalarValue::Residue(r) => self.prime().inv(r).map(ScalarValue::Residue),
        }
    }
    fn from_rational(&self, q: &BigRational) -> Option<ScalarValue> {
        match self.0.kind {
            FieldKind::Rationals => Some(ScalarValue::Rational(q.clone())),
            FieldKind::PrimeField => self.prime().from_rational(q).map(ScalarValue::Residue),
        }
    }
    fn to_scalar(&self, a: &ScalarValue) -> Scalar {
        Scalar { field: self.0, value: a.clone() }
    }
    fn random(&self, rng: &mut dyn RngCore) -> ScalarValue {
        match self.0.kind {
            FieldKind::Rationals => ScalarValue::Rational(Rationals.random(rng)),
            FieldKind::PrimeField => ScalarValue::Residue(self.prime().random(rng)),
        }
    }
    fn is_negative(&self, a: &ScalarValue) -> bool {
        matches!(a, ScalarValue::Rational(q) if q.is_negative())
    }
    fn elements(&self) -> Option<Vec<ScalarValue>> {
        match self.0.kind {
            FieldKind::Rationals => None,
            FieldKind::PrimeField => self
                .prime()
                .elements()
                .map(|v| v.into_iter().map(ScalarValue::Residue).collect()),
        }
    }
}

/// An exact field element tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    value: ScalarValue,
}

impl Scalar {
    pub fn rational(q: BigRational) -> Self {
        Scalar { field: FieldSpec::rationals(), value: ScalarValue::Rational(q) }
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn residue(value: i64, field: FieldSpec) -> Result<Self> {
        if field.kind != FieldKind::PrimeField {
            return Err(Error::FieldMismatch);
        }
        let p = field.characteristic as i64;
        Ok(Scalar { field, value: ScalarValue::Residue(value.rem_euclid(p) as u32) })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn value(&self) -> &ScalarValue {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        DynField(self.field).is_zero(&self.value)
    }

    /// Re-establishes canonical form. A no-op for values built through this
    /// module.
    pub fn canonicalize(&self) -> Scalar {
        let value = match &self.value {
            ScalarValue::Rational(q) => {
                ScalarValue::Rational(BigRational::new(q.numer().clone(), q.denom().clone()))
            }
            ScalarValue::Residue(r) => ScalarValue::Residue(r % self.field.characteristic),
        };
        Scalar { field: self.field, value }
    }

    fn same_field(&self, other: &Scalar) -> Result<DynField> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(DynField(self.field))
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        let k = self.same_field(other)?;
        Ok(Scalar { field: self.field, value: k.add(&self.value, &other.value) })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        let k = self.same_field(other)?;
        Ok(Scalar { field: self.field, value: k.sub(&self.value, &other.value) })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        let k = self.same_field(other)?;
        Ok(Scalar { field: self.field, value: k.mul(&self.value, &other.value) })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        let k = self.same_field(other)?;
        let value = k.div(&self.value, &other.value).ok_or(Error::DivisionByZero)?;
        Ok(Scalar { field: self.field, value })
    }

    pub fn invert(&self) -> Result<Scalar> {
        let value = DynField(self.field).inv(&self.value).ok_or(Error::DivisionByZero)?;
        Ok(Scalar { field: self.field, value })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            ScalarValue::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            ScalarValue::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            ScalarValue::Residue(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d).unwrap()
    }

    #[test]
    fn rational_add() {
        assert_eq!(q(1, 2).checked_add(&q(1, 3)).unwrap(), q(5, 6));
        assert_eq!(q(5, 6).to_string(), "5/6");
        assert_eq!(q(4, 2).to_string(), "2");
    }

    #[test]
    fn prime_division() {
        let f5 = FieldSpec::prime(5).unwrap();
        let two = Scalar::residue(2, f5).unwrap();
        let three = Scalar::residue(3, f5).unwrap();
        assert_eq!(two.checked_div(&three).unwrap(), Scalar::residue(4, f5).unwrap());
        assert_eq!(two.invert().unwrap(), three);
    }

    #[test]
    fn division_by_zero() {
        let f5 = FieldSpec::prime(5).unwrap();
        let x = Scalar::residue(3, f5).unwrap();
        let zero = Scalar::residue(0, f5).unwrap();
        assert!(matches!(x.checked_div(&zero), Err(Error::DivisionByZero)));
        assert!(matches!(q(0, 1).invert(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn field_mismatch() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = Scalar::residue(1, f5).unwrap();
        assert!(matches!(a.checked_add(&q(1, 1)), Err(Error::FieldMismatch)));
        let f7 = FieldSpec::prime(7).unwrap();
        assert!(matches!(a.checked_mul(&Scalar::residue(1, f7).unwrap()), Err(Error::FieldMismatch)));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(q(-3, 7).invert().unwrap(), q(-7, 3));
        assert_eq!(q(1, 1).invert().unwrap(), q(1, 1));
        let f3 = FieldSpec::prime(3).unwrap();
        let one = Scalar::residue(1, f3).unwrap();
        assert_eq!(one.invert().unwrap(), one);
    }

    #[test]
    fn rejects_non_primes() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime((1u64 << 31) + 11).is_err());
        assert!(FieldSpec::prime(2147483647).is_ok());
        assert_eq!(FieldSpec::prime(7).unwrap(), FieldSpec::prime(7).unwrap());
        assert_ne!(FieldSpec::prime(7).unwrap(), FieldSpec::rationals());
    }

    #[test]
    fn rational_literals_in_prime_field() {
        let f5 = PrimeField::new(5).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f5.from_rational(&half), Some(3));
        let fifth = BigRational::new(BigInt::from(1), BigInt::from(5));
        assert_eq!(f5.from_rational(&fifth), None);
        assert_eq!(f5.from_i64(-1), 4);
    }

    fn field_axioms<F: Field>(k: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) {
        assert_eq!(k.add(&k.add(a, b), c), k.add(a, &k.add(b, c)));
        assert_eq!(k.mul(&k.mul(a, b), c), k.mul(a, &k.mul(b, c)));
        assert_eq!(k.mul(a, &k.add(b, c)), k.add(&k.mul(a, b), &k.mul(a, c)));
        assert_eq!(k.add(a, &k.neg(a)), k.zero());
        assert_eq!(k.sub(a, b), k.add(a, &k.neg(b)));
        if !k.is_zero(a) {
            assert_eq!(k.mul(a, &k.inv(a).unwrap()), k.one());
        }
    }

    proptest! {
        #[test]
        fn prime_field_axioms(a in 0u32..101, b in 0u32..101, c in 0u32..101) {
            field_axioms(&PrimeField::new(101).unwrap(), &a, &b, &c);
        }

        #[test]
        fn large_prime_axioms(a in 0u32..2147483647, b in 0u32..2147483647, c in 0u32..2147483647) {
            field_axioms(&PrimeField::new(2147483647).unwrap(), &a, &b, &c);
        }

        #[test]
        fn rational_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50, e in -9i64..9) {
            let r = |n: i64, m: i64| BigRational::new(BigInt::from(n), BigInt::from(m));
            field_axioms(&Rationals, &r(a, b), &r(c, d), &r(e, 1));
        }

        #[test]
        fn canonical_form_is_idempotent(n in -1000i64..1000, d in 1i64..1000, r in 0i64..97) {
            let s = q(n, d);
            prop_assert_eq!(s.canonicalize(), s.clone());
            prop_assert!(s.value().clone() == ScalarValue::Rational(BigRational::new(n.into(), d.into())));
            let f = Scalar::residue(r, FieldSpec::prime(97).unwrap()).unwrap();
            prop_assert_eq!(f.canonicalize(), f);
        }
    }
}
