//! Exact field arithmetic over the rationals and prime fields.
//!
//! Every structure constant in this crate is a [`Scalar`]: a reduced
//! arbitrary-precision rational or a residue modulo a prime. Values are
//! canonical on construction, so equality is plain componentwise equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("cannot parse {text:?} as an element of {field}: {reason}")]
    Parse {
        text: String,
        field: FieldSpec,
        reason: String,
    },
}

/// The base field every structure is defined over: ℚ or F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Builds a prime-field spec, rejecting composite or trivial moduli.
    pub fn prime_field(p: u64) -> Result<Self, ScalarError> {
        if is_prime_u64(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Mod { r: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Mod { r: 1 % p, p: *p },
        }
    }

    /// Converts a machine integer into the field.
    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Mod { r: m, p: *p }
            }
        }
    }

    /// Parses a scalar from its string form: `"a"`, `"a/b"`, or a residue.
    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        let err = |reason: &str| ScalarError::Parse {
            text: text.to_string(),
            field: *self,
            reason: reason.to_string(),
        };
        let text = text.trim();
        let (num_str, den_str) = match text.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (text, None),
        };
        let num: BigInt = num_str.parse().map_err(|_| err("bad integer"))?;
        let den: BigInt = match den_str {
            Some(d) => d.parse().map_err(|_| err("bad denominator"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(num, den))),
            FieldSpec::PrimeField(p) => {
                let reduce = |x: &BigInt| -> u64 {
                    let m = x % BigInt::from(*p);
                    let m = if m.is_negative() {
                        m + BigInt::from(*p)
                    } else {
                        m
                    };
                    // fits: 0 <= m < p <= u64::MAX
                    u64::try_from(m).unwrap()
                };
                let n = reduce(&num);
                let d = reduce(&den);
                if d == 0 {
                    return Err(err("denominator not invertible"));
                }
                let s = Scalar::Mod { r: n, p: *p };
                let t = Scalar::Mod { r: d, p: *p };
                s.checked_div(&t)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field element, canonical by construction.
///
/// Rationals are stored reduced with a positive denominator; prime-field
/// elements as residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { r: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { r, p } => *r == 1 % p,
        }
    }

    fn same_field(&self, rhs: &Scalar) -> Result<(), ScalarError> {
        if self.field() == rhs.field() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.field(), rhs.field()))
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, .. }) => Scalar::Mod {
                r: addmod(*a, *b, *p),
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, .. }) => Scalar::Mod {
                r: mulmod(*a, *b, *p),
                p: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { r, p } => Scalar::Mod {
                r: if *r == 0 { 0 } else { p - r },
                p: *p,
            },
        }
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&rhs.neg())
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Mod { r, p } => Scalar::Mod {
                r: invmod(*r, *p),
                p: *p,
            },
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_mul(&rhs.inv()?)
    }

    /// Canonical string form: `"a"`, `"a/b"` with b > 0 reduced, or a residue.
    pub fn to_canonical_string(&self) -> String {
        match self {
            Scalar::Rat(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod { r, .. } => r.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

macro_rules! panicking_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
            }
        }
    };
}

panicking_binop!(Add, add, checked_add);
panicking_binop!(Sub, sub, checked_sub);
panicking_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
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
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    // witness set sufficient for all n < 2^64
    'witness: for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
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

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn add_fractions() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn inverse_mod_7() {
        let f7 = FieldSpec::prime_field(7).unwrap();
        assert_eq!(f7.from_i64(3).inv().unwrap(), f7.from_i64(5));
    }

    #[test]
    fn canonical_form_from_unreduced_input() {
        // -2/4 * -1 = 1/2 reduced with positive denominator
        assert_eq!(&q(-2, 4) * &q(-1, 1), q(1, 2));
        assert_eq!(q(1, 2).to_canonical_string(), "1/2");
        assert_eq!(q(-3, -6).to_canonical_string(), "1/2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            q(1, 1).checked_div(&q(0, 1)),
            Err(ScalarError::DivisionByZero)
        );
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert_eq!(f5.zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn mixed_fields_are_an_error() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert!(matches!(
            q(1, 1).checked_add(&f5.one()),
            Err(ScalarError::FieldMismatch(..))
        ));
    }

    #[test]
    fn primality_gate() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(7).is_ok());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(91).is_err()); // 7 * 13
        assert!(FieldSpec::prime_field(4294967291).is_ok());
    }

    #[test]
    fn parse_round_trip() {
        let f7 = FieldSpec::prime_field(7).unwrap();
        for (field, text) in [
            (FieldSpec::Rationals, "5/6"),
            (FieldSpec::Rationals, "-7"),
            (f7, "4"),
        ] {
            let s = field.parse(text).unwrap();
            assert_eq!(s.to_canonical_string(), text);
        }
        // non-canonical inputs normalize
        assert_eq!(
            FieldSpec::Rationals
                .parse("2/4")
                .unwrap()
                .to_canonical_string(),
            "1/2"
        );
        assert_eq!(f7.parse("-1").unwrap().to_canonical_string(), "6");
        assert_eq!(f7.parse("1/3").unwrap().to_canonical_string(), "5");
        assert!(FieldSpec::Rationals.parse("1/0").is_err());
        assert!(f7.parse("1/7").is_err());
        assert!(f7.parse("x").is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| q(n, d))
    }

    fn arb_mod() -> impl Strategy<Value = (Scalar, u64)> {
        let primes = prop::sample::select(vec![2u64, 3, 5, 7, 101]);
        primes.prop_flat_map(|p| (0..p).prop_map(move |r| (Scalar::Mod { r, p }, p)))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &a.neg(), FieldSpec::Rationals.zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), FieldSpec::Rationals.one());
            }
        }

        #[test]
        fn prime_field_axioms((a, p) in arb_mod(), bseed in 0u64..1000, cseed in 0u64..1000) {
            let b = Scalar::Mod { r: bseed % p, p };
            let c = Scalar::Mod { r: cseed % p, p };
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &a.neg(), FieldSpec::PrimeField(p).zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), FieldSpec::PrimeField(p).one());
            }
        }

        #[test]
        fn canonical_string_round_trip(a in arb_rational()) {
            let s = a.to_canonical_string();
            prop_assert_eq!(FieldSpec::Rationals.parse(&s).unwrap(), a);
        }
    }
}
