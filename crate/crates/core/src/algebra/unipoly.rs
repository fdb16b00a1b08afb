use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Polynomial in `x` with integer coefficients; `coeffs[k]` multiplies `x^k`.
///
/// Trailing zeros are always stripped, so derived equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        UniPoly::from_coeffs(vec![c.into()])
    }

    /// `c * x^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn zip_with(&self, rhs: &UniPoly, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..n)
            .map(|k| {
                f(
                    self.coeffs.get(k).unwrap_or(&zero),
                    rhs.coeffs.get(k).unwrap_or(&zero),
                )
            })
            .collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, false) => "",
                (true, true) => "-",
                (false, false) => " + ",
                (false, true) => " - ",
            };
            first = false;
            let a = c.abs();
            let coef = if a.is_one() && k > 0 {
                String::new()
            } else {
                a.to_string()
            };
            match k {
                0 => write!(f, "{sep}{coef}")?,
                1 => write!(f, "{sep}{coef}x")?,
                _ => write!(f, "{sep}{coef}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct UniPolyJson {
    var: String,
    coeffs: Vec<String>,
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        UniPolyJson {
            var: "x".to_string(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = UniPolyJson::deserialize(d)?;
        if raw.var != "x" {
            return Err(D::Error::custom(format!(
                "unsupported variable {:?}",
                raw.var
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                c.parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("coeffs[{k}]: not an integer: {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| UniPoly::from_i64s(&c))
    }

    #[test]
    fn ring_examples() {
        let xp1 = UniPoly::from_i64s(&[1, 1]);
        assert_eq!(&xp1 * &xp1, UniPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(&xp1 + &UniPoly::zero(), xp1);
        let a = UniPoly::from_i64s(&[1, 2]);
        let b = UniPoly::from_i64s(&[3, 3]);
        assert_eq!(&a * &b, UniPoly::from_i64s(&[3, 9, 6]));
    }

    #[test]
    fn canonical_form() {
        let p = UniPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(&p - &p, UniPoly::zero());
        assert!(UniPoly::from_i64s(&[0, 0]).is_zero());
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn json_shape() {
        let p = UniPoly::from_i64s(&[1, 1]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"var":"x","coeffs":["1","1"]}"#
        );
        assert_eq!(
            serde_json::to_string(&UniPoly::zero()).unwrap(),
            r#"{"var":"x","coeffs":[]}"#
        );
        let back: UniPoly =
            serde_json::from_str(r#"{"var":"x","coeffs":["3","0","-2","0"]}"#).unwrap();
        assert_eq!(back, UniPoly::from_i64s(&[3, 0, -2]));
        assert!(serde_json::from_str::<UniPoly>(r#"{"var":"x","coeffs":["a"]}"#).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_i64s(&[1, 2, 1]).to_string(), "1 + 2x + x^2");
        assert_eq!(UniPoly::from_i64s(&[0, -1, 0, 3]).to_string(), "-x + 3x^3");
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn eval_is_a_ring_map(a in poly(), b in poly(), x in -5i64..5) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
