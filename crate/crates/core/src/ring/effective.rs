use std::fmt;
use std::sync::Arc;

use super::{Elem, FiniteRing};
use crate::cxlab::QPolyNF;
use crate::error::{AlgebraError, Result};

/// Any ring the library can compute in.
#[derive(Debug, Clone)]
pub enum EffectiveRing {
    Finite(Arc<FiniteRing>),
    /// The integers.
    Integers,
    /// `Z × Z`.
    IntegerPairs,
    /// `Z[X_1, .., X_N] / (2X_1, 4X_2, .., 2^N X_N)` with `N` the index bound.
    QPoly { bound: u32 },
}

/// An element of an [`EffectiveRing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Finite(Elem),
    Int(i64),
    IntPair(i64, i64),
    Poly(QPolyNF),
}

impl EffectiveRing {
    pub fn is_finite(&self) -> bool {
        matches!(self, EffectiveRing::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Arc<FiniteRing>> {
        match self {
            EffectiveRing::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            EffectiveRing::Finite(r) => r.describe(),
            EffectiveRing::Integers => "Z".into(),
            EffectiveRing::IntegerPairs => "Z x Z".into(),
            EffectiveRing::QPoly { bound } => format!("qpoly {bound}"),
        }
    }

    /// `a | b`, i.e. `b ∈ aR`.
    pub fn divides(&self, a: &Element, b: &Element) -> Result<bool> {
        match (self, a, b) {
            (EffectiveRing::Finite(r), Element::Finite(x), Element::Finite(y)) => Ok(r.divides(*x, *y)),
            (EffectiveRing::Integers, Element::Int(x), Element::Int(y)) => Ok(int_divides(*x, *y)),
            (EffectiveRing::IntegerPairs, Element::IntPair(x1, x2), Element::IntPair(y1, y2)) => {
                Ok(int_divides(*x1, *y1) && int_divides(*x2, *y2))
            }
            (EffectiveRing::QPoly { .. }, Element::Poly(x), Element::Poly(y)) => match x.as_signed_power_of_two() {
                Some(m) => y.member_pow2_principal(m),
                None => Err(AlgebraError::UnsupportedDivisibility(format!(
                    "{x} is not ±2^m; only principal ideals 2^m R are decidable here"
                ))),
            },
            _ => Err(AlgebraError::RingMismatch),
        }
    }
}

fn int_divides(a: i64, b: i64) -> bool {
    if a == 0 {
        b == 0
    } else {
        b % a == 0
    }
}

impl fmt::Display for EffectiveRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_divisibility() {
        let z = EffectiveRing::Integers;
        assert!(!z.divides(&Element::Int(3), &Element::Int(1)).unwrap());
        assert!(z.divides(&Element::Int(-3), &Element::Int(6)).unwrap());
        assert!(z.divides(&Element::Int(0), &Element::Int(0)).unwrap());
        assert!(!z.divides(&Element::Int(0), &Element::Int(5)).unwrap());
    }

    #[test]
    fn qpoly_divisibility_only_for_powers_of_two() {
        let r = EffectiveRing::QPoly { bound: 16 };
        let two = Element::Poly(QPolyNF::constant(2, 16));
        let x = Element::Poly(QPolyNF::var(3, 16).unwrap());
        assert!(r.divides(&two, &Element::Poly(QPolyNF::constant(6, 16))).unwrap());
        assert!(matches!(r.divides(&x, &two), Err(AlgebraError::UnsupportedDivisibility(_))));
    }

    #[test]
    fn finite_divisibility_dispatches() {
        let r = EffectiveRing::Finite(FiniteRing::zn(6).unwrap());
        assert!(r.divides(&Element::Finite(2), &Element::Finite(4)).unwrap());
        assert!(!r.divides(&Element::Finite(2), &Element::Finite(3)).unwrap());
        assert_eq!(r.divides(&Element::Int(2), &Element::Finite(3)), Err(AlgebraError::RingMismatch));
    }
}
