//! Strongly multiplicative sets over effective commutative rings: finite
//! rings built from constructors, the integers, and one bespoke polynomial
//! quotient.

pub mod cert;
pub mod cxlab;
pub mod elemset;
pub mod error;
pub mod ideal;
pub mod localization;
pub mod mulset;
pub mod ring;
pub mod sprime;
pub mod zint;

pub use cert::{Certificate, SubClaim, Verdict};
pub use elemset::ElemSet;
pub use error::{AlgebraError, Result};
pub use ideal::Ideal;
pub use mulset::{MultiplicativeSet, SaturationForm};

pub use ring::{EffectiveRing, Elem, Element, FiniteRing, RingHom, RingModule, Side};
