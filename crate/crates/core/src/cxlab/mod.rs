//! The ring `Z[X_1, X_2, ..] / (2X_1, 4X_2, .., 2^n X_n, ..)` truncated at a
//! variable index bound, with normal forms and bounded replays of the
//! examples built on it.
//!
//! Membership rule: `Q` is generated by terms, so a polynomial lies in `Q`
//! iff each of its terms does, and `c·M ∈ Q` iff `2^i | c` where `i` is the
//! smallest variable index in `M`: the generators whose monomial divides `M`
//! are `2^j X_j` with `j ≥ i`, and `2^i X_i` is the weakest of them.
//! Constants are never in `Q`. The same argument gives `c·M ∈ 2^m R + Q`
//! iff `2^min(m, i) | c`.

pub mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cert::Certificate;
use crate::error::{AlgebraError, Result};

pub const DEFAULT_INDEX_BOUND: u32 = 16;

/// A monomial as sorted `(variable index, exponent)` pairs; empty is `1`.
pub type Monomial = Vec<(u32, u32)>;

/// Normal form of an element of the truncated quotient ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPolyNF {
    terms: BTreeMap<Monomial, BigInt>,
    bound: u32,
}

fn min_index(m: &Monomial) -> Option<u32> {
    m.first().map(|&(i, _)| i)
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl QPolyNF {
    pub fn zero(bound: u32) -> Self {
        Self { terms: BTreeMap::new(), bound }
    }

    pub fn constant(c: i64, bound: u32) -> Self {
        Self::from_terms([(Vec::new(), BigInt::from(c))], bound).expect("constants need no variables")
    }

    /// The class of `2^n`.
    pub fn power_of_two(n: u32, bound: u32) -> Self {
        Self::from_terms([(Vec::new(), pow2(n))], bound).expect("constants need no variables")
    }

    /// The class of `X_index`.
    pub fn var(index: u32, bound: u32) -> Result<Self> {
        Self::from_terms([(vec![(index, 1)], BigInt::one())], bound)
    }

    /// Normalizes a raw polynomial given as (monomial, coefficient) terms.
    /// Monomials may be unsorted and repeat variables.
    pub fn from_terms(raw: impl IntoIterator<Item = (Monomial, BigInt)>, bound: u32) -> Result<Self> {
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (mono, c) in raw {
            let mut canon: Monomial = Vec::new();
            for &(idx, e) in &mono {
                if idx == 0 || idx > bound {
                    return Err(AlgebraError::IndexOutOfBound { index: idx, bound });
                }
                if e > 0 {
                    canon = mul_monomials(&canon, &vec![(idx, e)]);
                }
            }
            *terms.entry(canon).or_insert_with(BigInt::zero) += c;
        }
        let mut p = Self { terms, bound };
        p.reduce();
        Ok(p)
    }

    fn reduce(&mut self) {
        self.terms.retain(|mono, c| {
            if let Some(i) = min_index(mono) {
                *c = c.mod_floor(&pow2(i));
            }
            !c.is_zero()
        });
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&Vec::new()).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let bound = self.bound.max(other.bound);
        let raw = self.terms.iter().chain(other.terms.iter()).map(|(m, c)| (m.clone(), c.clone()));
        Self::from_terms(raw, bound).expect("operands already respect the bound")
    }

    pub fn neg(&self) -> Self {
        let raw = self.terms.iter().map(|(m, c)| (m.clone(), -c));
        Self::from_terms(raw, self.bound).expect("operand already respects the bound")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.bound.max(other.bound);
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((mul_monomials(ma, mb), ca * cb));
            }
        }
        Self::from_terms(raw, bound).expect("operands already respect the bound")
    }

    /// `m` when this element is `±2^m`.
    pub fn as_signed_power_of_two(&self) -> Option<u32> {
        if self.terms.len() != 1 {
            return None;
        }
        let c = self.terms.get(&Vec::new())?.abs();
        let m = c.trailing_zeros()?;
        (c == pow2(m as u32)).then_some(m as u32)
    }

    /// Whether this element lies in `2^m R`.
    pub fn member_pow2_principal(&self, m: u32) -> Result<bool> {
        if m > self.bound {
            return Err(AlgebraError::IndexOutOfBound { index: m, bound: self.bound });
        }
        Ok(self.terms.iter().all(|(mono, c)| {
            let e = min_index(mono).map_or(m, |i| i.min(m));
            c.is_multiple_of(&pow2(e))
        }))
    }

    /// Parses `2^3*X2 + X1^2 - 5` style input.
    pub fn parse(text: &str, bound: u32) -> Result<Self> {
        let bad = |why: &str| AlgebraError::InvalidElement(format!("polynomial {text:?}: {why}"));
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad("empty"));
        }
        let mut raw = Vec::new();
        let mut rest = cleaned.as_str();
        let mut sign = BigInt::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            if term.is_empty() {
                return Err(bad("missing term"));
            }
            let mut coeff = sign.clone();
            let mut mono: Monomial = Vec::new();
            for factor in term.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                if let Some(idx) = base.strip_prefix('X') {
                    let idx = idx.parse::<u32>().map_err(|_| bad("bad variable"))?;
                    mono.push((idx, exp));
                } else {
                    let v: BigInt = base.parse().map_err(|_| bad("bad factor"))?;
                    coeff *= num_traits::pow(v, exp as usize);
                }
            }
            raw.push((mono, coeff));
            if tail.is_empty() {
                break;
            }
            sign = if tail.starts_with('-') { -BigInt::one() } else { BigInt::one() };
            rest = &tail[1..];
        }
        Self::from_terms(raw, bound)
    }
}

fn render_monomial(m: &Monomial) -> String {
    m.iter()
        .map(|&(i, e)| if e == 1 { format!("X{i}") } else { format!("X{i}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for QPolyNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mono, c)) in self.terms.iter().enumerate() {
            let body = if mono.is_empty() {
                c.abs().to_string()
            } else if c.abs().is_one() {
                render_monomial(mono)
            } else {
                format!("{}*{}", c.abs(), render_monomial(mono))
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// Elements used as bounded evidence for "every nonzero element escapes".
fn nonzero_sample(bound: u32) -> Vec<QPolyNF> {
    let mut out = Vec::new();
    for c in [-64i64, -7, -1, 1, 3, 6, 12, 64, 96] {
        out.push(QPolyNF::constant(c, bound));
    }
    for i in 1..=bound {
        let x = QPolyNF::var(i, bound).expect("index within bound");
        out.push(x.clone());
        if i > 1 {
            out.push(QPolyNF::power_of_two(i - 1, bound).mul(&x));
            out.push(x.mul(&x).add(&QPolyNF::constant(5, bound)));
        }
    }
    out.retain(|p| !p.is_zero());
    out
}

/// Zero is not S-prime for `S = {2^n}`: for the witness `s = 2^n`,
/// `a = 2^(n+2)` and `b = X_(n+2)` have `ab = 0` but `sa, sb ≠ 0`.
pub fn replay_counterexample1(bound: u32) -> Certificate {
    let mut cert = Certificate::new("ex.counterexample1", format!("qpoly {bound}, S = <2>, P = 0"));
    for n in 1..=bound.saturating_sub(2) {
        let s = QPolyNF::power_of_two(n, bound);
        let a = QPolyNF::power_of_two(n + 2, bound);
        let b = QPolyNF::var(n + 2, bound).expect("n + 2 <= bound");
        let ab = a.mul(&b);
        cert.check(format!("(2^{}) * X{} = 0", n + 2, n + 2), ab.is_zero(), vec![a.to_string(), b.to_string(), ab.to_string()]);
        let sa = s.mul(&a);
        cert.check(
            format!("(2^{n}) * (2^{}) = 2^{} != 0", n + 2, 2 * n + 2),
            !sa.is_zero() && sa == QPolyNF::power_of_two(2 * n + 2, bound),
            vec![sa.to_string()],
        );
        let sb = s.mul(&b);
        let expected = QPolyNF::from_terms([(vec![(n + 2, 1)], pow2(n))], bound).expect("index within bound");
        cert.check(format!("(2^{n}) * X{} = 2^{n}*X{} != 0", n + 2, n + 2), !sb.is_zero() && sb == expected, vec![sb.to_string()]);
    }
    cert.note("each fixed witness 2^n is defeated by the pair (2^(n+2), X_(n+2)); the identities are uniform in n");
    cert
}

/// No S-minimal prime exists: such a prime would satisfy `P = 2^n P ⊆ 2^n R`
/// for all n, hence lie in `⋂ 2^n R = 0`, and zero is not S-prime.
pub fn replay_counterexample3(bound: u32) -> Certificate {
    let mut cert = Certificate::new("ex.counterexample3", format!("qpoly {bound}, S = <2>"));
    for k in 0..bound {
        let p = QPolyNF::power_of_two(k, bound);
        let inside = p.member_pow2_principal(k + 1).expect("k + 1 <= bound");
        cert.check(format!("2^{k} not in 2^{} R", k + 1), !inside, vec![p.to_string()]);
    }
    for f in nonzero_sample(bound) {
        let escape = (0..=bound).find(|&m| !f.member_pow2_principal(m).expect("m <= bound"));
        cert.check(
            format!("{f} escapes some 2^n R"),
            escape.is_some(),
            vec![f.to_string(), escape.map_or("none".into(), |m| format!("n = {m}"))],
        );
    }
    let zero_not_s_prime = replay_counterexample1(bound).passed();
    cert.check("0 is not S-prime (counterexample1 identities)", zero_not_s_prime, vec![]);
    cert.note("S fails the maximal multiple condition since 2^k never lies in 2^(k+1) R");
    cert.note("a nonzero normal form c*M with least index i has 0 < c < 2^i, so it leaves 2^i R; a nonzero constant c leaves 2^(v_2(c)+1) R; hence the intersection of all 2^n R is 0");
    cert.note("an S-minimal prime P has sP S-prime and contained in P, so P = sP ⊆ sR for every s, forcing P = 0, which is not S-prime");
    cert
}

/// `S⁻¹(I:J) ≠ (S⁻¹I : S⁻¹J)` for `I = 0`, `J = (X_1, X_2, ..)`.
pub fn replay_colon(bound: u32) -> Certificate {
    let mut cert = Certificate::new("ex.colon", format!("qpoly {bound}, S = <2>, I = 0, J = (X1, X2, ..)"));
    let gens: Vec<QPolyNF> = (1..=bound).map(|i| QPolyNF::var(i, bound).expect("index within bound")).collect();
    for f in nonzero_sample(bound) {
        let killer = gens.iter().position(|x| !f.mul(x).is_zero());
        cert.check(
            format!("{f} is not in (0 : J)"),
            killer.is_some(),
            vec![f.to_string(), killer.map_or("none".into(), |i| format!("X{}", i + 1))],
        );
    }
    for (i, x) in gens.iter().enumerate() {
        let n = i as u32 + 1;
        let s = QPolyNF::power_of_two(n, bound);
        cert.check(format!("2^{n} * X{n} = 0, so X{n}/1 = 0 in S^-1 R"), s.mul(x).is_zero(), vec![s.to_string(), x.to_string()]);
    }
    for n in 0..=bound {
        let s = QPolyNF::power_of_two(n, bound);
        cert.check(format!("2^{n} != 0, so 1/1 != 0 in S^-1 R"), !s.is_zero(), vec![s.to_string()]);
    }
    cert.note("(I:J) = 0 gives S^-1(I:J) = 0, while S^-1 J = 0 gives (S^-1 I : S^-1 J) = S^-1 R, which contains 1/1 != 0");
    cert.note("variables beyond the index bound behave like X_bound: 2^n X_n = 0 and a nonzero term survives multiplication by a large-index variable");
    cert
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: u32 = DEFAULT_INDEX_BOUND;

    fn poly(s: &str) -> QPolyNF {
        QPolyNF::parse(s, N).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert!(poly("4*X2").is_zero());
        assert_eq!(poly("2*X2").to_string(), "2*X2");
        assert_eq!(poly("8").to_string(), "8");
        assert_eq!(poly("-3*X2").to_string(), "X2");
        assert_eq!(poly("-3").to_string(), "-3");
        assert!(poly("X1*X5 + X1*X5").is_zero());
        assert!(matches!(QPolyNF::var(17, N), Err(AlgebraError::IndexOutOfBound { index: 17, bound: 16 })));
    }

    #[test]
    fn product_identities() {
        for n in 1..=N - 2 {
            let x = QPolyNF::var(n + 2, N).unwrap();
            assert!(QPolyNF::power_of_two(n + 2, N).mul(&x).is_zero());
            assert!(!QPolyNF::power_of_two(n, N).mul(&x).is_zero());
        }
    }

    #[test]
    fn pow2_membership_examples() {
        for k in 0..N {
            assert!(!QPolyNF::power_of_two(k, N).member_pow2_principal(k + 1).unwrap());
        }
        // the X2 coefficient of 32g + q is 32a + 4b, never 2
        assert!(!poly("2*X2").member_pow2_principal(5).unwrap());
        assert!(poly("2*X2").member_pow2_principal(1).unwrap());
        assert!(poly("4*X3").member_pow2_principal(2).unwrap());
        assert!(QPolyNF::zero(N).member_pow2_principal(7).unwrap());
        assert!(poly("12").member_pow2_principal(2).unwrap());
        assert!(!poly("12").member_pow2_principal(3).unwrap());
    }

    #[test]
    fn powers_of_two_detection() {
        assert_eq!(poly("-8").as_signed_power_of_two(), Some(3));
        assert_eq!(poly("1").as_signed_power_of_two(), Some(0));
        assert_eq!(poly("6").as_signed_power_of_two(), None);
        assert_eq!(poly("2 + X3").as_signed_power_of_two(), None);
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["0", "-5 + 2*X2 + X1^2*X3", "X16^3", "3*X2*X4"] {
            let p = poly(s);
            assert_eq!(poly(&p.to_string()), p);
        }
    }

    #[test]
    fn replays_pass_at_default_depth() {
        let c1 = replay_counterexample1(N);
        assert!(c1.passed(), "{c1:?}");
        assert_eq!(c1.sub_claims.len(), 3 * (N as usize - 2));
        assert!(replay_counterexample3(N).passed());
        assert!(replay_colon(N).passed());
    }
}
