//! The integers and `Z × Z`: principal ideals, symbolic multiplicative sets,
//! decidable S-prime tests, descending chains `c·kⁿZ`, and localization
//! checks done through contractions.
//!
//! An ideal of `S⁻¹Z` is determined by its contraction to `Z`, and the
//! contraction of `S⁻¹(nZ)` is `nZ` with every prime that `S` can absorb
//! removed from `n`. All the checks below reduce to that arithmetic.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::cert::Certificate;
use crate::error::{AlgebraError, Result};

/// Depth of the bounded evidence attached to symbolic arguments.
pub const EVIDENCE_DEPTH: u32 = 12;

/// Largest magnitude scanned when searching a monoid for a witness.
pub const WITNESS_SEARCH_BOUND: u64 = 1_000_000;

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n != 0 && n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// The ideal `nZ`, with `n ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrincipalIdeal {
    pub n: u64,
}

impl PrincipalIdeal {
    pub fn new(n: i64) -> Self {
        Self { n: n.unsigned_abs() }
    }

    pub fn zero() -> Self {
        Self { n: 0 }
    }

    pub fn whole() -> Self {
        Self { n: 1 }
    }

    pub fn contains(&self, m: i64) -> bool {
        if self.n == 0 {
            m == 0
        } else {
            m.unsigned_abs() % self.n == 0
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        other.n == 1 || (other.n != 0 && self.n % other.n == 0) || self.n == 0
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Self { n: self.n.lcm(&other.n) }
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self { n: self.n.gcd(&other.n) }
    }

    /// `(nZ : mZ) = (n / gcd(n, m))Z`.
    pub fn colon(&self, other: &Self) -> Self {
        let g = self.n.gcd(&other.n);
        if g == 0 {
            Self::whole()
        } else {
            Self { n: self.n / g }
        }
    }

    pub fn colon_elem(&self, s: i64) -> Self {
        self.colon(&Self::new(s))
    }

    /// `0` and `pZ` are the primes of a domain.
    pub fn is_prime(&self) -> bool {
        self.n == 0 || is_prime(self.n)
    }

    pub fn divisors(&self) -> Vec<u64> {
        (1..=self.n).filter(|d| self.n % d == 0).collect()
    }
}

impl fmt::Display for PrincipalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            0 => f.write_str("0"),
            1 => f.write_str("Z"),
            n => write!(f, "{n}Z"),
        }
    }
}

/// A finitely generated multiplicative monoid of nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMonoid {
    pub generators: Vec<i64>,
    /// Whether `-1` is adjoined.
    pub sign_closure: bool,
}

/// A multiplicative subset of `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IntMulSet {
    Monoid(IntMonoid),
    /// `Z ∖ pZ`.
    PrimeComplement { p: u64 },
    /// `Reg(Z) = Z ∖ {0}`.
    NonZero,
}

impl IntMulSet {
    pub fn monoid(generators: &[i64], sign_closure: bool) -> Result<Self> {
        if generators.contains(&0) {
            return Err(AlgebraError::ContainsZero);
        }
        let mut gens: Vec<i64> = generators.iter().copied().filter(|&g| g != 1).collect();
        let sign_closure = sign_closure || gens.contains(&-1);
        gens.retain(|&g| g != -1);
        gens.sort_unstable();
        gens.dedup();
        Ok(Self::Monoid(IntMonoid { generators: gens, sign_closure }))
    }

    /// `{1, -1}`.
    pub fn units() -> Self {
        Self::Monoid(IntMonoid { generators: Vec::new(), sign_closure: true })
    }

    pub fn prime_complement(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self::PrimeComplement { p })
        } else {
            Err(AlgebraError::NotPrime)
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Self::Monoid(m) => {
                let mut parts: Vec<String> = m.generators.iter().map(i64::to_string).collect();
                if m.sign_closure {
                    parts.insert(0, "-1".into());
                }
                format!("<{}>", parts.join(", "))
            }
            Self::PrimeComplement { p } => format!("Z \\ {p}Z"),
            Self::NonZero => "Reg(Z)".into(),
        }
    }

    pub fn contains(&self, m: i64) -> bool {
        match self {
            Self::Monoid(mon) => monoid_contains(mon, m),
            Self::PrimeComplement { p } => m.unsigned_abs() % p != 0,
            Self::NonZero => m != 0,
        }
    }

    /// Whether the prime `p` becomes a unit after localizing.
    pub fn absorbs(&self, p: u64) -> bool {
        match self {
            Self::Monoid(mon) => mon.generators.iter().any(|g| g.unsigned_abs() % p == 0),
            Self::PrimeComplement { p: q } => p != *q,
            Self::NonZero => true,
        }
    }

    /// Members with `|s| ≤ bound`, sorted by magnitude, positive first.
    pub fn elements_up_to(&self, bound: u64) -> Vec<i64> {
        let bound = bound.min(i64::MAX as u64) as i64;
        let mut out: Vec<i64> = match self {
            Self::Monoid(mon) => {
                let mut seen = BTreeSet::from([1i64]);
                let mut frontier = vec![1i64];
                while let Some(x) = frontier.pop() {
                    for &g in &mon.generators {
                        if let Some(y) = x.checked_mul(g).filter(|y| y.abs() <= bound) {
                            if seen.insert(y) {
                                frontier.push(y);
                            }
                        }
                    }
                }
                if mon.sign_closure {
                    let neg: Vec<i64> = seen.iter().map(|x| -x).collect();
                    seen.extend(neg);
                }
                seen.into_iter().collect()
            }
            _ => (-bound..=bound).filter(|&m| self.contains(m)).collect(),
        };
        out.sort_by_key(|&x| (x.unsigned_abs(), x < 0));
        out
    }

    /// A member that is not a unit, if any.
    pub fn nonunit_member(&self) -> Option<i64> {
        match self {
            Self::Monoid(mon) => mon.generators.first().copied(),
            Self::PrimeComplement { p } => Some(if *p == 2 { 3 } else { 2 }),
            Self::NonZero => Some(2),
        }
    }

    /// Strongly multiplicative iff the set lies in `{1, -1}`: a nonunit `g`
    /// in `S` forces `⋂ gᵏZ = 0`, which misses `S`, and no `t` is divisible
    /// by every `gᵏ`. Returns the verdict and the derivation.
    pub fn strongly_multiplicative(&self) -> (bool, String) {
        match self.nonunit_member() {
            None => (true, "S lies in {1, -1}, the units of Z".into()),
            Some(g) => (
                false,
                format!("{g} in S is a nonunit; the meet of {g}^k Z is 0, which misses S, and no t is a multiple of every {g}^k"),
            ),
        }
    }

    /// The generator of `S⁻¹(nZ) ∩ Z`.
    pub fn contraction(&self, n: &PrincipalIdeal) -> PrincipalIdeal {
        if n.n == 0 {
            return PrincipalIdeal::zero();
        }
        let kept = prime_factors(n.n)
            .into_iter()
            .filter(|&p| !self.absorbs(p))
            .map(|p| p.pow(valuation(n.n, p)))
            .product();
        PrincipalIdeal { n: kept }
    }

    pub fn meets(&self, n: &PrincipalIdeal) -> bool {
        self.contraction(n).n == 1
    }

    /// `a/b ∈ S⁻¹(nZ)`, i.e. `n | sa` for some `s ∈ S`.
    pub fn localized_contains(&self, n: &PrincipalIdeal, a: i64, b: i64) -> Result<bool> {
        if !self.contains(b) {
            return Err(AlgebraError::InvalidElement(format!("denominator {b} is not in {}", self.describe())));
        }
        Ok(self.contraction(n).contains(a))
    }
}

fn monoid_contains(mon: &IntMonoid, m: i64) -> bool {
    if m == 0 {
        return false;
    }
    // (remaining magnitude, needs a sign flip) -> reachable
    fn go(gens: &[i64], rest: u64, negative: bool, signs: bool, memo: &mut HashMap<(u64, bool), bool>) -> bool {
        if rest == 1 {
            return !negative || signs;
        }
        if let Some(&v) = memo.get(&(rest, negative)) {
            return v;
        }
        let v = gens.iter().any(|&g| {
            let a = g.unsigned_abs();
            rest % a == 0 && go(gens, rest / a, negative ^ (g < 0), signs, memo)
        });
        memo.insert((rest, negative), v);
        v
    }
    go(&mon.generators, m.unsigned_abs(), m < 0, mon.sign_closure, &mut HashMap::new())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZWitness {
    pub s: i64,
    pub colon: PrincipalIdeal,
}

/// Whether `nZ` is S-prime, via `(nZ : s) = (n / gcd(n, s))Z` being prime.
/// Only `gcd(n, s)` matters, so the search runs over divisors `d` of `n`
/// in increasing order and returns the smallest `s` realizing the first
/// class that works.
pub fn is_s_prime_z(n: &PrincipalIdeal, s: &IntMulSet) -> Result<Option<ZWitness>> {
    if s.meets(n) {
        return Err(AlgebraError::NotDisjoint);
    }
    if n.n == 0 {
        return Ok(Some(ZWitness { s: 1, colon: *n }));
    }
    for d in n.divisors() {
        let colon = PrincipalIdeal { n: n.n / d };
        if !colon.is_prime() {
            continue;
        }
        if let Some(x) = class_representative(n, d, s) {
            return Ok(Some(ZWitness { s: x, colon }));
        }
    }
    Ok(None)
}

/// The smallest `s ∈ S` with `gcd(n, s) = d`.
fn class_representative(n: &PrincipalIdeal, d: u64, s: &IntMulSet) -> Option<i64> {
    match s {
        // d itself works whenever it is allowed
        IntMulSet::PrimeComplement { .. } | IntMulSet::NonZero => s.contains(d as i64).then_some(d as i64),
        IntMulSet::Monoid(_) => {
            let bound = n.n.saturating_mul(n.n).clamp(2, WITNESS_SEARCH_BOUND);
            s.elements_up_to(bound).into_iter().find(|x| x.unsigned_abs().gcd(&n.n) == d)
        }
    }
}

/// Prime ideals of `Z` are never strongly prime: the complement always holds
/// a nonunit.
pub fn is_strongly_prime_z(p: &PrincipalIdeal) -> Result<bool> {
    if !p.is_prime() {
        return Err(AlgebraError::NotPrime);
    }
    let complement = if p.n == 0 { IntMulSet::NonZero } else { IntMulSet::PrimeComplement { p: p.n } };
    Ok(complement.strongly_multiplicative().0)
}

/// The family `{c·kⁿZ : n ≥ 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParametricChain {
    pub c: u64,
    pub k: i64,
}

impl ParametricChain {
    pub fn new(c: u64, k: i64) -> Result<Self> {
        if k.unsigned_abs() <= 1 || c == 0 {
            Err(AlgebraError::DegenerateChain)
        } else {
            Ok(Self { c, k })
        }
    }

    /// `Iₙ`, or `None` once the generator overflows.
    pub fn member(&self, n: u32) -> Option<PrincipalIdeal> {
        self.k.unsigned_abs().checked_pow(n).and_then(|p| p.checked_mul(self.c)).map(|n| PrincipalIdeal { n })
    }
}

impl fmt::Display for ParametricChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*({})^n Z", self.c, self.k)
    }
}

/// The meet of the chain. Generators `c·|k|ⁿ` are unbounded, so any common
/// multiple is 0.
pub fn chain_intersection(ch: &ParametricChain) -> Result<PrincipalIdeal> {
    ParametricChain::new(ch.c, ch.k)?;
    Ok(PrincipalIdeal::zero())
}

/// Bounded evidence for [`chain_intersection`]: `c·kⁿ ∉ c·kⁿ⁺¹Z`.
pub fn chain_evidence(ch: &ParametricChain) -> Result<Certificate> {
    let meet = chain_intersection(ch)?;
    let mut cert = Certificate::new("zint.chain-intersection", ch.to_string());
    for n in 0..=EVIDENCE_DEPTH {
        let (Some(a), Some(b)) = (ch.member(n), ch.member(n + 1)) else {
            cert.note(format!("stopped at n = {n}: generator overflows u64"));
            break;
        };
        cert.check(format!("{} not in {b}", a.n), !b.contains(a.n as i64), vec![a.to_string(), b.to_string()]);
    }
    cert.note(format!("generators are unbounded, so the only common multiple is 0: meet = {meet}"));
    Ok(cert)
}

/// A family of ideals of `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntFamily {
    Finite(Vec<PrincipalIdeal>),
    Chain(ParametricChain),
    /// `{pZ : p prime}`.
    AllPrimes,
}

impl IntFamily {
    pub fn describe(&self) -> String {
        match self {
            Self::Finite(v) => format!("{{{}}}", v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")),
            Self::Chain(ch) => format!("{{{ch}}}"),
            Self::AllPrimes => "{pZ : p prime}".into(),
        }
    }
}

/// `S⁻¹(⋂ Jᵢ)` against `⋂ S⁻¹Jᵢ`, both represented by their contractions.
pub fn check_intersection_commutes_z(s: &IntMulSet, family: &IntFamily) -> Result<Certificate> {
    let mut cert = Certificate::new("thm.localization-intersection", format!("Z | {} | {}", s.describe(), family.describe()));
    let (lhs, rhs, how) = match family {
        IntFamily::Finite(v) => {
            let meet = v.iter().fold(PrincipalIdeal::whole(), |acc, i| acc.intersect(i));
            let rhs = v.iter().fold(PrincipalIdeal::whole(), |acc, i| acc.intersect(&s.contraction(i)));
            (s.contraction(&meet), rhs, format!("meet = {meet}"))
        }
        IntFamily::Chain(ch) => {
            let meet = chain_intersection(ch)?;
            let k = ch.k.unsigned_abs();
            // the contractions grow without bound iff S leaves a prime of k alone
            let rhs = if prime_factors(k).iter().any(|&p| !s.absorbs(p)) {
                PrincipalIdeal::zero()
            } else {
                s.contraction(&PrincipalIdeal { n: ch.c })
            };
            for n in 0..=3 {
                if let Some(m) = ch.member(n) {
                    cert.note(format!("contraction of S^-1({m}) = {}", s.contraction(&m)));
                }
            }
            (s.contraction(&meet), rhs, format!("meet = {meet}"))
        }
        IntFamily::AllPrimes => {
            // infinitely many primes survive unless S absorbs all but finitely many
            let rhs = match s {
                IntMulSet::Monoid(_) => PrincipalIdeal::zero(),
                IntMulSet::PrimeComplement { p } => PrincipalIdeal { n: *p },
                IntMulSet::NonZero => PrincipalIdeal::whole(),
            };
            for p in [2u64, 3, 5, 7, 11, 13] {
                cert.note(format!("contraction of S^-1({p}Z) = {}", s.contraction(&PrincipalIdeal { n: p })));
            }
            (PrincipalIdeal::zero(), rhs, "meet = 0".into())
        }
    };
    cert.note(how);
    let witness = if lhs == rhs { vec![] } else { vec![format!("{}/1", rhs.n), format!("lhs = S^-1({lhs}), rhs = S^-1({rhs})")] };
    cert.check("S^-1 of the meet equals the meet of the S^-1", lhs == rhs, witness);
    Ok(cert)
}

/// The ideal `aZ × bZ` of `Z × Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairIdeal {
    pub a: PrincipalIdeal,
    pub b: PrincipalIdeal,
}

impl PairIdeal {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a: PrincipalIdeal::new(a), b: PrincipalIdeal::new(b) }
    }

    pub fn contains(&self, x: (i64, i64)) -> bool {
        self.a.contains(x.0) && self.b.contains(x.1)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.a.is_subset(&other.a) && self.b.is_subset(&other.b)
    }

    /// Primes of `Z × Z` are `P × Z` and `Z × P` with `P` prime.
    pub fn is_prime(&self) -> bool {
        (self.a.is_prime() && self.b.n == 1) || (self.a.n == 1 && self.b.is_prime())
    }

    pub fn colon_elem(&self, s: (i64, i64)) -> Self {
        Self { a: self.a.colon_elem(s.0), b: self.b.colon_elem(s.1) }
    }
}

impl fmt::Display for PairIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", self.a, self.b)
    }
}

/// A product `S₁ × S₂` of multiplicative sets of `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairMulSet {
    pub left: IntMulSet,
    pub right: IntMulSet,
}

impl PairMulSet {
    /// `Reg(Z) × {1}`.
    pub fn reg_times_one() -> Self {
        Self {
            left: IntMulSet::NonZero,
            right: IntMulSet::Monoid(IntMonoid { generators: Vec::new(), sign_closure: false }),
        }
    }

    pub fn describe(&self) -> String {
        format!("{} x {}", self.left.describe(), self.right.describe())
    }

    pub fn contains(&self, x: (i64, i64)) -> bool {
        self.left.contains(x.0) && self.right.contains(x.1)
    }

    pub fn meets(&self, p: &PairIdeal) -> bool {
        self.left.meets(&p.a) && self.right.meets(&p.b)
    }
}

/// Smallest-magnitude witnesses for each achievable colon `(nZ : s)`.
fn colon_classes(n: &PrincipalIdeal, s: &IntMulSet) -> Vec<(i64, PrincipalIdeal)> {
    if n.n == 0 {
        return vec![(1, *n)];
    }
    n.divisors()
        .into_iter()
        .filter_map(|d| class_representative(n, d, s).map(|x| (x, PrincipalIdeal { n: n.n / d })))
        .collect()
}

/// Whether `aZ × bZ` is S-prime for `S = S₁ × S₂`.
pub fn is_s_prime_zz(p: &PairIdeal, s: &PairMulSet) -> Result<Option<(i64, i64)>> {
    if s.meets(p) {
        return Err(AlgebraError::NotDisjoint);
    }
    let left = colon_classes(&p.a, &s.left);
    let right = colon_classes(&p.b, &s.right);
    let mut found: Vec<(i64, i64)> = Vec::new();
    for (x, ca) in &left {
        for (y, cb) in &right {
            if (PairIdeal { a: *ca, b: *cb }).is_prime() {
                found.push((*x, *y));
            }
        }
    }
    Ok(found.into_iter().min_by_key(|&(x, y)| (x.unsigned_abs() + y.unsigned_abs(), x.unsigned_abs(), x < 0, y < 0)))
}

/// S-prime ideals of `Z × Z` for `Reg(Z) × {1}` among the classified forms
/// `0 × Z`, `nZ × 0`, `nZ × pZ` with `1 ≤ n ≤ bound`, `p ≤ bound` prime.
pub fn classified_s_primes(bound: u64) -> Vec<PairIdeal> {
    let mut out = vec![PairIdeal::new(0, 1)];
    for n in 1..=bound as i64 {
        out.push(PairIdeal::new(n, 0));
        for p in (2..=bound as i64).filter(|&p| is_prime(p as u64)) {
            out.push(PairIdeal::new(n, p));
        }
    }
    out
}

/// `depth` bounds the evidence: powers checked up to `depth`, `I_n` for `n ≤ depth - 2`.
pub fn replay_counterexample2(depth: u32) -> Certificate {
    let s = IntMulSet::PrimeComplement { p: 2 };
    let mut cert = Certificate::new("ex.counterexample2", format!("Z | {}", s.describe()));
    let (sm, why) = s.strongly_multiplicative();
    let g = s.nonunit_member().expect("3 is in S");
    let bounded = (0..depth).all(|k| {
        let gk = g.pow(k);
        !PrincipalIdeal::new(gk * g).contains(gk)
    });
    cert.check(
        "S fails both strongly-multiplicative tests",
        !sm && bounded && is_strongly_prime_z(&PrincipalIdeal { n: 2 }) == Ok(false),
        vec![why, format!("{g}^k not in {g}^(k+1)Z for k < {depth}")],
    );
    for n in 1..=depth.saturating_sub(2) {
        let i_n = PrincipalIdeal { n: 2 * 3u64.pow(n) };
        let w = is_s_prime_z(&i_n, &s);
        let expected = 3i64.pow(n);
        let ok = matches!(w, Ok(Some(ZWitness { s: x, colon })) if x == expected && colon.n == 2);
        cert.check(
            format!("I_{n} = {i_n} is S-prime via (I_{n} : 3^{n}) = 2Z"),
            ok,
            vec![match &w {
                Ok(Some(z)) => format!("s = {}, (I_{n} : s) = {}", z.s, z.colon),
                Ok(None) => "not S-prime".into(),
                Err(e) => e.to_string(),
            }],
        );
    }
    let ch = ParametricChain { c: 2, k: 3 };
    let meet = chain_intersection(&ch);
    let ok = meet == Ok(PrincipalIdeal::zero())
        && chain_evidence(&ch).map(|c| c.passed()).unwrap_or(false)
        && matches!(is_s_prime_z(&PrincipalIdeal::zero(), &s), Ok(Some(_)));
    let shown = meet.as_ref().map(ToString::to_string).unwrap_or_else(ToString::to_string);
    cert.check("meet of I_n is 0, and 0 is S-prime", ok, vec![format!("meet = {shown}")]);
    cert
}

pub fn replay_counterexample4(depth: u32) -> Certificate {
    let s = PairMulSet::reg_times_one();
    let mut cert = Certificate::new("ex.counterexample4", format!("Z x Z | {}", s.describe()));
    let b = depth as i64;

    // meet of (x,1)R over 1 <= |x| <= b is lcm(1..b)Z x Z
    let bounded_meet = (1..=b).fold(PrincipalIdeal::whole(), |acc, x| acc.intersect(&PrincipalIdeal::new(x)));
    let misses = (1..=b).all(|x| !bounded_meet.contains(x) && !bounded_meet.contains(-x));
    cert.check(
        "meet of (x,1)R misses S",
        misses,
        vec![format!("bounded meet = {bounded_meet} x Z"), "lcm of all nonzero x is unbounded, so the meet is 0 x Z = (0,1)R".into()],
    );
    let zero_x_z = PairIdeal::new(0, 1);
    cert.check("(0,1)R = 0 x Z is disjoint from S", !s.meets(&zero_x_z), vec![zero_x_z.to_string()]);

    let zero = PairIdeal::new(0, 0);
    let pair_ok = zero.contains((0, 0))
        && (-b..=b).filter(|&x| x != 0).all(|x| !zero.contains((x, 0)) && !zero.contains((0, 1)));
    cert.check(
        "{0} is not S-prime: (1,0)(0,1) = (0,0)",
        pair_ok && matches!(is_s_prime_zz(&zero, &s), Ok(None)),
        vec!["(1,0)".into(), "(0,1)".into(), "(x,1)(1,0) = (x,0), (x,1)(0,1) = (0,1)".into()],
    );
    let w = is_s_prime_zz(&zero_x_z, &s);
    let shown = match &w {
        Ok(Some((x, y))) => format!("s = ({x},{y})"),
        Ok(None) => "not S-prime".into(),
        Err(e) => e.to_string(),
    };
    cert.check("0 x Z is S-prime with s = (1,1)", w == Ok(Some((1, 1))), vec![shown]);

    // every disjoint aZ x bZ in range is S-prime exactly when it is a classified form
    let bound = 8u64;
    let forms: BTreeSet<PairIdeal> = classified_s_primes(bound).into_iter().collect();
    let mut mismatches = Vec::new();
    for a in 0..=bound as i64 {
        for bb in 0..=bound as i64 {
            let p = PairIdeal::new(a, bb);
            if s.meets(&p) {
                continue;
            }
            let sp = matches!(is_s_prime_zz(&p, &s), Ok(Some(_)));
            if sp != forms.contains(&p) {
                mismatches.push(p.to_string());
            }
        }
    }
    cert.check("S-prime ideals are 0 x Z, nZ x 0, nZ x pZ", mismatches.is_empty(), mismatches);

    // nZ x pZ contains nZ x 0, which contains 2nZ x 0; 0 x Z contains no other form
    let mut descend = true;
    for n in 1..=bound as i64 {
        let below = PairIdeal::new(2 * n, 0);
        descend &= matches!(is_s_prime_zz(&below, &s), Ok(Some(_)))
            && below.is_subset(&PairIdeal::new(n, 0))
            && below != PairIdeal::new(n, 0);
    }
    let minimal = !forms.iter().any(|q| *q != zero_x_z && q.is_subset(&zero_x_z))
        && (0..=bound as i64).filter(|&m| m != 1).all(|m| !matches!(is_s_prime_zz(&PairIdeal::new(0, m), &s), Ok(Some(_))));
    cert.check("0 x Z is the unique S-minimal prime", descend && minimal, vec![zero_x_z.to_string()]);
    cert
}
