//! Finite commutative rings built from constructor trees.
//!
//! Elements are canonical indices `0..size`. Index 0 is always zero. The
//! index order is the lexicographic order induced by the constructor tree, so
//! equality of elements is equality of indices.

mod effective;
mod hom;
mod module;

pub use effective::{EffectiveRing, Element};
pub use hom::RingHom;
pub use module::{ModuleKind, RingModule};

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::elemset::ElemSet;
use crate::error::{AlgebraError, Result};

/// Canonical index of a finite-ring element.
pub type Elem = usize;

/// Rings up to this size get memoized operation tables.
pub const TABLE_LIMIT: usize = 64;

/// A literal element as written by a user: integers, tuples and coset brackets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElemValue {
    Int(i64),
    Tuple(Vec<ElemValue>),
    Class(Box<ElemValue>),
}

impl fmt::Display for ElemValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemValue::Int(n) => write!(f, "{n}"),
            ElemValue::Tuple(items) => {
                write!(f, "(")?;
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{it}")?;
                }
                write!(f, ")")
            }
            ElemValue::Class(inner) => write!(f, "[{inner}]"),
        }
    }
}

#[derive(Debug)]
pub(crate) struct QuotientData {
    pub base: Arc<FiniteRing>,
    pub ideal: ElemSet,
    pub ideal_gens: Vec<Elem>,
    /// Smallest member of each coset, ascending.
    pub reps: Vec<Elem>,
    /// Base element -> coset index.
    pub class_of: Vec<Elem>,
}

#[derive(Debug)]
pub(crate) struct AmalgamData {
    pub a: Arc<FiniteRing>,
    pub b: Arc<FiniteRing>,
    pub map: RingHom,
    pub ideal: ElemSet,
    pub ideal_gens: Vec<Elem>,
    pub carrier: Vec<(Elem, Elem)>,
    /// `a * |B| + b` -> carrier index.
    pub lookup: Vec<Option<u32>>,
}

#[derive(Debug)]
pub(crate) enum RingKind {
    Zn(u64),
    /// The Boolean ring Z_2^k; bit `k-1-i` of the index is coordinate `i`.
    Boolean(u32),
    Product(Arc<FiniteRing>, Arc<FiniteRing>),
    Quotient(QuotientData),
    TrivExt(Arc<RingModule>),
    Amalgam(AmalgamData),
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

#[derive(Debug, Default)]
pub(crate) struct Caches {
    pub principal: OnceLock<Vec<ElemSet>>,
    /// Ideal lattice as (elements, generators), sorted.
    pub ideals: OnceLock<Vec<(ElemSet, Vec<Elem>)>>,
    pub units: OnceLock<ElemSet>,
}

/// A finite commutative ring with identity `1 != 0`.
#[derive(Debug)]
pub struct FiniteRing {
    pub(crate) kind: RingKind,
    size: usize,
    one: Elem,
    tables: OnceLock<Tables>,
    pub(crate) caches: Caches,
}

/// Which factor of a product a statement refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl FiniteRing {
    fn build(kind: RingKind, size: usize) -> Result<Arc<Self>> {
        let mut ring = FiniteRing { kind, size, one: 0, tables: OnceLock::new(), caches: Caches::default() };
        ring.one = ring.compute_one();
        if ring.one == 0 {
            return Err(AlgebraError::NotApplicable("the zero ring is excluded (1 = 0)".into()));
        }
        Ok(Arc::new(ring))
    }

    /// The integers modulo `n`, `n >= 2`.
    pub fn zn(n: u64) -> Result<Arc<Self>> {
        if n < 2 {
            return Err(AlgebraError::NotApplicable(format!("Zn needs n >= 2, got {n}")));
        }
        let size = usize::try_from(n).map_err(|_| AlgebraError::TooLarge { size: usize::MAX, bound: usize::MAX })?;
        Self::build(RingKind::Zn(n), size)
    }

    /// The Boolean ring of `k` coordinates, realized as Z_2^k.
    pub fn boolean(k: u32) -> Result<Arc<Self>> {
        if k == 0 || k > 20 {
            return Err(AlgebraError::NotApplicable(format!("bool needs 1 <= k <= 20, got {k}")));
        }
        Self::build(RingKind::Boolean(k), 1usize << k)
    }

    pub fn product(left: Arc<Self>, right: Arc<Self>) -> Result<Arc<Self>> {
        let size = left.size.checked_mul(right.size).ok_or(AlgebraError::TooLarge { size: usize::MAX, bound: usize::MAX })?;
        Self::build(RingKind::Product(left, right), size)
    }

    /// `R / I` where `I` is the ideal generated by `gens`.
    pub fn quotient(base: Arc<Self>, gens: &[Elem]) -> Result<Arc<Self>> {
        let ideal = crate::ideal::span_set(&base, gens)?;
        Self::quotient_by_set(base, ideal, gens.to_vec())
    }

    pub(crate) fn quotient_by_set(base: Arc<Self>, ideal: ElemSet, ideal_gens: Vec<Elem>) -> Result<Arc<Self>> {
        if ideal.contains(base.one()) {
            return Err(AlgebraError::NotApplicable("quotient by the whole ring is the zero ring".into()));
        }
        let n = base.size();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for i in ideal.iter() {
                class_of[base.add(x, i)] = c;
            }
        }
        let size = reps.len();
        Self::build(RingKind::Quotient(QuotientData { base, ideal, ideal_gens, reps, class_of }), size)
    }

    /// The trivial extension `R ⋉ M` with `(a,m)(b,n) = (ab, an + bm)`.
    pub fn trivial_extension(module: Arc<RingModule>) -> Result<Arc<Self>> {
        let size = module.ring().size() * module.size();
        Self::build(RingKind::TrivExt(module), size)
    }

    /// The amalgamation `{(a, f(a) + j)} ⊆ A × B` along the ideal `J` of `B`
    /// generated by `ideal_gens`.
    pub fn amalgamation(map: RingHom, ideal_gens: &[Elem]) -> Result<Arc<Self>> {
        let a = map.source().clone();
        let b = map.target().clone();
        let ideal = crate::ideal::span_set(&b, ideal_gens)?;
        let mut carrier: Vec<(Elem, Elem)> = Vec::with_capacity(a.size() * ideal.len());
        for x in a.elements() {
            for j in ideal.iter() {
                carrier.push((x, b.add(map.apply(x), j)));
            }
        }
        carrier.sort_unstable();
        carrier.dedup();
        let mut lookup = vec![None; a.size() * b.size()];
        for (i, &(x, y)) in carrier.iter().enumerate() {
            lookup[x * b.size() + y] = Some(i as u32);
        }
        let size = carrier.len();
        Self::build(
            RingKind::Amalgam(AmalgamData { a, b, map, ideal, ideal_gens: ideal_gens.to_vec(), carrier, lookup }),
            size,
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    /// Factors when this ring was built as a product.
    pub fn factors(&self) -> Option<(&Arc<FiniteRing>, &Arc<FiniteRing>)> {
        match &self.kind {
            RingKind::Product(l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// Index of the pair `(a, b)` in a product ring.
    pub fn pair(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            RingKind::Product(_, r) => a * r.size + b,
            _ => panic!("pair() on a non-product ring"),
        }
    }

    /// Components of an element of a product ring.
    pub fn split(&self, x: Elem) -> (Elem, Elem) {
        match &self.kind {
            RingKind::Product(_, r) => (x / r.size, x % r.size),
            _ => panic!("split() on a non-product ring"),
        }
    }

    pub fn trivext_module(&self) -> Option<&Arc<RingModule>> {
        match &self.kind {
            RingKind::TrivExt(m) => Some(m),
            _ => None,
        }
    }

    /// `(r, m)` in a trivial extension.
    pub fn trivext_pair(&self, r: Elem, m: usize) -> Elem {
        match &self.kind {
            RingKind::TrivExt(md) => r * md.size() + m,
            _ => panic!("trivext_pair() on a non-trivial-extension ring"),
        }
    }

    pub fn trivext_split(&self, x: Elem) -> (Elem, usize) {
        match &self.kind {
            RingKind::TrivExt(md) => (x / md.size(), x % md.size()),
            _ => panic!("trivext_split() on a non-trivial-extension ring"),
        }
    }

    /// The homomorphism and ideal this ring was amalgamated along.
    pub fn amalgam_parts(&self) -> Option<(&RingHom, &ElemSet)> {
        match &self.kind {
            RingKind::Amalgam(d) => Some((&d.map, &d.ideal)),
            _ => None,
        }
    }

    /// Carrier index of `(a, b)` in an amalgamation, if the pair belongs to it.
    pub fn amalgam_index(&self, a: Elem, b: Elem) -> Option<Elem> {
        match &self.kind {
            RingKind::Amalgam(d) => d.lookup[a * d.b.size + b].map(|i| i as usize),
            _ => None,
        }
    }

    pub fn amalgam_pair(&self, x: Elem) -> (Elem, Elem) {
        match &self.kind {
            RingKind::Amalgam(d) => d.carrier[x],
            _ => panic!("amalgam_pair() on a non-amalgamated ring"),
        }
    }

    /// Base ring and class map when this ring is a quotient.
    pub fn quotient_parts(&self) -> Option<(&Arc<FiniteRing>, &ElemSet)> {
        match &self.kind {
            RingKind::Quotient(q) => Some((&q.base, &q.ideal)),
            _ => None,
        }
    }

    /// Coset of a base element in a quotient ring.
    pub fn class_of(&self, base_elem: Elem) -> Elem {
        match &self.kind {
            RingKind::Quotient(q) => q.class_of[base_elem],
            _ => panic!("class_of() on a non-quotient ring"),
        }
    }

    /// Smallest base representative of a coset.
    pub fn representative(&self, x: Elem) -> Elem {
        match &self.kind {
            RingKind::Quotient(q) => q.reps[x],
            _ => panic!("representative() on a non-quotient ring"),
        }
    }

    fn compute_one(&self) -> Elem {
        match &self.kind {
            RingKind::Zn(_) => 1,
            RingKind::Boolean(_) => self.size - 1,
            RingKind::Product(l, r) => l.one * r.size + r.one,
            RingKind::Quotient(q) => q.class_of[q.base.one],
            RingKind::TrivExt(m) => m.ring().one() * m.size(),
            RingKind::Amalgam(d) => d.lookup[d.a.one * d.b.size + d.b.one].map_or(0, |i| i as usize),
        }
    }

    fn tables(&self) -> Option<&Tables> {
        if self.size > TABLE_LIMIT {
            return None;
        }
        Some(self.tables.get_or_init(|| {
            let n = self.size;
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    add.push(self.add_raw(a, b) as u32);
                    mul.push(self.mul_raw(a, b) as u32);
                }
            }
            let neg = (0..n).map(|a| self.neg_raw(a) as u32).collect();
            Tables { add, mul, neg }
        }))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match self.tables() {
            Some(t) => t.add[a * self.size + b] as Elem,
            None => self.add_raw(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self.tables() {
            Some(t) => t.mul[a * self.size + b] as Elem,
            None => self.mul_raw(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match self.tables() {
            Some(t) => t.neg[a] as Elem,
            None => self.neg_raw(a),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    fn add_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            RingKind::Zn(n) => ((a as u64 + b as u64) % n) as Elem,
            RingKind::Boolean(_) => a ^ b,
            RingKind::Product(l, r) => {
                let (a1, a2) = (a / r.size, a % r.size);
                let (b1, b2) = (b / r.size, b % r.size);
                l.add(a1, b1) * r.size + r.add(a2, b2)
            }
            RingKind::Quotient(q) => q.class_of[q.base.add(q.reps[a], q.reps[b])],
            RingKind::TrivExt(m) => {
                let ms = m.size();
                let (r1, m1) = (a / ms, a % ms);
                let (r2, m2) = (b / ms, b % ms);
                m.ring().add(r1, r2) * ms + m.add(m1, m2)
            }
            RingKind::Amalgam(d) => {
                let (a1, a2) = d.carrier[a];
                let (b1, b2) = d.carrier[b];
                let (x, y) = (d.a.add(a1, b1), d.b.add(a2, b2));
                d.lookup[x * d.b.size + y].expect("amalgamation closed under +") as Elem
            }
        }
    }

    fn mul_raw(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            RingKind::Zn(n) => ((a as u128 * b as u128) % *n as u128) as Elem,
            RingKind::Boolean(_) => a & b,
            RingKind::Product(l, r) => {
                let (a1, a2) = (a / r.size, a % r.size);
                let (b1, b2) = (b / r.size, b % r.size);
                l.mul(a1, b1) * r.size + r.mul(a2, b2)
            }
            RingKind::Quotient(q) => q.class_of[q.base.mul(q.reps[a], q.reps[b])],
            RingKind::TrivExt(m) => {
                let ms = m.size();
                let ring = m.ring();
                let (r1, m1) = (a / ms, a % ms);
                let (r2, m2) = (b / ms, b % ms);
                ring.mul(r1, r2) * ms + m.add(m.smul(r1, m2), m.smul(r2, m1))
            }
            RingKind::Amalgam(d) => {
                let (a1, a2) = d.carrier[a];
                let (b1, b2) = d.carrier[b];
                let (x, y) = (d.a.mul(a1, b1), d.b.mul(a2, b2));
                d.lookup[x * d.b.size + y].expect("amalgamation closed under *") as Elem
            }
        }
    }

    fn neg_raw(&self, a: Elem) -> Elem {
        match &self.kind {
            RingKind::Zn(n) => ((n - a as u64) % n) as Elem,
            RingKind::Boolean(_) => a,
            RingKind::Product(l, r) => l.neg(a / r.size) * r.size + r.neg(a % r.size),
            RingKind::Quotient(q) => q.class_of[q.base.neg(q.reps[a])],
            RingKind::TrivExt(m) => {
                let ms = m.size();
                m.ring().neg(a / ms) * ms + m.neg(a % ms)
            }
            RingKind::Amalgam(d) => {
                let (x, y) = d.carrier[a];
                d.lookup[d.a.neg(x) * d.b.size + d.b.neg(y)].expect("amalgamation closed under -") as Elem
            }
        }
    }

    /// `aR` for every `a`, memoized.
    pub fn principal_ideals(&self) -> &[ElemSet] {
        self.caches.principal.get_or_init(|| {
            self.elements()
                .map(|a| ElemSet::from_iter_in(self.size, self.elements().map(|r| self.mul(a, r))))
                .collect()
        })
    }

    /// The principal ideal `aR`.
    pub fn principal(&self, a: Elem) -> &ElemSet {
        &self.principal_ideals()[a]
    }

    /// `a | b`, i.e. `b ∈ aR`.
    pub fn divides(&self, a: Elem, b: Elem) -> bool {
        self.principal(a).contains(b)
    }

    /// The group of units `u(R)`.
    pub fn units(&self) -> &ElemSet {
        self.caches.units.get_or_init(|| {
            ElemSet::from_iter_in(self.size, self.elements().filter(|&a| self.principal(a).contains(self.one)))
        })
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.units().contains(a)
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.elements().find(|&b| self.mul(a, b) == self.one)
    }

    pub fn idempotents(&self) -> ElemSet {
        ElemSet::from_iter_in(self.size, self.elements().filter(|&e| self.mul(e, e) == e))
    }

    /// The idempotent `e` with `Re = Rt`: the power `t^k` with `t^k = t^(2k)`.
    pub fn idempotent_of(&self, t: Elem) -> Result<Elem> {
        if self.principal(t) != self.principal(self.mul(t, t)) {
            return Err(AlgebraError::NoIdempotent);
        }
        // t^k is idempotent once k passes the preperiod and is a multiple of
        // the period; both are bounded by |R|.
        let mut p = t;
        for _ in 0..=self.size {
            if self.mul(p, p) == p {
                return Ok(p);
            }
            p = self.mul(p, t);
        }
        Err(AlgebraError::NoIdempotent)
    }

    /// Non-zero-divisors.
    pub fn regular_elements(&self) -> ElemSet {
        ElemSet::from_iter_in(
            self.size,
            self.elements().filter(|&a| self.elements().all(|b| b == 0 || self.mul(a, b) != 0)),
        )
    }

    /// Every regular element is a unit.
    pub fn is_total_quotient_ring(&self) -> bool {
        self.regular_elements().is_subset(self.units())
    }

    pub fn is_field(&self) -> bool {
        self.units().len() == self.size - 1
    }

    /// Only the trivial idempotents 0 and 1.
    pub fn is_indecomposable(&self) -> bool {
        self.idempotents().len() == 2
    }

    /// Characteristic: the additive order of 1.
    pub fn characteristic(&self) -> usize {
        let mut acc = self.one;
        let mut k = 1;
        while acc != 0 {
            acc = self.add(acc, self.one);
            k += 1;
        }
        k
    }

    /// Exhaustive check of the commutative-ring axioms.
    pub fn verify_axioms(&self) -> std::result::Result<(), String> {
        let n = self.size;
        if self.one == 0 {
            return Err("1 = 0".into());
        }
        for a in 0..n {
            if self.add(a, 0) != a || self.mul(a, self.one) != a {
                return Err(format!("identity fails at {}", self.render(a)));
            }
            if self.add(a, self.neg(a)) != 0 {
                return Err(format!("negation fails at {}", self.render(a)));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("commutativity fails at {}, {}", self.render(a), self.render(b)));
                }
                for c in 0..n {
                    let ab = self.mul(a, b);
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c))
                        || self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(ab, self.mul(a, c))
                    {
                        return Err(format!(
                            "associativity/distributivity fails at {}, {}, {}",
                            self.render(a),
                            self.render(b),
                            self.render(c)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Canonical rendering of an element.
    pub fn render(&self, x: Elem) -> String {
        self.value_of(x).to_string()
    }

    /// The literal that denotes `x`; `element()` inverts it.
    pub fn value_of(&self, x: Elem) -> ElemValue {
        match &self.kind {
            RingKind::Zn(_) => ElemValue::Int(x as i64),
            RingKind::Boolean(k) => {
                ElemValue::Tuple((0..*k).map(|i| ElemValue::Int(((x >> (k - 1 - i)) & 1) as i64)).collect())
            }
            RingKind::Product(l, r) => ElemValue::Tuple(vec![l.value_of(x / r.size), r.value_of(x % r.size)]),
            RingKind::Quotient(q) => ElemValue::Class(Box::new(q.base.value_of(q.reps[x]))),
            RingKind::TrivExt(m) => {
                let (r, mm) = (x / m.size(), x % m.size());
                ElemValue::Tuple(vec![m.ring().value_of(r), m.value_of(mm)])
            }
            RingKind::Amalgam(d) => {
                let (a, b) = d.carrier[x];
                ElemValue::Tuple(vec![d.a.value_of(a), d.b.value_of(b)])
            }
        }
    }

    /// Interpret a literal as an element of this ring.
    pub fn element(&self, v: &ElemValue) -> Result<Elem> {
        let bad = || AlgebraError::InvalidElement(format!("{v} is not an element of {}", self.describe()));
        match (&self.kind, v) {
            (RingKind::Zn(n), ElemValue::Int(k)) => Ok(k.rem_euclid(*n as i64) as Elem),
            (RingKind::Boolean(_), ElemValue::Int(k)) if *k >= 0 && (*k as usize) < self.size => Ok(*k as Elem),
            (RingKind::Boolean(k), ElemValue::Tuple(bits)) if bits.len() == *k as usize => {
                let mut x = 0;
                for b in bits {
                    match b {
                        ElemValue::Int(bit) => x = (x << 1) | (bit.rem_euclid(2) as usize),
                        _ => return Err(bad()),
                    }
                }
                Ok(x)
            }
            (RingKind::Product(l, r), ElemValue::Tuple(items)) if items.len() == 2 => {
                Ok(l.element(&items[0])? * r.size + r.element(&items[1])?)
            }
            (RingKind::Product(l, r), ElemValue::Tuple(items)) if items.len() > 2 => {
                // flattened tuple for left-nested products
                let split = items.len() - 1;
                let left = if split == 1 { items[0].clone() } else { ElemValue::Tuple(items[..split].to_vec()) };
                Ok(l.element(&left)? * r.size + r.element(&items[split])?)
            }
            (RingKind::Quotient(q), ElemValue::Class(inner)) => Ok(q.class_of[q.base.element(inner)?]),
            (RingKind::Quotient(q), other) => Ok(q.class_of[q.base.element(other)?]),
            (RingKind::TrivExt(m), ElemValue::Tuple(items)) if items.len() == 2 => {
                Ok(m.ring().element(&items[0])? * m.size() + m.element(&items[1])?)
            }
            (RingKind::Amalgam(d), ElemValue::Tuple(items)) if items.len() == 2 => {
                let a = d.a.element(&items[0])?;
                let b = d.b.element(&items[1])?;
                d.lookup[a * d.b.size + b].map(|i| i as Elem).ok_or_else(bad)
            }
            _ => Err(bad()),
        }
    }

    /// Constructor expression for this ring, in the CLI's ring grammar.
    pub fn describe(&self) -> String {
        match &self.kind {
            RingKind::Zn(n) => format!("Zn {n}"),
            RingKind::Boolean(k) => format!("bool {k}"),
            RingKind::Product(l, r) => {
                let right = if matches!(r.kind, RingKind::Product(..)) {
                    format!("({})", r.describe())
                } else {
                    r.describe()
                };
                format!("{} x {}", l.describe(), right)
            }
            RingKind::Quotient(q) => {
                let base = if matches!(q.base.kind, RingKind::Product(..)) {
                    format!("({})", q.base.describe())
                } else {
                    q.base.describe()
                };
                format!("{base} / {}", render_gens(&q.base, &q.ideal_gens))
            }
            RingKind::TrivExt(m) => format!("trivext({}, {})", m.ring().describe(), m.describe()),
            RingKind::Amalgam(d) => {
                let table: Vec<String> = d.a.elements().map(|x| d.b.render(d.map.apply(x))).collect();
                format!(
                    "amalg({}, {}, [{}], {})",
                    d.a.describe(),
                    d.b.describe(),
                    table.join(","),
                    render_gens(&d.b, &d.ideal_gens)
                )
            }
        }
    }

    /// Pretty form of a subset that is an ideal, e.g. `2Z4 x 0`.
    pub fn render_ideal(&self, set: &ElemSet) -> String {
        match &self.kind {
            RingKind::Zn(n) => {
                let d = set.iter().find(|&x| x != 0).map_or(*n as usize, |x| x);
                if d == *n as usize {
                    "0".into()
                } else if d == 1 {
                    format!("Z{n}")
                } else {
                    format!("{d}Z{n}")
                }
            }
            RingKind::Product(l, r) => {
                let left = ElemSet::from_iter_in(l.size, set.iter().map(|x| x / r.size));
                let right = ElemSet::from_iter_in(r.size, set.iter().map(|x| x % r.size));
                if left.len() * right.len() != set.len() {
                    return self.render_set(set);
                }
                let wrap = |ring: &FiniteRing, s: &ElemSet| {
                    let txt = ring.render_ideal(s);
                    if matches!(ring.kind, RingKind::Product(..)) && txt.contains(" x ") {
                        format!("({txt})")
                    } else {
                        txt
                    }
                };
                format!("{} x {}", wrap(l, &left), wrap(r, &right))
            }
            _ => {
                if set.len() == 1 {
                    "0".into()
                } else if set.len() == self.size {
                    "R".into()
                } else {
                    self.render_set(set)
                }
            }
        }
    }

    pub fn render_set(&self, set: &ElemSet) -> String {
        let items: Vec<String> = set.iter().map(|x| self.render(x)).collect();
        format!("{{{}}}", items.join(","))
    }
}

pub(crate) fn render_gens(ring: &FiniteRing, gens: &[Elem]) -> String {
    let items: Vec<String> = gens
        .iter()
        .map(|&g| {
            let v = ring.value_of(g);
            v.to_string()
        })
        .collect();
    format!("({})", items.join(", "))
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ring: &FiniteRing, items: &[Elem]) -> ElemSet {
        ElemSet::from_iter_in(ring.size(), items.iter().copied())
    }

    #[test]
    fn divides_in_z6_and_z() {
        let z6 = FiniteRing::zn(6).unwrap();
        assert!(z6.divides(2, 4));
        // oracle: 2Z6 = {0,2,4} by scanning 2r
        let scan: Vec<Elem> = (0..6).map(|r| (2 * r) % 6).collect();
        assert!(!scan.contains(&3));
        assert!(!z6.divides(2, 3));
    }

    #[test]
    fn units_and_idempotents_by_scan() {
        let z6 = FiniteRing::zn(6).unwrap();
        let z4 = FiniteRing::zn(4).unwrap();
        assert_eq!(z6.units(), &set(&z6, &[1, 5]));
        assert_eq!(z4.units(), &set(&z4, &[1, 3]));
        assert_eq!(z6.idempotents(), set(&z6, &[0, 1, 3, 4]));
        assert_eq!(z4.idempotents(), set(&z4, &[0, 1]));
        let f7 = FiniteRing::zn(7).unwrap();
        assert_eq!(f7.idempotents(), set(&f7, &[0, 1]));
    }

    #[test]
    fn idempotent_of_examples() {
        let z6 = FiniteRing::zn(6).unwrap();
        assert_eq!(z6.idempotent_of(3), Ok(3));
        assert_eq!(z6.idempotent_of(4), Ok(4));
        assert_eq!(z6.idempotent_of(5), Ok(1));
        assert_eq!(z6.idempotent_of(2), Ok(4));
        let z4 = FiniteRing::zn(4).unwrap();
        assert_eq!(z4.idempotent_of(2), Err(AlgebraError::NoIdempotent));
    }

    #[test]
    fn regular_elements_and_total_quotient() {
        let z6 = FiniteRing::zn(6).unwrap();
        assert_eq!(z6.regular_elements(), set(&z6, &[1, 5]));
        assert!(z6.is_total_quotient_ring());
        let z4 = FiniteRing::zn(4).unwrap();
        assert_eq!(z4.regular_elements(), set(&z4, &[1, 3]));
        assert!(z4.is_total_quotient_ring());
    }

    #[test]
    fn trivial_extension_multiplication() {
        let z2 = FiniteRing::zn(2).unwrap();
        let m = RingModule::regular(z2.clone());
        let t = FiniteRing::trivial_extension(m).unwrap();
        let x = t.trivext_pair(1, 1);
        assert_eq!(t.trivext_split(t.mul(x, x)), (1, 0));
        t.verify_axioms().unwrap();
    }

    #[test]
    fn product_z2_z3_matches_z6_on_additive_orders() {
        let p = FiniteRing::product(FiniteRing::zn(2).unwrap(), FiniteRing::zn(3).unwrap()).unwrap();
        let z6 = FiniteRing::zn(6).unwrap();
        let orders = |r: &FiniteRing| {
            let mut v: Vec<usize> = r
                .elements()
                .map(|x| {
                    let mut acc = x;
                    let mut k = 1;
                    while acc != 0 {
                        acc = r.add(acc, x);
                        k += 1;
                    }
                    k
                })
                .collect();
            v.sort();
            v
        };
        assert_eq!(orders(&p), orders(&z6));
        assert_eq!(p.units().len(), z6.units().len());
        assert_eq!(p.idempotents().len(), z6.idempotents().len());
        assert_eq!(p.characteristic(), 6);
    }

    #[test]
    fn quotient_has_expected_size_and_axioms() {
        let z12 = FiniteRing::zn(12).unwrap();
        let q = FiniteRing::quotient(z12, &[4]).unwrap();
        assert_eq!(q.size(), 4);
        q.verify_axioms().unwrap();
        assert_eq!(q.describe(), "Zn 12 / (4)");
        assert!(FiniteRing::quotient(FiniteRing::zn(5).unwrap(), &[2]).is_err());
    }

    #[test]
    fn boolean_ring_axioms_and_rendering() {
        let b = FiniteRing::boolean(3).unwrap();
        b.verify_axioms().unwrap();
        assert_eq!(b.render(b.one()), "(1,1,1)");
        assert_eq!(b.idempotents().len(), 8);
        let v = b.value_of(5);
        assert_eq!(b.element(&v).unwrap(), 5);
    }

    #[test]
    fn element_roundtrip_through_values() {
        let z4 = FiniteRing::zn(4).unwrap();
        let p = FiniteRing::product(z4.clone(), FiniteRing::zn(9).unwrap()).unwrap();
        let q = FiniteRing::quotient(p.clone(), &[p.pair(2, 3)]).unwrap();
        for r in [&z4, &p, &q] {
            for x in r.elements() {
                assert_eq!(r.element(&r.value_of(x)).unwrap(), x);
            }
        }
    }

    #[test]
    fn amalgamation_rejects_non_homomorphism() {
        let z2 = FiniteRing::zn(2).unwrap();
        let z4 = FiniteRing::zn(4).unwrap();
        // 0 -> 0, 1 -> 1 is additive only if 1 + 1 = 0 in Z4, which fails
        let err = RingHom::from_table(z2, z4, vec![0, 1]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotAHomomorphism(_)));
    }

    #[test]
    fn amalgamation_carrier_and_axioms() {
        let z4 = FiniteRing::zn(4).unwrap();
        let z2 = FiniteRing::zn(2).unwrap();
        let f = RingHom::canonical(z4.clone(), z2.clone()).unwrap();
        let a = FiniteRing::amalgamation(f, &[1]).unwrap();
        assert_eq!(a.size(), 8);
        a.verify_axioms().unwrap();
        let f = RingHom::canonical(z4, z2).unwrap();
        let a0 = FiniteRing::amalgamation(f, &[]).unwrap();
        assert_eq!(a0.size(), 4);
    }
}
