//! Multiplicative sets of finite rings.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{AlgebraError, Result};
use crate::ideal::{self, Ideal};
use crate::ring::{Elem, FiniteRing, RingHom, Side};

/// Rings up to this size get every multiplicative subset enumerated; larger
/// ones only the sets generated by at most two elements.
pub const FULL_SCAN_LIMIT: usize = 16;

/// A multiplicatively closed subset containing 1 and avoiding 0.
#[derive(Clone)]
pub struct MultiplicativeSet {
    ring: Arc<FiniteRing>,
    gens: Vec<Elem>,
    elems: ElemSet,
    max_multiple: Option<Elem>,
}

/// Shape of the saturation of a strongly multiplicative set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "form")]
pub enum SaturationForm {
    /// Indecomposable ring: the saturation is `u(R)`.
    Units,
    /// Decomposable ring, `t` a unit: the saturation is `u(R)`.
    UnitsTimesUnits,
    /// `t` generates `Re` with `e ≠ 1`: the saturation is `u(Re) × R(1-e)`.
    /// `side` names the factor carrying the units when `R` is a product and
    /// `e` is one of its coordinate idempotents.
    UnitsTimesFactor { idempotent: Elem, side: Option<Side> },
}

impl SaturationForm {
    /// The set the structure theorem predicts for this form.
    pub fn predicted(&self, ring: &FiniteRing) -> ElemSet {
        match *self {
            SaturationForm::Units | SaturationForm::UnitsTimesUnits => ring.units().clone(),
            // u(Re) × R(1-e) is exactly the set of divisors of e
            SaturationForm::UnitsTimesFactor { idempotent, .. } => {
                ElemSet::from_iter_in(ring.size(), ring.elements().filter(|&r| ring.divides(r, idempotent)))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Saturation {
    pub set: ElemSet,
    /// Present only when the set is strongly multiplicative.
    pub form: Option<SaturationForm>,
}

fn closure_from(ring: &FiniteRing, start: &ElemSet, extra: &[Elem]) -> Result<ElemSet> {
    let mut set = start.clone();
    let mut frontier: Vec<Elem> = extra.iter().copied().filter(|&g| !set.contains(g)).collect();
    for &g in &frontier {
        set.insert(g);
    }
    while let Some(x) = frontier.pop() {
        if x == 0 {
            return Err(AlgebraError::ContainsZero);
        }
        let current = set.to_vec();
        for y in current {
            let z = ring.mul(x, y);
            if set.insert(z) {
                frontier.push(z);
            }
        }
    }
    if set.contains(0) {
        return Err(AlgebraError::ContainsZero);
    }
    Ok(set)
}

fn greedy_gens(ring: &FiniteRing, elems: &ElemSet) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span = ElemSet::singleton(ring.size(), ring.one());
    for x in elems.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = closure_from(ring, &span, &[x]).expect("subset of a multiplicative set");
        }
    }
    gens
}

impl MultiplicativeSet {
    /// Multiplicative closure of `gens ∪ {1}`.
    pub fn close(ring: &Arc<FiniteRing>, gens: &[Elem]) -> Result<Self> {
        if let Some(&g) = gens.iter().find(|&&g| g >= ring.size()) {
            return Err(AlgebraError::InvalidElement(format!("index {g} outside a ring of size {}", ring.size())));
        }
        let elems = closure_from(ring, &ElemSet::singleton(ring.size(), ring.one()), gens)?;
        let mut g: Vec<Elem> = gens.iter().copied().filter(|&x| x != ring.one()).collect();
        g.sort_unstable();
        g.dedup();
        Ok(Self::build(ring, g, elems))
    }

    /// Wraps an explicit subset, checking that it is multiplicative.
    pub fn from_elements(ring: &Arc<FiniteRing>, elems: ElemSet) -> Result<Self> {
        if elems.contains(0) {
            return Err(AlgebraError::ContainsZero);
        }
        if !elems.contains(ring.one()) {
            return Err(AlgebraError::NotMultiplicative("1 is missing".into()));
        }
        for a in elems.iter() {
            for b in elems.iter() {
                if !elems.contains(ring.mul(a, b)) {
                    return Err(AlgebraError::NotMultiplicative(format!(
                        "{} * {} leaves the set",
                        ring.render(a),
                        ring.render(b)
                    )));
                }
            }
        }
        let gens = greedy_gens(ring, &elems);
        Ok(Self::build(ring, gens, elems))
    }

    fn build(ring: &Arc<FiniteRing>, gens: Vec<Elem>, elems: ElemSet) -> Self {
        let max_multiple = elems.iter().find(|&t| elems.iter().all(|s| ring.divides(s, t)));
        Self { ring: ring.clone(), gens, elems, max_multiple }
    }

    /// `R ∖ P` for a prime `P`.
    pub fn from_prime_complement(p: &Ideal) -> Result<Self> {
        if !p.is_prime() {
            return Err(AlgebraError::NotPrime);
        }
        Self::from_elements(p.ring(), p.elements().complement())
    }

    pub fn units(ring: &Arc<FiniteRing>) -> Self {
        Self::from_elements(ring, ring.units().clone()).expect("units form a multiplicative set")
    }

    pub fn regular(ring: &Arc<FiniteRing>) -> Self {
        Self::from_elements(ring, ring.regular_elements()).expect("regular elements form a multiplicative set")
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elems
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elems.contains(x)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset_of_units(&self) -> bool {
        self.elems.is_subset(self.ring.units())
    }

    pub fn meets(&self, ideal: &Ideal) -> bool {
        !self.elems.is_disjoint(ideal.elements())
    }

    /// `(⋂_{s ∈ S} sR) ∩ S`, with its smallest element as witness.
    pub fn is_strongly_multiplicative_def(&self) -> Option<Elem> {
        let mut meet = ElemSet::full(self.ring.size());
        for s in self.elems.iter() {
            meet.intersect_with(self.ring.principal(s));
        }
        meet.intersect_with(&self.elems);
        meet.first()
    }

    /// The smallest `t ∈ S` divisible by every member.
    pub fn is_strongly_multiplicative_mmc(&self) -> Option<Elem> {
        self.max_multiple
    }

    pub fn is_strongly_multiplicative(&self) -> bool {
        self.max_multiple.is_some()
    }

    pub fn max_multiple(&self) -> Option<Elem> {
        self.max_multiple
    }

    /// The idempotent `e` with `Rt = Re`.
    pub fn idempotent(&self) -> Result<Elem> {
        let t = self.max_multiple.ok_or(AlgebraError::NoIdempotent)?;
        self.ring.idempotent_of(t)
    }

    /// `{r : rx ∈ S for some x}`.
    pub fn saturation_set(&self) -> ElemSet {
        let r = &self.ring;
        ElemSet::from_iter_in(r.size(), r.elements().filter(|&a| self.elems.iter().any(|s| r.divides(a, s))))
    }

    pub fn saturation(&self) -> Saturation {
        let set = self.saturation_set();
        let form = self.idempotent().ok().map(|e| {
            let r = &self.ring;
            if r.is_indecomposable() {
                SaturationForm::Units
            } else if e == r.one() {
                SaturationForm::UnitsTimesUnits
            } else {
                let side = r.factors().and_then(|(a, b)| {
                    if e == r.pair(a.one(), 0) {
                        Some(Side::Left)
                    } else if e == r.pair(0, b.one()) {
                        Some(Side::Right)
                    } else {
                        None
                    }
                });
                SaturationForm::UnitsTimesFactor { idempotent: e, side }
            }
        });
        Saturation { set, form }
    }

    /// `S̄ = R ∖ ⋃ {P prime : P ∩ S = ∅}`.
    pub fn saturation_by_primes(&self) -> Result<ElemSet> {
        let mut covered = ElemSet::empty(self.ring.size());
        for p in ideal::prime_ideals(&self.ring)? {
            if !self.meets(&p) {
                covered.union_with(p.elements());
            }
        }
        Ok(covered.complement())
    }

    /// `ST = {st}`.
    pub fn product_set(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let r = &self.ring;
        let mut elems = ElemSet::empty(r.size());
        for s in self.elems.iter() {
            for t in other.elems.iter() {
                elems.insert(r.mul(s, t));
            }
        }
        if elems.contains(0) {
            return Err(AlgebraError::ContainsZero);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().copied());
        gens.sort_unstable();
        gens.dedup();
        Ok(Self::build(r, gens, elems))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.describe() == other.ring.describe() {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub fn jacobson_disjoint(&self) -> Result<bool> {
        Ok(self.elems.is_disjoint(ideal::jacobson(&self.ring)?.elements()))
    }

    /// `f(S)` for a surjective `f`.
    pub fn image_under(&self, f: &RingHom) -> Result<Self> {
        if !Arc::ptr_eq(f.source(), &self.ring) && f.source().describe() != self.ring.describe() {
            return Err(AlgebraError::RingMismatch);
        }
        if !f.is_surjective() {
            return Err(AlgebraError::NotSurjective);
        }
        let image = f.image(&self.elems);
        if image.contains(0) {
            return Err(AlgebraError::ContainsZero);
        }
        let mut gens: Vec<Elem> = self.gens.iter().map(|&g| f.apply(g)).filter(|&g| g != f.target().one()).collect();
        gens.sort_unstable();
        gens.dedup();
        Ok(Self::build(f.target(), gens, image))
    }

    /// `S₁ × S₂` inside `product`, which must be the product of the two rings.
    pub fn product_with(&self, other: &Self, product: &Arc<FiniteRing>) -> Result<Self> {
        let (l, r) = product.factors().ok_or(AlgebraError::RingMismatch)?;
        if l.describe() != self.ring.describe() || r.describe() != other.ring.describe() {
            return Err(AlgebraError::RingMismatch);
        }
        let elems = ElemSet::from_iter_in(
            product.size(),
            self.elems.iter().flat_map(|a| other.elems.iter().map(move |b| product.pair(a, b))),
        );
        let mut gens: Vec<Elem> = self.gens.iter().map(|&a| product.pair(a, r.one())).collect();
        gens.extend(other.gens.iter().map(|&b| product.pair(l.one(), b)));
        gens.sort_unstable();
        Ok(Self::build(product, gens, elems))
    }

    /// `S ∝ N = {(s, n)}` inside `R ∝ M`; `submodule` holds module indices.
    pub fn lift_to_trivext(&self, trivext: &Arc<FiniteRing>, submodule: &ElemSet) -> Result<Self> {
        let module = trivext.trivext_module().ok_or(AlgebraError::RingMismatch)?;
        if module.ring().describe() != self.ring.describe() {
            return Err(AlgebraError::RingMismatch);
        }
        if submodule.universe() != module.size() || module.span(&submodule.to_vec()) != *submodule {
            return Err(AlgebraError::InvalidModule("not a submodule".into()));
        }
        let elems = ElemSet::from_iter_in(
            trivext.size(),
            self.elems.iter().flat_map(|s| submodule.iter().map(move |n| trivext.trivext_pair(s, n))),
        );
        Self::from_elements(trivext, elems)
    }

    /// `S' = {(s, f(s))} ∪ {(1, 1)}` inside `A ⋈^f J`.
    pub fn lift_to_amalgam(&self, amalgam: &Arc<FiniteRing>) -> Result<Self> {
        let (f, _) = amalgam.amalgam_parts().ok_or(AlgebraError::RingMismatch)?;
        if f.source().describe() != self.ring.describe() {
            return Err(AlgebraError::RingMismatch);
        }
        let mut elems = ElemSet::singleton(amalgam.size(), amalgam.one());
        for s in self.elems.iter() {
            let x = amalgam.amalgam_index(s, f.apply(s)).expect("(s, f(s)) lies in the amalgamation");
            elems.insert(x);
        }
        Self::from_elements(amalgam, elems)
    }

    /// Set expression in the CLI grammar.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|&g| self.ring.render(g)).collect();
        format!("<{}>", gens.join(", "))
    }
}

impl PartialEq for MultiplicativeSet {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for MultiplicativeSet {}

impl fmt::Debug for MultiplicativeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiplicativeSet({})", self.ring.render_set(&self.elems))
    }
}

/// Multiplicative sets of a finite ring: every one when `|R| ≤ 16`, the
/// sets generated by at most two elements up to `bound`.
pub fn enumerate_multiplicative_sets(ring: &Arc<FiniteRing>, bound: usize) -> Result<Vec<MultiplicativeSet>> {
    if ring.size() > bound {
        return Err(AlgebraError::TooLarge { size: ring.size(), bound });
    }
    let mut found: Vec<ElemSet> = Vec::new();
    let base = ElemSet::singleton(ring.size(), ring.one());
    if ring.size() <= FULL_SCAN_LIMIT {
        // depth-first NextClosure: a set is generated only from its canonical parent
        fn walk(ring: &FiniteRing, set: &ElemSet, start: Elem, out: &mut Vec<ElemSet>) {
            for x in start..ring.size() {
                if set.contains(x) {
                    continue;
                }
                let Ok(next) = closure_from(ring, set, &[x]) else { continue };
                if (0..x).any(|y| next.contains(y) && !set.contains(y)) {
                    continue;
                }
                out.push(next.clone());
                walk(ring, &next, x + 1, out);
            }
        }
        found.push(base.clone());
        walk(ring, &base, 1, &mut found);
    } else {
        let mut seen = HashSet::new();
        seen.insert(base.clone());
        found.push(base.clone());
        for a in 1..ring.size() {
            for b in a..ring.size() {
                if let Ok(s) = closure_from(ring, &base, &[a, b]) {
                    if seen.insert(s.clone()) {
                        found.push(s);
                    }
                }
            }
        }
    }
    found.sort();
    Ok(found
        .into_iter()
        .map(|elems| {
            let gens = greedy_gens(ring, &elems);
            MultiplicativeSet::build(ring, gens, elems)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n).unwrap()
    }

    #[test]
    fn close_examples() {
        let z6 = z(6);
        assert_eq!(MultiplicativeSet::close(&z6, &[3]).unwrap().elements().to_vec(), vec![1, 3]);
        assert_eq!(MultiplicativeSet::close(&z(4), &[2]).unwrap_err(), AlgebraError::ContainsZero);
    }

    #[test]
    fn strongly_multiplicative_examples() {
        let z6 = z(6);
        let s = MultiplicativeSet::close(&z6, &[3]).unwrap();
        assert_eq!(s.is_strongly_multiplicative_def(), Some(3));
        assert_eq!(s.is_strongly_multiplicative_mmc(), Some(3));
        let one = MultiplicativeSet::close(&z6, &[]).unwrap();
        assert_eq!(one.is_strongly_multiplicative_def(), Some(1));
    }

    #[test]
    fn saturation_examples() {
        let z6 = z(6);
        let s = MultiplicativeSet::close(&z6, &[3]).unwrap().saturation();
        assert_eq!(s.set.to_vec(), vec![1, 3, 5]);
        assert!(matches!(s.form, Some(SaturationForm::UnitsTimesFactor { idempotent: 3, side: None })));
        let z4 = z(4);
        let s = MultiplicativeSet::close(&z4, &[3]).unwrap().saturation();
        assert_eq!(s.set.to_vec(), vec![1, 3]);
        assert_eq!(s.form, Some(SaturationForm::Units));
        let p = FiniteRing::product(z(4), z(9)).unwrap();
        let s = MultiplicativeSet::close(&p, &[p.pair(1, 0)]).unwrap().saturation();
        assert!(matches!(s.form, Some(SaturationForm::UnitsTimesFactor { side: Some(Side::Left), .. })));
    }

    #[test]
    fn product_set_examples() {
        let z6 = z(6);
        let a = MultiplicativeSet::close(&z6, &[3]).unwrap();
        let b = MultiplicativeSet::close(&z6, &[4]).unwrap();
        assert_eq!(a.product_set(&b).unwrap_err(), AlgebraError::ContainsZero);
        assert_eq!(a.product_set(&a).unwrap(), a);
    }

    #[test]
    fn prime_complements() {
        let z6 = z(6);
        let two = Ideal::principal(&z6, 2);
        let three = Ideal::principal(&z6, 3);
        assert_eq!(MultiplicativeSet::from_prime_complement(&two).unwrap().elements().to_vec(), vec![1, 3, 5]);
        assert_eq!(MultiplicativeSet::from_prime_complement(&three).unwrap().elements().to_vec(), vec![1, 2, 4, 5]);
        assert_eq!(
            MultiplicativeSet::from_prime_complement(&Ideal::zero(&z6)).unwrap_err(),
            AlgebraError::NotPrime
        );
    }

    fn subset_scan(ring: &FiniteRing) -> Vec<ElemSet> {
        let n = ring.size();
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let set = ElemSet::from_iter_in(n, (0..n).filter(|i| mask & (1 << i) != 0));
            let ok = set.contains(ring.one())
                && !set.contains(0)
                && set.iter().all(|a| set.iter().all(|b| set.contains(ring.mul(a, b))));
            if ok {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_subset_scan() {
        assert_eq!(enumerate_multiplicative_sets(&z(2), 64).unwrap().len(), 1);
        let z4: Vec<Vec<Elem>> =
            enumerate_multiplicative_sets(&z(4), 64).unwrap().iter().map(|s| s.elements().to_vec()).collect();
        assert_eq!(z4, vec![vec![1], vec![1, 3]]);
        for ring in [z(6), z(8), z(12), FiniteRing::boolean(3).unwrap(), FiniteRing::product(z(2), z(4)).unwrap()] {
            let got: Vec<ElemSet> =
                enumerate_multiplicative_sets(&ring, 64).unwrap().iter().map(|s| s.elements().clone()).collect();
            assert_eq!(got, subset_scan(&ring), "ring {}", ring.describe());
        }
        // Z6 has seven: {1},{1,3},{1,4},{1,5},{1,2,4},{1,3,5},{1,2,4,5}
        assert_eq!(enumerate_multiplicative_sets(&z(6), 64).unwrap().len(), 7);
    }

    #[test]
    fn transport_examples() {
        let z4 = z(4);
        let q = FiniteRing::quotient(z4.clone(), &[2]).unwrap();
        let f = RingHom::quotient_map(&q).unwrap();
        let s = MultiplicativeSet::close(&z4, &[3]).unwrap();
        assert_eq!(s.image_under(&f).unwrap().elements().to_vec(), vec![1]);

        let z2 = z(2);
        let te = FiniteRing::trivial_extension(crate::ring::RingModule::regular(z2.clone())).unwrap();
        let one = MultiplicativeSet::close(&z2, &[]).unwrap();
        let lifted = one.lift_to_trivext(&te, &ElemSet::singleton(2, 0)).unwrap();
        assert_eq!(lifted.elements().to_vec(), vec![te.trivext_pair(1, 0)]);

        let z6 = z(6);
        let p = FiniteRing::product(z6.clone(), z2.clone()).unwrap();
        let s = MultiplicativeSet::close(&z6, &[3]).unwrap();
        let prod = s.product_with(&one, &p).unwrap();
        assert_eq!(prod.elements().to_vec(), vec![p.pair(1, 1), p.pair(3, 1)]);
    }

    #[test]
    fn local_rings_force_units() {
        for n in [4, 8, 9] {
            let ring = z(n);
            for s in enumerate_multiplicative_sets(&ring, 64).unwrap() {
                assert!(s.is_strongly_multiplicative());
                assert!(s.is_subset_of_units());
            }
        }
    }
}
