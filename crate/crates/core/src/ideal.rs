//! Ideals of finite rings, stored with their full element sets.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{AlgebraError, Result};
use crate::ring::{Elem, FiniteRing};

/// Enumerations over rings larger than this report `TooLarge` unless a
/// bigger bound is passed explicitly.
pub const DEFAULT_ENUMERATION_BOUND: usize = 256;

/// An ideal of a finite ring.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    elems: ElemSet,
    gens: Vec<Elem>,
}

pub(crate) fn span_set(ring: &FiniteRing, gens: &[Elem]) -> Result<ElemSet> {
    if let Some(&g) = gens.iter().find(|&&g| g >= ring.size()) {
        return Err(AlgebraError::InvalidElement(format!("index {g} outside a ring of size {}", ring.size())));
    }
    let mut set = ElemSet::singleton(ring.size(), 0);
    for &g in gens {
        set = add_sets(ring, &set, ring.principal(g));
    }
    Ok(set)
}

fn add_sets(ring: &FiniteRing, a: &ElemSet, b: &ElemSet) -> ElemSet {
    if a.is_subset(b) {
        return b.clone();
    }
    if b.is_subset(a) {
        return a.clone();
    }
    let mut out = ElemSet::empty(ring.size());
    let bs = b.to_vec();
    for x in a.iter() {
        for &y in &bs {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// Greedy generating set: scan ascending, keep what the span so far misses.
fn reduce_gens(ring: &FiniteRing, set: &ElemSet) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut span = ElemSet::singleton(ring.size(), 0);
    for x in set.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = add_sets(ring, &span, ring.principal(x));
        }
    }
    gens
}

impl Ideal {
    /// Smallest ideal containing `gens`.
    pub fn span(ring: &Arc<FiniteRing>, gens: &[Elem]) -> Result<Self> {
        let elems = span_set(ring, gens)?;
        let mut g: Vec<Elem> = gens.iter().copied().filter(|&x| x != 0).collect();
        g.sort_unstable();
        g.dedup();
        Ok(Self { ring: ring.clone(), elems, gens: g })
    }

    pub fn principal(ring: &Arc<FiniteRing>, a: Elem) -> Self {
        Self { ring: ring.clone(), elems: ring.principal(a).clone(), gens: if a == 0 { vec![] } else { vec![a] } }
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Self {
        Self { ring: ring.clone(), elems: ElemSet::singleton(ring.size(), 0), gens: vec![] }
    }

    pub fn whole(ring: &Arc<FiniteRing>) -> Self {
        Self { ring: ring.clone(), elems: ElemSet::full(ring.size()), gens: vec![ring.one()] }
    }

    /// Wraps a subset, checking that it is an ideal.
    pub fn from_set(ring: &Arc<FiniteRing>, elems: ElemSet) -> Result<Self> {
        if !elems.contains(0) {
            return Err(AlgebraError::NotAnIdeal("does not contain 0".into()));
        }
        for x in elems.iter() {
            if !ring.principal(x).is_subset(&elems) {
                return Err(AlgebraError::NotAnIdeal(format!("not closed under multiplication at {}", ring.render(x))));
            }
            for y in elems.iter() {
                if !elems.contains(ring.add(x, y)) {
                    return Err(AlgebraError::NotAnIdeal(format!(
                        "not closed under addition at {} + {}",
                        ring.render(x),
                        ring.render(y)
                    )));
                }
            }
        }
        Ok(Self::from_set_unchecked(ring, elems))
    }

    /// Wraps a subset without checking closure. Meant for fault injection in
    /// test harnesses; everything else should go through [`Ideal::from_set`].
    pub fn from_set_unverified(ring: &Arc<FiniteRing>, elems: ElemSet) -> Self {
        Self::from_set_unchecked(ring, elems)
    }

    pub(crate) fn from_set_unchecked(ring: &Arc<FiniteRing>, elems: ElemSet) -> Self {
        let gens = reduce_gens(ring, &elems);
        Self { ring: ring.clone(), elems, gens }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elems
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elems.contains(x)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elems.is_subset(&other.elems)
    }

    pub fn is_proper(&self) -> bool {
        !self.elems.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn intersect(&self, other: &Ideal) -> Ideal {
        Ideal::from_set_unchecked(&self.ring, self.elems.intersection(&other.elems))
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let elems = add_sets(&self.ring, &self.elems, &other.elems);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().copied());
        gens.sort_unstable();
        gens.dedup();
        Ideal { ring: self.ring.clone(), elems, gens }
    }

    /// `(I : J) = {r : rJ ⊆ I}`.
    pub fn colon(&self, other: &Ideal) -> Ideal {
        let r = &self.ring;
        let gens = &other.gens;
        let elems = ElemSet::from_iter_in(r.size(), r.elements().filter(|&x| gens.iter().all(|&g| self.contains(r.mul(x, g)))));
        Ideal::from_set_unchecked(r, elems)
    }

    /// `(I : s)` for a single element.
    pub fn colon_elem(&self, s: Elem) -> Ideal {
        let r = &self.ring;
        let elems = ElemSet::from_iter_in(r.size(), r.elements().filter(|&x| self.contains(r.mul(x, s))));
        Ideal::from_set_unchecked(r, elems)
    }

    /// `sI = {s·x : x ∈ I}`.
    pub fn scale(&self, s: Elem) -> Ideal {
        let r = &self.ring;
        Ideal::from_set_unchecked(r, ElemSet::from_iter_in(r.size(), self.elems.iter().map(|x| r.mul(s, x))))
    }

    /// The image `eI` as a subset of the ring.
    pub fn image_under_mul(&self, e: Elem) -> ElemSet {
        let r = &self.ring;
        ElemSet::from_iter_in(r.size(), self.elems.iter().map(|x| r.mul(e, x)))
    }

    pub fn is_prime(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let r = &self.ring;
        let outside: Vec<Elem> = self.elems.complement().to_vec();
        outside.iter().all(|&a| outside.iter().all(|&b| !self.contains(r.mul(a, b))))
    }

    /// Witness `(a, b)` with `ab ∈ I` and `a, b ∉ I`, smallest `a` first.
    pub fn non_prime_witness(&self) -> Option<(Elem, Elem)> {
        let r = &self.ring;
        let outside: Vec<Elem> = self.elems.complement().to_vec();
        for &a in &outside {
            for &b in &outside {
                if self.contains(r.mul(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_maximal(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let r = &self.ring;
        // I + xR = R iff 1 - xr ∈ I for some r
        self.elems
            .complement()
            .iter()
            .all(|x| r.elements().any(|y| self.contains(r.sub(r.one(), r.mul(x, y)))))
    }

    pub fn render(&self) -> String {
        self.ring.render_ideal(&self.elems)
    }

    pub fn render_elements(&self) -> Vec<String> {
        self.elems.iter().map(|x| self.ring.render(x)).collect()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elems.cmp(&other.elems)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self.render())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `⋂ family`; the empty family intersects to the whole ring.
pub fn intersect_family(ring: &Arc<FiniteRing>, family: &[Ideal]) -> Ideal {
    let mut acc = ElemSet::full(ring.size());
    for i in family {
        acc.intersect_with(i.elements());
    }
    Ideal::from_set_unchecked(ring, acc)
}

fn check_bound(ring: &FiniteRing, bound: usize) -> Result<()> {
    if ring.size() > bound {
        return Err(AlgebraError::TooLarge { size: ring.size(), bound });
    }
    Ok(())
}

/// The full ideal lattice, sorted by (cardinality, elements).
pub fn all_ideals(ring: &Arc<FiniteRing>) -> Result<Vec<Ideal>> {
    all_ideals_within(ring, DEFAULT_ENUMERATION_BOUND)
}

pub fn all_ideals_within(ring: &Arc<FiniteRing>, bound: usize) -> Result<Vec<Ideal>> {
    check_bound(ring, bound)?;
    let lattice = ring.caches.ideals.get_or_init(|| {
        // principal ideals first, then close under pairwise sums
        let mut seen: HashSet<ElemSet> = HashSet::new();
        let mut found: Vec<(ElemSet, Vec<Elem>)> = Vec::new();
        for a in ring.elements() {
            let p = ring.principal(a).clone();
            if seen.insert(p.clone()) {
                found.push((p, if a == 0 { vec![] } else { vec![a] }));
            }
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let s = add_sets(ring, &found[i].0, &found[j].0);
                if seen.insert(s.clone()) {
                    let mut g = found[i].1.clone();
                    g.extend(found[j].1.iter().copied());
                    g.sort_unstable();
                    g.dedup();
                    found.push((s, g));
                }
            }
            i += 1;
        }
        found.sort();
        found
    });
    Ok(lattice
        .iter()
        .map(|(elems, gens)| Ideal { ring: ring.clone(), elems: elems.clone(), gens: gens.clone() })
        .collect())
}

pub fn prime_ideals(ring: &Arc<FiniteRing>) -> Result<Vec<Ideal>> {
    Ok(all_ideals(ring)?.into_iter().filter(Ideal::is_prime).collect())
}

pub fn maximal_ideals(ring: &Arc<FiniteRing>) -> Result<Vec<Ideal>> {
    Ok(all_ideals(ring)?.into_iter().filter(Ideal::is_maximal).collect())
}

/// Primes not strictly containing another prime.
pub fn minimal_primes(ring: &Arc<FiniteRing>) -> Result<Vec<Ideal>> {
    let primes = prime_ideals(ring)?;
    Ok(primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect())
}

/// Intersection of the maximal ideals.
pub fn jacobson(ring: &Arc<FiniteRing>) -> Result<Ideal> {
    Ok(intersect_family(ring, &maximal_ideals(ring)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n).unwrap()
    }

    fn els(i: &Ideal) -> Vec<Elem> {
        i.elements().to_vec()
    }

    #[test]
    fn span_examples() {
        let z6 = z(6);
        assert_eq!(els(&Ideal::span(&z6, &[2]).unwrap()), vec![0, 2, 4]);
        assert_eq!(els(&Ideal::span(&z6, &[]).unwrap()), vec![0]);
        assert_eq!(els(&Ideal::span(&z6, &[2, 3]).unwrap()).len(), 6);
    }

    #[test]
    fn lattice_operations_in_z6() {
        let z6 = z(6);
        let two = Ideal::principal(&z6, 2);
        let three = Ideal::principal(&z6, 3);
        assert_eq!(els(&two.intersect(&three)), vec![0]);
        assert!(!two.sum(&three).is_proper());
        // (0 : 2Z6): scan r with 2r = 4r = 0
        let scan: Vec<Elem> = (0..6).filter(|r| (2 * r) % 6 == 0 && (4 * r) % 6 == 0).collect();
        assert_eq!(els(&Ideal::zero(&z6).colon(&two)), scan);
        assert_eq!(scan, vec![0, 3]);
        assert_eq!(two.colon(&Ideal::whole(&z6)), two);
    }

    #[test]
    fn primes_maximals_jacobson() {
        let z6 = z(6);
        let primes = prime_ideals(&z6).unwrap();
        assert_eq!(primes.iter().map(els).collect::<Vec<_>>(), vec![vec![0, 3], vec![0, 2, 4]]);
        assert!(primes.iter().all(Ideal::is_maximal));
        assert!(jacobson(&z6).unwrap().is_zero());
        let z4 = z(4);
        assert_eq!(els(&jacobson(&z4).unwrap()), vec![0, 2]);
    }

    #[test]
    fn all_ideals_matches_subset_scan_on_small_rings() {
        for ring in [z(8), z(12), FiniteRing::boolean(3).unwrap(), FiniteRing::product(z(2), z(4)).unwrap()] {
            let n = ring.size();
            let mut scan = Vec::new();
            for mask in 0u32..(1 << n) {
                let set = ElemSet::from_iter_in(n, (0..n).filter(|i| mask & (1 << i) != 0));
                if Ideal::from_set(&ring, set.clone()).is_ok() {
                    scan.push(set);
                }
            }
            scan.sort();
            let lattice: Vec<ElemSet> = all_ideals(&ring).unwrap().iter().map(|i| i.elements().clone()).collect();
            assert_eq!(lattice, scan, "ring {}", ring.describe());
        }
    }

    #[test]
    fn prime_iff_quotient_is_domain() {
        let ring = FiniteRing::product(z(4), z(3)).unwrap();
        for i in all_ideals(&ring).unwrap() {
            if !i.is_proper() {
                continue;
            }
            let q = FiniteRing::quotient_by_set(ring.clone(), i.elements().clone(), i.generators().to_vec()).unwrap();
            let domain = q.elements().all(|a| a == 0 || q.elements().all(|b| b == 0 || q.mul(a, b) != 0));
            assert_eq!(i.is_prime(), domain);
        }
    }

    #[test]
    fn jacobson_second_characterization() {
        for ring in [z(12), z(8), FiniteRing::product(z(4), z(9)).unwrap()] {
            let jac = jacobson(&ring).unwrap();
            let alt = ElemSet::from_iter_in(
                ring.size(),
                ring.elements().filter(|&r| ring.elements().all(|a| ring.is_unit(ring.sub(ring.one(), ring.mul(a, r))))),
            );
            assert_eq!(jac.elements(), &alt);
        }
    }

    #[test]
    fn too_large_is_reported() {
        let big = z(300);
        assert!(matches!(all_ideals(&big), Err(AlgebraError::TooLarge { .. })));
    }

    #[test]
    fn empty_family_is_whole_ring() {
        let z6 = z(6);
        assert!(!intersect_family(&z6, &[]).is_proper());
    }
}
