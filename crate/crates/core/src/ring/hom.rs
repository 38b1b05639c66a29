use std::sync::Arc;

use super::{Elem, FiniteRing};
use crate::elemset::ElemSet;
use crate::error::{AlgebraError, Result};

/// A verified unital ring homomorphism between finite rings, stored as a table.
#[derive(Debug, Clone)]
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    table: Vec<Elem>,
}

impl RingHom {
    pub fn from_table(source: Arc<FiniteRing>, target: Arc<FiniteRing>, table: Vec<Elem>) -> Result<Self> {
        if table.len() != source.size() {
            return Err(AlgebraError::NotAHomomorphism(format!(
                "table has {} entries, source has {} elements",
                table.len(),
                source.size()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&y| y >= target.size()) {
            return Err(AlgebraError::NotAHomomorphism(format!("image index {bad} outside target")));
        }
        let hom = Self { source, target, table };
        hom.verify()?;
        Ok(hom)
    }

    fn verify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.apply(s.one()) != t.one() {
            return Err(AlgebraError::NotAHomomorphism("f(1) != 1".into()));
        }
        for a in s.elements() {
            for b in s.elements() {
                if self.apply(s.add(a, b)) != t.add(self.apply(a), self.apply(b)) {
                    return Err(AlgebraError::NotAHomomorphism(format!(
                        "f({} + {}) != f({}) + f({})",
                        s.render(a),
                        s.render(b),
                        s.render(a),
                        s.render(b)
                    )));
                }
                if self.apply(s.mul(a, b)) != t.mul(self.apply(a), self.apply(b)) {
                    return Err(AlgebraError::NotAHomomorphism(format!(
                        "f({} * {}) != f({}) * f({})",
                        s.render(a),
                        s.render(b),
                        s.render(a),
                        s.render(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The map `k ↦ k·1` out of `Zn`, the quotient map `R → R/I`, or the
    /// identity, whichever applies.
    pub fn canonical(source: Arc<FiniteRing>, target: Arc<FiniteRing>) -> Result<Self> {
        if Arc::ptr_eq(&source, &target) || source.describe() == target.describe() {
            let table = source.elements().collect();
            return Self::from_table(source, target, table);
        }
        if let Some((base, _)) = target.quotient_parts() {
            if Arc::ptr_eq(base, &source) || base.describe() == source.describe() {
                let table = source.elements().map(|x| target.class_of(x)).collect();
                return Self::from_table(source, target, table);
            }
        }
        if let super::RingKind::Zn(_) = source.kind {
            let mut table = Vec::with_capacity(source.size());
            let mut acc = target.zero();
            for _ in source.elements() {
                table.push(acc);
                acc = target.add(acc, target.one());
            }
            return Self::from_table(source, target, table);
        }
        Err(AlgebraError::NotAHomomorphism(format!(
            "no canonical map {} -> {}",
            source.describe(),
            target.describe()
        )))
    }

    /// The quotient map `R → R/I`.
    pub fn quotient_map(quotient: &Arc<FiniteRing>) -> Result<Self> {
        let (base, _) = quotient
            .quotient_parts()
            .ok_or_else(|| AlgebraError::NotAHomomorphism("target is not a quotient ring".into()))?;
        let table = base.elements().map(|x| quotient.class_of(x)).collect();
        Self::from_table(base.clone(), quotient.clone(), table)
    }

    /// Projection of a product ring onto one factor.
    pub fn projection(product: &Arc<FiniteRing>, side: super::Side) -> Result<Self> {
        let (l, r) = product
            .factors()
            .ok_or_else(|| AlgebraError::NotAHomomorphism("source is not a product".into()))?;
        let target = match side {
            super::Side::Left => l.clone(),
            super::Side::Right => r.clone(),
        };
        let table = product
            .elements()
            .map(|x| {
                let (a, b) = product.split(x);
                match side {
                    super::Side::Left => a,
                    super::Side::Right => b,
                }
            })
            .collect();
        Self::from_table(product.clone(), target, table)
    }

    /// Every unital homomorphism `source → target`, found by assigning images
    /// to an additive generating set of the source.
    pub fn enumerate(source: &Arc<FiniteRing>, target: &Arc<FiniteRing>) -> Vec<Self> {
        let mut gens = Vec::new();
        let mut span = ElemSet::singleton(source.size(), 0);
        for x in source.elements() {
            if !span.contains(x) {
                gens.push(x);
                span = additive_span(source, &gens);
            }
        }
        let mut out = Vec::new();
        let mut images = vec![0; gens.len()];
        loop {
            if let Some(table) = extend_additively(source, target, &gens, &images) {
                if let Ok(h) = Self::from_table(source.clone(), target.clone(), table) {
                    out.push(h);
                }
            }
            // odometer over target^|gens|
            let mut i = 0;
            loop {
                if i == images.len() {
                    return out;
                }
                images[i] += 1;
                if images[i] < target.size() {
                    break;
                }
                images[i] = 0;
                i += 1;
            }
        }
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x]
    }

    pub fn image(&self, set: &ElemSet) -> ElemSet {
        ElemSet::from_iter_in(self.target.size(), set.iter().map(|x| self.apply(x)))
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&ElemSet::full(self.source.size())).is_full()
    }

    pub fn kernel(&self) -> ElemSet {
        ElemSet::from_iter_in(self.source.size(), self.source.elements().filter(|&x| self.apply(x) == 0))
    }
}

fn additive_span(ring: &FiniteRing, gens: &[Elem]) -> ElemSet {
    let mut set = ElemSet::singleton(ring.size(), 0);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = ring.add(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Extends `gens[i] ↦ images[i]` additively; `None` when inconsistent.
fn extend_additively(source: &FiniteRing, target: &FiniteRing, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
    let mut table = vec![usize::MAX; source.size()];
    table[0] = 0;
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.add(x, g);
            let fy = target.add(table[x], img);
            if table[y] == usize::MAX {
                table[y] = fy;
                frontier.push(y);
            } else if table[y] != fy {
                return None;
            }
        }
    }
    Some(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_maps() {
        let z12 = FiniteRing::zn(12).unwrap();
        let z4 = FiniteRing::zn(4).unwrap();
        let f = RingHom::canonical(z12.clone(), z4.clone()).unwrap();
        assert!(f.is_surjective());
        assert_eq!(f.kernel().to_vec(), vec![0, 4, 8]);
        assert!(RingHom::canonical(z4, FiniteRing::zn(3).unwrap()).is_err());
    }

    #[test]
    fn enumerate_counts_homs() {
        let z6 = FiniteRing::zn(6).unwrap();
        let z2 = FiniteRing::zn(2).unwrap();
        assert_eq!(RingHom::enumerate(&z6, &z2).len(), 1);
        // Z2 x Z2 -> Z2 has exactly the two projections
        let p = FiniteRing::product(z2.clone(), z2.clone()).unwrap();
        assert_eq!(RingHom::enumerate(&p, &z2).len(), 2);
        // Z2 -> Z2 x Z2: only the diagonal
        assert_eq!(RingHom::enumerate(&z2, &p).len(), 1);
    }
}
