use std::sync::Arc;

use super::{render_gens, Elem, ElemValue, FiniteRing};
use crate::elemset::ElemSet;
use crate::error::{AlgebraError, Result};

/// How a module sits relative to its ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleKind {
    /// `R / I`, elements are cosets labelled by their smallest representative.
    Quotient { ideal: ElemSet, gens: Vec<Elem> },
    /// The ideal `I` itself as a submodule of `R`.
    Ideal { ideal: ElemSet, gens: Vec<Elem> },
}

/// A finite `R`-module realized inside `R`: either a cyclic quotient `R/I`
/// or an ideal `I`.
#[derive(Debug)]
pub struct RingModule {
    ring: Arc<FiniteRing>,
    kind: ModuleKind,
    /// Ring element standing for each module element.
    labels: Vec<Elem>,
    /// Ring element -> module element, where defined.
    project: Vec<Option<u32>>,
}

impl RingModule {
    /// `R` as a module over itself.
    pub fn regular(ring: Arc<FiniteRing>) -> Arc<Self> {
        Self::quotient(ring, &[]).expect("R/0 is a module")
    }

    pub fn quotient(ring: Arc<FiniteRing>, gens: &[Elem]) -> Result<Arc<Self>> {
        let ideal = crate::ideal::span_set(&ring, gens)?;
        let n = ring.size();
        let mut project = vec![None; n];
        let mut labels = Vec::new();
        for x in 0..n {
            if project[x].is_some() {
                continue;
            }
            let c = labels.len() as u32;
            labels.push(x);
            for i in ideal.iter() {
                project[ring.add(x, i)] = Some(c);
            }
        }
        Ok(Arc::new(Self { ring, kind: ModuleKind::Quotient { ideal, gens: gens.to_vec() }, labels, project }))
    }

    pub fn ideal(ring: Arc<FiniteRing>, gens: &[Elem]) -> Result<Arc<Self>> {
        let ideal = crate::ideal::span_set(&ring, gens)?;
        let labels = ideal.to_vec();
        let mut project = vec![None; ring.size()];
        for (i, &x) in labels.iter().enumerate() {
            project[x] = Some(i as u32);
        }
        Ok(Arc::new(Self { ring, kind: ModuleKind::Ideal { ideal, gens: gens.to_vec() }, labels, project }))
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, m: usize) -> Elem {
        self.labels[m]
    }

    fn proj(&self, r: Elem) -> usize {
        self.project[r].expect("module operations stay inside the module") as usize
    }

    pub fn add(&self, m: usize, n: usize) -> usize {
        self.proj(self.ring.add(self.labels[m], self.labels[n]))
    }

    pub fn neg(&self, m: usize) -> usize {
        self.proj(self.ring.neg(self.labels[m]))
    }

    /// Scalar action `r · m`.
    pub fn smul(&self, r: Elem, m: usize) -> usize {
        self.proj(self.ring.mul(r, self.labels[m]))
    }

    /// Exhaustive check of the module axioms.
    pub fn verify_axioms(&self) -> std::result::Result<(), String> {
        let r = &self.ring;
        for m in 0..self.size() {
            if self.smul(r.one(), m) != m {
                return Err(format!("1·m != m at {m}"));
            }
            for n in 0..self.size() {
                if self.add(m, n) != self.add(n, m) {
                    return Err("addition not commutative".into());
                }
                for a in r.elements() {
                    if self.smul(a, self.add(m, n)) != self.add(self.smul(a, m), self.smul(a, n)) {
                        return Err("action not additive".into());
                    }
                }
            }
            for a in r.elements() {
                for b in r.elements() {
                    if self.smul(r.mul(a, b), m) != self.smul(a, self.smul(b, m))
                        || self.smul(r.add(a, b), m) != self.add(self.smul(a, m), self.smul(b, m))
                    {
                        return Err("action not compatible with ring operations".into());
                    }
                }
            }
        }
        Ok(())
    }

    /// Smallest submodule containing `gens`.
    pub fn span(&self, gens: &[usize]) -> ElemSet {
        let mut set = ElemSet::singleton(self.size(), 0);
        for &g in gens {
            let cyclic: Vec<usize> = self.ring.elements().map(|a| self.smul(a, g)).collect();
            let current = set.to_vec();
            for x in current {
                for &c in &cyclic {
                    set.insert(self.add(x, c));
                }
            }
        }
        set
    }

    /// All submodules, cyclic ones first, closed under sums.
    pub fn submodules(&self) -> Vec<ElemSet> {
        let mut found: Vec<ElemSet> = Vec::new();
        for m in 0..self.size() {
            let s = self.span(&[m]);
            if !found.contains(&s) {
                found.push(s);
            }
        }
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let sum = self.sum(&found[i], &found[j]);
                if !found.contains(&sum) {
                    found.push(sum);
                }
            }
            i += 1;
        }
        found.sort();
        found
    }

    fn sum(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut out = ElemSet::empty(self.size());
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    pub fn value_of(&self, m: usize) -> ElemValue {
        self.ring.value_of(self.labels[m])
    }

    pub fn element(&self, v: &ElemValue) -> Result<usize> {
        let r = self.ring.element(v)?;
        self.project[r]
            .map(|i| i as usize)
            .ok_or_else(|| AlgebraError::InvalidElement(format!("{v} is not in the module {}", self.describe())))
    }

    /// Module expression in the CLI grammar: `R`, `R / (gens)` or `(gens)`.
    pub fn describe(&self) -> String {
        match &self.kind {
            ModuleKind::Quotient { gens, .. } if gens.is_empty() => self.ring.describe(),
            ModuleKind::Quotient { gens, .. } => {
                let base = if self.ring.factors().is_some() {
                    format!("({})", self.ring.describe())
                } else {
                    self.ring.describe()
                };
                format!("{base} / {}", render_gens(&self.ring, gens))
            }
            ModuleKind::Ideal { gens, .. } => render_gens(&self.ring, gens),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_axioms_hold_for_quotients_and_ideals() {
        let z8 = FiniteRing::zn(8).unwrap();
        for m in [
            RingModule::regular(z8.clone()),
            RingModule::quotient(z8.clone(), &[4]).unwrap(),
            RingModule::ideal(z8.clone(), &[2]).unwrap(),
        ] {
            m.verify_axioms().unwrap();
        }
        assert_eq!(RingModule::quotient(z8.clone(), &[4]).unwrap().size(), 4);
        assert_eq!(RingModule::ideal(z8, &[2]).unwrap().size(), 4);
    }

    #[test]
    fn submodules_of_z4_are_its_ideals() {
        let z4 = FiniteRing::zn(4).unwrap();
        let m = RingModule::regular(z4);
        let subs = m.submodules();
        assert_eq!(subs.len(), 3);
    }
}
