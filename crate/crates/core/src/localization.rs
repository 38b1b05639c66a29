//! Localization of finite rings.
//!
//! A multiplicative set `S` of a finite ring has a maximal multiple `t`, and
//! `Rt = Re` for an idempotent `e`. Inverting `S` kills exactly `(1-e)R`, so
//! `S⁻¹R ≅ eR ≅ R/(1-e)R`. The quotient is what gets materialized here; the
//! element `x` of the quotient corresponds to `e·x` in `eR`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cert::Certificate;
use crate::elemset::ElemSet;
use crate::error::{AlgebraError, Result};
use crate::ideal::{intersect_family, Ideal};
use crate::mulset::MultiplicativeSet;
use crate::ring::{Elem, FiniteRing};

/// Largest ring the formal-fraction oracle is run on.
pub const FRACTION_ORACLE_LIMIT: usize = 12;

#[derive(Debug, Clone)]
pub struct LocalizedRing {
    base: Arc<FiniteRing>,
    set: MultiplicativeSet,
    t: Elem,
    e: Elem,
    ring: Arc<FiniteRing>,
}

impl LocalizedRing {
    pub fn new(set: &MultiplicativeSet) -> Result<Self> {
        let base = set.ring().clone();
        let t = set.max_multiple().ok_or(AlgebraError::NoIdempotent)?;
        let e = base.idempotent_of(t)?;
        let ring = FiniteRing::quotient(base.clone(), &[base.sub(base.one(), e)])?;
        Ok(Self { base, set: set.clone(), t, e, ring })
    }

    pub fn base(&self) -> &Arc<FiniteRing> {
        &self.base
    }

    pub fn set(&self) -> &MultiplicativeSet {
        &self.set
    }

    /// The ring `S⁻¹R`.
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn max_multiple(&self) -> Elem {
        self.t
    }

    pub fn idempotent(&self) -> Elem {
        self.e
    }

    /// `r ↦ r/1`.
    pub fn project(&self, r: Elem) -> Elem {
        self.ring.class_of(r)
    }

    /// The element of `eR` standing for `x ∈ S⁻¹R`.
    pub fn in_er(&self, x: Elem) -> Elem {
        self.base.mul(self.e, self.ring.representative(x))
    }

    /// The carrier `eR` as a subset of the base ring.
    pub fn carrier(&self) -> ElemSet {
        self.base.principal(self.e).clone()
    }

    /// `a/s`, which must have `s ∈ S`.
    pub fn fraction(&self, a: Elem, s: Elem) -> Result<Elem> {
        if !self.set.contains(s) {
            return Err(AlgebraError::InvalidElement(format!("{} is not in S", self.base.render(s))));
        }
        let inv = self.ring.inverse(self.project(s)).expect("members of S become units");
        Ok(self.ring.mul(self.project(a), inv))
    }

    /// Renders `x` as a fraction over 1 with its `eR` numerator.
    pub fn render(&self, x: Elem) -> String {
        format!("{}/1", self.base.render(self.in_er(x)))
    }

    /// `S⁻¹I`.
    pub fn localize_ideal(&self, i: &Ideal) -> Ideal {
        let image = ElemSet::from_iter_in(self.ring.size(), i.elements().iter().map(|x| self.project(x)));
        Ideal::from_set_unchecked(&self.ring, image)
    }

    /// `{r ∈ R : r/1 ∈ J}`.
    pub fn contract(&self, j: &Ideal) -> Ideal {
        let pre = ElemSet::from_iter_in(self.base.size(), self.base.elements().filter(|&r| j.contains(self.project(r))));
        Ideal::from_set_unchecked(&self.base, pre)
    }

    /// `S⁻¹T = {t/s}`.
    pub fn localized_mulset(&self, other: &MultiplicativeSet) -> Result<MultiplicativeSet> {
        let b = &self.base;
        if self.set.elements().iter().any(|s| other.elements().iter().any(|t| b.mul(s, t) == 0)) {
            return Err(AlgebraError::ContainsZero);
        }
        let mut elems = ElemSet::empty(self.ring.size());
        for t in other.elements().iter() {
            for s in self.set.elements().iter() {
                elems.insert(self.fraction(t, s)?);
            }
        }
        MultiplicativeSet::from_elements(&self.ring, elems)
    }

    /// Checks that `r ↦ er` is a surjective ring map onto `eR` with `e` as
    /// identity, that members of `S` become units, and that the kernel is
    /// `{r : sr = 0 for some s ∈ S}`.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let b = &self.base;
        let e = self.e;
        for x in b.elements() {
            for y in b.elements() {
                if b.mul(e, b.add(x, y)) != b.add(b.mul(e, x), b.mul(e, y))
                    || b.mul(e, b.mul(x, y)) != b.mul(b.mul(e, x), b.mul(e, y))
                {
                    return Err(format!("r -> er fails at ({}, {})", b.render(x), b.render(y)));
                }
            }
        }
        for s in self.set.elements().iter() {
            if !self.ring.is_unit(self.project(s)) {
                return Err(format!("{} does not become a unit", b.render(s)));
            }
        }
        for r in b.elements() {
            let killed = self.project(r) == 0;
            let annihilated = self.set.elements().iter().any(|s| b.mul(s, r) == 0);
            if killed != annihilated {
                return Err(format!("kernel mismatch at {}", b.render(r)));
            }
            if self.project(r) != self.project(b.mul(e, r)) {
                return Err(format!("r and er differ in S^-1 R at {}", b.render(r)));
            }
        }
        Ok(())
    }
}

/// `S⁻¹(⋂ J_i) = ⋂ S⁻¹J_i` for an explicit family.
pub fn check_intersection_commutes(loc: &LocalizedRing, family: &[Ideal]) -> Certificate {
    let base = loc.base();
    let names: Vec<String> = family.iter().map(Ideal::render).collect();
    let mut cert = Certificate::new(
        "thm.localization-intersection",
        format!("{} | {} | [{}]", base.describe(), loc.set().describe(), names.join("; ")),
    );
    let lhs = loc.localize_ideal(&intersect_family(base, family));
    let localized: Vec<Ideal> = family.iter().map(|j| loc.localize_ideal(j)).collect();
    let rhs = intersect_family(loc.ring(), &localized);
    let extra = rhs.elements().difference(lhs.elements());
    cert.check(
        "S^-1(meet J_i) = meet S^-1 J_i",
        lhs == rhs,
        extra.first().map(|x| vec![loc.render(x)]).unwrap_or_default(),
    );
    cert
}

/// `S⁻¹(I:J) = (S⁻¹I : S⁻¹J)`, with the colon supplied by the caller so the
/// audit harness can substitute a broken one.
pub fn colon_commutes_with(
    loc: &LocalizedRing,
    i: &Ideal,
    j: &Ideal,
    colon: impl Fn(&Ideal, &Ideal) -> Ideal,
) -> Certificate {
    let mut cert = Certificate::new(
        "prop.colon",
        format!("{} | {} | I = {} | J = {}", loc.base().describe(), loc.set().describe(), i.render(), j.render()),
    );
    let lhs = loc.localize_ideal(&colon(i, j));
    let rhs = colon(&loc.localize_ideal(i), &loc.localize_ideal(j));
    let diff = lhs.elements().difference(rhs.elements()).union(&rhs.elements().difference(lhs.elements()));
    cert.check("S^-1(I:J) = (S^-1 I : S^-1 J)", lhs == rhs, diff.first().map(|x| vec![loc.render(x)]).unwrap_or_default());
    cert
}

pub fn check_colon_commutes(loc: &LocalizedRing, i: &Ideal, j: &Ideal) -> Certificate {
    colon_commutes_with(loc, i, j, Ideal::colon)
}

/// `S⁻¹I ∩ R = (I : t)`.
pub fn check_contraction(loc: &LocalizedRing, i: &Ideal) -> Certificate {
    let mut cert = Certificate::new(
        "prop.contraction",
        format!("{} | {} | I = {}", loc.base().describe(), loc.set().describe(), i.render()),
    );
    let lhs = loc.contract(&loc.localize_ideal(i));
    let rhs = i.colon_elem(loc.max_multiple());
    let diff = lhs.elements().difference(rhs.elements()).union(&rhs.elements().difference(lhs.elements()));
    cert.check(
        "S^-1 I meet R = (I : t)",
        lhs == rhs,
        diff.first().map(|x| vec![loc.base().render(x)]).unwrap_or_default(),
    );
    cert
}

/// Builds `S⁻¹R` as classes of pairs `(a, s)` under `(a,s) ~ (b,u)` iff
/// `v(au - bs) = 0` for some `v ∈ S`, and checks that `a/s ↦ (a/1)(s/1)⁻¹`
/// is a well-defined ring isomorphism onto the materialized localization.
pub fn fraction_oracle(loc: &LocalizedRing) -> Result<Certificate> {
    let b = loc.base();
    if b.size() > FRACTION_ORACLE_LIMIT {
        return Err(AlgebraError::TooLarge { size: b.size(), bound: FRACTION_ORACLE_LIMIT });
    }
    let mut cert = Certificate::new("oracle.fractions", format!("{} | {}", b.describe(), loc.set().describe()));
    let s: Vec<Elem> = loc.set().elements().to_vec();
    let pairs: Vec<(Elem, Elem)> = b.elements().flat_map(|a| s.iter().map(move |&u| (a, u))).collect();
    let equiv = |(a, u): (Elem, Elem), (c, w): (Elem, Elem)| {
        let d = b.sub(b.mul(a, w), b.mul(c, u));
        s.iter().any(|&v| b.mul(v, d) == 0)
    };
    // class index of each pair; the relation is an equivalence, so the first
    // matching representative suffices
    let mut reps: Vec<(Elem, Elem)> = Vec::new();
    let mut class: HashMap<(Elem, Elem), usize> = HashMap::new();
    for &p in &pairs {
        let c = match reps.iter().position(|&r| equiv(r, p)) {
            Some(c) => c,
            None => {
                reps.push(p);
                reps.len() - 1
            }
        };
        class.insert(p, c);
    }
    let phi = |(a, u): (Elem, Elem)| loc.fraction(a, u).expect("u in S");
    let image: Vec<Elem> = reps.iter().map(|&p| phi(p)).collect();
    let mut well_defined = None;
    for &p in &pairs {
        if phi(p) != image[class[&p]] {
            well_defined = Some(p);
            break;
        }
    }
    let show = |(a, u): (Elem, Elem)| format!("{}/{}", b.render(a), b.render(u));
    cert.check("the map on fractions is well defined", well_defined.is_none(), well_defined.map(|p| vec![show(p)]).unwrap_or_default());
    cert.check(
        "fraction classes and S^-1 R have the same size",
        reps.len() == loc.ring().size(),
        vec![format!("{} classes", reps.len()), format!("{} elements", loc.ring().size())],
    );
    let distinct = ElemSet::from_iter_in(loc.ring().size(), image.iter().copied());
    cert.check("the map is a bijection", distinct.is_full() && reps.len() == loc.ring().size(), vec![]);
    let mut hom_failure = None;
    'outer: for &(a, u) in &reps {
        for &(c, w) in &reps {
            let sum = (b.add(b.mul(a, w), b.mul(c, u)), b.mul(u, w));
            let prod = (b.mul(a, c), b.mul(u, w));
            let r = loc.ring();
            if phi(sum) != r.add(phi((a, u)), phi((c, w))) || phi(prod) != r.mul(phi((a, u)), phi((c, w))) {
                hom_failure = Some(((a, u), (c, w)));
                break 'outer;
            }
        }
    }
    cert.check(
        "the map respects + and *",
        hom_failure.is_none(),
        hom_failure.map(|(p, q)| vec![show(p), show(q)]).unwrap_or_default(),
    );
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::all_ideals;
    use crate::mulset::enumerate_multiplicative_sets;

    fn z(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n).unwrap()
    }

    fn loc(ring: &Arc<FiniteRing>, gens: &[Elem]) -> LocalizedRing {
        LocalizedRing::new(&MultiplicativeSet::close(ring, gens).unwrap()).unwrap()
    }

    #[test]
    fn localize_examples() {
        let z6 = z(6);
        let l = loc(&z6, &[3]);
        assert_eq!(l.idempotent(), 3);
        assert_eq!(l.carrier().to_vec(), vec![0, 3]);
        assert_eq!(l.ring().size(), 2);
        assert_eq!(loc(&z6, &[5]).ring().size(), 6);
        assert_eq!(loc(&z(4), &[3]).ring().size(), 4);
    }

    #[test]
    fn localize_ideal_and_contract_examples() {
        let z6 = z(6);
        let l = loc(&z6, &[3]);
        assert!(l.localize_ideal(&Ideal::principal(&z6, 2)).is_zero());
        assert!(!l.localize_ideal(&Ideal::principal(&z6, 3)).is_proper());
        let c = l.contract(&l.localize_ideal(&Ideal::zero(&z6)));
        assert_eq!(c.elements().to_vec(), vec![0, 2, 4]);
        assert_eq!(c, Ideal::zero(&z6).colon_elem(3));
    }

    #[test]
    fn colon_example() {
        let z6 = z(6);
        let l = loc(&z6, &[3]);
        assert!(check_colon_commutes(&l, &Ideal::zero(&z6), &Ideal::principal(&z6, 2)).passed());
    }

    #[test]
    fn localized_mulset_examples() {
        let z6 = z(6);
        let l = loc(&z6, &[3]);
        let s = MultiplicativeSet::close(&z6, &[3]).unwrap();
        let image = l.localized_mulset(&s).unwrap();
        assert_eq!(image.elements().to_vec(), vec![l.ring().one()]);
        assert_eq!(l.in_er(l.ring().one()), 3);
        let trivial = loc(&z6, &[]);
        let t = MultiplicativeSet::close(&z6, &[4]).unwrap();
        assert_eq!(trivial.localized_mulset(&t).unwrap().len(), t.len());
    }

    #[test]
    fn fraction_oracle_agrees_on_small_rings() {
        for n in 2..=12 {
            let ring = z(n);
            for s in enumerate_multiplicative_sets(&ring, 64).unwrap() {
                let l = LocalizedRing::new(&s).unwrap();
                l.verify().unwrap();
                let cert = fraction_oracle(&l).unwrap();
                assert!(cert.passed(), "{cert:?}");
            }
        }
    }

    #[test]
    fn theorems_hold_on_z12() {
        let ring = z(12);
        let ideals = all_ideals(&ring).unwrap();
        for s in enumerate_multiplicative_sets(&ring, 64).unwrap() {
            let l = LocalizedRing::new(&s).unwrap();
            for i in &ideals {
                assert!(check_contraction(&l, i).passed());
                for j in &ideals {
                    assert!(check_intersection_commutes(&l, &[i.clone(), j.clone()]).passed());
                    assert!(check_colon_commutes(&l, i, j).passed());
                }
            }
        }
    }

    #[test]
    fn broken_colon_is_caught() {
        let z6 = z(6);
        let l = loc(&z6, &[3]);
        // scanning one element short of the ring is not compatible with localization
        let short = |i: &Ideal, j: &Ideal| {
            let r = i.ring();
            let set = ElemSet::from_iter_in(r.size(), (0..r.size() - 1).filter(|&x| j.elements().iter().all(|y| i.contains(r.mul(x, y)))));
            Ideal::from_set_unverified(r, set)
        };
        let cert = colon_commutes_with(&l, &Ideal::whole(&z6), &Ideal::whole(&z6), short);
        assert!(!cert.passed());
        assert!(!cert.witness.is_empty());
    }
}
