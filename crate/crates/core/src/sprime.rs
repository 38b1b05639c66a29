//! S-prime ideals, strongly prime ideals, S-minimal primes and the
//! separation lemma over finite rings.

use std::sync::Arc;

use serde::Serialize;

use crate::cert::Certificate;
use crate::elemset::ElemSet;
use crate::error::{AlgebraError, Result};
use crate::ideal::{self, all_ideals, Ideal};
use crate::mulset::MultiplicativeSet;
use crate::ring::{Elem, FiniteRing, Side};

/// The principal-family test for strong primality enumerates every subset of
/// the complement up to this ring size; past it the monotone reduction is used.
pub const SUBSET_SCAN_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SPrimeMode {
    /// `ab ∈ P ⇒ sa ∈ P or sb ∈ P` over all pairs.
    Definitional,
    /// `(P : s)` is prime.
    ColonPrime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPrimeWitness {
    pub ideal: Ideal,
    pub s: Elem,
    pub mode: SPrimeMode,
}

fn ensure_disjoint(p: &Ideal, s: &MultiplicativeSet) -> Result<()> {
    if s.meets(p) {
        Err(AlgebraError::NotDisjoint)
    } else {
        Ok(())
    }
}

/// The smallest `s ∈ S` witnessing that `P` is S-prime, if any.
pub fn is_s_prime(p: &Ideal, s: &MultiplicativeSet, mode: SPrimeMode) -> Result<Option<SPrimeWitness>> {
    ensure_disjoint(p, s)?;
    let r = p.ring();
    let found = match mode {
        SPrimeMode::Definitional => {
            let pairs: Vec<(Elem, Elem)> = r
                .elements()
                .flat_map(|a| (a..r.size()).map(move |b| (a, b)))
                .filter(|&(a, b)| p.contains(r.mul(a, b)))
                .collect();
            s.elements()
                .iter()
                .find(|&x| pairs.iter().all(|&(a, b)| p.contains(r.mul(x, a)) || p.contains(r.mul(x, b))))
        }
        SPrimeMode::ColonPrime => s.elements().iter().find(|&x| p.colon_elem(x).is_prime()),
    };
    Ok(found.map(|x| SPrimeWitness { ideal: p.clone(), s: x, mode }))
}

/// Every ideal disjoint from `S` that is S-prime, with its smallest witness.
pub fn s_prime_ideals(ring: &Arc<FiniteRing>, s: &MultiplicativeSet) -> Result<Vec<SPrimeWitness>> {
    let mut out = Vec::new();
    for p in all_ideals(ring)? {
        if s.meets(&p) {
            continue;
        }
        if let Some(w) = is_s_prime(&p, s, SPrimeMode::ColonPrime)? {
            out.push(w);
        }
    }
    Ok(out)
}

fn inclusion_minimal(ideals: Vec<Ideal>) -> Vec<Ideal> {
    let keep: Vec<bool> = ideals
        .iter()
        .map(|p| !ideals.iter().any(|q| q != p && q.is_subset(p)))
        .collect();
    ideals.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect()
}

/// Inclusion-minimal S-prime ideals containing `i`.
pub fn s_minimal_primes_over(i: &Ideal, s: &MultiplicativeSet) -> Result<Vec<Ideal>> {
    ensure_disjoint(i, s)?;
    let primes: Vec<Ideal> = s_prime_ideals(i.ring(), s)?
        .into_iter()
        .map(|w| w.ideal)
        .filter(|p| i.is_subset(p))
        .collect();
    Ok(inclusion_minimal(primes))
}

/// The S-minimal primes of the ring, sorted by (cardinality, elements).
pub fn s_minimal_primes(ring: &Arc<FiniteRing>, s: &MultiplicativeSet) -> Result<Vec<Ideal>> {
    s_minimal_primes_over(&Ideal::zero(ring), s)
}

/// Strong primality via the complement being strongly multiplicative.
pub fn is_strongly_prime(p: &Ideal) -> Result<bool> {
    Ok(MultiplicativeSet::from_prime_complement(p)?.is_strongly_multiplicative())
}

/// Strong primality straight from the principal-family definition: whenever
/// `⋂ aR ⊆ P` for a family of elements, some member lies in `P`. Families
/// meeting `P` satisfy this trivially, so only subsets of `R ∖ P` matter.
pub fn is_strongly_prime_by_families(p: &Ideal) -> Result<bool> {
    if !p.is_prime() {
        return Err(AlgebraError::NotPrime);
    }
    let r = p.ring();
    let outside = p.elements().complement().to_vec();
    if r.size() > SUBSET_SCAN_LIMIT {
        // the intersection only shrinks as the family grows
        let mut meet = ElemSet::full(r.size());
        for &a in &outside {
            meet.intersect_with(r.principal(a));
        }
        return Ok(!meet.is_subset(p.elements()));
    }
    fn walk(r: &FiniteRing, p: &Ideal, outside: &[Elem], k: usize, meet: &ElemSet, nonempty: bool) -> bool {
        if nonempty && meet.is_subset(p.elements()) {
            return false;
        }
        (k..outside.len()).all(|j| walk(r, p, outside, j + 1, &meet.intersection(r.principal(outside[j])), true))
    }
    Ok(walk(r, p, &outside, 0, &ElemSet::full(r.size()), false))
}

/// Every prime is maximal and strongly prime.
pub fn is_strongly_zero_dimensional(ring: &Arc<FiniteRing>) -> Result<bool> {
    for p in ideal::prime_ideals(ring)? {
        if !p.is_maximal() || !is_strongly_prime(&p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates the equivalent conditions for strong zero-dimensionality
/// separately and checks that they agree.
pub fn check_zero_dimensional_equivalences(ring: &Arc<FiniteRing>) -> Result<Certificate> {
    let primes = ideal::prime_ideals(ring)?;
    let maximals = ideal::maximal_ideals(ring)?;
    let mut cert = Certificate::new("cor.strongly-zero-dimensional", ring.describe());
    let mut strongly = Vec::new();
    let mut families = Vec::new();
    let mut complements = Vec::new();
    for p in &primes {
        strongly.push(is_strongly_prime(p)?);
        families.push(is_strongly_prime_by_families(p)?);
        complements.push(MultiplicativeSet::from_prime_complement(p)?.is_strongly_multiplicative_def().is_some());
    }
    let c1 = strongly.iter().all(|&b| b);
    let c2 = primes.iter().all(Ideal::is_maximal)
        && maximals.iter().all(|m| primes.iter().position(|p| p == m).is_some_and(|k| strongly[k]));
    let c4 = families.iter().all(|&b| b);
    // finitely many maximal ideals holds for any finite ring
    let c5 = primes.iter().all(Ideal::is_maximal);
    let c6 = complements.iter().all(|&b| b);
    cert.check("strongly zero-dimensional", c1, vec![]);
    cert.check("(1) <=> (2): primes maximal, maximals strongly prime", c1 == c2, vec![]);
    cert.check("(1) <=> (4): principal-family property", c1 == c4, vec![]);
    cert.check("(1) <=> (5): zero-dimensional, quasi semi-local", c1 == c5, vec![]);
    cert.check("(1) <=> (6): every prime complement strongly multiplicative", c1 == c6, vec![]);
    for (k, p) in primes.iter().enumerate() {
        cert.check(
            format!("{} strongly prime by both tests", p.render()),
            strongly[k] == families[k] && strongly[k] == complements[k],
            vec![p.render()],
        );
    }
    Ok(cert)
}

/// The non-primeness consequences for S-minimal primes.
pub fn check_s_minimal_theorem(ring: &Arc<FiniteRing>, s: &MultiplicativeSet) -> Result<Certificate> {
    let mut cert = Certificate::new("thm.s-minimal", format!("{} | {}", ring.describe(), s.describe()));
    let minimal = s_minimal_primes(ring, s)?;
    let mut meet = ElemSet::full(ring.size());
    for x in s.elements().iter() {
        meet.intersect_with(ring.principal(x));
    }
    let in_units = s.is_subset_of_units();
    cert.check("S-minimal primes exist", !minimal.is_empty(), vec![]);
    for p in &minimal {
        for x in s.elements().iter() {
            cert.check(
                format!("sP = P for P = {}, s = {}", p.render(), ring.render(x)),
                p.scale(x) == *p,
                vec![p.render(), ring.render(x)],
            );
        }
        cert.check(format!("{} inside the meet of sR", p.render()), p.elements().is_subset(&meet), vec![p.render()]);
        if !in_units {
            let w = p.non_prime_witness();
            cert.check(
                format!("{} is not prime", p.render()),
                w.is_some(),
                w.map(|(a, b)| vec![ring.render(a), ring.render(b)]).unwrap_or_else(|| vec![p.render()]),
            );
        }
    }
    if in_units {
        let minimal_primes = ideal::minimal_primes(ring)?;
        for w in s_prime_ideals(ring, s)? {
            cert.check(format!("S-prime {} is prime", w.ideal.render()), w.ideal.is_prime(), vec![w.ideal.render()]);
        }
        cert.check("S-minimal primes are the minimal primes", minimal == minimal_primes, vec![]);
    }
    Ok(cert)
}

#[derive(Debug, Clone)]
pub struct Algorithm1Output {
    /// Which factor carries the units in the saturation.
    pub side: Side,
    /// Each generated ideal with a pair `(a, b)`, `ab ∈ P`, `a, b ∉ P`.
    pub ideals: Vec<(Ideal, Option<(Elem, Elem)>)>,
}

/// Generates the S-minimal primes of `R₁ × R₂` from the minimal primes of
/// the factor that the saturation leaves whole.
pub fn algorithm1(ring: &Arc<FiniteRing>, s: &MultiplicativeSet) -> Result<Algorithm1Output> {
    let na = |why: &str| Err(AlgebraError::NotApplicable(why.into()));
    let Some((r1, r2)) = ring.factors() else { return na("ring is not a product") };
    if r1.is_field() || r2.is_field() {
        return na("a factor is a field");
    }
    if !s.is_strongly_multiplicative() {
        return na("S is not strongly multiplicative");
    }
    if s.is_subset_of_units() {
        return na("S consists of units");
    }
    let sat = s.saturation_set();
    let left_form = ElemSet::from_iter_in(
        ring.size(),
        r1.units().iter().flat_map(|a| r2.elements().map(move |b| ring.pair(a, b))),
    );
    let right_form = ElemSet::from_iter_in(
        ring.size(),
        r1.elements().flat_map(|a| r2.units().iter().map(move |b| ring.pair(a, b))).collect::<Vec<_>>(),
    );
    let (side, factor) = if sat == left_form {
        (Side::Left, r1)
    } else if sat == right_form {
        (Side::Right, r2)
    } else {
        return na("saturation is neither u(R1) x R2 nor R1 x u(R2)");
    };
    let mut ideals = Vec::new();
    for p in ideal::minimal_primes(factor)? {
        let elems = ElemSet::from_iter_in(
            ring.size(),
            p.elements().iter().map(|x| match side {
                Side::Left => ring.pair(x, 0),
                Side::Right => ring.pair(0, x),
            }),
        );
        let lifted = Ideal::from_set(ring, elems)?;
        let w = lifted.non_prime_witness();
        ideals.push((lifted, w));
    }
    ideals.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Algorithm1Output { side, ideals })
}

#[derive(Debug, Clone)]
pub struct KrullResult {
    pub found: Ideal,
    pub is_maximal_ideal: bool,
    /// Ascending trace from `I`, each step the smallest strictly larger
    /// member of Ω.
    pub chain: Vec<Ideal>,
    /// Every maximal element of Ω.
    pub maximal_elements: Vec<Ideal>,
}

/// Maximal elements of Ω = {J ⊇ I : J ∩ S = ∅}.
pub fn strong_krull(s: &MultiplicativeSet, i: &Ideal) -> Result<KrullResult> {
    ensure_disjoint(i, s)?;
    let omega: Vec<Ideal> = all_ideals(i.ring())?
        .into_iter()
        .filter(|j| i.is_subset(j) && !s.meets(j))
        .collect();
    let maximal_elements: Vec<Ideal> = omega
        .iter()
        .filter(|j| !omega.iter().any(|k| k != *j && j.is_subset(k)))
        .cloned()
        .collect();
    let mut chain = vec![i.clone()];
    loop {
        let current = chain.last().expect("chain starts at I");
        // omega is sorted, so the first strict superset is the smallest
        match omega.iter().find(|j| *j != current && current.is_subset(j)) {
            Some(next) => chain.push(next.clone()),
            None => break,
        }
    }
    let found = chain.last().expect("nonempty").clone();
    Ok(KrullResult { is_maximal_ideal: found.is_maximal(), found, chain, maximal_elements })
}

/// For an S-prime `P` and each `s ∈ S`, the chain `P ⊇ sP ⊇ s²P ⊇ …` until it
/// stabilizes: each link and the final intersection must be S-prime.
pub fn check_chain_intersection(p: &Ideal, s: &MultiplicativeSet) -> Result<Certificate> {
    let ring = p.ring();
    let mut cert = Certificate::new(
        "sprime.chain-intersection",
        format!("{} | {} | P = {}", ring.describe(), s.describe(), p.render()),
    );
    if is_s_prime(p, s, SPrimeMode::ColonPrime)?.is_none() {
        cert.check("P is S-prime", false, vec![p.render()]);
        return Ok(cert);
    }
    for x in s.elements().iter() {
        let mut chain = vec![p.clone()];
        loop {
            let next = chain.last().expect("nonempty").scale(x);
            if next == *chain.last().expect("nonempty") {
                break;
            }
            chain.push(next);
        }
        let meet = ideal::intersect_family(ring, &chain);
        for link in &chain {
            let ok = is_s_prime(link, s, SPrimeMode::ColonPrime)?.is_some();
            cert.check(format!("{} S-prime (s = {})", link.render(), ring.render(x)), ok, vec![link.render()]);
        }
        let ok = is_s_prime(&meet, s, SPrimeMode::ColonPrime)?.is_some();
        cert.check(format!("chain meet {} S-prime", meet.render()), ok, vec![meet.render()]);
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mulset::enumerate_multiplicative_sets;

    fn z(n: u64) -> Arc<FiniteRing> {
        FiniteRing::zn(n).unwrap()
    }

    #[test]
    fn zero_is_not_s_prime_in_z4() {
        let z4 = z(4);
        let s = MultiplicativeSet::close(&z4, &[3]).unwrap();
        for mode in [SPrimeMode::Definitional, SPrimeMode::ColonPrime] {
            assert!(is_s_prime(&Ideal::zero(&z4), &s, mode).unwrap().is_none());
        }
        let meets = Ideal::whole(&z4);
        assert_eq!(is_s_prime(&meets, &s, SPrimeMode::ColonPrime).unwrap_err(), AlgebraError::NotDisjoint);
    }

    #[test]
    fn modes_agree_on_small_rings() {
        for ring in [z(8), z(12), FiniteRing::product(z(2), z(4)).unwrap(), FiniteRing::boolean(3).unwrap()] {
            for s in enumerate_multiplicative_sets(&ring, 64).unwrap() {
                for p in all_ideals(&ring).unwrap() {
                    if s.meets(&p) {
                        continue;
                    }
                    let a = is_s_prime(&p, &s, SPrimeMode::Definitional).unwrap().map(|w| w.s);
                    let b = is_s_prime(&p, &s, SPrimeMode::ColonPrime).unwrap().map(|w| w.s);
                    assert_eq!(a, b, "{} {:?} {}", ring.describe(), s, p);
                }
            }
        }
    }

    #[test]
    fn strong_primality() {
        let z6 = z(6);
        assert!(is_strongly_prime(&Ideal::principal(&z6, 2)).unwrap());
        assert_eq!(is_strongly_prime(&Ideal::zero(&z6)).unwrap_err(), AlgebraError::NotPrime);
        for ring in [z6, z(30), FiniteRing::boolean(4).unwrap()] {
            assert!(is_strongly_zero_dimensional(&ring).unwrap());
            assert!(check_zero_dimensional_equivalences(&ring).unwrap().passed());
        }
    }

    #[test]
    fn s_minimal_examples() {
        let p = FiniteRing::product(z(4), z(9)).unwrap();
        let s = MultiplicativeSet::close(&p, &[p.pair(1, 0)]).unwrap();
        let minimal = s_minimal_primes(&p, &s).unwrap();
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].render(), "2Z4 x 0");
        assert!(check_s_minimal_theorem(&p, &s).unwrap().passed());

        let z6 = z(6);
        let s = MultiplicativeSet::close(&z6, &[3]).unwrap();
        for q in s_minimal_primes(&z6, &s).unwrap() {
            assert!(q.elements().is_subset(z6.principal(3)));
        }
        assert!(check_s_minimal_theorem(&z6, &s).unwrap().passed());
    }

    #[test]
    fn algorithm1_examples() {
        let p = FiniteRing::product(z(4), z(9)).unwrap();
        let s = MultiplicativeSet::close(&p, &[p.pair(1, 0)]).unwrap();
        let out = algorithm1(&p, &s).unwrap();
        assert_eq!(out.side, Side::Left);
        assert_eq!(out.ideals.len(), 1);
        let (ideal, w) = &out.ideals[0];
        assert_eq!(ideal.render(), "2Z4 x 0");
        assert_eq!(w.unwrap(), (p.pair(0, 1), p.pair(1, 0)));

        let q = FiniteRing::product(z(4), z(4)).unwrap();
        let s = MultiplicativeSet::close(&q, &[q.pair(0, 1)]).unwrap();
        let out = algorithm1(&q, &s).unwrap();
        assert_eq!(out.side, Side::Right);
        assert_eq!(out.ideals[0].0.render(), "0 x 2Z4");

        let f = FiniteRing::product(z(2), z(4)).unwrap();
        let s = MultiplicativeSet::close(&f, &[f.pair(1, 0)]).unwrap();
        assert!(matches!(algorithm1(&f, &s), Err(AlgebraError::NotApplicable(_))));
    }

    #[test]
    fn krull_examples() {
        let z6 = z(6);
        let s = MultiplicativeSet::close(&z6, &[3]).unwrap();
        let k = strong_krull(&s, &Ideal::zero(&z6)).unwrap();
        assert_eq!(k.found.elements().to_vec(), vec![0, 2, 4]);
        assert!(k.is_maximal_ideal);
        let z4 = z(4);
        let s = MultiplicativeSet::close(&z4, &[3]).unwrap();
        let k = strong_krull(&s, &Ideal::zero(&z4)).unwrap();
        assert_eq!(k.found.elements().to_vec(), vec![0, 2]);
    }

    #[test]
    fn chain_intersections_stay_s_prime() {
        let p = FiniteRing::product(z(4), z(9)).unwrap();
        let s = MultiplicativeSet::close(&p, &[p.pair(1, 0)]).unwrap();
        for w in s_prime_ideals(&p, &s).unwrap() {
            assert!(check_chain_intersection(&w.ideal, &s).unwrap().passed());
        }
    }
}
