//! The claim registry and the corpus sweep that evaluates it.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smul_core::cxlab::{self, oracle};
use smul_core::ideal::{self, all_ideals, maximal_ideals, prime_ideals};
use smul_core::localization::{self, LocalizedRing};
use smul_core::mulset::enumerate_multiplicative_sets;
use smul_core::sprime::{self, SPrimeMode};
use smul_core::zint::{self, IntFamily, IntMulSet, ParametricChain, PrincipalIdeal};
use smul_core::{AlgebraError, Certificate, Elem, ElemSet, FiniteRing, Ideal, MultiplicativeSet, RingHom, SaturationForm, Verdict};

use crate::corpus::{self, CorpusRing};
use crate::report::{AuditReport, ClaimRecord};

/// Sampled multiplicative sets per ring.
pub const SET_CAP: usize = 12;
/// Sampled ideal pairs per (ring, set).
pub const PAIR_CAP: usize = 10;
/// Sampled three-ideal families per (ring, set).
pub const TRIPLE_CAP: usize = 3;
/// Sampled ideals per (ring, set) for the per-ideal claims.
pub const PROBE_CAP: usize = 8;
/// Second sets `T` per (ring, set) for the two-set claims.
pub const OTHER_CAP: usize = 3;
/// Sets sampled per ring in the transport constructions.
pub const TRANSPORT_SET_CAP: usize = 4;
/// Trivial extensions in the transport claim may reach this size.
pub const TRANSPORT_RING_LIMIT: usize = 128;
/// Amalgamations sampled for the transport claim.
pub const TRANSPORT_AMALGAM_CAP: usize = 64;
/// Coefficient bound of the polynomial oracle gate.
pub const GATE_COEFF_BOUND: i64 = 64;
/// Dense random polynomials added to the gate.
pub const GATE_SAMPLES: usize = 256;
/// `oracle.fractions` builds every fraction pair, so it stays on small rings.
pub const FRACTION_RING_LIMIT: usize = 12;

pub const OUT_OF_SCOPE_DOC: &str = "docs/out-of-scope.md";

#[derive(Debug, Clone)]
pub struct AuditConfig {
    /// Rings larger than this are recorded as SKIP.
    pub budget: usize,
    pub seed: u64,
    /// Index bound for the polynomial replays.
    pub depth: u32,
    /// Replace the colon operation with a deliberately broken one.
    pub mutate_colon: bool,
    /// Claim ids to run; empty runs everything.
    pub only: Vec<String>,
    pub threads: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            budget: corpus::CORPUS_LIMIT,
            seed: 0,
            depth: cxlab::DEFAULT_INDEX_BOUND,
            mutate_colon: false,
            only: Vec::new(),
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl AuditConfig {
    fn enabled(&self, id: &str) -> bool {
        self.only.is_empty() || self.only.iter().any(|o| o == id)
    }
}

type Res = Result<Vec<Certificate>, AlgebraError>;

/// How a claim is instantiated.
pub enum Check {
    /// Once per corpus ring.
    Ring(fn(&RingCase, &Ctx) -> Res),
    /// Once per sampled (ring, multiplicative set).
    Set(fn(&RingCase, &SetCase, &Ctx) -> Res),
    /// Self-contained: constructions, the integers, replays.
    Global(fn(&Ctx) -> Res),
}

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub check: Check,
}

pub static REGISTRY: &[Claim] = &[
    Claim { id: "prop.mmc", statement: "strongly multiplicative iff the maximal multiple condition holds", check: Check::Set(mmc) },
    Claim { id: "prop.mmc.z", statement: "the equivalence over Z: strongly multiplicative iff inside {1, -1}", check: Check::Global(mmc_z) },
    Claim { id: "thm.saturation", statement: "saturation of a strongly multiplicative set has one of the predicted forms", check: Check::Set(saturation) },
    Claim { id: "prop.jacobson", statement: "a strongly multiplicative set misses Jac(R); in a local ring it consists of units", check: Check::Set(jacobson) },
    Claim { id: "prop.indecomposable", statement: "in an indecomposable ring a strongly multiplicative set consists of units", check: Check::Set(indecomposable) },
    Claim { id: "thm.total-quotient", statement: "R is a total quotient ring iff Reg(R) is strongly multiplicative", check: Check::Ring(total_quotient) },
    Claim { id: "thm.localization-intersection", statement: "localization commutes with intersections", check: Check::Set(intersection) },
    Claim { id: "thm.localization-intersection.z", statement: "over Z, localization commutes with every family iff S is strongly multiplicative", check: Check::Global(intersection_z) },
    Claim { id: "prop.colon", statement: "localization commutes with colon ideals", check: Check::Set(colon) },
    Claim { id: "prop.contraction", statement: "the contraction of S^-1 I is (I : t)", check: Check::Set(contraction) },
    Claim { id: "prop.localization", statement: "S^-1 T is strongly multiplicative in S^-1 R", check: Check::Set(localized_set) },
    Claim { id: "prop.st-product", statement: "ST is strongly multiplicative when 0 is not in ST", check: Check::Set(st_product) },
    Claim { id: "oracle.fractions", statement: "the materialized localization is the ring of fractions", check: Check::Set(fractions) },
    Claim { id: "cor.factorr", statement: "the image of S in R/I is strongly multiplicative", check: Check::Set(factorr) },
    Claim { id: "prop.homomorphism", statement: "surjective images of strongly multiplicative sets are strongly multiplicative", check: Check::Global(homomorphism) },
    Claim { id: "thm.car", statement: "S1 x S2 is strongly multiplicative iff both factors are", check: Check::Global(car) },
    Claim { id: "thm.trivialextension", statement: "S x N is strongly multiplicative in R x M iff S is", check: Check::Global(trivialextension) },
    Claim { id: "prop.amalgamated", statement: "the lift of S to an amalgamation is strongly multiplicative iff S is", check: Check::Global(amalgamated) },
    Claim { id: "thm.strongly-prime", statement: "P is strongly prime iff R - P is strongly multiplicative", check: Check::Ring(strongly_prime) },
    Claim { id: "thm.strongly-prime.z", statement: "the same equivalence for the primes of Z", check: Check::Global(strongly_prime_z) },
    Claim { id: "cor.strongly-zero-dimensional", statement: "the characterizations of strongly zero-dimensional rings agree", check: Check::Ring(zero_dimensional) },
    Claim { id: "sprime.modes", statement: "P is S-prime iff (P : s) is prime for some s", check: Check::Set(s_prime_modes) },
    Claim { id: "sprime.chain-intersection", statement: "the chain P, sP, s^2 P, .. stays S-prime", check: Check::Set(chain_intersection) },
    Claim { id: "thm.s-minimal", statement: "S-minimal primes satisfy sP = P and are not prime unless S consists of units", check: Check::Set(s_minimal) },
    Claim { id: "alg.1", statement: "the generated ideals are exactly the S-minimal primes, none prime", check: Check::Set(algorithm1) },
    Claim { id: "thm.strong-krull", statement: "maximal ideals avoiding S above I are maximal ideals", check: Check::Set(strong_krull) },
    Claim { id: "ex.counterexample1", statement: "0 is not S-prime for S = {2^n} in the polynomial quotient", check: Check::Global(counterexample1) },
    Claim { id: "ex.counterexample2", statement: "S-minimal primes can exist without strong multiplicativity", check: Check::Global(counterexample2) },
    Claim { id: "ex.counterexample3", statement: "a ring without S-minimal primes", check: Check::Global(counterexample3) },
    Claim { id: "ex.counterexample4", statement: "Z x Z with Reg(Z) x {1}", check: Check::Global(counterexample4) },
    Claim { id: "ex.colon", statement: "localization and colon need not commute for J not finitely generated", check: Check::Global(colon_example) },
    Claim { id: "cxlab.oracle-gate", statement: "the coefficient rule agrees with lattice membership", check: Check::Global(oracle_gate) },
    Claim { id: "skip.out-of-scope", statement: "results outside effective rings", check: Check::Global(out_of_scope) },
];

/// Everything the checks share.
pub struct Ctx<'a> {
    pub config: &'a AuditConfig,
    pub colon: fn(&Ideal, &Ideal) -> Ideal,
}

/// A colon that never looks at the last element of the ring, so it drops
/// members of `(I : J)` that are listed last.
pub fn short_scan_colon(i: &Ideal, j: &Ideal) -> Ideal {
    let r = i.ring();
    let set = ElemSet::from_iter_in(
        r.size(),
        (0..r.size() - 1).filter(|&x| j.elements().iter().all(|y| i.contains(r.mul(x, y)))),
    );
    Ideal::from_set_unverified(r, set)
}

pub struct RingCase {
    pub ring: Arc<FiniteRing>,
    pub ideals: Vec<Ideal>,
    pub primes: Vec<Ideal>,
    pub sets: Vec<MultiplicativeSet>,
    pub seed: u64,
}

pub struct SetCase {
    pub index: usize,
    pub set: MultiplicativeSet,
    pub loc: LocalizedRing,
    /// Indices into `RingCase::ideals`.
    pub pairs: Vec<(usize, usize)>,
    pub triples: Vec<[usize; 3]>,
    pub probe: Vec<usize>,
    /// Sampled ideals disjoint from the set.
    pub probe_disjoint: Vec<usize>,
    /// Indices into `RingCase::sets`.
    pub others: Vec<usize>,
}

fn rng_for(seed: u64, a: u64, b: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ a.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ b.wrapping_mul(0xc2b2_ae3d_27d4_eb4f))
}

/// Up to `cap` indices below `len`, in increasing order.
fn pick(rng: &mut ChaCha8Rng, len: usize, cap: usize) -> Vec<usize> {
    if len <= cap {
        return (0..len).collect();
    }
    let mut v = sample(rng, len, cap).into_vec();
    v.sort_unstable();
    v
}

impl RingCase {
    pub fn new(ring: Arc<FiniteRing>, seed: u64, index: usize) -> Result<Self, AlgebraError> {
        let ideals = all_ideals(&ring)?;
        let primes = prime_ideals(&ring)?;
        let all = enumerate_multiplicative_sets(&ring, corpus::CORPUS_LIMIT)?;
        let mut rng = rng_for(seed, index as u64, 0);
        let units = MultiplicativeSet::units(&ring);
        // {1} and u(R) always stay; the rest is sampled
        let mut keep: Vec<usize> = all
            .iter()
            .enumerate()
            .filter(|(_, s)| s.len() == 1 || **s == units)
            .map(|(k, _)| k)
            .collect();
        let rest: Vec<usize> = (0..all.len()).filter(|k| !keep.contains(k)).collect();
        let room = SET_CAP.saturating_sub(keep.len());
        keep.extend(pick(&mut rng, rest.len(), room).into_iter().map(|k| rest[k]));
        keep.sort_unstable();
        let sets = keep.into_iter().map(|k| all[k].clone()).collect();
        Ok(Self { ring, ideals, primes, sets, seed: seed ^ (index as u64).wrapping_mul(0x2545_f491_4f6c_dd1d) })
    }

    pub fn set_case(&self, index: usize) -> Result<SetCase, AlgebraError> {
        let set = self.sets[index].clone();
        let loc = LocalizedRing::new(&set)?;
        let mut rng = rng_for(self.seed, index as u64, 1);
        let n = self.ideals.len();
        let pairs = pick(&mut rng, n * n, PAIR_CAP).into_iter().map(|k| (k / n, k % n)).collect();
        let triples = (0..TRIPLE_CAP.min(n)).map(|_| [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)]).collect();
        let probe = pick(&mut rng, n, PROBE_CAP);
        let disjoint: Vec<usize> = (0..n).filter(|&k| !set.meets(&self.ideals[k])).collect();
        let probe_disjoint = pick(&mut rng, disjoint.len(), PROBE_CAP).into_iter().map(|k| disjoint[k]).collect();
        let others = pick(&mut rng, self.sets.len(), OTHER_CAP);
        Ok(SetCase { index, set, loc, pairs, triples, probe, probe_disjoint, others })
    }
}

fn instance(ring: &FiniteRing, s: &MultiplicativeSet) -> String {
    format!("{} | {}", ring.describe(), s.describe())
}

fn show(ring: &FiniteRing, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| ring.render(x)).collect()
}

/// `t` lies in `set` and every member divides it.
fn is_max_multiple(ring: &FiniteRing, set: &ElemSet, t: Elem) -> Option<Elem> {
    if !set.contains(t) {
        return Some(t);
    }
    set.iter().find(|&s| !ring.elements().any(|a| ring.mul(s, a) == t))
}

fn mmc(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let s = &sc.set;
    let mut c = Certificate::new("prop.mmc", instance(r, s));
    let def = s.is_strongly_multiplicative_def();
    let t = s.is_strongly_multiplicative_mmc();
    c.check(
        "definitional and maximal-multiple tests agree",
        def.is_some() == t.is_some(),
        vec![format!("def witness {:?}", def.map(|x| r.render(x))), format!("t {:?}", t.map(|x| r.render(x)))],
    );
    c.check("a finite multiplicative set is strongly multiplicative", def.is_some(), vec![s.describe()]);
    if let Some(t) = t {
        let bad = is_max_multiple(r, s.elements(), t);
        c.check("every s in S divides t", bad.is_none(), bad.map(|x| show(r, &[x, t])).unwrap_or_default());
    }
    if let Some(w) = def {
        // the witness lies in every sR, so it is a maximal multiple as well
        let bad = is_max_multiple(r, s.elements(), w);
        c.check("the definitional witness lies in S and in every sR", bad.is_none(), bad.map(|x| show(r, &[x, w])).unwrap_or_default());
    }
    Ok(vec![c])
}

fn mmc_z(_: &Ctx) -> Res {
    let sets = [
        IntMulSet::units(),
        IntMulSet::monoid(&[-1], false)?,
        IntMulSet::monoid(&[2], false)?,
        IntMulSet::monoid(&[6], true)?,
        IntMulSet::monoid(&[2, 3], false)?,
        IntMulSet::prime_complement(2)?,
        IntMulSet::prime_complement(5)?,
        IntMulSet::NonZero,
    ];
    let mut out = Vec::new();
    for s in &sets {
        let mut c = Certificate::new("prop.mmc.z", format!("Z | {}", s.describe()));
        let (sm, why) = s.strongly_multiplicative();
        let in_units = s.elements_up_to(1 << 12).iter().all(|x| x.abs() == 1);
        c.check("strongly multiplicative iff S lies in {1, -1}", sm == in_units, vec![why.clone()]);
        if let Some(g) = s.nonunit_member() {
            // g^k is never in g^(k+1) Z, so no member is a maximal multiple
            let escapes = (0..12u32).all(|k| match (g.checked_pow(k), g.checked_pow(k + 1)) {
                (Some(a), Some(b)) => !PrincipalIdeal::new(b).contains(a),
                _ => true,
            });
            c.check(format!("powers of {g} have no common multiple in S"), escapes && !sm, vec![g.to_string(), why]);
        }
        out.push(c);
    }
    Ok(out)
}

fn saturation(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let s = &sc.set;
    let mut c = Certificate::new("thm.saturation", instance(r, s));
    let sat = s.saturation();
    let brute = ElemSet::from_iter_in(r.size(), r.elements().filter(|&a| r.elements().any(|x| s.contains(r.mul(a, x)))));
    let by_primes = s.saturation_by_primes()?;
    let diff = |a: &ElemSet, b: &ElemSet| a.difference(b).union(&b.difference(a)).first().map(|x| vec![r.render(x)]).unwrap_or_default();
    c.check("saturation matches the divisor scan", sat.set == brute, diff(&sat.set, &brute));
    c.check("saturation is R minus the primes avoiding S", sat.set == by_primes, diff(&sat.set, &by_primes));
    let Some(form) = sat.form else {
        c.check("a strongly multiplicative set has a classified saturation", false, vec![s.describe()]);
        return Ok(vec![c]);
    };
    c.check("the classified form predicts the saturation", form.predicted(r) == sat.set, diff(&form.predicted(r), &sat.set));
    let closed = MultiplicativeSet::from_elements(r, sat.set.clone())?;
    c.check("the saturation is strongly multiplicative", closed.is_strongly_multiplicative_def().is_some(), vec![r.render_set(&sat.set)]);
    if r.is_indecomposable() {
        c.check("indecomposable ring: saturation = u(R)", sat.set == *r.units(), diff(&sat.set, r.units()));
    }
    // the theorem's factors are Re x R(1-e); the stored factorization only
    // matches when e is one of its coordinate idempotents or e = 1
    let aligned = matches!(form, SaturationForm::UnitsTimesUnits | SaturationForm::UnitsTimesFactor { side: Some(_), .. });
    if let SaturationForm::UnitsTimesFactor { idempotent: e, .. } = form {
        // u(Re) x R(1-e): x belongs iff xe is invertible inside Re
        let re: Vec<Elem> = r.elements().map(|y| r.mul(y, e)).collect();
        let peirce = ElemSet::from_iter_in(r.size(), r.elements().filter(|&x| re.iter().any(|&y| r.mul(r.mul(x, e), y) == e)));
        c.check("saturation is u(Re) x R(1-e)", peirce == sat.set, diff(&peirce, &sat.set));
    }
    if !aligned && r.factors().is_some() {
        c.note("idempotent is not a coordinate idempotent of the given factors; shape checked against Re x R(1-e) only");
    }
    if let (Some((a, b)), true) = (r.factors(), aligned) {
        let grid = |left: &ElemSet, right: &ElemSet| {
            ElemSet::from_iter_in(r.size(), left.iter().flat_map(|x| right.iter().map(move |y| r.pair(x, y))))
        };
        let (ua, ub) = (a.units().clone(), b.units().clone());
        let (fa, fb) = (ElemSet::full(a.size()), ElemSet::full(b.size()));
        let shapes = [grid(&ua, &fb), grid(&fa, &ub), grid(&ua, &ub)];
        c.check(
            "saturation is u(R1) x R2, R1 x u(R2) or u(R1) x u(R2)",
            shapes.contains(&sat.set),
            vec![r.render_set(&sat.set)],
        );
    }
    Ok(vec![c])
}

fn jacobson(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let s = &sc.set;
    let mut c = Certificate::new("prop.jacobson", instance(r, s));
    let jac = ideal::jacobson(r)?;
    let hit = s.elements().intersection(jac.elements()).first();
    c.check("S misses Jac(R)", hit.is_none(), hit.map(|x| vec![r.render(x)]).unwrap_or_default());
    c.check("jacobson_disjoint agrees", s.jacobson_disjoint()? == hit.is_none(), vec![]);
    if maximal_ideals(r)?.len() == 1 {
        let bad = s.elements().difference(r.units()).first();
        c.check("local ring: S consists of units", bad.is_none(), bad.map(|x| vec![r.render(x)]).unwrap_or_default());
    }
    Ok(vec![c])
}

fn indecomposable(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    if !r.is_indecomposable() {
        return Ok(vec![]);
    }
    let s = &sc.set;
    let mut c = Certificate::new("prop.indecomposable", instance(r, s));
    let idempotents = r.idempotents();
    c.check("only idempotents are 0 and 1", idempotents.len() == 2 || r.size() == 1, vec![r.render_set(&idempotents)]);
    let bad = s.elements().difference(r.units()).first();
    c.check("S consists of units", bad.is_none(), bad.map(|x| vec![r.render(x)]).unwrap_or_default());
    Ok(vec![c])
}

fn total_quotient(case: &RingCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let mut c = Certificate::new("thm.total-quotient", r.describe());
    let reg = MultiplicativeSet::regular(r);
    let zero_divisor = |x: Elem| r.elements().any(|y| y != 0 && r.mul(x, y) == 0);
    let total = r.elements().all(|x| r.is_unit(x) || zero_divisor(x));
    c.check("total quotient ring test agrees with the element scan", total == r.is_total_quotient_ring(), vec![]);
    c.check(
        "total quotient ring iff Reg(R) strongly multiplicative",
        total == reg.is_strongly_multiplicative_def().is_some(),
        vec![r.render_set(reg.elements())],
    );
    for s in &case.sets {
        if s.elements().is_subset(reg.elements()) && s.is_strongly_multiplicative() {
            let bad = s.elements().difference(r.units()).first();
            c.check(
                format!("{} inside Reg(R) consists of units", s.describe()),
                bad.is_none(),
                bad.map(|x| vec![r.render(x)]).unwrap_or_default(),
            );
        }
    }
    Ok(vec![c])
}

fn intersection(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let mut out = Vec::new();
    for &(i, j) in &sc.pairs {
        out.push(localization::check_intersection_commutes(&sc.loc, &[case.ideals[i].clone(), case.ideals[j].clone()]));
    }
    for t in &sc.triples {
        let fam: Vec<Ideal> = t.iter().map(|&k| case.ideals[k].clone()).collect();
        out.push(localization::check_intersection_commutes(&sc.loc, &fam));
    }
    out.push(localization::check_intersection_commutes(&sc.loc, &case.ideals));
    Ok(out)
}

fn intersection_z(_: &Ctx) -> Res {
    let sets = [
        IntMulSet::units(),
        IntMulSet::monoid(&[3], false)?,
        IntMulSet::monoid(&[6], false)?,
        IntMulSet::monoid(&[2, 5], true)?,
        IntMulSet::prime_complement(2)?,
        IntMulSet::prime_complement(3)?,
        IntMulSet::NonZero,
    ];
    let p = PrincipalIdeal::new;
    let families = [
        IntFamily::Finite(vec![p(4), p(6)]),
        IntFamily::Finite(vec![p(2), p(3), p(5)]),
        IntFamily::Finite(vec![p(9), p(12), p(0)]),
        IntFamily::Chain(ParametricChain::new(1, 2)?),
        IntFamily::Chain(ParametricChain::new(1, 3)?),
        IntFamily::Chain(ParametricChain::new(5, 6)?),
        IntFamily::Chain(ParametricChain::new(2, 3)?),
        IntFamily::AllPrimes,
    ];
    let mut out = Vec::new();
    for s in &sets {
        let (sm, why) = s.strongly_multiplicative();
        let mut c = Certificate::new("thm.localization-intersection.z", format!("Z | {}", s.describe()));
        let mut failing = Vec::new();
        for f in &families {
            let cert = zint::check_intersection_commutes_z(s, f)?;
            if let IntFamily::Finite(_) = f {
                c.check(format!("finite family {} commutes", f.describe()), cert.passed(), cert.witness.clone());
            }
            if !cert.passed() {
                failing.push(f.describe());
            }
        }
        if let Some(g) = s.nonunit_member() {
            // the powers of a nonunit member give a family that cannot commute
            let own = IntFamily::Chain(ParametricChain::new(1, g)?);
            if !zint::check_intersection_commutes_z(s, &own)?.passed() {
                failing.push(own.describe());
            }
        }
        c.check(
            "every family commutes iff S is strongly multiplicative",
            failing.is_empty() == sm,
            vec![why, format!("non-commuting families: {}", failing.join(", "))],
        );
        out.push(c);
    }
    Ok(out)
}

fn colon(case: &RingCase, sc: &SetCase, ctx: &Ctx) -> Res {
    Ok(sc
        .pairs
        .iter()
        .map(|&(i, j)| localization::colon_commutes_with(&sc.loc, &case.ideals[i], &case.ideals[j], ctx.colon))
        .collect())
}

fn contraction(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    Ok(sc.probe.iter().map(|&k| localization::check_contraction(&sc.loc, &case.ideals[k])).collect())
}

fn localized_set(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let mut out = Vec::new();
    for &k in &sc.others {
        let t = &case.sets[k];
        if sc.set.product_set(t).is_err() {
            continue;
        }
        let mut c = Certificate::new("prop.localization", format!("{} | S = {} | T = {}", r.describe(), sc.set.describe(), t.describe()));
        let lt = sc.loc.localized_mulset(t)?;
        let w = lt.is_strongly_multiplicative_def();
        c.check("S^-1 T is strongly multiplicative", w.is_some(), vec![lt.describe()]);
        let tt = t.max_multiple().expect("finite sets have a maximal multiple");
        let image = sc.loc.project(tt);
        let bad = is_max_multiple(sc.loc.ring(), lt.elements(), image);
        c.check("t/1 is a maximal multiple of S^-1 T", bad.is_none(), bad.map(|x| vec![sc.loc.render(x)]).unwrap_or_default());
        out.push(c);
    }
    Ok(out)
}

fn st_product(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let mut out = Vec::new();
    for &k in &sc.others {
        let t = &case.sets[k];
        let Ok(st) = sc.set.product_set(t) else { continue };
        let mut c = Certificate::new("prop.st-product", format!("{} | S = {} | T = {}", r.describe(), sc.set.describe(), t.describe()));
        c.check("ST is strongly multiplicative", st.is_strongly_multiplicative_def().is_some(), vec![st.describe()]);
        let (a, b) = (sc.set.max_multiple().expect("finite"), t.max_multiple().expect("finite"));
        let ab = r.mul(a, b);
        let bad = is_max_multiple(r, st.elements(), ab);
        c.check("the product of maximal multiples is one for ST", bad.is_none(), bad.map(|x| show(r, &[x, ab])).unwrap_or_default());
        out.push(c);
    }
    Ok(out)
}

fn fractions(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    if case.ring.size() > FRACTION_RING_LIMIT {
        return Ok(vec![]);
    }
    Ok(vec![localization::fraction_oracle(&sc.loc)?])
}

fn factorr(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let mut out = Vec::new();
    for &k in sc.probe_disjoint.iter().take(4) {
        let i = &case.ideals[k];
        if i.is_zero() {
            continue;
        }
        let q = FiniteRing::quotient(r.clone(), i.generators())?;
        let pi = RingHom::quotient_map(&q)?;
        let img = sc.set.image_under(&pi)?;
        let mut c = Certificate::new("cor.factorr", format!("{} | I = {}", instance(r, &sc.set), i.render()));
        c.check("the image of S is strongly multiplicative", img.is_strongly_multiplicative_def().is_some(), vec![img.describe()]);
        let t = pi.apply(sc.set.max_multiple().expect("finite"));
        let bad = is_max_multiple(&q, img.elements(), t);
        c.check("the image of t is a maximal multiple", bad.is_none(), bad.map(|x| show(&q, &[x, t])).unwrap_or_default());
        out.push(c);
    }
    Ok(out)
}

fn sampled_sets(ring: &Arc<FiniteRing>, seed: u64, salt: u64) -> Result<Vec<MultiplicativeSet>, AlgebraError> {
    let all = enumerate_multiplicative_sets(ring, corpus::CORPUS_LIMIT)?;
    let mut rng = rng_for(seed, salt, 2);
    Ok(pick(&mut rng, all.len(), TRANSPORT_SET_CAP).into_iter().map(|k| all[k].clone()).collect())
}

fn homomorphism(ctx: &Ctx) -> Res {
    let bases = corpus::small_bases();
    let mut out = Vec::new();
    for (ia, a) in bases.iter().enumerate() {
        let sets = sampled_sets(a, ctx.config.seed, ia as u64)?;
        for b in &bases {
            for f in RingHom::enumerate(a, b).into_iter().filter(RingHom::is_surjective) {
                for s in &sets {
                    let Ok(img) = s.image_under(&f) else { continue };
                    let mut c = Certificate::new(
                        "prop.homomorphism",
                        format!("{} -> {} [{}] | {}", a.describe(), b.describe(), show(b, f.table()).join(","), s.describe()),
                    );
                    c.check("f(S) is strongly multiplicative", img.is_strongly_multiplicative_def().is_some(), vec![img.describe()]);
                    let t = f.apply(s.max_multiple().expect("finite"));
                    let bad = is_max_multiple(b, img.elements(), t);
                    c.check("f(t) is a maximal multiple of f(S)", bad.is_none(), bad.map(|x| show(b, &[x, t])).unwrap_or_default());
                    out.push(c);
                }
            }
        }
    }
    Ok(out)
}

fn car(ctx: &Ctx) -> Res {
    let bases = corpus::small_bases();
    let mut out = Vec::new();
    for (ia, a) in bases.iter().enumerate() {
        for (ib, b) in bases.iter().enumerate() {
            if a.size() * b.size() > corpus::CORPUS_LIMIT {
                continue;
            }
            let p = FiniteRing::product(a.clone(), b.clone())?;
            let (left, right) = (RingHom::projection(&p, smul_core::Side::Left)?, RingHom::projection(&p, smul_core::Side::Right)?);
            let sa = sampled_sets(a, ctx.config.seed, ia as u64)?;
            let sb = sampled_sets(b, ctx.config.seed, 100 + ib as u64)?;
            for s1 in &sa {
                for s2 in &sb {
                    let s = s1.product_with(s2, &p)?;
                    let mut c = Certificate::new("thm.car", format!("{} | {} x {}", p.describe(), s1.describe(), s2.describe()));
                    let both = s1.is_strongly_multiplicative_def().is_some() && s2.is_strongly_multiplicative_def().is_some();
                    c.check("S1 x S2 strongly multiplicative iff S1 and S2 are", s.is_strongly_multiplicative_def().is_some() == both, vec![]);
                    c.check("projections recover S1 and S2", s.image_under(&left)? == *s1 && s.image_under(&right)? == *s2, vec![]);
                    let t = p.pair(s1.max_multiple().expect("finite"), s2.max_multiple().expect("finite"));
                    let bad = is_max_multiple(&p, s.elements(), t);
                    c.check("(t1, t2) is a maximal multiple", bad.is_none(), bad.map(|x| show(&p, &[x, t])).unwrap_or_default());
                    out.push(c);
                }
            }
        }
    }
    Ok(out)
}

fn trivialextension(ctx: &Ctx) -> Res {
    let mut out = Vec::new();
    for (im, m) in corpus::trivial_extension_modules(corpus::transport_bases(), TRANSPORT_RING_LIMIT).into_iter().enumerate() {
        let r = m.ring().clone();
        let te = FiniteRing::trivial_extension(m.clone())?;
        let subs = m.submodules();
        let mut rng = rng_for(ctx.config.seed, im as u64, 3);
        let chosen = pick(&mut rng, subs.len(), 3);
        let sets = sampled_sets(&r, ctx.config.seed, 200 + im as u64)?;
        for &k in &chosen {
            let n = &subs[k];
            for s in &sets {
                let lifted = s.lift_to_trivext(&te, n)?;
                let mut c = Certificate::new(
                    "thm.trivialextension",
                    format!("{} | {} | N = {} elements", te.describe(), s.describe(), n.len()),
                );
                let sm = s.is_strongly_multiplicative_def().is_some();
                c.check("S x N strongly multiplicative iff S is", lifted.is_strongly_multiplicative_def().is_some() == sm, vec![lifted.describe()]);
                let t = s.max_multiple().expect("finite");
                let x = te.trivext_pair(t, 0);
                let bad = is_max_multiple(&te, lifted.elements(), x);
                c.check("(t, 0) is a maximal multiple of S x N", bad.is_none(), bad.map(|y| show(&te, &[y, x])).unwrap_or_default());
                if r.is_unit(t) {
                    let outside = lifted.elements().difference(te.units()).first();
                    c.check("t a unit: S x N consists of units", outside.is_none(), outside.map(|y| vec![te.render(y)]).unwrap_or_default());
                }
                out.push(c);
            }
        }
    }
    Ok(out)
}

fn amalgamated(ctx: &Ctx) -> Res {
    let mut data = corpus::amalgam_data();
    let mut rng = rng_for(ctx.config.seed, 0, 4);
    let keep = pick(&mut rng, data.len(), TRANSPORT_AMALGAM_CAP);
    data = keep.into_iter().map(|k| data[k].clone()).collect();
    let mut out = Vec::new();
    for (ia, (f, j)) in data.into_iter().enumerate() {
        let a = f.source().clone();
        let fa = f.clone();
        let am = FiniteRing::amalgamation(f, &j)?;
        for s in sampled_sets(&a, ctx.config.seed, 300 + ia as u64)? {
            let lifted = s.lift_to_amalgam(&am)?;
            let mut c = Certificate::new("prop.amalgamated", format!("{} | {}", am.describe(), s.describe()));
            let sm = s.is_strongly_multiplicative_def().is_some();
            c.check("S' strongly multiplicative iff S is", lifted.is_strongly_multiplicative_def().is_some() == sm, vec![lifted.describe()]);
            let t = s.max_multiple().expect("finite");
            let x = am.amalgam_index(t, fa.apply(t)).expect("(t, f(t)) lies in the amalgamation");
            let bad = is_max_multiple(&am, lifted.elements(), x);
            c.check("(t, f(t)) is a maximal multiple of S'", bad.is_none(), bad.map(|y| show(&am, &[y, x])).unwrap_or_default());
            out.push(c);
        }
    }
    Ok(out)
}

fn strongly_prime(case: &RingCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let mut c = Certificate::new("thm.strongly-prime", r.describe());
    for p in &case.primes {
        let by_set = sprime::is_strongly_prime(p)?;
        let by_families = sprime::is_strongly_prime_by_families(p)?;
        c.check(
            format!("{}: R - P strongly multiplicative iff P strongly prime", p.render()),
            by_set == by_families,
            vec![p.render(), format!("complement test {by_set}, family test {by_families}")],
        );
    }
    Ok(vec![c])
}

fn strongly_prime_z(_: &Ctx) -> Res {
    let mut out = Vec::new();
    for n in [0u64, 2, 3, 5, 7, 11] {
        let p = PrincipalIdeal { n };
        let complement = if n == 0 { IntMulSet::NonZero } else { IntMulSet::prime_complement(n)? };
        let mut c = Certificate::new("thm.strongly-prime.z", format!("Z | P = {p}"));
        let strongly = zint::is_strongly_prime_z(&p)?;
        let (sm, why) = complement.strongly_multiplicative();
        c.check("P strongly prime iff Z - P strongly multiplicative", strongly == sm, vec![why]);
        // the other primes meet inside P without any of them lying in P
        let others: Vec<u64> = [2u64, 3, 5, 7, 11, 13].into_iter().filter(|&q| q != n).collect();
        let meet = others.iter().fold(PrincipalIdeal::whole(), |acc, &q| acc.intersect(&PrincipalIdeal { n: q }));
        let outside = others.iter().all(|&q| !PrincipalIdeal { n: q }.is_subset(&p));
        c.check("neither test finds P strongly prime", !strongly && outside, vec![format!("finite meet {meet}; the full meet over primes q != p is 0")]);
        out.push(c);
    }
    Ok(out)
}

fn zero_dimensional(case: &RingCase, _: &Ctx) -> Res {
    let mut c = sprime::check_zero_dimensional_equivalences(&case.ring)?;
    c.check("the ring is strongly zero-dimensional", sprime::is_strongly_zero_dimensional(&case.ring)?, vec![]);
    Ok(vec![c])
}

fn s_prime_modes(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let mut c = Certificate::new("sprime.modes", instance(r, &sc.set));
    for &k in &sc.probe_disjoint {
        let p = &case.ideals[k];
        let d = sprime::is_s_prime(p, &sc.set, SPrimeMode::Definitional)?.map(|w| w.s);
        let q = sprime::is_s_prime(p, &sc.set, SPrimeMode::ColonPrime)?.map(|w| w.s);
        c.check(
            format!("{}: both tests find the same smallest s", p.render()),
            d == q,
            vec![p.render(), format!("definitional {:?}", d.map(|x| r.render(x))), format!("colon {:?}", q.map(|x| r.render(x)))],
        );
    }
    Ok(vec![c])
}

fn chain_intersection(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let mut out = Vec::new();
    for &k in &sc.probe_disjoint {
        let p = &case.ideals[k];
        if sprime::is_s_prime(p, &sc.set, SPrimeMode::ColonPrime)?.is_some() {
            out.push(sprime::check_chain_intersection(p, &sc.set)?);
        }
        if out.len() == 3 {
            break;
        }
    }
    Ok(out)
}

fn s_minimal(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let s = &sc.set;
    let mut out = vec![sprime::check_s_minimal_theorem(r, s)?];
    let mut meet = ElemSet::full(r.size());
    for x in s.elements().iter() {
        meet.intersect_with(r.principal(x));
    }
    let meet = Ideal::from_set(r, meet)?;
    for &k in sc.probe_disjoint.iter().take(3) {
        let i = &case.ideals[k];
        let mut c = Certificate::new("thm.s-minimal", format!("{} | over I = {}", instance(r, s), i.render()));
        let over = sprime::s_minimal_primes_over(i, s)?;
        if meet.sum(i).is_proper() {
            for p in &over {
                let w = p.non_prime_witness();
                c.check(
                    format!("{} minimal over I is not prime", p.render()),
                    w.is_some(),
                    w.map(|(a, b)| show(r, &[a, b])).unwrap_or_else(|| vec![p.render()]),
                );
            }
        } else {
            let primes_over: Vec<&Ideal> = case.primes.iter().filter(|q| i.is_subset(q)).collect();
            for p in &over {
                let minimal = p.is_prime() && !primes_over.iter().any(|q| *q != p && q.is_subset(p));
                c.check(format!("{} is a minimal prime over I", p.render()), minimal, vec![p.render()]);
            }
        }
        c.check("some S-prime is minimal over I", !over.is_empty(), vec![i.render()]);
        out.push(c);
    }
    Ok(out)
}

fn algorithm1(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let s = &sc.set;
    let output = match sprime::algorithm1(r, s) {
        Ok(o) => o,
        Err(AlgebraError::NotApplicable(_)) => return Ok(vec![]),
        Err(e) => return Err(e),
    };
    let mut c = Certificate::new("alg.1", instance(r, s));
    let mut generated: Vec<Ideal> = output.ideals.iter().map(|(i, _)| i.clone()).collect();
    generated.sort();
    let mut brute = sprime::s_minimal_primes(r, s)?;
    brute.sort();
    let names = |v: &[Ideal]| v.iter().map(Ideal::render).collect::<Vec<_>>().join(", ");
    c.check(
        "generated ideals equal the brute-force S-minimal primes",
        generated == brute,
        vec![format!("generated [{}]", names(&generated)), format!("brute force [{}]", names(&brute))],
    );
    for (p, w) in &output.ideals {
        let ok = w.is_some_and(|(a, b)| p.contains(r.mul(a, b)) && !p.contains(a) && !p.contains(b));
        c.check(
            format!("{} is not prime", p.render()),
            ok,
            w.map(|(a, b)| show(r, &[a, b])).unwrap_or_else(|| vec![p.render()]),
        );
    }
    c.note(format!("side {:?}", output.side));
    Ok(vec![c])
}

fn strong_krull(case: &RingCase, sc: &SetCase, _: &Ctx) -> Res {
    let r = &case.ring;
    let mut out = Vec::new();
    for &k in &sc.probe_disjoint {
        let i = &case.ideals[k];
        let res = sprime::strong_krull(&sc.set, i)?;
        let mut c = Certificate::new("thm.strong-krull", format!("{} | I = {}", instance(r, &sc.set), i.render()));
        c.check(format!("found {} is a maximal ideal", res.found.render()), res.is_maximal_ideal, vec![res.found.render()]);
        for m in &res.maximal_elements {
            c.check(format!("maximal element {} is a maximal ideal", m.render()), m.is_maximal(), vec![m.render()]);
        }
        out.push(c);
    }
    Ok(out)
}

fn counterexample1(ctx: &Ctx) -> Res {
    Ok(vec![cxlab::replay_counterexample1(ctx.config.depth)])
}

fn counterexample2(ctx: &Ctx) -> Res {
    Ok(vec![zint::replay_counterexample2(ctx.config.depth)])
}

fn counterexample3(ctx: &Ctx) -> Res {
    Ok(vec![cxlab::replay_counterexample3(ctx.config.depth)])
}

fn counterexample4(ctx: &Ctx) -> Res {
    Ok(vec![zint::replay_counterexample4(ctx.config.depth)])
}

fn colon_example(ctx: &Ctx) -> Res {
    Ok(vec![cxlab::replay_colon(ctx.config.depth)])
}

fn oracle_gate(ctx: &Ctx) -> Res {
    let dim = oracle::truncated_monomials().len();
    let mut rng = rng_for(ctx.config.seed, 0, 5);
    let samples: Vec<Vec<i64>> = (0..GATE_SAMPLES)
        .map(|_| (0..dim).map(|_| rng.gen_range(-GATE_COEFF_BOUND..=GATE_COEFF_BOUND)).collect())
        .collect();
    let report = oracle::gate(GATE_COEFF_BOUND, &samples);
    let mut c = Certificate::new("cxlab.oracle-gate", format!("Z[X1,X2,X3]/(2X1,4X2,8X3), |c| <= {GATE_COEFF_BOUND}, degree <= 2"));
    c.check("every oracle lattice is diagonal", report.diagonal, vec![]);
    c.check(
        "coefficient rule agrees with the lattice oracle",
        report.disagreements.is_empty(),
        report.disagreements.iter().take(5).cloned().collect(),
    );
    c.note(format!("{} comparisons, {} dense samples", report.checked, samples.len()));
    Ok(vec![c])
}

fn out_of_scope(_: &Ctx) -> Res {
    let items = [
        ("ex.c01-times-r", "C[0,1] x R: maximal ideals that are not strongly prime"),
        ("ex.krull-kxy", "k[X,Y]: the ideal maximal among those avoiding S need not be maximal"),
        ("ex.laurent-converse", "k[X] localized at X: the converse of the localized-set result fails"),
        ("ex.zp-cap-zq", "Z_(p) meet Z_(q): a multiplicative set meeting the Jacobson radical"),
    ];
    Ok(items
        .iter()
        .map(|(id, what)| Certificate::skipped(*id, *what, format!("not an effective ring here; see {OUT_OF_SCOPE_DOC}")))
        .collect())
}

fn run_timed(out: &mut Vec<ClaimRecord>, id: &str, instance: &str, f: impl FnOnce() -> Res) {
    let start = Instant::now();
    let res = f();
    let ms = start.elapsed().as_secs_f64() * 1000.0;
    match res {
        Ok(certs) => out.extend(certs.into_iter().map(|c| ClaimRecord::from_certificate(c, ms))),
        Err(e) => {
            let mut c = Certificate::new(id, instance);
            c.check("check ran without error", false, vec![format!("error: {e}")]);
            out.push(ClaimRecord::from_certificate(c, ms));
        }
    }
}

fn sweep_ring(cr: &CorpusRing, index: usize, ctx: &Ctx) -> (Vec<ClaimRecord>, usize) {
    let mut out = Vec::new();
    let r = &cr.ring;
    let name = r.describe();
    if r.size() > ctx.config.budget {
        let c = Certificate::skipped("corpus.budget", name, format!("{} elements exceed the budget {}", r.size(), ctx.config.budget));
        return (vec![ClaimRecord::from_certificate(c, 0.0)], 0);
    }
    let case = match RingCase::new(r.clone(), ctx.config.seed, index) {
        Ok(c) => c,
        Err(e) => {
            let mut c = Certificate::new("corpus.ring", name);
            c.check("corpus ring enumerates", false, vec![format!("error: {e}")]);
            return (vec![ClaimRecord::from_certificate(c, 0.0)], 0);
        }
    };
    for claim in REGISTRY.iter().filter(|c| ctx.config.enabled(c.id)) {
        if let Check::Ring(f) = claim.check {
            run_timed(&mut out, claim.id, &name, || f(&case, ctx));
        }
    }
    let set_claims: Vec<&Claim> =
        REGISTRY.iter().filter(|c| ctx.config.enabled(c.id) && matches!(c.check, Check::Set(_))).collect();
    if set_claims.is_empty() {
        return (out, case.sets.len());
    }
    for k in 0..case.sets.len() {
        let inst = instance(r, &case.sets[k]);
        let sc = match case.set_case(k) {
            Ok(sc) => sc,
            Err(e) => {
                let mut c = Certificate::new("corpus.set", inst);
                c.check("set case builds", false, vec![format!("error: {e}")]);
                out.push(ClaimRecord::from_certificate(c, 0.0));
                continue;
            }
        };
        for claim in &set_claims {
            if let Check::Set(f) = claim.check {
                run_timed(&mut out, claim.id, &inst, || f(&case, &sc, ctx));
            }
        }
    }
    (out, case.sets.len())
}

/// Sweeps the corpus and evaluates every enabled claim. Rings are spread
/// over worker threads; records come back in corpus order.
pub fn run_audit(config: &AuditConfig) -> AuditReport {
    let ctx = Ctx { config, colon: if config.mutate_colon { short_scan_colon } else { Ideal::colon } };
    let needs_corpus = REGISTRY.iter().any(|c| config.enabled(c.id) && !matches!(c.check, Check::Global(_)));
    let corpus = if needs_corpus { corpus::rings(config.seed) } else { Vec::new() };
    let slots: Vec<Mutex<Option<(Vec<ClaimRecord>, usize)>>> = corpus.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..config.threads.max(1) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= corpus.len() {
                    break;
                }
                let res = sweep_ring(&corpus[k], k, &ctx);
                *slots[k].lock().expect("no poisoned slots") = Some(res);
            });
        }
    });
    let mut records = Vec::new();
    let mut instances = 0;
    for slot in slots {
        let (recs, n) = slot.into_inner().expect("no poisoned slots").expect("every ring swept");
        records.extend(recs);
        instances += n;
    }
    for claim in REGISTRY.iter().filter(|c| config.enabled(c.id)) {
        if let Check::Global(f) = claim.check {
            run_timed(&mut records, claim.id, "global", || f(&ctx));
        }
    }
    let rings = corpus.iter().filter(|c| c.ring.size() <= config.budget).count();
    AuditReport::new(config.seed, config.budget, config.depth, config.mutate_colon, records, rings, instances)
}

pub fn find_claim(id: &str) -> Option<&'static Claim> {
    REGISTRY.iter().find(|c| c.id == id)
}

/// Record verdicts for one claim id, for quick checks in tests.
pub fn verdicts<'a>(report: &'a AuditReport, id: &'a str) -> impl Iterator<Item = Verdict> + 'a {
    report.records(id).map(|c| c.verdict)
}

