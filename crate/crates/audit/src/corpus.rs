//! The rings the audit sweeps.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use smul_core::ideal::all_ideals;
use smul_core::{FiniteRing, RingHom, RingModule};

/// Largest ring the corpus ever contains.
pub const CORPUS_LIMIT: usize = 64;

/// Base rings for trivial extensions and amalgamations stay at or below this.
pub const CONSTRUCTION_BASE_LIMIT: usize = 8;

/// Amalgamated rings kept after seeded sampling.
pub const AMALGAM_CAP: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Cyclic,
    Boolean,
    Product,
    Quotient,
    TrivialExtension,
    Amalgamation,
}

#[derive(Clone)]
pub struct CorpusRing {
    pub ring: Arc<FiniteRing>,
    pub family: Family,
}

fn zn(n: u64) -> Arc<FiniteRing> {
    FiniteRing::zn(n).expect("n >= 2")
}

/// Small rings used as building blocks, in a fixed order.
pub fn small_bases() -> Vec<Arc<FiniteRing>> {
    let mut out: Vec<Arc<FiniteRing>> = (2..=8).map(zn).collect();
    out.push(FiniteRing::boolean(2).expect("rank 2"));
    out.push(FiniteRing::boolean(3).expect("rank 3"));
    out.push(FiniteRing::product(zn(2), zn(4)).expect("product"));
    out
}

/// Bases for the trivial-extension transport claim: the small bases and a
/// few rings just past them.
pub fn transport_bases() -> Vec<Arc<FiniteRing>> {
    let mut out = small_bases();
    out.extend((9..=11).map(zn));
    out.push(FiniteRing::product(zn(2), zn(3)).expect("product"));
    out
}

/// `R ∝ M` for every base `R` and every module among `R`, `R/I` and
/// ideals `I`, whenever the result has at most `limit` elements.
pub fn trivial_extension_modules(bases: Vec<Arc<FiniteRing>>, limit: usize) -> Vec<Arc<RingModule>> {
    let mut out = Vec::new();
    for r in bases {
        let mut mods = vec![RingModule::regular(r.clone())];
        for i in all_ideals(&r).expect("small ring") {
            if i.is_zero() || !i.is_proper() {
                continue;
            }
            let gens = i.generators().to_vec();
            mods.push(RingModule::quotient(r.clone(), &gens).expect("ideal generators"));
            mods.push(RingModule::ideal(r.clone(), &gens).expect("ideal generators"));
        }
        out.extend(mods.into_iter().filter(|m| r.size() * m.size() <= limit));
    }
    out
}

/// Unital maps `f: A → B` with an ideal `J` of `B`, between small bases,
/// with `|A ⋈ J| ≤ CORPUS_LIMIT`.
pub fn amalgam_data() -> Vec<(RingHom, Vec<usize>)> {
    let bases = small_bases();
    let mut out = Vec::new();
    for a in &bases {
        for b in &bases {
            let ideals = all_ideals(b).expect("small ring");
            for f in RingHom::enumerate(a, b) {
                for j in &ideals {
                    if a.size() * j.len() <= CORPUS_LIMIT {
                        out.push((f.clone(), j.generators().to_vec()));
                    }
                }
            }
        }
    }
    out
}

/// The full corpus in a fixed order; `seed` only affects which amalgams
/// are kept.
pub fn rings(seed: u64) -> Vec<CorpusRing> {
    let mut out = Vec::new();
    let push = |out: &mut Vec<CorpusRing>, ring, family| out.push(CorpusRing { ring, family });
    for n in 2..=30 {
        push(&mut out, zn(n), Family::Cyclic);
    }
    for k in 1..=4 {
        push(&mut out, FiniteRing::boolean(k).expect("k <= 4"), Family::Boolean);
    }
    let mut products = Vec::new();
    for m in 2..=8u64 {
        for n in m..=(CORPUS_LIMIT as u64 / m) {
            products.push(FiniteRing::product(zn(m), zn(n)).expect("product"));
        }
    }
    for p in &products {
        push(&mut out, p.clone(), Family::Product);
    }
    for p in products.iter().filter(|p| p.size() <= 16) {
        for i in all_ideals(p).expect("small ring") {
            if i.is_zero() || !i.is_proper() {
                continue;
            }
            push(&mut out, FiniteRing::quotient(p.clone(), i.generators()).expect("proper ideal"), Family::Quotient);
        }
    }
    for m in trivial_extension_modules(small_bases(), CORPUS_LIMIT) {
        push(&mut out, FiniteRing::trivial_extension(m).expect("module"), Family::TrivialExtension);
    }
    let mut amalgams = amalgam_data();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    amalgams.shuffle(&mut rng);
    amalgams.truncate(AMALGAM_CAP);
    // keep corpus order independent of the shuffle
    amalgams.sort_by_key(|(f, j)| (f.source().describe(), f.target().describe(), f.table().to_vec(), j.clone()));
    for (f, j) in amalgams {
        push(&mut out, FiniteRing::amalgamation(f, &j).expect("ideal of the target"), Family::Amalgamation);
    }
    out
}
