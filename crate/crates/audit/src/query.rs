//! One-shot queries behind the `smul` subcommands. Each returns a JSON value.

use std::sync::Arc;

use serde_json::{json, Value};
use smul_core::cxlab::QPolyNF;
use smul_core::ideal::Ideal;
use smul_core::localization::LocalizedRing;
use smul_core::ring::ElemValue;
use smul_core::sprime::{self, SPrimeMode};
use smul_core::zint::{self, IntMulSet, PairIdeal, PrincipalIdeal};
use smul_core::{EffectiveRing, Elem, FiniteRing, MultiplicativeSet};

use crate::dsl::{self, Diagnostic, ElabSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    StrongMul,
    Saturate,
    SPrime,
    SMinimal,
    Krull,
    Localize,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::StrongMul => "strongmul",
            Command::Saturate => "saturate",
            Command::SPrime => "sprime",
            Command::SMinimal => "sminimal",
            Command::Krull => "krull",
            Command::Localize => "localize",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Query {
    pub command: Command,
    pub ring: String,
    pub set: String,
    pub ideal: Option<String>,
    /// Largest finite ring the query will work in.
    pub budget: usize,
}

type QResult = Result<Value, Diagnostic>;

fn semantic(msg: impl Into<String>) -> Diagnostic {
    Diagnostic::semantic(msg)
}

fn render_all(r: &FiniteRing, xs: impl IntoIterator<Item = Elem>) -> Vec<String> {
    xs.into_iter().map(|x| r.render(x)).collect()
}

fn finite_ideal(r: &Arc<FiniteRing>, text: Option<&str>) -> Result<Option<Ideal>, Diagnostic> {
    let Some(text) = text else { return Ok(None) };
    let gens = dsl::parse_ideal(text).map_err(|d| d.with_input(text))?;
    let elems = gens.iter().map(|v| r.element(v)).collect::<Result<Vec<_>, _>>()?;
    Ok(Some(Ideal::span(r, &elems)?))
}

fn int_of(v: &ElemValue) -> Result<i64, Diagnostic> {
    match v {
        ElemValue::Int(n) => Ok(*n),
        other => Err(semantic(format!("{other} is not an integer"))),
    }
}

fn int_ideal(text: Option<&str>) -> Result<PrincipalIdeal, Diagnostic> {
    let text = text.ok_or_else(|| semantic("this query over Z needs an ideal, e.g. '(6)'"))?;
    let gens = dsl::parse_ideal(text).map_err(|d| d.with_input(text))?;
    let g = gens.iter().map(int_of).collect::<Result<Vec<_>, _>>()?;
    Ok(PrincipalIdeal::new(g.into_iter().fold(0, num_integer::gcd)))
}

fn pair_ideal(text: Option<&str>) -> Result<PairIdeal, Diagnostic> {
    let text = text.ok_or_else(|| semantic("this query over Z x Z needs an ideal, e.g. '((2,0),(0,3))'"))?;
    let (mut a, mut b) = (0i64, 0i64);
    for v in dsl::parse_ideal(text).map_err(|d| d.with_input(text))? {
        match v {
            ElemValue::Tuple(items) if items.len() == 2 => {
                a = num_integer::gcd(a, int_of(&items[0])?);
                b = num_integer::gcd(b, int_of(&items[1])?);
            }
            other => return Err(semantic(format!("{other} is not a pair"))),
        }
    }
    Ok(PairIdeal::new(a, b))
}

pub fn run_query(q: &Query) -> QResult {
    let ring = dsl::elaborate(&dsl::parse_ring(&q.ring).map_err(|d| d.with_input(&q.ring))?)?;
    if let EffectiveRing::Finite(r) = &ring {
        if r.size() > q.budget {
            return Err(semantic(format!(
                "the ring has {} elements, over the budget of {} (raise --budget or SMUL_BUDGET)",
                r.size(),
                q.budget
            )));
        }
    }
    let set = dsl::elaborate_set(&ring, &dsl::parse_set(&q.set).map_err(|d| d.with_input(&q.set))?)?;
    let body = match (&ring, &set) {
        (EffectiveRing::Finite(r), ElabSet::Finite(s)) => finite_query(q, r, s)?,
        (_, ElabSet::Int(s)) => int_query(q, s)?,
        (_, ElabSet::IntPair(s)) => match q.command {
            Command::StrongMul => {
                let (l, lw) = s.left.strongly_multiplicative();
                let (r, rw) = s.right.strongly_multiplicative();
                json!({ "verdict": l && r, "reason": format!("left: {lw}; right: {rw}") })
            }
            Command::SPrime => {
                let p = pair_ideal(q.ideal.as_deref())?;
                let w = zint::is_s_prime_zz(&p, s)?;
                json!({ "ideal": p.to_string(), "s_prime": w.is_some(), "s": w.map(|(x, y)| format!("({x},{y})")) })
            }
            c => return Err(semantic(format!("{} is not available over Z x Z", c.name()))),
        },
        (EffectiveRing::QPoly { bound }, ElabSet::PowersOfTwo { k }) => match q.command {
            Command::StrongMul => {
                // 2^(kn) is never in 2^(k(n+1)) R, checked up to the index bound
                let escapes: Vec<u32> = (0..)
                    .take_while(|n| k * (n + 1) <= *bound)
                    .filter(|n| !QPolyNF::power_of_two(k * n, *bound).member_pow2_principal(k * (n + 1)).unwrap_or(true))
                    .collect();
                json!({
                    "verdict": false,
                    "reason": format!("2^({k}n) is not in 2^({k}(n+1)) R, so no member is a maximal multiple"),
                    "checked_n": escapes,
                })
            }
            c => return Err(semantic(format!("{} is not available over qpoly", c.name()))),
        },
        _ => return Err(semantic("set and ring do not match")),
    };
    let mut out = json!({ "command": q.command.name(), "ring": ring.describe(), "set": set.describe() });
    if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
        o.extend(b);
    }
    Ok(out)
}

fn finite_query(q: &Query, r: &Arc<FiniteRing>, s: &MultiplicativeSet) -> QResult {
    let ideal = finite_ideal(r, q.ideal.as_deref())?;
    Ok(match q.command {
        Command::StrongMul => {
            let def = s.is_strongly_multiplicative_def();
            let t = s.is_strongly_multiplicative_mmc();
            json!({
                "elements": render_all(r, s.elements().iter()),
                "verdict": def.is_some(),
                "t": t.map(|x| r.render(x)),
                "witness": def.map(|x| r.render(x)),
                "tests_agree": def.is_some() == t.is_some(),
            })
        }
        Command::Saturate => {
            let sat = s.saturation();
            let by_primes = s.saturation_by_primes()?;
            json!({
                "saturation": render_all(r, sat.set.iter()),
                "form": sat.form,
                "matches_prime_oracle": by_primes == sat.set,
            })
        }
        Command::SPrime => {
            let check = |p: &Ideal| -> Result<Value, Diagnostic> {
                let d = sprime::is_s_prime(p, s, SPrimeMode::Definitional)?;
                let c = sprime::is_s_prime(p, s, SPrimeMode::ColonPrime)?;
                Ok(json!({
                    "ideal": p.render(),
                    "s_prime": d.is_some(),
                    "s": d.as_ref().map(|w| r.render(w.s)),
                    "modes_agree": d.map(|w| w.s) == c.map(|w| w.s),
                }))
            };
            match ideal {
                Some(p) => check(&p)?,
                None => {
                    let all = sprime::s_prime_ideals(r, s)?;
                    let items = all.iter().map(|w| check(&w.ideal)).collect::<Result<Vec<_>, _>>()?;
                    json!({ "s_prime_ideals": items })
                }
            }
        }
        Command::SMinimal => {
            let found = match &ideal {
                Some(i) => sprime::s_minimal_primes_over(i, s)?,
                None => sprime::s_minimal_primes(r, s)?,
            };
            let items: Vec<Value> = found
                .iter()
                .map(|p| {
                    let w = p.non_prime_witness();
                    json!({
                        "ideal": p.render(),
                        "prime": w.is_none(),
                        "witness": w.map(|(a, b)| vec![r.render(a), r.render(b)]).unwrap_or_default(),
                    })
                })
                .collect();
            json!({ "result": items })
        }
        Command::Krull => {
            let i = ideal.unwrap_or_else(|| Ideal::zero(r));
            let k = sprime::strong_krull(s, &i)?;
            json!({
                "ideal": i.render(),
                "found": k.found.render(),
                "found_elements": render_all(r, k.found.elements().iter()),
                "is_maximal_ideal": k.is_maximal_ideal,
                "chain": k.chain.iter().map(Ideal::render).collect::<Vec<_>>(),
                "maximal_elements": k.maximal_elements.iter().map(Ideal::render).collect::<Vec<_>>(),
            })
        }
        Command::Localize => {
            let loc = LocalizedRing::new(s)?;
            let mut v = json!({
                "t": r.render(loc.max_multiple()),
                "idempotent": r.render(loc.idempotent()),
                "size": loc.ring().size(),
                "localized_ring": loc.ring().describe(),
                "carrier": render_all(r, loc.carrier().iter()),
            });
            if let Some(i) = ideal {
                let li = loc.localize_ideal(&i);
                v["ideal"] = json!(i.render());
                v["localized_ideal"] = json!(render_all(loc.ring(), li.elements().iter()));
                v["contraction"] = json!(loc.contract(&li).render());
            }
            v
        }
    })
}

fn int_query(q: &Query, s: &IntMulSet) -> QResult {
    Ok(match q.command {
        Command::StrongMul => {
            let (sm, why) = s.strongly_multiplicative();
            json!({ "verdict": sm, "reason": why })
        }
        Command::SPrime => {
            let n = int_ideal(q.ideal.as_deref())?;
            let w = zint::is_s_prime_z(&n, s)?;
            json!({
                "ideal": n.to_string(),
                "s_prime": w.is_some(),
                "s": w.as_ref().map(|w| w.s),
                "colon": w.map(|w| w.colon.to_string()),
            })
        }
        Command::Localize => {
            let n = int_ideal(q.ideal.as_deref())?;
            json!({ "ideal": n.to_string(), "contraction": s.contraction(&n).to_string(), "meets_set": s.meets(&n) })
        }
        c => return Err(semantic(format!("{} is not available over Z", c.name()))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(command: Command, ring: &str, set: &str, ideal: Option<&str>) -> Value {
        run_query(&Query { command, ring: ring.into(), set: set.into(), ideal: ideal.map(Into::into), budget: 64 }).unwrap()
    }

    #[test]
    fn examples() {
        let v = run(Command::StrongMul, "Zn 6", "<3>", None);
        assert_eq!(v["verdict"], json!(true));
        assert_eq!(v["t"], json!("3"));
        assert_eq!(v["witness"], json!("3"));
        let v = run(Command::SMinimal, "Zn 4 x Zn 9", "<(1,0)>", None);
        assert_eq!(v["result"], json!([{ "ideal": "2Z4 x 0", "prime": false, "witness": ["(0,1)", "(1,0)"] }]));
        let v = run(Command::Krull, "Zn 6", "<3>", None);
        assert_eq!(v["found_elements"], json!(["0", "2", "4"]));
        let v = run(Command::SPrime, "Z", "complement (2)", Some("(18)"));
        assert_eq!(v["s"], json!(9));
    }

    #[test]
    fn budget_is_enforced() {
        let q = Query { command: Command::StrongMul, ring: "Zn 100".into(), set: "<1>".into(), ideal: None, budget: 64 };
        assert!(run_query(&q).unwrap_err().message.contains("budget"));
    }
}
