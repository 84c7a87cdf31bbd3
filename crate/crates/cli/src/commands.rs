use autotame::amalgam::{self, AffBa, LetterVerdict, Position};
use autotame::automorphism::Auto;
use autotame::coefficients::{Field, RatFunc, Ring, UniPoly};
use autotame::nagata::{self, SigmaParams, Verdict};
use autotame::pstable::{self, Order, PStableSet};
use autotame::syntax;
use autotame::vdk::{self, ReductionStep};
use autotame::{Error, Word};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Mode, Over, SigmaAction};

/// A failure together with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn parse(e: Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }

    fn domain(e: Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

type Out = Result<Value, Failure>;

fn input<T>(r: autotame::Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::parse)
}

fn domain<T>(r: autotame::Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::domain)
}

enum Either<F: Field> {
    R(Auto<UniPoly<F>>),
    K(Auto<RatFunc<F>>),
}

/// Parses over `K`, then moves to `R` when asked to, or by default when
/// every coefficient is integral.
fn load<F: Field>(s: &str, ctx: &F::Ctx, over: Option<Over>) -> Result<Either<F>, Failure> {
    let k = input(syntax::parse_kauto::<F>(s, ctx))?;
    match over {
        Some(Over::K) => Ok(Either::K(k)),
        Some(Over::R) => Ok(Either::R(input(k.to_polynomial_ring())?)),
        None if k.is_integral() => Ok(Either::R(k.to_polynomial_ring().expect("integral"))),
        None => Ok(Either::K(k)),
    }
}

fn ring_name(over: Over) -> &'static str {
    match over {
        Over::R => "R",
        Over::K => "K",
    }
}

fn classify_json<C: Ring>(a: &Auto<C>, over: Over) -> Value {
    let flags = a.classify();
    let map: serde_json::Map<String, Value> =
        flags.as_pairs().iter().map(|(k, v)| (k.to_string(), Value::Bool(*v))).collect();
    json!({ "over": ring_name(over), "flags": map })
}

fn jacobian_json<C: Ring>(a: &Auto<C>, over: Over) -> Value {
    let j = a.jacobian();
    let row = |i: usize| json!([j.entries[i][0].to_string(), j.entries[i][1].to_string()]);
    json!({ "over": ring_name(over), "entries": [row(0), row(1)], "determinant": j.determinant().to_string() })
}

fn word_json<C: Ring>(w: &Word<Auto<C>>) -> Value {
    let letters: Vec<Value> =
        w.letters.iter().map(|l| json!({ "tag": l.tag.to_string(), "auto": l.elem.to_string() })).collect();
    json!({ "text": w.to_string(), "letters": letters })
}

fn steps_json<C: Ring>(steps: &[ReductionStep<C>]) -> Value {
    steps
        .iter()
        .map(|s| json!({ "alpha": s.alpha.to_string(), "d": s.d, "side": s.side.to_string() }))
        .collect()
}

fn verdicts_json(v: &[LetterVerdict]) -> Value {
    v.iter()
        .map(|l| {
            let position = match l.position {
                Position::First => "first",
                Position::Interior => "interior",
                Position::Last => "last",
                Position::Only => "only",
            };
            json!({
                "index": l.index,
                "tag": l.tag.to_string(),
                "position": position,
                "coset": l.coset,
                "passes": l.passes,
            })
        })
        .collect()
}

fn sigma_params<F: Field>(a: &str, p: &str, q: &str, ctx: &F::Ctx) -> Result<SigmaParams<F>, Failure> {
    let a = input(syntax::parse_tpoly::<F>(a, ctx))?;
    let p = input(syntax::parse_rpoly::<F>(p, ctx))?;
    let q = input(syntax::parse_rpoly::<F>(q, ctx))?;
    domain(SigmaParams::new(a, p, q))
}

fn pset(s: &str, p: u64) -> Result<PStableSet, Failure> {
    let set = input(syntax::parse_pset(s))?;
    input(set.validate(p))?;
    Ok(set)
}

pub fn execute<F: Field>(cli: &Cli, ctx: &F::Ctx) -> Out {
    let p = F::characteristic(ctx);
    match &cli.command {
        Command::Classify { auto } => Ok(match load::<F>(auto, ctx, cli.over)? {
            Either::R(a) => classify_json(&a, Over::R),
            Either::K(a) => classify_json(&a, Over::K),
        }),
        Command::Jacobian { auto } => Ok(match load::<F>(auto, ctx, cli.over)? {
            Either::R(a) => jacobian_json(&a, Over::R),
            Either::K(a) => jacobian_json(&a, Over::K),
        }),
        Command::Compose { left, right } => {
            let over = cli.over.unwrap_or(Over::K);
            let l = load::<F>(left, ctx, Some(Over::K))?;
            let r = load::<F>(right, ctx, Some(Over::K))?;
            let (Either::K(l), Either::K(r)) = (l, r) else { unreachable!("loaded over K") };
            let c = l.compose(&r);
            let shown = match over {
                Over::K => c.to_string(),
                Over::R => input(c.to_polynomial_ring())?.to_string(),
            };
            Ok(json!({ "over": ring_name(over), "result": shown }))
        }
        Command::Invert { auto } => match load::<F>(auto, ctx, cli.over)? {
            Either::R(a) => Ok(json!({ "over": "R", "inverse": domain(a.invert())?.to_string() })),
            Either::K(a) => Ok(json!({ "over": "K", "inverse": domain(a.invert())?.to_string() })),
        },
        Command::Decompose { auto, mode } => {
            let a = input(syntax::parse_kauto::<F>(auto, ctx))?;
            match mode {
                Mode::Plain | Mode::DiffAffine => {
                    let d = domain(if *mode == Mode::Plain {
                        vdk::decompose(&a)
                    } else {
                        vdk::decompose_diff_affine(&a)
                    })?;
                    Ok(json!({
                        "word": word_json(&d.word),
                        "length": d.length(),
                        "steps": steps_json(&d.steps),
                    }))
                }
                Mode::Additive => {
                    let f = domain(vdk::decompose_additive(&a))?;
                    let letters: Vec<String> = f.letters.iter().map(|l| l.to_string()).collect();
                    Ok(json!({ "letters": letters, "steps": steps_json(&f.steps) }))
                }
            }
        }
        Command::Length { auto } => {
            let a = input(syntax::parse_kauto::<F>(auto, ctx))?;
            Ok(json!({ "length": domain(vdk::length_of(&a))? }))
        }
        Command::Equivalent { left, right } => {
            let l = input(syntax::parse_kword::<F>(left, ctx))?;
            let r = input(syntax::parse_kword::<F>(right, ctx))?;
            let g = AffBa::<RatFunc<F>>::new(ctx.clone());
            Ok(match amalgam::equivalent(&l, &r, &g) {
                Some(etas) => json!({
                    "equivalent": true,
                    "witness": etas.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                }),
                None => json!({ "equivalent": false, "witness": Value::Null }),
            })
        }
        Command::Pstable { set } => {
            let s = pset(set, p)?;
            let st = domain(pstable::is_p_stable(&s, p))?;
            let audit = pstable::condition_iv_counterexample(&s, p, cli.bound);
            Ok(json!({
                "set": s.to_string(),
                "stable": st.stable,
                "exact": st.is_exact(),
                "certificate": st.certificate.to_string(),
                "audit_bound": cli.bound,
                "audit_counterexample": audit.map(|(n, k)| json!({ "n": n, "k": k })),
            }))
        }
        Command::Order { i, j } => {
            let (si, sj) = (pset(i, p)?, pset(j, p)?);
            Ok(match domain(pstable::ai_order(&si, &sj, p, cli.bound))? {
                Order::Subset { exact, bound } => {
                    json!({ "subset": true, "exact": exact, "bound": bound, "witness": Value::Null })
                }
                Order::NotSubset(n) => json!({ "subset": false, "exact": true, "bound": Value::Null, "witness": n }),
            })
        }
        Command::InAi { auto, i } => {
            let s = pset(i, p)?;
            let a = input(syntax::parse_kauto::<F>(auto, ctx))?;
            Ok(match domain(pstable::triangular_in_ai(&a, &s, p))? {
                Some((b, c)) => json!({
                    "member": true,
                    "factorization": { "b": b.to_string(), "c": c.to_string() },
                }),
                None => json!({ "member": false, "factorization": Value::Null }),
            })
        }
        Command::Sigma { action, a, big_p, big_q, i } => {
            let s = sigma_params::<F>(a, big_p, big_q, ctx)?;
            match action {
                SigmaAction::Build => {
                    let sig = domain(nagata::make_sigma(&s))?;
                    Ok(json!({ "sigma": sig.auto.to_string(), "word": word_json(&sig.word) }))
                }
                SigmaAction::Tame => Ok(json!({ "tame": domain(nagata::sigma_is_tame(&s))? })),
                SigmaAction::Diffaffine => Ok(json!({ "diff_affine": nagata::sigma_is_diff_affine(&s) })),
                SigmaAction::Ht => Ok(json!({ "in_ht": domain(nagata::sigma_in_ht(&s))? })),
                SigmaAction::Witness => {
                    let set = pset(i, p)?;
                    let sig = domain(nagata::make_sigma(&s))?;
                    let word = domain(vdk::decompose(&sig.auto.to_fraction_field()))?.word;
                    let letters = domain(amalgam::criterion_letters(&word, &set))?;
                    let fails = letters.iter().any(|l| !l.passes);
                    Ok(json!({
                        "set": set.to_string(),
                        "word": word_json(&word),
                        "letters": verdicts_json(&letters),
                        "verdict": if fails { "NOT_IN" } else { "INCONCLUSIVE" },
                    }))
                }
            }
        }
        Command::Witness { i, j, a } => {
            let (si, sj) = (pset(i, p)?, pset(j, p)?);
            let a = input(syntax::parse_tpoly::<F>(a, ctx))?;
            let w = domain(nagata::nonnormality_witness(&si, &sj, &a, cli.bound))?;
            Ok(json!({
                "n": w.n,
                "g": w.g.to_string(),
                "t": w.t.to_string(),
                "conjugate": w.conjugate.to_string(),
                "word": word_json(&w.word),
                "reduced": w.reduced,
                "letters": verdicts_json(&w.letters),
                "verdict": match w.verdict {
                    Verdict::NotIn => "NOT_IN",
                    Verdict::Inconclusive => "INCONCLUSIVE",
                },
            }))
        }
        Command::Batch => Err(Failure { code: 2, message: "batch cannot be nested".into() }),
    }
}
