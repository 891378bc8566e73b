mod cli;
mod json;

use std::io::Read;
use std::process::ExitCode;

use clap::Parser;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use seor_core::algebra::{phi_embedding_check, super_jacobi_check, super_skew_check};
use seor_core::cohomology::{cocycle_check, independence_check, solve_h2, Explicit, WindowPolicy};
use seor_core::conformal::{annihilation_table, relabel, relabel_check, ConformalAlgebra};
use seor_core::pbw::{BaseAction, Element, Monomial};
use seor_core::rep::{
    build_induced, build_whittaker, claim1_reduce, random_vector, restrictedness_probe, simplicity_probe, top_space,
    top_space_search, validate_module, verma, FiniteModule, InducedModule, QuotientAlgebra, WhittakerData,
};
use seor_core::{Epsilon, Mode, Parity, Preset, Rational, RepError};

use cli::{Cli, Command, Format, Kind, Params};

/// Bad input: exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<RepError> for InputError {
    fn from(e: RepError) -> Self {
        InputError(e.to_string())
    }
}

struct Outcome {
    value: Value,
    passed: bool,
}

fn ok(value: Value) -> Result<Outcome, InputError> {
    Ok(Outcome { value, passed: true })
}

fn judged(value: Value, passed: bool) -> Result<Outcome, InputError> {
    Ok(Outcome { value, passed })
}

fn parse_mode(s: &str) -> Result<Mode, InputError> {
    s.trim().parse::<Mode>().map_err(|e| InputError(e.to_string()))
}

/// A level given as `2` or `3/2`, returned in half-units.
fn level2(s: &str) -> Result<i64, InputError> {
    let m = parse_mode(s)?;
    if m.doubled() < 0 {
        return Err(InputError(format!("level `{s}` is negative")));
    }
    Ok(m.doubled())
}

fn bound2(cli: &Cli, default: i64) -> Result<i64, InputError> {
    cli.weight_bound.as_deref().map_or(Ok(default), level2)
}

fn window(cli: &Cli, default: i64) -> Result<i64, InputError> {
    let w = cli.window.unwrap_or(default);
    if w < 1 {
        return Err(InputError(format!("window must be at least 1, got {w}")));
    }
    Ok(w)
}

fn preset(s: &str) -> Result<Preset, InputError> {
    s.parse::<Preset>().map_err(|e| InputError(e.to_string()))
}

fn epsilon(s: &str) -> Result<Epsilon, InputError> {
    s.parse::<Epsilon>().map_err(|e| InputError(e.to_string()))
}

fn conformal(s: &str) -> Result<ConformalAlgebra, InputError> {
    match s {
        "S" => Ok(ConformalAlgebra::S),
        "NS" => Ok(ConformalAlgebra::NeveuSchwarz),
        _ => Err(InputError(format!("unknown conformal algebra `{s}` (expected S or NS)"))),
    }
}

fn r(s: &str) -> Result<Rational, InputError> {
    json::parse_rational(s)
}

fn verma_module(p: &Params, bound2: i64) -> Result<InducedModule<FiniteModule>, InputError> {
    if r(&p.c2)? != Rational::from_integer(0.into()) {
        return Err(InputError("Verma modules have c2 = 0".into()));
    }
    Ok(verma(r(&p.h1)?, r(&p.h2)?, r(&p.c1)?, bound2))
}

fn whittaker_data(p: &Params) -> Result<WhittakerData, InputError> {
    let mut d = WhittakerData::new(p.k, r(&p.c1)?, r(&p.c2)?);
    if p.odd {
        d.parity = Parity::Odd;
    }
    for item in &p.psi {
        let (g, v) = item.split_once('=').ok_or_else(|| InputError(format!("--psi expects GEN=VALUE, got `{item}`")))?;
        d = d.with(json::parse_gen(g)?, r(v)?);
    }
    Ok(d)
}

fn whittaker_module(p: &Params, bound2: i64) -> Result<InducedModule<WhittakerData>, InputError> {
    Ok(build_whittaker(whittaker_data(p)?, bound2, p.inner_len)?)
}

fn module_summary<B: BaseAction>(m: &InducedModule<B>) -> Value {
    json!({
        "d": m.d(),
        "t": m.t(),
        "weight_bound": json::mode(Mode(m.bound2())),
        "certified": m.certified(),
        "violations": m.violations(),
        "level_dims": m.level_dims(),
        "coefficient_dim": m.coefficient_basis().len(),
    })
}

fn vector_from_word<B: BaseAction>(m: &InducedModule<B>, word: &str) -> Result<Element, InputError> {
    let w = json::parse_word(word)?;
    Ok(m.straightener().act_word(&w, &Element::basis(Monomial::vacuum(0))))
}

fn claim1<B: BaseAction>(m: &InducedModule<B>, word: Option<&str>, samples: Option<usize>, seed: u64, bound2: i64) -> Result<Outcome, InputError> {
    if let Some(n) = samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = simplicity_probe(m, n, bound2, &mut rng).map_err(|e| match e {
            RepError::ConditionViolation(s) => InputError(format!("module is not certified: {s}")),
            e => e.into(),
        })?;
        let passed = rep.passed();
        return judged(json!({"seed": seed, "report": json::report(&rep)}), passed);
    }
    let word = word.ok_or_else(|| InputError("give --word or --samples".into()))?;
    let mut v = vector_from_word(m, word)?;
    let mut steps = Vec::new();
    while !m.in_coefficient_part(&v) {
        match claim1_reduce(m, &v) {
            Ok(s) => {
                steps.push(json!({
                    "case": format!("{:?}", s.case),
                    "generator": json::gen_name(s.gen),
                    "degree_before": json::triple(&s.before),
                    "degree_after": json::triple(&s.expected),
                }));
                v = s.image;
            }
            Err(RepError::ConditionViolation(msg)) if m.certified() => {
                return judged(json!({"steps": steps, "failure": msg}), false);
            }
            Err(e) => return Err(e.into()),
        }
    }
    ok(json!({"steps": steps, "result": json::element(&v)}))
}

fn top<B: BaseAction>(m: &InducedModule<B>, a: i64, b: i64, c: i64, search: bool) -> Result<Outcome, InputError> {
    if search {
        let (t, d) = (m.t() as i64, m.d() as i64);
        let s = top_space_search(m, (-d - 1, t + 1), (0, t + 1), (-1, t + d + 1));
        let dims: Vec<Value> = s.dims.iter().map(|((a, b, c), n)| json!({"a": a, "b": b, "c": c, "dim": n})).collect();
        let minimal: Vec<Value> = s.minimal.iter().map(|(a, b, c)| json!([a, b, c])).collect();
        return ok(json!({"dims": dims, "minimal": minimal, "min_a": s.min_a, "a_equals_b": s.a_equals_b}));
    }
    let space = top_space(m, a, b, c);
    let v: Vec<Element> = m.coefficient_basis().into_iter().map(Element::basis).collect();
    ok(json!({
        "a": a, "b": b, "c": c,
        "dimension": space.len(),
        "coefficient_dim": v.len(),
        "equals_coefficient_space": seor_core::linalg::same_span(&space, &v),
        "basis": space.iter().map(json::element).collect::<Vec<_>>(),
    }))
}

fn restricted<B: BaseAction>(m: &InducedModule<B>, word: &str, samples: Option<usize>, seed: u64) -> Result<Outcome, InputError> {
    let one = |v: &Element| -> Result<Value, InputError> {
        let p = restrictedness_probe(m, v)?;
        Ok(json!({"vector": json::element(v), "r1": p.r1, "r2": p.r2, "r3": p.r3, "limit": p.limit, "tail_zero": p.tail_zero}))
    };
    let vs: Vec<Element> = match samples {
        Some(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let basis = m.basis();
            (0..n).map(|_| random_vector(&basis, &mut rng)).collect()
        }
        None => vec![vector_from_word(m, word)?],
    };
    let results = vs.iter().map(one).collect::<Result<Vec<_>, _>>()?;
    let passed = results.iter().all(|r| r["tail_zero"] == json!(true));
    judged(json!({"seed": seed, "results": results}), passed)
}

macro_rules! with_module {
    ($args:expr, $bound:expr, |$m:ident| $body:expr) => {
        match $args.kind {
            Kind::Verma => {
                let $m = verma_module(&$args.params, $bound)?;
                $body
            }
            Kind::Whittaker => {
                let $m = whittaker_module(&$args.params, $bound)?;
                $body
            }
        }
    };
}

fn read_input(path: &std::path::Path) -> Result<String, InputError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| InputError(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
    }
}

fn run(cli: &Cli) -> Result<Outcome, InputError> {
    match &cli.command {
        Command::Bracket { alg, x, y } => {
            let p = preset(alg)?;
            let (x, y) = (json::parse_super_vector(x)?, json::parse_super_vector(y)?);
            let b = p.bracket(&x, &y).map_err(|e| InputError(e.to_string()))?;
            ok(json!({"result": json::super_vector(&b)}))
        }
        Command::JacobiCheck { alg } => {
            let p = preset(alg)?;
            let w = window(cli, 8)?;
            let (skew, jac) = (super_skew_check(p, w), super_jacobi_check(p, w));
            let passed = skew.passed() && jac.passed();
            judged(json!({"alg": p.name(), "window": w, "skew": json::report(&skew), "jacobi": json::report(&jac), "passed": passed}), passed)
        }
        Command::Annihilation { alg, table } => {
            let a = conformal(alg)?;
            let w = window(cli, 8)?;
            let rep = relabel_check(a, w);
            let mut out = json!({"window": w, "report": json::report(&rep)});
            if *table {
                let rows: Vec<Value> = annihilation_table(a, w)
                    .into_iter()
                    .map(|(x, y, v)| {
                        json!({"x": x.to_string(), "y": y.to_string(), "bracket": v.iter().map(|(g, c)| json!({"gen": g.to_string(), "relabelled": relabel(a, *g).to_string(), "coeff": json::rational(c)})).collect::<Vec<_>>()})
                    })
                    .collect();
                out["table"] = Value::Array(rows);
            }
            let passed = rep.passed();
            judged(out, passed)
        }
        Command::PhiCheck => {
            let rep = phi_embedding_check(window(cli, 5)?);
            let passed = rep.passed();
            judged(json::report(&rep), passed)
        }
        Command::H2 { epsilon: e, explicit } => {
            let eps = epsilon(e)?;
            let w = window(cli, 8)?;
            let s = solve_h2(eps, w).map_err(|e| InputError(e.to_string()))?;
            let mut out = json!({
                "epsilon": eps.to_string(),
                "window": w,
                "dimension": s.dimension,
                "cocycle_dimension": s.cocycle_dimension,
                "residual_coboundary_rank": s.residual_coboundary_rank,
                "unknowns": s.unknowns,
                "equations": s.equations,
                "basis": s.basis.iter().map(json::cocycle).collect::<Vec<_>>(),
            });
            let mut passed = true;
            if *explicit {
                let chosen: Vec<Explicit> = Explicit::ALL.into_iter().filter(|x| x.epsilon() == eps).collect();
                let mut checks = serde_json::Map::new();
                for x in &chosen {
                    let rep = cocycle_check(&x.cocycle(3 * w), w, WindowPolicy::RequireAll).map_err(|e| InputError(e.to_string()))?;
                    passed &= rep.passed();
                    checks.insert(x.name().into(), json::report(&rep));
                }
                let cs: Vec<_> = chosen.iter().map(|x| x.cocycle(w)).collect();
                let ind = independence_check(&cs, w).map_err(|e| InputError(e.to_string()))?;
                passed &= ind.independent;
                out["explicit"] = Value::Object(checks);
                out["independent"] = json!(ind.independent);
            }
            judged(out, passed)
        }
        Command::Verma { params, max_level, dims } => {
            let b = match max_level {
                Some(l) => level2(l)?,
                None => bound2(cli, 4)?,
            };
            let m = verma_module(params, b)?;
            if *dims {
                return ok(json!(m.level_dims()));
            }
            let mut v = module_summary(&m);
            v["highest_weight"] = json!({"h1": params.h1, "h2": params.h2, "c1": params.c1});
            ok(v)
        }
        Command::Singular { params, level } => {
            let l = level2(level)?;
            let m = verma_module(params, bound2(cli, l)?.max(l))?;
            let s = m.singular_vectors(l);
            let eig: Vec<Value> = s
                .iter()
                .map(|e| {
                    let img = m.act_exact(seor_core::Gen::l(0), e);
                    let (mono, c) = e.iter().next().expect("nonzero");
                    let lam = img.coeff(mono) / c;
                    if img == e.scaled(&lam) { json::rational(&lam) } else { Value::Null }
                })
                .collect();
            let sub = m.generated_submodule_dims(&s);
            ok(json!({
                "level": json::mode(Mode(l)),
                "dimension": s.len(),
                "basis": s.iter().map(json::element).collect::<Vec<_>>(),
                "l0_eigenvalues": eig,
                "submodule_dims": sub,
                "proper": sub.first() == Some(&0),
            }))
        }
        Command::Induce { module, d, t } => {
            let v = json::parse_module(&read_input(module)?)?;
            let q = QuotientAlgebra::new(*d, *t);
            let rep = validate_module(&v, &q);
            if !rep.passed() {
                return judged(json!({"validation": json::report(&rep)}), false);
            }
            let m = build_induced(v, *d, *t, bound2(cli, 2)?)?;
            let mut out = module_summary(&m);
            out["validation"] = json::report(&rep);
            ok(out)
        }
        Command::Whittaker { params } => {
            let m = whittaker_module(params, bound2(cli, 2)?)?;
            let mut out = module_summary(&m);
            out["k"] = json!(params.k);
            let passed = m.certified();
            judged(out, passed)
        }
        Command::Claim1 { module, word, samples } => {
            let b = bound2(cli, 4)?;
            with_module!(module, b, |m| claim1(&m, word.as_deref(), *samples, cli.seed, b))
        }
        Command::TopSpace { module, a, b, c, search } => {
            let bd = bound2(cli, 2)?;
            with_module!(module, bd, |m| top(&m, *a, *b, *c, *search))
        }
        Command::RestrictedProbe { module, word, samples } => {
            let b = bound2(cli, 2)?;
            with_module!(module, b, |m| restricted(&m, word, *samples, cli.seed))
        }
        Command::DerivedSeries { d, t } => {
            let q = QuotientAlgebra::new(*d, *t);
            let dims = q.derived_series();
            let solvable = dims.last() == Some(&0);
            judged(json!({"d": d, "t": t, "dims": dims, "solvable": solvable}), solvable)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let s = match cli.format {
                Format::Json => out.value.to_string(),
                Format::Text => json::text(&out.value),
            };
            println!("{s}");
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
