use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use s6inv_core::galois::{compare_census, sample_census};
use s6inv_core::genpoly::{
    generic_form, specialize, specialize_named, verify_g1_identity, SexticForm, SpecializedSextic,
    SpecializedSexticJson,
};
use s6inv_core::permgrp::catalog;
use s6inv_core::towers::{
    jacobian_rank_of_set, masuda_generators, tower_for, verify_tower, GeneratorSet, Mutation, Tower, TowerPath,
    VerifyOptions,
};
use s6inv_core::ratfield::RatFunc;
use s6inv_core::permgrp::Perm;
use s6inv_core::{Error, Field, FieldElem};

#[derive(Parser)]
#[command(name = "s6inv", version, about = "Invariant fields of transitive subgroups of S6")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice (points, parameters).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the groups G1..G4 and the named permutations.
    Catalog,
    /// Print the descent tower for a group.
    Derive(TowerArgs),
    /// Check every certificate obligation of a tower.
    Verify {
        #[command(flatten)]
        tower: TowerArgs,
        /// Fault injection: `STEP:GEN` adds 1 to a generator, `STEP:GEN+OTHER`
        /// adds another generator of the same step (1-based).
        #[arg(long)]
        mutate: Option<String>,
        /// Also check the final generators over x1..x6 directly.
        #[arg(long)]
        expanded: bool,
    },
    /// Masuda's invariants of the 3-cycle.
    Masuda {
        #[arg(long = "char", default_value = "0", value_parser = parse_char)]
        characteristic: u64,
    },
    /// Print a generic sextic.
    Genpoly {
        #[arg(long, default_value = "G1")]
        group: String,
        #[arg(long, value_enum, default_value_t = FormArg::Full)]
        form: FormArg,
        #[arg(long = "char", default_value = "0", value_parser = parse_char)]
        characteristic: u64,
        /// Verify the coefficient identity against the tower generators.
        #[arg(long)]
        check: bool,
    },
    /// Specialize a generic sextic at parameter values.
    Specialize {
        #[arg(long, value_enum, default_value_t = FormArg::General)]
        form: FormArg,
        #[arg(long = "char", default_value = "0", value_parser = parse_char)]
        characteristic: u64,
        /// `name=value`, repeatable.
        #[arg(long = "param", value_parser = parse_assignment, conflicts_with = "random")]
        params: Vec<(String, String)>,
        /// Draw integer parameters in [-50, 50] from the seed.
        #[arg(long)]
        random: bool,
        /// Write the JSON document here as well.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Frobenius cycle-type census of a sextic over Q.
    Frobenius {
        /// JSON file written by `specialize`.
        #[arg(long, conflicts_with = "inline", required_unless_present = "inline")]
        poly: Option<PathBuf>,
        /// Coefficients `c6,...,c0`, highest degree first.
        #[arg(long, allow_hyphen_values = true)]
        inline: Option<String>,
        #[arg(long, default_value_t = 5)]
        pmin: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        pmax: u64,
        #[arg(long, default_value = "G1")]
        group: String,
    },
}

#[derive(Args)]
struct TowerArgs {
    #[arg(long)]
    group: String,
    #[arg(long = "char", default_value = "0", value_parser = parse_char)]
    characteristic: u64,
    #[arg(long, value_enum, default_value_t = PathArg::Direct)]
    path: PathArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Direct,
    Descent,
    ArtinSchreier,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Full,
    Char2,
    General,
    GeneralPrinted,
}

impl From<FormArg> for SexticForm {
    fn from(f: FormArg) -> SexticForm {
        match f {
            FormArg::Full => SexticForm::Full,
            FormArg::Char2 => SexticForm::Char2,
            FormArg::General => SexticForm::General,
            FormArg::GeneralPrinted => SexticForm::GeneralPrinted,
        }
    }
}

fn parse_char(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(c @ (0 | 2 | 3 | 5)) => Ok(c),
        _ => Err(format!("characteristic must be one of 0, 2, 3, 5 (got `{s}`)")),
    }
}

fn parse_assignment(s: &str) -> Result<(String, String), String> {
    let (n, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    Ok((n.trim().to_string(), v.trim().to_string()))
}

fn field_of(c: u64) -> Field {
    if c == 0 {
        Field::Rational
    } else {
        Field::Prime(c)
    }
}

/// Exit 1: a verification failed. Exit 2: bad usage. Exit 3: an internal
/// guard tripped.
enum Failure {
    Verification(String),
    Usage(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::CertificateFailure { .. } | Error::IdentityFailure { .. } => Failure::Verification(e.to_string()),
            Error::Parse(_)
            | Error::InvalidField(_)
            | Error::UnknownVariable(_)
            | Error::WrongCharacteristic(_)
            | Error::NeedsCycloField
            | Error::Unsupported(_)
            | Error::ArityMismatch { .. }
            | Error::FieldMismatch(..)
            | Error::InvalidPermutation(_) => Failure::Usage(e.to_string()),
            _ => Failure::Guard(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, doc: &Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(doc).expect("JSON values serialize"));
        } else {
            print!("{}", text());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out { json: cli.json };
    let result = match cli.command {
        Command::Catalog => catalog_cmd(&out),
        Command::Derive(t) => derive_cmd(&out, &t),
        Command::Verify { tower, mutate, expanded } => verify_cmd(&out, cli.seed, &tower, mutate.as_deref(), expanded),
        Command::Masuda { characteristic } => masuda_cmd(&out, cli.seed, characteristic),
        Command::Genpoly { group, form, characteristic, check } => genpoly_cmd(&out, &group, form, characteristic, check),
        Command::Specialize { form, characteristic, params, random, output } => {
            specialize_cmd(&out, cli.seed, form, characteristic, &params, random, output)
        }
        Command::Frobenius { poly, inline, pmin, pmax, group } => {
            frobenius_cmd(&out, cli.seed, poly, inline.as_deref(), pmin, pmax, &group)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(m)) => {
            eprintln!("internal guard: {m}");
            ExitCode::from(3)
        }
    }
}

fn catalog_cmd(out: &Out) -> Outcome {
    let c = catalog();
    let mut groups = Vec::new();
    let mut text = String::new();
    for name in ["G1", "G2", "G3", "G4"] {
        let g = c.group(name).expect("catalog group");
        let gens: Vec<String> = g.generators().iter().map(Perm::to_string).collect();
        let census: serde_json::Map<String, Value> = g
            .cycle_census()?
            .into_iter()
            .map(|(ct, f)| (ct.to_string(), Value::String(f.to_string())))
            .collect();
        let order = g.order()?;
        text.push_str(&format!("{name}  order {order:>3}  generators {}\n", gens.join(" ")));
        groups.push(json!({ "name": name, "order": order, "generators": gens, "transitive": g.is_transitive(), "cycle_census": census }));
    }
    let perms: serde_json::Map<String, Value> = [
        ("sigma1", &c.sigma1),
        ("sigma2", &c.sigma2),
        ("tau", &c.tau),
        ("lambda", &c.lambda),
        ("lambda_sq", &c.lambda_sq),
    ]
    .into_iter()
    .map(|(n, p)| (n.to_string(), Value::String(p.to_string())))
    .collect();
    out.emit(&json!({ "groups": groups, "permutations": perms }), || text);
    Ok(())
}

fn build_tower(t: &TowerArgs) -> Result<Tower, Failure> {
    let path = match t.path {
        PathArg::Direct => TowerPath::Direct,
        PathArg::Descent => {
            if t.characteristic == 3 {
                return Err(Failure::Usage(
                    "--path descent needs a characteristic other than 3; use --path artin-schreier".into(),
                ));
            }
            TowerPath::Descent
        }
        PathArg::ArtinSchreier => TowerPath::ArtinSchreier,
    };
    Ok(tower_for(&t.group, field_of(t.characteristic), path)?)
}

fn set_json(set: &GeneratorSet) -> Value {
    serde_json::to_value(set.to_json()).expect("generator sets serialize")
}

fn derive_cmd(out: &Out, args: &TowerArgs) -> Outcome {
    let t = build_tower(args)?;
    let mut steps = Vec::new();
    let mut text = format!("{} over {} (order {})\n", t.name, t.field.name(), t.group.order()?);
    for (i, s) in t.steps.iter().enumerate() {
        text.push_str(&format!("step {}: {} [{}], degree {}\n", i + 1, s.name, s.acting.join(", "), s.degree()));
        for (n, g) in s.new.names.iter().zip(&s.new.gens) {
            text.push_str(&format!("  {n} = {g}\n"));
        }
        let aux: Vec<Value> = s
            .certificate
            .auxiliaries
            .iter()
            .map(|a| {
                text.push_str(&format!("  aux {} = {}, minimal polynomial {}\n", a.name, a.definition, a.minpoly));
                json!({ "name": a.name, "definition": a.definition.to_string(), "minpoly": a.minpoly.to_string(), "degree": a.degree })
            })
            .collect();
        steps.push(json!({
            "name": s.name,
            "acting": s.acting,
            "degree": s.degree(),
            "generators": set_json(&s.new),
            "auxiliaries": aux,
        }));
    }
    for n in &t.notes {
        text.push_str(&format!("note: {n}\n"));
    }
    let doc = json!({ "tower": t.name, "field": t.field.name(), "group_order": t.group.order()?, "steps": steps, "notes": t.notes });
    out.emit(&doc, || text);
    Ok(())
}

fn parse_mutation(s: &str) -> Result<Mutation, Failure> {
    let bad = || Failure::Usage(format!("--mutate expects STEP:GEN or STEP:GEN+OTHER, got `{s}`"));
    let (step, rest) = s.split_once(':').ok_or_else(bad)?;
    let num = |t: &str| t.trim().parse::<usize>().ok().filter(|&n| n >= 1).map(|n| n - 1).ok_or_else(bad);
    let step = num(step)?;
    Ok(match rest.split_once('+') {
        Some((gen, other)) => Mutation::AddOther { step, gen: num(gen)?, other: num(other)? },
        None => Mutation::AddOne { step, gen: num(rest)? },
    })
}

fn verify_cmd(out: &Out, seed: u64, args: &TowerArgs, mutate: Option<&str>, expanded: bool) -> Outcome {
    let mut t = build_tower(args)?;
    if let Some(m) = mutate {
        t.mutate(parse_mutation(m)?)?;
    }
    let opts = VerifyOptions { seed, expanded_invariance: expanded, ..VerifyOptions::default() };
    let rep = verify_tower(&t, &opts);
    let mut text = format!("{} over {}: {} obligations, seed {seed}\n", rep.tower, rep.field, rep.obligation_count());
    for s in &rep.steps {
        let failed: Vec<&str> = s.checks.iter().filter(|c| !c.passed).map(|c| c.obligation.as_str()).collect();
        text.push_str(&format!(
            "step {} {}: degree {} (expected {}) {}\n",
            s.index + 1,
            s.name,
            s.degree,
            s.expected_degree,
            if failed.is_empty() { "PASS".to_string() } else { format!("FAIL [{}]", failed.join("; ")) }
        ));
    }
    for c in &rep.global {
        text.push_str(&format!("{}: {}\n", c.obligation, if c.passed { "PASS" } else { "FAIL" }));
    }
    text.push_str(&format!("total degree {}, jacobian rank {}\n", rep.total_degree, rep.jacobian_rank));
    let mut doc = serde_json::to_value(&rep).expect("reports serialize");
    doc["seed"] = json!(seed);
    doc["passed"] = json!(rep.passed());
    out.emit(&doc, || text);
    match rep.first_failure() {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

fn masuda_cmd(out: &Out, seed: u64, c: u64) -> Outcome {
    let field = field_of(c);
    let (u, v) = masuda_generators(field);
    let c3 = Perm::parse(3, "(123)")?;
    let fixed = u.apply_perm(&c3)? == u && v.apply_perm(&c3)? == v;
    let vars = u.vars().clone();
    let set = GeneratorSet {
        field,
        vars: vars.clone(),
        names: vec!["s".into(), "u".into(), "v".into()],
        gens: vec![RatFunc::parse(field, &vars, "x + y + z")?, u.clone(), v.clone()],
    };
    let rank = jacobian_rank_of_set(&set, seed, 5)?;
    let doc = json!({
        "field": field.name(),
        "u": u.to_string(),
        "v": v.to_string(),
        "invariant": fixed,
        "jacobian_rank": rank,
        "seed": seed,
    });
    out.emit(&doc, || format!("u = {u}\nv = {v}\ninvariant under (123): {fixed}\njacobian rank of (x+y+z, u, v): {rank}\n"));
    if fixed && rank == 3 {
        Ok(())
    } else {
        Err(Failure::Verification("Masuda invariants failed their checks".into()))
    }
}

fn genpoly_cmd(out: &Out, group: &str, form: FormArg, c: u64, check: bool) -> Outcome {
    if !group.eq_ignore_ascii_case("G1") {
        return Err(Failure::Usage(format!(
            "no generic polynomial is provided for {group}; only G1 has closed-form generic sextics"
        )));
    }
    let field = field_of(c);
    let g = generic_form(form.into(), field)?;
    let mut doc = serde_json::to_value(g.to_json()).expect("sextics serialize");
    let mut text = format!("{g}\n");
    let mut passed = true;
    if check {
        let rep = verify_g1_identity(field)?;
        passed = rep.passed();
        text.push_str(&format!("identity over {}: {}\n", field.name(), if passed { "PASS" } else { "FAIL" }));
        doc["identity"] = serde_json::to_value(&rep).expect("reports serialize");
    }
    out.emit(&doc, || text);
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification("coefficient identity failed".into()))
    }
}

fn specialize_cmd(
    out: &Out,
    seed: u64,
    form: FormArg,
    c: u64,
    params: &[(String, String)],
    random: bool,
    output: Option<PathBuf>,
) -> Outcome {
    let field = field_of(c);
    let g = generic_form(form.into(), field)?;
    let s = if random {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut found = None;
        for _ in 0..100 {
            let v: Vec<FieldElem> = (0..g.params.len()).map(|_| field.from_int(rng.gen_range(-50..=50))).collect();
            match specialize(&g, &v) {
                Ok(s) => {
                    found = Some(s);
                    break;
                }
                Err(Error::PoleAtParameters) => continue,
                Err(e) => return Err(e.into()),
            }
        }
        found.ok_or(Error::RetriesExhausted(100))?
    } else {
        let values = params
            .iter()
            .map(|(n, v)| Ok((n.clone(), field.parse_bare(v)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        specialize_named(&g, &values)?
    };
    let doc = serde_json::to_value(s.to_json()).expect("sextics serialize");
    if let Some(path) = output {
        let body = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        fs::write(&path, body).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    out.emit(&doc, || format!("{s}\n"));
    Ok(())
}

fn read_sextic(poly: Option<PathBuf>, inline: Option<&str>) -> Result<SpecializedSextic, Failure> {
    if let Some(path) = poly {
        let body = fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        let js: SpecializedSexticJson =
            serde_json::from_str(&body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        return Ok(SpecializedSextic::from_json(&js)?);
    }
    let text = inline.expect("clap requires --poly or --inline");
    let q = Field::Rational;
    let c = text.split(',').map(|t| q.parse_bare(t)).collect::<Result<Vec<_>, Error>>()?;
    if c.len() != 7 || c[0].is_zero() {
        return Err(Failure::Usage("--inline needs seven coefficients c6,...,c0 with c6 nonzero".into()));
    }
    let lead = c[0].inv()?;
    Ok(SpecializedSextic::explicit(q, c[1..].iter().map(|a| a * &lead).collect())?)
}

fn frobenius_cmd(
    out: &Out,
    seed: u64,
    poly: Option<PathBuf>,
    inline: Option<&str>,
    pmin: u64,
    pmax: u64,
    group: &str,
) -> Outcome {
    let grp = catalog().group(group).ok_or_else(|| Failure::Usage(format!("unknown group `{group}`")))?;
    let s = read_sextic(poly, inline)?;
    if s.field != Field::Rational {
        return Err(Failure::Usage(format!("frobenius expects a sextic over Q, got {}", s.field.name())));
    }
    let census = sample_census(&s, pmin, pmax)?;
    let cmp = compare_census(&census, &grp.cycle_census()?);
    let counts = census.counts_by_name();
    let doc = json!({
        "census": counts,
        "total": census.total,
        "skipped": census.skipped,
        "tv": cmp.tv,
        "containment": cmp.containment,
        "foreign": cmp.foreign,
        "group": group.to_ascii_uppercase(),
        "seed": seed,
    });
    out.emit(&doc, || {
        let mut t = format!("{s}\nprimes {pmin}..{pmax}: {} usable, {} skipped\n", census.total, census.skipped.len());
        for (ct, n) in &counts {
            t.push_str(&format!("  {ct:<15} {n}\n"));
        }
        t.push_str(&format!("TV distance to {}: {:.4}\ncontainment: {}\n", group.to_ascii_uppercase(), cmp.tv, cmp.containment));
        t
    });
    if cmp.containment {
        Ok(())
    } else {
        Err(Failure::Verification(format!("cycle types outside {group}: {}", cmp.foreign.join(", "))))
    }
}
