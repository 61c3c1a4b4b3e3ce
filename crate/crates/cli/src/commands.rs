use std::io::{self, BufRead, BufWriter, Write};

use cylindric_core::bijection::{
    forward, inverse, inverse_odd_11_with, BijectionError, DependencyRule, Flavor, MoveTrace,
    PartitionPair,
};
use cylindric_core::identities::{self, run_check, VerifyConfig, CHECK_NAMES};
use cylindric_core::qseries::{Ring, TruncatedSeries};
use cylindric_core::{
    count_sequence, enumerate_cylindric, refined_counts, CylindricPartition, Profile,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Cli, CliError, Command, Format, MapFlavor, SeriesName};

type Out = BufWriter<io::StdoutLock<'static>>;

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let mut out = BufWriter::new(io::stdout().lock());
    let fmt = cli.format;
    match &cli.command {
        Command::Enumerate {
            profile,
            weight,
            filter,
        } => {
            for lam in enumerate_cylindric(profile, *weight, *filter) {
                match fmt {
                    Format::Json => writeln!(out, "{}", to_json(&lam))?,
                    Format::Text => writeln!(out, "{lam}")?,
                }
            }
        }
        Command::Count {
            profile,
            max_weight,
            filter,
            refined,
        } => count(&mut out, fmt, profile, *max_weight, *filter, *refined)?,
        Command::Series {
            name,
            profile,
            order,
        } => series(&mut out, fmt, *name, profile, *order)?,
        Command::Map {
            profile,
            flavor,
            trace,
        } => map(&mut out, profile, *flavor, *trace)?,
        Command::Unmap { strict, trace } => unmap(&mut out, *strict, *trace)?,
        Command::Verify { check, order } => verify(&mut out, fmt, check, *order)?,
        Command::OcTable { max_weight } => {
            let table = identities::oc_vs_enumeration(*max_weight);
            match fmt {
                Format::Json => writeln!(out, "{}", to_json(&table))?,
                Format::Text => write!(out, "{}", table.to_markdown())?,
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn count(
    out: &mut Out,
    fmt: Format,
    profile: &Profile,
    max_weight: u64,
    filter: cylindric_core::PartFilter,
    refined: bool,
) -> Result<(), CliError> {
    if refined {
        let table = refined_counts(profile, max_weight, filter);
        let entries: Vec<[u64; 3]> = table.entries().map(|(m, n, c)| [m, n, c]).collect();
        match fmt {
            Format::Json => writeln!(
                out,
                "{}",
                json!({"profile": profile, "filter": filter, "max_weight": max_weight, "entries": entries})
            )?,
            Format::Text => {
                writeln!(out, "largest weight count")?;
                for [m, n, c] in entries {
                    writeln!(out, "{m} {n} {c}")?;
                }
            }
        }
    } else {
        let counts = count_sequence(profile, max_weight, filter);
        match fmt {
            Format::Json => writeln!(
                out,
                "{}",
                json!({"profile": profile, "filter": filter, "counts": counts})
            )?,
            Format::Text => writeln!(out, "{}", to_json(&counts))?,
        }
    }
    Ok(())
}

/// Text form without quotes: `[1,2,3]`, or nested lists for polynomial
/// coefficients.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(plain).collect();
            format!("[{}]", inner.join(","))
        }
        other => other.to_string(),
    }
}

fn emit_series<R: Ring>(
    out: &mut Out,
    fmt: Format,
    name: &str,
    s: &TruncatedSeries<R>,
) -> Result<(), CliError> {
    let coeffs = s.to_json();
    match fmt {
        Format::Json => writeln!(
            out,
            "{}",
            json!({"name": name, "order": s.order(), "coefficients": coeffs})
        )?,
        Format::Text => writeln!(out, "{}", plain(&coeffs))?,
    }
    Ok(())
}

fn series(
    out: &mut Out,
    fmt: Format,
    name: SeriesName,
    profile: &Profile,
    order: usize,
) -> Result<(), CliError> {
    use identities as id;
    match name {
        SeriesName::Borodin => emit_series(out, fmt, "borodin", &id::borodin_series(profile, order)),
        SeriesName::F11 => emit_series(out, fmt, "f11", &id::f11_closed(order)),
        SeriesName::F20 => emit_series(out, fmt, "f20", &id::f20_closed(order)),
        SeriesName::F11z => emit_series(out, fmt, "f11z", &id::f11_bivariate(order)),
        SeriesName::D11 => emit_series(out, fmt, "d11", &id::d11_series(order)),
        SeriesName::D20 => emit_series(out, fmt, "d20", &id::d20_series(order)),
        SeriesName::D11t => emit_series(out, fmt, "d11t", &id::d11_bivariate(order)),
        SeriesName::D20t => emit_series(out, fmt, "d20t", &id::d20_bivariate(order)),
        SeriesName::Oc => emit_series(out, fmt, "oc", &id::oc_two_sum(order)),
    }
}

fn bijection_error(e: BijectionError) -> CliError {
    match e {
        BijectionError::NotInImage { .. } => CliError::NotInImage(e.to_string()),
        other => CliError::Invalid(other.to_string()),
    }
}

/// Accepts `{"profile":[..],"rows":[..]}` or a bare `[[..],[..]]`.
fn parse_cylindric(line: &str, profile: &Profile) -> Result<CylindricPartition, CliError> {
    let v: Value =
        serde_json::from_str(line).map_err(|e| CliError::Invalid(format!("bad JSON: {e}")))?;
    let (rows, given) = match v {
        Value::Object(mut m) => {
            let rows = m.remove("rows").ok_or_else(|| CliError::Invalid("missing \"rows\"".into()))?;
            let given = match m.remove("profile") {
                Some(p) => Some(
                    serde_json::from_value::<Profile>(p)
                        .map_err(|e| CliError::Invalid(format!("bad profile: {e}")))?,
                ),
                None => None,
            };
            (rows, given)
        }
        rows @ Value::Array(_) => (rows, None),
        _ => return Err(CliError::Invalid("expected an object or an array of rows".into())),
    };
    if let Some(g) = given {
        if &g != profile {
            return Err(CliError::Invalid(format!(
                "input profile {g} does not match --profile {profile}"
            )));
        }
    }
    let rows: Vec<Vec<i64>> = serde_json::from_value(rows)
        .map_err(|e| CliError::Invalid(format!("bad rows: {e}")))?;
    CylindricPartition::validate(&rows, profile).map_err(|e| CliError::Invalid(e.to_string()))
}

/// An output object with the move log appended under `"trace"`.
#[derive(Serialize)]
struct Traced<'a, T: Serialize> {
    #[serde(flatten)]
    item: &'a T,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a MoveTrace>,
}

fn input_lines() -> impl Iterator<Item = Result<String, CliError>> {
    io::stdin()
        .lock()
        .lines()
        .map(|l| l.map_err(CliError::from))
        .filter(|l| l.as_ref().map_or(true, |s| !s.trim().is_empty()))
}

fn map(out: &mut Out, profile: &Profile, flavor: MapFlavor, trace: bool) -> Result<(), CliError> {
    let flavor = match (flavor, profile.entries()) {
        (MapFlavor::Plain, [1, 1]) => Flavor::DistinctOdd,
        (MapFlavor::Plain, [2, 0]) => Flavor::DistinctEven,
        (MapFlavor::Odd, [1, 1]) => Flavor::DoubledOdd,
        _ => {
            return Err(CliError::Invalid(format!(
                "no bijection for profile {profile} with this flavor"
            )))
        }
    };
    for line in input_lines() {
        let lam = parse_cylindric(&line?, profile)?;
        let (pair, t) = forward(&lam, flavor).map_err(bijection_error)?;
        let item = Traced { item: &pair, trace: trace.then_some(&t) };
        writeln!(out, "{}", to_json(&item))?;
    }
    Ok(())
}

fn unmap(out: &mut Out, strict: bool, trace: bool) -> Result<(), CliError> {
    let rule = if strict {
        DependencyRule::Exactly
    } else {
        DependencyRule::AtMost
    };
    for line in input_lines() {
        let pair: PartitionPair = serde_json::from_str(&line?)
            .map_err(|e| CliError::Invalid(format!("bad pair: {e}")))?;
        let (lam, t) = if pair.flavor == Flavor::DoubledOdd {
            inverse_odd_11_with(&pair, rule)
        } else {
            inverse(&pair)
        }
        .map_err(bijection_error)?;
        let item = Traced { item: &lam, trace: trace.then_some(&t) };
        writeln!(out, "{}", to_json(&item))?;
    }
    Ok(())
}

fn verify(out: &mut Out, fmt: Format, check: &str, order: Option<usize>) -> Result<(), CliError> {
    if check != "all" && !CHECK_NAMES.contains(&check) {
        return Err(CliError::Invalid(format!(
            "unknown check {check:?}; expected all or one of {}",
            CHECK_NAMES.join(", ")
        )));
    }
    let cfg = order.map_or_else(VerifyConfig::default, VerifyConfig::with_order);
    let reports = run_check(check, &cfg).map_err(|e| CliError::Invalid(e.to_string()))?;
    for r in &reports {
        match fmt {
            Format::Json => writeln!(out, "{}", to_json(r))?,
            Format::Text => writeln!(out, "{}", r.summary_line())?,
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    if fmt == Format::Text {
        writeln!(out, "{} of {} checks passed", reports.len() - failed, reports.len())?;
    }
    out.flush()?;
    if failed > 0 {
        return Err(CliError::VerificationFailed(failed));
    }
    Ok(())
}
