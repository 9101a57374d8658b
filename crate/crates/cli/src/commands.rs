use std::fmt;

use serde_json::{json, Value};

use hurwitz_core::hurwitz::{self, FastPathLimits, HurwitzMethod, HurwitzValue};
use hurwitz_core::identities::{self, IdentityKind};
use hurwitz_core::rational::{render, to_pair};
use hurwitz_core::sym_group::{partitions_of, EnumerationBudget, Partition};
use hurwitz_core::{Error, TruncatedSeries};

use crate::args::{
    ComputeSource, Format, HodgeArgs, HurwitzArgs, HurwitzSourceArg, IdentityArg, SeriesArgs,
    VerifyArgs,
};
use crate::output::Report;

#[derive(Debug)]
pub enum CliError {
    /// Bad input or a capacity bound; exit status 2.
    Usage(String),
    /// A computed check disagreed; exit status 1.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// What a command produced: stdout text, diagnostics, and the exit status.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub notes: Vec<String>,
    pub exit_code: u8,
}

pub struct Context {
    pub format: Format,
    pub budget: EnumerationBudget,
}

impl Context {
    fn method(&self, source: ComputeSource) -> HurwitzMethod {
        match source {
            ComputeSource::Fast => HurwitzMethod::CutJoin(FastPathLimits::default()),
            ComputeSource::Oracle => HurwitzMethod::Oracle(self.budget),
            ComputeSource::Closed => HurwitzMethod::ClosedForm,
        }
    }
}

fn profiles(d: usize, eta: Option<&str>) -> Result<Vec<Partition>, CliError> {
    match eta {
        Some(text) => {
            let eta: Partition = text.parse()?;
            if eta.size() != d {
                return Err(CliError::Usage(format!("eta = {eta} is not a partition of d = {d}")));
            }
            Ok(vec![eta])
        }
        None => Ok(partitions_of(d)?),
    }
}

fn value_json(v: &HurwitzValue) -> Value {
    serde_json::to_value(hurwitz::HurwitzJson::from(v)).expect("value serializes")
}

pub fn cmd_hurwitz(ctx: &Context, args: &HurwitzArgs) -> Result<Outcome, CliError> {
    let etas = profiles(args.d, args.eta.as_deref())?;
    let mut notes = Vec::new();
    let report = if args.source == HurwitzSourceArg::Both {
        let mut report = Report::new(vec!["d", "eta", "g", "r", "oracle", "cutjoin", "diff"]);
        let mut mismatches = 0;
        for eta in &etas {
            for g in args.g.iter() {
                let oracle = hurwitz::hurwitz_value(g, eta, HurwitzMethod::Oracle(ctx.budget))?;
                let fast = hurwitz::hurwitz_value(g, eta, HurwitzMethod::fast())?;
                let diff = &fast.value - &oracle.value;
                if fast.value != oracle.value {
                    mismatches += 1;
                }
                report.push(
                    vec![
                        args.d.to_string(),
                        eta.to_string(),
                        g.to_string(),
                        oracle.r.to_string(),
                        render(&oracle.value),
                        render(&fast.value),
                        render(&diff),
                    ],
                    json!({
                        "d": args.d,
                        "eta": eta.parts(),
                        "g": g,
                        "r": oracle.r,
                        "oracle": to_pair(&oracle.value),
                        "cutjoin": to_pair(&fast.value),
                        "diff": to_pair(&diff),
                    }),
                );
            }
        }
        if mismatches > 0 {
            return Ok(Outcome {
                stdout: report.render(ctx.format),
                notes: vec![format!("{mismatches} oracle/cut-and-join mismatches")],
                exit_code: 1,
            });
        }
        report
    } else {
        let mut report = Report::new(vec!["d", "eta", "g", "r", "value", "source"]);
        let method = match args.source {
            HurwitzSourceArg::Fast => HurwitzMethod::fast(),
            HurwitzSourceArg::Oracle => HurwitzMethod::Oracle(ctx.budget),
            HurwitzSourceArg::Closed => HurwitzMethod::ClosedForm,
            HurwitzSourceArg::Both => unreachable!(),
        };
        let mut skipped = 0;
        for eta in &etas {
            for g in args.g.iter() {
                let v = hurwitz::hurwitz_value(g, eta, method)?;
                if args.source == HurwitzSourceArg::Fast {
                    match hurwitz::hurwitz_oracle(g, eta, ctx.budget) {
                        Ok(oracle) if oracle != v.value => {
                            return Err(CliError::Failed(format!(
                                "cut-and-join gives {} but the oracle gives {} for g = {g}, eta = {eta}",
                                render(&v.value),
                                render(&oracle)
                            )));
                        }
                        Ok(_) => {}
                        Err(Error::Capacity { .. }) => skipped += 1,
                        Err(e) => return Err(e.into()),
                    }
                }
                report.push(
                    vec![
                        args.d.to_string(),
                        eta.to_string(),
                        g.to_string(),
                        v.r.to_string(),
                        render(&v.value),
                        v.source.to_string(),
                    ],
                    value_json(&v),
                );
            }
        }
        if skipped > 0 {
            notes.push(format!(
                "{skipped} values exceed the enumeration budget of {} words and were not cross-checked",
                ctx.budget.words()
            ));
        }
        report
    };
    Ok(Outcome {
        stdout: report.render(ctx.format),
        notes,
        exit_code: 0,
    })
}

fn series_by_name(ctx: &Context, args: &SeriesArgs) -> Result<TruncatedSeries, CliError> {
    let (d, n) = (args.d, args.order);
    let series = match args.name.to_ascii_lowercase().as_str() {
        "h" => {
            let eta = match &args.eta {
                Some(text) => profiles(d, Some(text))?.remove(0),
                None => Partition::full_cycle(d)?,
            };
            hurwitz::hurwitz_series(&eta, n, ctx.method(args.source))?
        }
        "hd" => hurwitz::one_part_series_closed(d, n)?,
        "cy" => identities::cy_series_closed(d, n)?,
        "d" => identities::dd_series_closed(d, n)?,
        "di" => identities::di_series(d, args.i, n)?,
        "t" => identities::t_series(d, n)?,
        _ => {
            return Err(CliError::Usage(format!(
                "unknown series {:?}; expected one of H, Hd, CY, D, Di, T",
                args.name
            )))
        }
    };
    Ok(series)
}

pub fn cmd_series(ctx: &Context, args: &SeriesArgs) -> Result<Outcome, CliError> {
    let series = series_by_name(ctx, args)?;
    let stdout = match ctx.format {
        Format::Table => format!("{series}\n"),
        Format::Json => format!("{}\n", series.to_json()),
        Format::Csv => {
            let mut out = String::from("k,numerator,denominator\n");
            for (k, c) in series.coeffs().iter().enumerate() {
                let [p, q] = to_pair(c);
                out.push_str(&format!("{k},{p},{q}\n"));
            }
            out
        }
    };
    Ok(Outcome {
        stdout,
        ..Outcome::default()
    })
}

fn identity_kind(arg: IdentityArg) -> IdentityKind {
    match arg {
        IdentityArg::Hd => IdentityKind::FormulaHd,
        IdentityArg::Heta => IdentityKind::FormulaHeta,
        IdentityArg::Cy => IdentityKind::FormulaCyVsMaster,
        IdentityArg::Rel => IdentityKind::TheoremRel,
        IdentityArg::Bpa => IdentityKind::TheoremBpa,
        IdentityArg::Dlf => IdentityKind::FormulaDlf,
    }
}

pub fn cmd_verify(ctx: &Context, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let kinds: Vec<IdentityKind> = if args.all {
        IdentityKind::ALL.to_vec()
    } else if args.identity.is_empty() {
        return Err(CliError::Usage("pass --identity <name> or --all".into()));
    } else {
        let mut kinds: Vec<IdentityKind> = Vec::new();
        for k in args.identity.iter().map(|&a| identity_kind(a)) {
            if !kinds.contains(&k) {
                kinds.push(k);
            }
        }
        kinds
    };
    if args.source == ComputeSource::Closed {
        return Err(CliError::Usage(
            "verify computes Hurwitz numbers; use --source fast or oracle".into(),
        ));
    }
    let method = ctx.method(args.source);
    let mut report = Report::new(vec!["identity", "d", "order", "certified_order", "status"]);
    let mut notes = Vec::new();
    let mut failures = 0;
    for d in args.d.iter() {
        if d == 0 {
            return Err(Error::InvalidDegree(0).into());
        }
        for &kind in &kinds {
            match identities::verify(kind, d, args.order, method) {
                Ok(r) => {
                    if !r.passed {
                        failures += 1;
                        notes.push(format!("{kind} failed at d = {d}: residual {}", r.residual));
                    }
                    let status = if r.passed { "pass" } else { "FAIL" };
                    report.push(
                        vec![
                            kind.to_string(),
                            d.to_string(),
                            r.order.to_string(),
                            r.certified_order.to_string(),
                            status.to_string(),
                        ],
                        serde_json::to_value(&r).expect("report serializes"),
                    );
                }
                Err(Error::HetaDegreeRange(_)) => {
                    notes.push(format!(
                        "{kind} skipped at d = {d}: the relation is only stated for d >= 2"
                    ));
                    report.rows.push(vec![
                        kind.to_string(),
                        d.to_string(),
                        args.order.to_string(),
                        "-".into(),
                        "skipped".into(),
                    ]);
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(Outcome {
        stdout: report.render(ctx.format),
        notes,
        exit_code: if failures > 0 { 1 } else { 0 },
    })
}

pub fn cmd_hodge(ctx: &Context, args: &HodgeArgs) -> Result<Outcome, CliError> {
    let mut report = Report::new(vec!["d", "i", "g", "value"]);
    for g in args.g.iter() {
        let v = identities::hurwitz_hodge_integral(args.d, g, args.i)?;
        report.push(
            vec![
                v.d.to_string(),
                v.i.to_string(),
                v.g.to_string(),
                render(&v.value),
            ],
            json!({"d": v.d, "i": v.i, "g": v.g, "value": to_pair(&v.value)}),
        );
    }
    Ok(Outcome {
        stdout: report.render(ctx.format),
        ..Outcome::default()
    })
}
