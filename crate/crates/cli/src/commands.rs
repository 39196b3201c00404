use std::time::Instant;

use icg_core::balancing::{check_framing_conjecture, is_bivalent_second_degree, lambda_sequence, lambda_step};
use icg_core::combinatorics::{is_bivalent, is_framed, is_separable, membership, StructureParams};
use icg_core::hp::instance_energy;
use icg_core::search::{search as run_search, verify_theorem, Direction, SearchOptions, SearchReport, VerificationReport};
use icg_core::spectral::{extremal_energies, icg_spectrum, DivisorSet};
use icg_core::{delta, delta_inv, hp_eval, DeltaVector, ExponentTuple, ProblemInstance, StructureFilter};
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::{entries, Envelope, Instance, Provenance, Rational};
use crate::{EnergyArgs, Failure, Format, HpArgs, LambdaArgs, SearchArgs, Settings, VerifyArgs};

type Outcome = Result<u8, Failure>;

fn echo<T: Serialize>(args: &T) -> Value {
    serde_json::to_value(args).expect("arguments serialize")
}

fn emit(
    settings: &Settings,
    command: &'static str,
    args: Value,
    instance: Option<&ProblemInstance>,
    result: Value,
    provenance: Provenance,
) -> Outcome {
    Envelope {
        version: crate::output::FORMAT_VERSION,
        command,
        arguments: args,
        instance: instance.map(Instance::from),
        result,
        provenance,
    }
    .print(settings.pretty)?;
    Ok(0)
}

fn predicates(d: &DeltaVector, inst: &ProblemInstance) -> Value {
    let v = d.entries();
    let q_framed = StructureParams::new(inst).ok().map(|p| is_framed(v, Some(p.floor_q)));
    json!({
        "bivalent": is_bivalent(v),
        "framed": is_framed(v, None),
        "q_framed": q_framed,
        "separable": is_separable(v).ok(),
        "second_degree": is_bivalent_second_degree(v).ok(),
        "in_biv": membership(d, StructureFilter::Biv),
        "in_bivstar": membership(d, StructureFilter::BivStar),
        "in_sepstar": membership(d, StructureFilter::SepStar),
    })
}

pub fn hp(args: &HpArgs, settings: &Settings) -> Outcome {
    let (inst, a, d) = match (&args.delta, &args.a) {
        (Some(list), None) => {
            let len = u32::try_from(list.len()).map_err(|_| Failure::invalid("delta vector is too long"))?;
            let inst = ProblemInstance::new(args.p, args.s, len + 1)?;
            let d = DeltaVector::for_instance(list.clone(), &inst)?;
            (inst, delta_inv(&d), d)
        }
        (None, Some(list)) => {
            let a = ExponentTuple::admissible(list.clone(), args.s)?;
            let r = u32::try_from(a.len()).map_err(|_| Failure::invalid("tuple is too long"))?;
            let inst = ProblemInstance::new(args.p, args.s, r)?;
            let d = delta(&a, args.s)?;
            (inst, a, d)
        }
        _ => return Err(Failure::invalid("give exactly one of --delta and --a")),
    };
    let value = hp_eval(inst.prime(), &a);
    let result = json!({
        "tuple": a.entries(),
        "delta": d.entries(),
        "hp": Rational::padic(&value, settings.digits),
        "energy": instance_energy(&inst, &value)?.to_string(),
        "predicates": predicates(&d, &inst),
    });
    emit(settings, "hp", echo(args), Some(&inst), result, Provenance::default())
}

fn ranked_json(report: &SearchReport, digits: u32) -> Result<Value, Failure> {
    let mut out = Vec::new();
    for (i, r) in report.ranked.iter().enumerate() {
        let vectors: Vec<Value> = r
            .vectors
            .iter()
            .map(|d| json!({ "delta": d.entries(), "lambda_levels": lambda_sequence(d.entries()).levels.len() }))
            .collect();
        out.push(json!({
            "rank": i + 1,
            "value": Rational::padic(&r.value, digits),
            "energy": instance_energy(&report.instance, &r.value)?.to_string(),
            "vectors": vectors,
        }));
    }
    Ok(Value::Array(out))
}

fn report_json(report: &SearchReport, digits: u32) -> Result<Value, Failure> {
    Ok(json!({
        "direction": match report.direction {
            Direction::Minimize => "minimize",
            Direction::Maximize => "maximize",
        },
        "min_value": Rational::padic(&report.min_value, digits),
        "minimizers": report.minimizers.iter().map(entries).collect::<Vec<_>>(),
        "max_energy": report.max_energy.to_string(),
        "ranked": ranked_json(report, digits)?,
    }))
}

fn provenance(report: &SearchReport) -> Provenance {
    Provenance {
        filter: Some(report.filter.name().to_string()),
        justification: report.justification.iter().map(|s| s.to_string()).collect(),
        candidates_examined: Some(report.candidates_examined.to_string()),
        elapsed_ms: Some(report.elapsed.as_secs_f64() * 1000.0),
    }
}

fn do_search(inst: &ProblemInstance, filter: StructureFilter, top: usize, jobs: Option<usize>, maximize: bool) -> Result<SearchReport, Failure> {
    if top == 0 {
        return Err(Failure::invalid("--top must be at least 1"));
    }
    let opts = SearchOptions {
        filter,
        top,
        jobs,
        direction: if maximize { Direction::Maximize } else { Direction::Minimize },
        restrict: None,
    };
    Ok(run_search(inst, &opts)?)
}

pub fn search(args: &SearchArgs, settings: &Settings) -> Outcome {
    let inst = ProblemInstance::new(args.p, args.s, args.r)?;
    let report = do_search(&inst, args.filter, args.top, args.jobs, args.maximize)?;
    let result = report_json(&report, settings.digits)?;
    emit(settings, "search", echo(args), Some(&inst), result, provenance(&report))
}

struct Sweep {
    s: (u32, u32),
    r: (u32, u32),
    primes: Vec<u64>,
}

fn parse_range(text: &str) -> Result<(u32, u32), Failure> {
    let bad = || Failure::invalid(format!("expected an inclusive range like 4..14, got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_sweep(text: &str) -> Result<Sweep, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() < 3 {
        return Err(Failure::invalid("sweep needs smin..smax,rmin..rmax,p1[,p2...]"));
    }
    let primes = parts[2..]
        .iter()
        .map(|p| {
            let p: u64 = p.parse().map_err(|_| Failure::invalid(format!("bad prime {p:?}")))?;
            icg_core::Prime::new(p)?;
            Ok(p)
        })
        .collect::<Result<Vec<u64>, Failure>>()?;
    Ok(Sweep {
        s: parse_range(parts[0])?,
        r: parse_range(parts[1])?,
        primes,
    })
}

struct Cell {
    p: u64,
    s: u32,
    r: u32,
    report: Option<VerificationReport>,
}

impl Cell {
    fn status(&self) -> &'static str {
        match &self.report {
            None => "skipped",
            Some(r) if r.passed() => "pass",
            Some(_) => "fail",
        }
    }
}

fn cell_json(cell: &Cell, digits: u32) -> Value {
    let Some(rep) = &cell.report else {
        return json!({ "p": cell.p, "s": cell.s, "r": cell.r, "status": "skipped" });
    };
    json!({
        "p": cell.p,
        "s": cell.s,
        "r": cell.r,
        "status": cell.status(),
        "case": rep.case.name(),
        "min_value": Rational::padic(&rep.search.min_value, digits),
        "minimizers": rep.search.minimizers.iter().map(entries).collect::<Vec<_>>(),
        "closed_form": rep.closed_form.as_ref().map(|c| Rational::new(c, digits)),
        "closed_form_matches": rep.closed_form_matches(),
        "predicted": rep.predicted.as_ref().map(|v| v.iter().map(entries).collect::<Vec<_>>()),
        "candidates_examined": rep.search.candidates_examined.to_string(),
        "diff": rep.diff(),
    })
}

fn write_csv(cells: &[Cell], digits: u32) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    let io = |e: csv::Error| Failure {
        code: 1,
        message: format!("cannot write csv: {e}"),
    };
    w.write_record(["p", "s", "r", "status", "case", "min_num", "min_den", "min_decimal", "minimizers", "diff"])
        .map_err(io)?;
    for c in cells {
        let mut row = vec![c.p.to_string(), c.s.to_string(), c.r.to_string(), c.status().to_string()];
        match &c.report {
            None => row.extend(std::iter::repeat_n(String::new(), 6)),
            Some(rep) => {
                let v = Rational::padic(&rep.search.min_value, digits);
                let mins: Vec<String> = rep
                    .search
                    .minimizers
                    .iter()
                    .map(|d| d.entries().iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                row.extend([rep.case.name().to_string(), v.num, v.den, v.decimal, mins.join(";"), rep.diff().join("; ")]);
            }
        }
        w.write_record(&row).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

pub fn verify(args: &VerifyArgs, settings: &Settings) -> Outcome {
    let start = Instant::now();
    let cells: Vec<Cell> = match (&args.sweep, args.p, args.s, args.r) {
        (Some(text), ..) => {
            let sweep = parse_sweep(text)?;
            let mut cells = Vec::new();
            for &p in &sweep.primes {
                for s in sweep.s.0..=sweep.s.1 {
                    for r in sweep.r.0..=sweep.r.1 {
                        let report = match ProblemInstance::new(p, s, r) {
                            Ok(inst) if inst.require_theorem_hypotheses().is_ok() => Some(verify_theorem(&inst)?),
                            _ => None,
                        };
                        cells.push(Cell { p, s, r, report });
                    }
                }
            }
            cells
        }
        (None, Some(p), Some(s), Some(r)) => {
            let inst = ProblemInstance::new(p, s, r)?;
            vec![Cell {
                p,
                s,
                r,
                report: Some(verify_theorem(&inst)?),
            }]
        }
        _ => return Err(Failure::invalid("give --p, --s and --r, or --sweep")),
    };
    let failed = cells.iter().filter(|c| c.status() == "fail").count();
    let code = if failed > 0 { 4 } else { 0 };
    if settings.format == Format::Csv {
        write_csv(&cells, settings.digits)?;
        return Ok(code);
    }
    let passed = cells.iter().filter(|c| c.status() == "pass").count();
    let skipped = cells.len() - passed - failed;
    let result = json!({
        "cells": cells.iter().map(|c| cell_json(c, settings.digits)).collect::<Vec<_>>(),
        "summary": { "pass": passed, "fail": failed, "skipped": skipped },
    });
    let instance = match (args.p, args.s, args.r) {
        (Some(p), Some(s), Some(r)) => ProblemInstance::new(p, s, r).ok(),
        _ => None,
    };
    let prov = Provenance {
        elapsed_ms: Some(start.elapsed().as_secs_f64() * 1000.0),
        ..Provenance::default()
    };
    emit(settings, "verify", echo(args), instance.as_ref(), result, prov)?;
    Ok(code)
}

fn lambda_json(v: &[u32], with_conjecture: bool) -> Value {
    let report = check_framing_conjecture(v);
    let steps: Vec<Value> = report.sequence.levels[..report.sequence.levels.len() - 1]
        .iter()
        .map(|level| {
            let step = lambda_step(level).expect("defined below the last level");
            json!({
                "separator": step.separator,
                "counted": step.counted,
                "tie_alternative": step.tie_alternative,
            })
        })
        .collect();
    let mut out = json!({
        "levels": report.sequence.levels,
        "terminal": report.sequence.terminal.name(),
        "degree": report.sequence.degree(),
        "framed": report.framed,
        "steps": steps,
    });
    if with_conjecture {
        out["conjecture"] = json!(report.outcome.name());
        out["single_entry_convention"] = json!(report.single_entry_convention);
    }
    out
}

pub fn lambda(args: &LambdaArgs, settings: &Settings) -> Outcome {
    if !args.full_from {
        let list = args.delta.as_ref().ok_or_else(|| Failure::invalid("--delta is required"))?;
        let d = DeltaVector::new(list.clone())?;
        // the conjecture concerns energy-maximal tuples, which a bare vector need not be
        let result = lambda_json(d.entries(), false);
        return emit(settings, "lambda", echo(args), None, result, Provenance::default());
    }
    let (Some(p), Some(s), Some(r)) = (args.p, args.s, args.r) else {
        return Err(Failure::invalid("--full-from needs --p, --s and --r"));
    };
    let inst = ProblemInstance::new(p, s, r)?;
    let report = do_search(&inst, args.filter, args.top, args.jobs, false)?;
    let mut tuples = Vec::new();
    for (i, ranked) in report.ranked.iter().enumerate() {
        for d in &ranked.vectors {
            let mut item = lambda_json(d.entries(), i == 0);
            item["rank"] = json!(i + 1);
            item["delta"] = json!(d.entries());
            tuples.push(item);
        }
    }
    let result = json!({
        "search": report_json(&report, settings.digits)?,
        "tuples": tuples,
    });
    emit(settings, "lambda", echo(args), Some(&inst), result, provenance(&report))
}

pub fn energy(args: &EnergyArgs, settings: &Settings) -> Outcome {
    if args.all_subsets {
        let start = Instant::now();
        let ext = extremal_energies(args.n, args.guard)?;
        let sets = |list: &[DivisorSet]| list.iter().map(|d| d.divisors().collect::<Vec<_>>()).collect::<Vec<_>>();
        let result = json!({
            "n": args.n,
            "subsets_examined": ext.subsets_examined,
            "e_min": ext.e_min.to_string(),
            "min_sets": sets(&ext.min_sets),
            "e_max": ext.e_max.to_string(),
            "max_sets": sets(&ext.max_sets),
        });
        let prov = Provenance {
            elapsed_ms: Some(start.elapsed().as_secs_f64() * 1000.0),
            ..Provenance::default()
        };
        return emit(settings, "energy", echo(args), None, result, prov);
    }
    let list = args.divisors.as_ref().ok_or_else(|| Failure::invalid("--divisors is required"))?;
    let ds = DivisorSet::new(args.n, list.iter().copied())?;
    let spectrum = icg_spectrum(&ds);
    let eigenvalues: Vec<Value> = spectrum
        .multiplicities()
        .into_iter()
        .rev()
        .map(|(value, mult)| json!({ "value": value, "multiplicity": mult }))
        .collect();
    let result = json!({
        "n": args.n,
        "divisors": ds.divisors().collect::<Vec<_>>(),
        "eigenvalues": eigenvalues,
        "energy": spectrum.energy.to_string(),
    });
    emit(settings, "energy", echo(args), None, result, Provenance::default())
}
