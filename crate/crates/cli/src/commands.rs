use std::fs;
use std::path::Path;

use hwv_core::abp::{flattening_ranks, ncw as width, NcAbp};
use hwv_core::algebra::{waring_expand, DensePoly, Field, WaringPoint, Zeta6, Q};
use hwv_core::eval::{
    eval_abp_stats, eval_naive, eval_treewidth_stats, multiplicity as sample_rank,
    multiplicity_symbolic, EvalError,
};
use hwv_core::io::{self, AnyAbp, AnyPoint, Dual};
use hwv_core::reductions::{
    count_colorings_bruteforce, gen_3col_counting, gen_3col_decision, vandermonde_point,
};
use hwv_core::selftest;
use hwv_core::tableau::{enumerate_ssyt, grid_family, Partition, Tableau, DEFAULT_CAP};
use hwv_core::treedec::{build_computation_tree, minfill_decomposition};
use serde_json::json;

use crate::report::RunReport;
use crate::{CliError, EvalArgs, GenCommand, Method, MinabpArgs, MultiplicityArgs, NcwArgs};

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn write(path: &str, contents: &str, report: &mut RunReport) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    report.outputs.push(path.to_string());
    Ok(())
}

fn set_result<F: Field>(report: &mut RunReport, value: &F) {
    report.result = Some(value.to_scalar());
    report.field = Some(F::KIND);
}

fn integer(v: usize) -> hwv_core::Scalar {
    hwv_core::Scalar::Rational(Q::from_integer(v.into()))
}

// eval

pub fn eval(args: &EvalArgs) -> Result<RunReport> {
    let t = io::tableau_from_json(&read(&args.tableau)?)?;
    let (point, abp): (Option<AnyPoint>, Option<AnyAbp>) = match (&args.point, &args.abp) {
        (Some(p), None) => (Some(io::point_from_json(&read(p)?)?), None),
        (None, Some(a)) => (None, Some(io::abp_from_json(&read(a)?)?)),
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --point and --abp".into(),
            ))
        }
    };
    let mut report = RunReport {
        seed: args.seed,
        ..RunReport::default()
    };
    match (point, abp) {
        (Some(Dual::Rational(p)), _) => run_eval::<Q>(&t, Some(&p), None, args, &mut report)?,
        (Some(Dual::Zeta6(p)), _) => run_eval::<Zeta6>(&t, Some(&p), None, args, &mut report)?,
        (_, Some(Dual::Rational(a))) => run_eval::<Q>(&t, None, Some(a), args, &mut report)?,
        (_, Some(Dual::Zeta6(a))) => run_eval::<Zeta6>(&t, None, Some(a), args, &mut report)?,
        _ => unreachable!("one input was read"),
    }
    Ok(report)
}

fn run_eval<F: Field>(
    t: &Tableau,
    point: Option<&WaringPoint<F>>,
    abp: Option<NcAbp<F>>,
    args: &EvalArgs,
    report: &mut RunReport,
) -> Result<()> {
    let abp = match abp {
        Some(a) => a,
        None => NcAbp::from_waring(point.expect("point or abp"))?,
    };
    let (d, m) = (abp.degree() as usize, abp.nvars());
    if t.d() != d {
        return Err(EvalError::DegreeMismatch {
            tableau: t.d(),
            point: d,
        }
        .into());
    }
    if t.max_column_len() > m {
        return Err(EvalError::ShapeExceedsVariables {
            column_len: t.max_column_len(),
            m,
        }
        .into());
    }
    if t.has_column_repeat() {
        set_result(report, &F::zero());
        report.method = Some("shortcut".into());
        return Ok(());
    }
    if args.method == Method::Naive && point.is_none() {
        return Err(CliError::Usage("the naive method needs --point".into()));
    }

    let mut values: Vec<(&str, F)> = Vec::new();
    if matches!(args.method, Method::Naive | Method::All) {
        if let Some(p) = point {
            report.stat("naive.placements", format!("{}^{}", p.terms.len(), t.n()));
            values.push(("naive", eval_naive(t, p)?));
        }
    }
    if matches!(args.method, Method::Abp | Method::All) {
        let (v, stats) = eval_abp_stats(t, &abp)?;
        report.stat("abp.max_states", stats.max_states);
        report.stat("abp.transitions", stats.transitions);
        values.push(("abp", v));
    }
    if matches!(args.method, Method::Treewidth | Method::All) {
        let td = match &args.decomp {
            Some(path) => io::decomposition_from_json(&read(path)?)?,
            None => minfill_decomposition(&t.graph()?.simple()),
        };
        let ct = build_computation_tree(t, &td, args.minimize_bags)?;
        if let Some(path) = &args.dump_ct {
            let dump = serde_json::to_string_pretty(&ct).expect("trees serialize");
            write(&path.to_string_lossy(), &dump, report)?;
        }
        let (v, stats) = eval_treewidth_stats(t, &abp, &ct)?;
        report.stat("treewidth.decomposition_width", td.width());
        report.stat("treewidth.tree_nodes", ct.nodes.len());
        report.stat("treewidth.max_entries", stats.max_entries);
        report.stat("treewidth.max_keys", stats.max_keys);
        values.push(("treewidth", v));
    }

    let (first_name, first) = values.first().cloned().expect("at least one method ran");
    set_result(report, &first);
    report.method = Some(match args.method {
        Method::All => values.iter().map(|(n, _)| *n).collect::<Vec<_>>().join("+"),
        _ => first_name.to_string(),
    });
    if let Some((name, v)) = values.iter().find(|(_, v)| *v != first) {
        for (n, v) in &values {
            report.stat(&format!("{n}.value"), v.to_scalar().to_string());
        }
        report.failure = Some(CliError::CrossCheck(format!(
            "{first_name} gives {first} but {name} gives {v}"
        )));
    }
    Ok(())
}

// ncw and minabp

fn width_report<F: Field>(p: &DensePoly<F>, report: &mut RunReport) -> Result<()> {
    let w = width(p)?;
    report.result = Some(integer(w));
    report.stat("flattening_ranks", json!(flattening_ranks(p)?));
    report.stat("degree", p.degree());
    report.stat("variables", p.nvars());
    Ok(())
}

pub fn ncw(args: &NcwArgs) -> Result<RunReport> {
    let mut report = RunReport::default();
    match (&args.poly, &args.point) {
        (Some(path), _) => match io::poly_from_json(&read(path)?)? {
            Dual::Rational(p) => width_report(&p, &mut report)?,
            Dual::Zeta6(p) => width_report(&p, &mut report)?,
        },
        (_, Some(path)) => match io::point_from_json(&read(path)?)? {
            Dual::Rational(p) => {
                report.stat("terms", p.terms.len());
                width_report(&waring_expand(&p), &mut report)?
            }
            Dual::Zeta6(p) => {
                report.stat("terms", p.terms.len());
                width_report(&waring_expand(&p), &mut report)?
            }
        },
        _ => return Err(CliError::Usage("give --poly or --point".into())),
    }
    Ok(report)
}

fn minabp_report<F: Field>(p: &DensePoly<F>, out: &str, report: &mut RunReport) -> Result<()> {
    let a = NcAbp::minimize(p)?;
    report.result = Some(integer(a.width()));
    report.stat("layers", json!(a.layers()));
    report.stat("edges", a.num_edges());
    write(out, &io::abp_to_json(&a), report)
}

pub fn minabp(args: &MinabpArgs) -> Result<RunReport> {
    let mut report = RunReport::default();
    let out = args.out.to_string_lossy();
    match io::poly_from_json(&read(&args.poly)?)? {
        Dual::Rational(p) => minabp_report(&p, &out, &mut report)?,
        Dual::Zeta6(p) => minabp_report(&p, &out, &mut report)?,
    }
    Ok(report)
}

// gen

pub fn gen(cmd: &GenCommand) -> Result<RunReport> {
    let mut report = RunReport::default();
    match cmd {
        GenCommand::Coloring { graph, d, out } => {
            let g = io::graph_from_json(&read(graph)?)?;
            let (t, p) = gen_3col_decision(&g, *d)?;
            if let Ok(count) = count_colorings_bruteforce(&g) {
                report.stat("colorings", count);
            }
            report.stat("n", t.n());
            report.stat("d", t.d());
            write(
                &format!("{out}.tableau.json"),
                &io::tableau_to_json(&t),
                &mut report,
            )?;
            write(
                &format!("{out}.point.json"),
                &io::point_to_json(&p),
                &mut report,
            )?;
        }
        GenCommand::Counting { graph, d, out } => {
            let g = io::graph_from_json(&read(graph)?)?;
            let (t, p) = gen_3col_counting(&g, *d)?;
            if let Ok(count) = count_colorings_bruteforce(&g) {
                report.stat("colorings", count);
            }
            report.stat("n", t.n());
            report.stat("d", t.d());
            write(
                &format!("{out}.tableau.json"),
                &io::tableau_to_json(&t),
                &mut report,
            )?;
            write(
                &format!("{out}.point.json"),
                &io::point_to_json(&p),
                &mut report,
            )?;
        }
        GenCommand::Grid { k, out } => {
            if *k == 0 {
                return Err(CliError::Usage("grid size must be at least 1".into()));
            }
            let t = grid_family(*k)?;
            let degrees = t.graph()?.degrees();
            report.stat("n", t.n());
            report.stat("d", t.d());
            report.stat("degrees", json!(degrees[1..]));
            write(
                &format!("{out}.tableau.json"),
                &io::tableau_to_json(&t),
                &mut report,
            )?;
            let p = vandermonde_point(2, 2, t.d() as u32)?;
            write(
                &format!("{out}.point.json"),
                &io::point_to_json(&p),
                &mut report,
            )?;
        }
        GenCommand::Vandermonde { m, r, d, out } => {
            let p = vandermonde_point(*m, *r, *d)?;
            write(
                &format!("{out}.point.json"),
                &io::point_to_json(&p),
                &mut report,
            )?;
        }
    }
    Ok(report)
}

// multiplicity

pub fn multiplicity(args: &MultiplicityArgs) -> Result<RunReport> {
    let shape = Partition::new(args.shape.clone())?;
    let samples = match args.samples {
        Some(s) => s,
        None if shape.size() == args.n * args.d => {
            enumerate_ssyt(&shape, args.n, args.d, DEFAULT_CAP)?.len() + 4
        }
        None => 0,
    };
    let r = sample_rank(&shape, args.n, args.d, args.m, samples, args.seed)?;
    let mut report = RunReport {
        result: Some(integer(r.value)),
        method: Some("sampled rank".into()),
        seed: Some(r.seed),
        ..RunReport::default()
    };
    report.stat("ssyt", r.ssyt_count);
    report.stat("samples", r.samples);
    if args.certify {
        let exact = multiplicity_symbolic(&shape, args.n, args.d, args.m)?;
        report.stat("symbolic", exact);
        if exact != r.value {
            report.failure = Some(CliError::CrossCheck(format!(
                "sampled rank {} differs from symbolic value {exact}",
                r.value
            )));
        }
    }
    Ok(report)
}

// selftest

pub fn selftest() -> Result<RunReport> {
    let mut report = RunReport::default();
    let mut failed = Vec::new();
    for check in selftest::criteria()
        .into_iter()
        .chain(selftest::invariants())
    {
        match (check.run)() {
            Ok(detail) => report.stat(check.name, format!("PASS {detail}")),
            Err(detail) => {
                report.stat(check.name, format!("FAIL {detail}"));
                failed.push(check.name);
            }
        }
    }
    report.result = Some(integer(failed.len()));
    if !failed.is_empty() {
        report.failure = Some(CliError::CrossCheck(format!(
            "failed: {}",
            failed.join(", ")
        )));
    }
    Ok(report)
}
