//! Running verification suites over a parameter sweep.

use std::fmt::Write as _;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use yangw_core::rectangle::vector_rank;
use yangw_core::walgebra::WAlgebra;
use yangw_core::yangian::{verify_rtt_family, GeneratorFamily, ProductTable, SuperOps};
use yangw_core::{CheckOutcome, Payload, TensorElement, Uea};

use crate::config::{CheckKind, ParamSet, RunConfig};
use crate::error::{ConfigError, RunError};
use crate::json::{CheckResultJson, DimsJson, DimsRowJson, ReportJson, Status, SCHEMA_VERSION};

/// Shared per-rectangle data, built on first use.
pub struct Context {
    pub params: ParamSet,
    pub w: WAlgebra,
    w_family: OnceLock<GeneratorFamily<Uea>>,
    kappa_family: OnceLock<GeneratorFamily<TensorElement>>,
}

impl Context {
    pub fn new(params: &ParamSet) -> Result<Self, ConfigError> {
        let rect = params
            .rectangle()
            .map_err(|e| ConfigError::Rectangle(params.clone(), e))?;
        Ok(Context {
            params: params.clone(),
            w: WAlgebra::new(rect),
            w_family: OnceLock::new(),
            kappa_family: OnceLock::new(),
        })
    }

    /// Path-sum generators, built in parallel.
    pub fn w_family(&self) -> &GeneratorFamily<Uea> {
        self.w_family.get_or_init(|| {
            let w = &self.w;
            let parities = w.yangian().parities().to_vec();
            let keys: Vec<_> = GeneratorFamily::<Uea>::keys_with_zero(parities.len(), w.ell()).collect();
            let values = keys.par_iter().map(|k| w.w_gen_pathsum(k.i, k.j, k.r)).collect();
            GeneratorFamily::from_values(parities, w.ell(), values)
        })
    }

    pub fn kappa_family(&self) -> &GeneratorFamily<TensorElement> {
        self.kappa_family.get_or_init(|| self.w.yangian().kappa_family())
    }
}

/// All pairwise products of a family, in parallel.
pub fn product_table<O>(ops: &O, fam: &GeneratorFamily<O::Elem>) -> ProductTable<O::Elem>
where
    O: SuperOps + Sync,
    O::Elem: Send + Sync,
{
    let n = fam.len();
    let vals = fam.values();
    let values = (0..n * n)
        .into_par_iter()
        .map(|p| ops.mul(&vals[p / n], &vals[p % n]))
        .collect();
    ProductTable::from_values(fam, values)
}

type Record = (String, CheckOutcome, u64);

fn over_budget(count: u64, budget: u64) -> CheckOutcome {
    CheckOutcome::Skipped(format!("{} supermonomials exceed the budget of {}", count, budget))
}

fn bool_outcome(ok: bool, instance: &str, lhs: Payload, rhs: Payload) -> CheckOutcome {
    if ok {
        CheckOutcome::Pass
    } else {
        CheckOutcome::fail(instance, lhs, rhs)
    }
}

/// Run one suite on one rectangle.
pub fn run_check(ctx: &Context, check: CheckKind, cfg: &RunConfig) -> Vec<Record> {
    let w = &ctx.w;
    let rect = w.rectangle();
    let y = w.yangian();
    let size = (rect.height() * rect.height() * rect.ell()) as u64;
    let d = cfg.degree;
    let budget = cfg.budget.max_monomials;
    let rec = |name: &str, (o, n): (CheckOutcome, u64)| (name.to_string(), o, n);
    match check {
        CheckKind::GoodGrading => {
            let rep = rect.verify_good_grading();
            let out = bool_outcome(rep.all_pass(), "grading conditions", Payload::Text(format!("{:?}", rep)), Payload::Text("all true".into()));
            vec![rec("good-grading", (out, 6))]
        }
        CheckKind::Centralizer => {
            let basis = rect.centralizer_basis();
            let e = rect.e_of();
            let mut commute = CheckOutcome::Pass;
            for c in &basis {
                let br = rect.gl().bracket(&c.vector, &e).expect("in range");
                if !br.is_empty() {
                    let g = rect.gl();
                    commute = CheckOutcome::fail(
                        format!("[c^({})_{{{},{}}}, e]", c.r, c.i + 1, c.j + 1),
                        Payload::Element(g.render(&g.from_vector(&br))),
                        Payload::Element(Vec::new()),
                    );
                    break;
                }
            }
            let rank = vector_rank(basis.iter().map(|c| &c.vector)) as u64;
            let kernel = rect.centralizer_dimension() as u64;
            vec![
                rec("centralizer.commute", (commute, basis.len() as u64)),
                rec(
                    "centralizer.independent",
                    (bool_outcome(rank == size, "rank", Payload::Count(rank), Payload::Count(size)), 1),
                ),
                rec(
                    "centralizer.dimension",
                    (bool_outcome(kernel == size, "dim ker ad e", Payload::Count(kernel), Payload::Count(size)), 1),
                ),
            ]
        }
        CheckKind::KappaRtt => {
            let fam = ctx.kappa_family();
            let table = product_table(y.tensor(), fam);
            vec![rec("kappa-rtt", verify_rtt_family(y.tensor(), fam, &table))]
        }
        CheckKind::KappaRecursion => vec![
            rec("kappa-recursion", y.verify_kappa_recursion()),
            rec("kappa-filtration", y.verify_filtration()),
        ],
        CheckKind::Etilrel => vec![rec("etilrel", w.verify_etilrel()), rec("chidef", w.verify_chidef())],
        CheckKind::PathsumRdet => vec![rec("pathsum-rdet", w.verify_pathsum_rdet(ctx.w_family()))],
        CheckKind::LeadingTerms => vec![rec("leading-terms", w.verify_leading_terms(ctx.w_family()))],
        CheckKind::MInvariance => vec![rec("m-invariance", w.verify_m_invariance(ctx.w_family()))],
        CheckKind::Crue => {
            if rect.ell() == 2 {
                vec![rec("crue", w.verify_crue().expect("level two"))]
            } else if rect.ell() > 2 {
                let mut total = 0;
                for c in 0..rect.ell() - 1 {
                    let (o, n) = w.crue_check(c);
                    total += n;
                    if !o.is_pass() {
                        return vec![rec("crue.all-columns", (o, total))];
                    }
                }
                vec![rec("crue.all-columns", (CheckOutcome::Pass, total))]
            } else {
                vec![rec("crue", (CheckOutcome::Skipped("requires l = 2".into()), 0))]
            }
        }
        CheckKind::WRtt => {
            let fam = ctx.w_family();
            let table = product_table(w.gl(), fam);
            vec![rec("w-rtt", w.verify_w_rtt(fam, &table))]
        }
        CheckKind::Iso => {
            let fam = ctx.w_family();
            let count = y.pbw_count(d);
            let span = if count > budget {
                (over_budget(count, budget), 0)
            } else {
                w.verify_w_span(fam, d)
            };
            vec![
                rec("iso.mu-kappa", w.verify_mu_kappa(fam)),
                rec("iso.span", span),
                rec("iso.m-invariance", w.verify_m_invariance(fam)),
            ]
        }
        CheckKind::Dims => {
            let table = dims_rows(ctx, d);
            let bad = table.iter().find(|r| !r.equal);
            let out = match bad {
                None => CheckOutcome::Pass,
                Some(r) => CheckOutcome::fail(
                    format!("degree {}", r.degree),
                    Payload::Count(r.pbw_count),
                    Payload::Count(r.sym_dim),
                ),
            };
            let count = y.pbw_count(d);
            let indep = if count > budget {
                over_budget(count, budget)
            } else {
                y.independence_check(d)
            };
            vec![
                rec("dims.table", (out, table.len() as u64)),
                rec("dims.kappa-independence", (indep, count)),
            ]
        }
    }
}

fn dims_rows(ctx: &Context, d: usize) -> Vec<DimsRowJson> {
    (0..=d)
        .map(|k| {
            let pbw = ctx.w.yangian().pbw_count(k);
            let sym = ctx.w.rectangle().sym_dim(k);
            DimsRowJson {
                degree: k,
                pbw_count: pbw,
                sym_dim: sym,
                equal: pbw == sym,
            }
        })
        .collect()
}

/// `pbw_count` and `sym_dim` side by side for degrees `0..=d`.
pub fn dims(params: &ParamSet, d: usize) -> Result<DimsJson, ConfigError> {
    let ctx = Context::new(params)?;
    Ok(DimsJson {
        schema_version: SCHEMA_VERSION,
        params: params.clone(),
        rows: dims_rows(&ctx, d),
    })
}

/// Run the selected checks on every parameter set. Results are ordered by
/// parameter set, then check, whatever the parallelism.
pub fn run(cfg: &RunConfig) -> Result<ReportJson, RunError> {
    cfg.validate()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if cfg.jobs > 0 {
        builder = builder.num_threads(cfg.jobs);
    }
    let pool = builder.build()?;
    let contexts = cfg
        .params
        .iter()
        .map(Context::new)
        .collect::<Result<Vec<_>, _>>()?;
    let tasks: Vec<(usize, CheckKind)> = (0..contexts.len())
        .flat_map(|p| cfg.checks.iter().map(move |&c| (p, c)))
        .collect();
    let results: Vec<Vec<CheckResultJson>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(p, check)| {
                let ctx = &contexts[p];
                let start = Instant::now();
                let records = run_check(ctx, check, cfg);
                let millis = cfg.timing.then(|| start.elapsed().as_millis() as u64);
                records
                    .iter()
                    .map(|(name, o, n)| CheckResultJson::new(&ctx.params, name, o, *n, millis))
                    .collect()
            })
            .collect()
    });
    let results: Vec<CheckResultJson> = results.into_iter().flatten().collect();
    let report = ReportJson {
        schema_version: SCHEMA_VERSION,
        degree: cfg.degree,
        checks: cfg.checks.iter().map(|c| c.name().to_string()).collect(),
        all_pass: results.iter().all(|r| r.status != Status::Fail),
        results,
    };
    if let Some(path) = &cfg.out {
        std::fs::write(path, serde_json::to_string_pretty(&report)? + "\n")?;
    }
    Ok(report)
}

/// One line per result.
pub fn summary(report: &ReportJson) -> String {
    let mut s = String::new();
    for r in &report.results {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        let _ = write!(s, "{:<4} {:<14} {:<26} {:>8}", status, r.params.to_string(), r.check, r.instances);
        if let Some(ms) = r.millis {
            let _ = write!(s, " {:>7} ms", ms);
        }
        if let Some(reason) = &r.reason {
            let _ = write!(s, "  ({})", reason);
        }
        if let Some(c) = &r.counterexample {
            let _ = write!(s, "  first failure: {}", c.instance);
        }
        s.push('\n');
    }
    let _ = writeln!(s, "{}", if report.all_pass { "all selected checks pass" } else { "some checks FAILED" });
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_check_set_succeeds() {
        let cfg = RunConfig::default().with_checks([]);
        let rep = run(&cfg).unwrap();
        assert!(rep.results.is_empty());
        assert!(rep.all_pass);
    }

    #[test]
    fn malformed_sequence_is_rejected() {
        let cfg = RunConfig::new(vec![ParamSet::new(1, 1, 2, "dd")]);
        assert!(matches!(run(&cfg), Err(RunError::Config(ConfigError::Rectangle(..)))));
    }

    #[test]
    fn budget_skips_instead_of_failing() {
        let mut cfg = RunConfig::new(vec![ParamSet::standard(1, 1, 2)]).with_checks([CheckKind::Dims]).with_degree(3);
        cfg.budget.max_monomials = 5;
        let rep = run(&cfg).unwrap();
        assert!(rep.all_pass);
        let indep = rep.results.iter().find(|r| r.check == "dims.kappa-independence").unwrap();
        assert_eq!(indep.status, Status::Skipped);
    }

    #[test]
    fn dims_small() {
        let t = dims(&ParamSet::standard(1, 1, 2), 1).unwrap();
        assert_eq!(t.rows[0].pbw_count, 1);
        assert_eq!((t.rows[1].pbw_count, t.rows[1].sym_dim), (5, 5));
    }
}
