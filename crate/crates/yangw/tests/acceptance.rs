//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//!
//! Criterion 8 asks for a Killing form that is degenerate on `gl_{1|1}` but
//! not on `gl_{2|1}`. The Killing form of `gl_{M|N}` always has the
//! identity in its radical, so the criterion cannot hold; it is evaluated
//! as stated, reported as FAIL, and does not affect the exit code unless
//! `ACCEPTANCE_STRICT` is set.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::fmt::Display;
use std::process::ExitCode;

use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rayon::prelude::*;
use yangw::run::product_table;
use yangw_core::walgebra::{MatWordPoly, WAlgebra};
use yangw_core::yangian::verify_rtt_family;
use yangw_core::{BasisElement, BoxIndex, CheckOutcome, ColoredRectangle, GlSuper, Parity};

const SWEEP: [(usize, usize, usize, &str); 5] =
    [(1, 1, 2, "de"), (1, 1, 3, "de"), (2, 1, 2, "dde"), (2, 1, 2, "ded"), (1, 2, 2, "ede")];

const KNOWN_UNATTAINABLE: [usize; 1] = [8];

type Criterion<'a> = (usize, &'static str, Box<dyn Fn() -> Verdict + 'a>);

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Display) -> Verdict {
    Verdict {
        ok,
        detail: detail.to_string(),
    }
}

fn walgebras() -> Vec<WAlgebra> {
    SWEEP
        .iter()
        .map(|&(m, n, l, s)| WAlgebra::new(ColoredRectangle::from_spec(m, n, l, s).expect("valid sweep entry")))
        .collect()
}

fn label(w: &WAlgebra) -> String {
    let r = w.rectangle();
    format!("({},{},{},{})", r.m(), r.n(), r.ell(), r.sequence())
}

/// Run `f` on every rectangle of the sweep; the first failure wins.
fn over_sweep(ws: &[WAlgebra], f: impl Fn(&WAlgebra) -> Result<u64, String> + Sync) -> Verdict {
    let results: Vec<Result<u64, String>> = ws
        .par_iter()
        .map(|w| f(w).map_err(|e| format!("{}: {}", label(w), e)))
        .collect();
    match results.into_iter().collect::<Result<Vec<u64>, String>>() {
        Ok(counts) => verdict(true, format!("{} instances", counts.iter().sum::<u64>())),
        Err(e) => verdict(false, e),
    }
}

fn expect_pass((o, n): (CheckOutcome, u64), what: &str) -> Result<u64, String> {
    match o {
        CheckOutcome::Pass => Ok(n),
        other => Err(format!("{} {:?}", what, other)),
    }
}

fn rtt_closure(ws: &[WAlgebra]) -> Verdict {
    over_sweep(ws, |w| {
        let y = w.yangian();
        let fam = y.kappa_family();
        let table = product_table(y.tensor(), &fam);
        let n = expect_pass(verify_rtt_family(y.tensor(), &fam, &table), "rtt")?;
        let h = w.height() as u64;
        let want = h.pow(4) * (w.ell() as u64).pow(2);
        if n != want {
            return Err(format!("{} tuples checked, expected {}", n, want));
        }
        Ok(n)
    })
}

fn hopf_recursion(ws: &[WAlgebra]) -> Verdict {
    over_sweep(ws, |w| expect_pass(w.yangian().verify_kappa_recursion(), "kappa recursion"))
}

fn m_invariance(ws: &[WAlgebra]) -> Verdict {
    over_sweep(ws, |w| {
        let mut n = expect_pass(w.verify_m_invariance(&w.w_family()), "m-invariance")?;
        if w.ell() == 2 {
            let crue = w.verify_crue().map_err(|e| e.to_string())?;
            n += expect_pass(crue, "congruence")?;
        }
        Ok(n)
    })
}

fn key_observation(ws: &[WAlgebra]) -> Verdict {
    over_sweep(ws, |w| expect_pass(w.verify_pathsum_rdet(&w.w_family()), "pathsum vs rdet"))
}

fn isomorphism(ws: &[WAlgebra]) -> Verdict {
    over_sweep(ws, |w| {
        let fam = w.w_family();
        let mut n = expect_pass(w.verify_mu_kappa(&fam), "mu vs kappa")?;
        let r = w.rectangle();
        let top = if (r.m(), r.n(), r.ell()) == (1, 1, 2) { 3 } else { 2 };
        for d in 0..=top {
            n += expect_pass(w.verify_w_span(&fam, d), &format!("span at degree {}", d))?;
        }
        Ok(n)
    })
}

fn centralizer(ws: &[WAlgebra]) -> Verdict {
    over_sweep(ws, |w| {
        let rect = w.rectangle();
        let want = w.height() * w.height() * w.ell();
        let basis = rect.centralizer_basis();
        let e = rect.e_of();
        if basis.len() != want {
            return Err(format!("{} elements, expected {}", basis.len(), want));
        }
        for c in &basis {
            if !rect.gl().bracket(&c.vector, &e).map_err(|e| e.to_string())?.is_empty() {
                return Err(format!("c^({})_{{{},{}}} does not commute with e", c.r, c.i + 1, c.j + 1));
            }
        }
        let rank = yangw_core::rectangle::vector_rank(basis.iter().map(|c| &c.vector));
        let kernel = rect.centralizer_dimension();
        if rank != want || kernel != want {
            return Err(format!("rank {}, dim ker ad e {}, expected {}", rank, kernel, want));
        }
        Ok(basis.len() as u64)
    })
}

fn good_grading(ws: &[WAlgebra]) -> Verdict {
    over_sweep(ws, |w| {
        let rep = w.rectangle().verify_good_grading();
        if rep.all_pass() && rep.h_e_eigen {
            Ok(6)
        } else {
            Err(format!("{:?}", rep))
        }
    })
}

fn forms() -> Verdict {
    let gl = |m: usize, n: usize| {
        let mut ps = vec![Parity::Even; m];
        ps.extend(vec![Parity::Odd; n]);
        GlSuper::with_parities(ps)
    };
    let mut ok = true;
    let mut notes = Vec::new();
    for (m, n) in [(1, 1), (2, 1)] {
        let g = gl(m, n);
        let full = g.basis_len();
        let s = g.str_form_gram_rank();
        let k = g.killing_form_gram_rank();
        let deficient = k < full;
        ok &= s == full && deficient == (m == n);
        notes.push(format!("gl({}|{}): str rank {}/{}, Killing rank {}/{}", m, n, s, full, k, full));
    }
    verdict(ok, notes.join("; "))
}

fn worked_example() -> Verdict {
    let w = WAlgebra::new(ColoredRectangle::from_spec(2, 3, 4, "dedee").expect("valid"));
    let r = w.rectangle();
    let at = |barred, ordinal| r.position_of(BoxIndex { barred, ordinal }).expect("box exists");
    let c1 = r.tilde_col(at(true, 1));
    let c8 = r.tilde_col(at(false, 8));
    let got = w.t_map(1, 2, &MatWordPoly::letter(1, 3));
    let want = vec![-&w.gl().generator(BasisElement::new(at(false, 4), at(true, 8)))];
    verdict(
        c1 == -3 && c8 == 1 && got == want,
        format!("tilde_col(1bar) = {}, tilde_col(8) = {}, t_map match: {}", c1, c8, got == want),
    )
}

fn run_property<S: Strategy>(name: &str, s: S, body: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let config = Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new(config)
        .run(&s, body)
        .map_err(|e| format!("{}: {}", name, e))
}

fn substrate() -> Verdict {
    let res = run_property("super Jacobi", support::jacobi_case(), support::super_jacobi)
        .and_then(|_| run_property("confluence", support::confluence_case(), support::confluence))
        .and_then(|_| run_property("associativity", support::associativity_case(), support::associativity))
        .and_then(|_| run_property("tensor associativity", support::tensor_case(), support::tensor_associativity));
    match res {
        Ok(()) => verdict(true, "4 x 1000 cases"),
        Err(e) => verdict(false, e),
    }
}

fn main() -> ExitCode {
    let strict = std::env::var_os("ACCEPTANCE_STRICT").is_some();
    let ws = walgebras();
    let criteria: Vec<Criterion> = vec![
        (1, "RTT closure on kappa images", Box::new(|| rtt_closure(&ws))),
        (2, "coproduct recursion for kappa", Box::new(|| hopf_recursion(&ws))),
        (3, "m-invariance and the level-two congruence", Box::new(|| m_invariance(&ws))),
        (4, "path sum equals rdet", Box::new(|| key_observation(&ws))),
        (5, "mu matches kappa; span = pbw_count = sym_dim", Box::new(|| isomorphism(&ws))),
        (6, "centralizer basis", Box::new(|| centralizer(&ws))),
        (7, "good grading", Box::new(|| good_grading(&ws))),
        (8, "supertrace and Killing Gram ranks", Box::new(forms)),
        (9, "worked example (2,3,4,dedee)", Box::new(worked_example)),
        (10, "substrate properties", Box::new(substrate)),
    ];
    let mut unexpected = 0;
    let mut known = 0;
    for (k, name, f) in &criteria {
        let v = f();
        let tag = if v.ok { "PASS" } else { "FAIL" };
        let note = if !v.ok && KNOWN_UNATTAINABLE.contains(k) {
            known += 1;
            " [known unattainable]"
        } else {
            if !v.ok {
                unexpected += 1;
            }
            ""
        };
        println!("criterion {:>2}: {} {}: {}{}", k, tag, name, v.detail, note);
    }
    println!(
        "acceptance: {} passed, {} failed ({} known unattainable)",
        criteria.len() - unexpected - known,
        unexpected + known,
        known
    );
    if unexpected > 0 || (strict && known > 0) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
