use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_core::algebra::{parse_monomial, SchurAlgebra};
use schur_core::basisgen::{
    enumerate_basis, verify_basis, BasisOrders, BasisSolver, ConjectureKind, Placement, Side,
};
use schur_core::harness::{
    check_desk_scale, conjecture_report, specialization_check, structure_constants,
    verify_idempotent_presentation, verify_presentation, with_header, VerificationReport,
};
use schur_core::ring::SchurScalar;
use schur_core::rootdata::RootOrder;
use schur_core::scalars::{RationalFunction, ScalarRing};
use schur_core::straighten::Straightener;
use schur_core::subalg::{hecke_basis, hecke_build, hecke_symmetry_check};

#[derive(Parser)]
#[command(
    name = "schur",
    version,
    about = "Exact computations in classical and quantized Schur algebras"
)]
struct Cli {
    /// Allow instances beyond n^d <= 256 and dim <= 1000.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingArg {
    Classical,
    Quantum,
}

impl From<RingArg> for ScalarRing {
    fn from(r: RingArg) -> Self {
        match r {
            RingArg::Classical => ScalarRing::Classical,
            RingArg::Quantum => ScalarRing::Quantum,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Presentation,
    Idempotent,
    All,
}

#[derive(Args)]
struct Size {
    n: usize,
    d: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Build the generators on tensor space and check the defining relations.
    Build {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value = "quantum")]
        ring: RingArg,
    },
    /// Enumerate an integral basis and check its rank.
    Basis {
        #[command(flatten)]
        size: Size,
        /// plus or minus.
        #[arg(long, default_value = "plus")]
        side: Side,
        /// Where the idempotent sits: left, middle or right.
        #[arg(long, default_value = "right")]
        placement: Placement,
        /// Order of the positive-root block: box, revbox or custom:12,13,23.
        #[arg(long, default_value = "box")]
        order: RootOrder,
        /// Order of the negative-root block; defaults to the reverse of --order.
        #[arg(long)]
        f_order: Option<RootOrder>,
        #[arg(long, value_enum, default_value = "quantum")]
        ring: RingArg,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run verification suites in one ring or both.
    Verify {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum)]
        ring: Option<RingArg>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Straighten a monomial into the plus basis.
    Straighten {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value = "quantum")]
        ring: RingArg,
        /// For example "F(2,1) E(1,2) 1[1,1]".
        #[arg(long)]
        expr: String,
        /// Also compare with the linear-algebra coordinates.
        #[arg(long)]
        check: bool,
    },
    /// Structure constants of the plus basis; with both rings, also the specialization check.
    Constants {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum)]
        ring: Option<RingArg>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Hecke algebra inside S(d, d).
    Hecke {
        d: usize,
        #[arg(long, value_enum, default_value = "quantum")]
        ring: RingArg,
    },
    /// Rank reports for the conjectured bases; never fails on the outcome.
    Conjectures {
        #[command(flatten)]
        size: Size,
        /// pbw, eHf, fHe, EKF, cartan-subring or borel; all kinds if omitted.
        #[arg(long)]
        kind: Option<ConjectureKind>,
        #[arg(long, default_value_t = 1)]
        i0: usize,
        #[arg(long, value_enum, default_value = "quantum")]
        ring: RingArg,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn write_json(path: &Option<PathBuf>, value: &serde_json::Value) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, serde_json::to_string_pretty(value)?)
            .with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn rings(r: Option<RingArg>) -> Vec<ScalarRing> {
    match r {
        Some(r) => vec![r.into()],
        None => vec![ScalarRing::Classical, ScalarRing::Quantum],
    }
}

fn print_report(r: &VerificationReport) {
    for c in &r.relations {
        let status = if c.pass { "pass" } else { "FAIL" };
        match &c.witness {
            Some(w) => println!("  {status} {} ({w})", c.id),
            None => println!("  {status} {}", c.id),
        }
    }
}

fn verify_ring<S: SchurScalar>(
    n: usize,
    d: usize,
    suite: Suite,
    out: &mut Vec<serde_json::Value>,
) -> Result<bool> {
    let mut ok = true;
    let mut reports = Vec::new();
    if matches!(suite, Suite::Presentation | Suite::All) {
        reports.push(verify_presentation::<S>(n, d)?);
    }
    if matches!(suite, Suite::Idempotent | Suite::All) {
        reports.push(verify_idempotent_presentation::<S>(n, d)?);
    }
    for r in reports {
        println!(
            "{} suite, ({n},{d}) {}: {}",
            r.suite,
            S::RING,
            if r.pass() { "pass" } else { "FAIL" }
        );
        print_report(&r);
        ok &= r.pass();
        out.push(r.to_json());
    }
    Ok(ok)
}

fn build<S: SchurScalar>(n: usize, d: usize) -> Result<bool> {
    let alg = SchurAlgebra::<S>::new(n, d)?;
    let checks = S::presentation_checks(alg.generators());
    let ok = checks.iter().all(|c| c.pass);
    println!(
        "({n},{d}) {}: tensor dimension {}, {} relation families {}",
        S::RING,
        alg.dim(),
        checks.len(),
        if ok { "pass" } else { "FAIL" }
    );
    Ok(ok)
}

fn basis<S: SchurScalar>(
    n: usize,
    d: usize,
    side: Side,
    placement: Placement,
    orders: &BasisOrders,
    json: &Option<PathBuf>,
) -> Result<bool> {
    let alg = SchurAlgebra::<S>::new(n, d)?;
    let b = enumerate_basis(n, d, side, placement, orders)?;
    let report = verify_basis(&b.monomials(), &alg)?;
    for mu in alg.compositions() {
        let piece = b.piece(mu);
        let words: Vec<String> = piece.iter().map(|&k| b.monomial(k).to_string()).collect();
        println!("{mu:?} ({}): {}", piece.len(), words.join(", "));
    }
    println!(
        "count {} rank {} expected {}",
        report.count, report.rank, report.expected
    );
    write_json(json, &b.to_json(S::RING.name()))?;
    Ok(report.pass())
}

fn straighten<S: SchurScalar>(n: usize, d: usize, expr: &str, check: bool) -> Result<bool> {
    let m = parse_monomial(expr, n, S::RING)?;
    let st = Straightener::<S>::new(n, d)?;
    let out = st.straighten(&m)?;
    let terms: Vec<serde_json::Value> = out
        .coords
        .coords
        .iter()
        .map(|(k, c)| serde_json::json!({"index": k, "element": st.basis.monomial(*k).to_string(), "coefficient": c.to_json(), "value": c.to_string()}))
        .collect();
    let mut ok = out.coords.integral;
    let mut body = serde_json::json!({
        "input": m.to_string(),
        "coordinates": out.coords.to_json(),
        "terms": terms,
        "integral": out.coords.integral,
        "stats": out.stats,
    });
    if check {
        let alg = SchurAlgebra::<S>::new(n, d)?;
        let solver = BasisSolver::new(&alg, st.basis.clone())?;
        let agrees = solver.express(&alg.evaluate(&m)?)? == out.coords;
        body["agrees-with-linear-algebra"] = agrees.into();
        ok &= agrees;
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&with_header(n, d, S::RING, body))?
    );
    Ok(ok)
}

fn hecke<S: SchurScalar>(d: usize) -> Result<bool> {
    let alg = SchurAlgebra::<S>::new(d, d)?;
    let h = hecke_build(&alg)?;
    let (elements, rank) = hecke_basis(&alg)?;
    let sym = hecke_symmetry_check(&alg)?;
    println!("Hecke algebra in S({d},{d}) {}:", S::RING);
    for c in h.checks.iter().chain(std::iter::once(&sym)) {
        println!("  {} {}", if c.pass { "pass" } else { "FAIL" }, c.id);
    }
    let orders = BasisOrders::default();
    for e in &elements {
        println!("  basis {}", e.monomial(&orders, Placement::Middle)?);
    }
    println!(
        "  count {} rank {} expected {}",
        rank.count, rank.rank, rank.expected
    );
    Ok(h.pass() && sym.pass && rank.pass())
}

fn conjectures<S: SchurScalar>(
    n: usize,
    d: usize,
    kinds: &[ConjectureKind],
    i0: usize,
    out: &mut Vec<serde_json::Value>,
) -> Result<()> {
    let alg = SchurAlgebra::<S>::new(n, d)?;
    for &kind in kinds {
        if kind == ConjectureKind::EKF && S::RING != ScalarRing::Quantum {
            continue;
        }
        let r = conjecture_report(&alg, kind, i0, &BasisOrders::default())?;
        println!(
            "{kind} ({n},{d}) {}: count {} rank {} expected {}",
            S::RING,
            r.count,
            r.rank,
            r.expected
        );
        if let Some(m) = &r.membership {
            for x in m {
                println!(
                    "  {}: field {}, integral {:?}",
                    x.target, x.field, x.integral
                );
            }
        }
        out.push(r.to_json());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let size_check = |n: usize, d: usize| check_desk_scale(n, d, cli.allow_large);
    match cli.command {
        Command::Build { size, ring } => {
            size_check(size.n, size.d)?;
            match ring {
                RingArg::Classical => build::<BigRational>(size.n, size.d),
                RingArg::Quantum => build::<RationalFunction>(size.n, size.d),
            }
        }
        Command::Basis {
            size,
            side,
            placement,
            order,
            f_order,
            ring,
            json,
        } => {
            size_check(size.n, size.d)?;
            let f = match f_order {
                Some(f) => f,
                None => order.reversed(size.n)?,
            };
            let orders = BasisOrders { e: order, f };
            match ring {
                RingArg::Classical => {
                    basis::<BigRational>(size.n, size.d, side, placement, &orders, &json)
                }
                RingArg::Quantum => {
                    basis::<RationalFunction>(size.n, size.d, side, placement, &orders, &json)
                }
            }
        }
        Command::Verify {
            size,
            suite,
            ring,
            json,
        } => {
            size_check(size.n, size.d)?;
            let mut ok = true;
            let mut out = Vec::new();
            for r in rings(ring) {
                ok &= match r {
                    ScalarRing::Classical => {
                        verify_ring::<BigRational>(size.n, size.d, suite, &mut out)?
                    }
                    ScalarRing::Quantum => {
                        verify_ring::<RationalFunction>(size.n, size.d, suite, &mut out)?
                    }
                };
            }
            write_json(&json, &serde_json::Value::Array(out))?;
            Ok(ok)
        }
        Command::Straighten {
            size,
            ring,
            expr,
            check,
        } => {
            size_check(size.n, size.d)?;
            match ring {
                RingArg::Classical => straighten::<BigRational>(size.n, size.d, &expr, check),
                RingArg::Quantum => straighten::<RationalFunction>(size.n, size.d, &expr, check),
            }
        }
        Command::Constants { size, ring, json } => {
            let (n, d) = (size.n, size.d);
            size_check(n, d)?;
            let basis =
                enumerate_basis(n, d, Side::Plus, Placement::Right, &BasisOrders::default())?;
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let mut out = Vec::new();
            let mut ok = true;
            let mut classical = None;
            let mut quantum = None;
            for r in rings(ring) {
                match r {
                    ScalarRing::Classical => {
                        let c =
                            structure_constants(&SchurAlgebra::<BigRational>::new(n, d)?, &basis)?;
                        let assoc = c.associativity_check(&mut rng, 100);
                        println!(
                            "classical: {} nonzero products, associativity {}",
                            c.products.len(),
                            if assoc.pass { "pass" } else { "FAIL" }
                        );
                        ok &= assoc.pass;
                        out.push(c.to_json());
                        classical = Some(c);
                    }
                    ScalarRing::Quantum => {
                        let q = structure_constants(
                            &SchurAlgebra::<RationalFunction>::new(n, d)?,
                            &basis,
                        )?;
                        let assoc = q.associativity_check(&mut rng, 100);
                        println!(
                            "quantum: {} nonzero products, associativity {}",
                            q.products.len(),
                            if assoc.pass { "pass" } else { "FAIL" }
                        );
                        ok &= assoc.pass;
                        out.push(q.to_json());
                        quantum = Some(q);
                    }
                }
            }
            if let (Some(q), Some(c)) = (&quantum, &classical) {
                let s = specialization_check(q, c);
                println!(
                    "specialization at v = 1: {}",
                    if s.pass { "pass" } else { "FAIL" }
                );
                ok &= s.pass;
            }
            write_json(&json, &serde_json::Value::Array(out))?;
            Ok(ok)
        }
        Command::Hecke { d, ring } => {
            size_check(d, d)?;
            match ring {
                RingArg::Classical => hecke::<BigRational>(d),
                RingArg::Quantum => hecke::<RationalFunction>(d),
            }
        }
        Command::Conjectures {
            size,
            kind,
            i0,
            ring,
            json,
        } => {
            size_check(size.n, size.d)?;
            if i0 == 0 || i0 > size.n {
                bail!("--i0 must lie in 1..={}", size.n);
            }
            let kinds: Vec<ConjectureKind> = match kind {
                Some(k) => vec![k],
                None => ConjectureKind::ALL.to_vec(),
            };
            let mut out = Vec::new();
            match ring {
                RingArg::Classical => {
                    conjectures::<BigRational>(size.n, size.d, &kinds, i0, &mut out)?
                }
                RingArg::Quantum => {
                    conjectures::<RationalFunction>(size.n, size.d, &kinds, i0, &mut out)?
                }
            }
            write_json(&json, &serde_json::Value::Array(out))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
