//! One line per acceptance criterion; the test fails if any line reads FAIL.

use std::collections::BTreeSet;

use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schur_core::algebra::{random_monomial, SchurAlgebra};
use schur_core::basisgen::{
    enumerate_basis, schur_dimension, verify_basis, BasisOrders, BasisSolver, ConjectureKind,
    Placement, Side,
};
use schur_core::harness::{
    conjecture_report, specialization_check, structure_constants, verify_idempotent_presentation,
    verify_presentation,
};
use schur_core::ring::SchurScalar;
use schur_core::rootdata::{root_pairs, Configuration, Root, RootOrder, SignPattern};
use schur_core::scalars::RationalFunction;
use schur_core::straighten::{check_rule_soundness, derive_rule_variants, RuleTable, Straightener};
use schur_core::subalg::{
    borel_idempotent_basis, borel_plus_basis, borel_vanishing_check, hecke_basis, hecke_build,
    hecke_symmetry_check,
};

const GRID: [(usize, usize); 4] = [(2, 2), (2, 3), (3, 2), (3, 3)];

type Outcome = Result<String, String>;

type Criterion = (&'static str, fn() -> Outcome);

type Piece = (usize, usize, &'static [i64], &'static [&'static str]);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dimension_counts() -> Outcome {
    let expected = [10, 20, 45, 165];
    for ((n, d), want) in GRID.into_iter().zip(expected) {
        ensure(schur_dimension(n, d) == want, || {
            format!("formula gives {} at ({n},{d})", schur_dimension(n, d))
        })?;
        let q = SchurAlgebra::<RationalFunction>::new(n, d).map_err(|e| e.to_string())?;
        let c = SchurAlgebra::<BigRational>::new(n, d).map_err(|e| e.to_string())?;
        for side in [Side::Plus, Side::Minus] {
            let b = enumerate_basis(n, d, side, Placement::Right, &BasisOrders::default())
                .map_err(|e| e.to_string())?;
            let rq = verify_basis(&b.monomials(), &q).map_err(|e| e.to_string())?;
            let rc = verify_basis(&b.monomials(), &c).map_err(|e| e.to_string())?;
            for r in [rq, rc] {
                ensure(r.pass() && r.rank as u64 == want, || {
                    format!("({n},{d}) {side:?}: {r:?}")
                })?;
            }
        }
    }
    Ok("ranks 10, 20, 45, 165 for both sides in both rings".into())
}

/// `"21 31^2"` is `F(2,1) F(3,1)^(2)`; the empty string is the idempotent alone.
fn render(word: &str, lambda: &[i64]) -> String {
    let mut parts = Vec::new();
    for tok in word.split_whitespace() {
        let (ij, m) = tok.split_once('^').unwrap_or((tok, "1"));
        let b = ij.as_bytes();
        let (i, j) = (b[0] - b'0', b[1] - b'0');
        let letter = if i < j { 'E' } else { 'F' };
        parts.push(if m == "1" {
            format!("{letter}({i},{j})")
        } else {
            format!("{letter}({i},{j})^({m})")
        });
    }
    let lam: Vec<String> = lambda.iter().map(|x| x.to_string()).collect();
    parts.push(format!("1[{}]", lam.join(",")));
    parts.join(" ")
}

fn example_lists() -> Outcome {
    let pieces: [Piece; 5] = [
        (2, 2, &[2, 0], &["", "21", "21^2"]),
        (2, 2, &[1, 1], &["", "12", "21", "12 21"]),
        (
            3,
            3,
            &[3, 0, 0],
            &[
                "", "21", "31", "21^2", "31^2", "21 31", "21^3", "31^3", "21^2 31", "21 31^2",
            ],
        ),
        (
            3,
            3,
            &[2, 1, 0],
            &[
                "", "12", "21", "31", "32", "12 21", "12 31", "21^2", "31^2", "21 31", "21 32",
                "31 32", "12 21^2", "12 31^2", "12 21 31", "21^2 32", "31^2 32", "21 31 32",
            ],
        ),
        (
            3,
            3,
            &[1, 1, 1],
            &[
                "", "12", "13", "23", "21", "31", "32", "12 13", "12 23", "12 21", "12 31",
                "13 21", "13 31", "13 32", "23 21", "23 31", "23 32", "21 32", "31 32", "12 13 21",
                "12 13 31", "12 23 21", "12 23 31", "13 21 32", "13 31 32", "23 21 32", "23 31 32",
            ],
        ),
    ];
    let lex = |n: usize| -> RootOrder {
        let mut roots = Vec::new();
        for i in 1..n {
            for j in i + 1..=n {
                roots.push(Root::new(i, j));
            }
        }
        RootOrder::Custom(roots)
    };
    let mut sizes = Vec::new();
    for (n, d, lambda, words) in pieces {
        let b = enumerate_basis(
            n,
            d,
            Side::Plus,
            Placement::Right,
            &BasisOrders::uniform(lex(n)),
        )
        .map_err(|e| e.to_string())?;
        let got: BTreeSet<String> = b
            .piece(lambda)
            .into_iter()
            .map(|k| b.monomial(k).to_string())
            .collect();
        let want: BTreeSet<String> = words.iter().map(|w| render(w, lambda)).collect();
        ensure(words.len() == want.len(), || {
            format!("duplicate entries in the {lambda:?} list")
        })?;
        ensure(got == want, || {
            let missing: Vec<_> = want.difference(&got).collect();
            let extra: Vec<_> = got.difference(&want).collect();
            format!("piece {lambda:?}: missing {missing:?}, extra {extra:?}")
        })?;
        sizes.push(got.len().to_string());
    }
    Ok(format!(
        "piece sizes {} match element for element",
        sizes.join("/")
    ))
}

fn presentation_suites<S: SchurScalar>() -> Result<usize, String> {
    let mut count = 0;
    for (n, d) in GRID {
        for r in [
            verify_presentation::<S>(n, d),
            verify_idempotent_presentation::<S>(n, d),
        ] {
            let r = r.map_err(|e| e.to_string())?;
            let bad: Vec<String> = r
                .failures()
                .map(|c| format!("{} {:?}", c.id, c.witness))
                .collect();
            ensure(bad.is_empty(), || {
                format!(
                    "{} suite at ({n},{d}) {}: {}",
                    r.suite,
                    S::RING,
                    bad.join("; ")
                )
            })?;
            if r.suite == "presentation" {
                ensure(
                    r.relations
                        .iter()
                        .any(|c| c.id == "cartan-minimal-polynomial"),
                    || "minimal polynomial not checked".into(),
                )?;
            }
            count += r.relations.len();
        }
    }
    Ok(count)
}

fn presentations() -> Outcome {
    let c = presentation_suites::<BigRational>()?;
    let q = presentation_suites::<RationalFunction>()?;
    Ok(format!(
        "{} relation checks pass, Cartan minimal polynomials of degree d+1",
        c + q
    ))
}

fn oracle<S: SchurScalar>(n: usize, d: usize, samples: usize, seed: u64) -> Result<(), String> {
    let alg = SchurAlgebra::<S>::new(n, d).map_err(|e| e.to_string())?;
    let st = Straightener::<S>::new(n, d).map_err(|e| e.to_string())?;
    let solver = BasisSolver::new(&alg, st.basis.clone()).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let m = random_monomial(&mut rng, n, d, S::RING, 6);
        let got = st.straighten(&m).map_err(|e| format!("{m}: {e}"))?;
        let want = solver
            .express(&alg.evaluate(&m).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(got.coords == want, || {
            format!("{m} at ({n},{d}) {}", S::RING)
        })?;
        ensure(got.coords.integral, || {
            format!("{m} has a non-integral coordinate")
        })?;
    }
    Ok(())
}

fn straightening_oracle() -> Outcome {
    for (n, d) in GRID {
        oracle::<BigRational>(n, d, 200, 101)?;
        oracle::<RationalFunction>(n, d, 200, 202)?;
    }
    Ok("200 random monomials per instance and ring agree with linear algebra, all integral".into())
}

fn soundness<S: SchurScalar>() -> Result<usize, String> {
    let alg = SchurAlgebra::<S>::new(3, 3).map_err(|e| e.to_string())?;
    let table = RuleTable::<S>::new();
    let checks = check_rule_soundness(&table, &alg, 3).map_err(|e| e.to_string())?;
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} via {}", c.pair, c.derivation))
        .collect();
    ensure(bad.is_empty(), || {
        format!("{}: {}", S::RING, bad.join("; "))
    })?;
    Ok(checks.len())
}

fn rule_soundness() -> Outcome {
    let c = soundness::<BigRational>()?;
    let q = soundness::<RationalFunction>()?;
    let table = RuleTable::<RationalFunction>::new();
    let rows = derive_rule_variants(&table, 4).map_err(|e| e.to_string())?;
    let want = SignPattern::ALL.len() * Configuration::ALL.len();
    ensure(rows.len() == want, || {
        format!("{} of {want} sign/configuration cases derived", rows.len())
    })?;
    let seen: BTreeSet<_> = root_pairs(4)
        .into_iter()
        .map(|(x, y)| Configuration::of(x, y).relation())
        .collect();
    ensure(seen.len() == 6, || {
        format!("only {} interval relations occur", seen.len())
    })?;
    Ok(format!("{c} classical and {q} quantum instances at (3,3); {want} cases over six interval relations"))
}

fn hecke_for<S: SchurScalar>(d: usize) -> Result<(), String> {
    let alg = SchurAlgebra::<S>::new(d, d).map_err(|e| e.to_string())?;
    let h = hecke_build(&alg).map_err(|e| e.to_string())?;
    let bad: Vec<&str> = h
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.id.as_str())
        .collect();
    ensure(bad.is_empty(), || {
        format!("d={d} {}: {}", S::RING, bad.join(", "))
    })?;
    let (elements, report) = hecke_basis(&alg).map_err(|e| e.to_string())?;
    let fact: usize = (1..=d).product();
    ensure(report.pass() && elements.len() == fact, || {
        format!("d={d}: {report:?}")
    })?;
    ensure(
        hecke_symmetry_check(&alg).map_err(|e| e.to_string())?.pass,
        || format!("d={d}: EF and FE differ on 1_omega"),
    )
}

fn hecke() -> Outcome {
    for d in [2, 3] {
        hecke_for::<BigRational>(d)?;
        hecke_for::<RationalFunction>(d)?;
    }
    Ok("both presentations, d! basis of full rank and EF = FE on 1_omega for d = 2, 3".into())
}

fn borel() -> Outcome {
    for (n, d) in GRID {
        let alg = SchurAlgebra::<RationalFunction>::new(n, d).map_err(|e| e.to_string())?;
        let orders = BasisOrders::default();
        let van = borel_vanishing_check(&alg, &orders).map_err(|e| e.to_string())?;
        ensure(van.pass, || {
            format!("({n},{d}) vanishing: {:?}", van.witness)
        })?;
        let (_, plus) = borel_plus_basis(&alg, &RootOrder::Box).map_err(|e| e.to_string())?;
        let roots = (n * (n - 1) / 2) as u64;
        let want = binomial(roots + d as u64, d as u64);
        ensure(plus.pass() && plus.count as u64 == want, || {
            format!("({n},{d}) plus part: {plus:?}, want {want}")
        })?;
        let full = enumerate_basis(n, d, Side::Plus, Placement::Right, &orders)
            .map_err(|e| e.to_string())?;
        let (elements, report) =
            borel_idempotent_basis(&alg, Side::Plus, &orders).map_err(|e| e.to_string())?;
        ensure(report.pass(), || {
            format!("({n},{d}) Borel basis: {report:?}")
        })?;
        ensure(elements.iter().all(|e| full.position(e).is_some()), || {
            format!("({n},{d}) Borel basis leaves the full basis")
        })?;
    }
    Ok("vanishing beyond degree d, plus-part counts, Borel bases inside the full basis".into())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn specialization() -> Outcome {
    let mut sizes = Vec::new();
    for (n, d) in GRID {
        let basis = enumerate_basis(n, d, Side::Plus, Placement::Right, &BasisOrders::default())
            .map_err(|e| e.to_string())?;
        let q = structure_constants(
            &SchurAlgebra::<RationalFunction>::new(n, d).map_err(|e| e.to_string())?,
            &basis,
        )
        .map_err(|e| e.to_string())?;
        let c = structure_constants(
            &SchurAlgebra::<BigRational>::new(n, d).map_err(|e| e.to_string())?,
            &basis,
        )
        .map_err(|e| e.to_string())?;
        let s = specialization_check(&q, &c);
        ensure(s.pass, || format!("({n},{d}): {:?}", s.witness))?;
        sizes.push(q.products.len().to_string());
    }
    Ok(format!(
        "quantum constants at v = 1 equal classical ones ({} nonzero products)",
        sizes.join("/")
    ))
}

fn conjectures() -> Outcome {
    let mut lines = 0;
    for (n, d) in GRID {
        let q = SchurAlgebra::<RationalFunction>::new(n, d).map_err(|e| e.to_string())?;
        let c = SchurAlgebra::<BigRational>::new(n, d).map_err(|e| e.to_string())?;
        for kind in ConjectureKind::ALL {
            let r = match kind {
                ConjectureKind::EKF => conjecture_report(&q, kind, 1, &BasisOrders::default()),
                _ => conjecture_report(&c, kind, 1, &BasisOrders::default()),
            }
            .map_err(|e| e.to_string())?;
            if n == 2
                && matches!(
                    kind,
                    ConjectureKind::EHF | ConjectureKind::FHE | ConjectureKind::EKF
                )
            {
                ensure(r.equal(), || {
                    format!("{kind} at ({n},{d}): rank {} count {}", r.rank, r.count)
                })?;
            }
            lines += 1;
        }
    }
    Ok(format!(
        "{lines} reports emitted; rank equals count for the n = 2 kinds"
    ))
}

/// Written past the test harness's capture so the lines land in the log of a plain `cargo test`.
fn report(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("dimension-counts", dimension_counts),
        ("worked-example-lists", example_lists),
        ("presentation-suites", presentations),
        ("straightening-oracle", straightening_oracle),
        ("rule-table-soundness", rule_soundness),
        ("hecke-subalgebra", hecke),
        ("borel-subalgebras", borel),
        ("specialization-at-one", specialization),
        ("conjecture-reports", conjectures),
    ];
    let outcomes: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria.iter().map(|(_, f)| s.spawn(f)).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| Err("panicked".into())))
            .collect()
    });
    let mut failed = 0;
    for ((name, _), outcome) in criteria.iter().zip(&outcomes) {
        match outcome {
            Ok(msg) => report(&format!("PASS {name}: {msg}")),
            Err(msg) => {
                failed += 1;
                report(&format!("FAIL {name}: {msg}"));
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
