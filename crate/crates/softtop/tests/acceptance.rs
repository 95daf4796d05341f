//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test -p softtop --test acceptance -- --nocapture`
//! to see every line.

use std::time::Instant;

use softtop::claims::{verify_all, ClaimId, Verdict};
use softtop::enumerate::{
    build_lattice, enumerate_topologies, lattice_to_dot, naive_enumerate,
};
use softtop::error::Error;
use softtop::func::all_functions;
use softtop::ground::Ground;
use softtop::maximal::{is_maximal, Method, Property};
use softtop::set::SoftSet;
use softtop::symbolic::{
    compact_growth_oracle, family_property, sym_is_maximal, truncated_symbolic_sets,
    truncation_model, SymFamily, SymbolicTopology,
};
use softtop::topology::SoftTopology;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn s(e: Error) -> String {
    e.to_string()
}

fn report(n: usize, name: &str, body: impl FnOnce() -> Result<(), String>) {
    let result = body();
    match &result {
        Ok(()) => println!("acceptance {n} ({name}): PASS"),
        Err(e) => println!("acceptance {n} ({name}): FAIL - {e}"),
    }
    if let Err(e) = result {
        panic!("acceptance criterion {n} ({name}) failed: {e}");
    }
}

fn shapes_up_to(cells: usize) -> Vec<(usize, usize)> {
    let mut shapes = Vec::new();
    for n in 1..=cells {
        for m in 1..=n {
            if n % m == 0 {
                shapes.push((m, n / m));
            }
        }
    }
    shapes.sort_by_key(|&(m, k)| (m * k, m));
    shapes
}

#[test]
fn criterion_1_enumeration_counts() {
    report(1, "enumeration-counts", || {
        let start = Instant::now();
        for (cells, expected) in [(1usize, 1usize), (2, 4), (3, 29)] {
            let g = Ground::canonical(1, cells);
            let pruned = enumerate_topologies(&g).map_err(s)?;
            let naive = naive_enumerate(&SoftSet::absolute(&g)).map_err(s)?;
            ensure!(
                pruned.len() == expected,
                "{cells} cells: pruned count {} != {expected}",
                pruned.len()
            );
            ensure!(
                pruned == naive,
                "{cells} cells: pruned and naive enumerations differ"
            );
        }
        let g4 = Ground::canonical(1, 4);
        let pruned = enumerate_topologies(&g4).map_err(s)?;
        ensure!(
            pruned.len() == 355,
            "4 cells: pruned count {} != 355",
            pruned.len()
        );
        // Cross-validation against the slower filter over the entire
        // candidate space (strictly stronger than a sampled stratum).
        let naive = naive_enumerate(&SoftSet::absolute(&g4)).map_err(s)?;
        ensure!(pruned == naive, "4 cells: pruned and naive differ");
        // The full CLI run must also land inside the budget.
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_softtop"))
            .args(["enumerate", "--cells", "4", "--counts"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure!(
            String::from_utf8_lossy(&out.stdout) == "cells=4 topologies=355\n",
            "CLI counts line is wrong"
        );
        let elapsed = start.elapsed();
        ensure!(
            elapsed.as_secs() < 300,
            "enumeration took {elapsed:?}, over the 5 minute budget"
        );
        Ok(())
    });
}

#[test]
fn criterion_2_claim_suite() {
    report(2, "claim-suite", || {
        let start = Instant::now();
        let reports = verify_all(3).map_err(s)?;
        ensure!(reports.len() == 13, "expected 13 claim reports");
        for r in &reports {
            if r.claim == ClaimId::Cn5 {
                ensure!(
                    r.verdict == Verdict::Observed,
                    "CN5 must run in observe mode"
                );
                ensure!(
                    r.findings.len() == 3,
                    "CN5 must emit its findings report (3 readings)"
                );
            } else {
                ensure!(
                    r.verdict == Verdict::Pass,
                    "claim {} failed: {}",
                    r.claim,
                    r.render()
                );
            }
        }
        let elapsed = start.elapsed();
        ensure!(
            elapsed.as_secs() < 600,
            "claim suite took {elapsed:?}, over the 10 minute budget"
        );
        Ok(())
    });
}

#[test]
fn criterion_3_method_agreement() {
    report(3, "method-agreement", || {
        for (m, k) in [(1usize, 3usize), (3, 1)] {
            let g = Ground::canonical(m, k);
            let topologies = enumerate_topologies(&g).map_err(s)?;
            ensure!(
                topologies.len() == 29,
                "expected 29 topologies on 3 cells, found {}",
                topologies.len()
            );
            for t in &topologies {
                let brute = is_maximal(t, Property::Compact, Method::Brute).map_err(s)?;
                let ext =
                    is_maximal(t, Property::Compact, Method::Extension).map_err(s)?;
                let chr = is_maximal(t, Property::Compact, Method::Characterization)
                    .map_err(s)?;
                ensure!(
                    brute == ext && ext == chr,
                    "compact methods disagree on {t}: brute={brute} extension={ext} characterization={chr}"
                );
                let all = is_maximal(t, Property::Compact, Method::All).map_err(s)?;
                ensure!(all == brute, "compact `all` route disagrees on {t}");

                match is_maximal(t, Property::Connected, Method::Brute) {
                    Ok(brute) => {
                        let ext = is_maximal(t, Property::Connected, Method::Extension)
                            .map_err(s)?;
                        ensure!(
                            brute == ext,
                            "connected methods disagree on {t}: brute={brute} extension={ext}"
                        );
                        let all =
                            is_maximal(t, Property::Connected, Method::All).map_err(s)?;
                        ensure!(all == brute, "connected `all` route disagrees on {t}");
                    }
                    Err(Error::Precondition(_)) => {
                        // Disconnected space: every method must reject alike.
                        for method in [Method::Extension, Method::All] {
                            ensure!(
                                matches!(
                                    is_maximal(t, Property::Connected, method),
                                    Err(Error::Precondition(_))
                                ),
                                "methods disagree on the precondition for {t}"
                            );
                        }
                    }
                    Err(e) => return Err(format!("unexpected error on {t}: {e}")),
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_4_finite_compactness_collapse() {
    report(4, "finite-compactness-collapse", || {
        for (m, k) in shapes_up_to(3) {
            let g = Ground::canonical(m, k);
            let discrete = SoftTopology::discrete(&g).map_err(s)?;
            let mut via_brute = Vec::new();
            let mut via_characterization = Vec::new();
            for t in enumerate_topologies(&g).map_err(s)? {
                if is_maximal(&t, Property::Compact, Method::Brute).map_err(s)? {
                    via_brute.push(t.clone());
                }
                if is_maximal(&t, Property::Compact, Method::Characterization)
                    .map_err(s)?
                {
                    via_characterization.push(t.clone());
                }
            }
            ensure!(
                via_brute == vec![discrete.clone()],
                "({m},{k}): brute maximal-compact set is not exactly the discrete topology"
            );
            ensure!(
                via_characterization == vec![discrete],
                "({m},{k}): characterization maximal-compact set is not exactly the discrete topology"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_5_symbolic_certificates_and_truncations() {
    report(5, "symbolic-certificates", || {
        let fort = SymbolicTopology::new(SymFamily::Fort, vec!["e".into()], "e", 1)
            .map_err(s)?;
        let two_params = vec!["e1".to_string(), "e2".to_string()];
        let pp = SymbolicTopology::new(
            SymFamily::ParticularPoint,
            two_params.clone(),
            "e1",
            0,
        )
        .map_err(s)?;
        let ep = SymbolicTopology::new(SymFamily::ExcludedPoint, two_params, "e1", 0)
            .map_err(s)?;

        for (t, property) in [
            (&fort, Property::Compact),
            (&pp, Property::Connected),
            (&ep, Property::Connected),
        ] {
            ensure!(
                family_property(t.family()) == property,
                "family/property pairing is wrong"
            );
            let outcome = sym_is_maximal(t, property).map_err(s)?;
            ensure!(outcome.maximal, "{} must be maximal", t.family());
            ensure!(
                outcome.certificate.contains("case 1")
                    && outcome.certificate.contains("conclusion"),
                "{} certificate is incomplete",
                t.family()
            );
        }

        // Decider agreement with the finite-truncation oracles, exhaustive
        // over every truncated symbolic set, for every query class.
        for t in [&fort, &pp, &ep] {
            for n in 1..=4usize {
                let model = truncation_model(t, n, 1).map_err(s)?;
                for set in truncated_symbolic_sets(t, n) {
                    let mapped = model.to_model_set(&set).map_err(s)?;
                    ensure!(
                        t.is_open(&set).map_err(s)? == model.topology.is_open(&mapped),
                        "{} n={n}: open decider disagrees on {set}",
                        t.family()
                    );
                    ensure!(
                        t.is_closed(&set).map_err(s)?
                            == model.topology.is_closed(&mapped).map_err(s)?,
                        "{} n={n}: closed decider disagrees on {set}",
                        t.family()
                    );
                    ensure!(
                        t.is_dense(&set).map_err(s)?
                            == model.topology.is_dense(&mapped).map_err(s)?,
                        "{} n={n}: dense decider disagrees on {set}",
                        t.family()
                    );
                    ensure!(
                        t.is_compact(&set).map_err(s)?
                            == compact_growth_oracle(t, &set, n).map_err(s)?,
                        "{} n={n}: compact decider disagrees on {set}",
                        t.family()
                    );
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_algebra_law_suite() {
    report(6, "algebra-law-suite", || {
        let mut instances = 0usize;
        for (m, k) in shapes_up_to(3) {
            let g = Ground::canonical(m, k);
            let cells = g.cells();
            let sets: Vec<SoftSet> = (0..(1u64 << cells))
                .map(|mask| SoftSet::from_mask(&g, mask))
                .collect();
            // De Morgan and absorption over every pair.
            for a in &sets {
                for b in &sets {
                    ensure!(
                        a.union(b).map_err(s)?.complement()
                            == a.complement().intersection(&b.complement()).map_err(s)?,
                        "De Morgan (union) fails for {a}, {b}"
                    );
                    ensure!(
                        a.intersection(b).map_err(s)?.complement()
                            == a.complement().union(&b.complement()).map_err(s)?,
                        "De Morgan (intersection) fails for {a}, {b}"
                    );
                    ensure!(
                        a.union(&a.intersection(b).map_err(s)?).map_err(s)? == *a,
                        "absorption (union) fails for {a}, {b}"
                    );
                    ensure!(
                        a.intersection(&a.union(b).map_err(s)?).map_err(s)? == *a,
                        "absorption (intersection) fails for {a}, {b}"
                    );
                    instances += 4;
                }
            }
            // Interior/closure duality over every topology and subset.
            for t in enumerate_topologies(&g).map_err(s)? {
                for y in &sets {
                    ensure!(
                        t.interior(&y.complement()).map_err(s)?
                            == t.closure(y).map_err(s)?.complement(),
                        "Int/Cl duality fails for {y}"
                    );
                    ensure!(
                        t.closure(&y.complement()).map_err(s)?
                            == t.interior(y).map_err(s)?.complement(),
                        "Cl/Int duality fails for {y}"
                    );
                    instances += 2;
                }
            }
        }
        // Preimage distribution over every soft function between small
        // shapes and every pair of destination sets.
        for (sm, sk) in shapes_up_to(2) {
            for (dm, dk) in shapes_up_to(3) {
                let src = Ground::canonical(sm, sk);
                let dst = Ground::canonical(dm, dk);
                let dst_sets: Vec<SoftSet> = (0..(1u64 << dst.cells()))
                    .map(|mask| SoftSet::from_mask(&dst, mask))
                    .collect();
                for f in all_functions(&src, &dst) {
                    for b in &dst_sets {
                        for c in &dst_sets {
                            let pre_union = f.preimage(&b.union(c).map_err(s)?).map_err(s)?;
                            let union_pre = f
                                .preimage(b)
                                .map_err(s)?
                                .union(&f.preimage(c).map_err(s)?)
                                .map_err(s)?;
                            ensure!(pre_union == union_pre, "preimage/union fails");
                            let pre_meet =
                                f.preimage(&b.intersection(c).map_err(s)?).map_err(s)?;
                            let meet_pre = f
                                .preimage(b)
                                .map_err(s)?
                                .intersection(&f.preimage(c).map_err(s)?)
                                .map_err(s)?;
                            ensure!(pre_meet == meet_pre, "preimage/intersection fails");
                            ensure!(
                                f.preimage(&b.complement()).map_err(s)?
                                    == f.preimage(b).map_err(s)?.complement(),
                                "preimage/complement fails"
                            );
                            instances += 3;
                        }
                    }
                }
            }
        }
        ensure!(
            instances > 1000,
            "only {instances} law instances exercised"
        );
        Ok(())
    });
}

#[test]
fn criterion_7_determinism() {
    report(7, "determinism", || {
        let render =
            |reports: Vec<softtop::claims::ClaimReport>| -> String {
                reports
                    .iter()
                    .map(|r| r.render())
                    .collect::<Vec<_>>()
                    .join("\n")
            };
        let first = render(verify_all(3).map_err(s)?);
        let second = render(verify_all(3).map_err(s)?);
        ensure!(first == second, "consecutive runs differ");
        for workers in [1usize, 3] {
            let pooled = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .map_err(|e| e.to_string())?
                .install(|| verify_all(3))
                .map_err(s)?;
            ensure!(
                render(pooled) == first,
                "{workers}-worker run differs from the baseline"
            );
        }
        let g = Ground::canonical(1, 3);
        let dot_a = lattice_to_dot(&build_lattice(&g).map_err(s)?);
        let dot_b = lattice_to_dot(&build_lattice(&g).map_err(s)?);
        ensure!(dot_a == dot_b, "DOT export is not byte-deterministic");
        Ok(())
    });
}
