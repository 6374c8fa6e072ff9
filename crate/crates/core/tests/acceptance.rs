//! Release gate: prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails. All tolerances are exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use polycomp::classify::{
    admitted_orders, candidate_degree_rows, is_polyhedral, prune_order, self_complementary_size,
    solve_equal_order_size, solve_question, solve_unpruned, verify_remark_8_14,
    ClassificationReport, PRUNED_LIMITS, UNPRUNED_LIMITS,
};
use polycomp::connectivity::is_3_connected;
use polycomp::duality::{dual, is_self_dual};
use polycomp::enumeration::{all_graphs, filter_by_degree_sequence, Census};
use polycomp::graph6;
use polycomp::isomorphism::{are_isomorphic, canonical_form, is_self_complementary};
use polycomp::planarity::{embed, is_planar, kuratowski_oracle, trace_faces};
use polycomp::{DegreeSequence, Graph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Ctx) -> Outcome);

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want:?}, got {got:?}"))
    }
}

fn seq(s: &str) -> DegreeSequence {
    s.parse().expect("degree sequence literal")
}

struct Ctx {
    census: Census,
    report: ClassificationReport,
}

fn c1_census_counts(ctx: &Ctx) -> Outcome {
    let c = &ctx.census;
    let upto10: usize = (6..=10).map(|q| c.by_size(q).count()).sum();
    expect("q <= 10", upto10, 6)?;
    expect("q = 11", c.by_size(11).count(), 4)?;
    expect("q = 12", c.by_size(12).count(), 12)?;
    expect("q = 13", c.by_size(13).count(), 22)?;
    let p79 = c.graphs(7, 14).len() + c.graphs(9, 14).len();
    let p8 = c.graphs(8, 14);
    let sd = p8.iter().filter(|g| is_self_dual(g).unwrap()).count();
    expect("q = 14, p in {7, 9}", p79, 16)?;
    expect("q = 14, p = 8 self-dual", sd, 16)?;
    expect("q = 14, p = 8 non-self-dual", p8.len() - sd, 26)?;
    expect("q = 14 total", c.by_size(14).count(), 58)?;
    Ok("6, 4, 12, 22, 16 + 16 + 26 = 58".into())
}

fn c2_order_8_size_12(ctx: &Ctx) -> Outcome {
    let gs = ctx.census.graphs(8, 12);
    expect("(8,12) polyhedra", gs.len(), 2)?;
    expect(
        "non-planar complements",
        gs.iter().filter(|g| !is_planar(&g.complement())).count(),
        2,
    )?;
    Ok("2 polyhedra, both complements non-planar".into())
}

fn c3_order_8_size_13(ctx: &Ctx) -> Outcome {
    let gs = ctx.census.graphs(8, 13);
    expect("(8,13) polyhedra", gs.len(), 11)?;
    let cand = filter_by_degree_sequence(&gs, &seq("44333333"));
    expect("with 44333333", cand.len(), 9)?;
    expect(
        "non-planar complements",
        cand.iter().filter(|g| !is_planar(&g.complement())).count(),
        9,
    )?;
    Ok("11 polyhedra, 9 with 44333333, all 9 complements non-planar".into())
}

fn c4_order_8_size_14(ctx: &Ctx) -> Outcome {
    let gs = ctx.census.graphs(8, 14);
    expect("(8,14) polyhedra", gs.len(), 42)?;
    expect(
        "with 44443333",
        filter_by_degree_sequence(&gs, &seq("44443333")).len(),
        17,
    )?;
    Ok("42 polyhedra, 17 with 44443333".into())
}

fn c5_solutions(ctx: &Ctx) -> Outcome {
    let sols = &ctx.report.solutions;
    expect("solutions", sols.len(), 3)?;
    let graphs: Vec<Graph> = sols.iter().map(|s| s.entry.graph).collect();
    expect(
        "self-complementary",
        graphs.iter().filter(|g| is_self_complementary(g)).count(),
        3,
    )?;
    expect(
        "not self-dual",
        graphs.iter().filter(|g| !is_self_dual(g).unwrap()).count(),
        1,
    )?;
    expect(
        "degree sequence 44443333",
        graphs
            .iter()
            .filter(|g| g.degree_sequence() == seq("44443333"))
            .count(),
        3,
    )?;
    let names: Vec<&str> = sols.iter().map(|s| s.entry.label.as_str()).collect();
    Ok(format!("3 solutions {}", names.join(", ")))
}

fn c6_pruning(_: &Ctx) -> Outcome {
    let trace = prune_order();
    expect("admitted orders", admitted_orders(&trace), vec![8])?;
    let row8 = trace.iter().find(|r| r.p == 8).ok_or("no p = 8 row")?;
    expect(
        "d_1, d_8 at p = 8",
        (row8.max_degree, row8.min_degree),
        (4, 3),
    )?;
    let p7 = trace.iter().find(|r| r.p == 7).ok_or("no p = 7 row")?;
    expect("p = 7 reason", p7.reason(), "odd degree sum 21".to_string())?;
    let rows: Vec<(String, usize, usize, String, usize, usize)> = candidate_degree_rows()
        .into_iter()
        .map(|r| {
            (
                r.sequence.to_string(),
                r.q,
                r.r,
                r.complement_sequence.to_string(),
                r.complement_q,
                r.complement_r,
            )
        })
        .collect();
    let want = vec![
        (
            "33333333".to_string(),
            12,
            6,
            "44444444".to_string(),
            16,
            10,
        ),
        ("44333333".to_string(), 13, 7, "44444433".to_string(), 15, 9),
        ("44443333".to_string(), 14, 8, "44443333".to_string(), 14, 8),
    ];
    expect("candidate rows", rows, want)?;
    Ok("p = 8 with d_1 = 4, d_8 = 3; three candidate rows".into())
}

fn c7_remark(_: &Ctx) -> Outcome {
    expect(
        "system solutions",
        solve_equal_order_size(self_complementary_size, 1000),
        vec![(8, 14)],
    )?;
    if !verify_remark_8_14() {
        return Err("verify_remark_8_14 returned false".into());
    }
    Ok("unique solution (p, q) = (8, 14)".into())
}

fn c8_properties(ctx: &Ctx) -> Outcome {
    let mut small: Vec<Graph> = (1..=7).flat_map(all_graphs).collect();
    let exhaustive = small.len();
    let mut rng = common::rng(2024);
    for p in [8, 9] {
        for i in 0..300 {
            small.push(common::random_graph(
                &mut rng,
                p,
                0.15 + 0.06 * (i % 10) as f64,
            ));
        }
    }
    for g in &small {
        let name = graph6::encode(g);
        if g.complement().complement() != *g {
            return Err(format!("complement involution fails on {name}"));
        }
        if graph6::decode(&name).ok() != Some(*g) {
            return Err(format!("graph6 round trip fails on {name}"));
        }
        let planar = is_planar(g);
        if kuratowski_oracle(g) != Ok(planar) {
            return Err(format!(
                "planarity disagrees with the Kuratowski oracle on {name}"
            ));
        }
        if is_3_connected(g) != common::naive_3_connected(g) {
            return Err(format!(
                "3-connectivity disagrees with the deletion oracle on {name}"
            ));
        }
        if planar {
            let faces = trace_faces(&embed(g).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
                .len();
            if faces + g.order() != g.size() + 2 * common::component_count(g) {
                return Err(format!("Euler's formula fails on {name}"));
            }
        }
    }
    let census: Vec<Graph> = ctx.census.iter().map(|(_, g)| *g).collect();
    for g in &census {
        let d = dual(g).map_err(|e| e.to_string())?;
        let dd = dual(&d).map_err(|e| e.to_string())?;
        if !are_isomorphic(&dd, g) {
            return Err(format!("dual of dual differs on {}", graph6::encode(g)));
        }
    }
    let mut relabelled = 0;
    for g in small.iter().chain(&census) {
        let cert = canonical_form(g);
        for _ in 0..100 {
            let perm = common::random_permutation(&mut rng, g.order());
            if canonical_form(&g.relabel(&perm).expect("permutation")) != cert {
                return Err(format!(
                    "canonical form changes under relabelling of {}",
                    graph6::encode(g)
                ));
            }
            relabelled += 1;
        }
    }
    Ok(format!(
        "{exhaustive} graphs exhaustively (p <= 7), {} sampled (p = 8, 9), {} census duals, {relabelled} relabellings",
        small.len() - exhaustive,
        census.len()
    ))
}

fn c9_unpruned(ctx: &Ctx) -> Outcome {
    let sweep = solve_unpruned(&Census::generate(UNPRUNED_LIMITS)).map_err(|e| e.to_string())?;
    expect(
        "solution certificates",
        &sweep.solutions,
        &ctx.report.certificates(),
    )?;
    Ok(format!(
        "{} polyhedra at p in {:?}, identical certificates",
        sweep.checked, sweep.orders
    ))
}

fn c10_duals_polyhedral(ctx: &Ctx) -> Outcome {
    let mut n = 0;
    for (_, g) in ctx.census.iter() {
        let d = dual(g).map_err(|e| e.to_string())?;
        if !is_polyhedral(&d) {
            return Err(format!("dual of {} is not polyhedral", graph6::encode(g)));
        }
        n += 1;
    }
    Ok(format!("all {n} duals polyhedral"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let census = Census::generate(PRUNED_LIMITS);
    let report = match solve_question(&census) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("classification failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let ctx = Ctx { census, report };
    let criteria: [Criterion; 10] = [
        ("census counts by size", c1_census_counts),
        ("(8,12) polyhedra and complements", c2_order_8_size_12),
        ("(8,13) polyhedra and complements", c3_order_8_size_13),
        ("(8,14) polyhedra", c4_order_8_size_14),
        ("three solutions", c5_solutions),
        ("order pruning and candidate rows", c6_pruning),
        ("equal order and size forces (8,14)", c7_remark),
        ("property suites", c8_properties),
        ("pruned and unpruned classification agree", c9_unpruned),
        (
            "duals of census polyhedra are polyhedral",
            c10_duals_polyhedral,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome =
            std::panic::catch_unwind(|| check(&ctx)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
