//! Acceptance criteria, each run at its stated tolerance (exact) and time
//! budget. Prints one PASS/FAIL line per criterion, then fails if any did.
//!
//! Run with `cargo test -p hooktab --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hooktab::qseries::{
    geometric_product, is_centrally_symmetric, recover_exponent_multiset, schur_by_enumeration,
    schur_hcf,
};
use hooktab::verifier::{self, enumerate_partitions_in_frame, verify_frame, Check};
use hooktab::{enumerate_ssyt, Cell, Frame, FramedPartition, NatMultiset, Partition, QPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const HOOK_DISTANCE_FIGURE: [[u32; 8]; 6] = [
    [12, 11, 9, 6, 4, 2, 1, 1],
    [9, 8, 6, 3, 1, 4, 3, 2],
    [7, 6, 4, 1, 6, 5, 4, 3],
    [5, 4, 2, 8, 7, 6, 5, 4],
    [4, 3, 1, 9, 8, 7, 6, 5],
    [2, 1, 11, 10, 9, 8, 7, 6],
];

const DISTANCE_HOOK_FIGURE: [[u32; 8]; 6] = [
    [6, 7, 8, 9, 10, 11, 12, 1],
    [5, 6, 7, 8, 9, 1, 2, 4],
    [4, 5, 6, 7, 1, 3, 4, 6],
    [3, 4, 5, 1, 3, 5, 6, 8],
    [2, 3, 4, 2, 4, 6, 7, 9],
    [1, 2, 1, 4, 6, 8, 9, 11],
];

fn running_example() -> FramedPartition {
    FramedPartition::new(
        Partition::new(vec![7, 5, 4, 3, 3, 2]).unwrap(),
        Frame::new(6, 8).unwrap(),
    )
    .unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let spent = start.elapsed();
    ensure(spent < budget, || {
        format!("took {spent:?}, budget {budget:?}")
    })?;
    Ok(spent)
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(f)
}

fn ac1_running_example() -> Outcome {
    let fp = running_example();
    let start = Instant::now();
    let hd = fp.hook_distance_tableau();
    let dh = fp.distance_hook_tableau();
    let spent = within(start, Duration::from_millis(1))?;
    let mut matched = 0;
    for (name, t, fig) in [
        ("hook/distance", &hd, &HOOK_DISTANCE_FIGURE),
        ("distance/hook", &dh, &DISTANCE_HOOK_FIGURE),
    ] {
        for cell in fp.frame().cells() {
            let want = fig[cell.row as usize - 1][cell.col as usize - 1];
            let got = t.get(cell);
            ensure(got == Some(want), || {
                format!("{name} at {cell}: got {got:?}, figure has {want}")
            })?;
            matched += 1;
        }
    }
    Ok(format!("{matched}/96 cells match, built in {spent:?}"))
}

fn ac2_multiset_statistics() -> Outcome {
    let fp = running_example();
    let shared = fp
        .hook_distance_tableau()
        .entry_multiset()
        .map_err(|e| e.to_string())?;
    let other = fp
        .distance_hook_tableau()
        .entry_multiset()
        .map_err(|e| e.to_string())?;
    ensure(shared == other, || {
        "tableaux have different multisets".into()
    })?;
    let stats = (
        shared.count(1),
        shared.count(8),
        shared.max(),
        shared.count(12),
    );
    ensure(stats == (6, 3, Some(12), 1), || {
        format!(
            "value 1 x{}, value 8 x{}, max {} x{}; expected 1 x6, 8 x3, max 12 x1",
            stats.0,
            stats.1,
            stats.2.map_or("none".into(), |m| m.to_string()),
            stats.3
        )
    })?;
    Ok("1 x6, 8 x3, max 12 x1".into())
}

fn ac3_lemma2_sets() -> Outcome {
    let sets = running_example()
        .lemma2_sets(Cell::new(2, 6))
        .map_err(|e| e.to_string())?;
    let ms = |v: &[u32]| -> NatMultiset { v.iter().copied().collect() };
    ensure(sets.west_in_row == ms(&[1, 3, 6, 8, 9]), || {
        format!("R = {}", sets.west_in_row)
    })?;
    ensure(sets.south_in_col == ms(&[2, 4, 5, 7]), || {
        format!("R' = {}", sets.south_in_col)
    })?;
    ensure(sets.north_in_col == ms(&[2]), || {
        format!("C = {}", sets.north_in_col)
    })?;
    ensure(sets.east_in_row == ms(&[1, 3]), || {
        format!("C' = {}", sets.east_in_row)
    })?;
    let rows = sets.west_in_row.union(&sets.south_in_col);
    let cols = sets.north_in_col.union(&sets.east_in_row);
    ensure(rows == NatMultiset::range(1..=9) && rows.is_set(), || {
        format!("R u R' = {rows}")
    })?;
    ensure(cols == NatMultiset::range(1..=3) && cols.is_set(), || {
        format!("C u C' = {cols}")
    })?;
    Ok("R={1,3,6,8,9} R'={2,4,5,7} C={2} C'={1,3}".into())
}

fn ac4_schur_specialization() -> Outcome {
    let shape = Partition::new(vec![3, 2, 1]).unwrap();
    let want = QPoly::from_i64(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 2, 2, 1]);
    let by_enum = schur_by_enumeration(&shape, 3);
    let by_hcf = schur_hcf(&shape, 3).map_err(|e| e.to_string())?;
    ensure(by_enum == want, || format!("enumeration gave {by_enum}"))?;
    ensure(by_hcf == want, || format!("hook content gave {by_hcf}"))?;
    let listed: BTreeSet<&str> = [
        "111/22/3", "111/23/3", "112/22/3", "112/23/3", "113/22/3", "122/23/3", "113/23/3",
        "123/23/3",
    ]
    .into_iter()
    .collect();
    let streamed: Vec<String> = enumerate_ssyt(&shape, 3).map(|t| t.to_string()).collect();
    let streamed_set: BTreeSet<&str> = streamed.iter().map(String::as_str).collect();
    ensure(streamed.len() == 8 && streamed_set == listed, || {
        format!("stream yielded {streamed:?}")
    })?;
    Ok(format!("{want}; 8 tableaux"))
}

fn ac5_exhaustive_theorem() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    single_threaded(|| -> Result<(), String> {
        for r in 1..=8u32 {
            for c in 1..=8u32 {
                let report = verify_frame(Frame::new(r, c).unwrap(), &[Check::Theorem]);
                let expected = binomial((r + c) as u64, r as u64) as usize;
                ensure(report.partitions == expected, || {
                    format!(
                        "{r}x{c}: {} partitions, expected {expected}",
                        report.partitions
                    )
                })?;
                let tally = &report.tallies[&Check::Theorem];
                ensure(tally.all_passed(), || {
                    format!("{}", tally.first_failure.as_ref().unwrap())
                })?;
                total += report.partitions;
            }
        }
        Ok(())
    })?;
    let spent = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{total} partitions over 64 frames (12870 at 8x8), {spent:?} single-threaded"
    ))
}

fn ac6_inductive_replay() -> Outcome {
    let start = Instant::now();
    let mut steps = 0;
    for r in 1..=6u32 {
        for c in 1..=6u32 {
            let report = verify_frame(
                Frame::new(r, c).unwrap(),
                &[Check::Lemma2, Check::Inductive],
            );
            for (check, tally) in &report.tallies {
                ensure(tally.all_passed(), || {
                    format!(
                        "{check} in {r}x{c}: {}",
                        tally.first_failure.as_ref().unwrap()
                    )
                })?;
            }
            steps += report.tallies[&Check::Inductive].run;
        }
    }
    let spent = within(start, Duration::from_secs(60))?;
    Ok(format!("{steps} (partition, addable box) pairs, {spent:?}"))
}

fn ac7_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let frame = Frame::new(4, 4).unwrap();
    let mut n = 0;
    for p in enumerate_partitions_in_frame(frame) {
        let by_hcf = schur_hcf(&p, 4).map_err(|e| e.to_string())?;
        let by_enum = schur_by_enumeration(&p, 4);
        ensure(by_hcf == by_enum, || {
            format!("({p}): {by_hcf} vs {by_enum}")
        })?;
        n += 1;
    }
    ensure(n == 70, || format!("{n} partitions in 4x4"))?;
    let spent = within(start, Duration::from_secs(120))?;
    Ok(format!("70/70 partitions, {spent:?}"))
}

fn ac8_bijection() -> Outcome {
    let frame = Frame::new(3, 3).unwrap();
    let mut pairs = 0;
    for p in enumerate_partitions_in_frame(frame) {
        let fp = FramedPartition::new(p.clone(), frame).unwrap();
        let report = verifier::verify_bijection(&fp);
        ensure(report.passed, || report.to_string())?;
        // r = c = 3 here, so the two forms of the weight total coincide.
        for t in enumerate_ssyt(&p, 3) {
            let tc = t.king_complement(frame).map_err(|e| e.to_string())?;
            ensure(t.weight() + tc.weight() == 3 * 3 * 4 / 2, || {
                format!("{t} -> {tc}")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("20 partitions, {pairs} tableau pairs"))
}

fn ac9_lemma4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for k in 0..1000 {
        let size = rng.gen_range(0..=8);
        let e: NatMultiset = (0..size).map(|_| rng.gen_range(1..=12)).collect();
        let back = recover_exponent_multiset(&geometric_product(&e))
            .map_err(|err| format!("#{k} {e}: {err}"))?;
        ensure(back == e, || format!("#{k}: {e} recovered as {back}"))?;
    }
    let frame = Frame::new(5, 5).unwrap();
    let mut n = 0;
    for p in enumerate_partitions_in_frame(frame) {
        let report = verifier::verify_hcf_identity(&FramedPartition::new(p, frame).unwrap());
        ensure(report.passed, || report.to_string())?;
        n += 1;
    }
    ensure(n == 252, || format!("{n} partitions in 5x5"))?;
    Ok("1000 round trips, 252 partitions".into())
}

fn ac10_palindrome() -> Outcome {
    let mut n = 0;
    for p in enumerate_partitions_in_frame(Frame::new(4, 4).unwrap()) {
        let s = schur_by_enumeration(&p, 4);
        ensure(is_centrally_symmetric(&s, p.size(), 4), || {
            format!("({p}): {s}")
        })?;
        n += 1;
    }
    Ok(format!("{n} partitions"))
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        (
            "AC1",
            "running example tableaux match the figures",
            ac1_running_example,
        ),
        ("AC2", "shared multiset statistics", ac2_multiset_statistics),
        ("AC3", "hook sets around (2,6)", ac3_lemma2_sets),
        (
            "AC4",
            "specialization of s_(3,2,1) in 3 variables",
            ac4_schur_specialization,
        ),
        (
            "AC5",
            "theorem for every partition in frames up to 8x8",
            ac5_exhaustive_theorem,
        ),
        (
            "AC6",
            "inductive replay in frames up to 6x6",
            ac6_inductive_replay,
        ),
        (
            "AC7",
            "hook content = enumeration in 4x4, r=4",
            ac7_oracle_equivalence,
        ),
        ("AC8", "King bijection in 3x3, r=3", ac8_bijection),
        (
            "AC9",
            "factor recovery and cleared-denominator identity",
            ac9_lemma4,
        ),
        ("AC10", "central symmetry in 4x4, r=4", ac10_palindrome),
    ];
    let mut failed = Vec::new();
    for (id, what, run) in criteria {
        match run() {
            Ok(note) => println!("[PASS] {id} {what}: {note}"),
            Err(why) => {
                println!("[FAIL] {id} {what}: {why}");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
