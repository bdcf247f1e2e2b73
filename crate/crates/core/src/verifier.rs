//! Executable checks of the hook/distance multiset identity and of each
//! identity used on the way to it, plus sweeps over every partition in a
//! frame.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::multiset::NatMultiset;
use crate::partition::{Cell, Frame, FramedPartition, Partition};
use crate::qseries::{
    geometric_product, is_centrally_symmetric, recover_exponent_multiset, schur_by_enumeration,
    schur_hcf,
};
use crate::tableaux::{enumerate_ssyt, Ssyt};

/// Outcome of one check on one subject.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub subject: String,
    pub passed: bool,
    /// Empty when `passed`.
    pub details: Vec<String>,
}

impl VerifyReport {
    fn new(subject: String, details: Vec<String>) -> Self {
        Self {
            subject,
            passed: details.is_empty(),
            details,
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}",
            self.subject,
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for d in &self.details {
            write!(f, "\n  {d}")?;
        }
        Ok(())
    }
}

/// Collects failure lines.
#[derive(Default)]
struct Details(Vec<String>);

impl Details {
    fn multisets(&mut self, what: &str, left: &NatMultiset, right: &NatMultiset) {
        if let Some(diff) = left.first_difference(right) {
            self.0
                .push(format!("{what}: {diff}; left = {left}, right = {right}"));
        }
    }

    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.0.push(msg());
        }
    }
}

/// Hook lengths and distances split by whether the box lies in the diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionMultisets {
    pub hooks_inside: NatMultiset,
    pub hooks_outside: NatMultiset,
    pub distances_inside: NatMultiset,
    pub distances_outside: NatMultiset,
}

impl RegionMultisets {
    /// Entries of the hook/distance tableau.
    pub fn hook_distance(&self) -> NatMultiset {
        self.hooks_inside.union(&self.distances_outside)
    }

    /// Entries of the distance/hook tableau.
    pub fn distance_hook(&self) -> NatMultiset {
        self.distances_inside.union(&self.hooks_outside)
    }
}

pub fn region_multisets(fp: &FramedPartition) -> RegionMultisets {
    let mut out = RegionMultisets {
        hooks_inside: NatMultiset::new(),
        hooks_outside: NatMultiset::new(),
        distances_inside: NatMultiset::new(),
        distances_outside: NatMultiset::new(),
    };
    for ((cell, h), (_, d)) in fp.hook_lengths().zip(fp.distances()) {
        if fp.contains(cell) {
            out.hooks_inside.insert(h);
            out.distances_inside.insert(d);
        } else {
            out.hooks_outside.insert(h);
            out.distances_outside.insert(d);
        }
    }
    out
}

fn subject(fp: &FramedPartition, check: &str) -> String {
    format!("{check} for ({}) in {}", fp.partition(), fp.frame())
}

fn step_subject(fp: &FramedPartition, addbox: Cell, check: &str) -> String {
    format!(
        "{check} for ({}) + {addbox} in {}",
        fp.partition(),
        fp.frame()
    )
}

/// The hook/distance and distance/hook tableaux have the same entries.
pub fn verify_theorem(fp: &FramedPartition) -> VerifyReport {
    let regions = region_multisets(fp);
    let mut d = Details::default();
    d.multisets(
        "hook/distance vs distance/hook",
        &regions.hook_distance(),
        &regions.distance_hook(),
    );
    VerifyReport::new(subject(fp, "theorem"), d.0)
}

/// The two hook sets in row `a` and column `b` around an addable box each
/// partition an initial segment of the naturals.
pub fn verify_lemma2(fp: &FramedPartition, addbox: Cell) -> VerifyReport {
    let name = step_subject(fp, addbox, "lemma2");
    let sets = match fp.lemma2_sets(addbox) {
        Ok(s) => s,
        Err(e) => return VerifyReport::new(name, vec![e.to_string()]),
    };
    let (r, c) = (fp.frame().rows(), fp.frame().cols());
    let Cell { row: a, col: b } = addbox;
    let mut d = Details::default();
    for (label, set) in [
        ("west_in_row", &sets.west_in_row),
        ("south_in_col", &sets.south_in_col),
        ("north_in_col", &sets.north_in_col),
        ("east_in_row", &sets.east_in_row),
    ] {
        d.require(set.is_set(), || {
            format!("{label} = {set} has repeated values")
        });
    }
    d.multisets(
        "row hooks",
        &sets.west_in_row.union(&sets.south_in_col),
        &NatMultiset::range(1..=r - a + b - 1),
    );
    d.multisets(
        "column hooks",
        &sets.north_in_col.union(&sets.east_in_row),
        &NatMultiset::range(1..=c - b + a - 1),
    );
    VerifyReport::new(name, d.0)
}

/// Every identity of one inductive step from `λ` to `λ + addbox`.
pub fn verify_inductive_step(fp: &FramedPartition, addbox: Cell) -> VerifyReport {
    let name = step_subject(fp, addbox, "inductive");
    let (grown, sets) = match fp
        .add_box(addbox)
        .and_then(|g| Ok((g, fp.lemma2_sets(addbox)?)))
    {
        Ok(x) => x,
        Err(e) => return VerifyReport::new(name, vec![e.to_string()]),
    };
    let (r, c) = (fp.frame().rows(), fp.frame().cols());
    let Cell { row: a, col: b } = addbox;
    let mut d = Details::default();

    // Box-by-box hook updates.
    for (cell, h_new) in grown.hook_lengths() {
        let h_old = fp.hook_length(cell).expect("cell in frame") as i64;
        let on_cross = (cell.row == a) as u8 + (cell.col == b) as u8;
        let expected = match (grown.contains(cell), on_cross) {
            (true, 2) => 1,
            (true, 1) => h_old + 1,
            (false, 1) => h_old - 1,
            _ => h_old,
        };
        d.require(h_new as i64 == expected, || {
            format!("hook at {cell} became {h_new}, expected {expected} (was {h_old})")
        });
    }

    let old = region_multisets(fp);
    let new = region_multisets(&grown);
    let z = NatMultiset::range(1..=r - a + b - 1).union(&NatMultiset::range(2..=c - b + a));
    let y = sets
        .west_in_row
        .shifted_up()
        .union(&sets.north_in_col.shifted_up())
        .union(&sets.south_in_col)
        .union(&sets.east_in_row);
    let (down, across) = (r - a + b, c - b + a);

    let mut lhs = new.hooks_inside.union(&z);
    lhs.insert(1);
    let mut rhs = old.hooks_inside.union(&y);
    rhs.extend([1, across]);
    d.multisets("inside hooks equation", &lhs, &rhs);

    let mut lhs = new.hooks_outside.union(&z);
    lhs.insert(down);
    d.multisets("outside hooks equation", &lhs, &old.hooks_outside.union(&y));

    let mut lhs = new.distances_outside.clone();
    lhs.insert(across);
    d.multisets("outside distances", &lhs, &old.distances_outside);
    let mut rhs = old.distances_inside.clone();
    rhs.insert(down);
    d.multisets("inside distances", &new.distances_inside, &rhs);

    d.require(grown.distance(addbox).ok() == Some(down), || {
        format!("distance of {addbox} after adding it is not {down}")
    });
    d.require(fp.distance(addbox).ok() == Some(across), || {
        format!("distance of {addbox} before adding it is not {across}")
    });
    VerifyReport::new(name, d.0)
}

/// King's column complement is a weight-complementing bijection onto the
/// tableaux of the complementary shape.
pub fn verify_bijection(fp: &FramedPartition) -> VerifyReport {
    let frame = fp.frame();
    let r = frame.rows();
    // Each column pair of t and its image holds 1..=r exactly once.
    let total = frame.cols() as u64 * r as u64 * (r as u64 + 1) / 2;
    let complement = fp.complement();
    let mut d = Details::default();
    let mut images = std::collections::BTreeSet::new();
    let mut count = 0usize;
    for t in enumerate_ssyt(fp.partition(), r) {
        count += 1;
        match t.king_complement(frame) {
            Ok(tc) => {
                d.require(tc.shape() == complement.partition(), || {
                    format!("{t} maps to shape ({})", tc.shape())
                });
                d.require(t.weight() + tc.weight() == total, || {
                    format!(
                        "weights {} + {} != {total} for {t}",
                        t.weight(),
                        tc.weight()
                    )
                });
                d.require(tc.king_complement(frame).as_ref() == Ok(&t), || {
                    format!("{t} is not recovered")
                });
                images.insert(tc);
            }
            Err(e) => d.0.push(format!("{t}: {e}")),
        }
    }
    d.require(images.len() == count, || {
        format!("{count} tableaux but {} distinct images", images.len())
    });
    let target: std::collections::BTreeSet<Ssyt> =
        enumerate_ssyt(complement.partition(), r).collect();
    d.require(images == target, || {
        format!(
            "image has {} tableaux, complement shape has {}",
            images.len(),
            target.len()
        )
    });
    VerifyReport::new(subject(fp, "bijection"), d.0)
}

/// The cleared-denominator product identity holds as exact polynomials, and
/// factor recovery yields the same exponent multiset on both sides.
pub fn verify_hcf_identity(fp: &FramedPartition) -> VerifyReport {
    let regions = region_multisets(fp);
    let left_exps = regions.distance_hook();
    let right_exps = regions.hook_distance();
    let left = geometric_product(&left_exps);
    let right = geometric_product(&right_exps);
    let mut d = Details::default();
    d.require(left == right, || {
        format!("products differ: {left} vs {right}")
    });
    match (
        recover_exponent_multiset(&left),
        recover_exponent_multiset(&right),
    ) {
        (Ok(l), Ok(rr)) => {
            d.multisets("recovered exponents", &l, &rr);
            d.multisets("recovered vs distance/hook entries", &l, &left_exps);
        }
        (l, rr) => d.0.push(format!("recovery failed: {l:?} / {rr:?}")),
    }
    VerifyReport::new(subject(fp, "hcf"), d.0)
}

/// The hook content product equals the enumerated specialization with
/// `r` = frame rows, and the result is centrally symmetric.
pub fn verify_schur(fp: &FramedPartition) -> VerifyReport {
    let r = fp.frame().rows();
    let shape = fp.partition();
    let by_enum = schur_by_enumeration(shape, r);
    let mut d = Details::default();
    match schur_hcf(shape, r) {
        Ok(by_hcf) => d.require(by_hcf == by_enum, || {
            format!("hook content {by_hcf} vs enumeration {by_enum}")
        }),
        Err(e) => d.0.push(e.to_string()),
    }
    d.require(is_centrally_symmetric(&by_enum, shape.size(), r), || {
        format!(
            "{by_enum} is not symmetric about {}",
            (r as usize + 1) * shape.size()
        )
    });
    d.require(
        by_enum.low_degree() == Some(shape.min_weight() as usize),
        || format!("lowest exponent of {by_enum} is not {}", shape.min_weight()),
    );
    VerifyReport::new(subject(fp, "schur"), d.0)
}

/// Every partition with at most `rows` parts, each at most `cols`, in
/// lexicographic order of the zero-padded part sequence.
pub fn enumerate_partitions_in_frame(frame: Frame) -> PartitionsInFrame {
    PartitionsInFrame {
        frame,
        current: None,
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct PartitionsInFrame {
    frame: Frame,
    current: Option<Vec<u32>>,
    done: bool,
}

impl Iterator for PartitionsInFrame {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        match &mut self.current {
            None => self.current = Some(vec![0; self.frame.rows() as usize]),
            Some(parts) => {
                let cols = self.frame.cols();
                let bound = |parts: &[u32], k: usize| if k == 0 { cols } else { parts[k - 1] };
                match (0..parts.len()).rev().find(|&k| parts[k] < bound(parts, k)) {
                    Some(k) => {
                        parts[k] += 1;
                        parts[k + 1..].iter_mut().for_each(|p| *p = 0);
                    }
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
        let parts = self.current.clone().expect("set above");
        Some(Partition::from_padded(parts).expect("weakly decreasing by construction"))
    }
}

/// Checks that can be swept over a frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Theorem,
    Lemma2,
    Inductive,
    Bijection,
    Hcf,
    Schur,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Theorem,
        Check::Lemma2,
        Check::Inductive,
        Check::Bijection,
        Check::Hcf,
        Check::Schur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Lemma2 => "lemma2",
            Check::Inductive => "inductive",
            Check::Bijection => "bijection",
            Check::Hcf => "hcf",
            Check::Schur => "schur",
        }
    }

    /// Checks run once per addable box rather than once per partition.
    pub fn is_step_check(self) -> bool {
        matches!(self, Check::Lemma2 | Check::Inductive)
    }

    /// Checks that enumerate semistandard tableaux.
    pub fn enumerates_tableaux(self) -> bool {
        matches!(self, Check::Bijection | Check::Schur)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// Runs one check on one framed partition. Step checks run once per addable
/// box; the returned reports are in addable-box order.
pub fn run_check(fp: &FramedPartition, check: Check) -> Vec<VerifyReport> {
    match check {
        Check::Theorem => vec![verify_theorem(fp)],
        Check::Lemma2 => fp
            .addable_boxes()
            .into_iter()
            .map(|b| verify_lemma2(fp, b))
            .collect(),
        Check::Inductive => fp
            .addable_boxes()
            .into_iter()
            .map(|b| verify_inductive_step(fp, b))
            .collect(),
        Check::Bijection => vec![verify_bijection(fp)],
        Check::Hcf => vec![verify_hcf_identity(fp)],
        Check::Schur => vec![verify_schur(fp)],
    }
}

/// Pass counts for one check over a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub run: usize,
    pub passed: usize,
    /// First failure in enumeration order.
    pub first_failure: Option<VerifyReport>,
    failure_key: Option<(usize, usize)>,
}

impl CheckTally {
    fn record(&mut self, key: (usize, usize), report: VerifyReport) {
        self.run += 1;
        if report.passed {
            self.passed += 1;
        } else if self.failure_key.is_none_or(|k| key < k) {
            self.failure_key = Some(key);
            self.first_failure = Some(report);
        }
    }

    fn merge(mut self, other: CheckTally) -> CheckTally {
        self.run += other.run;
        self.passed += other.passed;
        if let (Some(key), Some(report)) = (other.failure_key, other.first_failure) {
            if self.failure_key.is_none_or(|k| key < k) {
                self.failure_key = Some(key);
                self.first_failure = Some(report);
            }
        }
        self
    }

    pub fn all_passed(&self) -> bool {
        self.run == self.passed
    }
}

/// Aggregate over every partition of a frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameReport {
    pub frame: Frame,
    pub partitions: usize,
    pub tallies: BTreeMap<Check, CheckTally>,
}

impl FrameReport {
    pub fn passed(&self) -> bool {
        self.tallies.values().all(CheckTally::all_passed)
    }

    fn empty(frame: Frame, checks: &[Check]) -> Self {
        Self {
            frame,
            partitions: 0,
            tallies: checks.iter().map(|&c| (c, CheckTally::default())).collect(),
        }
    }

    fn merge(mut self, other: FrameReport) -> FrameReport {
        self.partitions += other.partitions;
        for (check, tally) in other.tallies {
            let mine = self.tallies.remove(&check).unwrap_or_default();
            self.tallies.insert(check, mine.merge(tally));
        }
        self
    }
}

/// Runs `checks` on every partition of `frame` on the current rayon pool.
/// The aggregate does not depend on scheduling.
pub fn verify_frame(frame: Frame, checks: &[Check]) -> FrameReport {
    let partitions: Vec<Partition> = enumerate_partitions_in_frame(frame).collect();
    partitions
        .into_par_iter()
        .enumerate()
        .map(|(index, partition)| {
            let fp = FramedPartition::new(partition, frame).expect("enumerated partitions fit");
            let mut report = FrameReport::empty(frame, checks);
            report.partitions = 1;
            for &check in checks {
                let tally = report.tallies.get_mut(&check).expect("initialized");
                for (k, r) in run_check(&fp, check).into_iter().enumerate() {
                    tally.record((index, k), r);
                }
            }
            report
        })
        .reduce(|| FrameReport::empty(frame, checks), FrameReport::merge)
}
