//! The classification checked end to end at desk scale: every catalog
//! entry up to a chosen dimension must be lattice-regular and elementary
//! with its expected invariants, every same-dimension pair must be
//! non-congruent, and a set of negative controls must fail in the expected
//! ways. The report renders canonically — identical bytes for identical
//! inputs, independent of the worker count — with wall-clock timings kept
//! out of the canonical text.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::Value;

use crate::catalog::{all_entries, build, derive_cell24, Family};
use crate::error::{Error, Result};
use crate::polytope::{int_value, Polytope};
use crate::symmetry::{are_congruent, is_lattice_regular, symmetry_group};

/// Everything measured about one catalog entry. Passing means: regular,
/// elementary, and volume / flag count / f-vector equal to the expected
/// values, with the symmetry group exactly as large as the flag count.
#[derive(Clone, Debug)]
pub struct EntryCheck {
    pub label: String,
    pub dim: usize,
    pub regular: bool,
    pub elementary: bool,
    pub lattice_volume: BigInt,
    pub volume_ok: bool,
    pub flag_count: usize,
    pub flag_count_ok: bool,
    pub f_vector_ok: bool,
    pub group_order: usize,
}

impl EntryCheck {
    pub fn pass(&self) -> bool {
        self.regular
            && self.elementary
            && self.volume_ok
            && self.flag_count_ok
            && self.f_vector_ok
            && self.group_order == self.flag_count
    }
}

/// One same-dimension catalog pair; the classification demands these are
/// never congruent.
#[derive(Clone, Debug)]
pub struct PairCheck {
    pub a: String,
    pub b: String,
    pub congruent: bool,
}

impl PairCheck {
    pub fn pass(&self) -> bool {
        !self.congruent
    }
}

/// A negative control: a construction that must fail its test.
#[derive(Clone, Debug)]
pub struct ControlCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub max_dim: usize,
    pub entries: Vec<EntryCheck>,
    pub pairs: Vec<PairCheck>,
    pub controls: Vec<ControlCheck>,
    /// Stage wall times in milliseconds; excluded from the canonical render
    /// so report text stays byte-comparable across machines and workers.
    pub stage_ms: Vec<(String, u128)>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(EntryCheck::pass)
            && self.pairs.iter().all(PairCheck::pass)
            && self.controls.iter().all(|c| c.pass)
    }

    /// Canonical text report: one line per entry and control, failures
    /// spelled out, no timings.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(&mut out, format!("theorem verification up to dimension {}", self.max_dim));
        push(&mut out, format!("entries ({}):", self.entries.len()));
        for e in &self.entries {
            if e.pass() {
                push(
                    &mut out,
                    format!(
                        "  ok    {} volume={} flags={} group={}",
                        e.label, e.lattice_volume, e.flag_count, e.group_order
                    ),
                );
            } else {
                push(
                    &mut out,
                    format!(
                        "  FAIL  {} regular={} elementary={} volume={}({}) flags={}({}) f-vector({}) group={}",
                        e.label,
                        e.regular,
                        e.elementary,
                        e.lattice_volume,
                        if e.volume_ok { "ok" } else { "wrong" },
                        e.flag_count,
                        if e.flag_count_ok { "ok" } else { "wrong" },
                        if e.f_vector_ok { "ok" } else { "wrong" },
                        e.group_order,
                    ),
                );
            }
        }
        let bad_pairs: Vec<&PairCheck> = self.pairs.iter().filter(|p| !p.pass()).collect();
        if bad_pairs.is_empty() {
            push(
                &mut out,
                format!("pairs ({}): all same-dimension pairs non-congruent", self.pairs.len()),
            );
        } else {
            push(&mut out, format!("pairs ({}):", self.pairs.len()));
            for p in bad_pairs {
                push(&mut out, format!("  FAIL  {} ~ {} unexpectedly congruent", p.a, p.b));
            }
        }
        push(&mut out, format!("controls ({}):", self.controls.len()));
        for c in &self.controls {
            push(
                &mut out,
                format!("  {}  {}", if c.pass { "ok  " } else { "FAIL" }, c.name),
            );
        }
        push(&mut out, format!("result: {}", if self.pass() { "PASS" } else { "FAIL" }));
        out
    }

    /// Full report as JSON, timings included.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "label": e.label,
                    "dim": e.dim,
                    "regular": e.regular,
                    "elementary": e.elementary,
                    "lattice_volume": int_value(&e.lattice_volume),
                    "volume_ok": e.volume_ok,
                    "flag_count": e.flag_count,
                    "flag_count_ok": e.flag_count_ok,
                    "f_vector_ok": e.f_vector_ok,
                    "group_order": e.group_order,
                    "pass": e.pass(),
                })
            })
            .collect();
        let pairs: Vec<Value> = self
            .pairs
            .iter()
            .map(|p| serde_json::json!({ "a": p.a, "b": p.b, "congruent": p.congruent }))
            .collect();
        let controls: Vec<Value> = self
            .controls
            .iter()
            .map(|c| serde_json::json!({ "name": c.name, "pass": c.pass }))
            .collect();
        let timings: Vec<Value> = self
            .stage_ms
            .iter()
            .map(|(stage, ms)| serde_json::json!({ "stage": stage, "ms": ms }))
            .collect();
        serde_json::json!({
            "max_dim": self.max_dim,
            "pass": self.pass(),
            "entries": entries,
            "pairs": pairs,
            "controls": controls,
            "timings_ms": timings,
        })
    }
}

fn check_entry(label: String, dim: usize, p: &Polytope, expected: (&BigInt, usize, &[usize])) -> EntryCheck {
    let flag_count = p.flags().len();
    let volume = p.lattice_volume();
    EntryCheck {
        label,
        dim,
        regular: is_lattice_regular(p).0,
        elementary: p.is_elementary(),
        volume_ok: volume == *expected.0,
        lattice_volume: volume,
        flag_count,
        flag_count_ok: flag_count == expected.1,
        f_vector_ok: p.f_vector() == expected.2,
        group_order: symmetry_group(p).order(),
    }
}

fn run_controls() -> Vec<ControlCheck> {
    let mut out = Vec::new();
    let p = |raw: &[&[i64]]| {
        let verts = raw
            .iter()
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Polytope::from_vertices(raw[0].len(), verts).expect("control vertices are valid")
    };

    let s33 = build(Family::Simplex, 3, 3).expect("in range");
    out.push(ControlCheck {
        name: "simplex-3-p3 is not lattice-regular".into(),
        pass: !is_lattice_regular(&s33.polytope).0,
    });
    out.push(ControlCheck {
        name: "triangle (0,0),(1,0),(0,2) is not lattice-regular".into(),
        pass: !is_lattice_regular(&p(&[&[0, 0], &[1, 0], &[0, 2]])).0,
    });
    // a simplex towering over the volume-2 triangle instead of the unit
    // one: regular over neither
    out.push(ControlCheck {
        name: "twisted simplex (0,0,0),(1,0,0),(1,2,0),(0,0,2) is not lattice-regular".into(),
        pass: !is_lattice_regular(&p(&[&[0, 0, 0], &[1, 0, 0], &[1, 2, 0], &[0, 0, 2]])).0,
    });
    let c41 = build(Family::Cube, 4, 1).expect("in range");
    out.push(ControlCheck {
        name: "cube-4-v1 admits no inscribed 24-cell".into(),
        pass: matches!(derive_cell24(&c41), Ok(None)),
    });
    out
}

/// Check the whole classification up to `max_dim` (1..=6). `jobs` sizes the
/// worker pool, 0 meaning one worker per CPU; the report does not depend on
/// it.
pub fn run_verify_theorem(max_dim: usize, jobs: usize) -> Result<VerifyReport> {
    if !(1..=6).contains(&max_dim) {
        return Err(Error::Argument(format!(
            "verification is sized for dimensions 1..=6, got {max_dim}"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Argument(format!("worker pool: {e}")))?;

    let entries = all_entries(max_dim);
    let clock = Instant::now();
    let entry_checks: Vec<EntryCheck> = pool.install(|| {
        entries
            .par_iter()
            .map(|e| {
                check_entry(
                    e.label(),
                    e.dim,
                    &e.polytope,
                    (&e.expected_volume, e.expected_flag_count, &e.expected_f_vector),
                )
            })
            .collect()
    });
    let entries_ms = clock.elapsed().as_millis();

    let clock = Instant::now();
    let mut pair_index = Vec::new();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if entries[i].dim == entries[j].dim {
                pair_index.push((i, j));
            }
        }
    }
    let pair_checks: Vec<PairCheck> = pool.install(|| {
        pair_index
            .par_iter()
            .map(|&(i, j)| PairCheck {
                a: entries[i].label(),
                b: entries[j].label(),
                congruent: are_congruent(&entries[i].polytope, &entries[j].polytope).is_some(),
            })
            .collect()
    });
    let pairs_ms = clock.elapsed().as_millis();

    let clock = Instant::now();
    let controls = run_controls();
    let controls_ms = clock.elapsed().as_millis();

    Ok(VerifyReport {
        max_dim,
        entries: entry_checks,
        pairs: pair_checks,
        controls,
        stage_ms: vec![
            ("entries".into(), entries_ms),
            ("pairs".into(), pairs_ms),
            ("controls".into(), controls_ms),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_dimensions() {
        assert!(matches!(run_verify_theorem(0, 1), Err(Error::Argument(_))));
        assert!(matches!(run_verify_theorem(7, 1), Err(Error::Argument(_))));
    }

    #[test]
    fn dimension_two_report_passes() {
        let report = run_verify_theorem(2, 1).unwrap();
        assert!(report.pass());
        assert_eq!(report.entries.len(), 7);
        // 6 polygons pair up 15 ways; the lone segment pairs with nothing
        assert_eq!(report.pairs.len(), 15);
        assert_eq!(report.controls.len(), 4);
        assert!(report.controls.iter().all(|c| c.pass));
        let text = report.render();
        assert!(text.contains("result: PASS"));
        assert!(text.contains("ok    hexagon-2-v2 volume=18 flags=12 group=12"));
    }

    #[test]
    fn report_is_identical_across_worker_counts() {
        let one = run_verify_theorem(2, 1).unwrap();
        let four = run_verify_theorem(2, 4).unwrap();
        assert_eq!(one.render(), four.render());
        // JSON differs only through timings; strip them and compare
        let mut a = one.to_json();
        let mut b = four.to_json();
        a.as_object_mut().unwrap().remove("timings_ms");
        b.as_object_mut().unwrap().remove("timings_ms");
        assert_eq!(a, b);
    }

    #[test]
    fn failures_render_loudly() {
        let mut report = run_verify_theorem(1, 1).unwrap();
        report.entries[0].regular = false;
        assert!(!report.pass());
        let text = report.render();
        assert!(text.contains("FAIL  segment-1"));
        assert!(text.contains("result: FAIL"));
    }
}
