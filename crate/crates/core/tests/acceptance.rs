//! End-to-end acceptance: one PASS/FAIL line per criterion, then a single
//! assertion over the gating ones.

mod common;

use std::io::Write;
use std::time::Instant;

use common::{all_fixtures, cabled_mutant_pair, knots_dir, random_diagram, rng, Fixture, PAIRS};
use mutknot::coloredjones::{colored_jones, jw_projector};
use mutknot::diagram::signature;
use mutknot::khovanov::{jones_to_euler, kh_diff, khovanov_with, BigradedGroups, KhOptions};
use mutknot::mutation::random::{random_closure, random_tangle};
use mutknot::mutation::{close, Involution};
use mutknot::pipeline::{classify, ingest, report, ClassifyOptions, KnotRecord, ReportMode};
use mutknot::skein::{alexander, bracket_state_sum, homfly, jones, kauffman_bracket, kauffman_poly};
use mutknot::PlanarDiagram;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Pass,
    Fail,
    NotAttempted,
}

struct Table {
    rows: Vec<(String, Outcome, bool, String)>,
}

impl Table {
    fn record(&mut self, id: &str, ok: bool, detail: String, started: Instant) {
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail };
        let detail = format!("{detail} [{:.1}s]", started.elapsed().as_secs_f64());
        self.print(id, outcome, &detail);
        self.rows.push((id.to_string(), outcome, true, detail));
    }

    fn skip(&mut self, id: &str, detail: &str) {
        self.print(id, Outcome::NotAttempted, detail);
        self.rows.push((id.to_string(), Outcome::NotAttempted, false, detail.to_string()));
    }

    fn print(&self, id: &str, o: Outcome, detail: &str) {
        let tag = match o {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::NotAttempted => "NOT ATTEMPTED",
        };
        let _ = writeln!(std::io::stdout().lock(), "acceptance {id:<4} {tag:<13} {detail}");
    }
}

fn record_of<'a>(records: &'a [KnotRecord], name: &str) -> &'a KnotRecord {
    records.iter().find(|r| r.name == name).unwrap_or_else(|| panic!("record {name}"))
}

fn pairs_equal<T: PartialEq>(records: &[KnotRecord], f: impl Fn(&KnotRecord) -> T) -> bool {
    PAIRS.iter().all(|(a, b)| f(record_of(records, a)) == f(record_of(records, b)))
}

fn count_matches<T: PartialEq>(fixtures: &[Fixture], records: &[KnotRecord], got: impl Fn(&KnotRecord) -> T, want: impl Fn(&Fixture) -> T) -> (usize, Vec<String>) {
    let mut bad = Vec::new();
    for f in fixtures {
        if got(record_of(records, &f.name)) != want(f) {
            bad.push(f.name.clone());
        }
    }
    (fixtures.len() - bad.len(), bad)
}

fn kh_checked(d: &PlanarDiagram, reduced: bool, blocks: &mut usize) -> BigradedGroups {
    let (g, stats) = khovanov_with(d, KhOptions { reduced, check_d_squared: true, ..KhOptions::default() }).unwrap();
    *blocks += stats.d_squared_checked;
    g
}

#[test]
fn acceptance() {
    let mut t = Table { rows: Vec::new() };
    let fixtures = all_fixtures();
    let records = ingest(&[knots_dir()]).expect("fixture directory");
    assert_eq!(records.len(), 10);
    let mut d2_blocks = 0usize;

    // 1-4: polynomial fixtures
    let s = Instant::now();
    let (n, bad) = count_matches(&fixtures, &records, |r| r.jones().unwrap().clone(), |f| f.jones.clone());
    let pairs = pairs_equal(&records, |r| r.jones().unwrap().clone());
    t.record("1", n == 10 && pairs, format!("Jones fixtures: {n}/10 match {bad:?}, pairs equal: {pairs}"), s);

    let s = Instant::now();
    let (n, bad) = count_matches(&fixtures, &records, |r| r.alexander().unwrap().clone(), |f| f.alexander.clone());
    t.record("2", n == 10, format!("Alexander fixtures: {n}/10 match {bad:?}"), s);

    let s = Instant::now();
    let (n, bad) = count_matches(&fixtures, &records, |r| r.homfly().unwrap().clone(), |f| f.homfly.clone());
    let pairs = pairs_equal(&records, |r| r.homfly().unwrap().clone());
    t.record("3", n == 10 && pairs, format!("HOMFLY-PT tables: {n}/10 match cell-for-cell {bad:?}, pairs equal: {pairs}"), s);

    let s = Instant::now();
    let (n, bad) = count_matches(&fixtures, &records, |r| r.kauffman().unwrap().clone(), |f| f.kauffman.clone());
    let pairs = pairs_equal(&records, |r| r.kauffman().unwrap().clone());
    t.record("4", n == 10 && pairs, format!("Kauffman tables: {n}/10 match cell-for-cell {bad:?}, pairs equal: {pairs}"), s);

    // 5: integral Khovanov homology, with a per-fixture mirror flag
    let s = Instant::now();
    let mut kh_ok = 0;
    let mut flipped = Vec::new();
    for f in &fixtures {
        let r = record_of(&records, &f.name);
        let g = r.khovanov().unwrap();
        if *g == f.kh {
            kh_ok += 1;
        } else if kh_checked(&f.diagram.mirror(), false, &mut d2_blocks) == f.kh {
            kh_ok += 1;
            flipped.push(f.name.clone());
        }
    }
    let g0 = record_of(&records, "14n22185").khovanov().unwrap().get(0, -1);
    let special = g0.rank == 2 && g0.torsion.len() == 2 && g0.torsion.iter().all(|t| *t == 2.into());
    let diffs: Vec<usize> =
        PAIRS.iter().map(|(a, b)| kh_diff(record_of(&records, a).khovanov().unwrap(), record_of(&records, b).khovanov().unwrap()).len()).collect();
    let ok = kh_ok == 10 && special && diffs.iter().all(|&d| d > 0);
    t.record(
        "5",
        ok,
        format!("Khovanov tables: {kh_ok}/10 match (mirror flag on {flipped:?}); Z^2+Z2^2 at (0,-1): {special}; kh_diff sizes {diffs:?}"),
        s,
    );

    // 6: reduced homology on the 14-crossing pair
    let s = Instant::now();
    let ra = kh_checked(&record_of(&records, "14n22185").diagram, true, &mut d2_blocks);
    let rb = kh_checked(&record_of(&records, "14n22589").diagram, true, &mut d2_blocks);
    let n = kh_diff(&ra, &rb).len();
    t.record("6", n > 0, format!("reduced Khovanov of 14n22185 and 14n22589 differs in {n} bidegrees"), s);

    // 7: coloured Jones at N = 3
    let s = Instant::now();
    let j3a = colored_jones(&record_of(&records, "14n22185").diagram, 3).unwrap();
    let j3b = colored_jones(&record_of(&records, "14n22589").diagram, 3).unwrap();
    t.record("7", j3a == j3b, format!("J_3(14n22185) = J_3(14n22589): {} ({} terms)", j3a == j3b, j3a.num_terms()), s);

    // 8: graded Euler characteristic
    let s = Instant::now();
    let euler_ok = records.iter().filter(|r| r.khovanov().unwrap().euler_characteristic() == jones_to_euler(r.jones().unwrap(), false)).count();
    let reduced_ok = ra.euler_characteristic() == jones_to_euler(record_of(&records, "14n22185").jones().unwrap(), true)
        && rb.euler_characteristic() == jones_to_euler(record_of(&records, "14n22589").jones().unwrap(), true);
    t.record("8", euler_ok == 10 && reduced_ok, format!("Euler characteristic = Jones: {euler_ok}/10 (reduced pair: {reduced_ok})"), s);

    // 9a: transfer-matrix bracket against the state sum
    let s = Instant::now();
    let mut r = rng(0x9a);
    let mut agree = 0;
    let mut sizes = 0;
    for _ in 0..200 {
        let d = random_diagram(&mut r, 9);
        assert!(d.n_crossings() <= 12);
        sizes += d.n_crossings();
        agree += usize::from(kauffman_bracket(&d).unwrap() == bracket_state_sum(&d));
    }
    t.record("9a", agree == 200, format!("bracket = state sum on {agree}/200 diagrams (mean {:.1} crossings)", sizes as f64 / 200.0), s);

    // 9b: Conway mutation
    let s = Instant::now();
    let mut r = rng(0x9b);
    let (mut tried, mut agree) = (0, 0);
    while tried < 100 {
        let tg = random_tangle(&mut r, 6);
        let c = random_closure(&mut r);
        let inv = Involution::ALL[r_index(&mut r)];
        let a = close(&tg, &c).unwrap().diagram;
        let b = close(&tg.mutate(inv), &c).unwrap().diagram;
        if !(a.is_knot() && b.is_knot()) {
            continue;
        }
        tried += 1;
        let same = jones(&a).unwrap() == jones(&b).unwrap()
            && homfly(&a).unwrap() == homfly(&b).unwrap()
            && kauffman_poly(&a).unwrap() == kauffman_poly(&b).unwrap()
            && alexander(&a).unwrap() == alexander(&b).unwrap()
            && signature(&a).unwrap() == signature(&b).unwrap();
        agree += usize::from(same);
    }
    t.record("9b", agree == tried, format!("Conway mutants agree on all five invariants: {agree}/{tried} triples"), s);

    // 9c: T(1,2) cabled mutation
    let s = Instant::now();
    let mut r = rng(0x9c);
    let mut agree = 0;
    let mut max_x = 0;
    for _ in 0..20 {
        let (a, b) = cabled_mutant_pair(&mut r, 4, 3, 10);
        max_x = max_x.max(a.n_crossings());
        agree += usize::from(homfly(&a).unwrap() == homfly(&b).unwrap() && kauffman_poly(&a).unwrap() == kauffman_poly(&b).unwrap());
    }
    t.record("9c", agree == 20, format!("T(1,2) cabled mutants share HOMFLY-PT and Kauffman: {agree}/20 (up to {max_x} crossings)"), s);

    // 9d: Jones-Wenzl projectors
    let s = Instant::now();
    let jw = (1..=6).all(|n| {
        let p = jw_projector(n).unwrap();
        p.is_idempotent() && p.is_annihilated() && p.has_expected_trace()
    });
    t.record("9d", jw, "Jones-Wenzl idempotence, annihilation and trace for n <= 6".to_string(), s);

    // 9e: d∘d = 0 (a violation panics inside the engine)
    let s = Instant::now();
    let mut r = rng(0x9e);
    for _ in 0..30 {
        let d = common::random_knot(&mut r, 8);
        kh_checked(&d, false, &mut d2_blocks);
        kh_checked(&d, true, &mut d2_blocks);
    }
    t.record("9e", d2_blocks > 0, format!("d∘d = 0 on {d2_blocks} differential blocks"), s);

    // 10: almost-mutant classification with Khovanov comparison
    let s = Instant::now();
    let classes = classify(&records, &ClassifyOptions::default()).unwrap();
    let rep = report(&classes, &records, ReportMode::Khovanov).unwrap();
    let sizes: Vec<usize> = rep.classes.iter().map(|c| c.members.len()).collect();
    let flagged = rep.classes.iter().filter(|c| c.kh_differs == Some(true)).count();
    let ok = sizes == vec![2; 5] && flagged == 5;
    t.record("10", ok, format!("classify: class sizes {sizes:?}, {flagged} flagged Kh-different"), s);

    // 11: K75 needs a 75-crossing transcription that is not available
    t.skip("11", "K75 coefficient tables: diagram not transcribed (stretch goal)");

    let failed: Vec<&str> = t.rows.iter().filter(|(_, o, gating, _)| *gating && *o == Outcome::Fail).map(|(id, ..)| id.as_str()).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

fn r_index(r: &mut impl rand::Rng) -> usize {
    r.gen_range(0..3)
}
