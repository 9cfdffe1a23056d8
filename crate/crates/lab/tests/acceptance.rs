//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines always print; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use property_lab::verify::sample_subsets;
use property_lab::{builtin, monotone_check, registry, verify, Mode, VerifyConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sensitivity_core::graph::{class_table, edge_slots, enumerate_iso_classes, LabeledGraph};
use sensitivity_core::hypercube::{max_block_sensitivity, max_sensitivity, PropertyFunction};
use sensitivity_core::minimal::{degree_truncation, minimal_graphs, tree_truncation};
use sensitivity_core::witness::{extract_witness, run_case3, CaseId, Outcome};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn core<T>(r: sensitivity_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn lab<T>(r: property_lab::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// `s(f)` by flipping every coordinate of every point.
fn naive_sensitivity(f: &PropertyFunction) -> u32 {
    let m = f.arity();
    (0..1u64 << m)
        .map(|x| (0..m).filter(|&i| f.value(x) != f.value(x ^ (1 << i))).count() as u32)
        .max()
        .unwrap()
}

fn class_property(n: usize, subset: &[u64]) -> Result<PropertyFunction, String> {
    let table = core(class_table(n))?;
    let selected: Vec<bool> = (0..table.classes().len()).map(|i| (subset[i / 64] >> (i % 64)) & 1 == 1).collect();
    core(table.property(&selected))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut seen = Vec::new();
    for n in 4..=7 {
        let f = lab(builtin("degree-n-minus-1", n))?;
        let s = core(max_sensitivity(&f))?.value;
        ensure!(s as usize == n - 1, "n = {n}: s = {s}, expected {}", n - 1);
        seen.push(format!("n={n}:{s}"));
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(10), "took {took:?}");
    Ok(format!("{} in {took:.2?}", seen.join(" ")))
}

fn criterion_2() -> Check {
    let cfg = VerifyConfig { n: 4, mode: Mode::Exhaustive, seed: 0, count: 0, jobs: 1 };
    let first = lab(verify(&cfg))?;
    let second = lab(verify(&cfg))?;
    ensure!(first.examined == 2046, "examined {}", first.examined);
    ensure!(first.min_sensitivity >= 1, "minimum {} below 1", first.min_sensitivity);
    ensure!(first.asserted_violations().next().is_none(), "asserted bound violated");
    ensure!(first.stable_json() == second.stable_json(), "reports differ between runs");
    ensure!(first.wall_time_ms < 60_000, "took {} ms", first.wall_time_ms);

    // naive rescan of the minimizer and of ten random properties
    let min_f = core(first.min_property.to_property())?;
    ensure!(naive_sensitivity(&min_f) == first.min_sensitivity, "naive scan disagrees at the minimizer");
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..10 {
        let bits = rng.gen_range(1..(1u64 << 11) - 1);
        let f = class_property(4, &[bits])?;
        let s = naive_sensitivity(&f);
        ensure!(s == core(max_sensitivity(&f))?.value, "naive scan disagrees on subset {bits:#x}");
        ensure!(s >= first.min_sensitivity && first.histogram.contains_key(&s), "subset {bits:#x} has s = {s}");
    }
    Ok(format!(
        "2046 properties, min s = {} at {}, histogram {:?}, {} ms",
        first.min_sensitivity,
        first.min_property.to_json(),
        first.histogram,
        first.wall_time_ms
    ))
}

fn criterion_3() -> Check {
    let cfg = VerifyConfig { n: 5, mode: Mode::Sample, seed: 1, count: 100_000, jobs: 8 };
    let first = lab(verify(&cfg))?;
    let second = lab(verify(&cfg))?;
    ensure!(first.examined == 100_000, "examined {}", first.examined);
    ensure!(first.min_sensitivity >= 1, "minimum {} below 1", first.min_sensitivity);
    ensure!(first.stable_json() == second.stable_json(), "reports differ for equal seeds");
    ensure!(first.wall_time_ms < 600_000, "took {} ms", first.wall_time_ms);
    Ok(format!(
        "10^5 properties, min s = {}, histogram {:?}, {} ms on 8 workers",
        first.min_sensitivity, first.histogram, first.wall_time_ms
    ))
}

fn criterion_4() -> Check {
    let names = ["connected", "contains-triangle", "min-degree-at-least-1", "has-edge"];
    let mut seen = Vec::new();
    for n in 5..=7 {
        let report = lab(monotone_check(n))?;
        ensure!(report.violations().next().is_none(), "violation at n = {n}");
        for name in names {
            let e = report.entries.iter().find(|e| e.property == name).ok_or(format!("{name} missing"))?;
            let s = e.sensitivity.ok_or(format!("{name} not checked at n = {n}"))?;
            ensure!(e.checked && s as usize >= n - 1, "{name} at n = {n}: s = {s}");
            seen.push(s);
        }
    }
    Ok(format!("12 checks, sensitivities {seen:?}"))
}

struct WitnessStats {
    attained: usize,
    /// Traces per procedure: pendant-edge, case1, case2, case3.
    case_traces: std::collections::BTreeMap<String, usize>,
    claims: usize,
    derived: usize,
}

/// Runs the extractor on 100 seeded random properties on `n` vertices,
/// checking the soundness conditions, and counts the claims made by the case
/// traces.
fn witness_sweep(n: usize) -> Result<WitnessStats, String> {
    let table = core(class_table(n))?;
    let mut stats = WitnessStats { attained: 0, case_traces: Default::default(), claims: 0, derived: 0 };
    for subset in sample_subsets(table.classes().len(), 5, 100) {
        let f = class_property(n, &subset)?;
        let e = core(extract_witness(&f))?;
        let s = core(max_sensitivity(&f))?.value;
        let v = e.report.verified_sensitivity;
        ensure!(v <= s, "verified {v} above s(f) = {s}");
        ensure!(v >= e.minimal.max_edges(), "verified {v} below the largest minimal graph");
        ensure!(!e.has_inconsistency(), "inconsistency on {:?}", subset);
        if v == s {
            stats.attained += 1;
        }
        let g_fn = if e.complemented { f.complement() } else { f.clone() };
        for t in &e.traces {
            core(t.replay(&g_fn))?;
            if !matches!(t.case, CaseId::Case1 | CaseId::Case2 | CaseId::Case3 | CaseId::PendantEdge) {
                continue;
            }
            *stats.case_traces.entry(format!("{}/{}", t.case, t.outcome)).or_default() += 1;
            for w in &t.harvested {
                ensure!(w.refuted.is_empty(), "{} claimed {:?} falsely at {}", t.case, w.refuted, w.point);
                // recheck every claim by evaluating the flip
                for &c in &w.claimed {
                    ensure!(g_fn.value(w.point.bits()) != g_fn.value(w.point.bits() ^ (1 << c)), "slot {c} at {}", w.point);
                }
                stats.claims += w.claimed.len();
                stats.derived += w.derived.len();
            }
        }
    }
    Ok(stats)
}

fn criterion_5(stats: &Result<WitnessStats, String>) -> Check {
    let s = stats.as_ref().map_err(Clone::clone)?;
    Ok(format!("100 properties sound, 0 inconsistencies, witness attains s(f) in {}/100", s.attained))
}

fn criterion_6(stats: &Result<WitnessStats, String>) -> Check {
    let s = stats.as_ref().map_err(Clone::clone)?;
    ensure!(s.derived > 0, "no isomorphism-derived claims were made");
    // case3 never has enough single-edge components at n = 5, so the same
    // checks also run at n = 6
    let wider = witness_sweep(6)?;
    Ok(format!(
        "n=5 traces {:?}, {} claims of which {} isomorphism-derived; n=6 traces {:?}, {} claims of which {} derived; 0 false claims",
        s.case_traces, s.claims, s.derived, wider.case_traces, wider.claims, wider.derived
    ))
}

fn positive_min_degree(adj: &[u16]) -> u32 {
    adj.iter().map(|a| a.count_ones()).filter(|&d| d > 0).min().unwrap_or(u32::MAX)
}

/// Fewest edges in a tree component with at least one edge.
fn positive_min_tree_size(adj: &[u16]) -> u32 {
    let mut seen = 0u16;
    let mut best = u32::MAX;
    for v in 0..adj.len() {
        if seen >> v & 1 == 1 || adj[v] == 0 {
            continue;
        }
        let mut comp = 1u16 << v;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            let fresh = adj[x] & !comp;
            comp |= fresh;
            stack.extend((0..adj.len()).filter(|&y| fresh >> y & 1 == 1));
        }
        seen |= comp;
        let verts = comp.count_ones();
        let edges: u32 = (0..adj.len()).filter(|&y| comp >> y & 1 == 1).map(|y| adj[y].count_ones()).sum::<u32>() / 2;
        if edges + 1 == verts {
            best = best.min(edges);
        }
    }
    best
}

/// Largest subgraph satisfying `ok`, required to be unique.
fn brute_max(g: &LabeledGraph, ok: impl Fn(&[u16]) -> bool) -> Result<u64, String> {
    let full = g.bits();
    let mut best: Option<u64> = None;
    let mut sub = full;
    loop {
        let h = core(LabeledGraph::new(g.n(), sub))?;
        if ok(&h.adjacency()) {
            match best {
                Some(b) if b.count_ones() > sub.count_ones() => {}
                Some(b) if b.count_ones() == sub.count_ones() => return Err(format!("two maxima below {g}")),
                _ => best = Some(sub),
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full;
    }
    best.ok_or(format!("no subgraph of {g} qualifies"))
}

fn check_truncations(g: &LabeledGraph) -> Result<(), String> {
    for k in 1..=4u32 {
        let deg = brute_max(g, |a| positive_min_degree(a) >= k)?;
        ensure!(core(degree_truncation(g, k))?.bits() == deg, "degree truncation k = {k} at {g}");
        let tree = brute_max(g, |a| positive_min_tree_size(a) >= k)?;
        ensure!(core(tree_truncation(g, k))?.bits() == tree, "tree truncation k = {k} at {g}");
    }
    Ok(())
}

fn criterion_7() -> Check {
    let mut graphs = 0;
    for n in 1..=5 {
        for bits in 0..1u64 << edge_slots(n) {
            check_truncations(&core(LabeledGraph::new(n, bits))?)?;
            graphs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        check_truncations(&core(LabeledGraph::new(6, rng.gen_range(0..1u64 << 15)))?)?;
    }
    let table = core(class_table(4))?;
    let mut checked = 0;
    while checked < 200 {
        let bits = rng.gen_range(1..(1u64 << table.classes().len()) - 1);
        let f = class_property(4, &[bits])?;
        let f = if f.value(0) { f.complement() } else { f };
        let fast: Vec<u64> = core(minimal_graphs(&f))?.graphs.iter().map(|g| g.bits()).collect();
        let naive: Vec<u64> = (0..1u64 << 6)
            .filter(|&x| f.value(x))
            .filter(|&x| {
                let mut sub = x;
                while sub != 0 {
                    sub = (sub - 1) & x;
                    if f.value(sub) {
                        return false;
                    }
                }
                true
            })
            .collect();
        ensure!(fast == naive, "m(f) differs for class subset {bits:#x}");
        checked += 1;
    }
    Ok(format!("{graphs} graphs n ≤ 5 and 1000 at n = 6 for k = 1..4, 200 m(f) at n = 4"))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of classes as distinct minimum relabelings over all `n!` permutations.
fn canonize_all(n: usize) -> usize {
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let slot = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let mut forms = BTreeSet::new();
    for bits in 0..1u64 << pairs.len() {
        let min = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(c, _)| bits >> c & 1 == 1)
                    .fold(0u64, |acc, (_, &(a, b))| acc | 1 << slot(p[a], p[b]))
            })
            .min()
            .unwrap();
        forms.insert(min);
    }
    forms.len()
}

fn criterion_8() -> Check {
    let mut counts = Vec::new();
    for n in 1..=5 {
        let fast = core(enumerate_iso_classes(n))?.len();
        let oracle = canonize_all(n);
        ensure!(fast == oracle, "n = {n}: {fast} classes, oracle {oracle}");
        counts.push(fast);
    }
    ensure!(counts == [1, 2, 4, 11, 34], "counts {counts:?}");
    Ok(format!("class counts {counts:?} match the canonize-all oracle"))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut corpus: Vec<(String, PropertyFunction)> = (0..500)
        .map(|i| {
            let words: [u64; 4] = rng.gen();
            let f = PropertyFunction::tabulate(8, |x| words[(x / 64) as usize] >> (x % 64) & 1 == 1).unwrap();
            (format!("random #{i}"), f)
        })
        .collect();
    for b in registry() {
        corpus.push((format!("{} n=4", b.name), lab(b.table(4))?));
    }
    let mut gaps = 0;
    for (name, f) in &corpus {
        let s = core(max_sensitivity(f))?.value;
        let bs = core(max_block_sensitivity(f))?.value;
        ensure!(s <= bs, "{name}: s = {s} > bs = {bs}");
        ensure!(core(max_sensitivity(&f.complement()))?.value == s, "{name}: complement changes s");
        if s < bs {
            gaps += 1;
        }
    }
    Ok(format!("{} functions, s ≤ bs everywhere ({gaps} strict), s invariant under complement", corpus.len()))
}

fn criterion_10() -> Check {
    // superset-of-G indicator: isomorphic graphs get different values
    let g = core(LabeledGraph::from_edges(6, &[(0, 1), (2, 3)]))?;
    let f = core(PropertyFunction::tabulate(edge_slots(6), |x| x & g.bits() == g.bits()))?;
    let f = core(f.with_vertices(6))?;
    let t = core(run_case3(&f, &g))?;
    ensure!(t.outcome == Outcome::Inconsistency, "outcome {} ({})", t.outcome, t.reason);
    core(t.replay(&f))?;
    Ok(format!("case3 reports inconsistency: {}", t.reason))
}

fn main() {
    let stats = witness_sweep(5);
    let results: Vec<(u32, &str, Check)> = vec![
        (1, "extremal property s = n-1", criterion_1()),
        (2, "exhaustive n = 4 sweep", criterion_2()),
        (3, "sampled n = 5 sweep", criterion_3()),
        (4, "monotone bound n-1", criterion_4()),
        (5, "witness soundness", criterion_5(&stats)),
        (6, "claim-family verification", criterion_6(&stats)),
        (7, "structural oracles", criterion_7()),
        (8, "isomorphism class counts", criterion_8()),
        (9, "measure sanity", criterion_9()),
        (10, "negative control", criterion_10()),
    ];
    let mut failed = 0;
    for (id, name, r) in &results {
        match r {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name}: {why}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
