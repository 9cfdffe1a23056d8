use super::recorder::{slot, Recorder};
use super::require_minimal;
use super::trace::{CaseId, Outcome, Trace};
use crate::error::{Error, Result};
use crate::graph::{apply_permutation, are_isomorphic, LabeledGraph, Permutation};
use crate::hypercube::PropertyFunction;
use crate::minimal::{classify_components, isolated_vertices, positive_min_tree_size, Extended};

/// Number of single-edge components the construction uses: `⌈n/6⌉ + 1`.
pub fn case3_span(n: usize) -> usize {
    n.div_ceil(6) + 1
}

/// Runs the two-chain construction for a minimal graph `G` with single-edge
/// components `E_i = {v_i, u_i}` and isolated vertices `w_1 … w_r`.
///
/// `H = G ∪ {u_1,u_2} ∪ {v_1,v_i : 3 ≤ i ≤ K}` and
/// `H′ = H ∪ {v_1,v_2} ∖ {u_1,v_1}` are isomorphic via the transposition
/// `(v_2 u_1)`, with `K = ⌈n/6⌉ + 1`. The first chain grows `G` into `H`, the
/// second grows `G ∖ {u_1,v_1}` into `H′`. Since `f(G) = 1` and
/// `f(G ∖ {u_1,v_1}) = 0`, a graph property flips on at least one chain, and
/// the run harvests at the first flip of each. If `f(H) ≠ f(H′)` the input is
/// not a graph property and the outcome is an inconsistency.
///
/// Also harvests at `G ∖ E_1`, which is sensitive at every pair of its
/// isolated vertices.
pub fn run_case3(f: &PropertyFunction, g: &LabeledGraph) -> Result<Trace> {
    require_minimal(f, g)?;
    if positive_min_tree_size(g) != Extended::Finite(1) {
        return Err(Error::Precondition("G has no single-edge component".into()));
    }
    let n = g.n();
    let comps: Vec<(usize, usize)> = classify_components(g)
        .trees()
        .filter(|t| t.edge_count == 1)
        .map(|t| (t.vertices[0], t.vertices[1]))
        .collect();
    let w = isolated_vertices(g);
    let span = case3_span(n);
    let mut rec = Recorder::new(f, CaseId::Case3, n);
    rec.init(*g, &format!("G; {} single-edge components, r = {}", comps.len(), w.len()));
    if comps.len() < span {
        return Ok(rec.done(
            Outcome::Inapplicable,
            format!("{} single-edge components, need {span}", comps.len()),
        ));
    }
    if w.len() < 2 {
        return Ok(rec.done(Outcome::Inapplicable, format!("r = {} isolated vertices, need 2", w.len())));
    }
    let v: Vec<usize> = comps.iter().map(|c| c.0).collect();
    let u: Vec<usize> = comps.iter().map(|c| c.1).collect();
    let m = comps.len();

    // G ∖ E_1: any edge between two of its isolated vertices restores a copy of G
    let g_minus = g.without_edge(v[0], u[0])?;
    if rec.check(g_minus, "G ∖ E_1") != rec.value(g) {
        let free = isolated_vertices(&g_minus);
        let mut family = Vec::new();
        for (k, &a) in free.iter().enumerate() {
            for &b in &free[k + 1..] {
                family.push(slot(g, a, b));
            }
        }
        rec.harvest(g_minus, &[], &family, g, "G ∖ E_1: pairs of isolated vertices")?;
    }

    // chain towards H
    let mut h = *g;
    let start = rec.init(h, "chain from G to H");
    let mut flipped = false;
    let before = h;
    if rec.add(&mut h, (u[0], u[1]), "{u_1, u_2}")? != start {
        flipped = true;
        let mut family = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                for x in [v[a], u[a]] {
                    for y in [v[b], u[b]] {
                        family.push(slot(g, x, y));
                    }
                }
            }
        }
        rec.harvest(before, &[], &family, &h, "G: edges joining two single-edge components")?;
    }
    for i in 2..span {
        let before = h;
        let value = rec.add(&mut h, (v[0], v[i]), &format!("{{v_1, v_{}}}", i + 1))?;
        if !flipped && value != start {
            flipped = true;
            let family = star_family(g, v[0], &v[i..], &u[i..]);
            rec.harvest(before, &[], &family, &h, "G_(i-1): {v_1, v_j} and {v_1, u_j}, j ≥ i")?;
        }
    }
    let big_h = h;

    // chain towards H′
    let mut hp = g_minus;
    let start = rec.init(hp, "chain from G ∖ {u_1, v_1} to H′");
    let mut flipped = false;
    for i in 1..span {
        let before = hp;
        let value = rec.add(&mut hp, (v[0], v[i]), &format!("{{v_1, v_{}}}", i + 1))?;
        if !flipped && value != start {
            flipped = true;
            let family = star_family(g, v[0], &v[i..], &u[i..]);
            rec.harvest(before, &[], &family, &hp, "G′_(i-1): {v_1, v_j} and {v_1, u_j}, j ≥ i")?;
        }
    }
    let before = hp;
    let value = rec.add(&mut hp, (u[0], u[1]), "{u_1, u_2}")?;
    if !flipped && value != start {
        let mut family = Vec::new();
        for x in [u[0], w[0], w[1]] {
            for &uj in &u[1..span] {
                family.push(slot(g, x, uj));
            }
        }
        rec.harvest(before, &[], &family, &hp, "H′⁻: {x, u_j} for x in {u_1, w_1, w_2}")?;
    }
    let big_hp = hp;

    let swap = Permutation::transposition(n, v[1], u[0])?;
    if apply_permutation(&big_hp, &swap)? != big_h || !are_isomorphic(&big_h, &big_hp)? {
        return Err(Error::Precondition("H and H′ are not related by (v_2 u_1)".into()));
    }
    rec.check(big_h, "H, isomorphic to H′ via (v_2 u_1)");
    let (fh, fhp) = (rec.value(&big_h), rec.value(&big_hp));
    if fh != fhp {
        return Ok(rec.done(
            Outcome::Inconsistency,
            format!("f(H) = {} but f(H′) = {} for isomorphic H, H′", u8::from(fh), u8::from(fhp)),
        ));
    }
    if rec.trace.harvested.is_empty() {
        return Ok(rec.done(Outcome::Inapplicable, "no chain flipped"));
    }
    Ok(rec.done(Outcome::WitnessFound, ""))
}

fn star_family(g: &LabeledGraph, center: usize, vs: &[usize], us: &[usize]) -> Vec<u32> {
    vs.iter()
        .chain(us)
        .map(|&x| slot(g, center, x))
        .collect()
}
