use super::recorder::{slot, Recorder};
use super::trace::{CaseId, Outcome, Trace};
use super::require_minimal;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::hypercube::PropertyFunction;
use crate::minimal::{isolated_vertices, minimal_graphs, positive_min_degree, Extended};

/// Runs the edge-growing procedure for a minimal graph `G` whose positive
/// minimum degree `k` is at least 2 and equals that of the property.
///
/// With `v` of degree `k` and `N(v) = {u, u_1 … u_{k-1}}`, each `u_i` is joined
/// to every isolated vertex of `G` in turn, and finally `{v, u}` is removed.
/// For a graph property `f(H)` must flip to 0 somewhere along the way; the
/// run stops at the first flip and harvests the points the counting argument
/// names.
pub fn run_case1(f: &PropertyFunction, g: &LabeledGraph) -> Result<Trace> {
    require_minimal(f, g)?;
    let k = match positive_min_degree(g) {
        Extended::Finite(k) if k >= 2 => k,
        other => {
            return Err(Error::Precondition(format!(
                "positive minimum degree of G is {other}, need at least 2"
            )))
        }
    };
    if f.is_table() && f.vertices().is_some() {
        let set = minimal_graphs(f)?;
        if set.min_positive_degree != Extended::Finite(k) {
            return Err(Error::Precondition(format!(
                "positive minimum degree of G is {k} but {} over the minimal graphs",
                set.min_positive_degree
            )));
        }
    }

    let n = g.n();
    let adj = g.adjacency();
    let v = (0..n).find(|&x| g.degree(x) == k).expect("degree k is attained");
    let nbrs: Vec<usize> = (0..n).filter(|&x| (adj[v] >> x) & 1 == 1).collect();
    let (u, us) = (nbrs[0], &nbrs[1..]);
    let iso = isolated_vertices(g);
    let m = iso.len();

    let mut rec = Recorder::new(f, CaseId::Case1, n);
    let mut h = *g;
    rec.init(h, &format!("G; v = {}, u = {}, k = {k}, m = {m}", v + 1, u + 1));

    for &ui in us {
        for j in 0..m {
            if let Some(e) = rec.removable_edge(g, &h) {
                let (a, b) = g.indexer().pair(e)?;
                rec.remove(&mut h, (a, b), "an edge of G is not sensitive at H")?;
                return Ok(rec.inconsistent(&h, g, "removable edge of G found"));
            }
            let before = h;
            let guard: Vec<u32> = g.with_bits(g.bits() & before.bits()).slots().collect();
            if rec.add(&mut h, (ui, iso[j]), "")? {
                continue;
            }
            let later: Vec<u32> = iso[j..].iter().map(|&vl| slot(g, ui, vl)).collect();
            rec.harvest(before, &guard, &later, &h, "H⁻: edges of G and {u_i, v_l}, l ≥ j")?;
            let earlier: Vec<u32> = iso[..=j].iter().map(|&vl| slot(g, ui, vl)).collect();
            rec.harvest(h, &[], &earlier, &before, "H: {u_i, v_l}, l ≤ j")?;
            return Ok(rec.done(Outcome::WitnessFound, "f(H) flipped while adding an edge"));
        }
    }

    let before = h;
    if rec.remove(&mut h, (v, u), "remove {v, u}")? {
        return Ok(rec.inconsistent(&h, g, "f(H) stayed 1 after removing {v, u}"));
    }
    let family: Vec<u32> = iso.iter().map(|&vi| slot(g, vi, u)).collect();
    rec.harvest(h, &[slot(g, v, u)], &family, &before, "H: {v, u} and {v_i, u}")?;
    Ok(rec.done(Outcome::WitnessFound, "f(H) flipped when removing {v, u}"))
}
