use super::pendant;
use super::recorder::{slot, Recorder};
use super::require_minimal;
use super::trace::{CaseId, Outcome, Trace};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, LabeledGraph};
use crate::hypercube::PropertyFunction;
use crate::minimal::{
    classify_components, isolated_vertices, minimal_graphs, positive_min_degree, positive_min_tree_size,
    tree_construction_sequence, Extended,
};

/// Runs the copy-growing procedure for a minimal graph `G` with a degree-one
/// vertex whose smallest tree component `T` has `c ≥ 2` edges.
///
/// A copy of `T` minus a leaf is grown on the isolated vertices `v_1 … v_c`
/// along a construction sequence of `T`, then a leaf edge of `T` is removed.
/// Stops at the first flip of `f(H)` and harvests there.
///
/// If `G` has no tree component (`c = ∞`), only the pendant-edge step runs,
/// inside this trace.
pub fn run_case2(f: &PropertyFunction, g: &LabeledGraph) -> Result<Trace> {
    require_minimal(f, g)?;
    if positive_min_degree(g) != Extended::Finite(1) {
        return Err(Error::Precondition("G has no vertex of degree 1".into()));
    }
    let c_g = positive_min_tree_size(g);
    if c_g == Extended::Finite(1) {
        return Err(Error::Precondition("G has a single-edge component".into()));
    }
    if f.is_table() && f.vertices().is_some() {
        let set = minimal_graphs(f)?;
        if set.min_tree_size != c_g {
            return Err(Error::Precondition(format!(
                "smallest tree size of G is {c_g} but {} over the minimal graphs",
                set.min_tree_size
            )));
        }
    }
    let n = g.n();
    let mut rec = Recorder::new(f, CaseId::Case2, n);

    let Extended::Finite(c) = c_g else {
        let v = (0..n).find(|&x| g.degree(x) == 1).expect("δ′(G) = 1");
        let u = g.adjacency()[v].trailing_zeros() as usize;
        pendant::run(&mut rec, g, v, u)?;
        return Ok(if rec.trace.harvested.is_empty() {
            let h = g.without_edge(v, u)?;
            rec.inconsistent(&h, g, "no tree component; pendant edge of a minimal graph is removable")
        } else {
            rec.done(
                Outcome::WitnessFound,
                "no tree component; ran the pendant-edge step instead of growing a copy",
            )
        });
    };
    let c = c as usize;

    let iso = isolated_vertices(g);
    if iso.len() < c {
        rec.init(*g, "G");
        return Ok(rec.done(Outcome::Inapplicable, "insufficient isolated vertices"));
    }

    let report = classify_components(g);
    let component = report
        .trees()
        .find(|t| t.edge_count as usize == c)
        .expect("a tree of size c(G) exists");
    let tree = g.with_bits(component.edges);
    let seq = tree_construction_sequence(&tree)?;

    let mut h = *g;
    rec.init(h, &format!("G; c = {c}, m = {}", iso.len()));
    let mut copy = g.with_bits(0);

    for i in 1..c {
        if let Some(e) = rec.removable_edge(g, &h) {
            let (a, b) = g.indexer().pair(e)?;
            rec.remove(&mut h, (a, b), "an edge of G is not sensitive at H")?;
            return Ok(rec.inconsistent(&h, g, "removable edge of G found"));
        }
        // attach v_{i+1} to some v_j, j ≤ i, so the copy matches T^(i)
        let new = iso[i];
        let mut attach = None;
        for &vj in &iso[..i] {
            if are_isomorphic(&copy.with_edge(vj, new)?, &seq.trees[i - 1])? {
                attach = Some(vj);
                break;
            }
        }
        let vj = attach.ok_or_else(|| Error::Precondition("no attachment realizes the next tree".into()))?;
        copy = copy.with_edge(vj, new)?;
        let before = h;
        let guard: Vec<u32> = g.with_bits(g.bits() & before.bits()).slots().collect();
        if rec.add(&mut h, (vj, new), &format!("grow the copy to T({i})"))? {
            continue;
        }
        let family: Vec<u32> = iso[i..].iter().map(|&vl| slot(g, vj, vl)).collect();
        rec.harvest(before, &guard, &family, &h, "H⁻: edges of G and {v_j, v_l}, l > i")?;
        return Ok(rec.done(Outcome::WitnessFound, "f(H) flipped while growing the copy"));
    }

    // remove a leaf edge {u, v} of T, u the leaf, leaving a copy of T^(c-1)
    let target = seq.trees[c - 2];
    let mut leaf_edge = None;
    for e in tree.slots() {
        let (a, b) = g.indexer().pair(e)?;
        for (leaf, anchor) in [(a, b), (b, a)] {
            if tree.degree(leaf) == 1 && are_isomorphic(&tree.without_edge(a, b)?, &target)? {
                leaf_edge = Some((leaf, anchor));
                break;
            }
        }
        if leaf_edge.is_some() {
            break;
        }
    }
    let (u, v) = leaf_edge.expect("T minus some leaf matches T^(c-1)");
    let before = h;
    if rec.remove(&mut h, (u, v), "remove a leaf edge {u, v} of T")? {
        return Ok(rec.inconsistent(&h, g, "f(H) stayed 1 after removing the leaf edge"));
    }
    let free = isolated_vertices(&h);
    let mut family: Vec<u32> = free.iter().map(|&w| slot(g, v, w)).collect();
    // the matching vertex of the grown copy
    let copy_vertices = &iso[..c];
    if let Some(&w0) = free.first() {
        for &vj in copy_vertices {
            if are_isomorphic(&h.with_edge(vj, w0)?, &before)? {
                family.extend(free.iter().map(|&w| slot(g, vj, w)));
                break;
            }
        }
    }
    rec.harvest(h, &[slot(g, u, v)], &family, &before, "H: {v, w} and {v_j, w} for isolated w")?;
    Ok(rec.done(Outcome::WitnessFound, "f(H) flipped when removing the leaf edge"))
}
