use super::edges::edge_slots;
use super::labeled::{EdgePermuter, Permutation};
use crate::error::{Error, Result};
use crate::hypercube::PropertyFunction;

fn vertex_count(f: &PropertyFunction) -> Result<usize> {
    if let Some(n) = f.vertices() {
        return Ok(n);
    }
    (1..=super::edges::MAX_VERTICES)
        .find(|&n| edge_slots(n) == f.arity())
        .ok_or(Error::NotAGraphFunction)
}

/// True iff `f` is invariant under every vertex relabeling. Checks the two
/// generators `(0 1)` and `(0 1 … n-1)` of the symmetric group.
pub fn is_graph_property(f: &PropertyFunction) -> Result<bool> {
    let table = f.table().ok_or(Error::RequiresTable)?;
    let n = vertex_count(f)?;
    if n < 3 {
        // S_1 and S_2 act trivially on edge slots
        return Ok(true);
    }
    let generators = [
        EdgePermuter::new(&Permutation::transposition(n, 0, 1)?)?,
        EdgePermuter::new(&Permutation::cycle(n))?,
    ];
    Ok((0..table.len()).all(|x| {
        let here = table.get(x);
        generators.iter().all(|g| table.get(g.apply(x)) == here)
    }))
}

/// True iff adding an edge never turns `f` from 1 to 0.
pub fn is_monotone(f: &PropertyFunction) -> Result<bool> {
    let table = f.table().ok_or(Error::RequiresTable)?;
    for coord in 0..table.arity() {
        for w in 0..table.words().len() {
            if table.monotonicity_violations(w, coord) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classes::{enumerate_iso_classes, property_from_class_set};
    use crate::graph::labeled::LabeledGraph;
    use crate::hypercube::PropertyFunction;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn graph_fn(n: usize, pred: impl Fn(&LabeledGraph) -> bool) -> PropertyFunction {
        PropertyFunction::tabulate(edge_slots(n), |x| pred(&LabeledGraph::new(n, x).unwrap()))
            .unwrap()
            .with_vertices(n)
            .unwrap()
    }

    #[test]
    fn examples() {
        let parity = graph_fn(4, |g| g.edge_count() % 2 == 1);
        assert!(is_graph_property(&parity).unwrap());
        assert!(!is_monotone(&parity).unwrap());

        let single = graph_fn(4, |g| g.bits() == 1);
        assert!(!is_graph_property(&single).unwrap());

        let has_edge = graph_fn(5, |g| !g.is_empty());
        assert!(is_monotone(&has_edge).unwrap());

        let isolated = graph_fn(5, |g| g.degrees().contains(&0));
        assert!(is_graph_property(&isolated).unwrap());
        assert!(!is_monotone(&isolated).unwrap());
    }

    #[test]
    fn class_built_functions_are_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let classes = enumerate_iso_classes(5).unwrap();
        for _ in 0..20 {
            let set: Vec<_> = classes.iter().filter(|_| rng.gen()).map(|c| c.signature).collect();
            assert!(is_graph_property(&property_from_class_set(5, &set).unwrap()).unwrap());
        }
    }

    #[test]
    fn generator_check_equals_class_grouping() {
        // a function is a graph property iff it is constant on every class
        let table = crate::graph::classes::class_table(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for trial in 0..300 {
            let bits: u64 = if trial % 3 == 0 {
                // perturb a class-built function at one point
                let set: Vec<bool> = (0..11).map(|_| rng.gen()).collect();
                let f = table.property(&set).unwrap();
                f.table().unwrap().words()[0] ^ (1u64 << rng.gen_range(0..64))
            } else if trial % 3 == 1 {
                let set: Vec<bool> = (0..11).map(|_| rng.gen()).collect();
                table.property(&set).unwrap().table().unwrap().words()[0]
            } else {
                rng.gen()
            };
            let f = PropertyFunction::tabulate(6, |x| (bits >> x) & 1 == 1)
                .unwrap()
                .with_vertices(4)
                .unwrap();
            let mut class_value = [None; 11];
            let mut constant = true;
            for x in 0..64u64 {
                let c = table.class_index(&LabeledGraph::new(4, x).unwrap());
                let v = (bits >> x) & 1 == 1;
                match class_value[c] {
                    None => class_value[c] = Some(v),
                    Some(prev) if prev != v => constant = false,
                    _ => {}
                }
            }
            assert_eq!(is_graph_property(&f).unwrap(), constant);
        }
    }

    #[test]
    fn oracle_mode_rejected() {
        let f = PropertyFunction::oracle(6, |x| x == 0).unwrap();
        assert_eq!(is_graph_property(&f), Err(Error::RequiresTable));
        assert_eq!(is_monotone(&f), Err(Error::RequiresTable));
    }
}
