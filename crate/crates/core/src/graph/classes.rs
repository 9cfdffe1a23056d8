use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::canon::CanonicalSignature;
use super::edges::edge_slots;
use super::labeled::{EdgePermuter, LabeledGraph, Permutation};
use crate::error::{Error, Result};
use crate::hypercube::{PropertyFunction, TruthTable};

/// Largest vertex count for full class enumeration.
pub const MAX_CLASS_VERTICES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    pub signature: CanonicalSignature,
    /// Labeled graphs in the class.
    pub size: u64,
}

impl IsoClass {
    pub fn representative(&self) -> LabeledGraph {
        self.signature.graph()
    }
}

/// Every graph on `n` vertices tagged with its class index.
#[derive(Debug)]
pub struct ClassTable {
    n: usize,
    classes: Vec<IsoClass>,
    class_of: Vec<u16>,
}

impl ClassTable {
    /// Walks graphs in increasing bitmask order; the first unvisited graph of
    /// an orbit is its minimum, and the orbit is swept through the generators
    /// `(0 1)` and `(0 1 … n-1)` of the symmetric group.
    fn build(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_CLASS_VERTICES {
            return Err(Error::VertexCountOutOfRange {
                n,
                limit: MAX_CLASS_VERTICES,
            });
        }
        let total = 1usize << edge_slots(n);
        let generators = if n >= 2 {
            vec![
                EdgePermuter::new(&Permutation::transposition(n, 0, 1)?)?,
                EdgePermuter::new(&Permutation::cycle(n))?,
            ]
        } else {
            Vec::new()
        };
        let mut class_of = vec![u16::MAX; total];
        let mut classes = Vec::new();
        let mut stack = Vec::new();
        for start in 0..total {
            if class_of[start] != u16::MAX {
                continue;
            }
            let id = classes.len() as u16;
            class_of[start] = id;
            stack.push(start as u64);
            let mut size = 0u64;
            while let Some(g) = stack.pop() {
                size += 1;
                for gen in &generators {
                    let h = gen.apply(g) as usize;
                    if class_of[h] == u16::MAX {
                        class_of[h] = id;
                        stack.push(h as u64);
                    }
                }
            }
            classes.push(IsoClass {
                signature: CanonicalSignature::from_parts(n, start as u64),
                size,
            });
        }
        Ok(Self {
            n,
            classes,
            class_of,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[IsoClass] {
        &self.classes
    }

    pub fn class_index(&self, g: &LabeledGraph) -> usize {
        usize::from(self.class_of[g.bits() as usize])
    }

    pub fn signature_of(&self, g: &LabeledGraph) -> CanonicalSignature {
        self.classes[self.class_index(g)].signature
    }

    pub fn index_of(&self, sig: &CanonicalSignature) -> Result<usize> {
        if sig.n() != self.n {
            return Err(Error::ForeignSignature {
                n: self.n,
                signature: sig.hex(),
            });
        }
        self.classes
            .binary_search_by_key(&sig.bits(), |c| c.signature.bits())
            .map_err(|_| Error::ForeignSignature {
                n: self.n,
                signature: sig.hex(),
            })
    }

    /// Truth table of the property that holds exactly on the selected classes.
    pub fn property(&self, selected: &[bool]) -> Result<PropertyFunction> {
        assert_eq!(selected.len(), self.classes.len());
        let table = TruthTable::from_fn(edge_slots(self.n), |x| {
            selected[usize::from(self.class_of[x as usize])]
        })?;
        PropertyFunction::from_table(table).with_vertices(self.n)
    }
}

/// Shared class table for `n ≤ 7`, built on first use.
pub fn class_table(n: usize) -> Result<&'static ClassTable> {
    static CACHE: [OnceLock<ClassTable>; MAX_CLASS_VERTICES + 1] =
        [const { OnceLock::new() }; MAX_CLASS_VERTICES + 1];
    if n == 0 || n > MAX_CLASS_VERTICES {
        return Err(Error::VertexCountOutOfRange {
            n,
            limit: MAX_CLASS_VERTICES,
        });
    }
    if let Some(t) = CACHE[n].get() {
        return Ok(t);
    }
    let built = ClassTable::build(n)?;
    Ok(CACHE[n].get_or_init(|| built))
}

/// All isomorphism classes on `n ≤ 7` vertices, sorted by signature.
pub fn enumerate_iso_classes(n: usize) -> Result<Vec<IsoClass>> {
    Ok(class_table(n)?.classes().to_vec())
}

/// The graph property that is 1 exactly on the listed classes.
pub fn property_from_class_set(n: usize, set: &[CanonicalSignature]) -> Result<PropertyFunction> {
    let table = class_table(n)?;
    let mut selected = vec![false; table.classes().len()];
    for sig in set {
        selected[table.index_of(sig)?] = true;
    }
    table.property(&selected)
}

/// Class-set file: `{"n": 4, "classes": ["0", "7"]}` with lowercase hex signatures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSetFile {
    pub n: usize,
    pub classes: Vec<String>,
}

impl ClassSetFile {
    pub fn new(n: usize, set: &[CanonicalSignature]) -> Self {
        let mut sigs = set.to_vec();
        sigs.sort();
        Self {
            n,
            classes: sigs.iter().map(|s| s.hex()).collect(),
        }
    }

    pub fn signatures(&self) -> Result<Vec<CanonicalSignature>> {
        self.classes
            .iter()
            .map(|h| CanonicalSignature::from_hex(self.n, h))
            .collect()
    }

    pub fn to_property(&self) -> Result<PropertyFunction> {
        property_from_class_set(self.n, &self.signatures()?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(format!("class-set JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canon::canonical_form;

    #[test]
    fn counts_up_to_five() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_iso_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn three_vertex_representatives() {
        let reps: Vec<u64> = enumerate_iso_classes(3)
            .unwrap()
            .iter()
            .map(|c| c.signature.bits())
            .collect();
        // empty, {1,2}, {1,2}{1,3}, triangle
        assert_eq!(reps, vec![0, 0b001, 0b011, 0b111]);
    }

    #[test]
    fn representatives_are_canonical_and_sizes_sum() {
        for n in 1..=6 {
            let classes = enumerate_iso_classes(n).unwrap();
            let total: u64 = classes.iter().map(|c| c.size).sum();
            assert_eq!(total, 1u64 << edge_slots(n));
            for c in &classes {
                assert_eq!(canonical_form(&c.representative()).unwrap(), c.signature);
            }
        }
    }

    #[test]
    fn table_agrees_with_canonical_form() {
        let t = class_table(5).unwrap();
        for bits in 0..1024 {
            let g = LabeledGraph::new(5, bits).unwrap();
            assert_eq!(t.signature_of(&g), canonical_form(&g).unwrap());
        }
    }

    #[test]
    fn seven_vertices() {
        assert_eq!(enumerate_iso_classes(7).unwrap().len(), 1044);
        assert!(enumerate_iso_classes(8).is_err());
    }

    #[test]
    fn triangle_class_property() {
        let tri = canonical_form(&LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap()).unwrap();
        let f = property_from_class_set(4, &[tri]).unwrap();
        assert_eq!(f.table().unwrap().count_ones(), 4);
        let none = property_from_class_set(4, &[]).unwrap();
        assert_eq!(none.table().unwrap().count_ones(), 0);
        let all: Vec<_> = enumerate_iso_classes(4).unwrap().iter().map(|c| c.signature).collect();
        assert_eq!(property_from_class_set(4, &all).unwrap().table().unwrap().count_ones(), 64);
    }

    #[test]
    fn foreign_signatures_rejected() {
        // 0b110 is {1,3}{1,4}: a path, but not the minimal relabeling
        let bad = CanonicalSignature::from_hex(4, "6").unwrap();
        assert!(matches!(property_from_class_set(4, &[bad]), Err(Error::ForeignSignature { .. })));
        let wrong_n = CanonicalSignature::from_hex(3, "1").unwrap();
        assert!(property_from_class_set(4, &[wrong_n]).is_err());
    }

    #[test]
    fn class_set_json() {
        let f = ClassSetFile::from_json(r#"{"n": 4, "classes": ["7", "0"]}"#).unwrap();
        let sigs = f.signatures().unwrap();
        assert_eq!(ClassSetFile::new(4, &sigs).to_json(), r#"{"n":4,"classes":["0","7"]}"#);
        assert!(ClassSetFile::from_json(r#"{"n": 4}"#).is_err());
        assert!(ClassSetFile::from_json(r#"{"n": 4, "classes": ["zz"]}"#).unwrap().signatures().is_err());
    }
}
