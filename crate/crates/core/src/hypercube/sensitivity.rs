use serde::{Deserialize, Serialize};

use super::function::PropertyFunction;
use super::point::BooleanPoint;
use super::table::{valid_mask, TruthTable};
use crate::error::{Error, Result};

/// Sensitivity value with the point attaining it and its sensitive coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SensitivityResult {
    pub value: u32,
    pub witness: BooleanPoint,
    pub sensitive_coordinates: Vec<u32>,
}

impl Serialize for BooleanPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BooleanPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Coordinates `i` where `f(x ⊕ e_i) ≠ f(x)`, ascending.
pub fn sensitive_coordinates(f: &PropertyFunction, x: &BooleanPoint) -> Result<Vec<u32>> {
    f.check_arity(x)?;
    let here = f.value(x.bits());
    Ok((0..f.arity())
        .filter(|&i| f.value(x.bits() ^ (1u64 << i)) != here)
        .collect())
}

pub fn sensitivity_at(f: &PropertyFunction, x: &BooleanPoint) -> Result<SensitivityResult> {
    let coords = sensitive_coordinates(f, x)?;
    Ok(SensitivityResult {
        value: coords.len() as u32,
        witness: *x,
        sensitive_coordinates: coords,
    })
}

/// Exact `s(f)` by a full scan of the truth table. The witness is the
/// smallest point attaining the maximum.
pub fn max_sensitivity(f: &PropertyFunction) -> Result<SensitivityResult> {
    let table = match f.table() {
        Some(t) => t,
        None => return Err(Error::CandidatesRequired),
    };
    let (value, idx) = scan_max(table);
    let witness = BooleanPoint::new(f.arity(), idx)?;
    let result = sensitivity_at(f, &witness)?;
    debug_assert_eq!(result.value, value);
    Ok(result)
}

/// Maximum sensitivity over an explicit candidate set (any backing).
pub fn max_sensitivity_over<'a>(
    f: &PropertyFunction,
    candidates: impl IntoIterator<Item = &'a BooleanPoint>,
) -> Result<SensitivityResult> {
    let mut best: Option<SensitivityResult> = None;
    for x in candidates {
        let r = sensitivity_at(f, x)?;
        if best.as_ref().is_none_or(|b| r.value > b.value) {
            best = Some(r);
        }
    }
    best.ok_or(Error::CandidatesRequired)
}

/// Per-word bit-sliced counter scan. Returns `(max, first attaining point)`.
fn word_max(table: &TruthTable, w: usize) -> (u32, u64) {
    // five planes hold counts up to 31, enough for arity 28
    let mut planes = [0u64; 5];
    for coord in 0..table.arity() {
        let mut carry = table.neighbor_diff(w, coord);
        for plane in planes.iter_mut() {
            if carry == 0 {
                break;
            }
            let next = *plane & carry;
            *plane ^= carry;
            carry = next;
        }
    }
    let mut candidates = valid_mask(table.arity());
    let mut max = 0u32;
    for p in (0..planes.len()).rev() {
        let hit = candidates & planes[p];
        if hit != 0 {
            candidates = hit;
            max |= 1 << p;
        }
    }
    (max, ((w as u64) << 6) + u64::from(candidates.trailing_zeros()))
}

fn better(a: (u32, u64), b: (u32, u64)) -> (u32, u64) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

#[cfg(feature = "parallel")]
fn scan_max(table: &TruthTable) -> (u32, u64) {
    use rayon::prelude::*;
    let words = table.words().len();
    if words < 1024 {
        return (0..words).map(|w| word_max(table, w)).fold((0, u64::MAX), better);
    }
    (0..words)
        .into_par_iter()
        .map(|w| word_max(table, w))
        .reduce(|| (0, u64::MAX), better)
}

#[cfg(not(feature = "parallel"))]
fn scan_max(table: &TruthTable) -> (u32, u64) {
    (0..table.words().len())
        .map(|w| word_max(table, w))
        .fold((0, u64::MAX), better)
}

/// `s(f,x)` for every point, indexed by point. Table mode only.
pub fn sensitivity_profile(f: &PropertyFunction) -> Result<Vec<u8>> {
    let table = f.table().ok_or(Error::RequiresTable)?;
    let mut out = vec![0u8; table.len() as usize];
    for coord in 0..table.arity() {
        for w in 0..table.words().len() {
            let d = table.neighbor_diff(w, coord) & valid_mask(table.arity());
            for b in super::table::BitIter(d) {
                out[(w << 6) + b as usize] += 1;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn and(m: u32) -> PropertyFunction {
        let all = (1u64 << m) - 1;
        PropertyFunction::tabulate(m, move |x| x == all).unwrap()
    }

    fn or(m: u32) -> PropertyFunction {
        PropertyFunction::tabulate(m, |x| x != 0).unwrap()
    }

    fn naive_max(f: &PropertyFunction) -> u32 {
        (0..1u64 << f.arity())
            .map(|x| {
                (0..f.arity())
                    .filter(|&i| f.value(x) != f.value(x ^ (1 << i)))
                    .count() as u32
            })
            .max()
            .unwrap()
    }

    #[test]
    fn point_examples() {
        let r = sensitivity_at(&or(3), &"000".parse().unwrap()).unwrap();
        assert_eq!(r.value, 3);
        let r = sensitivity_at(&and(4), &"0111".parse().unwrap()).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.sensitive_coordinates, vec![3]);
        let parity = PropertyFunction::tabulate(6, |x| x.count_ones() % 2 == 1).unwrap();
        for x in 0..64 {
            let p = BooleanPoint::new(6, x).unwrap();
            assert_eq!(sensitivity_at(&parity, &p).unwrap().value, 6);
        }
    }

    #[test]
    fn and_maximum_at_all_ones() {
        for m in 2..=10 {
            let r = max_sensitivity(&and(m)).unwrap();
            assert_eq!(r.value, m);
            assert_eq!(r.witness, BooleanPoint::ones(m));
        }
    }

    #[test]
    fn scan_matches_naive_on_random_functions() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for m in [0u32, 1, 2, 5, 6, 7, 9, 11] {
            for _ in 0..20 {
                let density: f64 = rng.gen();
                let table: Vec<bool> = (0..1u64 << m).map(|_| rng.gen_bool(density)).collect();
                let f = PropertyFunction::tabulate(m, |x| table[x as usize]).unwrap();
                let r = max_sensitivity(&f).unwrap();
                assert_eq!(r.value, naive_max(&f));
                assert_eq!(r.value as usize, r.sensitive_coordinates.len());
            }
        }
    }

    #[test]
    fn oracle_mode_requires_candidates() {
        let f = PropertyFunction::oracle(4, |x| x != 0).unwrap();
        assert_eq!(max_sensitivity(&f), Err(Error::CandidatesRequired));
        let pts: Vec<BooleanPoint> = (0..16).map(|x| BooleanPoint::new(4, x).unwrap()).collect();
        assert_eq!(max_sensitivity_over(&f, &pts).unwrap().value, 4);
    }

    #[test]
    fn profile_agrees_with_point_queries() {
        let f = PropertyFunction::tabulate(8, |x| (x * 37) % 11 < 4).unwrap();
        let prof = sensitivity_profile(&f).unwrap();
        for x in 0..256u64 {
            let p = BooleanPoint::new(8, x).unwrap();
            assert_eq!(u32::from(prof[x as usize]), sensitivity_at(&f, &p).unwrap().value);
        }
    }
}
