//! Explicit minimum-cost broadcasts for paths, cycles and sunlets.
//!
//! Every builder here works in 1-based labels `P_1..P_n` internally because
//! that is how the placements are stated; the returned assignment is 0-based
//! like everything else in the crate.

use crate::broadcast::BroadcastAssignment;
use crate::error::{Error, Result};
use crate::families::FamilySpec;

fn from_labels(pairs: impl IntoIterator<Item = (usize, u32)>) -> BroadcastAssignment {
    BroadcastAssignment::from_labels(pairs).expect("constructions emit valid labels")
}

/// The standard pattern on `P_n`, cost `⌈n/3⌉`.
///
/// Placement by `n mod 3`:
///
/// * `n = 1, 2`: `P_1` at strength 1.
/// * `n = 3k`: `P_2, P_5, …, P_{3k-1}` at strength 1.
/// * `n = 3k+1`: `P_1, P_3, P_6, …, P_{3k}` at strength 1.
/// * `n = 3k+2`: `P_3` at strength 2, then `P_7, P_10, …, P_{3k+1}` at
///   strength 1. `P_3` (rather than `P_2`) is what makes the first five
///   vertices covered.
///
/// ```
/// use broadcast_domination::constructions::construct_path_standard;
///
/// let f = construct_path_standard(8).unwrap();
/// assert_eq!(f.to_string(), "{3:2, 7:1}");
/// ```
pub fn construct_path_standard(n: usize) -> Result<BroadcastAssignment> {
    if n < 1 {
        return Err(Error::parameter("n", n as i64, ">= 1"));
    }
    let k = n / 3;
    let f = match (n, n % 3) {
        (1 | 2, _) => from_labels([(1, 1)]),
        (_, 0) => from_labels((1..=k).map(|i| (3 * i - 1, 1))),
        (_, 1) => from_labels(std::iter::once((1, 1)).chain((1..=k).map(|i| (3 * i, 1)))),
        _ => from_labels(std::iter::once((3, 2)).chain((2..=k).map(|i| (3 * i + 1, 1)))),
    };
    Ok(f)
}

/// Optimal broadcast on `C_n`, cost `⌈n/3⌉`.
///
/// `P_3, P_6, …, P_{3k}` at strength 1, plus `P_1` when `n` is not a
/// multiple of 3.
pub fn construct_cycle(n: usize) -> Result<BroadcastAssignment> {
    if n < 3 {
        return Err(Error::parameter("n", n as i64, ">= 3"));
    }
    let k = n / 3;
    let mut pairs: Vec<(usize, u32)> = (1..=k).map(|i| (3 * i, 1)).collect();
    if !n.is_multiple_of(3) {
        pairs.push((1, 1));
    }
    Ok(from_labels(pairs))
}

/// A single broadcast on base vertex `P_1` of `S_m^n` with strength
/// `⌊m/2⌋ + n`, which is that vertex's eccentricity.
pub fn construct_sunlet_deg(m: usize, n: usize) -> Result<BroadcastAssignment> {
    FamilySpec::SunletDeg { m, n }.validate()?;
    let strength = u32::try_from(m / 2 + n)
        .map_err(|_| Error::parameter("n", n as i64, "small enough for a u32 strength"))?;
    Ok(from_labels([(1, strength)]))
}

/// `S_n` is `S_n^1`.
pub fn construct_sunlet(n: usize) -> Result<BroadcastAssignment> {
    FamilySpec::Sunlet { n }.validate()?;
    construct_sunlet_deg(n, 1)
}

/// The construction for `spec`, or `None` for generalized sunlets, which
/// have no known closed form.
pub fn construct(spec: &FamilySpec) -> Result<Option<BroadcastAssignment>> {
    let f = match spec {
        FamilySpec::Path { n } => construct_path_standard(*n)?,
        FamilySpec::Cycle { n } => construct_cycle(*n)?,
        FamilySpec::Sunlet { n } => construct_sunlet(*n)?,
        FamilySpec::SunletDeg { m, n } => construct_sunlet_deg(*m, *n)?,
        FamilySpec::GeneralizedSunlet { .. } => {
            spec.validate()?;
            return Ok(None);
        }
    };
    Ok(Some(f))
}

/// How far a broadcast on `P_n` reaches past each end, if the path were
/// extended to an infinite path with phantom vertices. Returns
/// `(left, right)` in phantom vertices.
pub fn path_overspill(n: usize, f: &BroadcastAssignment) -> (u32, u32) {
    f.iter().fold((0, 0), |(left, right), (v, s)| {
        let to_left_end = v as i64;
        let to_right_end = (n - 1 - v) as i64;
        let l = (i64::from(s) - to_left_end).max(0) as u32;
        let r = (i64::from(s) - to_right_end).max(0) as u32;
        (left.max(l), right.max(r))
    })
}
