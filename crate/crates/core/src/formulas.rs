//! Closed forms for `γ_b` and the radius, and a harness that checks them
//! against the constructions and the exact solver.

use std::fmt;

use serde::Serialize;

use crate::broadcast::coverage;
use crate::constructions::construct;
use crate::error::{Error, Result};
use crate::families::{generate, FamilyKind, FamilySpec};
use crate::metrics::metrics;
use crate::solver::{solve_exact, SolveOptions};

/// Largest instance `verify_family` will hand to the exact solver.
pub const MAX_VERIFY_VERTICES: usize = 40;
/// Largest number of instances in one `verify_family` call.
pub const MAX_VERIFY_ROWS: usize = 10_000;

/// A closed-form value, or the marker for families without one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Formula {
    Exact(u32),
    NoFormula,
}

impl Formula {
    pub fn value(self) -> Option<u32> {
        match self {
            Formula::Exact(v) => Some(v),
            Formula::NoFormula => None,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Exact(v) => write!(f, "{v}"),
            Formula::NoFormula => f.write_str("-"),
        }
    }
}

fn exact(v: usize) -> Formula {
    Formula::Exact(u32::try_from(v).expect("formula value fits in u32"))
}

/// Broadcast domination number by closed form.
///
/// | family | `γ_b` |
/// |---|---|
/// | `P_n`, `C_n` | `⌈n/3⌉` |
/// | `S_n` | `⌈(n+1)/2⌉` |
/// | `S_m^n` | `n + ⌊m/2⌋` |
/// | generalized sunlet | none known |
///
/// ```
/// use broadcast_domination::families::FamilySpec;
/// use broadcast_domination::formulas::{gamma_b_formula, Formula};
///
/// assert_eq!(gamma_b_formula(&FamilySpec::Cycle { n: 7 }).unwrap(), Formula::Exact(3));
/// assert_eq!(gamma_b_formula(&FamilySpec::SunletDeg { m: 3, n: 4 }).unwrap(), Formula::Exact(5));
/// ```
pub fn gamma_b_formula(spec: &FamilySpec) -> Result<Formula> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Path { n } | FamilySpec::Cycle { n } => exact(n.div_ceil(3)),
        FamilySpec::Sunlet { n } => exact((n + 1).div_ceil(2)),
        FamilySpec::SunletDeg { m, n } => exact(n + m / 2),
        FamilySpec::GeneralizedSunlet { .. } => Formula::NoFormula,
    })
}

/// Radius of `S_m^n` (and `S_n = S_n^1`): `⌊m/2⌋ + n`. Other families get
/// `NoFormula`; use [`crate::metrics::metrics`] for those.
pub fn radius_formula(spec: &FamilySpec) -> Result<Formula> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Sunlet { n } => exact(n / 2 + 1),
        FamilySpec::SunletDeg { m, n } => exact(m / 2 + n),
        _ => Formula::NoFormula,
    })
}

/// Parameter ranges for [`verify_family`], inclusive on both ends.
///
/// `n` is the path/cycle/sunlet size, the branch length of `S_m^n`, or the
/// range every branch length of a generalized sunlet is drawn from. `m` is
/// the cycle size for the two branched families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRanges {
    pub n: (usize, usize),
    pub m: (usize, usize),
}

impl VerifyRanges {
    pub fn n(min: usize, max: usize) -> Self {
        VerifyRanges {
            n: (min, max),
            m: (3, 3),
        }
    }

    pub fn mn(m: (usize, usize), n: (usize, usize)) -> Self {
        VerifyRanges { n, m }
    }
}

/// One instance of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRow {
    pub spec: FamilySpec,
    pub formula_value: Option<u32>,
    pub construction_cost: Option<u64>,
    pub construction_dominating: Option<bool>,
    pub solver_value: u32,
    pub radius: u32,
    /// Formula, construction cost and solver agree and the construction
    /// dominates. Rows without a formula only check `solver_value <= radius`.
    pub all_match: bool,
}

/// Enumerates the instances of `kind` within `ranges`.
pub fn instances(kind: FamilyKind, ranges: &VerifyRanges) -> Result<Vec<FamilySpec>> {
    let check = |name: &str, (lo, hi): (usize, usize)| {
        if lo > hi {
            Err(Error::InvalidRange(format!(
                "{name} range {lo}..={hi} is empty"
            )))
        } else {
            Ok(lo..=hi)
        }
    };
    let ns = check("n", ranges.n)?;
    let specs: Vec<FamilySpec> = match kind {
        FamilyKind::Path => ns.map(|n| FamilySpec::Path { n }).collect(),
        FamilyKind::Cycle => ns.map(|n| FamilySpec::Cycle { n }).collect(),
        FamilyKind::Sunlet => ns.map(|n| FamilySpec::Sunlet { n }).collect(),
        FamilyKind::SunletDeg => {
            let ms = check("m", ranges.m)?;
            ms.flat_map(|m| ns.clone().map(move |n| FamilySpec::SunletDeg { m, n }))
                .collect()
        }
        FamilyKind::GeneralizedSunlet => {
            let ms = check("m", ranges.m)?;
            let mut specs = Vec::new();
            for m in ms {
                let width = ranges.n.1 - ranges.n.0 + 1;
                let count = (width as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
                if count + specs.len() as u128 > MAX_VERIFY_ROWS as u128 {
                    return Err(too_many_rows());
                }
                let mut lengths = vec![ranges.n.0; m];
                loop {
                    specs.push(FamilySpec::GeneralizedSunlet {
                        m,
                        lengths: lengths.clone(),
                    });
                    // Odometer step, last position fastest.
                    let Some(pos) = (0..m).rev().find(|&i| lengths[i] < ranges.n.1) else {
                        break;
                    };
                    lengths[pos] += 1;
                    for l in &mut lengths[pos + 1..] {
                        *l = ranges.n.0;
                    }
                }
            }
            specs
        }
    };
    if specs.len() > MAX_VERIFY_ROWS {
        return Err(too_many_rows());
    }
    for spec in &specs {
        spec.validate()?;
        if spec.vertex_count() > MAX_VERIFY_VERTICES {
            return Err(Error::InvalidRange(format!(
                "{spec} has {} vertices; exact verification is limited to {MAX_VERIFY_VERTICES}",
                spec.vertex_count()
            )));
        }
    }
    Ok(specs)
}

fn too_many_rows() -> Error {
    Error::InvalidRange(format!("more than {MAX_VERIFY_ROWS} instances requested"))
}

/// Checks one instance: closed form, construction and exact solver.
pub fn verify_instance(spec: &FamilySpec, opts: &SolveOptions) -> Result<VerificationRow> {
    let g = generate(spec)?;
    let formula_value = gamma_b_formula(spec)?.value();
    let construction = construct(spec)?;
    let construction_dominating = match &construction {
        Some(f) => Some(coverage(&g, f)?.is_dominating),
        None => None,
    };
    let construction_cost = construction.as_ref().map(|f| f.cost());
    let solver_value = solve_exact(&g, opts)?.gamma_b;
    let radius = metrics(&g)?.radius;
    let all_match = match (formula_value, construction_cost, construction_dominating) {
        (Some(formula), Some(cost), Some(dominating)) => {
            dominating && formula == solver_value && cost == u64::from(solver_value)
        }
        _ => solver_value <= radius.max(1),
    };
    Ok(VerificationRow {
        spec: spec.clone(),
        formula_value,
        construction_cost,
        construction_dominating,
        solver_value,
        radius,
        all_match,
    })
}

/// Runs [`verify_instance`] over every instance of `kind` in `ranges`.
///
/// ```
/// use broadcast_domination::families::FamilyKind;
/// use broadcast_domination::formulas::{verify_family, VerifyRanges};
/// use broadcast_domination::solver::SolveOptions;
///
/// let rows = verify_family(FamilyKind::Cycle, &VerifyRanges::n(3, 8), &SolveOptions::default()).unwrap();
/// assert_eq!(rows.len(), 6);
/// assert!(rows.iter().all(|row| row.all_match));
/// ```
pub fn verify_family(
    kind: FamilyKind,
    ranges: &VerifyRanges,
    opts: &SolveOptions,
) -> Result<Vec<VerificationRow>> {
    instances(kind, ranges)?
        .iter()
        .map(|spec| verify_instance(spec, opts))
        .collect()
}
