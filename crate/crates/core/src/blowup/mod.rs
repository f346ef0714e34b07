//! Equivariant blowups as rewriting rules on fixed-locus data and the atom
//! ledger, plus seeded random blowup sequences that watch the invariants.

mod centers;
mod fuzz;
mod rules;

pub use centers::admissible_centers;
pub use fuzz::{fuzz_sequence, Drift, FuzzOptions, FuzzReport, StepRecord};
pub use rules::{blowup, blowup_with};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fixed_locus::Configuration;
use crate::invariants::{InvariantError, InvariantKind, InvariantValue};
use crate::symbol_groups::SymbolError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlowupError {
    #[error("inadmissible center: {0}")]
    Inadmissible(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("no admissible centers")]
    NoCenters,
    #[error("check {kind} does not apply: {reason}")]
    CheckNotApplicable { kind: String, reason: String },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

/// Where an invariant non-fixed curve meets the fixed locus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "at", rename_all = "snake_case")]
pub enum Incidence {
    /// Through an isolated point, with tangent weight `tangent`.
    Point { point: usize, tangent: i64 },
    /// Transverse to a fixed curve, along its normal weight `tangent`.
    Curve { curve: usize, tangent: i64 },
    /// Transverse to a fixed surface.
    Surface { surface: usize },
}

/// A smooth invariant center, described by the data the rules consume.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlowupCenter {
    /// `p` points permuted freely.
    FreeOrbitPoint,
    /// `p` curves of the given genus permuted freely.
    FreeOrbitCurve {
        genus: u32,
    },
    IsolatedFixedPoint {
        point: usize,
    },
    /// Invariant curve with a nontrivial action, meeting the fixed locus
    /// transversally at the listed places.
    #[serde(rename = "invariant_curve_nonfixed")]
    InvariantCurve {
        genus: u32,
        #[serde(default)]
        incidences: Vec<Incidence>,
    },
    PointOnFixedCurve {
        curve: usize,
    },
    /// `split` is the degree of the normal line with weight `weights[0]`;
    /// ignored when the weights agree. Defaults to `floor(d/2)`.
    FixedCurve {
        curve: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        split: Option<i64>,
    },
    /// Rational invariant curve meeting a fixed curve once, transversally.
    CurveTransverseToFixedCurve {
        curve: usize,
        tangent: i64,
    },
    PointOnFixedSurface {
        surface: usize,
    },
    /// Rational invariant curve meeting a fixed surface `count` times.
    CurveTransverseToFixedSurface {
        surface: usize,
        count: u32,
    },
    /// Curve of genus `genus` inside a fixed surface, with self-intersection
    /// on the surface and degree of the surface's normal bundle along it.
    CurveInFixedSurface {
        surface: usize,
        genus: u32,
        self_intersection: i64,
        normal_degree: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
}

macro_rules! case_labels {
    ($($variant:ident => ($id:literal, $text:literal)),* $(,)?) => {
        /// The rule applied by a blowup.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CaseLabel {
            $($variant),*
        }

        impl CaseLabel {
            pub const ALL: &'static [CaseLabel] = &[$(CaseLabel::$variant),*];

            /// Short ASCII identifier.
            pub fn id(self) -> &'static str {
                match self {
                    $(CaseLabel::$variant => $id),*
                }
            }

            pub fn text(self) -> &'static str {
                match self {
                    $(CaseLabel::$variant => $text),*
                }
            }
        }
    };
}

case_labels! {
    FreeOrbitPoints => ("bl0a", "Bl0-a, free orbit of points"),
    PointDistinct => ("bl0b-distinct", "Bl0-b, a≠b≠c"),
    PointTwoEqual => ("bl0b-two-equal", "Bl0-b, a=b≠c"),
    PointAllEqual => ("bl0b-all-equal", "Bl0-b, a=b=c"),
    FreeOrbitRationalCurve => ("bl3a-g0", "Bl3-a, g=0"),
    FreeOrbitCurve => ("bl3a-g1", "Bl3-a, g≥1"),
    InvariantRationalCurve => ("bl3b-g0", "Bl3-b, g=0"),
    InvariantCurve => ("bl3b-g1", "Bl3-b, g≥1"),
    PointOnCurveDistinct => ("point-on-curve-distinct", "fixed point on a fixed curve, a≠b"),
    PointOnCurveEqual => ("point-on-curve-equal", "fixed point on a fixed curve, a=b"),
    RationalCurveDistinct => ("bl1-0-distinct", "Bl1-0, a≠b"),
    RationalCurveEqual => ("bl1-0-equal", "Bl1-0, a=b"),
    CurveDistinct => ("bl1-1-distinct", "Bl1-1, a≠b"),
    CurveEqual => ("bl1-1-equal", "Bl1-1, a=b"),
    CurveMeetsFixedCurve => ("curve-meets-curve", "invariant curve meeting a fixed curve"),
    PointOnSurface => ("point-on-surface", "fixed point on a fixed surface"),
    CurveMeetsSurface => ("curve-meets-surface", "invariant curve meeting a fixed surface"),
    RationalCurveInSurface => ("bl2-0", "Bl2-0"),
    CurveInSurface => ("bl2-1", "Bl2-1"),
    SurfaceFreeOrbit => ("surface-free-orbit", "surface: free orbit of points"),
    SurfacePointEqual => ("surface-point-equal", "surface: fixed point, a=b"),
    SurfacePointDistinct => ("surface-point-distinct", "surface: fixed point, a≠b"),
    SurfacePointOnCurve => ("surface-point-on-curve", "surface: fixed point on a fixed curve"),
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

impl FromStr for CaseLabel {
    type Err = BlowupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        CaseLabel::ALL
            .iter()
            .copied()
            .find(|c| c.id() == s || c.text() == s)
            .ok_or_else(|| BlowupError::Inadmissible(format!("unknown case label `{s}`")))
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.text())
    }
}

impl<'de> Deserialize<'de> for CaseLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// What happens at one fixed point of a blown-up invariant curve, by the
/// two normal weights `(b, c)` there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IncidenceCase {
    /// `b = c ≠ 0`: the fibre is a fixed rational curve.
    #[serde(rename = "b=c≠0")]
    EqualNonzero,
    /// `b ≠ c`, both nonzero: two isolated points.
    #[serde(rename = "0≠b≠c≠0")]
    Distinct,
    /// `b = 0 ≠ c`: the point lies on a fixed curve.
    #[serde(rename = "b=0, c≠0")]
    OnCurve,
    /// `b = c = 0`: the point lies on a fixed surface.
    #[serde(rename = "b=c=0")]
    OnSurface,
}

impl fmt::Display for IncidenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::EqualNonzero => "b=c≠0",
            Self::Distinct => "0≠b≠c≠0",
            Self::OnCurve => "b=0, c≠0",
            Self::OnSurface => "b=c=0",
        })
    }
}

/// An invariant before and after a blowup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta {
    pub kind: InvariantKind,
    pub before: InvariantValue,
    pub after: InvariantValue,
    /// `after - before` for integer kinds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub change: Option<i64>,
}

impl Delta {
    pub fn is_zero(&self) -> bool {
        self.before == self.after
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupReport {
    pub center: BlowupCenter,
    pub case: CaseLabel,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub subcases: Vec<IncidenceCase>,
    pub deltas: Vec<Delta>,
    pub before: Configuration,
    pub after: Configuration,
}

impl BlowupReport {
    pub fn all_zero(&self) -> bool {
        self.deltas.iter().all(Delta::is_zero)
    }
}
