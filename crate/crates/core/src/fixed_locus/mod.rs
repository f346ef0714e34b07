//! Symbolic fixed loci of `Z/p`-actions on surfaces and threefolds: isolated
//! points, curves and surfaces with their normal weights and the numerical
//! data the invariants consume.

mod examples;

pub use examples::{build_example, ExampleFamily, LineAction, P3Z2Variant, P3Z3Variant};

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::atom_ledger::AtomRecord;

/// Surface tag for components birational to a curve times a line.
pub const TAG_RULED: &str = "C×P1";
/// Surface tag for projective planes.
pub const TAG_PLANE: &str = "P2";

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("malformed configuration: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0}")]
    Version(u32),
    #[error("invalid configuration: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("{0}")]
    Unsupported(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("invalid example parameter: {0}")]
    BadParameter(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub p: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointComponent {
    pub weights: Vec<i64>,
}

impl PointComponent {
    pub fn new(weights: Vec<i64>) -> Self {
        Self { weights }
    }
}

/// Normal weights of a fixed curve: one on a surface, two on a threefold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalWeights {
    Single(i64),
    Pair(i64, i64),
}

impl NormalWeights {
    pub fn values(&self) -> Vec<i64> {
        match *self {
            Self::Single(a) => vec![a],
            Self::Pair(a, b) => vec![a, b],
        }
    }

    fn reduce(self, p: i64) -> Self {
        match self {
            Self::Single(a) => Self::Single(a.mod_floor(&p)),
            Self::Pair(a, b) => {
                let (a, b) = (a.mod_floor(&p), b.mod_floor(&p));
                Self::Pair(a.min(b), a.max(b))
            }
        }
    }
}

impl Serialize for NormalWeights {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.values().serialize(s)
    }
}

impl<'de> Deserialize<'de> for NormalWeights {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<i64> = Vec::deserialize(d)?;
        match v.as_slice() {
            [a] => Ok(Self::Single(*a)),
            [a, b] => Ok(Self::Pair(*a, *b)),
            _ => Err(serde::de::Error::custom(format!(
                "curve weights must have one or two entries, got {}",
                v.len()
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveComponent {
    pub genus: u32,
    pub weights: NormalWeights,
    /// Degree of the determinant of the normal bundle (the normal bundle
    /// itself on a surface).
    #[serde(with = "crate::json_int::int")]
    pub d: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isogeny_label: Option<String>,
    /// `-K_X·C` when known independently of `d`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anticanonical_degree: Option<i64>,
}

impl CurveComponent {
    pub fn new(genus: u32, weights: NormalWeights, d: i64) -> Self {
        Self {
            genus,
            weights,
            d,
            isogeny_label: None,
            anticanonical_degree: None,
        }
    }

    pub fn with_label(mut self, label: Option<String>) -> Self {
        self.isogeny_label = label;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceComponent {
    pub weight: i64,
    pub ruling_genus: u32,
    #[serde(with = "crate::json_int::int")]
    pub k_dot_n: i64,
    pub tag: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub isogeny_label: Option<String>,
}

impl SurfaceComponent {
    pub fn new(weight: i64, ruling_genus: u32, k_dot_n: i64, tag: &str) -> Self {
        Self {
            weight,
            ruling_genus,
            k_dot_n,
            tag: tag.to_string(),
            isogeny_label: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Configuration {
    pub group: GroupSpec,
    pub dim: u8,
    #[serde(default)]
    pub points: Vec<PointComponent>,
    #[serde(default)]
    pub curves: Vec<CurveComponent>,
    #[serde(default)]
    pub surfaces: Vec<SurfaceComponent>,
    #[serde(default)]
    pub atoms: Vec<AtomRecord>,
}

#[derive(Serialize, Deserialize)]
struct ConfigFile {
    format_version: u32,
    #[serde(flatten)]
    config: Configuration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub component: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.component, self.message)
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl Configuration {
    pub fn empty(p: u32, dim: u8) -> Self {
        Self {
            group: GroupSpec { p },
            dim,
            points: Vec::new(),
            curves: Vec::new(),
            surfaces: Vec::new(),
            atoms: Vec::new(),
        }
    }

    pub fn p(&self) -> i64 {
        i64::from(self.group.p)
    }

    /// Reduces weights into `[0, p)` and sorts point and curve weights.
    pub fn canonicalize(&mut self) {
        let p = self.p();
        if p < 1 {
            return;
        }
        for pt in &mut self.points {
            for w in &mut pt.weights {
                *w = w.mod_floor(&p);
            }
            pt.weights.sort_unstable();
        }
        for c in &mut self.curves {
            c.weights = c.weights.reduce(p);
        }
        for s in &mut self.surfaces {
            s.weight = s.weight.mod_floor(&p);
        }
    }

    pub fn canonical(mut self) -> Self {
        self.canonicalize();
        self
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push =
            |component: String, message: String| out.push(Violation { component, message });
        if !is_prime(self.group.p) {
            push(
                "group".into(),
                format!("order {} is not prime", self.group.p),
            );
        }
        if self.dim != 2 && self.dim != 3 {
            push(
                "dim".into(),
                format!("dimension {} is not 2 or 3", self.dim),
            );
        }
        let p = self.p().max(1);
        let dim = usize::from(self.dim);
        for (i, pt) in self.points.iter().enumerate() {
            let name = format!("points[{i}]");
            if pt.weights.len() != dim {
                push(
                    name.clone(),
                    format!(
                        "{} weights for a point in dimension {dim}",
                        pt.weights.len()
                    ),
                );
            }
            if pt.weights.iter().any(|w| w.mod_floor(&p) == 0) {
                push(name, "zero normal weight".into());
            }
        }
        for (i, c) in self.curves.iter().enumerate() {
            let name = format!("curves[{i}]");
            let expected = dim.saturating_sub(1);
            if c.weights.values().len() != expected {
                push(
                    name.clone(),
                    format!(
                        "{} normal weights for a curve in dimension {dim}",
                        c.weights.values().len()
                    ),
                );
            }
            if c.weights.values().iter().any(|w| w.mod_floor(&p) == 0) {
                push(name, "zero normal weight".into());
            }
        }
        for (i, s) in self.surfaces.iter().enumerate() {
            let name = format!("surfaces[{i}]");
            if self.dim != 3 {
                push(name.clone(), "fixed surface in a surface".into());
            }
            if s.weight.mod_floor(&p) == 0 {
                push(name, "zero normal weight".into());
            }
        }
        for (i, a) in self.atoms.iter().enumerate() {
            for v in a.violations() {
                push(format!("atoms[{i}]"), v);
            }
        }
        out
    }

    pub fn check(&self) -> Result<(), ConfigError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(ConfigError::Invalid(v))
        }
    }

    /// Parses, canonicalizes and validates.
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let file: ConfigFile = serde_json::from_str(text)?;
        if file.format_version != FORMAT_VERSION {
            return Err(ConfigError::Version(file.format_version));
        }
        let config = file.config.canonical();
        config.check()?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        let file = ConfigFile {
            format_version: FORMAT_VERSION,
            config: self.clone(),
        };
        serde_json::to_string_pretty(&file).expect("configuration serializes")
    }

    /// Disjoint union of two configurations with the same group and dimension.
    pub fn disjoint_union(&self, other: &Configuration) -> Option<Configuration> {
        if self.group != other.group || self.dim != other.dim {
            return None;
        }
        let mut out = self.clone();
        out.points.extend(other.points.iter().cloned());
        out.curves.extend(other.curves.iter().cloned());
        out.surfaces.extend(other.surfaces.iter().cloned());
        out.atoms.extend(other.atoms.iter().cloned());
        Some(out)
    }
}

/// `#points + Σ (2 - 2g)` over curves; defined only without fixed surfaces.
pub fn euler_characteristic_fixed_locus(c: &Configuration) -> Result<i64, ConfigError> {
    if !c.surfaces.is_empty() {
        return Err(ConfigError::Unsupported(
            "euler characteristic is only defined for fixed loci without surfaces".into(),
        ));
    }
    Ok(c.points.len() as i64
        + c.curves
            .iter()
            .map(|cv| 2 - 2 * i64::from(cv.genus))
            .sum::<i64>())
}

/// Genus of the normalisation of `x^3 = P(t)` with `deg P = 3k` and simple
/// roots: `2g - 2 = -6 + 6k`.
pub fn genus_cyclic_cover(k: u32) -> Result<u32, ConfigError> {
    if k == 0 {
        return Err(ConfigError::BadParameter("k must be at least 1".into()));
    }
    Ok(3 * k - 2)
}
