//! Integer invariants of fixed loci: `I` for involutions of surfaces, `J`
//! for order-three actions on threefolds, `K` for involutions of threefolds,
//! and the curve-counting invariants that pair fixed curves against atoms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_algebra::{GroupElementClass, LaurentPoly};
use crate::fixed_locus::{Configuration, NormalWeights, TAG_RULED};
use crate::symbol_groups::{beta, Presentation, SymbolError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{kind} requires {requirement}")]
    NotApplicable { kind: String, requirement: String },
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),
    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(i64),
    #[error("unknown invariant kind `{0}`")]
    UnknownKind(String),
    #[error("beta needs a presentation of B_n(Z/p)")]
    MissingPresentation,
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKind {
    I,
    J,
    K,
    Combined(u32),
    Fine(String),
    Beta,
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::I => write!(f, "I"),
            Self::J => write!(f, "J"),
            Self::K => write!(f, "K"),
            Self::Combined(g) => write!(f, "combined:{g}"),
            Self::Fine(l) => write!(f, "fine:{l}"),
            Self::Beta => write!(f, "beta"),
        }
    }
}

impl FromStr for InvariantKind {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "I" | "i" => return Ok(Self::I),
            "J" | "j" => return Ok(Self::J),
            "K" | "k" => return Ok(Self::K),
            "beta" => return Ok(Self::Beta),
            _ => {}
        }
        if let Some(g) = s.strip_prefix("combined:") {
            let g: u32 = g
                .parse()
                .map_err(|_| InvariantError::UnknownKind(s.to_string()))?;
            if g < 2 {
                return Err(InvariantError::GenusTooSmall(g));
            }
            return Ok(Self::Combined(g));
        }
        if let Some(l) = s.strip_prefix("fine:") {
            if !l.is_empty() {
                return Ok(Self::Fine(l.to_string()));
            }
        }
        Err(InvariantError::UnknownKind(s.to_string()))
    }
}

impl Serialize for InvariantKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for InvariantKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Contribution of one component or ledger entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub component: String,
    pub value: i64,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    pub kind: InvariantKind,
    pub value: i64,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InvariantValue {
    Int(i64),
    Class(GroupElementClass),
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Int(v) => write!(f, "{v}"),
            Self::Class(c) => write!(f, "{c}"),
        }
    }
}

fn require(c: &Configuration, kind: &InvariantKind) -> Result<(), InvariantError> {
    let (dim, p): (u8, Option<u32>) = match kind {
        InvariantKind::I => (2, Some(2)),
        InvariantKind::J => (3, Some(3)),
        InvariantKind::K => (3, Some(2)),
        InvariantKind::Combined(_) | InvariantKind::Fine(_) => (3, None),
        InvariantKind::Beta => return Ok(()),
    };
    let ok = c.dim == dim && p.is_none_or(|p| c.group.p == p);
    if ok {
        return Ok(());
    }
    let requirement = match p {
        Some(p) => format!("dim={dim} and p={p}, got dim={} and p={}", c.dim, c.group.p),
        None => format!("dim={dim}, got dim={}", c.dim),
    };
    Err(InvariantError::NotApplicable {
        kind: kind.to_string(),
        requirement,
    })
}

pub fn is_applicable(c: &Configuration, kind: &InvariantKind) -> bool {
    require(c, kind).is_ok()
}

fn finish(kind: InvariantKind, terms: Vec<Term>) -> Evaluation {
    Evaluation {
        kind,
        value: terms.iter().map(|t| t.value).sum(),
        terms,
    }
}

/// `χ(X^G) + Σ deg N_F` over fixed curves.
pub fn invariant_i(c: &Configuration) -> Result<Evaluation, InvariantError> {
    require(c, &InvariantKind::I)?;
    let mut terms = Vec::new();
    for i in 0..c.points.len() {
        terms.push(Term {
            component: format!("points[{i}]"),
            value: 1,
            formula: "1".into(),
        });
    }
    for (i, cv) in c.curves.iter().enumerate() {
        let g = i64::from(cv.genus);
        terms.push(Term {
            component: format!("curves[{i}]"),
            value: 2 - 2 * g + cv.d,
            formula: format!("(2 - 2*{g}) + {}", cv.d),
        });
    }
    Ok(finish(InvariantKind::I, terms))
}

/// Points of type `[++-]`, `[+--]` count 1; curves with equal weights
/// `1 - g + d`, with distinct weights `2 - 2g + d`; surfaces
/// `3 - 3g - K_S·N`.
pub fn invariant_j(c: &Configuration) -> Result<Evaluation, InvariantError> {
    require(c, &InvariantKind::J)?;
    let mut terms = Vec::new();
    for (i, pt) in c.points.iter().enumerate() {
        let plus = pt.weights.iter().filter(|&&w| w.rem_euclid(3) == 1).count();
        let mixed = plus == 1 || plus == 2;
        terms.push(Term {
            component: format!("points[{i}]"),
            value: i64::from(mixed),
            formula: if mixed { "mixed signs" } else { "equal signs" }.into(),
        });
    }
    for (i, cv) in c.curves.iter().enumerate() {
        let g = i64::from(cv.genus);
        let (value, formula) = match cv.weights {
            NormalWeights::Pair(a, b) if a.rem_euclid(3) == b.rem_euclid(3) => {
                (1 - g + cv.d, format!("1 - {g} + {}", cv.d))
            }
            _ => (2 - 2 * g + cv.d, format!("2 - 2*{g} + {}", cv.d)),
        };
        terms.push(Term {
            component: format!("curves[{i}]"),
            value,
            formula,
        });
    }
    for (i, s) in c.surfaces.iter().enumerate() {
        let g = i64::from(s.ruling_genus);
        terms.push(Term {
            component: format!("surfaces[{i}]"),
            value: 3 - 3 * g - s.k_dot_n,
            formula: format!("3 - 3*{g} - ({})", s.k_dot_n),
        });
    }
    Ok(finish(InvariantKind::J, terms))
}

/// `#points + Σ (2 - 2g + d) + Σ (4 - 4g - K_S·N)`
pub fn invariant_k(c: &Configuration) -> Result<Evaluation, InvariantError> {
    require(c, &InvariantKind::K)?;
    let mut terms = Vec::new();
    for i in 0..c.points.len() {
        terms.push(Term {
            component: format!("points[{i}]"),
            value: 1,
            formula: "1".into(),
        });
    }
    for (i, cv) in c.curves.iter().enumerate() {
        let g = i64::from(cv.genus);
        terms.push(Term {
            component: format!("curves[{i}]"),
            value: 2 - 2 * g + cv.d,
            formula: format!("2 - 2*{g} + {}", cv.d),
        });
    }
    for (i, s) in c.surfaces.iter().enumerate() {
        let g = i64::from(s.ruling_genus);
        terms.push(Term {
            component: format!("surfaces[{i}]"),
            value: 4 - 4 * g - s.k_dot_n,
            formula: format!("4 - 4*{g} - ({})", s.k_dot_n),
        });
    }
    Ok(finish(InvariantKind::K, terms))
}

/// `-#(genus-g fixed curves) - 2 #(fixed C×P1 with C of genus g)
///  + #(trivial-action atoms with P = g t^-1 + 2 + g t)`
pub fn combined_invariant(c: &Configuration, genus: u32) -> Result<Evaluation, InvariantError> {
    if genus < 2 {
        return Err(InvariantError::GenusTooSmall(genus));
    }
    let kind = InvariantKind::Combined(genus);
    require(c, &kind)?;
    let poly = LaurentPoly::curve_symbol(genus);
    let mut terms = Vec::new();
    for (i, cv) in c.curves.iter().enumerate() {
        if cv.genus == genus {
            terms.push(Term {
                component: format!("curves[{i}]"),
                value: -1,
                formula: format!("fixed curve of genus {genus}"),
            });
        }
    }
    for (i, s) in c.surfaces.iter().enumerate() {
        if s.tag == TAG_RULED && s.ruling_genus == genus {
            terms.push(Term {
                component: format!("surfaces[{i}]"),
                value: -2,
                formula: format!("fixed {TAG_RULED} over genus {genus}"),
            });
        }
    }
    for (i, a) in c.atoms.iter().enumerate() {
        if a.g_action_trivial && a.hodge_poly == poly {
            terms.push(Term {
                component: format!("atoms[{i}]"),
                value: 1,
                formula: format!("trivial-action atom with P = {poly}"),
            });
        }
    }
    Ok(finish(kind, terms))
}

/// As [`combined_invariant`] with curves matched by isogeny label.
pub fn fine_invariant(c: &Configuration, label: &str) -> Result<Evaluation, InvariantError> {
    let kind = InvariantKind::Fine(label.to_string());
    require(c, &kind)?;
    let mut terms = Vec::new();
    for (i, cv) in c.curves.iter().enumerate() {
        if cv.isogeny_label.as_deref() == Some(label) {
            terms.push(Term {
                component: format!("curves[{i}]"),
                value: -1,
                formula: format!("fixed curve labelled {label}"),
            });
        }
    }
    for (i, s) in c.surfaces.iter().enumerate() {
        if s.tag == TAG_RULED && s.isogeny_label.as_deref() == Some(label) {
            terms.push(Term {
                component: format!("surfaces[{i}]"),
                value: -2,
                formula: format!("fixed {TAG_RULED} labelled {label}"),
            });
        }
    }
    for (i, a) in c.atoms.iter().enumerate() {
        if a.g_action_trivial && a.mt_label.as_deref() == Some(label) {
            terms.push(Term {
                component: format!("atoms[{i}]"),
                value: 1,
                formula: format!("trivial-action atom labelled {label}"),
            });
        }
    }
    Ok(finish(kind, terms))
}

/// True when the `t^(d-2)` coefficient of the fixed-locus polynomial exceeds
/// that of the total space.
pub fn hodge_coeff_obstruction(
    p_total: &LaurentPoly,
    p_fixed: &LaurentPoly,
    d: i64,
) -> Result<bool, InvariantError> {
    if d < 2 {
        return Err(InvariantError::DegreeTooSmall(d));
    }
    Ok(p_fixed.coeff(d - 2) > p_total.coeff(d - 2))
}

/// Integer-valued kinds.
pub fn evaluate(c: &Configuration, kind: &InvariantKind) -> Result<Evaluation, InvariantError> {
    match kind {
        InvariantKind::I => invariant_i(c),
        InvariantKind::J => invariant_j(c),
        InvariantKind::K => invariant_k(c),
        InvariantKind::Combined(g) => combined_invariant(c, *g),
        InvariantKind::Fine(l) => fine_invariant(c, l),
        InvariantKind::Beta => Err(InvariantError::UnknownKind(
            "beta is class-valued; use evaluate_value".into(),
        )),
    }
}

/// Any kind, with `beta` reduced in the given presentation.
pub fn evaluate_value(
    c: &Configuration,
    kind: &InvariantKind,
    pres: Option<&Presentation>,
) -> Result<InvariantValue, InvariantError> {
    match kind {
        InvariantKind::Beta => {
            let pres = pres.ok_or(InvariantError::MissingPresentation)?;
            Ok(InvariantValue::Class(beta(c, pres)?))
        }
        _ => Ok(InvariantValue::Int(evaluate(c, kind)?.value)),
    }
}
