use std::collections::BTreeSet;

use num_integer::Integer;

use super::{BlowupCenter, BlowupError, BlowupReport, CaseLabel, Delta, Incidence, IncidenceCase};
use crate::atom_ledger::AtomRecord;
use crate::exact_algebra::LaurentPoly;
use crate::fixed_locus::{
    Configuration, CurveComponent, NormalWeights, PointComponent, SurfaceComponent, TAG_PLANE,
    TAG_RULED,
};
use crate::invariants::{evaluate, evaluate_value, is_applicable, InvariantKind, InvariantValue};
use crate::symbol_groups::Presentation;

pub fn blowup(c: &Configuration, center: &BlowupCenter) -> Result<BlowupReport, BlowupError> {
    blowup_with(c, center, None)
}

/// As [`blowup`], also tracking `beta` in `pres` when given.
pub fn blowup_with(
    c: &Configuration,
    center: &BlowupCenter,
    pres: Option<&Presentation>,
) -> Result<BlowupReport, BlowupError> {
    let violations = c.validate();
    if !violations.is_empty() {
        let text: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(BlowupError::InvalidConfiguration(text.join("; ")));
    }
    let before = c.clone().canonical();
    let (after, case, subcases) = apply(&before, center)?;
    let after = after.canonical();
    let deltas = deltas(&before, &after, pres)?;
    Ok(BlowupReport {
        center: center.clone(),
        case,
        subcases,
        deltas,
        before,
        after,
    })
}

/// Integer kinds worth comparing across the two configurations: the
/// closed-form invariant for `(dim, p)`, and the curve-counting invariants for
/// every genus `≥ 2` and every label that occurs.
pub(crate) fn tracked_kinds(configs: &[&Configuration]) -> Vec<InvariantKind> {
    let first = configs[0];
    let mut kinds: Vec<InvariantKind> = [InvariantKind::I, InvariantKind::J, InvariantKind::K]
        .into_iter()
        .filter(|k| is_applicable(first, k))
        .collect();
    if first.dim != 3 {
        return kinds;
    }
    let mut genera = BTreeSet::new();
    let mut labels = BTreeSet::new();
    for c in configs {
        for cv in &c.curves {
            genera.insert(cv.genus);
            labels.extend(cv.isogeny_label.clone());
        }
        for s in &c.surfaces {
            if s.tag == TAG_RULED {
                genera.insert(s.ruling_genus);
            }
            labels.extend(s.isogeny_label.clone());
        }
        for a in &c.atoms {
            if let Ok(g) = u32::try_from(a.hodge_poly.coeff(1)) {
                if a.hodge_poly == LaurentPoly::curve_symbol(g) {
                    genera.insert(g);
                }
            }
            labels.extend(a.mt_label.clone());
        }
    }
    kinds.extend(
        genera
            .into_iter()
            .filter(|&g| g >= 2)
            .map(InvariantKind::Combined),
    );
    kinds.extend(labels.into_iter().map(InvariantKind::Fine));
    kinds
}

fn deltas(
    before: &Configuration,
    after: &Configuration,
    pres: Option<&Presentation>,
) -> Result<Vec<Delta>, BlowupError> {
    let mut out = Vec::new();
    for kind in tracked_kinds(&[before, after]) {
        let b = evaluate(before, &kind)?.value;
        let a = evaluate(after, &kind)?.value;
        out.push(Delta {
            kind,
            before: InvariantValue::Int(b),
            after: InvariantValue::Int(a),
            change: Some(a - b),
        });
    }
    if let Some(pres) = pres {
        let kind = InvariantKind::Beta;
        out.push(Delta {
            before: evaluate_value(before, &kind, Some(pres))?,
            after: evaluate_value(after, &kind, Some(pres))?,
            kind,
            change: None,
        });
    }
    Ok(out)
}

fn inadmissible(msg: impl Into<String>) -> BlowupError {
    BlowupError::Inadmissible(msg.into())
}

fn need_threefold(c: &Configuration, what: &str) -> Result<(), BlowupError> {
    if c.dim == 3 {
        Ok(())
    } else {
        Err(inadmissible(format!("{what} requires a threefold")))
    }
}

fn trivial_points(n: usize) -> impl Iterator<Item = AtomRecord> {
    std::iter::repeat_n(AtomRecord::trivial_point(), n)
}

/// Atoms added when an invariant curve of genus `g` is blown up: two points
/// for a rational curve, otherwise the curve itself.
fn curve_atoms(g: u32, trivial: bool, label: Option<String>) -> Vec<AtomRecord> {
    match (g, trivial) {
        (0, _) => trivial_points(2).collect(),
        (_, true) => vec![AtomRecord::trivial_curve(g, label)],
        (_, false) => vec![AtomRecord::nontrivial_curve(g, label)],
    }
}

type Applied = (Configuration, CaseLabel, Vec<IncidenceCase>);

fn apply(c: &Configuration, center: &BlowupCenter) -> Result<Applied, BlowupError> {
    let p = c.p();
    let r = |x: i64| x.mod_floor(&p);
    let mut out = c.clone();
    match center {
        BlowupCenter::FreeOrbitPoint => {
            let p = c.group.p;
            if c.dim == 3 {
                out.atoms.extend([
                    AtomRecord::free_orbit_point(p),
                    AtomRecord::free_orbit_point(p),
                ]);
                Ok((out, CaseLabel::FreeOrbitPoints, vec![]))
            } else {
                out.atoms.push(AtomRecord::free_orbit_point(p));
                Ok((out, CaseLabel::SurfaceFreeOrbit, vec![]))
            }
        }

        BlowupCenter::FreeOrbitCurve { genus } => {
            need_threefold(c, "a free orbit of curves")?;
            let p = c.group.p;
            if *genus == 0 {
                out.atoms.extend([
                    AtomRecord::free_orbit_point(p),
                    AtomRecord::free_orbit_point(p),
                ]);
                Ok((out, CaseLabel::FreeOrbitRationalCurve, vec![]))
            } else {
                out.atoms.push(AtomRecord::free_orbit_curve(p, *genus));
                Ok((out, CaseLabel::FreeOrbitCurve, vec![]))
            }
        }

        BlowupCenter::IsolatedFixedPoint { point } => {
            let pt = c
                .points
                .get(*point)
                .ok_or_else(|| inadmissible(format!("no point {point}")))?;
            let w: Vec<i64> = pt.weights.iter().map(|&x| r(x)).collect();
            out.points.remove(*point);
            if c.dim == 2 {
                let (a, b) = (w[0], w[1]);
                out.atoms.extend(trivial_points(1));
                if a == b {
                    out.curves
                        .push(CurveComponent::new(0, NormalWeights::Single(a), -1));
                    return Ok((out, CaseLabel::SurfacePointEqual, vec![]));
                }
                out.points.push(PointComponent::new(vec![a, r(b - a)]));
                out.points.push(PointComponent::new(vec![r(a - b), b]));
                return Ok((out, CaseLabel::SurfacePointDistinct, vec![]));
            }
            out.atoms.extend(trivial_points(2));
            let distinct: BTreeSet<i64> = w.iter().copied().collect();
            let case = match distinct.len() {
                3 => {
                    let (a, b, cc) = (w[0], w[1], w[2]);
                    out.points
                        .push(PointComponent::new(vec![a, r(b - a), r(cc - a)]));
                    out.points
                        .push(PointComponent::new(vec![r(a - b), b, r(cc - b)]));
                    out.points
                        .push(PointComponent::new(vec![r(a - cc), r(b - cc), cc]));
                    CaseLabel::PointDistinct
                }
                2 => {
                    // sorted weights: the repeated value sits in the middle
                    let a = w[1];
                    let cc = if w[0] == a { w[2] } else { w[0] };
                    out.curves
                        .push(CurveComponent::new(0, NormalWeights::Pair(a, r(cc - a)), 0));
                    out.points
                        .push(PointComponent::new(vec![r(a - cc), r(a - cc), cc]));
                    CaseLabel::PointTwoEqual
                }
                _ => {
                    out.surfaces
                        .push(SurfaceComponent::new(w[0], 0, 3, TAG_PLANE));
                    CaseLabel::PointAllEqual
                }
            };
            Ok((out, case, vec![]))
        }

        BlowupCenter::InvariantCurve { genus, incidences } => {
            need_threefold(c, "an invariant curve")?;
            let subcases = apply_incidences(c, &mut out, incidences)?;
            out.atoms.extend(curve_atoms(*genus, false, None));
            let case = if *genus == 0 {
                CaseLabel::InvariantRationalCurve
            } else {
                CaseLabel::InvariantCurve
            };
            Ok((out, case, subcases))
        }

        BlowupCenter::CurveTransverseToFixedCurve { curve, tangent } => {
            need_threefold(c, "an invariant curve")?;
            let inc = [Incidence::Curve {
                curve: *curve,
                tangent: *tangent,
            }];
            let subcases = apply_incidences(c, &mut out, &inc)?;
            out.atoms.extend(trivial_points(2));
            Ok((out, CaseLabel::CurveMeetsFixedCurve, subcases))
        }

        BlowupCenter::CurveTransverseToFixedSurface { surface, count } => {
            need_threefold(c, "an invariant curve")?;
            if *count == 0 {
                return Err(inadmissible("intersection count must be positive"));
            }
            let inc: Vec<Incidence> = (0..*count)
                .map(|_| Incidence::Surface { surface: *surface })
                .collect();
            let subcases = apply_incidences(c, &mut out, &inc)?;
            out.atoms.extend(trivial_points(2));
            Ok((out, CaseLabel::CurveMeetsSurface, subcases))
        }

        BlowupCenter::PointOnFixedCurve { curve } => {
            let f = c
                .curves
                .get(*curve)
                .ok_or_else(|| inadmissible(format!("no curve {curve}")))?;
            match f.weights {
                NormalWeights::Single(a) => {
                    let a = r(a);
                    out.curves[*curve].d -= 1;
                    out.points.push(PointComponent::new(vec![a, r(-a)]));
                    out.atoms.extend(trivial_points(1));
                    Ok((out, CaseLabel::SurfacePointOnCurve, vec![]))
                }
                NormalWeights::Pair(a, b) => {
                    let (a, b) = (r(a), r(b));
                    out.curves[*curve].d -= 2;
                    out.atoms.extend(trivial_points(2));
                    if a == b {
                        out.curves
                            .push(CurveComponent::new(0, NormalWeights::Pair(a, r(-a)), 0));
                        Ok((out, CaseLabel::PointOnCurveEqual, vec![]))
                    } else {
                        out.points
                            .push(PointComponent::new(vec![a, r(-a), r(b - a)]));
                        out.points
                            .push(PointComponent::new(vec![b, r(-b), r(a - b)]));
                        Ok((out, CaseLabel::PointOnCurveDistinct, vec![]))
                    }
                }
            }
        }

        BlowupCenter::FixedCurve { curve, split } => {
            need_threefold(c, "blowing up a fixed curve")?;
            let f = c
                .curves
                .get(*curve)
                .ok_or_else(|| inadmissible(format!("no curve {curve}")))?
                .clone();
            let NormalWeights::Pair(a, b) = f.weights else {
                return Err(inadmissible("curve has a single normal weight"));
            };
            let (a, b) = (r(a), r(b));
            let (a, b) = (a.min(b), a.max(b));
            out.curves.remove(*curve);
            out.atoms
                .extend(curve_atoms(f.genus, true, f.isogeny_label.clone()));
            let rational = f.genus == 0;
            if a == b {
                let mut s =
                    SurfaceComponent::new(a, f.genus, 2 - 2 * i64::from(f.genus) - f.d, TAG_RULED);
                s.isogeny_label = f.isogeny_label.clone();
                out.surfaces.push(s);
                let case = if rational {
                    CaseLabel::RationalCurveEqual
                } else {
                    CaseLabel::CurveEqual
                };
                return Ok((out, case, vec![]));
            }
            // N = L_a ⊕ L_b; the section in direction a has normal bundle
            // Hom(L_a, L_b) ⊕ L_a, whose determinant has degree deg L_b.
            let d_a = split.unwrap_or_else(|| Integer::div_floor(&f.d, &2));
            let d_b = f.d - d_a;
            for (w, other, deg) in [(a, b, d_b), (b, a, d_a)] {
                out.curves.push(
                    CurveComponent::new(f.genus, NormalWeights::Pair(w, r(other - w)), deg)
                        .with_label(f.isogeny_label.clone()),
                );
            }
            let case = if rational {
                CaseLabel::RationalCurveDistinct
            } else {
                CaseLabel::CurveDistinct
            };
            Ok((out, case, vec![]))
        }

        BlowupCenter::PointOnFixedSurface { surface } => {
            need_threefold(c, "a point on a fixed surface")?;
            let s = c
                .surfaces
                .get(*surface)
                .ok_or_else(|| inadmissible(format!("no surface {surface}")))?;
            let w = r(s.weight);
            out.surfaces[*surface].k_dot_n += 1;
            out.points.push(PointComponent::new(vec![w, r(-w), r(-w)]));
            out.atoms.extend(trivial_points(2));
            Ok((out, CaseLabel::PointOnSurface, vec![]))
        }

        BlowupCenter::CurveInFixedSurface {
            surface,
            genus,
            self_intersection,
            normal_degree,
            label,
        } => {
            need_threefold(c, "a curve in a fixed surface")?;
            let s = c
                .surfaces
                .get(*surface)
                .ok_or_else(|| inadmissible(format!("no surface {surface}")))?;
            let w = r(s.weight);
            let g = i64::from(*genus);
            // adjunction: K_S·C = 2g - 2 - C²; the new normal bundle is N(-C)
            out.surfaces[*surface].k_dot_n -= 2 * g - 2 - self_intersection;
            // the section in the normal direction has normal bundle
            // Hom(N_S|C, N_{C/S}) ⊕ N_S|C
            let d = (self_intersection - normal_degree) + normal_degree;
            out.curves.push(
                CurveComponent::new(*genus, NormalWeights::Pair(w, r(-w)), d)
                    .with_label(label.clone()),
            );
            out.atoms.extend(curve_atoms(*genus, true, label.clone()));
            let case = if *genus == 0 {
                CaseLabel::RationalCurveInSurface
            } else {
                CaseLabel::CurveInSurface
            };
            Ok((out, case, vec![]))
        }
    }
}

/// Local changes at the fixed points of a blown-up invariant curve.
fn apply_incidences(
    c: &Configuration,
    out: &mut Configuration,
    incidences: &[Incidence],
) -> Result<Vec<IncidenceCase>, BlowupError> {
    let p = c.p();
    let r = |x: i64| x.mod_floor(&p);
    let mut removed = BTreeSet::new();
    let mut subcases = Vec::new();
    for inc in incidences {
        match *inc {
            Incidence::Point { point, tangent } => {
                let pt = c
                    .points
                    .get(point)
                    .ok_or_else(|| inadmissible(format!("no point {point}")))?;
                if !removed.insert(point) {
                    return Err(inadmissible(format!("point {point} listed twice")));
                }
                let t = r(tangent);
                let mut rest: Vec<i64> = pt.weights.iter().map(|&x| r(x)).collect();
                let pos = rest
                    .iter()
                    .position(|&x| x == t)
                    .filter(|_| t != 0)
                    .ok_or_else(|| {
                        inadmissible(format!(
                            "tangent weight {t} is not a weight of point {point}"
                        ))
                    })?;
                rest.remove(pos);
                let (b, cc) = (rest[0], rest[1]);
                if b == cc {
                    out.curves
                        .push(CurveComponent::new(0, NormalWeights::Pair(t, b), -1));
                    subcases.push(IncidenceCase::EqualNonzero);
                } else {
                    out.points.push(PointComponent::new(vec![t, b, r(cc - b)]));
                    out.points.push(PointComponent::new(vec![t, cc, r(b - cc)]));
                    subcases.push(IncidenceCase::Distinct);
                }
            }
            Incidence::Curve { curve, tangent } => {
                let f = c
                    .curves
                    .get(curve)
                    .ok_or_else(|| inadmissible(format!("no curve {curve}")))?;
                let NormalWeights::Pair(x, y) = f.weights else {
                    return Err(inadmissible("curve has a single normal weight"));
                };
                let t = r(tangent);
                let other = if t == r(x) && t != 0 {
                    r(y)
                } else if t == r(y) && t != 0 {
                    r(x)
                } else {
                    return Err(inadmissible(format!(
                        "tangent weight {t} is not a normal weight of curve {curve}"
                    )));
                };
                out.curves[curve].d -= 1;
                out.points
                    .push(PointComponent::new(vec![t, other, r(-other)]));
                subcases.push(IncidenceCase::OnCurve);
            }
            Incidence::Surface { surface } => {
                if surface >= c.surfaces.len() {
                    return Err(inadmissible(format!("no surface {surface}")));
                }
                subcases.push(IncidenceCase::OnSurface);
            }
        }
    }
    let mut i = 0;
    out.points.retain(|_| {
        let keep = !removed.contains(&i);
        i += 1;
        keep
    });
    Ok(subcases)
}
