use std::collections::BTreeSet;

use super::{BlowupCenter, Incidence};
use crate::fixed_locus::{Configuration, NormalWeights};

const GENERA: std::ops::RangeInclusive<u32> = 0..=3;

/// Centers for every applicable rule, with small parameter ranges: genera
/// `0..=3`, intersection counts `1..=3`, self-intersections `-1..=1`.
/// Invariant curves meet the fixed locus transversally; tangencies are not
/// modelled. The order is deterministic.
pub fn admissible_centers(c: &Configuration) -> Vec<BlowupCenter> {
    let mut out = vec![BlowupCenter::FreeOrbitPoint];
    if c.dim == 2 {
        for point in 0..c.points.len() {
            out.push(BlowupCenter::IsolatedFixedPoint { point });
        }
        for curve in 0..c.curves.len() {
            out.push(BlowupCenter::PointOnFixedCurve { curve });
        }
        return out;
    }

    for genus in GENERA {
        out.push(BlowupCenter::FreeOrbitCurve { genus });
    }
    for point in 0..c.points.len() {
        out.push(BlowupCenter::IsolatedFixedPoint { point });
    }

    // every place an invariant curve can pass through
    let mut places = Vec::new();
    for (point, pt) in c.points.iter().enumerate() {
        let distinct: BTreeSet<i64> = pt.weights.iter().copied().collect();
        for tangent in distinct {
            places.push(Incidence::Point { point, tangent });
        }
    }
    for (curve, cv) in c.curves.iter().enumerate() {
        let distinct: BTreeSet<i64> = cv.weights.values().into_iter().collect();
        for tangent in distinct {
            places.push(Incidence::Curve { curve, tangent });
        }
    }
    for surface in 0..c.surfaces.len() {
        places.push(Incidence::Surface { surface });
    }

    for genus in 1..=*GENERA.end() {
        out.push(BlowupCenter::InvariantCurve {
            genus,
            incidences: vec![],
        });
    }
    for place in &places {
        if matches!(place, Incidence::Point { .. }) {
            for genus in GENERA {
                out.push(BlowupCenter::InvariantCurve {
                    genus,
                    incidences: vec![place.clone()],
                });
            }
        }
    }
    for pair in places.windows(2) {
        if let [Incidence::Point { point: x, .. }, Incidence::Point { point: y, .. }] = pair {
            if x == y {
                continue;
            }
        }
        for genus in 0..=1 {
            out.push(BlowupCenter::InvariantCurve {
                genus,
                incidences: pair.to_vec(),
            });
        }
    }

    for (curve, cv) in c.curves.iter().enumerate() {
        out.push(BlowupCenter::PointOnFixedCurve { curve });
        match cv.weights {
            NormalWeights::Pair(a, b) if a != b => {
                for split in -1..=1 {
                    out.push(BlowupCenter::FixedCurve {
                        curve,
                        split: Some(split),
                    });
                }
            }
            _ => out.push(BlowupCenter::FixedCurve { curve, split: None }),
        }
        let distinct: BTreeSet<i64> = cv.weights.values().into_iter().collect();
        for tangent in distinct {
            out.push(BlowupCenter::CurveTransverseToFixedCurve { curve, tangent });
        }
    }

    for surface in 0..c.surfaces.len() {
        out.push(BlowupCenter::PointOnFixedSurface { surface });
        for count in 1..=3 {
            out.push(BlowupCenter::CurveTransverseToFixedSurface { surface, count });
        }
        for genus in GENERA {
            for self_intersection in -1..=1 {
                for normal_degree in 0..=1 {
                    out.push(BlowupCenter::CurveInFixedSurface {
                        surface,
                        genus,
                        self_intersection,
                        normal_degree,
                        label: (genus > 0).then(|| format!("Jac(D_g{genus})")),
                    });
                }
            }
        }
    }
    out
}
