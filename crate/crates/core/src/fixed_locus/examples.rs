//! Fixed loci of a few standard actions.

use super::{
    genus_cyclic_cover, is_prime, ConfigError, Configuration, CurveComponent, NormalWeights,
    PointComponent, SurfaceComponent, TAG_PLANE, TAG_RULED,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineAction {
    Trivial,
    Nontrivial,
}

/// Involutions of projective 3-space up to conjugacy, by fixed locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P3Z2Variant {
    /// `diag(1,1,1,-1)`
    PointPlane,
    /// `diag(1,1,-1,-1)`
    TwoLines,
}

/// Order-three linear actions on projective 3-space, by fixed locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P3Z3Variant {
    /// `diag(1,1,1,ζ)`
    PointPlane,
    /// `diag(1,1,ζ,ζ)`
    TwoLines,
    /// `diag(1,1,ζ,ζ²)`
    LineTwoPoints,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleFamily {
    /// `x_1 x_2 x_3 = P(x_4)` with `deg P = 3k`, `Z/3` scaling the `x_i`:
    /// the fixed locus is the trigonal curve `x^3 = P(t)`.
    TrigonalThreefold {
        k: u32,
    },
    /// `S × P^1` where `S` has a fixed curve `C` of genus `g` with
    /// self-intersection `c`.
    SurfaceTimesLine {
        genus: u32,
        p: u32,
        line_action: LineAction,
        self_intersection: i64,
    },
    /// `diag(1,1,-1)` on the projective plane.
    P2LinearZ2,
    P3LinearZ2(P3Z2Variant),
    P3LinearZ3(P3Z3Variant),
}

impl ExampleFamily {
    pub fn names() -> &'static [&'static str] {
        &[
            "trigonal_threefold",
            "surface_times_line",
            "p2_linear_z2",
            "p3_linear_z2",
            "p3_linear_z3",
        ]
    }
}

pub fn build_example(family: &ExampleFamily) -> Result<Configuration, ConfigError> {
    let c = match family {
        ExampleFamily::TrigonalThreefold { k } => {
            let genus = genus_cyclic_cover(*k)?;
            let k = i64::from(*k);
            // -K_X·C from the multidegree (3k,3k,3k,3) of C against (1,1,1,2-3k)
            let anticanonical = 3 * k + 3 * k + 3 * k + (2 - 3 * k) * 3;
            let d = anticanonical - 2 + 2 * i64::from(genus);
            let mut c = Configuration::empty(3, 3);
            let mut curve = CurveComponent::new(genus, NormalWeights::Pair(1, 2), d)
                .with_label(Some(format!("Jac(C_k{k})")));
            curve.anticanonical_degree = Some(anticanonical);
            c.curves.push(curve);
            c
        }
        ExampleFamily::SurfaceTimesLine {
            genus,
            p,
            line_action,
            self_intersection,
        } => {
            if !is_prime(*p) {
                return Err(ConfigError::BadParameter(format!("{p} is not prime")));
            }
            let label = Some(format!("Jac(C_g{genus})"));
            let mut c = Configuration::empty(*p, 3);
            match line_action {
                LineAction::Nontrivial => {
                    for w in [1, i64::from(*p) - 1] {
                        c.curves.push(
                            CurveComponent::new(
                                *genus,
                                NormalWeights::Pair(1, w),
                                *self_intersection,
                            )
                            .with_label(label.clone()),
                        );
                    }
                }
                LineAction::Trivial => {
                    let mut s = SurfaceComponent::new(1, *genus, -2 * self_intersection, TAG_RULED);
                    s.isogeny_label = label;
                    c.surfaces.push(s);
                }
            }
            c
        }
        ExampleFamily::P2LinearZ2 => {
            let mut c = Configuration::empty(2, 2);
            c.points.push(PointComponent::new(vec![1, 1]));
            c.curves
                .push(CurveComponent::new(0, NormalWeights::Single(1), 1));
            c
        }
        ExampleFamily::P3LinearZ2(variant) => {
            let mut c = Configuration::empty(2, 3);
            match variant {
                P3Z2Variant::PointPlane => {
                    c.points.push(PointComponent::new(vec![1, 1, 1]));
                    c.surfaces.push(SurfaceComponent::new(1, 0, -3, TAG_PLANE));
                }
                P3Z2Variant::TwoLines => {
                    for _ in 0..2 {
                        c.curves
                            .push(CurveComponent::new(0, NormalWeights::Pair(1, 1), 2));
                    }
                }
            }
            c
        }
        ExampleFamily::P3LinearZ3(variant) => {
            let mut c = Configuration::empty(3, 3);
            match variant {
                P3Z3Variant::PointPlane => {
                    c.points.push(PointComponent::new(vec![2, 2, 2]));
                    c.surfaces.push(SurfaceComponent::new(1, 0, -3, TAG_PLANE));
                }
                P3Z3Variant::TwoLines => {
                    c.curves
                        .push(CurveComponent::new(0, NormalWeights::Pair(1, 1), 2));
                    c.curves
                        .push(CurveComponent::new(0, NormalWeights::Pair(2, 2), 2));
                }
                P3Z3Variant::LineTwoPoints => {
                    c.curves
                        .push(CurveComponent::new(0, NormalWeights::Pair(1, 2), 2));
                    c.points.push(PointComponent::new(vec![1, 2, 2]));
                    c.points.push(PointComponent::new(vec![1, 1, 2]));
                }
            }
            c
        }
    };
    let c = c.canonical();
    c.check()?;
    Ok(c)
}
