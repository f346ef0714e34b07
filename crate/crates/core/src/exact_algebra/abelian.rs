//! Finitely generated abelian groups presented by generators and relations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use super::snf::diagonalize;
use super::AlgebraError;

/// The quotient `Z^n / (row span of R)` together with the coordinate change
/// that makes it diagonal.
#[derive(Clone, Debug)]
pub struct AbGroupStructure {
    num_generators: usize,
    /// Diagonal of the Smith form padded with zeros up to `num_generators`.
    diagonal: Vec<BigInt>,
    /// `x * projection` gives Smith coordinates of a generator vector `x`.
    projection: IntMatrix,
    /// Inverse of `projection`.
    lift: IntMatrix,
}

/// A reduced element: free coordinates followed by torsion residues, each
/// in `[0, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElementClass {
    #[serde(with = "crate::json_int::bigint_vec")]
    pub free_part: Vec<BigInt>,
    #[serde(with = "crate::json_int::bigint_vec")]
    pub torsion_part: Vec<BigInt>,
}

impl GroupElementClass {
    pub fn is_zero(&self) -> bool {
        self.free_part.iter().all(Zero::is_zero) && self.torsion_part.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for GroupElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigInt]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "free=({}) torsion=({})",
            join(&self.free_part),
            join(&self.torsion_part)
        )
    }
}

/// Presents `Z^num_generators / span(relations)`, relations given as rows.
pub fn present_quotient(
    num_generators: usize,
    relations: &IntMatrix,
) -> Result<AbGroupStructure, AlgebraError> {
    if relations.cols() != num_generators {
        return Err(AlgebraError::ShapeMismatch {
            expected: num_generators,
            found: relations.cols(),
        });
    }
    let d = diagonalize(relations, false);
    let mut diagonal = d.s.diagonal();
    diagonal.resize(num_generators, BigInt::zero());
    Ok(AbGroupStructure {
        num_generators,
        diagonal,
        projection: d.v,
        lift: d.v_inv,
    })
}

impl AbGroupStructure {
    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn free_rank(&self) -> usize {
        self.diagonal.iter().filter(|d| d.is_zero()).count()
    }

    /// Invariant factors greater than one, ascending in divisibility order.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    /// All nonzero Smith diagonal entries, units included.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero())
            .cloned()
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank() == 0 && self.torsion().is_empty()
    }

    /// Smith coordinates of `x`, reduced to canonical form.
    pub fn reduce_element(&self, x: &[BigInt]) -> Result<GroupElementClass, AlgebraError> {
        let y = self.projection.left_apply(x)?;
        let mut free_part = Vec::new();
        let mut torsion_part = Vec::new();
        for (yi, di) in y.into_iter().zip(&self.diagonal) {
            if di.is_zero() {
                free_part.push(yi);
            } else if !di.is_one() {
                torsion_part.push(yi.mod_floor(di));
            }
        }
        Ok(GroupElementClass {
            free_part,
            torsion_part,
        })
    }

    pub fn reduce_i64(&self, x: &[i64]) -> Result<GroupElementClass, AlgebraError> {
        let v: Vec<BigInt> = x.iter().map(|&a| BigInt::from(a)).collect();
        self.reduce_element(&v)
    }

    /// A generator vector representing the class.
    pub fn lift(&self, class: &GroupElementClass) -> Result<Vec<BigInt>, AlgebraError> {
        if class.free_part.len() != self.free_rank()
            || class.torsion_part.len() != self.torsion().len()
        {
            return Err(AlgebraError::ShapeMismatch {
                expected: self.free_rank() + self.torsion().len(),
                found: class.free_part.len() + class.torsion_part.len(),
            });
        }
        let mut free = class.free_part.iter();
        let mut tors = class.torsion_part.iter();
        let y: Vec<BigInt> = self
            .diagonal
            .iter()
            .map(|d| {
                if d.is_zero() {
                    free.next().cloned().unwrap_or_default()
                } else if d.is_one() {
                    BigInt::zero()
                } else {
                    tors.next().cloned().unwrap_or_default()
                }
            })
            .collect();
        self.lift.left_apply(&y)
    }

    pub fn add(
        &self,
        a: &GroupElementClass,
        b: &GroupElementClass,
    ) -> Result<GroupElementClass, AlgebraError> {
        let x: Vec<BigInt> = self
            .lift(a)?
            .into_iter()
            .zip(self.lift(b)?)
            .map(|(p, q)| p + q)
            .collect();
        self.reduce_element(&x)
    }
}

impl fmt::Display for AbGroupStructure {
    /// Writes e.g. `Z^7 ⊕ (Z/2)^4 ⊕ Z/12`; the trivial group is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let torsion = self.torsion();
        let mut i = 0;
        while i < torsion.len() {
            let mut j = i;
            while j < torsion.len() && torsion[j] == torsion[i] {
                j += 1;
            }
            let count = j - i;
            if count == 1 {
                parts.push(format!("Z/{}", torsion[i]));
            } else {
                parts.push(format!("(Z/{})^{}", torsion[i], count));
            }
            i = j;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}
