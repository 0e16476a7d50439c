use crate::closure::ClosureSpace;
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::props::{validate_orthomap, OrthoMap};

use super::universe::ProductUniverse;

/// Factor orthocomplementations together with the induced map on the box
/// product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SharpMap {
    pub factor_maps: Vec<OrthoMap>,
    pub map: OrthoMap,
}

fn checked_factor_maps(u: &ProductUniverse, factor_maps: &[OrthoMap]) -> Result<()> {
    if factor_maps.len() != u.arity() {
        return Err(Error::WrongLength {
            expected: u.arity(),
            got: factor_maps.len(),
        });
    }
    for (beta, m) in factor_maps.iter().enumerate() {
        validate_orthomap(u.factor(beta), m)
            .map_err(|v| Error::InvalidOrthoMap(format!("factor {beta}: {v:?}")))?;
    }
    Ok(())
}

/// `p^# = ⋃_α π_α^{-1}(p_α^⊥)`.
fn sharp_point(u: &ProductUniverse, factor_maps: &[OrthoMap], p: usize) -> PointSet {
    let images: Vec<PointSet> = (0..u.arity())
        .map(|b| factor_maps[b].apply(u.factor(b), PointSet::singleton(u.coord(p, b))))
        .collect();
    u.cross(&images)
}

/// `a^# = ⋂_{p ∈ a} p^#`, with `0^# = 1`.
pub fn sharp(u: &ProductUniverse, factor_maps: &[OrthoMap], a: PointSet) -> Result<PointSet> {
    checked_factor_maps(u, factor_maps)?;
    if !a.is_subset(u.full()) {
        return Err(Error::OutOfUniverse(a));
    }
    Ok(a.iter()
        .map(|p| sharp_point(u, factor_maps, p))
        .fold(u.full(), PointSet::intersection))
}

/// The `#` map on every element of `boxed`. The result is not validated
/// here; callers run [`validate_orthomap`] on it.
pub fn sharp_map(
    u: &ProductUniverse,
    boxed: &ClosureSpace,
    factor_maps: &[OrthoMap],
) -> Result<SharpMap> {
    checked_factor_maps(u, factor_maps)?;
    if boxed.n() != u.n() {
        return Err(Error::DimensionMismatch {
            expected: u.n(),
            got: boxed.n(),
        });
    }
    let atom_images: Vec<PointSet> = (0..u.n()).map(|p| sharp_point(u, factor_maps, p)).collect();
    let map = OrthoMap::from_atom_images(boxed, &atom_images)?;
    Ok(SharpMap {
        factor_maps: factor_maps.to_vec(),
        map,
    })
}
