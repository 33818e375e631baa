use super::unimodular::{cross3, norm3};
use super::{classify_operator, Axis, Unimodular};
use crate::error::{Error, Result};
use crate::tolerance;

/// Finds a direction `n` such that every element of `set` either commutes
/// or anticommutes with `n·σ`, i.e. the set is teleportable after a fixed
/// change of basis taking `n` to ẑ.
///
/// Operators within tolerance of ±𝟙 are ignored. A set made only of such
/// operators returns ẑ.
pub fn find_common_axis(set: &[Unimodular]) -> Result<Option<Axis>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let informative: Vec<&Unimodular> = set.iter().filter(|u| !u.is_scalar()).collect();
    if informative.is_empty() {
        return Ok(Some(Axis::Z));
    }

    let fits = |n: &Axis| {
        informative
            .iter()
            .all(|u| classify_operator(u, n).is_teleportable())
    };

    // A rotation by an angle other than π can only commute with its own axis.
    if let Some(u) = informative
        .iter()
        .find(|u| u.cos_half_angle().abs() > tolerance::EQUALITY)
    {
        let n = Axis::normalized(u.rotation_vector())?;
        return Ok(fits(&n).then(|| n.canonical()));
    }

    // Only π-rotations remain: n is parallel or orthogonal to each of their
    // axes, so it is one of those axes or the normal of two of them.
    let axes: Vec<[f64; 3]> = informative.iter().map(|u| u.rotation_vector()).collect();
    let mut candidates: Vec<Axis> = Vec::new();
    for (i, a) in axes.iter().enumerate() {
        candidates.push(Axis::normalized(*a)?);
        for b in &axes[i + 1..] {
            let c = cross3(*a, *b);
            if norm3(c) > tolerance::EQUALITY {
                candidates.push(Axis::normalized(c)?);
            }
        }
    }
    Ok(candidates
        .into_iter()
        .find(|n| fits(n))
        .map(|n| n.canonical()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn z_rotations_give_z() {
        let set: Vec<_> = [0.1, 0.9, -2.0]
            .iter()
            .map(|p| Unimodular::rz(*p))
            .collect();
        assert_eq!(find_common_axis(&set).unwrap(), Some(Axis::Z));
    }

    #[test]
    fn incompatible_rotations_give_none() {
        let set = vec![
            Unimodular::from_axis_angle(&Axis::X, PI / 3.0),
            Unimodular::from_axis_angle(&Axis::Z, PI / 5.0),
        ];
        assert_eq!(find_common_axis(&set).unwrap(), None);
    }

    #[test]
    fn pi_rotations_in_a_plane_give_its_normal() {
        let set = vec![
            Unimodular::i_sigma_x(),
            Unimodular::i_sigma_y(),
            Unimodular::anticommuting(0.3),
        ];
        let n = find_common_axis(&set).unwrap().unwrap();
        assert!(n.line_angle(&Axis::Z) < 1e-12);
    }

    #[test]
    fn scalars_are_ignored() {
        let minus_one = Unimodular::rz(PI);
        let set = vec![
            minus_one,
            Unimodular::identity(),
            Unimodular::from_axis_angle(&Axis::Y, 0.4),
        ];
        let n = find_common_axis(&set).unwrap().unwrap();
        assert!(n.line_angle(&Axis::Y) < 1e-12);
        assert_eq!(
            find_common_axis(&[Unimodular::identity()]).unwrap(),
            Some(Axis::Z)
        );
    }

    #[test]
    fn empty_set_is_an_error() {
        assert_eq!(find_common_axis(&[]), Err(Error::EmptySet));
    }
}
