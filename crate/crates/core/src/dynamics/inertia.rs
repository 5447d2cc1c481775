use nalgebra::{Matrix6, Vector6};
use serde::{Deserialize, Serialize};

use crate::error::{PgaError, Result};
use crate::kernel::{Multivector, TOL};
use crate::pga3d::{bivector_coords, Point3, BIVECTOR_BASIS};

/// Relative singular-value cutoff for rank and pseudo-inverse.
pub const RANK_TOL: f64 = 1e-12;

/// The inertia map `A` from velocity bivectors to momentum bivectors.
///
/// Stored as the symmetric matrix `K` of the quadratic form
/// `Omega^T K Omega = -2 <Omega ^ A(Omega)>_4`, on coordinates in
/// [`BIVECTOR_BASIS`] order. The wedge pairing of a bivector with its
/// complement (`e01 ^ e23 = e02 ^ e31 = e03 ^ e12 = I`) turns the coordinate
/// map `M` of `A` into `K = -2 J M`, where `J` swaps the two halves.
/// The kinetic energy is `Omega^T K Omega / 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct InertiaMap {
    k: Matrix6<f64>,
    map: Matrix6<f64>,
    inverse: Matrix6<f64>,
    rank: usize,
}

fn swap_halves() -> Matrix6<f64> {
    let mut j = Matrix6::zeros();
    for i in 0..3 {
        j[(i, i + 3)] = 1.0;
        j[(i + 3, i)] = 1.0;
    }
    j
}

impl InertiaMap {
    /// Build from a symmetric form matrix `K` (row-major).
    pub fn from_matrix(k: [[f64; 6]; 6]) -> Result<Self> {
        let k = Matrix6::from_fn(|i, j| k[i][j]);
        if k.iter().any(|v| !v.is_finite()) {
            return Err(PgaError::InvalidParameter("inertia matrix is not finite".into()));
        }
        let scale = k.amax().max(f64::MIN_POSITIVE);
        if (k - k.transpose()).amax() > TOL * scale {
            return Err(PgaError::InvalidParameter("inertia matrix is not symmetric".into()));
        }
        Ok(Self::from_symmetric(0.5 * (k + k.transpose())))
    }

    fn from_symmetric(k: Matrix6<f64>) -> Self {
        let j = swap_halves();
        let map = -0.5 * j * k;
        let svd = k.svd(true, true);
        let cutoff = RANK_TOL * svd.singular_values.max();
        let rank = svd.singular_values.iter().filter(|s| **s > cutoff).count();
        let k_pinv = svd
            .pseudo_inverse(cutoff.max(f64::MIN_POSITIVE))
            .unwrap_or_else(|_| Matrix6::zeros());
        // M^+ = (-J K / 2)^+ = -2 K^+ J since J is orthogonal.
        let inverse = -2.0 * k_pinv * j;
        Self {
            k,
            map,
            inverse,
            rank,
        }
    }

    /// Sum of point-mass momenta `m (P v P')` with `P' = 2 [Omega, P]`,
    /// assembled column by column from the basis bivectors.
    pub fn from_point_masses(particles: &[(f64, Point3)]) -> Result<Self> {
        let mut total = 0.0;
        for (m, p) in particles {
            if !(m.is_finite() && *m >= 0.0) {
                return Err(PgaError::InvalidParameter(format!("mass {m} must be finite and >= 0")));
            }
            if p.is_ideal() {
                return Err(PgaError::IdealArgument("inertia_from_point_masses"));
            }
            total += m;
        }
        if total <= 0.0 {
            return Err(PgaError::ZeroInput("inertia_from_point_masses"));
        }
        let alg = crate::kernel::pga3();
        let points: Vec<(f64, Multivector)> = particles
            .iter()
            .map(|(m, p)| (*m, p.normalize().map(|p| p.into_mv())))
            .map(|(m, p)| p.map(|p| (m, p)))
            .collect::<Result<_>>()?;
        let mut map = Matrix6::zeros();
        for (j, (blade, sign)) in BIVECTOR_BASIS.iter().enumerate() {
            let b = Multivector::blade(&alg, *blade, *sign);
            let mut acc = Multivector::zero(&alg);
            for (m, p) in &points {
                let vel = &(&b * p) - &(p * &b);
                acc += &((p & &vel) * *m);
            }
            let c = bivector_coords(&acc);
            for (i, v) in c.iter().enumerate() {
                map[(i, j)] = *v;
            }
        }
        let k = -2.0 * swap_halves() * map;
        Ok(Self::from_symmetric(0.5 * (k + k.transpose())))
    }

    /// Form matrix `K`, row-major.
    pub fn matrix(&self) -> [[f64; 6]; 6] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.k[(i, j)]))
    }

    /// Coordinate matrix `M` of `A`, row-major.
    pub fn map_matrix(&self) -> [[f64; 6]; 6] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.map[(i, j)]))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank == 6
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::from_symmetric(self.k * s)
    }

    pub fn apply_coords(&self, omega: &[f64; 6]) -> [f64; 6] {
        (self.map * Vector6::from_column_slice(omega)).into()
    }

    /// Pseudo-inverse on coordinates.
    pub fn apply_inverse_coords(&self, momentum: &[f64; 6]) -> [f64; 6] {
        (self.inverse * Vector6::from_column_slice(momentum)).into()
    }

    /// `A(Omega)`.
    pub fn apply(&self, omega: &Multivector) -> Multivector {
        crate::pga3d::bivector(self.apply_coords(&bivector_coords(omega)))
    }

    /// `A^{-1}(Pi)` on the nondegenerate subspace.
    pub fn apply_inverse(&self, momentum: &Multivector) -> Multivector {
        crate::pga3d::bivector(self.apply_inverse_coords(&bivector_coords(momentum)))
    }

    /// `Omega^T K Omega / 2`.
    pub fn energy_coords(&self, omega: &[f64; 6]) -> f64 {
        let w = Vector6::from_column_slice(omega);
        0.5 * w.dot(&(self.k * w))
    }
}

/// Free function form of [`InertiaMap::from_point_masses`].
pub fn inertia_from_point_masses(particles: &[(f64, Point3)]) -> Result<InertiaMap> {
    InertiaMap::from_point_masses(particles)
}

#[derive(Serialize, Deserialize)]
struct InertiaRepr {
    matrix: [[f64; 6]; 6],
}

impl Serialize for InertiaMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        InertiaRepr {
            matrix: self.matrix(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for InertiaMap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = InertiaRepr::deserialize(d)?;
        InertiaMap::from_matrix(r.matrix).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pga3d::point3;

    fn octahedron(m: f64) -> Vec<(f64, Point3)> {
        [
            (1.0, 0.0, 0.0),
            (-1.0, 0.0, 0.0),
            (0.0, 1.0, 0.0),
            (0.0, -1.0, 0.0),
            (0.0, 0.0, 1.0),
            (0.0, 0.0, -1.0),
        ]
        .iter()
        .map(|(x, y, z)| (m, point3(*x, *y, *z)))
        .collect()
    }

    #[test]
    fn single_mass_has_translational_rank() {
        let a = inertia_from_point_masses(&[(1.0, point3(0.0, 0.0, 0.0))]).unwrap();
        assert_eq!(a.rank(), 3);
        // rotations about axes through the mass carry no momentum
        for i in 3..6 {
            let mut w = [0.0; 6];
            w[i] = 1.0;
            assert!(a.apply_coords(&w).iter().all(|v| v.abs() < 1e-15));
        }
    }

    #[test]
    fn octahedral_body_spin_energy() {
        let a = inertia_from_point_masses(&octahedron(1.0)).unwrap();
        assert_eq!(a.rank(), 6);
        let k = a.matrix();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(k[i][j], k[j][i]);
                if i != j {
                    assert!(k[i][j].abs() < 1e-15);
                }
            }
        }
        // body angular velocity omega about z is the bivector -(omega/2) e12
        let w = 0.7;
        let e = a.energy_coords(&[0.0, 0.0, 0.0, 0.0, 0.0, -0.5 * w]);
        assert!((e - 0.5 * 4.0 * w * w).abs() < 1e-15);
    }

    #[test]
    fn linear_in_mass_and_invertible() {
        let a = inertia_from_point_masses(&octahedron(1.0)).unwrap();
        let b = inertia_from_point_masses(&octahedron(2.0)).unwrap();
        let (ka, kb) = (a.matrix(), b.matrix());
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(kb[i][j], 2.0 * ka[i][j]);
            }
        }
        let w = [0.1, -0.2, 0.3, 0.4, 0.5, -0.6];
        let back = a.apply_inverse_coords(&a.apply_coords(&w));
        for i in 0..6 {
            assert!((back[i] - w[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(inertia_from_point_masses(&[]).is_err());
        assert!(inertia_from_point_masses(&[(-1.0, point3(0.0, 0.0, 0.0))]).is_err());
        let mut m = [[0.0; 6]; 6];
        m[0][1] = 1.0;
        assert!(InertiaMap::from_matrix(m).is_err());
    }

    #[test]
    fn serde_roundtrip() {
        let a = inertia_from_point_masses(&octahedron(1.5)).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        let b: InertiaMap = serde_json::from_str(&s).unwrap();
        assert_eq!(a.matrix(), b.matrix());
    }
}
