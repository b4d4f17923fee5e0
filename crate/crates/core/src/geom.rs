//! Small geometry helpers shared by the scene and photometry modules.

pub type Vec3 = nalgebra::Vector3<f64>;
pub type Vec2 = nalgebra::Vector2<f64>;

/// Rotation about the turntable axis (+z), angle in degrees.
pub fn rotate_z(v: &Vec3, theta_deg: f64) -> Vec3 {
    let r = theta_deg.to_radians();
    let (s, c) = r.sin_cos();
    Vec3::new(c * v.x - s * v.y, s * v.x + c * v.y, v.z)
}

/// Orthonormalize `t` against unit `n` (Gram-Schmidt), with a deterministic
/// fallback axis when `t` is parallel to `n`.
pub fn orthonormal_tangent(n: &Vec3, t: &Vec3) -> Vec3 {
    let mut out = t - n * n.dot(t);
    if out.norm_squared() < 1e-12 {
        // Pick the world axis least aligned with n.
        let axis = if n.x.abs() <= n.y.abs() && n.x.abs() <= n.z.abs() {
            Vec3::x()
        } else if n.y.abs() <= n.z.abs() {
            Vec3::y()
        } else {
            Vec3::z()
        };
        out = axis - n * n.dot(&axis);
    }
    out.normalize()
}

pub fn max3(a: f64, b: f64, c: f64) -> f64 {
    a.max(b).max(c)
}

pub fn min3(a: f64, b: f64, c: f64) -> f64 {
    a.min(b).min(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rotate_z_quarter_turn() {
        let v = rotate_z(&Vec3::x(), 90.0);
        assert_relative_eq!(v.x, 0.0, epsilon = 1e-12);
        assert_relative_eq!(v.y, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn tangent_fallback_is_perpendicular() {
        let n = Vec3::z();
        let t = orthonormal_tangent(&n, &Vec3::z());
        assert!(n.dot(&t).abs() < 1e-12);
        assert_relative_eq!(t.norm(), 1.0, epsilon = 1e-12);
    }
}
