//! Procedural objects on a virtual turntable: cameras, poses, meshes with
//! spatially varying GGX materials, and per-view attribute maps produced by
//! ray casting.

pub mod attr_io;
pub mod bvh;
pub mod procgen;

use crate::error::{DiftError, Result};
use crate::geom::{orthonormal_tangent, rotate_z, Vec2, Vec3};
use bvh::Bvh;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const ROUGHNESS_FLOOR: f64 = 0.01;

/// Pinhole camera. Pixel x grows along `right`, pixel y grows downward
/// (against `up`); pixel (ix, iy) samples through its center.
#[derive(Debug, Clone)]
pub struct Camera {
    pub position: Vec3,
    pub forward: Vec3,
    pub up: Vec3,
    pub right: Vec3,
    pub focal_px: f64,
    pub principal_point: Vec2,
    pub resolution: (u32, u32),
}

impl Camera {
    pub fn new(
        position: Vec3,
        forward: Vec3,
        up: Vec3,
        right: Vec3,
        focal_px: f64,
        principal_point: Vec2,
        resolution: (u32, u32),
    ) -> Result<Camera> {
        let ortho = forward.norm() - 1.0;
        let ortho = ortho.abs().max((up.norm() - 1.0).abs()).max((right.norm() - 1.0).abs());
        let cross = forward
            .dot(&up)
            .abs()
            .max(forward.dot(&right).abs())
            .max(up.dot(&right).abs());
        if ortho > 1e-9 || cross > 1e-9 {
            return Err(DiftError::RejectedInput(
                "camera basis is not orthonormal".into(),
            ));
        }
        if !(focal_px > 0.0) {
            return Err(DiftError::RejectedInput("focal length must be > 0".into()));
        }
        if resolution.0 < 8 || resolution.1 < 8 {
            return Err(DiftError::RejectedInput(
                "camera resolution must be at least 8x8".into(),
            ));
        }
        Ok(Camera {
            position,
            forward,
            up,
            right,
            focal_px,
            principal_point,
            resolution,
        })
    }

    /// Camera looking at `target` from `position`, up as close to +z as the
    /// view direction allows.
    pub fn look_at(
        position: Vec3,
        target: Vec3,
        focal_px: f64,
        resolution: (u32, u32),
    ) -> Result<Camera> {
        let forward = (target - position).normalize();
        let up = orthonormal_tangent(&forward, &Vec3::z());
        let right = forward.cross(&up);
        let principal = Vec2::new(resolution.0 as f64 / 2.0, resolution.1 as f64 / 2.0);
        Camera::new(position, forward, up, right, focal_px, principal, resolution)
    }

    /// Default turntable camera: 45 degrees above the horizontal plane, at
    /// `distance` from the axis, framed so a unit-diameter object spans
    /// `fill` of the smaller image dimension.
    pub fn turntable(resolution: (u32, u32), distance: f64, fill: f64) -> Result<Camera> {
        let e = std::f64::consts::FRAC_1_SQRT_2;
        let position = Vec3::new(distance * e, 0.0, distance * e);
        let focal_px = fill * resolution.0.min(resolution.1) as f64 * distance;
        Camera::look_at(position, Vec3::zeros(), focal_px, resolution)
    }

    /// Ray through the center of pixel (x, y).
    pub fn ray_for_pixel(&self, x: u32, y: u32) -> (Vec3, Vec3) {
        let u = x as f64 + 0.5;
        let v = y as f64 + 0.5;
        let dir = self.forward
            + self.right * ((u - self.principal_point.x) / self.focal_px)
            - self.up * ((v - self.principal_point.y) / self.focal_px);
        (self.position, dir.normalize())
    }

    /// Projects a world point to continuous pixel coordinates; `None` when
    /// the point is behind the camera.
    pub fn project(&self, p: &Vec3) -> Option<(f64, f64)> {
        let d = p - self.position;
        let z = d.dot(&self.forward);
        if z <= 1e-9 {
            return None;
        }
        let u = self.principal_point.x + self.focal_px * d.dot(&self.right) / z;
        let v = self.principal_point.y - self.focal_px * d.dot(&self.up) / z;
        Some((u, v))
    }

    /// The pixel whose center is nearest to continuous coordinates (u, v),
    /// if inside the image.
    pub fn pixel_of(&self, u: f64, v: f64) -> Option<(u32, u32)> {
        if u < 0.0 || v < 0.0 {
            return None;
        }
        let x = u.floor() as u32;
        let y = v.floor() as u32;
        if x < self.resolution.0 && y < self.resolution.1 {
            Some((x, y))
        } else {
            None
        }
    }

    /// Camera rotated rigidly about the turntable axis by `theta_deg`.
    pub fn rotated_about_axis(&self, theta_deg: f64) -> Camera {
        Camera {
            position: rotate_z(&self.position, theta_deg),
            forward: rotate_z(&self.forward, theta_deg),
            up: rotate_z(&self.up, theta_deg),
            right: rotate_z(&self.right, theta_deg),
            focal_px: self.focal_px,
            principal_point: self.principal_point,
            resolution: self.resolution,
        }
    }
}

/// Turntable rotation, wrapped to [0, 360).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurntablePose {
    pub theta_deg: f64,
    pub view_spec: [f64; 2],
}

pub fn rotate_pose(theta_deg: f64) -> Result<TurntablePose> {
    if !theta_deg.is_finite() {
        return Err(DiftError::RejectedInput(format!(
            "turntable angle must be finite, got {theta_deg}"
        )));
    }
    let theta = theta_deg.rem_euclid(360.0);
    let r = theta.to_radians();
    Ok(TurntablePose {
        theta_deg: theta,
        view_spec: [r.cos(), r.sin()],
    })
}

/// Anisotropic GGX material parameters at one surface point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SvbrdfParams {
    pub diffuse_albedo: [f64; 3],
    pub specular_albedo: [f64; 3],
    pub roughness_x: f64,
    pub roughness_y: f64,
    pub tangent_rotation: f64,
}

impl SvbrdfParams {
    pub const ZERO: SvbrdfParams = SvbrdfParams {
        diffuse_albedo: [0.0; 3],
        specular_albedo: [0.0; 3],
        roughness_x: ROUGHNESS_FLOOR,
        roughness_y: ROUGHNESS_FLOOR,
        tangent_rotation: 0.0,
    };

    /// Clamps every field into its contract range. Returns how many
    /// roughness values had to be lifted to the floor.
    pub fn clamped(mut self) -> (SvbrdfParams, u32) {
        let mut lifted = 0;
        for c in 0..3 {
            self.diffuse_albedo[c] = self.diffuse_albedo[c].clamp(0.0, 1.0);
            self.specular_albedo[c] = self.specular_albedo[c].clamp(0.0, 1.0);
        }
        if self.roughness_x < ROUGHNESS_FLOOR {
            self.roughness_x = ROUGHNESS_FLOOR;
            lifted += 1;
        }
        if self.roughness_y < ROUGHNESS_FLOOR {
            self.roughness_y = ROUGHNESS_FLOOR;
            lifted += 1;
        }
        self.roughness_x = self.roughness_x.min(1.0);
        self.roughness_y = self.roughness_y.min(1.0);
        (self, lifted)
    }
}

/// Stable surface-point identity: triangle index plus barycentric
/// coordinates quantized to 1e-4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointId {
    pub tri: u32,
    pub bu: u32,
    pub bv: u32,
}

pub const BARY_QUANTUM: f64 = 1e-4;

impl PointId {
    pub fn quantize(tri: u32, u: f64, v: f64) -> PointId {
        PointId {
            tri,
            bu: (u / BARY_QUANTUM).round() as u32,
            bv: (v / BARY_QUANTUM).round() as u32,
        }
    }

    pub fn barycentric(&self) -> (f64, f64) {
        (self.bu as f64 * BARY_QUANTUM, self.bv as f64 * BARY_QUANTUM)
    }
}

/// Texture grid of material parameters, bilinearly sampled with repeat
/// wrapping.
#[derive(Debug, Clone)]
pub struct MaterialGrid {
    pub resolution: usize,
    pub texels: Vec<SvbrdfParams>,
}

impl MaterialGrid {
    fn texel(&self, x: usize, y: usize) -> &SvbrdfParams {
        &self.texels[y * self.resolution + x]
    }

    pub fn sample(&self, uv: Vec2) -> SvbrdfParams {
        let n = self.resolution as f64;
        let fx = (uv.x.rem_euclid(1.0)) * n - 0.5;
        let fy = (uv.y.rem_euclid(1.0)) * n - 0.5;
        let x0 = fx.floor();
        let y0 = fy.floor();
        let tx = fx - x0;
        let ty = fy - y0;
        let xi = |x: f64| (x.rem_euclid(n)) as usize % self.resolution;
        let (x0i, x1i) = (xi(x0), xi(x0 + 1.0));
        let (y0i, y1i) = (xi(y0), xi(y0 + 1.0));
        let lerp = |a: f64, b: f64, t: f64| a + (b - a) * t;
        let bilerp = |f: &dyn Fn(&SvbrdfParams) -> f64| {
            let a = lerp(f(self.texel(x0i, y0i)), f(self.texel(x1i, y0i)), tx);
            let b = lerp(f(self.texel(x0i, y1i)), f(self.texel(x1i, y1i)), tx);
            lerp(a, b, ty)
        };
        let out = SvbrdfParams {
            diffuse_albedo: [
                bilerp(&|p| p.diffuse_albedo[0]),
                bilerp(&|p| p.diffuse_albedo[1]),
                bilerp(&|p| p.diffuse_albedo[2]),
            ],
            specular_albedo: [
                bilerp(&|p| p.specular_albedo[0]),
                bilerp(&|p| p.specular_albedo[1]),
                bilerp(&|p| p.specular_albedo[2]),
            ],
            roughness_x: bilerp(&|p| p.roughness_x),
            roughness_y: bilerp(&|p| p.roughness_y),
            tangent_rotation: bilerp(&|p| p.tangent_rotation),
        };
        out.clamped().0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectFamily {
    Sphere,
    Torus,
    Blob,
    Superellipsoid,
}

impl ObjectFamily {
    pub const ALL: [ObjectFamily; 4] = [
        ObjectFamily::Sphere,
        ObjectFamily::Torus,
        ObjectFamily::Blob,
        ObjectFamily::Superellipsoid,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ObjectFamily::Sphere => "sphere",
            ObjectFamily::Torus => "torus",
            ObjectFamily::Blob => "blob",
            ObjectFamily::Superellipsoid => "superellipsoid",
        }
    }

    pub fn to_index(self) -> u32 {
        match self {
            ObjectFamily::Sphere => 0,
            ObjectFamily::Torus => 1,
            ObjectFamily::Blob => 2,
            ObjectFamily::Superellipsoid => 3,
        }
    }

    pub fn from_index(i: u32) -> Option<ObjectFamily> {
        ObjectFamily::ALL.get(i as usize).copied()
    }
}

impl std::str::FromStr for ObjectFamily {
    type Err = DiftError;

    fn from_str(s: &str) -> Result<ObjectFamily> {
        match s {
            "sphere" => Ok(ObjectFamily::Sphere),
            "torus" => Ok(ObjectFamily::Torus),
            "blob" => Ok(ObjectFamily::Blob),
            "superellipsoid" => Ok(ObjectFamily::Superellipsoid),
            other => Err(DiftError::RejectedInput(format!(
                "unknown object family \"{other}\" (expected sphere|torus|blob|superellipsoid)"
            ))),
        }
    }
}

impl std::fmt::Display for ObjectFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Triangle mesh with per-vertex shading frames, UVs and a material grid.
/// The mesh is immutable after generation and shared read-only by the
/// renderers.
pub struct SceneObject {
    pub seed: u64,
    pub family: ObjectFamily,
    pub vertices: Vec<Vec3>,
    pub triangles: Vec<[u32; 3]>,
    pub normals: Vec<Vec3>,
    pub tangents: Vec<Vec3>,
    pub uv: Vec<Vec2>,
    pub material: MaterialGrid,
    bvh: Bvh,
}

impl SceneObject {
    pub(crate) fn from_mesh(
        seed: u64,
        family: ObjectFamily,
        vertices: Vec<Vec3>,
        triangles: Vec<[u32; 3]>,
        normals: Vec<Vec3>,
        tangents: Vec<Vec3>,
        uv: Vec<Vec2>,
        material: MaterialGrid,
    ) -> SceneObject {
        let bvh = Bvh::build(&vertices, &triangles, 1e-12);
        SceneObject {
            seed,
            family,
            vertices,
            triangles,
            normals,
            tangents,
            uv,
            material,
            bvh,
        }
    }

    pub fn bvh(&self) -> &Bvh {
        &self.bvh
    }

    /// Object-space position of a quantized surface point.
    pub fn point_position(&self, id: PointId) -> Vec3 {
        let tri = self.triangles[id.tri as usize];
        let (u, v) = id.barycentric();
        let w = 1.0 - u - v;
        self.vertices[tri[0] as usize] * w
            + self.vertices[tri[1] as usize] * u
            + self.vertices[tri[2] as usize] * v
    }
}

/// Per-pixel record of an attribute map. Positions and frames are in world
/// space at the map's pose.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AttributePixel {
    pub x_p: Vec3,
    pub n_p: Vec3,
    pub t_p: Vec3,
    pub svbrdf: SvbrdfParams,
    pub point_id: PointId,
    pub valid: bool,
}

impl AttributePixel {
    pub const INVALID: AttributePixel = AttributePixel {
        x_p: Vec3::new(0.0, 0.0, 0.0),
        n_p: Vec3::new(0.0, 0.0, 0.0),
        t_p: Vec3::new(0.0, 0.0, 0.0),
        svbrdf: SvbrdfParams::ZERO,
        point_id: PointId { tri: 0, bu: 0, bv: 0 },
        valid: false,
    };
}

#[derive(Clone)]
pub struct AttributeMap {
    pub width: u32,
    pub height: u32,
    pub pose: TurntablePose,
    pub pixels: Vec<AttributePixel>,
}

impl AttributeMap {
    pub fn get(&self, x: u32, y: u32) -> &AttributePixel {
        &self.pixels[(y * self.width + x) as usize]
    }

    pub fn valid_pixels(&self) -> impl Iterator<Item = (u32, u32, &AttributePixel)> {
        self.pixels.iter().enumerate().filter_map(move |(i, p)| {
            if p.valid {
                Some((i as u32 % self.width, i as u32 / self.width, p))
            } else {
                None
            }
        })
    }
}

/// Casts one primary ray per pixel against the object rotated to `pose`
/// and records interpolated geometry and materials.
pub fn render_attribute_maps(
    scene: &SceneObject,
    camera: &Camera,
    pose: &TurntablePose,
) -> AttributeMap {
    let (w, h) = camera.resolution;
    let theta = pose.theta_deg;
    let pixels: Vec<AttributePixel> = (0..h)
        .into_par_iter()
        .flat_map_iter(|y| {
            (0..w).map(move |x| {
                let (origin, dir) = camera.ray_for_pixel(x, y);
                shade_primary(scene, theta, &origin, &dir)
            })
        })
        .collect();
    AttributeMap {
        width: w,
        height: h,
        pose: *pose,
        pixels,
    }
}

fn shade_primary(scene: &SceneObject, theta_deg: f64, origin: &Vec3, dir: &Vec3) -> AttributePixel {
    // Rays are traced in object space; the object BVH never moves.
    let o = rotate_z(origin, -theta_deg);
    let d = rotate_z(dir, -theta_deg);
    let Some(hit) = scene.bvh.closest_hit(&o, &d, 1e-9, f64::INFINITY) else {
        return AttributePixel::INVALID;
    };
    let tri = scene.triangles[hit.tri as usize];
    let (i0, i1, i2) = (tri[0] as usize, tri[1] as usize, tri[2] as usize);
    let w0 = 1.0 - hit.u - hit.v;
    let x_obj = scene.vertices[i0] * w0 + scene.vertices[i1] * hit.u + scene.vertices[i2] * hit.v;
    let n_obj = (scene.normals[i0] * w0 + scene.normals[i1] * hit.u + scene.normals[i2] * hit.v)
        .normalize();
    let t_raw = scene.tangents[i0] * w0 + scene.tangents[i1] * hit.u + scene.tangents[i2] * hit.v;
    let t_obj = orthonormal_tangent(&n_obj, &t_raw);
    let uv = scene.uv[i0] * w0 + scene.uv[i1] * hit.u + scene.uv[i2] * hit.v;
    let svbrdf = scene.material.sample(uv);
    AttributePixel {
        x_p: rotate_z(&x_obj, theta_deg),
        n_p: rotate_z(&n_obj, theta_deg),
        t_p: rotate_z(&t_obj, theta_deg),
        svbrdf,
        point_id: PointId::quantize(hit.tri, hit.u, hit.v),
        valid: true,
    }
}

/// Visibility offset along the shadow-ray direction, in scene units.
pub const VISIBILITY_EPS: f64 = 1e-4;

/// True when the open segment from `x_p` (offset by `VISIBILITY_EPS`) to
/// `x_l` hits no triangle of the object at `pose`. Both points are in
/// world space.
pub fn trace_visibility(
    scene: &SceneObject,
    pose: &TurntablePose,
    x_p: &Vec3,
    x_l: &Vec3,
) -> bool {
    let a = rotate_z(x_p, -pose.theta_deg);
    let b = rotate_z(x_l, -pose.theta_deg);
    let seg = b - a;
    let len = seg.norm();
    if len <= VISIBILITY_EPS {
        return true;
    }
    let dir = seg / len;
    let origin = a + dir * VISIBILITY_EPS;
    !scene.bvh.any_hit(&origin, &dir, 0.0, len - VISIBILITY_EPS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn unit_sphere() -> SceneObject {
        procgen::generate_scene(7, ObjectFamily::Sphere).unwrap()
    }

    #[test]
    fn rotate_pose_examples() {
        let p = rotate_pose(0.0).unwrap();
        assert_eq!(p.view_spec, [1.0, 0.0]);
        let p = rotate_pose(90.0).unwrap();
        assert!(p.view_spec[0].abs() < 1e-15);
        assert_relative_eq!(p.view_spec[1], 1.0);
        let p = rotate_pose(360.0).unwrap();
        assert_eq!(p.theta_deg, 0.0);
        assert_eq!(p.view_spec, [1.0, 0.0]);
    }

    #[test]
    fn rotate_pose_rejects_nan() {
        assert!(rotate_pose(f64::NAN).is_err());
    }

    proptest! {
        #[test]
        fn pose_wraps_and_stays_unit(theta in -4000.0f64..4000.0) {
            let p = rotate_pose(theta).unwrap();
            prop_assert!((0.0..360.0).contains(&p.theta_deg));
            let n = (p.view_spec[0].powi(2) + p.view_spec[1].powi(2)).sqrt();
            prop_assert!((n - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn empty_view_is_all_invalid() {
        let scene = unit_sphere();
        // Camera looking away from the object.
        let cam = Camera::look_at(
            Vec3::new(3.0, 0.0, 0.0),
            Vec3::new(6.0, 0.0, 0.0),
            64.0,
            (16, 16),
        )
        .unwrap();
        let map = render_attribute_maps(&scene, &cam, &rotate_pose(0.0).unwrap());
        assert!(map.pixels.iter().all(|p| !p.valid));
    }

    #[test]
    fn center_pixel_normal_faces_camera_on_sphere() {
        let scene = unit_sphere();
        let cam = Camera::turntable((65, 65), 1.7, 0.62).unwrap();
        let map = render_attribute_maps(&scene, &cam, &rotate_pose(0.0).unwrap());
        let p = map.get(32, 32);
        assert!(p.valid);
        let (_, dir) = cam.ray_for_pixel(32, 32);
        // On a sphere the central normal is antiparallel to the view ray.
        assert!((p.n_p + dir).norm() < 1e-3);
    }

    #[test]
    fn maps_periodic_in_full_turns() {
        let scene = unit_sphere();
        let cam = Camera::turntable((16, 16), 1.7, 0.62).unwrap();
        let a = render_attribute_maps(&scene, &cam, &rotate_pose(33.0).unwrap());
        let b = render_attribute_maps(&scene, &cam, &rotate_pose(393.0).unwrap());
        for (pa, pb) in a.pixels.iter().zip(b.pixels.iter()) {
            assert_eq!(pa, pb);
        }
    }

    #[test]
    fn object_rotation_matches_counter_rotated_camera() {
        let scene = unit_sphere();
        let cam = Camera::turntable((32, 32), 1.7, 0.62).unwrap();
        let theta = 47.0;
        let rotated_obj = render_attribute_maps(&scene, &cam, &rotate_pose(theta).unwrap());
        let counter_cam = cam.rotated_about_axis(-theta);
        let rotated_cam = render_attribute_maps(&scene, &counter_cam, &rotate_pose(0.0).unwrap());
        let mut checked = 0;
        for (pa, pb) in rotated_obj.pixels.iter().zip(rotated_cam.pixels.iter()) {
            assert_eq!(pa.valid, pb.valid);
            if pa.valid {
                // Map case A back into the object frame before comparing.
                let back = rotate_z(&pa.x_p, -theta);
                assert!((back - pb.x_p).norm() < 1e-6);
                checked += 1;
            }
        }
        assert!(checked > 50);
    }

    #[test]
    fn tangent_frames_stay_orthogonal() {
        let scene = procgen::generate_scene(3, ObjectFamily::Blob).unwrap();
        let cam = Camera::turntable((48, 48), 1.7, 0.62).unwrap();
        let map = render_attribute_maps(&scene, &cam, &rotate_pose(19.0).unwrap());
        for (_, _, p) in map.valid_pixels() {
            assert!(p.n_p.dot(&p.t_p).abs() < 1e-5);
            assert_relative_eq!(p.n_p.norm(), 1.0, epsilon = 1e-6);
            assert_relative_eq!(p.t_p.norm(), 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn visibility_on_convex_sphere() {
        let scene = unit_sphere();
        let pose = rotate_pose(0.0).unwrap();
        let cam = Camera::turntable((33, 33), 1.7, 0.62).unwrap();
        let map = render_attribute_maps(&scene, &cam, &pose);
        let p = map.get(16, 16);
        assert!(p.valid);
        // Light on the normal hemisphere is visible from a convex surface.
        let light = p.x_p + p.n_p * 0.8;
        assert!(trace_visibility(&scene, &pose, &p.x_p, &light));
        // Light on the opposite side of the object is occluded.
        let blocked = p.x_p - p.n_p * 1.5;
        assert!(!trace_visibility(&scene, &pose, &p.x_p, &blocked));
        // Degenerate short segment just above the surface.
        let near = p.x_p + p.n_p * VISIBILITY_EPS;
        assert!(trace_visibility(&scene, &pose, &p.x_p, &near));
    }

    #[test]
    fn light_behind_plate_is_occluded() {
        // A thin quad between the point and the light.
        let vertices = vec![
            Vec3::new(-0.3, -0.3, 0.1),
            Vec3::new(0.3, -0.3, 0.1),
            Vec3::new(0.3, 0.3, 0.1),
            Vec3::new(-0.3, 0.3, 0.1),
        ];
        let triangles = vec![[0u32, 1, 2], [0, 2, 3]];
        let normals = vec![Vec3::z(); 4];
        let tangents = vec![Vec3::x(); 4];
        let uv = vec![Vec2::zeros(); 4];
        let material = MaterialGrid {
            resolution: 1,
            texels: vec![SvbrdfParams::ZERO],
        };
        let plate = SceneObject::from_mesh(
            0,
            ObjectFamily::Sphere,
            vertices,
            triangles,
            normals,
            tangents,
            uv,
            material,
        );
        let pose = rotate_pose(0.0).unwrap();
        let p = Vec3::new(0.0, 0.0, 0.0);
        assert!(!trace_visibility(&plate, &pose, &p, &Vec3::new(0.0, 0.0, 1.0)));
        assert!(trace_visibility(&plate, &pose, &p, &Vec3::new(0.0, 0.0, -1.0)));
    }
}
