//! Procedural turntable objects. Every family is a parametric grid surface
//! whose shape and material fields derive deterministically from the seed;
//! no RNG streams are involved, so outputs are bitwise reproducible.

use super::{MaterialGrid, ObjectFamily, SceneObject, SvbrdfParams};
use crate::error::Result;
use crate::geom::{orthonormal_tangent, Vec2, Vec3};
use crate::noise::fbm;

const GRID_U: usize = 96;
const GRID_V: usize = 48;
const MATERIAL_RES: usize = 192;
/// All vertices are kept inside this radius; the contract is 0.5.
const MAX_RADIUS: f64 = 0.46;
const PARAM_EPS: f64 = 1e-4;

fn mix(seed: u64, salt: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt.wrapping_mul(0xff51_afd7_ed55_8ccd)
}

/// Hash-derived scalar in [0, 1).
fn h01(seed: u64, salt: u64) -> f64 {
    let mut x = mix(seed, salt);
    x ^= x >> 33;
    x = x.wrapping_mul(0xc4ce_b9fe_1a85_ec53);
    x ^= x >> 29;
    (x >> 11) as f64 / (1u64 << 53) as f64
}

pub fn generate_scene(seed: u64, family: ObjectFamily) -> Result<SceneObject> {
    let surface = Surface::new(seed, family);
    let wrap_v = matches!(family, ObjectFamily::Torus);

    // Probe the grid for the largest radius, then bake a uniform rescale so
    // the object honors the bounding-sphere contract for every seed.
    let mut max_norm = 0.0f64;
    for iv in 0..=GRID_V {
        for iu in 0..GRID_U {
            let p = surface.position(iu as f64 / GRID_U as f64, iv as f64 / GRID_V as f64);
            max_norm = max_norm.max(p.norm());
        }
    }
    let scale = if max_norm > MAX_RADIUS {
        MAX_RADIUS / max_norm
    } else {
        1.0
    };

    let pos = |u: f64, v: f64| surface.position(u, v) * scale;

    let n_rows = GRID_V + 1;
    let mut vertices = Vec::with_capacity(n_rows * GRID_U);
    let mut normals = Vec::with_capacity(n_rows * GRID_U);
    let mut tangents = Vec::with_capacity(n_rows * GRID_U);
    let mut uv = Vec::with_capacity(n_rows * GRID_U);
    for iv in 0..=GRID_V {
        let v = iv as f64 / GRID_V as f64;
        // Frames are evaluated slightly inside the parameter domain so the
        // pole rows still get a well-defined normal.
        let v_frame = if wrap_v {
            v
        } else {
            v.clamp(PARAM_EPS, 1.0 - PARAM_EPS)
        };
        for iu in 0..GRID_U {
            let u = iu as f64 / GRID_U as f64;
            vertices.push(pos(u, v));
            let du = (pos(u + PARAM_EPS, v_frame) - pos(u - PARAM_EPS, v_frame)) / (2.0 * PARAM_EPS);
            let dv = (pos(u, v_frame + PARAM_EPS) - pos(u, v_frame - PARAM_EPS)) / (2.0 * PARAM_EPS);
            let n = du.cross(&dv).normalize();
            tangents.push(orthonormal_tangent(&n, &du));
            normals.push(n);
            uv.push(Vec2::new(u, v));
        }
    }

    let idx = |iv: usize, iu: usize| -> u32 {
        let row = if wrap_v { iv % GRID_V } else { iv };
        (row * GRID_U + iu % GRID_U) as u32
    };
    let mut triangles = Vec::with_capacity(GRID_V * GRID_U * 2);
    for iv in 0..GRID_V {
        for iu in 0..GRID_U {
            let a = idx(iv, iu);
            let b = idx(iv + 1, iu);
            let c = idx(iv + 1, iu + 1);
            let d = idx(iv, iu + 1);
            for tri in [[a, b, c], [a, c, d]] {
                let p0 = vertices[tri[0] as usize];
                let p1 = vertices[tri[1] as usize];
                let p2 = vertices[tri[2] as usize];
                let area = 0.5 * (p1 - p0).cross(&(p2 - p0)).norm();
                if area > 1e-12 {
                    triangles.push(tri);
                }
            }
        }
    }

    // Drop the duplicated closing row for wrapped-v meshes.
    if wrap_v {
        vertices.truncate(GRID_V * GRID_U);
        normals.truncate(GRID_V * GRID_U);
        tangents.truncate(GRID_V * GRID_U);
        uv.truncate(GRID_V * GRID_U);
    }

    let material = generate_material(seed);
    Ok(SceneObject::from_mesh(
        seed, family, vertices, triangles, normals, tangents, uv, material,
    ))
}

struct Surface {
    family: ObjectFamily,
    seed: u64,
    radius: f64,
    torus_major: f64,
    torus_minor: f64,
    blob_amp: f64,
    blob_freq: f64,
    se_exp: (f64, f64),
    se_axes: Vec3,
}

impl Surface {
    fn new(seed: u64, family: ObjectFamily) -> Surface {
        Surface {
            family,
            seed,
            radius: 0.32 + 0.13 * h01(seed, 1),
            torus_major: 0.24 + 0.08 * h01(seed, 2),
            torus_minor: 0.07 + 0.07 * h01(seed, 3),
            blob_amp: 0.18 + 0.12 * h01(seed, 4),
            blob_freq: 2.2 + 1.6 * h01(seed, 5),
            se_exp: (0.35 + 1.1 * h01(seed, 6), 0.35 + 1.1 * h01(seed, 7)),
            se_axes: Vec3::new(
                0.24 + 0.16 * h01(seed, 8),
                0.24 + 0.16 * h01(seed, 9),
                0.24 + 0.16 * h01(seed, 10),
            ),
        }
    }

    fn position(&self, u: f64, v: f64) -> Vec3 {
        match self.family {
            ObjectFamily::Sphere => self.sphere_dir(u, v) * self.radius,
            ObjectFamily::Torus => {
                let phi = std::f64::consts::TAU * u;
                let psi = std::f64::consts::TAU * v;
                let ring = self.torus_major + self.torus_minor * psi.cos();
                Vec3::new(
                    ring * phi.cos(),
                    ring * phi.sin(),
                    self.torus_minor * psi.sin(),
                )
            }
            ObjectFamily::Blob => {
                let dir = self.sphere_dir(u, v);
                let f = self.blob_freq;
                let n = fbm(
                    mix(self.seed, 11),
                    [dir.x * f + 7.3, dir.y * f + 2.9, dir.z * f + 4.1],
                    3,
                );
                let r = 0.30 * (1.0 + self.blob_amp * (2.0 * n - 1.0));
                dir * r
            }
            ObjectFamily::Superellipsoid => {
                let phi = std::f64::consts::TAU * (u - 0.5);
                let psi = std::f64::consts::PI * (v - 0.5);
                let (e1, e2) = self.se_exp;
                let sc = |w: f64, m: f64| {
                    let c = w.cos();
                    c.signum() * c.abs().powf(m)
                };
                let ss = |w: f64, m: f64| {
                    let s = w.sin();
                    s.signum() * s.abs().powf(m)
                };
                Vec3::new(
                    self.se_axes.x * sc(psi, e1) * sc(phi, e2),
                    self.se_axes.y * sc(psi, e1) * ss(phi, e2),
                    self.se_axes.z * ss(psi, e1),
                )
            }
        }
    }

    fn sphere_dir(&self, u: f64, v: f64) -> Vec3 {
        let theta = std::f64::consts::PI * v;
        let phi = std::f64::consts::TAU * u;
        Vec3::new(
            theta.sin() * phi.cos(),
            theta.sin() * phi.sin(),
            theta.cos(),
        )
    }
}

/// Noise-driven texture stack: each material field gets its own seed and
/// frequency so no two fields correlate. The u axis is sampled on a circle
/// embedding to avoid a wrap seam.
fn generate_material(seed: u64) -> MaterialGrid {
    let mut texels = Vec::with_capacity(MATERIAL_RES * MATERIAL_RES);
    let field = |fi: u64, u: f64, v: f64| -> f64 {
        let f = 2.0 + 4.0 * h01(seed, 100 + fi);
        let ang = std::f64::consts::TAU * u;
        let p = [
            ang.cos() * f * 0.5 + 3.7,
            ang.sin() * f * 0.5 + 1.3,
            v * f + 9.2,
        ];
        fbm(mix(seed, 200 + fi), p, 3)
    };
    for iy in 0..MATERIAL_RES {
        let v = (iy as f64 + 0.5) / MATERIAL_RES as f64;
        for ix in 0..MATERIAL_RES {
            let u = (ix as f64 + 0.5) / MATERIAL_RES as f64;
            let params = SvbrdfParams {
                diffuse_albedo: [
                    0.12 + 0.75 * field(0, u, v),
                    0.12 + 0.75 * field(1, u, v),
                    0.12 + 0.75 * field(2, u, v),
                ],
                specular_albedo: [
                    0.02 + 0.38 * field(3, u, v),
                    0.02 + 0.38 * field(4, u, v),
                    0.02 + 0.38 * field(5, u, v),
                ],
                roughness_x: 0.06 + 0.70 * field(6, u, v),
                roughness_y: 0.06 + 0.70 * field(7, u, v),
                tangent_rotation: (field(8, u, v) - 0.5) * std::f64::consts::PI * 0.9,
            };
            texels.push(params.clamped().0);
        }
    }
    MaterialGrid {
        resolution: MATERIAL_RES,
        texels,
    }
}
