//! Attribute-map container (`DIFTATTR`).
//!
//! Layout, little-endian:
//! ```text
//! magic    8 bytes  "DIFTATTR"
//! version  u32      = 1
//! width    u32
//! height   u32
//! theta    f64      degrees in [0, 360)
//! fields   u32 count, then per field: name (u32 len + utf8), components u32
//! validity ceil(w*h/8) bytes, LSB-first, pixel index = y*width + x
//! records  w*h * 21 f32, row-major; invalid pixels are all zeros
//! ```

use super::{rotate_pose, AttributeMap, AttributePixel, PointId, SvbrdfParams};
use crate::binio;
use crate::error::{DiftError, Result};
use crate::geom::Vec3;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

const MAGIC: &[u8; 8] = b"DIFTATTR";
const VERSION: u32 = 1;
const FIELDS: &[(&str, u32)] = &[
    ("x_p", 3),
    ("n_p", 3),
    ("t_p", 3),
    ("diffuse_albedo", 3),
    ("specular_albedo", 3),
    ("roughness_x", 1),
    ("roughness_y", 1),
    ("tangent_rotation", 1),
    ("point_id", 3),
];
const RECORD_LEN: usize = 21;

fn push_vec3(out: &mut Vec<f32>, v: &Vec3) {
    out.push(v.x as f32);
    out.push(v.y as f32);
    out.push(v.z as f32);
}

pub fn save_attribute_map(map: &AttributeMap, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| DiftError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let io = |e| DiftError::io(path, e);

    binio::write_magic(&mut w, MAGIC).map_err(io)?;
    binio::write_u32(&mut w, VERSION).map_err(io)?;
    binio::write_u32(&mut w, map.width).map_err(io)?;
    binio::write_u32(&mut w, map.height).map_err(io)?;
    binio::write_f64(&mut w, map.pose.theta_deg).map_err(io)?;
    binio::write_u32(&mut w, FIELDS.len() as u32).map_err(io)?;
    for (name, comps) in FIELDS {
        binio::write_string(&mut w, name).map_err(io)?;
        binio::write_u32(&mut w, *comps).map_err(io)?;
    }

    let validity: Vec<bool> = map.pixels.iter().map(|p| p.valid).collect();
    w.write_all(&binio::pack_bits(&validity)).map_err(io)?;

    let mut record = Vec::with_capacity(RECORD_LEN);
    for p in &map.pixels {
        record.clear();
        if p.valid {
            push_vec3(&mut record, &p.x_p);
            push_vec3(&mut record, &p.n_p);
            push_vec3(&mut record, &p.t_p);
            record.extend(p.svbrdf.diffuse_albedo.iter().map(|v| *v as f32));
            record.extend(p.svbrdf.specular_albedo.iter().map(|v| *v as f32));
            record.push(p.svbrdf.roughness_x as f32);
            record.push(p.svbrdf.roughness_y as f32);
            record.push(p.svbrdf.tangent_rotation as f32);
            record.push(p.point_id.tri as f32);
            record.push(p.point_id.bu as f32);
            record.push(p.point_id.bv as f32);
        } else {
            record.resize(RECORD_LEN, 0.0);
        }
        binio::write_f32_slice(&mut w, &record).map_err(io)?;
    }
    w.flush().map_err(io)?;
    Ok(())
}

pub fn load_attribute_map(path: &Path) -> Result<AttributeMap> {
    let file = File::open(path).map_err(|e| DiftError::io(path, e))?;
    let mut r = BufReader::new(file);
    let corrupt = |reason: &str| DiftError::corrupt(path, reason);

    if !binio::check_magic(&mut r, MAGIC).map_err(|_| corrupt("short header"))? {
        return Err(corrupt("bad magic (expected DIFTATTR)"));
    }
    let version = binio::read_u32(&mut r).map_err(|_| corrupt("short header"))?;
    if version != VERSION {
        return Err(corrupt(&format!("unsupported version {version}")));
    }
    let width = binio::read_u32(&mut r).map_err(|_| corrupt("short header"))?;
    let height = binio::read_u32(&mut r).map_err(|_| corrupt("short header"))?;
    let theta = binio::read_f64(&mut r).map_err(|_| corrupt("short header"))?;
    let nfields = binio::read_u32(&mut r).map_err(|_| corrupt("short header"))? as usize;
    if nfields != FIELDS.len() {
        return Err(corrupt("unexpected field list"));
    }
    for (name, comps) in FIELDS {
        let got = binio::read_string(&mut r, 64).map_err(|_| corrupt("short field list"))?;
        let got_comps = binio::read_u32(&mut r).map_err(|_| corrupt("short field list"))?;
        if got != *name || got_comps != *comps {
            return Err(corrupt(&format!(
                "field mismatch: expected {name}:{comps}, got {got}:{got_comps}"
            )));
        }
    }

    let n = (width as usize) * (height as usize);
    let mut mask = vec![0u8; n.div_ceil(8)];
    std::io::Read::read_exact(&mut r, &mut mask).map_err(|_| corrupt("truncated validity"))?;
    let validity = binio::unpack_bits(&mask, n);

    let mut pixels = Vec::with_capacity(n);
    for &valid in validity.iter().take(n) {
        let rec = binio::read_f32_vec(&mut r, RECORD_LEN).map_err(|_| corrupt("truncated records"))?;
        if !valid {
            pixels.push(AttributePixel::INVALID);
            continue;
        }
        let v3 = |i: usize| Vec3::new(rec[i] as f64, rec[i + 1] as f64, rec[i + 2] as f64);
        pixels.push(AttributePixel {
            x_p: v3(0),
            n_p: v3(3),
            t_p: v3(6),
            svbrdf: SvbrdfParams {
                diffuse_albedo: [rec[9] as f64, rec[10] as f64, rec[11] as f64],
                specular_albedo: [rec[12] as f64, rec[13] as f64, rec[14] as f64],
                roughness_x: rec[15] as f64,
                roughness_y: rec[16] as f64,
                tangent_rotation: rec[17] as f64,
            },
            point_id: PointId {
                tri: rec[18] as u32,
                bu: rec[19] as u32,
                bv: rec[20] as u32,
            },
            valid: true,
        });
    }
    let pose = rotate_pose(theta)?;
    Ok(AttributeMap {
        width,
        height,
        pose,
        pixels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::{procgen, Camera, ObjectFamily};

    #[test]
    fn attribute_map_round_trip() {
        let scene = procgen::generate_scene(3, ObjectFamily::Torus).unwrap();
        let cam = Camera::turntable((24, 20), 1.7, 0.62).unwrap();
        let map = crate::scene::render_attribute_maps(&scene, &cam, &rotate_pose(15.0).unwrap());

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("view.attr");
        save_attribute_map(&map, &path).unwrap();
        let loaded = load_attribute_map(&path).unwrap();

        assert_eq!(loaded.width, map.width);
        assert_eq!(loaded.height, map.height);
        assert_eq!(loaded.pose.theta_deg, map.pose.theta_deg);
        for (a, b) in map.pixels.iter().zip(loaded.pixels.iter()) {
            assert_eq!(a.valid, b.valid);
            if a.valid {
                assert_eq!(a.point_id, b.point_id);
                assert_eq!(a.x_p.x as f32, b.x_p.x as f32);
                assert_eq!(a.svbrdf.roughness_x as f32, b.svbrdf.roughness_x as f32);
            }
        }
    }

    #[test]
    fn truncated_file_is_corrupt() {
        let scene = procgen::generate_scene(3, ObjectFamily::Sphere).unwrap();
        let cam = Camera::turntable((16, 16), 1.7, 0.62).unwrap();
        let map = crate::scene::render_attribute_maps(&scene, &cam, &rotate_pose(0.0).unwrap());
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("view.attr");
        save_attribute_map(&map, &path).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() / 2]).unwrap();
        match load_attribute_map(&path) {
            Err(DiftError::CorruptFile { .. }) => {}
            other => panic!("expected corrupt-file error, got {other:?}"),
        }
    }

    #[test]
    fn bad_magic_is_corrupt() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bogus.attr");
        std::fs::write(&path, b"NOTMAGIC00000000000000000000").unwrap();
        assert!(matches!(
            load_attribute_map(&path),
            Err(DiftError::CorruptFile { .. })
        ));
    }
}
