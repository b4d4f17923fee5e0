//! Deterministic value noise used for procedural material maps and blob
//! displacement. Hash-based so results are identical across platforms and
//! independent of any RNG stream.

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn lattice(seed: u64, ix: i64, iy: i64, iz: i64) -> f64 {
    let h = splitmix64(
        seed ^ (ix as u64).wrapping_mul(0x8da6_b343)
            ^ (iy as u64).wrapping_mul(0xd816_3841)
            ^ (iz as u64).wrapping_mul(0xcb1a_b31f),
    );
    // Map to [0, 1).
    (h >> 11) as f64 / (1u64 << 53) as f64
}

fn smoothstep(t: f64) -> f64 {
    t * t * (3.0 - 2.0 * t)
}

/// Single-octave trilinear value noise in [0, 1).
pub fn value_noise(seed: u64, p: [f64; 3]) -> f64 {
    let ix = p[0].floor() as i64;
    let iy = p[1].floor() as i64;
    let iz = p[2].floor() as i64;
    let fx = smoothstep(p[0] - ix as f64);
    let fy = smoothstep(p[1] - iy as f64);
    let fz = smoothstep(p[2] - iz as f64);

    let mut c = [0.0f64; 8];
    for (k, slot) in c.iter_mut().enumerate() {
        let dx = (k & 1) as i64;
        let dy = ((k >> 1) & 1) as i64;
        let dz = ((k >> 2) & 1) as i64;
        *slot = lattice(seed, ix + dx, iy + dy, iz + dz);
    }
    let x00 = c[0] + (c[1] - c[0]) * fx;
    let x10 = c[2] + (c[3] - c[2]) * fx;
    let x01 = c[4] + (c[5] - c[4]) * fx;
    let x11 = c[6] + (c[7] - c[6]) * fx;
    let y0 = x00 + (x10 - x00) * fy;
    let y1 = x01 + (x11 - x01) * fy;
    y0 + (y1 - y0) * fz
}

/// Fractal sum of `octaves` value-noise octaves, normalized to [0, 1).
pub fn fbm(seed: u64, p: [f64; 3], octaves: u32) -> f64 {
    let mut sum = 0.0;
    let mut amp = 1.0;
    let mut total = 0.0;
    let mut freq = 1.0;
    for o in 0..octaves {
        sum += amp * value_noise(seed.wrapping_add(o as u64), [p[0] * freq, p[1] * freq, p[2] * freq]);
        total += amp;
        amp *= 0.5;
        freq *= 2.0;
    }
    sum / total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noise_is_deterministic() {
        let a = fbm(42, [0.3, 1.7, 2.2], 3);
        let b = fbm(42, [0.3, 1.7, 2.2], 3);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn noise_in_unit_range() {
        for i in 0..1000 {
            let p = [i as f64 * 0.173, i as f64 * 0.311, i as f64 * 0.071];
            let v = fbm(7, p, 4);
            assert!((0.0..1.0).contains(&v), "fbm out of range: {v}");
        }
    }

    #[test]
    fn seeds_decorrelate() {
        let a = value_noise(1, [0.5, 0.5, 0.5]);
        let b = value_noise(2, [0.5, 0.5, 0.5]);
        assert_ne!(a.to_bits(), b.to_bits());
    }
}
