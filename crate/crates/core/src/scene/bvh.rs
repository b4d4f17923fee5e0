//! Bounding-volume hierarchy over mesh triangles. Shadow rays dominate the
//! data-generation cost, so both closest-hit and any-hit queries are provided.

use crate::geom::{max3, min3, Vec3};

const TRAVERSAL_STACK: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct Hit {
    pub t: f64,
    pub tri: u32,
    /// Barycentric coordinates (u toward vertex 1, v toward vertex 2).
    pub u: f64,
    pub v: f64,
}

#[derive(Debug, Clone, Copy)]
struct Node {
    bb_min: Vec3,
    bb_max: Vec3,
    /// Leaf: range into `order`. Inner: `left` is the index of the left
    /// child, right child is `left + 1`, `count == 0`.
    left: u32,
    start: u32,
    count: u32,
}

struct TriRef {
    index: u32,
    centroid: Vec3,
    bb_min: Vec3,
    bb_max: Vec3,
}

pub struct Bvh {
    nodes: Vec<Node>,
    order: Vec<u32>,
    // Flat copies of the triangle vertices in `order`-friendly layout.
    v0: Vec<Vec3>,
    e1: Vec<Vec3>,
    e2: Vec<Vec3>,
    tri_of: Vec<u32>,
}

impl Bvh {
    /// Builds over the given triangles. Triangles with area below
    /// `min_area` are dropped entirely so they can never be hit.
    pub fn build(vertices: &[Vec3], triangles: &[[u32; 3]], min_area: f64) -> Bvh {
        let mut refs: Vec<TriRef> = Vec::with_capacity(triangles.len());
        for (i, tri) in triangles.iter().enumerate() {
            let a = vertices[tri[0] as usize];
            let b = vertices[tri[1] as usize];
            let c = vertices[tri[2] as usize];
            let area = 0.5 * (b - a).cross(&(c - a)).norm();
            if area < min_area {
                continue;
            }
            let bb_min = Vec3::new(
                min3(a.x, b.x, c.x),
                min3(a.y, b.y, c.y),
                min3(a.z, b.z, c.z),
            );
            let bb_max = Vec3::new(
                max3(a.x, b.x, c.x),
                max3(a.y, b.y, c.y),
                max3(a.z, b.z, c.z),
            );
            refs.push(TriRef {
                index: i as u32,
                centroid: (a + b + c) / 3.0,
                bb_min,
                bb_max,
            });
        }

        let mut bvh = Bvh {
            nodes: Vec::new(),
            order: Vec::new(),
            v0: Vec::new(),
            e1: Vec::new(),
            e2: Vec::new(),
            tri_of: Vec::new(),
        };
        if refs.is_empty() {
            bvh.nodes.push(Node {
                bb_min: Vec3::zeros(),
                bb_max: Vec3::zeros(),
                left: 0,
                start: 0,
                count: 0,
            });
            return bvh;
        }

        let mut indices: Vec<usize> = (0..refs.len()).collect();
        bvh.nodes.push(Node {
            bb_min: Vec3::zeros(),
            bb_max: Vec3::zeros(),
            left: 0,
            start: 0,
            count: 0,
        });
        bvh.build_node(0, &mut indices, &refs);

        // Bake triangle data in traversal order.
        for &r in &bvh.order {
            let tri = triangles[refs[r as usize].index as usize];
            let a = vertices[tri[0] as usize];
            let b = vertices[tri[1] as usize];
            let c = vertices[tri[2] as usize];
            bvh.v0.push(a);
            bvh.e1.push(b - a);
            bvh.e2.push(c - a);
            bvh.tri_of.push(refs[r as usize].index);
        }
        bvh
    }

    fn build_node(&mut self, node: usize, indices: &mut [usize], refs: &[TriRef]) {
        let mut bb_min = Vec3::repeat(f64::INFINITY);
        let mut bb_max = Vec3::repeat(f64::NEG_INFINITY);
        for &i in indices.iter() {
            bb_min = bb_min.inf(&refs[i].bb_min);
            bb_max = bb_max.sup(&refs[i].bb_max);
        }
        self.nodes[node].bb_min = bb_min;
        self.nodes[node].bb_max = bb_max;

        if indices.len() <= 4 {
            self.nodes[node].start = self.order.len() as u32;
            self.nodes[node].count = indices.len() as u32;
            for &i in indices.iter() {
                self.order.push(i as u32);
            }
            return;
        }

        let extent = bb_max - bb_min;
        let axis = if extent.x >= extent.y && extent.x >= extent.z {
            0
        } else if extent.y >= extent.z {
            1
        } else {
            2
        };
        indices.sort_by(|&a, &b| refs[a].centroid[axis].total_cmp(&refs[b].centroid[axis]));
        let mid = indices.len() / 2;

        let left = self.nodes.len();
        self.nodes.push(Node {
            bb_min: Vec3::zeros(),
            bb_max: Vec3::zeros(),
            left: 0,
            start: 0,
            count: 0,
        });
        self.nodes.push(Node {
            bb_min: Vec3::zeros(),
            bb_max: Vec3::zeros(),
            left: 0,
            start: 0,
            count: 0,
        });
        self.nodes[node].left = left as u32;
        let (lo, hi) = indices.split_at_mut(mid);
        self.build_node(left, lo, refs);
        self.build_node(left + 1, hi, refs);
    }

    #[inline]
    fn slab_hit(node: &Node, origin: &Vec3, inv_dir: &Vec3, tmax: f64) -> bool {
        let mut t0 = 0.0f64;
        let mut t1 = tmax;
        for k in 0..3 {
            let a = (node.bb_min[k] - origin[k]) * inv_dir[k];
            let b = (node.bb_max[k] - origin[k]) * inv_dir[k];
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            t0 = t0.max(lo);
            t1 = t1.min(hi);
            if t0 > t1 {
                return false;
            }
        }
        true
    }

    #[inline]
    fn tri_hit(&self, i: usize, origin: &Vec3, dir: &Vec3, tmin: f64, tmax: f64) -> Option<Hit> {
        let p = dir.cross(&self.e2[i]);
        let det = self.e1[i].dot(&p);
        if det.abs() < 1e-14 {
            return None;
        }
        let inv = 1.0 / det;
        let s = origin - self.v0[i];
        let u = s.dot(&p) * inv;
        if !(0.0..=1.0).contains(&u) {
            return None;
        }
        let q = s.cross(&self.e1[i]);
        let v = dir.dot(&q) * inv;
        if v < 0.0 || u + v > 1.0 {
            return None;
        }
        let t = self.e2[i].dot(&q) * inv;
        if t <= tmin || t >= tmax {
            return None;
        }
        Some(Hit {
            t,
            tri: self.tri_of[i],
            u,
            v,
        })
    }

    pub fn closest_hit(&self, origin: &Vec3, dir: &Vec3, tmin: f64, tmax: f64) -> Option<Hit> {
        if self.order.is_empty() {
            return None;
        }
        let inv_dir = Vec3::new(1.0 / dir.x, 1.0 / dir.y, 1.0 / dir.z);
        let mut best: Option<Hit> = None;
        let mut limit = tmax;
        let mut stack = [0u32; TRAVERSAL_STACK];
        let mut sp = 0usize;
        stack[sp] = 0;
        sp += 1;
        while sp > 0 {
            sp -= 1;
            let node = &self.nodes[stack[sp] as usize];
            if !Self::slab_hit(node, origin, &inv_dir, limit) {
                continue;
            }
            if node.count > 0 {
                for i in node.start..node.start + node.count {
                    if let Some(h) = self.tri_hit(i as usize, origin, dir, tmin, limit) {
                        limit = h.t;
                        best = Some(h);
                    }
                }
            } else {
                stack[sp] = node.left;
                stack[sp + 1] = node.left + 1;
                sp += 2;
            }
        }
        best
    }

    pub fn any_hit(&self, origin: &Vec3, dir: &Vec3, tmin: f64, tmax: f64) -> bool {
        if self.order.is_empty() {
            return false;
        }
        let inv_dir = Vec3::new(1.0 / dir.x, 1.0 / dir.y, 1.0 / dir.z);
        let mut stack = [0u32; TRAVERSAL_STACK];
        let mut sp = 0usize;
        stack[sp] = 0;
        sp += 1;
        while sp > 0 {
            sp -= 1;
            let node = &self.nodes[stack[sp] as usize];
            if !Self::slab_hit(node, origin, &inv_dir, tmax) {
                continue;
            }
            if node.count > 0 {
                for i in node.start..node.start + node.count {
                    if self.tri_hit(i as usize, origin, dir, tmin, tmax).is_some() {
                        return true;
                    }
                }
            } else {
                stack[sp] = node.left;
                stack[sp + 1] = node.left + 1;
                sp += 2;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad() -> (Vec<Vec3>, Vec<[u32; 3]>) {
        let vertices = vec![
            Vec3::new(-1.0, -1.0, 0.0),
            Vec3::new(1.0, -1.0, 0.0),
            Vec3::new(1.0, 1.0, 0.0),
            Vec3::new(-1.0, 1.0, 0.0),
        ];
        let triangles = vec![[0, 1, 2], [0, 2, 3]];
        (vertices, triangles)
    }

    #[test]
    fn hits_quad_head_on() {
        let (v, t) = quad();
        let bvh = Bvh::build(&v, &t, 1e-12);
        let hit = bvh
            .closest_hit(&Vec3::new(0.1, 0.1, -3.0), &Vec3::z(), 1e-9, f64::INFINITY)
            .expect("should hit");
        assert!((hit.t - 3.0).abs() < 1e-12);
    }

    #[test]
    fn misses_outside_quad() {
        let (v, t) = quad();
        let bvh = Bvh::build(&v, &t, 1e-12);
        assert!(bvh
            .closest_hit(&Vec3::new(5.0, 5.0, -3.0), &Vec3::z(), 1e-9, f64::INFINITY)
            .is_none());
    }

    #[test]
    fn degenerate_triangles_are_dropped() {
        let vertices = vec![Vec3::zeros(), Vec3::x() * 1e-9, Vec3::y() * 1e-9];
        let triangles = vec![[0u32, 1, 2]];
        let bvh = Bvh::build(&vertices, &triangles, 1e-12);
        assert!(!bvh.any_hit(&Vec3::new(0.0, 0.0, -1.0), &Vec3::z(), 1e-9, 10.0));
    }

    #[test]
    fn any_hit_respects_segment_bounds() {
        let (v, t) = quad();
        let bvh = Bvh::build(&v, &t, 1e-12);
        // Segment stops short of the quad.
        assert!(!bvh.any_hit(&Vec3::new(0.0, 0.0, -3.0), &Vec3::z(), 1e-9, 2.0));
        assert!(bvh.any_hit(&Vec3::new(0.0, 0.0, -3.0), &Vec3::z(), 1e-9, 4.0));
    }
}
