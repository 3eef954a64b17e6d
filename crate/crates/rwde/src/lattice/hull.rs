//! Exact convex hulls of small symmetric integer point sets.
//!
//! Facets are enumerated by brute force: every (d-1)-subset of the input
//! points yields a candidate normal (a generalized cross product), and a
//! candidate is kept when its supporting hyperplane touches an affinely
//! (d-1)-dimensional subset of the points. All predicates are integer
//! arithmetic, so there is no floating-point degeneracy; the dimension cap
//! (d <= 4) keeps the subset enumeration trivial.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::Zero;
use std::collections::BTreeSet;

/// Largest dimension the exact hull machinery accepts.
pub const MAX_HULL_DIM: usize = 4;

/// Half-space `<normal, x> <= offset` with primitive integer normal and
/// positive offset (the origin is strictly inside every facet we keep).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

/// Convex polytope given by both vertices and facets, cross-validated.
///
/// Symmetric about the origin with the origin in the interior: exactly the
/// geometry of the convex hull `U` of a symmetric jump range.
#[derive(Clone, Debug)]
pub struct Polytope {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub facets: Vec<Facet>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

fn primitive(mut v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &c| gcd(acc, c));
    if g > 1 {
        for c in v.iter_mut() {
            *c /= g;
        }
    }
    v
}

/// Determinant of a k x k integer matrix, k <= 3.
fn det_small(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        3 => {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        k => panic!("det_small only supports k <= 3, got {k}"),
    }
}

/// Generalized cross product: integer vector orthogonal to the d-1 rows.
fn generalized_cross(rows: &[Vec<i64>], dim: usize) -> Vec<i64> {
    debug_assert_eq!(rows.len(), dim - 1);
    let mut normal = vec![0i64; dim];
    for j in 0..dim {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, &v)| v as i128)
                    .collect()
            })
            .collect();
        let d = det_small(&minor);
        let signed = if j % 2 == 0 { d } else { -d };
        normal[j] = i64::try_from(signed).expect("normal overflow");
    }
    normal
}

/// Rank of an integer matrix via fraction-free elimination.
fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..m.len()).find(|&r| m[r][col] != 0);
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let pv = m[row][col];
        for r in row + 1..m.len() {
            let factor = m[r][col];
            if factor != 0 {
                for c in col..cols {
                    m[r][c] = m[r][c] * pv - m[row][c] * factor;
                }
                // Keep entries small: divide the row by its gcd.
                let g = m[r].iter().fold(0i128, |acc, &v| {
                    num_integer::Integer::gcd(&acc, &v)
                });
                if g > 1 {
                    for c in 0..cols {
                        m[r][c] /= g;
                    }
                }
            }
        }
        rank += 1;
        row += 1;
        if row == m.len() {
            break;
        }
    }
    rank
}

fn affine_rank(points: &[&Vec<i64>]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let base = points[0];
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    integer_rank(&diffs)
}

impl Polytope {
    /// Exact convex hull of a finite symmetric integer point set.
    ///
    /// Errors when the points do not span R^d (degenerate hull) or when the
    /// dimension exceeds the exact-arithmetic cap.
    pub fn hull_of(dim: usize, points: &[Vec<i64>]) -> Result<Polytope> {
        if dim == 0 || dim > MAX_HULL_DIM {
            return Err(Error::DimensionUnsupported {
                dim,
                max: MAX_HULL_DIM,
            });
        }
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        let rows: Vec<Vec<i64>> = points.to_vec();
        if integer_rank(&rows) < dim {
            return Err(Error::DegenerateHull { dim });
        }

        // Candidate facet normals from (d-1)-subsets relative to a base point.
        let mut normals: BTreeSet<Vec<i64>> = BTreeSet::new();
        if dim == 1 {
            normals.insert(vec![1]);
            normals.insert(vec![-1]);
        } else {
            let k = dim - 1;
            let n = points.len();
            let mut idx: Vec<usize> = (0..=k).collect(); // base point plus k others
            // Enumerate all (k+1)-subsets; first element is the base.
            if n >= k + 1 {
                loop {
                    let base = &points[idx[0]];
                    let rows: Vec<Vec<i64>> = idx[1..]
                        .iter()
                        .map(|&i| {
                            points[i]
                                .iter()
                                .zip(base.iter())
                                .map(|(a, b)| a - b)
                                .collect()
                        })
                        .collect();
                    let normal = generalized_cross(&rows, dim);
                    if normal.iter().any(|&c| c != 0) {
                        let p = primitive(normal);
                        let neg: Vec<i64> = p.iter().map(|&c| -c).collect();
                        normals.insert(p);
                        normals.insert(neg);
                    }
                    // next combination
                    let mut i = k + 1;
                    loop {
                        if i == 0 {
                            break;
                        }
                        i -= 1;
                        if idx[i] != i + n - (k + 1) {
                            idx[i] += 1;
                            for j in i + 1..=k {
                                idx[j] = idx[j - 1] + 1;
                            }
                            break;
                        }
                        if i == 0 {
                            idx[0] = n; // sentinel: done
                        }
                    }
                    if idx[0] >= n {
                        break;
                    }
                }
            }
        }

        let mut facets: Vec<Facet> = Vec::new();
        for normal in normals {
            let offset = points.iter().map(|p| dot(&normal, p)).max().unwrap();
            let active: Vec<&Vec<i64>> = points
                .iter()
                .filter(|p| dot(&normal, p) == offset)
                .collect();
            if affine_rank(&active) == dim - 1 {
                debug_assert!(offset > 0, "symmetric full-dim hull has 0 inside");
                facets.push(Facet { normal, offset });
            }
        }
        facets.sort_by(|a, b| a.normal.cmp(&b.normal));

        // Vertices: points whose active facet normals span R^d.
        let mut vertices: Vec<Vec<i64>> = points
            .iter()
            .filter(|p| {
                let active: Vec<Vec<i64>> = facets
                    .iter()
                    .filter(|f| dot(&f.normal, p) == f.offset)
                    .map(|f| f.normal.clone())
                    .collect();
                integer_rank(&active) == dim
            })
            .cloned()
            .collect();
        vertices.sort();
        vertices.dedup();

        let poly = Polytope {
            dim,
            vertices,
            facets,
        };
        poly.cross_validate(points)?;
        Ok(poly)
    }

    /// Consistency of the two descriptions over the generating points.
    fn cross_validate(&self, points: &[Vec<i64>]) -> Result<()> {
        for p in points {
            if !self.contains_scaled(p, 1) {
                return Err(Error::Other(format!(
                    "hull facets exclude generating point {p:?}"
                )));
            }
        }
        for v in &self.vertices {
            let active = self
                .facets
                .iter()
                .filter(|f| dot(&f.normal, v) == f.offset)
                .count();
            if active < self.dim {
                return Err(Error::Other(format!(
                    "vertex {v:?} active on too few facets"
                )));
            }
        }
        // Symmetry: facets and vertices come in +/- pairs.
        for f in &self.facets {
            let neg: Vec<i64> = f.normal.iter().map(|&c| -c).collect();
            if !self
                .facets
                .iter()
                .any(|g| g.normal == neg && g.offset == f.offset)
            {
                return Err(Error::Other("facet set is not symmetric".into()));
            }
        }
        Ok(())
    }

    /// Membership `x in n*U`, exact.
    pub fn contains_scaled(&self, x: &[i64], n: i64) -> bool {
        self.facets.iter().all(|f| dot(&f.normal, x) <= n * f.offset)
    }

    /// Minkowski gauge `inf { a >= 0 : x in a*U }` in floating point.
    pub fn gauge(&self, x: &[f64]) -> f64 {
        let mut best = 0.0f64;
        for f in self.facets.iter() {
            let num: f64 = f
                .normal
                .iter()
                .zip(x)
                .map(|(&n, &v)| n as f64 * v)
                .sum();
            best = best.max(num / f.offset as f64);
        }
        best
    }

    /// Gauge of an integer point as an exact rational.
    pub fn gauge_int(&self, x: &[i64]) -> Ratio<i64> {
        let mut best = Ratio::zero();
        for f in self.facets.iter() {
            let r = Ratio::new(dot(&f.normal, x), f.offset);
            if r > best {
                best = r;
            }
        }
        best
    }

    /// Gauge of a rational point, exact.
    pub fn gauge_rational(&self, x: &[Ratio<i64>]) -> Ratio<i64> {
        let mut best = Ratio::zero();
        for f in self.facets.iter() {
            let mut num = Ratio::zero();
            for (&n, v) in f.normal.iter().zip(x) {
                num += Ratio::from_integer(n) * v;
            }
            let r = num / Ratio::from_integer(f.offset);
            if r > best {
                best = r;
            }
        }
        best
    }

    /// Smallest integer `n >= 0` with `x in n*U` (the ceiling of the gauge).
    pub fn min_cover(&self, x: &[i64]) -> i64 {
        let mut best = 0i64;
        for f in self.facets.iter() {
            let num = dot(&f.normal, x);
            if num > 0 {
                best = best.max(num_integer::Integer::div_ceil(&num, &f.offset));
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Vec<i64>> {
        v.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn segment_hull_d1() {
        let p = Polytope::hull_of(1, &pts(&[&[-1], &[0], &[1]])).unwrap();
        assert_eq!(p.vertices, pts(&[&[-1], &[1]]));
        assert_eq!(p.facets.len(), 2);
        assert!(p.facets.iter().all(|f| f.offset == 1));
    }

    #[test]
    fn nearest_neighbor_hull_is_cross_polytope() {
        let p = Polytope::hull_of(2, &pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])).unwrap();
        // |x|_1 <= 1: four facets with normals (+-1, +-1).
        assert_eq!(p.facets.len(), 4);
        for f in &p.facets {
            assert_eq!(f.offset, 1);
            assert!(f.normal.iter().all(|&c| c == 1 || c == -1));
        }
        assert_eq!(p.vertices.len(), 4);
        assert!((p.gauge(&[0.3, -0.4]) - 0.7).abs() < 1e-15);
    }

    #[test]
    fn square_hull_gauge_is_linf() {
        let square = pts(&[
            &[0, 0],
            &[1, 0],
            &[-1, 0],
            &[0, 1],
            &[0, -1],
            &[1, 1],
            &[-1, -1],
            &[1, -1],
            &[-1, 1],
        ]);
        let p = Polytope::hull_of(2, &square).unwrap();
        assert_eq!(p.facets.len(), 4);
        assert_eq!(p.vertices.len(), 4);
        assert!((p.gauge(&[0.5, 0.25]) - 0.5).abs() < 1e-15);
        assert_eq!(p.gauge_int(&[5, 3]), Ratio::new(5, 1));
        assert_eq!(p.min_cover(&[5, 3]), 5);
    }

    #[test]
    fn octahedron_d3() {
        let p = Polytope::hull_of(
            3,
            &pts(&[
                &[0, 0, 0],
                &[1, 0, 0],
                &[-1, 0, 0],
                &[0, 1, 0],
                &[0, -1, 0],
                &[0, 0, 1],
                &[0, 0, -1],
            ]),
        )
        .unwrap();
        assert_eq!(p.facets.len(), 8);
        assert_eq!(p.vertices.len(), 6);
        assert_eq!(p.gauge_int(&[1, 1, 1]), Ratio::new(3, 1));
    }

    #[test]
    fn cube_d3() {
        let mut cube = Vec::new();
        for a in -1..=1i64 {
            for b in -1..=1i64 {
                for c in -1..=1i64 {
                    cube.push(vec![a, b, c]);
                }
            }
        }
        let p = Polytope::hull_of(3, &cube).unwrap();
        assert_eq!(p.facets.len(), 6);
        assert_eq!(p.vertices.len(), 8);
        assert_eq!(p.min_cover(&[7, -3, 2]), 7);
    }

    #[test]
    fn degenerate_hull_rejected() {
        let err = Polytope::hull_of(2, &pts(&[&[1, 0], &[-1, 0]])).unwrap_err();
        assert!(matches!(err, Error::DegenerateHull { .. }));
    }

    #[test]
    fn cross_polytope_d4() {
        let mut points = Vec::new();
        for i in 0..4 {
            for s in [-1i64, 1] {
                let mut p = vec![0i64; 4];
                p[i] = s;
                points.push(p);
            }
        }
        let p = Polytope::hull_of(4, &points).unwrap();
        assert_eq!(p.facets.len(), 16);
        assert_eq!(p.vertices.len(), 8);
    }

    #[test]
    fn dimension_cap_enforced() {
        let err = Polytope::hull_of(5, &[vec![0; 5]]).unwrap_err();
        assert!(matches!(err, Error::DimensionUnsupported { .. }));
    }
}
