//! H-representation of the stable set polytope `Q` of an odd cycle, its
//! dilates and translates, and the exact geometric checks built on it:
//! affine dimension, facet detection, interior membership and reflexivity.
//!
//! `Q` is cut out by `0 <= x_i <= 1`, `x_i + x_{i+1} <= 1` (cyclically) and
//! `x_1 + ... + x_{2s+1} <= s`. Facets are detected from the known vertex
//! list (stable-set indicators), never from a convex-hull computation.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::counting::{self, CountMode};
use crate::cycle::CycleInstance;
use crate::error::{Error, Result};
use crate::linalg;

/// Which inequality family a row came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowKind {
    /// `-x_i <= 0`
    LowerBound,
    /// `x_i <= n`
    UpperBound,
    /// `x_i + x_{i+1} <= n`, including the wrap-around pair.
    Edge,
    /// `x_1 + ... + x_{2s+1} <= s n`
    Rank,
}

/// One inequality `<normal, x> <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub rhs: i64,
    pub kind: RowKind,
}

impl Halfspace {
    fn value(&self, p: &[i64]) -> i64 {
        self.normal.iter().zip(p).map(|(a, x)| a * x).sum()
    }
}

/// Integer system `A x <= b`.
///
/// Construction checks that every normal is nonzero and that the system
/// bounds every coordinate from both sides by a row `+-k x_i <= c` with `k > 0`, which
/// makes it bounded. `translation` records the accumulated shift applied by
/// [`HalfspaceSystem::translate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfspaceSystem {
    dim: usize,
    rows: Vec<Halfspace>,
    translation: Option<Vec<i64>>,
}

impl HalfspaceSystem {
    pub fn new(dim: usize, rows: Vec<Halfspace>) -> Result<Self> {
        for row in &rows {
            if row.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.normal.len(),
                });
            }
            if row.normal.iter().all(|&a| a == 0) {
                return Err(Error::Inconsistent("zero normal vector in system".into()));
            }
        }
        let is_unit = |row: &Halfspace, i: usize, sign: i64| {
            row.normal
                .iter()
                .enumerate()
                .all(|(j, &a)| if i == j { a * sign > 0 } else { a == 0 })
        };
        for i in 0..dim {
            for sign in [1, -1] {
                if !rows.iter().any(|r| is_unit(r, i, sign)) {
                    return Err(Error::Inconsistent(format!(
                        "system is not boxed in coordinate {}",
                        i + 1
                    )));
                }
            }
        }
        Ok(Self {
            dim,
            rows,
            translation: None,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Halfspace] {
        &self.rows
    }

    pub fn translation(&self) -> Option<&[i64]> {
        self.translation.as_deref()
    }

    /// Index of the first row of the given kind.
    pub fn find_row(&self, kind: RowKind) -> Option<usize> {
        self.rows.iter().position(|r| r.kind == kind)
    }

    /// The system of `{x - t : x in P}`: each row `(a, b)` becomes `(a, b - <a, t>)`.
    pub fn translate(&self, t: &[i64]) -> Result<Self> {
        self.check_len(t)?;
        let rows = self
            .rows
            .iter()
            .map(|r| Halfspace {
                normal: r.normal.clone(),
                rhs: r.rhs - r.value(t),
                kind: r.kind,
            })
            .collect();
        let translation = match &self.translation {
            Some(prev) => prev.iter().zip(t).map(|(a, b)| a + b).collect(),
            None => t.to_vec(),
        };
        Ok(Self {
            dim: self.dim,
            rows,
            translation: Some(translation),
        })
    }

    /// Closed mode: `<a, p> <= b` for every row. Strict mode: `<a, p> < b` for every row.
    ///
    /// The strict test is a valid interior test for a full-dimensional
    /// polytope even when the system contains redundant rows.
    pub fn contains(&self, p: &[i64], mode: Membership) -> Result<bool> {
        self.check_len(p)?;
        Ok(self.contains_unchecked(p, mode))
    }

    pub(crate) fn contains_unchecked(&self, p: &[i64], mode: Membership) -> bool {
        match mode {
            Membership::Closed => self.rows.iter().all(|r| r.value(p) <= r.rhs),
            Membership::Strict => self.rows.iter().all(|r| r.value(p) < r.rhs),
        }
    }

    fn check_len(&self, p: &[i64]) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Closed,
    Strict,
}

/// H-representation of `nQ` for `n >= 1`.
///
/// Row order: `2s+1` lower bounds, `2s+1` upper bounds, `2s` path edges, the
/// wrap-around edge `x_1 + x_{2s+1}`, and finally the rank row.
pub fn build_q(inst: &CycleInstance, dilation: i64) -> Result<HalfspaceSystem> {
    if dilation <= 0 {
        return Err(Error::InvalidDilation(dilation));
    }
    Ok(q_system(inst, dilation))
}

/// Same as [`build_q`] but also admits `n = 0`, the single point at the origin.
pub(crate) fn q_system(inst: &CycleInstance, n: i64) -> HalfspaceSystem {
    let m = inst.n_vertices();
    let unit = |i: usize, sign: i64| {
        let mut v = vec![0; m];
        v[i] = sign;
        v
    };
    let mut rows = Vec::with_capacity(3 * m + 1);
    rows.extend((0..m).map(|i| Halfspace {
        normal: unit(i, -1),
        rhs: 0,
        kind: RowKind::LowerBound,
    }));
    rows.extend((0..m).map(|i| Halfspace {
        normal: unit(i, 1),
        rhs: n,
        kind: RowKind::UpperBound,
    }));
    for (a, b) in inst.edges() {
        let mut normal = vec![0; m];
        normal[a - 1] = 1;
        normal[b - 1] = 1;
        rows.push(Halfspace {
            normal,
            rhs: n,
            kind: RowKind::Edge,
        });
    }
    rows.push(Halfspace {
        normal: vec![1; m],
        rhs: i64::from(inst.s()) * n,
        kind: RowKind::Rank,
    });
    HalfspaceSystem::new(m, rows).expect("cycle system is well formed")
}

/// A finite, non-empty point set whose convex hull is the polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSet {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl VertexSet {
    pub fn new(points: Vec<Vec<i64>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::Inconsistent("empty vertex set".into()));
        };
        let dim = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.len(),
            });
        }
        Ok(Self { dim, points })
    }

    /// Stable-set indicator vectors, the vertices of `Q`.
    pub fn of_q(inst: &CycleInstance) -> Self {
        let m = inst.n_vertices();
        let points = inst
            .enumerate_stable_sets()
            .iter()
            .map(|w| w.indicator(m).into_iter().map(i64::from).collect())
            .collect();
        Self { dim: m, points }
    }

    /// The points of `c P - t`.
    pub fn dilate_translate(&self, c: i64, t: &[i64]) -> Result<Self> {
        if t.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: t.len(),
            });
        }
        let points = self
            .points
            .iter()
            .map(|p| p.iter().zip(t).map(|(x, y)| c * x - y).collect())
            .collect();
        Ok(Self {
            dim: self.dim,
            points,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }
}

/// Affine dimension of the point set, via exact rank of differences to the first point.
pub fn dimension(vertices: &VertexSet) -> usize {
    affine_dim(vertices.points.iter())
}

fn affine_dim<'a>(mut points: impl Iterator<Item = &'a Vec<i64>>) -> usize {
    let Some(base) = points.next() else {
        return 0;
    };
    let diffs: Vec<Vec<i64>> = points
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    linalg::rank(&diffs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetReport {
    pub row: usize,
    pub kind: RowKind,
    pub is_facet: bool,
    pub tight_vertex_count: usize,
    /// Affine dimension of the tight vertices; `None` when no vertex is tight.
    pub tight_affine_dim: Option<usize>,
}

/// For every row, the vertices on which it is tight and whether they span a facet.
///
/// Requires every vertex to satisfy the system and the polytope to be
/// full-dimensional.
pub fn facet_report(sys: &HalfspaceSystem, vertices: &VertexSet) -> Result<Vec<FacetReport>> {
    if vertices.dim != sys.dim {
        return Err(Error::DimensionMismatch {
            expected: sys.dim,
            got: vertices.dim,
        });
    }
    if let Some(p) = vertices
        .points
        .iter()
        .find(|p| !sys.contains_unchecked(p, Membership::Closed))
    {
        return Err(Error::Inconsistent(format!(
            "vertex {p:?} violates the system"
        )));
    }
    let full = dimension(vertices);
    if full != sys.dim {
        return Err(Error::NotFullDimensional {
            dim: full,
            ambient: sys.dim,
        });
    }
    Ok(sys
        .rows
        .iter()
        .enumerate()
        .map(|(row, h)| {
            let tight: Vec<&Vec<i64>> = vertices
                .points
                .iter()
                .filter(|p| h.value(p) == h.rhs)
                .collect();
            let tight_affine_dim = (!tight.is_empty()).then(|| affine_dim(tight.iter().copied()));
            FacetReport {
                row,
                kind: h.kind,
                is_facet: tight_affine_dim == Some(sys.dim - 1),
                tight_vertex_count: tight.len(),
                tight_affine_dim,
            }
        })
        .collect())
}

/// Facet row with its normal made primitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedFacet {
    pub row: usize,
    pub kind: RowKind,
    /// gcd of the normal entries.
    pub content: i64,
    /// `rhs / content` in lowest terms.
    pub reduced_rhs_num: i64,
    pub reduced_rhs_den: i64,
}

impl ReducedFacet {
    pub fn is_unit(&self) -> bool {
        self.reduced_rhs_num == 1 && self.reduced_rhs_den == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflexivityReport {
    pub reflexive: bool,
    pub facets: Vec<ReducedFacet>,
}

/// Decides reflexivity of a polytope with the origin in its interior.
///
/// Non-facet rows are dropped first. Each facet normal is divided by its
/// content; the polytope is reflexive iff every reduced right-hand side is
/// exactly 1.
pub fn reflexivity_check(sys: &HalfspaceSystem, vertices: &VertexSet) -> Result<ReflexivityReport> {
    let origin = vec![0; sys.dim];
    if !sys.contains_unchecked(&origin, Membership::Strict) {
        return Err(Error::OriginNotInterior);
    }
    let facets: Vec<ReducedFacet> = facet_report(sys, vertices)?
        .into_iter()
        .filter(|f| f.is_facet)
        .map(|f| {
            let h = &sys.rows[f.row];
            let content = h.normal.iter().fold(0i64, |g, a| g.gcd(a));
            let g = h.rhs.gcd(&content);
            ReducedFacet {
                row: f.row,
                kind: h.kind,
                content,
                reduced_rhs_num: h.rhs / g,
                reduced_rhs_den: content / g,
            }
        })
        .collect();
    Ok(ReflexivityReport {
        reflexive: facets.iter().all(ReducedFacet::is_unit),
        facets,
    })
}

/// Evidence behind the reflexivity-based Gorenstein verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinWitness {
    /// Smallest `c` with an interior lattice point in `cQ`.
    pub codegree: u64,
    /// The unique interior lattice point of `cQ`.
    pub interior_point: Vec<i64>,
    pub reflexivity: ReflexivityReport,
}

impl GorensteinWitness {
    pub fn gorenstein(&self) -> bool {
        self.reflexivity.reflexive
    }
}

/// Gorenstein test for the toric ring through reflexivity of `cQ - p`, where
/// `c` is the codegree and `p` the unique interior lattice point of `cQ`.
///
/// Fails with [`Error::AmbiguousInteriorPoint`] when `cQ` has more than one
/// interior lattice point.
pub fn gorenstein_via_reflexivity(inst: &CycleInstance) -> Result<GorensteinWitness> {
    let max_c = inst.ring_dim() as u64 + 1;
    let (codegree, count) = (1..=max_c)
        .map(|c| (c, counting::count_dp(inst, c, CountMode::Interior)))
        .find(|(_, count)| !count.is_zero())
        .ok_or(Error::NoInteriorPoint(max_c))?;
    if count.to_u64() != Some(1) {
        return Err(Error::AmbiguousInteriorPoint {
            dilation: codegree,
            count: count.to_string(),
        });
    }
    let points = counting::interior_points(inst, codegree, 2);
    let [p] = points.as_slice() else {
        return Err(Error::Inconsistent(format!(
            "interior count at dilation {codegree} is 1 but enumeration found {} points",
            points.len()
        )));
    };
    let c = codegree as i64;
    let sys = build_q(inst, c)?.translate(p)?;
    let verts = VertexSet::of_q(inst).dilate_translate(c, p)?;
    let reflexivity = reflexivity_check(&sys, &verts)?;
    Ok(GorensteinWitness {
        codegree,
        interior_point: p.clone(),
        reflexivity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(s: u32) -> CycleInstance {
        CycleInstance::new(s).unwrap()
    }

    fn rank_row(sys: &HalfspaceSystem) -> &Halfspace {
        &sys.rows()[sys.find_row(RowKind::Rank).unwrap()]
    }

    #[test]
    fn build_q_row_counts() {
        let q2 = build_q(&inst(2), 1).unwrap();
        assert_eq!(q2.rows().len(), 16);
        assert_eq!(rank_row(&q2).normal, vec![1; 5]);
        assert_eq!(rank_row(&q2).rhs, 2);
        let q3 = build_q(&inst(3), 1).unwrap();
        assert_eq!(q3.rows().len(), 22);
        assert_eq!(rank_row(&q3).rhs, 3);
        let q1 = build_q(&inst(1), 3).unwrap();
        assert_eq!(rank_row(&q1).normal, vec![1; 3]);
        assert_eq!(rank_row(&q1).rhs, 3);
    }

    #[test]
    fn build_q_rejects_nonpositive() {
        assert!(matches!(
            build_q(&inst(2), 0),
            Err(Error::InvalidDilation(0))
        ));
        assert!(build_q(&inst(2), -3).is_err());
    }

    #[test]
    fn unbounded_system_rejected() {
        let rows = vec![Halfspace {
            normal: vec![1, 0],
            rhs: 1,
            kind: RowKind::UpperBound,
        }];
        assert!(HalfspaceSystem::new(2, rows).is_err());
    }

    #[test]
    fn translation() {
        let sys = build_q(&inst(3), 3).unwrap();
        let t = sys.translate(&[1; 7]).unwrap();
        assert_eq!(rank_row(&t).rhs, 2);
        assert_eq!(t.translation(), Some(&[1i64; 7][..]));
        assert_eq!(sys.translate(&[0; 7]).unwrap().rows(), sys.rows());

        let t2 = build_q(&inst(2), 3).unwrap().translate(&[1; 5]).unwrap();
        assert!(t2
            .rows()
            .iter()
            .filter(|r| r.kind == RowKind::Edge)
            .all(|r| r.rhs == 1));
        assert!(sys.translate(&[1; 3]).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&VertexSet::of_q(&inst(1))), 3);
        assert_eq!(dimension(&VertexSet::of_q(&inst(2))), 5);
        for s in 3..=6 {
            assert_eq!(dimension(&VertexSet::of_q(&inst(s))), 2 * s as usize + 1);
        }
        let single = VertexSet::new(vec![vec![4, 5, 6]]).unwrap();
        assert_eq!(dimension(&single), 0);
        assert!(VertexSet::new(vec![]).is_err());
    }

    #[test]
    fn facet_examples() {
        let i3 = inst(3);
        let rep = facet_report(&build_q(&i3, 1).unwrap(), &VertexSet::of_q(&i3)).unwrap();
        assert!(rep.last().unwrap().is_facet);
        assert_eq!(rep.last().unwrap().kind, RowKind::Rank);

        // s = 2, x_1 <= 1: tight at e_1, e_1+e_3, e_1+e_4, affine dim 2
        let i2 = inst(2);
        let rep = facet_report(&build_q(&i2, 1).unwrap(), &VertexSet::of_q(&i2)).unwrap();
        let upper1 = &rep[5];
        assert_eq!(upper1.kind, RowKind::UpperBound);
        assert_eq!(upper1.tight_vertex_count, 3);
        assert_eq!(upper1.tight_affine_dim, Some(2));
        assert!(!upper1.is_facet);

        // s = 1, x_1 + x_2 <= 1: tight at e_1, e_2 only
        let i1 = inst(1);
        let rep = facet_report(&build_q(&i1, 1).unwrap(), &VertexSet::of_q(&i1)).unwrap();
        let edge = &rep[6];
        assert_eq!(edge.kind, RowKind::Edge);
        assert_eq!(edge.tight_vertex_count, 2);
        assert!(!edge.is_facet);
    }

    #[test]
    fn facet_families() {
        for s in 1..=6 {
            let i = inst(s);
            let rep = facet_report(&build_q(&i, 1).unwrap(), &VertexSet::of_q(&i)).unwrap();
            for f in &rep {
                assert_eq!(f.is_facet, f.tight_affine_dim == Some(2 * s as usize));
                match f.kind {
                    RowKind::LowerBound | RowKind::Rank => assert!(f.is_facet, "s={s} {f:?}"),
                    RowKind::UpperBound => assert!(!f.is_facet, "s={s} {f:?}"),
                    RowKind::Edge => assert_eq!(f.is_facet, s >= 2, "s={s} {f:?}"),
                }
            }
        }
    }

    #[test]
    fn facet_report_requires_full_dimension() {
        let i1 = inst(1);
        let flat = VertexSet::new(vec![vec![0, 0, 0], vec![1, 0, 0]]).unwrap();
        assert!(matches!(
            facet_report(&build_q(&i1, 1).unwrap(), &flat),
            Err(Error::NotFullDimensional { .. })
        ));
    }

    #[test]
    fn membership() {
        let i3 = inst(3);
        assert!(build_q(&i3, 3)
            .unwrap()
            .contains(&[1; 7], Membership::Strict)
            .unwrap());
        assert!(!build_q(&i3, 2)
            .unwrap()
            .contains(&[1; 7], Membership::Strict)
            .unwrap());
        assert!(build_q(&i3, 2)
            .unwrap()
            .contains(&[1, 1, 1, 1, 1, 1, 0], Membership::Closed)
            .unwrap());
        let i1 = inst(1);
        assert!(!build_q(&i1, 3)
            .unwrap()
            .contains(&[1; 3], Membership::Strict)
            .unwrap());
        assert!(build_q(&i1, 3)
            .unwrap()
            .contains(&[1; 2], Membership::Closed)
            .is_err());
    }

    #[test]
    fn zero_one_points_are_exactly_stable_sets() {
        for s in 1..=3 {
            let i = inst(s);
            let m = i.n_vertices();
            let q = build_q(&i, 1).unwrap();
            for mask in 0u32..1 << m {
                let p: Vec<i64> = (0..m).map(|j| i64::from(mask >> j & 1)).collect();
                let members: Vec<usize> = (0..m)
                    .filter(|j| mask >> j & 1 == 1)
                    .map(|j| j + 1)
                    .collect();
                assert_eq!(
                    q.contains(&p, Membership::Closed).unwrap(),
                    i.is_stable(&members)
                );
            }
        }
    }

    #[test]
    fn reflexivity_examples() {
        let i3 = inst(3);
        let p3 = build_q(&i3, 3).unwrap().translate(&[1; 7]).unwrap();
        let v3 = VertexSet::of_q(&i3).dilate_translate(3, &[1; 7]).unwrap();
        let rep = reflexivity_check(&p3, &v3).unwrap();
        assert!(!rep.reflexive);
        let rank = rep.facets.iter().find(|f| f.kind == RowKind::Rank).unwrap();
        assert_eq!((rank.reduced_rhs_num, rank.reduced_rhs_den), (2, 1));

        let i2 = inst(2);
        let p2 = build_q(&i2, 3).unwrap().translate(&[1; 5]).unwrap();
        let v2 = VertexSet::of_q(&i2).dilate_translate(3, &[1; 5]).unwrap();
        let rep = reflexivity_check(&p2, &v2).unwrap();
        assert!(rep.reflexive);
        // lower bounds, 5 edges, rank row; no upper bounds
        assert_eq!(rep.facets.len(), 11);
        assert!(rep.facets.iter().all(|f| f.kind != RowKind::UpperBound));

        let i1 = inst(1);
        let p1 = build_q(&i1, 4).unwrap().translate(&[1; 3]).unwrap();
        let v1 = VertexSet::of_q(&i1).dilate_translate(4, &[1; 3]).unwrap();
        let rep = reflexivity_check(&p1, &v1).unwrap();
        assert!(rep.reflexive);
        assert_eq!(rep.facets.len(), 4);
    }

    #[test]
    fn reflexivity_needs_interior_origin() {
        let i2 = inst(2);
        let q = build_q(&i2, 3).unwrap();
        let v = VertexSet::of_q(&i2).dilate_translate(3, &[0; 5]).unwrap();
        assert!(matches!(
            reflexivity_check(&q, &v),
            Err(Error::OriginNotInterior)
        ));
    }

    #[test]
    fn non_primitive_normal_reduces() {
        // 2x <= 2 reduces to x <= 1; 2x <= 6 reduces to x <= 3
        let sys = |rhs| {
            HalfspaceSystem::new(
                1,
                vec![
                    Halfspace {
                        normal: vec![-1],
                        rhs: 1,
                        kind: RowKind::LowerBound,
                    },
                    Halfspace {
                        normal: vec![2],
                        rhs,
                        kind: RowKind::UpperBound,
                    },
                ],
            )
            .unwrap()
        };
        let verts = VertexSet::new(vec![vec![-1], vec![1]]).unwrap();
        assert!(reflexivity_check(&sys(2), &verts).unwrap().reflexive);
        let verts3 = VertexSet::new(vec![vec![-1], vec![3]]).unwrap();
        let sys3 = HalfspaceSystem::new(
            1,
            vec![
                Halfspace {
                    normal: vec![-1],
                    rhs: 1,
                    kind: RowKind::LowerBound,
                },
                Halfspace {
                    normal: vec![2],
                    rhs: 6,
                    kind: RowKind::UpperBound,
                },
            ],
        )
        .unwrap();
        let rep = reflexivity_check(&sys3, &verts3).unwrap();
        assert!(!rep.reflexive);
        let up = rep
            .facets
            .iter()
            .find(|f| f.kind == RowKind::UpperBound)
            .unwrap();
        assert_eq!(
            (up.content, up.reduced_rhs_num, up.reduced_rhs_den),
            (2, 3, 1)
        );
    }

    #[test]
    fn gorenstein_small_cases() {
        let g1 = gorenstein_via_reflexivity(&inst(1)).unwrap();
        assert_eq!(g1.codegree, 4);
        assert_eq!(g1.interior_point, vec![1; 3]);
        assert!(g1.gorenstein());

        let g2 = gorenstein_via_reflexivity(&inst(2)).unwrap();
        assert_eq!(g2.codegree, 3);
        assert_eq!(g2.interior_point, vec![1; 5]);
        assert!(g2.gorenstein());

        let g3 = gorenstein_via_reflexivity(&inst(3)).unwrap();
        assert!(!g3.gorenstein());
    }
}
