//! Local Newton polyhedra `conv(supp f + R^n_{>=0})` in two and three
//! dimensions, their facets, compact faces and lattice invariants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{Integer, One, Signed, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A polynomial `sum c_p x^p` in 2 or 3 variables vanishing at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportedPoly {
    dim: usize,
    terms: BTreeMap<LatticePoint, Rational>,
}

impl SupportedPoly {
    /// Collects like terms; rejects an empty result and a constant term.
    pub fn new<P: Into<LatticePoint>>(dim: usize, terms: impl IntoIterator<Item = (P, Rational)>) -> Result<Self> {
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        let mut map: BTreeMap<LatticePoint, Rational> = BTreeMap::new();
        for (p, c) in terms {
            let p = p.into();
            if p.dim() != dim || p.0.iter().any(|e| *e < 0) {
                return Err(Error::BadExponent(p.0));
            }
            *map.entry(p).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::EmptySupport);
        }
        if map.keys().any(LatticePoint::is_origin) {
            return Err(Error::OriginInSupport);
        }
        Ok(SupportedPoly { dim, terms: map })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &LatticePoint> {
        self.terms.keys()
    }

    pub fn coefficient(&self, p: &LatticePoint) -> Option<&Rational> {
        self.terms.get(p)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, q: &Rational) -> Result<Self> {
        SupportedPoly::new(self.dim, self.terms.iter().map(|(p, c)| (p.clone(), c * q)))
    }

    /// Renders the polynomial with the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        let mut out = String::new();
        for (idx, (p, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> =
                p.0.iter()
                    .zip(names)
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, v)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                    .collect();
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&mono.join("*"));
        }
        out
    }
}

impl fmt::Display for SupportedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[&str] = if self.dim == 2 { &["x", "y"] } else { &["x", "y", "z"] };
        write!(f, "{}", self.display_with(names))
    }
}

/// A facet `{p in Gamma_+ : normal . p = distance}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive inner normal, all coefficients nonnegative.
    pub normal: Vec<i64>,
    /// `N`: the minimum of the normal over the support.
    pub distance: i64,
    /// `nu`: the sum of the normal's coefficients.
    pub nu: i64,
    pub compact: bool,
}

impl Facet {
    pub fn contains(&self, p: &LatticePoint) -> bool {
        dot(&self.normal, p.coords()) == self.distance
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactFace {
    pub dim: usize,
    /// For 2-dimensional faces the vertices are in cyclic order.
    pub vertices: Vec<LatticePoint>,
    /// Indices into [`NewtonPolytope::facets`] of every facet containing the face.
    pub containing: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct NewtonPolytope {
    ambient: usize,
    support: Vec<LatticePoint>,
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
    faces: Vec<CompactFace>,
}

impl NewtonPolytope {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn support(&self) -> &[LatticePoint] {
        &self.support
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn facet(&self, idx: usize) -> &Facet {
        &self.facets[idx]
    }

    pub fn compact_faces(&self) -> &[CompactFace] {
        &self.faces
    }

    pub fn containing_facets<'a>(&'a self, face: &'a CompactFace) -> impl Iterator<Item = &'a Facet> + 'a {
        face.containing.iter().map(move |i| &self.facets[*i])
    }

    /// The facet data `(normal, N, nu)` of a top-dimensional compact face.
    pub fn own_facet(&self, face: &CompactFace) -> Option<&Facet> {
        (face.dim + 1 == self.ambient && face.containing.len() == 1).then(|| &self.facets[face.containing[0]])
    }

    pub fn find_facet(&self, normal: &[i64]) -> Option<usize> {
        self.facets.iter().position(|f| f.normal == normal)
    }

    pub fn find_vertex_face(&self, v: &[i64]) -> Option<&CompactFace> {
        self.faces.iter().find(|f| f.dim == 0 && f.vertices[0].coords() == v)
    }
}

pub(crate) fn dot(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn sub(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn cross(u: &[i64], v: &[i64]) -> Vec<i64> {
    vec![
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub(crate) fn det3(a: &[i64], b: &[i64], c: &[i64]) -> i64 {
    dot(a, &cross(b, c))
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, x| g.gcd(x))
}

/// Divides by the content and fixes the sign so that all entries are
/// nonnegative; `None` for the zero vector or mixed signs.
fn primitive_nonneg(v: &[i64]) -> Option<Vec<i64>> {
    let g = gcd_all(v);
    if g == 0 {
        return None;
    }
    let mut out: Vec<i64> = v.iter().map(|x| x / g).collect();
    if out.iter().all(|x| *x <= 0) {
        out.iter_mut().for_each(|x| *x = -*x);
    }
    out.iter().all(|x| *x >= 0).then_some(out)
}

/// Rank of a set of integer vectors (fraction-free elimination).
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|x| i128::from(*x)).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|i| m[*i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let f = m[i][c];
            if f == 0 {
                continue;
            }
            let piv = m[r][c];
            for j in 0..cols {
                m[i][j] = m[i][j] * piv - m[r][j] * f;
            }
            let g = m[i].iter().fold(0i128, |g, x| g.gcd(x));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Dimension of the face cut out by `normals` (all containing `base`):
/// rank of the vertex differences plus the shared recession directions.
fn face_dim(n: usize, normals: &[&[i64]], base: &LatticePoint, points: &[&LatticePoint]) -> usize {
    let mut dirs: Vec<Vec<i64>> = points.iter().map(|p| sub(p.coords(), base.coords())).collect();
    for i in 0..n {
        if normals.iter().all(|l| l[i] == 0) {
            dirs.push(unit(n, i));
        }
    }
    dirs.retain(|d| d.iter().any(|x| *x != 0));
    rank(&dirs)
}

/// Builds `Gamma_+(f)` with all facets and all compact faces.
pub fn build_polytope(f: &SupportedPoly) -> Result<NewtonPolytope> {
    let n = f.dim();
    let support: Vec<LatticePoint> = f.support().cloned().collect();
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    if support.iter().any(LatticePoint::is_origin) {
        return Err(Error::OriginInSupport);
    }

    let mut dirs: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    for (a, p) in support.iter().enumerate() {
        for q in &support[a + 1..] {
            dirs.push(sub(q.coords(), p.coords()));
        }
    }
    let mut candidates: BTreeSet<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    if n == 2 {
        candidates.extend(dirs.iter().filter_map(|d| primitive_nonneg(&[-d[1], d[0]])));
    } else {
        for (a, d1) in dirs.iter().enumerate() {
            for d2 in &dirs[a + 1..] {
                if let Some(l) = primitive_nonneg(&cross(d1, d2)) {
                    candidates.insert(l);
                }
            }
        }
    }

    let mut facets = Vec::new();
    for normal in candidates {
        let distance = support
            .iter()
            .map(|p| dot(&normal, p.coords()))
            .min()
            .expect("nonempty");
        let on: Vec<&LatticePoint> = support
            .iter()
            .filter(|p| dot(&normal, p.coords()) == distance)
            .collect();
        if face_dim(n, &[&normal], on[0], &on) == n - 1 {
            let compact = normal.iter().all(|x| *x > 0);
            let nu = normal.iter().sum();
            facets.push(Facet {
                normal,
                distance,
                nu,
                compact,
            });
        }
    }

    let containing =
        |p: &LatticePoint| -> Vec<usize> { (0..facets.len()).filter(|i| facets[*i].contains(p)).collect() };

    let vertices: Vec<LatticePoint> = support
        .iter()
        .filter(|p| {
            let normals: Vec<Vec<i64>> = containing(p).iter().map(|i| facets[*i].normal.clone()).collect();
            rank(&normals) == n
        })
        .cloned()
        .collect();

    let mut faces = Vec::new();
    for v in &vertices {
        faces.push(CompactFace {
            dim: 0,
            vertices: vec![v.clone()],
            containing: containing(v),
        });
    }
    if n == 3 {
        for (a, v) in vertices.iter().enumerate() {
            for w in &vertices[a + 1..] {
                let cv = containing(v);
                let common: Vec<usize> = containing(w).into_iter().filter(|i| cv.contains(i)).collect();
                let normals: Vec<Vec<i64>> = common.iter().map(|i| facets[*i].normal.clone()).collect();
                if rank(&normals) == 2 {
                    faces.push(CompactFace {
                        dim: 1,
                        vertices: vec![v.clone(), w.clone()],
                        containing: common,
                    });
                }
            }
        }
    }
    for (idx, facet) in facets.iter().enumerate().filter(|(_, f)| f.compact) {
        let on: Vec<LatticePoint> = vertices.iter().filter(|v| facet.contains(v)).cloned().collect();
        let on = if n == 3 { cyclic_order(&facet.normal, on) } else { on };
        faces.push(CompactFace {
            dim: n - 1,
            vertices: on,
            containing: vec![idx],
        });
    }

    Ok(NewtonPolytope {
        ambient: n,
        support,
        vertices,
        facets,
        faces,
    })
}

/// Orders the vertices of a convex lattice polygon with normal `normal`
/// counterclockwise around the lexicographically smallest vertex.
fn cyclic_order(normal: &[i64], mut vs: Vec<LatticePoint>) -> Vec<LatticePoint> {
    vs.sort();
    if vs.len() <= 2 {
        return vs;
    }
    let apex = vs[0].clone();
    let mut rest: Vec<LatticePoint> = vs[1..].to_vec();
    rest.sort_by(|a, b| {
        let o = det3(normal, &sub(a.coords(), apex.coords()), &sub(b.coords(), apex.coords()));
        0.cmp(&o)
    });
    let mut out = vec![apex];
    out.extend(rest);
    out
}

fn check_compact(poly: &NewtonPolytope, face: &CompactFace) -> Result<()> {
    let n = poly.ambient;
    if face.containing.is_empty() {
        return Err(Error::NotCompact);
    }
    for i in 0..n {
        if poly.containing_facets(face).all(|f| f.normal[i] == 0) {
            return Err(Error::NotCompact);
        }
    }
    Ok(())
}

/// `dim! * Vol(face)` measured in the lattice of the face's affine span.
pub fn normalized_volume(poly: &NewtonPolytope, face: &CompactFace) -> Result<u64> {
    check_compact(poly, face)?;
    match face.dim {
        0 => Ok(1),
        1 => {
            let d = sub(face.vertices[1].coords(), face.vertices[0].coords());
            Ok(gcd_all(&d).unsigned_abs())
        }
        2 => {
            let facet = poly.own_facet(face).ok_or(Error::WrongDim {
                expected: 2,
                found: face.dim,
            })?;
            Ok(polygon_volume(&face.vertices, 0, facet.distance))
        }
        d => Err(Error::WrongDim { expected: 2, found: d }),
    }
}

/// Fan triangulation from `vertices[apex]`; vertices must be in cyclic order.
pub(crate) fn polygon_volume(vertices: &[LatticePoint], apex: usize, distance: i64) -> u64 {
    let k = vertices.len();
    let a = vertices[apex].coords();
    let mut total: u64 = 0;
    for t in 1..k.saturating_sub(1) {
        let b = vertices[(apex + t) % k].coords();
        let c = vertices[(apex + t + 1) % k].coords();
        let det = det3(a, b, c).unsigned_abs();
        debug_assert_eq!(det % distance.unsigned_abs(), 0);
        total += det / distance.unsigned_abs();
    }
    total
}

/// `mult(l1, l2)`: gcd of the 2x2 minors of the coefficient matrix (for
/// `n = 2` the absolute determinant).
pub fn mult2(l1: &[i64], l2: &[i64]) -> Result<u64> {
    let m = match l1.len() {
        2 => (l1[0] * l2[1] - l1[1] * l2[0]).unsigned_abs(),
        _ => gcd_all(&cross(l1, l2)).unsigned_abs(),
    };
    if m == 0 {
        return Err(Error::DependentNormals);
    }
    Ok(m)
}

/// `mult(l1, l2, l3) = |det|`; zero for coplanar normals.
pub fn mult3(l1: &[i64], l2: &[i64], l3: &[i64]) -> u64 {
    det3(l1, l2, l3).unsigned_abs()
}

/// Cyclic order of the facets around a vertex: consecutive facets meet in
/// an edge (compact or not) of `Gamma_+`. Starts at the lexicographically
/// smallest normal and continues towards its smaller neighbour.
pub fn order_facets_around_vertex(poly: &NewtonPolytope, face: &CompactFace) -> Result<Vec<usize>> {
    if face.dim != 0 {
        return Err(Error::NotAVertex);
    }
    let v = &face.vertices[0];
    let mut ids = face.containing.clone();
    ids.sort_by(|a, b| poly.facets[*a].normal.cmp(&poly.facets[*b].normal));
    if poly.ambient == 2 {
        return if ids.len() == 2 { Ok(ids) } else { Err(Error::BrokenFan) };
    }
    let r = ids.len();
    if r < 3 {
        return Err(Error::BrokenFan);
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); r];
    for a in 0..r {
        for b in a + 1..r {
            let (fa, fb) = (&poly.facets[ids[a]], &poly.facets[ids[b]]);
            let shared: Vec<&LatticePoint> = poly
                .vertices
                .iter()
                .filter(|w| fa.contains(w) && fb.contains(w))
                .collect();
            if face_dim(3, &[&fa.normal, &fb.normal], v, &shared) == 1 {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    if adj.iter().any(|nb| nb.len() != 2) {
        return Err(Error::BrokenFan);
    }
    // ids is sorted, so position 0 is the smallest normal and the smaller
    // neighbour is the one with the smaller position.
    let mut order = vec![0usize];
    let mut prev = 0usize;
    let mut cur = adj[0][0].min(adj[0][1]);
    while cur != 0 {
        if order.len() > r {
            return Err(Error::BrokenFan);
        }
        order.push(cur);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
    }
    if order.len() != r {
        return Err(Error::BrokenFan);
    }
    Ok(order.into_iter().map(|i| ids[i]).collect())
}
