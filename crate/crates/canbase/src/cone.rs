//! Integer inequality systems and the three cone families attached to a
//! type `A_n` quiver.
//!
//! A [`ConeSpec`] is a finite list of integer linear forms `r` over labeled
//! coordinates, cutting out the rational cone
//!
//! ```text
//!     { x ≥ 0 : r · x ≥ 0 for every row r }
//! ```
//!
//! inside the nonnegative orthant. Coordinate nonnegativity is *implicit* in
//! membership tests and never stored as a row. Three constructors produce the
//! cones of interest:
//!
//! * [`lusztig_cone`] — the Lusztig cone of a reduced word for the longest
//!   element: one row for each consecutive pair of equal letters, stating
//!   that the neighbours between them dominate the pair.
//! * [`c_pbw_cone`] — the cone of PBW exponent triangles adapted to a quiver
//!   `Q`, read off the slice partition of the Auslander–Reiten quiver: tail
//!   sums along fully realized left-component slice pairs, and entrywise
//!   comparisons along right components.
//! * [`l_pbw_cone`] — the smaller cone that the Lusztig cone maps onto under
//!   the change of basis `E`: head sums along fully realized slice pairs,
//!   reversed entrywise comparisons in the interior, and a diagonal chain
//!   from the leftmost component.
//!
//! Exact lattice enumeration ([`ConeSpec::enumerate_points`]) and symbolic
//! transport along a unimodular map ([`cone_image_under`]) provide the two
//! comparison routes — semantic and symbolic — used by the verification
//! harnesses. They are deliberately independent: one enumerates integer
//! points, the other rewrites inequalities, and agreement of the two is part
//! of what gets checked.

use std::collections::BTreeSet;

use num::Integer;
use serde_json::{json, Map, Value};

use crate::ar::{components_of, slices_for};
use crate::linmap::{root_labels, word_labels, IntLinearMap, LinMapError};
use crate::quiver::{EdgeDir, QuiverA, ReducedWord, RootInterval};

/// One inequality `coeffs · x ≥ 0` with a human-readable provenance label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeRow {
    /// Dense coefficient vector, one entry per cone coordinate.
    pub coeffs: Vec<i64>,
    /// Where the row came from, e.g. `"C1 X2 z=2 a=1"` or `"lusztig i=2 s=1 s'=5"`.
    pub label: String,
}

impl ConeRow {
    /// The coefficients divided by their (positive) gcd. Signs are never
    /// flipped: `x ≥ y` and `y ≥ x` stay distinct rows. An all-zero row is
    /// returned unchanged.
    #[must_use]
    pub fn primitive(&self) -> Vec<i64> {
        let g = self.coeffs.iter().fold(0i64, |g, &c| g.gcd(&c));
        if g <= 1 {
            self.coeffs.clone()
        } else {
            self.coeffs.iter().map(|&c| c / g).collect()
        }
    }

    /// Render as `lhs ≥ rhs` moving negative terms to the right-hand side,
    /// e.g. `c_1_3 + c_2_3 >= c_2_4 + c_3_4`.
    #[must_use]
    pub fn inequality(&self, labels: &[String]) -> String {
        let side = |sign: i64| {
            let terms: Vec<String> = self
                .coeffs
                .iter()
                .zip(labels)
                .filter(|&(&c, _)| c * sign > 0)
                .map(|(&c, l)| {
                    if c.abs() == 1 {
                        l.clone()
                    } else {
                        format!("{} {}", c.abs(), l)
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_owned()
            } else {
                terms.join(" + ")
            }
        };
        format!("{} >= {}", side(1), side(-1))
    }
}

/// A rational cone `{ x ≥ 0 : r · x ≥ 0 for all rows r }` over labeled
/// integer coordinates.
///
/// Rows keep their generation order and labels; [`ConeSpec::normalize`]
/// produces the canonical form used for symbolic comparisons. Rows are *not*
/// checked for redundancy — a row implied by the others is kept, so that the
/// emitted system matches its defining recipe line by line.
///
/// ```
/// use canbase::ConeSpec;
/// use canbase::cone::ConeRow;
///
/// let labels = vec!["x".to_owned(), "y".to_owned()];
/// let cone = ConeSpec::new(labels, vec![ConeRow { coeffs: vec![1, -1], label: "x>=y".into() }]);
/// assert!(cone.contains(&[2, 1]));
/// assert!(!cone.contains(&[1, 2]));
/// assert!(!cone.contains(&[2, -1])); // coordinates must be nonnegative
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeSpec {
    dim: usize,
    coord_labels: Vec<String>,
    rows: Vec<ConeRow>,
}

impl ConeSpec {
    /// Build a cone over the given coordinates. Every row must have exactly
    /// one coefficient per coordinate.
    #[must_use]
    pub fn new(coord_labels: Vec<String>, rows: Vec<ConeRow>) -> Self {
        let dim = coord_labels.len();
        for row in &rows {
            assert_eq!(row.coeffs.len(), dim, "row/coordinate arity mismatch");
        }
        ConeSpec {
            dim,
            coord_labels,
            rows,
        }
    }

    /// Number of coordinates.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinate labels, in coordinate order.
    #[must_use]
    pub fn coord_labels(&self) -> &[String] {
        &self.coord_labels
    }

    /// The defining rows, in generation order.
    #[must_use]
    pub fn rows(&self) -> &[ConeRow] {
        &self.rows
    }

    /// Whether `x` lies in the cone: all coordinates nonnegative and every
    /// row evaluates `≥ 0`.
    ///
    /// # Panics
    /// If `x.len() != self.dim()`.
    #[must_use]
    pub fn contains(&self, x: &[i64]) -> bool {
        assert_eq!(x.len(), self.dim, "point/cone dimension mismatch");
        x.iter().all(|&v| v >= 0)
            && self
                .rows
                .iter()
                .all(|r| dot(&r.coeffs, x) >= 0)
    }

    /// Labels of everything `x` violates: a synthetic `nonneg <coord>` entry
    /// for each negative coordinate, then the labels of the violated rows in
    /// row order. Empty exactly when [`ConeSpec::contains`] holds.
    #[must_use]
    pub fn violations(&self, x: &[i64]) -> Vec<String> {
        assert_eq!(x.len(), self.dim, "point/cone dimension mismatch");
        let mut out: Vec<String> = x
            .iter()
            .zip(&self.coord_labels)
            .filter(|&(&v, _)| v < 0)
            .map(|(_, l)| format!("nonneg {l}"))
            .collect();
        out.extend(
            self.rows
                .iter()
                .filter(|r| dot(&r.coeffs, x) < 0)
                .map(|r| r.label.clone()),
        );
        out
    }

    /// All rows rendered as `lhs ≥ rhs` strings, in row order.
    #[must_use]
    pub fn inequalities(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| r.inequality(&self.coord_labels))
            .collect()
    }

    /// Canonical form for symbolic comparison: every row divided by its gcd
    /// (signs kept — normalization never flips an inequality), all-zero rows
    /// dropped, duplicates merged keeping the first label, and the result
    /// sorted lexicographically by coefficient vector.
    #[must_use]
    pub fn normalize(&self) -> ConeSpec {
        let mut seen = BTreeSet::new();
        let mut rows: Vec<ConeRow> = self
            .rows
            .iter()
            .filter_map(|r| {
                let coeffs = r.primitive();
                if coeffs.iter().all(|&c| c == 0) || !seen.insert(coeffs.clone()) {
                    None
                } else {
                    Some(ConeRow {
                        coeffs,
                        label: r.label.clone(),
                    })
                }
            })
            .collect();
        rows.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        ConeSpec {
            dim: self.dim,
            coord_labels: self.coord_labels.clone(),
            rows,
        }
    }

    /// The set of primitive row vectors (zero rows dropped). Two systems cut
    /// out by the same recipe are compared through this set.
    #[must_use]
    pub fn row_set(&self) -> BTreeSet<Vec<i64>> {
        self.rows
            .iter()
            .map(ConeRow::primitive)
            .filter(|c| c.iter().any(|&v| v != 0))
            .collect()
    }

    /// Visit every lattice point of the cone with all coordinates in
    /// `0..=bound`, in lexicographic order.
    ///
    /// The walk is a depth-first search over coordinate prefixes that prunes
    /// a prefix as soon as some row can no longer reach `≥ 0` even if every
    /// remaining coordinate with a positive coefficient is set to `bound`.
    pub fn for_each_point<F: FnMut(&[i64])>(&self, bound: i64, mut f: F) {
        assert!(bound >= 0, "enumeration bound must be nonnegative");
        if self.dim == 0 {
            if self.rows.is_empty() {
                f(&[]);
            }
            return;
        }
        // best[r][d] = the largest value coordinates d.. can still add to row r.
        let nrows = self.rows.len();
        let mut best = vec![vec![0i64; self.dim + 1]; nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for d in (0..self.dim).rev() {
                let gain = if row.coeffs[d] > 0 {
                    row.coeffs[d] * bound
                } else {
                    0
                };
                best[r][d] = best[r][d + 1] + gain;
            }
        }
        let mut x = vec![0i64; self.dim];
        let mut partial = vec![0i64; nrows];
        self.walk(0, bound, &mut x, &mut partial, &best, &mut f);
    }

    fn walk<F: FnMut(&[i64])>(
        &self,
        d: usize,
        bound: i64,
        x: &mut Vec<i64>,
        partial: &mut Vec<i64>,
        best: &[Vec<i64>],
        f: &mut F,
    ) {
        if d == self.dim {
            f(x);
            return;
        }
        let base = partial.clone();
        'values: for v in 0..=bound {
            for (r, row) in self.rows.iter().enumerate() {
                partial[r] = base[r] + row.coeffs[d] * v;
                if partial[r] + best[r][d + 1] < 0 {
                    continue 'values;
                }
            }
            x[d] = v;
            self.walk(d + 1, bound, x, partial, best, f);
        }
        x[d] = 0;
        partial.clone_from(&base);
    }

    /// All lattice points of the cone with coordinates in `0..=bound`, in
    /// lexicographic order.
    ///
    /// ```
    /// use canbase::ConeSpec;
    ///
    /// let free = ConeSpec::new(vec!["x".into(), "y".into(), "z".into()], vec![]);
    /// assert_eq!(free.enumerate_points(1).len(), 8);
    /// assert_eq!(free.enumerate_points(1)[1], vec![0, 0, 1]);
    /// ```
    #[must_use]
    pub fn enumerate_points(&self, bound: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        self.for_each_point(bound, |x| out.push(x.to_vec()));
        out
    }

    /// Number of lattice points with coordinates in `0..=bound`.
    #[must_use]
    pub fn count_points(&self, bound: i64) -> u64 {
        let mut c = 0;
        self.for_each_point(bound, |_| c += 1);
        c
    }

    /// JSON form: `{"dim": N, "rows": [{"coeffs": {label: value, …},
    /// "label": "…"}]}` with sparse coefficient maps in label order.
    #[must_use]
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut coeffs = Map::new();
                for (l, &c) in self.coord_labels.iter().zip(&r.coeffs) {
                    if c != 0 {
                        coeffs.insert(l.clone(), json!(c));
                    }
                }
                json!({ "coeffs": Value::Object(coeffs), "label": r.label })
            })
            .collect();
        json!({ "dim": self.dim, "rows": rows })
    }
}

fn dot(coeffs: &[i64], x: &[i64]) -> i64 {
    coeffs.iter().zip(x).map(|(&c, &v)| c * v).sum()
}

/// The image of `cone` under the unimodular map `map`, as an inequality
/// system over the output coordinates.
///
/// Substituting `x = map⁻¹ · y` turns every row `r · x ≥ 0` into
/// `(r · map⁻¹) · y ≥ 0` (labels preserved, order kept), and the implicit
/// nonnegativity `x_i ≥ 0` of the source coordinates into the extra rows
/// `(map⁻¹)_i · y ≥ 0`, labeled `nonneg <input coordinate>`. The output is
/// *not* normalized, so callers can still see the transported rows in the
/// source order.
///
/// # Errors
/// Propagates [`LinMapError`] when `map` is not square unimodular.
///
/// # Panics
/// If the cone's coordinates don't match the map's input coordinates.
pub fn cone_image_under(map: &IntLinearMap, cone: &ConeSpec) -> Result<ConeSpec, LinMapError> {
    assert_eq!(
        cone.coord_labels(),
        map.col_labels(),
        "cone coordinates must be the map's inputs"
    );
    let inv = map.inverse()?;
    let transported = |r: &[i64]| -> Vec<i64> {
        let mut out = vec![0i64; map.nrows()];
        for (ri, inv_row) in r.iter().zip(inv.rows()) {
            for (o, &m) in out.iter_mut().zip(inv_row) {
                *o += ri * m;
            }
        }
        out
    };
    let mut rows: Vec<ConeRow> = cone
        .rows()
        .iter()
        .map(|r| ConeRow {
            coeffs: transported(&r.coeffs),
            label: r.label.clone(),
        })
        .collect();
    for (i, label) in map.col_labels().iter().enumerate() {
        rows.push(ConeRow {
            coeffs: inv.rows()[i].clone(),
            label: format!("nonneg {label}"),
        });
    }
    Ok(ConeSpec::new(map.row_labels().to_vec(), rows))
}

/// The Lusztig cone of a reduced word for the longest element.
///
/// For every pair of positions `s < s'` carrying the same letter `i` with no
/// `i` in between, the cone imposes
///
/// ```text
///     Σ { a_p : s < p < s', |i_p − i| = 1 }  ≥  a_s + a_{s'} ,
/// ```
///
/// one row per pair, ordered by `s`. Monomials with exponents in this cone
/// are the candidates for canonical basis elements of especially simple
/// shape.
///
/// ```
/// use canbase::{lusztig_cone, ReducedWord};
///
/// let w = ReducedWord::new(2, vec![1, 2, 1]).unwrap();
/// let cone = lusztig_cone(&w);
/// assert_eq!(cone.inequalities(), ["a_2 >= a_1 + a_3"]);
/// ```
#[must_use]
pub fn lusztig_cone(word: &ReducedWord) -> ConeSpec {
    let letters = word.letters();
    let len = letters.len();
    let mut rows = Vec::new();
    for s in 0..len {
        let i = letters[s];
        let Some(t) = (s + 1..len).find(|&t| letters[t] == i) else {
            continue;
        };
        let mut coeffs = vec![0i64; len];
        coeffs[s] -= 1;
        coeffs[t] -= 1;
        for p in s + 1..t {
            if letters[p].abs_diff(i) == 1 {
                coeffs[p] += 1;
            }
        }
        rows.push(ConeRow {
            coeffs,
            label: format!("lusztig i={} s={} s'={}", i, s + 1, t + 1),
        });
    }
    ConeSpec::new(word_labels(word.rank()), rows)
}

/// Rows shared by the two quiver-cone constructors: for each component `X`
/// (1-based index) and each adjacent slice pair `(z, z+1)`, hand the portions
/// `T_z(X)` and `T_{z+1}(X)` to `emit`.
fn component_slice_pairs(
    q: &QuiverA,
    mut emit: impl FnMut(usize, EdgeDir, usize, usize, &[RootInterval], &[RootInterval]),
) {
    let n = q.rank();
    let slices = slices_for(q);
    for (ci0, comp) in components_of(q).iter().enumerate() {
        for z in 1..n {
            let xs = slices.portion(z, comp);
            let ys = slices.portion(z + 1, comp);
            emit(ci0 + 1, comp.dir, comp.len(), z, &xs, &ys);
        }
    }
}

/// Insert `±1` at the triangle coordinates of the given roots.
fn interval_row(dim: usize, plus: &[RootInterval], minus: &[RootInterval]) -> Vec<i64> {
    let mut coeffs = vec![0i64; dim];
    for r in plus {
        coeffs[r.triangle_index()] += 1;
    }
    for r in minus {
        coeffs[r.triangle_index()] -= 1;
    }
    coeffs
}

/// Drop rows whose primitive form already appeared, keeping first labels.
fn dedupe(rows: Vec<ConeRow>) -> Vec<ConeRow> {
    let mut seen = BTreeSet::new();
    rows.into_iter()
        .filter(|r| seen.insert(r.primitive()))
        .collect()
}

/// The cone of PBW exponent triangles adapted to the quiver `q`.
///
/// Write `T_z(X)` for the portion of slice `z` belonging to a component `X`
/// of `q`, listed by position, with `x_r`, `y_r` the `r`-th members of
/// `T_z(X)`, `T_{z+1}(X)` and `k`, `l`, `s` their sizes and the component
/// size. The rows are, for every component and every slice pair:
///
/// * **C1** (left components, only when both portions are complete,
///   `k = l = s`): the tail sums
///   `Σ_{r=a..s} c_{x_r} ≥ Σ_{r=a..s} c_{y_r}` for `a = 1..=s`;
/// * **C2** (right components): the entrywise comparisons
///   `c_{x_r} ≥ c_{y_r}` for `r = 1..=min(l, k−1)`.
///
/// Triangles in this cone are exactly those whose PBW monomial lies in the
/// crystal image described by the string parametrization; the coincidence
/// theorem harness checks that statement point by point.
///
/// ```
/// use canbase::{c_pbw_cone, QuiverA};
///
/// let cone = c_pbw_cone(&"R".parse::<QuiverA>().unwrap());
/// assert_eq!(cone.inequalities(), ["c_1_1 >= c_2_2"]);
/// assert!(c_pbw_cone(&"L".parse::<QuiverA>().unwrap()).rows().is_empty());
/// ```
#[must_use]
pub fn c_pbw_cone(q: &QuiverA) -> ConeSpec {
    let n = q.rank();
    let dim = n * (n + 1) / 2;
    let mut rows = Vec::new();
    component_slice_pairs(q, |ci, dir, s, z, xs, ys| {
        let (k, l) = (xs.len(), ys.len());
        match dir {
            EdgeDir::L => {
                if k == s && l == s {
                    for a in 1..=s {
                        rows.push(ConeRow {
                            coeffs: interval_row(dim, &xs[a - 1..], &ys[a - 1..]),
                            label: format!("C1 X{ci} z={z} a={a}"),
                        });
                    }
                }
            }
            EdgeDir::R => {
                for r in 1..=l.min(k.saturating_sub(1)) {
                    rows.push(ConeRow {
                        coeffs: interval_row(dim, &xs[r - 1..r], &ys[r - 1..r]),
                        label: format!("C2 X{ci} z={z} r={r}"),
                    });
                }
            }
        }
    });
    ConeSpec::new(root_labels(n), dedupe(rows))
}

/// The image of the Lusztig cone of `i(q)` in triangle coordinates.
///
/// With the notation of [`c_pbw_cone`], the rows are, for every component
/// `X` and slice pair:
///
/// * **L1** (left `X`, complete pairs `k = l = s`): the head sum
///   `Σ_{r=1..s} c_{x_r} ≥ Σ_{r=1..s} c_{y_r}`;
/// * **L2** (left `X`): `c_{y_r} ≥ c_{x_r}` for `r = 2..=min(k, l−1)`;
/// * **L3** (right `X`, complete pairs): `Σ c_{y_r} ≥ Σ c_{x_r}`;
/// * **L4** (right `X`): `c_{x_r} ≥ c_{y_r}` for `r = 2..=min(l, k−1)`;
/// * **L5/L6** (the leftmost component only): the diagonal comparison
///   `c_{y_1} ≥ c_{x_1}` when it points left, `c_{x_1} ≥ c_{y_1}` when it
///   points right, for every pair where both portions are nonempty.
///
/// Every inequality of this system is implied by membership in
/// [`c_pbw_cone`] together with the Lusztig rows pulled back along `D`; the
/// cone correspondence harness checks the symbolic equality
/// `E(Lusztig) = L_PBW` row for row, and the inclusion harness checks
/// `L_PBW ⊆ C_PBW` on lattice points.
///
/// ```
/// use canbase::{l_pbw_cone, QuiverA};
///
/// let cone = l_pbw_cone(&"L".parse::<QuiverA>().unwrap());
/// assert_eq!(cone.inequalities(), ["c_2_2 >= c_1_1"]);
/// ```
#[must_use]
pub fn l_pbw_cone(q: &QuiverA) -> ConeSpec {
    let n = q.rank();
    let dim = n * (n + 1) / 2;
    let mut rows = Vec::new();
    component_slice_pairs(q, |ci, dir, s, z, xs, ys| {
        let (k, l) = (xs.len(), ys.len());
        let leftmost = ci == 1;
        match dir {
            EdgeDir::L => {
                if k == s && l == s {
                    rows.push(ConeRow {
                        coeffs: interval_row(dim, xs, ys),
                        label: format!("L1 X{ci} z={z}"),
                    });
                }
                for r in 2..=k.min(l.saturating_sub(1)) {
                    rows.push(ConeRow {
                        coeffs: interval_row(dim, &ys[r - 1..r], &xs[r - 1..r]),
                        label: format!("L2 X{ci} z={z} r={r}"),
                    });
                }
                if leftmost && k >= 1 && l >= 1 {
                    rows.push(ConeRow {
                        coeffs: interval_row(dim, &ys[..1], &xs[..1]),
                        label: format!("L5 X{ci} z={z}"),
                    });
                }
            }
            EdgeDir::R => {
                if k == s && l == s {
                    rows.push(ConeRow {
                        coeffs: interval_row(dim, ys, xs),
                        label: format!("L3 X{ci} z={z}"),
                    });
                }
                for r in 2..=l.min(k.saturating_sub(1)) {
                    rows.push(ConeRow {
                        coeffs: interval_row(dim, &xs[r - 1..r], &ys[r - 1..r]),
                        label: format!("L4 X{ci} z={z} r={r}"),
                    });
                }
                if leftmost && k >= 1 && l >= 1 {
                    rows.push(ConeRow {
                        coeffs: interval_row(dim, &xs[..1], &ys[..1]),
                        label: format!("L6 X{ci} z={z}"),
                    });
                }
            }
        }
    });
    ConeSpec::new(root_labels(n), dedupe(rows))
}
