//! The Auslander–Reiten quiver of type `A_n`, slice partitions attached to
//! orientations, and an exact Hom/Ext oracle for interval modules.
//!
//! All quiver orientations of `A_n` share one underlying Auslander–Reiten
//! translation quiver once indecomposables are labelled by their dimension
//! vectors: the interval modules `[a,b]` (support `a..=b`, one-dimensional
//! at each supported vertex). We fix the linearly ordered quiver
//! `1 ← 2 ← ⋯ ← n` as the reference module category; its AR quiver
//! ([`ArQuiver`]) has vertices the intervals `[a,b]`, mesh arrows
//! `[a,b] → [a,b+1]` and `[a,b] → [a+1,b]`, and translation
//! `τ[a,b] = [a-1,b-1]`.
//!
//! An arbitrary orientation `Q` partitions the vertices into *slices*
//! `T_1, …, T_n` ([`slices_for`]): slice `z` is the staircase path that
//! starts at `[z,z]` and, stepping from length `i` to length `i+1`, extends
//! to the right when edge `i` of `Q` points right and to the left when it
//! points left, truncated at the boundary of the AR quiver. Reading the
//! slices in order `z = 1, …, n` and each slice tail-to-head spells out the
//! adapted word [`crate::word_for_quiver`] block by block, and the slice
//! sequence is a directed partition of the indecomposables
//! ([`is_directed_partition`]).

use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::linalg;
use crate::quiver::{EdgeDir, QuiverA, RootInterval};

/// The Auslander–Reiten quiver of the linearly ordered `A_n` quiver.
///
/// Vertices are the interval modules `[a,b]`, `1 ≤ a ≤ b ≤ n`; arrows are
/// the mesh arrows `[a,b] → [a,b+1]` (socle preserved) and `[a,b] → [a+1,b]`
/// (top preserved); the translation is `τ[a,b] = [a-1,b-1]`, undefined on
/// the projectives `[1,b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArQuiver {
    n: usize,
}

impl ArQuiver {
    /// The AR quiver for rank `n ≥ 1`.
    #[must_use]
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rank must be at least 1");
        ArQuiver { n }
    }

    /// Rank of the underlying `A_n`.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `[a,b]` is a vertex (i.e. `b ≤ n`).
    #[must_use]
    pub fn has_vertex(&self, v: RootInterval) -> bool {
        v.hi() <= self.n
    }

    /// All vertices in column order.
    #[must_use]
    pub fn vertices(&self) -> Vec<RootInterval> {
        RootInterval::all(self.n)
    }

    /// All mesh arrows as `(source, target)` pairs, sources in column order.
    #[must_use]
    pub fn arrows(&self) -> Vec<(RootInterval, RootInterval)> {
        let mut out = Vec::new();
        for v in self.vertices() {
            if v.hi() + 1 <= self.n {
                out.push((v, RootInterval::new(v.lo(), v.hi() + 1)));
            }
            if v.lo() + 1 <= v.hi() {
                out.push((v, RootInterval::new(v.lo() + 1, v.hi())));
            }
        }
        out
    }

    /// The AR translate `τ[a,b] = [a-1,b-1]`, or `None` on projectives.
    #[must_use]
    pub fn tau(&self, v: RootInterval) -> Option<RootInterval> {
        (v.lo() >= 2).then(|| RootInterval::new(v.lo() - 1, v.hi() - 1))
    }

    /// The inverse translate `τ⁻¹[a,b] = [a+1,b+1]`, or `None` on injectives.
    #[must_use]
    pub fn tau_inverse(&self, v: RootInterval) -> Option<RootInterval> {
        (v.hi() + 1 <= self.n).then(|| RootInterval::new(v.lo() + 1, v.hi() + 1))
    }
}

/// The partition of the AR quiver vertices into the slices `T_1, …, T_n`
/// attached to an orientation `Q`.
///
/// Slice `z` is the staircase path `v_1 = [z,z], v_2, …`: the vertex at
/// position `i` has length `i` and left endpoint `z - L_{<i}`, where
/// `L_{<i}` counts the left-pointing edges among edges `1..i-1` of `Q`,
/// truncated as soon as the interval leaves `1..=n`.
///
/// ```
/// use canbase::{slices_for, QuiverA, RootInterval};
///
/// let s = slices_for(&"RLRL".parse::<QuiverA>().unwrap());
/// assert_eq!(s.slice_of(RootInterval::new(1, 5)), 3);
/// let t4: Vec<String> = s.members(4).iter().map(|r| r.to_string()).collect();
/// assert_eq!(t4, ["[4,4]", "[4,5]", "[3,5]"]);
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePartition {
    n: usize,
    /// `lcount[i-1]` = number of `L` edges among edges `1..i-1`.
    lcount: Vec<usize>,
}

impl SlicePartition {
    /// Rank `n`; slices are numbered `1..=n`.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The slice number `z ∈ 1..=n` containing the vertex `v`.
    #[must_use]
    pub fn slice_of(&self, v: RootInterval) -> usize {
        assert!(v.hi() <= self.n, "vertex {v} outside rank {}", self.n);
        v.lo() + self.lcount[v.len() - 1]
    }

    /// The vertex at position `i` of slice `z`, if it lies in the AR quiver.
    ///
    /// Positions are `1..=n`; the valid positions of a slice always form a
    /// prefix `1..=len`, because along a slice the left endpoint only moves
    /// down and the right endpoint only moves up.
    #[must_use]
    pub fn vertex_at(&self, z: usize, i: usize) -> Option<RootInterval> {
        assert!((1..=self.n).contains(&z), "slice {z} out of range");
        assert!((1..=self.n).contains(&i), "position {i} out of range");
        let lo = z as i64 - self.lcount[i - 1] as i64;
        let hi = lo + i as i64 - 1;
        (lo >= 1 && hi <= self.n as i64)
            .then(|| RootInterval::new(lo as usize, hi as usize))
    }

    /// The vertices of slice `z`, in path order (ascending position/length).
    #[must_use]
    pub fn members(&self, z: usize) -> Vec<RootInterval> {
        (1..=self.n)
            .map_while(|i| self.vertex_at(z, i))
            .collect()
    }

    /// The slice partition as a map in column order.
    #[must_use]
    pub fn as_map(&self) -> BTreeMap<RootInterval, usize> {
        RootInterval::all(self.n)
            .into_iter()
            .map(|r| (r, self.slice_of(r)))
            .collect()
    }
}

impl Serialize for SlicePartition {
    /// Serializes as the flat map `{"lo,hi": slice}` in column order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let roots = RootInterval::all(self.n);
        let mut map = serializer.serialize_map(Some(roots.len()))?;
        for r in roots {
            map.serialize_entry(&format!("{},{}", r.lo(), r.hi()), &self.slice_of(r))?;
        }
        map.end()
    }
}

/// The slice partition of the AR quiver attached to the orientation `q`.
#[must_use]
pub fn slices_for(q: &QuiverA) -> SlicePartition {
    let n = q.rank();
    let mut lcount = Vec::with_capacity(n);
    let mut acc = 0;
    for i in 1..=n {
        lcount.push(acc);
        if i < n && q.edge(i) == EdgeDir::L {
            acc += 1;
        }
    }
    SlicePartition { n, lcount }
}

/// A maximal run of equally oriented edges of an `A_n` quiver.
///
/// The component occupies vertices `first..=last` of the quiver
/// (`last > first`), all edges between them sharing the direction `dir`.
/// Slice positions are matched against these vertex numbers: the portion of
/// slice `z` belonging to the component consists of the slice vertices at
/// positions `first..=last`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    /// Shared direction of the edges in the run.
    pub dir: EdgeDir,
    /// First vertex of the run.
    pub first: usize,
    /// Last vertex of the run (`> first`).
    pub last: usize,
}

impl Component {
    /// Number of vertices in the run.
    #[must_use]
    pub fn len(&self) -> usize {
        self.last - self.first + 1
    }

    /// Components always span at least one edge.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The vertex positions `first..=last`.
    pub fn positions(&self) -> impl Iterator<Item = usize> {
        self.first..=self.last
    }
}

/// The maximal equally-oriented runs of `q`, left to right.
///
/// ```
/// use canbase::{ar::components_of, EdgeDir, QuiverA};
///
/// let comps = components_of(&"RLRL".parse::<QuiverA>().unwrap());
/// assert_eq!(comps.len(), 4);
/// assert_eq!((comps[1].dir, comps[1].first, comps[1].last), (EdgeDir::L, 2, 3));
/// ```
#[must_use]
pub fn components_of(q: &QuiverA) -> Vec<Component> {
    let n = q.rank();
    let mut out = Vec::new();
    let mut start = 1;
    for m in 1..n {
        let end_of_run = m + 1 == n || q.edge(m + 1) != q.edge(m);
        if end_of_run {
            out.push(Component {
                dir: q.edge(m),
                first: start,
                last: m + 1,
            });
            start = m + 1;
        }
    }
    out
}

impl SlicePartition {
    /// The portion of slice `z` belonging to `comp`: the slice vertices at
    /// positions `comp.first..=comp.last`, in position order. Truncation by
    /// the AR boundary always removes a tail, never interior positions.
    #[must_use]
    pub fn portion(&self, z: usize, comp: &Component) -> Vec<RootInterval> {
        comp.positions()
            .map_while(|i| self.vertex_at(z, i))
            .collect()
    }

    /// Whether every position of `comp` is realized in slice `z`.
    #[must_use]
    pub fn portion_complete(&self, z: usize, comp: &Component) -> bool {
        self.vertex_at(z, comp.last).is_some()
    }
}

/// Dimension vector of the interval module `[a,b]` in rank `n`.
fn dim_vector(m: RootInterval, n: usize) -> Vec<i64> {
    (1..=n).map(|i| i64::from(m.contains(i))).collect()
}

/// The Euler form `⟨d, e⟩ = Σ_i d_i e_i − Σ_m d_{m+1} e_m` of the linearly
/// ordered `A_n` quiver (arrows `m+1 → m`), evaluated on dimension vectors
/// of interval modules.
///
/// For modules `M`, `N` it computes `dim Hom(M,N) − dim Ext¹(M,N)`.
#[must_use]
pub fn euler_form(m: RootInterval, nn: RootInterval) -> i64 {
    let n = m.hi().max(nn.hi());
    let d = dim_vector(m, n);
    let e = dim_vector(nn, n);
    let dot: i64 = (0..n).map(|i| d[i] * e[i]).sum();
    let arrows: i64 = (0..n - 1).map(|i| d[i + 1] * e[i]).sum();
    dot - arrows
}

/// `dim Hom(M, N)` for interval modules over the linearly ordered quiver,
/// computed by solving the intertwiner equations exactly.
///
/// A homomorphism is a family of scalars `φ_i`, one per vertex in
/// `supp M ∩ supp N`, subject to one equation per arrow `m+1 → m`:
/// `N(α)·φ_{m+1} = φ_m·M(α)`, where a structure map is the identity when
/// both endpoints are supported and zero otherwise. The dimension is the
/// dimension of the exact rational solution space.
///
/// ```
/// use canbase::{ar::hom_dim, RootInterval};
///
/// let r = RootInterval::new;
/// assert_eq!(hom_dim(r(1, 1), r(1, 2)), 1); // the socle inclusion
/// assert_eq!(hom_dim(r(1, 2), r(1, 1)), 0);
/// ```
#[must_use]
pub fn hom_dim(m: RootInterval, nn: RootInterval) -> usize {
    let n = m.hi().max(nn.hi());
    let vars: Vec<usize> = (1..=n)
        .filter(|&i| m.contains(i) && nn.contains(i))
        .collect();
    let var_index = |i: usize| vars.iter().position(|&v| v == i);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for mm in 1..n {
        // Arrow mm+1 → mm:  N(α)·φ_{mm+1} − φ_mm·M(α) = 0.
        let mut row = vec![0i64; vars.len()];
        if nn.contains(mm) && nn.contains(mm + 1) {
            if let Some(j) = var_index(mm + 1) {
                row[j] += 1;
            }
        }
        if m.contains(mm) && m.contains(mm + 1) {
            if let Some(j) = var_index(mm) {
                row[j] -= 1;
            }
        }
        if row.iter().any(|&c| c != 0) {
            rows.push(row);
        }
    }
    linalg::solution_space_dim(&linalg::to_rational(&rows), vars.len())
}

/// `dim Ext¹(M, N)` for interval modules over the linearly ordered quiver,
/// via `dim Ext¹ = dim Hom − ⟨dim M, dim N⟩` (hereditary path algebra).
///
/// ```
/// use canbase::{ar::ext_dim, RootInterval};
///
/// let r = RootInterval::new;
/// assert_eq!(ext_dim(r(2, 2), r(1, 1)), 1); // 0 → S1 → [1,2] → S2 → 0
/// assert_eq!(ext_dim(r(1, 1), r(2, 2)), 0);
/// ```
#[must_use]
pub fn ext_dim(m: RootInterval, nn: RootInterval) -> usize {
    let h = hom_dim(m, nn) as i64;
    let e = h - euler_form(m, nn);
    assert!(e >= 0, "Ext dimension must be nonnegative");
    e as usize
}

/// Whether the ordered list of parts is a *directed partition* of the
/// indecomposables: `Ext¹` vanishes between modules in the same part, and
/// for parts `I_k` before `I_l` both `Ext¹(X_α, X_β) = 0` and
/// `Hom(X_β, X_α) = 0` hold for `α ∈ I_k`, `β ∈ I_l`.
#[must_use]
pub fn is_directed_partition(parts: &[Vec<RootInterval>]) -> bool {
    for (k, part) in parts.iter().enumerate() {
        for &a in part {
            for &b in part {
                if ext_dim(a, b) != 0 {
                    return false;
                }
            }
        }
        for later in &parts[k + 1..] {
            for &a in part {
                for &b in later {
                    if ext_dim(a, b) != 0 || hom_dim(b, a) != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuiverA {
        s.parse().unwrap()
    }

    fn r(lo: usize, hi: usize) -> RootInterval {
        RootInterval::new(lo, hi)
    }

    /// Independent staircase construction of the slices, walking the mesh.
    fn slices_by_recursion(quiver: &QuiverA) -> Vec<Vec<RootInterval>> {
        let n = quiver.rank();
        let mut slices = Vec::new();
        for z in 1..=n {
            let mut path = vec![r(z, z)];
            for i in 2..=n {
                let prev = *path.last().unwrap();
                let next = match quiver.edge(i - 1) {
                    EdgeDir::R => (prev.lo() as i64, prev.hi() as i64 + 1),
                    EdgeDir::L => (prev.lo() as i64 - 1, prev.hi() as i64),
                };
                if next.0 < 1 || next.1 > n as i64 {
                    break;
                }
                path.push(r(next.0 as usize, next.1 as usize));
            }
            slices.push(path);
        }
        slices
    }

    #[test]
    fn closed_form_matches_staircase_recursion() {
        for n in 1..=6 {
            for quiver in QuiverA::all(n) {
                let s = slices_for(&quiver);
                let rec = slices_by_recursion(&quiver);
                for z in 1..=n {
                    assert_eq!(s.members(z), rec[z - 1], "quiver {quiver}, slice {z}");
                }
            }
        }
    }

    #[test]
    fn slices_partition_all_vertices() {
        for n in 1..=6 {
            for quiver in QuiverA::all(n) {
                let s = slices_for(&quiver);
                let mut count = 0;
                for z in 1..=n {
                    for v in s.members(z) {
                        assert_eq!(s.slice_of(v), z);
                        count += 1;
                    }
                }
                assert_eq!(count, n * (n + 1) / 2, "quiver {quiver}");
            }
        }
    }

    #[test]
    fn slices_are_paths_in_the_mesh() {
        for n in 2..=6 {
            let ar = ArQuiver::new(n);
            let arrows = ar.arrows();
            for quiver in QuiverA::all(n) {
                let s = slices_for(&quiver);
                for z in 1..=n {
                    let mem = s.members(z);
                    for w in mem.windows(2) {
                        let linked = arrows.contains(&(w[0], w[1]))
                            || arrows.contains(&(w[1], w[0]));
                        assert!(linked, "quiver {quiver}: {} and {} not adjacent", w[0], w[1]);
                    }
                }
            }
        }
    }

    #[test]
    fn rlrl_slices_match_known_picture() {
        let s = slices_for(&q("RLRL"));
        let slice_strs = |z: usize| -> Vec<String> {
            s.members(z).iter().map(|v| v.to_string()).collect()
        };
        assert_eq!(slice_strs(1), ["[1,1]", "[1,2]"]);
        assert_eq!(slice_strs(2), ["[2,2]", "[2,3]", "[1,3]", "[1,4]"]);
        assert_eq!(slice_strs(3), ["[3,3]", "[3,4]", "[2,4]", "[2,5]", "[1,5]"]);
        assert_eq!(slice_strs(4), ["[4,4]", "[4,5]", "[3,5]"]);
        assert_eq!(slice_strs(5), ["[5,5]"]);
    }

    #[test]
    fn linear_quiver_slices_are_columns() {
        let s = slices_for(&QuiverA::linear(4));
        for root in RootInterval::all(4) {
            assert_eq!(s.slice_of(root), root.hi());
        }
    }

    #[test]
    fn slice_blocks_spell_the_adapted_word() {
        // Reading slices z = 1..n, each slice's support union in decreasing
        // order, reproduces the adapted word block by block.
        use crate::quiver::word_for_quiver;
        for n in 1..=6 {
            for quiver in QuiverA::all(n) {
                let s = slices_for(&quiver);
                let mut letters = Vec::new();
                for z in 1..=n {
                    let mem = s.members(z);
                    let mut support: Vec<usize> = (1..=n)
                        .filter(|&v| mem.iter().any(|m| m.contains(v)))
                        .collect();
                    support.reverse();
                    letters.extend(support);
                }
                assert_eq!(
                    letters,
                    word_for_quiver(&quiver).letters(),
                    "quiver {quiver}"
                );
            }
        }
    }

    #[test]
    fn components_of_rlrl() {
        let comps = components_of(&q("RLRL"));
        let shape: Vec<(EdgeDir, usize, usize)> =
            comps.iter().map(|c| (c.dir, c.first, c.last)).collect();
        assert_eq!(
            shape,
            [
                (EdgeDir::R, 1, 2),
                (EdgeDir::L, 2, 3),
                (EdgeDir::R, 3, 4),
                (EdgeDir::L, 4, 5),
            ]
        );
        assert_eq!(components_of(&q("LL")), vec![Component {
            dir: EdgeDir::L,
            first: 1,
            last: 3,
        }]);
        assert!(components_of(&QuiverA::new(vec![])).is_empty());
    }

    #[test]
    fn rlrl_component_portions() {
        // Occupancy table of the four components across the five slices.
        let s = slices_for(&q("RLRL"));
        let comps = components_of(&q("RLRL"));
        let sizes: Vec<Vec<usize>> = comps
            .iter()
            .map(|c| (1..=5).map(|z| s.portion(z, c).len()).collect())
            .collect();
        assert_eq!(sizes[0], [2, 2, 2, 2, 1]);
        assert_eq!(sizes[1], [1, 2, 2, 2, 0]);
        assert_eq!(sizes[2], [0, 2, 2, 1, 0]);
        assert_eq!(sizes[3], [0, 1, 2, 0, 0]);
        // Sample the actual vertices of component 2 (left run on {2,3}).
        assert_eq!(s.portion(2, &comps[1]), [r(2, 3), r(1, 3)]);
        assert_eq!(s.portion(3, &comps[1]), [r(3, 4), r(2, 4)]);
        assert!(s.portion_complete(2, &comps[1]));
        assert!(!s.portion_complete(1, &comps[1]));
    }

    #[test]
    fn portions_align_by_translate() {
        // Matching positions in consecutive slices differ by τ⁻¹ (shift by
        // (1,1)): the alignment underlying every cone row.
        for n in 2..=6 {
            for quiver in QuiverA::all(n) {
                let s = slices_for(&quiver);
                for comp in components_of(&quiver) {
                    for z in 1..n {
                        let x = s.portion(z, &comp);
                        let y = s.portion(z + 1, &comp);
                        for (a, b) in x.iter().zip(&y) {
                            assert_eq!(b.lo(), a.lo() + 1, "quiver {quiver}");
                            assert_eq!(b.hi(), a.hi() + 1, "quiver {quiver}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mesh_shape() {
        let ar = ArQuiver::new(2);
        assert_eq!(
            ar.arrows(),
            vec![(r(1, 1), r(1, 2)), (r(1, 2), r(2, 2))]
        );
        assert_eq!(ar.tau(r(2, 2)), Some(r(1, 1)));
        assert_eq!(ar.tau(r(1, 2)), None);
        assert_eq!(ar.tau_inverse(r(1, 1)), Some(r(2, 2)));
        assert_eq!(ar.tau_inverse(r(2, 2)), None);
        // Rank 5: each non-boundary vertex sits in one mesh.
        let ar5 = ArQuiver::new(5);
        assert_eq!(ar5.arrows().len(), 2 * (4 + 3 + 2 + 1));
    }

    #[test]
    fn hom_and_ext_golden_values() {
        assert_eq!(hom_dim(r(1, 1), r(1, 2)), 1);
        assert_eq!(hom_dim(r(1, 2), r(1, 1)), 0);
        assert_eq!(hom_dim(r(1, 2), r(2, 2)), 1);
        assert_eq!(hom_dim(r(2, 2), r(1, 2)), 0);
        assert_eq!(hom_dim(r(1, 3), r(2, 3)), 1); // projection onto the quotient
        assert_eq!(hom_dim(r(2, 3), r(1, 3)), 0);
        assert_eq!(hom_dim(r(1, 3), r(1, 3)), 1);
        assert_eq!(hom_dim(r(1, 1), r(2, 2)), 0);
        assert_eq!(ext_dim(r(2, 2), r(1, 1)), 1);
        assert_eq!(ext_dim(r(1, 1), r(2, 2)), 0);
        assert_eq!(ext_dim(r(2, 3), r(1, 2)), 1); // middle term [1,3] ⊕ [2,2]
        assert_eq!(ext_dim(r(1, 2), r(2, 3)), 0);
        assert_eq!(ext_dim(r(3, 3), r(1, 2)), 1);
        assert_eq!(ext_dim(r(1, 2), r(3, 3)), 0);
        // No self-extensions on interval modules.
        for v in RootInterval::all(5) {
            assert_eq!(ext_dim(v, v), 0);
            assert_eq!(hom_dim(v, v), 1);
        }
    }

    #[test]
    fn euler_form_is_hom_minus_ext() {
        for a in RootInterval::all(4) {
            for b in RootInterval::all(4) {
                assert_eq!(
                    euler_form(a, b),
                    hom_dim(a, b) as i64 - ext_dim(a, b) as i64
                );
            }
        }
    }

    #[test]
    fn column_order_is_a_directed_enumeration() {
        let parts: Vec<Vec<RootInterval>> =
            RootInterval::all(4).into_iter().map(|v| vec![v]).collect();
        assert!(is_directed_partition(&parts));
        // Reversing the order breaks directedness.
        let rev: Vec<Vec<RootInterval>> = parts.into_iter().rev().collect();
        assert!(!is_directed_partition(&rev));
    }

    #[test]
    fn slice_partitions_are_directed() {
        for n in 1..=4 {
            for quiver in QuiverA::all(n) {
                let s = slices_for(&quiver);
                let parts: Vec<Vec<RootInterval>> =
                    (1..=n).map(|z| s.members(z)).collect();
                assert!(is_directed_partition(&parts), "quiver {quiver}");
            }
        }
    }

    #[test]
    fn slice_partition_serializes_to_flat_map() {
        let s = slices_for(&q("L"));
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"1,1": 1, "1,2": 2, "2,2": 2})
        );
    }
}
