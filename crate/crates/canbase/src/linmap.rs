//! The unimodular change of basis between exponent triangles and adapted
//! word coordinates.
//!
//! Fix an orientation `Q` with adapted word `i(Q) = (i_1, …, i_N)`,
//! `N = n(n+1)/2`. The word splits into blocks, one per slice: block `p` has
//! `|T_p|` positions and its letters are the support of slice `p` read in
//! decreasing order. The linear map [`d_map`] sends a triangle
//! `c = (c_α)` of exponents indexed by positive roots to the vector
//! `a = (a_1, …, a_N)` with
//!
//! ```text
//! a_j = Σ { c_α : α ∈ T_p, i_j ∈ supp α }     (j in block p)
//! ```
//!
//! `D` is unimodular; its exact inverse [`e_map`] writes each `c_α` as a
//! difference of at most two word coordinates.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::ar::slices_for;
use crate::linalg;
use crate::quiver::{word_for_quiver, QuiverA, RootInterval};

/// Error from inverting an integer matrix inside the lattice.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinMapError {
    /// The matrix has no inverse with integer entries.
    #[error("matrix is not unimodular: no integer inverse exists")]
    NotUnimodular,
}

/// A labelled integer matrix acting on labelled coordinate vectors.
///
/// `rows[r][c]` is the coefficient of input coordinate `c` in output
/// coordinate `r`; labels name both sides (e.g. rows `a_1, …, a_N` and
/// columns `c_1_1, …, c_n_n` for [`d_map`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntLinearMap {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    rows: Vec<Vec<i64>>,
}

impl IntLinearMap {
    /// Build from labels and a dense coefficient matrix.
    #[must_use]
    pub fn new(row_labels: Vec<String>, col_labels: Vec<String>, rows: Vec<Vec<i64>>) -> Self {
        assert_eq!(row_labels.len(), rows.len(), "one label per row");
        assert!(
            rows.iter().all(|r| r.len() == col_labels.len()),
            "one label per column"
        );
        IntLinearMap {
            row_labels,
            col_labels,
            rows,
        }
    }

    /// Output labels, one per row.
    #[must_use]
    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    /// Input labels, one per column.
    #[must_use]
    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    /// Dense coefficient rows.
    #[must_use]
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Number of rows (output dimension).
    #[must_use]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns (input dimension).
    #[must_use]
    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    /// Apply to a coordinate vector (length = number of columns).
    #[must_use]
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.ncols(), "dimension mismatch");
        self.rows
            .iter()
            .map(|row| row.iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect()
    }

    /// The composite `self ∘ other` (apply `other` first).
    #[must_use]
    pub fn compose(&self, other: &IntLinearMap) -> IntLinearMap {
        assert_eq!(self.ncols(), other.nrows(), "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                (0..other.ncols())
                    .map(|c| (0..other.nrows()).map(|k| row[k] * other.rows[k][c]).sum())
                    .collect()
            })
            .collect();
        IntLinearMap::new(self.row_labels.clone(), other.col_labels.clone(), rows)
    }

    /// Whether this is the identity matrix (labels aside).
    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.nrows() == self.ncols()
            && self.rows.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, &v)| v == i64::from(i == j))
            })
    }

    /// Exact inverse, provided it exists over the integers. Row and column
    /// labels swap roles.
    pub fn inverse(&self) -> Result<IntLinearMap, LinMapError> {
        if self.nrows() != self.ncols() {
            return Err(LinMapError::NotUnimodular);
        }
        let inv = linalg::invert_unimodular(&self.rows).ok_or(LinMapError::NotUnimodular)?;
        Ok(IntLinearMap::new(
            self.col_labels.clone(),
            self.row_labels.clone(),
            inv,
        ))
    }

    /// Sparse JSON form: `{row_label: {col_label: coeff, …}, …}` with zero
    /// coefficients omitted.
    #[must_use]
    pub fn to_json(&self) -> Value {
        let mut outer = serde_json::Map::new();
        for (label, row) in self.row_labels.iter().zip(&self.rows) {
            let mut inner = serde_json::Map::new();
            for (col, &v) in self.col_labels.iter().zip(row) {
                if v != 0 {
                    inner.insert(col.clone(), json!(v));
                }
            }
            outer.insert(label.clone(), Value::Object(inner));
        }
        Value::Object(outer)
    }

    /// One row as a sparse label → coefficient map (zeros omitted).
    #[must_use]
    pub fn row_as_map(&self, r: usize) -> BTreeMap<String, i64> {
        self.col_labels
            .iter()
            .zip(&self.rows[r])
            .filter(|&(_, &v)| v != 0)
            .map(|(l, &v)| (l.clone(), v))
            .collect()
    }
}

/// Label for the triangle coordinate of the root `[i,j]`: `c_i_j`.
#[must_use]
pub fn root_label(r: RootInterval) -> String {
    format!("c_{}_{}", r.lo(), r.hi())
}

/// Labels of all triangle coordinates in column order.
#[must_use]
pub fn root_labels(n: usize) -> Vec<String> {
    RootInterval::all(n).into_iter().map(root_label).collect()
}

/// Labels of the word coordinates `a_1, …, a_N`.
#[must_use]
pub fn word_labels(n: usize) -> Vec<String> {
    (1..=n * (n + 1) / 2).map(|j| format!("a_{j}")).collect()
}

/// The map `D` from exponent triangles to word coordinates of `i(Q)`.
///
/// Within block `p` (slice `T_p`), the coordinate at a position with letter
/// `i_j` sums the exponents of the slice members supported at `i_j`. Every
/// coefficient is 0 or 1 and the matrix is unimodular.
///
/// ```
/// use canbase::{d_map, QuiverA};
///
/// let d = d_map(&"RLRL".parse::<QuiverA>().unwrap());
/// // a_4 = c_2_3 + c_1_3 + c_1_4, the letter-3 position of the second block.
/// let row = d.row_as_map(3);
/// let pretty: Vec<_> = row.iter().map(|(l, v)| format!("{v}·{l}")).collect();
/// assert_eq!(pretty, ["1·c_1_3", "1·c_1_4", "1·c_2_3"]);
/// ```
#[must_use]
pub fn d_map(q: &QuiverA) -> IntLinearMap {
    let n = q.rank();
    let nn = n * (n + 1) / 2;
    let slices = slices_for(q);
    let mut rows = Vec::with_capacity(nn);
    let mut block_letters = Vec::with_capacity(nn);
    for p in 1..=n {
        let members = slices.members(p);
        // The block's letters: the slice support, in decreasing order. The
        // support of a slice is the support of its longest member.
        let top = *members.last().expect("slices are nonempty");
        for letter in (top.lo()..=top.hi()).rev() {
            block_letters.push(letter);
            let mut row = vec![0i64; nn];
            for &alpha in &members {
                if alpha.contains(letter) {
                    row[alpha.triangle_index()] = 1;
                }
            }
            rows.push(row);
        }
    }
    debug_assert_eq!(
        block_letters,
        word_for_quiver(q).letters(),
        "slice blocks must spell the adapted word"
    );
    IntLinearMap::new(word_labels(n), root_labels(n), rows)
}

/// The inverse map `E = D⁻¹` from word coordinates back to exponent
/// triangles; exact, integer, and of difference form (each triangle entry is
/// one word coordinate minus at most one other).
///
/// ```
/// use canbase::{e_map, QuiverA};
///
/// let e = e_map(&"RLRL".parse::<QuiverA>().unwrap());
/// // c_1_1 = a_2 − a_1.
/// let row = e.row_as_map(0);
/// assert_eq!(row.get("a_2"), Some(&1));
/// assert_eq!(row.get("a_1"), Some(&-1));
/// assert_eq!(row.len(), 2);
/// ```
#[must_use]
pub fn e_map(q: &QuiverA) -> IntLinearMap {
    d_map(q)
        .inverse()
        .expect("the slice change of basis is unimodular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(s: &str) -> QuiverA {
        s.parse().unwrap()
    }

    /// Parse "c_2_3+c_1_3" into a sparse row map with coefficient 1 each.
    fn sum(labels: &str) -> BTreeMap<String, i64> {
        labels.split('+').map(|l| (l.to_string(), 1)).collect()
    }

    #[test]
    fn d_map_rlrl_golden() {
        let d = d_map(&q("RLRL"));
        let expect = [
            "c_1_2",
            "c_1_1+c_1_2",
            "c_1_4",
            "c_2_3+c_1_3+c_1_4",
            "c_2_2+c_2_3+c_1_3+c_1_4",
            "c_1_3+c_1_4",
            "c_2_5+c_1_5",
            "c_3_4+c_2_4+c_2_5+c_1_5",
            "c_3_3+c_3_4+c_2_4+c_2_5+c_1_5",
            "c_2_4+c_2_5+c_1_5",
            "c_1_5",
            "c_4_5+c_3_5",
            "c_4_4+c_4_5+c_3_5",
            "c_3_5",
            "c_5_5",
        ];
        assert_eq!(d.nrows(), 15);
        for (j, e) in expect.iter().enumerate() {
            assert_eq!(d.row_as_map(j), sum(e), "a_{}", j + 1);
        }
    }

    #[test]
    fn d_map_small_examples() {
        // Linear orientation, rank 2: word (1, 2, 1).
        let d = d_map(&QuiverA::linear(2));
        assert_eq!(d.row_as_map(0), sum("c_1_1"));
        assert_eq!(d.row_as_map(1), sum("c_1_2+c_2_2"));
        assert_eq!(d.row_as_map(2), sum("c_1_2"));
        // Single right edge, rank 2: word (2, 1, 2); slices {[1,1],[1,2]}, {[2,2]}.
        let d = d_map(&q("R"));
        assert_eq!(d.row_as_map(0), sum("c_1_2"));
        assert_eq!(d.row_as_map(1), sum("c_1_1+c_1_2"));
        assert_eq!(d.row_as_map(2), sum("c_2_2"));
    }

    #[test]
    fn e_map_rlrl_golden() {
        let e = e_map(&q("RLRL"));
        let expect: [(&str, &str, Option<&str>); 15] = [
            ("c_1_1", "a_2", Some("a_1")),
            ("c_1_2", "a_1", None),
            ("c_2_2", "a_5", Some("a_4")),
            ("c_1_3", "a_6", Some("a_3")),
            ("c_2_3", "a_4", Some("a_6")),
            ("c_3_3", "a_9", Some("a_8")),
            ("c_1_4", "a_3", None),
            ("c_2_4", "a_10", Some("a_7")),
            ("c_3_4", "a_8", Some("a_10")),
            ("c_4_4", "a_13", Some("a_12")),
            ("c_1_5", "a_11", None),
            ("c_2_5", "a_7", Some("a_11")),
            ("c_3_5", "a_14", None),
            ("c_4_5", "a_12", Some("a_14")),
            ("c_5_5", "a_15", None),
        ];
        for (row_label, plus, minus) in expect {
            let r = e
                .row_labels()
                .iter()
                .position(|l| l == row_label)
                .unwrap();
            let mut want = BTreeMap::new();
            want.insert(plus.to_string(), 1);
            if let Some(m) = minus {
                want.insert(m.to_string(), -1);
            }
            assert_eq!(e.row_as_map(r), want, "{row_label}");
        }
    }

    #[test]
    fn d_and_e_are_mutually_inverse() {
        for n in 1..=5 {
            for quiver in QuiverA::all(n) {
                let d = d_map(&quiver);
                let e = e_map(&quiver);
                assert!(d.compose(&e).is_identity(), "D·E = I for {quiver}");
                assert!(e.compose(&d).is_identity(), "E·D = I for {quiver}");
            }
        }
    }

    #[test]
    fn d_is_zero_one_and_unimodular() {
        for n in 1..=5 {
            for quiver in QuiverA::all(n) {
                let d = d_map(&quiver);
                assert!(d
                    .rows()
                    .iter()
                    .all(|row| row.iter().all(|&v| v == 0 || v == 1)));
                let det = linalg::det(d.rows());
                assert!(
                    det == BigInt::from(1) || det == BigInt::from(-1),
                    "det D = {det} for {quiver}"
                );
            }
        }
    }

    #[test]
    fn e_rows_are_differences() {
        // Each triangle coordinate is one word coordinate minus at most one.
        for n in 1..=5 {
            for quiver in QuiverA::all(n) {
                let e = e_map(&quiver);
                for r in 0..e.nrows() {
                    let row = e.row_as_map(r);
                    let plus = row.values().filter(|&&v| v == 1).count();
                    let minus = row.values().filter(|&&v| v == -1).count();
                    assert_eq!(plus, 1, "{quiver} row {r}");
                    assert!(minus <= 1, "{quiver} row {r}");
                    assert_eq!(plus + minus, row.len(), "{quiver} row {r}");
                }
            }
        }
    }

    #[test]
    fn apply_round_trips() {
        let quiver = q("RL");
        let d = d_map(&quiver);
        let e = e_map(&quiver);
        let c = vec![3, 1, 4, 1, 5, 9];
        let a = d.apply(&c);
        assert_eq!(e.apply(&a), c);
    }

    #[test]
    fn json_is_sparse() {
        let d = d_map(&QuiverA::linear(2));
        assert_eq!(
            d.to_json(),
            serde_json::json!({
                "a_1": {"c_1_1": 1},
                "a_2": {"c_1_2": 1, "c_2_2": 1},
                "a_3": {"c_1_2": 1},
            })
        );
    }
}
