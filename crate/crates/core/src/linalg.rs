//! Exact null spaces over a field.

use std::collections::{BTreeMap, BTreeSet};

use crate::field::{FieldElement, FieldSpec};

/// Basis of `{v : sum_j v[j] * columns[j] = 0}`.
///
/// Columns are sparse vectors keyed by any ordered row label. Each basis
/// vector has a 1 in one free position and zeros in the other free positions.
pub fn null_space<K: Ord + Clone>(spec: FieldSpec, columns: &[BTreeMap<K, FieldElement>]) -> Vec<Vec<FieldElement>> {
    let ncols = columns.len();
    let keys: BTreeSet<&K> = columns.iter().flat_map(|c| c.keys()).collect();
    let mut rows: Vec<Vec<FieldElement>> = keys
        .iter()
        .map(|k| {
            columns
                .iter()
                .map(|c| c.get(*k).cloned().unwrap_or_else(|| spec.zero()))
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = &*v - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }

    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    (0..ncols)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = vec![spec.zero(); ncols];
            v[free] = spec.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[row][free];
            }
            v
        })
        .collect()
}
