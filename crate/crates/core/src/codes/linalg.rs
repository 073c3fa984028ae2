//! Gauss-Jordan elimination over a [`FieldSpec`].

use crate::gf::{Elem, FieldSpec};

/// Reduces `rows` (each of length `ncols`) to reduced row-echelon form,
/// dropping zero rows. Returns the pivot column of each remaining row.
pub fn rref(f: &FieldSpec, rows: &mut Vec<Vec<Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(found) = (top..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(top, found);
        let inv = f.inv(rows[top][col]).expect("pivot is nonzero");
        for x in rows[top].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[top].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == top || row[col] == 0 {
                continue;
            }
            let c = f.neg(row[col]);
            for (x, &p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = f.add(*x, f.mul(c, p));
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    pivots
}

/// Basis of `{y : G y^T = 0}` for an RREF matrix `g` with the given pivots.
pub fn nullspace(f: &FieldSpec, g: &[Vec<Elem>], pivots: &[usize], ncols: usize) -> Vec<Vec<Elem>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0; ncols];
            v[free] = 1;
            for (row, &p) in g.iter().zip(pivots) {
                v[p] = f.neg(row[free]);
            }
            v
        })
        .collect()
}
