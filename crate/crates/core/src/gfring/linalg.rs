//! Dense linear algebra over a coefficient field.

use super::field::{Fe, FieldCtx};

/// Row-reduces in place; returns the pivot columns.
pub fn rref(f: &FieldCtx, m: &mut [Vec<Fe>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, p);
        let inv = f.inv(m[row][col]);
        for x in m[row].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let prow = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r == row || line[col] == 0 {
                continue;
            }
            let c = f.neg(line[col]);
            for (x, &y) in line.iter_mut().zip(&prow) {
                if y != 0 {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(f: &FieldCtx, rows: &[Vec<Fe>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m, ncols).len()
}

/// Basis of `{x : M x = 0}` for `M` given by rows.
pub fn nullspace(f: &FieldCtx, rows: &[Vec<Fe>], ncols: usize) -> Vec<Vec<Fe>> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0; ncols];
        v[free] = 1;
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(m[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// One solution of `M x = b`, if any.
pub fn solve(f: &FieldCtx, rows: &[Vec<Fe>], b: &[Fe], ncols: usize) -> Option<Vec<Fe>> {
    let mut m: Vec<Vec<Fe>> = rows.iter().zip(b).map(|(r, &bi)| {
        let mut r = r.clone();
        r.push(bi);
        r
    }).collect();
    let pivots = rref(f, &mut m, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![0; ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = m[r][ncols];
    }
    Some(x)
}

/// Row-major square matrix inverse.
pub fn invert(f: &FieldCtx, a: &[Fe], n: usize) -> Option<Vec<Fe>> {
    let mut m: Vec<Vec<Fe>> = (0..n).map(|r| {
        let mut row = a[r * n..(r + 1) * n].to_vec();
        row.extend((0..n).map(|c| if c == r { 1 } else { 0 }));
        row
    }).collect();
    let pivots = rref(f, &mut m, n);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(m.iter().flat_map(|r| r[n..].to_vec()).collect())
}
