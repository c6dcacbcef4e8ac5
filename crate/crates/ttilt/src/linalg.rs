//! Sparse exact linear algebra over the rationals.

use crate::scalar::Scalar;
use std::collections::HashMap;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SVec = Vec<(usize, Scalar)>;

pub fn sv_get(v: &SVec, i: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

/// `a + c * b`.
pub fn sv_axpy(a: &SVec, c: &Scalar, b: &SVec) -> SVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let s = &a[i].1 + &(c * &b[j].1);
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sv_scale(a: &SVec, c: &Scalar) -> SVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// Build a sparse vector from unsorted entries, summing duplicates.
pub fn sv_from_entries(mut e: Vec<(usize, Scalar)>) -> SVec {
    e.sort_by_key(|x| x.0);
    let mut out: SVec = Vec::with_capacity(e.len());
    for (i, x) in e {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 += &x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

/// Row echelon basis built incrementally. Row `k` vanishes on the pivots of
/// rows `0..k`, so reducing in insertion order clears every pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pub dim: usize,
    rows: Vec<SVec>,
    pivots: Vec<usize>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, ..Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce_dense(&self, v: &SVec) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.dim];
        for (i, x) in v {
            acc[*i] = x.clone();
        }
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if acc[p].is_zero() {
                continue;
            }
            let c = acc[p].clone();
            for (j, y) in row {
                acc[*j] -= &(&c * y);
            }
        }
        acc
    }

    /// Remainder of `v` after clearing all pivots.
    pub fn reduce(&self, v: &SVec) -> SVec {
        if self.rows.is_empty() {
            return v.clone();
        }
        self.reduce_dense(v)
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect()
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SVec) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        // cheapest pivot first, lowest index on ties
        let (p, c) = r
            .iter()
            .min_by_key(|(i, x)| (x.complexity(), *i))
            .map(|(i, x)| (*i, x.clone()))
            .unwrap();
        let row = sv_scale(&r, &c.recip());
        self.pivot_row.insert(p, self.rows.len());
        self.pivots.push(p);
        self.rows.push(row);
        true
    }

    /// Clear each pivot column from every other row.
    pub fn fully_reduce(&mut self) {
        let m = self.rows.len();
        for i in (0..m).rev() {
            let p = self.pivots[i];
            let (head, tail) = self.rows.split_at_mut(i);
            let ri = &tail[0];
            for rj in head.iter_mut() {
                if let Some(c) = sv_get(rj, p).cloned() {
                    *rj = sv_axpy(rj, &-c, ri);
                }
            }
        }
    }
}

/// Kernel of the linear map whose matrix has the given sparse rows over
/// `ncols` unknowns.
pub fn kernel(ncols: usize, rows: &[SVec]) -> Vec<SVec> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.fully_reduce();
    let mut is_pivot = vec![false; ncols];
    for &p in e.pivots() {
        is_pivot[p] = true;
    }
    let mut basis: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
    for (row, &p) in e.rows().iter().zip(e.pivots()) {
        for (j, x) in row {
            if !is_pivot[*j] {
                basis.entry(*j).or_default().push((p, -x));
            }
        }
    }
    (0..ncols)
        .filter(|j| !is_pivot[*j])
        .map(|j| {
            let mut entries = basis.remove(&j).unwrap_or_default();
            entries.push((j, Scalar::one()));
            sv_from_entries(entries)
        })
        .collect()
}

/// Rank of a set of sparse vectors.
pub fn rank(dim: usize, vecs: &[SVec]) -> usize {
    let mut e = Echelon::new(dim);
    vecs.iter().filter(|v| e.insert(v)).count()
}

/// Solve the square dense system `x * m = b` (x a row vector), if solvable
/// uniquely.
pub fn solve_left(m: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = m.len();
    // transpose to columns: m^T x^T = b^T
    let mut a: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut row: Vec<Scalar> = (0..n).map(|j| m[j][i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for k in col..=n {
                    let t = &c * &a[col][k];
                    a[r][k] -= &t;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}
