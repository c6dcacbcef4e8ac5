//! Complexes of projectives in degrees -2..0 and their homotopy Hom spaces.
//!
//! A map `e_a Λ -> e_b Λ` is left multiplication by an element of
//! `e_b Λ e_a`; a map between sums is a matrix of such elements with rows
//! indexed by the target and columns by the source, and composition is the
//! matrix product `G * F`.

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::linalg::{kernel, sv_axpy, sv_get, sv_scale, Echelon, SVec};
use crate::scalar::Scalar;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    e: Vec<Elem>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, e: vec![Elem::new(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>, cols: usize) -> Self {
        let r = rows.len();
        let e: Vec<Elem> = rows.into_iter().flatten().collect();
        assert_eq!(e.len(), r * cols);
        Mat { rows: r, cols, e }
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.e[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.e[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|x| x.is_empty())
    }

    pub fn mul(&self, alg: &Algebra, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_empty() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_empty() {
                        continue;
                    }
                    let p = alg.multiply(a, b);
                    let idx = i * out.cols + j;
                    out.e[idx] = sv_axpy(&out.e[idx], &Scalar::one(), &p);
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, e: self.e.iter().map(|x| sv_scale(x, &-Scalar::one())).collect() }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            e: self.e.iter().zip(&other.e).map(|(a, b)| sv_axpy(a, &-Scalar::one(), b)).collect(),
        }
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut e = self.e.clone();
        e.extend(other.e.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, e }
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn without(&self, row: Option<usize>, col: Option<usize>) -> Mat {
        let rows: Vec<usize> = (0..self.rows).filter(|i| Some(*i) != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|j| Some(*j) != col).collect();
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn format(&self, alg: &Algebra) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| alg.format_elem(self.get(i, j))).collect::<Vec<_>>().join(", "))
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

/// The inverse of `u` in `e_v Λ e_v`, when `u` has a nonzero `e_v` term.
pub fn unit_inverse(alg: &Algebra, u: &Elem, v: usize) -> Option<Elem> {
    let ev = alg.idempotent(v);
    let c = sv_get(u, ev)?.clone();
    let cinv = c.recip();
    // u = c (e_v + r) with r nilpotent
    let mut r = sv_scale(u, &cinv);
    r = sv_axpy(&r, &-Scalar::one(), &alg.basis_elem(ev));
    let neg_r = sv_scale(&r, &-Scalar::one());
    let mut term = alg.basis_elem(ev);
    let mut sum = term.clone();
    for _ in 0..alg.dim() {
        term = alg.multiply(&term, &neg_r);
        if term.is_empty() {
            break;
        }
        sum = sv_axpy(&sum, &Scalar::one(), &term);
    }
    Some(sv_scale(&sum, &cinv))
}

/// A complex `C^-2 -> C^-1 -> C^0` of projectives; `parts[0]` is degree -2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Complex {
    pub parts: [Vec<usize>; 3],
    /// `C^-2 -> C^-1`, rows over `parts[1]`.
    pub d2: Mat,
    /// `C^-1 -> C^0`, rows over `parts[2]`.
    pub d1: Mat,
}

impl Complex {
    pub fn new(parts: [Vec<usize>; 3], d2: Mat, d1: Mat) -> Self {
        assert_eq!((d2.rows, d2.cols), (parts[1].len(), parts[0].len()));
        assert_eq!((d1.rows, d1.cols), (parts[2].len(), parts[1].len()));
        Complex { parts, d2, d1 }
    }

    /// `P^-1 -> P^0` with differential `d`.
    pub fn two_term(p1: Vec<usize>, p0: Vec<usize>, d: Mat) -> Self {
        let d2 = Mat::zeros(p1.len(), 0);
        Complex::new([Vec::new(), p1, p0], d2, d)
    }

    /// `0 -> P_v`.
    pub fn stalk(v: usize) -> Self {
        Complex::two_term(Vec::new(), vec![v], Mat::zeros(1, 0))
    }

    /// `P_v -> 0`.
    pub fn shifted_stalk(v: usize) -> Self {
        Complex::two_term(vec![v], Vec::new(), Mat::zeros(0, 1))
    }

    pub fn is_two_term(&self) -> bool {
        self.parts[0].is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_empty())
    }

    /// `d^-1 d^-2 = 0`.
    pub fn is_complex(&self, alg: &Algebra) -> bool {
        self.d1.mul(alg, &self.d2).is_zero()
    }

    pub fn g_vector(&self, n: usize) -> Result<Vec<i64>> {
        if !self.is_two_term() {
            return Err(Error::ThreeTerm);
        }
        let mut g = vec![0i64; n];
        for &v in &self.parts[2] {
            g[v] += 1;
        }
        for &v in &self.parts[1] {
            g[v] -= 1;
        }
        Ok(g)
    }

    pub fn format(&self, alg: &Algebra) -> String {
        let sum = |p: &[usize]| {
            if p.is_empty() {
                return "0".to_string();
            }
            p.iter().map(|v| format!("P{}", alg.quiver.vertices[*v])).collect::<Vec<_>>().join("+")
        };
        let mut s = String::new();
        if !self.is_two_term() {
            let _ = write!(s, "{} -{}-> ", sum(&self.parts[0]), self.d2.format(alg));
        }
        let _ = write!(s, "{} -{}-> {}", sum(&self.parts[1]), self.d1.format(alg), sum(&self.parts[2]));
        s
    }
}

fn find_unit(alg: &Algebra, m: &Mat, rows: &[usize], cols: &[usize]) -> Option<(usize, usize, Elem)> {
    for (l, &b) in rows.iter().enumerate() {
        for (k, &a) in cols.iter().enumerate() {
            if a == b {
                if let Some(inv) = unit_inverse(alg, m.get(l, k), a) {
                    return Some((l, k, inv));
                }
            }
        }
    }
    None
}

/// Remove contractible summands `P --unit--> P` until no differential entry
/// is invertible. The result is homotopy equivalent to the input.
pub fn strip_contractible(alg: &Algebra, c: &Complex) -> Complex {
    let one = Scalar::one();
    let mut c = c.clone();
    loop {
        if let Some((l, k, uinv)) = find_unit(alg, &c.d1, &c.parts[2], &c.parts[1]) {
            let mut a = c.d1.clone();
            let mut b = c.d2.clone();
            // clear column k with row operations on C^0
            let row_l: Vec<Elem> = (0..a.cols).map(|j| a.get(l, j).clone()).collect();
            for r in 0..a.rows {
                if r == l || a.get(r, k).is_empty() {
                    continue;
                }
                let f = alg.multiply(a.get(r, k), &uinv);
                for (j, x) in row_l.iter().enumerate() {
                    let v = sv_axpy(a.get(r, j), &-one.clone(), &alg.multiply(&f, x));
                    a.set(r, j, v);
                }
            }
            // clear row l with column operations on C^-1; d2 absorbs the inverse
            let col_k: Vec<Elem> = (0..a.rows).map(|r| a.get(r, k).clone()).collect();
            for j in 0..a.cols {
                if j == k || a.get(l, j).is_empty() {
                    continue;
                }
                let cj = alg.multiply(&uinv, a.get(l, j));
                for (r, x) in col_k.iter().enumerate() {
                    let v = sv_axpy(a.get(r, j), &-one.clone(), &alg.multiply(x, &cj));
                    a.set(r, j, v);
                }
                for t in 0..b.cols {
                    let add = alg.multiply(&cj, b.get(j, t));
                    let v = sv_axpy(b.get(k, t), &one, &add);
                    b.set(k, t, v);
                }
            }
            debug_assert!((0..b.cols).all(|t| b.get(k, t).is_empty()));
            c.parts[1].remove(k);
            c.parts[2].remove(l);
            c.d1 = a.without(Some(l), Some(k));
            c.d2 = b.without(Some(k), None);
            continue;
        }
        if let Some((l, k, uinv)) = find_unit(alg, &c.d2, &c.parts[1], &c.parts[0]) {
            let mut a = c.d1.clone();
            let mut b = c.d2.clone();
            // clear column k with row operations on C^-1; d1 absorbs the inverse
            let row_l: Vec<Elem> = (0..b.cols).map(|j| b.get(l, j).clone()).collect();
            for r in 0..b.rows {
                if r == l || b.get(r, k).is_empty() {
                    continue;
                }
                let f = alg.multiply(b.get(r, k), &uinv);
                for (j, x) in row_l.iter().enumerate() {
                    let v = sv_axpy(b.get(r, j), &-one.clone(), &alg.multiply(&f, x));
                    b.set(r, j, v);
                }
                for s in 0..a.rows {
                    let add = alg.multiply(a.get(s, r), &f);
                    let v = sv_axpy(a.get(s, l), &one, &add);
                    a.set(s, l, v);
                }
            }
            // clear row l with column operations on C^-2
            let col_k: Vec<Elem> = (0..b.rows).map(|r| b.get(r, k).clone()).collect();
            for j in 0..b.cols {
                if j == k || b.get(l, j).is_empty() {
                    continue;
                }
                let cj = alg.multiply(&uinv, b.get(l, j));
                for (r, x) in col_k.iter().enumerate() {
                    let v = sv_axpy(b.get(r, j), &-one.clone(), &alg.multiply(x, &cj));
                    b.set(r, j, v);
                }
            }
            debug_assert!((0..a.rows).all(|s| a.get(s, l).is_empty()));
            c.parts[0].remove(k);
            c.parts[1].remove(l);
            c.d2 = b.without(Some(l), Some(k));
            c.d1 = a.without(None, Some(l));
            continue;
        }
        return c;
    }
}

/// Mapping cone of a chain map `pi: X -> Z` between two-term complexes.
pub fn mapping_cone(x: &Complex, z: &Complex, pi: &ChainMap) -> Complex {
    let parts = [
        x.parts[1].clone(),
        x.parts[2].iter().chain(&z.parts[1]).copied().collect(),
        z.parts[2].clone(),
    ];
    let d2 = x.d1.neg().vstack(&pi.f1);
    let d1 = pi.f0.hstack(&z.d1);
    Complex::new(parts, d2, d1)
}

/// Coordinates of `Hom_Λ(⊕ P_cols, ⊕ P_rows)` over the path basis.
#[derive(Clone, Debug)]
pub struct Coords {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    offset: Vec<usize>,
    vars: Vec<(usize, usize)>,
}

impl Coords {
    pub fn new(alg: &Algebra, rows: &[usize], cols: &[usize]) -> Self {
        let mut offset = Vec::with_capacity(rows.len() * cols.len());
        let mut vars = Vec::new();
        for (l, &b) in rows.iter().enumerate() {
            for (k, &a) in cols.iter().enumerate() {
                offset.push(vars.len());
                for &p in alg.hom_space(b, a) {
                    vars.push((l * cols.len() + k, p));
                }
            }
        }
        Coords { rows: rows.to_vec(), cols: cols.to_vec(), offset, vars }
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn to_vec(&self, alg: &Algebra, m: &Mat, shift: usize) -> SVec {
        let mut out = SVec::new();
        for (idx, x) in m.e.iter().enumerate() {
            for (p, c) in x {
                out.push((shift + self.offset[idx] + alg.local_position(*p), c.clone()));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn from_vec(&self, v: &SVec, shift: usize) -> Mat {
        let mut m = Mat::zeros(self.rows.len(), self.cols.len());
        for (i, c) in v {
            if *i < shift || *i >= shift + self.dim() {
                continue;
            }
            let (idx, p) = self.vars[i - shift];
            m.e[idx].push((p, c.clone()));
        }
        for x in m.e.iter_mut() {
            x.sort_by_key(|(i, _)| *i);
        }
        m
    }

    /// The matrix with a single basis path at variable `var`.
    pub fn unit(&self, var: usize) -> Mat {
        let (idx, p) = self.vars[var];
        let mut m = Mat::zeros(self.rows.len(), self.cols.len());
        m.e[idx] = vec![(p, Scalar::one())];
        m
    }
}

/// A chain map between two-term complexes, `(f^-1, f^0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub f1: Mat,
    pub f0: Mat,
}

impl ChainMap {
    pub fn compose(alg: &Algebra, g: &ChainMap, f: &ChainMap) -> ChainMap {
        ChainMap { f1: g.f1.mul(alg, &f.f1), f0: g.f0.mul(alg, &f.f0) }
    }
}

/// `Hom` in the homotopy category between two-term complexes.
#[derive(Clone, Debug)]
pub struct HomK {
    c1: Coords,
    c0: Coords,
    /// Chain maps independent modulo null-homotopic ones.
    pub maps: Vec<ChainMap>,
    /// Span of the null-homotopic maps, in `vector` coordinates.
    pub null: Echelon,
}

impl HomK {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn vector(&self, alg: &Algebra, f: &ChainMap) -> SVec {
        let mut v = self.c1.to_vec(alg, &f.f1, 0);
        v.extend(self.c0.to_vec(alg, &f.f0, self.c1.dim()));
        v
    }

    pub fn map_of(&self, v: &SVec) -> ChainMap {
        ChainMap { f1: self.c1.from_vec(v, 0), f0: self.c0.from_vec(v, self.c1.dim()) }
    }

    pub fn var_dim(&self) -> usize {
        self.c1.dim() + self.c0.dim()
    }
}

fn equations(images: &[SVec], ntargets: usize) -> Vec<SVec> {
    let mut rows: Vec<SVec> = vec![SVec::new(); ntargets];
    for (var, img) in images.iter().enumerate() {
        for (t, c) in img {
            rows[*t].push((var, c.clone()));
        }
    }
    rows.retain(|r| !r.is_empty());
    rows
}

/// Chain maps `X -> Y` modulo homotopy, for two-term complexes.
pub fn chain_map_space(alg: &Algebra, x: &Complex, y: &Complex) -> HomK {
    let c1 = Coords::new(alg, &y.parts[1], &x.parts[1]);
    let c0 = Coords::new(alg, &y.parts[2], &x.parts[2]);
    let target = Coords::new(alg, &y.parts[2], &x.parts[1]);
    let n1 = c1.dim();
    let mut images = Vec::with_capacity(n1 + c0.dim());
    for v in 0..n1 {
        // f^0 d_X - d_Y f^-1
        images.push(target.to_vec(alg, &y.d1.mul(alg, &c1.unit(v)).neg(), 0));
    }
    for v in 0..c0.dim() {
        images.push(target.to_vec(alg, &c0.unit(v).mul(alg, &x.d1), 0));
    }
    let ker = kernel(images.len(), &equations(&images, target.dim()));
    let hc = Coords::new(alg, &y.parts[1], &x.parts[2]);
    let mut null = Echelon::new(n1 + c0.dim());
    for v in 0..hc.dim() {
        let h = hc.unit(v);
        let mut img = c1.to_vec(alg, &h.mul(alg, &x.d1), 0);
        img.extend(c0.to_vec(alg, &y.d1.mul(alg, &h), n1));
        null.insert(&img);
    }
    let mut span = null.clone();
    let mut maps = Vec::new();
    let mut hom = HomK { c1, c0, maps: Vec::new(), null };
    for k in ker {
        if span.insert(&k) {
            maps.push(hom.map_of(&k));
        }
    }
    hom.maps = maps;
    hom
}

/// `Hom(X, Y[1]) = 0` for two-term complexes: every map `X^-1 -> Y^0`
/// factors as `d_Y s + t d_X`.
pub fn shift_hom_vanishes(alg: &Algebra, x: &Complex, y: &Complex) -> bool {
    let target = Coords::new(alg, &y.parts[2], &x.parts[1]);
    if target.dim() == 0 {
        return true;
    }
    let s = Coords::new(alg, &y.parts[1], &x.parts[1]);
    let t = Coords::new(alg, &y.parts[2], &x.parts[2]);
    let mut e = Echelon::new(target.dim());
    for v in 0..s.dim() {
        e.insert(&target.to_vec(alg, &y.d1.mul(alg, &s.unit(v)), 0));
        if e.rank() == target.dim() {
            return true;
        }
    }
    for v in 0..t.dim() {
        e.insert(&target.to_vec(alg, &t.unit(v).mul(alg, &x.d1), 0));
        if e.rank() == target.dim() {
            return true;
        }
    }
    e.rank() == target.dim()
}

/// The scalar by which an endomorphism of an indecomposable reduced complex
/// acts modulo the radical of its endomorphism ring.
pub fn endo_scalar(alg: &Algebra, y: &Complex, f: &ChainMap) -> Scalar {
    for (parts, m) in [(&y.parts[2], &f.f0), (&y.parts[1], &f.f1)] {
        if let Some(&v) = parts.first() {
            let ev = alg.idempotent(v);
            let idx: Vec<usize> = (0..parts.len()).filter(|i| parts[*i] == v).collect();
            let mut tr = Scalar::zero();
            for &i in &idx {
                if let Some(c) = sv_get(m.get(i, i), ev) {
                    tr += c;
                }
            }
            return tr / Scalar::from_int(idx.len() as i64);
        }
    }
    Scalar::zero()
}

pub fn identity_map(alg: &Algebra, x: &Complex) -> ChainMap {
    let id = |p: &[usize]| {
        let mut m = Mat::zeros(p.len(), p.len());
        for (i, &v) in p.iter().enumerate() {
            m.set(i, i, alg.basis_elem(alg.idempotent(v)));
        }
        m
    };
    ChainMap { f1: id(&x.parts[1]), f0: id(&x.parts[2]) }
}
