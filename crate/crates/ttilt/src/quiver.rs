//! Quivers, paths and path-algebra polynomials.
//!
//! Paths compose left to right: `mu*beta` is `mu` followed by `beta`, so
//! `mu: 1 -> 2` and `beta: 2 -> 2` give a path from 1 to 2.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut names = HashSet::new();
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            if s >= vertices.len() || t >= vertices.len() {
                return Err(Error::InvalidQuiver(format!("arrow {name} has an undeclared endpoint")));
            }
            if !names.insert(name.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {name}")));
            }
            out.push(Arrow { name, source: s, target: t });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let ar = &self.arrows[a];
        Path { source: ar.source, target: ar.target, arrows: vec![a] }
    }

    /// Build a path from arrow indices, checking composability.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let first = arrows.first()?;
        let mut cur = self.arrows[*first].source;
        for &a in arrows {
            if self.arrows[a].source != cur {
                return None;
            }
            cur = self.arrows[a].target;
        }
        Some(Path { source: self.arrows[*first].source, target: cur, arrows: arrows.to_vec() })
    }

    /// Human-readable path, e.g. `alpha*mu*beta^2` or `e_1`.
    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e_{}", self.vertices[p.source]);
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < p.arrows.len() {
            let a = p.arrows[i];
            let mut k = 1;
            while i + k < p.arrows.len() && p.arrows[i + k] == a {
                k += 1;
            }
            let name = &self.arrows[a].name;
            parts.push(if k == 1 { name.clone() } else { format!("{name}^{k}") });
            i += k;
        }
        parts.join("*")
    }

    pub fn format_poly(&self, p: &Poly) -> String {
        format_terms(p.iter().rev().map(|(path, c)| (self.format_path(path), c.clone())))
    }
}

/// Render `c1*w1 + c2*w2 - ...` with unit coefficients elided.
pub fn format_terms(terms: impl Iterator<Item = (String, Scalar)>) -> String {
    let mut s = String::new();
    for (w, c) in terms {
        let neg = c.is_negative();
        let abs = if neg { -&c } else { c };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            s.push_str(&format!("{abs}*"));
        }
        s.push_str(&w);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation, or None when endpoints do not meet.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    /// Position of the first occurrence of `w` as a contiguous subword.
    pub fn find(&self, w: &[usize]) -> Option<usize> {
        if w.is_empty() || w.len() > self.arrows.len() {
            return None;
        }
        self.arrows.windows(w.len()).position(|x| x == w)
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }

    /// Sub-path covering arrows `lo..hi`; empty ranges give the trivial path
    /// at the appropriate vertex.
    pub fn slice(&self, lo: usize, hi: usize, quiver: &Quiver) -> Path {
        if lo == hi {
            let v = if lo == 0 {
                self.source
            } else {
                quiver.arrows[self.arrows[lo - 1]].target
            };
            return Path::trivial(v);
        }
        Path {
            source: quiver.arrows[self.arrows[lo]].source,
            target: quiver.arrows[self.arrows[hi - 1]].target,
            arrows: self.arrows[lo..hi].to_vec(),
        }
    }
}

impl Ord for Path {
    /// Degree-lexicographic: length, then arrow indices, then endpoints.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the path algebra, ordered so the leading path is last.
pub type Poly = BTreeMap<Path, Scalar>;

pub fn poly_add_term(p: &mut Poly, path: Path, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let zero = {
        let e = p.entry(path.clone()).or_insert_with(Scalar::zero);
        *e += c;
        e.is_zero()
    };
    if zero {
        p.remove(&path);
    }
}

pub fn poly_scale(p: &Poly, c: &Scalar) -> Poly {
    if c.is_zero() {
        return Poly::new();
    }
    p.iter().map(|(k, v)| (k.clone(), v * c)).collect()
}

/// `u * p * v` for paths `u`, `v`; terms whose endpoints do not meet vanish.
pub fn poly_sandwich(u: &Path, p: &Poly, v: &Path) -> Poly {
    let mut out = Poly::new();
    for (path, c) in p {
        if let Some(x) = u.concat(path).and_then(|x| x.concat(v)) {
            poly_add_term(&mut out, x, c);
        }
    }
    out
}

pub fn poly_from_path(p: Path) -> Poly {
    let mut out = Poly::new();
    out.insert(p, Scalar::one());
    out
}

pub fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (k, v) in b {
        poly_add_term(&mut out, k.clone(), &-v);
    }
    out
}

/// Split a polynomial into its `e_u * p * e_v` components.
pub fn poly_components(p: &Poly) -> Vec<Poly> {
    let mut parts: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
    for (path, c) in p {
        parts.entry((path.source, path.target)).or_default().insert(path.clone(), c.clone());
    }
    parts.into_values().collect()
}
