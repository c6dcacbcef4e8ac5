//! Finite-dimensional bound quiver algebras `KQ/I`.
//!
//! Right modules are used throughout: `P_i = e_i Λ`, so a map `P_a -> P_b`
//! is left multiplication by an element of `e_b Λ e_a`.

use crate::error::{Error, Result};
use crate::linalg::{kernel, sv_axpy, sv_from_entries, SVec};
use crate::quiver::{format_terms, poly_components, Path, Poly, Quiver};
use crate::rewrite::{complete_rewrite_system, Bounds, RewriteSystem};
use crate::scalar::Scalar;
use std::collections::HashMap;

/// Algebra element as sparse coordinates over the basis.
pub type Elem = SVec;

#[derive(Clone, Debug)]
pub struct Algebra {
    pub name: String,
    pub quiver: Quiver,
    pub system: RewriteSystem,
    pub basis: Vec<Path>,
    index: HashMap<Path, usize>,
    mul: Vec<Vec<Elem>>,
    between: Vec<Vec<Vec<usize>>>,
    local: Vec<usize>,
    idempotents: Vec<usize>,
}

impl Algebra {
    /// Build `KQ/I` from relations made of paths of length at least 2.
    pub fn build(name: &str, quiver: Quiver, relations: &[Poly], bounds: Bounds) -> Result<Self> {
        let system = complete_rewrite_system(&quiver, relations, bounds, false)?;
        Self::from_system(name, quiver, system, bounds)
    }

    fn from_system(name: &str, quiver: Quiver, system: RewriteSystem, bounds: Bounds) -> Result<Self> {
        let basis = system.irreducible_paths(&quiver, bounds)?;
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = quiver.num_vertices();
        let mut between = vec![vec![Vec::new(); n]; n];
        let mut local = Vec::with_capacity(basis.len());
        for (i, p) in basis.iter().enumerate() {
            local.push(between[p.source][p.target].len());
            between[p.source][p.target].push(i);
        }
        let idempotents = (0..n).map(|v| index[&Path::trivial(v)]).collect();
        let mut alg = Algebra { name: name.to_string(), quiver, system, basis, index, mul: Vec::new(), between, local, idempotents };
        let dim = alg.basis.len();
        let mut mul = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                if let Some(p) = alg.basis[i].concat(&alg.basis[j]) {
                    let mut poly = Poly::new();
                    poly.insert(p, Scalar::one());
                    mul[i][j] = alg.elem_from_poly(&poly);
                }
            }
        }
        alg.mul = mul;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    /// Basis index of the idempotent `e_v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn is_idempotent_index(&self, i: usize) -> bool {
        self.basis[i].is_trivial()
    }

    /// Basis indices of `e_i Λ e_j` (paths from `i` to `j`).
    pub fn hom_space(&self, i: usize, j: usize) -> &[usize] {
        &self.between[i][j]
    }

    /// Position of basis element `i` within its `hom_space` list.
    pub fn local_position(&self, i: usize) -> usize {
        self.local[i]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        &self.mul[i][j]
    }

    pub fn multiply(&self, a: &Elem, b: &Elem) -> Elem {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (i, x) in a {
            for (j, y) in b {
                let xy = x * y;
                for (k, z) in &self.mul[*i][*j] {
                    acc.push((*k, &xy * z));
                }
            }
        }
        sv_from_entries(acc)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        sv_axpy(a, &Scalar::one(), b)
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        vec![(i, Scalar::one())]
    }

    /// Reduce a path-algebra polynomial into basis coordinates.
    pub fn elem_from_poly(&self, p: &Poly) -> Elem {
        let r = self.system.reduce(p, &self.quiver);
        sv_from_entries(r.into_iter().map(|(path, c)| (self.index[&path], c)).collect())
    }

    pub fn elem_to_poly(&self, e: &Elem) -> Poly {
        e.iter().map(|(i, c)| (self.basis[*i].clone(), c.clone())).collect()
    }

    pub fn format_elem(&self, e: &Elem) -> String {
        let mut terms: Vec<_> = e.iter().collect();
        terms.sort_by(|a, b| self.basis[a.0].cmp(&self.basis[b.0]));
        format_terms(terms.into_iter().map(|(i, c)| (self.quiver.format_path(&self.basis[*i]), c.clone())))
    }

    pub fn format_basis(&self, i: usize) -> String {
        self.quiver.format_path(&self.basis[i])
    }

    /// Non-trivial basis paths, which span the radical.
    pub fn radical_basis(&self) -> Vec<Path> {
        self.basis.iter().filter(|p| !p.is_trivial()).cloned().collect()
    }

    /// Generators used for commutation checks: idempotents and arrows.
    fn generators(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].len() <= 1).collect()
    }

    fn commutant(&self, vars: &[usize]) -> Vec<Elem> {
        let gens = self.generators();
        // equation rows: for generator g and output coordinate k
        let mut rows: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
        for (vi, &b) in vars.iter().enumerate() {
            for &g in &gens {
                let bg = self.mul_basis(b, g);
                let gb = self.mul_basis(g, b);
                let diff = sv_axpy(bg, &-Scalar::one(), gb);
                for (k, c) in diff {
                    rows.entry((g, k)).or_default().push((vi, c));
                }
            }
        }
        let mut keys: Vec<_> = rows.keys().cloned().collect();
        keys.sort();
        let rows: Vec<SVec> = keys.into_iter().map(|k| sv_from_entries(rows.remove(&k).unwrap())).collect();
        kernel(vars.len(), &rows)
            .into_iter()
            .map(|v| sv_from_entries(v.into_iter().map(|(vi, c)| (vars[vi], c)).collect()))
            .collect()
    }

    /// Basis of the center.
    pub fn center_basis(&self) -> Vec<Elem> {
        let vars: Vec<usize> = (0..self.dim()).collect();
        self.commutant(&vars)
    }

    /// Basis of the center intersected with the radical.
    pub fn center_radical_basis(&self) -> Vec<Elem> {
        let vars: Vec<usize> = (0..self.dim()).filter(|&i| !self.basis[i].is_trivial()).collect();
        self.commutant(&vars)
    }

    pub fn is_central(&self, z: &Elem) -> bool {
        self.generators().iter().all(|&g| {
            let ge = self.basis_elem(g);
            self.multiply(z, &ge) == self.multiply(&ge, z)
        })
    }

    /// The opposite algebra: arrows reversed, paths mirrored.
    pub fn opposite(&self) -> Result<Algebra> {
        let quiver = self.quiver.opposite();
        let rels: Vec<Poly> = self
            .system
            .rules
            .iter()
            .map(|r| r.as_poly().into_iter().map(|(p, c)| (p.reversed(), c)).collect())
            .collect();
        let bounds = Bounds { max_basis: self.dim().max(1) * 4 + 16, ..Bounds::default() };
        let system = complete_rewrite_system(&quiver, &rels, bounds, false)?;
        Self::from_system(&format!("{}^op", self.name), quiver, system, bounds)
    }

    /// Quotient by the two-sided ideal generated by `extra`. Arrows that
    /// become expressible by smaller terms are deleted from the quiver.
    pub fn quotient(&self, extra: &[Elem]) -> Result<Algebra> {
        let mut rels: Vec<Poly> = self.system.rules.iter().map(|r| r.as_poly()).collect();
        for e in extra {
            rels.extend(poly_components(&self.elem_to_poly(e)));
        }
        let bounds = Bounds { max_basis: self.dim().max(1) * 4 + 16, ..Bounds::default() };
        let mut quiver = self.quiver.clone();
        loop {
            let system = complete_rewrite_system(&quiver, &rels, bounds, true)?;
            let linear: Vec<usize> =
                system.rules.iter().filter(|r| r.lead.len() == 1).map(|r| r.lead.arrows[0]).collect();
            if linear.is_empty() {
                return Self::from_system(&format!("{}/I", self.name), quiver, system, bounds);
            }
            // leading words and tails are irreducible, so the remaining
            // rules never mention the deleted arrows
            let keep: Vec<usize> = (0..quiver.arrows.len()).filter(|a| !linear.contains(a)).collect();
            let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(new, old)| (*old, new)).collect();
            let map_path = |p: &Path| Path {
                source: p.source,
                target: p.target,
                arrows: p.arrows.iter().map(|a| remap[a]).collect(),
            };
            rels = system
                .rules
                .iter()
                .filter(|r| r.lead.len() != 1)
                .map(|r| r.as_poly().iter().map(|(p, c)| (map_path(p), c.clone())).collect())
                .collect();
            quiver = Quiver {
                vertices: quiver.vertices.clone(),
                arrows: keep.iter().map(|&a| quiver.arrows[a].clone()).collect(),
            };
        }
    }

    /// Relations of the completed system, printable.
    pub fn relation_strings(&self) -> Vec<String> {
        self.system.rules.iter().map(|r| self.quiver.format_poly(&r.as_poly())).collect()
    }
}

/// Element parsed from a sum of named paths, for tests and tooling.
pub fn elem_from_words(alg: &Algebra, terms: &[(i64, &[&str])]) -> Result<Elem> {
    let mut poly = Poly::new();
    for (c, words) in terms {
        let idx: Vec<usize> = words
            .iter()
            .map(|w| alg.quiver.arrow_index(w).ok_or_else(|| Error::InvalidQuiver(format!("no arrow {w}"))))
            .collect::<Result<_>>()?;
        let p = alg.quiver.path(&idx).ok_or_else(|| Error::InvalidQuiver("path does not compose".into()))?;
        crate::quiver::poly_add_term(&mut poly, p, &Scalar::from_int(*c));
    }
    Ok(alg.elem_from_poly(&poly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::poly_from_path;

    fn gamma2() -> Algebra {
        let q = Quiver::new(vec!["1".into(), "2".into()], vec![("mu".into(), 0, 1), ("beta".into(), 1, 1)]).unwrap();
        let rel = poly_from_path(q.path(&[1, 1, 1]).unwrap());
        Algebra::build("Gamma2", q, &[rel], Bounds::default()).unwrap()
    }

    #[test]
    fn gamma2_basics() {
        let a = gamma2();
        assert_eq!(a.dim(), 7);
        let h: Vec<String> = a.hom_space(0, 1).iter().map(|&i| a.format_basis(i)).collect();
        assert_eq!(h, vec!["mu", "mu*beta", "mu*beta^2"]);
        assert!(a.hom_space(1, 0).is_empty());
        assert_eq!(a.radical_basis().len(), 5);
    }

    #[test]
    fn idempotent_action() {
        let a = gamma2();
        let mu = elem_from_words(&a, &[(1, &["mu"])]).unwrap();
        let e1 = a.basis_elem(a.idempotent(0));
        assert_eq!(a.multiply(&e1, &mu), mu);
        assert!(a.multiply(&mu, &e1).is_empty());
    }

    #[test]
    fn opposite_dimensions() {
        let a = gamma2();
        let op = a.opposite().unwrap();
        assert_eq!(op.dim(), 7);
        assert_eq!(op.hom_space(1, 0).len(), 3);
        let back = op.opposite().unwrap();
        assert_eq!(back.basis, a.basis);
    }

    #[test]
    fn center_of_local_commutative() {
        let q = Quiver::new(vec!["1".into()], vec![("x".into(), 0, 0)]).unwrap();
        let rel = poly_from_path(q.path(&[0, 0]).unwrap());
        let a = Algebra::build("K[x]/x2", q, &[rel], Bounds::default()).unwrap();
        assert_eq!(a.center_basis().len(), 2);
    }

    #[test]
    fn quotient_by_arrow_deletes_it() {
        let a = gamma2();
        let beta = elem_from_words(&a, &[(1, &["beta"])]).unwrap();
        let q = a.quotient(&[beta]).unwrap();
        assert_eq!(q.dim(), 3);
        assert_eq!(q.quiver.arrows.len(), 1);
        assert_eq!(a.quotient(&[]).unwrap().dim(), 7);
    }
}
