//! Two-term silting objects and irreducible left mutation.

use crate::algebra::Algebra;
use crate::complex::{
    chain_map_space, endo_scalar, mapping_cone, shift_hom_vanishes, strip_contractible, ChainMap, Complex, HomK, Mat,
};
use crate::error::{Error, Result};
use crate::linalg::{sv_axpy, SVec};

pub type GVector = Vec<i64>;

/// A basic two-term silting complex, summands in canonical order
/// (g-vectors descending, so `Λ` has the identity g-matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiltingObject {
    pub summands: Vec<Complex>,
    pub gmat: Vec<GVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mutation {
    New(SiltingObject),
    ExitsTwoTerm,
}

impl SiltingObject {
    pub fn from_summands(alg: &Algebra, summands: Vec<Complex>) -> Result<Self> {
        let n = alg.num_vertices();
        let mut pairs: Vec<(GVector, Complex)> =
            summands.into_iter().map(|c| Ok((c.g_vector(n)?, c))).collect::<Result<_>>()?;
        pairs.sort_by(|a, b| b.0.cmp(&a.0));
        let (gmat, summands) = pairs.into_iter().unzip();
        Ok(SiltingObject { summands, gmat })
    }

    /// `Λ` itself: one stalk `0 -> P_v` per vertex.
    pub fn stalk(alg: &Algebra) -> Self {
        Self::from_summands(alg, (0..alg.num_vertices()).map(Complex::stalk).collect()).unwrap()
    }

    /// `Λ[1]`: every summand `P_v -> 0`.
    pub fn shifted(alg: &Algebra) -> Self {
        Self::from_summands(alg, (0..alg.num_vertices()).map(Complex::shifted_stalk).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Largest number of indecomposable projectives in one summand.
    pub fn max_rank(&self) -> usize {
        self.summands.iter().map(|c| c.parts[1].len() + c.parts[2].len()).max().unwrap_or(0)
    }
}

/// `Hom_K(T_a, T_b)` for all summand pairs, computed once per object.
pub struct HomTable {
    homs: Vec<Vec<HomK>>,
}

impl HomTable {
    pub fn new(alg: &Algebra, t: &[Complex]) -> Self {
        let homs = t.iter().map(|x| t.iter().map(|y| chain_map_space(alg, x, y)).collect()).collect();
        HomTable { homs }
    }

    pub fn get(&self, a: usize, b: usize) -> &HomK {
        &self.homs[a][b]
    }

    /// Basis of the radical morphisms `T_a -> T_b`.
    fn radical(&self, alg: &Algebra, t: &[Complex], a: usize, b: usize) -> Vec<ChainMap> {
        let h = &self.homs[a][b];
        if a != b {
            return h.maps.clone();
        }
        let chi: Vec<_> = h.maps.iter().map(|f| endo_scalar(alg, &t[a], f)).collect();
        let Some(p) = chi.iter().position(|c| !c.is_zero()) else {
            return h.maps.clone();
        };
        let vp = h.vector(alg, &h.maps[p]);
        h.maps
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != p)
            .map(|(i, f)| {
                let c = &chi[i] / &chi[p];
                let v: SVec = sv_axpy(&h.vector(alg, f), &-c, &vp);
                h.map_of(&v)
            })
            .collect()
    }
}

/// Minimal left `add(T / T_idx)`-approximation of `T_idx`, as the target
/// complex and the chain map into it.
pub fn left_approximation(alg: &Algebra, t: &[Complex], homs: &HomTable, idx: usize) -> (Complex, ChainMap) {
    let x = &t[idx];
    let others: Vec<usize> = (0..t.len()).filter(|k| *k != idx).collect();
    let mut parts1 = Vec::new();
    let mut parts0 = Vec::new();
    let mut blocks: Vec<&Mat> = Vec::new();
    let mut f1 = Mat::zeros(0, x.parts[1].len());
    let mut f0 = Mat::zeros(0, x.parts[2].len());
    for &j in &others {
        let hj = homs.get(idx, j);
        if hj.dim() == 0 {
            continue;
        }
        // maps that factor through a radical morphism into T_j
        let mut span = hj.null.clone();
        for &k in &others {
            let hk = homs.get(idx, k);
            if hk.dim() == 0 {
                continue;
            }
            for g in homs.radical(alg, t, k, j) {
                for f in &hk.maps {
                    span.insert(&hj.vector(alg, &ChainMap::compose(alg, &g, f)));
                }
            }
        }
        for f in &hj.maps {
            if span.insert(&hj.vector(alg, f)) {
                parts1.extend_from_slice(&t[j].parts[1]);
                parts0.extend_from_slice(&t[j].parts[2]);
                blocks.push(&t[j].d1);
                f1 = f1.vstack(&f.f1);
                f0 = f0.vstack(&f.f0);
            }
        }
    }
    let z = Complex::two_term(parts1, parts0, Mat::block_diag(&blocks));
    (z, ChainMap { f1, f0 })
}

/// Replace summand `idx` by the reduced cone of its minimal left
/// approximation.
pub fn left_mutation(alg: &Algebra, t: &SiltingObject, idx: usize) -> Result<Mutation> {
    let homs = HomTable::new(alg, &t.summands);
    left_mutation_with(alg, t, &homs, idx)
}

pub fn left_mutation_with(alg: &Algebra, t: &SiltingObject, homs: &HomTable, idx: usize) -> Result<Mutation> {
    Ok(match mutate_summand(alg, &t.summands, homs, idx)? {
        None => Mutation::ExitsTwoTerm,
        Some(c) => {
            let mut s = t.summands.clone();
            s[idx] = c;
            Mutation::New(SiltingObject::from_summands(alg, s)?)
        }
    })
}

/// The new summand replacing `t[idx]`, or None when the cone leaves the
/// two-term range.
pub fn mutate_summand(alg: &Algebra, t: &[Complex], homs: &HomTable, idx: usize) -> Result<Option<Complex>> {
    let (z, pi) = left_approximation(alg, t, homs, idx);
    let cone = strip_contractible(alg, &mapping_cone(&t[idx], &z, &pi));
    if !cone.is_two_term() {
        return Ok(None);
    }
    if cone.is_zero() {
        return Err(Error::NotSilting("mutation produced a zero summand".into()));
    }
    Ok(Some(cone))
}

/// `Hom(T, T[1]) = 0`.
pub fn is_presilting(alg: &Algebra, t: &SiltingObject) -> bool {
    t.summands.iter().all(|x| t.summands.iter().all(|y| shift_hom_vanishes(alg, x, y)))
}

/// `T >= S`, i.e. `Hom(T, S[1]) = 0`.
pub fn order_ge(alg: &Algebra, t: &SiltingObject, s: &SiltingObject) -> bool {
    t.summands.iter().all(|x| s.summands.iter().all(|y| shift_hom_vanishes(alg, x, y)))
}

/// Determinant of a small integer matrix by exact elimination.
pub fn determinant(m: &[GVector]) -> i64 {
    use crate::scalar::Scalar;
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.iter().map(|r| r.iter().map(|x| Scalar::from_int(*x)).collect()).collect();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|r| !a[*r][c].is_zero()) else {
            return 0;
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let v = &a[r][k] - &(&f * &a[c][k]);
                a[r][k] = v;
            }
        }
    }
    det.to_i64().expect("integer determinant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl;
    use crate::rewrite::Bounds;

    fn gamma2() -> Algebra {
        dsl::parse("algebra G over Q\nvertices 1 2\narrows mu: 1 -> 2, beta: 2 -> 2\nrelations beta^3\n")
            .unwrap()
            .build(Bounds::default())
            .unwrap()
    }

    fn new(m: Mutation) -> SiltingObject {
        match m {
            Mutation::New(s) => s,
            Mutation::ExitsTwoTerm => panic!("left the two-term range"),
        }
    }

    #[test]
    fn first_mutations_of_gamma2() {
        let a = gamma2();
        let t = SiltingObject::stalk(&a);
        assert_eq!(t.gmat, vec![vec![1, 0], vec![0, 1]]);
        // summand 0 is 0 -> P_1; its approximation is zero
        let s = new(left_mutation(&a, &t, 0).unwrap());
        assert_eq!(s.gmat, vec![vec![0, 1], vec![-1, 0]]);
        // summand 1 is 0 -> P_2, approximated by P_1^3
        let s = new(left_mutation(&a, &t, 1).unwrap());
        assert_eq!(s.gmat, vec![vec![3, -1], vec![1, 0]]);
        assert!(is_presilting(&a, &s));
        assert!(order_ge(&a, &t, &s));
        assert!(!order_ge(&a, &s, &t));
        // mutating the new summand leaves the two-term range
        assert_eq!(left_mutation(&a, &s, 0).unwrap(), Mutation::ExitsTwoTerm);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![1, 0], vec![3, -1]]), -1);
        assert_eq!(determinant(&[vec![2, 4], vec![1, 2]]), 0);
    }
}
