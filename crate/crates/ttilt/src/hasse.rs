//! Breadth-first enumeration of the two-term silting Hasse quiver.

use crate::algebra::Algebra;
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::linalg::solve_left;
use crate::scalar::Scalar;
use crate::silting::{left_mutation_with, mutate_summand, GVector, HomTable, Mutation, SiltingObject};
use std::collections::{HashMap, VecDeque};

#[derive(Clone, Copy, Debug)]
pub struct HasseOptions {
    pub max_nodes: usize,
    /// Stop once a summand needs more than this many projectives.
    pub max_summand_rank: usize,
    pub ray_steps: usize,
    /// Rank cap for summands met along a ray.
    pub ray_max_rank: usize,
}

impl Default for HasseOptions {
    fn default() -> Self {
        HasseOptions { max_nodes: 10_000, max_summand_rank: 12, ray_steps: 12, ray_max_rank: 96 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HType {
    H(usize, usize),
    Irregular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayCertificate {
    /// Product of one period of g-matrix multipliers.
    pub matrix: Vec<Vec<i64>>,
    /// Node the ray starts from.
    pub start: usize,
    /// Summand positions mutated in one period.
    pub pattern: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Finite { count: usize, ty: HType },
    InfiniteHeuristic { certificate: RayCertificate },
    UndecidedBound { nodes: usize },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Finite { .. } => "finite",
            Verdict::InfiniteHeuristic { .. } => "infinite-heuristic",
            Verdict::UndecidedBound { .. } => "undecided-bound",
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Verdict::Finite { .. })
    }
}

#[derive(Clone, Debug, Default)]
pub struct HasseGraph {
    pub nodes: Vec<SiltingObject>,
    /// `(from, to, summand index in from)`.
    pub arrows: Vec<(usize, usize, usize)>,
    pub source: usize,
    pub sink: Option<usize>,
    index: HashMap<Vec<GVector>, usize>,
    /// Nodes whose mutations were all computed.
    pub expanded: Vec<bool>,
}

impl HasseGraph {
    pub fn find(&self, gmat: &[GVector]) -> Option<usize> {
        self.index.get(gmat).copied()
    }

    fn add(&mut self, t: SiltingObject) -> (usize, bool) {
        if let Some(&i) = self.index.get(&t.gmat) {
            return (i, false);
        }
        let i = self.nodes.len();
        self.index.insert(t.gmat.clone(), i);
        self.nodes.push(t);
        self.expanded.push(false);
        (i, true)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.1 == v).count()
    }
}

/// Enumerate from `Λ` by left mutation; on hitting a bound, try to certify
/// infiniteness with a mutation ray.
pub fn hasse_enumerate(alg: &Algebra, opts: &HasseOptions) -> Result<(HasseGraph, Verdict)> {
    let mut g = HasseGraph::default();
    let (src, _) = g.add(SiltingObject::stalk(alg));
    g.source = src;
    let mut queue = VecDeque::from([src]);
    let mut bounded = false;
    while let Some(v) = queue.pop_front() {
        let t = g.nodes[v].clone();
        let homs = HomTable::new(alg, &t.summands);
        for idx in 0..t.len() {
            if let Mutation::New(s) = left_mutation_with(alg, &t, &homs, idx)? {
                if s.max_rank() > opts.max_summand_rank {
                    bounded = true;
                    break;
                }
                let (w, fresh) = g.add(s);
                g.arrows.push((v, w, idx));
                if fresh {
                    queue.push_back(w);
                }
            }
        }
        if bounded {
            break;
        }
        g.expanded[v] = true;
        if g.nodes.len() > opts.max_nodes {
            bounded = true;
            break;
        }
    }
    let shifted: Vec<GVector> = SiltingObject::shifted(alg).gmat;
    g.sink = g.find(&shifted);
    if !bounded {
        let ty = classify_type(&g)?;
        let count = g.nodes.len();
        return Ok((g, Verdict::Finite { count, ty }));
    }
    let verdict = match detect_divergent_ray(alg, &g, opts)? {
        Some(certificate) => Verdict::InfiniteHeuristic { certificate },
        None => Verdict::UndecidedBound { nodes: g.nodes.len() },
    };
    Ok((g, verdict))
}

/// `H(m, n)` when the graph is two chains from the unique source to the
/// unique sink, with `m <= n` interior nodes.
pub fn classify_type(g: &HasseGraph) -> Result<HType> {
    if g.expanded.iter().any(|e| !e) {
        return Err(Error::NotFinite);
    }
    let count = g.nodes.len();
    let sources: Vec<usize> = (0..count).filter(|v| g.in_degree(*v) == 0).collect();
    let sinks: Vec<usize> = (0..count).filter(|v| g.out_degree(*v) == 0).collect();
    if sources.len() != 1 || sinks.len() != 1 {
        return Ok(HType::Irregular);
    }
    let (src, sink) = (sources[0], sinks[0]);
    if count == 2 {
        return Ok(HType::H(0, 0));
    }
    let outs: Vec<usize> = g.arrows.iter().filter(|a| a.0 == src).map(|a| a.1).collect();
    if outs.len() != 2 || outs[0] == outs[1] {
        return Ok(HType::Irregular);
    }
    let mut lens = Vec::new();
    for &first in &outs {
        let mut len = 0;
        let mut cur = first;
        while cur != sink {
            if g.in_degree(cur) != 1 || g.out_degree(cur) != 1 {
                return Ok(HType::Irregular);
            }
            len += 1;
            cur = g.arrows.iter().find(|a| a.0 == cur).unwrap().1;
        }
        lens.push(len);
    }
    if lens[0] + lens[1] + 2 != count {
        return Ok(HType::Irregular);
    }
    Ok(HType::H(lens[0].min(lens[1]), lens[0].max(lens[1])))
}

pub fn brick_count(v: &Verdict) -> Result<usize> {
    match v {
        Verdict::Finite { count, .. } => Ok(count - 2),
        _ => Err(Error::NotFinite),
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// True iff `M^k = I` for some `1 <= k <= 12`; the bound covers every finite
/// order in `GL_2(Z)`.
pub fn has_finite_order(m: &[Vec<i64>]) -> Result<bool> {
    let det = crate::silting::determinant(m);
    if det != 1 && det != -1 {
        return Err(Error::NonUnimodular);
    }
    let id = identity(m.len());
    let mut p = m.to_vec();
    for _ in 1..=12 {
        if p == id {
            return Ok(true);
        }
        p = mat_mul(&p, m);
        if p.iter().flatten().any(|x| x.abs() > 1 << 40) {
            return Ok(false);
        }
    }
    Ok(false)
}

/// Row `s` of the new g-matrix as an integer combination of the old rows.
fn multiplier(old: &[GVector], s: usize, new_row: &GVector) -> Result<Vec<Vec<i64>>> {
    let m: Vec<Vec<Scalar>> = old.iter().map(|r| r.iter().map(|x| Scalar::from_int(*x)).collect()).collect();
    let b: Vec<Scalar> = new_row.iter().map(|x| Scalar::from_int(*x)).collect();
    let x = solve_left(&m, &b).ok_or(Error::NonUnimodular)?;
    let mut e = identity(old.len());
    for (j, c) in x.iter().enumerate() {
        e[s][j] = c.to_i64().filter(|_| c.is_integer()).ok_or(Error::NonUnimodular)?;
    }
    Ok(e)
}

/// Walk from `start`, mutating positions `i, j, i, j, ...`; returns the
/// multiplier per step until the walk leaves the two-term range.
fn ray_multipliers(
    alg: &Algebra,
    start: &SiltingObject,
    i: usize,
    j: usize,
    steps: usize,
    max_rank: usize,
) -> Result<Vec<Vec<Vec<i64>>>> {
    let n = alg.num_vertices();
    let mut summands: Vec<Complex> = start.summands.clone();
    let mut gmat: Vec<GVector> = start.gmat.clone();
    let mut out: Vec<Vec<Vec<i64>>> = Vec::new();
    for step in 0..steps {
        let s = if step % 2 == 0 { i } else { j };
        let homs = HomTable::new(alg, &summands);
        let Some(c) = mutate_summand(alg, &summands, &homs, s)? else { break };
        let g = c.g_vector(n)?;
        out.push(multiplier(&gmat, s, &g)?);
        summands[s] = c;
        gmat[s] = g;
        if period(&out).is_some() || summands[s].parts[1].len() + summands[s].parts[2].len() > max_rank {
            break;
        }
    }
    Ok(out)
}

/// Smallest period `p` whose block repeats twice at the end of `seq`,
/// seen over at least three steps.
fn period<T: PartialEq>(seq: &[T]) -> Option<usize> {
    let n = seq.len();
    (1..=n / 2).find(|&p| n >= (2 * p).max(3) && (n - 2 * p..n - p).all(|k| seq[k] == seq[k + p]))
}

/// Look for an eventually periodic mutation ray whose period acts on
/// g-matrices with infinite order.
pub fn detect_divergent_ray(alg: &Algebra, g: &HasseGraph, opts: &HasseOptions) -> Result<Option<RayCertificate>> {
    let n = alg.num_vertices();
    if n < 2 {
        return Ok(None);
    }
    // the source first, then the most recently found nodes
    let mut starts = vec![g.source];
    starts.extend((0..g.nodes.len()).rev().filter(|v| *v != g.source).take(4));
    for &v in &starts {
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let ms = ray_multipliers(alg, &g.nodes[v], i, j, opts.ray_steps, opts.ray_max_rank)?;
                let Some(p) = period(&ms) else { continue };
                let mut m = identity(n);
                for e in &ms[ms.len() - p..] {
                    m = mat_mul(e, &m);
                }
                if !has_finite_order(&m)? {
                    let pattern = (0..p).map(|k| if (ms.len() - p + k) % 2 == 0 { i } else { j }).collect();
                    return Ok(Some(RayCertificate { matrix: m, start: v, pattern }));
                }
            }
        }
    }
    Ok(None)
}
