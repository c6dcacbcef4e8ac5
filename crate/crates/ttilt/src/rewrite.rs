//! Overlap completion of path-algebra relations under degree-lex order.

use crate::error::{Error, Result};
use crate::quiver::{poly_add_term, poly_sandwich, poly_scale, poly_sub, Path, Poly, Quiver};
use crate::scalar::Scalar;
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_path_len: usize,
    pub max_basis: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_path_len: 64, max_basis: 100_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Path,
    pub tail: Poly,
}

impl Rule {
    pub fn as_poly(&self) -> Poly {
        let mut p = poly_scale(&self.tail, &-Scalar::one());
        poly_add_term(&mut p, self.lead.clone(), &Scalar::one());
        p
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteSystem {
    pub rules: Vec<Rule>,
    pub complete: bool,
}

impl RewriteSystem {
    fn find_redex(&self, p: &Path) -> Option<(usize, usize)> {
        self.rules.iter().enumerate().find_map(|(r, rule)| p.find(&rule.lead.arrows).map(|pos| (r, pos)))
    }

    pub fn is_reducible(&self, p: &Path) -> bool {
        self.find_redex(p).is_some()
    }

    /// Normal form of a polynomial.
    pub fn reduce(&self, poly: &Poly, quiver: &Quiver) -> Poly {
        let mut p = poly.clone();
        let mut ceiling: Option<Path> = None;
        loop {
            // everything above the ceiling is already irreducible
            let hit = {
                let range: Box<dyn Iterator<Item = (&Path, &Scalar)>> = match &ceiling {
                    None => Box::new(p.iter().rev()),
                    Some(c) => Box::new(p.range(..c.clone()).rev()),
                };
                let mut found = None;
                for (path, _) in range {
                    if let Some((r, pos)) = self.find_redex(path) {
                        found = Some((path.clone(), r, pos));
                        break;
                    }
                }
                found
            };
            let Some((path, r, pos)) = hit else { return p };
            let c = p.remove(&path).unwrap();
            let rule = &self.rules[r];
            let u = path.slice(0, pos, quiver);
            let v = path.slice(pos + rule.lead.len(), path.len(), quiver);
            for (q, d) in poly_sandwich(&u, &rule.tail, &v) {
                poly_add_term(&mut p, q, &(&c * &d));
            }
            ceiling = Some(path);
        }
    }

    /// Irreducible paths, in degree-lex order.
    pub fn irreducible_paths(&self, quiver: &Quiver, bounds: Bounds) -> Result<Vec<Path>> {
        let mut out: Vec<Path> = Vec::new();
        let mut frontier: Vec<Path> = Vec::new();
        for v in 0..quiver.num_vertices() {
            let p = Path::trivial(v);
            out.push(p.clone());
            frontier.push(p);
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for (a, arrow) in quiver.arrows.iter().enumerate() {
                    if arrow.source != p.target {
                        continue;
                    }
                    let mut q = p.clone();
                    q.arrows.push(a);
                    q.target = arrow.target;
                    // p is irreducible, so only suffixes of q can match
                    let reducible = self.rules.iter().any(|r| q.arrows.ends_with(&r.lead.arrows));
                    if reducible {
                        continue;
                    }
                    if q.len() >= bounds.max_path_len {
                        return Err(Error::BoundExceeded(format!(
                            "irreducible path of length {} exists",
                            q.len()
                        )));
                    }
                    next.push(q);
                }
            }
            out.extend(next.iter().cloned());
            if out.len() > bounds.max_basis {
                return Err(Error::BoundExceeded(format!("more than {} basis paths", bounds.max_basis)));
            }
            frontier = next;
        }
        out.sort();
        Ok(out)
    }
}

struct Completion<'a> {
    quiver: &'a Quiver,
    bounds: Bounds,
    rules: Vec<(u64, Rule)>,
    next_id: u64,
}

impl<'a> Completion<'a> {
    fn system(&self) -> RewriteSystem {
        RewriteSystem { rules: self.rules.iter().map(|(_, r)| r.clone()).collect(), complete: false }
    }

    /// Reduce `p` and, if nonzero, add it as a rule; displaced rules are
    /// returned for re-insertion.
    fn add(&mut self, p: &Poly) -> Result<Vec<Poly>> {
        let sys = self.system();
        let p = sys.reduce(p, self.quiver);
        let Some((lead, c)) = p.iter().next_back().map(|(a, b)| (a.clone(), b.clone())) else {
            return Ok(Vec::new());
        };
        if lead.is_trivial() {
            return Err(Error::NotAdmissible(format!(
                "the idempotent {} lies in the ideal",
                self.quiver.format_path(&lead)
            )));
        }
        if lead.len() >= self.bounds.max_path_len {
            return Err(Error::BoundExceeded(format!("rule with leading length {}", lead.len())));
        }
        let p = poly_scale(&p, &c.recip());
        let mut tail = p.clone();
        tail.remove(&lead);
        let tail = poly_scale(&tail, &-Scalar::one());
        let mut displaced = Vec::new();
        let mut kept = Vec::new();
        for (id, r) in self.rules.drain(..) {
            if r.lead.find(&lead.arrows).is_some() {
                displaced.push(r.as_poly());
            } else {
                kept.push((id, r));
            }
        }
        self.rules = kept;
        self.rules.push((self.next_id, Rule { lead, tail }));
        self.next_id += 1;
        // keep tails in normal form
        let sys = self.system();
        for (_, r) in self.rules.iter_mut() {
            r.tail = sys.reduce(&r.tail, self.quiver);
        }
        if self.rules.len() > self.bounds.max_basis {
            return Err(Error::BoundExceeded("too many rewrite rules".into()));
        }
        Ok(displaced)
    }

    fn add_all(&mut self, mut pending: Vec<Poly>) -> Result<bool> {
        let mut changed = false;
        while !pending.is_empty() {
            // smallest leading path first
            pending.sort_by(|a, b| b.keys().next_back().cmp(&a.keys().next_back()));
            let p = pending.pop().unwrap();
            let before = self.next_id;
            let displaced = self.add(&p)?;
            changed |= self.next_id != before;
            pending.extend(displaced);
        }
        Ok(changed)
    }
}

/// S-polynomials for every overlap of `a`'s leading word suffix with `b`'s
/// leading word prefix.
fn overlaps(a: &Rule, b: &Rule, quiver: &Quiver) -> Vec<Poly> {
    let (la, lb) = (a.lead.len(), b.lead.len());
    let mut out = Vec::new();
    for k in 1..la.min(lb) {
        if a.lead.arrows[la - k..] != b.lead.arrows[..k] {
            continue;
        }
        let u = a.lead.slice(0, la - k, quiver);
        let v = b.lead.slice(k, lb, quiver);
        let left = poly_sandwich(&Path::trivial(a.lead.source), &a.tail, &v);
        let right = poly_sandwich(&u, &b.tail, &Path::trivial(b.lead.target));
        out.push(poly_sub(&left, &right));
    }
    out
}

/// Complete `relations` into a confluent rewrite system.
///
/// With `allow_linear` false every relation must be a combination of paths
/// of length at least 2 sharing endpoints.
pub fn complete_rewrite_system(
    quiver: &Quiver,
    relations: &[Poly],
    bounds: Bounds,
    allow_linear: bool,
) -> Result<RewriteSystem> {
    for r in relations {
        let mut ends = r.keys().map(|p| (p.source, p.target));
        if let Some(first) = ends.next() {
            if ends.any(|e| e != first) {
                return Err(Error::MixedEndpoints(quiver.format_poly(r)));
            }
        }
        if !allow_linear {
            if let Some(short) = r.keys().find(|p| p.len() < 2) {
                return Err(Error::NotAdmissible(format!(
                    "relation {} has a term {} of length < 2",
                    quiver.format_poly(r),
                    quiver.format_path(short)
                )));
            }
        }
    }
    let mut c = Completion { quiver, bounds, rules: Vec::new(), next_id: 0 };
    c.add_all(relations.to_vec())?;
    let mut done: HashSet<(u64, u64)> = HashSet::new();
    loop {
        let mut spolys = Vec::new();
        for (ia, a) in &c.rules {
            for (ib, b) in &c.rules {
                if done.insert((*ia, *ib)) {
                    spolys.extend(overlaps(a, b, quiver));
                }
            }
        }
        if spolys.is_empty() {
            break;
        }
        c.add_all(spolys)?;
    }
    let mut sys = c.system();
    sys.rules.sort_by(|a, b| a.lead.cmp(&b.lead));
    sys.complete = true;
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::poly_from_path;

    fn quiver_1110() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("alpha".into(), 0, 0), ("mu".into(), 0, 1), ("beta".into(), 1, 1)],
        )
        .unwrap()
    }

    fn word(q: &Quiver, w: &[usize]) -> Poly {
        poly_from_path(q.path(w).unwrap())
    }

    #[test]
    fn single_power_relation() {
        let q = Quiver::new(vec!["1".into(), "2".into()], vec![("mu".into(), 0, 1), ("beta".into(), 1, 1)]).unwrap();
        let sys = complete_rewrite_system(&q, &[word(&q, &[1, 1, 1])], Bounds::default(), false).unwrap();
        assert_eq!(sys.rules.len(), 1);
        assert_eq!(sys.irreducible_paths(&q, Bounds::default()).unwrap().len(), 7);
    }

    #[test]
    fn commutation_relation_completes() {
        // alpha^2, beta^3, alpha*mu*beta - mu*beta^2
        let q = quiver_1110();
        let rels = vec![
            word(&q, &[0, 0]),
            word(&q, &[2, 2, 2]),
            poly_sub(&word(&q, &[0, 1, 2]), &word(&q, &[1, 2, 2])),
        ];
        let sys = complete_rewrite_system(&q, &rels, Bounds::default(), false).unwrap();
        let basis = sys.irreducible_paths(&q, Bounds::default()).unwrap();
        assert_eq!(basis.len(), 9);
        for r in &rels {
            assert!(sys.reduce(r, &q).is_empty());
        }
    }

    #[test]
    fn free_loop_exceeds_bound() {
        let q = Quiver::new(vec!["1".into()], vec![("a".into(), 0, 0)]).unwrap();
        let r = complete_rewrite_system(&q, &[], Bounds::default(), false).unwrap();
        assert!(matches!(r.irreducible_paths(&q, Bounds::default()), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn rejects_short_terms() {
        let q = quiver_1110();
        let r = complete_rewrite_system(&q, &[word(&q, &[0])], Bounds::default(), false);
        assert!(matches!(r, Err(Error::NotAdmissible(_))));
        let mixed = {
            let mut p = word(&q, &[0, 0]);
            p.extend(word(&q, &[1, 2]));
            p
        };
        assert!(matches!(
            complete_rewrite_system(&q, &[mixed], Bounds::default(), false),
            Err(Error::MixedEndpoints(_))
        ));
    }
}
