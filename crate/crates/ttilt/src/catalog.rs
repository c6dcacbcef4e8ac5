//! Built-in algebras with their expected support tau-tilting data.
//!
//! Each entry is stored as relation-language text with its parameters
//! declared on a `params` line, so overrides go through the parser.

use crate::algebra::Algebra;
use crate::dsl::{self, AlgebraSpec};
use crate::error::{Error, Result};
use crate::rewrite::Bounds;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

pub type Params = BTreeMap<String, Scalar>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Table {
    Gamma,
    T,
    W,
    B,
    D,
    Brauer,
    Extra,
}

impl Table {
    pub const ALL: [Table; 7] =
        [Table::Gamma, Table::T, Table::W, Table::B, Table::D, Table::Brauer, Table::Extra];

    pub fn parse(s: &str) -> Option<Table> {
        match s.to_ascii_lowercase().as_str() {
            "gamma" => Some(Table::Gamma),
            "t" => Some(Table::T),
            "w" => Some(Table::W),
            "b" => Some(Table::B),
            "d" => Some(Table::D),
            "brauer" => Some(Table::Brauer),
            "extra" => Some(Table::Extra),
            _ => None,
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Table::Gamma => "Gamma",
            Table::T => "T",
            Table::W => "W",
            Table::B => "B",
            Table::D => "D",
            Table::Brauer => "Brauer",
            Table::Extra => "Extra",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    /// Count and, when known, the type (m, n) with m <= n.
    Finite { count: usize, ty: Option<(usize, usize)> },
    Infinite,
}

#[derive(Clone, Debug)]
enum Source {
    Text { quiver: &'static str, relations: &'static str },
    T1,
    Brauer(usize),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub table: Table,
    source: Source,
    pub defaults: Vec<(&'static str, i64)>,
    pub alt: Vec<(&'static str, i64)>,
    mins: Vec<(&'static str, i64)>,
    nonzero: Vec<&'static str>,
    pub expected: Expected,
    /// Brick count as printed, where a table lists it.
    pub bricks: Option<usize>,
}

const Q_MU_BETA: &str = "vertices 1 2\narrows mu: 1 -> 2, beta: 2 -> 2";
const Q_ALPHA_MU_BETA: &str = "vertices 1 2\narrows alpha: 1 -> 1, mu: 1 -> 2, beta: 2 -> 2";
const Q_ALPHA_MU: &str = "vertices 1 2\narrows alpha: 1 -> 1, mu: 1 -> 2";
const Q_ALPHA_MU_NU: &str = "vertices 1 2\narrows alpha: 1 -> 1, mu: 1 -> 2, nu: 2 -> 1";
const Q_FULL: &str = "vertices 1 2\narrows alpha: 1 -> 1, mu: 1 -> 2, nu: 2 -> 1, beta: 2 -> 2";
const Q_MU_NU: &str = "vertices 1 2\narrows mu: 1 -> 2, nu: 2 -> 1";
const Q_DOUBLE: &str = "vertices 1 2\narrows mu1: 1 -> 2, mu2: 1 -> 2, nu1: 2 -> 1, nu2: 2 -> 1";

impl CatalogEntry {
    fn text(name: &str, table: Table, quiver: &'static str, relations: &'static str) -> Self {
        CatalogEntry {
            name: name.to_string(),
            table,
            source: Source::Text { quiver, relations },
            defaults: Vec::new(),
            alt: Vec::new(),
            mins: Vec::new(),
            nonzero: Vec::new(),
            expected: Expected::Infinite,
            bricks: None,
        }
    }

    fn fin(mut self, count: usize, m: usize, n: usize) -> Self {
        self.expected = Expected::Finite { count, ty: Some((m.min(n), m.max(n))) };
        self
    }

    fn params(mut self, defaults: &[(&'static str, i64)], alt: &[(&'static str, i64)]) -> Self {
        self.defaults = defaults.to_vec();
        self.alt = alt.to_vec();
        self
    }

    fn min(mut self, mins: &[(&'static str, i64)]) -> Self {
        self.mins = mins.to_vec();
        self
    }

    fn nonzero(mut self, names: &[&'static str]) -> Self {
        self.nonzero = names.to_vec();
        self
    }

    fn bricks(mut self, b: usize) -> Self {
        self.bricks = Some(b);
        self
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.expected, Expected::Finite { .. })
    }

    pub fn has_params(&self) -> bool {
        !self.defaults.is_empty()
    }

    pub fn default_params(&self) -> Params {
        to_params(&self.defaults)
    }

    /// The second parameter sample, or the defaults when there is none.
    pub fn alt_params(&self) -> Params {
        if self.alt.is_empty() {
            self.default_params()
        } else {
            to_params(&self.alt)
        }
    }

    fn resolve(&self, overrides: &Params) -> Result<Params> {
        let mut p = self.default_params();
        for (k, v) in overrides {
            if !p.contains_key(k) {
                return Err(Error::InvalidParameter(format!("{} has no parameter {k}", self.name)));
            }
            p.insert(k.clone(), v.clone());
        }
        for (k, lo) in &self.mins {
            let v = &p[*k];
            if !v.is_integer() || v.to_i64().is_none_or(|x| x < *lo) {
                return Err(Error::InvalidParameter(format!("{}: {k} = {v} must be an integer >= {lo}", self.name)));
            }
        }
        for k in &self.nonzero {
            if p[*k].is_zero() {
                return Err(Error::InvalidParameter(format!("{}: {k} must be nonzero", self.name)));
            }
        }
        if matches!(self.source, Source::T1) {
            let g = |s: &str| p[s].clone();
            if (&g("k1") * &g("k4")) == (&g("k2") * &g("k3")) || (&g("l1") * &g("l4")) == (&g("l2") * &g("l3")) {
                return Err(Error::InvalidParameter(
                    "T1 needs k1*k4 != k2*k3 and l1*l4 != l2*l3".into(),
                ));
            }
        }
        Ok(p)
    }

    /// Relation-language source for the given parameter overrides.
    pub fn source_text(&self, overrides: &Params) -> Result<String> {
        let p = self.resolve(overrides)?;
        let header = format!("algebra {} over Q\n", self.name);
        Ok(match &self.source {
            Source::Text { quiver, relations } => {
                let mut s = format!("{header}{quiver}\n");
                if !p.is_empty() {
                    let ps: Vec<String> = p.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                    s.push_str(&format!("params {}\n", ps.join(", ")));
                }
                if !relations.is_empty() {
                    s.push_str(&format!("relations {relations}\n"));
                }
                s
            }
            Source::T1 => format!("{header}{Q_DOUBLE}\n{}", t1_relations(&p)),
            Source::Brauer(n) => brauer_text(&self.name, *n),
        })
    }

    pub fn spec(&self, overrides: &Params) -> Result<AlgebraSpec> {
        dsl::parse(&self.source_text(overrides)?)
    }

    pub fn build(&self, overrides: &Params, bounds: Bounds) -> Result<Algebra> {
        self.spec(overrides)?.build(bounds)
    }
}

fn to_params(list: &[(&str, i64)]) -> Params {
    list.iter().map(|(k, v)| (k.to_string(), Scalar::from_int(*v))).collect()
}

/// The products in T1 expand into sums with product coefficients.
fn t1_relations(p: &Params) -> String {
    let term = |l: &str, k: &str, mu: &str, nu: &str, out: &mut Vec<String>| {
        let c = &p[l] * &p[k];
        if !c.is_zero() {
            out.push(format!("{c}*{mu}*{nu}"));
        }
    };
    let mut r1 = Vec::new();
    term("l1", "k1", "mu1", "nu1", &mut r1);
    term("l1", "k2", "mu1", "nu2", &mut r1);
    term("l2", "k1", "mu2", "nu1", &mut r1);
    term("l2", "k2", "mu2", "nu2", &mut r1);
    let mut r2 = Vec::new();
    term("l3", "k3", "mu1", "nu1", &mut r2);
    term("l3", "k4", "mu1", "nu2", &mut r2);
    term("l4", "k3", "mu2", "nu1", &mut r2);
    term("l4", "k4", "mu2", "nu2", &mut r2);
    let join = |v: Vec<String>| v.join(" + ").replace("+ -", "- ");
    format!("relations nu1*mu1; nu2*mu2; {}; {}\n", join(r1), join(r2))
}

/// The line-shaped Brauer tree algebra with `n` simples.
fn brauer_text(name: &str, n: usize) -> String {
    let mut s = format!("algebra {name} over Q\nvertices");
    for v in 1..=n {
        s.push_str(&format!(" {v}"));
    }
    s.push_str("\narrows");
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push(format!("a{i}: {i} -> {}", i + 1));
        arrows.push(format!("b{i}: {} -> {i}", i + 1));
    }
    if !arrows.is_empty() {
        s.push(' ');
        s.push_str(&arrows.join(", "));
    }
    s.push('\n');
    let mut rels = Vec::new();
    for i in 1..n.saturating_sub(1) {
        rels.push(format!("a{i}*a{}", i + 1));
        rels.push(format!("b{}*b{i}", i + 1));
        rels.push(format!("b{i}*a{i} - a{}*b{}", i + 1, i + 1));
    }
    // the ends; implied by the rest once n >= 3
    if n >= 2 {
        rels.push("b1*a1*b1".into());
        rels.push(format!("a{0}*b{0}*a{0}", n - 1));
    }
    if !rels.is_empty() {
        s.push_str(&format!("relations {}\n", rels.join("; ")));
    }
    s
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn brauer_entry(n: usize) -> CatalogEntry {
    CatalogEntry {
        name: format!("Brauer{n}"),
        table: Table::Brauer,
        source: Source::Brauer(n),
        defaults: Vec::new(),
        alt: Vec::new(),
        mins: Vec::new(),
        nonzero: Vec::new(),
        expected: Expected::Finite { count: binomial(2 * n, n), ty: None },
        bricks: None,
    }
}

pub fn entries() -> Vec<CatalogEntry> {
    use Table::*;
    let e = CatalogEntry::text;
    let mut v = vec![
        // Table Gamma
        e("Gamma1", Gamma, "vertices 1 2\narrows mu1: 1 -> 2, mu2: 1 -> 2", ""),
        e("Gamma2", Gamma, Q_MU_BETA, "beta^3").fin(8, 1, 5),
        e("Gamma3", Gamma, Q_MU_BETA, "beta^4"),
        e("Gamma4", Gamma, Q_ALPHA_MU_BETA, "alpha^2; beta^2"),
        e("Gamma5", Gamma, Q_ALPHA_MU_BETA, "alpha^2; beta^3; alpha*mu*beta - mu*beta^2"),
        e("Gamma6", Gamma, Q_ALPHA_MU_BETA, "alpha^2; beta^4; alpha*mu*beta - mu*beta^3"),
        e(
            "Gamma7",
            Gamma,
            "vertices 1 2\narrows mu: 1 -> 2, beta1: 2 -> 2, beta2: 2 -> 2",
            "beta1^2; beta2^2; beta1*beta2; beta2*beta1",
        ),
        e("Gamma8", Gamma, Q_ALPHA_MU_NU, "alpha^2; mu*nu; nu*mu; nu*alpha").fin(7, 2, 3),
        e("Gamma9", Gamma, Q_ALPHA_MU_NU, "alpha^3; mu*nu; nu*mu; nu*alpha").fin(9, 2, 5),
        e("Gamma10", Gamma, Q_ALPHA_MU_NU, "alpha^2; mu*nu; nu*mu; nu*alpha*mu").fin(8, 3, 3),
        e("Gamma11", Gamma, Q_ALPHA_MU_NU, "alpha^n; mu*nu; nu*alpha^3; alpha^3*mu")
            .params(&[("n", 2)], &[("n", 5)])
            .min(&[("n", 2)])
            .fin(12, 5, 5),
        e("Gamma12", Gamma, Q_ALPHA_MU_NU, "alpha^m; nu*alpha; alpha*mu*nu; alpha^3*mu; (mu*nu)^n")
            .params(&[("m", 2), ("n", 1)], &[("m", 3), ("n", 2)])
            .min(&[("m", 2), ("n", 1)])
            .fin(9, 2, 5),
        e(
            "Gamma13",
            Gamma,
            Q_ALPHA_MU_NU,
            "alpha^m; mu*nu*mu; nu*mu*nu; nu*alpha^2; alpha^2*mu; (nu*alpha*mu)^n",
        )
        .params(&[("m", 2), ("n", 1)], &[("m", 3), ("n", 2)])
        .min(&[("m", 2), ("n", 1)])
        .fin(8, 3, 3),
        e("Gamma14", Gamma, Q_ALPHA_MU_NU, "alpha^2 - mu*nu; nu*alpha^n*mu")
            .params(&[("n", 1)], &[("n", 2)])
            .min(&[("n", 1)])
            .fin(8, 3, 3),
        e("Gamma15", Gamma, Q_ALPHA_MU_NU, "alpha^3 - mu*nu; nu*alpha^n*mu")
            .params(&[("n", 1)], &[("n", 3)])
            .min(&[("n", 1)])
            .fin(12, 5, 5),
        e("Gamma16", Gamma, Q_ALPHA_MU_NU, "alpha^n - mu*nu; nu*alpha^3; alpha^3*mu")
            .params(&[("n", 4)], &[("n", 5)])
            .min(&[("n", 4)])
            .fin(12, 5, 5),
        e(
            "Gamma17",
            Gamma,
            Q_FULL,
            "alpha^m; beta^n; nu*mu; beta*nu; mu*beta; nu*alpha^2; alpha^2*mu; (nu*alpha*mu)^r",
        )
        .params(&[("m", 2), ("n", 2), ("r", 1)], &[("m", 3), ("n", 2), ("r", 2)])
        .min(&[("m", 2), ("n", 2), ("r", 1)])
        .fin(8, 3, 3),
        e(
            "Gamma18",
            Gamma,
            Q_FULL,
            "alpha^m; beta^n; nu*mu; beta*nu; nu*alpha; alpha^2*mu; mu*beta^2; alpha*mu*beta",
        )
        .params(&[("m", 2), ("n", 2)], &[("m", 3), ("n", 4)])
        .min(&[("m", 2), ("n", 2)])
        .fin(8, 2, 4),
        e("Gamma19", Gamma, Q_FULL, "alpha^2 - mu*nu; beta^2 - nu*mu; alpha*mu*beta; beta*nu*alpha").fin(10, 4, 4),
        e("Gamma20", Gamma, Q_FULL, "alpha*mu - mu*beta; beta*nu - nu*alpha; alpha^m; beta^n; (nu*mu)^r")
            .params(&[("m", 2), ("n", 2), ("r", 1)], &[("m", 3), ("n", 3), ("r", 2)])
            .min(&[("m", 2), ("n", 2), ("r", 1)])
            .fin(6, 2, 2),
    ];

    // Table T
    let mut t1 = e("T1", T, Q_DOUBLE, "");
    t1.source = Source::T1;
    t1 = t1.params(
        &[("k1", 1), ("k2", 0), ("k3", 0), ("k4", 1), ("l1", 0), ("l2", 1), ("l3", 1), ("l4", 0)],
        &[("k1", 1), ("k2", 1), ("k3", 0), ("k4", 1), ("l1", 1), ("l2", 0), ("l3", 1), ("l4", 1)],
    );
    v.push(t1);
    v.extend([
        e("T2", T, Q_ALPHA_MU, "alpha^6; alpha^2*mu").fin(6, 1, 3),
        e("T3", T, Q_ALPHA_MU_BETA, "alpha^2; beta^2"),
        e("T4", T, Q_ALPHA_MU_BETA, "alpha^2; beta^n; mu*beta")
            .params(&[("n", 2)], &[("n", 3)])
            .min(&[("n", 2)])
            .fin(6, 1, 3),
        e("T5", T, Q_ALPHA_MU_BETA, "alpha^m; beta^n; alpha*mu; mu*beta")
            .params(&[("m", 2), ("n", 2)], &[("m", 3), ("n", 4)])
            .min(&[("m", 2), ("n", 2)])
            .fin(5, 1, 2),
        e("T6", T, Q_ALPHA_MU_BETA, "alpha^2; beta^3; alpha*mu - mu*beta^2").fin(6, 1, 3),
        e("T7", T, Q_ALPHA_MU_BETA, "alpha^3; beta^6; alpha*mu - mu*beta").fin(5, 1, 2),
        e("T8", T, Q_ALPHA_MU_BETA, "alpha^4; beta^4; alpha*mu - mu*beta").fin(5, 1, 2),
        e("T9", T, Q_ALPHA_MU_NU, "alpha^2; mu*nu*mu; nu*mu*nu; (nu*alpha*mu)^n")
            .params(&[("n", 1)], &[("n", 2)])
            .min(&[("n", 1)])
            .fin(8, 3, 3),
        e("T10", T, Q_ALPHA_MU_NU, "alpha^3; mu*nu; nu*mu; nu*alpha*mu").fin(12, 5, 5),
        e("T11", T, Q_ALPHA_MU_NU, "alpha^3 - mu*nu; nu*mu; nu*alpha^2; alpha^2*mu").fin(8, 3, 3),
        e("T12", T, Q_ALPHA_MU_NU, "alpha^4 - mu*nu; nu*alpha; alpha^2*mu").fin(7, 2, 3),
        e("T13", T, Q_ALPHA_MU_NU, "alpha^m; nu*alpha; alpha*mu; (mu*nu)^n")
            .params(&[("m", 2), ("n", 1)], &[("m", 3), ("n", 2)])
            .min(&[("m", 2), ("n", 1)])
            .fin(6, 2, 2),
        e("T14", T, Q_ALPHA_MU_NU, "alpha^2 - mu*nu; nu*alpha*mu").fin(8, 3, 3),
        e("T15", T, Q_ALPHA_MU_NU, "alpha^3 - mu*nu; nu*alpha; alpha^2*mu").fin(7, 2, 3),
        e("T16", T, Q_ALPHA_MU_NU, "alpha^3 - mu*nu; nu*alpha; nu*mu").fin(9, 2, 5),
        e("T17", T, Q_FULL, "alpha^2; beta^2; nu*mu; mu*nu"),
        e("T18", T, Q_FULL, "alpha^2; beta^m; nu*mu; mu*beta; beta*nu; (nu*alpha*mu)^n")
            .params(&[("m", 2), ("n", 1)], &[("m", 3), ("n", 2)])
            .min(&[("m", 2), ("n", 1)])
            .fin(8, 3, 3),
        e("T19", T, Q_FULL, "alpha^m; beta^n; (nu*mu)^r; alpha*mu; nu*alpha; mu*beta; beta*nu")
            .params(&[("m", 2), ("n", 2), ("r", 1)], &[("m", 3), ("n", 2), ("r", 2)])
            .min(&[("m", 2), ("n", 2), ("r", 1)])
            .fin(6, 2, 2),
        e("T20", T, Q_FULL, "alpha^2 - mu*nu; beta^2 - nu*mu; beta*nu; alpha*mu - k*mu*beta")
            .params(&[("k", 1)], &[("k", 2)])
            .nonzero(&["k"])
            .fin(7, 2, 3),
        e("T21", T, Q_FULL, "beta^2 - nu*mu; nu*alpha - beta*nu; k1*alpha^2 - mu*nu; alpha*mu - k2*mu*beta")
            .params(&[("k1", 1), ("k2", 2)], &[("k1", 2), ("k2", 3)])
            .nonzero(&["k1", "k2"])
            .fin(6, 2, 2),
    ]);

    // Table W
    v.extend([
        e("W1", W, "vertices 1 2\narrows mu1: 1 -> 2, mu2: 1 -> 2, mu3: 1 -> 2", ""),
        e("W2", W, "vertices 1 2\narrows mu1: 1 -> 2, mu2: 1 -> 2, nu: 2 -> 1", "mu1*nu; mu2*nu"),
        e(
            "W3",
            W,
            Q_DOUBLE,
            "nu2*mu1 - nu1*mu2; mu1*nu1; mu2*nu1; mu1*nu2; mu2*nu2; nu1*mu1",
        ),
        e(
            "W4",
            W,
            "vertices 1 2\narrows alpha1: 1 -> 1, alpha2: 1 -> 1, mu: 1 -> 2",
            "alpha1^2; alpha2^2; alpha1*alpha2; alpha2*alpha1; alpha1*mu; alpha2*mu",
        )
        .fin(5, 1, 2)
        .bricks(3),
        e(
            "W5",
            W,
            "vertices 1 2\narrows alpha: 1 -> 1, mu1: 1 -> 2, mu2: 1 -> 2",
            "alpha^2; alpha*mu1; alpha*mu2",
        ),
        e("W6", W, Q_ALPHA_MU, "alpha^7; alpha^2*mu").fin(6, 1, 3).bricks(4),
        e("W7", W, Q_ALPHA_MU, "alpha^4; alpha^3*mu").fin(8, 1, 5).bricks(6),
        e("W8", W, Q_ALPHA_MU_BETA, "alpha^2; beta^3; alpha*mu").fin(8, 1, 5).bricks(6),
        e("W9", W, Q_ALPHA_MU_BETA, "alpha^3; beta^3; alpha*mu; mu*beta^2").fin(6, 1, 3).bricks(4),
        e("W10", W, Q_ALPHA_MU_BETA, "alpha^2; beta^4; alpha*mu; mu*beta^2").fin(6, 1, 3).bricks(4),
        e("W11", W, Q_ALPHA_MU_BETA, "alpha^2; beta^3; alpha*mu*beta; mu*beta^2").fin(7, 1, 4).bricks(5),
        e("W12", W, Q_ALPHA_MU_BETA, "alpha^4; beta^5; mu*beta^2; alpha*mu - mu*beta").fin(5, 1, 2).bricks(3),
        e("W13", W, Q_ALPHA_MU_BETA, "alpha^3; beta^7; mu*beta^2; alpha*mu - mu*beta").fin(5, 1, 2).bricks(3),
        e("W14", W, Q_ALPHA_MU_NU, "alpha^3; mu*nu; nu*mu; alpha^2*mu").fin(10, 3, 5).bricks(8),
        e("W15", W, Q_ALPHA_MU_NU, "alpha^3; mu*nu; alpha*mu").fin(9, 2, 5).bricks(7),
        e("W16", W, Q_ALPHA_MU_NU, "alpha^3; mu*nu; nu*alpha*mu; nu*alpha^2; alpha^2*mu").fin(8, 3, 3).bricks(6),
        e("W17", W, Q_ALPHA_MU_NU, "alpha^4; mu*nu; nu*mu; alpha*mu; nu*alpha^3").fin(9, 2, 5).bricks(7),
        e("W18", W, Q_ALPHA_MU_NU, "alpha^4; mu*nu; nu*mu; nu*alpha*mu; nu*alpha^2; alpha^2*mu")
            .fin(8, 3, 3)
            .bricks(6),
        e("W19", W, Q_ALPHA_MU_NU, "alpha^5; mu*nu; nu*mu; nu*alpha; alpha^2*mu").fin(7, 2, 3).bricks(5),
        e("W20", W, Q_ALPHA_MU_NU, "alpha^2; nu*alpha; nu*mu*nu; alpha*mu*nu").fin(7, 2, 3).bricks(5),
        e("W21", W, Q_ALPHA_MU_NU, "alpha^2; nu*alpha; mu*nu*mu").fin(7, 2, 3).bricks(5),
        e("W22", W, Q_ALPHA_MU_NU, "alpha^3; nu*mu; nu*alpha; alpha*mu*nu; alpha^2*mu").fin(7, 2, 3).bricks(5),
        e("W23", W, Q_ALPHA_MU_NU, "alpha^2 - mu*nu; alpha^3; alpha^2*mu").fin(8, 3, 3).bricks(6),
        e("W24", W, Q_ALPHA_MU_NU, "alpha^3 - mu*nu; alpha^4; nu*mu; nu*alpha*mu; nu*alpha^2")
            .fin(10, 3, 5)
            .bricks(8),
        e("W25", W, Q_FULL, "alpha^3; beta^2; nu*mu; mu*nu; nu*alpha; mu*beta; beta*nu; alpha^2*mu")
            .fin(7, 2, 3)
            .bricks(5),
        e("W26", W, Q_FULL, "alpha^2; beta^2; nu*mu; alpha*mu; nu*alpha; beta*nu").fin(7, 2, 3).bricks(5),
        e("W27", W, Q_FULL, "alpha^2 - mu*nu; beta^2; nu*mu; alpha*mu; mu*beta; beta*nu*alpha")
            .fin(8, 2, 4)
            .bricks(6),
        e("W28", W, Q_FULL, "alpha^2 - mu*nu; beta^2; nu*mu; alpha*mu; beta*nu").fin(8, 3, 3).bricks(6),
        e("W29", W, Q_FULL, "alpha^2 - mu*nu; beta^2; nu*mu; nu*alpha; mu*beta").fin(8, 3, 3).bricks(6),
        e("W30", W, Q_FULL, "alpha^2 - mu*nu; beta^2; nu*mu; nu*alpha; beta*nu; alpha*mu*beta")
            .fin(8, 2, 4)
            .bricks(6),
        e("W31", W, Q_FULL, "alpha*mu - mu*beta; alpha^2; beta^3; mu*nu; nu*alpha; beta*nu; mu*beta^2")
            .fin(6, 2, 2)
            .bricks(4),
        e(
            "W32",
            W,
            Q_FULL,
            "alpha*mu - mu*beta; alpha^2; beta^2; nu*alpha; beta*nu; mu*nu*mu; nu*mu*nu",
        )
        .fin(6, 2, 2)
        .bricks(4),
        e(
            "W33",
            W,
            Q_FULL,
            "alpha*mu - mu*beta; alpha^3; beta^3; nu*mu; mu*nu; nu*alpha; beta*nu; mu*beta^2; alpha^2*mu",
        )
        .fin(6, 2, 2)
        .bricks(4),
        e("W34", W, Q_FULL, "alpha*mu - mu*beta; alpha^3; beta^2; nu*mu; nu*alpha; beta*nu; alpha^2*mu")
            .fin(6, 2, 2)
            .bricks(4),
    ]);

    // symmetric special biserial, and tame Hecke blocks
    v.extend([
        e("B1", B, Q_MU_NU, "(mu*nu)^n*mu; (nu*mu)^n*nu")
            .params(&[("n", 1)], &[("n", 2)])
            .min(&[("n", 1)])
            .fin(6, 2, 2),
        e(
            "B2",
            B,
            Q_DOUBLE,
            "mu1*nu2; nu2*mu1; mu2*nu1; nu1*mu2; (mu1*nu1)^m - (mu2*nu2)^n; (nu1*mu1)^m - (nu2*mu2)^n",
        )
        .params(&[("m", 1), ("n", 1)], &[("m", 2), ("n", 1)])
        .min(&[("m", 1), ("n", 1)]),
        e(
            "B3",
            B,
            Q_DOUBLE,
            "mu1*nu2; nu1*mu1; mu2*nu1; nu2*mu2; (mu1*nu1*mu2*nu2)^n - (mu2*nu2*mu1*nu1)^n; \
             (nu1*mu2*nu2*mu1)^n - (nu2*mu1*nu1*mu2)^n",
        )
        .params(&[("n", 1)], &[("n", 2)])
        .min(&[("n", 1)]),
        e("B4", B, Q_ALPHA_MU_NU, "alpha*mu; nu*alpha; alpha^m - (mu*nu)^n")
            .params(&[("m", 2), ("n", 1)], &[("m", 3), ("n", 2)])
            .min(&[("m", 2), ("n", 1)])
            .fin(6, 2, 2),
        e("B5", B, Q_ALPHA_MU_NU, "alpha^2; nu*mu; (alpha*mu*nu)^n - (mu*nu*alpha)^n")
            .params(&[("n", 1)], &[("n", 2)])
            .min(&[("n", 1)])
            .fin(8, 3, 3),
        e("B6", B, Q_FULL, "alpha*mu; mu*beta; beta*nu; nu*alpha; alpha^m - (mu*nu)^n; beta^r - (nu*mu)^n")
            .params(&[("m", 2), ("n", 1), ("r", 2)], &[("m", 3), ("n", 2), ("r", 2)])
            .min(&[("m", 2), ("n", 1), ("r", 2)])
            .fin(6, 2, 2),
        e(
            "B7",
            B,
            Q_FULL,
            "alpha^2; nu*mu; mu*beta; beta*nu; (alpha*mu*nu)^n - (mu*nu*alpha)^n; beta^m - (nu*alpha*mu)^n",
        )
        .params(&[("m", 2), ("n", 1)], &[("m", 3), ("n", 2)])
        .min(&[("m", 2), ("n", 1)])
        .fin(8, 3, 3),
        e(
            "B8",
            B,
            Q_FULL,
            "alpha^2; beta^2; mu*nu; nu*mu; (nu*alpha*mu*beta)^n - (beta*nu*alpha*mu)^n; \
             (alpha*mu*beta*nu)^n - (mu*beta*nu*alpha)^n",
        )
        .params(&[("n", 1)], &[("n", 2)])
        .min(&[("n", 1)]),
        e("D1", D, "vertices 1\narrows alpha: 1 -> 1, beta: 1 -> 1", "alpha^2; beta^2; alpha*beta - beta*alpha")
            .fin(2, 0, 0),
        e("D2", D, Q_ALPHA_MU_NU, "alpha*mu; nu*alpha; alpha^2 - (mu*nu)^2").fin(6, 2, 2),
        e("D3", D, Q_FULL, "alpha*mu; mu*beta; beta*nu; nu*alpha; alpha^2 - mu*nu; beta^2 - nu*mu").fin(6, 2, 2),
        e(
            "D4",
            D,
            Q_FULL,
            "alpha*mu; mu*beta; beta*nu; nu*alpha; alpha^2 - (mu*nu)^2; beta^2 - (nu*mu)^2",
        )
        .fin(6, 2, 2),
    ]);
    v.extend((1..=5).map(brauer_entry));

    // reduced forms that appear as intermediate targets
    v.extend([
        e("Gamma3hat", Extra, Q_MU_BETA, "beta^4; mu*beta^3").fin(8, 1, 5),
        e("Gamma11hat", Extra, Q_ALPHA_MU_NU, "alpha^3; mu*nu; nu*mu; nu*alpha*mu; nu*alpha^2*mu").fin(12, 5, 5),
        e("Gamma20hat", Extra, Q_MU_NU, "mu*nu; nu*mu").fin(6, 2, 2),
    ]);
    v
}

/// Look up an entry by name; `BrauerN` works for any N >= 1.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    if let Some(e) = entries().into_iter().find(|e| e.name == name) {
        return Ok(e);
    }
    if let Some(n) = name.strip_prefix("Brauer").and_then(|s| s.parse::<usize>().ok()) {
        if n >= 1 {
            return Ok(brauer_entry(n));
        }
    }
    Err(Error::UnknownName(name.to_string()))
}

/// Build the named algebra with the given parameter overrides.
pub fn get(name: &str, overrides: &Params, bounds: Bounds) -> Result<(Algebra, CatalogEntry)> {
    let e = lookup(name)?;
    let a = e.build(overrides, bounds)?;
    Ok((a, e))
}

pub fn list() -> Vec<(Table, Vec<String>)> {
    let all = entries();
    Table::ALL
        .iter()
        .map(|t| (*t, all.iter().filter(|e| e.table == *t).map(|e| e.name.clone()).collect()))
        .collect()
}

pub fn table_entries(t: Table) -> Vec<CatalogEntry> {
    entries().into_iter().filter(|e| e.table == t).collect()
}
