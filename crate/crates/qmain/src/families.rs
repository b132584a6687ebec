//! Generators for the named graphs used throughout the crate, and
//! recognition of the pendant-free skeleton of a bicyclic graph.
//!
//! A bicyclic graph with minimum degree 2 is one of three shapes:
//! two cycles sharing a vertex (F1), two disjoint cycles joined by a path
//! (F2), or three internally disjoint paths between two branch vertices
//! (F3, the theta graph).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{cycle_rank, degree2_chains, is_connected, min_degree, Graph};

/// The pendant-free skeleton of a bicyclic graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseShape {
    /// Two cycles of lengths `p <= q` sharing exactly one vertex.
    F1 { p: usize, q: usize },
    /// Disjoint cycles of lengths `p <= q` joined by a path of length `t`.
    F2 { p: usize, q: usize, t: usize },
    /// Theta graph: three internally disjoint paths of lengths
    /// `p >= q >= r` between two branch vertices.
    F3 { p: usize, q: usize, r: usize },
}

impl BaseShape {
    pub fn validate(&self) -> Result<()> {
        match *self {
            BaseShape::F1 { p, q } => {
                if p < 3 || q < 3 || p > q {
                    return Err(Error::BadParameters(format!(
                        "F1 needs cycle lengths 3 <= p <= q, got ({p},{q})"
                    )));
                }
            }
            BaseShape::F2 { p, q, t } => {
                if p < 3 || q < 3 || p > q || t < 1 {
                    return Err(Error::BadParameters(format!(
                        "F2 needs cycle lengths 3 <= p <= q and path length t >= 1, got ({p},{q},{t})"
                    )));
                }
            }
            BaseShape::F3 { p, q, r } => {
                if r < 1 || q < 2 || q < r || p < q {
                    return Err(Error::BadParameters(format!(
                        "F3 needs path lengths p >= q >= r >= 1 with q >= 2, got ({p},{q},{r})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            BaseShape::F1 { p, q } => p + q - 1,
            BaseShape::F2 { p, q, t } => p + q + t - 1,
            BaseShape::F3 { p, q, r } => p + q + r - 1,
        }
    }

    /// Builds the base graph. Vertex 0 is the shared vertex for F1 and a
    /// branch vertex for F2/F3.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let mut edges = Vec::new();
        match *self {
            BaseShape::F1 { p, q } => {
                let c1: Vec<usize> = std::iter::once(0).chain(1..p).collect();
                let c2: Vec<usize> = std::iter::once(0).chain(p..p + q - 1).collect();
                for cyc in [c1, c2] {
                    for w in cyc.windows(2) {
                        edges.push((w[0], w[1]));
                    }
                    edges.push((cyc[cyc.len() - 1], cyc[0]));
                }
            }
            BaseShape::F2 { p, q, t } => {
                let u = 0;
                let v = p;
                let c1: Vec<usize> = std::iter::once(u).chain(1..p).collect();
                let c2: Vec<usize> = std::iter::once(v).chain(p + 1..p + q).collect();
                for cyc in [c1, c2] {
                    for w in cyc.windows(2) {
                        edges.push((w[0], w[1]));
                    }
                    edges.push((cyc[cyc.len() - 1], cyc[0]));
                }
                let path: Vec<usize> = std::iter::once(u)
                    .chain(p + q..p + q + t - 1)
                    .chain(std::iter::once(v))
                    .collect();
                for w in path.windows(2) {
                    edges.push((w[0], w[1]));
                }
            }
            BaseShape::F3 { p, q, r } => {
                let (u, v) = (0, 1);
                let mut next = 2;
                for len in [p, q, r] {
                    let path: Vec<usize> = std::iter::once(u)
                        .chain(next..next + len - 1)
                        .chain(std::iter::once(v))
                        .collect();
                    next += len - 1;
                    for w in path.windows(2) {
                        edges.push((w[0], w[1]));
                    }
                }
            }
        }
        Graph::from_edges(self.vertex_count(), &edges)
    }
}

impl fmt::Display for BaseShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BaseShape::F1 { p, q } => write!(f, "F1({p},{q})"),
            BaseShape::F2 { p, q, t } => write!(f, "F2({p},{q},{t})"),
            BaseShape::F3 { p, q, r } => write!(f, "F3({p},{q},{r})"),
        }
    }
}

/// A named graph the crate can generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Theta(k,2,2) with one pendant on each internal vertex of the
    /// length-k path; needs k >= 2.
    H {
        k: usize,
    },
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
    Theta {
        p: usize,
        q: usize,
        r: usize,
    },
    F1 {
        p: usize,
        q: usize,
    },
    F2 {
        p: usize,
        q: usize,
        t: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Star {
        n: usize,
    },
    Complete {
        n: usize,
    },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::H { k } => write!(f, "H({k})"),
            FamilySpec::G1 => write!(f, "G1"),
            FamilySpec::G2 => write!(f, "G2"),
            FamilySpec::G3 => write!(f, "G3"),
            FamilySpec::G4 => write!(f, "G4"),
            FamilySpec::G5 => write!(f, "G5"),
            FamilySpec::G6 => write!(f, "G6"),
            FamilySpec::G7 => write!(f, "G7"),
            FamilySpec::Theta { p, q, r } => write!(f, "theta({p},{q},{r})"),
            FamilySpec::F1 { p, q } => write!(f, "f1({p},{q})"),
            FamilySpec::F2 { p, q, t } => write!(f, "f2({p},{q},{t})"),
            FamilySpec::Cycle { n } => write!(f, "cycle({n})"),
            FamilySpec::Path { n } => write!(f, "path({n})"),
            FamilySpec::Star { n } => write!(f, "star({n})"),
            FamilySpec::Complete { n } => write!(f, "complete({n})"),
        }
    }
}

fn parse_params(text: &str, arity: usize, name: &str) -> Result<Vec<usize>> {
    let vals: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| {
            Error::BadParameters(format!("{name} parameters must be integers: {text:?}"))
        })?;
    if vals.len() != arity {
        return Err(Error::BadParameters(format!(
            "{name} takes {arity} parameter(s), got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts the CLI names: `H:3`, `G1`..`G7`, `theta:3,3,1`, `f1:3,3`,
    /// `f2:3,3,1`, `cycle:5`, `path:4`, `star:4`, `complete:4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.split_once(':') {
            Some((n, a)) => (n.to_ascii_lowercase(), Some(a)),
            None => (s.to_ascii_lowercase(), None),
        };
        let spec = match (name.as_str(), args) {
            ("g1", None) => FamilySpec::G1,
            ("g2", None) => FamilySpec::G2,
            ("g3", None) => FamilySpec::G3,
            ("g4", None) => FamilySpec::G4,
            ("g5", None) => FamilySpec::G5,
            ("g6", None) => FamilySpec::G6,
            ("g7", None) => FamilySpec::G7,
            ("h", Some(a)) => FamilySpec::H {
                k: parse_params(a, 1, "H")?[0],
            },
            ("theta", Some(a)) => {
                let v = parse_params(a, 3, "theta")?;
                FamilySpec::Theta {
                    p: v[0],
                    q: v[1],
                    r: v[2],
                }
            }
            ("f1", Some(a)) => {
                let v = parse_params(a, 2, "f1")?;
                FamilySpec::F1 { p: v[0], q: v[1] }
            }
            ("f2", Some(a)) => {
                let v = parse_params(a, 3, "f2")?;
                FamilySpec::F2 {
                    p: v[0],
                    q: v[1],
                    t: v[2],
                }
            }
            ("cycle", Some(a)) => FamilySpec::Cycle {
                n: parse_params(a, 1, "cycle")?[0],
            },
            ("path", Some(a)) => FamilySpec::Path {
                n: parse_params(a, 1, "path")?[0],
            },
            ("star", Some(a)) => FamilySpec::Star {
                n: parse_params(a, 1, "star")?[0],
            },
            ("complete", Some(a)) => FamilySpec::Complete {
                n: parse_params(a, 1, "complete")?[0],
            },
            _ => return Err(Error::BadParameters(format!("unknown family name: {s:?}"))),
        };
        Ok(spec)
    }
}

/// Builds the named graph. Vertex 0 is a canonical anchor: the shared
/// vertex for F1 and a branch vertex for F2/F3/H.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::G1 => BaseShape::F1 { p: 3, q: 3 }.build(),
        FamilySpec::G2 => BaseShape::F2 { p: 3, q: 3, t: 1 }.build(),
        FamilySpec::G3 => BaseShape::F2 { p: 3, q: 3, t: 3 }.build(),
        FamilySpec::G4 => BaseShape::F3 { p: 2, q: 2, r: 1 }.build(),
        FamilySpec::G5 => BaseShape::F3 { p: 3, q: 3, r: 1 }.build(),
        FamilySpec::G6 => BaseShape::F3 { p: 2, q: 2, r: 2 }.build(),
        FamilySpec::G7 => BaseShape::F3 { p: 3, q: 3, r: 3 }.build(),
        FamilySpec::F1 { p, q } => BaseShape::F1 { p, q }.build(),
        FamilySpec::F2 { p, q, t } => BaseShape::F2 { p, q, t }.build(),
        FamilySpec::Theta { p, q, r } => BaseShape::F3 { p, q, r }.build(),
        FamilySpec::H { k } => {
            if k < 2 {
                return Err(Error::BadParameters(format!("H needs k >= 2, got {k}")));
            }
            let theta = BaseShape::F3 { p: k, q: 2, r: 2 }.build()?;
            // Internal vertices of the length-k path are 2..=k in the
            // theta layout; each receives one pendant.
            let mut edges = theta.edges();
            let mut next = theta.n();
            for internal in 2..=k {
                edges.push((internal, next));
                next += 1;
            }
            Graph::from_edges(next, &edges)
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(Error::BadParameters(format!("cycle needs n >= 3, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Path { n } => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Star { n } => {
            if n < 2 {
                return Err(Error::BadParameters(format!("star needs n >= 2, got {n}")));
            }
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Complete { n } => {
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    edges.push((i, j));
                }
            }
            Graph::from_edges(n, &edges)
        }
    }
}

/// Classifies a pendant-free bicyclic graph as F1, F2 or F3 with exact
/// lengths, by tracing the degree-2 chains between its branch vertices.
pub fn base_shape(core: &Graph) -> Result<BaseShape> {
    if !is_connected(core) {
        return Err(Error::NotABicyclicCore("not connected".into()));
    }
    if cycle_rank(core) != 2 || core.edge_count() != core.n() + 1 {
        return Err(Error::NotABicyclicCore(format!(
            "cycle rank {} (need 2)",
            cycle_rank(core)
        )));
    }
    if min_degree(core) < 2 {
        return Err(Error::NotABicyclicCore("contains pendant vertices".into()));
    }
    let branches: Vec<usize> = (0..core.n()).filter(|&v| core.degree(v) >= 3).collect();
    let chains = degree2_chains(core);
    match branches.as_slice() {
        [w] => {
            debug_assert_eq!(core.degree(*w), 4);
            let mut lens: Vec<usize> = chains
                .iter()
                .filter(|c| c.is_cycle())
                .map(|c| c.len())
                .collect();
            if lens.len() != 2 {
                return Err(Error::NotABicyclicCore(
                    "expected two cycles at the branch".into(),
                ));
            }
            lens.sort_unstable();
            Ok(BaseShape::F1 {
                p: lens[0],
                q: lens[1],
            })
        }
        [x, y] => {
            debug_assert!(core.degree(*x) == 3 && core.degree(*y) == 3);
            let cycles: Vec<&crate::graph::Chain> =
                chains.iter().filter(|c| c.is_cycle()).collect();
            if cycles.is_empty() {
                let mut lens: Vec<usize> = chains.iter().map(|c| c.len()).collect();
                if lens.len() != 3 {
                    return Err(Error::NotABicyclicCore(
                        "expected three branch-to-branch chains".into(),
                    ));
                }
                lens.sort_unstable_by(|a, b| b.cmp(a));
                Ok(BaseShape::F3 {
                    p: lens[0],
                    q: lens[1],
                    r: lens[2],
                })
            } else {
                if cycles.len() != 2 {
                    return Err(Error::NotABicyclicCore("expected two end cycles".into()));
                }
                let path = chains
                    .iter()
                    .find(|c| !c.is_cycle())
                    .ok_or_else(|| Error::NotABicyclicCore("missing joining path".into()))?;
                let mut lens = [cycles[0].len(), cycles[1].len()];
                lens.sort_unstable();
                Ok(BaseShape::F2 {
                    p: lens[0],
                    q: lens[1],
                    t: path.len(),
                })
            }
        }
        _ => Err(Error::NotABicyclicCore(format!(
            "{} branch vertices (need 1 or 2)",
            branches.len()
        ))),
    }
}

/// The named families with their published parabolic parameters; used by
/// `families check-all` and the classification verifier.
pub fn reference_families(max_h: usize) -> Vec<(FamilySpec, (i64, i64))> {
    let mut out = vec![
        (FamilySpec::G1, (7, 4)),
        (FamilySpec::G2, (7, 5)),
        (FamilySpec::G3, (6, 3)),
        (FamilySpec::G4, (6, 2)),
        (FamilySpec::G5, (7, 5)),
        (FamilySpec::G6, (5, 0)),
        (FamilySpec::G7, (6, 3)),
    ];
    for k in 2..=max_h {
        out.push((FamilySpec::H { k }, (6, 2)));
    }
    out
}
