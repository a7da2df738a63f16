//! Small target graphs whose copies are counted.

use crate::count::injective_homs;
use crate::graph::Graph;
use crate::graph6;
use thiserror::Error;

/// Patterns larger than this are rejected: automorphism groups are found by
/// exhaustive matching, which is only sensible for small targets.
pub const MAX_PATTERN_VERTICES: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern has {0} vertices; at most {MAX_PATTERN_VERTICES} are supported")]
    TooLarge(usize),
    #[error("pattern must have at least one vertex")]
    Empty,
    #[error(
        "cannot parse pattern {0:?}: expected star:R, clique:S, kstar:S,T, path:K or g6:<string>"
    )]
    Syntax(String),
    #[error("invalid graph6 payload in pattern: {0}")]
    Graph6(#[from] graph6::Graph6Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternKind {
    /// `S_r = K_{1,r}`.
    Star(usize),
    Clique(usize),
    /// `K*_{s,t}`: complete bipartite with the `s`-side made a clique.
    KStar(usize, usize),
    Path(usize),
    Arbitrary,
}

/// A pattern graph together with its realized [`Graph`] form and cached
/// automorphism count.
#[derive(Debug, Clone)]
pub struct PatternGraph {
    kind: PatternKind,
    graph: Graph,
    automorphisms: u64,
}

impl PatternGraph {
    fn build(kind: PatternKind, graph: Graph) -> Result<PatternGraph, PatternError> {
        if graph.n() == 0 {
            return Err(PatternError::Empty);
        }
        if graph.n() > MAX_PATTERN_VERTICES {
            return Err(PatternError::TooLarge(graph.n()));
        }
        let automorphisms = injective_homs(&graph, &graph);
        Ok(PatternGraph {
            kind,
            graph,
            automorphisms,
        })
    }

    pub fn star(r: usize) -> Result<PatternGraph, PatternError> {
        Self::build(PatternKind::Star(r), Graph::star(r))
    }

    pub fn clique(s: usize) -> Result<PatternGraph, PatternError> {
        Self::build(PatternKind::Clique(s), Graph::complete(s))
    }

    pub fn kstar(s: usize, t: usize) -> Result<PatternGraph, PatternError> {
        Self::build(PatternKind::KStar(s, t), Graph::kstar(s, t))
    }

    pub fn path(k: usize) -> Result<PatternGraph, PatternError> {
        Self::build(PatternKind::Path(k), Graph::path(k))
    }

    pub fn arbitrary(graph: Graph) -> Result<PatternGraph, PatternError> {
        Self::build(PatternKind::Arbitrary, graph)
    }

    /// Parses `star:R | clique:S | kstar:S,T | path:K | g6:<string>`.
    pub fn parse(text: &str) -> Result<PatternGraph, PatternError> {
        let bad = || PatternError::Syntax(text.to_string());
        let (name, arg) = text.split_once(':').ok_or_else(bad)?;
        let int = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        match name.trim() {
            "star" => PatternGraph::star(int(arg)?),
            "clique" => PatternGraph::clique(int(arg)?),
            "path" => PatternGraph::path(int(arg)?),
            "kstar" => {
                let (s, t) = arg.split_once(',').ok_or_else(bad)?;
                PatternGraph::kstar(int(s)?, int(t)?)
            }
            "g6" => PatternGraph::arbitrary(graph6::decode(arg)?),
            _ => Err(bad()),
        }
    }

    pub fn kind(&self) -> &PatternKind {
        &self.kind
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn automorphisms(&self) -> u64 {
        self.automorphisms
    }

    /// The star parameter `r` when this pattern is a star, in whichever
    /// spelling it was given.
    pub fn as_star(&self) -> Option<usize> {
        match self.kind {
            PatternKind::Star(r) => Some(r),
            _ => None,
        }
    }
}

impl serde::Serialize for PatternGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::fmt::Display for PatternGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            PatternKind::Star(r) => write!(f, "star:{r}"),
            PatternKind::Clique(s) => write!(f, "clique:{s}"),
            PatternKind::KStar(s, t) => write!(f, "kstar:{s},{t}"),
            PatternKind::Path(k) => write!(f, "path:{k}"),
            PatternKind::Arbitrary => {
                write!(
                    f,
                    "g6:{}",
                    graph6::encode(&self.graph).expect("patterns are small")
                )
            }
        }
    }
}
