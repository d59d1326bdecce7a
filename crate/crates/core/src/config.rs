//! Weighted dual graphs of prime divisors and divisors supported on them.

use crate::linalg::SymmetricMatrix;
use crate::rational::{one, Rational};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

pub type NodeId = usize;
pub type NodeSet = BTreeSet<NodeId>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("gram matrix has dimension {gram} but there are {nodes} curves")]
    SizeMismatch { nodes: usize, gram: usize },
    #[error("curves {a:?} and {b:?} have negative intersection number {value}")]
    NegativeIntersection { a: String, b: String, value: String },
    #[error("duplicate curve name {0:?}")]
    DuplicateName(String),
    #[error("unknown curve id {0}")]
    UnknownNode(NodeId),
    #[error("unknown curve name {0:?}")]
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveNode {
    pub id: NodeId,
    pub name: String,
    /// Geometric genus of the normalization.
    pub genus: u32,
    pub proper: bool,
}

/// Prime divisors together with their intersection matrix `[D_i · D_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    nodes: Vec<CurveNode>,
    gram: SymmetricMatrix,
}

/// A sub-configuration plus the ambient id of each of its nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub config: Configuration,
    /// `ambient_ids[new_id]` is the id of that node in the ambient configuration.
    pub ambient_ids: Vec<NodeId>,
}

impl Restriction {
    pub fn to_ambient(&self, d: &Divisor) -> Divisor {
        Divisor::from_terms(d.terms().map(|(i, c)| (self.ambient_ids[i], c.clone())))
    }

    pub fn from_ambient(&self, d: &Divisor) -> Divisor {
        Divisor::from_terms(
            d.terms().filter_map(|(i, c)| self.ambient_ids.iter().position(|&a| a == i).map(|new| (new, c.clone()))),
        )
    }
}

impl Configuration {
    /// `names` supply `(name, genus, proper)`; ids are assigned in order.
    pub fn new(nodes: Vec<(String, u32, bool)>, gram: SymmetricMatrix) -> Result<Self, ConfigError> {
        let nodes: Vec<CurveNode> = nodes
            .into_iter()
            .enumerate()
            .map(|(id, (name, genus, proper))| CurveNode { id, name, genus, proper })
            .collect();
        Self::from_nodes(nodes, gram)
    }

    fn from_nodes(nodes: Vec<CurveNode>, gram: SymmetricMatrix) -> Result<Self, ConfigError> {
        if nodes.len() != gram.dim() {
            return Err(ConfigError::SizeMismatch { nodes: nodes.len(), gram: gram.dim() });
        }
        let mut seen = BTreeSet::new();
        for n in &nodes {
            if !seen.insert(n.name.as_str()) {
                return Err(ConfigError::DuplicateName(n.name.clone()));
            }
        }
        for i in 0..nodes.len() {
            for j in (i + 1)..nodes.len() {
                if gram.get(i, j).is_negative() {
                    return Err(ConfigError::NegativeIntersection {
                        a: nodes[i].name.clone(),
                        b: nodes[j].name.clone(),
                        value: crate::rational::format_rational(gram.get(i, j)),
                    });
                }
            }
        }
        Ok(Configuration { nodes, gram })
    }

    pub fn empty() -> Self {
        Configuration { nodes: Vec::new(), gram: SymmetricMatrix::zeros(0) }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[CurveNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> Result<&CurveNode, ConfigError> {
        self.nodes.get(id).ok_or(ConfigError::UnknownNode(id))
    }

    pub fn gram(&self) -> &SymmetricMatrix {
        &self.gram
    }

    pub fn all_nodes(&self) -> NodeSet {
        (0..self.len()).collect()
    }

    pub fn id_of(&self, name: &str) -> Result<NodeId, ConfigError> {
        self.nodes.iter().position(|n| n.name == name).ok_or_else(|| ConfigError::UnknownName(name.to_string()))
    }

    pub fn ids_of<S: AsRef<str>>(&self, names: &[S]) -> Result<NodeSet, ConfigError> {
        names.iter().map(|n| self.id_of(n.as_ref())).collect()
    }

    pub fn names_of<'a>(&self, ids: impl IntoIterator<Item = &'a NodeId>) -> Vec<String> {
        ids.into_iter().map(|&i| self.nodes[i].name.clone()).collect()
    }

    pub fn check_subset(&self, subset: &NodeSet) -> Result<(), ConfigError> {
        match subset.iter().find(|&&i| i >= self.len()) {
            Some(&bad) => Err(ConfigError::UnknownNode(bad)),
            None => Ok(()),
        }
    }

    pub fn adjacent(&self, i: NodeId, j: NodeId) -> bool {
        i != j && self.gram.get(i, j).is_positive()
    }

    /// True when no node of `a` equals or meets a node of `b`.
    pub fn disjoint(&self, a: &NodeSet, b: &NodeSet) -> bool {
        a.is_disjoint(b) && a.iter().all(|&i| b.iter().all(|&j| !self.adjacent(i, j)))
    }

    /// Connected components of `subset` under adjacency `gram[i][j] > 0`,
    /// each sorted, ordered by least member.
    pub fn connected_components(&self, subset: &NodeSet) -> Result<Vec<NodeSet>, ConfigError> {
        self.check_subset(subset)?;
        let mut remaining = subset.clone();
        let mut components = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            remaining.remove(&start);
            let mut component = NodeSet::from([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let next: Vec<NodeId> = remaining.iter().copied().filter(|&w| self.adjacent(v, w)).collect();
                for w in next {
                    remaining.remove(&w);
                    component.insert(w);
                    stack.push(w);
                }
            }
            components.push(component);
        }
        Ok(components)
    }

    pub fn is_connected(&self, subset: &NodeSet) -> Result<bool, ConfigError> {
        Ok(self.connected_components(subset)?.len() == 1)
    }

    /// Bilinear extension of the gram pairing.
    pub fn intersection_number(&self, d: &Divisor, e: &Divisor) -> Result<Rational, ConfigError> {
        self.check_subset(&d.support())?;
        self.check_subset(&e.support())?;
        let mut total = Rational::zero();
        for (i, a) in d.terms() {
            for (j, b) in e.terms() {
                total += a * b * self.gram.get(i, j);
            }
        }
        Ok(total)
    }

    /// Gram matrix of the nodes in `subset`, in increasing id order.
    pub fn subset_gram(&self, subset: &NodeSet) -> Result<SymmetricMatrix, ConfigError> {
        self.check_subset(subset)?;
        let ids: Vec<NodeId> = subset.iter().copied().collect();
        Ok(self.gram.principal(&ids))
    }

    /// Induced sub-configuration with ids renumbered in increasing ambient order.
    pub fn restrict(&self, subset: &NodeSet) -> Result<Restriction, ConfigError> {
        self.check_subset(subset)?;
        let ambient_ids: Vec<NodeId> = subset.iter().copied().collect();
        let gram = self.gram.principal(&ambient_ids);
        let nodes = ambient_ids
            .iter()
            .enumerate()
            .map(|(new, &old)| CurveNode { id: new, ..self.nodes[old].clone() })
            .collect();
        Ok(Restriction { config: Configuration { nodes, gram }, ambient_ids })
    }
}

/// Formal rational combination of configuration curves; absent ids have coefficient 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Divisor {
    coefficients: BTreeMap<NodeId, Rational>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (NodeId, Rational)>) -> Self {
        let mut d = Divisor::zero();
        for (i, c) in terms {
            d.add_term(i, c);
        }
        d
    }

    pub fn prime(id: NodeId) -> Self {
        Divisor::from_terms([(id, one())])
    }

    /// Coefficient 1 on every node of `subset`.
    pub fn reduced(subset: &NodeSet) -> Self {
        Divisor::from_terms(subset.iter().map(|&i| (i, one())))
    }

    pub fn add_term(&mut self, id: NodeId, c: Rational) {
        let entry = self.coefficients.entry(id).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.remove(&id);
        }
    }

    pub fn coefficient(&self, id: NodeId) -> Rational {
        self.coefficients.get(&id).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (NodeId, &Rational)> {
        self.coefficients.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> NodeSet {
        self.coefficients.keys().copied().collect()
    }

    pub fn is_effective(&self) -> bool {
        self.coefficients.values().all(|c| !c.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn scaled(&self, factor: &Rational) -> Divisor {
        Divisor::from_terms(self.terms().map(|(i, c)| (i, c * factor)))
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        out
    }
}
