//! Proof trees.
//!
//! Nodes live in an arena indexed by [`NodeId`]. Each node has at most one
//! successor and at most one left/right pair of children. Letter flavors,
//! admissibility, duality and contradiction are all computed from a node's
//! ancestor chain.

mod context;

use std::fmt;

use serde::Serialize;

use crate::rules::Justification;
use crate::syntax::{Content, LetterId, Statement};

pub use context::{Context, FlavorMap, Inadmissible};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NodeId(pub(crate) u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LinkKind {
    Root,
    Successor,
    PairLeft,
    PairRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LetterFlavor {
    Inactive,
    Indefinite,
    Definite,
    Adjective,
}

impl fmt::Display for LetterFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LetterFlavor::Inactive => "inactive",
            LetterFlavor::Indefinite => "indefinite",
            LetterFlavor::Definite => "definite",
            LetterFlavor::Adjective => "adjective",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ProofNode {
    pub id: NodeId,
    pub content: Content,
    pub parent: Option<NodeId>,
    pub link: LinkKind,
    pub justification: Justification,
    /// Script identifier, if the node came from (or is bound to) a script.
    pub label: Option<String>,
    successor: Option<NodeId>,
    pair: Option<(NodeId, NodeId)>,
}

impl ProofNode {
    pub fn successor(&self) -> Option<NodeId> {
        self.successor
    }

    pub fn pair(&self) -> Option<(NodeId, NodeId)> {
        self.pair
    }

    pub fn is_leaf(&self) -> bool {
        self.successor.is_none() && self.pair.is_none()
    }

    pub fn child_count(&self) -> usize {
        self.successor.is_some() as usize + 2 * self.pair.is_some() as usize
    }

    pub fn statement(&self) -> Option<&Statement> {
        self.content.as_statement()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TreeError {
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("tree already has a root")]
    RootExists,
    #[error("node {0} already has a successor")]
    SuccessorExists(NodeId),
    #[error("node {0} already has a pair of children")]
    PairExists(NodeId),
    #[error("pair children may only be added to a leaf; {0} is not a leaf")]
    PairOnNonLeaf(NodeId),
    #[error("pair children must carry statements, not properties")]
    PropertyInPair,
    #[error("node {0} is not a leaf")]
    NotALeaf(NodeId),
    #[error("the root cannot be removed")]
    RemoveRoot,
}

/// One structural mutation for [`ProofTree::attach`].
#[derive(Clone, Debug)]
pub enum Attachment {
    Successor(Content, Justification),
    Pair((Statement, Justification), (Statement, Justification)),
}

#[derive(Clone, Debug, Default)]
pub struct ProofTree {
    nodes: Vec<Option<ProofNode>>,
    root: Option<NodeId>,
}

impl ProofTree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_root(content: impl Into<Content>, justification: Justification) -> (Self, NodeId) {
        let mut t = ProofTree::new();
        let id = t.set_root(content.into(), justification).expect("fresh tree has no root");
        (t, id)
    }

    pub fn set_root(&mut self, content: Content, justification: Justification) -> Result<NodeId, TreeError> {
        if self.root.is_some() {
            return Err(TreeError::RootExists);
        }
        let id = self.push(content, None, LinkKind::Root, justification);
        self.root = Some(id);
        Ok(id)
    }

    fn push(&mut self, content: Content, parent: Option<NodeId>, link: LinkKind, justification: Justification) -> NodeId {
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(Some(ProofNode {
            id,
            content,
            parent,
            link,
            justification,
            label: None,
            successor: None,
            pair: None,
        }));
        id
    }

    pub fn root(&self) -> Option<NodeId> {
        self.root
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// Number of live nodes.
    pub fn len(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_some()).count()
    }

    pub fn get(&self, id: NodeId) -> Result<&ProofNode, TreeError> {
        self.nodes.get(id.index()).and_then(Option::as_ref).ok_or(TreeError::UnknownNode(id))
    }

    fn get_mut(&mut self, id: NodeId) -> Result<&mut ProofNode, TreeError> {
        self.nodes.get_mut(id.index()).and_then(Option::as_mut).ok_or(TreeError::UnknownNode(id))
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.get(id).is_ok()
    }

    pub fn content(&self, id: NodeId) -> Result<&Content, TreeError> {
        Ok(&self.get(id)?.content)
    }

    pub fn statement(&self, id: NodeId) -> Option<&Statement> {
        self.get(id).ok().and_then(|n| n.content.as_statement())
    }

    pub fn set_content(&mut self, id: NodeId, content: Content) -> Result<(), TreeError> {
        self.get_mut(id)?.content = content;
        Ok(())
    }

    pub fn set_justification(&mut self, id: NodeId, j: Justification) -> Result<(), TreeError> {
        self.get_mut(id)?.justification = j;
        Ok(())
    }

    pub fn set_label(&mut self, id: NodeId, label: impl Into<String>) -> Result<(), TreeError> {
        self.get_mut(id)?.label = Some(label.into());
        Ok(())
    }

    /// Script label of a node, or `n<index>` when it has none.
    pub fn label(&self, id: NodeId) -> String {
        match self.get(id) {
            Ok(ProofNode { label: Some(l), .. }) => l.clone(),
            _ => format!("n{}", id.0),
        }
    }

    pub fn find_label(&self, label: &str) -> Option<NodeId> {
        self.iter().find(|n| n.label.as_deref() == Some(label)).map(|n| n.id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ProofNode> {
        self.nodes.iter().filter_map(Option::as_ref)
    }

    pub fn attach(&mut self, parent: NodeId, what: Attachment) -> Result<Vec<NodeId>, TreeError> {
        match what {
            Attachment::Successor(c, j) => Ok(vec![self.attach_successor(parent, c, j)?]),
            Attachment::Pair(l, r) => {
                let (a, b) = self.attach_pair(parent, l, r)?;
                Ok(vec![a, b])
            }
        }
    }

    pub fn attach_successor(
        &mut self,
        parent: NodeId,
        content: impl Into<Content>,
        justification: Justification,
    ) -> Result<NodeId, TreeError> {
        if self.get(parent)?.successor.is_some() {
            return Err(TreeError::SuccessorExists(parent));
        }
        let id = self.push(content.into(), Some(parent), LinkKind::Successor, justification);
        self.get_mut(parent)?.successor = Some(id);
        Ok(id)
    }

    pub fn attach_pair(
        &mut self,
        parent: NodeId,
        left: (Statement, Justification),
        right: (Statement, Justification),
    ) -> Result<(NodeId, NodeId), TreeError> {
        let p = self.get(parent)?;
        if p.pair.is_some() {
            return Err(TreeError::PairExists(parent));
        }
        if !p.is_leaf() {
            return Err(TreeError::PairOnNonLeaf(parent));
        }
        let l = self.push(Content::Statement(left.0), Some(parent), LinkKind::PairLeft, left.1);
        let r = self.push(Content::Statement(right.0), Some(parent), LinkKind::PairRight, right.1);
        self.get_mut(parent)?.pair = Some((l, r));
        Ok((l, r))
    }

    /// Removes a successor leaf. Its id is never reused.
    pub fn remove_leaf(&mut self, id: NodeId) -> Result<(), TreeError> {
        let node = self.get(id)?;
        if !node.is_leaf() {
            return Err(TreeError::NotALeaf(id));
        }
        let parent = node.parent.ok_or(TreeError::RemoveRoot)?;
        match node.link {
            LinkKind::Successor => {
                self.get_mut(parent)?.successor = None;
                self.nodes[id.index()] = None;
            }
            LinkKind::PairLeft | LinkKind::PairRight => {
                let (l, r) = self.get(parent)?.pair.expect("pair child has a pair parent");
                for c in [l, r] {
                    if !self.get(c)?.is_leaf() {
                        return Err(TreeError::NotALeaf(c));
                    }
                }
                if self.get(parent)?.successor.is_some() {
                    return Err(TreeError::NotALeaf(parent));
                }
                self.get_mut(parent)?.pair = None;
                self.nodes[l.index()] = None;
                self.nodes[r.index()] = None;
            }
            LinkKind::Root => return Err(TreeError::RemoveRoot),
        }
        Ok(())
    }

    /// Children in canonical order: pair left, pair right, successor.
    pub fn children(&self, id: NodeId) -> Result<Vec<NodeId>, TreeError> {
        let n = self.get(id)?;
        let mut v = Vec::with_capacity(3);
        if let Some((l, r)) = n.pair {
            v.push(l);
            v.push(r);
        }
        v.extend(n.successor);
        Ok(v)
    }

    /// `[n, parent(n), ..., root]`.
    pub fn ancestors(&self, n: NodeId) -> Result<Vec<NodeId>, TreeError> {
        let mut out = vec![n];
        let mut cur = self.get(n)?.parent;
        while let Some(p) = cur {
            out.push(p);
            cur = self.get(p)?.parent;
        }
        Ok(out)
    }

    pub fn is_ancestor(&self, anc: NodeId, of: NodeId) -> bool {
        let mut cur = Some(of);
        while let Some(c) = cur {
            if c == anc {
                return true;
            }
            cur = self.get(c).ok().and_then(|n| n.parent);
        }
        false
    }

    pub fn depth(&self, n: NodeId) -> Result<usize, TreeError> {
        Ok(self.ancestors(n)?.len() - 1)
    }

    /// The successor chain starting at `n`, inclusive.
    pub fn unconditional_descendants(&self, n: NodeId) -> Result<Vec<NodeId>, TreeError> {
        let mut out = vec![n];
        let mut cur = self.get(n)?.successor;
        while let Some(s) = cur {
            out.push(s);
            cur = self.get(s)?.successor;
        }
        Ok(out)
    }

    /// Pre-order: node, pair-left subtree, pair-right subtree, successor subtree.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let Some(root) = self.root else { return out };
        let mut stack = vec![root];
        while let Some(n) = stack.pop() {
            out.push(n);
            let mut kids = self.children(n).unwrap_or_default();
            kids.reverse();
            stack.extend(kids);
        }
        out
    }

    pub fn leaves(&self) -> Vec<NodeId> {
        self.preorder().into_iter().filter(|&n| self.get(n).map(|x| x.is_leaf()).unwrap_or(false)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.iter().filter(|n| n.parent.is_some()).count()
    }

    pub fn context(&self, n: NodeId) -> Result<Context<'_>, TreeError> {
        Context::new(self, n)
    }

    pub fn flavor(&self, l: &LetterId, n: NodeId) -> Result<LetterFlavor, TreeError> {
        Ok(FlavorMap::at(self, n)?.get(l))
    }

    pub fn is_admissible(&self, c: &Content, n: NodeId) -> Result<Result<(), Inadmissible>, TreeError> {
        Ok(self.context(n)?.admissible(c))
    }

    pub fn are_dual(&self, s1: &Statement, s2: &Statement, n: NodeId) -> Result<bool, TreeError> {
        Ok(self.context(n)?.are_dual(s1, s2))
    }

    /// A pair of ancestors of `n` carrying mutually dual statements, the
    /// higher one first.
    pub fn is_contradictory(&self, n: NodeId) -> Result<Option<(NodeId, NodeId)>, TreeError> {
        Ok(self.context(n)?.contradiction())
    }

    /// True iff some unconditional descendant of `from` carries `goal`.
    pub fn deduces(&self, from: NodeId, goal: &Statement) -> Result<bool, TreeError> {
        Ok(self.unconditional_descendants(from)?.into_iter().any(|d| self.statement(d) == Some(goal)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_content, parse_statement};

    fn s(t: &str) -> Statement {
        parse_statement(t).unwrap()
    }

    fn c(t: &str) -> Content {
        parse_content(t).unwrap()
    }

    /// The sample tree: returns the tree and its nodes in pre-order.
    fn sample() -> (ProofTree, Vec<NodeId>) {
        let j = Justification::Assume;
        let (mut t, root) = ProofTree::with_root(s("a = a"), Justification::RootAxiom);
        let n1 = t.attach_successor(root, s("b != a"), j.clone()).unwrap();
        let n2 = t.attach_successor(n1, s("b = b"), j.clone()).unwrap();
        let (l, r) = t.attach_pair(n2, (s("a != b"), j.clone()), (s("a = b"), j.clone())).unwrap();
        let r1 = t.attach_successor(r, s("b != b"), j.clone()).unwrap();
        let r2 = t.attach_successor(r1, s("a != b"), j.clone()).unwrap();
        let m = t.attach_successor(n2, s("a != b"), j.clone()).unwrap();
        let cb = t.attach_successor(m, s("c = b"), j.clone()).unwrap();
        let (bl, br) = t.attach_pair(cb, (s("b = c"), j.clone()), (s("b != c"), j.clone())).unwrap();
        (t, vec![root, n1, n2, l, r, r1, r2, m, cb, bl, br])
    }

    #[test]
    fn structure_and_ancestry() {
        let (t, ids) = sample();
        assert_eq!(t.len(), 11);
        assert_eq!(t.edge_count(), 10);
        assert_eq!(t.ancestors(ids[0]).unwrap(), vec![ids[0]]);
        let cb = ids[8];
        assert_eq!(t.ancestors(cb).unwrap().len(), 5);
        assert_eq!(t.ancestors(ids[9]).unwrap().len(), t.ancestors(cb).unwrap().len() + 1);
        assert_eq!(t.get(ids[2]).unwrap().child_count(), 3);
        assert_eq!(t.unconditional_descendants(ids[10]).unwrap(), vec![ids[10]]);
        assert_eq!(t.unconditional_descendants(ids[4]).unwrap(), vec![ids[4], ids[5], ids[6]]);
        // pre-order: pair-left, pair-right, successor
        let pre = t.preorder();
        assert_eq!(pre[..5], [ids[0], ids[1], ids[2], ids[3], ids[4]]);
        assert_eq!(t.leaves().len(), 4);
    }

    #[test]
    fn attach_errors() {
        let (mut t, root) = ProofTree::with_root(s("a = a"), Justification::RootAxiom);
        let j = Justification::Assume;
        t.attach_successor(root, s("a = a"), j.clone()).unwrap();
        assert_eq!(t.get(root).unwrap().child_count(), 1);
        assert_eq!(t.attach_successor(root, s("a = a"), j.clone()), Err(TreeError::SuccessorExists(root)));
        assert_eq!(
            t.attach_pair(root, (s("a = a"), j.clone()), (s("a != a"), j.clone())),
            Err(TreeError::PairOnNonLeaf(root))
        );
        let (mut t, root) = ProofTree::with_root(s("a = a"), Justification::RootAxiom);
        t.attach_pair(root, (s("a = a"), j.clone()), (s("a != a"), j.clone())).unwrap();
        assert_eq!(
            t.attach_pair(root, (s("a = a"), j.clone()), (s("a != a"), j.clone())),
            Err(TreeError::PairExists(root))
        );
        t.attach_successor(root, s("a = a"), j).unwrap();
        assert_eq!(t.get(root).unwrap().child_count(), 3);
        assert!(matches!(t.get(NodeId(99)), Err(TreeError::UnknownNode(_))));
    }

    #[test]
    fn remove_leaf_never_reuses_ids() {
        let (mut t, root) = ProofTree::with_root(s("a = a"), Justification::RootAxiom);
        let a = t.attach_successor(root, s("a = a"), Justification::Assume).unwrap();
        t.remove_leaf(a).unwrap();
        assert!(!t.contains(a));
        let b = t.attach_successor(root, s("a = a"), Justification::Assume).unwrap();
        assert_ne!(a, b);
        assert_eq!(t.remove_leaf(root), Err(TreeError::NotALeaf(root)));
    }

    #[test]
    fn flavors_in_sample_tree() {
        let (t, ids) = sample();
        let n1 = ids[1];
        assert_eq!(t.flavor(&"a".into(), n1).unwrap(), LetterFlavor::Definite);
        assert_eq!(t.flavor(&"b".into(), n1).unwrap(), LetterFlavor::Definite);
        assert_eq!(t.flavor(&"c".into(), n1).unwrap(), LetterFlavor::Inactive);
    }

    #[test]
    fn indefinite_and_adjective_flavors() {
        let (mut t, root) = ProofTree::with_root(s("a = a"), Justification::RootAxiom);
        let q = t.attach_successor(root, s("< xi = xi > [ eta = eta ] xi != eta"), Justification::Assume).unwrap();
        assert_eq!(t.flavor(&"xi".into(), q).unwrap(), LetterFlavor::Indefinite);
        let p = t.attach_successor(q, c("A xi eta : xi = eta"), Justification::Assume).unwrap();
        let below = t.attach_successor(p, s("a = a"), Justification::Assume).unwrap();
        for n in [p, below] {
            assert_eq!(t.flavor(&"A".into(), n).unwrap(), LetterFlavor::Adjective);
        }
        assert_eq!(t.flavor(&"A".into(), q).unwrap(), LetterFlavor::Inactive);
    }

    #[test]
    fn duality_and_contradiction() {
        let (mut t, root) = ProofTree::with_root(s("x = x"), Justification::RootAxiom);
        assert!(t.are_dual(&s("x ( x ) = x"), &s("x ( x ) != x"), root).unwrap());
        assert!(t
            .are_dual(&s("< xi = xi > [ eta = eta ] xi != eta"), &s("[ xi = xi ] < eta = eta > xi = eta"), root)
            .unwrap());
        assert!(!t.are_dual(&s("[ xi = xi ] xi = xi"), &s("< eta = eta > xi != xi"), root).unwrap());
        assert!(!t.are_dual(&s("A"), &s("B"), root).unwrap());
        assert_eq!(t.is_contradictory(root).unwrap(), None);

        let pa = t.attach_successor(root, c("A : x = y"), Justification::Assume).unwrap();
        let pb = t.attach_successor(pa, c("B : x != y"), Justification::Assume).unwrap();
        assert!(t.are_dual(&s("A"), &s("B"), pb).unwrap());
        assert!(!t.are_dual(&s("A"), &s("B"), pa).unwrap());

        let y = t.attach_successor(pb, s("y != x"), Justification::Assume).unwrap();
        let z = t.attach_successor(y, s("y = x"), Justification::Assume).unwrap();
        assert_eq!(t.is_contradictory(z).unwrap(), Some((y, z)));
        let w = t.attach_successor(z, s("x = x"), Justification::Assume).unwrap();
        assert!(t.is_contradictory(w).unwrap().is_some());
    }

    #[test]
    fn admissibility_examples() {
        let (mut t, root) = ProofTree::with_root(s("a = a"), Justification::RootAxiom);
        let b = t.attach_successor(root, s("b != a"), Justification::Assume).unwrap();
        assert!(t.is_admissible(&c("a = b"), b).unwrap().is_ok());
        assert!(t.is_admissible(&c("x = c"), b).unwrap().is_err());
        // the branch statement at the root: both quantified letters inactive
        assert!(t.is_admissible(&c("< xi = xi > [ eta = eta ] xi != eta"), root).unwrap().is_ok());
        assert!(t.is_admissible(&c("[ xi = xi ] xi = xi"), root).unwrap().is_ok());
        // two unbound letters in one hypothesis
        assert!(t.is_admissible(&c("< xi = eta > xi = xi"), root).unwrap().is_err());

        let f = t.attach_successor(b, s("f = f"), Justification::Assume).unwrap();
        let g = t.attach_successor(f, s("g = g"), Justification::Assume).unwrap();
        assert!(t
            .is_admissible(&c("< f ( xi ) != g ( xi ) > [ f ( xi ) = f ] g ( xi ) = g"), g)
            .unwrap()
            .is_ok());
    }

    #[test]
    fn property_admissibility() {
        let (mut t, root) = ProofTree::with_root(s("f = f"), Justification::RootAxiom);
        assert!(t.is_admissible(&c("A xi eta : xi = eta"), root).unwrap().is_ok());
        // head already definite
        assert!(t.is_admissible(&c("f xi : xi = xi"), root).unwrap().is_err());
        // head appears twice
        assert!(t.is_admissible(&c("A xi : A = xi"), root).unwrap().is_err());
        // argument letter definite / functional / repeated / unused
        assert!(t.is_admissible(&c("A f : f = f"), root).unwrap().is_err());
        assert!(t.is_admissible(&c("A f ( xi ) : xi = xi"), root).unwrap().is_err());
        assert!(t.is_admissible(&c("A xi xi : xi = xi"), root).unwrap().is_err());
        assert!(t.is_admissible(&c("A xi eta : xi = xi"), root).unwrap().is_err());
        // defining statement with a stray inactive letter
        assert!(t.is_admissible(&c("A xi : xi = z"), root).unwrap().is_err());

        let p = t.attach_successor(root, c("A xi eta : xi = eta"), Justification::Assume).unwrap();
        assert!(t.is_admissible(&c("A xi f ( xi ) : xi = f ( xi )"), p).unwrap().is_ok());
        assert!(t.is_admissible(&c("A xi f ( xi ) : xi != f ( xi )"), p).unwrap().is_err());
        assert!(t.is_admissible(&c("A xi eta : xi = eta"), p).unwrap().is_ok());
        // abbreviation statements need the adjective head and definite arguments
        assert!(t.is_admissible(&c("A f f"), p).unwrap().is_ok());
        assert!(t.is_admissible(&c("A f z"), p).unwrap().is_err());
        assert!(t.is_admissible(&c("B f f"), p).unwrap().is_err());
    }

    #[test]
    fn admissibility_is_stable_downward() {
        let (mut t, root) = ProofTree::with_root(s("a = a"), Justification::RootAxiom);
        let stmts = ["a = a", "< xi = xi > xi = a", "[ xi = xi ] < eta = eta > xi = eta"];
        let mut cur = root;
        for extra in ["b != a", "c = b", "b = b"] {
            let next = t.attach_successor(cur, s(extra), Justification::Assume).unwrap();
            for st in stmts {
                if t.is_admissible(&c(st), cur).unwrap().is_ok() {
                    assert!(t.is_admissible(&c(st), next).unwrap().is_ok(), "{st}");
                }
            }
            cur = next;
        }
    }
}
