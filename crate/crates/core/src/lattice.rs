//! Hasse diagrams of finite preradical lattices, lattice-law checks, and
//! DOT/JSON rendering.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::InducedGalois;
use crate::labels::{a2_name, display_label};
use crate::preradical::{join, meet, Preradical};
use crate::report::Report;

#[derive(Debug, Clone)]
pub struct Hasse {
    nodes: Vec<Preradical>,
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    idempotent: Vec<bool>,
    radical: Vec<bool>,
    labels: Vec<String>,
    symbols: Vec<Option<&'static str>>,
    /// Whether the node set is closed under the vertexwise join and meet.
    closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    pub nodes: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    pub idempotent: Vec<usize>,
    pub radical: Vec<usize>,
}

/// Poset of distinct preradicals of one category, closed under join and meet.
pub fn build_poset(prs: &[Preradical]) -> Result<Hasse> {
    let Some(first) = prs.first() else {
        return Err(Error::Poset("no elements".into()));
    };
    let cat = first.category().clone();
    let mut index = HashMap::with_capacity(prs.len());
    for (i, p) in prs.iter().enumerate() {
        if p.category() != &cat {
            return Err(Error::Poset(format!("element {i} belongs to another category")));
        }
        if let Some(j) = index.insert(p.clone(), i) {
            return Err(Error::Poset(format!("elements {j} and {i} coincide")));
        }
    }
    for i in 0..prs.len() {
        for j in i + 1..prs.len() {
            let pair = [prs[i].clone(), prs[j].clone()];
            if !index.contains_key(&join(&cat, &pair)?) {
                return Err(Error::Closure { op: "join", left: i, right: j });
            }
            if !index.contains_key(&meet(&cat, &pair)?) {
                return Err(Error::Closure { op: "meet", left: i, right: j });
            }
        }
    }
    let mut h = Hasse::from_nodes(prs.to_vec())?;
    h.closed = true;
    Ok(h)
}

/// Covers of a partial order given as a reflexive relation matrix.
pub fn transitive_reduction(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = leq.len();
    let lt = |a: usize, b: usize| a != b && leq[a][b];
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                covers.push((i, j));
            }
        }
    }
    covers
}

impl Hasse {
    fn from_nodes(nodes: Vec<Preradical>) -> Result<Hasse> {
        let leq = nodes.iter().map(|a| nodes.iter().map(|b| a.leq(b)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        let covers = transitive_reduction(&leq);
        Ok(Hasse {
            idempotent: nodes.iter().map(Preradical::is_idempotent).collect(),
            radical: nodes.iter().map(Preradical::is_radical).collect(),
            labels: nodes.iter().map(display_label).collect(),
            symbols: nodes.iter().map(|p| a2_name(p).map(|(_, s)| s)).collect(),
            nodes,
            leq,
            covers,
            closed: false,
        })
    }

    /// The induced subposet on `keep`, with its own covers. Not checked for closure.
    pub fn subposet(&self, keep: &[usize]) -> Hasse {
        let leq: Vec<Vec<bool>> = keep.iter().map(|&a| keep.iter().map(|&b| self.leq[a][b]).collect()).collect();
        let covers = transitive_reduction(&leq);
        Hasse {
            nodes: keep.iter().map(|&i| self.nodes[i].clone()).collect(),
            idempotent: keep.iter().map(|&i| self.idempotent[i]).collect(),
            radical: keep.iter().map(|&i| self.radical[i]).collect(),
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            symbols: keep.iter().map(|&i| self.symbols[i]).collect(),
            leq,
            covers,
            closed: false,
        }
    }

    pub fn idempotent_part(&self) -> Hasse {
        self.subposet(&(0..self.len()).filter(|&i| self.idempotent[i]).collect::<Vec<_>>())
    }

    pub fn radical_part(&self) -> Hasse {
        self.subposet(&(0..self.len()).filter(|&i| self.radical[i]).collect::<Vec<_>>())
    }

    /// Replaces the cover list without recomputing anything; for exercising
    /// [`verify_lattice_laws`] on damaged diagrams.
    pub fn with_covers(mut self, covers: Vec<(usize, usize)>) -> Hasse {
        self.covers = covers;
        self
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Preradical] {
        &self.nodes
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.idempotent[i]
    }

    pub fn is_radical(&self, i: usize) -> bool {
        self.radical[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn symbol(&self, i: usize) -> Option<&'static str> {
        self.symbols[i]
    }

    pub fn index_of(&self, pr: &Preradical) -> Option<usize> {
        self.nodes.iter().position(|p| p == pr)
    }

    /// Length of the longest cover chain from a minimal element.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (0..self.len()).filter(|&k| self.leq[k][i]).count());
        let mut h = vec![0usize; self.len()];
        for &j in &order {
            for &(a, b) in &self.covers {
                if b == j {
                    h[j] = h[j].max(h[a] + 1);
                }
            }
        }
        h
    }

    /// Least upper bound in this poset, if it exists.
    pub fn lub(&self, i: usize, j: usize) -> Option<usize> {
        let ub: Vec<usize> = (0..self.len()).filter(|&k| self.leq[i][k] && self.leq[j][k]).collect();
        ub.iter().copied().find(|&u| ub.iter().all(|&k| self.leq[u][k]))
    }

    /// Greatest lower bound in this poset, if it exists.
    pub fn glb(&self, i: usize, j: usize) -> Option<usize> {
        let lb: Vec<usize> = (0..self.len()).filter(|&k| self.leq[k][i] && self.leq[k][j]).collect();
        lb.iter().copied().find(|&l| lb.iter().all(|&k| self.leq[k][l]))
    }

    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            nodes: self.labels.clone(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
            idempotent: (0..self.len()).filter(|&i| self.idempotent[i]).collect(),
            radical: (0..self.len()).filter(|&i| self.radical[i]).collect(),
        }
    }
}

/// Checks that the cover list generates the order and that the order is a
/// lattice with well-behaved operations. With a Galois connection whose
/// source lattice is `h` and target lattice `target`, also checks that `φ`
/// preserves joins and `ψ` preserves meets.
pub fn verify_lattice_laws(h: &Hasse, galois: Option<(&InducedGalois, &Hasse)>) -> Result<Report> {
    let n = h.len();
    let mut report = Report::default();

    let reflexive: Vec<String> = h.covers.iter().filter(|(a, b)| a == b).map(|(a, _)| format!("{a}⋖{a}")).collect();
    report.push("covers are irreflexive", reflexive);

    let closure = reflexive_transitive_closure(n, &h.covers);
    let mut mismatch = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if closure[i][j] != h.leq[i][j] {
                mismatch.push(format!("({i},{j}): covers say {}, order says {}", closure[i][j], h.leq[i][j]));
            }
        }
    }
    report.push("covers generate the order", mismatch);

    let mut redundant = Vec::new();
    for (c, &(a, b)) in h.covers.iter().enumerate() {
        let rest: Vec<(usize, usize)> = h.covers.iter().enumerate().filter(|&(d, _)| d != c).map(|(_, &e)| e).collect();
        if a != b && reflexive_transitive_closure(n, &rest)[a][b] {
            redundant.push(format!("{a}⋖{b}"));
        }
    }
    report.push("covers are irredundant", redundant);

    let mut joins = vec![vec![0usize; n]; n];
    let mut meets = vec![vec![0usize; n]; n];
    let mut missing = Vec::new();
    for i in 0..n {
        for j in 0..n {
            match (h.lub(i, j), h.glb(i, j)) {
                (Some(u), Some(l)) => {
                    joins[i][j] = u;
                    meets[i][j] = l;
                }
                _ => missing.push(format!("({i},{j})")),
            }
        }
    }
    report.push("every pair has a join and a meet", missing.clone());
    if !missing.is_empty() {
        return Ok(report);
    }

    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if joins[i][j] != joins[j][i] || meets[i][j] != meets[j][i] {
                bad.push(format!("({i},{j})"));
            }
        }
    }
    report.push("join and meet are commutative", bad);

    let mut bad = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if joins[joins[i][j]][k] != joins[i][joins[j][k]] || meets[meets[i][j]][k] != meets[i][meets[j][k]] {
                    bad.push(format!("({i},{j},{k})"));
                }
            }
        }
    }
    report.push("join and meet are associative", bad);

    let mut bad = Vec::new();
    for i in 0..n {
        if joins[i][i] != i || meets[i][i] != i {
            bad.push(format!("{i}"));
        }
        for j in 0..n {
            if joins[i][meets[i][j]] != i || meets[i][joins[i][j]] != i {
                bad.push(format!("({i},{j})"));
            }
        }
    }
    report.push("absorption and idempotence", bad);

    if h.closed {
        let cat = h.nodes[0].category();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let pair = [h.nodes[i].clone(), h.nodes[j].clone()];
                if join(cat, &pair)? != h.nodes[joins[i][j]] || meet(cat, &pair)? != h.nodes[meets[i][j]] {
                    bad.push(format!("({i},{j})"));
                }
            }
        }
        report.push("order join/meet agree with vertexwise sum/intersection", bad);
    }

    if let Some((g, target)) = galois {
        let phi: Vec<Preradical> = h.nodes.iter().map(|t| g.phi(t)).collect::<Result<_>>()?;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = &phi[joins[i][j]];
                if *lhs != join(g.target(), &[phi[i].clone(), phi[j].clone()])? {
                    bad.push(format!("({i},{j})"));
                }
            }
        }
        report.push("φ preserves joins", bad);
        let m = target.len();
        let psi: Vec<Preradical> = target.nodes.iter().map(|s| g.psi(s)).collect::<Result<_>>()?;
        let mut bad = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let Some(l) = target.glb(i, j) else { continue };
                if psi[l] != meet(g.source(), &[psi[i].clone(), psi[j].clone()])? {
                    bad.push(format!("({i},{j})"));
                }
            }
        }
        report.push("ψ preserves meets", bad);
    }
    Ok(report)
}

fn reflexive_transitive_closure(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in covers {
        if a < n && b < n {
            r[a][b] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// Rendering options; every field has a default, so `{}` is a valid style.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DotStyle {
    pub graph_name: String,
    pub rankdir: String,
    pub node_shape: String,
    pub idempotent_fill: String,
    pub radical_peripheries: u32,
    pub show_tables: bool,
}

impl Default for DotStyle {
    fn default() -> Self {
        DotStyle {
            graph_name: "preradicals".into(),
            rankdir: "BT".into(),
            node_shape: "box".into(),
            idempotent_fill: "#f4cccc".into(),
            radical_peripheries: 2,
            show_tables: true,
        }
    }
}

/// Deterministic DOT digraph: edges point up the order, nodes of equal
/// height share a rank, idempotents are filled and radicals drawn with extra
/// borders.
pub fn to_dot(h: &Hasse, style: &DotStyle) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&style.graph_name)).unwrap();
    writeln!(out, "  rankdir={};", style.rankdir).unwrap();
    writeln!(out, "  node [shape={}, fontname=\"Helvetica\"];", style.node_shape).unwrap();
    writeln!(out, "  edge [arrowhead=none];").unwrap();
    for i in 0..h.len() {
        let label = match (h.symbols[i], style.show_tables) {
            (Some(s), true) => format!("{s}\\n{}", h.labels[i]),
            (Some(s), false) => s.to_string(),
            (None, _) => h.labels[i].clone(),
        };
        let mut attrs = vec![format!("label={}", quote(&label))];
        if h.idempotent[i] {
            attrs.push("style=filled".into());
            attrs.push(format!("fillcolor={}", quote(&style.idempotent_fill)));
        }
        if h.radical[i] {
            attrs.push(format!("peripheries={}", style.radical_peripheries));
        }
        writeln!(out, "  n{i} [{}];", attrs.join(", ")).unwrap();
    }
    let heights = h.heights();
    let top = heights.iter().copied().max().unwrap_or(0);
    for level in 0..=top {
        let members: Vec<String> = (0..h.len()).filter(|&i| heights[i] == level).map(|i| format!("n{i};")).collect();
        if members.len() > 1 {
            writeln!(out, "  {{ rank=same; {} }}", members.join(" ")).unwrap();
        }
    }
    let mut covers = h.covers.clone();
    covers.sort_unstable();
    for (a, b) in covers {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\"").replace("\\\\n", "\\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Category;
    use crate::limits::Limits;
    use crate::linalg::FieldSpec;
    use crate::preradical::enumerate_preradicals;
    use crate::quiver::Quiver;

    fn lattice(n: usize) -> Hasse {
        let c = Category::type_a(Quiver::linear(n), FieldSpec::new(2).unwrap()).unwrap();
        build_poset(&enumerate_preradicals(&c, &Limits::default()).unwrap()).unwrap()
    }

    #[test]
    fn two_element_lattice() {
        let h = lattice(1);
        assert_eq!(h.covers(), &[(0, 1)]);
        assert!(verify_lattice_laws(&h, None).unwrap().all_passed());
    }

    #[test]
    fn a2_shape() {
        let h = lattice(2);
        assert_eq!(h.len(), 8);
        assert_eq!(h.covers().len(), 10);
        assert_eq!(h.idempotent_part().len(), 6);
        assert_eq!(h.radical_part().len(), 6);
        assert!(verify_lattice_laws(&h, None).unwrap().all_passed());
        assert!(verify_lattice_laws(&h.idempotent_part(), None).unwrap().all_passed());
    }

    #[test]
    fn corrupted_covers_are_reported() {
        let h = lattice(2);
        let mut covers = h.covers().to_vec();
        let dropped = covers.pop().unwrap();
        let damaged = h.clone().with_covers(covers.clone());
        let r = verify_lattice_laws(&damaged, None).unwrap();
        assert!(!r.get("covers generate the order").unwrap().passed());
        // a shortcut edge from bottom to top is implied by the others
        covers.push(dropped);
        let bottom = (0..h.len()).find(|&i| (0..h.len()).all(|j| h.leq(i, j))).unwrap();
        let top = (0..h.len()).find(|&i| (0..h.len()).all(|j| h.leq(j, i))).unwrap();
        covers.push((bottom, top));
        let r = verify_lattice_laws(&h.clone().with_covers(covers), None).unwrap();
        assert!(!r.get("covers are irredundant").unwrap().passed());
    }

    #[test]
    fn non_closed_family_rejected() {
        let c = Category::type_a(Quiver::linear(2), FieldSpec::new(2).unwrap()).unwrap();
        let all = enumerate_preradicals(&c, &Limits::default()).unwrap();
        let h = build_poset(&all).unwrap();
        // two incomparable elements without their join
        let (i, j) = (0..8)
            .flat_map(|i| (0..8).map(move |j| (i, j)))
            .find(|&(i, j)| !h.leq(i, j) && !h.leq(j, i))
            .unwrap();
        let u = h.lub(i, j).unwrap();
        let family: Vec<Preradical> = (0..8).filter(|&k| k != u).map(|k| all[k].clone()).collect();
        assert!(matches!(build_poset(&family), Err(Error::Closure { .. })));
        assert!(matches!(build_poset(&[all[0].clone(), all[0].clone()]), Err(Error::Poset(_))));
        assert!(build_poset(&[]).is_err());
    }

    #[test]
    fn dot_is_deterministic() {
        let h = lattice(2);
        let a = to_dot(&h, &DotStyle::default());
        assert_eq!(a, to_dot(&lattice(2), &DotStyle::default()));
        assert_eq!(a.matches(" -> ").count(), 10);
        let style: DotStyle = serde_json::from_str("{}").unwrap();
        assert_eq!(style, DotStyle::default());
        let single = h.subposet(&[0]);
        let dot = to_dot(&single, &style);
        assert_eq!(dot.matches("label=").count(), 1);
        assert!(!dot.contains("->"));
    }
}
