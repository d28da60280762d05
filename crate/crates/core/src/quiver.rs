use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite acyclic quiver with vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuiverJson", into = "QuiverJson")]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

/// Wire form: `{"vertices":n,"arrows":[[s,t],...],"labels":[...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverJson {
    pub vertices: usize,
    pub arrows: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;

    fn try_from(j: QuiverJson) -> Result<Quiver> {
        Quiver::with_labels(j.vertices, j.arrows.iter().map(|a| (a[0], a[1])).collect(), j.labels)
    }
}

impl From<Quiver> for QuiverJson {
    fn from(q: Quiver) -> QuiverJson {
        QuiverJson {
            vertices: q.vertex_count,
            arrows: q.arrows.iter().map(|&(s, t)| [s, t]).collect(),
            labels: q.labels,
        }
    }
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<(usize, usize)>) -> Result<Quiver> {
        Quiver::with_labels(vertex_count, arrows, None)
    }

    pub fn with_labels(
        vertex_count: usize,
        arrows: Vec<(usize, usize)>,
        labels: Option<Vec<String>>,
    ) -> Result<Quiver> {
        if let Some(&(s, t)) = arrows.iter().find(|&&(s, t)| s >= vertex_count || t >= vertex_count) {
            return Err(Error::Quiver(format!("arrow {s}->{t} leaves the vertex range 0..{vertex_count}")));
        }
        if let Some(l) = &labels {
            if l.len() != vertex_count {
                return Err(Error::Quiver(format!("{} labels for {vertex_count} vertices", l.len())));
            }
        }
        let q = Quiver { vertex_count, arrows, labels };
        if q.topological_order().is_none() {
            return Err(Error::Quiver("quiver has an oriented cycle".into()));
        }
        Ok(q)
    }

    /// Equioriented `A_n`: `0 -> 1 -> ... -> n-1`.
    pub fn linear(n: usize) -> Quiver {
        Quiver::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("a path is acyclic")
    }

    /// Type `A_n` along `0 - 1 - ... - n-1`; `forward[i]` orients the edge between `i` and `i+1`.
    pub fn type_a(forward: &[bool]) -> Quiver {
        let arrows = forward
            .iter()
            .enumerate()
            .map(|(i, &fw)| if fw { (i, i + 1) } else { (i + 1, i) })
            .collect();
        Quiver::new(forward.len() + 1, arrows).expect("a path is acyclic")
    }

    pub fn from_json_str(text: &str) -> Result<Quiver> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Same vertices, every arrow reversed; arrow indices are preserved.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.vertex_count];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut ready: Vec<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).rev().collect();
        let mut order = Vec::with_capacity(self.vertex_count);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        ready.push(t);
                    }
                }
            }
        }
        (order.len() == self.vertex_count).then_some(order)
    }

    /// Every path from `from` to `to`, as a list of arrow indices in traversal order.
    /// The trivial path at a vertex is the empty list.
    pub fn paths(&self, from: usize, to: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.walk(from, to, &mut cur, &mut out);
        out
    }

    fn walk(&self, at: usize, to: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == to {
            out.push(cur.clone());
        }
        for (a, &(s, t)) in self.arrows.iter().enumerate() {
            if s == at {
                cur.push(a);
                self.walk(t, to, cur, out);
                cur.pop();
            }
        }
    }

    /// Checks that the quiver is of type A with its path laid out in index
    /// order: exactly one arrow between `i` and `i+1` for each `i`, nothing else.
    pub fn check_type_a(&self) -> Result<()> {
        let n = self.vertex_count;
        if n == 0 {
            return Err(Error::UnsupportedShape("empty quiver".into()));
        }
        let mut seen = vec![false; n.saturating_sub(1)];
        for &(s, t) in &self.arrows {
            let lo = s.min(t);
            if s.abs_diff(t) != 1 || seen[lo] {
                return Err(Error::UnsupportedShape(format!(
                    "arrow {s}->{t} does not fit a type-A path 0-1-...-{}",
                    n - 1
                )));
            }
            seen[lo] = true;
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::UnsupportedShape("underlying graph is not connected".into()));
        }
        Ok(())
    }

    pub fn is_type_a(&self) -> bool {
        self.check_type_a().is_ok()
    }

    /// Type A with every arrow pointing the same way along the path.
    pub fn is_equioriented(&self) -> bool {
        self.is_type_a()
            && (self.arrows.iter().all(|&(s, t)| t == s + 1) || self.arrows.iter().all(|&(s, t)| s == t + 1))
    }

    /// Index of the arrow joining `u` and `v` in either direction.
    pub fn arrow_between(&self, u: usize, v: usize) -> Option<usize> {
        self.arrows.iter().position(|&(s, t)| (s == u && t == v) || (s == v && t == u))
    }

    /// Full subquiver on `vertices` (sorted, distinct), renumbered `0..k` in
    /// increasing order. Also returns, per new arrow, the index of the original arrow.
    pub fn induced_subquiver(&self, vertices: &[usize]) -> Result<(Quiver, Vec<usize>)> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Quiver("vertex subset must be strictly increasing".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.vertex_count) {
            return Err(Error::Quiver(format!("vertex {v} out of range")));
        }
        let index_of = |v: usize| vertices.iter().position(|&w| w == v);
        let mut arrows = Vec::new();
        let mut origin = Vec::new();
        for (a, &(s, t)) in self.arrows.iter().enumerate() {
            if let (Some(ns), Some(nt)) = (index_of(s), index_of(t)) {
                arrows.push((ns, nt));
                origin.push(a);
            }
        }
        let labels = self.labels.as_ref().map(|l| vertices.iter().map(|&v| l[v].clone()).collect());
        Ok((Quiver::with_labels(vertices.len(), arrows, labels)?, origin))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycles_and_bad_indices() {
        assert!(Quiver::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(Quiver::new(2, vec![(0, 2)]).is_err());
        assert!(Quiver::new(1, vec![(0, 0)]).is_err());
        assert!(Quiver::with_labels(2, vec![(0, 1)], Some(vec!["a".into()])).is_err());
    }

    #[test]
    fn json_shape() {
        let q = Quiver::from_json_str(r#"{"vertices":2,"arrows":[[0,1]],"labels":["e1","e2"]}"#).unwrap();
        assert_eq!(q.arrows(), &[(0, 1)]);
        assert_eq!(q.vertex_label(1), "e2");
        let back = serde_json::to_string(&q).unwrap();
        assert_eq!(back, r#"{"vertices":2,"arrows":[[0,1]],"labels":["e1","e2"]}"#);
        assert!(Quiver::from_json_str(r#"{"vertices":2,"arrows":[[0,1],[1,0]]}"#).is_err());
    }

    #[test]
    fn type_a_detection() {
        assert!(Quiver::linear(1).is_type_a());
        assert!(Quiver::linear(3).is_equioriented());
        let zig = Quiver::type_a(&[true, false]);
        assert!(zig.is_type_a());
        assert!(!zig.is_equioriented());
        assert!(Quiver::type_a(&[false, false]).is_equioriented());
        assert!(Quiver::new(3, vec![(0, 2), (2, 1)]).unwrap().check_type_a().is_err());
        assert!(Quiver::new(3, vec![(0, 1), (0, 2)]).unwrap().check_type_a().is_err());
        assert!(Quiver::new(2, vec![]).unwrap().check_type_a().is_err());
        assert!(Quiver::new(2, vec![(0, 1), (0, 1)]).unwrap().check_type_a().is_err());
    }

    #[test]
    fn paths_and_opposite() {
        let q = Quiver::linear(3);
        assert_eq!(q.paths(0, 2), vec![vec![0, 1]]);
        assert_eq!(q.paths(1, 1), vec![Vec::<usize>::new()]);
        assert!(q.paths(2, 0).is_empty());
        assert_eq!(q.opposite().paths(2, 0), vec![vec![1, 0]]);
        assert_eq!(q.opposite().opposite(), q);
    }

    #[test]
    fn induced_subquiver_renumbers() {
        let q = Quiver::type_a(&[true, false, true]);
        let (sub, origin) = q.induced_subquiver(&[1, 2, 3]).unwrap();
        assert_eq!(sub.arrows(), &[(1, 0), (1, 2)]);
        assert_eq!(origin, vec![1, 2]);
        let (gap, origin) = q.induced_subquiver(&[0, 2]).unwrap();
        assert!(gap.arrows().is_empty() && origin.is_empty());
        assert!(q.induced_subquiver(&[2, 1]).is_err());
    }
}
