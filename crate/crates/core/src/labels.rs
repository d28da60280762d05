//! Human-readable names for preradical tables.
//!
//! On `A_2` (either orientation) the indecomposables are named structurally:
//! `P` is the one with both vertices, `S₁` the simple that embeds into `P`,
//! `S₂` the simple quotient of `P`. Tables are written in the slot order
//! `[σ(S₂), σ(P), σ(S₁)]`. Other categories use the indecomposables' own
//! names in category order.
//!
//! The top element is sometimes tabulated as `[S₁,P,S₂]`, with the outer
//! slots swapped relative to the `[σ(S₂), σ(P), σ(S₁)]` order used for every
//! other element. Here it is written `[S₂,P,S₁]`; [`top_label_conventions`]
//! returns both spellings.

use std::sync::Arc;

use crate::category::Category;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::preradical::{enumerate_preradicals, Preradical};
use crate::rep::{are_isomorphic, sub_to_rep, Subrep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelDictionary {
    names: Vec<String>,
    slots: Vec<usize>,
    a2: bool,
}

/// The eight preradicals of `A_2`: ASCII name, symbol, table.
pub const A2_NAMED: [(&str, &str, &str); 8] = [
    ("zero", "0", "[0,0,0]"),
    ("one", "1", "[S₂,P,S₁]"),
    ("omega", "ω", "[0,S₁,S₁]"),
    ("iota0", "ι₀", "[S₂,S₁,S₁]"),
    ("rho1", "ρ₁", "[0,S₁,0]"),
    ("gamma0", "γ₀", "[S₂,0,0]"),
    ("gamma1", "γ₁", "[S₂,P,0]"),
    ("xi", "ξ", "[S₂,S₁,0]"),
];

impl LabelDictionary {
    pub fn new(category: &Category, names: Vec<String>, slots: Vec<usize>) -> Result<LabelDictionary> {
        let n = category.len();
        let mut sorted = slots.clone();
        sorted.sort_unstable();
        if names.len() != n || sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::Label(format!("dictionary does not cover the {n} indecomposables")));
        }
        Ok(LabelDictionary { names, slots, a2: false })
    }

    pub fn structural(category: &Category) -> LabelDictionary {
        if let Some((s2, p, s1)) = a2_roles(category) {
            let mut names = vec![String::new(); 3];
            names[s2] = "S₂".into();
            names[p] = "P".into();
            names[s1] = "S₁".into();
            return LabelDictionary { names, slots: vec![s2, p, s1], a2: true };
        }
        let names = category.indecomposables().iter().map(|n| n.name.clone()).collect();
        LabelDictionary { names, slots: (0..category.len()).collect(), a2: false }
    }

    pub fn is_a2(&self) -> bool {
        self.a2
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    /// Index of the indecomposable with this name; accepts `S1` for `S₁`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        let wanted = normalize(name);
        self.names.iter().position(|n| *n == wanted)
    }
}

/// Indices `(S₂, P, S₁)` when the category is the `A_2` interval category.
fn a2_roles(category: &Category) -> Option<(usize, usize, usize)> {
    if category.quiver().vertex_count() != 2 || category.quiver().arrow_count() != 1 || category.len() != 3 {
        return None;
    }
    let p = category.indecomposables().iter().position(|n| n.rep.dims() == [1, 1])?;
    let simples: Vec<usize> = (0..3).filter(|&i| i != p).collect();
    let s1 = *simples.iter().find(|&&s| !category.hom(s, p).is_empty())?;
    let s2 = *simples.iter().find(|&&s| !category.hom(p, s).is_empty())?;
    (s1 != s2).then_some((s2, p, s1))
}

/// Subscript digits after `S`, so that `S1` and `S₁` name the same module.
pub fn normalize(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut after_s = false;
    for c in text.chars() {
        let mapped = match c {
            '1' if after_s => '₁',
            '2' if after_s => '₂',
            _ => c,
        };
        after_s = c == 'S';
        out.push(mapped);
    }
    out.replace(' ', "")
}

/// Name of a subobject of an indecomposable: `0`, or the dictionary name of
/// the indecomposable it is isomorphic to.
pub fn name_subobject(category: &Category, dict: &LabelDictionary, w: &Subrep) -> Result<String> {
    if w.is_zero() {
        return Ok("0".into());
    }
    let (x, _) = sub_to_rep(w);
    for i in 0..category.len() {
        if are_isomorphic(&x, category.rep(i), &Limits::default())? {
            return Ok(dict.names[i].clone());
        }
    }
    Err(Error::Label(format!("subobject with dimensions {:?} is not a listed indecomposable", w.dims())))
}

/// Bracket table `[v₁,…]` in the dictionary's slot order.
pub fn label_preradical(pr: &Preradical, dict: &LabelDictionary) -> Result<String> {
    let cat = pr.category();
    if dict.names.len() != cat.len() {
        return Err(Error::Label("dictionary belongs to another category".into()));
    }
    let parts = dict.slots.iter().map(|&i| name_subobject(cat, dict, pr.value(i))).collect::<Result<Vec<_>>>()?;
    Ok(format!("[{}]", parts.join(",")))
}

/// Structural label, falling back to dimension vectors when a value is not
/// isomorphic to a listed indecomposable.
pub fn display_label(pr: &Preradical) -> String {
    let dict = LabelDictionary::structural(pr.category());
    label_preradical(pr, &dict).unwrap_or_else(|_| {
        let parts: Vec<String> = dict
            .slots
            .iter()
            .map(|&i| {
                let d: Vec<String> = pr.value(i).dims().iter().map(|x| x.to_string()).collect();
                format!("({})", d.join(","))
            })
            .collect();
        format!("[{}]", parts.join(","))
    })
}

/// ASCII name and symbol of an `A_2` preradical.
pub fn a2_name(pr: &Preradical) -> Option<(&'static str, &'static str)> {
    let dict = LabelDictionary::structural(pr.category());
    if !dict.a2 {
        return None;
    }
    let label = label_preradical(pr, &dict).ok()?;
    A2_NAMED.iter().find(|(_, _, t)| *t == label).map(|(a, s, _)| (*a, *s))
}

/// Finds a preradical by ASCII name, symbol, or bracket table.
pub fn resolve(category: &Arc<Category>, text: &str, limits: &Limits) -> Result<Preradical> {
    let dict = LabelDictionary::structural(category);
    let wanted = normalize(text);
    let table = if dict.a2 {
        A2_NAMED
            .iter()
            .find(|(a, s, _)| *a == text || *s == wanted)
            .map(|(_, _, t)| t.to_string())
            .unwrap_or(wanted)
    } else {
        wanted
    };
    for pr in enumerate_preradicals(category, limits)? {
        if label_preradical(&pr, &dict).map(|l| l == table).unwrap_or(false) || display_label(&pr) == table {
            return Ok(pr);
        }
    }
    Err(Error::Label(format!("no preradical is called {text:?}")))
}

/// The top element's table in slot order, and the swapped spelling.
pub fn top_label_conventions() -> (&'static str, &'static str) {
    ("[S₂,P,S₁]", "[S₁,P,S₂]")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::quiver::Quiver;

    fn a2(forward: bool) -> Arc<Category> {
        Category::type_a(Quiver::type_a(&[forward]), FieldSpec::new(2).unwrap()).unwrap()
    }

    #[test]
    fn structural_names_in_both_orientations() {
        let fw = LabelDictionary::structural(&a2(true));
        assert_eq!(fw.name(2), "S₁");
        assert_eq!(fw.name(0), "S₂");
        let bw = LabelDictionary::structural(&a2(false));
        assert_eq!(bw.name(0), "S₁");
        assert_eq!(bw.name(2), "S₂");
    }

    #[test]
    fn labels_of_named_elements() {
        let c = a2(true);
        let dict = LabelDictionary::structural(&c);
        assert_eq!(label_preradical(&Preradical::zero(&c), &dict).unwrap(), "[0,0,0]");
        assert_eq!(label_preradical(&Preradical::one(&c), &dict).unwrap(), "[S₂,P,S₁]");
        let all = enumerate_preradicals(&c, &Limits::default()).unwrap();
        let mut labels: Vec<String> = all.iter().map(|p| label_preradical(p, &dict).unwrap()).collect();
        labels.sort();
        let mut expected: Vec<String> = A2_NAMED.iter().map(|(_, _, t)| t.to_string()).collect();
        expected.sort();
        assert_eq!(labels, expected);
    }

    #[test]
    fn resolution() {
        let c = a2(true);
        let l = Limits::default();
        let xi = resolve(&c, "xi", &l).unwrap();
        assert_eq!(resolve(&c, "ξ", &l).unwrap(), xi);
        assert_eq!(resolve(&c, "[S2,S1,0]", &l).unwrap(), xi);
        assert_eq!(a2_name(&xi), Some(("xi", "ξ")));
        assert!(matches!(resolve(&c, "nonsense", &l), Err(Error::Label(_))));
    }

    #[test]
    fn interval_names_elsewhere() {
        let c = Category::type_a(Quiver::linear(3), FieldSpec::new(2).unwrap()).unwrap();
        let dict = LabelDictionary::structural(&c);
        assert!(!dict.is_a2());
        assert_eq!(label_preradical(&Preradical::one(&c), &dict).unwrap(), "[M[0,0],M[0,1],M[0,2],M[1,1],M[1,2],M[2,2]]");
        assert!(LabelDictionary::new(&c, vec!["a".into()], vec![0]).is_err());
    }
}
