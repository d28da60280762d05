//! A Krull–Schmidt category of finite type, presented by its complete list
//! of indecomposables together with bases of all hom spaces between them.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indec::{is_indecomposable, type_a_intervals, Interval};
use crate::limits::Limits;
use crate::linalg::FieldSpec;
use crate::quiver::Quiver;
use crate::rep::{are_isomorphic, dual_rep, hom_basis, Rep, RepJson, RepMorphism};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indecomposable {
    pub name: String,
    pub interval: Option<Interval>,
    pub rep: Rep,
}

#[derive(Debug)]
pub struct Category {
    quiver: Arc<Quiver>,
    field: FieldSpec,
    indecs: Vec<Indecomposable>,
    /// `homs[i][j]` is `hom_basis(N_i, N_j)`.
    homs: Vec<Vec<Vec<RepMorphism>>>,
    opposite: OnceLock<Arc<Category>>,
}

/// Wire form of a user-supplied category.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryJson {
    pub quiver: Quiver,
    pub indecomposables: Vec<IndecJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndecJson {
    pub name: String,
    pub rep: RepJson,
}

impl PartialEq for Category {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field && self.quiver == other.quiver && self.indecs == other.indecs)
    }
}

impl Eq for Category {}

impl Category {
    /// The interval modules of a type-A quiver, in `(lo, hi)` order.
    pub fn type_a(quiver: Quiver, field: FieldSpec) -> Result<Arc<Category>> {
        let quiver = Arc::new(quiver);
        let indecs = type_a_intervals(&quiver, field)?
            .into_iter()
            .map(|(i, rep)| Indecomposable { name: i.to_string(), interval: Some(i), rep })
            .collect();
        Ok(Arc::new(Category::build(quiver, field, indecs)?))
    }

    /// A category from an explicit list. Each entry is checked to be
    /// indecomposable and the entries pairwise non-isomorphic; completeness
    /// of the list is the caller's responsibility.
    pub fn from_indecomposables(
        quiver: Quiver,
        field: FieldSpec,
        entries: Vec<(String, Rep)>,
        limits: &Limits,
    ) -> Result<Arc<Category>> {
        let quiver = Arc::new(quiver);
        let mut indecs = Vec::with_capacity(entries.len());
        for (name, rep) in entries {
            if rep.quiver().as_ref() != quiver.as_ref() || rep.field() != field {
                return Err(Error::Indecomposables(format!("{name} lives over another quiver or field")));
            }
            if !is_indecomposable(&rep, limits)? {
                return Err(Error::Indecomposables(format!("{name} is not indecomposable")));
            }
            indecs.push(Indecomposable { name, interval: None, rep });
        }
        for (i, a) in indecs.iter().enumerate() {
            if indecs[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Indecomposables(format!("duplicate name {}", a.name)));
            }
        }
        let cat = Category::build(quiver, field, indecs)?;
        for i in 0..cat.indecs.len() {
            for j in 0..i {
                if cat.isomorphic(i, j, limits)? {
                    return Err(Error::Indecomposables(format!(
                        "{} and {} are isomorphic",
                        cat.indecs[j].name, cat.indecs[i].name
                    )));
                }
            }
        }
        Ok(Arc::new(cat))
    }

    pub fn from_json(json: &CategoryJson, field: FieldSpec, limits: &Limits) -> Result<Arc<Category>> {
        let quiver = json.quiver.clone();
        let q = Arc::new(quiver.clone());
        let entries = json
            .indecomposables
            .iter()
            .map(|e| Ok((e.name.clone(), Rep::from_json(&e.rep, q.clone(), field)?)))
            .collect::<Result<Vec<_>>>()?;
        Category::from_indecomposables(quiver, field, entries, limits)
    }

    fn build(quiver: Arc<Quiver>, field: FieldSpec, indecs: Vec<Indecomposable>) -> Result<Category> {
        let homs = indecs
            .iter()
            .map(|a| indecs.iter().map(|b| hom_basis(&a.rep, &b.rep)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Category { quiver, field, indecs, homs, opposite: OnceLock::new() })
    }

    fn isomorphic(&self, i: usize, j: usize, limits: &Limits) -> Result<bool> {
        are_isomorphic(&self.indecs[i].rep, &self.indecs[j].rep, limits)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    pub fn indecomposables(&self) -> &[Indecomposable] {
        &self.indecs
    }

    pub fn indec(&self, i: usize) -> &Indecomposable {
        &self.indecs[i]
    }

    pub fn rep(&self, i: usize) -> &Rep {
        &self.indecs[i].rep
    }

    pub fn hom(&self, i: usize, j: usize) -> &[RepMorphism] {
        &self.homs[i][j]
    }

    pub fn position_of_interval(&self, interval: Interval) -> Option<usize> {
        self.indecs.iter().position(|n| n.interval == Some(interval))
    }

    pub fn position_of_name(&self, name: &str) -> Option<usize> {
        self.indecs.iter().position(|n| n.name == name)
    }

    /// True iff `x` is a representation in this category.
    pub fn owns(&self, x: &Rep) -> bool {
        x.field() == self.field && x.quiver().as_ref() == self.quiver.as_ref()
    }

    pub(crate) fn check_owns(&self, x: &Rep) -> Result<()> {
        if self.owns(x) {
            Ok(())
        } else {
            Err(Error::Mismatch("representation lives over another quiver or field".into()))
        }
    }

    /// The opposite category: duals of the indecomposables over the opposite
    /// quiver, in the same order and with the same names.
    pub fn opposite(&self) -> Arc<Category> {
        self.opposite
            .get_or_init(|| {
                let quiver = Arc::new(self.quiver.opposite());
                let indecs = self
                    .indecs
                    .iter()
                    .map(|n| {
                        let d = dual_rep(&n.rep);
                        let rep = Rep::new(quiver.clone(), self.field, d.dims().to_vec(), d.maps().to_vec())
                            .expect("dual has the opposite shape");
                        Indecomposable { name: n.name.clone(), interval: n.interval, rep }
                    })
                    .collect();
                Arc::new(Category::build(quiver, self.field, indecs).expect("duals share the field"))
            })
            .clone()
    }
}
