//! Preradicals as natural subobject assignments on the indecomposables of a
//! finite-type category, and the lattice operations on them.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::Category;
use crate::error::{Error, Result};
use crate::indec::Interval;
use crate::limits::Limits;
use crate::linalg::{FieldSpec, Subspace, SubspaceJson};
use crate::quiver::Quiver;
use crate::rep::{enumerate_subreps, hom_basis, quotient_rep, sub_to_rep, Rep, RepMorphism, Subrep};

/// A subfunctor of the identity, stored by its value on each indecomposable.
#[derive(Clone)]
pub struct Preradical {
    category: Arc<Category>,
    values: Vec<Subrep>,
}

/// Wire form: one entry per indecomposable, in category order.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreradicalJson {
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub values: Vec<ValueJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValueJson {
    pub indec: IndecKey,
    pub spaces: Vec<SubspaceJson>,
}

/// Intervals for type-A categories, names for user-supplied ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndecKey {
    Interval(Interval),
    Name(String),
}

/// Which pair of indecomposables and which hom-basis element breaks naturality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaturalityFailure {
    pub source: usize,
    pub target: usize,
    pub basis_index: usize,
}

/// First naturality violation of a value table, if any. Checking the hom
/// bases suffices since images of combinations lie in sums of images.
pub fn naturality_failure(category: &Category, values: &[Subrep]) -> Option<NaturalityFailure> {
    for i in 0..category.len() {
        for j in 0..category.len() {
            for (k, f) in category.hom(i, j).iter().enumerate() {
                let moved = f.push_forward(&values[i]).expect("value lives in its indecomposable");
                if !values[j].contains(&moved).expect("same ambient") {
                    return Some(NaturalityFailure { source: i, target: j, basis_index: k });
                }
            }
        }
    }
    None
}

pub fn validate_naturality(pr: &Preradical) -> bool {
    naturality_failure(&pr.category, &pr.values).is_none()
}

impl Preradical {
    pub fn new(category: Arc<Category>, values: Vec<Subrep>) -> Result<Preradical> {
        if values.len() != category.len() {
            return Err(Error::Dimension(format!(
                "{} values for {} indecomposables",
                values.len(),
                category.len()
            )));
        }
        for (i, v) in values.iter().enumerate() {
            if v.ambient() != category.rep(i) {
                return Err(Error::Mismatch(format!("value {i} is not a subobject of {}", category.indec(i).name)));
            }
        }
        if let Some(e) = naturality_failure(&category, &values) {
            return Err(Error::NotNatural(format!(
                "basis morphism {} from {} to {} does not map the value into the value",
                e.basis_index,
                category.indec(e.source).name,
                category.indec(e.target).name
            )));
        }
        Ok(Preradical { category, values })
    }

    /// Values known to be natural by construction; rechecked in debug builds.
    fn from_natural(category: Arc<Category>, values: Vec<Subrep>) -> Preradical {
        debug_assert!(naturality_failure(&category, &values).is_none(), "library produced a non-natural table");
        Preradical { category, values }
    }

    pub fn zero(category: &Arc<Category>) -> Preradical {
        let values = category.indecomposables().iter().map(|n| Subrep::zero(&n.rep)).collect();
        Preradical { category: category.clone(), values }
    }

    pub fn one(category: &Arc<Category>) -> Preradical {
        let values = category.indecomposables().iter().map(|n| Subrep::full(&n.rep)).collect();
        Preradical { category: category.clone(), values }
    }

    pub fn category(&self) -> &Arc<Category> {
        &self.category
    }

    pub fn values(&self) -> &[Subrep] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &Subrep {
        &self.values[i]
    }

    /// Dimension vectors of the values, one per indecomposable.
    pub fn dims_table(&self) -> Vec<Vec<usize>> {
        self.values.iter().map(Subrep::dims).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Subrep::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.values.iter().all(Subrep::is_full)
    }

    fn check_same_category(&self, other: &Preradical) -> Result<()> {
        if self.category == other.category {
            Ok(())
        } else {
            Err(Error::Mismatch("preradicals of different categories".into()))
        }
    }

    /// Value on an arbitrary object: the sum of the images of the values
    /// under every basis morphism from an indecomposable into `x`.
    pub fn evaluate(&self, x: &Rep) -> Result<Subrep> {
        self.category.check_owns(x)?;
        let mut acc = Subrep::zero(x);
        for (i, n) in self.category.indecomposables().iter().enumerate() {
            if self.values[i].is_zero() {
                continue;
            }
            for f in hom_basis(&n.rep, x)? {
                acc = acc.sum(&f.push_forward(&self.values[i])?)?;
            }
        }
        Ok(acc)
    }

    pub fn leq(&self, other: &Preradical) -> Result<bool> {
        self.check_same_category(other)?;
        for (a, b) in self.values.iter().zip(&other.values) {
            if !b.contains(a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self · sigma`: the value of `self` on the subobject `sigma(N)`.
    pub fn product(&self, sigma: &Preradical) -> Result<Preradical> {
        self.check_same_category(sigma)?;
        let values = sigma
            .values
            .iter()
            .map(|w| {
                let (sub, inclusion) = sub_to_rep(w);
                inclusion.push_forward(&self.evaluate(&sub)?)
            })
            .collect::<Result<_>>()?;
        Ok(Preradical::from_natural(self.category.clone(), values))
    }

    /// `(self : tau)`: the preimage of `tau(N / self(N))` in `N`.
    pub fn coproduct(&self, tau: &Preradical) -> Result<Preradical> {
        self.check_same_category(tau)?;
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let (quotient, projection) = quotient_rep(self.category.rep(i), w)?;
                projection.pull_back(&tau.evaluate(&quotient)?)
            })
            .collect::<Result<_>>()?;
        Ok(Preradical::from_natural(self.category.clone(), values))
    }

    pub fn is_idempotent(&self) -> bool {
        self.product(self).expect("same category") == *self
    }

    pub fn is_radical(&self) -> bool {
        self.coproduct(self).expect("same category") == *self
    }

    /// Indecomposables on which the value is everything.
    pub fn t_class(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i].is_full()).collect()
    }

    /// Indecomposables on which the value vanishes.
    pub fn f_class(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i].is_zero()).collect()
    }

    /// The dual preradical on the opposite category: vertexwise annihilators.
    pub fn delta(&self) -> Preradical {
        let op = self.category.opposite();
        let values = self
            .values
            .iter()
            .zip(op.indecomposables())
            .map(|(v, n)| {
                let spaces = v.spaces().iter().map(Subspace::annihilator).collect();
                Subrep::new(n.rep.clone(), spaces).expect("annihilator of a subobject is a subobject of the dual")
            })
            .collect();
        Preradical::from_natural(op, values)
    }

    /// Inverse of [`Preradical::delta`]. Duality is an involution on value
    /// tables, so this is `delta` applied on the opposite side.
    pub fn delta_inverse(&self) -> Preradical {
        self.delta()
    }

    /// Join over `alpha` of the inclusions of the values.
    pub fn reconstruct_from_alpha(&self) -> Result<Preradical> {
        let parts = self
            .values
            .iter()
            .map(|w| alpha(&self.category, &sub_to_rep(w).1))
            .collect::<Result<Vec<_>>>()?;
        join(&self.category, &parts)
    }

    /// Meet over `omega` of the projections onto the quotients by the values.
    pub fn reconstruct_from_omega(&self) -> Result<Preradical> {
        let parts = self
            .values
            .iter()
            .enumerate()
            .map(|(i, w)| omega(&self.category, &quotient_rep(self.category.rep(i), w)?.1))
            .collect::<Result<Vec<_>>>()?;
        meet(&self.category, &parts)
    }

    /// Join of `alpha(1_N)` over the torsion class.
    pub fn generated_by_t_class(&self) -> Result<Preradical> {
        let parts = self
            .t_class()
            .into_iter()
            .map(|i| alpha(&self.category, &self.category.rep(i).identity()))
            .collect::<Result<Vec<_>>>()?;
        join(&self.category, &parts)
    }

    /// Meet of `omega(1_N)` over the torsion-free class.
    pub fn cogenerated_by_f_class(&self) -> Result<Preradical> {
        let parts = self
            .f_class()
            .into_iter()
            .map(|i| omega(&self.category, &self.category.rep(i).identity()))
            .collect::<Result<Vec<_>>>()?;
        meet(&self.category, &parts)
    }

    pub fn to_json(&self) -> PreradicalJson {
        let values = self
            .category
            .indecomposables()
            .iter()
            .zip(&self.values)
            .map(|(n, v)| ValueJson {
                indec: match n.interval {
                    Some(i) => IndecKey::Interval(i),
                    None => IndecKey::Name(n.name.clone()),
                },
                spaces: v.spaces().iter().map(Subspace::to_json).collect(),
            })
            .collect();
        PreradicalJson { field: self.category.field(), quiver: (**self.category.quiver()).clone(), values }
    }

    pub fn from_json(category: &Arc<Category>, json: &PreradicalJson) -> Result<Preradical> {
        if json.field != category.field() || &json.quiver != category.quiver().as_ref() {
            return Err(Error::Mismatch("preradical was written for another quiver or field".into()));
        }
        if json.values.len() != category.len() {
            return Err(Error::Dimension(format!(
                "{} values for {} indecomposables",
                json.values.len(),
                category.len()
            )));
        }
        let mut values = Vec::with_capacity(category.len());
        for (i, v) in json.values.iter().enumerate() {
            let n = category.indec(i);
            let expected = match n.interval {
                Some(iv) => IndecKey::Interval(iv),
                None => IndecKey::Name(n.name.clone()),
            };
            if v.indec != expected {
                return Err(Error::Input(format!("value {i} is keyed {:?}, expected {:?}", v.indec, expected)));
            }
            let spaces = v.spaces.iter().map(|s| Subspace::from_json(s, category.field())).collect::<Result<_>>()?;
            values.push(Subrep::new(n.rep.clone(), spaces)?);
        }
        Preradical::new(category.clone(), values)
    }
}

impl PartialEq for Preradical {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && self.category == other.category
    }
}

impl Eq for Preradical {}

impl Hash for Preradical {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.values.hash(state);
    }
}

impl PartialOrd for Preradical {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic in the canonical value tables (not the lattice order).
impl Ord for Preradical {
    fn cmp(&self, other: &Self) -> Ordering {
        self.values.cmp(&other.values)
    }
}

impl fmt::Debug for Preradical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (n, v) in self.category.indecomposables().iter().zip(&self.values) {
            m.entry(&n.name, &v.spaces());
        }
        m.finish()
    }
}

/// Every preradical of the category, sorted by value table.
pub fn enumerate_preradicals(category: &Arc<Category>, limits: &Limits) -> Result<Vec<Preradical>> {
    let options: Vec<Vec<Subrep>> =
        category.indecomposables().iter().map(|n| enumerate_subreps(&n.rep, limits)).collect::<Result<_>>()?;
    let product = options.iter().fold(1u128, |acc, o| acc.saturating_mul(o.len() as u128));
    Limits::check("candidate preradical tables", product, limits.preradical_product)?;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(options.len());
    extend_natural(category, &options, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn extend_natural(category: &Arc<Category>, options: &[Vec<Subrep>], chosen: &mut Vec<Subrep>, out: &mut Vec<Preradical>) {
    let k = chosen.len();
    if k == options.len() {
        out.push(Preradical { category: category.clone(), values: chosen.clone() });
        return;
    }
    for cand in &options[k] {
        // squares between the new entry and those already chosen
        let ok = (0..=k).all(|i| {
            let vi = if i == k { cand } else { &chosen[i] };
            let forward = category.hom(i, k).iter().all(|f| cand.contains(&f.push_forward(vi).unwrap()).unwrap());
            let backward = category.hom(k, i).iter().all(|f| vi.contains(&f.push_forward(cand).unwrap()).unwrap());
            forward && backward
        });
        if ok {
            chosen.push(cand.clone());
            extend_natural(category, options, chosen, out);
            chosen.pop();
        }
    }
}

/// Vertexwise sum of the values; the empty join is `0`.
pub fn join(category: &Arc<Category>, prs: &[Preradical]) -> Result<Preradical> {
    let mut acc = Preradical::zero(category);
    for p in prs {
        acc.check_same_category(p)?;
        let values = acc.values.iter().zip(&p.values).map(|(a, b)| a.sum(b)).collect::<Result<_>>()?;
        acc = Preradical::from_natural(category.clone(), values);
    }
    Ok(acc)
}

/// Vertexwise intersection of the values; the empty meet is `1`.
pub fn meet(category: &Arc<Category>, prs: &[Preradical]) -> Result<Preradical> {
    let mut acc = Preradical::one(category);
    for p in prs {
        acc.check_same_category(p)?;
        let values = acc.values.iter().zip(&p.values).map(|(a, b)| a.intersect(b)).collect::<Result<_>>()?;
        acc = Preradical::from_natural(category.clone(), values);
    }
    Ok(acc)
}

/// The alpha preradical of `h: N -> M`: on `L`, the sum of `Im(f∘h)` over a
/// basis of `Hom(M, L)`.
pub fn alpha(category: &Arc<Category>, h: &RepMorphism) -> Result<Preradical> {
    category.check_owns(h.target())?;
    let values = category
        .indecomposables()
        .iter()
        .map(|l| {
            let mut acc = Subrep::zero(&l.rep);
            for f in hom_basis(h.target(), &l.rep)? {
                acc = acc.sum(&f.compose(h)?.image())?;
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    Ok(Preradical::from_natural(category.clone(), values))
}

/// The omega preradical of `k: N -> M`: on `L`, the intersection of
/// `Ker(k∘f)` over a basis of `Hom(L, N)`.
pub fn omega(category: &Arc<Category>, k: &RepMorphism) -> Result<Preradical> {
    category.check_owns(k.source())?;
    let values = category
        .indecomposables()
        .iter()
        .map(|l| {
            let mut acc = Subrep::full(&l.rep);
            for f in hom_basis(&l.rep, k.source())? {
                acc = acc.intersect(&k.compose(&f)?.kernel())?;
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    Ok(Preradical::from_natural(category.clone(), values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2(p: u32) -> Arc<Category> {
        Category::type_a(Quiver::linear(2), FieldSpec::new(p).unwrap()).unwrap()
    }

    /// Table on `[M[0,0], M[0,1], M[1,1]]` from dimension data; for `M[0,1]`
    /// the three subobjects are `0`, the socle `(0,1)` and everything.
    fn table(c: &Arc<Category>, top: usize, p: (usize, usize), bottom: usize) -> Preradical {
        let f = c.field();
        let sub = |i: usize, dims: &[usize]| {
            let n = c.rep(i);
            let spaces =
                dims.iter().enumerate().map(|(v, &d)| if d == 0 { Subspace::zero(f, n.dim(v)) } else { Subspace::full(f, n.dim(v)) });
            Subrep::new(n.clone(), spaces.collect()).unwrap()
        };
        let values = vec![sub(0, &[top, 0]), sub(1, &[p.0, p.1]), sub(2, &[0, bottom])];
        Preradical::new(c.clone(), values).unwrap()
    }

    #[test]
    fn a2_has_eight_preradicals_over_several_fields() {
        for p in [2, 3, 5] {
            let c = a2(p);
            assert_eq!(enumerate_preradicals(&c, &Limits::default()).unwrap().len(), 8);
        }
        let a1 = Category::type_a(Quiver::linear(1), FieldSpec::new(2).unwrap()).unwrap();
        assert_eq!(enumerate_preradicals(&a1, &Limits::default()).unwrap().len(), 2);
    }

    #[test]
    fn non_natural_assignment_rejected() {
        let c = a2(2);
        let f = c.field();
        let values = vec![
            Subrep::zero(c.rep(0)),
            Subrep::zero(c.rep(1)),
            Subrep::new(c.rep(2).clone(), vec![Subspace::zero(f, 0), Subspace::full(f, 1)]).unwrap(),
        ];
        assert!(matches!(Preradical::new(c, values), Err(Error::NotNatural(_))));
    }

    #[test]
    fn named_a2_operations() {
        let c = a2(2);
        let rho1 = table(&c, 0, (0, 1), 0);
        let gamma0 = table(&c, 1, (0, 0), 0);
        let xi = table(&c, 1, (0, 1), 0);
        let omega_ = table(&c, 0, (0, 1), 1);
        let iota0 = table(&c, 1, (0, 1), 1);
        let gamma1 = table(&c, 1, (1, 1), 0);
        assert!(rho1.leq(&xi).unwrap());
        assert!(!xi.leq(&omega_).unwrap());
        assert!(rho1.product(&rho1).unwrap().is_zero());
        assert_eq!(iota0.product(&iota0).unwrap(), iota0);
        assert!(xi.coproduct(&xi).unwrap().value(1).is_full());
        assert_eq!(rho1.coproduct(&rho1).unwrap(), rho1);
        assert!(!rho1.is_idempotent() && !xi.is_idempotent());
        assert!(rho1.is_radical() && !xi.is_radical() && !iota0.is_radical());
        assert_eq!(join(&c, &[rho1.clone(), gamma0.clone()]).unwrap(), xi);
        assert_eq!(meet(&c, &[iota0.clone(), gamma1]).unwrap(), xi);
        assert_eq!(xi.reconstruct_from_alpha().unwrap(), xi);
        assert_eq!(alpha(&c, &c.rep(2).identity()).unwrap(), omega_);
        assert_eq!(omega(&c, &c.rep(0).identity()).unwrap(), omega_);
    }

    #[test]
    fn evaluate_on_sum() {
        let c = a2(2);
        let rho1 = table(&c, 0, (0, 1), 0);
        let ds = crate::rep::direct_sum(c.quiver(), c.field(), &[c.rep(1).clone(), c.rep(2).clone()]).unwrap();
        let v = rho1.evaluate(&ds.sum).unwrap();
        assert_eq!(v.dims(), vec![0, 1]);
        let expected = ds.inclusions[0].push_forward(rho1.value(1)).unwrap();
        assert_eq!(v, expected);
        assert!(Preradical::one(&c).evaluate(&ds.sum).unwrap().is_full());
        assert!(Preradical::zero(&c).evaluate(&ds.sum).unwrap().is_zero());
    }

    #[test]
    fn delta_swaps_extremes_and_round_trips() {
        let c = a2(3);
        assert!(Preradical::zero(&c).delta().is_one());
        assert!(Preradical::one(&c).delta().is_zero());
        for pr in enumerate_preradicals(&c, &Limits::default()).unwrap() {
            assert_eq!(pr.delta().delta_inverse(), pr);
            assert_eq!(pr.is_radical(), pr.delta().is_idempotent());
        }
    }

    #[test]
    fn json_round_trip() {
        let c = a2(2);
        for pr in enumerate_preradicals(&c, &Limits::default()).unwrap() {
            let text = serde_json::to_string(&pr.to_json()).unwrap();
            let back: PreradicalJson = serde_json::from_str(&text).unwrap();
            assert_eq!(Preradical::from_json(&c, &back).unwrap(), pr);
        }
    }
}
