//! Adjoint pairs `F ⊣ G` with explicit units and counits.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functor::{Functor, Relabelling, SubquiverInclusion};
use crate::linalg::{Matrix, Subspace};
use crate::quiver::Quiver;
use crate::rep::{dual_morphism, dual_rep, hom_basis, Rep, RepMorphism};

/// `left: rep(A) -> rep(B)` is left adjoint to `right: rep(B) -> rep(A)`.
#[derive(Debug, Clone)]
pub struct Adjunction {
    left: Functor,
    right: Functor,
    kind: Kind,
}

#[derive(Debug, Clone)]
enum Kind {
    LanRes(Arc<SubquiverInclusion>),
    Iso,
    /// `first: A ⇄ B` followed by `second: B ⇄ C`.
    Composite(Box<Adjunction>, Box<Adjunction>),
    Opposite(Box<Adjunction>),
}

/// Wire form of the built-in adjunctions. `quiver` may be omitted when the
/// caller supplies one.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AdjunctionSpec {
    LanRes {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        quiver: Option<Quiver>,
        subset: Vec<usize>,
    },
    Iso {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        quiver: Option<Quiver>,
        map: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        target: Option<Quiver>,
    },
    Identity {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        quiver: Option<Quiver>,
    },
    Composite {
        first: Box<AdjunctionSpec>,
        second: Box<AdjunctionSpec>,
    },
    Opposite {
        of: Box<AdjunctionSpec>,
    },
}

impl AdjunctionSpec {
    /// Parses JSON, or the shorthands `lan-res:0,1`, `iso:1,0` and `iso:identity`.
    pub fn parse(text: &str) -> Result<AdjunctionSpec> {
        let text = text.trim();
        if text.starts_with('{') {
            return Ok(serde_json::from_str(text)?);
        }
        if text == "identity" || text == "iso:identity" {
            return Ok(AdjunctionSpec::Identity { quiver: None });
        }
        let (kind, rest) =
            text.split_once(':').ok_or_else(|| Error::Input(format!("unrecognized adjunction {text:?}")))?;
        let list = rest
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad vertex {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match kind {
            "lan-res" => Ok(AdjunctionSpec::LanRes { quiver: None, subset: list }),
            "iso" => Ok(AdjunctionSpec::Iso { quiver: None, map: list, target: None }),
            _ => Err(Error::Input(format!("unknown adjunction kind {kind:?}"))),
        }
    }

    /// Builds the adjunction; `ambient` stands in for omitted quivers. For a
    /// composite, the second part defaults to the target of the first.
    pub fn build(&self, ambient: Option<&Quiver>) -> Result<Adjunction> {
        let pick = |q: &Option<Quiver>| {
            q.clone()
                .or_else(|| ambient.cloned())
                .ok_or_else(|| Error::Input("adjunction needs a quiver".into()))
        };
        match self {
            AdjunctionSpec::LanRes { quiver, subset } => Adjunction::lan_res(pick(quiver)?, subset),
            AdjunctionSpec::Iso { quiver, map, target } => {
                let q = pick(quiver)?;
                match target {
                    Some(t) => Adjunction::iso(q, t.clone(), map),
                    None => Adjunction::relabel(q, map),
                }
            }
            AdjunctionSpec::Identity { quiver } => Ok(Adjunction::identity(pick(quiver)?)),
            AdjunctionSpec::Composite { first, second } => {
                let a = first.build(ambient)?;
                let b = second.build(Some(&a.target_quiver()))?;
                Adjunction::composite(a, b)
            }
            AdjunctionSpec::Opposite { of } => Ok(of.build(ambient)?.opposite()),
        }
    }
}

impl Adjunction {
    /// `Lan ⊣ res` along the full subquiver of `quiver` on `subset`: the left
    /// adjoint goes from the subquiver's representations to the whole quiver's.
    pub fn lan_res(quiver: Quiver, subset: &[usize]) -> Result<Adjunction> {
        let inc = SubquiverInclusion::new(quiver, subset)?;
        Ok(Adjunction {
            left: Functor::Lan(inc.clone()),
            right: Functor::Restriction(inc.clone()),
            kind: Kind::LanRes(inc),
        })
    }

    /// The equivalence induced by a quiver isomorphism `source -> target`.
    pub fn iso(source: Quiver, target: Quiver, map: &[usize]) -> Result<Adjunction> {
        let r = Relabelling::new(source, target, map)?;
        Ok(Adjunction { left: Functor::Relabel(r.clone()), right: Functor::Relabel(r.inverse()), kind: Kind::Iso })
    }

    /// Like [`Adjunction::iso`] with the target obtained by renaming vertices.
    pub fn relabel(source: Quiver, map: &[usize]) -> Result<Adjunction> {
        let r = Relabelling::image(source, map)?;
        Ok(Adjunction { left: Functor::Relabel(r.clone()), right: Functor::Relabel(r.inverse()), kind: Kind::Iso })
    }

    pub fn identity(quiver: Quiver) -> Adjunction {
        let map: Vec<usize> = (0..quiver.vertex_count()).collect();
        Adjunction::iso(quiver.clone(), quiver, &map).expect("identity is an isomorphism")
    }

    /// `first` then `second`: left adjoint `F₂F₁`, right adjoint `G₁G₂`.
    pub fn composite(first: Adjunction, second: Adjunction) -> Result<Adjunction> {
        if first.target_quiver() != second.source_quiver() {
            return Err(Error::Adjunction("composite of adjunctions that do not meet".into()));
        }
        Ok(Adjunction {
            left: first.left.clone().then(second.left.clone()),
            right: second.right.clone().then(first.right.clone()),
            kind: Kind::Composite(Box::new(first), Box::new(second)),
        })
    }

    /// `G^op ⊣ F^op` between the opposite categories, the roles of source
    /// and target exchanged.
    pub fn opposite(&self) -> Adjunction {
        if let Kind::Opposite(inner) = &self.kind {
            return (**inner).clone();
        }
        Adjunction {
            left: self.right.clone().opposite(),
            right: self.left.clone().opposite(),
            kind: Kind::Opposite(Box::new(self.clone())),
        }
    }

    /// Whether both functors are built from quiver isomorphisms.
    pub fn is_equivalence(&self) -> bool {
        match &self.kind {
            Kind::Iso => true,
            Kind::LanRes(_) => false,
            Kind::Composite(a, b) => a.is_equivalence() && b.is_equivalence(),
            Kind::Opposite(a) => a.is_equivalence(),
        }
    }

    pub fn left(&self) -> &Functor {
        &self.left
    }

    pub fn right(&self) -> &Functor {
        &self.right
    }

    /// Quiver of the left adjoint's domain.
    pub fn source_quiver(&self) -> Quiver {
        self.left.source()
    }

    /// Quiver of the left adjoint's codomain.
    pub fn target_quiver(&self) -> Quiver {
        self.left.target()
    }

    pub fn describe(&self) -> String {
        format!("{} ⊣ {}", self.left.describe(), self.right.describe())
    }

    /// `η_A: A -> G F A`.
    pub fn unit(&self, a: &Rep) -> Result<RepMorphism> {
        match &self.kind {
            Kind::LanRes(inc) => inc.unit(a),
            Kind::Iso => {
                let gfa = self.right.apply(&self.left.apply(a)?)?;
                RepMorphism::new(a.clone(), gfa, identities(a))
            }
            Kind::Composite(first, second) => {
                let inner = first.unit(a)?;
                let outer = first.right.apply_morphism(&second.unit(&first.left.apply(a)?)?)?;
                outer.compose(&inner)
            }
            Kind::Opposite(inner) => Ok(dual_morphism(&inner.counit(&dual_rep(a))?)),
        }
    }

    /// `ε_B: F G B -> B`.
    pub fn counit(&self, b: &Rep) -> Result<RepMorphism> {
        match &self.kind {
            Kind::LanRes(inc) => inc.counit(b),
            Kind::Iso => {
                let fgb = self.left.apply(&self.right.apply(b)?)?;
                RepMorphism::new(fgb, b.clone(), identities(b))
            }
            Kind::Composite(first, second) => {
                let inner = second.left.apply_morphism(&first.counit(&second.right.apply(b)?)?)?;
                second.counit(b)?.compose(&inner)
            }
            Kind::Opposite(inner) => Ok(dual_morphism(&inner.unit(&dual_rep(b))?)),
        }
    }

    /// `(εF)∘(Fη) = 1_F` at every `a` and `(Gε)∘(ηG) = 1_G` at every `b`.
    pub fn check_triangles(&self, a_samples: &[Rep], b_samples: &[Rep]) -> Result<bool> {
        for a in a_samples {
            let fa = self.left.apply(a)?;
            let lhs = self.counit(&fa)?.compose(&self.left.apply_morphism(&self.unit(a)?)?)?;
            if lhs != fa.identity() {
                return Ok(false);
            }
        }
        for b in b_samples {
            let gb = self.right.apply(b)?;
            let lhs = self.right.apply_morphism(&self.counit(b)?)?.compose(&self.unit(&gb)?)?;
            if lhs != gb.identity() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Hom(FA, B) -> Hom(A, GB)`, `f ↦ G(f)∘η_A`, is a linear bijection.
    pub fn check_hom_bijection(&self, a: &Rep, b: &Rep) -> Result<bool> {
        let fa = self.left.apply(a)?;
        let gb = self.right.apply(b)?;
        let left = hom_basis(&fa, b)?;
        let right = hom_basis(a, &gb)?;
        if left.len() != right.len() {
            return Ok(false);
        }
        let eta = self.unit(a)?;
        let images =
            left.iter().map(|f| self.right.apply_morphism(f)?.compose(&eta)).collect::<Result<Vec<_>>>()?;
        let rows: Vec<u32> = images.iter().flat_map(|g| g.components().iter().flat_map(|c| c.entries().to_vec())).collect();
        let width = rows.len().checked_div(images.len()).unwrap_or(0);
        let m = Matrix::new(a.field(), images.len(), width, rows)?;
        Ok(Subspace::span(&m).dim() == images.len())
    }
}

fn identities(x: &Rep) -> Vec<Matrix> {
    x.dims().iter().map(|&d| Matrix::identity(x.field(), d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indec::type_a_intervals;
    use crate::linalg::FieldSpec;
    use crate::rep::direct_sum;

    fn samples(q: &Quiver, p: u32) -> Vec<Rep> {
        let q = Arc::new(q.clone());
        let f = FieldSpec::new(p).unwrap();
        let mut out: Vec<Rep> = type_a_intervals(&q, f).unwrap().into_iter().map(|(_, r)| r).collect();
        let sum = direct_sum(&q, f, &out).unwrap().sum;
        out.push(sum);
        out.push(Rep::zero(q, f));
        out
    }

    fn check(adj: &Adjunction, p: u32) {
        let a = samples(&adj.source_quiver(), p);
        let b = samples(&adj.target_quiver(), p);
        assert!(adj.check_triangles(&a, &b).unwrap(), "{}", adj.describe());
        for x in &a {
            for y in &b {
                assert!(adj.check_hom_bijection(x, y).unwrap(), "{}", adj.describe());
            }
        }
    }

    #[test]
    fn built_in_adjunctions_satisfy_triangles_and_hom_bijection() {
        check(&Adjunction::lan_res(Quiver::linear(2), &[0]).unwrap(), 2);
        check(&Adjunction::lan_res(Quiver::linear(2), &[1]).unwrap(), 3);
        check(&Adjunction::lan_res(Quiver::linear(3), &[0, 1]).unwrap(), 2);
        check(&Adjunction::lan_res(Quiver::linear(3), &[1, 2]).unwrap(), 2);
        check(&Adjunction::lan_res(Quiver::type_a(&[true, false]), &[0, 1]).unwrap(), 2);
        check(&Adjunction::lan_res(Quiver::type_a(&[false, true]), &[1]).unwrap(), 2);
        check(&Adjunction::relabel(Quiver::linear(2), &[1, 0]).unwrap(), 2);
        check(&Adjunction::identity(Quiver::linear(3)), 2);
    }

    #[test]
    fn composites_and_opposites() {
        let lan = Adjunction::lan_res(Quiver::linear(3), &[0, 1]).unwrap();
        let inner = Adjunction::lan_res(Quiver::linear(2), &[0]).unwrap();
        let comp = Adjunction::composite(inner, lan.clone()).unwrap();
        check(&comp, 2);
        check(&lan.opposite(), 2);
        check(&comp.opposite(), 2);
        let r = Adjunction::relabel(Quiver::linear(2), &[1, 0]).unwrap();
        let back = Adjunction::relabel(r.target_quiver(), &[1, 0]).unwrap();
        let round = Adjunction::composite(r, back).unwrap();
        for x in samples(&Quiver::linear(2), 2) {
            assert_eq!(round.left().apply(&x).unwrap(), x);
            assert!(round.unit(&x).unwrap().is_identity());
        }
        let id = Adjunction::identity(Quiver::linear(2)).opposite();
        for x in samples(&Quiver::linear(2).opposite(), 2) {
            assert!(id.unit(&x).unwrap().is_identity());
            assert!(id.counit(&x).unwrap().is_identity());
        }
        assert!(Adjunction::composite(lan.clone(), lan).is_err());
    }

    #[test]
    fn spec_parsing() {
        let a = AdjunctionSpec::parse("lan-res:0").unwrap().build(Some(&Quiver::linear(2))).unwrap();
        assert_eq!(a.source_quiver().vertex_count(), 1);
        let json = r#"{"kind":"lan-res","quiver":{"vertices":2,"arrows":[[0,1]]},"subset":[1]}"#;
        assert!(AdjunctionSpec::parse(json).unwrap().build(None).is_ok());
        let iso = AdjunctionSpec::parse(r#"{"kind":"iso","map":[1,0]}"#).unwrap();
        assert_eq!(iso.build(Some(&Quiver::linear(2))).unwrap().target_quiver().arrows(), &[(1, 0)]);
        assert!(AdjunctionSpec::parse(r#"{"kind":"iso","map":[1,0],"extra":1}"#).is_err());
        assert!(AdjunctionSpec::parse("lan-res:0").unwrap().build(None).is_err());
        assert!(AdjunctionSpec::parse("lan-res:0,2").unwrap().build(Some(&Quiver::linear(3))).is_err());
        assert!(AdjunctionSpec::parse("frobnicate:1").is_err());
        let id = AdjunctionSpec::parse("iso:identity").unwrap().build(Some(&Quiver::linear(2))).unwrap();
        assert!(id.is_equivalence());
        assert!(AdjunctionSpec::parse(r#"{"kind":"identity"}"#).is_ok());
        let nested = r#"{"kind":"opposite","of":{"kind":"composite","first":{"kind":"lan-res","subset":[0]},"second":{"kind":"iso","map":[1,0]}}}"#;
        let adj = AdjunctionSpec::parse(nested).unwrap().build(Some(&Quiver::linear(2))).unwrap();
        check(&adj, 2);
    }
}
