//! The Galois connection between preradical lattices induced by an adjoint pair.

use std::sync::Arc;

use crate::adjunction::Adjunction;
use crate::category::Category;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::preradical::{alpha, enumerate_preradicals, join, meet, omega, Preradical};
use crate::rep::{quotient_rep, sub_to_rep, Subrep};
use crate::report::Report;

/// An adjunction together with the categories on both sides.
#[derive(Debug, Clone)]
pub struct InducedGalois {
    adjunction: Adjunction,
    source: Arc<Category>,
    target: Arc<Category>,
}

impl InducedGalois {
    pub fn new(adjunction: Adjunction, source: Arc<Category>, target: Arc<Category>) -> Result<InducedGalois> {
        if source.quiver().as_ref() != &adjunction.source_quiver()
            || target.quiver().as_ref() != &adjunction.target_quiver()
        {
            return Err(Error::Mismatch("categories do not match the adjunction".into()));
        }
        if source.field() != target.field() {
            return Err(Error::Mismatch("categories over different fields".into()));
        }
        Ok(InducedGalois { adjunction, source, target })
    }

    /// Type-A categories on both sides.
    pub fn type_a(adjunction: Adjunction, field: crate::linalg::FieldSpec) -> Result<InducedGalois> {
        let source = Category::type_a(adjunction.source_quiver(), field)?;
        let target = Category::type_a(adjunction.target_quiver(), field)?;
        InducedGalois::new(adjunction, source, target)
    }

    pub fn adjunction(&self) -> &Adjunction {
        &self.adjunction
    }

    pub fn source(&self) -> &Arc<Category> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Category> {
        &self.target
    }

    /// The connection induced by the opposite adjunction, between the
    /// opposite categories (source and target exchange roles).
    pub fn opposite(&self) -> InducedGalois {
        InducedGalois {
            adjunction: self.adjunction.opposite(),
            source: self.target.opposite(),
            target: self.source.opposite(),
        }
    }

    /// `φ(τ)(B) = Im(ε_B ∘ F(τ(GB) ↪ GB))`.
    pub fn phi(&self, tau: &Preradical) -> Result<Preradical> {
        if tau.category().as_ref() != self.source.as_ref() {
            return Err(Error::Mismatch("φ expects a preradical of the source category".into()));
        }
        let values = self
            .target
            .indecomposables()
            .iter()
            .map(|b| {
                let gb = self.adjunction.right().apply(&b.rep)?;
                let (_, inclusion) = sub_to_rep(&tau.evaluate(&gb)?);
                let image = self.adjunction.counit(&b.rep)?.compose(&self.adjunction.left().apply_morphism(&inclusion)?)?.image();
                Ok(rehome(image, &b.rep))
            })
            .collect::<Result<Vec<_>>>()?;
        Preradical::new(self.target.clone(), values)
    }

    /// `ψ(σ)(A) = Ker(G(FA ↠ FA/σ(FA)) ∘ η_A)`.
    pub fn psi(&self, sigma: &Preradical) -> Result<Preradical> {
        if sigma.category().as_ref() != self.target.as_ref() {
            return Err(Error::Mismatch("ψ expects a preradical of the target category".into()));
        }
        let values = self
            .source
            .indecomposables()
            .iter()
            .map(|a| {
                let fa = self.adjunction.left().apply(&a.rep)?;
                let (_, projection) = quotient_rep(&fa, &sigma.evaluate(&fa)?)?;
                let kernel = self.adjunction.right().apply_morphism(&projection)?.compose(&self.adjunction.unit(&a.rep)?)?.kernel();
                Ok(rehome(kernel, &a.rep))
            })
            .collect::<Result<Vec<_>>>()?;
        Preradical::new(self.source.clone(), values)
    }

    /// Enumerates both lattices and runs every check.
    pub fn check(&self, limits: &Limits) -> Result<GaloisReport> {
        let pa = enumerate_preradicals(&self.source, limits)?;
        let pb = enumerate_preradicals(&self.target, limits)?;
        self.check_on(&pa, &pb)
    }

    /// Exhaustive checks of the Galois axioms over the supplied lattices.
    pub fn check_on(&self, pa: &[Preradical], pb: &[Preradical]) -> Result<GaloisReport> {
        let phi: Vec<Preradical> = pa.iter().map(|t| self.phi(t)).collect::<Result<_>>()?;
        let psi: Vec<Preradical> = pb.iter().map(|s| self.psi(s)).collect::<Result<_>>()?;
        let psi_phi: Vec<Preradical> = phi.iter().map(|t| self.psi(t)).collect::<Result<_>>()?;
        let phi_psi: Vec<Preradical> = psi.iter().map(|s| self.phi(s)).collect::<Result<_>>()?;
        let mut report = GaloisReport::default();

        let mut failures = Vec::new();
        for (i, j) in pairs(pa.len()) {
            if pa[i].leq(&pa[j])? && !phi[i].leq(&phi[j])? {
                failures.push(format!("source #{i} ≤ #{j} but φ reverses"));
            }
        }
        report.push("φ is monotone", failures);

        let mut failures = Vec::new();
        for (i, j) in pairs(pb.len()) {
            if pb[i].leq(&pb[j])? && !psi[i].leq(&psi[j])? {
                failures.push(format!("target #{i} ≤ #{j} but ψ reverses"));
            }
        }
        report.push("ψ is monotone", failures);

        let failures = collect(pa.len(), |i| Ok(!pa[i].leq(&psi_phi[i])?), "source")?;
        report.push("τ ≤ ψφτ", failures);
        let failures = collect(pb.len(), |i| Ok(!phi_psi[i].leq(&pb[i])?), "target")?;
        report.push("φψσ ≤ σ", failures);
        let failures = collect(pa.len(), |i| Ok(self.phi(&psi_phi[i])? != phi[i]), "source")?;
        report.push("φψφ = φ", failures);
        let failures = collect(pb.len(), |i| Ok(self.psi(&phi_psi[i])? != psi[i]), "target")?;
        report.push("ψφψ = ψ", failures);

        let zero_ok = self.phi(&Preradical::zero(&self.source))?.is_zero();
        report.push("φ(0) = 0", if zero_ok { vec![] } else { vec!["φ(0) ≠ 0".into()] });
        let one_ok = self.psi(&Preradical::one(&self.target))?.is_one();
        report.push("ψ(1) = 1", if one_ok { vec![] } else { vec!["ψ(1) ≠ 1".into()] });

        let mut failures = Vec::new();
        for i in 0..pa.len() {
            for j in 0..pb.len() {
                if phi[i].leq(&pb[j])? != pa[i].leq(&psi[j])? {
                    failures.push(format!("source #{i}, target #{j}"));
                }
            }
        }
        report.push("φτ ≤ σ ⇔ τ ≤ ψσ", failures);

        let failures = collect(pa.len(), |i| Ok(pa[i].is_idempotent() && !phi[i].is_idempotent()), "source")?;
        report.push("φ preserves idempotents", failures);
        let failures = collect(pb.len(), |i| Ok(pb[i].is_radical() && !psi[i].is_radical()), "target")?;
        report.push("ψ preserves radicals", failures);

        let mut failures = Vec::new();
        for (i, j) in pairs(pa.len()) {
            let lhs = self.phi(&join(&self.source, &[pa[i].clone(), pa[j].clone()])?)?;
            if lhs != join(&self.target, &[phi[i].clone(), phi[j].clone()])? {
                failures.push(format!("source #{i} ∨ #{j}"));
            }
        }
        report.push("φ preserves joins", failures);

        let mut failures = Vec::new();
        for (i, j) in pairs(pb.len()) {
            let lhs = self.psi(&meet(&self.target, &[pb[i].clone(), pb[j].clone()])?)?;
            if lhs != meet(&self.source, &[psi[i].clone(), psi[j].clone()])? {
                failures.push(format!("target #{i} ∧ #{j}"));
            }
        }
        report.push("ψ preserves meets", failures);
        Ok(report)
    }

    /// `φ(α_h) = α_{F(h)}` for identities and hom-basis morphisms between
    /// source indecomposables; `ψ(ω_k) = ω_{G(k)}` likewise on the target.
    pub fn check_alpha_omega_transport(&self) -> Result<GaloisReport> {
        let mut report = GaloisReport::default();
        let mut failures = Vec::new();
        for (h, label) in generating_sample(&self.source) {
            let lhs = self.phi(&alpha(&self.source, &h)?)?;
            let rhs = alpha(&self.target, &self.adjunction.left().apply_morphism(&h)?)?;
            if lhs != rhs {
                failures.push(label);
            }
        }
        report.push("φ(α_h) = α_{F(h)}", failures);
        let mut failures = Vec::new();
        for (k, label) in generating_sample(&self.target) {
            let lhs = self.psi(&omega(&self.target, &k)?)?;
            let rhs = omega(&self.source, &self.adjunction.right().apply_morphism(&k)?)?;
            if lhs != rhs {
                failures.push(label);
            }
        }
        report.push("ψ(ω_k) = ω_{G(k)}", failures);
        Ok(report)
    }

    /// Duality squares: `Δ(φτ) = ψ̄(Δτ)` and `Δ(ψσ) = φ̄(Δσ)`, where `(φ̄, ψ̄)`
    /// comes from the opposite adjunction.
    pub fn check_opposite_squares(&self, pa: &[Preradical], pb: &[Preradical]) -> Result<GaloisReport> {
        let op = self.opposite();
        let mut report = GaloisReport::default();
        let failures = collect(pa.len(), |i| Ok(self.phi(&pa[i])?.delta() != op.psi(&pa[i].delta())?), "source")?;
        report.push("Δ∘φ = ψ̄∘Δ", failures);
        let failures = collect(pb.len(), |i| Ok(self.psi(&pb[i])?.delta() != op.phi(&pb[i].delta())?), "target")?;
        report.push("Δ∘ψ = φ̄∘Δ", failures);
        Ok(report)
    }
}

/// Moves a subobject onto an equal representation held by another category.
fn rehome(w: Subrep, ambient: &crate::rep::Rep) -> Subrep {
    if w.ambient() == ambient {
        return w;
    }
    Subrep::new(ambient.clone(), w.spaces().to_vec()).expect("ambient representations agree")
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

fn collect(n: usize, mut bad: impl FnMut(usize) -> Result<bool>, side: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for i in 0..n {
        if bad(i)? {
            out.push(format!("{side} #{i}"));
        }
    }
    Ok(out)
}

/// Identities of all indecomposables and all hom-basis morphisms between them.
fn generating_sample(cat: &Category) -> Vec<(crate::rep::RepMorphism, String)> {
    let mut out = Vec::new();
    for (i, n) in cat.indecomposables().iter().enumerate() {
        out.push((n.rep.identity(), format!("1_{}", n.name)));
        for (j, m) in cat.indecomposables().iter().enumerate() {
            for (k, f) in cat.hom(i, j).iter().enumerate() {
                out.push((f.clone(), format!("{}→{} #{k}", n.name, m.name)));
            }
        }
    }
    out
}

pub type GaloisReport = Report;
