//! Exhaustive verification suites over enumerated preradical lattices.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::adjunction::Adjunction;
use crate::category::Category;
use crate::error::{Error, Result};
use crate::galois::InducedGalois;
use crate::labels::{a2_name, display_label, LabelDictionary};
use crate::lattice::{build_poset, verify_lattice_laws};
use crate::limits::Limits;
use crate::linalg::FieldSpec;
use crate::preradical::{alpha, enumerate_preradicals, join, meet, omega, Preradical};
use crate::quiver::Quiver;
use crate::rep::{direct_sum, dual_morphism, hom_basis, Rep, RepMorphism};
use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Order,
    Delta,
    AlphaOmega,
    Joins,
    Galois,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Order, Suite::Delta, Suite::AlphaOmega, Suite::Joins, Suite::Galois, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Order => "order",
            Suite::Delta => "delta",
            Suite::AlphaOmega => "alpha-omega",
            Suite::Joins => "joins",
            Suite::Galois => "galois",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub field: FieldSpec,
    pub limits: Limits,
    pub seed: u64,
    /// Random morphisms drawn per category by the sampling checks.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { field: FieldSpec::new(2).expect("2 is prime"), limits: Limits::default(), seed: 0x5eed, samples: 12 }
    }
}

/// The quivers a suite runs on: `given` (or `A_2`) and equioriented `A_3`.
pub fn default_quivers(given: Option<&Quiver>) -> Vec<Quiver> {
    let mut out = vec![given.cloned().unwrap_or_else(|| Quiver::linear(2))];
    if !out.contains(&Quiver::linear(3)) {
        out.push(Quiver::linear(3));
    }
    out
}

/// Every built-in adjunction with `quiver` as the larger side: restriction
/// along each proper interval of vertices, the identity, the vertex reversal,
/// a composite, and the opposites of all of these.
pub fn builtin_adjunctions(quiver: &Quiver) -> Result<Vec<Adjunction>> {
    let n = quiver.vertex_count();
    let mut out = Vec::new();
    for lo in 0..n {
        for hi in lo..n {
            if hi - lo + 1 < n {
                let subset: Vec<usize> = (lo..=hi).collect();
                out.push(Adjunction::lan_res(quiver.clone(), &subset)?);
            }
        }
    }
    out.push(Adjunction::identity(quiver.clone()));
    let reversal: Vec<usize> = (0..n).rev().collect();
    out.push(Adjunction::relabel(quiver.clone(), &reversal)?);
    if n >= 2 {
        let prefix: Vec<usize> = (0..n - 1).collect();
        out.push(Adjunction::composite(
            Adjunction::lan_res(quiver.clone(), &prefix)?,
            Adjunction::relabel(quiver.clone(), &reversal)?,
        )?);
    }
    let opposites: Vec<Adjunction> = out.iter().map(Adjunction::opposite).collect();
    out.extend(opposites);
    Ok(out)
}

/// Short name of a quiver such as `A3[0→1,1→2]`.
pub fn quiver_name(q: &Quiver) -> String {
    let arrows: Vec<String> = q.arrows().iter().map(|(s, t)| format!("{s}→{t}")).collect();
    format!("A{}[{}]", q.vertex_count(), arrows.join(","))
}

/// Runs `suite` on each quiver; check names are prefixed with the quiver.
pub fn run_suite(suite: Suite, quivers: &[Quiver], opts: &VerifyOptions) -> Result<Report> {
    let mut cache = Lattices::new(opts);
    let mut report = Report::default();
    for q in quivers {
        let cat = Category::type_a(q.clone(), opts.field)?;
        let mut r = Report::default();
        let selected: Vec<Suite> = match suite {
            Suite::All => Suite::ALL[..5].to_vec(),
            s => vec![s],
        };
        for s in selected {
            let part = match s {
                Suite::Order => order_suite(&cat, &mut cache)?,
                Suite::Delta => delta_suite(&cat, &mut cache)?,
                Suite::AlphaOmega => alpha_omega_suite(&cat, &mut cache)?,
                Suite::Joins => joins_suite(&cat, &mut cache)?,
                Suite::Galois => galois_suite(q, &mut cache)?,
                Suite::All => unreachable!(),
            };
            for mut c in part.checks {
                c.name = format!("{s}: {}", c.name);
                r.checks.push(c);
            }
        }
        for mut c in r.checks {
            c.name = format!("{} {}", quiver_name(q), c.name);
            report.checks.push(c);
        }
    }
    Ok(report)
}

struct Lattices {
    opts: VerifyOptions,
    entries: Vec<(Arc<Category>, Arc<Vec<Preradical>>)>,
}

impl Lattices {
    fn new(opts: &VerifyOptions) -> Lattices {
        Lattices { opts: *opts, entries: Vec::new() }
    }

    fn get(&mut self, cat: &Arc<Category>) -> Result<Arc<Vec<Preradical>>> {
        if let Some((_, prs)) = self.entries.iter().find(|(c, _)| c.as_ref() == cat.as_ref()) {
            return Ok(prs.clone());
        }
        let prs = Arc::new(enumerate_preradicals(cat, &self.opts.limits)?);
        self.entries.push((cat.clone(), prs.clone()));
        Ok(prs)
    }
}

fn name(pr: &Preradical) -> String {
    a2_name(pr).map(|(a, _)| a.to_string()).unwrap_or_else(|| display_label(pr))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

fn order_suite(cat: &Arc<Category>, cache: &mut Lattices) -> Result<Report> {
    let prs = cache.get(cat)?;
    let n = prs.len();
    let set: HashSet<&Preradical> = prs.iter().collect();
    let leq: Vec<Vec<bool>> = prs.iter().map(|a| prs.iter().map(|b| a.leq(b)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    let mut report = Report::default();

    let mut bad = Vec::new();
    for i in 0..n {
        if !leq[i][i] {
            bad.push(format!("{} ≰ itself", name(&prs[i])));
        }
        for j in 0..n {
            if i != j && leq[i][j] && leq[j][i] {
                bad.push(format!("{} and {} are mutually below", name(&prs[i]), name(&prs[j])));
            }
            for k in 0..n {
                if leq[i][j] && leq[j][k] && !leq[i][k] {
                    bad.push(format!("transitivity fails at ({i},{j},{k})"));
                }
            }
        }
    }
    report.push("≤ is a partial order", bad);

    let zero = Preradical::zero(cat);
    let one = Preradical::one(cat);
    let mut bad = Vec::new();
    for p in prs.iter() {
        if !zero.leq(p)? || !p.leq(&one)? {
            bad.push(name(p));
        }
    }
    report.push("0 and 1 bound the lattice", bad);

    let hasse = build_poset(&prs)?;
    for c in verify_lattice_laws(&hasse, None)?.checks {
        report.checks.push(c);
    }

    let mut below = Vec::new();
    let mut closure = Vec::new();
    for (i, j) in pairs(n) {
        let (sigma, tau) = (&prs[i], &prs[j]);
        let co = sigma.coproduct(tau)?;
        let pr = tau.product(sigma)?;
        if !sigma.leq(&co)? || !pr.leq(sigma)? {
            below.push(format!("σ={}, τ={}", name(sigma), name(tau)));
        }
        if !set.contains(&co) || !set.contains(&pr) {
            closure.push(format!("σ={}, τ={}", name(sigma), name(tau)));
        }
    }
    report.push("σ ≤ (σ:τ) and τ·σ ≤ σ", below);
    report.push("closure under product and coproduct", closure);
    Ok(report)
}

fn delta_suite(cat: &Arc<Category>, cache: &mut Lattices) -> Result<Report> {
    let prs = cache.get(cat)?;
    let op = cat.opposite();
    let prs_op = cache.get(&op)?;
    let n = prs.len();
    let deltas: Vec<Preradical> = prs.iter().map(Preradical::delta).collect();
    let mut report = Report::default();

    let image: HashSet<&Preradical> = deltas.iter().collect();
    let target: HashSet<&Preradical> = prs_op.iter().collect();
    report.check("Δ is a bijection onto the opposite lattice", image == target && image.len() == n, || {
        format!("{} images, {} distinct, opposite lattice has {}", n, image.len(), prs_op.len())
    });

    let bad: Vec<String> = (0..n).filter(|&i| deltas[i].delta() != prs[i]).map(|i| name(&prs[i])).collect();
    report.push("Δ⁻¹∘Δ = id", bad);

    let mut reversing = Vec::new();
    let mut co = Vec::new();
    let mut pr = Vec::new();
    for (i, j) in pairs(n) {
        let (sigma, tau) = (&prs[i], &prs[j]);
        if sigma.leq(tau)? != deltas[j].leq(&deltas[i])? {
            reversing.push(format!("σ={}, τ={}", name(sigma), name(tau)));
        }
        if sigma.coproduct(tau)?.delta() != deltas[j].product(&deltas[i])? {
            co.push(format!("σ={}, τ={}", name(sigma), name(tau)));
        }
        if tau.product(sigma)?.delta() != deltas[i].coproduct(&deltas[j])? {
            pr.push(format!("σ={}, τ={}", name(sigma), name(tau)));
        }
    }
    report.push("σ ≤ τ ⇔ Δτ ≤ Δσ", reversing);
    report.push("Δ(σ:τ) = Δτ·Δσ", co);
    report.push("Δ(τ·σ) = (Δσ:Δτ)", pr);

    let bad: Vec<String> = (0..n)
        .filter(|&i| prs[i].is_radical() != deltas[i].is_idempotent() || prs[i].is_idempotent() != deltas[i].is_radical())
        .map(|i| name(&prs[i]))
        .collect();
    report.push("radical ⇔ Δ idempotent, idempotent ⇔ Δ radical", bad);
    Ok(report)
}

fn random_combination(basis: &[RepMorphism], x: &Rep, y: &Rep, rng: &mut StdRng) -> Result<RepMorphism> {
    let p = x.field().p();
    let mut f = RepMorphism::zero(x, y)?;
    for b in basis {
        f = f.add(&b.scale(rng.gen_range(0..p)))?;
    }
    Ok(f)
}

fn random_sum(cat: &Category, rng: &mut StdRng) -> Result<Rep> {
    let k = rng.gen_range(1..=3);
    let parts: Vec<Rep> = (0..k).map(|_| cat.rep(rng.gen_range(0..cat.len())).clone()).collect();
    Ok(direct_sum(cat.quiver(), cat.field(), &parts)?.sum)
}

fn alpha_omega_suite(cat: &Arc<Category>, cache: &mut Lattices) -> Result<Report> {
    let prs = cache.get(cat)?;
    let set: HashSet<&Preradical> = prs.iter().collect();
    let op = cat.opposite();
    let mut report = Report::default();

    let mut from_alpha = Vec::new();
    let mut from_omega = Vec::new();
    let mut idem = Vec::new();
    let mut rad = Vec::new();
    for p in prs.iter() {
        if p.reconstruct_from_alpha()? != *p {
            from_alpha.push(name(p));
        }
        if p.reconstruct_from_omega()? != *p {
            from_omega.push(name(p));
        }
        if p.is_idempotent() != (p.generated_by_t_class()? == *p) {
            idem.push(name(p));
        }
        if p.is_radical() != (p.cogenerated_by_f_class()? == *p) {
            rad.push(name(p));
        }
    }
    report.push("τ = ⋁ α over the values of τ", from_alpha);
    report.push("τ = ⋀ ω over the quotients by τ", from_omega);
    report.push("idempotent ⇔ τ = ⋁_{T_τ} α_1", idem);
    report.push("radical ⇔ τ = ⋀_{F_τ} ω_1", rad);

    let mut marks = Vec::new();
    let mut closure = Vec::new();
    for i in 0..cat.len() {
        let id = cat.rep(i).identity();
        let (a, o) = (alpha(cat, &id)?, omega(cat, &id)?);
        if !a.is_idempotent() || !o.is_radical() {
            marks.push(cat.indec(i).name.clone());
        }
        if !set.contains(&a) || !set.contains(&o) {
            closure.push(format!("identity of {}", cat.indec(i).name));
        }
    }
    let mut duality = Vec::new();
    for (i, j) in pairs(cat.len()) {
        for (b, k) in cat.hom(i, j).iter().enumerate() {
            let (a, o) = (alpha(cat, k)?, omega(cat, k)?);
            if !set.contains(&a) || !set.contains(&o) {
                closure.push(format!("basis morphism {b} of Hom({},{})", cat.indec(i).name, cat.indec(j).name));
            }
            let kop = dual_morphism(k);
            if a.delta() != omega(&op, &kop)? || o.delta() != alpha(&op, &kop)? {
                duality.push(format!("basis morphism {b} of Hom({},{})", cat.indec(i).name, cat.indec(j).name));
            }
        }
    }
    report.push("α_1 is idempotent and ω_1 is radical", marks);

    let mut rng = StdRng::seed_from_u64(cache.opts.seed);
    let mut iso = Vec::new();
    for s in 0..cache.opts.samples {
        let x = random_sum(cat, &mut rng)?;
        let y = random_sum(cat, &mut rng)?;
        let k = random_combination(&hom_basis(&x, &y)?, &x, &y, &mut rng)?;
        let kop = dual_morphism(&k);
        if alpha(cat, &k)?.delta() != omega(&op, &kop)? || omega(cat, &k)?.delta() != alpha(&op, &kop)? {
            duality.push(format!("random morphism {s}"));
        }
        let ends = hom_basis(&x, &x)?;
        let h = (0..64).map(|_| random_combination(&ends, &x, &x, &mut rng)).find(|h| h.as_ref().map(RepMorphism::is_iso).unwrap_or(true));
        if let Some(h) = h {
            if alpha(cat, &h?)? != alpha(cat, &x.identity())? {
                iso.push(format!("random isomorphism {s}"));
            }
        }
    }
    report.push("α and ω of identities and hom bases stay in the lattice", closure);
    report.push("Δα_k = ω_{k^op} and Δω_k = α_{k^op}", duality);
    report.push("α_h = α_1 for isomorphisms h", iso);

    let dict = LabelDictionary::structural(cat);
    if dict.is_a2() {
        let s1 = cat.rep(dict.index_of("S₁").expect("A2 names"));
        let s2 = cat.rep(dict.index_of("S₂").expect("A2 names"));
        let a = alpha(cat, &s1.identity())?;
        let o = omega(cat, &s2.identity())?;
        report.check("α(1_S₁) = ω(1_S₂) = [0,S₁,S₁]", a == o && a2_name(&a) == Some(("omega", "ω")), || {
            format!("α = {}, ω = {}", name(&a), name(&o))
        });
    }
    Ok(report)
}

fn joins_suite(cat: &Arc<Category>, cache: &mut Lattices) -> Result<Report> {
    let prs = cache.get(cat)?;
    let set: HashSet<&Preradical> = prs.iter().collect();
    let n = prs.len();
    let mut report = Report::default();

    let mut closure = Vec::new();
    for (i, j) in pairs(n) {
        let pair = [prs[i].clone(), prs[j].clone()];
        if !set.contains(&join(cat, &pair)?) || !set.contains(&meet(cat, &pair)?) {
            closure.push(format!("{} and {}", name(&prs[i]), name(&prs[j])));
        }
    }
    report.push("closure under binary join and meet", closure);

    if n <= 12 {
        let mut closure = Vec::new();
        for mask in 0u32..(1 << n) {
            let family: Vec<Preradical> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| prs[i].clone()).collect();
            if !set.contains(&join(cat, &family)?) || !set.contains(&meet(cat, &family)?) {
                closure.push(format!("subset {mask:#b}"));
            }
        }
        report.push("closure under join and meet of every subset", closure);
    }

    let idempotents: Vec<&Preradical> = prs.iter().filter(|p| p.is_idempotent()).collect();
    let radicals: Vec<&Preradical> = prs.iter().filter(|p| p.is_radical()).collect();
    let mut bad = Vec::new();
    for family in small_families(&idempotents, 3) {
        if !join(cat, &family)?.is_idempotent() {
            bad.push(family.iter().map(name).collect::<Vec<_>>().join(" ∨ "));
        }
    }
    report.push("joins of idempotents are idempotent", bad);
    let mut bad = Vec::new();
    for family in small_families(&radicals, 3) {
        if !meet(cat, &family)?.is_radical() {
            bad.push(family.iter().map(name).collect::<Vec<_>>().join(" ∧ "));
        }
    }
    report.push("meets of radicals are radical", bad);
    Ok(report)
}

/// All families of at most `k` distinct members, including the empty one.
fn small_families(items: &[&Preradical], k: usize) -> Vec<Vec<Preradical>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<Preradical>)> = vec![(0, Vec::new())];
    for _ in 0..k {
        let mut next = Vec::new();
        for (start, fam) in &frontier {
            for (i, p) in items.iter().enumerate().skip(*start) {
                let mut f = fam.clone();
                f.push((*p).clone());
                out.push(f.clone());
                next.push((i + 1, f));
            }
        }
        frontier = next;
    }
    out
}

fn galois_suite(quiver: &Quiver, cache: &mut Lattices) -> Result<Report> {
    let mut report = Report::default();
    for adj in builtin_adjunctions(quiver)? {
        let label = adj.describe();
        let equivalence = adj.is_equivalence();
        let g = InducedGalois::type_a(adj, cache.opts.field)?;
        let pa = cache.get(g.source())?;
        let pb = cache.get(g.target())?;
        let mut part = g.check_on(&pa, &pb)?;
        part.extend(g.check_alpha_omega_transport()?);
        part.extend(g.check_opposite_squares(&pa, &pb)?);

        let in_a: HashSet<&Preradical> = pa.iter().collect();
        let in_b: HashSet<&Preradical> = pb.iter().collect();
        let phi: Vec<Preradical> = pa.iter().map(|t| g.phi(t)).collect::<Result<_>>()?;
        let psi: Vec<Preradical> = pb.iter().map(|s| g.psi(s)).collect::<Result<_>>()?;
        let mut closure: Vec<String> = phi.iter().filter(|p| !in_b.contains(p)).map(|p| format!("φ gives {}", name(p))).collect();
        closure.extend(psi.iter().filter(|p| !in_a.contains(p)).map(|p| format!("ψ gives {}", name(p))));
        part.push("φ and ψ stay in the lattices", closure);

        if equivalence {
            let mut bad = Vec::new();
            for (i, t) in pa.iter().enumerate() {
                if g.psi(&phi[i])? != *t {
                    bad.push(format!("ψφ({})", name(t)));
                }
            }
            for (i, s) in pb.iter().enumerate() {
                if g.phi(&psi[i])? != *s {
                    bad.push(format!("φψ({})", name(s)));
                }
            }
            part.push("φ and ψ are mutually inverse", bad);
        }
        for mut c in part.checks {
            c.name = format!("{label}: {}", c.name);
            report.checks.push(c);
        }
    }
    Ok(report)
}
