use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use preradical::adjunction::Adjunction;
use preradical::category::Category;
use preradical::indec::{barcode_equioriented, Interval};
use preradical::linalg::{annihilator, image_basis, kernel_basis, FieldSpec, Matrix, Subspace};
use preradical::preradical::{alpha, enumerate_preradicals, omega, Preradical};
use preradical::quiver::Quiver;
use preradical::rep::{direct_sum, dual_morphism, hom_basis, image_subrep, kernel_subrep, Rep, RepMorphism};
use preradical::Limits;

fn field(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0..p, rows * cols).prop_map(move |e| Matrix::new(field(p), rows, cols, e).unwrap())
}

fn a3() -> &'static (Arc<Category>, Vec<Preradical>) {
    static CELL: OnceLock<(Arc<Category>, Vec<Preradical>)> = OnceLock::new();
    CELL.get_or_init(|| {
        let cat = Category::type_a(Quiver::linear(3), field(3)).unwrap();
        let prs = enumerate_preradicals(&cat, &Limits::default()).unwrap();
        (cat, prs)
    })
}

fn sum_of(cat: &Category, picks: &[usize]) -> preradical::rep::DirectSum {
    let parts: Vec<Rep> = picks.iter().map(|&i| cat.rep(i % cat.len()).clone()).collect();
    direct_sum(cat.quiver(), cat.field(), &parts).unwrap()
}

fn combination(basis: &[RepMorphism], x: &Rep, y: &Rep, coeffs: &[u32]) -> RepMorphism {
    basis
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(RepMorphism::zero(x, y).unwrap(), |acc, (b, &c)| acc.add(&b.scale(c)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(m in matrix(3, 4, 5)) {
        prop_assert_eq!(kernel_basis(&m).dim() + image_basis(&m).dim(), 5);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rref_is_idempotent(m in matrix(5, 3, 4)) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(r, rr);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(2, 3, 4), b in matrix(2, 2, 4)) {
        let (u, w) = (Subspace::span(&a), Subspace::span(&b));
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains(&u).unwrap() && u.contains(&i).unwrap());
    }

    #[test]
    fn annihilator_is_an_order_reversing_involution(a in matrix(3, 2, 4), b in matrix(3, 2, 4)) {
        let (u, w) = (Subspace::span(&a), Subspace::span(&b));
        prop_assert_eq!(annihilator(&annihilator(&u)), u.clone());
        prop_assert_eq!(annihilator(&u).dim() + u.dim(), 4);
        let s = u.sum(&w).unwrap();
        prop_assert_eq!(annihilator(&s), annihilator(&u).intersect(&annihilator(&w)).unwrap());
    }

    #[test]
    fn barcode_recovers_interval_sums(picks in prop::collection::vec((0usize..4, 0usize..4), 0..5)) {
        let q = Arc::new(Quiver::linear(4));
        let f = field(2);
        let mut expected = BTreeMap::new();
        let mut parts = Vec::new();
        for (a, b) in picks {
            let iv = Interval::new(a.min(b), a.max(b)).unwrap();
            *expected.entry(iv).or_insert(0usize) += 1;
            parts.push(iv.rep(&q, f).unwrap());
        }
        let sum = direct_sum(&q, f, &parts).unwrap().sum;
        prop_assert_eq!(barcode_equioriented(&sum).unwrap(), expected);
    }

    #[test]
    fn direct_sum_biproduct(picks in prop::collection::vec(0usize..6, 1..4)) {
        let (cat, _) = a3();
        let ds = sum_of(cat, &picks);
        let mut total = RepMorphism::zero(&ds.sum, &ds.sum).unwrap();
        for (j, p) in ds.projections.iter().enumerate() {
            for (k, i) in ds.inclusions.iter().enumerate() {
                let c = p.compose(i).unwrap();
                let expected = if j == k { c.is_identity() } else { c.is_zero() };
                prop_assert!(expected);
            }
            total = total.add(&ds.inclusions[j].compose(p).unwrap()).unwrap();
        }
        prop_assert!(total.is_identity());
    }

    #[test]
    fn composition_and_duality(xs in prop::collection::vec(0usize..6, 1..3), ys in prop::collection::vec(0usize..6, 1..3), zs in prop::collection::vec(0usize..6, 1..3), coeffs in prop::collection::vec(0u32..3, 1..16)) {
        let (cat, _) = a3();
        let (x, y, z) = (sum_of(cat, &xs).sum, sum_of(cat, &ys).sum, sum_of(cat, &zs).sum);
        let f = combination(&hom_basis(&x, &y).unwrap(), &x, &y, &coeffs);
        let g = combination(&hom_basis(&y, &z).unwrap(), &y, &z, &coeffs[1..].iter().chain(&coeffs[..1]).copied().collect::<Vec<_>>());
        let gf = g.compose(&f).unwrap();
        prop_assert!(RepMorphism::new(x.clone(), z.clone(), gf.components().to_vec()).is_ok());
        prop_assert_eq!(image_subrep(&f).annihilator(), kernel_subrep(&dual_morphism(&f)));
        prop_assert_eq!(dual_morphism(&dual_morphism(&f)), f.clone());
        prop_assert_eq!(dual_morphism(&f).is_epi(), f.is_mono());
    }

    #[test]
    fn evaluate_on_sums_is_vertexwise(picks in prop::collection::vec(0usize..6, 1..4), which in 0usize..64) {
        let (cat, prs) = a3();
        let pr = &prs[which % prs.len()];
        let ds = sum_of(cat, &picks);
        let mut expected = preradical::rep::Subrep::zero(&ds.sum);
        for (inc, &i) in ds.inclusions.iter().zip(&picks) {
            expected = expected.sum(&inc.push_forward(pr.value(i % cat.len())).unwrap()).unwrap();
        }
        prop_assert_eq!(pr.evaluate(&ds.sum).unwrap(), expected);
    }

    #[test]
    fn alpha_of_isomorphism_is_alpha_of_identity(picks in prop::collection::vec(0usize..6, 1..4), coeffs in prop::collection::vec(0u32..3, 1..16)) {
        let (cat, _) = a3();
        let x = sum_of(cat, &picks).sum;
        let h = combination(&hom_basis(&x, &x).unwrap(), &x, &x, &coeffs);
        prop_assume!(h.is_iso());
        prop_assert_eq!(alpha(cat, &h).unwrap(), alpha(cat, &x.identity()).unwrap());
        prop_assert!(alpha(cat, &h).unwrap().is_idempotent());
        prop_assert!(omega(cat, &h).unwrap().is_radical());
    }

    #[test]
    fn delta_exchanges_alpha_and_omega(xs in prop::collection::vec(0usize..6, 1..3), ys in prop::collection::vec(0usize..6, 1..3), coeffs in prop::collection::vec(0u32..3, 1..16)) {
        let (cat, _) = a3();
        let (x, y) = (sum_of(cat, &xs).sum, sum_of(cat, &ys).sum);
        let k = combination(&hom_basis(&x, &y).unwrap(), &x, &y, &coeffs);
        let op = cat.opposite();
        let kop = dual_morphism(&k);
        prop_assert_eq!(alpha(cat, &k).unwrap().delta(), omega(&op, &kop).unwrap());
        prop_assert_eq!(omega(cat, &k).unwrap().delta(), alpha(&op, &kop).unwrap());
    }

    #[test]
    fn delta_identities(i in 0usize..64, j in 0usize..64) {
        let (_, prs) = a3();
        let (s, t) = (&prs[i % prs.len()], &prs[j % prs.len()]);
        prop_assert_eq!(s.coproduct(t).unwrap().delta(), t.delta().product(&s.delta()).unwrap());
        prop_assert_eq!(t.product(s).unwrap().delta(), s.delta().coproduct(&t.delta()).unwrap());
        prop_assert_eq!(s.is_radical(), s.delta().is_idempotent());
        prop_assert!(s.leq(&s.coproduct(t).unwrap()).unwrap());
        prop_assert!(t.product(s).unwrap().leq(s).unwrap());
    }

    #[test]
    fn triangles_on_random_sums(picks in prop::collection::vec(0usize..6, 0..4), small in prop::collection::vec(0usize..3, 0..3)) {
        let (cat, _) = a3();
        let b = sum_of(cat, &picks).sum;
        let adj = Adjunction::lan_res(Quiver::linear(3), &[0, 1]).unwrap();
        let sub = Category::type_a(adj.source_quiver(), cat.field()).unwrap();
        let a = sum_of(&sub, &small).sum;
        prop_assert!(adj.check_triangles(std::slice::from_ref(&a), std::slice::from_ref(&b)).unwrap());
        prop_assert!(adj.check_hom_bijection(&a, &b).unwrap());
    }
}
