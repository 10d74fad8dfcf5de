//! Acceptance suite: one test per criterion, one pass/fail line each.
//!
//! Run with `cargo test -p ceva --test acceptance -- --nocapture` to see the
//! per-criterion lines; the harness prints them on failure regardless.

mod common;

use std::time::Instant;

use ceva::extgroup::{ExtReal, SUBGROUP_T};
use ceva::matrices::{self, CevaMatrix};
use ceva::operator::{
    self, apply, apply_hajja, is_automedian, iterate, reconstruct, right_ceva_param, similarity,
    SimilarityRelation,
};
use ceva::oracle;
use ceva::triangle::Triangle;
use ceva::unitgroup::UnitParam;
use common::{random_scalene, random_triangle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pass(n: u32, what: &str) {
    println!("criterion {n:02} PASS — {what}");
}

fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

#[test]
fn criterion_01_example_12_4_fixture() {
    let started = Instant::now();
    let t = Triangle::new(8.0, 9.0, 12.0).unwrap();

    assert!(rel_err(t.kappa().as_finite().unwrap(), 17.0 / 80.0) <= 1e-12, "kappa");
    let (mu, nu) = t.mu_nu().unwrap();
    assert!(rel_err(mu.value(), 1.0 / 9.0) <= 1e-12, "mu");
    assert!(rel_err(nu.value(), 10.0 / 17.0) <= 1e-12, "nu");
    let (partner, inside) = operator::iota(&t, UnitParam::HALF).unwrap();
    assert!(inside && rel_err(partner.value(), 97.0 / 143.0) <= 1e-12, "iota(1/2)");

    let median = apply(&t, ExtReal::finite(0.5));
    let [x2, y2, z2] = median.squared().components();
    assert!((x2 - 73.0 / 2.0).abs() <= 1e-9, "median x^2");
    assert!((y2 - 335.0 / 4.0).abs() <= 1e-9, "median y^2");
    assert!((z2 - 193.0 / 2.0).abs() <= 1e-9, "median z^2");

    // certify the 335/4 middle value by the independent coordinate oracle
    let (ox, oy, oz) = oracle::cevian_lengths(&oracle::embed(&t), 0.5);
    assert!((ox * ox - 73.0 / 2.0).abs() <= 1e-9, "oracle x^2");
    assert!((oy * oy - 335.0 / 4.0).abs() <= 1e-9, "oracle y^2");
    assert!((oz * oz - 193.0 / 2.0).abs() <= 1e-9, "oracle z^2");

    let mirror = apply(&t, partner.to_ext());
    let rel = similarity(&median, &mirror);
    assert!(rel.is_reverse() && !rel.is_direct(), "reverse relation, got {rel:?}");
    assert!((rel.ratio().unwrap() - 143.0 / 146.0).abs() <= 1e-9, "reverse ratio");

    assert!(started.elapsed().as_secs_f64() < 1.0, "runtime");
    pass(1, "Example 12.4 fixture: kappa, mu, nu, iota(1/2), median squares, reverse ratio");
}

#[test]
fn criterion_02_table_1_reproduction() {
    // the □-table on 𝕋 in the order (0, 1/2, 1, 2, ∞, −1) is a left shift
    let expect: [[ExtReal; 6]; 6] =
        core::array::from_fn(|i| core::array::from_fn(|j| SUBGROUP_T[(i + j) % 6]));
    for (i, &row) in SUBGROUP_T.iter().enumerate() {
        for (j, &col) in SUBGROUP_T.iter().enumerate() {
            let got = row.box_op(col);
            assert_eq!(got, expect[i][j], "T[{i}][{j}]: {row} box {col}");
        }
    }
    pass(2, "Table 1: all 36 products on the order-6 subgroup match symbolically");
}

#[test]
fn criterion_03_brocard_cone_identity() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let t = random_triangle(&mut rng);
        let w = t.brocard_angle().tan();
        let g = t.cone_angle().tan();
        worst = worst.max((3.0 * w * w + 2.0 * g * g - 1.0).abs());
    }
    assert!(worst <= 1e-9, "worst residual {worst}");
    assert!(started.elapsed().as_secs_f64() < 1.0, "runtime");
    pass(3, "3·tan²ω + 2·tan²γ = 1 over 10⁴ random triangles");
}

#[test]
fn criterion_04_composition_theorem() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let sample = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.12) {
            ExtReal::Infinity
        } else {
            ExtReal::finite(rng.gen_range(-5.0..5.0))
        }
    };
    let mut worst: f64 = 0.0;
    let mut saw_infinity = false;
    for _ in 0..1_000 {
        let (z, t, r) = (sample(&mut rng), sample(&mut rng), sample(&mut rng));
        saw_infinity |= z.is_infinite() || t.is_infinite() || r.is_infinite();
        let (product, param) = matrices::compose(z, t, r);
        worst = worst.max(product.max_abs_diff(CevaMatrix::new(param).matrix()));
    }
    assert!(saw_infinity, "sample must include ∞ cases");
    assert!(worst <= 1e-9, "worst max-norm gap {worst}");
    assert!(started.elapsed().as_secs_f64() < 1.0, "runtime");
    pass(4, "M_ζM_τM_ρ = M_{{ρ□τ^□□ζ}} over 10³ random triples including ∞");
}

#[test]
fn criterion_05_binary_similarity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    for _ in 0..1_000 {
        let t = random_triangle(&mut rng);
        let r = rng.gen_range(-3.0..3.0);
        let rho = ExtReal::finite(r);
        let n: u32 = rng.gen_range(0..=6);

        let twice = apply(&apply(&t, rho), rho);
        let scale = rho.norm().powi(2);
        for (got, want) in twice.sides().iter().zip(t.sides()) {
            assert!(rel_err(*got, scale * want) <= 1e-9, "apply² at rho={r}");
        }

        let even = iterate(&t, rho, 2 * n);
        let scale = rho.norm().powi(2 * n as i32);
        for (got, want) in even.sides().iter().zip(t.sides()) {
            assert!(rel_err(*got, scale * want) <= 1e-9, "iterate 2n at rho={r}, n={n}");
        }
    }
    pass(5, "C_ρ² = ⟨ρ⟩²·id and C_ρ^{{2n}} = ⟨ρ⟩^{{2n}}·id over 10³ random (T, ρ, n ≤ 6)");
}

#[test]
fn criterion_06_hajja_contrast() {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    // identity H_ρ(H_ρ(T)) = C_{1−ρ}(C_ρ(T)) at 1e-9
    for _ in 0..1_000 {
        let t = random_triangle(&mut rng);
        let r = rng.gen_range(-2.0..2.0);
        let lhs = apply_hajja(&apply_hajja(&t, r), r);
        let rhs = apply(&apply(&t, ExtReal::finite(r)), ExtReal::finite(1.0 - r));
        for (l, w) in lhs.sides().iter().zip(rhs.sides()) {
            assert!(rel_err(*l, w) <= 1e-9, "hajja identity at rho={r}");
        }
    }

    // the order of the sides matters: H² loses the shape, C² keeps it
    let t = random_scalene(&mut rng);
    let rho = ExtReal::finite(1.0 / 3.0);
    let cc = apply(&apply(&t, rho), rho);
    let rel = similarity(&cc, &t);
    assert!(rel.is_direct());
    assert!(rel_err(rel.ratio().unwrap(), rho.norm().powi(2)) <= 1e-9);

    let hh = apply_hajja(&apply_hajja(&t, 1.0 / 3.0), 1.0 / 3.0);
    assert_eq!(similarity(&hh, &t), SimilarityRelation::NotSimilar);
    pass(6, "Hajja contrast: H² = C_{{1−ρ}}∘C_ρ; H² not similar while C² is Direct(⟨ρ⟩²)");
}

#[test]
fn criterion_07_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(1007);
    for _ in 0..10_000 {
        let t = random_triangle(&mut rng);
        let rho = rng.gen_range(-3.0..3.0);
        let (x, y, z) = oracle::cevian_lengths(&oracle::embed(&t), rho);
        let f = apply(&t, ExtReal::finite(rho));
        assert!(rel_err(x, f.a()) <= 1e-9, "x at rho={rho}");
        assert!(rel_err(y, f.b()) <= 1e-9, "y at rho={rho}");
        assert!(rel_err(z, f.c()) <= 1e-9, "z at rho={rho}");
    }
    pass(7, "coordinate oracle matches the radical formulas over 10⁴ random (T, ρ)");
}

#[test]
fn criterion_08_right_ceva_both_directions() {
    // (3,4,5): a right member exists and verifies
    let t = Triangle::new(3.0, 4.0, 5.0).unwrap();
    let rho = right_ceva_param(&t).unwrap().expect("(3,4,5) admits a right member");
    let image = apply(&t, rho);
    let mut sq = image.squared().components();
    sq.sort_by(f64::total_cmp);
    assert!((sq[0] + sq[1] - sq[2]).abs() <= 1e-9 * sq[2], "right angle residual");

    // (6,7,8): no right member
    let t = Triangle::new(6.0, 7.0, 8.0).unwrap();
    assert_eq!(right_ceva_param(&t).unwrap(), None);

    // boundary (1,1,√2): tan ω = 1/2 within 1e-12
    let w = Triangle::new(1.0, 1.0, 2.0_f64.sqrt()).unwrap();
    assert!((w.brocard_angle().tan() - 0.5).abs() <= 1e-12, "boundary tan omega");
    pass(8, "right cevian triangles: (3,4,5) exists+verified, (6,7,8) none, boundary exact");
}

#[test]
fn criterion_09_reconstruction_end_to_end() {
    let xi_expect = 0.5 * (1.0 + (2.0 * 2.0_f64.powf(3.0 / 5.0) - 3.0).sqrt());
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    for case in 0..100 {
        let t = random_scalene(&mut rng);
        let v = apply(&t, ExtReal::finite(0.5)).scaled(0.25);
        let plan = reconstruct(&t, &v, 1e-9).unwrap();
        assert_eq!(plan.n0, 5, "case {case}: n0");
        assert_eq!(plan.total_ops(), 11, "case {case}: 11 operators");
        assert!((plan.xi - xi_expect).abs() <= 1e-9, "case {case}: xi {}", plan.xi);
        let rebuilt = plan.execute(&t);
        for (got, want) in rebuilt.sides().iter().zip(v.sides()) {
            assert!(rel_err(*got, want) <= 1e-9, "case {case}: side mismatch");
        }
    }
    pass(9, "reconstruct(T, (1/4)·C_½(T)): n₀ = 5, ξ as printed, 11-operator plan verified ×100");
}

#[test]
fn criterion_10_congruent_pairs_catalogue() {
    // grid over finite ρ plus the exact candidates; Cor 9.6 concerns the
    // family over ℝ (C_∞ is congruent to C₀ and C₁ by construction, which is
    // why the scan stays on finite parameters)
    let t = Triangle::new(8.0, 9.0, 12.0).unwrap();
    let mut params: Vec<f64> = (-300..=300).map(|i| i as f64 / 100.0).collect();
    for exact in [-1.0, 0.0, 1.0, 2.0] {
        if !params.contains(&exact) {
            params.push(exact);
        }
    }
    params.sort_by(f64::total_cmp);
    params.dedup();

    let images: Vec<Triangle> = params.iter().map(|&r| apply(&t, ExtReal::finite(r))).collect();
    let mut found: Vec<(f64, f64)> = Vec::new();
    for i in 0..params.len() {
        for j in (i + 1)..params.len() {
            let rel = similarity(&images[i], &images[j]);
            if rel.is_direct() && (rel.ratio().unwrap() - 1.0).abs() <= 1e-9 {
                found.push((params[i], params[j]));
            }
        }
    }
    assert_eq!(found, vec![(-1.0, 2.0), (0.0, 1.0)], "congruent pairs: {found:?}");
    pass(10, "directly congruent pairs in the family occur only at (0,1) and (−1,2)");
}

#[test]
fn criterion_11_diamond_vs_addition_bound() {
    let mut max_gap: f64 = 0.0;
    for i in 0..1000 {
        for j in 0..1000 {
            let r = i as f64 / 1000.0;
            let s = j as f64 / 1000.0;
            let d = UnitParam::new(r).unwrap().diamond(UnitParam::new(s).unwrap()).value();
            let add = if r + s >= 1.0 { r + s - 1.0 } else { r + s };
            let gap = (d - add).abs();
            if gap > max_gap {
                max_gap = gap;
            }
        }
    }
    assert!(max_gap < 0.042, "max |ρ◇τ − ρ⊕τ| = {max_gap}");
    pass(11, "max |ρ◇τ − (ρ+τ mod 1)| < 0.042 on the 1000×1000 grid");
}

#[test]
fn criterion_12_automedian_detection() {
    let t = Triangle::new(7.0, 13.0, 17.0).unwrap();
    assert!(is_automedian(&t, 1e-9));
    let params = operator::self_similar_params(&t).unwrap();
    assert!(params.iter().any(|r| r.approx_eq(ExtReal::finite(0.5), 1e-9)));

    let perturbed = Triangle::new(7.0, 13.0, 17.01).unwrap();
    assert!(!is_automedian(&perturbed, 1e-9));
    let params = operator::self_similar_params(&perturbed).unwrap();
    assert!(!params.iter().any(|r| r.approx_eq(ExtReal::finite(0.5), 1e-9)));
    pass(12, "(7,13,17) is automedian (1/2 ∈ ϰ□𝕊); the perturbed triple is not");
}

#[test]
fn criterion_13_perpendicular_bases() {
    let mut rng = ChaCha8Rng::seed_from_u64(1013);
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < 1_000 {
        let t = random_triangle(&mut rng);
        match oracle::bases_perpendicular(&t) {
            Ok(d) => {
                worst = worst.max(d.abs());
                done += 1;
            }
            Err(_) => continue, // equilateral sample; not in scope
        }
    }
    assert!(worst <= 1e-9, "worst normalized dot {worst}");
    pass(13, "isosceles bases are perpendicular: |normalized dot| ≤ 1e-9 ×1000");
}

#[test]
fn criterion_14_shape_descriptor_completeness() {
    let mut rng = ChaCha8Rng::seed_from_u64(1014);
    // 250 base shapes × 4 variants (random scaling + cyclic relabeling)
    let mut corpus = Vec::with_capacity(1_000);
    for base in 0..250 {
        let t = random_triangle(&mut rng);
        for _ in 0..4 {
            let mut v = t.scaled(rng.gen_range(0.2..5.0));
            for _ in 0..rng.gen_range(0..3u32) {
                v = v.rotated();
            }
            corpus.push((base, v));
        }
    }
    let descriptors: Vec<_> = corpus.iter().map(|(_, t)| t.shape_descriptor()).collect();
    for i in 0..corpus.len() {
        for j in (i + 1)..corpus.len() {
            let desc_eq = descriptors[i].approx_eq(&descriptors[j], 1e-9);
            let sim = similarity(&corpus[i].1, &corpus[j].1).is_direct();
            assert_eq!(
                desc_eq, sim,
                "pair ({i}, {j}): descriptor {desc_eq} vs similarity {sim}"
            );
        }
    }
    pass(14, "shape descriptor equality coincides with direct similarity on 10³ triangles");
}
