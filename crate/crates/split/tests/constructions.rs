mod common;

use std::f64::consts::TAU;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sixsplit::bounds::{h_tilde, phi, psi};
use sixsplit::construct::{
    covering_check, diameter_criterion, diameter_disc, enclosed_disc_in_halfplane, fallback_fpm, hull_membership,
    lifted_disc, outside_diameter_disc, separating_halfplane,
};
use sixsplit::regions::{f_minus, f_plus, rotate_by_s, s_map, sqrt3};
use sixsplit::{Complex64, GeneralizedDisc, PlaneView, SpherePoint};

fn disk(d: &GeneralizedDisc) -> (Complex64, f64) {
    d.center_radius().expect("bounded disc")
}

#[test]
fn criterion_values() {
    assert_eq!(diameter_criterion(c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)), -1.0);
    assert_eq!(diameter_criterion(c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 2.0)), 3.0);
    assert!(!outside_diameter_disc(c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)));
    assert!(outside_diameter_disc(c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 2.0)));
}

#[test]
fn hull_matches_grid_on_overlapping_discs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..1000 {
        let c1 = c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        let c2 = c1 + polar(rng.random_range(0.0..1.5), rng.random_range(0.0..TAU));
        let (r1, r2) = (rng.random_range(0.5..2.0), rng.random_range(0.5..2.0));
        let p = c(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let h = hull_membership(&GeneralizedDisc::disk(c1, r1).unwrap(), &GeneralizedDisc::disk(c2, r2).unwrap(), p).unwrap();
        assert!((h.signed_distance - grid_hull_distance(c1, r1, c2, r2, p)).abs() < 1e-6);
        assert_eq!(h.is_member(), h.signed_distance <= 0.0);
    }
}

#[test]
fn hull_rejects_unbounded() {
    let h = GeneralizedDisc::half_plane(c(1.0, 0.0), 3.0).unwrap();
    assert!(hull_membership(&h, &GeneralizedDisc::unit_disc(), c(9.0, 0.0)).is_err());
}

#[test]
fn separating_halfplane_separates() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut n = 0;
    while n < 2000 {
        let c2 = polar(rng.random_range(2.5..6.0), rng.random_range(0.0..TAU));
        let r2 = rng.random_range(0.3..1.4);
        let f1 = GeneralizedDisc::unit_disc();
        let f2 = GeneralizedDisc::disk(c2, r2).unwrap();
        let p = c(rng.random_range(-9.0..9.0), rng.random_range(-9.0..9.0));
        let d = grid_hull_distance(c(0.0, 0.0), 1.0, c2, r2, p);
        if d < 1e-3 {
            continue;
        }
        n += 1;
        let h = separating_halfplane(&f1, &f2, p).unwrap();
        assert!(h.contains_finite(p).signed_value < 0.0);
        assert!(h.disjointness(&f1).disjoint && h.disjointness(&f2).disjoint);
        // the boundary line sits halfway between p and the hull
        let PlaneView::HalfPlane { normal, offset } = h.plane_view() else { panic!("not a half-plane") };
        let depth = (p * normal.conj()).re - offset;
        assert!((depth - d / 2.0).abs() < 1e-6, "depth {depth} hull distance {d}");
    }
    assert!(separating_halfplane(&GeneralizedDisc::unit_disc(), &GeneralizedDisc::disk(c(4.0, 0.0), 1.0).unwrap(), c(2.0, 0.0)).is_err());
}

#[test]
fn enclosed_disc_stays_above_floor() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..5000 {
        let floor = rng.random_range(-2.0..2.0);
        let p = c(rng.random_range(-5.0..5.0), floor + rng.random_range(1e-3..4.0));
        let q = c(rng.random_range(-5.0..5.0), floor + rng.random_range(1e-3..4.0));
        let d = enclosed_disc_in_halfplane(p, q, floor).unwrap();
        let (ctr, r) = disk(&d);
        let lowest = (floor + p.im.min(q.im)) / 2.0;
        assert!(ctr.im - r >= lowest - 1e-9 * (1.0 + r), "bottom {} wanted {lowest}", ctr.im - r);
        for z in [p, q] {
            assert!((z - ctr).norm() <= r * (1.0 + 1e-12) + 1e-12);
        }
    }
    assert!(enclosed_disc_in_halfplane(c(0.0, 1.0), c(4.0, 3.0), 1.0).is_err());
    assert!(enclosed_disc_in_halfplane(c(0.0, 3.0), c(0.0, 3.0), 1.0).is_err());
}

#[test]
fn lifted_disc_postconditions() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut n = 0;
    let mut horizontal = 0;
    while n < 10_000 {
        let x1 = rng.random_range(1.0..6.0);
        let z1 = c(x1, 1.0);
        let y2 = if rng.random_bool(0.1) { 1.0 } else { rng.random_range(-1.0..1.0) };
        let z2 = c(x1 + rng.random_range(0.05..6.0), y2);
        let (ctr, r) = ((z1 + z2) / 2.0, (z1 - z2).norm() / 2.0);
        if ctr.norm() <= r + 1.0 + 1e-6 {
            continue;
        }
        n += 1;
        let d = lifted_disc(z1, z2).unwrap();
        let (lc, lr) = disk(&d);
        for z in [z1, z2] {
            assert!(((z - lc).norm() - lr).abs() < 1e-10 * lr.max(1.0), "{z1} {z2}");
        }
        assert!(lc.norm() - lr - 1.0 > 0.0, "{z1} {z2} meets the unit disc");
        assert!(lc.im - lr >= -1.0 - 1e-10);
        if y2 < 1.0 {
            assert!((lc.im - lr - y2).abs() < 1e-9 * lr.max(1.0));
        } else {
            horizontal += 1;
        }
    }
    assert!(horizontal > 100);
}

#[test]
fn lifted_disc_preconditions() {
    assert!(lifted_disc(c(1.5, 1.5), c(5.0, -0.2)).is_err());
    assert!(lifted_disc(c(5.0, 1.0), c(1.5, -0.2)).is_err());
    assert!(lifted_disc(c(1.5, 1.0), c(5.0, -1.5)).is_err());
}

/// Arcs `[arg z - asin(1/|z|), arg z + asin(1/|z|)]` overlap.
fn sigma_arcs_overlap(z: Complex64, w: Complex64) -> bool {
    let gap = (z.arg() - w.arg() + std::f64::consts::PI).rem_euclid(TAU) - std::f64::consts::PI;
    gap.abs() <= (1.0 / z.norm()).asin() + (1.0 / w.norm()).asin()
}

/// Rejection sampler concentrated near `±√3i`, where the hypotheses can hold.
fn fpm_hypotheses(rng: &mut ChaCha8Rng) -> (Complex64, Complex64) {
    use std::f64::consts::{FRAC_PI_2, PI};
    loop {
        let side = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
        let z1 = polar(rng.random_range(sqrt3()..2.0), side * FRAC_PI_2 + rng.random_range(-0.6..0.6));
        let dir = if rng.random_bool(0.5) { 0.0 } else { PI };
        let z2 = z1 + polar(rng.random_range(2.0..2.4), dir + rng.random_range(-0.5..0.5));
        let (ctr, r) = ((z1 + z2) / 2.0, (z1 - z2).norm() / 2.0);
        if outside_omega(z1) && outside_omega(z2) && ctr.norm() <= r + 1.0 && sigma_arcs_overlap(z1, z2) {
            return (z1, z2);
        }
    }
}

#[test]
fn fpm_disjointness_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (fp, fm) = (f_plus(), f_minus());
    for _ in 0..10_000 {
        let (z1, z2) = fpm_hypotheses(&mut rng);
        let (ctr, r) = ((z1 + z2) / 2.0, (z1 - z2).norm() / 2.0);
        let clear = |k: f64| (ctr - c(0.0, k / sqrt3())).norm() - r - 2.0 / sqrt3();
        assert!(clear(1.0) > 0.0 || clear(-1.0) > 0.0, "{z1} {z2}");
        let g = fallback_fpm(z1, z2).unwrap();
        assert!(g == fp || g == fm);
        assert!(g.disjointness(&diameter_disc(z1, z2).unwrap()).disjoint);
        for anchor in [c(1.0, 0.0), c(-1.0, 0.0)] {
            assert!(g.contains_finite(anchor).is_member());
        }
    }
    assert!(fallback_fpm(c(3.0, 0.0), c(5.5, 0.0)).is_err());
}

#[test]
fn covering_by_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (s3, s5) = (sqrt3(), 5f64.sqrt());
    let mut pairs = 0;
    while pairs < 300 {
        let z1 = polar(rng.random_range(s3..3.0), rng.random_range(0.0..TAU));
        let z2 = z1 + polar(rng.random_range(2.0..2.0 * 2f64.sqrt()), rng.random_range(0.0..TAU));
        let (ctr, r) = ((z1 + z2) / 2.0, (z1 - z2).norm() / 2.0);
        if z2.norm() < s3 || ctr.norm() > r + 1.0 {
            continue;
        }
        pairs += 1;
        for _ in 0..1000 {
            let t: f64 = rng.random_range(0.0..=1.0);
            let q = ctr * t + polar(rng.random_range(0.0f64..1.0).sqrt() * (r * t + s3 * (1.0 - t)), rng.random_range(0.0..TAU));
            assert!(q.norm() < s5 || (q - z1).norm() < 2.0 || (q - z2).norm() < 2.0);
            // anything the check clears is outside the covering set
            if covering_check(z1, z2, q) {
                panic!("sampled hull point {q} passed the covering check");
            }
        }
    }
}

#[test]
fn covering_check_examples() {
    let (z1, z2) = (c(0.13, 1.83), c(2.33, 1.55));
    assert!(!covering_check(z1, z2, c(0.0, 3.0)));
    assert!(covering_check(z1, z2, c(0.0, -3.0)));
    assert!(!covering_check(z1, z2, c(0.0, 0.0)));
}

#[test]
fn phi_and_psi_are_monotone() {
    let (lo, hi) = (sqrt3(), 5f64.sqrt());
    let n = 10_000;
    let grid: Vec<f64> = (0..=n).map(|k| lo + (hi - lo) * k as f64 / n as f64).collect();
    for w in grid.windows(2) {
        assert!(phi(w[1]) >= phi(w[0]) - 1e-14, "phi drops at {}", w[1]);
        assert!(psi(w[1]) >= psi(w[0]) - 1e-14, "psi drops at {}", w[1]);
        assert!((phi(w[0]) - h_tilde(w[0], 1.0)).abs() < 1e-12);
    }
    assert!(psi(hi) < phi(2.0) && psi(2.0) < phi(lo));
}

#[test]
fn s_is_an_order_three_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s = s_map();
    let s3 = s.compose(&s).compose(&s);
    let fixed = SpherePoint::finite(0.0, 1.0 / sqrt3());
    assert!(s.apply(&fixed).chordal_distance(&fixed) < 1e-12);
    for _ in 0..1000 {
        let p = SpherePoint::finite(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0));
        assert!(s3.apply(&p).chordal_distance(&p) < 1e-12);
        for k in 0..3 {
            let mut q = p;
            for _ in 0..k {
                q = s.apply(&q);
            }
            assert!(rotate_by_s(&p, k).chordal_distance(&q) < 1e-12);
        }
    }
    assert!(rotate_by_s(&SpherePoint::finite(1.0, 0.0), 1).chordal_distance(&SpherePoint::finite(0.0, sqrt3())) < 1e-12);
}
