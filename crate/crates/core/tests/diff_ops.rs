use flatdual::{
    d1fscalar, d1fvector, d2fscalar, d2fscalar2, dual_product, gradient, hessian, jacobian,
    Coefficient, DualN,
};
use flatdual_testkit::{
    fstest, fstest_gradient, fstest_scalar, fvectest, rel_close, richardson_hessian, tenths_plus_i,
    SplitMix,
};

fn c(x: f64) -> Coefficient {
    Coefficient::new(x, 0.0)
}

fn quadratic(a: Vec<Vec<Coefficient>>) -> impl Fn(&[DualN]) -> DualN {
    move |x: &[DualN]| {
        let mut acc = DualN::zero(x[0].order());
        for (i, row) in a.iter().enumerate() {
            for (j, aij) in row.iter().enumerate() {
                acc = &acc + &(&(&x[i] * &x[j]) * *aij);
            }
        }
        acc * 0.5
    }
}

#[allow(clippy::needless_range_loop)]
fn random_symmetric(rng: &mut SplitMix, m: usize) -> Vec<Vec<Coefficient>> {
    let mut a = vec![vec![c(0.0); m]; m];
    for i in 0..m {
        for j in i..m {
            let v = rng.unit_complex();
            a[i][j] = v;
            a[j][i] = v;
        }
    }
    a
}

#[test]
fn jacobian_vector_product_consistency() {
    let q = tenths_plus_i(4);
    let v = [c(1.0), c(2.0), c(3.0), c(4.0)];
    let jv = d1fvector(&fvectest, &v, &q, 3).unwrap();
    let jmat = jacobian(&fvectest, &q, 3).unwrap();
    let via_matmul = jmat.mul_vec(&v).unwrap();
    for (a, b) in jv.iter().zip(&via_matmul) {
        assert!(rel_close(*a, *b, 1e-10), "{a} vs {b}");
    }
}

#[test]
fn random_fields_jv_matches_jacobian() {
    let mut rng = SplitMix::new(99);
    for _ in 0..20 {
        let q: Vec<_> = (0..4)
            .map(|_| Coefficient::new(rng.uniform(0.2, 1.0), rng.uniform(-0.5, 0.5)))
            .collect();
        let v: Vec<_> = (0..4).map(|_| rng.unit_complex()).collect();
        let jv = d1fvector(&fvectest, &v, &q, 3).unwrap();
        let via = jacobian(&fvectest, &q, 3).unwrap().mul_vec(&v).unwrap();
        for (a, b) in jv.iter().zip(&via) {
            assert!(rel_close(*a, *b, 1e-10));
        }
    }
}

#[test]
fn gradient_matches_analytic_formula() {
    let q = tenths_plus_i(3);
    let g = gradient(&fstest, &q).unwrap();
    for (a, b) in g.iter().zip(fstest_gradient(&q)) {
        assert!(rel_close(*a, b, 1e-13), "{a} vs {b}");
    }
    let e1 = [c(1.0), c(0.0), c(0.0)];
    assert!(rel_close(
        d1fscalar(&fstest, &e1, &q).unwrap(),
        fstest_gradient(&q)[0],
        1e-13
    ));
}

#[test]
fn gradient_is_linear() {
    let q = tenths_plus_i(3);
    let (alpha, beta) = (Coefficient::new(0.7, -1.2), Coefficient::new(-2.0, 0.3));
    let other = |x: &[DualN]| &(&x[0] * &x[1]).exp() + &x[2].sqrt();
    let combo = |x: &[DualN]| fstest(x).scale(alpha) + other(x).scale(beta);
    let lhs = gradient(&combo, &q).unwrap();
    let g1 = gradient(&fstest, &q).unwrap();
    let g2 = gradient(&other, &q).unwrap();
    for i in 0..3 {
        assert!(rel_close(lhs[i], g1[i] * alpha + g2[i] * beta, 1e-13));
    }
}

#[test]
fn hessian_is_symmetric_and_matches_finite_differences() {
    let q = tenths_plus_i(3);
    let h = hessian(&fstest, &q).unwrap();
    let fd = richardson_hessian(fstest_scalar, &q);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(h[(i, j)], h[(j, i)]);
            assert!(
                rel_close(h[(i, j)], fd[i][j], 1e-5),
                "H[{i}][{j}]: {} vs {}",
                h[(i, j)],
                fd[i][j]
            );
        }
    }
}

#[test]
fn quadratic_form_hessian_and_polarization() {
    let mut rng = SplitMix::new(12);
    for _ in 0..10 {
        let a = random_symmetric(&mut rng, 3);
        let f = quadratic(a.clone());
        let q: Vec<_> = (0..3).map(|_| rng.unit_complex()).collect();
        let h = hessian(&f, &q).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(rel_close(h[(i, j)], a[i][j], 1e-13));
            }
        }
        let u: Vec<_> = (0..3).map(|_| rng.unit_complex()).collect();
        let v: Vec<_> = (0..3).map(|_| rng.unit_complex()).collect();
        let mut uav = c(0.0);
        for i in 0..3 {
            for j in 0..3 {
                uav += u[i] * a[i][j] * v[j];
            }
        }
        assert!(rel_close(d2fscalar2(&f, &u, &v, &q).unwrap(), uav, 1e-12));
    }
}

#[test]
fn directional_second_derivative_consistency() {
    let mut rng = SplitMix::new(31);
    let q = tenths_plus_i(3);
    let h = hessian(&fstest, &q).unwrap();
    for _ in 0..20 {
        let v: Vec<_> = (0..3).map(|_| rng.unit_complex()).collect();
        let single = d2fscalar(&fstest, &v, &q).unwrap();
        assert!(rel_close(
            d2fscalar2(&fstest, &v, &v, &q).unwrap(),
            single,
            1e-11
        ));
        let hv = h.mul_vec(&v).unwrap();
        let vhv: Coefficient = v.iter().zip(&hv).map(|(a, b)| a * b).sum();
        assert!(rel_close(single, vhv, 1e-9), "{single} vs {vhv}");
    }
}

#[test]
fn trilinear_hessian_at_ones() {
    let f = |x: &[DualN]| &(&x[0] * &x[1]) * &x[2];
    let h = hessian(&f, &[c(1.0); 3]).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(h[(i, j)], c(if i == j { 0.0 } else { 1.0 }));
        }
    }
}

#[test]
fn shared_seed_product() {
    let p = dual_product(&[
        DualN::variable(c(2.0), 1).unwrap(),
        DualN::variable(c(3.0), 1).unwrap(),
    ])
    .unwrap();
    assert_eq!(p.coeffs(), &[c(6.0), c(5.0)]);
}
