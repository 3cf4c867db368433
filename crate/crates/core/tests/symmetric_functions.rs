use gaudinlab::combinatorics::{increasing_compositions, partitions_of};
use gaudinlab::euler_poincare::{sigma_kernel, warnaar_normalization, KernelKind, TruncatedKernel};
use gaudinlab::exact_algebra::{absorb_parameters, Coeff, Poly, QtScalar, Var, VarContext};
use gaudinlab::gaudin::{gaudin_multischur, GaudinParams, SizeBound};
use gaudinlab::orthogonal_bases::{hall_littlewood_in_monomials, macdonald_p, macdonald_scalar, schur_in_monomials};
use gaudinlab::schubert::uniqueness_system;

const SMALL: [(usize, usize); 5] = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)];

#[test]
fn gaudin_symmetries_and_degree() {
    for (n, r) in SMALL {
        let f = gaudin_multischur(&GaudinParams::new(n, r).unwrap(), &SizeBound::default()).unwrap();
        for i in 1..n {
            assert_eq!(f.swap_vars(Var::X(i), Var::X(i + 1)), f, "x symmetry at ({n},{r})");
            assert_eq!(f.swap_vars(Var::Y(i), Var::Y(i + 1)), f, "y symmetry at ({n},{r})");
        }
        // the determinant transposes under x <-> y only together with t -> 1/t
        let ctx = f.ctx();
        let swapped = (1..=n).fold(f.clone(), |g, i| g.swap_vars(Var::X(i), Var::Y(i)));
        let inverted = swapped.substitute(&[(Var::T, Poly::var_power(ctx, Var::T, -1))]).unwrap();
        let unit = (-40..=40).flat_map(|m| [1, -1].map(|s| Poly::var_power(ctx, Var::T, m) * Poly::from_int(ctx, s)));
        assert!(unit.into_iter().any(|u| &u * &inverted == f), "x <-> y, t -> 1/t at ({n},{r})");
        for j in 1..=n {
            assert!(f.degree_in(Var::Y(j)) as usize <= (n - 1) * r);
        }
    }
}

#[test]
fn macdonald_orthogonal_and_triangular() {
    for k in 0..=4 {
        let parts = partitions_of(k);
        let ps: Vec<_> = parts.iter().map(|l| macdonald_p(l).unwrap()).collect();
        for (a, pa) in parts.iter().zip(&ps) {
            assert!(pa.coefficient(a).is_one(), "leading coefficient of P_{a}");
            for (mu, c) in pa.coefficients() {
                assert!(c.is_zero() || a.dominates(mu), "P_{a} has m_{mu}");
            }
            for (b, pb) in parts.iter().zip(&ps) {
                if a != b {
                    assert!(macdonald_scalar(pa, pb).unwrap().is_zero(), "<P_{a}, P_{b}>");
                }
            }
        }
    }
}

#[test]
fn macdonald_specialization_ladders() {
    for k in 0..=4 {
        for l in partitions_of(k) {
            let p = macdonald_p(&l).unwrap();
            assert_eq!(p.at_q_equals_t().unwrap(), schur_in_monomials(&l).unwrap(), "q = t at {l}");
            assert_eq!(p.at_q_zero().unwrap(), hall_littlewood_in_monomials(&l).unwrap(), "q = 0 at {l}");
        }
    }
}

fn times_finite_product(k: &TruncatedKernel, n: usize, t_power: bool) -> TruncatedKernel {
    let ctx = k.ctx();
    let mut prod = Poly::one(ctx);
    for i in 1..=n {
        for j in 1..=n {
            let mut xy = Poly::x(ctx, i) * Poly::y(ctx, j);
            if t_power {
                xy = xy * Poly::t(ctx);
            }
            prod = prod * (Poly::one(ctx) - xy);
        }
    }
    k.times_poly(&absorb_parameters(&prod))
}

#[test]
fn q_free_kernels_match_geometric_series() {
    for n in 1..=2 {
        for d in 0..=3 {
            let one = TruncatedKernel::new(Poly::<QtScalar>::one(VarContext::new(n).unwrap()), d);
            assert_eq!(times_finite_product(&sigma_kernel(KernelKind::Plain, d, n).unwrap(), n, false), one);
            assert_eq!(times_finite_product(&sigma_kernel(KernelKind::TScaled, d, n).unwrap(), n, true), one);
        }
    }
}

#[test]
fn warnaar_constant_does_not_depend_on_truncation() {
    for (n, dmax) in [(1, 3), (2, 2)] {
        let ks: Vec<_> = (0..=dmax)
            .map(|d| warnaar_normalization(n, d).unwrap().empirical.expect("nonzero constant term"))
            .collect();
        assert!(ks.iter().all(|(k, holds)| *holds && k == &ks[0].0), "n = {n}");
    }
}

#[test]
fn schubert_uniqueness_two_variables() {
    for v in increasing_compositions(2, 2) {
        let out = uniqueness_system(&v).unwrap();
        assert!(out.unique && out.matches_factorial_schur, "v = {v}");
    }
}
