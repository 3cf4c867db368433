use proptest::prelude::*;

use gaudinlab::alphabets::{complete_function, factorise_index, factorise_rhs, schur, vandermonde, resultant, Alphabet};
use gaudinlab::combinatorics::{permutations, Composition};
use gaudinlab::exact_algebra::{
    gaussian_binomial, LaurentPoly, Param, Poly, RationalFn, Scalar, Var, VarContext, ZERO_EXPONENTS,
};
use gaudinlab::gaudin::cauchy_sign;
use gaudinlab::operators::{affine_shift, cup_omega, hecke_cup, hecke_t, partial, ShiftKind};

const CASES: u32 = 24;

/// Terms as (coefficient, x exponents, t exponent) in `n` x-variables.
fn poly_strategy(n: usize) -> impl Strategy<Value = Vec<(i64, Vec<i16>, i16)>> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0i16..=2, n), 0i16..=2), 1..=4)
}

fn build(ctx: VarContext, terms: &[(i64, Vec<i16>, i16)]) -> LaurentPoly {
    let mut p = Poly::zero(ctx);
    for (c, xs, t) in terms {
        let mut e = ZERO_EXPONENTS;
        for (i, x) in xs.iter().enumerate() {
            e[ctx.index(Var::X(i + 1)).unwrap()] = *x;
        }
        e[ctx.t_index()] = *t;
        p.add_term(e, Scalar::from_integer((*c).into()));
    }
    p
}

fn letters_strategy(k: usize) -> impl Strategy<Value = Vec<(usize, i16, i64)>> {
    prop::collection::vec((0usize..6, 0i16..=1, prop::sample::select(vec![1i64, -1, 2])), k)
}

fn letters(ctx: VarContext, picks: &[(usize, i16, i64)]) -> Vec<LaurentPoly> {
    let vars = [Var::X(1), Var::X(2), Var::X(3), Var::Y(1), Var::Y(2), Var::Y(3)];
    let mut out: Vec<LaurentPoly> = Vec::new();
    for &(v, t, c) in picks {
        let l = Poly::var(ctx, vars[v]) * Poly::param_power(ctx, Param::T, t) * Poly::from_int(ctx, c);
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn exact_division_recovers_factor(a in poly_strategy(2), d in poly_strategy(2)) {
        let ctx = VarContext::new(2).unwrap();
        let (p, d) = (build(ctx, &a), build(ctx, &d));
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&p * &d).exact_div(&d).unwrap(), p);
    }

    #[test]
    fn rational_quotient_cancels(a in poly_strategy(2), b in poly_strategy(2), c in poly_strategy(2)) {
        let ctx = VarContext::new(2).unwrap();
        let (a, b, c) = (build(ctx, &a), build(ctx, &b), build(ctx, &c));
        prop_assume!(!b.is_zero() && !c.is_zero());
        let (ra, rb) = (RationalFn::from_poly(&a), RationalFn::from_poly(&b));
        prop_assert!(ra.mul(&rb).div(&rb).unwrap().rat_equal(&ra));
        let rc = RationalFn::from_poly(&c);
        let x = ra.div(&rc).unwrap();
        let y = RationalFn::from_poly(&(&a * &b)).div(&RationalFn::from_poly(&(&c * &b))).unwrap();
        prop_assert!(x.rat_equal(&x) && x.rat_equal(&y) && y.rat_equal(&x));
    }

    #[test]
    fn substitutions_compose(a in poly_strategy(2), k in 0i16..=2) {
        let ctx = VarContext::new(2).unwrap();
        let p = build(ctx, &a);
        let s1 = [(Var::X(1), Poly::param_power(ctx, Param::T, k) * Poly::y(ctx, 1))];
        let s2 = [(Var::Y(1), Poly::x(ctx, 2) + Poly::y(ctx, 2))];
        let stepwise = p.substitute(&s1).unwrap().substitute(&s2).unwrap();
        let composed = [(Var::X(1), s1[0].1.substitute(&s2).unwrap())];
        prop_assert_eq!(stepwise, p.substitute(&composed).unwrap().substitute(&s2).unwrap());
    }

    #[test]
    fn gaussian_binomial_symmetry(m in 0usize..=6, k in 0usize..=6) {
        prop_assume!(k <= m);
        let ctx = VarContext::new(1).unwrap();
        let g = gaussian_binomial(ctx, m, k).unwrap();
        prop_assert_eq!(&g, &gaussian_binomial(ctx, m, m - k).unwrap());
        let at_one = g.substitute(&[(Var::T, Poly::one(ctx))]).unwrap();
        let binom: i64 = (0..k as i64).fold(1, |acc, i| acc * (m as i64 - i) / (i + 1));
        prop_assert_eq!(at_one, Poly::from_int(ctx, binom));
    }

    #[test]
    fn factorisation_and_vanishing(alpha in 1usize..=3, beta in 1usize..=3, j in 0usize..=3,
                                   a in letters_strategy(3), b in letters_strategy(3), share in any::<bool>()) {
        prop_assume!(j <= beta);
        let ctx = VarContext::new(3).unwrap();
        let la = letters(ctx, &a);
        let mut lb = letters(ctx, &b);
        prop_assume!(la.len() >= alpha && lb.len() >= beta);
        let la = la[..alpha].to_vec();
        lb.truncate(beta);
        if share && !lb.contains(&la[0]) {
            lb[0] = la[0].clone();
        }
        let (aa, bb) = (Alphabet::new(ctx, la).unwrap(), Alphabet::new(ctx, lb).unwrap());
        let lhs = schur(&factorise_index(j, alpha, beta), &aa.minus(&bb)).unwrap();
        prop_assert_eq!(&lhs, &factorise_rhs(j, &aa, &bb));
        if aa.shares_letter_with(&bb) {
            prop_assert!(lhs.is_zero());
        }
    }

    #[test]
    fn alphabet_minus_itself_cancels(a in letters_strategy(3), j in 1i64..=4) {
        let ctx = VarContext::new(3).unwrap();
        let aa = Alphabet::new(ctx, letters(ctx, &a)).unwrap();
        prop_assert!(complete_function(j, &aa.minus(&aa)).is_zero());
    }

    #[test]
    fn schur_ignores_letter_order(a in letters_strategy(3), b in letters_strategy(2), v0 in 0usize..=1, v1 in 1usize..=2) {
        let ctx = VarContext::new(3).unwrap();
        let (la, lb) = (letters(ctx, &a), letters(ctx, &b));
        let v = Composition::new(vec![v0, v1.max(v0)]);
        let fwd = schur(&v, &Alphabet::new(ctx, la.clone()).unwrap().minus(&Alphabet::new(ctx, lb.clone()).unwrap())).unwrap();
        let rev = |l: &[LaurentPoly]| l.iter().rev().cloned().collect::<Vec<_>>();
        let bwd = schur(&v, &Alphabet::new(ctx, rev(&la)).unwrap().minus(&Alphabet::new(ctx, rev(&lb)).unwrap())).unwrap();
        prop_assert_eq!(fwd, bwd);
    }

    #[test]
    fn schur_of_plain_alphabet_is_homogeneous(v0 in 0usize..=2, v1 in 0usize..=2, v2 in 0usize..=2) {
        let ctx = VarContext::new(3).unwrap();
        let mut parts = vec![v0, v1, v2];
        parts.sort();
        let v = Composition::new(parts);
        let s = schur(&v, &Alphabet::x(ctx).as_diff()).unwrap();
        let deg = |e: &gaudinlab::exact_algebra::Exponents| (1..=3).map(|i| e[ctx.index(Var::X(i)).unwrap()] as usize).sum::<usize>();
        prop_assert!(s.terms().all(|(e, _)| deg(e) == v.weight()));
    }

    #[test]
    fn nil_and_hecke_relations(terms in poly_strategy(4), n in 2usize..=4) {
        let ctx = VarContext::new(n).unwrap();
        let f = build(ctx, &terms.iter().map(|(c, x, t)| (*c, x[..n].to_vec(), *t)).collect::<Vec<_>>());
        let t = Poly::t(ctx);
        for i in 1..n {
            prop_assert!(partial(&partial(&f, i).unwrap(), i).unwrap().is_zero());
            let c = hecke_cup(&f, i, n).unwrap();
            prop_assert_eq!(hecke_cup(&c, i, n).unwrap(), &(&Poly::one(ctx) + &t) * &c);
            let tf = hecke_t(&f, i, n).unwrap();
            let tt = hecke_t(&tf, i, n).unwrap();
            prop_assert!((&(&tt - &(&(&t - &Poly::one(ctx)) * &tf)) - &(&t * &f)).is_zero());
            if i + 1 < n {
                let tt3 = |a: usize, b: usize| {
                    hecke_t(&hecke_t(&hecke_t(&f, a, n).unwrap(), b, n).unwrap(), a, n).unwrap()
                };
                prop_assert_eq!(tt3(i, i + 1), tt3(i + 1, i));
            }
            for j in i + 2..n {
                let ij = hecke_t(&hecke_t(&f, i, n).unwrap(), j, n).unwrap();
                let ji = hecke_t(&hecke_t(&f, j, n).unwrap(), i, n).unwrap();
                prop_assert_eq!(ij, ji);
            }
        }
    }

    #[test]
    fn symmetrizer_is_symmetric_and_linear(terms in poly_strategy(3), g in 0usize..=2) {
        let n = 3;
        let ctx = VarContext::new(n).unwrap();
        let f = build(ctx, &terms);
        let s = cup_omega(&f, n).unwrap();
        for i in 1..n {
            prop_assert_eq!(s.swap_vars(Var::X(i), Var::X(i + 1)), s.clone());
        }
        let sym = schur(&Composition::new(vec![0, g.min(1), g]), &Alphabet::x(ctx).as_diff()).unwrap();
        prop_assert_eq!(cup_omega(&(&sym * &f), n).unwrap(), &sym * &s);
    }

    #[test]
    fn theta_to_the_n_rescales(terms in poly_strategy(3), n in 1usize..=3) {
        let ctx = VarContext::new(n).unwrap();
        let f = build(ctx, &terms.iter().map(|(c, x, t)| (*c, x[..n].to_vec(), *t)).collect::<Vec<_>>());
        let mut g = f.clone();
        for _ in 0..n {
            g = affine_shift(&g, ShiftKind::InverseT, n).unwrap();
        }
        let tinv = Poly::param_power(ctx, Param::T, -1);
        let scaled: Vec<(Var, LaurentPoly)> = (1..=n).map(|i| (Var::X(i), &tinv * &Poly::x(ctx, i))).collect();
        prop_assert_eq!(g, f.substitute(&scaled).unwrap());
    }
}

#[test]
fn cauchy_determinant() {
    for n in 1..=3 {
        let ctx = VarContext::new(n).unwrap();
        let mut det = RationalFn::zero(ctx);
        for (perm, sign) in permutations(n) {
            let mut term = RationalFn::constant(ctx, Scalar::from_integer(sign.into()));
            for (i, &j) in perm.iter().enumerate() {
                let d = RationalFn::from_poly(&(Poly::x(ctx, i + 1) - Poly::y(ctx, j + 1)));
                term = term.div(&d).unwrap();
            }
            det = det.add(&term);
        }
        let (x, y) = (Alphabet::x(ctx), Alphabet::y(ctx));
        // both Vandermondes as prod_{i<j}(a_j - a_i), hence the sign
        let num = (vandermonde(&x) * vandermonde(&y)).scale(&cauchy_sign(n));
        let rhs = RationalFn::from_poly(&num).div(&RationalFn::from_poly(&resultant(&x, &y))).unwrap();
        assert!(det.rat_equal(&rhs), "n = {n}");
    }
}
