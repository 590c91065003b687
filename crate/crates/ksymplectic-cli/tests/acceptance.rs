//! Acceptance suite: one test per release criterion, every assertion exact.
//!
//! Run with `cargo test -p ksymplectic-cli --test acceptance -- --nocapture`
//! to see the per-criterion pass lines.

use ksymplectic::darboux::{
    check_polarization, darboux_map, graph_criterion, is_ksymplectomorphism,
};
use ksymplectic::forms::{
    d1, exterior_derivative, hamilton_jacobi_check, pullback_omega, q_chart, qp_chart,
};
use ksymplectic::gen::{
    random_kspace, random_matrix, random_poly, random_section, random_vector, seeded,
    witness_polarization, Rng,
};
use ksymplectic::kspace::fixtures::{r3_2symp, r6_2symp};
use ksymplectic::kspace::{canonical_y_index, KSymplecticSpace};
use ksymplectic::orthogonal::{
    is_l_coisotropic, is_l_isotropic, is_l_lagrangian, isotropic_complement, l_orthogonal,
    lagrangian_completion, Lagrangian,
};
use ksymplectic::poly::Poly;
use ksymplectic::rational::rat;
use ksymplectic::{Error, Matrix, Subspace};

use ksymplectic_cli::suite::{run_suite, SuiteConfig};

fn span(ambient: usize, indices: &[usize]) -> Subspace {
    Subspace::coordinate_span(ambient, indices)
}

#[test]
fn criterion_1_fixture_reproduction() {
    let s = r3_2symp();

    assert_eq!(s.form(1).unwrap().kernel(), span(3, &[1]));
    assert_eq!(s.form(2).unwrap().kernel(), span(3, &[0]));

    assert_eq!(
        l_orthogonal(&s, &span(3, &[1]), 1).unwrap(),
        Subspace::full(3)
    );
    assert_eq!(
        l_orthogonal(&s, &span(3, &[1]), 2).unwrap(),
        span(3, &[0, 1])
    );

    assert_eq!(
        l_orthogonal(&s, &span(3, &[0, 2]), 2).unwrap(),
        Subspace::zero(3)
    );
    assert!(is_l_coisotropic(&s, &span(3, &[0, 2]), 2).unwrap());

    assert_eq!(l_orthogonal(&s, &span(3, &[2]), 2).unwrap(), span(3, &[2]));
    assert!(is_l_lagrangian(&s, &span(3, &[2]), 2).unwrap().is_yes());

    match is_l_lagrangian(&s, &span(3, &[0]), 1).unwrap() {
        Lagrangian::Yes { complement } => assert_eq!(complement, span(3, &[1, 2])),
        other => panic!("span{{e1}} must be 1-lagrangian, got {other:?}"),
    }

    let r6 = r6_2symp();
    assert_eq!(r6.form(1).unwrap().kernel(), span(6, &[1, 4]));
    assert_eq!(r6.form(2).unwrap().kernel(), span(6, &[0, 3]));

    // dimension counterexample: 1 + 1 = 2 ≠ 3
    let w = span(3, &[2]);
    let orth = l_orthogonal(&s, &w, 2).unwrap();
    assert_eq!(w.dim() + orth.dim(), 2);
    assert_ne!(w.dim() + orth.dim(), s.dim());

    // canonical model: dim W + dim W^{⊥,k} = 2kn, equal to N iff k = 1
    for (n, k) in [(1, 1), (2, 1), (1, 2), (2, 2), (1, 3), (3, 3)] {
        let c = KSymplecticSpace::canonical(n, k);
        let axes: Vec<usize> = (1..=k)
            .flat_map(|r| (0..n).map(move |i| canonical_y_index(n, r, i)))
            .collect();
        let y = span(c.dim(), &axes);
        let orth = l_orthogonal(&c, &y, k).unwrap();
        assert_eq!(orth, y);
        assert_eq!(y.dim() + orth.dim(), 2 * k * n);
        assert_eq!(y.dim() + orth.dim() == c.dim(), k == 1);
    }

    // double-complement failure: ({0}^{⊥,1})^{⊥,1} = span{e2} ≠ {0}
    let zero = Subspace::zero(3);
    let once = l_orthogonal(&s, &zero, 1).unwrap();
    let twice = l_orthogonal(&s, &once, 1).unwrap();
    assert_eq!(twice, span(3, &[1]));
    assert_ne!(twice, zero);

    println!("criterion 1 (fixture reproduction): PASS");
}

#[test]
fn criterion_2_property_suites() {
    let report = run_suite(&SuiteConfig {
        seed: 2024,
        trials: 100,
        n_max: 3,
        k_max: 3,
    });
    assert!(
        report.all_passed(),
        "property failures: {:?}",
        report.failures
    );
    // every label ran on every trial
    for result in &report.results {
        assert_eq!(
            result.pass, report.trials,
            "label {} did not pass all trials",
            result.label
        );
        assert_eq!(result.fail, 0);
    }
    println!(
        "criterion 2 (property suites, {} labels x {} trials): PASS",
        report.results.len(),
        report.trials
    );
}

#[test]
fn criterion_3_constructive_algorithms() {
    let mut construction_incomplete = 0usize;
    let sizes = [
        (1, 1),
        (2, 1),
        (1, 2),
        (2, 2),
        (1, 3),
        (2, 3),
        (3, 2),
        (3, 3),
    ];
    for trial in 0..50u64 {
        let (n, k) = sizes[(trial as usize) % sizes.len()];
        let (space, _) = random_kspace(n, k, 9000 + trial);
        let mut rng = seeded(trial);
        let level = rng.gen_range(1..=k);

        // a random l-isotropic seed: lines always qualify
        let seed_subspace = loop {
            let line = Subspace::line(&random_vector(space.dim(), &mut rng));
            if is_l_isotropic(&space, &line, level).unwrap() {
                break line;
            }
        };

        let w = lagrangian_completion(&space, &seed_subspace, level).unwrap();
        assert!(w.contains(&seed_subspace).unwrap());
        // independent verification through l_orthogonal
        assert_eq!(l_orthogonal(&space, &w, level).unwrap(), w);

        match isotropic_complement(&space, &w, level) {
            Ok(u) => {
                assert!(is_l_isotropic(&space, &u, level).unwrap());
                assert!(w.sum(&u).unwrap().is_full());
                assert!(w.intersection(&u).unwrap().is_zero());
            }
            Err(Error::ConstructionIncomplete { .. }) => {
                construction_incomplete += 1;
            }
            Err(other) => panic!("unexpected error {other:?}"),
        }
    }
    assert_eq!(
        construction_incomplete, 0,
        "{construction_incomplete} incomplete constructions; each is a finding"
    );
    println!("criterion 3 (constructive algorithms, 50 seeds): PASS");
}

#[test]
fn criterion_4_linear_darboux() {
    let sizes = [
        (1, 1),
        (2, 1),
        (1, 2),
        (2, 2),
        (1, 3),
        (2, 3),
        (3, 2),
        (3, 3),
    ];
    for trial in 0..100u64 {
        let (n, k) = sizes[(trial as usize) % sizes.len()];
        let (space, p) = random_kspace(n, k, 40_000 + trial);
        let w = witness_polarization(n, k, &p);
        assert!(check_polarization(&space, &w).unwrap());

        let frame = darboux_map(&space, &w, None).unwrap();
        let canonical = KSymplecticSpace::canonical(n, k);
        let q = &frame.change_of_basis;
        let qt = q.transpose();
        for r in 1..=k {
            assert_eq!(
                &(&qt * space.form(r).unwrap()) * q,
                canonical.form(r).unwrap().clone(),
                "frame must realize the canonical matrices exactly"
            );
        }
    }

    // identity on the canonical model itself
    let c = KSymplecticSpace::canonical(2, 2);
    let y = span(6, &[2, 3, 4, 5]);
    let frame = darboux_map(&c, &y, None).unwrap();
    assert_eq!(frame.change_of_basis, Matrix::identity(6));

    println!("criterion 4 (linear normal form, 100 instances): PASS");
}

#[test]
fn criterion_5_graph_criterion() {
    let sizes = [(1, 1), (2, 1), (1, 2), (2, 2), (1, 3)];

    // 50 symplectomorphisms: witnesses, inverses, pairwise compositions
    let mut positives = 0usize;
    let mut trial = 0u64;
    while positives < 50 {
        let (n, k) = sizes[(trial as usize) % sizes.len()];
        let (s1, p1) = random_kspace(n, k, 70_000 + trial);
        let (s2, p2) = random_kspace(n, k, 80_000 + trial);
        let canonical = KSymplecticSpace::canonical(n, k);
        let composite = &p2.inverse().unwrap() * &p1;

        for (a, b, p) in [
            (&s1, &canonical, p1.clone()),
            (&canonical, &s1, p1.inverse().unwrap()),
            (&s1, &s2, composite),
        ] {
            assert!(is_ksymplectomorphism(a, b, &p).unwrap());
            let check = graph_criterion(a, b, &p).unwrap();
            assert!(check.symplectomorphism);
            assert!(check.graph_lagrangian.is_yes());
            assert!(check.sides_agree());
            positives += 1;
        }
        trial += 1;
    }

    // 50 perturbed non-symplectomorphisms
    let mut negatives = 0usize;
    let mut rng = seeded(0xfade);
    let mut trial = 0u64;
    while negatives < 50 {
        let (n, k) = sizes[(trial as usize) % sizes.len()];
        let (s1, _) = random_kspace(n, k, 90_000 + trial);
        let canonical = KSymplecticSpace::canonical(n, k);
        let q = random_matrix(s1.dim(), s1.dim(), &mut rng);
        trial += 1;
        if !q.is_invertible() || is_ksymplectomorphism(&s1, &canonical, &q).unwrap() {
            continue;
        }
        let check = graph_criterion(&s1, &canonical, &q).unwrap();
        assert!(!check.symplectomorphism);
        assert_eq!(check.graph_lagrangian, Lagrangian::No);
        assert!(check.sides_agree());
        negatives += 1;
    }

    println!("criterion 5 (graph criterion, 50 + 50 maps): PASS");
}

#[test]
fn criterion_6_forms() {
    // d ∘ d = 0 on 100 random polynomials
    let mut rng = seeded(61);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let f = random_poly(&q_chart(n), 5, 5, &mut rng);
        assert!(d1(&exterior_derivative(&f)).is_zero());
    }

    // pullback route equals -d1 on 100 random sections
    let mut rng = seeded(62);
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let section = random_section(n, k, 3, &mut rng);
        for r in 1..=k {
            assert_eq!(
                pullback_omega(&section, r).unwrap(),
                d1(&section.forms()[r - 1]).neg()
            );
        }
    }

    // the three worked constancy checks
    let vars = qp_chart(1, 2);
    let h = &Poly::var(vars.clone(), 1) + &Poly::var(vars.clone(), 2);
    let w1 = Poly::var(q_chart(1), 0);
    let w2 = -&Poly::var(q_chart(1), 0);
    assert!(hamilton_jacobi_check(&h, &[w1, w2]).unwrap());

    let vars = qp_chart(1, 1);
    let p = Poly::var(vars, 1);
    let h = &p * &p;
    let w = Poly::monomial(q_chart(1), vec![2], rat(1, 2));
    assert!(!hamilton_jacobi_check(&h, &[w]).unwrap());

    let vars = qp_chart(2, 2);
    let h =
        &(&Poly::var(vars.clone(), 2) * &Poly::var(vars.clone(), 4)) + &Poly::var(vars.clone(), 5);
    let q = q_chart(2);
    let w1 = &Poly::var(q.clone(), 0) - &Poly::var(q.clone(), 1);
    let w2 = &Poly::var(q.clone(), 0) + &Poly::var(q.clone(), 1);
    assert!(hamilton_jacobi_check(&h, &[w1, w2]).unwrap());

    println!("criterion 6 (symbolic form calculus): PASS");
}

#[test]
fn criterion_7_scope_declaration() {
    // The manifold-level normal-form and equivalence statements need flows
    // on tubular neighborhoods and are exercised here only through their
    // pointwise/linear shadows: the frame equality of criterion 4 and the
    // graph criterion of criterion 5. This library deliberately exposes no
    // manifold API; the declaration is recorded in the README.
    println!("criterion 7 (manifold-level content out of scope; linear shadows in 4-5): PASS");
}
