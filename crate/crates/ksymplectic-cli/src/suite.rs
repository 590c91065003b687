//! Seeded randomized verification of the library's stated invariants.
//!
//! One trial draws a random space (plus derived subspaces, maps, sections)
//! and evaluates every invariant on it, tallying pass/fail per label. Each
//! failure carries a reproducer: the trial seed and the instance, which the
//! deterministic generators regrow exactly.

use std::collections::BTreeMap;

use serde::Serialize;

use ksymplectic::darboux::{
    check_polarization, darboux_map, find_polarization, graph_criterion, is_ksymplectomorphism,
};
use ksymplectic::forms::{
    d1, exterior_derivative, hamilton_jacobi_check, is_closed_section, pullback_omega, q_chart,
    qp_chart, Section,
};
use ksymplectic::gen::{
    random_kspace, random_matrix, random_poly, random_section, random_subspace, random_vector,
    seeded, witness_polarization, ChaCha8Rng, Rng,
};
use ksymplectic::kspace::{canonical_y_index, KSymplecticSpace};
use ksymplectic::orthogonal::{
    is_l_coisotropic, is_l_isotropic, is_l_lagrangian, isotropic_complement, l_orthogonal,
    lagrangian_completion, Lagrangian,
};
use ksymplectic::poly::Poly;
use ksymplectic::rational::{int, Rational, Zero};
use ksymplectic::{Matrix, Subspace};

use crate::json::space_to_doc;

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub k_max: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LabelResult {
    pub label: String,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub label: String,
    pub trial: usize,
    pub seed: u64,
    pub instance: serde_json::Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub n_max: usize,
    pub k_max: usize,
    pub results: Vec<LabelResult>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Tally {
    counts: BTreeMap<&'static str, (usize, usize)>,
    failures: Vec<Failure>,
    trial: usize,
    seed: u64,
    instance: serde_json::Value,
}

impl Tally {
    fn check(&mut self, label: &'static str, ok: bool) {
        let entry = self.counts.entry(label).or_insert((0, 0));
        if ok {
            entry.0 += 1;
        } else {
            entry.1 += 1;
            self.failures.push(Failure {
                label: label.to_string(),
                trial: self.trial,
                seed: self.seed,
                instance: self.instance.clone(),
            });
        }
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut tally = Tally {
        counts: BTreeMap::new(),
        failures: Vec::new(),
        trial: 0,
        seed: 0,
        instance: serde_json::Value::Null,
    };

    for trial in 0..cfg.trials {
        let trial_seed = cfg.seed.wrapping_add(trial as u64);
        let mut rng = seeded(trial_seed ^ 0x9e37_79b9_7f4a_7c15);
        let n = rng.gen_range(1..=cfg.n_max.max(1));
        let k = rng.gen_range(1..=cfg.k_max.max(1));
        let (space, witness) = random_kspace(n, k, trial_seed);

        tally.trial = trial;
        tally.seed = trial_seed;
        tally.instance = serde_json::json!({
            "n": n,
            "k": k,
            "space": space_to_doc(&space),
        });

        linalg_checks(&mut tally, &mut rng);
        orthogonal_checks(&mut tally, &space, &mut rng);
        classification_checks(&mut tally, &space, &mut rng);
        constructive_checks(&mut tally, &space, &mut rng);
        kspace_checks(&mut tally, &space, &witness, n, k);
        darboux_checks(&mut tally, &space, &witness, n, k);
        graph_checks(&mut tally, cfg, trial_seed, &mut rng);
        forms_checks(&mut tally, &mut rng);
    }

    SuiteReport {
        seed: cfg.seed,
        trials: cfg.trials,
        n_max: cfg.n_max,
        k_max: cfg.k_max,
        results: tally
            .counts
            .into_iter()
            .map(|(label, (pass, fail))| LabelResult {
                label: label.to_string(),
                pass,
                fail,
            })
            .collect(),
        failures: tally.failures,
    }
}

fn linalg_checks(t: &mut Tally, rng: &mut ChaCha8Rng) {
    let rows = rng.gen_range(1..=5);
    let cols = rng.gen_range(1..=5);
    let m = random_matrix(rows, cols, rng);
    let ker = m.kernel();
    t.check("kernel-rank-nullity", ker.dim() + m.rank() == m.cols());
    t.check(
        "kernel-annihilates",
        ker.basis()
            .row_vecs()
            .iter()
            .all(|v| m.mul_vec(v).iter().all(Rational::is_zero)),
    );

    let dim = rng.gen_range(1..=5);
    let a = random_subspace(dim, rng);
    let b = random_subspace(dim, rng);
    let sum = a.sum(&b).unwrap();
    let meet = a.intersection(&b).unwrap();
    t.check(
        "lattice-modular-dimension",
        a.dim() + b.dim() == sum.dim() + meet.dim(),
    );
    t.check(
        "lattice-bounds",
        sum.contains(&a).unwrap()
            && sum.contains(&b).unwrap()
            && a.contains(&meet).unwrap()
            && b.contains(&meet).unwrap(),
    );
    let mutual = a.contains(&b).unwrap() && b.contains(&a).unwrap();
    t.check(
        "subspace-equality-is-mutual-containment",
        (a == b) == mutual,
    );
}

/// Independent route for `⋂_{r≤l} ker(ω_r|_W)`: Gram matrices of the
/// restricted forms, coefficient kernels, mapped back through the basis.
fn restricted_kernel(space: &KSymplecticSpace, w: &Subspace, level: usize) -> Subspace {
    let d = w.dim();
    if d == 0 {
        return Subspace::zero(space.dim());
    }
    let basis: Vec<Vec<Rational>> = w.basis_rows().map(<[_]>::to_vec).collect();
    let mut coeffs = Subspace::full(d);
    for r in 1..=level {
        let gram = Matrix::from_fn(d, d, |i, j| {
            space.eval_form(r, &basis[i], &basis[j]).unwrap()
        });
        coeffs = coeffs.intersection(&gram.transpose().kernel()).unwrap();
    }
    let rows: Vec<Vec<Rational>> = coeffs
        .basis_rows()
        .map(|c| {
            let mut v = vec![Rational::zero(); space.dim()];
            for (ci, bi) in c.iter().zip(&basis) {
                for (slot, e) in v.iter_mut().zip(bi) {
                    *slot += ci * e;
                }
            }
            v
        })
        .collect();
    Subspace::from_generators(space.dim(), &rows)
}

fn orthogonal_checks(t: &mut Tally, space: &KSymplecticSpace, rng: &mut ChaCha8Rng) {
    let dim = space.dim();
    let k = space.k();
    let v = random_subspace(dim, rng);
    let w = random_subspace(dim, rng);

    let mut nesting = true;
    for l in 1..k {
        let outer = l_orthogonal(space, &w, l).unwrap();
        let inner = l_orthogonal(space, &w, l + 1).unwrap();
        nesting &= outer.contains(&inner).unwrap();
    }
    t.check("orth-nesting", nesting);

    t.check(
        "orth-of-zero-is-everything",
        (1..=k).all(|l| {
            l_orthogonal(space, &Subspace::zero(dim), l)
                .unwrap()
                .is_full()
        }),
    );

    let mut antitone = true;
    let mut double = true;
    let mut meet_kernel = true;
    let mut sum_equality = true;
    let mut corollary = true;
    let mut bound = true;
    for l in 1..=k {
        let vo = l_orthogonal(space, &v, l).unwrap();
        let wo = l_orthogonal(space, &w, l).unwrap();
        let meet = v.intersection(&w).unwrap();
        let mo = l_orthogonal(space, &meet, l).unwrap();
        antitone &= mo.contains(&wo).unwrap() && mo.contains(&vo).unwrap();

        let woo = l_orthogonal(space, &wo, l).unwrap();
        double &= woo.contains(&w).unwrap();

        meet_kernel &= w.intersection(&wo).unwrap() == restricted_kernel(space, &w, l);

        let sum = v.sum(&w).unwrap();
        sum_equality &= l_orthogonal(space, &sum, l).unwrap() == vo.intersection(&wo).unwrap();

        let plus = vo.sum(&wo).unwrap();
        let dbl = l_orthogonal(space, &l_orthogonal(space, &plus, l).unwrap(), l).unwrap();
        corollary &= mo.contains(&dbl).unwrap();

        bound &= w.dim() + wo.dim() <= 2 * dim;
    }
    t.check("orth-reverses-inclusion", antitone);
    t.check("orth-double-complement-grows", double);
    t.check("orth-meet-is-restricted-kernel", meet_kernel);
    t.check("sum-orth-equality", sum_equality);
    t.check("corollary-double-orth-inclusion", corollary);
    t.check("orth-dimension-bound", bound);

    let l1 = rng.gen_range(1..=k);
    let l2 = rng.gen_range(1..=k);
    let l = l1.min(l2);
    let vo = l_orthogonal(space, &v, l1).unwrap();
    let wo = l_orthogonal(space, &w, l2).unwrap();
    let meet = v.intersection(&w).unwrap();
    let sum = v.sum(&w).unwrap();
    t.check(
        "mixed-level-sum-inclusion",
        l_orthogonal(space, &meet, l)
            .unwrap()
            .contains(&vo.sum(&wo).unwrap())
            .unwrap(),
    );
    t.check(
        "mixed-level-meet-inclusion",
        l_orthogonal(space, &sum, l)
            .unwrap()
            .contains(&vo.intersection(&wo).unwrap())
            .unwrap(),
    );

    let full = Subspace::full(dim);
    let mut meet = Subspace::full(dim);
    let mut full_ok = true;
    for l in 1..=k {
        meet = meet.intersection(&space.form(l).unwrap().kernel()).unwrap();
        full_ok &= l_orthogonal(space, &full, l).unwrap() == meet;
    }
    full_ok &= l_orthogonal(space, &full, k).unwrap().is_zero();
    t.check("full-space-orth-is-kernel-meet", full_ok);
}

fn classification_checks(t: &mut Tally, space: &KSymplecticSpace, rng: &mut ChaCha8Rng) {
    let dim = space.dim();
    let k = space.k();

    let line = Subspace::line(&random_vector(dim, rng));
    t.check(
        "line-is-isotropic",
        (1..=k).all(|l| is_l_isotropic(space, &line, l).unwrap()),
    );

    let hyper = loop {
        let s = Subspace::from_matrix(&random_matrix(dim - 1, dim, rng));
        if s.dim() == dim - 1 {
            break s;
        }
    };
    t.check(
        "hyperplane-is-k-coisotropic",
        is_l_coisotropic(space, &hyper, k).unwrap(),
    );

    let w = random_subspace(dim, rng);
    let mut dual_route = true;
    let mut downward = true;
    let mut upward = true;
    for l in 1..=k {
        let pairwise = is_l_isotropic(space, &w, l).unwrap();
        let via_orth = l_orthogonal(space, &w, l).unwrap().contains(&w).unwrap();
        dual_route &= pairwise == via_orth;
        if pairwise {
            downward &= (1..l).all(|l2| is_l_isotropic(space, &w, l2).unwrap());
        }
        if is_l_coisotropic(space, &w, l).unwrap() {
            upward &= (l + 1..=k).all(|l2| is_l_coisotropic(space, &w, l2).unwrap());
        }
    }
    t.check("isotropy-dual-route", dual_route);
    t.check("isotropy-downward-closure", downward);
    t.check("coisotropy-upward-closure", upward);
}

fn constructive_checks(t: &mut Tally, space: &KSymplecticSpace, rng: &mut ChaCha8Rng) {
    let dim = space.dim();
    let k = space.k();
    let level = rng.gen_range(1..=k);

    // an isotropic seed: a random line, or zero as fallback
    let line = Subspace::line(&random_vector(dim, rng));
    let seed_subspace = if is_l_isotropic(space, &line, level).unwrap() {
        line
    } else {
        Subspace::zero(dim)
    };

    let w = lagrangian_completion(space, &seed_subspace, level).unwrap();
    t.check(
        "completion-contains-seed",
        w.contains(&seed_subspace).unwrap(),
    );
    t.check(
        "completion-is-fixed-point",
        l_orthogonal(space, &w, level).unwrap() == w,
    );

    match is_l_lagrangian(space, &w, level).unwrap() {
        Lagrangian::Yes { complement } => {
            t.check(
                "completion-lagrangian-witness-verified",
                is_l_isotropic(space, &complement, level).unwrap()
                    && w.sum(&complement).unwrap().is_full()
                    && w.intersection(&complement).unwrap().is_zero(),
            );
        }
        _ => t.check("completion-lagrangian-witness-verified", false),
    }

    match isotropic_complement(space, &w, level) {
        Ok(u) => t.check(
            "complement-direct-sum-verified",
            is_l_isotropic(space, &u, level).unwrap()
                && w.sum(&u).unwrap().is_full()
                && w.intersection(&u).unwrap().is_zero(),
        ),
        Err(_) => t.check("complement-direct-sum-verified", false),
    }

    // k-lagrangian maximality: completing a completion changes nothing
    let w1 = lagrangian_completion(space, &Subspace::zero(dim), k).unwrap();
    let w2 = lagrangian_completion(space, &w1, k).unwrap();
    t.check("k-lagrangian-maximality", w1 == w2);
}

fn kspace_checks(t: &mut Tally, space: &KSymplecticSpace, witness: &Matrix, n: usize, k: usize) {
    t.check(
        "construction-revalidates",
        KSymplecticSpace::new(space.dim(), space.forms().to_vec()).is_ok(),
    );

    let canonical = KSymplecticSpace::canonical(n, k);
    let mut kernels = true;
    for r in 1..=k {
        let axes: Vec<usize> = (1..=k)
            .filter(|&s| s != r)
            .flat_map(|s| (0..n).map(move |i| canonical_y_index(n, s, i)))
            .collect();
        kernels &= canonical.form(r).unwrap().kernel()
            == Subspace::coordinate_span(canonical.dim(), &axes);
    }
    t.check("canonical-kernels-are-other-y-blocks", kernels);

    t.check(
        "witness-maps-generated-to-canonical",
        is_ksymplectomorphism(space, &canonical, witness).unwrap(),
    );
}

fn darboux_checks(t: &mut Tally, space: &KSymplecticSpace, witness: &Matrix, n: usize, k: usize) {
    let w = witness_polarization(n, k, witness);
    t.check(
        "witness-polarization-checks",
        check_polarization(space, &w).unwrap(),
    );

    let canonical = KSymplecticSpace::canonical(n, k);
    match darboux_map(space, &w, None) {
        Ok(frame) => {
            let p = &frame.change_of_basis;
            let pt = p.transpose();
            let exact =
                (1..=k).all(|r| &(&pt * space.form(r).unwrap()) * p == *canonical.form(r).unwrap());
            t.check("darboux-frame-exact", exact);
        }
        Err(_) => t.check("darboux-frame-exact", false),
    }

    match find_polarization(space, 0) {
        Some(found) => t.check(
            "polarization-search-succeeds",
            check_polarization(space, &found).unwrap(),
        ),
        None => t.check("polarization-search-succeeds", false),
    }

    // transport: pull the canonical polarization back through the witness
    let y_axes: Vec<usize> = (1..=k)
        .flat_map(|r| (0..n).map(move |i| canonical_y_index(n, r, i)))
        .collect();
    let y = Subspace::coordinate_span(canonical.dim(), &y_axes);
    let pulled = y.apply(&witness.inverse().unwrap()).unwrap();
    t.check(
        "polarization-transport",
        check_polarization(space, &pulled).unwrap(),
    );
}

fn graph_checks(t: &mut Tally, cfg: &SuiteConfig, trial_seed: u64, rng: &mut ChaCha8Rng) {
    // products double the dimension; keep the factors small enough that the
    // witness construction stays fast
    let mut n = rng.gen_range(1..=cfg.n_max.max(1));
    let k = rng.gen_range(1..=cfg.k_max.max(1));
    if 2 * n * (k + 1) > 12 {
        n = 1;
    }

    let (s1, p1) = random_kspace(n, k, trial_seed.wrapping_mul(3).wrapping_add(1));
    let (s2, p2) = random_kspace(n, k, trial_seed.wrapping_mul(3).wrapping_add(2));
    let canonical = KSymplecticSpace::canonical(n, k);

    // p1: s1 → canonical, p2⁻¹: canonical → s2, so the composite maps s1 → s2
    let composite = &p2.inverse().unwrap() * &p1;
    let mut positive = true;
    let mut fixed_point = true;
    for (a, b, p) in [
        (&s1, &canonical, p1.clone()),
        (&canonical, &s1, p1.inverse().unwrap()),
        (&s1, &s2, composite),
    ] {
        let check = graph_criterion(a, b, &p).unwrap();
        positive &=
            check.symplectomorphism && check.graph_lagrangian.is_yes() && check.sides_agree();

        // these graphs are k-lagrangian by definition (the graph of the
        // negated map is an explicit isotropic complement), so they must
        // equal their own k-th orthogonal complement
        let product = a.product_ominus(b).unwrap();
        let graph = ksymplectic::darboux::graph_subspace(a, b, &p).unwrap();
        fixed_point &= l_orthogonal(&product, &graph, product.k()).unwrap() == graph;
    }
    t.check("graph-iff-symplectomorphisms", positive);
    t.check("k-lagrangian-equals-own-complement", fixed_point);

    // a perturbed invertible map that fails the direct test must also fail
    // the graph test
    let perturbed = loop {
        let q = random_matrix(s1.dim(), s1.dim(), rng);
        if q.is_invertible() && !is_ksymplectomorphism(&s1, &canonical, &q).unwrap() {
            break q;
        }
    };
    let check = graph_criterion(&s1, &canonical, &perturbed).unwrap();
    t.check(
        "graph-iff-non-symplectomorphisms",
        !check.symplectomorphism && check.graph_lagrangian == Lagrangian::No && check.sides_agree(),
    );
}

fn forms_checks(t: &mut Tally, rng: &mut ChaCha8Rng) {
    let n = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=3);
    let vars = q_chart(n);

    let f = random_poly(&vars, 4, 4, rng);
    t.check("d-squared-zero", d1(&exterior_derivative(&f)).is_zero());

    let section = random_section(n, k, 3, rng);
    t.check(
        "pullback-is-minus-d1",
        (1..=k).all(|r| pullback_omega(&section, r).unwrap() == d1(&section.forms()[r - 1]).neg()),
    );

    let potentials: Vec<Poly> = (0..k).map(|_| random_poly(&vars, 4, 3, rng)).collect();
    let exact = Section::from_potentials(&potentials).unwrap();
    t.check("gradient-sections-closed", is_closed_section(&exact));

    let h = random_poly(&qp_chart(n, k), 2, 4, rng);
    let shifted: Vec<Poly> = potentials
        .iter()
        .map(|p| p + &Poly::constant(vars.clone(), int(7)))
        .collect();
    t.check(
        "hamilton-jacobi-constant-shift",
        hamilton_jacobi_check(&h, &potentials).unwrap()
            == hamilton_jacobi_check(&h, &shifted).unwrap(),
    );
}
