//! Polynomial exterior calculus on a single chart.
//!
//! Charts are named variable lists: the base chart `q1..qn` and the extended
//! chart `q1..qn, p1_1..p1_n, …, pk_1..pk_n` (the p-block for superscript r
//! lists `pr_1..pr_n`). A [`Section`] is a k-tuple of polynomial one-forms
//! on the base chart, read as a section of the bundle carrying the canonical
//! two-forms `Ω_r = Σ_i dq^i ∧ dp^r_i`.
//!
//! Two independent pipelines meet here. `d1` differentiates coefficients
//! directly; [`pullback_omega`] substitutes the section into `Ω_r` and
//! expands wedges along the generic pullback of a two-form through a
//! polynomial map. For every section the two agree up to sign
//! (`γ*Ω_r = -dγ_r`), and [`is_closed_section`] checks both and asserts the
//! agreement.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poly::Poly;
use crate::rational::int;

/// Variable names `q1..qn`.
pub fn q_chart(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("q{i}")).collect()
}

/// Variable names `q1..qn, p1_1..p1_n, …, pk_1..pk_n`.
pub fn qp_chart(n: usize, k: usize) -> Vec<String> {
    let mut vars = q_chart(n);
    for r in 1..=k {
        for i in 1..=n {
            vars.push(format!("p{r}_{i}"));
        }
    }
    vars
}

/// Index of `pr_i` (1-based `r`, 0-based `i`) in [`qp_chart`].
pub fn qp_index(n: usize, r: usize, i: usize) -> usize {
    n + (r - 1) * n + i
}

/// A one-form `Σ_i c_i dx^i` with polynomial coefficients on one chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneForm {
    vars: Vec<String>,
    coeffs: Vec<Poly>,
}

impl OneForm {
    /// Panics unless every coefficient lives on `vars` and there is one per
    /// variable.
    pub fn new(vars: Vec<String>, coeffs: Vec<Poly>) -> Self {
        assert_eq!(coeffs.len(), vars.len(), "one coefficient per variable");
        for c in &coeffs {
            assert_eq!(c.vars(), &vars[..], "coefficient on the wrong chart");
        }
        OneForm { vars, coeffs }
    }

    pub fn zero(vars: Vec<String>) -> Self {
        let coeffs = (0..vars.len()).map(|_| Poly::zero(vars.clone())).collect();
        OneForm { vars, coeffs }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }
}

/// A two-form `Σ_{i<j} c_{ij} dx^i ∧ dx^j`; only nonzero coefficients are
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm {
    vars: Vec<String>,
    coeffs: BTreeMap<(usize, usize), Poly>,
}

impl TwoForm {
    pub fn zero(vars: Vec<String>) -> Self {
        TwoForm {
            vars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Coefficients over index pairs `i < j`, in lexicographic order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&(usize, usize), &Poly)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Poly {
        assert!(i < j, "two-form coefficients are indexed by i < j");
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.vars.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn insert(&mut self, i: usize, j: usize, p: Poly) {
        if p.is_zero() {
            return;
        }
        match self.coeffs.entry((i, j)) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &p;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &TwoForm) -> TwoForm {
        assert_eq!(self.vars, other.vars, "two-forms on different charts");
        let mut out = self.clone();
        for (&(i, j), p) in &other.coeffs {
            out.insert(i, j, p.clone());
        }
        out
    }

    pub fn neg(&self) -> TwoForm {
        TwoForm {
            vars: self.vars.clone(),
            coeffs: self.coeffs.iter().map(|(k, p)| (*k, -p)).collect(),
        }
    }
}

/// Exterior derivative of a function: `df = Σ_i ∂f/∂x^i dx^i`.
pub fn exterior_derivative(f: &Poly) -> OneForm {
    OneForm {
        vars: f.vars().to_vec(),
        coeffs: f.gradient(),
    }
}

/// Exterior derivative of a one-form:
/// `(dγ)_{ij} = ∂γ_j/∂x^i - ∂γ_i/∂x^j` for `i < j`.
pub fn d1(gamma: &OneForm) -> TwoForm {
    let n = gamma.vars.len();
    let mut out = TwoForm::zero(gamma.vars.clone());
    for i in 0..n {
        for j in i + 1..n {
            let c = &gamma.coeffs[j].partial(i) - &gamma.coeffs[i].partial(j);
            out.insert(i, j, c);
        }
    }
    out
}

/// Wedge of two one-forms: coefficient of `dx^i ∧ dx^j` is
/// `a_i b_j - a_j b_i`.
pub fn wedge(a: &OneForm, b: &OneForm) -> TwoForm {
    assert_eq!(a.vars, b.vars, "one-forms on different charts");
    let n = a.vars.len();
    let mut out = TwoForm::zero(a.vars.clone());
    for i in 0..n {
        for j in i + 1..n {
            let c = &(&a.coeffs[i] * &b.coeffs[j]) - &(&a.coeffs[j] * &b.coeffs[i]);
            out.insert(i, j, c);
        }
    }
    out
}

/// The canonical two-form `Ω_r = Σ_i dq^i ∧ dp^r_i` on [`qp_chart`].
pub fn canonical_two_form(n: usize, k: usize, r: usize) -> TwoForm {
    assert!((1..=k).contains(&r));
    let vars = qp_chart(n, k);
    let mut out = TwoForm::zero(vars.clone());
    for i in 0..n {
        out.insert(i, qp_index(n, r, i), Poly::constant(vars.clone(), int(1)));
    }
    out
}

/// A polynomial map between charts: `components[a]` expresses the a-th
/// target variable in source variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    source_vars: Vec<String>,
    target_vars: Vec<String>,
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(target_vars: Vec<String>, components: Vec<Poly>) -> Result<Self, Error> {
        if components.len() != target_vars.len() {
            return Err(Error::VariableMismatch {
                detail: format!(
                    "{} components for {} target variables",
                    components.len(),
                    target_vars.len()
                ),
            });
        }
        let source_vars = components
            .first()
            .map(|p| p.vars().to_vec())
            .unwrap_or_default();
        if components.iter().any(|p| p.vars() != &source_vars[..]) {
            return Err(Error::VariableMismatch {
                detail: String::from("map components disagree on source variables"),
            });
        }
        Ok(PolyMap {
            source_vars,
            target_vars,
            components,
        })
    }

    /// Pull a two-form on the target chart back along the map:
    /// `F*(Σ c_{ab} dX^a ∧ dX^b) = Σ (c_{ab}∘F) dF_a ∧ dF_b`.
    pub fn pullback(&self, omega: &TwoForm) -> Result<TwoForm, Error> {
        if omega.vars != self.target_vars {
            return Err(Error::VariableMismatch {
                detail: String::from("two-form chart does not match the map target"),
            });
        }
        let differentials: Vec<OneForm> = self.components.iter().map(exterior_derivative).collect();
        let mut out = TwoForm::zero(self.source_vars.clone());
        for (&(a, b), c) in &omega.coeffs {
            let pulled_coeff = c.substitute(&self.components)?;
            let piece = wedge(&differentials[a], &differentials[b]);
            for (&(i, j), p) in &piece.coeffs {
                out.insert(i, j, &pulled_coeff * p);
            }
        }
        Ok(out)
    }
}

/// A k-tuple of polynomial one-forms on the chart `q1..qn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    n: usize,
    forms: Vec<OneForm>,
}

impl Section {
    /// All component forms must live on one chart, which must be `q1..qn`.
    pub fn new(forms: Vec<OneForm>) -> Result<Self, Error> {
        let Some(first) = forms.first() else {
            return Err(Error::VariableMismatch {
                detail: String::from("a section needs at least one component"),
            });
        };
        let n = first.vars.len();
        let expected = q_chart(n);
        for form in &forms {
            if form.vars != expected {
                return Err(Error::VariableMismatch {
                    detail: format!("section components must live on the chart q1..q{n}"),
                });
            }
        }
        Ok(Section { n, forms })
    }

    /// The exact section `γ_r = dW_r` of the given potentials.
    pub fn from_potentials(potentials: &[Poly]) -> Result<Self, Error> {
        let forms = potentials.iter().map(exterior_derivative).collect();
        Self::new(forms)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[OneForm] {
        &self.forms
    }

    /// The graph map `q ↦ (q, γ_1(q), …, γ_k(q))` into the extended chart.
    pub fn graph_map(&self) -> PolyMap {
        let q = q_chart(self.n);
        let mut components: Vec<Poly> = (0..self.n).map(|i| Poly::var(q.clone(), i)).collect();
        for form in &self.forms {
            components.extend(form.coeffs.iter().cloned());
        }
        PolyMap::new(qp_chart(self.n, self.k()), components)
            .expect("section components share the base chart")
    }
}

/// Pull the canonical two-form `Ω_r` back along the section, by direct
/// substitution and wedge expansion. Equals `-d1(γ_r)` for every section.
pub fn pullback_omega(section: &Section, r: usize) -> Result<TwoForm, Error> {
    if r == 0 || r > section.k() {
        return Err(Error::LevelOutOfRange {
            level: r,
            k: section.k(),
        });
    }
    let omega = canonical_two_form(section.n, section.k(), r);
    section.graph_map().pullback(&omega)
}

/// Is every component one-form closed? Both available routes are computed
/// (`d1` and the substitution pullback) and their agreement `γ*Ω_r = -dγ_r`
/// is asserted before answering.
pub fn is_closed_section(section: &Section) -> bool {
    let mut closed = true;
    for (idx, form) in section.forms.iter().enumerate() {
        let d = d1(form);
        let pulled = pullback_omega(section, idx + 1).expect("component index is in range");
        assert_eq!(
            pulled,
            d.neg(),
            "substitution pullback and coefficient derivative disagree"
        );
        closed &= d.is_zero();
    }
    closed
}

/// A polynomial potential with `dW = γ`, when the one-form is closed; `None`
/// otherwise. Integrates along rays from the origin, which is exact for
/// polynomial coefficients; the result is verified against `γ` before being
/// returned.
pub fn potential(gamma: &OneForm) -> Option<Poly> {
    if !d1(gamma).is_zero() {
        return None;
    }
    let vars = gamma.vars.clone();
    let mut w = Poly::zero(vars.clone());
    for (i, coeff) in gamma.coeffs.iter().enumerate() {
        for (exp, c) in coeff.terms() {
            let mut raised = exp.0.clone();
            raised[i] += 1;
            let degree = i64::from(exp.total_degree()) + 1;
            w = &w + &Poly::monomial(vars.clone(), raised, c / &int(degree));
        }
    }
    let check = exterior_derivative(&w);
    assert_eq!(
        check, *gamma,
        "ray integration of a closed polynomial form must invert d"
    );
    Some(w)
}

fn validate_potentials(potentials: &[Poly]) -> Result<usize, Error> {
    let Some(first) = potentials.first() else {
        return Err(Error::VariableMismatch {
            detail: String::from("no potentials supplied"),
        });
    };
    let n = first.vars().len();
    let expected = q_chart(n);
    for p in potentials {
        if p.vars() != &expected[..] {
            return Err(Error::VariableMismatch {
                detail: format!("potentials must live on the chart q1..q{n}"),
            });
        }
    }
    Ok(n)
}

/// The Hamilton-Jacobi constancy check for potentials `W_1..W_k`:
/// substitute `pr_i := ∂W_r/∂q^i` into `h` and test whether the gradient of
/// the resulting polynomial in `q` vanishes identically.
pub fn hamilton_jacobi_check(h: &Poly, potentials: &[Poly]) -> Result<bool, Error> {
    let n = validate_potentials(potentials)?;
    let k = potentials.len();
    let section = Section::from_potentials(potentials)?;
    composed_hamiltonian_is_constant(h, n, k, &section)
}

/// Hamilton-Jacobi check for a raw section: the section must be closed
/// (otherwise [`Error::NotClosed`]), then `pr_i := γ_{r,i}` is substituted
/// into `h` and constancy of the composite is tested.
pub fn hamilton_jacobi_check_section(h: &Poly, section: &Section) -> Result<bool, Error> {
    if !is_closed_section(section) {
        return Err(Error::NotClosed);
    }
    composed_hamiltonian_is_constant(h, section.n(), section.k(), section)
}

fn composed_hamiltonian_is_constant(
    h: &Poly,
    n: usize,
    k: usize,
    section: &Section,
) -> Result<bool, Error> {
    let expected = qp_chart(n, k);
    if h.vars() != &expected[..] {
        return Err(Error::VariableMismatch {
            detail: format!("hamiltonian must live on the chart q1..q{n}, p1_1..p{k}_{n}"),
        });
    }
    let q = q_chart(n);
    let mut images: Vec<Poly> = (0..n).map(|i| Poly::var(q.clone(), i)).collect();
    for form in section.forms() {
        images.extend(form.coeffs().iter().cloned());
    }
    let composed = h.substitute(&images)?;
    Ok(composed.gradient().iter().all(Poly::is_zero))
}
