use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::classfn::{unipotent_inner_product, ClassFn};
use super::induce::{ggg_character, induce_to_gl, induce_to_ut, induce_ut_to_gl, supercharacter, InductionMethod, LinearCharacter};
use super::theta::{degree_one_theta_partitions, multiplicity_cuspidal, multiplicity_gl, multiplicity_lr, ThetaPartition};
use super::unipotent::{unipotent_character_values, verify_characterization};
use crate::arcdiag::{
    ab_sets, build_c_tableau, ctr_composition, enumerate_column_tableaux, ggg, nonnesting_set_partitions, tau,
    tau_inverse, ColumnTableau, SetPartition,
};
use crate::error::{Error, Result};
use crate::matgrp::{dyck_paths, jordan_type, PatternSubgroup};
use crate::partcomb::{compositions, cuspidal_value, kostka_foulkes, partitions, rearrangements, transition_matrices, Composition, Partition};
use crate::qpoly::{rational_json, Cyclotomic, LaurentPoly, RationalFn};
use crate::symfunc::{convert, hl_h, hl_q, pi_x, pi_y, plethysm_1_minus_q, product, Basis, SymExpr};

/// The verification suites, one per acceptance criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    UnipotentMultiplicity,
    Triangularity,
    Sufficiency,
    Supercharacter,
    HlImage,
    TransformedImage,
    MatrixIdentity,
    ProjectionAlgebra,
    MultiplicityFormulas,
    Combinatorics,
    JordanBound,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::UnipotentMultiplicity,
        Suite::Triangularity,
        Suite::Sufficiency,
        Suite::Supercharacter,
        Suite::HlImage,
        Suite::TransformedImage,
        Suite::MatrixIdentity,
        Suite::ProjectionAlgebra,
        Suite::MultiplicityFormulas,
        Suite::Combinatorics,
        Suite::JordanBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::UnipotentMultiplicity => "unipotent-multiplicity",
            Suite::Triangularity => "triangularity",
            Suite::Sufficiency => "sufficiency",
            Suite::Supercharacter => "supercharacter",
            Suite::HlImage => "hl-image",
            Suite::TransformedImage => "transformed-image",
            Suite::MatrixIdentity => "matrix-identity",
            Suite::ProjectionAlgebra => "projection-algebra",
            Suite::MultiplicityFormulas => "multiplicity-formulas",
            Suite::Combinatorics => "combinatorics",
            Suite::JordanBound => "jordan-bound",
        }
    }

    /// The acceptance criterion number.
    pub fn criterion(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") + 1
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::UnipotentMultiplicity => "<Γ_λ, χ^μ> = K_{μλ}(p) for all λ, μ ⊢ n",
            Suite::Triangularity => "<Γ_λ, χ^μ> = 0 unless μ ⪰ λ, = 1 at μ = λ; Γ_λ(u_μ) = 0 unless μ ⪯ λ, ≠ 0 at μ = λ",
            Suite::Sufficiency => "Dyck-path U_D containing u_η, with γ_η a homomorphism and U_D inside some U_α for α a rearrangement of bl(η)′, induce to |U_ctr(bl(η)′)|/|U_D| · Γ_bl(η)",
            Suite::Supercharacter => "Ind(χ_nn^sp(T)) = |V_T| Γ_μ and χ_nn^sp(T) = |V_T| Ind_{U_T}(γ) for T ∈ T_α^nn",
            Suite::HlImage => "coefficients of (−1)^n Q_λ in the P̃ basis at q = p equal Γ_λ(u_μ)",
            Suite::TransformedImage => "(−1)^n Q_λ[X/(1−q)] = H_λ for |λ| ≤ n",
            Suite::MatrixIdentity => "(−1)^m diag(q^{−n(λ)}) K(q^{−1})^{−1} K(q) b(q)^{−1} is upper triangular for m ≤ n",
            Suite::ProjectionAlgebra => "π_X π_Y(p_k) = p_k/(q^k − 1) and the signed plethysm is multiplicative, degree ≤ n",
            Suite::MultiplicityFormulas => "GL and LR multiplicity routes agree; cuspidal values for degrees ≤ n",
            Suite::Combinatorics => "ctr, C_λ, ggg, tableau judgments, and τ: B → A bijective for |α| ≤ n",
            Suite::JordanBound => "every u ∈ U_α has Jordan type ⪯ (sorted α)′, for all α ⊨ n",
        }
    }

    /// Whether `p` is used (group-level suites).
    pub fn uses_group(self) -> bool {
        matches!(
            self,
            Suite::UnipotentMultiplicity
                | Suite::Triangularity
                | Suite::Sufficiency
                | Suite::Supercharacter
                | Suite::HlImage
                | Suite::JordanBound
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub p: u32,
    pub budget: u64,
    pub method: InductionMethod,
}

impl SuiteConfig {
    pub fn new(n: usize, p: u32) -> Self {
        Self { n, p, budget: crate::matgrp::default_budget(), method: InductionMethod::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    #[serde(flatten)]
    pub params: Map<String, Value>,
    pub expected: Value,
    pub actual: Value,
    pub ok: bool,
}

impl Case {
    fn new(params: Value, expected: Value, actual: Value, ok: bool) -> Self {
        let params = match params {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("case".into(), other);
                m
            }
        };
        Self { params, expected, actual, ok }
    }

    fn equal(params: Value, expected: Value, actual: Value) -> Self {
        let ok = expected == actual;
        Self::new(params, expected, actual, ok)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub theorem: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub cases: Vec<Case>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.ok)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// One case per row: suite, n, p, the case parameters as JSON, expected, actual, ok.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Invalid(e.to_string());
        w.write_record(["theorem", "n", "p", "params", "expected", "actual", "ok"]).map_err(io)?;
        for c in &self.cases {
            w.write_record([
                self.theorem.clone(),
                self.n.to_string(),
                self.p.map(|p| p.to_string()).unwrap_or_default(),
                Value::Object(c.params.clone()).to_string(),
                c.expected.to_string(),
                c.actual.to_string(),
                c.ok.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let p = self.p.map(|p| format!(" p={p}")).unwrap_or_default();
        let passed = self.cases.iter().filter(|c| c.ok).count();
        out.push_str(&format!("{} n={}{}: {}/{} cases ok\n", self.theorem, self.n, p, passed, self.cases.len()));
        for c in &self.cases {
            out.push_str(&format!(
                "  [{}] {} expected={} actual={}\n",
                if c.ok { "ok" } else { "FAIL" },
                Value::Object(c.params.clone()),
                c.expected,
                c.actual
            ));
        }
        out
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Report> {
    if cfg.n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let cases = match suite {
        Suite::UnipotentMultiplicity => unipotent_multiplicity(cfg)?,
        Suite::Triangularity => triangularity(cfg)?,
        Suite::Sufficiency => sufficiency(cfg)?,
        Suite::Supercharacter => supercharacter_route(cfg)?,
        Suite::HlImage => hl_image(cfg)?,
        Suite::TransformedImage => transformed_image(cfg.n)?,
        Suite::MatrixIdentity => matrix_identity(cfg.n),
        Suite::ProjectionAlgebra => projection_algebra(cfg.n)?,
        Suite::MultiplicityFormulas => multiplicity_formulas(cfg.n)?,
        Suite::Combinatorics => combinatorics(cfg.n)?,
        Suite::JordanBound => jordan_bound(cfg)?,
    };
    Ok(Report {
        theorem: suite.name().to_string(),
        n: cfg.n,
        p: suite.uses_group().then_some(cfg.p),
        cases,
        elapsed_ms: None,
    })
}

fn part_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn cyc_json(c: &Cyclotomic) -> Value {
    Value::from(c)
}

fn int_at(f: &LaurentPoly, p: u32) -> Result<BigRational> {
    f.eval_int(p as i64)
}

fn ggg_characters(cfg: &SuiteConfig) -> Result<BTreeMap<Partition, ClassFn>> {
    partitions(cfg.n)
        .into_iter()
        .map(|la| Ok((la.clone(), ggg_character(&la, cfg.p, cfg.method, cfg.budget)?)))
        .collect()
}

fn unipotent_multiplicity(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let chars = unipotent_character_values(cfg.n, cfg.p)?;
    let gammas = ggg_characters(cfg)?;
    let mut cases = Vec::new();
    for (la, gamma) in &gammas {
        for (mu, chi) in &chars {
            let kf = kostka_foulkes(mu, la)?;
            let expected = Cyclotomic::rational(cfg.p, int_at(&kf, cfg.p)?);
            let actual = unipotent_inner_product(gamma, chi)?;
            cases.push(Case::new(
                json!({"lambda": part_json(la), "mu": part_json(mu), "kostka_foulkes": kf}),
                cyc_json(&expected),
                cyc_json(&actual),
                expected == actual,
            ));
        }
    }
    Ok(cases)
}

fn triangularity(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let chars = unipotent_character_values(cfg.n, cfg.p)?;
    let gammas = ggg_characters(cfg)?;
    let mut cases = Vec::new();
    for (la, gamma) in &gammas {
        for (mu, chi) in &chars {
            let params = |check: &str| json!({"check": check, "lambda": part_json(la), "mu": part_json(mu)});
            let ip = unipotent_inner_product(gamma, chi)?;
            if !mu.dominates(la)? {
                cases.push(Case::new(params("inner-product-vanishes"), json!(0), cyc_json(&ip), ip.is_zero()));
            }
            if mu == la {
                let one = Cyclotomic::one(cfg.p);
                cases.push(Case::new(params("inner-product-one"), json!(1), cyc_json(&ip), ip == one));
            }
            let v = gamma.get(mu);
            if !la.dominates(mu)? {
                cases.push(Case::new(params("value-vanishes"), json!(0), cyc_json(v), v.is_zero()));
            }
            if mu == la {
                cases.push(Case::new(params("value-nonzero"), json!("nonzero"), cyc_json(v), !v.is_zero()));
            }
        }
    }
    Ok(cases)
}

fn u_eta_in(eta: &SetPartition, u: &PatternSubgroup) -> bool {
    eta.arcs().all(|(i, j)| u.has_position(i, j))
}

fn sufficiency(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let n = cfg.n;
    let p = cfg.p;
    let chars = unipotent_character_values(n, p)?;
    let gammas = ggg_characters(cfg)?;
    let mut cases = Vec::new();
    for eta in nonnesting_set_partitions(n) {
        let bl = eta.block_sizes();
        let radicals: Vec<PatternSubgroup> = rearrangements(&bl.conjugate())
            .iter()
            .map(|a| PatternSubgroup::from_composition(a, p))
            .collect::<Result<_>>()?;
        for path in dyck_paths(n) {
            let u = PatternSubgroup::from_dyck(&path, p)?;
            let a = u_eta_in(&eta, &u);
            let square = u.square_positions();
            let b = eta.arcs().all(|arc| !square.contains(&arc));
            let c = radicals.iter().any(|r| u.is_subgroup_of(r));
            if !(a && b && c) {
                continue;
            }
            let gamma = LinearCharacter::new(u.clone(), &eta)?;
            let f = induce_to_gl(&gamma, cfg.method, cfg.budget)?;
            let res = verify_characterization(&f, &bl, &chars)?;
            let ctr = PatternSubgroup::ctr(&bl, p)?;
            let ratio = BigRational::new(BigInt::from(ctr.order()), BigInt::from(u.order()));
            let pointwise = f == gammas[&bl].scale(&ratio);
            let expected = json!({"is_multiple": true, "c": rational_json(&ratio), "pointwise": true});
            let actual = json!({
                "is_multiple": res.is_multiple,
                "c": res.c.as_ref().map(cyc_json).unwrap_or(Value::Null),
                "pointwise": pointwise,
            });
            cases.push(Case::equal(
                json!({"eta": eta.to_string(), "dyck": path.to_string(), "block_sizes": part_json(&bl)}),
                expected,
                actual,
            ));
        }
    }
    Ok(cases)
}

fn classfn_json(f: &ClassFn) -> Value {
    Value::Array(f.values().values().map(cyc_json).collect())
}

fn supercharacter_route(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let n = cfg.n;
    let p = cfg.p;
    let gammas = ggg_characters(cfg)?;
    let mut cases = Vec::new();
    for mu in partitions(n) {
        for alpha in rearrangements(&mu.conjugate()) {
            let ualpha = PatternSubgroup::from_composition(&alpha, p)?;
            for t in enumerate_column_tableaux(&alpha, true) {
                let sp = t.sp();
                let usp = PatternSubgroup::from_set_partition(&sp, p)?;
                let (ut, vt) = PatternSubgroup::u_t_v_t(&t, p)?;
                let v_order = BigRational::from_integer(BigInt::from(vt.order()));
                let chi = supercharacter(&sp, p, cfg.budget)?;
                let params = |check: &str| {
                    json!({
                        "check": check,
                        "mu": part_json(&mu),
                        "alpha": alpha.parts(),
                        "rows": t.rows(),
                        "sp_in_u_alpha": usp.is_subgroup_of(&ualpha),
                    })
                };
                let induced = induce_ut_to_gl(&chi, cfg.method, cfg.budget)?;
                let target = gammas[&mu].scale(&v_order);
                cases.push(Case::equal(params("induces-to-multiple"), classfn_json(&target), classfn_json(&induced)));
                let restricted = induce_to_ut(&LinearCharacter::new(ut, &sp)?, cfg.budget)?.scale(&v_order);
                let mismatches = chi.values().iter().zip(restricted.values()).filter(|(a, b)| a != b).count();
                cases.push(Case::new(params("pointwise-multiple"), json!(0), json!(mismatches), mismatches == 0));
            }
        }
        // the column reading tableau of the left-justified diagram
        let alpha = Composition::new(mu.conjugate().parts().to_vec())?;
        let t = column_reading_tableau(&mu)?;
        let (_, vt) = PatternSubgroup::u_t_v_t(&t, p)?;
        let v_inv = BigRational::new(BigInt::one(), BigInt::from(vt.order()));
        let scaled = supercharacter(&t.sp(), p, cfg.budget)?.scale(&v_inv);
        let integral = scaled.values().iter().all(Cyclotomic::is_integral);
        let induced = induce_ut_to_gl(&scaled, cfg.method, cfg.budget)?;
        cases.push(Case::equal(
            json!({"check": "scaled-column-reading", "mu": part_json(&mu), "alpha": alpha.parts(), "rows": t.rows()}),
            json!({"integral": true, "induced": classfn_json(&gammas[&mu])}),
            json!({"integral": integral, "induced": classfn_json(&induced)}),
        ));
    }
    Ok(cases)
}

/// Numbers the left-justified diagram of `μ` down its columns.
pub fn column_reading_tableau(mu: &Partition) -> Result<ColumnTableau> {
    let conj = mu.conjugate();
    let mut next = 1;
    let columns = conj
        .parts()
        .iter()
        .map(|&len| {
            let col: Vec<usize> = (next..next + len).collect();
            next += len;
            col
        })
        .collect();
    ColumnTableau::from_columns(Composition::new(conj.parts().to_vec())?, columns)
}

fn hl_image(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let n = cfg.n;
    let sign = RationalFn::from_int(if n.is_multiple_of(2) { 1 } else { -1 });
    let gammas = ggg_characters(cfg)?;
    let q0 = BigRational::from_integer(BigInt::from(cfg.p));
    let mut cases = Vec::new();
    for (la, gamma) in &gammas {
        let img = convert(&hl_q(la).scale(&sign), Basis::HlPtilde)?;
        let coeffs = img.specialize(&q0)?;
        for mu in partitions(n) {
            let expected = coeffs.get(&mu).cloned().unwrap_or_else(BigRational::zero);
            let actual = gamma.get(&mu);
            let ok = Cyclotomic::rational(cfg.p, expected.clone()) == *actual;
            cases.push(Case::new(
                json!({"lambda": part_json(la), "mu": part_json(&mu)}),
                rational_json(&expected),
                cyc_json(actual),
                ok,
            ));
        }
    }
    Ok(cases)
}

fn transformed_image(max_n: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        let sign = RationalFn::from_int(if n % 2 == 0 { 1 } else { -1 });
        for la in partitions(n) {
            let img = plethysm_1_minus_q(&hl_q(&la).scale(&sign), true)?;
            let expected = hl_h(&la);
            cases.push(Case::equal(json!({"lambda": part_json(&la)}), json!(expected), json!(img)));
        }
    }
    Ok(cases)
}

fn matrix_identity(max_n: usize) -> Vec<Case> {
    (1..=max_n)
        .map(|n| {
            let m = transition_matrices(n).reduced_identity();
            let below = (0..m.rows()).flat_map(|i| (0..i).map(move |j| (i, j))).filter(|&(i, j)| !m.get(i, j).is_zero()).count();
            Case::new(json!({"n": n}), json!({"nonzero_below_diagonal": 0}), json!({"nonzero_below_diagonal": below}), below == 0)
        })
        .collect()
}

fn projection_algebra(max_n: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for k in 1..=max_n {
        let pk = SymExpr::basis_element(Basis::P, Partition::row(k));
        let actual = pi_x(&pi_y(&pk)?)?;
        let den = RationalFn::from(LaurentPoly::monomial(k as i64, 1) - LaurentPoly::one());
        let expected = SymExpr::monomial(Basis::P, Partition::row(k), den.recip()?);
        cases.push(Case::equal(json!({"check": "pi-x-pi-y", "k": k}), json!(expected), json!(actual)));
    }
    for d in 2..=max_n {
        for a in 1..d {
            for la in partitions(a) {
                for mu in partitions(d - a) {
                    let f = SymExpr::basis_element(Basis::P, la.clone());
                    let g = SymExpr::basis_element(Basis::P, mu.clone());
                    let lhs = plethysm_1_minus_q(&product(&f, &g)?, true)?;
                    let rhs = product(&plethysm_1_minus_q(&f, true)?, &plethysm_1_minus_q(&g, true)?)?;
                    cases.push(Case::equal(
                        json!({"check": "multiplicative", "lambda": part_json(&la), "mu": part_json(&mu)}),
                        json!(rhs),
                        json!(lhs),
                    ));
                }
            }
        }
    }
    Ok(cases)
}

fn multiplicity_formulas(max_n: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for nu in degree_one_theta_partitions(n) {
            for la in partitions(n) {
                let gl = multiplicity_gl(&nu, &la)?;
                let lr = RationalFn::from(multiplicity_lr(&nu, &la)?);
                cases.push(Case::equal(
                    json!({"check": "gl-vs-lr", "nu": nu.to_string(), "lambda": part_json(&la)}),
                    json!(lr),
                    json!(gl),
                ));
            }
        }
    }
    for n in 1..=max_n {
        let nu = ThetaPartition::new(vec![(n, Partition::row(1))])?;
        for la in partitions(n) {
            let closed = cuspidal_value(&la);
            let direct = multiplicity_cuspidal(&nu, &la)?;
            let general = multiplicity_gl(&nu, &la)?;
            let ok = direct == closed && general == RationalFn::from(closed.clone());
            cases.push(Case::new(
                json!({"check": "cuspidal", "n": n, "lambda": part_json(&la)}),
                json!(closed),
                json!({"direct": direct, "general": general}),
                ok,
            ));
        }
    }
    Ok(cases)
}

fn combinatorics(max_n: usize) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    let la = Partition::new(vec![4, 3, 2, 2, 1])?;
    cases.push(Case::equal(json!({"check": "ctr"}), json!([1, 4, 5, 2]), json!(ctr_composition(&la)?.parts())));
    cases.push(Case::equal(
        json!({"check": "c-tableau"}),
        json!([[1, 3, 8, 12], [2, 6, 11], [4, 9], [5, 10], [7]]),
        json!(build_c_tableau(&la)?.rows()),
    ));
    cases.push(Case::equal(
        json!({"check": "ggg"}),
        json!([[1, 3], [2, 6], [3, 8], [4, 9], [5, 10], [6, 11], [8, 12]]),
        json!(ggg(&la)?.arcs().map(|(i, j)| [i, j]).collect::<Vec<_>>()),
    ));
    let alpha = Composition::new(vec![1, 5, 2, 4])?;
    let judgments: [(&str, Vec<Vec<usize>>, bool, bool); 3] = [
        ("first-display", vec![vec![2, 5, 8, 11], vec![1, 4, 7], vec![3, 10], vec![6, 9], vec![12]], true, false),
        ("second-display", vec![vec![2, 5, 8, 11], vec![1, 4, 7], vec![6, 9], vec![3, 10], vec![12]], false, false),
        ("third-display", vec![vec![1, 2, 7, 11], vec![3, 8, 12], vec![4, 9], vec![5, 10], vec![6]], true, true),
    ];
    for (name, rows, in_t, in_nn) in judgments {
        let t = ColumnTableau::from_rows(alpha.clone(), &rows)?;
        let actual_t = t.is_valid();
        let actual_nn = actual_t && t.sp().is_nonnesting();
        cases.push(Case::equal(
            json!({"check": name}),
            json!({"in_T_alpha": in_t, "in_T_alpha_nn": in_nn}),
            json!({"in_T_alpha": actual_t, "in_T_alpha_nn": actual_nn}),
        ));
    }
    for n in 1..=max_n {
        let mut count = 0;
        let mut bad = Vec::new();
        for alpha in compositions(n) {
            for t in enumerate_column_tableaux(&alpha, true) {
                count += 1;
                if !tau_is_bijective(&t)? {
                    bad.push(json!(t.rows()));
                }
            }
        }
        cases.push(Case::new(
            json!({"check": "tau-bijective", "n": n, "tableaux": count}),
            json!([]),
            Value::Array(bad.clone()),
            bad.is_empty(),
        ));
    }
    Ok(cases)
}

fn tau_is_bijective(t: &ColumnTableau) -> Result<bool> {
    let (a, b) = ab_sets(t)?;
    if a.len() != b.len() {
        return Ok(false);
    }
    let f = tau(t)?;
    let g = tau_inverse(t)?;
    Ok(f.len() == b.len()
        && f.values().copied().collect::<std::collections::BTreeSet<_>>() == a
        && f.iter().all(|(x, y)| g.get(y) == Some(x)))
}

fn jordan_bound(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for alpha in compositions(cfg.n) {
        let mu = alpha.sorted().conjugate();
        let u = PatternSubgroup::from_composition(&alpha, cfg.p)?;
        let mut hist: BTreeMap<Partition, u64> = BTreeMap::new();
        for x in u.elements(cfg.budget)? {
            *hist.entry(jordan_type(&x)?).or_default() += 1;
        }
        let violations: u64 = hist.iter().filter(|(nu, _)| !mu.dominates(nu).unwrap_or(false)).map(|(_, c)| c).sum();
        let types: Vec<Value> = hist.iter().map(|(nu, c)| json!({"type": part_json(nu), "count": c})).collect();
        cases.push(Case::new(
            json!({"alpha": alpha.parts(), "mu": part_json(&mu), "types": types}),
            json!({"violations": 0}),
            json!({"violations": violations}),
            violations == 0,
        ));
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(suite: Suite, n: usize, p: u32) {
        let report = run_suite(suite, &SuiteConfig::new(n, p)).unwrap();
        assert!(!report.cases.is_empty(), "{suite} has no cases");
        let bad: Vec<_> = report.failures().collect();
        assert!(bad.is_empty(), "{suite} n={n} p={p}: {bad:#?}");
    }

    #[test]
    fn group_suites_small() {
        for suite in [Suite::UnipotentMultiplicity, Suite::Triangularity, Suite::HlImage, Suite::Sufficiency, Suite::JordanBound] {
            for (n, p) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)] {
                check(suite, n, p);
            }
        }
    }

    #[test]
    fn symbolic_suites() {
        for suite in [
            Suite::TransformedImage,
            Suite::MatrixIdentity,
            Suite::ProjectionAlgebra,
            Suite::MultiplicityFormulas,
            Suite::Combinatorics,
        ] {
            check(suite, 4, 2);
        }
    }

    #[test]
    fn supercharacter_failures_are_outside_u_alpha() {
        for (n, p) in [(2, 2), (3, 2), (3, 3)] {
            let report = run_suite(Suite::Supercharacter, &SuiteConfig::new(n, p)).unwrap();
            for c in &report.cases {
                if c.params.get("sp_in_u_alpha") == Some(&Value::Bool(true)) {
                    assert!(c.ok, "{c:#?}");
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for (i, s) in Suite::ALL.iter().enumerate() {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
            assert_eq!(s.criterion(), i + 1);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn report_formats() {
        let report = run_suite(Suite::MatrixIdentity, &SuiteConfig::new(2, 2)).unwrap();
        let v = report.to_json();
        assert_eq!(v["theorem"], "matrix-identity");
        assert!(v.get("p").is_none() && v.get("elapsed_ms").is_none());
        assert_eq!(v["cases"][0]["n"], 1);
        let csv = report.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 3);
        assert!(report.to_text().contains("2/2 cases ok"));
    }
}
