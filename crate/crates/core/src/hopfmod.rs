//! Hopf modules over an entwining, the comparison functor `X ↦ X⊗A`,
//! coinvariants, Galois maps at free objects, antipode extraction and the
//! fundamental-theorem driver.

use std::thread;

use crate::entwining::{check_entwining, convention, entwining_from_bimonoid, EntwiningData};
use crate::error::{shape_err, Error, Result};
use crate::exactalg::{swap, FpMatrix};
use crate::report::{Check, Report, Verdict, Witness};
use crate::structures::{
    check_comodule, check_module, require_bimonoid, require_comodule_algebra, require_comonoid,
    BimonoidData, ComoduleAlgebraData, ComonoidData, ModuleData, Side,
};

/// `(X, h, θ)`: an action and a coaction on the same space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModuleData {
    pub dim: usize,
    pub action: FpMatrix,
    pub coaction: FpMatrix,
}

impl HopfModuleData {
    /// `(A, m, δ)`.
    pub fn regular(a: &BimonoidData) -> Self {
        HopfModuleData {
            dim: a.dim(),
            action: a.m().clone(),
            coaction: a.delta().clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisReport {
    pub base: FpMatrix,
    pub rank: usize,
    pub invertible: bool,
    pub inverse: Option<FpMatrix>,
    pub antipode: Option<FpMatrix>,
    /// Set when the base map cannot be invertible for shape reasons.
    pub obstruction: Option<String>,
}

impl GaloisReport {
    pub fn from_base(base: FpMatrix) -> Self {
        let rank = base.rank();
        let obstruction = (base.rows() != base.cols()).then(|| {
            format!(
                "dimension obstruction: source dim {} != target dim {}",
                base.cols(),
                base.rows()
            )
        });
        let inverse = base.inverse();
        GaloisReport {
            rank,
            invertible: inverse.is_some(),
            inverse,
            antipode: None,
            obstruction,
            base,
        }
    }

    /// `labels` names the basis of `A` in the antipode table; empty means
    /// `b0, b1, ...`.
    pub fn to_report(&self, id: &str, labels: &[String]) -> Report {
        let mut r = Report::new(id);
        r.push(Check::info(
            "rank",
            format!("rank {}/{}", self.rank, self.base.cols()),
        ));
        let mut inv = Check::flag("invertible", self.invertible)
            .with_witness(Witness::new("base map", &self.base))
            .with_detail(if self.invertible {
                "yes".to_string()
            } else {
                let why = format!("rank {}/{}, not invertible", self.rank, self.base.cols());
                match &self.obstruction {
                    Some(o) => format!("{why}; {o}"),
                    None => why,
                }
            });
        if let Some(m) = &self.inverse {
            inv = inv.with_witness(Witness::inverse("inverse", m, "base map"));
        }
        r.push(inv);
        if let Some(s) = &self.antipode {
            r.push(
                Check::info(
                    "antipode",
                    format!(
                        "extracted as (I⊗eps).beta^-1.(e⊗I), the standard Hopf-algebra formula; {}",
                        antipode_table(s, labels)
                    ),
                )
                .with_witness(Witness::new("S", s)),
            );
        }
        r
    }
}

pub fn antipode_table(s: &FpMatrix, labels: &[String]) -> String {
    let name = |i: usize| labels.get(i).cloned().unwrap_or_else(|| format!("b{i}"));
    s.columns()
        .enumerate()
        .map(|(j, col)| {
            let terms: Vec<String> = (0..col.rows())
                .filter(|&i| col.get(i, 0) != 0)
                .map(|i| match col.get(i, 0) {
                    1 => name(i),
                    c => format!("{c}*{}", name(i)),
                })
                .collect();
            let rhs = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            format!("S({}) = {rhs}", name(j))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Module, comodule and compatibility axioms of `(X, h, θ)` over `ed`.
pub fn check_hopf_module(m: &HopfModuleData, ed: &EntwiningData) -> Result<Report> {
    let ent = check_entwining(ed)?;
    if let Some(f) = ent.failures().next() {
        return Err(Error::Precondition(format!(
            "entwining: '{}' fails",
            f.name
        )));
    }
    let p = ed.modulus();
    let (da, dc) = (ed.monoid.dim, ed.comonoid.dim);
    if m.action.shape() != (m.dim, m.dim * da) {
        return Err(shape_err(
            "hopf module action",
            (m.dim, m.dim * da),
            m.action.shape(),
        ));
    }
    if m.coaction.shape() != (m.dim * dc, m.dim) {
        return Err(shape_err(
            "hopf module coaction",
            (m.dim * dc, m.dim),
            m.coaction.shape(),
        ));
    }
    let mut r = Report::new("hopf module");
    r.convention(convention(ed.side));
    let module = ModuleData {
        dim: m.dim,
        action: m.action.clone(),
    };
    r.absorb("", check_module(&module, &ed.monoid, ed.side)?);
    r.absorb(
        "",
        check_comodule(m.dim, &m.coaction, &ed.comonoid, ed.side)?,
    );
    let (h, theta) = (&m.action, &m.coaction);
    let (ia, ic) = (FpMatrix::identity(p, da), FpMatrix::identity(p, dc));
    let lambda = ed.component(m.dim)?;
    let rhs = match ed.side {
        Side::Right => h.kron(&ic)?.mul(&lambda)?.mul(&theta.kron(&ia)?)?,
        Side::Left => ic.kron(h)?.mul(&lambda)?.mul(&ia.kron(theta)?)?,
    };
    r.equation(
        "compatibility theta.h = G(h).lambda_X.T(theta)",
        &theta.mul(h)?,
        &rhs,
    )?;
    Ok(r)
}

/// `K(X) = (X⊗A, I_X⊗m, I_X⊗δ)`; in the braided context the coaction of the
/// unit comonoid on `X` is forced, so only the dimension is needed.
pub fn comparison_k(x_dim: usize, a: &BimonoidData) -> Result<HopfModuleData> {
    require_bimonoid(a)?;
    let ix = FpMatrix::identity(a.modulus(), x_dim);
    let hm = HopfModuleData {
        dim: x_dim * a.dim(),
        action: ix.kron(a.m())?,
        coaction: ix.kron(a.delta())?,
    };
    let ed = entwining_from_bimonoid(a)?;
    let report = check_hopf_module(&hm, &ed)?;
    if let Some(f) = report.failures().next() {
        return Err(Error::Precondition(format!(
            "K({x_dim}): '{}' fails",
            f.name
        )));
    }
    Ok(hm)
}

/// Inclusion `M^co -> M` of `{x : θ(x) = x⊗1}`.
pub fn coinvariants(m: &HopfModuleData, a: &BimonoidData) -> Result<FpMatrix> {
    let ed = entwining_from_bimonoid(a)?;
    let report = check_hopf_module(m, &ed)?;
    if let Some(f) = report.failures().next() {
        return Err(Error::Precondition(format!(
            "hopf module: '{}' fails",
            f.name
        )));
    }
    let trivial = FpMatrix::identity(a.modulus(), m.dim).kron(a.e())?;
    Ok(m.coaction.sub(&trivial)?.kernel_basis())
}

/// `M^co ⊗ A -> M`, `x⊗a ↦ x·a`.
pub fn counit_map(m: &HopfModuleData, inclusion: &FpMatrix, a: &BimonoidData) -> Result<FpMatrix> {
    m.action
        .mul(&inclusion.kron(&FpMatrix::identity(a.modulus(), a.dim()))?)
}

/// Antipode axioms and the anti-homomorphism properties of `s`.
pub fn check_antipode(a: &BimonoidData, s: &FpMatrix) -> Result<Report> {
    let p = a.modulus();
    let d = a.dim();
    if s.shape() != (d, d) {
        return Err(shape_err("antipode", (d, d), s.shape()));
    }
    let i = FpMatrix::identity(p, d);
    let (m, e, delta, eps) = (a.m(), a.e(), a.delta(), a.eps());
    let unit_counit = e.mul(eps)?;
    let mut r = Report::new("antipode");
    r.equation(
        "m.(S⊗I).delta = e.eps",
        &m.mul(&s.kron(&i)?)?.mul(delta)?,
        &unit_counit,
    )?;
    r.equation(
        "m.(I⊗S).delta = e.eps",
        &m.mul(&i.kron(s)?)?.mul(delta)?,
        &unit_counit,
    )?;
    r.equation(
        "S reverses products",
        &s.mul(m)?,
        &m.mul(&s.kron(s)?)?.mul(&swap(p, d, d))?,
    )?;
    r.equation("S preserves the unit", &s.mul(e)?, e)?;
    r.equation("eps.S = eps", &eps.mul(s)?, eps)?;
    Ok(r)
}

/// `β = (m⊗I)·(I⊗δ) : x⊗a ↦ x·a₁ ⊗ a₂`; when invertible the antipode
/// `(I⊗ε)·β⁻¹·(e⊗I)` is attached.
pub fn galois_map_beta(a: &BimonoidData) -> Result<GaloisReport> {
    require_bimonoid(a)?;
    let p = a.modulus();
    let i = FpMatrix::identity(p, a.dim());
    let base = a.m().kron(&i)?.mul(&i.kron(a.delta())?)?;
    let mut g = GaloisReport::from_base(base);
    if let Some(inv) = &g.inverse {
        g.antipode = Some(i.kron(a.eps())?.mul(inv)?.mul(&a.e().kron(&i)?)?);
    }
    Ok(g)
}

/// `can : B⊗C⊗B -> A⊗C⊗B`, `b⊗c⊗b' ↦ b₋₁ ⊗ c ⊗ b₀·b'`.
pub fn galois_map_generalized(b: &ComoduleAlgebraData, c: &ComonoidData) -> Result<GaloisReport> {
    require_comodule_algebra(b)?;
    require_comonoid(c)?;
    let p = b.over.modulus();
    let (da, db, dc) = (b.over.dim(), b.algebra.dim, c.dim);
    let id = |n| FpMatrix::identity(p, n);
    let base = FpMatrix::kron_all(p, &[&id(da), &id(dc), &b.algebra.m])?
        .mul(&FpMatrix::kron_all(
            p,
            &[&id(da), &swap(p, db, dc), &id(db)],
        )?)?
        .mul(&FpMatrix::kron_all(p, &[&b.rho, &id(dc), &id(db)])?)?;
    Ok(GaloisReport::from_base(base))
}

fn enumerate_vectors(p: u32, n: usize, limit: u64) -> Vec<Vec<i64>> {
    let total = (p as u64).checked_pow(n as u32).filter(|&t| t <= limit);
    let (radix, count) = match total {
        Some(t) => (p as u64, t),
        // fall back to 0/1 vectors
        None => (2, 1u64 << n.min(20)),
    };
    (0..count)
        .map(|mut k| {
            let mut v = vec![0i64; n];
            for slot in v.iter_mut().rev() {
                *slot = (k % radix) as i64;
                k /= radix;
            }
            v
        })
        .collect()
}

const SEARCH_LIMIT: u64 = 1 << 14;

/// Algebra maps `A -> k`, as `1 x dim` rows.
pub fn characters(a: &BimonoidData) -> Result<Vec<FpMatrix>> {
    let p = a.modulus();
    let mut out = Vec::new();
    for v in enumerate_vectors(p, a.dim(), SEARCH_LIMIT) {
        let chi = FpMatrix::from_i64(p, 1, a.dim(), &v)?;
        if chi.mul(a.e())?.is_identity() && chi.mul(a.m())? == chi.kron(&chi)? {
            out.push(chi);
        }
    }
    Ok(out)
}

/// Group-like elements `g` with `δ(g) = g⊗g`, `ε(g) = 1`.
pub fn group_likes(a: &BimonoidData) -> Result<Vec<FpMatrix>> {
    let p = a.modulus();
    let mut out = Vec::new();
    for v in enumerate_vectors(p, a.dim(), SEARCH_LIMIT) {
        let g = FpMatrix::from_i64(p, a.dim(), 1, &v)?;
        if a.eps().mul(&g)?.is_identity() && a.delta().mul(&g)? == g.kron(&g)? {
            out.push(g);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonEquivalenceWitness {
    pub module: HopfModuleData,
    pub coinvariants: FpMatrix,
    pub origin: String,
}

/// Looks for a Hopf module `M` with `dim M != dim A · dim M^co`: the supplied
/// extras first, then one-dimensional modules twisted by a character and a
/// group-like element.
pub fn find_non_equivalence_witness(
    a: &BimonoidData,
    extras: &[HopfModuleData],
) -> Result<Option<NonEquivalenceWitness>> {
    let ed = entwining_from_bimonoid(a)?;
    let mut candidates: Vec<(String, HopfModuleData)> = extras
        .iter()
        .enumerate()
        .map(|(i, m)| (format!("extra[{i}]"), m.clone()))
        .collect();
    let chars = characters(a)?;
    let likes = group_likes(a)?;
    for (ci, chi) in chars.iter().enumerate() {
        for (gi, g) in likes.iter().enumerate() {
            candidates.push((
                format!("character[{ci}] with group-like[{gi}]"),
                HopfModuleData {
                    dim: 1,
                    action: chi.clone(),
                    coaction: g.clone(),
                },
            ));
        }
    }
    for (origin, m) in candidates {
        if !check_hopf_module(&m, &ed)?.passed() {
            continue;
        }
        let co = coinvariants(&m, a)?;
        if m.dim != a.dim() * co.cols() {
            return Ok(Some(NonEquivalenceWitness {
                module: m,
                coinvariants: co,
                origin,
            }));
        }
    }
    Ok(None)
}

fn summarize(name: String, sub: &Report) -> Check {
    match sub.failures().next() {
        None => Check::flag(name, true),
        Some(f) => Check::flag(name, false).with_detail(format!("'{}' fails", f.name)),
    }
}

fn counit_checks(label: &str, m: &HopfModuleData, a: &BimonoidData) -> Result<Vec<Check>> {
    let co = coinvariants(m, a)?;
    let counit = counit_map(m, &co, a)?;
    let mut check = Check::flag(
        format!("counit M^co⊗A -> M is an isomorphism for {label}"),
        false,
    )
    .with_detail(format!("dim M = {}, dim M^co = {}", m.dim, co.cols()));
    if let Some(inv) = counit.inverse() {
        check.verdict = Verdict::Pass;
        check = check
            .with_witness(Witness::new("counit", &counit))
            .with_witness(Witness::inverse("counit^-1", &inv, "counit"));
    }
    Ok(vec![check])
}

fn sample_checks(d: usize, a: &BimonoidData) -> Result<Vec<Check>> {
    let label = format!("K(F_p^{d})");
    let hm = comparison_k(d, a)?;
    let ed = entwining_from_bimonoid(a)?;
    let mut out = vec![summarize(
        format!("{label} is a Hopf module"),
        &check_hopf_module(&hm, &ed)?,
    )];
    let co = coinvariants(&hm, a)?;
    out.push(
        Check::flag(format!("dim coinvariants({label}) = {d}"), co.cols() == d)
            .with_detail(format!("dim = {}", co.cols())),
    );
    let unit = FpMatrix::identity(a.modulus(), d).kron(a.e())?;
    let onto = unit.rank() == d && co.cols() == d && co.hstack(&unit)?.rank() == d;
    out.push(Check::flag(
        format!("unit x ↦ x⊗1 maps F_p^{d} isomorphically onto coinvariants({label})"),
        onto,
    ));
    out.extend(counit_checks(&label, &hm, a)?);
    Ok(out)
}

/// Witness-based verification of the fundamental theorem for Hopf modules
/// over `a`: split unit, Galois map, then either round-trip isomorphisms on
/// samples and extras or a concrete module violating the equivalence.
pub fn verify_fundamental_theorem(
    a: &BimonoidData,
    samples: &[usize],
    extras: &[HopfModuleData],
) -> Result<Report> {
    require_bimonoid(a)?;
    let mut r = Report::new("fundamental theorem");
    r.convention(convention(Side::Right));

    let split = a.e().left_inverse();
    let mut unit_check = Check::flag("unit e is a split monomorphism", split.is_some());
    if let Some(ret) = &split {
        unit_check = unit_check.with_witness(Witness::new("retraction", ret));
    }
    r.push(unit_check);
    if split.is_none() {
        return Ok(r);
    }
    r.push(Check::info(
        "criterion",
        "split unit: K is an equivalence iff the Galois map beta is an isomorphism",
    ));

    let galois = galois_map_beta(a)?;
    r.absorb("galois", galois.to_report("galois", &[]));
    if let Some(s) = &galois.antipode {
        r.absorb("antipode", check_antipode(a, s)?);
    }

    if galois.invertible {
        let per_sample: Vec<Result<Vec<Check>>> = thread::scope(|scope| {
            let handles: Vec<_> = samples
                .iter()
                .map(|&d| scope.spawn(move || sample_checks(d, a)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sample worker"))
                .collect()
        });
        for checks in per_sample {
            for c in checks? {
                r.push(c);
            }
        }
        let ed = entwining_from_bimonoid(a)?;
        let mut modules = vec![("regular module".to_string(), HopfModuleData::regular(a))];
        modules.extend(
            extras
                .iter()
                .enumerate()
                .map(|(i, m)| (format!("extra[{i}]"), m.clone())),
        );
        for (label, m) in modules {
            let hm_report = check_hopf_module(&m, &ed)?;
            let ok = hm_report.passed();
            r.push(summarize(format!("{label} is a Hopf module"), &hm_report));
            if ok {
                for c in counit_checks(&label, &m, a)? {
                    r.push(c);
                }
            }
        }
        r.push(Check::info(
            "scope",
            format!(
                "equivalence witnessed on sample dims {samples:?} and {} extra module(s)",
                extras.len()
            ),
        ));
    } else {
        let check = match find_non_equivalence_witness(a, extras)? {
            Some(w) => Check::new("non-equivalence witness", Verdict::Fail)
                .with_detail(format!(
                    "{}: dim M = {} but dim A · dim M^co = {} · {} = {}",
                    w.origin,
                    w.module.dim,
                    a.dim(),
                    w.coinvariants.cols(),
                    a.dim() * w.coinvariants.cols()
                ))
                .with_witness(Witness::new("action", &w.module.action))
                .with_witness(Witness::new("coaction", &w.module.coaction))
                .with_witness(Witness::new("coinvariants", &w.coinvariants)),
            None => Check::new("non-equivalence witness", Verdict::Fail).with_detail(
                "beta is not invertible; no witness module found among the candidates",
            ),
        };
        r.push(check);
    }
    Ok(r)
}
