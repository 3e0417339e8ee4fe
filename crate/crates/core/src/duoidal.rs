//! Duoidal data restricted to tensor-representable objects, the braided
//! (symmetric) vector-space instance, the four bimonoid diagrams, splitting
//! of `τ : I -> J` and the Galois map of the comparison functor `- ∗ A`.
//!
//! Objects are finite-dimensional spaces given by their dimension; both
//! monoidal products act on morphisms by the Kronecker product under the
//! row-major flattening. The interchange law is
//! `ζ_{W,X,Y,Z} : (W∗X)∘(Y∗Z) -> (W∘Y)∗(X∘Z)`, flattened legs
//! `W X Y Z -> W Y X Z`.

use std::fmt;
use std::sync::Arc;

use crate::error::{shape_err, Error, Result};
use crate::exactalg::{check_modulus, middle_swap, FpMatrix};
use crate::hopfmod::GaloisReport;
use crate::report::{Check, Report};
use crate::structures::{check_comonoid, check_monoid, BimonoidData, ComonoidData, MonoidData};

pub type ZetaBuilder = Arc<dyn Fn(u32, [usize; 4]) -> FpMatrix + Send + Sync>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CtxKind {
    /// `∘ = ∗ = ⊗` with the symmetry as interchange.
    Braided,
    /// Anything assembled or modified by hand.
    Custom,
}

#[derive(Clone)]
pub struct DuoidalCtx {
    tag: String,
    kind: CtxKind,
    p: u32,
    unit_i: usize,
    unit_j: usize,
    delta: FpMatrix,
    mu: FpMatrix,
    tau: FpMatrix,
    zeta: ZetaBuilder,
}

impl fmt::Debug for DuoidalCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DuoidalCtx")
            .field("tag", &self.tag)
            .field("kind", &self.kind)
            .field("p", &self.p)
            .field("unit_i", &self.unit_i)
            .field("unit_j", &self.unit_j)
            .finish_non_exhaustive()
    }
}

/// The degenerate duoidal structure `∘ = ∗ = ⊗` on F_p-vector spaces:
/// `I = J = k`, `Δ = μ = τ = 1` and `ζ = I_W ⊗ swap_{X,Y} ⊗ I_Z`.
pub fn braided_duoidal(p: u64) -> Result<DuoidalCtx> {
    let p = check_modulus(p)?;
    let one = FpMatrix::identity(p, 1);
    Ok(DuoidalCtx {
        tag: format!("braided vect over F_{p}"),
        kind: CtxKind::Braided,
        p,
        unit_i: 1,
        unit_j: 1,
        delta: one.clone(),
        mu: one.clone(),
        tau: one,
        zeta: Arc::new(|p, [w, x, y, z]| middle_swap(p, w, x, y, z)),
    })
}

impl DuoidalCtx {
    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn kind(&self) -> CtxKind {
        self.kind
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn unit_dims(&self) -> (usize, usize) {
        (self.unit_i, self.unit_j)
    }

    pub fn delta(&self) -> &FpMatrix {
        &self.delta
    }

    pub fn mu(&self) -> &FpMatrix {
        &self.mu
    }

    pub fn tau(&self) -> &FpMatrix {
        &self.tau
    }

    /// `ζ_{W,X,Y,Z}` for the given object dimensions.
    pub fn zeta(&self, w: usize, x: usize, y: usize, z: usize) -> FpMatrix {
        (self.zeta)(self.p, [w, x, y, z])
    }

    pub fn circ(&self, f: &FpMatrix, g: &FpMatrix) -> Result<FpMatrix> {
        f.kron(g)
    }

    pub fn star(&self, f: &FpMatrix, g: &FpMatrix) -> Result<FpMatrix> {
        f.kron(g)
    }

    fn customized(mut self, what: &str) -> Self {
        self.kind = CtxKind::Custom;
        self.tag = format!("{} [{what}]", self.tag);
        self
    }

    pub fn with_units(
        self,
        unit_i: usize,
        unit_j: usize,
        delta: FpMatrix,
        mu: FpMatrix,
        tau: FpMatrix,
    ) -> Self {
        let mut c = self.customized("units replaced");
        c.unit_i = unit_i;
        c.unit_j = unit_j;
        c.delta = delta;
        c.mu = mu;
        c.tau = tau;
        c
    }

    pub fn with_mu(self, mu: FpMatrix) -> Self {
        let mut c = self.customized("mu replaced");
        c.mu = mu;
        c
    }

    pub fn with_tau(self, tau: FpMatrix) -> Self {
        let mut c = self.customized("tau replaced");
        c.tau = tau;
        c
    }

    pub fn with_zeta(self, zeta: ZetaBuilder) -> Self {
        let mut c = self.customized("zeta replaced");
        c.zeta = zeta;
        c
    }

    fn conventions(&self, r: &mut Report) {
        r.convention(format!("duoidal context: {}", self.tag));
        r.convention("zeta_{W,X,Y,Z} : (W*X)o(Y*Z) -> (WoY)*(XoZ), legs W X Y Z -> W Y X Z");
    }
}

fn summarize(name: &str, sub: &Report) -> Check {
    match sub.failures().next() {
        None => Check::flag(name, true),
        Some(f) => {
            let mut c = Check::flag(name, false).with_detail(format!(
                "{} fails{}",
                f.name,
                f.detail
                    .as_deref()
                    .map(|d| format!(": {d}"))
                    .unwrap_or_default()
            ));
            c.counterexample = f.counterexample;
            c
        }
    }
}

/// Runs `body` over every tuple and keeps the first failure.
struct Sweep {
    name: String,
    first_failure: Option<Check>,
    cases: usize,
}

impl Sweep {
    fn new(name: &str) -> Self {
        Sweep {
            name: name.to_string(),
            first_failure: None,
            cases: 0,
        }
    }

    fn case(
        &mut self,
        label: impl FnOnce() -> String,
        lhs: &FpMatrix,
        rhs: &FpMatrix,
    ) -> Result<()> {
        self.cases += 1;
        if self.first_failure.is_some() {
            return Ok(());
        }
        let c = Check::equation(self.name.clone(), lhs, rhs)?;
        if !c.passed() {
            let detail = format!("{} at {}", c.detail.clone().unwrap_or_default(), label());
            self.first_failure = Some(c.with_detail(detail));
        }
        Ok(())
    }

    fn finish(self) -> Check {
        let cases = self.cases;
        self.first_failure
            .unwrap_or_else(|| Check::flag(self.name, true).with_detail(format!("{cases} cases")))
    }
}

fn tuples(probes: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                probes.iter().map(move |&d| {
                    let mut t = t.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    out
}

/// Unit compatibility plus the associativity, unitality and naturality
/// squares of `ζ` on all probe-dimension tuples.
pub fn check_duoidal(ctx: &DuoidalCtx, probes: &[usize]) -> Result<Report> {
    let p = ctx.p;
    let mut r = Report::new("duoidal");
    ctx.conventions(&mut r);
    let id = |n: usize| FpMatrix::identity(p, n);

    let units_are_trivial = ctx.unit_i == 1 && ctx.unit_j == 1;
    let j_monoid = MonoidData::new(ctx.mu.clone(), ctx.tau.clone()).and_then(|m| {
        if ctx.unit_i != 1 {
            return Err(Error::Unsupported("unit I must be 1-dimensional".into()));
        }
        check_monoid(&m)
    });
    r.push(match j_monoid {
        Ok(sub) => summarize("(J, mu, tau) is a monoid", &sub),
        Err(e) => Check::flag("(J, mu, tau) is a monoid", false).with_detail(e.to_string()),
    });
    let i_comonoid = ComonoidData::new(ctx.delta.clone(), ctx.tau.clone()).and_then(|c| {
        if ctx.unit_j != 1 {
            return Err(Error::Unsupported("unit J must be 1-dimensional".into()));
        }
        check_comonoid(&c)
    });
    r.push(match i_comonoid {
        Ok(sub) => summarize("(I, Delta, tau) is a comonoid", &sub),
        Err(e) => Check::flag("(I, Delta, tau) is a comonoid", false).with_detail(e.to_string()),
    });

    let z = |w, x, y, zz| ctx.zeta(w, x, y, zz);

    // (W∗X)∘(Y∗Z)∘(U∗V) -> (W∘Y∘U)∗(X∘Z∘V)
    let mut sweep = Sweep::new("zeta o-associativity");
    for t in tuples(probes, 6) {
        let [w, x, y, zz, u, v] = [t[0], t[1], t[2], t[3], t[4], t[5]];
        let lhs = z(w * y, x * zz, u, v).mul(&z(w, x, y, zz).kron(&id(u * v))?)?;
        let rhs = z(w, x, y * u, zz * v).mul(&id(w * x).kron(&z(y, zz, u, v))?)?;
        sweep.case(|| format!("dims {t:?}"), &lhs, &rhs)?;
    }
    r.push(sweep.finish());

    // (W∗X∗U)∘(Y∗Z∗V) -> (W∘Y)∗(X∘Z)∗(U∘V)
    let mut sweep = Sweep::new("zeta *-associativity");
    for t in tuples(probes, 6) {
        let [w, x, u, y, zz, v] = [t[0], t[1], t[2], t[3], t[4], t[5]];
        let lhs = z(w, x, y, zz)
            .kron(&id(u * v))?
            .mul(&z(w * x, u, y * zz, v))?;
        let rhs = id(w * y)
            .kron(&z(x, u, zz, v))?
            .mul(&z(w, x * u, y, zz * v))?;
        sweep.case(|| format!("dims {t:?}"), &lhs, &rhs)?;
    }
    r.push(sweep.finish());

    let unit_name = "zeta unitality";
    if units_are_trivial {
        let mut sweep = Sweep::new(unit_name);
        for t in tuples(probes, 2) {
            let (x, y) = (t[0], t[1]);
            let ixy = id(x * y);
            sweep.case(
                || format!("I-left, dims {t:?}"),
                &z(1, 1, x, y).mul(&ctx.delta.kron(&ixy)?)?,
                &ixy,
            )?;
            sweep.case(
                || format!("I-right, dims {t:?}"),
                &z(x, y, 1, 1).mul(&ixy.kron(&ctx.delta)?)?,
                &ixy,
            )?;
            sweep.case(
                || format!("J-left, dims {t:?}"),
                &ctx.mu.kron(&ixy)?.mul(&z(1, x, 1, y))?,
                &ixy,
            )?;
            sweep.case(
                || format!("J-right, dims {t:?}"),
                &ixy.kron(&ctx.mu)?.mul(&z(x, 1, y, 1))?,
                &ixy,
            )?;
        }
        r.push(sweep.finish());
    } else {
        r.push(Check::flag(unit_name, false).with_detail("units must be 1-dimensional"));
    }

    // One leg at a time, probing with elementary maps E_ij.
    let mut sweep = Sweep::new("zeta naturality");
    for dims in tuples(probes, 4) {
        for slot in 0..4 {
            for &target in probes {
                let src = dims[slot];
                for (i, j) in (0..target).flat_map(|i| (0..src).map(move |j| (i, j))) {
                    let mut e = FpMatrix::zeros(p, target, src);
                    e.set(i, j, 1);
                    let legs: Vec<FpMatrix> = (0..4)
                        .map(|k| if k == slot { e.clone() } else { id(dims[k]) })
                        .collect();
                    let mut out = dims.clone();
                    out[slot] = target;
                    let before = FpMatrix::kron_all(p, &[&legs[0], &legs[1], &legs[2], &legs[3]])?;
                    let after = FpMatrix::kron_all(p, &[&legs[0], &legs[2], &legs[1], &legs[3]])?;
                    let lhs = z(out[0], out[1], out[2], out[3]).mul(&before)?;
                    let rhs = after.mul(&z(dims[0], dims[1], dims[2], dims[3]))?;
                    sweep.case(
                        || format!("dims {dims:?} -> {out:?}, leg {slot} map E_{i}{j}: {src}->{target}"),
                        &lhs,
                        &rhs,
                    )?;
                }
            }
        }
    }
    r.push(sweep.finish());
    Ok(r)
}

/// The four bimonoid diagrams in `ctx`, preceded by the underlying monoid
/// and comonoid axioms.
pub fn check_bimonoid(a: &BimonoidData, ctx: &DuoidalCtx) -> Result<Report> {
    if a.modulus() != ctx.p {
        return Err(Error::ModulusMismatch(a.modulus(), ctx.p));
    }
    let (di, dj) = (ctx.unit_i, ctx.unit_j);
    if a.e().cols() != di || a.eps().rows() != dj {
        return Err(shape_err(
            "bimonoid units against ctx units",
            (di, dj),
            (a.e().cols(), a.eps().rows()),
        ));
    }
    let d = a.dim();
    let mut r = Report::new("bimonoid");
    ctx.conventions(&mut r);
    r.absorb("monoid", check_monoid(&a.monoid)?);
    r.absorb("comonoid", check_comonoid(&a.comonoid)?);
    let (m, e, delta, eps) = (a.m(), a.e(), a.delta(), a.eps());
    r.equation(
        "delta.m = (m*m).zeta.(delta o delta)",
        &delta.mul(m)?,
        &ctx.star(m, m)?
            .mul(&ctx.zeta(d, d, d, d))?
            .mul(&ctx.circ(delta, delta)?)?,
    )?;
    r.equation(
        "eps.m = mu.(eps o eps)",
        &eps.mul(m)?,
        &ctx.mu.mul(&ctx.circ(eps, eps)?)?,
    )?;
    r.equation(
        "delta.e = (e*e).Delta",
        &delta.mul(e)?,
        &ctx.star(e, e)?.mul(&ctx.delta)?,
    )?;
    r.equation("eps.e = tau", &eps.mul(e)?, &ctx.tau)?;
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSplitting {
    pub split_mono: bool,
    pub split_epi: bool,
    /// `r` with `r·τ = I`.
    pub retraction: Option<FpMatrix>,
    /// `s` with `τ·s = I`.
    pub section: Option<FpMatrix>,
}

pub fn tau_splitting(ctx: &DuoidalCtx) -> TauSplitting {
    let retraction = ctx.tau.left_inverse();
    let section = ctx.tau.right_inverse();
    TauSplitting {
        split_mono: retraction.is_some(),
        split_epi: section.is_some(),
        retraction,
        section,
    }
}

impl TauSplitting {
    pub fn to_report(&self, ctx: &DuoidalCtx) -> Report {
        let mut r = Report::new("tau splitting");
        ctx.conventions(&mut r);
        let mut mono = Check::flag("tau is a split monomorphism", self.split_mono);
        if let Some(w) = &self.retraction {
            mono = mono.with_witness(crate::report::Witness::new("retraction", w));
        }
        let mut epi = Check::flag("tau is a split epimorphism", self.split_epi);
        if let Some(w) = &self.section {
            epi = epi.with_witness(crate::report::Witness::new("section", w));
        }
        r.push(mono);
        r.push(epi);
        if self.split_mono && self.split_epi {
            r.push(Check::info(
                "equivalence criterion",
                "tau splits both ways: K and K' are equivalences iff their Galois maps are isomorphisms",
            ));
        }
        r
    }
}

/// The entwining `c⊗a ↦ a₁ ⊗ c·a₂` assembled through the interchange law:
/// `(A∘m)·ζ_{k,A,A,A}·(A∗δ)`.
pub fn entwining_via_interchange(a: &BimonoidData, ctx: &DuoidalCtx) -> Result<FpMatrix> {
    let (p, d) = (ctx.p, a.dim());
    let ia = FpMatrix::identity(p, d);
    ctx.star(&ia, a.m())?
        .mul(&ctx.zeta(1, d, d, d))?
        .mul(&ctx.circ(&ia, a.delta())?)
}

/// Galois map of `K' = - ∗ A` at `X = k`: `a⊗b ↦ a₁ ⊗ a₂·b`, assembled as
/// `(A∘m)·ζ_{A,A,J,A}·(δ∘A)`.
pub fn galois_map_kprime(a: &BimonoidData, ctx: &DuoidalCtx) -> Result<GaloisReport> {
    if ctx.kind != CtxKind::Braided {
        return Err(Error::Unsupported(format!(
            "galois map of K' needs the braided instance, got '{}'",
            ctx.tag
        )));
    }
    let report = check_bimonoid(a, ctx)?;
    if let Some(f) = report.failures().next() {
        return Err(Error::Precondition(format!("bimonoid: '{}' fails", f.name)));
    }
    let (p, d) = (ctx.p, a.dim());
    let ia = FpMatrix::identity(p, d);
    let base = ia
        .kron(a.m())?
        .mul(&ctx.zeta(d, d, ctx.unit_j, d))?
        .mul(&a.delta().kron(&ia)?)?;
    Ok(GaloisReport::from_base(base))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exactalg::swap;

    #[test]
    fn braided_ctx_basics() {
        let ctx = braided_duoidal(3).unwrap();
        assert_eq!(ctx.tau(), &FpMatrix::identity(3, 1));
        assert_eq!(ctx.zeta(1, 2, 2, 1), swap(3, 2, 2));
        assert!(ctx.zeta(1, 1, 1, 1).is_identity());
        assert!(braided_duoidal(4).is_err());
    }

    #[test]
    fn braided_ctx_passes_duoidal_checks() {
        let ctx = braided_duoidal(3).unwrap();
        let r = check_duoidal(&ctx, &[1, 2]).unwrap();
        assert!(r.passed(), "{r:#?}");
    }

    #[test]
    fn zeroed_mu_breaks_unit_monoid() {
        let ctx = braided_duoidal(3)
            .unwrap()
            .with_mu(FpMatrix::zeros(3, 1, 1));
        let r = check_duoidal(&ctx, &[1, 2]).unwrap();
        assert_eq!(
            r.verdict("(J, mu, tau) is a monoid"),
            Some(crate::report::Verdict::Fail)
        );
    }

    #[test]
    fn identity_interchange_breaks_naturality() {
        let base = braided_duoidal(3).unwrap();
        let ctx = base.with_zeta(Arc::new(|p, [w, x, y, z]| {
            if [w, x, y, z] == [1, 2, 2, 1] {
                FpMatrix::identity(p, 4)
            } else {
                middle_swap(p, w, x, y, z)
            }
        }));
        let r = check_duoidal(&ctx, &[1, 2]).unwrap();
        let nat = r.get("zeta naturality").unwrap();
        assert!(!nat.passed());
        assert!(nat.detail.as_ref().unwrap().contains("[1, 2, 2, 1]"));
    }

    #[test]
    fn bimonoid_diagrams() {
        let ctx3 = braided_duoidal(3).unwrap();
        assert!(check_bimonoid(&corpus::kz2_f3(), &ctx3).unwrap().passed());
        let ctx2 = braided_duoidal(2).unwrap();
        assert!(check_bimonoid(&corpus::m2_f2(), &ctx2).unwrap().passed());

        // ε(g) = 2 = -1 is still multiplicative; only the counit law breaks
        let mut bad = corpus::kz2_f3();
        bad.comonoid.eps.set(0, 1, 2);
        let r = check_bimonoid(&bad, &ctx3).unwrap();
        assert_eq!(
            r.verdict("eps.m = mu.(eps o eps)"),
            Some(crate::report::Verdict::Pass)
        );
        assert_eq!(
            r.verdict("comonoid: left counit"),
            Some(crate::report::Verdict::Fail)
        );
        assert!(!r.passed());

        let mut bad = corpus::kz2_f3();
        bad.comonoid.eps.set(0, 1, 0);
        let r = check_bimonoid(&bad, &ctx3).unwrap();
        assert_eq!(
            r.verdict("eps.m = mu.(eps o eps)"),
            Some(crate::report::Verdict::Fail)
        );
    }

    #[test]
    fn tau_split_examples() {
        let s = tau_splitting(&braided_duoidal(5).unwrap());
        assert!(s.split_mono && s.split_epi);
        assert_eq!(s.retraction.unwrap(), FpMatrix::identity(5, 1));

        let zero = braided_duoidal(5)
            .unwrap()
            .with_tau(FpMatrix::zeros(5, 1, 1));
        let s = tau_splitting(&zero);
        assert!(!s.split_mono && !s.split_epi);

        let one = FpMatrix::identity(5, 1);
        let e_j = FpMatrix::from_rows(5, &[&[1], &[0]]);
        let wide = braided_duoidal(5).unwrap().with_units(
            1,
            2,
            one.clone(),
            FpMatrix::zeros(5, 2, 4),
            e_j,
        );
        let s = tau_splitting(&wide);
        assert!(s.split_mono && !s.split_epi);
        let r = s.retraction.unwrap();
        assert!(r.mul(wide.tau()).unwrap().is_identity());
    }

    #[test]
    fn kprime_examples() {
        let triv =
            galois_map_kprime(&BimonoidData::trivial(7), &braided_duoidal(7).unwrap()).unwrap();
        assert!(triv.base.is_identity());

        let g = galois_map_kprime(&corpus::kz2_f3(), &braided_duoidal(3).unwrap()).unwrap();
        // basis u=0, g=1: u⊗x ↦ u⊗x, g⊗x ↦ g⊗gx
        let expected = FpMatrix::from_rows(
            3,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]],
        );
        assert_eq!(g.base, expected);
        assert!(g.invertible);

        let m = galois_map_kprime(&corpus::m2_f2(), &braided_duoidal(2).unwrap()).unwrap();
        assert_eq!(m.rank, 3);
        assert!(!m.invertible);

        let custom = braided_duoidal(3)
            .unwrap()
            .with_tau(FpMatrix::identity(3, 1));
        assert!(matches!(
            galois_map_kprime(&corpus::kz2_f3(), &custom),
            Err(Error::Unsupported(_))
        ));
    }
}
