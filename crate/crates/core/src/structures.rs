//! Structure-constant presentations of monoids, comonoids, bimonoids,
//! comodule algebras and module-comonoids in finite-dimensional F_p-vector
//! spaces, with their axiom checkers.
//!
//! Associators and unitors are identities under the row-major flattening,
//! so every axiom is a plain matrix equation.

use crate::duoidal::{braided_duoidal, check_bimonoid};
use crate::error::{shape_err, Error, Result};
use crate::exactalg::{middle_swap, FpMatrix};
use crate::report::Report;

/// Which side the monad `A ⊗ -` / `- ⊗ A` acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

fn expect_shape(name: &str, m: &FpMatrix, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(shape_err(name, (rows, cols), m.shape()));
    }
    Ok(())
}

fn expect_modulus(p: u32, m: &FpMatrix) -> Result<()> {
    if m.modulus() != p {
        return Err(Error::ModulusMismatch(p, m.modulus()));
    }
    Ok(())
}

fn id(p: u32, n: usize) -> FpMatrix {
    FpMatrix::identity(p, n)
}

/// `(A, m, e)` with `m : A⊗A -> A` and `e : k -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidData {
    pub dim: usize,
    pub m: FpMatrix,
    pub e: FpMatrix,
}

impl MonoidData {
    pub fn new(m: FpMatrix, e: FpMatrix) -> Result<Self> {
        let dim = m.rows();
        expect_shape("monoid multiplication", &m, dim, dim * dim)?;
        expect_shape("monoid unit", &e, dim, 1)?;
        expect_modulus(m.modulus(), &e)?;
        Ok(MonoidData { dim, m, e })
    }

    /// The ground field as a 1-dimensional monoid.
    pub fn trivial(p: u32) -> Self {
        MonoidData {
            dim: 1,
            m: id(p, 1),
            e: id(p, 1),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.m.modulus()
    }

    fn validate(&self) -> Result<()> {
        expect_shape(
            "monoid multiplication",
            &self.m,
            self.dim,
            self.dim * self.dim,
        )?;
        expect_shape("monoid unit", &self.e, self.dim, 1)?;
        expect_modulus(self.modulus(), &self.e)
    }
}

/// `(C, δ, ε)` with `δ : C -> C⊗C` and `ε : C -> k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComonoidData {
    pub dim: usize,
    pub delta: FpMatrix,
    pub eps: FpMatrix,
}

impl ComonoidData {
    pub fn new(delta: FpMatrix, eps: FpMatrix) -> Result<Self> {
        let dim = delta.cols();
        expect_shape("comonoid comultiplication", &delta, dim * dim, dim)?;
        expect_shape("comonoid counit", &eps, 1, dim)?;
        expect_modulus(delta.modulus(), &eps)?;
        Ok(ComonoidData { dim, delta, eps })
    }

    pub fn trivial(p: u32) -> Self {
        ComonoidData {
            dim: 1,
            delta: id(p, 1),
            eps: id(p, 1),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.delta.modulus()
    }

    fn validate(&self) -> Result<()> {
        expect_shape(
            "comonoid comultiplication",
            &self.delta,
            self.dim * self.dim,
            self.dim,
        )?;
        expect_shape("comonoid counit", &self.eps, 1, self.dim)?;
        expect_modulus(self.modulus(), &self.eps)
    }
}

/// A monoid and a comonoid on the same object. Compatibility is checked by
/// [`check_bimonoid`], never assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimonoidData {
    pub monoid: MonoidData,
    pub comonoid: ComonoidData,
}

impl BimonoidData {
    pub fn new(monoid: MonoidData, comonoid: ComonoidData) -> Result<Self> {
        if monoid.dim != comonoid.dim {
            return Err(Error::ShapeMismatch {
                context: "bimonoid carrier".into(),
                expected: format!("dim {}", monoid.dim),
                found: format!("dim {}", comonoid.dim),
            });
        }
        expect_modulus(monoid.modulus(), &comonoid.delta)?;
        Ok(BimonoidData { monoid, comonoid })
    }

    pub fn from_parts(m: FpMatrix, e: FpMatrix, delta: FpMatrix, eps: FpMatrix) -> Result<Self> {
        Self::new(MonoidData::new(m, e)?, ComonoidData::new(delta, eps)?)
    }

    pub fn trivial(p: u32) -> Self {
        BimonoidData {
            monoid: MonoidData::trivial(p),
            comonoid: ComonoidData::trivial(p),
        }
    }

    pub fn dim(&self) -> usize {
        self.monoid.dim
    }

    pub fn modulus(&self) -> u32 {
        self.monoid.modulus()
    }

    pub fn m(&self) -> &FpMatrix {
        &self.monoid.m
    }

    pub fn e(&self) -> &FpMatrix {
        &self.monoid.e
    }

    pub fn delta(&self) -> &FpMatrix {
        &self.comonoid.delta
    }

    pub fn eps(&self) -> &FpMatrix {
        &self.comonoid.eps
    }
}

/// An algebra `B` with a left coaction `ρ : B -> A⊗B` of a bimonoid `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebraData {
    pub algebra: MonoidData,
    pub over: BimonoidData,
    pub rho: FpMatrix,
}

impl ComoduleAlgebraData {
    pub fn new(algebra: MonoidData, over: BimonoidData, rho: FpMatrix) -> Result<Self> {
        let data = ComoduleAlgebraData { algebra, over, rho };
        data.validate()?;
        Ok(data)
    }

    /// `A` coacting on itself through its comultiplication.
    pub fn regular(a: &BimonoidData) -> Self {
        ComoduleAlgebraData {
            algebra: a.monoid.clone(),
            over: a.clone(),
            rho: a.delta().clone(),
        }
    }

    /// The ground field with coaction through the unit of `A`.
    pub fn trivial_coaction(a: &BimonoidData) -> Self {
        ComoduleAlgebraData {
            algebra: MonoidData::trivial(a.modulus()),
            over: a.clone(),
            rho: a.e().clone(),
        }
    }

    fn validate(&self) -> Result<()> {
        self.algebra.validate()?;
        let (da, db) = (self.over.dim(), self.algebra.dim);
        expect_shape("comodule-algebra coaction", &self.rho, da * db, db)?;
        expect_modulus(self.algebra.modulus(), &self.rho)?;
        expect_modulus(self.over.modulus(), &self.rho)
    }
}

/// A module over the monad `A ⊗ -` carrying a comonoid structure whose
/// structure maps are module morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleComonoidData {
    pub carrier: usize,
    pub sigma: FpMatrix,
    pub delta_z: FpMatrix,
    pub eps_z: FpMatrix,
}

impl ModuleComonoidData {
    pub fn comonoid(&self) -> ComonoidData {
        ComonoidData {
            dim: self.carrier,
            delta: self.delta_z.clone(),
            eps: self.eps_z.clone(),
        }
    }
}

/// A vector space with an action of a monoid; the side is supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleData {
    pub dim: usize,
    pub action: FpMatrix,
}

impl ModuleData {
    pub fn regular(a: &MonoidData) -> Self {
        ModuleData {
            dim: a.dim,
            action: a.m.clone(),
        }
    }

    /// The free right module `X ⊗ A` on an `x_dim`-dimensional space.
    pub fn free_right(a: &MonoidData, x_dim: usize) -> Result<Self> {
        Ok(ModuleData {
            dim: x_dim * a.dim,
            action: id(a.modulus(), x_dim).kron(&a.m)?,
        })
    }
}

pub fn check_monoid(a: &MonoidData) -> Result<Report> {
    a.validate()?;
    let p = a.modulus();
    let i = id(p, a.dim);
    let mut r = Report::new("monoid");
    r.equation(
        "associativity",
        &a.m.mul(&a.m.kron(&i)?)?,
        &a.m.mul(&i.kron(&a.m)?)?,
    )?;
    r.equation("left unit", &a.m.mul(&a.e.kron(&i)?)?, &i)?;
    r.equation("right unit", &a.m.mul(&i.kron(&a.e)?)?, &i)?;
    Ok(r)
}

pub fn check_comonoid(c: &ComonoidData) -> Result<Report> {
    c.validate()?;
    let p = c.modulus();
    let i = id(p, c.dim);
    let mut r = Report::new("comonoid");
    r.equation(
        "coassociativity",
        &c.delta.kron(&i)?.mul(&c.delta)?,
        &i.kron(&c.delta)?.mul(&c.delta)?,
    )?;
    r.equation("left counit", &c.eps.kron(&i)?.mul(&c.delta)?, &i)?;
    r.equation("right counit", &i.kron(&c.eps)?.mul(&c.delta)?, &i)?;
    Ok(r)
}

/// Module axioms for `h : X⊗A -> X` (right) or `h : A⊗X -> X` (left).
pub fn check_module(x: &ModuleData, a: &MonoidData, side: Side) -> Result<Report> {
    expect_shape("module action", &x.action, x.dim, x.dim * a.dim)?;
    let p = a.modulus();
    let (ix, ia) = (id(p, x.dim), id(p, a.dim));
    let h = &x.action;
    let mut r = Report::new("module");
    match side {
        Side::Right => {
            r.equation(
                "action associativity",
                &h.mul(&h.kron(&ia)?)?,
                &h.mul(&ix.kron(&a.m)?)?,
            )?;
            r.equation("action unit", &h.mul(&ix.kron(&a.e)?)?, &ix)?;
        }
        Side::Left => {
            r.equation(
                "action associativity",
                &h.mul(&ia.kron(h)?)?,
                &h.mul(&a.m.kron(&ix)?)?,
            )?;
            r.equation("action unit", &h.mul(&a.e.kron(&ix)?)?, &ix)?;
        }
    }
    Ok(r)
}

/// Comodule axioms for `θ : X -> X⊗C` (right) or `θ : X -> C⊗X` (left).
pub fn check_comodule(
    dim: usize,
    theta: &FpMatrix,
    c: &ComonoidData,
    side: Side,
) -> Result<Report> {
    expect_shape("comodule coaction", theta, dim * c.dim, dim)?;
    let p = c.modulus();
    let (ix, ic) = (id(p, dim), id(p, c.dim));
    let mut r = Report::new("comodule");
    match side {
        Side::Right => {
            r.equation(
                "coaction coassociativity",
                &theta.kron(&ic)?.mul(theta)?,
                &ix.kron(&c.delta)?.mul(theta)?,
            )?;
            r.equation("coaction counit", &ix.kron(&c.eps)?.mul(theta)?, &ix)?;
        }
        Side::Left => {
            r.equation(
                "coaction coassociativity",
                &ic.kron(theta)?.mul(theta)?,
                &c.delta.kron(&ix)?.mul(theta)?,
            )?;
            r.equation("coaction counit", &c.eps.kron(&ix)?.mul(theta)?, &ix)?;
        }
    }
    Ok(r)
}

pub fn check_comodule_algebra(b: &ComoduleAlgebraData) -> Result<Report> {
    b.validate()?;
    let a = &b.over;
    let p = a.modulus();
    let (da, db) = (a.dim(), b.algebra.dim);
    let (ia, ib) = (id(p, da), id(p, db));
    let rho = &b.rho;
    let mut r = Report::new("comodule algebra");
    r.convention("coaction rho : B -> A⊗B (left A-comodule)");
    r.equation(
        "coaction coassociativity",
        &a.delta().kron(&ib)?.mul(rho)?,
        &ia.kron(rho)?.mul(rho)?,
    )?;
    r.equation("coaction counit", &a.eps().kron(&ib)?.mul(rho)?, &ib)?;
    let shuffle = middle_swap(p, da, db, da, db);
    r.equation(
        "coaction multiplicative",
        &rho.mul(&b.algebra.m)?,
        &a.m()
            .kron(&b.algebra.m)?
            .mul(&shuffle)?
            .mul(&rho.kron(rho)?)?,
    )?;
    r.equation(
        "coaction unital",
        &rho.mul(&b.algebra.e)?,
        &a.e().kron(&b.algebra.e)?,
    )?;
    Ok(r)
}

/// The opmonoidal structure `ω_{V,W} : A⊗V⊗W -> A⊗V⊗A⊗W`,
/// `a⊗v⊗w ↦ a₁⊗v⊗a₂⊗w`, of the monad `A ⊗ -`.
pub fn opmonoidal_omega(a: &BimonoidData, v: usize, w: usize) -> Result<FpMatrix> {
    let p = a.modulus();
    let ctx = braided_duoidal(p as u64)?;
    // (A∗A)∘(V∗W) -> (A∘V)∗(A∘W)
    ctx.zeta(a.dim(), a.dim(), v, w)
        .mul(&a.delta().kron(&id(p, v * w))?)
}

pub fn check_module_comonoid(z: &ModuleComonoidData, a: &BimonoidData) -> Result<Report> {
    let (da, dz) = (a.dim(), z.carrier);
    expect_shape("module-comonoid action", &z.sigma, dz, da * dz)?;
    let mut r = Report::new("module-comonoid");
    r.convention("module-comonoid Z carries a left action sigma : A⊗Z -> Z");
    let module = ModuleData {
        dim: dz,
        action: z.sigma.clone(),
    };
    r.absorb("", check_module(&module, &a.monoid, Side::Left)?);
    r.absorb("", check_comonoid(&z.comonoid())?);
    let omega = opmonoidal_omega(a, dz, dz)?;
    r.equation(
        "comultiplication is a module map",
        &z.delta_z.mul(&z.sigma)?,
        &z.sigma.kron(&z.sigma)?.mul(&omega)?,
    )?;
    r.equation(
        "counit is a module map",
        &z.eps_z.mul(&z.sigma)?,
        &a.eps().kron(&z.eps_z)?,
    )?;
    Ok(r)
}

fn require(report: Report, what: &str) -> Result<()> {
    if let Some(f) = report.failures().next() {
        return Err(Error::Precondition(format!("{what}: '{}' fails", f.name)));
    }
    Ok(())
}

pub(crate) fn require_bimonoid(a: &BimonoidData) -> Result<()> {
    let ctx = braided_duoidal(a.modulus() as u64)?;
    require(check_bimonoid(a, &ctx)?, "bimonoid")
}

pub(crate) fn require_comonoid(c: &ComonoidData) -> Result<()> {
    require(check_comonoid(c)?, "comonoid")
}

pub(crate) fn require_comodule_algebra(b: &ComoduleAlgebraData) -> Result<()> {
    require_bimonoid(&b.over)?;
    require(check_monoid(&b.algebra)?, "comodule algebra's algebra")?;
    require(check_comodule_algebra(b)?, "comodule algebra")
}

/// The module-comonoid `A ⊗ C` induced by a comonoid `C`: action
/// `m ⊗ C`, comultiplication `ω_{C,C}·(A⊗δ)`, counit `ε_A ⊗ ε_C`.
pub fn module_comonoid_of_coalgebra(
    a: &BimonoidData,
    c: &ComonoidData,
) -> Result<ModuleComonoidData> {
    require_bimonoid(a)?;
    require_comonoid(c)?;
    if a.modulus() != c.modulus() {
        return Err(Error::ModulusMismatch(a.modulus(), c.modulus()));
    }
    let p = a.modulus();
    let (da, dc) = (a.dim(), c.dim);
    let sigma = a.m().kron(&id(p, dc))?;
    let delta_z = opmonoidal_omega(a, dc, dc)?.mul(&id(p, da).kron(&c.delta)?)?;
    let eps_z = a.eps().mul(&id(p, da).kron(&c.eps)?)?;
    Ok(ModuleComonoidData {
        carrier: da * dc,
        sigma,
        delta_z,
        eps_z,
    })
}

/// A left `A`-module handed to [`tensor_over_a`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeftModule {
    /// `A ⊗ V` with action `m ⊗ V`.
    Free {
        generators: usize,
    },
    General(ModuleData),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOverA {
    pub dim: usize,
    /// `N ⊗ A ⊗ V -> N ⊗ V`, `n⊗a⊗v ↦ n·a⊗v`.
    pub can: FpMatrix,
    /// Projection onto the cokernel of `ϱ_N ⊗ I − I ⊗ ρ_M`.
    pub cokernel: FpMatrix,
    /// `can` and `cokernel` differ by an invertible change of basis.
    pub agrees_with_cokernel: bool,
}

/// `N ⊗_A (A ⊗ V) ≅ N ⊗ V` via the split coequalizer.
pub fn tensor_over_a(a: &MonoidData, n: &ModuleData, m: &LeftModule) -> Result<TensorOverA> {
    let v = match m {
        LeftModule::Free { generators } => *generators,
        LeftModule::General(_) => {
            return Err(Error::Unsupported(
                "tensor over A is only available for free left modules A⊗V".into(),
            ))
        }
    };
    require(check_module(n, a, Side::Right)?, "right module N")?;
    let p = a.modulus();
    let (dn, da) = (n.dim, a.dim);
    let iv = id(p, v);
    let can = n.action.kron(&iv)?;
    let left = n.action.kron(&id(p, da * v))?;
    let right = id(p, dn).kron(&a.m)?.kron(&iv)?;
    let cokernel = left.sub(&right)?.cokernel_basis();
    let r = can.rank();
    let agrees = r == dn * v && cokernel.rank() == r && can.vstack(&cokernel)?.rank() == r;
    Ok(TensorOverA {
        dim: dn * v,
        can,
        cokernel,
        agrees_with_cokernel: agrees,
    })
}
