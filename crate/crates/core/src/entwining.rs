//! Mixed distributive laws stored as a single base matrix, their axioms,
//! the entwinings induced by a bimonoid and by a comodule algebra, and the
//! lifting of the comonad to the module category.
//!
//! Two leg conventions are in use:
//! * right: monad `- ⊗ A`, comonad `- ⊗ C`, `λ₀ : C⊗A -> A⊗C`, components `I_X ⊗ λ₀`;
//! * left:  monad `A ⊗ -`, comonad `C ⊗ -`, `λ₀ : A⊗C -> C⊗A`, components `λ₀ ⊗ I_X`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{shape_err, Error, Result};
use crate::exactalg::{swap, FpMatrix};
use crate::report::{Check, Report};
use crate::structures::{
    check_comonoid, check_module, check_monoid, module_comonoid_of_coalgebra, require_bimonoid,
    require_comodule_algebra, require_comonoid, BimonoidData, ComoduleAlgebraData, ComonoidData,
    ModuleData, MonoidData, Side,
};

pub const AXIOM_MULTIPLICATION: &str = "entwining: multiplication";
pub const AXIOM_UNIT: &str = "entwining: unit";
pub const AXIOM_COMULTIPLICATION: &str = "entwining: comultiplication";
pub const AXIOM_COUNIT: &str = "entwining: counit";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwiningData {
    pub monoid: MonoidData,
    pub comonoid: ComonoidData,
    pub lambda0: FpMatrix,
    pub side: Side,
}

pub fn convention(side: Side) -> &'static str {
    match side {
        Side::Right => "right entwining: lambda0 : C⊗A -> A⊗C, components I_X⊗lambda0; modules X⊗A -> X, comodules X -> X⊗C",
        Side::Left => "left entwining: lambda0 : A⊗C -> C⊗A, components lambda0⊗I_X; modules A⊗X -> X, comodules X -> C⊗X",
    }
}

impl EntwiningData {
    pub fn new(
        monoid: MonoidData,
        comonoid: ComonoidData,
        lambda0: FpMatrix,
        side: Side,
    ) -> Result<Self> {
        let ed = EntwiningData {
            monoid,
            comonoid,
            lambda0,
            side,
        };
        ed.validate()?;
        Ok(ed)
    }

    pub fn modulus(&self) -> u32 {
        self.monoid.modulus()
    }

    fn validate(&self) -> Result<()> {
        let n = self.monoid.dim * self.comonoid.dim;
        if self.lambda0.shape() != (n, n) {
            return Err(shape_err(
                "entwining base map",
                (n, n),
                self.lambda0.shape(),
            ));
        }
        if self.monoid.modulus() != self.comonoid.modulus()
            || self.lambda0.modulus() != self.monoid.modulus()
        {
            return Err(Error::ModulusMismatch(
                self.monoid.modulus(),
                self.lambda0.modulus(),
            ));
        }
        Ok(())
    }

    /// The component `λ_X` at an `x_dim`-dimensional object.
    pub fn component(&self, x_dim: usize) -> Result<FpMatrix> {
        let ix = FpMatrix::identity(self.modulus(), x_dim);
        match self.side {
            Side::Right => ix.kron(&self.lambda0),
            Side::Left => self.lambda0.kron(&ix),
        }
    }
}

/// The four mixed-distributive-law equations evaluated on `λ₀`.
pub fn check_entwining(ed: &EntwiningData) -> Result<Report> {
    ed.validate()?;
    for (what, sub) in [
        ("monoid", check_monoid(&ed.monoid)?),
        ("comonoid", check_comonoid(&ed.comonoid)?),
    ] {
        if let Some(f) = sub.failures().next() {
            return Err(Error::Precondition(format!(
                "entwining {what}: '{}' fails",
                f.name
            )));
        }
    }
    let p = ed.modulus();
    let (a, c, l) = (&ed.monoid, &ed.comonoid, &ed.lambda0);
    let (ia, ic) = (FpMatrix::identity(p, a.dim), FpMatrix::identity(p, c.dim));
    let mut r = Report::new("entwining");
    r.convention(convention(ed.side));
    match ed.side {
        Side::Right => {
            r.equation(
                AXIOM_MULTIPLICATION,
                &l.mul(&ic.kron(&a.m)?)?,
                &a.m.kron(&ic)?.mul(&ia.kron(l)?)?.mul(&l.kron(&ia)?)?,
            )?;
            r.equation(AXIOM_UNIT, &l.mul(&ic.kron(&a.e)?)?, &a.e.kron(&ic)?)?;
            r.equation(
                AXIOM_COMULTIPLICATION,
                &ia.kron(&c.delta)?.mul(l)?,
                &l.kron(&ic)?.mul(&ic.kron(l)?)?.mul(&c.delta.kron(&ia)?)?,
            )?;
            r.equation(AXIOM_COUNIT, &ia.kron(&c.eps)?.mul(l)?, &c.eps.kron(&ia)?)?;
        }
        Side::Left => {
            r.equation(
                AXIOM_MULTIPLICATION,
                &l.mul(&a.m.kron(&ic)?)?,
                &ic.kron(&a.m)?.mul(&l.kron(&ia)?)?.mul(&ia.kron(l)?)?,
            )?;
            r.equation(AXIOM_UNIT, &l.mul(&a.e.kron(&ic)?)?, &ic.kron(&a.e)?)?;
            r.equation(
                AXIOM_COMULTIPLICATION,
                &c.delta.kron(&ia)?.mul(l)?,
                &ic.kron(l)?.mul(&l.kron(&ic)?)?.mul(&ia.kron(&c.delta)?)?,
            )?;
            r.equation(AXIOM_COUNIT, &c.eps.kron(&ia)?.mul(l)?, &ia.kron(&c.eps)?)?;
        }
    }
    Ok(r)
}

/// `c⊗a ↦ a₁ ⊗ c·a₂` on `A⊗A`, i.e. `(I⊗m)·(swap⊗I)·(I⊗δ)`, as a right entwining
/// of `A` with itself.
pub fn entwining_from_bimonoid(a: &BimonoidData) -> Result<EntwiningData> {
    require_bimonoid(a)?;
    let p = a.modulus();
    let d = a.dim();
    let ia = FpMatrix::identity(p, d);
    let lambda0 = ia
        .kron(a.m())?
        .mul(&swap(p, d, d).kron(&ia)?)?
        .mul(&ia.kron(a.delta())?)?;
    EntwiningData::new(a.monoid.clone(), a.comonoid.clone(), lambda0, Side::Right)
}

/// Left entwining of the monad `B ⊗ -` with the comonad `Z ⊗ -`, `Z = A⊗C`:
/// `b⊗z ↦ σ(b₋₁⊗z) ⊗ b₀`.
pub fn entwining_from_comodule_monad(
    b: &ComoduleAlgebraData,
    c: &ComonoidData,
) -> Result<EntwiningData> {
    require_comodule_algebra(b)?;
    require_comonoid(c)?;
    let z = module_comonoid_of_coalgebra(&b.over, c)?;
    let p = b.over.modulus();
    let (da, db, dz) = (b.over.dim(), b.algebra.dim, z.carrier);
    let lambda0 = z
        .sigma
        .kron(&FpMatrix::identity(p, db))?
        .mul(&FpMatrix::identity(p, da).kron(&swap(p, db, dz))?)?
        .mul(&b.rho.kron(&FpMatrix::identity(p, dz))?)?;
    EntwiningData::new(b.algebra.clone(), z.comonoid(), lambda0, Side::Left)
}

/// The left mirror of a right entwining: `swap·λ₀·swap` on
/// `A⊗C -> C⊗A`. For commutative `A` and cocommutative `C` this is again an
/// entwining of the same monoid and comonoid.
pub fn mirror_lambda(ed: &EntwiningData) -> Result<FpMatrix> {
    let p = ed.modulus();
    let (da, dc) = (ed.monoid.dim, ed.comonoid.dim);
    match ed.side {
        // C⊗A -> A⊗C  becomes  A⊗C -> C⊗A
        Side::Right => swap(p, da, dc).mul(&ed.lambda0)?.mul(&swap(p, da, dc)),
        Side::Left => swap(p, dc, da).mul(&ed.lambda0)?.mul(&swap(p, dc, da)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lifted {
    pub module: ModuleData,
    pub report: Report,
}

fn lifted_action(ed: &EntwiningData, x: &ModuleData) -> Result<FpMatrix> {
    let p = ed.modulus();
    let ic = FpMatrix::identity(p, ed.comonoid.dim);
    match ed.side {
        Side::Right => x.action.kron(&ic)?.mul(&ed.component(x.dim)?),
        Side::Left => ic.kron(&x.action)?.mul(&ed.component(x.dim)?),
    }
}

/// The lifted comonad applied to a module: `(X⊗C, (h⊗C)·(X⊗λ₀))` on the right,
/// `(C⊗X, (C⊗h)·(λ₀⊗X))` on the left. The report covers the module axioms of
/// the result and that the counit and comultiplication legs are module maps.
pub fn lift_comonad(ed: &EntwiningData, x: &ModuleData) -> Result<Lifted> {
    ed.validate()?;
    let base = check_module(x, &ed.monoid, ed.side)?;
    if let Some(f) = base.failures().next() {
        return Err(Error::Precondition(format!(
            "input module: '{}' fails",
            f.name
        )));
    }
    let p = ed.modulus();
    let (da, dc) = (ed.monoid.dim, ed.comonoid.dim);
    let ia = FpMatrix::identity(p, da);
    let ix = FpMatrix::identity(p, x.dim);
    let lifted = ModuleData {
        dim: x.dim * dc,
        action: lifted_action(ed, x)?,
    };
    let twice = ModuleData {
        dim: lifted.dim * dc,
        action: lifted_action(ed, &lifted)?,
    };
    let mut r = Report::new("lifted comonad");
    r.convention(convention(ed.side));
    r.absorb("lifted module", check_module(&lifted, &ed.monoid, ed.side)?);
    let (c, h, hh, hhh) = (&ed.comonoid, &x.action, &lifted.action, &twice.action);
    match ed.side {
        Side::Right => {
            let counit = ix.kron(&c.eps)?;
            let comult = ix.kron(&c.delta)?;
            r.equation(
                "counit leg is a module map",
                &counit.mul(hh)?,
                &h.mul(&counit.kron(&ia)?)?,
            )?;
            r.equation(
                "comultiplication leg is a module map",
                &comult.mul(hh)?,
                &hhh.mul(&comult.kron(&ia)?)?,
            )?;
        }
        Side::Left => {
            let counit = c.eps.kron(&ix)?;
            let comult = c.delta.kron(&ix)?;
            r.equation(
                "counit leg is a module map",
                &counit.mul(hh)?,
                &h.mul(&ia.kron(&counit)?)?,
            )?;
            r.equation(
                "comultiplication leg is a module map",
                &comult.mul(hh)?,
                &hhh.mul(&ia.kron(&comult)?)?,
            )?;
        }
    }
    Ok(Lifted {
        module: lifted,
        report: r,
    })
}

/// Recovers `λ_X` from the lifting alone: lift the free module on `X` and
/// precompose its action with the monad unit, `TG -> TGT -> GT`.
pub fn rebuild_component(ed: &EntwiningData, x_dim: usize) -> Result<FpMatrix> {
    let p = ed.modulus();
    let (a, dc) = (&ed.monoid, ed.comonoid.dim);
    let ix = FpMatrix::identity(p, x_dim);
    let ic = FpMatrix::identity(p, dc);
    let ia = FpMatrix::identity(p, a.dim);
    match ed.side {
        Side::Right => {
            // free module X⊗A; Ĝ of it lives on X⊗A⊗C
            let free = ModuleData::free_right(a, x_dim)?;
            let lifted = lift_comonad(ed, &free)?;
            let unit = FpMatrix::kron_all(p, &[&ix, &a.e, &ic, &ia])?;
            lifted.module.action.mul(&unit)
        }
        Side::Left => {
            // free module A⊗X; Ĝ of it lives on C⊗A⊗X
            let free = ModuleData {
                dim: a.dim * x_dim,
                action: a.m.kron(&ix)?,
            };
            let lifted = lift_comonad(ed, &free)?;
            let unit = FpMatrix::kron_all(p, &[&ia, &ic, &a.e, &ix])?;
            lifted.module.action.mul(&unit)
        }
    }
}

/// Round trip entwining -> lifting -> entwining at `X = k`.
pub fn rebuild_entwining(ed: &EntwiningData) -> Result<FpMatrix> {
    rebuild_component(ed, 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationSweep {
    pub tried: usize,
    pub detected: usize,
    /// `(row, col, added)` for perturbations no axiom caught.
    pub undetected: Vec<(usize, usize, u32)>,
}

/// Adds a random nonzero value to one random entry of `λ₀`, `count` times,
/// and records whether some entwining axiom fails.
pub fn perturbation_sweep(
    ed: &EntwiningData,
    count: usize,
    seed: u64,
) -> Result<PerturbationSweep> {
    let p = ed.modulus();
    let n = ed.lambda0.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = PerturbationSweep {
        tried: 0,
        detected: 0,
        undetected: Vec::new(),
    };
    if n == 0 || p < 2 {
        return Ok(out);
    }
    for _ in 0..count {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let add = rng.gen_range(1..p);
        let mut bad = ed.clone();
        bad.lambda0
            .set(i, j, bad.lambda0.get(i, j) as i64 + add as i64);
        out.tried += 1;
        if check_entwining(&bad)?.passed() {
            out.undetected.push((i, j, add));
        } else {
            out.detected += 1;
        }
    }
    Ok(out)
}

impl PerturbationSweep {
    pub fn to_check(&self) -> Check {
        let ok = self.undetected.is_empty();
        let mut c =
            Check::flag("single-entry perturbations are rejected", ok).with_detail(format!(
                "{}/{} perturbations break an axiom",
                self.detected, self.tried
            ));
        if let Some(&(i, j, _)) = self.undetected.first() {
            c.counterexample = Some([i, j]);
        }
        c
    }
}
