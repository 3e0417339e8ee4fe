//! Brute-force oracles. Every structure map is read entry by entry and both
//! sides of each axiom are evaluated on all basis tuples with explicit sums;
//! nothing here calls `kron`, `mul` or the leg permutation helpers.

use std::collections::BTreeMap;

use entwine::entwining::EntwiningData;
use entwine::exactalg::FpMatrix;
use entwine::hopfmod::HopfModuleData;
use entwine::structures::{BimonoidData, ComoduleAlgebraData, ComonoidData, MonoidData, Side};

/// A vector in a tensor power, keyed by multi-index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vector {
    p: u64,
    terms: BTreeMap<Vec<usize>, u64>,
}

impl Vector {
    pub fn new(p: u32) -> Self {
        Vector {
            p: p as u64,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(p: u32, idx: Vec<usize>) -> Self {
        let mut v = Vector::new(p);
        v.add(idx, 1);
        v
    }

    pub fn add(&mut self, idx: Vec<usize>, c: u64) {
        let slot = self.terms.entry(idx).or_insert(0);
        *slot = (*slot + c % self.p) % self.p;
    }

    fn normalized(&self) -> BTreeMap<Vec<usize>, u64> {
        self.terms
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k.clone(), c))
            .collect()
    }

    pub fn same(&self, other: &Vector) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, u64)> {
        self.terms
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
    }

    /// Replaces leg `leg` of every term by `f` of it.
    pub fn map_leg(&self, leg: usize, f: impl Fn(usize) -> Vec<(Vec<usize>, u64)>) -> Vector {
        self.map_legs(leg, 1, |xs| f(xs[0]))
    }

    /// Replaces legs `start..start+n` of every term by `f` of them.
    pub fn map_legs(
        &self,
        start: usize,
        n: usize,
        f: impl Fn(&[usize]) -> Vec<(Vec<usize>, u64)>,
    ) -> Vector {
        let mut out = Vector::new(self.p as u32);
        for (idx, c) in self.iter() {
            for (img, d) in f(&idx[start..start + n]) {
                let mut k = idx[..start].to_vec();
                k.extend(img);
                k.extend_from_slice(&idx[start + n..]);
                out.add(k, c * d);
            }
        }
        out
    }
}

/// Nonzero entries of column `j`, with row indices unflattened into `dims`.
pub fn column(m: &FpMatrix, j: usize, dims: &[usize]) -> Vec<(Vec<usize>, u64)> {
    (0..m.rows())
        .filter(|&r| m.get(r, j) != 0)
        .map(|r| {
            let mut rest = r;
            let mut idx = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                idx[k] = rest % dims[k];
                rest /= dims[k];
            }
            (idx, m.get(r, j) as u64)
        })
        .collect()
}

/// Row-major flattening of a multi-index.
pub fn flat(idx: &[usize], dims: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

pub struct Alg<'a> {
    pub m: &'a MonoidData,
}

impl Alg<'_> {
    pub fn mul(&self, i: usize, j: usize) -> Vec<(Vec<usize>, u64)> {
        column(&self.m.m, i * self.m.dim + j, &[self.m.dim])
    }
    pub fn unit(&self) -> Vec<(Vec<usize>, u64)> {
        column(&self.m.e, 0, &[self.m.dim])
    }
}

pub struct Coalg<'a> {
    pub c: &'a ComonoidData,
}

impl Coalg<'_> {
    pub fn comul(&self, i: usize) -> Vec<(Vec<usize>, u64)> {
        column(&self.c.delta, i, &[self.c.dim, self.c.dim])
    }
    pub fn counit(&self, i: usize) -> u64 {
        self.c.eps.get(0, i) as u64
    }
}

/// `(name, holds)` pairs.
pub type Verdicts = Vec<(String, bool)>;

fn all_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn holds(dims: &[usize], p: u32, f: impl Fn(&[usize]) -> (Vector, Vector)) -> bool {
    let _ = p;
    all_tuples(dims).iter().all(|t| {
        let (l, r) = f(t);
        l.same(&r)
    })
}

pub fn monoid(m: &MonoidData) -> Verdicts {
    let p = m.modulus();
    let d = m.dim;
    let a = Alg { m };
    let mul2 = |xs: &[usize]| a.mul(xs[0], xs[1]);
    vec![
        (
            "associativity".into(),
            holds(&[d, d, d], p, |t| {
                let v = Vector::basis(p, t.to_vec());
                (
                    v.map_legs(0, 2, mul2).map_legs(0, 2, mul2),
                    v.map_legs(1, 2, mul2).map_legs(0, 2, mul2),
                )
            }),
        ),
        (
            "left unit".into(),
            holds(&[d], p, |t| {
                let mut v = Vector::new(p);
                for (u, c) in a.unit() {
                    v.add(vec![u[0], t[0]], c);
                }
                (v.map_legs(0, 2, mul2), Vector::basis(p, t.to_vec()))
            }),
        ),
        (
            "right unit".into(),
            holds(&[d], p, |t| {
                let mut v = Vector::new(p);
                for (u, c) in a.unit() {
                    v.add(vec![t[0], u[0]], c);
                }
                (v.map_legs(0, 2, mul2), Vector::basis(p, t.to_vec()))
            }),
        ),
    ]
}

pub fn comonoid(c: &ComonoidData) -> Verdicts {
    let p = c.modulus();
    let d = c.dim;
    let k = Coalg { c };
    let counit_leg = |x: usize| vec![(vec![], k.counit(x))];
    vec![
        (
            "coassociativity".into(),
            holds(&[d], p, |t| {
                let v = Vector::basis(p, t.to_vec()).map_leg(0, |x| k.comul(x));
                (v.map_leg(0, |x| k.comul(x)), v.map_leg(1, |x| k.comul(x)))
            }),
        ),
        (
            "left counit".into(),
            holds(&[d], p, |t| {
                let v = Vector::basis(p, t.to_vec()).map_leg(0, |x| k.comul(x));
                (v.map_leg(0, counit_leg), Vector::basis(p, t.to_vec()))
            }),
        ),
        (
            "right counit".into(),
            holds(&[d], p, |t| {
                let v = Vector::basis(p, t.to_vec()).map_leg(0, |x| k.comul(x));
                (v.map_leg(1, counit_leg), Vector::basis(p, t.to_vec()))
            }),
        ),
    ]
}

type Product<'a> = dyn Fn(usize, usize) -> Vec<(Vec<usize>, u64)> + 'a;

/// Product in `A⊗A` (or `A⊗B`): componentwise.
fn tensor_product(p: u32, x: &Vector, y: &Vector, muls: &[&Product<'_>]) -> Vector {
    let mut out = Vector::new(p);
    for (xi, xc) in x.iter() {
        for (yi, yc) in y.iter() {
            let mut partial = vec![(vec![], xc * yc % p as u64)];
            for (leg, mul) in muls.iter().enumerate() {
                let mut next = Vec::new();
                for (idx, c) in &partial {
                    for (img, d) in mul(xi[leg], yi[leg]) {
                        let mut k: Vec<usize> = idx.clone();
                        k.extend(img);
                        next.push((k, c * d % p as u64));
                    }
                }
                partial = next;
            }
            for (k, c) in partial {
                out.add(k, c);
            }
        }
    }
    out
}

fn vector_of(p: u32, terms: Vec<(Vec<usize>, u64)>) -> Vector {
    let mut v = Vector::new(p);
    for (k, c) in terms {
        v.add(k, c);
    }
    v
}

/// Bimonoid diagrams, with the monoid and comonoid axioms prefixed as in
/// the library report.
pub fn bimonoid(a: &BimonoidData) -> Verdicts {
    let p = a.modulus();
    let d = a.dim();
    let alg = Alg { m: &a.monoid };
    let co = Coalg { c: &a.comonoid };
    let mul = |i: usize, j: usize| alg.mul(i, j);
    let mut out: Verdicts = monoid(&a.monoid)
        .into_iter()
        .map(|(n, v)| (format!("monoid: {n}"), v))
        .chain(
            comonoid(&a.comonoid)
                .into_iter()
                .map(|(n, v)| (format!("comonoid: {n}"), v)),
        )
        .collect();
    out.push((
        "delta.m = (m*m).zeta.(delta o delta)".into(),
        holds(&[d, d], p, |t| {
            let lhs = vector_of(p, alg.mul(t[0], t[1])).map_leg(0, |x| co.comul(x));
            let rhs = tensor_product(
                p,
                &vector_of(p, co.comul(t[0])),
                &vector_of(p, co.comul(t[1])),
                &[&mul, &mul],
            );
            (lhs, rhs)
        }),
    ));
    out.push((
        "eps.m = mu.(eps o eps)".into(),
        holds(&[d, d], p, |t| {
            let lhs =
                vector_of(p, alg.mul(t[0], t[1])).map_leg(0, |x| vec![(vec![], co.counit(x))]);
            let rhs = vector_of(p, vec![(vec![], co.counit(t[0]) * co.counit(t[1]))]);
            (lhs, rhs)
        }),
    ));
    out.push((
        "delta.e = (e*e).Delta".into(),
        holds(&[], p, |_| {
            let lhs = vector_of(p, alg.unit()).map_leg(0, |x| co.comul(x));
            let mut rhs = Vector::new(p);
            for (u, c) in alg.unit() {
                for (w, e) in alg.unit() {
                    rhs.add(vec![u[0], w[0]], c * e);
                }
            }
            (lhs, rhs)
        }),
    ));
    out.push((
        "eps.e = tau".into(),
        holds(&[], p, |_| {
            let lhs = vector_of(p, alg.unit()).map_leg(0, |x| vec![(vec![], co.counit(x))]);
            (lhs, Vector::basis(p, vec![]))
        }),
    ));
    out
}

/// `λ` on a basis pair, as terms over the output legs.
fn lambda(ed: &EntwiningData, x: usize, y: usize) -> Vec<(Vec<usize>, u64)> {
    let (da, dc) = (ed.monoid.dim, ed.comonoid.dim);
    match ed.side {
        // c⊗a -> a⊗c
        Side::Right => column(&ed.lambda0, x * da + y, &[da, dc]),
        // a⊗c -> c⊗a
        Side::Left => column(&ed.lambda0, x * dc + y, &[dc, da]),
    }
}

pub fn entwining(ed: &EntwiningData) -> Verdicts {
    let p = ed.modulus();
    let (da, dc) = (ed.monoid.dim, ed.comonoid.dim);
    let alg = Alg { m: &ed.monoid };
    let co = Coalg { c: &ed.comonoid };
    let lam = |xs: &[usize]| lambda(ed, xs[0], xs[1]);
    let mul2 = |xs: &[usize]| alg.mul(xs[0], xs[1]);
    let comul = |x: usize| co.comul(x);
    let counit = |x: usize| vec![(vec![], co.counit(x))];
    match ed.side {
        Side::Right => vec![
            (
                "entwining: multiplication".into(),
                holds(&[dc, da, da], p, |t| {
                    let v = Vector::basis(p, t.to_vec());
                    let lhs = v.map_legs(1, 2, mul2).map_legs(0, 2, lam);
                    let rhs = v
                        .map_legs(0, 2, lam)
                        .map_legs(1, 2, lam)
                        .map_legs(0, 2, mul2);
                    (lhs, rhs)
                }),
            ),
            (
                "entwining: unit".into(),
                holds(&[dc], p, |t| {
                    let mut v = Vector::new(p);
                    let mut rhs = Vector::new(p);
                    for (u, c) in alg.unit() {
                        v.add(vec![t[0], u[0]], c);
                        rhs.add(vec![u[0], t[0]], c);
                    }
                    (v.map_legs(0, 2, lam), rhs)
                }),
            ),
            (
                "entwining: comultiplication".into(),
                holds(&[dc, da], p, |t| {
                    let v = Vector::basis(p, t.to_vec());
                    let lhs = v.map_legs(0, 2, lam).map_leg(1, comul);
                    let rhs = v.map_leg(0, comul).map_legs(1, 2, lam).map_legs(0, 2, lam);
                    (lhs, rhs)
                }),
            ),
            (
                "entwining: counit".into(),
                holds(&[dc, da], p, |t| {
                    let v = Vector::basis(p, t.to_vec());
                    (
                        v.map_legs(0, 2, lam).map_leg(1, counit),
                        v.map_leg(0, counit),
                    )
                }),
            ),
        ],
        Side::Left => vec![
            (
                "entwining: multiplication".into(),
                holds(&[da, da, dc], p, |t| {
                    let v = Vector::basis(p, t.to_vec());
                    let lhs = v.map_legs(0, 2, mul2).map_legs(0, 2, lam);
                    let rhs = v
                        .map_legs(1, 2, lam)
                        .map_legs(0, 2, lam)
                        .map_legs(1, 2, mul2);
                    (lhs, rhs)
                }),
            ),
            (
                "entwining: unit".into(),
                holds(&[dc], p, |t| {
                    let mut v = Vector::new(p);
                    let mut rhs = Vector::new(p);
                    for (u, c) in alg.unit() {
                        v.add(vec![u[0], t[0]], c);
                        rhs.add(vec![t[0], u[0]], c);
                    }
                    (v.map_legs(0, 2, lam), rhs)
                }),
            ),
            (
                "entwining: comultiplication".into(),
                holds(&[da, dc], p, |t| {
                    let v = Vector::basis(p, t.to_vec());
                    let lhs = v.map_legs(0, 2, lam).map_leg(0, comul);
                    let rhs = v.map_leg(1, comul).map_legs(0, 2, lam).map_legs(1, 2, lam);
                    (lhs, rhs)
                }),
            ),
            (
                "entwining: counit".into(),
                holds(&[da, dc], p, |t| {
                    let v = Vector::basis(p, t.to_vec());
                    (
                        v.map_legs(0, 2, lam).map_leg(0, counit),
                        v.map_leg(1, counit),
                    )
                }),
            ),
        ],
    }
}

/// Module, comodule and compatibility verdicts for a right Hopf module.
pub fn hopf_module(hm: &HopfModuleData, ed: &EntwiningData) -> Verdicts {
    assert_eq!(ed.side, Side::Right, "oracle covers right Hopf modules");
    let p = ed.modulus();
    let (dx, da, dc) = (hm.dim, ed.monoid.dim, ed.comonoid.dim);
    let alg = Alg { m: &ed.monoid };
    let co = Coalg { c: &ed.comonoid };
    let act = |xs: &[usize]| column(&hm.action, xs[0] * da + xs[1], &[dx]);
    let coact = |x: usize| column(&hm.coaction, x, &[dx, dc]);
    let lam = |xs: &[usize]| lambda(ed, xs[0], xs[1]);
    vec![
        (
            "action associativity".into(),
            holds(&[dx, da, da], p, |t| {
                let v = Vector::basis(p, t.to_vec());
                (
                    v.map_legs(0, 2, act).map_legs(0, 2, act),
                    v.map_legs(1, 2, |xs| alg.mul(xs[0], xs[1]))
                        .map_legs(0, 2, act),
                )
            }),
        ),
        (
            "action unit".into(),
            holds(&[dx], p, |t| {
                let mut v = Vector::new(p);
                for (u, c) in alg.unit() {
                    v.add(vec![t[0], u[0]], c);
                }
                (v.map_legs(0, 2, act), Vector::basis(p, t.to_vec()))
            }),
        ),
        (
            "coaction coassociativity".into(),
            holds(&[dx], p, |t| {
                let v = Vector::basis(p, t.to_vec()).map_leg(0, coact);
                (v.map_leg(0, coact), v.map_leg(1, |x| co.comul(x)))
            }),
        ),
        (
            "coaction counit".into(),
            holds(&[dx], p, |t| {
                let v = Vector::basis(p, t.to_vec()).map_leg(0, coact);
                (
                    v.map_leg(1, |x| vec![(vec![], co.counit(x))]),
                    Vector::basis(p, t.to_vec()),
                )
            }),
        ),
        (
            "compatibility theta.h = G(h).lambda_X.T(theta)".into(),
            holds(&[dx, da], p, |t| {
                let v = Vector::basis(p, t.to_vec());
                let lhs = v.map_legs(0, 2, act).map_leg(0, coact);
                let rhs = v.map_leg(0, coact).map_legs(1, 2, lam).map_legs(0, 2, act);
                (lhs, rhs)
            }),
        ),
    ]
}

pub fn comodule_algebra(b: &ComoduleAlgebraData) -> Verdicts {
    let p = b.over.modulus();
    let (da, db) = (b.over.dim(), b.algebra.dim);
    let a_alg = Alg { m: &b.over.monoid };
    let b_alg = Alg { m: &b.algebra };
    let co = Coalg {
        c: &b.over.comonoid,
    };
    let rho = |x: usize| column(&b.rho, x, &[da, db]);
    let mul_a = |i: usize, j: usize| a_alg.mul(i, j);
    let mul_b = |i: usize, j: usize| b_alg.mul(i, j);
    vec![
        (
            "coaction coassociativity".into(),
            holds(&[db], p, |t| {
                let v = Vector::basis(p, t.to_vec()).map_leg(0, rho);
                (v.map_leg(0, |x| co.comul(x)), v.map_leg(1, rho))
            }),
        ),
        (
            "coaction counit".into(),
            holds(&[db], p, |t| {
                let v = Vector::basis(p, t.to_vec()).map_leg(0, rho);
                (
                    v.map_leg(0, |x| vec![(vec![], co.counit(x))]),
                    Vector::basis(p, t.to_vec()),
                )
            }),
        ),
        (
            "coaction multiplicative".into(),
            holds(&[db, db], p, |t| {
                let lhs = vector_of(p, b_alg.mul(t[0], t[1])).map_leg(0, rho);
                let rhs = tensor_product(
                    p,
                    &vector_of(p, rho(t[0])),
                    &vector_of(p, rho(t[1])),
                    &[&mul_a, &mul_b],
                );
                (lhs, rhs)
            }),
        ),
        (
            "coaction unital".into(),
            holds(&[], p, |_| {
                let lhs = vector_of(p, b_alg.unit()).map_leg(0, rho);
                let mut rhs = Vector::new(p);
                for (u, c) in a_alg.unit() {
                    for (w, e) in b_alg.unit() {
                        rhs.add(vec![u[0], w[0]], c * e);
                    }
                }
                (lhs, rhs)
            }),
        ),
    ]
}

/// Matrix of a linear map given by its values on basis multi-indices.
pub fn matrix_of(p: u32, src: &[usize], dst: &[usize], f: impl Fn(&[usize]) -> Vector) -> FpMatrix {
    let rows: usize = dst.iter().product();
    let cols: usize = src.iter().product();
    let mut m = FpMatrix::zeros(p, rows, cols);
    for t in all_tuples(src) {
        let j = flat(&t, src);
        for (idx, c) in f(&t).iter() {
            let i = flat(idx, dst);
            m.set(i, j, (m.get(i, j) as u64 + c) as i64);
        }
    }
    m
}

/// `β(x⊗a) = x·a₁ ⊗ a₂`.
pub fn beta(a: &BimonoidData) -> FpMatrix {
    let p = a.modulus();
    let d = a.dim();
    let alg = Alg { m: &a.monoid };
    let co = Coalg { c: &a.comonoid };
    matrix_of(p, &[d, d], &[d, d], |t| {
        Vector::basis(p, t.to_vec())
            .map_leg(1, |x| co.comul(x))
            .map_legs(0, 2, |xs| alg.mul(xs[0], xs[1]))
    })
}

/// `c⊗a ↦ a₁ ⊗ c·a₂`.
pub fn lambda_from_bimonoid(a: &BimonoidData) -> FpMatrix {
    let p = a.modulus();
    let d = a.dim();
    let alg = Alg { m: &a.monoid };
    let co = Coalg { c: &a.comonoid };
    matrix_of(p, &[d, d], &[d, d], |t| {
        let mut out = Vector::new(p);
        for (s, c) in co.comul(t[1]) {
            for (prod, e) in alg.mul(t[0], s[1]) {
                out.add(vec![s[0], prod[0]], c * e);
            }
        }
        out
    })
}

/// `b⊗c⊗b' ↦ b₋₁ ⊗ c ⊗ b₀·b'`.
pub fn can(b: &ComoduleAlgebraData, c: &ComonoidData) -> FpMatrix {
    let p = b.over.modulus();
    let (da, db, dc) = (b.over.dim(), b.algebra.dim, c.dim);
    let b_alg = Alg { m: &b.algebra };
    matrix_of(p, &[db, dc, db], &[da, dc, db], |t| {
        let mut out = Vector::new(p);
        for (r, rc) in column(&b.rho, t[0], &[da, db]) {
            for (prod, e) in b_alg.mul(r[1], t[2]) {
                out.add(vec![r[0], t[1], prod[0]], rc * e);
            }
        }
        out
    })
}

/// `b⊗(a⊗c) ↦ (b₋₁·a ⊗ c) ⊗ b₀` with `Z = A⊗C` flattened.
pub fn lambda_from_comodule_algebra(b: &ComoduleAlgebraData, c: &ComonoidData) -> FpMatrix {
    let p = b.over.modulus();
    let (da, db, dc) = (b.over.dim(), b.algebra.dim, c.dim);
    let a_alg = Alg { m: &b.over.monoid };
    let z = da * dc;
    matrix_of(p, &[db, z], &[z, db], |t| {
        let (a, cc) = (t[1] / dc, t[1] % dc);
        let mut out = Vector::new(p);
        for (r, rc) in column(&b.rho, t[0], &[da, db]) {
            for (prod, e) in a_alg.mul(r[0], a) {
                out.add(vec![prod[0] * dc + cc, r[1]], rc * e);
            }
        }
        out
    })
}

/// Antipode verdicts, named as in the library report.
pub fn antipode(a: &BimonoidData, s: &FpMatrix) -> Verdicts {
    let p = a.modulus();
    let d = a.dim();
    let alg = Alg { m: &a.monoid };
    let co = Coalg { c: &a.comonoid };
    let sv = |x: usize| column(s, x, &[d]);
    let mul2 = |xs: &[usize]| alg.mul(xs[0], xs[1]);
    let unit_counit = |x: usize| {
        let mut v = Vector::new(p);
        for (u, c) in alg.unit() {
            v.add(u, c * co.counit(x));
        }
        v
    };
    vec![
        (
            "m.(S⊗I).delta = e.eps".into(),
            holds(&[d], p, |t| {
                let v = vector_of(p, co.comul(t[0]))
                    .map_leg(0, sv)
                    .map_legs(0, 2, mul2);
                (v, unit_counit(t[0]))
            }),
        ),
        (
            "m.(I⊗S).delta = e.eps".into(),
            holds(&[d], p, |t| {
                let v = vector_of(p, co.comul(t[0]))
                    .map_leg(1, sv)
                    .map_legs(0, 2, mul2);
                (v, unit_counit(t[0]))
            }),
        ),
        (
            "S reverses products".into(),
            holds(&[d, d], p, |t| {
                let lhs = vector_of(p, alg.mul(t[0], t[1])).map_leg(0, sv);
                let rhs = Vector::basis(p, vec![t[1], t[0]])
                    .map_leg(0, sv)
                    .map_leg(1, sv)
                    .map_legs(0, 2, mul2);
                (lhs, rhs)
            }),
        ),
        (
            "S preserves the unit".into(),
            holds(&[], p, |_| {
                (
                    vector_of(p, alg.unit()).map_leg(0, sv),
                    vector_of(p, alg.unit()),
                )
            }),
        ),
        (
            "eps.S = eps".into(),
            holds(&[d], p, |t| {
                let lhs = vector_of(p, sv(t[0])).map_leg(0, |x| vec![(vec![], co.counit(x))]);
                (lhs, vector_of(p, vec![(vec![], co.counit(t[0]))]))
            }),
        ),
    ]
}

/// Plain triple-loop product.
pub fn naive_mul(a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
    assert_eq!(a.cols(), b.rows());
    let p = a.modulus() as u64;
    FpMatrix::from_fn(a.modulus(), a.rows(), b.cols(), |i, j| {
        ((0..a.cols())
            .map(|k| a.get(i, k) as u64 * b.get(k, j) as u64 % p)
            .sum::<u64>()
            % p) as i64
    })
}

/// Entrywise Kronecker product from the flattening rule.
pub fn naive_kron(a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
    let p = a.modulus() as u64;
    FpMatrix::from_fn(
        a.modulus(),
        a.rows() * b.rows(),
        a.cols() * b.cols(),
        |r, c| {
            let (i, k) = (r / b.rows(), r % b.rows());
            let (j, l) = (c / b.cols(), c % b.cols());
            (a.get(i, j) as u64 * b.get(k, l) as u64 % p) as i64
        },
    )
}
