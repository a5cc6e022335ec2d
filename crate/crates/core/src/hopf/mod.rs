//! Finite-dimensional Hopf algebras given by structure tensors.
//!
//! A [`HopfData`] is just the six maps. Nothing is verified on construction
//! beyond shapes; [`check_hopf`] evaluates every axiom as an exact matrix
//! identity and reports the first failing basis vector.

mod group;

use serde_json::{json, Value};
use thiserror::Error;

pub use group::{FiniteGroup, GroupError};

use crate::format::{self, FormatError};
use crate::linmap::LinMap;
use crate::report::CheckReport;
use crate::ring::{Rational, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{map} has shape {found_cod}x{found_dom}, expected {cod}x{dom}")]
pub struct ShapeError {
    pub map: &'static str,
    pub cod: usize,
    pub dom: usize,
    pub found_cod: usize,
    pub found_dom: usize,
}

pub(crate) fn expect_shape<R: Ring>(
    map: &'static str,
    f: &LinMap<R>,
    cod: usize,
    dom: usize,
) -> Result<(), ShapeError> {
    if f.cod_rank() == cod && f.dom_rank() == dom {
        Ok(())
    } else {
        Err(ShapeError {
            map,
            cod,
            dom,
            found_cod: f.cod_rank(),
            found_dom: f.dom_rank(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData<R: Ring> {
    labels: Vec<String>,
    pub mul: LinMap<R>,
    pub unit: LinMap<R>,
    pub comul: LinMap<R>,
    pub counit: LinMap<R>,
    pub antipode: LinMap<R>,
    pub antipode_inv: LinMap<R>,
}

impl<R: Ring> HopfData<R> {
    pub fn new(
        labels: Vec<String>,
        mul: LinMap<R>,
        unit: LinMap<R>,
        comul: LinMap<R>,
        counit: LinMap<R>,
        antipode: LinMap<R>,
        antipode_inv: LinMap<R>,
    ) -> Result<Self, ShapeError> {
        let n = labels.len();
        expect_shape("mul", &mul, n, n * n)?;
        expect_shape("unit", &unit, n, 1)?;
        expect_shape("comul", &comul, n * n, n)?;
        expect_shape("counit", &counit, 1, n)?;
        expect_shape("antipode", &antipode, n, n)?;
        expect_shape("antipode_inv", &antipode_inv, n, n)?;
        Ok(HopfData {
            labels,
            mul,
            unit,
            comul,
            counit,
            antipode,
            antipode_inv,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn id(&self) -> LinMap<R> {
        LinMap::identity(self.rank())
    }

    /// `μ₀ = η`, `μₙ = μ(μₙ₋₁ ⊗ H)`: `H^{⊗n} → H`.
    pub fn iterated_mul(&self, n: usize) -> LinMap<R> {
        match n {
            0 => self.unit.clone(),
            1 => self.id(),
            _ => self
                .iterated_mul(n - 1)
                .tensor(&self.id())
                .then(&self.mul)
                .expect("shapes checked on construction"),
        }
    }

    /// `Δ₀ = ε`, `Δₙ = (Δₙ₋₁ ⊗ H)Δ`: `H → H^{⊗n}`.
    pub fn iterated_comul(&self, n: usize) -> LinMap<R> {
        match n {
            0 => self.counit.clone(),
            1 => self.id(),
            _ => self
                .comul
                .then(&self.iterated_comul(n - 1).tensor(&self.id()))
                .expect("shapes checked on construction"),
        }
    }

    /// Reads the structure-constant JSON format.
    pub fn from_json(doc: &Value) -> Result<Self, FormatError> {
        format::expect_ring::<R>(doc)?;
        let n = format::usize_field(doc, "rank")?;
        let labels = format::labels(doc, n, "e")?;
        let mul = format::read_map(doc, "mul", 3, n, n * n, |t| (t[2], t[0] * n + t[1]))?;
        let unit = format::read_map(doc, "unit", 1, n, 1, |t| (t[0], 0))?;
        let comul = format::read_map(doc, "comul", 3, n * n, n, |t| (t[1] * n + t[2], t[0]))?;
        let counit = format::read_map(doc, "counit", 1, 1, n, |t| (0, t[0]))?;
        let antipode = format::read_map(doc, "antipode", 2, n, n, |t| (t[1], t[0]))?;
        let antipode_inv = format::read_map(doc, "antipode_inv", 2, n, n, |t| (t[1], t[0]))?;
        Self::new(labels, mul, unit, comul, counit, antipode, antipode_inv)
            .map_err(|e| FormatError::field("rank", e.to_string()))
    }

    pub fn to_json(&self) -> Value {
        let n = self.rank();
        json!({
            "ring": R::TAG.to_string(),
            "rank": n,
            "basis": self.labels,
            "mul": format::write_map(&self.mul, |k, c| vec![c / n, c % n, k]),
            "unit": format::write_map(&self.unit, |k, _| vec![k]),
            "comul": format::write_map(&self.comul, |r, i| vec![i, r / n, r % n]),
            "counit": format::write_map(&self.counit, |_, i| vec![i]),
            "antipode": format::write_map(&self.antipode, |j, i| vec![i, j]),
            "antipode_inv": format::write_map(&self.antipode_inv, |j, i| vec![i, j]),
        })
    }
}

/// The group Hopf algebra: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = S⁻¹(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup) -> HopfData<Rational> {
    let n = g.order();
    let mul_image: Vec<usize> = (0..n * n).map(|k| g.mul(k / n, k % n)).collect();
    let inv: Vec<usize> = (0..n).map(|a| g.inv(a)).collect();
    HopfData::new(
        g.labels().to_vec(),
        LinMap::from_basis_map(n, &mul_image),
        LinMap::from_basis_map(n, &[g.identity()]),
        LinMap::from_basis_map(n * n, &(0..n).map(|a| a * n + a).collect::<Vec<_>>()),
        LinMap::from_basis_map(1, &vec![0; n]),
        LinMap::from_basis_map(n, &inv),
        LinMap::from_basis_map(n, &inv),
    )
    .expect("group algebra shapes")
}

/// Every Hopf axiom, each as one exact matrix identity.
pub fn check_hopf<R: Ring>(h: &HopfData<R>) -> CheckReport {
    let n = h.rank();
    let id = h.id();
    let l = h.labels();
    let one = LinMap::<R>::identity(1);
    let mut r = CheckReport::new();
    let c = |a: &LinMap<R>, b: &LinMap<R>| a.compose(b).expect("shapes checked on construction");

    r.compare(
        "associativity",
        &c(&h.mul, &h.mul.tensor(&id)),
        &c(&h.mul, &id.tensor(&h.mul)),
        &[l, l, l],
    );
    r.compare("left unit", &c(&h.mul, &h.unit.tensor(&id)), &id, &[l]);
    r.compare("right unit", &c(&h.mul, &id.tensor(&h.unit)), &id, &[l]);
    r.compare(
        "coassociativity",
        &c(&h.comul.tensor(&id), &h.comul),
        &c(&id.tensor(&h.comul), &h.comul),
        &[l],
    );
    r.compare(
        "left counit",
        &c(&h.counit.tensor(&id), &h.comul),
        &id,
        &[l],
    );
    r.compare(
        "right counit",
        &c(&id.tensor(&h.counit), &h.comul),
        &id,
        &[l],
    );
    r.compare("counit of unit", &c(&h.counit, &h.unit), &one, &[]);
    r.compare(
        "counit multiplicative",
        &c(&h.counit, &h.mul),
        &h.counit.tensor(&h.counit),
        &[l, l],
    );
    r.compare(
        "comultiplication of unit",
        &c(&h.comul, &h.unit),
        &h.unit.tensor(&h.unit),
        &[],
    );
    let middle_swap = id.tensor(&LinMap::swap(n, n)).tensor(&id);
    r.compare(
        "comultiplication multiplicative",
        &c(&h.comul, &h.mul),
        &c(
            &h.mul.tensor(&h.mul),
            &c(&middle_swap, &h.comul.tensor(&h.comul)),
        ),
        &[l, l],
    );
    let eta_eps = c(&h.unit, &h.counit);
    r.compare(
        "antipode left",
        &c(&h.mul, &c(&h.antipode.tensor(&id), &h.comul)),
        &eta_eps,
        &[l],
    );
    r.compare(
        "antipode right",
        &c(&h.mul, &c(&id.tensor(&h.antipode), &h.comul)),
        &eta_eps,
        &[l],
    );
    r.compare(
        "antipode inverse left",
        &c(&h.antipode_inv, &h.antipode),
        &id,
        &[l],
    );
    r.compare(
        "antipode inverse right",
        &c(&h.antipode, &h.antipode_inv),
        &id,
        &[l],
    );
    r
}

/// Consequences of the axioms: `S` reverses products and coproducts and
/// fixes unit and counit.
pub fn check_derived_antipode_identities<R: Ring>(h: &HopfData<R>) -> CheckReport {
    let n = h.rank();
    let l = h.labels();
    let s = &h.antipode;
    let p = LinMap::swap(n, n);
    let c = |a: &LinMap<R>, b: &LinMap<R>| a.compose(b).expect("shapes checked on construction");
    let mut r = CheckReport::new();
    r.compare(
        "antipode antimultiplicative",
        &c(s, &h.mul),
        &c(&h.mul, &c(&s.tensor(s), &p)),
        &[l, l],
    );
    r.compare("counit of antipode", &c(&h.counit, s), &h.counit, &[l]);
    r.compare(
        "antipode anticomultiplicative",
        &c(&h.comul, s),
        &c(&p, &c(&s.tensor(s), &h.comul)),
        &[l],
    );
    r.compare("antipode of unit", &c(s, &h.unit), &h.unit, &[]);
    r
}
