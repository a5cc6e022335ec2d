//! Duality data, curls, and certification of ribbon objects.
//!
//! [`PivotalData`] carries both pairings of an object `X` with its dual.
//! [`RibbonDatum`] adds a braiding on `X ⊗ X`, and [`certify_ribbon`]
//! checks everything the tangle functor relies on. [`RibbonYDData`] builds
//! such a datum from a Yetter–Drinfeld module.

mod datum;
mod ydribbon;

use serde_json::{json, Value};
use thiserror::Error;

pub use datum::{certify_ribbon, CrossingTable, RibbonDatum};
pub use ydribbon::RibbonYDData;

use crate::format::{self, FormatError};
use crate::hopf::{expect_shape, ShapeError};
use crate::linmap::LinMap;
use crate::report::CheckReport;
use crate::ring::Ring;
use crate::yd::YdError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RibbonError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Yd(#[from] YdError),
    #[error("precondition failed:\n{0}")]
    Precondition(CheckReport),
    #[error("the curl is not a scalar multiple of the identity")]
    TwistNotScalar,
}

/// Composite of maps listed in the order they are applied.
pub(crate) fn seq<R: Ring>(maps: &[LinMap<R>]) -> LinMap<R> {
    let (first, rest) = maps.split_first().expect("at least one map");
    rest.iter().fold(first.clone(), |acc, f| {
        acc.then(f).expect("composable by construction")
    })
}

pub(crate) fn tensor<R: Ring>(maps: &[&LinMap<R>]) -> LinMap<R> {
    LinMap::tensor_all(maps.iter().copied())
}

/// An object `X`, its dual `X*`, and two dualities between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotalData<R: Ring> {
    labels: Vec<String>,
    dual_labels: Vec<String>,
    /// `X* ⊗ X → I`
    pub ev_x: LinMap<R>,
    /// `I → X ⊗ X*`
    pub coev_x: LinMap<R>,
    /// `X ⊗ X* → I`
    pub ev_xstar: LinMap<R>,
    /// `I → X* ⊗ X`
    pub coev_xstar: LinMap<R>,
}

impl<R: Ring> PivotalData<R> {
    pub fn new(
        labels: Vec<String>,
        ev_x: LinMap<R>,
        coev_x: LinMap<R>,
        ev_xstar: LinMap<R>,
        coev_xstar: LinMap<R>,
    ) -> Result<Self, ShapeError> {
        let dual_labels = labels.iter().map(|l| format!("{l}*")).collect();
        Self::with_dual_labels(labels, dual_labels, ev_x, coev_x, ev_xstar, coev_xstar)
    }

    fn with_dual_labels(
        labels: Vec<String>,
        dual_labels: Vec<String>,
        ev_x: LinMap<R>,
        coev_x: LinMap<R>,
        ev_xstar: LinMap<R>,
        coev_xstar: LinMap<R>,
    ) -> Result<Self, ShapeError> {
        let n = labels.len();
        expect_shape("ev_x", &ev_x, 1, n * n)?;
        expect_shape("coev_x", &coev_x, n * n, 1)?;
        expect_shape("ev_xstar", &ev_xstar, 1, n * n)?;
        expect_shape("coev_xstar", &coev_xstar, n * n, 1)?;
        Ok(PivotalData {
            labels,
            dual_labels,
            ev_x,
            coev_x,
            ev_xstar,
            coev_xstar,
        })
    }

    /// Both pairings are the standard one, `f ⊗ x ↦ f(x)`.
    pub fn canonical(labels: Vec<String>) -> Self {
        let n = labels.len();
        let ev = LinMap::from_entries(1, n * n, (0..n).map(|i| (0, i * n + i, R::one())))
            .expect("in range");
        let coev = ev.transpose();
        Self::new(labels, ev.clone(), coev.clone(), ev, coev).expect("canonical shapes")
    }

    /// The unit object: rank one, every map the identity.
    pub fn unit() -> Self {
        let one = LinMap::identity(1);
        Self::new(vec!["1".into()], one.clone(), one.clone(), one.clone(), one)
            .expect("unit shapes")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dual_labels(&self) -> &[String] {
        &self.dual_labels
    }

    /// The same data seen from `X*`, whose dual is `X`: the two dualities
    /// trade places.
    pub fn dual(&self) -> Self {
        Self::with_dual_labels(
            self.dual_labels.clone(),
            self.labels.clone(),
            self.ev_xstar.clone(),
            self.coev_xstar.clone(),
            self.ev_x.clone(),
            self.coev_x.clone(),
        )
        .expect("same shapes")
    }

    /// `X ⊗ Y` with dual `Y* ⊗ X*`.
    pub fn tensor(&self, other: &PivotalData<R>) -> Self {
        let (x, y) = (self, other);
        let (n, m) = (x.rank(), y.rank());
        let (idx, idy) = (LinMap::identity(n), LinMap::identity(m));
        let ev_x = y.ev_x.compose(&tensor(&[&idy, &x.ev_x, &idy])).expect("ev");
        let coev_x = tensor(&[&idx, &y.coev_x, &idx])
            .compose(&x.coev_x)
            .expect("coev");
        let ev_xstar = x
            .ev_xstar
            .compose(&tensor(&[&idx, &y.ev_xstar, &idx]))
            .expect("ev*");
        let coev_xstar = tensor(&[&idy, &x.coev_xstar, &idy])
            .compose(&y.coev_xstar)
            .expect("coev*");
        let labels = pair_labels(&x.labels, &y.labels);
        let dual_labels = pair_labels(&y.dual_labels, &x.dual_labels);
        Self::with_dual_labels(labels, dual_labels, ev_x, coev_x, ev_xstar, coev_xstar)
            .expect("tensor shapes")
    }

    /// The four zig-zag identities.
    pub fn check_snakes(&self) -> CheckReport {
        let n = self.rank();
        let id = LinMap::<R>::identity(n);
        let (l, ld) = (self.labels.as_slice(), self.dual_labels.as_slice());
        let mut r = CheckReport::new();
        r.compare(
            "snake ev_X/coev_X on X",
            &seq(&[self.coev_x.tensor(&id), id.tensor(&self.ev_x)]),
            &id,
            &[l],
        );
        r.compare(
            "snake ev_X/coev_X on X*",
            &seq(&[id.tensor(&self.coev_x), self.ev_x.tensor(&id)]),
            &id,
            &[ld],
        );
        r.compare(
            "snake ev_X*/coev_X* on X*",
            &seq(&[self.coev_xstar.tensor(&id), id.tensor(&self.ev_xstar)]),
            &id,
            &[ld],
        );
        r.compare(
            "snake ev_X*/coev_X* on X",
            &seq(&[id.tensor(&self.coev_xstar), self.ev_xstar.tensor(&id)]),
            &id,
            &[l],
        );
        r
    }

    /// `(X ⊗ ev_{X*})(φ ⊗ X*)(X ⊗ coev_X)` for `φ: X ⊗ X → X ⊗ X`.
    pub fn right_curl_of(&self, phi: &LinMap<R>) -> LinMap<R> {
        let id = LinMap::identity(self.rank());
        seq(&[
            id.tensor(&self.coev_x),
            phi.tensor(&id),
            id.tensor(&self.ev_xstar),
        ])
    }

    /// `(ev_X ⊗ X)(X* ⊗ φ)(coev_{X*} ⊗ X)`.
    pub fn left_curl_of(&self, phi: &LinMap<R>) -> LinMap<R> {
        let id = LinMap::identity(self.rank());
        seq(&[
            self.coev_xstar.tensor(&id),
            id.tensor(phi),
            self.ev_x.tensor(&id),
        ])
    }

    /// The right curl taken with the plain swap instead of a braiding.
    pub fn gamma(&self) -> LinMap<R> {
        let n = self.rank();
        self.right_curl_of(&LinMap::swap(n, n))
    }

    /// The mirror composite, inverse to [`gamma`](Self::gamma).
    pub fn gamma_inv(&self) -> LinMap<R> {
        let n = self.rank();
        self.left_curl_of(&LinMap::swap(n, n))
    }

    /// Sparse `[[row, col, c]]` lists for the four maps.
    pub fn from_json(doc: &Value) -> Result<Self, FormatError> {
        format::expect_ring::<R>(doc)?;
        let n = format::usize_field(doc, "rank")?;
        let labels = format::labels(doc, n, "x")?;
        Self::new(
            labels,
            format::read_plain(doc, "ev_x", 1, n * n)?,
            format::read_plain(doc, "coev_x", n * n, 1)?,
            format::read_plain(doc, "ev_xstar", 1, n * n)?,
            format::read_plain(doc, "coev_xstar", n * n, 1)?,
        )
        .map_err(|e| FormatError::field("rank", e.to_string()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": R::TAG.to_string(),
            "rank": self.rank(),
            "basis": self.labels,
            "ev_x": format::write_plain(&self.ev_x),
            "coev_x": format::write_plain(&self.coev_x),
            "ev_xstar": format::write_plain(&self.ev_xstar),
            "coev_xstar": format::write_plain(&self.coev_xstar),
        })
    }
}

fn pair_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}")))
        .collect()
}

/// `f*: Y* → X*`, bending `f` with `coev_X` and `ev_Y`.
pub fn dual_morphism<R: Ring>(
    f: &LinMap<R>,
    px: &PivotalData<R>,
    py: &PivotalData<R>,
) -> Result<LinMap<R>, ShapeError> {
    let (n, m) = (px.rank(), py.rank());
    expect_shape("morphism", f, m, n)?;
    let (idx, idy) = (LinMap::identity(n), LinMap::identity(m));
    Ok(seq(&[
        idy.tensor(&px.coev_x),
        tensor(&[&idy, f, &idx]),
        py.ev_x.tensor(&idx),
    ]))
}

/// `f** = (f*)*`, the second dual taken with the other pair of dualities.
pub fn double_dual<R: Ring>(
    f: &LinMap<R>,
    px: &PivotalData<R>,
    py: &PivotalData<R>,
) -> Result<LinMap<R>, ShapeError> {
    let once = dual_morphism(f, px, py)?;
    dual_morphism(&once, &py.dual(), &px.dual())
}
