use serde_json::Value;

use super::{dual_morphism, seq, tensor, PivotalData, RibbonError};
use crate::format::{self, FormatError};
use crate::hopf::{expect_shape, ShapeError};
use crate::linmap::LinMap;
use crate::report::CheckReport;
use crate::ring::Ring;
use crate::tangle::{Crossing, Orient};

/// One object of a strict ribbon category, as matrices: enough to evaluate
/// any tangle whose strands are all coloured by `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonDatum<R: Ring> {
    pub pivotal: PivotalData<R>,
    /// `ψ: X ⊗ X → X ⊗ X`
    pub braid: LinMap<R>,
    pub braid_inv: LinMap<R>,
}

impl<R: Ring> RibbonDatum<R> {
    pub fn new(
        pivotal: PivotalData<R>,
        braid: LinMap<R>,
        braid_inv: LinMap<R>,
    ) -> Result<Self, ShapeError> {
        let n = pivotal.rank();
        expect_shape("braid", &braid, n * n, n * n)?;
        expect_shape("braid_inv", &braid_inv, n * n, n * n)?;
        Ok(RibbonDatum {
            pivotal,
            braid,
            braid_inv,
        })
    }

    /// Canonical pairings and the plain swap.
    pub fn symmetric(labels: Vec<String>) -> Self {
        let n = labels.len();
        let p = LinMap::swap(n, n);
        Self::new(PivotalData::canonical(labels), p.clone(), p).expect("shapes")
    }

    /// The monoidal unit.
    pub fn unit() -> Self {
        let one = LinMap::identity(1);
        Self::new(PivotalData::unit(), one.clone(), one).expect("shapes")
    }

    pub fn rank(&self) -> usize {
        self.pivotal.rank()
    }

    pub fn right_curl(&self) -> LinMap<R> {
        self.pivotal.right_curl_of(&self.braid)
    }

    pub fn left_curl(&self) -> LinMap<R> {
        self.pivotal.left_curl_of(&self.braid)
    }

    /// The scalar `t` with `c^R = t·id`.
    pub fn twist(&self) -> Result<R, RibbonError> {
        self.right_curl()
            .as_scalar_multiple()
            .ok_or(RibbonError::TwistNotScalar)
    }

    pub fn crossings(&self) -> CrossingTable<R> {
        CrossingTable::derive(self)
    }

    /// The datum on `X*`: its braiding is the crossing of two upward strands,
    /// and the two dualities trade places.
    pub fn dual(&self) -> Self {
        let t = self.crossings();
        let up = |positive| Crossing {
            positive,
            left: Orient::Minus,
            right: Orient::Minus,
        };
        Self::new(
            self.pivotal.dual(),
            t.get(up(true)).clone(),
            t.get(up(false)).clone(),
        )
        .expect("shapes")
    }

    /// `X ⊗ X`, braided by the hexagon composite
    /// `(X ⊗ ψ ⊗ X)(ψ ⊗ ψ)(X ⊗ ψ ⊗ X)`.
    pub fn tensor_square(&self) -> Self {
        let id = LinMap::identity(self.rank());
        let hexagon = |b: &LinMap<R>| {
            let middle = tensor(&[&id, b, &id]);
            seq(&[middle.clone(), b.tensor(b), middle])
        };
        Self::new(
            self.pivotal.tensor(&self.pivotal),
            hexagon(&self.braid),
            hexagon(&self.braid_inv),
        )
        .expect("shapes")
    }

    /// The pivotal fields plus `"braid"` and `"braid_inv"`.
    pub fn from_json(doc: &Value) -> Result<Self, FormatError> {
        let pivotal = PivotalData::from_json(doc)?;
        let n = pivotal.rank();
        Self::new(
            pivotal,
            format::read_plain(doc, "braid", n * n, n * n)?,
            format::read_plain(doc, "braid_inv", n * n, n * n)?,
        )
        .map_err(|e| FormatError::field("braid", e.to_string()))
    }

    pub fn to_json(&self) -> Value {
        let mut doc = self.pivotal.to_json();
        doc["braid"] = format::write_plain(&self.braid);
        doc["braid_inv"] = format::write_plain(&self.braid_inv);
        doc
    }
}

/// The eight crossings between strands of either orientation.
///
/// Crossings of two downward strands are `ψ` and `ψ⁻¹`. The others are
/// rotations of these through the dualities: the left leg for `-+`, the right
/// leg for `+-`, and both for `--`. Each is filed under its oriented
/// crossing sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingTable<R: Ring> {
    maps: Vec<LinMap<R>>,
}

fn slot(c: Crossing) -> usize {
    usize::from(c.positive) * 4
        + usize::from(c.left == Orient::Minus) * 2
        + usize::from(c.right == Orient::Minus)
}

impl<R: Ring> CrossingTable<R> {
    pub fn derive(d: &RibbonDatum<R>) -> Self {
        let p = &d.pivotal;
        let id = LinMap::identity(d.rank());
        // X* ⊗ X → X ⊗ X* (and X* ⊗ X* → X* ⊗ X* for a mixed φ)
        let rotate_left = |phi: &LinMap<R>| {
            seq(&[
                tensor(&[&id, &id, &p.coev_x]),
                tensor(&[&id, phi, &id]),
                tensor(&[&p.ev_x, &id, &id]),
            ])
        };
        // X ⊗ X* → X* ⊗ X
        let rotate_right = |phi: &LinMap<R>| {
            seq(&[
                tensor(&[&p.coev_xstar, &id, &id]),
                tensor(&[&id, phi, &id]),
                tensor(&[&id, &id, &p.ev_xstar]),
            ])
        };
        let x_mp = rotate_left(&d.braid);
        let xi_mp = rotate_left(&d.braid_inv);
        let x_pm = rotate_right(&d.braid);
        let xi_pm = rotate_right(&d.braid_inv);
        // the same rotation applied to a `-+` crossing turns its other leg
        let x_mm = rotate_left(&x_mp);
        let xi_mm = rotate_left(&xi_mp);
        let mut maps = vec![LinMap::zero(0, 0); 8];
        let mut put = |positive, left, right, m: LinMap<R>| {
            maps[slot(Crossing {
                positive,
                left,
                right,
            })] = m;
        };
        use Orient::{Minus, Plus};
        put(true, Plus, Plus, d.braid.clone());
        put(false, Plus, Plus, d.braid_inv.clone());
        put(true, Minus, Plus, x_mp);
        put(false, Minus, Plus, xi_mp);
        put(true, Plus, Minus, x_pm);
        put(false, Plus, Minus, xi_pm);
        put(true, Minus, Minus, x_mm);
        put(false, Minus, Minus, xi_mm);
        CrossingTable { maps }
    }

    pub fn get(&self, c: Crossing) -> &LinMap<R> {
        &self.maps[slot(c)]
    }
}

const ORIENTS: [Orient; 2] = [Orient::Plus, Orient::Minus];

/// Everything the tangle functor needs, as exact matrix identities.
pub fn certify_ribbon<R: Ring>(d: &RibbonDatum<R>) -> CheckReport {
    let p = &d.pivotal;
    let n = d.rank();
    let id = LinMap::<R>::identity(n);
    let id2 = LinMap::<R>::identity(n * n);
    let (l, ld) = (p.labels(), p.dual_labels());
    let labels = |o: Orient| match o {
        Orient::Plus => l,
        Orient::Minus => ld,
    };
    let mut r = p.check_snakes();

    r.compare(
        "braiding inverse left",
        &seq(&[d.braid.clone(), d.braid_inv.clone()]),
        &id2,
        &[l, l],
    );
    r.compare(
        "braiding inverse right",
        &seq(&[d.braid_inv.clone(), d.braid.clone()]),
        &id2,
        &[l, l],
    );
    let (a, b) = (d.braid.tensor(&id), id.tensor(&d.braid));
    r.compare(
        "yang-baxter",
        &seq(&[a.clone(), b.clone(), a.clone()]),
        &seq(&[b.clone(), a, b]),
        &[l, l, l],
    );
    let (cr, cl) = (d.right_curl(), d.left_curl());
    r.compare("ribbon condition", &cr, &cl, &[l]);

    let t = d.crossings();
    let cross = |positive, left, right| {
        t.get(Crossing {
            positive,
            left,
            right,
        })
    };
    for &x in &ORIENTS {
        for &y in &ORIENTS {
            for first in [true, false] {
                let (f, g) = (cross(first, x, y), cross(!first, y, x));
                let name = format!(
                    "reidemeister II ({} then {})",
                    tag(first, x, y),
                    tag(!first, y, x)
                );
                r.compare(
                    name,
                    &seq(&[f.clone(), g.clone()]),
                    &id2,
                    &[labels(x), labels(y)],
                );
            }
        }
    }

    // A strand passes a cap or cup from left to right, over it (the
    // geometry of ψ) or under it (the mirror geometry).
    let caps = [
        ("cap_l", [Orient::Minus, Orient::Plus], &p.ev_x),
        ("cap_r", [Orient::Plus, Orient::Minus], &p.ev_xstar),
    ];
    let cups = [
        ("cup_l", [Orient::Plus, Orient::Minus], &p.coev_x),
        ("cup_r", [Orient::Minus, Orient::Plus], &p.coev_xstar),
    ];
    for &y in &ORIENTS {
        for over in [true, false] {
            let side = if over { "over" } else { "under" };
            let pass = |a: Orient| cross((a == y) == over, y, a).clone();
            for (name, [a, b], cap) in &caps {
                let lhs = seq(&[pass(*a).tensor(&id), id.tensor(&pass(*b)), cap.tensor(&id)]);
                r.compare(
                    format!("slide {} {side} {name}", y.symbol()),
                    &lhs,
                    &id.tensor(cap),
                    &[labels(y), labels(*a), labels(*b)],
                );
            }
            for (name, [a, b], cup) in &cups {
                let lhs = seq(&[id.tensor(cup), pass(*a).tensor(&id), id.tensor(&pass(*b))]);
                r.compare(
                    format!("slide {} {side} {name}", y.symbol()),
                    &lhs,
                    &cup.tensor(&id),
                    &[labels(y)],
                );
            }
        }
    }

    r.compare(
        "negative right curl inverts positive",
        &seq(&[cr.clone(), p.right_curl_of(&d.braid_inv)]),
        &id,
        &[l],
    );
    r.compare(
        "negative left curl inverts positive",
        &seq(&[cl, p.left_curl_of(&d.braid_inv)]),
        &id,
        &[l],
    );
    let dual = d.dual();
    let dual_cr = dual.right_curl();
    r.compare("ribbon condition on X*", &dual_cr, &dual.left_curl(), &[ld]);
    let twist_dual = dual_morphism(&cr, p, p).expect("endomorphism of X");
    r.compare(
        "twist on X* is the dual twist",
        &dual_cr,
        &twist_dual,
        &[ld],
    );
    r
}

fn tag(positive: bool, a: Orient, b: Orient) -> String {
    format!(
        "{}{}{}",
        if positive { "x" } else { "xi" },
        a.symbol(),
        b.symbol()
    )
}
