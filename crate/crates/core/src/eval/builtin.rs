//! Built-in data: the two-dimensional module giving the Jones polynomial,
//! and adjoint modules of group algebras.

use std::sync::Arc;

use crate::hopf::{group_algebra, FiniteGroup, GroupError};
use crate::linmap::LinMap;
use crate::report::CheckReport;
use crate::ribbon::{dual_morphism, PivotalData, RibbonDatum, RibbonYDData};
use crate::ring::{LaurentHalf, Rational, Ring};
use crate::yd::{adjoint_yd, YdError};

pub const BUILTIN_NAMES: [&str; 4] = ["jones", "s3-transpositions", "s3-all", "z3-nontrivial"];

/// `c·v^{e/2}`.
fn vh(c: i64, half_exp: i64) -> LaurentHalf {
    LaurentHalf::monomial(Rational::from_i64(c), half_exp)
}

fn sum(parts: &[LaurentHalf]) -> LaurentHalf {
    parts.iter().fold(LaurentHalf::zero(), |acc, p| acc.add(p))
}

fn jones_labels() -> Vec<String> {
    vec!["v0".into(), "v1".into()]
}

/// `κ = diag(v⁻¹, v)`, the action of `K⁻¹`.
fn kappa() -> [LaurentHalf; 2] {
    [vh(1, -2), vh(1, 2)]
}

/// Rank-two datum over `ℚ[v^{±1/2}]`, basis `v0, v1`.
///
/// On `v0v0, v0v1, v1v0, v1v1` the braiding is
/// `ψ(v0⊗v0) = v^{1/2} v0⊗v0`,
/// `ψ(v0⊗v1) = v^{-1/2} v1⊗v0 + (v^{1/2} − v^{-3/2}) v0⊗v1`,
/// `ψ(v1⊗v0) = v^{-1/2} v0⊗v1`,
/// `ψ(v1⊗v1) = v^{1/2} v1⊗v1`.
/// The unstarred pairing is canonical; the starred one is twisted by `κ`:
/// `ev_{X*}(x ⊗ f) = f(κx)`, `coev_{X*} = Σ vⁱ ⊗ κ⁻¹vᵢ`.
pub fn jones_datum() -> RibbonDatum<LaurentHalf> {
    let braid = LinMap::from_entries(
        4,
        4,
        [
            (0, 0, vh(1, 1)),
            (2, 1, vh(1, -1)),
            (1, 1, sum(&[vh(1, 1), vh(-1, -3)])),
            (1, 2, vh(1, -1)),
            (3, 3, vh(1, 1)),
        ],
    )
    .expect("in range");
    let braid_inv = LinMap::from_entries(
        4,
        4,
        [
            (0, 0, vh(1, -1)),
            (2, 1, vh(1, 1)),
            (1, 2, vh(1, 1)),
            (2, 2, sum(&[vh(1, -1), vh(-1, 3)])),
            (3, 3, vh(1, -1)),
        ],
    )
    .expect("in range");
    let k = kappa();
    let canonical = PivotalData::<LaurentHalf>::canonical(jones_labels());
    let ev_xstar =
        LinMap::from_entries(1, 4, [(0, 0, k[0].clone()), (0, 3, k[1].clone())]).expect("in range");
    let coev_xstar = LinMap::from_entries(
        4,
        1,
        [
            (0, 0, k[0].unit_inverse().expect("monomial")),
            (3, 0, k[1].unit_inverse().expect("monomial")),
        ],
    )
    .expect("in range");
    let pivotal = PivotalData::new(
        jones_labels(),
        canonical.ev_x,
        canonical.coev_x,
        ev_xstar,
        coev_xstar,
    )
    .expect("shapes");
    RibbonDatum::new(pivotal, braid, braid_inv).expect("shapes")
}

fn diag(entries: [LaurentHalf; 2]) -> LinMap<LaurentHalf> {
    let [a, b] = entries;
    LinMap::from_entries(2, 2, [(0, 0, a), (1, 1, b)]).expect("in range")
}

/// Generator-level view of the Jones module as a Yetter–Drinfeld module over
/// the Borel part of the quantum group: `H v0 = v0`, `H v1 = -v1`,
/// `E v1 = v0`, `K = v^H`.
///
/// The coaction takes values in the span `C` of `K^{1/2}, K^{-1/2},
/// K^{-1/2}E`: `β(v0) = K^{1/2}⊗v0 + (v − v⁻¹)K^{-1/2}E⊗v1`,
/// `β(v1) = K^{-1/2}⊗v1`. The square of the antipode fixes `H` and `K^{±1/2}`
/// and sends `E` to `v⁻²E`.
pub struct JonesModule {
    pub h: LinMap<LaurentHalf>,
    pub e: LinMap<LaurentHalf>,
    pub k_half: LinMap<LaurentHalf>,
    pub k_half_inv: LinMap<LaurentHalf>,
    /// `V → C ⊗ V`
    pub coaction: LinMap<LaurentHalf>,
    /// `C ⊗ V → V`
    pub coefficient_action: LinMap<LaurentHalf>,
    /// `S²` restricted to `C`.
    pub s2_on_coefficients: LinMap<LaurentHalf>,
}

impl JonesModule {
    pub fn new() -> Self {
        let one = LaurentHalf::one();
        let h = diag([one.clone(), one.neg()]);
        let e = LinMap::from_entries(2, 2, [(0, 1, one.clone())]).expect("in range");
        let k_half = diag([vh(1, 1), vh(1, -1)]);
        let k_half_inv = diag([vh(1, -1), vh(1, 1)]);
        // C ⊗ V has index c·2 + i
        let coaction = LinMap::from_entries(
            6,
            2,
            [
                (0, 0, one.clone()),
                (2 * 2 + 1, 0, sum(&[vh(1, 2), vh(-1, -2)])),
                (2 + 1, 1, one.clone()),
            ],
        )
        .expect("in range");
        let k_inv_e = k_half_inv.compose(&e).expect("2x2");
        let blocks = [k_half.clone(), k_half_inv.clone(), k_inv_e];
        let coefficient_action = LinMap::from_entries(
            2,
            6,
            blocks.iter().enumerate().flat_map(|(c, m)| {
                m.entries()
                    .map(move |(i, j, x)| (i, c * 2 + j, x.clone()))
                    .collect::<Vec<_>>()
            }),
        )
        .expect("in range");
        let s2_on_coefficients =
            LinMap::from_entries(3, 3, [(0, 0, one.clone()), (1, 1, one), (2, 2, vh(1, -4))])
                .expect("in range");
        JonesModule {
            h,
            e,
            k_half,
            k_half_inv,
            coaction,
            coefficient_action,
            s2_on_coefficients,
        }
    }

    /// The braiding `x ⊗ y ↦ x₍₋₁₎·y ⊗ x₍₀₎` computed from the coaction.
    pub fn braiding(&self) -> LinMap<LaurentHalf> {
        let id = LinMap::identity(2);
        let steps = [
            self.coaction.tensor(&id),
            LinMap::identity(3).tensor(&LinMap::swap(2, 2)),
            self.coefficient_action.tensor(&id),
        ];
        steps[1..]
            .iter()
            .fold(steps[0].clone(), |acc, f| f.compose(&acc).expect("shapes"))
    }

    /// Twist compatibilities for a candidate curl `γ`, the braiding against
    /// `datum`, and relations of the dual module obtained by bending the
    /// action through the pairing with the antipode inserted.
    pub fn check(
        &self,
        gamma: &LinMap<LaurentHalf>,
        datum: &RibbonDatum<LaurentHalf>,
    ) -> CheckReport {
        let l = jones_labels();
        let dual_l: Vec<String> = l.iter().map(|s| format!("{s}*")).collect();
        let c = |a: &LinMap<LaurentHalf>, b: &LinMap<LaurentHalf>| a.compose(b).expect("2x2");
        let mut r = CheckReport::new();
        r.compare(
            "twist against H",
            &c(gamma, &self.h),
            &c(&self.h, gamma),
            &[&l],
        );
        r.compare(
            "twist against E",
            &c(gamma, &self.e),
            &c(&self.e, gamma).scale(&vh(1, -4)),
            &[&l],
        );
        r.compare(
            "twist against K^1/2",
            &c(gamma, &self.k_half),
            &c(&self.k_half, gamma),
            &[&l],
        );
        r.compare(
            "twist against coaction",
            &c(&self.coaction, gamma),
            &c(&self.s2_on_coefficients.tensor(gamma), &self.coaction),
            &[&l],
        );
        r.compare(
            "braiding from coaction",
            &self.braiding(),
            &datum.braid,
            &[&l, &l],
        );

        // S(H) = -H, S(E) = -K⁻¹E, S(K^{1/2}) = K^{-1/2}
        let p = &datum.pivotal;
        let bend = |m: &LinMap<LaurentHalf>| dual_morphism(m, p, p).expect("2x2");
        let minus = LaurentHalf::from_i64(-1);
        let k_inv = c(&self.k_half_inv, &self.k_half_inv);
        let h_dual = bend(&self.h.scale(&minus));
        let e_dual = bend(&c(&k_inv, &self.e).scale(&minus));
        let k_dual = bend(&self.k_half_inv);
        r.compare(
            "dual action [H,E] = 2E",
            &c(&h_dual, &e_dual)
                .add(&c(&e_dual, &h_dual).scale(&minus))
                .expect("2x2"),
            &e_dual.scale(&LaurentHalf::from_i64(2)),
            &[&dual_l],
        );
        r.compare(
            "dual action K^1/2 E = v E K^1/2",
            &c(&k_dual, &e_dual),
            &c(&e_dual, &k_dual).scale(&vh(1, 2)),
            &[&dual_l],
        );
        r
    }
}

impl Default for JonesModule {
    fn default() -> Self {
        Self::new()
    }
}

/// The adjoint module `k[S]` of `k[G]` with canonical pairings.
pub fn group_ribbon_yd(
    group: &FiniteGroup,
    class: &str,
) -> Result<RibbonYDData<Rational>, YdError> {
    let subset = group.named_class(class)?;
    let hopf = Arc::new(group_algebra(group));
    let yd = adjoint_yd(group, hopf, &subset)?;
    let pivotal = PivotalData::canonical(yd.labels().to_vec());
    Ok(RibbonYDData::new(yd, pivotal).expect("same rank"))
}

pub fn group_datum(group: &FiniteGroup, class: &str) -> Result<RibbonDatum<Rational>, YdError> {
    Ok(group_ribbon_yd(group, class)?.datum())
}

/// A named built-in.
#[derive(Clone, Debug)]
pub enum Builtin {
    Jones(RibbonDatum<LaurentHalf>),
    Group(RibbonYDData<Rational>),
}

#[derive(Debug, thiserror::Error)]
pub enum BuiltinError {
    #[error("unknown built-in `{0}` (known: jones, s3-transpositions, s3-all, z3-nontrivial, or <group>-<class>)")]
    Unknown(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Yd(#[from] YdError),
}

/// `jones`, or `<group>-<class>` such as `s3-transpositions`.
pub fn builtin(name: &str) -> Result<Builtin, BuiltinError> {
    if name == "jones" {
        return Ok(Builtin::Jones(jones_datum()));
    }
    let (group, class) = name
        .split_once('-')
        .ok_or_else(|| BuiltinError::Unknown(name.to_string()))?;
    let g = FiniteGroup::by_name(group)?;
    Ok(Builtin::Group(group_ribbon_yd(&g, class)?))
}
