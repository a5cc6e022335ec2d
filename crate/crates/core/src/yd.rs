//! Left–left Yetter–Drinfeld modules over a [`HopfData`].
//!
//! Every identity is assembled as a composite of structure maps, swaps and
//! factor permutations, the same way it is drawn, and compared as a matrix.

use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::format::{self, FormatError};
use crate::hopf::{expect_shape, FiniteGroup, GroupError, HopfData, ShapeError};
use crate::linmap::LinMap;
use crate::report::CheckReport;
use crate::ring::{Rational, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YdError {
    #[error("the two modules live over different Hopf algebras")]
    HopfMismatch,
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDData<R: Ring> {
    hopf: Arc<HopfData<R>>,
    labels: Vec<String>,
    /// `α: H ⊗ X → X`
    pub action: LinMap<R>,
    /// `β: X → H ⊗ X`
    pub coaction: LinMap<R>,
}

fn c<R: Ring>(g: &LinMap<R>, f: &LinMap<R>) -> LinMap<R> {
    g.compose(f).expect("shapes checked on construction")
}

impl<R: Ring> YDData<R> {
    pub fn new(
        hopf: Arc<HopfData<R>>,
        labels: Vec<String>,
        action: LinMap<R>,
        coaction: LinMap<R>,
    ) -> Result<Self, ShapeError> {
        let (n, m) = (hopf.rank(), labels.len());
        expect_shape("action", &action, m, n * m)?;
        expect_shape("coaction", &coaction, n * m, m)?;
        Ok(YDData {
            hopf,
            labels,
            action,
            coaction,
        })
    }

    /// The monoidal unit `(I, ε, η)`.
    pub fn unit(hopf: Arc<HopfData<R>>) -> Self {
        let (counit, unit) = (hopf.counit.clone(), hopf.unit.clone());
        Self::new(hopf, vec!["1".into()], counit, unit).expect("unit shapes")
    }

    pub fn hopf(&self) -> &Arc<HopfData<R>> {
        &self.hopf
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `action: [[i, j, k, c]]` means `α(e_i ⊗ x_j) ∋ c·x_k`;
    /// `coaction: [[j, i, k, c]]` means `β(x_j) ∋ c·e_i ⊗ x_k`.
    pub fn from_json(doc: &Value, hopf: Arc<HopfData<R>>) -> Result<Self, FormatError> {
        format::expect_ring::<R>(doc)?;
        let m = format::usize_field(doc, "rank")?;
        let n = hopf.rank();
        let labels = format::labels(doc, m, "x")?;
        let action = format::read_map(doc, "action", 3, m, n * m, |t| (t[2], t[0] * m + t[1]))?;
        let coaction = format::read_map(doc, "coaction", 3, n * m, m, |t| (t[1] * m + t[2], t[0]))?;
        Self::new(hopf, labels, action, coaction)
            .map_err(|e| FormatError::field("rank", e.to_string()))
    }

    /// Reads a module file together with the Hopf file it names, resolved
    /// relative to the module file.
    pub fn load(path: &Path) -> Result<Self, FormatError> {
        let doc = format::read_json(path)?;
        let hopf_name = doc
            .get("hopf")
            .and_then(Value::as_str)
            .ok_or(FormatError::Missing("hopf"))?;
        let hopf_path = path.parent().unwrap_or(Path::new(".")).join(hopf_name);
        let hopf = HopfData::from_json(&format::read_json(&hopf_path)?)?;
        Self::from_json(&doc, Arc::new(hopf))
    }

    /// Serializes the module; `hopf_file` is written as the `"hopf"` field.
    pub fn to_json(&self, hopf_file: &str) -> Value {
        let m = self.rank();
        json!({
            "ring": R::TAG.to_string(),
            "hopf": hopf_file,
            "rank": m,
            "basis": self.labels,
            "action": format::write_map(&self.action, |k, col| vec![col / m, col % m, k]),
            "coaction": format::write_map(&self.coaction, |row, j| vec![j, row / m, row % m]),
        })
    }

    fn same_hopf(&self, other: &YDData<R>) -> Result<(), YdError> {
        if Arc::ptr_eq(&self.hopf, &other.hopf) || self.hopf == other.hopf {
            Ok(())
        } else {
            Err(YdError::HopfMismatch)
        }
    }
}

/// Module axioms, comodule axioms, and the compatibility between them.
pub fn check_yd<R: Ring>(x: &YDData<R>) -> CheckReport {
    let h = &*x.hopf;
    let (n, m) = (h.rank(), x.rank());
    let (idh, idx) = (LinMap::<R>::identity(n), LinMap::<R>::identity(m));
    let (hl, xl) = (h.labels(), x.labels());
    let (alpha, beta) = (&x.action, &x.coaction);
    let mut r = CheckReport::new();

    r.compare(
        "module associativity",
        &c(alpha, &h.mul.tensor(&idx)),
        &c(alpha, &idh.tensor(alpha)),
        &[hl, hl, xl],
    );
    r.compare("module unit", &c(alpha, &h.unit.tensor(&idx)), &idx, &[xl]);
    r.compare(
        "comodule coassociativity",
        &c(&h.comul.tensor(&idx), beta),
        &c(&idh.tensor(beta), beta),
        &[xl],
    );
    r.compare(
        "comodule counit",
        &c(&h.counit.tensor(&idx), beta),
        &idx,
        &[xl],
    );

    // h ⊗ x ↦ h₁ x₍₋₁₎ S(h₃) ⊗ h₂·x₍₀₎
    let spread = h.iterated_comul(3).tensor(beta);
    let reorder = LinMap::permute_factors(&[n, n, n, n, m], &[0, 3, 2, 1, 4]);
    let antipode_third = LinMap::tensor_all(&[
        idh.clone(),
        idh.clone(),
        h.antipode.clone(),
        idh.clone(),
        idx.clone(),
    ]);
    let multiply = h.iterated_mul(3).tensor(&idh).tensor(&idx);
    let act = idh.tensor(alpha);
    let rhs = [reorder, antipode_third, multiply, act]
        .iter()
        .fold(spread, |acc, f| c(f, &acc));
    r.compare("compatibility", &c(beta, alpha), &rhs, &[hl, xl]);
    r
}

/// The adjoint module `k[S] ⊆ k[G]`: `α(g ⊗ s) = gsg⁻¹`, `β(s) = s ⊗ s`.
///
/// `subset` must be closed under conjugation.
pub fn adjoint_yd(
    group: &FiniteGroup,
    hopf: Arc<HopfData<Rational>>,
    subset: &[usize],
) -> Result<YDData<Rational>, YdError> {
    if !group.is_conjugation_closed(subset) {
        return Err(GroupError::NotConjugationClosed.into());
    }
    let (n, m) = (group.order(), subset.len());
    let pos = |s: usize| subset.iter().position(|&t| t == s).expect("closed");
    let action: Vec<usize> = (0..n * m)
        .map(|k| pos(group.conjugate(k / m, subset[k % m])))
        .collect();
    let coaction: Vec<usize> = (0..m).map(|j| subset[j] * m + j).collect();
    let labels = subset.iter().map(|&s| group.labels()[s].clone()).collect();
    Ok(YDData::new(
        hopf,
        labels,
        LinMap::from_basis_map(m, &action),
        LinMap::from_basis_map(n * m, &coaction),
    )?)
}

/// `X ⊗ X'` with `α'' = (α ⊗ α')(H ⊗ P ⊗ X')(Δ ⊗ X ⊗ X')` and
/// `β'' = (μ ⊗ X ⊗ X')(H ⊗ P ⊗ X')(β ⊗ β')`.
pub fn yd_tensor<R: Ring>(x: &YDData<R>, y: &YDData<R>) -> Result<YDData<R>, YdError> {
    x.same_hopf(y)?;
    let h = &*x.hopf;
    let (n, m1, m2) = (h.rank(), x.rank(), y.rank());
    let (idh, id1, id2) = (
        LinMap::<R>::identity(n),
        LinMap::<R>::identity(m1),
        LinMap::<R>::identity(m2),
    );
    let action = c(
        &x.action.tensor(&y.action),
        &c(
            &LinMap::tensor_all(&[idh.clone(), LinMap::swap(n, m1), id2.clone()]),
            &h.comul.tensor(&id1).tensor(&id2),
        ),
    );
    let coaction = c(
        &h.mul.tensor(&id1).tensor(&id2),
        &c(
            &LinMap::tensor_all(&[idh, LinMap::swap(m1, n), id2]),
            &x.coaction.tensor(&y.coaction),
        ),
    );
    let labels = x
        .labels
        .iter()
        .flat_map(|a| y.labels.iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    Ok(YDData::new(x.hopf.clone(), labels, action, coaction)?)
}

/// `(ψ, ψ⁻¹)` with `ψ(x ⊗ y) = x₍₋₁₎·y ⊗ x₍₀₎` and
/// `ψ⁻¹(y ⊗ x) = x₍₀₎ ⊗ S⁻¹(x₍₋₁₎)·y`.
pub fn yd_braiding<R: Ring>(
    x: &YDData<R>,
    y: &YDData<R>,
) -> Result<(LinMap<R>, LinMap<R>), YdError> {
    x.same_hopf(y)?;
    let h = &*x.hopf;
    let (n, mx, my) = (h.rank(), x.rank(), y.rank());
    let (idh, idx, idy) = (
        LinMap::<R>::identity(n),
        LinMap::<R>::identity(mx),
        LinMap::<R>::identity(my),
    );
    let psi = c(
        &y.action.tensor(&idx),
        &c(&idh.tensor(&LinMap::swap(mx, my)), &x.coaction.tensor(&idy)),
    );
    let psi_inv = [
        LinMap::permute_factors(&[my, n, mx], &[2, 1, 0]),
        LinMap::tensor_all(&[idx.clone(), h.antipode_inv.clone(), idy.clone()]),
        idx.tensor(&y.action),
    ]
    .iter()
    .fold(idy.tensor(&x.coaction), |acc, f| c(f, &acc));
    Ok((psi, psi_inv))
}

/// `f: X → Y` commutes with actions and coactions.
pub fn check_yd_morphism<R: Ring>(
    f: &LinMap<R>,
    x: &YDData<R>,
    y: &YDData<R>,
) -> Result<CheckReport, YdError> {
    x.same_hopf(y)?;
    expect_shape("morphism", f, y.rank(), x.rank())?;
    let h = &*x.hopf;
    let idh = LinMap::<R>::identity(h.rank());
    let mut r = CheckReport::new();
    r.compare(
        "module morphism",
        &c(f, &x.action),
        &c(&y.action, &idh.tensor(f)),
        &[h.labels(), x.labels()],
    );
    r.compare(
        "comodule morphism",
        &c(&y.coaction, f),
        &c(&idh.tensor(f), &x.coaction),
        &[x.labels()],
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::group_algebra;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn s3() -> (FiniteGroup, Arc<HopfData<Rational>>) {
        let g = FiniteGroup::symmetric(3);
        let h = Arc::new(group_algebra(&g));
        (g, h)
    }

    fn transpositions() -> YDData<Rational> {
        let (g, h) = s3();
        let s = g.named_class("transpositions").unwrap();
        adjoint_yd(&g, h, &s).unwrap()
    }

    #[test]
    fn adjoint_modules_pass() {
        let (g, h) = s3();
        for class in ["transpositions", "all", "identity", "nontrivial"] {
            let s = g.named_class(class).unwrap();
            let x = adjoint_yd(&g, h.clone(), &s).unwrap();
            assert!(check_yd(&x).all_passed(), "{class}:\n{}", check_yd(&x));
        }
        assert_eq!(transpositions().rank(), 3);
    }

    #[test]
    fn non_closed_subset_is_rejected() {
        let (g, h) = s3();
        let s = g.named_class("transpositions").unwrap();
        assert_eq!(
            adjoint_yd(&g, h, &s[..2]),
            Err(YdError::Group(GroupError::NotConjugationClosed))
        );
    }

    #[test]
    fn left_multiplication_breaks_compatibility() {
        let (g, h) = s3();
        let n = g.order();
        let all = g.named_class("all").unwrap();
        let mut x = adjoint_yd(&g, h, &all).unwrap();
        let image: Vec<usize> = (0..n * n).map(|k| g.mul(k / n, k % n)).collect();
        x.action = LinMap::from_basis_map(n, &image);
        let report = check_yd(&x);
        assert!(report.get("module associativity").unwrap().passed());
        assert!(!report.get("compatibility").unwrap().passed());
    }

    #[test]
    fn group_braiding_is_conjugation() {
        let x = transpositions();
        let (g, _) = s3();
        let s = g.named_class("transpositions").unwrap();
        let (psi, psi_inv) = yd_braiding(&x, &x).unwrap();
        assert!(psi.is_basis_map());
        for (a, &sa) in s.iter().enumerate() {
            for (b, &sb) in s.iter().enumerate() {
                let target = s.iter().position(|&t| t == g.conjugate(sa, sb)).unwrap();
                assert_eq!(psi.column(a * 3 + b), &[(target * 3 + a, Rational::one())]);
            }
        }
        assert!(psi.compose(&psi_inv).unwrap().is_identity());
        assert!(psi_inv.compose(&psi).unwrap().is_identity());
    }

    #[test]
    fn yang_baxter_on_transpositions() {
        let x = transpositions();
        let (psi, _) = yd_braiding(&x, &x).unwrap();
        let id = LinMap::identity(3);
        let a = psi.tensor(&id);
        let b = id.tensor(&psi);
        let lhs = a.compose(&b).unwrap().compose(&a).unwrap();
        let rhs = b.compose(&a).unwrap().compose(&b).unwrap();
        assert_eq!((lhs.cod_rank(), lhs.dom_rank()), (27, 27));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_products_pass_and_unit_is_neutral() {
        let x = transpositions();
        let xx = yd_tensor(&x, &x).unwrap();
        assert_eq!(xx.rank(), 9);
        assert!(check_yd(&xx).all_passed());
        let u = YDData::unit(x.hopf().clone());
        assert!(check_yd(&u).all_passed());
        let xu = yd_tensor(&x, &u).unwrap();
        assert_eq!(
            (xu.action.clone(), xu.coaction.clone()),
            (x.action.clone(), x.coaction.clone())
        );
    }

    #[test]
    fn hexagons_hold() {
        let (g, h) = s3();
        let x = transpositions();
        let y = adjoint_yd(&g, h.clone(), &g.named_class("all").unwrap()).unwrap();
        let z = adjoint_yd(&g, h, &g.named_class("nontrivial").unwrap()).unwrap();
        let (mx, my, mz) = (x.rank(), y.rank(), z.rank());
        let id = LinMap::<Rational>::identity;
        // ψ_{X⊗Y,Z} = (ψ_{X,Z} ⊗ Y)(X ⊗ ψ_{Y,Z})
        let (xy_z, _) = yd_braiding(&yd_tensor(&x, &y).unwrap(), &z).unwrap();
        let (x_z, _) = yd_braiding(&x, &z).unwrap();
        let (y_z, _) = yd_braiding(&y, &z).unwrap();
        let rhs = x_z.tensor(&id(my)).compose(&id(mx).tensor(&y_z)).unwrap();
        assert_eq!(xy_z, rhs);
        // ψ_{X,Y⊗Z} = (Y ⊗ ψ_{X,Z})(ψ_{X,Y} ⊗ Z)
        let (x_yz, _) = yd_braiding(&x, &yd_tensor(&y, &z).unwrap()).unwrap();
        let (x_y, _) = yd_braiding(&x, &y).unwrap();
        let rhs = id(my).tensor(&x_z).compose(&x_y.tensor(&id(mz))).unwrap();
        assert_eq!(x_yz, rhs);
    }

    #[test]
    fn inclusion_is_a_morphism_and_braiding_is_natural() {
        let (g, h) = s3();
        let s = g.named_class("transpositions").unwrap();
        let x = adjoint_yd(&g, h.clone(), &s).unwrap();
        let all = adjoint_yd(&g, h, &g.named_class("all").unwrap()).unwrap();
        let inclusion = LinMap::from_basis_map(6, &s);
        assert!(check_yd_morphism(&inclusion, &x, &all)
            .unwrap()
            .all_passed());
        assert!(check_yd_morphism(&LinMap::identity(3), &x, &x)
            .unwrap()
            .all_passed());
        let (small, _) = yd_braiding(&x, &x).unwrap();
        let (big, _) = yd_braiding(&all, &all).unwrap();
        let ff = inclusion.tensor(&inclusion);
        assert_eq!(big.compose(&ff).unwrap(), ff.compose(&small).unwrap());
    }

    #[test]
    fn random_maps_are_not_morphisms() {
        let x = transpositions();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let f = LinMap::from_fn(3, 3, |_, _| Rational::from_i64(rng.gen_range(-3..4)));
            let scalar = f.as_scalar_multiple().is_some();
            let report = check_yd_morphism(&f, &x, &x).unwrap();
            if !scalar {
                assert!(!report.all_passed());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let x = transpositions();
        let doc = x.to_json("s3.json");
        let back = YDData::from_json(&doc, x.hopf().clone()).unwrap();
        assert_eq!(back, x);
    }
}
