use super::{seq, tensor, PivotalData, RibbonDatum, RibbonError};
use crate::hopf::expect_shape;
use crate::linmap::LinMap;
use crate::report::CheckReport;
use crate::ring::Ring;
use crate::yd::{yd_braiding, YDData};

/// A Yetter–Drinfeld module together with pivotal data on its underlying
/// object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonYDData<R: Ring> {
    pub yd: YDData<R>,
    pub pivotal: PivotalData<R>,
}

impl<R: Ring> RibbonYDData<R> {
    pub fn new(yd: YDData<R>, pivotal: PivotalData<R>) -> Result<Self, RibbonError> {
        let m = yd.rank();
        expect_shape("pivotal data", &LinMap::<R>::identity(pivotal.rank()), m, m)?;
        Ok(RibbonYDData { yd, pivotal })
    }

    /// `γα = α(S² ⊗ γ)`, `βγ = (S² ⊗ γ)β` and `c^R = c^L` for the module
    /// braiding.
    pub fn check_ribbon_conditions(&self) -> CheckReport {
        let h = &**self.yd.hopf();
        let gamma = self.pivotal.gamma();
        let s2 = h.antipode.compose(&h.antipode).expect("endomorphism");
        let (alpha, beta) = (&self.yd.action, &self.yd.coaction);
        let (hl, xl) = (h.labels(), self.yd.labels());
        let mut r = CheckReport::new();
        r.compare(
            "twist commutes with action",
            &seq(&[alpha.clone(), gamma.clone()]),
            &seq(&[s2.tensor(&gamma), alpha.clone()]),
            &[hl, xl],
        );
        r.compare(
            "twist commutes with coaction",
            &seq(&[gamma.clone(), beta.clone()]),
            &seq(&[beta.clone(), s2.tensor(&gamma)]),
            &[xl],
        );
        let (psi, _) = yd_braiding(&self.yd, &self.yd).expect("same algebra");
        r.compare(
            "ribbon condition",
            &self.pivotal.right_curl_of(&psi),
            &self.pivotal.left_curl_of(&psi),
            &[xl],
        );
        r
    }

    /// The ribbon datum with braiding from the module structure.
    pub fn datum(&self) -> RibbonDatum<R> {
        let (psi, psi_inv) = yd_braiding(&self.yd, &self.yd).expect("same algebra");
        RibbonDatum::new(self.pivotal.clone(), psi, psi_inv).expect("shapes")
    }

    /// The module structure on `X*`:
    /// `α* = (ev_X ⊗ X*)(X* ⊗ α ⊗ X*)(X* ⊗ S ⊗ coev_X)P` and
    /// `β* = (S⁻¹ ⊗ X*)(H ⊗ ev_X ⊗ X*)(P ⊗ X ⊗ X*)(X* ⊗ β ⊗ X*)(X* ⊗ coev_X)`.
    ///
    /// Requires the two twist compatibilities.
    pub fn derive_dual_yd(&self) -> Result<YDData<R>, RibbonError> {
        let conditions = self.check_ribbon_conditions();
        let mut needed = CheckReport::new();
        for name in ["twist commutes with action", "twist commutes with coaction"] {
            needed.push(conditions.get(name).expect("reported").clone());
        }
        if !needed.all_passed() {
            return Err(RibbonError::Precondition(needed));
        }
        let h = &**self.yd.hopf();
        let (n, m) = (h.rank(), self.yd.rank());
        let (idh, idx) = (LinMap::<R>::identity(n), LinMap::<R>::identity(m));
        let p = &self.pivotal;
        let action = seq(&[
            LinMap::swap(n, m),
            tensor(&[&idx, &h.antipode, &p.coev_x]),
            tensor(&[&idx, &self.yd.action, &idx]),
            p.ev_x.tensor(&idx),
        ]);
        let coaction = seq(&[
            idx.tensor(&p.coev_x),
            tensor(&[&idx, &self.yd.coaction, &idx]),
            tensor(&[&LinMap::swap(m, n), &idx, &idx]),
            tensor(&[&idh, &p.ev_x, &idx]),
            h.antipode_inv.tensor(&idx),
        ]);
        Ok(YDData::new(
            self.yd.hopf().clone(),
            p.dual_labels().to_vec(),
            action,
            coaction,
        )?)
    }
}
