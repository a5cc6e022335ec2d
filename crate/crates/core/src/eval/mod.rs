//! The tangle functor: slices go to tensor products of structure maps, and
//! a closed diagram to a scalar.

mod builtin;
pub mod moves;

pub use builtin::{
    builtin, group_datum, group_ribbon_yd, jones_datum, Builtin, BuiltinError, JonesModule,
    BUILTIN_NAMES,
};

use thiserror::Error;

use crate::linmap::{LinMap, LinMapError};
use crate::report::CheckReport;
use crate::ribbon::{certify_ribbon, CrossingTable, RibbonDatum, RibbonError};
use crate::ring::Ring;
use crate::tangle::{Generator, OrientWord, TangleError, TangleWord};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("datum failed certification:\n{0}")]
    Uncertified(CheckReport),
    #[error("expected a closed diagram, got {domain} -> {codomain}")]
    NotClosed {
        domain: OrientWord,
        codomain: OrientWord,
    },
    #[error("twist {0} is not invertible, cannot normalize")]
    TwistNotUnit(String),
    #[error(transparent)]
    Ribbon(#[from] RibbonError),
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error(transparent)]
    LinMap(#[from] LinMapError),
}

/// A ribbon datum ready for evaluation.
#[derive(Clone, Debug)]
pub struct Functor<R: Ring> {
    datum: RibbonDatum<R>,
    crossings: CrossingTable<R>,
    id: LinMap<R>,
    report: Option<CheckReport>,
}

impl<R: Ring> Functor<R> {
    /// Certifies `datum` first.
    pub fn new(datum: RibbonDatum<R>) -> Result<Self, EvalError> {
        let report = certify_ribbon(&datum);
        if !report.all_passed() {
            return Err(EvalError::Uncertified(report));
        }
        let mut f = Self::new_unchecked(datum);
        f.report = Some(report);
        Ok(f)
    }

    /// No certification; values on non-isotopic-invariant data mean nothing.
    pub fn new_unchecked(datum: RibbonDatum<R>) -> Self {
        Functor {
            crossings: datum.crossings(),
            id: LinMap::identity(datum.rank()),
            datum,
            report: None,
        }
    }

    pub fn datum(&self) -> &RibbonDatum<R> {
        &self.datum
    }

    /// `None` when built unchecked.
    pub fn report(&self) -> Option<&CheckReport> {
        self.report.as_ref()
    }

    pub fn generator(&self, g: Generator) -> &LinMap<R> {
        let p = &self.datum.pivotal;
        match g {
            Generator::Id(_) => &self.id,
            Generator::CapL => &p.ev_x,
            Generator::CapR => &p.ev_xstar,
            Generator::CupL => &p.coev_x,
            Generator::CupR => &p.coev_xstar,
            Generator::Cross(c) => self.crossings.get(c),
        }
    }

    /// `X^{⊗k} → X^{⊗l}` for a diagram with `k` strands on top and `l` at
    /// the bottom; both orientations have the same rank.
    pub fn evaluate(&self, t: &TangleWord) -> LinMap<R> {
        let n = self.datum.rank();
        let mut state = LinMap::identity(n.pow(t.domain().len() as u32));
        for slice in t.slices() {
            let factors: Vec<&LinMap<R>> = slice.0.iter().map(|g| self.generator(*g)).collect();
            state = LinMap::apply_tensor(&factors, &state).expect("validated diagram");
        }
        state
    }

    pub fn twist(&self) -> Result<R, EvalError> {
        Ok(self.datum.twist()?)
    }

    /// The scalar of a closed diagram. With `normalize` it is multiplied by
    /// `θ^{-w}` for writhe `w`, removing the framing dependence.
    pub fn framed_invariant(&self, t: &TangleWord, normalize: bool) -> Result<R, EvalError> {
        if !t.is_closed() {
            return Err(EvalError::NotClosed {
                domain: t.domain(),
                codomain: t.codomain(),
            });
        }
        let value = self.evaluate(t).get(0, 0);
        if !normalize {
            return Ok(value);
        }
        let theta = self.twist()?;
        let correction = theta
            .pow(-t.writhe()?)
            .ok_or_else(|| EvalError::TwistNotUnit(theta.to_string()))?;
        Ok(value.mul(&correction))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::FiniteGroup;
    use crate::ring::{LaurentHalf, Rational};
    use crate::tangle::{braid_closure, parse_tangle, BraidWord};

    fn closure(text: &str, strands: usize) -> TangleWord {
        braid_closure(&BraidWord::parse(text, Some(strands)).unwrap())
    }

    #[test]
    fn jones_small_knots() {
        let f = Functor::new(jones_datum()).unwrap();
        let p = |s: &str| <LaurentHalf as Ring>::parse(s).unwrap();
        let unknot = parse_tangle("cup_l ; cap_r").unwrap();
        assert_eq!(f.framed_invariant(&unknot, false).unwrap(), p("v + v^-1"));
        let trefoil = closure("1 1 1", 2);
        assert_eq!(
            f.framed_invariant(&trefoil, true).unwrap(),
            p("v^-1 + v^-3 + v^-5 - v^-9")
        );
        let eight = closure("1 -2 1 -2", 3);
        assert_eq!(f.framed_invariant(&eight, true).unwrap(), p("v^5 + v^-5"));
        assert_eq!(
            f.framed_invariant(&trefoil, false).unwrap(),
            p("v^-1 + v^-3 + v^-5 - v^-9").mul(&p("v^9/2"))
        );
    }

    #[test]
    fn group_counts() {
        let g = FiniteGroup::symmetric(3);
        let f = Functor::new(group_datum(&g, "transpositions").unwrap()).unwrap();
        let count = |t: &TangleWord| f.framed_invariant(t, true).unwrap();
        assert_eq!(
            count(&parse_tangle("cup_r ; cap_l").unwrap()),
            Rational::from_i64(3)
        );
        assert_eq!(count(&closure("1 1 1", 2)), Rational::from_i64(9));
        assert_eq!(count(&closure("1 -2 1 -2", 3)), Rational::from_i64(3));
    }

    #[test]
    fn open_diagrams_give_maps() {
        let f = Functor::new(jones_datum()).unwrap();
        let x = parse_tangle("x++").unwrap();
        assert_eq!(f.evaluate(&x), f.datum().braid);
        assert!(matches!(
            f.framed_invariant(&x, false),
            Err(EvalError::NotClosed { .. })
        ));
    }

    #[test]
    fn uncertified_datum_is_refused() {
        let mut d = RibbonDatum::<Rational>::symmetric(vec!["a".into(), "b".into()]);
        d.braid = d.braid.scale(&Rational::from_i64(2));
        assert!(matches!(
            Functor::new(d.clone()),
            Err(EvalError::Uncertified(_))
        ));
        let f = Functor::new_unchecked(d);
        assert!(f.report().is_none());
    }
}
