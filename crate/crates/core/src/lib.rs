pub mod eval;
pub mod format;
pub mod hopf;
pub mod linmap;
pub mod oracle;
pub mod report;
pub mod ribbon;
pub mod ring;
pub mod tangle;
pub mod yd;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/maps.md")]
    mod maps {}
    #[doc = include_str!("../../../book/src/hopf.md")]
    mod hopf {}
    #[doc = include_str!("../../../book/src/yd.md")]
    mod yd {}
    #[doc = include_str!("../../../book/src/ribbon.md")]
    mod ribbon {}
    #[doc = include_str!("../../../book/src/tangles.md")]
    mod tangles {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
}
