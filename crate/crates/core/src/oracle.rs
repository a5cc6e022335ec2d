//! Independent reference values for braid closures: the Kauffman bracket
//! state sum, and a direct count of colorings by a conjugation-closed subset
//! of a finite group. Neither touches linear maps.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::hopf::{FiniteGroup, GroupError};
use crate::ring::{LaurentHalf, Rational, Ring};
use crate::tangle::BraidWord;

pub const MAX_BRACKET_CROSSINGS: usize = 12;
pub const MAX_COLORINGS: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("{found} crossings, the state sum is limited to {max}")]
    TooManyCrossings { found: usize, max: usize },
    #[error("{count} candidate colorings exceed the limit of {limit}")]
    TooManyColorings { count: u128, limit: u64 },
    #[error("bracket has a term A^{0}, which has no image in v")]
    OddPower(i64),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketValue {
    /// `⟨D⟩` with the empty diagram normalized to 1, so a circle gives
    /// `δ = -A² - A⁻²`. Stored with `A^k` as the `v^k` term.
    pub bracket: LaurentHalf,
    pub writhe: i64,
    /// `(-A³)^{-w}⟨D⟩` after `A^{2k} ↦ (-1)^k v^k`.
    pub value: LaurentHalf,
}

impl BracketValue {
    /// The bracket printed in `A`.
    pub fn bracket_text(&self) -> String {
        self.bracket.to_string().replace('v', "A")
    }
}

fn a_pow(coeff: i64, k: i64) -> LaurentHalf {
    LaurentHalf::monomial(Rational::from_i64(coeff), 2 * k)
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

/// Circles after smoothing each crossing: `true` keeps the strands
/// vertical, `false` joins them by a cap and a cup.
fn circles(strands: usize, letters: &[i64], vertical: impl Fn(usize) -> bool) -> usize {
    let levels = letters.len();
    // point (level, strand); level `levels` is glued to level 0
    let point = |level: usize, j: usize| (level % levels.max(1)) * strands + j;
    let total = levels.max(1) * strands;
    let mut dsu = Dsu((0..total).collect());
    let mut comps = total;
    let mut join = |a, b, dsu: &mut Dsu| {
        if dsu.union(a, b) {
            comps -= 1;
        }
    };
    if levels == 0 {
        return strands;
    }
    for (k, &l) in letters.iter().enumerate() {
        let i = l.unsigned_abs() as usize - 1;
        for j in 0..strands {
            if j != i && j != i + 1 {
                join(point(k, j), point(k + 1, j), &mut dsu);
            }
        }
        if vertical(k) {
            join(point(k, i), point(k + 1, i), &mut dsu);
            join(point(k, i + 1), point(k + 1, i + 1), &mut dsu);
        } else {
            join(point(k, i), point(k, i + 1), &mut dsu);
            join(point(k + 1, i), point(k + 1, i + 1), &mut dsu);
        }
    }
    comps
}

/// State sum with `σᵢ ↦ A·(vertical) + A⁻¹·(cap-cup)` and
/// `σᵢ⁻¹ ↦ A⁻¹·(vertical) + A·(cap-cup)`.
pub fn kauffman_bracket(b: &BraidWord) -> Result<BracketValue, OracleError> {
    let letters = b.letters();
    let c = letters.len();
    if c > MAX_BRACKET_CROSSINGS {
        return Err(OracleError::TooManyCrossings {
            found: c,
            max: MAX_BRACKET_CROSSINGS,
        });
    }
    // (A exponent, circle count) -> number of states
    let mut states: BTreeMap<(i64, usize), i64> = BTreeMap::new();
    for mask in 0u32..(1 << c) {
        let vertical = |k: usize| mask & (1 << k) != 0;
        let exp: i64 = letters
            .iter()
            .enumerate()
            .map(|(k, &l)| if vertical(k) == (l > 0) { 1 } else { -1 })
            .sum();
        *states
            .entry((exp, circles(b.strands(), letters, vertical)))
            .or_default() += 1;
    }
    let delta = a_pow(-1, 2).add(&a_pow(-1, -2));
    let mut bracket = LaurentHalf::zero();
    for ((exp, loops), count) in states {
        let term = delta.pow(loops as i64).expect("non-negative power");
        bracket = bracket.add(&term.mul(&a_pow(count, exp)));
    }
    let writhe = b.exponent_sum();
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let framed = bracket.mul(&a_pow(sign, -3 * writhe));
    let value = a_to_v(&framed)?;
    Ok(BracketValue {
        bracket,
        writhe,
        value,
    })
}

/// `A^{2k} ↦ (-1)^k v^k`; odd powers of `A` have no image.
pub fn a_to_v(p: &LaurentHalf) -> Result<LaurentHalf, OracleError> {
    if let Some((e, _)) = p.terms().find(|(e, _)| e % 4 != 0) {
        return Err(OracleError::OddPower(e / 2));
    }
    Ok(p.map_terms(|e, c| {
        let k = e / 4;
        let c = if k % 2 == 0 { c.clone() } else { c.neg() };
        (2 * k, c)
    }))
}

/// Number of assignments of elements of `subset` to the strands at the top
/// of the braid that come back unchanged after passing through every
/// crossing, where `σᵢ` sends `(a, b)` to `(aba⁻¹, a)`. For a knot or link
/// closure this counts homomorphisms from the link group sending meridians
/// into `subset`.
pub fn count_meridian_homs(
    group: &FiniteGroup,
    subset: &[usize],
    b: &BraidWord,
) -> Result<u64, OracleError> {
    if !group.is_conjugation_closed(subset) {
        return Err(GroupError::NotConjugationClosed.into());
    }
    let n = b.strands();
    let m = subset.len();
    let count = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if count > MAX_COLORINGS as u128 {
        return Err(OracleError::TooManyColorings {
            count,
            limit: MAX_COLORINGS,
        });
    }
    let mut found = 0;
    let mut digits = vec![0usize; n];
    for _ in 0..count {
        let start: Vec<usize> = digits.iter().map(|&d| subset[d]).collect();
        let mut colors = start.clone();
        for &l in b.letters() {
            let i = l.unsigned_abs() as usize - 1;
            let (a, c) = (colors[i], colors[i + 1]);
            let (x, y) = if l > 0 {
                (group.conjugate(a, c), a)
            } else {
                (c, group.conjugate(group.inv(c), a))
            };
            colors[i] = x;
            colors[i + 1] = y;
        }
        if colors == start {
            found += 1;
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < m {
                break;
            }
            *d = 0;
        }
    }
    Ok(found)
}
