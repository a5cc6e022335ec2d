//! Framed oriented tangles as sliced diagrams.
//!
//! A diagram is read top to bottom. Each slice is a row of elementary
//! generators placed side by side; consecutive slices must meet along the
//! same word of orientations. `+` is a downward strand (the object `X`), `-`
//! an upward one (its dual).
//!
//! ```text
//! tangle := slice (';' slice)*
//! slice  := token (WS token)*
//! token  := id+ | id- | cup_l | cup_r | cap_l | cap_r | x OO | xi OO
//! OO     := ++ | +- | -+ | --
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    /// `+`, downward, the generating object.
    Plus,
    /// `-`, upward, its dual.
    Minus,
}

impl Orient {
    pub fn symbol(self) -> char {
        match self {
            Orient::Plus => '+',
            Orient::Minus => '-',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            '+' => Some(Orient::Plus),
            '-' => Some(Orient::Minus),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OrientWord(pub Vec<Orient>);

impl OrientWord {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for OrientWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("(empty)");
        }
        for o in &self.0 {
            write!(f, "{}", o.symbol())?;
        }
        Ok(())
    }
}

/// A crossing of two strands with the given orientations at its top.
/// `positive` is the oriented crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub positive: bool,
    pub left: Orient,
    pub right: Orient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Id(Orient),
    /// `ev_X`: `-+ → ∅`
    CapL,
    /// `ev_{X*}`: `+- → ∅`
    CapR,
    /// `coev_X`: `∅ → +-`
    CupL,
    /// `coev_{X*}`: `∅ → -+`
    CupR,
    Cross(Crossing),
}

use Orient::{Minus, Plus};

impl Generator {
    pub fn domain(&self) -> Vec<Orient> {
        match *self {
            Generator::Id(o) => vec![o],
            Generator::CapL => vec![Minus, Plus],
            Generator::CapR => vec![Plus, Minus],
            Generator::CupL | Generator::CupR => vec![],
            Generator::Cross(c) => vec![c.left, c.right],
        }
    }

    pub fn codomain(&self) -> Vec<Orient> {
        match *self {
            Generator::Id(o) => vec![o],
            Generator::CapL | Generator::CapR => vec![],
            Generator::CupL => vec![Plus, Minus],
            Generator::CupR => vec![Minus, Plus],
            Generator::Cross(c) => vec![c.right, c.left],
        }
    }

    pub fn parse(token: &str) -> Option<Self> {
        Some(match token {
            "id+" => Generator::Id(Plus),
            "id-" => Generator::Id(Minus),
            "cap_l" => Generator::CapL,
            "cap_r" => Generator::CapR,
            "cup_l" => Generator::CupL,
            "cup_r" => Generator::CupR,
            _ => {
                let (positive, rest) = match token.strip_prefix("xi") {
                    Some(rest) => (false, rest),
                    None => (true, token.strip_prefix('x')?),
                };
                let mut chars = rest.chars();
                let left = Orient::from_symbol(chars.next()?)?;
                let right = Orient::from_symbol(chars.next()?)?;
                if chars.next().is_some() {
                    return None;
                }
                Generator::Cross(Crossing {
                    positive,
                    left,
                    right,
                })
            }
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Id(o) => write!(f, "id{}", o.symbol()),
            Generator::CapL => f.write_str("cap_l"),
            Generator::CapR => f.write_str("cap_r"),
            Generator::CupL => f.write_str("cup_l"),
            Generator::CupR => f.write_str("cup_r"),
            Generator::Cross(c) => write!(
                f,
                "{}{}{}",
                if c.positive { "x" } else { "xi" },
                c.left.symbol(),
                c.right.symbol()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slice(pub Vec<Generator>);

impl Slice {
    pub fn domain(&self) -> OrientWord {
        OrientWord(self.0.iter().flat_map(Generator::domain).collect())
    }

    pub fn codomain(&self) -> OrientWord {
        OrientWord(self.0.iter().flat_map(Generator::codomain).collect())
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TangleError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(
        "boundary mismatch at line {line}, column {column}: slice {slice} starts at {found} \
         but the slice above ends at {expected}"
    )]
    Mismatch {
        line: usize,
        column: usize,
        slice: usize,
        expected: OrientWord,
        found: OrientWord,
    },
    #[error("writhe needs a closed tangle, got {domain} -> {codomain}")]
    Open {
        domain: OrientWord,
        codomain: OrientWord,
    },
    #[error("invalid braid word: {0}")]
    Braid(String),
}

/// A validated diagram. The slices compose top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangleWord {
    slices: Vec<Slice>,
}

impl TangleWord {
    /// Checks that consecutive slices meet; positions in errors are
    /// reported as slice numbers only.
    pub fn new(slices: Vec<Slice>) -> Result<Self, TangleError> {
        if slices.is_empty() {
            return Err(TangleError::Syntax {
                line: 1,
                column: 1,
                message: "empty tangle".into(),
            });
        }
        for (k, pair) in slices.windows(2).enumerate() {
            let (expected, found) = (pair[0].codomain(), pair[1].domain());
            if expected != found {
                return Err(TangleError::Mismatch {
                    line: 1,
                    column: 1,
                    slice: k + 2,
                    expected,
                    found,
                });
            }
        }
        Ok(TangleWord { slices })
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn domain(&self) -> OrientWord {
        self.slices[0].domain()
    }

    pub fn codomain(&self) -> OrientWord {
        self.slices[self.slices.len() - 1].codomain()
    }

    pub fn is_closed(&self) -> bool {
        self.domain().is_empty() && self.codomain().is_empty()
    }

    /// `self` followed by `below`.
    pub fn then(&self, below: &TangleWord) -> Result<TangleWord, TangleError> {
        Self::new(self.slices.iter().chain(&below.slices).cloned().collect())
    }

    pub fn crossings(&self) -> impl Iterator<Item = Crossing> + '_ {
        self.slices.iter().flat_map(|s| {
            s.0.iter().filter_map(|g| match g {
                Generator::Cross(c) => Some(*c),
                _ => None,
            })
        })
    }

    /// Signed crossing count of a closed diagram.
    pub fn writhe(&self) -> Result<i64, TangleError> {
        if !self.is_closed() {
            return Err(TangleError::Open {
                domain: self.domain(),
                codomain: self.codomain(),
            });
        }
        Ok(self
            .crossings()
            .map(|c| if c.positive { 1 } else { -1 })
            .sum())
    }
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.slices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for TangleWord {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tangle(s)
    }
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

enum Lexeme<'a> {
    Word(Token<'a>),
    Semicolon(usize, usize),
}

fn lex(text: &str) -> Vec<Lexeme<'_>> {
    let mut out = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = match line.find('#') {
            Some(k) => &line[..k],
            None => line,
        };
        let column = |byte: usize| line[..byte].chars().count() + 1;
        let mut start: Option<usize> = None;
        for (k, ch) in line.char_indices().chain([(line.len(), ' ')]) {
            let boundary = ch == ';' || ch.is_whitespace();
            if boundary {
                if let Some(s) = start.take() {
                    out.push(Lexeme::Word(Token {
                        text: &line[s..k],
                        line: line_no + 1,
                        column: column(s),
                    }));
                }
                if ch == ';' {
                    out.push(Lexeme::Semicolon(line_no + 1, column(k)));
                }
            } else if start.is_none() {
                start = Some(k);
            }
        }
    }
    out
}

/// Parses and validates the slice language.
pub fn parse_tangle(text: &str) -> Result<TangleWord, TangleError> {
    let mut slices: Vec<(Slice, usize, usize)> = Vec::new();
    let mut current: Vec<Generator> = Vec::new();
    let mut first_pos: Option<(usize, usize)> = None;
    let mut last_pos = (1, 1);
    let syntax = |line, column, message: &str| TangleError::Syntax {
        line,
        column,
        message: message.to_string(),
    };
    for lexeme in lex(text) {
        match lexeme {
            Lexeme::Word(tok) => {
                let g = Generator::parse(tok.text).ok_or_else(|| {
                    syntax(
                        tok.line,
                        tok.column,
                        &format!("unknown token `{}`", tok.text),
                    )
                })?;
                first_pos.get_or_insert((tok.line, tok.column));
                current.push(g);
            }
            Lexeme::Semicolon(line, column) => {
                let (l, c) = first_pos
                    .take()
                    .ok_or_else(|| syntax(line, column, "empty slice"))?;
                slices.push((Slice(std::mem::take(&mut current)), l, c));
                last_pos = (line, column);
            }
        }
    }
    match first_pos {
        Some((l, c)) => slices.push((Slice(current), l, c)),
        None if slices.is_empty() => return Err(syntax(1, 1, "empty tangle")),
        None => return Err(syntax(last_pos.0, last_pos.1, "empty slice after `;`")),
    }
    for (k, pair) in slices.windows(2).enumerate() {
        let (expected, found) = (pair[0].0.codomain(), pair[1].0.domain());
        if expected != found {
            return Err(TangleError::Mismatch {
                line: pair[1].1,
                column: pair[1].2,
                slice: k + 2,
                expected,
                found,
            });
        }
    }
    TangleWord::new(slices.into_iter().map(|(s, _, _)| s).collect())
}

/// A word in the Artin generators: `i` is `σᵢ`, `-i` is `σᵢ⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self, TangleError> {
        if strands == 0 {
            return Err(TangleError::Braid("at least one strand is needed".into()));
        }
        if let Some(bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(TangleError::Braid(format!(
                "letter {bad} is out of range for {strands} strands"
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Whitespace- or comma-separated letters. Without an explicit strand
    /// count the braid uses the fewest strands its letters allow.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self, TangleError> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| TangleError::Braid(format!("`{t}` is not an integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let needed = letters
            .iter()
            .map(|l| l.unsigned_abs() as usize + 1)
            .max()
            .unwrap_or(1);
        Self::new(strands.unwrap_or(needed), letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// Sum of letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.letters.iter().map(i64::to_string).collect();
        write!(f, "{}", words.join(" "))
    }
}

fn ids(o: Orient, k: usize) -> impl Iterator<Item = Generator> {
    std::iter::repeat_n(Generator::Id(o), k)
}

/// Trace closure. The strands run down through the braid and return upward
/// on the right: `n` nested `cup_l`, one slice per letter, then `n` nested
/// `cap_r`, innermost first.
pub fn braid_closure(b: &BraidWord) -> TangleWord {
    let n = b.strands;
    let mut slices = Vec::with_capacity(2 * n + b.letters.len());
    for k in 0..n {
        slices.push(Slice(
            ids(Plus, k)
                .chain([Generator::CupL])
                .chain(ids(Minus, k))
                .collect(),
        ));
    }
    for &letter in &b.letters {
        let i = letter.unsigned_abs() as usize;
        let crossing = Generator::Cross(Crossing {
            positive: letter > 0,
            left: Plus,
            right: Plus,
        });
        slices.push(Slice(
            ids(Plus, i - 1)
                .chain([crossing])
                .chain(ids(Plus, n - i - 1))
                .chain(ids(Minus, n))
                .collect(),
        ));
    }
    for k in (0..n).rev() {
        slices.push(Slice(
            ids(Plus, k)
                .chain([Generator::CapR])
                .chain(ids(Minus, k))
                .collect(),
        ));
    }
    TangleWord::new(slices).expect("closure slices meet")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unknot_parses_closed() {
        let t = parse_tangle("cup_l ; cap_r").unwrap();
        assert!(t.is_closed());
        assert_eq!(t.writhe().unwrap(), 0);
        assert_eq!(t.to_string(), "cup_l ; cap_r");
    }

    #[test]
    fn single_crossing() {
        let t = parse_tangle("id+ id+ ; x++ ; id+ id+").unwrap();
        assert_eq!(t.domain().to_string(), "++");
        assert_eq!(t.codomain().to_string(), "++");
        assert!(t.writhe().is_err());
    }

    #[test]
    fn mismatch_names_the_boundary() {
        match parse_tangle("id+ ;\n  id+ id+") {
            Err(TangleError::Mismatch {
                line,
                column,
                slice,
                expected,
                found,
            }) => {
                assert_eq!((line, column, slice), (2, 3, 2));
                assert_eq!(expected.to_string(), "+");
                assert_eq!(found.to_string(), "++");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_tangle("id+ ; cup_l"),
            Err(TangleError::Mismatch { .. })
        ));
        // a cup beside a strand widens the boundary; that composes
        assert_eq!(
            parse_tangle("id+ ; cup_l id+")
                .unwrap()
                .codomain()
                .to_string(),
            "+-+"
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_tangle("cup_l ;\n cap_x").unwrap_err();
        assert_eq!(
            err,
            TangleError::Syntax {
                line: 2,
                column: 2,
                message: "unknown token `cap_x`".into()
            }
        );
        assert!(matches!(parse_tangle(""), Err(TangleError::Syntax { .. })));
        assert!(matches!(
            parse_tangle("id+ ;; id+"),
            Err(TangleError::Syntax { .. })
        ));
        assert!(matches!(
            parse_tangle("id+ ;"),
            Err(TangleError::Syntax { .. })
        ));
        assert!(parse_tangle("x+").is_err());
        assert!(parse_tangle("xi+-+").is_err());
    }

    #[test]
    fn comments_and_whitespace_normalize() {
        let t = parse_tangle("# unknot\ncup_l   # open\n;\tcap_r # close\n").unwrap();
        assert_eq!(t.to_string(), "cup_l ; cap_r");
        let corpus = [
            "id+ id- ; x+- ; id- id+",
            "cup_r ; xi-+ ; cap_r",
            "id- id- ; x-- ; xi-- ; id- id-",
            "cup_l ; id+ cup_l id- ; id+ x+- id- ; id+ xi-+ id- ; id+ cap_r id- ; cap_r",
        ];
        for w in corpus {
            let t = parse_tangle(w).unwrap();
            assert_eq!(t.to_string(), w);
            assert_eq!(parse_tangle(&t.to_string()).unwrap(), t);
        }
    }

    #[test]
    fn closures_have_expected_writhe() {
        let unknot = braid_closure(&BraidWord::parse("", None).unwrap());
        assert_eq!(unknot.to_string(), "cup_l ; cap_r");
        let trefoil = braid_closure(&BraidWord::parse("1 1 1", None).unwrap());
        assert_eq!(trefoil.writhe().unwrap(), 3);
        let eight = braid_closure(&BraidWord::parse("1 -2 1 -2", None).unwrap());
        assert_eq!(eight.writhe().unwrap(), 0);
        assert_eq!(
            braid_closure(&BraidWord::parse("1", None).unwrap()).to_string(),
            "cup_l ; id+ cup_l id- ; x++ id- id- ; id+ cap_r id- ; cap_r"
        );
    }

    #[test]
    fn braid_words_are_validated() {
        assert!(BraidWord::parse("1 0", None).is_err());
        assert!(BraidWord::parse("3", Some(3)).is_err());
        assert!(BraidWord::parse("a", None).is_err());
        assert_eq!(BraidWord::parse("1,-2", None).unwrap().strands(), 3);
    }

    proptest! {
        #[test]
        fn closures_validate(n in 1usize..=6, raw in proptest::collection::vec((1i64..6, any::<bool>()), 0..=20)) {
            let letters: Vec<i64> = raw
                .into_iter()
                .filter(|(i, _)| (*i as usize) < n)
                .map(|(i, pos)| if pos { i } else { -i })
                .collect();
            let b = BraidWord::new(n, letters).unwrap();
            let t = braid_closure(&b);
            prop_assert!(t.is_closed());
            prop_assert_eq!(t.writhe().unwrap(), b.exponent_sum());
            prop_assert_eq!(parse_tangle(&t.to_string()).unwrap(), t);
        }
    }
}
