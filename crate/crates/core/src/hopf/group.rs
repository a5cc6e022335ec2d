use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not {0}x{0}")]
    Shape(usize),
    #[error("table entry out of range at ({0}, {1})")]
    OutOfRange(usize, usize),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unknown group `{0}` (try z<n>, s<n>, trivial)")]
    UnknownGroup(String),
    #[error("unknown class `{0}` (try transpositions, all, nontrivial, identity)")]
    UnknownClass(String),
    #[error("class `transpositions` needs a symmetric group")]
    NotPermutations,
    #[error("subset is not closed under conjugation")]
    NotConjugationClosed,
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
    /// Permutation images, for symmetric groups only.
    perms: Option<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::Shape(n));
        }
        for (a, row) in table.iter().enumerate() {
            if let Some(b) = row.iter().position(|&c| c >= n) {
                return Err(GroupError::OutOfRange(a, b));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or(GroupError::NoInverse(g))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            labels,
            table,
            inverse,
            identity,
            perms: None,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order zero");
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_table(format!("z{n}"), labels, table).expect("cyclic table is a group")
    }

    pub fn trivial() -> Self {
        let mut g = Self::cyclic(1);
        g.name = "trivial".into();
        g
    }

    /// Permutations of `{1..n}` in lexicographic order of their image lists,
    /// composed right to left: `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            perms.push(current.clone());
            if !next_permutation(&mut current) {
                break;
            }
        }
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&x| s[x]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let labels = (0..perms.len()).map(|i| format!("g{i}")).collect();
        let mut g = Self::from_table(format!("s{n}"), labels, table).expect("symmetric group");
        g.perms = Some(perms);
        g
    }

    /// `z<n>`, `s<n>` or `trivial`.
    pub fn by_name(name: &str) -> Result<Self, GroupError> {
        let unknown = || GroupError::UnknownGroup(name.to_string());
        if name == "trivial" {
            return Ok(Self::trivial());
        }
        let (kind, rest) = name.split_at(name.len().min(1));
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match (kind, n) {
            ("z", 1..=64) => Ok(Self::cyclic(n)),
            ("s", 1..=5) => Ok(Self::symmetric(n)),
            _ => Err(unknown()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    /// Cycle notation on `{1..n}` for permutation groups, the label otherwise.
    pub fn describe(&self, g: usize) -> String {
        match &self.perms {
            Some(perms) => cycle_notation(&perms[g]),
            None => self.labels[g].clone(),
        }
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for h in 0..self.order() {
            if seen[h] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.order()).map(|g| self.conjugate(g, h)).collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    pub fn is_conjugation_closed(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        set.iter()
            .all(|&s| (0..self.order()).all(|g| set.contains(&self.conjugate(g, s))))
    }

    /// `transpositions`, `all`, `nontrivial` or `identity`, sorted by index.
    pub fn named_class(&self, name: &str) -> Result<Vec<usize>, GroupError> {
        match name {
            "all" => Ok((0..self.order()).collect()),
            "nontrivial" => Ok((0..self.order()).filter(|&g| g != self.identity).collect()),
            "identity" => Ok(vec![self.identity]),
            "transpositions" => {
                let perms = self.perms.as_ref().ok_or(GroupError::NotPermutations)?;
                Ok(perms
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| p.iter().enumerate().filter(|(i, x)| i != *x).count() == 2)
                    .map(|(g, _)| g)
                    .collect())
            }
            other => Err(GroupError::UnknownClass(other.to_string())),
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}
