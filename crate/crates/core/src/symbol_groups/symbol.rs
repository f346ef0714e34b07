use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use super::SymbolError;
use crate::exact_algebra::{present_quotient, IntMatrix};

/// `G^∨ ≅ Z/m_1 × … × Z/m_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualGroup {
    orders: Vec<i64>,
}

impl DualGroup {
    pub fn new(orders: Vec<i64>) -> Result<Self, SymbolError> {
        if orders.is_empty() || orders.iter().any(|&m| m < 2) {
            return Err(SymbolError::BadOrders(orders));
        }
        Ok(Self { orders })
    }

    pub fn cyclic(m: i64) -> Result<Self, SymbolError> {
        Self::new(vec![m])
    }

    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.len() == 1
    }

    pub fn order(&self) -> i64 {
        self.orders.iter().product()
    }

    pub fn zero(&self) -> Character {
        Character(vec![0; self.rank()])
    }

    pub fn character(&self, components: &[i64]) -> Result<Character, SymbolError> {
        if components.len() != self.rank() {
            return Err(SymbolError::LengthMismatch {
                expected: self.rank(),
                found: components.len(),
            });
        }
        Ok(Character(
            components
                .iter()
                .zip(&self.orders)
                .map(|(a, m)| a.mod_floor(m))
                .collect(),
        ))
    }

    pub fn sub(&self, a: &Character, b: &Character) -> Character {
        Character(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((x, y), m)| (x - y).mod_floor(m))
                .collect(),
        )
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<Character> {
        let mut out = vec![Vec::new()];
        for &m in &self.orders {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..m).map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Character).collect()
    }
}

impl fmt::Display for DualGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|m| format!("Z/{m}")).collect();
        write!(f, "{}", parts.join("×"))
    }
}

/// An element of `G^∨` with reduced components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(pub(crate) Vec<i64>);

impl Character {
    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [x] = self.0.as_slice() {
            write!(f, "{x}")
        } else {
            let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// An unordered tuple of characters, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    entries: Vec<Character>,
}

impl Symbol {
    /// Sorts the entries. Does not check the generation condition.
    pub fn new(mut entries: Vec<Character>) -> Result<Self, SymbolError> {
        if entries.is_empty() {
            return Err(SymbolError::EmptySymbol);
        }
        entries.sort();
        Ok(Self { entries })
    }

    /// Convenience for cyclic groups: reduces the integers mod `m`.
    pub fn cyclic(group: &DualGroup, values: &[i64]) -> Result<Self, SymbolError> {
        let chars = values
            .iter()
            .map(|&v| group.character(&[v]))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(chars)
    }

    pub fn entries(&self) -> &[Character] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Integer combination of symbols with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSymbolSum {
    terms: BTreeMap<Symbol, i64>,
}

impl FormalSymbolSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(s: Symbol) -> Self {
        let mut sum = Self::new();
        sum.add(s, 1);
        sum
    }

    pub fn add(&mut self, s: Symbol, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(s.clone()).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn add_sum(&mut self, other: &FormalSymbolSum, factor: i64) {
        for (s, c) in &other.terms {
            self.add(s.clone(), c * factor);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Symbol, i64)> {
        self.terms.iter().map(|(s, c)| (s, *c))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for FormalSymbolSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if i == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Whether the characters generate all of `G^∨`.
pub fn generation_condition(chars: &[Character], group: &DualGroup) -> Result<bool, SymbolError> {
    for c in chars {
        if c.0.len() != group.rank() {
            return Err(SymbolError::LengthMismatch {
                expected: group.rank(),
                found: c.0.len(),
            });
        }
    }
    if let [m] = group.orders() {
        let g = chars.iter().fold(*m, |acc, c| acc.gcd(&c.0[0]));
        return Ok(g == 1);
    }
    let k = group.rank();
    let mut rows: Vec<Vec<i64>> = chars.iter().map(|c| c.0.clone()).collect();
    for (j, &m) in group.orders().iter().enumerate() {
        let mut r = vec![0; k];
        r[j] = m;
        rows.push(r);
    }
    let rel = IntMatrix::from_rows(k, &rows)?;
    Ok(present_quotient(k, &rel)?.is_trivial())
}
