use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;

use super::symbol::{generation_condition, Character, DualGroup, FormalSymbolSum, Symbol};
use super::SymbolError;
use crate::exact_algebra::{present_quotient, AbGroupStructure, GroupElementClass, IntMatrix};
use crate::fixed_locus::Configuration;

/// Default cap on the number of generators of a presentation.
pub const DEFAULT_BUDGET: usize = 20_000;

/// B_n(G) as generators, relations and the resulting abelian group.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: DualGroup,
    pub n: usize,
    pub generators: Vec<Symbol>,
    pub index: HashMap<Symbol, usize>,
    pub num_relations: usize,
    pub structure: AbGroupStructure,
}

/// All sorted `n`-multisets of characters satisfying the generation
/// condition, in lexicographic order.
pub fn enumerate_generators(
    group: &DualGroup,
    n: usize,
    budget: usize,
) -> Result<Vec<Symbol>, SymbolError> {
    if n == 0 {
        return Err(SymbolError::EmptySymbol);
    }
    let elements = group.elements();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    walk(group, &elements, n, 0, &mut stack, &mut out, budget)?;
    Ok(out)
}

fn walk(
    group: &DualGroup,
    elements: &[Character],
    n: usize,
    start: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Symbol>,
    budget: usize,
) -> Result<(), SymbolError> {
    if stack.len() == n {
        let chars: Vec<Character> = stack.iter().map(|&i| elements[i].clone()).collect();
        if generation_condition(&chars, group)? {
            if out.len() == budget {
                return Err(SymbolError::BudgetExceeded { budget });
            }
            out.push(Symbol::new(chars)?);
        }
        return Ok(());
    }
    for i in start..elements.len() {
        stack.push(i);
        walk(group, elements, n, i, stack, out, budget)?;
        stack.pop();
    }
    Ok(())
}

/// Right-hand side of the blowup relation for the entries at positions
/// `block` of `s`:
///
/// `[a_1..a_k, b] = Σ_i [a_1 - a_i, .., a_i, .., a_k - a_i, b]`, summed over
/// `i` whose value `a_i` has not appeared earlier in the block.
pub fn relation_b_expand(
    group: &DualGroup,
    s: &Symbol,
    block: &[usize],
) -> Result<FormalSymbolSum, SymbolError> {
    let len = s.len();
    let distinct: BTreeSet<usize> = block.iter().copied().collect();
    if block.len() < 2 || distinct.len() != block.len() || block.iter().any(|&i| i >= len) {
        return Err(SymbolError::BadBlock {
            block: block.to_vec(),
            len,
        });
    }
    let entries = s.entries();
    let a: Vec<&Character> = block.iter().map(|&i| &entries[i]).collect();
    let rest: Vec<Character> = (0..len)
        .filter(|i| !distinct.contains(i))
        .map(|i| entries[i].clone())
        .collect();

    let mut sum = FormalSymbolSum::new();
    for (i, ai) in a.iter().enumerate() {
        if a[..i].contains(ai) {
            continue;
        }
        let mut chars: Vec<Character> = a
            .iter()
            .enumerate()
            .map(|(j, aj)| {
                if j == i {
                    (*ai).clone()
                } else {
                    group.sub(aj, ai)
                }
            })
            .collect();
        chars.extend(rest.iter().cloned());
        if !generation_condition(&chars, group)? {
            let bad = Symbol::new(chars)?;
            return Err(SymbolError::NotGenerating(bad.to_string()));
        }
        sum.add(Symbol::new(chars)?, 1);
    }
    Ok(sum)
}

/// Position subsets of size at least 2 of `0..n`, in a fixed order.
fn blocks(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() >= 2 {
            out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
        }
    }
    out
}

pub fn build_presentation(
    group: &DualGroup,
    n: usize,
    budget: usize,
) -> Result<Presentation, SymbolError> {
    let generators = enumerate_generators(group, n, budget)?;
    let index: HashMap<Symbol, usize> = generators
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();

    let mut rows: BTreeSet<BTreeMap<usize, i64>> = BTreeSet::new();
    for s in &generators {
        for block in blocks(n) {
            let mut rel = relation_b_expand(group, s, &block)?;
            rel.add(s.clone(), -1);
            if rel.is_empty() {
                continue;
            }
            let mut row = BTreeMap::new();
            for (t, c) in rel.terms() {
                let j = *index
                    .get(t)
                    .ok_or_else(|| SymbolError::UnknownSymbol(t.to_string()))?;
                row.insert(j, c);
            }
            rows.insert(row);
        }
    }

    let mut matrix = IntMatrix::zeros(rows.len(), generators.len());
    for (i, row) in rows.iter().enumerate() {
        for (&j, &c) in row {
            matrix[(i, j)] = BigInt::from(c);
        }
    }
    let structure = present_quotient(generators.len(), &matrix)?;
    Ok(Presentation {
        group: group.clone(),
        n,
        generators,
        index,
        num_relations: rows.len(),
        structure,
    })
}

/// Canonical class of a formal sum in the presented group.
pub fn class_of(
    sum: &FormalSymbolSum,
    pres: &Presentation,
) -> Result<GroupElementClass, SymbolError> {
    let mut x = vec![BigInt::from(0); pres.generators.len()];
    for (s, c) in sum.terms() {
        if s.len() != pres.n {
            return Err(SymbolError::WrongArity {
                expected: pres.n,
                found: s.len(),
            });
        }
        let j = *pres
            .index
            .get(s)
            .ok_or_else(|| SymbolError::UnknownSymbol(s.to_string()))?;
        x[j] += c;
    }
    Ok(pres.structure.reduce_element(&x)?)
}

/// The fixed-locus symbol sum: nonzero normal weights padded with one zero
/// character per dimension of the component.
pub fn beta_sum(config: &Configuration, group: &DualGroup) -> Result<FormalSymbolSum, SymbolError> {
    if group.orders() != [i64::from(config.group.p)] {
        return Err(SymbolError::Mismatch(format!(
            "configuration group Z/{} against dual group {group}",
            config.group.p
        )));
    }
    let dim = usize::from(config.dim);
    let mut sum = FormalSymbolSum::new();
    let mut push = |weights: Vec<i64>| -> Result<(), SymbolError> {
        let mut values = weights;
        values.resize(dim, 0);
        sum.add(Symbol::cyclic(group, &values)?, 1);
        Ok(())
    };
    for pt in &config.points {
        push(pt.weights.clone())?;
    }
    for c in &config.curves {
        push(c.weights.values())?;
    }
    for s in &config.surfaces {
        push(vec![s.weight])?;
    }
    Ok(sum)
}

pub fn beta(config: &Configuration, pres: &Presentation) -> Result<GroupElementClass, SymbolError> {
    if usize::from(config.dim) != pres.n {
        return Err(SymbolError::Mismatch(format!(
            "configuration of dimension {} against B_{}",
            config.dim, pres.n
        )));
    }
    class_of(&beta_sum(config, &pres.group)?, pres)
}
