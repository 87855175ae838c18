//! Generator-expression grammar.
//!
//! ```text
//! list     := term ("," term)*
//! term     := "1" | rotation | "b" ("*"? rotation)?      dihedral / cyclic
//!           | cycle+ | "()"                              permutation, 1-based points
//!           | "-"? digits                              cyclic, read mod n
//!           | index | label                              table-backed
//! rotation := "a" ("^" "-"? digits)?
//! cycle    := "(" point ((" " | ",") point)* ")"
//! ```
//!
//! Whitespace is ignored everywhere. Exponents are reduced mod n. Errors carry
//! the byte offset of the offending token in the original input.

use super::{DihedralElement, FiniteGroup, GroupElement, Permutation};
use crate::error::{Error, Result};

/// A top-level term and the byte offset where it starts.
fn split_terms(input: &str) -> Result<Vec<(usize, &str)>> {
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (pos, c) in input.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::parse(pos, "unbalanced ')'"))?;
            }
            ',' if depth == 0 => {
                terms.push((start, &input[start..pos]));
                start = pos + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::parse(input.len(), "unclosed '('"));
    }
    terms.push((start, &input[start..]));

    let mut out = Vec::with_capacity(terms.len());
    for (offset, term) in terms {
        let trimmed = term.trim_start();
        let offset = offset + (term.len() - trimmed.len());
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() {
            return Err(Error::parse(offset, "empty term"));
        }
        out.push((offset, trimmed));
    }
    Ok(out)
}

/// Non-whitespace characters of a term with their absolute byte offsets.
struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Cursor {
    fn new(offset: usize, term: &str) -> Self {
        let chars: Vec<(usize, char)> = term
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (offset + i, c))
            .collect();
        Self {
            chars,
            pos: 0,
            end: offset + term.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn done(&self) -> bool {
        self.pos == self.chars.len()
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.offset();
        let negative = self.eat('-');
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(Error::parse(self.offset(), "expected an integer"));
        }
        let value: i64 = digits
            .parse()
            .map_err(|_| Error::parse(start, format!("integer '{digits}' out of range")))?;
        Ok(if negative { -value } else { value })
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::parse(self.offset(), format!("unexpected '{c}'"))),
        }
    }
}

/// Parses `a` or `a^i`, returning the raw exponent.
fn rotation(cur: &mut Cursor) -> Result<i64> {
    if !cur.eat('a') {
        return Err(Error::parse(cur.offset(), "expected 'a'"));
    }
    if cur.eat('^') {
        cur.integer()
    } else {
        Ok(1)
    }
}

fn dihedral_term(offset: usize, term: &str, n: usize, allow_b: bool) -> Result<DihedralElement> {
    let mut cur = Cursor::new(offset, term);
    let elem = match cur.peek() {
        Some('1') => {
            cur.pos += 1;
            DihedralElement::IDENTITY
        }
        Some('a') => DihedralElement::rotation(rotation(&mut cur)?, n),
        Some('b') if allow_b => {
            cur.pos += 1;
            if cur.done() {
                DihedralElement::reflection(0, n)
            } else {
                cur.eat('*');
                DihedralElement::reflection(rotation(&mut cur)?, n)
            }
        }
        Some(c) => {
            return Err(Error::parse(cur.offset(), format!("unexpected '{c}'")));
        }
        None => return Err(Error::parse(offset, "empty term")),
    };
    cur.expect_end()?;
    Ok(elem)
}

/// Parses a product of 1-based cycles into 0-based cycles.
fn cycle_term(offset: usize, term: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let bytes = term.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b if b.is_ascii_whitespace() => i += 1,
            b'(' => {
                let close = term[i..]
                    .find(')')
                    .map(|k| i + k)
                    .ok_or_else(|| Error::parse(offset + i, "unclosed '('"))?;
                let mut cycle = Vec::new();
                let inner = &term[i + 1..close];
                let mut pos = i + 1;
                for piece in inner.split(|c: char| c.is_whitespace() || c == ',') {
                    if !piece.is_empty() {
                        let point: usize = piece.parse().map_err(|_| {
                            Error::parse(offset + pos, format!("invalid point '{piece}'"))
                        })?;
                        if point == 0 {
                            return Err(Error::parse(offset + pos, "points are 1-based"));
                        }
                        cycle.push(point - 1);
                    }
                    pos += piece.len() + 1;
                }
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
                i = close + 1;
            }
            _ => {
                return Err(Error::parse(
                    offset + i,
                    format!("unexpected '{}'", term[i..].chars().next().unwrap_or(' ')),
                ));
            }
        }
    }
    Ok(cycles)
}

/// Parses a comma-separated list of permutations in 1-based cycle notation.
///
/// When `degree` is `None` the degree is the largest point mentioned.
pub fn parse_permutations(input: &str, degree: Option<usize>) -> Result<Vec<Permutation>> {
    let terms = split_terms(input)?;
    let mut parsed = Vec::with_capacity(terms.len());
    for &(offset, term) in &terms {
        parsed.push((offset, cycle_term(offset, term)?));
    }
    let max_point = parsed
        .iter()
        .flat_map(|(_, cycles)| cycles.iter().flatten())
        .map(|&x| x + 1)
        .max()
        .unwrap_or(1);
    let degree = match degree {
        Some(d) if d < max_point => {
            return Err(Error::parse(
                0,
                format!("point {max_point} exceeds degree {d}"),
            ))
        }
        Some(d) => d,
        None => max_point,
    };
    parsed
        .into_iter()
        .map(|(offset, cycles)| {
            Permutation::from_cycles(&cycles, degree)
                .map_err(|e| Error::parse(offset, e.to_string()))
        })
        .collect()
}

/// Parses a generator list into element indices of `group`.
pub fn parse_elements(group: &FiniteGroup, input: &str) -> Result<Vec<usize>> {
    let terms = split_terms(input)?;
    let mut out = Vec::with_capacity(terms.len());
    for (offset, term) in terms {
        let element = if let Some(n) = group.dihedral_n() {
            GroupElement::Dihedral(dihedral_term(offset, term, n, true)?)
        } else if let Some(n) = group.cyclic_n() {
            match term.parse::<i64>() {
                Ok(i) => GroupElement::Cyclic(super::dihedral::reduce(i, n)),
                Err(_) => GroupElement::Cyclic(dihedral_term(offset, term, n, false)?.exp),
            }
        } else if let Some(degree) = group.permutation_degree() {
            let cycles = cycle_term(offset, term)?;
            let p = Permutation::from_cycles(&cycles, degree)
                .map_err(|e| Error::parse(offset, e.to_string()))?;
            GroupElement::Permutation(p)
        } else {
            let idx = match group.table_lookup(term) {
                Some(i) => i,
                None => term
                    .parse::<usize>()
                    .map_err(|_| Error::parse(offset, format!("unknown element '{term}'")))?,
            };
            GroupElement::Table(idx)
        };
        let idx = group
            .index_of(&element)
            .ok_or_else(|| Error::parse(offset, format!("'{term}' is not in {group}")))?;
        out.push(idx);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_tokens() {
        let g = FiniteGroup::dihedral(6).unwrap();
        let parsed = parse_elements(&g, "a, a^5, b*a^2").unwrap();
        assert_eq!(parsed, vec![1, 5, 8]);
        // whitespace, reduction, identity, bare b, juxtaposition
        let parsed = parse_elements(&g, " 1 ,a ^ 7, b, ba^-1 , b * a").unwrap();
        assert_eq!(parsed, vec![0, 1, 6, 11, 7]);
    }

    #[test]
    fn dihedral_errors_cite_offsets() {
        let g = FiniteGroup::dihedral(6).unwrap();
        assert_eq!(
            parse_elements(&g, "a, c").unwrap_err(),
            Error::parse(3, "unexpected 'c'")
        );
        assert!(matches!(
            parse_elements(&g, "a^x"),
            Err(Error::Parse { offset: 2, .. })
        ));
        assert!(matches!(
            parse_elements(&g, "a,,b"),
            Err(Error::Parse { offset: 2, .. })
        ));
    }

    #[test]
    fn cyclic_rejects_b() {
        let g = FiniteGroup::cyclic(10).unwrap();
        assert_eq!(parse_elements(&g, "a, a^9, a^3").unwrap(), vec![1, 9, 3]);
        assert!(parse_elements(&g, "b").is_err());
        assert_eq!(
            parse_elements(&g, "1, 9, -3, 13").unwrap(),
            vec![1, 9, 7, 3]
        );
    }

    #[test]
    fn permutation_cycles() {
        let perms = parse_permutations("(1 2 3), (1 3 2), (1 2)(3 4)", None).unwrap();
        assert_eq!(perms.len(), 3);
        assert_eq!(perms[0].degree(), 4);
        assert_eq!(perms[2].images(), &[1, 0, 3, 2]);
        // commas inside a cycle are point separators
        let perms = parse_permutations("(1,2,3)", Some(3)).unwrap();
        assert_eq!(perms[0].images(), &[1, 2, 0]);
        assert!(parse_permutations("(1 2", None).is_err());
        assert!(parse_permutations("(0 1)", None).is_err());
        assert!(parse_permutations("(1 5)", Some(4)).is_err());
    }

    #[test]
    fn permutation_elements_in_closure() {
        let gens = parse_permutations("(1 2 3), (1 2)(3 4)", None).unwrap();
        let g = FiniteGroup::permutation_closure(&gens, 100).unwrap();
        let idx = parse_elements(&g, "(1 3 2), ()").unwrap();
        assert_eq!(idx[1], 0);
        assert_eq!(g.label(idx[0]), "(1 3 2)");
        // odd permutation is not in A4
        assert!(matches!(
            parse_elements(&g, "(1 2)"),
            Err(Error::Parse { offset: 0, .. })
        ));
    }

    #[test]
    fn table_tokens() {
        let g = FiniteGroup::from_table(
            vec![vec![0, 1], vec![1, 0]],
            Some(vec!["e".into(), "x".into()]),
        )
        .unwrap();
        assert_eq!(parse_elements(&g, "x, 1, e").unwrap(), vec![1, 1, 0]);
        assert!(parse_elements(&g, "2").is_err());
    }
}
