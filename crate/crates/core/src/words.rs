//! Textual grammars for words in the two groups.
//!
//! Ptolemy-Thompson words: letters `a`, `b`, inverses `a'`, `b'`,
//! parenthesized groups and caret powers, e.g. `(b a)^5`, `a^4`, `b'`.
//! Rightmost letter acts first.
//!
//! Kashaev words: letters `A[j]`, `T[j][k]`, `P(name)` with rational
//! subscripts (`A[-1]`, `T[1/2][3]`), inverses by a trailing `'`, the same
//! group/power syntax. Permutation names: `id`, `ga`, `gb`, `swap(j,k)`, or
//! an inline patch `{j:k, ...}`.

use thiserror::Error;

use crate::dotted::{KLetter, QPermutation};
use crate::marked::{tword_inverse, TLetter, TWord};
use crate::rational::ExtendedRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {found:?} at byte {at}")]
    Unexpected { at: usize, found: char },
    #[error("unexpected end of input")]
    Eof,
    #[error("bad rational at byte {at}")]
    BadRational { at: usize },
    #[error("unknown permutation name {name:?} at byte {at}")]
    UnknownPermutation { at: usize, name: String },
    #[error("subscripts of a decorated flip must be distinct (at byte {at})")]
    EqualSubscripts { at: usize },
    #[error("label must be a nonzero rational (at byte {at})")]
    ZeroLabel { at: usize },
}

/// The five defining relators of the Ptolemy-Thompson group, as free words:
/// `(ba)^5`, `a^4`, `b^3`, and the two commutators
/// `[bab, a^2 b a b a^2]`, `[bab, a^2 b a^2 b a b a^2 b^2 a^2]`.
pub fn t_relators() -> [TWord; 5] {
    let a = TLetter::Alpha;
    let b = TLetter::Beta;
    let pent: TWord = std::iter::repeat([b, a]).take(5).flatten().collect();
    let alpha4: TWord = vec![a; 4];
    let beta3: TWord = vec![b; 3];
    let x: TWord = vec![b, a, b];
    let y1: TWord = vec![a, a, b, a, b, a, a];
    let y2: TWord = vec![a, a, b, a, a, b, a, b, a, a, b, b, a, a];
    [pent, alpha4, beta3, commutator(&x, &y1), commutator(&x, &y2)]
}

/// `[x, y] = x y x⁻¹ y⁻¹`.
pub fn commutator(x: &[TLetter], y: &[TLetter]) -> TWord {
    let mut w = x.to_vec();
    w.extend_from_slice(y);
    w.extend(tword_inverse(x));
    w.extend(tword_inverse(y));
    w
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(ParseError::Unexpected {
                at: self.pos - c.len_utf8(),
                found: c,
            }),
            None => Err(ParseError::Eof),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.bump();
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError::BadRational { at: start })
    }

    fn rational(&mut self) -> Result<ExtendedRational, ParseError> {
        let start = self.pos;
        if self.src[self.pos..].starts_with("inf") {
            self.pos += 3;
            return Ok(ExtendedRational::infinity());
        }
        let num = self.integer()?;
        let den = if self.peek() == Some('/') {
            self.bump();
            self.integer()?
        } else {
            1
        };
        ExtendedRational::reduce(num, den).map_err(|_| ParseError::BadRational { at: start })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        self.src[start..self.pos].to_owned()
    }
}

/// Postfix modifiers shared by both grammars: `'` inverts, `^n` raises to a
/// (possibly negative) power.
fn apply_postfix<L: Clone>(
    cursor: &mut Cursor,
    mut block: Vec<L>,
    invert: fn(&[L]) -> Vec<L>,
) -> Result<Vec<L>, ParseError> {
    loop {
        match cursor.peek() {
            Some('\'') => {
                cursor.bump();
                block = invert(&block);
            }
            Some('^') => {
                cursor.bump();
                let n = cursor.integer()?;
                let base = if n < 0 { invert(&block) } else { block.clone() };
                block = Vec::new();
                for _ in 0..n.unsigned_abs() {
                    block.extend(base.iter().cloned());
                }
            }
            _ => return Ok(block),
        }
    }
}

pub fn parse_tword(src: &str) -> Result<TWord, ParseError> {
    let mut cursor = Cursor::new(src);
    let w = parse_tword_seq(&mut cursor, false)?;
    cursor.skip_ws();
    match cursor.peek() {
        None => Ok(w),
        Some(c) => Err(ParseError::Unexpected {
            at: cursor.pos,
            found: c,
        }),
    }
}

fn parse_tword_seq(cursor: &mut Cursor, in_group: bool) -> Result<TWord, ParseError> {
    let mut word = TWord::new();
    loop {
        cursor.skip_ws();
        match cursor.peek() {
            None => return Ok(word),
            Some(')') if in_group => return Ok(word),
            Some('(') => {
                cursor.bump();
                let inner = parse_tword_seq(cursor, true)?;
                cursor.expect(')')?;
                word.extend(apply_postfix(cursor, inner, |w| tword_inverse(w))?);
            }
            Some('a') => {
                cursor.bump();
                word.extend(apply_postfix(cursor, vec![TLetter::Alpha], |w| {
                    tword_inverse(w)
                })?);
            }
            Some('b') => {
                cursor.bump();
                word.extend(apply_postfix(cursor, vec![TLetter::Beta], |w| {
                    tword_inverse(w)
                })?);
            }
            Some(c) => {
                return Err(ParseError::Unexpected {
                    at: cursor.pos,
                    found: c,
                })
            }
        }
    }
}

/// Resolver for named permutations in `P(...)`.
pub trait PermResolver {
    fn resolve(&self, name: &str) -> Option<QPermutation>;
}

impl<F: Fn(&str) -> Option<QPermutation>> PermResolver for F {
    fn resolve(&self, name: &str) -> Option<QPermutation> {
        self(name)
    }
}

fn kword_inverse(w: &[KLetter]) -> Vec<KLetter> {
    w.iter().rev().map(|l| l.inverse()).collect()
}

pub fn parse_kword(src: &str, resolver: &dyn PermResolver) -> Result<Vec<KLetter>, ParseError> {
    let mut cursor = Cursor::new(src);
    let w = parse_kword_seq(&mut cursor, resolver, false)?;
    cursor.skip_ws();
    match cursor.peek() {
        None => Ok(w),
        Some(c) => Err(ParseError::Unexpected {
            at: cursor.pos,
            found: c,
        }),
    }
}

fn parse_kword_seq(
    cursor: &mut Cursor,
    resolver: &dyn PermResolver,
    in_group: bool,
) -> Result<Vec<KLetter>, ParseError> {
    let mut word = Vec::new();
    loop {
        cursor.skip_ws();
        match cursor.peek() {
            None => return Ok(word),
            Some(')') if in_group => return Ok(word),
            Some('(') => {
                cursor.bump();
                let inner = parse_kword_seq(cursor, resolver, true)?;
                cursor.expect(')')?;
                word.extend(apply_postfix(cursor, inner, |w| kword_inverse(w))?);
            }
            Some('A') => {
                cursor.bump();
                cursor.expect('[')?;
                let at = cursor.pos;
                let j = cursor.rational()?;
                cursor.expect(']')?;
                let j = nonzero_label(j, at)?;
                word.extend(apply_postfix(cursor, vec![KLetter::DotRotation(j)], |w| {
                    kword_inverse(w)
                })?);
            }
            Some('T') => {
                cursor.bump();
                cursor.expect('[')?;
                let at = cursor.pos;
                let j = cursor.rational()?;
                cursor.expect(']')?;
                cursor.expect('[')?;
                let k = cursor.rational()?;
                cursor.expect(']')?;
                let j = nonzero_label(j, at)?;
                let k = nonzero_label(k, at)?;
                if j == k {
                    return Err(ParseError::EqualSubscripts { at });
                }
                word.extend(apply_postfix(
                    cursor,
                    vec![KLetter::DecoratedFlip(j, k)],
                    |w| kword_inverse(w),
                )?);
            }
            Some('P') => {
                cursor.bump();
                cursor.expect('(')?;
                let gamma = parse_permutation(cursor, resolver)?;
                cursor.expect(')')?;
                word.extend(apply_postfix(cursor, vec![KLetter::Relabel(gamma)], |w| {
                    kword_inverse(w)
                })?);
            }
            Some(c) => {
                return Err(ParseError::Unexpected {
                    at: cursor.pos,
                    found: c,
                })
            }
        }
    }
}

fn nonzero_label(j: ExtendedRational, at: usize) -> Result<ExtendedRational, ParseError> {
    if j.is_zero() || j.is_infinity() {
        Err(ParseError::ZeroLabel { at })
    } else {
        Ok(j)
    }
}

fn parse_permutation(
    cursor: &mut Cursor,
    resolver: &dyn PermResolver,
) -> Result<QPermutation, ParseError> {
    cursor.skip_ws();
    match cursor.peek() {
        Some('{') => {
            cursor.bump();
            let mut pairs = Vec::new();
            loop {
                cursor.skip_ws();
                if cursor.peek() == Some('}') {
                    cursor.bump();
                    break;
                }
                let at = cursor.pos;
                let from = nonzero_label(cursor.rational()?, at)?;
                cursor.skip_ws();
                cursor.expect(':')?;
                cursor.skip_ws();
                let at = cursor.pos;
                let to = nonzero_label(cursor.rational()?, at)?;
                pairs.push((from, to));
                cursor.skip_ws();
                if cursor.peek() == Some(',') {
                    cursor.bump();
                }
            }
            let at = cursor.pos;
            QPermutation::from_patch(pairs).map_err(|_| ParseError::BadRational { at })
        }
        _ => {
            let at = cursor.pos;
            let name = cursor.ident();
            match name.as_str() {
                "id" => Ok(QPermutation::identity()),
                "swap" => {
                    cursor.expect('(')?;
                    let ja = cursor.pos;
                    let j = nonzero_label(cursor.rational()?, ja)?;
                    cursor.skip_ws();
                    cursor.expect(',')?;
                    cursor.skip_ws();
                    let ka = cursor.pos;
                    let k = nonzero_label(cursor.rational()?, ka)?;
                    cursor.expect(')')?;
                    if j == k {
                        return Err(ParseError::EqualSubscripts { at: ja });
                    }
                    Ok(QPermutation::transposition(&j, &k))
                }
                _ => resolver
                    .resolve(&name)
                    .ok_or(ParseError::UnknownPermutation { at, name }),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::er;

    #[test]
    fn tword_grammar() {
        use TLetter::*;
        assert_eq!(parse_tword("").unwrap(), Vec::<TLetter>::new());
        assert_eq!(parse_tword("a b a'").unwrap(), vec![Alpha, Beta, AlphaInv]);
        assert_eq!(parse_tword("a^4").unwrap(), vec![Alpha; 4]);
        assert_eq!(
            parse_tword("(b a)^2").unwrap(),
            vec![Beta, Alpha, Beta, Alpha]
        );
        assert_eq!(parse_tword("(b a)'").unwrap(), vec![AlphaInv, BetaInv]);
        assert_eq!(parse_tword("a^-2").unwrap(), vec![AlphaInv, AlphaInv]);
        assert!(parse_tword("c").is_err());
    }

    #[test]
    fn relators_shape() {
        let rs = t_relators();
        assert_eq!(rs[0].len(), 10);
        assert_eq!(rs[1].len(), 4);
        assert_eq!(rs[2].len(), 3);
        assert_eq!(rs[3].len(), 3 + 7 + 3 + 7);
        assert_eq!(rs[4].len(), 3 + 14 + 3 + 14);
    }

    #[test]
    fn kword_grammar() {
        let none = |_: &str| None::<QPermutation>;
        let w = parse_kword("A[-1] T[-1][1]' A[1] P(swap(1,-1))", &none).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w[0], KLetter::DotRotation(er(-1, 1)));
        assert_eq!(w[1], KLetter::DecoratedFlip(er(-1, 1), er(1, 1)).inverse());
        assert!(parse_kword("T[1][1]", &none).is_err());
        assert!(parse_kword("A[0]", &none).is_err());
        assert!(parse_kword("P(ga)", &none).is_err());
        let w = parse_kword("(A[1] A[2])^2", &none).unwrap();
        assert_eq!(w.len(), 4);
        let w = parse_kword("P({1:2, 2:1})", &none).unwrap();
        assert_eq!(w.len(), 1);
    }
}
