//! Text syntax for monomials: juxtaposed factors such as
//! `E(1,2)^(2) F(3,1) H(2;-1|2) K(1)^-1 1[2,1,0]`.

use crate::error::{Error, Result};
use crate::rootdata::Root;
use crate::scalars::ScalarRing;

use super::{KostantFactor, KostantMonomial};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_whitespace() || self.s[self.pos] == b'*')
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected an integer"))
    }

    fn index(&mut self) -> Result<usize> {
        let k = self.int()?;
        if k < 1 {
            return Err(self.err("indices start at 1"));
        }
        Ok(k as usize)
    }

    fn natural(&mut self) -> Result<u32> {
        let k = self.int()?;
        u32::try_from(k).map_err(|_| self.err("expected a natural number"))
    }

    /// Optional `^(m)` or `^m`.
    fn exponent(&mut self) -> Result<Option<i64>> {
        if !self.eat(b'^') {
            return Ok(None);
        }
        if self.eat(b'(') {
            let k = self.int()?;
            self.expect(b')')?;
            Ok(Some(k))
        } else {
            Ok(Some(self.int()?))
        }
    }
}

/// Parses the monomial syntax for the given ring.
///
/// `E(i,j)` and `F(i,j)` name the positive and negative root vector on `{i, j}`
/// whichever way the indices are written; `X(i,j)` is the root vector for
/// `e_i - e_j` of either sign. `H(i;c|t)` is a Cartan binomial (`H(i|t)` means
/// `c = 0`); `H(i,j;c|t)` and `K(i,j;c|t)` are the root-indexed binomials.
pub fn parse_monomial(text: &str, n: usize, ring: ScalarRing) -> Result<KostantMonomial> {
    let mut cur = Cursor {
        s: text.as_bytes(),
        pos: 0,
    };
    let mut factors = Vec::new();
    let check_idx = |k: usize, cur: &Cursor| -> Result<usize> {
        if k > n {
            Err(cur.err(&format!("index {k} exceeds n = {n}")))
        } else {
            Ok(k)
        }
    };
    loop {
        cur.skip_ws();
        let Some(c) = cur.peek() else { break };
        cur.pos += 1;
        match c {
            b'E' | b'F' | b'X' => {
                cur.expect(b'(')?;
                let a = check_idx(cur.index()?, &cur)?;
                cur.expect(b',')?;
                let b = check_idx(cur.index()?, &cur)?;
                cur.expect(b')')?;
                if a == b {
                    return Err(cur.err("root indices must differ"));
                }
                let root = match c {
                    b'E' => Root::new(a.min(b), a.max(b)),
                    b'F' => Root::new(a.max(b), a.min(b)),
                    _ => Root::new(a, b),
                };
                let m = cur.exponent()?.unwrap_or(1);
                let m = u32::try_from(m).map_err(|_| cur.err("divided powers need m >= 0"))?;
                factors.push(KostantFactor::DividedRootPower { root, m });
            }
            b'H' | b'K' => {
                cur.expect(b'(')?;
                let a = check_idx(cur.index()?, &cur)?;
                let second = if cur.eat(b',') {
                    Some(check_idx(cur.index()?, &cur)?)
                } else {
                    None
                };
                if c == b'K' && second.is_none() && cur.eat(b')') {
                    let e = cur.exponent()?.unwrap_or(1);
                    if ring != ScalarRing::Quantum {
                        return Err(cur.err("K(i) exists only in the quantum ring"));
                    }
                    factors.push(KostantFactor::KPower { i: a, e });
                    continue;
                }
                let shift = if cur.eat(b';') { cur.int()? } else { 0 };
                cur.expect(b'|')?;
                let t = cur.natural()?;
                cur.expect(b')')?;
                match second {
                    None => factors.push(KostantFactor::CartanBinomial { i: a, c: shift, t }),
                    Some(b) => {
                        if a == b {
                            return Err(cur.err("root indices must differ"));
                        }
                        let root = Root::new(a, b);
                        factors.push(match ring {
                            ScalarRing::Classical => {
                                KostantFactor::RootHBinomial { root, c: shift, t }
                            }
                            ScalarRing::Quantum => {
                                KostantFactor::RootKBinomial { root, c: shift, t }
                            }
                        });
                    }
                }
            }
            b'1' => {
                cur.expect(b'[')?;
                let mut w = Vec::new();
                loop {
                    w.push(cur.int()?);
                    if cur.eat(b']') {
                        break;
                    }
                    cur.expect(b',')?;
                }
                if w.len() != n {
                    return Err(cur.err(&format!("composition needs {n} parts")));
                }
                factors.push(KostantFactor::Idempotent(w));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "unexpected `{}` at offset {}",
                    c as char,
                    cur.pos - 1
                )))
            }
        }
    }
    Ok(KostantMonomial::new(factors))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_factor_kind() {
        let m = parse_monomial(
            "E(1,2)^(2) F(1,3) X(3,2)^2 H(2;-1|2) K(1)^-1 K(1,3;2|1) 1[1,0,2]",
            3,
            ScalarRing::Quantum,
        )
        .unwrap();
        assert_eq!(
            m.factors,
            vec![
                KostantFactor::root(Root::new(1, 2), 2),
                KostantFactor::root(Root::new(3, 1), 1),
                KostantFactor::root(Root::new(3, 2), 2),
                KostantFactor::CartanBinomial { i: 2, c: -1, t: 2 },
                KostantFactor::KPower { i: 1, e: -1 },
                KostantFactor::RootKBinomial {
                    root: Root::new(1, 3),
                    c: 2,
                    t: 1
                },
                KostantFactor::Idempotent(vec![1, 0, 2]),
            ]
        );
        let again = parse_monomial(&m.to_string(), 3, ScalarRing::Quantum).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_monomial("K(1)", 2, ScalarRing::Classical).is_err());
        assert!(parse_monomial("E(1,1)", 2, ScalarRing::Classical).is_err());
        assert!(parse_monomial("E(1,3)", 2, ScalarRing::Classical).is_err());
        assert!(parse_monomial("1[1,1]", 3, ScalarRing::Classical).is_err());
        assert!(parse_monomial("Q", 2, ScalarRing::Classical).is_err());
        assert_eq!(
            parse_monomial("  ", 2, ScalarRing::Classical).unwrap(),
            KostantMonomial::empty()
        );
    }
}
