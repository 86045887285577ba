//! Recursive-descent parser.
//!
//! ```text
//! identity := "k" "=" INT ":" "g" "[" index "]" "=" term ("+" term)*
//! term     := [INT ["*"]] ("g" | "j") "[" index "]"
//! index    := product ("+" product)*
//! product  := factor (["*"] factor)*
//! factor   := INT | "i" | "(" index ")"
//! ```
//!
//! Positions are 1-based character columns.

use super::{Affine, DslError, IdentityAst, Symbol, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(char),
    Punct(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(c) | Tok::Punct(c) => format!("'{c}'"),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(position: usize, message: impl Into<String>) -> DslError {
    DslError::Syntax { position, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut p = 0;
    while p < chars.len() {
        let c = chars[p];
        let col = p + 1;
        if c.is_whitespace() {
            p += 1;
        } else if c.is_ascii_digit() {
            let start = p;
            while p < chars.len() && chars[p].is_ascii_digit() {
                p += 1;
            }
            let s: String = chars[start..p].iter().collect();
            let n = s.parse::<i64>().map_err(|_| syntax(col, format!("integer {s} is too large")))?;
            toks.push((Tok::Int(n), col));
        } else if matches!(c, 'k' | 'g' | 'j' | 'i') {
            toks.push((Tok::Ident(c), col));
            p += 1;
        } else if "=:[]()+*".contains(c) {
            toks.push((Tok::Punct(c), col));
            p += 1;
        } else {
            return Err(syntax(col, format!("unexpected character '{c}'")));
        }
    }
    toks.push((Tok::End, chars.len() + 1));
    Ok(toks)
}

/// Polynomial in `i`, coefficient by degree.
type IndexPoly = Vec<i64>;

fn poly_add(a: &IndexPoly, b: &IndexPoly) -> Option<IndexPoly> {
    let n = a.len().max(b.len());
    (0..n).map(|d| a.get(d).copied().unwrap_or(0).checked_add(b.get(d).copied().unwrap_or(0))).collect()
}

fn poly_mul(a: &IndexPoly, b: &IndexPoly) -> Option<IndexPoly> {
    if a.is_empty() || b.is_empty() {
        return Some(Vec::new());
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x.checked_mul(*y)?)?;
        }
    }
    Some(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        syntax(self.col(), format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect_punct(&mut self, c: char) -> Result<(), DslError> {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn expect_ident(&mut self, c: char) -> Result<(), DslError> {
        if *self.peek() == Tok::Ident(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn expect_int(&mut self) -> Result<i64, DslError> {
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn identity(&mut self) -> Result<IdentityAst, DslError> {
        self.expect_ident('k')?;
        self.expect_punct('=')?;
        let k_col = self.col();
        let k = self.expect_int()?;
        let k =
            u32::try_from(k).ok().filter(|&k| k >= 1).ok_or_else(|| syntax(k_col, "k must be a positive integer"))?;
        self.expect_punct(':')?;
        self.expect_ident('g')?;
        let lhs = self.bracketed_index()?;
        self.expect_punct('=')?;
        let mut rhs = vec![self.term()?];
        while *self.peek() == Tok::Punct('+') {
            self.bump();
            rhs.push(self.term()?);
        }
        if *self.peek() != Tok::End {
            return Err(self.unexpected("'+' or end of input"));
        }
        Ok(IdentityAst { k, lhs, rhs })
    }

    fn term(&mut self) -> Result<Term, DslError> {
        let coeff = match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() == Tok::Punct('*') {
                    self.bump();
                }
                n
            }
            _ => 1,
        };
        let symbol = match self.peek() {
            Tok::Ident('j') => Symbol::J,
            Tok::Ident('g') => Symbol::G,
            _ => return Err(self.unexpected("'j' or 'g'")),
        };
        self.bump();
        let index = self.bracketed_index()?;
        Ok(Term { coeff, symbol, index })
    }

    fn bracketed_index(&mut self) -> Result<Affine, DslError> {
        self.expect_punct('[')?;
        let start = self.col();
        let p = self.index()?;
        self.expect_punct(']')?;
        let mut p = p;
        while p.last() == Some(&0) {
            p.pop();
        }
        if p.len() > 2 {
            return Err(DslError::NonAffineIndex { position: start });
        }
        Ok(Affine::new(p.get(1).copied().unwrap_or(0), p.first().copied().unwrap_or(0)))
    }

    fn overflow(&self) -> DslError {
        syntax(self.col(), "index arithmetic overflows")
    }

    fn index(&mut self) -> Result<IndexPoly, DslError> {
        let mut acc = self.product()?;
        while *self.peek() == Tok::Punct('+') {
            self.bump();
            let rhs = self.product()?;
            acc = poly_add(&acc, &rhs).ok_or_else(|| self.overflow())?;
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident('i') | Tok::Punct('('))
    }

    fn product(&mut self) -> Result<IndexPoly, DslError> {
        let mut acc = self.factor()?;
        loop {
            if *self.peek() == Tok::Punct('*') {
                self.bump();
            } else if !self.starts_factor() {
                break;
            }
            let rhs = self.factor()?;
            acc = poly_mul(&acc, &rhs).ok_or_else(|| self.overflow())?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<IndexPoly, DslError> {
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(vec![n])
            }
            Tok::Ident('i') => {
                self.bump();
                Ok(vec![0, 1])
            }
            Tok::Punct('(') => {
                self.bump();
                let inner = self.index()?;
                self.expect_punct(')')?;
                Ok(inner)
            }
            _ => Err(self.unexpected("an integer, 'i' or '('")),
        }
    }
}

/// Parse a single identity.
pub fn parse(text: &str) -> Result<IdentityAst, DslError> {
    let toks = lex(text)?;
    Parser { toks, pos: 0 }.identity()
}

/// Parse an identity file: one identity per line, `#` starts a comment.
pub fn parse_file(text: &str) -> Result<Vec<IdentityAst>, DslError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let ast = parse(line).map_err(|e| DslError::AtLine { line: n + 1, source: Box::new(e) })?;
        out.push(ast);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_k2_row() {
        let ast = parse("k=2: g[4*i+2] = 2*j[2*(4*i+2)]").unwrap();
        assert_eq!(ast.k, 2);
        assert_eq!(ast.lhs, Affine::new(4, 2));
        assert_eq!(ast.rhs, vec![Term { coeff: 2, symbol: Symbol::J, index: Affine::new(8, 4) }]);
    }

    #[test]
    fn two_term_row() {
        let ast = parse("k=3: g[6*i+6] = 3*j[3*(6*i+6)] + j[2*i+2]").unwrap();
        assert_eq!(ast.rhs.len(), 2);
        assert_eq!(ast.rhs[0].index, Affine::new(18, 18));
        assert_eq!(ast.rhs[1], Term { coeff: 1, symbol: Symbol::J, index: Affine::new(2, 2) });
    }

    #[test]
    fn implicit_multiplication() {
        let a = parse("k=4: g[8i+4] = 4*j[4(8i+4)] + 2j[2(2i+4)]").unwrap();
        let b = parse("k=4: g[8*i+4] = 4*j[4*(8*i+4)] + 2*j[2*(2*i+4)]").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse("k=1: g[(i+1)2] = j[i2+2]").unwrap().lhs, Affine::new(2, 2));
    }

    #[test]
    fn truncated_input_reports_column() {
        assert_eq!(
            parse("k=2: g[4i+"),
            Err(DslError::Syntax {
                position: 11,
                message: "expected an integer, 'i' or '(', found end of input".into()
            })
        );
    }

    #[test]
    fn other_syntax_errors() {
        assert!(matches!(parse("k=2 g[2] = j[4]"), Err(DslError::Syntax { position: 5, .. })));
        assert!(matches!(parse("k=2: g[2] = x[4]"), Err(DslError::Syntax { position: 13, .. })));
        assert!(matches!(parse("k=0: g[2] = j[4]"), Err(DslError::Syntax { position: 3, .. })));
        assert!(matches!(parse("k=2: g[2] = j[4] j[2]"), Err(DslError::Syntax { .. })));
        assert!(matches!(parse("k=2: g[2] = j[(4]"), Err(DslError::Syntax { .. })));
        assert!(matches!(parse("k=2: g[99999999999999999999] = j[4]"), Err(DslError::Syntax { .. })));
    }

    #[test]
    fn non_affine_index() {
        assert_eq!(parse("k=2: g[i*i+2] = j[4]"), Err(DslError::NonAffineIndex { position: 8 }));
        // cancels back to affine is fine: 0*i*i
        assert_eq!(parse("k=2: g[0*i*i+2] = j[4]").unwrap().lhs, Affine::new(0, 2));
    }

    #[test]
    fn file_with_comments() {
        let text = "# header\n\nk=2: g[4i+2] = 2j[2(4i+2)]  # row one\nk=2: g[4i+4] = 2j[2(4i+4)] + j[2i+2]\n";
        assert_eq!(parse_file(text).unwrap().len(), 2);
        let err = parse_file("k=2: g[2] = j[4]\nk=2: oops\n").unwrap_err();
        assert!(matches!(err, DslError::AtLine { line: 2, .. }));
    }

    #[test]
    fn prints_canonical_form() {
        let ast = parse("k=3: g[6i+6] = 3*j[3*(6i+6)] + j[2i+2]").unwrap();
        assert_eq!(ast.to_string(), "k=3: g[6*i+6] = 3*j[18*i+18] + j[2*i+2]");
        assert_eq!(parse(&ast.to_string()).unwrap(), ast);
        assert_eq!(parse("k=1: g[i] = g[0*i+2] + j[1*i]").unwrap().to_string(), "k=1: g[i] = g[2] + j[i]");
    }
}
