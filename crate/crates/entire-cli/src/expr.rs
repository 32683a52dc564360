//! Expression grammar for ring elements.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' unary) | juxtaposed-unary)*
//! unary := '-' unary | power
//! power := atom ('^' nat)*            -- exponent chain folds right
//! atom  := nat | 'i' | 'j' | 'zeta' '(' nat ',' nat ')' | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies (`3i`, `2zeta(5,1)`, `(1+i)(1-i)`), `^` binds
//! tighter than unary minus, and division does not exist. Errors carry the
//! byte offset and the token set that would have been accepted.

use num_bigint::BigInt;

use crate::output::Failure;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(BigInt),
    SymI,
    SymJ,
    Zeta(u32, u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

struct Lexer {
    tokens: Vec<(Token, usize)>,
    end: usize,
}

fn lex(text: &str) -> Result<Lexer, Failure> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' => pos += 1,
            '+' => { tokens.push((Token::Plus, pos)); pos += 1; }
            '-' => { tokens.push((Token::Minus, pos)); pos += 1; }
            '*' => { tokens.push((Token::Star, pos)); pos += 1; }
            '^' => { tokens.push((Token::Caret, pos)); pos += 1; }
            '(' => { tokens.push((Token::LParen, pos)); pos += 1; }
            ')' => { tokens.push((Token::RParen, pos)); pos += 1; }
            ',' => { tokens.push((Token::Comma, pos)); pos += 1; }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let digits = &text[start..pos];
                tokens.push((Token::Int(digits.parse().expect("digits")), start));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_alphabetic() {
                    pos += 1;
                }
                tokens.push((Token::Ident(text[start..pos].to_string()), start));
            }
            _ => {
                return Err(Failure::syntax(
                    pos,
                    &["digit", "symbol", "operator", "parenthesis"],
                    format!("unexpected character {c:?}"),
                ))
            }
        }
    }
    Ok(Lexer { tokens, end: bytes.len() })
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.cursor).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(t, _)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, want: Token, name: &str) -> Result<(), Failure> {
        if self.peek() == Some(&want) {
            self.cursor += 1;
            Ok(())
        } else {
            Err(Failure::syntax(self.offset(), &[name], format!("expected {name}")))
        }
    }

    fn expect_nat(&mut self, what: &str) -> Result<BigInt, Failure> {
        if matches!(self.peek(), Some(Token::Int(_))) {
            match self.bump() {
                Some(Token::Int(n)) => Ok(n),
                _ => unreachable!("peeked an integer"),
            }
        } else {
            Err(Failure::syntax(self.offset(), &["integer"], format!("expected {what}")))
        }
    }

    fn expect_small_nat(&mut self, what: &str) -> Result<u32, Failure> {
        let offset = self.offset();
        let n = self.expect_nat(what)?;
        u32::try_from(&n).map_err(|_| {
            Failure::syntax(offset, &["small integer"], format!("{what} {n} is too large"))
        })
    }

    fn parse_expr(&mut self) -> Result<Expr, Failure> {
        let mut lhs = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.cursor += 1;
                    let rhs = self.parse_term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Token::Minus) => {
                    self.cursor += 1;
                    let rhs = self.parse_term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, Failure> {
        let mut lhs = self.parse_unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.cursor += 1;
                    let rhs = self.parse_unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                // juxtaposition: an atom start directly after a factor
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    let rhs = self.parse_unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_unary(&mut self) -> Result<Expr, Failure> {
        if self.peek() == Some(&Token::Minus) {
            self.cursor += 1;
            let inner = self.parse_unary()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.parse_power()
    }

    fn parse_power(&mut self) -> Result<Expr, Failure> {
        let base = self.parse_atom()?;
        let mut exponents: Vec<(u32, usize)> = Vec::new();
        while self.peek() == Some(&Token::Caret) {
            self.cursor += 1;
            let offset = self.offset();
            exponents.push((self.expect_small_nat("exponent")?, offset));
        }
        if exponents.is_empty() {
            return Ok(base);
        }
        // ^ is right-associative: a^b^c = a^(b^c), folded on the spot
        let mut total: u32 = exponents.pop().expect("nonempty").0;
        while let Some((e, offset)) = exponents.pop() {
            total = e.checked_pow(total).ok_or_else(|| {
                Failure::syntax(offset, &["small integer"], "exponent tower overflows".into())
            })?;
        }
        Ok(Expr::Pow(Box::new(base), total))
    }

    fn parse_atom(&mut self) -> Result<Expr, Failure> {
        let offset = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => Ok(Expr::Int(n)),
            Some(Token::Ident(name)) => match name.as_str() {
                "i" => Ok(Expr::SymI),
                "j" => Ok(Expr::SymJ),
                "zeta" => {
                    self.expect(Token::LParen, "'('")?;
                    let n = self.expect_small_nat("root order")?;
                    if n == 0 {
                        return Err(Failure::syntax(
                            offset,
                            &["positive integer"],
                            "zeta order must be positive".into(),
                        ));
                    }
                    self.expect(Token::Comma, "','")?;
                    let k = self.expect_small_nat("root index")?;
                    self.expect(Token::RParen, "')'")?;
                    Ok(Expr::Zeta(n, k))
                }
                _ => Err(Failure::syntax(
                    offset,
                    &["i", "j", "zeta"],
                    format!("unknown symbol {name:?}"),
                )),
            },
            Some(Token::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(Failure::syntax(
                offset,
                &["integer", "symbol", "'('"],
                "expected an expression".into(),
            )),
        }
    }
}

/// Parses one expression; the whole input must be consumed.
pub fn parse(text: &str) -> Result<Expr, Failure> {
    let lexer = lex(text)?;
    let mut parser = Parser { tokens: lexer.tokens, cursor: 0, end: lexer.end };
    let expr = parser.parse_expr()?;
    if parser.cursor != parser.tokens.len() {
        return Err(Failure::syntax(
            parser.offset(),
            &["operator", "end of input"],
            "trailing input".into(),
        ));
    }
    Ok(expr)
}

/// Renders an expression so that `parse(render(e)) == e`.
pub fn render(expr: &Expr) -> String {
    match expr {
        Expr::Int(n) => n.to_string(),
        Expr::SymI => "i".into(),
        Expr::SymJ => "j".into(),
        Expr::Zeta(n, k) => format!("zeta({n},{k})"),
        Expr::Neg(e) => match **e {
            Expr::Add(..) | Expr::Sub(..) | Expr::Mul(..) => format!("-({})", render(e)),
            _ => format!("-{}", render(e)),
        },
        Expr::Add(a, b) => format!("{}+{}", render(a), render_addend(b)),
        Expr::Sub(a, b) => format!("{}-{}", render(a), render_addend(b)),
        Expr::Mul(a, b) => format!("{}*{}", render_factor(a), render_rhs_factor(b)),
        Expr::Pow(base, e) => match **base {
            Expr::Int(_) | Expr::SymI | Expr::SymJ | Expr::Zeta(..) => {
                format!("{}^{}", render(base), e)
            }
            _ => format!("({})^{}", render(base), e),
        },
    }
}

fn render_addend(e: &Expr) -> String {
    match e {
        Expr::Add(..) | Expr::Sub(..) => format!("({})", render(e)),
        _ => render(e),
    }
}

fn render_factor(e: &Expr) -> String {
    match e {
        Expr::Add(..) | Expr::Sub(..) => format!("({})", render(e)),
        _ => render(e),
    }
}

fn render_rhs_factor(e: &Expr) -> String {
    match e {
        Expr::Add(..) | Expr::Sub(..) | Expr::Mul(..) => format!("({})", render(e)),
        _ => render(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> Expr {
        Expr::Int(BigInt::from(n))
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse("3+4i").unwrap(),
            Expr::Add(Box::new(int(3)), Box::new(Expr::Mul(Box::new(int(4)), Box::new(Expr::SymI))))
        );
        assert_eq!(
            parse("(1+i)^2").unwrap(),
            Expr::Pow(Box::new(Expr::Add(Box::new(int(1)), Box::new(Expr::SymI))), 2)
        );
        assert_eq!(
            parse("zeta(5,2)^3").unwrap(),
            Expr::Pow(Box::new(Expr::Zeta(5, 2)), 3)
        );
    }

    #[test]
    fn precedence() {
        // ^ binds tighter than unary minus
        assert_eq!(parse("-2^2").unwrap(), Expr::Neg(Box::new(Expr::Pow(Box::new(int(2)), 2))));
        // unary minus binds tighter than *
        assert_eq!(
            parse("-2*3").unwrap(),
            Expr::Mul(Box::new(Expr::Neg(Box::new(int(2)))), Box::new(int(3)))
        );
        // * binds tighter than +
        assert_eq!(
            parse("1+2*3").unwrap(),
            Expr::Add(Box::new(int(1)), Box::new(Expr::Mul(Box::new(int(2)), Box::new(int(3)))))
        );
        // ^ chains right-associatively and folds: 2^3^2 = 2^9
        assert_eq!(parse("2^3^2").unwrap(), Expr::Pow(Box::new(int(2)), 9));
        // juxtaposition in front of an exponent: 3i^2 = 3*(i^2)
        assert_eq!(
            parse("3i^2").unwrap(),
            Expr::Mul(Box::new(int(3)), Box::new(Expr::Pow(Box::new(Expr::SymI), 2)))
        );
        assert_eq!(
            parse("(1+i)(1-i)").unwrap(),
            Expr::Mul(
                Box::new(Expr::Add(Box::new(int(1)), Box::new(Expr::SymI))),
                Box::new(Expr::Sub(Box::new(int(1)), Box::new(Expr::SymI)))
            )
        );
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse("1+$").unwrap_err();
        assert_eq!(err.offset, Some(2));
        let err = parse("2^-1").unwrap_err();
        assert_eq!(err.offset, Some(2));
        let err = parse("zeta(5 2)").unwrap_err();
        assert_eq!(err.offset, Some(7));
        let err = parse("q").unwrap_err();
        assert_eq!(err.offset, Some(0));
        let err = parse("(1+i").unwrap_err();
        assert_eq!(err.offset, Some(4));
        let err = parse("1+i)").unwrap_err();
        assert_eq!(err.offset, Some(3));
        assert_eq!(err.exit, 2);
    }

    #[test]
    fn render_round_trips() {
        for text in [
            "3+4i",
            "(1+i)^2",
            "zeta(5,2)^3",
            "-2^2",
            "1-2-3",
            "2*(3+i)",
            "-(1+i)",
            "--4",
            "3i^2",
            "(2^2)^3",
            "1+-i",
        ] {
            let ast = parse(text).unwrap();
            let rendered = render(&ast);
            assert_eq!(parse(&rendered).unwrap(), ast, "{text} -> {rendered}");
        }
    }
}
