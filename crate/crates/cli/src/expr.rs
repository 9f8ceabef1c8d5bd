//! Rational-function expressions in `w`.

use std::fmt;

use fcl_core::exactalg::{render_rat, Poly, Rat};
use fcl_core::{ClassF, FclError, RatFun};
use num::{BigInt, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative integer literal.
    Int(BigInt),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at line {}, column {}: {}", self.line, self.col, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var,
    Op(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize, usize)>, SyntaxError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let (l0, c0) = (line, col);
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push((Tok::Int(s.parse().expect("digits")), l0, c0));
            continue;
        }
        let tok = match c {
            'w' => Tok::Var,
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => Tok::Op(c),
            _ => return Err(SyntaxError { line, col, message: format!("unexpected character {c:?}") }),
        };
        out.push((tok, l0, c0));
        i += 1;
        col += 1;
    }
    out.push((Tok::End, line, col));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn err(&self, message: impl Into<String>) -> SyntaxError {
        let (_, line, col) = self.toks[self.pos];
        SyntaxError { line, col, message: message.into() }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn sum(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Tok::Op('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Op('/') => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if *self.peek() == Tok::Op('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(n) => {
                let e = u32::try_from(&n).map_err(|_| self.err("exponent too large"))?;
                self.bump();
                if *self.peek() == Tok::Op('^') {
                    return Err(self.err("chained exponent; use parentheses"));
                }
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(self.err("exponent must be a nonnegative integer literal")),
        }
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Tok::Var => {
                self.bump();
                Ok(Expr::Var)
            }
            Tok::Op('(') => {
                self.bump();
                let e = self.sum()?;
                if *self.peek() != Tok::Op(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(e)
            }
            Tok::End => Err(self.err("unexpected end of input")),
            Tok::Op(c) => Err(self.err(format!("unexpected {c:?}"))),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, SyntaxError> {
    let mut lx = Lexer { toks: lex(text)?, pos: 0 };
    let e = lx.sum()?;
    if *lx.peek() != Tok::End {
        return Err(lx.err("trailing input"));
    }
    Ok(e)
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Var => 5,
        }
    }

    fn write_at(&self, min: u8, out: &mut String) {
        let paren = self.prec() < min;
        if paren {
            out.push('(');
        }
        match self {
            Expr::Int(n) => out.push_str(&n.to_string()),
            Expr::Var => out.push('w'),
            Expr::Neg(a) => {
                out.push('-');
                a.write_at(3, out);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_at(1, out);
                out.push_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " });
                b.write_at(2, out);
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write_at(2, out);
                out.push(if matches!(self, Expr::Mul(..)) { '*' } else { '/' });
                b.write_at(3, out);
            }
            Expr::Pow(a, e) => {
                a.write_at(5, out);
                out.push_str(&format!("^{e}"));
            }
        }
        if paren {
            out.push(')');
        }
    }

    pub fn eval(&self) -> Result<RatFun, FclError> {
        Ok(match self {
            Expr::Int(n) => RatFun::from_poly(Poly::constant(Rat::from_integer(n.clone()))),
            Expr::Var => RatFun::from_poly(Poly::x()),
            Expr::Neg(a) => a.eval()?.neg(),
            Expr::Add(a, b) => a.eval()?.add(&b.eval()?),
            Expr::Sub(a, b) => a.eval()?.sub(&b.eval()?),
            Expr::Mul(a, b) => a.eval()?.mul(&b.eval()?),
            Expr::Div(a, b) => {
                let d = b.eval()?;
                if d.is_zero() {
                    return Err(FclError::Domain(format!("division by zero in ({})", b)));
                }
                a.eval()?.div(&d)?
            }
            Expr::Pow(a, e) => a.eval()?.pow(*e),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_at(0, &mut s);
        f.write_str(&s)
    }
}

/// `F = w P / Q` from a rational function with `F(0) = 0`, `F'(0) = 1`.
pub fn classf_of(r: &RatFun) -> Result<ClassF, FclError> {
    let (num, den) = (r.num(), r.den());
    if den.coeff(0).is_zero() {
        return Err(FclError::NotInClass(format!("{r} has a pole at w = 0")));
    }
    if !num.coeff(0).is_zero() || num.is_zero() {
        return Err(FclError::NotInClass(format!("{r} does not vanish simply at w = 0")));
    }
    let p = num.exact_div(&Poly::x()).expect("divisible by w");
    if p.coeff(0) != den.coeff(0) {
        return Err(FclError::NotInClass(format!("{r} has F'(0) = {}, not 1", render_rat(&(p.coeff(0) / den.coeff(0))))));
    }
    ClassF::new(p, den.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    const CORPUS: &[&str] = &[
        "w - w^2",
        "w*(1-w)/(1+w)^3",
        "w*(1-w)^2/(1-w+w^2)",
        "w/(1-w)^2",
        "w*(1+w)/(1-w)^3",
        "w*(1+w^2)/(1+9*w^2)",
        "-w^2",
        "(-w)^2",
        "1 - (2 - w) - w",
        "w/(2/(3*w))",
        "--w",
        "(w^2)^3",
        "2^10*w/1024",
        "w*(1 - w^2)",
    ];

    #[test]
    fn examples() {
        let cat = classf_of(&parse_expr("w - w^2").unwrap().eval().unwrap()).unwrap();
        assert_eq!(cat, ClassF::new(Poly::from_ints(&[1, -1]), Poly::one()).unwrap());
        let f = classf_of(&parse_expr("w*(1-w)/(1+w)^3").unwrap().eval().unwrap()).unwrap();
        assert_eq!(f.q(), &Poly::from_ints(&[1, 3, 3, 1]));
        assert!(parse_expr("w^(1/2)").is_err());
        assert!(parse_expr("w^-1").is_err());
    }

    #[test]
    fn round_trip() {
        for s in CORPUS {
            let e = parse_expr(s).unwrap();
            let printed = e.to_string();
            assert_eq!(parse_expr(&printed).unwrap(), e, "{s} -> {printed}");
        }
    }

    #[test]
    fn precedence() {
        let e = |s: &str| parse_expr(s).unwrap().eval().unwrap();
        assert_eq!(e("-w^2"), e("-(w^2)"));
        assert_eq!(e("1-w-w"), e("1-2*w"));
        assert_eq!(e("8/2/2"), e("2"));
        assert_eq!(e("2*w^3"), e("2*(w*w*w)"));
        assert_eq!(e("w^0"), e("1"));
    }

    #[test]
    fn error_positions() {
        let err = parse_expr("w +\n  * 2").unwrap_err();
        assert_eq!((err.line, err.col), (2, 3));
        let err = parse_expr("(w").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
        let err = parse_expr("w^(1/2)").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
        assert_eq!(parse_expr("x").unwrap_err().col, 1);
        assert!(parse_expr("w^2^2").is_err());
        assert!(parse_expr("w w").is_err());
    }

    #[test]
    fn class_conversion() {
        let f = |s: &str| classf_of(&parse_expr(s).unwrap().eval().unwrap());
        assert!(f("w").is_ok());
        assert!(f("2*w").is_err());
        assert!(f("1 + w").is_err());
        assert!(f("(w - w^2)/w").is_err());
        assert!(f("w^2").is_err());
        assert_eq!(f("w*(1-w)/(1-w)").unwrap(), ClassF::identity());
    }

    #[test]
    fn division_by_zero() {
        assert!(parse_expr("w/(w-w)").unwrap().eval().is_err());
    }
}
