//! Parsing of virtual representations.
//!
//! ```text
//! expr := '0' | ['-'] term (('+'|'-') term)*
//! term := [int '*'] atom
//! atom := 'Std(' [ms] ')' | 'Irr(' [ms] ')'
//! ms   := seg (',' seg)*
//! seg  := ident '[' int '..' int ']'        F side, inclusive exponents
//!       | ident "'" '{' int ';' int '}'     D side, start;length
//! ```
//!
//! Whitespace is ignored between tokens. `Display` on [`VirtualRep`] prints
//! in this grammar, so printing and parsing round-trip.

use std::fmt;

use jlring::{make_segment, AlgebraContext, Basis, Multisegment, Segment, Side, VirtualRep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    ctx: &'a AlgebraContext,
    side: Option<(Side, usize)>,
    basis: Option<Basis>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser<'_> {
    fn error_at<T>(&self, pos: usize, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            column: pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> PResult<()> {
        self.skip_ws();
        let start = self.pos;
        for c in token.chars() {
            if self.chars.get(self.pos) != Some(&c) {
                let found = match self.chars.get(start) {
                    Some(c) => format!("`{c}`"),
                    None => "end of input".to_string(),
                };
                return self.error_at(start, format!("expected `{token}`, found {found}"));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn ident(&mut self) -> PResult<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        if s.is_empty() || s.starts_with(|c: char| c.is_ascii_digit()) {
            return self.error_at(start, "expected a family name");
        }
        Ok(s)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn int(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        let neg = self.eat('-');
        self.skip_ws();
        let Some(d) = self.digits() else {
            return self.error_at(self.pos, "expected an integer");
        };
        let text = if neg { format!("-{d}") } else { d };
        text.parse()
            .or_else(|_| self.error_at(start, format!("integer `{text}` out of range")))
    }

    fn expr(&mut self) -> PResult<VirtualRep> {
        let mut terms: Vec<(Multisegment, i64)> = Vec::new();
        self.skip_ws();
        let zero_at = self.pos;
        if self.peek() == Some('0') {
            self.pos += 1;
            if self.peek().is_none() {
                return Ok(VirtualRep::zero(Side::F, Basis::Standard));
            }
            self.pos = zero_at;
        }
        let mut sign: i64 = if self.eat('-') { -1 } else { 1 };
        loop {
            let (ms, c) = self.term()?;
            terms.push((ms, sign * c));
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                break;
            }
        }
        if let Some(c) = self.peek() {
            return self.error_at(self.pos, format!("unexpected `{c}`"));
        }
        let side = self.side.map_or(Side::F, |(s, _)| s);
        let basis = self.basis.unwrap_or(Basis::Standard);
        let mut out = VirtualRep::zero(side, basis);
        for (ms, c) in terms {
            let term = VirtualRep::from_terms(side, basis, [(ms, c)]).expect("sides checked");
            out = out.try_add(&term).expect("sides and bases checked");
        }
        Ok(out)
    }

    fn term(&mut self) -> PResult<(Multisegment, i64)> {
        self.skip_ws();
        let mut coeff = 1;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            let d = self.digits().expect("peeked a digit");
            coeff = d
                .parse()
                .or_else(|_| self.error_at(start, format!("coefficient `{d}` out of range")))?;
            self.expect("*")?;
        }
        Ok((self.atom()?, coeff))
    }

    fn atom(&mut self) -> PResult<Multisegment> {
        self.skip_ws();
        let start = self.pos;
        let basis = match self.ident() {
            Ok(t) if t == "Std" => Basis::Standard,
            Ok(t) if t == "Irr" => Basis::Irreducible,
            _ => return self.error_at(start, "expected `Std(` or `Irr(`"),
        };
        match self.basis {
            Some(b) if b != basis => {
                return self.error_at(start, "Std and Irr terms cannot be mixed");
            }
            _ => self.basis = Some(basis),
        }
        self.expect("(")?;
        let mut segs = Vec::new();
        if !self.eat(')') {
            loop {
                segs.push(self.seg()?);
                if !self.eat(',') {
                    break;
                }
            }
            self.expect(")")?;
        }
        Ok(Multisegment::new(segs).expect("sides checked per segment"))
    }

    fn seg(&mut self) -> PResult<Segment> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        if self.ctx.family(&name).is_err() {
            return self.error_at(start, format!("unknown family `{name}`"));
        }
        let (side, a, len) = if self.eat('\'') {
            self.expect("{")?;
            let a = self.int()?;
            self.expect(";")?;
            let at = self.pos;
            let l = self.int()?;
            self.expect("}")?;
            if l < 1 {
                return self.error_at(at, "segment length must be positive");
            }
            (Side::D, a, l as u64)
        } else {
            self.expect("[")?;
            let a = self.int()?;
            self.expect("..")?;
            let at = self.pos;
            let b = self.int()?;
            self.expect("]")?;
            if b < a {
                return self.error_at(at, format!("empty segment: {b} < {a}"));
            }
            (Side::F, a, (b - a + 1) as u64)
        };
        match self.side {
            Some((s, first)) if s != side => {
                return self.error_at(
                    start,
                    format!(
                        "mixed sides: {side}-segment after a {s}-segment at column {}",
                        first + 1
                    ),
                );
            }
            _ => self.side = Some((side, start)),
        }
        make_segment(self.ctx, &name, side, a, len).or_else(|e| self.error_at(start, e.to_string()))
    }
}

/// Parses an expression against the families of `ctx`.
pub fn parse_expr(text: &str, ctx: &AlgebraContext) -> Result<VirtualRep, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        ctx,
        side: None,
        basis: None,
    };
    if p.peek().is_none() {
        return p.error_at(p.pos, "empty expression");
    }
    p.expr()
}

/// `parse_expr(x.to_string()) == x`. Zero and the unit print without a
/// side, so for them only the value is compared.
pub fn round_trips(x: &VirtualRep, ctx: &AlgebraContext) -> bool {
    let Ok(back) = parse_expr(&x.to_string(), ctx) else {
        return false;
    };
    let sideless = x.terms().keys().all(Multisegment::is_empty);
    if sideless {
        back.basis() == x.basis() && back.terms() == x.terms() || x.is_zero() && back.is_zero()
    } else {
        back == *x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> AlgebraContext {
        AlgebraContext::quaternion_default()
    }

    fn parse(s: &str) -> VirtualRep {
        parse_expr(s, &ctx()).unwrap()
    }

    fn err(s: &str) -> ParseError {
        parse_expr(s, &ctx()).unwrap_err()
    }

    #[test]
    fn examples() {
        let sigma1 = parse("Std(rho[0..5],rho[1..8],rho[3..6],rho[4..9])");
        assert_eq!(sigma1.len(), 1);
        assert_eq!(sigma1.homogeneous_degree(), Some(24));
        let g = parse("Std(rho'{0;3})");
        assert_eq!(g.side(), Side::D);
        let two = parse("2*Std(rho[0..1]) - Std(rho[0..0],rho[1..1])");
        assert_eq!(two.len(), 2);
        assert_eq!(
            two.to_string(),
            "2*Std(rho[0..1]) - Std(rho[0..0],rho[1..1])"
        );
    }

    #[test]
    fn whitespace_and_normalization() {
        let a = parse(" Std( rho[1..1] , rho[0..0] ) + Std(rho[0..0],rho[1..1]) ");
        assert_eq!(a.to_string(), "2*Std(rho[0..0],rho[1..1])");
        assert!(parse("Std(rho[0..1]) - Std(rho[0..1])").is_zero());
        assert_eq!(parse("- Std(rho[-2..-1])").to_string(), "-Std(rho[-2..-1])");
        assert!(parse("0").is_zero());
        assert_eq!(parse("Std()").to_string(), "Std()");
    }

    #[test]
    fn errors() {
        assert_eq!(err("Std(rho[0..1]").column, 14);
        assert!(err("Std(sigma[0..1])")
            .message
            .contains("unknown family `sigma`"));
        let e = err("Std(rho[0..1]) + Std(rho'{0;1})");
        assert!(e.message.starts_with("mixed sides"), "{e}");
        assert_eq!(e.column, 22);
        assert!(err("Std(rho[0..1]) + Irr(rho[0..1])")
            .message
            .contains("cannot be mixed"));
        assert!(err("Std(rho[2..1])").message.contains("empty segment"));
        assert!(err("Std(rho'{0;0})").message.contains("positive"));
        assert!(err("").message.contains("empty"));
        assert!(err("Std(rho[0..1]) x").message.contains("unexpected"));
        assert!(err("3 Std(rho[0..1])").message.contains("`*`"));
        let ctx = AlgebraContext::new(2, [("tau", 2, None)]).unwrap();
        assert!(parse_expr("Std(tau'{0;1})", &ctx).is_err());
    }

    #[test]
    fn round_trip_examples() {
        for s in [
            "Std(rho[0..1]) - Std(rho[0..0],rho[1..1])",
            "Irr(rho'{4;1}) - 3*Irr(rho'{0;2},rho'{1;1})",
            "0",
            "Std()",
        ] {
            let x = parse(s);
            assert_eq!(x.to_string(), s);
            assert!(round_trips(&x, &ctx()));
        }
    }
}
