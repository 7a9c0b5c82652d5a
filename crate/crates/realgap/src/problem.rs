//! Problem files: a variable declaration followed by statements.
//!
//! ```text
//! vars x y z;
//! minimize x^2 + y;
//! 1 - x^2 - (z-1)^2 >= 0;
//! (x^2+y^2+z^2)*(z-2) = 0;
//! or { x > 0; } or { y > 0; }
//! hint component: x, y;
//! order 2..4;
//! ```
//!
//! Top-level equations generate the ideal `I`. Top-level inequalities are
//! shared by every `or` block; each block adds one alternative, so the set is
//! `shared ∧ (block_1 ∨ block_2 ∨ …)`. Comments run from `#` to end of line.

use realgap_core::ideal::QIdeal;
use realgap_core::mpoly::parse_poly;
use realgap_core::real::{Constraint, Relation, SemialgebraicSet};
use realgap_core::sdp::Pop;
use realgap_core::{Error as CoreError, QPoly};

const KEYWORDS: [&str; 6] = ["vars", "minimize", "or", "hint", "component", "order"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Parsed problem file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub vars: Vec<String>,
    pub objective: Option<QPoly>,
    /// Top-level inequalities, shared by all alternatives.
    pub constraints: Vec<Constraint>,
    /// Top-level equations `h = 0`; they generate the ideal.
    pub equations: Vec<QPoly>,
    /// One entry per `or` block.
    pub alternatives: Vec<Vec<Constraint>>,
    /// Generators of each hinted prime component.
    pub hints: Vec<Vec<QPoly>>,
    pub orders: Option<(u32, u32)>,
}

impl Problem {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn set(&self) -> SemialgebraicSet {
        let n = self.nvars();
        if self.alternatives.is_empty() {
            return SemialgebraicSet::basic(n, self.constraints.clone());
        }
        let conjuncts = self
            .alternatives
            .iter()
            .map(|alt| self.constraints.iter().chain(alt).cloned().collect())
            .collect();
        SemialgebraicSet { nvars: n, conjuncts }
    }

    pub fn ideal(&self) -> QIdeal {
        QIdeal::new(self.nvars(), self.equations.clone())
    }

    pub fn hint(&self) -> Option<Vec<QIdeal>> {
        (!self.hints.is_empty()).then(|| self.hints.iter().map(|h| QIdeal::new(self.nvars(), h.clone())).collect())
    }

    /// The optimization problem; needs an objective, no `or` blocks and no
    /// strict inequalities.
    pub fn pop(&self) -> Result<Pop, String> {
        let objective = self.objective.clone().ok_or("the problem has no objective")?;
        if !self.alternatives.is_empty() {
            return Err("`or` blocks cannot be relaxed; split the problem into one file per alternative".into());
        }
        let mut inequalities = Vec::new();
        for c in &self.constraints {
            match c.rel {
                Relation::Ge => inequalities.push(c.poly.clone()),
                _ => return Err(format!("strict inequality {} > 0 cannot be relaxed", c.poly.render(&self.vars))),
            }
        }
        Ok(Pop { nvars: self.nvars(), objective, inequalities, equalities: self.equations.clone() })
    }

    /// Canonical text. Parsing it gives back an equal `Problem`.
    pub fn render(&self) -> String {
        let v = &self.vars;
        let mut s = format!("vars {};\n", v.join(" "));
        if let Some(f) = &self.objective {
            s += &format!("minimize {};\n", f.render(v));
        }
        for c in &self.constraints {
            s += &format!("{} {} 0;\n", c.poly.render(v), c.rel.symbol());
        }
        for h in &self.equations {
            s += &format!("{} = 0;\n", h.render(v));
        }
        for alt in &self.alternatives {
            let body: Vec<String> = alt.iter().map(|c| format!("{} {} 0;", c.poly.render(v), c.rel.symbol())).collect();
            s += &format!("or {{ {} }}\n", body.join(" "));
        }
        for h in &self.hints {
            let gens: Vec<String> = h.iter().map(|g| g.render(v)).collect();
            s += &format!("hint component: {};\n", gens.join(", "));
        }
        if let Some((a, b)) = self.orders {
            s += &format!("order {a}..{b};\n");
        }
        s
    }
}

pub fn parse(text: &str) -> Result<Problem, ParseError> {
    Scanner::new(text).problem()
}

struct Scanner {
    chars: Vec<char>,
    /// Line and column of every character, plus one past the end.
    at: Vec<(usize, usize)>,
    pos: usize,
    vars: Vec<String>,
}

impl Scanner {
    fn new(text: &str) -> Self {
        let mut chars = Vec::new();
        let mut at = Vec::new();
        let (mut line, mut col) = (1, 1);
        let mut comment = false;
        for c in text.chars() {
            comment = (comment || c == '#') && c != '\n';
            chars.push(if comment { ' ' } else { c });
            at.push((line, col));
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        at.push((line, col));
        Scanner { chars, at, pos: 0, vars: Vec::new() }
    }

    fn err<T>(&self, pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
        let (line, column) = self.at[pos.min(self.chars.len())];
        Err(ParseError { line, column, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Identifier starting at the cursor, not consumed.
    fn word(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        let mut end = start;
        while end < self.chars.len()
            && (self.chars[end].is_alphanumeric() || self.chars[end] == '_')
            && (end > start || !self.chars[end].is_ascii_digit())
        {
            end += 1;
        }
        (end > start).then(|| self.chars[start..end].iter().collect())
    }

    fn keyword(&mut self, kw: &str) -> bool {
        if self.word().as_deref() == Some(kw) {
            self.pos += kw.chars().count();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(self.pos, format!("expected '{c}'"))
        }
    }

    /// Span up to the next `;`, which is consumed. `}` ends the search with an
    /// error, so a missing `;` inside a block is reported there.
    fn statement_span(&mut self) -> Result<(usize, usize), ParseError> {
        let start = self.pos;
        while self.pos < self.chars.len() {
            match self.chars[self.pos] {
                ';' => {
                    self.pos += 1;
                    return Ok((start, self.pos - 1));
                }
                '{' | '}' => return self.err(self.pos, "expected ';'"),
                _ => self.pos += 1,
            }
        }
        self.err(self.pos, "expected ';'")
    }

    fn text(&self, (a, b): (usize, usize)) -> String {
        self.chars[a..b].iter().collect()
    }

    fn poly(&self, span: (usize, usize)) -> Result<QPoly, ParseError> {
        let text = self.text(span);
        if text.trim().is_empty() {
            return self.err(span.0, "expected a polynomial");
        }
        parse_poly(&text, &self.vars).or_else(|e| match e {
            CoreError::Parse { column, message } => self.err(span.0 + column.max(1) - 1, message),
            other => self.err(span.0, other.to_string()),
        })
    }

    fn problem(mut self) -> Result<Problem, ParseError> {
        if self.at_end() {
            return self.err(0, "empty file");
        }
        if !self.keyword("vars") {
            return self.err(self.pos, "expected the `vars` declaration");
        }
        let span = self.statement_span()?;
        self.declare(span)?;
        let mut p = Problem {
            vars: self.vars.clone(),
            objective: None,
            constraints: Vec::new(),
            equations: Vec::new(),
            alternatives: Vec::new(),
            hints: Vec::new(),
            orders: None,
        };
        while !self.at_end() {
            let start = self.pos;
            if self.keyword("vars") {
                return self.err(start, "variables are already declared");
            } else if self.keyword("minimize") {
                let span = self.statement_span()?;
                if p.objective.is_some() {
                    return self.err(start, "a second objective");
                }
                p.objective = Some(self.poly(span)?);
            } else if self.keyword("hint") {
                if !self.keyword("component") {
                    return self.err(self.pos, "expected `component`");
                }
                self.expect(':')?;
                let span = self.statement_span()?;
                p.hints.push(self.poly_list(span)?);
            } else if self.keyword("order") {
                let span = self.statement_span()?;
                if p.orders.is_some() {
                    return self.err(start, "a second order range");
                }
                p.orders = Some(self.order_range(span)?);
            } else if self.keyword("or") {
                self.expect('{')?;
                let mut alt = Vec::new();
                while self.peek() != Some('}') {
                    if self.at_end() {
                        return self.err(start, "unclosed `or` block");
                    }
                    let span = self.statement_span()?;
                    alt.push(self.constraint(span)?);
                }
                self.pos += 1;
                p.alternatives.push(alt);
            } else {
                let span = self.statement_span()?;
                let c = self.constraint(span)?;
                if c.rel == Relation::Eq {
                    p.equations.push(c.poly);
                } else {
                    p.constraints.push(c);
                }
            }
        }
        Ok(p)
    }

    fn declare(&mut self, (a, b): (usize, usize)) -> Result<(), ParseError> {
        let mut i = a;
        while i < b {
            if self.chars[i].is_whitespace() || self.chars[i] == ',' {
                i += 1;
                continue;
            }
            let start = i;
            while i < b && (self.chars[i].is_alphanumeric() || self.chars[i] == '_') {
                i += 1;
            }
            if i == start || self.chars[start].is_ascii_digit() {
                return self.err(start, "expected a variable name");
            }
            let name: String = self.chars[start..i].iter().collect();
            if KEYWORDS.contains(&name.as_str()) || name == "I" {
                return self.err(start, format!("'{name}' is reserved"));
            }
            if self.vars.contains(&name) {
                return self.err(start, format!("variable '{name}' declared twice"));
            }
            self.vars.push(name);
        }
        if self.vars.is_empty() {
            return self.err(b, "no variables declared");
        }
        Ok(())
    }

    fn poly_list(&self, (a, b): (usize, usize)) -> Result<Vec<QPoly>, ParseError> {
        let mut out = Vec::new();
        let mut start = a;
        let mut depth = 0i32;
        for i in a..=b {
            let c = if i < b { self.chars[i] } else { ',' };
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    out.push(self.poly((start, i))?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        Ok(out)
    }

    fn order_range(&self, span: (usize, usize)) -> Result<(u32, u32), ParseError> {
        let text = self.text(span);
        let Some((lo, hi)) = text.split_once("..") else {
            return self.err(span.0, "expected an order range `<int>..<int>`");
        };
        let lo_pos = span.0 + lo.chars().count() - lo.trim_start().chars().count();
        let hi_pos = span.0 + lo.chars().count() + 2 + hi.chars().count() - hi.trim_start().chars().count();
        let lo_v: u32 = match lo.trim().parse() {
            Ok(v) => v,
            Err(_) => return self.err(lo_pos, "expected a non-negative integer"),
        };
        let hi_v: u32 = match hi.trim().parse() {
            Ok(v) => v,
            Err(_) => return self.err(hi_pos, "expected a non-negative integer"),
        };
        if hi_v < lo_v {
            return self.err(hi_pos, "empty order range");
        }
        Ok((lo_v, hi_v))
    }

    /// `lhs rel rhs`, normalized to `lhs - rhs rel 0`. `<=` and `<` swap sides.
    fn constraint(&self, (a, b): (usize, usize)) -> Result<Constraint, ParseError> {
        let Some(p) = (a..b).find(|&i| matches!(self.chars[i], '>' | '<' | '=')) else {
            return self.err(a, "expected a relation `>=`, `>` or `=`");
        };
        let eq_next = p + 1 < b && self.chars[p + 1] == '=';
        let (rel, flip, len) = match (self.chars[p], eq_next) {
            ('>', true) => (Relation::Ge, false, 2),
            ('>', false) => (Relation::Gt, false, 1),
            ('<', true) => (Relation::Ge, true, 2),
            ('<', false) => (Relation::Gt, true, 1),
            _ => (Relation::Eq, false, 1),
        };
        let lhs = self.poly((a, p))?;
        let rhs = self.poly((p + len, b))?;
        let poly = if flip { rhs.sub(&lhs) } else { lhs.sub(&rhs) };
        Ok(Constraint { poly, rel })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use realgap_core::mpoly::parse::poly;

    fn q(s: &str, vars: &[&str]) -> QPoly {
        poly(s, vars).unwrap()
    }

    #[test]
    fn equation_only_gives_the_whole_space() {
        let p = parse("vars x y; x^2+y^2 = 0;").unwrap();
        assert!(p.set().is_whole());
        assert_eq!(p.equations, vec![q("x^2+y^2", &["x", "y"])]);
        assert!(p.objective.is_none() && p.hint().is_none());
    }

    #[test]
    fn cylinder_data() {
        let text = "vars x y z;\n(x^2+y^2+z^2)*(z-2) = 0;\n1 - x^2 - (z-1)^2 >= 0;\n";
        let p = parse(text).unwrap();
        let xyz = ["x", "y", "z"];
        assert_eq!(p.equations, vec![q("(x^2+y^2+z^2)*(z-2)", &xyz)]);
        assert_eq!(p.constraints, vec![Constraint { poly: q("1-x^2-(z-1)^2", &xyz), rel: Relation::Ge }]);
    }

    #[test]
    fn error_positions() {
        let e = parse("vars x y; x^^2 = 0;").unwrap_err();
        assert_eq!((e.line, e.column), (1, 13));
        let e = parse("vars x y;\n  x + w >= 0;").unwrap_err();
        assert_eq!((e.line, e.column), (2, 7));
        assert!(e.message.contains("undeclared"), "{e}");
        let e = parse("  # nothing here\n\n").unwrap_err();
        assert_eq!(e.message, "empty file");
        assert!(parse("vars x; x >= 0").unwrap_err().message.contains("';'"));
        assert!(parse("vars x; x + 1;").unwrap_err().message.contains("relation"));
        assert!(parse("minimize x;").is_err());
        assert!(parse("vars x x;").is_err());
        assert!(parse("vars x or;").is_err());
        assert!(parse("vars x; order 3..2;").is_err());
        assert!(parse("vars x; or { x > 0; ").is_err());
    }

    #[test]
    fn alternatives_share_the_top_level_constraints() {
        let p = parse("vars x y; 1 - x^2 - y^2 >= 0; or { x > 0; } or { y > 0; y <= 1/2; }").unwrap();
        let s = p.set();
        assert_eq!(s.conjuncts.len(), 2);
        assert_eq!(s.conjuncts[1].len(), 3);
        assert_eq!(s.conjuncts[1][2], Constraint { poly: q("1/2-y", &["x", "y"]), rel: Relation::Ge });
        assert!(p.pop().is_err());
    }

    #[test]
    fn render_then_parse_is_the_identity() {
        let text = "vars x y z; # comment\nminimize 0.5*x - y^2;\nx*y > 1/3;\nx - y = z;\n\
                    or { z >= 0; x = 0; }\nhint component: x, (y - 1)*z;\norder 1..3;";
        let p = parse(text).unwrap();
        let r = p.render();
        assert_eq!(parse(&r).unwrap(), p);
        assert_eq!(parse(&r).unwrap().render(), r);
        assert_eq!(p.orders, Some((1, 3)));
        assert_eq!(p.hints[0].len(), 2);
    }
}
