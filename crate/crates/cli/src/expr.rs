//! Graph expressions such as `union(K(3), 2*P(2))` or `Gs(3)[2,1,2]`.
//!
//! ```text
//! expr := INT "*" expr | "union(" expr "," expr ")" | "join(" expr "," expr ")" | atom
//! atom := FAMILY "(" ints ")" | "Gs(" INT ")[" ints "]" | "Gn(" INT ")"
//!       | "Kminus(" INT ")" | "g6:" TOKEN | "proof(" NAME ")"
//! ```

use std::fmt;

use qspectra::enumeration::graph6;
use qspectra::families::{build_gn, proof_graph, CliqueReplacement, ProofGraph};
use qspectra::graph::MAX_ORDER;
use qspectra::{Graph, NamedFamily};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    Named(NamedFamily),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Copies(usize, Box<GraphExpr>),
    Gn(usize),
    Gs { s: usize, t: Vec<usize> },
    Kminus(usize),
    Graph6(String),
    Proof(ProofGraph),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", quoted(expected))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    /// `path` locates the node from the root, e.g. `$.join.right.Gs`.
    #[error("invalid expression at {path}: {message}")]
    Semantic { path: String, message: String },
}

fn quoted(tokens: &[&str]) -> String {
    let q: Vec<String> = tokens.iter().map(|t| format!("`{t}`")).collect();
    q.join(" or ")
}

pub fn parse_graph_expr(s: &str) -> Result<GraphExpr, ExprError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        path: Vec::new(),
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(&["end of input"]));
    }
    Ok(e)
}

/// Parses and builds in one step.
pub fn build_expr(s: &str) -> Result<Graph, ExprError> {
    parse_graph_expr(s)?.build()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    /// Node path of the expression being parsed, for arity errors.
    path: Vec<&'static str>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &[&'static str]) -> ExprError {
        let found = match self.src.get(self.pos) {
            None => "end of input".to_string(),
            Some(_) => {
                let rest = String::from_utf8_lossy(&self.src[self.pos..]);
                format!("{:?}", rest.chars().next().unwrap_or('?'))
            }
        };
        ExprError::Syntax {
            offset: self.pos,
            expected: expected.to_vec(),
            found,
        }
    }

    fn node_path(&self, name: &str) -> String {
        let mut p = String::from("$");
        for seg in self.path.iter().copied().chain([name]) {
            p.push('.');
            p.push_str(seg);
        }
        p
    }

    fn eat(&mut self, tok: &'static str) -> Result<(), ExprError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(self.error(&[tok]))
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<usize, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["integer"]));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits")
            .parse()
            .map_err(|_| {
                self.pos = start;
                self.error(&["integer that fits in 64 bits"])
            })
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'-') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii")
    }

    /// Comma-separated integers, at least one.
    fn ints(&mut self) -> Result<Vec<usize>, ExprError> {
        let mut v = vec![self.int()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            v.push(self.int()?);
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<GraphExpr, ExprError> {
        const START: &[&str] = &["integer", "K", "P", "C", "S", "E", "Gn", "Gs", "Kminus", "g6:", "proof", "union", "join"];
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let k = self.int()?;
                self.eat("*")?;
                self.path.push("copies");
                let body = self.expr()?;
                self.path.pop();
                Ok(GraphExpr::Copies(k, Box::new(body)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident().to_string();
                match name.as_str() {
                    "union" | "join" => {
                        let (left, right) = if name == "union" {
                            ("union.left", "union.right")
                        } else {
                            ("join.left", "join.right")
                        };
                        self.eat("(")?;
                        self.path.push(left);
                        let a = self.expr()?;
                        self.path.pop();
                        self.eat(",")?;
                        self.path.push(right);
                        let b = self.expr()?;
                        self.path.pop();
                        self.eat(")")?;
                        let (a, b) = (Box::new(a), Box::new(b));
                        Ok(if name == "union" { GraphExpr::Union(a, b) } else { GraphExpr::Join(a, b) })
                    }
                    "g6" => {
                        self.eat(":")?;
                        self.graph6_token()
                    }
                    "proof" => {
                        self.eat("(")?;
                        let at = self.pos;
                        let id = self.ident().to_string();
                        let g = id.parse::<ProofGraph>().map_err(|_| {
                            self.pos = at;
                            self.skip_ws();
                            self.error(&["fig-n6", "H1", "H2"])
                        })?;
                        self.eat(")")?;
                        Ok(GraphExpr::Proof(g))
                    }
                    "K" | "P" | "C" | "S" | "E" | "Gn" | "Kminus" => {
                        self.eat("(")?;
                        let args = self.ints()?;
                        self.eat(")")?;
                        Ok(match name.as_str() {
                            "K" if args.len() > 1 => GraphExpr::Named(NamedFamily::Multipartite(args)),
                            _ => {
                                if args.len() != 1 {
                                    return Err(ExprError::Semantic {
                                        path: self.node_path(&name),
                                        message: format!("{name} takes one argument, got {}", args.len()),
                                    });
                                }
                                let n = args[0];
                                match name.as_str() {
                                    "K" => GraphExpr::Named(NamedFamily::Complete(n)),
                                    "P" => GraphExpr::Named(NamedFamily::Path(n)),
                                    "C" => GraphExpr::Named(NamedFamily::Cycle(n)),
                                    "S" => GraphExpr::Named(NamedFamily::Star(n)),
                                    "E" => GraphExpr::Named(NamedFamily::Edgeless(n)),
                                    "Gn" => GraphExpr::Gn(n),
                                    _ => GraphExpr::Kminus(n),
                                }
                            }
                        })
                    }
                    "Gs" => {
                        self.eat("(")?;
                        let s = self.int()?;
                        self.eat(")")?;
                        self.eat("[")?;
                        let t = self.ints()?;
                        self.eat("]")?;
                        Ok(GraphExpr::Gs { s, t })
                    }
                    _ => {
                        self.pos = start;
                        Err(self.error(START))
                    }
                }
            }
            _ => Err(self.error(START)),
        }
    }

    /// Either a bare run of graph6 characters or a double-quoted string.
    fn graph6_token(&mut self) -> Result<GraphExpr, ExprError> {
        self.skip_ws();
        if self.peek() == Some(b'"') {
            self.pos += 1;
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos] != b'"' {
                self.pos += 1;
            }
            if self.pos == self.src.len() {
                return Err(self.error(&["closing '\"'"]));
            }
            let tok = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
            self.pos += 1;
            return Ok(GraphExpr::Graph6(tok));
        }
        let start = self.pos;
        while self.pos < self.src.len() && (63..=126).contains(&self.src[self.pos]) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(&["graph6 string"]));
        }
        Ok(GraphExpr::Graph6(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
    }
}

impl GraphExpr {
    fn node_name(&self) -> &'static str {
        match self {
            GraphExpr::Named(NamedFamily::Complete(_)) => "K",
            GraphExpr::Named(NamedFamily::Path(_)) => "P",
            GraphExpr::Named(NamedFamily::Cycle(_)) => "C",
            GraphExpr::Named(NamedFamily::Star(_)) => "S",
            GraphExpr::Named(NamedFamily::Edgeless(_)) => "E",
            GraphExpr::Named(NamedFamily::Multipartite(_)) => "K",
            GraphExpr::Union(..) => "union",
            GraphExpr::Join(..) => "join",
            GraphExpr::Copies(..) => "copies",
            GraphExpr::Gn(_) => "Gn",
            GraphExpr::Gs { .. } => "Gs",
            GraphExpr::Kminus(_) => "Kminus",
            GraphExpr::Graph6(_) => "g6",
            GraphExpr::Proof(_) => "proof",
        }
    }

    /// Number of vertices, checking arities and size bounds on the way.
    /// Orders are computed before anything is built so that `64*K(64)`
    /// fails without allocating.
    pub fn order(&self) -> Result<usize, ExprError> {
        self.order_at("$")
    }

    fn order_at(&self, parent: &str) -> Result<usize, ExprError> {
        let path = format!("{parent}.{}", self.node_name());
        let fail = |message: String| Err(ExprError::Semantic { path: path.clone(), message });
        let positive = |n: usize, what: &str| -> Result<(), ExprError> {
            if n == 0 {
                return Err(ExprError::Semantic {
                    path: path.clone(),
                    message: format!("{what} must be positive"),
                });
            }
            Ok(())
        };
        let n = match self {
            GraphExpr::Named(NamedFamily::Cycle(n)) if *n < 3 => return fail(format!("C needs n >= 3, got {n}")),
            GraphExpr::Named(NamedFamily::Multipartite(parts)) => {
                for &p in parts {
                    positive(p, "part size")?;
                }
                parts.iter().fold(0usize, |a, &p| a.saturating_add(p))
            }
            GraphExpr::Named(
                NamedFamily::Complete(n)
                | NamedFamily::Path(n)
                | NamedFamily::Cycle(n)
                | NamedFamily::Star(n)
                | NamedFamily::Edgeless(n),
            ) => {
                positive(*n, "order")?;
                *n
            }
            GraphExpr::Union(a, b) | GraphExpr::Join(a, b) => {
                let x = a.order_at(&format!("{path}.left"))?;
                let y = b.order_at(&format!("{path}.right"))?;
                x + y
            }
            GraphExpr::Copies(k, e) => {
                positive(*k, "copy count")?;
                k.saturating_mul(e.order_at(&path)?)
            }
            GraphExpr::Gn(n) => {
                if *n < 2 {
                    return fail(format!("Gn needs n >= 2, got {n}"));
                }
                *n
            }
            GraphExpr::Gs { s, t } => {
                if *s < 2 {
                    return fail(format!("Gs needs s >= 2, got {s}"));
                }
                if t.len() != *s {
                    return fail(format!("Gs({s}) needs {s} block sizes, got {}", t.len()));
                }
                for &x in t {
                    positive(x, "block size")?;
                }
                t.iter().fold(0usize, |a, &x| a.saturating_add(x))
            }
            GraphExpr::Kminus(n) => {
                if *n < 2 {
                    return fail(format!("Kminus needs n >= 2, got {n}"));
                }
                *n
            }
            GraphExpr::Graph6(s) => graph6::decode(s)
                .map_err(|e| ExprError::Semantic {
                    path: path.clone(),
                    message: e.to_string(),
                })?
                .order(),
            GraphExpr::Proof(id) => proof_graph(*id).order(),
        };
        if n > MAX_ORDER {
            return fail(format!("order {n} exceeds {MAX_ORDER}"));
        }
        Ok(n)
    }

    pub fn build(&self) -> Result<Graph, ExprError> {
        self.order()?;
        self.build_at("$")
    }

    fn build_at(&self, parent: &str) -> Result<Graph, ExprError> {
        let path = format!("{parent}.{}", self.node_name());
        let wrap = |e: qspectra::Error| ExprError::Semantic {
            path: path.clone(),
            message: e.to_string(),
        };
        match self {
            GraphExpr::Named(f) => Graph::named(f).map_err(wrap),
            GraphExpr::Union(a, b) => {
                let (x, y) = (a.build_at(&format!("{path}.left"))?, b.build_at(&format!("{path}.right"))?);
                x.union(&y).map_err(wrap)
            }
            GraphExpr::Join(a, b) => {
                let (x, y) = (a.build_at(&format!("{path}.left"))?, b.build_at(&format!("{path}.right"))?);
                x.join(&y).map_err(wrap)
            }
            GraphExpr::Copies(k, e) => e.build_at(&path)?.copies(*k).map_err(wrap),
            GraphExpr::Gn(n) => build_gn(*n).map_err(wrap),
            GraphExpr::Gs { t, .. } => CliqueReplacement::gs(t).and_then(|c| c.build()).map_err(wrap),
            GraphExpr::Kminus(n) => Graph::complete(*n).and_then(|g| g.delete_edge(0, 1)).map_err(wrap),
            GraphExpr::Graph6(s) => graph6::decode(s).map_err(wrap),
            GraphExpr::Proof(id) => Ok(proof_graph(*id)),
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            GraphExpr::Named(NamedFamily::Multipartite(p)) => write!(f, "K({})", list(p)),
            GraphExpr::Named(
                NamedFamily::Complete(n)
                | NamedFamily::Path(n)
                | NamedFamily::Cycle(n)
                | NamedFamily::Star(n)
                | NamedFamily::Edgeless(n),
            ) => write!(f, "{}({n})", self.node_name()),
            GraphExpr::Union(a, b) => write!(f, "union({a},{b})"),
            GraphExpr::Join(a, b) => write!(f, "join({a},{b})"),
            GraphExpr::Copies(k, e) => write!(f, "{k}*{e}"),
            GraphExpr::Gn(n) => write!(f, "Gn({n})"),
            GraphExpr::Gs { s, t } => write!(f, "Gs({s})[{}]", list(t)),
            GraphExpr::Kminus(n) => write!(f, "Kminus({n})"),
            GraphExpr::Graph6(s) => write!(f, "g6:\"{s}\""),
            GraphExpr::Proof(id) => write!(f, "proof({id})"),
        }
    }
}
