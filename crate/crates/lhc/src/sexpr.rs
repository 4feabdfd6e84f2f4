//! Composition trees as s-expressions.
//!
//! ```text
//! spec      := expr transform*
//! expr      := (var K) | (op TABLE expr expr)
//! TABLE     := "0123/1032/2301/3210" | z4 | z22 | cyclicQ
//! transform := (isotopy "p0" "p1" ... "pn") | (parastrophe "p")
//! ```
//!
//! A table string lists the rows of the square (first argument selects the
//! row), separated by `/` or whitespace. A permutation string lists images
//! `0,2,1,3`. `;` comments run to the end of the line.

use lhc_core::algebra::{BinaryOp, CompositionSpec, Expr, Permutation, TransformSpec};

use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Atom {
        text: String,
        line: usize,
        column: usize,
    },
    Str {
        text: String,
        line: usize,
        column: usize,
    },
    List {
        items: Vec<Node>,
        line: usize,
        column: usize,
    },
}

impl Node {
    fn pos(&self) -> (usize, usize) {
        match self {
            Node::Atom { line, column, .. }
            | Node::Str { line, column, .. }
            | Node::List { line, column, .. } => (*line, *column),
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        let (l, c) = self.pos();
        ParseError::new(l, c, message)
    }
}

struct Reader<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Reader<'_> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_blank(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == ';' {
                while self.chars.peek().is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn node(&mut self) -> Result<Option<Node>, ParseError> {
        self.skip_blank();
        let (line, column) = (self.line, self.column);
        match self.chars.peek().copied() {
            None => Ok(None),
            Some('(') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_blank();
                    match self.chars.peek() {
                        Some(')') => {
                            self.bump();
                            return Ok(Some(Node::List {
                                items,
                                line,
                                column,
                            }));
                        }
                        None => return Err(ParseError::new(line, column, "unclosed `(`")),
                        _ => items.push(self.node()?.expect("input remains")),
                    }
                }
            }
            Some(')') => Err(ParseError::new(line, column, "unexpected `)`")),
            Some('"') => {
                self.bump();
                let mut text = String::new();
                loop {
                    match self.bump() {
                        Some('"') => return Ok(Some(Node::Str { text, line, column })),
                        Some(c) => text.push(c),
                        None => return Err(ParseError::new(line, column, "unterminated string")),
                    }
                }
            }
            Some(_) => {
                let mut text = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_whitespace() || matches!(c, '(' | ')' | '"' | ';') {
                        break;
                    }
                    text.push(c);
                    self.bump();
                }
                Ok(Some(Node::Atom { text, line, column }))
            }
        }
    }
}

fn read_all(text: &str) -> Result<Vec<Node>, ParseError> {
    let mut r = Reader {
        chars: text.chars().peekable(),
        line: 1,
        column: 1,
    };
    let mut out = Vec::new();
    while let Some(node) = r.node()? {
        out.push(node);
    }
    Ok(out)
}

fn head(node: &Node) -> Result<(&str, &[Node]), ParseError> {
    match node {
        Node::List { items, .. } => match items.first() {
            Some(Node::Atom { text, .. }) => Ok((text, &items[1..])),
            _ => Err(node.err("expected a form starting with a keyword")),
        },
        _ => Err(node.err("expected a parenthesized form")),
    }
}

fn parse_table(node: &Node) -> Result<BinaryOp, ParseError> {
    let fail = |e: lhc_core::Error| node.err(format!("bad operation table: {e}"));
    match node {
        Node::Atom { text, .. } => match text.as_str() {
            "z4" => Ok(BinaryOp::z4_add()),
            "z22" => Ok(BinaryOp::z22_add()),
            other => {
                let q = other
                    .strip_prefix("cyclic")
                    .and_then(|q| q.parse().ok())
                    .ok_or_else(|| node.err(format!("unknown operation `{other}`")))?;
                BinaryOp::cyclic(q).map_err(fail)
            }
        },
        Node::Str { text, .. } => {
            let mut digits = Vec::new();
            for c in text.chars() {
                match c.to_digit(10) {
                    Some(d) => digits.push(d as u8),
                    None if c == '/' || c.is_whitespace() => {}
                    None => return Err(node.err(format!("unexpected `{c}` in a table"))),
                }
            }
            let q = (1..=8).find(|q| q * q == digits.len()).ok_or_else(|| {
                node.err(format!(
                    "a table needs q^2 entries for some q <= 8, found {}",
                    digits.len()
                ))
            })?;
            BinaryOp::new(q, digits).map_err(fail)
        }
        Node::List { .. } => Err(node.err("expected an operation table")),
    }
}

fn parse_expr(node: &Node) -> Result<Expr, ParseError> {
    match head(node)? {
        ("var", [Node::Atom { text, .. }]) => text
            .parse()
            .map(Expr::var)
            .map_err(|_| node.err(format!("bad variable index `{text}`"))),
        ("op", [table, left, right]) => Ok(Expr::node(
            parse_table(table)?,
            parse_expr(left)?,
            parse_expr(right)?,
        )),
        ("var", _) => Err(node.err("expected `(var K)`")),
        ("op", _) => Err(node.err("expected `(op TABLE LEFT RIGHT)`")),
        (other, _) => Err(node.err(format!("unknown form `{other}`"))),
    }
}

fn parse_perm(node: &Node) -> Result<Permutation, ParseError> {
    let Node::Str { text, .. } = node else {
        return Err(node.err("expected a quoted permutation such as \"0,2,1,3\""));
    };
    parse_permutation(text).map_err(|m| node.err(m))
}

/// `"0,2,1,3"` to a permutation.
pub fn parse_permutation(text: &str) -> Result<Permutation, String> {
    let images = text
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| format!("bad permutation `{text}`"))?;
    Permutation::new(images).map_err(|_| format!("`{text}` is not a permutation"))
}

pub fn format_permutation(p: &Permutation) -> String {
    p.images()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_spec(text: &str) -> Result<CompositionSpec, ParseError> {
    let nodes = read_all(text)?;
    let first = nodes
        .first()
        .ok_or_else(|| ParseError::new(1, 1, "empty composition spec"))?;
    let root = parse_expr(first)?;
    let mut transform = TransformSpec::default();
    for node in &nodes[1..] {
        match head(node)? {
            ("isotopy", perms) if transform.isotopy.is_none() => {
                transform.isotopy = Some(perms.iter().map(parse_perm).collect::<Result<_, _>>()?);
            }
            ("parastrophe", [p]) if transform.parastrophe.is_none() => {
                transform.parastrophe = Some(parse_perm(p)?)
            }
            (name, _) => return Err(node.err(format!("unexpected `{name}` after the expression"))),
        }
    }
    let post =
        (transform.isotopy.is_some() || transform.parastrophe.is_some()).then_some(transform);
    CompositionSpec::new(root, post).map_err(|e| first.err(e.to_string()))
}

fn write_expr(e: &Expr, out: &mut String) {
    match e {
        Expr::Var(k) => out.push_str(&format!("(var {k})")),
        Expr::Node { op, left, right } => {
            let q = op.order();
            let rows: Vec<String> = op
                .table()
                .chunks(q)
                .map(|r| r.iter().map(|d| char::from(b'0' + d)).collect())
                .collect();
            out.push_str(&format!("(op \"{}\" ", rows.join("/")));
            write_expr(left, out);
            out.push(' ');
            write_expr(right, out);
            out.push(')');
        }
    }
}

pub fn serialize_spec(spec: &CompositionSpec) -> String {
    let mut out = String::new();
    write_expr(spec.root(), &mut out);
    out.push('\n');
    if let Some(t) = spec.post_transform() {
        if let Some(perms) = &t.isotopy {
            let quoted: Vec<String> = perms
                .iter()
                .map(|p| format!("\"{}\"", format_permutation(p)))
                .collect();
            out.push_str(&format!("(isotopy {})\n", quoted.join(" ")));
        }
        if let Some(p) = &t.parastrophe {
            out.push_str(&format!("(parastrophe \"{}\")\n", format_permutation(p)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lhc_core::algebra::{gen_iterated_group, GroupKind};

    #[test]
    fn named_tables() {
        let spec = parse_spec("(op z22 (op z22 (var 1) (var 2)) (var 3))").unwrap();
        assert_eq!(
            spec.compose().unwrap(),
            gen_iterated_group(GroupKind::Z2x2, 3, 4).unwrap()
        );
        let spec = parse_spec("(op cyclic5 (var 2) (var 1))").unwrap();
        assert_eq!(spec.order(), 5);
    }

    #[test]
    fn round_trip_with_transforms() {
        let text = "; comment\n(op \"012/120/201\" (var 1) (op z4x (var 2) (var 3)))";
        assert!(parse_spec(text).is_err());
        let text = "(op \"012/120/201\" (var 1) (op cyclic3 (var 2) (var 3)))\n\
                    (isotopy \"0,1,2\" \"1,2,0\" \"0,2,1\" \"0,1,2\")\n(parastrophe \"1,0,2,3\")";
        let spec = parse_spec(text).unwrap();
        assert!(spec.post_transform().is_some());
        let again = parse_spec(&serialize_spec(&spec)).unwrap();
        assert_eq!(again, spec);
    }

    #[test]
    fn errors_point_at_the_form() {
        let e = parse_spec("(op z4 (var 1)\n  (vr 2))").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_spec("(op z4 (var 1) (var 2))\n(parastrophe \"0,0,1\")").unwrap_err();
        assert_eq!((e.line, e.column), (2, 14));
        let e = parse_spec("(op \"0123/1032\" (var 1) (var 2))").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(parse_spec("(op z4 (var 1) (var 2)").is_err());
        assert!(parse_spec("(op z4 (var 1) (var 1))").is_err());
    }
}
