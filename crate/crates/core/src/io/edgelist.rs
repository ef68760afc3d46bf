use super::ParseError;
use crate::graph::Graph;

/// `"n m"` header, then one `"u v"` line per edge in sorted order, no
/// trailing newline.
pub fn encode_edgelist(g: &Graph) -> String {
    let mut lines = vec![format!("{} {}", g.n(), g.m())];
    lines.extend(g.edges().iter().map(|(u, v)| format!("{u} {v}")));
    lines.join("\n")
}

fn fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

fn pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize), ParseError> {
    let f = fields(line);
    if f.len() != 2 {
        return Err(ParseError::syntax(line_no, 0, format!("expected two integers for {what}, found {}", f.len())));
    }
    let num = |(col, text): (usize, &str)| {
        text.parse::<usize>()
            .map_err(|_| ParseError::syntax(line_no, col, format!("`{text}` is not a non-negative integer")))
    };
    Ok((num(f[0])?, num(f[1])?))
}

/// Parses the edge-list format. Blank lines are ignored; lines are numbered
/// from 1 and byte offsets from 0 within the line.
pub fn decode_edgelist(payload: &str) -> Result<Graph, ParseError> {
    let mut lines = payload.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let (header_no, header) = lines.next().ok_or_else(|| ParseError::syntax(1, 0, "missing `n m` header"))?;
    let (n, m) = pair(header_no, header, "the header")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_no;
    for (no, line) in lines {
        if edges.len() == m {
            return Err(ParseError::syntax(no, 0, format!("more than the declared {m} edges")));
        }
        edges.push(pair(no, line, "an edge")?);
        last_line = no;
    }
    if edges.len() != m {
        return Err(ParseError::syntax(last_line + 1, 0, format!("declared {m} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, GraphError};

    #[test]
    fn edge() {
        assert_eq!(encode_edgelist(&complete(2)), "2 1\n0 1");
        assert_eq!(decode_edgelist("2 1\n0 1").unwrap(), complete(2));
        assert_eq!(decode_edgelist("2 1\n\n  1 0  \n").unwrap(), complete(2));
        assert_eq!(decode_edgelist("0 0").unwrap(), Graph::empty(0));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            decode_edgelist("2 1\n0 2"),
            Err(ParseError::Validation(GraphError::EndpointOutOfRange { u: 0, v: 2, n: 2 }))
        );
        assert!(matches!(
            decode_edgelist("3 2\n0 1\n1 0"),
            Err(ParseError::Validation(GraphError::DuplicateEdge(0, 1)))
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            decode_edgelist("3 1\n0 x"),
            Err(ParseError::Syntax { line: 2, byte: 2, message: "`x` is not a non-negative integer".into() })
        );
        assert!(matches!(decode_edgelist(""), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(decode_edgelist("3 2\n0 1"), Err(ParseError::Syntax { line: 3, .. })));
        assert!(matches!(decode_edgelist("3 1\n0 1\n1 2"), Err(ParseError::Syntax { line: 3, .. })));
        assert!(matches!(decode_edgelist("3 1 4\n0 1"), Err(ParseError::Syntax { line: 1, .. })));
    }
}
