//! Parsers for the textual interchange formats.
//!
//! Soft-set literal: `{e1:{a,b}; e2:{}}`. Components in any order, missing
//! parameters default to the empty component, whitespace-insensitive.
//!
//! Topology file: a header line `ground Z=a,b E=e1,e2`, an optional
//! `carrier <literal>` line for subspaces, then one soft-set literal per
//! line. Blank lines are ignored.
//!
//! Symbolic literal: `{e1:FIN{1,3}; e2:COF{2}}`. Per parameter either an
//! explicit finite set or an explicit finite complement.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::Ground;
use crate::set::SoftSet;
use crate::symbolic::{SymComponent, SymbolicSoftSet};
use crate::topology::SoftTopology;

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Scanner {
    fn new(text: &str, line: usize) -> Scanner {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.pos + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of input"))),
        }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if self.pos == start {
            Err(self.err("expected a name"))
        } else {
            Ok(self.chars[start..self.pos].iter().collect())
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a natural number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| self.err(format!("number `{digits}` is out of range")))
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected trailing `{c}`"))),
        }
    }
}

fn parse_set_body(sc: &mut Scanner, ground: &Arc<Ground>) -> Result<SoftSet> {
    sc.expect('{')?;
    let mut set = SoftSet::empty(ground);
    let mut seen = vec![false; ground.n_params()];
    if !sc.eat('}') {
        loop {
            let param = sc.ident()?;
            let param_ix = ground
                .param_index(&param)
                .map_err(|_| sc.err(format!("unknown parameter `{param}`")))?;
            if seen[param_ix] {
                return Err(sc.err(format!("duplicate component for parameter `{param}`")));
            }
            seen[param_ix] = true;
            sc.expect(':')?;
            sc.expect('{')?;
            if !sc.eat('}') {
                loop {
                    let elem = sc.ident()?;
                    let elem_ix = ground
                        .elem_index(&elem)
                        .map_err(|_| sc.err(format!("unknown element `{elem}`")))?;
                    set.insert_cell(param_ix, elem_ix);
                    if !sc.eat(',') {
                        break;
                    }
                }
                sc.expect('}')?;
            }
            if !sc.eat(';') {
                break;
            }
        }
        sc.expect('}')?;
    }
    Ok(set)
}

/// Parses a standalone soft-set literal against a known ground.
pub fn parse_soft_set(ground: &Arc<Ground>, text: &str) -> Result<SoftSet> {
    parse_soft_set_at(ground, text, 1)
}

fn parse_soft_set_at(ground: &Arc<Ground>, text: &str, line: usize) -> Result<SoftSet> {
    let mut sc = Scanner::new(text, line);
    let set = parse_set_body(&mut sc, ground)?;
    sc.finish()?;
    Ok(set)
}

fn parse_name_list(sc: &mut Scanner) -> Result<Vec<String>> {
    let mut names = vec![sc.ident()?];
    while sc.eat(',') {
        names.push(sc.ident()?);
    }
    Ok(names)
}

fn parse_ground_header(text: &str, line: usize) -> Result<Arc<Ground>> {
    let mut sc = Scanner::new(text, line);
    let kw = sc.ident()?;
    if kw != "ground" {
        return Err(sc.err("expected a `ground Z=... E=...` header line"));
    }
    sc.skip_ws();
    let z_kw = sc.ident()?;
    if z_kw != "Z" {
        return Err(sc.err("expected `Z=`"));
    }
    sc.expect('=')?;
    let universe = parse_name_list(&mut sc)?;
    let e_kw = sc.ident()?;
    if e_kw != "E" {
        return Err(sc.err("expected `E=`"));
    }
    sc.expect('=')?;
    let params = parse_name_list(&mut sc)?;
    sc.finish()?;
    Ground::new(universe, params).map_err(|e| Error::Parse {
        line,
        column: 1,
        message: e.to_string(),
    })
}

/// A parsed topology or collection file.
#[derive(Debug)]
pub struct ParsedFile {
    pub ground: Arc<Ground>,
    pub carrier: Option<SoftSet>,
    pub sets: Vec<SoftSet>,
}

/// Parses the common file layout: ground header, optional carrier line,
/// one soft-set literal per non-blank line.
pub fn parse_file(text: &str) -> Result<ParsedFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty file: expected a ground header".into(),
    })?;
    let ground = parse_ground_header(header, header_line)?;
    let mut carrier = None;
    let mut sets = Vec::new();
    for (line_no, line) in lines {
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix("carrier") {
            if carrier.is_some() || !sets.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: "carrier line must appear once, directly after the header".into(),
                });
            }
            carrier = Some(parse_soft_set_at(&ground, rest, line_no)?);
            continue;
        }
        sets.push(parse_soft_set_at(&ground, line, line_no)?);
    }
    Ok(ParsedFile {
        ground,
        carrier,
        sets,
    })
}

/// Parses and validates a topology file.
pub fn parse_topology_text(text: &str) -> Result<SoftTopology> {
    let file = parse_file(text)?;
    match file.carrier {
        Some(carrier) => SoftTopology::validate_within(&carrier, file.sets),
        None => SoftTopology::validate(&file.ground, file.sets),
    }
}

/// Parses a collection file (no topology axioms, no carrier).
pub fn parse_collection_text(text: &str) -> Result<(Arc<Ground>, Vec<SoftSet>)> {
    let file = parse_file(text)?;
    if file.carrier.is_some() {
        return Err(Error::Rejected(
            "a collection file must not declare a carrier".into(),
        ));
    }
    Ok((file.ground, file.sets))
}

/// Parses a symbolic soft-set literal against a parameter list.
pub fn parse_symbolic_set(params: &[String], text: &str) -> Result<SymbolicSoftSet> {
    let mut sc = Scanner::new(text, 1);
    sc.expect('{')?;
    let mut comps: Vec<Option<SymComponent>> = vec![None; params.len()];
    if !sc.eat('}') {
        loop {
            let param = sc.ident()?;
            let param_ix = params
                .iter()
                .position(|p| *p == param)
                .ok_or_else(|| sc.err(format!("unknown parameter `{param}`")))?;
            if comps[param_ix].is_some() {
                return Err(sc.err(format!("duplicate component for parameter `{param}`")));
            }
            sc.expect(':')?;
            let tag = sc.ident()?;
            sc.expect('{')?;
            let mut elems = BTreeSet::new();
            if !sc.eat('}') {
                loop {
                    elems.insert(sc.number()?);
                    if !sc.eat(',') {
                        break;
                    }
                }
                sc.expect('}')?;
            }
            comps[param_ix] = Some(match tag.as_str() {
                "FIN" => SymComponent::Fin(elems),
                "COF" => SymComponent::Cof(elems),
                other => {
                    return Err(sc.err(format!("expected FIN or COF, found `{other}`")));
                }
            });
            if !sc.eat(';') {
                break;
            }
        }
        sc.expect('}')?;
    }
    sc.finish()?;
    let comps = comps
        .into_iter()
        .map(|c| c.unwrap_or(SymComponent::Fin(BTreeSet::new())))
        .collect();
    SymbolicSoftSet::new(params.to_vec(), comps)
}

/// Parses an anchor soft point `z(e)` over a countable universe, e.g. `1(e)`.
pub fn parse_anchor(text: &str) -> Result<(u64, String)> {
    let mut sc = Scanner::new(text, 1);
    let elem = sc.number()?;
    sc.expect('(')?;
    let param = sc.ident()?;
    sc.expect(')')?;
    sc.finish()?;
    Ok((elem, param))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip() {
        let g = Ground::canonical(2, 2);
        for mask in 0..16u64 {
            let set = SoftSet::from_mask(&g, mask);
            assert_eq!(parse_soft_set(&g, &set.to_string()).unwrap(), set);
        }
    }

    #[test]
    fn whitespace_and_order_insensitive() {
        let g = Ground::canonical(2, 2);
        let a = parse_soft_set(&g, " { e2 : { b } ; e1 : { a , b } } ").unwrap();
        let b = parse_soft_set(&g, "{e1:{a,b}; e2:{b}}").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn missing_component_defaults_to_empty() {
        let g = Ground::canonical(2, 2);
        let a = parse_soft_set(&g, "{e1:{a}}").unwrap();
        assert!(a.component(1).is_empty());
    }

    #[test]
    fn errors_carry_positions() {
        let g = Ground::canonical(2, 2);
        match parse_soft_set(&g, "{e1:{a,q}}") {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!(line, 1);
                assert!(column > 1);
                assert!(message.contains("unknown element"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_soft_set(&g, "{e1:{a}  e2:{}}") {
            Err(Error::Parse { .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_component_rejected() {
        let g = Ground::canonical(2, 2);
        assert!(matches!(
            parse_soft_set(&g, "{e1:{a}; e1:{b}}"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn file_parsing() {
        let text = "ground Z=a,b E=e1\n{e1:{}}\n{e1:{a}}\n\n{e1:{a,b}}\n";
        let file = parse_file(text).unwrap();
        assert_eq!(file.ground.cells(), 2);
        assert_eq!(file.sets.len(), 3);
        assert!(file.carrier.is_none());
    }

    #[test]
    fn file_errors_name_the_line() {
        let text = "ground Z=a,b E=e1\n{e1:{}}\n{e1:{zz}}\n";
        match parse_file(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn anchor_parsing() {
        assert_eq!(parse_anchor("1(e)").unwrap(), (1, "e".to_string()));
        assert_eq!(parse_anchor(" 0 ( e1 ) ").unwrap(), (0, "e1".to_string()));
        assert!(parse_anchor("x(e)").is_err());
        assert!(parse_anchor("1(e) junk").is_err());
    }
}
