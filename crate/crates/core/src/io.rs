//! The line-oriented poset file format and Graphviz export.
//!
//! ```text
//! # comment
//! elements 0 a b 1
//! covers 0<a 0<b a<1 b<1
//! involution 0:1 a:b
//! ```
//!
//! `elements` must come first and fixes the element indices. `covers` and
//! `involution` lines may repeat; covers are closed reflexively and
//! transitively, involution pairs symmetrically. An optional `bounds BOT TOP`
//! line designates the least and greatest element.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::involution::InvolutivePoset;
use crate::order::Poset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    /// One entry per unordered pair, `A:A` for fixed points; `None` when
    /// the file has no `involution` line.
    pub involution: Option<Vec<(String, String)>>,
    pub bounds: Option<(String, String)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl PosetDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let mut elements: Option<(Vec<String>, HashMap<String, usize>)> = None;
        let mut covers = Vec::new();
        let mut pairs: Vec<(usize, String, String)> = Vec::new();
        let mut bounds = None;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().expect("non-empty line");
            let args: Vec<&str> = tokens.collect();

            if keyword == "elements" {
                if elements.is_some() {
                    return Err(parse_err(line_no, "second `elements` line"));
                }
                if args.is_empty() {
                    return Err(parse_err(line_no, "`elements` needs at least one name"));
                }
                let mut index = HashMap::new();
                for (k, name) in args.iter().enumerate() {
                    if name.contains(['<', ':']) {
                        return Err(parse_err(
                            line_no,
                            format!("element name `{name}` contains `<` or `:`"),
                        ));
                    }
                    if index.insert(name.to_string(), k).is_some() {
                        return Err(parse_err(line_no, format!("duplicate element `{name}`")));
                    }
                }
                elements = Some((args.iter().map(|s| s.to_string()).collect(), index));
                continue;
            }

            let Some((_, index)) = elements.as_ref() else {
                return Err(parse_err(
                    line_no,
                    format!("`{keyword}` before the `elements` line"),
                ));
            };
            let known = |name: &str| -> Result<String> {
                if index.contains_key(name) {
                    Ok(name.to_string())
                } else {
                    Err(parse_err(line_no, format!("unknown element `{name}`")))
                }
            };
            match keyword {
                "covers" => {
                    for tok in &args {
                        let (lo, hi) = tok.split_once('<').ok_or_else(|| {
                            parse_err(line_no, format!("expected `A<B`, got `{tok}`"))
                        })?;
                        covers.push((known(lo)?, known(hi)?));
                    }
                }
                "involution" => {
                    for tok in &args {
                        let (x, y) = tok.split_once(':').ok_or_else(|| {
                            parse_err(line_no, format!("expected `A:B`, got `{tok}`"))
                        })?;
                        pairs.push((line_no, known(x)?, known(y)?));
                    }
                    if args.is_empty() {
                        pairs.push((line_no, String::new(), String::new()));
                    }
                }
                "bounds" => {
                    if args.len() != 2 {
                        return Err(parse_err(line_no, "`bounds` takes exactly two names"));
                    }
                    bounds = Some((known(args[0])?, known(args[1])?));
                }
                other => return Err(parse_err(line_no, format!("unknown directive `{other}`"))),
            }
        }

        let Some((names, index)) = elements else {
            return Err(parse_err(1, "missing `elements` line"));
        };

        let involution = if pairs.is_empty() {
            None
        } else {
            let first_line = pairs[0].0;
            let mut map: Vec<Option<usize>> = vec![None; names.len()];
            let mut canonical = Vec::new();
            for (line_no, x, y) in pairs.iter().filter(|(_, x, _)| !x.is_empty()) {
                let (ix, iy) = (index[x.as_str()], index[y.as_str()]);
                for (a, b) in [(ix, iy), (iy, ix)] {
                    match map[a] {
                        Some(prev) if prev != b => {
                            return Err(parse_err(
                                *line_no,
                                format!(
                                    "`{}` is paired with both `{}` and `{}`",
                                    names[a], names[prev], names[b]
                                ),
                            ))
                        }
                        _ => map[a] = Some(b),
                    }
                }
            }
            if let Some(missing) = map.iter().position(Option::is_none) {
                return Err(parse_err(
                    first_line,
                    format!("involution leaves `{}` unpaired", names[missing]),
                ));
            }
            for (x, image) in map.iter().enumerate() {
                let y = image.expect("checked total");
                if x <= y {
                    canonical.push((names[x].clone(), names[y].clone()));
                }
            }
            Some(canonical)
        };

        Ok(PosetDocument {
            elements: names,
            covers,
            involution,
            bounds,
        })
    }

    /// Document for an existing poset: its cover relation and, if given, the
    /// unary map as unordered pairs.
    pub fn from_poset(p: &Poset, inv: Option<&[usize]>) -> Self {
        let name = |x: usize| p.label(x).to_string();
        PosetDocument {
            elements: p.labels().to_vec(),
            covers: p
                .covers()
                .into_iter()
                .map(|(x, y)| (name(x), name(y)))
                .collect(),
            involution: inv.map(|inv| {
                (0..p.size())
                    .filter(|&x| x <= inv[x])
                    .map(|x| (name(x), name(inv[x])))
                    .collect()
            }),
            bounds: None,
        }
    }

    fn index(&self, name: &str) -> usize {
        self.elements
            .iter()
            .position(|e| e == name)
            .expect("parsed names are known")
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = self
            .covers
            .iter()
            .map(|(a, b)| (self.index(a), self.index(b)))
            .collect();
        let p = Poset::from_covers(self.elements.clone(), &covers)?;
        if let Some((bot, top)) = &self.bounds {
            if p.bounds() != (Some(self.index(bot)), Some(self.index(top))) {
                return Err(Error::BoundsMismatch);
            }
        }
        Ok(p)
    }

    /// The unary map as an index vector, if the document has one.
    pub fn involution_map(&self) -> Option<Vec<usize>> {
        self.involution.as_ref().map(|pairs| {
            let mut map = vec![0; self.elements.len()];
            for (a, b) in pairs {
                let (x, y) = (self.index(a), self.index(b));
                map[x] = y;
                map[y] = x;
            }
            map
        })
    }

    pub fn to_involutive(&self) -> Result<Option<InvolutivePoset>> {
        let p = self.to_poset()?;
        self.involution_map()
            .map(|m| InvolutivePoset::new(p, m))
            .transpose()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "elements {}", self.elements.join(" ")).unwrap();
        if !self.covers.is_empty() {
            let covers: Vec<String> = self
                .covers
                .iter()
                .map(|(a, b)| format!("{a}<{b}"))
                .collect();
            writeln!(out, "covers {}", covers.join(" ")).unwrap();
        }
        if let Some(pairs) = &self.involution {
            let pairs: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}:{b}")).collect();
            writeln!(out, "involution {}", pairs.join(" ")).unwrap();
        }
        if let Some((bot, top)) = &self.bounds {
            writeln!(out, "bounds {bot} {top}").unwrap();
        }
        out
    }
}

fn dot_id(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz Hasse diagram: cover edges drawn bottom-up, the unary map as
/// dashed undirected edges, fixed points double-circled.
pub fn to_dot(p: &Poset, inv: Option<&[usize]>, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", dot_id(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for x in 0..p.size() {
        let fixed = inv.is_some_and(|m| m[x] == x);
        if fixed {
            writeln!(out, "  {} [shape=doublecircle];", dot_id(p.label(x))).unwrap();
        } else {
            writeln!(out, "  {};", dot_id(p.label(x))).unwrap();
        }
    }
    for (x, y) in p.covers() {
        writeln!(out, "  {} -- {};", dot_id(p.label(x)), dot_id(p.label(y))).unwrap();
    }
    if let Some(m) = inv {
        for x in 0..p.size() {
            if x < m[x] {
                writeln!(
                    out,
                    "  {} -- {} [style=dashed, constraint=false];",
                    dot_id(p.label(x)),
                    dot_id(p.label(m[x]))
                )
                .unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_fixed_point() {
        let doc = PosetDocument::parse("elements x\ninvolution x:x\n").unwrap();
        assert_eq!(doc.elements, vec!["x"]);
        let ip = doc.to_involutive().unwrap().unwrap();
        assert_eq!(ip.inv(), &[0]);
    }

    #[test]
    fn covers_before_elements() {
        let err = PosetDocument::parse("covers p<q").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err:?}");
    }

    #[test]
    fn missing_elements_line() {
        assert!(matches!(
            PosetDocument::parse("# nothing\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines() {
        let doc = PosetDocument::parse("# hi\n\nelements p q # two\n\ncovers p<q\n").unwrap();
        assert_eq!(doc.covers, vec![("p".into(), "q".into())]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("elements p p", 1),
            ("elements p q\ncovers p<r", 2),
            ("elements p q\ncovers pq", 2),
            ("elements p q r\ninvolution p:q\ninvolution p:r", 3),
            ("elements p q r\ninvolution p:q", 2),
            ("elements p\nfrobnicate", 2),
            ("elements p\nelements q", 2),
        ];
        for (text, line) in cases {
            match PosetDocument::parse(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn cyclic_covers_fail_on_build() {
        let doc = PosetDocument::parse("elements p q\ncovers p<q q<p").unwrap();
        assert!(matches!(doc.to_poset(), Err(Error::NotAntisymmetric(..))));
    }

    #[test]
    fn designated_bounds_are_checked() {
        let ok = PosetDocument::parse("elements 0 1\ncovers 0<1\nbounds 0 1").unwrap();
        assert!(ok.to_poset().is_ok());
        let bad = PosetDocument::parse("elements 0 1\ncovers 0<1\nbounds 1 0").unwrap();
        assert_eq!(bad.to_poset().unwrap_err(), Error::BoundsMismatch);
    }

    #[test]
    fn dot_for_single_element() {
        let p = Poset::chain(1);
        let dot = to_dot(&p, Some(&[0]), "one");
        assert_eq!(dot.matches(" -- ").count(), 0);
        assert!(dot.contains("\"0\" [shape=doublecircle];"));
    }
}
