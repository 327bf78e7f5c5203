//! The plain-text generator file format.
//!
//! First line `degree: n`, then one permutation per line in either cycle
//! notation `(0 1 2)(3 4)` (fixed points omitted, `()` is the identity)
//! or image notation `img: 1 2 0 4 3`. Blank lines are skipped.

use super::{PermGroup, Permutation};
use crate::{Error, Result};

pub fn parse_generator_file(text: &str) -> Result<PermGroup> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty generator file".into()))?;
    let degree: usize = header
        .strip_prefix("degree:")
        .ok_or_else(|| Error::Parse("first line must be `degree: n`".into()))?
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad degree: {e}")))?;
    let mut gens = Vec::new();
    for line in lines {
        gens.push(parse_permutation(degree, line)?);
    }
    PermGroup::from_generators(degree, gens)
}

pub fn parse_permutation(degree: usize, line: &str) -> Result<Permutation> {
    if let Some(rest) = line.strip_prefix("img:") {
        let images = rest
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad image `{tok}`: {e}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if images.len() != degree {
            return Err(Error::Parse(format!(
                "image line has {} entries, expected {degree}",
                images.len()
            )));
        }
        return Permutation::from_images(images);
    }
    parse_cycles(degree, line)
}

fn parse_cycles(degree: usize, line: &str) -> Result<Permutation> {
    let mut cycles = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected `(` in `{line}`")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced `(` in `{line}`")))?;
        let inner = &rest[1..close];
        let points = inner
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad point `{tok}`: {e}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = rest[close + 1..].trim_start();
    }
    Permutation::from_cycles(degree, &cycles)
}

pub fn write_generator_file(group: &PermGroup) -> String {
    let mut out = format!("degree: {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_notations() {
        let text = "degree: 5\n(0 1 2)(3 4)\nimg: 1 0 2 3 4\n";
        let g = parse_generator_file(text).unwrap();
        assert_eq!(g.degree(), 5);
        assert_eq!(g.generators().len(), 2);
        assert_eq!(
            g.generators()[0],
            Permutation::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap()
        );
    }

    #[test]
    fn roundtrip_through_writer() {
        let g = PermGroup::symmetric(4);
        let text = write_generator_file(&g);
        let back = parse_generator_file(&text).unwrap();
        assert_eq!(back.order_u64(), Some(24));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_generator_file("nonsense").is_err());
        assert!(parse_generator_file("degree: 3\n(0 1").is_err());
        assert!(parse_generator_file("degree: 3\nimg: 0 1").is_err());
        assert!(parse_generator_file("degree: 3\n(0 5)").is_err());
    }
}
