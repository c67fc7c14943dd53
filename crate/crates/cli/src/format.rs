//! The family file format: a sequence of blocks separated by blank lines.
//! Each block starts with a header line `n k`, followed by one member per
//! line as strictly increasing space-separated 1-based elements. Lines whose
//! first non-blank character is `#` are comments. Serialization is canonical
//! (members in ascending mask order), so parse -> serialize -> parse is the
//! identity.

use std::fmt;

use ifam_core::SetFamily;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

fn parse_numbers(line: &str, lineno: usize) -> Result<Vec<u32>, FormatError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| err(lineno, format!("expected an integer, found {tok:?}")))
        })
        .collect()
}

pub fn parse_families(text: &str) -> Result<Vec<SetFamily>, FormatError> {
    let mut families = Vec::new();
    let mut header: Option<(u32, u32, usize)> = None;
    let mut sets: Vec<Vec<u32>> = Vec::new();

    let mut close = |header: &mut Option<(u32, u32, usize)>,
                     sets: &mut Vec<Vec<u32>>|
     -> Result<(), FormatError> {
        if let Some((n, k, at)) = header.take() {
            let family =
                SetFamily::new(n, k, sets).map_err(|e| err(at, format!("invalid family: {e}")))?;
            families.push(family);
            sets.clear();
        }
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            close(&mut header, &mut sets)?;
            continue;
        }
        let numbers = parse_numbers(line, lineno)?;
        match header {
            None => {
                if numbers.len() != 2 {
                    return Err(err(lineno, "expected a family header line \"n k\""));
                }
                header = Some((numbers[0], numbers[1], lineno));
            }
            Some(_) => sets.push(numbers),
        }
    }
    close(&mut header, &mut sets)?;
    Ok(families)
}

pub fn render_families(families: &[SetFamily]) -> String {
    let mut out = String::new();
    for (idx, family) in families.iter().enumerate() {
        if idx > 0 {
            out.push('\n');
        }
        out.push_str(&format!(
            "{} {}\n",
            family.ground_size(),
            family.uniformity()
        ));
        for member in family.members() {
            let elements: Vec<String> = member.elements().map(|e| e.to_string()).collect();
            out.push_str(&elements.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_single_block() {
        let text = "# star on five points\n5 2\n1 2\n1 3\n1 4\n1 5\n";
        let families = parse_families(text).unwrap();
        assert_eq!(families, vec![SetFamily::star(5, 2).unwrap()]);
    }

    #[test]
    fn parses_multiple_blocks() {
        let text = "4 2\n1 2\n\n# second block\n4 2\n3 4\n";
        let families = parse_families(text).unwrap();
        assert_eq!(families.len(), 2);
        assert_eq!(families[1], SetFamily::new(4, 2, &[vec![3, 4]]).unwrap());
    }

    #[test]
    fn rejects_malformed_lines() {
        let e = parse_families("5 2\n1 2 x\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_families("5\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_families("3 2\n1 4\n").unwrap_err();
        assert!(e.message.contains("invalid family"));
    }

    #[test]
    fn round_trip_is_identity() {
        let text = "# comment\n5 2\n1 5\n1 2\n\n6 3\n1 2 3\n2 3 6\n";
        let families = parse_families(text).unwrap();
        let rendered = render_families(&families);
        assert_eq!(parse_families(&rendered).unwrap(), families);
        // canonical output is a fixed point
        assert_eq!(
            render_families(&parse_families(&rendered).unwrap()),
            rendered
        );
    }
}
