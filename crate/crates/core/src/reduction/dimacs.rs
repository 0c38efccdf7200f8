//! DIMACS CNF input restricted to 3-literal clauses.

use thiserror::Error;

use super::{Cnf3, CnfError, Literal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("missing `p cnf <vars> <clauses>` header")]
    MissingHeader,
    #[error("line {line}: malformed header {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: bad literal {token:?}")]
    BadToken { line: usize, token: String },
    #[error("clause {index}: {source}")]
    Clause { index: usize, source: CnfError },
    #[error("last clause is not terminated by 0")]
    Unterminated,
    #[error("header declares {declared} clauses but {found} were read")]
    ClauseCount { declared: usize, found: usize },
    #[error(transparent)]
    Cnf(#[from] CnfError),
}

/// Non-fatal findings while reading an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CnfWarning {
    /// The literal occurs in no clause.
    UncoveredLiteral(Literal),
}

pub fn parse_dimacs_cnf(text: &str) -> Result<(Cnf3, Vec<CnfWarning>), DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if l.starts_with('%') {
            break;
        }
        if l.starts_with('p') {
            let bad = || DimacsError::BadHeader { line, text: l.to_string() };
            let fields: Vec<&str> = l.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" || header.is_some() {
                return Err(bad());
            }
            let vars = fields[2].parse().map_err(|_| bad())?;
            let count = fields[3].parse().map_err(|_| bad())?;
            header = Some((vars, count));
            continue;
        }
        if header.is_none() {
            return Err(DimacsError::MissingHeader);
        }
        for token in l.split_whitespace() {
            let lit: i64 = token
                .parse()
                .map_err(|_| DimacsError::BadToken { line, token: token.to_string() })?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let (num_vars, declared) = header.ok_or(DimacsError::MissingHeader)?;
    if !current.is_empty() {
        return Err(DimacsError::Unterminated);
    }
    if clauses.len() != declared {
        return Err(DimacsError::ClauseCount { declared, found: clauses.len() });
    }
    let mut parsed = Vec::with_capacity(clauses.len());
    for (index, c) in clauses.iter().enumerate() {
        parsed.push(
            Cnf3::clause_from_dimacs(num_vars, c)
                .map_err(|source| DimacsError::Clause { index: index + 1, source })?,
        );
    }
    let cnf = Cnf3::new(num_vars, parsed)?;
    let warnings = cnf
        .uncovered_literals()
        .into_iter()
        .map(CnfWarning::UncoveredLiteral)
        .collect();
    Ok((cnf, warnings))
}

pub fn write_dimacs_cnf(cnf: &Cnf3) -> String {
    let mut out = format!("p cnf {} {}\n", cnf.num_vars(), cnf.clauses().len());
    for clause in cnf.clauses() {
        for lit in clause {
            out.push_str(&lit.to_dimacs().to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_standard_file() {
        let text = "c tiny\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n";
        let (cnf, warnings) = parse_dimacs_cnf(text).unwrap();
        assert_eq!(cnf.num_vars(), 3);
        assert_eq!(cnf.clauses().len(), 2);
        assert!(warnings.is_empty());
        assert_eq!(parse_dimacs_cnf(&write_dimacs_cnf(&cnf)).unwrap().0, cnf);
    }

    #[test]
    fn clause_may_span_lines() {
        let (cnf, _) = parse_dimacs_cnf("p cnf 3 1\n1 2\n3 0\n").unwrap();
        assert_eq!(cnf.clauses().len(), 1);
    }

    #[test]
    fn coverage_is_a_warning() {
        let (_, warnings) = parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n").unwrap();
        assert_eq!(warnings.len(), 3);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_dimacs_cnf("1 2 3 0\n"), Err(DimacsError::MissingHeader));
        assert!(matches!(parse_dimacs_cnf("p cnf x 1\n"), Err(DimacsError::BadHeader { .. })));
        assert!(matches!(
            parse_dimacs_cnf("p cnf 3 1\n1 2 0\n"),
            Err(DimacsError::Clause { index: 1, source: CnfError::ClauseWidth(2) })
        ));
        assert!(matches!(
            parse_dimacs_cnf("p cnf 2 1\n1 2 3 0\n"),
            Err(DimacsError::Clause { source: CnfError::VariableOutOfRange { .. }, .. })
        ));
        assert!(matches!(
            parse_dimacs_cnf("p cnf 3 1\n1 1 2 0\n"),
            Err(DimacsError::Clause { source: CnfError::RepeatedLiteral(_), .. })
        ));
        assert_eq!(parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"), Err(DimacsError::Unterminated));
        assert_eq!(
            parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"),
            Err(DimacsError::ClauseCount { declared: 2, found: 1 })
        );
        assert!(matches!(parse_dimacs_cnf("p cnf 3 1\n1 a 3 0\n"), Err(DimacsError::BadToken { .. })));
    }
}
