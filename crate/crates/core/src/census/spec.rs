use crate::error::{Error, Result};
use crate::generators::{cayley, circulant, kneser};
use crate::graph::{parse_graph6, Graph};
use crate::groups::GroupTable;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

/// A recipe for one census graph, written as colon-separated text:
///
/// ```text
/// circulant:15:3,5
/// cayley:Z3xZ5:5,10,1,4
/// kneser:7:2
/// complement_of:circulant:15:3,5
/// file:graphs.g6:2
/// ```
///
/// File lines are 1-based; the path is everything between `file:` and the
/// last colon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Circulant { n: usize, steps: Vec<usize> },
    Cayley { group: String, conn: Vec<usize> },
    Kneser { n: usize, k: usize },
    ComplementOf(Box<GraphSpec>),
    File { path: PathBuf, line: usize },
}

impl GraphSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GraphSpec::Circulant { .. } => "circulant",
            GraphSpec::Cayley { .. } => "cayley",
            GraphSpec::Kneser { .. } => "kneser",
            GraphSpec::ComplementOf(_) => "complement_of",
            GraphSpec::File { .. } => "file",
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Circulant { n, steps } => {
                distinct(steps, self)?;
                circulant(*n, steps)
            }
            GraphSpec::Cayley { group, conn } => {
                distinct(conn, self)?;
                cayley(&GroupTable::bundled(group)?, conn)
            }
            GraphSpec::Kneser { n, k } => kneser(*n, *k),
            GraphSpec::ComplementOf(inner) => Ok(inner.build()?.complement()),
            GraphSpec::File { path, line } => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
                let row = line
                    .checked_sub(1)
                    .and_then(|i| text.lines().nth(i))
                    .ok_or_else(|| invalid(self, format!("no line {line}")))?;
                parse_graph6(row)
            }
        }
    }
}

fn distinct(xs: &[usize], spec: &GraphSpec) -> Result<()> {
    let mut sorted = xs.to_vec();
    sorted.sort_unstable();
    match sorted.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(invalid(spec, format!("{} is listed twice", w[0]))),
        None => Ok(()),
    }
}

fn invalid(spec: impl fmt::Display, reason: impl Into<String>) -> Error {
    Error::InvalidSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn number(s: &str, whole: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| invalid(whole, format!("`{s}` is not a number")))
}

fn list(s: &str, whole: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Err(invalid(whole, "empty element list"));
    }
    s.split(',').map(|x| number(x, whole)).collect()
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (family, rest) = s
            .split_once(':')
            .ok_or_else(|| invalid(s, "expected `family:parameters`"))?;
        let parts: Vec<&str> = rest.split(':').collect();
        let arity = |k: usize| {
            if parts.len() == k {
                Ok(())
            } else {
                Err(invalid(s, format!("{family} takes {k} parameters")))
            }
        };
        match family {
            "circulant" => {
                arity(2)?;
                Ok(GraphSpec::Circulant {
                    n: number(parts[0], s)?,
                    steps: list(parts[1], s)?,
                })
            }
            "cayley" => {
                arity(2)?;
                Ok(GraphSpec::Cayley {
                    group: parts[0].to_string(),
                    conn: list(parts[1], s)?,
                })
            }
            "kneser" => {
                arity(2)?;
                Ok(GraphSpec::Kneser {
                    n: number(parts[0], s)?,
                    k: number(parts[1], s)?,
                })
            }
            "complement_of" => Ok(GraphSpec::ComplementOf(Box::new(rest.parse()?))),
            "file" => {
                let (path, line) = rest
                    .rsplit_once(':')
                    .ok_or_else(|| invalid(s, "expected `file:path:line`"))?;
                if path.is_empty() {
                    return Err(invalid(s, "empty path"));
                }
                Ok(GraphSpec::File {
                    path: PathBuf::from(path),
                    line: number(line, s)?,
                })
            }
            other => Err(invalid(s, format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Circulant { n, steps } => write!(f, "circulant:{n}:{}", join(steps)),
            GraphSpec::Cayley { group, conn } => write!(f, "cayley:{group}:{}", join(conn)),
            GraphSpec::Kneser { n, k } => write!(f, "kneser:{n}:{k}"),
            GraphSpec::ComplementOf(inner) => write!(f, "complement_of:{inner}"),
            GraphSpec::File { path, line } => write!(f, "file:{}:{line}", path.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::to_graph6;
    use std::io::Write;

    #[test]
    fn round_trip() {
        for s in [
            "circulant:15:3,5",
            "cayley:Z3xZ5:5,10,1,4",
            "kneser:7:2",
            "complement_of:complement_of:circulant:9:1,3",
            "file:some:dir/graphs.g6:12",
        ] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let f: GraphSpec = "file:a:b:3".parse().unwrap();
        assert_eq!(
            f,
            GraphSpec::File {
                path: "a:b".into(),
                line: 3
            }
        );
    }

    #[test]
    fn rejects_malformed() {
        for s in [
            "",
            "circulant",
            "circulant:15",
            "circulant:x:1",
            "circulant:15:",
            "kneser:7:2:1",
            "torus:3:3",
            "file:3",
            "complement_of:nothing",
        ] {
            assert!(s.parse::<GraphSpec>().is_err(), "{s}");
        }
        let dup: GraphSpec = "circulant:9:1,1".parse().unwrap();
        assert!(matches!(dup.build(), Err(Error::InvalidSpec { .. })));
        let bad_group: GraphSpec = "cayley:Z4:1,3".parse().unwrap();
        assert!(bad_group.build().is_err());
    }

    #[test]
    fn builds() {
        let c: GraphSpec = "circulant:5:1".parse().unwrap();
        assert_eq!(c.build().unwrap(), Graph::cycle(5).unwrap());
        let k: GraphSpec = "complement_of:kneser:5:1".parse().unwrap();
        assert_eq!(k.build().unwrap().edge_count(), 0);

        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "Bw").unwrap();
        writeln!(file, "{}", to_graph6(&Graph::cycle(7).unwrap())).unwrap();
        let spec = GraphSpec::File {
            path: file.path().to_path_buf(),
            line: 2,
        };
        assert_eq!(spec.build().unwrap(), Graph::cycle(7).unwrap());
        let missing = GraphSpec::File {
            path: file.path().to_path_buf(),
            line: 3,
        };
        assert!(missing.build().is_err());
        let zero = GraphSpec::File {
            path: file.path().to_path_buf(),
            line: 0,
        };
        assert!(zero.build().is_err());
    }
}
