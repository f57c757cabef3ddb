// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use crate::{CliError, RunConfig};
use chromatic_critic::graph::{enumerate_all, generate, parse_graph6, Family, Graph, MAX_ENUMERATION_ORDER};
use std::path::{Path, PathBuf};

/// Graphs read from a graph6 file, in file order, and the lines that failed.
#[derive(Clone, Debug, Default)]
pub struct Ingested {
    pub graphs: Vec<Graph>,
    /// `(line number, message)`, 1-based.
    pub bad: Vec<(usize, String)>,
}

/// Reads newline-delimited graph6 records. Blank lines are ignored.
pub fn ingest_corpus(path: &Path) -> Result<Ingested, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let mut out = Ingested::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line.as_bytes()) {
            Ok(g) => out.graphs.push(g),
            Err(e) => out.bad.push((i + 1, e.to_string())),
        }
    }
    Ok(out)
}

/// All graphs named by `--nmax`, `--in` and `--graph6`, plus warnings for
/// skipped lines.
pub fn collect_graphs(config: &RunConfig) -> Result<(Vec<Graph>, Vec<String>), CliError> {
    let mut graphs = Vec::new();
    let mut warnings = Vec::new();
    if let Some(n) = config.nmax {
        if n > MAX_ENUMERATION_ORDER {
            return Err(CliError::Usage(format!("--nmax {n} exceeds {MAX_ENUMERATION_ORDER}")));
        }
        for k in 1..=n {
            graphs.extend(enumerate_all(k)?);
        }
    }
    for item in &config.inputs {
        let path = PathBuf::from(item);
        if path.is_file() {
            let ingested = ingest_corpus(&path)?;
            if let Some((line, message)) = ingested.bad.first().filter(|_| !config.skip_bad) {
                return Err(CliError::Malformed { path, line: *line, message: message.clone() });
            }
            for (line, message) in &ingested.bad {
                warnings.push(format!("{}:{line}: skipped: {message}", path.display()));
            }
            graphs.extend(ingested.graphs);
        } else {
            let family: Family = item
                .parse()
                .map_err(|_| CliError::Usage(format!("{item:?} is neither a readable file nor a graph family")))?;
            graphs.push(generate(&family)?);
        }
    }
    for s in &config.graph6 {
        graphs.push(parse_graph6(s.trim().as_bytes())?);
    }
    Ok((graphs, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Command;
    use std::io::Write;

    fn file(lines: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(lines.as_bytes()).unwrap();
        f
    }

    #[test]
    fn triangle_line() {
        let f = file("Bw\n");
        let got = ingest_corpus(f.path()).unwrap();
        assert_eq!(got.graphs.len(), 1);
        assert_eq!(got.graphs[0].edge_count(), 3);
    }

    #[test]
    fn empty_file() {
        let got = ingest_corpus(file("").path()).unwrap();
        assert!(got.graphs.is_empty() && got.bad.is_empty());
    }

    #[test]
    fn bad_lines_need_skip_flag() {
        let f = file("Bw\n!!\nDQc\n");
        let mut cfg = RunConfig::new(Command::Verify);
        cfg.inputs = vec![f.path().display().to_string()];
        match collect_graphs(&cfg) {
            Err(CliError::Malformed { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        cfg.skip_bad = true;
        let (graphs, warnings) = collect_graphs(&cfg).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains(":2:"));
    }

    #[test]
    fn families_and_enumeration() {
        let mut cfg = RunConfig::new(Command::Analyze);
        cfg.inputs = vec!["petersen".into(), "cycle:5".into()];
        cfg.nmax = Some(3);
        cfg.graph6 = vec!["Bw".into()];
        let (graphs, _) = collect_graphs(&cfg).unwrap();
        assert_eq!(graphs.len(), 1 + 2 + 4 + 2 + 1);
        cfg.inputs = vec!["no-such-thing".into()];
        assert!(matches!(collect_graphs(&cfg), Err(CliError::Usage(_))));
    }
}
