//! Line-oriented run reports with a versioned header.
//!
//! Every command emits one report: header, the command name, the run
//! configuration it actually used, a `repro:` line that reruns it, result
//! lines, and the exit code.  Reports go to stdout unless `--output` names a
//! file.

use std::fmt::Display;
use std::path::Path;

pub struct Report {
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str, argv: &[String]) -> Self {
        let mut lines = vec![
            "kgcert report v1".to_owned(),
            format!("command: {command}"),
        ];
        let quoted: Vec<String> = argv.iter().map(|a| quote(a)).collect();
        lines.push(format!("repro: kgcert {}", quoted.join(" ")));
        Report { lines }
    }

    /// One `key: value` configuration or result line.
    pub fn kv(&mut self, key: &str, value: impl Display) {
        self.lines.push(format!("{key}: {value}"));
    }

    /// A raw line, for embedded payloads.
    pub fn raw(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    /// Appends the exit line and writes the report.
    pub fn finish(mut self, exit: i32, output: Option<&Path>) -> Result<(), String> {
        self.kv("exit", exit);
        let text = self.lines.join("\n") + "\n";
        match output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

/// Shell-quotes one argument for the repro line.
fn quote(arg: &str) -> String {
    let plain = !arg.is_empty()
        && arg
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "-_./,:^=+".contains(c));
    if plain {
        arg.to_owned()
    } else {
        format!("'{}'", arg.replace('\'', r"'\''"))
    }
}
