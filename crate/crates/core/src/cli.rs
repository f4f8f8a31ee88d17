//! Map files and the `mapaut` command line.
//!
//! File format, one item per line, `#` starts a comment:
//!
//! ```text
//! oriented 4            flags 4
//! R 1 0 3 2             lambda ...
//! L 2 3 0 1             rho ...
//! labels 0 0 1 1        tau ...
//! ```
//!
//! The `labels` line is optional; its integers become single-node labels.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::group::GeneratorSet;
use crate::labels::LabelStore;
use crate::maps::{FlagMap, MapError, OrientedMap};
use crate::nonorientable::antipodal_double_cover;
use crate::oracle::{oracle_aut_elements, oracle_aut_full_elements, oracle_flag_aut_elements};
use crate::perm::Perm;
use crate::pipeline::{aut_full, aut_plus, aut_plus_with, iso_flags, iso_oriented, MapInput};
use crate::reduce::ScheduleOptions;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid map: {0}")]
    Map(#[from] MapError),
}

fn perr(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, msg: msg.into() }
}

fn parse_ints(line: usize, words: &[&str], n: usize) -> Result<Vec<i64>, CliError> {
    if words.len() != n {
        return Err(perr(line, format!("expected {n} values, found {}", words.len())));
    }
    words.iter().map(|w| w.parse::<i64>().map_err(|_| perr(line, format!("not an integer: {w}")))).collect()
}

fn parse_perm(line: usize, words: &[&str], n: usize) -> Result<Perm, CliError> {
    let v = parse_ints(line, words, n)?;
    let images: Vec<usize> = v
        .iter()
        .map(|&x| if x >= 0 && (x as usize) < n { Ok(x as usize) } else { Err(perr(line, format!("index out of range: {x}"))) })
        .collect::<Result<_, _>>()?;
    Perm::from_images(images).ok_or_else(|| perr(line, "not a permutation"))
}

/// Parses the text of a map file; labels are interned in `store`.
pub fn parse_map(text: &str, store: &mut LabelStore) -> Result<MapInput, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let hw: Vec<&str> = header.split_whitespace().collect();
    if hw.len() != 2 {
        return Err(perr(hl, "expected `oriented <n>` or `flags <n>`"));
    }
    let n: usize = hw[1].parse().map_err(|_| perr(hl, format!("bad size: {}", hw[1])))?;
    if n == 0 {
        return Err(MapError::Empty.into());
    }
    let mut fields: Vec<(String, usize, Vec<&str>)> = Vec::new();
    for (ln, l) in lines {
        let mut w = l.split_whitespace();
        let key = w.next().unwrap_or("").to_string();
        if fields.iter().any(|(k, _, _)| *k == key) {
            return Err(perr(ln, format!("duplicate line `{key}`")));
        }
        fields.push((key, ln, w.collect()));
    }
    let take = |key: &str| fields.iter().find(|(k, _, _)| k == key);
    let allowed: &[&str] = match hw[0] {
        "oriented" => &["R", "L", "labels"],
        "flags" => &["lambda", "rho", "tau"],
        other => return Err(perr(hl, format!("unknown map kind `{other}`"))),
    };
    if let Some((k, ln, _)) = fields.iter().find(|(k, _, _)| !allowed.contains(&k.as_str())) {
        return Err(perr(*ln, format!("unexpected line `{k}`")));
    }
    let need = |key: &str| -> Result<Perm, CliError> {
        let (_, ln, w) = take(key).ok_or_else(|| perr(hl, format!("missing `{key}` line")))?;
        parse_perm(*ln, w, n)
    };
    if hw[0] == "oriented" {
        let r = need("R")?;
        let l = need("L")?;
        let labels = match take("labels") {
            Some((_, ln, w)) => parse_ints(*ln, w, n)?.into_iter().map(|v| store.leaf(v)).collect(),
            None => store.constant_labeling(n),
        };
        Ok(MapInput::Oriented(OrientedMap::new(r, l, labels)?))
    } else {
        Ok(MapInput::Flags(FlagMap::new(need("lambda")?, need("rho")?, need("tau")?)?))
    }
}

pub fn read_map(path: &Path, store: &mut LabelStore) -> Result<MapInput, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_map(&text, store)
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// The map in file format. Labels are written only when some dart has a
/// nonzero single-node label.
pub fn format_map(input: &MapInput, store: &LabelStore) -> String {
    match input {
        MapInput::Oriented(m) => {
            let mut s = format!("oriented {}\nR {}\nL {}\n", m.n(), join(m.r.images()), join(m.l.images()));
            let values: Vec<i64> = m.labels.iter().map(|&l| store.value(l)).collect();
            if values.iter().any(|&v| v != 0) {
                let words: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "labels {}", words.join(" "));
            }
            s
        }
        MapInput::Flags(f) => format!(
            "flags {}\nlambda {}\nrho {}\ntau {}\n",
            f.n(),
            join(f.lambda.images()),
            join(f.rho.images()),
            join(f.tau.images())
        ),
    }
}

/// One-line summary, e.g. `v=4 e=6 f=4 chi=2 orientable genus=0`.
pub fn info_line(input: &MapInput) -> String {
    match input {
        MapInput::Oriented(m) => {
            let (v, e, f) = m.count_cells();
            let chi = m.euler_characteristic();
            format!("v={v} e={e} f={f} chi={chi} orientable genus={}", (2 - chi) / 2)
        }
        MapInput::Flags(fm) => {
            let (v, e, f) = fm.count_cells();
            let chi = fm.euler_characteristic();
            if fm.is_orientable() {
                format!("v={v} e={e} f={f} chi={chi} orientable genus={}", (2 - chi) / 2)
            } else {
                format!("v={v} e={e} f={f} chi={chi} nonorientable gamma={}", 2 - chi)
            }
        }
    }
}

/// Generator lines sorted by image arrays, then `order <k>`.
pub fn format_group(g: &GeneratorSet) -> String {
    let mut gens = g.gens.clone();
    gens.sort_by(|a, b| a.images().cmp(b.images()));
    let mut s = String::new();
    for p in &gens {
        let _ = writeln!(s, "{}", join(p.images()));
    }
    let _ = writeln!(s, "order {}", g.order);
    s
}

/// Elements of a flag group that keep each even-word class in place.
fn preserves_classes(f: &FlagMap, g: &Perm) -> bool {
    let (a, b) = f.even_generators();
    let (ids, _) = crate::maps::orbit_ids(f.n(), &[&a, &b]);
    ids[g.apply(0)] == ids[0]
}

/// The automorphism group as computed by `aut`.
pub fn compute_aut(input: &MapInput, store: &mut LabelStore, oriented_only: bool, use_oracle: bool) -> GeneratorSet {
    match (input, use_oracle) {
        (MapInput::Oriented(m), false) if oriented_only => aut_plus(m, store).group,
        (MapInput::Oriented(m), true) if oriented_only => GeneratorSet::semiregular(m.n(), oracle_aut_elements(m)),
        (MapInput::Oriented(m), true) => {
            let all = oracle_aut_full_elements(m, store);
            let k = all.len();
            GeneratorSet::with_order(m.n(), reduce_to_generators(m.n(), all), k)
        }
        (MapInput::Flags(f), true) => {
            let all: Vec<Perm> = oracle_flag_aut_elements(f)
                .into_iter()
                .filter(|g| !oriented_only || preserves_classes(f, g))
                .collect();
            GeneratorSet::semiregular(f.n(), all)
        }
        (MapInput::Flags(f), false) if oriented_only && f.is_orientable() => {
            let full = aut_full(input, store);
            let kept: Vec<Perm> = full.elements().into_iter().filter(|g| preserves_classes(f, g)).collect();
            GeneratorSet::semiregular(f.n(), kept)
        }
        _ => aut_full(input, store),
    }
}

/// A small generating subset of a list of group elements.
fn reduce_to_generators(degree: usize, elements: Vec<Perm>) -> Vec<Perm> {
    let total = elements.len();
    let mut gens: Vec<Perm> = Vec::new();
    let mut size = 1;
    for e in elements {
        if size == total {
            break;
        }
        if e.is_identity() {
            continue;
        }
        let mut trial = gens.clone();
        trial.push(e);
        let k = crate::perm::enumerate_group(&trial, degree).len();
        if k > size {
            size = k;
            gens = trial;
        }
    }
    gens
}

#[derive(Parser, Debug)]
#[command(name = "mapaut", version, about = "Automorphism groups and isomorphisms of maps on surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cell counts, Euler characteristic and genus.
    Info { path: PathBuf },
    /// Generators of the automorphism group, then `order <k>`.
    Aut {
        path: PathBuf,
        /// Only orientation-preserving automorphisms.
        #[arg(long)]
        oriented_only: bool,
        /// Use the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        /// Print the reduction steps on stderr.
        #[arg(long)]
        trace: bool,
    },
    /// An isomorphism from the first map to the second, if any.
    Iso { first: PathBuf, second: PathBuf },
    /// The reduction steps and the irreducible map.
    Reduce { path: PathBuf },
    /// Same as `aut --oracle`.
    Oracle {
        path: PathBuf,
        #[arg(long)]
        oriented_only: bool,
    },
}

/// Text for stdout and stderr and the exit code of one command.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn ok(stdout: String) -> Outcome {
    Outcome { stdout, stderr: String::new(), code: 0 }
}

fn trace_lines(input: &MapInput, store: &mut LabelStore) -> String {
    let m = match input {
        MapInput::Oriented(m) => m.clone(),
        MapInput::Flags(f) if f.is_orientable() => match f.oriented_from_flags(store) {
            Ok(p) => p.map,
            Err(e) => return format!("{e}\n"),
        },
        MapInput::Flags(f) => match antipodal_double_cover(f, store) {
            Ok(c) => c.map,
            Err(e) => return format!("{e}\n"),
        },
    };
    let a = aut_plus_with(&m, store, ScheduleOptions::default());
    let mut s = String::new();
    for step in &a.trace.steps {
        let _ = writeln!(s, "{step}");
    }
    let (v, e, f) = a.trace.last.count_cells();
    let _ = writeln!(s, "terminal {:?} v={v} e={e} f={f} solver {:?}", a.trace.terminal, a.solver);
    s
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let mut store = LabelStore::new();
    match &cli.command {
        Command::Info { path } => {
            let m = read_map(path, &mut store)?;
            let unit = if matches!(m, MapInput::Oriented(_)) { "darts" } else { "flags" };
            Ok(ok(format!("{unit} {}\n{}\n", m.n(), info_line(&m))))
        }
        Command::Aut { path, oriented_only, oracle, trace } => {
            let m = read_map(path, &mut store)?;
            let stderr = if *trace { trace_lines(&m, &mut store) } else { String::new() };
            let g = compute_aut(&m, &mut store, *oriented_only, *oracle);
            Ok(Outcome { stdout: format_group(&g), stderr, code: 0 })
        }
        Command::Oracle { path, oriented_only } => {
            let m = read_map(path, &mut store)?;
            Ok(ok(format_group(&compute_aut(&m, &mut store, *oriented_only, true))))
        }
        Command::Iso { first, second } => {
            let a = read_map(first, &mut store)?;
            let b = read_map(second, &mut store)?;
            let w = match (&a, &b) {
                (MapInput::Oriented(x), MapInput::Oriented(y)) => iso_oriented(x, y, &store),
                (MapInput::Flags(x), MapInput::Flags(y)) => iso_flags(x, y, &mut store),
                _ => None,
            };
            Ok(match w {
                Some(p) => ok(format!("isomorphic\n{}\n", join(p.images()))),
                None => Outcome { stdout: "non-isomorphic\n".into(), stderr: String::new(), code: 1 },
            })
        }
        Command::Reduce { path } => {
            let m = read_map(path, &mut store)?;
            Ok(ok(trace_lines(&m, &mut store)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build;

    #[test]
    fn parse_b1_and_errors() {
        let mut s = LabelStore::new();
        let m = parse_map("oriented 2\nR 1 0\nL 1 0\n", &mut s).unwrap();
        assert_eq!(info_line(&m), "v=1 e=1 f=2 chi=2 orientable genus=0");
        let e = parse_map("oriented 2\nR 1 0\nL 0 1\n", &mut s).unwrap_err();
        assert!(e.to_string().contains("fixed point"), "{e}");
        let e = parse_map("oriented 2\n# c\nR 1 x\nL 1 0\n", &mut s).unwrap_err();
        assert!(matches!(e, CliError::Parse { line: 3, .. }), "{e}");
        assert!(parse_map("", &mut s).is_err());
        assert!(parse_map("oriented 2\nR 1 0\n", &mut s).is_err());
    }

    #[test]
    fn round_trip() {
        let mut s = LabelStore::new();
        let mut t = build::tetrahedron(&mut s);
        t.labels[3] = s.leaf(5);
        for input in [MapInput::Oriented(t), MapInput::Oriented(build::cube(&mut s)), MapInput::Flags(build::klein_grid(2, 2))] {
            let text = format_map(&input, &s);
            let back = parse_map(&text, &mut s).unwrap();
            assert_eq!(format_map(&back, &s), text);
        }
    }

    #[test]
    fn info_lines() {
        let mut s = LabelStore::new();
        assert_eq!(info_line(&MapInput::Oriented(build::tetrahedron(&mut s))), "v=4 e=6 f=4 chi=2 orientable genus=0");
        assert!(info_line(&MapInput::Oriented(build::quad_torus(3, 3, 0, &mut s))).ends_with("chi=0 orientable genus=1"));
        assert!(info_line(&MapInput::Flags(build::projective_loop())).ends_with("chi=1 nonorientable gamma=1"));
    }

    #[test]
    fn aut_agrees_with_oracle_on_flags() {
        let mut s = LabelStore::new();
        let f = FlagMap::from_signed(&build::tetrahedron(&mut s), &|_| false);
        let input = MapInput::Flags(f);
        for oriented_only in [false, true] {
            let a = compute_aut(&input, &mut s, oriented_only, false);
            let b = compute_aut(&input, &mut s, oriented_only, true);
            assert_eq!(a.element_set(), b.element_set());
            assert_eq!(a.order, if oriented_only { 12 } else { 24 });
        }
    }
}
