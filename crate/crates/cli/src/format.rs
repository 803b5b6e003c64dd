//! Plain-text formats. Every file starts with its order `n` on a line of its
//! own; numbers are 0-based.
//!
//! * table: `n` lines of `n` whitespace-separated symbols;
//! * partial array: as a table, with `.` for an empty cell;
//! * matrix: `n` lines of `n` characters from `{0, 1}`;
//! * graph pair / matrix pair: red (or `A`) grid, one blank line, green (or `B`) grid;
//! * partition system: one line per base block, `block | companion`, where the
//!   companion's blocks are separated by `/`.
//!
//! Trailing blank lines and trailing whitespace are ignored. Rendering always
//! produces the normalized form, so `parse(render(x)) == x`.

use std::fmt;

use rectangularity::{BoolMatrix, GraphPair, Groupoid, PartialArray, Partition, PartitionSystem};

/// A malformed input with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

type Parsed<T> = Result<T, ParseError>;

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Parsed<T> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

/// Lines with trailing whitespace and trailing blank lines removed, paired
/// with their 1-based line numbers.
struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .collect();
        while lines.last().is_some_and(|(_, l)| l.is_empty()) {
            lines.pop();
        }
        Self { lines, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Parsed<(usize, &'a str)> {
        match self.lines.get(self.pos) {
            Some(&l) => {
                self.pos += 1;
                Ok(l)
            }
            None => {
                let line = self.lines.last().map_or(1, |(i, _)| i + 1);
                err(line, 1, format!("unexpected end of input, expected {what}"))
            }
        }
    }

    fn finish(&self) -> Parsed<()> {
        match self.lines.get(self.pos) {
            Some(&(line, _)) => err(line, 1, "unexpected extra line"),
            None => Ok(()),
        }
    }
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn parse_order(lines: &mut Lines) -> Parsed<usize> {
    let (line, text) = lines.next("the order")?;
    let toks = tokens(text);
    match toks.as_slice() {
        [(col, tok)] => match tok.parse::<usize>() {
            Ok(0) => err(line, *col, "order must be at least 1"),
            Ok(n) => Ok(n),
            Err(_) => err(line, *col, format!("expected the order, found {tok:?}")),
        },
        [] => err(line, 1, "expected the order, found an empty line"),
        [_, (col, _), ..] => err(line, *col, "expected a single number on the order line"),
    }
}

/// Reads `n` rows of `n` cells, each either a symbol below `n` or, when
/// `allow_empty`, a `.`.
fn parse_cells(lines: &mut Lines, n: usize, allow_empty: bool) -> Parsed<Vec<Option<usize>>> {
    let mut cells = Vec::with_capacity(n * n);
    for r in 0..n {
        let (line, text) = lines.next(&format!("row {r}"))?;
        let toks = tokens(text);
        if toks.len() != n {
            let col = toks.get(n).map_or(text.len() + 1, |t| t.0);
            return err(
                line,
                col,
                format!("expected {n} entries, found {}", toks.len()),
            );
        }
        for (col, tok) in toks {
            if allow_empty && tok == "." {
                cells.push(None);
                continue;
            }
            match tok.parse::<usize>() {
                Ok(v) if v < n => cells.push(Some(v)),
                Ok(v) => return err(line, col, format!("entry {v} out of range 0..{n}")),
                Err(_) => return err(line, col, format!("expected a symbol, found {tok:?}")),
            }
        }
    }
    Ok(cells)
}

pub fn parse_table(text: &str) -> Parsed<Groupoid> {
    let mut lines = Lines::new(text);
    let n = parse_order(&mut lines)?;
    let cells = parse_cells(&mut lines, n, false)?;
    lines.finish()?;
    let entries: Vec<usize> = cells.into_iter().map(|c| c.expect("no empties")).collect();
    Groupoid::new(n, &entries).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

/// `offset` is added to every displayed symbol (1 for 1-based display).
pub fn render_table(g: &Groupoid, offset: usize) -> String {
    let n = g.order();
    let mut s = format!("{n}\n");
    for a in 0..n {
        let row: Vec<String> = g.row(a).map(|x| (x + offset).to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_partial(text: &str) -> Parsed<PartialArray> {
    let mut lines = Lines::new(text);
    let n = parse_order(&mut lines)?;
    let cells = parse_cells(&mut lines, n, true)?;
    lines.finish()?;
    PartialArray::new(n, &cells).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

pub fn render_partial(p: &PartialArray, offset: usize) -> String {
    let n = p.order();
    let mut s = format!("{n}\n");
    for r in 0..n {
        let row: Vec<String> = (0..n)
            .map(|c| {
                p.get(r, c)
                    .map_or(".".to_string(), |x| (x + offset).to_string())
            })
            .collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn parse_grid(lines: &mut Lines, n: usize, name: &str) -> Parsed<BoolMatrix> {
    let mut bits = Vec::with_capacity(n * n);
    for r in 0..n {
        let (line, text) = lines.next(&format!("{name} row {r}"))?;
        let chars: Vec<char> = text.chars().collect();
        if chars.len() != n {
            return err(
                line,
                chars.len().min(n) + 1,
                format!(
                    "expected {n} characters in {name} row {r}, found {}",
                    chars.len()
                ),
            );
        }
        for (c, ch) in chars.into_iter().enumerate() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return err(line, c + 1, format!("expected 0 or 1, found {other:?}")),
            }
        }
    }
    Ok(BoolMatrix::from_entries(n, &bits).expect("validated bits"))
}

fn render_grid(m: &BoolMatrix, s: &mut String) {
    for i in 0..m.order() {
        for j in 0..m.order() {
            s.push(if m.get(i, j) { '1' } else { '0' });
        }
        s.push('\n');
    }
}

pub fn parse_matrix(text: &str) -> Parsed<BoolMatrix> {
    let mut lines = Lines::new(text);
    let n = parse_order(&mut lines)?;
    let m = parse_grid(&mut lines, n, "matrix")?;
    lines.finish()?;
    Ok(m)
}

pub fn render_matrix(m: &BoolMatrix) -> String {
    let mut s = format!("{}\n", m.order());
    render_grid(m, &mut s);
    s
}

/// Two grids of one order separated by a blank line.
pub fn parse_matrix_pair(text: &str) -> Parsed<(BoolMatrix, BoolMatrix)> {
    let mut lines = Lines::new(text);
    let n = parse_order(&mut lines)?;
    let a = parse_grid(&mut lines, n, "first")?;
    let (line, sep) = lines.next("a blank line")?;
    if !sep.is_empty() {
        return err(line, 1, "expected a blank line between the two grids");
    }
    let b = parse_grid(&mut lines, n, "second")?;
    lines.finish()?;
    Ok((a, b))
}

pub fn render_matrix_pair(a: &BoolMatrix, b: &BoolMatrix) -> String {
    let mut s = format!("{}\n", a.order());
    render_grid(a, &mut s);
    s.push('\n');
    render_grid(b, &mut s);
    s
}

pub fn parse_graph_pair(text: &str) -> Parsed<GraphPair> {
    let (red, green) = parse_matrix_pair(text)?;
    Ok(GraphPair::from_matrices(red, green).expect("grids share the order"))
}

pub fn render_graph_pair(gp: &GraphPair) -> String {
    render_matrix_pair(gp.red(), gp.green())
}

fn parse_list(line: usize, col: usize, text: &str, n: usize) -> Parsed<Vec<usize>> {
    let mut out = Vec::new();
    for (c, tok) in tokens(text) {
        match tok.parse::<usize>() {
            Ok(v) if v < n => out.push(v),
            Ok(v) => {
                return err(
                    line,
                    col + c - 1,
                    format!("element {v} out of range 0..{n}"),
                )
            }
            Err(_) => {
                return err(
                    line,
                    col + c - 1,
                    format!("expected an element, found {tok:?}"),
                )
            }
        }
    }
    if out.is_empty() {
        return err(line, col, "empty block");
    }
    Ok(out)
}

/// Example for `n = 4`:
///
/// ```text
/// 4
/// 0 1 | 0 2 / 1 3
/// 2 3 | 0 2 / 1 3
/// ```
pub fn parse_partition_system(text: &str) -> Parsed<PartitionSystem> {
    let mut lines = Lines::new(text);
    let n = parse_order(&mut lines)?;
    let mut base = Vec::new();
    let mut companions = Vec::new();
    while let Ok((line, text)) = lines.next("a block line") {
        let Some(bar) = text.find('|') else {
            return err(line, 1, "expected `block | companion blocks`");
        };
        base.push(parse_list(line, 1, &text[..bar], n)?);
        let mut blocks = Vec::new();
        let mut col = bar + 2;
        for part in text[bar + 1..].split('/') {
            blocks.push(parse_list(line, col, part, n)?);
            col += part.len() + 1;
        }
        let p = Partition::new(n, &blocks).map_err(|e| ParseError {
            line,
            column: bar + 2,
            message: e.to_string(),
        })?;
        companions.push(p);
    }
    let firsts: Vec<usize> = base.iter().map(|b| b[0]).collect();
    let base = Partition::new(n, &base).map_err(|e| ParseError {
        line: 2,
        column: 1,
        message: format!("base blocks: {e}"),
    })?;
    // lines may list the blocks in any order; companions follow their block
    let mut sorted: Vec<Option<Partition>> = vec![None; companions.len()];
    for (first, p) in firsts.into_iter().zip(companions) {
        sorted[base.block_of(first)] = Some(p);
    }
    let companions = sorted
        .into_iter()
        .map(|p| p.expect("one per block"))
        .collect();
    PartitionSystem::new(base, companions).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

pub fn render_partition_system(ps: &PartitionSystem) -> String {
    let mut s = format!("{}\n", ps.order());
    let join = |b: &[usize]| {
        b.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    for (block, theta) in ps.base().blocks().iter().zip(ps.companions()) {
        let comp: Vec<String> = theta.blocks().iter().map(|b| join(b)).collect();
        s.push_str(&format!("{} | {}\n", join(block), comp.join(" / ")));
    }
    s
}
