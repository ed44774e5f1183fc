//! Edge-list text format.
//!
//! A tree is written as a header line `n m` followed by `m` lines `u v` with
//! 0-based labels. Tokens are whitespace-separated, `#` starts a comment that
//! runs to end of line, and blank lines separate trees in multi-tree files.

use thiserror::Error;

use crate::tree::{Tree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Data lines of one block: `(line_number, tokens)` with comments stripped.
type Block = Vec<(usize, Vec<usize>)>;

fn lex_blocks(input: &str) -> Result<Vec<Block>, ParseError> {
    let mut blocks = Vec::new();
    let mut current: Block = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let data = raw.split('#').next().unwrap_or("");
        if data.trim().is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
            continue;
        }
        let mut numbers = Vec::new();
        for token in data.split_whitespace() {
            let value = token
                .parse::<usize>()
                .map_err(|_| syntax(line_no, format!("expected an integer, got `{token}`")))?;
            numbers.push(value);
        }
        current.push((line_no, numbers));
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    Ok(blocks)
}

fn block_to_tree(block: &Block) -> Result<Tree, ParseError> {
    let (header_line, header) = &block[0];
    if header.len() != 2 {
        return Err(syntax(*header_line, "header must be `n m`"));
    }
    let (n, m) = (header[0], header[1]);
    if block.len() - 1 != m {
        return Err(syntax(
            *header_line,
            format!(
                "header announces {} edges, block has {}",
                m,
                block.len() - 1
            ),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for (line_no, tokens) in &block[1..] {
        if tokens.len() != 2 {
            return Err(syntax(*line_no, "edge line must be `u v`"));
        }
        edges.push((tokens[0], tokens[1]));
    }
    Ok(Tree::from_edges(n, &edges)?)
}

/// Parses exactly one tree.
pub fn parse_tree(input: &str) -> Result<Tree, ParseError> {
    let blocks = lex_blocks(input)?;
    match blocks.len() {
        0 => Err(syntax(1, "empty input")),
        1 => block_to_tree(&blocks[0]),
        more => Err(syntax(1, format!("expected one tree, found {more} blocks"))),
    }
}

/// Parses a file of blank-line-separated trees.
pub fn parse_trees(input: &str) -> Result<Vec<Tree>, ParseError> {
    lex_blocks(input)?.iter().map(block_to_tree).collect()
}

/// Renders one tree as an edge-list block (with trailing newline).
pub fn format_tree(tree: &Tree) -> String {
    let mut out = format!("{} {}\n", tree.vertex_count(), tree.vertex_count() - 1);
    for (u, v) in tree.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Renders several trees separated by blank lines.
pub fn format_trees<'a>(trees: impl IntoIterator<Item = &'a Tree>) -> String {
    let blocks: Vec<String> = trees.into_iter().map(format_tree).collect();
    blocks.join("\n")
}
