//! Threshold graphs generated by binary strings.

use serde::Serialize;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Symbol {
    Zero,
    One,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
        }
    }
}

/// A maximal run of equal symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub symbol: Symbol,
    pub len: usize,
    /// Position of the first symbol of the run in the source string.
    pub start: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPartition {
    source: String,
    blocks: Vec<Block>,
}

impl BlockPartition {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Total number of symbols.
    pub fn order(&self) -> usize {
        self.source.len()
    }

    /// First two symbols agree (or the string has a single block).
    pub fn is_canonical(&self) -> bool {
        self.blocks.len() == 1 || self.blocks[0].len >= 2
    }

    /// The generated graph is connected iff the last block is a 1-block.
    pub fn is_connected(&self) -> bool {
        self.blocks.last().is_some_and(|b| b.symbol == Symbol::One)
    }

    /// Vertex positions covered by block `i`.
    pub fn block_vertices(&self, i: usize) -> VertexSet {
        let b = self.blocks[i];
        VertexSet::full(b.start + b.len) - VertexSet::full(b.start)
    }
}

fn parse_symbols(s: &str) -> Result<Vec<Symbol>> {
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty binary string".into()));
    }
    s.chars()
        .enumerate()
        .map(|(pos, ch)| match ch {
            '0' => Ok(Symbol::Zero),
            '1' => Ok(Symbol::One),
            ch => Err(Error::IllegalSymbol { ch, pos }),
        })
        .collect()
}

/// Run-length decomposition of a binary string.
pub fn block_partition(s: &str) -> Result<BlockPartition> {
    let syms = parse_symbols(s)?;
    let mut blocks: Vec<Block> = Vec::new();
    for (pos, &symbol) in syms.iter().enumerate() {
        match blocks.last_mut() {
            Some(b) if b.symbol == symbol => b.len += 1,
            _ => blocks.push(Block { symbol, len: 1, start: pos }),
        }
    }
    Ok(BlockPartition { source: s.to_owned(), blocks })
}

/// Vertex `k` is symbol `k`; `j < k` are adjacent iff symbol `k` is `1`.
pub fn threshold_from_string(s: &str) -> Result<Graph> {
    let syms = parse_symbols(s)?;
    let n = syms.len();
    let mut g = Graph::with_vertices(n)?;
    for (k, &sym) in syms.iter().enumerate() {
        if sym == Symbol::One {
            for j in 0..k {
                g.add_edge(j, k)?;
            }
        }
    }
    Ok(g)
}
