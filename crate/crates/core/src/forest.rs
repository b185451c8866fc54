//! Parse forests.

use crate::error::{Error, Result};
use crate::grammar::{Grammar, Pid};
use crate::symbol::{SymString, Symbol};

/// A node of a parse forest. Internal nodes carry the production used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseNode {
    pub symbol: Symbol,
    pub production: Option<Pid>,
    pub children: Vec<ParseNode>,
}

impl ParseNode {
    pub fn leaf(symbol: Symbol) -> Self {
        ParseNode {
            symbol,
            production: None,
            children: Vec::new(),
        }
    }

    pub fn internal(symbol: Symbol, pid: Pid, children: Vec<ParseNode>) -> Self {
        ParseNode {
            symbol,
            production: Some(pid),
            children,
        }
    }

    fn walk(&self, g: &Grammar, leaves: &mut Vec<Symbol>, internal: &mut usize) -> Result<()> {
        let Some(pid) = self.production else {
            if !self.children.is_empty() {
                return Err(Error::Precondition(format!(
                    "node {} has children but no production label",
                    self.symbol
                )));
            }
            leaves.push(self.symbol.clone());
            return Ok(());
        };
        let p = g
            .production(pid)
            .ok_or_else(|| Error::NoSuchProduction(pid.to_string()))?;
        if p.lhs != self.symbol {
            return Err(Error::Precondition(format!(
                "node labelled {} uses production {p}",
                self.symbol
            )));
        }
        let labels: Vec<&Symbol> = self.children.iter().map(|c| &c.symbol).collect();
        if labels.len() != p.rhs.len() || labels.iter().zip(p.rhs.iter()).any(|(a, b)| *a != b) {
            return Err(Error::Precondition(format!(
                "children of {} do not spell {}",
                self.symbol,
                p.rhs.spaced()
            )));
        }
        *internal += 1;
        for c in &self.children {
            c.walk(g, leaves, internal)?;
        }
        Ok(())
    }
}

/// An ordered forest of parse trees.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParseForest {
    pub roots: Vec<ParseNode>,
}

/// What a verified forest proves: it parses `parsed` as `root` in `steps`
/// steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseSummary {
    pub root: SymString,
    pub parsed: SymString,
    pub steps: usize,
}

/// Checks every node against the grammar and reports root string, leaf
/// string and internal node count.
pub fn verify_parse(g: &Grammar, forest: &ParseForest) -> Result<ParseSummary> {
    let mut leaves = Vec::new();
    let mut steps = 0;
    for r in &forest.roots {
        if !g.has_symbol(&r.symbol) {
            return Err(Error::UnknownSymbol(r.symbol.name().to_owned()));
        }
        r.walk(g, &mut leaves, &mut steps)?;
    }
    Ok(ParseSummary {
        root: forest.roots.iter().map(|r| r.symbol.clone()).collect(),
        parsed: SymString::new(leaves),
        steps,
    })
}
