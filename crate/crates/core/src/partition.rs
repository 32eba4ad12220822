//! Vertex partitions into ranked parts `A > B > C`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    A,
    B,
    C,
}

impl Label {
    /// One rank up (`C → B → A`); `None` for `A`.
    pub fn promoted(self) -> Option<Label> {
        match self {
            Label::A => None,
            Label::B => Some(Label::A),
            Label::C => Some(Label::B),
        }
    }

    /// One rank down (`A → B → C`); `None` for `C`.
    pub fn demoted(self) -> Option<Label> {
        match self {
            Label::A => Some(Label::B),
            Label::B => Some(Label::C),
            Label::C => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::A => "A",
            Label::B => "B",
            Label::C => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Label::A),
            "B" | "b" => Ok(Label::B),
            "C" | "c" => Ok(Label::C),
            _ => Err(format!("unknown label `{s}`")),
        }
    }
}

/// Which lemma a partition feeds: three parts for linear forests, two for stars.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionMode {
    Abc,
    Ab,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    mode: PartitionMode,
    labels: BTreeMap<Vertex, Label>,
}

impl Partition {
    pub fn new(mode: PartitionMode) -> Self {
        Partition {
            mode,
            labels: BTreeMap::new(),
        }
    }

    /// Every vertex of `g` labeled `label`.
    pub fn uniform(g: &Graph, mode: PartitionMode, label: Label) -> Self {
        let mut p = Partition::new(mode);
        for v in g.vertices() {
            p.set(v, label);
        }
        p
    }

    pub fn from_pairs<I: IntoIterator<Item = (Vertex, Label)>>(
        mode: PartitionMode,
        pairs: I,
    ) -> Self {
        Partition {
            mode,
            labels: pairs.into_iter().collect(),
        }
    }

    pub fn mode(&self) -> PartitionMode {
        self.mode
    }

    /// Panics when `label` is `C` in AB mode.
    pub fn set(&mut self, v: Vertex, label: Label) {
        assert!(
            !(self.mode == PartitionMode::Ab && label == Label::C),
            "label C is not allowed in an AB partition"
        );
        self.labels.insert(v, label);
    }

    pub fn get(&self, v: Vertex) -> Option<Label> {
        self.labels.get(&v).copied()
    }

    /// Panics if `v` is unlabeled.
    pub fn label(&self, v: Vertex) -> Label {
        self.labels[&v]
    }

    pub fn remove(&mut self, v: Vertex) {
        self.labels.remove(&v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Label)> + '_ {
        self.labels.iter().map(|(&v, &l)| (v, l))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Restriction to the vertices of `g`.
    pub fn restricted_to(&self, g: &Graph) -> Partition {
        Partition {
            mode: self.mode,
            labels: g
                .vertices()
                .filter_map(|v| Some((v, self.get(v)?)))
                .collect(),
        }
    }

    /// Checks that exactly the vertices of `g` are labeled, and that AB mode
    /// carries no `C`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        if let Some(v) = g.vertices().find(|&v| !self.labels.contains_key(&v)) {
            return Err(format!("vertex {v} is unlabeled"));
        }
        if let Some(v) = self.labels.keys().find(|&&v| !g.contains(v)) {
            return Err(format!("label for unknown vertex {v}"));
        }
        if self.mode == PartitionMode::Ab && self.labels.values().any(|&l| l == Label::C) {
            return Err("label C in an AB partition".into());
        }
        Ok(())
    }

    /// Parses one `index label` line per vertex; blank lines and `#`
    /// comments are ignored. The mode is AB when no `C` label occurs and
    /// `mode` is `None`.
    pub fn parse(text: &str, mode: Option<PartitionMode>) -> Result<Partition, String> {
        let mut labels = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let (Some(idx), Some(lab), None) = (it.next(), it.next(), it.next()) else {
                return Err(format!("line {}: expected `index label`", i + 1));
            };
            let idx: u32 = idx
                .parse()
                .map_err(|_| format!("line {}: bad vertex index `{idx}`", i + 1))?;
            let lab: Label = lab.parse().map_err(|e| format!("line {}: {e}", i + 1))?;
            if labels.insert(Vertex(idx), lab).is_some() {
                return Err(format!("line {}: vertex {idx} labeled twice", i + 1));
            }
        }
        let has_c = labels.values().any(|&l| l == Label::C);
        let mode = mode.unwrap_or(if has_c {
            PartitionMode::Abc
        } else {
            PartitionMode::Ab
        });
        if mode == PartitionMode::Ab && has_c {
            return Err("label C in an AB partition".into());
        }
        Ok(Partition { mode, labels })
    }

    pub fn to_text(&self) -> String {
        self.labels
            .iter()
            .map(|(v, l)| format!("{v} {l}\n"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_moves() {
        assert_eq!(Label::C.promoted(), Some(Label::B));
        assert_eq!(Label::A.promoted(), None);
        assert_eq!(Label::A.demoted(), Some(Label::B));
        assert_eq!(Label::C.demoted(), None);
    }

    #[test]
    fn parse_and_validate() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p = Partition::parse("0 A\n1 B # middle\n\n2 A\n", None).unwrap();
        assert_eq!(p.mode(), PartitionMode::Ab);
        assert!(p.validate(&g).is_ok());
        let p = Partition::parse("0 A\n1 C\n", None).unwrap();
        assert_eq!(p.mode(), PartitionMode::Abc);
        assert!(p.validate(&g).is_err());
        assert!(Partition::parse("0 A\n0 B\n", None).is_err());
        assert!(Partition::parse("0 Q\n", None).is_err());
        assert!(Partition::parse("0 C\n", Some(PartitionMode::Ab)).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let p = Partition::from_pairs(
            PartitionMode::Abc,
            [(Vertex(0), Label::A), (Vertex(4), Label::C)],
        );
        assert_eq!(
            Partition::parse(&p.to_text(), Some(PartitionMode::Abc)).unwrap(),
            p
        );
    }
}
