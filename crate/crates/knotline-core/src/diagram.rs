//! Oriented knot diagrams as crossing sequences and their Wilson-word encoding.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Which strand is met first along the orientation at a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Up,
    Under,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Up => "up",
            Kind::Under => "under",
        }
    }
}

/// The two strands through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strand {
    Over,
    Under,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub at: String,
    pub over_in: String,
    pub over_out: String,
    pub under_in: String,
    pub under_out: String,
    pub kind: Kind,
}

impl Crossing {
    fn strand(&self, s: Strand) -> (&str, &str) {
        match s {
            Strand::Over => (&self.over_in, &self.over_out),
            Strand::Under => (&self.under_in, &self.under_out),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("open curve: {0}")]
    OpenCurve(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("rotation {k} out of range for {n} crossings")]
    RotationOutOfRange { k: usize, n: usize },
}

/// A point met while walking the knot once from the basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Station {
    Arc(String),
    Crossing { index: usize, strand: Strand },
}

/// The cyclic sequence of stations visited from the basepoint.
///
/// Arcs sit at even positions and crossing passages at odd positions; a
/// crossing-free diagram has the single station of its basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Traversal {
    stations: Vec<Station>,
    labels: Vec<String>,
    partner: Vec<Option<usize>>,
}

impl Traversal {
    pub fn len(&self) -> usize {
        self.stations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stations.is_empty()
    }

    pub fn stations(&self) -> &[Station] {
        &self.stations
    }

    /// Label at a position taken modulo the circle length.
    pub fn label(&self, pos: usize) -> &str {
        &self.labels[pos % self.labels.len()]
    }

    /// The other passage through the same crossing, if `pos` is a crossing passage.
    pub fn partner(&self, pos: usize) -> Option<usize> {
        self.partner[pos % self.partner.len()]
    }

    /// First position carrying `label`.
    pub fn position_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    name: String,
    crossings: Vec<Crossing>,
    basepoint: String,
    winding: Option<i64>,
}

impl KnotDiagram {
    /// Builds and validates a diagram.
    pub fn new(
        name: impl Into<String>,
        crossings: Vec<Crossing>,
        basepoint: impl Into<String>,
        winding: Option<i64>,
    ) -> Result<Self, DiagramError> {
        let d = KnotDiagram {
            name: name.into(),
            crossings,
            basepoint: basepoint.into(),
            winding,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn basepoint(&self) -> &str {
        &self.basepoint
    }

    /// Extra winding phase carried by loop-attached strands, if annotated.
    pub fn winding(&self) -> Option<i64> {
        self.winding
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let mut ids = BTreeSet::new();
        for c in &self.crossings {
            if !ids.insert(c.at.as_str()) {
                return Err(DiagramError::DuplicateLabel(c.at.clone()));
            }
            for (a, b) in [
                (&c.over_in, &c.under_in),
                (&c.over_out, &c.under_out),
                (&c.over_in, &c.over_out),
                (&c.under_in, &c.under_out),
            ] {
                if a == b {
                    return Err(DiagramError::DuplicateLabel(a.clone()));
                }
            }
        }
        let mut ins = BTreeSet::new();
        let mut outs = BTreeSet::new();
        for c in &self.crossings {
            for s in [Strand::Over, Strand::Under] {
                let (i, o) = c.strand(s);
                if ids.contains(i) {
                    return Err(DiagramError::DuplicateLabel(i.to_string()));
                }
                if ids.contains(o) {
                    return Err(DiagramError::DuplicateLabel(o.to_string()));
                }
                if !ins.insert(i) {
                    return Err(DiagramError::DuplicateLabel(i.to_string()));
                }
                if !outs.insert(o) {
                    return Err(DiagramError::DuplicateLabel(o.to_string()));
                }
            }
        }
        if ins != outs {
            let stray = ins
                .symmetric_difference(&outs)
                .next()
                .copied()
                .unwrap_or("?");
            return Err(DiagramError::OpenCurve(format!(
                "arc `{stray}` is not both entered and left"
            )));
        }
        if self.crossings.is_empty() {
            if self.basepoint.is_empty() {
                return Err(DiagramError::OpenCurve("missing basepoint".into()));
            }
            return Ok(());
        }
        if !ins.contains(self.basepoint.as_str()) {
            return Err(DiagramError::OpenCurve(format!(
                "basepoint `{}` is not an arc of the diagram",
                self.basepoint
            )));
        }
        let t = self.traversal();
        if t.len() != 4 * self.crossings.len() {
            return Err(DiagramError::OpenCurve(format!(
                "walk from `{}` closes after {} of {} crossing passages",
                self.basepoint,
                t.len() / 2,
                2 * self.crossings.len()
            )));
        }
        Ok(())
    }

    /// Walks the knot once from the basepoint.
    pub fn traversal(&self) -> Traversal {
        let entry: BTreeMap<&str, (usize, Strand)> = self
            .crossings
            .iter()
            .enumerate()
            .flat_map(|(i, c)| [Strand::Over, Strand::Under].map(|s| (c.strand(s).0, (i, s))))
            .collect();
        let mut stations = Vec::new();
        let mut labels = Vec::new();
        let mut arc = self.basepoint.as_str();
        let limit = 2 * self.crossings.len();
        let mut passages = 0;
        loop {
            stations.push(Station::Arc(arc.to_string()));
            labels.push(arc.to_string());
            let Some(&(index, strand)) = entry.get(arc) else {
                break;
            };
            if passages == limit {
                break;
            }
            passages += 1;
            stations.push(Station::Crossing { index, strand });
            labels.push(self.crossings[index].at.clone());
            arc = self.crossings[index].strand(strand).1;
            if arc == self.basepoint {
                break;
            }
        }
        let mut partner = alloc::vec![None; stations.len()];
        let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
        for (pos, s) in stations.iter().enumerate() {
            if let Station::Crossing { index, .. } = s {
                if let Some(&other) = seen.get(index) {
                    partner[pos] = Some(other);
                    partner[other] = Some(pos);
                } else {
                    seen.insert(*index, pos);
                }
            }
        }
        Traversal {
            stations,
            labels,
            partner,
        }
    }

    /// Cyclically rotates the crossing sequence by `k`, moving the basepoint
    /// to the arc that enters crossing `k` on its first passage.
    pub fn rotate_basepoint(&self, k: usize) -> Result<KnotDiagram, DiagramError> {
        let n = self.crossings.len();
        if k >= n.max(1) {
            return Err(DiagramError::RotationOutOfRange { k, n });
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let t = self.traversal();
        let first = t
            .stations()
            .iter()
            .position(|s| matches!(s, Station::Crossing { index, .. } if *index == k))
            .expect("validated diagrams pass every crossing");
        let mut crossings = self.crossings.clone();
        crossings.rotate_left(k);
        Ok(KnotDiagram {
            name: self.name.clone(),
            crossings,
            basepoint: t.label(first - 1).to_string(),
            winding: self.winding,
        })
    }

    /// Parses the line-based diagram format.
    pub fn parse(text: &str) -> Result<KnotDiagram, DiagramError> {
        let mut header: Option<(String, String)> = None;
        let mut winding = None;
        let mut crossings = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let syntax = |message: &str| DiagramError::Syntax {
                line,
                message: message.to_string(),
            };
            let tok: Vec<&str> = content.split_whitespace().collect();
            match tok[0] {
                "knot" => {
                    if header.is_some() {
                        return Err(syntax("repeated header"));
                    }
                    if tok.len() != 4 || tok[2] != "base" {
                        return Err(syntax("expected `knot <name> base <arc>`"));
                    }
                    header = Some((tok[1].to_string(), tok[3].to_string()));
                }
                "winding" => {
                    if tok.len() != 2 {
                        return Err(syntax("expected `winding <count>`"));
                    }
                    winding = Some(
                        tok[1]
                            .parse()
                            .map_err(|_| syntax("winding count is not an integer"))?,
                    );
                }
                "X" => {
                    if header.is_none() {
                        return Err(syntax("crossing before header"));
                    }
                    if tok.len() != 10 || tok[2] != "over" || tok[5] != "under" || tok[8] != "kind"
                    {
                        return Err(syntax(
                            "expected `X <w> over <in> <out> under <in> <out> kind <up|under>`",
                        ));
                    }
                    let kind = match tok[9] {
                        "up" => Kind::Up,
                        "under" => Kind::Under,
                        _ => return Err(syntax("kind must be `up` or `under`")),
                    };
                    crossings.push(Crossing {
                        at: tok[1].to_string(),
                        over_in: tok[3].to_string(),
                        over_out: tok[4].to_string(),
                        under_in: tok[6].to_string(),
                        under_out: tok[7].to_string(),
                        kind,
                    });
                }
                other => return Err(syntax(&format!("unknown directive `{other}`"))),
            }
        }
        let (name, base) = header.ok_or(DiagramError::Syntax {
            line: 0,
            message: "missing `knot` header".into(),
        })?;
        KnotDiagram::new(name, crossings, base, winding)
    }
}

impl fmt::Display for KnotDiagram {
    /// Canonical text form accepted by [`KnotDiagram::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot {} base {}", self.name, self.basepoint)?;
        if let Some(w) = self.winding {
            writeln!(f, "winding {w}")?;
        }
        for c in &self.crossings {
            writeln!(
                f,
                "X {} over {} {} under {} {} kind {}",
                c.at,
                c.over_in,
                c.over_out,
                c.under_in,
                c.under_out,
                c.kind.as_str()
            )?;
        }
        Ok(())
    }
}

/// Parses diagram text; see [`KnotDiagram::parse`].
pub fn parse_diagram(text: &str) -> Result<KnotDiagram, DiagramError> {
    KnotDiagram::parse(text)
}
