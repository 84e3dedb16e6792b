//! JSON interchange formats.
//!
//! Points are `[x, y]` pairs, colorings are `B`/`W` strings, and point
//! references are `["c1", pos]` pairs.

use double_chain::chains::{colors_to_string, parse_colors, validate_double_chain, ChainId, Color, Coloring, DoubleChain};
use double_chain::trees::ColoredGraph;
use double_chain::{Point, PointRef};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

fn invalid(e: impl std::fmt::Display) -> FormatError {
    FormatError::Invalid(e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainsDto {
    pub c1: Vec<[i64; 2]>,
    pub c2: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDto {
    pub c1: String,
    pub c2: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDto {
    pub double_chain: ChainsDto,
    pub coloring: ColoringDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefDto(pub ChainName, pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainName {
    C1,
    C2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDto {
    pub order: Vec<RefDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDto {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub colors: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDto {
    pub map: Vec<RefDto>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatusDto {
    Found,
    None,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDto {
    pub status: StatusDto,
    pub witness: Option<Vec<RefDto>>,
    pub nodes: u64,
}

impl From<PointRef> for RefDto {
    fn from(r: PointRef) -> Self {
        let chain = match r.chain {
            ChainId::C1 => ChainName::C1,
            ChainId::C2 => ChainName::C2,
        };
        RefDto(chain, r.pos)
    }
}

impl From<&RefDto> for PointRef {
    fn from(r: &RefDto) -> Self {
        match r.0 {
            ChainName::C1 => PointRef::c1(r.1),
            ChainName::C2 => PointRef::c2(r.1),
        }
    }
}

pub fn refs_to_dto(refs: &[PointRef]) -> Vec<RefDto> {
    refs.iter().map(|&r| r.into()).collect()
}

pub fn refs_from_dto(refs: &[RefDto]) -> Vec<PointRef> {
    refs.iter().map(PointRef::from).collect()
}

/// Checks that every reference names an existing point.
pub fn check_refs(dc: &DoubleChain, refs: &[PointRef]) -> Result<(), FormatError> {
    match refs.iter().find(|r| r.pos >= dc.chain(r.chain).len()) {
        Some(r) => Err(invalid(format!("point {}[{}] does not exist", r.chain, r.pos))),
        None => Ok(()),
    }
}

/// A parsed instance: the double-chain and its point coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub dc: DoubleChain,
    pub coloring: Coloring,
}

impl Instance {
    pub fn to_dto(&self) -> InstanceDto {
        let pts = |v: &[Point]| v.iter().map(|p| [p.x(), p.y()]).collect();
        InstanceDto {
            double_chain: ChainsDto {
                c1: pts(&self.dc.c1.points),
                c2: pts(&self.dc.c2.points),
            },
            coloring: ColoringDto {
                c1: colors_to_string(&self.coloring.c1),
                c2: colors_to_string(&self.coloring.c2),
            },
        }
    }

    /// Parses and validates: coordinates in range, chain constraints hold,
    /// coloring lengths match.
    pub fn from_dto(dto: &InstanceDto) -> Result<Self, FormatError> {
        let pts = |v: &[[i64; 2]]| -> Result<Vec<Point>, FormatError> {
            v.iter().map(|&[x, y]| Point::new(x, y).map_err(invalid)).collect()
        };
        let dc = DoubleChain::new(pts(&dto.double_chain.c1)?, pts(&dto.double_chain.c2)?);
        let coloring = Coloring::new(
            parse_colors(&dto.coloring.c1).map_err(invalid)?,
            parse_colors(&dto.coloring.c2).map_err(invalid)?,
        );
        coloring.check_fits(&dc).map_err(invalid)?;
        // The full check is quadratic; generated chains are recognized in
        // linear time instead.
        let generated = double_chain::chains::generate_double_chain(dc.c1.len(), dc.c2.len()).ok();
        if generated.as_ref() != Some(&dc) {
            validate_double_chain(&dc).map_err(|v| invalid(format!("not a double-chain: {v}")))?;
        }
        Ok(Instance { dc, coloring })
    }

    pub fn parse(s: &str) -> Result<Self, FormatError> {
        Self::from_dto(&serde_json::from_str(s)?)
    }
}

pub fn graph_to_dto(g: &ColoredGraph) -> GraphDto {
    GraphDto {
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        colors: colors_to_string(g.colors()),
    }
}

pub fn graph_from_dto(dto: &GraphDto) -> Result<ColoredGraph, FormatError> {
    let colors: Vec<Color> = parse_colors(&dto.colors).map_err(invalid)?;
    ColoredGraph::new(dto.n, dto.edges.iter().map(|&[u, v]| (u, v)).collect(), colors).map_err(invalid)
}

pub fn parse_graph(s: &str) -> Result<ColoredGraph, FormatError> {
    graph_from_dto(&serde_json::from_str(s)?)
}
