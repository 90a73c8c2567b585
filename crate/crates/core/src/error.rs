use thiserror::Error;

/// Everything that can go wrong in the core pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {index} is neither horizontal nor vertical")]
    NotRectilinear { index: usize },
    #[error("edge {index} has zero length")]
    DegenerateEdge { index: usize },
    #[error("boundary is not simple: edges {first} and {second} touch")]
    SelfIntersecting { first: usize, second: usize },
    #[error("vertex ring is not an alternating horizontal/vertical cycle: {reason}")]
    OddStructure { reason: &'static str },
    #[error("coordinate {value} is outside the supported range")]
    CoordinateRange { value: i64 },
    #[error("point lies outside the polygon")]
    PointOutside,
    #[error("edge {index} is not a horizontal edge")]
    NotHorizontalEdge { index: usize },
    #[error("polygon is not ortho-convex")]
    NotOrthoConvex,
    #[error("dual graph of the vertical decomposition is not a path")]
    NotPathPolygon,
    #[error("part has an empty corridor")]
    EmptyCorridor,
    #[error("instance has {pixels} pixels, budget is {budget}")]
    BudgetExceeded { pixels: usize, budget: usize },
    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
