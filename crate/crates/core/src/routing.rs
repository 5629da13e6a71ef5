//! Greedy geographic forwarding over a drawing: a packet at `w` moves to a
//! neighbor strictly closer to the destination, or gets stuck.

use std::fmt;
use std::str::FromStr;

use crate::constructors::Drawing;
use crate::error::{invalid, Error};
use crate::geometry::exact::{self, Coord};
use crate::planegraph::VertexId;
use crate::verify::with_frame;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Policy {
    /// Forward to the closest neighbor; ties go to the lowest id.
    BestNeighbor,
    /// Forward to the first strictly closer neighbor in rotation order.
    FirstCloser,
}

impl Policy {
    pub const ALL: [Policy; 2] = [Policy::BestNeighbor, Policy::FirstCloser];
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Policy::BestNeighbor => "best-neighbor",
            Policy::FirstCloser => "first-closer",
        })
    }
}

impl FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "best-neighbor" => Ok(Policy::BestNeighbor),
            "first-closer" => Ok(Policy::FirstCloser),
            _ => Err(invalid(format!("unknown policy {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Delivered,
    /// The packet reached a vertex with no neighbor closer to the destination.
    Stuck(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteTrace {
    pub source: VertexId,
    pub destination: VertexId,
    /// Visited vertices, starting with the source.
    pub hops: Vec<VertexId>,
    pub outcome: Outcome,
}

impl RouteTrace {
    pub fn hop_count(&self) -> usize {
        self.hops.len() - 1
    }

    pub fn delivered(&self) -> bool {
        self.outcome == Outcome::Delivered
    }
}

impl fmt::Display for RouteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ", self.source, self.destination)?;
        match self.outcome {
            Outcome::Delivered => write!(f, "delivered")?,
            Outcome::Stuck(w) => write!(f, "stuck {w}")?,
        }
        f.write_str(" :")?;
        for h in &self.hops {
            write!(f, " {h}")?;
        }
        Ok(())
    }
}

/// Routes one packet from `u` to `v`. Terminates because the distance to
/// `v` strictly decreases with every hop.
pub fn route(d: &Drawing, u: VertexId, v: VertexId, policy: Policy) -> RouteTrace {
    with_frame!(d.points(), pts => route_in(d, &pts, u, v, policy))
}

fn route_in<T: Coord>(d: &Drawing, pts: &[[T; 2]], u: VertexId, v: VertexId, policy: Policy) -> RouteTrace {
    let dist = |w: VertexId| exact::norm2(&exact::sub(&pts[w], &pts[v]));
    let mut hops = vec![u];
    let mut at = u;
    while at != v {
        let here = dist(at);
        let nbrs = d.graph().neighbors(at);
        let next = match policy {
            Policy::BestNeighbor => nbrs
                .iter()
                .map(|&w| (dist(w), w))
                .filter(|(dw, _)| *dw < here)
                .min()
                .map(|(_, w)| w),
            Policy::FirstCloser => nbrs.iter().copied().find(|&w| dist(w) < here),
        };
        match next {
            Some(w) => {
                hops.push(w);
                at = w;
            }
            None => {
                return RouteTrace {
                    source: u,
                    destination: v,
                    hops,
                    outcome: Outcome::Stuck(at),
                }
            }
        }
    }
    RouteTrace {
        source: u,
        destination: v,
        hops,
        outcome: Outcome::Delivered,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RouteSummary {
    pub policy: Policy,
    /// Ordered pairs `(u, v)` with `u != v`.
    pub pairs: usize,
    pub delivered: usize,
    /// `delivered / pairs`, or 1 when there are no pairs.
    pub delivery_rate: f64,
    /// Over delivered packets.
    pub max_hops: usize,
    pub mean_hops: f64,
}

/// Routes between every ordered pair of distinct vertices.
pub fn route_all(d: &Drawing, policy: Policy) -> RouteSummary {
    traces_all(d, policy).1
}

/// Like [`route_all`], also returning every trace in `(u, v)` order.
pub fn traces_all(d: &Drawing, policy: Policy) -> (Vec<RouteTrace>, RouteSummary) {
    with_frame!(d.points(), pts => {
        let n = d.vertex_count();
        let mut traces = Vec::with_capacity(n * n.saturating_sub(1));
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    traces.push(route_in(d, &pts, u, v, policy));
                }
            }
        }
        let summary = summarize(&traces, policy);
        (traces, summary)
    })
}

fn summarize(traces: &[RouteTrace], policy: Policy) -> RouteSummary {
    let delivered: Vec<&RouteTrace> = traces.iter().filter(|t| t.delivered()).collect();
    let total_hops: usize = delivered.iter().map(|t| t.hop_count()).sum();
    RouteSummary {
        policy,
        pairs: traces.len(),
        delivered: delivered.len(),
        delivery_rate: if traces.is_empty() {
            1.0
        } else {
            delivered.len() as f64 / traces.len() as f64
        },
        max_hops: delivered.iter().map(|t| t.hop_count()).max().unwrap_or(0),
        mean_hops: if delivered.is_empty() {
            0.0
        } else {
            total_hops as f64 / delivered.len() as f64
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::planegraph::PlaneGraph;

    fn detour() -> Drawing {
        let g = PlaneGraph::new(
            vec![vec![1], vec![0, 2], vec![1, 3], vec![2]],
            vec![0, 1, 2, 3, 2, 1],
        )
        .unwrap();
        let pts = [(0, 0), (-10, 0), (-10, 1), (1, 0)];
        Drawing::new(g, pts.iter().map(|&(x, y)| Point::int(x, y)).collect()).unwrap()
    }

    #[test]
    fn same_vertex_is_delivered() {
        let t = route(&detour(), 2, 2, Policy::BestNeighbor);
        assert!(t.delivered());
        assert_eq!(t.hop_count(), 0);
    }

    #[test]
    fn local_minimum_gets_stuck() {
        let t = route(&detour(), 0, 3, Policy::FirstCloser);
        assert_eq!(t.outcome, Outcome::Stuck(0));
        assert_eq!(t.hops, vec![0]);
        let t = route(&detour(), 3, 0, Policy::BestNeighbor);
        assert_eq!(t.outcome, Outcome::Stuck(3));
        assert_eq!(t.to_string(), "3 0 stuck 3 : 3");
    }

    #[test]
    fn summary_counts() {
        let s = route_all(&detour(), Policy::BestNeighbor);
        assert_eq!(s.pairs, 12);
        assert!(s.delivery_rate < 1.0);
        let g = PlaneGraph::new(vec![vec![]], vec![0]).unwrap();
        let one = Drawing::new(g, vec![Point::int(0, 0)]).unwrap();
        assert_eq!(route_all(&one, Policy::FirstCloser).delivery_rate, 1.0);
    }

    #[test]
    fn best_neighbor_breaks_ties_by_id() {
        // 0 at the origin sees 1 and 2 equally close to 3.
        let g = PlaneGraph::new(
            vec![vec![1, 2], vec![3, 0], vec![0, 3], vec![2, 1]],
            vec![0, 1, 3, 2],
        )
        .unwrap();
        let pts = [(0, 0), (1, 1), (1, -1), (2, 0)];
        let d = Drawing::new(g, pts.iter().map(|&(x, y)| Point::int(x, y)).collect()).unwrap();
        assert_eq!(route(&d, 0, 3, Policy::BestNeighbor).hops, vec![0, 1, 3]);
        assert_eq!("first-closer".parse::<Policy>().unwrap(), Policy::FirstCloser);
    }
}
