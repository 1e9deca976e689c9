//! The reduced chart `(α, γ, δ)` with `β = 2π − α − γ − δ`, and the maps that
//! get differentiated in it.

use std::f64::consts::{PI, TAU};

use nalgebra::Vector3;

use crate::dynamics::step;
use crate::error::Result;
use crate::tuple::AngleTuple;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint {
    pub alpha: f64,
    pub gamma: f64,
    pub delta: f64,
}

impl ChartPoint {
    pub fn new(alpha: f64, gamma: f64, delta: f64) -> Self {
        Self {
            alpha,
            gamma,
            delta,
        }
    }

    pub fn beta(&self) -> f64 {
        TAU - self.alpha - self.gamma - self.delta
    }

    pub fn full(&self) -> [f64; 4] {
        [self.alpha, self.beta(), self.gamma, self.delta]
    }

    pub fn to_angles(&self) -> Result<AngleTuple> {
        AngleTuple::new(self.full())
    }

    pub fn from_angles(q: &AngleTuple) -> Self {
        Self::new(q.alpha(), q.gamma(), q.delta())
    }

    pub fn to_vector(&self) -> Vector3<f64> {
        Vector3::new(self.alpha, self.gamma, self.delta)
    }

    pub fn from_vector(v: &Vector3<f64>) -> Self {
        Self::new(v[0], v[1], v[2])
    }

    /// Smallest distance from any of the four angles to 0 or π.
    pub fn boundary_distance(&self) -> f64 {
        self.full()
            .iter()
            .map(|&a| a.min(PI - a))
            .fold(f64::INFINITY, f64::min)
    }
}

/// Which map a Jacobian or stability report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapOrder {
    /// The map itself.
    Once,
    /// The map composed with itself.
    Twice,
}

impl MapOrder {
    pub fn from_order(order: u32) -> Option<Self> {
        match order {
            1 => Some(MapOrder::Once),
            2 => Some(MapOrder::Twice),
            _ => None,
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            MapOrder::Once => 1,
            MapOrder::Twice => 2,
        }
    }
}

/// The dynamics read in the chart.
pub fn chart_step(p: &ChartPoint, order: MapOrder) -> Result<ChartPoint> {
    let mut q = p.to_angles()?;
    for _ in 0..order.order() {
        q = step(&q)?;
    }
    Ok(ChartPoint::from_angles(&q))
}

/// Right-hand sides of the three relations characterizing the generic
/// 2-cycle, evaluated at `(α, γ, δ)` and returned in the same order:
///
/// ```text
/// α ← π sin(α+δ)/S₁ + π sin γ/S₂
/// γ ← π sin δ/S₂
/// δ ← π sin δ/S₁
/// ```
///
/// with `S₁ = sin α + sin δ + sin(α+δ)` and `S₂ = sin γ + sin δ + sin(γ+δ)`.
pub fn cycle_relations(p: &ChartPoint) -> ChartPoint {
    let ChartPoint {
        alpha,
        gamma,
        delta,
    } = *p;
    let s1 = alpha.sin() + delta.sin() + (alpha + delta).sin();
    let s2 = gamma.sin() + delta.sin() + (gamma + delta).sin();
    ChartPoint::new(
        PI * (alpha + delta).sin() / s1 + PI * gamma.sin() / s2,
        PI * delta.sin() / s2,
        PI * delta.sin() / s1,
    )
}

/// `cycle_relations(p) − p`; zero exactly at the generic 2-cycle.
pub fn cycle_residual(p: &ChartPoint) -> Vector3<f64> {
    cycle_relations(p).to_vector() - p.to_vector()
}
