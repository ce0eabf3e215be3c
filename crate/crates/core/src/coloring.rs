//! Partial and total vertex colorings with colors `1..=k`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color {color} outside palette 1..={k}")]
    ColorOutOfRange { color: Color, k: Color },
    #[error("vertex #{0} outside the graph")]
    UnknownVertex(Vertex),
}

/// Map from vertex to color in `1..=k`; may be partial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColorAssignment {
    k: Color,
    colors: BTreeMap<Vertex, Color>,
}

impl ColorAssignment {
    pub fn new(k: Color) -> Self {
        ColorAssignment { k, colors: BTreeMap::new() }
    }

    pub fn from_pairs(k: Color, pairs: impl IntoIterator<Item = (Vertex, Color)>) -> Result<Self, ColoringError> {
        let mut c = ColorAssignment::new(k);
        for (v, col) in pairs {
            c.set(v, col)?;
        }
        Ok(c)
    }

    /// Total assignment from a slice indexed by vertex.
    pub fn from_slice(k: Color, colors: &[Color]) -> Result<Self, ColoringError> {
        Self::from_pairs(k, colors.iter().copied().enumerate())
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn set(&mut self, v: Vertex, color: Color) -> Result<(), ColoringError> {
        if color == 0 || color > self.k {
            return Err(ColoringError::ColorOutOfRange { color, k: self.k });
        }
        self.colors.insert(v, color);
        Ok(())
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.colors.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.colors.iter().map(|(&v, &c)| (v, c))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.colors.keys().copied()
    }

    pub fn max_color(&self) -> Color {
        self.colors.values().copied().max().unwrap_or(0)
    }

    pub fn is_total(&self, n: usize) -> bool {
        self.colors.len() == n && self.colors.keys().all(|&v| v < n)
    }

    /// Vertices of `g` are all in range and no edge has both ends the same color.
    pub fn check_in(&self, g: &Graph) -> Result<(), ColoringError> {
        match self.colors.keys().find(|&&v| v >= g.n()) {
            Some(&v) => Err(ColoringError::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// No edge of `g` joins two vertices of the same assigned color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.monochromatic_edge(g).is_none()
    }

    pub fn monochromatic_edge(&self, g: &Graph) -> Option<(Vertex, Vertex)> {
        self.iter()
            .filter(|&(v, _)| v < g.n())
            .flat_map(|(v, c)| {
                g.neighbors(v).filter(move |&w| w > v).filter(move |&w| self.get(w) == Some(c)).map(move |w| (v, w))
            })
            .next()
    }

    /// `self` agrees with `other` wherever `self` is defined.
    pub fn is_subset_of(&self, other: &ColorAssignment) -> bool {
        self.iter().all(|(v, c)| other.get(v) == Some(c))
    }

    pub fn restrict(&self, vertices: impl IntoIterator<Item = Vertex>) -> ColorAssignment {
        let mut out = ColorAssignment::new(self.k);
        for v in vertices {
            if let Some(c) = self.get(v) {
                out.colors.insert(v, c);
            }
        }
        out
    }

    /// Applies a palette permutation: color `c` becomes `perm[c - 1]`.
    pub fn relabel(&self, perm: &[Color]) -> Result<ColorAssignment, ColoringError> {
        Self::from_pairs(self.k, self.iter().map(|(v, c)| (v, perm[c as usize - 1])))
    }

    /// Distinct colors used.
    pub fn palette_used(&self) -> Vec<Color> {
        let mut used: Vec<Color> = self.colors.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used
    }
}
