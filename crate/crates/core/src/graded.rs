//! Dimensions of graded vector spaces indexed by rational degrees.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::exactlat::{Int, Rat};
use crate::format::parse_rat;

/// Closed interval `[lo, hi]` of degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Window {
    pub lo: Rat,
    pub hi: Rat,
}

impl Window {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        Window { lo, hi }
    }

    /// The default contact-homology window `[-2 + 2/m, 2n + 6]`.
    pub fn contact_default(dim: usize, order: &Int) -> Self {
        let two = Rat::from_integer(Int::from(2));
        Window {
            lo: -&two + &two / Rat::from_integer(order.clone()),
            hi: Rat::from_integer(Int::from(2 * dim + 6)),
        }
    }

    pub fn contains(&self, d: &Rat) -> bool {
        &self.lo <= d && d <= &self.hi
    }

    /// Points of `step·Z` inside the window, ascending.
    pub fn grid(&self, step: &Rat) -> Vec<Rat> {
        let mut k = (&self.lo / step).ceil();
        let mut out = Vec::new();
        loop {
            let d = &k * step;
            if d > self.hi {
                break;
            }
            out.push(d);
            k += Rat::one();
        }
        out
    }
}

impl FromStr for Window {
    type Err = String;
    /// Parses `"lo:hi"` with rational endpoints.
    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once(':').ok_or_else(|| format!("window {s:?} is not of the form lo:hi"))?;
        let (lo, hi) = (parse_rat(a.trim())?, parse_rat(b.trim())?);
        if lo > hi {
            return Err(format!("window {s:?} is empty"));
        }
        Ok(Window { lo, hi })
    }
}

/// Map from rational degree to a non-negative dimension, restricted to a
/// window. Degrees absent from the map have dimension zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedDimension {
    window: Window,
    dims: BTreeMap<Rat, u64>,
}

impl GradedDimension {
    pub fn new(window: Window) -> Self {
        GradedDimension { window, dims: BTreeMap::new() }
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Adds `count` at `degree`; returns false (and ignores it) outside the window.
    pub fn add(&mut self, degree: Rat, count: u64) -> bool {
        if !self.window.contains(&degree) {
            return false;
        }
        if count > 0 {
            *self.dims.entry(degree).or_insert(0) += count;
        }
        true
    }

    pub fn get(&self, degree: &Rat) -> u64 {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    /// Non-zero entries in ascending degree.
    pub fn iter(&self) -> impl Iterator<Item = (&Rat, u64)> {
        self.dims.iter().map(|(d, &k)| (d, k))
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Restriction to a smaller window.
    pub fn restrict(&self, window: Window) -> GradedDimension {
        let mut out = GradedDimension::new(window);
        for (d, k) in self.iter() {
            out.add(d.clone(), k);
        }
        out
    }

    /// Dimensions on the grid `step·Z` inside the window, zeros included.
    pub fn on_grid(&self, step: &Rat) -> Vec<(Rat, u64)> {
        self.window.grid(step).into_iter().map(|d| {
            let k = self.get(&d);
            (d, k)
        }).collect()
    }

    pub fn lowest_nonzero(&self) -> Option<&Rat> {
        self.dims.keys().next()
    }
}

impl fmt::Debug for GradedDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] ", self.window.lo, self.window.hi)?;
        f.debug_map().entries(self.dims.iter().map(|(d, k)| (d.to_string(), k))).finish()
    }
}

impl Default for GradedDimension {
    fn default() -> Self {
        GradedDimension::new(Window::new(Rat::zero(), Rat::zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlat::rat;

    #[test]
    fn default_window_for_order_three() {
        let w = Window::contact_default(2, &Int::from(3));
        assert_eq!(w.lo, rat(-4, 3));
        assert_eq!(w.hi, rat(10, 1));
        let g = w.grid(&rat(2, 3));
        assert_eq!(g.first(), Some(&rat(-4, 3)));
        assert_eq!(g.last(), Some(&rat(10, 1)));
        assert_eq!(g.len(), 18);
    }

    #[test]
    fn window_parsing() {
        let w: Window = "-2/3:10".parse().unwrap();
        assert_eq!(w, Window::new(rat(-2, 3), rat(10, 1)));
        assert!("3:1".parse::<Window>().is_err());
        assert!("abc".parse::<Window>().is_err());
    }

    #[test]
    fn entries_outside_window_are_dropped() {
        let mut g = GradedDimension::new(Window::new(rat(0, 1), rat(4, 1)));
        assert!(g.add(rat(2, 1), 3));
        assert!(!g.add(rat(6, 1), 1));
        assert!(g.add(rat(4, 1), 0));
        assert_eq!(g.get(&rat(2, 1)), 3);
        assert_eq!(g.total(), 3);
        assert_eq!(g.iter().count(), 1);
    }
}
