//! Colourings, the properness and surjectivity predicates, and exhaustive
//! enumeration in lexicographic order.
//!
//! Enumeration order defines state IDs everywhere downstream: the i-th
//! colouring returned by [`enumerate_strong`] is state `i` of `S_k(G)`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Colour = u8;

/// Letters used for colours `0..10` in human-facing text.
pub const LETTERS: &[u8; 10] = b"abcdefghij";

pub const DEFAULT_CAP: u64 = 10_000_000;

/// Upper bound on raw candidates (`k^n`) an exhaustive operation may touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cap(pub u64);

impl Default for Cap {
    fn default() -> Self {
        Cap(DEFAULT_CAP)
    }
}

impl Cap {
    pub fn check(self, k: usize, n: usize) -> Result<()> {
        let candidates = candidate_count(k, n);
        if candidates > self.0 {
            Err(Error::CapExceeded { candidates, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

/// `k^n`, saturating at `u64::MAX`.
pub fn candidate_count(k: usize, n: usize) -> u64 {
    let mut acc: u64 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(k as u64);
    }
    acc
}

/// An assignment of colours `0..k` to the vertices `0..n`.
///
/// Ordering is lexicographic on the colour vector, which is the
/// enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Colouring {
    colours: Vec<Colour>,
    k: usize,
}

impl Colouring {
    pub fn new(colours: Vec<Colour>, k: usize) -> Result<Self> {
        if k > Colour::MAX as usize {
            return Err(Error::TooManyColours { k });
        }
        if let Some(&c) = colours.iter().find(|&&c| c as usize >= k) {
            return Err(Error::ColourOutOfRange { colour: c as usize, k });
        }
        Ok(Colouring { colours, k })
    }

    pub fn from_indices(colours: &[usize], k: usize) -> Result<Self> {
        if let Some(&c) = colours.iter().find(|&&c| c >= k) {
            return Err(Error::ColourOutOfRange { colour: c, k });
        }
        Colouring::new(colours.iter().map(|&c| c as Colour).collect(), k)
    }

    pub(crate) fn from_raw(colours: Vec<Colour>, k: usize) -> Self {
        debug_assert!(colours.iter().all(|&c| (c as usize) < k));
        Colouring { colours, k }
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn get(&self, v: usize) -> Colour {
        self.colours[v]
    }

    /// Copy with vertex `v` recoloured to `c`.
    pub fn recoloured(&self, v: usize, c: Colour) -> Colouring {
        let mut colours = self.colours.clone();
        colours[v] = c;
        Colouring { colours, k: self.k }
    }

    /// How many vertices carry each colour.
    pub fn colour_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.k];
        for &c in &self.colours {
            counts[c as usize] += 1;
        }
        counts
    }

    pub fn uses_every_colour(&self) -> bool {
        self.colour_counts().iter().all(|&n| n > 0)
    }

    /// Number of vertices where the two colourings differ.
    pub fn hamming(&self, other: &Colouring) -> usize {
        self.colours.iter().zip(&other.colours).filter(|(a, b)| a != b).count() + self.len().abs_diff(other.len())
    }

    /// `"abcda"`-style text for `k <= 10`, comma-separated integers otherwise.
    pub fn letters(&self) -> String {
        if self.k <= LETTERS.len() {
            self.colours.iter().map(|&c| LETTERS[c as usize] as char).collect()
        } else {
            let parts: Vec<String> = self.colours.iter().map(|c| c.to_string()).collect();
            parts.join(",")
        }
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.letters())
    }
}

fn check_length(g: &Graph, c: &Colouring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), found: c.len() });
    }
    Ok(())
}

/// No edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    check_length(g, c)?;
    Ok(g.edges().all(|(u, v)| c.get(u) != c.get(v)))
}

/// Proper, and every colour `0..k` appears.
pub fn is_strong(g: &Graph, c: &Colouring) -> Result<bool> {
    Ok(is_proper(g, c)? && c.uses_every_colour())
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    strong: bool,
    limit: usize,
    colours: Vec<Colour>,
    counts: Vec<usize>,
    missing: usize,
    out: Vec<Colouring>,
}

impl Search<'_> {
    fn run(&mut self, v: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        let n = self.g.n();
        if v == n {
            if !self.strong || self.missing == 0 {
                self.out.push(Colouring::from_raw(self.colours.clone(), self.k));
            }
            return;
        }
        for c in 0..self.k {
            let clash = self.g.neighbours(v).iter().any(|&u| u < v && self.colours[u] as usize == c);
            if clash {
                continue;
            }
            let fills = self.counts[c] == 0;
            let missing = self.missing - usize::from(fills);
            // vertices after v must be able to supply every missing colour
            if self.strong && missing > n - v - 1 {
                continue;
            }
            self.colours[v] = c as Colour;
            self.counts[c] += 1;
            self.missing = missing;
            self.run(v + 1);
            self.counts[c] -= 1;
            self.missing += usize::from(fills);
            if self.out.len() >= self.limit {
                return;
            }
        }
    }
}

fn enumerate(g: &Graph, k: usize, cap: Cap, strong: bool, limit: usize) -> Result<Vec<Colouring>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1"));
    }
    if k > Colour::MAX as usize {
        return Err(Error::TooManyColours { k });
    }
    cap.check(k, g.n())?;
    let mut search =
        Search { g, k, strong, limit, colours: vec![0; g.n()], counts: vec![0; k], missing: k, out: Vec::new() };
    search.run(0);
    Ok(search.out)
}

/// All strong k-colourings of `g` in lexicographic order. Empty when `k`
/// is below the chromatic number or above `n`.
pub fn enumerate_strong(g: &Graph, k: usize, cap: Cap) -> Result<Vec<Colouring>> {
    enumerate(g, k, cap, true, usize::MAX)
}

/// All proper k-colourings of `g` in lexicographic order.
pub fn enumerate_proper(g: &Graph, k: usize, cap: Cap) -> Result<Vec<Colouring>> {
    enumerate(g, k, cap, false, usize::MAX)
}

/// The lexicographically first strong k-colouring, if any.
pub fn first_strong(g: &Graph, k: usize, cap: Cap) -> Result<Option<Colouring>> {
    Ok(enumerate(g, k, cap, true, 1)?.into_iter().next())
}

fn symbol_value(token: &str) -> Result<(bool, usize)> {
    let bytes = token.as_bytes();
    if bytes.len() == 1 {
        if let Some(i) = LETTERS.iter().position(|&l| l == bytes[0]) {
            return Ok((true, i));
        }
    }
    if !token.is_empty() && bytes.iter().all(u8::is_ascii_digit) {
        return token.parse::<usize>().map(|v| (false, v)).map_err(|_| Error::UnknownSymbol(token.to_string()));
    }
    Err(Error::UnknownSymbol(token.to_string()))
}

/// Parses `"a,b,c,d,a"` or `"0,1,2"`. Letters map `a -> 0`, `b -> 1`, and so
/// on up to `j`. A comma-free run of letters such as `"abcda"` is also
/// accepted. Mixing letters and integers is an error.
pub fn parse_colouring(text: &str, k: usize) -> Result<Colouring> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyColouring);
    }
    let tokens: Vec<&str> = if !text.contains(',') && text.len() > 1 && text.bytes().all(|b| b.is_ascii_lowercase()) {
        (0..text.len()).map(|i| &text[i..i + 1]).collect()
    } else {
        text.split(',').map(str::trim).collect()
    };
    let mut letters = None;
    let mut colours = Vec::with_capacity(tokens.len());
    for token in tokens {
        let (is_letter, value) = symbol_value(token)?;
        if *letters.get_or_insert(is_letter) != is_letter {
            return Err(Error::MixedSymbols);
        }
        colours.push(value);
    }
    Colouring::from_indices(&colours, k)
}
