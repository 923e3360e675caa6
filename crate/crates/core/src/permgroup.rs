//! Permutations of degree `N` and the coset structure of S4 over the
//! order-3 cyclic subgroup `H = {e, g, g²}`, `g = (2314)`.
//!
//! Permutations are written in one-line notation: `(2314)` maps 1→2, 2→3,
//! 3→1, 4→4. Products apply the left factor first:
//! `compose(p, q)(x) = q(p(x))`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, …, N}` stored as its image sequence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm<const N: usize> {
    images: [u8; N],
}

impl<const N: usize> Perm<N> {
    pub fn identity() -> Self {
        let mut images = [0u8; N];
        for (i, x) in images.iter_mut().enumerate() {
            *x = i as u8 + 1;
        }
        Perm { images }
    }

    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn from_images(images: [u8; N]) -> Result<Self> {
        let mut seen = [false; N];
        for &x in &images {
            let i = x as usize;
            if i == 0 || i > N || seen[i - 1] {
                return Err(Error::NotABijection(format_images(&images), N));
            }
            seen[i - 1] = true;
        }
        Ok(Perm { images })
    }

    /// The transposition swapping points `i` and `j` (1-based).
    pub fn transposition(i: u8, j: u8) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i as usize > N || j as usize > N {
            return Err(Error::InvalidTransposition(i, j));
        }
        let mut p = Self::identity();
        p.images.swap(i as usize - 1, j as usize - 1);
        Ok(p)
    }

    pub fn images(&self) -> &[u8; N] {
        &self.images
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize - 1]
    }

    /// `self · other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        Perm {
            images: self.images.map(|x| other.apply(x)),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0u8; N];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u8 + 1;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// Smallest `n ≥ 1` with `selfⁿ = e`.
    pub fn order(&self) -> u32 {
        let mut n = 1;
        let mut q = *self;
        while !q.is_identity() {
            q = q.compose(self);
            n += 1;
        }
        n
    }

    /// All `N!` permutations in lexicographic order of their image sequences.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        let mut images = Self::identity().images;
        loop {
            out.push(Perm { images });
            // next lexicographic permutation
            let Some(i) = (0..N.saturating_sub(1))
                .rev()
                .find(|&i| images[i] < images[i + 1])
            else {
                break;
            };
            let j = (i + 1..N).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
        out
    }
}

fn format_images(images: &[u8]) -> String {
    let digits: String = images.iter().map(|d| char::from(b'0' + d)).collect();
    format!("({digits})")
}

/// Parses a parenthesized one-line permutation such as `"(2314)"`.
pub fn parse_one_line<const N: usize>(text: &str) -> Result<Perm<N>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::MalformedPermutation(text.to_string()))?;
    if inner.chars().count() != N || !inner.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::MalformedPermutation(text.to_string()));
    }
    let mut images = [0u8; N];
    for (slot, c) in images.iter_mut().zip(inner.bytes()) {
        *slot = c - b'0';
    }
    Perm::from_images(images)
}

impl<const N: usize> FromStr for Perm<N> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_one_line(s)
    }
}

impl<const N: usize> fmt::Display for Perm<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_images(&self.images))
    }
}

impl<const N: usize> fmt::Debug for Perm<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const N: usize> Serialize for Perm<N> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de, const N: usize> Deserialize<'de> for Perm<N> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_one_line(&s).map_err(serde::de::Error::custom)
    }
}

/// Element of S4.
pub type Permutation = Perm<4>;

/// Number of cosets `k = |G| / m`.
pub const NUM_COSETS: u8 = 8;
/// Order `m` of the cyclic subgroup `H`.
pub const SUBGROUP_ORDER: u8 = 3;
/// `|S4|`.
pub const GROUP_ORDER: usize = 24;

/// Coset coordinate `(α, l)` labelling `g̃ = g_α gˡ` and the orbit vector `v_{αl}`.
/// `alpha` is 1-based, `l` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetCoord {
    pub alpha: u8,
    pub l: u8,
}

impl CosetCoord {
    pub fn new(alpha: u8, l: u8) -> Result<Self> {
        if !(1..=NUM_COSETS).contains(&alpha) || l >= SUBGROUP_ORDER {
            return Err(Error::CosetOutOfRange(alpha, l));
        }
        Ok(CosetCoord { alpha, l })
    }

    /// All 24 coordinates in `(α, l)` order.
    pub fn all() -> impl Iterator<Item = CosetCoord> {
        (1..=NUM_COSETS).flat_map(|alpha| (0..SUBGROUP_ORDER).map(move |l| CosetCoord { alpha, l }))
    }

    /// Dense index `3(α−1) + l` in `0..24`.
    pub fn index(&self) -> usize {
        (self.alpha as usize - 1) * SUBGROUP_ORDER as usize + self.l as usize
    }

    pub fn from_index(i: usize) -> Self {
        CosetCoord {
            alpha: (i / SUBGROUP_ORDER as usize) as u8 + 1,
            l: (i % SUBGROUP_ORDER as usize) as u8,
        }
    }
}

impl fmt::Display for CosetCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.l)
    }
}

impl FromStr for CosetCoord {
    type Err = Error;
    /// Accepts `"(2,2)"`, `"2,2"` or `"(2, 2)"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedLabel(s.to_string());
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .map_or(t, |x| x.strip_suffix(')').unwrap_or(x));
        let (a, l) = t.split_once(',').ok_or_else(bad)?;
        let a: u8 = a.trim().parse().map_err(|_| bad())?;
        let l: u8 = l.trim().parse().map_err(|_| bad())?;
        CosetCoord::new(a, l)
    }
}

impl Serialize for CosetCoord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.alpha, self.l].serialize(s)
    }
}

impl<'de> Deserialize<'de> for CosetCoord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, l] = <[u8; 2]>::deserialize(d)?;
        CosetCoord::new(a, l).map_err(serde::de::Error::custom)
    }
}

/// Conjugacy classes of S4, labelled as in the printed eigenvalue table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConjugacyClass {
    /// 3-cycles (8 elements).
    I,
    /// Transpositions (6).
    II,
    /// 4-cycles (6).
    III,
    /// Double transpositions (3).
    IV,
    /// Identity.
    V,
}

impl fmt::Display for ConjugacyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Representatives of the left cosets `g_α H`, α = 1..8.
pub const COSET_REPRESENTATIVES: [[u8; 4]; 8] = [
    [1, 2, 3, 4],
    [2, 1, 3, 4],
    [4, 2, 3, 1],
    [1, 4, 3, 2],
    [1, 3, 4, 2],
    [1, 4, 2, 3],
    [2, 3, 4, 1],
    [4, 1, 3, 2],
];

/// Generator of `H`.
pub const GENERATOR: [u8; 4] = [2, 3, 1, 4];

/// S4 with its coset decomposition and conjugacy classes.
#[derive(Clone, Debug)]
pub struct GroupTable {
    elements: Vec<Permutation>,
    generator: Permutation,
    coset_reps: [Permutation; 8],
    /// `by_coord[3(α−1)+l] = g_α gˡ`
    by_coord: [Permutation; GROUP_ORDER],
    coord_of: BTreeMap<Permutation, CosetCoord>,
    class_of: BTreeMap<Permutation, ConjugacyClass>,
}

impl GroupTable {
    pub fn build() -> Self {
        let elements = Permutation::all();
        let generator = Permutation::from_images(GENERATOR).unwrap();
        let coset_reps = COSET_REPRESENTATIVES.map(|r| Permutation::from_images(r).unwrap());

        let by_coord: [Permutation; GROUP_ORDER] = std::array::from_fn(|i| {
            let c = CosetCoord::from_index(i);
            coset_reps[c.alpha as usize - 1].compose(&generator.pow(c.l as u32))
        });
        let coord_of: BTreeMap<_, _> = by_coord
            .iter()
            .enumerate()
            .map(|(i, p)| (*p, CosetCoord::from_index(i)))
            .collect();
        assert_eq!(
            coord_of.len(),
            GROUP_ORDER,
            "coset representatives must cover S4"
        );

        let class_of = conjugacy_classes(&elements);
        GroupTable {
            elements,
            generator,
            coset_reps,
            by_coord,
            coord_of,
            class_of,
        }
    }

    /// Shared instance.
    pub fn s4() -> &'static GroupTable {
        static TABLE: OnceLock<GroupTable> = OnceLock::new();
        TABLE.get_or_init(GroupTable::build)
    }

    /// All 24 elements in lexicographic one-line order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generator(&self) -> Permutation {
        self.generator
    }

    /// `H = [e, g, g²]`.
    pub fn subgroup(&self) -> [Permutation; 3] {
        [0, 1, 2].map(|l| self.generator.pow(l))
    }

    /// Coset representative `g_α` (1-based α).
    pub fn coset_rep(&self, alpha: u8) -> Permutation {
        self.coset_reps[alpha as usize - 1]
    }

    pub fn coset_reps(&self) -> &[Permutation; 8] {
        &self.coset_reps
    }

    /// `(α, l) ↦ g_α gˡ`.
    pub fn element(&self, c: CosetCoord) -> Permutation {
        self.by_coord[c.index()]
    }

    /// The unique `(α, l)` with `p = g_α gˡ`.
    pub fn coset_factorize(&self, p: &Permutation) -> CosetCoord {
        self.coord_of[p]
    }

    pub fn class_of(&self, p: &Permutation) -> ConjugacyClass {
        self.class_of[p]
    }

    /// Sizes of the conjugacy classes, keyed by label.
    pub fn class_sizes(&self) -> BTreeMap<ConjugacyClass, usize> {
        let mut sizes = BTreeMap::new();
        for c in self.class_of.values() {
            *sizes.entry(*c).or_insert(0) += 1;
        }
        sizes
    }

    /// `(α, l)_{g̃}`: the coordinate of `g′ g̃` where `g′ = g_α gˡ`.
    pub fn orbit_image(&self, c: CosetCoord, gtilde: &Permutation) -> CosetCoord {
        self.coset_factorize(&self.element(c).compose(gtilde))
    }

    /// Whether `p ∈ H`.
    pub fn in_subgroup(&self, p: &Permutation) -> bool {
        self.subgroup().contains(p)
    }
}

/// Partitions the group into conjugacy classes by closure under `x ↦ y⁻¹ x y`
/// and labels them by (size, element order).
fn conjugacy_classes(elements: &[Permutation]) -> BTreeMap<Permutation, ConjugacyClass> {
    let mut class_of = BTreeMap::new();
    for x in elements {
        if class_of.contains_key(x) {
            continue;
        }
        let mut class: Vec<Permutation> = elements
            .iter()
            .map(|y| y.inverse().compose(x).compose(y))
            .collect();
        class.sort();
        class.dedup();
        let label = match (class.len(), x.order()) {
            (8, _) => ConjugacyClass::I,
            (6, 2) => ConjugacyClass::II,
            (6, _) => ConjugacyClass::III,
            (3, _) => ConjugacyClass::IV,
            _ => ConjugacyClass::V,
        };
        for c in class {
            class_of.insert(c, label);
        }
    }
    class_of
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parses_one_line_strings() {
        assert_eq!(p("(2314)").images(), &[2, 3, 1, 4]);
        assert!(p("(1234)").is_identity());
        assert!(matches!(
            "(1123)".parse::<Permutation>(),
            Err(Error::NotABijection(..))
        ));
        for bad in ["2314", "(231)", "(23145)", "(23a4)", "(2315)", "(0123)", ""] {
            assert!(bad.parse::<Permutation>().is_err(), "{bad}");
        }
    }

    #[test]
    fn composition_applies_left_factor_first() {
        let g = p("(2314)");
        assert_eq!(g.compose(&g), p("(3124)"));
        assert_eq!(Permutation::identity().compose(&g), g);
        assert_eq!(p("(1423)").compose(&g), p("(2431)"));
    }

    #[test]
    fn inverse_and_order() {
        let g = p("(2314)");
        assert_eq!(g.inverse(), p("(3124)"));
        assert!(g.compose(&g.inverse()).is_identity());
        assert_eq!(p("(2143)").inverse(), p("(2143)"));
        assert_eq!(g.order(), 3);
        assert_eq!(Permutation::identity().order(), 1);
        assert_eq!(p("(2143)").order(), 2);
        assert_eq!(p("(2341)").order(), 4);
    }

    #[test]
    fn enumerates_all_elements() {
        let all = Permutation::all();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Perm::<3>::all().len(), 6);
    }

    #[test]
    fn coset_factorization_examples() {
        let t = GroupTable::s4();
        assert_eq!(
            t.coset_factorize(&p("(4213)")),
            CosetCoord::new(8, 1).unwrap()
        );
        assert_eq!(
            t.coset_factorize(&p("(1234)")),
            CosetCoord::new(1, 0).unwrap()
        );
        assert_eq!(
            t.coset_factorize(&p("(3412)")),
            CosetCoord::new(6, 2).unwrap()
        );
        assert_eq!(t.coset_rep(7), p("(2341)"));
    }

    #[test]
    fn class_sizes_match_grouping() {
        let sizes = GroupTable::s4().class_sizes();
        let got: Vec<usize> = sizes.values().copied().collect();
        assert_eq!(got, vec![8, 6, 6, 3, 1]);
    }

    #[test]
    fn subgroup_is_closed() {
        let t = GroupTable::s4();
        let h = t.subgroup();
        for a in &h {
            assert!(t.in_subgroup(&a.inverse()));
            for b in &h {
                assert!(t.in_subgroup(&a.compose(b)));
            }
        }
    }

    #[test]
    fn coordinate_parsing_and_serde() {
        let c: CosetCoord = "(2,2)".parse().unwrap();
        assert_eq!(c, CosetCoord { alpha: 2, l: 2 });
        assert_eq!(
            "7, 0".parse::<CosetCoord>().unwrap(),
            CosetCoord { alpha: 7, l: 0 }
        );
        assert!("(9,0)".parse::<CosetCoord>().is_err());
        assert!("(1,3)".parse::<CosetCoord>().is_err());
        assert!("(1;3)".parse::<CosetCoord>().is_err());
        assert_eq!(serde_json::to_string(&c).unwrap(), "[2,2]");
        assert_eq!(serde_json::to_string(&p("(2314)")).unwrap(), "\"(2314)\"");
        let back: Permutation = serde_json::from_str("\"(2314)\"").unwrap();
        assert_eq!(back, p("(2314)"));
    }
}
