//! Double relations given by explicit squares, the centralizing (pullback)
//! condition, and the translation between connectors and centralizing
//! double relations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::verify::require_connector;
use super::domain::PartitionJson;
use super::{Connector, PullbackDomain};
use crate::algebra::FinAlgebra;
use crate::error::{check_size, Error, Result};
use crate::relcalc::{is_equivalence, regular_image, EquivRelation, FinMap, Relation};

/// A square `(x, z, y, w)`:
///
/// ```text
///   x —S— z
///   |R    |R
///   y —S— w
/// ```
pub type Square = (usize, usize, usize, usize);

/// The corner at which two sides of a square are given and the opposite
/// corner is sought.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Corner {
    /// Left side `(x, y)` and top `(x, z)` given; `w` sought.
    TopLeft,
    /// Right side `(z, w)` and top `(x, z)` given; `y` sought.
    TopRight,
    /// Left side `(x, y)` and bottom `(y, w)` given; `z` sought.
    BottomLeft,
    /// Right side `(z, w)` and bottom `(y, w)` given; `x` sought.
    BottomRight,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::TopLeft, Corner::TopRight, Corner::BottomLeft, Corner::BottomRight];

    /// Splits a square into the three known corners (shared corner first) and
    /// the sought one.
    fn split(self, (x, z, y, w): Square) -> ((usize, usize, usize), usize) {
        match self {
            Corner::TopLeft => ((x, y, z), w),
            Corner::TopRight => ((z, w, x), y),
            Corner::BottomLeft => ((y, x, w), z),
            Corner::BottomRight => ((w, z, y), x),
        }
    }
}

/// A set of squares over `R` (vertical sides) and `S` (horizontal sides).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleRelation {
    r: EquivRelation,
    s: EquivRelation,
    squares: BTreeSet<Square>,
}

impl DoubleRelation {
    pub fn new(r: &EquivRelation, s: &EquivRelation, squares: impl IntoIterator<Item = Square>) -> Result<Self> {
        check_size("double relation", r.size(), s.size())?;
        let squares: BTreeSet<Square> = squares.into_iter().collect();
        let n = r.size();
        for &(x, z, y, w) in &squares {
            if [x, z, y, w].iter().any(|&v| v >= n) {
                return Err(Error::OutOfRange {
                    index: x.max(z).max(y).max(w),
                    size: n,
                });
            }
            if !(s.related(x, z) && s.related(y, w) && r.related(x, y) && r.related(z, w)) {
                return Err(Error::InvalidArgument(format!(
                    "square ({x},{z},{y},{w}) does not have R-sides and S-edges top and bottom"
                )));
            }
        }
        Ok(DoubleRelation {
            r: r.clone(),
            s: s.clone(),
            squares,
        })
    }

    /// Every square whose edges lie in `R` and `S`.
    pub fn all_squares(r: &EquivRelation, s: &EquivRelation) -> Result<Self> {
        check_size("double relation", r.size(), s.size())?;
        let n = r.size();
        let mut squares = BTreeSet::new();
        for x in 0..n {
            for z in s.class(x) {
                for y in r.class(x) {
                    for w in s.class(y).filter(|&w| r.related(z, w)) {
                        squares.insert((x, z, y, w));
                    }
                }
            }
        }
        Ok(DoubleRelation {
            r: r.clone(),
            s: s.clone(),
            squares,
        })
    }

    pub fn r(&self) -> &EquivRelation {
        &self.r
    }

    pub fn s(&self) -> &EquivRelation {
        &self.s
    }

    pub fn squares(&self) -> &BTreeSet<Square> {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn contains(&self, sq: Square) -> bool {
        self.squares.contains(&sq)
    }

    /// First failure of the double-equivalence conditions: squares must form
    /// an equivalence relation both horizontally (on `R`) and vertically
    /// (on `S`).
    pub fn equivalence_defect(&self) -> Option<String> {
        let n = self.r.size();
        for x in 0..n {
            for y in self.r.class(x) {
                if !self.contains((x, x, y, y)) {
                    return Some(format!("missing horizontal identity square on ({x},{y})"));
                }
            }
            for z in self.s.class(x) {
                if !self.contains((x, z, x, z)) {
                    return Some(format!("missing vertical identity square on ({x},{z})"));
                }
            }
        }
        for &(x, z, y, w) in &self.squares {
            if !self.contains((z, x, w, y)) {
                return Some(format!("horizontal flip of ({x},{z},{y},{w}) missing"));
            }
            if !self.contains((y, w, x, z)) {
                return Some(format!("vertical flip of ({x},{z},{y},{w}) missing"));
            }
        }
        let by_left: HashMap<(usize, usize), Vec<(usize, usize)>> =
            self.squares.iter().fold(HashMap::new(), |mut m, &(x, z, y, w)| {
                m.entry((x, y)).or_default().push((z, w));
                m
            });
        let by_top: HashMap<(usize, usize), Vec<(usize, usize)>> =
            self.squares.iter().fold(HashMap::new(), |mut m, &(x, z, y, w)| {
                m.entry((x, z)).or_default().push((y, w));
                m
            });
        for &(x, z, y, w) in &self.squares {
            for &(u, v) in by_left.get(&(z, w)).into_iter().flatten() {
                if !self.contains((x, u, y, v)) {
                    return Some(format!("horizontal pasting of ({x},{z},{y},{w}) and ({z},{u},{w},{v}) missing"));
                }
            }
            for &(u, v) in by_top.get(&(y, w)).into_iter().flatten() {
                if !self.contains((x, z, u, v)) {
                    return Some(format!("vertical pasting of ({x},{z},{y},{w}) and ({y},{w},{u},{v}) missing"));
                }
            }
        }
        None
    }
}

/// A corner configuration with no completion or several.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerFailure {
    pub corner: Corner,
    /// Shared corner followed by the two adjacent corners, in the order
    /// documented on [`Corner`].
    pub given: (usize, usize, usize),
    pub completions: Vec<usize>,
}

impl fmt::Display for CornerFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.given;
        write!(
            f,
            "{:?} corner {a} with sides to {b} and {c} has {} completions {:?}",
            self.corner,
            self.completions.len(),
            self.completions
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizingReport {
    /// Every left side and top sharing a corner have exactly one completion.
    pub holds: bool,
    /// The same condition for each corner, in [`Corner::ALL`] order.
    pub corners: [bool; 4],
    pub witness: Option<CornerFailure>,
}

impl CentralizingReport {
    pub fn all_corners(&self) -> bool {
        self.corners.iter().all(|&c| c)
    }
}

/// Corner scan over arbitrary relations, so that images of double relations
/// (whose sides need not be equivalences) can be checked too.
fn corner_scan(r: &Relation, s: &Relation, squares: &BTreeSet<Square>, corner: Corner) -> Option<CornerFailure> {
    let mut completions: HashMap<(usize, usize, usize), Vec<usize>> = HashMap::new();
    for &sq in squares {
        let (key, sought) = corner.split(sq);
        completions.entry(key).or_default().push(sought);
    }
    // Sides leaving the shared corner: along R first, then along S.
    let (r_dir, s_dir) = match corner {
        Corner::TopLeft => (r.clone(), s.clone()),
        Corner::TopRight => (r.clone(), s.opposite()),
        Corner::BottomLeft => (r.opposite(), s.clone()),
        Corner::BottomRight => (r.opposite(), s.opposite()),
    };
    for a in 0..r.src() {
        for b in r_dir.successors(a) {
            for c in s_dir.successors(a) {
                let mut found = completions.get(&(a, b, c)).cloned().unwrap_or_default();
                found.sort_unstable();
                found.dedup();
                if found.len() != 1 {
                    return Some(CornerFailure {
                        corner,
                        given: (a, b, c),
                        completions: found,
                    });
                }
            }
        }
    }
    None
}

fn centralizing_report(r: &Relation, s: &Relation, squares: &BTreeSet<Square>) -> CentralizingReport {
    let failures: Vec<Option<CornerFailure>> = Corner::ALL
        .iter()
        .map(|&c| corner_scan(r, s, squares, c))
        .collect();
    let corners = [0, 1, 2, 3].map(|i| failures[i].is_none());
    CentralizingReport {
        holds: corners[0],
        corners,
        witness: failures.into_iter().flatten().next(),
    }
}

pub fn is_centralizing(c: &DoubleRelation) -> CentralizingReport {
    centralizing_report(&c.r.to_relation(), &c.s.to_relation(), &c.squares)
}

/// The squares `(x, z, y, p(y, x, z))` for `x R y` and `x S z`.
pub fn connector_to_centralizing(p: &Connector) -> Result<DoubleRelation> {
    require_connector(p, None)?;
    let (r, s) = (p.r(), p.s());
    let n = r.size();
    let mut squares = BTreeSet::new();
    for x in 0..n {
        for y in r.class(x) {
            for z in s.class(x) {
                squares.insert((x, z, y, p.at(y, x, z)));
            }
        }
    }
    DoubleRelation::new(r, s, squares)
}

/// Reads `p(y, x, z)` off as the unique completion of the corner with left
/// side `(x, y)` and top `(x, z)`.
pub fn centralizing_to_connector(c: &DoubleRelation) -> Result<Connector> {
    if let Some(f) = corner_scan(&c.r.to_relation(), &c.s.to_relation(), &c.squares, Corner::TopLeft) {
        return Err(Error::NotCentralizing(f.to_string()));
    }
    let mut fourth: HashMap<(usize, usize, usize), usize> = HashMap::new();
    for &(x, z, y, w) in &c.squares {
        fourth.insert((x, y, z), w);
    }
    let domain = PullbackDomain::new(&c.r, &c.s)?;
    let table = domain.triples().iter().map(|&(y, x, z)| fourth[&(x, y, z)]).collect();
    let p = Connector::new(domain, table)?;
    require_connector(&p, None)?;
    Ok(p)
}

/// Transports a connector along a surjection: the squares of the associated
/// double relation are mapped corner-wise and the connector between `f(R)`
/// and `f(S)` is read off the image. Fails with `NotCentralizing` when the
/// image squares do not have unique completions, and with `NotEquivalence`
/// when `f(R)` or `f(S)` is not transitive.
pub fn image_connector(f: &FinMap, p: &Connector, alg: Option<&FinAlgebra>) -> Result<Connector> {
    check_size("image connector", f.src(), p.domain().size())?;
    if !f.is_surjective() {
        return Err(Error::InvalidArgument("image connector needs a surjective map".into()));
    }
    let double = connector_to_centralizing(p)?;
    let fr = regular_image(f, &p.r().to_relation())?;
    let fs = regular_image(f, &p.s().to_relation())?;
    let image: BTreeSet<Square> = double
        .squares
        .iter()
        .map(|&(x, z, y, w)| (f.apply(x), f.apply(z), f.apply(y), f.apply(w)))
        .collect();
    if let Some(failure) = corner_scan(&fr, &fs, &image, Corner::TopLeft) {
        return Err(Error::NotCentralizing(format!("image double relation: {failure}")));
    }
    for (name, rel) in [("f(R)", &fr), ("f(S)", &fs)] {
        let report = is_equivalence(rel)?;
        if !report.is_equivalence() {
            return Err(Error::NotEquivalence(format!("{name}: {}", report.describe())));
        }
    }
    let (r2, s2) = (EquivRelation::from_relation(&fr)?, EquivRelation::from_relation(&fs)?);
    let q = centralizing_to_connector(&DoubleRelation::new(&r2, &s2, image)?)?;
    if let Some(a) = alg {
        require_connector(&q, Some(a))?;
    }
    Ok(q)
}

#[derive(Serialize, Deserialize)]
struct DoubleJson {
    #[serde(rename = "R")]
    r: PartitionJson,
    #[serde(rename = "S")]
    s: PartitionJson,
    squares: Vec<[usize; 4]>,
}

impl Serialize for DoubleRelation {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        DoubleJson {
            r: PartitionJson::Blocks(self.r.blocks()),
            s: PartitionJson::Blocks(self.s.blocks()),
            squares: self.squares.iter().map(|&(x, z, y, w)| [x, z, y, w]).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for DoubleRelation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = DoubleJson::deserialize(d)?;
        let r = raw.r.into_equiv().map_err(D::Error::custom)?;
        let s = raw.s.into_equiv().map_err(D::Error::custom)?;
        DoubleRelation::new(&r, &s, raw.squares.into_iter().map(|[x, z, y, w]| (x, z, y, w))).map_err(D::Error::custom)
    }
}
