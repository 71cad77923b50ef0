//! Frame conditions and the catalogue of countermodel frames.
//!
//! Every countermodel lives on the worlds `*, g1..gn` (one `g` per chain;
//! a single `g` when there are no chains). The variants differ only in the
//! accessibility relation; the base edges `* → gi` are written `BR` below.
//!
//! | variant             | relation                                     |
//! |---------------------|----------------------------------------------|
//! | `base`              | `BR`                                         |
//! | `strict`            | `BR` (strict partial order, for GL)          |
//! | `cross`             | `BR ∪ {gj → gk : j ≠ k}`                     |
//! | `looped`            | `BR ∪ {gj → gj}`                             |
//! | `clustered`         | `BR ∪ {gj → gk}`                             |
//! | `cross-return`      | `cross ∪ {gj → *}`                           |
//! | `star-cross`        | `cross ∪ {* → *}`                            |
//! | `star-return`       | `BR ∪ {gj → *} ∪ {* → *}`                    |
//! | `deontic-<system>`  | `BR ∪ {gj → gj}`; S5 systems: `cross`        |
//! | `deontic-complete`  | `clustered`                                  |

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{KripkeModel, STAR};

/// The ten monadic deontic systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeonticSystem {
    Ok,
    Om,
    Os4,
    Ob,
    Os5,
    OkPlus,
    OmPlus,
    Os4Plus,
    ObPlus,
    Os5Plus,
}

impl DeonticSystem {
    pub const ALL: [DeonticSystem; 10] = [
        DeonticSystem::Ok,
        DeonticSystem::Om,
        DeonticSystem::Os4,
        DeonticSystem::Ob,
        DeonticSystem::Os5,
        DeonticSystem::OkPlus,
        DeonticSystem::OmPlus,
        DeonticSystem::Os4Plus,
        DeonticSystem::ObPlus,
        DeonticSystem::Os5Plus,
    ];

    pub fn is_s5(self) -> bool {
        matches!(self, DeonticSystem::Os5 | DeonticSystem::Os5Plus)
    }

    /// Whether this is a `+` system (adds `OA → PA`, i.e. seriality).
    pub fn is_plus(self) -> bool {
        matches!(
            self,
            DeonticSystem::OkPlus
                | DeonticSystem::OmPlus
                | DeonticSystem::Os4Plus
                | DeonticSystem::ObPlus
                | DeonticSystem::Os5Plus
        )
    }

    /// Frame conditions characterising the system's model class.
    pub fn conditions(self) -> Vec<FrameCondition> {
        use DeonticSystem::*;
        use FrameCondition::*;
        let mut conds = match self {
            Ok | OkPlus => vec![],
            Om | OmPlus => vec![AlmostReflexive],
            Os4 | Os4Plus => vec![Transitive, AlmostReflexive],
            Ob | ObPlus => vec![AlmostSymmetric, AlmostReflexive],
            Os5 | Os5Plus => vec![Euclidean, Transitive],
        };
        if self.is_plus() {
            conds.insert(0, Serial);
        }
        conds
    }

    fn name(self) -> &'static str {
        match self {
            DeonticSystem::Ok => "ok",
            DeonticSystem::Om => "om",
            DeonticSystem::Os4 => "os4",
            DeonticSystem::Ob => "ob",
            DeonticSystem::Os5 => "os5",
            DeonticSystem::OkPlus => "ok+",
            DeonticSystem::OmPlus => "om+",
            DeonticSystem::Os4Plus => "os4+",
            DeonticSystem::ObPlus => "ob+",
            DeonticSystem::Os5Plus => "os5+",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameVariant {
    Base,
    Deontic(DeonticSystem),
    DeonticComplete,
    Strict,
    Cross,
    Looped,
    Clustered,
    CrossReturn,
    StarCross,
    StarReturn,
}

impl FrameVariant {
    pub fn all() -> Vec<FrameVariant> {
        let mut out = vec![FrameVariant::Base];
        out.extend(DeonticSystem::ALL.iter().map(|s| FrameVariant::Deontic(*s)));
        out.extend([
            FrameVariant::DeonticComplete,
            FrameVariant::Strict,
            FrameVariant::Cross,
            FrameVariant::Looped,
            FrameVariant::Clustered,
            FrameVariant::CrossReturn,
            FrameVariant::StarCross,
            FrameVariant::StarReturn,
        ]);
        out
    }

    /// Conditions the variant's frames are claimed to satisfy. For the
    /// deontic variants these are the system's model-class conditions; for
    /// the others, the frame classes the construction is said to cover.
    pub fn claimed(self) -> Vec<FrameCondition> {
        use FrameCondition::*;
        match self {
            FrameVariant::Base | FrameVariant::Strict => vec![Transitive, Irreflexive],
            FrameVariant::Deontic(s) => s.conditions(),
            FrameVariant::DeonticComplete => {
                vec![
                    Serial,
                    Transitive,
                    Euclidean,
                    AlmostReflexive,
                    AlmostSymmetric,
                ]
            }
            FrameVariant::Cross => vec![Serial, Irreflexive, Euclidean, AlmostSymmetric],
            FrameVariant::Looped => {
                vec![
                    Serial,
                    Transitive,
                    Irreflexive,
                    AlmostReflexive,
                    AlmostSymmetric,
                ]
            }
            FrameVariant::Clustered => vec![
                Serial,
                Transitive,
                Irreflexive,
                Euclidean,
                AlmostReflexive,
                AlmostSymmetric,
            ],
            FrameVariant::CrossReturn => vec![Serial, Irreflexive, Euclidean, Symmetric],
            FrameVariant::StarCross => vec![Serial, Transitive, Euclidean],
            FrameVariant::StarReturn => vec![Serial, Symmetric],
        }
    }

    fn fixed_notes(self, n: usize) -> Vec<String> {
        let mut notes = Vec::new();
        if self == FrameVariant::StarCross {
            notes.push(
                "the star-to-g edges are included: without them * sees only itself, while \
                 falsifying a box at * needs the g-worlds as successors"
                    .to_string(),
            );
        }
        if matches!(self, FrameVariant::StarCross | FrameVariant::StarReturn) && n >= 1 {
            notes.push(
                "* is reflexive, so a box at * also ranges over *; an atom eps(x,y) with y a \
                 tail of x's chain has p_x = 1 and p_y = 0 at *, making its translation false \
                 at * and breaking falsification for leaves with tails"
                    .to_string(),
            );
        }
        if let FrameVariant::Deontic(s) = self {
            if s.is_s5() {
                notes.push(
                    "for the S5 systems the euclidean condition needs g_i R g_i whenever * R g_i; \
                     the deontic-complete frame adds those loops"
                        .to_string(),
                );
            } else if n == 0 {
                notes.push(
                    "the chain-free frame has g R * but not * R *, so it is not almost reflexive"
                        .to_string(),
                );
            }
        }
        notes
    }
}

impl fmt::Display for FrameVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameVariant::Base => f.write_str("base"),
            FrameVariant::Deontic(s) => write!(f, "deontic-{}", s.name()),
            FrameVariant::DeonticComplete => f.write_str("deontic-complete"),
            FrameVariant::Strict => f.write_str("strict"),
            FrameVariant::Cross => f.write_str("cross"),
            FrameVariant::Looped => f.write_str("looped"),
            FrameVariant::Clustered => f.write_str("clustered"),
            FrameVariant::CrossReturn => f.write_str("cross-return"),
            FrameVariant::StarCross => f.write_str("star-cross"),
            FrameVariant::StarReturn => f.write_str("star-return"),
        }
    }
}

impl FromStr for FrameVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FrameVariant::all()
            .into_iter()
            .find(|v| v.to_string() == s)
            .ok_or_else(|| format!("unknown frame variant {s:?}"))
    }
}

impl Serialize for FrameVariant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameCondition {
    Serial,
    Transitive,
    Euclidean,
    AlmostReflexive,
    AlmostSymmetric,
    Reflexive,
    Irreflexive,
    Symmetric,
}

impl fmt::Display for FrameCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FrameCondition::Serial => "serial",
            FrameCondition::Transitive => "transitive",
            FrameCondition::Euclidean => "euclidean",
            FrameCondition::AlmostReflexive => "almost_reflexive",
            FrameCondition::AlmostSymmetric => "almost_symmetric",
            FrameCondition::Reflexive => "reflexive",
            FrameCondition::Irreflexive => "irreflexive",
            FrameCondition::Symmetric => "symmetric",
        };
        f.write_str(s)
    }
}

/// Each flag is the exact first-order condition over the finite frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FrameProperties {
    pub serial: bool,
    pub transitive: bool,
    pub euclidean: bool,
    pub almost_reflexive: bool,
    pub almost_symmetric: bool,
    pub reflexive: bool,
    pub irreflexive: bool,
    pub symmetric: bool,
}

impl FrameProperties {
    pub fn get(&self, c: FrameCondition) -> bool {
        match c {
            FrameCondition::Serial => self.serial,
            FrameCondition::Transitive => self.transitive,
            FrameCondition::Euclidean => self.euclidean,
            FrameCondition::AlmostReflexive => self.almost_reflexive,
            FrameCondition::AlmostSymmetric => self.almost_symmetric,
            FrameCondition::Reflexive => self.reflexive,
            FrameCondition::Irreflexive => self.irreflexive,
            FrameCondition::Symmetric => self.symmetric,
        }
    }
}

pub(crate) fn properties_of(
    worlds: &[String],
    relation: &BTreeSet<(String, String)>,
) -> FrameProperties {
    let n = worlds.len();
    let index: BTreeMap<&str, usize> = worlds
        .iter()
        .enumerate()
        .map(|(i, w)| (w.as_str(), i))
        .collect();
    let mut r = vec![vec![false; n]; n];
    for (x, y) in relation {
        r[index[x.as_str()]][index[y.as_str()]] = true;
    }
    let all = |pred: &dyn Fn(usize, usize, usize) -> bool| {
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| pred(x, y, z))))
    };
    FrameProperties {
        serial: (0..n).all(|x| (0..n).any(|y| r[x][y])),
        transitive: all(&|x, y, z| !(r[x][y] && r[y][z]) || r[x][z]),
        euclidean: all(&|x, y, z| !(r[x][y] && r[x][z]) || r[y][z]),
        almost_reflexive: all(&|x, y, _| !r[x][y] || r[y][y]),
        almost_symmetric: all(&|x, y, z| !(r[x][y] && r[y][z]) || r[z][y]),
        reflexive: (0..n).all(|x| r[x][x]),
        irreflexive: (0..n).all(|x| !r[x][x]),
        symmetric: all(&|x, y, _| !r[x][y] || r[y][x]),
    }
}

pub fn frame_properties(m: &KripkeModel) -> FrameProperties {
    properties_of(m.worlds(), m.relation())
}

/// Names of the non-star worlds for `n` chains.
pub(crate) fn g_worlds(n: usize) -> Vec<String> {
    if n == 0 {
        vec!["g".to_string()]
    } else {
        (1..=n).map(|i| format!("g{i}")).collect()
    }
}

/// The variant's worlds and relation for `n` chains.
pub(crate) fn variant_frame(
    v: FrameVariant,
    n: usize,
) -> (Vec<String>, BTreeSet<(String, String)>) {
    let gs = g_worlds(n);
    let star = || STAR.to_string();
    let mut worlds = vec![star()];
    worlds.extend(gs.iter().cloned());

    let base = gs.iter().map(|g| (star(), g.clone()));
    let cross = || {
        gs.iter()
            .flat_map(|x| {
                gs.iter()
                    .filter(move |y| *y != x)
                    .map(move |y| (x.clone(), y.clone()))
            })
            .collect::<Vec<_>>()
    };
    let loops = || {
        gs.iter()
            .map(|g| (g.clone(), g.clone()))
            .collect::<Vec<_>>()
    };
    let all_pairs = || {
        gs.iter()
            .flat_map(|x| gs.iter().map(move |y| (x.clone(), y.clone())))
            .collect::<Vec<_>>()
    };
    let back = || gs.iter().map(|g| (g.clone(), star())).collect::<Vec<_>>();

    let mut rel: BTreeSet<(String, String)> = base.collect();
    match v {
        FrameVariant::Base | FrameVariant::Strict => {}
        FrameVariant::Deontic(s) if n == 0 => {
            if !s.is_s5() {
                rel.extend(back());
                rel.extend(loops());
            }
        }
        FrameVariant::Deontic(s) if s.is_s5() => rel.extend(cross()),
        FrameVariant::Deontic(_) => rel.extend(loops()),
        FrameVariant::DeonticComplete | FrameVariant::Clustered => rel.extend(all_pairs()),
        FrameVariant::Cross => rel.extend(cross()),
        FrameVariant::Looped => rel.extend(loops()),
        FrameVariant::CrossReturn => {
            rel.extend(cross());
            rel.extend(back());
        }
        FrameVariant::StarCross => {
            rel.extend(cross());
            rel.insert((star(), star()));
        }
        FrameVariant::StarReturn => {
            rel.extend(back());
            rel.insert((star(), star()));
        }
    }
    (worlds, rel)
}

/// Result of auditing one variant frame.
#[derive(Debug, Clone, Serialize)]
pub struct FrameAudit {
    pub variant: FrameVariant,
    pub n: usize,
    pub worlds: Vec<String>,
    pub relation: Vec<(String, String)>,
    pub properties: FrameProperties,
    /// Each claimed condition and whether the frame satisfies it.
    pub claims: BTreeMap<FrameCondition, bool>,
    pub notes: Vec<String>,
}

impl FrameAudit {
    pub fn refuted_claims(&self) -> Vec<FrameCondition> {
        self.claims
            .iter()
            .filter(|(_, ok)| !**ok)
            .map(|(c, _)| *c)
            .collect()
    }
}

/// Builds the variant frame for `n` chains and evaluates every condition.
pub fn audit_variant(v: FrameVariant, n: usize) -> FrameAudit {
    let (worlds, relation) = variant_frame(v, n);
    let properties = properties_of(&worlds, &relation);
    let claims: BTreeMap<FrameCondition, bool> = v
        .claimed()
        .into_iter()
        .map(|c| (c, properties.get(c)))
        .collect();
    let mut notes = v.fixed_notes(n);
    for (c, ok) in &claims {
        if !ok {
            notes.push(format!("claimed condition {c} does not hold for n = {n}"));
        }
    }
    FrameAudit {
        variant: v,
        n,
        worlds,
        relation: relation.into_iter().collect(),
        properties,
        claims,
        notes,
    }
}
