//! Admissibility classifier: a necessary Sylow condition and a sufficient
//! abelian-rank condition, over a coarse model of the base field.

use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, prime_divisors};
use crate::error::{Error, Result};

use super::abelian::{abelian_invariants, AbelianGroup};
use super::cayley::CayleyGroup;
use super::series::{frattini_rank, obstruction_series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidueKind {
    Finite,
    Local,
    Global,
    Other,
}

impl ResidueKind {
    pub fn name(self) -> &'static str {
        match self {
            ResidueKind::Finite => "finite",
            ResidueKind::Local => "local",
            ResidueKind::Global => "global",
            ResidueKind::Other => "other",
        }
    }
}

impl FromStr for ResidueKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "finite" => Ok(ResidueKind::Finite),
            "local" => Ok(ResidueKind::Local),
            "global" => Ok(ResidueKind::Global),
            "other" => Ok(ResidueKind::Other),
            _ => Err(Error::syntax(0, format!("unknown residue kind {s:?}"))),
        }
    }
}

/// Hypotheses on `F = K(X)` and its residue fields, as flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldModel {
    /// Prime, or 0.
    pub residue_char: u64,
    pub residue_kind: ResidueKind,
    /// Order of the group of roots of unity assumed in the base field.
    pub roots_of_unity_bound: u64,
    pub two_dim_local: bool,
}

impl FieldModel {
    pub fn new(
        residue_char: u64,
        residue_kind: ResidueKind,
        roots_of_unity_bound: u64,
        two_dim_local: bool,
    ) -> Result<Self> {
        if residue_char != 0 && !crate::arith::is_prime(residue_char) {
            return Err(Error::NotPrime(residue_char));
        }
        Ok(FieldModel {
            residue_char,
            residue_kind,
            roots_of_unity_bound,
            two_dim_local,
        })
    }

    fn has_roots_of_unity(&self, n: u64) -> bool {
        self.roots_of_unity_bound != 0 && self.roots_of_unity_bound.is_multiple_of(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    Coprimality { residue_char: u64 },
    ResidueKind(ResidueKind),
    NotTwoDimLocal,
    RootsOfUnity { bound: u64, order: u64 },
    SylowNonabelian { p: u64 },
    SylowRank { p: u64, rank: usize },
}

impl Reason {
    /// Machine-readable code.
    pub fn code(&self) -> String {
        match self {
            Reason::Coprimality { .. } => "coprimality".into(),
            Reason::ResidueKind(_) => "residue-kind".into(),
            Reason::NotTwoDimLocal => "not-two-dim-local".into(),
            Reason::RootsOfUnity { .. } => "roots-of-unity".into(),
            Reason::SylowNonabelian { p } => format!("sylow-nonabelian:{p}"),
            Reason::SylowRank { p, rank } => format!("sylow-rank:{p}={rank}"),
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Coprimality { residue_char } => {
                write!(f, "coprimality hypothesis fails: residue characteristic {residue_char} divides |G|")
            }
            Reason::ResidueKind(k) => {
                write!(f, "residue field kind {} gives no decision", k.name())
            }
            Reason::NotTwoDimLocal => write!(f, "field is not flagged two-dimensional local"),
            Reason::RootsOfUnity { bound, order } => {
                write!(
                    f,
                    "roots of unity of order {order} not assumed (bound {bound})"
                )
            }
            Reason::SylowNonabelian { p } => {
                write!(
                    f,
                    "Sylow {p}-subgroup is not abelian, so not a quotient of Z^4"
                )
            }
            Reason::SylowRank { p, rank } => {
                write!(f, "Sylow {p}-subgroup needs {rank} > 4 generators")
            }
        }
    }
}

/// Why a Sylow subgroup has no series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoSeriesProof {
    /// The Frattini quotient has this rank (at least 5).
    FrattiniRank(u32),
    /// Every candidate pair was rejected.
    ExhaustiveSearch,
}

impl fmt::Display for NoSeriesProof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoSeriesProof::FrattiniRank(d) => write!(f, "frattini-rank:{d}"),
            NoSeriesProof::ExhaustiveSearch => write!(f, "exhaustive-search"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotAdmissible {
        prime: u64,
        proof: NoSeriesProof,
    },
    /// Sylow ranks per prime.
    Admissible {
        sylow_ranks: Vec<(u64, usize)>,
    },
    Unknown {
        reasons: Vec<Reason>,
    },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::NotAdmissible { .. } => "not-admissible",
            Verdict::Admissible { .. } => "admissible",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    /// One-line `key=value` record.
    pub fn record(&self) -> String {
        match self {
            Verdict::NotAdmissible { prime, proof } => {
                format!("verdict=not-admissible prime={prime} proof={proof}")
            }
            Verdict::Admissible { sylow_ranks } => {
                let r: Vec<String> = sylow_ranks
                    .iter()
                    .map(|(p, r)| format!("{p}:{r}"))
                    .collect();
                format!("verdict=admissible sylow_ranks={}", r.join(","))
            }
            Verdict::Unknown { reasons } => {
                let r: Vec<String> = reasons.iter().map(Reason::code).collect();
                format!("verdict=unknown reasons={}", r.join(","))
            }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NotAdmissible { prime, proof } => write!(
                f,
                "NOT ADMISSIBLE: the Sylow {prime}-subgroup has no series P > P1 > P2 with P/P1, P2 cyclic and P1/P2 metacyclic ({proof})"
            ),
            Verdict::Admissible { sylow_ranks } => {
                let r: Vec<String> = sylow_ranks
                    .iter()
                    .map(|(p, r)| format!("rank {r} at {p}"))
                    .collect();
                write!(f, "ADMISSIBLE: every Sylow subgroup is abelian of rank <= 4 ({})", r.join(", "))
            }
            Verdict::Unknown { reasons } => {
                writeln!(f, "UNKNOWN:")?;
                for (i, r) in reasons.iter().enumerate() {
                    if i > 0 {
                        writeln!(f)?;
                    }
                    write!(f, "  - {r}")?;
                }
                Ok(())
            }
        }
    }
}

/// A group to classify.
#[derive(Clone, Debug)]
pub enum GroupInput {
    Table(CayleyGroup),
    Abelian(AbelianGroup),
}

impl GroupInput {
    pub fn order(&self) -> u64 {
        match self {
            GroupInput::Table(g) => g.order() as u64,
            GroupInput::Abelian(a) => a.order(),
        }
    }

    /// `abelian: [d1, ..., dr]`, or `table:` followed by the rows.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim_start();
        if let Some(rest) = t.strip_prefix("abelian:") {
            return Ok(GroupInput::Abelian(AbelianGroup::parse(rest)?));
        }
        if let Some(rest) = t.strip_prefix("table:") {
            let mut rows = Vec::new();
            for (ln, line) in rest.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let row: std::result::Result<Vec<usize>, _> =
                    line.split_whitespace().map(str::parse).collect();
                rows.push(row.map_err(|_| Error::syntax(ln, format!("bad table row {line:?}")))?);
            }
            return Ok(GroupInput::Table(CayleyGroup::new(rows)?));
        }
        Err(Error::syntax(0, "expected \"abelian:\" or \"table:\""))
    }
}

struct SylowInfo {
    p: u64,
    /// `None` when nonabelian.
    abelian_rank: Option<usize>,
    no_series: Option<NoSeriesProof>,
}

fn sylow_info(g: &GroupInput) -> Result<Vec<SylowInfo>> {
    let n = g.order();
    let mut out = Vec::new();
    for p in prime_divisors(n) {
        let info = match g {
            GroupInput::Abelian(a) => {
                let r = a.p_rank(p);
                SylowInfo {
                    p,
                    abelian_rank: Some(r),
                    no_series: (r >= 5).then_some(NoSeriesProof::FrattiniRank(r as u32)),
                }
            }
            GroupInput::Table(g) => {
                let s = g.subgroup_as_group(&g.sylow(p));
                if s.is_abelian() {
                    let r = abelian_invariants(&s).rank();
                    SylowInfo {
                        p,
                        abelian_rank: Some(r),
                        no_series: (r >= 5).then_some(NoSeriesProof::FrattiniRank(r as u32)),
                    }
                } else {
                    let d = frattini_rank(&s, p);
                    let no_series = if d >= 5 {
                        Some(NoSeriesProof::FrattiniRank(d))
                    } else if obstruction_series(&s)?.is_none() {
                        Some(NoSeriesProof::ExhaustiveSearch)
                    } else {
                        None
                    };
                    SylowInfo {
                        p,
                        abelian_rank: None,
                        no_series,
                    }
                }
            }
        };
        out.push(info);
    }
    Ok(out)
}

pub fn classify(g: &GroupInput, model: &FieldModel) -> Result<Verdict> {
    let n = g.order();
    if model.residue_char != 0 && gcd(n, model.residue_char) != 1 {
        return Ok(Verdict::Unknown {
            reasons: vec![Reason::Coprimality {
                residue_char: model.residue_char,
            }],
        });
    }
    let info = sylow_info(g)?;
    let kind_decides = matches!(
        model.residue_kind,
        ResidueKind::Finite | ResidueKind::Local | ResidueKind::Global
    );
    if model.two_dim_local && kind_decides {
        if let Some(s) = info.iter().find(|s| s.no_series.is_some()) {
            return Ok(Verdict::NotAdmissible {
                prime: s.p,
                proof: s.no_series.clone().unwrap(),
            });
        }
    }
    let mut reasons = Vec::new();
    if model.residue_kind != ResidueKind::Finite {
        reasons.push(Reason::ResidueKind(model.residue_kind));
    }
    if !model.two_dim_local {
        reasons.push(Reason::NotTwoDimLocal);
    }
    if !model.has_roots_of_unity(n) {
        reasons.push(Reason::RootsOfUnity {
            bound: model.roots_of_unity_bound,
            order: n,
        });
    }
    for s in &info {
        match s.abelian_rank {
            None => reasons.push(Reason::SylowNonabelian { p: s.p }),
            Some(r) if r > 4 => reasons.push(Reason::SylowRank { p: s.p, rank: r }),
            _ => {}
        }
    }
    if reasons.is_empty() {
        Ok(Verdict::Admissible {
            sylow_ranks: info
                .iter()
                .map(|s| (s.p, s.abelian_rank.unwrap()))
                .collect(),
        })
    } else {
        Ok(Verdict::Unknown { reasons })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(p: u64, mu: u64) -> FieldModel {
        FieldModel::new(p, ResidueKind::Finite, mu, true).unwrap()
    }

    #[test]
    fn elementary_rank_five() {
        for (l, p) in [(3u64, 2u64), (5, 2), (7, 3)] {
            let g = GroupInput::Abelian(AbelianGroup::new(vec![l; 5]).unwrap());
            let v = classify(&g, &model(p, 1)).unwrap();
            assert_eq!(
                v,
                Verdict::NotAdmissible {
                    prime: l,
                    proof: NoSeriesProof::FrattiniRank(5)
                }
            );
        }
    }

    #[test]
    fn admissible_and_unknown() {
        let g = GroupInput::Abelian(AbelianGroup::parse("[3,3,12,12]").unwrap());
        let n = g.order();
        let v = classify(&g, &model(5, n)).unwrap();
        assert_eq!(
            v,
            Verdict::Admissible {
                sylow_ranks: vec![(2, 2), (3, 4)]
            }
        );
        let g4 = GroupInput::Abelian(AbelianGroup::parse("[3,3,3,3]").unwrap());
        let v = classify(&g4, &model(2, 1)).unwrap();
        assert_eq!(v.record(), "verdict=unknown reasons=roots-of-unity");
        let v = classify(&g4, &model(3, 81)).unwrap();
        assert_eq!(v.record(), "verdict=unknown reasons=coprimality");
    }

    #[test]
    fn table_input() {
        let text = "table:\n0 1 2\n1 2 0\n2 0 1\n";
        let g = GroupInput::parse(text).unwrap();
        assert_eq!(g.order(), 3);
        let v = classify(&g, &model(2, 3)).unwrap();
        assert_eq!(v.record(), "verdict=admissible sylow_ranks=3:1");
        assert!(GroupInput::parse("table:\n0 1\n0 1\n").is_err());
        assert!(GroupInput::parse("nonsense").is_err());
    }
}
