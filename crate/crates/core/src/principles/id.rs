use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The principles of explosion and paraconsistency notions the workbench checks.
///
/// Textual form: `ecq:OP`, `bot_ecq`, `gecq`, `secq`, `secq_prime`, `specq`, `pfecq`,
/// `pfecq2`, `pfecq3`, `parecq`, `parecq2`, `k_para:X;Y;..`, `nf_para`, `fin_triv[:N]`,
/// `gentle_explosion:ψ;..`, `lfi:ψ;..`. Elements of `K` and the members of a
/// consistency set are separated by `;`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PrincipleId {
    /// `{α, ¬α}` explodes for every `α`.
    Ecq { op: String },
    /// Some named constant `⊥` has `C({⊥}) = L`.
    BotEcq,
    /// Every `α` has some `β` with `C({α, β}) = L`.
    Gecq,
    /// Every `α` lies in some exploding `Γ ⊊ L`.
    Secq,
    /// Every `α` has some `Γ ⊊ L` with `Γ ∪ {α} ⊊ L` exploding.
    SecqPrime,
    /// Every `Γ ⊊ L` has some `α` with `Γ ∪ {α} ⊊ L` exploding.
    Specq,
    /// Every `Γ ⊊ L` has an exploding `Δ ⊊ L` with `Γ ⊆ Δ`.
    Pfecq,
    /// Every `Γ ⊊ L` has some `Δ ⊊ L` with `Γ ∪ Δ ⊊ L` exploding.
    Pfecq2,
    /// Every `Γ ⊊ L` has some `∅ ≠ Δ ⊊ L` with `Γ ∪ Δ ⊊ L` and `Γ ∪ Δ′` exploding for all
    /// non-empty `Δ′ ⊆ Δ`.
    Pfecq3,
    /// Some non-empty `Γ` and some `Δ` such that every `α ∈ Γ` explodes with some `β ∈ Δ`.
    Parecq,
    /// Some `Γ`, `Δ` with `Γ × Δ ≠ ∅` such that every cross pair explodes.
    Parecq2,
    /// Some `α` explodes with no member of `K`.
    KPara { k: Vec<String> },
    /// gECQ fails.
    NfPara,
    /// Some set of at most `bound` elements explodes.
    FinTriv { bound: Option<usize> },
    /// `○(p) ∪ {p, ¬p}` explodes.
    GentleExplosion { circle: Vec<String> },
    /// The three clauses of a logic of formal inconsistency for `○`.
    Lfi { circle: Vec<String> },
}

impl PrincipleId {
    pub fn name(&self) -> &'static str {
        match self {
            PrincipleId::Ecq { .. } => "ecq",
            PrincipleId::BotEcq => "bot_ecq",
            PrincipleId::Gecq => "gecq",
            PrincipleId::Secq => "secq",
            PrincipleId::SecqPrime => "secq_prime",
            PrincipleId::Specq => "specq",
            PrincipleId::Pfecq => "pfecq",
            PrincipleId::Pfecq2 => "pfecq2",
            PrincipleId::Pfecq3 => "pfecq3",
            PrincipleId::Parecq => "parecq",
            PrincipleId::Parecq2 => "parecq2",
            PrincipleId::KPara { .. } => "k_para",
            PrincipleId::NfPara => "nf_para",
            PrincipleId::FinTriv { .. } => "fin_triv",
            PrincipleId::GentleExplosion { .. } => "gentle_explosion",
            PrincipleId::Lfi { .. } => "lfi",
        }
    }

    /// Principles that need no argument.
    pub fn plain() -> Vec<PrincipleId> {
        use PrincipleId::*;
        vec![BotEcq, Gecq, Secq, SecqPrime, Specq, Pfecq, Pfecq2, Pfecq3, Parecq, Parecq2, NfPara]
    }

    /// Parses a comma-separated list.
    pub fn parse_list(s: &str) -> Result<Vec<PrincipleId>> {
        s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
    }
}

fn split_args(s: &str) -> Vec<String> {
    s.split(';').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
}

impl FromStr for PrincipleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a.trim())),
            None => (s, None),
        };
        let name = name.to_ascii_lowercase().replace('-', "_");
        let need = |what: &str| {
            arg.filter(|a| !a.is_empty())
                .ok_or_else(|| Error::invalid("principle", format!("`{name}` needs {what}")))
        };
        let no_arg = |p: PrincipleId| match arg {
            None => Ok(p),
            Some(_) => Err(Error::invalid("principle", format!("`{name}` takes no argument"))),
        };
        match name.as_str() {
            "ecq" => Ok(PrincipleId::Ecq { op: need("a unary operation, as in ecq:neg")?.to_string() }),
            "bot_ecq" => no_arg(PrincipleId::BotEcq),
            "gecq" => no_arg(PrincipleId::Gecq),
            "secq" => no_arg(PrincipleId::Secq),
            "secq_prime" | "secq2" => no_arg(PrincipleId::SecqPrime),
            "specq" => no_arg(PrincipleId::Specq),
            "pfecq" | "pfecq1" => no_arg(PrincipleId::Pfecq),
            "pfecq2" => no_arg(PrincipleId::Pfecq2),
            "pfecq3" => no_arg(PrincipleId::Pfecq3),
            "parecq" | "parecq1" => no_arg(PrincipleId::Parecq),
            "parecq2" => no_arg(PrincipleId::Parecq2),
            "nf_para" => no_arg(PrincipleId::NfPara),
            "k_para" => Ok(PrincipleId::KPara { k: split_args(arg.unwrap_or("")) }),
            "fin_triv" => {
                let bound = match arg {
                    None => None,
                    Some(a) => Some(a.parse().map_err(|_| Error::invalid("principle", format!("bad bound `{a}`")))?),
                };
                Ok(PrincipleId::FinTriv { bound })
            }
            "gentle_explosion" => Ok(PrincipleId::GentleExplosion { circle: split_args(need("a consistency set")?) }),
            "lfi" => Ok(PrincipleId::Lfi { circle: split_args(need("a consistency set")?) }),
            _ => Err(Error::unknown("principle", s)),
        }
    }
}

impl fmt::Display for PrincipleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        match self {
            PrincipleId::Ecq { op } => write!(f, ":{op}"),
            PrincipleId::KPara { k } => write!(f, ":{}", k.join(";")),
            PrincipleId::FinTriv { bound: Some(b) } => write!(f, ":{b}"),
            PrincipleId::GentleExplosion { circle } | PrincipleId::Lfi { circle } => write!(f, ":{}", circle.join(";")),
            _ => Ok(()),
        }
    }
}

impl Serialize for PrincipleId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PrincipleId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["ecq:neg", "gecq", "k_para:a;b", "fin_triv:3", "fin_triv", "lfi:p → ¬¬p", "pfecq3", "secq_prime"] {
            let p: PrincipleId = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert_eq!("pfecq1".parse::<PrincipleId>().unwrap(), PrincipleId::Pfecq);
        assert!("ecq".parse::<PrincipleId>().is_err());
        assert!("gecq:x".parse::<PrincipleId>().is_err());
        assert!("explode".parse::<PrincipleId>().is_err());
        assert_eq!(PrincipleId::parse_list("gecq, secq,specq").unwrap().len(), 3);
    }
}
