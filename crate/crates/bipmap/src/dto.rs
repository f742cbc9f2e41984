//! Serializable mirrors of the core tables and closed forms. Rationals are
//! "num/den" strings, partitions are descending arrays.

use std::collections::BTreeMap;
use std::str::FromStr;

use bipmap_core::census::CensusData;
use bipmap_core::closed::{ClosedFormF, ClosedFormL, FTerm, GreekPart, LTerm};
use bipmap_core::kernel::Pole;
use bipmap_core::{Partition, Series, Q};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational, serialized as "num/den".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat(pub Q);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map(Rat).map_err(serde::de::Error::custom)
    }
}

pub fn parse_rat(s: &str) -> Result<Q, String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n = BigInt::from_str(n.trim()).map_err(|e| format!("bad numerator in {s:?}: {e}"))?;
    let d = BigInt::from_str(d.trim()).map_err(|e| format!("bad denominator in {s:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Q::new(n, d))
}

fn parts(p: &Partition) -> Vec<u32> {
    p.parts().to_vec()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledRow {
    pub g: u32,
    pub mu: Vec<u32>,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedRow {
    pub g: u32,
    pub k: u32,
    pub mu: Vec<u32>,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedRow {
    pub g: u32,
    pub mu: Vec<u32>,
    pub vertex: u64,
    pub face: u64,
    pub edge: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTable {
    pub n: usize,
    pub labelled: Vec<LabelledRow>,
    pub rooted: Vec<RootedRow>,
    pub marked: Vec<MarkedRow>,
}

impl CensusTable {
    pub fn from_data(d: &CensusData) -> bipmap_core::Result<Self> {
        Ok(CensusTable {
            n: d.n,
            labelled: d.labelled.iter().map(|((g, mu), &count)| LabelledRow { g: *g, mu: parts(mu), count }).collect(),
            rooted: d.rooted()?.into_iter().map(|((g, k, mu), count)| RootedRow { g, k, mu: parts(&mu), count }).collect(),
            marked: d
                .marked
                .iter()
                .map(|((g, mu), m)| MarkedRow { g: *g, mu: parts(mu), vertex: m.vertex, face: m.face, edge: m.edge })
                .collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTerm {
    /// exponent of t (or z)
    pub order: u32,
    /// exponent of x (or u)
    pub cat: u32,
    pub mu: Vec<u32>,
    pub coeff: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDump {
    pub g: u32,
    pub target: String,
    pub chart: String,
    pub trunc: u32,
    pub terms: Vec<SeriesTerm>,
}

impl SeriesDump {
    pub fn new(g: u32, target: &str, chart: &str, s: &Series) -> Self {
        let terms = s.iter().map(|(k, q)| SeriesTerm { order: k.e, cat: k.c, mu: parts(&k.mu), coeff: Rat(q.clone()) }).collect();
        SeriesDump { g, target: target.into(), chart: chart.into(), trunc: s.trunc(), terms }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// One basis term. `c` and `sign` are absent for unrooted forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedTerm {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub a: u32,
    pub b: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
    pub coeff_num: String,
    pub coeff_den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub g: u32,
    pub target: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log_eta: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log_zeta: Option<Rat>,
    pub terms: Vec<ClosedTerm>,
}

fn greek_of(t: &ClosedTerm) -> GreekPart {
    GreekPart { alpha: Partition::new(t.alpha.clone()), beta: Partition::new(t.beta.clone()), a: t.a, b: t.b }
}

fn coeff_of(t: &ClosedTerm) -> Result<Q, String> {
    parse_rat(&format!("{}/{}", t.coeff_num, t.coeff_den))
}

fn term(greek: &GreekPart, c: Option<u32>, sign: Option<Sign>, q: &Q) -> ClosedTerm {
    ClosedTerm {
        alpha: parts(&greek.alpha),
        beta: parts(&greek.beta),
        a: greek.a,
        b: greek.b,
        c,
        sign,
        coeff_num: q.numer().to_string(),
        coeff_den: q.denom().to_string(),
    }
}

impl ClosedForm {
    pub fn from_f(f: &ClosedFormF) -> Self {
        let terms = f
            .terms
            .iter()
            .map(|t| term(&t.greek, Some(t.c), Some(if t.sign == Pole::Plus { Sign::Plus } else { Sign::Minus }), &t.coeff))
            .collect();
        ClosedForm { g: f.g, target: "F".into(), log_eta: None, log_zeta: None, terms }
    }

    pub fn from_l(l: &ClosedFormL) -> Self {
        let terms = l.terms.iter().map(|t| term(&t.greek, None, None, &t.coeff)).collect();
        ClosedForm { g: l.g, target: "L".into(), log_eta: Some(Rat(l.log_eta.clone())), log_zeta: Some(Rat(l.log_zeta.clone())), terms }
    }

    pub fn to_f(&self) -> Result<ClosedFormF, String> {
        let mut terms = Vec::new();
        for t in &self.terms {
            let (Some(c), Some(sign)) = (t.c, t.sign) else {
                return Err("rooted term without pole data".into());
            };
            let sign = if sign == Sign::Plus { Pole::Plus } else { Pole::Minus };
            terms.push(FTerm { greek: greek_of(t), c, sign, coeff: coeff_of(t)? });
        }
        Ok(ClosedFormF { g: self.g, terms })
    }

    pub fn to_l(&self) -> Result<ClosedFormL, String> {
        let terms = self.terms.iter().map(|t| Ok(LTerm { greek: greek_of(t), coeff: coeff_of(t)? })).collect::<Result<_, String>>()?;
        let zero = || Rat(Q::zero());
        Ok(ClosedFormL {
            g: self.g,
            terms,
            log_eta: self.log_eta.clone().unwrap_or_else(zero).0,
            log_zeta: self.log_zeta.clone().unwrap_or_else(zero).0,
        })
    }
}

/// Terms of a kernel polynomial in u, z and the p_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelTerm {
    pub u: i32,
    pub z: i32,
    pub mu: Vec<u32>,
    pub coeff: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaylorRow {
    pub pole: Sign,
    pub a: u32,
    pub constant: Rat,
    /// Greek variable name → coefficient
    pub greek: BTreeMap<String, Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelDump {
    #[serde(rename = "K")]
    pub k: u32,
    pub n_degree: i32,
    pub antisymmetric: bool,
    pub palindromic: bool,
    /// 2F₀ + θ in (u; z; p)
    pub two_f0_theta: Vec<KernelTerm>,
    /// N(u)
    pub n: Vec<KernelTerm>,
    pub taylor: Vec<TaylorRow>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A documented disagreement with a tabulated reference; not a failure
    /// of the computation.
    Deviation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub criterion: u8,
    pub status: Status,
    pub detail: String,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn rationals_round_trip(n in any::<i64>(), d in 1i64..1_000_000) {
            let q = Rat(Q::new(n.into(), d.into()));
            let s = serde_json::to_string(&q).unwrap();
            prop_assert_eq!(serde_json::from_str::<Rat>(&s).unwrap(), q);
        }

        #[test]
        fn closed_forms_round_trip(terms in prop::collection::vec((prop::collection::vec(1u32..4, 0..3), 0u32..4, 1u32..8, any::<bool>(), -50i64..50, 1i64..50), 0..6)) {
            let terms = terms
                .into_iter()
                .map(|(alpha, a, c, plus, n, d)| FTerm {
                    greek: GreekPart { alpha: Partition::new(alpha), beta: Partition::empty(), a, b: 0 },
                    c,
                    sign: if plus { Pole::Plus } else { Pole::Minus },
                    coeff: Q::new(n.into(), d.into()),
                })
                .collect();
            let f = ClosedFormF { g: 2, terms };
            let dto = ClosedForm::from_f(&f);
            let back: ClosedForm = serde_json::from_str(&serde_json::to_string(&dto).unwrap()).unwrap();
            prop_assert_eq!(&back, &dto);
            prop_assert_eq!(back.to_f().unwrap(), f);
        }
    }

    #[test]
    fn bad_rationals() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert_eq!(parse_rat("-6/4").unwrap(), Q::new((-3).into(), 2.into()));
    }
}
