//! JSON interchange. Scalars are arrays of exact rational strings in the power
//! basis; maps are sparse `[row, col, scalar]` triplet lists over the global
//! basis; elements are `[index, scalar]` lists.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{BraidingMode, Category, GradedMap, GradedSpace};
use crate::hopf::{BraidedHopfAlgebra, ModularPair};
use crate::scalar::Cyclo;
use crate::sparse::{collect_terms, SparseMatrix, SparseVec};
use crate::transmute::QuasitriangularElement;
use crate::triple::{CoefficientModule, ModuleCoalgebra};

pub type ScalarJson = Vec<String>;
pub type MapJson = Vec<(usize, usize, ScalarJson)>;
pub type ElementJson = Vec<(usize, ScalarJson)>;

/// `{"n", "dims"}`; spaces whose basis is not degree-sorted (tensor products)
/// are written with an explicit per-vector `"degrees"` list instead.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "is_anyonic")]
    pub mode: Option<BraidingMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
}

fn is_anyonic(m: &Option<BraidingMode>) -> bool {
    matches!(m, None | Some(BraidingMode::Anyonic))
}

impl SpaceJson {
    pub fn from_space(v: &GradedSpace) -> Self {
        let sorted = v.is_degree_sorted();
        SpaceJson {
            n: v.n(),
            mode: match v.category().mode() {
                BraidingMode::Anyonic => None,
                m => Some(m),
            },
            dims: sorted.then(|| v.dims()),
            degrees: (!sorted).then(|| v.degrees().to_vec()),
        }
    }

    pub fn to_space(&self) -> Result<GradedSpace> {
        if self.n == 0 {
            return Err(Error::Parse("\"n\" must be at least 1".into()));
        }
        let cat = Category::new(self.n, self.mode.unwrap_or(BraidingMode::Anyonic));
        match (&self.dims, &self.degrees) {
            (Some(d), None) => GradedSpace::new(&cat, d).map_err(|e| Error::Parse(format!("\"dims\": {e}"))),
            (None, Some(d)) => {
                if let Some(bad) = d.iter().find(|&&x| x >= self.n) {
                    return Err(Error::Parse(format!("\"degrees\": degree {bad} outside [0, {})", self.n)));
                }
                Ok(GradedSpace::from_degrees(&cat, d.clone()))
            }
            _ => Err(Error::Parse("exactly one of \"dims\" and \"degrees\" is required".into())),
        }
    }
}

pub fn scalar_to_json(x: &Cyclo) -> ScalarJson {
    x.to_strings()
}

pub fn element_to_json(v: &SparseVec) -> ElementJson {
    v.iter().map(|(i, x)| (*i, scalar_to_json(x))).collect()
}

pub fn element_from_json(e: &ElementJson, space: &GradedSpace, ctx: &str) -> Result<SparseVec> {
    let f = space.field();
    let mut terms = Vec::with_capacity(e.len());
    for (i, s) in e {
        if *i >= space.dim() {
            return Err(Error::Parse(format!("{ctx}: index {i} outside a space of dimension {}", space.dim())));
        }
        let x = Cyclo::from_strings(f, s).map_err(|err| Error::Parse(format!("{ctx}[{i}]: {err}")))?;
        terms.push((*i, x));
    }
    Ok(collect_terms(terms))
}

pub fn map_to_json(m: &GradedMap) -> MapJson {
    m.matrix()
        .triplets()
        .into_iter()
        .map(|(r, c, x)| (r, c, scalar_to_json(&x)))
        .collect()
}

pub fn map_from_json(m: &MapJson, source: &GradedSpace, target: &GradedSpace, ctx: &str) -> Result<GradedMap> {
    let f = source.field();
    let mut triplets = Vec::with_capacity(m.len());
    for (k, (r, c, s)) in m.iter().enumerate() {
        let x = Cyclo::from_strings(f, s).map_err(|e| Error::Parse(format!("{ctx}, entry {k}: {e}")))?;
        triplets.push((*r, *c, x));
    }
    let matrix = SparseMatrix::from_triplets(target.dim(), source.dim(), triplets)
        .map_err(|e| Error::Parse(format!("{ctx}: {e}")))?;
    GradedMap::new(source.clone(), target.clone(), matrix).map_err(|e| Error::Parse(format!("{ctx}: {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub delta: MapJson,
    pub sigma: MapJson,
}

impl PairJson {
    pub fn from_pair(p: &ModularPair) -> Self {
        PairJson {
            delta: map_to_json(&p.delta),
            sigma: map_to_json(&p.sigma),
        }
    }

    pub fn to_pair(&self, h: &BraidedHopfAlgebra) -> Result<ModularPair> {
        let i = h.unit_object();
        let delta = map_from_json(&self.delta, h.space(), &i, "\"delta\"")?;
        let sigma = map_from_json(&self.sigma, &i, h.space(), "\"sigma\"")?;
        ModularPair::new(h, delta, sigma)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfJson {
    #[serde(flatten)]
    pub space: SpaceJson,
    pub m: MapJson,
    pub eta: MapJson,
    pub delta_comul: MapJson,
    pub epsilon: MapJson,
    pub antipode: MapJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modular_pair: Option<PairJson>,
}

impl HopfJson {
    pub fn from_hopf(h: &BraidedHopfAlgebra, pair: Option<&ModularPair>) -> Self {
        HopfJson {
            space: SpaceJson::from_space(h.space()),
            m: map_to_json(h.mul()),
            eta: map_to_json(h.unit()),
            delta_comul: map_to_json(h.comul()),
            epsilon: map_to_json(h.counit()),
            antipode: map_to_json(h.antipode()),
            modular_pair: pair.map(PairJson::from_pair),
        }
    }

    /// The algebra and its modular pair (`(ε, η)` when absent).
    pub fn to_hopf(&self) -> Result<(BraidedHopfAlgebra, ModularPair)> {
        let h = self.space.to_space()?;
        let i = GradedSpace::unit(h.category());
        let hh = h.tensor(&h)?;
        let hopf = BraidedHopfAlgebra::new(
            h.clone(),
            map_from_json(&self.m, &hh, &h, "\"m\"")?,
            map_from_json(&self.eta, &i, &h, "\"eta\"")?,
            map_from_json(&self.delta_comul, &h, &hh, "\"delta_comul\"")?,
            map_from_json(&self.epsilon, &h, &i, "\"epsilon\"")?,
            map_from_json(&self.antipode, &h, &h, "\"antipode\"")?,
        )?;
        let pair = match &self.modular_pair {
            Some(p) => p.to_pair(&hopf).map_err(|e| Error::Parse(format!("\"modular_pair\": {e}")))?,
            None => ModularPair::trivial(&hopf),
        };
        Ok((hopf, pair))
    }
}

/// `{"n", "dims", "r": [[index, scalar], …]}`, `r` over the basis of `H⊗H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RJson {
    #[serde(flatten)]
    pub space: SpaceJson,
    pub r: ElementJson,
}

impl RJson {
    pub fn from_r(h: &GradedSpace, r: &QuasitriangularElement) -> Self {
        RJson {
            space: SpaceJson::from_space(h),
            r: element_to_json(&r.r),
        }
    }

    pub fn to_r(&self, h: &GradedSpace) -> Result<QuasitriangularElement> {
        let declared = self.space.to_space()?;
        if &declared != h {
            return Err(Error::Parse("R file declares a different space than the Hopf algebra".into()));
        }
        Ok(QuasitriangularElement {
            r: element_from_json(&self.r, &h.tensor(h)?, "\"r\"")?,
        })
    }
}

/// Module coalgebra file: `{"space", "comul", "counit", "action"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalgebraJson {
    pub space: SpaceJson,
    pub comul: MapJson,
    pub counit: MapJson,
    pub action: MapJson,
}

impl CoalgebraJson {
    pub fn from_coalgebra(c: &ModuleCoalgebra) -> Self {
        CoalgebraJson {
            space: SpaceJson::from_space(&c.space),
            comul: map_to_json(&c.comul),
            counit: map_to_json(&c.counit),
            action: map_to_json(&c.action),
        }
    }

    pub fn to_coalgebra(&self, h: &BraidedHopfAlgebra) -> Result<ModuleCoalgebra> {
        let c = self.space.to_space()?;
        let i = h.unit_object();
        Ok(ModuleCoalgebra {
            comul: map_from_json(&self.comul, &c, &c.tensor(&c)?, "\"comul\"")?,
            counit: map_from_json(&self.counit, &c, &i, "\"counit\"")?,
            action: map_from_json(&self.action, &h.space().tensor(&c)?, &c, "\"action\"")?,
            space: c,
        })
    }
}

/// Coefficient module file: `{"space", "action", "coaction", "right_action"?}`;
/// the right action defaults to `m ◁ h = S(h) ▷ m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub space: SpaceJson,
    pub action: MapJson,
    pub coaction: MapJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<MapJson>,
}

impl ModuleJson {
    pub fn from_module(m: &CoefficientModule) -> Self {
        ModuleJson {
            space: SpaceJson::from_space(&m.space),
            action: map_to_json(&m.action),
            coaction: map_to_json(&m.coaction),
            right_action: Some(map_to_json(&m.right_action)),
        }
    }

    pub fn to_module(&self, h: &BraidedHopfAlgebra) -> Result<CoefficientModule> {
        let m = self.space.to_space()?;
        let action = map_from_json(&self.action, &h.space().tensor(&m)?, &m, "\"action\"")?;
        let coaction = map_from_json(&self.coaction, &m, &h.space().tensor(&m)?, "\"coaction\"")?;
        let right_action = match &self.right_action {
            Some(r) => map_from_json(r, &m.tensor(h.space())?, &m, "\"right_action\"")?,
            None => CoefficientModule::default_right_action(h, &m, &action)?,
        };
        Ok(CoefficientModule {
            space: m,
            action,
            coaction,
            right_action,
        })
    }
}

/// Parses JSON, reporting the line and column of syntax or schema errors.
pub fn parse<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

pub fn to_pretty<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}
