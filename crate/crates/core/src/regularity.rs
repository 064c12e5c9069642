//! Regularity bounds that gate the superregular code paths.
//!
//! A bound `k` controls a single cover; along a chain of length `m` each
//! step can move the translation by a coroot, so `k + (m − 1)j` suffices for
//! the whole chain, where `j = max ⟨α∨, β⟩` over simple β and positive α.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::affine::AffineElement;
use crate::cartan::{CorootVector, RootSystem};
use crate::error::{invalid, Error, Result};
use crate::weyl::WeylGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// `k = 2|W₀| + 3`, the smallest integer strictly above `2|W₀| + 2`.
    Conservative,
    /// `k = 2ℓ(w₀)`, or `3ℓ(w₀)` in type G₂.
    #[default]
    Milicevic,
    /// `k = 3`, simply-laced types only.
    Welch,
}

impl Profile {
    pub fn as_str(self) -> &'static str {
        match self {
            Profile::Conservative => "conservative",
            Profile::Milicevic => "milicevic",
            Profile::Welch => "welch",
        }
    }
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "conservative" => Ok(Profile::Conservative),
            "milicevic" => Ok(Profile::Milicevic),
            "welch" => Ok(Profile::Welch),
            other => Err(invalid!("unknown regularity profile {other:?}")),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether a certificate for a gap `m` uses the single-cover bound `k` or
/// the chain bound `k + (m − 1)j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    PerCover,
    #[default]
    PerChain,
}

impl FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "per-cover" | "cover" => Ok(Scope::PerCover),
            "per-chain" | "chain" => Ok(Scope::PerChain),
            other => Err(invalid!("unknown regularity scope {other:?}")),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::PerCover => "per-cover",
            Scope::PerChain => "per-chain",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityConfig {
    pub k: i32,
    pub j: i32,
    pub profile: Profile,
    pub scope: Scope,
}

impl RegularityConfig {
    pub fn new(weyl: &WeylGroup, profile: Profile) -> Result<Self> {
        let rs = weyl.root_system();
        Ok(RegularityConfig {
            k: base_bound(weyl, profile)?,
            j: rs.max_coroot_simple_pairing(),
            profile,
            scope: Scope::PerChain,
        })
    }

    pub fn with_scope(mut self, scope: Scope) -> Self {
        self.scope = scope;
        self
    }

    /// `k + (m − 1)j`; `m = 0` is treated as `m = 1`.
    pub fn chain_bound(&self, m: u32) -> i32 {
        self.k + (m.max(1) as i32 - 1) * self.j
    }

    /// `k + |W₀|j`, enough for every chain the main theorem inspects.
    pub fn theorem_bound(&self, group_order: usize) -> i32 {
        self.k + group_order as i32 * self.j
    }

    /// The bound a certificate for gap `m` must meet under the active scope.
    pub fn required(&self, m: u32) -> i32 {
        match self.scope {
            Scope::PerCover => self.k,
            Scope::PerChain => self.chain_bound(m),
        }
    }
}

pub fn base_bound(weyl: &WeylGroup, profile: Profile) -> Result<i32> {
    let rs = weyl.root_system();
    let l0 = weyl.length(weyl.longest()) as i32;
    match profile {
        Profile::Conservative => Ok(2 * weyl.order() as i32 + 3),
        Profile::Milicevic if is_g2(rs) => Ok(3 * l0),
        Profile::Milicevic => Ok(2 * l0),
        Profile::Welch if rs.is_simply_laced() => Ok(3),
        Profile::Welch => Err(Error::UnsupportedProfile(format!(
            "the welch bound applies to simply-laced types only, {} is not",
            rs.label()
        ))),
    }
}

fn is_g2(rs: &RootSystem) -> bool {
    let c = rs.cartan_matrix();
    rs.rank() == 2 && c[0][1] * c[1][0] == 3
}

/// `k + (m − 1)j` after checking that `cfg.j` belongs to `rs`.
pub fn chain_bound(rs: &RootSystem, cfg: &RegularityConfig, m: u32) -> Result<i32> {
    if m == 0 {
        return Err(invalid!("chain bound needs a length gap m >= 1"));
    }
    let j = rs.max_coroot_simple_pairing();
    if j != cfg.j {
        return Err(invalid!("configuration has j = {}, but {} has j = {j}", cfg.j, rs.label()));
    }
    Ok(cfg.chain_bound(m))
}

/// `min |⟨λ, α⟩|` over positive roots α. For antidominant λ this is the
/// minimum over simple roots; in general it is that of the antidominant
/// representative of λ.
pub fn min_root_pairing(rs: &RootSystem, lambda: &CorootVector) -> i32 {
    (0..rs.num_positive_roots()).map(|a| rs.pair_root(lambda, a).abs()).min().unwrap_or(0)
}

/// Whether the translation part of `y` meets the bound for gap `m`.
pub fn is_superregular(rs: &RootSystem, y: &AffineElement, cfg: &RegularityConfig, m: u32) -> bool {
    min_root_pairing(rs, &y.lambda) >= cfg.required(m)
}

/// A refusal explaining which bound `y` misses, or `Ok` when certified.
pub fn certify(rs: &RootSystem, y: &AffineElement, cfg: &RegularityConfig, m: u32) -> Result<()> {
    let have = min_root_pairing(rs, &y.lambda);
    let need = cfg.required(m);
    if have >= need {
        Ok(())
    } else {
        Err(Error::RegularityViolation(format!(
            "translation {} has min |<λ,α>| = {have}, below the {} {} bound {need} (k = {}, j = {}, m = {m})",
            y.lambda, cfg.profile, cfg.scope, cfg.k, cfg.j
        )))
    }
}
