//! Compression of nice functions towards a full power set `2^{a_0}`.
//!
//! `E_k(f) = f ∘ ε_k` with `ε_k(a) = a ∪ {k}`; on an extendable nice
//! function it strictly shrinks the support while never growing the support
//! of the Möbius transform. Iterating until no coordinate is extendable
//! ends at the indicator of some `2^{a_0}`, which certifies
//! `|supp(M(f))| >= 2^{m - |a_0|}`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::powerset::{SubsetFn, LOW_HALF};
use crate::subset::Subset;

pub fn epsilon_k(a: Subset, k: usize) -> Subset {
    a.insert(k)
}

fn check_element(f: &SubsetFn, k: usize) -> Result<()> {
    let m = f.ground_set();
    if (1..=m).contains(&k) {
        Ok(())
    } else {
        Err(Error::ElementOutOfRange { element: k, m })
    }
}

/// `E_k(f)`: the function `a ↦ f(a ∪ {k})`.
pub fn compress_op(f: &SubsetFn, k: usize) -> Result<SubsetFn> {
    check_element(f, k)?;
    let i = k - 1;
    let mut words = f.words().to_vec();
    if i < 6 {
        let shift = 1 << i;
        for w in words.iter_mut() {
            let hi = *w & !LOW_HALF[i];
            *w = hi | hi >> shift;
        }
    } else {
        let stride = 1 << (i - 6);
        for j in 0..words.len() {
            words[j] = words[j | stride];
        }
    }
    SubsetFn::from_words(f.ground_set(), words)
}

/// `Ê_k(f)`: the linear extension of `δ_a ↦ δ_{a \ {k}}`.
pub fn dual_compress_op(f: &SubsetFn, k: usize) -> Result<SubsetFn> {
    check_element(f, k)?;
    let i = k - 1;
    let mut words = f.words().to_vec();
    if i < 6 {
        let shift = 1 << i;
        for w in words.iter_mut() {
            *w = (*w & LOW_HALF[i]) ^ ((*w & !LOW_HALF[i]) >> shift);
        }
    } else {
        let stride = 1 << (i - 6);
        for j in 0..words.len() {
            if j & stride == 0 {
                words[j] ^= words[j | stride];
            } else {
                words[j] = 0;
            }
        }
    }
    SubsetFn::from_words(f.ground_set(), words)
}

/// `f({k}) = 1` and `M(f)·x_k ≠ 0`.
pub fn is_extendable(f: &SubsetFn, k: usize) -> Result<bool> {
    f.check_nice()?;
    check_element(f, k)?;
    Ok(extendable_unchecked(&f.mobius(), f, k))
}

fn extendable_unchecked(mobius: &SubsetFn, f: &SubsetFn, k: usize) -> bool {
    f.get(Subset::singleton(k)) && mobius.support_iter().any(|a| a.contains(k))
}

fn extendable_coordinates(f: &SubsetFn) -> Vec<usize> {
    let g = f.mobius();
    (1..=f.ground_set()).filter(|&k| extendable_unchecked(&g, f, k)).collect()
}

/// How the next coordinate is chosen among the extendable ones.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Policy {
    /// The smallest extendable `k`.
    #[default]
    SmallestK,
    /// The `k` whose compression leaves the smallest support; ties go to the
    /// smaller `k`.
    SmallestSupport,
}

impl Policy {
    pub const ALL: [Policy; 2] = [Policy::SmallestK, Policy::SmallestSupport];
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Policy::SmallestK => "smallest-k",
            Policy::SmallestSupport => "smallest-support",
        })
    }
}

impl FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smallest-k" => Ok(Policy::SmallestK),
            "smallest-support" | "largest-bound" => Ok(Policy::SmallestSupport),
            other => Err(Error::Input(format!(
                "unknown policy `{other}` (expected smallest-k or smallest-support)"
            ))),
        }
    }
}

/// Witness for `|supp(M(f))| >= 2^{m - |a_0|}` with `a_0 ∈ supp(f)`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CompressionCertificate {
    pub policy: Policy,
    pub m: usize,
    /// Coordinates compressed, in order.
    pub steps: Vec<usize>,
    pub final_face: Subset,
    /// `2^{m - |a_0|}`.
    pub bound: u64,
    /// `|supp(M(f))|` of the original function.
    pub mobius_support_size: u64,
    /// `|supp(f_t)|` along the run, starting with the original function.
    pub support_sizes: Vec<u64>,
    /// `|supp(M(f_t))|` along the run.
    pub mobius_support_sizes: Vec<u64>,
    pub final_is_power_set: bool,
    pub face_of_original: bool,
    pub holds: bool,
}

/// Compresses until non-extendable and reports the resulting certificate.
pub fn compress(f: &SubsetFn, policy: Policy) -> Result<CompressionCertificate> {
    f.check_nice()?;
    let m = f.ground_set();
    let mut current = f.clone();
    let mut steps = Vec::new();
    let mut support_sizes = vec![f.support_size() as u64];
    let mut mobius_support_sizes = vec![f.mobius().support_size() as u64];
    loop {
        let candidates = extendable_coordinates(&current);
        let next = match policy {
            Policy::SmallestK => candidates.first().map(|&k| (k, compress_op(&current, k))),
            Policy::SmallestSupport => candidates
                .iter()
                .map(|&k| (k, compress_op(&current, k)))
                .min_by_key(|(k, g)| (g.as_ref().map_or(usize::MAX, SubsetFn::support_size), *k)),
        };
        let Some((k, g)) = next else { break };
        current = g?;
        steps.push(k);
        support_sizes.push(current.support_size() as u64);
        mobius_support_sizes.push(current.mobius().support_size() as u64);
    }
    let final_face = (1..=m)
        .filter(|&k| current.get(Subset::singleton(k)))
        .fold(Subset::EMPTY, Subset::insert);
    let final_is_power_set = current == SubsetFn::from_support(m, final_face.subsets())?;
    let bound = 1u64 << (m - final_face.len());
    let mobius_support_size = mobius_support_sizes[0];
    let face_of_original = f.get(final_face);
    Ok(CompressionCertificate {
        policy,
        m,
        steps,
        final_face,
        bound,
        mobius_support_size,
        support_sizes,
        mobius_support_sizes,
        final_is_power_set,
        face_of_original,
        holds: final_is_power_set && face_of_original && mobius_support_size >= bound,
    })
}

/// Whether "non-extendable at every k" and "support is some full `2^{a_0}`"
/// agree for `f`.
pub fn check_non_extendable_characterization(f: &SubsetFn) -> Result<bool> {
    f.check_nice()?;
    let non_extendable = extendable_coordinates(f).is_empty();
    let vertices = f
        .support_iter()
        .filter(|a| a.len() == 1)
        .fold(Subset::EMPTY, Subset::union);
    let power_set = f.support_size() == 1 << vertices.len() && f.get(vertices);
    Ok(non_extendable == power_set)
}

/// Every `a_0` reachable by some order of compressions.
pub fn reachable_final_faces(f: &SubsetFn) -> Result<BTreeSet<Subset>> {
    f.check_nice()?;
    let mut seen = HashSet::new();
    let mut out = BTreeSet::new();
    let mut stack = vec![f.clone()];
    while let Some(g) = stack.pop() {
        if !seen.insert(g.clone()) {
            continue;
        }
        let candidates = extendable_coordinates(&g);
        if candidates.is_empty() {
            let face = g
                .support_iter()
                .filter(|a| a.len() == 1)
                .fold(Subset::EMPTY, Subset::union);
            out.insert(face);
        }
        for k in candidates {
            stack.push(compress_op(&g, k)?);
        }
    }
    Ok(out)
}
