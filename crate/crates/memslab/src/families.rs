//! Named two-qubit states and parametric families, with their analytic
//! closed forms and validity ranges.
//!
//! The building blocks:
//! * `|psi+> = (|01> + |10>)/sqrt(2)`, the maximally entangled reference;
//! * `rho_M`: the rank-2 MEMS obtained by tracing qubit 1 out of the
//!   three-qubit W state `(|100> + |010> + |001>)/sqrt(3)`;
//! * `rho_G`: the separable mixture obtained by tracing qubit 2 out of
//!   `(|100> + |011>)/sqrt(2)`.
//!
//! The parametric families are convex mixtures of those blocks:
//! * Werner: `(1-p) I/4 + p |psi+><psi+|` (rank 4)
//! * MJWK:   the Munro–James–White–Kwiat family (rank 3, then 2 past p = 2/3)
//! * rho1:   `(1-p) rho_M + p |psi+><psi+|` (rank 2)
//! * rho2:   `(1-p) rho_G + p rho_M` (rank 3)
//! * rho3:   `(1-p) I/4 + p rho_M` (rank 4)
//!
//! `closed_forms` exposes the analytic S_L, C, F (and B for Werner) curves.
//! The concurrence form is the *signed* expression: it equals the spectrum
//! bound `C*` wherever the family is a MEMS and goes negative where the
//! state is separable; the physical concurrence is its positive part.

use num_complex::Complex64;
use thiserror::Error;

use crate::qcore::{
    partial_trace, ComplexMatrix, DensityMatrix, PureState3Q, TracedQubit,
};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("parameter p={p} outside [{lo}, {hi}] for family {family}")]
    ParamOutOfRange {
        family: &'static str,
        p: f64,
        lo: f64,
        hi: f64,
    },
    #[error("family {family} has no closed forms")]
    NoClosedForms { family: &'static str },
    #[error("unknown family token '{token}'")]
    UnknownToken { token: String },
}

/// The nine named states/families. Constants (everything except the five
/// parametric families) accept and ignore `p` so one constructor signature
/// serves all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Werner,
    Mjwk,
    Rho1,
    Rho2,
    Rho3,
    RhoM,
    RhoG,
    MaxMixed,
    PsiPlus,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::Werner,
        FamilyId::Mjwk,
        FamilyId::Rho1,
        FamilyId::Rho2,
        FamilyId::Rho3,
        FamilyId::RhoM,
        FamilyId::RhoG,
        FamilyId::MaxMixed,
        FamilyId::PsiPlus,
    ];

    /// Stable CLI token.
    pub fn token(&self) -> &'static str {
        match self {
            FamilyId::Werner => "werner",
            FamilyId::Mjwk => "mjwk",
            FamilyId::Rho1 => "rho1",
            FamilyId::Rho2 => "rho2",
            FamilyId::Rho3 => "rho3",
            FamilyId::RhoM => "rhom",
            FamilyId::RhoG => "rhog",
            FamilyId::MaxMixed => "maxmixed",
            FamilyId::PsiPlus => "psiplus",
        }
    }

    pub fn parse(token: &str) -> Result<FamilyId, FamilyError> {
        Self::ALL
            .into_iter()
            .find(|f| f.token() == token)
            .ok_or_else(|| FamilyError::UnknownToken {
                token: token.to_string(),
            })
    }
}

/// Werner entanglement onset.
pub const WERNER_ENTANGLED_ONSET: f64 = 1.0 / 3.0;
/// Werner CHSH-violation onset, `1/sqrt(2)`.
pub const WERNER_BELL_ONSET: f64 = std::f64::consts::FRAC_1_SQRT_2;
/// rho2 MEMS onset.
pub const RHO2_MEMS_ONSET: f64 = 3.0 / 5.0;
/// MJWK branch point.
pub const MJWK_BREAK: f64 = 2.0 / 3.0;

/// rho3 entanglement onset `3/(1 + 2 sqrt(5))`, stored in the rationalized
/// form `3 (2 sqrt(5) - 1) / 19`.
pub fn rho3_entangled_onset() -> f64 {
    3.0 * (2.0 * 5.0_f64.sqrt() - 1.0) / 19.0
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn psi_plus_vec() -> [Complex64; 4] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [re(0.0), re(s), re(s), re(0.0)]
}

fn psi_plus_state() -> DensityMatrix {
    DensityMatrix::new(ComplexMatrix::projector(&psi_plus_vec())).expect("pure projector")
}

fn max_mixed_state() -> DensityMatrix {
    DensityMatrix::new(ComplexMatrix::identity(4).scale(0.25)).expect("maximally mixed")
}

/// `rho_M = Tr_1 |W><W|`, built from the actual partial trace rather than
/// its known closed form.
fn rho_m_state() -> DensityMatrix {
    let mut amps = [re(0.0); 8];
    amps[0b100] = re(1.0);
    amps[0b010] = re(1.0);
    amps[0b001] = re(1.0);
    let w = PureState3Q::normalized(amps).expect("W state");
    partial_trace(&w, TracedQubit::Q1)
}

/// `rho_G = Tr_2 |psi><psi|` for `|psi> = (|100> + |011>)/sqrt(2)`.
fn rho_g_state() -> DensityMatrix {
    let mut amps = [re(0.0); 8];
    amps[0b100] = re(1.0);
    amps[0b011] = re(1.0);
    let psi = PureState3Q::normalized(amps).expect("GHZ-family state");
    partial_trace(&psi, TracedQubit::Q2)
}

fn mjwk_gamma(p: f64) -> f64 {
    // the rank-2 branch applies at the break point itself
    if p < MJWK_BREAK {
        1.0 / 3.0
    } else {
        p / 2.0
    }
}

fn mjwk_state(p: f64) -> DensityMatrix {
    let g = mjwk_gamma(p);
    let mut m = ComplexMatrix::diag(&[g, 1.0 - 2.0 * g, 0.0, g]);
    m[(0, 3)] = re(p / 2.0);
    m[(3, 0)] = re(p / 2.0);
    DensityMatrix::new(m).expect("MJWK matrix is a state on [0,1]")
}

/// Constructs the state of a family at parameter `p`.
///
/// `p` must lie in the family's `parameter_range`; constant families accept
/// any finite `p` and ignore it.
pub fn make_state(id: FamilyId, p: f64) -> Result<DensityMatrix, FamilyError> {
    let spec = family_spec(id);
    let [lo, hi] = spec.parameter_range;
    if spec.parametric && !(p >= lo && p <= hi) {
        return Err(FamilyError::ParamOutOfRange {
            family: id.token(),
            p,
            lo,
            hi,
        });
    }
    Ok(match id {
        FamilyId::Werner => DensityMatrix::mix(&max_mixed_state(), &psi_plus_state(), p),
        FamilyId::Mjwk => mjwk_state(p),
        FamilyId::Rho1 => DensityMatrix::mix(&rho_m_state(), &psi_plus_state(), p),
        FamilyId::Rho2 => DensityMatrix::mix(&rho_g_state(), &rho_m_state(), p),
        FamilyId::Rho3 => DensityMatrix::mix(&max_mixed_state(), &rho_m_state(), p),
        FamilyId::RhoM => rho_m_state(),
        FamilyId::RhoG => rho_g_state(),
        FamilyId::MaxMixed => max_mixed_state(),
        FamilyId::PsiPlus => psi_plus_state(),
    })
}

/// Analytic curves of a parametric family.
///
/// `c` is the signed concurrence expression (equal to the spectrum bound
/// `C*` on the family's MEMS range); clamp at zero for the physical
/// concurrence.
#[derive(Debug, Clone, Copy)]
pub struct ClosedForms {
    id: FamilyId,
}

impl ClosedForms {
    pub fn s_l(&self, p: f64) -> f64 {
        match self.id {
            FamilyId::Werner => 1.0 - p * p,
            FamilyId::Mjwk => {
                if p < MJWK_BREAK {
                    (8.0 - 6.0 * p * p) / 9.0
                } else {
                    (8.0 * p - 8.0 * p * p) / 3.0
                }
            }
            FamilyId::Rho1 => 8.0 / 27.0 * (1.0 - p) * (p + 2.0),
            FamilyId::Rho2 => 2.0 / 3.0 * (1.0 + 2.0 * p / 3.0 - 7.0 * p * p / 9.0),
            FamilyId::Rho3 => 1.0 - 11.0 * p * p / 27.0,
            _ => unreachable!("constructed only for parametric families"),
        }
    }

    pub fn c(&self, p: f64) -> f64 {
        match self.id {
            FamilyId::Werner => (3.0 * p - 1.0) / 2.0,
            FamilyId::Mjwk => p,
            FamilyId::Rho1 => (2.0 + p) / 3.0,
            FamilyId::Rho2 => 2.0 * p / 3.0,
            FamilyId::Rho3 => 2.0 * p / 3.0 - ((1.0 - p) * (3.0 + p) / 12.0).sqrt(),
            _ => unreachable!("constructed only for parametric families"),
        }
    }

    pub fn f(&self, p: f64) -> f64 {
        match self.id {
            FamilyId::Werner => (p + 1.0) / 2.0,
            FamilyId::Mjwk => {
                if p < MJWK_BREAK {
                    (5.0 + 3.0 * p) / 9.0
                } else {
                    (2.0 * p + 1.0) / 3.0
                }
            }
            FamilyId::Rho1 => (4.0 * p + 14.0) / 18.0,
            FamilyId::Rho2 => (2.0 * p + 12.0) / 18.0,
            FamilyId::Rho3 => (9.0 + 5.0 * p) / 18.0,
            _ => unreachable!("constructed only for parametric families"),
        }
    }

    /// Bell curve; only Werner has one in closed form here.
    pub fn b(&self, p: f64) -> Option<f64> {
        match self.id {
            FamilyId::Werner => Some(2.0 * std::f64::consts::SQRT_2 * p),
            _ => None,
        }
    }
}

pub fn closed_forms(id: FamilyId) -> Result<ClosedForms, FamilyError> {
    match id {
        FamilyId::Werner | FamilyId::Mjwk | FamilyId::Rho1 | FamilyId::Rho2 | FamilyId::Rho3 => {
            Ok(ClosedForms { id })
        }
        _ => Err(FamilyError::NoClosedForms {
            family: id.token(),
        }),
    }
}

/// Half-open or closed parameter interval `(lo, hi]` / `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PRange {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
}

impl PRange {
    pub const fn open(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_closed: false,
        }
    }

    pub const fn closed(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_closed: true,
        }
    }

    pub fn contains(&self, p: f64) -> bool {
        let lower = if self.lo_closed {
            p >= self.lo
        } else {
            p > self.lo
        };
        lower && p <= self.hi
    }
}

/// Parameter ranges and rank profile of a family.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub id: FamilyId,
    /// True for the five p-dependent families.
    pub parametric: bool,
    pub parameter_range: [f64; 2],
    /// Default sweep window (the MEMS range for rho2, full range otherwise).
    pub default_sweep: [f64; 2],
    /// Where the state is entangled; `None` for never.
    pub entangled_range: Option<PRange>,
    /// Where the state is a MEMS; `None` for never.
    pub mems_range: Option<PRange>,
    /// Human-readable rank-vs-p description.
    pub rank_profile: &'static str,
}

impl FamilySpec {
    /// Rank of the constructed matrix at parameter `p` (exact-arithmetic
    /// intent; meaningful away from the degenerate endpoints).
    pub fn expected_rank(&self, p: f64) -> u8 {
        match self.id {
            FamilyId::Werner => {
                if p < 1.0 {
                    4
                } else {
                    1
                }
            }
            FamilyId::Mjwk => {
                if p < MJWK_BREAK {
                    3
                } else if p < 1.0 {
                    2
                } else {
                    1
                }
            }
            FamilyId::Rho1 => {
                if p < 1.0 {
                    2
                } else {
                    1
                }
            }
            FamilyId::Rho2 => {
                if p == 0.0 || p == 1.0 {
                    2
                } else {
                    3
                }
            }
            FamilyId::Rho3 => {
                if p < 1.0 {
                    4
                } else {
                    2
                }
            }
            FamilyId::RhoM | FamilyId::RhoG => 2,
            FamilyId::MaxMixed => 4,
            FamilyId::PsiPlus => 1,
        }
    }
}

pub fn family_spec(id: FamilyId) -> FamilySpec {
    let full = [0.0, 1.0];
    match id {
        FamilyId::Werner => FamilySpec {
            id,
            parametric: true,
            parameter_range: full,
            default_sweep: full,
            entangled_range: Some(PRange::open(WERNER_ENTANGLED_ONSET, 1.0)),
            mems_range: Some(PRange::open(WERNER_ENTANGLED_ONSET, 1.0)),
            rank_profile: "rank 4 for p < 1, rank 1 at p = 1",
        },
        FamilyId::Mjwk => FamilySpec {
            id,
            parametric: true,
            parameter_range: full,
            default_sweep: full,
            entangled_range: Some(PRange::open(0.0, 1.0)),
            mems_range: Some(PRange::open(0.0, 1.0)),
            rank_profile: "rank 3 for p < 2/3, rank 2 for 2/3 <= p < 1, rank 1 at p = 1",
        },
        FamilyId::Rho1 => FamilySpec {
            id,
            parametric: true,
            parameter_range: full,
            default_sweep: full,
            entangled_range: Some(PRange::closed(0.0, 1.0)),
            mems_range: Some(PRange::closed(0.0, 1.0)),
            rank_profile: "rank 2 for p < 1, rank 1 at p = 1",
        },
        FamilyId::Rho2 => FamilySpec {
            id,
            parametric: true,
            parameter_range: full,
            default_sweep: [RHO2_MEMS_ONSET, 1.0],
            entangled_range: Some(PRange::open(0.0, 1.0)),
            mems_range: Some(PRange::closed(RHO2_MEMS_ONSET, 1.0)),
            rank_profile: "rank 3 for 0 < p < 1, rank 2 at the endpoints",
        },
        FamilyId::Rho3 => FamilySpec {
            id,
            parametric: true,
            parameter_range: full,
            default_sweep: full,
            entangled_range: Some(PRange::open(rho3_entangled_onset(), 1.0)),
            mems_range: Some(PRange::open(rho3_entangled_onset(), 1.0)),
            rank_profile: "rank 4 for p < 1, rank 2 at p = 1",
        },
        FamilyId::RhoM => FamilySpec {
            id,
            parametric: false,
            parameter_range: full,
            default_sweep: full,
            entangled_range: Some(PRange::closed(0.0, 1.0)),
            mems_range: Some(PRange::closed(0.0, 1.0)),
            rank_profile: "rank 2 (constant state)",
        },
        FamilyId::RhoG => FamilySpec {
            id,
            parametric: false,
            parameter_range: full,
            default_sweep: full,
            entangled_range: None,
            mems_range: None,
            rank_profile: "rank 2 (constant state)",
        },
        FamilyId::MaxMixed => FamilySpec {
            id,
            parametric: false,
            parameter_range: full,
            default_sweep: full,
            entangled_range: None,
            mems_range: None,
            rank_profile: "rank 4 (constant state)",
        },
        FamilyId::PsiPlus => FamilySpec {
            id,
            parametric: false,
            parameter_range: full,
            default_sweep: full,
            entangled_range: Some(PRange::closed(0.0, 1.0)),
            mems_range: Some(PRange::closed(0.0, 1.0)),
            rank_profile: "rank 1 (constant state)",
        },
    }
}
