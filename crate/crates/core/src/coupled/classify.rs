//! Structure classification: realized wave pattern cross-checked against the
//! Mach-number ranges of each type.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::classical::{WaveFamily, WaveKind};
use crate::error::{Error, Result};
use crate::gas::GasModel;
use crate::math::abs;
use crate::stationary::{critical_machs, CriticalMachNumbers, FlowDirection, KRegime};

use super::{SingularSolution, StructureTag, StructureType};

/// Relative closeness for "Mach number equals a critical value".
const CLASSIFY_TOL: f64 = 1e-8;

fn near(m: f64, target: f64) -> bool {
    target.is_finite() && abs(m - target) <= CLASSIFY_TOL * target.max(1.0)
}

/// The type whose Mach ranges contain `(M-, M+)` for this sign of `k`.
pub fn table_verdict(k: f64, m_minus: f64, m_plus: f64, model: &GasModel) -> Option<StructureTag> {
    use StructureTag::*;
    let sonic = |m: f64| near(m, 1.0);
    match critical_machs(k, model) {
        CriticalMachNumbers::Zero => {
            if sonic(m_minus) && sonic(m_plus) {
                Some(Type7)
            } else if m_minus < 1.0 && m_plus < 1.0 {
                Some(Type1)
            } else if m_minus > 1.0 && m_plus > 1.0 {
                Some(Type2)
            } else {
                None
            }
        }
        CriticalMachNumbers::Positive {
            m1_star,
            m2_star,
            m3_star,
        } => {
            if sonic(m_plus) && near(m_minus, m1_star) {
                Some(Type3)
            } else if sonic(m_plus) && near(m_minus, m2_star) {
                Some(Type4)
            } else if m_minus < m1_star && m_plus < 1.0 {
                Some(Type1)
            } else if m_minus > m2_star && m_plus > 1.0 && m_plus < m3_star {
                Some(Type2)
            } else {
                None
            }
        }
        CriticalMachNumbers::Negative {
            m1_dstar,
            m2_dstar,
            m3_dstar,
        } => {
            if sonic(m_minus) && near(m_plus, m1_dstar) {
                Some(Type5)
            } else if sonic(m_minus) && near(m_plus, m2_dstar) {
                Some(Type6)
            } else if m_minus < 1.0 && m_plus < m1_dstar {
                Some(Type1)
            } else if m_minus > 1.0 && m_minus < m3_dstar && m_plus > m2_dstar {
                Some(Type2)
            } else {
                None
            }
        }
    }
}

/// Types whose wave pattern is compatible with the realized waves.
///
/// `left` is the kind of the nondegenerate wave left of the origin and
/// `right_first` the kind of the nondegenerate 1-wave right of it. A missing
/// wave matches a pattern slot of zero strength, so a type whose pattern
/// carries a rarefaction there also accepts no wave.
pub fn pattern_tags(left: Option<WaveKind>, right_first: Option<WaveKind>) -> Vec<StructureTag> {
    use StructureTag::*;
    let any = |_: Option<WaveKind>| true;
    let none = |w: Option<WaveKind>| w.is_none();
    let fan_or_none = |w: Option<WaveKind>| matches!(w, None | Some(WaveKind::Rarefaction));
    let rules: [(StructureTag, bool); 7] = [
        (Type1, any(left) && none(right_first)),
        (Type2, none(left) && any(right_first)),
        (Type3, any(left) && fan_or_none(right_first)),
        (Type4, none(left) && fan_or_none(right_first)),
        (Type5, fan_or_none(left) && any(right_first)),
        (Type6, fan_or_none(left) && none(right_first)),
        (Type7, fan_or_none(left) && fan_or_none(right_first)),
    ];
    rules.iter().filter(|(_, ok)| *ok).map(|(t, _)| *t).collect()
}

/// Classifies a solution: the Mach-range verdict must be one of the types
/// compatible with the realized wave pattern.
pub fn classify(sol: &SingularSolution, model: &GasModel) -> Result<StructureType> {
    if sol.classical.is_some() {
        return Ok(StructureType {
            tag: StructureTag::SourceOffClassical,
            mirrored: false,
        });
    }
    let mirrored = matches!(sol.stationary, Some(p) if p.direction == FlowDirection::Leftward);
    let frame = sol.rightward_frame();
    let pair = frame.stationary.ok_or_else(|| Error::NoAdmissibleStructure {
        attempts: vec!["solution has neither a stationary wave nor a classical fallback".into()],
    })?;

    let mut left = None;
    for w in frame.left_waves.iter().filter(|w| !w.degenerate) {
        if w.family != WaveFamily::Family1 || left.is_some() {
            return Err(Error::NoAdmissibleStructure {
                attempts: vec![format!("unexpected {:?} {:?} upstream of the source", w.family, w.kind)],
            });
        }
        left = Some(w.kind);
    }
    let right_first = frame
        .right_waves
        .iter()
        .find(|w| w.family == WaveFamily::Family1 && !w.degenerate)
        .map(|w| w.kind);

    let m_minus = model.mach(&pair.left_state);
    let m_plus = model.mach(&pair.right_state);
    let k = pair.coeffs.k();
    let patterns = pattern_tags(left, right_first);
    let Some(&pattern) = patterns.first() else {
        return Err(Error::NoAdmissibleStructure {
            attempts: vec![format!(
                "wave pattern (left {left:?}, right 1-wave {right_first:?}) matches no structure"
            )],
        });
    };
    let Some(table) = table_verdict(k, m_minus, m_plus, model) else {
        return Err(Error::NoAdmissibleStructure {
            attempts: vec![format!(
                "Mach pair ({m_minus}, {m_plus}) matches no Mach-range row for {:?} k",
                KRegime::of(k)
            )],
        });
    };
    if patterns.contains(&table) {
        Ok(StructureType { tag: table, mirrored })
    } else {
        Err(Error::ClassificationConflict { pattern, table })
    }
}
