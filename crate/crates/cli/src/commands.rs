//! The five subcommands as pure functions from a config to a report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use singular_riemann::stationary::{
    branch_mach, downstream_mach, state_ratios, upstream_mach, Branch, CriticalMachNumbers, FlowDirection,
    KRegime, MachInterval,
};
use singular_riemann::{
    admissible_constructions, admissible_sets, critical_machs, residual_report, solve, verify_uniqueness_pair,
    ClassicalWave, Error, GasModel, GasState, SingularSolution, SolveOptions, SourceCoefficients, WaveKind,
};

use crate::config::{CoeffConfig, CurveKind, ProblemConfig};
use crate::error::{error_tag, CliError, CliResult};
use crate::output::{num, Num, Table};

#[derive(Debug, Clone, Serialize)]
pub struct NamedNum {
    pub name: &'static str,
    pub value: Num,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntervalReport {
    pub branch: &'static str,
    pub lo: Num,
    pub hi: Num,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriticalReport {
    pub gamma: f64,
    pub k: Num,
    pub regime: &'static str,
    pub critical: Vec<NamedNum>,
    pub gamma_minus: String,
    pub gamma_plus: String,
    pub gamma_minus_intervals: Vec<IntervalReport>,
    pub gamma_plus_intervals: Vec<IntervalReport>,
}

fn regime_name(k: f64) -> &'static str {
    match KRegime::of(k) {
        KRegime::Positive => "positive",
        KRegime::Zero => "zero",
        KRegime::Negative => "negative",
    }
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Subsonic => "subsonic",
        Branch::Supersonic => "supersonic",
    }
}

fn critical_list(k: f64, model: &GasModel) -> Vec<NamedNum> {
    let named = |names: [&'static str; 3], v: (f64, f64, f64)| {
        vec![
            NamedNum { name: names[0], value: Num(v.0) },
            NamedNum { name: names[1], value: Num(v.1) },
            NamedNum { name: names[2], value: Num(v.2) },
        ]
    };
    match critical_machs(k, model) {
        CriticalMachNumbers::Zero => Vec::new(),
        CriticalMachNumbers::Positive { m1_star, m2_star, m3_star } => {
            named(["M1*", "M2*", "M3*"], (m1_star, m2_star, m3_star))
        }
        CriticalMachNumbers::Negative { m1_dstar, m2_dstar, m3_dstar } => {
            named(["M1**", "M2**", "M3**"], (m1_dstar, m2_dstar, m3_dstar))
        }
    }
}

/// Interval union in set notation; touching intervals are merged.
fn union_string<'a>(list: impl Iterator<Item = &'a MachInterval>) -> String {
    let mut merged: Vec<MachInterval> = Vec::new();
    for i in list {
        match merged.last_mut() {
            Some(last) if last.hi == i.lo && (last.hi_closed || i.lo_closed) => {
                last.hi = i.hi;
                last.hi_closed = i.hi_closed;
            }
            _ => merged.push(*i),
        }
    }
    if merged.is_empty() {
        return String::from("{}");
    }
    merged
        .iter()
        .map(|i| {
            format!(
                "{}{}, {}{}",
                if i.lo_closed { '[' } else { '(' },
                num(i.lo),
                num(i.hi),
                if i.hi_closed { ']' } else { ')' }
            )
        })
        .collect::<Vec<_>>()
        .join(" U ")
}

fn intervals<'a>(list: impl Iterator<Item = &'a MachInterval>) -> Vec<IntervalReport> {
    list.map(|i| IntervalReport {
        branch: branch_name(i.branch),
        lo: Num(i.lo),
        hi: Num(i.hi),
        lo_closed: i.lo_closed,
        hi_closed: i.hi_closed,
    })
    .collect()
}

pub fn critical(cfg: &ProblemConfig) -> CliResult<CriticalReport> {
    let model = cfg.model();
    let k = cfg.coeffs().k();
    let sets = admissible_sets(k, &model);
    Ok(CriticalReport {
        gamma: cfg.gamma,
        k: Num(k),
        regime: regime_name(k),
        critical: critical_list(k, &model),
        gamma_minus: union_string(sets.gamma_minus.iter()),
        gamma_plus: union_string(sets.gamma_plus.iter()),
        gamma_minus_intervals: intervals(sets.gamma_minus.iter()),
        gamma_plus_intervals: intervals(sets.gamma_plus.iter()),
    })
}

pub fn critical_table(r: &CriticalReport) -> Table {
    let mut t = Table::new(&["quantity", "value"]);
    t.push(vec!["gamma".into(), num(r.gamma)]);
    t.push(vec!["k".into(), num(r.k.0)]);
    t.push(vec!["regime".into(), r.regime.into()]);
    for c in &r.critical {
        t.push(vec![c.name.into(), num(c.value.0)]);
    }
    t.push(vec!["gamma_minus".into(), r.gamma_minus.clone()]);
    t.push(vec!["gamma_plus".into(), r.gamma_plus.clone()]);
    t
}

#[derive(Debug, Clone, Serialize)]
pub struct StateRow {
    pub name: String,
    pub rho: Num,
    pub u: Num,
    pub p: Num,
    pub mach: Num,
}

#[derive(Debug, Clone, Serialize)]
pub struct WaveRow {
    pub family: u8,
    pub kind: &'static str,
    pub speed_lo: Num,
    pub speed_hi: Num,
}

#[derive(Debug, Clone, Serialize)]
pub struct BranchRow {
    pub direction: &'static str,
    pub route: &'static str,
    pub structure: String,
    pub m_minus: Num,
    pub m_plus: Num,
    pub residual: Num,
}

#[derive(Debug, Clone, Serialize)]
pub struct StarReport {
    pub p: Num,
    pub u: Num,
}

/// Metadata of one solve.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub structure: String,
    pub mirrored: bool,
    pub route: Option<&'static str>,
    pub k: Num,
    pub regime: &'static str,
    pub m_minus: Option<Num>,
    pub m_plus: Option<Num>,
    pub critical: Vec<NamedNum>,
    pub residual_max: Num,
    pub star: Option<StarReport>,
    pub states: Vec<StateRow>,
    pub waves: Vec<WaveRow>,
    /// Every construction that closed within tolerance.
    pub branches: Vec<BranchRow>,
    /// Present when more than one construction closed.
    pub uniqueness_verified: Option<bool>,
    pub diagnostics: Vec<String>,
}

fn kind_name(k: WaveKind) -> &'static str {
    match k {
        WaveKind::Shock => "shock",
        WaveKind::Rarefaction => "rarefaction",
        WaveKind::Contact => "contact",
    }
}

fn wave_row(w: &ClassicalWave) -> WaveRow {
    use singular_riemann::WaveFamily::*;
    WaveRow {
        family: match w.family {
            Family1 => 1,
            Family2 => 2,
            Family3 => 3,
        },
        kind: kind_name(w.kind),
        speed_lo: Num(w.speed_lo),
        speed_hi: Num(w.speed_hi),
    }
}

/// `(M-, M+)` measured along the flow, so both are nonnegative.
fn stationary_machs(sol: &SingularSolution, model: &GasModel) -> Option<(f64, f64)> {
    sol.stationary.map(|p| {
        let (up, down) = match p.direction {
            FlowDirection::Rightward => (p.left_state, p.right_state),
            FlowDirection::Leftward => (p.right_state, p.left_state),
        };
        (model.mach(&up).abs(), model.mach(&down).abs())
    })
}

fn structure_name(r: &Result<singular_riemann::StructureType, Error>) -> String {
    match r {
        Ok(t) => t.tag.name().to_string(),
        Err(e) => format!("error:{}", error_tag(e)),
    }
}

pub fn solve_report(cfg: &ProblemConfig) -> CliResult<(SolveReport, SingularSolution)> {
    let (left, right) = cfg.states()?;
    let model = cfg.model();
    let coeffs = cfg.coeffs();
    let opts = cfg.options();
    let sol = solve(&left, &right, &coeffs, &model, &opts)?;
    let k = coeffs.k();
    let machs = stationary_machs(&sol, &model);

    let mut branches = Vec::new();
    let mut uniqueness_verified = None;
    if sol.stationary.is_some() {
        let (cands, _) = admissible_constructions(&left, &right, &coeffs, &model, &opts)?;
        for c in cands.iter().filter(|c| c.residual <= opts.residual_tol) {
            let (mm, mp) = stationary_machs(&c.solution, &model).unwrap_or((f64::NAN, f64::NAN));
            branches.push(BranchRow {
                direction: if c.solution.structure.mirrored { "leftward" } else { "rightward" },
                route: c.route.name(),
                structure: structure_name(&c.classification),
                m_minus: Num(mm),
                m_plus: Num(mp),
                residual: Num(c.residual),
            });
        }
        if branches.len() > 1 {
            uniqueness_verified = Some(verify_uniqueness_pair(&left, &right, &coeffs, &model)?);
        }
    }

    let report = SolveReport {
        structure: sol.structure.tag.name().to_string(),
        mirrored: sol.structure.mirrored,
        route: sol.route.map(|r| r.name()),
        k: Num(k),
        regime: regime_name(k),
        m_minus: machs.map(|m| Num(m.0)),
        m_plus: machs.map(|m| Num(m.1)),
        critical: critical_list(k, &model),
        residual_max: Num(residual_report(&sol, &model).max),
        star: sol.classical.as_ref().map(|c| StarReport {
            p: Num(c.star_pressure),
            u: Num(c.star_velocity),
        }),
        states: sol
            .states()
            .into_iter()
            .map(|(name, s)| StateRow {
                name,
                rho: Num(s.rho),
                u: Num(s.u),
                p: Num(s.p),
                mach: Num(model.mach(&s)),
            })
            .collect(),
        waves: sol.waves().iter().filter(|w| !w.degenerate).map(wave_row).collect(),
        branches,
        uniqueness_verified,
        diagnostics: sol.diagnostics.clone(),
    };
    Ok((report, sol))
}

pub fn solve_table(r: &SolveReport) -> Table {
    let mut t = Table::new(&["state", "rho", "u", "p", "mach"]);
    for s in &r.states {
        t.push(vec![s.name.clone(), num(s.rho.0), num(s.u.0), num(s.p.0), num(s.mach.0)]);
    }
    t
}

/// Speeds of every jump in the solution: shocks, contacts and the stationary wave.
fn jump_speeds(sol: &SingularSolution) -> Vec<f64> {
    let mut v: Vec<f64> = sol
        .waves()
        .iter()
        .filter(|w| !w.degenerate && w.kind != WaveKind::Rarefaction)
        .map(|w| w.speed_lo)
        .collect();
    if sol.stationary.is_some() {
        v.push(0.0);
    }
    v.sort_by(f64::total_cmp);
    v
}

/// Uniform nodes, with the two nodes straddling each jump moved to
/// `jump +- h/2` so that the jump appears as a pair of one-sided samples.
/// End nodes stay fixed and a node is never moved twice.
pub fn profile_nodes(lo: f64, hi: f64, count: usize, jumps: &[f64]) -> Vec<f64> {
    let h = (hi - lo) / (count - 1) as f64;
    let mut nodes: Vec<f64> = (0..count).map(|i| lo + h * i as f64).collect();
    nodes[count - 1] = hi;
    let mut moved = vec![false; count];
    for &d in jumps {
        if !(d > lo && d < hi) {
            continue;
        }
        let mut j = (((d - lo) / h).floor() as usize).min(count - 2);
        while j > 0 && nodes[j] >= d {
            j -= 1;
        }
        while j + 2 < count && nodes[j + 1] < d {
            j += 1;
        }
        if j == 0 || j + 1 >= count - 1 || moved[j] || moved[j + 1] {
            continue;
        }
        nodes[j] = d - 0.5 * h;
        nodes[j + 1] = d + 0.5 * h;
        moved[j] = true;
        moved[j + 1] = true;
    }
    nodes
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileRow {
    pub coord: Num,
    pub rho: Num,
    pub u: Num,
    pub p: Num,
    pub mach: Num,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProfileReport {
    pub metadata: SolveReport,
    /// `xi`, or `x` when the grid is given at a fixed time.
    pub coordinate: &'static str,
    pub time: Option<f64>,
    pub rows: Vec<ProfileRow>,
}

pub fn profile(cfg: &ProblemConfig) -> CliResult<ProfileReport> {
    let (metadata, sol) = solve_report(cfg)?;
    let model = cfg.model();
    let g = &cfg.grid;
    let (scale, lo, hi, coordinate) = match g.time {
        Some(t) => (t, g.x_min.unwrap_or_default(), g.x_max.unwrap_or_default(), "x"),
        None => (1.0, g.xi_min, g.xi_max, "xi"),
    };
    let jumps: Vec<f64> = jump_speeds(&sol).into_iter().map(|s| s * scale).collect();
    let rows = profile_nodes(lo, hi, g.count, &jumps)
        .into_iter()
        .map(|c| {
            let s = sol.sample(c / scale, &model);
            ProfileRow {
                coord: Num(c),
                rho: Num(s.rho),
                u: Num(s.u),
                p: Num(s.p),
                mach: Num(model.mach(&s)),
            }
        })
        .collect();
    Ok(ProfileReport {
        metadata,
        coordinate,
        time: g.time,
        rows,
    })
}

pub fn profile_table(r: &ProfileReport) -> Table {
    let mut t = Table::new(&[r.coordinate, "rho", "u", "p", "mach"]);
    for row in &r.rows {
        t.push(vec![num(row.coord.0), num(row.rho.0), num(row.u.0), num(row.p.0), num(row.mach.0)]);
    }
    t
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveRow {
    pub m_minus: Num,
    pub m_plus: Num,
    pub rho_ratio: Num,
    pub u_ratio: Num,
    pub p_ratio: Num,
    pub branch: &'static str,
    /// `ok`, `gap` (no stationary wave), `undefined` (branch formula fails) or
    /// `clipped` (defined but outside the admissible sets).
    pub flag: &'static str,
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
}

fn curve_row(mm: f64, mp: f64, c: &SourceCoefficients, model: &GasModel, branch: Branch, flag: &'static str) -> CurveRow {
    let (r, u, p) = state_ratios(mm, mp, c, model);
    CurveRow {
        m_minus: Num(mm),
        m_plus: Num(mp),
        rho_ratio: Num(r),
        u_ratio: Num(u),
        p_ratio: Num(p),
        branch: branch_name(branch),
        flag,
    }
}

fn gap_row(mm: f64, mp: f64, flag: &'static str) -> CurveRow {
    CurveRow {
        m_minus: Num(mm),
        m_plus: Num(mp),
        rho_ratio: Num(f64::NAN),
        u_ratio: Num(f64::NAN),
        p_ratio: Num(f64::NAN),
        branch: "none",
        flag,
    }
}

pub fn curve(cfg: &ProblemConfig) -> CliResult<Vec<CurveRow>> {
    let model = cfg.model();
    let c = cfg.coeffs();
    let k = c.k();
    let cc = &cfg.curve;
    let mut rows = Vec::new();
    for m in linspace(cc.m_min, cc.m_max, cc.count) {
        match cc.kind {
            CurveKind::Forward => match downstream_mach(m, k, &model) {
                Ok(list) => rows.extend(list.iter().map(|&(b, mp)| curve_row(m, mp, &c, &model, b, "ok"))),
                Err(_) => rows.push(gap_row(m, f64::NAN, "gap")),
            },
            CurveKind::Backward => match upstream_mach(m, k, &model) {
                Ok(list) => rows.extend(list.iter().map(|&(b, mm)| curve_row(mm, m, &c, &model, b, "ok"))),
                Err(_) => rows.push(gap_row(f64::NAN, m, "gap")),
            },
            CurveKind::Branch => {
                for b in [Branch::Subsonic, Branch::Supersonic] {
                    match branch_mach(b, m, k, &model) {
                        Ok(mp) => {
                            let admissible = downstream_mach(m, k, &model)
                                .map(|l| l.iter().any(|&(bb, _)| bb == b))
                                .unwrap_or(false);
                            rows.push(curve_row(m, mp, &c, &model, b, if admissible { "ok" } else { "clipped" }));
                        }
                        Err(_) => {
                            let mut r = gap_row(m, f64::NAN, "undefined");
                            r.branch = branch_name(b);
                            rows.push(r);
                        }
                    }
                }
            }
        }
    }
    Ok(rows)
}

pub fn curve_table(rows: &[CurveRow]) -> Table {
    let mut t = Table::new(&["m_minus", "m_plus", "rho_ratio", "u_ratio", "p_ratio", "branch", "flag"]);
    for r in rows {
        t.push(vec![
            num(r.m_minus.0),
            num(r.m_plus.0),
            num(r.rho_ratio.0),
            num(r.u_ratio.0),
            num(r.p_ratio.0),
            r.branch.into(),
            r.flag.into(),
        ]);
    }
    t
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub index: usize,
    pub set: usize,
    pub ml: Num,
    pub mr: Num,
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
    pub k: Num,
    /// Structure tag, or `error`.
    pub structure: String,
    pub mirrored: Option<bool>,
    pub route: Option<&'static str>,
    pub m_minus: Option<Num>,
    pub m_plus: Option<Num>,
    pub residual: Option<Num>,
    pub error: Option<&'static str>,
}

#[derive(Debug, Clone, Copy)]
struct SweepPoint {
    set: usize,
    ml: f64,
    mr: f64,
    coeffs: CoeffConfig,
}

fn with_mach(base: &GasState, m: f64, model: &GasModel) -> GasState {
    GasState {
        u: m * model.sound_speed(base),
        ..*base
    }
}

fn sweep_point(
    i: usize,
    pt: &SweepPoint,
    base: (GasState, GasState),
    model: &GasModel,
    opts: &SolveOptions,
) -> SweepRow {
    let c = pt.coeffs.coeffs();
    let l = with_mach(&base.0, pt.ml, model);
    let r = with_mach(&base.1, pt.mr, model);
    let mut row = SweepRow {
        index: i,
        set: pt.set,
        ml: Num(pt.ml),
        mr: Num(pt.mr),
        k1: c.k1,
        k2: c.k2,
        k3: c.k3,
        k: Num(c.k()),
        structure: String::from("error"),
        mirrored: None,
        route: None,
        m_minus: None,
        m_plus: None,
        residual: None,
        error: None,
    };
    match solve(&l, &r, &c, model, opts) {
        Ok(sol) => {
            row.structure = sol.structure.tag.name().to_string();
            row.mirrored = Some(sol.structure.mirrored);
            row.route = sol.route.map(|r| r.name());
            if let Some((mm, mp)) = stationary_machs(&sol, model) {
                row.m_minus = Some(Num(mm));
                row.m_plus = Some(Num(mp));
            }
            row.residual = Some(Num(residual_report(&sol, model).max));
        }
        Err(e) => row.error = Some(error_tag(&e)),
    }
    row
}

/// Structure atlas. Points are evaluated in parallel and returned in grid order.
pub fn sweep(cfg: &ProblemConfig, seed: u64) -> CliResult<Vec<SweepRow>> {
    let base = cfg.states()?;
    let model = cfg.model();
    let opts = cfg.options();
    let w = &cfg.sweep;
    let mut points = Vec::new();
    for (set, coeffs) in cfg.sweep_coeffs().into_iter().enumerate() {
        if w.samples > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(set as u64));
            for _ in 0..w.samples {
                let ml = rng.gen_range(w.ml_min..=w.ml_max);
                let mr = rng.gen_range(w.mr_min..=w.mr_max);
                points.push(SweepPoint { set, ml, mr, coeffs });
            }
        } else {
            for ml in linspace(w.ml_min, w.ml_max, w.ml_count) {
                for mr in linspace(w.mr_min, w.mr_max, w.mr_count) {
                    points.push(SweepPoint { set, ml, mr, coeffs });
                }
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(w.workers)
        .build()
        .map_err(|e| CliError::validation("sweep.workers", e.to_string()))?;
    Ok(pool.install(|| {
        points
            .par_iter()
            .enumerate()
            .map(|(i, pt)| sweep_point(i, pt, base, &model, &opts))
            .collect()
    }))
}

pub fn sweep_table(rows: &[SweepRow]) -> Table {
    let opt = |v: Option<Num>| v.map(|n| num(n.0)).unwrap_or_default();
    let mut t = Table::new(&[
        "index", "set", "ml", "mr", "k1", "k2", "k3", "k", "structure", "mirrored", "route", "m_minus", "m_plus",
        "residual", "error",
    ]);
    for r in rows {
        t.push(vec![
            r.index.to_string(),
            r.set.to_string(),
            num(r.ml.0),
            num(r.mr.0),
            num(r.k1),
            num(r.k2),
            num(r.k3),
            num(r.k.0),
            r.structure.clone(),
            r.mirrored.map(|m| m.to_string()).unwrap_or_default(),
            r.route.unwrap_or_default().into(),
            opt(r.m_minus),
            opt(r.m_plus),
            opt(r.residual),
            r.error.unwrap_or_default().into(),
        ]);
    }
    t
}
