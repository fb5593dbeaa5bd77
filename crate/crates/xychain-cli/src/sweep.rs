//! Sweep engine: runs the chain pipeline (or the brute-force solver) over a
//! coupling-constant grid and a varied impurity parameter, and renders the
//! results as deterministic CSV.

use std::fmt;
use std::io::{self, Write};

use xychain::{
    concurrence_general, ChainSolution, ChainSpec, Error as ChainError, PairCorrelators,
    ORACLE_GAP_FLOOR,
};

/// Which impurity parameter the sweep varies between curves.
///
/// `Zeta*` act on the coupling profile, `Xi*` on the field profile;
/// `*2` moves only the second impurity strength while `*All` moves both.
/// `Epsilon` varies the shared Gaussian width of both profiles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VaryParam {
    Zeta2,
    Xi2,
    ZetaAll,
    XiAll,
    Epsilon,
    None,
}

impl VaryParam {
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "zeta2" => Self::Zeta2,
            "xi2" => Self::Xi2,
            "zeta_all" => Self::ZetaAll,
            "xi_all" => Self::XiAll,
            "epsilon" => Self::Epsilon,
            "none" => Self::None,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Zeta2 => "zeta2",
            Self::Xi2 => "xi2",
            Self::ZetaAll => "zeta_all",
            Self::XiAll => "xi_all",
            Self::Epsilon => "epsilon",
            Self::None => "none",
        }
    }
}

/// A full sweep description: base chain, coupling grid, varied parameter and
/// the site pairs to evaluate.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Chain with placeholder `lambda`; the grid overrides it per row.
    pub base: ChainSpec,
    /// Strictly increasing list of reduced couplings.
    pub lambda_grid: Vec<f64>,
    pub vary: VaryParam,
    /// One curve per value; must be empty exactly when `vary` is `None`.
    pub vary_values: Vec<f64>,
    /// 1-based site pairs `(l, m)` with `l < m`.
    pub pairs: Vec<(usize, usize)>,
}

/// One output record: a single pair at a single grid point of one curve.
#[derive(Clone, Debug)]
pub struct SweepRow {
    pub lambda: f64,
    /// `None` for an unvaried sweep; rendered as an empty CSV field.
    pub vary_value: Option<f64>,
    pub l: usize,
    pub m: usize,
    pub concurrence: f64,
    pub sxx: f64,
    pub syy: f64,
    pub szz: f64,
    pub mz_l: f64,
    pub mz_m: f64,
    pub degenerate: bool,
}

#[derive(Debug)]
pub enum SweepError {
    /// Structural problem with the sweep description itself.
    Config(String),
    /// The physics pipeline failed at an identified grid point.
    Pipeline {
        lambda: f64,
        vary_value: Option<f64>,
        source: ChainError,
    },
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Config(msg) => write!(f, "invalid sweep configuration: {msg}"),
            Self::Pipeline {
                lambda,
                vary_value,
                source,
            } => {
                write!(f, "pipeline failed at lambda = {lambda}")?;
                if let Some(v) = vary_value {
                    write!(f, ", vary value = {v}")?;
                }
                write!(f, ": {source}")
            }
        }
    }
}

impl std::error::Error for SweepError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Self::Config(_) => None,
            Self::Pipeline { source, .. } => Some(source),
        }
    }
}

/// Parse a `start:stop:step` grid description into explicit points
/// `start + i * step` (never accumulated, so reruns are bit-identical).
pub fn parse_lambda_grid(text: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected start:stop:step, got {text:?}"));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {p:?} in grid: {e}"))
        })
        .collect::<Result<_, _>>()?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if !start.is_finite() || !stop.is_finite() || !step.is_finite() {
        return Err(format!("non-finite grid bound in {text:?}"));
    }
    if start < 0.0 {
        return Err(format!("grid must start at lambda >= 0, got {start}"));
    }
    if step <= 0.0 {
        return Err(format!("grid step must be positive, got {step}"));
    }
    if stop < start {
        return Err(format!("grid stop {stop} below start {start}"));
    }
    let mut grid = Vec::new();
    let mut i = 0usize;
    loop {
        let x = start + (i as f64) * step;
        // Absorb representation error in the last point without overshooting.
        if x > stop + step * 1e-9 {
            break;
        }
        grid.push(x);
        i += 1;
    }
    Ok(grid)
}

/// Apply one vary value to a copy of the base chain.
pub fn apply_vary(base: &ChainSpec, vary: VaryParam, value: Option<f64>) -> ChainSpec {
    let mut spec = base.clone();
    let v = match value {
        Some(v) => v,
        None => return spec,
    };
    match vary {
        VaryParam::Zeta2 => spec.alpha.strength_2 = v,
        VaryParam::Xi2 => spec.beta.strength_2 = v,
        VaryParam::ZetaAll => {
            spec.alpha.strength_1 = v;
            spec.alpha.strength_2 = v;
        }
        VaryParam::XiAll => {
            spec.beta.strength_1 = v;
            spec.beta.strength_2 = v;
        }
        VaryParam::Epsilon => {
            spec.alpha.width = v;
            spec.beta.width = v;
        }
        VaryParam::None => {}
    }
    spec
}

fn validate_config(config: &SweepConfig) -> Result<(), SweepError> {
    if config.lambda_grid.is_empty() {
        return Err(SweepError::Config("empty lambda grid".into()));
    }
    if !config
        .lambda_grid
        .windows(2)
        .all(|w| w[0] < w[1] && w[0].is_finite() && w[1].is_finite())
        || !config.lambda_grid[0].is_finite()
    {
        return Err(SweepError::Config(
            "lambda grid must be finite and strictly increasing".into(),
        ));
    }
    if config.pairs.is_empty() {
        return Err(SweepError::Config("no site pairs requested".into()));
    }
    let n = config.base.n_sites;
    for &(l, m) in &config.pairs {
        if !(1 <= l && l < m && m <= n) {
            return Err(SweepError::Config(format!(
                "pair ({l}, {m}) invalid for a chain of {n} sites"
            )));
        }
    }
    match (config.vary, config.vary_values.is_empty()) {
        (VaryParam::None, false) => Err(SweepError::Config(
            "vary values given but vary parameter is none".into(),
        )),
        (VaryParam::None, true) => Ok(()),
        (other, true) => Err(SweepError::Config(format!(
            "vary parameter {} given without values",
            other.name()
        ))),
        (_, false) => Ok(()),
    }
}

/// The vary passes of a config: a single unvaried pass, or one per value.
fn passes(config: &SweepConfig) -> Vec<Option<f64>> {
    if config.vary == VaryParam::None {
        vec![None]
    } else {
        config.vary_values.iter().copied().map(Some).collect()
    }
}

fn pipeline_err(
    lambda: f64,
    vary_value: Option<f64>,
) -> impl Fn(ChainError) -> SweepError {
    move |source| SweepError::Pipeline {
        lambda,
        vary_value,
        source,
    }
}

/// Run the free-fermion pipeline over the whole sweep.
///
/// Rows come out in deterministic order: one block per vary value (in the
/// given list order), scanning the grid upward, pairs in the given order.
/// Each chain is solved once per grid point and shared by all pairs.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>, SweepError> {
    validate_config(config)?;
    let mut rows =
        Vec::with_capacity(passes(config).len() * config.lambda_grid.len() * config.pairs.len());
    for value in passes(config) {
        let mut spec = apply_vary(&config.base, config.vary, value);
        for &lambda in &config.lambda_grid {
            spec.lambda = lambda;
            let solution =
                ChainSolution::solve(&spec).map_err(pipeline_err(lambda, value))?;
            for &(l, m) in &config.pairs {
                let pe = solution.pair(l, m).map_err(pipeline_err(lambda, value))?;
                rows.push(SweepRow {
                    lambda,
                    vary_value: value,
                    l,
                    m,
                    concurrence: pe.concurrence.c,
                    sxx: pe.correlators.sxx,
                    syy: pe.correlators.syy,
                    szz: pe.correlators.szz,
                    mz_l: pe.correlators.mz_l,
                    mz_m: pe.correlators.mz_m,
                    degenerate: pe.concurrence.degenerate_flag,
                });
            }
        }
    }
    Ok(rows)
}

/// Run the same sweep through the brute-force dense solver instead.
///
/// Same row order and schema as [`run_sweep`]. Refuses chains above the
/// brute-force size cap and grid points with a degenerate ground state,
/// identifying the offending point.
pub fn run_oracle_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>, SweepError> {
    validate_config(config)?;
    let mut rows =
        Vec::with_capacity(passes(config).len() * config.lambda_grid.len() * config.pairs.len());
    for value in passes(config) {
        let mut spec = apply_vary(&config.base, config.vary, value);
        for &lambda in &config.lambda_grid {
            spec.lambda = lambda;
            let err = pipeline_err(lambda, value);
            let h = xychain::dense_hamiltonian(&spec).map_err(&err)?;
            let gs = xychain::ground_state_dense(&h).map_err(&err)?;
            if gs.gap < ORACLE_GAP_FLOOR {
                return Err(err(ChainError::DegenerateGroundState { gap: gs.gap }));
            }
            for &(l, m) in &config.pairs {
                let correlators: PairCorrelators = gs.pair_correlators(l, m).map_err(&err)?;
                let rho = gs.reduced_density_matrix(l, m).map_err(&err)?;
                let conc = concurrence_general(&rho).map_err(&err)?;
                rows.push(SweepRow {
                    lambda,
                    vary_value: value,
                    l,
                    m,
                    concurrence: conc.c,
                    sxx: correlators.sxx,
                    syy: correlators.syy,
                    szz: correlators.szz,
                    mz_l: correlators.mz_l,
                    mz_m: correlators.mz_m,
                    degenerate: false,
                });
            }
        }
    }
    Ok(rows)
}

/// Render a value with 12 significant digits, canonicalising `-0.0` so that
/// equal values always produce equal bytes.
pub fn format_value(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

pub const CSV_HEADER: &str = "lambda,vary_value,l,m,concurrence,sxx,syy,szz,mz_l,mz_m,degenerate";

/// Render rows as a newline-terminated CSV document.
pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 + rows.len() * 128);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let vary = row
            .vary_value
            .map(format_value)
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            format_value(row.lambda),
            vary,
            row.l,
            row.m,
            format_value(row.concurrence),
            format_value(row.sxx),
            format_value(row.syy),
            format_value(row.szz),
            format_value(row.mz_l),
            format_value(row.mz_m),
            row.degenerate,
        ));
    }
    out
}

/// Write the profile arrays of a chain as CSV `index,alpha,beta,J,h`.
///
/// One row per site. The coupling columns (`alpha`, `J`) live on bonds; on an
/// open chain the last site has no outgoing bond and those fields are empty,
/// while on a ring the last row carries the wrap-around bond.
pub fn dump_profile_csv(spec: &ChainSpec) -> Result<String, ChainError> {
    spec.validate()?;
    let alpha = spec.alpha_profile()?;
    let beta = spec.beta_profile()?;
    let couplings = spec.couplings()?;
    let fields = spec.fields()?;
    let mut out = String::from("index,alpha,beta,J,h\n");
    for i in 0..spec.n_sites {
        let (a, j) = if i < couplings.len() {
            (format_value(alpha[i]), format_value(couplings[i]))
        } else {
            (String::new(), String::new())
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            i + 1,
            a,
            format_value(beta[i]),
            j,
            format_value(fields[i]),
        ));
    }
    Ok(out)
}

/// Write a rendered document to a writer (file or stdout).
pub fn write_document<W: Write>(doc: &str, w: &mut W) -> io::Result<()> {
    w.write_all(doc.as_bytes())?;
    w.flush()
}

/// Default site pairs for a chain: the two central nearest-neighbour bonds
/// `(n/2 - 1, n/2)` and `(n/2, n/2 + 1)`, keeping only those in range.
pub fn default_pairs(n_sites: usize) -> Vec<(usize, usize)> {
    let c = n_sites / 2;
    let mut pairs = Vec::new();
    if c >= 2 {
        pairs.push((c - 1, c));
    }
    if c >= 1 && c + 1 <= n_sites {
        pairs.push((c, c + 1));
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use xychain::{Boundary, ProfileParams};

    fn tiny_config() -> SweepConfig {
        SweepConfig {
            base: ChainSpec::pure(6, 1.0, 0.0, Boundary::Open),
            lambda_grid: vec![0.0, 0.5, 1.0],
            vary: VaryParam::None,
            vary_values: vec![],
            pairs: vec![(3, 4), (1, 2)],
        }
    }

    #[test]
    fn grid_parsing_round_trips() {
        let grid = parse_lambda_grid("0:4:0.02").unwrap();
        assert_eq!(grid.len(), 201);
        assert_eq!(grid[0], 0.0);
        assert!((grid[200] - 4.0).abs() < 1e-12);
        assert_eq!(parse_lambda_grid("1:1:0.1").unwrap(), vec![1.0]);
        let sparse = parse_lambda_grid("0.1:3:0.1").unwrap();
        assert_eq!(sparse.len(), 30);
        assert!((sparse[29] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn grid_parsing_rejects_malformed_input() {
        for bad in [
            "0:4", "0:4:0.02:9", "a:4:1", "0:4:0", "0:4:-1", "2:1:0.5", "-1:4:0.5",
            "0:inf:1",
        ] {
            assert!(parse_lambda_grid(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn vary_application_targets_the_right_knobs() {
        let mut base = ChainSpec::pure(10, 1.0, 1.0, Boundary::Open);
        base.alpha = ProfileParams::double_gaussian(0.5, 0.3);
        base.beta = ProfileParams::gaussian(1.0);

        let s = apply_vary(&base, VaryParam::Zeta2, Some(0.9));
        assert_eq!(s.alpha.strength_1, 0.5);
        assert_eq!(s.alpha.strength_2, 0.9);

        let s = apply_vary(&base, VaryParam::ZetaAll, Some(0.9));
        assert_eq!(s.alpha.strength_1, 0.9);
        assert_eq!(s.alpha.strength_2, 0.9);
        assert_eq!(s.beta.strength_1, 1.0);

        let s = apply_vary(&base, VaryParam::Xi2, Some(2.0));
        assert_eq!(s.beta.strength_2, 2.0);
        assert_eq!(s.alpha.strength_2, 0.3);

        let s = apply_vary(&base, VaryParam::XiAll, Some(2.0));
        assert_eq!(s.beta.strength_1, 2.0);
        assert_eq!(s.beta.strength_2, 2.0);

        let s = apply_vary(&base, VaryParam::Epsilon, Some(7.5));
        assert_eq!(s.alpha.width, 7.5);
        assert_eq!(s.beta.width, 7.5);

        let s = apply_vary(&base, VaryParam::None, None);
        assert_eq!(s.alpha.strength_2, 0.3);
    }

    #[test]
    fn decoupled_grid_point_is_polarized() {
        // lambda = 0 turns every coupling off: no entanglement, full moments.
        let rows = run_sweep(&tiny_config()).unwrap();
        assert_eq!(rows.len(), 6);
        let row = &rows[0];
        assert_eq!(row.lambda, 0.0);
        assert_eq!(row.vary_value, None);
        assert_eq!((row.l, row.m), (3, 4));
        assert_eq!(row.concurrence, 0.0);
        assert!((row.mz_l - 0.5).abs() < 1e-12);
        assert!((row.mz_m - 0.5).abs() < 1e-12);
    }

    #[test]
    fn row_order_is_vary_then_lambda_then_pair() {
        let mut config = tiny_config();
        config.vary = VaryParam::Zeta2;
        config.vary_values = vec![0.4, 0.1];
        config.base.alpha = ProfileParams::double_gaussian(0.5, 0.0);
        let rows = run_sweep(&config).unwrap();
        assert_eq!(rows.len(), 2 * 3 * 2);
        let key: Vec<(Option<f64>, f64, usize)> = rows
            .iter()
            .map(|r| (r.vary_value, r.lambda, r.l))
            .collect();
        // Vary blocks in the given (unsorted) list order; grid ascending
        // inside; pairs in the given order innermost.
        assert_eq!(key[0], (Some(0.4), 0.0, 3));
        assert_eq!(key[1], (Some(0.4), 0.0, 1));
        assert_eq!(key[2], (Some(0.4), 0.5, 3));
        assert_eq!(key[6], (Some(0.1), 0.0, 3));
        assert_eq!(key[11], (Some(0.1), 1.0, 1));
    }

    #[test]
    fn permuting_vary_values_permutes_blocks_bit_identically() {
        let mut config = tiny_config();
        config.vary = VaryParam::Zeta2;
        config.vary_values = vec![0.1, 0.4];
        config.base.alpha = ProfileParams::double_gaussian(0.5, 0.0);
        let forward = run_sweep(&config).unwrap();
        config.vary_values = vec![0.4, 0.1];
        let backward = run_sweep(&config).unwrap();
        let block = 3 * 2;
        for i in 0..block {
            let a = &forward[i];
            let b = &backward[block + i];
            assert_eq!(a.lambda.to_bits(), b.lambda.to_bits());
            assert_eq!(a.concurrence.to_bits(), b.concurrence.to_bits());
            assert_eq!(a.sxx.to_bits(), b.sxx.to_bits());
            assert_eq!(a.szz.to_bits(), b.szz.to_bits());
        }
    }

    #[test]
    fn pipeline_errors_carry_grid_context() {
        let mut config = tiny_config();
        config.vary = VaryParam::ZetaAll;
        config.vary_values = vec![-3.0];
        config.base.alpha = ProfileParams::gaussian(0.0);
        let err = run_sweep(&config).unwrap_err();
        match err {
            SweepError::Pipeline {
                lambda,
                vary_value,
                ..
            } => {
                assert_eq!(lambda, 0.0);
                assert_eq!(vary_value, Some(-3.0));
            }
            other => panic!("expected pipeline error, got {other:?}"),
        }
        let message = err.to_string();
        assert!(message.contains("lambda = 0"), "{message}");
        assert!(message.contains("vary value = -3"), "{message}");
    }

    #[test]
    fn config_validation_catches_structural_mistakes() {
        let mut c = tiny_config();
        c.lambda_grid.clear();
        assert!(matches!(run_sweep(&c), Err(SweepError::Config(_))));

        let mut c = tiny_config();
        c.lambda_grid = vec![0.5, 0.2];
        assert!(matches!(run_sweep(&c), Err(SweepError::Config(_))));

        let mut c = tiny_config();
        c.pairs = vec![(4, 4)];
        assert!(matches!(run_sweep(&c), Err(SweepError::Config(_))));

        let mut c = tiny_config();
        c.pairs = vec![(1, 7)];
        assert!(matches!(run_sweep(&c), Err(SweepError::Config(_))));

        let mut c = tiny_config();
        c.vary_values = vec![0.1];
        assert!(matches!(run_sweep(&c), Err(SweepError::Config(_))));

        let mut c = tiny_config();
        c.vary = VaryParam::Zeta2;
        assert!(matches!(run_sweep(&c), Err(SweepError::Config(_))));
    }

    #[test]
    fn value_formatting_is_canonical() {
        assert_eq!(format_value(0.25), "2.50000000000e-1");
        assert_eq!(format_value(0.0), "0.00000000000e0");
        assert_eq!(format_value(-0.0), "0.00000000000e0");
        assert_eq!(format_value(4.0), "4.00000000000e0");
        assert_eq!(format_value(-1.5e-12), "-1.50000000000e-12");
    }

    #[test]
    fn csv_document_shape() {
        let rows = run_sweep(&tiny_config()).unwrap();
        let doc = rows_to_csv(&rows);
        let lines: Vec<&str> = doc.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[0], CSV_HEADER);
        // Unvaried sweep: empty vary_value field.
        assert!(lines[1].starts_with("0.00000000000e0,,3,4,"));
        assert!(lines[1].ends_with(",false"));
        assert!(doc.ends_with('\n'));
    }

    #[test]
    fn csv_is_byte_identical_across_reruns() {
        let mut config = tiny_config();
        config.base.alpha = ProfileParams::double_gaussian(0.5, 0.3);
        config.base.beta = ProfileParams::gaussian(1.0);
        let a = rows_to_csv(&run_sweep(&config).unwrap());
        let b = rows_to_csv(&run_sweep(&config).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn oracle_sweep_agrees_with_pipeline_on_a_small_chain() {
        let config = SweepConfig {
            base: ChainSpec::pure(6, 1.0, 0.0, Boundary::Open),
            lambda_grid: vec![0.3, 0.9],
            vary: VaryParam::None,
            vary_values: vec![],
            pairs: vec![(1, 2), (3, 4)],
        };
        let fast = run_sweep(&config).unwrap();
        let slow = run_oracle_sweep(&config).unwrap();
        assert_eq!(fast.len(), slow.len());
        for (a, b) in fast.iter().zip(&slow) {
            assert_eq!(a.lambda, b.lambda);
            assert_eq!((a.l, a.m), (b.l, b.m));
            assert!((a.concurrence - b.concurrence).abs() < 1e-8);
            assert!((a.sxx - b.sxx).abs() < 1e-8);
            assert!((a.syy - b.syy).abs() < 1e-8);
            assert!((a.szz - b.szz).abs() < 1e-8);
            assert!((a.mz_l - b.mz_l).abs() < 1e-8);
            assert!((a.mz_m - b.mz_m).abs() < 1e-8);
        }
    }

    #[test]
    fn oracle_sweep_refuses_oversized_chains() {
        let config = SweepConfig {
            base: ChainSpec::pure(15, 1.0, 0.0, Boundary::Open),
            lambda_grid: vec![0.5],
            vary: VaryParam::None,
            vary_values: vec![],
            pairs: vec![(1, 2)],
        };
        let err = run_oracle_sweep(&config).unwrap_err();
        assert!(err.to_string().contains("15"), "{err}");
    }

    #[test]
    fn profile_dump_layout() {
        let mut spec = ChainSpec::pure(5, 1.0, 1.0, Boundary::Open);
        spec.beta = ProfileParams::gaussian(1.0);
        spec.beta.width = 10.0;
        let doc = dump_profile_csv(&spec).unwrap();
        let lines: Vec<&str> = doc.lines().collect();
        assert_eq!(lines[0], "index,alpha,beta,J,h");
        assert_eq!(lines.len(), 6);
        // Center (n + 1) / 2 = 3 carries the full field bump: h = 1 + 1 = 2.
        let center: Vec<&str> = lines[3].split(',').collect();
        assert_eq!(center[0], "3");
        assert_eq!(center[2], "1.00000000000e0");
        assert_eq!(center[4], "2.00000000000e0");
        // Open chain: site 5 has no outgoing bond.
        let last: Vec<&str> = lines[5].split(',').collect();
        assert_eq!(last[0], "5");
        assert_eq!(last[1], "");
        assert_eq!(last[3], "");
        assert_ne!(last[4], "");

        let ring = ChainSpec::pure(5, 1.0, 1.0, Boundary::Periodic);
        let doc = dump_profile_csv(&ring).unwrap();
        let last: Vec<&str> = doc.lines().last().unwrap().split(',').collect();
        assert_ne!(last[1], "");
        assert_ne!(last[3], "");
    }

    #[test]
    fn default_pairs_center_the_chain() {
        assert_eq!(default_pairs(101), vec![(49, 50), (50, 51)]);
        assert_eq!(default_pairs(4), vec![(1, 2), (2, 3)]);
        assert_eq!(default_pairs(3), vec![(1, 2)]);
        assert_eq!(default_pairs(2), vec![(1, 2)]);
    }
}
